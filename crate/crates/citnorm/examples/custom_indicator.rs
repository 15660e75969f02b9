//! Plugs a user-defined scoring rule into the axiom machinery: a
//! "showcase" indicator that reports only the best normalized score in
//! the set, then a bounded search for where it breaks.

use citnorm::{
    check_homogeneous, search_counterexample, ConsistencyKind, IndicatorFn, Publication,
    PublicationSet, Rational, SearchBounds,
};

fn main() -> citnorm::Result<()> {
    let showcase = IndicatorFn::custom("showcase", |set: &PublicationSet| {
        set.iter()
            .map(Publication::score)
            .max()
            .expect("publication sets are never empty")
    });

    // A single star paper dominates everything else in the set.
    let set = PublicationSet::new(vec![
        Publication::new(30, Rational::from_integer(2))?,
        Publication::new(1, Rational::from_integer(2))?,
        Publication::new(0, Rational::from_integer(2))?,
    ])?;
    println!("showcase({set}) = {}", showcase.evaluate(&set));

    // It is not an average: on a homogeneous set it reports the best
    // paper, not the mean.
    println!(
        "matches mean-over-expected on that homogeneous set: {}",
        check_homogeneous(&showcase, &set)?
    );

    // And it is not consistent either: once the newcomer outshines both
    // groups, a strict ranking collapses to a tie.
    let bounds = SearchBounds::new(6, 6, [1], 2)?;
    match search_counterexample(&showcase, &bounds, ConsistencyKind::Average) {
        Some(witness) => {
            println!();
            println!("first ranking violation within bounds:");
            println!("{witness}");
        }
        None => println!("no counterexample within bounds"),
    }
    Ok(())
}
