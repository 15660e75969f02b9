//! Shows that the ratio of averages is itself an average of the
//! per-publication scores, just with weights proportional to each
//! publication's expected value instead of uniform ones.

use citnorm::{cpp_fcsm, cpp_fcsm_weights, mncs, Publication, PublicationSet, Rational};

fn main() -> citnorm::Result<()> {
    let set = PublicationSet::new(vec![
        Publication::new(10, Rational::from_integer(10))?,
        Publication::new(40, Rational::from_integer(20))?,
    ])?;

    let weights = cpp_fcsm_weights(&set)?;
    let n = Rational::from_integer(set.len() as u64);

    println!("publication   score   weight");
    for (publication, weight) in set.iter().zip(&weights) {
        println!(
            "{:<13} {:<7} {weight}",
            publication.to_string(),
            publication.score().to_string()
        );
    }

    // Weights sum to the set size, so dividing the weighted score sum by
    // n reproduces cpp/fcsm exactly.
    let weighted: Rational = weights
        .iter()
        .zip(set.iter())
        .map(|(weight, publication)| weight * &publication.score())
        .sum();
    println!();
    println!("weight sum        = {} (set size {})", weights.iter().sum::<Rational>(), set.len());
    println!("weighted average  = {}", &weighted / &n);
    println!("cpp/fcsm          = {}", cpp_fcsm(&set));
    assert_eq!(&weighted / &n, cpp_fcsm(&set));

    // mncs is the same construction with every weight forced to 1, which
    // is why the two only agree when expected values are uniform.
    println!("uniform average   = {} (mncs)", mncs(&set));
    Ok(())
}
