//! Searches a bounded publication grid for consistency violations of all
//! four builtin indicators and prints the first witness found for each,
//! in a fixed deterministic order.

use citnorm::{search_counterexample, ConsistencyKind, IndicatorFn, IndicatorKind, SearchBounds};

fn main() -> citnorm::Result<()> {
    let bounds = SearchBounds::default();
    println!(
        "grid: citations 0..={}, expected values with numerator 0..={} over denominators {:?}, sets of up to {} publications",
        bounds.max_cites(),
        bounds.max_expected_numerator(),
        bounds.expected_denominators().collect::<Vec<_>>(),
        bounds.max_set_size()
    );

    // Total consistency ranks sets of any sizes; average consistency
    // only compares equal-size sets, which is the natural reading for
    // per-publication averages.
    let checks = [
        (IndicatorKind::CppFcsm, ConsistencyKind::Average),
        (IndicatorKind::Mncs, ConsistencyKind::Average),
        (IndicatorKind::Tncs, ConsistencyKind::Total),
        (IndicatorKind::BruteForce, ConsistencyKind::Total),
    ];
    for (kind, consistency) in checks {
        let rule = IndicatorFn::builtin(kind);
        println!();
        println!("{} ({consistency} consistency):", rule.name());
        match search_counterexample(&rule, &bounds, consistency) {
            Some(witness) => println!("{witness}"),
            None => println!("no counterexample within bounds"),
        }
    }
    Ok(())
}
