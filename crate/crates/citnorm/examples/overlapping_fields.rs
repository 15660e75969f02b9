//! Derives fractional-counting baselines for a corpus whose records can
//! sit in several fields at once, then contrasts the arithmetic and
//! harmonic ways of averaging those baselines into one expected value.

use citnorm::{
    attach_expected, cpp_fcsm, derive_baselines, expected_arithmetic, expected_harmonic, mncs,
    AveragingMode, Corpus, CorpusRecord, FieldId,
};

fn main() -> citnorm::Result<()> {
    let field = |label: &str| FieldId::new(label);
    let corpus = Corpus::new(vec![
        CorpusRecord::new("p1", 2, [field("X")?])?,
        CorpusRecord::new("p2", 3, [field("X")?])?,
        CorpusRecord::new("p3", 8, [field("Y")?])?,
        CorpusRecord::new("p4", 6, [field("Z")?])?,
        // p5 belongs to two fields; it counts half toward each baseline.
        CorpusRecord::new("p5", 5, [field("X")?, field("Y")?])?,
    ])?;

    let baselines = derive_baselines(&corpus);
    println!("field baselines (fractional counting)");
    for (field, baseline) in baselines.iter() {
        println!("  {field}: {baseline}");
    }

    let p5 = corpus.record("p5").unwrap();
    println!();
    println!("expected value for p5 (fields X and Y)");
    println!("  arithmetic mean of baselines: {}", expected_arithmetic(p5, &baselines)?);
    println!("  harmonic mean of baselines:   {}", expected_harmonic(p5, &baselines)?);

    // The averaging mode decides which world-average identity holds
    // exactly: harmonic pins the average of ratios at 1, arithmetic pins
    // the ratio of averages at 1.
    println!();
    for mode in [AveragingMode::Arithmetic, AveragingMode::Harmonic] {
        let world = attach_expected(&corpus, mode)?;
        println!(
            "{mode} averaging: world mncs = {}, world cpp/fcsm = {}",
            mncs(&world),
            cpp_fcsm(&world)
        );
    }
    Ok(())
}
