//! Runs the full F4 pipeline and prints each class with its Poincaré polynomial,
//! followed by the cross-check outcomes.

use std::time::Instant;

use aqclass::classify::{classify, RunOptions};
use aqclass::rootsys::CartanMatrix;

fn main() -> aqclass::Result<()> {
    let start = Instant::now();
    let report = classify("F4", CartanMatrix::type_f4(), &[0], &RunOptions::default())?;
    let elapsed = start.elapsed();
    for row in &report.rows {
        println!(
            "{:>3}  R={:2}  {:<30} {}",
            row.label.unwrap_or("-"),
            row.class.r,
            row.levi.type_label,
            row.poincare.factored()
        );
    }
    println!(
        "\n{} classes, {} discrete series, {} Borel-de Siebenthal ({elapsed:.2?})",
        report.counts.total, report.counts.discrete_series, report.counts.bds
    );
    for c in &report.cross_checks {
        println!("  {:?} {}: {}", c.status, c.name, c.detail);
    }
    Ok(())
}
