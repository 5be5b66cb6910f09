//! Class counts for every noncompact simple root of some small algebras.

use aqclass::classify::{classify, RunOptions};
use aqclass::rootsys::CartanMatrix;

fn main() -> aqclass::Result<()> {
    for name in ["A1", "A2", "A3", "B2", "B3", "C3", "G2", "D4"] {
        let cartan = CartanMatrix::named(name)?;
        for nu in 0..cartan.rank() {
            let report = classify(name, cartan.clone(), &[nu], &RunOptions::default())?;
            println!(
                "{name} φ{}: {:3} classes, {:2} discrete series, {} BdS, {} positive systems, {}, checks {}",
                nu + 1,
                report.counts.total,
                report.counts.discrete_series,
                report.counts.bds,
                report.positive_systems.len(),
                if report.hermitian { "Hermitian" } else { "non-Hermitian" },
                if report.all_checks_pass() { "pass" } else { "FAIL" }
            );
        }
    }
    Ok(())
}
