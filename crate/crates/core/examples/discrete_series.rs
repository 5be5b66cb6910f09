//! The discrete-series classes of F4 with φ1 noncompact: Harish-Chandra
//! order, λ = δ_g, Blattner parameter and Borel-de Siebenthal type.

use aqclass::classify::{classify, format_rational_vector, RunOptions};
use aqclass::rootsys::CartanMatrix;

fn main() -> aqclass::Result<()> {
    let report = classify("F4", CartanMatrix::type_f4(), &[0], &RunOptions::default())?;
    for row in report.rows.iter().filter(|r| r.discrete_series) {
        let d = row.ds_data.as_ref().expect("discrete series data");
        println!(
            "{:>3}: system {:2}  λ = {:<24} Λ = {:<28} {:?}",
            row.label.unwrap_or("-"),
            d.system.unwrap_or(0),
            format_rational_vector(&d.lambda),
            d.blattner.to_string(),
            d.bds
        );
    }
    Ok(())
}
