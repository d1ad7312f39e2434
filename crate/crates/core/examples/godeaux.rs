//! Eigenspace table on the generators of W and the sections of type
//! (1+, 1+, 1-, 2-) cutting out the double cover of a Godeaux surface.

use hyperell::algebra::GaussianRational;
use hyperell::involution::{godeaux_assembly, EigenspaceTable, GodeauxChoices};

fn main() -> hyperell::Result<()> {
    let q = |s: &str| s.parse::<GaussianRational>().unwrap();
    for row in EigenspaceTable::standard().rows {
        println!("degree {}: + {:?}  - {:?}", row.degree, row.invariant, row.anti_invariant);
    }
    let report = godeaux_assembly(&GodeauxChoices::default(), &q("3"), &[q("1"), q("2"), q("-1"), q("1/3")])?;
    for s in &report.sections {
        println!("section of degree {} and sign {}: {}", s.degree, s.sign, s.form);
    }
    println!("W' sigma-stable: {}", report.wprime_swapped);
    println!("free scalars: {:?}", report.free_scalars);
    Ok(())
}
