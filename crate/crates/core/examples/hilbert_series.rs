//! The covering series of a Godeaux surface with 2-torsion and its
//! numerators before and after adding a degree 4 generator.

use hyperell::series::{read_numerator, GodeauxAnalysis};

fn main() -> hyperell::Result<()> {
    let a = GodeauxAnalysis::run(12)?;
    println!("P(t, e) = {}", a.series);
    println!("over {}:\n  {}", a.denominator, a.numerator);
    println!("over {}:\n  {}", a.extended_denominator, a.extended_numerator);
    for r in read_numerator(&a.numerator, 8) {
        println!("  t^{}: {}", r.degree, r.coefficient);
    }
    Ok(())
}
