//! Builds the genus 5 curve, its cover E and a K3 surface from sampled
//! branch data and checks every equation through the parametrization.

use hyperell::tower::{construct_curve, construct_e, construct_k3, BranchData};

fn main() -> hyperell::Result<()> {
    let curve = BranchData::random_curve(1);
    println!("f4 = {}\ng4 = {}", curve.f(), curve.g());
    for v in [construct_curve(&curve)?, construct_e(&curve)?, construct_k3(&BranchData::random_k3(1))?] {
        let report = v.verify()?;
        println!("{}: {} equations, verified = {}", v.name, v.equations.len(), report.passed());
        if let Some(first) = v.equations.first() {
            println!("  first: {first}");
        }
    }
    Ok(())
}
