//! Extends the projected surface T' to the 6-fold W' and checks that every
//! extended equation lies in the kernel of Phi.

use hyperell::algebra::GaussianRational;
use hyperell::extension::{
    build_wprime, corollary_equations, extended_equations, restriction_matches, verify_kernel, ExtensionData,
};
use hyperell::tower::TprimeParams;

fn main() -> hyperell::Result<()> {
    let q = |s: &str| s.parse::<GaussianRational>().unwrap();
    let (alpha, beta) = (q("2"), q("1/3+i"));
    let data = ExtensionData::standard_solution(&alpha, &beta);
    for (k, e) in extended_equations(&data)?.iter().enumerate() {
        println!("extended equation {} ({} terms) in kernel: {}", k + 1, e.len(), verify_kernel(e, &data)?);
    }
    for (k, e) in corollary_equations(&data)?.iter().enumerate() {
        println!("extended Q{} in kernel: {}", k + 1, verify_kernel(e, &data)?);
    }
    let params = TprimeParams {
        alpha,
        beta,
        l: [q("1"), q("0"), q("-1"), q("2")],
        m: [q("3"), q("1/2"), q("0"), q("1")],
    };
    let w = build_wprime(&params)?;
    println!("W' verified: {}", w.verify()?.passed());
    println!("W' restricts to T': {}", restriction_matches(&params)?);
    let symbolic = ExtensionData::symbolic_standard_solution();
    for e in extended_equations(&symbolic)? {
        println!("symbolic alpha, beta in kernel: {}", verify_kernel(&e, &symbolic)?);
    }
    Ok(())
}
