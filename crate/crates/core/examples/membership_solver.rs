//! Solves for xi and eta by linear algebra, compares with the closed forms,
//! and shows that a perturbed correction has no solution.

use hyperell::algebra::GaussianRational;
use hyperell::extension::{
    closed_form_xi, residuals, solve_membership, DegreeBound, ExtensionData, MembershipProblem,
};

fn main() -> hyperell::Result<()> {
    let q = |s: &str| s.parse::<GaussianRational>().unwrap();
    let data = ExtensionData::standard_solution(&q("2"), &q("3"));
    let (k, _) = residuals(&data)?;
    let target = k.target(data.rings())?;
    let problem = MembershipProblem::new(&data, 6, DegreeBound::Natural)?;
    println!("{} unknowns, {} equations", problem.unknown_count(), problem.row_count());
    let outcome = problem.solve(&target)?;
    if let Some(sol) = outcome.solution() {
        println!("nullspace dimension {}", sol.nullspace.len());
        println!("agrees with the closed form: {}", problem.agrees(sol, &closed_form_xi(&data))?);
    }
    let bad = data.with_s(2, &(data.s(2) + &data.form("b")?))?;
    let (k, _) = residuals(&bad)?;
    let out = solve_membership(&bad, &k.target(bad.rings())?, DegreeBound::Natural)?;
    println!("after perturbing s2: {}", out.label());
    Ok(())
}
