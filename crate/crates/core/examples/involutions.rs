//! The involutions on the curve, the K3 surface and the 6-fold, with their
//! fixed points.

use hyperell::algebra::GaussianRational;
use hyperell::extension::ExtensionData;
use hyperell::involution::{
    candidate_point, check_curve_involution, check_k3_involution, check_phi_equivariance, fixed_planes_check,
    fixed_quartic, sigma_t, verify_fixed_point, BranchSwapData,
};

fn main() -> hyperell::Result<()> {
    let q = |s: &str| s.parse::<GaussianRational>().unwrap();
    let alphas = [q("1"), q("2"), q("-1"), q("3"), q("1/2"), q("5")];
    let r = check_curve_involution(&alphas)?;
    println!("curve: sigma^2 = tau {}, fixed points {}", r.sigma_squared_is_tau, r.fixed_points.len());

    let data = BranchSwapData {
        alpha: [q("1"), q("0"), q("0"), q("0")],
        beta: [q("0"), q("0"), q("0"), q("1")],
    };
    let (t, report) = check_k3_involution(&data)?;
    println!("K3: preserved {}, fixed quartic {}", report.preserves_t, fixed_quartic(&data));
    for lam in ["1", "2"] {
        let c = verify_fixed_point(&t, &candidate_point(&q(lam))?, &sigma_t())?;
        println!("  lambda = {lam}: on T {}, fixed {:?}", c.on_variety, c.witness.map(|w| w.mu_candidates));
    }

    let sym = ExtensionData::equivariant_solution(None);
    println!("Phi equivariant in symbolic alpha: {}", check_phi_equivariance(&sym)?.passed());
    let planes = fixed_planes_check(&q("2"), &[q("1"), q("2"), q("-1"), q("1/3")])?;
    println!("fixed planes and isolated points: {}", planes.passed());
    Ok(())
}
