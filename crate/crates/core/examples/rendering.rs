//! Writes a bihomogeneous form in Segre coordinates and pulls it back.

use hyperell::algebra::{parse_poly, VariableContext};
use hyperell::rendering::RenderTarget;
use hyperell::tower::branch::k3_base;

fn main() -> hyperell::Result<()> {
    let base = k3_base();
    let ambient = VariableContext::graded(&[("y1", 2), ("y2", 2), ("y3", 2), ("y4", 2)])?;
    let segre = RenderTarget::segre(&base, ["s1", "s2"], ["t1", "t2"], &ambient, ["y1", "y2", "y3", "y4"])?;
    let p = parse_poly("s1^2*t1^2 + 3*s1*s2*t1*t2 - s2^2*t2^2", &base)?;
    let r = segre.render(&p)?;
    println!("{p}\n  renders as {r}\n  pulls back to {}", segre.pullback(&r)?);
    println!("relation: {}", segre.relation());
    Ok(())
}
