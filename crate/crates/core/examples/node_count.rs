//! Counts the intersection points of the two branch curves on the quadric.

use hyperell::tower::{node_count, BranchData};

fn main() -> hyperell::Result<()> {
    for seed in 0..3 {
        let n = node_count(&BranchData::random_k3(seed))?;
        println!("seed {seed}: {} points, transversal = {}", n.points, n.transversal);
    }
    Ok(())
}
