//! Coordinate rings of the extension: `R = k[a..d, y1..y3]`, `S = R[z1, z2]`,
//! `M = k[a..d, u, v]` and the cover ring `R[u, v]`.
//!
//! In symbolic mode `alpha` and `beta` are appended as variables to every
//! ring; the rings are then ungraded.

use std::sync::OnceLock;

use crate::algebra::{Ctx, MultiPoly, RingMap, VariableContext};

const R_VARS: [(&str, u32); 7] = [
    ("a", 1),
    ("b", 1),
    ("c", 1),
    ("d", 1),
    ("y1", 2),
    ("y2", 2),
    ("y3", 2),
];
const Z_VARS: [(&str, u32); 2] = [("z1", 3), ("z2", 3)];
const UV_VARS: [(&str, u32); 2] = [("u", 1), ("v", 1)];
const PARAMS: [&str; 2] = ["alpha", "beta"];

/// The four base-ring variables `a, b, c, d` as indices, common to every ring.
pub const ABCD: [usize; 4] = [0, 1, 2, 3];

#[derive(Debug, Clone)]
pub struct ExtensionRings {
    pub r: Ctx,
    pub s: Ctx,
    pub m: Ctx,
    pub cover: Ctx,
    symbolic: bool,
}

fn make(vars: &[(&str, u32)], symbolic: bool) -> Ctx {
    if symbolic {
        let mut names: Vec<&str> = vars.iter().map(|(n, _)| *n).collect();
        names.extend(PARAMS);
        VariableContext::ungraded(&names).unwrap()
    } else {
        VariableContext::graded(vars).unwrap()
    }
}

impl ExtensionRings {
    fn build(symbolic: bool) -> Self {
        let abcd = &R_VARS[..4];
        let cat = |parts: &[&[(&'static str, u32)]]| -> Vec<(&'static str, u32)> {
            parts.iter().flat_map(|p| p.iter().copied()).collect()
        };
        Self {
            r: make(&R_VARS, symbolic),
            s: make(&cat(&[&R_VARS, &Z_VARS]), symbolic),
            m: make(&cat(&[abcd, &UV_VARS]), symbolic),
            cover: make(&cat(&[&R_VARS, &UV_VARS]), symbolic),
            symbolic,
        }
    }

    /// Rings with `alpha`, `beta` as scalars.
    pub fn numeric() -> Self {
        static CELL: OnceLock<ExtensionRings> = OnceLock::new();
        CELL.get_or_init(|| Self::build(false)).clone()
    }

    /// Rings carrying `alpha`, `beta` as variables.
    pub fn symbolic() -> Self {
        static CELL: OnceLock<ExtensionRings> = OnceLock::new();
        CELL.get_or_init(|| Self::build(true)).clone()
    }

    pub fn is_symbolic(&self) -> bool {
        self.symbolic
    }

    /// The named variable of `ctx`; panics for names outside the fixed layout.
    pub fn var(ctx: &Ctx, name: &str) -> MultiPoly {
        MultiPoly::var(ctx, name).expect("fixed extension variable")
    }

    /// `y1 -> u^2 + 2av`, `y2 -> bu + cv`, `y3 -> v^2 + 2du` from `R` into `M`.
    pub fn phi0(&self) -> RingMap {
        self.phi0_from(&self.r)
    }

    /// The same substitution on the cover ring, fixing `u` and `v`.
    pub fn cover_to_m(&self) -> RingMap {
        self.phi0_from(&self.cover)
    }

    fn phi0_from(&self, source: &Ctx) -> RingMap {
        let m = |t: &str| crate::algebra::parse_poly(t, &self.m).unwrap();
        let pairs: Vec<(&str, MultiPoly)> = vec![
            ("y1", m("u^2 + 2*a*v")),
            ("y2", m("b*u + c*v")),
            ("y3", m("v^2 + 2*d*u")),
        ];
        RingMap::from_pairs(source, &self.m, pairs).unwrap()
    }
}

impl PartialEq for ExtensionRings {
    fn eq(&self, other: &Self) -> bool {
        self.symbolic == other.symbolic
    }
}

impl Eq for ExtensionRings {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn layouts() {
        let n = ExtensionRings::numeric();
        assert_eq!(n.s.names().join(","), "a,b,c,d,y1,y2,y3,z1,z2");
        assert_eq!(n.cover.names().join(","), "a,b,c,d,y1,y2,y3,u,v");
        assert!(n.m.is_graded());
        let s = ExtensionRings::symbolic();
        assert_eq!(s.m.names().join(","), "a,b,c,d,u,v,alpha,beta");
        assert!(!s.r.is_graded());
    }

    #[test]
    fn phi0_images() {
        let n = ExtensionRings::numeric();
        let map = n.phi0();
        assert_eq!(map.image("y2").unwrap().to_string(), "b*u + c*v");
        assert_eq!(map.image("y3").unwrap().to_string(), "2*d*u + v^2");
    }
}
