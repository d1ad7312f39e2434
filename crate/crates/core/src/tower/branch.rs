//! Branch forms of the double covers: binary quartics for the curve and
//! forms of bidegree (3,1), (1,3) on P^1 x P^1 for the K3 surface.

use crate::algebra::poly::Homogeneity;
use crate::algebra::{Ctx, MultiPoly, UniPoly, VariableContext};
use crate::error::{Error, Result};
use crate::random::Sampler;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BranchKind {
    Curve,
    K3,
}

/// The two branch forms `f`, `g` and their product `F = f*g`.
#[derive(Clone, Debug)]
pub struct BranchData {
    kind: BranchKind,
    f: MultiPoly,
    g: MultiPoly,
    product: MultiPoly,
}

/// `s1, s2` of weight 1.
pub fn curve_base() -> Ctx {
    VariableContext::graded(&[("s1", 1), ("s2", 1)]).unwrap()
}

/// `s1, s2, t1, t2` of weight 1 with bidegrees `(1,0)` and `(0,1)`.
pub fn k3_base() -> Ctx {
    VariableContext::graded(&[("s1", 1), ("s2", 1), ("t1", 1), ("t2", 1)])
        .unwrap()
        .with_bidegrees(&[(1, 0), (1, 0), (0, 1), (0, 1)])
        .unwrap()
}

impl BranchData {
    /// Quartics `f4, g4` in `s1, s2`.
    pub fn curve(f4: &MultiPoly, g4: &MultiPoly) -> Result<Self> {
        let base = curve_base();
        let (f, g) = (f4.embed(&base)?, g4.embed(&base)?);
        for (name, p) in [("f4", &f), ("g4", &g)] {
            match p.homogeneity()? {
                Homogeneity::Homogeneous(4) => {}
                other => {
                    return Err(Error::Contract(format!(
                        "{name} = {p} must be a nonzero binary quartic, found {other:?}"
                    )))
                }
            }
        }
        Ok(Self {
            kind: BranchKind::Curve,
            product: &f * &g,
            f,
            g,
        })
    }

    /// Forms `f` of bidegree (3,1) and `g` of bidegree (1,3).
    pub fn k3(f31: &MultiPoly, g13: &MultiPoly) -> Result<Self> {
        let base = k3_base();
        let (f, g) = (f31.embed(&base)?, g13.embed(&base)?);
        for (name, p, want) in [("f", &f, (3, 1)), ("g", &g, (1, 3))] {
            match p.bihomogeneity()? {
                Homogeneity::Homogeneous(d) if d == want => {}
                other => {
                    return Err(Error::Contract(format!(
                        "{name} = {p} must be a nonzero form of bidegree {want:?}, found {other:?}"
                    )))
                }
            }
        }
        Ok(Self {
            kind: BranchKind::K3,
            product: &f * &g,
            f,
            g,
        })
    }

    /// Generic quartics with every coefficient nonzero.
    pub fn random_curve(seed: u64) -> Self {
        let base = curve_base();
        let mut rng = Sampler::new(seed);
        let f = rng.form(&base, &[0, 1], 4);
        let g = rng.form(&base, &[0, 1], 4);
        Self::curve(&f, &g).expect("sampled quartics")
    }

    /// Generic (3,1) and (1,3) forms with every coefficient nonzero.
    pub fn random_k3(seed: u64) -> Self {
        let base = k3_base();
        let mut rng = Sampler::new(seed);
        let f = rng.biform(&base, &[0, 1, 2, 3], (3, 1));
        let g = rng.biform(&base, &[0, 1, 2, 3], (1, 3));
        Self::k3(&f, &g).expect("sampled forms")
    }

    pub fn kind(&self) -> BranchKind {
        self.kind
    }

    pub fn base(&self) -> &Ctx {
        self.f.ctx()
    }

    pub fn f(&self) -> &MultiPoly {
        &self.f
    }

    pub fn g(&self) -> &MultiPoly {
        &self.g
    }

    pub fn product(&self) -> &MultiPoly {
        &self.product
    }

    /// For the curve: whether the octic `F` has eight distinct roots.
    pub fn product_squarefree(&self) -> Option<bool> {
        if self.kind != BranchKind::Curve {
            return None;
        }
        let (affine, at_infinity) = UniPoly::from_binary_form(&self.product, 0, 1).ok()?;
        Some(at_infinity <= 1 && affine.is_squarefree())
    }
}
