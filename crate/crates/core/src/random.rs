//! Seeded sampling of small exact coefficients and generic forms.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::poly::{monomials_of_bidegree, monomials_of_degree};
use crate::algebra::{Ctx, GaussianRational, MultiPoly};

/// Largest numerator/denominator magnitude used for sampled scalars.
pub const BOUND: i64 = 7;

/// Deterministic source of small Gaussian rationals.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    fn rational(&mut self) -> GaussianRational {
        let n = self.rng.gen_range(-BOUND..=BOUND);
        let d = self.rng.gen_range(1..=BOUND);
        GaussianRational::ratio(n, d)
    }

    /// A rational with nonzero numerator.
    fn nonzero_rational(&mut self) -> GaussianRational {
        loop {
            let q = self.rational();
            if !q.is_zero() {
                return q;
            }
        }
    }

    /// A real rational `n/d` with `|n|, d <= 7`, possibly zero.
    pub fn real(&mut self) -> GaussianRational {
        self.rational()
    }

    /// A nonzero Gaussian rational; half the time with an imaginary part.
    pub fn scalar(&mut self) -> GaussianRational {
        let re = self.nonzero_rational();
        if self.rng.gen_bool(0.5) {
            let im = self.nonzero_rational();
            GaussianRational::new(re.re().clone(), im.re().clone())
        } else {
            re
        }
    }

    /// A nonzero real rational.
    pub fn nonzero_real(&mut self) -> GaussianRational {
        self.nonzero_rational()
    }

    /// A form of the given weighted degree in the listed variables, every
    /// monomial carrying a nonzero random coefficient.
    pub fn form(&mut self, ctx: &Ctx, vars: &[usize], degree: u32) -> MultiPoly {
        let terms: Vec<_> = monomials_of_degree(ctx, vars, degree)
            .into_iter()
            .map(|m| (m, self.scalar()))
            .collect();
        MultiPoly::from_terms(ctx, terms)
    }

    /// A form of the given bidegree in the listed variables (requires
    /// bidegrees on the context).
    pub fn biform(&mut self, ctx: &Ctx, vars: &[usize], bidegree: (i64, i64)) -> MultiPoly {
        let terms: Vec<_> = monomials_of_bidegree(ctx, vars, bidegree)
            .into_iter()
            .map(|m| (m, self.scalar()))
            .collect();
        MultiPoly::from_terms(ctx, terms)
    }

    /// A point with nonzero random coordinates.
    pub fn point(&mut self, n: usize) -> Vec<GaussianRational> {
        (0..n).map(|_| self.scalar()).collect()
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::VariableContext;

    #[test]
    fn deterministic_for_a_seed() {
        let a: Vec<_> = (0..5).map(|_| Sampler::new(9).scalar()).collect();
        let mut s = Sampler::new(9);
        let b: Vec<_> = (0..5).map(|_| s.scalar()).collect();
        assert_eq!(a[0], b[0]);
        let mut t = Sampler::new(9);
        let c: Vec<_> = (0..5).map(|_| t.scalar()).collect();
        assert_eq!(b, c);
    }

    #[test]
    fn forms_are_full() {
        let ctx = VariableContext::graded(&[("s1", 1), ("s2", 1)]).unwrap();
        let f = Sampler::new(1).form(&ctx, &[0, 1], 4);
        assert_eq!(f.len(), 5);
        assert_eq!(f.homogeneity().unwrap().degree(), Some(4));
    }

    #[test]
    fn biforms_have_bidegree() {
        let ctx = VariableContext::graded(&[("s1", 1), ("s2", 1), ("t1", 1), ("t2", 1)])
            .unwrap()
            .with_bidegrees(&[(1, 0), (1, 0), (0, 1), (0, 1)])
            .unwrap();
        let f = Sampler::new(2).biform(&ctx, &[0, 1, 2, 3], (3, 1));
        assert_eq!(f.len(), 8);
        assert_eq!(f.bihomogeneity().unwrap().degree(), Some((3, 1)));
    }
}
