//! Exact linear systems over Q(i) by reduction to row echelon form.

use num_traits::{One, Zero};

use super::gaussian::GaussianRational;
use crate::error::{Error, Result};

type Row = Vec<(usize, GaussianRational)>;

/// Outcome of solving `A x = b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinearSolution {
    Unique(Vec<GaussianRational>),
    /// `particular` sets every free variable to zero. Each nullspace vector
    /// is scaled so that its first nonzero entry is 1.
    Underdetermined {
        particular: Vec<GaussianRational>,
        nullspace: Vec<Vec<GaussianRational>>,
    },
    Inconsistent,
}

impl LinearSolution {
    /// Some solution, if any exists.
    pub fn solution(&self) -> Option<&[GaussianRational]> {
        match self {
            LinearSolution::Unique(x) => Some(x),
            LinearSolution::Underdetermined { particular, .. } => Some(particular),
            LinearSolution::Inconsistent => None,
        }
    }

    pub fn is_consistent(&self) -> bool {
        !matches!(self, LinearSolution::Inconsistent)
    }
}

/// Sparse system: each row lists `(column, coefficient)` pairs.
#[derive(Debug, Clone, Default)]
pub struct SparseSystem {
    ncols: usize,
    rows: Vec<Row>,
    rhs: Vec<GaussianRational>,
}

impl SparseSystem {
    pub fn new(ncols: usize) -> Self {
        Self {
            ncols,
            rows: Vec::new(),
            rhs: Vec::new(),
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    /// Adds an equation. Repeated columns are summed and zeros dropped.
    pub fn push_row(&mut self, mut entries: Row, rhs: GaussianRational) -> Result<()> {
        entries.sort_by_key(|(c, _)| *c);
        let mut row: Row = Vec::with_capacity(entries.len());
        for (c, v) in entries {
            if c >= self.ncols {
                return Err(Error::Contract(format!(
                    "column {c} out of range for {} unknowns",
                    self.ncols
                )));
            }
            match row.last_mut() {
                Some((lc, lv)) if *lc == c => *lv += &v,
                _ => row.push((c, v)),
            }
        }
        row.retain(|(_, v)| !v.is_zero());
        self.rows.push(row);
        self.rhs.push(rhs);
        Ok(())
    }

    /// Solves the system, computing a nullspace basis when underdetermined.
    pub fn solve(&self) -> LinearSolution {
        self.solve_with(true)
    }

    /// Solves the system; when `nullspace` is false an underdetermined
    /// system reports an empty basis.
    pub fn solve_with(&self, nullspace: bool) -> LinearSolution {
        let n = self.ncols;
        // the right-hand side is carried as column `n`
        let mut rows: Vec<Row> = self
            .rows
            .iter()
            .zip(&self.rhs)
            .map(|(r, b)| {
                let mut r = r.clone();
                if !b.is_zero() {
                    r.push((n, b.clone()));
                }
                r
            })
            .filter(|r| !r.is_empty())
            .collect();

        let mut pivots: Vec<(usize, Row)> = Vec::new();
        for col in 0..n {
            // among rows starting at this column, take the sparsest
            let mut best: Option<usize> = None;
            for (i, r) in rows.iter().enumerate() {
                if r[0].0 == col && best.is_none_or(|b| r.len() < rows[b].len()) {
                    best = Some(i);
                }
            }
            let Some(bi) = best else { continue };
            let mut prow = rows.swap_remove(bi);
            let inv = prow[0].1.inv().expect("nonzero pivot");
            if !inv.is_one() {
                for (_, v) in prow.iter_mut() {
                    *v *= &inv;
                }
            }
            for r in rows.iter_mut() {
                if r[0].0 == col {
                    let f = r[0].1.clone();
                    *r = axpy(r, &prow, &f);
                }
            }
            rows.retain(|r| !r.is_empty());
            pivots.push((col, prow));
        }
        // remaining rows have no entries below column n: only the rhs survives
        if !rows.is_empty() {
            return LinearSolution::Inconsistent;
        }

        // back substitution to reduced form, last pivot first
        for k in (0..pivots.len()).rev() {
            let (col, prow) = (pivots[k].0, pivots[k].1.clone());
            for (_, r) in pivots[..k].iter_mut() {
                if let Ok(pos) = r.binary_search_by_key(&col, |(c, _)| *c) {
                    let f = r[pos].1.clone();
                    *r = axpy(r, &prow, &f);
                }
            }
        }

        let mut is_pivot = vec![false; n];
        let mut x = vec![GaussianRational::zero(); n];
        for (col, r) in &pivots {
            is_pivot[*col] = true;
            if let Some((c, v)) = r.last() {
                if *c == n {
                    x[*col] = v.clone();
                }
            }
        }
        if pivots.len() == n {
            return LinearSolution::Unique(x);
        }
        let mut basis = Vec::new();
        if nullspace {
            for free in (0..n).filter(|&c| !is_pivot[c]) {
                let mut v = vec![GaussianRational::zero(); n];
                v[free] = GaussianRational::one();
                for (col, r) in &pivots {
                    if let Ok(pos) = r.binary_search_by_key(&free, |(c, _)| *c) {
                        v[*col] = -&r[pos].1;
                    }
                }
                basis.push(normalize_first(v));
            }
        }
        LinearSolution::Underdetermined {
            particular: x,
            nullspace: basis,
        }
    }
}

/// `r - f * p` for sorted sparse rows.
fn axpy(r: &Row, p: &Row, f: &GaussianRational) -> Row {
    let mut out = Vec::with_capacity(r.len() + p.len());
    let (mut i, mut j) = (0, 0);
    while i < r.len() || j < p.len() {
        let take_r = j >= p.len() || (i < r.len() && r[i].0 < p[j].0);
        let take_p = i >= r.len() || (j < p.len() && p[j].0 < r[i].0);
        if take_r {
            out.push(r[i].clone());
            i += 1;
        } else if take_p {
            out.push((p[j].0, -(f * &p[j].1)));
            j += 1;
        } else {
            let v = &r[i].1 - &(f * &p[j].1);
            if !v.is_zero() {
                out.push((r[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn normalize_first(mut v: Vec<GaussianRational>) -> Vec<GaussianRational> {
    if let Some(lead) = v.iter().find(|x| !x.is_zero()).cloned() {
        if !lead.is_one() {
            let inv = lead.inv().unwrap();
            for x in v.iter_mut() {
                *x *= &inv;
            }
        }
    }
    v
}

/// The representative of `x + span(nullspace)` whose free coordinates are
/// zero, for a nullspace basis as returned by [`SparseSystem::solve`]. The
/// free coordinate of each basis vector is its last nonzero entry.
pub fn canonical_representative(
    nullspace: &[Vec<GaussianRational>],
    x: &[GaussianRational],
) -> Vec<GaussianRational> {
    let mut x = x.to_vec();
    for n in nullspace {
        let Some(free) = n.iter().rposition(|v| !v.is_zero()) else { continue };
        if x[free].is_zero() {
            continue;
        }
        let f = &x[free] / &n[free];
        for (xi, ni) in x.iter_mut().zip(n) {
            if !ni.is_zero() {
                *xi -= &(&f * ni);
            }
        }
    }
    x
}

/// Solves a dense system `A x = b`.
pub fn solve_linear_exact(a: &[Vec<GaussianRational>], b: &[GaussianRational]) -> Result<LinearSolution> {
    if a.len() != b.len() {
        return Err(Error::Contract(format!(
            "{} rows but {} right-hand sides",
            a.len(),
            b.len()
        )));
    }
    let ncols = a.first().map_or(0, Vec::len);
    let mut sys = SparseSystem::new(ncols);
    for (row, rhs) in a.iter().zip(b) {
        if row.len() != ncols {
            return Err(Error::Contract("ragged coefficient matrix".into()));
        }
        let entries = row
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(c, v)| (c, v.clone()))
            .collect();
        sys.push_row(entries, rhs.clone())?;
    }
    Ok(sys.solve())
}

/// Multiplies a dense matrix by a vector.
pub fn mat_vec(a: &[Vec<GaussianRational>], x: &[GaussianRational]) -> Vec<GaussianRational> {
    a.iter()
        .map(|row| {
            let mut acc = GaussianRational::zero();
            for (v, xi) in row.iter().zip(x) {
                if !v.is_zero() && !xi.is_zero() {
                    acc += &(v * xi);
                }
            }
            acc
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> GaussianRational {
        s.parse().unwrap()
    }

    fn m(rows: &[&[&str]]) -> Vec<Vec<GaussianRational>> {
        rows.iter().map(|r| r.iter().map(|s| q(s)).collect()).collect()
    }

    #[test]
    fn single_equation_two_unknowns() {
        let sol = solve_linear_exact(&m(&[&["1", "1"]]), &[q("2")]).unwrap();
        assert_eq!(
            sol,
            LinearSolution::Underdetermined {
                particular: vec![q("2"), q("0")],
                nullspace: vec![vec![q("1"), q("-1")]],
            }
        );
    }

    #[test]
    fn unique_complex_solution() {
        let a = m(&[&["1", "i"], &["i", "1"]]);
        let b = vec![q("1"), q("0")];
        let sol = solve_linear_exact(&a, &b).unwrap();
        let LinearSolution::Unique(x) = sol else { panic!("expected unique") };
        assert_eq!(mat_vec(&a, &x), b);
        assert_eq!(x, vec![q("1/2"), q("-1/2*i")]);
    }

    #[test]
    fn inconsistent_system() {
        let a = m(&[&["1", "2"], &["2", "4"]]);
        assert_eq!(
            solve_linear_exact(&a, &[q("1"), q("3")]).unwrap(),
            LinearSolution::Inconsistent
        );
    }

    #[test]
    fn zero_columns_are_free() {
        let a = m(&[&["0", "1", "0"], &["0", "0", "0"]]);
        let sol = solve_linear_exact(&a, &[q("5"), q("0")]).unwrap();
        let LinearSolution::Underdetermined { particular, nullspace } = sol else {
            panic!()
        };
        assert_eq!(particular, vec![q("0"), q("5"), q("0")]);
        assert_eq!(nullspace.len(), 2);
    }

    #[test]
    fn shape_errors() {
        assert!(solve_linear_exact(&m(&[&["1"]]), &[]).is_err());
        let mut s = SparseSystem::new(2);
        assert!(s.push_row(vec![(3, q("1"))], q("0")).is_err());
    }
}
