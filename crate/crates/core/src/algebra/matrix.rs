//! Small dense matrices with polynomial entries.

use std::fmt;

use super::context::{same_context, Ctx};
use super::poly::MultiPoly;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    ctx: Ctx,
    rows: usize,
    cols: usize,
    entries: Vec<MultiPoly>,
}

/// A `k x k` minor together with the row and column indices it uses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Minor {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub value: MultiPoly,
}

impl PolyMatrix {
    /// Builds a matrix from rows; all rows must have equal length and all
    /// entries must live over `ctx`.
    pub fn from_rows(ctx: &Ctx, rows: Vec<Vec<MultiPoly>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(nrows * ncols);
        for row in rows {
            if row.len() != ncols {
                return Err(Error::Contract("ragged matrix rows".into()));
            }
            for e in row {
                if !same_context(e.ctx(), ctx) {
                    return Err(Error::ContextMismatch("matrix entry context".into()));
                }
                entries.push(e);
            }
        }
        Ok(Self {
            ctx: ctx.clone(),
            rows: nrows,
            cols: ncols,
            entries,
        })
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &MultiPoly {
        &self.entries[r * self.cols + c]
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| (0..r).all(|c| self.get(r, c) == self.get(c, r)))
    }

    /// Determinant by cofactor expansion along the first row.
    pub fn determinant(&self) -> Result<MultiPoly> {
        if self.rows != self.cols {
            return Err(Error::Contract("determinant of a non-square matrix".into()));
        }
        let idx: Vec<usize> = (0..self.rows).collect();
        Ok(self.det_sub(&idx, &idx))
    }

    fn det_sub(&self, rows: &[usize], cols: &[usize]) -> MultiPoly {
        match rows.len() {
            0 => MultiPoly::one(&self.ctx),
            1 => self.get(rows[0], cols[0]).clone(),
            2 => {
                self.get(rows[0], cols[0]) * self.get(rows[1], cols[1])
                    - self.get(rows[0], cols[1]) * self.get(rows[1], cols[0])
            }
            _ => {
                let mut acc = MultiPoly::zero(&self.ctx);
                for (k, &c) in cols.iter().enumerate() {
                    let entry = self.get(rows[0], c);
                    if entry.is_zero() {
                        continue;
                    }
                    let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                    let term = entry * &self.det_sub(&rows[1..], &rest);
                    if k % 2 == 0 {
                        acc += &term;
                    } else {
                        acc -= &term;
                    }
                }
                acc
            }
        }
    }

    /// All `k x k` minors, rows outer and columns inner, each index set in
    /// increasing order.
    pub fn minors(&self, k: usize) -> Result<Vec<Minor>> {
        if k == 0 || k > self.rows.min(self.cols) {
            return Err(Error::Contract(format!(
                "minor size {k} out of range for a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let row_sets = combinations(self.rows, k);
        let col_sets = combinations(self.cols, k);
        let mut out = Vec::with_capacity(row_sets.len() * col_sets.len());
        for r in &row_sets {
            for c in &col_sets {
                out.push(Minor {
                    rows: r.clone(),
                    cols: c.clone(),
                    value: self.det_sub(r, c),
                });
            }
        }
        Ok(out)
    }

    /// Matrix times a column vector.
    pub fn apply(&self, v: &[MultiPoly]) -> Result<Vec<MultiPoly>> {
        if v.len() != self.cols {
            return Err(Error::Contract(format!(
                "vector of length {} for {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|r| {
                let mut acc = MultiPoly::zero(&self.ctx);
                for (c, x) in v.iter().enumerate() {
                    let e = self.get(r, c);
                    if !e.is_zero() && !x.is_zero() {
                        acc += &(e * x);
                    }
                }
                acc
            })
            .collect())
    }
}

/// Increasing `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyMatrix {}x{}\n{self}", self.rows, self.cols)
    }
}
