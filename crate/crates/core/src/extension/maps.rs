//! The maps `Phi0`, `Phi` and the module presentations `A` and `B` of `M`
//! over `R`.

use std::fmt;

use super::data::ExtensionData;
use super::rings::ExtensionRings;
use crate::algebra::{parse_poly, MultiPoly, PolyMatrix, RingMap};
use crate::error::{Error, Result};

/// Degree shifts of the columns of `B`: the generators `1, z1, z2` followed
/// by the four columns of `A`.
pub const B_SHIFTS: [u32; 7] = [0, 3, 3, 2, 3, 3, 4];

const A_ROWS: [[&str; 4]; 4] = [
    ["-y2", "b*y1", "c*y3", "-2*c*d*y1 + 4*a*d*y2 - 2*a*b*y3"],
    ["b", "-y2", "-2*c*d", "c*y3"],
    ["c", "-2*a*b", "-y2", "b*y1"],
    ["0", "c", "b", "-y2"],
];

/// `Phi0` from `R` to `M`.
pub fn phi0(rings: &ExtensionRings) -> RingMap {
    rings.phi0()
}

/// `u(f+s4) + s2 uv + s5 v + s1 y1 + s3 y3` and the mirrored expression for
/// `z2`, as elements of the cover ring `R[u, v]`.
pub fn z_images_in_cover(data: &ExtensionData) -> Result<[MultiPoly; 2]> {
    let c = &data.rings().cover;
    let v = |n: &str| ExtensionRings::var(c, n);
    let e = |p: &MultiPoly| p.embed(c);
    let (u, w) = (v("u"), v("v"));
    let uv = &u * &w;
    let (y1, y3) = (v("y1"), v("y3"));
    let tail = |p1: &MultiPoly, p3: &MultiPoly| -> Result<MultiPoly> {
        Ok(&(&e(p1)? * &y1) + &(&e(p3)? * &y3))
    };
    let z1 = &(&(&u * &e(&(&data.f() + data.s(4)))?) + &(&e(data.s(2))? * &uv))
        + &(&(&e(data.s(5))? * &w) + &tail(data.s(1), data.s(3))?);
    let z2 = &(&(&w * &e(&(&data.g() + data.t(5)))?) + &(&e(data.t(2))? * &uv))
        + &(&(&e(data.t(4))? * &u) + &tail(data.t(1), data.t(3))?);
    Ok([z1, z2])
}

/// `Phi` from `S` to `M`: `Phi0` on `R` and the corrected images of `z1`, `z2`.
pub fn phi(data: &ExtensionData) -> Result<RingMap> {
    let rings = data.rings();
    let to_m = rings.cover_to_m();
    let [z1, z2] = z_images_in_cover(data)?;
    let mut images = Vec::with_capacity(rings.s.len());
    for name in rings.s.names() {
        images.push(match name.as_str() {
            "z1" => to_m.substitute(&z1)?,
            "z2" => to_m.substitute(&z2)?,
            "y1" | "y2" | "y3" => rings.phi0().image(name)?.clone(),
            other => ExtensionRings::var(&rings.m, other),
        });
    }
    RingMap::new(&rings.s, &rings.m, images)
}

/// The 4x4 presentation matrix `A` over `R`.
pub fn matrix_a(rings: &ExtensionRings) -> PolyMatrix {
    let rows = A_ROWS
        .iter()
        .map(|row| row.iter().map(|t| parse_poly(t, &rings.r).unwrap()).collect())
        .collect();
    PolyMatrix::from_rows(&rings.r, rows).unwrap()
}

/// The 4x7 matrix `B`: generators `1`, `z1`, `z2` followed by `A`.
pub fn matrix_b(data: &ExtensionData) -> PolyMatrix {
    let r = &data.rings().r;
    let v = |n: &str| ExtensionRings::var(r, n);
    let (y1, y3) = (v("y1"), v("y3"));
    let a = matrix_a(data.rings());
    let zero = MultiPoly::zero(r);
    let one = MultiPoly::one(r);
    let first = [
        [one, &(data.s(1) * &y1) + &(data.s(3) * &y3), &(data.t(1) * &y1) + &(data.t(3) * &y3)],
        [zero.clone(), &data.f() + data.s(4), data.t(4).clone()],
        [zero.clone(), data.s(5).clone(), &data.g() + data.t(5)],
        [zero, data.s(2).clone(), data.t(2).clone()],
    ];
    let rows = first
        .into_iter()
        .enumerate()
        .map(|(i, head)| {
            let mut row = head.to_vec();
            row.extend((0..4).map(|j| a.get(i, j).clone()));
            row
        })
        .collect();
    PolyMatrix::from_rows(r, rows).unwrap()
}

/// The module generators `1, u, v, uv` of `M`.
pub fn generators(rings: &ExtensionRings) -> [MultiPoly; 4] {
    let v = |n: &str| ExtensionRings::var(&rings.m, n);
    let (u, w) = (v("u"), v("v"));
    [MultiPoly::one(&rings.m), u.clone(), w.clone(), &u * &w]
}

/// For each column of a 4-row matrix over `R`, the element
/// `(1, u, v, uv) . column` of `M` under `Phi0`.
pub fn column_images(rings: &ExtensionRings, matrix: &PolyMatrix) -> Result<Vec<MultiPoly>> {
    if matrix.nrows() != 4 {
        return Err(Error::Contract(format!(
            "expected 4 rows (one per generator), got {}",
            matrix.nrows()
        )));
    }
    let map = rings.phi0();
    let gens = generators(rings);
    (0..matrix.ncols())
        .map(|c| {
            let mut acc = MultiPoly::zero(&rings.m);
            for (r, g) in gens.iter().enumerate() {
                let e = matrix.get(r, c).embed(&rings.r)?;
                if !e.is_zero() {
                    acc += &(&map.substitute(&e)? * g);
                }
            }
            Ok(acc)
        })
        .collect()
}

/// True when every column of `matrix` maps to zero in `M`.
pub fn presents_relations(rings: &ExtensionRings, matrix: &PolyMatrix) -> Result<bool> {
    Ok(column_images(rings, matrix)?.iter().all(MultiPoly::is_zero))
}

/// Checks that the columns of `A` are relations among `1, u, v, uv`.
pub fn verify_presentation() -> bool {
    let rings = ExtensionRings::numeric();
    presents_relations(&rings, &matrix_a(&rings)).unwrap_or(false)
}

/// A vector of seven elements of `R`, one per column of `B`.
#[derive(Clone, PartialEq, Eq)]
pub struct SyzygyVector {
    pub components: Vec<MultiPoly>,
}

impl SyzygyVector {
    pub fn new(components: Vec<MultiPoly>) -> Result<Self> {
        if components.len() != B_SHIFTS.len() {
            return Err(Error::Contract(format!(
                "syzygy vectors have {} components, got {}",
                B_SHIFTS.len(),
                components.len()
            )));
        }
        Ok(Self { components })
    }

    pub fn zero(rings: &ExtensionRings) -> Self {
        Self {
            components: vec![MultiPoly::zero(&rings.r); B_SHIFTS.len()],
        }
    }

    /// `(1, u, v, uv) . B . self` in `M`.
    pub fn image(&self, data: &ExtensionData) -> Result<MultiPoly> {
        let rings = data.rings();
        let cols = column_images(rings, &matrix_b(data))?;
        let map = rings.phi0();
        let mut acc = MultiPoly::zero(&rings.m);
        for (x, col) in self.components.iter().zip(&cols) {
            if !x.is_zero() && !col.is_zero() {
                acc += &(&map.substitute(&x.embed(&rings.r)?)? * col);
            }
        }
        Ok(acc)
    }

    /// `B . self` as a vector of `R^4`, before passing to `M`.
    pub fn apply_b(&self, data: &ExtensionData) -> Result<Vec<MultiPoly>> {
        matrix_b(data).apply(&self.components)
    }

    /// `lhs - x1 - x2 z1 - x3 z2` in `S`: the equation this vector encodes.
    pub fn equation(&self, lhs: &MultiPoly, rings: &ExtensionRings) -> Result<MultiPoly> {
        let s = &rings.s;
        let z1 = ExtensionRings::var(s, "z1");
        let z2 = ExtensionRings::var(s, "z2");
        let c = |i: usize| self.components[i].embed(s);
        Ok(&(&lhs.embed(s)? - &c(0)?) - &(&(&c(1)? * &z1) + &(&c(2)? * &z2)))
    }

    /// True when every component is homogeneous of degree `target - shift`.
    pub fn has_degrees(&self, target: u32) -> bool {
        self.components.iter().zip(B_SHIFTS).all(|(p, shift)| match p.homogeneity() {
            Ok(h) => h.degree().is_none_or(|d| d == target as i64 - shift as i64),
            Err(_) => false,
        })
    }
}

impl fmt::Debug for SyzygyVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.components.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::GaussianRational;

    fn q(s: &str) -> GaussianRational {
        s.parse().unwrap()
    }

    #[test]
    fn a_columns_are_relations() {
        assert!(verify_presentation());
        let rings = ExtensionRings::numeric();
        let a = matrix_a(&rings);
        assert_eq!(a.get(0, 3).to_string(), "-2*a*b*y3 + 4*a*d*y2 - 2*c*d*y1");
    }

    #[test]
    fn perturbed_entry_breaks_presentation() {
        let rings = ExtensionRings::numeric();
        let a = matrix_a(&rings);
        let mut rows: Vec<Vec<MultiPoly>> =
            (0..4).map(|r| (0..4).map(|c| a.get(r, c).clone()).collect()).collect();
        rows[1][0] = parse_poly("b + a", &rings.r).unwrap();
        let bad = PolyMatrix::from_rows(&rings.r, rows).unwrap();
        let images = column_images(&rings, &bad).unwrap();
        assert!(!images[0].is_zero());
        assert!(images[1..].iter().all(MultiPoly::is_zero));
    }

    #[test]
    fn b_columns_give_generator_images() {
        let data = ExtensionData::standard_solution(&q("2"), &q("3"));
        let rings = data.rings();
        let b = matrix_b(&data);
        for c in 0..4 {
            assert_eq!(b.get(0, 3 + c), matrix_a(rings).get(0, c));
        }
        let cols = column_images(rings, &b).unwrap();
        let map = phi(&data).unwrap();
        assert_eq!(cols[1], *map.image("z1").unwrap());
        assert_eq!(cols[2], *map.image("z2").unwrap());
        assert!(cols[3..].iter().all(MultiPoly::is_zero));
    }

    #[test]
    fn phi_specializes_at_origin() {
        let rings = ExtensionRings::numeric();
        let zero = MultiPoly::zero(&rings.r);
        let z = || zero.clone();
        let data =
            ExtensionData::new(&q("0"), &q("0"), [z(), z(), z(), z(), z()], [z(), z(), z(), z(), z()])
                .unwrap();
        let map = phi(&data).unwrap();
        assert_eq!(map.image("z1").unwrap().to_string(), "2*a*u*v + u^3");
        assert_eq!(map.image("y2").unwrap().to_string(), "b*u + c*v");
        let z1 = map.image("z1").unwrap();
        assert_eq!(z1.homogeneity().unwrap().degree(), Some(3));
    }

    #[test]
    fn symbolic_phi_builds() {
        let data = ExtensionData::symbolic_standard_solution();
        let map = phi(&data).unwrap();
        let alpha = map.target().index_of("alpha").unwrap();
        assert!(map.image("z1").unwrap().involves(alpha));
    }
}
