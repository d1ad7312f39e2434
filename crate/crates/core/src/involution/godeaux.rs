//! Eigenspaces of the involution on the generators of `W` and the sections
//! cutting out the double cover of a Godeaux surface.

use serde::Serialize;

use super::fano::{check_tprime_swap, equivariant_params};
use super::spec::{DeclaredSquare, InvolutionSpec};
use crate::algebra::poly::monomials_of_degree;
use crate::algebra::{parse_poly, Ctx, GaussianRational, MultiPoly, VariableContext};
use crate::error::{Error, Result};
use crate::extension::build_wprime;

/// `a..d` of weight 1, `y1..y4` of weight 2, `z1..z4` of weight 3, `t` of weight 4.
pub fn w_ring() -> Ctx {
    VariableContext::graded(&[
        ("a", 1),
        ("b", 1),
        ("c", 1),
        ("d", 1),
        ("y1", 2),
        ("y2", 2),
        ("y3", 2),
        ("y4", 2),
        ("z1", 3),
        ("z2", 3),
        ("z3", 3),
        ("z4", 3),
        ("t", 4),
    ])
    .unwrap()
}

/// The rule on P^5 for `a..d` and the action on `T` in the coordinates of
/// the projection for the rest.
pub fn sigma_w() -> InvolutionSpec {
    InvolutionSpec::from_text(
        "sigma",
        &w_ring(),
        &[
            ("a", "-d"),
            ("b", "c"),
            ("c", "b"),
            ("d", "-a"),
            ("y1", "y3"),
            ("y2", "-y2"),
            ("y3", "y1"),
            ("y4", "-y4"),
            ("z1", "-z2"),
            ("z2", "-z1"),
            ("z3", "z4"),
            ("z4", "z3"),
            ("t", "-t"),
        ],
        DeclaredSquare::Identity,
    )
    .unwrap()
}

#[derive(Debug, Clone, Serialize)]
pub struct TableRow {
    pub degree: u32,
    pub invariant: Vec<String>,
    pub anti_invariant: Vec<String>,
}

/// Generators of `R(W, A)` in each degree split by the sign of `sigma`.
#[derive(Debug, Clone, Serialize)]
pub struct EigenspaceTable {
    pub rows: Vec<TableRow>,
}

const TABLE: [(u32, &[&str], &[&str]); 4] = [
    (1, &["a - d", "b + c"], &["a + d", "b - c"]),
    (2, &["y1 + y3"], &["y1 - y3", "y2", "y4"]),
    (3, &["z1 - z2", "z3 + z4"], &["z1 + z2", "z3 - z4"]),
    (4, &[], &["t"]),
];

impl EigenspaceTable {
    pub fn standard() -> Self {
        let strings = |xs: &[&str]| xs.iter().map(|s| s.to_string()).collect();
        Self {
            rows: TABLE
                .iter()
                .map(|(d, inv, anti)| TableRow {
                    degree: *d,
                    invariant: strings(inv),
                    anti_invariant: strings(anti),
                })
                .collect(),
        }
    }

    /// Entries that are not eigenvectors of the stated sign.
    pub fn failures(&self, sigma: &InvolutionSpec) -> Result<Vec<String>> {
        let mut bad = Vec::new();
        for row in &self.rows {
            for (list, sign) in [(&row.invariant, 1), (&row.anti_invariant, -1)] {
                for text in list {
                    let p = parse_poly(text, sigma.ctx())?;
                    if !has_sign(sigma, &p, sign)? {
                        bad.push(text.clone());
                    }
                }
            }
        }
        Ok(bad)
    }

    /// Listed `(invariant, anti-invariant)` counts per degree.
    pub fn listed_dimensions(&self) -> Vec<(u32, usize, usize)> {
        self.rows
            .iter()
            .map(|r| (r.degree, r.invariant.len(), r.anti_invariant.len()))
            .collect()
    }
}

fn has_sign(sigma: &InvolutionSpec, p: &MultiPoly, sign: i64) -> Result<bool> {
    Ok(!p.is_zero() && sigma.act(p)? == p.scale_int(sign))
}

/// Dimensions of the `+1` and `-1` eigenspaces on the generators of each
/// weight `1..=4`.
pub fn generator_dimensions(sigma: &InvolutionSpec) -> Result<Vec<(u32, usize, usize)>> {
    let ctx = sigma.ctx();
    (1..=4)
        .map(|w| {
            let vars: Vec<usize> = (0..ctx.len()).filter(|&j| ctx.weight(j) == Some(w)).collect();
            let basis: Vec<_> = vars
                .iter()
                .map(|&j| crate::algebra::Monomial::var(ctx.len(), j))
                .collect();
            let (p, m) = sigma.eigenspace_dimensions(&basis)?;
            Ok((w, p, m))
        })
        .collect()
}

/// Dimensions of the eigenspaces on all forms of weighted degree `n` in
/// `a..d, y1..y4`.
pub fn form_dimensions(sigma: &InvolutionSpec, n: u32) -> Result<(usize, usize)> {
    let ctx = sigma.ctx();
    let vars: Vec<usize> = (0..ctx.len()).filter(|&j| ctx.weight(j).is_some_and(|w| w <= 2)).collect();
    sigma.eigenspace_dimensions(&monomials_of_degree(ctx, &vars, n))
}

/// Sections of type `(1+, 1+, 1-, 2-)` as polynomial texts over [`w_ring`].
#[derive(Debug, Clone, PartialEq, Eq, serde::Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct GodeauxChoices {
    pub invariant_linear: [String; 2],
    pub anti_linear: String,
    pub anti_quadric: String,
}

impl Default for GodeauxChoices {
    fn default() -> Self {
        Self {
            invariant_linear: ["a - d".into(), "b + c".into()],
            anti_linear: "a + d + b - c".into(),
            anti_quadric: "y1 - y3 + y2 + y4".into(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Section {
    pub form: String,
    pub degree: u32,
    pub sign: i8,
}

/// Raw counts of free scalars in the construction, for information only.
#[derive(Debug, Clone, Serialize)]
pub struct FreeScalars {
    pub sections: usize,
    pub wprime: usize,
    pub total: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct GodeauxReport {
    pub sections: Vec<Section>,
    pub wprime_equations: Vec<String>,
    /// `sigma` exchanges the two equations of `W'`.
    pub wprime_swapped: bool,
    pub table_failures: Vec<String>,
    pub dimensions: Vec<(u32, usize, usize)>,
    pub free_scalars: FreeScalars,
}

/// Expected eigenspace dimensions on the generators in weights 1..=4.
pub const EXPECTED_DIMENSIONS: [(u32, usize, usize); 4] = [(1, 2, 2), (2, 1, 3), (3, 2, 2), (4, 0, 1)];

impl GodeauxReport {
    pub fn passed(&self) -> bool {
        self.wprime_swapped && self.table_failures.is_empty() && self.dimensions == EXPECTED_DIMENSIONS
    }
}

fn section(sigma: &InvolutionSpec, text: &str, degree: u32, sign: i8) -> Result<Section> {
    let p = parse_poly(text, sigma.ctx())?;
    match p.homogeneity()?.degree() {
        Some(d) if d == degree as i64 => {}
        _ => {
            return Err(Error::Contract(format!("section {p} must be a form of degree {degree}")));
        }
    }
    if !has_sign(sigma, &p, sign as i64)? {
        let kind = if sign > 0 { "invariant" } else { "anti-invariant" };
        return Err(Error::Contract(format!("section {p} is not {kind}")));
    }
    Ok(Section {
        form: p.to_string(),
        degree,
        sign,
    })
}

/// Checks the chosen sections and the eigenspace table, and lists them with
/// the equations of the sigma-compatible `W'`.
pub fn godeaux_assembly(
    choices: &GodeauxChoices,
    alpha: &GaussianRational,
    l: &[GaussianRational; 4],
) -> Result<GodeauxReport> {
    let sigma = sigma_w();
    let ctx = sigma.ctx().clone();
    let mut sections = Vec::new();
    for text in &choices.invariant_linear {
        sections.push(section(&sigma, text, 1, 1)?);
    }
    let p0 = parse_poly(&choices.invariant_linear[0], &ctx)?;
    let p1 = parse_poly(&choices.invariant_linear[1], &ctx)?;
    if super::spec::constant_ratio(&p1, &p0).is_some() {
        return Err(Error::Contract(format!("invariant sections {p0} and {p1} are proportional")));
    }
    sections.push(section(&sigma, &choices.anti_linear, 1, -1)?);
    sections.push(section(&sigma, &choices.anti_quadric, 2, -1)?);

    let w = build_wprime(&equivariant_params(alpha, l))?;
    let (_, wprime_swapped) = check_tprime_swap(alpha, l)?;
    let (lin_plus, lin_minus) = form_dimensions(&sigma, 1)?;
    let (_, quad_minus) = form_dimensions(&sigma, 2)?;
    let section_scalars = 2 * lin_plus + lin_minus + quad_minus;
    let wprime_scalars = 1 + l.len();
    Ok(GodeauxReport {
        sections,
        wprime_equations: w.equations.iter().map(|e| e.to_string()).collect(),
        wprime_swapped,
        table_failures: EigenspaceTable::standard().failures(&sigma)?,
        dimensions: generator_dimensions(&sigma)?,
        free_scalars: FreeScalars {
            sections: section_scalars,
            wprime: wprime_scalars,
            total: section_scalars + wprime_scalars,
        },
    })
}
