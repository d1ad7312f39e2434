//! Run configuration read from JSON. Scalars are exact Gaussian rationals
//! written as integers or strings such as `"3/2"` or `"1/2+3*i"`; unknown
//! keys are rejected.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::{parse_poly, GaussianRational};
use crate::error::{Error, Result};
use crate::extension::DegreeBound;
use crate::involution::{BranchSwapData, GodeauxChoices};
use crate::suites::{Suite, SuiteOptions, DEFAULT_SEED};
use crate::tower::branch::{curve_base, k3_base};
use crate::tower::{BranchData, TprimeParams};

/// Objects the `construct` command can build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ObjectKind {
    #[serde(rename = "curve")]
    Curve,
    E,
    K3,
    Tprime,
    Wprime,
}

impl ObjectKind {
    pub const ALL: [ObjectKind; 5] = [
        ObjectKind::Curve,
        ObjectKind::E,
        ObjectKind::K3,
        ObjectKind::Tprime,
        ObjectKind::Wprime,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ObjectKind::Curve => "curve",
            ObjectKind::E => "E",
            ObjectKind::K3 => "K3",
            ObjectKind::Tprime => "Tprime",
            ObjectKind::Wprime => "Wprime",
        }
    }
}

impl fmt::Display for ObjectKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ObjectKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ObjectKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Config(format!("unknown object `{s}`; expected curve, E, K3, Tprime or Wprime")))
    }
}

/// A pair of branch forms as polynomial texts: binary quartics in `s1, s2`
/// for the curve, forms of bidegree (3,1) and (1,3) for the K3 surface.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BranchForms {
    pub f: String,
    pub g: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct RunConfig {
    pub seed: u64,
    pub alpha: GaussianRational,
    pub beta: GaussianRational,
    pub l: [GaussianRational; 4],
    pub m: [GaussianRational; 4],
    /// Branch quartics of the curve; sampled from `seed` when absent.
    pub curve_branch: Option<BranchForms>,
    /// Branch forms of the K3 surface; sampled from `seed` when absent.
    pub k3_branch: Option<BranchForms>,
    /// `a1..a6` of the quadrics `f2`, `g2` swapped by the curve involution.
    pub curve_alphas: Option<[GaussianRational; 6]>,
    pub branch_swap: Option<BranchSwapData>,
    pub truncation: usize,
    /// Caps the degree in `y1, y2, y3` of the membership unknowns.
    pub y_degree_cap: Option<u32>,
    pub suites: Vec<Suite>,
    pub object: Option<ObjectKind>,
    /// Replacement corrections `s1..s5`, `t1..t5` as texts over `a, b, c, d`.
    pub overrides: BTreeMap<String, String>,
    pub godeaux: GodeauxChoices,
}

fn int(n: i64) -> GaussianRational {
    GaussianRational::from_integer(n)
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            seed: DEFAULT_SEED,
            alpha: int(2),
            beta: int(3),
            l: [int(1), int(2), int(-1), "1/2".parse().unwrap()],
            m: ["1/3".parse().unwrap(), int(-1), int(2), int(1)],
            curve_branch: None,
            k3_branch: None,
            curve_alphas: None,
            branch_swap: None,
            truncation: crate::series::DEFAULT_TRUNCATION,
            y_degree_cap: None,
            suites: vec![Suite::All],
            object: None,
            overrides: BTreeMap::new(),
            godeaux: GodeauxChoices::default(),
        }
    }
}

impl RunConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn params(&self) -> TprimeParams {
        TprimeParams {
            alpha: self.alpha.clone(),
            beta: self.beta.clone(),
            l: self.l.clone(),
            m: self.m.clone(),
        }
    }

    pub fn curve_data(&self) -> Result<BranchData> {
        match &self.curve_branch {
            None => Ok(BranchData::random_curve(self.seed)),
            Some(b) => {
                let ctx = curve_base();
                BranchData::curve(&parse_poly(&b.f, &ctx)?, &parse_poly(&b.g, &ctx)?)
            }
        }
    }

    pub fn k3_data(&self) -> Result<BranchData> {
        match &self.k3_branch {
            None => Ok(BranchData::random_k3(self.seed)),
            Some(b) => {
                let ctx = k3_base();
                BranchData::k3(&parse_poly(&b.f, &ctx)?, &parse_poly(&b.g, &ctx)?)
            }
        }
    }

    pub fn degree_bound(&self) -> DegreeBound {
        self.y_degree_cap.map_or(DegreeBound::Natural, DegreeBound::YDegreeCap)
    }

    pub fn suite_options(&self) -> Result<SuiteOptions> {
        for key in self.overrides.keys() {
            let ok = key.len() == 2
                && matches!(&key[..1], "s" | "t")
                && matches!(&key[1..], "1" | "2" | "3" | "4" | "5");
            if !ok {
                return Err(Error::Config(format!("override key `{key}` must be s1..s5 or t1..t5")));
            }
        }
        if self.truncation < 8 {
            return Err(Error::Config(format!(
                "truncation {} too small: the numerator is read through t^8",
                self.truncation
            )));
        }
        Ok(SuiteOptions {
            seed: self.seed,
            truncation: self.truncation,
            bound: self.degree_bound(),
            overrides: self.overrides.iter().map(|(k, v)| (k.clone(), v.clone())).collect(),
            godeaux: self.godeaux.clone(),
            curve_alphas: self.curve_alphas.clone(),
            branch_swap: self.branch_swap.clone(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_and_scalars() {
        let c = RunConfig::from_json(r#"{"alpha": "1/2+3*i", "beta": 5, "suites": ["kernel"]}"#).unwrap();
        assert_eq!(c.alpha.to_string(), "1/2+3*i");
        assert_eq!(c.beta, int(5));
        assert_eq!(c.suites, vec![Suite::Kernel]);
        assert_eq!(c.seed, DEFAULT_SEED);
    }

    #[test]
    fn rejects_unknown_keys_and_floats() {
        assert!(RunConfig::from_json(r#"{"alpah": 2}"#).is_err());
        assert!(RunConfig::from_json(r#"{"alpha": 0.5}"#).is_err());
        assert!(RunConfig::from_json(r#"{"godeaux": {"anti_linear": "a", "extra": 1}}"#).is_err());
    }

    #[test]
    fn object_names() {
        let c = RunConfig::from_json(r#"{"object": "Wprime"}"#).unwrap();
        assert_eq!(c.object, Some(ObjectKind::Wprime));
        assert_eq!("k3".parse::<ObjectKind>().unwrap(), ObjectKind::K3);
        assert!("plane".parse::<ObjectKind>().is_err());
    }

    #[test]
    fn bad_override_key() {
        let c = RunConfig::from_json(r#"{"overrides": {"s6": "a"}}"#).unwrap();
        assert!(matches!(c.suite_options(), Err(Error::Config(_))));
    }
}
