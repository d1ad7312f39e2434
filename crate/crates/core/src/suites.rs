//! Verification suites shared by the command line and the acceptance tests.
//! Every check records the identity it tests and, on failure, the first
//! offending expression.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::GaussianRational;
use crate::error::{Error, Result};
use crate::extension::rings::ABCD;
use crate::extension::{
    corollary_equations, extended_equations, closed_form_eta, closed_form_xi, q_tilde, residuals, restriction_matches,
    solve_membership, verify_kernel, verify_presentation, DegreeBound, ExtensionData, MembershipOutcome,
    MembershipProblem,
};
use crate::involution::fano::{check_phi_equivariance, check_tprime_swap, fixed_planes_check, plane_check};
use crate::involution::godeaux::{generator_dimensions, EXPECTED_DIMENSIONS};
use crate::involution::{
    candidate_point, check_curve_involution, check_k3_involution, fixed_quartic, godeaux_assembly, sigma_t, sigma_w,
    verify_fixed_point, BranchSwapData, EigenspaceTable, GodeauxChoices,
};
use crate::random::Sampler;
use crate::series::{EpsInt, GodeauxAnalysis};
use crate::tower::{construct_curve, construct_e, construct_k3, node_count, BranchData, TprimeParams};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: String,
    /// The identity or property being tested.
    pub identity: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    fn new(id: impl Into<String>, identity: impl Into<String>, passed: bool, detail: Option<String>) -> Self {
        Self {
            id: id.into(),
            identity: identity.into(),
            passed,
            detail: if passed { None } else { detail },
        }
    }

    fn from_result(id: impl Into<String>, identity: impl Into<String>, r: Result<Option<String>>) -> Self {
        match r {
            Ok(None) => Self::new(id, identity, true, None),
            Ok(Some(d)) => Self::new(id, identity, false, Some(d)),
            Err(e) => Self::new(id, identity, false, Some(e.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }
}

/// Named groups of checks selectable from the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Presentation,
    Kernel,
    Corollary,
    Uniqueness,
    Hilbert,
    Involution,
    Godeaux,
    Nodes,
    All,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Presentation,
        Suite::Kernel,
        Suite::Corollary,
        Suite::Uniqueness,
        Suite::Hilbert,
        Suite::Involution,
        Suite::Godeaux,
        Suite::Nodes,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Presentation => "presentation",
            Suite::Kernel => "kernel",
            Suite::Corollary => "corollary",
            Suite::Uniqueness => "uniqueness",
            Suite::Hilbert => "hilbert",
            Suite::Involution => "involution",
            Suite::Godeaux => "godeaux",
            Suite::Nodes => "nodes",
            Suite::All => "all",
        }
    }

    /// Expands `All` and sorts.
    pub fn expand(list: &[Suite]) -> Vec<Suite> {
        let mut out: Vec<Suite> = if list.is_empty() || list.contains(&Suite::All) {
            Suite::ALL.to_vec()
        } else {
            list.to_vec()
        };
        out.sort();
        out.dedup();
        out
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .iter()
            .chain([&Suite::All])
            .find(|x| x.name() == s)
            .copied()
            .ok_or_else(|| Error::Config(format!("unknown suite `{s}`")))
    }
}

/// Replacement correction forms applied on top of the standard solution,
/// keyed `s1..s5`, `t1..t5`.
pub type Overrides = Vec<(String, String)>;

/// Inputs of the suites.
#[derive(Debug, Clone)]
pub struct SuiteOptions {
    pub seed: u64,
    pub truncation: usize,
    pub bound: DegreeBound,
    pub overrides: Overrides,
    pub godeaux: GodeauxChoices,
    pub curve_alphas: Option<[GaussianRational; 6]>,
    pub branch_swap: Option<BranchSwapData>,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        Self {
            seed: DEFAULT_SEED,
            truncation: crate::series::DEFAULT_TRUNCATION,
            bound: DegreeBound::Natural,
            overrides: Vec::new(),
            godeaux: GodeauxChoices::default(),
            curve_alphas: None,
            branch_swap: None,
        }
    }
}

pub const DEFAULT_SEED: u64 = 20;

pub fn run_suite(suite: Suite, opts: &SuiteOptions) -> Vec<SuiteReport> {
    let s = opts.seed;
    match suite {
        Suite::Presentation => vec![presentation_suite(), tower_suite(s), restriction_suite(s)],
        Suite::Kernel => vec![kernel_suite(s, &opts.overrides)],
        Suite::Corollary => vec![corollary_suite(s)],
        Suite::Uniqueness => vec![uniqueness_suite(s, opts.bound), oracle_suite(s)],
        Suite::Hilbert => vec![hilbert_suite(opts.truncation)],
        Suite::Involution => vec![involution_suite(s, opts.curve_alphas.as_ref(), opts.branch_swap.as_ref())],
        Suite::Godeaux => vec![godeaux_suite(&opts.godeaux)],
        Suite::Nodes => vec![nodes_suite(s)],
        Suite::All => run_suites(&Suite::ALL, opts),
    }
}

/// Runs the selected suites on separate threads. The result is ordered by
/// suite and then by check id.
pub fn run_suites(list: &[Suite], opts: &SuiteOptions) -> Vec<SuiteReport> {
    let suites = Suite::expand(list);
    let mut reports: Vec<SuiteReport> = std::thread::scope(|scope| {
        let handles: Vec<_> = suites
            .iter()
            .map(|&suite| scope.spawn(move || run_suite(suite, opts)))
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("suite thread panicked"))
            .collect()
    });
    for r in &mut reports {
        r.checks.sort_by(|a, b| a.id.cmp(&b.id));
    }
    reports
}

/// Scalars `(alpha, beta)` drawn from `seed`, with `alpha beta != 1`.
pub fn sampled_scalars(seed: u64) -> (GaussianRational, GaussianRational) {
    let mut rng = Sampler::new(seed);
    loop {
        let (a, b) = (rng.scalar(), rng.scalar());
        if !(&a * &b).is_one() {
            return (a, b);
        }
    }
}

/// The columns of `A` map to zero in `M`.
pub fn presentation_suite() -> SuiteReport {
    SuiteReport {
        suite: "presentation".into(),
        checks: vec![Check::new(
            "A-columns",
            "(1, u, v, uv) A maps to 0 in M",
            verify_presentation(),
            Some("some column of A has a nonzero image".into()),
        )],
    }
}

/// Every equation of `D`, `E` and `T` pulls back to zero, five seeds each.
pub fn tower_suite(seed: u64) -> SuiteReport {
    let mut checks = Vec::new();
    for k in 0..5 {
        let s = seed + k;
        let curve = BranchData::random_curve(s);
        let k3 = BranchData::random_k3(s);
        let builds: [(&str, Result<_>); 3] = [
            ("D", construct_curve(&curve)),
            ("E", construct_e(&curve)),
            ("T", construct_k3(&k3)),
        ];
        for (name, built) in builds {
            let r = built.and_then(|v| v.verify()).map(|rep| {
                rep.first_failure()
                    .map(|f| format!("equation {} fails: {}", f.index + 1, f.equation))
            });
            checks.push(Check::from_result(
                format!("{name}/seed-{s}"),
                format!("equations of {name} vanish on the cover"),
                r,
            ));
        }
    }
    SuiteReport {
        suite: "tower".into(),
        checks,
    }
}

fn random_params(seed: u64) -> TprimeParams {
    let (alpha, beta) = sampled_scalars(seed);
    let mut rng = Sampler::new(seed ^ 0x5eed);
    TprimeParams {
        alpha,
        beta,
        l: std::array::from_fn(|_| rng.scalar()),
        m: std::array::from_fn(|_| rng.scalar()),
    }
}

/// `W'` restricted to `a = b = c = d = 0` is `T'`.
pub fn restriction_suite(seed: u64) -> SuiteReport {
    let mut params: Vec<(String, TprimeParams)> = (0..3)
        .map(|k| (format!("seed-{}", seed + k), random_params(seed + k)))
        .collect();
    params.push(("bare".into(), TprimeParams::bare(GaussianRational::from_integer(2), GaussianRational::from_integer(3))));
    let checks = params
        .into_iter()
        .map(|(id, p)| {
            let r = restriction_matches(&p).map(|ok| (!ok).then(|| "restriction differs from T'".to_string()));
            Check::from_result(format!("restriction/{id}"), "W' at a = b = c = d = 0 equals T'", r)
        })
        .collect();
    SuiteReport {
        suite: "restriction".into(),
        checks,
    }
}

fn with_overrides(data: ExtensionData, overrides: &Overrides) -> Result<ExtensionData> {
    let mut data = data;
    for (key, text) in overrides {
        let form = data.form(text)?;
        let (kind, idx) = key.split_at(1);
        let i: usize = idx
            .parse()
            .map_err(|_| Error::Config(format!("override key `{key}` must be s1..s5 or t1..t5")))?;
        data = match kind {
            "s" => data.with_s(i, &form)?,
            "t" => data.with_t(i, &form)?,
            _ => return Err(Error::Config(format!("override key `{key}` must be s1..s5 or t1..t5"))),
        };
    }
    Ok(data)
}

fn kernel_check(data: &ExtensionData) -> Result<Option<String>> {
    for (k, e) in extended_equations(data)?.iter().enumerate() {
        if !verify_kernel(e, data)? {
            let image = crate::extension::residual::kernel_image(&crate::extension::phi(data)?, e)?;
            return Ok(Some(format!("equation {} maps to {image}", k + 1)));
        }
    }
    Ok(None)
}

/// Both extended branch equations lie in the kernel of `Phi`, for twenty
/// seeded scalar pairs and with `alpha`, `beta` symbolic.
pub fn kernel_suite(seed: u64, overrides: &Overrides) -> SuiteReport {
    let identity = "extended branch equations lie in ker Phi";
    let mut checks = Vec::new();
    for k in 0..20 {
        let (a, b) = sampled_scalars(seed + k);
        let r = with_overrides(ExtensionData::standard_solution(&a, &b), overrides).and_then(|d| kernel_check(&d));
        checks.push(Check::from_result(format!("kernel/alpha={a},beta={b}"), identity, r));
    }
    let sym = with_overrides(ExtensionData::symbolic_standard_solution(), overrides).and_then(|d| kernel_check(&d));
    checks.push(Check::from_result("kernel/symbolic", identity, sym));
    SuiteReport {
        suite: "kernel".into(),
        checks,
    }
}

/// The four extended `Q_i` lie in the kernel for ten seeded scalar pairs,
/// and `Q2` is refused at `alpha beta = 1`.
pub fn corollary_suite(seed: u64) -> SuiteReport {
    let mut checks = Vec::new();
    for k in 0..10 {
        let (a, b) = sampled_scalars(seed + 100 + k);
        let data = ExtensionData::standard_solution(&a, &b);
        let r = corollary_equations(&data).and_then(|eqs| {
            for (i, e) in eqs.iter().enumerate() {
                if !verify_kernel(e, &data)? {
                    return Ok(Some(format!("Q{} extension leaves the kernel", i + 1)));
                }
            }
            Ok(None)
        });
        checks.push(Check::from_result(
            format!("corollary/alpha={a},beta={b}"),
            "extended Q1..Q4 lie in ker Phi",
            r,
        ));
    }
    let data = ExtensionData::standard_solution(&GaussianRational::from_integer(2), &"1/2".parse().unwrap());
    let rejected = matches!(q_tilde(&data, 2), Err(Error::Domain(_)));
    checks.push(Check::new(
        "corollary/unit-product",
        "the extension of Q2 is refused at alpha beta = 1",
        rejected,
        Some("Q2 was extended at alpha beta = 1".into()),
    ));
    SuiteReport {
        suite: "corollary".into(),
        checks,
    }
}

const CORRECTIONS: [(char, usize); 6] = [('s', 2), ('s', 4), ('s', 5), ('t', 2), ('t', 4), ('t', 5)];

/// Perturbing any one correction by a random form of its degree makes the
/// residual leave `R + R z1 + R z2`.
pub fn uniqueness_suite(seed: u64, bound: DegreeBound) -> SuiteReport {
    let mut checks = Vec::new();
    for k in 0..3 {
        let s = seed + 200 + k;
        let (a, b) = sampled_scalars(s);
        let data = ExtensionData::standard_solution(&a, &b);
        let mut rng = Sampler::new(s);
        for (kind, i) in CORRECTIONS {
            let degree = crate::extension::data::CORRECTION_DEGREES[i - 1];
            let delta = rng.form(&data.rings().r, &ABCD, degree);
            let r = (|| -> Result<Option<String>> {
                let (bad, pick_k) = match kind {
                    's' => (data.with_s(i, &(data.s(i) + &delta))?, true),
                    _ => (data.with_t(i, &(data.t(i) + &delta))?, false),
                };
                let (res_k, res_l) = residuals(&bad)?;
                let target = if pick_k { res_k } else { res_l }.target(bad.rings())?;
                Ok(match solve_membership(&bad, &target, bound)? {
                    MembershipOutcome::Inconsistent => None,
                    other => Some(format!("membership solver returned {}", other.label())),
                })
            })();
            checks.push(Check::from_result(
                format!("uniqueness/seed-{s}/{kind}{i}"),
                format!("perturbed {kind}{i} leaves the residual outside R + R z1 + R z2"),
                r,
            ));
        }
    }
    SuiteReport {
        suite: "uniqueness".into(),
        checks,
    }
}

/// The solver recovers the closed-form `xi`, `eta` up to its nullspace.
pub fn oracle_suite(seed: u64) -> SuiteReport {
    let mut checks = Vec::new();
    for k in 0..3 {
        let (a, b) = sampled_scalars(seed + 300 + k);
        let data = ExtensionData::standard_solution(&a, &b);
        let r = (|| -> Result<Option<String>> {
            let (res_k, res_l) = residuals(&data)?;
            let problem = MembershipProblem::new(&data, 6, DegreeBound::Natural)?;
            for (name, res, closed) in [("xi", res_k, closed_form_xi(&data)), ("eta", res_l, closed_form_eta(&data))] {
                let out = problem.solve(&res.target(data.rings())?)?;
                let Some(sol) = out.solution() else {
                    return Ok(Some(format!("{name}: solver returned {}", out.label())));
                };
                if closed.image(&data)? != res.target(data.rings())? {
                    return Ok(Some(format!("{name}: closed form fails re-substitution")));
                }
                if !problem.agrees(sol, &closed)? {
                    return Ok(Some(format!("{name}: solution differs beyond the nullspace")));
                }
            }
            Ok(None)
        })();
        checks.push(Check::from_result(
            format!("oracle/alpha={a},beta={b}"),
            "solved xi, eta agree with the closed forms modulo the nullspace",
            r,
        ));
    }
    SuiteReport {
        suite: "oracle".into(),
        checks,
    }
}

fn e(inv: i64, anti: i64) -> EpsInt {
    EpsInt::new(inv, anti)
}

/// Expected series coefficients through `t^3`.
pub const SERIES_HEAD: [(i64, i64); 4] = [(1, 0), (0, 1), (2, 2), (4, 4)];
/// Expected numerator coefficients through `t^8`.
pub const NUMERATOR_HEAD: [(i64, i64); 9] = [(1, 0), (0, 0), (0, 0), (0, 0), (-1, 1), (-2, -2), (-6, -4), (0, 0), (8, 7)];

/// The covering series and both numerators against the expected values.
pub fn hilbert_suite(truncation: usize) -> SuiteReport {
    let mut checks = Vec::new();
    match GodeauxAnalysis::run(truncation.max(8)) {
        Err(err) => checks.push(Check::new("hilbert/run", "series analysis runs", false, Some(err.to_string()))),
        Ok(a) => {
            let cmp = |id: &str, identity: &str, got: Vec<EpsInt>, want: Vec<EpsInt>| {
                let ok = got == want;
                Check::new(id, identity, ok, Some(format!("got {got:?}, expected {want:?}")))
            };
            checks.push(cmp(
                "hilbert/series",
                "P(t, e) = 1 + e t + (2+2e) t^2 + (4+4e) t^3 + ...",
                (0..4).map(|n| a.series.coeff(n)).collect(),
                SERIES_HEAD.iter().map(|&(x, y)| e(x, y)).collect(),
            ));
            checks.push(cmp(
                "hilbert/numerator",
                "numerator over the generators of degree <= 3, through t^8",
                (0..9).map(|n| a.numerator.coeff(n)).collect(),
                NUMERATOR_HEAD.iter().map(|&(x, y)| e(x, y)).collect(),
            ));
            checks.push(cmp(
                "hilbert/extended-numerator",
                "with a generator of degree 4, anti-invariant, the numerator starts 1 - t^4",
                (0..5).map(|n| a.extended_numerator.coeff(n)).collect(),
                vec![e(1, 0), e(0, 0), e(0, 0), e(0, 0), e(-1, 0)],
            ));
        }
    }
    SuiteReport {
        suite: "hilbert".into(),
        checks,
    }
}

/// Ten transversal intersection points of the branch curves, five seeds.
pub fn nodes_suite(seed: u64) -> SuiteReport {
    let checks = (0..5)
        .map(|k| {
            let s = seed + 400 + k;
            let r = node_count(&BranchData::random_k3(s)).map(|n| {
                (!(n.transversal && n.points == crate::tower::nodes::EXPECTED_NODES))
                    .then(|| format!("{} points, transversal = {}", n.points, n.transversal))
            });
            Check::from_result(format!("nodes/seed-{s}"), "the branch curves meet transversally in 10 points", r)
        })
        .collect();
    SuiteReport {
        suite: "nodes".into(),
        checks,
    }
}

fn bool_check(id: &str, identity: &str, r: Result<bool>) -> Check {
    Check::from_result(id, identity, r.map(|ok| (!ok).then(|| "identity fails".to_string())))
}

fn q(s: &str) -> GaussianRational {
    s.parse().unwrap()
}

/// Engineered data whose fixed quartic is `l^4 - 1`.
pub fn engineered_swap_data() -> BranchSwapData {
    BranchSwapData {
        alpha: [q("1"), q("0"), q("0"), q("0")],
        beta: [q("0"), q("0"), q("0"), q("1")],
    }
}

fn k3_check(data: &BranchSwapData, engineered: bool) -> Result<Option<String>> {
    let (t, report) = check_k3_involution(data)?;
    if !report.passed() {
        return Ok(Some(format!("{report:?}")));
    }
    let s = sigma_t();
    if engineered {
        let one = verify_fixed_point(&t, &candidate_point(&q("1"))?, &s)?;
        if !one.passed() || !one.witness.as_ref().is_some_and(|w| w.has_mu(&GaussianRational::i())) {
            return Ok(Some(format!("lambda = 1: {one:?}")));
        }
        let two = verify_fixed_point(&t, &candidate_point(&q("2"))?, &s)?;
        if two.on_variety {
            return Ok(Some("lambda = 2 lies on T".into()));
        }
    }
    let quartic = fixed_quartic(data);
    for lam in ["1", "-1", "i", "-i", "2", "1/2", "3"] {
        let l = q(lam);
        let c = verify_fixed_point(&t, &candidate_point(&l)?, &s)?;
        if c.passed() != quartic.evaluate(&l).is_zero() {
            return Ok(Some(format!("lambda = {lam}: check {c:?} disagrees with the quartic {quartic}")));
        }
    }
    Ok(None)
}

/// The involutions on `E`, `D`, `T`, P^5, `T'` and `W'`.
pub fn involution_suite(
    seed: u64,
    curve_alphas: Option<&[GaussianRational; 6]>,
    branch_swap: Option<&BranchSwapData>,
) -> SuiteReport {
    let mut checks = Vec::new();
    let mut rng = Sampler::new(seed + 500);
    let alphas: [GaussianRational; 6] = match curve_alphas {
        Some(a) => a.clone(),
        None => std::array::from_fn(|_| rng.nonzero_real()),
    };
    let generic = !alphas[0].is_zero() && !alphas[5].is_zero();
    checks.push(Check::from_result(
        "curve/generic",
        "sigma^2 = tau on E, sigma preserves D and E, no fixed points when a1 a6 != 0",
        check_curve_involution(&alphas).map(|r| {
            let ok = if generic { r.passed() } else { r.identities_hold() };
            (!ok).then(|| format!("{r:?}"))
        }),
    ));
    let mut degenerate = alphas.clone();
    degenerate[0] = GaussianRational::zero();
    checks.push(Check::from_result(
        "curve/a1-zero",
        "a1 = 0 produces a fixed point at s = (1 : 0)",
        check_curve_involution(&degenerate).map(|r| {
            let found = r.fixed_points.iter().any(|p| p.s[1].is_zero());
            (!(r.identities_hold() && found)).then(|| format!("{r:?}"))
        }),
    ));

    let k3 = match branch_swap {
        Some(d) => k3_check(d, false),
        None => k3_check(&engineered_swap_data(), true),
    };
    checks.push(Check::from_result(
        "k3/fixed-points",
        "sigma preserves T; the root lambda = 1 of l^4 - 1 gives a fixed point with mu = i, lambda = 2 is off T",
        k3,
    ));

    let sym = ExtensionData::equivariant_solution(None);
    checks.push(Check::from_result(
        "phi/symbolic",
        "Phi o sigma = sigma o Phi identically in alpha",
        check_phi_equivariance(&sym).map(|r| (!r.passed()).then(|| format!("{r:?}"))),
    ));
    for a in ["2", "0"] {
        let d = ExtensionData::equivariant_solution(Some(&q(a)));
        checks.push(Check::from_result(
            format!("phi/alpha={a}"),
            "Phi o sigma = sigma o Phi",
            check_phi_equivariance(&d).map(|r| (!r.passed()).then(|| format!("{r:?}"))),
        ));
    }
    let l: [GaussianRational; 4] = std::array::from_fn(|_| rng.scalar());
    let alpha = q("2");
    checks.push(Check::from_result(
        "planes",
        "two fixed planes of P^5, fixed images, three isolated fixed points on T'",
        fixed_planes_check(&alpha, &l).map(|r| (!r.passed()).then(|| format!("{r:?}"))),
    ));
    let wrong = plane_check(
        &ExtensionData::equivariant_solution(Some(&alpha)),
        "u = v, a = d, b = c",
        &[("v", "u"), ("d", "a"), ("c", "b")],
    );
    checks.push(Check::from_result(
        "planes/negative",
        "the plane u = v, a = d, b = c is not fixed",
        wrong.map(|c| c.p5_witness.map(|w| format!("unexpected witness {w:?}"))),
    ));
    checks.push(bool_check(
        "tprime/swap",
        "sigma exchanges the two equations of T' and of W'",
        check_tprime_swap(&alpha, &l).map(|(t, w)| t && w),
    ));
    checks.push(Check::from_result(
        "table/dimensions",
        "eigenspace dimensions (2,2), (1,3), (2,2), (0,1) in degrees 1..4",
        generator_dimensions(&sigma_w())
            .map(|d| (d != EXPECTED_DIMENSIONS).then(|| format!("{d:?}"))),
    ));
    SuiteReport {
        suite: "involution".into(),
        checks,
    }
}

/// The chosen sections, the eigenspace table and the sigma-compatible `W'`.
pub fn godeaux_suite(choices: &GodeauxChoices) -> SuiteReport {
    let mut checks = Vec::new();
    let l = [q("1"), q("2"), q("-1"), q("1/3")];
    checks.push(Check::from_result(
        "godeaux/assembly",
        "sections of type (1+, 1+, 1-, 2-) are eigenvectors and W' is sigma-stable",
        godeaux_assembly(choices, &q("3"), &l).map(|r| (!r.passed()).then(|| format!("{r:?}"))),
    ));
    checks.push(Check::from_result(
        "godeaux/table",
        "every table entry is an eigenvector of its stated sign",
        EigenspaceTable::standard()
            .failures(&sigma_w())
            .map(|f| (!f.is_empty()).then(|| f.join(", "))),
    ));
    let wrong = GodeauxChoices {
        anti_quadric: "y1 + y3".into(),
        ..GodeauxChoices::default()
    };
    checks.push(Check::new(
        "godeaux/reject",
        "y1 + y3 is refused as an anti-invariant quadric",
        godeaux_assembly(&wrong, &q("3"), &l).is_err(),
        Some("accepted".into()),
    ));
    SuiteReport {
        suite: "godeaux".into(),
        checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert_eq!(Suite::expand(&[Suite::All]).len(), 8);
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn tampered_override_fails_kernel() {
        let r = kernel_suite(1, &vec![("s2".into(), "a + b".into())]);
        assert!(!r.passed());
        assert!(r.first_failure().unwrap().detail.as_ref().unwrap().contains("maps to"));
    }

    #[test]
    fn sampled_scalars_avoid_unit_product() {
        for s in 0..50 {
            let (a, b) = sampled_scalars(s);
            assert!(!(&a * &b).is_one());
        }
    }
}
