//! Auditors for the inequalities and identities relating difference sets,
//! distance sets, product sets and slope sets.
//!
//! Exact inequalities are audited pass/fail. Statements that only hold up
//! to an unspecified constant are reported as a ratio with
//! [`Holds::NotApplicable`].

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::geometry::{self, OriginLine, Point, PointSet, Quadrant, Slope};
use crate::numset::NumSet;
use crate::scalar::{format_significant, Scalar};
use crate::setcalc::{self, Limits};

pub const SLOPE_NOTE: &str = "slope counts treat the vertical direction (inf) as one slope";
pub const DSTAR_NOTE: &str = "D* = D \\ {0} substituted for D in the product-sumset step";
pub const NORMALIZATION_NOTE: &str =
    "(i) gated on the literal |D^2| normalization; the |D| normalization is reported only";
pub const PRODUCT_SUMSET_NOTE: &str =
    "holds refers to the replayed chain LB <= |Pq+Pq| <= |P+P| <= lhs; ratio is reported only";
pub const QUADRANT_NOTE: &str =
    "per-line quadrant minimum n* used in place of |S|/2; ties select quadrant I (resp. II)";

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum StatementId {
    Differencing,
    Plunnecke,
    Solymosi,
    ProductSumset,
    Ungar,
    MainTheorem,
    RudinExponent,
}

impl StatementId {
    pub const ALL: [StatementId; 7] = [
        StatementId::Differencing,
        StatementId::Plunnecke,
        StatementId::Solymosi,
        StatementId::ProductSumset,
        StatementId::Ungar,
        StatementId::MainTheorem,
        StatementId::RudinExponent,
    ];

    /// Command-line spelling, e.g. `product-sumset`.
    pub fn name(self) -> &'static str {
        match self {
            StatementId::Differencing => "differencing",
            StatementId::Plunnecke => "plunnecke",
            StatementId::Solymosi => "solymosi",
            StatementId::ProductSumset => "product-sumset",
            StatementId::Ungar => "ungar",
            StatementId::MainTheorem => "main-theorem",
            StatementId::RudinExponent => "rudin-exponent",
        }
    }

    pub fn from_name(s: &str) -> Option<StatementId> {
        StatementId::ALL.into_iter().find(|id| id.name() == s)
    }
}

/// Outcome of an audit: an exact verdict, or not applicable.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Holds {
    True,
    False,
    NotApplicable,
}

impl Holds {
    pub fn as_str(self) -> &'static str {
        match self {
            Holds::True => "true",
            Holds::False => "false",
            Holds::NotApplicable => "n/a",
        }
    }
}

impl From<bool> for Holds {
    fn from(b: bool) -> Self {
        if b {
            Holds::True
        } else {
            Holds::False
        }
    }
}

impl Serialize for Holds {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    AtMost,
    AtLeast,
}

impl Relation {
    pub fn symbol(self) -> &'static str {
        match self {
            Relation::AtMost => "<=",
            Relation::AtLeast => ">=",
        }
    }

    pub fn test(self, lhs: &Scalar, rhs: &Scalar) -> bool {
        match self {
            Relation::AtMost => lhs <= rhs,
            Relation::AtLeast => lhs >= rhs,
        }
    }
}

/// One audited statement on one instance.
#[derive(Clone, Debug, Serialize)]
pub struct AuditRecord {
    pub statement_id: StatementId,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub instance: Option<String>,
    pub sizes: BTreeMap<String, u64>,
    pub lhs: Scalar,
    pub rhs: Scalar,
    /// `lhs / rhs`, absent when `rhs = 0`.
    pub ratio: Option<Scalar>,
    pub approx_ratio: Option<String>,
    pub holds: Holds,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Value>,
    pub notes: Vec<String>,
    /// Approximate real-valued reports; every key ends in `_approx`.
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub metrics: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl AuditRecord {
    fn base(statement_id: StatementId, lhs: Scalar, rhs: Scalar, holds: Holds) -> Self {
        let ratio = lhs.checked_div(&rhs);
        let approx_ratio = ratio.as_ref().map(|r| format_significant(r.to_f64(), 6));
        AuditRecord {
            statement_id,
            instance: None,
            sizes: BTreeMap::new(),
            lhs,
            rhs,
            ratio,
            approx_ratio,
            holds,
            witnesses: None,
            notes: Vec::new(),
            metrics: BTreeMap::new(),
            error: None,
        }
    }

    /// A pass/fail record whose verdict is `lhs rel rhs`.
    pub fn compared(id: StatementId, lhs: Scalar, rhs: Scalar, rel: Relation) -> Self {
        let holds = rel.test(&lhs, &rhs).into();
        AuditRecord::base(id, lhs, rhs, holds)
    }

    /// A ratio report without a verdict.
    pub fn reported(id: StatementId, lhs: Scalar, rhs: Scalar) -> Self {
        AuditRecord::base(id, lhs, rhs, Holds::NotApplicable)
    }

    /// A record standing in for an instance that could not be audited.
    pub fn failed(id: StatementId, instance: Option<String>, err: &Error) -> Self {
        let mut rec = AuditRecord::base(id, Scalar::zero(), Scalar::zero(), Holds::NotApplicable);
        rec.instance = instance;
        rec.error = Some(err.to_string());
        rec
    }

    pub fn with_instance(mut self, instance: impl Into<String>) -> Self {
        self.instance = Some(instance.into());
        self
    }

    fn size(mut self, name: &str, v: impl TryInto<u64>) -> Self {
        self.sizes
            .insert(name.to_string(), v.try_into().unwrap_or(u64::MAX));
        self
    }

    fn note(mut self, note: &str) -> Self {
        self.notes.push(note.to_string());
        self
    }

    fn metric(mut self, name: &str, v: f64) -> Self {
        self.metrics
            .insert(name.to_string(), format_significant(v, 6));
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("audit records serialize")
    }
}

fn card(n: usize) -> Scalar {
    Scalar::from_int(n as i64)
}

// --- differencing -----------------------------------------------------------

/// Explicit representation of `2·d₁·d₂` as `x₁² + x₂² − x₃² − x₄²` with every
/// `xᵢ ∈ A − A`, where `d₁ = a₂ − a₁` and `d₂ = b₁ − b₂`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FourSquareWitness {
    pub element: Scalar,
    pub a1: Scalar,
    pub a2: Scalar,
    pub b1: Scalar,
    pub b2: Scalar,
}

impl FourSquareWitness {
    /// The four differences `b₁−a₁, b₂−a₂, b₁−a₂, b₂−a₁`.
    pub fn bases(&self) -> [Scalar; 4] {
        [
            &self.b1 - &self.a1,
            &self.b2 - &self.a2,
            &self.b1 - &self.a2,
            &self.b2 - &self.a1,
        ]
    }

    /// Checks the representation independently of how it was found.
    pub fn is_valid_for(&self, d: &NumSet) -> bool {
        let [x1, x2, x3, x4] = self.bases();
        let value = x1.square() + x2.square() - x3.square() - x4.square();
        value == self.element && [&x1, &x2, &x3, &x4].iter().all(|x| d.contains(x))
    }
}

/// Both sides of the four-square identity for one quadruple:
/// `(b₁−a₁)² + (b₂−a₂)² − (b₁−a₂)² − (b₂−a₁)²` and `2(a₂−a₁)(b₁−b₂)`.
pub fn differencing_identity(
    a1: &Scalar,
    a2: &Scalar,
    b1: &Scalar,
    b2: &Scalar,
) -> (Scalar, Scalar) {
    let lhs = (b1 - a1).square() + (b2 - a2).square() - (b1 - a2).square() - (b2 - a1).square();
    let rhs = Scalar::from_int(2) * (a2 - a1) * (b1 - b2);
    (lhs, rhs)
}

#[derive(Clone, Debug)]
pub struct DifferencingReport {
    pub a_card: usize,
    pub d_card: usize,
    pub quadruples: u64,
    pub identity_failures: u64,
    pub counterexample: Option<[Scalar; 4]>,
    /// `2·(D·D)`.
    pub doubled_products: NumSet,
    /// One witness per element of `2·(D·D)` that received one, in order.
    pub witnesses: Vec<FourSquareWitness>,
    /// Witnesses that passed independent validation.
    pub valid_witnesses: usize,
}

/// Checks the four-square identity on all of `A⁴` and exhibits
/// `2·(D·D) ⊆ 2D² − 2D²` element by element without building the right side.
pub fn differencing_report(a: &NumSet, lim: &Limits) -> Result<DifferencingReport> {
    if a.is_empty() {
        return Err(Error::EmptySet);
    }
    let n = a.len() as u128;
    lim.check_pairs("check_differencing", n * n * n * n)?;
    let d = setcalc::difference_set(a, a, lim)?;
    let dd = setcalc::product_set(&d, &d, lim)?;
    let doubled = setcalc::dilate(&dd, &Scalar::from_int(2));

    let xs = a.to_vec();
    let mut found: BTreeMap<Scalar, FourSquareWitness> = BTreeMap::new();
    let mut failures = 0u64;
    let mut counterexample = None;
    for a1 in &xs {
        for a2 in &xs {
            for b1 in &xs {
                for b2 in &xs {
                    let (lhs, rhs) = differencing_identity(a1, a2, b1, b2);
                    if lhs != rhs {
                        failures += 1;
                        counterexample.get_or_insert_with(|| {
                            [a1.clone(), a2.clone(), b1.clone(), b2.clone()]
                        });
                        continue;
                    }
                    found.entry(rhs).or_insert_with_key(|e| FourSquareWitness {
                        element: e.clone(),
                        a1: a1.clone(),
                        a2: a2.clone(),
                        b1: b1.clone(),
                        b2: b2.clone(),
                    });
                }
            }
        }
    }
    let witnesses: Vec<FourSquareWitness> =
        doubled.iter().filter_map(|e| found.remove(&e)).collect();
    let valid_witnesses = witnesses.iter().filter(|w| w.is_valid_for(&d)).count();
    Ok(DifferencingReport {
        a_card: a.len(),
        d_card: d.len(),
        quadruples: (n * n * n * n) as u64,
        identity_failures: failures,
        counterexample,
        doubled_products: doubled,
        witnesses,
        valid_witnesses,
    })
}

pub fn check_differencing(a: &NumSet, lim: &Limits) -> Result<AuditRecord> {
    let r = differencing_report(a, lim)?;
    let mut rec = AuditRecord::compared(
        StatementId::Differencing,
        card(r.valid_witnesses),
        card(r.doubled_products.len()),
        Relation::AtLeast,
    );
    if r.identity_failures > 0 {
        rec.holds = Holds::False;
    }
    rec.witnesses = Some(json!({
        "representations": r.witnesses,
        "counterexample": r.counterexample,
    }));
    Ok(rec
        .size("a", r.a_card)
        .size("diff", r.d_card)
        .size("doubled_products", r.doubled_products.len())
        .size("quadruples", r.quadruples)
        .size("identity_failures", r.identity_failures))
}

// --- Plünnecke–Ruzsa ---------------------------------------------------------

/// `|mS − nS| ≤ (|S+S| / |S|)^(m+n) · |S|`.
pub fn check_plunnecke(s: &NumSet, m: u32, n: u32, lim: &Limits) -> Result<AuditRecord> {
    let combo = setcalc::iterated_combination(m, n, s, lim)?;
    let doubling = setcalc::sumset(s, s, lim)?;
    let k = card(s.len());
    let growth = card(doubling.len()).checked_div(&k).expect("nonempty set");
    let rhs = growth.pow(m + n) * k;
    Ok(AuditRecord::compared(
        StatementId::Plunnecke,
        card(combo.len()),
        rhs,
        Relation::AtMost,
    )
    .size("s", s.len())
    .size("s_plus_s", doubling.len())
    .size("m_s_minus_n_s", combo.len())
    .size("m", m)
    .size("n", n))
}

// --- Solymosi ----------------------------------------------------------------

/// `|P + P| ≥ (L − 1)·n²` for points in one open quadrant on `L` origin
/// lines carrying at least `n` points each. Preconditions are verified and
/// violations are errors, not failed audits.
pub fn check_solymosi(
    p: &PointSet,
    slopes: &[Scalar],
    n: u64,
    lim: &Limits,
) -> Result<AuditRecord> {
    let lines: BTreeSet<&Scalar> = slopes.iter().collect();
    if lines.is_empty() {
        return Err(Error::Precondition("no lines given".into()));
    }
    if p.is_empty() {
        return Err(Error::EmptySet);
    }
    let mut quadrant = None;
    let mut on_line: BTreeMap<&Scalar, u64> = lines.iter().map(|s| (*s, 0)).collect();
    for pt in p.iter() {
        let q = pt
            .quadrant()
            .ok_or_else(|| Error::Precondition("point on axis".into()))?;
        if *quadrant.get_or_insert(q) != q {
            return Err(Error::Precondition("points span quadrants".into()));
        }
        let slope = pt.y.checked_div(&pt.x).expect("off-axis point");
        if let Some(c) = on_line.get_mut(&slope) {
            *c += 1;
        }
    }
    if let Some((s, c)) = on_line.iter().find(|(_, &c)| c < n) {
        return Err(Error::Precondition(format!(
            "line too poor: slope {s} carries {c} < {n} points"
        )));
    }
    let sums = geometry::pointset_sumset(p, p, lim)?;
    let l = lines.len() as u64;
    let rhs = Scalar::from_u128(l.saturating_sub(1) as u128 * n as u128 * n as u128);
    Ok(AuditRecord::compared(
        StatementId::Solymosi,
        card(sums.len()),
        rhs,
        Relation::AtLeast,
    )
    .size("points", p.len())
    .size("lines", l)
    .size("n", n)
    .size("sumset", sums.len()))
}

// --- product sumset ------------------------------------------------------------

/// Replay of the lower-bound chain for `|S·S + S·S|`.
#[derive(Clone, Debug, Serialize)]
pub struct ProductSumsetReplay {
    pub s_card: usize,
    pub product_card: usize,
    pub sum_card: usize,
    pub ratio_card: usize,
    /// `|S·S + S·S|²`.
    pub lhs: Scalar,
    /// `|S/S|·|S|²`.
    pub rhs: Scalar,
    pub construction_card: usize,
    pub construction_sum_card: usize,
    /// Quadrant whose lines were selected.
    pub quadrant: Quadrant,
    pub selected_slopes: Vec<Scalar>,
    /// Minimum per-line point count in the selected quadrant.
    pub n_star: u64,
    /// Selected points (on selected lines, in the selected quadrant).
    pub quadrant_card: usize,
    pub quadrant_sum_card: usize,
    /// `(L* − 1)·n*²`.
    pub lower_bound: Scalar,
    /// `LB ≤ |Pq + Pq| ≤ |P + P| ≤ lhs`.
    pub chain_holds: bool,
}

/// Selects the majority slope-sign class, then the majority quadrant within
/// it, ties going to the positive-slope class and to quadrant I (resp. II).
pub fn select_lines(lines: &[OriginLine]) -> (Quadrant, Vec<&OriginLine>) {
    let (pos, neg): (Vec<&OriginLine>, Vec<&OriginLine>) =
        lines.iter().partition(|l| l.slope.is_positive());
    let (class, first, second) = if pos.len() >= neg.len() {
        (pos, Quadrant::I, Quadrant::III)
    } else {
        (neg, Quadrant::II, Quadrant::IV)
    };
    let (a, b): (Vec<&OriginLine>, Vec<&OriginLine>) = class
        .into_iter()
        .partition(|l| 2 * l.quadrant_counts[first.index()] >= l.points);
    if a.len() >= b.len() {
        (first, a)
    } else {
        (second, b)
    }
}

pub fn product_sumset_replay(s: &NumSet, lim: &Limits) -> Result<ProductSumsetReplay> {
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    if s.contains_zero() {
        return Err(Error::Domain("0 in S: ratio set undefined".into()));
    }
    let ss = setcalc::product_set(s, s, lim)?;
    let sum = setcalc::sumset(&ss, &ss, lim)?;
    let ratios = setcalc::ratio_set(s, s, lim)?;
    let lhs = card(sum.len()).square();
    let rhs = card(ratios.len()) * card(s.len()).square();

    let c = geometry::solymosi_construct(s, lim)?;
    let p_sum = geometry::pointset_sumset(&c.points, &c.points, lim)?;
    let (quadrant, selected) = select_lines(&c.lines);
    let n_star = selected
        .iter()
        .map(|l| l.quadrant_counts[quadrant.index()] as u64)
        .min()
        .unwrap_or(0);
    let selected_slopes: Vec<Scalar> = selected.iter().map(|l| l.slope.clone()).collect();
    let pq: PointSet = c
        .points
        .iter()
        .filter(|pt| pt.quadrant() == Some(quadrant))
        .filter(|pt| {
            let slope = pt.y.checked_div(&pt.x).expect("off-axis point");
            selected_slopes.binary_search(&slope).is_ok()
        })
        .collect::<Vec<Point>>()
        .into_iter()
        .collect();
    let solymosi = check_solymosi(&pq, &selected_slopes, n_star, lim)?;
    let quadrant_sum_card = solymosi.sizes["sumset"] as usize;
    let l_star = selected.len() as u128;
    let lower_bound = Scalar::from_u128(l_star.saturating_sub(1) * (n_star as u128).pow(2));
    let chain_holds = lower_bound <= card(quadrant_sum_card)
        && quadrant_sum_card <= p_sum.len()
        && card(p_sum.len()) <= lhs;
    Ok(ProductSumsetReplay {
        s_card: s.len(),
        product_card: ss.len(),
        sum_card: sum.len(),
        ratio_card: ratios.len(),
        lhs,
        rhs,
        construction_card: c.points.len(),
        construction_sum_card: p_sum.len(),
        quadrant,
        selected_slopes,
        n_star,
        quadrant_card: pq.len(),
        quadrant_sum_card,
        lower_bound,
        chain_holds,
    })
}

pub fn check_product_sumset(s: &NumSet, lim: &Limits) -> Result<AuditRecord> {
    let r = product_sumset_replay(s, lim)?;
    let mut rec = AuditRecord::reported(StatementId::ProductSumset, r.lhs.clone(), r.rhs.clone());
    rec.holds = r.chain_holds.into();
    rec.witnesses = Some(json!({
        "quadrant": r.quadrant,
        "selected_lines": r.selected_slopes.len(),
        "n_star": r.n_star,
        "lower_bound": r.lower_bound,
        "quadrant_sumset": r.quadrant_sum_card,
        "construction_sumset": r.construction_sum_card,
    }));
    Ok(rec
        .size("s", r.s_card)
        .size("s_times_s", r.product_card)
        .size("ss_plus_ss", r.sum_card)
        .size("s_over_s", r.ratio_card)
        .size("construction", r.construction_card)
        .note(PRODUCT_SUMSET_NOTE)
        .note(QUADRANT_NOTE))
}

// --- Ungar ---------------------------------------------------------------------

/// `|slopes(P)| ≥ |P| − 1` for non-collinear `P`.
pub fn check_ungar(p: &PointSet, lim: &Limits) -> Result<AuditRecord> {
    let slopes = geometry::slope_set(p, lim)?;
    let lhs = card(slopes.len());
    let rhs = card(p.len() - 1);
    let rec = if geometry::is_collinear(p) {
        AuditRecord::reported(StatementId::Ungar, lhs, rhs)
            .note("collinear point set: bound not applicable")
    } else {
        AuditRecord::compared(StatementId::Ungar, lhs, rhs, Relation::AtLeast)
    };
    Ok(rec
        .size("points", p.len())
        .size("slopes", slopes.len())
        .note(SLOPE_NOTE))
}

// --- main theorem ---------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Depth {
    RatioOnly,
    FullChain,
}

/// One exactly-checked inequality of the proof chain.
#[derive(Clone, Debug, Serialize)]
pub struct ChainStep {
    pub step: String,
    pub lhs: Scalar,
    pub rhs: Scalar,
    pub relation: &'static str,
    pub holds: bool,
    /// Whether the step contributes to the record's verdict.
    pub gating: bool,
}

impl ChainStep {
    fn new(step: &str, lhs: Scalar, rhs: Scalar, rel: Relation, gating: bool) -> Self {
        let holds = rel.test(&lhs, &rhs);
        ChainStep {
            step: step.to_string(),
            lhs,
            rhs,
            relation: rel.symbol(),
            holds,
            gating,
        }
    }
}

#[derive(Clone, Debug)]
pub struct MainTheoremReport {
    pub a_card: usize,
    pub d_card: usize,
    pub d2_card: usize,
    pub delta_card: usize,
    /// `ρ̂ = |A−A|⁸·|A| / |Δ|⁸`, the eighth power of ρ.
    pub rho_hat: Scalar,
    /// `ρ = |A−A|·|A|^(1/8) / |Δ|`.
    pub rho: f64,
    pub chain: Option<FullChain>,
}

#[derive(Clone, Debug)]
pub struct FullChain {
    /// `|D*·D* + D*·D*|`.
    pub x_card: usize,
    pub dstar_ratio_card: usize,
    pub slope_card: usize,
    /// `slopes(A × A) = D/D* ∪ {∞}`.
    pub slopes_match: bool,
    pub replay: ProductSumsetReplay,
    pub steps: Vec<ChainStep>,
}

impl FullChain {
    pub fn holds(&self) -> bool {
        self.steps.iter().filter(|s| s.gating).all(|s| s.holds) && self.slopes_match
    }

    pub fn step(&self, name: &str) -> Option<&ChainStep> {
        self.steps.iter().find(|s| s.step == name)
    }
}

pub const STEP_LITERAL: &str = "(i) X <= (|Delta|/|D^2|)^8 |D^2|";
pub const STEP_D_NORMALIZED: &str = "(i') X <= |Delta|^8 / |D|^7";
pub const STEP_REPLAY_LB: &str = "(ii) X^2 >= LB";
pub const STEP_REPLAY_CHAIN: &str = "(ii) LB <= |P+P| <= X^2 replayed";
pub const STEP_SLOPES_UPPER: &str = "(iii) |D*/D*| + 2 >= |slopes(AxA)|";
pub const STEP_SLOPES_LOWER: &str = "(iii) |slopes(AxA)| >= |A|^2 - 1";

pub fn main_theorem_report(a: &NumSet, depth: Depth, lim: &Limits) -> Result<MainTheoremReport> {
    if a.len() < 2 {
        return Err(Error::Domain("main theorem audit needs |A| >= 2".into()));
    }
    let d = setcalc::difference_set(a, a, lim)?;
    let d2 = setcalc::square_set(&d)?;
    let delta = setcalc::sumset(&d2, &d2, lim)?;
    let (na, nd, ndelta) = (a.len(), d.len(), delta.len());
    let rho_hat = (card(nd).pow(8) * card(na))
        .checked_div(&card(ndelta).pow(8))
        .expect("Delta contains 0");
    let rho = nd as f64 * (na as f64).powf(0.125) / ndelta as f64;

    let chain = match depth {
        Depth::RatioOnly => None,
        Depth::FullChain => Some(full_chain(a, &d, d2.len(), ndelta, lim)?),
    };
    Ok(MainTheoremReport {
        a_card: na,
        d_card: nd,
        d2_card: d2.len(),
        delta_card: ndelta,
        rho_hat,
        rho,
        chain,
    })
}

fn full_chain(
    a: &NumSet,
    d: &NumSet,
    nd2: usize,
    ndelta: usize,
    lim: &Limits,
) -> Result<FullChain> {
    let dstar = d.without(&Scalar::zero());
    let dd = setcalc::product_set(&dstar, &dstar, lim)?;
    let x_card = setcalc::sumset(&dd, &dd, lim)?.len();
    let x = card(x_card);

    let rhs_literal = card(ndelta)
        .checked_div(&card(nd2))
        .expect("D^2 nonempty")
        .pow(8)
        * card(nd2);
    let rhs_d = card(ndelta)
        .pow(8)
        .checked_div(&card(d.len()).pow(7))
        .expect("D nonempty");

    let replay = product_sumset_replay(&dstar, lim)?;

    let ratios = setcalc::ratio_set(&dstar, &dstar, lim)?;
    let grid = PointSet::cartesian(a, a, lim)?;
    let slopes = geometry::slope_set(&grid, lim)?;
    let expected: BTreeSet<Slope> = ratios
        .iter()
        .chain(std::iter::once(Scalar::zero()))
        .map(Slope::Finite)
        .chain(std::iter::once(Slope::Infinity))
        .collect();
    let slopes_match = slopes == expected;
    let na = a.len() as i64;

    let steps = vec![
        ChainStep::new(STEP_LITERAL, x.clone(), rhs_literal, Relation::AtMost, true),
        ChainStep::new(STEP_D_NORMALIZED, x.clone(), rhs_d, Relation::AtMost, false),
        ChainStep::new(
            STEP_REPLAY_LB,
            x.square(),
            replay.lower_bound.clone(),
            Relation::AtLeast,
            true,
        ),
        ChainStep::new(
            STEP_REPLAY_CHAIN,
            Scalar::from_int(replay.chain_holds as i64),
            Scalar::one(),
            Relation::AtLeast,
            true,
        ),
        ChainStep::new(
            STEP_SLOPES_UPPER,
            card(ratios.len() + 2),
            card(slopes.len()),
            Relation::AtLeast,
            true,
        ),
        ChainStep::new(
            STEP_SLOPES_LOWER,
            card(slopes.len()),
            Scalar::from_int(na * na - 1),
            Relation::AtLeast,
            true,
        ),
    ];
    Ok(FullChain {
        x_card,
        dstar_ratio_card: ratios.len(),
        slope_card: slopes.len(),
        slopes_match,
        replay,
        steps,
    })
}

pub fn check_main_theorem(a: &NumSet, depth: Depth, lim: &Limits) -> Result<AuditRecord> {
    let r = main_theorem_report(a, depth, lim)?;
    let rec = match &r.chain {
        None => AuditRecord::reported(
            StatementId::MainTheorem,
            card(r.d_card).pow(8) * card(r.a_card),
            card(r.delta_card).pow(8),
        )
        .note("ratio is rho^8 = |A-A|^8 |A| / |Delta|^8; rho_approx is its eighth root"),
        Some(chain) => {
            let first = &chain.steps[0];
            let mut rec = AuditRecord::compared(
                StatementId::MainTheorem,
                first.lhs.clone(),
                first.rhs.clone(),
                Relation::AtMost,
            );
            rec.holds = chain.holds().into();
            rec.witnesses = Some(json!({
                "chain": chain.steps,
                "slopes_match_ratio_set": chain.slopes_match,
                "replay": chain.replay,
            }));
            rec.size("x", chain.x_card)
                .size("dstar_over_dstar", chain.dstar_ratio_card)
                .size("slopes", chain.slope_card)
                .note(DSTAR_NOTE)
                .note(NORMALIZATION_NOTE)
                .note(QUADRANT_NOTE)
                .note(SLOPE_NOTE)
        }
    };
    Ok(rec
        .size("a", r.a_card)
        .size("diff", r.d_card)
        .size("d_squared", r.d2_card)
        .size("delta", r.delta_card)
        .metric("rho_approx", r.rho))
}

// --- Rudin/Ruzsa exponent -----------------------------------------------------

/// Reports `log|D² + D²| / log|D²|` for `D = A − A`, `A` integral.
pub fn check_rudin_exponent(a: &NumSet, lim: &Limits) -> Result<AuditRecord> {
    if a.len() < 2 {
        return Err(Error::Domain("Rudin exponent needs |A| >= 2".into()));
    }
    if a.as_ints().is_none() && !a.iter().all(|x| x.is_integer()) {
        return Err(Error::Domain("Rudin exponent needs an integer set".into()));
    }
    let d = setcalc::difference_set(a, a, lim)?;
    let d2 = setcalc::square_set(&d)?;
    let sums = setcalc::sumset(&d2, &d2, lim)?;
    let rec = AuditRecord::reported(StatementId::RudinExponent, card(sums.len()), card(d2.len()))
        .size("a", a.len())
        .size("diff", d.len())
        .size("d_squared", d2.len())
        .size("d_squared_sumset", sums.len());
    Ok(if d2.len() > 1 {
        rec.metric(
            "exponent_approx",
            (sums.len() as f64).ln() / (d2.len() as f64).ln(),
        )
    } else {
        rec.note("|D^2| = 1: exponent undefined")
    })
}
