//! Searching integer sets `A ⊆ [0, U]` whose grid `A × A` spans few
//! distances, plus deterministic scans over structured families.

use std::fmt;
use std::str::FromStr;

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry;
use crate::numset::NumSet;
use crate::scalar::Scalar;
use crate::setcalc::{self, Limits};
use crate::verify::{self, AuditRecord, Depth, StatementId};

/// Pinned in every search report so traces are comparable across builds.
pub const RNG_ALGORITHM: &str = "ChaCha8Rng/rand_chacha-0.3/seed_from_u64";

/// A structured or random family of sets, parameterized by size.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum FamilySpec {
    /// `{0, g, …, (n−1)g}`.
    Ap { gap: i64 },
    /// `{1, r, …, r^(n−1)}` with rational `r > 1`.
    Gp { ratio: Scalar },
    /// `n` distinct uniform draws from `[0, U]`.
    Random { universe: u64, seed: u64 },
    /// An AP with independent offsets in `[−radius, radius]`.
    PerturbedAp { gap: i64, radius: u64, seed: u64 },
    /// `{0², 1², …, (n−1)²}`.
    Squares,
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Ap { gap } => write!(f, "ap:{gap}"),
            FamilySpec::Gp { ratio } => write!(f, "gp:{ratio}"),
            FamilySpec::Random { universe, seed } => write!(f, "random:{universe}:{seed}"),
            FamilySpec::PerturbedAp { gap, radius, seed } => {
                write!(f, "perturbed-ap:{gap}:{radius}:{seed}")
            }
            FamilySpec::Squares => f.write_str("squares"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// `ap[:gap]`, `gp[:ratio]`, `random:U:seed`, `perturbed-ap:gap:radius:seed`,
    /// `squares`.
    fn from_str(s: &str) -> Result<Self> {
        let mut parts = s.split(':');
        let kind = parts.next().unwrap_or_default();
        let args: Vec<&str> = parts.collect();
        let bad = || Error::Domain(format!("invalid family spec {s:?}"));
        let int = |t: &str| t.parse::<i64>().map_err(|_| bad());
        let uint = |t: &str| t.parse::<u64>().map_err(|_| bad());
        let spec = match (kind, args.as_slice()) {
            ("ap", []) => Ok(FamilySpec::Ap { gap: 1 }),
            ("ap", [g]) => Ok(FamilySpec::Ap { gap: int(g)? }),
            ("gp", []) => Ok(FamilySpec::Gp {
                ratio: Scalar::from_int(2),
            }),
            ("gp", [r]) => Ok(FamilySpec::Gp {
                ratio: r.parse().map_err(|_| bad())?,
            }),
            ("random", [u, seed]) => Ok(FamilySpec::Random {
                universe: uint(u)?,
                seed: uint(seed)?,
            }),
            ("perturbed-ap", [g, r, seed]) => Ok(FamilySpec::PerturbedAp {
                gap: int(g)?,
                radius: uint(r)?,
                seed: uint(seed)?,
            }),
            ("squares", []) => Ok(FamilySpec::Squares),
            _ => Err(bad()),
        }?;
        spec.validate()?;
        Ok(spec)
    }
}

impl FamilySpec {
    /// Parameter checks that do not depend on the size.
    pub fn validate(&self) -> Result<()> {
        match self {
            FamilySpec::Ap { gap: 0 } => Err(Error::Domain("ap gap must be nonzero".into())),
            FamilySpec::Gp { ratio } if *ratio <= Scalar::one() => {
                Err(Error::Domain("gp ratio must exceed 1".into()))
            }
            FamilySpec::PerturbedAp { gap: 0, .. } => {
                Err(Error::Domain("perturbed-ap gap must be nonzero".into()))
            }
            FamilySpec::PerturbedAp { radius, .. } if i64::try_from(*radius).is_err() => {
                Err(Error::Domain("radius too large".into()))
            }
            _ => Ok(()),
        }
    }
}

/// Generates the `n`-element member of a family.
pub fn generate_family(spec: &FamilySpec, n: usize) -> Result<NumSet> {
    if n == 0 {
        return Err(Error::Domain("family size must be at least 1".into()));
    }
    let overflow = || Error::Domain(format!("{spec} with n = {n} overflows i64"));
    match spec {
        FamilySpec::Ap { gap } => {
            if *gap == 0 {
                return Err(Error::Domain("ap gap must be nonzero".into()));
            }
            let v: Option<Vec<i64>> = (0..n as i64).map(|k| k.checked_mul(*gap)).collect();
            Ok(NumSet::from_ints(v.ok_or_else(overflow)?))
        }
        FamilySpec::Gp { ratio } => {
            if *ratio <= Scalar::one() {
                return Err(Error::Domain("gp ratio must exceed 1".into()));
            }
            let mut term = Scalar::one();
            let mut v = Vec::with_capacity(n);
            for _ in 0..n {
                v.push(term.clone());
                term = &term * ratio;
            }
            Ok(NumSet::from_scalars(v))
        }
        FamilySpec::Random { universe, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            Ok(NumSet::from_ints(random_subset(&mut rng, n, *universe)?))
        }
        FamilySpec::PerturbedAp { gap, radius, seed } => perturbed_ap(*gap, *radius, *seed, n),
        FamilySpec::Squares => {
            let v: Option<Vec<i64>> = (0..n as i64).map(|k| k.checked_mul(k)).collect();
            Ok(NumSet::from_ints(v.ok_or_else(overflow)?))
        }
    }
}

fn random_subset(rng: &mut ChaCha8Rng, n: usize, universe: u64) -> Result<Vec<i64>> {
    let size = universe
        .checked_add(1)
        .filter(|&s| s <= i64::MAX as u64)
        .ok_or_else(|| Error::Domain("universe too large".into()))?;
    if n as u64 > size {
        return Err(Error::Domain(format!(
            "cannot draw {n} distinct values from [0, {universe}]"
        )));
    }
    let mut v: Vec<i64> = index::sample(rng, size as usize, n)
        .into_iter()
        .map(|i| i as i64)
        .collect();
    v.sort_unstable();
    Ok(v)
}

const PERTURB_ATTEMPTS: usize = 64;

fn perturbed_ap(gap: i64, radius: u64, seed: u64, n: usize) -> Result<NumSet> {
    if gap == 0 {
        return Err(Error::Domain("perturbed-ap gap must be nonzero".into()));
    }
    let r = i64::try_from(radius).map_err(|_| Error::Domain("radius too large".into()))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..PERTURB_ATTEMPTS {
        let mut used = std::collections::BTreeSet::new();
        let mut ok = true;
        for k in 0..n as i64 {
            let centre = k
                .checked_mul(gap)
                .ok_or_else(|| Error::Domain("perturbed-ap overflows i64".into()))?;
            let v = centre + rng.gen_range(-r..=r);
            if used.insert(v) {
                continue;
            }
            // redraw among the free values of this element's window
            let free: Vec<i64> = (centre - r..=centre + r)
                .filter(|x| !used.contains(x))
                .collect();
            if free.is_empty() {
                ok = false;
                break;
            }
            used.insert(free[rng.gen_range(0..free.len())]);
        }
        if ok {
            return Ok(NumSet::from_ints(used));
        }
    }
    Err(Error::Domain(format!(
        "perturbed-ap: radius {radius} keeps colliding for gap {gap}"
    )))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Objective {
    /// Minimize `|Δ(A × A)|`; ties prefer larger `|A − A|`.
    MinDistances,
    /// Maximize `ρ̂ = |A−A|⁸·|A| / |Δ(A×A)|⁸`.
    MaxRho,
}

impl FromStr for Objective {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "min-distances" => Ok(Objective::MinDistances),
            "max-rho" => Ok(Objective::MaxRho),
            _ => Err(Error::Domain(format!("unknown objective {s:?}"))),
        }
    }
}

/// Exact objective value and the tie-break key.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Score {
    pub value: Scalar,
    pub diff_card: usize,
}

impl Score {
    fn better_than(&self, other: &Score, objective: Objective) -> bool {
        match objective {
            Objective::MinDistances => {
                self.value < other.value
                    || (self.value == other.value && self.diff_card > other.diff_card)
            }
            Objective::MaxRho => self.value > other.value,
        }
    }

    /// How much worse `self` is than `other`, as a non-negative real.
    fn worsening(&self, other: &Score, objective: Objective) -> f64 {
        let d = match objective {
            Objective::MinDistances => &self.value - &other.value,
            Objective::MaxRho => &other.value - &self.value,
        };
        d.to_f64().max(0.0)
    }
}

pub fn score(a: &NumSet, objective: Objective, lim: &Limits) -> Result<Score> {
    let d = setcalc::difference_set(a, a, lim)?;
    let d2 = setcalc::square_set(&d)?;
    let delta = setcalc::sumset(&d2, &d2, lim)?.len() as i64;
    let value = match objective {
        Objective::MinDistances => Scalar::from_int(delta),
        Objective::MaxRho => {
            let nd = Scalar::from_int(d.len() as i64);
            (nd.pow(8) * Scalar::from_int(a.len() as i64))
                .checked_div(&Scalar::from_int(delta).pow(8))
                .expect("Delta contains 0")
        }
    };
    Ok(Score {
        value,
        diff_card: d.len(),
    })
}

pub fn objective_value(a: &NumSet, objective: Objective, lim: &Limits) -> Result<Scalar> {
    score(a, objective, lim).map(|s| s.value)
}

fn default_iterations() -> u64 {
    50_000
}
fn default_temperature() -> f64 {
    2.0
}
fn default_cooling() -> f64 {
    0.999
}
fn default_restarts() -> u32 {
    4
}
fn default_trace_every() -> u64 {
    1_000
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SearchConfig {
    pub n: usize,
    /// Upper end `U` of the universe `[0, U]`.
    pub universe: u64,
    pub objective: Objective,
    #[serde(default = "default_iterations")]
    pub iterations: u64,
    #[serde(default = "default_temperature")]
    pub initial_temperature: f64,
    #[serde(default = "default_cooling")]
    pub cooling_rate: f64,
    pub seed: u64,
    #[serde(default = "default_restarts")]
    pub restarts: u32,
    /// Record the best score every this many iterations.
    #[serde(default = "default_trace_every")]
    pub trace_every: u64,
}

impl SearchConfig {
    pub fn new(n: usize, universe: u64, objective: Objective, seed: u64) -> Self {
        SearchConfig {
            n,
            universe,
            objective,
            iterations: default_iterations(),
            initial_temperature: default_temperature(),
            cooling_rate: default_cooling(),
            seed,
            restarts: default_restarts(),
            trace_every: default_trace_every(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let field = |name: &str, msg: &str| Err(Error::Domain(format!("config.{name}: {msg}")));
        if self.n == 0 {
            return field("n", "must be positive");
        }
        if self.universe >= i64::MAX as u64 {
            return field("universe", "must be below 2^63 - 1");
        }
        if self.n as u64 > self.universe + 1 {
            return field("n", "exceeds the universe size U + 1");
        }
        if !(self.initial_temperature.is_finite() && self.initial_temperature > 0.0) {
            return field("initial_temperature", "must be positive");
        }
        if !(self.cooling_rate > 0.0 && self.cooling_rate < 1.0) {
            return field("cooling_rate", "must lie in (0, 1)");
        }
        if self.restarts == 0 {
            return field("restarts", "must be positive");
        }
        if self.trace_every == 0 {
            return field("trace_every", "must be positive");
        }
        Ok(())
    }
}

/// The chain of one restart.
#[derive(Clone, Debug)]
pub struct SearchState {
    pub seed: u64,
    pub initial: NumSet,
    pub initial_score: Scalar,
    pub incumbent: NumSet,
    pub incumbent_score: Scalar,
    pub best: NumSet,
    pub best_score: Scalar,
    pub best_diff_card: usize,
    pub accepted_moves: u64,
    pub iterations_run: u64,
    /// `(iteration, best score so far)` samples, starting at iteration 0.
    pub trace: Vec<(u64, Scalar)>,
    /// Set when an objective evaluation failed and the chain stopped early.
    pub aborted: Option<String>,
}

#[derive(Clone, Debug)]
pub struct SearchRun {
    pub config: SearchConfig,
    pub restarts: Vec<SearchState>,
}

impl SearchRun {
    /// The best restart; ties go to the lowest restart index.
    pub fn best(&self) -> &SearchState {
        let objective = self.config.objective;
        let key = |s: &SearchState| Score {
            value: s.best_score.clone(),
            diff_card: s.best_diff_card,
        };
        self.restarts
            .iter()
            .reduce(|acc, s| {
                if key(s).better_than(&key(acc), objective) {
                    s
                } else {
                    acc
                }
            })
            .expect("at least one restart")
    }

    pub fn report(&self) -> SearchReport {
        let best = self.best();
        SearchReport {
            config: self.config.clone(),
            best_set: best.best.iter().map(|x| x.to_string()).collect(),
            best_score: best.best_score.clone(),
            trace: best.trace.clone(),
            rng: RngInfo {
                algorithm: RNG_ALGORITHM.to_string(),
                seed: self.config.seed,
            },
            restarts: self
                .restarts
                .iter()
                .map(|s| RestartSummary {
                    seed: s.seed,
                    initial_score: s.initial_score.clone(),
                    best_score: s.best_score.clone(),
                    accepted_moves: s.accepted_moves,
                    iterations_run: s.iterations_run,
                    aborted: s.aborted.clone(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchReport {
    pub config: SearchConfig,
    pub best_set: Vec<String>,
    pub best_score: Scalar,
    pub trace: Vec<(u64, Scalar)>,
    pub rng: RngInfo,
    pub restarts: Vec<RestartSummary>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RngInfo {
    pub algorithm: String,
    pub seed: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct RestartSummary {
    pub seed: u64,
    pub initial_score: Scalar,
    pub best_score: Scalar,
    pub accepted_moves: u64,
    pub iterations_run: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub aborted: Option<String>,
}

/// Simulated annealing over `n`-subsets of `[0, U]`, one independent chain
/// per restart with seed `seed + restart`.
pub fn anneal(config: &SearchConfig, lim: &Limits) -> Result<SearchRun> {
    config.validate()?;
    let restarts = (0..config.restarts as u64)
        .map(|r| anneal_chain(config, config.seed.wrapping_add(r), lim))
        .collect::<Result<Vec<_>>>()?;
    Ok(SearchRun {
        config: config.clone(),
        restarts,
    })
}

/// The `k`-th value of `[0, U]` not in the sorted slice `taken`.
fn kth_unused(taken: &[i64], k: u64) -> i64 {
    let mut v = k as i64;
    for &t in taken {
        if t <= v {
            v += 1;
        } else {
            break;
        }
    }
    v
}

fn anneal_chain(config: &SearchConfig, seed: u64, lim: &Limits) -> Result<SearchState> {
    let objective = config.objective;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut current = random_subset(&mut rng, config.n, config.universe)?;
    let initial = NumSet::from_ints(current.iter().copied());
    // the initial evaluation has no partial trace to fall back on
    let mut cur_score = score(&initial, objective, lim)?;

    let mut state = SearchState {
        seed,
        initial: initial.clone(),
        initial_score: cur_score.value.clone(),
        incumbent: initial.clone(),
        incumbent_score: cur_score.value.clone(),
        best: initial,
        best_score: cur_score.value.clone(),
        best_diff_card: cur_score.diff_card,
        accepted_moves: 0,
        iterations_run: 0,
        trace: vec![(0, cur_score.value.clone())],
        aborted: None,
    };
    let free = config.universe + 1 - config.n as u64;
    if free == 0 {
        return Ok(state);
    }

    let mut best_score = cur_score.clone();
    let mut temperature = config.initial_temperature;
    for it in 1..=config.iterations {
        let slot = rng.gen_range(0..config.n);
        let value = kth_unused(&current, rng.gen_range(0..free));
        let mut cand = current.clone();
        cand[slot] = value;
        cand.sort_unstable();
        let cand_set = NumSet::from_ints(cand.iter().copied());
        let cand_score = match score(&cand_set, objective, lim) {
            Ok(s) => s,
            Err(e) => {
                state.aborted = Some(e.to_string());
                break;
            }
        };
        state.iterations_run = it;

        let accept = cand_score.better_than(&cur_score, objective) || {
            let worse = cand_score.worsening(&cur_score, objective);
            rng.gen::<f64>() < (-worse / temperature).exp()
        };
        temperature *= config.cooling_rate;
        if accept {
            state.accepted_moves += 1;
            if cand_score.better_than(&best_score, objective) {
                best_score = cand_score.clone();
                state.best = cand_set.clone();
            }
            current = cand;
            cur_score = cand_score;
            state.incumbent = cand_set;
        }
        if it % config.trace_every == 0 {
            state.trace.push((it, best_score.value.clone()));
        }
    }
    if state.trace.last().map(|t| t.0) != Some(state.iterations_run) {
        state
            .trace
            .push((state.iterations_run, best_score.value.clone()));
    }
    state.incumbent_score = cur_score.value;
    state.best_score = best_score.value;
    state.best_diff_card = best_score.diff_card;
    Ok(state)
}

/// Main-theorem ratio and Rudin-exponent records for every family member,
/// family-major then size-minor. Per-instance errors become error records.
pub fn scan(specs: &[FamilySpec], sizes: &[usize], lim: &Limits) -> Vec<AuditRecord> {
    let mut out = Vec::with_capacity(specs.len() * sizes.len() * 2);
    for spec in specs {
        for &n in sizes {
            let label = format!("{spec} n={n}");
            match generate_family(spec, n) {
                Ok(a) => {
                    out.push(
                        verify::check_main_theorem(&a, Depth::RatioOnly, lim)
                            .map(|r| r.with_instance(label.clone()))
                            .unwrap_or_else(|e| {
                                AuditRecord::failed(
                                    StatementId::MainTheorem,
                                    Some(label.clone()),
                                    &e,
                                )
                            }),
                    );
                    out.push(
                        verify::check_rudin_exponent(&a, lim)
                            .map(|r| r.with_instance(label.clone()))
                            .unwrap_or_else(|e| {
                                AuditRecord::failed(
                                    StatementId::RudinExponent,
                                    Some(label.clone()),
                                    &e,
                                )
                            }),
                    );
                }
                Err(e) => {
                    out.push(AuditRecord::failed(
                        StatementId::MainTheorem,
                        Some(label.clone()),
                        &e,
                    ));
                    out.push(AuditRecord::failed(
                        StatementId::RudinExponent,
                        Some(label),
                        &e,
                    ));
                }
            }
        }
    }
    out
}

/// Recomputes `|Δ(A × A)|` from the definition, over all point pairs of the
/// grid, independently of the `D² + D²` route the search uses.
pub fn distance_count_by_definition(a: &NumSet, lim: &Limits) -> Result<usize> {
    let grid = geometry::PointSet::cartesian(a, a, lim)?;
    Ok(geometry::distance_set(&grid, lim)?.len())
}
