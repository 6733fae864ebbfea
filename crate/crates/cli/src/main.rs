mod output;
mod sweeps;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use fewdist::geometry::{self, PointSet};
use fewdist::search::{self, FamilySpec, Objective, SearchConfig};
use fewdist::setcalc::{self, Limits};
use fewdist::verify::{self, AuditRecord, Depth, Holds, StatementId};
use fewdist::{NumSet, Scalar};
use serde::Serialize;

use output::{Format, Sink};

#[derive(Debug, thiserror::Error)]
#[error("{0}")]
struct Usage(String);

fn usage(msg: impl Into<String>) -> anyhow::Error {
    Usage(msg.into()).into()
}

/// Exact set-cardinality experiments: difference, distance, product, ratio
/// and slope sets, statement audits and extremal-set search.
#[derive(Parser)]
#[command(name = "fewdist", version)]
struct Cli {
    /// Refuse any enumeration above this many element pairs.
    #[arg(long, global = true, default_value_t = Limits::default().max_pairs)]
    max_pairs: u64,
    /// Widest integer range a dense presence bitmap may cover.
    #[arg(long, global = true, default_value_t = Limits::default().max_bitmap_bits)]
    max_bitmap_bits: u64,
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, short = 'o', global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Cardinalities of derived sets of a set file (or a point file with --points).
    Stats {
        file: PathBuf,
        /// |A − A|
        #[arg(long)]
        diff: bool,
        /// |Δ(A × A)|, or |Δ(P)| with --points
        #[arg(long)]
        distances: bool,
        /// |A / A|
        #[arg(long)]
        ratio: bool,
        /// |A · A|; the input is A and the point set is A × A
        #[arg(long)]
        product: bool,
        /// Number of distinct slopes of A × A (or of P)
        #[arg(long)]
        slopes: bool,
        /// Read FILE as a point file.
        #[arg(long, conflicts_with_all = ["diff", "ratio", "product"])]
        points: bool,
    },
    /// Audit a statement on input files or on a built-in exhaustive sweep.
    Verify {
        /// One of: differencing, plunnecke, solymosi, product-sumset, ungar,
        /// main-theorem, rudin-exponent.
        statement: String,
        files: Vec<PathBuf>,
        #[arg(long, conflicts_with = "files")]
        exhaustive_small: bool,
        /// Plünnecke sum count.
        #[arg(long, default_value_t = 1)]
        m: u32,
        /// Plünnecke difference count.
        #[arg(long, default_value_t = 1)]
        n: u32,
        #[arg(long, value_enum, default_value = "ratio-only")]
        depth: DepthArg,
        /// Origin-line slopes for the Solymosi audit, comma separated.
        #[arg(long, value_delimiter = ',')]
        lines: Vec<Scalar>,
        /// Minimum points per line for the Solymosi audit.
        #[arg(long)]
        n_min: Option<u64>,
    },
    /// The richest nontrivial line of A × A with its full difference histogram.
    Richline { file: PathBuf },
    /// Main-theorem and Rudin-exponent audits over generated families.
    Scan {
        /// Family spec: ap[:g], gp[:r], random:U:seed, perturbed-ap:g:r:seed, squares.
        #[arg(long = "family", required = true)]
        families: Vec<FamilySpec>,
        /// Comma-separated sizes; may be empty.
        #[arg(long, default_value = "")]
        sizes: String,
    },
    /// Simulated-annealing search for extremal sets.
    Search {
        /// JSON file with search parameters; flags override its fields.
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        universe: Option<u64>,
        /// min-distances or max-rho
        #[arg(long)]
        objective: Option<Objective>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        iterations: Option<u64>,
        #[arg(long)]
        initial_temperature: Option<f64>,
        #[arg(long)]
        cooling_rate: Option<f64>,
        #[arg(long)]
        restarts: Option<u32>,
        #[arg(long)]
        trace_every: Option<u64>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum DepthArg {
    RatioOnly,
    FullChain,
}

impl From<DepthArg> for Depth {
    fn from(d: DepthArg) -> Depth {
        match d {
            DepthArg::RatioOnly => Depth::RatioOnly,
            DepthArg::FullChain => Depth::FullChain,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &anyhow::Error) -> u8 {
    if e.downcast_ref::<Usage>().is_some() {
        return 1;
    }
    match e.downcast_ref::<fewdist::Error>() {
        Some(fewdist::Error::Infeasible { .. }) => 3,
        Some(fewdist::Error::Parse { .. } | fewdist::Error::Io(_)) => 1,
        _ => 2,
    }
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    let lim = Limits {
        max_pairs: cli.max_pairs,
        max_bitmap_bits: cli.max_bitmap_bits,
    };
    let sink = Sink::new(cli.format, cli.output);
    match cli.command {
        Command::Stats {
            file,
            diff,
            distances,
            ratio,
            product,
            slopes,
            points,
        } => {
            let mut want = Wanted {
                diff,
                distances,
                ratio,
                product,
                slopes,
            };
            if !(diff || distances || ratio || product || slopes) {
                want.diff = !points;
                want.distances = true;
            }
            let report = if points {
                stats_points(&PointSet::read_file(&file)?, &want, &lim)?
            } else {
                stats_set(&NumSet::read_file(&file)?, &want, &lim)?
            };
            sink.object(&report)?;
            Ok(0)
        }
        Command::Verify {
            statement,
            files,
            exhaustive_small,
            m,
            n,
            depth,
            lines,
            n_min,
        } => {
            let id = StatementId::from_name(&statement).ok_or_else(|| {
                let names: Vec<&str> = StatementId::ALL.iter().map(|s| s.name()).collect();
                usage(format!(
                    "unknown statement '{statement}' (expected one of {})",
                    names.join(", ")
                ))
            })?;
            if files.is_empty() && !exhaustive_small {
                return Err(usage("verify needs input files or --exhaustive-small"));
            }
            let opts = VerifyOpts {
                m,
                n,
                depth: depth.into(),
                lines,
                n_min,
            };
            let outcomes = if exhaustive_small {
                verify_sweep(id, &opts, &lim)
            } else {
                verify_files(id, &files, &opts, &lim)?
            };
            let mut code = 0;
            let records: Vec<AuditRecord> = outcomes
                .into_iter()
                .map(|(label, res)| match res {
                    Ok(rec) => {
                        if rec.holds == Holds::False {
                            code = code.max(2);
                        }
                        rec.with_instance(label)
                    }
                    Err(e) => {
                        code = code.max(if e.is_infeasible() { 3 } else { 2 });
                        AuditRecord::failed(id, Some(label), &e)
                    }
                })
                .collect();
            sink.records(&records)?;
            Ok(code)
        }
        Command::Richline { file } => {
            let a = NumSet::read_file(&file)?;
            let r = geometry::rich_line(&a, &lim)?;
            sink.object(&RichlineReport {
                count: r.count(),
                witnesses: r
                    .points
                    .iter()
                    .map(|p| [p.x.clone(), p.y.clone()])
                    .collect(),
                bound_approx: fewdist::scalar::format_significant(r.bound.to_f64(), 6),
                d: r.d,
                bound: r.bound,
                histogram: r.histogram,
                notes: vec![RICHLINE_NOTE],
            })?;
            Ok(0)
        }
        Command::Scan { families, sizes } => {
            let sizes = parse_sizes(&sizes)?;
            let records = search::scan(&families, &sizes, &lim);
            sink.records(&records)?;
            let failed = records
                .iter()
                .any(|r| r.error.is_some() || r.holds == Holds::False);
            Ok(if failed { 2 } else { 0 })
        }
        Command::Search {
            config,
            n,
            universe,
            objective,
            seed,
            iterations,
            initial_temperature,
            cooling_rate,
            restarts,
            trace_every,
        } => {
            let mut fields = match &config {
                Some(path) => {
                    let text = std::fs::read_to_string(path)
                        .with_context(|| format!("reading {}", path.display()))
                        .map_err(|e| usage(format!("{e:#}")))?;
                    match serde_json::from_str::<serde_json::Value>(&text) {
                        Ok(serde_json::Value::Object(m)) => m,
                        Ok(_) => return Err(usage("config: expected a JSON object")),
                        Err(e) => return Err(usage(format!("config: {e}"))),
                    }
                }
                None => serde_json::Map::new(),
            };
            let mut set = |k: &str, v: Option<serde_json::Value>| {
                if let Some(v) = v {
                    fields.insert(k.to_string(), v);
                }
            };
            set("n", n.map(Into::into));
            set("universe", universe.map(Into::into));
            set(
                "objective",
                objective.map(|o| serde_json::to_value(o).unwrap()),
            );
            set("seed", seed.map(Into::into));
            set("iterations", iterations.map(Into::into));
            set("initial_temperature", initial_temperature.map(Into::into));
            set("cooling_rate", cooling_rate.map(Into::into));
            set("restarts", restarts.map(Into::into));
            set("trace_every", trace_every.map(Into::into));
            for key in ["seed", "n", "universe", "objective"] {
                if !fields.contains_key(key) {
                    return Err(usage(format!(
                        "search needs --{} (or config.{key})",
                        key.replace('_', "-")
                    )));
                }
            }
            let cfg: SearchConfig =
                serde_json::from_value(fields.into()).map_err(|e| usage(format!("config: {e}")))?;
            cfg.validate().map_err(|e| usage(e.to_string()))?;
            let run = search::anneal(&cfg, &lim)?;
            sink.object(&run.report())?;
            Ok(0)
        }
    }
}

struct Wanted {
    diff: bool,
    distances: bool,
    ratio: bool,
    product: bool,
    slopes: bool,
}

#[derive(Serialize, Default)]
struct StatsReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    diff_card: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    delta_card: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    ratio_card: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    product_card: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    slopes_card: Option<usize>,
}

fn stats_set(a: &NumSet, want: &Wanted, lim: &Limits) -> anyhow::Result<StatsReport> {
    let mut r = StatsReport::default();
    if want.diff {
        r.diff_card = Some(
            setcalc::difference_set(a, a, lim)
                .context("diff_card")?
                .len(),
        );
    }
    if want.distances {
        r.delta_card = Some(
            geometry::product_distance_set(a, lim)
                .context("delta_card")?
                .len(),
        );
    }
    if want.ratio {
        r.ratio_card = Some(setcalc::ratio_set(a, a, lim).context("ratio_card")?.len());
    }
    if want.product {
        r.product_card = Some(
            setcalc::product_set(a, a, lim)
                .context("product_card")?
                .len(),
        );
    }
    if want.slopes {
        let grid = PointSet::cartesian(a, a, lim).context("slopes_card")?;
        r.slopes_card = Some(
            geometry::slope_set(&grid, lim)
                .context("slopes_card")?
                .len(),
        );
    }
    Ok(r)
}

fn stats_points(p: &PointSet, want: &Wanted, lim: &Limits) -> anyhow::Result<StatsReport> {
    let mut r = StatsReport::default();
    if want.distances {
        r.delta_card = Some(geometry::distance_set(p, lim).context("delta_card")?.len());
    }
    if want.slopes {
        r.slopes_card = Some(geometry::slope_set(p, lim).context("slopes_card")?.len());
    }
    Ok(r)
}

#[derive(Serialize)]
struct RichlineReport {
    d: Scalar,
    count: usize,
    witnesses: Vec<[Scalar; 2]>,
    bound: Scalar,
    bound_approx: String,
    histogram: Vec<(Scalar, u64)>,
    notes: Vec<&'static str>,
}

const RICHLINE_NOTE: &str = "nontrivial line: y = x - d with d != 0; one maximizer is returned";

fn parse_sizes(text: &str) -> anyhow::Result<Vec<usize>> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<usize>()
                .map_err(|_| usage(format!("--sizes: '{s}' is not a size")))
        })
        .collect()
}

struct VerifyOpts {
    m: u32,
    n: u32,
    depth: Depth,
    lines: Vec<Scalar>,
    n_min: Option<u64>,
}

type Outcome = (String, fewdist::Result<AuditRecord>);

fn takes_points(id: StatementId) -> bool {
    matches!(id, StatementId::Ungar | StatementId::Solymosi)
}

fn audit_set(
    id: StatementId,
    a: &NumSet,
    opts: &VerifyOpts,
    lim: &Limits,
) -> fewdist::Result<AuditRecord> {
    match id {
        StatementId::Differencing => verify::check_differencing(a, lim),
        StatementId::Plunnecke => verify::check_plunnecke(a, opts.m, opts.n, lim),
        StatementId::ProductSumset => verify::check_product_sumset(a, lim),
        StatementId::MainTheorem => verify::check_main_theorem(a, opts.depth, lim),
        StatementId::RudinExponent => verify::check_rudin_exponent(a, lim),
        StatementId::Ungar | StatementId::Solymosi => unreachable!("point statement"),
    }
}

fn audit_points(
    id: StatementId,
    p: &PointSet,
    opts: &VerifyOpts,
    lim: &Limits,
) -> fewdist::Result<AuditRecord> {
    match id {
        StatementId::Ungar => verify::check_ungar(p, lim),
        StatementId::Solymosi => {
            let n = opts.n_min.unwrap_or(1);
            verify::check_solymosi(p, &opts.lines, n, lim)
        }
        _ => unreachable!("set statement"),
    }
}

fn verify_files(
    id: StatementId,
    files: &[PathBuf],
    opts: &VerifyOpts,
    lim: &Limits,
) -> anyhow::Result<Vec<Outcome>> {
    if id == StatementId::Solymosi && (opts.lines.is_empty() || opts.n_min.is_none()) {
        return Err(usage("verify solymosi on files needs --lines and --n-min"));
    }
    let mut out = Vec::with_capacity(files.len());
    for f in files {
        let label = f.display().to_string();
        let res = if takes_points(id) {
            let p = PointSet::read_file(f).with_context(|| label.clone())?;
            audit_points(id, &p, opts, lim)
        } else {
            let a = NumSet::read_file(f).with_context(|| label.clone())?;
            audit_set(id, &a, opts, lim)
        };
        out.push((label, res));
    }
    Ok(out)
}

fn verify_sweep(id: StatementId, opts: &VerifyOpts, lim: &Limits) -> Vec<Outcome> {
    use sweeps::{grid_subsets, int_subsets, points_label, range, set_label};
    match id {
        StatementId::Differencing => int_subsets(&range(0, 10), 1..=5)
            .iter()
            .map(|a| (set_label(a), verify::check_differencing(a, lim)))
            .collect(),
        StatementId::Plunnecke => int_subsets(&range(0, 9), 2..=5)
            .iter()
            .flat_map(|a| {
                [(1, 1), (2, 1), (2, 2)]
                    .map(|(m, n)| (set_label(a), verify::check_plunnecke(a, m, n, lim)))
            })
            .collect(),
        StatementId::ProductSumset => int_subsets(&range(1, 8), 3..=3)
            .iter()
            .map(|s| (set_label(s), verify::check_product_sumset(s, lim)))
            .collect(),
        StatementId::Solymosi => int_subsets(&range(1, 8), 3..=3)
            .iter()
            .map(|s| {
                let res = geometry::solymosi_construct(s, lim).and_then(|c| {
                    let slopes: Vec<Scalar> = c.lines.iter().map(|l| l.slope.clone()).collect();
                    let n = c.lines.iter().map(|l| l.points as u64).min().unwrap_or(0);
                    verify::check_solymosi(&c.points, &slopes, n, lim)
                });
                (format!("construction of {}", set_label(s)), res)
            })
            .collect(),
        StatementId::Ungar => grid_subsets(4, 2, 6)
            .into_iter()
            .filter(|p| !geometry::is_collinear(p))
            .map(|p| (points_label(&p), verify::check_ungar(&p, lim)))
            .collect(),
        StatementId::MainTheorem => int_subsets(&range(0, 8), 2..=5)
            .iter()
            .map(|a| (set_label(a), verify::check_main_theorem(a, opts.depth, lim)))
            .collect(),
        StatementId::RudinExponent => int_subsets(&range(0, 9), 2..=5)
            .iter()
            .map(|a| (set_label(a), verify::check_rudin_exponent(a, lim)))
            .collect(),
    }
}
