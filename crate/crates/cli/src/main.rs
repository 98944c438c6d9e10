//! Batch command-line front end: every computation in the library is
//! reachable as a subcommand with machine-readable output.
//!
//! Exit codes: 0 success, 1 a reported check failed, 2 argument/file
//! parse errors, 3 enumeration over the size ceiling, 4 violated
//! hypotheses. `REARRANGE_MAX_NODES` overrides the ceiling.

mod inputs;
mod report;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::time::Instant;

use rearrange_core::algebra::{
    self, generate_loewner_chain, LoewnerChain,
};
use rearrange_core::framework::{
    self, check_order1, circular_extrema_brute, circular_value, necklace_canonical,
    sigma_m1, sigma_m2, AggregatorKind, CombinerKind, Domain, FgEntry,
};
use rearrange_core::kperm::{
    self, closed_form_catalog, v_extrema_brute, w_extrema_brute, KPermProblem,
};
use rearrange_core::oeis::{self, OeisId};
use rearrange_core::perm::{count_perm_multisets, PermMultiset, Permutation};
use rearrange_core::pool::{
    self, partition_count, pool_extrema_brute, sorted_constructions, BlockObjective,
    BlockPartition, PoolProblem,
};
use rearrange_core::progression::{self, representable_2t_nu, ColumnSums};
use rearrange_core::suites::{run_suite, SuiteConfig, SUITE_NAMES};
use rearrange_core::{Error as CoreError, ExtremalResult, Limits, OrderedSequence, Rational};

use inputs::{
    load_chain, load_matrix, load_pool_file, parse_seq_args, parse_vector, SeqSource,
};
use report::RunReport;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Core(CoreError),
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Core(CoreError::SizeLimit { .. }) => 3,
            CliError::Core(_) => 4,
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Usage(m) => format!("usage error: {m}"),
            CliError::Core(e) => format!("error: {e}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Vmin,
    Vmax,
    Wmin,
    Wmax,
}

impl Mode {
    fn is_min(self) -> bool {
        matches!(self, Mode::Vmin | Mode::Wmin)
    }

    fn is_v(self) -> bool {
        matches!(self, Mode::Vmin | Mode::Vmax)
    }

    fn name(self) -> &'static str {
        match self {
            Mode::Vmin => "vmin",
            Mode::Vmax => "vmax",
            Mode::Wmin => "wmin",
            Mode::Wmax => "wmax",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Brute,
    Closed,
    Bound,
    Construct,
}

#[derive(Parser)]
#[command(
    name = "rearrange",
    about = "Exact extremal values and verification for rearrangement-type inequalities",
    version
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,
    /// Worker threads for the parallel engines (0 keeps the default)
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Extrema of v/w over k-sets of permutations of one sequence
    Kperm(KpermArgs),
    /// Extrema of block sum-of-products / product-of-sums over one pool
    Pool(PoolArgs),
    /// Circular rearrangement values and extrema
    Circular(CircularArgs),
    /// Generalized combiner/aggregator checks
    General(GeneralArgs),
    /// Exact matrix predicates, products and Loewner chains
    Matrix(MatrixArgs),
    /// Integer sequence tables for a_i = i
    Oeis(OeisArgs),
    /// Named verification suites
    Verify(VerifyArgs),
}

#[derive(Args)]
struct KpermArgs {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: usize,
    /// Comma-separated rationals
    #[arg(long)]
    seq: Option<String>,
    /// Arithmetic progression `a1,d` of n terms
    #[arg(long)]
    ap: Option<String>,
    /// The sequence 1..n
    #[arg(long)]
    int: bool,
    /// Geometric progression `c,d,b1,db` of n terms
    #[arg(long)]
    gp: Option<String>,
    /// Sort an explicit --seq first
    #[arg(long)]
    sort: bool,
    #[arg(long, value_enum)]
    mode: Mode,
    #[arg(long, value_enum, default_value_t = Method::Brute)]
    method: Method,
}

#[derive(Args)]
struct PoolArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    /// Comma-separated rationals (k*n of them)
    #[arg(long)]
    pool: Option<String>,
    /// JSON file with an array of rationals
    #[arg(long)]
    pool_file: Option<String>,
    /// Arithmetic progression `a1,d` of k*n terms
    #[arg(long)]
    ap: Option<String>,
    /// The pool 1..k*n
    #[arg(long)]
    int: bool,
    /// Geometric progression `c,d,b1,db` of k*n terms
    #[arg(long)]
    gp: Option<String>,
    #[arg(long, value_enum)]
    mode: Mode,
    #[arg(long, value_enum, default_value_t = Method::Brute)]
    method: Method,
}

#[derive(Args)]
struct CircularArgs {
    #[arg(long)]
    seq: String,
    #[arg(long)]
    sort: bool,
    /// Combiner/aggregator key, e.g. times:sum or plus:prod
    #[arg(long)]
    fg: String,
    /// Evaluate one arrangement instead of searching
    #[arg(long)]
    arrangement: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum GeneralCheck {
    Order1,
    Newri,
    Newri2,
    Multi,
}

#[derive(Args)]
struct GeneralArgs {
    /// Catalog key, e.g. times:sum
    #[arg(long)]
    fg: Option<String>,
    /// Combiner name (times|plus|max|min) for non-catalog pairs
    #[arg(long)]
    f: Option<String>,
    /// Aggregator name (sum|negprod|max|negmin|prod|negsum)
    #[arg(long)]
    g: Option<String>,
    /// Domain for non-catalog pairs: all | nonneg
    #[arg(long)]
    domain: Option<String>,
    #[arg(long, value_enum)]
    check: GeneralCheck,
    #[arg(long, default_value_t = 1000)]
    samples: u64,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    seq_a: Option<String>,
    #[arg(long)]
    seq_b: Option<String>,
    /// Semicolon-separated rows of comma-separated rationals
    #[arg(long)]
    rows: Option<String>,
    #[arg(long)]
    sort: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MatrixOp {
    Psd,
    Loewner,
    Star,
    Chain,
    VerifyChain,
}

#[derive(Args)]
struct MatrixArgs {
    #[arg(long, value_enum)]
    op: MatrixOp,
    /// JSON matrix file (array of arrays of "p/q" strings)
    #[arg(long)]
    file: Option<String>,
    #[arg(long)]
    file_b: Option<String>,
    /// JSON chain file (array of matrices)
    #[arg(long)]
    chain_file: Option<String>,
    /// Star operation for --op star
    #[arg(long)]
    star: Option<String>,
    /// Comma-separated vector for dot/bilinear
    #[arg(long)]
    vec_a: Option<String>,
    #[arg(long)]
    vec_b: Option<String>,
    #[arg(long, default_value_t = 2)]
    m: usize,
    #[arg(long, default_value_t = 3)]
    len: usize,
    #[arg(long)]
    commuting: bool,
    #[arg(long)]
    seed: Option<u64>,
    /// Write generated chains to this JSON file as well
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct OeisArgs {
    /// Sequence id, e.g. A333420
    id: String,
    #[arg(long, default_value_t = 4)]
    max_n: usize,
    #[arg(long, default_value_t = 4)]
    max_k: usize,
    #[arg(long)]
    max_cells: Option<usize>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name or `all`
    #[arg(long)]
    suite: String,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    samples: Option<u64>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    max_n: Option<usize>,
    #[arg(long)]
    max_k: Option<usize>,
    /// Cap failures listed per suite
    #[arg(long, default_value_t = 3)]
    max_failures: usize,
}

struct CommandOutput {
    report: RunReport,
    plain_override: Option<String>,
    csv_override: Option<String>,
}

impl From<RunReport> for CommandOutput {
    fn from(report: RunReport) -> Self {
        CommandOutput {
            report,
            plain_override: None,
            csv_override: None,
        }
    }
}

fn main() {
    let cli = Cli::parse();
    if cli.threads > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build_global()
            .ok();
    }
    let start = Instant::now();
    match run(&cli.command) {
        Ok(mut out) => {
            out.report.timing_ms = start.elapsed().as_millis();
            let text = match (cli.format, &out.plain_override, &out.csv_override) {
                (Format::Plain, Some(text), _) => text.clone(),
                (Format::Csv, _, Some(text)) => text.clone(),
                (Format::Plain, None, _) => out.report.render_plain(),
                (Format::Json, _, _) => out.report.render_json(),
                (Format::Csv, _, None) => out.report.render_csv(),
            };
            print!("{text}");
            if !text.ends_with('\n') {
                println!();
            }
            std::process::exit(if out.report.all_passed() { 0 } else { 1 });
        }
        Err(e) => {
            eprintln!("{}", e.message());
            std::process::exit(e.exit_code());
        }
    }
}

fn run(cmd: &Command) -> Result<CommandOutput, CliError> {
    match cmd {
        Command::Kperm(args) => run_kperm(args),
        Command::Pool(args) => run_pool(args),
        Command::Circular(args) => run_circular(args),
        Command::General(args) => run_general(args),
        Command::Matrix(args) => run_matrix(args),
        Command::Oeis(args) => run_oeis(args),
        Command::Verify(args) => run_verify(args),
    }
}

fn seq_json(seq: &OrderedSequence) -> Value {
    json!(seq.values().iter().map(|v| v.to_string()).collect::<Vec<_>>())
}

fn multiset_json(ms: &PermMultiset) -> Value {
    json!(ms.perms().iter().map(|p| p.to_string()).collect::<Vec<_>>())
}

fn extremal_json(r: &ExtremalResult<PermMultiset>) -> Value {
    json!({
        "value": r.value,
        "witness": multiset_json(&r.witness),
        "optima_count": r.optima_count,
        "nodes_explored": r.nodes_explored,
    })
}

fn partition_extremal_json(r: &ExtremalResult<BlockPartition>) -> Value {
    json!({
        "value": r.value,
        "witness": r.witness.blocks(),
        "optima_count": r.optima_count,
        "nodes_explored": r.nodes_explored,
    })
}

fn kperm_brute_side(
    p: &KPermProblem,
    mode: Mode,
    limits: &Limits,
) -> Result<ExtremalResult<PermMultiset>, CliError> {
    let pair = if mode.is_v() {
        v_extrema_brute(p, limits)?
    } else {
        w_extrema_brute(p, limits)?
    };
    Ok(if mode.is_min() { pair.0 } else { pair.1 })
}

fn kperm_brute_feasible(p: &KPermProblem, limits: &Limits) -> bool {
    count_perm_multisets(p.n(), p.k(), true).is_some_and(|c| c <= limits.max_nodes as u128)
}

fn run_kperm(args: &KpermArgs) -> Result<CommandOutput, CliError> {
    let input = parse_seq_args(args.n, &args.seq, &args.ap, args.int, &args.gp, args.sort, "n")?;
    let limits = Limits::from_env();
    let p = KPermProblem::new(input.seq.clone(), args.k)?;
    let mut report = RunReport::new("kperm");
    report.inputs = json!({
        "n": p.n(),
        "k": p.k(),
        "seq": seq_json(&input.seq),
        "mode": args.mode.name(),
        "method": format!("{:?}", args.method).to_lowercase(),
    });

    match args.method {
        Method::Brute => {
            let r = kperm_brute_side(&p, args.mode, &limits)?;
            report.results = extremal_json(&r);
        }
        Method::Closed => {
            let which = match args.mode {
                Mode::Vmin => kperm::Which::VMin,
                Mode::Vmax => kperm::Which::VMax,
                Mode::Wmin => kperm::Which::WMin,
                Mode::Wmax => kperm::Which::WMax,
            };
            let mut closed = closed_form_catalog(&p, which);
            let mut via = closed.as_ref().map(|_| "catalog");
            if closed.is_none() {
                if let (SeqSource::Ap(ap), Mode::Wmax) = (&input.source, args.mode) {
                    closed = progression::w_max_ap(ap, p.k());
                    via = closed.as_ref().map(|_| "progression-wmax");
                }
            }
            if closed.is_none() {
                if let (SeqSource::Gp(gp), Mode::Vmin) = (&input.source, args.mode) {
                    if let Some(power) = progression::v_min_gp(gp, p.k()) {
                        report.results = json!({
                            "closed_form": power.value(),
                            "exact_power": power,
                            "via": "geometric-vmin",
                        });
                        closed = power.value();
                        via = Some("geometric-vmin");
                    }
                }
            }
            if report.results.is_null() {
                report.results = json!({"closed_form": closed, "via": via});
            }
            if let Some(cf) = &closed {
                if kperm_brute_feasible(&p, &limits) {
                    let brute = kperm_brute_side(&p, args.mode, &limits)?;
                    report.check(
                        "closed-vs-brute",
                        *cf == brute.value,
                        (*cf != brute.value)
                            .then(|| json!({"closed": cf, "brute": brute.value})),
                    );
                }
            }
        }
        Method::Bound => match args.mode {
            Mode::Vmin => {
                let (lhs_pow, rhs_pow) = kperm::v_min_power_bound(&p, &limits)?;
                let holds = lhs_pow >= rhs_pow;
                report.results = json!({
                    "vmin_pow": lhs_pow,
                    "lower_bound_pow": rhs_pow,
                    "tight": p.k() % p.n() == 0,
                });
                report.check("vmin-power-bound", holds, None);
            }
            Mode::Wmax => {
                let n = p.n() as i64;
                let sum: Rational = p.seq().values().iter().sum();
                let upper =
                    (Rational::from_int(p.k() as i64) * sum / Rational::from_int(n)).pow(n);
                report.results = json!({
                    "upper_bound": upper,
                    "tight": p.k() % p.n() == 0,
                });
                if kperm_brute_feasible(&p, &limits) {
                    let brute = kperm_brute_side(&p, args.mode, &limits)?;
                    report.check("wmax-upper-bound", brute.value <= upper, None);
                }
            }
            _ => {
                return Err(CliError::Usage(
                    "--method bound applies to vmin and wmax".into(),
                ))
            }
        },
        Method::Construct => {
            let n = p.n();
            let k = p.k();
            let (ms, claim_optimal) = match args.mode {
                Mode::Vmax | Mode::Wmin => (
                    PermMultiset::new(vec![Permutation::identity(n); k])?,
                    true,
                ),
                Mode::Vmin => {
                    if k % n != 0 {
                        return Err(CliError::Usage(
                            "vmin construction needs n | k (cyclic rotations)".into(),
                        ));
                    }
                    (progression::build_kset_even(n, 0, k / n)?, true)
                }
                Mode::Wmax => {
                    let ms = if let Some((t, u)) = representable_2t_nu(n, k) {
                        progression::build_kset_even(n, t, u)?
                    } else if n % 2 == 0 && k % 2 == 1 && k >= n - 1 {
                        progression::build_kset_odd(n, k)?
                    } else {
                        return Err(CliError::Usage(
                            "no wmax construction: need k = 2t+nu, or even n with odd k >= n-1"
                                .into(),
                        ));
                    };
                    (ms, matches!(input.source, SeqSource::Ap(_)))
                }
            };
            let value = if args.mode.is_v() {
                kperm::v_value(&p, &ms)?
            } else {
                kperm::w_value(&p, &ms)?
            };
            report.results = json!({
                "value": value,
                "witness": multiset_json(&ms),
                "column_sums": ColumnSums::from_multiset(&ms).sums(),
            });
            if claim_optimal && kperm_brute_feasible(&p, &limits) {
                let brute = kperm_brute_side(&p, args.mode, &limits)?;
                report.check(
                    "construct-attains-extremum",
                    value == brute.value,
                    (value != brute.value).then(|| json!({"construct": value, "brute": brute.value})),
                );
            }
        }
    }
    Ok(report.into())
}

fn run_pool(args: &PoolArgs) -> Result<CommandOutput, CliError> {
    let limits = Limits::from_env();
    let total = args.n * args.k;
    let picked = usize::from(args.pool.is_some())
        + usize::from(args.pool_file.is_some())
        + usize::from(args.int)
        + usize::from(args.ap.is_some())
        + usize::from(args.gp.is_some());
    if picked != 1 {
        return Err(CliError::Usage(
            "pass exactly one of --pool, --pool-file, --int, --ap, --gp".into(),
        ));
    }
    let mut source = SeqSource::Explicit;
    let values: Vec<Rational> = if let Some(s) = &args.pool {
        rearrange_core::sequence::parse_rationals(s)?
    } else if let Some(path) = &args.pool_file {
        load_pool_file(path)?
    } else {
        let seq_input = parse_seq_args(
            Some(total),
            &None,
            &args.ap,
            args.int,
            &args.gp,
            false,
            "k*n",
        )?;
        source = seq_input.source;
        seq_input.seq.values().to_vec()
    };
    let p = PoolProblem::new(values, args.n, args.k)?;
    let objective = if args.mode.is_v() {
        BlockObjective::V
    } else {
        BlockObjective::W
    };
    let feasible =
        partition_count(args.n, args.k).is_some_and(|c| c <= limits.max_nodes as u128);
    let brute_side = |limits: &Limits| -> Result<ExtremalResult<BlockPartition>, CliError> {
        let pair = pool_extrema_brute(&p, objective, limits)?;
        Ok(if args.mode.is_min() { pair.0 } else { pair.1 })
    };

    let mut report = RunReport::new("pool");
    report.inputs = json!({
        "n": args.n,
        "k": args.k,
        "pool": p.pool().iter().map(|v| v.to_string()).collect::<Vec<_>>(),
        "mode": args.mode.name(),
        "method": format!("{:?}", args.method).to_lowercase(),
    });

    match args.method {
        Method::Brute => {
            let r = brute_side(&limits)?;
            report.results = partition_extremal_json(&r);
        }
        Method::Closed => {
            let sc = sorted_constructions(&p);
            let mut closed: Option<Rational> = match args.mode {
                Mode::Vmax => Some(sc.v_max.clone()),
                Mode::Wmin => Some(sc.w_min.clone()),
                Mode::Vmin => sc.v_min_pairing.clone(),
                Mode::Wmax => sc.w_max_pairing.clone(),
            };
            let mut via = closed.as_ref().map(|_| "sorted-construction");
            if closed.is_none() {
                match (&source, args.mode) {
                    (SeqSource::Ap(ap), Mode::Wmax) => {
                        if let Some((value, _)) = pool::w_max_variation(ap, args.n, args.k)? {
                            closed = Some(value);
                            via = Some("progression-wmax");
                        }
                    }
                    (SeqSource::Gp(gp), Mode::Vmin) => {
                        if let Some(power) = pool::gp_v_min_variation(gp, args.n, args.k)? {
                            closed = power.value();
                            via = Some("geometric-vmin");
                        }
                    }
                    _ => {}
                }
            }
            report.results = json!({"closed_form": closed, "via": via});
            if let Some(cf) = &closed {
                if feasible {
                    let brute = brute_side(&limits)?;
                    report.check(
                        "closed-vs-brute",
                        *cf == brute.value,
                        (*cf != brute.value)
                            .then(|| json!({"closed": cf, "brute": brute.value})),
                    );
                }
            }
        }
        Method::Bound => {
            let sc = sorted_constructions(&p);
            match args.mode {
                Mode::Vmin => {
                    report.results = json!({"lower_bound_pow": sc.am_gm_lower_pow});
                    if feasible {
                        let brute = brute_side(&limits)?;
                        report.check(
                            "vmin-am-gm-bound",
                            brute.value.pow(args.n as i64) >= sc.am_gm_lower_pow,
                            None,
                        );
                    }
                }
                Mode::Wmax => {
                    report.results = json!({"upper_bound": sc.am_gm_upper});
                    if feasible {
                        let brute = brute_side(&limits)?;
                        report.check("wmax-am-gm-bound", brute.value <= sc.am_gm_upper, None);
                    }
                }
                _ => {
                    return Err(CliError::Usage(
                        "--method bound applies to vmin and wmax".into(),
                    ))
                }
            }
        }
        Method::Construct => {
            let mut sorted = p.pool().to_vec();
            sorted.sort();
            let sorted_p = PoolProblem::new(sorted, args.n, args.k)?;
            let (partition, claim) = match args.mode {
                Mode::Vmax | Mode::Wmin => {
                    (BlockPartition::consecutive(args.n, args.k), true)
                }
                Mode::Vmin => {
                    if args.k != 2 {
                        return Err(CliError::Usage(
                            "vmin pairing construction needs k = 2".into(),
                        ));
                    }
                    let blocks = (1..=args.n)
                        .map(|i| vec![i, 2 * args.n - i + 1])
                        .collect();
                    (BlockPartition::new(blocks, args.n, args.k)?, true)
                }
                Mode::Wmax => match (&source, args.k) {
                    (SeqSource::Ap(ap), _) => {
                        let Some((_, witness)) = pool::w_max_variation(ap, args.n, args.k)?
                        else {
                            return Err(CliError::Usage(
                                "no wmax construction for this (n,k)".into(),
                            ));
                        };
                        (witness, true)
                    }
                    (_, 2) => {
                        let blocks = (1..=args.n)
                            .map(|i| vec![i, 2 * args.n - i + 1])
                            .collect();
                        (BlockPartition::new(blocks, args.n, args.k)?, true)
                    }
                    _ => {
                        return Err(CliError::Usage(
                            "wmax construction needs an --ap/--int pool or k = 2".into(),
                        ))
                    }
                },
            };
            let value = if args.mode.is_v() {
                pool::block_v(&sorted_p, &partition)?
            } else {
                pool::block_w(&sorted_p, &partition)?
            };
            report.results = json!({
                "value": value,
                "witness": partition.blocks(),
                "indices_refer_to": "ascending-sorted pool",
            });
            if claim && feasible {
                let pair = pool_extrema_brute(&sorted_p, objective, &limits)?;
                let brute = if args.mode.is_min() { pair.0 } else { pair.1 };
                report.check(
                    "construct-attains-extremum",
                    value == brute.value,
                    (value != brute.value).then(|| json!({"construct": value, "brute": brute.value})),
                );
            }
        }
    }
    Ok(report.into())
}

fn parse_fg(key: &str) -> Result<FgEntry, CliError> {
    if let Some(entry) = framework::entry_by_key(key) {
        return Ok(entry);
    }
    let (f, g) = key
        .split_once(':')
        .ok_or_else(|| CliError::Usage(format!("bad --fg key `{key}`, expected f:g")))?;
    let f = CombinerKind::from_name(f)
        .ok_or_else(|| CliError::Usage(format!("unknown combiner `{f}`")))?;
    let g = AggregatorKind::from_name(g)
        .ok_or_else(|| CliError::Usage(format!("unknown aggregator `{g}`")))?;
    // non-catalog combination: stay on the safe domain
    Ok(FgEntry::new(f, g, Domain::NonnegReals))
}

fn run_circular(args: &CircularArgs) -> Result<CommandOutput, CliError> {
    let limits = Limits::from_env();
    let entry = parse_fg(&args.fg)?;
    let vals = rearrange_core::sequence::parse_rationals(&args.seq)?;
    let seq = if args.sort {
        OrderedSequence::from_unsorted(vals)?
    } else {
        OrderedSequence::sorted(vals)?
    };
    let mut report = RunReport::new("circular");
    report.inputs = json!({"seq": seq_json(&seq), "fg": entry.key()});

    if let Some(arr) = &args.arrangement {
        let sigma: Permutation = arr.parse()?;
        let value = circular_value(&entry, &seq, &sigma)?;
        report.results = json!({
            "arrangement": sigma.to_string(),
            "canonical_necklace": necklace_canonical(&sigma).to_string(),
            "value": value,
        });
        return Ok(report.into());
    }

    let (min, max) = circular_extrema_brute(&entry, &seq, &limits)?;
    let n = seq.len();
    let m1 = necklace_canonical(&sigma_m1(n)?);
    let m2 = necklace_canonical(&sigma_m2(n)?);
    report.results = json!({
        "min": {"value": min.value, "necklace": min.witness.to_string(), "optima_count": min.optima_count},
        "max": {"value": max.value, "necklace": max.witness.to_string(), "optima_count": max.optima_count},
        "nodes_explored": min.nodes_explored,
        "sigma_m1": m1.to_string(),
        "sigma_m2": m2.to_string(),
    });
    match entry.key().as_str() {
        "times:sum" => {
            report.check("min-at-sigma-m1", min.witness == m1, None);
            report.check("max-at-sigma-m2", max.witness == m2, None);
        }
        "plus:prod" => {
            report.check("min-at-sigma-m2", min.witness == m2, None);
            report.check("max-at-sigma-m1", max.witness == m1, None);
        }
        _ => {}
    }
    Ok(report.into())
}

fn run_general(args: &GeneralArgs) -> Result<CommandOutput, CliError> {
    let limits = Limits::from_env();
    let entry = match (&args.fg, &args.f, &args.g) {
        (Some(key), None, None) => parse_fg(key)?,
        (None, Some(f), Some(g)) => {
            let f = CombinerKind::from_name(f)
                .ok_or_else(|| CliError::Usage(format!("unknown combiner `{f}`")))?;
            let g = AggregatorKind::from_name(g)
                .ok_or_else(|| CliError::Usage(format!("unknown aggregator `{g}`")))?;
            let domain = match args.domain.as_deref() {
                Some("all") => Domain::AllReals,
                Some("nonneg") | None => Domain::NonnegReals,
                Some(other) => {
                    return Err(CliError::Usage(format!(
                        "unknown domain `{other}`, expected all|nonneg"
                    )))
                }
            };
            FgEntry::new(f, g, domain)
        }
        _ => {
            return Err(CliError::Usage(
                "pass --fg KEY or both --f and --g".into(),
            ))
        }
    };
    let mut report = RunReport::new("general");
    let parse_sorted = |spec: &Option<String>, name: &str| -> Result<OrderedSequence, CliError> {
        let s = spec
            .as_ref()
            .ok_or_else(|| CliError::Usage(format!("--{name} is required for this check")))?;
        let vals = rearrange_core::sequence::parse_rationals(s)?;
        Ok(if args.sort {
            OrderedSequence::from_unsorted(vals)?
        } else {
            OrderedSequence::sorted(vals)?
        })
    };

    match args.check {
        GeneralCheck::Order1 => {
            let seed = args
                .seed
                .ok_or_else(|| CliError::Usage("--seed is required for order1".into()))?;
            report.seed = Some(seed);
            report.inputs = json!({
                "fg": entry.key(),
                "domain": format!("{:?}", entry.domain),
                "check": "order1",
                "samples": args.samples,
            });
            let rep = check_order1(&entry, args.samples, seed);
            report.results = json!({"samples_run": rep.samples_run});
            report.check(
                "order1",
                rep.passed,
                rep.counterexample.map(|ce| serde_json::to_value(ce).unwrap()),
            );
        }
        GeneralCheck::Newri => {
            let a = parse_sorted(&args.seq_a, "seq-a")?;
            let b = parse_sorted(&args.seq_b, "seq-b")?;
            report.inputs =
                json!({"fg": entry.key(), "check": "newri", "a": seq_json(&a), "b": seq_json(&b)});
            let rep = framework::verify_newri(&entry, &a, &b, &limits)?;
            report.results = json!({"lower": rep.lower, "upper": rep.upper});
            report.check(
                "newri-sandwich",
                rep.passed,
                rep.counterexample.map(|s| json!(s.to_string())),
            );
        }
        GeneralCheck::Newri2 => {
            let a = parse_sorted(&args.seq_a, "seq-a")?;
            let b = parse_sorted(&args.seq_b, "seq-b")?;
            report.inputs =
                json!({"fg": entry.key(), "check": "newri2", "a": seq_json(&a), "b": seq_json(&b)});
            let rep = framework::verify_newri2(&entry, &a, &b, &limits)?;
            report.check(
                "newri2-sandwich",
                rep.passed,
                rep.counterexample
                    .map(|(s, m)| json!({"sigma": s.to_string(), "mu": m.to_string()})),
            );
        }
        GeneralCheck::Multi => {
            let spec = args
                .rows
                .as_ref()
                .ok_or_else(|| CliError::Usage("--rows is required for multi".into()))?;
            let rows: Vec<OrderedSequence> = spec
                .split(';')
                .map(|r| {
                    let vals = rearrange_core::sequence::parse_rationals(r)?;
                    if args.sort {
                        OrderedSequence::from_unsorted(vals)
                    } else {
                        OrderedSequence::sorted(vals)
                    }
                })
                .collect::<Result<_, _>>()?;
            report.inputs = json!({
                "f": entry.f.name(),
                "g": entry.g.name(),
                "check": "multi",
                "rows": rows.iter().map(seq_json).collect::<Vec<_>>(),
            });
            let rep = framework::verify_multi(entry.f, entry.g, &rows, &limits)?;
            report.results = json!({"aligned": rep.aligned});
            report.check(
                "multi-aligned-dominates",
                rep.passed,
                rep.counterexample
                    .map(|sigmas| json!(sigmas.iter().map(|s| s.to_string()).collect::<Vec<_>>())),
            );
        }
    }
    Ok(report.into())
}

fn run_matrix(args: &MatrixArgs) -> Result<CommandOutput, CliError> {
    let limits = Limits::from_env();
    let mut report = RunReport::new("matrix");
    match args.op {
        MatrixOp::Psd => {
            let path = args
                .file
                .as_ref()
                .ok_or_else(|| CliError::Usage("--file is required for psd".into()))?;
            let m = load_matrix(path)?;
            let outcome = algebra::psd_check_certified(&m);
            report.inputs = json!({"op": "psd", "file": path});
            report.results = serde_json::to_value(&outcome).unwrap();
        }
        MatrixOp::Loewner => {
            let a = load_matrix(
                args.file
                    .as_ref()
                    .ok_or_else(|| CliError::Usage("--file is required".into()))?,
            )?;
            let b = load_matrix(
                args.file_b
                    .as_ref()
                    .ok_or_else(|| CliError::Usage("--file-b is required".into()))?,
            )?;
            report.inputs = json!({"op": "loewner"});
            report.results = json!({
                "a_leq_b": algebra::loewner_leq(&a, &b)?,
                "b_leq_a": algebra::loewner_leq(&b, &a)?,
            });
        }
        MatrixOp::Star => {
            let star = args
                .star
                .as_ref()
                .ok_or_else(|| CliError::Usage("--star is required".into()))?;
            report.inputs = json!({"op": "star", "star": star});
            let result: Value = match star.as_str() {
                "dot" => {
                    let u = parse_vector(
                        args.vec_a
                            .as_ref()
                            .ok_or_else(|| CliError::Usage("--vec-a required".into()))?,
                    )?;
                    let v = parse_vector(
                        args.vec_b
                            .as_ref()
                            .ok_or_else(|| CliError::Usage("--vec-b required".into()))?,
                    )?;
                    json!(algebra::dot(&u, &v)?)
                }
                "bilinear" => {
                    let u = parse_vector(
                        args.vec_a
                            .as_ref()
                            .ok_or_else(|| CliError::Usage("--vec-a required".into()))?,
                    )?;
                    let v = parse_vector(
                        args.vec_b
                            .as_ref()
                            .ok_or_else(|| CliError::Usage("--vec-b required".into()))?,
                    )?;
                    let a = load_matrix(
                        args.file
                            .as_ref()
                            .ok_or_else(|| CliError::Usage("--file required".into()))?,
                    )?;
                    json!(algebra::bilinear(&u, a.matrix(), &v)?)
                }
                "matmul" | "frobenius" | "hadamard" | "kronecker" | "rev-kronecker" => {
                    let a = load_matrix(
                        args.file
                            .as_ref()
                            .ok_or_else(|| CliError::Usage("--file required".into()))?,
                    )?;
                    let b = load_matrix(
                        args.file_b
                            .as_ref()
                            .ok_or_else(|| CliError::Usage("--file-b required".into()))?,
                    )?;
                    match star.as_str() {
                        "matmul" => json!(a.matrix().matmul(b.matrix())?),
                        "frobenius" => json!(a.matrix().frobenius(b.matrix())?),
                        "hadamard" => json!(a.hadamard(&b)?),
                        "kronecker" => json!(a.kronecker(&b)),
                        _ => json!(b.kronecker(&a)),
                    }
                }
                other => {
                    return Err(CliError::Usage(format!(
                        "unknown star `{other}`; known: dot, bilinear, matmul, frobenius, hadamard, kronecker, rev-kronecker"
                    )))
                }
            };
            report.results = json!({"value": result});
        }
        MatrixOp::Chain => {
            let seed = args
                .seed
                .ok_or_else(|| CliError::Usage("--seed is required for chain".into()))?;
            report.seed = Some(seed);
            report.inputs = json!({
                "op": "chain",
                "m": args.m,
                "len": args.len,
                "commuting": args.commuting,
            });
            let chain = generate_loewner_chain(args.m, args.len, args.commuting, seed);
            let matrices = serde_json::to_value(&chain.matrices).unwrap();
            if let Some(path) = &args.out {
                std::fs::write(path, serde_json::to_string_pretty(&matrices).unwrap())
                    .map_err(|e| CliError::Usage(format!("cannot write `{path}`: {e}")))?;
            }
            report.results = json!({"matrices": matrices});
            report.check("chain-verifies", chain.verify().is_ok(), None);
        }
        MatrixOp::VerifyChain => {
            let path = args
                .chain_file
                .as_ref()
                .ok_or_else(|| CliError::Usage("--chain-file is required".into()))?;
            let matrices = load_chain(path)?;
            report.inputs = json!({"op": "verify-chain", "file": path, "commuting": args.commuting});
            let chain = LoewnerChain {
                matrices,
                commuting: args.commuting,
            };
            match chain.verify() {
                Ok(()) => report.check("chain-verifies", true, None),
                Err(e) => report.check("chain-verifies", false, Some(json!(e.to_string()))),
            }
            // chains double as inputs to the kron/hadamard family
            if chain.len() >= 2 {
                let rep = algebra::verify_kron_hadamard(&chain.matrices, &chain.matrices, &limits)?;
                report.check("kron-hadamard-sandwich", rep.passed, rep.counterexample);
            }
        }
    }
    Ok(report.into())
}

fn run_oeis(args: &OeisArgs) -> Result<CommandOutput, CliError> {
    let limits = Limits::from_env();
    let id: OeisId = args.id.parse()?;
    let cells = oeis::table(id, args.max_n, args.max_k, args.max_cells, &limits);
    let mut report = RunReport::new("oeis");
    report.inputs = json!({
        "id": id.to_string(),
        "description": id.describe(),
        "max_n": args.max_n,
        "max_k": args.max_k,
        "max_cells": args.max_cells,
        "traversal": if id.is_linear() { "row over n" } else { "antidiagonals, inner index n ascending" },
    });
    report.results = json!({"cells": cells});
    // one value per line in traversal order
    let plain = cells
        .iter()
        .map(|c| match &c.value {
            Some(v) => v.to_string(),
            None => "uncomputed".into(),
        })
        .collect::<Vec<_>>()
        .join("\n")
        + "\n";
    let mut csv = String::from("n,k,value\n");
    for c in &cells {
        csv.push_str(&format!(
            "{},{},{}\n",
            c.n,
            c.k,
            c.value
                .as_ref()
                .map(|v| v.to_string())
                .unwrap_or_else(|| "uncomputed".into())
        ));
    }
    Ok(CommandOutput {
        report,
        plain_override: Some(plain),
        csv_override: Some(csv),
    })
}

/// Fixed representative computation used by the determinism probe: the
/// searches cover all three parallel engines.
fn determinism_probe(threads: usize) -> Result<Value, CliError> {
    let limits = Limits::from_env();
    let pool_ = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| CliError::Usage(format!("thread pool: {e}")))?;
    pool_.install(|| -> Result<Value, CliError> {
        let p = KPermProblem::new(
            progression::ArithProgression::integers(4).to_sequence(),
            3,
        )?;
        let (vmin, vmax) = v_extrema_brute(&p, &limits)?;
        let pp = PoolProblem::integers(3, 3);
        let (wmin, wmax) = pool_extrema_brute(&pp, BlockObjective::W, &limits)?;
        let entry = framework::entry_by_key("times:sum").expect("catalog");
        let seq = progression::ArithProgression::integers(7).to_sequence();
        let (cmin, cmax) = circular_extrema_brute(&entry, &seq, &limits)?;
        Ok(json!({
            "kperm": {"min": extremal_json(&vmin), "max": extremal_json(&vmax)},
            "pool": {"min": partition_extremal_json(&wmin), "max": partition_extremal_json(&wmax)},
            "circular": {
                "min": {"value": cmin.value, "witness": cmin.witness.to_string()},
                "max": {"value": cmax.value, "witness": cmax.witness.to_string()},
            },
        }))
    })
}

fn run_verify(args: &VerifyArgs) -> Result<CommandOutput, CliError> {
    let seed = args
        .seed
        .ok_or_else(|| CliError::Usage("--seed is required for verify".into()))?;
    let mut cfg = SuiteConfig::new(seed);
    cfg.limits = Limits::from_env();
    if let Some(s) = args.samples {
        cfg.samples = s;
    }
    if let Some(m) = args.m {
        cfg.m = m;
    }
    if let Some(n) = args.max_n {
        cfg.max_n = n;
    }
    if let Some(k) = args.max_k {
        cfg.max_k = k;
    }
    let mut report = RunReport::new("verify");
    report.seed = Some(seed);
    report.inputs = json!({
        "suite": args.suite,
        "samples": cfg.samples,
        "m": cfg.m,
        "max_n": cfg.max_n,
        "max_k": cfg.max_k,
    });

    let names: Vec<&str> = if args.suite == "all" {
        let mut v: Vec<&str> = SUITE_NAMES.to_vec();
        v.push("determinism");
        v
    } else {
        vec![args.suite.as_str()]
    };

    let mut summaries = Vec::new();
    for name in names {
        if name == "determinism" {
            let single = determinism_probe(1)?;
            let many = determinism_probe(
                std::thread::available_parallelism()
                    .map(|p| p.get())
                    .unwrap_or(4)
                    .max(2),
            )?;
            let identical = serde_json::to_string(&single).unwrap()
                == serde_json::to_string(&many).unwrap();
            summaries.push(json!({"suite": "determinism", "cases_run": 1}));
            report.check(
                "suite determinism",
                identical,
                (!identical).then(|| json!({"single": single, "many": many})),
            );
            continue;
        }
        let outcome = run_suite(name, &cfg)?;
        summaries.push(json!({
            "suite": outcome.name,
            "cases_run": outcome.cases_run,
        }));
        let shown: Vec<_> = outcome.failures.iter().take(args.max_failures).collect();
        report.check(
            &format!("suite {name}"),
            outcome.passed,
            (!outcome.passed).then(|| json!(shown)),
        );
    }
    report.results = json!({"suites": summaries});
    Ok(report.into())
}
