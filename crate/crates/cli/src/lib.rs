//! Command-line surface. Every verb funnels through [`run`], which returns
//! buffered output plus an exit code: 0 success/verified, 1 verification
//! failure, 2 usage error, 3 budget exceeded. All iteration is over sorted
//! structures, so identical invocations produce byte-identical output. The
//! verification targets run sequentially; at these scales nothing gains
//! from parallelism.

pub mod golden;
pub mod verify;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lie_whitney::{
    conf_cohomology, ell, hat_aggregate, hat_entry, kappa, lie_graded, nu, pi, tau,
    whitney_homology, HatKind,
};
use partition_core::Partition;
use partition_lattice::{beta_onset_experiment, beta_s, LatticeError};
use sn_characters::CharError;
use stability_analysis::{
    onset_bruteforce, onset_of_m, pairing_stability, PolynomialStatistic, StabilityError,
};
use symfunc_engine::{set_degree_cap, Basis, SymFn, SymFnError};

#[derive(Parser)]
#[command(
    name = "confsym",
    version,
    about = "Exact computations with symmetric-group characters on configuration spaces"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Expand a named character into irreducibles.
    Decompose(DecomposeArgs),
    /// Re-run a named verification suite (or "all").
    Verify(VerifyArgs),
    /// Report sharp stability onsets.
    Onset(OnsetArgs),
    /// Rank-selected homology of the set-partition lattice.
    Beta(BetaArgs),
    /// Cohomology of the full-support subcomplex of the arrangement algebra.
    Os(OsArgs),
    /// Inspect or clear the plethysm disk cache.
    Cache(CacheArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Args)]
pub struct DecomposeArgs {
    /// One of: lie, w, wh, hatlie, hatw, conf, kappa, nu, tau, ell, pi.
    #[arg(long)]
    pub object: String,
    /// Number of points n (the symmetric-group degree).
    #[arg(long)]
    pub size: Option<u32>,
    /// Grading index i for the graded families.
    #[arg(long)]
    pub rank: Option<u32>,
    /// Ambient dimension for conf.
    #[arg(long)]
    pub d: Option<u32>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Abort with exit 3 if a computation would pass this total degree.
    #[arg(long, default_value_t = 16)]
    pub max_degree: u32,
}

#[derive(Args)]
pub struct VerifyArgs {
    /// row-recurrence, wg-recurrence, euler, tables, tableaux, product-gf,
    /// theorem-1-1, whitney-beta, os-concentration, star-tree,
    /// dprime-euler, or all.
    pub target: String,
    /// Upper end of the n sweep (target-specific default).
    #[arg(long)]
    pub nmax: Option<u32>,
    /// Upper end of the grading sweep where applicable.
    #[arg(long)]
    pub imax: Option<u32>,
    /// Truncation degree where applicable.
    #[arg(long)]
    pub degmax: Option<u32>,
    /// "default" runs the published ranges; "quick" trims them for smoke
    /// runs.
    #[arg(long, default_value = "default")]
    pub budget: String,
    /// Abort with exit 3 if a computation would pass this total degree.
    #[arg(long, default_value_t = 16)]
    pub max_degree: u32,
    /// Hard cap on any n sweep; exceeding it exits 3 instead of running.
    #[arg(long)]
    pub max_n: Option<u32>,
    /// Cap on the maximal-chain count of the largest lattice touched.
    #[arg(long, default_value_t = 100_000_000)]
    pub max_chains: u64,
}

#[derive(Args)]
pub struct OnsetArgs {
    /// One of: m, conf, beta, poly.
    #[arg(long)]
    pub object: String,
    /// Shape μ for --object m, e.g. "3,1".
    #[arg(long)]
    pub mu: Option<String>,
    /// Ambient dimension for --object conf.
    #[arg(long)]
    pub d: Option<u32>,
    /// Cohomological degree for --object conf.
    #[arg(long)]
    pub i: Option<u32>,
    /// Comma-separated rank set for --object beta, e.g. "1,2".
    #[arg(long)]
    pub ranks: Option<String>,
    /// Sweep window end (required for beta; optional cross-check for m).
    #[arg(long)]
    pub nmax: Option<u32>,
    /// --object poly: largest |λ| in the pointwise cross-check.
    #[arg(long)]
    pub lammax: Option<u32>,
    /// --object poly: largest polynomial degree in the window sweep.
    #[arg(long)]
    pub degmax: Option<u32>,
    /// --object poly: largest grading level in the window sweep.
    #[arg(long)]
    pub imax: Option<u32>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long, default_value_t = 16)]
    pub max_degree: u32,
    #[arg(long, default_value_t = 100_000_000)]
    pub max_chains: u64,
}

#[derive(Args)]
pub struct BetaArgs {
    /// Comma-separated rank set, e.g. "1,2".
    #[arg(long)]
    pub ranks: String,
    /// Decompose β_S at this single lattice size.
    #[arg(long)]
    pub size: Option<u32>,
    /// Run the padding experiment over 0..=nmax instead.
    #[arg(long)]
    pub nmax: Option<u32>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long, default_value_t = 16)]
    pub max_degree: u32,
    #[arg(long, default_value_t = 100_000_000)]
    pub max_chains: u64,
}

#[derive(Args)]
pub struct OsArgs {
    /// Number of points.
    #[arg(long)]
    pub n: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long, default_value_t = 16)]
    pub max_degree: u32,
    /// Sizes above this exit 3: the top complex grows like d_n.
    #[arg(long, default_value_t = 7)]
    pub max_n: u32,
}

#[derive(Args)]
pub struct CacheArgs {
    /// inspect or clear.
    pub action: String,
}

/// Buffered result of one invocation.
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

#[derive(Debug)]
pub enum CliError {
    /// Bad flags or objects: exit 2.
    Usage(String),
    /// A guarded enumeration or the degree cap would be exceeded: exit 3.
    Budget(String),
    /// Unexpected computational failure: exit 1.
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Budget(_) => 3,
            CliError::Internal(_) => 1,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Budget(m) | CliError::Internal(m) => m,
        }
    }
}

impl From<SymFnError> for CliError {
    fn from(e: SymFnError) -> Self {
        match e {
            SymFnError::DegreeCapExceeded { .. } => CliError::Budget(e.to_string()),
            other => CliError::Internal(other.to_string()),
        }
    }
}

impl From<CharError> for CliError {
    fn from(e: CharError) -> Self {
        match e {
            CharError::Sym(inner) => inner.into(),
            other => CliError::Internal(other.to_string()),
        }
    }
}

impl From<StabilityError> for CliError {
    fn from(e: StabilityError) -> Self {
        match e {
            StabilityError::Sym(inner) => inner.into(),
            StabilityError::Char(inner) => inner.into(),
            other => CliError::Internal(other.to_string()),
        }
    }
}

impl From<LatticeError> for CliError {
    fn from(e: LatticeError) -> Self {
        match e {
            LatticeError::Sym(inner) => inner.into(),
            LatticeError::Char(inner) => inner.into(),
            LatticeError::Stability(inner) => inner.into(),
            other => CliError::Internal(other.to_string()),
        }
    }
}

impl From<orlik_solomon::OsError> for CliError {
    fn from(e: orlik_solomon::OsError) -> Self {
        match e {
            orlik_solomon::OsError::Sym(inner) => inner.into(),
            orlik_solomon::OsError::Char(inner) => inner.into(),
            other => CliError::Internal(other.to_string()),
        }
    }
}

pub fn run(cli: Cli) -> Outcome {
    match dispatch(cli) {
        Ok((stdout, passed)) => Outcome {
            stdout,
            stderr: String::new(),
            code: if passed { 0 } else { 1 },
        },
        Err(e) => Outcome {
            stdout: String::new(),
            stderr: format!("error: {}\n", e.message()),
            code: e.exit_code(),
        },
    }
}

fn dispatch(cli: Cli) -> Result<(String, bool), CliError> {
    match cli.command {
        Command::Decompose(args) => {
            set_degree_cap(args.max_degree);
            decompose(&args).map(|out| (out, true))
        }
        Command::Verify(args) => {
            set_degree_cap(args.max_degree);
            verify::run(&args)
        }
        Command::Onset(args) => {
            set_degree_cap(args.max_degree);
            onset(&args)
        }
        Command::Beta(args) => {
            set_degree_cap(args.max_degree);
            beta(&args).map(|out| (out, true))
        }
        Command::Os(args) => {
            set_degree_cap(args.max_degree);
            os_report(&args).map(|out| (out, true))
        }
        Command::Cache(args) => cache(&args).map(|out| (out, true)),
    }
}

fn parse_partition(s: &str) -> Result<Partition, CliError> {
    s.parse::<Partition>()
        .map_err(|e| CliError::Usage(e.to_string()))
}

fn parse_ranks(s: &str) -> Result<Vec<u32>, CliError> {
    let mut ranks = Vec::new();
    for piece in s.split(',') {
        let r: u32 = piece
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("bad rank list {s:?}")))?;
        ranks.push(r);
    }
    ranks.sort_unstable();
    ranks.dedup();
    if ranks.is_empty() {
        return Err(CliError::Usage("the rank set must be nonempty".into()));
    }
    Ok(ranks)
}

fn need(flag: &str, value: Option<u32>) -> Result<u32, CliError> {
    value.ok_or_else(|| CliError::Usage(format!("--{flag} is required here")))
}

/// Maximal-chain count of the lattice on n points: n!(n−1)!/2^(n−1).
pub fn max_chain_count(n: u32) -> u128 {
    let fact = |k: u32| -> u128 { (2..=k as u128).product() };
    fact(n) * fact(n.saturating_sub(1)) / (1u128 << n.saturating_sub(1).min(127))
}

fn guard_chains(n: u32, max_chains: u64) -> Result<(), CliError> {
    let chains = max_chain_count(n);
    if chains > max_chains as u128 {
        return Err(CliError::Budget(format!(
            "the lattice on {n} points has {chains} maximal chains, above --max-chains {max_chains}"
        )));
    }
    Ok(())
}

/// Renders a Schur expansion as stable text: one reverse-lexicographic
/// line per shape.
fn expansion_text(f: &SymFn) -> String {
    let exp = f.convert(Basis::S);
    if exp.is_zero() {
        return "0\n".into();
    }
    let mut out = String::new();
    for (lam, c) in &exp.terms {
        out.push_str(&format!("[{lam}] {c}\n"));
    }
    out
}

fn render(f: &SymFn, format: Format) -> String {
    match format {
        Format::Text => expansion_text(f),
        Format::Json => {
            let mut s = f.convert(Basis::S).to_json();
            s.push('\n');
            s
        }
    }
}

fn decompose(args: &DecomposeArgs) -> Result<String, CliError> {
    let f = match args.object.as_str() {
        "ell" => {
            let n = need("size", args.size)?;
            if n == 0 {
                return Err(CliError::Usage("ell needs --size at least 1".into()));
            }
            ell(n)?
        }
        "pi" => {
            let n = need("size", args.size)?;
            if n == 0 {
                return Err(CliError::Usage("pi needs --size at least 1".into()));
            }
            pi(n)?
        }
        "kappa" => kappa(need("size", args.size)?)?,
        "nu" => nu(need("size", args.size)?)?,
        "tau" => tau(need("size", args.size)?)?,
        "lie" => lie_graded(need("rank", args.rank)?, need("size", args.size)?)?,
        "w" | "wh" => whitney_homology(need("rank", args.rank)?, need("size", args.size)?)?,
        "hatlie" => hat_entry(HatKind::Lie, need("rank", args.rank)?, need("size", args.size)?)?,
        "hatw" => hat_entry(HatKind::W, need("rank", args.rank)?, need("size", args.size)?)?,
        "conf" => {
            let d = need("d", args.d)?;
            if d < 2 {
                return Err(CliError::Usage("conf needs --d at least 2".into()));
            }
            conf_cohomology(need("size", args.size)?, d, need("rank", args.rank)?)?
        }
        other => {
            return Err(CliError::Usage(format!(
                "unknown object {other:?}; expected one of lie, w, wh, hatlie, hatw, conf, kappa, nu, tau, ell, pi"
            )))
        }
    };
    Ok(render(&f, args.format))
}

fn onset(args: &OnsetArgs) -> Result<(String, bool), CliError> {
    match args.object.as_str() {
        "m" => {
            let mu = parse_partition(
                args.mu
                    .as_deref()
                    .ok_or_else(|| CliError::Usage("--mu is required here".into()))?,
            )?;
            let chi = SymFn::s(&mu)?;
            let onset = onset_of_m(&chi)?;
            let mut out = format!("sharp onset {onset}\n");
            let mut passed = true;
            if let Some(nmax) = args.nmax {
                let brute = onset_bruteforce(&chi, nmax)?;
                let verdict = if brute == onset { "AGREE" } else { "DISAGREE" };
                out.push_str(&format!("bruteforce onset {brute} over 0..={nmax} {verdict}\n"));
                passed = brute == onset;
            }
            Ok((out, passed))
        }
        "conf" => {
            let d = need("d", args.d)?;
            let i = need("i", args.i)?;
            if d < 2 {
                return Err(CliError::Usage("conf needs --d at least 2".into()));
            }
            if i % (d - 1) != 0 {
                return Err(CliError::Usage(format!(
                    "degree {i} vanishes identically: it is not a multiple of d-1 = {}",
                    d - 1
                )));
            }
            let level = i / (d - 1);
            let kind = if d % 2 == 1 { HatKind::Lie } else { HatKind::W };
            let onset = onset_of_m(&hat_aggregate(kind, level)?)?;
            Ok((format!("sharp onset {onset}\n"), true))
        }
        "beta" => {
            let ranks = parse_ranks(
                args.ranks
                    .as_deref()
                    .ok_or_else(|| CliError::Usage("--ranks is required here".into()))?,
            )?;
            let nmax = need("nmax", args.nmax)?;
            guard_chains(nmax, args.max_chains)?;
            let report = beta_experiment_checked(&ranks, nmax)?;
            let out = match args.format {
                Format::Json => format!("{}\n", report.to_json()),
                Format::Text => format!(
                    "observed onset {}\nstability bound {}\nconjectured onset {}\ncertified {}\nconjecture consistent {}\n",
                    report.observed_onset,
                    report.stability_bound,
                    report.conjectured_onset,
                    report.certified,
                    report.conjecture_consistent,
                ),
            };
            Ok((out, true))
        }
        "poly" => poly_sweep(args),
        other => Err(CliError::Usage(format!(
            "unknown object {other:?}; expected one of m, conf, beta, poly"
        ))),
    }
}

fn beta_experiment_checked(
    ranks: &[u32],
    nmax: u32,
) -> Result<partition_lattice::BetaOnsetReport, CliError> {
    beta_onset_experiment(ranks, nmax).map_err(|e| match e {
        LatticeError::RankOutOfRange { .. }
        | LatticeError::EmptyRankSet
        | LatticeError::WindowTooShort { .. } => CliError::Usage(e.to_string()),
        other => other.into(),
    })
}

/// The two polynomial-character sweeps: the Frobenius image against
/// pointwise class-function evaluation, and the constant-range window for
/// pairings with both graded families.
fn poly_sweep(args: &OnsetArgs) -> Result<(String, bool), CliError> {
    let lammax = args.lammax.unwrap_or(5);
    let degmax = args.degmax.unwrap_or(3);
    let imax = args.imax.unwrap_or(3);
    let nmax = args.nmax.unwrap_or(14);
    let mut out = String::new();
    let mut passed = true;

    let ch_window = nmax.min(9);
    for size in 0..=lammax {
        for lam in partition_core::partitions_of(size) {
            let p = PolynomialStatistic::binomial(&lam);
            let mut ok = true;
            for n in 0..=ch_window {
                let via_formula = p.ch(n)?;
                let via_classes = p.class_function(n)?.frobenius_ch()?;
                if via_formula != via_classes {
                    ok = false;
                }
            }
            let verdict = if ok { "PASS" } else { "FAIL" };
            out.push_str(&format!("poly-ch [{lam}] n<={ch_window} {verdict}\n"));
            passed &= ok;
        }
    }

    let mut polys: Vec<PolynomialStatistic> = Vec::new();
    for size in 0..=degmax {
        for lam in partition_core::partitions_of(size) {
            polys.push(PolynomialStatistic::binomial(&lam));
        }
    }
    for literal in ["b(1,1)b(1,1)", "2b(1,1) - b(2,1)", "b(1,1)b(2,1)"] {
        let p: PolynomialStatistic = literal
            .parse()
            .map_err(|e: StabilityError| CliError::Internal(e.to_string()))?;
        if p.degree().unwrap_or(0) <= degmax {
            polys.push(p);
        }
    }
    for p in &polys {
        for level in 0..=imax {
            for d in [2u32, 3] {
                let kind = if d % 2 == 1 { HatKind::Lie } else { HatKind::W };
                let chi = hat_aggregate(kind, level)?;
                let report = pairing_stability(p, &chi, nmax)?;
                let ok = report.certified && report.observed_onset <= report.predicted_bound;
                let verdict = if ok { "PASS" } else { "FAIL" };
                out.push_str(&format!(
                    "poly-window {p} level={level} d={d} onset {} bound {} {verdict}\n",
                    report.observed_onset, report.predicted_bound
                ));
                passed &= ok;
            }
        }
    }
    Ok((out, passed))
}

fn beta(args: &BetaArgs) -> Result<String, CliError> {
    let ranks = parse_ranks(&args.ranks)?;
    match (args.size, args.nmax) {
        (Some(_), Some(_)) => Err(CliError::Usage(
            "--size and --nmax are mutually exclusive".into(),
        )),
        (Some(n), None) => {
            guard_chains(n, args.max_chains)?;
            let character = beta_s(n, &ranks).map_err(|e| match e {
                LatticeError::RankOutOfRange { .. } | LatticeError::EmptyRankSet => {
                    CliError::Usage(e.to_string())
                }
                other => other.into(),
            })?;
            let decomposition = character.decompose()?;
            Ok(match args.format {
                Format::Json => format!("{}\n", decomposition.to_json()),
                Format::Text => {
                    let mut out = String::new();
                    for (lam, mult) in decomposition.multiplicities() {
                        out.push_str(&format!("[{lam}] {mult}\n"));
                    }
                    if out.is_empty() {
                        out.push_str("0\n");
                    }
                    out
                }
            })
        }
        (None, Some(nmax)) => {
            guard_chains(nmax, args.max_chains)?;
            let report = beta_experiment_checked(&ranks, nmax)?;
            Ok(match args.format {
                Format::Json => format!("{}\n", report.to_json()),
                Format::Text => format!(
                    "observed onset {}\nstability bound {}\nconjectured onset {}\ncertified {}\nconjecture consistent {}\n",
                    report.observed_onset,
                    report.stability_bound,
                    report.conjectured_onset,
                    report.certified,
                    report.conjecture_consistent,
                ),
            })
        }
        (None, None) => Err(CliError::Usage("pass --size N or --nmax N".into())),
    }
}

fn os_report(args: &OsArgs) -> Result<String, CliError> {
    if args.n < 2 {
        return Err(CliError::Usage("--n must be at least 2".into()));
    }
    if args.n > args.max_n {
        return Err(CliError::Budget(format!(
            "n = {} is above --max-n {}; raise the cap to spend the time",
            args.n, args.max_n
        )));
    }
    let dims = orlik_solomon::hatw_cohomology(args.n)?;
    let top = orlik_solomon::hatw_top_character(args.n)?;
    let expansion = top.convert(Basis::S);
    Ok(match args.format {
        Format::Json => {
            let top_value: serde_json::Value = serde_json::from_str(&expansion.to_json())
                .expect("expansion JSON round-trips");
            let report = serde_json::json!({
                "n": args.n,
                "dims": dims,
                "top_character": top_value,
            });
            format!("{report}\n")
        }
        Format::Text => {
            let mut out = String::new();
            for (degree, dim) in &dims {
                out.push_str(&format!("degree {degree}: dim {dim}\n"));
            }
            out.push_str("top character:\n");
            out.push_str(&expansion_text(&top));
            out
        }
    })
}

fn cache(args: &CacheArgs) -> Result<String, CliError> {
    match args.action.as_str() {
        "inspect" => {
            let dir = symfunc_engine::plethysm_cache_dir();
            let mut entries = 0u64;
            let mut bytes = 0u64;
            if let Ok(listing) = std::fs::read_dir(&dir) {
                for entry in listing.flatten() {
                    if let Ok(meta) = entry.metadata() {
                        if meta.is_file() {
                            entries += 1;
                            bytes += meta.len();
                        }
                    }
                }
            }
            Ok(format!("dir {}\nentries {entries}\nbytes {bytes}\n", dir.display()))
        }
        "clear" => {
            let removed = symfunc_engine::clear_plethysm_cache()
                .map_err(|e| CliError::Internal(format!("cache clear failed: {e}")))?;
            Ok(format!("removed {removed} entries\n"))
        }
        other => Err(CliError::Usage(format!(
            "unknown cache action {other:?}; expected inspect or clear"
        ))),
    }
}
