//! Command-line front end for `kostant-core`.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use kostant_core::grassmann::{reduce_w_poly, relation_f, verify_presentation};
use kostant_core::matrix_model::{
    casimir_bounded, fundamental_rep, kostant_matrix, scalar_of, spectrum_verify_bounded,
};
use kostant_core::pte::{
    brute_search, extract_from_collision, ideal_search, verify, Budget, IdealSearchOptions, MaxDegree,
};
use kostant_core::separation::{find_collisions, t0, tensor_decompose};
use kostant_core::symfunc::{lr_expand, schur_alternant, schur_jacobi_trudi};
use kostant_core::weights::{char_equal, parse_index_set};
use kostant_core::{cartan, Error, FundWeight, GrassElement, Partition, Report, YoungPattern};
use rand::{Rng, SeedableRng};
use serde_json::json;

#[derive(Parser, Debug)]
#[command(name = "kostant", version, about = "Exact checks linking sl_n central characters, Grassmannian cohomology and PTE solutions")]
struct Cli {
    #[command(flatten)]
    config: Config,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Global settings shared by every subcommand.
#[derive(Args, Debug)]
struct Config {
    /// Output format; `json` emits one record per line
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// Worker threads (0 = one per core)
    #[arg(long, global = true, env = "KOSTANT_WORKERS", default_value_t = 0)]
    workers: usize,
    /// Candidate limit for searches
    #[arg(long, global = true, default_value_t = 50_000_000, value_parser = clap::value_parser!(u64).range(1..))]
    max_candidates: u64,
    /// Wall-clock limit for searches, in seconds
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    time_limit: Option<u64>,
    /// Largest Casimir degree evaluated
    #[arg(long, global = true, default_value_t = 6, value_parser = clap::value_parser!(u32).range(2..))]
    max_p: u32,
    /// Largest tensor dimension for spectrum checks
    #[arg(long, global = true, default_value_t = 400, value_parser = clap::value_parser!(u64).range(1..))]
    max_dim: u64,
}

impl Config {
    fn budget(&self) -> Budget {
        Budget {
            max_candidates: self.max_candidates,
            deadline: self.time_limit.map(|s| Instant::now() + Duration::from_secs(s)),
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Prouhet-Tarry-Escott solutions
    #[command(subcommand)]
    Pte(PteCmd),
    /// Central-character equality
    #[command(subcommand)]
    Char(CharCmd),
    /// Power-sum functionals of weights
    #[command(subcommand)]
    Weights(WeightsCmd),
    /// Schur polynomial in n variables
    Schur {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "jacobi-trudi")]
        method: SchurMethod,
    },
    /// Littlewood-Richardson expansion of s_mu * s_nu
    Lr {
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        nu: Partition,
    },
    /// Cohomology ring of the Grassmannian
    #[command(subcommand)]
    Grassmann(GrassCmd),
    /// Diagonal Schur-matrix basis on the Cartan
    #[command(subcommand)]
    Cartan(CartanCmd),
    /// Tensor constituents and their separation
    #[command(subcommand)]
    Separation(SepCmd),
    /// Exterior-power matrices, Casimirs and Kostant matrices
    #[command(subcommand)]
    Matrix(MatrixCmd),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum SchurMethod {
    JacobiTrudi,
    Alternant,
}

#[derive(Subcommand, Debug)]
enum PteCmd {
    /// Check equal power sums through a degree
    Verify {
        #[arg(long, allow_hyphen_values = true, value_delimiter = ',')]
        x: Vec<i64>,
        #[arg(long, allow_hyphen_values = true, value_delimiter = ',')]
        y: Vec<i64>,
        #[arg(long)]
        degree: u32,
    },
    /// Exhaustive search over entries in [-bound, bound]
    Brute {
        #[arg(long)]
        size: usize,
        #[arg(long)]
        degree: u32,
        #[arg(long)]
        bound: u32,
    },
    /// Ideal solutions from depth-k collisions over sl_2k weights
    Ideal {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        bound: u32,
        /// Resumable checkpoint file
        #[arg(long)]
        checkpoint: Option<PathBuf>,
    },
    /// Lists extracted from two constituents nu + lambda_I, nu + lambda_J
    FromWeights {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        nu: FundWeight,
        #[arg(long)]
        i: String,
        #[arg(long)]
        j: String,
    },
}

#[derive(Subcommand, Debug)]
enum CharCmd {
    /// Whether two Young patterns share a central character
    Equal {
        #[arg(long, allow_hyphen_values = true)]
        f: YoungPattern,
        #[arg(long, allow_hyphen_values = true)]
        g: YoungPattern,
    },
}

#[derive(Subcommand, Debug)]
enum WeightsCmd {
    /// S_2..S_p of a Young pattern or a weight
    Sfun {
        #[arg(long, allow_hyphen_values = true, conflicts_with = "nu", required_unless_present = "nu")]
        f: Option<YoungPattern>,
        #[arg(long)]
        nu: Option<FundWeight>,
        #[arg(long, default_value_t = 4)]
        p: u32,
    },
}

#[derive(Subcommand, Debug)]
enum GrassCmd {
    /// Product of two Schubert classes
    Mul {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        a: Partition,
        #[arg(long)]
        b: Partition,
    },
    /// Relation generators and their images
    Relations {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        /// Use the sign-carrying variant
        #[arg(long)]
        signed: bool,
    },
    /// Check the presentation against the Schubert basis
    Verify {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
    },
    /// Randomized commutativity and associativity checks
    Assoc {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 20)]
        trials: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand, Debug)]
enum CartanCmd {
    /// Free-basis checks for the restricted matrices
    Verify {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 5)]
        bound: u32,
    },
}

#[derive(Subcommand, Debug)]
enum SepCmd {
    /// Constituents of V_{omega_k} (x) V_nu
    Decompose {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        nu: FundWeight,
    },
    /// Separation index
    T0 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        nu: FundWeight,
    },
    /// Pairs agreeing on S_2..S_depth
    Collisions {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        nu: FundWeight,
        #[arg(long)]
        depth: u32,
    },
}

#[derive(Subcommand, Debug)]
enum MatrixCmd {
    /// Casimir matrix on the k-th exterior power
    Casimir {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 2)]
        p: u32,
    },
    /// Kostant matrix on the k-th (x) j-th exterior powers
    Kostant {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        j: usize,
        #[arg(long, default_value_t = 2)]
        p: u32,
    },
    /// Certify the spectrum of a Kostant matrix
    Spectrum {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        j: usize,
        #[arg(long, default_value_t = 2)]
        p: u32,
    },
}

/// Outcome of a subcommand before it becomes an exit code.
enum Outcome {
    Ok,
    Failed,
}

struct Out<'a> {
    w: &'a mut dyn Write,
    format: Format,
}

impl Out<'_> {
    fn emit(&mut self, text: impl std::fmt::Display, record: serde_json::Value) -> std::io::Result<()> {
        match self.format {
            Format::Text => writeln!(self.w, "{text}"),
            Format::Json => writeln!(self.w, "{record}"),
        }
    }

    fn report(&mut self, r: &Report) -> std::io::Result<Outcome> {
        match self.format {
            Format::Text => writeln!(self.w, "{r}")?,
            Format::Json => writeln!(self.w, "{}", serde_json::to_string(r).expect("report serializes"))?,
        }
        Ok(if r.passed() { Outcome::Ok } else { Outcome::Failed })
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded(_) | Error::Invariant(_) | Error::OverlappingCollision { .. } => 1,
        _ => 2,
    }
}

/// Parses `args` (including the program name), runs the subcommand and
/// returns the exit code: 0 success, 1 verification failure, 2 usage error.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let _ = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.config.workers)
        .build_global();
    let mut o = Out {
        w: out,
        format: cli.config.format,
    };
    match dispatch(&cli, &mut o) {
        Ok(Ok(Outcome::Ok)) => 0,
        Ok(Ok(Outcome::Failed)) => 1,
        Ok(Err(e)) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

type Res = std::io::Result<kostant_core::Result<Outcome>>;

macro_rules! tri {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(e) => return Ok(Err(e.into())),
        }
    };
}

fn dispatch(cli: &Cli, o: &mut Out<'_>) -> Res {
    let cfg = &cli.config;
    match &cli.command {
        Command::Pte(c) => pte(c, cfg, o),
        Command::Char(CharCmd::Equal { f, g }) => {
            let eq = tri!(char_equal(f, g));
            o.emit(
                if eq { "equal" } else { "not equal" },
                json!({"f": f.entries(), "g": g.entries(), "equal": eq}),
            )?;
            Ok(Ok(if eq { Outcome::Ok } else { Outcome::Failed }))
        }
        Command::Weights(WeightsCmd::Sfun { f, nu, p }) => {
            let pattern = match (f, nu) {
                (Some(f), _) => f.clone(),
                (None, Some(nu)) => nu.to_pattern(),
                (None, None) => unreachable!("clap requires one of --f, --nu"),
            };
            let values: Vec<String> = (2..=*p).map(|t| pattern.s_functional(t).to_string()).collect();
            let text = (2..=*p)
                .zip(&values)
                .map(|(t, v)| format!("S{t}={v}"))
                .collect::<Vec<_>>()
                .join(" ");
            o.emit(text, json!({"f": pattern.entries(), "values": values}))?;
            Ok(Ok(Outcome::Ok))
        }
        Command::Schur { lambda, n, method } => {
            let poly = tri!(match method {
                SchurMethod::JacobiTrudi => schur_jacobi_trudi(lambda, *n),
                SchurMethod::Alternant => schur_alternant(lambda, *n),
            });
            o.emit(&poly, json!({"lambda": lambda.to_string(), "n": n, "poly": poly.to_string()}))?;
            Ok(Ok(Outcome::Ok))
        }
        Command::Lr { mu, nu } => {
            for (lam, c) in lr_expand(mu, nu) {
                o.emit(format!("{c} {lam}"), json!({"lambda": lam.to_string(), "coefficient": c}))?;
            }
            Ok(Ok(Outcome::Ok))
        }
        Command::Grassmann(c) => grassmann(c, o),
        Command::Cartan(CartanCmd::Verify { k, n, bound }) => {
            let r = tri!(cartan::verify_free_basis(*k, *n, *bound));
            Ok(Ok(o.report(&r)?))
        }
        Command::Separation(c) => separation(c, o),
        Command::Matrix(c) => matrix(c, cfg, o),
    }
}

fn pte(c: &PteCmd, cfg: &Config, o: &mut Out<'_>) -> Res {
    match c {
        PteCmd::Verify { x, y, degree } => {
            let (holds, max) = tri!(verify(x, y, *degree));
            let text = format!(
                "{}, max_degree={max}",
                if holds { "verified" } else { "not verified" }
            );
            let max_json = match max {
                MaxDegree::Upto(j) => json!(j),
                MaxDegree::Trivial => json!("trivial"),
            };
            o.emit(text, json!({"X": x, "Y": y, "degree": degree, "verified": holds, "max_degree": max_json}))?;
            Ok(Ok(if holds { Outcome::Ok } else { Outcome::Failed }))
        }
        PteCmd::Brute { size, degree, bound } => {
            let sols = tri!(brute_search(*size, *degree, *bound, &cfg.budget()));
            for s in &sols {
                o.emit(s, serde_json::to_value(s).expect("serializes"))?;
            }
            if o.format == Format::Text {
                writeln!(o.w, "{} solutions", sols.len())?;
            }
            Ok(Ok(Outcome::Ok))
        }
        PteCmd::Ideal { k, bound, checkpoint } => {
            let opts = IdealSearchOptions {
                budget: cfg.budget(),
                checkpoint: checkpoint.clone(),
            };
            let sols = tri!(ideal_search(*k, *bound, &opts));
            for s in &sols {
                o.emit(s, serde_json::to_value(s).expect("serializes"))?;
            }
            if o.format == Format::Text {
                writeln!(o.w, "{} ideal solutions", sols.len())?;
            }
            Ok(Ok(if sols.is_empty() { Outcome::Failed } else { Outcome::Ok }))
        }
        PteCmd::FromWeights { n, k, nu, i, j } => {
            let i = tri!(parse_index_set(i, *n));
            let j = tri!(parse_index_set(j, *n));
            let e = tri!(extract_from_collision(*n, *k, nu, &i, &j));
            let text = format!(
                "X={:?} Y={:?} r={} degree={}",
                e.x, e.y, e.r, e.guaranteed_degree
            );
            o.emit(text, serde_json::to_value(&e).expect("serializes"))?;
            Ok(Ok(Outcome::Ok))
        }
    }
}

fn grassmann(c: &GrassCmd, o: &mut Out<'_>) -> Res {
    match c {
        GrassCmd::Mul { k, n, a, b } => {
            let x = tri!(GrassElement::schubert(a.clone(), *k, *n));
            let y = tri!(GrassElement::schubert(b.clone(), *k, *n));
            let z = tri!(x.mul(&y));
            o.emit(&z, json!({"k": k, "n": n, "product": z}))?;
            Ok(Ok(Outcome::Ok))
        }
        GrassCmd::Relations { k, n, signed } => {
            let mut all_zero = true;
            for s in 1..=*k {
                let f = tri!(relation_f(s, *k, *n, *signed));
                let img = tri!(reduce_w_poly(&f, *k, *n));
                all_zero &= img.is_zero();
                o.emit(
                    format!("f_{s} = {f}  ->  {img}"),
                    json!({"s": s, "signed": signed, "relation": f.to_string(), "image": img}),
                )?;
            }
            Ok(Ok(if all_zero { Outcome::Ok } else { Outcome::Failed }))
        }
        GrassCmd::Verify { k, n } => {
            let r = tri!(verify_presentation(*k, *n));
            Ok(Ok(o.report(&r)?))
        }
        GrassCmd::Assoc { k, n, trials, seed } => {
            if *k == 0 || 2 * k > *n {
                return Ok(Err(Error::InvalidArgument(format!("need 1 <= k <= n-k, got k={k}, n={n}"))));
            }
            let basis = kostant_core::symfunc::box_partitions(*k, n - k);
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(*seed);
            let mut report = Report::new(format!("ring axioms in L({k},{}) seed={seed}", n - k));
            for t in 0..*trials {
                let pick = |rng: &mut rand_chacha::ChaCha8Rng| {
                    GrassElement::schubert(basis[rng.gen_range(0..basis.len())].clone(), *k, *n)
                };
                let a = tri!(pick(&mut rng));
                let b = tri!(pick(&mut rng));
                let c = tri!(pick(&mut rng));
                let ab = tri!(a.mul(&b));
                let ba = tri!(b.mul(&a));
                let left = tri!(ab.mul(&c));
                let right = tri!(a.mul(&tri!(b.mul(&c))));
                report.push(
                    "commutative and associative",
                    format!("trial {t}: {a}, {b}, {c}"),
                    ab == ba && left == right,
                    None,
                );
            }
            Ok(Ok(o.report(&report)?))
        }
    }
}

fn separation(c: &SepCmd, o: &mut Out<'_>) -> Res {
    match c {
        SepCmd::Decompose { n, k, nu } => {
            for con in tri!(tensor_decompose(*n, *k, nu)) {
                o.emit(
                    format!("I={} pattern={} dim={}", con.set, con.pattern, con.dim),
                    serde_json::to_value(&con).expect("serializes"),
                )?;
            }
            Ok(Ok(Outcome::Ok))
        }
        SepCmd::T0 { n, k, nu } => {
            let t = tri!(t0(*n, *k, nu));
            o.emit(format!("t0={t}"), json!({"n": n, "k": k, "nu": nu, "t0": t}))?;
            Ok(Ok(Outcome::Ok))
        }
        SepCmd::Collisions { n, k, nu, depth } => {
            for col in tri!(find_collisions(*n, *k, nu, *depth)) {
                let shared: Vec<String> = col.shared_vector.iter().map(|v| v.to_string()).collect();
                o.emit(
                    format!("{} {} shared=({})", col.i, col.j, shared.join(",")),
                    serde_json::to_value(&col).expect("serializes"),
                )?;
            }
            Ok(Ok(Outcome::Ok))
        }
    }
}

fn matrix(c: &MatrixCmd, cfg: &Config, o: &mut Out<'_>) -> Res {
    match c {
        MatrixCmd::Casimir { n, k, p } => {
            let r = tri!(fundamental_rep(*n, *k));
            let m = tri!(casimir_bounded(&r, *p, cfg.max_p));
            let scalar = scalar_of(&m).ok().map(|s| s.to_string());
            let text = match &scalar {
                Some(s) => format!("scalar {s}\n{m}"),
                None => m.to_string(),
            };
            o.emit(
                text.trim_end(),
                json!({"n": n, "k": k, "p": p, "scalar": scalar, "matrix": rows(&m)}),
            )?;
            Ok(Ok(Outcome::Ok))
        }
        MatrixCmd::Kostant { n, k, j, p } => {
            if *p > cfg.max_p {
                return Ok(Err(Error::BudgetExceeded(format!("casimir degree {p} exceeds bound {}", cfg.max_p))));
            }
            let a = tri!(fundamental_rep(*n, *k));
            let b = tri!(fundamental_rep(*n, *j));
            let m = tri!(kostant_matrix(&a, &b, *p));
            o.emit(
                m.to_string().trim_end(),
                json!({"n": n, "k": k, "j": j, "p": p, "matrix": rows(&m)}),
            )?;
            Ok(Ok(Outcome::Ok))
        }
        MatrixCmd::Spectrum { n, k, j, p } => {
            if *p > cfg.max_p {
                return Ok(Err(Error::BudgetExceeded(format!("casimir degree {p} exceeds bound {}", cfg.max_p))));
            }
            let (r, records) = tri!(spectrum_verify_bounded(*n, *k, *j, *p, cfg.max_dim as usize));
            for rec in &records {
                o.emit(
                    format!(
                        "eigenvalue {} predicted {} verified {}",
                        rec.eigenvalue, rec.predicted_multiplicity, rec.verified_multiplicity
                    ),
                    serde_json::to_value(rec).expect("serializes"),
                )?;
            }
            Ok(Ok(o.report(&r)?))
        }
    }
}

fn rows(m: &kostant_core::ExactMatrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(|v| v.to_string()).collect())
        .collect()
}
