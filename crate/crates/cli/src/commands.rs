//! Argument parsing and subcommand dispatch.

use std::ffi::OsString;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use latpoly::conedecomp::{generating_function, specialize_count};
use latpoly::exactnum::{format_rational, parse_decimal, parse_rational, BigInt, BigRational};
use latpoly::genfun::Polynomial;
use latpoly::instances::{an1_instance, example1, nvs04, random_instance, random_nonnegative_instance, InstanceBundle, Sense};
use latpoly::optimize::{
    fptas, normalize, optimize_exact_with, ExactOptions, ExactStatus, FptasMode, PowerSums, StoppingRule,
};
use latpoly::oracle::{brute_count, brute_max, brute_min, brute_power_sum, EnumerationBudget};
use num_traits::{One, Zero};

use crate::exit::{CliError, ExitCode};
use crate::instance_file::{FileError, InstanceFile};
use crate::report::{BoundsRow, FptasDoc, InstanceRef, Number, PointDoc, ResultDocument, ShiftDoc};

#[derive(Parser, Debug)]
#[command(name = "latpoly", version, about = "Exact polynomial optimization over the lattice points of a polytope")]
pub struct Cli {
    /// Output format of the result document
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Print the elapsed time to stderr
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Rule {
    /// Stop when floor(U_k) - ceil(L_k) < 1
    MeanRoot,
    /// Also stop when ceil(S_k / S_{k-1}) reaches floor(U_k)
    Ratio,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Count the lattice points of the polytope
    Count { file: PathBuf },
    /// Bounds L_k <= f* <= U_k at one k (or every k up to it)
    Bounds {
        file: PathBuf,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        k: u32,
        /// Print the rows for 1..=k
        #[arg(long)]
        all: bool,
        #[arg(long, default_value_t = 6)]
        precision_digits: u32,
        /// Replace f by f - L so that it is non-negative
        #[arg(long)]
        shift: bool,
    },
    /// Raise k until the bounds determine the optimum
    Optimize {
        file: PathBuf,
        #[arg(long, default_value_t = 64, value_parser = clap::value_parser!(u32).range(1..))]
        k_max: u32,
        #[arg(long, value_enum, default_value_t = Rule::Ratio)]
        rule: Rule,
        #[arg(long, default_value_t = 6)]
        precision_digits: u32,
    },
    /// (1 - epsilon)-approximation of the optimum
    Fptas {
        file: PathBuf,
        /// Exact value such as 1/10 or 0.1
        #[arg(long)]
        epsilon: String,
        /// Also find a lattice point attaining the bound
        #[arg(long)]
        recover_point: bool,
        #[arg(long)]
        shift: bool,
        #[arg(long, default_value_t = 6)]
        precision_digits: u32,
    },
    /// Brute-force enumeration of the lattice points
    Oracle {
        file: PathBuf,
        /// Largest bounding-box volume to scan
        #[arg(long, default_value_t = 10_000_000)]
        budget: u64,
        /// Also report the power sum of f^k
        #[arg(long)]
        k: Option<u32>,
    },
    /// Write a built-in instance as an instance file
    Generate {
        #[command(subcommand)]
        builder: Builder,
    },
}

#[derive(Subcommand, Debug)]
pub enum Builder {
    /// max x^3*y over a thin quadrilateral
    Example1,
    /// nvs04 on [0,200]^2 as a maximization
    Nvs04,
    /// min (x^2 - a - b*y)^2, zero iff a is a square mod b below c
    An1 {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b: u64,
        #[arg(long)]
        c: u64,
    },
    /// Seeded random instance
    Random {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        degree: u32,
        #[arg(long)]
        radius: u64,
        #[arg(long)]
        seed: u64,
        /// Non-negative objective
        #[arg(long)]
        nonnegative: bool,
    },
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { ExitCode::Usage as i32 } else { 0 };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { stdout: String::new(), stderr: text, code }
            } else {
                Outcome { stdout: text, stderr: String::new(), code }
            };
        }
    };
    let start = Instant::now();
    let mut outcome = match execute(&cli) {
        Ok(Output::Document(doc, code)) => {
            let stdout = match cli.format {
                Format::Text => doc.to_text(),
                Format::Json => doc.to_json(),
            };
            Outcome { stdout, stderr: String::new(), code: code as i32 }
        }
        Ok(Output::Raw(text)) => Outcome { stdout: text, stderr: String::new(), code: 0 },
        Err(e) => Outcome { stdout: String::new(), stderr: format!("error: {}\n", e.message), code: e.code as i32 },
    };
    if cli.timing {
        outcome.stderr.push_str(&format!("elapsed: {:.3}s\n", start.elapsed().as_secs_f64()));
    }
    outcome
}

enum Output {
    Document(ResultDocument, ExitCode),
    Raw(String),
}

struct Loaded {
    bundle: InstanceBundle,
    reference: InstanceRef,
}

fn load(path: &PathBuf) -> Result<Loaded, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::new(ExitCode::Parse, format!("cannot read {}: {e}", path.display())))?;
    let file = InstanceFile::parse(&text).map_err(|e| match e {
        FileError::Syntax { .. } => CliError::new(ExitCode::Parse, format!("{}: {e}", path.display())),
        FileError::Invalid(m) => CliError::new(ExitCode::InvalidInput, format!("{}: {m}", path.display())),
    })?;
    let bundle = file
        .to_bundle()
        .map_err(|e| CliError::new(ExitCode::InvalidInput, format!("{}: {e}", path.display())))?;
    let reference = InstanceRef { name: bundle.name.clone(), sha256: file.digest() };
    Ok(Loaded { bundle, reference })
}

/// The objective maximized internally: `f` for a maximization, `-f` for a
/// minimization.
fn oriented(b: &InstanceBundle) -> (Polynomial, BigInt, bool) {
    match b.sense {
        Sense::Maximize => (b.objective.clone(), BigInt::one(), b.nonnegative),
        Sense::Minimize => (-&b.objective, -BigInt::one(), false),
    }
}

fn solved_as(sign: &BigInt, shifted: bool) -> String {
    let base = if sign.is_one() { "f" } else { "-f" };
    if shifted {
        format!("{base} - L")
    } else {
        base.to_string()
    }
}

fn base_document(command: &str, l: &Loaded) -> ResultDocument {
    ResultDocument {
        command: command.to_string(),
        instance: Some(l.reference.clone()),
        sense: l.bundle.sense.as_str().to_string(),
        status: "ok".into(),
        ..ResultDocument::default()
    }
}

fn unscaled(value: &BigInt, scale: &BigInt, digits: u32) -> Option<Number> {
    (!scale.is_one()).then(|| Number::new(&BigRational::new(value.clone(), scale.clone()), digits))
}

fn root_precision(digits: u32) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(10).pow(digits + 2))
}

fn parse_epsilon(text: &str) -> Result<BigRational, CliError> {
    parse_rational(text)
        .or_else(|| parse_decimal(text))
        .ok_or_else(|| CliError::new(ExitCode::Usage, format!("malformed --epsilon \"{text}\"")))
}

fn require_nonnegative(nonnegative: bool, shift: bool) -> Result<(), CliError> {
    if nonnegative || shift {
        Ok(())
    } else {
        Err(CliError::new(
            ExitCode::InvalidInput,
            "the objective (in the solved sense) is not declared non-negative; pass --shift",
        ))
    }
}

fn execute(cli: &Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::Count { file } => {
            let l = load(file)?;
            let g = generating_function(&l.bundle.polytope)?;
            let mut doc = base_document("count", &l);
            doc.count = Some(specialize_count(&g)?.to_string());
            Ok(Output::Document(doc, ExitCode::Ok))
        }
        Command::Bounds { file, k, all, precision_digits, shift } => {
            let l = load(file)?;
            let (f, sign, nonnegative) = oriented(&l.bundle);
            require_nonnegative(nonnegative, *shift)?;
            let (fbar, info) = normalize(&l.bundle.polytope, &f, nonnegative)?;
            let mut sums = PowerSums::new(&l.bundle.polytope, &fbar)?;
            let precision = root_precision(*precision_digits);
            let first = if *all { 1 } else { *k };
            if first > 1 {
                sums.power_sum(first - 1)?;
            }
            let mut doc = base_document("bounds", &l);
            doc.solved_as = Some(solved_as(&sign, info.shifted));
            doc.count = Some(sums.count().to_string());
            doc.shift = Some(ShiftDoc::new(&info));
            for j in first..=*k {
                doc.rows.push(BoundsRow::new(&sums.report(j, &precision)?, *precision_digits));
            }
            Ok(Output::Document(doc, ExitCode::Ok))
        }
        Command::Optimize { file, k_max, rule, precision_digits } => {
            let l = load(file)?;
            let (f, sign, nonnegative) = oriented(&l.bundle);
            let options = ExactOptions {
                k_max: *k_max,
                rule: match rule {
                    Rule::MeanRoot => StoppingRule::MeanRoot,
                    Rule::Ratio => StoppingRule::MeanRootOrRatio,
                },
                precision: root_precision(*precision_digits),
            };
            let out = optimize_exact_with(&l.bundle.polytope, &f, nonnegative, &options)?;
            let mut doc = base_document("optimize", &l);
            doc.solved_as = Some(solved_as(&sign, out.shift.shifted));
            doc.count = Some(out.count.to_string());
            doc.shift = Some(ShiftDoc::new(&out.shift));
            doc.rows = out.trace.iter().map(|r| BoundsRow::new(r, *precision_digits)).collect();
            let code = match &out.status {
                ExactStatus::Optimal(v) => {
                    let value = v * &sign;
                    doc.optimum_unscaled = unscaled(&value, &l.bundle.scale, *precision_digits);
                    doc.optimum = Some(value.to_string());
                    doc.status = "optimal".into();
                    ExitCode::Ok
                }
                ExactStatus::Unconverged { lower, upper } => {
                    let (a, b) = (lower * &sign, upper * &sign);
                    let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
                    doc.optimum_bounds = Some((lo.to_string(), hi.to_string()));
                    doc.status = format!("unconverged at k = {k_max}");
                    ExitCode::Unconverged
                }
            };
            Ok(Output::Document(doc, code))
        }
        Command::Fptas { file, epsilon, recover_point, shift, precision_digits } => {
            let l = load(file)?;
            let eps = parse_epsilon(epsilon)?;
            let (f, sign, nonnegative) = oriented(&l.bundle);
            require_nonnegative(nonnegative, *shift)?;
            let mode = if nonnegative { FptasMode::AssumeNonnegative } else { FptasMode::Shift };
            let r = fptas(&l.bundle.polytope, &f, &eps, mode, *recover_point)?;
            let mut doc = base_document("fptas", &l);
            doc.solved_as = Some(solved_as(&sign, r.shift.shifted));
            doc.count = Some(r.count.to_string());
            doc.shift = Some(ShiftDoc::new(&r.shift));
            let row = BoundsRow::new(&r.report, *precision_digits);
            let mut fdoc = FptasDoc {
                epsilon: format_rational(&eps),
                k_used: r.k_used,
                guarantee: format!(
                    "L_{} = {} >= (1 - {}) * optimum of the solved objective",
                    r.k_used,
                    row.lower.decimal,
                    format_rational(&eps)
                ),
                guarantee_at_known_optimum: None,
                guarantee_holds: None,
            };
            if let Some(known) = &l.bundle.known_optimum {
                let working = known * &sign - r.shift.offset();
                let target = (BigRational::one() - &eps) * BigRational::from_integer(working);
                fdoc.guarantee_holds = Some(r.report.lower.lower >= target);
                fdoc.guarantee_at_known_optimum = Some(Number::new(&target, *precision_digits));
            }
            doc.fptas = Some(fdoc);
            doc.rows.push(row);
            if let (Some(x), Some(v)) = (&r.certified_point, &r.certified_value) {
                doc.point = Some(PointDoc {
                    coordinates: x.iter().map(|c| c.to_string()).collect(),
                    value: l.bundle.objective.eval(x).to_string(),
                    working_value: Some(v.to_string()),
                });
            }
            Ok(Output::Document(doc, ExitCode::Ok))
        }
        Command::Oracle { file, budget, k } => {
            let l = load(file)?;
            let budget = EnumerationBudget::new(*budget)?;
            let p = &l.bundle.polytope;
            let f = &l.bundle.objective;
            let mut doc = base_document("oracle", &l);
            let count = brute_count(p, budget)?;
            doc.count = Some(count.to_string());
            if let Some(k) = k {
                doc.power_sum = Some(brute_power_sum(p, f, *k, budget)?.to_string());
            }
            if count.is_zero() {
                doc.status = "empty".into();
                return Ok(Output::Document(doc, ExitCode::Empty));
            }
            let (value, at) = match l.bundle.sense {
                Sense::Maximize => brute_max(p, f, budget)?,
                Sense::Minimize => brute_min(p, f, budget)?,
            };
            doc.optimum_unscaled = unscaled(&value, &l.bundle.scale, 6);
            doc.optimum = Some(value.to_string());
            doc.point = Some(PointDoc {
                coordinates: at.iter().map(|c| c.to_string()).collect(),
                value: value.to_string(),
                working_value: None,
            });
            doc.status = "optimal".into();
            Ok(Output::Document(doc, ExitCode::Ok))
        }
        Command::Generate { builder } => {
            let bundle = match builder {
                Builder::Example1 => example1(),
                Builder::Nvs04 => nvs04(),
                Builder::An1 { a, b, c } => an1_instance(*a, *b, *c)?,
                Builder::Random { dim, degree, radius, seed, nonnegative } => {
                    if *nonnegative {
                        random_nonnegative_instance(*dim, *degree, *radius, *seed)?
                    } else {
                        random_instance(*dim, *degree, *radius, *seed)?
                    }
                }
            };
            Ok(Output::Raw(InstanceFile::from_bundle(&bundle).to_json()))
        }
    }
}

/// Entry point for the binary: runs, prints, and returns the exit code.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let out = run(args);
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    out.code
}
