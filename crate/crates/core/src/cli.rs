//! Command-line front end.
//!
//! Writes exactly one output record per invocation in `plain`, `json` or
//! `csv` form. Exit codes: 0 ok, 1 domain/pole/precision errors, 2 usage
//! errors, 3 when any verification report failed.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Map, Value as Json};

use crate::arith::{parse_rational, Rational};
use crate::error::{Error, Result};
use crate::polynomial::Polynomial;
use crate::sequences::{
    apostol_bernoulli_formula, apostol_bernoulli_oracle, bernoulli_formula, bernoulli_oracle,
    default_oracle_order, euler_number, euler_polynomial_formula, outside_stated_domain,
    stirling_alternating_sum, two_param_euler_formula, verify_two_param_reductions, Provenance,
};
use crate::series::{
    recip_exp_minus_one, recip_exp_plus_one, recip_scaled_exp_minus_one, LaurentSeries,
};
use crate::stirling::{
    m_determinant, stirling1, stirling2, verify_first_kind_determinant_relation,
};
use crate::verify::{
    default_order, verify_general_derivative, verify_general_power, verify_identity,
    verify_plus_identities, IdentityId, VerificationReport,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_VERIFICATION_FAILED: i32 = 3;

/// Parameter grid for G1/G2 sweeps when `--alpha` / `--lambda` are absent.
const GENERAL_ALPHAS: [&str; 5] = ["1", "-1", "1/2", "-3/2", "2"];
const GENERAL_LAMBDAS: [&str; 5] = ["1", "2", "1/2", "-1", "-5/3"];
/// Parameter grid for the two-parameter reductions.
const REDUCTION_ALPHAS: [&str; 3] = ["1", "2", "-1/2"];
const REDUCTION_LAMBDAS: [&str; 3] = ["1", "3", "1/4"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Formula,
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DumpTarget {
    RecipExpMinusOne,
    RecipExpPlusOne,
    Apostol,
}

#[derive(Debug, Parser)]
#[command(
    name = "euler-stirling",
    version,
    about = "Exact Stirling, Bernoulli and Euler numbers"
)]
struct Cli {
    #[arg(long, global = true, value_enum, default_value = "plain")]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Stirling number of the second kind S(N, K)
    Stirling2 {
        n: u32,
        #[arg(allow_hyphen_values = true)]
        k: i64,
    },
    /// Signed Stirling number of the first kind s(N, K)
    Stirling1 {
        n: u32,
        #[arg(allow_hyphen_values = true)]
        k: i64,
    },
    /// The J x J determinant M_J(K, I)
    Mdet { j: u32, k: u32, i: u32 },
    /// Bernoulli number B_N
    Bernoulli {
        n: u32,
        #[arg(long, value_enum)]
        method: Option<Method>,
    },
    /// Apostol-Bernoulli number B_N(lambda)
    ApostolBernoulli {
        n: u32,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
        lambda: Rational,
    },
    /// Euler number E_N
    EulerNumber { n: u32 },
    /// Euler polynomial E_N(x), optionally evaluated at a point
    EulerPoly {
        n: u32,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
        at: Option<Rational>,
    },
    /// Two-parameter Euler polynomial E_N(x; alpha, lambda)
    TwoParamEuler {
        n: u32,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
        alpha: Rational,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
        lambda: Rational,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
        at: Option<Rational>,
    },
    /// Series coefficient tables
    Series {
        #[command(subcommand)]
        action: SeriesAction,
    },
    /// Run identity checks
    Verify {
        /// all, I1..I8, P1, P2, G1, G2, eq1.15 (first-kind determinant
        /// relation), eq3.4 (alternating Stirling sum) or reductions
        target: String,
        #[arg(long, default_value_t = 8)]
        k_max: u32,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
        alpha: Option<Rational>,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
        lambda: Option<Rational>,
        #[arg(long)]
        order: Option<u32>,
    },
}

#[derive(Debug, Subcommand)]
enum SeriesAction {
    /// Print the known coefficients of a generating function
    Dump {
        #[arg(value_enum)]
        target: DumpTarget,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
        lambda: Option<Rational>,
        #[arg(long)]
        order: u32,
    },
}

enum Outcome {
    Scalar(Rational),
    Poly(Polynomial),
    Series(LaurentSeries),
    Reports(Vec<VerificationReport>),
}

/// Echo of the invocation carried in every record.
#[derive(Clone)]
struct Record {
    command: &'static str,
    params: Map<String, Json>,
    provenance: Option<Provenance>,
    note: Option<String>,
}

impl Record {
    fn new(command: &'static str) -> Self {
        Record {
            command,
            params: Map::new(),
            provenance: None,
            note: None,
        }
    }

    fn param(mut self, key: &str, value: impl Into<Json>) -> Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    fn rational(self, key: &str, value: &Rational) -> Self {
        self.param(key, value.to_string())
    }

    fn opt_rational(self, key: &str, value: Option<&Rational>) -> Self {
        match value {
            Some(v) => self.rational(key, v),
            None => self,
        }
    }
}

/// Grammar violations that clap cannot express.
struct UsageError(String);

/// Entry point used by the binary. `argv[0]` is the program name.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

/// Like [`run`], writing to the given streams.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return EXIT_OK;
            }
            let _ = write!(err, "{e}");
            return EXIT_USAGE;
        }
    };
    let format = cli.format;
    let (record, outcome) = match execute(cli.command) {
        Ok(pair) => pair,
        Err((_, Err(UsageError(msg)))) => {
            let _ = writeln!(err, "error: {msg}");
            let _ = writeln!(
                err,
                "{}",
                <Cli as clap::CommandFactory>::command().render_usage()
            );
            return EXIT_USAGE;
        }
        Err((record, Ok(error))) => {
            let _ = emit_error(out, format, &record, &error);
            return EXIT_DOMAIN;
        }
    };
    if let Err(e) = emit(out, format, &record, &outcome) {
        let _ = writeln!(err, "error: {e}");
        return EXIT_DOMAIN;
    }
    success_code(&outcome)
}

fn success_code(outcome: &Outcome) -> i32 {
    match outcome {
        Outcome::Reports(reports) if reports.iter().any(|r| !r.passed) => EXIT_VERIFICATION_FAILED,
        _ => EXIT_OK,
    }
}

type Failure = (Record, std::result::Result<Error, UsageError>);

fn execute(command: Command) -> std::result::Result<(Record, Outcome), Failure> {
    fn lift<T>(record: &Record, r: Result<T>) -> std::result::Result<T, Failure> {
        r.map_err(|e| (record.clone(), Ok(e)))
    }

    match command {
        Command::Stirling2 { n, k } => {
            let record = Record::new("stirling2").param("n", n).param("k", k);
            Ok((record, Outcome::Scalar(stirling2(n, k).into())))
        }
        Command::Stirling1 { n, k } => {
            let record = Record::new("stirling1").param("n", n).param("k", k);
            Ok((record, Outcome::Scalar(stirling1(n, k).into())))
        }
        Command::Mdet { j, k, i } => {
            let record = Record::new("mdet")
                .param("j", j)
                .param("k", k)
                .param("i", i);
            let value = lift(&record, m_determinant(j, k, i))?;
            Ok((record, Outcome::Scalar(value)))
        }
        Command::Bernoulli { n, method } => {
            let method = method.unwrap_or(if n >= 2 && n % 2 == 0 {
                Method::Formula
            } else {
                Method::Oracle
            });
            let mut record = Record::new("bernoulli").param("n", n);
            let value = match method {
                Method::Formula => {
                    record.provenance = Some(Provenance::Formula);
                    if n < 2 || n % 2 == 1 {
                        return Err((
                            record,
                            Ok(Error::Domain(
                                "the formula gives B_n for even n >= 2".into(),
                            )),
                        ));
                    }
                    lift(&record, bernoulli_formula(n / 2))?
                }
                Method::Oracle => {
                    record.provenance = Some(Provenance::Oracle);
                    bernoulli_oracle(n)
                }
            };
            Ok((record, Outcome::Scalar(value)))
        }
        Command::ApostolBernoulli { n, lambda } => {
            let mut record = Record::new("apostol-bernoulli")
                .param("n", n)
                .rational("lambda", &lambda);
            let value = if n == 0 {
                record.provenance = Some(Provenance::Oracle);
                lift(
                    &record,
                    apostol_bernoulli_oracle(0, &lambda, default_oracle_order(0)),
                )?
            } else {
                record.provenance = Some(Provenance::Formula);
                lift(&record, apostol_bernoulli_formula(n, &lambda))?
            };
            Ok((record, Outcome::Scalar(value)))
        }
        Command::EulerNumber { n } => {
            let mut record = Record::new("euler-number").param("n", n);
            record.provenance = Some(Provenance::Formula);
            let value = lift(&record, euler_number(n))?;
            Ok((record, Outcome::Scalar(value)))
        }
        Command::EulerPoly { n, at } => {
            let mut record = Record::new("euler-poly")
                .param("n", n)
                .opt_rational("at", at.as_ref());
            record.provenance = Some(Provenance::Formula);
            let poly = euler_polynomial_formula(n);
            let outcome = match at {
                Some(x) => Outcome::Scalar(poly.eval(&x)),
                None => Outcome::Poly(poly),
            };
            Ok((record, outcome))
        }
        Command::TwoParamEuler {
            n,
            alpha,
            lambda,
            at,
        } => {
            let mut record = Record::new("two-param-euler")
                .param("n", n)
                .rational("alpha", &alpha)
                .rational("lambda", &lambda)
                .opt_rational("at", at.as_ref());
            record.provenance = Some(Provenance::Formula);
            if outside_stated_domain(&lambda) {
                record.note =
                    Some("lambda <= 0 lies outside the analytic domain lambda > 0".into());
            }
            let poly = lift(&record, two_param_euler_formula(n, &alpha, &lambda))?;
            let outcome = match at {
                Some(x) => Outcome::Scalar(poly.eval(&x)),
                None => Outcome::Poly(poly),
            };
            Ok((record, outcome))
        }
        Command::Series {
            action:
                SeriesAction::Dump {
                    target,
                    lambda,
                    order,
                },
        } => {
            let name = match target {
                DumpTarget::RecipExpMinusOne => "recip-exp-minus-one",
                DumpTarget::RecipExpPlusOne => "recip-exp-plus-one",
                DumpTarget::Apostol => "apostol",
            };
            let record = Record::new("series dump")
                .param("target", name)
                .opt_rational("lambda", lambda.as_ref())
                .param("order", order);
            let series = match (target, lambda) {
                (DumpTarget::RecipExpMinusOne, None) => recip_exp_minus_one(order),
                (DumpTarget::RecipExpPlusOne, None) => recip_exp_plus_one(order),
                (DumpTarget::Apostol, Some(l)) if l.is_zero() => {
                    Err(Error::Domain("lambda must be nonzero".into()))
                }
                (DumpTarget::Apostol, Some(l)) => {
                    recip_scaled_exp_minus_one(&Rational::one(), &l, order).map(|s| s.shift(1))
                }
                (DumpTarget::Apostol, None) => {
                    return Err((
                        record,
                        Err(UsageError("series dump apostol requires --lambda".into())),
                    ))
                }
                (_, Some(_)) => {
                    return Err((
                        record,
                        Err(UsageError(format!(
                            "--lambda only applies to apostol, not {name}"
                        ))),
                    ))
                }
            };
            let series = lift(&record, series)?;
            Ok((record, Outcome::Series(series)))
        }
        Command::Verify {
            target,
            k_max,
            alpha,
            lambda,
            order,
        } => {
            let record = Record::new("verify")
                .param("target", target.clone())
                .param("k_max", k_max)
                .opt_rational("alpha", alpha.as_ref())
                .opt_rational("lambda", lambda.as_ref())
                .param("order", order.map(Json::from).unwrap_or(Json::Null));
            let targets: Vec<IdentityId> = if target == "all" {
                ALL_TARGETS.to_vec()
            } else {
                match target.parse::<IdentityId>() {
                    Ok(id) => vec![id],
                    Err(_) => {
                        return Err((
                            record,
                            Err(UsageError(format!(
                                "unknown verify target {target:?}; expected all, I1..I8, P1, P2, G1, G2, eq1.15, eq3.4 or reductions"
                            ))),
                        ))
                    }
                }
            };
            let sweep = Sweep {
                k_max,
                alpha,
                lambda,
                order,
            };
            let reports = lift(&record, sweep.run(&targets))?;
            Ok((record, Outcome::Reports(reports)))
        }
    }
}

const ALL_TARGETS: [IdentityId; 15] = [
    IdentityId::I1,
    IdentityId::I2,
    IdentityId::I3,
    IdentityId::I4,
    IdentityId::I5,
    IdentityId::I6,
    IdentityId::I7,
    IdentityId::I8,
    IdentityId::P1,
    IdentityId::P2,
    IdentityId::G1,
    IdentityId::G2,
    IdentityId::FirstKindDeterminant,
    IdentityId::StirlingAlternatingSum,
    IdentityId::TwoParamReductions,
];

/// A verification sweep over `k = 1..=k_max` (and parameter grids).
struct Sweep {
    k_max: u32,
    alpha: Option<Rational>,
    lambda: Option<Rational>,
    order: Option<u32>,
}

enum Job {
    Series(IdentityId, u32),
    General(IdentityId, u32, Rational, Rational),
    Determinant(u32, u32),
    AlternatingSum(u32),
    Reduction(u32, Rational, Rational),
}

fn grid(given: &Option<Rational>, default: &[&str]) -> Vec<Rational> {
    match given {
        Some(v) => vec![v.clone()],
        None => {
            let mut values: Vec<Rational> = default
                .iter()
                .map(|s| parse_rational(s).expect("literal"))
                .collect();
            values.sort_by_key(|v| v.to_string());
            values
        }
    }
}

impl Sweep {
    fn jobs(&self, targets: &[IdentityId]) -> Vec<Job> {
        let mut jobs = Vec::new();
        for &id in targets {
            match id {
                IdentityId::G1 | IdentityId::G2 => {
                    for k in 1..=self.k_max {
                        for a in grid(&self.alpha, &GENERAL_ALPHAS) {
                            for l in grid(&self.lambda, &GENERAL_LAMBDAS) {
                                jobs.push(Job::General(id, k, a.clone(), l));
                            }
                        }
                    }
                }
                IdentityId::FirstKindDeterminant => {
                    for n in 1..=self.k_max {
                        for k in 1..=n {
                            jobs.push(Job::Determinant(n, k));
                        }
                    }
                }
                IdentityId::StirlingAlternatingSum => {
                    jobs.extend((1..=self.k_max).map(Job::AlternatingSum))
                }
                IdentityId::TwoParamReductions => {
                    for n in 0..=self.k_max {
                        for a in grid(&self.alpha, &REDUCTION_ALPHAS) {
                            for l in grid(&self.lambda, &REDUCTION_LAMBDAS) {
                                jobs.push(Job::Reduction(n, a.clone(), l));
                            }
                        }
                    }
                }
                _ => jobs.extend((1..=self.k_max).map(|k| Job::Series(id, k))),
            }
        }
        jobs
    }

    fn run(&self, targets: &[IdentityId]) -> Result<Vec<VerificationReport>> {
        let jobs = self.jobs(targets);
        jobs.par_iter().map(|job| self.run_job(job)).collect()
    }

    fn run_job(&self, job: &Job) -> Result<VerificationReport> {
        let order = |k: u32| self.order.unwrap_or_else(|| default_order(k));
        match job {
            Job::Series(id, k) => {
                if matches!(id, IdentityId::P1 | IdentityId::P2) {
                    verify_plus_identities(*id, *k, order(*k))
                } else {
                    verify_identity(*id, *k, order(*k))
                }
            }
            Job::General(id, k, a, l) => {
                if *id == IdentityId::G1 {
                    verify_general_derivative(*k, a, l, order(*k))
                } else {
                    verify_general_power(*k, a, l, order(*k))
                }
            }
            Job::Determinant(n, k) => {
                let passed = verify_first_kind_determinant_relation(*n, *k)?;
                Ok(VerificationReport {
                    n: Some(*n),
                    ..VerificationReport::scalar(IdentityId::FirstKindDeterminant, *k, passed)
                })
            }
            Job::AlternatingSum(n) => {
                let value = stirling_alternating_sum(*n)?;
                let mut report = VerificationReport::scalar(
                    IdentityId::StirlingAlternatingSum,
                    *n,
                    value.is_zero(),
                );
                if !value.is_zero() {
                    report.first_discrepancy = Some(crate::verify::Discrepancy {
                        exponent: 0,
                        lhs: value,
                        rhs: Rational::zero(),
                    });
                }
                Ok(report)
            }
            Job::Reduction(n, a, l) => {
                let passed = verify_two_param_reductions(*n, a, l)?;
                Ok(VerificationReport {
                    n: Some(*n),
                    alpha: Some(a.clone()),
                    lambda: Some(l.clone()),
                    ..VerificationReport::scalar(IdentityId::TwoParamReductions, *n, passed)
                })
            }
        }
    }
}

fn header_json(record: &Record) -> Map<String, Json> {
    let mut obj = Map::new();
    obj.insert("command".into(), json!(record.command));
    obj.insert("parameters".into(), Json::Object(record.params.clone()));
    obj
}

fn result_json(outcome: &Outcome) -> serde_json::Result<Json> {
    Ok(match outcome {
        Outcome::Scalar(q) => json!(q.to_string()),
        Outcome::Poly(p) => serde_json::to_value(p)?,
        Outcome::Series(s) => json!({
            "offset": s.offset(),
            "precision": s.precision(),
            "coefficients": s.terms().map(|(e, c)| json!({"exponent": e, "coefficient": c.to_string()})).collect::<Vec<_>>(),
        }),
        Outcome::Reports(reports) => serde_json::to_value(reports)?,
    })
}

fn param_text(value: &Json) -> String {
    match value {
        Json::String(s) => s.clone(),
        Json::Null => String::new(),
        other => other.to_string(),
    }
}

fn emit(
    out: &mut dyn Write,
    format: Format,
    record: &Record,
    outcome: &Outcome,
) -> std::io::Result<()> {
    match format {
        Format::Json => {
            let mut obj = header_json(record);
            obj.insert("status".into(), json!("ok"));
            if let Some(p) = record.provenance {
                obj.insert("provenance".into(), serde_json::to_value(p)?);
            }
            if let Some(note) = &record.note {
                obj.insert("note".into(), json!(note));
            }
            obj.insert("result".into(), result_json(outcome)?);
            if let Outcome::Reports(reports) = outcome {
                let failed = reports.iter().filter(|r| !r.passed).count();
                obj.insert(
                    "summary".into(),
                    json!({"total": reports.len(), "failed": failed}),
                );
            }
            serde_json::to_writer_pretty(&mut *out, &Json::Object(obj))?;
            writeln!(out)
        }
        Format::Plain => match outcome {
            Outcome::Scalar(q) => writeln!(out, "{q}"),
            Outcome::Poly(p) => writeln!(out, "{p}"),
            Outcome::Series(s) => {
                for (e, c) in s.terms() {
                    writeln!(out, "t^{e}\t{c}")?;
                }
                if let Some(p) = s.precision() {
                    writeln!(out, "O(t^{p})")?;
                }
                Ok(())
            }
            Outcome::Reports(reports) => {
                for r in reports {
                    writeln!(out, "{r}")?;
                }
                let failed = reports.iter().filter(|r| !r.passed).count();
                writeln!(out, "{} checks, {} failed", reports.len(), failed)
            }
        },
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            match outcome {
                Outcome::Scalar(q) => {
                    let mut header = vec!["command".to_string()];
                    header.extend(record.params.keys().cloned());
                    header.push("result".into());
                    w.write_record(&header)?;
                    let mut row = vec![record.command.to_string()];
                    row.extend(record.params.values().map(param_text));
                    row.push(q.to_string());
                    w.write_record(&row)?;
                }
                Outcome::Poly(p) => {
                    w.write_record(["degree", "coefficient"])?;
                    for (d, c) in p.coeffs().iter().enumerate() {
                        w.write_record([d.to_string(), c.to_string()])?;
                    }
                }
                Outcome::Series(s) => {
                    w.write_record(["exponent", "coefficient"])?;
                    for (e, c) in s.terms() {
                        w.write_record([e.to_string(), c.to_string()])?;
                    }
                }
                Outcome::Reports(reports) => {
                    w.write_record([
                        "identity_id",
                        "n",
                        "k",
                        "alpha",
                        "lambda",
                        "order",
                        "window_lo",
                        "window_hi",
                        "passed",
                        "discrepancy_exponent",
                        "discrepancy_lhs",
                        "discrepancy_rhs",
                    ])?;
                    let opt = |v: Option<String>| v.unwrap_or_default();
                    for r in reports {
                        let d = r.first_discrepancy.as_ref();
                        w.write_record([
                            r.identity_id.to_string(),
                            opt(r.n.map(|n| n.to_string())),
                            r.k.to_string(),
                            opt(r.alpha.as_ref().map(Rational::to_string)),
                            opt(r.lambda.as_ref().map(Rational::to_string)),
                            opt(r.order.map(|o| o.to_string())),
                            opt(r.window.map(|w| w.0.to_string())),
                            opt(r.window.map(|w| w.1.to_string())),
                            r.passed.to_string(),
                            opt(d.map(|d| d.exponent.to_string())),
                            opt(d.map(|d| d.lhs.to_string())),
                            opt(d.map(|d| d.rhs.to_string())),
                        ])?;
                    }
                }
            }
            w.flush()
        }
    }
}

fn emit_error(
    out: &mut dyn Write,
    format: Format,
    record: &Record,
    error: &Error,
) -> std::io::Result<()> {
    match format {
        Format::Json => {
            let mut obj = header_json(record);
            obj.insert("status".into(), json!("error"));
            obj.insert("error_kind".into(), json!(error.kind()));
            obj.insert("message".into(), json!(error.to_string()));
            serde_json::to_writer_pretty(&mut *out, &Json::Object(obj))?;
            writeln!(out)
        }
        Format::Plain => writeln!(out, "error ({}): {error}", error.kind()),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["command", "status", "error_kind", "message"])?;
            w.write_record([record.command, "error", error.kind(), &error.to_string()])?;
            w.flush()
        }
    }
}
