use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::time::Instant;

use fhdet::determinants::{error_hyperplane, evaluate, Method, ReportParams};
use fhdet::fh_symbol::{coefficient_sequence, Params};
use fhdet::verify::{run_suite, SuiteConfig};
use fhdet::{Error, LogValue};
use rayon::prelude::*;

use crate::args::{CoeffsArgs, EvalArgs, ReportFormat, StreamFormat, SweepArgs, TableFormat, VerifyArgs};
use crate::error::{CliError, CliResult};
use crate::output::{write_csv, write_json, CoeffRecord, OutputRecord, CSV_HEADER};
use crate::param::{parse_range, ParamValue};

/// Environment variable that overrides `verify --seed`.
pub const SEED_ENV: &str = "FHDET_SEED";

/// Grid points evaluated per parallel batch.
const SWEEP_CHUNK: usize = 1024;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn param(s: &str) -> CliResult<ParamValue> {
    ParamValue::parse(s).map_err(usage)
}

fn report_params(alpha: &ParamValue, beta: &ParamValue) -> ReportParams {
    match (alpha, beta) {
        (ParamValue::Exact { value: a, .. }, ParamValue::Exact { value: b, .. }) => {
            ReportParams::Exact(Params::new(a.clone(), b.clone()))
        }
        _ => ReportParams::Real(Params::new(alpha.to_f64(), beta.to_f64())),
    }
}

/// Methods for a `--method` value; exact methods need exact parameters.
fn resolve_methods(name: &str, exact: bool) -> CliResult<Vec<Method>> {
    if name == "all" {
        return Ok(Method::ALL.into_iter().filter(|m| exact || !m.is_exact()).collect());
    }
    let m = Method::from_name(name).ok_or_else(|| usage(format!("unknown method `{name}`")))?;
    if m.is_exact() && !exact {
        return Err(usage(format!("method {m} needs rational parameters (p/q or integers), got a decimal")));
    }
    Ok(vec![m])
}

fn diagnostic(err: &Error, params: &ReportParams) -> String {
    match (err, error_hyperplane(err, params.to_real())) {
        (Error::Pole { .. }, Some(h)) => format!("{err} (hyperplane {h})"),
        _ => err.to_string(),
    }
}

/// Evaluates one point; the error side carries the diagnostic text.
fn run_point(method: Method, params: &ReportParams, n: usize, timed: bool) -> (Result<LogValue, String>, Option<u64>) {
    let start = Instant::now();
    let value = evaluate(method, params, n).map(|r| r.value).map_err(|e| diagnostic(&e, params));
    let elapsed = timed.then(|| start.elapsed().as_micros() as u64);
    (value, elapsed)
}

fn record(n: usize, alpha: &ParamValue, beta: &ParamValue, method: Method, value: &Result<LogValue, String>, elapsed: Option<u64>) -> OutputRecord {
    let mut r = OutputRecord::new(n, alpha.text(), beta.text(), method.name(), value.clone().map_err(|_| ()));
    r.elapsed_microseconds = elapsed;
    r
}

pub fn eval(args: EvalArgs) -> CliResult {
    let (alpha, beta) = (param(&args.alpha)?, param(&args.beta)?);
    if args.n == 0 {
        return Err(usage("--n must be at least 1"));
    }
    let methods = resolve_methods(&args.method, alpha.is_exact() && beta.is_exact())?;
    let params = report_params(&alpha, &beta);
    let mut failed = 0;
    let records: Vec<OutputRecord> = methods
        .into_iter()
        .map(|m| {
            let (value, elapsed) = run_point(m, &params, args.n, true);
            if let Err(msg) = &value {
                eprintln!("{m}: {msg}");
                failed += 1;
            }
            record(args.n, &alpha, &beta, m, &value, elapsed)
        })
        .collect();
    let mut out = io::stdout().lock();
    match args.format {
        TableFormat::Json => write_json(&mut out, &records)?,
        TableFormat::Csv => write_csv(&mut out, CSV_HEADER, records.iter().map(OutputRecord::csv_row))?,
    }
    if failed > 0 {
        return Err(CliError::Domain(format!("{failed} method(s) hit a pole or vanishing denominator")));
    }
    Ok(())
}

pub fn coeffs(args: CoeffsArgs) -> CliResult {
    let (alpha, beta) = (param(&args.alpha)?, param(&args.beta)?);
    if args.kmin > args.kmax {
        return Err(usage("--kmin must not exceed --kmax"));
    }
    let reach = args.kmin.unsigned_abs().max(args.kmax.unsigned_abs());
    let p = Params::new(alpha.to_f64(), beta.to_f64());
    let spec = coefficient_sequence(p, reach as usize + 1).map_err(|e| CliError::Domain(diagnostic(&e, &ReportParams::Real(p))))?;
    let records: Vec<CoeffRecord> = (args.kmin..=args.kmax)
        .map(|k| CoeffRecord { k, alpha: alpha.text().to_string(), beta: beta.text().to_string(), coefficient: Some(spec.coeff(k)) })
        .collect();
    let mut out = io::stdout().lock();
    match args.format {
        TableFormat::Json => write_json(&mut out, &records)?,
        TableFormat::Csv => write_csv(&mut out, ["k", "alpha", "beta", "coefficient"], records.iter().map(CoeffRecord::csv_row))?,
    }
    Ok(())
}

fn axis(range: &Option<String>, single: &Option<String>) -> CliResult<Vec<ParamValue>> {
    match (range, single) {
        (Some(r), _) => parse_range(r).map_err(usage),
        (None, Some(v)) => Ok(vec![param(v)?]),
        (None, None) => Err(usage("give either a range or a single value")),
    }
}

enum SweepSink<W: Write> {
    Csv(Box<csv::Writer<W>>),
    Jsonl(W),
}

impl<W: Write> SweepSink<W> {
    fn new(format: StreamFormat, out: W) -> io::Result<Self> {
        Ok(match format {
            StreamFormat::Csv => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(CSV_HEADER)?;
                SweepSink::Csv(Box::new(w))
            }
            StreamFormat::Jsonl => SweepSink::Jsonl(out),
        })
    }

    fn write(&mut self, r: &OutputRecord) -> io::Result<()> {
        match self {
            SweepSink::Csv(w) => Ok(w.write_record(r.csv_row())?),
            SweepSink::Jsonl(w) => {
                serde_json::to_writer(&mut *w, r)?;
                writeln!(w)
            }
        }
    }

    fn finish(self) -> io::Result<()> {
        match self {
            SweepSink::Csv(mut w) => w.flush(),
            SweepSink::Jsonl(mut w) => w.flush(),
        }
    }
}

pub fn sweep(args: SweepArgs) -> CliResult {
    let alphas = axis(&args.alpha_range, &args.alpha)?;
    let betas = axis(&args.beta_range, &args.beta)?;
    if args.n_list.contains(&0) {
        return Err(usage("--n-list entries must be at least 1"));
    }
    if args.jobs == 0 {
        return Err(usage("--jobs must be at least 1"));
    }
    let exact = alphas.iter().chain(&betas).all(ParamValue::is_exact);
    let methods = resolve_methods(&args.method, exact)?;
    let ns = &args.n_list;
    let total = alphas.len() * betas.len() * ns.len() * methods.len();

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.jobs)
        .build()
        .map_err(|e| usage(format!("cannot start {} worker threads: {e}", args.jobs)))?;
    let out: Box<dyn Write> = match &args.out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    let mut sink = SweepSink::new(args.format, out)?;

    // Grid order: alpha slowest, then beta, n, method.
    let point = |idx: usize| {
        let mut rest = idx;
        let mi = rest % methods.len();
        rest /= methods.len();
        let ni = rest % ns.len();
        rest /= ns.len();
        let bi = rest % betas.len();
        let ai = rest / betas.len();
        let (alpha, beta, n, method) = (&alphas[ai], &betas[bi], ns[ni], methods[mi]);
        let (value, elapsed) = run_point(method, &report_params(alpha, beta), n, args.timings);
        let diag = value.as_ref().err().map(|m| format!("alpha={} beta={} n={n} {method}: {m}", alpha.text(), beta.text()));
        (record(n, alpha, beta, method, &value, elapsed), diag)
    };
    for start in (0..total).step_by(SWEEP_CHUNK) {
        let end = (start + SWEEP_CHUNK).min(total);
        let batch: Vec<_> = pool.install(|| (start..end).into_par_iter().map(point).collect());
        for (rec, diag) in batch {
            if let Some(d) = diag {
                eprintln!("{d}");
            }
            sink.write(&rec)?;
        }
    }
    sink.finish()?;
    Ok(())
}

pub fn verify(args: VerifyArgs) -> CliResult {
    let seed = match std::env::var(SEED_ENV) {
        Ok(s) => s.trim().parse().map_err(|_| usage(format!("{SEED_ENV}=`{s}` is not an unsigned integer")))?,
        Err(_) => args.seed,
    };
    let config = SuiteConfig {
        nmax_exact: args.nmax_exact,
        nmax_float: args.nmax_float,
        samples: args.samples,
        ..SuiteConfig::default()
    };
    let outcomes = run_suite(seed, &config).map_err(|e| usage(e.to_string()))?;
    let mut out = io::stdout().lock();
    match args.format {
        ReportFormat::Json => write_json(&mut out, &outcomes)?,
        ReportFormat::Text => {
            writeln!(out, "seed {seed}")?;
            for o in &outcomes {
                let status = if o.passed() { "PASS" } else { "FAIL" };
                writeln!(out, "{status} {} samples={} failures={} resamples={}", o.check_name, o.samples, o.failures, o.resamples)?;
            }
        }
    }
    let failed: Vec<_> = outcomes.iter().filter(|o| !o.passed()).collect();
    for o in &failed {
        eprintln!("{}: {}", o.check_name, o.first_failure.as_deref().unwrap_or("(no detail)"));
    }
    if failed.is_empty() { Ok(()) } else { Err(CliError::VerifyFailed(failed.len())) }
}
