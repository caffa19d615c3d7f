//! Command-line front end: argument parsing, dispatch and output formatting.
//!
//! Exit status is 0 on success, 1 when a checked claim fails (or on an
//! internal error), and 2 for usage errors, including an invalid prime.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::autocorr::{acf_direct, verify_lemma3, verify_theorem1};
use crate::cyclotomy::{cyclotomic_numbers, quadratic_partition, CyclotomicSystem};
use crate::error::Error;
use crate::lincomp::diagnostics::DEFAULT_SEED;
use crate::lincomp::{
    lc_f4_bm, lc_f4_gcd, lc_z4, root_diagnostics, verify_certificate, DiagnosticsOptions,
    RootDiagnostics,
};
use crate::seqgen::{build_sequence_in, gray_map, Preset, SequenceSpec, Variant};
use crate::survey::{check_optimality, check_symmetries, run_survey, SurveyOptions};
use crate::Execution;

#[derive(Parser, Debug)]
#[command(
    name = "quatseq",
    version,
    about = "Quaternary cyclotomic sequences of period 2p"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Seed for the random draws used to find roots of unity.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,

    /// Write output to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Directory against which a relative `--out` is resolved.
    #[arg(long, global = true, env = "QUATSEQ_OUT_DIR")]
    pub out_dir: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print one period of a sequence.
    Gen(SpecArgs),
    /// Periodic autocorrelation at every shift.
    Acf(SpecArgs),
    /// Linear complexity over GF(4) (Gray image) or Z4.
    Lc(LcArgs),
    /// Cyclotomic numbers of order four and the quadratic partition of p.
    Numbers(PrimeArgs),
    /// All 576 class layouts for one prime.
    Survey(SurveyArgs),
    /// Check the correlation and linear-complexity claims for one prime.
    Verify(PrimeArgs),
}

#[derive(Args, Debug, Clone)]
pub struct PrimeArgs {
    /// A prime p ≡ 1 (mod 4).
    #[arg(long)]
    pub p: u64,
    /// Primitive root modulo p; defaults to the smallest one.
    #[arg(long)]
    pub g: Option<u64>,
}

#[derive(Args, Debug, Clone)]
#[command(group(ArgGroup::new("layout").required(true).args(["preset", "jvec"])))]
pub struct SpecArgs {
    #[command(flatten)]
    pub prime: PrimeArgs,
    #[arg(long, value_enum)]
    pub preset: Option<PresetArg>,
    /// Even-half class for symbols 0..3, e.g. `0,1,2,3`.
    #[arg(long, value_delimiter = ',', requires = "lvec")]
    pub jvec: Option<Vec<u8>>,
    /// Odd-half class for symbols 0..3.
    #[arg(long, value_delimiter = ',', requires = "jvec")]
    pub lvec: Option<Vec<u8>>,
    #[arg(long, value_enum, default_value_t = VariantArg::Standard)]
    pub variant: VariantArg,
}

#[derive(Args, Debug, Clone)]
pub struct LcArgs {
    #[command(flatten)]
    pub spec: SpecArgs,
    #[arg(long, value_enum, default_value_t = RingArg::F4)]
    pub ring: RingArg,
    /// Algorithm over GF(4); ignored for Z4.
    #[arg(long, value_enum, default_value_t = MethodArg::Gcd)]
    pub method: MethodArg,
    /// Also evaluate at roots of unity in an extension field.
    #[arg(long)]
    pub diagnostics: bool,
    /// Largest ord_p(4) for which diagnostics build GF(4^m).
    #[arg(long, default_value_t = 24)]
    pub max_degree: usize,
}

#[derive(Args, Debug, Clone)]
pub struct SurveyArgs {
    #[command(flatten)]
    pub prime: PrimeArgs,
    /// Also compute the Z4 linear complexity of every record.
    #[arg(long)]
    pub with_lc_z4: bool,
    /// Compute records on one thread.
    #[arg(long)]
    pub sequential: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum PresetArg {
    Eq6,
    Eq7,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum VariantArg {
    Standard,
    Zeroed,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum RingArg {
    F4,
    Z4,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum MethodArg {
    Gcd,
    BerlekampMassey,
}

/// A failure carrying its exit status.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: 2,
            message: message.into(),
        }
    }

    fn internal(message: impl Into<String>) -> Self {
        CliError {
            code: 1,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::NotPrime(_)
            | Error::NotOneModFour(_)
            | Error::NotPrimitiveRoot { .. }
            | Error::InvalidPermutation { .. } => CliError::usage(e.to_string()),
            other => CliError::internal(other.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::internal(e.to_string())
    }
}

/// Rendered output and whether every checked claim held.
pub struct Output {
    pub body: String,
    pub failed_claims: Vec<String>,
}

impl Output {
    fn ok(body: String) -> Self {
        Output {
            body,
            failed_claims: Vec::new(),
        }
    }
}

fn system(args: &PrimeArgs) -> Result<CyclotomicSystem, CliError> {
    Ok(match args.g {
        Some(g) => CyclotomicSystem::new(args.p, g)?,
        None => CyclotomicSystem::with_smallest_root(args.p)?,
    })
}

fn to_array(name: &str, v: &[u8]) -> Result<[u8; 4], CliError> {
    v.try_into()
        .map_err(|_| CliError::usage(format!("--{name} needs exactly four entries")))
}

fn spec_of(args: &SpecArgs, sys: &CyclotomicSystem) -> Result<SequenceSpec, CliError> {
    let variant = match args.variant {
        VariantArg::Standard => Variant::Standard,
        VariantArg::Zeroed => Variant::Zeroed,
    };
    let (jvec, lvec) = match (args.preset, &args.jvec, &args.lvec) {
        (Some(PresetArg::Eq6), _, _) => Preset::Eq6.vectors(),
        (Some(PresetArg::Eq7), _, _) => Preset::Eq7.vectors(),
        (None, Some(j), Some(l)) => (to_array("jvec", j)?, to_array("lvec", l)?),
        _ => return Err(CliError::usage("give --preset or both --jvec and --lvec")),
    };
    Ok(SequenceSpec::new(sys.p(), sys.g(), jvec, lvec, variant)?)
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

fn pretty<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn csv_table(header: &[&str], rows: Vec<Vec<String>>) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| CliError::internal(e.to_string());
    w.write_record(header).map_err(io)?;
    for r in rows {
        w.write_record(&r).map_err(io)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| CliError::internal(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

fn spec_json(spec: &SequenceSpec) -> Value {
    json!({
        "p": spec.p,
        "g": spec.g,
        "jvec": spec.jvec,
        "lvec": spec.lvec,
        "variant": spec.variant,
    })
}

fn spec_line(spec: &SequenceSpec) -> String {
    format!(
        "p = {}, g = {}, jvec = ({}), lvec = ({}), variant = {}",
        spec.p,
        spec.g,
        join(spec.jvec, ","),
        join(spec.lvec, ","),
        serde_json::to_value(spec.variant)
            .unwrap()
            .as_str()
            .unwrap(),
    )
}

fn gen(args: &SpecArgs, format: Format) -> Result<Output, CliError> {
    let sys = system(&args.prime)?;
    let spec = spec_of(args, &sys)?;
    let values = build_sequence_in(&sys, &spec)?.symbols();
    let body = match format {
        Format::Json => {
            let mut v = spec_json(&spec);
            v["values"] = json!(values);
            pretty(&v)
        }
        Format::Csv => csv_table(
            &["t", "value"],
            values
                .iter()
                .enumerate()
                .map(|(t, s)| vec![t.to_string(), s.to_string()])
                .collect(),
        )?,
        Format::Text => format!("{}\n{}\n", spec_line(&spec), join(&values, "")),
    };
    Ok(Output::ok(body))
}

fn acf(args: &SpecArgs, format: Format) -> Result<Output, CliError> {
    let sys = system(&args.prime)?;
    let spec = spec_of(args, &sys)?;
    let profile = acf_direct(&build_sequence_in(&sys, &spec)?);
    let body = match format {
        Format::Json => {
            let mut v = spec_json(&spec);
            v["values"] = profile
                .values()
                .iter()
                .enumerate()
                .map(|(w, r)| json!({"w": w, "re": r.re, "im": r.im, "norm_sq": r.norm_sq()}))
                .collect();
            v["max_norm_sq"] = json!(profile.max_nontrivial_norm_sq());
            pretty(&v)
        }
        Format::Csv => csv_table(
            &["w", "re", "im", "norm_sq"],
            profile
                .values()
                .iter()
                .enumerate()
                .map(|(w, r)| {
                    vec![
                        w.to_string(),
                        r.re.to_string(),
                        r.im.to_string(),
                        r.norm_sq().to_string(),
                    ]
                })
                .collect(),
        )?,
        Format::Text => {
            let mut s = format!("{}\n", spec_line(&spec));
            for (w, r) in profile.values().iter().enumerate() {
                writeln!(s, "{w:>4}  {:>8}  {:>4}", r.to_string(), r.norm_sq()).unwrap();
            }
            writeln!(
                s,
                "max |R(w)|^2 over w != 0: {}",
                profile.max_nontrivial_norm_sq()
            )
            .unwrap();
            s
        }
    };
    Ok(Output::ok(body))
}

fn lc(args: &LcArgs, format: Format, seed: u64) -> Result<Output, CliError> {
    let sys = system(&args.spec.prime)?;
    let spec = spec_of(&args.spec, &sys)?;
    let q = build_sequence_in(&sys, &spec)?;
    let (ring, l, coeffs, method, certificate_verified) = match args.ring {
        RingArg::F4 => {
            let u = gray_map(&q);
            let r = match args.method {
                MethodArg::Gcd => lc_f4_gcd(&u),
                MethodArg::BerlekampMassey => lc_f4_bm(&u),
            };
            let coeffs: Vec<u8> = r.poly.coeffs().iter().map(|c| c.to_u8()).collect();
            ("f4", r.linear_complexity, coeffs, r.method, None)
        }
        RingArg::Z4 => {
            let r = lc_z4(&q);
            let l = r.result.linear_complexity;
            let verified = r
                .certificate
                .as_ref()
                .map(|y| verify_certificate(&q, l - 1, y));
            let coeffs: Vec<u8> = r.result.poly.coeffs().iter().map(|c| c.value()).collect();
            ("z4", l, coeffs, r.result.method, verified)
        }
    };
    let diagnostics = if args.diagnostics {
        let opts = DiagnosticsOptions {
            max_degree: args.max_degree,
            seed,
        };
        Some(root_diagnostics(&sys, &spec, &opts)?)
    } else {
        None
    };
    let body = match format {
        Format::Json => {
            let mut v = spec_json(&spec);
            v["ring"] = json!(ring);
            v["L"] = json!(l);
            v["poly_coeffs"] = json!(coeffs);
            v["method"] = json!(method);
            v["certificate_verified"] = json!(certificate_verified);
            v["diagnostics"] = json!(diagnostics);
            pretty(&v)
        }
        Format::Csv => csv_table(
            &["p", "ring", "L", "method", "poly_coeffs"],
            vec![vec![
                spec.p.to_string(),
                ring.into(),
                l.to_string(),
                serde_json::to_value(method)
                    .unwrap()
                    .as_str()
                    .unwrap()
                    .into(),
                join(&coeffs, " "),
            ]],
        )?,
        Format::Text => {
            let mut s = format!("{}\nring = {ring}, L = {l}\n", spec_line(&spec));
            writeln!(s, "polynomial (low degree first): {}", join(&coeffs, " ")).unwrap();
            if let Some(ok) = certificate_verified {
                writeln!(
                    s,
                    "degree-{} infeasibility certificate verified: {ok}",
                    l - 1
                )
                .unwrap();
            }
            if let Some(d) = &diagnostics {
                s.push_str(&diagnostics_text(d));
            }
            s
        }
    };
    Ok(Output::ok(body))
}

fn diagnostics_text(d: &RootDiagnostics) -> String {
    let mut s = format!(
        "diagnostics: ord_p(4) = {}, ord_p(2) = {}\n",
        d.extension_degree, d.binary_degree
    );
    if let Some(why) = &d.skipped {
        writeln!(s, "  skipped: {why}").unwrap();
    }
    for c in &d.checks {
        let status = if c.holds { "ok" } else { "FAIL" };
        writeln!(s, "  {:<13} {status:<4}  {}", c.name, c.detail).unwrap();
    }
    s
}

fn numbers(args: &PrimeArgs, format: Format) -> Result<Output, CliError> {
    let sys = system(args)?;
    let nums = cyclotomic_numbers(&sys);
    let qp = quadratic_partition(&sys)?;
    let body = match format {
        Format::Json => pretty(&json!({
            "p": sys.p(),
            "g": sys.g(),
            "table": nums.table,
            "x": qp.x,
            "y": qp.y,
        })),
        Format::Csv => csv_table(
            &["i", "j", "count"],
            (0..4)
                .flat_map(|i| (0..4).map(move |j| (i, j)))
                .map(|(i, j)| vec![i.to_string(), j.to_string(), nums.table[i][j].to_string()])
                .collect(),
        )?,
        Format::Text => {
            let mut s = format!("p = {}, g = {}\n   j:", sys.p(), sys.g());
            for j in 0..4 {
                write!(s, "{j:>5}").unwrap();
            }
            s.push('\n');
            for (i, row) in nums.table.iter().enumerate() {
                write!(s, "i = {i}").unwrap();
                for v in row {
                    write!(s, "{v:>5}").unwrap();
                }
                s.push('\n');
            }
            writeln!(s, "p = x^2 + 4y^2 with x = {}, y = {}", qp.x, qp.y).unwrap();
            s
        }
    };
    Ok(Output::ok(body))
}

fn survey(args: &SurveyArgs, format: Format) -> Result<Output, CliError> {
    let sys = system(&args.prime)?;
    let exec = if args.sequential {
        Execution::Sequential
    } else {
        Execution::default()
    };
    let records = run_survey(
        &sys,
        &SurveyOptions {
            with_lc_z4: args.with_lc_z4,
            exec,
        },
    )?;
    let optimality = check_optimality(&records);
    let symmetries = check_symmetries(&records);
    let body = match format {
        Format::Json => pretty(&json!({
            "p": sys.p(),
            "g": sys.g(),
            "records": records,
            "optimality": optimality,
            "symmetries": symmetries,
        })),
        Format::Csv => csv_table(
            &[
                "jvec",
                "lvec",
                "max_norm_sq",
                "lc_f4",
                "lc_z4",
                "class_id",
                "value_multiset",
            ],
            records
                .iter()
                .map(|r| {
                    vec![
                        join(r.jvec, " "),
                        join(r.lvec, " "),
                        r.max_norm_sq.to_string(),
                        r.lc_f4.to_string(),
                        r.lc_z4.map(|l| l.to_string()).unwrap_or_default(),
                        r.class_id.to_string(),
                        r.value_multiset.clone(),
                    ]
                })
                .collect(),
        )?,
        Format::Text => {
            let classes = records
                .iter()
                .map(|r| r.class_id)
                .max()
                .map_or(0, |m| m + 1);
            let mut s = format!(
                "p = {}, g = {}: {} layouts in {classes} symmetry classes\n",
                sys.p(),
                sys.g(),
                records.len()
            );
            writeln!(
                s,
                "smallest peak |R(w)|^2: {}; within the eq6 class: {}",
                optimality.min_max_norm_sq,
                optimality
                    .eq6_class_max_norm_sq
                    .map_or("-".into(), |v| v.to_string())
            )
            .unwrap();
            writeln!(
                s,
                "eq6 class attains the minimum (empirical): {}",
                if optimality.holds { "yes" } else { "no" }
            )
            .unwrap();
            for (j, l) in optimality.counterexamples.iter().take(8) {
                writeln!(
                    s,
                    "  attained by jvec = ({}), lvec = ({})",
                    join(j, ","),
                    join(l, ",")
                )
                .unwrap();
            }
            writeln!(
                s,
                "symmetry checks: {} comparisons, {}",
                symmetries.checked,
                if symmetries.holds {
                    "all hold"
                } else {
                    "FAILURES"
                }
            )
            .unwrap();
            s
        }
    };
    // The optimality remark is reported, not enforced: the survey itself ran.
    let mut failed = Vec::new();
    if !symmetries.holds {
        failed.push("symmetry".to_string());
    }
    Ok(Output {
        body,
        failed_claims: failed,
    })
}

#[derive(Serialize)]
struct ClaimRow {
    claim: &'static str,
    status: &'static str,
    detail: String,
}

fn row(claim: &'static str, holds: bool, detail: String) -> ClaimRow {
    ClaimRow {
        claim,
        status: if holds { "pass" } else { "fail" },
        detail,
    }
}

fn verify(args: &PrimeArgs, format: Format, seed: u64) -> Result<Output, CliError> {
    let sys = system(args)?;
    let (p, n) = (sys.p(), sys.period());
    let mut rows = Vec::new();

    let nums = cyclotomic_numbers(&sys);
    rows.push(row(
        "cyclotomic-identity",
        nums.column_difference() == -1,
        format!("sum (j,0) - sum (j,2) = {}", nums.column_difference()),
    ));

    let t1 = verify_theorem1(&sys)?;
    rows.push(row(
        "eq6-acf-values",
        t1.value_set_holds(),
        format!("eq6 values {{{}}}", join(&t1.observed, ", ")),
    ));

    let qp = quadratic_partition(&sys)?;
    let l3 = verify_lemma3(&sys, &qp)?;
    rows.push(row(
        "eq7-acf-peak",
        l3.holds(),
        format!(
            "eq7 peak {} vs closed form {} (x = {}, y = {})",
            l3.attained_max_norm_sq, l3.predicted_max_norm_sq, qp.x, qp.y
        ),
    ));

    let eq6 = SequenceSpec::preset(p, sys.g(), Preset::Eq6);
    let eq7 = SequenceSpec::preset(p, sys.g(), Preset::Eq7);
    let q6 = build_sequence_in(&sys, &eq6)?;
    let q7 = build_sequence_in(&sys, &eq7)?;

    let u6 = gray_map(&q6);
    let (gcd6, bm6) = (lc_f4_gcd(&u6), lc_f4_bm(&u6));
    let expected = if p % 8 == 1 {
        n
    } else {
        (3 * p as usize + 1) / 2
    };
    rows.push(row(
        "eq6-f4-complexity",
        gcd6.linear_complexity == expected && gcd6.poly == bm6.poly,
        format!(
            "L = {} (expected {expected}), Berlekamp-Massey L = {}",
            gcd6.linear_complexity, bm6.linear_complexity
        ),
    ));
    let lc7 = lc_f4_gcd(&gray_map(&q7)).linear_complexity;
    rows.push(row(
        "eq7-f4-complexity",
        lc7 == n,
        format!("L = {lc7} (expected {n})"),
    ));

    for (claim, q) in [("eq6-z4-complexity", &q6), ("eq7-z4-complexity", &q7)] {
        let r = lc_z4(q);
        let l = r.result.linear_complexity;
        let cert = r
            .certificate
            .as_ref()
            .is_some_and(|y| verify_certificate(q, l - 1, y));
        rows.push(row(
            claim,
            l == n && cert,
            format!("Z4 L = {l} (expected {n}), certificate verified: {cert}"),
        ));
    }

    let opts = DiagnosticsOptions {
        seed,
        ..Default::default()
    };
    let d6 = root_diagnostics(&sys, &eq6, &opts)?;
    match &d6.skipped {
        Some(why) => rows.push(ClaimRow {
            claim: "root-diagnostics",
            status: "skipped",
            detail: why.clone(),
        }),
        None => {
            let d7 = root_diagnostics(&sys, &eq7, &opts)?;
            let mod2 = d6.check("mod2-image") == Some(true) && d7.check("mod2-image") == Some(true);
            rows.push(row(
                "mod2-image",
                mod2,
                format!("S mod 2 at roots of unity in GF(2^{})", d6.binary_degree),
            ));
            let failing: Vec<&str> = d6
                .checks
                .iter()
                .filter(|c| !c.holds && c.name != "mod2-image")
                .map(|c| c.name)
                .collect();
            rows.push(row(
                "root-diagnostics",
                failing.is_empty(),
                if failing.is_empty() {
                    format!(
                        "{} checks in GF(4^{})",
                        d6.checks.len() - 1,
                        d6.extension_degree
                    )
                } else {
                    format!("failing: {}", failing.join(", "))
                },
            ));
        }
    }

    let failed_claims: Vec<String> = rows
        .iter()
        .filter(|r| r.status == "fail")
        .map(|r| r.claim.to_string())
        .collect();
    let body = match format {
        Format::Json => pretty(&json!({
            "p": p,
            "g": sys.g(),
            "checks": rows,
            "passed": failed_claims.is_empty(),
        })),
        Format::Csv => csv_table(
            &["claim", "status", "detail"],
            rows.iter()
                .map(|r| vec![r.claim.into(), r.status.into(), r.detail.clone()])
                .collect(),
        )?,
        Format::Text => {
            let mut s = format!("p = {p}, g = {}\n", sys.g());
            for r in &rows {
                writeln!(s, "{:<20} {:<7} {}", r.claim, r.status, r.detail).unwrap();
            }
            s
        }
    };
    Ok(Output {
        body,
        failed_claims,
    })
}

/// Runs one parsed command and returns its output.
pub fn execute(config: &RunConfig) -> Result<Output, CliError> {
    let format = config.format;
    match &config.command {
        Command::Gen(a) => gen(a, format),
        Command::Acf(a) => acf(a, format),
        Command::Lc(a) => lc(a, format, config.seed),
        Command::Numbers(a) => numbers(a, format),
        Command::Survey(a) => survey(a, format),
        Command::Verify(a) => verify(a, format, config.seed),
    }
}

fn destination(config: &RunConfig) -> Option<PathBuf> {
    let out = config.out.as_ref()?;
    match &config.out_dir {
        Some(dir) if out.is_relative() => Some(dir.join(out)),
        _ => Some(out.clone()),
    }
}

/// Parses `args`, runs the command, writes its output and returns the exit
/// status.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let result = execute(&config).and_then(|out| {
        match destination(&config) {
            Some(path) => std::fs::write(path, &out.body)?,
            None => std::io::stdout().write_all(out.body.as_bytes())?,
        }
        Ok(out.failed_claims)
    });
    match result {
        Ok(failed) if failed.is_empty() => 0,
        Ok(failed) => {
            eprintln!("check failed: {}", failed.join(", "));
            1
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            e.code
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> Result<Output, CliError> {
        let config =
            RunConfig::try_parse_from(std::iter::once("quatseq").chain(args.iter().copied()))
                .map_err(|e| CliError::usage(e.to_string()))?;
        execute(&config)
    }

    #[test]
    fn gen_json_matches_example() {
        let out = run(&["gen", "--p", "13", "--preset", "eq6", "--format", "json"]).unwrap();
        let v: Value = serde_json::from_str(&out.body).unwrap();
        let values: Vec<u64> = v["values"]
            .as_array()
            .unwrap()
            .iter()
            .map(|x| x.as_u64().unwrap())
            .collect();
        let ones: Vec<usize> = (0..26).filter(|&t| values[t] == 1).collect();
        assert_eq!(ones, vec![2, 6, 17, 18, 23, 25]);
        assert_eq!(v["variant"], "standard");
    }

    #[test]
    fn invalid_prime_is_a_usage_error() {
        for p in ["15", "7"] {
            let err = run(&["verify", "--p", p]).err().unwrap();
            assert_eq!(err.code, 2, "p = {p}");
        }
        assert_eq!(
            run(&["gen", "--p", "13", "--g", "3", "--preset", "eq6"])
                .err()
                .unwrap()
                .code,
            2
        );
        assert_eq!(
            run(&["gen", "--p", "13", "--jvec", "0,0,1,2", "--lvec", "0,1,2,3"])
                .err()
                .unwrap()
                .code,
            2
        );
        assert_eq!(main_with(["quatseq", "gen", "--p", "13"]), 2);
    }

    #[test]
    fn verify_13_passes() {
        let out = run(&["verify", "--p", "13"]).unwrap();
        assert!(out.failed_claims.is_empty(), "{}", out.body);
    }

    #[test]
    fn output_is_deterministic() {
        let args = [
            "lc",
            "--p",
            "13",
            "--preset",
            "eq6",
            "--diagnostics",
            "--format",
            "json",
        ];
        assert_eq!(run(&args).unwrap().body, run(&args).unwrap().body);
    }

    #[test]
    fn out_dir_resolves_relative_paths() {
        let config = RunConfig::try_parse_from([
            "quatseq",
            "numbers",
            "--p",
            "13",
            "--out",
            "t.json",
            "--out-dir",
            "/tmp/x",
        ])
        .unwrap();
        assert_eq!(destination(&config), Some(PathBuf::from("/tmp/x/t.json")));
    }
}
