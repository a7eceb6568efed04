//! `macd`: exact Macdonald polynomial computations on the command line.
//!
//! Subcommands: `compute-e`, `compute-p`, `specialize`, `verify`,
//! `enumerate`, `trace`.  Output is deterministic byte-for-byte for
//! identical arguments: all maps are key-sorted and all term orders fixed.
//! Exit codes: 0 success, 1 usage/parse errors and failed verification,
//! 2 term-budget refusal.

mod document;
mod render;

use std::io::Write;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde_json::{json, Value};

use macdonald_svt::combinatorics::{Composition, Permutation};
use macdonald_svt::macdonald::{
    compute_e, compute_e_with_terms, compute_p, evaluate_at, specialize, verify_identities, Engine,
    MacdonaldQuery, Specialization, TermRecord, Variant, VerifyOptions, DEFAULT_TERM_BUDGET,
    DEFAULT_VERIFY_SEED,
};
use macdonald_svt::qt::XPolynomial;
use macdonald_svt::tableaux::{arm_profile, count_tableaux, tableau_from_index};
use macdonald_svt::Error as CoreError;

#[derive(Parser)]
#[command(
    name = "macd",
    version,
    about = "Exact Macdonald polynomials from set-valued tableaux"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a relative Macdonald polynomial E^z_mu.
    ComputeE(ComputeEArgs),
    /// Compute a symmetric Macdonald polynomial P_lambda (monic).
    ComputeP(ComputePArgs),
    /// Compute and then specialize (q=0, t=0, t=q, qinv=0, tinv=0, or a
    /// rational point).
    Specialize(SpecializeArgs),
    /// Check the term identities (pos/neg formulas, walk oracle, parity,
    /// fold signs) tableau by tableau.
    Verify(VerifyArgs),
    /// Stream all set-valued tableaux of a shape as JSON lines.
    Enumerate(EnumerateArgs),
    /// Emit the full alcove walk of one tableau as a JSON trace.
    Trace(TraceArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Pos,
    Neg,
}

#[derive(Clone, Copy, ValueEnum)]
enum EngineArg {
    Tableaux,
    Walks,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Latex,
    Json,
}

#[derive(Args)]
struct ComputeEArgs {
    /// Shape as a comma-separated list, e.g. 2,2,1,1,0,0
    #[arg(long)]
    mu: String,
    /// Initial direction in one-line notation, or "id"
    #[arg(long, default_value = "id")]
    z: String,
    #[arg(long, value_enum, default_value_t = VariantArg::Pos)]
    variant: VariantArg,
    #[arg(long, value_enum, default_value_t = EngineArg::Tableaux)]
    engine: EngineArg,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    /// Also list every tableau term
    #[arg(long)]
    terms: bool,
    #[arg(long, default_value_t = DEFAULT_TERM_BUDGET)]
    max_terms: u64,
    /// Write to a file instead of stdout
    #[arg(long)]
    output: Option<String>,
}

#[derive(Args)]
struct ComputePArgs {
    /// Partition as a comma-separated list, e.g. 2,1,0
    #[arg(long)]
    lambda: String,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    #[arg(long, default_value_t = DEFAULT_TERM_BUDGET)]
    max_terms: u64,
    #[arg(long)]
    output: Option<String>,
}

#[derive(Args)]
struct SpecializeArgs {
    /// Shape of E^z_mu (conflicts with --lambda)
    #[arg(long, conflicts_with = "lambda")]
    mu: Option<String>,
    /// Partition of P_lambda (conflicts with --mu)
    #[arg(long)]
    lambda: Option<String>,
    #[arg(long, default_value = "id")]
    z: String,
    /// Comma-separated substitutions: q=0, t=0, t=q, qinv=0, tinv=0, or a
    /// rational point q=A/B,t=C/D
    #[arg(long)]
    at: String,
    #[arg(long, value_enum, default_value_t = VariantArg::Pos)]
    variant: VariantArg,
    #[arg(long, value_enum, default_value_t = EngineArg::Tableaux)]
    engine: EngineArg,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    #[arg(long, default_value_t = DEFAULT_TERM_BUDGET)]
    max_terms: u64,
    #[arg(long)]
    output: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    mu: String,
    #[arg(long, default_value = "id")]
    z: String,
    /// Sample size for shapes past the term budget
    #[arg(long)]
    samples: Option<u64>,
    #[arg(long, default_value_t = DEFAULT_VERIFY_SEED)]
    rng_seed: u64,
    #[arg(long, default_value_t = DEFAULT_TERM_BUDGET)]
    max_terms: u64,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    #[arg(long)]
    output: Option<String>,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    mu: String,
    #[arg(long, default_value_t = DEFAULT_TERM_BUDGET)]
    max_terms: u64,
    #[arg(long)]
    output: Option<String>,
}

#[derive(Args)]
struct TraceArgs {
    #[arg(long)]
    mu: String,
    #[arg(long, default_value = "id")]
    z: String,
    /// The tableau as emitted by `enumerate`, e.g. '{"1,2":[1,2]}'
    #[arg(long, default_value = "{}")]
    tableau: String,
    #[arg(long)]
    output: Option<String>,
}

/// An error with its process exit code.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: message.into(),
        }
    }
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Self {
        let code = match e {
            CoreError::BudgetExceeded(..) => 2,
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn parse_mu(s: &str) -> Result<Composition, Failure> {
    let parts: Result<Vec<u32>, _> = s.split(',').map(|p| p.trim().parse::<u32>()).collect();
    let parts = parts.map_err(|_| Failure::usage(format!("cannot parse composition '{s}'")))?;
    Composition::new(parts).map_err(Failure::from)
}

fn parse_z(s: &str, n: usize) -> Result<Permutation, Failure> {
    if s == "id" {
        return Ok(Permutation::identity(n));
    }
    let window: Result<Vec<usize>, _> = s.split(',').map(|p| p.trim().parse::<usize>()).collect();
    let window = window.map_err(|_| Failure::usage(format!("cannot parse permutation '{s}'")))?;
    if window.len() != n {
        return Err(Failure::usage(format!(
            "permutation has {} entries but the shape has rank {n}",
            window.len()
        )));
    }
    Permutation::new(window).map_err(Failure::from)
}

fn parse_rational(s: &str) -> Option<BigRational> {
    if let Some((a, b)) = s.split_once('/') {
        let num: num_bigint::BigInt = a.trim().parse().ok()?;
        let den: num_bigint::BigInt = b.trim().parse().ok()?;
        if den == 0.into() {
            return None;
        }
        Some(BigRational::new(num, den))
    } else {
        let v: num_bigint::BigInt = s.trim().parse().ok()?;
        Some(BigRational::from(v))
    }
}

enum AtSpec {
    Symbolic(Specialization),
    Point(BigRational, BigRational),
}

fn parse_at(s: &str) -> Result<AtSpec, Failure> {
    let items: Vec<&str> = s.split(',').map(str::trim).collect();
    let mut q_zero = false;
    let mut t_zero = false;
    let mut t_eq_q = false;
    let mut qinv = false;
    let mut tinv = false;
    let mut q_num: Option<BigRational> = None;
    let mut t_num: Option<BigRational> = None;
    for item in &items {
        match *item {
            "q=0" => q_zero = true,
            "t=0" => t_zero = true,
            "t=q" => t_eq_q = true,
            "qinv=0" => qinv = true,
            "tinv=0" => tinv = true,
            other => {
                let (var, val) = other.split_once('=').ok_or_else(|| {
                    Failure::usage(format!("cannot parse substitution '{other}'"))
                })?;
                let rat = parse_rational(val)
                    .ok_or_else(|| Failure::usage(format!("cannot parse value '{val}'")))?;
                match var {
                    "q" => q_num = Some(rat),
                    "t" => t_num = Some(rat),
                    _ => return Err(Failure::usage(format!("unknown variable '{var}'"))),
                }
            }
        }
    }
    let numeric = q_num.is_some() || t_num.is_some();
    if numeric {
        if q_zero || t_zero || t_eq_q || qinv || tinv {
            return Err(Failure::usage(
                "numeric evaluation cannot be combined with symbolic substitutions",
            ));
        }
        return match (q_num, t_num) {
            (Some(q), Some(t)) => Ok(AtSpec::Point(q, t)),
            _ => Err(Failure::usage(
                "numeric evaluation needs both q=A/B and t=C/D",
            )),
        };
    }
    if t_eq_q {
        if q_zero || t_zero || qinv || tinv {
            return Err(Failure::usage(
                "t=q cannot be combined with other substitutions",
            ));
        }
        return Ok(AtSpec::Symbolic(Specialization::TEqualsQ));
    }
    if qinv || tinv {
        if q_zero || t_zero {
            return Err(Failure::usage("qinv/tinv cannot be combined with q=0/t=0"));
        }
        let spec = match (qinv, tinv) {
            (true, true) => Specialization::QInvZeroTInvZero,
            (true, false) => Specialization::QInvZero,
            (false, true) => Specialization::TInvZero,
            _ => unreachable!(),
        };
        return Ok(AtSpec::Symbolic(spec));
    }
    let spec = match (q_zero, t_zero) {
        (true, true) => Specialization::QZeroTZero,
        (true, false) => Specialization::QZero,
        (false, true) => Specialization::TZero,
        (false, false) => return Err(Failure::usage("empty --at specification")),
    };
    Ok(AtSpec::Symbolic(spec))
}

fn polynomial_text(p: &XPolynomial) -> String {
    format!("{p}\n")
}

fn terms_text(terms: &[TermRecord], variant: Variant) -> String {
    let mut out = String::new();
    for (i, t) in terms.iter().enumerate() {
        out.push_str(&format!(
            "term {:>2}: T={} x={} maj={} cov={} weight={}\n",
            i + 1,
            t.tableau,
            t.x,
            t.maj,
            t.cov,
            render::text_weight(t, variant)
        ));
    }
    out
}

fn run_compute_e(args: &ComputeEArgs) -> Result<String, Failure> {
    let mu = parse_mu(&args.mu)?;
    let z = parse_z(&args.z, mu.rank())?;
    let variant = match args.variant {
        VariantArg::Pos => Variant::Pos,
        VariantArg::Neg => Variant::Neg,
    };
    let engine = match args.engine {
        EngineArg::Tableaux => Engine::Tableaux,
        EngineArg::Walks => Engine::Walks,
    };
    let query = MacdonaldQuery::new(z.clone(), mu.clone())?
        .with_variant(variant)
        .with_engine(engine)
        .with_budget(args.max_terms);

    if args.terms {
        let (poly, terms) = compute_e_with_terms(&query)?;
        match args.format {
            FormatArg::Text => Ok(format!(
                "{}E = {}",
                terms_text(&terms, variant),
                polynomial_text(&poly)
            )),
            FormatArg::Latex => {
                let mut out = String::new();
                for t in &terms {
                    out.push_str(&render::latex_term(t, variant));
                    out.push('\n');
                }
                Ok(out)
            }
            FormatArg::Json => {
                let mut doc = document::base_document("compute-e");
                doc.insert("mu".into(), json!(mu.parts()));
                doc.insert("z".into(), json!(z.window()));
                doc.insert("variant".into(), json!(variant_name(variant)));
                doc.insert("engine".into(), json!(engine_name(engine)));
                doc.insert(
                    "terms".into(),
                    Value::Array(terms.iter().map(document::term_value).collect()),
                );
                doc.insert("polynomial".into(), document::polynomial_value(&poly));
                Ok(format!("{}\n", Value::Object(doc)))
            }
        }
    } else {
        let poly = compute_e(&query)?;
        match args.format {
            FormatArg::Text => Ok(polynomial_text(&poly)),
            FormatArg::Latex => Ok(format!("{}\n", render::latex_polynomial(&poly))),
            FormatArg::Json => {
                let mut doc = document::base_document("compute-e");
                doc.insert("mu".into(), json!(mu.parts()));
                doc.insert("z".into(), json!(z.window()));
                doc.insert("variant".into(), json!(variant_name(variant)));
                doc.insert("engine".into(), json!(engine_name(engine)));
                doc.insert("polynomial".into(), document::polynomial_value(&poly));
                Ok(format!("{}\n", Value::Object(doc)))
            }
        }
    }
}

fn variant_name(v: Variant) -> &'static str {
    match v {
        Variant::Pos => "pos",
        Variant::Neg => "neg",
    }
}

fn engine_name(e: Engine) -> &'static str {
    match e {
        Engine::Tableaux => "tableaux",
        Engine::Walks => "walks",
    }
}

fn run_compute_p(args: &ComputePArgs) -> Result<String, Failure> {
    let lambda = parse_mu(&args.lambda)?;
    let poly = compute_p(&lambda, args.max_terms)?;
    match args.format {
        FormatArg::Text => Ok(polynomial_text(&poly)),
        FormatArg::Latex => Ok(format!("{}\n", render::latex_polynomial(&poly))),
        FormatArg::Json => {
            let mut doc = document::base_document("compute-p");
            doc.insert("lambda".into(), json!(lambda.parts()));
            doc.insert("polynomial".into(), document::polynomial_value(&poly));
            Ok(format!("{}\n", Value::Object(doc)))
        }
    }
}

fn run_specialize(args: &SpecializeArgs) -> Result<String, Failure> {
    let at = parse_at(&args.at)?;
    let variant = match args.variant {
        VariantArg::Pos => Variant::Pos,
        VariantArg::Neg => Variant::Neg,
    };
    let engine = match args.engine {
        EngineArg::Tableaux => Engine::Tableaux,
        EngineArg::Walks => Engine::Walks,
    };
    let (poly, subject) = match (&args.mu, &args.lambda) {
        (Some(mu), None) => {
            let mu = parse_mu(mu)?;
            let z = parse_z(&args.z, mu.rank())?;
            let query = MacdonaldQuery::new(z, mu)?
                .with_variant(variant)
                .with_engine(engine)
                .with_budget(args.max_terms);
            (compute_e(&query)?, "E")
        }
        (None, Some(lambda)) => {
            let lambda = parse_mu(lambda)?;
            (compute_p(&lambda, args.max_terms)?, "P")
        }
        _ => return Err(Failure::usage("give exactly one of --mu or --lambda")),
    };

    match at {
        AtSpec::Symbolic(spec) => {
            let inverted = matches!(
                spec,
                Specialization::QInvZero
                    | Specialization::TInvZero
                    | Specialization::QInvZeroTInvZero
            );
            let result = specialize(&poly, spec)?;
            match args.format {
                FormatArg::Text => {
                    let mut out = String::new();
                    if inverted {
                        out.push_str("# variables: 1/q, 1/t\n");
                    }
                    out.push_str(&polynomial_text(&result));
                    Ok(out)
                }
                FormatArg::Latex => Ok(format!("{}\n", render::latex_polynomial(&result))),
                FormatArg::Json => {
                    let mut doc = document::base_document("specialize");
                    doc.insert("subject".into(), json!(subject));
                    doc.insert("at".into(), json!(args.at));
                    doc.insert(
                        "variables".into(),
                        json!(if inverted { "qinv,tinv" } else { "q,t" }),
                    );
                    doc.insert("polynomial".into(), document::polynomial_value(&result));
                    Ok(format!("{}\n", Value::Object(doc)))
                }
            }
        }
        AtSpec::Point(q, t) => {
            let values = evaluate_at(&poly, &q, &t)?;
            match args.format {
                FormatArg::Text | FormatArg::Latex => {
                    let mut out = String::new();
                    for (m, v) in values.iter().rev() {
                        out.push_str(&format!("{m}: {v}\n"));
                    }
                    Ok(out)
                }
                FormatArg::Json => {
                    let mut doc = document::base_document("specialize");
                    doc.insert("subject".into(), json!(subject));
                    doc.insert("at".into(), json!(args.at));
                    let vals: Vec<Value> = values
                        .iter()
                        .map(|(m, v)| json!([m.exponents(), v.to_string()]))
                        .collect();
                    doc.insert("evaluations".into(), Value::Array(vals));
                    Ok(format!("{}\n", Value::Object(doc)))
                }
            }
        }
    }
}

fn run_verify(args: &VerifyArgs) -> Result<(String, i32), Failure> {
    let mu = parse_mu(&args.mu)?;
    let z = parse_z(&args.z, mu.rank())?;
    let options = VerifyOptions {
        samples: args.samples,
        seed: args.rng_seed,
        max_terms: args.max_terms,
    };
    let report = verify_identities(&mu, &z, &options)?;
    let code = if report.passed() { 0 } else { 1 };
    let out = match args.format {
        FormatArg::Text | FormatArg::Latex => {
            if report.passed() {
                format!(
                    "{}/{} terms: pos≡neg OK, walk≡tableau OK, parity OK, fold-signs OK{}\n",
                    report.checked,
                    report.total_tableaux,
                    if report.sampled { " (sampled)" } else { "" }
                )
            } else {
                let f = &report.failures[0];
                format!(
                    "FAIL at index {}: check {} on T={}\n{}\n",
                    f.index, f.check, f.tableau, f.detail
                )
            }
        }
        FormatArg::Json => {
            let mut doc = document::base_document("verify");
            doc.insert("mu".into(), json!(mu.parts()));
            doc.insert("z".into(), json!(z.window()));
            doc.insert("total".into(), json!(report.total_tableaux.to_string()));
            doc.insert("checked".into(), json!(report.checked));
            doc.insert("sampled".into(), json!(report.sampled));
            doc.insert("seed".into(), json!(args.rng_seed));
            doc.insert("passed".into(), json!(report.passed()));
            let failures: Vec<Value> = report
                .failures
                .iter()
                .map(|f| {
                    json!({
                        "index": f.index,
                        "tableau": f.tableau,
                        "check": f.check,
                        "detail": f.detail,
                    })
                })
                .collect();
            doc.insert("failures".into(), Value::Array(failures));
            format!("{}\n", Value::Object(doc))
        }
    };
    Ok((out, code))
}

fn run_enumerate(args: &EnumerateArgs) -> Result<String, Failure> {
    let mu = parse_mu(&args.mu)?;
    let count = count_tableaux(&mu);
    if count > num_bigint::BigUint::from(args.max_terms) {
        let bits: u64 = arm_profile(&mu).iter().map(|&(_, u)| u as u64).sum();
        return Err(Failure::from(CoreError::BudgetExceeded(
            format!("2^{bits}"),
            args.max_terms,
        )));
    }
    let profile = arm_profile(&mu);
    let n = num_traits::ToPrimitive::to_u64(&count).expect("within budget");
    let mut out = String::new();
    for i in 0..n {
        let t = tableau_from_index(&mu, &profile, i);
        out.push_str(&document::tableau_value(&t).to_string());
        out.push('\n');
    }
    Ok(out)
}

fn parse_tableau(
    mu: &macdonald_svt::combinatorics::Composition,
    s: &str,
) -> Result<macdonald_svt::tableaux::SetValuedTableau, Failure> {
    use macdonald_svt::combinatorics::BoxCoord;
    let value: Value =
        serde_json::from_str(s).map_err(|e| Failure::usage(format!("bad tableau JSON: {e}")))?;
    let map = value
        .as_object()
        .ok_or_else(|| Failure::usage("tableau must be a JSON object"))?;
    let mut entries = std::collections::BTreeMap::new();
    for (key, list) in map {
        let (r, c) = key
            .split_once(',')
            .and_then(|(r, c)| {
                Some((
                    r.trim().parse::<usize>().ok()?,
                    c.trim().parse::<usize>().ok()?,
                ))
            })
            .ok_or_else(|| Failure::usage(format!("bad box key '{key}'")))?;
        let list = list
            .as_array()
            .ok_or_else(|| Failure::usage(format!("entries of box {key} must be an array")))?;
        let mut ms = Vec::new();
        for v in list {
            let m = v
                .as_u64()
                .ok_or_else(|| Failure::usage(format!("bad entry in box {key}")))?;
            ms.push(m as u32);
        }
        entries.insert(BoxCoord::new(r, c), ms);
    }
    macdonald_svt::tableaux::SetValuedTableau::new(mu.clone(), entries).map_err(Failure::from)
}

fn run_trace(args: &TraceArgs) -> Result<String, Failure> {
    use macdonald_svt::combinatorics::Letter;
    use macdonald_svt::walks::walk_from_tableau;
    let mu = parse_mu(&args.mu)?;
    let z = parse_z(&args.z, mu.rank())?;
    let tableau = parse_tableau(&mu, &args.tableau)?;
    let walk = walk_from_tableau(&z, &tableau)?;

    let word: Vec<Value> = walk
        .word()
        .letters()
        .iter()
        .map(|l| {
            let letter = match l.letter {
                Letter::S(j) => format!("s{j}"),
                Letter::Pi => "pi".into(),
            };
            json!({ "letter": letter, "box": format!("{},{}", l.box_coord.r, l.box_coord.c) })
        })
        .collect();
    let steps: Vec<Value> = walk.steps().iter().map(|p| json!(p.window())).collect();
    let boundaries: Vec<Value> = walk
        .boundary_windows()
        .iter()
        .map(|(b, w)| json!({ "box": format!("{},{}", b.r, b.c), "window": w.window() }))
        .collect();
    let folds: Vec<Value> = walk
        .folds()
        .iter()
        .map(|f| {
            json!({
                "letter": f.letter_index,
                "box": format!("{},{}", f.box_coord.r, f.box_coord.c),
                "entry": f.entry,
                "negative": f.negative,
                "inversion": [f.inversion.i, f.inversion.k],
            })
        })
        .collect();

    let mut doc = document::base_document("trace");
    doc.insert("mu".into(), json!(mu.parts()));
    doc.insert("z".into(), json!(z.window()));
    doc.insert("tableau".into(), document::tableau_value(&tableau));
    doc.insert(
        "crossed".into(),
        Value::Array(walk.crossed().iter().map(|&i| json!(i)).collect()),
    );
    doc.insert("word".into(), Value::Array(word));
    doc.insert("steps".into(), Value::Array(steps));
    doc.insert("boundaries".into(), Value::Array(boundaries));
    doc.insert("folds".into(), Value::Array(folds));
    doc.insert("final".into(), json!(walk.final_window().window()));
    Ok(format!("{}\n", Value::Object(doc)))
}

fn write_output(text: &str, target: &Option<String>) -> Result<(), Failure> {
    match target {
        Some(path) => std::fs::write(path, text).map_err(|e| Failure {
            code: 1,
            message: format!("cannot write {path}: {e}"),
        }),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes()).map_err(|e| Failure {
                code: 1,
                message: format!("cannot write to stdout: {e}"),
            })
        }
    }
}

fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return 0;
        }
        Err(e) => {
            eprint!("{e}");
            return 1;
        }
    };
    let result: Result<(String, i32, Option<String>), Failure> = match &cli.command {
        Command::ComputeE(args) => run_compute_e(args).map(|s| (s, 0, args.output.clone())),
        Command::ComputeP(args) => run_compute_p(args).map(|s| (s, 0, args.output.clone())),
        Command::Specialize(args) => run_specialize(args).map(|s| (s, 0, args.output.clone())),
        Command::Verify(args) => run_verify(args).map(|(s, c)| (s, c, args.output.clone())),
        Command::Enumerate(args) => run_enumerate(args).map(|s| (s, 0, args.output.clone())),
        Command::Trace(args) => run_trace(args).map(|s| (s, 0, args.output.clone())),
    };
    match result {
        Ok((text, code, output)) => {
            if let Err(f) = write_output(&text, &output) {
                eprintln!("error: {}", f.message);
                return f.code;
            }
            code
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}

fn main() {
    std::process::exit(run());
}
