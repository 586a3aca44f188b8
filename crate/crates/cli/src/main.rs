//! `isogeny-heights`: batch front end over the library. Each subcommand
//! takes one JSON payload (argument or stdin) and prints one JSON document.
//!
//! Exit codes: 0 success, 2 invalid input, 3 computation failure.

use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rug::ops::Pow;
use rug::{Integer, Rational};
use serde_json::{json, Map, Value};

use isogeny_heights::audit::{corpus_audit, passed, AuditError};
use isogeny_heights::bounds::{
    isogeny_feasibility, BoundCase, BoundError, SEMISTABLE_DEGREE_PRESET,
};
use isogeny_heights::curves::{
    cyclic_subgroup, minimal_model, parse_rational, CurveError, CurvePoint, HeightReport,
    WeierstrassCurveQ,
};
use isogeny_heights::heights::{height_algebraic, AlgebraicNumber, HeightError};
use isogeny_heights::modpoly::{
    height_bound_M, modular_polynomial, poly_height, ModpolyConfig, ModpolyError, DEFAULT_MAX_LEVEL,
};
use isogeny_heights::numerics::{format_float, IntPolynomial, NumericsError};
use isogeny_heights::velu::{velu_height_check, velu_quotient, VeluError};

#[derive(Parser)]
#[command(
    name = "isogeny-heights",
    version,
    about = "Heights of j-invariants, Faltings heights, Velu isogenies and modular polynomials"
)]
struct Cli {
    /// Correct decimal digits for every real output.
    #[arg(
        long,
        global = true,
        env = "ISOGENY_HEIGHTS_DIGITS",
        default_value_t = 40
    )]
    digits: u32,
    #[arg(long, global = true, value_enum, default_value_t = Output::Json)]
    output: Output,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Weil height: {"rational": "p/q"} or {"minpoly": [a0, a1, ...], "root": k}
    Height { payload: Option<String> },
    /// Invariants and heights: {"curve": [a1, a2, a3, a4, a6]}
    Curve { payload: Option<String> },
    /// Quotient by a cyclic subgroup: {"curve": [...], "generator": [x, y], "order": n}
    Velu { payload: Option<String> },
    /// Modular polynomial: {"m": m}
    Phi { payload: Option<String> },
    /// Height-gap test: {"j1": ..., "j2": ..., "d": d, "case": "generic-semistable"}
    CheckIsogeny { payload: Option<String> },
    /// Every inequality suite on the built-in curve corpus
    Audit {
        #[arg(long)]
        corpus: bool,
    },
}

/// A failure with its exit code and a short machine-readable kind.
struct Failure {
    code: u8,
    kind: String,
    message: String,
}

impl Failure {
    fn invalid(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            kind: "InvalidInput".into(),
            message: message.into(),
        }
    }

    fn from_error<E: std::fmt::Debug + std::fmt::Display>(code: u8, e: &E) -> Self {
        Failure {
            code,
            kind: variant_name(e),
            message: e.to_string(),
        }
    }
}

/// `Foo` from the debug form `Foo(..)` / `Foo { .. }`; nested transparent
/// wrappers are unwrapped to the innermost variant.
fn variant_name<E: std::fmt::Debug>(e: &E) -> String {
    let dbg = format!("{e:?}");
    let mut name = dbg.as_str();
    loop {
        let end = name
            .find(|c: char| !c.is_alphanumeric() && c != '_')
            .unwrap_or(name.len());
        let head = &name[..end];
        let rest = &name[end..];
        let wrapper = matches!(head, "Numerics" | "Curve" | "Height" | "Analytic" | "Velu");
        if wrapper && rest.starts_with('(') {
            name = &rest[1..];
            continue;
        }
        return head.to_string();
    }
}

fn numerics_code(e: &NumericsError) -> u8 {
    match e {
        NumericsError::ZeroPolynomial
        | NumericsError::RepeatedRoots
        | NumericsError::DomainError(_) => 2,
        _ => 3,
    }
}

impl From<HeightError> for Failure {
    fn from(e: HeightError) -> Self {
        let code = match &e {
            HeightError::ConstantPolynomial | HeightError::RootIndex { .. } => 2,
            HeightError::Numerics(n) => numerics_code(n),
        };
        Failure::from_error(code, &e)
    }
}

impl From<CurveError> for Failure {
    fn from(e: CurveError) -> Self {
        let code = if matches!(e, CurveError::Parse(_)) {
            2
        } else {
            3
        };
        Failure::from_error(code, &e)
    }
}

impl From<VeluError> for Failure {
    fn from(e: VeluError) -> Self {
        match e {
            VeluError::Curve(c) => c.into(),
            other => Failure::from_error(3, &other),
        }
    }
}

impl From<ModpolyError> for Failure {
    fn from(e: ModpolyError) -> Self {
        let code = match e {
            ModpolyError::InvalidLevel | ModpolyError::LevelTooLarge { .. } => 2,
            _ => 3,
        };
        Failure::from_error(code, &e)
    }
}

impl From<BoundError> for Failure {
    fn from(e: BoundError) -> Self {
        match e {
            BoundError::Height(h) => h.into(),
            other => Failure::from_error(2, &other),
        }
    }
}

impl From<AuditError> for Failure {
    fn from(e: AuditError) -> Self {
        Failure::from_error(3, &e)
    }
}

fn read_payload(arg: Option<String>) -> Result<Value, Failure> {
    let text = match arg.as_deref() {
        None | Some("-") => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::invalid(format!("reading stdin: {e}")))?;
            s
        }
        Some(s) => s.to_string(),
    };
    serde_json::from_str(&text).map_err(|e| Failure::invalid(format!("payload is not JSON: {e}")))
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value, Failure> {
    v.get(key)
        .ok_or_else(|| Failure::invalid(format!("missing field {key:?}")))
}

/// A JSON integer, or a string `p/q`, `p` or `b^e`.
fn rational_of(v: &Value) -> Result<Rational, Failure> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(Rational::from)
            .ok_or_else(|| Failure::invalid(format!("{n} is not an integer"))),
        Value::String(s) => {
            if let Some((b, e)) = s.split_once('^') {
                let base = parse_rational(b)?;
                let e: u32 = e
                    .trim()
                    .parse()
                    .map_err(|_| Failure::invalid(format!("bad exponent in {s:?}")))?;
                let num = Integer::from(base.numer().pow(e));
                let den = Integer::from(base.denom().pow(e));
                Ok(Rational::from((num, den)))
            } else {
                Ok(parse_rational(s)?)
            }
        }
        _ => Err(Failure::invalid(format!("expected a rational, got {v}"))),
    }
}

fn integer_of(v: &Value) -> Result<Integer, Failure> {
    let r = rational_of(v)?;
    if *r.denom() != 1 {
        return Err(Failure::invalid(format!("{r} is not an integer")));
    }
    Ok(r.numer().clone())
}

fn u64_of(v: &Value, what: &str) -> Result<u64, Failure> {
    v.as_u64()
        .ok_or_else(|| Failure::invalid(format!("{what} must be a nonnegative integer")))
}

fn curve_of(v: &Value) -> Result<WeierstrassCurveQ, Failure> {
    let arr = v
        .get("curve")
        .unwrap_or(v)
        .as_array()
        .ok_or_else(|| Failure::invalid("curve must be a list [a1, a2, a3, a4, a6]"))?;
    if arr.len() != 5 {
        return Err(Failure::invalid("curve must have exactly 5 coefficients"));
    }
    let mut a: [Rational; 5] = Default::default();
    for (slot, x) in a.iter_mut().zip(arr) {
        *slot = rational_of(x)?;
    }
    Ok(WeierstrassCurveQ::new(a)?)
}

fn algebraic_of(v: &Value, digits: u32) -> Result<AlgebraicNumber, Failure> {
    if let Some(mp) = v.get("minpoly") {
        let coeffs = mp
            .as_array()
            .ok_or_else(|| {
                Failure::invalid("minpoly must be a list of integers, constant term first")
            })?
            .iter()
            .map(integer_of)
            .collect::<Result<Vec<_>, _>>()?;
        let root = match v.get("root") {
            None => 0,
            Some(r) => u64_of(r, "root")? as usize,
        };
        return Ok(AlgebraicNumber::new(
            IntPolynomial::new(coeffs),
            root,
            digits,
        )?);
    }
    let r = v.get("rational").unwrap_or(v);
    Ok(AlgebraicNumber::from_rational(&rational_of(r)?))
}

fn curve_json(c: &WeierstrassCurveQ) -> Value {
    json!(c.to_strings())
}

fn cmd_height(payload: &Value, digits: u32) -> Result<Value, Failure> {
    if payload.get("rational").is_none() && payload.get("minpoly").is_none() {
        return Err(Failure::invalid(
            "expected {\"rational\": ...} or {\"minpoly\": [...]}",
        ));
    }
    let alpha = algebraic_of(payload, digits)?;
    let h = height_algebraic(&alpha, digits)?;
    Ok(json!({
        "minpoly": alpha.minpoly().coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "root": alpha.root_index(),
        "height": format_float(&h, digits),
    }))
}

fn cmd_curve(payload: &Value, digits: u32) -> Result<Value, Failure> {
    let curve = curve_of(payload)?;
    let min = minimal_model(&curve);
    let report = HeightReport::new(&curve, digits)?;
    let h_j = height_algebraic(&AlgebraicNumber::from_rational(curve.j_invariant()), digits)?;
    Ok(json!({
        "curve": curve_json(&curve),
        "j": curve.j_invariant().to_string(),
        "discriminant": curve.discriminant().to_string(),
        "minimal_model": curve_json(&min.curve),
        "minimal_discriminant": min.discriminant.to_string(),
        "h_j": format_float(&h_j, digits),
        "tau": {
            "re": format_float(&report.tau.tau.re, digits),
            "im": format_float(&report.tau.tau.im, digits),
        },
        "faltings_height": format_float(&report.faltings, digits),
        "h_nu": format_float(&report.h_nu, digits),
    }))
}

fn cmd_velu(payload: &Value, digits: u32) -> Result<Value, Failure> {
    let curve = curve_of(field(payload, "curve")?)?;
    let order = u64_of(field(payload, "order")?, "order")?;
    if order == 0 {
        return Err(Failure::invalid("order must be positive"));
    }
    let generator = match payload.get("generator") {
        None | Some(Value::Null) => CurvePoint::Infinity,
        Some(Value::String(s)) if s == "infinity" => CurvePoint::Infinity,
        Some(Value::Array(xy)) if xy.len() == 2 => {
            CurvePoint::affine(rational_of(&xy[0])?, rational_of(&xy[1])?)
        }
        Some(_) => {
            return Err(Failure::invalid(
                "generator must be [x, y], \"infinity\" or null",
            ))
        }
    };
    let g = cyclic_subgroup(&curve, &generator, order)?;
    let (quotient, _) = velu_quotient(&curve, &g)?;
    let check = velu_height_check(&curve, &g, digits)?;
    let pass = check.pass;
    Ok(json!({
        "curve": curve_json(&curve),
        "order": order,
        "quotient": curve_json(&quotient),
        "j": curve.j_invariant().to_string(),
        "j_quotient": quotient.j_invariant().to_string(),
        "height_check": {
            "h_j": format_float(&check.h_j, digits),
            "h_j_quotient": format_float(&check.h_j_quotient, digits),
            "bound": format_float(&check.bound, digits),
            "margin": format_float(&check.margin(), digits),
            "pass": pass,
        },
    }))
}

fn cmd_phi(payload: &Value, digits: u32) -> Result<Value, Failure> {
    let m = u64_of(field(payload, "m")?, "m")?;
    let max_level = match payload.get("max_level") {
        None => DEFAULT_MAX_LEVEL,
        Some(v) => u64_of(v, "max_level")?,
    };
    let phi = modular_polynomial(m, &ModpolyConfig { max_level })?;
    let h = poly_height(phi.poly(), digits)?;
    let bound = height_bound_M(m);
    let margin = bound - h.to_f64();
    Ok(json!({
        "m": m,
        "degree": phi.degree(),
        "polynomial": phi.to_json(),
        "max_coeff": phi.poly().max_abs_coeff().to_string(),
        "h_inf": format_float(&h, digits),
        "M": format!("{bound:?}"),
        "margin": format!("{margin:?}"),
        "audit": if margin > 0.0 { "pass" } else { "fail" },
    }))
}

fn cmd_check_isogeny(payload: &Value, digits: u32) -> Result<Value, Failure> {
    let j1 = algebraic_of(field(payload, "j1")?, digits)?;
    let j2 = algebraic_of(field(payload, "j2")?, digits)?;
    let d = match payload.get("d") {
        None => SEMISTABLE_DEGREE_PRESET,
        Some(v) => u64_of(v, "d")?,
    };
    let case: BoundCase = match payload.get("case") {
        None => BoundCase::GenericSemistable,
        Some(Value::String(s)) => s.parse()?,
        Some(_) => return Err(Failure::invalid("case must be a string")),
    };
    Ok(isogeny_feasibility(&j1, &j2, d, case, digits)?.to_json(digits))
}

fn cmd_audit(corpus: bool, digits: u32) -> Result<Value, Failure> {
    if !corpus {
        return Err(Failure::invalid("audit needs --corpus"));
    }
    let reports = corpus_audit(digits)?;
    Ok(json!({
        "digits": digits,
        "total": reports.len(),
        "passed": passed(&reports),
        "rows": reports.iter().map(|r| r.to_json(digits)).collect::<Vec<_>>(),
    }))
}

fn text_lines(prefix: &str, v: &Value, out: &mut Vec<String>) {
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                let key = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                text_lines(&key, x, out);
            }
        }
        Value::String(s) => out.push(format!("{prefix}: {s}")),
        Value::Array(items) if items.iter().all(|x| !x.is_object()) => {
            let parts: Vec<String> = items
                .iter()
                .map(|x| match x {
                    Value::String(s) => s.clone(),
                    other => other.to_string(),
                })
                .collect();
            out.push(format!("{prefix}: [{}]", parts.join(", ")));
        }
        Value::Array(items) => {
            for (i, x) in items.iter().enumerate() {
                text_lines(&format!("{prefix}[{i}]"), x, out);
            }
        }
        other => out.push(format!("{prefix}: {other}")),
    }
}

fn audit_table(v: &Value) -> String {
    let mut lines = Vec::new();
    if let Some(rows) = v["rows"].as_array() {
        for r in rows {
            let verdict = r["verdict"].as_str().unwrap_or("?").to_uppercase();
            let label = r["label"].as_str().unwrap_or("?");
            let margin = r["margin"].as_str().unwrap_or("");
            lines.push(format!("{verdict:<5} {label:<32} margin {margin}"));
        }
    }
    lines.push(format!("{} of {} checks pass", v["passed"], v["total"]));
    lines.join("\n")
}

fn render(v: &Value, output: Output, is_audit: bool) -> String {
    match output {
        Output::Json => serde_json::to_string_pretty(v).expect("values serialize"),
        Output::Text if is_audit => audit_table(v),
        Output::Text => {
            let mut lines = Vec::new();
            text_lines("", v, &mut lines);
            lines.join("\n")
        }
    }
}

fn run(cli: Cli) -> Result<(Value, bool), Failure> {
    let digits = cli.digits;
    if digits == 0 {
        return Err(Failure::invalid("--digits must be positive"));
    }
    Ok(match cli.command {
        Command::Height { payload } => (cmd_height(&read_payload(payload)?, digits)?, false),
        Command::Curve { payload } => (cmd_curve(&read_payload(payload)?, digits)?, false),
        Command::Velu { payload } => (cmd_velu(&read_payload(payload)?, digits)?, false),
        Command::Phi { payload } => (cmd_phi(&read_payload(payload)?, digits)?, false),
        Command::CheckIsogeny { payload } => {
            (cmd_check_isogeny(&read_payload(payload)?, digits)?, false)
        }
        Command::Audit { corpus } => (cmd_audit(corpus, digits)?, true),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let output = cli.output;
    match run(cli) {
        Ok((v, is_audit)) => {
            println!("{}", render(&v, output, is_audit));
            ExitCode::SUCCESS
        }
        Err(f) => {
            let mut err = Map::new();
            err.insert("error".into(), f.kind.into());
            err.insert("message".into(), f.message.clone().into());
            match output {
                Output::Json => eprintln!("{}", Value::Object(err)),
                Output::Text => eprintln!("error: {}", f.message),
            }
            ExitCode::from(f.code)
        }
    }
}
