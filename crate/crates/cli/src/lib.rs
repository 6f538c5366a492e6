//! JSON front end: one request in, one response out.
//!
//! A request is `{"v": 1, "command": .., "ring": {..}, "payload": {..}}`; the
//! response is `{"v": 1, "ok": .., "result": .., "diagnostics": [..]}`.
//! Exit codes: 0 ok, 1 domain error, 2 malformed input.

use std::fs;

use clap::Parser;
use serde_json::{json, Value};

use xratio::bundle::Bundle;
use xratio::cross_ratio::{cross_ratio, cross_ratio_with, normalize_triple, orbit_equal, Trivialization};
use xratio::error::Error;
use xratio::json::*;
use xratio::pgl::{dedekind_membership, Membership};
use xratio::point::{delta, strongly_distinct, ProjPoint};
use xratio::ring::{enumerate_prime_ideals, RingDescriptor};
use xratio::zero_scheme::{annihilator_ideal, module_annihilator, vanishing_set, zero_scheme_ideal};

pub const SCHEMA_VERSION: u64 = 1;
pub const DEFAULT_PRIME_BOUND: u64 = 1000;

#[derive(Parser, Debug)]
#[command(name = "xratio", version, about = "Cross-ratios and PGL2 over rings, on JSON requests")]
struct Args {
    /// Read the request from FILE instead of stdin
    #[arg(long, value_name = "FILE")]
    input: Option<String>,
    /// Pretty-print the response
    #[arg(long)]
    pretty: bool,
}

enum Failure {
    Malformed(String),
    Domain(Vec<String>),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::InvalidDescriptor(_) | Error::DimensionMismatch(_) => {
                Failure::Malformed(e.to_string())
            }
            _ => Failure::Domain(vec![e.to_string()]),
        }
    }
}

type Outcome = std::result::Result<Value, Failure>;

fn respond(outcome: Outcome, pretty: bool) -> (i32, String) {
    let (code, body) = match outcome {
        Ok(result) => (0, json!({"v": SCHEMA_VERSION, "ok": true, "result": result, "diagnostics": []})),
        Err(Failure::Domain(diagnostics)) => (
            1,
            json!({"v": SCHEMA_VERSION, "ok": false, "result": null, "diagnostics": diagnostics}),
        ),
        Err(Failure::Malformed(msg)) => (
            2,
            json!({"v": SCHEMA_VERSION, "ok": false, "result": null, "diagnostics": [msg]}),
        ),
    };
    let text = if pretty {
        serde_json::to_string_pretty(&body)
    } else {
        serde_json::to_string(&body)
    }
    .expect("JSON values serialize");
    (code, text + "\n")
}

/// The prime bound from `XRATIO_PRIME_BOUND`, or the default.
pub fn prime_bound_from_env() -> u64 {
    std::env::var("XRATIO_PRIME_BOUND")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_PRIME_BOUND)
}

/// Run the tool on `argv` (including the program name) with `stdin` as input.
pub fn run(argv: &[String], stdin: &str) -> (i32, String) {
    run_with_bound(argv, stdin, prime_bound_from_env())
}

pub fn run_with_bound(argv: &[String], stdin: &str, bound: u64) -> (i32, String) {
    let args = match Args::try_parse_from(argv) {
        Ok(args) => args,
        Err(e) => {
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    (0, e.to_string())
                }
                _ => respond(Err(Failure::Malformed(e.to_string().trim().to_string())), false),
            };
        }
    };
    let text = match &args.input {
        Some(path) => match fs::read_to_string(path) {
            Ok(text) => text,
            Err(e) => return respond(Err(Failure::Malformed(format!("{path}: {e}"))), args.pretty),
        },
        None => stdin.to_string(),
    };
    respond(handle_text(&text, bound), args.pretty)
}

fn handle_text(text: &str, bound: u64) -> Outcome {
    let request: Value =
        serde_json::from_str(text).map_err(|e| Failure::Malformed(format!("invalid JSON: {e}")))?;
    handle(&request, bound)
}

/// Dispatch one parsed request.
fn handle(request: &Value, bound: u64) -> Outcome {
    let map = request
        .as_object()
        .ok_or_else(|| Failure::Malformed("request must be an object".into()))?;
    if let Some(v) = map.get("v") {
        if v.as_u64() != Some(SCHEMA_VERSION) {
            return Err(Failure::Malformed(format!("unsupported schema version {v}")));
        }
    }
    let command = map
        .get("command")
        .and_then(Value::as_str)
        .ok_or_else(|| Failure::Malformed("missing \"command\"".into()))?;
    let ring = parse_ring(
        map.get("ring")
            .ok_or_else(|| Failure::Malformed("missing \"ring\"".into()))?,
    )?;
    let empty = json!({});
    let payload = map.get("payload").unwrap_or(&empty);
    match command {
        "cross-ratio" => cmd_cross_ratio(ring, payload),
        "sd" => cmd_sd(ring, payload),
        "equalizer" => cmd_equalizer(ring, payload, bound),
        "normalize" => cmd_normalize(ring, payload),
        "orbit-equal" => cmd_orbit_equal(ring, payload),
        "act" => cmd_act(ring, payload),
        "pgl-check" => cmd_pgl_check(ring, payload),
        "pic-class" => cmd_pic_class(ring, payload),
        "zero-scheme" => cmd_zero_scheme(ring, payload, bound),
        "factor-ideal" => cmd_factor_ideal(ring, payload),
        other => Err(Failure::Malformed(format!("unknown command \"{other}\""))),
    }
}

fn get<'a>(payload: &'a Value, key: &str) -> std::result::Result<&'a Value, Failure> {
    payload
        .get(key)
        .ok_or_else(|| Failure::Malformed(format!("payload is missing \"{key}\"")))
}

fn points_n<const N: usize>(ring: RingDescriptor, v: &Value) -> std::result::Result<[ProjPoint; N], Failure> {
    let points = parse_points(ring, v)?;
    let count = points.len();
    points
        .try_into()
        .map_err(|_| Failure::Malformed(format!("expected {N} points, got {count}")))
}

fn cmd_cross_ratio(ring: RingDescriptor, payload: &Value) -> Outcome {
    let p: [ProjPoint; 4] = points_n(ring, get(payload, "points")?)?;
    let value = match payload.get("generator") {
        Some(g) => {
            let (bundle, _) = xratio::cross_ratio::common_bundle(&p)?;
            let square = bundle.pow(2);
            let g = parse_element(square.section_ring(), g)?;
            cross_ratio_with(&p, &Trivialization::with_generator(&square, &g)?)?
        }
        None => cross_ratio(&p[0], &p[1], &p[2], &p[3])?,
    };
    Ok(json!({
        "value": element_json(&value.value),
        "trivialization": {
            "bundle_square": bundle_json(&value.trivialization.bundle_square),
            "generator": element_json(&value.trivialization.generator),
        },
    }))
}

fn cmd_sd(ring: RingDescriptor, payload: &Value) -> Outcome {
    let [a, b]: [ProjPoint; 2] = points_n(ring, get(payload, "points")?)?;
    Ok(Value::Bool(strongly_distinct(&a, &b)?))
}

/// Primes of V(I), when the ring's primes can be listed.
fn locus_json(ideal: &xratio::zero_scheme::ZeroSchemeIdeal, bound: u64) -> Value {
    match ideal.zero_locus(Some(bound)) {
        Ok(set) => Value::Array(set.iter().map(prime_json).collect()),
        Err(_) => Value::Null,
    }
}

fn cmd_equalizer(ring: RingDescriptor, payload: &Value, bound: u64) -> Outcome {
    let [a, b]: [ProjPoint; 2] = points_n(ring, get(payload, "points")?)?;
    let d = delta(&a, &b)?;
    let ideal = xratio::point::equalizer_ideal(&a, &b)?;
    Ok(json!({
        "delta": element_json(&d.value),
        "ideal": zero_scheme_ideal_json(&ideal),
        "strongly_distinct": ideal.is_unit_ideal(),
        "locus": locus_json(&ideal, bound),
    }))
}

fn cmd_normalize(ring: RingDescriptor, payload: &Value) -> Outcome {
    let [a, b, c]: [ProjPoint; 3] = points_n(ring, get(payload, "points")?)?;
    Ok(gn_json(&normalize_triple(&a, &b, &c)?))
}

fn cmd_orbit_equal(ring: RingDescriptor, payload: &Value) -> Outcome {
    let x: [ProjPoint; 4] = points_n(ring, get(payload, "x")?)?;
    let y: [ProjPoint; 4] = points_n(ring, get(payload, "y")?)?;
    Ok(match orbit_equal(&x, &y)? {
        Some(gamma) => json!({"equivalent": true, "gamma": gn_json(&gamma)}),
        None => json!({"equivalent": false, "gamma": null}),
    })
}

fn cmd_act(ring: RingDescriptor, payload: &Value) -> Outcome {
    let g = parse_gn(ring, get(payload, "gn")?)?;
    let p = parse_point(ring, get(payload, "point")?)?;
    Ok(point_json(&g.act(&p)?))
}

fn cmd_pgl_check(ring: RingDescriptor, payload: &Value) -> Outcome {
    let a = payload
        .get("A")
        .or_else(|| payload.get("matrix"))
        .ok_or_else(|| Failure::Malformed("payload is missing \"A\"".into()))?;
    let field = ring.fraction_field().ok_or(Error::Unsupported {
        operation: "Dedekind membership",
        ring,
    })?;
    let matrix = parse_matrix(field, a)?;
    Ok(match dedekind_membership(ring, &matrix)? {
        Membership::Member(g) => json!({
            "member": true,
            "gn": gn_json(&g),
            "pic_trivial": g.pic_class()?.is_trivial(),
        }),
        Membership::NotMember { violating_prime } => json!({
            "member": false,
            "violating_prime": violating_prime.to_string(),
        }),
    })
}

fn cmd_pic_class(ring: RingDescriptor, payload: &Value) -> Outcome {
    let ideal = if let Some(g) = payload.get("gn") {
        match parse_gn(ring, g)?.bundle() {
            Bundle::Ideal(ideal) => ideal.clone(),
            Bundle::Trivial(_) => return Ok(json!({"trivial": true, "generator": "1", "representative": "trivial"})),
        }
    } else {
        parse_ideal(ring, get(payload, "ideal")?)?
    };
    let class = ideal.pic_class();
    Ok(json!({
        "trivial": class.is_trivial(),
        "generator": class.generator.as_ref().map(element_json),
        "representative": ideal_json(&class.representative),
    }))
}

fn cmd_zero_scheme(ring: RingDescriptor, payload: &Value, bound: u64) -> Outcome {
    let s = parse_section(ring, get(payload, "section")?)?;
    let ideal = zero_scheme_ideal(&s)?;
    let annihilator = match annihilator_ideal(&s) {
        Ok(a) => a,
        Err(Error::RankTooLarge(_)) => module_annihilator(&s)?,
        Err(e) => return Err(e.into()),
    };
    let vanishing = if enumerate_prime_ideals(ring, Some(bound)).is_ok() {
        match vanishing_set(&s, Some(bound)) {
            Ok(set) => Value::Array(set.iter().map(prime_json).collect()),
            Err(_) => Value::Null,
        }
    } else {
        Value::Null
    };
    Ok(json!({
        "ideal": zero_scheme_ideal_json(&ideal),
        "annihilator": zero_scheme_ideal_json(&annihilator),
        "rank": s.rank(),
        "vanishing": vanishing,
    }))
}

fn cmd_factor_ideal(ring: RingDescriptor, payload: &Value) -> Outcome {
    let ideal = parse_ideal(ring, get(payload, "ideal")?)?;
    let f = ideal.factor()?;
    let norm = ideal.norm();
    Ok(json!({
        "ideal": ideal_json(&ideal),
        "factors": factorization_json(&f),
        "norm": if norm.is_integer() { norm.numer().to_string() } else { format!("{}/{}", norm.numer(), norm.denom()) },
        "principal": ideal.is_principal(),
        "prime": ideal.is_prime(),
    }))
}
