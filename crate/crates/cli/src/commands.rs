use std::fmt::Write as _;
use std::path::Path;

use motivic_core::hilbert::{
    bbs_series, compare, enumerate_plane_partitions, index_of, macmahon_counts, tangent_character, CompareReport,
    CompareStatus, HilbertError,
};
use motivic_core::localization::{localize as localize_sum, strata_from_json, LocalizationError};
use motivic_core::ring::{euler_specialize, parse, weight_specialize, AtomTable, MotivicClass, RingError};
use motivic_core::snc::{SncError, SncModel};
use serde_json::{json, Value};

use crate::RunConfig;

pub struct Output {
    pub text: String,
    pub code: u8,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, code: 0 }
    }
}

pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    fn input(message: impl Into<String>) -> Self {
        CliError { code: 2, message: message.into() }
    }
}

impl From<RingError> for CliError {
    fn from(e: RingError) -> Self {
        let code = match e {
            RingError::UnsupportedSmash { .. } => 3,
            _ => 2,
        };
        CliError { code, message: e.to_string() }
    }
}

impl From<SncError> for CliError {
    fn from(e: SncError) -> Self {
        match e {
            SncError::Ring(r) => r.into(),
            other => CliError::input(other.to_string()),
        }
    }
}

impl From<LocalizationError> for CliError {
    fn from(e: LocalizationError) -> Self {
        match e {
            LocalizationError::Ring(r) => r.into(),
            other => CliError::input(other.to_string()),
        }
    }
}

impl From<HilbertError> for CliError {
    fn from(e: HilbertError) -> Self {
        CliError::input(e.to_string())
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

fn load_table(config: &RunConfig) -> Result<AtomTable, CliError> {
    match &config.atoms {
        Some(p) => Ok(AtomTable::from_json(&read(p)?)?),
        None => Ok(AtomTable::new()),
    }
}

fn shown(config: &RunConfig, x: &MotivicClass) -> String {
    if config.mu2_rewrite {
        x.rewrite_mu2().to_string()
    } else {
        x.to_string()
    }
}

fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn int_value(x: num_bigint::BigInt) -> Value {
    match i64::try_from(&x) {
        Ok(v) => Value::from(v),
        Err(_) => Value::from(x.to_string()),
    }
}

pub fn ring_eval(config: &RunConfig, expr: &str) -> Result<Output, CliError> {
    let table = load_table(config)?;
    let value = parse(expr, &table)?;
    let text = shown(config, &value);
    if config.json {
        let euler = euler_specialize(&value, &table).ok().map(int_value).unwrap_or(Value::Null);
        let weight = weight_specialize(&value, &table).ok().map(|w| Value::from(w.to_string())).unwrap_or(Value::Null);
        return Ok(Output::ok(json_text(&json!({ "class": text, "euler": euler, "weight": weight }))));
    }
    Ok(Output::ok(format!("{text}\n")))
}

pub enum SncOp {
    Integrate(u32),
    Series,
    Volume,
    Nearby,
    Vanishing,
}

pub fn snc(config: &RunConfig, op: SncOp) -> Result<Output, CliError> {
    let table = load_table(config)?;
    let path = config.model.as_deref().ok_or_else(|| CliError::input("snc commands need --model <path>"))?;
    let model = SncModel::from_json(&read(path)?, &table)?;
    let single = |label: &str, x: MotivicClass| -> Output {
        let text = shown(config, &x);
        if config.json {
            Output::ok(json_text(&json!({ "quantity": label, "class": text })))
        } else {
            Output::ok(format!("{text}\n"))
        }
    };
    match op {
        SncOp::Integrate(m) => {
            if m == 0 {
                return Err(CliError::input("--m must be a positive integer"));
            }
            let x = model.integral(m)?;
            if config.json {
                let text = shown(config, &x);
                return Ok(Output::ok(json_text(&json!({ "quantity": "integral", "m": m, "class": text }))));
            }
            Ok(single("integral", x))
        }
        SncOp::Series => {
            let order = config.order.unwrap_or(10);
            let series = model.volume_series()?;
            let coeffs = series.expand(order)?;
            if config.json {
                let summands: Vec<Value> = series
                    .summands
                    .iter()
                    .map(|s| {
                        json!({
                            "J": s.stratum.iter().collect::<Vec<_>>(),
                            "coefficient": shown(config, &s.coefficient),
                            "factors": s.factors.iter().map(|(mu, n)| json!({"mu": mu, "N": n})).collect::<Vec<_>>(),
                        })
                    })
                    .collect();
                let coefficients: Vec<String> = coeffs.iter().map(|c| shown(config, c)).collect();
                return Ok(Output::ok(json_text(&json!({
                    "reldim": series.reldim,
                    "closed_form": series.to_string(),
                    "summands": summands,
                    "order": order,
                    "coefficients": coefficients,
                }))));
            }
            let mut text = format!("S(T) = {series}\n");
            for (m, c) in coeffs.iter().enumerate().skip(1) {
                writeln!(text, "T^{m}: {}", shown(config, c)).unwrap();
            }
            Ok(Output::ok(text))
        }
        SncOp::Volume => Ok(single("volume", model.motivic_volume()?)),
        SncOp::Nearby => Ok(single("nearby", model.nearby_cycle()?)),
        SncOp::Vanishing => Ok(single("vanishing", model.vanishing_cycle()?)),
    }
}

pub fn localize(config: &RunConfig, strata: Option<&Path>) -> Result<Output, CliError> {
    let table = load_table(config)?;
    let path = strata
        .or(config.model.as_deref())
        .ok_or_else(|| CliError::input("localize needs --strata <path>"))?;
    let strata = strata_from_json(&read(path)?, &table)?;
    let sum = localize_sum(&strata);
    let euler = euler_specialize(&sum, &table);
    let text = shown(config, &sum);
    if config.json {
        let euler = euler.ok().map(int_value).unwrap_or(Value::Null);
        return Ok(Output::ok(json_text(&json!({ "class": text, "euler": euler }))));
    }
    let euler_line = match euler {
        Ok(e) => format!("euler: {e}"),
        Err(e) => format!("euler: undefined ({e})"),
    };
    Ok(Output::ok(format!("{text}\n{euler_line}\n")))
}

pub fn dt_zseries(config: &RunConfig) -> Result<Output, CliError> {
    let order = config.order.unwrap_or(8);
    let z = bbs_series(order);
    if config.json {
        let coeffs: Vec<String> = z.iter().map(ToString::to_string).collect();
        return Ok(Output::ok(json_text(&json!({ "order": order, "coefficients": coeffs }))));
    }
    let mut text = String::new();
    for (n, c) in z.iter().enumerate().skip(1) {
        writeln!(text, "T^{n}: {c}").unwrap();
    }
    Ok(Output::ok(text))
}

pub fn dt_count(config: &RunConfig) -> Result<Output, CliError> {
    let order = config.order.unwrap_or(10);
    let mut counts = Vec::with_capacity(order);
    for n in 1..=order {
        counts.push(enumerate_plane_partitions(n)?.len() as u64);
    }
    let macmahon = macmahon_counts(order);
    if counts.iter().zip(&macmahon).any(|(a, b)| num_bigint::BigInt::from(*a) != *b) {
        return Err(CliError { code: 1, message: "enumeration disagrees with the MacMahon expansion".into() });
    }
    if config.json {
        return Ok(Output::ok(json_text(&json!({ "order": order, "counts": counts }))));
    }
    let line: Vec<String> = counts.iter().map(u64::to_string).collect();
    Ok(Output::ok(format!("{}\n", line.join(" "))))
}

fn require_weights(config: &RunConfig) -> Result<[i64; 3], CliError> {
    config.weights.ok_or_else(|| CliError::input("this command needs --weights a,b,c"))
}

pub fn dt_index(config: &RunConfig, n: usize) -> Result<Output, CliError> {
    let w = require_weights(config)?;
    let parts = enumerate_plane_partitions(n)?;
    let mut rows = Vec::with_capacity(parts.len());
    for p in &parts {
        rows.push((p.to_string(), index_of(p, w)?));
    }
    if config.json {
        let v: Vec<Value> = rows.iter().map(|(p, i)| json!({ "partition": p, "index": i })).collect();
        return Ok(Output::ok(json_text(&json!({ "n": n, "weights": w, "indices": v }))));
    }
    let mut text = String::new();
    for (p, i) in rows {
        writeln!(text, "{i} {p}").unwrap();
    }
    Ok(Output::ok(text))
}

pub fn dt_tangent(config: &RunConfig, n: usize) -> Result<Output, CliError> {
    let parts = enumerate_plane_partitions(n)?;
    let mut text = String::new();
    let mut entries = Vec::new();
    for p in &parts {
        let ch = tangent_character(p)?;
        if config.json {
            let weights: Vec<Value> = ch.weights.iter().map(|(w, m)| json!({ "weight": w, "mult": m })).collect();
            entries.push(json!({ "partition": p.to_string(), "dimension": ch.dimension(), "weights": weights }));
        } else {
            writeln!(text, "{} {}", p, ch.dimension()).unwrap();
        }
    }
    if config.json {
        return Ok(Output::ok(json_text(&json!({ "n": n, "points": entries }))));
    }
    Ok(Output::ok(text))
}

fn compare_text(r: &CompareReport) -> String {
    let mut t = String::new();
    let [a, b, c] = r.weights;
    writeln!(t, "order {} weights {a},{b},{c} status {}", r.order, status_name(r.status)).unwrap();
    for row in &r.rows {
        writeln!(t, "n={} {}", row.n, serde_json::to_value(row.status).unwrap().as_str().unwrap()).unwrap();
        writeln!(t, "  product:     {}  [euler {}]", row.bbs, row.bbs_euler).unwrap();
        match (&row.conjecture, row.conjecture_euler) {
            (Some(c), Some(e)) => writeln!(t, "  fixed-point: {c}  [euler {e}]").unwrap(),
            _ => writeln!(t, "  fixed-point: undefined (non-generic weights)").unwrap(),
        }
        let signed = row.signed_partition_sum.map_or("undefined".to_string(), |s| s.to_string());
        writeln!(
            t,
            "  signed partition sum: {signed}; sign (-1)^n at {}/{} points",
            row.sign_matches,
            row.partitions.len()
        )
        .unwrap();
        for p in &row.partitions {
            let index = p.index.map_or("-".to_string(), |i| i.to_string());
            writeln!(
                t,
                "    {} dim {} +{} -{} zero {} index {index}",
                p.partition, p.tangent_dim, p.positive, p.negative, p.zero
            )
            .unwrap();
        }
    }
    t
}

fn status_name(s: CompareStatus) -> &'static str {
    match s {
        CompareStatus::AllEqual => "all_equal",
        CompareStatus::EulerEqualOnly => "euler_equal_only",
        CompareStatus::Differs => "differs",
        CompareStatus::NonGeneric => "non_generic",
    }
}

pub fn dt_compare(config: &RunConfig) -> Result<Output, CliError> {
    let w = require_weights(config)?;
    let order = config.order.unwrap_or(4);
    let report = compare(order, w)?;
    let code = match report.status {
        CompareStatus::AllEqual => 0,
        CompareStatus::EulerEqualOnly => 10,
        CompareStatus::Differs => 11,
        CompareStatus::NonGeneric => 2,
    };
    let text = if config.json {
        json_text(&serde_json::to_value(&report).expect("serializable"))
    } else {
        compare_text(&report)
    };
    Ok(Output { text, code })
}
