//! Batch drivers and machine-readable reports: the pieces the CLI wraps.
//!
//! Every run echoes its configuration and seed; exact paths are bit-for-bit
//! reproducible under a fixed seed, and batch rows derive per-row seeds from
//! the master seed by a splitmix step so concurrent execution stays
//! deterministic.

use std::time::Instant;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::algebra::{
    cyclic_group_algebra, group_algebra_labeled, matrix_algebra, AlgebraElement, AlgebraError,
    FiniteBanachAlgebra,
};
use crate::seminorms::{
    translation_commutator_check, verify_913, BilinearForm, IneqCheck, IneqMode, Prop913Report,
    SearchOptions,
};
use crate::torus;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("cannot parse {path}: {message}")]
    Parse { path: String, message: String },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("invalid config: {0}")]
    Invalid(String),
}

/// Algebra description file: `{"kind":"cyclic","order":m}`,
/// `{"kind":"table","labels":[...],"table":[[...]]}` or
/// `{"kind":"matrix","n":k}`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum AlgebraSpec {
    Cyclic { order: usize },
    Table { labels: Vec<String>, table: Vec<Vec<usize>> },
    Matrix { n: usize },
}

impl AlgebraSpec {
    pub fn build(&self) -> Result<FiniteBanachAlgebra, AlgebraError> {
        match self {
            AlgebraSpec::Cyclic { order } => cyclic_group_algebra(*order),
            AlgebraSpec::Table { labels, table } => group_algebra_labeled(table, labels.clone()),
            AlgebraSpec::Matrix { n } => matrix_algebra(*n),
        }
    }

    pub fn parse_file(path: &str) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path)
            .map_err(|source| ConfigError::Io { path: path.into(), source })?;
        serde_json::from_str(&text)
            .map_err(|e| ConfigError::Parse { path: path.into(), message: e.to_string() })
    }
}

/// Functional source: an explicit matrix of `[re, im]` pairs, or
/// `{"random": {"seed": s, "scale": r}}`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum PhiSource {
    Random { random: RandomPhi },
    Explicit(Vec<Vec<[f64; 2]>>),
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize, PartialEq)]
pub struct RandomPhi {
    pub seed: u64,
    pub scale: f64,
}

impl PhiSource {
    pub fn build(&self, dim: usize) -> Result<BilinearForm, ConfigError> {
        match self {
            PhiSource::Random { random } => Ok(BilinearForm::random(dim, random.scale, random.seed)),
            PhiSource::Explicit(rows) => {
                if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
                    return Err(ConfigError::Invalid(format!(
                        "functional matrix must be {dim} x {dim}"
                    )));
                }
                let values = nalgebra::DMatrix::from_fn(dim, dim, |j, k| {
                    Complex64::new(rows[j][k][0], rows[j][k][1])
                });
                Ok(BilinearForm::new(values))
            }
        }
    }

    pub fn parse_file(path: &str) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path)
            .map_err(|source| ConfigError::Io { path: path.into(), source })?;
        serde_json::from_str(&text)
            .map_err(|e| ConfigError::Parse { path: path.into(), message: e.to_string() })
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunConfig {
    pub algebra: AlgebraSpec,
    pub phi: PhiSource,
    pub seed: u64,
    pub restarts: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunReport {
    pub schema_version: String,
    pub tool_version: String,
    pub config: RunConfig,
    pub prop_913: Prop913Report,
    /// Group algebras only: max translation-commutator defect over all
    /// group elements with point-mass arguments, against `kappa * zp`.
    pub translation_check: Option<IneqCheck>,
    /// `|phi|_b <= kappa |phi|_zp`, asserted on exact paths.
    pub kappa_check: Option<IneqCheck>,
    pub elapsed_ms: f64,
    pub all_pass: bool,
}

/// Runs the seminorm suite on one (algebra, functional) pair.
pub fn analyze(config: &RunConfig) -> Result<RunReport, ConfigError> {
    let start = Instant::now();
    let alg = config.algebra.build()?;
    let phi = config.phi.build(alg.dim)?;
    let opts = SearchOptions { restarts: config.restarts, seed: config.seed };
    let prop_913 = verify_913(&phi, &alg, &opts).map_err(ConfigError::Algebra)?;

    let kappa = torus::kappa();
    let exact_pair = prop_913.b.is_exact && prop_913.zp.is_exact;
    let kappa_check = Some(IneqCheck {
        name: "b-le-kappa-zp".into(),
        lhs: prop_913.b.value,
        rhs: kappa * prop_913.zp.value,
        tolerance: 1e-9,
        mode: if exact_pair { IneqMode::Exact } else { IneqMode::Informative },
        pass: if exact_pair {
            prop_913.b.value <= kappa * prop_913.zp.value + 1e-9
        } else {
            true
        },
        witness_note: "translation-commutator constant bound".into(),
    });

    let translation_check = if alg.as_group_table().is_some() {
        let e = AlgebraElement::basis(alg.dim, alg.as_group_table().unwrap().identity);
        let mut worst = 0.0f64;
        for t in 0..alg.dim {
            let rep = translation_commutator_check(&phi, &alg, t, &e, &e, &opts)
                .map_err(ConfigError::Algebra)?;
            worst = worst.max(rep.defect);
        }
        let rhs = kappa * prop_913.zp.value;
        Some(IneqCheck {
            name: "translation-defect-le-kappa-zp".into(),
            lhs: worst,
            rhs,
            tolerance: 1e-9,
            mode: if prop_913.zp.is_exact { IneqMode::Exact } else { IneqMode::Informative },
            pass: if prop_913.zp.is_exact { worst <= rhs + 1e-9 } else { true },
            witness_note: "max over group elements, point-mass arguments".into(),
        })
    } else {
        None
    };

    let all_pass = prop_913.all_pass
        && kappa_check.as_ref().map_or(true, |c| c.pass)
        && translation_check.as_ref().map_or(true, |c| c.pass);
    Ok(RunReport {
        schema_version: SCHEMA_VERSION.into(),
        tool_version: env!("CARGO_PKG_VERSION").into(),
        config: config.clone(),
        prop_913,
        translation_check,
        kappa_check,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
        all_pass,
    })
}

/// One CSV row of a batch run.
#[derive(Debug, Clone, Serialize)]
pub struct BatchRow {
    pub seed: u64,
    pub norm: f64,
    pub b: f64,
    pub zp: f64,
    pub dist: f64,
    pub p913_pass: bool,
}

/// Derives the per-row seed from the master seed (splitmix64 step).
pub fn row_seed(master: u64, row: usize) -> u64 {
    let mut z = master.wrapping_add((row as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Runs `count` random functionals on one algebra; rows execute in parallel
/// with per-row seeds, so the output is deterministic under the master seed.
pub fn batch(
    spec: &AlgebraSpec,
    count: usize,
    master_seed: u64,
    scale: f64,
    restarts: usize,
) -> Result<Vec<BatchRow>, ConfigError> {
    use rayon::prelude::*;
    if count == 0 {
        return Err(ConfigError::Invalid("count must be >= 1".into()));
    }
    let alg = spec.build()?;
    let rows: Result<Vec<BatchRow>, ConfigError> = (0..count)
        .into_par_iter()
        .map(|i| {
            let seed = row_seed(master_seed, i);
            let phi = BilinearForm::random(alg.dim, scale, seed);
            let opts = SearchOptions { restarts, seed };
            let rep = verify_913(&phi, &alg, &opts).map_err(ConfigError::Algebra)?;
            Ok(BatchRow {
                seed,
                norm: rep.norm.value,
                b: rep.b.value,
                zp: rep.zp.value,
                dist: rep.dist.value,
                p913_pass: rep.all_pass,
            })
        })
        .collect();
    rows
}

pub fn batch_csv(rows: &[BatchRow]) -> String {
    let mut out = String::from("seed,norm,b,zp,dist,p913_pass\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            r.seed,
            fmt_f64(r.norm),
            fmt_f64(r.b),
            fmt_f64(r.zp),
            fmt_f64(r.dist),
            r.p913_pass
        ));
    }
    out
}

/// 17 significant digits, enough to round-trip any f64.
pub fn fmt_f64(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        format!("\"{x}\"")
    }
}

/// Renders a JSON value with every float printed to 17 significant digits.
pub fn to_json_17(value: &Value) -> String {
    let mut out = String::new();
    write_value(value, 0, &mut out);
    out
}

fn write_value(value: &Value, indent: usize, out: &mut String) {
    match value {
        Value::Null => out.push_str("null"),
        Value::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                out.push_str(&i.to_string());
            } else if let Some(u) = n.as_u64() {
                out.push_str(&u.to_string());
            } else {
                out.push_str(&fmt_f64(n.as_f64().unwrap_or(f64::NAN)));
            }
        }
        Value::String(s) => out.push_str(&serde_json::to_string(s).expect("string escapes")),
        Value::Array(items) => {
            if items.is_empty() {
                out.push_str("[]");
                return;
            }
            out.push('[');
            for (i, item) in items.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                out.push('\n');
                push_indent(indent + 1, out);
                write_value(item, indent + 1, out);
            }
            out.push('\n');
            push_indent(indent, out);
            out.push(']');
        }
        Value::Object(map) => {
            if map.is_empty() {
                out.push_str("{}");
                return;
            }
            out.push('{');
            for (i, (k, v)) in map.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                out.push('\n');
                push_indent(indent + 1, out);
                out.push_str(&serde_json::to_string(k).expect("key escapes"));
                out.push_str(": ");
                write_value(v, indent + 1, out);
            }
            out.push('\n');
            push_indent(indent, out);
            out.push('}');
        }
    }
}

fn push_indent(indent: usize, out: &mut String) {
    for _ in 0..indent {
        out.push_str("  ");
    }
}
