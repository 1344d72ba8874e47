//! Suite configuration, loaded from TOML.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use dickson_core::identity::{
    Acceptance, Conventions, IdentityId, Symbol, T7Exponent, T8Sign, TruncationMode, TruncationPolicy,
};
use dickson_core::Complex64;
use serde::Deserialize;

use crate::error::HarnessError;
use crate::parse::parse_complex;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sampling {
    /// Independent uniform draws from the parameter boxes.
    Random,
    /// Deterministic Weyl sequence through the boxes.
    Grid,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Csv,
}

/// A complex literal written either as a TOML number or as a string such as `"0.5+0.2i"` or `"1/4"`.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum ComplexLiteral {
    Number(f64),
    Text(String),
}

impl ComplexLiteral {
    pub fn value(&self) -> Result<Complex64, HarnessError> {
        match self {
            Self::Number(x) => Ok(Complex64::new(*x, 0.0)),
            Self::Text(s) => parse_complex(s),
        }
    }
}

/// Axis-aligned box for one complex parameter.
#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Region {
    pub re: [f64; 2],
    #[serde(default)]
    pub im: [f64; 2],
}

impl Region {
    pub const fn new(re: [f64; 2], im: [f64; 2]) -> Self {
        Self { re, im }
    }

    fn validate(&self) -> bool {
        self.re[0] <= self.re[1] && self.im[0] <= self.im[1] && self.re.iter().chain(&self.im).all(|v| v.is_finite())
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolicyConfig {
    pub mode: String,
    #[serde(default = "default_max_n")]
    pub max_n: usize,
    #[serde(default = "default_tol")]
    pub tol: f64,
}

fn default_max_n() -> usize {
    400
}

fn default_tol() -> f64 {
    1e-16
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCase {
    id: String,
    #[serde(default = "default_sampling")]
    sampling: Sampling,
    #[serde(default = "default_count")]
    count: usize,
    #[serde(default)]
    k: Vec<ComplexLiteral>,
    policy: Option<PolicyConfig>,
    #[serde(default)]
    region: BTreeMap<String, Region>,
    #[serde(default)]
    fixed: BTreeMap<String, ComplexLiteral>,
    t7_exponent: Option<String>,
    t8_sign: Option<String>,
}

fn default_sampling() -> Sampling {
    Sampling::Random
}

fn default_count() -> usize {
    1
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTolerances {
    terminating: f64,
    convergent: f64,
    asymptotic_factor: f64,
    #[serde(default = "default_floor")]
    asymptotic_floor: f64,
}

fn default_floor() -> f64 {
    1e-8
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawOutput {
    format: OutputFormat,
    path: PathBuf,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSuite {
    seed: u64,
    cases: Vec<RawCase>,
    tolerances: RawTolerances,
    output: RawOutput,
}

/// One validated case entry of a suite.
#[derive(Debug, Clone)]
pub struct CaseConfig {
    pub id: IdentityId,
    pub sampling: Sampling,
    pub count: usize,
    /// Values of `k` to sweep; each gets `count` draws. Empty means `k` is sampled or absent.
    pub k: Vec<Complex64>,
    /// `None` selects the regime's default policy.
    pub policy: Option<TruncationPolicy<f64>>,
    pub region: BTreeMap<Symbol, Region>,
    pub fixed: BTreeMap<Symbol, Complex64>,
    pub conventions: Conventions,
}

#[derive(Debug, Clone)]
pub struct OutputConfig {
    pub format: OutputFormat,
    pub path: PathBuf,
}

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub seed: u64,
    pub cases: Vec<CaseConfig>,
    pub tolerances: Acceptance<f64>,
    pub output: OutputConfig,
}

fn invalid(msg: impl Into<String>) -> HarnessError {
    HarnessError::Config(msg.into())
}

fn symbol_map<V, W>(
    id: IdentityId,
    raw: &BTreeMap<String, V>,
    mut f: impl FnMut(&V) -> Result<W, HarnessError>,
) -> Result<BTreeMap<Symbol, W>, HarnessError> {
    let mut out = BTreeMap::new();
    for (name, v) in raw {
        let sym: Symbol = name.parse().map_err(|_| invalid(format!("case {id}: unknown parameter {name:?}")))?;
        if !id.signature().contains(&sym) {
            return Err(invalid(format!("case {id}: {id} does not take parameter {name}")));
        }
        out.insert(sym, f(v)?);
    }
    Ok(out)
}

impl CaseConfig {
    fn from_raw(raw: RawCase) -> Result<Self, HarnessError> {
        let id: IdentityId = raw.id.parse().map_err(|_| invalid(format!("unknown case id {:?}", raw.id)))?;
        if raw.count < 1 {
            return Err(invalid(format!("case {id}: count must be at least 1")));
        }
        let k = raw.k.iter().map(ComplexLiteral::value).collect::<Result<Vec<_>, _>>()?;
        if !k.is_empty() && !id.signature().contains(&Symbol::K) {
            return Err(invalid(format!("case {id}: {id} does not take parameter k")));
        }
        let policy = match raw.policy {
            None => None,
            Some(p) => {
                let mode = TruncationMode::parse(&p.mode)
                    .ok_or_else(|| invalid(format!("case {id}: unknown policy mode {:?}", p.mode)))?;
                Some(TruncationPolicy::new(mode, p.max_n, p.tol).map_err(|e| invalid(format!("case {id}: {e}")))?)
            }
        };
        let region = symbol_map(id, &raw.region, |r: &Region| {
            if r.validate() {
                Ok(*r)
            } else {
                Err(invalid(format!("case {id}: malformed region {r:?}")))
            }
        })?;
        let fixed = symbol_map(id, &raw.fixed, ComplexLiteral::value)?;
        if !k.is_empty() && fixed.contains_key(&Symbol::K) {
            return Err(invalid(format!("case {id}: k given both as a sweep and as fixed")));
        }
        let mut conventions = Conventions::default();
        if let Some(s) = raw.t7_exponent {
            conventions.t7_exponent =
                T7Exponent::parse(&s).ok_or_else(|| invalid(format!("case {id}: unknown t7_exponent {s:?}")))?;
        }
        if let Some(s) = raw.t8_sign {
            conventions.t8_sign =
                T8Sign::parse(&s).ok_or_else(|| invalid(format!("case {id}: unknown t8_sign {s:?}")))?;
        }
        Ok(Self { id, sampling: raw.sampling, count: raw.count, k, policy, region, fixed, conventions })
    }
}

impl SuiteConfig {
    pub fn from_toml(text: &str) -> Result<Self, HarnessError> {
        let raw: RawSuite = toml::from_str(text).map_err(|e| invalid(e.to_string()))?;
        let t = raw.tolerances;
        for (name, v) in [
            ("terminating", t.terminating),
            ("convergent", t.convergent),
            ("asymptotic_factor", t.asymptotic_factor),
            ("asymptotic_floor", t.asymptotic_floor),
        ] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(invalid(format!("tolerance {name} must be positive")));
            }
        }
        if raw.cases.is_empty() {
            return Err(invalid("suite has no cases"));
        }
        let cases = raw.cases.into_iter().map(CaseConfig::from_raw).collect::<Result<Vec<_>, _>>()?;
        Ok(Self {
            seed: raw.seed,
            cases,
            tolerances: Acceptance {
                terminating: t.terminating,
                convergent: t.convergent,
                asymptotic_factor: t.asymptotic_factor,
                asymptotic_floor: t.asymptotic_floor,
            },
            output: OutputConfig { format: raw.output.format, path: raw.output.path },
        })
    }

    pub fn load(path: &Path) -> Result<Self, HarnessError> {
        let text = std::fs::read_to_string(path).map_err(|e| invalid(format!("{}: {e}", path.display())))?;
        Self::from_toml(&text)
    }
}
