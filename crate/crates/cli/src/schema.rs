//! Strict input documents. Unknown fields are rejected everywhere.

use std::str::FromStr;

use serde::Deserialize;

use cohint::poly::Poly;
use cohint::quiverbps::QuiverSpec;
use cohint::repsym::WeightMultiset;
use cohint::rootdata::{CartanType, FactorSpec, GroupSpec, Isogeny, RootDatum};
use cohint::Rat;

use crate::CliError;

pub const SCHEMA: &str = "cohint/1";

/// Largest lattice rank accepted on the command line.
pub const MAX_RANK: usize = 8;

fn check_schema(schema: &Option<String>) -> Result<(), CliError> {
    match schema.as_deref() {
        None | Some(SCHEMA) => Ok(()),
        Some(other) => Err(CliError::Invalid(format!("unsupported schema `{other}`, expected `{SCHEMA}`"))),
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorDoc {
    #[serde(rename = "type")]
    pub kind: String,
    pub rank: usize,
    #[serde(default = "default_isogeny")]
    pub isogeny: String,
}

fn default_isogeny() -> String {
    "sc".into()
}

/// Either `{"gl": n}` or a list of simple factors plus a central torus.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupDoc {
    #[serde(default)]
    pub gl: Option<usize>,
    #[serde(default)]
    pub factors: Vec<FactorDoc>,
    #[serde(default)]
    pub central_torus: usize,
}

impl GroupDoc {
    pub fn spec(&self) -> Result<GroupSpec, CliError> {
        if let Some(n) = self.gl {
            if !self.factors.is_empty() || self.central_torus != 0 {
                return Err(CliError::Invalid("`gl` excludes `factors` and `central_torus`".into()));
            }
            if n == 0 {
                return Err(CliError::Invalid("GL_0 is not a group here".into()));
            }
            return Ok(GroupSpec::gl(n));
        }
        let factors = self
            .factors
            .iter()
            .map(|f| Ok(FactorSpec::new(CartanType::from_str(&f.kind)?, f.rank, Isogeny::from_str(&f.isogeny)?)))
            .collect::<Result<Vec<_>, cohint::Error>>()?;
        Ok(GroupSpec { factors, central_torus: self.central_torus })
    }

    pub fn root_datum(&self) -> Result<RootDatum, CliError> {
        let rd = RootDatum::new(&self.spec()?)?;
        if rd.rank() > MAX_RANK {
            return Err(CliError::Invalid(format!("lattice rank {} exceeds {MAX_RANK}", rd.rank())));
        }
        Ok(rd)
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WeightDoc {
    pub covector: Vec<i64>,
    #[serde(default = "one")]
    pub mult: i64,
}

fn one() -> i64 {
    1
}

pub fn weights(rank: usize, docs: &[WeightDoc]) -> Result<WeightMultiset, CliError> {
    let mut v = WeightMultiset::new(rank);
    for w in docs {
        if w.covector.len() != rank {
            return Err(CliError::Invalid(format!("weight {:?} does not have {rank} entries", w.covector)));
        }
        v.add(w.covector.clone(), w.mult);
    }
    Ok(v)
}

pub fn parse_rat(s: &str) -> Result<Rat, CliError> {
    Rat::from_str(s.trim()).map_err(|_| CliError::Invalid(format!("`{s}` is not a rational number p/q")))
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepDoc {
    #[serde(default)]
    pub schema: Option<String>,
    pub group: GroupDoc,
    #[serde(default)]
    pub weights: Vec<WeightDoc>,
}

impl RepDoc {
    pub fn load(raw: &str) -> Result<(RootDatum, WeightMultiset), CliError> {
        let doc: RepDoc = parse(raw)?;
        check_schema(&doc.schema)?;
        let rd = doc.group.root_datum()?;
        let v = weights(rd.rank(), &doc.weights)?;
        Ok((rd, v))
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDoc {
    pub exp: Vec<u32>,
    pub coeff: String,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BatteryDoc {
    pub polynomials: usize,
    #[serde(default = "default_battery_degree")]
    pub max_degree: u32,
}

fn default_battery_degree() -> u32 {
    6
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CohiDoc {
    #[serde(default)]
    pub schema: Option<String>,
    pub group: GroupDoc,
    #[serde(default)]
    pub weights: Vec<WeightDoc>,
    /// Integer vectors spanning the face; the whole space when absent.
    #[serde(default)]
    pub face: Option<Vec<Vec<i64>>>,
    /// A point of the chamber, as rational strings; the first chamber when absent.
    #[serde(default)]
    pub chamber: Option<Vec<String>>,
    #[serde(default)]
    pub polynomial: Vec<TermDoc>,
    /// Check chamber independence with the sign `(-1)^d`.
    #[serde(default)]
    pub symmetric: bool,
    #[serde(default)]
    pub battery: Option<BatteryDoc>,
}

impl CohiDoc {
    pub fn load(raw: &str) -> Result<Self, CliError> {
        let doc: CohiDoc = parse(raw)?;
        check_schema(&doc.schema)?;
        Ok(doc)
    }

    pub fn polynomial(&self, n: usize) -> Result<Poly, CliError> {
        let mut terms = Vec::new();
        for t in &self.polynomial {
            if t.exp.len() != n {
                return Err(CliError::Invalid(format!("exponent {:?} does not have {n} entries", t.exp)));
            }
            terms.push((t.exp.clone(), parse_rat(&t.coeff)?));
        }
        Ok(Poly::from_terms(n, terms))
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BgDoc {
    #[serde(default)]
    pub schema: Option<String>,
    pub group: GroupDoc,
    pub degree_bound: u32,
}

impl BgDoc {
    pub fn load(raw: &str) -> Result<Self, CliError> {
        let doc: BgDoc = parse(raw)?;
        check_schema(&doc.schema)?;
        Ok(doc)
    }
}

/// Either an adjacency matrix or a vertex count with an arrow list.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuiverDoc {
    #[serde(default)]
    pub schema: Option<String>,
    #[serde(default)]
    pub vertices: Option<usize>,
    #[serde(default)]
    pub arrows: Option<Vec<(usize, usize)>>,
    #[serde(default)]
    pub adjacency: Option<Vec<Vec<u32>>>,
}

impl QuiverDoc {
    pub fn load(raw: &str) -> Result<QuiverSpec, CliError> {
        let doc: QuiverDoc = parse(raw)?;
        check_schema(&doc.schema)?;
        let q = match (doc.vertices, doc.arrows, doc.adjacency) {
            (Some(n), arrows, None) => QuiverSpec::from_arrows(n, &arrows.unwrap_or_default())?,
            (None, None, Some(a)) => QuiverSpec::new(a)?,
            _ => return Err(CliError::Invalid("give either `vertices` with `arrows`, or `adjacency`".into())),
        };
        if q.vertices() > 4 {
            return Err(CliError::Invalid(format!("{} vertices exceed the limit of 4", q.vertices())));
        }
        Ok(q)
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BunDoc {
    #[serde(default)]
    pub schema: Option<String>,
    pub r: i64,
    pub d: i64,
    pub g: i64,
    #[serde(rename = "N")]
    pub n: i64,
}

pub const MAX_BUN_RANK: i64 = 4;
pub const MAX_BUN_ORDER: i64 = 120;

impl BunDoc {
    pub fn load(raw: &str) -> Result<Self, CliError> {
        let doc: BunDoc = parse(raw)?;
        check_schema(&doc.schema)?;
        if !(1..=MAX_BUN_RANK).contains(&doc.r) {
            return Err(CliError::Invalid(format!("rank must lie in 1..={MAX_BUN_RANK}")));
        }
        if doc.g < 0 || !(0..=MAX_BUN_ORDER).contains(&doc.n) {
            return Err(CliError::Invalid(format!("need g ≥ 0 and 0 ≤ N ≤ {MAX_BUN_ORDER}")));
        }
        Ok(doc)
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GoldenDoc {
    #[serde(default)]
    pub schema: Option<String>,
    /// `γ` (as a comma-separated string) to `[[half_power, "coeff"], ...]`.
    pub omega: std::collections::BTreeMap<String, Vec<(i64, String)>>,
}

impl GoldenDoc {
    pub fn load(raw: &str) -> Result<Self, CliError> {
        let doc: GoldenDoc = parse(raw)?;
        check_schema(&doc.schema)?;
        Ok(doc)
    }
}

fn parse<T: for<'de> Deserialize<'de>>(raw: &str) -> Result<T, CliError> {
    serde_json::from_str(raw).map_err(|e| CliError::Invalid(format!("malformed input: {e}")))
}
