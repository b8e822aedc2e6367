//! Tables of exact values (from search) and upper bounds (from constructions),
//! with finite-sample ratio columns.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize, Serializer};

use super::{lambda_with, SearchError};
use crate::constructions::{construct, Step};
use crate::par::{map_ordered, Execution};

/// A single value or an inclusive `[lo, hi]` range.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Span {
    One(i64),
    Range([i64; 2]),
}

impl Span {
    fn values(self) -> impl Iterator<Item = i64> {
        let (lo, hi) = match self {
            Span::One(x) => (x, x),
            Span::Range([a, b]) => (a, b),
        };
        lo..=hi
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactRequest {
    pub n: Span,
    pub d: Span,
    pub max_vertices: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructedRequest {
    pub n: Span,
    pub d: Span,
}

/// Input of [`lambda_table`], usually read from a JSON file.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableSpec {
    #[serde(default)]
    pub exact: Vec<ExactRequest>,
    #[serde(default)]
    pub constructed: Vec<ConstructedRequest>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RowKind {
    /// Minimal by exhaustive search.
    Exact,
    /// Search budget exhausted without a witness.
    NotFoundWithinBudget,
    /// Constructed, and equal to a value known to be minimal.
    KnownExact,
    /// Constructed; only an upper bound.
    UpperBound,
}

/// Exact fraction, serialized as `"num/den"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ratio {
    pub num: u64,
    pub den: u64,
}

impl Ratio {
    pub fn new(num: u64, den: u64) -> Self {
        let g = gcd(num, den).max(1);
        Self {
            num: num / g,
            den: den / g,
        }
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl std::fmt::Display for Ratio {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        // three decimals, rounded half up, in integer arithmetic
        let scaled = (self.num * 2000 / self.den).div_ceil(2);
        write!(f, "{}.{:03}", scaled / 1000, scaled % 1000)
    }
}

impl Serialize for Ratio {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format!("{}/{}", self.num, self.den))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LambdaRow {
    pub n: usize,
    pub d: i64,
    pub lambda: Option<usize>,
    pub kind: RowKind,
    /// Where the value comes from.
    pub witness: String,
    /// `lambda / |d|`.
    pub ratio_d: Option<Ratio>,
    /// `lambda / n`.
    pub ratio_n: Option<Ratio>,
}

/// Finite-sample ratio taken from one table row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RatioEstimate {
    pub fixed: i64,
    pub at: i64,
    pub ratio: Ratio,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LambdaTable {
    pub rows: Vec<LambdaRow>,
    /// Per n: `lambda / |d|` at the largest `|d|` in the table.
    pub alpha_estimates: Vec<RatioEstimate>,
    /// Per d: `lambda / n` at the largest `n` in the table.
    pub beta_estimates: Vec<RatioEstimate>,
}

/// Values of the minimal vertex count established in the literature for the
/// given `(n, d)`, if any.
pub fn known_lambda(n: usize, d: i64) -> Option<usize> {
    let m = d.unsigned_abs() as usize;
    match (n, m) {
        (0, _) => None,
        (_, 0) | (_, 1) => Some(n + 2),
        (1, _) => Some(3 * m),
        (_, 2..=4) if n + 1 >= m => Some(n + m + 3),
        (2, _) => Some(2 * m + 2),
        _ => None,
    }
}

fn row(n: usize, d: i64, lambda: Option<usize>, kind: RowKind, witness: String) -> LambdaRow {
    let m = d.unsigned_abs();
    LambdaRow {
        n,
        d,
        lambda,
        kind,
        witness,
        ratio_d: lambda.filter(|_| m > 0).map(|v| Ratio::new(v as u64, m)),
        ratio_n: lambda
            .filter(|_| n > 0)
            .map(|v| Ratio::new(v as u64, n as u64)),
    }
}

fn recipe_summary(steps: &[Step]) -> String {
    let seed = match steps.first() {
        Some(Step::BoundarySimplex { n }) => format!("boundary_simplex({n})"),
        Some(Step::CyclicCircle { d }) => format!("cyclic_circle({d})"),
        Some(Step::ZeroDegree { n }) => format!("zero_degree({n})"),
        _ => "given".to_string(),
    };
    let count = |f: fn(&Step) -> bool| steps.iter().filter(|s| f(s)).count();
    let inserts = count(|s| matches!(s, Step::Insert { .. }));
    let suspends = count(|s| matches!(s, Step::Suspend { .. }));
    let mut out = format!("construct: {seed}");
    if suspends > 0 {
        let _ = write!(out, " + {suspends} suspension(s)");
    }
    if inserts > 0 {
        let _ = write!(out, " + {inserts} insertion(s)");
    }
    if steps.iter().any(|s| matches!(s, Step::Reverse)) {
        out.push_str(" + reverse");
    }
    out
}

fn to_usize(x: i64) -> Result<usize, SearchError> {
    usize::try_from(x).map_err(|_| SearchError::InvalidRequest(format!("negative dimension {x}")))
}

pub fn lambda_table(spec: &TableSpec, exec: Execution) -> Result<LambdaTable, SearchError> {
    let mut rows = Vec::new();
    for req in &spec.exact {
        for n in req.n.values() {
            let n = to_usize(n)?;
            for d in req.d.values() {
                let r = lambda_with(n, d, req.max_vertices, exec)?;
                let (kind, witness) = match r.lambda {
                    Some(_) => (
                        RowKind::Exact,
                        format!(
                            "exhaustive search ({} triangulations)",
                            r.triangulations_examined
                        ),
                    ),
                    None => (
                        RowKind::NotFoundWithinBudget,
                        format!("none within {} vertices", req.max_vertices),
                    ),
                };
                rows.push(row(n, d, r.lambda, kind, witness));
            }
        }
    }

    let mut pairs = Vec::new();
    for req in &spec.constructed {
        for n in req.n.values() {
            let n = to_usize(n)?;
            for d in req.d.values() {
                pairs.push((n, d));
            }
        }
    }
    let built = map_ordered(exec, &pairs, |&(n, d)| construct(n, d));
    for (&(n, d), cert) in pairs.iter().zip(built) {
        let cert = cert.map_err(|e| SearchError::Construction(e.to_string()))?;
        let v = cert.labeled.vertex_count();
        let kind = if known_lambda(n, d) == Some(v) {
            RowKind::KnownExact
        } else {
            RowKind::UpperBound
        };
        rows.push(row(n, d, Some(v), kind, recipe_summary(&cert.recipe.steps)));
    }

    let mut alpha: BTreeMap<usize, &LambdaRow> = BTreeMap::new();
    let mut beta: BTreeMap<i64, &LambdaRow> = BTreeMap::new();
    for r in rows.iter().filter(|r| r.lambda.is_some()) {
        if r.d != 0 {
            let e = alpha.entry(r.n).or_insert(r);
            if r.d.abs() > e.d.abs() {
                *e = r;
            }
        }
        let e = beta.entry(r.d).or_insert(r);
        if r.n > e.n {
            *e = r;
        }
    }
    let alpha_estimates = alpha
        .into_iter()
        .filter_map(|(n, r)| {
            Some(RatioEstimate {
                fixed: n as i64,
                at: r.d,
                ratio: r.ratio_d?,
            })
        })
        .collect();
    let beta_estimates = beta
        .into_iter()
        .filter_map(|(d, r)| {
            Some(RatioEstimate {
                fixed: d,
                at: r.n as i64,
                ratio: r.ratio_n?,
            })
        })
        .collect();
    Ok(LambdaTable {
        rows,
        alpha_estimates,
        beta_estimates,
    })
}

impl LambdaTable {
    /// Aligned plain-text rendering.
    pub fn to_text(&self) -> String {
        let header = [
            "n",
            "d",
            "lambda",
            "kind",
            "lambda/|d|",
            "lambda/n",
            "witness",
        ];
        let body: Vec<[String; 7]> = self
            .rows
            .iter()
            .map(|r| {
                [
                    r.n.to_string(),
                    r.d.to_string(),
                    r.lambda.map_or("-".to_string(), |v| v.to_string()),
                    serde_json::to_value(r.kind)
                        .ok()
                        .and_then(|v| v.as_str().map(str::to_string))
                        .unwrap_or_default(),
                    r.ratio_d.map_or("-".to_string(), |x| x.to_string()),
                    r.ratio_n.map_or("-".to_string(), |x| x.to_string()),
                    r.witness.clone(),
                ]
            })
            .collect();
        let mut widths = header.map(str::len);
        for cells in &body {
            for (w, c) in widths.iter_mut().zip(cells) {
                *w = (*w).max(c.len());
            }
        }
        let mut out = String::new();
        let line = |out: &mut String, cells: &[&str]| {
            let parts: Vec<String> = cells
                .iter()
                .zip(widths)
                .enumerate()
                .map(|(i, (c, w))| {
                    if i == cells.len() - 1 {
                        c.to_string()
                    } else {
                        format!("{c:>w$}")
                    }
                })
                .collect();
            let _ = writeln!(out, "{}", parts.join("  ").trim_end());
        };
        line(&mut out, &header);
        for cells in &body {
            let refs: Vec<&str> = cells.iter().map(String::as_str).collect();
            line(&mut out, &refs);
        }
        if !self.alpha_estimates.is_empty() {
            let _ = writeln!(out, "\nfinite-sample lambda/|d| (largest |d| per n):");
            for e in &self.alpha_estimates {
                let _ = writeln!(out, "  n={}: {} at d={}", e.fixed, e.ratio, e.at);
            }
        }
        if !self.beta_estimates.is_empty() {
            let _ = writeln!(out, "\nfinite-sample lambda/n (largest n per d):");
            for e in &self.beta_estimates {
                let _ = writeln!(out, "  d={}: {} at n={}", e.fixed, e.ratio, e.at);
            }
        }
        out
    }
}
