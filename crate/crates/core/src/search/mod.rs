//! Exhaustive computation of the minimal vertex count for a given degree in
//! dimensions 1 and 2.

mod enumerate;
mod labeling;
mod table;

use thiserror::Error;

pub use enumerate::{
    enumerate_spheres, enumerate_spheres_with, vertex_splits, S2Levels, MAX_S2_VERTICES,
};
pub use labeling::{exists_labeling, search_labeling, LabelingSearch};
pub use table::{
    known_lambda, lambda_table, ConstructedRequest, ExactRequest, LambdaRow, LambdaTable, Ratio,
    RatioEstimate, RowKind, Span, TableSpec,
};

use crate::degree::{DegreeError, LabeledSphere};
use crate::par::{map_ordered, Execution};
use crate::simplicial::{OrientationError, OrientedComplex};

/// Largest cycle length accepted for `n = 1`.
pub const MAX_CYCLE_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("exhaustive search supports dimensions 1 and 2, got {0}")]
    UnsupportedDimension(usize),
    #[error("dimension {n} needs more than {v} vertices")]
    TooFewVertices { n: usize, v: usize },
    #[error("vertex budget {requested} exceeds the limit {limit} for dimension {n}")]
    BudgetTooLarge {
        n: usize,
        requested: usize,
        limit: usize,
    },
    #[error(transparent)]
    Orientation(#[from] OrientationError),
    #[error(transparent)]
    Degree(#[from] DegreeError),
    #[error("invalid table request: {0}")]
    InvalidRequest(String),
    #[error("construction failed: {0}")]
    Construction(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaResult {
    pub n: usize,
    pub d: i64,
    pub v_max: usize,
    /// Minimal vertex count, `None` when nothing was found within `v_max`.
    pub lambda: Option<usize>,
    pub witness: Option<LabeledSphere>,
    pub triangulations_examined: u64,
    pub labelings_examined: u64,
}

impl std::fmt::Display for LambdaResult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.lambda {
            Some(v) => writeln!(f, "lambda({}, {}) = {}", self.n, self.d, v)?,
            None => writeln!(
                f,
                "lambda({}, {}): not found within {} vertices",
                self.n, self.d, self.v_max
            )?,
        }
        writeln!(
            f,
            "triangulations examined: {}",
            self.triangulations_examined
        )?;
        write!(f, "labelings examined: {}", self.labelings_examined)
    }
}

fn check_budget(n: usize, v_max: usize) -> Result<(), SearchError> {
    let limit = match n {
        1 => MAX_CYCLE_VERTICES,
        2 => MAX_S2_VERTICES,
        _ => return Err(SearchError::UnsupportedDimension(n)),
    };
    if v_max > limit {
        return Err(SearchError::BudgetTooLarge {
            n,
            requested: v_max,
            limit,
        });
    }
    Ok(())
}

/// Smallest vertex count of an `n`-sphere triangulation carrying a colouring of
/// degree `d`, searching every isomorphism class up to `v_max` vertices.
pub fn lambda(n: usize, d: i64, v_max: usize) -> Result<LambdaResult, SearchError> {
    lambda_with(n, d, v_max, Execution::Sequential)
}

/// [`lambda`] with the per-triangulation searches of each vertex count
/// spread over `exec`. The result is the one the sequential order would give:
/// the first witness of the smallest vertex count, and counts up to and
/// including that triangulation.
pub fn lambda_with(
    n: usize,
    d: i64,
    v_max: usize,
    exec: Execution,
) -> Result<LambdaResult, SearchError> {
    check_budget(n, v_max)?;
    let mut result = LambdaResult {
        n,
        d,
        v_max,
        lambda: None,
        witness: None,
        triangulations_examined: 0,
        labelings_examined: 0,
    };
    let mut levels = S2Levels::new(exec);
    for v in n + 2..=v_max {
        let spheres = match n {
            1 => vec![enumerate::cycle(v)],
            _ => levels.level(v)?.to_vec(),
        };
        let outcomes = map_ordered(exec, &spheres, |c| search_labeling(c, d));
        for (complex, outcome) in spheres.iter().zip(outcomes) {
            let outcome = outcome?;
            result.triangulations_examined += 1;
            result.labelings_examined += outcome.labelings_examined;
            if let Some(labeling) = outcome.witness {
                let oriented = OrientedComplex::orient(complex.clone())?;
                result.lambda = Some(v);
                result.witness = Some(LabeledSphere::new(oriented, labeling)?);
                return Ok(result);
            }
        }
    }
    Ok(result)
}
