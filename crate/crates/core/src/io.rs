//! JSON document format for labeled spheres and construction certificates.
//!
//! A document is canonical: keys sorted, facets as sorted vertex lists in
//! lexicographic order, labels keyed by vertex id, and the orientation given
//! as one oriented vertex tuple per facet (in facet order). Certificates
//! carry `claimed_degree`, `claimed_vertex_count` and `recipe` in `metadata`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::constructions::{replay, ConstructionCertificate, Recipe};
use crate::degree::{degree, Color, DegreeError, LabeledSphere, Labeling};
use crate::simplicial::{is_sphere, parity, Complex, OrientationError, OrientedComplex, Vertex};

pub const FORMAT_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LabeledComplexDocument {
    pub dimension: usize,
    pub facets: Vec<Vec<Vertex>>,
    pub format_version: String,
    pub labels: BTreeMap<Vertex, Color>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub metadata: BTreeMap<String, Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orientation: Option<Vec<Vec<Vertex>>>,
}

#[derive(Debug, Error)]
pub enum IoError {
    #[error("syntax error: {0}")]
    SyntaxError(#[from] serde_json::Error),
    #[error("validation failed ({invariant}): {detail}")]
    ValidationError {
        invariant: &'static str,
        detail: String,
    },
    #[error("claimed degree {claimed} but the colouring has degree {actual}")]
    DegreeMismatch { claimed: i64, actual: i64 },
}

impl IoError {
    fn invalid(invariant: &'static str, detail: impl ToString) -> Self {
        IoError::ValidationError {
            invariant,
            detail: detail.to_string(),
        }
    }
}

impl LabeledComplexDocument {
    pub fn from_sphere(sphere: &LabeledSphere) -> Self {
        let oriented = sphere.oriented();
        let complex = sphere.complex();
        Self {
            dimension: complex.dimension(),
            facets: complex.facets().to_vec(),
            format_version: FORMAT_VERSION.to_string(),
            labels: sphere.labeling().colors().clone(),
            metadata: BTreeMap::new(),
            orientation: Some(
                (0..complex.facet_count())
                    .map(|i| oriented.oriented_facet(i))
                    .collect(),
            ),
        }
    }

    pub fn from_certificate(cert: &ConstructionCertificate) -> Self {
        let mut doc = Self::from_sphere(&cert.labeled);
        doc.metadata
            .insert("claimed_degree".into(), cert.claimed_degree.into());
        doc.metadata.insert(
            "claimed_vertex_count".into(),
            cert.claimed_vertex_count.into(),
        );
        doc.metadata.insert(
            "recipe".into(),
            serde_json::to_value(&cert.recipe).expect("recipe serializes"),
        );
        doc
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("document serializes");
        text.push('\n');
        text
    }

    pub fn claimed_degree(&self) -> Result<Option<i64>, IoError> {
        self.metadata_int("claimed_degree")
    }

    fn metadata_int(&self, key: &'static str) -> Result<Option<i64>, IoError> {
        match self.metadata.get(key) {
            None => Ok(None),
            Some(v) => v
                .as_i64()
                .map(Some)
                .ok_or_else(|| IoError::invalid("metadata", format!("{key} must be an integer"))),
        }
    }

    /// Validates the document and builds the labeled sphere it describes:
    /// complex, closed pseudomanifold, orientation, sphere checks, labeling,
    /// degree consistency, and the claimed degree if present.
    pub fn to_sphere(&self) -> Result<LabeledSphere, IoError> {
        if self.format_version != FORMAT_VERSION {
            return Err(IoError::invalid(
                "format_version",
                format!("unsupported version {:?}", self.format_version),
            ));
        }
        if self.dimension < 1 {
            return Err(IoError::invalid(
                "dimension",
                "dimension must be at least 1",
            ));
        }
        let complex = Complex::new(self.facets.iter().cloned())
            .map_err(|e| IoError::invalid("complex", e))?;
        if complex.dimension() != self.dimension {
            return Err(IoError::invalid(
                "dimension",
                format!(
                    "declared {} but facets have dimension {}",
                    self.dimension,
                    complex.dimension()
                ),
            ));
        }
        let report = complex.check_closed_pseudomanifold();
        if let Some((ridge, count)) = report.bad_ridges.first() {
            return Err(IoError::invalid(
                "closed pseudomanifold",
                format!("ridge {ridge:?} lies in {count} facets"),
            ));
        }
        if report.components != 1 {
            return Err(IoError::invalid(
                "closed pseudomanifold",
                format!("{} connected components", report.components),
            ));
        }
        let oriented = match &self.orientation {
            None => OrientedComplex::orient(complex),
            Some(tuples) => {
                let signs = orientation_signs(&complex, tuples)?;
                OrientedComplex::with_signs(complex, signs)
            }
        }
        .map_err(|e: OrientationError| IoError::invalid("orientation", e))?;
        let verdict = is_sphere(oriented.complex());
        if !verdict.passed() {
            return Err(IoError::invalid(
                "sphere",
                verdict.failures().collect::<Vec<_>>().join(", "),
            ));
        }
        let labeling = Labeling::new(self.dimension, self.labels.iter().map(|(&v, &c)| (v, c)))
            .map_err(|e| IoError::invalid("labeling", e))?;
        let sphere =
            LabeledSphere::new(oriented, labeling).map_err(|e| IoError::invalid("labeling", e))?;
        let actual = match degree(&sphere) {
            Ok(r) => r.degree,
            Err(e @ DegreeError::InconsistentDegree(_)) => {
                return Err(IoError::invalid("degree consistency", e))
            }
            Err(e) => return Err(IoError::invalid("degree", e)),
        };
        if let Some(claimed) = self.claimed_degree()? {
            if claimed != actual {
                return Err(IoError::DegreeMismatch { claimed, actual });
            }
        }
        if let Some(claimed) = self.metadata_int("claimed_vertex_count")? {
            if claimed != sphere.vertex_count() as i64 {
                return Err(IoError::invalid(
                    "claimed vertex count",
                    format!("claimed {claimed}, found {}", sphere.vertex_count()),
                ));
            }
        }
        Ok(sphere)
    }

    /// [`to_sphere`](Self::to_sphere), wrapped as a certificate. A recorded
    /// recipe must replay to exactly this sphere; without one the sphere
    /// itself becomes the seed.
    pub fn to_certificate(&self) -> Result<ConstructionCertificate, IoError> {
        let sphere = self.to_sphere()?;
        let Some(raw) = self.metadata.get("recipe") else {
            return ConstructionCertificate::given(sphere)
                .map_err(|e| IoError::invalid("certificate", e));
        };
        let recipe: Recipe =
            serde_json::from_value(raw.clone()).map_err(|e| IoError::invalid("recipe", e))?;
        let rebuilt = replay(&recipe).map_err(|e| IoError::invalid("recipe", e))?;
        if rebuilt != sphere {
            return Err(IoError::invalid(
                "recipe",
                "replaying the recipe does not reproduce the document",
            ));
        }
        let cert = ConstructionCertificate {
            claimed_degree: degree(&sphere).expect("checked above").degree,
            claimed_vertex_count: sphere.vertex_count(),
            labeled: sphere,
            recipe,
        };
        Ok(cert)
    }
}

/// Signs relative to sorted order for oriented tuples given in facet order.
fn orientation_signs(complex: &Complex, tuples: &[Vec<Vertex>]) -> Result<Vec<i8>, IoError> {
    if tuples.len() != complex.facet_count() {
        return Err(IoError::invalid(
            "orientation",
            format!(
                "{} oriented tuples for {} facets",
                tuples.len(),
                complex.facet_count()
            ),
        ));
    }
    complex
        .facets()
        .iter()
        .zip(tuples)
        .map(|(facet, tuple)| {
            let mut sorted = tuple.clone();
            sorted.sort_unstable();
            if &sorted != facet {
                return Err(IoError::invalid(
                    "orientation",
                    format!("{tuple:?} is not an ordering of facet {facet:?}"),
                ));
            }
            Ok(parity(tuple))
        })
        .collect()
}

pub fn serialize(sphere: &LabeledSphere) -> String {
    LabeledComplexDocument::from_sphere(sphere).to_json()
}

pub fn serialize_certificate(cert: &ConstructionCertificate) -> String {
    LabeledComplexDocument::from_certificate(cert).to_json()
}

/// Syntax-level parse only; see [`LabeledComplexDocument::to_sphere`].
pub fn parse_document(text: &str) -> Result<LabeledComplexDocument, IoError> {
    Ok(serde_json::from_str(text)?)
}

pub fn parse(text: &str) -> Result<LabeledSphere, IoError> {
    parse_document(text)?.to_sphere()
}

pub fn parse_certificate(text: &str) -> Result<ConstructionCertificate, IoError> {
    parse_document(text)?.to_certificate()
}
