//! Explicit labeled spheres with known degree.
//!
//! Every generator returns a [`ConstructionCertificate`]: the labeled sphere,
//! the degree and vertex count it claims, and the recipe of steps that
//! produced it. [`replay`] rebuilds the sphere from the recipe alone.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::degree::{self, degree, facet_sign, Color, DegreeError, LabeledSphere, Labeling};
use crate::simplicial::{
    is_sphere, parity, Complex, ComplexError, OrientationError, OrientedComplex, Vertex,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("dimension must be at least 1, got {0}")]
    InvalidDimension(usize),
    #[error("degree must be non-zero")]
    ZeroDegree,
    #[error("pivot vertex {0} is not in the complex")]
    PivotNotFound(Vertex),
    #[error("facet {0:?} is not in the complex")]
    FacetNotFound(Vec<Vertex>),
    #[error("facet {facet:?} has sign {sign}, insertion needs a positive facet")]
    BadFacetSign { facet: Vec<Vertex>, sign: i8 },
    #[error("facet {facet:?} has colours {colors:?}, insertion needs exactly 1..={top}")]
    BadFacetColors {
        facet: Vec<Vertex>,
        colors: Vec<Color>,
        top: Color,
    },
    #[error("no positive facet covers the target facet omitting the top colour")]
    NoQualifyingFacet,
    #[error("recipe must start with a seed step, found {0}")]
    MissingSeed(String),
    #[error("seed step {0} may only appear first in a recipe")]
    MisplacedSeed(String),
    #[error("certificate claims {what} {claimed}, found {actual}")]
    CertificateMismatch {
        what: &'static str,
        claimed: i64,
        actual: i64,
    },
    #[error("certificate fails sphere checks: {0}")]
    NotSphere(String),
    #[error(transparent)]
    Degree(#[from] DegreeError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Orientation(#[from] OrientationError),
}

/// One step of a construction. The first step of a recipe is a seed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum Step {
    /// Boundary of the (n+1)-simplex on `1..=n+2`, identity colouring.
    BoundarySimplex {
        n: usize,
    },
    /// Cycle on `1..=3|d|` coloured 1,2,3,1,2,3,...
    CyclicCircle {
        d: i64,
    },
    /// Boundary of the (n+1)-simplex with vertex `n+2` recoloured 1.
    ZeroDegree {
        n: usize,
    },
    /// An explicit starting sphere.
    Given {
        facets: Vec<Vec<Vertex>>,
        orientation: Vec<i8>,
        labels: BTreeMap<Vertex, Color>,
    },
    /// Stellar subdivision of a facet by a fresh vertex of the given colour.
    Subdivide {
        facet: Vec<Vertex>,
        color: Color,
    },
    Suspend {
        pivot: Vertex,
    },
    Insert {
        facet: Vec<Vertex>,
    },
    Reverse,
    Relabel {
        permutation: Vec<Color>,
    },
}

impl Step {
    fn is_seed(&self) -> bool {
        matches!(
            self,
            Step::BoundarySimplex { .. }
                | Step::CyclicCircle { .. }
                | Step::ZeroDegree { .. }
                | Step::Given { .. }
        )
    }

    fn name(&self) -> &'static str {
        match self {
            Step::BoundarySimplex { .. } => "boundary_simplex",
            Step::CyclicCircle { .. } => "cyclic_circle",
            Step::ZeroDegree { .. } => "zero_degree",
            Step::Given { .. } => "given",
            Step::Subdivide { .. } => "subdivide",
            Step::Suspend { .. } => "suspend",
            Step::Insert { .. } => "insert",
            Step::Reverse => "reverse",
            Step::Relabel { .. } => "relabel",
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Recipe {
    pub steps: Vec<Step>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionCertificate {
    pub labeled: LabeledSphere,
    pub claimed_degree: i64,
    pub claimed_vertex_count: usize,
    pub recipe: Recipe,
}

impl ConstructionCertificate {
    fn seed(labeled: LabeledSphere, claimed_degree: i64, step: Step) -> Self {
        Self {
            claimed_vertex_count: labeled.vertex_count(),
            labeled,
            claimed_degree,
            recipe: Recipe { steps: vec![step] },
        }
    }

    /// Wraps an arbitrary labeled sphere; the recipe records it verbatim.
    pub fn given(labeled: LabeledSphere) -> Result<Self, ConstructionError> {
        let d = degree(&labeled)?.degree;
        let step = Step::Given {
            facets: labeled.complex().facets().to_vec(),
            orientation: labeled.oriented().signs().to_vec(),
            labels: labeled.labeling().colors().clone(),
        };
        Ok(Self::seed(labeled, d, step))
    }

    fn then(&self, labeled: LabeledSphere, claimed_degree: i64, step: Step) -> Self {
        let mut recipe = self.recipe.clone();
        recipe.steps.push(step);
        Self {
            claimed_vertex_count: labeled.vertex_count(),
            labeled,
            claimed_degree,
            recipe,
        }
    }

    pub fn dimension(&self) -> usize {
        self.labeled.dimension()
    }

    /// Recomputes the degree and vertex count and compares them with the
    /// claims.
    pub fn verify(&self) -> Result<(), ConstructionError> {
        let actual = degree(&self.labeled)?.degree;
        if actual != self.claimed_degree {
            return Err(ConstructionError::CertificateMismatch {
                what: "degree",
                claimed: self.claimed_degree,
                actual,
            });
        }
        let count = self.labeled.vertex_count();
        if count != self.claimed_vertex_count {
            return Err(ConstructionError::CertificateMismatch {
                what: "vertex count",
                claimed: self.claimed_vertex_count as i64,
                actual: count as i64,
            });
        }
        Ok(())
    }

    /// [`verify`](Self::verify) plus the sphere checks for its dimension.
    pub fn verify_sphere(&self) -> Result<(), ConstructionError> {
        self.verify()?;
        let verdict = is_sphere(self.labeled.complex());
        if !verdict.passed() {
            return Err(ConstructionError::NotSphere(
                verdict.failures().collect::<Vec<_>>().join(", "),
            ));
        }
        Ok(())
    }
}

/// `(numerator, denominator)` of the vertex bound `(n+2)/n * |d| + 2n + 2`.
pub fn vertex_bound(n: usize, d: i64) -> (u64, u64) {
    let n = n as u64;
    let d = d.unsigned_abs();
    ((n + 2) * d + (2 * n + 2) * n, n)
}

pub fn meets_vertex_bound(vertex_count: usize, n: usize, d: i64) -> bool {
    let (num, den) = vertex_bound(n, d);
    vertex_count as u64 * den <= num
}

fn simplex_boundary(n: usize) -> Complex {
    let top = n as Vertex + 2;
    let facets = (1..=top)
        .map(|skip| (1..=top).filter(|&v| v != skip).collect())
        .collect();
    Complex::from_sorted(n, facets)
}

fn labeled(
    oriented: OrientedComplex,
    colors: impl IntoIterator<Item = (Vertex, Color)>,
) -> Result<LabeledSphere, ConstructionError> {
    let n = oriented.complex().dimension();
    Ok(LabeledSphere::new(oriented, Labeling::new(n, colors)?)?)
}

fn boundary_labeled(n: usize) -> Result<LabeledSphere, ConstructionError> {
    if n < 1 {
        return Err(ConstructionError::InvalidDimension(n));
    }
    let oriented = OrientedComplex::orient(simplex_boundary(n))?;
    labeled(oriented, (1..=n as Vertex + 2).map(|v| (v, v)))
}

/// Boundary of the (n+1)-simplex with the identity colouring; degree 1.
pub fn boundary_simplex(n: usize) -> Result<ConstructionCertificate, ConstructionError> {
    let sphere = boundary_labeled(n)?;
    Ok(ConstructionCertificate::seed(
        sphere,
        1,
        Step::BoundarySimplex { n },
    ))
}

fn zero_degree_labeled(n: usize) -> Result<LabeledSphere, ConstructionError> {
    if n < 1 {
        return Err(ConstructionError::InvalidDimension(n));
    }
    let top = n as Vertex + 2;
    let oriented = OrientedComplex::orient(simplex_boundary(n))?;
    labeled(
        oriented,
        (1..=top).map(|v| (v, if v == top { 1 } else { v })),
    )
}

/// Degree 0 on `n+2` vertices: colour `n+2` is never used.
pub fn zero_degree(n: usize) -> Result<ConstructionCertificate, ConstructionError> {
    let sphere = zero_degree_labeled(n)?;
    Ok(ConstructionCertificate::seed(
        sphere,
        0,
        Step::ZeroDegree { n },
    ))
}

fn cyclic_labeled(d: i64) -> Result<LabeledSphere, ConstructionError> {
    if d == 0 {
        return Err(ConstructionError::ZeroDegree);
    }
    let len = 3 * d.unsigned_abs() as Vertex;
    let cycle = Complex::new((1..=len).map(|i| [i, i % len + 1]))?;
    let mut oriented = OrientedComplex::orient(cycle)?;
    if d < 0 {
        oriented.reverse();
    }
    labeled(oriented, (1..=len).map(|v| (v, (v - 1) % 3 + 1)))
}

/// `3|d|` vertices coloured 1,2,3 repeating around a cycle.
pub fn cyclic_circle(d: i64) -> Result<ConstructionCertificate, ConstructionError> {
    let sphere = cyclic_labeled(d)?;
    Ok(ConstructionCertificate::seed(
        sphere,
        d,
        Step::CyclicCircle { d },
    ))
}

/// Stellar subdivision of `facet` by a fresh vertex (`max + 1`) of colour
/// `color`. Each new facet inherits the orientation of `facet` with the
/// replaced vertex substituted by the new one.
pub fn subdivide(
    sphere: &LabeledSphere,
    facet: &[Vertex],
    color: Color,
) -> Result<LabeledSphere, ConstructionError> {
    let complex = sphere.complex();
    let idx = complex
        .facet_index(facet)
        .ok_or_else(|| ConstructionError::FacetNotFound(facet.to_vec()))?;
    let w = complex.max_vertex() + 1;
    let sign = sphere.oriented().sign_of(idx);
    let old = &complex.facets()[idx];

    let mut signed: Vec<(Vec<Vertex>, i8)> = complex
        .facets()
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != idx)
        .map(|(i, f)| (f.clone(), sphere.oriented().sign_of(i)))
        .collect();
    for pos in 0..old.len() {
        let mut tuple = old.clone();
        tuple[pos] = w;
        let s = sign * parity(&tuple);
        tuple.sort_unstable();
        signed.push((tuple, s));
    }
    signed.sort_unstable();
    let (facets, signs): (Vec<_>, Vec<_>) = signed.into_iter().unzip();
    let oriented =
        OrientedComplex::unchecked(Complex::from_sorted(complex.dimension(), facets), signs);

    let mut colors = sphere.labeling().colors().clone();
    colors.insert(w, color);
    labeled(oriented, colors)
}

/// One-point suspension at `pivot`: the cone from a fresh vertex `x` over the
/// whole sphere, glued to the cone from `pivot` over the facets that avoid it.
/// `x` takes the new top colour `n+3`. The cone facet over the first facet
/// gets the opposite of that facet's sign (with `x` last), which keeps the
/// degree.
pub fn suspend(sphere: &LabeledSphere, pivot: Vertex) -> Result<LabeledSphere, ConstructionError> {
    let complex = sphere.complex();
    if !complex.contains_vertex(pivot) {
        return Err(ConstructionError::PivotNotFound(pivot));
    }
    let n = complex.dimension();
    let x = complex.max_vertex() + 1;
    let mut facets: Vec<Vec<Vertex>> = Vec::with_capacity(2 * complex.facet_count());
    for f in complex.facets() {
        let mut cone = f.clone();
        cone.push(x);
        facets.push(cone);
        if f.binary_search(&pivot).is_err() {
            let mut g = f.clone();
            g.push(pivot);
            g.sort_unstable();
            facets.push(g);
        }
    }
    let suspended = Complex::from_sorted(n + 1, facets);
    let mut reference = complex.facets()[0].clone();
    reference.push(x);
    let oriented =
        OrientedComplex::orient_like(suspended, &reference, -sphere.oriented().sign_of(0))?;

    let mut colors = sphere.labeling().colors().clone();
    colors.insert(x, n as Color + 3);
    labeled(oriented, colors)
}

/// Replaces a positive facet coloured `1..=n+1` by `n+1` positive facets over
/// the same target, adding `n+2` vertices and raising the degree by `n`.
pub fn insert(
    sphere: &LabeledSphere,
    facet: &[Vertex],
) -> Result<LabeledSphere, ConstructionError> {
    let complex = sphere.complex();
    let n = complex.dimension();
    let top = n as Color + 2;
    let idx = complex
        .facet_index(facet)
        .ok_or_else(|| ConstructionError::FacetNotFound(facet.to_vec()))?;
    let sorted = complex.facets()[idx].clone();
    let labeling = sphere.labeling();

    let mut colors: Vec<Color> = sorted.iter().map(|&v| labeling.color(v).unwrap()).collect();
    colors.sort_unstable();
    if colors != (1..top).collect::<Vec<_>>() {
        return Err(ConstructionError::BadFacetColors {
            facet: sorted,
            colors,
            top: top - 1,
        });
    }
    let sign = sphere.oriented().sign_of(idx) * facet_sign(&sorted, labeling)?.sign;
    if sign != 1 {
        return Err(ConstructionError::BadFacetSign {
            facet: sorted,
            sign,
        });
    }

    let centre = complex.max_vertex() + 1;
    let mut out = subdivide(sphere, &sorted, top)?;
    for k in 1..top {
        // a_k omits the vertex coloured k and contains the centre
        let mut a: Vec<Vertex> = sorted
            .iter()
            .copied()
            .filter(|&v| labeling.color(v) != Some(k))
            .collect();
        a.push(centre);
        out = subdivide(&out, &a, k)?;
    }
    Ok(out)
}

/// First facet (in sorted order) that is positive and covers the target facet
/// omitting the top colour.
pub fn first_insertable_facet(sphere: &LabeledSphere) -> Option<Vec<Vertex>> {
    let top = sphere.labeling().color_count();
    let complex = sphere.complex();
    complex.facets().iter().enumerate().find_map(|(i, f)| {
        let fs = facet_sign(f, sphere.labeling()).ok()?;
        (fs.target == Some(top) && fs.sign * sphere.oriented().sign_of(i) == 1).then(|| f.clone())
    })
}

pub fn one_point_suspension(
    cert: &ConstructionCertificate,
    pivot: Vertex,
) -> Result<ConstructionCertificate, ConstructionError> {
    let sphere = suspend(&cert.labeled, pivot)?;
    Ok(cert.then(sphere, cert.claimed_degree, Step::Suspend { pivot }))
}

pub fn insertion_step(
    cert: &ConstructionCertificate,
    facet: &[Vertex],
) -> Result<ConstructionCertificate, ConstructionError> {
    let sphere = insert(&cert.labeled, facet)?;
    let mut sorted = facet.to_vec();
    sorted.sort_unstable();
    Ok(cert.then(
        sphere,
        cert.claimed_degree + cert.dimension() as i64,
        Step::Insert { facet: sorted },
    ))
}

pub fn reverse(cert: &ConstructionCertificate) -> ConstructionCertificate {
    cert.then(
        degree::reverse_orientation(&cert.labeled),
        -cert.claimed_degree,
        Step::Reverse,
    )
}

pub fn relabel(
    cert: &ConstructionCertificate,
    permutation: &[Color],
) -> Result<ConstructionCertificate, ConstructionError> {
    let sphere = degree::relabel(&cert.labeled, permutation)?;
    let sign = degree::permutation_sign(permutation) as i64;
    Ok(cert.then(
        sphere,
        sign * cert.claimed_degree,
        Step::Relabel {
            permutation: permutation.to_vec(),
        },
    ))
}

fn subdivide_step(
    cert: &ConstructionCertificate,
    facet: &[Vertex],
    color: Color,
) -> Result<ConstructionCertificate, ConstructionError> {
    let sphere = subdivide(&cert.labeled, facet, color)?;
    let claimed = degree(&sphere)?.degree;
    let mut sorted = facet.to_vec();
    sorted.sort_unstable();
    Ok(cert.then(
        sphere,
        claimed,
        Step::Subdivide {
            facet: sorted,
            color,
        },
    ))
}

/// The boundary of the 4-simplex on `u_1..u_5 = 1..5`, each facet subdivided
/// by a vertex `w_i = 5 + i` coloured `i`, where facet `i` is the one opposite
/// `u_i`. Degree -4.
pub fn lemma4_untransposed() -> ConstructionCertificate {
    let mut cert = boundary_simplex(3).expect("dimension 3 is valid");
    for i in 1..=5u32 {
        let opposite: Vec<Vertex> = (1..=5).filter(|&u| u != i).collect();
        cert = subdivide_step(&cert, &opposite, i).expect("facet of the 4-simplex boundary");
    }
    cert
}

/// [`lemma4_untransposed`] followed by swapping colours 1 and 2: a 3-sphere on
/// 10 vertices of degree +4.
pub fn lemma4_sphere() -> ConstructionCertificate {
    relabel(&lemma4_untransposed(), &[2, 1, 3, 4, 5]).expect("transposition is a permutation")
}

fn insert_first(
    cert: &ConstructionCertificate,
) -> Result<ConstructionCertificate, ConstructionError> {
    let facet =
        first_insertable_facet(&cert.labeled).ok_or(ConstructionError::NoQualifyingFacet)?;
    insertion_step(cert, &facet)
}

fn suspend_default(
    cert: &ConstructionCertificate,
) -> Result<ConstructionCertificate, ConstructionError> {
    let pivot = cert.labeled.complex().vertices()[0];
    one_point_suspension(cert, pivot)
}

/// A labeled n-sphere of degree `d`.
///
/// Writes `|d| = kn + l` with `0 < l <= n`, builds a degree-`l` seed and then
/// applies `k` insertion steps. The seed is the boundary of the simplex for
/// `l = 1`; otherwise a single insertion on the boundary of the
/// `l`-simplex (degree `l` on `2l+2` vertices) suspended up to dimension `n`.
pub fn construct(n: usize, d: i64) -> Result<ConstructionCertificate, ConstructionError> {
    if n < 1 {
        return Err(ConstructionError::InvalidDimension(n));
    }
    if d == 0 {
        return zero_degree(n);
    }
    if n == 1 {
        return cyclic_circle(d);
    }
    let magnitude = d.unsigned_abs() as usize;
    let mut cert = if magnitude == 1 {
        boundary_simplex(n)?
    } else {
        let (mut k, mut l) = (magnitude / n, magnitude % n);
        if l == 0 {
            k -= 1;
            l = n;
        }
        let mut cert = if l == 1 {
            boundary_simplex(n)?
        } else {
            let mut seed = insert_first(&boundary_simplex(l - 1)?)?;
            for _ in l - 1..n {
                seed = suspend_default(&seed)?;
            }
            seed
        };
        for _ in 0..k {
            cert = insert_first(&cert)?;
        }
        cert
    };
    if d < 0 {
        cert = reverse(&cert);
    }
    Ok(cert)
}

fn apply(sphere: Option<LabeledSphere>, step: &Step) -> Result<LabeledSphere, ConstructionError> {
    let Some(sphere) = sphere else {
        return match step {
            Step::BoundarySimplex { n } => boundary_labeled(*n),
            Step::CyclicCircle { d } => cyclic_labeled(*d),
            Step::ZeroDegree { n } => zero_degree_labeled(*n),
            Step::Given {
                facets,
                orientation,
                labels,
            } => {
                let complex = Complex::new(facets.iter().cloned())?;
                let oriented = OrientedComplex::with_signs(complex, orientation.clone())?;
                labeled(oriented, labels.clone())
            }
            other => Err(ConstructionError::MissingSeed(other.name().to_string())),
        };
    };
    match step {
        s if s.is_seed() => Err(ConstructionError::MisplacedSeed(s.name().to_string())),
        Step::Subdivide { facet, color } => subdivide(&sphere, facet, *color),
        Step::Suspend { pivot } => suspend(&sphere, *pivot),
        Step::Insert { facet } => insert(&sphere, facet),
        Step::Reverse => Ok(degree::reverse_orientation(&sphere)),
        Step::Relabel { permutation } => Ok(degree::relabel(&sphere, permutation)?),
        _ => unreachable!("seed steps handled above"),
    }
}

/// Rebuilds the labeled sphere described by a recipe.
pub fn replay(recipe: &Recipe) -> Result<LabeledSphere, ConstructionError> {
    let mut current = None;
    for step in &recipe.steps {
        current = Some(apply(current, step)?);
    }
    current.ok_or_else(|| ConstructionError::MissingSeed("empty recipe".to_string()))
}
