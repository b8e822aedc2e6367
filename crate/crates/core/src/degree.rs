//! Degree of the simplicial map induced by a vertex colouring.
//!
//! A colouring `L: V -> {1, ..., n+2}` of an oriented n-dimensional closed
//! pseudomanifold extends to a simplicial map onto the boundary of the
//! (n+1)-simplex on the colours. A facet whose colours are distinct covers the
//! boundary facet that omits the one missing colour `i`; its sign compares the
//! facet orientation with that target facet, which carries the orientation
//! `(-1)^(n+i)` relative to increasing colour order (so the facet `1..=n+1` is
//! positive in every dimension). The degree is
//! the signed number of preimages of any target facet, and [`degree`] checks
//! that all `n+2` counts agree.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::simplicial::{
    is_sphere, parity, Complex, ComplexError, OrientationError, OrientedComplex, Vertex,
};

/// Colour of a vertex, in `1..=n+2`.
pub type Color = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DegreeError {
    #[error("vertex {0} is not labelled")]
    UnknownVertex(Vertex),
    #[error("vertex {vertex} has colour {color}, allowed range is 1..={max}")]
    ColorOutOfRange {
        vertex: Vertex,
        color: Color,
        max: Color,
    },
    #[error(
        "labelling does not match the vertex set (unlabelled {unlabelled:?}, extra {extra:?})"
    )]
    LabelingMismatch {
        unlabelled: Vec<Vertex>,
        extra: Vec<Vertex>,
    },
    #[error("labelling is for dimension {labeling}, complex has dimension {complex}")]
    DimensionMismatch { labeling: usize, complex: usize },
    #[error("{0:?} is not a permutation of the colours")]
    NotAPermutation(Vec<Color>),
    #[error("colour {color} of vertex {vertex} has {count} preimages, expected exactly one")]
    NotSingletonColor {
        vertex: Vertex,
        color: Color,
        count: usize,
    },
    #[error("link of vertex {vertex} fails the sphere checks: {reason}")]
    InvalidLink { vertex: Vertex, reason: String },
    #[error("link reduction needs dimension at least 1")]
    DimensionTooLow,
    #[error("per-target signed counts disagree; complex or orientation is corrupted\n{0}")]
    InconsistentDegree(String),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Orientation(#[from] OrientationError),
}

/// Vertex colouring for an n-dimensional domain, colours in `1..=n+2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Labeling {
    dimension: usize,
    colors: BTreeMap<Vertex, Color>,
}

impl Labeling {
    pub fn new(
        dimension: usize,
        colors: impl IntoIterator<Item = (Vertex, Color)>,
    ) -> Result<Self, DegreeError> {
        let colors: BTreeMap<Vertex, Color> = colors.into_iter().collect();
        let max = dimension as Color + 2;
        if let Some((&vertex, &color)) = colors.iter().find(|(_, &c)| c == 0 || c > max) {
            return Err(DegreeError::ColorOutOfRange { vertex, color, max });
        }
        Ok(Self { dimension, colors })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// Number of target colours, `n+2`.
    pub fn color_count(&self) -> Color {
        self.dimension as Color + 2
    }

    pub fn color(&self, v: Vertex) -> Option<Color> {
        self.colors.get(&v).copied()
    }

    pub fn colors(&self) -> &BTreeMap<Vertex, Color> {
        &self.colors
    }

    /// Vertices of each colour, indexed by `color - 1`.
    pub fn color_classes(&self) -> Vec<Vec<Vertex>> {
        let mut classes = vec![Vec::new(); self.color_count() as usize];
        for (&v, &c) in &self.colors {
            classes[c as usize - 1].push(v);
        }
        classes
    }

    pub fn is_surjective(&self) -> bool {
        self.color_classes().iter().all(|c| !c.is_empty())
    }
}

/// An oriented closed pseudomanifold with a colouring of its vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LabeledSphere {
    oriented: OrientedComplex,
    labeling: Labeling,
}

impl LabeledSphere {
    pub fn new(oriented: OrientedComplex, labeling: Labeling) -> Result<Self, DegreeError> {
        let complex = oriented.complex();
        if labeling.dimension() != complex.dimension() {
            return Err(DegreeError::DimensionMismatch {
                labeling: labeling.dimension(),
                complex: complex.dimension(),
            });
        }
        let unlabelled: Vec<Vertex> = complex
            .vertices()
            .iter()
            .copied()
            .filter(|&v| labeling.color(v).is_none())
            .collect();
        let extra: Vec<Vertex> = labeling
            .colors()
            .keys()
            .copied()
            .filter(|&v| !complex.contains_vertex(v))
            .collect();
        if !unlabelled.is_empty() || !extra.is_empty() {
            return Err(DegreeError::LabelingMismatch { unlabelled, extra });
        }
        Ok(Self { oriented, labeling })
    }

    pub fn oriented(&self) -> &OrientedComplex {
        &self.oriented
    }

    pub fn complex(&self) -> &Complex {
        self.oriented.complex()
    }

    pub fn labeling(&self) -> &Labeling {
        &self.labeling
    }

    pub fn dimension(&self) -> usize {
        self.complex().dimension()
    }

    pub fn vertex_count(&self) -> usize {
        self.complex().vertex_count()
    }

    pub fn into_parts(self) -> (OrientedComplex, Labeling) {
        (self.oriented, self.labeling)
    }
}

/// Sign of one facet under the colouring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FacetSign {
    /// -1, 0 or +1; 0 when two vertices share a colour.
    pub sign: i8,
    /// Colour omitted by the covered target facet (absent when degenerate).
    pub target: Option<Color>,
}

/// Reference orientation of the target facet omitting colour `omitted` in
/// dimension `n`, relative to increasing colour order.
pub fn target_reference_sign(n: usize, omitted: Color) -> i8 {
    if (n as Color + omitted).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Sign of the facet given as an oriented vertex tuple.
pub fn facet_sign(
    oriented_facet: &[Vertex],
    labeling: &Labeling,
) -> Result<FacetSign, DegreeError> {
    let colors = oriented_facet
        .iter()
        .map(|&v| labeling.color(v).ok_or(DegreeError::UnknownVertex(v)))
        .collect::<Result<Vec<Color>, _>>()?;
    Ok(sign_of_colors(&colors, labeling.color_count()))
}

pub(crate) fn sign_of_colors(colors: &[Color], color_count: Color) -> FacetSign {
    let mut present = 0u64;
    for &c in colors {
        let bit = 1u64 << c;
        if present & bit != 0 {
            return FacetSign {
                sign: 0,
                target: None,
            };
        }
        present |= bit;
    }
    debug_assert_eq!(colors.len() as Color + 1, color_count);
    let omitted = (1..=color_count)
        .find(|&c| present & (1u64 << c) == 0)
        .expect("exactly one colour is missing");
    FacetSign {
        sign: parity(colors) * target_reference_sign(colors.len() - 1, omitted),
        target: Some(omitted),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TargetPreimages {
    pub omitted_color: Color,
    /// Preimage facets (sorted vertex tuples) with their signs.
    pub preimages: Vec<(Vec<Vertex>, i8)>,
    pub signed_sum: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeReport {
    pub degree: i64,
    pub per_target_facet: Vec<TargetPreimages>,
    pub consistent: bool,
}

impl DegreeReport {
    pub fn min_preimage_count(&self) -> usize {
        self.per_target_facet
            .iter()
            .map(|t| t.preimages.len())
            .min()
            .unwrap_or(0)
    }
}

impl std::fmt::Display for DegreeReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "degree: {}", self.degree)?;
        writeln!(f, "consistent: {}", self.consistent)?;
        for t in &self.per_target_facet {
            write!(
                f,
                "  target omitting colour {}: sum {:+}, {} preimage(s)",
                t.omitted_color,
                t.signed_sum,
                t.preimages.len()
            )?;
            for (facet, sign) in &t.preimages {
                write!(f, " {}{:?}", if *sign > 0 { '+' } else { '-' }, facet)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// All `n+2` per-target signed counts, without failing on disagreement.
pub fn degree_report(sphere: &LabeledSphere) -> DegreeReport {
    let count = sphere.labeling.color_count();
    let mut per_target: Vec<TargetPreimages> = (1..=count)
        .map(|c| TargetPreimages {
            omitted_color: c,
            preimages: Vec::new(),
            signed_sum: 0,
        })
        .collect();
    let complex = sphere.complex();
    let mut colors = Vec::with_capacity(complex.dimension() + 1);
    for (i, facet) in complex.facets().iter().enumerate() {
        colors.clear();
        colors.extend(facet.iter().map(|v| sphere.labeling.colors[v]));
        let fs = sign_of_colors(&colors, count);
        if let Some(target) = fs.target {
            let sign = fs.sign * sphere.oriented.sign_of(i);
            let entry = &mut per_target[target as usize - 1];
            entry.preimages.push((facet.clone(), sign));
            entry.signed_sum += sign as i64;
        }
    }
    let first = per_target[0].signed_sum;
    let consistent = per_target.iter().all(|t| t.signed_sum == first);
    DegreeReport {
        degree: first,
        per_target_facet: per_target,
        consistent,
    }
}

/// Degree with the consistency check enforced.
pub fn degree(sphere: &LabeledSphere) -> Result<DegreeReport, DegreeError> {
    let report = degree_report(sphere);
    if report.consistent {
        Ok(report)
    } else {
        let mut dump = String::new();
        let _ = writeln!(dump, "facets and signs:");
        for i in 0..sphere.complex().facet_count() {
            let _ = writeln!(
                dump,
                "  {:?} {:+}",
                sphere.complex().facets()[i],
                sphere.oriented.sign_of(i)
            );
        }
        let _ = write!(dump, "{report}");
        Err(DegreeError::InconsistentDegree(dump))
    }
}

/// Sign of a colour permutation given as images of `1..=k`.
pub fn permutation_sign(perm: &[Color]) -> i8 {
    parity(perm)
}

fn check_permutation(perm: &[Color], count: Color) -> Result<(), DegreeError> {
    let mut seen = vec![false; count as usize + 1];
    let ok = perm.len() == count as usize
        && perm
            .iter()
            .all(|&c| (1..=count).contains(&c) && !std::mem::replace(&mut seen[c as usize], true));
    if ok {
        Ok(())
    } else {
        Err(DegreeError::NotAPermutation(perm.to_vec()))
    }
}

/// Composes the colouring with `perm`, where `perm[c - 1]` is the new colour
/// of old colour `c`. The degree is multiplied by the sign of `perm`.
pub fn relabel(sphere: &LabeledSphere, perm: &[Color]) -> Result<LabeledSphere, DegreeError> {
    check_permutation(perm, sphere.labeling.color_count())?;
    let colors = sphere
        .labeling
        .colors
        .iter()
        .map(|(&v, &c)| (v, perm[c as usize - 1]));
    let labeling = Labeling::new(sphere.dimension(), colors)?;
    Ok(LabeledSphere {
        oriented: sphere.oriented.clone(),
        labeling,
    })
}

/// Flips every facet orientation; negates the degree.
pub fn reverse_orientation(sphere: &LabeledSphere) -> LabeledSphere {
    LabeledSphere {
        oriented: sphere.oriented.reversed(),
        labeling: sphere.labeling.clone(),
    }
}

/// Restricts to the link of `v`, whose colour must occur exactly once.
///
/// The link facet `tau` of `sigma = tau + v` gets the orientation of `v * tau`
/// inside `sigma`, times `(-1)^(c+1)` for the removed colour `c`. Colours above `c`
/// shift down by one. With these conventions the degree is unchanged.
pub fn link_reduction(sphere: &LabeledSphere, v: Vertex) -> Result<LabeledSphere, DegreeError> {
    let n = sphere.dimension();
    if n == 0 {
        return Err(DegreeError::DimensionTooLow);
    }
    let color = sphere
        .labeling
        .color(v)
        .ok_or(DegreeError::UnknownVertex(v))?;
    let count = sphere
        .labeling
        .colors
        .values()
        .filter(|&&c| c == color)
        .count();
    if count != 1 {
        return Err(DegreeError::NotSingletonColor {
            vertex: v,
            color,
            count,
        });
    }

    let complex = sphere.complex();
    let color_sign: i8 = if color % 2 == 1 { 1 } else { -1 };
    let mut signed: Vec<(Vec<Vertex>, i8)> = complex
        .facets()
        .iter()
        .enumerate()
        .filter_map(|(i, f)| {
            let pos = f.binary_search(&v).ok()?;
            let mut tau = f.clone();
            tau.remove(pos);
            let pos_sign: i8 = if pos % 2 == 0 { 1 } else { -1 };
            Some((tau, sphere.oriented.sign_of(i) * pos_sign * color_sign))
        })
        .collect();
    signed.sort_unstable();
    let (facets, signs): (Vec<_>, Vec<_>) = signed.into_iter().unzip();
    let link = Complex::from_sorted(n - 1, facets);

    let verdict = is_sphere(&link);
    if !verdict.passed() {
        return Err(DegreeError::InvalidLink {
            vertex: v,
            reason: verdict.failures().collect::<Vec<_>>().join(", "),
        });
    }
    let oriented =
        OrientedComplex::with_signs(link, signs).map_err(|e| DegreeError::InvalidLink {
            vertex: v,
            reason: e.to_string(),
        })?;
    let colors = oriented.complex().vertices().iter().map(|&u| {
        let c = sphere.labeling.colors[&u];
        (u, if c > color { c - 1 } else { c })
    });
    let labeling = Labeling::new(n - 1, colors)?;
    LabeledSphere::new(oriented, labeling)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn boundary(n: u32) -> LabeledSphere {
        let facets: Vec<Vec<Vertex>> = (1..=n + 2)
            .map(|skip| (1..=n + 2).filter(|&v| v != skip).collect())
            .collect();
        let oriented = OrientedComplex::orient(Complex::new(facets).unwrap()).unwrap();
        let labeling = Labeling::new(n as usize, (1..=n + 2).map(|v| (v, v))).unwrap();
        LabeledSphere::new(oriented, labeling).unwrap()
    }

    fn hexagon(labels: [Color; 6]) -> LabeledSphere {
        let c = Complex::new((1..=6).map(|i| [i, i % 6 + 1])).unwrap();
        let labeling = Labeling::new(1, (1..=6).zip(labels)).unwrap();
        LabeledSphere::new(OrientedComplex::orient(c).unwrap(), labeling).unwrap()
    }

    #[test]
    fn identity_facet_is_positive() {
        let s = boundary(2);
        assert_eq!(
            facet_sign(&[1, 2, 3], s.labeling()).unwrap(),
            FacetSign {
                sign: 1,
                target: Some(4)
            }
        );
    }

    #[test]
    fn repeated_colour_is_degenerate() {
        let s = hexagon([1, 1, 2, 3, 2, 3]);
        assert_eq!(facet_sign(&[1, 2], s.labeling()).unwrap().sign, 0);
        assert_eq!(
            facet_sign(&[1, 9], s.labeling()),
            Err(DegreeError::UnknownVertex(9))
        );
    }

    #[test]
    fn boundary_has_degree_one() {
        for n in 1..=5 {
            let r = degree(&boundary(n)).unwrap();
            assert_eq!(r.degree, 1);
            assert!(r.per_target_facet.iter().all(|t| t.preimages.len() == 1));
        }
    }

    #[test]
    fn cyclic_hexagon_has_degree_two() {
        assert_eq!(degree(&hexagon([1, 2, 3, 1, 2, 3])).unwrap().degree, 2);
    }

    #[test]
    fn missing_colour_gives_zero() {
        let r = degree(&hexagon([1, 2, 1, 2, 1, 2])).unwrap();
        assert_eq!(r.degree, 0);
        assert!(r.per_target_facet[0].preimages.is_empty());
    }

    #[test]
    fn relabel_and_reverse_sign_laws() {
        let s = hexagon([1, 2, 3, 1, 2, 3]);
        assert_eq!(degree(&relabel(&s, &[1, 2, 3]).unwrap()).unwrap().degree, 2);
        assert_eq!(
            degree(&relabel(&s, &[2, 1, 3]).unwrap()).unwrap().degree,
            -2
        );
        assert_eq!(degree(&relabel(&s, &[2, 3, 1]).unwrap()).unwrap().degree, 2);
        assert_eq!(degree(&reverse_orientation(&s)).unwrap().degree, -2);
        assert_eq!(reverse_orientation(&reverse_orientation(&s)), s);
        assert_eq!(
            relabel(&s, &[1, 1, 3]),
            Err(DegreeError::NotAPermutation(vec![1, 1, 3]))
        );
        assert!(relabel(&s, &[1, 2]).is_err());
    }

    #[test]
    fn link_reduction_keeps_degree_on_boundaries() {
        for n in 1..=4 {
            let s = boundary(n);
            for v in 1..=n + 2 {
                let link = link_reduction(&s, v).unwrap();
                assert_eq!(link.dimension(), n as usize - 1);
                assert_eq!(link.vertex_count(), n as usize + 1);
                assert_eq!(degree(&link).unwrap().degree, 1, "n={n} v={v}");
            }
        }
    }

    #[test]
    fn link_reduction_rejects_repeated_colour() {
        let s = hexagon([1, 2, 3, 1, 2, 3]);
        assert_eq!(
            link_reduction(&s, 1),
            Err(DegreeError::NotSingletonColor {
                vertex: 1,
                color: 1,
                count: 2
            })
        );
    }

    #[test]
    fn inconsistent_orientation_is_reported() {
        let s = hexagon([1, 2, 3, 1, 2, 3]);
        let all_positive = vec![1; 6];
        let broken = LabeledSphere {
            oriented: OrientedComplex::unchecked(s.complex().clone(), all_positive),
            labeling: s.labeling().clone(),
        };
        assert!(!degree_report(&broken).consistent);
        assert!(matches!(
            degree(&broken),
            Err(DegreeError::InconsistentDegree(_))
        ));
    }
}
