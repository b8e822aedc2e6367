use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use thiserror::Error;

use super::Vertex;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("complex has no facets")]
    Empty,
    #[error("facets of mixed cardinality: expected {expected} vertices, found facet {facet:?}")]
    NonPure { expected: usize, facet: Vec<Vertex> },
    #[error("duplicate facet {0:?}")]
    DuplicateFacet(Vec<Vertex>),
    #[error("facet {0:?} repeats a vertex")]
    DegenerateFacet(Vec<Vertex>),
    #[error("vertex {0} is not in the complex")]
    UnknownVertex(Vertex),
    #[error("facet {0:?} is not in the complex")]
    FacetNotFound(Vec<Vertex>),
    #[error("vertex {0} is already in the complex")]
    VertexAlreadyPresent(Vertex),
    #[error("operation needs dimension at least {required}, complex has dimension {actual}")]
    DimensionTooLow { required: usize, actual: usize },
}

/// A pure simplicial complex given by its facets.
///
/// Facets are stored as sorted vertex tuples and the facet list itself is
/// sorted lexicographically, so two complexes with the same facet set compare
/// equal regardless of input order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Complex {
    dim: usize,
    facets: Vec<Vec<Vertex>>,
    vertices: Vec<Vertex>,
}

/// Result of [`Complex::check_closed_pseudomanifold`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PseudomanifoldReport {
    /// Ridges whose facet count differs from two, with the count.
    pub bad_ridges: Vec<(Vec<Vertex>, usize)>,
    /// Connected components of the facet adjacency graph.
    pub components: usize,
}

impl PseudomanifoldReport {
    pub fn passed(&self) -> bool {
        self.bad_ridges.is_empty() && self.components == 1
    }
}

/// Ridge -> list of (facet index, position of the vertex the ridge omits).
pub(crate) type RidgeMap = HashMap<Vec<Vertex>, Vec<(usize, usize)>>;

impl Complex {
    pub fn new<I, F>(facets: I) -> Result<Self, ComplexError>
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = Vertex>,
    {
        let mut out: Vec<Vec<Vertex>> = Vec::new();
        let mut expected = None;
        for facet in facets {
            let raw: Vec<Vertex> = facet.into_iter().collect();
            if raw.is_empty() {
                return Err(ComplexError::NonPure {
                    expected: expected.unwrap_or(0),
                    facet: raw,
                });
            }
            let size = *expected.get_or_insert(raw.len());
            if raw.len() != size {
                return Err(ComplexError::NonPure {
                    expected: size,
                    facet: raw,
                });
            }
            let mut sorted = raw.clone();
            sorted.sort_unstable();
            if sorted.windows(2).any(|w| w[0] == w[1]) {
                return Err(ComplexError::DegenerateFacet(raw));
            }
            out.push(sorted);
        }
        let Some(size) = expected else {
            return Err(ComplexError::Empty);
        };
        out.sort_unstable();
        if let Some(w) = out.windows(2).find(|w| w[0] == w[1]) {
            return Err(ComplexError::DuplicateFacet(w[0].clone()));
        }
        Ok(Self::from_sorted(size - 1, out))
    }

    /// Builds from facets that are already sorted, distinct and pure.
    pub(crate) fn from_sorted(dim: usize, mut facets: Vec<Vec<Vertex>>) -> Self {
        facets.sort_unstable();
        debug_assert!(facets.windows(2).all(|w| w[0] != w[1]));
        let vertices: BTreeSet<Vertex> = facets.iter().flatten().copied().collect();
        Self {
            dim,
            facets,
            vertices: vertices.into_iter().collect(),
        }
    }

    pub fn dimension(&self) -> usize {
        self.dim
    }

    pub fn facets(&self) -> &[Vec<Vertex>] {
        &self.facets
    }

    /// Sorted vertex list.
    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn max_vertex(&self) -> Vertex {
        *self.vertices.last().expect("complex is non-empty")
    }

    /// Index of a facet given in any vertex order.
    pub fn facet_index(&self, facet: &[Vertex]) -> Option<usize> {
        let mut sorted = facet.to_vec();
        sorted.sort_unstable();
        self.facets.binary_search(&sorted).ok()
    }

    pub(crate) fn ridge_map(&self) -> RidgeMap {
        let mut map: RidgeMap = HashMap::with_capacity(self.facets.len() * (self.dim + 1));
        for (fi, facet) in self.facets.iter().enumerate() {
            for pos in 0..facet.len() {
                let mut ridge = facet.clone();
                ridge.remove(pos);
                map.entry(ridge).or_default().push((fi, pos));
            }
        }
        map
    }

    /// Every ridge must lie in exactly two facets and the facet adjacency
    /// graph must be connected.
    pub fn check_closed_pseudomanifold(&self) -> PseudomanifoldReport {
        let ridges = self.ridge_map();
        let mut bad_ridges: Vec<(Vec<Vertex>, usize)> = ridges
            .iter()
            .filter(|(_, inc)| inc.len() != 2)
            .map(|(r, inc)| (r.clone(), inc.len()))
            .collect();
        bad_ridges.sort();

        let mut adjacency = vec![Vec::new(); self.facets.len()];
        for inc in ridges.values() {
            for a in inc {
                for b in inc {
                    if a.0 != b.0 {
                        adjacency[a.0].push(b.0);
                    }
                }
            }
        }
        let mut seen = vec![false; self.facets.len()];
        let mut components = 0;
        for start in 0..self.facets.len() {
            if seen[start] {
                continue;
            }
            components += 1;
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            while let Some(f) = queue.pop_front() {
                for &g in &adjacency[f] {
                    if !seen[g] {
                        seen[g] = true;
                        queue.push_back(g);
                    }
                }
            }
        }
        PseudomanifoldReport {
            bad_ridges,
            components,
        }
    }

    /// Number of faces in each dimension `0..=n`.
    pub fn face_counts(&self) -> Vec<usize> {
        let mut faces: Vec<HashSet<Vec<Vertex>>> = vec![HashSet::new(); self.dim + 1];
        for facet in &self.facets {
            let k = facet.len();
            for mask in 1u64..(1u64 << k) {
                let face: Vec<Vertex> = (0..k)
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| facet[i])
                    .collect();
                let d = face.len() - 1;
                faces[d].insert(face);
            }
        }
        faces.iter().map(HashSet::len).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.face_counts()
            .iter()
            .enumerate()
            .map(|(d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }

    /// Facets containing `v` with `v` removed.
    pub fn vertex_link(&self, v: Vertex) -> Result<Complex, ComplexError> {
        if !self.contains_vertex(v) {
            return Err(ComplexError::UnknownVertex(v));
        }
        if self.dim == 0 {
            return Err(ComplexError::DimensionTooLow {
                required: 1,
                actual: 0,
            });
        }
        let facets = self
            .facets
            .iter()
            .filter(|f| f.binary_search(&v).is_ok())
            .map(|f| f.iter().copied().filter(|&x| x != v).collect())
            .collect();
        Ok(Complex::from_sorted(self.dim - 1, facets))
    }

    /// Facets not containing `v`.
    pub fn deletion(&self, v: Vertex) -> Vec<Vec<Vertex>> {
        self.facets
            .iter()
            .filter(|f| f.binary_search(&v).is_err())
            .cloned()
            .collect()
    }

    /// Replaces `facet` by the cone from `w` over its boundary.
    pub fn stellar_subdivide_facet(
        &self,
        facet: &[Vertex],
        w: Vertex,
    ) -> Result<Complex, ComplexError> {
        let idx = self
            .facet_index(facet)
            .ok_or_else(|| ComplexError::FacetNotFound(facet.to_vec()))?;
        if self.contains_vertex(w) {
            return Err(ComplexError::VertexAlreadyPresent(w));
        }
        let mut facets = self.facets.clone();
        let old = facets.swap_remove(idx);
        for pos in 0..old.len() {
            let mut f = old.clone();
            f[pos] = w;
            f.sort_unstable();
            facets.push(f);
        }
        Ok(Complex::from_sorted(self.dim, facets))
    }

    /// Applies a vertex renaming. The map must be injective on the vertex set.
    pub fn relabel_vertices(&self, map: impl Fn(Vertex) -> Vertex) -> Complex {
        let facets = self
            .facets
            .iter()
            .map(|f| {
                let mut g: Vec<Vertex> = f.iter().map(|&v| map(v)).collect();
                g.sort_unstable();
                g
            })
            .collect();
        Complex::from_sorted(self.dim, facets)
    }
}
