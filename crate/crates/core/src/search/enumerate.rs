//! Isomorphism classes of small sphere triangulations.
//!
//! Triangulated 2-spheres on `v` vertices are generated from those on `v - 1`
//! by vertex splitting (the inverse of contracting an edge that lies in no
//! separating triangle), starting from the boundary of the tetrahedron.
//! Candidates are deduplicated by their canonical form and emitted relabelled
//! onto `1..=v`, sorted by canonical key.

use std::collections::BTreeMap;

use super::SearchError;
use crate::par::{map_ordered, Execution};
use crate::simplicial::{canonical_relabeling, Complex, Vertex};

/// Largest vertex count accepted for 2-sphere enumeration.
pub const MAX_S2_VERTICES: usize = 12;

/// All isomorphism classes of triangulated `n`-spheres with `v` vertices,
/// for `n` in {1, 2}.
pub fn enumerate_spheres(n: usize, v: usize) -> Result<Vec<Complex>, SearchError> {
    enumerate_spheres_with(n, v, Execution::Sequential)
}

pub fn enumerate_spheres_with(
    n: usize,
    v: usize,
    exec: Execution,
) -> Result<Vec<Complex>, SearchError> {
    match n {
        1 => {
            if v < 3 {
                return Err(SearchError::TooFewVertices { n, v });
            }
            Ok(vec![cycle(v)])
        }
        2 => {
            let mut levels = S2Levels::new(exec);
            Ok(levels.level(v)?.to_vec())
        }
        _ => Err(SearchError::UnsupportedDimension(n)),
    }
}

pub(crate) fn cycle(v: usize) -> Complex {
    let v = v as Vertex;
    Complex::new((1..=v).map(|i| [i, i % v + 1])).expect("cycle is a valid complex")
}

/// Incrementally built 2-sphere classes, one level per vertex count.
#[derive(Debug, Clone)]
pub struct S2Levels {
    exec: Execution,
    levels: Vec<Vec<Complex>>,
}

impl S2Levels {
    pub fn new(exec: Execution) -> Self {
        let tetra = Complex::new([[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]])
            .expect("tetrahedron boundary");
        Self {
            exec,
            levels: vec![vec![tetra]],
        }
    }

    /// Classes with exactly `v` vertices.
    pub fn level(&mut self, v: usize) -> Result<&[Complex], SearchError> {
        if v < 4 {
            return Err(SearchError::TooFewVertices { n: 2, v });
        }
        if v > MAX_S2_VERTICES {
            return Err(SearchError::BudgetTooLarge {
                n: 2,
                requested: v,
                limit: MAX_S2_VERTICES,
            });
        }
        while self.levels.len() <= v - 4 {
            let next = next_level(self.levels.last().expect("seeded"), self.exec);
            self.levels.push(next);
        }
        Ok(&self.levels[v - 4])
    }
}

fn next_level(parents: &[Complex], exec: Execution) -> Vec<Complex> {
    let per_parent = map_ordered(exec, parents, |p| {
        let mut local: BTreeMap<Vec<u8>, Complex> = BTreeMap::new();
        for child in vertex_splits(p) {
            let (key, canon) = canonical_relabeling(&child);
            local.entry(key).or_insert(canon);
        }
        local
    });
    let mut all: BTreeMap<Vec<u8>, Complex> = BTreeMap::new();
    for local in per_parent {
        for (key, c) in local {
            all.entry(key).or_insert(c);
        }
    }
    all.into_values().collect()
}

/// Neighbours of `u` in cyclic order around its (cycle) link.
pub(crate) fn link_cycle(c: &Complex, u: Vertex) -> Vec<Vertex> {
    let mut adjacent: BTreeMap<Vertex, Vec<Vertex>> = BTreeMap::new();
    for f in c.facets().iter().filter(|f| f.contains(&u)) {
        let others: Vec<Vertex> = f.iter().copied().filter(|&x| x != u).collect();
        adjacent.entry(others[0]).or_default().push(others[1]);
        adjacent.entry(others[1]).or_default().push(others[0]);
    }
    let start = *adjacent.keys().next().expect("vertex has a link");
    let mut order = vec![start];
    let mut prev = start;
    let mut cur = adjacent[&start][0];
    while cur != start {
        order.push(cur);
        let nbrs = &adjacent[&cur];
        let next = if nbrs[0] == prev { nbrs[1] } else { nbrs[0] };
        prev = cur;
        cur = next;
    }
    order
}

/// Every vertex split of a 2-sphere triangulation. Splitting `u` along
/// neighbours `a_i`, `a_j` hands the arc `a_i..a_j` of its link to a new
/// vertex `u'` and adds the triangles `u u' a_i` and `u u' a_j`.
pub fn vertex_splits(c: &Complex) -> Vec<Complex> {
    let fresh = c.max_vertex() + 1;
    let mut out = Vec::new();
    for &u in c.vertices() {
        let ring = link_cycle(c, u);
        let k = ring.len();
        for i in 0..k {
            for j in i + 1..k {
                let arc: Vec<[Vertex; 2]> = (i..j)
                    .map(|m| {
                        let (a, b) = (ring[m], ring[m + 1]);
                        [a.min(b), a.max(b)]
                    })
                    .collect();
                let mut facets: Vec<Vec<Vertex>> = Vec::with_capacity(c.facet_count() + 2);
                for f in c.facets() {
                    if f.contains(&u) {
                        let others: Vec<Vertex> = f.iter().copied().filter(|&x| x != u).collect();
                        if arc.contains(&[others[0], others[1]]) {
                            let mut g = others;
                            g.push(fresh);
                            g.sort_unstable();
                            facets.push(g);
                            continue;
                        }
                    }
                    facets.push(f.clone());
                }
                for a in [ring[i], ring[j]] {
                    let mut g = vec![u, fresh, a];
                    g.sort_unstable();
                    facets.push(g);
                }
                out.push(Complex::from_sorted(2, facets));
            }
        }
    }
    out
}
