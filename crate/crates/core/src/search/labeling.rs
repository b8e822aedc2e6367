//! Backtracking search for a colouring of prescribed degree.
//!
//! Colourings are enumerated up to permutation of the colours: vertices are
//! visited in a fixed order (starting with the vertices of the first facet)
//! and each vertex may use any colour already used or the smallest unused
//! one. Since permuting colours multiplies the degree by the sign of the
//! permutation, a representative of degree `-d` is turned into a degree-`d`
//! witness by swapping colours 1 and 2.
//!
//! A partial colouring is abandoned when the completed facets leave a deficit
//! `sum_j |e - S_j|` larger than the number of open facets for both
//! `e = d` and `e = -d`, where `S_j` is the signed count over target facet `j`
//! so far: each open facet can move exactly one `S_j` by one.

use super::SearchError;
use crate::degree::{sign_of_colors, Color, Labeling};
use crate::simplicial::{Complex, OrientedComplex, Vertex};

/// Outcome of a labelling search on one complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelingSearch {
    pub witness: Option<Labeling>,
    /// Complete colourings reached (after pruning and symmetry reduction).
    pub labelings_examined: u64,
}

/// First colouring of degree exactly `d` in the search order, if any.
pub fn exists_labeling(complex: &Complex, d: i64) -> Result<Option<Labeling>, SearchError> {
    Ok(search_labeling(complex, d)?.witness)
}

pub fn search_labeling(complex: &Complex, d: i64) -> Result<LabelingSearch, SearchError> {
    let oriented = OrientedComplex::orient(complex.clone())?;
    let n = complex.dimension();
    if d == 0 {
        let labeling = Labeling::new(n, complex.vertices().iter().map(|&v| (v, 1)))?;
        return Ok(LabelingSearch {
            witness: Some(labeling),
            labelings_examined: 1,
        });
    }
    let mut search = Backtrack::new(&oriented, d.unsigned_abs() as i64);
    let found = search.run(0);
    let examined = search.leaves;
    let witness = match found {
        None => None,
        Some(sign) => {
            let swap = sign != d.signum();
            let colors = search.order.iter().zip(&search.colors).map(|(&vi, &c)| {
                let c = if swap && c <= 2 { 3 - c } else { c };
                (complex.vertices()[vi], c as Color)
            });
            Some(Labeling::new(n, colors)?)
        }
    };
    Ok(LabelingSearch {
        witness,
        labelings_examined: examined,
    })
}

struct Backtrack {
    target: i64,
    color_count: u8,
    /// Vertex indices in visiting order.
    order: Vec<usize>,
    /// Colour of `order[p]`.
    colors: Vec<u8>,
    /// Facets completed when position `p` is coloured.
    completes: Vec<Vec<usize>>,
    /// Facet vertex positions (in visiting order), following sorted vertex order.
    facet_positions: Vec<Vec<usize>>,
    facet_signs: Vec<i8>,
    sums: Vec<i64>,
    open: usize,
    leaves: u64,
    scratch: Vec<Color>,
}

impl Backtrack {
    fn new(oriented: &OrientedComplex, target: i64) -> Self {
        let complex = oriented.complex();
        let nv = complex.vertex_count();
        let index = |v: Vertex| complex.vertices().binary_search(&v).expect("vertex");
        let facets: Vec<Vec<usize>> = complex
            .facets()
            .iter()
            .map(|f| f.iter().map(|&v| index(v)).collect())
            .collect();

        // Greedy order: first facet, then whichever vertex closes the most
        // facets (ties: most facets touched, then smallest index).
        let mut placed = vec![false; nv];
        let mut order: Vec<usize> = Vec::with_capacity(nv);
        for &v in &facets[0] {
            placed[v] = true;
            order.push(v);
        }
        let mut missing: Vec<usize> = facets
            .iter()
            .map(|f| f.iter().filter(|&&v| !placed[v]).count())
            .collect();
        while order.len() < nv {
            let best = (0..nv)
                .filter(|&v| !placed[v])
                .max_by_key(|&v| {
                    let mut closes = 0usize;
                    let mut touches = 0usize;
                    for (fi, f) in facets.iter().enumerate() {
                        if f.contains(&v) {
                            if missing[fi] == 1 {
                                closes += 1;
                            }
                            if missing[fi] < f.len() {
                                touches += 1;
                            }
                        }
                    }
                    (closes, touches, std::cmp::Reverse(v))
                })
                .expect("an unplaced vertex remains");
            placed[best] = true;
            order.push(best);
            for (fi, f) in facets.iter().enumerate() {
                if f.contains(&best) {
                    missing[fi] -= 1;
                }
            }
        }

        let mut position = vec![0usize; nv];
        for (p, &v) in order.iter().enumerate() {
            position[v] = p;
        }
        let facet_positions: Vec<Vec<usize>> = facets
            .iter()
            .map(|f| f.iter().map(|&v| position[v]).collect())
            .collect();
        let mut completes = vec![Vec::new(); nv];
        for (fi, f) in facet_positions.iter().enumerate() {
            let last = *f.iter().max().expect("non-empty facet");
            completes[last].push(fi);
        }

        let color_count = complex.dimension() as u8 + 2;
        Self {
            target,
            color_count,
            order,
            colors: vec![0; nv],
            completes,
            facet_positions,
            facet_signs: oriented.signs().to_vec(),
            sums: vec![0; color_count as usize + 1],
            open: complex.facet_count(),
            leaves: 0,
            scratch: Vec::with_capacity(complex.dimension() + 1),
        }
    }

    fn feasible(&self, e: i64) -> bool {
        let deficit: i64 = self.sums[1..].iter().map(|s| (e - s).abs()).sum();
        deficit <= self.open as i64
    }

    /// Returns the sign of the degree found (+1 for `target`, -1 for
    /// `-target`), leaving the colouring in `self.colors`.
    fn run(&mut self, p: usize) -> Option<i64> {
        if p == self.order.len() {
            self.leaves += 1;
            let s = self.sums[1];
            if self.sums[1..].iter().all(|&x| x == s) && s.abs() == self.target {
                return Some(s.signum());
            }
            return None;
        }
        let used = self.colors[..p].iter().copied().max().unwrap_or(0);
        let remaining = self.order.len() - p;
        let top = (used + 1).min(self.color_count);
        for c in 1..=top {
            // every colour must still be reachable
            let used_after = used.max(c);
            if ((self.color_count - used_after) as usize) > remaining - 1 {
                continue;
            }
            self.colors[p] = c;
            let mut applied: Vec<(usize, i8)> = Vec::new();
            for &fi in &self.completes[p] {
                self.scratch.clear();
                for &q in &self.facet_positions[fi] {
                    self.scratch.push(self.colors[q] as Color);
                }
                let fs = sign_of_colors(&self.scratch, self.color_count as Color);
                if let Some(t) = fs.target {
                    let s = fs.sign * self.facet_signs[fi];
                    self.sums[t as usize] += s as i64;
                    applied.push((t as usize, s));
                }
            }
            self.open -= self.completes[p].len();
            let alive = self.feasible(self.target) || self.feasible(-self.target);
            if alive {
                if let Some(sign) = self.run(p + 1) {
                    return Some(sign);
                }
            }
            self.open += self.completes[p].len();
            for (t, s) in applied {
                self.sums[t] -= s as i64;
            }
        }
        self.colors[p] = 0;
        None
    }
}
