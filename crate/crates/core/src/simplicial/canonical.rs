//! Canonical labelling of pure complexes up to vertex renaming.
//!
//! Vertices are first partitioned by an iterated incidence refinement that
//! starts from vertex degrees (number of facets through a vertex). When the
//! refined partition is not discrete the search individualises each vertex of
//! the first non-trivial cell in turn, refines again and recurses. Each leaf is
//! a bijection onto `0..N`; the lexicographically smallest relabelled facet list
//! over all leaves is the canonical form.

use super::{Complex, Vertex};

/// Canonical key: equal for two complexes iff they differ by a vertex renaming.
pub fn canonical_form(complex: &Complex) -> Vec<u8> {
    Canonizer::new(complex).run().0
}

/// Canonical key plus the complex relabelled onto vertices `1..=N` in
/// canonical order.
pub fn canonical_relabeling(complex: &Complex) -> (Vec<u8>, Complex) {
    let (key, facets) = Canonizer::new(complex).run();
    let facets = facets
        .into_iter()
        .map(|f| f.into_iter().map(|v| v + 1).collect())
        .collect();
    (key, Complex::from_sorted(complex.dimension(), facets))
}

struct Canonizer {
    dim: usize,
    facets: Vec<Vec<usize>>,
    incidence: Vec<Vec<usize>>,
    best: Option<Vec<Vec<Vertex>>>,
}

impl Canonizer {
    fn new(complex: &Complex) -> Self {
        let vertices = complex.vertices();
        let index = |v: Vertex| vertices.binary_search(&v).expect("vertex of complex");
        let facets: Vec<Vec<usize>> = complex
            .facets()
            .iter()
            .map(|f| f.iter().map(|&v| index(v)).collect())
            .collect();
        let mut incidence = vec![Vec::new(); vertices.len()];
        for (fi, f) in facets.iter().enumerate() {
            for &v in f {
                incidence[v].push(fi);
            }
        }
        Self {
            dim: complex.dimension(),
            facets,
            incidence,
            best: None,
        }
    }

    fn run(mut self) -> (Vec<u8>, Vec<Vec<Vertex>>) {
        let start = self.refine(vec![0; self.incidence.len()]);
        self.search(start);
        let best = self.best.take().expect("at least one leaf");
        let n = self.incidence.len() as u32;
        let mut key = Vec::with_capacity(8 + best.len() * (self.dim + 1) * 4);
        key.extend_from_slice(&(self.dim as u32).to_le_bytes());
        key.extend_from_slice(&n.to_le_bytes());
        for f in &best {
            for &v in f {
                key.extend_from_slice(&v.to_le_bytes());
            }
        }
        (key, best)
    }

    /// Splits colour classes by the multiset of colour tuples of the facets
    /// through each vertex, until stable. Colours stay ordered: a vertex with
    /// a smaller colour before refinement keeps a smaller colour after.
    fn refine(&self, mut colors: Vec<u32>) -> Vec<u32> {
        let n = colors.len();
        let mut classes = count_classes(&colors);
        loop {
            let mut sigs: Vec<(u32, Vec<Vec<u32>>, usize)> = (0..n)
                .map(|v| {
                    let mut around: Vec<Vec<u32>> = self.incidence[v]
                        .iter()
                        .map(|&fi| {
                            let mut t: Vec<u32> = self.facets[fi]
                                .iter()
                                .filter(|&&u| u != v)
                                .map(|&u| colors[u])
                                .collect();
                            t.sort_unstable();
                            t
                        })
                        .collect();
                    around.sort_unstable();
                    (colors[v], around, v)
                })
                .collect();
            sigs.sort_unstable();
            let mut next = vec![0u32; n];
            let mut rank = 0u32;
            for i in 0..n {
                if i > 0 && (sigs[i].0 != sigs[i - 1].0 || sigs[i].1 != sigs[i - 1].1) {
                    rank += 1;
                }
                next[sigs[i].2] = rank;
            }
            let now = rank as usize + 1;
            colors = next;
            if now == classes {
                return colors;
            }
            classes = now;
        }
    }

    fn search(&mut self, colors: Vec<u32>) {
        let n = colors.len();
        let mut sizes = vec![0usize; n];
        for &c in &colors {
            sizes[c as usize] += 1;
        }
        let Some(target) = sizes.iter().position(|&s| s > 1) else {
            self.leaf(&colors);
            return;
        };
        let target = target as u32;
        let members: Vec<usize> = (0..n).filter(|&v| colors[v] == target).collect();
        for &v in &members {
            let individualised: Vec<u32> = colors
                .iter()
                .enumerate()
                .map(|(u, &c)| {
                    if c > target || (c == target && u != v) {
                        c + 1
                    } else {
                        c
                    }
                })
                .collect();
            let refined = self.refine(individualised);
            self.search(refined);
        }
    }

    fn leaf(&mut self, labels: &[u32]) {
        let mut relabelled: Vec<Vec<Vertex>> = self
            .facets
            .iter()
            .map(|f| {
                let mut g: Vec<Vertex> = f.iter().map(|&v| labels[v]).collect();
                g.sort_unstable();
                g
            })
            .collect();
        relabelled.sort_unstable();
        match &self.best {
            Some(best) if *best <= relabelled => {}
            _ => self.best = Some(relabelled),
        }
    }
}

fn count_classes(colors: &[u32]) -> usize {
    let mut seen: Vec<u32> = colors.to_vec();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}
