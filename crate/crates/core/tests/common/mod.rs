//! Brute-force reference implementations used to cross-check the library.
//! Everything here is deliberately naive and shares no code with the
//! algorithms under test beyond the `Complex` container.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use spheredeg::simplicial::{Complex, Vertex};

pub type Facets = BTreeSet<Vec<Vertex>>;

fn sorted(mut f: Vec<Vertex>) -> Vec<Vertex> {
    f.sort_unstable();
    f
}

fn vertex_degrees(facets: &Facets) -> BTreeMap<Vertex, usize> {
    let mut edges: BTreeSet<(Vertex, Vertex)> = BTreeSet::new();
    for f in facets {
        for i in 0..f.len() {
            for j in i + 1..f.len() {
                edges.insert((f[i], f[j]));
            }
        }
    }
    let mut deg = BTreeMap::new();
    for (a, b) in edges {
        *deg.entry(a).or_insert(0) += 1;
        *deg.entry(b).or_insert(0) += 1;
    }
    deg
}

fn permutations(items: &[Vertex]) -> Vec<Vec<Vertex>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, head);
            out.push(p);
        }
    }
    out
}

/// Lexicographically smallest relabelled facet list over every bijection
/// onto `1..=v` that sends higher-degree vertices to smaller labels.
pub fn brute_canonical(facets: &Facets) -> Vec<Vec<Vertex>> {
    let deg = vertex_degrees(facets);
    let mut classes: BTreeMap<std::cmp::Reverse<usize>, Vec<Vertex>> = BTreeMap::new();
    for (&v, &d) in &deg {
        classes.entry(std::cmp::Reverse(d)).or_default().push(v);
    }
    let class_perms: Vec<Vec<Vec<Vertex>>> = classes.values().map(|c| permutations(c)).collect();
    let mut best: Option<Vec<Vec<Vertex>>> = None;
    let mut idx = vec![0usize; class_perms.len()];
    loop {
        let mut map = BTreeMap::new();
        let mut next = 1;
        for (k, perms) in class_perms.iter().enumerate() {
            for &v in &perms[idx[k]] {
                map.insert(v, next);
                next += 1;
            }
        }
        let mut relabelled: Vec<Vec<Vertex>> = facets
            .iter()
            .map(|f| sorted(f.iter().map(|v| map[v]).collect()))
            .collect();
        relabelled.sort();
        if best.as_ref().is_none_or(|b| relabelled < *b) {
            best = Some(relabelled);
        }
        // odometer over the per-class permutations
        let mut k = 0;
        loop {
            if k == idx.len() {
                return best.expect("at least one labelling");
            }
            idx[k] += 1;
            if idx[k] < class_perms[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// Stacked sphere on `v` vertices: tetrahedron boundary with facet
/// `{1,2,3}`-side subdivisions.
fn stacked(v: Vertex) -> Facets {
    let mut facets: Facets = [[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]]
        .into_iter()
        .map(|f| f.to_vec())
        .collect();
    for w in 5..=v {
        let target = vec![1, 2, w - 1];
        assert!(facets.remove(&target));
        facets.insert(vec![1, 2, w]);
        facets.insert(vec![1, w - 1, w]);
        facets.insert(vec![2, w - 1, w]);
    }
    facets
}

/// Every edge flip of a 2-sphere triangulation that keeps it simplicial.
fn flips(facets: &Facets) -> Vec<Facets> {
    let mut edge_faces: BTreeMap<(Vertex, Vertex), Vec<Vertex>> = BTreeMap::new();
    for f in facets {
        for (i, j, k) in [(0, 1, 2), (0, 2, 1), (1, 2, 0)] {
            edge_faces.entry((f[i], f[j])).or_default().push(f[k]);
        }
    }
    let mut out = Vec::new();
    for (&(a, b), opp) in &edge_faces {
        let (c, d) = (opp[0], opp[1]);
        let cd = (c.min(d), c.max(d));
        if edge_faces.contains_key(&cd) {
            continue;
        }
        let mut g = facets.clone();
        g.remove(&sorted(vec![a, b, c]));
        g.remove(&sorted(vec![a, b, d]));
        g.insert(sorted(vec![a, c, d]));
        g.insert(sorted(vec![b, c, d]));
        out.push(g);
    }
    out
}

/// Isomorphism classes of 2-sphere triangulations on `v` vertices by breadth
/// first search of the edge-flip graph, which is connected for each `v`.
pub fn flip_graph_classes(v: Vertex) -> BTreeSet<Vec<Vec<Vertex>>> {
    let start = brute_canonical(&stacked(v));
    let mut seen = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(cur) = queue.pop_front() {
        let facets: Facets = cur.into_iter().collect();
        for g in flips(&facets) {
            let key = brute_canonical(&g);
            if seen.insert(key.clone()) {
                queue.push_back(key);
            }
        }
    }
    seen
}

pub fn to_facets(c: &Complex) -> Facets {
    c.facets().iter().cloned().collect()
}

fn inversions(seq: &[Vertex]) -> usize {
    let mut count = 0;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                count += 1;
            }
        }
    }
    count
}

/// Per-facet signs (relative to sorted order, first facet positive) of a
/// coherent orientation, found by trying every assignment.
pub fn brute_orientation(facets: &[Vec<Vertex>]) -> Option<Vec<i8>> {
    let m = facets.len();
    assert!(m <= 20, "brute force over 2^{m} assignments");
    // induced boundary: facet f with sign s gives ridge f\{f[i]} the sign s*(-1)^i
    let mut ridges: BTreeMap<Vec<Vertex>, Vec<(usize, i8)>> = BTreeMap::new();
    for (k, f) in facets.iter().enumerate() {
        for i in 0..f.len() {
            let mut r = f.clone();
            r.remove(i);
            ridges
                .entry(r)
                .or_default()
                .push((k, if i % 2 == 0 { 1 } else { -1 }));
        }
    }
    'mask: for mask in 0u32..(1 << (m - 1)) {
        let signs: Vec<i8> = (0..m)
            .map(|k| {
                if k > 0 && mask >> (k - 1) & 1 == 1 {
                    -1
                } else {
                    1
                }
            })
            .collect();
        for incident in ridges.values() {
            let total: i32 = incident.iter().map(|&(k, s)| (s * signs[k]) as i32).sum();
            if total != 0 {
                continue 'mask;
            }
        }
        return Some(signs);
    }
    None
}

/// Degree of a coloured oriented 2-sphere (or 1-sphere) as the signed count
/// of facets coloured exactly `1..=n+1`, i.e. preimages of the target facet
/// that omits the top colour.
pub fn brute_degree(facets: &[Vec<Vertex>], signs: &[i8], colors: &BTreeMap<Vertex, u32>) -> i64 {
    let top = facets[0].len() as u32 + 1;
    let mut total = 0i64;
    for (f, &s) in facets.iter().zip(signs) {
        let cs: Vec<Vertex> = f.iter().map(|v| colors[v]).collect();
        let set: BTreeSet<u32> = cs.iter().copied().collect();
        if set.len() == cs.len() && !set.contains(&top) {
            let p = if inversions(&cs).is_multiple_of(2) {
                1
            } else {
                -1
            };
            total += (p * s) as i64;
        }
    }
    total
}

/// Every colouring of the vertices by `1..=k`, in odometer order.
pub fn all_colorings(
    vertices: &[Vertex],
    k: u32,
) -> impl Iterator<Item = BTreeMap<Vertex, u32>> + '_ {
    let total = (k as u64).pow(vertices.len() as u32);
    (0..total).map(move |mut code| {
        vertices
            .iter()
            .map(|&v| {
                let c = (code % k as u64) as u32 + 1;
                code /= k as u64;
                (v, c)
            })
            .collect()
    })
}

/// Degrees achieved by some colouring, by exhaustion.
pub fn achievable_degrees(c: &Complex) -> BTreeSet<i64> {
    let signs = brute_orientation(c.facets()).expect("orientable");
    let k = c.dimension() as u32 + 2;
    all_colorings(c.vertices(), k)
        .map(|col| brute_degree(c.facets(), &signs, &col))
        .collect()
}

pub fn rp2() -> Vec<Vec<Vertex>> {
    [
        [1, 2, 3],
        [1, 3, 4],
        [1, 4, 5],
        [1, 5, 6],
        [1, 2, 6],
        [2, 3, 5],
        [2, 4, 5],
        [2, 4, 6],
        [3, 4, 6],
        [3, 5, 6],
    ]
    .into_iter()
    .map(|f| f.to_vec())
    .collect()
}
