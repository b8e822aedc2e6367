mod common;

use std::collections::BTreeSet;

use spheredeg::degree::{degree, LabeledSphere, Labeling};
use spheredeg::search::{enumerate_spheres, exists_labeling};
use spheredeg::simplicial::{canonical_form, Complex, OrientationError, OrientedComplex};

#[test]
fn rp2_has_no_coherent_orientation() {
    let facets = common::rp2();
    assert_eq!(common::brute_orientation(&facets), None);
    let c = Complex::new(facets).unwrap();
    assert!(c.check_closed_pseudomanifold().passed());
    assert!(matches!(
        OrientedComplex::orient(c),
        Err(OrientationError::NonOrientable(_))
    ));
}

#[test]
fn orientation_matches_brute_force() {
    for v in 4..=7 {
        for c in enumerate_spheres(2, v).unwrap() {
            let brute = common::brute_orientation(c.facets()).unwrap();
            let oriented = OrientedComplex::orient(c).unwrap();
            assert_eq!(oriented.signs(), brute.as_slice());
        }
    }
}

#[test]
fn octahedron_and_stacked_six_vertex_spheres_differ() {
    let oct = Complex::new([
        [1, 2, 3],
        [1, 3, 4],
        [1, 4, 5],
        [1, 2, 5],
        [6, 2, 3],
        [6, 3, 4],
        [6, 4, 5],
        [6, 2, 5],
    ])
    .unwrap();
    let stacked = Complex::new([
        [1, 2, 4],
        [1, 3, 4],
        [2, 3, 4],
        [1, 2, 5],
        [1, 3, 5],
        [2, 3, 6],
        [2, 5, 6],
        [3, 5, 6],
    ])
    .unwrap();
    assert!(stacked.check_closed_pseudomanifold().passed());
    assert_ne!(canonical_form(&oct), canonical_form(&stacked));
    let both: BTreeSet<_> = enumerate_spheres(2, 6)
        .unwrap()
        .iter()
        .map(canonical_form)
        .collect();
    assert_eq!(
        both,
        BTreeSet::from([canonical_form(&oct), canonical_form(&stacked)])
    );
}

#[test]
fn enumeration_matches_flip_graph() {
    for v in 4..=8 {
        let ours: BTreeSet<_> = enumerate_spheres(2, v as usize)
            .unwrap()
            .iter()
            .map(|c| common::brute_canonical(&common::to_facets(c)))
            .collect();
        let oracle = common::flip_graph_classes(v);
        assert_eq!(ours.len(), enumerate_spheres(2, v as usize).unwrap().len());
        assert_eq!(ours, oracle, "v = {v}");
    }
}

#[test]
fn canonical_form_agrees_with_brute_force() {
    // same key iff same brute-force class, over all classes and relabelled copies
    let mut pairs = Vec::new();
    for v in 4..=8 {
        for c in enumerate_spheres(2, v).unwrap() {
            let top = c.max_vertex();
            let shuffled = c.relabel_vertices(|x| top + 1 - x);
            pairs.push(c);
            pairs.push(shuffled);
        }
    }
    for a in &pairs {
        for b in &pairs {
            let same_key = canonical_form(a) == canonical_form(b);
            let same_class = common::brute_canonical(&common::to_facets(a))
                == common::brute_canonical(&common::to_facets(b));
            assert_eq!(same_key, same_class);
        }
    }
}

#[test]
fn pruned_search_matches_exhaustive_colourings() {
    let mut cases = vec![Complex::new([[1, 2], [2, 3], [3, 4], [4, 5], [5, 6], [1, 6]]).unwrap()];
    for v in 4..=6 {
        cases.extend(enumerate_spheres(2, v).unwrap());
    }
    for c in &cases {
        let achievable = common::achievable_degrees(c);
        for d in -4..=4 {
            let found = exists_labeling(c, d).unwrap();
            assert_eq!(
                found.is_some(),
                achievable.contains(&d),
                "{:?} d={d}",
                c.facets()
            );
            if let Some(l) = found {
                let s = LabeledSphere::new(OrientedComplex::orient(c.clone()).unwrap(), l).unwrap();
                assert_eq!(degree(&s).unwrap().degree, d);
            }
        }
    }
}

#[test]
fn degree_engine_matches_direct_count() {
    for v in 4..=6 {
        for c in enumerate_spheres(2, v).unwrap() {
            let oriented = OrientedComplex::orient(c.clone()).unwrap();
            let signs = oriented.signs().to_vec();
            for col in common::all_colorings(c.vertices(), 4).step_by(7) {
                let expected = common::brute_degree(c.facets(), &signs, &col);
                let labeling = Labeling::new(2, col).unwrap();
                let s = LabeledSphere::new(oriented.clone(), labeling).unwrap();
                assert_eq!(degree(&s).unwrap().degree, expected);
            }
        }
    }
}
