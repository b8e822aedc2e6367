use proptest::prelude::*;
use proptest::sample::SizeRange;

use spheredeg::constructions::{
    construct, first_insertable_facet, insertion_step, one_point_suspension,
    ConstructionCertificate,
};
use spheredeg::degree::{
    degree, degree_report, link_reduction, permutation_sign, relabel, reverse_orientation,
    LabeledSphere, Labeling,
};
use spheredeg::search::enumerate_spheres;
use spheredeg::simplicial::{canonical_form, Complex, OrientedComplex, Vertex};

fn certificate() -> impl Strategy<Value = ConstructionCertificate> {
    (1usize..=5, -9i64..=9).prop_map(|(n, d)| construct(n, d).unwrap())
}

fn color_permutation(k: usize) -> impl Strategy<Value = Vec<u32>> {
    Just((1..=k as u32).collect::<Vec<_>>()).prop_shuffle()
}

fn vertex_shuffle(c: &Complex, order: &[usize]) -> Complex {
    let vs = c.vertices();
    let image = |v: Vertex| {
        let i = vs.binary_search(&v).unwrap();
        vs[order[i] % vs.len()] + 100
    };
    c.relabel_vertices(image)
}

fn s2_class() -> impl Strategy<Value = Complex> {
    let all: Vec<Complex> = (4..=8)
        .flat_map(|v| enumerate_spheres(2, v).unwrap())
        .collect();
    proptest::sample::select(all)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonical_form_ignores_vertex_names(c in s2_class(), seed in any::<u64>()) {
        let mut order: Vec<usize> = (0..c.vertex_count()).collect();
        // deterministic shuffle from the seed
        let mut s = seed;
        for i in (1..order.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            order.swap(i, (s >> 33) as usize % (i + 1));
        }
        let shuffled = vertex_shuffle(&c, &order);
        prop_assert_eq!(canonical_form(&c), canonical_form(&shuffled));
    }

    #[test]
    fn relabel_and_reverse_sign_laws(cert in certificate(), perm in color_permutation(7)) {
        let s = &cert.labeled;
        let k = s.dimension() + 2;
        let perm: Vec<u32> = perm.into_iter().filter(|&c| c as usize <= k).collect();
        let d = degree(s).unwrap().degree;
        let sign = permutation_sign(&perm) as i64;
        let relabelled = relabel(s, &perm).unwrap();
        prop_assert_eq!(degree(&relabelled).unwrap().degree, sign * d);
        let reversed = reverse_orientation(s);
        prop_assert_eq!(degree(&reversed).unwrap().degree, -d);
        let a = reverse_orientation(&relabelled);
        let b = relabel(&reversed, &perm).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn suspension_keeps_degree_and_link_recovers_it(cert in certificate(), pick in any::<prop::sample::Index>()) {
        let vs = cert.labeled.complex().vertices();
        let pivot = vs[pick.index(vs.len())];
        let up = one_point_suspension(&cert, pivot).unwrap();
        up.verify().unwrap();
        prop_assert_eq!(up.dimension(), cert.dimension() + 1);
        prop_assert_eq!(up.labeled.vertex_count(), cert.labeled.vertex_count() + 1);
        let apex = up.labeled.complex().max_vertex();
        let down = link_reduction(&up.labeled, apex).unwrap();
        prop_assert_eq!(down.complex(), cert.labeled.complex());
        prop_assert_eq!(degree(&down).unwrap().degree, cert.claimed_degree);
    }

    #[test]
    fn insertion_adds_n_plus_two_vertices_and_n_degree(cert in certificate()) {
        prop_assume!(cert.dimension() >= 2 && cert.claimed_degree > 0);
        let facet = first_insertable_facet(&cert.labeled).unwrap();
        let next = insertion_step(&cert, &facet).unwrap();
        let n = cert.dimension();
        prop_assert_eq!(next.labeled.vertex_count(), cert.labeled.vertex_count() + n + 2);
        prop_assert_eq!(degree(&next.labeled).unwrap().degree, cert.claimed_degree + n as i64);
        next.verify_sphere().unwrap();
    }

    #[test]
    fn per_target_counts_agree_for_any_colouring(
        c in s2_class(),
        colors in prop::collection::vec(1u32..=4, SizeRange::from(8)),
    ) {
        let labeling = Labeling::new(2, c.vertices().iter().zip(&colors).map(|(&v, &k)| (v, k))).unwrap();
        let s = LabeledSphere::new(OrientedComplex::orient(c).unwrap(), labeling).unwrap();
        prop_assert!(degree_report(&s).consistent);
    }
}
