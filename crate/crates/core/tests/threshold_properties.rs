mod common;

use common::*;
use proptest::prelude::*;
use threshold_bppc::density::Regime;
use threshold_bppc::{
    build_threshold_graph, gen_interval, gen_soriano_gendreau, gen_threshold,
    gen_uniform_arbitrary, recognize_threshold, Graph, Recognition, ThresholdCertificate,
    ThresholdParam,
};

fn cert(g: &Graph) -> ThresholdCertificate {
    recognize_threshold(g)
        .into_certificate()
        .expect("graph should be threshold")
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 1..=n {
                for v in u + 1..=n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::new(n, edges).unwrap()
        })
    })
}

/// Threshold graph from coarse weights, so ties are frequent.
fn arb_threshold(max_n: usize) -> impl Strategy<Value = Graph> {
    (proptest::collection::vec(0u8..=8, 0..=max_n), 0u8..=8).prop_map(|(p, d)| {
        let p: Vec<f64> = p.into_iter().map(|x| f64::from(x) / 8.0).collect();
        build_threshold_graph(
            &threshold_bppc::VertexWeights::new(p).unwrap(),
            ThresholdParam::new(f64::from(d) / 8.0).unwrap(),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn recognition_matches_forbidden_subgraphs(g in arb_graph(8)) {
        prop_assert_eq!(recognize_threshold(&g).is_threshold(), !has_forbidden_subgraph(&g));
    }

    #[test]
    fn threshold_graphs_are_accepted(g in arb_threshold(30)) {
        prop_assert!(recognize_threshold(&g).is_threshold());
    }

    #[test]
    fn certificate_optima(g in arb_threshold(10)) {
        let c = cert(&g);
        let q = c.max_clique();
        let s = c.max_independent_set();
        prop_assert!(g.is_clique(&q));
        prop_assert!(g.is_independent(&s));
        prop_assert_eq!(q.len(), brute_max_clique(&g));
        prop_assert_eq!(s.len(), brute_max_independent_set(&g));
        prop_assert_eq!(c.clique_size(), q.len());
        prop_assert_eq!(c.universal_count(), universal_count(&g));
        // The clique and the independent set cover V and share one vertex.
        prop_assert_eq!(q.len() + s.len(), g.n() + usize::from(g.n() > 0));
        let mut all: Vec<usize> = q.iter().chain(&s).copied().collect();
        all.sort_unstable();
        all.dedup();
        prop_assert_eq!(all.len(), g.n());
    }

    #[test]
    fn last_col_is_a_staircase(g in arb_threshold(30)) {
        let c = cert(&g);
        let lc = c.last_col();
        prop_assert!(lc.windows(2).all(|w| w[0] >= w[1]));
        for (i, &v) in c.ordering().iter().enumerate() {
            let expect = if lc[i] == 0 { 0 } else if lc[i] > i + 1 { lc[i] - 1 } else { lc[i] };
            prop_assert_eq!(g.degree(v), expect);
        }
    }

    #[test]
    fn interval_model_roundtrip(g in arb_threshold(40)) {
        let c = cert(&g);
        prop_assert_eq!(c.derive_interval_model::<f64>().intersection_graph(), g.clone());
        prop_assert_eq!(c.derive_interval_model::<f32>().intersection_graph(), g);
    }

    #[test]
    fn realization_roundtrip(g in arb_threshold(40)) {
        let (p, d) = cert(&g).realize::<f64>();
        prop_assert_eq!(build_threshold_graph(&p, d), g.clone());
        let (p, d) = cert(&g).realize::<f32>();
        prop_assert_eq!(build_threshold_graph(&p, d), g);
    }

    #[test]
    fn complement_is_threshold(g in arb_threshold(30)) {
        let c = cert(&g);
        let cc = cert(&g.complement());
        prop_assert_eq!(cc.clique_size(), c.max_independent_set().len());
        prop_assert_eq!(g.density().density + g.complement().density().density,
            if g.n() >= 2 { 1.0 } else { 0.0 });
    }

    #[test]
    fn relabeling_preserves_recognition(g in arb_graph(8), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut perm: Vec<usize> = (1..=g.n()).collect();
        perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let h = relabel(&g, &perm);
        match (recognize_threshold(&g), recognize_threshold(&h)) {
            (Recognition::Threshold(a), Recognition::Threshold(b)) => {
                prop_assert_eq!(a.clique_size(), b.clique_size());
                prop_assert_eq!(a.universal_count(), b.universal_count());
                prop_assert_eq!(a.ordered_degrees(), b.ordered_degrees());
            }
            (Recognition::NotThreshold(_), Recognition::NotThreshold(_)) => {}
            _ => prop_assert!(false, "relabeling changed the verdict"),
        }
    }

    #[test]
    fn generated_threshold_graphs_match_weights(n in 0usize..120, d in 0.0f64..=1.0, seed in any::<u64>()) {
        let (g, p) = gen_threshold(n, ThresholdParam::new(d).unwrap(), seed);
        prop_assert!(recognize_threshold(&g).is_threshold());
        for u in 1..=n {
            for v in u + 1..=n {
                prop_assert_eq!(g.has_edge(u, v), (p.get(u) + p.get(v)) / 2.0 <= d);
            }
        }
    }

    #[test]
    fn uniform_generator_hits_target(n in 2usize..80, delta in 0.0f64..=1.0, seed in any::<u64>()) {
        let g = gen_uniform_arbitrary(n, delta, seed).unwrap();
        let pairs = (n * (n - 1) / 2) as f64;
        prop_assert_eq!(g.edge_count(), (delta * pairs).round_ties_even() as usize);
    }

    #[test]
    fn interval_generator_is_interval_graph(n in 2usize..80, delta in 0.0f64..0.999, seed in any::<u64>()) {
        let (g, m) = gen_interval(n, delta, seed).unwrap();
        prop_assert_eq!(m.intersection_graph(), g);
        let len = m.interval(1).right - m.interval(1).left;
        prop_assert!((len - (1.0 - (1.0 - delta).sqrt())).abs() < 1e-12);
    }
}

#[test]
fn forbidden_graphs_rejected() {
    let p4 = Graph::path(4);
    let c4 = Graph::cycle(4);
    let two_k2 = Graph::new(4, [(1, 2), (3, 4)]).unwrap();
    for g in [p4, c4, two_k2] {
        assert!(has_forbidden_subgraph(&g));
        assert!(!recognize_threshold(&g).is_threshold());
    }
}

#[test]
fn generator_densities_track_targets() {
    let n = 400;
    for &delta in &[0.1, 0.5, 0.9] {
        let d = threshold_bppc::threshold_from_density(Regime::Finite(n), delta).unwrap();
        let mean = |f: &dyn Fn(u64) -> f64| (1..=10).map(f).sum::<f64>() / 10.0;
        let t = mean(&|s| gen_threshold(n, d, s).0.density().density);
        let i = mean(&|s| gen_interval(n, delta, s).unwrap().0.density().density);
        assert!((t - delta).abs() < 0.02, "T delta={delta} measured={t}");
        assert!((i - delta).abs() < 0.02, "I delta={delta} measured={i}");
    }
    let sg = (1..=10)
        .map(|s| gen_soriano_gendreau(n, s).density().density)
        .sum::<f64>()
        / 10.0;
    assert!((sg - 0.5).abs() < 0.02, "SG measured={sg}");
}
