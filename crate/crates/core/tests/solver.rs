mod common;

use std::time::Duration;

use common::*;
use proptest::prelude::*;
use threshold_bppc::harness::build_instance;
use threshold_bppc::harness::Cell;
use threshold_bppc::{
    brute_force_oracle, decompose_universal, ffd_conflicts, lower_bound, parse_instance,
    solve_exact, solve_exact_with, verify_packing, write_instance, GeneratorKind, Graph,
    SolverOptions, WeightRange,
};

const LIMIT: Duration = Duration::from_secs(30);

fn no_decompose() -> SolverOptions {
    SolverOptions {
        time_limit: LIMIT,
        decompose: false,
    }
}

fn arb_instance(max_n: usize) -> impl Strategy<Value = threshold_bppc::BppcInstance> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        (
            proptest::collection::vec(any::<bool>(), pairs),
            proptest::collection::vec(0u64..=10, n),
            5u64..=20,
        )
            .prop_map(move |(bits, w, cap)| {
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
                let w = w.into_iter().map(|x| x.min(cap)).collect();
                instance(Graph::new(n, edges).unwrap(), w, cap)
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn exact_matches_oracle_and_bounds(inst in arb_instance(8)) {
        let r = solve_exact(&inst, LIMIT);
        prop_assert!(r.optimal);
        prop_assert!(verify_packing(&inst, &r.packing).is_ok());
        prop_assert_eq!(r.k, r.packing.bin_count());
        prop_assert_eq!(r.k, brute_force_oracle(&inst).unwrap());
        let lb = lower_bound(&inst, None).unwrap();
        let ffd = ffd_conflicts(&inst);
        prop_assert!(verify_packing(&inst, &ffd).is_ok());
        prop_assert!(lb <= r.lower_bound && r.lower_bound <= r.k && r.k <= ffd.bin_count());
        prop_assert_eq!(solve_exact_with(&inst, &no_decompose()).k, r.k);
    }

    #[test]
    fn decomposition_lifts_feasibly(inst in arb_instance(8)) {
        let dec = decompose_universal(&inst);
        let sub = solve_exact(&dec.subinstance, LIMIT);
        let lifted = dec.lift(&sub.packing);
        prop_assert!(verify_packing(&inst, &lifted).is_ok());
        prop_assert_eq!(lifted.bin_count(), solve_exact(&inst, LIMIT).k);
        for &v in &dec.singleton_bins {
            prop_assert_eq!(inst.graph().degree(v) + 1, inst.n());
        }
    }

    #[test]
    fn clique_hint_is_a_bound(inst in arb_instance(8), pick in any::<u16>()) {
        let members: Vec<usize> = (1..=inst.n()).filter(|v| pick >> (v - 1) & 1 == 1).collect();
        let hint = inst.graph().is_clique(&members);
        match lower_bound(&inst, Some(&members)) {
            Ok(lb) => {
                prop_assert!(hint);
                prop_assert!(lb >= members.len());
                prop_assert!(lb <= brute_force_oracle(&inst).unwrap());
            }
            Err(_) => prop_assert!(!hint),
        }
    }

    #[test]
    fn instance_file_roundtrip(inst in arb_instance(12)) {
        let text = write_instance(&inst);
        let back = parse_instance(&text).unwrap();
        prop_assert_eq!(&back, &inst);
        prop_assert_eq!(write_instance(&back), text);
    }
}

fn generated(kind: GeneratorKind, n: usize, delta: f64, seed: u64) -> threshold_bppc::BppcInstance {
    build_instance(
        &Cell {
            class: kind,
            n,
            delta,
            seed,
        },
        WeightRange::default(),
        150,
    )
    .unwrap()
}

#[test]
fn generated_instances_match_oracle() {
    let kinds = [
        GeneratorKind::Threshold,
        GeneratorKind::Interval,
        GeneratorKind::UniformArbitrary,
    ];
    let mut checked = 0;
    for seed in 0..60u64 {
        let kind = kinds[seed as usize % 3];
        let n = 2 + seed as usize % 8;
        let delta = (seed % 9 + 1) as f64 / 10.0;
        let inst = generated(kind, n, delta, seed);
        let r = solve_exact(&inst, LIMIT);
        assert!(r.optimal);
        assert_eq!(r.k, brute_force_oracle(&inst).unwrap(), "{kind} n={n} seed={seed}");
        checked += 1;
    }
    assert_eq!(checked, 60);
}

#[test]
fn decomposition_identity_on_threshold_instances() {
    for seed in 0..30u64 {
        let n = 10 + seed as usize % 21;
        let d = 0.6 + 0.05 * (seed % 8) as f64;
        let spec = threshold_bppc::GeneratorSpec {
            kind: GeneratorKind::Threshold,
            n,
            param: d,
            seed,
        };
        let inst = threshold_bppc::gen_bppc_instance(&spec, WeightRange::default(), 150).unwrap();
        let dec = decompose_universal(&inst);
        let whole = solve_exact_with(&inst, &no_decompose());
        let part = solve_exact_with(&dec.subinstance, &no_decompose());
        assert!(whole.optimal && part.optimal);
        assert_eq!(whole.k, dec.singleton_bins.len() + part.k, "n={n} d={d} seed={seed}");
    }
}

#[test]
fn empty_graph_reduces_to_bin_packing() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
    for _ in 0..60 {
        let n = rng.gen_range(1..=9);
        let cap = rng.gen_range(10..=40);
        let w: Vec<u64> = (0..n).map(|_| rng.gen_range(1..=cap)).collect();
        let inst = instance(Graph::empty(n), w.clone(), cap);
        assert_eq!(solve_exact(&inst, LIMIT).k, bin_packing_dp(&w, cap), "{w:?} B={cap}");
    }
}

#[test]
fn large_capacity_reduces_to_coloring() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(4);
    for _ in 0..60 {
        let n = rng.gen_range(1..=9);
        let p = rng.gen_range(0.1..0.9);
        let mut edges = Vec::new();
        for u in 1..=n {
            for v in u + 1..=n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::new(n, edges).unwrap();
        let w: Vec<u64> = (0..n).map(|_| rng.gen_range(0..=20)).collect();
        let total = w.iter().sum();
        let inst = instance(g.clone(), w, total);
        assert_eq!(solve_exact(&inst, LIMIT).k, chromatic_number(&g));
    }
}

#[test]
fn oracles_agree_with_each_other() {
    assert_eq!(bin_packing_dp(&[60, 60, 60], 150), 2);
    assert_eq!(bin_packing_dp(&[7, 6, 6, 5, 5, 4, 4, 3], 20), 2);
    assert_eq!(chromatic_number(&Graph::cycle(5)), 3);
    assert_eq!(chromatic_number(&Graph::complete(4)), 4);
    assert_eq!(chromatic_number(&Graph::empty(3)), 1);
}

#[test]
fn solver_handles_desk_scale_threshold_instances() {
    for seed in 1..=5 {
        for delta in [0.2, 0.5, 0.8] {
            let inst = generated(GeneratorKind::Threshold, 60, delta, seed);
            let r = solve_exact(&inst, LIMIT);
            assert!(r.optimal, "delta={delta} seed={seed}");
            verify_packing(&inst, &r.packing).unwrap();
        }
    }
}
