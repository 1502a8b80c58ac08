use arcgrid::families::{canonical_cycle_power_model, cycle_power, random_interval_model, rejection_sample, thick_spider};
use arcgrid::recognition::*;
use arcgrid::transforms::{epr_to_ca, find_four_points};
use arcgrid::{CircularArcModel, Graph};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Adjacency as bitmasks, for the brute-force oracles.
fn masks(g: &Graph) -> Vec<u32> {
    (0..g.order())
        .map(|v| g.neighbors(v).fold(0u32, |m, u| m | 1 << u))
        .collect()
}

fn connected(adj: &[u32], set: u32) -> bool {
    let start = set.trailing_zeros();
    let mut seen = 1u32 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let v = frontier.trailing_zeros();
        frontier &= frontier - 1;
        let new = adj[v as usize] & set & !seen;
        seen |= new;
        frontier |= new;
    }
    seen == set
}

/// A chordless cycle of length at least four is a vertex set of size >= 4
/// inducing a connected 2-regular graph.
fn has_chordless_cycle(adj: &[u32]) -> bool {
    let n = adj.len();
    (0u32..1 << n).any(|set| {
        set.count_ones() >= 4
            && (0..n).all(|v| set & 1 << v == 0 || (adj[v] & set).count_ones() == 2)
            && connected(adj, set)
    })
}

fn graph_from_bits(n: usize, bits: u64, ids: &[String]) -> Graph {
    let mut g = Graph::new(ids[..n].iter().cloned()).unwrap();
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits >> k & 1 == 1 {
                g.add_edge(u, v);
            }
            k += 1;
        }
    }
    g
}

#[test]
fn chordality_examples() {
    assert!(!is_chordal(&cycle_power(4, 1).unwrap()));
    let tree = Graph::from_edges(
        &["a", "b", "c", "d", "e"],
        &[("a", "b"), ("a", "c"), ("c", "d"), ("c", "e")],
    )
    .unwrap();
    assert!(is_chordal(&tree));
    let c72 = cycle_power(7, 2).unwrap();
    assert!(has_chordless_cycle(&masks(&c72)));
    assert_eq!(is_chordal(&c72), !has_chordless_cycle(&masks(&c72)));
}

#[test]
fn chordality_matches_oracle_exhaustively_up_to_seven() {
    let ids: Vec<String> = (0..8).map(|i| format!("x{i}")).collect();
    for n in 1..=7 {
        let pairs = n * (n - 1) / 2;
        for bits in 0u64..1 << pairs {
            let g = graph_from_bits(n, bits, &ids);
            assert_eq!(is_chordal(&g), !has_chordless_cycle(&masks(&g)), "n={n} bits={bits:b}");
        }
    }
}

#[test]
fn chordality_matches_oracle_on_sampled_eight_vertex_graphs() {
    let ids: Vec<String> = (0..8).map(|i| format!("x{i}")).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..200_000 {
        let bits = rng.gen::<u64>() & ((1 << 28) - 1);
        let g = graph_from_bits(8, bits, &ids);
        assert_eq!(is_chordal(&g), !has_chordless_cycle(&masks(&g)));
    }
}

#[test]
fn induced_examples() {
    let c4 = cycle_power(4, 1).unwrap();
    assert!(contains_induced(&cycle_power(7, 2).unwrap(), &c4));
    // v1, v3, v5, v7 of C_7^2.
    let c72 = cycle_power(7, 2).unwrap();
    let sub = c72.induced(&[0, 2, 4, 6]);
    assert_eq!(sub.size(), 4);
    assert!(contains_induced(&thick_spider(6).unwrap(), &thick_spider(3).unwrap()));
    assert!(!contains_induced(&cycle_power(5, 1).unwrap(), &c4));
}

#[test]
fn induced_embedding_is_checked() {
    let g = cycle_power(10, 3).unwrap();
    let h = cycle_power(7, 2).unwrap();
    let map = find_induced(&g, &h).unwrap();
    for u in 0..h.order() {
        for v in u + 1..h.order() {
            assert_eq!(h.has_edge(u, v), g.has_edge(map[u], map[v]));
        }
    }
}

#[test]
fn criterion_examples() {
    assert!(cycle_power_contains_criterion(7, 2, 2).unwrap());
    assert!(!cycle_power_contains_criterion(9, 2, 2).unwrap());
    assert!(!contains_induced(&cycle_power(9, 2).unwrap(), &cycle_power(7, 2).unwrap()));
    assert!(cycle_power_contains_criterion(10, 3, 2).unwrap());
    assert!(contains_induced(&cycle_power(10, 3).unwrap(), &cycle_power(7, 2).unwrap()));
}

#[test]
fn criterion_matches_search() {
    let c72 = cycle_power(7, 2).unwrap();
    for k in 2..=3u64 {
        for n in 2 * k + 2..=12 {
            let g = cycle_power(n as usize, k as usize).unwrap();
            let by_search = contains_induced(&g, &c72);
            assert_eq!(cycle_power_contains_criterion(n, k, 2).unwrap(), by_search, "n={n} k={k}");
            assert_eq!(contains_induced_in_transitive(&g, &c72), by_search);
        }
    }
}

#[test]
fn obstruction_examples() {
    assert_eq!(has_power_cycle_obstruction(&cycle_power(7, 2).unwrap(), 5), Some(2));
    assert_eq!(has_power_cycle_obstruction(&cycle_power(9, 2).unwrap(), 5), None);
    for seed in 0..20 {
        let g = random_interval_model(seed, 14).unwrap().intersection_graph();
        assert!(is_chordal(&g));
        assert_eq!(has_power_cycle_obstruction(&g, 3), None);
    }
}

fn assert_yes_is_verified(m: &CircularArcModel, d: &B1Decision) {
    let Some(model) = d.model() else { return };
    assert_eq!(model.epg_intersection_graph(), m.intersection_graph());
    assert!(model.validate_epr());
    match d {
        B1Decision::Yes { .. } => {
            assert!(model.max_bends() <= 1);
            assert!(epr_to_ca(model).unwrap().is_normal_helly());
        }
        B1Decision::YesInterval { .. } => assert_eq!(model.max_bends(), 0),
        B1Decision::No { .. } => unreachable!(),
    }
}

#[test]
fn decision_examples() {
    let c92 = canonical_cycle_power_model(9, 2).unwrap();
    let d = decide_b1_epr(&c92);
    assert!(matches!(d, B1Decision::Yes { .. }));
    assert_yes_is_verified(&c92, &d);

    let d = decide_b1_epr(&canonical_cycle_power_model(7, 2).unwrap());
    assert_eq!(
        d,
        B1Decision::No {
            reason: NoReason::NoFourPoints,
            chordal: false,
            obstruction: Some(2)
        }
    );

    let interval = random_interval_model(4, 10).unwrap();
    let d = decide_b1_epr(&interval);
    assert!(matches!(d, B1Decision::YesInterval { .. }));
    assert_yes_is_verified(&interval, &d);
}

#[test]
fn decision_on_canonical_models_follows_obstruction() {
    for k in 2..=3 {
        for n in 3 * k + 1..=14 {
            let m = canonical_cycle_power_model(n, k).unwrap();
            let d = decide_b1_epr(&m);
            let g = m.intersection_graph();
            let obstruction = has_power_cycle_obstruction(&g, (n + 1) / 4);
            assert_eq!(d.is_yes(), obstruction.is_none(), "n={n} k={k}");
            assert_yes_is_verified(&m, &d);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn decisions_are_verified(seed in any::<u64>(), n in 1usize..16) {
        let (_, m) = rejection_sample(seed, n, 0.35, 10_000, CircularArcModel::is_normal_helly).unwrap();
        let d = decide_b1_epr(&m);
        assert_yes_is_verified(&m, &d);
        let g = m.intersection_graph();
        if !is_chordal(&g) {
            prop_assert_eq!(d.is_yes(), find_four_points(&m).is_some());
            prop_assert_eq!(d.is_yes(), has_power_cycle_obstruction(&g, (g.order() + 1) / 4).is_none());
        }
    }
}
