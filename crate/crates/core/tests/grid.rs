use std::collections::HashSet;

use arcgrid::families::random_ca_model;
use arcgrid::grid::{classify_c4, pt};
use arcgrid::transforms::{ca_to_b3_epg, ca_to_b4_epr};
use arcgrid::{C4Shape, Error, GridModel, GridPath, GridPoint, UnitEdge};
use proptest::prelude::*;

fn path(id: &str, corners: &[(u32, u32)]) -> GridPath {
    GridPath::new(id, corners.iter().map(|&(r, c)| pt(r, c)).collect()).unwrap()
}

/// Edge sets by walking lattice points one at a time, independent of the
/// segment decomposition used by the library.
fn walk_edges(p: &GridPath) -> HashSet<(GridPoint, GridPoint)> {
    let mut out = HashSet::new();
    for w in p.corners().windows(2) {
        let (mut r, mut c) = (w[0].row as i64, w[0].col as i64);
        let (dr, dc) = ((w[1].row as i64 - r).signum(), (w[1].col as i64 - c).signum());
        while (r, c) != (w[1].row as i64, w[1].col as i64) {
            let a = pt(r as u32, c as u32);
            r += dr;
            c += dc;
            let b = pt(r as u32, c as u32);
            out.insert(if a < b { (a, b) } else { (b, a) });
        }
    }
    out
}

fn oracle_adjacent(p: &GridPath, q: &GridPath) -> bool {
    !walk_edges(p).is_disjoint(&walk_edges(q))
}

#[test]
fn bend_count_examples() {
    assert_eq!(path("a", &[(0, 8), (0, 3), (3, 3), (3, 0), (8, 0)]).bend_count(), 3);
    assert_eq!(path("a", &[(0, 2), (0, 9)]).bend_count(), 0);
    assert_eq!(path("a", &[(5, 2), (5, 5), (2, 5)]).bend_count(), 1);
}

#[test]
fn edge_set_examples() {
    let e = path("a", &[(0, 0), (0, 2)]).edge_set();
    assert!(e.contains(&UnitEdge::new(pt(0, 0), pt(0, 1))));
    assert!(e.contains(&UnitEdge::new(pt(0, 1), pt(0, 2))));
    assert_eq!(e.len(), 2);
    assert_eq!(path("a", &[(5, 2), (5, 5), (2, 5)]).edge_set().len(), 6);
    assert!(matches!(
        GridPath::new("a", vec![pt(0, 0), pt(0, 0)]),
        Err(Error::InvalidPath { .. })
    ));
}

#[test]
fn shared_first_edge_makes_adjacent() {
    let m = GridModel::epg(vec![path("x", &[(0, 0), (0, 3)]), path("y", &[(3, 0), (0, 0), (0, 1)])]).unwrap();
    assert!(m.epg_intersection_graph().has_edge_by_id("x", "y").unwrap());
}

#[test]
fn crossing_is_not_adjacency() {
    let m = GridModel::epg(vec![path("x", &[(2, 0), (2, 4)]), path("y", &[(0, 2), (4, 2)])]).unwrap();
    assert_eq!(m.epg_intersection_graph().size(), 0);
}

fn true_pie() -> [GridPath; 4] {
    [
        path("p1", &[(5, 2), (5, 5), (2, 5)]),
        path("p2", &[(2, 5), (5, 5), (5, 8)]),
        path("p3", &[(5, 8), (5, 5), (8, 5)]),
        path("p4", &[(8, 5), (5, 5), (5, 2)]),
    ]
}

fn false_pie() -> [GridPath; 4] {
    [
        path("h", &[(5, 2), (5, 8)]),
        path("b1", &[(5, 3), (5, 5), (3, 5)]),
        path("v", &[(2, 5), (8, 5)]),
        path("b2", &[(5, 7), (5, 5), (7, 5)]),
    ]
}

fn frame() -> [GridPath; 4] {
    [
        path("p1", &[(6, 2), (2, 2), (2, 6)]),
        path("p2", &[(2, 4), (2, 8), (6, 8)]),
        path("p3", &[(4, 8), (8, 8), (8, 4)]),
        path("p4", &[(8, 6), (8, 2), (4, 2)]),
    ]
}

fn is_induced_c4_by_oracle(ps: &[GridPath; 4]) -> bool {
    let mut deg = [0; 4];
    for i in 0..4 {
        for j in i + 1..4 {
            if oracle_adjacent(&ps[i], &ps[j]) {
                deg[i] += 1;
                deg[j] += 1;
            }
        }
    }
    deg == [2; 4]
}

#[test]
fn c4_witnesses() {
    for ps in [true_pie(), false_pie(), frame()] {
        assert!(is_induced_c4_by_oracle(&ps));
    }
    assert_eq!(classify_c4(&true_pie()).unwrap(), C4Shape::TruePie { center: pt(5, 5) });
    assert_eq!(classify_c4(&false_pie()).unwrap(), C4Shape::FalsePie { center: pt(5, 5) });
    assert!(matches!(classify_c4(&frame()).unwrap(), C4Shape::Frame { .. }));
    let mut bad = true_pie();
    bad[0] = path("p1", &[(5, 1), (5, 5), (2, 5), (2, 6)]);
    assert!(matches!(classify_c4(&bad), Err(Error::NotB1C4Witness(_))));
}

#[test]
fn true_pie_graph_is_c4() {
    let g = GridModel::epg(true_pie().to_vec()).unwrap().epg_intersection_graph();
    assert_eq!(g.size(), 4);
    assert!(!g.has_edge_by_id("p1", "p3").unwrap());
    assert!(!g.has_edge_by_id("p2", "p4").unwrap());
}

#[test]
fn interval_rows_have_no_bends() {
    let m = GridModel::epg(vec![path("a", &[(0, 0), (0, 3)]), path("b", &[(0, 2), (0, 5)])]).unwrap();
    assert_eq!(m.max_bends(), 0);
}

fn symmetries(p: GridPoint, side: u32, k: usize) -> GridPoint {
    let (r, c) = (p.row, p.col);
    let (r, c) = if k & 1 == 1 { (c, r) } else { (r, c) };
    let r = if k & 2 == 2 { side - r } else { r };
    let c = if k & 4 == 4 { side - c } else { c };
    pt(r, c)
}

proptest! {
    #[test]
    fn epg_graph_matches_walk_oracle(seed in any::<u64>(), n in 1usize..15) {
        let m = ca_to_b3_epg(&random_ca_model(seed, n).unwrap());
        let g = m.epg_intersection_graph();
        for (i, p) in m.paths().iter().enumerate() {
            for (j, q) in m.paths().iter().enumerate().skip(i + 1) {
                prop_assert_eq!(g.has_edge(i, j), oracle_adjacent(p, q));
            }
        }
    }

    #[test]
    fn graph_invariant_under_translation_and_symmetry(seed in any::<u64>(), n in 1usize..12, dr in 0u32..5, dc in 0u32..5, k in 0usize..8) {
        let m = ca_to_b3_epg(&random_ca_model(seed, n).unwrap());
        let g = m.epg_intersection_graph();
        let moved = m.map_points(|p| pt(p.row + dr, p.col + dc)).unwrap();
        prop_assert_eq!(moved.epg_intersection_graph(), g.clone());
        let (rows, cols) = m.bounds();
        let side = rows.max(cols);
        let turned = m.map_points(|p| symmetries(p, side, k)).unwrap();
        prop_assert_eq!(turned.epg_intersection_graph(), g);
    }

    #[test]
    fn epr_paths_bend_at_most_four_times(seed in any::<u64>(), n in 1usize..20) {
        let m = ca_to_b4_epr(&random_ca_model(seed, n).unwrap()).model;
        prop_assert!(m.validate_epr());
        prop_assert!(m.max_bends() <= 4);
    }
}
