//! Regenerates the frozen spider fixtures in `crates/core/fixtures/`.
//!
//! * `s3-b1epg`: a hand layout. `c2` runs along row 3, `c1` and `c3` bend at
//!   (3,3) towards column 3, and each `s_i` sits on the one stretch missing
//!   from `c_i`.
//! * `s6-b2epr`, `s7-b3epr`: the block model of the spider laid out on a
//!   rectangle with corners in the middle of blocks {1,3,4,6} and {1,3,5,7}.
//! * `s7-b2epg`: a seeded min-conflicts search over all paths with at most
//!   two bends on a 6x6 lattice.
//!
//! Run with `cargo run -p arcgrid --example derive_spider_fixtures [out-dir]`.

use std::path::PathBuf;

use arcgrid::families::{spider_rect_embedding, thick_spider};
use arcgrid::formats::emit_paths;
use arcgrid::grid::{pt, GridModel, GridPath, GridPoint};
use arcgrid::Graph;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SIDE: u32 = 6;
const SEED: u64 = 7;

fn s3_b1epg() -> GridModel {
    let p = |id: &str, c: &[(u32, u32)]| GridPath::new(id, c.iter().map(|&(r, c)| pt(r, c)).collect()).unwrap();
    GridModel::epg(vec![
        p("c1", &[(0, 3), (3, 3), (3, 6)]),
        p("c2", &[(3, 0), (3, 6)]),
        p("c3", &[(3, 0), (3, 3), (0, 3)]),
        p("s1", &[(3, 0), (3, 2)]),
        p("s2", &[(0, 3), (2, 3)]),
        p("s3", &[(3, 4), (3, 6)]),
    ])
    .unwrap()
}

/// Index of a unit edge of the SIDE x SIDE lattice in a 64-bit mask.
fn edge_bit(a: GridPoint, b: GridPoint) -> u64 {
    let (a, b) = if a <= b { (a, b) } else { (b, a) };
    let idx = if a.row == b.row {
        a.row * (SIDE - 1) + a.col
    } else {
        SIDE * (SIDE - 1) + a.col * (SIDE - 1) + a.row
    };
    1 << idx
}

fn mask(corners: &[GridPoint]) -> Option<u64> {
    let mut m = 0u64;
    for w in corners.windows(2) {
        let (a, b) = (w[0], w[1]);
        let steps = a.row.abs_diff(b.row) + a.col.abs_diff(b.col);
        let mut cur = a;
        for _ in 0..steps {
            let next = pt(
                if b.row > cur.row { cur.row + 1 } else if b.row < cur.row { cur.row - 1 } else { cur.row },
                if b.col > cur.col { cur.col + 1 } else if b.col < cur.col { cur.col - 1 } else { cur.col },
            );
            let bit = edge_bit(cur, next);
            if m & bit != 0 {
                return None;
            }
            m |= bit;
            cur = next;
        }
    }
    Some(m)
}

/// Every path with at most two bends, one orientation each.
fn candidate_paths() -> Vec<(Vec<GridPoint>, u64)> {
    let points: Vec<GridPoint> = (0..SIDE).flat_map(|r| (0..SIDE).map(move |c| pt(r, c))).collect();
    let mut out = Vec::new();
    let mut seen = std::collections::HashSet::new();
    let mut push = |corners: Vec<GridPoint>| {
        if GridPath::new("x", corners.clone()).is_err() {
            return;
        }
        let Some(m) = mask(&corners) else { return };
        let mut key = corners.clone();
        if key.first() > key.last() {
            key.reverse();
        }
        if seen.insert(key.clone()) {
            out.push((key, m));
        }
    };
    for &a in &points {
        for &b in &points {
            if a.row == b.row || a.col == b.col {
                push(vec![a, b]);
            } else {
                push(vec![a, pt(a.row, b.col), b]);
                push(vec![a, pt(b.row, a.col), b]);
                for x in 0..SIDE {
                    push(vec![a, pt(a.row, x), pt(b.row, x), b]);
                    push(vec![a, pt(x, a.col), pt(x, b.col), b]);
                }
            }
            if a.row == b.row {
                for x in 0..SIDE {
                    push(vec![a, pt(x, a.col), pt(x, b.col), b]);
                }
            }
            if a.col == b.col {
                for x in 0..SIDE {
                    push(vec![a, pt(a.row, x), pt(b.row, x), b]);
                }
            }
        }
    }
    out
}

fn conflicts(target: &Graph, masks: &[u64], v: usize, candidate: u64) -> usize {
    (0..masks.len())
        .filter(|&u| u != v && target.has_edge(u, v) != (masks[u] & candidate != 0))
        .count()
}

/// Min-conflicts local search with random restarts.
fn s7_b2epg() -> GridModel {
    let target = thick_spider(7).unwrap();
    let n = target.order();
    let paths = candidate_paths();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for restart in 0.. {
        let mut pick: Vec<usize> = (0..n).map(|_| rng.gen_range(0..paths.len())).collect();
        for step in 0..20_000 {
            let masks: Vec<u64> = pick.iter().map(|&p| paths[p].1).collect();
            let bad: Vec<usize> = (0..n).filter(|&v| conflicts(&target, &masks, v, masks[v]) > 0).collect();
            if bad.is_empty() {
                eprintln!("s7-b2epg: restart {restart}, step {step}");
                let model = pick
                    .iter()
                    .enumerate()
                    .map(|(v, &p)| GridPath::new(target.id(v), paths[p].0.clone()).unwrap())
                    .collect();
                return GridModel::epg(model).unwrap();
            }
            let v = *bad.choose(&mut rng).unwrap();
            if rng.gen_bool(0.05) {
                pick[v] = rng.gen_range(0..paths.len());
                continue;
            }
            let scores: Vec<usize> = paths.iter().map(|p| conflicts(&target, &masks, v, p.1)).collect();
            let best = *scores.iter().min().unwrap();
            let ties: Vec<usize> = (0..paths.len()).filter(|&p| scores[p] == best).collect();
            pick[v] = *ties.choose(&mut rng).unwrap();
        }
    }
    unreachable!()
}

fn main() {
    let dir: PathBuf = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures"));
    let fixtures = [
        ("s3-b1epg", s3_b1epg(), 3),
        ("s6-b2epr", spider_rect_embedding(6, [1, 3, 4, 6]).unwrap().model, 6),
        ("s7-b3epr", spider_rect_embedding(7, [1, 3, 5, 7]).unwrap().model, 7),
        ("s7-b2epg", s7_b2epg(), 7),
    ];
    for (name, model, n) in fixtures {
        assert_eq!(model.epg_intersection_graph(), thick_spider(n).unwrap(), "{name}");
        let path = dir.join(format!("{name}.paths"));
        std::fs::write(&path, emit_paths(&model)).unwrap();
        println!("{name}: max bends {} -> {}", model.max_bends(), path.display());
    }
}
