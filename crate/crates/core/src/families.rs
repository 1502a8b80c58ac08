//! Graph families, their arc models, random models and the frozen spider
//! fixtures.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::circle::{Arc, CirclePosition, CircularArcModel};
use crate::error::{Error, Result};
use crate::formats::parse_paths;
use crate::graph::Graph;
use crate::grid::GridModel;
use crate::transforms::{embed_on_rectangle, RectEmbedding};

fn bad(msg: String) -> Error {
    Error::InvalidParameters(msg)
}

/// `C_n^k`: vertices `v1..vn` on a cycle, adjacent when their circular
/// distance is at most `k`.
pub fn cycle_power(n: usize, k: usize) -> Result<Graph> {
    if n < 3 || k < 1 {
        return Err(bad(format!("cycle power needs n >= 3 and k >= 1, got n={n} k={k}")));
    }
    let mut g = Graph::new((1..=n).map(|i| format!("v{i}")))?;
    for i in 0..n {
        for d in 1..=k.min(n / 2) {
            g.add_edge(i, (i + d) % n);
        }
    }
    Ok(g)
}

/// Arcs `(2i-1, 2i+2k)` taken mod `2n`, one per vertex of `C_n^k`.
pub fn canonical_cycle_power_model(n: usize, k: usize) -> Result<CircularArcModel> {
    if k < 1 || 2 * k + 1 >= n {
        return Err(bad(format!("canonical model needs 2k+1 < n, got n={n} k={k}")));
    }
    let m = 2 * n as u32;
    let wrap = |x: u32| (x - 1) % m + 1;
    CircularArcModel::new(
        (1..=n as u32)
            .map(|i| Arc::new(format!("v{i}"), wrap(2 * i - 1), wrap(2 * i + 2 * k as u32)))
            .collect(),
    )
}

/// `S_n`: a clique `c1..cn` and a stable set `s1..sn` with `ci ~ sj` iff
/// `i != j`.
pub fn thick_spider(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(bad(format!("thick spider needs n >= 2, got {n}")));
    }
    let ids = (1..=n).map(|i| format!("c{i}")).chain((1..=n).map(|i| format!("s{i}")));
    let mut g = Graph::new(ids)?;
    for i in 0..n {
        for j in 0..n {
            if i < j {
                g.add_edge(i, j);
            }
            if i != j {
                g.add_edge(i, n + j);
            }
        }
    }
    Ok(g)
}

fn spider_blocks(n: usize, order: [Slot; 4]) -> Result<CircularArcModel> {
    if n < 3 {
        return Err(bad(format!("spider model needs n >= 3, got {n}")));
    }
    let n32 = n as u32;
    let mut arcs: Vec<Arc> = (1..=n)
        .map(|i| Arc::new(format!("c{i}"), 0, 0))
        .chain((1..=n).map(|i| Arc::new(format!("s{i}"), 0, 0)))
        .collect();
    let prev = |j: u32| (j + n32 - 2) % n32;
    let next = |j: u32| j % n32;
    for j in 1..=n32 {
        for (slot, pos) in order.iter().zip(0..) {
            let e = 4 * j - 3 + pos;
            match slot {
                Slot::StableTail => arcs[n + j as usize - 1].tail = e,
                Slot::StableHead => arcs[n + j as usize - 1].head = e,
                Slot::PrevCliqueTail => arcs[prev(j) as usize].tail = e,
                Slot::NextCliqueHead => arcs[next(j) as usize].head = e,
            }
        }
    }
    CircularArcModel::new(arcs)
}

#[derive(Clone, Copy)]
enum Slot {
    StableTail,
    StableHead,
    PrevCliqueTail,
    NextCliqueHead,
}

/// A circular-arc model of `S_n` (`n >= 3`) built from `n` blocks of four
/// endpoints: block `j` holds the tail of `s_j`, the tail of `c_{j-1}`, the
/// head of `c_{j+1}` and the head of `s_j`. Normal for `n = 3`.
pub fn thick_spider_model(n: usize) -> Result<CircularArcModel> {
    use Slot::*;
    spider_blocks(n, [StableTail, PrevCliqueTail, NextCliqueHead, StableHead])
}

/// A model of `S_n` (`n >= 5`) where block `j` holds the tail of `s_j`, the
/// head of `c_{j+1}`, the tail of `c_{j-1}` and the head of `s_j`. The gap in
/// the middle of block `j` is inside `s_j` and inside every `c_i` with `i`
/// not within one of `j`, which makes it a good rectangle corner.
pub fn spider_rect_model(n: usize) -> Result<CircularArcModel> {
    use Slot::*;
    if n < 5 {
        return Err(bad(format!("rectangle spider model needs n >= 5, got {n}")));
    }
    spider_blocks(n, [StableTail, NextCliqueHead, PrevCliqueTail, StableHead])
}

/// The middle gap of block `j` (1-based) in [`spider_rect_model`].
pub fn spider_block_gap(j: u32) -> CirclePosition {
    CirclePosition::from_offset(8 * j - 4)
}

/// Embeds [`spider_rect_model`] with corners in the middle of the given
/// blocks (clockwise).
pub fn spider_rect_embedding(n: usize, blocks: [u32; 4]) -> Result<RectEmbedding> {
    embed_on_rectangle(&spider_rect_model(n)?, blocks.map(spider_block_gap))
}

/// Uniformly random pairing of the endpoints `1..=2n` into `n` arcs
/// `v1..vn`, deterministic per seed.
pub fn random_ca_model(seed: u64, n: usize) -> Result<CircularArcModel> {
    random_pairing(seed, n, false)
}

/// Like [`random_ca_model`] but every arc runs from its smaller to its
/// larger endpoint, so no arc contains point 0 and the graph is an interval
/// graph.
pub fn random_interval_model(seed: u64, n: usize) -> Result<CircularArcModel> {
    random_pairing(seed, n, true)
}

fn random_pairing(seed: u64, n: usize, interval: bool) -> Result<CircularArcModel> {
    if n == 0 {
        return Err(bad("a model needs at least one arc".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut ends: Vec<u32> = (1..=2 * n as u32).collect();
    ends.shuffle(&mut rng);
    CircularArcModel::from_pairs(
        &ends
            .chunks(2)
            .map(|p| if interval { (p[0].min(p[1]), p[0].max(p[1])) } else { (p[0], p[1]) })
            .collect::<Vec<_>>(),
    )
}

/// Random arcs of length at most `max_fraction` of the circle, with real
/// endpoints discretised by rank. Short arcs make normal and normal Helly
/// models common, unlike uniform pairings.
pub fn random_short_arc_model(seed: u64, n: usize, max_fraction: f64) -> Result<CircularArcModel> {
    if n == 0 || !(max_fraction > 0.0 && max_fraction < 1.0) {
        return Err(bad(format!("need n >= 1 and 0 < fraction < 1, got n={n} fraction={max_fraction}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<(f64, usize, bool)> = Vec::with_capacity(2 * n);
    for i in 0..n {
        let start: f64 = rng.gen();
        let len: f64 = rng.gen_range(1e-6..max_fraction);
        points.push((start, i, false));
        points.push(((start + len).fract(), i, true));
    }
    points.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
    let mut pairs = vec![(0, 0); n];
    for (rank, &(_, i, is_head)) in points.iter().enumerate() {
        if is_head {
            pairs[i].1 = rank as u32 + 1;
        } else {
            pairs[i].0 = rank as u32 + 1;
        }
    }
    CircularArcModel::from_pairs(&pairs)
}

/// Draws short-arc models from consecutive seeds starting at `seed` until
/// one satisfies `accept`, giving up after `attempts` draws. Returns the
/// seed used with the model.
pub fn rejection_sample(
    seed: u64,
    n: usize,
    max_fraction: f64,
    attempts: usize,
    accept: impl Fn(&CircularArcModel) -> bool,
) -> Option<(u64, CircularArcModel)> {
    (0..attempts as u64).find_map(|a| {
        let s = seed.wrapping_mul(1_000_003).wrapping_add(a);
        let m = random_short_arc_model(s, n, max_fraction).ok()?;
        accept(&m).then_some((s, m))
    })
}

/// A family member, as named on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    CyclePower { n: usize, k: usize },
    ThickSpider { n: usize },
    Interval { seed: u64, n: usize },
    RandomCa { seed: u64, n: usize },
}

impl FamilySpec {
    pub fn graph(&self) -> Result<Graph> {
        match *self {
            Self::CyclePower { n, k } => cycle_power(n, k),
            Self::ThickSpider { n } => thick_spider(n),
            Self::Interval { .. } | Self::RandomCa { .. } => Ok(self.model()?.intersection_graph()),
        }
    }

    /// An arc model of the family member. Cycle powers use the canonical
    /// model (which needs `2k+1 < n`); spiders need `n >= 3`.
    pub fn model(&self) -> Result<CircularArcModel> {
        match *self {
            Self::CyclePower { n, k } => canonical_cycle_power_model(n, k),
            Self::ThickSpider { n } => thick_spider_model(n),
            Self::Interval { seed, n } => random_interval_model(seed, n),
            Self::RandomCa { seed, n } => random_ca_model(seed, n),
        }
    }
}

/// The hand-derived spider representations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SpiderFixture {
    S3B1Epg,
    S6B2Epr,
    S7B3Epr,
    S7B2Epg,
}

impl SpiderFixture {
    pub const ALL: [SpiderFixture; 4] = [Self::S3B1Epg, Self::S6B2Epr, Self::S7B3Epr, Self::S7B2Epg];

    pub fn name(self) -> &'static str {
        match self {
            Self::S3B1Epg => "s3-b1epg",
            Self::S6B2Epr => "s6-b2epr",
            Self::S7B3Epr => "s7-b3epr",
            Self::S7B2Epg => "s7-b2epg",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|f| f.name() == name)
    }

    pub fn spider_size(self) -> usize {
        match self {
            Self::S3B1Epg => 3,
            Self::S6B2Epr => 6,
            Self::S7B3Epr | Self::S7B2Epg => 7,
        }
    }

    pub fn bend_bound(self) -> usize {
        match self {
            Self::S3B1Epg => 1,
            Self::S6B2Epr | Self::S7B2Epg => 2,
            Self::S7B3Epr => 3,
        }
    }

    pub fn is_epr(self) -> bool {
        matches!(self, Self::S6B2Epr | Self::S7B3Epr)
    }

    fn text(self) -> &'static str {
        match self {
            Self::S3B1Epg => include_str!("../fixtures/s3-b1epg.paths"),
            Self::S6B2Epr => include_str!("../fixtures/s6-b2epr.paths"),
            Self::S7B3Epr => include_str!("../fixtures/s7-b3epr.paths"),
            Self::S7B2Epg => include_str!("../fixtures/s7-b2epg.paths"),
        }
    }
}

/// Loads a frozen fixture.
pub fn spider_fixture(which: SpiderFixture) -> GridModel {
    parse_paths(which.text()).expect("fixtures are valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_power_shapes() {
        let g = cycle_power(7, 2).unwrap();
        assert!((0..7).all(|v| g.degree(v) == 4));
        let c4 = cycle_power(4, 1).unwrap();
        assert_eq!(c4.size(), 4);
        assert!((0..4).all(|v| c4.degree(v) == 2));
        assert_eq!(cycle_power(7, 3).unwrap().size(), 21);
        assert!(cycle_power(2, 1).is_err());
        assert!(cycle_power(5, 0).is_err());
    }

    #[test]
    fn canonical_c7_2_arcs() {
        let m = canonical_cycle_power_model(7, 2).unwrap();
        let pairs: Vec<(u32, u32)> = m.arcs().iter().map(|a| (a.tail, a.head)).collect();
        assert_eq!(pairs, [(1, 6), (3, 8), (5, 10), (7, 12), (9, 14), (11, 2), (13, 4)]);
        assert_eq!(canonical_cycle_power_model(9, 2).unwrap().n(), 9);
        assert!(canonical_cycle_power_model(5, 2).is_err());
    }

    #[test]
    fn spider_counts() {
        let s3 = thick_spider(3).unwrap();
        assert_eq!((s3.order(), s3.size()), (6, 9));
        let s2 = thick_spider(2).unwrap();
        assert_eq!(s2.size(), 3);
        assert!(s2.has_edge_by_id("c1", "s2").unwrap());
        assert!(!s2.has_edge_by_id("c1", "s1").unwrap());
        assert!(thick_spider(3).unwrap().dominates("c1", "s2").unwrap());
    }

    #[test]
    fn s3_model_is_normal() {
        let m = thick_spider_model(3).unwrap();
        let pairs: Vec<(u32, u32)> = m.arcs().iter().map(|a| (a.tail, a.head)).collect();
        assert_eq!(pairs, [(6, 11), (10, 3), (2, 7), (1, 4), (5, 8), (9, 12)]);
        assert!(m.is_normal());
        assert_eq!(m.intersection_graph(), thick_spider(3).unwrap());
    }

    #[test]
    fn spider_models_represent_spiders() {
        for n in 3..=9 {
            let s = thick_spider(n).unwrap();
            assert_eq!(thick_spider_model(n).unwrap().intersection_graph(), s);
            if n >= 5 {
                assert_eq!(spider_rect_model(n).unwrap().intersection_graph(), s);
            } else {
                assert!(spider_rect_model(n).is_err());
            }
        }
    }

    #[test]
    fn random_models_are_deterministic() {
        assert_eq!(random_ca_model(5, 10).unwrap(), random_ca_model(5, 10).unwrap());
        assert_eq!(random_ca_model(1, 1).unwrap().n(), 1);
        assert!(random_interval_model(3, 12).unwrap().first_uncovered_gap().is_some());
    }
}
