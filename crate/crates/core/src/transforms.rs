//! Conversions between circular-arc models and grid models.
//!
//! The rectangle embeddings all share one layout: the four rectangle corners
//! are pinned to gap midpoints of the circle, and the endpoints lying between
//! two consecutive corners are laid out one lattice point apart along the
//! side joining them. The shorter of two opposite sides is padded so the
//! rectangle closes up. Because the layout preserves the clockwise order of
//! endpoints, two arcs share an open stretch of circle exactly when their
//! paths share a grid edge, and an arc bends once for each corner it
//! contains.

use fixedbitset::FixedBitSet;

use crate::circle::{CirclePosition, CircularArcModel};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::grid::{pt, GridModel, GridPath, GridPoint, Rect};

/// Builds a path of at most three bends per arc, sharing edges only on row
/// 0 and column 0. Arc `(a, b)` with `a < b` runs
/// `(0,b) (0,a) (a,a) (a,0) (b,0)`; an arc through point 0 (`a > b`) runs
/// `(0,0) (0,b) (a,b) (a,0) (2n+1,0)`.
pub fn ca_to_b3_epg(m: &CircularArcModel) -> GridModel {
    let last = 2 * m.n() as u32 + 1;
    let paths = m
        .arcs()
        .iter()
        .map(|arc| {
            let (a, b) = (arc.tail, arc.head);
            let corners = if a < b {
                vec![pt(0, b), pt(0, a), pt(a, a), pt(a, 0), pt(b, 0)]
            } else {
                vec![pt(0, 0), pt(0, b), pt(a, b), pt(a, 0), pt(last, 0)]
            };
            GridPath::new(arc.id.clone(), corners).expect("construction yields valid paths")
        })
        .collect();
    GridModel::epg(paths).expect("arc ids are distinct")
}

/// A rectangle model together with the circle positions its corners were
/// pinned to (top-left, top-right, bottom-right, bottom-left).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RectEmbedding {
    pub model: GridModel,
    pub corners: [CirclePosition; 4],
}

/// Lays the circle of `m` out on a rectangle boundary with its corners at
/// the given gap midpoints, which must be in clockwise order starting from
/// the top-left corner. Coinciding corners are allowed and give an empty
/// side.
pub fn embed_on_rectangle(m: &CircularArcModel, corners: [CirclePosition; 4]) -> Result<RectEmbedding> {
    let circle = m.circle();
    let samples = circle.samples();
    if let Some(c) = corners.iter().find(|c| c.is_endpoint() || c.offset() >= samples) {
        return Err(Error::InvalidParameters(format!("corner {c} is not a gap midpoint")));
    }
    let mut side_len = [0u32; 4];
    let mut used = 0;
    for i in 0..3 {
        let d = (corners[i + 1].offset() + samples - corners[i].offset()) % samples;
        side_len[i] = d / 2;
        used += d;
    }
    if used > samples {
        return Err(Error::InvalidParameters("corners are not in clockwise order".into()));
    }
    side_len[3] = (samples - used) / 2;

    let width = side_len[0].max(side_len[2]) + 1;
    let height = side_len[1].max(side_len[3]) + 1;
    let rect = Rect::new(0, height, 0, width)?;

    // Endpoint numbers clockwise from the top-left corner, assigned to lattice
    // points side by side.
    let first = corners[0].gap_predecessor(circle).expect("corners are gaps") % circle.endpoints() + 1;
    let mut place = vec![pt(0, 0); circle.endpoints() as usize + 1];
    let mut e = first;
    for (side, &count) in side_len.iter().enumerate() {
        for k in 1..=count {
            place[e as usize] = match side {
                0 => pt(0, k),
                1 => pt(k, width),
                2 => pt(height, width - k),
                _ => pt(height - k, 0),
            };
            e = e % circle.endpoints() + 1;
        }
    }

    let rect_corners = rect.corners();
    let corner_index = rect_corners.map(|c| rect.perimeter_index(c).expect("corner on boundary"));
    let perimeter = rect.perimeter();
    let paths = m
        .arcs()
        .iter()
        .map(|arc| {
            let (from, to) = (place[arc.tail as usize], place[arc.head as usize]);
            let t = rect.perimeter_index(from).expect("placed on boundary");
            let h = rect.perimeter_index(to).expect("placed on boundary");
            let span = (h + perimeter - t) % perimeter;
            let mut passed: Vec<(u32, GridPoint)> = (0..4)
                .map(|i| ((corner_index[i] + perimeter - t) % perimeter, rect_corners[i]))
                .filter(|&(d, _)| d > 0 && d < span)
                .collect();
            passed.sort_unstable();
            let mut pts = vec![from];
            pts.extend(passed.into_iter().map(|(_, c)| c));
            pts.push(to);
            GridPath::new(arc.id.clone(), pts).expect("boundary walk is a valid path")
        })
        .collect();
    Ok(RectEmbedding {
        model: GridModel::new(paths, Some(rect)).expect("arc ids are distinct"),
        corners,
    })
}

/// Spreads the endpoints evenly over the four sides, with the top-left
/// corner at point 0. Every path has at most four bends.
pub fn ca_to_b4_epr(m: &CircularArcModel) -> RectEmbedding {
    let n = m.n() as u32;
    let (long, short) = (n.div_ceil(2), n / 2);
    let samples = 4 * n;
    let offsets = [0, 2 * long, 2 * (long + short), 2 * (2 * long + short)];
    embed_on_rectangle(m, offsets.map(|o| CirclePosition::from_offset(o % samples))).expect("even split is clockwise")
}

/// The cut points used for a normal model: `p` is point 0 and `q` is the
/// first gap midpoint outside every arc that contains `p`.
pub fn nca_cut_points(m: &CircularArcModel) -> Result<(CirclePosition, CirclePosition)> {
    if !m.is_normal() {
        return Err(Error::NotNormal);
    }
    let c = m.circle();
    let p = CirclePosition::ZERO;
    let through_p: Vec<_> = m.arcs().iter().filter(|a| c.contains(a, p)).collect();
    let q = c
        .gaps()
        .filter(|&g| g != p)
        .find(|&g| through_p.iter().all(|a| !c.contains(a, g)))
        .ok_or(Error::NotNormal)?;
    Ok((p, q))
}

/// Places two consecutive corners at `p` and the other two at `q`, so an arc
/// bends twice if it contains `p` or `q` and not at all otherwise.
pub fn nca_to_b2_epr(m: &CircularArcModel) -> Result<RectEmbedding> {
    let (p, q) = nca_cut_points(m)?;
    embed_on_rectangle(m, [p, p, q, q])
}

/// Four gap midpoints, in clockwise order, such that no arc contains two of
/// them. A midpoint may repeat only when no arc contains it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FourPoints {
    points: [CirclePosition; 4],
}

impl FourPoints {
    /// Sorts the points clockwise; no certification happens here.
    pub fn new(mut points: [CirclePosition; 4]) -> Self {
        points.sort_unstable();
        Self { points }
    }

    pub fn points(&self) -> [CirclePosition; 4] {
        self.points
    }

    /// Whether every point is a gap midpoint of `m` and no arc contains two
    /// of them (a repeated point counts twice).
    pub fn is_certified_for(&self, m: &CircularArcModel) -> bool {
        let c = m.circle();
        self.points
            .iter()
            .all(|p| p.is_gap() && p.offset() < c.samples())
            && m.arcs()
                .iter()
                .all(|a| self.points.iter().filter(|&&p| c.contains(a, p)).count() <= 1)
    }
}

/// Arcs containing each gap midpoint, in gap order.
fn gap_masks(m: &CircularArcModel) -> Vec<FixedBitSet> {
    let c = m.circle();
    c.gaps()
        .map(|g| {
            let mut mask = FixedBitSet::with_capacity(m.n());
            for (i, a) in m.arcs().iter().enumerate() {
                if c.contains(a, g) {
                    mask.insert(i);
                }
            }
            mask
        })
        .collect()
}

/// The lexicographically first quadruple of gap midpoints no arc contains
/// two of. Checking midpoints suffices: membership in an open arc is
/// constant between consecutive endpoints, and an endpoint lies in every arc
/// containing either neighbouring gap, so moving a point from an endpoint to
/// an adjacent midpoint never adds a containment. Exhaustive with pruning,
/// so quartic in the number of arcs.
pub fn find_four_points(m: &CircularArcModel) -> Option<FourPoints> {
    let masks = gap_masks(m);
    let g = masks.len();
    let ok = |a: usize, b: usize| masks[a].is_disjoint(&masks[b]);
    for i in 0..g {
        for j in i..g {
            if !ok(i, j) {
                continue;
            }
            for k in j..g {
                if !(ok(i, k) && ok(j, k)) {
                    continue;
                }
                for l in k..g {
                    if ok(i, l) && ok(j, l) && ok(k, l) {
                        let pos = [i, j, k, l].map(|x| CirclePosition::from_offset(2 * x as u32));
                        return Some(FourPoints::new(pos));
                    }
                }
            }
        }
    }
    None
}

/// Puts the rectangle corners at the four points, so every path bends at
/// most once.
pub fn nhca_to_b1_epr(m: &CircularArcModel, fp: &FourPoints) -> Result<RectEmbedding> {
    if !fp.is_certified_for(m) {
        return Err(Error::UncertifiedFourPoints);
    }
    embed_on_rectangle(m, fp.points())
}

/// Reads an EPR model back as arcs of the rectangle boundary, walked
/// clockwise from the top-left corner. Endpoints falling on the same lattice
/// point are separated so that a path ending there comes before a path
/// starting there; ties among starts or among ends follow path id order.
pub fn epr_to_ca(gm: &GridModel) -> Result<CircularArcModel> {
    if let Some(why) = gm.epr_violation() {
        return Err(Error::NotEpr(why));
    }
    let rect = gm.rect().expect("validated EPR model has a rectangle");
    let perimeter = rect.perimeter();
    // (boundary index, 0 for a head and 1 for a tail, path id, path order)
    let mut keyed: Vec<(u32, u8, &str, usize)> = Vec::with_capacity(2 * gm.len());
    for (i, path) in gm.paths().iter().enumerate() {
        let mut used = FixedBitSet::with_capacity(perimeter as usize);
        for e in path.edges() {
            let (a, b) = e.ends();
            let (x, y) = (
                rect.perimeter_index(a).expect("edge on boundary"),
                rect.perimeter_index(b).expect("edge on boundary"),
            );
            // The edge from boundary index x to x + 1 is numbered x.
            let first = if (x + 1) % perimeter == y { x } else { y };
            used.insert(first as usize);
        }
        if used.is_full() {
            return Err(Error::NotEpr(format!("path {} covers the whole boundary", path.id())));
        }
        let start = used
            .ones()
            .find(|&s| !used.contains((s + perimeter as usize - 1) % perimeter as usize))
            .expect("a proper run has a start") as u32;
        let len = used.count_ones(..) as u32;
        keyed.push((start, 1, path.id(), i));
        keyed.push(((start + len) % perimeter, 0, path.id(), i));
    }
    keyed.sort_unstable();
    let mut arcs: Vec<crate::circle::Arc> = gm
        .paths()
        .iter()
        .map(|p| crate::circle::Arc::new(p.id(), 0, 0))
        .collect();
    for (rank, &(_, kind, _, i)) in keyed.iter().enumerate() {
        if kind == 0 {
            arcs[i].head = rank as u32 + 1;
        } else {
            arcs[i].tail = rank as u32 + 1;
        }
    }
    CircularArcModel::new(arcs)
}

/// Four disjoint vertex sets of a graph, meant to be pairwise separated in
/// cyclic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparationWitness {
    pub sets: [Vec<String>; 4],
}

/// `H_i` is the set of vertices whose arcs contain the `i`-th point.
pub fn derive_separating_cliques(m: &CircularArcModel, fp: &FourPoints) -> Result<SeparationWitness> {
    if !fp.is_certified_for(m) {
        return Err(Error::UncertifiedFourPoints);
    }
    let c = m.circle();
    let mut sets: [Vec<String>; 4] = Default::default();
    for (i, &p) in fp.points().iter().enumerate() {
        sets[i] = m
            .arcs()
            .iter()
            .filter(|a| c.contains(a, p))
            .map(|a| a.id.clone())
            .collect();
        if sets[i].is_empty() {
            return Err(Error::ChordalAlongModel(i + 1));
        }
    }
    Ok(SeparationWitness { sets })
}

/// Checks that the four sets are nonempty, disjoint, connected (complete when
/// `require_complete`), that `H1` and `H3` lie in different components of
/// `G - (H2 ∪ H4)`, and that `H2` and `H4` lie in different components of
/// `G - (H1 ∪ H3)`.
pub fn verify_separation(g: &Graph, w: &SeparationWitness, require_complete: bool) -> bool {
    let n = g.order();
    let mut sets: Vec<FixedBitSet> = Vec::with_capacity(4);
    for ids in &w.sets {
        let mut s = FixedBitSet::with_capacity(n);
        for id in ids {
            match g.index_of(id) {
                Some(v) if !s.contains(v) => s.insert(v),
                _ => return false,
            }
        }
        if s.is_clear() {
            return false;
        }
        sets.push(s);
    }
    for i in 0..4 {
        for j in i + 1..4 {
            if !sets[i].is_disjoint(&sets[j]) {
                return false;
            }
        }
    }
    for s in &sets {
        let members: Vec<usize> = s.ones().collect();
        if require_complete {
            let complete = members
                .iter()
                .enumerate()
                .all(|(a, &u)| members[a + 1..].iter().all(|&v| g.has_edge(u, v)));
            if !complete {
                return false;
            }
        } else {
            let labels = g.component_labels(s);
            if members.iter().any(|&v| labels[v] != labels[members[0]]) {
                return false;
            }
        }
    }
    let separated = |a: &FixedBitSet, b: &FixedBitSet, r1: &FixedBitSet, r2: &FixedBitSet| {
        let mut alive = FixedBitSet::with_capacity(n);
        alive.insert_range(..);
        alive.difference_with(r1);
        alive.difference_with(r2);
        let labels = g.component_labels(&alive);
        a.ones().all(|u| b.ones().all(|v| labels[u] != labels[v]))
    };
    separated(&sets[0], &sets[2], &sets[1], &sets[3]) && separated(&sets[1], &sets[3], &sets[0], &sets[2])
}
