//! Circular-arc models with open-arc semantics.
//!
//! A model with `n` arcs lives on a circle whose `2n` arc endpoints are
//! numbered `1..=2n` clockwise. Point 0 sits in the gap between `2n` and `1`.
//! Every predicate here is decided on the `4n` sample points made of the
//! endpoints and the gap midpoints: arc boundaries are endpoints, so
//! membership is constant inside each gap.

use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A point of the circle, stored as the number of half-steps clockwise from
/// point 0. Endpoint `e` sits at offset `2e - 1`; the gap after endpoint `e`
/// sits at offset `2e` (so the gap after `2n` is point 0 itself).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CirclePosition(u32);

impl CirclePosition {
    pub const ZERO: CirclePosition = CirclePosition(0);

    pub fn from_offset(offset: u32) -> Self {
        Self(offset)
    }

    pub fn offset(self) -> u32 {
        self.0
    }

    pub fn is_endpoint(self) -> bool {
        self.0 % 2 == 1
    }

    pub fn is_gap(self) -> bool {
        !self.is_endpoint()
    }

    /// The endpoint number, if this position is an endpoint.
    pub fn endpoint_number(self) -> Option<u32> {
        self.is_endpoint().then_some(self.0.div_ceil(2))
    }

    /// For a gap midpoint, the endpoint immediately before it clockwise
    /// (`2n` for point 0 on a circle with `2n` endpoints).
    pub fn gap_predecessor(self, circle: Circle) -> Option<u32> {
        self.is_gap()
            .then(|| if self.0 == 0 { circle.endpoints() } else { self.0 / 2 })
    }
}

impl fmt::Display for CirclePosition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.endpoint_number() {
            Some(e) => write!(f, "e{e}"),
            None => write!(f, "m{}", self.0 / 2),
        }
    }
}

/// An open arc traversing the circle clockwise from `tail` to `head`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arc {
    pub id: String,
    pub tail: u32,
    pub head: u32,
}

impl Arc {
    pub fn new(id: impl Into<String>, tail: u32, head: u32) -> Self {
        Self {
            id: id.into(),
            tail,
            head,
        }
    }

    /// Whether the arc passes through point 0.
    pub fn wraps(&self) -> bool {
        self.tail > self.head
    }
}

/// The discretised circle: only the number of endpoints matters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Circle {
    endpoints: u32,
}

impl Circle {
    pub fn with_endpoints(endpoints: u32) -> Self {
        assert!(endpoints >= 2, "a circle needs at least two endpoints");
        Self { endpoints }
    }

    pub fn endpoints(self) -> u32 {
        self.endpoints
    }

    /// Number of sample points (endpoints plus gap midpoints).
    pub fn samples(self) -> u32 {
        2 * self.endpoints
    }

    pub fn endpoint(self, e: u32) -> CirclePosition {
        debug_assert!((1..=self.endpoints).contains(&e));
        CirclePosition(2 * e - 1)
    }

    pub fn gap_after(self, e: u32) -> CirclePosition {
        debug_assert!((1..=self.endpoints).contains(&e));
        CirclePosition((2 * e) % self.samples())
    }

    /// Gap midpoints in index order, starting with point 0.
    pub fn gaps(self) -> impl Iterator<Item = CirclePosition> {
        (0..self.endpoints).map(|i| CirclePosition(2 * i))
    }

    fn forward(self, from: u32, to: u32) -> u32 {
        let m = self.samples();
        (to % m + m - from % m) % m
    }

    /// Whether `p` lies strictly inside the open arc.
    pub fn contains(self, arc: &Arc, p: CirclePosition) -> bool {
        let tail = 2 * arc.tail - 1;
        let span = self.forward(tail, 2 * arc.head - 1);
        let d = self.forward(tail, p.0);
        d > 0 && d < span
    }

    /// Whether two open arcs share a point. Decided by the gap right after
    /// each tail, which also handles arcs sharing an endpoint.
    pub fn arcs_intersect(self, a: &Arc, b: &Arc) -> bool {
        self.contains(a, self.gap_after(b.tail)) || self.contains(b, self.gap_after(a.tail))
    }

    /// The sample points inside an arc.
    pub fn sample_mask(self, arc: &Arc) -> FixedBitSet {
        let m = self.samples();
        let mut mask = FixedBitSet::with_capacity(m as usize);
        let tail = 2 * arc.tail - 1;
        let span = self.forward(tail, 2 * arc.head - 1);
        for d in 1..span {
            mask.insert(((tail + d) % m) as usize);
        }
        mask
    }

    /// Whether the union of the arcs is the whole circle.
    pub fn covers<'a>(self, arcs: impl IntoIterator<Item = &'a Arc>) -> bool {
        let mut union = FixedBitSet::with_capacity(self.samples() as usize);
        for arc in arcs {
            union.union_with(&self.sample_mask(arc));
        }
        union.is_full()
    }

    /// Whether the point set of `b` is a proper subset of that of `a`.
    pub fn properly_contains(self, a: &Arc, b: &Arc) -> bool {
        let (ma, mb) = (self.sample_mask(a), self.sample_mask(b));
        mb.is_subset(&ma) && ma != mb
    }
}

/// Something wrong with a list of arcs that prevents it being a model.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CircleModelViolation {
    Empty,
    DuplicateId(String),
    TailEqualsHead { id: String },
    OutOfRange { id: String, endpoint: u32, max: u32 },
    DuplicateEndpoint { endpoint: u32, first: String, second: String },
}

impl fmt::Display for CircleModelViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Empty => write!(f, "a model needs at least one arc"),
            Self::DuplicateId(id) => write!(f, "duplicate arc id {id}"),
            Self::TailEqualsHead { id } => write!(f, "arc {id} has tail equal to head"),
            Self::OutOfRange { id, endpoint, max } => {
                write!(f, "arc {id} uses endpoint {endpoint} outside 1..={max}")
            }
            Self::DuplicateEndpoint {
                endpoint,
                first,
                second,
            } => write!(f, "endpoint {endpoint} used by both {first} and {second}"),
        }
    }
}

/// A circular-arc model: `n` open arcs whose `2n` endpoints are exactly
/// `1..=2n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircularArcModel {
    arcs: Vec<Arc>,
}

impl CircularArcModel {
    /// Lists every reason `arcs` is not a valid model; empty when valid.
    pub fn validate(arcs: &[Arc]) -> Vec<CircleModelViolation> {
        let mut out = Vec::new();
        if arcs.is_empty() {
            out.push(CircleModelViolation::Empty);
            return out;
        }
        let max = 2 * arcs.len() as u32;
        let mut ids = std::collections::HashSet::new();
        let mut owner: Vec<Option<&str>> = vec![None; max as usize + 1];
        for arc in arcs {
            if !ids.insert(arc.id.as_str()) {
                out.push(CircleModelViolation::DuplicateId(arc.id.clone()));
            }
            if arc.tail == arc.head {
                out.push(CircleModelViolation::TailEqualsHead { id: arc.id.clone() });
            }
            let ends: &[u32] = if arc.tail == arc.head {
                &[arc.tail][..]
            } else {
                &[arc.tail, arc.head][..]
            };
            for &e in ends {
                if e == 0 || e > max {
                    out.push(CircleModelViolation::OutOfRange {
                        id: arc.id.clone(),
                        endpoint: e,
                        max,
                    });
                } else if let Some(first) = owner[e as usize] {
                    out.push(CircleModelViolation::DuplicateEndpoint {
                        endpoint: e,
                        first: first.to_owned(),
                        second: arc.id.clone(),
                    });
                } else {
                    owner[e as usize] = Some(&arc.id);
                }
            }
        }
        out
    }

    pub fn new(arcs: Vec<Arc>) -> Result<Self> {
        let violations = Self::validate(&arcs);
        if violations.is_empty() {
            Ok(Self { arcs })
        } else {
            Err(Error::InvalidModel(violations))
        }
    }

    /// Convenience constructor naming the arcs `v1..vn`.
    pub fn from_pairs(pairs: &[(u32, u32)]) -> Result<Self> {
        Self::new(
            pairs
                .iter()
                .enumerate()
                .map(|(i, &(t, h))| Arc::new(format!("v{}", i + 1), t, h))
                .collect(),
        )
    }

    pub fn n(&self) -> usize {
        self.arcs.len()
    }

    pub fn circle(&self) -> Circle {
        Circle::with_endpoints(2 * self.arcs.len() as u32)
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn arc(&self, id: &str) -> Option<&Arc> {
        self.arcs.iter().find(|a| a.id == id)
    }

    pub fn into_arcs(self) -> Vec<Arc> {
        self.arcs
    }

    pub fn arc_masks(&self) -> Vec<FixedBitSet> {
        let c = self.circle();
        self.arcs.iter().map(|a| c.sample_mask(a)).collect()
    }

    /// One vertex per arc (in model order), adjacent iff the arcs intersect.
    pub fn intersection_graph(&self) -> Graph {
        let mut g = Graph::new(self.arcs.iter().map(|a| a.id.clone()))
            .expect("validated models have distinct ids");
        let c = self.circle();
        for i in 0..self.n() {
            for j in i + 1..self.n() {
                if c.arcs_intersect(&self.arcs[i], &self.arcs[j]) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Indices of the first subset of at most `max_size` arcs covering the
    /// circle, smallest subsets first.
    pub fn covering_subset(&self, max_size: usize) -> Option<Vec<usize>> {
        let masks = self.arc_masks();
        let full = self.circle().samples() as usize;
        let n = self.n();
        if max_size >= 1 {
            if let Some(i) = (0..n).find(|&i| masks[i].count_ones(..) == full) {
                return Some(vec![i]);
            }
        }
        if max_size >= 2 {
            for i in 0..n {
                for j in i + 1..n {
                    if masks[i].union_count(&masks[j]) == full {
                        return Some(vec![i, j]);
                    }
                }
            }
        }
        if max_size >= 3 {
            for i in 0..n {
                for j in i + 1..n {
                    let mut pair = masks[i].clone();
                    pair.union_with(&masks[j]);
                    for (k, third) in masks.iter().enumerate().skip(j + 1) {
                        if pair.union_count(third) == full {
                            return Some(vec![i, j, k]);
                        }
                    }
                }
            }
        }
        if max_size > 3 {
            unimplemented!("covering subsets are only searched up to size 3");
        }
        None
    }

    /// No two arcs cover the circle.
    pub fn is_normal(&self) -> bool {
        self.covering_subset(2).is_none()
    }

    /// No three or fewer arcs cover the circle.
    pub fn is_normal_helly(&self) -> bool {
        self.covering_subset(3).is_none()
    }

    /// The first gap midpoint (in index order from point 0) that no arc
    /// contains.
    pub fn first_uncovered_gap(&self) -> Option<CirclePosition> {
        let c = self.circle();
        c.gaps()
            .find(|&p| self.arcs.iter().all(|a| !c.contains(a, p)))
    }

    /// Pairs `(v, w)` of arc indices where `v` dominates `w` in the
    /// intersection graph but the arc of `w` is not yet inside the arc of `v`,
    /// ordered by `v` then `w`.
    fn shrinkable_pairs(&self, g: &Graph) -> impl Iterator<Item = (usize, usize)> + '_ {
        let c = self.circle();
        let g = g.clone();
        (0..self.n()).flat_map(move |v| (0..self.n()).map(move |w| (v, w))).filter(move |&(v, w)| {
            g.dominates_index(v, w) && !c.sample_mask(&self.arcs[w]).is_subset(&c.sample_mask(&self.arcs[v]))
        })
    }

    /// Replaces the arc of a dominated vertex `w` by its intersection with
    /// the arc of a dominating vertex `v`, for the first such pair (ordered by
    /// `v`, then `w`) where this changes the model. The result is renumbered
    /// onto `1..=2n`; a moved endpoint is placed just inside the intersection
    /// so endpoints stay distinct. Returns the model unchanged when there is
    /// nothing to shrink.
    pub fn shrink_dominated(&self) -> Result<Self> {
        let g = self.intersection_graph();
        let Some((v, w)) = self.shrinkable_pairs(&g).next() else {
            return Ok(self.clone());
        };
        let shrunk = self.shrink_pair(v, w)?;
        if shrunk.intersection_graph() != g {
            return Err(Error::DominationNotRealizable);
        }
        Ok(shrunk)
    }

    fn shrink_pair(&self, v: usize, w: usize) -> Result<Self> {
        let c = self.circle();
        let m = c.samples() as usize;
        let mut meet = c.sample_mask(&self.arcs[w]);
        meet.intersect_with(&c.sample_mask(&self.arcs[v]));
        // The intersection must be one nonempty run of consecutive samples.
        let starts: Vec<usize> = meet
            .ones()
            .filter(|&s| !meet.contains((s + m - 1) % m))
            .collect();
        let [start] = starts[..] else {
            return Err(Error::DominationNotRealizable);
        };
        let mut end = start;
        while meet.contains((end + 1) % m) {
            end = (end + 1) % m;
        }
        let before = ((start + m - 1) % m) as u32;
        let after = ((end + 1) % m) as u32;
        let new_tail = CirclePosition(before).endpoint_number().expect("run boundary is an endpoint");
        let new_head = CirclePosition(after).endpoint_number().expect("run boundary is an endpoint");

        // Sort keys are four times the endpoint number; a moved endpoint of `w`
        // sits one unit inside the intersection.
        let arc_w = &self.arcs[w];
        let tail_key = if new_tail == arc_w.tail { 4 * new_tail } else { 4 * new_tail + 1 };
        let head_key = if new_head == arc_w.head { 4 * new_head } else { 4 * new_head - 1 };
        let mut keyed: Vec<(u32, usize, bool)> = Vec::with_capacity(2 * self.n());
        for (i, arc) in self.arcs.iter().enumerate() {
            if i == w {
                keyed.push((tail_key, i, false));
                keyed.push((head_key, i, true));
            } else {
                keyed.push((4 * arc.tail, i, false));
                keyed.push((4 * arc.head, i, true));
            }
        }
        keyed.sort_unstable();
        let mut arcs = self.arcs.clone();
        for (rank, &(_, i, is_head)) in keyed.iter().enumerate() {
            let e = rank as u32 + 1;
            if is_head {
                arcs[i].head = e;
            } else {
                arcs[i].tail = e;
            }
        }
        Self::new(arcs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(endpoints: u32) -> Circle {
        Circle::with_endpoints(endpoints)
    }

    fn a(t: u32, h: u32) -> Arc {
        Arc::new("x", t, h)
    }

    #[test]
    fn overlapping_arcs_intersect() {
        assert!(c(6).arcs_intersect(&a(1, 4), &a(3, 6)));
    }

    #[test]
    fn complementary_arcs_are_disjoint() {
        assert!(!c(2).arcs_intersect(&a(1, 2), &a(2, 1)));
        assert!(!c(10).arcs_intersect(&a(1, 2), &a(2, 1)));
    }

    #[test]
    fn wrapping_arc_meets_arc_after_zero() {
        assert!(c(10).arcs_intersect(&a(5, 2), &a(1, 4)));
    }

    #[test]
    fn containment_is_open() {
        let circle = c(10);
        assert!(circle.contains(&a(1, 6), circle.endpoint(3)));
        assert!(!circle.contains(&a(1, 6), circle.endpoint(1)));
        assert!(!circle.contains(&a(1, 6), circle.endpoint(6)));
        assert!(circle.contains(&a(9, 2), CirclePosition::ZERO));
        assert!(circle.contains(&a(9, 2), circle.gap_after(10)));
    }

    #[test]
    fn covering_examples() {
        let circle = c(10);
        assert!(circle.covers(&[a(1, 6), a(5, 10), a(9, 2)]));
        assert!(!circle.covers(&[a(1, 4)]));
        assert!(!circle.covers(&[a(1, 2), a(2, 1)]));
    }

    #[test]
    fn proper_containment() {
        let circle = c(10);
        assert!(circle.properly_contains(&a(1, 8), &a(3, 6)));
        assert!(!circle.properly_contains(&a(1, 8), &a(1, 8)));
        assert!(!circle.properly_contains(&a(1, 4), &a(3, 6)));
        assert!(!circle.properly_contains(&a(3, 6), &a(1, 8)));
    }

    #[test]
    fn validation_reports_every_violation() {
        let arcs = vec![Arc::new("a", 1, 3), Arc::new("b", 3, 2)];
        let v = CircularArcModel::validate(&arcs);
        assert_eq!(
            v,
            vec![CircleModelViolation::DuplicateEndpoint {
                endpoint: 3,
                first: "a".into(),
                second: "b".into()
            }]
        );
        let v = CircularArcModel::validate(&[Arc::new("a", 1, 1)]);
        assert_eq!(v, vec![CircleModelViolation::TailEqualsHead { id: "a".into() }]);
        let v = CircularArcModel::validate(&[Arc::new("a", 1, 5)]);
        assert!(matches!(v[0], CircleModelViolation::OutOfRange { endpoint: 5, .. }));
        assert_eq!(CircularArcModel::validate(&[]), vec![CircleModelViolation::Empty]);
    }

    #[test]
    fn triangle_model() {
        let m = CircularArcModel::from_pairs(&[(1, 4), (3, 6), (5, 2)]).unwrap();
        let g = m.intersection_graph();
        assert_eq!(g.size(), 3);
    }

    #[test]
    fn disjoint_arcs_give_isolated_vertices() {
        let m = CircularArcModel::from_pairs(&[(1, 2), (3, 4)]).unwrap();
        assert_eq!(m.intersection_graph().size(), 0);
        assert!(m.is_normal_helly());
    }

    #[test]
    fn two_arc_cover_is_not_normal() {
        // (3,2) covers everything except the closed stretch [2,3]; (1,4)
        // fills that stretch.
        let m = CircularArcModel::from_pairs(&[(1, 4), (3, 2)]).unwrap();
        assert!(!m.is_normal());
        assert!(!m.is_normal_helly());
        assert_eq!(m.covering_subset(3), Some(vec![0, 1]));
    }

    #[test]
    fn shrink_moves_head_inside_dominator() {
        // v=(1,8) dominates w=(3,10); z=(7,9) still meets the shrunk w.
        let m = CircularArcModel::new(vec![
            Arc::new("v", 1, 8),
            Arc::new("w", 3, 10),
            Arc::new("x", 2, 4),
            Arc::new("y", 5, 6),
            Arc::new("z", 7, 9),
        ])
        .unwrap();
        let g = m.intersection_graph();
        assert!(g.dominates("v", "w").unwrap());
        let s = m.shrink_dominated().unwrap();
        assert_eq!(s.intersection_graph(), g);
        assert_eq!(s.arc("w").unwrap(), &Arc::new("w", 3, 8));
        assert_eq!(s.arc("v").unwrap(), &Arc::new("v", 1, 9));
        let circle = s.circle();
        assert!(circle.properly_contains(s.arc("v").unwrap(), s.arc("w").unwrap()));
    }

    #[test]
    fn shrink_without_domination_is_identity() {
        let m = CircularArcModel::from_pairs(&[(1, 2), (3, 4)]).unwrap();
        assert_eq!(m.shrink_dominated().unwrap(), m);
    }

    #[test]
    fn nested_arcs_already_contained_are_untouched() {
        // (3,6) inside (1,10): the outer arc dominates the inner one, which
        // already lies inside it.
        let m = CircularArcModel::from_pairs(&[(1, 10), (3, 6), (2, 4), (5, 7), (8, 9)]).unwrap();
        let s = m.shrink_dominated().unwrap();
        assert_eq!(s.intersection_graph(), m.intersection_graph());
        let c = s.circle();
        assert!(c.properly_contains(s.arc("v1").unwrap(), s.arc("v2").unwrap()));
        // v2 dominates v3, so v3 is the arc that shrinks.
        assert!(c.properly_contains(s.arc("v2").unwrap(), s.arc("v3").unwrap()));
    }
}
