//! Chordality, induced-subgraph search, the cycle-power containment
//! criterion and the B1-EPR decision for a supplied model.

use fixedbitset::FixedBitSet;

use crate::circle::CircularArcModel;
use crate::error::{Error, Result};
use crate::families::cycle_power;
use crate::graph::Graph;
use crate::grid::GridModel;
use crate::transforms::{embed_on_rectangle, find_four_points, nhca_to_b1_epr, FourPoints};

/// Maximum cardinality search followed by a perfect-elimination check.
pub fn is_chordal(g: &Graph) -> bool {
    let n = g.order();
    let mut weight = vec![0usize; n];
    let mut visited = FixedBitSet::with_capacity(n);
    let mut order = Vec::with_capacity(n);
    let mut position = vec![0; n];
    for step in 0..n {
        let v = (0..n)
            .filter(|&v| !visited.contains(v))
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .expect("unvisited vertex remains");
        visited.insert(v);
        order.push(v);
        position[v] = step;
        for u in g.neighbors(v) {
            if !visited.contains(u) {
                weight[u] += 1;
            }
        }
    }
    // The reverse of the visit order is a perfect elimination ordering iff
    // the graph is chordal. For each v, its earlier-visited neighbours must
    // all be adjacent to the latest of them.
    for &v in &order {
        let earlier: Vec<usize> = g.neighbors(v).filter(|&u| position[u] < position[v]).collect();
        if let Some(&parent) = earlier.iter().max_by_key(|&&u| position[u]) {
            if earlier.iter().any(|&u| u != parent && !g.has_edge(u, parent)) {
                return false;
            }
        }
    }
    true
}

struct Matcher<'a> {
    g: &'a Graph,
    h: &'a Graph,
    order: Vec<usize>,
    map: Vec<usize>,
    used: FixedBitSet,
}

impl Matcher<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let x = self.order[depth];
        let mut cand = FixedBitSet::with_capacity(self.g.order());
        cand.insert_range(..);
        cand.difference_with(&self.used);
        for &y in &self.order[..depth] {
            let fy = self.map[y];
            if self.h.has_edge(x, y) {
                cand.intersect_with(self.g.neighborhood(fy));
            } else {
                cand.difference_with(self.g.neighborhood(fy));
            }
        }
        let need = self.h.degree(x);
        for v in cand.ones().collect::<Vec<_>>() {
            if self.g.degree(v) < need {
                continue;
            }
            self.map[x] = v;
            self.used.insert(v);
            if self.extend(depth + 1) {
                return true;
            }
            self.used.set(v, false);
        }
        false
    }
}

/// An order on the vertices of `h` that starts at a vertex of largest degree
/// and then always takes the vertex with most already-ordered neighbours
/// (ties by degree), so adjacency constraints bite early.
fn search_order(h: &Graph) -> Vec<usize> {
    let n = h.order();
    let mut order = Vec::with_capacity(n);
    let mut placed = FixedBitSet::with_capacity(n);
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| !placed.contains(v))
            .max_by_key(|&v| {
                let links = h.neighbors(v).filter(|&u| placed.contains(u)).count();
                (links, h.degree(v), std::cmp::Reverse(v))
            })
            .expect("unplaced vertex remains");
        placed.insert(next);
        order.push(next);
    }
    order
}

fn find_induced_impl(g: &Graph, h: &Graph, pin_first: bool) -> Option<Vec<usize>> {
    if h.order() > g.order() {
        return None;
    }
    if h.order() == 0 {
        return Some(Vec::new());
    }
    let mut m = Matcher {
        g,
        h,
        order: search_order(h),
        map: vec![usize::MAX; h.order()],
        used: FixedBitSet::with_capacity(g.order()),
    };
    if pin_first {
        let x = m.order[0];
        if g.degree(0) < h.degree(x) {
            return None;
        }
        m.map[x] = 0;
        m.used.insert(0);
        return m.extend(1).then_some(m.map);
    }
    m.extend(0).then_some(m.map)
}

/// An embedding of `h` as an induced subgraph of `g`, as the image of each
/// vertex of `h`. Backtracking with adjacency and degree pruning;
/// exponential in the worst case.
pub fn find_induced(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    find_induced_impl(g, h, false)
}

pub fn contains_induced(g: &Graph, h: &Graph) -> bool {
    find_induced(g, h).is_some()
}

/// Same as [`contains_induced`] but maps the first searched vertex of `h`
/// to vertex 0 of `g` only. Correct only when `g` is vertex-transitive
/// (cycle powers, for example), which the caller must guarantee.
pub fn contains_induced_in_transitive(g: &Graph, h: &Graph) -> bool {
    find_induced_impl(g, h, true).is_some()
}

/// Whether `C_n^k` contains `C_{4t-1}^t`, via
/// `(4t-5)/(t-1) < n/k <= (4t-1)/t` in exact integer arithmetic.
pub fn cycle_power_contains_criterion(n: u64, k: u64, t: u64) -> Result<bool> {
    if k < 2 || t < 2 || 2 * k + 1 >= n {
        return Err(Error::InvalidParameters(format!(
            "criterion needs k >= 2, t >= 2 and 2k+1 < n, got n={n} k={k} t={t}"
        )));
    }
    Ok((4 * t - 5) * k < (t - 1) * n && t * n <= (4 * t - 1) * k)
}

/// The smallest `t` in `2..=t_max` such that `g` contains `C_{4t-1}^t`.
pub fn has_power_cycle_obstruction(g: &Graph, t_max: usize) -> Option<usize> {
    (2..=t_max)
        .take_while(|&t| 4 * t - 1 <= g.order())
        .find(|&t| contains_induced(g, &cycle_power(4 * t - 1, t).expect("valid parameters")))
}

/// Why a model was not turned into a B1-EPR representation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NoReason {
    /// The supplied model is not normal Helly. This says nothing about other
    /// models of the same graph.
    NotNhModel,
    /// No four points exist in the supplied model.
    NoFourPoints,
}

impl NoReason {
    pub fn name(self) -> &'static str {
        match self {
            Self::NotNhModel => "not-nh-model",
            Self::NoFourPoints => "no-four-points",
        }
    }
}

/// Outcome of [`decide_b1_epr`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum B1Decision {
    /// A representation with at most one bend per path.
    Yes { model: GridModel, four_points: FourPoints },
    /// The graph is an interval graph; the representation has no bends.
    YesInterval { model: GridModel },
    No {
        reason: NoReason,
        chordal: bool,
        /// Smallest `t` with an induced `C_{4t-1}^t`, searched only for
        /// non-chordal normal Helly models without four points.
        obstruction: Option<usize>,
    },
}

impl B1Decision {
    pub fn is_yes(&self) -> bool {
        !matches!(self, Self::No { .. })
    }

    pub fn model(&self) -> Option<&GridModel> {
        match self {
            Self::Yes { model, .. } | Self::YesInterval { model } => Some(model),
            Self::No { .. } => None,
        }
    }
}

/// Cuts the circle at an uncovered gap, after shrinking dominated arcs if
/// no gap is uncovered yet.
fn interval_layout(m: &CircularArcModel) -> Option<GridModel> {
    let mut cur = m.clone();
    for _ in 0..=m.n() * m.n() {
        if let Some(gap) = cur.first_uncovered_gap() {
            let e = embed_on_rectangle(&cur, [gap; 4]).expect("a single gap is a valid corner set");
            return Some(e.model);
        }
        let next = cur.shrink_dominated().ok()?;
        if next == cur {
            return None;
        }
        cur = next;
    }
    None
}

/// Decides B1-EPR membership from a model. Models that are not normal Helly
/// are rejected outright. Chordal graphs get a bendless interval layout when
/// the model can be cut open; otherwise, and for all non-chordal graphs, the
/// answer is decided by the four-point search on the supplied model.
pub fn decide_b1_epr(m: &CircularArcModel) -> B1Decision {
    let g = m.intersection_graph();
    if !m.is_normal_helly() {
        return B1Decision::No {
            reason: NoReason::NotNhModel,
            chordal: is_chordal(&g),
            obstruction: None,
        };
    }
    let chordal = is_chordal(&g);
    if chordal {
        if let Some(model) = interval_layout(m) {
            return B1Decision::YesInterval { model };
        }
    }
    match find_four_points(m) {
        Some(fp) => B1Decision::Yes {
            model: nhca_to_b1_epr(m, &fp).expect("search returns certified points").model,
            four_points: fp,
        },
        None => B1Decision::No {
            reason: NoReason::NoFourPoints,
            chordal,
            obstruction: if chordal {
                None
            } else {
                has_power_cycle_obstruction(&g, (g.order() + 1) / 4)
            },
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{canonical_cycle_power_model, thick_spider};

    fn cycle(n: usize) -> Graph {
        cycle_power(n, 1).unwrap()
    }

    #[test]
    fn chordality_basics() {
        assert!(!is_chordal(&cycle(4)));
        assert!(is_chordal(&cycle(3)));
        let path = Graph::from_edges(&["a", "b", "c", "d"], &[("a", "b"), ("b", "c"), ("b", "d")]).unwrap();
        assert!(is_chordal(&path));
        assert!(!is_chordal(&cycle_power(7, 2).unwrap()));
    }

    #[test]
    fn induced_examples() {
        assert!(contains_induced(&cycle_power(7, 2).unwrap(), &cycle(4)));
        assert!(contains_induced(&thick_spider(6).unwrap(), &thick_spider(3).unwrap()));
        assert!(!contains_induced(&cycle(5), &cycle(4)));
        assert!(contains_induced_in_transitive(&cycle_power(7, 2).unwrap(), &cycle(4)));
    }

    #[test]
    fn criterion_examples() {
        assert!(cycle_power_contains_criterion(7, 2, 2).unwrap());
        assert!(!cycle_power_contains_criterion(9, 2, 2).unwrap());
        assert!(cycle_power_contains_criterion(10, 3, 2).unwrap());
        assert!(cycle_power_contains_criterion(5, 2, 2).is_err());
    }

    #[test]
    fn obstruction_examples() {
        assert_eq!(has_power_cycle_obstruction(&cycle_power(7, 2).unwrap(), 2), Some(2));
        assert_eq!(has_power_cycle_obstruction(&cycle_power(9, 2).unwrap(), 2), None);
    }

    #[test]
    fn decide_cycle_powers() {
        let yes = decide_b1_epr(&canonical_cycle_power_model(9, 2).unwrap());
        assert!(matches!(yes, B1Decision::Yes { .. }));
        let no = decide_b1_epr(&canonical_cycle_power_model(7, 2).unwrap());
        assert_eq!(
            no,
            B1Decision::No {
                reason: NoReason::NoFourPoints,
                chordal: false,
                obstruction: Some(2)
            }
        );
    }

    #[test]
    fn decide_interval_model() {
        let m = CircularArcModel::from_pairs(&[(1, 4), (2, 6), (3, 5), (7, 8)]).unwrap();
        match decide_b1_epr(&m) {
            B1Decision::YesInterval { model } => {
                assert_eq!(model.max_bends(), 0);
                assert_eq!(model.epg_intersection_graph(), m.intersection_graph());
            }
            other => panic!("expected an interval layout, got {other:?}"),
        }
    }

    #[test]
    fn decide_rejects_non_nh_model() {
        let m = canonical_cycle_power_model(7, 3).unwrap_err();
        assert!(matches!(m, Error::InvalidParameters(_)));
        let m = canonical_cycle_power_model(8, 3).unwrap();
        assert!(matches!(
            decide_b1_epr(&m),
            B1Decision::No {
                reason: NoReason::NotNhModel,
                ..
            }
        ));
    }
}
