//! Paths on the integer grid, their bends and edge intersection graphs.

use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A lattice point on row `row` and column `col`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GridPoint {
    pub row: u32,
    pub col: u32,
}

impl GridPoint {
    pub const fn new(row: u32, col: u32) -> Self {
        Self { row, col }
    }
}

impl fmt::Display for GridPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// Shorthand for building points in tests and fixtures.
pub const fn pt(row: u32, col: u32) -> GridPoint {
    GridPoint::new(row, col)
}

/// An unordered pair of adjacent lattice points, stored smaller point first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnitEdge(GridPoint, GridPoint);

impl UnitEdge {
    pub fn new(a: GridPoint, b: GridPoint) -> Self {
        debug_assert_eq!(a.row.abs_diff(b.row) + a.col.abs_diff(b.col), 1);
        if a <= b {
            Self(a, b)
        } else {
            Self(b, a)
        }
    }

    pub fn ends(self) -> (GridPoint, GridPoint) {
        (self.0, self.1)
    }

    pub fn is_horizontal(self) -> bool {
        self.0.row == self.1.row
    }

    /// Whether the edge runs along row `r`.
    pub fn on_row(self, r: u32) -> bool {
        self.is_horizontal() && self.0.row == r
    }

    /// Whether the edge runs along column `c`.
    pub fn on_col(self, c: u32) -> bool {
        !self.is_horizontal() && self.0.col == c
    }
}

impl fmt::Display for UnitEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

/// An axis-aligned path given by its corner sequence: the two endpoints plus
/// one entry per bend.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridPath {
    id: String,
    corners: Vec<GridPoint>,
}

fn unit_steps(a: GridPoint, b: GridPoint) -> impl Iterator<Item = UnitEdge> {
    let horizontal = a.row == b.row;
    let (from, to) = if horizontal { (a.col, b.col) } else { (a.row, b.row) };
    let (lo, hi) = (from.min(to), from.max(to));
    (lo..hi).map(move |x| {
        if horizontal {
            UnitEdge::new(pt(a.row, x), pt(a.row, x + 1))
        } else {
            UnitEdge::new(pt(x, a.col), pt(x + 1, a.col))
        }
    })
}

impl GridPath {
    /// Validates the corner list: at least two corners, axis-aligned
    /// segments of positive length, a genuine turn at every interior corner
    /// and no grid edge used twice.
    pub fn new(id: impl Into<String>, corners: Vec<GridPoint>) -> Result<Self> {
        let id = id.into();
        let bad = |reason: String| Error::InvalidPath {
            id: id.clone(),
            reason,
        };
        if corners.len() < 2 {
            return Err(bad("a path needs at least two corners".into()));
        }
        for w in corners.windows(2) {
            let (a, b) = (w[0], w[1]);
            if a == b {
                return Err(bad(format!("zero-length segment at {a}")));
            }
            if a.row != b.row && a.col != b.col {
                return Err(bad(format!("diagonal segment {a} {b}")));
            }
        }
        for w in corners.windows(3) {
            if (w[0].row == w[1].row) == (w[1].row == w[2].row) {
                return Err(bad(format!("no turn at corner {}", w[1])));
            }
        }
        let mut seen = HashSet::new();
        let repeated = corners
            .windows(2)
            .flat_map(|w| unit_steps(w[0], w[1]))
            .find(|&e| !seen.insert(e));
        if let Some(e) = repeated {
            return Err(bad(format!("path not simple: edge {e} used twice")));
        }
        Ok(Self { id, corners })
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn corners(&self) -> &[GridPoint] {
        &self.corners
    }

    pub fn start(&self) -> GridPoint {
        self.corners[0]
    }

    pub fn end(&self) -> GridPoint {
        *self.corners.last().expect("paths have two corners")
    }

    pub fn bend_count(&self) -> usize {
        self.corners.len() - 2
    }

    pub fn bends(&self) -> &[GridPoint] {
        &self.corners[1..self.corners.len() - 1]
    }

    /// Unit edges in traversal order.
    pub fn edges(&self) -> impl Iterator<Item = UnitEdge> + '_ {
        self.corners.windows(2).flat_map(|w| unit_steps(w[0], w[1]))
    }

    pub fn edge_set(&self) -> HashSet<UnitEdge> {
        self.edges().collect()
    }

    pub fn len(&self) -> usize {
        self.edges().count()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Lattice points strictly between the two ends of the path.
    pub fn interior_points(&self) -> Vec<GridPoint> {
        let edges: Vec<UnitEdge> = self.edges().collect();
        let mut out = Vec::with_capacity(edges.len());
        let mut at = self.start();
        for e in &edges[..edges.len() - 1] {
            let (a, b) = e.ends();
            at = if a == at { b } else { a };
            out.push(at);
        }
        out
    }

    /// The same path with every corner mapped through `f`.
    pub fn map_points(&self, f: impl Fn(GridPoint) -> GridPoint) -> Result<Self> {
        Self::new(self.id.clone(), self.corners.iter().map(|&p| f(p)).collect())
    }
}

/// An axis-aligned rectangle given by its two rows and two columns.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Rect {
    pub r1: u32,
    pub r2: u32,
    pub c1: u32,
    pub c2: u32,
}

impl Rect {
    pub fn new(r1: u32, r2: u32, c1: u32, c2: u32) -> Result<Self> {
        if r1 >= r2 || c1 >= c2 {
            return Err(Error::InvalidParameters(format!(
                "rectangle rows {r1},{r2} and columns {c1},{c2} must be strictly increasing"
            )));
        }
        Ok(Self { r1, r2, c1, c2 })
    }

    pub fn width(self) -> u32 {
        self.c2 - self.c1
    }

    pub fn height(self) -> u32 {
        self.r2 - self.r1
    }

    pub fn perimeter(self) -> u32 {
        2 * (self.width() + self.height())
    }

    pub fn corners(self) -> [GridPoint; 4] {
        [
            pt(self.r1, self.c1),
            pt(self.r1, self.c2),
            pt(self.r2, self.c2),
            pt(self.r2, self.c1),
        ]
    }

    pub fn on_boundary(self, p: GridPoint) -> bool {
        let in_rows = (self.r1..=self.r2).contains(&p.row);
        let in_cols = (self.c1..=self.c2).contains(&p.col);
        (in_cols && (p.row == self.r1 || p.row == self.r2))
            || (in_rows && (p.col == self.c1 || p.col == self.c2))
    }

    pub fn edge_on_boundary(self, e: UnitEdge) -> bool {
        let (a, b) = e.ends();
        if e.is_horizontal() {
            (a.row == self.r1 || a.row == self.r2) && a.col >= self.c1 && b.col <= self.c2
        } else {
            (a.col == self.c1 || a.col == self.c2) && a.row >= self.r1 && b.row <= self.r2
        }
    }

    /// Clockwise distance along the boundary from the top-left corner.
    pub fn perimeter_index(self, p: GridPoint) -> Option<u32> {
        let (w, h) = (self.width(), self.height());
        if !self.on_boundary(p) {
            None
        } else if p.row == self.r1 {
            Some(p.col - self.c1)
        } else if p.col == self.c2 {
            Some(w + (p.row - self.r1))
        } else if p.row == self.r2 {
            Some(w + h + (self.c2 - p.col))
        } else {
            Some(2 * w + h + (self.r2 - p.row))
        }
    }

    /// Inverse of [`Rect::perimeter_index`], taken modulo the perimeter.
    pub fn point_at(self, index: u32) -> GridPoint {
        let (w, h) = (self.width(), self.height());
        let i = index % self.perimeter();
        if i < w {
            pt(self.r1, self.c1 + i)
        } else if i < w + h {
            pt(self.r1 + (i - w), self.c2)
        } else if i < 2 * w + h {
            pt(self.r2, self.c2 - (i - w - h))
        } else {
            pt(self.r2 - (i - 2 * w - h), self.c1)
        }
    }
}

/// A set of grid paths, optionally confined to a rectangle (EPR mode).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridModel {
    paths: Vec<GridPath>,
    rect: Option<Rect>,
}

impl GridModel {
    pub fn new(paths: Vec<GridPath>, rect: Option<Rect>) -> Result<Self> {
        let mut ids = HashSet::new();
        for p in &paths {
            if !ids.insert(p.id.as_str()) {
                return Err(Error::DuplicateId(p.id.clone()));
            }
        }
        Ok(Self { paths, rect })
    }

    pub fn epg(paths: Vec<GridPath>) -> Result<Self> {
        Self::new(paths, None)
    }

    pub fn paths(&self) -> &[GridPath] {
        &self.paths
    }

    pub fn path(&self, id: &str) -> Option<&GridPath> {
        self.paths.iter().find(|p| p.id == id)
    }

    pub fn rect(&self) -> Option<Rect> {
        self.rect
    }

    pub fn is_epr_mode(&self) -> bool {
        self.rect.is_some()
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn max_bends(&self) -> usize {
        self.paths.iter().map(GridPath::bend_count).max().unwrap_or(0)
    }

    /// Largest row and column used by any path or by the rectangle.
    pub fn bounds(&self) -> (u32, u32) {
        let mut rows = 0;
        let mut cols = 0;
        for p in self.paths.iter().flat_map(|p| p.corners.iter()) {
            rows = rows.max(p.row);
            cols = cols.max(p.col);
        }
        if let Some(r) = self.rect {
            rows = rows.max(r.r2);
            cols = cols.max(r.c2);
        }
        (rows, cols)
    }

    fn edge_users(&self) -> HashMap<UnitEdge, Vec<usize>> {
        let mut users: HashMap<UnitEdge, Vec<usize>> = HashMap::new();
        for (i, p) in self.paths.iter().enumerate() {
            for e in p.edges() {
                users.entry(e).or_default().push(i);
            }
        }
        users
    }

    /// One vertex per path (model order); adjacent iff the paths share a
    /// grid edge.
    pub fn epg_intersection_graph(&self) -> Graph {
        let mut g = Graph::new(self.paths.iter().map(|p| p.id.clone()))
            .expect("model ids are distinct");
        for users in self.edge_users().values() {
            for (k, &u) in users.iter().enumerate() {
                for &v in &users[k + 1..] {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Grid edges used by at least two paths, sorted.
    pub fn shared_edges(&self) -> Vec<UnitEdge> {
        let mut out: Vec<UnitEdge> = self
            .edge_users()
            .into_iter()
            .filter(|(_, u)| u.len() > 1)
            .map(|(e, _)| e)
            .collect();
        out.sort_unstable();
        out
    }

    /// The first reason the model fails to be an EPR model, if any.
    pub fn epr_violation(&self) -> Option<String> {
        let Some(rect) = self.rect else {
            return Some("no rectangle declared".into());
        };
        self.paths.iter().find_map(|p| {
            p.edges()
                .find(|&e| !rect.edge_on_boundary(e))
                .map(|e| format!("path {} uses edge {e} off the rectangle boundary", p.id))
        })
    }

    /// Whether a rectangle is declared and every path edge lies on its
    /// boundary.
    pub fn validate_epr(&self) -> bool {
        self.epr_violation().is_none()
    }

    /// The model with every point mapped through `f` (the rectangle is
    /// dropped, since `f` need not preserve it).
    pub fn map_points(&self, f: impl Fn(GridPoint) -> GridPoint + Copy) -> Result<Self> {
        let paths = self
            .paths
            .iter()
            .map(|p| p.map_points(f))
            .collect::<Result<Vec<_>>>()?;
        Self::new(paths, None)
    }
}

/// The three shapes an induced C4 can take among paths with at most one
/// bend.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum C4Shape {
    /// All four paths bend at `center`.
    TruePie { center: GridPoint },
    /// Two paths bend at `center`; the other two run straight through it.
    FalsePie { center: GridPoint },
    /// The four bends sit on the corners of a rectangle, clockwise from the
    /// top-left.
    Frame { corners: [GridPoint; 4] },
}

impl C4Shape {
    pub fn kind(&self) -> &'static str {
        match self {
            Self::TruePie { .. } => "true-pie",
            Self::FalsePie { .. } => "false-pie",
            Self::Frame { .. } => "frame",
        }
    }
}

/// Classifies four paths with at most one bend each that induce a C4.
pub fn classify_c4(paths: &[GridPath; 4]) -> Result<C4Shape> {
    let reject = |why: &str| Err(Error::NotB1C4Witness(why.to_owned()));
    if let Some(p) = paths.iter().find(|p| p.bend_count() > 1) {
        return Err(Error::NotB1C4Witness(format!(
            "path {} has {} bends",
            p.id(),
            p.bend_count()
        )));
    }
    let g = GridModel::epg(paths.to_vec())?.epg_intersection_graph();
    if g.size() != 4 || (0..4).any(|v| g.degree(v) != 2) {
        return reject("the paths do not induce a C4");
    }
    let bent: Vec<GridPoint> = paths.iter().filter_map(|p| p.bends().first().copied()).collect();
    match bent.len() {
        4 if bent.iter().all(|&b| b == bent[0]) => Ok(C4Shape::TruePie { center: bent[0] }),
        4 => {
            let mut rows: Vec<u32> = bent.iter().map(|p| p.row).collect();
            let mut cols: Vec<u32> = bent.iter().map(|p| p.col).collect();
            rows.sort_unstable();
            rows.dedup();
            cols.sort_unstable();
            cols.dedup();
            let distinct: HashSet<GridPoint> = bent.iter().copied().collect();
            if rows.len() == 2 && cols.len() == 2 && distinct.len() == 4 {
                Ok(C4Shape::Frame {
                    corners: [
                        pt(rows[0], cols[0]),
                        pt(rows[0], cols[1]),
                        pt(rows[1], cols[1]),
                        pt(rows[1], cols[0]),
                    ],
                })
            } else {
                reject("four bends neither coincide nor form a rectangle")
            }
        }
        2 if bent[0] == bent[1] => {
            let center = bent[0];
            let straight_through = paths
                .iter()
                .filter(|p| p.bend_count() == 0)
                .all(|p| p.interior_points().contains(&center));
            if straight_through {
                Ok(C4Shape::FalsePie { center })
            } else {
                reject("straight paths do not pass through the common bend")
            }
        }
        _ => reject("bend pattern matches no pie or frame"),
    }
}
