//! Simple undirected graphs with stable string identifiers.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// A simple undirected graph. Vertices keep the order in which they were
/// declared; adjacency is stored as one bitset row per vertex.
#[derive(Clone)]
pub struct Graph {
    ids: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<FixedBitSet>,
}

impl Graph {
    pub fn new<I, S>(ids: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let ids: Vec<String> = ids.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(ids.len());
        for (i, id) in ids.iter().enumerate() {
            if index.insert(id.clone(), i).is_some() {
                return Err(Error::DuplicateId(id.clone()));
            }
        }
        let n = ids.len();
        Ok(Self {
            ids,
            index,
            adj: vec![FixedBitSet::with_capacity(n); n],
        })
    }

    /// Builds a graph from identifiers and identifier pairs.
    pub fn from_edges<S: AsRef<str>>(ids: &[S], edges: &[(S, S)]) -> Result<Self> {
        let mut g = Self::new(ids.iter().map(|s| s.as_ref().to_owned()))?;
        for (u, v) in edges {
            g.add_edge_by_id(u.as_ref(), v.as_ref())?;
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.ids.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(|row| row.count_ones(..)).sum::<usize>() / 2
    }

    pub fn ids(&self) -> &[String] {
        &self.ids
    }

    pub fn id(&self, v: usize) -> &str {
        &self.ids[v]
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    fn require(&self, id: &str) -> Result<usize> {
        self.index_of(id)
            .ok_or_else(|| Error::UnknownVertex(id.to_owned()))
    }

    /// Adds the edge `{u, v}`. Self-loops are ignored; repeated edges are
    /// idempotent.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        if u == v {
            return;
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn add_edge_by_id(&mut self, u: &str, v: &str) -> Result<()> {
        let (a, b) = (self.require(u)?, self.require(v)?);
        if a == b {
            return Err(Error::InvalidParameters(format!("self-loop on {u}")));
        }
        self.add_edge(a, b);
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn has_edge_by_id(&self, u: &str, v: &str) -> Result<bool> {
        Ok(self.has_edge(self.require(u)?, self.require(v)?))
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].ones()
    }

    pub fn neighborhood(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    /// Edges as index pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order()).flat_map(move |u| self.adj[u].ones().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// The subgraph induced by `vertices`, keeping their identifiers.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut h = Graph::new(vertices.iter().map(|&v| self.ids[v].clone()))
            .expect("identifiers of a graph are distinct");
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    h.add_edge(i, j);
                }
            }
        }
        h
    }

    /// Whether `v` dominates `w`: they are adjacent and every other neighbour
    /// of `w` is a neighbour of `v`.
    pub fn dominates(&self, v: &str, w: &str) -> Result<bool> {
        let (v, w) = (self.require(v)?, self.require(w)?);
        Ok(self.dominates_index(v, w))
    }

    pub(crate) fn dominates_index(&self, v: usize, w: usize) -> bool {
        if v == w || !self.has_edge(v, w) {
            return false;
        }
        self.adj[w].ones().all(|x| x == v || self.adj[v].contains(x))
    }

    /// Connected components restricted to the vertices in `alive`, as a
    /// component label per vertex (`usize::MAX` for removed vertices).
    pub fn component_labels(&self, alive: &FixedBitSet) -> Vec<usize> {
        let mut label = vec![usize::MAX; self.order()];
        let mut next = 0;
        let mut queue = VecDeque::new();
        for start in alive.ones() {
            if label[start] != usize::MAX {
                continue;
            }
            label[start] = next;
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                for v in self.adj[u].ones() {
                    if alive.contains(v) && label[v] == usize::MAX {
                        label[v] = next;
                        queue.push_back(v);
                    }
                }
            }
            next += 1;
        }
        label
    }

    pub fn is_connected(&self) -> bool {
        if self.order() == 0 {
            return true;
        }
        let mut all = FixedBitSet::with_capacity(self.order());
        all.insert_range(..);
        self.component_labels(&all).iter().all(|&l| l == 0)
    }

    fn labeled_edges(&self) -> BTreeSet<(&str, &str)> {
        self.edges()
            .map(|(u, v)| {
                let (a, b) = (self.ids[u].as_str(), self.ids[v].as_str());
                if a < b {
                    (a, b)
                } else {
                    (b, a)
                }
            })
            .collect()
    }

    /// Edges present in exactly one of the two graphs, as identifier pairs.
    /// Useful for reporting why two representations disagree.
    pub fn edge_difference(&self, other: &Graph) -> Vec<(String, String)> {
        let (a, b) = (self.labeled_edges(), other.labeled_edges());
        a.symmetric_difference(&b)
            .map(|&(u, v)| (u.to_owned(), v.to_owned()))
            .collect()
    }
}

/// Labelled equality: the same identifier set and the same edges between
/// identifiers, regardless of declaration order.
impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.order() == other.order()
            && self.size() == other.size()
            && self.ids.iter().all(|id| other.index.contains_key(id))
            && self.edges().all(|(u, v)| {
                other
                    .has_edge_by_id(&self.ids[u], &self.ids[v])
                    .unwrap_or(false)
            })
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("vertices", &self.ids)
            .field(
                "edges",
                &self
                    .edges()
                    .map(|(u, v)| (&self.ids[u], &self.ids[v]))
                    .collect::<Vec<_>>(),
            )
            .finish()
    }
}
