//! Simply laced Coxeter diagrams: construction, induced subdiagrams,
//! complements `Z(J)`, pattern search and automorphisms.
//!
//! Node sets are `u64` bitmasks, so a diagram has at most 64 nodes.

mod families;
mod incidence;
mod search;
mod shape;
mod text;

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use families::DiagramType;
pub use incidence::{build_incidence, i14, i26, i26_mask, I26_A4, I26_FREE_12GON, I26_Y555};
pub use search::{
    automorphism_count, automorphisms, count_induced_cycles, find_induced, permute_mask, Embeddings,
};
pub use shape::{component_shapes, shape_name};

pub type NodeSet = u64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DiagramError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("unsupported parameter: {0}")]
    Unsupported(String),
    #[error("unknown node label `{0}`")]
    UnknownLabel(String),
    #[error("duplicate node label `{0}`")]
    DuplicateLabel(String),
    #[error("diagram has {0} nodes; at most 64 are supported")]
    TooLarge(usize),
    #[error("edge {0}-{1} is a loop or repeated")]
    BadEdge(String, String),
    #[error("edge {0}-{1} joins two nodes of the same color")]
    ColoringMismatch(String, String),
    #[error("a black/white coloring is required")]
    ColoringRequired,
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("unknown diagram name `{0}`")]
    UnknownName(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Color {
    Black,
    White,
}

impl Color {
    pub fn flip(self) -> Color {
        match self {
            Color::Black => Color::White,
            Color::White => Color::Black,
        }
    }
}

/// A finite simple graph with labelled nodes and an optional proper
/// black/white coloring.
#[derive(Clone, PartialEq, Eq)]
pub struct CoxeterDiagram {
    labels: Vec<String>,
    adj: Vec<NodeSet>,
    colors: Option<Vec<Color>>,
}

pub fn bit(i: usize) -> NodeSet {
    1u64 << i
}

pub fn mask_of(nodes: &[usize]) -> NodeSet {
    nodes.iter().fold(0, |m, &i| m | bit(i))
}

/// Node indices of a mask, ascending.
pub fn indices(mut m: NodeSet) -> Vec<usize> {
    let mut out = Vec::with_capacity(m.count_ones() as usize);
    while m != 0 {
        let i = m.trailing_zeros() as usize;
        out.push(i);
        m &= m - 1;
    }
    out
}

impl CoxeterDiagram {
    pub fn new(
        labels: Vec<String>,
        edges: &[(usize, usize)],
        colors: Option<Vec<Color>>,
    ) -> Result<Self, DiagramError> {
        let n = labels.len();
        if n > 64 {
            return Err(DiagramError::TooLarge(n));
        }
        let mut seen = HashMap::new();
        for l in &labels {
            if seen.insert(l.clone(), ()).is_some() {
                return Err(DiagramError::DuplicateLabel(l.clone()));
            }
        }
        let mut adj = vec![0u64; n];
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(DiagramError::InvalidParameter(format!("edge ({a}, {b}) out of range")));
            }
            if a == b || adj[a] & bit(b) != 0 {
                return Err(DiagramError::BadEdge(labels[a].clone(), labels[b].clone()));
            }
            adj[a] |= bit(b);
            adj[b] |= bit(a);
        }
        if let Some(c) = &colors {
            if c.len() != n {
                return Err(DiagramError::InvalidParameter("coloring length".into()));
            }
            for &(a, b) in edges {
                if c[a] == c[b] {
                    return Err(DiagramError::ColoringMismatch(labels[a].clone(), labels[b].clone()));
                }
            }
        }
        Ok(CoxeterDiagram { labels, adj, colors })
    }

    /// Builds from string labels and label pairs.
    pub fn from_labels(
        labels: &[&str],
        edges: &[(&str, &str)],
        colors: Option<Vec<Color>>,
    ) -> Result<Self, DiagramError> {
        let labels: Vec<String> = labels.iter().map(|s| s.to_string()).collect();
        let idx: HashMap<&str, usize> = labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
        let mut e = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            let ia = *idx.get(a).ok_or_else(|| DiagramError::UnknownLabel(a.to_string()))?;
            let ib = *idx.get(b).ok_or_else(|| DiagramError::UnknownLabel(b.to_string()))?;
            e.push((ia, ib));
        }
        CoxeterDiagram::new(labels, &e, colors)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn all(&self) -> NodeSet {
        if self.len() == 64 {
            u64::MAX
        } else {
            bit(self.len()) - 1
        }
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index(&self, label: &str) -> Result<usize, DiagramError> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| DiagramError::UnknownLabel(label.to_string()))
    }

    pub fn mask_of_labels(&self, labels: &[&str]) -> Result<NodeSet, DiagramError> {
        labels.iter().try_fold(0, |m, l| Ok(m | bit(self.index(l)?)))
    }

    pub fn labels_of(&self, m: NodeSet) -> Vec<String> {
        indices(m).into_iter().map(|i| self.labels[i].clone()).collect()
    }

    pub fn neighbors(&self, i: usize) -> NodeSet {
        self.adj[i]
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adj[i] & bit(j) != 0
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].count_ones() as usize
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            for j in indices(self.adj[i]) {
                if i < j {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn colors(&self) -> Option<&[Color]> {
        self.colors.as_deref()
    }

    pub fn color(&self, i: usize) -> Option<Color> {
        self.colors.as_ref().map(|c| c[i])
    }

    pub fn require_colors(&self) -> Result<&[Color], DiagramError> {
        self.colors().ok_or(DiagramError::ColoringRequired)
    }

    /// Same graph with black and white exchanged.
    pub fn flipped(&self) -> CoxeterDiagram {
        let mut d = self.clone();
        if let Some(c) = d.colors.as_mut() {
            for x in c.iter_mut() {
                *x = x.flip();
            }
        }
        d
    }

    /// A proper 2-coloring found by breadth-first search, with the lowest
    /// node of each component black. `None` for non-bipartite graphs.
    pub fn bipartition(&self) -> Option<Vec<Color>> {
        let n = self.len();
        let mut col: Vec<Option<Color>> = vec![None; n];
        for s in 0..n {
            if col[s].is_some() {
                continue;
            }
            col[s] = Some(Color::Black);
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let cu = col[u].unwrap();
                for v in indices(self.adj[u]) {
                    match col[v] {
                        None => {
                            col[v] = Some(cu.flip());
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(col.into_iter().map(Option::unwrap).collect())
    }

    /// Attaches the breadth-first bipartition, if any.
    pub fn with_bipartition(mut self) -> CoxeterDiagram {
        self.colors = self.bipartition();
        self
    }

    pub fn without_colors(mut self) -> CoxeterDiagram {
        self.colors = None;
        self
    }

    /// The induced subdiagram on a node set, with inherited labels and
    /// coloring. Node order follows ascending index.
    pub fn induced(&self, m: NodeSet) -> CoxeterDiagram {
        let idx = indices(m);
        let pos: HashMap<usize, usize> = idx.iter().enumerate().map(|(k, &i)| (i, k)).collect();
        let adj = idx
            .iter()
            .map(|&i| indices(self.adj[i] & m).into_iter().fold(0, |a, j| a | bit(pos[&j])))
            .collect();
        CoxeterDiagram {
            labels: idx.iter().map(|&i| self.labels[i].clone()).collect(),
            adj,
            colors: self.colors.as_ref().map(|c| idx.iter().map(|&i| c[i]).collect()),
        }
    }

    pub fn induced_by_labels(&self, labels: &[&str]) -> Result<CoxeterDiagram, DiagramError> {
        Ok(self.induced(self.mask_of_labels(labels)?))
    }

    /// Nodes adjacent to some node of `m`.
    pub fn neighborhood(&self, m: NodeSet) -> NodeSet {
        indices(m).into_iter().fold(0, |a, i| a | self.adj[i])
    }

    /// `Z(J)`: nodes neither in `J` nor adjacent to `J`.
    pub fn zperp(&self, j: NodeSet) -> NodeSet {
        self.all() & !j & !self.neighborhood(j)
    }

    /// Connected components of the induced subgraph on `m`, ordered by
    /// lowest node.
    pub fn components(&self, m: NodeSet) -> Vec<NodeSet> {
        let mut rest = m;
        let mut out = Vec::new();
        while rest != 0 {
            let mut comp = rest & rest.wrapping_neg();
            loop {
                let grown = comp | (self.neighborhood(comp) & m);
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            out.push(comp);
            rest &= !comp;
        }
        out
    }

    pub fn is_connected(&self, m: NodeSet) -> bool {
        m != 0 && self.components(m).len() == 1
    }

    pub fn is_induced_tree(&self, m: NodeSet) -> bool {
        let edges: u32 = indices(m).iter().map(|&i| (self.adj[i] & m).count_ones()).sum::<u32>() / 2;
        self.is_connected(m) && edges as usize + 1 == m.count_ones() as usize
    }

    /// Nodes whose addition to the induced tree `m` gives a larger induced
    /// tree: exactly those with one neighbor in `m`.
    pub fn tree_extensions(&self, m: NodeSet) -> NodeSet {
        indices(self.all() & !m)
            .into_iter()
            .filter(|&v| (self.adj[v] & m).count_ones() == 1)
            .fold(0, |a, v| a | bit(v))
    }

    /// Graph distances from node `s` (usize::MAX when unreachable).
    pub fn distances(&self, s: usize) -> Vec<usize> {
        let mut d = vec![usize::MAX; self.len()];
        d[s] = 0;
        let mut frontier = bit(s);
        let mut seen = bit(s);
        let mut k = 0;
        while frontier != 0 {
            k += 1;
            let next = self.neighborhood(frontier) & !seen;
            for i in indices(next) {
                d[i] = k;
            }
            seen |= next;
            frontier = next;
        }
        d
    }

    /// Relabels nodes by a permutation: node `i` of the result is node
    /// `order[i]` of `self`.
    pub fn reordered(&self, order: &[usize], labels: Option<Vec<String>>) -> CoxeterDiagram {
        assert_eq!(order.len(), self.len());
        let mut pos = vec![0; self.len()];
        for (k, &i) in order.iter().enumerate() {
            pos[i] = k;
        }
        let adj = order
            .iter()
            .map(|&i| indices(self.adj[i]).into_iter().fold(0, |a, j| a | bit(pos[j])))
            .collect();
        CoxeterDiagram {
            labels: labels.unwrap_or_else(|| order.iter().map(|&i| self.labels[i].clone()).collect()),
            adj,
            colors: self.colors.as_ref().map(|c| order.iter().map(|&i| c[i]).collect()),
        }
    }

    /// Disjoint union; labels of `other` get `suffix` appended when they
    /// clash.
    pub fn disjoint_union(&self, other: &CoxeterDiagram, suffix: &str) -> CoxeterDiagram {
        let n = self.len();
        let mut labels = self.labels.clone();
        for l in &other.labels {
            if labels.contains(l) {
                labels.push(format!("{l}{suffix}"));
            } else {
                labels.push(l.clone());
            }
        }
        let mut edges = self.edges();
        edges.extend(other.edges().into_iter().map(|(a, b)| (a + n, b + n)));
        let colors = match (&self.colors, &other.colors) {
            (Some(a), Some(b)) => Some(a.iter().chain(b.iter()).copied().collect()),
            _ => None,
        };
        CoxeterDiagram::new(labels, &edges, colors).expect("disjoint union of valid diagrams")
    }

    /// Looks a diagram up by name: family names such as `A5`, `tildeA11`,
    /// `D4`, `E8`, `Y555`, `Y10,2,1`, and the incidence graphs `I26`, `I14`.
    pub fn by_name(name: &str) -> Result<CoxeterDiagram, DiagramError> {
        match name {
            "I26" => Ok(i26()),
            "I14" => Ok(i14()),
            _ => DiagramType::parse(name)?.build(),
        }
    }
}

impl fmt::Debug for CoxeterDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
