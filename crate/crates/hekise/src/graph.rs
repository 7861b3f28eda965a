//! Simple oriented graphs: validated vertex and arrow data, standard
//! constructors, and the acyclicity predicate.
//!
//! A graph here is *simple oriented*: no self-loops, no oriented 2-cycles,
//! and at most one arrow per ordered vertex pair. Graphs are immutable once
//! built; every word-level operation in this crate works against a shared
//! `&OrientedGraph`.

use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};

use thiserror::Error;

/// Dense index identifying a vertex within its graph (`0..|V|`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId(pub u32);

impl VertexId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Total order on vertices used for lexicographic comparisons of words.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OrderPolicy {
    /// Vertices ordered by string comparison of their labels.
    #[default]
    LabelLexicographic,
    /// Vertices ordered by declaration position.
    DeclarationOrder,
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("SelfLoop({0})")]
    SelfLoop(String),
    #[error("TwoCycle({0},{1})")]
    TwoCycle(String, String),
    #[error("DuplicateLabel({0})")]
    DuplicateLabel(String),
    #[error("UnknownEndpoint({0})")]
    UnknownEndpoint(String),
    #[error("DuplicateArrow({0},{1})")]
    DuplicateArrow(String, String),
    #[error("InvalidLabel({0:?})")]
    InvalidLabel(String),
    #[error("CycleTooShort({0})")]
    CycleTooShort(usize),
    #[error("EqualVertices({0})")]
    EqualVertices(String),
}

static NEXT_GRAPH_ID: AtomicU64 = AtomicU64::new(0);

/// A validated simple oriented graph with an identity token and a fixed
/// total order on its vertices.
#[derive(Debug)]
pub struct OrientedGraph {
    labels: Vec<String>,
    label_index: HashMap<String, VertexId>,
    adjacency: Vec<bool>, // row-major |V| x |V|
    arrows: Vec<(VertexId, VertexId)>,
    rank: Vec<u32>, // rank[v] = position of v under the policy order
    policy: OrderPolicy,
    id: u64,
}

impl OrientedGraph {
    /// Builds a graph from labels (declaration order fixes `VertexId`s) and
    /// arrows given as label pairs.
    pub fn build(
        labels: &[&str],
        arrows: &[(&str, &str)],
        policy: OrderPolicy,
    ) -> Result<Self, GraphError> {
        let mut label_index: HashMap<String, VertexId> = HashMap::new();
        let mut owned = Vec::with_capacity(labels.len());
        for &label in labels {
            validate_label(label)?;
            if label_index
                .insert(label.to_string(), VertexId(owned.len() as u32))
                .is_some()
            {
                return Err(GraphError::DuplicateLabel(label.to_string()));
            }
            owned.push(label.to_string());
        }

        let n = owned.len();
        let mut adjacency = vec![false; n * n];
        let mut arrow_list = Vec::with_capacity(arrows.len());
        for &(src, dst) in arrows {
            let a = *label_index
                .get(src)
                .ok_or_else(|| GraphError::UnknownEndpoint(src.to_string()))?;
            let b = *label_index
                .get(dst)
                .ok_or_else(|| GraphError::UnknownEndpoint(dst.to_string()))?;
            if a == b {
                return Err(GraphError::SelfLoop(src.to_string()));
            }
            if adjacency[b.index() * n + a.index()] {
                return Err(GraphError::TwoCycle(src.to_string(), dst.to_string()));
            }
            if adjacency[a.index() * n + b.index()] {
                return Err(GraphError::DuplicateArrow(src.to_string(), dst.to_string()));
            }
            adjacency[a.index() * n + b.index()] = true;
            arrow_list.push((a, b));
        }

        let rank = compute_rank(&owned, policy);
        Ok(OrientedGraph {
            labels: owned,
            label_index,
            adjacency,
            arrows: arrow_list,
            rank,
            policy,
            id: NEXT_GRAPH_ID.fetch_add(1, AtomicOrdering::Relaxed),
        })
    }

    /// Complete acyclic orientation on `n` vertices labelled `1..n`, with an
    /// arrow `i -> j` whenever `i < j`.
    pub fn gamma_n(n: usize) -> Self {
        let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        let mut arrows = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                arrows.push((labels[i].as_str(), labels[j].as_str()));
            }
        }
        let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
        Self::build(&refs, &arrows, OrderPolicy::DeclarationOrder)
            .expect("complete acyclic orientation is always simple")
    }

    /// Equioriented path `1 -> 2 -> ... -> n`.
    pub fn path_n(n: usize) -> Self {
        let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        let mut arrows = Vec::new();
        for i in 0..n.saturating_sub(1) {
            arrows.push((labels[i].as_str(), labels[i + 1].as_str()));
        }
        let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
        Self::build(&refs, &arrows, OrderPolicy::DeclarationOrder).expect("path is always simple")
    }

    /// Directed cycle `1 -> 2 -> ... -> n -> 1`; requires `n >= 3` since a
    /// shorter cycle would violate simplicity.
    pub fn cycle_n(n: usize) -> Result<Self, GraphError> {
        if n < 3 {
            return Err(GraphError::CycleTooShort(n));
        }
        let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        let mut arrows = Vec::new();
        for i in 0..n - 1 {
            arrows.push((labels[i].as_str(), labels[i + 1].as_str()));
        }
        arrows.push((labels[n - 1].as_str(), labels[0].as_str()));
        let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
        Self::build(&refs, &arrows, OrderPolicy::DeclarationOrder)
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.labels.len() as u32).map(VertexId)
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v.index()]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn vertex(&self, label: &str) -> Option<VertexId> {
        self.label_index.get(label).copied()
    }

    /// All arrows, in declaration order. Since 2-cycles are excluded, each
    /// connected unordered pair appears exactly once here.
    pub fn arrows(&self) -> &[(VertexId, VertexId)] {
        &self.arrows
    }

    pub fn order_policy(&self) -> OrderPolicy {
        self.policy
    }

    /// Identity token; distinct per constructed graph. Canonical forms carry
    /// it so that values from different graphs cannot be mixed silently.
    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn has_arrow(&self, a: VertexId, b: VertexId) -> bool {
        self.adjacency[a.index() * self.labels.len() + b.index()]
    }

    /// True iff `a != b` and there is no arrow in either direction.
    ///
    /// Errors with `EqualVertices` when `a == b`: a letter is never
    /// "disconnected from itself" (idempotence is a cancellation, not a
    /// commutation).
    pub fn disconnected(&self, a: VertexId, b: VertexId) -> Result<bool, GraphError> {
        if a == b {
            return Err(GraphError::EqualVertices(self.label(a).to_string()));
        }
        Ok(!self.has_arrow(a, b) && !self.has_arrow(b, a))
    }

    /// Commutation test used by the word machinery: distinct and
    /// disconnected. Total (returns `false` for equal vertices).
    pub(crate) fn independent(&self, a: VertexId, b: VertexId) -> bool {
        a != b && !self.has_arrow(a, b) && !self.has_arrow(b, a)
    }

    /// Kahn-style topological elimination: repeatedly remove vertices with
    /// no incoming arrow; acyclic iff everything is eliminated.
    pub fn is_acyclic(&self) -> bool {
        let n = self.labels.len();
        let mut indegree = vec![0usize; n];
        for &(_, b) in &self.arrows {
            indegree[b.index()] += 1;
        }
        let mut queue: Vec<usize> = (0..n).filter(|&v| indegree[v] == 0).collect();
        let mut removed = 0;
        while let Some(v) = queue.pop() {
            removed += 1;
            for &(a, b) in &self.arrows {
                if a.index() == v {
                    indegree[b.index()] -= 1;
                    if indegree[b.index()] == 0 {
                        queue.push(b.index());
                    }
                }
            }
        }
        removed == n
    }

    /// Position of `v` in the total order fixed by the order policy.
    pub fn rank(&self, v: VertexId) -> u32 {
        self.rank[v.index()]
    }

    pub fn cmp_vertices(&self, a: VertexId, b: VertexId) -> std::cmp::Ordering {
        self.rank(a).cmp(&self.rank(b))
    }
}

fn compute_rank(labels: &[String], policy: OrderPolicy) -> Vec<u32> {
    match policy {
        OrderPolicy::DeclarationOrder => (0..labels.len() as u32).collect(),
        OrderPolicy::LabelLexicographic => {
            let mut order: Vec<usize> = (0..labels.len()).collect();
            order.sort_by(|&i, &j| labels[i].cmp(&labels[j]));
            let mut rank = vec![0u32; labels.len()];
            for (pos, &v) in order.iter().enumerate() {
                rank[v] = pos as u32;
            }
            rank
        }
    }
}

fn validate_label(label: &str) -> Result<(), GraphError> {
    let bad = label.is_empty()
        || label.contains(char::is_whitespace)
        || label.contains(',')
        || label.contains('#')
        || label.contains("->");
    if bad {
        Err(GraphError::InvalidLabel(label.to_string()))
    } else {
        Ok(())
    }
}

#[derive(Debug, Error)]
pub enum GraphParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Parses the graph text format: one statement per line, `vertex <label>`
/// declares a vertex, `<label> -> <label>` declares an arrow, `#` starts a
/// comment. Labels first appearing in arrow lines are auto-declared in
/// order of appearance.
pub fn parse_graph(text: &str, policy: OrderPolicy) -> Result<OrientedGraph, GraphParseError> {
    let mut labels: Vec<String> = Vec::new();
    let mut arrows: Vec<(String, String)> = Vec::new();

    let mut declare = |label: &str, explicit: bool, line: usize| -> Result<(), GraphParseError> {
        if labels.iter().any(|l| l == label) {
            if explicit {
                return Err(GraphParseError::Syntax {
                    line,
                    message: format!("DuplicateLabel({label})"),
                });
            }
            return Ok(());
        }
        labels.push(label.to_string());
        Ok(())
    };

    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let stmt = raw.split('#').next().unwrap_or("").trim();
        if stmt.is_empty() {
            continue;
        }
        if let Some(rest) = stmt.strip_prefix("vertex ") {
            let label = rest.trim();
            if label.is_empty() || label.split_whitespace().count() != 1 {
                return Err(GraphParseError::Syntax {
                    line,
                    message: format!("expected `vertex <label>`, got `{stmt}`"),
                });
            }
            declare(label, true, line)?;
        } else if stmt.contains("->") {
            let mut parts = stmt.splitn(2, "->");
            let src = parts.next().unwrap_or("").trim();
            let dst = parts.next().unwrap_or("").trim();
            if src.is_empty() || dst.is_empty() || dst.contains("->") {
                return Err(GraphParseError::Syntax {
                    line,
                    message: format!("expected `<label> -> <label>`, got `{stmt}`"),
                });
            }
            declare(src, false, line)?;
            declare(dst, false, line)?;
            arrows.push((src.to_string(), dst.to_string()));
        } else {
            return Err(GraphParseError::Syntax {
                line,
                message: format!("unrecognized statement `{stmt}`"),
            });
        }
    }

    let label_refs: Vec<&str> = labels.iter().map(String::as_str).collect();
    let arrow_refs: Vec<(&str, &str)> = arrows
        .iter()
        .map(|(a, b)| (a.as_str(), b.as_str()))
        .collect();
    Ok(OrientedGraph::build(&label_refs, &arrow_refs, policy)?)
}
