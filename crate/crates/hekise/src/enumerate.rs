//! Enumeration of monoid elements as canonical forms, witnesses of
//! infiniteness on cyclic graphs, and Cayley-graph export.

use std::collections::{BTreeMap, HashSet, VecDeque};
use std::fmt::Write as _;

use thiserror::Error;

use crate::canon::{self, CanonicalForm};
use crate::graph::{OrientedGraph, VertexId};
use crate::rewrite;
use crate::word::{cmp_words, Word};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum EnumerateError {
    #[error("NotACycle")]
    NotACycle,
    #[error("IncompleteCensus")]
    IncompleteCensus,
}

/// The elements of a monoid materialized as canonical forms, sorted by
/// (length, lexicographic) order. `complete` is false when enumeration was
/// cut off by the element budget.
#[derive(Clone, Debug)]
pub struct MonoidCensus {
    graph_id: u64,
    elements: Vec<CanonicalForm>,
    words: HashSet<Word>,
    complete: bool,
    by_length: BTreeMap<usize, usize>,
}

impl MonoidCensus {
    pub fn graph_id(&self) -> u64 {
        self.graph_id
    }

    pub fn elements(&self) -> &[CanonicalForm] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn by_length(&self) -> &BTreeMap<usize, usize> {
        &self.by_length
    }

    pub fn contains(&self, word: &Word) -> bool {
        self.words.contains(word)
    }

    /// Length of the longest canonical word in the census.
    pub fn max_length(&self) -> usize {
        self.by_length.keys().next_back().copied().unwrap_or(0)
    }
}

/// Breadth-first closure from the identity under right multiplication by
/// each generator, deduplicating through canonical forms. Stops early with
/// `complete = false` once `max_elements` distinct elements are held and
/// another one appears.
pub fn enumerate_elements(g: &OrientedGraph, max_elements: usize) -> MonoidCensus {
    let mut words: HashSet<Word> = HashSet::new();
    let mut elements: Vec<CanonicalForm> = Vec::new();
    let mut queue: VecDeque<Word> = VecDeque::new();
    let mut complete = true;

    if max_elements == 0 {
        complete = false;
    } else {
        let unit = canon::identity(g);
        words.insert(unit.word().clone());
        queue.push_back(unit.word().clone());
        elements.push(unit);
        'closure: while let Some(x) = queue.pop_front() {
            for a in g.vertices() {
                let product = canon::canonicalize(&x.appended(a), g);
                if !words.contains(product.word()) {
                    if elements.len() >= max_elements {
                        complete = false;
                        break 'closure;
                    }
                    words.insert(product.word().clone());
                    queue.push_back(product.word().clone());
                    elements.push(product);
                }
            }
        }
    }

    elements.sort_by(|x, y| {
        x.len()
            .cmp(&y.len())
            .then_with(|| cmp_words(g, x.word(), y.word()))
    });
    let mut by_length = BTreeMap::new();
    for e in &elements {
        *by_length.entry(e.len()).or_insert(0) += 1;
    }
    MonoidCensus {
        graph_id: g.id(),
        elements,
        words,
        complete,
        by_length,
    }
}

/// Canonical forms of the powers `(c_1 ... c_m)^k` for `k = 1..=k_max`,
/// where the argument must be a directed cycle of `g`. Each power is a
/// normal form already, so the powers are pairwise distinct elements —
/// witnesses that the monoid is infinite.
pub fn cycle_power_witnesses(
    g: &OrientedGraph,
    cycle: &[VertexId],
    k_max: usize,
) -> Result<Vec<CanonicalForm>, EnumerateError> {
    let m = cycle.len();
    if m == 0 {
        return Err(EnumerateError::NotACycle);
    }
    for (i, &v) in cycle.iter().enumerate() {
        if cycle[i + 1..].contains(&v) {
            return Err(EnumerateError::NotACycle);
        }
        if !g.has_arrow(v, cycle[(i + 1) % m]) {
            return Err(EnumerateError::NotACycle);
        }
    }

    let base = Word::from_letters(cycle.to_vec());
    let mut out = Vec::with_capacity(k_max);
    for k in 1..=k_max {
        let power = base.repeated(k);
        assert!(
            rewrite::is_normal_form(&power, g),
            "every power of a directed cycle is a normal form"
        );
        let form = canon::canonicalize(&power, g);
        assert_eq!(form.len(), m * k, "canonicalization preserves length");
        out.push(form);
    }
    Ok(out)
}

/// Left-Cayley graph of a complete census in DOT format: one node per
/// canonical form, one labelled edge `x -> a.x` per generator `a`. The
/// identity node is displayed as the empty-set glyph.
pub fn cayley_dot(census: &MonoidCensus, g: &OrientedGraph) -> Result<String, EnumerateError> {
    if !census.is_complete() {
        return Err(EnumerateError::IncompleteCensus);
    }
    let mut dot = String::from("digraph cayley {\n  rankdir=LR;\n");
    for e in census.elements() {
        let name = escape_dot(&e.to_text(g));
        if e.is_empty() {
            let _ = writeln!(dot, "  \"{name}\" [label=\"\u{03b5}\"];");
        } else {
            let _ = writeln!(dot, "  \"{name}\";");
        }
    }
    for e in census.elements() {
        for a in g.vertices() {
            let mut letters = vec![a];
            letters.extend_from_slice(e.word().letters());
            let target = canon::canonicalize(&Word::from_letters(letters), g);
            let _ = writeln!(
                dot,
                "  \"{}\" -> \"{}\" [label=\"{}\"];",
                escape_dot(&e.to_text(g)),
                escape_dot(&target.to_text(g)),
                escape_dot(g.label(a)),
            );
        }
    }
    dot.push_str("}\n");
    Ok(dot)
}

fn escape_dot(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}
