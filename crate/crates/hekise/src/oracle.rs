//! Brute-force ground truth for monoid equality, working directly on the
//! defining presentation (idempotence, the two braid-collapse relations
//! per arrow, and commutation of disconnected letters). Deliberately
//! ignorant of normal-form theory so it can validate it.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::graph::{OrientedGraph, VertexId};
use crate::word::{words_up_to, Word};

/// One directed application of one presentation relation at one position.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RelationMove {
    /// Duplicate the letter at `at` (`a -> aa`).
    IdemInsert { at: usize, letter: VertexId },
    /// Delete the letter at `at + 1`, equal to the letter at `at`.
    IdemDelete { at: usize, letter: VertexId },
    /// Expand the pair at `at` (an arrow source-target pair `ab`) to the
    /// triple `aba` when `doubled_first`, else `bab`.
    BraidExpand {
        at: usize,
        letters: (VertexId, VertexId),
        doubled_first: bool,
    },
    /// Contract the triple at `at` to the pair `letters`; covers both
    /// `aba -> ab` and `bab -> ab` for an arrow `a -> b`.
    BraidContract {
        at: usize,
        letters: (VertexId, VertexId),
    },
    /// Swap the disconnected letters at `at`, `at + 1`.
    Commute {
        at: usize,
        letters: (VertexId, VertexId),
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleVerdict {
    Equal,
    NotEqual,
    Inconclusive,
}

impl fmt::Display for OracleVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleVerdict::Equal => write!(f, "Equal"),
            OracleVerdict::NotEqual => write!(f, "NotEqual"),
            OracleVerdict::Inconclusive => write!(f, "Inconclusive"),
        }
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("StateBudgetExceeded({0})")]
    StateBudgetExceeded(usize),
}

/// Cap on the number of words `oracle_classes` will materialize.
pub const ORACLE_STATE_BUDGET: usize = 4_000_000;

/// All single relation applications on `w` whose result stays within
/// `max_len`, with the resulting words.
pub fn relation_moves(w: &Word, g: &OrientedGraph, max_len: usize) -> Vec<(RelationMove, Word)> {
    let xs = w.letters();
    let len = xs.len();
    let mut out = Vec::new();

    if len < max_len {
        for i in 0..len {
            let mut next = xs.to_vec();
            next.insert(i, xs[i]);
            out.push((
                RelationMove::IdemInsert {
                    at: i,
                    letter: xs[i],
                },
                Word::from_letters(next),
            ));
        }
        for i in 0..len.saturating_sub(1) {
            let (p, q) = (xs[i], xs[i + 1]);
            if g.has_arrow(p, q) {
                let mut aba = xs.to_vec();
                aba.insert(i + 2, p);
                out.push((
                    RelationMove::BraidExpand {
                        at: i,
                        letters: (p, q),
                        doubled_first: true,
                    },
                    Word::from_letters(aba),
                ));
                let mut bab = xs.to_vec();
                bab[i] = q;
                bab[i + 1] = p;
                bab.insert(i + 2, q);
                out.push((
                    RelationMove::BraidExpand {
                        at: i,
                        letters: (p, q),
                        doubled_first: false,
                    },
                    Word::from_letters(bab),
                ));
            }
        }
    }

    for i in 0..len.saturating_sub(1) {
        if xs[i] == xs[i + 1] {
            let mut next = xs.to_vec();
            next.remove(i + 1);
            out.push((
                RelationMove::IdemDelete {
                    at: i,
                    letter: xs[i],
                },
                Word::from_letters(next),
            ));
        }
    }

    for i in 0..len.saturating_sub(1) {
        let (p, q) = (xs[i], xs[i + 1]);
        if g.independent(p, q) {
            let mut next = xs.to_vec();
            next.swap(i, i + 1);
            out.push((
                RelationMove::Commute {
                    at: i,
                    letters: (p, q),
                },
                Word::from_letters(next),
            ));
        }
    }

    for i in 0..len.saturating_sub(2) {
        let (p, q, r) = (xs[i], xs[i + 1], xs[i + 2]);
        if p == r && p != q {
            if g.has_arrow(p, q) {
                let mut next = xs.to_vec();
                next.remove(i + 2);
                out.push((
                    RelationMove::BraidContract {
                        at: i,
                        letters: (p, q),
                    },
                    Word::from_letters(next),
                ));
            }
            if g.has_arrow(q, p) {
                // p q p is the doubled form of the arrow q -> p
                let mut next = xs.to_vec();
                next[i] = q;
                next[i + 1] = p;
                next.remove(i + 2);
                out.push((
                    RelationMove::BraidContract {
                        at: i,
                        letters: (q, p),
                    },
                    Word::from_letters(next),
                ));
            }
        }
    }

    out
}

struct SearchSide {
    visited: HashSet<Word>,
    queue: VecDeque<Word>,
}

impl SearchSide {
    fn new(start: &Word) -> Self {
        SearchSide {
            visited: HashSet::from([start.clone()]),
            queue: VecDeque::from([start.clone()]),
        }
    }
}

/// Decides `pi(u) = pi(v)` by bidirectional breadth-first search over
/// relation moves within the universe of words of length at most
/// `max_len` (raised to cover the inputs if necessary).
///
/// `Equal` when the two searches meet; `NotEqual` when either class is
/// exhausted within the universe without meeting; `Inconclusive` when the
/// state budget runs out first. Letter content is invariant under every
/// relation, so differing supports settle the question immediately.
pub fn oracle_equal(
    u: &Word,
    v: &Word,
    g: &OrientedGraph,
    max_len: usize,
    max_states: usize,
) -> OracleVerdict {
    let max_len = max_len.max(u.len()).max(v.len());
    if u == v {
        return OracleVerdict::Equal;
    }
    if u.support() != v.support() {
        return OracleVerdict::NotEqual;
    }

    let mut side_u = SearchSide::new(u);
    let mut side_v = SearchSide::new(v);
    loop {
        if side_u.queue.is_empty() || side_v.queue.is_empty() {
            return OracleVerdict::NotEqual;
        }
        if side_u.visited.len() + side_v.visited.len() > max_states {
            return OracleVerdict::Inconclusive;
        }
        let expand_u = side_u.queue.len() <= side_v.queue.len();
        let (this, other) = if expand_u {
            (&mut side_u, &side_v)
        } else {
            (&mut side_v, &side_u)
        };
        let word = this.queue.pop_front().expect("checked nonempty");
        for (_, next) in relation_moves(&word, g, max_len) {
            if other.visited.contains(&next) {
                return OracleVerdict::Equal;
            }
            if this.visited.insert(next.clone()) {
                this.queue.push_back(next);
            }
        }
    }
}

struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
    }
}

/// Words of length at most `max_len` together with, for each word, the
/// index of the (length, vertex-id)-least member of its class.
fn raw_partition(
    g: &OrientedGraph,
    max_len: usize,
) -> Result<(Vec<Word>, Vec<usize>), OracleError> {
    let n = g.vertex_count() as u128;
    let mut total: u128 = 1;
    let mut power: u128 = 1;
    for _ in 0..max_len {
        power = power.saturating_mul(n);
        total = total.saturating_add(power);
    }
    if total > ORACLE_STATE_BUDGET as u128 {
        return Err(OracleError::StateBudgetExceeded(ORACLE_STATE_BUDGET));
    }

    let words: Vec<Word> = words_up_to(g, max_len).collect();
    let index: HashMap<&Word, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut uf = UnionFind::new(words.len());
    for (i, w) in words.iter().enumerate() {
        for (_, next) in relation_moves(w, g, max_len) {
            uf.union(i, index[&next]);
        }
    }

    // enumeration order is (length, lex), so the least index per root is
    // the least member
    let mut least_by_root: HashMap<usize, usize> = HashMap::new();
    let mut rep_of = Vec::with_capacity(words.len());
    for i in 0..words.len() {
        let root = uf.find(i);
        rep_of.push(*least_by_root.entry(root).or_insert(i));
    }
    Ok((words, rep_of))
}

/// Partitions all words of length at most `max_len` into presentation
/// classes by union-find over relation moves. Returns `(representative,
/// class size)` pairs, representatives being the (length, vertex-id)-least
/// members, in that order.
///
/// Classes whose every short member connects to others only through words
/// longer than `max_len` may come out split; callers interested in words
/// of length `k` should run with `max_len` comfortably above `2 * k`.
pub fn oracle_classes(
    g: &OrientedGraph,
    max_len: usize,
) -> Result<Vec<(Word, usize)>, OracleError> {
    let (words, rep_of) = raw_partition(g, max_len)?;
    let mut counts: HashMap<usize, usize> = HashMap::new();
    for &rep in &rep_of {
        *counts.entry(rep).or_insert(0) += 1;
    }
    let mut classes: Vec<(usize, usize)> = counts.into_iter().collect();
    classes.sort_unstable();
    Ok(classes
        .into_iter()
        .map(|(rep, count)| (words[rep].clone(), count))
        .collect())
}

/// The same partition as [`oracle_classes`], materialized as a map from
/// every word to its class representative. The truncation caveat of
/// [`oracle_classes`] applies.
pub fn oracle_partition(
    g: &OrientedGraph,
    max_len: usize,
) -> Result<HashMap<Word, Word>, OracleError> {
    let (words, rep_of) = raw_partition(g, max_len)?;
    Ok(words
        .iter()
        .enumerate()
        .map(|(i, w)| (w.clone(), words[rep_of[i]].clone()))
        .collect())
}
