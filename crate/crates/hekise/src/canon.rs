//! Canonical representatives: the lexicographically minimal (tidy) normal
//! form of each monoid element, monoid equality, and multiplication.
//!
//! Commuting the letters of a normal form never changes the monoid
//! element, and every normal form of an element can be reached this way,
//! so picking the lexicographically least member of the commutation class
//! of any normal form yields a well-defined canonical word. That minimum
//! cannot in general be found by greedy lexicographically-decreasing
//! swaps; it is built front-to-back by repeatedly emitting the least
//! letter that can be commuted to the front.

use thiserror::Error;

use crate::graph::{OrientedGraph, VertexId};
use crate::rewrite::{self, Strategy};
use crate::word::{least_initial_of, Word};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum CanonError {
    #[error("NotNormalForm")]
    NotNormalForm,
    #[error("GraphMismatch")]
    GraphMismatch,
}

/// The canonical word of a monoid element: a tidy normal form that is the
/// lexicographically least element of its commutation class. Carries the
/// identity token of the graph it was computed against.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CanonicalForm {
    word: Word,
    graph_id: u64,
}

impl CanonicalForm {
    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn into_word(self) -> Word {
        self.word
    }

    pub fn graph_id(&self) -> u64 {
        self.graph_id
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn to_text(&self, g: &OrientedGraph) -> String {
        self.word.to_text(g)
    }
}

/// Lexicographically minimal element of the commutation class of a normal
/// form: repeatedly emit the least initial letter of what remains and
/// delete its leftmost occurrence.
pub fn min_normal_form(w: &Word, g: &OrientedGraph) -> Result<Word, CanonError> {
    if !rewrite::is_normal_form(w, g) {
        return Err(CanonError::NotNormalForm);
    }
    Ok(lex_min_of_class(w, g))
}

fn lex_min_of_class(w: &Word, g: &OrientedGraph) -> Word {
    let mut rest: Vec<VertexId> = w.letters().to_vec();
    let mut out = Vec::with_capacity(rest.len());
    while let Some(least) = least_initial_of(&rest, g) {
        out.push(least);
        let at = rest
            .iter()
            .position(|&x| x == least)
            .expect("an initial letter occurs in the word");
        rest.remove(at);
    }
    Word::from_letters(out)
}

/// Canonical form of an arbitrary word: normalize deterministically, then
/// take the minimal element of the resulting commutation class.
pub fn canonicalize(w: &Word, g: &OrientedGraph) -> CanonicalForm {
    let (nf, _) = rewrite::normalize(w, g, Strategy::LeftmostRightFirst);
    CanonicalForm {
        word: lex_min_of_class(&nf, g),
        graph_id: g.id(),
    }
}

/// Monoid equality, decided by verbatim equality of canonical forms.
pub fn equal_in_monoid(u: &Word, v: &Word, g: &OrientedGraph) -> bool {
    canonicalize(u, g) == canonicalize(v, g)
}

/// Product of two canonical forms over the same graph.
pub fn multiply(
    x: &CanonicalForm,
    y: &CanonicalForm,
    g: &OrientedGraph,
) -> Result<CanonicalForm, CanonError> {
    if x.graph_id != g.id() || y.graph_id != g.id() {
        return Err(CanonError::GraphMismatch);
    }
    Ok(canonicalize(&x.word.concat(&y.word), g))
}

/// The monoid unit: the empty word, which is trivially normal and tidy.
pub fn identity(g: &OrientedGraph) -> CanonicalForm {
    CanonicalForm {
        word: Word::empty(),
        graph_id: g.id(),
    }
}
