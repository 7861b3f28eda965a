//! Words over the vertex alphabet and their commutation combinatorics:
//! letter support, elementary commutations, the commutation-equivalence
//! decision procedure, initial letters, and tidiness.

use std::collections::{BTreeSet, VecDeque};

use thiserror::Error;

use crate::graph::{OrientedGraph, VertexId};

/// Set of distinct letters occurring in a word. Invariant under both
/// elementary cancellations and elementary commutations.
pub type Support = BTreeSet<VertexId>;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum WordError {
    #[error("UnknownLabel({0})")]
    UnknownLabel(String),
    #[error("EmptyWord")]
    EmptyWord,
    #[error("BudgetExceeded({0})")]
    BudgetExceeded(usize),
}

/// A finite sequence of letters; an element of the free monoid on the
/// vertex set. The empty word is the monoid identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<VertexId>,
}

impl Word {
    pub fn empty() -> Self {
        Word {
            letters: Vec::new(),
        }
    }

    pub fn from_letters(letters: Vec<VertexId>) -> Self {
        Word { letters }
    }

    pub fn letters(&self) -> &[VertexId] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    pub fn appended(&self, v: VertexId) -> Word {
        let mut letters = self.letters.clone();
        letters.push(v);
        Word { letters }
    }

    pub fn repeated(&self, k: usize) -> Word {
        let mut letters = Vec::with_capacity(self.len() * k);
        for _ in 0..k {
            letters.extend_from_slice(&self.letters);
        }
        Word { letters }
    }

    /// Parses the word text format: labels separated by whitespace or
    /// commas, or the compact form (one character per letter) when every
    /// label of the graph is a single character. Letters must belong to
    /// the graph's alphabet.
    pub fn parse(text: &str, g: &OrientedGraph) -> Result<Word, WordError> {
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return Ok(Word::empty());
        }
        let tokens: Vec<&str> = trimmed
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .collect();
        if tokens.len() > 1 {
            let letters = tokens
                .iter()
                .map(|t| {
                    g.vertex(t)
                        .ok_or_else(|| WordError::UnknownLabel(t.to_string()))
                })
                .collect::<Result<Vec<_>, _>>()?;
            return Ok(Word { letters });
        }
        let token = tokens[0];
        if let Some(v) = g.vertex(token) {
            return Ok(Word { letters: vec![v] });
        }
        if g.labels().iter().all(|l| l.chars().count() == 1) {
            let letters = token
                .chars()
                .map(|c| {
                    g.vertex(&c.to_string())
                        .ok_or_else(|| WordError::UnknownLabel(c.to_string()))
                })
                .collect::<Result<Vec<_>, _>>()?;
            return Ok(Word { letters });
        }
        Err(WordError::UnknownLabel(token.to_string()))
    }

    /// Renders the word: compact when all graph labels are single
    /// characters, space-separated otherwise. Round-trips through `parse`.
    pub fn to_text(&self, g: &OrientedGraph) -> String {
        let compact = g.labels().iter().all(|l| l.chars().count() == 1);
        let sep = if compact { "" } else { " " };
        self.letters
            .iter()
            .map(|&v| g.label(v))
            .collect::<Vec<_>>()
            .join(sep)
    }

    pub fn support(&self) -> Support {
        self.letters.iter().copied().collect()
    }

    /// Positions `i` such that the adjacent letters at `i`, `i + 1` are
    /// distinct and disconnected, i.e. where an elementary commutation
    /// applies.
    pub fn commutation_sites(&self, g: &OrientedGraph) -> Vec<usize> {
        (0..self.letters.len().saturating_sub(1))
            .filter(|&i| g.independent(self.letters[i], self.letters[i + 1]))
            .collect()
    }

    /// The word with the letters at `i`, `i + 1` swapped. Callers are
    /// expected to pass a commutation site.
    pub fn swapped(&self, i: usize) -> Word {
        let mut letters = self.letters.clone();
        letters.swap(i, i + 1);
        Word { letters }
    }

    /// Full commutation-equivalence class of the word, by breadth-first
    /// closure over elementary commutations. Class sizes can be factorial
    /// in the length, hence the budget.
    pub fn commutation_class(
        &self,
        g: &OrientedGraph,
        budget: usize,
    ) -> Result<BTreeSet<Word>, WordError> {
        let mut class: BTreeSet<Word> = BTreeSet::new();
        let mut queue: VecDeque<Word> = VecDeque::new();
        class.insert(self.clone());
        queue.push_back(self.clone());
        if class.len() > budget {
            return Err(WordError::BudgetExceeded(budget));
        }
        while let Some(w) = queue.pop_front() {
            for i in w.commutation_sites(g) {
                let next = w.swapped(i);
                if class.insert(next.clone()) {
                    if class.len() > budget {
                        return Err(WordError::BudgetExceeded(budget));
                    }
                    queue.push_back(next);
                }
            }
        }
        Ok(class)
    }

    /// Decides commutation equivalence by the projection criterion: equal
    /// letter multisets, and equal subsequences over every connected pair
    /// of letters. Quadratic, where class enumeration would be factorial.
    pub fn commutation_equivalent(&self, other: &Word, g: &OrientedGraph) -> bool {
        if self.len() != other.len() {
            return false;
        }
        let mut counts = vec![0i64; g.vertex_count()];
        for &x in &self.letters {
            counts[x.index()] += 1;
        }
        for &x in &other.letters {
            counts[x.index()] -= 1;
        }
        if counts.iter().any(|&c| c != 0) {
            return false;
        }
        // No 2-cycles, so `arrows()` visits each connected pair once.
        g.arrows().iter().all(|&(a, b)| {
            let mine = self.letters.iter().filter(|&&x| x == a || x == b);
            let theirs = other.letters.iter().filter(|&&x| x == a || x == b);
            mine.eq(theirs)
        })
    }

    /// Positions whose letter commutes with (is distinct from and
    /// disconnected from) every earlier letter. Position 0 always
    /// qualifies on nonempty words.
    pub fn initial_positions(&self, g: &OrientedGraph) -> Vec<usize> {
        let mut prefix: Vec<VertexId> = Vec::new();
        let mut out = Vec::new();
        for (j, &x) in self.letters.iter().enumerate() {
            if prefix.iter().all(|&p| g.independent(p, x)) {
                out.push(j);
            }
            if !prefix.contains(&x) {
                prefix.push(x);
            }
        }
        out
    }

    /// The least letter, under the graph's order policy, among the letters
    /// at initial positions.
    pub fn least_initial_letter(&self, g: &OrientedGraph) -> Result<VertexId, WordError> {
        least_initial_of(&self.letters, g).ok_or(WordError::EmptyWord)
    }

    /// A word is tidy when it is empty, or starts with its own least
    /// initial letter and the remainder is tidy.
    pub fn is_tidy(&self, g: &OrientedGraph) -> bool {
        let mut rest: &[VertexId] = &self.letters;
        while !rest.is_empty() {
            if least_initial_of(rest, g) != Some(rest[0]) {
                return false;
            }
            rest = &rest[1..];
        }
        true
    }
}

/// Least initial letter of a letter slice, or `None` when empty.
pub(crate) fn least_initial_of(letters: &[VertexId], g: &OrientedGraph) -> Option<VertexId> {
    let mut prefix: Vec<VertexId> = Vec::new();
    let mut best: Option<VertexId> = None;
    for &x in letters {
        if prefix.iter().all(|&p| g.independent(p, x)) {
            best = match best {
                Some(b) if g.rank(b) <= g.rank(x) => Some(b),
                _ => Some(x),
            };
        }
        if !prefix.contains(&x) {
            prefix.push(x);
        }
    }
    best
}

/// Standard lexicographic comparison of words under the graph's order
/// policy (a proper prefix sorts before its extensions).
pub fn cmp_words(g: &OrientedGraph, u: &Word, v: &Word) -> std::cmp::Ordering {
    for (&a, &b) in u.letters().iter().zip(v.letters()) {
        let ord = g.cmp_vertices(a, b);
        if ord != std::cmp::Ordering::Equal {
            return ord;
        }
    }
    u.len().cmp(&v.len())
}

/// All words of length at most `max_len`, in (length, vertex-id) order.
pub fn words_up_to(g: &OrientedGraph, max_len: usize) -> WordRange {
    WordRange {
        n: g.vertex_count() as u32,
        max_len,
        next: Some(Vec::new()),
    }
}

pub struct WordRange {
    n: u32,
    max_len: usize,
    next: Option<Vec<u32>>,
}

impl Iterator for WordRange {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let digits = self.next.take()?;
        let word = Word::from_letters(digits.iter().map(|&d| VertexId(d)).collect());
        self.next = self.advance(digits);
        Some(word)
    }
}

impl WordRange {
    fn advance(&self, mut digits: Vec<u32>) -> Option<Vec<u32>> {
        if self.n == 0 {
            return None;
        }
        for i in (0..digits.len()).rev() {
            if digits[i] + 1 < self.n {
                digits[i] += 1;
                for d in digits[i + 1..].iter_mut() {
                    *d = 0;
                }
                return Some(digits);
            }
        }
        if digits.len() < self.max_len {
            Some(vec![0; digits.len() + 1])
        } else {
            None
        }
    }
}
