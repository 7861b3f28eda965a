//! Elementary cancellations and normalization.
//!
//! A cancellation removes one of two consecutive occurrences of a letter
//! `a` when the gap between them permits it:
//!
//! * right: the second occurrence is removed when no gap letter has an
//!   arrow *to* `a`;
//! * left: the first occurrence is removed when no gap letter has an
//!   arrow *from* `a`.
//!
//! Each step shortens the word by one, so every strategy terminates; words
//! without sites are normal forms. Restricting detection to consecutive
//! occurrences loses nothing: a cancellation over a wider gap produces the
//! same word as the one at the consecutive pair sharing its removed
//! occurrence, because the wider gap contains the narrower one.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::rc::Rc;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{OrientedGraph, VertexId};
use crate::word::Word;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CancellationKind {
    Right,
    Left,
}

impl fmt::Display for CancellationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CancellationKind::Right => write!(f, "Right"),
            CancellationKind::Left => write!(f, "Left"),
        }
    }
}

/// A detected elementary cancellation between the consecutive occurrences
/// of `letter` at `outer_left` and `outer_right`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CancellationSite {
    pub kind: CancellationKind,
    pub outer_left: usize,
    pub outer_right: usize,
    pub letter: VertexId,
}

/// A maximal simplifying sequence: the start word and each applied
/// cancellation together with the word it produced.
#[derive(Clone, Debug)]
pub struct RewriteTrace {
    start: Word,
    steps: Vec<(CancellationSite, Word)>,
}

impl RewriteTrace {
    pub fn start(&self) -> &Word {
        &self.start
    }

    pub fn steps(&self) -> &[(CancellationSite, Word)] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Deterministic: least `outer_right`, then least `outer_left`, then
    /// `Right` before `Left`.
    LeftmostRightFirst,
    /// Uniform random site selection from a seeded generator.
    RandomSeeded(u64),
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum RewriteError {
    #[error("StaleSite")]
    StaleSite,
    #[error("BudgetExceeded({0})")]
    BudgetExceeded(usize),
}

/// All cancellation sites of `w`, between consecutive occurrences of each
/// letter. A single occurrence pair yields both a `Right` and a `Left`
/// site when the gap is fully disconnected from the letter.
pub fn cancellation_sites(w: &Word, g: &OrientedGraph) -> Vec<CancellationSite> {
    let letters = w.letters();
    let mut sites = Vec::new();
    for i in 0..letters.len() {
        let a = letters[i];
        let Some(j) = ((i + 1)..letters.len()).find(|&j| letters[j] == a) else {
            continue;
        };
        let gap = &letters[i + 1..j];
        if gap.iter().all(|&x| !g.has_arrow(x, a)) {
            sites.push(CancellationSite {
                kind: CancellationKind::Right,
                outer_left: i,
                outer_right: j,
                letter: a,
            });
        }
        if gap.iter().all(|&x| !g.has_arrow(a, x)) {
            sites.push(CancellationSite {
                kind: CancellationKind::Left,
                outer_left: i,
                outer_right: j,
                letter: a,
            });
        }
    }
    sites
}

/// Applies a cancellation site to `w`, re-validating the site first so a
/// site computed for a different word cannot silently corrupt the result.
pub fn apply_cancellation(
    w: &Word,
    g: &OrientedGraph,
    site: &CancellationSite,
) -> Result<Word, RewriteError> {
    let letters = w.letters();
    let CancellationSite {
        kind,
        outer_left: i,
        outer_right: j,
        letter: a,
    } = *site;
    let valid = i < j
        && j < letters.len()
        && letters[i] == a
        && letters[j] == a
        && letters[i + 1..j].iter().all(|&x| x != a)
        && match kind {
            CancellationKind::Right => letters[i + 1..j].iter().all(|&x| !g.has_arrow(x, a)),
            CancellationKind::Left => letters[i + 1..j].iter().all(|&x| !g.has_arrow(a, x)),
        };
    if !valid {
        return Err(RewriteError::StaleSite);
    }
    let mut out = letters.to_vec();
    out.remove(match kind {
        CancellationKind::Right => j,
        CancellationKind::Left => i,
    });
    Ok(Word::from_letters(out))
}

/// True iff no elementary cancellation applies to `w`.
pub fn is_normal_form(w: &Word, g: &OrientedGraph) -> bool {
    let letters = w.letters();
    for i in 0..letters.len() {
        let a = letters[i];
        let Some(j) = ((i + 1)..letters.len()).find(|&j| letters[j] == a) else {
            continue;
        };
        let gap = &letters[i + 1..j];
        if gap.iter().all(|&x| !g.has_arrow(x, a)) || gap.iter().all(|&x| !g.has_arrow(a, x)) {
            return false;
        }
    }
    true
}

/// Runs cancellations to exhaustion under the given strategy and returns
/// the reached normal form with the full trace. Terminates in at most
/// `len(w)` steps since every step shortens the word.
pub fn normalize(w: &Word, g: &OrientedGraph, strategy: Strategy) -> (Word, RewriteTrace) {
    let mut rng = match strategy {
        Strategy::RandomSeeded(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        Strategy::LeftmostRightFirst => None,
    };
    let mut current = w.clone();
    let mut steps = Vec::new();
    loop {
        let sites = cancellation_sites(&current, g);
        if sites.is_empty() {
            break;
        }
        let site = match &mut rng {
            None => *sites
                .iter()
                .min_by_key(|s| (s.outer_right, s.outer_left, s.kind))
                .expect("nonempty"),
            Some(rng) => sites[rng.gen_range(0..sites.len())],
        };
        let next = apply_cancellation(&current, g, &site).expect("site was computed for current");
        steps.push((site, next.clone()));
        current = next;
    }
    (
        current,
        RewriteTrace {
            start: w.clone(),
            steps,
        },
    )
}

/// The set of normal forms reachable from `w` by any maximal simplifying
/// sequence, by memoized exhaustive search over site choices. The budget
/// bounds the number of distinct intermediate words visited.
pub fn all_normal_forms(
    w: &Word,
    g: &OrientedGraph,
    budget: usize,
) -> Result<BTreeSet<Word>, RewriteError> {
    let mut memo: HashMap<Word, Rc<BTreeSet<Word>>> = HashMap::new();
    let set = normal_forms_memo(w, g, budget, &mut memo)?;
    Ok((*set).clone())
}

fn normal_forms_memo(
    w: &Word,
    g: &OrientedGraph,
    budget: usize,
    memo: &mut HashMap<Word, Rc<BTreeSet<Word>>>,
) -> Result<Rc<BTreeSet<Word>>, RewriteError> {
    if let Some(set) = memo.get(w) {
        return Ok(set.clone());
    }
    if memo.len() >= budget {
        return Err(RewriteError::BudgetExceeded(budget));
    }
    let sites = cancellation_sites(w, g);
    let set = if sites.is_empty() {
        BTreeSet::from([w.clone()])
    } else {
        let mut acc = BTreeSet::new();
        for site in &sites {
            let child = apply_cancellation(w, g, site).expect("freshly computed site");
            let sub = normal_forms_memo(&child, g, budget, memo)?;
            acc.extend(sub.iter().cloned());
        }
        acc
    };
    let set = Rc::new(set);
    memo.insert(w.clone(), set.clone());
    Ok(set)
}

/// Which local-confluence condition a counterexample violates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConfluenceCondition {
    /// Two cancellations of the same word cannot be rejoined modulo
    /// commutation.
    Alpha,
    /// A commutation step followed by a cancellation cannot be matched
    /// from the commuted word.
    Beta,
}

impl fmt::Display for ConfluenceCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConfluenceCondition::Alpha => write!(f, "alpha"),
            ConfluenceCondition::Beta => write!(f, "beta"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ConfluenceCounterexample {
    pub word: Word,
    pub condition: ConfluenceCondition,
}

/// Exhaustively checks the two local-confluence-modulo-commutation
/// conditions on every word of length at most `max_len`:
///
/// * alpha: for every divergence `y <- x -> z` by cancellations, some
///   `u, v` with `y ->* u`, `z ->* v`, `u ~ v` exist;
/// * beta: for `x ~ y` by one commutation and `x -> z` by one
///   cancellation, some `u` with `y ->* u` and `u ~ z` exists.
///
/// Returns the number of words checked, or the first counterexample.
pub fn check_local_confluence(
    g: &OrientedGraph,
    max_len: usize,
) -> Result<usize, ConfluenceCounterexample> {
    // Normal-form sets for every word, bottom-up by length; children of a
    // word are strictly shorter, hence already present.
    let words: Vec<Word> = crate::word::words_up_to(g, max_len).collect();
    let mut anf: HashMap<Word, Rc<BTreeSet<Word>>> = HashMap::with_capacity(words.len());
    for w in &words {
        let sites = cancellation_sites(w, g);
        let set = if sites.is_empty() {
            BTreeSet::from([w.clone()])
        } else {
            let mut acc = BTreeSet::new();
            for site in &sites {
                let child = apply_cancellation(w, g, site).expect("fresh site");
                acc.extend(anf[&child].iter().cloned());
            }
            acc
        };
        anf.insert(w.clone(), Rc::new(set));
    }

    let mut reach: HashMap<Word, Rc<BTreeSet<Word>>> = HashMap::new();
    for x in &words {
        let children: Vec<Word> = cancellation_sites(x, g)
            .iter()
            .map(|s| apply_cancellation(x, g, s).expect("fresh site"))
            .collect();

        for p in 0..children.len() {
            for q in (p + 1)..children.len() {
                let (y, z) = (&children[p], &children[q]);
                if y == z {
                    continue;
                }
                if !joinable_modulo_commutation(y, z, g, &anf, &mut reach) {
                    return Err(ConfluenceCounterexample {
                        word: x.clone(),
                        condition: ConfluenceCondition::Alpha,
                    });
                }
            }
        }

        for i in x.commutation_sites(g) {
            let y = x.swapped(i);
            for z in &children {
                if !cancellation_matched(&y, z, g, &mut reach) {
                    return Err(ConfluenceCounterexample {
                        word: x.clone(),
                        condition: ConfluenceCondition::Beta,
                    });
                }
            }
        }
    }
    Ok(words.len())
}

fn joinable_modulo_commutation(
    y: &Word,
    z: &Word,
    g: &OrientedGraph,
    anf: &HashMap<Word, Rc<BTreeSet<Word>>>,
    reach: &mut HashMap<Word, Rc<BTreeSet<Word>>>,
) -> bool {
    // Reachable normal forms join almost always; fall back to the full
    // reachable sets only when they do not.
    let (ny, nz) = (anf[y].clone(), anf[z].clone());
    if ny
        .iter()
        .any(|u| nz.iter().any(|v| u.commutation_equivalent(v, g)))
    {
        return true;
    }
    let (ry, rz) = (reach_set(y, g, reach), reach_set(z, g, reach));
    ry.iter()
        .any(|u| rz.iter().any(|v| u.commutation_equivalent(v, g)))
}

fn cancellation_matched(
    y: &Word,
    z: &Word,
    g: &OrientedGraph,
    reach: &mut HashMap<Word, Rc<BTreeSet<Word>>>,
) -> bool {
    // The matching word is at most one cancellation away from `y`; the
    // full reachable set is a fallback.
    if y.commutation_equivalent(z, g) {
        return true;
    }
    let one_step: Vec<Word> = cancellation_sites(y, g)
        .iter()
        .map(|s| apply_cancellation(y, g, s).expect("fresh site"))
        .collect();
    if one_step.iter().any(|u| u.commutation_equivalent(z, g)) {
        return true;
    }
    reach_set(y, g, reach)
        .iter()
        .any(|u| u.commutation_equivalent(z, g))
}

fn reach_set(
    w: &Word,
    g: &OrientedGraph,
    memo: &mut HashMap<Word, Rc<BTreeSet<Word>>>,
) -> Rc<BTreeSet<Word>> {
    if let Some(set) = memo.get(w) {
        return set.clone();
    }
    let mut acc = BTreeSet::from([w.clone()]);
    for site in cancellation_sites(w, g) {
        let child = apply_cancellation(w, g, &site).expect("fresh site");
        acc.extend(reach_set(&child, g, memo).iter().cloned());
    }
    let set = Rc::new(acc);
    memo.insert(w.clone(), set.clone());
    set
}
