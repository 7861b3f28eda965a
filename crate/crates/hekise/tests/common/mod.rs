//! Shared fixtures and invariant suites for the integration tests. The
//! property functions live here so the acceptance suite can run the same
//! checks it reports on.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hekise::{
    canon, enumerate, oracle, rewrite,
    word::{cmp_words, words_up_to, Word},
    OrderPolicy, OrientedGraph, Strategy, VertexId,
};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn w(text: &str, g: &OrientedGraph) -> Word {
    Word::parse(text, g).expect("test word parses")
}

pub fn texts<'a, I: IntoIterator<Item = &'a Word>>(words: I, g: &OrientedGraph) -> Vec<String> {
    words.into_iter().map(|x| x.to_text(g)).collect()
}

/// Three vertices `a < b < c`, single arrow `a -> c`.
pub fn single_arrow_graph() -> OrientedGraph {
    OrientedGraph::build(
        &["a", "b", "c"],
        &[("a", "c")],
        OrderPolicy::LabelLexicographic,
    )
    .unwrap()
}

/// Totally disconnected graph on the first `n` letters.
pub fn free_graph(n: usize) -> OrientedGraph {
    let labels = letter_labels(n);
    let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
    OrientedGraph::build(&refs, &[], OrderPolicy::LabelLexicographic).unwrap()
}

fn letter_labels(n: usize) -> Vec<String> {
    assert!(n <= 26);
    (0..n)
        .map(|i| ((b'a' + i as u8) as char).to_string())
        .collect()
}

/// Every simple oriented graph on the vertices `a, b, c`: three states
/// (absent, forward, reverse) per unordered pair.
pub fn all_three_vertex_graphs() -> Vec<OrientedGraph> {
    let pairs = [("a", "b"), ("a", "c"), ("b", "c")];
    (0..27u32)
        .map(|mask| {
            let mut arrows = Vec::new();
            let mut m = mask;
            for &(x, y) in &pairs {
                match m % 3 {
                    1 => arrows.push((x, y)),
                    2 => arrows.push((y, x)),
                    _ => {}
                }
                m /= 3;
            }
            OrientedGraph::build(&["a", "b", "c"], &arrows, OrderPolicy::LabelLexicographic)
                .unwrap()
        })
        .collect()
}

/// A small panel of structurally different graphs used by the invariant
/// suites.
pub fn panel() -> Vec<OrientedGraph> {
    vec![
        single_arrow_graph(),
        free_graph(3),
        OrientedGraph::gamma_n(3),
        OrientedGraph::path_n(3),
        OrientedGraph::cycle_n(3).unwrap(),
    ]
}

/// Uniformly random orientation choice per unordered pair.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> OrientedGraph {
    let labels = letter_labels(n);
    let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
    let mut arrows = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            match rng.gen_range(0..3) {
                1 => arrows.push((refs[i], refs[j])),
                2 => arrows.push((refs[j], refs[i])),
                _ => {}
            }
        }
    }
    OrientedGraph::build(&refs, &arrows, OrderPolicy::LabelLexicographic).unwrap()
}

pub fn random_word(rng: &mut ChaCha8Rng, g: &OrientedGraph, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    let n = g.vertex_count() as u32;
    Word::from_letters((0..len).map(|_| VertexId(rng.gen_range(0..n))).collect())
}

pub fn random_nonempty_word(rng: &mut ChaCha8Rng, g: &OrientedGraph, max_len: usize) -> Word {
    let len = rng.gen_range(1..=max_len.max(1));
    let n = g.vertex_count() as u32;
    Word::from_letters((0..len).map(|_| VertexId(rng.gen_range(0..n))).collect())
}

/// Random walk through elementary commutations; the result stays in the
/// commutation class of `word`.
pub fn scramble_by_commutations(
    rng: &mut ChaCha8Rng,
    word: &Word,
    g: &OrientedGraph,
    steps: usize,
) -> Word {
    let mut current = word.clone();
    for _ in 0..steps {
        let sites = current.commutation_sites(g);
        if sites.is_empty() {
            break;
        }
        current = current.swapped(sites[rng.gen_range(0..sites.len())]);
    }
    current
}

/// Random walk through presentation relation moves; the result maps to
/// the same monoid element as `word`.
pub fn scramble_by_relations(
    rng: &mut ChaCha8Rng,
    word: &Word,
    g: &OrientedGraph,
    steps: usize,
    max_len: usize,
) -> Word {
    let mut current = word.clone();
    for _ in 0..steps {
        let moves = oracle::relation_moves(&current, g, max_len);
        if moves.is_empty() {
            break;
        }
        current = moves[rng.gen_range(0..moves.len())].1.clone();
    }
    current
}

/// All words reachable from `word` by any number of cancellations,
/// including `word` itself.
pub fn reach_words(word: &Word, g: &OrientedGraph) -> BTreeSet<Word> {
    let mut seen = BTreeSet::from([word.clone()]);
    let mut queue = VecDeque::from([word.clone()]);
    while let Some(x) = queue.pop_front() {
        for site in rewrite::cancellation_sites(&x, g) {
            let child = rewrite::apply_cancellation(&x, g, &site).unwrap();
            if seen.insert(child.clone()) {
                queue.push_back(child);
            }
        }
    }
    seen
}

/// One-step cancellation successors.
pub fn cancellation_children(word: &Word, g: &OrientedGraph) -> Vec<Word> {
    rewrite::cancellation_sites(word, g)
        .iter()
        .map(|s| rewrite::apply_cancellation(word, g, s).unwrap())
        .collect()
}

/// All distinct rearrangements of a letter multiset.
pub fn distinct_permutations(letters: &[VertexId]) -> Vec<Word> {
    let mut counts: BTreeMap<VertexId, usize> = BTreeMap::new();
    for &l in letters {
        *counts.entry(l).or_insert(0) += 1;
    }
    let keys: Vec<VertexId> = counts.keys().copied().collect();
    let mut chosen = Vec::with_capacity(letters.len());
    let mut out = Vec::new();
    permute_rec(&keys, &mut counts, letters.len(), &mut chosen, &mut out);
    out
}

fn permute_rec(
    keys: &[VertexId],
    counts: &mut BTreeMap<VertexId, usize>,
    total: usize,
    chosen: &mut Vec<VertexId>,
    out: &mut Vec<Word>,
) {
    if chosen.len() == total {
        out.push(Word::from_letters(chosen.clone()));
        return;
    }
    for &k in keys {
        if counts[&k] > 0 {
            *counts.get_mut(&k).unwrap() -= 1;
            chosen.push(k);
            permute_rec(keys, counts, total, chosen, out);
            chosen.pop();
            *counts.get_mut(&k).unwrap() += 1;
        }
    }
}

/// Local joinability modulo commutation for a divergence `y <- x -> z`.
pub fn divergence_joins(y: &Word, z: &Word, g: &OrientedGraph) -> bool {
    let ny = rewrite::all_normal_forms(y, g, 1_000_000).unwrap();
    let nz = rewrite::all_normal_forms(z, g, 1_000_000).unwrap();
    if let (Some(u), Some(v)) = (ny.iter().next(), nz.iter().next()) {
        if u.commutation_equivalent(v, g) {
            return true;
        }
    }
    if ny
        .iter()
        .any(|u| nz.iter().any(|v| u.commutation_equivalent(v, g)))
    {
        return true;
    }
    let (ry, rz) = (reach_words(y, g), reach_words(z, g));
    ry.iter()
        .any(|u| rz.iter().any(|v| u.commutation_equivalent(v, g)))
}

/// For `x ~ y` (one commutation) and `x -> z` (one cancellation): some
/// word reachable from `y` is commutation-equivalent to `z`.
pub fn commutation_step_matches(y: &Word, z: &Word, g: &OrientedGraph) -> bool {
    if y.commutation_equivalent(z, g) {
        return true;
    }
    if cancellation_children(y, g)
        .iter()
        .any(|u| u.commutation_equivalent(z, g))
    {
        return true;
    }
    reach_words(y, g)
        .iter()
        .any(|u| u.commutation_equivalent(z, g))
}

// ---------------------------------------------------------------------
// Invariant suites. Each function is deterministic and panics on failure.
// ---------------------------------------------------------------------

pub mod props {
    use super::*;

    /// The projection criterion decides exactly membership in the
    /// BFS-computed commutation class, over every rearrangement of the
    /// letter content.
    pub fn word_projection_criterion_matches_class_membership() {
        for g in panel() {
            for word in words_up_to(&g, 5) {
                let class = word.commutation_class(&g, 100_000).unwrap();
                for cand in distinct_permutations(word.letters()) {
                    assert_eq!(
                        class.contains(&cand),
                        word.commutation_equivalent(&cand, &g),
                        "projection criterion disagrees with class membership for {} vs {}",
                        word.to_text(&g),
                        cand.to_text(&g)
                    );
                }
            }
        }
        let mut r = rng(11);
        for _ in 0..30 {
            let g = random_graph(&mut r, 4);
            let word = random_word(&mut r, &g, 8);
            let class = word.commutation_class(&g, 200_000).unwrap();
            for cand in distinct_permutations(word.letters()) {
                assert_eq!(
                    class.contains(&cand),
                    word.commutation_equivalent(&cand, &g)
                );
            }
        }
    }

    /// Reflexivity, symmetry and transitivity of the equivalence test.
    pub fn word_equivalence_is_an_equivalence() {
        let mut r = rng(12);
        for _ in 0..200 {
            let g = random_graph(&mut r, 4);
            let u = random_word(&mut r, &g, 8);
            let v = scramble_by_commutations(&mut r, &u, &g, 6);
            let x = scramble_by_commutations(&mut r, &v, &g, 6);
            assert!(u.commutation_equivalent(&u, &g));
            assert!(u.commutation_equivalent(&v, &g));
            assert!(v.commutation_equivalent(&u, &g));
            assert!(v.commutation_equivalent(&x, &g));
            assert!(u.commutation_equivalent(&x, &g));

            let other = random_word(&mut r, &g, 8);
            assert_eq!(
                u.commutation_equivalent(&other, &g),
                other.commutation_equivalent(&u, &g)
            );
        }
    }

    /// Commutation classes preserve length and support.
    pub fn word_class_preserves_length_and_support() {
        for g in panel() {
            for word in words_up_to(&g, 5) {
                for member in word.commutation_class(&g, 100_000).unwrap() {
                    assert_eq!(member.len(), word.len());
                    assert_eq!(member.support(), word.support());
                }
            }
        }
    }

    /// The set of letters at initial positions depends only on the
    /// commutation class.
    pub fn word_initial_letter_set_is_class_invariant() {
        for g in panel() {
            for word in words_up_to(&g, 6) {
                let reference = initial_letter_set(&word, &g);
                for member in word.commutation_class(&g, 100_000).unwrap() {
                    assert_eq!(initial_letter_set(&member, &g), reference);
                }
            }
        }
    }

    fn initial_letter_set(word: &Word, g: &OrientedGraph) -> BTreeSet<VertexId> {
        word.initial_positions(g)
            .iter()
            .map(|&i| word.letters()[i])
            .collect()
    }

    /// The least initial letter is the least leading letter across the
    /// commutation class.
    pub fn word_least_initial_is_least_class_leader() {
        for g in panel() {
            for word in words_up_to(&g, 6) {
                if word.is_empty() {
                    continue;
                }
                let iota = word.least_initial_letter(&g).unwrap();
                let min_leader = word
                    .commutation_class(&g, 100_000)
                    .unwrap()
                    .iter()
                    .map(|member| member.letters()[0])
                    .min_by_key(|&v| g.rank(v))
                    .unwrap();
                assert_eq!(iota, min_leader, "word {}", word.to_text(&g));
            }
        }
    }

    /// Every applied cancellation shortens by one and preserves support.
    pub fn rewrite_steps_shrink_and_preserve_support() {
        for g in panel() {
            for word in words_up_to(&g, 6) {
                for site in rewrite::cancellation_sites(&word, &g) {
                    let next = rewrite::apply_cancellation(&word, &g, &site).unwrap();
                    assert_eq!(next.len() + 1, word.len());
                    assert_eq!(next.support(), word.support());
                }
            }
        }
    }

    /// A word is a normal form exactly when every same-letter gap (over
    /// any distance) contains both an in-neighbour and an out-neighbour
    /// of the letter.
    pub fn rewrite_normal_form_characterization() {
        for g in panel() {
            for word in words_up_to(&g, 6) {
                let xs = word.letters();
                let mut blocked = true;
                'outer: for i in 0..xs.len() {
                    for j in (i + 1)..xs.len() {
                        if xs[i] != xs[j] {
                            continue;
                        }
                        let gap = &xs[i + 1..j];
                        let has_in = gap.iter().any(|&x| g.has_arrow(x, xs[i]));
                        let has_out = gap.iter().any(|&x| g.has_arrow(xs[i], x));
                        if !(has_in && has_out) {
                            blocked = false;
                            break 'outer;
                        }
                    }
                }
                assert_eq!(rewrite::is_normal_form(&word, &g), blocked);
            }
        }
    }

    /// A cancellation between non-consecutive occurrences produces a word
    /// already produced by some consecutive-occurrence site.
    pub fn rewrite_wide_gap_cancellations_factor_through_consecutive() {
        for g in panel() {
            for word in words_up_to(&g, 6) {
                let xs = word.letters();
                let one_step: BTreeSet<Word> =
                    cancellation_children(&word, &g).into_iter().collect();
                for i in 0..xs.len() {
                    for j in (i + 1)..xs.len() {
                        if xs[i] != xs[j] {
                            continue;
                        }
                        let a = xs[i];
                        let gap = &xs[i + 1..j];
                        if gap.iter().all(|&x| !g.has_arrow(x, a)) {
                            let mut letters = xs.to_vec();
                            letters.remove(j);
                            assert!(one_step.contains(&Word::from_letters(letters)));
                        }
                        if gap.iter().all(|&x| !g.has_arrow(a, x)) {
                            let mut letters = xs.to_vec();
                            letters.remove(i);
                            assert!(one_step.contains(&Word::from_letters(letters)));
                        }
                    }
                }
            }
        }
    }

    /// Reachable normal forms of a word are pairwise equivalent, share a
    /// length, and every strategy reaches one of them in exactly
    /// `len(word) - len(normal form)` steps.
    pub fn rewrite_reachable_forms_agree(graphs: &[OrientedGraph], max_len: usize) {
        for g in graphs {
            for (k, word) in words_up_to(g, max_len).enumerate() {
                let forms = rewrite::all_normal_forms(&word, g, 1_000_000).unwrap();
                let mut iter = forms.iter();
                let first = iter.next().expect("at least one normal form");
                for other in iter {
                    assert_eq!(other.len(), first.len());
                    assert!(first.commutation_equivalent(other, g));
                }
                for strategy in [
                    Strategy::LeftmostRightFirst,
                    Strategy::RandomSeeded(k as u64),
                ] {
                    let (nf, trace) = rewrite::normalize(&word, g, strategy);
                    assert!(forms.contains(&nf));
                    assert_eq!(trace.len(), word.len() - nf.len());
                    if !word.is_empty() {
                        assert!(trace.len() < word.len());
                    }
                }
            }
        }
    }

    /// Local confluence modulo commutation on the fixed panel.
    pub fn rewrite_local_confluence_panel() {
        for g in panel() {
            rewrite::check_local_confluence(&g, 5).expect("panel graphs are confluent");
        }
    }

    /// Doubling a letter around a block of non-in-neighbours (resp.
    /// non-out-neighbours) is absorbed on the right (resp. left).
    pub fn rewrite_collapse_absorption() {
        let mut r = rng(13);
        for _ in 0..300 {
            let g = random_graph(&mut r, 5);
            let a = VertexId(r.gen_range(0..5));
            let no_in: Vec<VertexId> = g.vertices().filter(|&x| !g.has_arrow(x, a)).collect();
            let len = r.gen_range(0..=5);
            let middle: Vec<VertexId> = (0..len)
                .map(|_| no_in[r.gen_range(0..no_in.len())])
                .collect();
            let aua = sandwich(a, &middle, true);
            let au = prefixed(a, &middle);
            let (nf_long, _) = rewrite::normalize(&aua, &g, Strategy::LeftmostRightFirst);
            let (nf_short, _) = rewrite::normalize(&au, &g, Strategy::LeftmostRightFirst);
            assert!(nf_long.commutation_equivalent(&nf_short, &g));

            let no_out: Vec<VertexId> = g.vertices().filter(|&x| !g.has_arrow(a, x)).collect();
            let middle: Vec<VertexId> = (0..len)
                .map(|_| no_out[r.gen_range(0..no_out.len())])
                .collect();
            let aua = sandwich(a, &middle, true);
            let ua = suffixed(&middle, a);
            let (nf_long, _) = rewrite::normalize(&aua, &g, Strategy::LeftmostRightFirst);
            let (nf_short, _) = rewrite::normalize(&ua, &g, Strategy::LeftmostRightFirst);
            assert!(nf_long.commutation_equivalent(&nf_short, &g));
        }
    }

    fn sandwich(a: VertexId, middle: &[VertexId], close: bool) -> Word {
        let mut letters = vec![a];
        letters.extend_from_slice(middle);
        if close {
            letters.push(a);
        }
        Word::from_letters(letters)
    }

    fn prefixed(a: VertexId, middle: &[VertexId]) -> Word {
        let mut letters = vec![a];
        letters.extend_from_slice(middle);
        Word::from_letters(letters)
    }

    fn suffixed(middle: &[VertexId], a: VertexId) -> Word {
        let mut letters = middle.to_vec();
        letters.push(a);
        Word::from_letters(letters)
    }

    /// Canonicalization is idempotent.
    pub fn canon_idempotent() {
        let mut r = rng(14);
        for _ in 0..300 {
            let g = random_graph(&mut r, 5);
            let word = random_word(&mut r, &g, 10);
            let once = canon::canonicalize(&word, &g);
            let twice = canon::canonicalize(once.word(), &g);
            assert_eq!(once, twice);
        }
    }

    /// One application of any presentation relation, in either direction,
    /// at any position, never changes the canonical form.
    pub fn canon_relation_invariance() {
        let mut r = rng(15);
        for g in panel() {
            for word in words_up_to(&g, 4) {
                let reference = canon::canonicalize(&word, &g);
                for (_, neighbour) in oracle::relation_moves(&word, &g, word.len() + 2) {
                    assert_eq!(canon::canonicalize(&neighbour, &g), reference);
                }
            }
        }
        for _ in 0..200 {
            let g = random_graph(&mut r, 5);
            let word = random_word(&mut r, &g, 9);
            let reference = canon::canonicalize(&word, &g);
            for (_, neighbour) in oracle::relation_moves(&word, &g, word.len() + 2) {
                assert_eq!(canon::canonicalize(&neighbour, &g), reference);
            }
        }
    }

    /// Randomized normalization followed by class minimization lands on
    /// the same canonical word as the deterministic pipeline.
    pub fn canon_strategy_invariance(cases: usize) {
        let mut r = rng(16);
        for i in 0..cases {
            let g = random_graph(&mut r, 5);
            let word = random_word(&mut r, &g, 10);
            let (nf, _) = rewrite::normalize(&word, &g, Strategy::RandomSeeded(i as u64));
            let via_random = canon::min_normal_form(&nf, &g).unwrap();
            assert_eq!(&via_random, canon::canonicalize(&word, &g).word());
        }
    }

    /// The minimal normal form is normal, tidy, and the lexicographic
    /// minimum of its commutation class.
    pub fn canon_min_normal_form_minimality() {
        let mut r = rng(17);
        for _ in 0..200 {
            let g = random_graph(&mut r, 4);
            let word = random_word(&mut r, &g, 8);
            let (nf, _) = rewrite::normalize(&word, &g, Strategy::LeftmostRightFirst);
            let minimal = canon::min_normal_form(&nf, &g).unwrap();
            assert!(rewrite::is_normal_form(&minimal, &g));
            assert!(minimal.is_tidy(&g));
            let class = nf.commutation_class(&g, 200_000).unwrap();
            assert!(class.contains(&minimal));
            let explicit = class.iter().min_by(|x, y| cmp_words(&g, x, y)).unwrap();
            assert_eq!(&minimal, explicit);
        }
    }

    /// Multiplication is associative and the identity is a two-sided unit.
    pub fn canon_multiply_monoid_laws() {
        let mut r = rng(18);
        for _ in 0..200 {
            let g = random_graph(&mut r, 4);
            let x = canon::canonicalize(&random_word(&mut r, &g, 6), &g);
            let y = canon::canonicalize(&random_word(&mut r, &g, 6), &g);
            let z = canon::canonicalize(&random_word(&mut r, &g, 6), &g);
            let xy_z = canon::multiply(&canon::multiply(&x, &y, &g).unwrap(), &z, &g).unwrap();
            let x_yz = canon::multiply(&x, &canon::multiply(&y, &z, &g).unwrap(), &g).unwrap();
            assert_eq!(xy_z, x_yz);

            let e = canon::identity(&g);
            assert_eq!(canon::multiply(&e, &x, &g).unwrap(), x);
            assert_eq!(canon::multiply(&x, &e, &g).unwrap(), x);
        }
    }

    /// On the single-arrow graph the minimum of the class of `cab` cannot
    /// be reached by lexicographically non-increasing commutations: the
    /// only route climbs through `cba`.
    pub fn canon_greedy_descent_counterexample() {
        let g = single_arrow_graph();
        let start = w("cab", &g);
        let target = w("bca", &g);
        assert_eq!(canon::canonicalize(&start, &g).word(), &target);

        let neighbours: Vec<Word> = start
            .commutation_sites(&g)
            .iter()
            .map(|&i| start.swapped(i))
            .collect();
        assert_eq!(neighbours, vec![w("cba", &g)]);
        assert_eq!(
            cmp_words(&g, &neighbours[0], &start),
            std::cmp::Ordering::Greater
        );

        // breadth-first search restricted to non-increasing steps
        let mut seen = BTreeSet::from([start.clone()]);
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for i in x.commutation_sites(&g) {
                let next = x.swapped(i);
                if cmp_words(&g, &next, &x) != std::cmp::Ordering::Greater
                    && seen.insert(next.clone())
                {
                    queue.push_back(next);
                }
            }
        }
        assert!(
            !seen.contains(&target),
            "a non-increasing commutation path to the minimum should not exist"
        );
    }

    /// A census closes exactly on acyclic graphs.
    pub fn enumerate_complete_iff_acyclic() {
        for g in all_three_vertex_graphs() {
            let budget = if g.is_acyclic() { 100_000 } else { 500 };
            let census = enumerate::enumerate_elements(&g, budget);
            assert_eq!(census.is_complete(), g.is_acyclic());
            for e in census.elements() {
                assert!(rewrite::is_normal_form(e.word(), &g));
                assert!(e.word().is_tidy(&g));
            }
        }
        let census = enumerate::enumerate_elements(&OrientedGraph::gamma_n(4), 1_000_000);
        assert!(census.is_complete());
    }

    /// The element set does not depend on declaration order or on the
    /// closure discipline (queue vs stack).
    pub fn enumerate_census_deterministic() {
        let forward = OrientedGraph::build(
            &["a", "b", "c"],
            &[("a", "c")],
            OrderPolicy::LabelLexicographic,
        )
        .unwrap();
        let reversed = OrientedGraph::build(
            &["c", "b", "a"],
            &[("a", "c")],
            OrderPolicy::LabelLexicographic,
        )
        .unwrap();
        let census = enumerate::enumerate_elements(&forward, 100_000);
        let census_rev = enumerate::enumerate_elements(&reversed, 100_000);
        let lhs: BTreeSet<String> = census
            .elements()
            .iter()
            .map(|e| e.to_text(&forward))
            .collect();
        let rhs: BTreeSet<String> = census_rev
            .elements()
            .iter()
            .map(|e| e.to_text(&reversed))
            .collect();
        assert_eq!(lhs, rhs);

        // depth-first closure over left and right multiplication
        let mut seen: BTreeSet<Word> = BTreeSet::new();
        let mut stack = vec![canon::identity(&forward)];
        seen.insert(canon::identity(&forward).word().clone());
        while let Some(x) = stack.pop() {
            for a in forward.vertices() {
                let single = canon::canonicalize(&Word::from_letters(vec![a]), &forward);
                for product in [
                    canon::multiply(&x, &single, &forward).unwrap(),
                    canon::multiply(&single, &x, &forward).unwrap(),
                ] {
                    if seen.insert(product.word().clone()) {
                        stack.push(product);
                    }
                }
            }
        }
        let bfs_words: BTreeSet<Word> =
            census.elements().iter().map(|e| e.word().clone()).collect();
        assert_eq!(seen, bfs_words);
    }

    /// Census size equals the number of commutation classes of normal
    /// forms of bounded length, counted without canonical forms.
    pub fn enumerate_census_matches_normal_form_classes() {
        for g in [
            OrientedGraph::gamma_n(2),
            OrientedGraph::gamma_n(3),
            OrientedGraph::path_n(3),
        ] {
            let census = enumerate::enumerate_elements(&g, 1_000_000);
            assert!(census.is_complete());
            let bound = census.max_length();
            let mut seen: BTreeSet<Word> = BTreeSet::new();
            let mut classes = 0usize;
            for word in words_up_to(&g, bound) {
                if !rewrite::is_normal_form(&word, &g) || seen.contains(&word) {
                    continue;
                }
                classes += 1;
                for member in word.commutation_class(&g, 1_000_000).unwrap() {
                    seen.insert(member);
                }
            }
            assert_eq!(classes, census.len(), "graph id {}", g.id());
        }
    }

    /// The brute-force decision is symmetric, transitive on equal chains,
    /// and confirms every word equal to its canonical form.
    pub fn oracle_consistency() {
        let mut r = rng(19);
        for _ in 0..60 {
            let g = random_graph(&mut r, 3);
            let u = random_word(&mut r, &g, 5);
            let v = random_word(&mut r, &g, 5);
            let max_len = u.len().max(v.len()) + 4;
            let forward = oracle::oracle_equal(&u, &v, &g, max_len, 1_000_000);
            let backward = oracle::oracle_equal(&v, &u, &g, max_len, 1_000_000);
            assert_eq!(forward, backward);

            let canonical = canon::canonicalize(&u, &g);
            assert_eq!(
                oracle::oracle_equal(&u, canonical.word(), &g, u.len() + 4, 1_000_000),
                oracle::OracleVerdict::Equal
            );

            let s1 = scramble_by_relations(&mut r, &u, &g, 5, u.len() + 3);
            let s2 = scramble_by_relations(&mut r, &s1, &g, 5, u.len() + 3);
            let cap = u.len().max(s1.len()).max(s2.len()) + 4;
            assert_eq!(
                oracle::oracle_equal(&u, &s1, &g, cap, 1_000_000),
                oracle::OracleVerdict::Equal
            );
            assert_eq!(
                oracle::oracle_equal(&s1, &s2, &g, cap, 1_000_000),
                oracle::OracleVerdict::Equal
            );
            assert_eq!(
                oracle::oracle_equal(&u, &s2, &g, cap, 1_000_000),
                oracle::OracleVerdict::Equal
            );
        }
    }
}
