//! Random and exhaustive instance generation for tests and benchmarks.

use std::collections::{HashSet, VecDeque};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::canonical::canonical_string;
use crate::formula::{Alphabet, Factor, Formula, Letter, UnaryOp};
use crate::mode::Mode;
use crate::tree::{Edge, SigmaTree};

/// Deterministic generator used throughout; the seed fixes every instance.
pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Decodes a Prüfer sequence into the edge list of a tree on
/// `sequence.len() + 2` vertices.
pub fn prufer_decode(sequence: &[usize]) -> Vec<(usize, usize)> {
    let n = sequence.len() + 2;
    let mut degree = vec![1usize; n];
    for &v in sequence {
        degree[v] += 1;
    }
    let mut leaves: std::collections::BinaryHeap<std::cmp::Reverse<usize>> = (0..n)
        .filter(|&v| degree[v] == 1)
        .map(std::cmp::Reverse)
        .collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &v in sequence {
        let std::cmp::Reverse(leaf) = leaves.pop().expect("a tree always has a leaf");
        edges.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 {
            leaves.push(std::cmp::Reverse(v));
        }
    }
    let std::cmp::Reverse(u) = leaves.pop().unwrap();
    let std::cmp::Reverse(w) = leaves.pop().unwrap();
    edges.push((u, w));
    edges
}

/// A random Σ-tree with `edges` edges: uniform tree shape, uniform labels and
/// orientations, start at vertex 0, and a random end whose path from the
/// start is re-oriented forwards.
pub fn random_tree(rng: &mut impl Rng, alphabet: &Alphabet, edges: usize) -> SigmaTree {
    let n = edges + 1;
    if n == 1 {
        return SigmaTree::trivial(alphabet.clone());
    }
    let shape = if n == 2 {
        vec![(0, 1)]
    } else {
        let sequence: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
        prufer_decode(&sequence)
    };
    let mut edge_list: Vec<Edge> = shape
        .into_iter()
        .map(|(u, v)| {
            let label = Letter(rng.gen_range(0..alphabet.len() as u32));
            if rng.gen_bool(0.5) {
                Edge::new(label, u, v)
            } else {
                Edge::new(label, v, u)
            }
        })
        .collect();
    let end = rng.gen_range(0..n);

    let mut via = vec![usize::MAX; n];
    let mut adjacency = vec![Vec::new(); n];
    for (i, e) in edge_list.iter().enumerate() {
        adjacency[e.source].push((e.target, i));
        adjacency[e.target].push((e.source, i));
    }
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut queue = VecDeque::from([0]);
    while let Some(v) = queue.pop_front() {
        for &(w, i) in &adjacency[v] {
            if !seen[w] {
                seen[w] = true;
                via[w] = i;
                queue.push_back(w);
            }
        }
    }
    let mut v = end;
    while v != 0 {
        let e = &mut edge_list[via[v]];
        if e.target != v {
            std::mem::swap(&mut e.source, &mut e.target);
        }
        v = e.source;
    }
    SigmaTree::new(alphabet.clone(), n, 0, end, edge_list).expect("generated tree is valid")
}

/// [`random_tree`] from a seed.
pub fn random_tree_seeded(seed: u64, alphabet: &Alphabet, edges: usize) -> SigmaTree {
    random_tree(&mut rng_from_seed(seed), alphabet, edges)
}

/// The same abstract tree under a random vertex numbering and edge order.
pub fn random_relabelling(rng: &mut impl Rng, tree: &SigmaTree) -> SigmaTree {
    let mut permutation: Vec<usize> = (0..tree.vertex_count()).collect();
    permutation.shuffle(rng);
    let mut order: Vec<usize> = (0..tree.edge_count()).collect();
    order.shuffle(rng);
    tree.relabel(&permutation).with_edge_order(&order)
}

/// A random formula admissible in `mode` whose rendering has at most
/// `max_len` symbols.
pub fn random_formula(rng: &mut impl Rng, alphabet: &Alphabet, mode: Mode, max_len: usize) -> Formula {
    loop {
        let mut budget = rng.gen_range(1..=max_len.max(1));
        let f = Formula::new(random_factors(rng, alphabet, mode, &mut budget, 0));
        if f.len() <= max_len && f.check(alphabet, mode).is_ok() {
            return f;
        }
    }
}

fn admitted_ops(mode: Mode) -> Vec<UnaryOp> {
    [UnaryOp::Plus, UnaryOp::Star]
        .into_iter()
        .filter(|&op| mode.admits(op))
        .collect()
}

fn random_factors(
    rng: &mut impl Rng,
    alphabet: &Alphabet,
    mode: Mode,
    budget: &mut usize,
    depth: usize,
) -> Vec<Factor> {
    let ops = admitted_ops(mode);
    let mut factors = Vec::new();
    while *budget > 0 {
        if !factors.is_empty() && rng.gen_bool(0.25) {
            break;
        }
        let min_unary = if mode.monoid { 3 } else { 4 };
        if *budget >= min_unary && depth < 8 && rng.gen_bool(0.4) {
            *budget -= 3;
            let op = *ops.choose(rng).unwrap();
            let mut body = if mode.monoid && rng.gen_bool(0.05) {
                Vec::new()
            } else {
                random_factors(rng, alphabet, mode, budget, depth + 1)
            };
            if body.is_empty() && !mode.monoid {
                body.push(random_letter(rng, alphabet));
            }
            factors.push(Factor::Unary(op, Formula::new(body)));
        } else {
            *budget -= 1;
            factors.push(random_letter(rng, alphabet));
        }
    }
    factors
}

fn random_letter(rng: &mut impl Rng, alphabet: &Alphabet) -> Factor {
    Factor::Letter(*alphabet.letters().choose(rng).unwrap())
}

/// Applies `steps` random rewrites that preserve the element denoted:
/// `u -> (u)+u`, `u -> u(u)*`, `(u)+ -> ((u)+)+`, `(u)* -> ((u)*)*`, and
/// swapping two adjacent idempotent factors.
pub fn equivalent_rewrite(rng: &mut impl Rng, formula: &Formula, mode: Mode, steps: usize) -> Formula {
    let mut f = formula.clone();
    for _ in 0..steps {
        rewrite_once(rng, &mut f, mode);
    }
    f
}

fn rewrite_once(rng: &mut impl Rng, f: &mut Formula, mode: Mode) {
    // Pick a uniformly random factor sequence (the top level or a body).
    let mut sequences = 1usize;
    count_sequences(f, &mut sequences);
    let mut target = rng.gen_range(0..sequences);
    let seq = nth_sequence(f, &mut target).expect("index within sequence count");
    let len = seq.factors.len();
    let ops = admitted_ops(mode);

    match rng.gen_range(0..3) {
        0 if len >= 2 => {
            let i = rng.gen_range(0..len - 1);
            if matches!(seq.factors[i], Factor::Unary(..)) && matches!(seq.factors[i + 1], Factor::Unary(..)) {
                seq.factors.swap(i, i + 1);
            }
        }
        1 => {
            if let Some(i) = (len > 0).then(|| rng.gen_range(0..len)) {
                if let Factor::Unary(op, body) = &seq.factors[i] {
                    let op = *op;
                    let inner = Formula::new(vec![Factor::Unary(op, body.clone())]);
                    seq.factors[i] = Factor::Unary(op, inner);
                }
            }
        }
        _ if len > 0 => {
            let i = rng.gen_range(0..len);
            let j = rng.gen_range(i + 1..=len);
            let u = Formula::new(seq.factors[i..j].to_vec());
            let op = *ops.choose(rng).unwrap();
            let replacement = match op {
                UnaryOp::Plus => u.clone().plus().concat(u),
                UnaryOp::Star => u.clone().concat(u.star()),
            };
            seq.factors.splice(i..j, replacement.factors);
        }
        _ => {}
    }
}

fn count_sequences(f: &Formula, count: &mut usize) {
    for factor in &f.factors {
        if let Factor::Unary(_, body) = factor {
            *count += 1;
            count_sequences(body, count);
        }
    }
}

fn nth_sequence<'a>(f: &'a mut Formula, n: &mut usize) -> Option<&'a mut Formula> {
    if *n == 0 {
        return Some(f);
    }
    *n -= 1;
    for factor in &mut f.factors {
        if let Factor::Unary(_, body) = factor {
            if let Some(found) = nth_sequence(body, n) {
                return Some(found);
            }
        }
    }
    None
}

/// One representative of every isomorphism type of Σ-tree with at most
/// `max_edges` edges, ordered by edge count.
///
/// Every tree with `k + 1` edges arises from one with `k` edges either by
/// attaching a leaf, or (for a path with start and end at its two ends) by
/// extending the trunk past the end vertex.
pub fn all_trees(alphabet: &Alphabet, max_edges: usize) -> Vec<SigmaTree> {
    let mut all = vec![SigmaTree::trivial(alphabet.clone())];
    let mut layer = all.clone();
    for _ in 0..max_edges {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for tree in &layer {
            let n = tree.vertex_count();
            for letter in (0..alphabet.len() as u32).map(Letter) {
                let mut candidates = Vec::with_capacity(2 * n + 1);
                for v in 0..n {
                    candidates.push((Edge::new(letter, v, n), tree.end()));
                    candidates.push((Edge::new(letter, n, v), tree.end()));
                }
                candidates.push((Edge::new(letter, tree.end(), n), n));
                for (edge, end) in candidates {
                    let mut edges = tree.edges().to_vec();
                    edges.push(edge);
                    let grown = SigmaTree::new(alphabet.clone(), n + 1, tree.start(), end, edges)
                        .expect("growth preserves validity");
                    if seen.insert(canonical_string(&grown)) {
                        next.push(grown);
                    }
                }
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    all
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Alphabet {
        Alphabet::new("ab".chars()).unwrap()
    }

    #[test]
    fn prufer_round_trip_shape() {
        let edges = prufer_decode(&[3, 3, 3]);
        assert_eq!(edges, vec![(0, 3), (1, 3), (2, 3), (3, 4)]);
        let edges = prufer_decode(&[]);
        assert_eq!(edges, vec![(0, 1)]);
    }

    #[test]
    fn seeded_trees_are_deterministic_and_valid() {
        assert!(random_tree_seeded(1, &ab(), 0).is_trivial());
        for seed in 0..20 {
            let t = random_tree_seeded(seed, &ab(), 50);
            assert_eq!(t, random_tree_seeded(seed, &ab(), 50));
            assert_eq!(t.edge_count(), 50);
            assert!(SigmaTree::new(ab(), t.vertex_count(), t.start(), t.end(), t.edges().to_vec()).is_ok());
        }
    }

    #[test]
    fn enumeration_counts_are_stable() {
        let sizes: Vec<usize> = (0..=3)
            .map(|k| all_trees(&ab(), 3).iter().filter(|t| t.edge_count() == k).count())
            .collect();
        // One trivial tree; one edge: label (2) x {start=end at tail, at
        // head, start->end}.
        assert_eq!(sizes[0], 1);
        assert_eq!(sizes[1], 6);
        let one_letter = Alphabet::new(['a']).unwrap();
        let counts: Vec<usize> = (0..=2)
            .map(|k| all_trees(&one_letter, 2).iter().filter(|t| t.edge_count() == k).count())
            .collect();
        assert_eq!(counts, vec![1, 3, brute_force_type_count(&one_letter, 2)]);
        assert_eq!(sizes[2], brute_force_type_count(&ab(), 2));
        assert_eq!(sizes[3], brute_force_type_count(&ab(), 3));
    }

    /// Counts isomorphism types with exactly `k` edges by generating every
    /// labelled tree on `k + 1` vertices (all Prüfer sequences, labels,
    /// orientations, start/end pairs) and merging isomorphic ones through a
    /// brute-force bijection search.
    fn brute_force_type_count(alphabet: &Alphabet, k: usize) -> usize {
        let n = k + 1;
        let mut shapes = Vec::new();
        if n == 2 {
            shapes.push(vec![(0, 1)]);
        } else {
            let total = n.pow((n - 2) as u32);
            for code in 0..total {
                let mut c = code;
                let seq: Vec<usize> = (0..n - 2).map(|_| { let d = c % n; c /= n; d }).collect();
                shapes.push(prufer_decode(&seq));
            }
        }
        let mut reps: Vec<SigmaTree> = Vec::new();
        let choices = (2 * alphabet.len()).pow(k as u32);
        for shape in &shapes {
            for mut code in 0..choices {
                let edges: Vec<Edge> = shape
                    .iter()
                    .map(|&(u, v)| {
                        let c = code % (2 * alphabet.len());
                        code /= 2 * alphabet.len();
                        let l = Letter((c / 2) as u32);
                        if c.is_multiple_of(2) { Edge::new(l, u, v) } else { Edge::new(l, v, u) }
                    })
                    .collect();
                for s in 0..n {
                    for e in 0..n {
                        let Ok(t) = SigmaTree::new(alphabet.clone(), n, s, e, edges.clone()) else {
                            continue;
                        };
                        if !reps.iter().any(|r| isomorphic_bruteforce(r, &t)) {
                            reps.push(t);
                        }
                    }
                }
            }
        }
        reps.len()
    }

    fn isomorphic_bruteforce(x: &SigmaTree, y: &SigmaTree) -> bool {
        use crate::homomorphism::find_morphism_bruteforce;
        x.vertex_count() == y.vertex_count()
            && find_morphism_bruteforce(x, y, |map| {
                let mut hit = vec![false; map.len()];
                map.iter().all(|&v| !std::mem::replace(&mut hit[v], true))
            })
            .is_some()
    }

    #[test]
    fn random_formulas_respect_mode_and_length() {
        let mut rng = rng_from_seed(7);
        for mode in [Mode::ADEQUATE_MONOID, Mode::ADEQUATE_SEMIGROUP, Mode::LEFT_MONOID, Mode::RIGHT_MONOID] {
            for _ in 0..200 {
                let f = random_formula(&mut rng, &ab(), mode, 40);
                assert!(f.len() <= 40);
                assert!(f.check(&ab(), mode).is_ok(), "{f} in {mode}");
                let g = equivalent_rewrite(&mut rng, &f, mode, 2);
                assert!(g.check(&ab(), mode).is_ok(), "{g} in {mode}");
            }
        }
    }

    #[test]
    fn relabelling_preserves_shape() {
        let mut rng = rng_from_seed(3);
        let t = random_tree(&mut rng, &ab(), 12);
        let r = random_relabelling(&mut rng, &t);
        assert_eq!(r.vertex_count(), t.vertex_count());
        assert!(SigmaTree::new(ab(), r.vertex_count(), r.start(), r.end(), r.edges().to_vec()).is_ok());
    }
}
