//! Representation-independent formulas for Σ-trees.
//!
//! Every vertex off the trunk hangs below exactly one neighbour closer to the
//! trunk. For a vertex `v` with branches `v_1..v_p` further out, joined by
//! edges labelled `a_1..a_p`, each branch contributes
//!
//! * `(a_i ρ(v_i))+` when the edge points away from `v`,
//! * `(ρ(v_i) a_i)*` when it points towards `v`,
//!
//! and `ρ(v)` is the concatenation of those words in lexicographic order. The
//! formula of the whole tree reads the trunk `t_0 -b_1-> t_1 ... t_q` as
//! `ρ(t_0) b_1 ρ(t_1) ... b_q ρ(t_q)`.
//!
//! Symbols are ordered as the alphabet's letters, then `(`, `)`, `+`, `*`.
//! Applied to a pruned tree this yields the normal form of its element.

use crate::formula::{parse, Formula};
use crate::homomorphism::exists_morphism;
use crate::mode::Mode;
use crate::tree::SigmaTree;

/// Symbol ranks for a given alphabet size.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OmegaOrder {
    letters: u32,
}

impl OmegaOrder {
    pub fn new(alphabet_len: usize) -> Self {
        OmegaOrder {
            letters: alphabet_len as u32,
        }
    }

    pub fn open(&self) -> u32 {
        self.letters
    }

    pub fn close(&self) -> u32 {
        self.letters + 1
    }

    pub fn plus(&self) -> u32 {
        self.letters + 2
    }

    pub fn star(&self) -> u32 {
        self.letters + 3
    }

    /// Number of distinct symbols.
    pub fn size(&self) -> usize {
        self.letters as usize + 4
    }

    /// Rank of a rendered formula character.
    pub fn rank(&self, c: char, alphabet: &crate::formula::Alphabet) -> Option<u32> {
        match c {
            '(' => Some(self.open()),
            ')' => Some(self.close()),
            '+' => Some(self.plus()),
            '*' => Some(self.star()),
            c => alphabet.index_of(c).map(|l| l.0),
        }
    }
}

/// The canonical formula of `tree`.
pub fn canonical_formula(tree: &SigmaTree) -> Formula {
    let text = canonical_string(tree);
    parse(&text, tree.alphabet(), Mode::ADEQUATE_MONOID)
        .expect("canonical words are well-formed formulas")
}

/// The canonical formula of `tree`, rendered.
pub fn canonical_string(tree: &SigmaTree) -> String {
    let omega = OmegaOrder::new(tree.alphabet().len());
    let alphabet = tree.alphabet();
    canonical_word(tree)
        .into_iter()
        .map(|s| match s {
            s if s == omega.open() => '(',
            s if s == omega.close() => ')',
            s if s == omega.plus() => '+',
            s if s == omega.star() => '*',
            s => alphabet.letters()[s as usize],
        })
        .collect()
}

/// The canonical formula as a sequence of symbol ranks.
pub fn canonical_word(tree: &SigmaTree) -> Vec<u32> {
    let omega = OmegaOrder::new(tree.alphabet().len());
    let n = tree.vertex_count();
    let trunk = tree.trunk();
    let adjacency = tree.incidence();

    let mut on_trunk = vec![false; n];
    for &t in &trunk.vertices {
        on_trunk[t] = true;
    }

    // Discover off-trunk vertices outward from the trunk; `toward[v]` is the
    // neighbour of v one step closer to the trunk.
    let mut toward = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut stack: Vec<usize> = trunk.vertices.clone();
    while let Some(v) = stack.pop() {
        order.push(v);
        for &(_, w, _) in &adjacency[v] {
            if !on_trunk[w] && w != toward[v] {
                toward[w] = v;
                stack.push(w);
            }
        }
    }
    debug_assert_eq!(order.len(), n);

    let mut rho: Vec<Vec<u32>> = vec![Vec::new(); n];
    let mut branches: Vec<Vec<u32>> = Vec::new();
    for &v in order.iter().rev() {
        branches.clear();
        for &(_, w, e) in &adjacency[v] {
            if on_trunk[w] || w == toward[v] {
                continue;
            }
            let edge = tree.edges()[e];
            let inner = std::mem::take(&mut rho[w]);
            let mut word = Vec::with_capacity(inner.len() + 4);
            word.push(omega.open());
            if edge.source == v {
                word.push(edge.label.0);
                word.extend_from_slice(&inner);
                word.push(omega.close());
                word.push(omega.plus());
            } else {
                word.extend_from_slice(&inner);
                word.push(edge.label.0);
                word.push(omega.close());
                word.push(omega.star());
            }
            branches.push(word);
        }
        let sorted = radix_sort(&branches, omega.size());
        rho[v] = sorted.iter().flat_map(|&i| branches[i].iter().copied()).collect();
    }

    let mut word = std::mem::take(&mut rho[trunk.vertices[0]]);
    for (label, &t) in trunk.labels.iter().zip(&trunk.vertices[1..]) {
        word.push(label.0);
        word.extend_from_slice(&rho[t]);
    }
    word
}

/// Stable lexicographic sort of `words` (symbols in `0..symbols`), returning
/// the sorted order as indices. Most-significant-symbol-first bucket sort;
/// a word that ends sorts before all of its extensions.
pub fn radix_sort(words: &[Vec<u32>], symbols: usize) -> Vec<usize> {
    let mut index: Vec<usize> = (0..words.len()).collect();
    let mut scratch = vec![0usize; words.len()];
    let mut counts = vec![0usize; symbols + 1];
    // Pending ranges of `index` that agree on their first `depth` symbols.
    let mut pending = vec![(0usize, words.len(), 0usize)];
    let key = |w: &Vec<u32>, depth: usize| w.get(depth).map_or(0, |&s| s as usize + 1);

    while let Some((lo, hi, depth)) = pending.pop() {
        if hi - lo <= 1 {
            continue;
        }
        counts.fill(0);
        for &i in &index[lo..hi] {
            counts[key(&words[i], depth)] += 1;
        }
        let mut offset = lo;
        let mut starts = Vec::with_capacity(symbols + 1);
        for count in counts.iter_mut() {
            starts.push(offset);
            offset += *count;
            *count = 0;
        }
        for &i in &index[lo..hi] {
            let k = key(&words[i], depth);
            scratch[starts[k] + counts[k]] = i;
            counts[k] += 1;
        }
        index[lo..hi].copy_from_slice(&scratch[lo..hi]);
        // Bucket 0 holds words that have ended: they are all equal.
        for k in 1..=symbols {
            if counts[k] > 1 {
                pending.push((starts[k], starts[k] + counts[k], depth + 1));
            }
        }
    }
    index
}

/// Whether the canonical formula of `tree` evaluates back to a tree
/// isomorphic to it. Isomorphism is tested by mutual morphisms and equal
/// vertex counts, independently of the canonical form itself.
pub fn evaluate_roundtrip_check(tree: &SigmaTree) -> bool {
    let formula = canonical_formula(tree);
    let Ok(back) = SigmaTree::evaluate(&formula, tree.alphabet()) else {
        return false;
    };
    back.vertex_count() == tree.vertex_count()
        && exists_morphism(tree, &back).unwrap_or(false)
        && exists_morphism(&back, tree).unwrap_or(false)
}
