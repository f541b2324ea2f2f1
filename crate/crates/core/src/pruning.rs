//! Minimal retracts (prunings) of Σ-trees and the pruned operations.
//!
//! [`pruned_vertex_set`] first computes, for every vertex `u`, the set `B_u`
//! of vertices onto which the subtree below `u` can be mapped by an
//! endomorphism fixing start and end. It then walks the tree in traversal
//! order: whenever two sibling edges out of a surviving vertex `w` carry the
//! same signed label and the later sibling `u` can be folded onto another
//! surviving sibling, `u` and everything below it are discarded. Quadratic in
//! the number of vertices.

use crate::homomorphism::{find_morphism_bruteforce, CandidateSets};
use crate::tree::SigmaTree;

/// The pruned retract of a tree together with where it sits in the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrunedWitness {
    /// Kept vertices of the input, ascending.
    pub kept: Vec<usize>,
    /// The induced subtree on `kept`, renumbered `0..kept.len()` in
    /// ascending original-id order.
    pub tree: SigmaTree,
    /// `embedding[v]` is the input vertex that `tree`'s vertex `v` came from.
    pub embedding: Vec<usize>,
}

/// Flags the vertices of a pruned retract of `tree`.
pub fn pruned_vertex_set(tree: &SigmaTree) -> Vec<bool> {
    let candidates =
        CandidateSets::compute(tree, tree).expect("a tree shares its own alphabet");
    let traversal = candidates.traversal();
    let rank = &traversal.rank;
    let adjacency = tree.incidence();
    let mut alive = vec![true; tree.vertex_count()];
    let mut siblings = Vec::new();

    for &w in &traversal.order {
        if !alive[w] {
            continue;
        }
        // One group per signed label leaving w.
        for group in adjacency[w].chunk_by(|x, y| x.0 == y.0) {
            siblings.clear();
            siblings.extend(group.iter().map(|&(_, u, _)| u).filter(|&u| alive[u]));
            let mut later: Vec<usize> = siblings
                .iter()
                .copied()
                .filter(|&u| rank[u] > rank[w])
                .collect();
            // Latest first, so the earliest of several interchangeable
            // siblings is the one kept.
            later.sort_unstable_by_key(|&u| std::cmp::Reverse(rank[u]));
            for u in later {
                let fold = candidates.get(u);
                debug_assert!(fold.contains(u));
                if siblings.iter().any(|&v| v != u && fold.contains(v)) {
                    siblings.retain(|&v| v != u);
                    for &d in traversal.descendants(u) {
                        alive[d] = false;
                    }
                }
            }
        }
    }
    alive
}

/// Computes the pruning of `tree`.
pub fn prune(tree: &SigmaTree) -> PrunedWitness {
    let alive = pruned_vertex_set(tree);
    let (pruned, embedding) = tree.induced_subtree(&alive);
    PrunedWitness {
        kept: embedding.clone(),
        tree: pruned,
        embedding,
    }
}

pub fn is_pruned(tree: &SigmaTree) -> bool {
    pruned_vertex_set(tree).iter().all(|&keep| keep)
}

pub fn pruned_product(x: &SigmaTree, y: &SigmaTree) -> SigmaTree {
    prune(&x.clone().unpruned_product(y)).tree
}

pub fn pruned_plus(x: &SigmaTree) -> SigmaTree {
    prune(&x.clone().unpruned_plus()).tree
}

pub fn pruned_star(x: &SigmaTree) -> SigmaTree {
    prune(&x.clone().unpruned_star()).tree
}

/// Exhaustive minimal retract: repeatedly replaces the tree by the image of
/// a smallest idempotent endomorphism until none is proper. Exponential;
/// test oracle only.
pub fn minimal_retract_bruteforce(tree: &SigmaTree) -> SigmaTree {
    let mut current = tree.clone();
    loop {
        let n = current.vertex_count();
        let mut best: Option<Vec<usize>> = None;
        let mut best_size = n;
        find_morphism_bruteforce(&current, &current, |map| {
            if map.iter().enumerate().all(|(v, &x)| x == v) {
                return false;
            }
            let idempotent = map.iter().all(|&x| map[x] == x);
            if idempotent {
                let size = (0..n).filter(|&v| map[v] == v).count();
                if size < best_size {
                    best_size = size;
                    best = Some(map.to_vec());
                }
            }
            false
        });
        let Some(map) = best else {
            return current;
        };
        let mut keep = vec![false; n];
        for &v in &map {
            keep[v] = true;
        }
        current = current.induced_subtree(&keep).0;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{parse, Alphabet};
    use crate::homomorphism::exists_morphism;
    use crate::mode::Mode;

    fn ab() -> Alphabet {
        Alphabet::new("ab".chars()).unwrap()
    }

    fn eval(s: &str) -> SigmaTree {
        let f = parse(s, &ab(), Mode::ADEQUATE_MONOID).unwrap();
        SigmaTree::evaluate(&f, &ab()).unwrap()
    }

    fn kept(t: &SigmaTree) -> Vec<usize> {
        prune(t).kept
    }

    #[test]
    fn vertex_set_examples() {
        assert_eq!(kept(&eval("(a)+a")), vec![0, 2]);
        assert_eq!(kept(&SigmaTree::base(ab(), 'a').unwrap()), vec![0, 1]);
        assert_eq!(kept(&eval("(a)+(a)+")), vec![0, 1]);
    }

    #[test]
    fn prune_examples() {
        let w = prune(&eval("(a)+a"));
        assert_eq!(w.tree, SigmaTree::base(ab(), 'a').unwrap());
        assert_eq!(w.embedding, vec![0, 2]);
        let trivial = SigmaTree::trivial(ab());
        assert_eq!(prune(&trivial).tree, trivial);
        let already = eval("(a(b)*)+b");
        let w = prune(&already);
        assert_eq!(w.kept, (0..already.vertex_count()).collect::<Vec<_>>());
        assert_eq!(w.tree, already);
    }

    #[test]
    fn bruteforce_examples() {
        assert_eq!(minimal_retract_bruteforce(&eval("(a)+a")), SigmaTree::base(ab(), 'a').unwrap());
        let b = SigmaTree::base(ab(), 'a').unwrap();
        assert_eq!(minimal_retract_bruteforce(&b), b);
        let r = minimal_retract_bruteforce(&eval("(ab)+(ab)+"));
        assert_eq!(r.vertex_count(), 3);
        assert_eq!(r.start(), r.end());
    }

    #[test]
    fn is_pruned_examples() {
        assert!(is_pruned(&SigmaTree::base(ab(), 'a').unwrap()));
        assert!(!is_pruned(&eval("(a)+a")));
        assert!(is_pruned(&SigmaTree::trivial(ab())));
    }

    #[test]
    fn pruned_operations() {
        let a = SigmaTree::base(ab(), 'a').unwrap();
        let plus_a = pruned_plus(&a);
        assert_eq!(pruned_product(&plus_a, &a), a);
        assert_eq!(pruned_product(&a, &pruned_star(&a)), a);
        let x = eval("a((b)+a)*");
        assert_eq!(pruned_plus(&pruned_plus(&x)), pruned_plus(&x));
        let trivial = SigmaTree::trivial(ab());
        assert_eq!(pruned_product(&trivial, &x), prune(&x).tree);
    }

    #[test]
    fn trunk_is_kept_and_result_is_a_retract() {
        let t = eval("(a(b)+)+a((b)*a(b)*)*(a)+b((a)+)*");
        let w = prune(&t);
        for v in t.trunk().vertices {
            assert!(w.kept.contains(&v));
        }
        assert!(exists_morphism(&t, &w.tree).unwrap());
        assert!(exists_morphism(&w.tree, &t).unwrap());
        assert!(is_pruned(&w.tree));
    }

    #[test]
    fn sibling_folds_onto_parent_edge() {
        // Both reversed a-leaves at the end vertex fold onto the trunk's
        // start vertex, which is reached by the same signed label.
        let t = eval("a(a)*(a)*");
        assert_eq!(prune(&t).tree, SigmaTree::base(ab(), 'a').unwrap());
        assert_eq!(minimal_retract_bruteforce(&t), SigmaTree::base(ab(), 'a').unwrap());
    }
}
