//! Morphisms between Σ-trees.
//!
//! Existence is decided by arc-consistency propagation over the depth-first
//! numbering of the source tree. Each source vertex `i` carries a candidate
//! set `B_i` of target vertices; sets are refined bottom-up so that every
//! candidate for `i` has, for each child `j`, a correctly labelled and
//! oriented edge into some candidate for `j`. Because the source is a tree
//! this single sweep is exact: a morphism exists iff the candidate set of the
//! start vertex is non-empty. Runs in `O(nm)`.

use std::collections::HashSet;

use crate::bitset::VertexSet;
use crate::error::TreeError;
use crate::tree::{Direction, SigmaTree, SignedLabel, TraversalOrder};

/// Per-vertex candidate sets for a morphism `source -> target`.
#[derive(Debug, Clone)]
pub struct CandidateSets {
    traversal: TraversalOrder,
    sets: Vec<VertexSet>,
}

/// One refinement `B_parent := B_parent ∩ B_child*`, reported to tracing
/// observers.
#[derive(Debug)]
pub struct Refinement<'a> {
    pub vertex: usize,
    pub child: usize,
    pub before: &'a VertexSet,
    pub after: &'a VertexSet,
}

impl CandidateSets {
    pub fn compute(source: &SigmaTree, target: &SigmaTree) -> Result<Self, TreeError> {
        Self::compute_traced(source, target, |_| {})
    }

    /// Like [`CandidateSets::compute`], calling `observer` after each
    /// refinement step.
    pub fn compute_traced(
        source: &SigmaTree,
        target: &SigmaTree,
        mut observer: impl FnMut(Refinement<'_>),
    ) -> Result<Self, TreeError> {
        if source.alphabet() != target.alphabet() {
            return Err(TreeError::AlphabetMismatch);
        }
        let n = source.vertex_count();
        let m = target.vertex_count();
        let traversal = source.traversal();
        let children = traversal.children();

        let mut sets = vec![VertexSet::full(m); n];
        sets[source.start()].intersect_with(&VertexSet::singleton(m, target.start()));
        sets[source.end()].intersect_with(&VertexSet::singleton(m, target.end()));

        let mut star = VertexSet::empty(m);
        let mut before = VertexSet::empty(m);
        for &i in traversal.order.iter().rev() {
            for &(label, j) in &children[i] {
                supports(target, label, &sets[j], &mut star);
                before.clone_from(&sets[i]);
                sets[i].intersect_with(&star);
                observer(Refinement {
                    vertex: i,
                    child: j,
                    before: &before,
                    after: &sets[i],
                });
            }
        }
        Ok(CandidateSets { traversal, sets })
    }

    /// Candidate set of a source vertex (by its original id).
    pub fn get(&self, v: usize) -> &VertexSet {
        &self.sets[v]
    }

    pub fn traversal(&self) -> &TraversalOrder {
        &self.traversal
    }

    /// Whether a morphism exists.
    pub fn is_satisfiable(&self) -> bool {
        !self.sets[self.traversal.order[0]].is_empty()
    }
}

/// `out := { x | target has an edge labelled `label` from x to some y in `set` }`,
/// by one pass over the target's edge list.
fn supports(target: &SigmaTree, label: SignedLabel, set: &VertexSet, out: &mut VertexSet) {
    out.clear();
    for e in target.edges() {
        if e.label != label.letter {
            continue;
        }
        let (x, y) = match label.direction {
            Direction::Forward => (e.source, e.target),
            Direction::Reverse => (e.target, e.source),
        };
        if set.contains(y) {
            out.insert(x);
        }
    }
}

/// A vertex map between Σ-trees. The edge map is determined by it, since two
/// vertices of a tree are joined by at most one edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexMorphism {
    pub map: Vec<usize>,
}

impl VertexMorphism {
    pub fn apply(&self, v: usize) -> usize {
        self.map[v]
    }

    /// Checks that `self` is a morphism `source -> target`.
    pub fn is_morphism(&self, source: &SigmaTree, target: &SigmaTree) -> bool {
        if self.map.len() != source.vertex_count()
            || self.map.iter().any(|&v| v >= target.vertex_count())
        {
            return false;
        }
        if self.map[source.start()] != target.start() || self.map[source.end()] != target.end() {
            return false;
        }
        let image: HashSet<_> = target
            .edges()
            .iter()
            .map(|e| (e.label, e.source, e.target))
            .collect();
        source
            .edges()
            .iter()
            .all(|e| image.contains(&(e.label, self.map[e.source], self.map[e.target])))
    }

    pub fn compose(&self, then: &VertexMorphism) -> VertexMorphism {
        VertexMorphism {
            map: self.map.iter().map(|&v| then.map[v]).collect(),
        }
    }
}

/// Decides whether there is a morphism `source -> target`.
pub fn exists_morphism(source: &SigmaTree, target: &SigmaTree) -> Result<bool, TreeError> {
    Ok(CandidateSets::compute(source, target)?.is_satisfiable())
}

/// Builds a morphism `source -> target` if one exists.
///
/// Vertices are assigned in traversal order; each takes the least candidate
/// adjacent to its parent's image through an edge with the right label and
/// orientation.
pub fn extract_morphism(
    source: &SigmaTree,
    target: &SigmaTree,
) -> Result<Option<VertexMorphism>, TreeError> {
    let candidates = CandidateSets::compute(source, target)?;
    Ok(candidates.extract(target))
}

impl CandidateSets {
    pub(crate) fn extract(&self, target: &SigmaTree) -> Option<VertexMorphism> {
        if !self.is_satisfiable() {
            return None;
        }
        let adjacency = target.incidence();
        let order = &self.traversal.order;
        let mut map = vec![usize::MAX; order.len()];
        map[order[0]] = self.sets[order[0]].first()?;
        for &v in &order[1..] {
            let (parent, label) = self.traversal.parent[v].expect("non-root vertex");
            let image = adjacency[map[parent]]
                .iter()
                .filter(|&&(l, w, _)| l == label && self.sets[v].contains(w))
                .map(|&(_, w, _)| w)
                .min()
                .expect("arc consistency guarantees a supported candidate");
            map[v] = image;
        }
        Some(VertexMorphism { map })
    }
}

/// Backtracking search over all vertex maps. Exponential; test oracle only.
pub fn exists_morphism_bruteforce(source: &SigmaTree, target: &SigmaTree) -> bool {
    find_morphism_bruteforce(source, target, |_| true).is_some()
}

/// Backtracking search for a morphism accepted by `accept`. Vertices are
/// assigned in id order and each edge is checked once both ends are fixed.
pub fn find_morphism_bruteforce(
    source: &SigmaTree,
    target: &SigmaTree,
    mut accept: impl FnMut(&[usize]) -> bool,
) -> Option<VertexMorphism> {
    if source.alphabet() != target.alphabet() {
        return None;
    }
    let image: HashSet<_> = target
        .edges()
        .iter()
        .map(|e| (e.label, e.source, e.target))
        .collect();
    // Edges grouped by their larger endpoint.
    let mut closing = vec![Vec::new(); source.vertex_count()];
    for e in source.edges() {
        closing[e.source.max(e.target)].push(*e);
    }
    let mut map = vec![usize::MAX; source.vertex_count()];
    if search(0, source, target, &image, &closing, &mut map, &mut accept) {
        Some(VertexMorphism { map })
    } else {
        None
    }
}

fn search(
    v: usize,
    source: &SigmaTree,
    target: &SigmaTree,
    image: &HashSet<(crate::formula::Letter, usize, usize)>,
    closing: &[Vec<crate::tree::Edge>],
    map: &mut [usize],
    accept: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    if v == map.len() {
        return accept(map);
    }
    for x in 0..target.vertex_count() {
        if v == source.start() && x != target.start() || v == source.end() && x != target.end() {
            continue;
        }
        map[v] = x;
        if closing[v]
            .iter()
            .all(|e| image.contains(&(e.label, map[e.source], map[e.target])))
            && search(v + 1, source, target, image, closing, map, accept)
        {
            return true;
        }
    }
    map[v] = usize::MAX;
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{parse, Alphabet};
    use crate::mode::Mode;

    fn ab() -> Alphabet {
        Alphabet::new("ab".chars()).unwrap()
    }

    fn eval(s: &str) -> SigmaTree {
        let f = parse(s, &ab(), Mode::ADEQUATE_MONOID).unwrap();
        SigmaTree::evaluate(&f, &ab()).unwrap()
    }

    fn base(c: char) -> SigmaTree {
        SigmaTree::base(ab(), c).unwrap()
    }

    #[test]
    fn exists_examples() {
        let cases = [
            (eval("(a)+a"), base('a'), true),
            (base('a'), eval("(a)+"), false),
            (eval("(a)+(b)+"), eval("(b)+(a)+"), true),
            (eval("a(b)*((a)*b)+"), eval("a(b)*((a)*b)+"), true),
            (base('a'), base('b'), false),
        ];
        for (s, t, expected) in cases {
            assert_eq!(exists_morphism(&s, &t).unwrap(), expected, "{s:?} -> {t:?}");
            assert_eq!(exists_morphism_bruteforce(&s, &t), expected, "{s:?} -> {t:?}");
        }
    }

    #[test]
    fn trivial_source() {
        let trivial = SigmaTree::trivial(ab());
        assert!(exists_morphism(&trivial, &eval("(a)+(b)*")).unwrap());
        assert!(exists_morphism_bruteforce(&trivial, &eval("(a)+(b)*")));
        assert!(!exists_morphism(&trivial, &base('a')).unwrap());
        assert!(!exists_morphism_bruteforce(&trivial, &base('a')));
    }

    #[test]
    fn extract_examples() {
        let m = extract_morphism(&eval("(a)+a"), &base('a')).unwrap().unwrap();
        assert_eq!(m.map, vec![0, 1, 1]);
        assert!(m.is_morphism(&eval("(a)+a"), &base('a')));
        let m = extract_morphism(&base('a'), &base('a')).unwrap().unwrap();
        assert_eq!(m.map, vec![0, 1]);
        assert_eq!(extract_morphism(&base('a'), &base('b')).unwrap(), None);
    }

    #[test]
    fn alphabet_mismatch() {
        let other = SigmaTree::base(Alphabet::new("ba".chars()).unwrap(), 'a').unwrap();
        assert_eq!(exists_morphism(&base('a'), &other), Err(TreeError::AlphabetMismatch));
        assert_eq!(extract_morphism(&base('a'), &other), Err(TreeError::AlphabetMismatch));
    }

    #[test]
    fn candidate_sets_shrink_monotonically() {
        let s = eval("((a)+b(a)*)*a((b)+a)+");
        let t = eval("((a)+b)*a((b)+a(b)*)+");
        let mut initial: Vec<Option<VertexSet>> = vec![None; s.vertex_count()];
        let sets = CandidateSets::compute_traced(&s, &t, |r| {
            assert!(r.after.is_subset(r.before));
            initial[r.vertex].get_or_insert_with(|| r.before.clone());
        })
        .unwrap();
        for (v, init) in initial.iter().enumerate() {
            if let Some(init) = init {
                assert!(sets.get(v).is_subset(init));
            }
        }
        assert!(sets.get(s.start()).len() <= 1);
        assert!(sets.get(s.end()).is_subset(&VertexSet::singleton(t.vertex_count(), t.end())));
    }

    #[test]
    fn composition_of_morphisms() {
        let x = eval("(a)+(a)+a");
        let y = eval("(a)+a");
        let z = base('a');
        let f = extract_morphism(&x, &y).unwrap().unwrap();
        let g = extract_morphism(&y, &z).unwrap().unwrap();
        assert!(f.compose(&g).is_morphism(&x, &z));
    }
}
