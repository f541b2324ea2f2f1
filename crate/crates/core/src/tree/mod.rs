//! Birooted edge-labelled trees and their unpruned operations.
//!
//! A [`SigmaTree`] is stored as a vertex count, a start vertex, an end vertex
//! and an edge list. Vertex ids are a representation detail: two trees that
//! differ only by a renumbering denote the same element.

mod io;

use std::collections::VecDeque;

use crate::error::TreeError;
use crate::formula::{Alphabet, Factor, Formula, Letter, UnaryOp};

pub use io::{TreeJson, EdgeJson};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Direction {
    Forward,
    Reverse,
}

/// A letter together with the direction in which its edge is read.
///
/// "An edge from `u` to `v` labelled `(g, Reverse)`" means a `g`-labelled edge
/// from `v` to `u`. The derived order (letter first, forward before reverse)
/// is the neighbour order used by [`SigmaTree::traversal`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedLabel {
    pub letter: Letter,
    pub direction: Direction,
}

impl SignedLabel {
    pub fn forward(letter: Letter) -> Self {
        SignedLabel {
            letter,
            direction: Direction::Forward,
        }
    }

    pub fn reverse(letter: Letter) -> Self {
        SignedLabel {
            letter,
            direction: Direction::Reverse,
        }
    }

    pub fn inverse(self) -> Self {
        SignedLabel {
            letter: self.letter,
            direction: match self.direction {
                Direction::Forward => Direction::Reverse,
                Direction::Reverse => Direction::Forward,
            },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub label: Letter,
    pub source: usize,
    pub target: usize,
}

impl Edge {
    pub fn new(label: Letter, source: usize, target: usize) -> Self {
        Edge {
            label,
            source,
            target,
        }
    }

    /// If `self` touches `from`, the signed label read from `from` and the
    /// vertex at the other end.
    pub fn read_from(&self, from: usize) -> Option<(SignedLabel, usize)> {
        if self.source == from {
            Some((SignedLabel::forward(self.label), self.target))
        } else if self.target == from {
            Some((SignedLabel::reverse(self.label), self.source))
        } else {
            None
        }
    }
}

/// A finite directed tree with labelled edges and distinguished start and end
/// vertices joined by a directed path.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SigmaTree {
    alphabet: Alphabet,
    vertex_count: usize,
    start: usize,
    end: usize,
    edges: Vec<Edge>,
}

/// Depth-first numbering of a tree from its start vertex, ignoring edge
/// direction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraversalOrder {
    /// Vertices in visiting order; `order[0]` is the start vertex.
    pub order: Vec<usize>,
    /// Inverse of `order`.
    pub rank: Vec<usize>,
    /// Parent of each vertex and the signed label read from the parent.
    pub parent: Vec<Option<(usize, SignedLabel)>>,
    /// Number of descendants of each vertex, itself included.
    pub subtree_size: Vec<usize>,
}

impl TraversalOrder {
    /// Descendants of `u` (including `u`), in traversal order.
    pub fn descendants(&self, u: usize) -> &[usize] {
        let r = self.rank[u];
        &self.order[r..r + self.subtree_size[u]]
    }

    /// Children of each vertex with the signed label read from the parent,
    /// in traversal order.
    pub fn children(&self) -> Vec<Vec<(SignedLabel, usize)>> {
        let mut children = vec![Vec::new(); self.order.len()];
        for &v in &self.order[1..] {
            let (p, label) = self.parent[v].expect("non-root vertex has a parent");
            children[p].push((label, v));
        }
        children
    }
}

/// Trunk vertices `t0..tq` and the labels `b1..bq` between them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trunk {
    pub vertices: Vec<usize>,
    pub labels: Vec<Letter>,
}

impl SigmaTree {
    /// Validates a tree given in the raw representation.
    pub fn new(
        alphabet: Alphabet,
        vertex_count: usize,
        start: usize,
        end: usize,
        edges: Vec<Edge>,
    ) -> Result<Self, TreeError> {
        if vertex_count == 0 {
            return Err(TreeError::NotATree("a tree needs at least one vertex".into()));
        }
        for id in [start, end]
            .into_iter()
            .chain(edges.iter().flat_map(|e| [e.source, e.target]))
        {
            if id >= vertex_count {
                return Err(TreeError::BadVertexId { id, n: vertex_count });
            }
        }
        if let Some(e) = edges.iter().find(|e| e.label.index() >= alphabet.len()) {
            return Err(TreeError::BadLabel {
                index: e.label.0,
                len: alphabet.len(),
            });
        }
        if edges.len() != vertex_count - 1 {
            return Err(TreeError::NotATree(format!(
                "{} edges on {} vertices",
                edges.len(),
                vertex_count
            )));
        }
        let tree = SigmaTree {
            alphabet,
            vertex_count,
            start,
            end,
            edges,
        };

        // Undirected BFS from start: checks connectivity and records the
        // edge used to reach each vertex, which gives the start-end path.
        let adjacency = tree.incidence();
        let mut via: Vec<Option<usize>> = vec![None; vertex_count];
        let mut seen = vec![false; vertex_count];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        let mut reached = 1;
        while let Some(v) = queue.pop_front() {
            for &(_, w, e) in &adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    via[w] = Some(e);
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        if reached != vertex_count {
            return Err(TreeError::NotATree("graph is disconnected or has a cycle".into()));
        }
        let mut v = end;
        while v != start {
            let e = tree.edges[via[v].expect("reached vertex")];
            if e.target != v {
                return Err(TreeError::NoTrunk { start, end });
            }
            v = e.source;
        }
        Ok(tree)
    }

    pub fn trivial(alphabet: Alphabet) -> Self {
        SigmaTree {
            alphabet,
            vertex_count: 1,
            start: 0,
            end: 0,
            edges: Vec::new(),
        }
    }

    /// The tree with one `g`-labelled edge from start to end.
    pub fn base(alphabet: Alphabet, g: char) -> Result<Self, TreeError> {
        let letter = alphabet.index_of(g).ok_or(TreeError::UnknownSymbol(g))?;
        Ok(SigmaTree {
            alphabet,
            vertex_count: 2,
            start: 0,
            end: 1,
            edges: vec![Edge::new(letter, 0, 1)],
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn end(&self) -> usize {
        self.end
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn is_trivial(&self) -> bool {
        self.vertex_count == 1
    }

    pub fn label_char(&self, letter: Letter) -> char {
        self.alphabet.char_of(letter)
    }

    /// Glues the start of `other` onto the end of `self`.
    ///
    /// The vertices of `self` keep their ids. The start of `other` becomes
    /// `self.end`; its remaining vertices follow in their original relative
    /// order, starting at `self.vertex_count()`.
    pub fn unpruned_product(mut self, other: &SigmaTree) -> SigmaTree {
        debug_assert_eq!(self.alphabet, other.alphabet);
        let offset = self.vertex_count;
        let glue = self.end;
        let map = |y: usize| match y.cmp(&other.start) {
            std::cmp::Ordering::Equal => glue,
            std::cmp::Ordering::Less => offset + y,
            std::cmp::Ordering::Greater => offset + y - 1,
        };
        self.edges.extend(
            other
                .edges
                .iter()
                .map(|e| Edge::new(e.label, map(e.source), map(e.target))),
        );
        self.end = map(other.end);
        self.vertex_count += other.vertex_count - 1;
        self
    }

    /// Moves the end vertex onto the start vertex.
    pub fn unpruned_plus(mut self) -> SigmaTree {
        self.end = self.start;
        self
    }

    /// Moves the start vertex onto the end vertex.
    pub fn unpruned_star(mut self) -> SigmaTree {
        self.start = self.end;
        self
    }

    /// Evaluates a formula to its (unpruned) tree.
    pub fn evaluate(formula: &Formula, alphabet: &Alphabet) -> Result<SigmaTree, TreeError> {
        evaluate_onto(SigmaTree::trivial(alphabet.clone()), formula)
    }

    /// For each vertex, its incident edges as `(signed label read from the
    /// vertex, neighbour, edge index)`, sorted by label, then neighbour id.
    pub fn incidence(&self) -> Vec<Vec<(SignedLabel, usize, usize)>> {
        let mut adjacency = vec![Vec::new(); self.vertex_count];
        for (i, e) in self.edges.iter().enumerate() {
            adjacency[e.source].push((SignedLabel::forward(e.label), e.target, i));
            adjacency[e.target].push((SignedLabel::reverse(e.label), e.source, i));
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        adjacency
    }

    /// Deterministic depth-first numbering from the start vertex. Neighbours
    /// are visited by (letter, direction, vertex id).
    pub fn traversal(&self) -> TraversalOrder {
        let n = self.vertex_count;
        let adjacency = self.incidence();
        let mut order = Vec::with_capacity(n);
        let mut rank = vec![usize::MAX; n];
        let mut parent = vec![None; n];
        let mut subtree_size = vec![1; n];

        rank[self.start] = 0;
        order.push(self.start);
        let mut stack = vec![(self.start, 0usize)];
        while let Some((v, next)) = stack.last_mut() {
            let v = *v;
            match adjacency[v].get(*next) {
                Some(&(label, w, _)) => {
                    *next += 1;
                    if rank[w] == usize::MAX {
                        rank[w] = order.len();
                        order.push(w);
                        parent[w] = Some((v, label));
                        stack.push((w, 0));
                    }
                }
                None => {
                    stack.pop();
                    if let Some((p, _)) = parent[v] {
                        subtree_size[p] += subtree_size[v];
                    }
                }
            }
        }
        TraversalOrder {
            order,
            rank,
            parent,
            subtree_size,
        }
    }

    /// The directed path from start to end.
    pub fn trunk(&self) -> Trunk {
        let traversal = self.traversal();
        let mut vertices = vec![self.end];
        let mut labels = Vec::new();
        let mut v = self.end;
        while let Some((p, label)) = traversal.parent[v] {
            debug_assert_eq!(label.direction, Direction::Forward);
            vertices.push(p);
            labels.push(label.letter);
            v = p;
        }
        vertices.reverse();
        labels.reverse();
        Trunk { vertices, labels }
    }

    /// Vertices whose undirected path to the start vertex passes through `u`,
    /// in ascending id order.
    pub fn descendants(&self, u: usize) -> Vec<usize> {
        let mut out = self.traversal().descendants(u).to_vec();
        out.sort_unstable();
        out
    }

    /// Renumbers vertices: vertex `v` becomes `permutation[v]`. Edge order is
    /// kept.
    pub fn relabel(&self, permutation: &[usize]) -> SigmaTree {
        assert_eq!(permutation.len(), self.vertex_count);
        SigmaTree {
            alphabet: self.alphabet.clone(),
            vertex_count: self.vertex_count,
            start: permutation[self.start],
            end: permutation[self.end],
            edges: self
                .edges
                .iter()
                .map(|e| Edge::new(e.label, permutation[e.source], permutation[e.target]))
                .collect(),
        }
    }

    /// Same tree with the edge list replaced by a permutation of itself.
    pub fn with_edge_order(&self, order: &[usize]) -> SigmaTree {
        assert_eq!(order.len(), self.edges.len());
        let mut tree = self.clone();
        tree.edges = order.iter().map(|&i| self.edges[i]).collect();
        tree
    }

    /// The subtree induced by `keep` (which must contain start and end and be
    /// connected), with vertices renumbered in increasing original-id order.
    /// Also returns the map from new ids back to original ids.
    pub(crate) fn induced_subtree(&self, keep: &[bool]) -> (SigmaTree, Vec<usize>) {
        let embedding: Vec<usize> = (0..self.vertex_count).filter(|&v| keep[v]).collect();
        let mut compact = vec![usize::MAX; self.vertex_count];
        for (new, &old) in embedding.iter().enumerate() {
            compact[old] = new;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| keep[e.source] && keep[e.target])
            .map(|e| Edge::new(e.label, compact[e.source], compact[e.target]))
            .collect();
        let tree = SigmaTree {
            alphabet: self.alphabet.clone(),
            vertex_count: embedding.len(),
            start: compact[self.start],
            end: compact[self.end],
            edges,
        };
        debug_assert!(SigmaTree::new(
            tree.alphabet.clone(),
            tree.vertex_count,
            tree.start,
            tree.end,
            tree.edges.clone()
        )
        .is_ok());
        (tree, embedding)
    }
}

fn evaluate_onto(mut acc: SigmaTree, formula: &Formula) -> Result<SigmaTree, TreeError> {
    for factor in &formula.factors {
        let operand = match factor {
            Factor::Letter(c) => SigmaTree::base(acc.alphabet.clone(), *c)?,
            Factor::Unary(op, body) => {
                let inner = SigmaTree::evaluate(body, &acc.alphabet)?;
                match op {
                    UnaryOp::Plus => inner.unpruned_plus(),
                    UnaryOp::Star => inner.unpruned_star(),
                }
            }
        };
        acc = acc.unpruned_product(&operand);
    }
    Ok(acc)
}
