//! Free adequate semigroups and monoids, computed with birooted labelled
//! trees.
//!
//! Elements of the free (left, right, two-sided) adequate monoid on an
//! alphabet are represented by [`SigmaTree`]s: directed trees with labelled
//! edges and distinguished start and end vertices. A formula evaluates to a
//! tree; two formulas are equal iff their trees admit morphisms in both
//! directions; and the canonical formula of the pruned tree is a normal form.
//!
//! ```
//! use adequate::{Alphabet, Mode, Solver};
//!
//! let solver = Solver::new(Alphabet::new("xy".chars()).unwrap(), Mode::ADEQUATE_MONOID);
//! assert!(solver.equal_str("(x)+x", "x").unwrap());
//! assert_eq!(solver.normal_form_str("(y)+(x)+").unwrap(), "(x)+(y)+");
//! ```

pub mod bench;
pub mod bitset;
pub mod canonical;
pub mod cli;
pub mod error;
pub mod formula;
pub mod generate;
pub mod homomorphism;
pub mod mode;
pub mod pruning;
pub mod solver;
pub mod tree;

pub use canonical::{canonical_formula, canonical_string, evaluate_roundtrip_check};
pub use error::{Error, FormulaError, TreeError};
pub use formula::{parse, Alphabet, Factor, Formula, Letter, UnaryOp};
pub use homomorphism::{
    exists_morphism, exists_morphism_bruteforce, extract_morphism, CandidateSets, VertexMorphism,
};
pub use mode::{Mode, Sidedness};
pub use pruning::{
    is_pruned, minimal_retract_bruteforce, prune, pruned_product, pruned_plus, pruned_star,
    pruned_vertex_set, PrunedWitness,
};
pub use solver::{check_identity, check_identity_str, Solver};
pub use tree::{Direction, Edge, SigmaTree, SignedLabel, TraversalOrder, Trunk};
