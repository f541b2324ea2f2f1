//! Word problem, normal forms and identity checking in free (left, right,
//! two-sided) adequate semigroups and monoids.

use crate::canonical::canonical_formula;
use crate::error::{FormulaError, Result};
use crate::formula::{parse, Alphabet, Formula};
use crate::homomorphism::exists_morphism;
use crate::mode::Mode;
use crate::pruning::prune;
use crate::tree::SigmaTree;

/// Decision procedures over a fixed alphabet and variety.
#[derive(Debug, Clone)]
pub struct Solver {
    alphabet: Alphabet,
    mode: Mode,
}

impl Solver {
    pub fn new(alphabet: Alphabet, mode: Mode) -> Self {
        Solver { alphabet, mode }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn parse(&self, text: &str) -> Result<Formula, FormulaError> {
        parse(text, &self.alphabet, self.mode)
    }

    /// The unpruned tree of an admissible formula.
    pub fn evaluate(&self, formula: &Formula) -> Result<SigmaTree> {
        formula.check(&self.alphabet, self.mode)?;
        Ok(SigmaTree::evaluate(formula, &self.alphabet)?)
    }

    /// The pruned tree representing the element.
    pub fn element(&self, formula: &Formula) -> Result<SigmaTree> {
        let pruned = prune(&self.evaluate(formula)?).tree;
        // Morphisms send edges to edges, so the retract of a tree with an
        // edge has an edge: semigroup elements are never trivial.
        assert!(self.mode.monoid || !pruned.is_trivial());
        Ok(pruned)
    }

    /// Whether two formulas denote the same element: their trees admit
    /// morphisms in both directions.
    pub fn equal(&self, lhs: &Formula, rhs: &Formula) -> Result<bool> {
        let x = self.evaluate(lhs)?;
        let y = self.evaluate(rhs)?;
        Ok(exists_morphism(&x, &y)? && exists_morphism(&y, &x)?)
    }

    pub fn equal_str(&self, lhs: &str, rhs: &str) -> Result<bool> {
        self.equal(&self.parse(lhs)?, &self.parse(rhs)?)
    }

    /// The canonical formula of the pruned tree.
    pub fn normal_form(&self, formula: &Formula) -> Result<Formula> {
        Ok(canonical_formula(&self.element(formula)?))
    }

    pub fn normal_form_str(&self, text: &str) -> Result<String> {
        Ok(self.normal_form(&self.parse(text)?)?.render())
    }

    /// Whether the element is idempotent, i.e. its pruned tree has
    /// start = end.
    pub fn is_idempotent(&self, formula: &Formula) -> Result<bool> {
        let t = self.element(formula)?;
        Ok(t.start() == t.end())
    }
}

/// Whether `lhs = rhs` holds in every algebra of the variety selected by
/// `mode`. Variables are the letters occurring in either side.
pub fn check_identity(lhs: &Formula, rhs: &Formula, mode: Mode) -> Result<bool> {
    let (l, r) = (lhs.render(), rhs.render());
    let solver = Solver::new(variable_alphabet(&l, &r)?, mode);
    solver.equal(lhs, rhs)
}

/// [`check_identity`] on formula text.
pub fn check_identity_str(lhs: &str, rhs: &str, mode: Mode) -> Result<bool> {
    let solver = Solver::new(variable_alphabet(lhs, rhs)?, mode);
    solver.equal_str(lhs, rhs)
}

fn variable_alphabet(lhs: &str, rhs: &str) -> Result<Alphabet> {
    // Identities between empty words still need a (dummy) alphabet.
    let has_letters = |s: &str| {
        s.chars()
            .any(|c| !crate::formula::RESERVED.contains(&c) && !c.is_whitespace())
    };
    if has_letters(lhs) || has_letters(rhs) {
        Ok(Alphabet::from_texts([lhs, rhs])?)
    } else {
        Ok(Alphabet::new(['x'])?)
    }
}
