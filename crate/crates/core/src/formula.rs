//! Well-formed formulas over a finite generating set.
//!
//! The concrete syntax is
//!
//! ```text
//! Expr   := Factor*
//! Factor := letter | '(' Expr ')' ('+' | '*')
//! ```
//!
//! Unary operators are postfix and only ever follow a closing parenthesis, so
//! `(a)+` is legal and `a+` is not. Whitespace is skipped on input and never
//! emitted, which makes [`Formula`]'s `Display` output a canonical spelling.

use std::fmt;
use std::sync::Arc;

use crate::error::{FormulaError, TreeError};
use crate::mode::Mode;

/// Characters reserved by the formula syntax.
pub const RESERVED: [char; 4] = ['(', ')', '+', '*'];

/// A finite, ordered set of generator symbols.
///
/// The order is significant: it fixes the order on formula symbols used by
/// normal forms, and the neighbour order used by tree traversals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    letters: Arc<[char]>,
}

impl Alphabet {
    pub fn new(letters: impl IntoIterator<Item = char>) -> Result<Self, TreeError> {
        let letters: Vec<char> = letters.into_iter().collect();
        if letters.is_empty() {
            return Err(TreeError::InvalidAlphabet("alphabet is empty".into()));
        }
        for (i, &c) in letters.iter().enumerate() {
            if RESERVED.contains(&c) || c.is_whitespace() || c.is_control() {
                return Err(TreeError::InvalidAlphabet(format!(
                    "'{}' cannot be used as a generator",
                    c.escape_default()
                )));
            }
            if letters[..i].contains(&c) {
                return Err(TreeError::InvalidAlphabet(format!("duplicate generator '{c}'")));
            }
        }
        Ok(Alphabet {
            letters: letters.into(),
        })
    }

    /// Builds an alphabet from every generator-like character in `texts`,
    /// sorted by code point.
    pub fn from_texts<'a>(texts: impl IntoIterator<Item = &'a str>) -> Result<Self, TreeError> {
        let mut letters: Vec<char> = texts
            .into_iter()
            .flat_map(str::chars)
            .filter(|c| !RESERVED.contains(c) && !c.is_whitespace())
            .collect();
        letters.sort_unstable();
        letters.dedup();
        Alphabet::new(letters)
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[char] {
        &self.letters
    }

    pub fn index_of(&self, c: char) -> Option<Letter> {
        self.letters
            .iter()
            .position(|&x| x == c)
            .map(|i| Letter(i as u32))
    }

    pub fn contains(&self, c: char) -> bool {
        self.letters.contains(&c)
    }

    pub fn char_of(&self, letter: Letter) -> char {
        self.letters[letter.index()]
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Alphabet({:?})", self.to_string())
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.letters.iter().try_for_each(|c| write!(f, "{c}"))
    }
}

/// Index of a generator within its [`Alphabet`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(pub u32);

impl Letter {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum UnaryOp {
    Plus,
    Star,
}

impl UnaryOp {
    pub fn symbol(self) -> char {
        match self {
            UnaryOp::Plus => '+',
            UnaryOp::Star => '*',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Factor {
    Letter(char),
    Unary(UnaryOp, Formula),
}

/// A product of factors. The empty product denotes the identity.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Formula {
    pub factors: Vec<Factor>,
}

impl Formula {
    pub fn new(factors: Vec<Factor>) -> Self {
        Formula { factors }
    }

    pub fn empty() -> Self {
        Formula::default()
    }

    pub fn letter(c: char) -> Self {
        Formula::new(vec![Factor::Letter(c)])
    }

    pub fn plus(self) -> Self {
        Formula::new(vec![Factor::Unary(UnaryOp::Plus, self)])
    }

    pub fn star(self) -> Self {
        Formula::new(vec![Factor::Unary(UnaryOp::Star, self)])
    }

    /// Concatenation, i.e. the product of `self` and `other`.
    pub fn concat(mut self, other: Formula) -> Self {
        self.factors.extend(other.factors);
        self
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Number of generator occurrences.
    pub fn occurrence_count(&self) -> usize {
        self.factors
            .iter()
            .map(|f| match f {
                Factor::Letter(_) => 1,
                Factor::Unary(_, body) => body.occurrence_count(),
            })
            .sum()
    }

    /// Length of the rendered formula in symbols.
    pub fn len(&self) -> usize {
        self.factors
            .iter()
            .map(|f| match f {
                Factor::Letter(_) => 1,
                Factor::Unary(_, body) => body.len() + 3,
            })
            .sum()
    }

    pub fn render(&self) -> String {
        self.to_string()
    }

    /// Checks that the formula is admissible in `mode` and uses only letters
    /// of `alphabet`. Offsets in errors refer to the rendered form.
    pub fn check(&self, alphabet: &Alphabet, mode: Mode) -> Result<(), FormulaError> {
        if self.is_empty() && !mode.monoid {
            return Err(FormulaError::EmptyNotAllowed { offset: 0 });
        }
        self.check_from(alphabet, mode, 0).map(|_| ())
    }

    fn check_from(&self, alphabet: &Alphabet, mode: Mode, mut offset: usize) -> Result<usize, FormulaError> {
        for factor in &self.factors {
            match factor {
                Factor::Letter(c) => {
                    if !alphabet.contains(*c) {
                        return Err(FormulaError::UnknownSymbol { symbol: *c, offset });
                    }
                    offset += 1;
                }
                Factor::Unary(op, body) => {
                    if body.is_empty() && !mode.monoid {
                        return Err(FormulaError::EmptyNotAllowed { offset });
                    }
                    let close = body.check_from(alphabet, mode, offset + 1)?;
                    if !mode.admits(*op) {
                        return Err(FormulaError::OpNotInSignature {
                            op: op.symbol(),
                            offset: close + 1,
                            mode: mode.name(),
                        });
                    }
                    offset = close + 2;
                }
            }
        }
        Ok(offset)
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for factor in &self.factors {
            match factor {
                Factor::Letter(c) => write!(f, "{c}")?,
                Factor::Unary(op, body) => write!(f, "({body}){}", op.symbol())?,
            }
        }
        Ok(())
    }
}

/// Parses `text` as a formula over `alphabet`, admissible in `mode`.
pub fn parse(text: &str, alphabet: &Alphabet, mode: Mode) -> Result<Formula, FormulaError> {
    // Each open group remembers the offset of its '('.
    let mut stack: Vec<(usize, Vec<Factor>)> = Vec::new();
    let mut current: Vec<Factor> = Vec::new();
    let mut chars = text.chars().enumerate().peekable();

    while let Some((offset, c)) = chars.next() {
        match c {
            c if c.is_whitespace() => {}
            '(' => stack.push((offset, std::mem::take(&mut current))),
            ')' => {
                let Some((open, parent)) = stack.pop() else {
                    return Err(FormulaError::UnbalancedParenthesis { offset });
                };
                while chars.next_if(|(_, c)| c.is_whitespace()).is_some() {}
                let (op_offset, op) = match chars.next() {
                    Some((at, '+')) => (at, UnaryOp::Plus),
                    Some((at, '*')) => (at, UnaryOp::Star),
                    _ => return Err(FormulaError::BareGroup { offset: open }),
                };
                if !mode.admits(op) {
                    return Err(FormulaError::OpNotInSignature {
                        op: op.symbol(),
                        offset: op_offset,
                        mode: mode.name(),
                    });
                }
                if current.is_empty() && !mode.monoid {
                    return Err(FormulaError::EmptyNotAllowed { offset: open });
                }
                let body = Formula::new(std::mem::replace(&mut current, parent));
                current.push(Factor::Unary(op, body));
            }
            '+' | '*' => return Err(FormulaError::DanglingUnary { op: c, offset }),
            c if alphabet.contains(c) => current.push(Factor::Letter(c)),
            symbol => return Err(FormulaError::UnknownSymbol { symbol, offset }),
        }
    }
    if !stack.is_empty() {
        return Err(FormulaError::UnbalancedParenthesis {
            offset: text.chars().count(),
        });
    }
    if current.is_empty() && !mode.monoid {
        return Err(FormulaError::EmptyNotAllowed { offset: 0 });
    }
    Ok(Formula::new(current))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mode::{Mode, Sidedness};
    use proptest::prelude::*;

    fn ab() -> Alphabet {
        Alphabet::new("ab".chars()).unwrap()
    }

    fn p(s: &str) -> Result<Formula, FormulaError> {
        parse(s, &ab(), Mode::ADEQUATE_MONOID)
    }

    #[test]
    fn parse_examples() {
        assert_eq!(
            p("a(b)*").unwrap(),
            Formula::new(vec![
                Factor::Letter('a'),
                Factor::Unary(UnaryOp::Star, Formula::letter('b')),
            ])
        );
        assert_eq!(
            p("((a)+b)*").unwrap(),
            Formula::letter('a').plus().concat(Formula::letter('b')).star()
        );
        assert_eq!(p("").unwrap(), Formula::empty());
        assert_eq!(p(" a ( b ) * ").unwrap(), p("a(b)*").unwrap());
    }

    #[test]
    fn parse_errors() {
        assert_eq!(p("(a"), Err(FormulaError::UnbalancedParenthesis { offset: 2 }));
        assert_eq!(p("a)+"), Err(FormulaError::UnbalancedParenthesis { offset: 1 }));
        assert_eq!(p("a+"), Err(FormulaError::DanglingUnary { op: '+', offset: 1 }));
        assert_eq!(p("*"), Err(FormulaError::DanglingUnary { op: '*', offset: 0 }));
        assert_eq!(p("b(a)"), Err(FormulaError::BareGroup { offset: 1 }));
        assert_eq!(p("(a)b"), Err(FormulaError::BareGroup { offset: 0 }));
        assert_eq!(p("ac"), Err(FormulaError::UnknownSymbol { symbol: 'c', offset: 1 }));
        assert_eq!(
            p("(a)+").unwrap().to_string(),
            "(a)+",
            "sanity"
        );
    }

    #[test]
    fn mode_restrictions() {
        let semi = Mode::ADEQUATE_SEMIGROUP;
        assert_eq!(parse("", &ab(), semi), Err(FormulaError::EmptyNotAllowed { offset: 0 }));
        assert_eq!(parse("a()+", &ab(), semi), Err(FormulaError::EmptyNotAllowed { offset: 1 }));
        assert!(parse("a()+", &ab(), Mode::ADEQUATE_MONOID).is_ok());

        let left = Mode::LEFT_MONOID;
        assert!(parse("a(b)*", &ab(), left).is_ok());
        assert!(matches!(
            parse("a(b)+", &ab(), left),
            Err(FormulaError::OpNotInSignature { op: '+', offset: 4, .. })
        ));
        let right = Mode::new(Sidedness::Right, false);
        assert!(parse("(a)+b", &ab(), right).is_ok());
        assert!(matches!(
            parse("(a)*", &ab(), right),
            Err(FormulaError::OpNotInSignature { op: '*', .. })
        ));
    }

    #[test]
    fn render_examples() {
        assert_eq!(p("a(b)*").unwrap().render(), "a(b)*");
        assert_eq!(Formula::empty().render(), "");
        assert_eq!(Formula::letter('a').plus().render(), "(a)+");
    }

    #[test]
    fn occurrence_counts() {
        assert_eq!(p("a(b)*").unwrap().occurrence_count(), 2);
        assert_eq!(p("").unwrap().occurrence_count(), 0);
        assert_eq!(p("((a)+a)*").unwrap().occurrence_count(), 2);
    }

    #[test]
    fn check_matches_parse() {
        let f = p("a((b)+)*").unwrap();
        assert!(f.check(&ab(), Mode::ADEQUATE_SEMIGROUP).is_ok());
        assert!(matches!(
            f.check(&ab(), Mode::LEFT_MONOID),
            Err(FormulaError::OpNotInSignature { op: '+', offset: 5, .. })
        ));
        let only_a = Alphabet::new(['a']).unwrap();
        assert!(matches!(
            f.check(&only_a, Mode::ADEQUATE_MONOID),
            Err(FormulaError::UnknownSymbol { symbol: 'b', offset: 3 })
        ));
    }

    #[test]
    fn alphabet_validation() {
        assert!(Alphabet::new("".chars()).is_err());
        assert!(Alphabet::new("aa".chars()).is_err());
        assert!(Alphabet::new("a(".chars()).is_err());
        assert!(Alphabet::new("a b".chars()).is_err());
        let sigma = Alphabet::from_texts(["(y)+x", "zx"]).unwrap();
        assert_eq!(sigma.to_string(), "xyz");
    }

    fn arb_formula() -> impl Strategy<Value = Formula> {
        let leaf = prop::sample::select(vec!['a', 'b']).prop_map(Formula::letter);
        leaf.prop_recursive(5, 40, 4, |inner| {
            prop_oneof![
                prop::collection::vec(inner.clone(), 0..4).prop_map(|fs| {
                    fs.into_iter().fold(Formula::empty(), Formula::concat)
                }),
                inner.clone().prop_map(Formula::plus),
                inner.prop_map(Formula::star),
            ]
        })
    }

    proptest! {
        #[test]
        fn render_parse_round_trip(f in arb_formula()) {
            let text = f.render();
            prop_assert_eq!(text.chars().count(), f.len());
            let back = p(&text).unwrap();
            prop_assert_eq!(&back, &f);
            prop_assert_eq!(back.render(), text);
        }

        #[test]
        fn accepted_strings_render_to_accepted_strings(s in "[ab()+* ]{0,16}") {
            if let Ok(f) = p(&s) {
                prop_assert!(p(&f.render()).is_ok());
            }
        }
    }
}
