use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{Edge, SigmaTree};
use crate::error::TreeError;
use crate::formula::Alphabet;

/// Serialized form of a tree. Field order is part of the format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TreeJson {
    pub alphabet: String,
    pub n: usize,
    pub start: usize,
    pub end: usize,
    pub edges: Vec<EdgeJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeJson {
    pub l: String,
    pub s: usize,
    pub t: usize,
}

impl From<&SigmaTree> for TreeJson {
    fn from(tree: &SigmaTree) -> Self {
        TreeJson {
            alphabet: tree.alphabet.to_string(),
            n: tree.vertex_count,
            start: tree.start,
            end: tree.end,
            edges: tree
                .edges
                .iter()
                .map(|e| EdgeJson {
                    l: tree.label_char(e.label).to_string(),
                    s: e.source,
                    t: e.target,
                })
                .collect(),
        }
    }
}

impl TryFrom<TreeJson> for SigmaTree {
    type Error = TreeError;

    fn try_from(json: TreeJson) -> Result<Self, Self::Error> {
        let alphabet = Alphabet::new(json.alphabet.chars())?;
        let edges = json
            .edges
            .iter()
            .map(|e| {
                let mut chars = e.l.chars();
                match (chars.next(), chars.next()) {
                    (Some(c), None) => alphabet
                        .index_of(c)
                        .map(|l| Edge::new(l, e.s, e.t))
                        .ok_or(TreeError::UnknownSymbol(c)),
                    _ => Err(TreeError::InvalidJson(format!(
                        "edge label {:?} is not a single character",
                        e.l
                    ))),
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        SigmaTree::new(alphabet, json.n, json.start, json.end, edges)
    }
}

impl SigmaTree {
    /// Compact JSON: `{"alphabet":..,"n":..,"start":..,"end":..,"edges":[{"l":..,"s":..,"t":..},..]}`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&TreeJson::from(self)).expect("tree serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<SigmaTree, TreeError> {
        let json: TreeJson =
            serde_json::from_str(text).map_err(|e| TreeError::InvalidJson(e.to_string()))?;
        SigmaTree::try_from(json)
    }

    /// Graphviz rendering. The start vertex is a diamond, the end vertex a
    /// double circle; a vertex that is both gets three peripheries.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph T {\n");
        for v in 0..self.vertex_count {
            let attrs = match (v == self.start, v == self.end) {
                (true, true) => " [shape=diamond, peripheries=3]",
                (true, false) => " [shape=diamond]",
                (false, true) => " [shape=doublecircle]",
                (false, false) => "",
            };
            writeln!(out, "    {v}{attrs};").unwrap();
        }
        for e in &self.edges {
            writeln!(
                out,
                "    {} -> {} [label=\"{}\"];",
                e.source,
                e.target,
                self.label_char(e.label).escape_default()
            )
            .unwrap();
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Alphabet {
        Alphabet::new("ab".chars()).unwrap()
    }

    #[test]
    fn json_field_order() {
        let t = SigmaTree::base(ab(), 'a').unwrap().unpruned_plus();
        assert_eq!(
            t.to_json(),
            r#"{"alphabet":"ab","n":2,"start":0,"end":0,"edges":[{"l":"a","s":0,"t":1}]}"#
        );
        assert_eq!(SigmaTree::from_json(&t.to_json()).unwrap(), t);
    }

    #[test]
    fn json_errors() {
        assert!(matches!(SigmaTree::from_json("{"), Err(TreeError::InvalidJson(_))));
        assert!(matches!(
            SigmaTree::from_json(r#"{"alphabet":"ab","n":2,"start":0,"end":1,"edges":[{"l":"c","s":0,"t":1}]}"#),
            Err(TreeError::UnknownSymbol('c'))
        ));
        assert!(matches!(
            SigmaTree::from_json(r#"{"alphabet":"ab","n":2,"start":0,"end":1,"edges":[{"l":"ab","s":0,"t":1}]}"#),
            Err(TreeError::InvalidJson(_))
        ));
        assert!(matches!(
            SigmaTree::from_json(r#"{"alphabet":"ab","n":2,"start":1,"end":0,"edges":[{"l":"a","s":0,"t":1}]}"#),
            Err(TreeError::NoTrunk { .. })
        ));
    }

    #[test]
    fn dot_shapes() {
        let t = SigmaTree::base(ab(), 'b').unwrap();
        let dot = t.to_dot();
        assert!(dot.starts_with("digraph T {"));
        assert!(dot.contains("0 [shape=diamond];"));
        assert!(dot.contains("1 [shape=doublecircle];"));
        assert!(dot.contains("0 -> 1 [label=\"b\"];"));
        let dot = t.unpruned_star().to_dot();
        assert!(dot.contains("1 [shape=diamond, peripheries=3];"));
    }
}
