use std::collections::{BTreeMap, BTreeSet};

use crate::automata::StateId;
use crate::encoding::Token;

/// A finite set of tokens for each state pair.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RepFunction {
    table: BTreeMap<(StateId, StateId), Vec<Token>>,
}

impl RepFunction {
    pub fn new() -> Self {
        RepFunction::default()
    }

    /// Appends `t` to `rep(p, q)` unless already present.
    pub fn insert(&mut self, p: StateId, q: StateId, t: Token) {
        let entry = self.table.entry((p, q)).or_default();
        if !entry.contains(&t) {
            entry.push(t);
        }
    }

    pub fn get(&self, p: StateId, q: StateId) -> &[Token] {
        self.table.get(&(p, q)).map_or(&[], Vec::as_slice)
    }

    pub fn iter(&self) -> impl Iterator<Item = ((StateId, StateId), &[Token])> + '_ {
        self.table.iter().filter(|(_, v)| !v.is_empty()).map(|(k, v)| (*k, v.as_slice()))
    }

    pub fn tokens(&self) -> impl Iterator<Item = &Token> + '_ {
        self.table.values().flatten()
    }

    pub fn num_tokens(&self) -> usize {
        self.table.values().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.num_tokens() == 0
    }

    /// Pointwise union; entries of `self` keep their order and precede new
    /// entries from `other`.
    pub fn union(&self, other: &RepFunction) -> RepFunction {
        let mut out = self.clone();
        for ((p, q), toks) in other.iter() {
            for t in toks {
                out.insert(p, q, t.clone());
            }
        }
        out
    }

    /// Vertex stems used by vertex tokens anywhere in the table.
    pub fn stems(&self) -> BTreeSet<usize> {
        self.tokens().filter_map(Token::index).collect()
    }

    /// `{"(p,q)": ["<token>", ...]}`.
    pub fn to_json(&self) -> serde_json::Value {
        let map: serde_json::Map<String, serde_json::Value> = self
            .iter()
            .map(|((p, q), toks)| {
                let words = toks.iter().map(|t| serde_json::Value::String(t.to_string())).collect();
                (format!("({p},{q})"), serde_json::Value::Array(words))
            })
            .collect();
        serde_json::Value::Object(map)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rep(entries: &[((StateId, StateId), Token)]) -> RepFunction {
        let mut r = RepFunction::new();
        for (k, t) in entries {
            r.insert(k.0, k.1, t.clone());
        }
        r
    }

    #[test]
    fn union_laws() {
        let a = rep(&[((0, 1), Token::threshold(1)), ((1, 2), Token::LeftVertex(1))]);
        let b = rep(&[((2, 3), Token::RightVertex(2))]);
        let ab = a.union(&b);
        assert_eq!(ab.num_tokens(), 3);
        assert_eq!(ab.get(2, 3), &[Token::RightVertex(2)]);
        assert_eq!(a.union(&a), a);
        assert_eq!(a.union(&RepFunction::new()), a);
    }

    #[test]
    fn json_dump() {
        let a = rep(&[((0, 1), Token::threshold(1)), ((1, 2), Token::LeftVertex(1)), ((1, 2), Token::LeftVertex(3))]);
        assert_eq!(a.to_json(), serde_json::json!({"(0,1)": [">1$"], "(1,2)": [">a#", ">aaa#"]}));
    }
}
