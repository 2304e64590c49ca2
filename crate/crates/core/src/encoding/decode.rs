use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::automata::{RunWord, Word};
use crate::error::{Error, Result};
use crate::graphs::{Graph, GraphJson, RedBlueGraph, RedBlueJson, Vertex};
use crate::json::big_number;

use super::token::{tokenize_runs, Token};

/// A decoded simple graph together with its threshold.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GraphInstance {
    pub graph: Graph,
    pub k: BigUint,
}

/// A decoded red-blue graph together with its threshold.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RedBlueInstance {
    pub graph: RedBlueGraph,
    pub k: BigUint,
}

#[derive(Serialize, Deserialize)]
struct GraphInstanceJson {
    vertices: Vec<Vertex>,
    edges: Vec<(Vertex, Vertex)>,
    #[serde(with = "big_number")]
    k: BigUint,
}

#[derive(Serialize, Deserialize)]
struct RedBlueInstanceJson {
    red: Vec<Vertex>,
    blue: Vec<Vertex>,
    edges: Vec<(Vertex, Vertex)>,
    #[serde(with = "big_number")]
    k: BigUint,
}

impl GraphInstance {
    pub fn new(graph: Graph, k: impl Into<BigUint>) -> Self {
        GraphInstance { graph, k: k.into() }
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let GraphJson { vertices, edges } = self.graph.to_json();
        serde_json::to_value(GraphInstanceJson { vertices, edges, k: self.k.clone() }).expect("serializable")
    }

    pub fn from_json_value(v: serde_json::Value) -> Result<Self> {
        let j: GraphInstanceJson = serde_json::from_value(v)?;
        let graph = Graph::from_json(&GraphJson { vertices: j.vertices, edges: j.edges })?;
        Ok(GraphInstance { graph, k: j.k })
    }
}

impl RedBlueInstance {
    pub fn new(graph: RedBlueGraph, k: impl Into<BigUint>) -> Self {
        RedBlueInstance { graph, k: k.into() }
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let RedBlueJson { red, blue, edges } = self.graph.to_json();
        serde_json::to_value(RedBlueInstanceJson { red, blue, edges, k: self.k.clone() }).expect("serializable")
    }

    pub fn from_json_value(v: serde_json::Value) -> Result<Self> {
        let j: RedBlueInstanceJson = serde_json::from_value(v)?;
        let graph = RedBlueGraph::from_json(&RedBlueJson { red: j.red, blue: j.blue, edges: j.edges })?;
        Ok(RedBlueInstance { graph, k: j.k })
    }
}

fn split(tokens: Vec<Token>) -> Result<(BigUint, Vec<(usize, usize)>)> {
    let mut it = tokens.into_iter();
    let k = match it.next() {
        Some(Token::Threshold(k)) => k,
        _ => return Err(Error::Invariant("tokenizer produced no threshold".into())),
    };
    let rest: Vec<Token> = it.collect();
    let pairs = rest
        .chunks(2)
        .map(|c| match c {
            [Token::LeftVertex(i), Token::RightVertex(j)] => Ok((*i, *j)),
            _ => Err(Error::Invariant("tokenizer produced a malformed edge factor".into())),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((k, pairs))
}

pub fn decode(w: &Word) -> Result<GraphInstance> {
    decode_runs(&w.to_runs())
}

/// Every edge factor `>a^i#>a^j$` contributes vertices `i` and `j` and, when
/// `i != j`, the edge `{i, j}`.
pub fn decode_runs(w: &RunWord) -> Result<GraphInstance> {
    let (k, pairs) = split(tokenize_runs(w)?)?;
    let mut g = Graph::new();
    for (i, j) in pairs {
        g.add_vertex(i);
        g.add_vertex(j);
        if i != j {
            g.add_edge(i, j)?;
        }
    }
    Ok(GraphInstance { graph: g, k })
}

pub fn decode_red_blue(w: &Word) -> Result<RedBlueInstance> {
    decode_red_blue_runs(&w.to_runs())
}

/// Left tokens name red vertices, right tokens name blue vertices.
pub fn decode_red_blue_runs(w: &RunWord) -> Result<RedBlueInstance> {
    let (k, pairs) = split(tokenize_runs(w)?)?;
    let mut g = RedBlueGraph::new();
    for (i, j) in pairs {
        g.add_edge(i, j);
    }
    Ok(RedBlueInstance { graph: g, k })
}
