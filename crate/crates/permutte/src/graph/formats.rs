//! Graph document formats: JSON and an edge-list text format.
//!
//! Bipartite JSON: `{"A":[ids],"B":[ids],"edges":[[u,v],...]}`.
//! Multigraph JSON: `{"n":k,"edges":[[u,v],...]}` (repeats and loops allowed).
//! Edge list: header line `bip a b` (vertices 1..=a on side A, a+1..=a+b on
//! side B) or `multi n`, then one `u v` pair per line.

use serde::{Deserialize, Serialize};

use crate::graph::{BipGraph, MultiGraph};
use crate::{Error, Result};

#[derive(Serialize, Deserialize)]
struct BipDoc {
    #[serde(rename = "A")]
    a: Vec<u32>,
    #[serde(rename = "B")]
    b: Vec<u32>,
    edges: Vec<(u32, u32)>,
}

#[derive(Serialize, Deserialize)]
struct MultiDoc {
    n: u32,
    edges: Vec<(u32, u32)>,
}

/// A parsed graph document of either kind.
#[derive(Clone, Debug)]
pub enum GraphDoc {
    Bipartite(BipGraph),
    Multi(MultiGraph),
}

impl GraphDoc {
    pub fn bipartite(self) -> Result<BipGraph> {
        match self {
            GraphDoc::Bipartite(g) => Ok(g),
            GraphDoc::Multi(_) => Err(Error::Parse(
                "expected a bipartite graph document".into(),
            )),
        }
    }

    pub fn multigraph(self) -> Result<MultiGraph> {
        match self {
            GraphDoc::Multi(g) => Ok(g),
            GraphDoc::Bipartite(_) => Err(Error::Parse(
                "expected a multigraph document".into(),
            )),
        }
    }
}

impl BipGraph {
    pub fn from_json(s: &str) -> Result<Self> {
        let doc: BipDoc =
            serde_json::from_str(s).map_err(|e| Error::Parse(format!("bipartite json: {e}")))?;
        BipGraph::new(doc.a, doc.b, doc.edges)
    }

    pub fn to_json(&self) -> String {
        let doc = BipDoc {
            a: self.side_a().to_vec(),
            b: self.side_b().to_vec(),
            edges: self.edges().collect(),
        };
        serde_json::to_string(&doc).expect("graph document serializes")
    }
}

impl MultiGraph {
    pub fn from_json(s: &str) -> Result<Self> {
        let doc: MultiDoc =
            serde_json::from_str(s).map_err(|e| Error::Parse(format!("multigraph json: {e}")))?;
        MultiGraph::new(doc.n, doc.edges)
    }

    pub fn to_json(&self) -> String {
        let doc = MultiDoc {
            n: self.num_vertices(),
            edges: self.edges().to_vec(),
        };
        serde_json::to_string(&doc).expect("graph document serializes")
    }
}

/// Parses either format, sniffing JSON by a leading `{`.
pub fn parse_graph_auto(text: &str) -> Result<GraphDoc> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        let value: serde_json::Value = serde_json::from_str(trimmed)
            .map_err(|e| Error::Parse(format!("json: {e}")))?;
        if value.get("A").is_some() {
            Ok(GraphDoc::Bipartite(BipGraph::from_json(trimmed)?))
        } else if value.get("n").is_some() {
            Ok(GraphDoc::Multi(MultiGraph::from_json(trimmed)?))
        } else {
            Err(Error::Parse(
                "json object has neither bipartite key \"A\" nor multigraph key \"n\"".into(),
            ))
        }
    } else {
        parse_edge_list(text)
    }
}

fn parse_edge_list(text: &str) -> Result<GraphDoc> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty edge-list document".into()))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let parse_num = |s: &str| -> Result<u32> {
        s.parse()
            .map_err(|_| Error::Parse(format!("bad number `{s}` in edge list")))
    };
    let mut edges = Vec::new();
    for line in lines {
        let pair: Vec<&str> = line.split_whitespace().collect();
        if pair.len() != 2 {
            return Err(Error::Parse(format!("bad edge line `{line}`")));
        }
        edges.push((parse_num(pair[0])?, parse_num(pair[1])?));
    }
    match fields.as_slice() {
        ["bip", a, b] => {
            let (a, b) = (parse_num(a)?, parse_num(b)?);
            let graph = BipGraph::new(
                (1..=a).collect(),
                (a + 1..=a + b).collect(),
                edges,
            )?;
            Ok(GraphDoc::Bipartite(graph))
        }
        ["multi", n] => Ok(GraphDoc::Multi(MultiGraph::new(parse_num(n)?, edges)?)),
        _ => Err(Error::Parse(format!(
            "bad header `{header}`: expected `bip a b` or `multi n`"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bip_json_roundtrip() {
        let g = BipGraph::path(5);
        let back = BipGraph::from_json(&g.to_json()).unwrap();
        assert_eq!(g, back);
        let parsed = BipGraph::from_json(r#"{"A":[1,3,5],"B":[2,4],"edges":[[1,2],[2,3],[3,4],[4,5]]}"#)
            .unwrap();
        assert_eq!(parsed, g);
    }

    #[test]
    fn multi_json_roundtrip() {
        let g = MultiGraph::new(3, vec![(1, 2), (2, 3), (1, 3), (2, 2)]).unwrap();
        let back = MultiGraph::from_json(&g.to_json()).unwrap();
        assert_eq!(g, back);
    }

    #[test]
    fn edge_list_formats() {
        let doc = parse_graph_auto("bip 3 2\n1 4\n2 4\n3 5\n").unwrap();
        let g = doc.bipartite().unwrap();
        assert_eq!(g.side_a(), &[1, 2, 3]);
        assert_eq!(g.num_edges(), 3);
        let doc = parse_graph_auto("# triangle\nmulti 3\n1 2\n2 3\n1 3\n").unwrap();
        assert_eq!(doc.multigraph().unwrap().num_edges(), 3);
        assert!(parse_graph_auto("nope 1 2\n").is_err());
        assert!(parse_graph_auto(r#"{"edges":[]}"#).is_err());
    }
}
