use std::fmt::Write;

use crate::error::{Error, Result};
use crate::free::Word;
use crate::language::FactorLanguage;

/// Level-`k` Rauzy graph: one node per length-`k` word, one edge `u → v` per
/// length-`k+1` word with prefix `u` and suffix `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RauzyGraph {
    pub level: usize,
    pub nodes: Vec<Word>,
    pub edges: Vec<(Word, Word)>,
}

pub fn rauzy_export(lang: &FactorLanguage, k: usize) -> Result<RauzyGraph> {
    if k == 0 {
        return Err(Error::ZeroHorizon);
    }
    if k >= lang.horizon() {
        return Err(Error::HorizonTooSmall {
            needed: k + 1,
            available: lang.horizon(),
        });
    }
    let nodes = lang.words_of_len(k).into_iter().cloned().collect();
    let edges = lang
        .words_of_len(k + 1)
        .into_iter()
        .map(|w| (w.prefix(k), w.suffix(k)))
        .collect();
    Ok(RauzyGraph { level: k, nodes, edges })
}

impl RauzyGraph {
    pub fn to_dot(&self) -> String {
        let mut out = format!("digraph rauzy_{} {{\n", self.level);
        for n in &self.nodes {
            writeln!(out, "  \"{n}\";").unwrap();
        }
        for (u, v) in &self.edges {
            let label = u.mul(&v.suffix(1));
            writeln!(out, "  \"{u}\" -> \"{v}\" [label=\"{label}\"];").unwrap();
        }
        out.push_str("}\n");
        out
    }
}
