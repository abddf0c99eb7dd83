//! JSON file formats.
//!
//! Colourings are `{"n": int, "classes": [[[u, v], ...], ...]}` and graphs
//! `{"n": int, "edges": [[u, v], ...]}`, always with `u < v`. Both round-trip
//! exactly: classes and edges keep their order.

use std::io::Read;
use std::path::Path;

use arstar_core::detect::RainbowCertificate;
use arstar_core::oracle::{ExResult, OracleResult, OracleValue, SearchStats};
use arstar_core::{Edge, SimpleGraph, StarColouring, Tournament};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColouringJson {
    pub n: usize,
    pub classes: Vec<Vec<[usize; 2]>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

/// Upper-triangular arc bits, row-major: bit for `(i, j)`, `i < j`, is `1`
/// when the arc is `i -> j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TournamentJson {
    pub n: usize,
    pub bits: String,
    pub arcs: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub pattern: GraphJson,
    pub map: Vec<usize>,
    pub colours: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum ValueJson {
    Exact(usize),
    Nonexistent,
    AtLeast(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatsJson {
    pub nodes_explored: u64,
    pub pruned: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub key: String,
    pub colouring: ColouringJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleJson {
    pub value: ValueJson,
    pub witness_count: usize,
    pub witnesses: Vec<WitnessJson>,
    pub stats: StatsJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExJson {
    pub value: usize,
    pub witness: GraphJson,
    pub stats: StatsJson,
}

fn pair(e: &Edge) -> [usize; 2] {
    [e.u, e.v]
}

impl From<&StarColouring> for ColouringJson {
    fn from(c: &StarColouring) -> Self {
        ColouringJson {
            n: c.n(),
            classes: c
                .classes()
                .iter()
                .map(|class| class.iter().map(pair).collect())
                .collect(),
        }
    }
}

impl ColouringJson {
    pub fn raw_classes(&self) -> Vec<Vec<Edge>> {
        self.classes
            .iter()
            .map(|class| class.iter().map(|&[u, v]| Edge::new(u, v)).collect())
            .collect()
    }

    /// Validates into a colouring.
    pub fn to_colouring(&self) -> Result<StarColouring> {
        for class in &self.classes {
            for &[u, v] in class {
                if u >= self.n || v >= self.n || u == v {
                    return Err(CliError::input(format!(
                        "edge [{u}, {v}] is not a pair of distinct vertices below {}",
                        self.n
                    )));
                }
            }
        }
        Ok(StarColouring::from_classes(self.n, self.raw_classes())?)
    }
}

impl From<&SimpleGraph> for GraphJson {
    fn from(g: &SimpleGraph) -> Self {
        GraphJson {
            n: g.n(),
            edges: g.edges().iter().map(pair).collect(),
        }
    }
}

impl GraphJson {
    pub fn to_graph(&self) -> Result<SimpleGraph> {
        Ok(SimpleGraph::from_edges(
            self.n,
            self.edges.iter().map(|&[u, v]| (u, v)),
        )?)
    }
}

impl From<&Tournament> for TournamentJson {
    fn from(t: &Tournament) -> Self {
        TournamentJson {
            n: t.n(),
            bits: t.to_bit_string(),
            arcs: t.arcs().into_iter().map(|(a, b)| [a, b]).collect(),
        }
    }
}

impl TournamentJson {
    pub fn to_tournament(&self) -> Result<Tournament> {
        let arcs: Vec<(usize, usize)> = self.arcs.iter().map(|&[a, b]| (a, b)).collect();
        Ok(Tournament::from_arcs(self.n, &arcs)?)
    }
}

impl From<&RainbowCertificate> for CertificateJson {
    fn from(c: &RainbowCertificate) -> Self {
        CertificateJson {
            pattern: (&c.pattern).into(),
            map: c.map.clone(),
            colours: c.colours.clone(),
        }
    }
}

impl From<OracleValue> for ValueJson {
    fn from(v: OracleValue) -> Self {
        match v {
            OracleValue::Exact(x) => ValueJson::Exact(x),
            OracleValue::Nonexistent => ValueJson::Nonexistent,
            OracleValue::AtLeast(x) => ValueJson::AtLeast(x),
        }
    }
}

impl From<SearchStats> for StatsJson {
    fn from(s: SearchStats) -> Self {
        StatsJson {
            nodes_explored: s.nodes_explored,
            pruned: s.pruned,
        }
    }
}

impl OracleJson {
    /// Keeps the first `limit` witnesses; `witness_count` records them all.
    pub fn new(r: &OracleResult, limit: Option<usize>) -> Self {
        let take = limit.unwrap_or(usize::MAX);
        OracleJson {
            value: r.value.into(),
            witness_count: r.witnesses.len(),
            witnesses: r
                .witnesses
                .iter()
                .take(take)
                .map(|w| WitnessJson {
                    key: w.key.to_hex(),
                    colouring: (&w.colouring).into(),
                })
                .collect(),
            stats: r.stats.into(),
        }
    }
}

impl From<&ExResult> for ExJson {
    fn from(r: &ExResult) -> Self {
        ExJson {
            value: r.value,
            witness: (&r.witness).into(),
            stats: r.stats.into(),
        }
    }
}

/// Reads a file, or stdin for `-`.
pub fn read_input(path: &Path) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|source| CliError::Io {
                path: path.to_path_buf(),
                source,
            })?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn parse_json<T: for<'de> Deserialize<'de>>(text: &str, context: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|source| CliError::Json {
        context: context.to_string(),
        source,
    })
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serialises");
    s.push('\n');
    s
}
