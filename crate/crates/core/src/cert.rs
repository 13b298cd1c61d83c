//! Certificate files: JSON documents that reference graphs by the SHA-256 of
//! their canonical edge-list text.
//!
//! ```text
//! {"format": "pathforge-certificate", "version": 1,
//!  "graphs": {"host": "<hex>", "pattern": "<hex>"},
//!  "certificate": {"kind": "minor-model", "body": {...}}}
//! ```

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::generators::{complete_binary_tree, Branch, SubdivisionMap, WattleCertificate};
use crate::graph::{to_edge_list, Graph, Vertex};
use crate::minors::{Distance5Partition, MinorModel};
use crate::patterns::{Embedding, LineGraphEmbedding, SubdivisionEmbedding};
use crate::width::PathDecomposition;

pub const FORMAT: &str = "pathforge-certificate";
pub const VERSION: u32 = 1;

/// Hex SHA-256 of the graph's canonical edge-list text.
pub fn graph_hash(g: &Graph) -> String {
    hex::encode(Sha256::digest(to_edge_list(g).as_bytes()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "body", rename_all = "kebab-case")]
pub enum Body {
    PathDecomposition { bags: Vec<Vec<Vertex>> },
    MinorModel { induced: bool, branch_sets: Vec<(Vertex, Vec<Vertex>)> },
    Embedding { induced: bool, map: Vec<(Vertex, Vertex)> },
    Subdivision { induced: bool, branch: Vec<(Vertex, Vertex)>, paths: Vec<(Vertex, Vertex, Vec<Vertex>)> },
    LineGraph { lengths: Vec<(Vertex, Vertex, usize)>, edges: Vec<(Vertex, Vertex, Vertex)> },
    Wattle { height: usize, triangles: Vec<Vertex>, branch: Vec<(Vertex, Vec<Vertex>)>, paths: Vec<(Vertex, Vertex, Vec<Vertex>)> },
    Partition { classes: Vec<Vec<Vertex>> },
}

impl Body {
    pub fn kind(&self) -> &'static str {
        match self {
            Body::PathDecomposition { .. } => "path-decomposition",
            Body::MinorModel { .. } => "minor-model",
            Body::Embedding { .. } => "embedding",
            Body::Subdivision { .. } => "subdivision",
            Body::LineGraph { .. } => "line-graph",
            Body::Wattle { .. } => "wattle",
            Body::Partition { .. } => "partition",
        }
    }

    /// Graph roles the body needs besides `host`.
    fn roles(&self) -> &'static [&'static str] {
        match self {
            Body::MinorModel { .. } | Body::Embedding { .. } => &["host", "pattern"],
            Body::Subdivision { .. } | Body::LineGraph { .. } => &["host", "base"],
            _ => &["host"],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub format: String,
    pub version: u32,
    pub graphs: BTreeMap<String, String>,
    pub certificate: Body,
}

fn sets(v: &[BTreeSet<Vertex>]) -> Vec<Vec<Vertex>> {
    v.iter().map(|s| s.iter().copied().collect()).collect()
}

fn paths_of(p: &BTreeMap<(Vertex, Vertex), Vec<Vertex>>) -> Vec<(Vertex, Vertex, Vec<Vertex>)> {
    p.iter().map(|(&(u, v), p)| (u, v, p.clone())).collect()
}

fn paths_from(p: &[(Vertex, Vertex, Vec<Vertex>)]) -> BTreeMap<(Vertex, Vertex), Vec<Vertex>> {
    p.iter().map(|(u, v, p)| ((*u, *v), p.clone())).collect()
}

impl Certificate {
    fn new(graphs: &[(&str, &Graph)], body: Body) -> Certificate {
        let graphs = graphs.iter().map(|(r, g)| (r.to_string(), graph_hash(g))).collect();
        Certificate { format: FORMAT.into(), version: VERSION, graphs, certificate: body }
    }

    pub fn path_decomposition(host: &Graph, d: &PathDecomposition) -> Certificate {
        Certificate::new(&[("host", host)], Body::PathDecomposition { bags: sets(&d.bags) })
    }

    pub fn minor_model(host: &Graph, m: &MinorModel) -> Certificate {
        let branch_sets = m.branch_sets.iter().map(|(&p, s)| (p, s.iter().copied().collect())).collect();
        Certificate::new(&[("host", host), ("pattern", &m.pattern)], Body::MinorModel { induced: m.induced, branch_sets })
    }

    pub fn embedding(host: &Graph, e: &Embedding) -> Certificate {
        let map = e.map.iter().map(|(&a, &b)| (a, b)).collect();
        Certificate::new(&[("host", host), ("pattern", &e.pattern)], Body::Embedding { induced: e.induced, map })
    }

    pub fn subdivision(host: &Graph, s: &SubdivisionEmbedding) -> Certificate {
        let branch = s.map.branch.iter().map(|(&a, &b)| (a, b)).collect();
        Certificate::new(
            &[("host", host), ("base", &s.map.base)],
            Body::Subdivision { induced: s.induced, branch, paths: paths_of(&s.map.paths) },
        )
    }

    pub fn line_graph(host: &Graph, l: &LineGraphEmbedding) -> Certificate {
        let lengths = l.lengths.iter().map(|(&(u, v), &n)| (u, v, n)).collect();
        let edges = l.edges.iter().map(|(&(u, v), &x)| (u, v, x)).collect();
        Certificate::new(&[("host", host), ("base", &l.base)], Body::LineGraph { lengths, edges })
    }

    /// `host` is the graph the wattle sits in as an induced subgraph.
    pub fn wattle(host: &Graph, w: &WattleCertificate) -> Certificate {
        let branch = w.branch.iter().map(|(&v, b)| (v, b.vertices())).collect();
        Certificate::new(
            &[("host", host)],
            Body::Wattle { height: w.height(), triangles: w.triangles.iter().copied().collect(), branch, paths: paths_of(&w.paths) },
        )
    }

    pub fn partition(host: &Graph, p: &Distance5Partition) -> Certificate {
        Certificate::new(&[("host", host)], Body::Partition { classes: sets(&p.classes) })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serialises") + "\n"
    }

    pub fn from_json(text: &str) -> Result<Certificate> {
        let c: Certificate = serde_json::from_str(text).map_err(|e| Error::Parse { line: e.line(), msg: e.to_string() })?;
        if c.format != FORMAT || c.version != VERSION {
            return Err(Error::InvalidCertificate(format!("unsupported format {:?} version {}", c.format, c.version)));
        }
        Ok(c)
    }

    /// Hashes this certificate needs resolved, by role.
    pub fn references(&self) -> &BTreeMap<String, String> {
        &self.graphs
    }

    /// Re-validates against graphs looked up by content hash.
    pub fn verify(&self, resolve: &dyn Fn(&str) -> Option<Graph>) -> Result<()> {
        let bad = |m: String| Error::InvalidCertificate(m);
        let mut g: BTreeMap<&str, Graph> = BTreeMap::new();
        for &role in self.certificate.roles() {
            let hash = self.graphs.get(role).ok_or_else(|| bad(format!("missing graph reference {role:?}")))?;
            let graph = resolve(hash).ok_or_else(|| bad(format!("no graph with hash {hash} for role {role:?}")))?;
            if &graph_hash(&graph) != hash {
                return Err(bad(format!("graph for role {role:?} does not match its hash")));
            }
            g.insert(role, graph);
        }
        let host = &g["host"];
        match &self.certificate {
            Body::PathDecomposition { bags } => {
                let d = PathDecomposition { bags: bags.iter().map(|b| b.iter().copied().collect()).collect() };
                d.validate(host).map_err(bad)
            }
            Body::MinorModel { induced, branch_sets } => {
                let m = MinorModel {
                    pattern: g["pattern"].clone(),
                    branch_sets: branch_sets.iter().map(|(p, s)| (*p, s.iter().copied().collect())).collect(),
                    induced: *induced,
                };
                m.validate(host).map_err(|e| bad(e.to_string()))
            }
            Body::Embedding { induced, map } => {
                let e = Embedding { pattern: g["pattern"].clone(), map: map.iter().copied().collect(), induced: *induced };
                e.validate(host).map_err(bad)
            }
            Body::Subdivision { induced, branch, paths } => {
                let map = SubdivisionMap { base: g["base"].clone(), branch: branch.iter().copied().collect(), paths: paths_from(paths) };
                SubdivisionEmbedding { map, induced: *induced }.validate(host).map_err(bad)
            }
            Body::LineGraph { lengths, edges } => {
                let l = LineGraphEmbedding {
                    base: g["base"].clone(),
                    lengths: lengths.iter().map(|&(u, v, n)| ((u, v), n)).collect(),
                    edges: edges.iter().map(|&(u, v, x)| ((u, v), x)).collect(),
                };
                l.validate(host).map_err(bad)
            }
            Body::Wattle { height, triangles, branch, paths } => {
                let tri: BTreeSet<Vertex> = triangles.iter().copied().collect();
                let mut branch_map = BTreeMap::new();
                let mut used: BTreeSet<Vertex> = BTreeSet::new();
                for (v, xs) in branch {
                    let b = match xs.as_slice() {
                        [x] => Branch::Vertex(*x),
                        [a, b, c] => Branch::Triangle([*a, *b, *c]),
                        _ => return Err(bad(format!("branch image of {v} has {} vertices", xs.len()))),
                    };
                    used.extend(xs);
                    branch_map.insert(*v, b);
                }
                let paths = paths_from(paths);
                for p in paths.values() {
                    used.extend(p);
                }
                let w = WattleCertificate {
                    base: complete_binary_tree(*height),
                    triangles: tri,
                    host: host.induced_subgraph(&used).map_err(|e| bad(e.to_string()))?,
                    branch: branch_map,
                    paths,
                };
                w.validate_induced_in(host).map_err(bad)
            }
            Body::Partition { classes } => {
                let p = Distance5Partition { classes: classes.iter().map(|c| c.iter().copied().collect()).collect() };
                p.validate(host).map_err(bad)
            }
        }
    }
}
