use std::collections::BTreeMap;

use super::wattle::minor_to_wattle;
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::generators::{complete_binary_tree, is_complete_binary, subdivide, SubdivisionMap, WattleCertificate};
use crate::generators::{Branch, Containment};
use crate::graph::{Graph, RootedTree, Vertex};
use crate::minors::MinorModel;
use crate::patterns::{LineGraphEmbedding, SubdivisionEmbedding};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Colour {
    Red,
    Blue,
}

impl Colour {
    pub fn other(self) -> Colour {
        match self {
            Colour::Red => Colour::Blue,
            Colour::Blue => Colour::Red,
        }
    }
}

pub type TwoColoring = BTreeMap<Vertex, Colour>;

/// Height of a 2-coloured complete binary tree that forces a monochromatic
/// vertically embedded T_k.
pub fn mono_height(k: usize) -> usize {
    (k * k + 5 * k) / 2
}

/// Height of the induced minor that forces an induced subdivision of T_k or
/// the line graph of one.
pub fn minor_height(k: usize) -> usize {
    4 * mono_height(k)
}

/// A subdivision of T_k (heap identifiers) inside a rooted tree whose root
/// image is an ancestor of every image vertex, with all branch images in
/// one colour.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerticalEmbedding {
    pub colour: Colour,
    pub map: SubdivisionMap,
}

impl VerticalEmbedding {
    pub fn root_image(&self) -> Vertex {
        self.map.branch[&0]
    }

    pub fn validate(&self, t: &RootedTree, colouring: &TwoColoring) -> std::result::Result<(), String> {
        if !is_complete_binary(&RootedTree::new(self.map.base.clone(), 0).map_err(|e| e.to_string())?) {
            return Err("base is not a complete binary tree rooted at 0".into());
        }
        self.map.validate(t.graph(), Containment::Induced)?;
        for (&b, &x) in &self.map.branch {
            if colouring.get(&x) != Some(&self.colour) {
                return Err(format!("branch image {x} of {b} is not {:?}", self.colour));
            }
        }
        for &(p, c) in self.map.paths.keys() {
            let (p, c) = if p < c { (p, c) } else { (c, p) };
            if !t.is_ancestor(self.map.branch[&p], self.map.branch[&c]) {
                return Err(format!("image of {c} is not below the image of {p}"));
            }
        }
        Ok(())
    }
}

fn level_of(t: &RootedTree, v: Vertex, d: usize) -> Vec<Vertex> {
    let mut level = vec![v];
    for _ in 0..d {
        level = level.iter().flat_map(|&x| t.children(x).iter().copied()).collect();
    }
    level
}

fn descend(t: &RootedTree, mut v: Vertex, d: usize, pos: usize) -> Vertex {
    for bit in (0..d).rev() {
        v = t.children(v)[(pos >> bit) & 1];
    }
    v
}

fn heap_pos(id: usize) -> (usize, usize) {
    let d = (usize::BITS - 1 - (id + 1).leading_zeros()) as usize;
    (d, id + 1 - (1 << d))
}

fn join(root: Vertex, left: &[Vertex], right: &[Vertex]) -> Vec<Vertex> {
    let mut out = vec![0; 2 * left.len() + 1];
    out[0] = root;
    for (id, (&l, &r)) in left.iter().zip(right).enumerate() {
        let (d, p) = heap_pos(id);
        let base = (1 << (d + 1)) - 1;
        out[base + p] = l;
        out[base + (1 << d) + p] = r;
    }
    out
}

/// Monochromatic T_k inside the subtree of `v`, which has height at least
/// `mono_height(k)`. Returns its colour and the image of each heap id.
fn rec(t: &RootedTree, col: &TwoColoring, v: Vertex, k: usize) -> (Colour, Vec<Vertex>) {
    let c = col[&v];
    if k == 0 {
        return (c, vec![v]);
    }
    let (lc, rc) = (t.children(v)[0], t.children(v)[1]);
    let solve = |side: Vertex| -> Vec<(Vertex, Colour, Vec<Vertex>)> {
        level_of(t, side, k + 1)
            .into_iter()
            .map(|r| {
                let (cc, img) = rec(t, col, r, k - 1);
                (r, cc, img)
            })
            .collect()
    };
    let (left, right) = (solve(lc), solve(rc));
    let first = |trees: &[(Vertex, Colour, Vec<Vertex>)], want: Colour| trees.iter().find(|x| x.1 == want).cloned();
    if let (Some(l), Some(r)) = (first(&left, c), first(&right, c)) {
        return (c, join(v, &l.2, &r.2));
    }
    let (side, trees) = if left.iter().all(|x| x.1 != c) { (lc, &left) } else { (rc, &right) };
    // A vertex of the other colour near the top of that side roots a tree
    // built from two of its subtrees.
    for d in 0..=k {
        if let Some(r) = level_of(t, side, d).into_iter().find(|x| col[x] != c) {
            let below = k - d;
            let pick = |child: Vertex| {
                let roots = level_of(t, child, below);
                trees.iter().find(|x| x.0 == roots[0]).expect("subtree under r").2.clone()
            };
            let (a, b) = (pick(t.children(r)[0]), pick(t.children(r)[1]));
            return (c.other(), join(r, &a, &b));
        }
    }
    // Otherwise the top k+1 levels of that side are all in colour c.
    let n = (1 << (k + 1)) - 1;
    (c, (0..n).map(|id| {
        let (d, p) = heap_pos(id);
        descend(t, side, d, p)
    }).collect())
}

/// Finds a monochromatic T_k embedded vertically in a 2-coloured complete
/// binary tree of height at least `(k² + 5k) / 2`.
pub fn monochromatic_cbt(t: &RootedTree, colouring: &TwoColoring, k: usize) -> Result<VerticalEmbedding> {
    if !is_complete_binary(t) {
        return Err(Error::Precondition("host is not a complete binary tree".into()));
    }
    if let Some(v) = t.graph().vertices().find(|v| !colouring.contains_key(v)) {
        return Err(Error::Precondition(format!("vertex {v} has no colour")));
    }
    let need = mono_height(k);
    if t.height() < need {
        return Err(Error::InsufficientHeight { have: t.height(), need });
    }
    let (colour, img) = rec(t, colouring, t.root(), k);
    let base = complete_binary_tree(k).into_graph();
    let paths = base.edges().map(|(p, c)| ((p, c), t.path_between(img[p], img[c]))).collect();
    let branch = img.iter().enumerate().map(|(i, &x)| (i, x)).collect();
    Ok(VerticalEmbedding { colour, map: SubdivisionMap { base, branch, paths } })
}

/// An induced subdivision of T_k, or the line graph of one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InducedTreeCert {
    Subdivision(SubdivisionEmbedding),
    LineGraph(LineGraphEmbedding),
}

impl InducedTreeCert {
    pub fn validate(&self, host: &Graph) -> std::result::Result<(), String> {
        match self {
            InducedTreeCert::Subdivision(s) if s.induced => s.validate(host),
            InducedTreeCert::Subdivision(_) => Err("subdivision is not marked induced".into()),
            InducedTreeCert::LineGraph(l) => l.validate(host),
        }
    }

    pub fn vertices(&self) -> std::collections::BTreeSet<Vertex> {
        match self {
            InducedTreeCert::Subdivision(s) => s.map.image(),
            InducedTreeCert::LineGraph(l) => l.edges.values().copied().collect(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            InducedTreeCert::Subdivision(_) => "subdivision",
            InducedTreeCert::LineGraph(_) => "line-graph",
        }
    }
}

/// Host walk along the base path `nodes`, passing through triangles on the way.
fn walk(w: &WattleCertificate, nodes: &[Vertex]) -> Vec<Vertex> {
    let mut out: Vec<Vertex> = Vec::new();
    for pair in nodes.windows(2) {
        let seg = w.path(pair[0], pair[1]);
        let skip = usize::from(out.last() == Some(&seg[0]));
        out.extend(&seg[skip..]);
    }
    out
}

/// Colours the wattle's base (triangles red, the rest blue), takes a
/// monochromatic T_k and reads off an induced subdivision (blue) or the line
/// graph of a subdivision (red).
pub fn wattle_to_subgraph(w: &WattleCertificate, k: usize) -> Result<InducedTreeCert> {
    w.validate().map_err(Error::Precondition)?;
    let colouring: TwoColoring = w
        .base
        .graph()
        .vertices()
        .map(|v| (v, if w.triangles.contains(&v) { Colour::Red } else { Colour::Blue }))
        .collect();
    let mono = monochromatic_cbt(&w.base, &colouring, k)?;
    let base = mono.map.base.clone();
    let walks: BTreeMap<(Vertex, Vertex), Vec<Vertex>> =
        mono.map.paths.iter().map(|(&e, nodes)| (e, walk(w, nodes))).collect();
    let out = match mono.colour {
        Colour::Blue => {
            let branch = mono
                .map
                .branch
                .iter()
                .map(|(&b, x)| match &w.branch[x] {
                    Branch::Vertex(h) => (b, *h),
                    Branch::Triangle(_) => unreachable!("blue base vertices are single vertices"),
                })
                .collect();
            InducedTreeCert::Subdivision(SubdivisionEmbedding { map: SubdivisionMap { base, branch, paths: walks }, induced: true })
        }
        Colour::Red => {
            let lengths = walks.iter().map(|(&e, p)| (e, p.len())).collect();
            let (_, sub) = subdivide(&base, &lengths)?;
            let mut edges = BTreeMap::new();
            for (e, p) in &sub.paths {
                let host = &walks[e];
                for (i, pair) in p.windows(2).enumerate() {
                    edges.insert((pair[0].min(pair[1]), pair[0].max(pair[1])), host[i]);
                }
            }
            InducedTreeCert::LineGraph(LineGraphEmbedding { base, lengths, edges })
        }
    };
    out.validate(&w.host).map_err(|e| Error::Internal(format!("monochromatic tree read-off: {e}")))?;
    Ok(out)
}

/// From an induced minor model of T_{2k² + 10k} (heap identifiers) to an
/// induced subdivision of T_k or the line graph of one.
pub fn induced_minor_to_induced_subgraph(g: &Graph, m: &MinorModel, k: usize, budget: &mut Budget) -> Result<InducedTreeCert> {
    let w = minor_to_wattle(g, m, mono_height(k), budget)?;
    let out = wattle_to_subgraph(&w, k)?;
    out.validate(g).map_err(|e| Error::Internal(format!("composed certificate: {e}")))?;
    Ok(out)
}
