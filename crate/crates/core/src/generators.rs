//! Named graph families, each returned with a certificate of its structure.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::graph::{bfs_layering, Graph, GraphBuilder, Layering, RootedTree, Vertex};

/// Complete binary tree T_k in heap numbering: root 0, children of `i` are
/// `2i+1` (left) and `2i+2` (right).
pub fn complete_binary_tree(k: usize) -> RootedTree {
    let n = (1usize << (k + 1)) - 1;
    let edges: Vec<_> = (1..n).map(|i| ((i - 1) / 2, i)).collect();
    RootedTree::new(Graph::from_edges(n, &edges), 0).expect("heap tree")
}

/// T_k^+: T_{k+1} plus a pendant leaf (id `2^{k+2} - 1`) at the root.
///
/// T_k sits inside as the vertices `0..2^{k+1}-1`, each of degree >= 3.
pub fn binary_tree_plus(k: usize) -> RootedTree {
    let n = (1usize << (k + 2)) - 1;
    let mut edges: Vec<_> = (1..n).map(|i| ((i - 1) / 2, i)).collect();
    edges.push((0, n));
    RootedTree::new(Graph::from_edges(n + 1, &edges), 0).expect("tree")
}

/// 𝒯_k: every internal node has `k` children, every leaf at depth `k`.
/// Children of `i` are `k*i + 1 ..= k*i + k`.
pub fn k_ary_tree(k: usize) -> Result<RootedTree> {
    if k == 0 {
        return Err(Error::Precondition("k-ary tree needs k >= 1".into()));
    }
    let mut n = 0usize;
    let mut level = 1usize;
    for _ in 0..=k {
        n += level;
        level *= k;
    }
    let edges: Vec<_> = (1..n).map(|i| ((i - 1) / k, i)).collect();
    Ok(RootedTree::new(Graph::from_edges(n, &edges), 0).expect("tree"))
}

/// Whether `t` is a complete binary tree of its height.
pub fn is_complete_binary(t: &RootedTree) -> bool {
    let h = t.height();
    t.graph().vertices().all(|v| {
        let c = t.children(v).len();
        if t.depth(v) == h {
            c == 0
        } else {
            c == 2
        }
    })
}

fn norm(u: Vertex, v: Vertex) -> (Vertex, Vertex) {
    (u.min(v), u.max(v))
}

/// Subdivision of a base graph inside a host: where each base vertex went
/// and which host path replaced each base edge.
///
/// `paths[(u, v)]` runs from the image of `u` to the image of `v`; each base
/// edge appears once, in either orientation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubdivisionMap {
    pub base: Graph,
    pub branch: BTreeMap<Vertex, Vertex>,
    pub paths: BTreeMap<(Vertex, Vertex), Vec<Vertex>>,
}

/// How the image of a [`SubdivisionMap`] must sit inside its host.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Containment {
    /// The image is a subgraph.
    Subgraph,
    /// The image is an induced subgraph.
    Induced,
    /// The image is the whole host.
    Exact,
}

impl SubdivisionMap {
    pub fn image(&self) -> BTreeSet<Vertex> {
        let mut s: BTreeSet<Vertex> = self.branch.values().copied().collect();
        for p in self.paths.values() {
            s.extend(p.iter().copied());
        }
        s
    }

    pub fn image_edges(&self) -> BTreeSet<(Vertex, Vertex)> {
        self.paths
            .values()
            .flat_map(|p| p.windows(2).map(|w| norm(w[0], w[1])))
            .collect()
    }

    pub fn path(&self, u: Vertex, v: Vertex) -> Option<Vec<Vertex>> {
        if let Some(p) = self.paths.get(&(u, v)) {
            return Some(p.clone());
        }
        self.paths.get(&(v, u)).map(|p| p.iter().rev().copied().collect())
    }

    pub fn validate(&self, host: &Graph, mode: Containment) -> std::result::Result<(), String> {
        let base_vs = self.base.vertex_set();
        if self.branch.keys().copied().collect::<BTreeSet<_>>() != base_vs {
            return Err("branch map does not cover exactly the base vertices".into());
        }
        let mut seen_edges = BTreeSet::new();
        for &(u, v) in self.paths.keys() {
            if !self.base.has_edge(u, v) {
                return Err(format!("path for non-edge {u}-{v}"));
            }
            if !seen_edges.insert(norm(u, v)) {
                return Err(format!("edge {u}-{v} has two paths"));
            }
        }
        if seen_edges.len() != self.base.edge_count() {
            return Err("some base edge has no path".into());
        }
        let mut used: BTreeMap<Vertex, String> = BTreeMap::new();
        for (&b, &h) in &self.branch {
            if !host.contains(h) {
                return Err(format!("branch image {h} not in host"));
            }
            if used.insert(h, format!("branch {b}")).is_some() {
                return Err(format!("host vertex {h} used twice"));
            }
        }
        for (&(u, v), p) in &self.paths {
            if p.len() < 2 || p[0] != self.branch[&u] || p[p.len() - 1] != self.branch[&v] {
                return Err(format!("path {u}-{v} has wrong endpoints"));
            }
            for w in p.windows(2) {
                if !host.has_edge(w[0], w[1]) {
                    return Err(format!("path {u}-{v} uses non-edge {}-{}", w[0], w[1]));
                }
            }
            for &x in &p[1..p.len() - 1] {
                if !host.contains(x) {
                    return Err(format!("vertex {x} not in host"));
                }
                if let Some(prev) = used.insert(x, format!("path {u}-{v}")) {
                    return Err(format!("host vertex {x} shared by path {u}-{v} and {prev}"));
                }
            }
        }
        match mode {
            Containment::Subgraph => Ok(()),
            Containment::Induced | Containment::Exact => {
                let img = self.image();
                if mode == Containment::Exact && img != host.vertex_set() {
                    return Err("image is not the whole host".into());
                }
                let want = self.image_edges();
                let sub = host.induced_subgraph(&img).map_err(|e| e.to_string())?;
                for e in sub.edges() {
                    if !want.contains(&e) {
                        return Err(format!("extra host edge {}-{} inside the image", e.0, e.1));
                    }
                }
                Ok(())
            }
        }
    }
}

/// Edge lengths keyed by `(min, max)`.
pub type Lengths = BTreeMap<(Vertex, Vertex), usize>;

pub fn uniform_lengths(g: &Graph, len: usize) -> Lengths {
    g.edges().map(|e| (e, len)).collect()
}

/// Replaces each edge `uv` by a path with `lengths[uv]` edges.
///
/// Original vertices keep their identifiers; new vertices are numbered from
/// `t.next_id()` edge by edge, walking from the smaller endpoint.
pub fn subdivide(t: &Graph, lengths: &Lengths) -> Result<(Graph, SubdivisionMap)> {
    let mut b = GraphBuilder::new();
    for v in t.vertices() {
        b.add_vertex(v);
    }
    let mut next = t.next_id();
    let mut paths = BTreeMap::new();
    for (u, v) in t.edges() {
        let len = *lengths.get(&(u, v)).ok_or(Error::MissingLength(u, v))?;
        if len == 0 {
            return Err(Error::Precondition(format!("edge {u}-{v} has length 0")));
        }
        let mut p = vec![u];
        for _ in 1..len {
            p.push(next);
            next += 1;
        }
        p.push(v);
        for w in p.windows(2) {
            b.add_edge(w[0], w[1]);
        }
        paths.insert((u, v), p);
    }
    let branch = t.vertices().map(|v| (v, v)).collect();
    Ok((b.build(), SubdivisionMap { base: t.clone(), branch, paths }))
}

/// Result of a net-graph replacement: `triangle[i]` is wired to `attachments[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NetReplacement {
    pub removed: Vertex,
    pub triangle: [Vertex; 3],
    pub attachments: [Vertex; 3],
}

/// Replaces a degree-3 vertex by a triangle, one triangle vertex per old
/// neighbour (neighbours in ascending order, new ids in ascending order).
pub fn net_graph_replacement(g: &Graph, v: Vertex) -> Result<(Graph, NetReplacement)> {
    let ns: Vec<Vertex> = g.try_neighbors(v)?.iter().copied().collect();
    if ns.len() != 3 {
        return Err(Error::Degree { vertex: v, degree: ns.len(), expected: 3 });
    }
    let mut b = GraphBuilder::from_graph(g);
    b.remove_vertex(v);
    let tri = [b.fresh_vertex(), b.fresh_vertex(), b.fresh_vertex()];
    b.add_edge(tri[0], tri[1]).add_edge(tri[1], tri[2]).add_edge(tri[0], tri[2]);
    for i in 0..3 {
        b.add_edge(tri[i], ns[i]);
    }
    Ok((b.build(), NetReplacement { removed: v, triangle: tri, attachments: [ns[0], ns[1], ns[2]] }))
}

/// Image of a base vertex inside a wattle.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Branch {
    Vertex(Vertex),
    Triangle([Vertex; 3]),
}

impl Branch {
    pub fn vertices(&self) -> Vec<Vertex> {
        match self {
            Branch::Vertex(v) => vec![*v],
            Branch::Triangle(t) => t.to_vec(),
        }
    }

    pub fn contains(&self, x: Vertex) -> bool {
        match self {
            Branch::Vertex(v) => *v == x,
            Branch::Triangle(t) => t.contains(&x),
        }
    }
}

/// A wattle: a subdivided T_k with net-graph replacements at the base
/// vertices in `triangles`.
///
/// `paths[(parent, child)]` runs from the host vertex of the parent's image
/// attached to that edge to the attached vertex of the child's image.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WattleCertificate {
    pub base: RootedTree,
    pub triangles: BTreeSet<Vertex>,
    pub host: Graph,
    pub branch: BTreeMap<Vertex, Branch>,
    pub paths: BTreeMap<(Vertex, Vertex), Vec<Vertex>>,
}

impl WattleCertificate {
    pub fn height(&self) -> usize {
        self.base.height()
    }

    /// Host vertex of `v`'s image where the path along base edge `v-w` starts.
    pub fn attachment(&self, v: Vertex, w: Vertex) -> Vertex {
        if let Some(p) = self.paths.get(&(v, w)) {
            p[0]
        } else {
            *self.paths[&(w, v)].last().unwrap()
        }
    }

    /// Host walk along base edge `v-w`, from `v`'s attachment to `w`'s.
    pub fn path(&self, v: Vertex, w: Vertex) -> Vec<Vertex> {
        if let Some(p) = self.paths.get(&(v, w)) {
            p.clone()
        } else {
            self.paths[&(w, v)].iter().rev().copied().collect()
        }
    }

    pub fn validate(&self) -> std::result::Result<(), String> {
        let t = &self.base;
        if !is_complete_binary(t) {
            return Err("base is not a complete binary tree".into());
        }
        for &x in &self.triangles {
            if !t.graph().contains(x) || t.graph().degree(x) != 3 {
                return Err(format!("triangle at base vertex {x}, which does not have degree 3"));
            }
        }
        if self.branch.keys().copied().collect::<BTreeSet<_>>() != t.graph().vertex_set() {
            return Err("branch map does not cover the base".into());
        }
        let mut owner: BTreeMap<Vertex, String> = BTreeMap::new();
        let mut want_edges: BTreeSet<(Vertex, Vertex)> = BTreeSet::new();
        for (&v, b) in &self.branch {
            match (b, self.triangles.contains(&v)) {
                (Branch::Triangle(tri), true) => {
                    want_edges.insert(norm(tri[0], tri[1]));
                    want_edges.insert(norm(tri[1], tri[2]));
                    want_edges.insert(norm(tri[0], tri[2]));
                }
                (Branch::Vertex(_), false) => {}
                _ => return Err(format!("branch kind of base vertex {v} disagrees with the triangle set")),
            }
            for x in b.vertices() {
                if owner.insert(x, format!("branch {v}")).is_some() {
                    return Err(format!("host vertex {x} reused"));
                }
            }
        }
        let base_edges: BTreeSet<_> = t.graph().edges().collect();
        let keyed: BTreeSet<_> = self.paths.keys().map(|&(a, b)| norm(a, b)).collect();
        if keyed != base_edges || self.paths.len() != base_edges.len() {
            return Err("paths do not match the base edges".into());
        }
        let mut attached: BTreeMap<Vertex, BTreeSet<Vertex>> = BTreeMap::new();
        for (&(u, v), p) in &self.paths {
            if p.len() < 2 {
                return Err(format!("path {u}-{v} too short"));
            }
            if !self.branch[&u].contains(p[0]) || !self.branch[&v].contains(p[p.len() - 1]) {
                return Err(format!("path {u}-{v} does not join its branch images"));
            }
            attached.entry(u).or_default().insert(p[0]);
            attached.entry(v).or_default().insert(p[p.len() - 1]);
            for w in p.windows(2) {
                want_edges.insert(norm(w[0], w[1]));
            }
            for &x in &p[1..p.len() - 1] {
                if owner.insert(x, format!("path {u}-{v}")).is_some() {
                    return Err(format!("host vertex {x} reused"));
                }
            }
        }
        for &x in &self.triangles {
            if attached.get(&x).map_or(0, |s| s.len()) != 3 {
                return Err(format!("triangle at {x} is not attached once per incident path"));
            }
        }
        if owner.keys().copied().collect::<BTreeSet<_>>() != self.host.vertex_set() {
            return Err("host has vertices outside the wattle".into());
        }
        let have: BTreeSet<_> = self.host.edges().collect();
        if have != want_edges {
            return Err("host edges differ from the wattle's edges".into());
        }
        Ok(())
    }

    /// The host sits in `g` as an induced subgraph with the same identifiers.
    pub fn validate_induced_in(&self, g: &Graph) -> std::result::Result<(), String> {
        self.validate()?;
        let sub = g.induced_subgraph(&self.host.vertex_set()).map_err(|e| e.to_string())?;
        if sub != self.host {
            return Err("wattle is not induced in the host graph".into());
        }
        Ok(())
    }
}

/// Subdivides T_k (`lengths` per `(parent, child)`, default 1) and performs a
/// net-graph replacement at every base vertex in `x`.
pub fn wattle(k: usize, lengths: &Lengths, x: &BTreeSet<Vertex>) -> Result<WattleCertificate> {
    let t = complete_binary_tree(k);
    for &v in x {
        if !t.graph().contains(v) {
            return Err(Error::UnknownVertex(v));
        }
        let d = t.graph().degree(v);
        if d != 3 {
            return Err(Error::Degree { vertex: v, degree: d, expected: 3 });
        }
    }
    let mut full = uniform_lengths(t.graph(), 1);
    for (&e, &l) in lengths {
        if !full.contains_key(&e) {
            return Err(Error::Precondition(format!("{}-{} is not a base edge", e.0, e.1)));
        }
        full.insert(e, l);
    }
    let (mut host, sub) = subdivide(t.graph(), &full)?;
    let mut tri: BTreeMap<Vertex, [Vertex; 3]> = BTreeMap::new();
    for &v in x {
        let (h, rep) = net_graph_replacement(&host, v)?;
        host = h;
        tri.insert(v, rep.triangle);
    }
    // Image set of an original path element after all replacements.
    let image_of = |y: Vertex| -> Vec<Vertex> { tri.get(&y).map_or(vec![y], |t| t.to_vec()) };
    let attach = |host: &Graph, v: Vertex, next: Vertex| -> Vertex {
        let targets = image_of(next);
        *tri[&v]
            .iter()
            .find(|&&a| targets.iter().any(|&b| host.has_edge(a, b)))
            .expect("triangle vertex wired toward the path")
    };
    let mut paths = BTreeMap::new();
    for (&(u, v), p) in &sub.paths {
        let mut q = p.clone();
        let n = q.len();
        if tri.contains_key(&u) {
            q[0] = attach(&host, u, p[1]);
        }
        if tri.contains_key(&v) {
            q[n - 1] = attach(&host, v, p[n - 2]);
        }
        // Unit-length edge between two triangles: both ends rewired above,
        // but each attach looked at the other's full triangle, which is right.
        paths.insert((u, v), q);
    }
    let branch = t
        .graph()
        .vertices()
        .map(|v| (v, tri.get(&v).map_or(Branch::Vertex(v), |t| Branch::Triangle(*t))))
        .collect();
    Ok(WattleCertificate { base: t, triangles: x.clone(), host, branch, paths })
}

/// The layered tree used to show large pathwidth without the usual
/// unavoidable induced subgraphs.
#[derive(Clone, Debug)]
pub struct HatTree {
    pub graph: Graph,
    /// Branch vertices of the embedded subdivision of T_{2k}.
    pub x: BTreeSet<Vertex>,
    /// BFS layering from the root (shared by the subdivision and the host).
    pub layering: Layering,
    /// The subdivided T_{2k} as a subgraph of `graph`.
    pub subdivision: SubdivisionMap,
    pub base: RootedTree,
}

/// Builds the hat tree for parameter `k`.
///
/// Branch vertex `v` of T_{2k} sits at BFS depth `3 * preorder(v)`, so depths
/// grow along root-leaf paths and any two branch vertices are at least three
/// layers apart. Every branch vertex is then joined to all other vertices of
/// its layer.
pub fn hat_tree(k: usize) -> HatTree {
    let base = complete_binary_tree(2 * k);
    let pre: BTreeMap<Vertex, usize> = base.preorder().into_iter().enumerate().map(|(i, v)| (v, i)).collect();
    let lengths: Lengths = base
        .graph()
        .edges()
        .map(|(u, v)| ((u, v), 3 * (pre[&v] - pre[&u])))
        .collect();
    let (star, sub) = subdivide(base.graph(), &lengths).expect("all lengths set");
    let layering = bfs_layering(&star, base.root()).expect("root present");
    let x: BTreeSet<Vertex> = base.graph().vertex_set();
    let mut b = GraphBuilder::from_graph(&star);
    for layer in &layering.layers {
        for &u in layer.iter().filter(|u| x.contains(u)) {
            for &y in layer {
                if y != u {
                    b.add_edge(u, y);
                }
            }
        }
    }
    HatTree { graph: b.build(), x, layering, subdivision: sub, base }
}
