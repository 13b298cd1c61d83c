//! Immutable simple graphs with stable vertex identifiers.
//!
//! Identifiers are opaque integers handed out in increasing order and never
//! reused within one graph value. Every operation that changes structure
//! returns a new [`Graph`] (plus a name map where vertices are created), so
//! certificates that reference identifiers stay valid.

mod io;
mod tree;

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::{Error, Result};

pub use io::{from_edge_list, from_graph6, to_edge_list, to_graph6};
pub use tree::RootedTree;

pub type Vertex = usize;

#[derive(Clone, Debug, Default)]
pub struct Graph {
    adj: BTreeMap<Vertex, BTreeSet<Vertex>>,
    next_id: Vertex,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj
    }
}

impl Eq for Graph {}

/// Incremental construction of a [`Graph`]; the only mutable entry point.
#[derive(Clone, Debug, Default)]
pub struct GraphBuilder {
    g: Graph,
}

impl GraphBuilder {
    pub fn new() -> Self {
        GraphBuilder::default()
    }

    /// Starts from an existing graph, keeping its identifier counter.
    pub fn from_graph(g: &Graph) -> Self {
        GraphBuilder { g: g.clone() }
    }

    /// Adds a vertex with the next unused identifier.
    pub fn fresh_vertex(&mut self) -> Vertex {
        let v = self.g.next_id;
        self.add_vertex(v);
        v
    }

    pub fn add_vertex(&mut self, v: Vertex) -> &mut Self {
        self.g.adj.entry(v).or_default();
        if v >= self.g.next_id {
            self.g.next_id = v + 1;
        }
        self
    }

    /// Adds the edge `uv`, creating missing endpoints. Loops are ignored.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> &mut Self {
        self.add_vertex(u);
        self.add_vertex(v);
        if u != v {
            self.g.adj.get_mut(&u).unwrap().insert(v);
            self.g.adj.get_mut(&v).unwrap().insert(u);
        }
        self
    }

    pub fn remove_vertex(&mut self, v: Vertex) -> &mut Self {
        if let Some(ns) = self.g.adj.remove(&v) {
            for u in ns {
                self.g.adj.get_mut(&u).unwrap().remove(&v);
            }
        }
        self
    }

    pub fn remove_edge(&mut self, u: Vertex, v: Vertex) -> &mut Self {
        if let Some(s) = self.g.adj.get_mut(&u) {
            s.remove(&v);
        }
        if let Some(s) = self.g.adj.get_mut(&v) {
            s.remove(&u);
        }
        self
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.g.adj.contains_key(&v)
    }

    pub fn build(self) -> Graph {
        self.g
    }
}

impl Graph {
    pub fn new() -> Self {
        Graph::default()
    }

    /// Graph on vertices `0..n` with the given edges.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Graph {
        let mut b = GraphBuilder::new();
        for v in 0..n {
            b.add_vertex(v);
        }
        for &(u, v) in edges {
            b.add_edge(u, v);
        }
        b.build()
    }

    pub fn from_parts(
        vertices: impl IntoIterator<Item = Vertex>,
        edges: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> Graph {
        let mut b = GraphBuilder::new();
        for v in vertices {
            b.add_vertex(v);
        }
        for (u, v) in edges {
            b.add_edge(u, v);
        }
        b.build()
    }

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Graph {
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        if n >= 3 {
            edges.push((n - 1, 0));
        }
        Graph::from_edges(n, &edges)
    }

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                edges.push((i, j));
            }
        }
        Graph::from_edges(n, &edges)
    }

    /// K_{a,b} with sides `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut edges = Vec::new();
        for i in 0..a {
            for j in a..a + b {
                edges.push((i, j));
            }
        }
        Graph::from_edges(a + b, &edges)
    }

    /// K_{1,m} with center 0.
    pub fn star(m: usize) -> Graph {
        let edges: Vec<_> = (1..=m).map(|i| (0, i)).collect();
        Graph::from_edges(m + 1, &edges)
    }

    pub fn edgeless(n: usize) -> Graph {
        Graph::from_edges(n, &[])
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.values().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    /// One past the largest identifier ever issued in this graph's lineage.
    pub fn next_id(&self) -> Vertex {
        self.next_id
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.adj.keys().copied()
    }

    pub fn vertex_set(&self) -> BTreeSet<Vertex> {
        self.adj.keys().copied().collect()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.adj.contains_key(&v)
    }

    /// Open neighbourhood N(v). Panics on unknown vertices.
    pub fn neighbors(&self, v: Vertex) -> &BTreeSet<Vertex> {
        &self.adj[&v]
    }

    pub fn try_neighbors(&self, v: Vertex) -> Result<&BTreeSet<Vertex>> {
        self.adj.get(&v).ok_or(Error::UnknownVertex(v))
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[&v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.values().map(|s| s.len()).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj.get(&u).is_some_and(|s| s.contains(&v))
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .flat_map(|(&u, ns)| ns.range(u + 1..).map(move |&v| (u, v)))
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<_> = self.adj.values().map(|s| s.len()).collect();
        d.sort_unstable();
        d
    }

    /// Distances from `src` to every vertex of its component.
    pub fn distances_from(&self, src: Vertex) -> BTreeMap<Vertex, usize> {
        self.distances_within(src, usize::MAX)
    }

    /// Distances from `src` to vertices at distance at most `radius`.
    pub fn distances_within(&self, src: Vertex, radius: usize) -> BTreeMap<Vertex, usize> {
        let mut dist = BTreeMap::new();
        if !self.contains(src) {
            return dist;
        }
        dist.insert(src, 0);
        let mut q = VecDeque::from([src]);
        while let Some(u) = q.pop_front() {
            let d = dist[&u];
            if d == radius {
                continue;
            }
            for &w in &self.adj[&u] {
                if let Entry::Vacant(e) = dist.entry(w) {
                    e.insert(d + 1);
                    q.push_back(w);
                }
            }
        }
        dist
    }

    pub fn distance(&self, u: Vertex, v: Vertex) -> Option<usize> {
        self.distances_from(u).get(&v).copied()
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<BTreeSet<Vertex>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for v in self.vertices() {
            if seen.contains(&v) {
                continue;
            }
            let comp: BTreeSet<_> = self.distances_from(v).into_keys().collect();
            seen.extend(comp.iter().copied());
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// True when `set` is nonempty and induces a connected subgraph.
    pub fn is_connected_set(&self, set: &BTreeSet<Vertex>) -> bool {
        let Some(&start) = set.iter().next() else {
            return false;
        };
        let mut seen = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            if let Some(ns) = self.adj.get(&u) {
                for &w in ns {
                    if set.contains(&w) && seen.insert(w) {
                        stack.push(w);
                    }
                }
            }
        }
        seen.len() == set.len()
    }

    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.components().len() == self.vertex_count()
    }

    pub fn is_tree(&self) -> bool {
        !self.is_empty() && self.is_connected() && self.edge_count() + 1 == self.vertex_count()
    }

    /// g[s], identifiers preserved.
    pub fn induced_subgraph(&self, s: &BTreeSet<Vertex>) -> Result<Graph> {
        if let Some(&v) = s.iter().find(|v| !self.contains(**v)) {
            return Err(Error::UnknownVertex(v));
        }
        let adj = s
            .iter()
            .map(|&v| (v, self.adj[&v].iter().copied().filter(|w| s.contains(w)).collect()))
            .collect();
        Ok(Graph { adj, next_id: self.next_id })
    }

    /// g − s.
    pub fn without(&self, s: &BTreeSet<Vertex>) -> Graph {
        let keep: BTreeSet<_> = self.vertices().filter(|v| !s.contains(v)).collect();
        self.induced_subgraph(&keep).expect("subset of own vertices")
    }

    /// Spanning subgraph keeping only the listed edges.
    pub fn with_edges(&self, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Graph {
        let mut g = Graph {
            adj: self.adj.keys().map(|&v| (v, BTreeSet::new())).collect(),
            next_id: self.next_id,
        };
        for (u, v) in edges {
            if u != v && g.adj.contains_key(&u) && g.adj.contains_key(&v) {
                g.adj.get_mut(&u).unwrap().insert(v);
                g.adj.get_mut(&v).unwrap().insert(u);
            }
        }
        g
    }

    /// Adds edges (and any missing endpoints).
    pub fn add_edges(&self, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Graph {
        let mut b = GraphBuilder::from_graph(self);
        for (u, v) in edges {
            b.add_edge(u, v);
        }
        b.build()
    }

    /// Relabels to `0..n` in ascending identifier order.
    pub fn canonical_relabel(&self) -> (Graph, BTreeMap<Vertex, Vertex>) {
        let map: BTreeMap<_, _> = self.vertices().enumerate().map(|(i, v)| (v, i)).collect();
        let edges: Vec<_> = self.edges().map(|(u, v)| (map[&u], map[&v])).collect();
        (Graph::from_edges(self.vertex_count(), &edges), map)
    }

    /// True when the identifiers are exactly `0..n`.
    pub fn is_dense(&self) -> bool {
        self.adj.keys().enumerate().all(|(i, &v)| i == v)
    }

    /// Disjoint union; `other`'s vertices are shifted past this graph's ids.
    /// Returns the shift applied.
    pub fn disjoint_union(&self, other: &Graph) -> (Graph, Vertex) {
        let shift = self.next_id;
        let mut b = GraphBuilder::from_graph(self);
        for v in other.vertices() {
            b.add_vertex(v + shift);
        }
        for (u, v) in other.edges() {
            b.add_edge(u + shift, v + shift);
        }
        (b.build(), shift)
    }
}

/// BFS layering V_0 = {root}, V_i = vertices at distance i.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Layering {
    pub root: Vertex,
    pub layers: Vec<BTreeSet<Vertex>>,
}

impl Layering {
    pub fn layer_of(&self, v: Vertex) -> Option<usize> {
        self.layers.iter().position(|l| l.contains(&v))
    }

    pub fn layer_index(&self) -> BTreeMap<Vertex, usize> {
        let mut m = BTreeMap::new();
        for (i, l) in self.layers.iter().enumerate() {
            for &v in l {
                m.insert(v, i);
            }
        }
        m
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.layers.iter().map(|l| l.len()).collect()
    }

    /// Checks the layering invariants against `g`.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        if self.layers.first() != Some(&BTreeSet::from([self.root])) {
            return false;
        }
        let idx = self.layer_index();
        let total: usize = self.layers.iter().map(|l| l.len()).sum();
        if total != idx.len() {
            return false;
        }
        let dist = g.distances_from(self.root);
        if dist.len() != idx.len() || dist.iter().any(|(v, d)| idx.get(v) != Some(d)) {
            return false;
        }
        g.edges()
            .filter(|(u, _)| idx.contains_key(u))
            .all(|(u, v)| idx[&u].abs_diff(idx[&v]) <= 1)
    }
}

/// BFS layering of the component of `root`.
pub fn bfs_layering(g: &Graph, root: Vertex) -> Result<Layering> {
    if !g.contains(root) {
        return Err(Error::UnknownVertex(root));
    }
    let dist = g.distances_from(root);
    let depth = dist.values().copied().max().unwrap_or(0);
    let mut layers = vec![BTreeSet::new(); depth + 1];
    for (v, d) in dist {
        layers[d].insert(v);
    }
    Ok(Layering { root, layers })
}

/// Like [`bfs_layering`] but fails when `g` is disconnected.
pub fn bfs_layering_connected(g: &Graph, root: Vertex) -> Result<Layering> {
    let l = bfs_layering(g, root)?;
    if l.layers.iter().map(|s| s.len()).sum::<usize>() != g.vertex_count() {
        return Err(Error::NotConnected);
    }
    Ok(l)
}

/// Length of a shortest cycle, `None` for forests.
///
/// BFS from every vertex; a non-tree edge met at depths `d(u)`, `d(w)` closes
/// a closed walk of length `d(u) + d(w) + 1` through the root, and the
/// minimum over all roots is the girth. Each BFS stops once it can no longer
/// beat the best cycle found so far.
pub fn girth(g: &Graph) -> Option<usize> {
    let mut best = usize::MAX;
    for root in g.vertices() {
        let mut dist: BTreeMap<Vertex, usize> = BTreeMap::from([(root, 0)]);
        let mut parent: BTreeMap<Vertex, Vertex> = BTreeMap::new();
        let mut q = VecDeque::from([root]);
        'bfs: while let Some(u) = q.pop_front() {
            let du = dist[&u];
            if 2 * du + 1 >= best {
                break;
            }
            for &w in g.neighbors(u) {
                match dist.get(&w) {
                    None => {
                        dist.insert(w, du + 1);
                        parent.insert(w, u);
                        q.push_back(w);
                    }
                    Some(&dw) => {
                        if parent.get(&u) != Some(&w) {
                            best = best.min(du + dw + 1);
                            if 2 * du + 1 >= best {
                                break 'bfs;
                            }
                        }
                    }
                }
            }
        }
    }
    (best != usize::MAX).then_some(best)
}

/// L(G): vertex `i` of the output is edge `names[i]` of `g`.
pub fn line_graph(g: &Graph) -> (Graph, Vec<(Vertex, Vertex)>) {
    let names: Vec<_> = g.edges().collect();
    let index: BTreeMap<_, _> = names.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let mut b = GraphBuilder::new();
    for i in 0..names.len() {
        b.add_vertex(i);
    }
    for v in g.vertices() {
        let inc: Vec<usize> = g
            .neighbors(v)
            .iter()
            .map(|&w| index[&(v.min(w), v.max(w))])
            .collect();
        for i in 0..inc.len() {
            for j in i + 1..inc.len() {
                b.add_edge(inc[i], inc[j]);
            }
        }
    }
    (b.build(), names)
}

/// Contracts each part to a single fresh vertex.
///
/// Parts must be disjoint and induce connected subgraphs. Vertices outside
/// every part keep their identifiers; the returned vector gives the new
/// identifier of each part in input order.
pub fn contract_sets(g: &Graph, parts: &[BTreeSet<Vertex>]) -> Result<(Graph, Vec<Vertex>)> {
    let mut owner: BTreeMap<Vertex, usize> = BTreeMap::new();
    for (i, p) in parts.iter().enumerate() {
        for &v in p {
            if !g.contains(v) {
                return Err(Error::UnknownVertex(v));
            }
            if owner.insert(v, i).is_some() {
                return Err(Error::OverlappingParts(v));
            }
        }
        if !g.is_connected_set(p) {
            return Err(Error::DisconnectedPart(i));
        }
    }
    let mut b = GraphBuilder::new();
    // Reserve the old id range so fresh ids never collide with survivors.
    let mut next = g.next_id();
    let new_ids: Vec<Vertex> = parts
        .iter()
        .map(|_| {
            next += 1;
            next - 1
        })
        .collect();
    let rep = |v: Vertex| owner.get(&v).map_or(v, |&i| new_ids[i]);
    for v in g.vertices() {
        b.add_vertex(rep(v));
    }
    for (u, v) in g.edges() {
        let (a, c) = (rep(u), rep(v));
        if a != c {
            b.add_edge(a, c);
        }
    }
    let mut out = b.build();
    out.next_id = out.next_id.max(next);
    Ok((out, new_ids))
}

/// Dense 0..n view used internally by the searches.
#[derive(Clone, Debug)]
pub(crate) struct Dense {
    pub ids: Vec<Vertex>,
    pub adj: Vec<Vec<usize>>,
}

impl Dense {
    pub fn new(g: &Graph) -> Dense {
        let ids: Vec<Vertex> = g.vertices().collect();
        let index: BTreeMap<_, _> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let adj = ids
            .iter()
            .map(|v| g.neighbors(*v).iter().map(|w| index[w]).collect())
            .collect();
        Dense { ids, adj }
    }

    pub fn n(&self) -> usize {
        self.ids.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_girth(g: &Graph) -> Option<usize> {
        // DFS over simple paths returning to the start vertex.
        let d = Dense::new(g);
        let mut best = None::<usize>;
        fn walk(d: &Dense, start: usize, u: usize, len: usize, on: &mut Vec<bool>, best: &mut Option<usize>) {
            for &w in &d.adj[u] {
                if w == start && len >= 3 {
                    *best = Some(best.map_or(len, |b| b.min(len)));
                } else if !on[w] && w > start {
                    on[w] = true;
                    walk(d, start, w, len + 1, on, best);
                    on[w] = false;
                }
            }
        }
        for s in 0..d.n() {
            let mut on = vec![false; d.n()];
            on[s] = true;
            walk(&d, s, s, 1, &mut on, &mut best);
        }
        best
    }

    #[test]
    fn girth_examples() {
        assert_eq!(girth(&Graph::complete(3)), Some(3));
        assert_eq!(girth(&Graph::path(6)), None);
        assert_eq!(girth(&Graph::star(5)), None);
        assert_eq!(girth(&Graph::cycle(7)), Some(7));
        assert_eq!(girth(&Graph::complete_bipartite(2, 3)), Some(4));
        assert_eq!(brute_girth(&Graph::complete_bipartite(2, 3)), Some(4));
    }

    #[test]
    fn line_graph_examples() {
        let (l, names) = line_graph(&Graph::path(4));
        assert_eq!(names.len(), 3);
        assert_eq!((l.vertex_count(), l.edge_count()), (3, 2));
        let (l, _) = line_graph(&Graph::star(3));
        assert_eq!(l, Graph::complete(3));
        // fork with arm lengths (2,1,1): center 0, arms 0-1-2, 0-3, 0-4
        let fork = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 3), (0, 4)]);
        let (l, names) = line_graph(&fork);
        assert_eq!((l.vertex_count(), l.edge_count()), (4, 4));
        let pendant = names.iter().position(|&e| e == (1, 2)).unwrap();
        assert_eq!(l.degree(pendant), 1);
        let tri: Vec<_> = l.vertices().filter(|&v| v != pendant).collect();
        assert!(tri.iter().all(|&a| tri.iter().all(|&b| a == b || l.has_edge(a, b))));
    }

    #[test]
    fn induced_subgraph_examples() {
        let k4 = Graph::complete(4);
        let s = BTreeSet::from([0, 2, 3]);
        let h = k4.induced_subgraph(&s).unwrap();
        assert_eq!(h.edge_count(), 3);
        assert_eq!(h.vertex_set(), s);
        assert!(k4.induced_subgraph(&BTreeSet::new()).unwrap().is_empty());
        let c6 = Graph::cycle(6);
        let h = c6.induced_subgraph(&BTreeSet::from([0, 2, 4])).unwrap();
        assert_eq!((h.vertex_count(), h.edge_count()), (3, 0));
        assert_eq!(k4.induced_subgraph(&BTreeSet::from([9])), Err(Error::UnknownVertex(9)));
    }

    #[test]
    fn contract_examples() {
        let p3 = Graph::path(3);
        let (c, ids) = contract_sets(&p3, &[BTreeSet::from([0, 1])]).unwrap();
        assert_eq!((c.vertex_count(), c.edge_count()), (2, 1));
        assert!(c.has_edge(ids[0], 2));
        let (c, _) = contract_sets(&Graph::complete(3), &[BTreeSet::from([0, 1])]).unwrap();
        assert_eq!((c.vertex_count(), c.edge_count()), (2, 1));
        assert_eq!(
            contract_sets(&p3, &[BTreeSet::from([0, 1]), BTreeSet::from([1, 2])]),
            Err(Error::OverlappingParts(1))
        );
        assert_eq!(contract_sets(&p3, &[BTreeSet::from([0, 2])]), Err(Error::DisconnectedPart(0)));
    }

    #[test]
    fn layering_examples() {
        let l = bfs_layering(&Graph::from_edges(1, &[]), 0).unwrap();
        assert_eq!(l.layers, vec![BTreeSet::from([0])]);
        assert_eq!(bfs_layering(&Graph::path(2), 7), Err(Error::UnknownVertex(7)));
        let two = Graph::edgeless(2);
        assert_eq!(bfs_layering_connected(&two, 0), Err(Error::NotConnected));
        assert_eq!(bfs_layering(&two, 0).unwrap().layers.len(), 1);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
            (1..=max_n).prop_flat_map(|n| {
                proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                    let mut edges = Vec::new();
                    let mut k = 0;
                    for i in 0..n {
                        for j in i + 1..n {
                            if bits[k] {
                                edges.push((i, j));
                            }
                            k += 1;
                        }
                    }
                    Graph::from_edges(n, &edges)
                })
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(200))]

            #[test]
            fn girth_matches_cycle_enumeration(g in arb_graph(10)) {
                prop_assert_eq!(girth(&g), brute_girth(&g));
            }

            #[test]
            fn line_graph_edge_formula(g in arb_graph(10)) {
                let (l, names) = line_graph(&g);
                prop_assert_eq!(names.len(), g.edge_count());
                let expect: usize = g.vertices().map(|v| { let d = g.degree(v); d * d.saturating_sub(1) / 2 }).sum();
                prop_assert_eq!(l.edge_count(), expect);
            }

            #[test]
            fn layering_partitions_component(g in arb_graph(10)) {
                let root = 0;
                let l = bfs_layering(&g, root).unwrap();
                prop_assert!(l.is_valid_for(&g));
                let comp = g.components().into_iter().find(|c| c.contains(&root)).unwrap();
                let all: BTreeSet<_> = l.layers.iter().flatten().copied().collect();
                prop_assert_eq!(all, comp);
            }

            #[test]
            fn singleton_contraction_is_identity(g in arb_graph(9)) {
                let parts: Vec<_> = g.vertices().map(|v| BTreeSet::from([v])).collect();
                let (c, ids) = contract_sets(&g, &parts).unwrap();
                let back: BTreeMap<Vertex, Vertex> = ids.iter().enumerate().map(|(i, &n)| (n, i)).collect();
                let renamed = Graph::from_parts(c.vertices().map(|v| back[&v]), c.edges().map(|(a, b)| (back[&a], back[&b])));
                prop_assert_eq!(renamed, g);
            }
        }
    }
}
