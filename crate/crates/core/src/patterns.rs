//! Induced-subgraph and subdivision search, plus recognisers for the shapes
//! that appear in unavoidable-subgraph statements.

use std::collections::{BTreeMap, BTreeSet};

use crate::budget::{Budget, Exhausted, Search};
use crate::error::Result;
use crate::generators::{k_ary_tree, subdivide, Containment, Lengths, SubdivisionMap};
use crate::graph::{line_graph, Graph, Vertex};

/// Injective map of a pattern into a host.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    pub pattern: Graph,
    pub map: BTreeMap<Vertex, Vertex>,
    pub induced: bool,
}

impl Embedding {
    pub fn image(&self) -> BTreeSet<Vertex> {
        self.map.values().copied().collect()
    }

    pub fn validate(&self, host: &Graph) -> std::result::Result<(), String> {
        if self.map.keys().copied().collect::<BTreeSet<_>>() != self.pattern.vertex_set() {
            return Err("map does not cover exactly the pattern vertices".into());
        }
        if self.image().len() != self.map.len() {
            return Err("map is not injective".into());
        }
        for (&p, &h) in &self.map {
            if !host.contains(h) {
                return Err(format!("image {h} of {p} is not a host vertex"));
            }
        }
        for (&p, &x) in &self.map {
            for (&q, &y) in self.map.range(p + 1..) {
                let (e, f) = (self.pattern.has_edge(p, q), host.has_edge(x, y));
                if e && !f {
                    return Err(format!("pattern edge {p}-{q} missing in host"));
                }
                if self.induced && f && !e {
                    return Err(format!("host edge {x}-{y} between images of non-adjacent {p}, {q}"));
                }
            }
        }
        Ok(())
    }
}

/// A subdivision of `map.base` inside an arbitrary host.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubdivisionEmbedding {
    pub map: SubdivisionMap,
    pub induced: bool,
}

impl SubdivisionEmbedding {
    pub fn validate(&self, host: &Graph) -> std::result::Result<(), String> {
        let mode = if self.induced { Containment::Induced } else { Containment::Subgraph };
        self.map.validate(host, mode)
    }

    /// Edge lengths of the subdivision, keyed by `(min, max)` base pairs.
    pub fn lengths(&self) -> Lengths {
        self.map.paths.iter().map(|(&(u, v), p)| ((u.min(v), u.max(v)), p.len() - 1)).collect()
    }
}

/// The line graph of a subdivision of `base` as an induced subgraph of a
/// host. `edges` maps each edge of `subdivide(base, lengths)` to its host
/// vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineGraphEmbedding {
    pub base: Graph,
    pub lengths: Lengths,
    pub edges: BTreeMap<(Vertex, Vertex), Vertex>,
}

impl LineGraphEmbedding {
    /// The equivalent plain embedding of the line graph.
    pub fn embedding(&self) -> std::result::Result<Embedding, String> {
        let (sub, _) = subdivide(&self.base, &self.lengths).map_err(|e| e.to_string())?;
        let (lg, names) = line_graph(&sub);
        if names.iter().copied().collect::<BTreeSet<_>>() != self.edges.keys().copied().collect() {
            return Err("edge map does not match the subdivision's edges".into());
        }
        let map = names.iter().enumerate().map(|(i, e)| (i, self.edges[e])).collect();
        Ok(Embedding { pattern: lg, map, induced: true })
    }

    pub fn validate(&self, host: &Graph) -> std::result::Result<(), String> {
        self.embedding()?.validate(host)
    }
}

/// Searches for `pattern` as an induced subgraph of `host`.
pub fn find_induced_subgraph(host: &Graph, pattern: &Graph, budget: &mut Budget) -> Search<Embedding> {
    find_subgraph(host, pattern, true, budget)
}

/// Backtracking embedding search: a maximum-degree pattern vertex first,
/// then always the vertex with the most placed neighbours; host candidates
/// in ascending identifier order.
pub fn find_subgraph(host: &Graph, pattern: &Graph, induced: bool, budget: &mut Budget) -> Search<Embedding> {
    if pattern.vertex_count() > host.vertex_count() || pattern.edge_count() > host.edge_count() {
        return Search::NotFound;
    }
    let mut s = SubgraphSearch { host, pattern, induced, map: BTreeMap::new(), used: BTreeSet::new() };
    match s.run(budget) {
        Ok(true) => Search::Found(Embedding { pattern: pattern.clone(), map: s.map, induced }),
        Ok(false) => Search::NotFound,
        Err(Exhausted) => Search::Exhausted,
    }
}

struct SubgraphSearch<'a> {
    host: &'a Graph,
    pattern: &'a Graph,
    induced: bool,
    map: BTreeMap<Vertex, Vertex>,
    used: BTreeSet<Vertex>,
}

impl SubgraphSearch<'_> {
    fn next_vertex(&self) -> Option<Vertex> {
        self.pattern
            .vertices()
            .filter(|v| !self.map.contains_key(v))
            .max_by_key(|&v| {
                let placed = self.pattern.neighbors(v).iter().filter(|w| self.map.contains_key(w)).count();
                (placed, self.pattern.degree(v), std::cmp::Reverse(v))
            })
    }

    fn fits(&self, p: Vertex, x: Vertex) -> bool {
        if self.host.degree(x) < self.pattern.degree(p) {
            return false;
        }
        self.map.iter().all(|(&q, &y)| {
            let e = self.pattern.has_edge(p, q);
            let f = self.host.has_edge(x, y);
            if self.induced {
                e == f
            } else {
                !e || f
            }
        })
    }

    fn run(&mut self, budget: &mut Budget) -> std::result::Result<bool, Exhausted> {
        let Some(p) = self.next_vertex() else { return Ok(true) };
        let anchor = self.pattern.neighbors(p).iter().find_map(|w| self.map.get(w).copied());
        let candidates: Vec<Vertex> = match anchor {
            Some(y) => self.host.neighbors(y).iter().copied().collect(),
            None => self.host.vertices().collect(),
        };
        for x in candidates {
            if self.used.contains(&x) {
                continue;
            }
            budget.tick()?;
            if !self.fits(p, x) {
                continue;
            }
            self.map.insert(p, x);
            self.used.insert(x);
            if self.run(budget)? {
                return Ok(true);
            }
            self.map.remove(&p);
            self.used.remove(&x);
        }
        Ok(false)
    }
}

/// Searches for an induced subdivision of `base` in `host`.
pub fn find_induced_subdivision(host: &Graph, base: &Graph, budget: &mut Budget) -> Result<Search<SubdivisionEmbedding>> {
    find_subdivision(host, base, true, budget)
}

#[derive(Clone, Copy, Debug)]
enum Task {
    Root(Vertex),
    Tree(Vertex, Vertex),
    Close(Vertex, Vertex),
}

/// Searches for a subdivision of `base` in `host` (as an induced subgraph
/// when `induced`). Branch vertices are placed in BFS order from a vertex of
/// maximum degree; each tree edge is routed as a path that ends at the
/// child's image, and remaining edges are routed between placed images.
pub fn find_subdivision(host: &Graph, base: &Graph, induced: bool, budget: &mut Budget) -> Result<Search<SubdivisionEmbedding>> {
    if base.vertex_count() > host.vertex_count()
        || base.edge_count() > host.edge_count()
        || base.max_degree() > host.max_degree()
    {
        return Ok(Search::NotFound);
    }
    let mut tasks = Vec::new();
    let mut placed = BTreeSet::new();
    let mut roots: Vec<Vertex> = base.vertices().collect();
    roots.sort_by_key(|&v| (std::cmp::Reverse(base.degree(v)), v));
    for r in roots {
        if !placed.insert(r) {
            continue;
        }
        tasks.push(Task::Root(r));
        let mut queue = std::collections::VecDeque::from([r]);
        let mut order = vec![r];
        while let Some(u) = queue.pop_front() {
            for &w in base.neighbors(u) {
                if placed.insert(w) {
                    queue.push_back(w);
                    order.push(w);
                    tasks.push(Task::Tree(u, w));
                    for &z in base.neighbors(w) {
                        if z != u && order[..order.len() - 1].contains(&z) {
                            tasks.push(Task::Close(z, w));
                        }
                    }
                }
            }
        }
    }
    let mut s = RouteSearch {
        host,
        base,
        induced,
        tasks,
        img: BTreeMap::new(),
        used: BTreeSet::new(),
        paths: BTreeMap::new(),
    };
    Ok(match s.solve(0, budget) {
        Ok(true) => {
            let map = SubdivisionMap { base: base.clone(), branch: s.img, paths: s.paths };
            Search::Found(SubdivisionEmbedding { map, induced })
        }
        Ok(false) => Search::NotFound,
        Err(Exhausted) => Search::Exhausted,
    })
}

struct RouteSearch<'a> {
    host: &'a Graph,
    base: &'a Graph,
    induced: bool,
    tasks: Vec<Task>,
    img: BTreeMap<Vertex, Vertex>,
    used: BTreeSet<Vertex>,
    paths: BTreeMap<(Vertex, Vertex), Vec<Vertex>>,
}

impl RouteSearch<'_> {
    fn image_neighbours(&self, x: Vertex) -> Vec<Vertex> {
        self.host.neighbors(x).iter().copied().filter(|y| self.used.contains(y)).collect()
    }

    fn free_degree(&self, x: Vertex) -> usize {
        self.host.neighbors(x).iter().filter(|y| !self.used.contains(*y)).count()
    }

    /// Edges of `v` to placed vertices not yet routed.
    fn open_edges(&self, v: Vertex) -> Vec<Vertex> {
        self.base
            .neighbors(v)
            .iter()
            .copied()
            .filter(|u| self.img.contains_key(u) && !self.paths.contains_key(&(*u, v)) && !self.paths.contains_key(&(v, *u)))
            .collect()
    }

    /// Places `v` at `x`, reached from `pred` (if any). Returns the edges
    /// forced to be direct, or `None` when `x` is not admissible.
    /// `parent` is the base vertex whose path is being extended to `x`.
    fn admit_branch(&self, v: Vertex, x: Vertex, pred: Option<Vertex>, parent: Option<Vertex>) -> Option<Vec<Vertex>> {
        if self.host.degree(x) < self.base.degree(v) {
            return None;
        }
        if !self.induced {
            return Some(vec![]);
        }
        let inv: BTreeMap<Vertex, Vertex> = self.img.iter().map(|(&b, &h)| (h, b)).collect();
        let open: Vec<Vertex> = self.open_edges(v).into_iter().filter(|&u| Some(u) != parent).collect();
        let mut forced = Vec::new();
        for y in self.image_neighbours(x) {
            if Some(y) == pred {
                continue;
            }
            match inv.get(&y) {
                Some(u) if open.contains(u) => forced.push(*u),
                _ => return None,
            }
        }
        let pending = self.base.degree(v) - open.len() - usize::from(pred.is_some()) + (open.len() - forced.len());
        if self.free_degree(x) < pending {
            return None;
        }
        Some(forced)
    }

    fn place(&mut self, v: Vertex, x: Vertex, forced: &[Vertex]) {
        self.img.insert(v, x);
        self.used.insert(x);
        for &u in forced {
            self.paths.insert((u, v), vec![self.img[&u], x]);
        }
    }

    fn unplace(&mut self, v: Vertex, forced: &[Vertex]) {
        let x = self.img.remove(&v).unwrap();
        self.used.remove(&x);
        for &u in forced {
            self.paths.remove(&(u, v));
        }
    }

    fn solve(&mut self, i: usize, budget: &mut Budget) -> std::result::Result<bool, Exhausted> {
        let Some(&task) = self.tasks.get(i) else { return Ok(true) };
        budget.tick()?;
        match task {
            Task::Root(r) => {
                let cands: Vec<Vertex> = self.host.vertices().filter(|x| !self.used.contains(x)).collect();
                for x in cands {
                    let Some(forced) = self.admit_branch(r, x, None, None) else { continue };
                    self.place(r, x, &forced);
                    if self.solve(i + 1, budget)? {
                        return Ok(true);
                    }
                    self.unplace(r, &forced);
                }
                Ok(false)
            }
            Task::Tree(p, v) => {
                let s = self.img[&p];
                let mut path = vec![s];
                self.route_tree(i, p, v, &mut path, budget)
            }
            Task::Close(u, v) => {
                if self.paths.contains_key(&(u, v)) || self.paths.contains_key(&(v, u)) {
                    return self.solve(i + 1, budget);
                }
                let (s, t) = (self.img[&u], self.img[&v]);
                if self.host.has_edge(s, t) {
                    // Only reachable without the induced condition.
                    self.paths.insert((u, v), vec![s, t]);
                    if self.solve(i + 1, budget)? {
                        return Ok(true);
                    }
                    self.paths.remove(&(u, v));
                    return Ok(false);
                }
                let mut path = vec![s];
                self.route_close(i, u, v, t, &mut path, budget)
            }
        }
    }

    fn route_tree(&mut self, i: usize, p: Vertex, v: Vertex, path: &mut Vec<Vertex>, budget: &mut Budget) -> std::result::Result<bool, Exhausted> {
        let q = *path.last().unwrap();
        let cands: Vec<Vertex> = self.host.neighbors(q).iter().copied().filter(|y| !self.used.contains(y)).collect();
        for y in cands {
            budget.tick()?;
            if let Some(forced) = self.admit_branch(v, y, Some(q), Some(p)) {
                path.push(y);
                self.place(v, y, &forced);
                self.paths.insert((p, v), path.clone());
                if self.solve(i + 1, budget)? {
                    return Ok(true);
                }
                self.paths.remove(&(p, v));
                self.unplace(v, &forced);
                path.pop();
            }
            if self.induced && self.image_neighbours(y) != [q] {
                continue;
            }
            path.push(y);
            self.used.insert(y);
            let ok = self.route_tree(i, p, v, path, budget)?;
            if ok {
                return Ok(true);
            }
            self.used.remove(&y);
            path.pop();
        }
        Ok(false)
    }

    #[allow(clippy::too_many_arguments)]
    fn route_close(&mut self, i: usize, u: Vertex, v: Vertex, t: Vertex, path: &mut Vec<Vertex>, budget: &mut Budget) -> std::result::Result<bool, Exhausted> {
        let q = *path.last().unwrap();
        let cands: Vec<Vertex> = self.host.neighbors(q).iter().copied().filter(|y| !self.used.contains(y)).collect();
        for y in cands {
            budget.tick()?;
            let near = self.image_neighbours(y);
            let touches_t = near.contains(&t);
            if self.induced && !near.iter().all(|&z| z == q || z == t) {
                continue;
            }
            path.push(y);
            self.used.insert(y);
            let ok = if touches_t {
                path.push(t);
                self.paths.insert((u, v), path.clone());
                let ok = self.solve(i + 1, budget)?;
                if !ok {
                    self.paths.remove(&(u, v));
                }
                path.pop();
                ok
            } else {
                self.route_close(i, u, v, t, path, budget)?
            };
            if ok {
                return Ok(true);
            }
            self.used.remove(&y);
            path.pop();
        }
        Ok(false)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Shape {
    Complete,
    CompleteBipartite,
    Claw,
    Fork,
    SemiFork,
    Net,
    Tripod,
    SemiTripod,
}

impl Shape {
    pub const ALL: [Shape; 8] = [
        Shape::Complete,
        Shape::CompleteBipartite,
        Shape::Claw,
        Shape::Fork,
        Shape::SemiFork,
        Shape::Net,
        Shape::Tripod,
        Shape::SemiTripod,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Shape::Complete => "complete",
            Shape::CompleteBipartite => "complete-bipartite",
            Shape::Claw => "claw",
            Shape::Fork => "fork",
            Shape::SemiFork => "semi-fork",
            Shape::Net => "net",
            Shape::Tripod => "tripod",
            Shape::SemiTripod => "semi-tripod",
        }
    }

    pub fn parse(s: &str) -> Option<Shape> {
        Shape::ALL.into_iter().find(|x| x.name() == s)
    }
}

/// Strict follows the textbook definitions; inclusive also accepts paths as
/// degenerate forks and semi-forks and edgeless graphs as `K_{0,m}`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Strictness {
    Strict,
    #[default]
    Inclusive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Complete { n: usize },
    Bipartite { left: BTreeSet<Vertex>, right: BTreeSet<Vertex> },
    /// Arms listed from the centre's neighbour outwards.
    Fork { center: Vertex, arms: [Vec<Vertex>; 3] },
    /// Pendant paths listed from the triangle outwards; possibly empty.
    SemiFork { triangle: [Vertex; 3], paths: [Vec<Vertex>; 3] },
    Path { vertices: Vec<Vertex> },
    Components(Vec<Witness>),
}

fn walk_out(g: &Graph, from: Vertex, start: Vertex) -> Vec<Vertex> {
    let mut out = vec![start];
    let (mut prev, mut cur) = (from, start);
    while let Some(&n) = g.neighbors(cur).iter().find(|&&w| w != prev) {
        out.push(n);
        prev = cur;
        cur = n;
    }
    out
}

fn as_path(g: &Graph) -> Option<Witness> {
    if g.is_empty() || !g.is_tree() || g.max_degree() > 2 {
        return None;
    }
    let end = g.vertices().find(|&v| g.degree(v) <= 1).unwrap();
    let mut vertices = vec![end];
    if let Some(&n) = g.neighbors(end).iter().next() {
        vertices.extend(walk_out(g, end, n));
    }
    Some(Witness::Path { vertices })
}

fn as_fork(g: &Graph) -> Option<Witness> {
    if !g.is_tree() {
        return None;
    }
    let big: Vec<Vertex> = g.vertices().filter(|&v| g.degree(v) >= 3).collect();
    if big.len() != 1 || g.degree(big[0]) != 3 {
        return None;
    }
    let c = big[0];
    let ns: Vec<Vertex> = g.neighbors(c).iter().copied().collect();
    let arms = [walk_out(g, c, ns[0]), walk_out(g, c, ns[1]), walk_out(g, c, ns[2])];
    Some(Witness::Fork { center: c, arms })
}

fn as_semi_fork(g: &Graph) -> Option<Witness> {
    if g.is_empty() || !g.is_connected() || g.edge_count() != g.vertex_count() {
        return None;
    }
    let (a, b) = g.edges().find(|&(a, b)| g.neighbors(a).intersection(g.neighbors(b)).next().is_some())?;
    let c = *g.neighbors(a).intersection(g.neighbors(b)).next().unwrap();
    let tri = [a, b, c];
    // Connected with |E| = |V|: the triangle is the only cycle.
    if tri.iter().any(|&t| g.degree(t) > 3) || g.vertices().any(|v| !tri.contains(&v) && g.degree(v) > 2) {
        return None;
    }
    let path = |t: Vertex| -> Vec<Vertex> {
        match g.neighbors(t).iter().find(|w| !tri.contains(w)) {
            Some(&n) => walk_out(g, t, n),
            None => vec![],
        }
    };
    Some(Witness::SemiFork { triangle: tri, paths: [path(a), path(b), path(c)] })
}

fn as_bipartite(g: &Graph, strictness: Strictness) -> Option<Witness> {
    if g.is_empty() {
        return None;
    }
    if g.edge_count() == 0 {
        return (strictness == Strictness::Inclusive)
            .then(|| Witness::Bipartite { left: BTreeSet::new(), right: g.vertex_set() });
    }
    if !g.is_connected() {
        return None;
    }
    let root = g.vertices().next().unwrap();
    let dist = g.distances_from(root);
    let left: BTreeSet<Vertex> = dist.iter().filter(|(_, d)| *d % 2 == 0).map(|(&v, _)| v).collect();
    let right: BTreeSet<Vertex> = dist.iter().filter(|(_, d)| *d % 2 == 1).map(|(&v, _)| v).collect();
    let complete = left.iter().all(|&u| right.iter().all(|&w| g.has_edge(u, w)));
    (complete && g.edge_count() == left.len() * right.len()).then_some(Witness::Bipartite { left, right })
}

fn componentwise(g: &Graph, each: impl Fn(&Graph) -> Option<Witness>) -> Option<Witness> {
    if g.is_empty() {
        return None;
    }
    let mut out = Vec::new();
    for c in g.components() {
        out.push(each(&g.induced_subgraph(&c).expect("component"))?);
    }
    Some(Witness::Components(out))
}

/// Whether `g` has the given shape, with a witness decomposition.
pub fn recognize(g: &Graph, shape: Shape, strictness: Strictness) -> Option<Witness> {
    let inclusive = strictness == Strictness::Inclusive;
    let fork = |h: &Graph| as_fork(h).or_else(|| if inclusive { as_path(h) } else { None });
    let semi = |h: &Graph| as_semi_fork(h).or_else(|| if inclusive { as_path(h) } else { None });
    match shape {
        Shape::Complete => {
            let n = g.vertex_count();
            (n > 0 && g.edge_count() == n * (n - 1) / 2).then_some(Witness::Complete { n })
        }
        Shape::CompleteBipartite => as_bipartite(g, strictness),
        Shape::Claw => {
            let w = as_fork(g)?;
            (g.vertex_count() == 4).then_some(w)
        }
        Shape::Fork => fork(g),
        Shape::SemiFork => semi(g),
        Shape::Net => {
            let w = as_semi_fork(g)?;
            match &w {
                Witness::SemiFork { paths, .. } if paths.iter().all(|p| p.len() == 1) => Some(w),
                _ => None,
            }
        }
        Shape::Tripod => componentwise(g, fork),
        Shape::SemiTripod => componentwise(g, semi),
    }
}

/// One of the three unavoidable structures of a graph with a large `𝒯_m`
/// subgraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RamseyWitness {
    Clique(Embedding),
    Biclique(Embedding),
    KaryTree(Embedding),
}

impl RamseyWitness {
    pub fn embedding(&self) -> &Embedding {
        match self {
            RamseyWitness::Clique(e) | RamseyWitness::Biclique(e) | RamseyWitness::KaryTree(e) => e,
        }
    }
}

/// Looks for an induced `K_n`, `K_{n,n}` or `𝒯_n`, in that order.
pub fn ramsey_detect(g: &Graph, n: usize, budget: &mut Budget) -> Result<Search<RamseyWitness>> {
    let mut exhausted = false;
    let candidates: [(Graph, fn(Embedding) -> RamseyWitness); 3] = [
        (Graph::complete(n), RamseyWitness::Clique),
        (Graph::complete_bipartite(n, n), RamseyWitness::Biclique),
        (k_ary_tree(n)?.into_graph(), RamseyWitness::KaryTree),
    ];
    for (pattern, wrap) in candidates {
        match find_induced_subgraph(g, &pattern, budget) {
            Search::Found(e) => return Ok(Search::Found(wrap(e))),
            Search::NotFound => {}
            Search::Exhausted => exhausted = true,
        }
    }
    Ok(if exhausted { Search::Exhausted } else { Search::NotFound })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete_binary_tree, hat_tree, net_graph_replacement, uniform_lengths};
    use proptest::prelude::*;

    fn net() -> Graph {
        net_graph_replacement(&Graph::star(3), 0).unwrap().0
    }

    fn unlimited() -> Budget {
        Budget::unlimited()
    }

    #[test]
    fn induced_subgraph_examples() {
        let e = find_induced_subgraph(&Graph::complete(4), &Graph::complete(3), &mut unlimited()).found().unwrap();
        e.validate(&Graph::complete(4)).unwrap();
        assert!(matches!(find_induced_subgraph(&Graph::cycle(6), &Graph::complete(3), &mut unlimited()), Search::NotFound));
        assert!(matches!(find_induced_subgraph(&net(), &Graph::star(3), &mut unlimited()), Search::NotFound));
        assert!(find_induced_subgraph(&net(), &Graph::complete(3), &mut unlimited()).is_found());
        assert!(matches!(find_induced_subgraph(&Graph::complete(8), &Graph::path(3), &mut unlimited()), Search::NotFound));
        assert!(matches!(find_induced_subgraph(&Graph::cycle(30), &Graph::path(29), &mut Budget::new(3)), Search::Exhausted));
    }

    #[test]
    fn subdivision_examples() {
        let t2 = complete_binary_tree(2);
        let (host, _) = subdivide(t2.graph(), &uniform_lengths(t2.graph(), 2)).unwrap();
        let e = find_induced_subdivision(&host, t2.graph(), &mut unlimited()).unwrap().found().unwrap();
        e.validate(&host).unwrap();
        let t1 = complete_binary_tree(1);
        let e = find_induced_subdivision(&Graph::cycle(8), t1.graph(), &mut unlimited()).unwrap().found().unwrap();
        e.validate(&Graph::cycle(8)).unwrap();
        let hat = hat_tree(1);
        let t5 = complete_binary_tree(5);
        assert!(matches!(find_induced_subdivision(&hat.graph, t5.graph(), &mut unlimited()).unwrap(), Search::NotFound));
        // K_4 contains K_4 but no induced subdivision of C_4.
        assert!(find_subdivision(&Graph::complete(4), &Graph::cycle(4), false, &mut unlimited()).unwrap().is_found());
        assert!(matches!(
            find_subdivision(&Graph::complete(4), &Graph::cycle(4), true, &mut unlimited()).unwrap(),
            Search::NotFound
        ));
        // C_6 with a chord: both induced cycles have length 4.
        let g = Graph::cycle(6).add_edges([(0, 3)]);
        assert!(find_induced_subdivision(&g, &Graph::cycle(4), &mut unlimited()).unwrap().is_found());
        assert!(matches!(find_induced_subdivision(&g, &Graph::cycle(5), &mut unlimited()).unwrap(), Search::NotFound));
    }

    #[test]
    fn recognizer_examples() {
        use Shape::*;
        use Strictness::*;
        let claw = Graph::star(3);
        match recognize(&claw, Fork, Strict) {
            Some(Witness::Fork { arms, .. }) => assert!(arms.iter().all(|a| a.len() == 1)),
            w => panic!("{w:?}"),
        }
        assert!(recognize(&claw, Claw, Strict).is_some());
        assert!(recognize(&Graph::complete(3), SemiFork, Strict).is_some());
        assert!(recognize(&Graph::path(4), Fork, Strict).is_none());
        assert!(recognize(&Graph::path(4), Fork, Inclusive).is_some());
        assert!(recognize(&net(), Net, Strict).is_some());
        assert!(recognize(&net(), SemiTripod, Strict).is_some());
        assert!(recognize(&Graph::complete(3), Net, Strict).is_none());
        assert!(recognize(&Graph::complete_bipartite(3, 3), CompleteBipartite, Strict).is_some());
        assert!(recognize(&Graph::cycle(4), CompleteBipartite, Strict).is_some());
        assert!(recognize(&Graph::cycle(6), CompleteBipartite, Strict).is_none());
        assert!(recognize(&Graph::edgeless(2), CompleteBipartite, Strict).is_none());
        assert!(recognize(&Graph::edgeless(2), CompleteBipartite, Inclusive).is_some());
        assert!(recognize(&Graph::cycle(5), Complete, Inclusive).is_none());
        let two_claws = claw.disjoint_union(&claw).0;
        assert!(recognize(&two_claws, Tripod, Strict).is_some());
        assert!(recognize(&two_claws.disjoint_union(&Graph::path(2)).0, Tripod, Strict).is_none());
        assert!(recognize(&two_claws.disjoint_union(&Graph::path(2)).0, Tripod, Inclusive).is_some());
        assert!(recognize(&Graph::new(), Tripod, Inclusive).is_none());
    }

    #[test]
    fn strict_fork_accepts_exactly_claw_subdivisions() {
        let claw = Graph::star(3);
        for a in 1..=7 {
            for b in a..=7 {
                for c in b..=7 {
                    if a + b + c > 9 {
                        continue;
                    }
                    let lengths = Lengths::from([((0, 1), a), ((0, 2), b), ((0, 3), c)]);
                    let (f, _) = subdivide(&claw, &lengths).unwrap();
                    let Some(Witness::Fork { arms, .. }) = recognize(&f, Shape::Fork, Strictness::Strict) else {
                        panic!("({a},{b},{c}) rejected");
                    };
                    let mut got: Vec<_> = arms.iter().map(|x| x.len()).collect();
                    got.sort();
                    assert_eq!(got, vec![a, b, c]);
                }
            }
        }
    }

    #[test]
    fn ramsey_examples() {
        match ramsey_detect(&Graph::complete(5), 3, &mut unlimited()).unwrap() {
            Search::Found(RamseyWitness::Clique(e)) => assert_eq!(e.map.len(), 3),
            r => panic!("{r:?}"),
        }
        let t = k_ary_tree(3).unwrap();
        assert!(matches!(ramsey_detect(t.graph(), 3, &mut unlimited()).unwrap(), Search::Found(RamseyWitness::KaryTree(_))));
        assert!(matches!(ramsey_detect(&Graph::cycle(7), 3, &mut unlimited()).unwrap(), Search::NotFound));
    }

    fn brute_force(host: &Graph, pattern: &Graph) -> bool {
        let hv: Vec<Vertex> = host.vertices().collect();
        let pv: Vec<Vertex> = pattern.vertices().collect();
        fn go(i: usize, pv: &[Vertex], hv: &[Vertex], host: &Graph, pattern: &Graph, map: &mut Vec<Vertex>) -> bool {
            if i == pv.len() {
                return (0..pv.len()).all(|a| {
                    (a + 1..pv.len()).all(|b| pattern.has_edge(pv[a], pv[b]) == host.has_edge(map[a], map[b]))
                });
            }
            for &x in hv {
                if map.contains(&x) {
                    continue;
                }
                map.push(x);
                if go(i + 1, pv, hv, host, pattern, map) {
                    return true;
                }
                map.pop();
            }
            false
        }
        go(0, &pv, &hv, host, pattern, &mut Vec::new())
    }

    fn graph_from(n: usize, bits: &[bool]) -> Graph {
        let mut edges = vec![];
        let mut k = 0;
        for u in 0..n {
            for v in u + 1..n {
                if bits[k] {
                    edges.push((u, v));
                }
                k += 1;
            }
        }
        Graph::from_edges(n, &edges)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(300))]

        #[test]
        fn induced_search_matches_brute_force(
            n in 0usize..=8, hb in proptest::collection::vec(any::<bool>(), 28),
            m in 1usize..=4, pb in proptest::collection::vec(any::<bool>(), 6),
        ) {
            let host = graph_from(n, &hb);
            let pattern = graph_from(m, &pb);
            let got = find_induced_subgraph(&host, &pattern, &mut Budget::unlimited());
            if let Search::Found(e) = &got {
                prop_assert!(e.validate(&host).is_ok());
            }
            prop_assert_eq!(got.is_found(), brute_force(&host, &pattern));
        }

        #[test]
        fn semi_fork_iff_line_graph_of_fork(a in 1usize..=4, b in 1usize..=4, c in 1usize..=4) {
            let lengths = Lengths::from([((0, 1), a), ((0, 2), b), ((0, 3), c)]);
            let (f, _) = subdivide(&Graph::star(3), &lengths).unwrap();
            let (lg, _) = line_graph(&f);
            prop_assert!(recognize(&lg, Shape::SemiFork, Strictness::Strict).is_some());
            prop_assert!(recognize(&lg, Shape::Fork, Strictness::Inclusive).is_none());
        }
    }
}
