//! Minor and induced-minor models, sparsifiable vertices, distance-5
//! partitions and radius-2 ball contraction.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::budget::{Budget, Exhausted, Search};
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder, Vertex};
use crate::patterns::find_subdivision;

/// Branch sets realising `pattern` as a minor of some host graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorModel {
    pub pattern: Graph,
    pub branch_sets: BTreeMap<Vertex, BTreeSet<Vertex>>,
    pub induced: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    MissingSet(Vertex),
    EmptySet(Vertex),
    UnknownHostVertex(Vertex, Vertex),
    Disconnected(Vertex),
    Overlap(Vertex, Vertex, Vertex),
    MissingEdge(Vertex, Vertex),
    UnwantedEdge(Vertex, Vertex),
    ExtraSet(Vertex),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::MissingSet(v) => write!(f, "pattern vertex {v} has no branch set"),
            Violation::EmptySet(v) => write!(f, "branch set of {v} is empty"),
            Violation::UnknownHostVertex(v, x) => write!(f, "branch set of {v} holds {x}, which is not in the host"),
            Violation::Disconnected(v) => write!(f, "branch set of {v} is not connected"),
            Violation::Overlap(u, v, x) => write!(f, "branch sets of {u} and {v} share {x}"),
            Violation::MissingEdge(u, v) => write!(f, "no host edge between the sets of adjacent {u} and {v}"),
            Violation::UnwantedEdge(u, v) => write!(f, "host edge between the sets of non-adjacent {u} and {v}"),
            Violation::ExtraSet(v) => write!(f, "branch set for {v}, which is not a pattern vertex"),
        }
    }
}

impl MinorModel {
    /// Every pattern vertex mapped to itself.
    pub fn identity(g: &Graph) -> MinorModel {
        MinorModel {
            pattern: g.clone(),
            branch_sets: g.vertices().map(|v| (v, BTreeSet::from([v]))).collect(),
            induced: true,
        }
    }

    pub fn set(&self, v: Vertex) -> &BTreeSet<Vertex> {
        &self.branch_sets[&v]
    }

    pub fn image(&self) -> BTreeSet<Vertex> {
        self.branch_sets.values().flatten().copied().collect()
    }

    /// Pattern vertex owning each host vertex of the image.
    pub fn owner(&self) -> BTreeMap<Vertex, Vertex> {
        self.branch_sets.iter().flat_map(|(&v, s)| s.iter().map(move |&x| (x, v))).collect()
    }

    /// Host-edge adjacency between branch sets, as pattern-vertex pairs.
    pub fn touching_pairs(&self, host: &Graph) -> BTreeSet<(Vertex, Vertex)> {
        let owner = self.owner();
        let mut out = BTreeSet::new();
        for (&x, &u) in &owner {
            for y in host.neighbors(x) {
                if let Some(&v) = owner.get(y) {
                    if u < v {
                        out.insert((u, v));
                    }
                }
            }
        }
        out
    }

    /// All violated conditions, in a fixed order. Empty means valid.
    pub fn violations(&self, host: &Graph) -> Vec<Violation> {
        let mut out = Vec::new();
        for v in self.pattern.vertices() {
            if !self.branch_sets.contains_key(&v) {
                out.push(Violation::MissingSet(v));
            }
        }
        for &v in self.branch_sets.keys() {
            if !self.pattern.contains(v) {
                out.push(Violation::ExtraSet(v));
            }
        }
        let mut seen: BTreeMap<Vertex, Vertex> = BTreeMap::new();
        for (&v, s) in &self.branch_sets {
            if s.is_empty() {
                out.push(Violation::EmptySet(v));
                continue;
            }
            let mut ok = true;
            for &x in s {
                if !host.contains(x) {
                    out.push(Violation::UnknownHostVertex(v, x));
                    ok = false;
                }
                if let Some(u) = seen.insert(x, v) {
                    out.push(Violation::Overlap(u, v, x));
                }
            }
            if ok && !host.is_connected_set(s) {
                out.push(Violation::Disconnected(v));
            }
        }
        if !out.is_empty() {
            return out;
        }
        let touching = self.touching_pairs(host);
        for (u, v) in self.pattern.edges() {
            if !touching.contains(&(u, v)) {
                out.push(Violation::MissingEdge(u, v));
            }
        }
        if self.induced {
            for &(u, v) in &touching {
                if !self.pattern.has_edge(u, v) {
                    out.push(Violation::UnwantedEdge(u, v));
                }
            }
        }
        out
    }

    pub fn validate(&self, host: &Graph) -> Result<()> {
        match self.violations(host).first() {
            None => Ok(()),
            Some(v) => Err(Error::InvalidModel(v.to_string())),
        }
    }

    /// The model restricted to a subset of pattern vertices.
    pub fn restrict(&self, keep: &BTreeSet<Vertex>) -> Result<MinorModel> {
        Ok(MinorModel {
            pattern: self.pattern.induced_subgraph(keep)?,
            branch_sets: self.branch_sets.iter().filter(|(v, _)| keep.contains(v)).map(|(&v, s)| (v, s.clone())).collect(),
            induced: self.induced,
        })
    }

    /// Largest eccentricity of a branch set's best centre inside the set.
    pub fn radius(&self, host: &Graph) -> Result<usize> {
        let mut r = 0;
        for s in self.branch_sets.values() {
            let sub = host.induced_subgraph(s)?;
            let best = s
                .iter()
                .map(|&c| sub.distances_from(c).values().copied().max().unwrap_or(0))
                .min()
                .unwrap_or(0);
            r = r.max(best);
        }
        Ok(r)
    }
}

/// Which condition makes a vertex sparsifiable.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SparsifyCase {
    /// Degree at most 2.
    LowDegree,
    /// Degree 3 with every neighbour of degree at most 2.
    LowNeighbours,
    /// Degree 3, one neighbour of degree at most 2, the other two forming a triangle with it.
    Triangle,
}

pub fn is_sparsifiable(g: &Graph, v: Vertex) -> Option<SparsifyCase> {
    let ns: Vec<Vertex> = g.neighbors(v).iter().copied().collect();
    match ns.len() {
        0..=2 => Some(SparsifyCase::LowDegree),
        3 => {
            let low: Vec<_> = ns.iter().copied().filter(|&w| g.degree(w) <= 2).collect();
            if low.len() == 3 {
                return Some(SparsifyCase::LowNeighbours);
            }
            for &l in &low {
                let others: Vec<_> = ns.iter().copied().filter(|&w| w != l).collect();
                if g.has_edge(others[0], others[1]) {
                    return Some(SparsifyCase::Triangle);
                }
            }
            None
        }
        _ => None,
    }
}

pub fn is_sparsifiable_graph(g: &Graph) -> bool {
    g.vertices().all(|v| is_sparsifiable(g, v).is_some())
}

/// Edges `ab` with `a ∈ X_u`, `b ∈ X_v`, `u, v ∈ h`, `uv ∉ E(H)`; sorted.
pub fn violating_edges(g: &Graph, m: &MinorModel, h: &BTreeSet<Vertex>) -> Vec<(Vertex, Vertex)> {
    let owner = m.owner();
    g.edges()
        .filter(|&(a, b)| match (owner.get(&a), owner.get(&b)) {
            (Some(&u), Some(&v)) => u != v && h.contains(&u) && h.contains(&v) && !m.pattern.has_edge(u, v),
            _ => false,
        })
        .collect()
}

/// One step of the repair loop.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RepairMove {
    /// Drop `vertex` from the branch set of `from`.
    Shrink { from: Vertex, vertex: Vertex },
    /// Move `a` (from `u`) and `b` (from `v`) into the set of `w`.
    Exchange { u: Vertex, v: Vertex, w: Vertex, a: Vertex, b: Vertex },
}

#[derive(Clone, Debug)]
pub struct Repair {
    /// Induced model of `H`.
    pub model: MinorModel,
    /// Model of `H⁺` after the last move.
    pub full: MinorModel,
    pub moves: Vec<RepairMove>,
    /// Violating-edge count before each move and at the end.
    pub counts: Vec<usize>,
}

/// Turns a model of `H⁺` in a sparsifiable graph into an induced model of
/// `H`, where `H` is the subgraph of `H⁺` induced by `h` and every vertex of
/// `h` has degree at least 3 in `H⁺`.
pub fn repair_to_induced_model(g: &Graph, m: &MinorModel, h: &BTreeSet<Vertex>) -> Result<Repair> {
    if let Some(v) = g.vertices().find(|&v| is_sparsifiable(g, v).is_none()) {
        return Err(Error::Precondition(format!("host vertex {v} is not sparsifiable")));
    }
    let plain = MinorModel { induced: false, ..m.clone() };
    plain.validate(g)?;
    for &v in h {
        if !m.pattern.contains(v) {
            return Err(Error::UnknownVertex(v));
        }
        if m.pattern.degree(v) < 3 {
            return Err(Error::Precondition(format!("pattern vertex {v} has degree {} < 3", m.pattern.degree(v))));
        }
    }
    let mut cur = plain;
    let mut moves = Vec::new();
    let mut counts = Vec::new();
    loop {
        let bad = violating_edges(g, &cur, h);
        counts.push(bad.len());
        let Some(&(a, b)) = bad.first() else { break };
        if moves.len() > g.edge_count() {
            return Err(Error::Internal("repair loop exceeded |E| iterations".into()));
        }
        let owner = cur.owner();
        let (u, v) = (owner[&a], owner[&b]);
        let mv = if g.degree(a) <= 2 {
            RepairMove::Shrink { from: u, vertex: a }
        } else if g.degree(b) <= 2 {
            RepairMove::Shrink { from: v, vertex: b }
        } else {
            let c = *g
                .neighbors(a)
                .intersection(g.neighbors(b))
                .next()
                .ok_or_else(|| Error::Internal(format!("adjacent degree-3 vertices {a}, {b} share no neighbour")))?;
            let closed = |x: Vertex| -> BTreeSet<Vertex> {
                let mut s = cur.set(x).clone();
                for y in cur.pattern.neighbors(x) {
                    s.extend(cur.set(*y));
                }
                s
            };
            if !closed(u).contains(&c) {
                RepairMove::Shrink { from: u, vertex: a }
            } else if !closed(v).contains(&c) {
                RepairMove::Shrink { from: v, vertex: b }
            } else {
                let w = *owner.get(&c).ok_or_else(|| Error::Internal("common neighbour outside the model".into()))?;
                RepairMove::Exchange { u, v, w, a, b }
            }
        };
        match &mv {
            RepairMove::Shrink { from, vertex } => {
                cur.branch_sets.get_mut(from).unwrap().remove(vertex);
            }
            RepairMove::Exchange { u, v, w, a, b } => {
                cur.branch_sets.get_mut(u).unwrap().remove(a);
                cur.branch_sets.get_mut(v).unwrap().remove(b);
                cur.branch_sets.get_mut(w).unwrap().extend([*a, *b]);
            }
        }
        moves.push(mv);
        if let Some(x) = cur.violations(g).first() {
            return Err(Error::Internal(format!("repair move broke the model: {x}")));
        }
        if violating_edges(g, &cur, h).len() >= *counts.last().unwrap() {
            return Err(Error::Internal("repair move did not reduce violating edges".into()));
        }
    }
    let mut model = cur.restrict(h)?;
    model.induced = true;
    model.validate(g)?;
    Ok(Repair { model, full: cur, moves, counts })
}

/// Minor search. Patterns of maximum degree at most 3 are searched as
/// topological minors (equivalent for such patterns); others by growing
/// connected branch sets.
pub fn find_minor_model(g: &Graph, pattern: &Graph, budget: &mut Budget) -> Result<Search<MinorModel>> {
    // Minors of forests are forests.
    if g.is_forest() && !pattern.is_forest() {
        return Ok(Search::NotFound);
    }
    if pattern.max_degree() <= 3 {
        let r = find_subdivision(g, pattern, false, budget)?;
        return Ok(r.map(|emb| {
            let mut sets: BTreeMap<Vertex, BTreeSet<Vertex>> =
                emb.map.branch.iter().map(|(&u, &x)| (u, BTreeSet::from([x]))).collect();
            for (&(u, _), p) in &emb.map.paths {
                sets.get_mut(&u).unwrap().extend(&p[1..p.len() - 1]);
            }
            MinorModel { pattern: pattern.clone(), branch_sets: sets, induced: false }
        }));
    }
    Ok(find_minor_model_by_sets(g, pattern, budget).into())
}

/// Backtracking over connected branch sets, pattern vertices in BFS order
/// from a vertex of maximum degree. Every later set must contain a host
/// vertex adjacent to its BFS parent's set, so the search is exhaustive.
pub fn find_minor_model_by_sets(
    g: &Graph,
    pattern: &Graph,
    budget: &mut Budget,
) -> std::result::Result<Option<MinorModel>, Exhausted> {
    search_sets(g, pattern, false, budget)
}

/// Induced minor search: the branch-set backtracking of
/// [`find_minor_model_by_sets`], rejecting sets that touch the set of a
/// placed non-neighbour.
pub fn find_induced_minor_model(g: &Graph, pattern: &Graph, budget: &mut Budget) -> Result<Search<MinorModel>> {
    if g.is_forest() && !pattern.is_forest() {
        return Ok(Search::NotFound);
    }
    Ok(search_sets(g, pattern, true, budget).into())
}

fn search_sets(g: &Graph, pattern: &Graph, induced: bool, budget: &mut Budget) -> std::result::Result<Option<MinorModel>, Exhausted> {
    if pattern.vertex_count() > g.vertex_count() || pattern.edge_count() > g.edge_count() {
        return Ok(None);
    }
    let mut order: Vec<(Vertex, Option<Vertex>)> = Vec::new();
    let mut placed = BTreeSet::new();
    let mut roots: Vec<Vertex> = pattern.vertices().collect();
    roots.sort_by_key(|&v| (std::cmp::Reverse(pattern.degree(v)), v));
    for r in roots {
        if !placed.insert(r) {
            continue;
        }
        order.push((r, None));
        let mut i = order.len() - 1;
        while i < order.len() {
            let u = order[i].0;
            for &w in pattern.neighbors(u) {
                if placed.insert(w) {
                    order.push((w, Some(u)));
                }
            }
            i += 1;
        }
    }
    let mut sets: BTreeMap<Vertex, BTreeSet<Vertex>> = BTreeMap::new();
    let mut used = BTreeSet::new();
    if grow_sets(g, pattern, induced, &order, 0, &mut sets, &mut used, budget)? {
        Ok(Some(MinorModel { pattern: pattern.clone(), branch_sets: sets, induced }))
    } else {
        Ok(None)
    }
}

#[allow(clippy::too_many_arguments)]
fn grow_sets(
    g: &Graph,
    pattern: &Graph,
    induced: bool,
    order: &[(Vertex, Option<Vertex>)],
    i: usize,
    sets: &mut BTreeMap<Vertex, BTreeSet<Vertex>>,
    used: &mut BTreeSet<Vertex>,
    budget: &mut Budget,
) -> std::result::Result<bool, Exhausted> {
    let Some(&(u, parent)) = order.get(i) else { return Ok(true) };
    let seeds: Vec<Vertex> = match parent {
        None => g.vertices().filter(|x| !used.contains(x)).collect(),
        Some(p) => {
            let mut s = BTreeSet::new();
            for x in &sets[&p] {
                s.extend(g.neighbors(*x).iter().filter(|y| !used.contains(*y)));
            }
            s.into_iter().collect()
        }
    };
    let remaining = order.len() - i - 1;
    let free = g.vertex_count() - used.len();
    let max_size = free.saturating_sub(remaining);
    let placed_nbrs: Vec<Vertex> = pattern.neighbors(u).iter().copied().filter(|w| sets.contains_key(w)).collect();
    let pending = pattern.degree(u) - placed_nbrs.len();
    for size in 1..=max_size {
        for (k, &seed) in seeds.iter().enumerate() {
            // Sets are enumerated with `seed` as their smallest-index seed.
            let banned: BTreeSet<Vertex> = seeds[..k].iter().copied().collect();
            let mut found = false;
            let mut cur = BTreeSet::from([seed]);
            let frontier: BTreeSet<Vertex> = g.neighbors(seed).iter().copied().filter(|y| !used.contains(y) && !banned.contains(y)).collect();
            let taken = used.clone();
            enumerate_connected(g, &mut cur, frontier, &BTreeSet::new(), size, &taken, &banned, budget, &mut |set, budget| {
                budget.tick()?;
                let touches = |w: &Vertex| sets[w].iter().any(|x| g.neighbors(*x).iter().any(|y| set.contains(y)));
                if !placed_nbrs.iter().all(touches) {
                    return Ok(false);
                }
                if induced && sets.keys().any(|w| !pattern.has_edge(u, *w) && touches(w)) {
                    return Ok(false);
                }
                let mut out: BTreeSet<Vertex> = BTreeSet::new();
                for x in set {
                    out.extend(g.neighbors(*x).iter().filter(|y| !used.contains(*y) && !set.contains(*y)));
                }
                if out.len() < pending {
                    return Ok(false);
                }
                sets.insert(u, set.clone());
                used.extend(set.iter().copied());
                if grow_sets(g, pattern, induced, order, i + 1, sets, used, budget)? {
                    found = true;
                    return Ok(true);
                }
                for x in set {
                    used.remove(x);
                }
                sets.remove(&u);
                Ok(false)
            })?;
            if found {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Enumerates connected sets of exactly `size` vertices extending `cur`,
/// each once (extension-set enumeration). Stops when `visit` returns true.
#[allow(clippy::too_many_arguments)]
fn enumerate_connected(
    g: &Graph,
    cur: &mut BTreeSet<Vertex>,
    frontier: BTreeSet<Vertex>,
    excluded: &BTreeSet<Vertex>,
    size: usize,
    used: &BTreeSet<Vertex>,
    banned: &BTreeSet<Vertex>,
    budget: &mut Budget,
    visit: &mut dyn FnMut(&BTreeSet<Vertex>, &mut Budget) -> std::result::Result<bool, Exhausted>,
) -> std::result::Result<bool, Exhausted> {
    if cur.len() == size {
        return visit(cur, budget);
    }
    let mut excluded = excluded.clone();
    for &x in &frontier {
        if excluded.contains(&x) {
            continue;
        }
        let mut next = frontier.clone();
        next.remove(&x);
        next.retain(|y| !excluded.contains(y));
        for &y in g.neighbors(x) {
            if !cur.contains(&y) && !used.contains(&y) && !banned.contains(&y) && !excluded.contains(&y) {
                next.insert(y);
            }
        }
        cur.insert(x);
        let stop = enumerate_connected(g, cur, next, &excluded, size, used, banned, budget, visit)?;
        cur.remove(&x);
        if stop {
            return Ok(true);
        }
        excluded.insert(x);
    }
    Ok(false)
}

/// Classes of vertices pairwise at distance at least 5.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Distance5Partition {
    pub classes: Vec<BTreeSet<Vertex>>,
}

impl Distance5Partition {
    pub fn validate(&self, g: &Graph) -> std::result::Result<(), String> {
        let mut all = BTreeSet::new();
        for (i, c) in self.classes.iter().enumerate() {
            for &v in c {
                if !all.insert(v) {
                    return Err(format!("vertex {v} appears twice"));
                }
                if let Some((&w, d)) = g.distances_within(v, 4).iter().find(|(w, _)| **w != v && c.contains(w)) {
                    return Err(format!("class {i}: {v} and {w} at distance {d}"));
                }
            }
        }
        if all != g.vertex_set() {
            return Err("classes do not cover the graph".into());
        }
        Ok(())
    }
}

/// Greedy partition: vertices in ascending order take the smallest class
/// with no member within distance 4.
pub fn distance5_partition(g: &Graph) -> Distance5Partition {
    let mut class: BTreeMap<Vertex, usize> = BTreeMap::new();
    let mut classes: Vec<BTreeSet<Vertex>> = Vec::new();
    for v in g.vertices() {
        let near: BTreeSet<usize> = g.distances_within(v, 4).keys().filter_map(|w| class.get(w).copied()).collect();
        let c = (0..).find(|c| !near.contains(c)).unwrap();
        if c == classes.len() {
            classes.push(BTreeSet::new());
        }
        classes[c].insert(v);
        class.insert(v, c);
    }
    Distance5Partition { classes }
}

/// Result of contracting the radius-2 balls around a distance-5 set.
#[derive(Clone, Debug)]
pub struct BallContraction {
    pub graph: Graph,
    /// Model of `graph` in the original host; balls map to their new vertex.
    pub model: MinorModel,
    /// Ball centre to its contracted vertex.
    pub contracted: BTreeMap<Vertex, Vertex>,
}

impl BallContraction {
    pub fn center_of(&self, x: Vertex) -> Option<Vertex> {
        self.contracted.iter().find(|(_, &y)| y == x).map(|(&c, _)| c)
    }
}

/// Contracts every radius-2 ball centred in `centers`. Contracted vertices
/// get fresh identifiers from `g.next_id()` in ascending centre order.
pub fn ball_contract(g: &Graph, centers: &BTreeSet<Vertex>) -> Result<BallContraction> {
    for &c in centers {
        if !g.contains(c) {
            return Err(Error::UnknownVertex(c));
        }
        if let Some(&w) = g.distances_within(c, 4).keys().find(|w| **w != c && centers.contains(w)) {
            return Err(Error::Precondition(format!("centres {c} and {w} are closer than 5")));
        }
    }
    let mut owner: BTreeMap<Vertex, Vertex> = BTreeMap::new();
    let mut contracted = BTreeMap::new();
    let mut sets = BTreeMap::new();
    for (i, &c) in centers.iter().enumerate() {
        let id = g.next_id() + i;
        let ball: BTreeSet<Vertex> = g.distances_within(c, 2).into_keys().collect();
        for &x in &ball {
            owner.insert(x, id);
        }
        contracted.insert(c, id);
        sets.insert(id, ball);
    }
    let rep = |x: Vertex| owner.get(&x).copied().unwrap_or(x);
    let mut b = GraphBuilder::new();
    for v in g.vertices() {
        b.add_vertex(rep(v));
        if !owner.contains_key(&v) {
            sets.insert(v, BTreeSet::from([v]));
        }
    }
    for (u, v) in g.edges() {
        if rep(u) != rep(v) {
            b.add_edge(rep(u), rep(v));
        }
    }
    let graph = b.build();
    let model = MinorModel { pattern: graph.clone(), branch_sets: sets, induced: false };
    Ok(BallContraction { graph, model, contracted })
}

/// Induced subgraph `g[S]` carrying `h_sub` as a minor in which every ball
/// centre kept in `S` is sparsifiable.
#[derive(Clone, Debug)]
pub struct Restriction {
    pub set: BTreeSet<Vertex>,
    pub model: MinorModel,
}

/// Shortest-path tree in `g[ball]` from `c` to every terminal, BFS parents
/// chosen by smallest identifier.
fn path_tree(g: &Graph, ball: &BTreeSet<Vertex>, c: Vertex, terminals: &BTreeSet<Vertex>) -> BTreeSet<Vertex> {
    let mut parent: BTreeMap<Vertex, Vertex> = BTreeMap::new();
    let mut seen = BTreeSet::from([c]);
    let mut q = std::collections::VecDeque::from([c]);
    while let Some(u) = q.pop_front() {
        for &w in g.neighbors(u) {
            if ball.contains(&w) && seen.insert(w) {
                parent.insert(w, u);
                q.push_back(w);
            }
        }
    }
    let mut out = BTreeSet::from([c]);
    for &t in terminals {
        let mut x = t;
        while out.insert(x) {
            x = parent[&x];
        }
    }
    out
}

fn ball_ok(g: &Graph, c: Vertex, keep: &BTreeSet<Vertex>) -> bool {
    !keep.contains(&c) || is_sparsifiable(&g.induced_subgraph(keep).expect("subset"), c).is_some()
}

/// Connected subsets of `ball` containing `terminals`, kept-subset order by
/// size then lexicographic; the first one leaving `c` sparsifiable (or absent).
fn exhaustive_ball(g: &Graph, ball: &BTreeSet<Vertex>, c: Vertex, terminals: &BTreeSet<Vertex>, budget: &mut Budget) -> Result<Option<BTreeSet<Vertex>>> {
    let items: Vec<Vertex> = ball.iter().copied().filter(|x| !terminals.contains(x)).collect();
    if items.len() > 24 {
        return Err(Error::TooLarge { n: items.len(), bound: 24 });
    }
    let mut masks: Vec<u32> = (0..1u32 << items.len()).collect();
    masks.sort_by_key(|m| m.count_ones());
    for m in masks {
        budget.tick()?;
        let mut s = terminals.clone();
        s.extend((0..items.len()).filter(|i| m >> i & 1 == 1).map(|i| items[i]));
        if g.is_connected_set(&s) && ball_ok(g, c, &s) {
            return Ok(Some(s));
        }
    }
    Ok(None)
}

/// Builds `S` for one class of the distance-5 partition.
///
/// Each contracted ball used by `h_sub` is replaced by a shortest-path tree
/// from its centre to the chosen attachment vertices; when the centre is not
/// sparsifiable there, every connected subset of the ball containing the
/// attachments is tried, and then other attachment edges.
pub fn sparsifiable_restriction(g: &Graph, bc: &BallContraction, h_sub: &Graph, budget: &mut Budget) -> Result<Restriction> {
    if h_sub.max_degree() > 3 {
        return Err(Error::Precondition("h_sub has a vertex of degree above 3".into()));
    }
    for v in h_sub.vertices() {
        if !bc.graph.contains(v) {
            return Err(Error::UnknownVertex(v));
        }
    }
    for (u, v) in h_sub.edges() {
        if !bc.graph.has_edge(u, v) {
            return Err(Error::Precondition(format!("{u}-{v} is not an edge of the contracted graph")));
        }
    }
    let set_of = |x: Vertex| bc.model.set(x);
    let is_ball = |x: Vertex| bc.center_of(x).is_some();
    // Candidate host edges per h_sub edge.
    let edges: Vec<(Vertex, Vertex)> = h_sub.edges().collect();
    let candidates: Vec<Vec<(Vertex, Vertex)>> = edges
        .iter()
        .map(|&(u, v)| {
            let mut c = Vec::new();
            for &a in set_of(u) {
                for &b in g.neighbors(a) {
                    if set_of(v).contains(&b) {
                        c.push((a, b));
                    }
                }
            }
            c
        })
        .collect();
    let balls: Vec<Vertex> = h_sub.vertices().filter(|&x| is_ball(x)).collect();
    let mut choice = vec![0usize; edges.len()];
    // Try the default attachment choice, then vary the choices on edges
    // touching balls (odometer order).
    let varying: Vec<usize> = (0..edges.len()).filter(|&i| is_ball(edges[i].0) || is_ball(edges[i].1)).collect();
    loop {
        budget.tick()?;
        let mut terminals: BTreeMap<Vertex, BTreeSet<Vertex>> = balls.iter().map(|&b| (b, BTreeSet::new())).collect();
        for (i, &(u, v)) in edges.iter().enumerate() {
            let (a, b) = candidates[i][choice[i]];
            if let Some(t) = terminals.get_mut(&u) {
                t.insert(a);
            }
            if let Some(t) = terminals.get_mut(&v) {
                t.insert(b);
            }
        }
        let mut kept: BTreeMap<Vertex, BTreeSet<Vertex>> = BTreeMap::new();
        let mut failed = None;
        for &x in &balls {
            let c = bc.center_of(x).unwrap();
            let ball = set_of(x);
            let tree = path_tree(g, ball, c, &terminals[&x]);
            if ball_ok(g, c, &tree) {
                kept.insert(x, tree);
            } else if let Some(s) = exhaustive_ball(g, ball, c, &terminals[&x], budget)? {
                kept.insert(x, s);
            } else {
                failed = Some(c);
                break;
            }
        }
        if failed.is_none() {
            let mut sets = BTreeMap::new();
            for x in h_sub.vertices() {
                sets.insert(x, kept.get(&x).cloned().unwrap_or_else(|| set_of(x).clone()));
            }
            let set: BTreeSet<Vertex> = sets.values().flatten().copied().collect();
            let model = MinorModel { pattern: h_sub.clone(), branch_sets: sets, induced: false };
            let sub = g.induced_subgraph(&set)?;
            model.validate(&sub)?;
            return Ok(Restriction { set, model });
        }
        let mut j = 0;
        loop {
            if j == varying.len() {
                return Err(Error::Precondition(format!(
                    "no restriction keeps ball centre {} sparsifiable",
                    failed.unwrap()
                )));
            }
            let i = varying[j];
            choice[i] += 1;
            if choice[i] < candidates[i].len() {
                break;
            }
            choice[i] = 0;
            j += 1;
        }
    }
}
