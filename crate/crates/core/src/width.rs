//! Path decompositions, exact pathwidth, and degree-3 witnesses of large pathwidth.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use crate::budget::{Budget, Search};
use crate::error::{Error, Result};
use crate::graph::{Dense, Graph, GraphBuilder, RootedTree, Vertex};
use crate::minors::MinorModel;

/// Default component size accepted by [`pathwidth_exact`].
pub const EXACT_BOUND: usize = 22;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PathDecomposition {
    pub bags: Vec<BTreeSet<Vertex>>,
}

impl PathDecomposition {
    /// Largest bag size minus one; `-1` when there are no nonempty bags.
    pub fn width(&self) -> isize {
        self.bags.iter().map(|b| b.len()).max().unwrap_or(0) as isize - 1
    }

    pub fn validate(&self, g: &Graph) -> std::result::Result<(), String> {
        let mut first: BTreeMap<Vertex, usize> = BTreeMap::new();
        let mut last: BTreeMap<Vertex, usize> = BTreeMap::new();
        let mut count: BTreeMap<Vertex, usize> = BTreeMap::new();
        for (i, bag) in self.bags.iter().enumerate() {
            for &v in bag {
                if !g.contains(v) {
                    return Err(format!("bag {i} holds unknown vertex {v}"));
                }
                first.entry(v).or_insert(i);
                last.insert(v, i);
                *count.entry(v).or_default() += 1;
            }
        }
        for v in g.vertices() {
            let Some(&f) = first.get(&v) else {
                return Err(format!("vertex {v} is in no bag"));
            };
            if last[&v] - f + 1 != count[&v] {
                return Err(format!("bags containing {v} are not contiguous"));
            }
        }
        for (u, v) in g.edges() {
            if !self.bags.iter().any(|b| b.contains(&u) && b.contains(&v)) {
                return Err(format!("edge {u}-{v} is in no bag"));
            }
        }
        Ok(())
    }

    /// Decomposition induced by a vertex ordering: bag `i` is `v_i` together
    /// with the earlier vertices that still have a neighbour at or after `i`.
    pub fn from_order(g: &Graph, order: &[Vertex]) -> PathDecomposition {
        let pos: BTreeMap<Vertex, usize> = order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let reach: BTreeMap<Vertex, usize> = order
            .iter()
            .map(|&v| (v, g.neighbors(v).iter().map(|w| pos[w]).max().unwrap_or(0).max(pos[&v])))
            .collect();
        let mut bags = Vec::with_capacity(order.len());
        let mut open: BTreeSet<Vertex> = BTreeSet::new();
        for (i, &v) in order.iter().enumerate() {
            open.retain(|u| reach[u] >= i);
            let mut bag = open.clone();
            bag.insert(v);
            bags.push(bag);
            open.insert(v);
        }
        PathDecomposition { bags }
    }
}

/// Exact pathwidth with an optimal decomposition; components larger than
/// [`EXACT_BOUND`] are rejected.
pub fn pathwidth_exact(g: &Graph) -> Result<(isize, PathDecomposition)> {
    pathwidth_exact_with(g, EXACT_BOUND, &mut Budget::unlimited())
}

pub fn pathwidth_exact_with(g: &Graph, bound: usize, budget: &mut Budget) -> Result<(isize, PathDecomposition)> {
    let comps = g.components();
    if let Some(c) = comps.iter().find(|c| c.len() > bound) {
        return Err(Error::TooLarge { n: c.len(), bound });
    }
    let mut bags = Vec::new();
    for c in comps {
        let order = separation_order(&g.induced_subgraph(&c)?, budget)?;
        bags.extend(PathDecomposition::from_order(g, &order).bags);
    }
    let d = PathDecomposition { bags };
    Ok((d.width(), d))
}

/// Optimal vertex-separation ordering of a connected graph, by DP over subsets.
fn separation_order(g: &Graph, budget: &mut Budget) -> Result<Vec<Vertex>> {
    let d = Dense::new(g);
    let n = d.n();
    if n <= 1 {
        return Ok(d.ids.clone());
    }
    let nbr: Vec<u32> = d.adj.iter().map(|ns| ns.iter().fold(0u32, |m, &w| m | 1 << w)).collect();
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut f = vec![0u8; 1usize << n];
    for s in 1..=full {
        if s & 0x3ff == 0 {
            budget.tick()?;
        }
        let outside = !s & full;
        let mut boundary = 0u8;
        let mut best = u8::MAX;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if nbr[v] & outside != 0 {
                boundary += 1;
            }
            best = best.min(f[(s & !(1 << v)) as usize]);
        }
        f[s as usize] = best.max(boundary);
    }
    let mut order = Vec::with_capacity(n);
    let mut s = full;
    while s != 0 {
        let mut pick = None;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let prev = f[(s & !(1 << v)) as usize];
            if pick.is_none_or(|(_, p)| prev < p) {
                pick = Some((v, prev));
            }
        }
        let (v, _) = pick.expect("nonempty set");
        order.push(d.ids[v]);
        s &= !(1 << v);
    }
    order.reverse();
    Ok(order)
}

type Label = Vec<(usize, bool)>;

/// Label of a vertex from the labels of its children (rooted-tree pathwidth
/// labelling). Each label is a strictly decreasing list of values; every
/// entry except possibly the last is critical.
fn combine(children: Vec<Label>) -> Label {
    let Some(a) = children.iter().map(|l| l[0].0).max() else {
        return vec![(0, false)];
    };
    if a == 0 {
        return vec![(1, false)];
    }
    let (heavy, light): (Vec<Label>, Vec<Label>) = children.into_iter().partition(|l| l[0].0 == a);
    match heavy.len() {
        1 => {
            let h = heavy.into_iter().next().unwrap();
            if !h[0].1 {
                return vec![(a, false)];
            }
            let mut rest = light;
            if h.len() > 1 {
                rest.push(h[1..].to_vec());
            }
            let u = combine(rest);
            if u[0].0 >= a {
                vec![(a + 1, false)]
            } else {
                let mut out = vec![(a, true)];
                out.extend(u);
                out
            }
        }
        2 if heavy.iter().all(|l| !l[0].1) => vec![(a, true)],
        _ => vec![(a + 1, false)],
    }
}

/// Pathwidth of every rooted subtree, computed bottom-up without recursion.
fn subtree_widths(t: &RootedTree) -> BTreeMap<Vertex, usize> {
    let mut labels: BTreeMap<Vertex, Label> = BTreeMap::new();
    let mut widths = BTreeMap::new();
    for &v in t.preorder().iter().rev() {
        let kids = t.children(v).iter().map(|c| labels.remove(c).unwrap()).collect();
        let l = combine(kids);
        widths.insert(v, l[0].0);
        labels.insert(v, l);
    }
    widths
}

/// Exact pathwidth of a forest with a decomposition of that width.
pub fn tree_pathwidth(t: &Graph) -> Result<(isize, PathDecomposition)> {
    if !t.is_forest() {
        return Err(Error::NotAForest);
    }
    let mut bags = Vec::new();
    for c in t.components() {
        tree_bags(&t.induced_subgraph(&c)?, &mut bags);
    }
    let d = PathDecomposition { bags };
    Ok((d.width(), d))
}

/// Pathwidth of a forest, without building a decomposition.
pub fn tree_pathwidth_value(t: &Graph) -> Result<isize> {
    if !t.is_forest() {
        return Err(Error::NotAForest);
    }
    let mut w = -1;
    for c in t.components() {
        let root = *c.iter().next().unwrap();
        let rt = RootedTree::new(t.induced_subgraph(&c)?, root)?;
        w = w.max(subtree_widths(&rt)[&root] as isize);
    }
    Ok(w)
}

/// Appends bags for a tree of pathwidth `k`: a spine path whose removal
/// leaves components of width below `k`, each decomposed recursively with
/// its spine vertex added to every bag.
fn tree_bags(t: &Graph, out: &mut Vec<BTreeSet<Vertex>>) {
    let root = t.vertices().next().unwrap();
    let rt = RootedTree::new(t.clone(), root).expect("connected tree");
    let w = subtree_widths(&rt);
    let k = w[&root];
    let heavy = |v: Vertex| -> Vec<Vertex> { rt.children(v).iter().copied().filter(|c| w[c] == k).collect() };
    let descend = |mut v: Vertex| -> Vec<Vertex> {
        let mut p = vec![v];
        while let Some(&c) = heavy(v).first() {
            p.push(c);
            v = c;
        }
        p
    };
    let mut spine = vec![root];
    let mut v = root;
    loop {
        let h = heavy(v);
        match h.len() {
            0 => break,
            1 => {
                v = h[0];
                spine.push(v);
            }
            _ => {
                // Both heavy branches continue downward; the part above `v` is light.
                let mut left = descend(h[0]);
                left.reverse();
                let right = descend(h[1]);
                spine = left;
                spine.push(v);
                spine.extend(right);
                break;
            }
        }
    }
    let on_spine: BTreeSet<Vertex> = spine.iter().copied().collect();
    let rest = t.without(&on_spine);
    let comps = rest.components();
    for (i, &p) in spine.iter().enumerate() {
        for c in comps.iter().filter(|c| c.iter().any(|&x| t.has_edge(x, p))) {
            let start = out.len();
            tree_bags(&rest.induced_subgraph(c).expect("component"), out);
            for bag in &mut out[start..] {
                bag.insert(p);
            }
        }
        match spine.get(i + 1) {
            Some(&q) => out.push(BTreeSet::from([p, q])),
            None if spine.len() == 1 => out.push(BTreeSet::from([p])),
            None => {}
        }
    }
}

/// Certified lower bound from a minor model of a pattern of known pathwidth.
pub fn pathwidth_lower_bound_by_minor(g: &Graph, model: &MinorModel, pw_pattern: isize) -> Result<isize> {
    let v = model.violations(g);
    if !v.is_empty() {
        return Err(Error::InvalidModel(v[0].to_string()));
    }
    Ok(pw_pattern)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WidthMethod {
    Tree,
    Exact,
}

/// A subgraph of maximum degree at most 3 with its exact pathwidth and an
/// optimal decomposition.
#[derive(Clone, Debug)]
pub struct Deg3Subgraph {
    pub graph: Graph,
    pub pathwidth: isize,
    pub decomposition: PathDecomposition,
    pub method: WidthMethod,
}

fn certify(h: &Graph, budget: &mut Budget) -> Result<Option<Deg3Subgraph>> {
    if h.is_forest() {
        let (pw, d) = tree_pathwidth(h)?;
        return Ok(Some(Deg3Subgraph { graph: h.clone(), pathwidth: pw, decomposition: d, method: WidthMethod::Tree }));
    }
    match pathwidth_exact_with(h, EXACT_BOUND, budget) {
        Ok((pw, d)) => Ok(Some(Deg3Subgraph { graph: h.clone(), pathwidth: pw, decomposition: d, method: WidthMethod::Exact })),
        Err(Error::TooLarge { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Spanning forest grown breadth-first from `root` in which every vertex
/// keeps at most three incident edges.
fn capped_bfs_forest(g: &Graph, root: Vertex) -> Graph {
    let mut b = GraphBuilder::new();
    let mut deg: BTreeMap<Vertex, usize> = BTreeMap::new();
    let mut seen = BTreeSet::new();
    let order = std::iter::once(root).chain(g.vertices().filter(|&v| v != root));
    for s in order {
        if !seen.insert(s) {
            continue;
        }
        b.add_vertex(s);
        let mut q = std::collections::VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            for &w in g.neighbors(u) {
                if deg.get(&u).copied().unwrap_or(0) >= 3 {
                    break;
                }
                if seen.insert(w) {
                    b.add_edge(u, w);
                    *deg.entry(u).or_default() += 1;
                    *deg.entry(w).or_default() += 1;
                    q.push_back(w);
                }
            }
        }
    }
    b.build()
}

/// Searches for a subgraph of maximum degree at most 3 and pathwidth at
/// least `k`.
///
/// `NotFound` is returned only when it is certain that none exists (too few
/// vertices, or `g` itself has exact pathwidth below `k`). Otherwise an
/// unsuccessful search reports `Exhausted`.
pub fn find_deg3_subgraph(g: &Graph, k: usize, budget: &mut Budget) -> Result<Search<Deg3Subgraph>> {
    let k = k as isize;
    if (g.vertex_count() as isize) <= k {
        return Ok(Search::NotFound);
    }
    if g.max_degree() <= 3 {
        if let Some(c) = certify(g, budget)? {
            return Ok(if c.pathwidth >= k { Search::Found(c) } else { Search::NotFound });
        }
    }
    let small = g.components().iter().all(|c| c.len() <= EXACT_BOUND);
    if small && pathwidth_exact_with(g, EXACT_BOUND, budget)?.0 < k {
        return Ok(Search::NotFound);
    }
    for root in g.vertices() {
        budget.tick()?;
        let f = capped_bfs_forest(g, root);
        let (pw, d) = tree_pathwidth(&f)?;
        if pw >= k {
            return Ok(Search::Found(Deg3Subgraph { graph: f, pathwidth: pw, decomposition: d, method: WidthMethod::Tree }));
        }
    }
    if !small {
        return Ok(Search::Exhausted);
    }
    // Branch on which edge to drop at a vertex of highest degree, pruning
    // as soon as the width falls below the target.
    let mut seen: HashSet<Vec<(Vertex, Vertex)>> = HashSet::new();
    let mut stack = vec![g.clone()];
    while let Some(h) = stack.pop() {
        budget.tick()?;
        if !seen.insert(h.edges().collect()) {
            continue;
        }
        let (pw, d) = pathwidth_exact_with(&h, EXACT_BOUND, budget)?;
        if pw < k {
            continue;
        }
        let v = h.vertices().max_by_key(|&v| (h.degree(v), std::cmp::Reverse(v))).unwrap();
        if h.degree(v) <= 3 {
            return Ok(Search::Found(Deg3Subgraph { graph: h, pathwidth: pw, decomposition: d, method: WidthMethod::Exact }));
        }
        for &w in h.neighbors(v).iter().rev() {
            let mut b = GraphBuilder::from_graph(&h);
            b.remove_edge(v, w);
            stack.push(b.build());
        }
    }
    Ok(Search::NotFound)
}
