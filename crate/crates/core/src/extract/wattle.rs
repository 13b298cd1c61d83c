use std::collections::{BTreeMap, BTreeSet, VecDeque};

use super::fork::{clean_fork, CleanFork, ForkParts};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::generators::{complete_binary_tree, Branch, WattleCertificate};
use crate::graph::{Graph, Vertex};
use crate::minors::MinorModel;
use crate::patterns::Witness;

/// Shortest path inside `allowed` from any vertex of `from` to any vertex of
/// `to`. Ties go to lower identifiers.
pub(crate) fn shortest_path(g: &Graph, allowed: &BTreeSet<Vertex>, from: &BTreeSet<Vertex>, to: &BTreeSet<Vertex>) -> Option<Vec<Vertex>> {
    let mut prev: BTreeMap<Vertex, Option<Vertex>> = BTreeMap::new();
    let mut queue = VecDeque::new();
    for &s in from {
        if allowed.contains(&s) {
            prev.insert(s, None);
            queue.push_back(s);
        }
    }
    while let Some(x) = queue.pop_front() {
        if to.contains(&x) {
            let mut path = vec![x];
            let mut cur = x;
            while let Some(Some(p)) = prev.get(&cur) {
                path.push(*p);
                cur = *p;
            }
            path.reverse();
            return Some(path);
        }
        for &y in g.neighbors(x) {
            if allowed.contains(&y) && !prev.contains_key(&y) {
                prev.insert(y, Some(x));
                queue.push_back(y);
            }
        }
    }
    None
}

fn depth_of(v: Vertex) -> usize {
    (usize::BITS - 1 - (v + 1).leading_zeros()) as usize
}

struct Model<'a> {
    g: &'a Graph,
    m: &'a MinorModel,
}

impl Model<'_> {
    fn x(&self, v: Vertex) -> &BTreeSet<Vertex> {
        self.m.set(v)
    }

    fn touching(&self, set: &BTreeSet<Vertex>, other: Vertex) -> BTreeSet<Vertex> {
        let o = self.x(other);
        set.iter().copied().filter(|&y| self.g.neighbors(y).iter().any(|z| o.contains(z))).collect()
    }

    /// `P_v`: a shortest path in `X_v` from the part touching the parent's
    /// set to the part touching the left child's set.
    fn p(&self, v: Vertex) -> Result<Vec<Vertex>> {
        let xv = self.x(v);
        let from = self.touching(xv, (v - 1) / 2);
        let to = self.touching(xv, 2 * v + 1);
        shortest_path(self.g, xv, &from, &to).ok_or_else(|| Error::InvalidModel(format!("no path through branch set {v}")))
    }

    /// `w_{v,0}`: the first vertex of `P_v`, or for a leaf of the model the
    /// lowest vertex of `X_v` next to the parent's set.
    fn w0(&self, v: Vertex, leaf_depth: usize) -> Result<Vertex> {
        if depth_of(v) == leaf_depth {
            let t = self.touching(self.x(v), (v - 1) / 2);
            t.first().copied().ok_or_else(|| Error::InvalidModel(format!("branch set {v} misses its parent")))
        } else {
            Ok(self.p(v)?[0])
        }
    }
}

/// Partial wattle: images keyed by base vertex of T_j (heap numbering), with
/// the model vertex whose `w_{v,0}` is each leaf image.
struct Partial {
    branch: BTreeMap<Vertex, Branch>,
    paths: BTreeMap<(Vertex, Vertex), Vec<Vertex>>,
    leaf_model: BTreeMap<Vertex, Vertex>,
    triangles: BTreeSet<Vertex>,
}

/// Turns an induced minor model of T_{4k} into an induced wattle of height k.
///
/// The pattern must be T_{4k} with heap identifiers (root 0, children of `i`
/// at `2i+1` and `2i+2`).
pub fn minor_to_wattle(g: &Graph, m: &MinorModel, k: usize, budget: &mut Budget) -> Result<WattleCertificate> {
    let want = complete_binary_tree(4 * k);
    if &m.pattern != want.graph() {
        return Err(Error::Precondition(format!("model pattern is not T_{} with heap identifiers", 4 * k)));
    }
    if !m.induced {
        return Err(Error::Precondition("model is not marked induced".into()));
    }
    m.validate(g)?;
    let model = Model { g, m };
    let leaf_depth = 4 * k;
    let mut part = if k == 0 {
        let r = *model.x(0).first().expect("validated model has nonempty sets");
        Partial { branch: [(0, Branch::Vertex(r))].into(), paths: BTreeMap::new(), leaf_model: [(0, 0)].into(), triangles: BTreeSet::new() }
    } else {
        base_case(&model, leaf_depth)?
    };
    for j in 2..=k {
        part = step(&model, part, j, leaf_depth, budget)?;
    }
    let mut used: BTreeSet<Vertex> = BTreeSet::new();
    for b in part.branch.values() {
        used.extend(b.vertices());
    }
    for p in part.paths.values() {
        used.extend(p);
    }
    let w = WattleCertificate {
        base: complete_binary_tree(k),
        triangles: part.triangles,
        host: g.induced_subgraph(&used)?,
        branch: part.branch,
        paths: part.paths,
    };
    w.validate_induced_in(g).map_err(|e| Error::Internal(format!("wattle construction: {e}")))?;
    Ok(w)
}

/// Height one: a shortest path between `w_{a,0}` and `w_{b,0}` for the lowest
/// left and right descendants `a`, `b` of the root at depth 4.
fn base_case(model: &Model, leaf_depth: usize) -> Result<Partial> {
    let (a, b) = (15, 23);
    let (wa, wb) = (model.w0(a, leaf_depth)?, model.w0(b, leaf_depth)?);
    let mut allowed: BTreeSet<Vertex> = [wa, wb].into();
    let route = |mut v: Vertex| {
        let mut out = vec![];
        while v != 0 {
            v = (v - 1) / 2;
            out.push(v);
        }
        out
    };
    for v in route(a).into_iter().chain(route(b)) {
        allowed.extend(model.x(v));
    }
    let path = shortest_path(model.g, &allowed, &[wa].into(), &[wb].into()).ok_or_else(|| Error::Internal("no base path".into()))?;
    let root_set = model.x(0);
    let i = path.iter().position(|y| root_set.contains(y)).ok_or_else(|| Error::Internal("base path misses the root set".into()))?;
    let left: Vec<Vertex> = path[..=i].iter().rev().copied().collect();
    let right: Vec<Vertex> = path[i..].to_vec();
    Ok(Partial {
        branch: [(0, Branch::Vertex(path[i])), (1, Branch::Vertex(wa)), (2, Branch::Vertex(wb))].into(),
        paths: [((0, 1), left), ((0, 2), right)].into(),
        leaf_model: [(1, a), (2, b)].into(),
        triangles: BTreeSet::new(),
    })
}

/// Grows every leaf of a height `j-1` wattle into a fork or semi-fork.
fn step(model: &Model, mut part: Partial, j: usize, leaf_depth: usize, budget: &mut Budget) -> Result<Partial> {
    let leaves: Vec<(Vertex, Vertex)> = part.leaf_model.iter().map(|(&l, &v)| (l, v)).collect();
    let mut leaf_model = BTreeMap::new();
    for (leaf, v) in leaves {
        debug_assert_eq!(depth_of(v), 4 * (j - 1));
        let pv = model.p(v)?;
        let lv = 2 * v + 1;
        let s = 2 * lv + 1;
        let (ls, cs) = (2 * s + 1, 2 * s + 2);
        let (b, c) = (2 * ls + 1, 2 * cs + 1);
        let a_end = *pv.last().unwrap();
        let (wb, wc) = (model.w0(b, leaf_depth)?, model.w0(c, leaf_depth)?);
        let parts = ForkParts {
            a: a_end,
            b: wb,
            c: wc,
            sa: model.x(lv).clone(),
            sb: model.x(ls).clone(),
            sc: model.x(cs).clone(),
            s: model.x(s).clone(),
        };
        let fork = clean_fork(model.g, &parts, budget)?;
        attach(&mut part, leaf, &pv, &fork, [a_end, wb, wc]);
        leaf_model.insert(2 * leaf + 1, b);
        leaf_model.insert(2 * leaf + 2, c);
    }
    part.leaf_model = leaf_model;
    Ok(part)
}

fn attach(part: &mut Partial, leaf: Vertex, pv: &[Vertex], fork: &CleanFork, ends: [Vertex; 3]) {
    let (hub_a, arm_a) = fork.route_to(ends[0]);
    let parent = (leaf - 1) / 2;
    let incoming = part.paths.get_mut(&(parent, leaf)).expect("leaf edge");
    incoming.extend(&pv[1..]);
    incoming.extend(arm_a.iter().rev().skip(1));
    if arm_a.is_empty() {
        // The pendant end is the triangle vertex itself; the path already ends there.
    } else {
        incoming.push(hub_a);
    }
    let (hub_b, arm_b) = fork.route_to(ends[1]);
    let (hub_c, arm_c) = fork.route_to(ends[2]);
    let branch = match &fork.witness {
        Witness::Fork { center, .. } => Branch::Vertex(*center),
        Witness::SemiFork { .. } => {
            part.triangles.insert(leaf);
            Branch::Triangle([hub_a, hub_b, hub_c])
        }
        _ => unreachable!(),
    };
    part.branch.insert(leaf, branch);
    let down = |hub: Vertex, arm: Vec<Vertex>| {
        let mut p = vec![hub];
        p.extend(arm);
        p
    };
    part.branch.insert(2 * leaf + 1, Branch::Vertex(ends[1]));
    part.branch.insert(2 * leaf + 2, Branch::Vertex(ends[2]));
    part.paths.insert((leaf, 2 * leaf + 1), down(hub_b, arm_b));
    part.paths.insert((leaf, 2 * leaf + 2), down(hub_c, arm_c));
}
