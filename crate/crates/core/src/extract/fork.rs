use std::collections::BTreeSet;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::patterns::{recognize, Shape, Strictness, Witness};

/// The seven parts `A, B, C, {a}, {b}, {c}, S` of a fork-cleaning instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForkParts {
    pub a: Vertex,
    pub b: Vertex,
    pub c: Vertex,
    pub sa: BTreeSet<Vertex>,
    pub sb: BTreeSet<Vertex>,
    pub sc: BTreeSet<Vertex>,
    pub s: BTreeSet<Vertex>,
}

impl ForkParts {
    pub fn union(&self) -> BTreeSet<Vertex> {
        let mut u: BTreeSet<Vertex> = [self.a, self.b, self.c].into();
        for p in [&self.sa, &self.sb, &self.sc, &self.s] {
            u.extend(p);
        }
        u
    }

    /// Every broken precondition, described.
    pub fn problems(&self, g: &Graph) -> Vec<String> {
        let mut out = Vec::new();
        let parts: [(&str, BTreeSet<Vertex>); 7] = [
            ("{a}", [self.a].into()),
            ("{b}", [self.b].into()),
            ("{c}", [self.c].into()),
            ("A", self.sa.clone()),
            ("B", self.sb.clone()),
            ("C", self.sc.clone()),
            ("S", self.s.clone()),
        ];
        let mut part_of = std::collections::BTreeMap::new();
        for (i, (name, p)) in parts.iter().enumerate() {
            if p.is_empty() {
                out.push(format!("part {name} is empty"));
            }
            for &x in p {
                if !g.contains(x) {
                    out.push(format!("part {name} holds unknown vertex {x}"));
                } else if part_of.insert(x, i).is_some() {
                    out.push(format!("vertex {x} lies in two parts"));
                }
            }
            if !p.is_empty() && p.iter().all(|&x| g.contains(x)) && !g.is_connected_set(p) {
                out.push(format!("part {name} is not connected"));
            }
        }
        if !out.is_empty() {
            return out;
        }
        // Allowed cross-part edges: a-A, b-B, c-C, S-(A ∪ B ∪ C).
        let allowed = |i: usize, j: usize| {
            let (i, j) = (i.min(j), i.max(j));
            matches!((i, j), (0, 3) | (1, 4) | (2, 5) | (3, 6) | (4, 6) | (5, 6))
        };
        for (&x, &i) in &part_of {
            for y in g.neighbors(x) {
                if let Some(&j) = part_of.get(y) {
                    if i != j && x < *y && !allowed(i, j) {
                        out.push(format!("edge {x}-{y} joins {} and {}", parts[i].0, parts[j].0));
                    }
                }
            }
        }
        let sub = g.induced_subgraph(&self.union()).expect("checked");
        if !sub.is_connected() {
            out.push("the union of the parts is not connected".into());
        }
        out
    }
}

/// An induced fork or semi-fork whose degree-one vertices are `a, b, c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CleanFork {
    pub vertices: BTreeSet<Vertex>,
    pub witness: Witness,
}

impl CleanFork {
    pub fn validate(&self, g: &Graph, ends: [Vertex; 3]) -> std::result::Result<(), String> {
        let h = g.induced_subgraph(&self.vertices).map_err(|e| e.to_string())?;
        let shape = recognize(&h, Shape::Fork, Strictness::Strict).or_else(|| recognize(&h, Shape::SemiFork, Strictness::Strict));
        if shape.as_ref() != Some(&self.witness) {
            return Err("vertex set does not induce the stated fork or semi-fork".into());
        }
        let leaves: BTreeSet<Vertex> = h.vertices().filter(|&v| h.degree(v) == 1).collect();
        if leaves != BTreeSet::from(ends) {
            return Err(format!("degree-one vertices are {leaves:?}, expected {ends:?}"));
        }
        Ok(())
    }

    /// The arm or pendant path ending at `end`, listed from the centre (or its
    /// triangle vertex) outwards, and the centre-side vertex it starts from.
    pub fn route_to(&self, end: Vertex) -> (Vertex, Vec<Vertex>) {
        match &self.witness {
            Witness::Fork { center, arms } => {
                let arm = arms.iter().find(|a| a.last() == Some(&end)).expect("end of an arm");
                (*center, arm.clone())
            }
            Witness::SemiFork { triangle, paths } => {
                let i = (0..3).find(|&i| paths[i].last() == Some(&end) || (paths[i].is_empty() && triangle[i] == end)).expect("end of a path");
                (triangle[i], paths[i].clone())
            }
            _ => unreachable!("clean forks are forks or semi-forks"),
        }
    }
}

fn shape_of(g: &Graph, set: &BTreeSet<Vertex>, ends: [Vertex; 3]) -> Option<CleanFork> {
    let h = g.induced_subgraph(set).ok()?;
    let witness = recognize(&h, Shape::Fork, Strictness::Strict).or_else(|| recognize(&h, Shape::SemiFork, Strictness::Strict))?;
    let out = CleanFork { vertices: set.clone(), witness };
    out.validate(g, ends).ok()?;
    Some(out)
}

/// Finds an induced fork or semi-fork with degree-one vertices `a, b, c`.
///
/// For each choice of neighbours `a' ∈ A`, `b' ∈ B`, `c' ∈ C` (ascending),
/// every other neighbour of `a, b, c` is discarded and a connected vertex set
/// through `a', b', c'` is shrunk by deleting vertices in ascending order
/// while the three stay connected; adding back `a, b, c` as pendants gives
/// the shape. Exhaustive search over vertex sets is the fallback.
pub fn clean_fork(g: &Graph, parts: &ForkParts, budget: &mut Budget) -> Result<CleanFork> {
    let problems = parts.problems(g);
    if !problems.is_empty() {
        return Err(Error::Precondition(problems.join("; ")));
    }
    let ends = [parts.a, parts.b, parts.c];
    let inner: BTreeSet<Vertex> = parts.sa.iter().chain(&parts.sb).chain(&parts.sc).chain(&parts.s).copied().collect();
    let nbrs = |x: Vertex, p: &BTreeSet<Vertex>| -> Vec<Vertex> { g.neighbors(x).iter().copied().filter(|y| p.contains(y)).collect() };
    let (na, nb, nc) = (nbrs(parts.a, &parts.sa), nbrs(parts.b, &parts.sb), nbrs(parts.c, &parts.sc));
    let all_end_nbrs: BTreeSet<Vertex> = na.iter().chain(&nb).chain(&nc).copied().collect();
    for &x in &na {
        for &y in &nb {
            for &z in &nc {
                budget.tick()?;
                let terms = [x, y, z];
                let mut keep: BTreeSet<Vertex> = inner.iter().copied().filter(|v| !all_end_nbrs.contains(v) || terms.contains(v)).collect();
                let sub = g.induced_subgraph(&keep)?;
                let Some(comp) = sub.components().into_iter().find(|c| c.contains(&x)) else { continue };
                if !comp.contains(&y) || !comp.contains(&z) {
                    continue;
                }
                keep = comp;
                let candidates: Vec<Vertex> = keep.iter().copied().filter(|v| !terms.contains(v)).collect();
                for v in candidates {
                    keep.remove(&v);
                    let sub = g.induced_subgraph(&keep)?;
                    match sub.components().into_iter().find(|c| c.contains(&x)) {
                        Some(c) if c.contains(&y) && c.contains(&z) => keep = c,
                        _ => {
                            keep.insert(v);
                        }
                    }
                }
                keep.extend(ends);
                if let Some(f) = shape_of(g, &keep, ends) {
                    return Ok(f);
                }
            }
        }
    }
    exhaustive(g, &inner, ends, budget)?
        .ok_or_else(|| Error::Internal("no induced fork or semi-fork through a, b, c".into()))
}

fn exhaustive(g: &Graph, inner: &BTreeSet<Vertex>, ends: [Vertex; 3], budget: &mut Budget) -> Result<Option<CleanFork>> {
    let items: Vec<Vertex> = inner.iter().copied().collect();
    if items.len() > 24 {
        return Err(Error::TooLarge { n: items.len(), bound: 24 });
    }
    for size in 1..=items.len() {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            budget.tick()?;
            let mut set: BTreeSet<Vertex> = idx.iter().map(|&i| items[i]).collect();
            set.extend(ends);
            if let Some(f) = shape_of(g, &set, ends) {
                return Ok(Some(f));
            }
            // Next combination in lexicographic order.
            let mut i = size;
            while i > 0 && idx[i - 1] == items.len() - size + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            idx[i - 1] += 1;
            for j in i..size {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    Ok(None)
}
