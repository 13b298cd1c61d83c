use std::collections::{BTreeMap, BTreeSet};

use crate::budget::{Budget, Search};
use crate::error::{Error, Result};
use crate::generators::{binary_tree_plus, complete_binary_tree, k_ary_tree};
use crate::graph::{contract_sets, Graph, Vertex};
use crate::minors::{
    ball_contract, distance5_partition, find_minor_model, is_sparsifiable, is_sparsifiable_graph, repair_to_induced_model,
    sparsifiable_restriction, MinorModel,
};
use crate::patterns::{find_induced_subgraph, recognize, Embedding, Shape, Strictness, Witness};
use crate::width::{find_deg3_subgraph, tree_pathwidth_value};

/// One step of the recurrence behind the bounded-degree threshold:
/// `(2 x² log^δ x + 1)(Δ² + 1) − 1`, natural logarithm.
pub fn threshold_step(x: f64, delta: f64, max_degree: f64) -> f64 {
    (2.0 * x * x * x.ln().powf(delta) + 1.0) * (max_degree * max_degree + 1.0) - 1.0
}

/// `g(0), …, g(Δ⁴+1)` with `g(Δ⁴+1) = 2^{k+2} − 1`. Values overflow to
/// infinity quickly; they are reported, never used as search bounds.
pub fn degree_thresholds(k: usize, max_degree: usize, delta: f64) -> Vec<f64> {
    let q = max_degree.pow(4) + 1;
    let mut out = vec![0.0; q + 1];
    out[q] = 2f64.powi(k as i32 + 2) - 1.0;
    for i in (0..q).rev() {
        out[i] = threshold_step(out[i + 1], delta, max_degree as f64);
    }
    out
}

/// Per-stage overrides for the bounded-degree pipeline.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Thresholds {
    /// Pathwidth demanded of each degree-3 subgraph; defaults to pw(T_k^+).
    pub stage_width: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StageReport {
    pub class: usize,
    pub centres: usize,
    pub contracted_vertices: usize,
    pub width_target: usize,
    pub subgraph_width: Option<isize>,
    pub kept_vertices: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Model(MinorModel),
    /// A stage's guarantee failed at the chosen thresholds; not a disproof.
    Failed { stage: String, reason: String },
    Exhausted { stage: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PipelineReport {
    pub stages: Vec<StageReport>,
    pub outcome: Outcome,
}

fn exhausted(stage: &str) -> Outcome {
    Outcome::Exhausted { stage: stage.into() }
}

fn failed(stage: &str, reason: impl Into<String>) -> Outcome {
    Outcome::Failed { stage: stage.into(), reason: reason.into() }
}

/// Bounded-degree route to an induced T_k minor: per distance-5 class,
/// contract radius-2 balls, find a degree-3 subgraph of large pathwidth,
/// and restrict to an induced subgraph in which the class's centres are
/// sparsifiable. On the sparsifiable result, a T_k^+ minor is repaired into
/// an induced T_k model.
pub fn bounded_degree_pipeline(g: &Graph, k: usize, max_degree: usize, thresholds: &Thresholds, budget: &mut Budget) -> Result<PipelineReport> {
    if g.max_degree() > max_degree {
        return Err(Error::Precondition(format!("maximum degree {} exceeds {max_degree}", g.max_degree())));
    }
    let plus = binary_tree_plus(k);
    let target = match thresholds.stage_width {
        Some(w) => w,
        None => tree_pathwidth_value(plus.graph())? as usize,
    };
    let partition = distance5_partition(g);
    let mut cur = g.clone();
    let mut stages = Vec::new();
    let done = |stages, outcome| Ok(PipelineReport { stages, outcome });
    for (i, class) in partition.classes.iter().enumerate() {
        let centres: BTreeSet<Vertex> = class.iter().copied().filter(|&v| cur.contains(v)).collect();
        if centres.is_empty() {
            continue;
        }
        let bc = ball_contract(&cur, &centres)?;
        bc.model.validate(&cur)?;
        let mut report = StageReport {
            class: i,
            centres: centres.len(),
            contracted_vertices: bc.graph.vertex_count(),
            width_target: target,
            subgraph_width: None,
            kept_vertices: 0,
        };
        let h = match find_deg3_subgraph(&bc.graph, target, budget) {
            Ok(Search::Found(h)) => h,
            Ok(Search::NotFound) => {
                stages.push(report);
                return done(stages, failed("degree-3 subgraph", format!("contracted graph of class {i} has pathwidth below {target}")));
            }
            Ok(Search::Exhausted) | Err(Error::Exhausted) => {
                stages.push(report);
                return done(stages, exhausted("degree-3 subgraph"));
            }
            Err(e) => return Err(e),
        };
        h.decomposition.validate(&h.graph).map_err(Error::Internal)?;
        report.subgraph_width = Some(h.pathwidth);
        let r = match sparsifiable_restriction(&cur, &bc, &h.graph, budget) {
            Ok(r) => r,
            Err(Error::Exhausted) => {
                stages.push(report);
                return done(stages, exhausted("sparsifiable restriction"));
            }
            Err(e) => {
                stages.push(report);
                return done(stages, failed("sparsifiable restriction", e.to_string()));
            }
        };
        let next = cur.induced_subgraph(&r.set)?;
        r.model.validate(&next)?;
        if let Some(&v) = centres.iter().find(|&&v| next.contains(v) && is_sparsifiable(&next, v).is_none()) {
            return Err(Error::Internal(format!("centre {v} is not sparsifiable after its stage")));
        }
        report.kept_vertices = next.vertex_count();
        stages.push(report);
        cur = next;
    }
    if !is_sparsifiable_graph(&cur) {
        return Err(Error::Internal("final induced subgraph is not sparsifiable".into()));
    }
    let model = match find_minor_model(&cur, plus.graph(), budget)? {
        Search::Found(m) => m,
        Search::NotFound => return done(stages, failed("minor search", format!("no T_{k}^+ minor in the sparsifiable subgraph"))),
        Search::Exhausted => return done(stages, exhausted("minor search")),
    };
    model.validate(&cur)?;
    let tk: BTreeSet<Vertex> = complete_binary_tree(k).graph().vertex_set();
    let repaired = repair_to_induced_model(&cur, &model, &tk)?;
    repaired.model.validate(g)?;
    done(stages, Outcome::Model(repaired.model))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MinorFreeOutcome {
    /// Induced model of 𝒯_k.
    Model(MinorModel),
    /// `g` has a `K_n` minor after all.
    CliqueMinor(MinorModel),
    /// The contracted graph has an induced `K_n` or `K_{n,n}`, so `g` is not `K_n`-minor-free.
    Dense { pattern: Graph, model: MinorModel },
    Failed { stage: String, reason: String },
    Exhausted { stage: String },
}

/// Compose an induced embedding into a contraction with the contracted sets.
fn compose(e: &Embedding, parts: &[BTreeSet<Vertex>], ids: &[Vertex]) -> MinorModel {
    let part_of: BTreeMap<Vertex, usize> = ids.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let branch_sets = e.map.iter().map(|(&p, y)| (p, parts[part_of[y]].clone())).collect();
    MinorModel { pattern: e.pattern.clone(), branch_sets, induced: e.induced }
}

/// Minor-free route to an induced 𝒯_k minor: find a 𝒯_m minor (`m` defaults
/// to `k`), contract its branch sets, and look for an induced `K_n`,
/// `K_{n,n}` or 𝒯_k in the result.
pub fn minor_free_pipeline(g: &Graph, k: usize, n: usize, m: Option<usize>, budget: &mut Budget) -> Result<MinorFreeOutcome> {
    let m = m.unwrap_or(k);
    // Spot check with a bounded share of the budget.
    let mut spot = Budget::new(budget.limit().unwrap_or(u64::MAX).min(200_000));
    if let Ok(Search::Found(model)) = find_minor_model(g, &Graph::complete(n), &mut spot) {
        model.validate(g)?;
        return Ok(MinorFreeOutcome::CliqueMinor(model));
    }
    let big = k_ary_tree(m)?;
    let model = match find_minor_model(g, big.graph(), budget) {
        Ok(Search::Found(x)) => x,
        Ok(Search::NotFound) => return Ok(MinorFreeOutcome::Failed { stage: "minor search".into(), reason: format!("no 𝒯_{m} minor") }),
        Ok(Search::Exhausted) | Err(Error::Exhausted) => return Ok(MinorFreeOutcome::Exhausted { stage: "minor search".into() }),
        Err(e) => return Err(e),
    };
    model.validate(g)?;
    let parts: Vec<BTreeSet<Vertex>> = model.branch_sets.values().cloned().collect();
    let sub = g.induced_subgraph(&model.image())?;
    let (contracted, ids) = contract_sets(&sub, &parts)?;
    let patterns = [(Graph::complete(n), true), (Graph::complete_bipartite(n, n), true), (k_ary_tree(k)?.into_graph(), false)];
    let mut ran_out = false;
    for (pattern, dense) in patterns {
        match find_induced_subgraph(&contracted, &pattern, budget) {
            Search::Found(e) => {
                let composed = compose(&e, &parts, &ids);
                composed.validate(g)?;
                return Ok(if dense { MinorFreeOutcome::Dense { pattern, model: composed } } else { MinorFreeOutcome::Model(composed) });
            }
            Search::NotFound => {}
            Search::Exhausted => ran_out = true,
        }
    }
    Ok(if ran_out {
        MinorFreeOutcome::Exhausted { stage: "induced pattern search".into() }
    } else {
        MinorFreeOutcome::Failed { stage: "induced pattern search".into(), reason: format!("𝒯_{m} minor too small to force 𝒯_{k}, K_{n} or K_{{{n},{n}}}") }
    })
}

/// The four categories whose simultaneous presence in a forbidden set
/// bounds pathwidth.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Category {
    Complete,
    CompleteBipartite,
    Tripod,
    SemiTripod,
}

impl Category {
    pub const ALL: [Category; 4] = [Category::Complete, Category::CompleteBipartite, Category::Tripod, Category::SemiTripod];

    pub fn shape(self) -> Shape {
        match self {
            Category::Complete => Shape::Complete,
            Category::CompleteBipartite => Shape::CompleteBipartite,
            Category::Tripod => Shape::Tripod,
            Category::SemiTripod => Shape::SemiTripod,
        }
    }

    pub fn name(self) -> &'static str {
        self.shape().name()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decision {
    pub bounded: bool,
    /// First member of the set in each category, with its witness.
    pub witnesses: BTreeMap<Category, (usize, Witness)>,
    pub missing: Vec<Category>,
}

/// Whether excluding every graph of `set` as an induced subgraph bounds
/// pathwidth: true iff the set has a complete graph, a complete bipartite
/// graph, a tripod and a semi-tripod.
pub fn decide_bounded_pathwidth(set: &[Graph], strictness: Strictness) -> Decision {
    let mut witnesses = BTreeMap::new();
    let mut missing = Vec::new();
    for cat in Category::ALL {
        match set.iter().enumerate().find_map(|(i, g)| recognize(g, cat.shape(), strictness).map(|w| (i, w))) {
            Some(w) => {
                witnesses.insert(cat, w);
            }
            None => missing.push(cat),
        }
    }
    Decision { bounded: missing.is_empty(), witnesses, missing }
}
