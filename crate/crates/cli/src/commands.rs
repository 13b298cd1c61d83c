use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use pathforge::cert::{graph_hash, Body, Certificate};
use pathforge::extract::{
    bounded_degree_pipeline, clean_fork, decide_bounded_pathwidth, minor_free_pipeline, minor_to_wattle, monochromatic_cbt,
    wattle_to_subgraph, Colour, ForkParts, InducedTreeCert, MinorFreeOutcome, Outcome, Thresholds, TwoColoring,
};
use pathforge::generators::{
    binary_tree_plus, complete_binary_tree, hat_tree, k_ary_tree, net_graph_replacement, subdivide, uniform_lengths, wattle, Branch,
    Lengths, WattleCertificate,
};
use pathforge::graph::{from_edge_list, from_graph6, line_graph, to_edge_list, to_graph6};
use pathforge::minors::{
    ball_contract, distance5_partition, find_induced_minor_model, find_minor_model, repair_to_induced_model, MinorModel,
};
use pathforge::patterns::{
    find_induced_subgraph, find_subdivision, recognize, Embedding, Shape, Strictness, SubdivisionEmbedding, Witness,
};
use pathforge::width::{pathwidth_exact, pathwidth_exact_with, tree_pathwidth, EXACT_BOUND};
use pathforge::{Budget, Error, Graph, Search, Vertex};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::{Cli, Cmd, ExtractCmd, FindCmd, Format, Global, GenCmd, ModelCmd, StrictnessArg, WidthCmd};

/// Exit statuses.
const OK: u8 = 0;
const NEGATIVE: u8 = 1;
const EXHAUSTED: u8 = 2;
const INPUT: u8 = 3;

enum Fail {
    Input(String),
    Exhausted,
}

impl From<Error> for Fail {
    fn from(e: Error) -> Fail {
        match e {
            Error::Exhausted => Fail::Exhausted,
            e => Fail::Input(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Fail {
    fn from(e: std::io::Error) -> Fail {
        Fail::Input(e.to_string())
    }
}

type Res = Result<u8, Fail>;

struct Ctx {
    g: Global,
    budget: Budget,
}

pub fn run(cli: Cli) -> u8 {
    let budget = cli.global.budget.map_or_else(Budget::unlimited, Budget::new);
    let mut ctx = Ctx { g: cli.global, budget };
    match dispatch(&mut ctx, cli.cmd) {
        Ok(code) => code,
        Err(Fail::Exhausted) => {
            ctx.report("exhausted", json!({ "status": "exhausted" }));
            EXHAUSTED
        }
        Err(Fail::Input(msg)) => {
            eprintln!("error: {msg}");
            INPUT
        }
    }
}

fn dispatch(ctx: &mut Ctx, cmd: Cmd) -> Res {
    match cmd {
        Cmd::Gen(c) => gen(ctx, c),
        Cmd::Width(c) => width(ctx, c),
        Cmd::Find(c) => find(ctx, c),
        Cmd::Recognize { shape, n } => recognize_cmd(ctx, &shape, n),
        Cmd::Model(c) => model(ctx, c),
        Cmd::Partition => {
            let g = ctx.input()?;
            let p = distance5_partition(&g);
            p.validate(&g).map_err(Fail::Input)?;
            ctx.certificate(&Certificate::partition(&g, &p), &[("host", &g)])?;
            let sizes: Vec<usize> = p.classes.iter().map(|c| c.len()).collect();
            ctx.report(&format!("{} classes", p.classes.len()), json!({ "status": "ok", "classes": p.classes, "sizes": sizes }));
            Ok(OK)
        }
        Cmd::ContractBalls { centres, class, cert } => {
            let g = ctx.input()?;
            let centres: BTreeSet<Vertex> = match class {
                Some(i) => distance5_partition(&g).classes.get(i).cloned().ok_or_else(|| Fail::Input(format!("no class {i}")))?,
                None => centres.into_iter().collect(),
            };
            let bc = ball_contract(&g, &centres)?;
            bc.model.validate(&g)?;
            if let Some(path) = cert {
                write_certificate(&path, &Certificate::minor_model(&g, &bc.model), &[("host", &g), ("pattern", &bc.graph)])?;
            }
            ctx.emit_graph(&bc.graph)?;
            Ok(OK)
        }
        Cmd::Extract(c) => extract(ctx, c),
        Cmd::Decide { files } => {
            let set = files.iter().map(|f| read_graph_file(f, ctx.g.format)).collect::<Result<Vec<_>, _>>()?;
            let d = decide_bounded_pathwidth(&set, ctx.strictness(Strictness::Inclusive));
            let witnesses: BTreeMap<&str, Value> = d
                .witnesses
                .iter()
                .map(|(c, (i, w))| (c.name(), json!({ "file": files[*i].display().to_string(), "witness": witness_json(w) })))
                .collect();
            let missing: Vec<&str> = d.missing.iter().map(|c| c.name()).collect();
            let text = if d.bounded { "bounded".to_string() } else { format!("unbounded (missing: {})", missing.join(", ")) };
            ctx.report(&text, json!({ "status": if d.bounded { "bounded" } else { "unbounded" }, "witnesses": witnesses, "missing": missing }));
            Ok(if d.bounded { OK } else { NEGATIVE })
        }
        Cmd::Verify { certificate, graphs } => {
            let c = read_certificate(&certificate)?;
            let kind = c.certificate.kind();
            match verify(&c, &certificate, &graphs) {
                Ok(()) => {
                    ctx.report(&format!("valid {kind}"), json!({ "status": "valid", "kind": kind }));
                    Ok(OK)
                }
                Err(Error::InvalidCertificate(m)) if m.starts_with("no graph with hash") || m.starts_with("missing graph") => Err(Fail::Input(m)),
                Err(e) => {
                    ctx.report(&format!("invalid {kind}: {e}"), json!({ "status": "invalid", "kind": kind, "reason": e.to_string() }));
                    Ok(NEGATIVE)
                }
            }
        }
    }
}

impl Ctx {
    fn strictness(&self, default: Strictness) -> Strictness {
        if self.g.strict || self.g.strictness == Some(StrictnessArg::Strict) {
            Strictness::Strict
        } else if self.g.inclusive || self.g.strictness == Some(StrictnessArg::Inclusive) {
            Strictness::Inclusive
        } else {
            default
        }
    }

    fn input(&self) -> Result<Graph, Fail> {
        match &self.g.input {
            Some(p) => read_graph_file(p, self.g.format),
            None => {
                let mut s = String::new();
                std::io::stdin().read_to_string(&mut s)?;
                parse_graph(&s, self.g.format, "<stdin>")
            }
        }
    }

    fn emit_graph(&self, g: &Graph) -> Result<(), Fail> {
        let text = match self.g.format {
            Format::EdgeList => to_edge_list(g),
            Format::Graph6 => to_graph6(g)? + "\n",
        };
        match &self.g.out {
            Some(p) => fs::write(p, text)?,
            None => std::io::stdout().write_all(text.as_bytes())?,
        }
        Ok(())
    }

    /// Writes the certificate (and the graphs it references) when `--out` is set.
    fn certificate(&self, c: &Certificate, graphs: &[(&str, &Graph)]) -> Result<(), Fail> {
        if let Some(p) = &self.g.out {
            write_certificate(p, c, graphs)?;
        }
        Ok(())
    }

    fn report(&self, text: &str, value: Value) {
        if self.g.json {
            println!("{value}");
        } else {
            println!("{text}");
        }
    }
}

fn parse_graph(text: &str, format: Format, name: &str) -> Result<Graph, Fail> {
    let r = match format {
        Format::EdgeList => from_edge_list(text),
        Format::Graph6 => from_graph6(text.trim()),
    };
    r.map_err(|e| Fail::Input(format!("{name}: {e}")))
}

fn read_graph_file(p: &Path, format: Format) -> Result<Graph, Fail> {
    let text = fs::read_to_string(p).map_err(|e| Fail::Input(format!("{}: {e}", p.display())))?;
    let format = if p.extension().is_some_and(|e| e == "g6") { Format::Graph6 } else { format };
    parse_graph(&text, format, &p.display().to_string())
}

fn read_certificate(p: &Path) -> Result<Certificate, Fail> {
    let text = fs::read_to_string(p).map_err(|e| Fail::Input(format!("{}: {e}", p.display())))?;
    Certificate::from_json(&text).map_err(|e| Fail::Input(format!("{}: {e}", p.display())))
}

/// Certificate at `path`, referenced graphs at `<path>.<role>.el`.
fn write_certificate(path: &Path, c: &Certificate, graphs: &[(&str, &Graph)]) -> Result<(), Fail> {
    fs::write(path, c.to_json())?;
    for (role, g) in graphs {
        let mut name = path.as_os_str().to_owned();
        name.push(format!(".{role}.el"));
        fs::write(PathBuf::from(name), to_edge_list(g))?;
    }
    Ok(())
}

/// Graphs from the explicit files plus every readable graph file next to the certificate, by hash.
fn graph_table(cert_path: &Path, extra: &[PathBuf]) -> BTreeMap<String, Graph> {
    let mut files: Vec<PathBuf> = extra.to_vec();
    let dir = cert_path.parent().filter(|d| !d.as_os_str().is_empty()).unwrap_or(Path::new("."));
    if let Ok(entries) = fs::read_dir(dir) {
        let mut found: Vec<PathBuf> = entries
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|e| e == "el" || e == "g6"))
            .collect();
        found.sort();
        files.extend(found);
    }
    let mut table = BTreeMap::new();
    for f in files {
        if let Ok(g) = read_graph_file(&f, Format::EdgeList) {
            table.entry(graph_hash(&g)).or_insert(g);
        }
    }
    table
}

fn verify(c: &Certificate, path: &Path, extra: &[PathBuf]) -> pathforge::Result<()> {
    let table = graph_table(path, extra);
    c.verify(&|h| table.get(h).cloned())
}

/// Loads a certificate of the given kind and the graphs it names.
fn load_resolved(path: &Path, extra: &[PathBuf], kind: &str) -> Result<(Certificate, BTreeMap<String, Graph>), Fail> {
    let c = read_certificate(path)?;
    if c.certificate.kind() != kind {
        return Err(Fail::Input(format!("{}: expected a {kind} certificate, found {}", path.display(), c.certificate.kind())));
    }
    verify(&c, path, extra).map_err(|e| Fail::Input(format!("{}: {e}", path.display())))?;
    let table = graph_table(path, extra);
    let graphs = c.graphs.iter().map(|(role, h)| (role.clone(), table[h].clone())).collect();
    Ok((c, graphs))
}

fn model_from(c: &Certificate, graphs: &BTreeMap<String, Graph>) -> MinorModel {
    let Body::MinorModel { induced, branch_sets } = &c.certificate else { unreachable!("kind checked") };
    MinorModel {
        pattern: graphs["pattern"].clone(),
        branch_sets: branch_sets.iter().map(|(p, s)| (*p, s.iter().copied().collect())).collect(),
        induced: *induced,
    }
}

fn wattle_from(c: &Certificate, host: &Graph) -> Result<WattleCertificate, Fail> {
    let Body::Wattle { height, triangles, branch, paths } = &c.certificate else { unreachable!("kind checked") };
    let mut used = BTreeSet::new();
    let branch = branch
        .iter()
        .map(|(v, xs)| {
            used.extend(xs.iter().copied());
            (*v, if xs.len() == 3 { Branch::Triangle([xs[0], xs[1], xs[2]]) } else { Branch::Vertex(xs[0]) })
        })
        .collect();
    let paths: BTreeMap<(Vertex, Vertex), Vec<Vertex>> = paths.iter().map(|(u, v, p)| ((*u, *v), p.clone())).collect();
    for p in paths.values() {
        used.extend(p.iter().copied());
    }
    Ok(WattleCertificate {
        base: complete_binary_tree(*height),
        triangles: triangles.iter().copied().collect(),
        host: host.induced_subgraph(&used)?,
        branch,
        paths,
    })
}

fn witness_json(w: &Witness) -> Value {
    match w {
        Witness::Complete { n } => json!({ "complete": n }),
        Witness::Bipartite { left, right } => json!({ "bipartite": [left, right] }),
        Witness::Fork { center, arms } => json!({ "fork": { "center": center, "arms": arms } }),
        Witness::SemiFork { triangle, paths } => json!({ "semi-fork": { "triangle": triangle, "paths": paths } }),
        Witness::Path { vertices } => json!({ "path": vertices }),
        Witness::Components(ws) => json!({ "components": ws.iter().map(witness_json).collect::<Vec<_>>() }),
    }
}

fn search_status<T>(ctx: &Ctx, s: &Search<T>, what: &str) -> u8 {
    let (status, code) = match s {
        Search::Found(_) => ("found", OK),
        Search::NotFound => ("absent", NEGATIVE),
        Search::Exhausted => ("exhausted", EXHAUSTED),
    };
    ctx.report(status, json!({ "status": status, "search": what }));
    code
}

fn gen(ctx: &mut Ctx, c: GenCmd) -> Res {
    let g = match c {
        GenCmd::Cbt { k } => complete_binary_tree(k).into_graph(),
        GenCmd::CbtPlus { k } => binary_tree_plus(k).into_graph(),
        GenCmd::Kary { k } => k_ary_tree(k)?.into_graph(),
        GenCmd::Subdivide { len, max_len, cert } => {
            let t = ctx.input()?;
            let lengths: Lengths = match max_len {
                Some(m) if m >= 1 => {
                    let mut rng = ChaCha8Rng::seed_from_u64(ctx.g.seed);
                    t.edges().map(|e| (e, rng.gen_range(1..=m))).collect()
                }
                Some(_) => return Err(Fail::Input("--max-len must be at least 1".into())),
                None => uniform_lengths(&t, len),
            };
            let (g, map) = subdivide(&t, &lengths)?;
            if let Some(p) = cert {
                let e = SubdivisionEmbedding { map, induced: true };
                write_certificate(&p, &Certificate::subdivision(&g, &e), &[("host", &g), ("base", &t)])?;
            }
            g
        }
        GenCmd::Linegraph => line_graph(&ctx.input()?).0,
        GenCmd::NetReplace { vertex } => net_graph_replacement(&ctx.input()?, vertex)?.0,
        GenCmd::Wattle { k, len, triangles, cert } => {
            let base = complete_binary_tree(k);
            let w = wattle(k, &uniform_lengths(base.graph(), len), &triangles.into_iter().collect())?;
            if let Some(p) = cert {
                write_certificate(&p, &Certificate::wattle(&w.host, &w), &[("host", &w.host)])?;
            }
            w.host
        }
        GenCmd::Hat { k, cert } => {
            let h = hat_tree(k);
            if let Some(p) = cert {
                let e = SubdivisionEmbedding { map: h.subdivision.clone(), induced: false };
                write_certificate(&p, &Certificate::subdivision(&h.graph, &e), &[("host", &h.graph), ("base", h.base.graph())])?;
            }
            h.graph
        }
    };
    ctx.emit_graph(&g)?;
    Ok(OK)
}

fn width(ctx: &mut Ctx, c: WidthCmd) -> Res {
    let g = ctx.input()?;
    match c {
        WidthCmd::Exact => {
            let (pw, d) = pathwidth_exact_with(&g, EXACT_BOUND, &mut ctx.budget)?;
            ctx.certificate(&Certificate::path_decomposition(&g, &d), &[("host", &g)])?;
            ctx.report(&pw.to_string(), json!({ "status": "ok", "pathwidth": pw, "bags": d.bags.len() }));
        }
        WidthCmd::Tree => {
            let (pw, d) = tree_pathwidth(&g)?;
            ctx.certificate(&Certificate::path_decomposition(&g, &d), &[("host", &g)])?;
            ctx.report(&pw.to_string(), json!({ "status": "ok", "pathwidth": pw, "bags": d.bags.len() }));
        }
        WidthCmd::Lower { model, graphs } => {
            let (c, gs) = load_resolved(&model, &graphs, "minor-model")?;
            if gs["host"] != g {
                return Err(Fail::Input("model certificate refers to a different host graph".into()));
            }
            let m = model_from(&c, &gs);
            let pw = if m.pattern.is_forest() { tree_pathwidth(&m.pattern)?.0 } else { pathwidth_exact(&m.pattern)?.0 };
            let lb = pathforge::width::pathwidth_lower_bound_by_minor(&g, &m, pw)?;
            ctx.report(&lb.to_string(), json!({ "status": "ok", "lower_bound": lb }));
        }
    }
    Ok(OK)
}

fn find(ctx: &mut Ctx, c: FindCmd) -> Res {
    let g = ctx.input()?;
    let fmt = ctx.g.format;
    match c {
        FindCmd::Induced { pattern } => {
            let p = read_graph_file(&pattern, fmt)?;
            let s = find_induced_subgraph(&g, &p, &mut ctx.budget);
            if let Search::Found(e) = &s {
                ctx.certificate(&Certificate::embedding(&g, e), &[("host", &g), ("pattern", &p)])?;
            }
            Ok(search_status(ctx, &s, "induced"))
        }
        FindCmd::Subdivision { base, induced } => {
            let b = read_graph_file(&base, fmt)?;
            let s = find_subdivision(&g, &b, induced, &mut ctx.budget)?;
            if let Search::Found(e) = &s {
                ctx.certificate(&Certificate::subdivision(&g, e), &[("host", &g), ("base", &b)])?;
            }
            Ok(search_status(ctx, &s, "subdivision"))
        }
        FindCmd::Minor { pattern } => {
            let p = read_graph_file(&pattern, fmt)?;
            let s = find_minor_model(&g, &p, &mut ctx.budget)?;
            if let Search::Found(m) = &s {
                ctx.certificate(&Certificate::minor_model(&g, m), &[("host", &g), ("pattern", &p)])?;
            }
            Ok(search_status(ctx, &s, "minor"))
        }
        FindCmd::InducedMinor { pattern } => {
            let p = read_graph_file(&pattern, fmt)?;
            let s = find_induced_minor_model(&g, &p, &mut ctx.budget)?;
            if let Search::Found(m) = &s {
                ctx.certificate(&Certificate::minor_model(&g, m), &[("host", &g), ("pattern", &p)])?;
            }
            Ok(search_status(ctx, &s, "induced-minor"))
        }
    }
}

/// Size-`n` member of a shape family, searched for as an induced subgraph.
fn shape_instance(shape: Shape, n: usize) -> Result<Graph, Fail> {
    let spider = |len: usize| subdivide(&Graph::star(3), &uniform_lengths(&Graph::star(3), len)).map(|x| x.0);
    Ok(match shape {
        Shape::Complete => Graph::complete(n),
        Shape::CompleteBipartite => Graph::complete_bipartite(n, n),
        Shape::Claw => Graph::star(3),
        Shape::Net => net_graph_replacement(&Graph::star(3), 0)?.0,
        Shape::Fork | Shape::Tripod => spider(n.max(1))?,
        Shape::SemiFork | Shape::SemiTripod => {
            let s = spider(n.max(1) + 1)?;
            net_graph_replacement(&s, 0)?.0
        }
    })
}

fn recognize_cmd(ctx: &mut Ctx, shape: &str, n: Option<usize>) -> Res {
    let shape = Shape::parse(shape).ok_or_else(|| {
        Fail::Input(format!("unknown shape {shape:?}; expected one of {}", Shape::ALL.map(|s| s.name()).join(", ")))
    })?;
    let g = ctx.input()?;
    match n {
        None => match recognize(&g, shape, ctx.strictness(Strictness::Inclusive)) {
            Some(w) => {
                ctx.report(&format!("present {w:?}"), json!({ "status": "present", "witness": witness_json(&w) }));
                Ok(OK)
            }
            None => {
                ctx.report("absent", json!({ "status": "absent" }));
                Ok(NEGATIVE)
            }
        },
        Some(n) => {
            let p = shape_instance(shape, n)?;
            let s = find_induced_subgraph(&g, &p, &mut ctx.budget);
            let (text, code) = match &s {
                Search::Found(e) => {
                    ctx.certificate(&Certificate::embedding(&g, e), &[("host", &g), ("pattern", &p)])?;
                    ("present", OK)
                }
                Search::NotFound => ("absent", NEGATIVE),
                Search::Exhausted => ("exhausted", EXHAUSTED),
            };
            ctx.report(text, json!({ "status": text }));
            Ok(code)
        }
    }
}

fn model(ctx: &mut Ctx, c: ModelCmd) -> Res {
    match c {
        ModelCmd::Validate { certificate, graphs } => {
            let c = read_certificate(&certificate)?;
            if c.certificate.kind() != "minor-model" {
                return Err(Fail::Input(format!("expected a minor-model certificate, found {}", c.certificate.kind())));
            }
            match verify(&c, &certificate, &graphs) {
                Ok(()) => {
                    ctx.report("valid", json!({ "status": "valid" }));
                    Ok(OK)
                }
                Err(e) => {
                    ctx.report(&format!("invalid: {e}"), json!({ "status": "invalid", "reason": e.to_string() }));
                    Ok(NEGATIVE)
                }
            }
        }
        ModelCmd::Repair { certificate, keep, graphs } => {
            let (c, gs) = load_resolved(&certificate, &graphs, "minor-model")?;
            let m = model_from(&c, &gs);
            let host = &gs["host"];
            let keep: BTreeSet<Vertex> = if keep.is_empty() { m.pattern.vertex_set() } else { keep.into_iter().collect() };
            let r = repair_to_induced_model(host, &m, &keep)?;
            ctx.certificate(&Certificate::minor_model(host, &r.model), &[("host", host), ("pattern", &r.model.pattern)])?;
            ctx.report(
                &format!("repaired in {} moves", r.moves.len()),
                json!({ "status": "ok", "moves": r.moves.len(), "violating_edges": r.counts }),
            );
            Ok(OK)
        }
    }
}

fn extract(ctx: &mut Ctx, c: ExtractCmd) -> Res {
    match c {
        ExtractCmd::CleanFork { a, b, c, set_a, set_b, set_c, set_s } => {
            let g = ctx.input()?;
            let set = |v: Vec<usize>| v.into_iter().collect::<BTreeSet<_>>();
            let parts = ForkParts { a, b, c, sa: set(set_a), sb: set(set_b), sc: set(set_c), s: set(set_s) };
            let f = clean_fork(&g, &parts, &mut ctx.budget)?;
            let pattern = g.induced_subgraph(&f.vertices)?;
            let e = Embedding { map: pattern.vertices().map(|v| (v, v)).collect(), pattern: pattern.clone(), induced: true };
            ctx.certificate(&Certificate::embedding(&g, &e), &[("host", &g), ("pattern", &pattern)])?;
            ctx.report(&format!("{:?}", f.witness), json!({ "status": "ok", "witness": witness_json(&f.witness) }));
            Ok(OK)
        }
        ExtractCmd::Wattle { model, k, graphs } => {
            let (c, gs) = load_resolved(&model, &graphs, "minor-model")?;
            let m = model_from(&c, &gs);
            let host = &gs["host"];
            let w = minor_to_wattle(host, &m, k, &mut ctx.budget)?;
            ctx.certificate(&Certificate::wattle(host, &w), &[("host", host)])?;
            ctx.report(
                &format!("wattle of height {} with {} triangles", w.height(), w.triangles.len()),
                json!({ "status": "ok", "height": w.height(), "triangles": w.triangles }),
            );
            Ok(OK)
        }
        ExtractCmd::MonoCbt { height, k, red, random } => {
            let t = complete_binary_tree(height);
            let colouring: TwoColoring = if random {
                let mut rng = ChaCha8Rng::seed_from_u64(ctx.g.seed);
                t.graph().vertices().map(|v| (v, if rng.gen::<bool>() { Colour::Red } else { Colour::Blue })).collect()
            } else {
                let red: BTreeSet<Vertex> = red.into_iter().collect();
                t.graph().vertices().map(|v| (v, if red.contains(&v) { Colour::Red } else { Colour::Blue })).collect()
            };
            let e = monochromatic_cbt(&t, &colouring, k)?;
            e.validate(&t, &colouring).map_err(Fail::Input)?;
            let sub = SubdivisionEmbedding { map: e.map.clone(), induced: true };
            ctx.certificate(&Certificate::subdivision(t.graph(), &sub), &[("host", t.graph()), ("base", &e.map.base)])?;
            let colour = format!("{:?}", e.colour).to_lowercase();
            ctx.report(
                &format!("{colour} T_{k} rooted at {}", e.root_image()),
                json!({ "status": "ok", "colour": colour, "root": e.root_image(), "branch": e.map.branch }),
            );
            Ok(OK)
        }
        ExtractCmd::ToSubgraph { wattle: path, k, graphs } => {
            let (c, gs) = load_resolved(&path, &graphs, "wattle")?;
            let host = &gs["host"];
            let w = wattle_from(&c, host)?;
            let out = wattle_to_subgraph(&w, k)?;
            out.validate(host).map_err(Fail::Input)?;
            match &out {
                InducedTreeCert::Subdivision(s) => ctx.certificate(&Certificate::subdivision(host, s), &[("host", host), ("base", &s.map.base)])?,
                InducedTreeCert::LineGraph(l) => ctx.certificate(&Certificate::line_graph(host, l), &[("host", host), ("base", &l.base)])?,
            }
            ctx.report(out.kind(), json!({ "status": "ok", "kind": out.kind(), "vertices": out.vertices() }));
            Ok(OK)
        }
        ExtractCmd::PipelineDeg { k, max_degree, stage_width } => {
            let g = ctx.input()?;
            let r = bounded_degree_pipeline(&g, k, max_degree, &Thresholds { stage_width }, &mut ctx.budget)?;
            let stages: Vec<Value> = r
                .stages
                .iter()
                .map(|s| {
                    json!({ "class": s.class, "centres": s.centres, "contracted": s.contracted_vertices,
                            "target": s.width_target, "width": s.subgraph_width, "kept": s.kept_vertices })
                })
                .collect();
            match r.outcome {
                Outcome::Model(m) => {
                    ctx.certificate(&Certificate::minor_model(&g, &m), &[("host", &g), ("pattern", &m.pattern)])?;
                    ctx.report(&format!("induced T_{k} model found after {} stages", stages.len()), json!({ "status": "found", "stages": stages }));
                    Ok(OK)
                }
                Outcome::Failed { stage, reason } => {
                    ctx.report(&format!("stage {stage} failed: {reason}"), json!({ "status": "failed", "stage": stage, "reason": reason, "stages": stages }));
                    Ok(NEGATIVE)
                }
                Outcome::Exhausted { stage } => {
                    ctx.report(&format!("budget exhausted in stage {stage}"), json!({ "status": "exhausted", "stage": stage, "stages": stages }));
                    Ok(EXHAUSTED)
                }
            }
        }
        ExtractCmd::PipelineMinorfree { k, n, m } => {
            let g = ctx.input()?;
            match minor_free_pipeline(&g, k, n, m, &mut ctx.budget)? {
                MinorFreeOutcome::Model(model) => {
                    ctx.certificate(&Certificate::minor_model(&g, &model), &[("host", &g), ("pattern", &model.pattern)])?;
                    ctx.report(&format!("induced 𝒯_{k} model found"), json!({ "status": "found" }));
                    Ok(OK)
                }
                MinorFreeOutcome::CliqueMinor(model) => {
                    ctx.certificate(&Certificate::minor_model(&g, &model), &[("host", &g), ("pattern", &model.pattern)])?;
                    ctx.report(&format!("input has a K_{n} minor"), json!({ "status": "not-minor-free", "witness": "clique-minor" }));
                    Ok(NEGATIVE)
                }
                MinorFreeOutcome::Dense { pattern, model } => {
                    ctx.certificate(&Certificate::minor_model(&g, &model), &[("host", &g), ("pattern", &pattern)])?;
                    ctx.report("input is not K_n-minor-free: dense induced minor", json!({ "status": "not-minor-free", "witness": "dense-induced-minor" }));
                    Ok(NEGATIVE)
                }
                MinorFreeOutcome::Failed { stage, reason } => {
                    ctx.report(&format!("stage {stage} failed: {reason}"), json!({ "status": "failed", "stage": stage, "reason": reason }));
                    Ok(NEGATIVE)
                }
                MinorFreeOutcome::Exhausted { stage } => {
                    ctx.report(&format!("budget exhausted in stage {stage}"), json!({ "status": "exhausted", "stage": stage }));
                    Ok(EXHAUSTED)
                }
            }
        }
    }
}
