//! Subcommand dispatch: read inputs, call into the library, audit the
//! result against the bound it is supposed to satisfy.

use std::fs;
use std::path::Path;

use serde::Serialize;
use serde_json::{json, Value};
use surfcover_core::ballcover::{self, build_balls};
use surfcover_core::io::{self, EmbeddingSpec};
use surfcover_core::planarize::{self, PlanarizeReport};
use surfcover_core::treedecomp::{self, TreeDecomposition};
use surfcover_core::{generate, named, nonsep, surgery, Embedding, Error, Graph};

use crate::args::{Cli, Command, Format, Gen, GenKind};
use crate::dot;
use crate::error::{CliError, INFEASIBLE, USAGE};
use crate::report::{Check, InputHash, Report};

pub struct Output {
    pub report: Report,
    pub dot: String,
}

impl Output {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.report).expect("report serializes");
                s.push('\n');
                s
            }
            Format::Dot => self.dot.clone(),
        }
    }
}

/// A graph file, with its embedding when the file carries rotations.
struct Instance {
    graph: Graph,
    embedding: Option<Embedding>,
}

#[derive(Default)]
struct Inputs(InputHash);

impl Inputs {
    fn read(&mut self, path: &Path) -> Result<String, CliError> {
        let bytes = fs::read(path)
            .map_err(|e| CliError::new("Io", format!("{}: {e}", path.display()), USAGE))?;
        self.0.update(&bytes);
        String::from_utf8(bytes)
            .map_err(|_| CliError::new("Parse", format!("{} is not UTF-8", path.display()), USAGE))
    }

    fn embedding(&mut self, path: &Path) -> Result<Embedding, CliError> {
        Ok(io::embedding_from_json(&self.read(path)?)?)
    }

    fn drawing(&mut self, path: &Path) -> Result<planarize::Drawing, CliError> {
        Ok(io::drawing_from_json(&self.read(path)?)?)
    }

    /// JSON graph or embedding, or a PACE `p tw` graph.
    fn instance(&mut self, path: &Path) -> Result<Instance, CliError> {
        let text = self.read(path)?;
        if !text.trim_start().starts_with('{') {
            let graph = treedecomp::parse_pace_graph(&text)?;
            return Ok(Instance {
                graph,
                embedding: None,
            });
        }
        let spec: EmbeddingSpec =
            serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
        if spec.rotations.is_some() {
            let e = spec.build()?;
            Ok(Instance {
                graph: e.graph(),
                embedding: Some(e),
            })
        } else {
            Ok(Instance {
                graph: spec.graph()?,
                embedding: None,
            })
        }
    }

    fn decomposition(
        &mut self,
        path: &Path,
        vertex_count: usize,
    ) -> Result<TreeDecomposition, CliError> {
        let text = self.read(path)?;
        if text.trim_start().starts_with('{') {
            return Ok(treedecomp::td_from_json(&text)?);
        }
        let (td, n) = treedecomp::parse_pace_td(&text)?;
        if n != vertex_count {
            return Err(Error::Parse(format!(
                "decomposition is over {n} vertices, graph has {vertex_count}"
            ))
            .into());
        }
        Ok(td)
    }
}

fn value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("result serializes")
}

fn with(mut v: Value, key: &str, extra: Value) -> Value {
    v[key] = extra;
    v
}

struct Outcome {
    name: &'static str,
    instance: Option<EmbeddingSpec>,
    result: Value,
    audit: Vec<Check>,
    dot: String,
}

impl Outcome {
    fn new(name: &'static str, result: Value, audit: Vec<Check>, dot: String) -> Self {
        Self {
            name,
            instance: None,
            result,
            audit,
            dot,
        }
    }
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    let mut inputs = Inputs::default();
    let mut seed = cli.seed;
    let out = match &cli.command {
        Command::Genus { input } => genus(&inputs.embedding(input)?)?,
        Command::Norms { input } => norms(&inputs.embedding(input)?),
        Command::Nonsep { input } => nonsep(&inputs.embedding(input)?)?,
        Command::Planarize { input } => {
            let e = inputs.embedding(input)?;
            let r = planarize::planarizing_edge_set(&e)?;
            let dot = dot::render("planarize", &e.graph(), &[], &r.removed);
            Outcome::new("planarize", value(&r), planarize_checks(&r), dot)
        }
        Command::DrawingPlanarize { input } => drawing_planarize(&inputs.drawing(input)?)?,
        Command::Crossings { input } => crossings(&inputs.drawing(input)?)?,
        Command::Ballcover {
            input,
            radius,
            exact,
            cap,
        } => ballcover(&inputs.instance(input)?.graph, radius.radius, *exact, *cap)?,
        Command::Pq {
            input,
            radius,
            centers,
        } => pq(&inputs.instance(input)?.graph, radius.radius, centers)?,
        Command::Vcdim { input, radius, cap } => {
            vcdim(&inputs.instance(input)?, radius.radius, *cap)?
        }
        Command::Apexcover {
            input,
            radius,
            apices,
        } => apexcover(&inputs.instance(input)?.graph, radius.radius, apices)?,
        Command::Central {
            input,
            td,
            radius,
            start,
        } => {
            let g = inputs.instance(input)?.graph;
            let td = inputs.decomposition(td, g.vertex_count())?;
            central(&g, &td, radius.radius, *start)?
        }
        Command::Gen(args) => {
            let s = seed.unwrap_or(0);
            let params = format!(
                "gen {:?} n={:?} g={:?} rows={:?} cols={:?} drop={}",
                args.kind, args.n, args.g, args.rows, args.cols, args.drop
            );
            inputs.0.update(params.as_bytes());
            if args.kind != GenKind::Grid {
                seed = Some(s);
            }
            gen(args, s)?
        }
    };
    let report = Report::new(
        out.name,
        out.instance,
        out.result,
        out.audit,
        inputs.0.finish(),
        seed,
    );
    Ok(Output {
        report,
        dot: out.dot,
    })
}

fn genus(e: &Embedding) -> Result<Outcome, CliError> {
    let g = e.euler_genus()?;
    let (v, m, f) = (e.vertex_count(), e.edge_count(), e.faces().len());
    let chi = v as i64 - m as i64 + f as i64;
    let mut audit = vec![Check::equal(
        "euler_formula",
        "V - E + F = 2 - eg",
        2 - g.euler_genus as i64,
        chi,
    )];
    let graph = e.graph();
    if v >= 2 && graph.is_simple() && m == v * (v - 1) / 2 {
        let q = ballcover::forbidden_clique(g);
        audit.push(Check::new(
            "complete_graph_fits",
            format!("K_{v} embeds on this surface only if {v} < {q}"),
            q as f64,
            v as f64,
            v < q,
        ));
    }
    let result = json!({
        "vertices": v,
        "edges": m,
        "faces": f,
        "euler_genus": g.euler_genus,
        "orientable": g.orientable,
        "genus": g.genus(),
    });
    Ok(Outcome::new(
        "genus",
        result,
        audit,
        dot::render("genus", &graph, &[], &[]),
    ))
}

fn norms(e: &Embedding) -> Outcome {
    let n = e.norms();
    let dual = e.dual().norms();
    let result = json!({
        "face_norm_sq": n.face_norm_sq,
        "vertex_norm_sq": n.vertex_norm_sq,
        "face_norm": n.face_norm(),
        "vertex_norm": n.vertex_norm(),
        "face_sizes": e.faces().sizes(),
    });
    let audit = vec![Check::equal(
        "dual_identity",
        "vertex norm^2 = face norm^2 of the dual",
        n.vertex_norm_sq as i64,
        dual.face_norm_sq as i64,
    )];
    Outcome::new(
        "norms",
        result,
        audit,
        dot::render("norms", &e.graph(), &[], &[]),
    )
}

fn nonsep(e: &Embedding) -> Result<Outcome, CliError> {
    let c = nonsep::shortest_nonseparating_cycle(e)?;
    let vertices = surgery::cycle_vertices(e, &c)?;
    let edges: Vec<usize> = c.iter().map(|d| d.edge()).collect();
    let n = e.norms();
    let len = c.len();
    let bound = n.face_norm() / 2.0;
    let mut audit = vec![Check::new(
        "cycle_length",
        "|C| <= face_norm / 2",
        bound,
        len as f64,
        4 * (len as u64).pow(2) <= n.face_norm_sq,
    )];
    let level = match nonsep::level_set_audit(e, &c) {
        Ok(level) => level,
        Err(err) => {
            log::warn!("level audit skipped: {err}");
            None
        }
    };
    if let Some(a) = &level {
        audit.push(Check::new(
            "level_distance",
            "2s >= |C|",
            len as f64,
            (2 * a.s) as f64,
            a.distance_bound_holds(),
        ));
        audit.push(Check::new(
            "level_chords",
            "8 * total chord length <= face norm^2 of the cut graph",
            a.face_norm_sq as f64,
            (8 * a.total_length) as f64,
            a.chord_bound_holds(),
        ));
    }
    let result = json!({
        "length": len,
        "bound": bound,
        "darts": c.iter().map(|d| d.0).collect::<Vec<_>>(),
        "vertices": vertices,
        "edges": edges,
        "level_audit": level,
    });
    let dot = dot::render("nonsep", &e.graph(), &vertices, &edges);
    Ok(Outcome::new("nonsep", result, audit, dot))
}

fn planarize_checks(r: &PlanarizeReport) -> Vec<Check> {
    let decreasing = r.face_norm_log.iter().filter(|&&(b, a)| a < b).count();
    vec![
        Check::new(
            "removed_size",
            "|removed| <= (iterations / 2) * sqrt(norm_sq)",
            r.bound,
            r.removed.len() as f64,
            r.bound_holds(),
        ),
        Check::equal(
            "residual_genus",
            "Euler genus after removal = 0",
            0,
            r.residual_genus as i64,
        ),
        Check::new(
            "face_norm_decreasing",
            "every cut lowers the dual face norm",
            r.face_norm_log.len() as f64,
            decreasing as f64,
            r.monotone(),
        ),
    ]
}

fn arc_edges(d: &planarize::Drawing, arcs: &[usize]) -> Vec<usize> {
    arcs.iter()
        .flat_map(|&a| d.arcs()[a].iter().map(|x| x.edge()))
        .collect()
}

fn drawing_planarize(d: &planarize::Drawing) -> Result<Outcome, CliError> {
    let r = planarize::drawing_planarize(d)?;
    let dot = dot::render(
        "drawing-planarize",
        &d.host().graph(),
        d.crossings(),
        &arc_edges(d, &r.removed),
    );
    let result = with(value(&r), "crossings", json!(d.crossings().len()));
    Ok(Outcome::new(
        "drawing-planarize",
        result,
        planarize_checks(&r),
        dot,
    ))
}

fn crossings(d: &planarize::Drawing) -> Result<Outcome, CliError> {
    let s = planarize::crossing_stats(d);
    let surface = d.host().euler_genus()?;
    let density = json!({
        "formula": "(2 g^2)^k * c_k * n * log n",
        "genus": surface,
        "k": s.k_max,
        "n": d.original_vertices().len(),
        "edges": d.arcs().len(),
        "c_k": "unknown",
    });
    let audit = vec![Check::at_most(
        "clique_degree",
        "k_max - 1 <= largest number of edges crossing one edge",
        s.per_edge_max,
        s.k_max.saturating_sub(1),
    )];
    let dot = dot::render(
        "crossings",
        &d.host().graph(),
        d.crossings(),
        &arc_edges(d, &s.clique),
    );
    Ok(Outcome::new(
        "crossings",
        with(value(&s), "edge_bound", density),
        audit,
        dot,
    ))
}

fn cover_checks(g: &Graph, b: &ballcover::BallSystem, centers: &[usize]) -> Vec<Check> {
    let n = g.vertex_count();
    let reached = g
        .multi_source_bfs(centers.iter().copied())
        .iter()
        .filter(|&&d| d <= b.radius())
        .count();
    let hit = (0..n)
        .filter(|&x| b.ball(x).iter().any(|y| centers.contains(y)))
        .count();
    vec![
        Check::new(
            "cover_valid",
            "every vertex lies in a chosen ball",
            n as f64,
            reached as f64,
            b.is_cover(centers),
        ),
        Check::new(
            "hitting_set",
            "the centers hit every ball",
            n as f64,
            hit as f64,
            b.is_hitting_set(centers),
        ),
    ]
}

fn ballcover(g: &Graph, radius: usize, exact: bool, cap: usize) -> Result<Outcome, CliError> {
    let b = build_balls(g, radius)?;
    let cover = if exact {
        ballcover::exact_cover(&b, cap)?
    } else {
        ballcover::greedy_cover(&b)
    };
    if !cover.covered {
        return Err(CliError::new("Infeasible", "no cover found", INFEASIBLE));
    }
    let audit = cover_checks(g, &b, &cover.centers);
    let dot = dot::render("ballcover", g, &cover.centers, &[]);
    Ok(Outcome::new(
        "ballcover",
        with(value(&cover), "size", json!(cover.centers.len())),
        audit,
        dot,
    ))
}

fn pq(g: &Graph, radius: usize, centers: &[usize]) -> Result<Outcome, CliError> {
    let w = ballcover::pq_witness(g, radius, centers)?;
    let p = w.crossing_set.len();
    let bound = if p >= 2 {
        (p as f64 - 1.0) / 2.0 + 2.0
    } else {
        2.0
    };
    let count = w.witnessed_balls.len();
    let audit = vec![
        Check::at_most(
            "midpoint_claim",
            "intersecting path pairs failing the midpoint claim",
            0,
            w.claim_violations,
        ),
        Check::new(
            "averaging_bound",
            "witness lies in at least (|P'| - 1) / 2 + 2 balls",
            bound,
            count as f64,
            w.averaging_bound_holds() && count >= 2,
        ),
    ];
    let mut marked = centers.to_vec();
    marked.push(w.witness_vertex);
    Ok(Outcome::new(
        "pq",
        value(&w),
        audit,
        dot::render("pq", g, &marked, &[]),
    ))
}

fn vcdim(inst: &Instance, radius: usize, cap: usize) -> Result<Outcome, CliError> {
    let b = build_balls(&inst.graph, radius)?;
    let s = ballcover::shatter_dimension(&b, cap)?;
    let mut audit = Vec::new();
    let mut result = value(&s);
    if let Some(e) = &inst.embedding {
        let surface = e.euler_genus()?;
        let q = ballcover::forbidden_clique(surface);
        audit.push(Check::at_most(
            "vc_dimension",
            format!("VC-dimension <= {} since K_{q} does not embed", q - 1),
            q - 1,
            s.dimension,
        ));
        result = with(result, "surface", value(&surface));
    }
    Ok(Outcome::new(
        "vcdim",
        result,
        audit,
        dot::render("vcdim", &inst.graph, &s.witness, &[]),
    ))
}

fn apexcover(g: &Graph, radius: usize, apices: &[usize]) -> Result<Outcome, CliError> {
    let a = ballcover::apex_cover(g, radius, apices)?;
    let b = build_balls(g, radius)?;
    let mut audit = cover_checks(g, &b, &a.centers);
    audit.truncate(1);
    audit.push(Check::at_most(
        "restricted_cover",
        "vertices far from the apices are covered by balls avoiding them",
        0,
        usize::from(a.fallback),
    ));
    let dot = dot::render("apexcover", g, &a.centers, &[]);
    Ok(Outcome::new(
        "apexcover",
        with(value(&a), "size", json!(a.centers.len())),
        audit,
        dot,
    ))
}

fn central(
    g: &Graph,
    td: &TreeDecomposition,
    radius: usize,
    start: Option<usize>,
) -> Result<Outcome, CliError> {
    let c = treedecomp::central_node(g, td, radius, start)?;
    let width = td.width();
    let audit = vec![
        Check::at_most(
            "certificate_radius",
            "every vertex within R of the bag",
            radius,
            c.max_distance,
        ),
        Check::at_most(
            "certificate_size",
            "bag has at most width + 1 vertices",
            width + 1,
            c.certificate.len(),
        ),
        Check::at_most(
            "uniqueness",
            "nodes with two far subtrees",
            0,
            c.uniqueness_violations.len(),
        ),
    ];
    let dot = dot::render("central", g, &c.certificate, &[]);
    Ok(Outcome::new(
        "central",
        with(value(&c), "width", json!(width)),
        audit,
        dot,
    ))
}

fn need(x: Option<usize>, flag: &str) -> Result<usize, CliError> {
    x.ok_or_else(|| CliError::usage(format!("{flag} is required for this kind")))
}

fn grid_embedding(rows: usize, cols: usize) -> Embedding {
    let g = named::grid_graph(rows, cols);
    let points: Vec<(f64, f64)> = (0..rows * cols)
        .map(|v| ((v % cols) as f64, (v / cols) as f64))
        .collect();
    named::from_points(&points, g.edges())
}

fn gen(args: &Gen, seed: u64) -> Result<Outcome, CliError> {
    const MAX: usize = 100_000;
    let mut rng = generate::rng(seed);
    let (e, expected) = match args.kind {
        GenKind::ToroidalTriangulation => {
            let n = need(args.n, "--n")?;
            if n > MAX {
                return Err(Error::ParamRange(format!("n = {n} exceeds {MAX}")).into());
            }
            (generate::toroidal_triangulation(n, &mut rng)?, 2)
        }
        GenKind::GenusGTriangulation => {
            let g = need(args.g, "--g")?;
            if g > 100 {
                return Err(Error::ParamRange(format!("g = {g} exceeds 100")).into());
            }
            (generate::genus_g_triangulation(g, &mut rng)?, 2 * g)
        }
        GenKind::Grid => {
            let (rows, cols) = (need(args.rows, "--rows")?, need(args.cols, "--cols")?);
            if rows == 0 || cols == 0 || rows.saturating_mul(cols) > MAX {
                return Err(Error::ParamRange(format!("grid {rows} x {cols} out of range")).into());
            }
            (grid_embedding(rows, cols), 0)
        }
        GenKind::RandomPlanar => {
            let n = need(args.n, "--n")?;
            if !(0.0..1.0).contains(&args.drop) || n > MAX {
                return Err(Error::ParamRange("need n <= 100000 and 0 <= drop < 1".into()).into());
            }
            let t = generate::planar_triangulation(n, &mut rng)?;
            (generate::thin_edges(&t, args.drop, &mut rng), 0)
        }
    };
    let spec = EmbeddingSpec::from_embedding(&e).certified(&e)?;
    let rebuilt = spec.build().is_ok_and(|x| x == e);
    let eg = e.euler_genus()?.euler_genus;
    let audit = vec![
        Check::equal(
            "euler_genus",
            format!("Euler genus = {expected}"),
            expected as i64,
            eg as i64,
        ),
        Check::new(
            "round_trip",
            "emitted file rebuilds the same embedding",
            1.0,
            f64::from(u8::from(rebuilt)),
            rebuilt,
        ),
    ];
    let dot = dot::render("gen", &e.graph(), &[], &[]);
    Ok(Outcome {
        name: "gen",
        instance: Some(spec),
        result: Value::Null,
        audit,
        dot,
    })
}
