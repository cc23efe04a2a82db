//! One function per subcommand, each building a [`Report`].

use flagtoric_core::census;
use flagtoric_core::ladder::{Direction, EdgeClass, Region, VertexKind};
use flagtoric_core::paths::{self, PositivePath};
use flagtoric_core::polytope;
use flagtoric_core::sections;
use flagtoric_core::series::{self, SeriesIndex};
use flagtoric_core::{FlagShape, LadderGraph};
use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::input::{parse_assignment, parse_degrees, parse_shape, parse_vector};
use crate::report::{join, Report};
use crate::{Cli, Command, Failure, Outcome};

type Res<T> = Result<T, Failure>;

/// Brute-force hulls are only attempted up to this dimension.
const HULL_DIM_LIMIT: usize = 6;

pub fn dispatch(cli: &Cli) -> Res<Outcome> {
    let check = cli.check;
    match &cli.command {
        Command::Graph { shape } => graph(&load(shape)?, check),
        Command::Polytope {
            shape,
            check_reflexive,
        } => polytope_cmd(&load(shape)?, check, *check_reflexive),
        Command::Fan { shape } => fan(&load(shape)?),
        Command::Strata { shape } => strata(&load(shape)?),
        Command::Paths { shape } => paths_cmd(&load(shape)?),
        Command::Meanders { shape } => meanders(&load(shape)?, check),
        Command::Relations { shape } => relations(&load(shape)?),
        Command::Decompose {
            shape,
            functional,
            weight_bound,
        } => decompose(&load(shape)?, functional.as_deref(), *weight_bound, check),
        Command::Series { shape, max_deg } => series_cmd(&load(shape)?, *max_deg, check),
        Command::CiSeries {
            shape,
            degrees,
            max_deg,
        } => ci_series(&load(shape)?, &parse_degrees(degrees)?, *max_deg, check),
        Command::Mirror {
            shape,
            degrees,
            assignment,
        } => {
            let assignment = assignment.as_deref().map(parse_assignment).transpose()?;
            mirror(
                &load(shape)?,
                &parse_degrees(degrees)?,
                assignment.as_deref(),
                check,
            )
        }
        Command::Census {
            n_max,
            modulo_duality,
        } => census_cmd(*n_max, *modulo_duality),
    }
}

fn load(text: &str) -> Res<LadderGraph> {
    let shape = parse_shape(text)?;
    Ok(LadderGraph::build(&shape)?)
}

fn region(r: Region) -> String {
    match r {
        Region::Outside => "outside".into(),
        Region::Roof(i) => format!("roof{i}"),
        Region::Box(b) => format!("box{b}"),
    }
}

fn direction(d: Direction) -> &'static str {
    match d {
        Direction::Horizontal => "horizontal",
        Direction::Vertical => "vertical",
    }
}

fn class(c: EdgeClass) -> String {
    match c {
        EdgeClass::Roof(i) => format!("roof{i}"),
        EdgeClass::Corner(b) => format!("corner{b}"),
    }
}

fn big(x: &BigInt) -> Value {
    i64::try_from(x).map_or_else(|_| Value::String(x.to_string()), Value::from)
}

fn path_label(p: &PositivePath) -> String {
    format!("{}:{}", p.origin, p.step_string())
}

fn graph(g: &LadderGraph, check: bool) -> Res<Outcome> {
    if check {
        g.kernel_bases()?;
        g.upper_set_owner()?;
    }
    let mut r = Report::new(&["id", "tail", "head", "direction", "class", "opposite_of"]);
    r.field("shape", g.shape().to_string());
    r.field(
        "cells",
        g.cells()
            .iter()
            .map(|&(c, row)| json!([c, row]))
            .collect::<Vec<_>>(),
    );
    let vertices: Vec<Value> = g
        .vertices()
        .iter()
        .map(|v| {
            let pos = json!([v.position.x2, v.position.y2]);
            match v.kind {
                VertexKind::Dot { col, row } => {
                    json!({"kind": "dot", "col": col, "row": row, "position": pos})
                }
                VertexKind::Star(i) => json!({"kind": "star", "index": i, "position": pos}),
            }
        })
        .collect();
    r.field("vertices", vertices);
    let edges: Vec<Value> = g
        .edges()
        .iter()
        .map(|e| {
            json!({
                "id": e.id,
                "tail": e.tail,
                "head": e.head,
                "direction": direction(e.direction),
                "class": class(e.class),
                "oppositeOf": e.opposite_of,
            })
        })
        .collect();
    r.field("edges", edges);
    let boxes: Vec<Value> = g
        .boxes()
        .iter()
        .map(|b| {
            json!({
                "id": b.id,
                "corner": b.corner,
                "opposite": b.opposite,
                "lowerLeft": [b.lower_left.x2, b.lower_left.y2],
            })
        })
        .collect();
    r.field("boxes", boxes);
    r.field("roofs", json!(g.roofs()));
    let dual: Vec<Value> = g
        .dual_edges()
        .iter()
        .map(|w| json!({"edge": w.edge, "head": region(w.head), "tail": region(w.tail)}))
        .collect();
    r.field("dualEdges", dual);
    for e in g.edges() {
        r.row(vec![
            e.id.to_string(),
            e.tail.to_string(),
            e.head.to_string(),
            direction(e.direction).into(),
            class(e.class),
            e.opposite_of.map_or(String::new(), |b| b.to_string()),
        ]);
    }
    let roof_sizes: Vec<usize> = g.roofs().iter().map(Vec::len).collect();
    r.line(format!(
        "shape={} dim={} dots={} stars={} edges={} boxes={} roofs={}",
        g.shape(),
        g.shape().dimension(),
        g.dot_count(),
        g.vertices().len() - g.dot_count(),
        g.edges().len(),
        g.boxes().len(),
        join(&roof_sizes, ",")
    ));
    Ok(r.into())
}

fn polytope_cmd(g: &LadderGraph, check: bool, check_reflexive: bool) -> Res<Outcome> {
    let p = polytope::build_polytope_with_facets(g)?;
    let mut failure = None;
    let mut reflexive = None;
    if check || check_reflexive {
        let mut verdict = p.check_reflexive();
        if verdict.is_ok() && check && p.dimension <= HULL_DIM_LIMIT {
            verdict = p.check_against_hull();
        }
        reflexive = Some(verdict.is_ok());
        failure = verdict.err().map(Failure::from);
    }
    let mut r = Report::new(&["facet", "meander", "incident_edges", "functional"]);
    r.field("shape", g.shape().to_string());
    r.field("dimension", p.dimension);
    let vertices: Vec<Value> = p
        .points
        .iter()
        .enumerate()
        .map(|(e, v)| json!({"edge": e, "point": v, "isVertex": p.is_vertex[e]}))
        .collect();
    r.field("vertices", vertices);
    let facets: Vec<Value> = p
        .facets
        .iter()
        .map(|f| {
            let m: Vec<String> = p.meanders[f.meander]
                .paths
                .iter()
                .map(PositivePath::step_string)
                .collect();
            json!({
                "meander": m,
                "functional": f.functional,
                "edgeValues": f.edge_values,
                "incident": f.incident,
            })
        })
        .collect();
    r.field("facets", facets);
    if let Some(ok) = reflexive {
        r.field("reflexive", ok);
    }
    for (k, f) in p.facets.iter().enumerate() {
        let m: Vec<String> = p.meanders[f.meander]
            .paths
            .iter()
            .map(PositivePath::step_string)
            .collect();
        let inc: Vec<usize> = f.incident.iter().copied().collect();
        r.row(vec![
            k.to_string(),
            m.join("|"),
            join(&inc, ";"),
            join(&f.functional, ";"),
        ]);
    }
    match reflexive {
        Some(ok) => r.line(format!("facets={} reflexive={ok}", p.facets.len())),
        None => r.line(format!(
            "facets={} vertices={}",
            p.facets.len(),
            p.is_vertex.iter().filter(|&&v| v).count()
        )),
    }
    Ok(Outcome { report: r, failure })
}

fn fan(g: &LadderGraph) -> Res<Outcome> {
    let size = usize::try_from(polytope::refined_fan_size(g))
        .map_err(|_| Failure::Input("fan too large to list".into()))?;
    let meanders = paths::enumerate_meanders(g.shape());
    let index = polytope::meander_index(&meanders);
    let cones: Vec<polytope::SimplicialCone> = (0..size)
        .into_par_iter()
        .map(|k| polytope::refined_cone(g, &index, k as u128))
        .collect::<Result<_, _>>()?;
    let mut r = Report::new(&["cone", "generators", "determinant", "meander"]);
    r.field("shape", g.shape().to_string());
    r.field("size", size);
    let list: Vec<Value> = cones
        .iter()
        .map(|c| {
            json!({
                "generators": c.generators,
                "omittedRoofEdges": c.omitted_roof_edges,
                "omittedCornerEdges": c.omitted_corner_edges,
                "determinant": big(&c.determinant),
                "meander": c.containing_meander,
            })
        })
        .collect();
    r.field("cones", list);
    for (k, c) in cones.iter().enumerate() {
        r.row(vec![
            k.to_string(),
            join(&c.generators, ";"),
            c.determinant.to_string(),
            c.containing_meander.to_string(),
        ]);
    }
    r.line(format!("cones={size} unimodular=true"));
    Ok(r.into())
}

fn strata(g: &LadderGraph) -> Res<Outcome> {
    let list = polytope::singular_strata(g)?;
    let mut r = Report::new(&["box", "corner", "opposite", "codimension"]);
    r.field("shape", g.shape().to_string());
    let js: Vec<Value> = list
        .iter()
        .map(|s| {
            let bx = &g.boxes()[s.box_id];
            json!({
                "box": s.box_id,
                "edges": [bx.corner[0], bx.corner[1], bx.opposite[0], bx.opposite[1]],
                "vectors": s.vectors,
                "coordinates": s.coordinates,
                "codimension": s.codimension,
            })
        })
        .collect();
    r.field("strata", js);
    for s in &list {
        let bx = &g.boxes()[s.box_id];
        r.row(vec![
            s.box_id.to_string(),
            join(&bx.corner, ";"),
            join(&bx.opposite, ";"),
            s.codimension.to_string(),
        ]);
        r.line(format!(
            "box {}: corner {:?} opposite {:?} codim {} conifold",
            s.box_id, bx.corner, bx.opposite, s.codimension
        ));
    }
    r.line(format!("strata={}", list.len()));
    Ok(r.into())
}

fn paths_cmd(g: &LadderGraph) -> Res<Outcome> {
    let all = sections::all_paths(g.shape());
    let mut r = Report::new(&["index", "roof", "steps", "heights", "crossed_edges"]);
    r.field("shape", g.shape().to_string());
    let mut js = Vec::new();
    for (k, p) in all.iter().enumerate() {
        let heights = p.heights(g.shape());
        let crossed = p.crossed_edges(g);
        js.push(json!({
            "index": k,
            "roof": p.origin,
            "steps": p.step_string(),
            "heights": heights,
            "crossed": crossed,
        }));
        r.row(vec![
            k.to_string(),
            p.origin.to_string(),
            p.step_string(),
            join(&heights, ";"),
            join(&crossed, ";"),
        ]);
        r.line(format!("{k} {} crosses {:?}", path_label(p), crossed));
    }
    r.field("paths", js);
    Ok(r.into())
}

fn meanders(g: &LadderGraph, check: bool) -> Res<Outcome> {
    let list = paths::enumerate_meanders(g.shape());
    let mut r = Report::new(&["meander", "paths", "edge_values", "functional"]);
    r.field("shape", g.shape().to_string());
    let mut js = Vec::new();
    for (k, m) in list.iter().enumerate() {
        let values = paths::meander_functional(g, m)?;
        let functional = paths::descend_to_dots(g, &values)?;
        if check {
            if !m.is_tree(g.shape()) {
                return Err(Failure::Certificate(format!("meander {k} is not a tree")));
            }
            paths::check_kills_delta_kernel(g, &values)
                .and_then(|_| paths::check_kills_boundary_kernel(g, &values))
                .map_err(|e| Failure::Certificate(format!("meander {k}: {e}")))?;
        }
        let steps: Vec<String> = m.paths.iter().map(PositivePath::step_string).collect();
        js.push(json!({"paths": steps, "edgeValues": values, "functional": functional}));
        r.row(vec![
            k.to_string(),
            steps.join("|"),
            join(&values, ";"),
            join(&functional, ";"),
        ]);
        r.line(format!("{k} {}", steps.join(" ")));
    }
    r.field("meanders", js);
    Ok(r.into())
}

fn relations(g: &LadderGraph) -> Res<Outcome> {
    let all = sections::all_paths(g.shape());
    let rels = sections::quadratic_relations(g)?;
    let mut r = Report::new(&["first", "second", "min", "max"]);
    r.field("shape", g.shape().to_string());
    let js: Vec<Value> = rels
        .iter()
        .map(|q| {
            json!({
                "first": path_label(&all[q.first]),
                "second": path_label(&all[q.second]),
                "min": path_label(&all[q.min]),
                "max": path_label(&all[q.max]),
            })
        })
        .collect();
    r.field("relations", js);
    for q in &rels {
        let l = |k: usize| path_label(&all[k]);
        r.row(vec![l(q.first), l(q.second), l(q.min), l(q.max)]);
        r.line(format!(
            "z[{}] z[{}] = z[{}] z[{}]",
            l(q.first),
            l(q.second),
            l(q.min),
            l(q.max)
        ));
    }
    r.line(format!("relations={}", rels.len()));
    Ok(r.into())
}

fn decompose(
    g: &LadderGraph,
    functional: Option<&str>,
    bound: Option<i64>,
    check: bool,
) -> Res<Outcome> {
    let mut r = Report::new(&["path", "roof", "steps"]);
    r.field("shape", g.shape().to_string());
    if let Some(text) = functional {
        let lambda = parse_vector(text)?;
        let peeled = sections::greedy_decompose(g, &lambda)?;
        let mut sum = vec![0i64; g.edges().len()];
        for p in &peeled {
            for (s, v) in sum.iter_mut().zip(paths::path_functional(g, p)) {
                *s += v;
            }
        }
        if sum != lambda {
            return Err(Failure::Certificate(
                "peeled paths do not re-sum to the input".into(),
            ));
        }
        r.field("functional", lambda.clone());
        let steps: Vec<Value> = peeled
            .iter()
            .map(|p| json!({"roof": p.origin, "steps": p.step_string()}))
            .collect();
        r.field("paths", steps);
        for (k, p) in peeled.iter().enumerate() {
            r.row(vec![k.to_string(), p.origin.to_string(), p.step_string()]);
            r.line(path_label(p));
        }
        return Ok(r.into());
    }
    let bound = bound.unwrap_or(2 * g.shape().ambient() as i64);
    let rep = sections::check_hilbert_basis(g, bound);
    r.field("weightBound", rep.weight_bound);
    r.field("pointsChecked", rep.points_checked);
    r.field("failedDecompositions", json!(rep.failed_decompositions));
    r.field("minPositiveWeight", rep.min_positive_weight);
    r.field("belowN", rep.below_n.len());
    r.field("decomposableGenerators", json!(rep.decomposable_generators));
    r.line(format!(
        "weight_bound={} points={} failed={} min_weight={} below_n={} decomposable_generators={}",
        rep.weight_bound,
        rep.points_checked,
        rep.failed_decompositions.len(),
        rep.min_positive_weight
            .map_or("none".into(), |w| w.to_string()),
        rep.below_n.len(),
        rep.decomposable_generators.len()
    ));
    let failure = (check
        && !(rep.failed_decompositions.is_empty() && rep.decomposable_generators.is_empty()))
    .then(|| Failure::Certificate("greedy decomposition or minimality failed".into()));
    Ok(Outcome { report: r, failure })
}

/// `prod_i (m_i!)^{|R_i|}`
fn normalizer(g: &LadderGraph, roof: &[u32]) -> BigInt {
    roof.iter()
        .zip(g.roofs())
        .map(|(&m, r)| num_traits::pow(series::factorial(u64::from(m)), r.len()))
        .product()
}

/// All box degree vectors with entries at most `bound`, or `None` past `cap`.
fn box_grid(nb: usize, bound: u32, cap: usize) -> Option<Vec<Vec<u32>>> {
    let side = bound as usize + 1;
    if side.checked_pow(nb as u32).map_or(true, |t| t > cap) {
        return None;
    }
    let mut out = vec![Vec::new()];
    for _ in 0..nb {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=bound).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    Some(out)
}

/// Recomputes one `Phi_F` coefficient from the per-edge factorial product
/// and, on small graphs, from the constant-term expansion.
fn check_phi_f(g: &LadderGraph, roof: &[u32], expected: &BigRational) -> Res<()> {
    let total: u32 = roof.iter().sum();
    let Some(grid) = box_grid(g.boxes().len(), total, 200_000) else {
        return Ok(());
    };
    let small = total <= 2 && g.edges().len() <= 10;
    let mut sum = BigRational::from_integer(0.into());
    for boxes in grid {
        let idx = SeriesIndex::new(roof.to_vec(), boxes);
        let c = series::coefficient_closed_form(g, &idx)?;
        let d = series::coefficient_degree_product(g, &idx)?;
        if c != d {
            return Err(Failure::Certificate(format!(
                "closed form and factorial product differ at {idx:?}"
            )));
        }
        if small {
            let t = series::constant_term_oracle(g, &idx, total)?;
            if t != c {
                return Err(Failure::Certificate(format!(
                    "constant-term oracle differs at {idx:?}"
                )));
            }
        }
        sum += c.a;
    }
    if &sum != expected {
        return Err(Failure::Certificate(format!(
            "Phi_F at {roof:?}: {sum} vs {expected}"
        )));
    }
    Ok(())
}

fn series_cmd(g: &LadderGraph, max_deg: u32, check: bool) -> Res<Outcome> {
    let coeffs = series::phi_f(g, max_deg)?;
    if check {
        coeffs
            .par_iter()
            .map(|(m, a)| check_phi_f(g, m, a))
            .collect::<Res<Vec<()>>>()?;
    }
    let mut r = Report::new(&["index", "A"]);
    r.field("shape", g.shape().to_string());
    let ordered = series::roof_degrees(g.shape().len(), max_deg);
    let mut js = Vec::new();
    for m in &ordered {
        let a = &coeffs[m];
        let b = a * BigRational::from_integer(normalizer(g, m));
        let index = join(m, ";");
        js.push(json!({"index": m, "A": a.to_string(), "B": b.to_integer().to_string()}));
        r.row(vec![index.clone(), a.to_string()]);
        r.line(format!("{index} {a}"));
    }
    r.field("coefficients", js);
    Ok(r.into())
}

/// Compares `Phi_X` with the period oracle at every roof degree of total
/// degree at most one.
fn check_period(
    g: &LadderGraph,
    system: &series::MirrorSystem,
    phi: &std::collections::BTreeMap<Vec<u32>, BigRational>,
) -> Res<()> {
    for m in series::roof_degrees(g.shape().len(), 1) {
        let Some(expected) = phi.get(&m) else {
            continue;
        };
        let t: u32 = m
            .iter()
            .zip(g.roofs())
            .map(|(&x, r)| x * r.len() as u32)
            .sum();
        let got = series::period_oracle(g, system, &m, t)?;
        if &got != expected {
            return Err(Failure::Certificate(format!(
                "period oracle at {m:?}: {got} vs {expected}"
            )));
        }
    }
    Ok(())
}

fn ci_series(g: &LadderGraph, degrees: &[Vec<u32>], max_deg: u32, check: bool) -> Res<Outcome> {
    let coeffs = series::phi_x(g, degrees, max_deg)?;
    if check {
        let system = series::mirror_system(g, degrees, None)?;
        check_period(g, &system, &coeffs)?;
    }
    let mut r = Report::new(&["index", "A"]);
    r.field("shape", g.shape().to_string());
    r.field("degrees", json!(degrees));
    let mut js = Vec::new();
    for m in series::roof_degrees(g.shape().len(), max_deg) {
        let a = &coeffs[&m];
        let index = join(&m, ";");
        js.push(json!({"index": m, "A": a.to_string()}));
        r.row(vec![index.clone(), a.to_string()]);
        r.line(format!("{index} {a}"));
    }
    r.field("coefficients", js);
    Ok(r.into())
}

fn mirror(
    g: &LadderGraph,
    degrees: &[Vec<u32>],
    assignment: Option<&[Vec<usize>]>,
    check: bool,
) -> Res<Outcome> {
    let system = series::mirror_system(g, degrees, assignment)?;
    if check {
        let phi = series::phi_x(g, degrees, 1)?;
        check_period(g, &system, &phi)?;
    }
    let mut r = Report::new(&["equation", "edge", "exponent"]);
    r.field("shape", g.shape().to_string());
    r.field("degrees", json!(degrees));
    let eqs: Vec<Value> = system
        .equations
        .iter()
        .map(|q| json!({"segment": q.segment, "terms": q.terms, "exponents": q.exponents}))
        .collect();
    r.field("equations", eqs);
    r.field("boxConstraints", json!(system.box_constraints));
    for (j, q) in system.equations.iter().enumerate() {
        for (f, exp) in q.terms.iter().zip(&q.exponents) {
            r.row(vec![(j + 1).to_string(), f.to_string(), join(exp, ";")]);
        }
    }
    r.text = system.pretty();
    Ok(r.into())
}

fn census_cmd(n_max: usize, modulo_duality: bool) -> Res<Outcome> {
    let rows = census::census_table(n_max, modulo_duality)?;
    let mut r = Report::new(&[
        "n",
        "shape",
        "dim",
        "anticanonical",
        "splitting",
        "splitting_count",
    ]);
    r.field("nMax", n_max);
    r.field("moduloDuality", modulo_duality);
    let mut js = Vec::new();
    for row in &rows {
        let e = &row.entry;
        let shape = e.shape.to_string();
        let k = census::format_vector(&e.anticanonical);
        let count = e.splittings.len();
        for s in &e.splittings {
            r.row(vec![
                e.shape.ambient().to_string(),
                shape.clone(),
                e.dimension.to_string(),
                k.clone(),
                census::format_splitting(s),
                count.to_string(),
            ]);
        }
        r.line(format!(
            "{shape} dim={} -K={k} splittings={count}",
            e.dimension
        ));
        for s in &e.splittings {
            r.line(format!("  {}", census::format_splitting(s)));
        }
        let fmt =
            |v: &[census::Splitting]| v.iter().map(census::format_splitting).collect::<Vec<_>>();
        if !row.unlisted.is_empty() {
            r.line(format!(
                "  not in reference table: {}",
                fmt(&row.unlisted).join(" | ")
            ));
        }
        if !row.unexpected.is_empty() {
            r.line(format!(
                "  in reference but not enumerated: {}",
                fmt(&row.unexpected).join(" | ")
            ));
        }
        js.push(json!({
            "n": e.shape.ambient(),
            "shape": shape,
            "dim": e.dimension,
            "anticanonical": e.anticanonical,
            "selfDual": e.self_dual,
            "splittings": e.splittings,
            "splittingCount": count,
            "referenceCount": row.reference.as_ref().map(Vec::len),
            "unlisted": row.unlisted,
            "unexpected": row.unexpected,
        }));
    }
    r.field("rows", js);
    let excluded: Vec<String> = census::excluded_flags(n_max)
        .iter()
        .map(FlagShape::to_string)
        .collect();
    r.field("excluded", excluded);
    Ok(r.into())
}
