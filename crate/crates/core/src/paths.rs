//! Positive lattice paths, meanders and the edge functionals built from them.
//!
//! A path in `Pi_i` runs from `O_i = (n_i, n-n_i)` to the origin using unit
//! steps down or left. A step crosses the graph edge whose midpoint it
//! bisects.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::ladder::{Direction, GridPoint, IntVector, LadderBox, LadderGraph};
use crate::shape::FlagShape;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    Down,
    Left,
}

impl Step {
    pub fn as_char(self) -> char {
        match self {
            Step::Down => 'D',
            Step::Left => 'L',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PositivePath {
    /// The index `i` of the starting point `O_i`.
    pub origin: usize,
    pub steps: Vec<Step>,
}

impl PositivePath {
    pub fn parse(origin: usize, s: &str) -> Option<Self> {
        let steps = s
            .chars()
            .map(|c| match c {
                'D' => Some(Step::Down),
                'L' => Some(Step::Left),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()?;
        Some(PositivePath { origin, steps })
    }

    pub fn step_string(&self) -> String {
        self.steps.iter().map(|s| s.as_char()).collect()
    }

    /// Lattice points visited, in doubled coordinates, from `O_i` to the origin.
    pub fn points(&self, shape: &FlagShape) -> Vec<GridPoint> {
        let ni = shape.step(self.origin) as i64;
        let mut p = GridPoint::new(2 * ni, 2 * (shape.ambient() as i64 - ni));
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        out.push(p);
        for s in &self.steps {
            p = match s {
                Step::Down => GridPoint::new(p.x2, p.y2 - 2),
                Step::Left => GridPoint::new(p.x2 - 2, p.y2),
            };
            out.push(p);
        }
        out
    }

    /// Heights `y_1..y_n` of the path over each column, the path being
    /// continued horizontally from `O_i` to the right edge `x = n`.
    pub fn heights(&self, shape: &FlagShape) -> Vec<usize> {
        let n = shape.ambient();
        let ni = shape.step(self.origin);
        let mut y = n - ni;
        let mut x = ni;
        let mut h = vec![n - ni; n];
        for s in &self.steps {
            match s {
                Step::Down => y -= 1,
                Step::Left => {
                    h[x - 1] = y;
                    x -= 1;
                }
            }
        }
        h
    }

    /// Inverse of [`PositivePath::heights`].
    pub fn from_heights(shape: &FlagShape, heights: &[usize]) -> Option<Self> {
        let n = shape.ambient();
        if heights.len() != n || heights.windows(2).any(|w| w[0] > w[1]) {
            return None;
        }
        let top = heights[n - 1];
        let origin = (1..=shape.len()).find(|&i| n - shape.step(i) == top)?;
        let ni = shape.step(origin);
        if heights[ni..].iter().any(|&h| h != top) {
            return None;
        }
        let mut steps = Vec::with_capacity(n);
        let mut y = top;
        for c in (1..=ni).rev() {
            steps.extend(core::iter::repeat(Step::Down).take(y - heights[c - 1]));
            y = heights[c - 1];
            steps.push(Step::Left);
        }
        steps.extend(core::iter::repeat(Step::Down).take(y));
        Some(PositivePath { origin, steps })
    }

    /// Edges crossed by the path, in path order.
    pub fn crossed_edges(&self, graph: &LadderGraph) -> Vec<usize> {
        let pts = self.points(graph.shape());
        pts.windows(2)
            .filter_map(|w| {
                let mid = GridPoint::new((w[0].x2 + w[1].x2) / 2, (w[0].y2 + w[1].y2) / 2);
                graph.edge_at_midpoint(mid)
            })
            .collect()
    }
}

/// All of `Pi_i`, sorted by step string (`D` before `L`).
pub fn enumerate_positive_paths(shape: &FlagShape, i: usize) -> Vec<PositivePath> {
    fn rec(left: usize, down: usize, cur: &mut Vec<Step>, out: &mut Vec<Vec<Step>>) {
        if left == 0 && down == 0 {
            out.push(cur.clone());
            return;
        }
        if down > 0 {
            cur.push(Step::Down);
            rec(left, down - 1, cur, out);
            cur.pop();
        }
        if left > 0 {
            cur.push(Step::Left);
            rec(left - 1, down, cur, out);
            cur.pop();
        }
    }
    let ni = shape.step(i);
    let mut raw = Vec::new();
    rec(ni, shape.ambient() - ni, &mut Vec::new(), &mut raw);
    raw.into_iter()
        .map(|steps| PositivePath { origin: i, steps })
        .collect()
}

/// `lambda_pi`: 1 on crossed edges, 0 elsewhere.
pub fn path_functional(graph: &LadderGraph, path: &PositivePath) -> IntVector {
    let mut v = vec![0; graph.edges().len()];
    for e in path.crossed_edges(graph) {
        v[e] = 1;
    }
    v
}

pub fn weight(functional: &[i64]) -> i64 {
    functional.iter().sum()
}

/// Pairing of a functional on `L(E)` with a vector of `L(E)`.
pub fn pair(functional: &[i64], v: &[i64]) -> i64 {
    functional.iter().zip(v).map(|(a, b)| a * b).sum()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathOrder {
    /// `Some(Less)` if the first path runs below the second.
    pub comparison: Option<Ordering>,
    pub min: PositivePath,
    pub max: PositivePath,
}

/// Order, meet and join of two positive paths (pointwise on heights).
pub fn path_order(shape: &FlagShape, a: &PositivePath, b: &PositivePath) -> PathOrder {
    let ha = a.heights(shape);
    let hb = b.heights(shape);
    let le = ha.iter().zip(&hb).all(|(x, y)| x <= y);
    let ge = ha.iter().zip(&hb).all(|(x, y)| x >= y);
    let comparison = match (le, ge) {
        (true, true) => Some(Ordering::Equal),
        (true, false) => Some(Ordering::Less),
        (false, true) => Some(Ordering::Greater),
        (false, false) => None,
    };
    let lo: Vec<usize> = ha.iter().zip(&hb).map(|(x, y)| *x.min(y)).collect();
    let hi: Vec<usize> = ha.iter().zip(&hb).map(|(x, y)| *x.max(y)).collect();
    PathOrder {
        comparison,
        min: PositivePath::from_heights(shape, &lo).expect("meet of paths is a path"),
        max: PositivePath::from_heights(shape, &hi).expect("join of paths is a path"),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Meander {
    /// `paths[i-1]` lies in `Pi_i`.
    pub paths: Vec<PositivePath>,
}

impl Meander {
    /// Union of the lattice edges of the paths, as point pairs.
    fn union(&self, shape: &FlagShape) -> (BTreeSet<GridPoint>, BTreeSet<(GridPoint, GridPoint)>) {
        let mut vs = BTreeSet::new();
        let mut es = BTreeSet::new();
        for p in &self.paths {
            add_path(shape, p, &mut vs, &mut es);
        }
        (vs, es)
    }

    pub fn is_tree(&self, shape: &FlagShape) -> bool {
        let (vs, es) = self.union(shape);
        es.len() + 1 == vs.len()
    }
}

fn add_path(
    shape: &FlagShape,
    p: &PositivePath,
    vs: &mut BTreeSet<GridPoint>,
    es: &mut BTreeSet<(GridPoint, GridPoint)>,
) {
    let pts = p.points(shape);
    vs.extend(pts.iter().copied());
    es.extend(pts.windows(2).map(|w| (w[0], w[1])));
}

/// All meanders, in lexicographic order of their path tuples.
///
/// Every path ends at the origin, so the union is connected and a tuple is a
/// tree exactly when edges = vertices - 1. Sub-tuples of a tree are trees,
/// which lets the search prune early.
pub fn enumerate_meanders(shape: &FlagShape) -> Vec<Meander> {
    let per_roof: Vec<Vec<PositivePath>> = (1..=shape.len())
        .map(|i| enumerate_positive_paths(shape, i))
        .collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    search(
        shape,
        &per_roof,
        &mut chosen,
        &BTreeSet::new(),
        &BTreeSet::new(),
        &mut out,
    );
    out
}

fn search(
    shape: &FlagShape,
    per_roof: &[Vec<PositivePath>],
    chosen: &mut Vec<PositivePath>,
    vs: &BTreeSet<GridPoint>,
    es: &BTreeSet<(GridPoint, GridPoint)>,
    out: &mut Vec<Meander>,
) {
    let depth = chosen.len();
    if depth == per_roof.len() {
        out.push(Meander {
            paths: chosen.clone(),
        });
        return;
    }
    for p in &per_roof[depth] {
        let mut v2 = vs.clone();
        let mut e2 = es.clone();
        add_path(shape, p, &mut v2, &mut e2);
        if e2.len() + 1 != v2.len() {
            continue;
        }
        chosen.push(p.clone());
        search(shape, per_roof, chosen, &v2, &e2, out);
        chosen.pop();
    }
}

/// `lambda_m(e) = 1 - sum of |R_i|` over the paths of `m` crossing `e`.
pub fn meander_functional(graph: &LadderGraph, m: &Meander) -> Result<IntVector> {
    let mut v = vec![1i64; graph.edges().len()];
    for p in &m.paths {
        let r = graph.roof(p.origin).len() as i64;
        for e in p.crossed_edges(graph) {
            v[e] -= r;
        }
    }
    check_kills_delta_kernel(graph, &v)
        .map_err(|msg| Error::Consistency(format!("meander functional: {msg}")))?;
    Ok(v)
}

/// Checks that a functional on `L(E)` vanishes on every roof and box vector.
pub fn check_kills_delta_kernel(
    graph: &LadderGraph,
    f: &[i64],
) -> core::result::Result<(), String> {
    for i in 1..=graph.shape().len() {
        let s = pair(f, &graph.roof_kernel_vector(i));
        if s != 0 {
            return Err(format!("roof {i} sums to {s}"));
        }
    }
    for b in 0..graph.boxes().len() {
        let s = pair(f, &graph.box_kernel_vector(b));
        if s != 0 {
            return Err(format!("box {b} is unbalanced by {s}"));
        }
    }
    Ok(())
}

/// Checks that a functional on `L(E)` vanishes on every box vector.
pub fn check_kills_boundary_kernel(
    graph: &LadderGraph,
    f: &[i64],
) -> core::result::Result<(), String> {
    for b in 0..graph.boxes().len() {
        let s = pair(f, &graph.box_kernel_vector(b));
        if s != 0 {
            return Err(format!("box {b} is unbalanced by {s}"));
        }
    }
    Ok(())
}

/// Descends a functional on `L(E)` killing `Ker(delta)` to `mu` on `L(D)`,
/// so that `lambda(e) = mu(h(e)) - mu(t(e))` with stars at 0.
pub fn descend_to_dots(graph: &LadderGraph, lambda: &[i64]) -> Result<IntVector> {
    let nv = graph.vertices().len();
    let mut mu: Vec<Option<i64>> = vec![None; nv];
    let mut stack = Vec::new();
    for i in 1..=graph.shape().len() + 1 {
        let s = graph.star_vertex(i);
        mu[s] = Some(0);
        stack.push(s);
    }
    let mut incident = vec![Vec::new(); nv];
    for e in graph.edges() {
        incident[e.tail].push(e.id);
        incident[e.head].push(e.id);
    }
    while let Some(v) = stack.pop() {
        let mv = mu[v].unwrap();
        for &id in &incident[v] {
            let e = &graph.edges()[id];
            let (other, val) = if e.tail == v {
                (e.head, mv + lambda[id])
            } else {
                (e.tail, mv - lambda[id])
            };
            match mu[other] {
                None => {
                    mu[other] = Some(val);
                    stack.push(other);
                }
                Some(x) if x != val => {
                    return Err(Error::FunctionalMismatch(format!(
                        "functional does not descend: edge {id} is inconsistent"
                    )))
                }
                Some(_) => {}
            }
        }
    }
    Ok(mu[..graph.dot_count()].iter().map(|x| x.unwrap()).collect())
}

/// `v[e]`: the indicator of `U(e)`.
pub fn upper_indicator(graph: &LadderGraph, e: usize) -> Result<IntVector> {
    let mut v = vec![0; graph.edges().len()];
    for f in graph.upper_set(e)? {
        v[f] = 1;
    }
    Ok(v)
}

/// `pi[e] = lambda_pi - v[e]` for a roof edge `e` of the path's roof.
pub fn section_functional(graph: &LadderGraph, path: &PositivePath, e: usize) -> Result<IntVector> {
    match graph.roof_index(e) {
        Some(i) if i == path.origin => {}
        Some(_) => {
            return Err(Error::InvalidShape(format!(
                "edge {e} is not on roof {}",
                path.origin
            )))
        }
        None => return Err(Error::NotARoofEdge(e)),
    }
    let v = upper_indicator(graph, e)?;
    Ok(path_functional(graph, path)
        .iter()
        .zip(&v)
        .map(|(a, b)| a - b)
        .collect())
}

/// Builds the path of `Pi_i` that crosses the roof edge `roof_edge` and, at
/// each box it enters, the corner edge picked by `choose` (`Left` crosses
/// the vertical corner edge, `Down` the horizontal one).
pub fn constructive_path(
    graph: &LadderGraph,
    roof_edge: usize,
    mut choose: impl FnMut(&LadderBox) -> Step,
) -> Result<PositivePath> {
    let i = graph
        .roof_index(roof_edge)
        .ok_or(Error::NotARoofEdge(roof_edge))?;
    let shape = graph.shape();
    let ni = shape.step(i) as i64;
    let n = shape.ambient() as i64;
    let mid = graph.midpoint(roof_edge);
    let (target, crossing) = match graph.edges()[roof_edge].direction {
        Direction::Vertical => (GridPoint::new(mid.x2 + 1, mid.y2), Step::Left),
        Direction::Horizontal => (GridPoint::new(mid.x2, mid.y2 + 1), Step::Down),
    };
    let lefts = ni - target.x2 / 2;
    let downs = (n - ni) - target.y2 / 2;
    if lefts < 0 || downs < 0 {
        return Err(Error::Consistency(format!(
            "roof edge {roof_edge} is not reachable from O_{i}"
        )));
    }
    let mut steps = Vec::with_capacity(n as usize);
    steps.extend(core::iter::repeat(Step::Left).take(lefts as usize));
    steps.extend(core::iter::repeat(Step::Down).take(downs as usize));
    steps.push(crossing);
    let mut at = match crossing {
        Step::Left => GridPoint::new(target.x2 - 2, target.y2),
        Step::Down => GridPoint::new(target.x2, target.y2 - 2),
    };
    let box_at = |p: GridPoint| {
        graph
            .boxes()
            .iter()
            .find(|b| b.lower_left.x2 + 1 == p.x2 && b.lower_left.y2 + 1 == p.y2)
    };
    while at.x2 > 0 && at.y2 > 0 {
        let b = box_at(at).ok_or_else(|| {
            Error::Consistency(format!(
                "path from O_{i} reached {at:?}, which is no box centre"
            ))
        })?;
        let s = choose(b);
        steps.push(s);
        at = match s {
            Step::Left => GridPoint::new(at.x2 - 2, at.y2),
            Step::Down => GridPoint::new(at.x2, at.y2 - 2),
        };
    }
    steps.extend(core::iter::repeat(Step::Down).take((at.y2 / 2) as usize));
    steps.extend(core::iter::repeat(Step::Left).take((at.x2 / 2) as usize));
    Ok(PositivePath { origin: i, steps })
}
