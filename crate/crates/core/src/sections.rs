//! The cone of nonnegative functionals killing `Ker(boundary)`, its
//! decomposition into path functionals, the section polytopes and the
//! quadratic relations among paths.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::ladder::{IntVector, LadderGraph};
use crate::paths::{self, PositivePath, Step};
use crate::shape::FlagShape;

/// Peels path functionals off `lambda` until nothing is left.
///
/// At each round the first positive edge of the lowest roof carrying one is
/// crossed, and inside each box the path goes left if the vertical corner edge
/// is still positive, down otherwise.
pub fn greedy_decompose(graph: &LadderGraph, lambda: &[i64]) -> Result<Vec<PositivePath>> {
    if lambda.len() != graph.edges().len() {
        return Err(Error::NotInCone(format!(
            "functional has {} entries for {} edges",
            lambda.len(),
            graph.edges().len()
        )));
    }
    if let Some(e) = lambda.iter().position(|&x| x < 0) {
        return Err(Error::NotInCone(format!("negative value on edge {e}")));
    }
    paths::check_kills_boundary_kernel(graph, lambda).map_err(Error::NotInCone)?;
    let mut rest = lambda.to_vec();
    let mut out = Vec::new();
    while let Some(start) = graph.roof_edges().find(|&e| rest[e] > 0) {
        let path = paths::constructive_path(graph, start, |b| {
            if rest[b.corner[0]] > 0 {
                Step::Left
            } else {
                Step::Down
            }
        })?;
        for e in path.crossed_edges(graph) {
            if rest[e] <= 0 {
                return Err(Error::Consistency(format!(
                    "peeled path crosses edge {e} with no weight left"
                )));
            }
            rest[e] -= 1;
        }
        out.push(path);
    }
    if rest.iter().any(|&x| x != 0) {
        return Err(Error::Consistency(
            "weight left on edges no path can reach".into(),
        ));
    }
    Ok(out)
}

/// Every path of every `Pi_i`, `Pi_1` first.
pub fn all_paths(shape: &FlagShape) -> Vec<PositivePath> {
    (1..=shape.len())
        .flat_map(|i| paths::enumerate_positive_paths(shape, i))
        .collect()
}

/// Lattice points of the cone with weight at most `bound`.
///
/// A functional kills `Ker(boundary)` exactly when it is `phi(h) - phi(t)`
/// for a potential `phi` on the vertices, so the search runs over
/// nonnegative values on the edges of a spanning tree and checks the
/// remaining edges.
pub fn cone_points(graph: &LadderGraph, bound: i64) -> Vec<IntVector> {
    let nv = graph.vertices().len();
    let mut incident = vec![Vec::new(); nv];
    for e in graph.edges() {
        incident[e.tail].push(e.id);
        incident[e.head].push(e.id);
    }
    // BFS tree from vertex 0; tree edges in discovery order
    let mut tree = Vec::new();
    let mut seen = vec![false; nv];
    seen[0] = true;
    let mut queue = VecDeque::from([0usize]);
    while let Some(v) = queue.pop_front() {
        for &id in &incident[v] {
            let e = &graph.edges()[id];
            let w = if e.tail == v { e.head } else { e.tail };
            if !seen[w] {
                seen[w] = true;
                tree.push((id, v, w));
                queue.push_back(w);
            }
        }
    }
    let mut out = Vec::new();
    let mut values = vec![0i64; tree.len()];
    tree_search(graph, &tree, 0, bound, bound, &mut values, &mut out);
    out
}

fn tree_search(
    graph: &LadderGraph,
    tree: &[(usize, usize, usize)],
    k: usize,
    bound: i64,
    budget: i64,
    values: &mut Vec<i64>,
    out: &mut Vec<IntVector>,
) {
    if k == tree.len() {
        let nv = graph.vertices().len();
        let mut phi = vec![0i64; nv];
        for (&(id, from, to), &val) in tree.iter().zip(values.iter()) {
            let e = &graph.edges()[id];
            phi[to] = if e.tail == from {
                phi[from] + val
            } else {
                phi[from] - val
            };
        }
        let lambda: IntVector = graph
            .edges()
            .iter()
            .map(|e| phi[e.head] - phi[e.tail])
            .collect();
        if lambda.iter().all(|&x| x >= 0) && paths::weight(&lambda) <= bound {
            out.push(lambda);
        }
        return;
    }
    for v in 0..=budget {
        values[k] = v;
        tree_search(graph, tree, k + 1, bound, budget - v, values, out);
    }
    values[k] = 0;
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertReport {
    pub weight_bound: i64,
    pub points_checked: usize,
    /// Cone points whose greedy decomposition failed or did not re-sum.
    pub failed_decompositions: Vec<IntVector>,
    pub min_positive_weight: Option<i64>,
    /// Nonzero cone points of weight below `n`.
    pub below_n: Vec<IntVector>,
    /// Paths whose functional is a nonnegative combination of the others.
    pub decomposable_generators: Vec<usize>,
}

pub fn check_hilbert_basis(graph: &LadderGraph, weight_bound: i64) -> HilbertReport {
    let n = graph.shape().ambient() as i64;
    let points = cone_points(graph, weight_bound);
    let mut failed = Vec::new();
    let mut below_n = Vec::new();
    let mut min_positive = None;
    for p in &points {
        let w = paths::weight(p);
        if w > 0 {
            min_positive = Some(min_positive.map_or(w, |m: i64| m.min(w)));
            if w < n {
                below_n.push(p.clone());
            }
        }
        let ok = greedy_decompose(graph, p).is_ok_and(|ps| {
            let mut acc = vec![0i64; p.len()];
            for q in &ps {
                for e in q.crossed_edges(graph) {
                    acc[e] += 1;
                }
            }
            acc == *p
        });
        if !ok {
            failed.push(p.clone());
        }
    }
    let gens: Vec<IntVector> = all_paths(graph.shape())
        .iter()
        .map(|p| paths::path_functional(graph, p))
        .collect();
    let decomposable = (0..gens.len())
        .filter(|&k| {
            let target: BTreeSet<usize> = (0..gens[k].len()).filter(|&e| gens[k][e] == 1).collect();
            let others: Vec<BTreeSet<usize>> = gens
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != k)
                .map(|(_, g)| {
                    (0..g.len())
                        .filter(|&e| g[e] == 1)
                        .collect::<BTreeSet<usize>>()
                })
                .filter(|s| s.is_subset(&target))
                .collect();
            exact_cover(&target, &others)
        })
        .collect();
    HilbertReport {
        weight_bound,
        points_checked: points.len(),
        failed_decompositions: failed,
        min_positive_weight: min_positive,
        below_n,
        decomposable_generators: decomposable,
    }
}

/// Whether `target` is a disjoint union of some of `parts` (0/1 functionals
/// can only combine with coefficient 1 on disjoint supports).
fn exact_cover(target: &BTreeSet<usize>, parts: &[BTreeSet<usize>]) -> bool {
    let Some(&first) = target.iter().next() else {
        return true;
    };
    parts.iter().filter(|p| p.contains(&first)).any(|p| {
        let rest: BTreeSet<usize> = target.difference(p).copied().collect();
        let remaining: Vec<BTreeSet<usize>> = parts
            .iter()
            .filter(|q| q.is_subset(&rest) && !q.is_empty())
            .cloned()
            .collect();
        exact_cover(&rest, &remaining)
    })
}

/// Integral functionals `mu` on `L(D)` with `mu(delta(g)) >= -1` on `U(e)`
/// and `>= 0` elsewhere, sorted.
pub fn section_polytope_points(graph: &LadderGraph, e: usize) -> Result<Vec<IntVector>> {
    let upper = graph.upper_set(e)?;
    let nv = graph.vertices().len();
    let d = graph.dot_count();
    // mu(t) - mu(h) <= c(g)
    let slack = |g: usize| i64::from(upper.contains(&g));
    let shortest = |reverse: bool| {
        let mut dist = vec![i64::MAX; nv];
        dist[d..].fill(0);
        for _ in 0..nv {
            let mut changed = false;
            for g in graph.edges() {
                let (from, to) = if reverse {
                    (g.tail, g.head)
                } else {
                    (g.head, g.tail)
                };
                if dist[from] != i64::MAX && dist[from] + slack(g.id) < dist[to] {
                    dist[to] = dist[from] + slack(g.id);
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        dist
    };
    let upper_bound = shortest(false);
    let lower_bound: Vec<i64> = shortest(true).iter().map(|&x| -x).collect();
    // each constraint is checked once its last dot is assigned; stars stay 0
    let mut constraints: Vec<Vec<(usize, usize, i64)>> = vec![Vec::new(); d];
    for g in graph.edges() {
        if let Some(key) = [g.tail, g.head].into_iter().filter(|&v| v < d).max() {
            constraints[key].push((g.tail, g.head, slack(g.id)));
        }
    }
    let mut mu = vec![0i64; nv];
    let mut out = Vec::new();
    section_search(
        0,
        d,
        &lower_bound,
        &upper_bound,
        &constraints,
        &mut mu,
        &mut out,
    );
    out.sort();
    Ok(out)
}

fn section_search(
    k: usize,
    d: usize,
    lo: &[i64],
    hi: &[i64],
    constraints: &[Vec<(usize, usize, i64)>],
    mu: &mut Vec<i64>,
    out: &mut Vec<IntVector>,
) {
    if k == d {
        out.push(mu[..d].to_vec());
        return;
    }
    for v in lo[k]..=hi[k] {
        mu[k] = v;
        if constraints[k].iter().all(|&(t, h, c)| mu[h] - mu[t] >= -c) {
            section_search(k + 1, d, lo, hi, constraints, mu, out);
        }
    }
    mu[k] = 0;
}

/// The points `pi[e]` on `L(D)` for `pi` in the roof's path set, sorted.
pub fn section_images(graph: &LadderGraph, e: usize) -> Result<Vec<IntVector>> {
    let i = graph.roof_index(e).ok_or(Error::NotARoofEdge(e))?;
    let mut out = paths::enumerate_positive_paths(graph.shape(), i)
        .iter()
        .map(|p| {
            let f = paths::section_functional(graph, p, e)?;
            paths::descend_to_dots(graph, &f)
        })
        .collect::<Result<Vec<_>>>()?;
    out.sort();
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticRelation {
    /// Indices into [`all_paths`].
    pub first: usize,
    pub second: usize,
    pub min: usize,
    pub max: usize,
    /// Roof indices `(i, j)` of the two paths.
    pub degrees: (usize, usize),
}

/// One relation `z_a z_b = z_min z_max` per incomparable pair, each checked
/// through `lambda_a + lambda_b = lambda_min + lambda_max`.
pub fn quadratic_relations(graph: &LadderGraph) -> Result<Vec<QuadraticRelation>> {
    let shape = graph.shape();
    let all = all_paths(shape);
    let id: BTreeMap<&PositivePath, usize> = all.iter().enumerate().map(|(k, p)| (p, k)).collect();
    let funcs: Vec<IntVector> = all
        .iter()
        .map(|p| paths::path_functional(graph, p))
        .collect();
    let mut out = Vec::new();
    for a in 0..all.len() {
        for b in a + 1..all.len() {
            let o = paths::path_order(shape, &all[a], &all[b]);
            if o.comparison.is_some() {
                continue;
            }
            let (lo, hi) = (id[&o.min], id[&o.max]);
            let lhs: Vec<i64> = funcs[a].iter().zip(&funcs[b]).map(|(x, y)| x + y).collect();
            let rhs: Vec<i64> = funcs[lo]
                .iter()
                .zip(&funcs[hi])
                .map(|(x, y)| x + y)
                .collect();
            if lhs != rhs {
                return Err(Error::FunctionalMismatch(format!(
                    "paths {} and {} of roofs {} and {}",
                    all[a].step_string(),
                    all[b].step_string(),
                    all[a].origin,
                    all[b].origin
                )));
            }
            let mut degs = [all[a].origin, all[b].origin];
            let mut mdegs = [all[lo].origin, all[hi].origin];
            degs.sort_unstable();
            mdegs.sort_unstable();
            if degs != mdegs {
                return Err(Error::FunctionalMismatch(format!(
                    "relation between {} and {} is not homogeneous",
                    all[a].step_string(),
                    all[b].step_string()
                )));
            }
            out.push(QuadraticRelation {
                first: a,
                second: b,
                min: lo,
                max: hi,
                degrees: (all[a].origin, all[b].origin),
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(steps: &[usize], n: usize) -> LadderGraph {
        LadderGraph::build(&FlagShape::new(steps, n).unwrap()).unwrap()
    }

    #[test]
    fn decomposes_sums_of_paths() {
        let g = graph(&[1], 2);
        assert!(greedy_decompose(&g, &[0, 0]).unwrap().is_empty());
        let ps = all_paths(g.shape());
        let mut sum = vec![0; 2];
        for p in &ps {
            for (s, v) in sum.iter_mut().zip(paths::path_functional(&g, p)) {
                *s += v;
            }
        }
        assert_eq!(greedy_decompose(&g, &sum).unwrap().len(), 2);
    }

    #[test]
    fn single_paths_peel_to_themselves() {
        let g = graph(&[1, 3], 5);
        for p in all_paths(g.shape()) {
            let f = paths::path_functional(&g, &p);
            let got = greedy_decompose(&g, &f).unwrap();
            let back: Vec<IntVector> = got.iter().map(|q| paths::path_functional(&g, q)).collect();
            if paths::weight(&f) > 0 {
                assert_eq!(back, [f]);
            }
        }
    }

    #[test]
    fn rejects_outside_cone() {
        let g = graph(&[2], 4);
        let mut f = vec![0; g.edges().len()];
        f[0] = -1;
        assert!(matches!(greedy_decompose(&g, &f), Err(Error::NotInCone(_))));
        let b = &g.boxes()[0];
        let mut f = vec![0; g.edges().len()];
        f[b.corner[0]] = 1;
        assert!(matches!(greedy_decompose(&g, &f), Err(Error::NotInCone(_))));
    }

    #[test]
    fn hilbert_small() {
        let g = graph(&[2], 4);
        let r = check_hilbert_basis(&g, 8);
        assert!(r.failed_decompositions.is_empty());
        assert!(r.decomposable_generators.is_empty());
    }

    #[test]
    fn sections_match_paths() {
        for (steps, n) in [
            (&[1][..], 2),
            (&[2][..], 5),
            (&[1, 2][..], 3),
            (&[1, 3][..], 5),
        ] {
            let g = graph(steps, n);
            for e in g.roof_edges() {
                let pts = section_polytope_points(&g, e).unwrap();
                assert_eq!(
                    pts,
                    section_images(&g, e).unwrap(),
                    "{} edge {e}",
                    g.shape()
                );
            }
        }
    }

    #[test]
    fn relations() {
        assert!(quadratic_relations(&graph(&[1], 2)).unwrap().is_empty());
        assert_eq!(quadratic_relations(&graph(&[1, 2], 3)).unwrap().len(), 1);
        let r = quadratic_relations(&graph(&[2], 4)).unwrap();
        assert_eq!(r.len(), 1);
    }
}
