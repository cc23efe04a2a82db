//! The polytope spanned by the edge vectors `delta(e)`, its meander facets,
//! the small refinement of its fan and the conifold strata.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::ladder::{IntVector, LadderGraph};
use crate::linalg;
use crate::paths::{self, Meander, Step};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Facet {
    /// Index into [`ReflexivePolytope::meanders`].
    pub meander: usize,
    /// `lambda_m` on `L(E)`.
    pub edge_values: IntVector,
    /// The same functional on `L(D)`.
    pub functional: IntVector,
    /// Edges `e` with `lambda_m(e) = 1`.
    pub incident: BTreeSet<usize>,
}

#[derive(Debug, Clone)]
pub struct ReflexivePolytope {
    pub dimension: usize,
    /// `delta(e)` indexed by edge id.
    pub points: Vec<IntVector>,
    pub meanders: Vec<Meander>,
    pub facets: Vec<Facet>,
    /// Whether `delta(e)` is a vertex of the polytope.
    pub is_vertex: Vec<bool>,
}

/// Builds the polytope with one facet per meander and verifies that every
/// facet functional is integral, supports the polytope at level 1 and cuts
/// out a codimension-one face.
pub fn build_polytope_with_facets(graph: &LadderGraph) -> Result<ReflexivePolytope> {
    let meanders = paths::enumerate_meanders(graph.shape());
    build_from_meanders(graph, meanders)
}

pub fn build_from_meanders(
    graph: &LadderGraph,
    meanders: Vec<Meander>,
) -> Result<ReflexivePolytope> {
    let d = graph.dot_count();
    let points = graph.delta_matrix();
    let mut facets = Vec::with_capacity(meanders.len());
    let mut seen = BTreeSet::new();
    for (k, m) in meanders.iter().enumerate() {
        let edge_values = paths::meander_functional(graph, m)?;
        let functional = paths::descend_to_dots(graph, &edge_values)
            .map_err(|e| Error::ReflexivityFailure(format!("meander {k}: {e}")))?;
        for (e, p) in points.iter().enumerate() {
            if paths::pair(&functional, p) != edge_values[e] {
                return Err(Error::ReflexivityFailure(format!(
                    "meander {k}: functional disagrees with lambda_m on edge {e}"
                )));
            }
            if edge_values[e] > 1 {
                return Err(Error::ReflexivityFailure(format!(
                    "meander {k}: value {} > 1 on edge {e}",
                    edge_values[e]
                )));
            }
        }
        let incident: BTreeSet<usize> =
            (0..points.len()).filter(|&e| edge_values[e] == 1).collect();
        let rows: Vec<IntVector> = incident.iter().map(|&e| points[e].clone()).collect();
        if linalg::rank(&rows) != d {
            return Err(Error::ReflexivityFailure(format!(
                "meander {k} does not cut out a facet"
            )));
        }
        if !seen.insert(incident.clone()) {
            return Err(Error::ReflexivityFailure(format!(
                "meander {k} repeats a facet"
            )));
        }
        facets.push(Facet {
            meander: k,
            edge_values,
            functional,
            incident,
        });
    }
    let is_vertex = (0..points.len())
        .map(|e| {
            let normals: Vec<IntVector> = facets
                .iter()
                .filter(|f| f.incident.contains(&e))
                .map(|f| f.functional.clone())
                .collect();
            linalg::rank(&normals) == d
        })
        .collect();
    Ok(ReflexivePolytope {
        dimension: d,
        points,
        meanders,
        facets,
        is_vertex,
    })
}

impl ReflexivePolytope {
    /// Lattice points `p` with `lambda(p) <= 0` for every facet functional,
    /// i.e. the interior lattice points. The polytope sits inside `[-1,1]^d`,
    /// so the scan is over that cube; it stops after `limit` hits.
    pub fn interior_lattice_points(&self, limit: usize) -> Vec<IntVector> {
        let d = self.dimension;
        let mut out = Vec::new();
        let mut p = vec![-1i64; d];
        loop {
            if self
                .facets
                .iter()
                .all(|f| paths::pair(&f.functional, &p) <= 0)
            {
                out.push(p.clone());
                if out.len() >= limit {
                    return out;
                }
            }
            let mut k = 0;
            loop {
                if k == d {
                    return out;
                }
                if p[k] < 1 {
                    p[k] += 1;
                    break;
                }
                p[k] = -1;
                k += 1;
            }
        }
    }

    /// The origin is the only interior lattice point.
    pub fn check_reflexive(&self) -> Result<()> {
        let inner = self.interior_lattice_points(2);
        match inner.as_slice() {
            [p] if p.iter().all(|&x| x == 0) => Ok(()),
            [] => Err(Error::ReflexivityFailure("origin is not interior".into())),
            _ => Err(Error::ReflexivityFailure(format!(
                "extra interior lattice point {:?}",
                inner.iter().find(|p| p.iter().any(|&x| x != 0))
            ))),
        }
    }
}

impl ReflexivePolytope {
    /// Compares the meander facets with a brute-force hull of the points.
    /// Costs a rank test per `d`-subset of `points`.
    pub fn check_against_hull(&self) -> Result<()> {
        let hull = crate::hull::brute_force_facets(&self.points)?;
        let ours: BTreeSet<&BTreeSet<usize>> = self.facets.iter().map(|f| &f.incident).collect();
        let theirs: BTreeSet<&BTreeSet<usize>> = hull.iter().map(|f| &f.incident).collect();
        if ours != theirs {
            return Err(Error::ReflexivityFailure(format!(
                "{} meander facets, {} hull facets, {} shared",
                ours.len(),
                theirs.len(),
                ours.intersection(&theirs).count()
            )));
        }
        if hull.iter().any(|f| !f.offset.is_one()) {
            return Err(Error::ReflexivityFailure(
                "hull facet not at level 1".into(),
            ));
        }
        Ok(())
    }
}

/// A maximal cone of the refined fan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialCone {
    /// Omitted roof edge per roof.
    pub omitted_roof_edges: Vec<usize>,
    /// Omitted corner edge per box.
    pub omitted_corner_edges: Vec<usize>,
    pub generators: Vec<usize>,
    pub determinant: BigInt,
    pub containing_meander: usize,
}

/// Number of maximal cones, `prod |R_i| * 2^|B|`.
pub fn refined_fan_size(graph: &LadderGraph) -> u128 {
    let roofs: u128 = graph.roofs().iter().map(|r| r.len() as u128).product();
    roofs << graph.boxes().len()
}

/// Index of each meander by its path step strings, for cone lookups.
pub fn meander_index(meanders: &[Meander]) -> BTreeMap<Vec<Vec<Step>>, usize> {
    meanders
        .iter()
        .enumerate()
        .map(|(k, m)| (m.paths.iter().map(|p| p.steps.clone()).collect(), k))
        .collect()
}

/// The cone with index `k` in `0..refined_fan_size`: the low `|B|` bits pick
/// the omitted corner edge of each box (0 vertical, 1 horizontal), the rest
/// is a mixed-radix index of the omitted roof edges.
pub fn refined_cone(
    graph: &LadderGraph,
    index: &BTreeMap<Vec<Vec<Step>>, usize>,
    k: u128,
) -> Result<SimplicialCone> {
    let nb = graph.boxes().len();
    let corner_bits = k & ((1u128 << nb) - 1);
    let mut rest = k >> nb;
    let omitted_roof_edges: Vec<usize> = graph
        .roofs()
        .iter()
        .map(|r| {
            let len = r.len() as u128;
            let e = r[(rest % len) as usize];
            rest /= len;
            e
        })
        .collect();
    let choice = |b: usize| {
        if corner_bits >> b & 1 == 0 {
            Step::Left
        } else {
            Step::Down
        }
    };
    let omitted_corner_edges: Vec<usize> = graph
        .boxes()
        .iter()
        .map(|b| match choice(b.id) {
            Step::Left => b.corner[0],
            Step::Down => b.corner[1],
        })
        .collect();
    let omitted: BTreeSet<usize> = omitted_roof_edges
        .iter()
        .chain(&omitted_corner_edges)
        .copied()
        .collect();
    let generators: Vec<usize> = (0..graph.edges().len())
        .filter(|e| !omitted.contains(e))
        .collect();
    let rows: Vec<IntVector> = generators.iter().map(|&e| graph.delta(e)).collect();
    let determinant = linalg::determinant(&rows);
    if !determinant.abs().is_one() {
        return Err(Error::UnimodularityFailure(format!(
            "cone {k} has determinant {determinant}"
        )));
    }
    let mut steps = Vec::with_capacity(omitted_roof_edges.len());
    for &e in &omitted_roof_edges {
        let p = paths::constructive_path(graph, e, |b| choice(b.id))
            .map_err(|err| Error::ContainmentFailure(format!("cone {k}: {err}")))?;
        steps.push(p.steps);
    }
    let containing_meander = *index.get(&steps).ok_or_else(|| {
        Error::ContainmentFailure(format!("cone {k}: constructed paths are no meander"))
    })?;
    let m = Meander {
        paths: steps
            .into_iter()
            .enumerate()
            .map(|(i, s)| paths::PositivePath {
                origin: i + 1,
                steps: s,
            })
            .collect(),
    };
    let lambda = paths::meander_functional(graph, &m)?;
    if let Some(&e) = generators.iter().find(|&&e| lambda[e] != 1) {
        return Err(Error::ContainmentFailure(format!(
            "cone {k}: generator {e} has lambda_m = {}",
            lambda[e]
        )));
    }
    Ok(SimplicialCone {
        omitted_roof_edges,
        omitted_corner_edges,
        generators,
        determinant,
        containing_meander,
    })
}

/// All maximal cones of the refined fan, each certified unimodular and
/// inside the facet cone of a meander.
pub fn refined_fan(graph: &LadderGraph, meanders: &[Meander]) -> Result<Vec<SimplicialCone>> {
    let index = meander_index(meanders);
    (0..refined_fan_size(graph))
        .map(|k| refined_cone(graph, &index, k))
        .collect()
}

/// The singular stratum attached to a box, with a lattice basis putting the
/// four corner vectors into the conifold normal form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConifoldStratum {
    pub box_id: usize,
    /// `delta` of `[e, f, g, h]` (corner, then opposite corner).
    pub vectors: [IntVector; 4],
    /// Rows form a lattice basis of `Z^|D|`.
    pub basis: Vec<Vec<BigInt>>,
    /// Coordinates of the four vectors in `basis`: `(0,0,1)`, `(1,1,1)`,
    /// `(1,0,1)`, `(0,1,1)` padded with zeros.
    pub coordinates: [Vec<i64>; 4],
    pub codimension: usize,
}

pub fn singular_strata(graph: &LadderGraph) -> Result<Vec<ConifoldStratum>> {
    graph.boxes().iter().map(|b| stratum(graph, b.id)).collect()
}

fn stratum(graph: &LadderGraph, b: usize) -> Result<ConifoldStratum> {
    let bx = &graph.boxes()[b];
    let [e, f] = bx.corner;
    let [g, h] = bx.opposite;
    let ve = graph.delta(e);
    let vf = graph.delta(f);
    let vg = graph.delta(g);
    let vh = graph.delta(h);
    let sub = |x: &IntVector, y: &IntVector| -> IntVector {
        x.iter().zip(y).map(|(a, b)| a - b).collect()
    };
    let a = sub(&vg, &ve);
    let bb = sub(&vh, &ve);
    let d = graph.dot_count();
    if d < 3 || linalg::rank(&[ve.clone(), vf.clone(), vg.clone(), vh.clone()]) != 3 {
        return Err(Error::NormalFormFailure(b));
    }
    let basis =
        linalg::complete_to_basis(&[a, bb, ve.clone()]).ok_or(Error::NormalFormFailure(b))?;
    let pad = |c: [i64; 3]| {
        let mut v = vec![0i64; d];
        v[..3].copy_from_slice(&c);
        v
    };
    let coordinates = [
        pad([0, 0, 1]),
        pad([1, 1, 1]),
        pad([1, 0, 1]),
        pad([0, 1, 1]),
    ];
    let vectors = [ve, vf, vg, vh];
    for (v, c) in vectors.iter().zip(&coordinates) {
        let mut acc = vec![BigInt::from(0); d];
        for (row, &ci) in basis.iter().zip(c) {
            if ci != 0 {
                for (slot, x) in acc.iter_mut().zip(row) {
                    *slot += x * BigInt::from(ci);
                }
            }
        }
        if acc.iter().zip(v).any(|(x, &y)| *x != BigInt::from(y)) {
            return Err(Error::NormalFormFailure(b));
        }
    }
    if !linalg::determinant_big(basis.clone()).abs().is_one() {
        return Err(Error::NormalFormFailure(b));
    }
    Ok(ConifoldStratum {
        box_id: b,
        vectors,
        basis,
        coordinates,
        codimension: 3,
    })
}
