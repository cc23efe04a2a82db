//! Brute-force exact convex hull, used to cross-check the meander facets.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg;

/// A facet `normal . x <= offset` with a primitive integer normal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HullFacet {
    pub normal: Vec<BigInt>,
    pub offset: BigInt,
    /// Indices of the input points on the facet.
    pub incident: BTreeSet<usize>,
}

fn dot(a: &[BigInt], p: &[i64]) -> BigInt {
    a.iter().zip(p).map(|(x, &y)| x * BigInt::from(y)).sum()
}

/// All facets of the convex hull of full-dimensional `points`, sorted by
/// incidence set. Every `d`-subset of points is tried as a hyperplane.
pub fn brute_force_facets(points: &[Vec<i64>]) -> Result<Vec<HullFacet>> {
    let d = points.first().map_or(0, Vec::len);
    if points.iter().any(|p| p.len() != d) {
        return Err(Error::DegenerateInput("points of mixed dimension".into()));
    }
    let diffs: Vec<Vec<i64>> = points
        .iter()
        .skip(1)
        .map(|p| p.iter().zip(&points[0]).map(|(a, b)| a - b).collect())
        .collect();
    if d == 0 || linalg::rank(&diffs) != d {
        return Err(Error::DegenerateInput(format!(
            "{} points do not affinely span dimension {d}",
            points.len()
        )));
    }
    let mut found: BTreeMap<BTreeSet<usize>, HullFacet> = BTreeMap::new();
    let mut chosen = Vec::with_capacity(d);
    subsets(points, d, 0, &mut chosen, &mut found);
    Ok(found.into_values().collect())
}

fn subsets(
    points: &[Vec<i64>],
    d: usize,
    start: usize,
    chosen: &mut Vec<usize>,
    found: &mut BTreeMap<BTreeSet<usize>, HullFacet>,
) {
    if chosen.len() > 1 {
        let base = &points[chosen[0]];
        let diffs: Vec<Vec<i64>> = chosen[1..]
            .iter()
            .map(|&k| points[k].iter().zip(base).map(|(a, b)| a - b).collect())
            .collect();
        if linalg::rank(&diffs) != diffs.len() {
            return;
        }
        if chosen.len() == d {
            test_plane(points, base, &diffs, found);
            return;
        }
    } else if chosen.len() == d {
        // d == 1
        test_plane(points, &points[chosen[0]], &[], found);
        return;
    }
    for k in start..points.len() {
        chosen.push(k);
        subsets(points, d, k + 1, chosen, found);
        chosen.pop();
    }
}

fn test_plane(
    points: &[Vec<i64>],
    base: &[i64],
    diffs: &[Vec<i64>],
    found: &mut BTreeMap<BTreeSet<usize>, HullFacet>,
) {
    let mut normal = linalg::cross_normal(diffs);
    if normal.iter().all(Zero::is_zero) {
        return;
    }
    let mut offset = dot(&normal, base);
    let values: Vec<BigInt> = points.iter().map(|p| dot(&normal, p)).collect();
    let above = values.iter().any(|v| *v > offset);
    let below = values.iter().any(|v| *v < offset);
    if above && below {
        return;
    }
    if above {
        for x in normal.iter_mut() {
            *x = -x.clone();
        }
        offset = -offset;
    }
    let incident: BTreeSet<usize> = values
        .iter()
        .enumerate()
        .filter(|(_, v)| {
            if above {
                -(*v).clone() == offset
            } else {
                **v == offset
            }
        })
        .map(|(k, _)| k)
        .collect();
    found.entry(incident.clone()).or_insert(HullFacet {
        normal,
        offset,
        incident,
    });
}

/// Indices of the points that are vertices of the hull: points lying on at
/// least `d` facets whose normals span.
pub fn hull_vertices(points: &[Vec<i64>], facets: &[HullFacet]) -> Vec<usize> {
    let d = points.first().map_or(0, Vec::len);
    (0..points.len())
        .filter(|&k| {
            let normals: Vec<Vec<i64>> = facets
                .iter()
                .filter(|f| f.incident.contains(&k))
                .map(|f| {
                    f.normal
                        .iter()
                        .map(|x| i64::try_from(x).unwrap_or(i64::MAX))
                        .collect()
                })
                .collect();
            !normals.is_empty() && linalg::rank(&normals) == d
        })
        .collect()
}
