//! Flag manifolds that can hold a Calabi-Yau complete-intersection 3-fold,
//! and the splittings of their anticanonical class.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::shape::FlagShape;

/// A multiset of degree vectors, kept sorted in decreasing order.
pub type Splitting = Vec<Vec<u32>>;

/// Left side of the feasibility inequality,
/// `(n_1-1)(n-n_1-1) + sum_{i>=2} (n_i-n_{i-1})(n-n_i-1)`.
pub fn feasibility_excess(shape: &FlagShape) -> i64 {
    let n = shape.ambient() as i64;
    (1..=shape.len())
        .map(|i| {
            let ni = shape.step(i) as i64;
            let width = if i == 1 {
                ni - 1
            } else {
                ni - shape.step(i - 1) as i64
            };
            width * (n - ni - 1)
        })
        .sum()
}

/// Shapes excluded by hand: projective spaces and `F(1,n-1,n)`.
pub fn is_excluded_family(shape: &FlagShape) -> bool {
    shape.is_projective_space() || shape.is_point_hyperplane_incidence()
}

fn all_shapes(n_max: usize) -> Vec<FlagShape> {
    let mut out = Vec::new();
    for n in 2..=n_max {
        // subsets of 1..n-1 as bitmasks
        for mask in 1u32..(1 << (n - 1)) {
            let steps: Vec<usize> = (1..n).filter(|&s| mask >> (s - 1) & 1 == 1).collect();
            out.push(FlagShape::new(&steps, n).expect("subset of 1..n-1"));
        }
    }
    out
}

/// Feasible shapes with `n <= n_max`, one per duality pair, in table order.
pub fn feasible_flags(n_max: usize) -> Vec<FlagShape> {
    let mut out: Vec<FlagShape> = all_shapes(n_max)
        .into_iter()
        .filter(|s| feasibility_excess(s) <= 4 && !is_excluded_family(s))
        .filter(|s| s.steps() <= s.dual().steps())
        .collect();
    out.sort_by_key(table_position);
    out
}

/// Shapes with `n <= n_max` satisfying the inequality but excluded as
/// projective spaces or `F(1,n-1,n)`, one per duality pair.
pub fn excluded_flags(n_max: usize) -> Vec<FlagShape> {
    all_shapes(n_max)
        .into_iter()
        .filter(|s| feasibility_excess(s) <= 4 && is_excluded_family(s))
        .filter(|s| s.steps() <= s.dual().steps())
        .collect()
}

fn table_position(s: &FlagShape) -> (usize, core::cmp::Reverse<usize>, usize, usize, Vec<usize>) {
    let pos = REFERENCE
        .iter()
        .position(|r| r.steps == s.steps() && r.ambient == s.ambient())
        .unwrap_or(usize::MAX);
    (
        pos,
        core::cmp::Reverse(s.ambient()),
        s.len(),
        s.dimension(),
        s.steps().to_vec(),
    )
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusEntry {
    pub shape: FlagShape,
    pub dimension: usize,
    pub anticanonical: Vec<u32>,
    /// Number of hypersurfaces, `dim - 3`.
    pub factors: usize,
    pub splittings: Vec<Splitting>,
    pub dual: FlagShape,
    pub self_dual: bool,
    pub modulo_duality: bool,
}

fn normalize(mut s: Splitting) -> Splitting {
    s.sort_by(|a, b| b.cmp(a));
    s
}

fn reversed(s: &Splitting) -> Splitting {
    normalize(
        s.iter()
            .map(|v| v.iter().rev().copied().collect())
            .collect(),
    )
}

/// Representative of a splitting under entrywise reversal.
pub fn canonical(s: &Splitting) -> Splitting {
    let a = normalize(s.clone());
    let b = reversed(&a);
    a.min(b)
}

/// All multisets of `r = dim - 3` nonzero nonnegative vectors summing to the
/// anticanonical class.
pub fn enumerate_splittings(shape: &FlagShape, modulo_duality: bool) -> Result<CensusEntry> {
    let dimension = shape.dimension();
    let anticanonical: Vec<u32> = shape.anticanonical().iter().map(|&x| x as u32).collect();
    if dimension <= 3 {
        return Err(Error::NotFeasible(format!(
            "{shape} has dimension {dimension}"
        )));
    }
    let r = dimension - 3;
    let parts = nonzero_vectors(&anticanonical);
    let mut found = Vec::new();
    split_rec(&parts, &anticanonical, r, 0, &mut Vec::new(), &mut found);
    if found.is_empty() {
        return Err(Error::NotFeasible(format!(
            "{shape}: -K cannot be split into {r} nonzero parts"
        )));
    }
    let self_dual = shape.is_self_dual();
    let mut set: BTreeSet<Splitting> = found.into_iter().map(normalize).collect();
    if self_dual && modulo_duality {
        set = set.iter().map(canonical).collect();
    }
    Ok(CensusEntry {
        shape: shape.clone(),
        dimension,
        anticanonical,
        factors: r,
        splittings: set.into_iter().collect(),
        dual: shape.dual(),
        self_dual,
        modulo_duality,
    })
}

fn nonzero_vectors(bound: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for &b in bound {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=b).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out.retain(|v| v.iter().any(|&x| x > 0));
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// Parts are taken in non-increasing position order so each multiset
/// appears once.
fn split_rec(
    parts: &[Vec<u32>],
    rest: &[u32],
    left: usize,
    from: usize,
    cur: &mut Splitting,
    out: &mut Vec<Splitting>,
) {
    if left == 0 {
        if rest.iter().all(|&x| x == 0) {
            out.push(cur.clone());
        }
        return;
    }
    // every remaining part has a positive entry
    if rest.iter().sum::<u32>() < left as u32 {
        return;
    }
    for (k, p) in parts.iter().enumerate().skip(from) {
        if p.iter().zip(rest).all(|(a, b)| a <= b) {
            let r2: Vec<u32> = p.iter().zip(rest).map(|(a, b)| b - a).collect();
            cur.push(p.clone());
            split_rec(parts, &r2, left - 1, k, cur, out);
            cur.pop();
        }
    }
}

/// A row of the reference table.
pub struct ReferenceRow {
    pub steps: &'static [usize],
    pub ambient: usize,
    /// Splittings in the notation `2(1,0)+(0,2)`.
    pub splittings: &'static [&'static str],
}

macro_rules! row {
    ([$($s:expr),*], $n:expr, [$($t:expr),* $(,)?]) => {
        ReferenceRow { steps: &[$($s),*], ambient: $n, splittings: &[$($t),*] }
    };
}

/// The reference census, rows in reference order.
pub const REFERENCE: &[ReferenceRow] = &[
    row!([2], 7, ["7(1)"]),
    row!([1, 2], 7, ["2(1,0)+6(0,1)"]),
    row!([1, 5], 7, ["5(1,0)+6(0,1)"]),
    row!([1, 2, 6], 7, ["2(1,0,0)+5(0,1,0)+5(0,0,1)"]),
    row!([2], 6, ["(2)+4(1)"]),
    row!([3], 6, ["6(1)"]),
    row!(
        [1, 2],
        6,
        ["(2,0)+5(0,1)", "(1,0)+(1,1)+4(0,1)", "2(1,0)+(0,2)+3(0,1)"]
    ),
    row!([1, 3], 6, ["3(1,0)+5(0,1)"]),
    row!(
        [1, 4],
        6,
        [
            "(2,0)+2(1,0)+5(0,1)",
            "3(1,0)+(1,1)+4(0,1)",
            "4(1,0)+(0,2)+3(0,1)"
        ]
    ),
    row!(
        [1, 2, 5],
        6,
        [
            "(2,0,0)+4(0,1,0)+4(0,0,1)",
            "(1,0,0)+(1,1,0)+3(0,1,0)+4(0,0,1)",
            "(1,0,0)+(1,0,1)+4(0,1,0)+3(0,0,1)",
            "2(1,0,0)+(0,2,0)+2(0,1,0)+4(0,0,1)",
            "2(1,0,0)+(0,1,1)+3(0,1,0)+3(0,0,1)",
            "2(1,0,0)+4(0,1,0)+(0,0,2)+2(0,0,1)",
        ]
    ),
    row!([1, 3, 5], 6, ["3(1,0,0)+4(0,1,0)+3(0,0,1)"]),
    row!([2], 5, ["(3)+2(1)", "2(2)+(1)"]),
    row!(
        [1, 2],
        5,
        [
            "(2,0)+(0,2)+2(0,1)",
            "(1,0)+(1,1)+(0,2)+(0,1)",
            "2(1,1)+2(0,1)",
            "2(1,0)+2(0,2)",
            "(1,0)+(1,2)+2(0,1)",
            "(2,1)+3(0,1)",
        ]
    ),
    row!([2, 3], 5, ["(1,0)+(2,0)+3(0,1)", "2(1,0)+(1,1)+2(0,1)"]),
    row!(
        [1, 3],
        5,
        [
            "(3,0)+4(0,1)",
            "(1,0)+(2,1)+3(0,1)",
            "(1,1)+(2,0)+3(0,1)",
            "(1,0)+2(1,1)+2(0,1)",
            "(1,0)+(2,0)+(0,2)+2(0,1)",
            "3(1,0)+2(0,2)",
            "3(1,0)+(0,1)+(0,3)",
            "2(1,0)+(1,2)+2(0,1)",
        ]
    ),
    row!(
        [1, 2, 4],
        5,
        [
            "2(1,0,0)+(0,3,0)+3(0,0,1)",
            "2(1,0,0)+3(0,1,0)+(0,0,3)",
            "(2,1,0)+2(0,1,0)+3(0,0,1)",
            "(2,0,1)+3(0,1,0)+2(0,0,1)",
            "(1,2,0)+(1,0,0)+(0,1,0)+3(0,0,1)",
            "2(1,0,0)+(0,2,1)+(0,1,0)+2(0,0,1)",
            "2(1,0,0)+(0,1,2)+2(0,1,0)+(0,0,1)",
            "(1,0,0)+(1,0,2)+3(0,1,0)+(0,0,1)",
            "(1,1,1)+(1,0,0)+2(0,1,0)+2(0,0,1)",
            "(2,0,0)+(0,2,0)+(0,1,0)+3(0,0,1)",
            "(2,0,0)+(0,0,2)+3(0,1,0)+(0,0,1)",
            "2(1,0,0)+(0,2,0)+(0,1,0)+(0,0,2)+(0,0,1)",
            "2(1,1,0)+(0,1,0)+3(0,0,1)",
            "(1,1,0)+(1,0,1)+2(0,1,0)+2(0,0,1)",
            "(1,1,0)+(1,0,0)+(0,1,1)+(0,1,0)+2(0,0,1)",
            "2(1,0,0)+2(0,1,1)+(0,1,0)+(0,0,1)",
            "(1,0,0)+(1,0,1)+(0,1,1)+2(0,1,0)+(0,0,1)",
            "2(1,0,1)+3(0,1,0)+(0,0,1)",
            "(2,0,0)+(0,1,1)+2(0,1,0)+2(0,0,1)",
            "(1,1,0)+(0,2,0)+(1,0,0)+3(0,0,1)",
            "(1,0,1)+(0,2,0)+(1,0,0)+(0,1,0)+2(0,0,1)",
            "2(1,0,0)+(0,2,0)+(0,1,1)+2(0,0,1)",
            "(1,1,0)+(1,0,0)+2(0,1,0)+(0,0,2)+(0,0,1)",
            "(1,0,1)+(1,0,0)+3(0,1,0)+(0,0,2)",
            "2(1,0,0)+(0,1,1)+2(0,1,0)+(0,0,2)",
        ]
    ),
    row!(
        [1, 2, 3],
        5,
        [
            "(2,0,0)+2(0,1,0)+3(0,0,1)",
            "(0,2,0)+2(1,0,0)+3(0,0,1)",
            "(0,0,2)+2(1,0,0)+2(0,1,0)+(0,0,1)",
            "(1,1,0)+(1,0,0)+(0,1,0)+3(0,0,1)",
            "(1,0,1)+(1,0,0)+2(0,1,0)+2(0,0,1)",
            "(0,1,1)+2(1,0,0)+(0,1,0)+2(0,0,1)",
        ]
    ),
    row!(
        [1, 2, 3, 4],
        5,
        [
            "(2,0,0,0)+2(0,1,0,0)+2(0,0,1,0)+2(0,0,0,1)",
            "2(1,0,0,0)+(0,2,0,0)+2(0,0,1,0)+2(0,0,0,1)",
            "(1,1,0,0)+(1,0,0,0)+(0,1,0,0)+2(0,0,1,0)+2(0,0,0,1)",
            "(1,0,0,1)+(1,0,0,0)+2(0,1,0,0)+2(0,0,1,0)+(0,0,0,1)",
            "(1,0,1,0)+(1,0,0,0)+2(0,1,0,0)+(0,0,1,0)+2(0,0,0,1)",
            "(0,1,1,0)+2(1,0,0,0)+(0,1,0,0)+(0,0,1,0)+2(0,0,0,1)",
        ]
    ),
    row!([2], 4, ["(4)"]),
    row!(
        [1, 2],
        4,
        ["(1,0)+(1,3)", "(1,1)+(1,2)", "(2,1)+(0,2)", "(2,2)+(0,1)"]
    ),
    row!(
        [1, 2, 3],
        4,
        [
            "(2,0,0)+(0,2,0)+(0,0,2)",
            "(1,1,0)+(1,0,1)+(0,1,1)",
            "(1,2,0)+(1,0,0)+(0,0,2)",
            "(1,2,0)+(1,0,1)+(0,0,1)",
            "(2,1,0)+(0,1,0)+(0,0,2)",
            "(2,1,0)+(0,1,1)+(0,0,1)",
            "(2,0,1)+(0,2,0)+(0,0,1)",
            "(2,0,1)+(0,1,1)+(0,1,0)",
            "2(1,1,0)+(0,0,2)",
            "2(1,0,1)+(0,2,0)",
            "(2,2,0)+2(0,0,1)",
            "(2,0,2)+2(0,1,0)",
        ]
    ),
];

/// Parses `2(1,0)+(0,2)` into a splitting.
pub fn parse_splitting(text: &str) -> Result<Splitting> {
    let bad = || Error::InvalidDegrees(format!("cannot read splitting {text:?}"));
    let mut out = Vec::new();
    for term in text.split('+') {
        let term = term.trim();
        let open = term.find('(').ok_or_else(bad)?;
        let close = term.strip_suffix(')').ok_or_else(bad)?;
        let mult: usize = if open == 0 {
            1
        } else {
            term[..open].trim().parse().map_err(|_| bad())?
        };
        let v = close[open + 1..]
            .split(',')
            .map(|x| x.trim().parse::<u32>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        for _ in 0..mult {
            out.push(v.clone());
        }
    }
    Ok(normalize(out))
}

/// Formats a splitting as `(1,0);(1,1);(0,2)`.
pub fn format_splitting(s: &Splitting) -> String {
    s.iter()
        .map(|v| format_vector(v))
        .collect::<Vec<_>>()
        .join(";")
}

pub fn format_vector(v: &[u32]) -> String {
    let inner: Vec<String> = v.iter().map(|x| format!("{x}")).collect();
    format!("({})", inner.join(","))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRow {
    pub entry: CensusEntry,
    /// Reference splittings, if the shape is in the reference table.
    pub reference: Option<Vec<Splitting>>,
    /// Enumerated splittings the reference row does not list.
    pub unlisted: Vec<Splitting>,
    /// Reference splittings the enumeration does not produce.
    pub unexpected: Vec<Splitting>,
}

impl CensusRow {
    pub fn matches_reference(&self) -> bool {
        self.reference.is_some() && self.unlisted.is_empty() && self.unexpected.is_empty()
    }
}

pub fn reference_splittings(shape: &FlagShape) -> Option<Result<Vec<Splitting>>> {
    REFERENCE
        .iter()
        .find(|r| r.steps == shape.steps() && r.ambient == shape.ambient())
        .map(|r| r.splittings.iter().map(|t| parse_splitting(t)).collect())
}

/// The full census for `n <= n_max`, compared against the reference rows.
pub fn census_table(n_max: usize, modulo_duality: bool) -> Result<Vec<CensusRow>> {
    let mut rows = Vec::new();
    for shape in feasible_flags(n_max) {
        let entry = enumerate_splittings(&shape, modulo_duality)?;
        let reference = reference_splittings(&shape).transpose()?;
        let (unlisted, unexpected) = match &reference {
            None => (Vec::new(), Vec::new()),
            Some(refs) => {
                let key = |s: &Splitting| {
                    if entry.self_dual {
                        canonical(s)
                    } else {
                        normalize(s.clone())
                    }
                };
                let ours: BTreeSet<Splitting> = entry.splittings.iter().map(key).collect();
                let theirs: BTreeSet<Splitting> = refs.iter().map(key).collect();
                (
                    ours.difference(&theirs).cloned().collect(),
                    theirs.difference(&ours).cloned().collect(),
                )
            }
        };
        rows.push(CensusRow {
            entry,
            reference,
            unlisted,
            unexpected,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(steps: &[usize], n: usize) -> FlagShape {
        FlagShape::new(steps, n).unwrap()
    }

    #[test]
    fn feasible_small() {
        let f = feasible_flags(4);
        assert_eq!(
            f,
            vec![shape(&[2], 4), shape(&[1, 2], 4), shape(&[1, 2, 3], 4)]
        );
        assert_eq!(feasible_flags(7).len(), 21);
        assert!(feasibility_excess(&shape(&[2], 8)) > 4);
    }

    #[test]
    fn splitting_counts() {
        let e = enumerate_splittings(&shape(&[2], 5), true).unwrap();
        assert_eq!(
            e.splittings,
            vec![
                vec![vec![2], vec![2], vec![1]],
                vec![vec![3], vec![1], vec![1]]
            ]
        );
        assert_eq!(
            enumerate_splittings(&shape(&[1, 2], 6), true)
                .unwrap()
                .splittings
                .len(),
            3
        );
        assert_eq!(
            enumerate_splittings(&shape(&[1, 4], 6), true)
                .unwrap()
                .splittings
                .len(),
            3
        );
        assert!(matches!(
            enumerate_splittings(&shape(&[1], 3), true),
            Err(Error::NotFeasible(_))
        ));
    }

    #[test]
    fn reference_rows_parse_and_sum() {
        for r in REFERENCE {
            let s = FlagShape::new(r.steps, r.ambient).unwrap();
            let k: Vec<u32> = s.anticanonical().iter().map(|&x| x as u32).collect();
            for t in r.splittings {
                let sp = parse_splitting(t).unwrap();
                assert_eq!(sp.len(), s.dimension() - 3, "{s} {t}");
                let sum: Vec<u32> = (0..k.len())
                    .map(|i| sp.iter().map(|v| v[i]).sum())
                    .collect();
                assert_eq!(sum, k, "{s} {t}");
            }
        }
    }

    #[test]
    fn parse_and_format() {
        let s = parse_splitting("2(1,0)+(0,2)").unwrap();
        assert_eq!(format_splitting(&s), "(1,0);(1,0);(0,2)");
    }
}
