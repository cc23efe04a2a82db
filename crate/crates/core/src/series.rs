//! Hypergeometric series of a flag manifold and of its complete
//! intersections, and the equations of the mirror family.
//!
//! A coefficient is indexed by roof degrees `m_1..m_l` and box degrees
//! `m_b`. It is computed three ways: as a product of binomials over the dual
//! edges, as `prod 1/d_e!` over the edges, and by literally expanding the
//! integrand and reading off a constant term.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ladder::{IntVector, LadderGraph, Region};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SeriesIndex {
    pub roof: Vec<u32>,
    pub boxes: Vec<u32>,
}

impl SeriesIndex {
    pub fn new(roof: Vec<u32>, boxes: Vec<u32>) -> Self {
        SeriesIndex { roof, boxes }
    }

    fn degree(&self, r: Region) -> u32 {
        match r {
            Region::Outside => 0,
            Region::Roof(i) => self.roof[i - 1],
            Region::Box(b) => self.boxes[b],
        }
    }

    fn max_entry(&self) -> u32 {
        self.roof
            .iter()
            .chain(&self.boxes)
            .copied()
            .max()
            .unwrap_or(0)
    }
}

/// `a` is the coefficient; `b = a * prod (m_i!)^{|R_i|}` is always an integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coefficient {
    pub a: BigRational,
    pub b: BigInt,
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

fn roof_denominator(graph: &LadderGraph, idx: &SeriesIndex) -> BigInt {
    graph
        .roofs()
        .iter()
        .zip(&idx.roof)
        .map(|(r, &m)| factorial(u64::from(m)).pow(r.len() as u32))
        .product()
}

fn check_index(graph: &LadderGraph, idx: &SeriesIndex) -> Result<()> {
    if idx.roof.len() != graph.shape().len() || idx.boxes.len() != graph.boxes().len() {
        return Err(Error::InvalidDegrees(format!(
            "index needs {} roof and {} box degrees, got {} and {}",
            graph.shape().len(),
            graph.boxes().len(),
            idx.roof.len(),
            idx.boxes.len()
        )));
    }
    Ok(())
}

fn from_b(graph: &LadderGraph, idx: &SeriesIndex, b: BigInt) -> Coefficient {
    let a = BigRational::new(b.clone(), roof_denominator(graph, idx));
    Coefficient { a, b }
}

fn from_a(graph: &LadderGraph, idx: &SeriesIndex, a: BigRational) -> Result<Coefficient> {
    let scaled = &a * BigRational::from_integer(roof_denominator(graph, idx));
    if !scaled.is_integer() {
        return Err(Error::Consistency(format!(
            "coefficient {a} does not clear to an integer"
        )));
    }
    Ok(Coefficient {
        a,
        b: scaled.to_integer(),
    })
}

/// `B = prod over dual edges of binomial(m_head, m_tail)`.
pub fn coefficient_closed_form(graph: &LadderGraph, idx: &SeriesIndex) -> Result<Coefficient> {
    check_index(graph, idx)?;
    let b = graph
        .dual_edges()
        .iter()
        .map(|w| binomial(i64::from(idx.degree(w.head)), i64::from(idx.degree(w.tail))))
        .product();
    Ok(from_b(graph, idx, b))
}

/// `d_e = m_head - m_tail` along the dual edge crossing `e`.
pub fn edge_degrees(graph: &LadderGraph, idx: &SeriesIndex) -> Vec<i64> {
    graph
        .dual_edges()
        .iter()
        .map(|w| i64::from(idx.degree(w.head)) - i64::from(idx.degree(w.tail)))
        .collect()
}

/// `A = prod 1/d_e!`, or 0 if some `d_e` is negative.
pub fn coefficient_degree_product(graph: &LadderGraph, idx: &SeriesIndex) -> Result<Coefficient> {
    check_index(graph, idx)?;
    let d = edge_degrees(graph, idx);
    if d.iter().any(|&x| x < 0) {
        return Ok(Coefficient {
            a: BigRational::zero(),
            b: BigInt::zero(),
        });
    }
    let denom: BigInt = d.iter().map(|&x| factorial(x as u64)).product();
    from_a(graph, idx, BigRational::new(BigInt::one(), denom))
}

/// Sparse Laurent polynomial keyed by exponent vectors.
type Poly = BTreeMap<Vec<i32>, BigRational>;

fn multiply(a: &Poly, b: &Poly, keep: impl Fn(&[i32]) -> bool) -> Poly {
    let mut out = Poly::new();
    for (ka, va) in a {
        for (kb, vb) in b {
            let k: Vec<i32> = ka.iter().zip(kb).map(|(x, y)| x + y).collect();
            if !keep(&k) {
                continue;
            }
            let slot = out.entry(k).or_insert_with(BigRational::zero);
            *slot += va * vb;
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// Variable layout `[q_1..q_l | qt_b | y_e]` shared by the two oracles.
struct Layout {
    l: usize,
    nb: usize,
    ne: usize,
}

impl Layout {
    fn new(graph: &LadderGraph) -> Self {
        Layout {
            l: graph.shape().len(),
            nb: graph.boxes().len(),
            ne: graph.edges().len(),
        }
    }

    fn width(&self) -> usize {
        self.l + self.nb + self.ne
    }

    fn y(&self, e: usize) -> usize {
        self.l + self.nb + e
    }

    fn zero(&self) -> Vec<i32> {
        vec![0; self.width()]
    }
}

/// Product of the geometric expansions of `1/F_i` and `1/G_b` (without the
/// prefactors, which cancel against the residue), keeping `q` degrees up to
/// `roof_cap` and box degrees up to `box_cap`.
fn geometric_part(graph: &LadderGraph, lay: &Layout, roof_cap: &[u32], box_cap: &[u32]) -> Poly {
    let mut poly = Poly::from([(lay.zero(), BigRational::one())]);
    for (i, roof) in graph.roofs().iter().enumerate() {
        let mut factor = Poly::new();
        for k in 0..=roof_cap[i] as i32 {
            let mut key = lay.zero();
            key[i] = k;
            for &e in roof {
                key[lay.y(e)] = -k;
            }
            factor.insert(key, BigRational::one());
        }
        poly = multiply(&poly, &factor, |_| true);
    }
    for (b, bx) in graph.boxes().iter().enumerate() {
        let mut factor = Poly::new();
        for k in 0..=box_cap[b] as i32 {
            let mut key = lay.zero();
            key[lay.l + b] = k;
            for &e in &bx.corner {
                key[lay.y(e)] -= k;
            }
            for &e in &bx.opposite {
                key[lay.y(e)] += k;
            }
            factor.insert(key, BigRational::one());
        }
        poly = multiply(&poly, &factor, |_| true);
    }
    poly
}

/// Coefficient read off as the constant term in the `y` variables of the
/// expanded integrand, with every series truncated at order `truncation`.
pub fn constant_term_oracle(
    graph: &LadderGraph,
    idx: &SeriesIndex,
    truncation: u32,
) -> Result<Coefficient> {
    check_index(graph, idx)?;
    let required = idx.max_entry();
    if truncation < required {
        return Err(Error::TruncationTooSmall {
            given: truncation,
            required,
        });
    }
    let lay = Layout::new(graph);
    let mut poly = geometric_part(graph, &lay, &idx.roof, &idx.boxes);
    let mut inv_fact = BigRational::one();
    let mut exp_coeffs = Vec::with_capacity(truncation as usize + 1);
    for d in 0..=truncation {
        if d > 0 {
            inv_fact /= BigRational::from_integer(BigInt::from(d));
        }
        exp_coeffs.push(inv_fact.clone());
    }
    for e in 0..lay.ne {
        let y = lay.y(e);
        let factor: Poly = exp_coeffs
            .iter()
            .enumerate()
            .map(|(d, c)| {
                let mut key = lay.zero();
                key[y] = d as i32;
                (key, c.clone())
            })
            .collect();
        // no later factor involves y_e
        poly = multiply(&poly, &factor, |k| k[y] == 0);
    }
    let mut target = lay.zero();
    for (i, &m) in idx.roof.iter().enumerate() {
        target[i] = m as i32;
    }
    for (b, &m) in idx.boxes.iter().enumerate() {
        target[lay.l + b] = m as i32;
    }
    let a = poly.get(&target).cloned().unwrap_or_else(BigRational::zero);
    from_a(graph, idx, a)
}

/// Sums `coefficient_closed_form` over all box degrees for every roof degree
/// vector of total degree at most `max_degree`.
///
/// Every box is the tail of some dual edge, and `m_tail <= m_head` wherever
/// the coefficient is nonzero, so box degrees never exceed the roof degrees
/// and the inner sums are finite.
pub fn phi_f(graph: &LadderGraph, max_degree: u32) -> Result<BTreeMap<Vec<u32>, BigRational>> {
    let order = box_order(graph)?;
    let mut out = BTreeMap::new();
    for roof in roof_degrees(graph.shape().len(), max_degree) {
        out.insert(roof.clone(), phi_f_coefficient(graph, &order, &roof)?);
    }
    Ok(out)
}

/// Coefficient of `q^m` in `Phi_F`.
pub fn phi_f_at(graph: &LadderGraph, roof: &[u32]) -> Result<BigRational> {
    phi_f_coefficient(graph, &box_order(graph)?, roof)
}

/// All vectors of `l` nonnegative integers with sum at most `max`, ordered by
/// total degree and then lexicographically.
pub fn roof_degrees(l: usize, max: u32) -> Vec<Vec<u32>> {
    fn rec(l: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == l {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for v in (0..=left).rev() {
            cur.push(v);
            rec(l, left - v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    for total in 0..=max {
        let mut level = Vec::new();
        rec(l, total, &mut Vec::new(), &mut level);
        level.sort();
        out.extend(level);
    }
    out
}

/// Boxes ordered so that every box comes after the boxes above or right of
/// it, together with the heads bounding each box.
fn box_order(graph: &LadderGraph) -> Result<Vec<(usize, Vec<Region>)>> {
    let nb = graph.boxes().len();
    let mut heads: Vec<Vec<Region>> = vec![Vec::new(); nb];
    for w in graph.dual_edges() {
        if let Region::Box(b) = w.tail {
            heads[b].push(w.head);
        }
    }
    if let Some(b) = heads.iter().position(Vec::is_empty) {
        return Err(Error::Consistency(format!(
            "box {b} is the tail of no dual edge, its degree is unbounded"
        )));
    }
    let mut order = Vec::with_capacity(nb);
    let mut placed = vec![false; nb];
    while order.len() < nb {
        let before = order.len();
        for b in 0..nb {
            if !placed[b]
                && heads[b]
                    .iter()
                    .all(|h| !matches!(h, Region::Box(c) if !placed[*c]))
            {
                placed[b] = true;
                order.push((b, heads[b].clone()));
            }
        }
        if order.len() == before {
            return Err(Error::Consistency(
                "dual graph has a cycle among boxes".into(),
            ));
        }
    }
    Ok(order)
}

fn phi_f_coefficient(
    graph: &LadderGraph,
    order: &[(usize, Vec<Region>)],
    roof: &[u32],
) -> Result<BigRational> {
    let mut idx = SeriesIndex::new(roof.to_vec(), vec![0; graph.boxes().len()]);
    let mut total = BigRational::zero();
    sum_boxes(graph, order, 0, &mut idx, &mut total)?;
    Ok(total)
}

fn sum_boxes(
    graph: &LadderGraph,
    order: &[(usize, Vec<Region>)],
    k: usize,
    idx: &mut SeriesIndex,
    total: &mut BigRational,
) -> Result<()> {
    if k == order.len() {
        *total += coefficient_closed_form(graph, idx)?.a;
        return Ok(());
    }
    let (b, heads) = &order[k];
    let cap = heads.iter().map(|&h| idx.degree(h)).min().unwrap();
    for v in 0..=cap {
        idx.boxes[*b] = v;
        sum_boxes(graph, order, k + 1, idx, total)?;
    }
    idx.boxes[*b] = 0;
    Ok(())
}

fn check_degrees(graph: &LadderGraph, degrees: &[Vec<u32>]) -> Result<()> {
    let l = graph.shape().len();
    for (j, d) in degrees.iter().enumerate() {
        if d.len() != l {
            return Err(Error::InvalidDegrees(format!(
                "degree vector {} has {} entries, expected {l}",
                j + 1,
                d.len()
            )));
        }
        if d.iter().all(|&x| x == 0) {
            return Err(Error::InvalidDegrees(format!(
                "degree vector {} is zero",
                j + 1
            )));
        }
    }
    Ok(())
}

/// Coefficients of `Phi_X`: `prod_j (sum_i d_j^(i) m_i)! * a_m`.
pub fn phi_x(
    graph: &LadderGraph,
    degrees: &[Vec<u32>],
    max_degree: u32,
) -> Result<BTreeMap<Vec<u32>, BigRational>> {
    check_degrees(graph, degrees)?;
    let base = phi_f(graph, max_degree)?;
    Ok(base
        .into_iter()
        .map(|(m, a)| {
            let f = factorial_weight(degrees, &m);
            (m, a * BigRational::from_integer(f))
        })
        .collect())
}

fn factorial_weight(degrees: &[Vec<u32>], m: &[u32]) -> BigInt {
    degrees
        .iter()
        .map(|d| {
            let s: u64 = d
                .iter()
                .zip(m)
                .map(|(&x, &y)| u64::from(x) * u64::from(y))
                .sum();
            factorial(s)
        })
        .product()
}

/// One equation `1 - sum c_f x^delta(f)` of the mirror family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MirrorEquation {
    /// Roof edges of this part of the partition, per roof.
    pub segment: Vec<Vec<usize>>,
    /// Edges `f` contributing `-c_f x^delta(f)`, in roof order.
    pub terms: Vec<usize>,
    /// `delta(f)` for each term.
    pub exponents: Vec<IntVector>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MirrorSystem {
    pub degrees: Vec<Vec<u32>>,
    pub equations: Vec<MirrorEquation>,
    /// `[e, f, g, h]`: `c_e c_f = c_g c_h`.
    pub box_constraints: Vec<[usize; 4]>,
}

/// Splits every roof into parts of sizes `d_j^(i)`.
///
/// Without `assignment`, the parts are consecutive along each roof. An
/// `assignment[i][k] = j` puts the `k`-th edge of roof `i+1` into part `j`
/// (0-based).
pub fn mirror_system(
    graph: &LadderGraph,
    degrees: &[Vec<u32>],
    assignment: Option<&[Vec<usize>]>,
) -> Result<MirrorSystem> {
    check_degrees(graph, degrees)?;
    let r = degrees.len();
    let mut segments: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new(); graph.shape().len()]; r];
    for (i, roof) in graph.roofs().iter().enumerate() {
        let expected: usize = degrees.iter().map(|d| d[i] as usize).sum();
        if expected != roof.len() {
            return Err(Error::PartitionSizeMismatch {
                roof: i + 1,
                expected,
                actual: roof.len(),
            });
        }
        match assignment {
            None => {
                let mut edges = roof.iter();
                for (j, d) in degrees.iter().enumerate() {
                    segments[j][i].extend(edges.by_ref().take(d[i] as usize));
                }
            }
            Some(a) => {
                let row = a
                    .get(i)
                    .filter(|row| row.len() == roof.len())
                    .ok_or_else(|| {
                        Error::InvalidDegrees(format!(
                            "assignment for roof {} has the wrong length",
                            i + 1
                        ))
                    })?;
                for (&e, &j) in roof.iter().zip(row) {
                    if j >= r {
                        return Err(Error::InvalidDegrees(format!("part {j} does not exist")));
                    }
                    segments[j][i].push(e);
                }
                for (j, d) in degrees.iter().enumerate() {
                    if segments[j][i].len() != d[i] as usize {
                        return Err(Error::PartitionSizeMismatch {
                            roof: i + 1,
                            expected: d[i] as usize,
                            actual: segments[j][i].len(),
                        });
                    }
                }
            }
        }
    }
    let mut equations = Vec::with_capacity(r);
    for segment in segments {
        let mut terms = Vec::new();
        for &e in segment.iter().flatten() {
            terms.extend(graph.upper_set(e)?);
        }
        let exponents = terms.iter().map(|&f| graph.delta(f)).collect();
        equations.push(MirrorEquation {
            segment,
            terms,
            exponents,
        });
    }
    let used: BTreeSet<usize> = equations
        .iter()
        .flat_map(|q| q.terms.iter().copied())
        .collect();
    let count: usize = equations.iter().map(|q| q.terms.len()).sum();
    if used.len() != graph.edges().len() || count != used.len() {
        return Err(Error::Consistency(
            "mirror terms do not partition the edges".into(),
        ));
    }
    let box_constraints = graph
        .boxes()
        .iter()
        .map(|b| [b.corner[0], b.corner[1], b.opposite[0], b.opposite[1]])
        .collect();
    Ok(MirrorSystem {
        degrees: degrees.to_vec(),
        equations,
        box_constraints,
    })
}

impl MirrorSystem {
    /// Human-readable form, `x<k>` standing for the dot with index `k`.
    pub fn pretty(&self) -> String {
        let mut s = String::new();
        for (j, q) in self.equations.iter().enumerate() {
            let _ = write!(s, "P{} = 1", j + 1);
            for (&f, exp) in q.terms.iter().zip(&q.exponents) {
                let _ = write!(s, " - c{f}");
                for (d, &x) in exp.iter().enumerate() {
                    match x {
                        0 => {}
                        1 => {
                            let _ = write!(s, "*x{d}");
                        }
                        _ => {
                            let _ = write!(s, "*x{d}^{x}");
                        }
                    }
                }
            }
            s.push('\n');
        }
        for [e, f, g, h] in &self.box_constraints {
            let _ = writeln!(s, "c{e}*c{f} = c{g}*c{h}");
        }
        s
    }
}

/// `Phi_X` at roof degree `m` read off as a constant term: the geometric
/// expansions of `1/F_i`, `1/G_b` and `1/E_j`, with `E_j` the `j`-th mirror
/// polynomial in the `y` variables, summed over all box degrees.
pub fn period_oracle(
    graph: &LadderGraph,
    system: &MirrorSystem,
    roof: &[u32],
    truncation: u32,
) -> Result<BigRational> {
    if roof.len() != graph.shape().len() {
        return Err(Error::InvalidDegrees(format!(
            "expected {} roof degrees",
            graph.shape().len()
        )));
    }
    let required: u32 = graph
        .roofs()
        .iter()
        .zip(roof)
        .map(|(r, &m)| r.len() as u32 * m)
        .sum();
    if truncation < required {
        return Err(Error::TruncationTooSmall {
            given: truncation,
            required,
        });
    }
    let lay = Layout::new(graph);
    let box_cap = vec![roof.iter().sum::<u32>(); lay.nb];
    let mut poly = geometric_part(graph, &lay, roof, &box_cap);
    // a term can only survive if no y exponent is positive
    poly.retain(|k, _| (0..lay.ne).all(|e| k[lay.y(e)] <= 0));
    for q in &system.equations {
        let vars: Vec<usize> = q.terms.iter().map(|&f| lay.y(f)).collect();
        let mut power = Poly::from([(lay.zero(), BigRational::one())]);
        let mut series = power.clone();
        let linear: Poly = vars
            .iter()
            .map(|&v| {
                let mut key = lay.zero();
                key[v] = 1;
                (key, BigRational::one())
            })
            .collect();
        for _ in 0..truncation {
            power = multiply(&power, &linear, |_| true);
            for (k, v) in &power {
                *series.entry(k.clone()).or_insert_with(BigRational::zero) += v;
            }
        }
        // no later factor involves these variables
        poly = multiply(&poly, &series, |k| vars.iter().all(|&v| k[v] == 0));
    }
    let total = poly
        .iter()
        .filter(|(k, _)| k[..lay.l].iter().zip(roof).all(|(&a, &b)| a == b as i32))
        .map(|(_, v)| v.clone())
        .fold(BigRational::zero(), |a, b| a + b);
    if total.is_negative() {
        return Err(Error::Consistency("negative period coefficient".into()));
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::FlagShape;

    fn graph(steps: &[usize], n: usize) -> LadderGraph {
        LadderGraph::build(&FlagShape::new(steps, n).unwrap()).unwrap()
    }

    fn q(p: i64, d: i64) -> BigRational {
        BigRational::new(p.into(), d.into())
    }

    #[test]
    fn f25_coefficients() {
        let g = graph(&[2], 5);
        let idx = SeriesIndex::new(vec![2], vec![1, 2]);
        assert_eq!(coefficient_closed_form(&g, &idx).unwrap().a, q(1, 8));
        assert_eq!(coefficient_degree_product(&g, &idx).unwrap().a, q(1, 8));
        assert_eq!(
            edge_degrees(&g, &idx).iter().filter(|&&d| d == 2).count(),
            3
        );
        let bad = SeriesIndex::new(vec![1], vec![1, 0]);
        assert!(coefficient_degree_product(&g, &bad).unwrap().a.is_zero());
        assert!(coefficient_closed_form(&g, &bad).unwrap().a.is_zero());
    }

    #[test]
    fn complete_flag_coefficient() {
        let g = graph(&[1, 2, 3], 4);
        let idx = SeriesIndex::new(vec![1, 1, 1], vec![1, 1, 1]);
        assert_eq!(coefficient_closed_form(&g, &idx).unwrap().a, q(1, 1));
    }

    #[test]
    fn oracle_agrees() {
        let g = graph(&[2], 4);
        let idx = SeriesIndex::new(vec![1], vec![1]);
        assert_eq!(constant_term_oracle(&g, &idx, 2).unwrap().a, q(1, 1));
        let g = graph(&[1], 2);
        let idx = SeriesIndex::new(vec![3], vec![]);
        assert_eq!(constant_term_oracle(&g, &idx, 3).unwrap().a, q(1, 36));
        assert_eq!(
            constant_term_oracle(&g, &idx, 2),
            Err(Error::TruncationTooSmall {
                given: 2,
                required: 3
            })
        );
    }

    #[test]
    fn phi_f_values() {
        let s = phi_f(&graph(&[2], 5), 2).unwrap();
        assert_eq!(s[&vec![1]], q(3, 1));
        assert_eq!(s[&vec![2]], q(19, 32));
        let s = phi_f(&graph(&[1, 2], 3), 2).unwrap();
        assert_eq!(s[&vec![1, 1]], q(2, 1));
    }

    #[test]
    fn phi_x_values() {
        let s = phi_x(&graph(&[2], 4), &[vec![4]], 1).unwrap();
        assert_eq!(s[&vec![1]], q(48, 1));
        let s = phi_x(&graph(&[2], 5), &[vec![3], vec![1], vec![1]], 1).unwrap();
        assert_eq!(s[&vec![1]], q(18, 1));
        assert!(matches!(
            phi_x(&graph(&[2], 4), &[vec![0]], 1),
            Err(Error::InvalidDegrees(_))
        ));
    }

    #[test]
    fn mirror_term_counts() {
        let g = graph(&[2], 5);
        let m = mirror_system(&g, &[vec![3], vec![1], vec![1]], None).unwrap();
        let counts: Vec<usize> = m.equations.iter().map(|e| e.terms.len()).collect();
        assert_eq!(counts, [6, 2, 1]);
        assert_eq!(m.box_constraints.len(), 2);
        let g = graph(&[2], 4);
        let m = mirror_system(&g, &[vec![4]], None).unwrap();
        assert_eq!(m.equations[0].terms.len() + 1, 7);
        assert!(matches!(
            mirror_system(&g, &[vec![3]], None),
            Err(Error::PartitionSizeMismatch {
                roof: 1,
                expected: 3,
                actual: 4
            })
        ));
    }

    #[test]
    fn period_matches_phi_x() {
        let g = graph(&[2], 4);
        let m = mirror_system(&g, &[vec![4]], None).unwrap();
        assert_eq!(period_oracle(&g, &m, &[1], 4).unwrap(), q(48, 1));
        assert_eq!(period_oracle(&g, &m, &[0], 4).unwrap(), q(1, 1));
        let g = graph(&[1], 2);
        let m = mirror_system(&g, &[vec![2]], None).unwrap();
        assert_eq!(period_oracle(&g, &m, &[1], 2).unwrap(), q(2, 1));
    }
}
