//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Criteria listed in `EXPECTED_RED` are known to fail for reasons recorded
//! alongside them; the run fails if any other criterion fails, or if a
//! known-red criterion starts passing.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use flagtoric_core::census;
use flagtoric_core::ladder::{EdgeClass, Region};
use flagtoric_core::paths::{self, PositivePath};
use flagtoric_core::polytope;
use flagtoric_core::sections;
use flagtoric_core::series::{self, binomial, factorial, SeriesIndex};
use flagtoric_core::{FlagShape, LadderGraph};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

/// Criterion number and the reason it cannot pass.
const EXPECTED_RED: &[(u32, &str)] = &[
    (6, "positive paths of weight below n exist, e.g. F(1,3)"),
    (
        9,
        "reference rows F(1,2,5), F(1,3,5), F(1,2,4), F(1,2,3,4) omit valid splittings",
    ),
];

type Check = (u32, &'static str, fn() -> Verdict);

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: impl Into<String>) -> Verdict {
    Verdict {
        pass,
        detail: detail.into(),
    }
}

fn shape(steps: &[usize], n: usize) -> FlagShape {
    FlagShape::new(steps, n).unwrap()
}

fn graph(steps: &[usize], n: usize) -> LadderGraph {
    LadderGraph::build(&shape(steps, n)).unwrap()
}

fn shapes_up_to(n_max: usize) -> Vec<FlagShape> {
    let mut out = Vec::new();
    for n in 2..=n_max {
        for mask in 1u32..(1 << (n - 1)) {
            let steps: Vec<usize> = (1..n).filter(|s| mask >> (s - 1) & 1 == 1).collect();
            out.push(shape(&steps, n));
        }
    }
    out
}

fn rat(n: BigInt, d: BigInt) -> BigRational {
    BigRational::new(n, d)
}

fn c(n: u32, k: u32) -> BigInt {
    binomial(i64::from(n), i64::from(k))
}

fn fact_pow(m: u32, e: usize) -> BigInt {
    num_traits::pow(factorial(u64::from(m)), e)
}

fn grid(len: usize, bound: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
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
    out
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for at in 0..=p.len() {
            let mut q = p.clone();
            q.insert(at, k - 1);
            out.push(q);
        }
    }
    out
}

type Formula = fn(&[u32], &[u32]) -> BigRational;

fn worked_f25(m: &[u32], b: &[u32]) -> BigRational {
    let (m, r, s) = (m[0], b[0], b[1]);
    rat(c(s, r) * c(m, r) * c(m, s) * c(m, s), fact_pow(m, 5))
}

fn worked_f36(m: &[u32], b: &[u32]) -> BigRational {
    let (m, r, s, u, v) = (m[0], b[0], b[1], b[2], b[3]);
    let num = c(r, u) * c(v, u) * c(s, r) * c(s, v) * c(m, r) * c(m, s) * c(m, s) * c(m, v);
    rat(num, fact_pow(m, 6))
}

fn worked_f1234(m: &[u32], b: &[u32]) -> BigRational {
    let (r, s, t) = (b[0], b[1], b[2]);
    let num = c(r, t) * c(s, t) * c(m[0], r) * c(m[1], r) * c(m[1], s) * c(m[2], s);
    rat(
        num,
        fact_pow(m[0], 2) * fact_pow(m[1], 2) * fact_pow(m[2], 2),
    )
}

/// Criterion 1: Closed forms against the worked examples, all roof degrees <= 3.
/// The box labels of the examples come from figures, so the check looks
/// for one relabelling of our boxes that matches every coefficient.
fn criterion_1() -> Verdict {
    let cases: [(&[usize], usize, Formula); 3] = [
        (&[2], 5, worked_f25),
        (&[3], 6, worked_f36),
        (&[1, 2, 3], 4, worked_f1234),
    ];
    let mut checked = 0;
    for (steps, n, formula) in cases {
        let g = graph(steps, n);
        let nb = g.boxes().len();
        let mut indices = Vec::new();
        for roof in grid(steps.len(), 3) {
            for boxes in grid(nb, 3) {
                let ours = series::coefficient_closed_form(
                    &g,
                    &SeriesIndex::new(roof.clone(), boxes.clone()),
                )
                .unwrap()
                .a;
                indices.push((roof.clone(), boxes, ours));
            }
        }
        let matched = permutations(nb).into_iter().find(|perm| {
            indices.iter().all(|(roof, boxes, ours)| {
                let mut relabelled = vec![0; nb];
                for (k, &p) in perm.iter().enumerate() {
                    relabelled[p] = boxes[k];
                }
                formula(roof, &relabelled) == *ours
            })
        });
        if matched.is_none() {
            return verdict(
                false,
                format!("{} disagrees with its worked example", g.shape()),
            );
        }
        checked += indices.len();
    }
    verdict(
        true,
        format!("{checked} indices on F(2,5), F(3,6), F(1,2,3,4), box labels up to relabelling"),
    )
}

/// Boxes ordered so that every box comes after the boxes above it.
fn box_order(g: &LadderGraph) -> Vec<(usize, Vec<Region>)> {
    let heads: Vec<Vec<Region>> = (0..g.boxes().len())
        .map(|b| {
            g.dual_edges()
                .iter()
                .filter(|w| w.tail == Region::Box(b))
                .map(|w| w.head)
                .collect()
        })
        .collect();
    let mut placed = BTreeSet::new();
    let mut order = Vec::new();
    while order.len() < heads.len() {
        for (b, hs) in heads.iter().enumerate() {
            let ready = hs
                .iter()
                .all(|h| !matches!(h, Region::Box(x) if !placed.contains(x)));
            if !placed.contains(&b) && ready {
                placed.insert(b);
                order.push((b, hs.clone()));
            }
        }
    }
    order
}

/// Box degrees to test at a roof degree: the whole grid when it is small,
/// otherwise every index with `m_b <= m_head` plus one-step excursions
/// above that bound (the zero coefficients next to the support).
fn box_indices(g: &LadderGraph, order: &[(usize, Vec<Region>)], roof: &[u32]) -> Vec<Vec<u32>> {
    let nb = g.boxes().len();
    let total: u32 = roof.iter().sum();
    if (total as usize + 1).pow(nb as u32) <= 4096 {
        return grid(nb, total);
    }
    fn rec(
        order: &[(usize, Vec<Region>)],
        roof: &[u32],
        k: usize,
        broke: bool,
        cur: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if k == order.len() {
            out.push(cur.clone());
            return;
        }
        let (b, heads) = &order[k];
        let cap = heads
            .iter()
            .map(|h| match *h {
                Region::Outside => 0,
                Region::Roof(i) => roof[i - 1],
                Region::Box(x) => cur[x],
            })
            .min()
            .unwrap_or(0);
        let top = if broke { 0 } else { cap + 1 };
        for v in 0..=top {
            cur[*b] = v;
            rec(order, roof, k + 1, broke || v > cap, cur, out);
        }
        cur[*b] = 0;
    }
    let mut out = Vec::new();
    rec(order, roof, 0, false, &mut vec![0; nb], &mut out);
    out
}

/// Criterion 2: Closed form, factorial product and constant-term oracle agree.
fn criterion_2() -> Verdict {
    let mut count = 0usize;
    for s in shapes_up_to(6) {
        let g = LadderGraph::build(&s).unwrap();
        let order = box_order(&g);
        for roof in series::roof_degrees(s.len(), 4) {
            for boxes in box_indices(&g, &order, &roof) {
                let idx = SeriesIndex::new(roof.clone(), boxes);
                let a = series::coefficient_closed_form(&g, &idx).unwrap();
                let b = series::coefficient_degree_product(&g, &idx).unwrap();
                if a != b {
                    return verdict(false, format!("{s} at {idx:?}: {} vs {}", a.a, b.a));
                }
                count += 1;
            }
        }
    }
    let mut oracle = 0usize;
    for (steps, n) in [(&[1][..], 2), (&[2][..], 4), (&[2][..], 5)] {
        let g = graph(steps, n);
        for roof in series::roof_degrees(steps.len(), 2) {
            for boxes in grid(g.boxes().len(), 2) {
                let idx = SeriesIndex::new(roof.clone(), boxes);
                let a = series::coefficient_closed_form(&g, &idx).unwrap();
                let t = series::constant_term_oracle(&g, &idx, 2).unwrap();
                if a != t {
                    return verdict(
                        false,
                        format!("{} at {idx:?}: oracle {} vs {}", g.shape(), t.a, a.a),
                    );
                }
                oracle += 1;
            }
        }
    }
    verdict(
        true,
        format!("{count} indices on all n <= 6 shapes, {oracle} constant-term checks"),
    )
}

/// Criterion 3: `F(1,n-1,n)` against `(m1+m2)!/((m1!)^n (m2!)^n)`.
fn criterion_3() -> Verdict {
    for n in 3..=5usize {
        let g = graph(&[1, n - 1], n);
        let phi = series::phi_f(&g, 4).unwrap();
        for (m, got) in &phi {
            let want = rat(
                factorial(u64::from(m[0] + m[1])),
                fact_pow(m[0], n) * fact_pow(m[1], n),
            );
            if *got != want {
                return verdict(
                    false,
                    format!("F(1,{},{n}) at {m:?}: {got} vs {want}", n - 1),
                );
            }
        }
    }
    verdict(true, "F(1,2,3), F(1,3,4), F(1,4,5) through total degree 4")
}

/// Criterion 4: Reflexivity certificates and hull agreement.
fn criterion_4() -> Verdict {
    let mut list = shapes_up_to(5);
    list.push(shape(&[2], 6));
    list.push(shape(&[3], 6));
    let mut hulls = 0;
    for s in &list {
        let g = LadderGraph::build(s).unwrap();
        let p = match polytope::build_polytope_with_facets(&g) {
            Ok(p) => p,
            Err(e) => return verdict(false, format!("{s}: {e}")),
        };
        if let Err(e) = p.check_reflexive() {
            return verdict(false, format!("{s}: {e}"));
        }
        let meanders = paths::enumerate_meanders(s).len();
        if p.facets.len() != meanders {
            return verdict(
                false,
                format!("{s}: {} facets for {meanders} meanders", p.facets.len()),
            );
        }
        if p.dimension <= 6 {
            if let Err(e) = p.check_against_hull() {
                return verdict(false, format!("{s}: {e}"));
            }
            hulls += 1;
        }
    }
    verdict(
        true,
        format!(
            "{} shapes reflexive, {hulls} brute-force hulls agree",
            list.len()
        ),
    )
}

/// Criterion 5: Refined fan and conifold strata.
fn criterion_5() -> Verdict {
    let mut cones = 0u128;
    let mut strata = 0;
    for s in shapes_up_to(5) {
        let g = LadderGraph::build(&s).unwrap();
        let k = s.blocks();
        let roofs: u128 = k.windows(2).map(|w| (w[0] + w[1]) as u128).product();
        let expected = roofs << g.boxes().len();
        let meanders = paths::enumerate_meanders(&s);
        let fan = match polytope::refined_fan(&g, &meanders) {
            Ok(f) => f,
            Err(e) => return verdict(false, format!("{s}: {e}")),
        };
        if fan.len() as u128 != expected {
            return verdict(
                false,
                format!("{s}: {} cones, expected {expected}", fan.len()),
            );
        }
        if fan
            .iter()
            .any(|c| c.determinant.clone() * c.determinant.clone() != BigInt::one())
        {
            return verdict(false, format!("{s}: non-unimodular cone"));
        }
        match polytope::singular_strata(&g) {
            Ok(st) if st.len() == g.boxes().len() => strata += st.len(),
            Ok(st) => return verdict(false, format!("{s}: {} strata", st.len())),
            Err(e) => return verdict(false, format!("{s}: {e}")),
        }
        cones += expected;
    }
    verdict(
        true,
        format!("{cones} unimodular cones, {strata} conifold normal forms"),
    )
}

/// Criterion 6: Hilbert basis: decomposition, weight bound, minimality.
fn criterion_6() -> Verdict {
    let mut decomposed = true;
    let mut minimal = true;
    let mut light = Vec::new();
    for (steps, n) in [
        (&[1][..], 2),
        (&[1][..], 3),
        (&[2][..], 4),
        (&[1, 2][..], 3),
    ] {
        let g = graph(steps, n);
        let rep = sections::check_hilbert_basis(&g, 2 * n as i64);
        decomposed &= rep.failed_decompositions.is_empty();
        minimal &= rep.decomposable_generators.is_empty();
        if !rep.below_n.is_empty() {
            light.push(format!(
                "{} has {} (min weight {:?})",
                g.shape(),
                rep.below_n.len(),
                rep.min_positive_weight
            ));
        }
    }
    let detail = format!(
        "decompose={} minimal={} weight<n: {}",
        decomposed,
        minimal,
        if light.is_empty() {
            "none".to_string()
        } else {
            light.join("; ")
        }
    );
    verdict(decomposed && minimal && light.is_empty(), detail)
}

/// Criterion 7: Section polytopes have `C(n, n_i)` points, equal to the path images.
fn criterion_7() -> Verdict {
    let mut edges = 0;
    for s in shapes_up_to(5) {
        let g = LadderGraph::build(&s).unwrap();
        for e in g.roof_edges() {
            let EdgeClass::Roof(i) = g.edges()[e].class else {
                unreachable!()
            };
            let want = binomial(s.ambient() as i64, s.step(i) as i64);
            let pts: BTreeSet<_> = sections::section_polytope_points(&g, e)
                .unwrap()
                .into_iter()
                .collect();
            let imgs: BTreeSet<_> = sections::section_images(&g, e)
                .unwrap()
                .into_iter()
                .collect();
            if BigInt::from(pts.len()) != want || pts != imgs {
                return verdict(
                    false,
                    format!(
                        "{s} edge {e}: {} points, {} images, want {want}",
                        pts.len(),
                        imgs.len()
                    ),
                );
            }
            edges += 1;
        }
    }
    verdict(true, format!("{edges} roof edges"))
}

/// Criterion 8: `lambda_a + lambda_b = lambda_min + lambda_max` on every incomparable pair.
fn criterion_8() -> Verdict {
    let mut pairs = 0;
    for s in shapes_up_to(6) {
        let g = LadderGraph::build(&s).unwrap();
        let all = sections::all_paths(&s);
        let heights: Vec<Vec<usize>> = all.iter().map(|p| p.heights(&s)).collect();
        let funcs: Vec<Vec<i64>> = all.iter().map(|p| paths::path_functional(&g, p)).collect();
        let mut incomparable = 0;
        for a in 0..all.len() {
            for b in a + 1..all.len() {
                let (ha, hb) = (&heights[a], &heights[b]);
                let le = ha.iter().zip(hb).all(|(x, y)| x <= y);
                let ge = ha.iter().zip(hb).all(|(x, y)| x >= y);
                if le || ge {
                    continue;
                }
                incomparable += 1;
                let lo: Vec<usize> = ha.iter().zip(hb).map(|(x, y)| *x.min(y)).collect();
                let hi: Vec<usize> = ha.iter().zip(hb).map(|(x, y)| *x.max(y)).collect();
                let (Some(pl), Some(ph)) = (
                    PositivePath::from_heights(&s, &lo),
                    PositivePath::from_heights(&s, &hi),
                ) else {
                    return verdict(false, format!("{s}: meet or join of {a},{b} is no path"));
                };
                let lhs: Vec<i64> = funcs[a].iter().zip(&funcs[b]).map(|(x, y)| x + y).collect();
                let rl = paths::path_functional(&g, &pl);
                let rh = paths::path_functional(&g, &ph);
                let rhs: Vec<i64> = rl.iter().zip(&rh).map(|(x, y)| x + y).collect();
                if lhs != rhs {
                    return verdict(false, format!("{s}: identity fails on {a},{b}"));
                }
            }
        }
        let rels = sections::quadratic_relations(&g).unwrap();
        if rels.len() != incomparable {
            return verdict(
                false,
                format!("{s}: {} relations for {incomparable} pairs", rels.len()),
            );
        }
        pairs += incomparable;
    }
    verdict(
        true,
        format!("{pairs} incomparable pairs on all n <= 6 shapes"),
    )
}

fn render_census(rows: &[census::CensusRow]) -> String {
    let mut s = String::new();
    for r in rows {
        for sp in &r.entry.splittings {
            s.push_str(&format!(
                "{},{},{}\n",
                r.entry.shape,
                r.entry.dimension,
                census::format_splitting(sp)
            ));
        }
    }
    s
}

/// Criterion 9: Census against the reference table.
fn criterion_9() -> Verdict {
    let ours: BTreeSet<(Vec<usize>, usize)> = census::feasible_flags(7)
        .iter()
        .map(|s| (s.steps().to_vec(), s.ambient()))
        .collect();
    let theirs: BTreeSet<(Vec<usize>, usize)> = census::REFERENCE
        .iter()
        .map(|r| (r.steps.to_vec(), r.ambient))
        .collect();
    let rows = census::census_table(7, true).unwrap();
    let stable = render_census(&rows) == render_census(&census::census_table(7, true).unwrap());
    let mut off = Vec::new();
    for r in &rows {
        let listed = r.reference.as_ref().map_or(0, Vec::len);
        if r.entry.splittings.len() != listed {
            off.push(format!(
                "{} {} vs {listed}",
                r.entry.shape,
                r.entry.splittings.len()
            ));
        }
    }
    let detail = format!(
        "shape set {} ({} shapes), byte-stable={stable}, count mismatches: {}",
        if ours == theirs { "matches" } else { "differs" },
        ours.len(),
        if off.is_empty() {
            "none".to_string()
        } else {
            off.join(", ")
        }
    );
    verdict(ours == theirs && stable && off.is_empty(), detail)
}

/// Criterion 10: Factorial trick and period oracle.
fn criterion_10() -> Verdict {
    let g24 = graph(&[2], 4);
    let phi = series::phi_x(&g24, &[vec![4]], 1).unwrap();
    let q1 = &phi[&vec![1]];
    if *q1 != BigRational::from_integer(48.into()) {
        return verdict(false, format!("G(2,4) q^1 coefficient {q1}"));
    }
    for (steps, n, deg) in [(&[1][..], 2, vec![vec![2]]), (&[2][..], 4, vec![vec![4]])] {
        let g = graph(steps, n);
        let phi = series::phi_x(&g, &deg, 1).unwrap();
        let sys = series::mirror_system(&g, &deg, None).unwrap();
        for m in 0..=1u32 {
            let t = m * g.roofs()[0].len() as u32;
            let got = series::period_oracle(&g, &sys, &[m], t).unwrap();
            if got != phi[&vec![m]] {
                return verdict(
                    false,
                    format!("{} m={m}: oracle {got} vs {}", g.shape(), phi[&vec![m]]),
                );
            }
        }
    }
    verdict(
        true,
        "G(2,4) q^1 = 48; period oracle matches on F(1,2), F(2,4) for m <= 1",
    )
}

/// Criterion 11: Duality: series reversal and graph invariants.
fn criterion_11() -> Verdict {
    let a = series::phi_f(&graph(&[1, 2], 4), 3).unwrap();
    let b = series::phi_f(&graph(&[2, 3], 4), 3).unwrap();
    for (m, v) in &a {
        let rev: Vec<u32> = m.iter().rev().copied().collect();
        if b.get(&rev) != Some(v) {
            return verdict(false, format!("F(1,2,4) at {m:?} vs F(2,3,4) at {rev:?}"));
        }
    }
    let list = shapes_up_to(7);
    for s in &list {
        let g = LadderGraph::build(s).unwrap();
        let d = LadderGraph::build(&s.dual()).unwrap();
        let inv = |g: &LadderGraph| (g.dot_count(), g.edges().len(), g.boxes().len());
        if inv(&g) != inv(&d) {
            return verdict(
                false,
                format!("{s} vs {}: {:?} vs {:?}", s.dual(), inv(&g), inv(&d)),
            );
        }
        let sizes = |g: &LadderGraph| g.roofs().iter().map(Vec::len).collect::<Vec<_>>();
        let mut rs = sizes(&d);
        rs.reverse();
        if sizes(&g) != rs {
            return verdict(false, format!("{s}: roof sizes not reversed under duality"));
        }
    }
    verdict(
        true,
        format!(
            "{} coefficients reversed; {} shapes checked",
            a.len(),
            list.len()
        ),
    )
}

/// Criterion 12: Structural invariants of the ladder graph.
fn criterion_12() -> Verdict {
    let list = shapes_up_to(7);
    for s in &list {
        let g = LadderGraph::build(s).unwrap();
        let ne = g.edges().len();
        let nd = g.dot_count();
        let ns = g.vertices().len() - nd;
        if g.boxes().len() + nd + ns != ne + 1 {
            return verdict(false, format!("{s}: Euler count"));
        }
        let k = s.blocks();
        for (i, r) in g.roofs().iter().enumerate() {
            if r.len() != k[i] + k[i + 1] {
                return verdict(false, format!("{s}: roof {} has {} edges", i + 1, r.len()));
            }
            let mut sum = vec![0i64; nd];
            for &e in r {
                for (x, y) in sum.iter_mut().zip(g.delta(e)) {
                    *x += y;
                }
            }
            if sum.iter().any(|&x| x != 0) {
                return verdict(false, format!("{s}: roof {} does not sum to zero", i + 1));
            }
        }
        for b in g.boxes() {
            let add = |x: usize, y: usize| -> Vec<i64> {
                g.delta(x)
                    .iter()
                    .zip(g.delta(y))
                    .map(|(p, q)| p + q)
                    .collect()
            };
            if add(b.corner[0], b.corner[1]) != add(b.opposite[0], b.opposite[1]) {
                return verdict(false, format!("{s}: box {} unbalanced", b.id));
            }
        }
        let mut seen = BTreeMap::new();
        for e in g.roof_edges() {
            for f in g.upper_set(e).unwrap() {
                if seen.insert(f, e).is_some() {
                    return verdict(false, format!("{s}: edge {f} in two upper sets"));
                }
            }
        }
        if seen.len() != ne {
            return verdict(
                false,
                format!("{s}: upper sets cover {} of {ne} edges", seen.len()),
            );
        }
    }
    verdict(true, format!("{} shapes with n <= 7", list.len()))
}

fn main() {
    let criteria: [Check; 12] = [
        (1, "example series", criterion_1),
        (2, "three-way coefficients", criterion_2),
        (3, "F(1,n-1,n) series", criterion_3),
        (4, "reflexivity", criterion_4),
        (5, "small resolution", criterion_5),
        (6, "Hilbert basis", criterion_6),
        (7, "section counts", criterion_7),
        (8, "quadratic relations", criterion_8),
        (9, "census", criterion_9),
        (10, "factorial trick", criterion_10),
        (11, "duality", criterion_11),
        (12, "structural invariants", criterion_12),
    ];
    let mut surprises = Vec::new();
    for (k, name, f) in criteria {
        let t = Instant::now();
        let v = f();
        let secs = t.elapsed().as_secs_f64();
        let tag = if v.pass { "PASS" } else { "FAIL" };
        println!("acceptance {k:>2} {tag} {name}: {} ({secs:.2}s)", v.detail);
        let red = EXPECTED_RED.iter().find(|(n, _)| *n == k);
        match (v.pass, red) {
            (false, Some((_, why))) => println!("              known failure: {why}"),
            (false, None) => surprises.push(format!("criterion {k} failed")),
            (true, Some(_)) => {
                surprises.push(format!("criterion {k} passed but is listed as known red"))
            }
            (true, None) => {}
        }
    }
    if !surprises.is_empty() {
        eprintln!("{}", surprises.join("\n"));
        std::process::exit(1);
    }
}
