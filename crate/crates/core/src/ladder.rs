//! The ladder diagram of a flag shape and the oriented graph on its dots and
//! stars.
//!
//! Coordinates are doubled so that cell centres are integral: the cell in
//! column `c`, row `r` (both 1-based) has its centre at `(2c-1, 2r-1)`.
//! Column `c` belongs to block `j` when `n_{j-1} < c <= n_j`, and holds the
//! rows `1..=n-n_j`. The diagonal squares run from the top left to the
//! bottom right, `O_i = (n_i, n-n_i)`.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg;
use crate::shape::FlagShape;

/// Dense integer vector over one of the lattices `L(D)`, `L(E)` or `L(D+S)`.
pub type IntVector = Vec<i64>;

/// A point in doubled coordinates `(2x, 2y)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GridPoint {
    pub x2: i64,
    pub y2: i64,
}

impl GridPoint {
    pub const fn new(x2: i64, y2: i64) -> Self {
        GridPoint { x2, y2 }
    }

    fn shift(self, dx: i64, dy: i64) -> Self {
        GridPoint::new(self.x2 + dx, self.y2 + dy)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexKind {
    /// Centre of the cell in column `col`, row `row`.
    Dot { col: usize, row: usize },
    /// Star `i`, `1 <= i <= l+1`.
    Star(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Vertex {
    pub kind: VertexKind,
    pub position: GridPoint,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Direction {
    /// Head to the right of the tail.
    Horizontal,
    /// Head below the tail.
    Vertical,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeClass {
    /// Edge of roof `i` (1-based).
    Roof(usize),
    /// Corner edge of box `b`.
    Corner(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphEdge {
    pub id: usize,
    /// Vertex indices.
    pub tail: usize,
    pub head: usize,
    pub direction: Direction,
    pub class: EdgeClass,
    /// The box whose opposite corner contains this edge, if any.
    pub opposite_of: Option<usize>,
}

/// A unit square of the graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LadderBox {
    pub id: usize,
    /// `[e, f]`: the vertical edge into the lower-left vertex and the
    /// horizontal edge out of it.
    pub corner: [usize; 2],
    /// `[g, h]`: the horizontal edge into the upper-right vertex and the
    /// vertical edge out of it.
    pub opposite: [usize; 2],
    pub lower_left: GridPoint,
}

/// A face of the planar picture seen from a dual edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Region {
    /// The unbounded region below and left of the diagram.
    Outside,
    /// The region above roof `i`.
    Roof(usize),
    Box(usize),
}

/// The dual edge crossing a graph edge, oriented up or to the right.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DualEdge {
    pub edge: usize,
    pub head: Region,
    pub tail: Region,
}

#[derive(Debug, Clone)]
pub struct LadderGraph {
    shape: FlagShape,
    cells: Vec<(usize, usize)>,
    vertices: Vec<Vertex>,
    dot_count: usize,
    edges: Vec<GraphEdge>,
    boxes: Vec<LadderBox>,
    roofs: Vec<Vec<usize>>,
    dual: Vec<DualEdge>,
    by_position: BTreeMap<GridPoint, usize>,
    by_midpoint: BTreeMap<GridPoint, usize>,
}

fn consistency(msg: alloc::string::String) -> Error {
    Error::Consistency(msg)
}

impl LadderGraph {
    pub fn build(shape: &FlagShape) -> Result<Self> {
        let n = shape.ambient();
        let l = shape.len();
        let block_of = |c: usize| {
            (1..=l + 1)
                .find(|&j| shape.step(j - 1) < c && c <= shape.step(j))
                .unwrap()
        };

        let mut cells = Vec::new();
        for c in 1..=n {
            let height = n - shape.step(block_of(c));
            for r in 1..=height {
                cells.push((c, r));
            }
        }
        cells.sort_by_key(|&(c, r)| (r, c));

        let mut vertices: Vec<Vertex> = cells
            .iter()
            .map(|&(col, row)| Vertex {
                kind: VertexKind::Dot { col, row },
                position: GridPoint::new(2 * col as i64 - 1, 2 * row as i64 - 1),
            })
            .collect();
        let dot_count = vertices.len();
        for i in 1..=l + 1 {
            vertices.push(Vertex {
                kind: VertexKind::Star(i),
                position: GridPoint::new(
                    2 * shape.step(i - 1) as i64 + 1,
                    2 * (n - shape.step(i)) as i64 + 1,
                ),
            });
        }
        let by_position: BTreeMap<GridPoint, usize> = vertices
            .iter()
            .enumerate()
            .map(|(k, v)| (v.position, k))
            .collect();
        if by_position.len() != vertices.len() {
            return Err(consistency("a star coincides with a dot".into()));
        }

        // raw edges: (tail, head, direction)
        let mut raw = Vec::new();
        for (k, v) in vertices.iter().enumerate() {
            if let Some(&h) = by_position.get(&v.position.shift(2, 0)) {
                raw.push((k, h, Direction::Horizontal));
            }
            if let Some(&h) = by_position.get(&v.position.shift(0, -2)) {
                raw.push((k, h, Direction::Vertical));
            }
        }
        for &(t, h, _) in &raw {
            if matches!(vertices[t].kind, VertexKind::Star(_))
                && matches!(vertices[h].kind, VertexKind::Star(_))
            {
                return Err(consistency("two stars are adjacent".into()));
            }
        }
        raw.sort_by_key(|&(t, _, d)| {
            let p = vertices[t].position;
            (-p.y2, p.x2, d)
        });
        let edge_key: BTreeMap<(usize, usize), usize> = raw
            .iter()
            .enumerate()
            .map(|(id, &(t, h, _))| ((t, h), id))
            .collect();

        let mut lower_lefts: Vec<GridPoint> = vertices
            .iter()
            .map(|v| v.position)
            .filter(|&p| {
                by_position.contains_key(&p.shift(2, 0))
                    && by_position.contains_key(&p.shift(0, 2))
                    && by_position.contains_key(&p.shift(2, 2))
            })
            .collect();
        lower_lefts.sort_by_key(|p| (p.y2, p.x2));
        let edge_between = |a: GridPoint, b: GridPoint| -> Result<usize> {
            let (ta, tb) = (by_position[&a], by_position[&b]);
            edge_key
                .get(&(ta, tb))
                .copied()
                .ok_or_else(|| consistency(format!("missing box side {a:?} -> {b:?}")))
        };
        let mut boxes = Vec::new();
        for (id, &ll) in lower_lefts.iter().enumerate() {
            let ul = ll.shift(0, 2);
            let lr = ll.shift(2, 0);
            let ur = ll.shift(2, 2);
            boxes.push(LadderBox {
                id,
                corner: [edge_between(ul, ll)?, edge_between(ll, lr)?],
                opposite: [edge_between(ul, ur)?, edge_between(ur, lr)?],
                lower_left: ll,
            });
        }

        let mut corner_of = vec![None; raw.len()];
        let mut opposite_of = vec![None; raw.len()];
        for b in &boxes {
            for &e in &b.corner {
                if corner_of[e].replace(b.id).is_some() {
                    return Err(consistency(format!(
                        "edge {e} is a corner edge of two boxes"
                    )));
                }
            }
            for &e in &b.opposite {
                if opposite_of[e].replace(b.id).is_some() {
                    return Err(consistency(format!(
                        "edge {e} is an opposite corner edge of two boxes"
                    )));
                }
            }
        }

        // roofs: the non-corner edges form l oriented paths from star i to star i+1
        let mut out_free: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (id, &(t, _, _)) in raw.iter().enumerate() {
            if corner_of[id].is_none() {
                out_free.entry(t).or_default().push(id);
            }
        }
        let mut roof_of = vec![None; raw.len()];
        let mut roofs = Vec::with_capacity(l);
        for i in 1..=l {
            let start = dot_count + i - 1;
            let target = dot_count + i;
            let mut roof = Vec::new();
            let mut at = start;
            while at != target {
                let next = match out_free.get(&at).map(Vec::as_slice) {
                    Some([e]) => *e,
                    _ => {
                        return Err(consistency(format!(
                            "roof {i} does not continue uniquely at vertex {at}"
                        )))
                    }
                };
                if roof_of[next].replace(i).is_some() {
                    return Err(consistency(format!("edge {next} lies on two roofs")));
                }
                roof.push(next);
                at = raw[next].1;
                if roof.len() > raw.len() {
                    return Err(consistency(format!("roof {i} does not terminate")));
                }
            }
            let expected = shape.step(i + 1) - shape.step(i - 1);
            if roof.len() != expected {
                return Err(consistency(format!(
                    "roof {i} has {} edges, expected {expected}",
                    roof.len()
                )));
            }
            roofs.push(roof);
        }

        let mut edges = Vec::with_capacity(raw.len());
        for (id, &(tail, head, direction)) in raw.iter().enumerate() {
            let class = match (roof_of[id], corner_of[id]) {
                (Some(i), None) => EdgeClass::Roof(i),
                (None, Some(b)) => EdgeClass::Corner(b),
                _ => return Err(consistency(format!("edge {id} is neither roof nor corner"))),
            };
            edges.push(GraphEdge {
                id,
                tail,
                head,
                direction,
                class,
                opposite_of: opposite_of[id],
            });
        }

        let box_at: BTreeMap<GridPoint, usize> =
            boxes.iter().map(|b| (b.lower_left, b.id)).collect();
        let mut dual = Vec::with_capacity(edges.len());
        for e in &edges {
            let tp = vertices[e.tail].position;
            let hp = vertices[e.head].position;
            // square on the up/right side has its lower-left corner at the lower-left endpoint
            let (upper, lower) = match e.direction {
                Direction::Vertical => (hp, hp.shift(-2, 0)),
                Direction::Horizontal => (tp, tp.shift(0, -2)),
            };
            let head = match (box_at.get(&upper), e.class) {
                (Some(&b), _) => Region::Box(b),
                (None, EdgeClass::Roof(i)) => Region::Roof(i),
                (None, EdgeClass::Corner(_)) => {
                    return Err(consistency(format!(
                        "corner edge {} borders the outside from above",
                        e.id
                    )))
                }
            };
            let tail = box_at
                .get(&lower)
                .map_or(Region::Outside, |&b| Region::Box(b));
            dual.push(DualEdge {
                edge: e.id,
                head,
                tail,
            });
        }

        let by_midpoint = edges
            .iter()
            .map(|e| {
                let a = vertices[e.tail].position;
                let b = vertices[e.head].position;
                (GridPoint::new((a.x2 + b.x2) / 2, (a.y2 + b.y2) / 2), e.id)
            })
            .collect();

        let graph = LadderGraph {
            shape: shape.clone(),
            cells,
            vertices,
            dot_count,
            edges,
            boxes,
            roofs,
            dual,
            by_position,
            by_midpoint,
        };
        graph.check_invariants()?;
        Ok(graph)
    }

    fn check_invariants(&self) -> Result<()> {
        if self.cells.len() != self.shape.dimension() {
            return Err(consistency("cell count differs from the dimension".into()));
        }
        let (e, v) = (self.edges.len(), self.vertices.len());
        if self.boxes.len() + v != e + 1 {
            return Err(consistency(format!(
                "{} boxes but |E| - |V| + 1 = {}",
                self.boxes.len(),
                e as i64 - v as i64 + 1
            )));
        }
        // connectivity
        let mut adj = vec![Vec::new(); v];
        for ed in &self.edges {
            adj[ed.tail].push(ed.head);
            adj[ed.head].push(ed.tail);
        }
        let mut seen = vec![false; v];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(consistency("graph is not connected".into()));
        }
        for (i, roof) in self.roofs.iter().enumerate() {
            let sum = self.sum_delta(roof);
            if sum.iter().any(|&x| x != 0) {
                return Err(consistency(format!(
                    "delta does not vanish on roof {}",
                    i + 1
                )));
            }
        }
        for b in &self.boxes {
            if self.sum_delta(&b.corner) != self.sum_delta(&b.opposite) {
                return Err(consistency(format!("box {} is unbalanced", b.id)));
            }
        }
        Ok(())
    }

    fn sum_delta(&self, edges: &[usize]) -> IntVector {
        let mut acc = vec![0; self.dot_count];
        for &e in edges {
            for (a, d) in acc.iter_mut().zip(self.delta(e)) {
                *a += d;
            }
        }
        acc
    }

    pub fn shape(&self) -> &FlagShape {
        &self.shape
    }

    /// Cells `(column, row)` of the diagram, in dot order.
    pub fn cells(&self) -> &[(usize, usize)] {
        &self.cells
    }

    /// Dots first (ordered by row, then column), then stars `1..=l+1`.
    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn dot_count(&self) -> usize {
        self.dot_count
    }

    pub fn star_vertex(&self, i: usize) -> usize {
        self.dot_count + i - 1
    }

    pub fn edges(&self) -> &[GraphEdge] {
        &self.edges
    }

    pub fn boxes(&self) -> &[LadderBox] {
        &self.boxes
    }

    /// Roof `i` is `roofs()[i - 1]`, edges in path order from star `i`.
    pub fn roofs(&self) -> &[Vec<usize>] {
        &self.roofs
    }

    pub fn roof(&self, i: usize) -> &[usize] {
        &self.roofs[i - 1]
    }

    pub fn dual_edges(&self) -> &[DualEdge] {
        &self.dual
    }

    pub fn vertex_at(&self, p: GridPoint) -> Option<usize> {
        self.by_position.get(&p).copied()
    }

    /// The edge whose midpoint is `p`.
    pub fn edge_at_midpoint(&self, p: GridPoint) -> Option<usize> {
        self.by_midpoint.get(&p).copied()
    }

    pub fn midpoint(&self, e: usize) -> GridPoint {
        let a = self.vertices[self.edges[e].tail].position;
        let b = self.vertices[self.edges[e].head].position;
        GridPoint::new((a.x2 + b.x2) / 2, (a.y2 + b.y2) / 2)
    }

    pub fn roof_index(&self, e: usize) -> Option<usize> {
        match self.edges[e].class {
            EdgeClass::Roof(i) => Some(i),
            EdgeClass::Corner(_) => None,
        }
    }

    /// `delta(e) = h(e) - t(e)` projected to `L(D)`.
    pub fn delta(&self, e: usize) -> IntVector {
        let mut v = vec![0; self.dot_count];
        let ed = &self.edges[e];
        if ed.head < self.dot_count {
            v[ed.head] += 1;
        }
        if ed.tail < self.dot_count {
            v[ed.tail] -= 1;
        }
        v
    }

    /// `boundary(e) = h(e) - t(e)` in `L(D) + L(S)`.
    pub fn boundary(&self, e: usize) -> IntVector {
        let mut v = vec![0; self.vertices.len()];
        v[self.edges[e].head] += 1;
        v[self.edges[e].tail] -= 1;
        v
    }

    pub fn delta_matrix(&self) -> Vec<IntVector> {
        (0..self.edges.len()).map(|e| self.delta(e)).collect()
    }

    /// `U(e)` for a roof edge: `e` together with every edge straight below it
    /// (horizontal `e`) or straight left of it (vertical `e`).
    pub fn upper_set(&self, e: usize) -> Result<BTreeSet<usize>> {
        if self.roof_index(e).is_none() {
            return Err(Error::NotARoofEdge(e));
        }
        let mid = self.midpoint(e);
        let dir = self.edges[e].direction;
        let set = self
            .edges
            .iter()
            .filter(|f| f.direction == dir)
            .filter(|f| {
                let m = self.midpoint(f.id);
                match dir {
                    Direction::Horizontal => m.x2 == mid.x2 && m.y2 <= mid.y2,
                    Direction::Vertical => m.y2 == mid.y2 && m.x2 <= mid.x2,
                }
            })
            .map(|f| f.id)
            .collect();
        Ok(set)
    }

    /// All roof edges in roof order.
    pub fn roof_edges(&self) -> impl Iterator<Item = usize> + '_ {
        self.roofs.iter().flatten().copied()
    }

    /// For every edge, the roof edge `e` with `f` in `U(e)`.
    pub fn upper_set_owner(&self) -> Result<Vec<usize>> {
        let mut owner = vec![usize::MAX; self.edges.len()];
        for e in self.roof_edges() {
            for f in self.upper_set(e)? {
                if owner[f] != usize::MAX {
                    return Err(consistency(format!("edge {f} lies in two upper sets")));
                }
                owner[f] = e;
            }
        }
        if let Some(f) = owner.iter().position(|&o| o == usize::MAX) {
            return Err(consistency(format!("edge {f} lies in no upper set")));
        }
        Ok(owner)
    }

    /// `rho_b = sum over C_b - sum over C_b^-` as a vector over `E`.
    pub fn box_kernel_vector(&self, b: usize) -> IntVector {
        let mut v = vec![0; self.edges.len()];
        for &e in &self.boxes[b].corner {
            v[e] += 1;
        }
        for &e in &self.boxes[b].opposite {
            v[e] -= 1;
        }
        v
    }

    /// `rho_i = sum over R_i` as a vector over `E`.
    pub fn roof_kernel_vector(&self, i: usize) -> IntVector {
        let mut v = vec![0; self.edges.len()];
        for &e in self.roof(i) {
            v[e] = 1;
        }
        v
    }

    /// Bases of `Ker(boundary)` (the box vectors) and of `Ker(delta)` (box
    /// vectors followed by roof vectors), verified by exact linear algebra.
    pub fn kernel_bases(&self) -> Result<KernelBases> {
        let boxes: Vec<IntVector> = (0..self.boxes.len())
            .map(|b| self.box_kernel_vector(b))
            .collect();
        let roofs: Vec<IntVector> = (1..=self.shape.len())
            .map(|i| self.roof_kernel_vector(i))
            .collect();
        let apply = |rho: &IntVector, f: &dyn Fn(usize) -> IntVector, len: usize| {
            let mut acc = vec![0i64; len];
            for (e, &c) in rho.iter().enumerate() {
                if c != 0 {
                    for (a, d) in acc.iter_mut().zip(f(e)) {
                        *a += c * d;
                    }
                }
            }
            acc
        };
        let nv = self.vertices.len();
        for (b, rho) in boxes.iter().enumerate() {
            if apply(rho, &|e| self.boundary(e), nv)
                .iter()
                .any(|&x| x != 0)
            {
                return Err(consistency(format!("boundary of rho_{b} is nonzero")));
            }
        }
        for (i, rho) in roofs.iter().enumerate() {
            if apply(rho, &|e| self.delta(e), self.dot_count)
                .iter()
                .any(|&x| x != 0)
            {
                return Err(consistency(format!(
                    "delta of roof vector {} is nonzero",
                    i + 1
                )));
            }
        }
        let e = self.edges.len();
        let delta_rank = linalg::rank(&transpose(&self.delta_matrix(), self.dot_count));
        let boundary_rows: Vec<IntVector> = (0..e).map(|k| self.boundary(k)).collect();
        let boundary_rank = linalg::rank(&transpose(&boundary_rows, nv));
        if e - boundary_rank != boxes.len() {
            return Err(consistency(format!(
                "Ker(boundary) has rank {}, not {}",
                e - boundary_rank,
                boxes.len()
            )));
        }
        let mut all = boxes.clone();
        all.extend(roofs.iter().cloned());
        if e - delta_rank != all.len() {
            return Err(consistency(format!(
                "Ker(delta) has rank {}, not {}",
                e - delta_rank,
                all.len()
            )));
        }
        // a basis of a kernel must span a saturated sublattice
        if !all.is_empty() && !linalg::is_primitive_system(&all) {
            return Err(consistency(
                "kernel vectors do not span a saturated lattice".into(),
            ));
        }
        Ok(KernelBases { boxes, roofs })
    }
}

fn transpose(rows: &[IntVector], width: usize) -> Vec<IntVector> {
    (0..width)
        .map(|c| rows.iter().map(|r| r[c]).collect())
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelBases {
    pub boxes: Vec<IntVector>,
    pub roofs: Vec<IntVector>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(steps: &[usize], n: usize) -> LadderGraph {
        LadderGraph::build(&FlagShape::new(steps, n).unwrap()).unwrap()
    }

    #[test]
    fn counts_f25() {
        let g = graph(&[2], 5);
        assert_eq!(g.dot_count(), 6);
        assert_eq!(g.vertices().len() - g.dot_count(), 2);
        assert_eq!(g.edges().len(), 9);
        assert_eq!(g.boxes().len(), 2);
        assert_eq!(g.roof(1).len(), 5);
        let profile: Vec<usize> = g
            .roof(1)
            .iter()
            .map(|&e| g.upper_set(e).unwrap().len())
            .collect();
        assert_eq!(profile, [1, 3, 2, 2, 1]);
        g.upper_set_owner().unwrap();
    }

    #[test]
    fn counts_f1234() {
        let g = graph(&[1, 2, 3], 4);
        assert_eq!(g.boxes().len(), 3);
        assert_eq!(
            g.roofs().iter().map(Vec::len).collect::<Vec<_>>(),
            [2, 2, 2]
        );
        assert_eq!(g.edges().len(), 12);
        let k = g.kernel_bases().unwrap();
        assert_eq!(k.boxes.len() + k.roofs.len(), 6);
    }

    #[test]
    fn projective_line() {
        let g = graph(&[1], 2);
        assert_eq!((g.dot_count(), g.edges().len(), g.boxes().len()), (1, 2, 0));
        let k = g.kernel_bases().unwrap();
        assert_eq!(k.roofs, vec![vec![1, 1]]);
        assert!(g
            .dual_edges()
            .iter()
            .all(|d| d.head == Region::Roof(1) && d.tail == Region::Outside));
    }

    #[test]
    fn projective_plane_deltas() {
        let g = graph(&[1], 3);
        let mut ds: Vec<IntVector> = (0..3).map(|e| g.delta(e)).collect();
        ds.sort();
        assert_eq!(ds, vec![vec![-1, 0], vec![0, 1], vec![1, -1]]);
    }

    #[test]
    fn dual_edges_f25() {
        let g = graph(&[2], 5);
        let mut nontrivial: Vec<(Region, Region)> = g
            .dual_edges()
            .iter()
            .filter(|d| d.tail != Region::Outside)
            .map(|d| (d.head, d.tail))
            .collect();
        nontrivial.sort();
        assert_eq!(
            nontrivial,
            vec![
                (Region::Roof(1), Region::Box(0)),
                (Region::Roof(1), Region::Box(1)),
                (Region::Roof(1), Region::Box(1)),
                (Region::Box(1), Region::Box(0)),
            ]
        );
    }

    #[test]
    fn dual_edges_f1234() {
        let g = graph(&[1, 2, 3], 4);
        let mut nontrivial: Vec<(Region, Region)> = g
            .dual_edges()
            .iter()
            .filter(|d| d.tail != Region::Outside)
            .map(|d| (d.head, d.tail))
            .collect();
        nontrivial.sort();
        assert_eq!(nontrivial.len(), 6);
        let heads: BTreeSet<Region> = nontrivial.iter().map(|p| p.0).collect();
        assert!(heads.contains(&Region::Roof(1)) && heads.contains(&Region::Roof(3)));
    }

    #[test]
    fn partition_of_edges() {
        for (steps, n) in [(&[1, 3][..], 5), (&[2, 3][..], 6), (&[1, 2, 4][..], 6)] {
            let g = graph(steps, n);
            let in_roofs: usize = g.roofs().iter().map(Vec::len).sum();
            assert_eq!(in_roofs + 2 * g.boxes().len(), g.edges().len());
            g.upper_set_owner().unwrap();
            g.kernel_bases().unwrap();
        }
    }

    #[test]
    fn upper_set_rejects_corner_edges() {
        let g = graph(&[2], 5);
        let corner = g.boxes()[0].corner[0];
        assert_eq!(g.upper_set(corner), Err(Error::NotARoofEdge(corner)));
    }
}
