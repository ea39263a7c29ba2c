//! Even valence graphs of special diagrams.
//!
//! The graph has a vertex for every region of a special diagram that is not
//! the inside of a Seifert circle and an edge for every crossing, directed from
//! the region at its incoming corner to the region at its outgoing corner.
//! Cells (faces) of the graph are the Seifert circles. The embedding is kept as
//! a rotation system of darts: dart `2e` is the tail end of edge `e`, dart
//! `2e + 1` its head end.

mod fiber;
mod plane;

pub use fiber::{classify_fiber_shape, is_fibered_alexander, reduce_clasps, FactorKind, FiberCriterion, FiberShape, FiberVerdict};
pub use plane::{chain_graph, fig8_graph, necklace_graph, random_fiber_candidate, ChainCircle, ChainShape};

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::fmt::Write;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::diagram::{Crossing, Diagram, DiagramError, End, Sign};
use crate::seifert::{is_special, SeifertData};
use crate::unionfind::UnionFind;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct EvEdge {
    pub tail: usize,
    pub head: usize,
    pub sign: Sign,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EvError {
    NotSpecial,
    NotConnected,
    NotAlmostPositive(usize),
    NotReduced,
    NoSuchEdge(usize),
    /// No coherent orientation exists: some vertex has odd valence or the rotation system is broken.
    NotEvenValence,
    BadRotation(String),
    Precondition(String),
    Diagram(DiagramError),
}

impl fmt::Display for EvError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvError::NotSpecial => f.write_str("diagram is not special"),
            EvError::NotConnected => f.write_str("diagram is not connected"),
            EvError::NotAlmostPositive(k) => write!(f, "diagram has {k} negative crossings, expected exactly 1"),
            EvError::NotReduced => f.write_str("diagram is not reduced"),
            EvError::NoSuchEdge(e) => write!(f, "no edge {e}"),
            EvError::NotEvenValence => f.write_str("graph has no canonical orientation"),
            EvError::BadRotation(s) => write!(f, "bad rotation system: {s}"),
            EvError::Precondition(s) => write!(f, "precondition failed: {s}"),
            EvError::Diagram(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for EvError {}

impl From<DiagramError> for EvError {
    fn from(e: DiagramError) -> Self {
        EvError::Diagram(e)
    }
}

/// Plane directed signed multigraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvenValenceGraph {
    edges: Vec<EvEdge>,
    /// Darts around each vertex, counterclockwise.
    rotation: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arborescences {
    pub count: BigInt,
    /// Set when the graph is disconnected (the count is then 0).
    pub disconnected: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThevCheck {
    /// Arborescences after contracting `p` (`Δ_{D_p}(0)`).
    pub lhs: BigInt,
    /// Arborescences of the whole graph (`Δ_D(0)`).
    pub rhs: BigInt,
    pub holds: bool,
}

fn dart_edge(d: usize) -> usize {
    d / 2
}

impl EvenValenceGraph {
    /// Builds a plane graph from edges and the counterclockwise rotation at every
    /// vertex, given as `(edge, at_head)` pairs. Orientation is taken as given.
    pub fn from_rotation(vertices: usize, edges: Vec<EvEdge>, rotation: Vec<Vec<(usize, bool)>>) -> Result<Self, EvError> {
        if rotation.len() != vertices {
            return Err(EvError::BadRotation(format!("{} rotations for {} vertices", rotation.len(), vertices)));
        }
        let mut seen = vec![false; 2 * edges.len()];
        let mut rot = Vec::with_capacity(vertices);
        for (v, r) in rotation.iter().enumerate() {
            let mut darts = Vec::with_capacity(r.len());
            for &(e, at_head) in r {
                let edge = edges.get(e).ok_or(EvError::NoSuchEdge(e))?;
                let (d, end) = if at_head { (2 * e + 1, edge.head) } else { (2 * e, edge.tail) };
                if end != v || seen[d] {
                    return Err(EvError::BadRotation(format!("dart of edge {e} misplaced at vertex {v}")));
                }
                seen[d] = true;
                darts.push(d);
            }
            rot.push(darts);
        }
        if seen.iter().any(|s| !s) {
            return Err(EvError::BadRotation("some edge end is missing from the rotation".into()));
        }
        let g = EvenValenceGraph { edges, rotation: rot };
        let (v, e, f) = (g.vertex_count() as i64, g.edge_count() as i64, g.cells().len() as i64);
        let comps = g.components() as i64;
        let isolated = g.rotation.iter().filter(|r| r.is_empty()).count() as i64;
        if v - e + f + isolated != 2 * comps {
            return Err(EvError::BadRotation("rotation system is not planar".into()));
        }
        Ok(g)
    }

    /// The graph of a connected special diagram; edge `x` is crossing `x`.
    pub fn from_special(d: &Diagram) -> Result<Self, EvError> {
        if !d.is_connected() {
            return Err(EvError::NotConnected);
        }
        if d.crossing_count() == 0 {
            return Ok(EvenValenceGraph { edges: Vec::new(), rotation: vec![Vec::new()] });
        }
        if !is_special(d) {
            return Err(EvError::NotSpecial);
        }
        let faces = d.faces();
        let mut vid = vec![usize::MAX; faces.faces.len()];
        let mut n = 0;
        for x in 0..d.crossing_count() {
            let c = d.crossing(x);
            for k in [c.in_in_corner(), c.out_out_corner()] {
                let f = faces.corner_face[x][k as usize];
                if vid[f] == usize::MAX {
                    vid[f] = n;
                    n += 1;
                }
            }
        }
        let edges = (0..d.crossing_count())
            .map(|x| {
                let c = d.crossing(x);
                EvEdge { tail: vid[faces.corner_face[x][c.in_in_corner() as usize]], head: vid[faces.corner_face[x][c.out_out_corner() as usize]], sign: c.sign() }
            })
            .collect();
        let mut rotation = vec![Vec::new(); n];
        for (f, corners) in faces.faces.iter().enumerate() {
            if vid[f] == usize::MAX {
                continue;
            }
            // face walks run clockwise around the region
            for c in corners.iter().rev() {
                let cr = d.crossing(c.crossing);
                let dart = if c.index == cr.in_in_corner() {
                    2 * c.crossing
                } else if c.index == cr.out_out_corner() {
                    2 * c.crossing + 1
                } else {
                    return Err(EvError::NotSpecial);
                };
                rotation[vid[f]].push(dart);
            }
        }
        Ok(EvenValenceGraph { edges, rotation })
    }

    pub fn vertex_count(&self) -> usize {
        self.rotation.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[EvEdge] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> Result<EvEdge, EvError> {
        self.edges.get(e).copied().ok_or(EvError::NoSuchEdge(e))
    }

    pub fn valence(&self, v: usize) -> usize {
        self.rotation[v].len()
    }

    /// Rotation at `v` as `(edge, at_head)` pairs.
    pub fn rotation(&self, v: usize) -> Vec<(usize, bool)> {
        self.rotation[v].iter().map(|&d| (dart_edge(d), d % 2 == 1)).collect()
    }

    pub fn negative_edges(&self) -> Vec<usize> {
        (0..self.edges.len()).filter(|&e| self.edges[e].sign == Sign::Negative).collect()
    }

    fn positions(&self) -> Vec<(usize, usize)> {
        let mut pos = vec![(0, 0); 2 * self.edges.len()];
        for (v, r) in self.rotation.iter().enumerate() {
            for (i, &d) in r.iter().enumerate() {
                pos[d] = (v, i);
            }
        }
        pos
    }

    /// Cells as cyclic dart sequences; a dart is traversed leaving its vertex.
    pub fn cells(&self) -> Vec<Vec<usize>> {
        self.cell_index().0
    }

    /// Cells, plus the cell of every dart.
    pub fn cell_index(&self) -> (Vec<Vec<usize>>, Vec<usize>) {
        let pos = self.positions();
        let mut cell_of = vec![usize::MAX; 2 * self.edges.len()];
        let mut cells = Vec::new();
        for d0 in 0..2 * self.edges.len() {
            if cell_of[d0] != usize::MAX {
                continue;
            }
            let id = cells.len();
            let mut cell = Vec::new();
            let mut d = d0;
            while cell_of[d] == usize::MAX {
                cell_of[d] = id;
                cell.push(d);
                let (w, i) = pos[d ^ 1];
                let r = &self.rotation[w];
                d = r[(i + 1) % r.len()];
            }
            cells.push(cell);
        }
        (cells, cell_of)
    }

    /// The two cells on either side of edge `e` (forward dart first).
    pub fn cells_of_edge(&self, e: usize) -> Result<(usize, usize), EvError> {
        self.edge(e)?;
        let (_, cell_of) = self.cell_index();
        Ok((cell_of[2 * e], cell_of[2 * e + 1]))
    }

    pub fn components(&self) -> usize {
        let mut uf = UnionFind::new(self.vertex_count());
        for e in &self.edges {
            uf.union(e.tail, e.head);
        }
        uf.count()
    }

    pub fn is_connected(&self) -> bool {
        self.components() <= 1
    }

    /// Every cell is traversed entirely forwards or entirely backwards.
    pub fn is_canonical(&self) -> bool {
        self.cells().iter().all(|c| c.iter().all(|d| d % 2 == 0) || c.iter().all(|d| d % 2 == 1))
    }

    /// Re-orients edges so that every cell is coherent. In each component the
    /// lowest-numbered edge ends up directed from its smaller to its larger endpoint.
    pub fn canonical_orient(&self) -> Result<EvenValenceGraph, EvError> {
        if self.rotation.iter().any(|r| r.len() % 2 == 1) {
            return Err(EvError::NotEvenValence);
        }
        let (cells, cell_of) = self.cell_index();
        let mut color = vec![u8::MAX; cells.len()];
        let mut flip = vec![false; self.edges.len()];
        for base in 0..self.edges.len() {
            let c0 = cell_of[2 * base];
            if color[c0] != u8::MAX {
                continue;
            }
            let b = self.edges[base];
            // color 0 cells are traversed forwards
            color[c0] = if b.tail <= b.head { 0 } else { 1 };
            let mut stack = vec![c0];
            while let Some(c) = stack.pop() {
                for &d in &cells[c] {
                    let other = cell_of[d ^ 1];
                    if other == c {
                        return Err(EvError::NotEvenValence);
                    }
                    if color[other] == u8::MAX {
                        color[other] = 1 - color[c];
                        stack.push(other);
                    } else if color[other] == color[c] {
                        return Err(EvError::NotEvenValence);
                    }
                }
            }
        }
        for e in 0..self.edges.len() {
            flip[e] = color[cell_of[2 * e]] == 1;
        }
        let edges = self.edges.iter().zip(&flip).map(|(e, &f)| if f { EvEdge { tail: e.head, head: e.tail, sign: e.sign } } else { *e }).collect();
        let rotation = self.rotation.iter().map(|r| r.iter().map(|&d| if flip[dart_edge(d)] { d ^ 1 } else { d }).collect()).collect();
        Ok(EvenValenceGraph { edges, rotation })
    }

    /// Number of spanning trees with every edge pointing towards `root`, by the
    /// matrix-tree theorem (root-deleted minor of out-degree minus adjacency).
    pub fn arborescence_count(&self, root: usize) -> Arborescences {
        let n = self.vertex_count();
        if !self.is_connected() {
            return Arborescences { count: BigInt::zero(), disconnected: true };
        }
        if n <= 1 {
            return Arborescences { count: BigInt::one(), disconnected: false };
        }
        let idx: Vec<usize> = (0..n).filter(|&v| v != root).collect();
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in idx.iter().enumerate() {
            pos[v] = i;
        }
        let m = n - 1;
        let mut a = vec![vec![BigInt::zero(); m]; m];
        for e in &self.edges {
            if e.tail == e.head || e.tail == root {
                continue;
            }
            let i = pos[e.tail];
            a[i][i] += 1;
            if e.head != root {
                a[i][pos[e.head]] -= 1;
            }
        }
        Arborescences { count: bareiss_det(a), disconnected: false }
    }

    /// Merges the endpoints of `e` and removes it.
    pub fn contract_edge(&self, e: usize) -> Result<EvenValenceGraph, EvError> {
        let ed = self.edge(e)?;
        if ed.tail == ed.head {
            return Err(EvError::Precondition(format!("edge {e} is a loop")));
        }
        let (u, v) = (ed.tail, ed.head);
        let mut rotation = self.rotation.clone();
        let after = |r: &Vec<usize>, d: usize| -> Vec<usize> {
            let i = r.iter().position(|&x| x == d).unwrap();
            (1..r.len()).map(|k| r[(i + k) % r.len()]).collect()
        };
        let mut merged = after(&self.rotation[u], 2 * e);
        merged.extend(after(&self.rotation[v], 2 * e + 1));
        rotation[u] = merged;
        rotation[v] = Vec::new();
        let mut edges: Vec<Option<EvEdge>> = self.edges.iter().map(|&x| Some(x)).collect();
        edges[e] = None;
        for x in edges.iter_mut().flatten() {
            if x.tail == v {
                x.tail = u;
            }
            if x.head == v {
                x.head = u;
            }
        }
        let mut alive = vec![true; self.vertex_count()];
        alive[v] = false;
        Ok(compact(&alive, edges, rotation))
    }

    /// Whether `e` lies in a pair of edges whose deletion disconnects the graph.
    pub fn in_two_cut(&self, e: usize) -> Result<bool, EvError> {
        self.edge(e)?;
        let base = self.components();
        Ok((0..self.edges.len()).filter(|&f| f != e).any(|f| {
            let mut uf = UnionFind::new(self.vertex_count());
            for (k, x) in self.edges.iter().enumerate() {
                if k != e && k != f {
                    uf.union(x.tail, x.head);
                }
            }
            uf.count() > base
        }))
    }

    /// Removes valence-2 vertices whose two edges are positive and lead to
    /// different neighbours, merging the edges.
    pub fn unbisect(&self) -> EvenValenceGraph {
        let mut g = self.clone();
        'again: loop {
            for w in 0..g.vertex_count() {
                let r = &g.rotation[w];
                if r.len() != 2 {
                    continue;
                }
                let (d1, d2) = (r[0], r[1]);
                let (e1, e2) = (dart_edge(d1), dart_edge(d2));
                if e1 == e2 || g.edges[e1].sign != Sign::Positive || g.edges[e2].sign != Sign::Positive {
                    continue;
                }
                let (din, dout) = match (d1 % 2, d2 % 2) {
                    (1, 0) => (d1, d2),
                    (0, 1) => (d2, d1),
                    _ => continue,
                };
                let (ein, eout) = (dart_edge(din), dart_edge(dout));
                let (a, b) = (g.edges[ein].tail, g.edges[eout].head);
                if a == b {
                    continue;
                }
                // edge `ein` now runs a -> b and takes over the head dart of `eout`
                let mut rotation = g.rotation.clone();
                rotation[w] = Vec::new();
                for d in rotation[b].iter_mut() {
                    if *d == 2 * eout + 1 {
                        *d = 2 * ein + 1;
                    }
                }
                let mut edges: Vec<Option<EvEdge>> = g.edges.iter().map(|&x| Some(x)).collect();
                edges[ein].as_mut().unwrap().head = b;
                edges[eout] = None;
                let mut alive = vec![true; g.vertex_count()];
                alive[w] = false;
                g = compact(&alive, edges, rotation);
                continue 'again;
            }
            return g;
        }
    }

    /// Subdivides a positive edge by a new valence-2 vertex.
    pub fn bisect(&self, e: usize) -> Result<EvenValenceGraph, EvError> {
        let ed = self.edge(e)?;
        let w = self.vertex_count();
        let f = self.edges.len();
        let mut g = self.clone();
        g.edges[e].head = w;
        g.edges.push(EvEdge { tail: w, head: ed.head, sign: ed.sign });
        for d in g.rotation[ed.head].iter_mut() {
            if *d == 2 * e + 1 {
                *d = 2 * f + 1;
            }
        }
        g.rotation.push(vec![2 * e + 1, 2 * f]);
        Ok(g)
    }

    /// Replaces `e` by three parallel edges of the same sign (a twist of three
    /// crossings), keeping the orientation canonical.
    pub fn triple(&self, e: usize) -> Result<EvenValenceGraph, EvError> {
        let ed = self.edge(e)?;
        if ed.tail == ed.head {
            return Err(EvError::Precondition(format!("edge {e} is a loop")));
        }
        let (f2, f3) = (self.edges.len(), self.edges.len() + 1);
        let mut g = self.clone();
        g.edges.push(EvEdge { tail: ed.head, head: ed.tail, sign: ed.sign });
        g.edges.push(ed);
        let r = &mut g.rotation[ed.tail];
        let i = r.iter().position(|&d| d == 2 * e).unwrap();
        r.splice(i + 1..i + 1, [2 * f2 + 1, 2 * f3]);
        let r = &mut g.rotation[ed.head];
        let i = r.iter().position(|&d| d == 2 * e + 1).unwrap();
        r.splice(i..i, [2 * f3 + 1, 2 * f2]);
        Ok(g)
    }

    /// The special diagram whose graph this is (medial construction). Needs a
    /// canonical orientation. Edge `e` becomes crossing `e`.
    pub fn to_diagram(&self) -> Result<Diagram, EvError> {
        if !self.is_connected() {
            return Err(EvError::NotConnected);
        }
        if self.edges.is_empty() {
            return Ok(Diagram::unknot());
        }
        if !self.is_canonical() {
            return Err(EvError::Precondition("orientation is not canonical".into()));
        }
        // Natural slots counterclockwise with the edge drawn from tail (west) to
        // head (east): 0 NE (prev side at head), 1 NW (next side at tail),
        // 2 SW (prev side at tail), 3 SE (next side at head). Strands run
        // west to east; a positive crossing has NW–SE on top.
        let slot = |e: usize, natural: u8| -> u8 {
            match self.edges[e].sign {
                Sign::Positive => (natural + 2) % 4,
                Sign::Negative => (natural + 3) % 4,
            }
        };
        let mut links = vec![[End::new(usize::MAX, 0); 4]; self.edges.len()];
        for r in &self.rotation {
            for i in 0..r.len() {
                let (d1, d2) = (r[i], r[(i + 1) % r.len()]);
                let (e1, e2) = (dart_edge(d1), dart_edge(d2));
                let a = End::new(e1, slot(e1, if d1 % 2 == 0 { 1 } else { 3 }));
                let b = End::new(e2, slot(e2, if d2 % 2 == 0 { 2 } else { 0 }));
                links[a.crossing][a.slot as usize] = b;
                links[b.crossing][b.slot as usize] = a;
            }
        }
        let crossings = links
            .into_iter()
            .zip(&self.edges)
            .map(|(links, e)| Crossing { links, over_in: if e.sign == Sign::Positive { 3 } else { 1 } })
            .collect();
        Ok(Diagram::from_crossings(crossings, 0)?)
    }

    /// DOT rendering: signed directed edges, cells listed in a comment.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph evgraph {\n");
        for v in 0..self.vertex_count() {
            let _ = writeln!(s, "  v{v};");
        }
        for (k, e) in self.edges.iter().enumerate() {
            let (sg, style) = if e.sign == Sign::Positive { ("+", "solid") } else { ("-", "bold") };
            let _ = writeln!(s, "  v{} -> v{} [label=\"e{k}{sg}\", style={style}];", e.tail, e.head);
        }
        for (c, cell) in self.cells().iter().enumerate() {
            let es: Vec<String> = cell.iter().map(|d| format!("e{}{}", dart_edge(*d), if d % 2 == 0 { "" } else { "'" })).collect();
            let _ = writeln!(s, "  // cell {c}: {}", es.join(" "));
        }
        s.push_str("}\n");
        s
    }

    /// Edges (by index) that are not in `removed`, as an undirected multigraph.
    fn without_edges(&self, removed: &BTreeSet<usize>) -> Vec<(usize, usize)> {
        (0..self.edges.len()).filter(|e| !removed.contains(e)).map(|e| (self.edges[e].tail, self.edges[e].head)).collect()
    }
}

/// Renumbers surviving vertices and edges.
fn compact(alive: &[bool], edges: Vec<Option<EvEdge>>, rotation: Vec<Vec<usize>>) -> EvenValenceGraph {
    let mut vmap = vec![usize::MAX; alive.len()];
    let mut n = 0;
    for v in 0..alive.len() {
        if alive[v] {
            vmap[v] = n;
            n += 1;
        }
    }
    let mut emap = vec![usize::MAX; edges.len()];
    let mut out = Vec::new();
    for (k, e) in edges.iter().enumerate() {
        if let Some(e) = e {
            emap[k] = out.len();
            out.push(EvEdge { tail: vmap[e.tail], head: vmap[e.head], sign: e.sign });
        }
    }
    let rotation = rotation
        .into_iter()
        .enumerate()
        .filter(|(v, _)| alive[*v])
        .map(|(_, r)| r.into_iter().map(|d| 2 * emap[dart_edge(d)] + d % 2).collect())
        .collect();
    EvenValenceGraph { edges: out, rotation }
}

/// Exact determinant by fraction-free elimination.
fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// `Δ(0)` of a connected special alternating diagram as an arborescence count.
pub fn alexander_at_zero_special(d: &Diagram) -> Result<BigInt, EvError> {
    if !d.is_positive() {
        return Err(EvError::Precondition("diagram is not positive".into()));
    }
    let g = EvenValenceGraph::from_special(d)?;
    Ok(g.arborescence_count(0).count)
}

/// Compares arborescence counts before and after contracting the edge of
/// crossing `p`, which must have no parallel crossing.
pub fn thev_check(d: &Diagram, p: usize) -> Result<ThevCheck, EvError> {
    if p >= d.crossing_count() {
        return Err(EvError::NoSuchEdge(p));
    }
    if !d.is_reduced() {
        return Err(EvError::NotReduced);
    }
    if !d.is_positive() {
        return Err(EvError::Precondition("diagram is not positive".into()));
    }
    if SeifertData::new(d).has_parallel_partner(p) {
        return Err(EvError::Precondition(format!("crossing {p} has a crossing joining the same Seifert circles")));
    }
    let g = EvenValenceGraph::from_special(d)?;
    let rhs = g.arborescence_count(0).count;
    let lhs = g.contract_edge(p)?.arborescence_count(0).count;
    Ok(ThevCheck { holds: lhs < rhs, lhs, rhs })
}

/// Biconnected blocks of an undirected multigraph without loops, as edge lists.
fn blocks(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for (k, &(a, b)) in edges.iter().enumerate() {
        adj[a].push((b, k));
        adj[b].push((a, k));
    }
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut stack = Vec::new();
    let mut out = Vec::new();
    for s in 0..n {
        if disc[s] != usize::MAX {
            continue;
        }
        disc[s] = time;
        low[s] = time;
        time += 1;
        // frames: (vertex, edge used to enter, next adjacency index)
        let mut frames = vec![(s, usize::MAX, 0usize)];
        while let Some(&(v, pe, i)) = frames.last() {
            if i < adj[v].len() {
                let (w, k) = adj[v][i];
                frames.last_mut().unwrap().2 += 1;
                if k == pe {
                    continue;
                }
                if disc[w] == usize::MAX {
                    stack.push(k);
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    frames.push((w, k, 0));
                } else if disc[w] < disc[v] {
                    stack.push(k);
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                frames.pop();
                if let Some(&(u, _, _)) = frames.last() {
                    low[u] = low[u].min(low[v]);
                    if low[v] >= disc[u] {
                        let mut block = Vec::new();
                        while let Some(k) = stack.pop() {
                            block.push(k);
                            if k == pe {
                                break;
                            }
                        }
                        out.push(block);
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests;
