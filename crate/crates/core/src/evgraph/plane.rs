//! Plane graphs of the two fibered shapes, and a random mix of fibered and
//! non-fibered almost positive special diagrams built from them.

use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;

use super::{EvEdge, EvError, EvenValenceGraph};
use crate::diagram::random::{almost_positive_diagram, positive_diagram, rng};
use crate::diagram::{build::torus_2, Diagram, Sign};

/// One circle of a chain: interior vertices on its upper arc, and on its lower
/// arc a flag per vertex telling whether the attached cell touches it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainCircle {
    pub upper: usize,
    pub lower: Vec<bool>,
}

/// A chain of at least two circles, consecutive ones sharing a cut vertex, and
/// a cell attached below: it starts at the leftmost point of the first circle,
/// runs under the chain through the touched vertices (in `circles[i].lower`
/// and `cut_touched`), ends at the rightmost point of the last circle and
/// closes with one negative edge over the top.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainShape {
    pub circles: Vec<ChainCircle>,
    pub cut_touched: Vec<bool>,
}

struct Builder {
    edges: Vec<EvEdge>,
    rotation: Vec<Vec<(usize, bool)>>,
}

impl Builder {
    fn vertex(&mut self) -> usize {
        self.rotation.push(Vec::new());
        self.rotation.len() - 1
    }

    fn edge(&mut self, a: usize, b: usize, sign: Sign) -> usize {
        self.edges.push(EvEdge { tail: a, head: b, sign });
        self.edges.len() - 1
    }
}

pub fn chain_graph(shape: &ChainShape) -> Result<EvenValenceGraph, EvError> {
    let k = shape.circles.len();
    if k < 2 || shape.cut_touched.len() != k - 1 {
        return Err(EvError::Precondition("a chain needs at least two circles and one flag per cut vertex".into()));
    }
    let mut b = Builder { edges: Vec::new(), rotation: Vec::new() };
    let left = b.vertex();
    let cuts: Vec<usize> = (0..k - 1).map(|_| b.vertex()).collect();
    let right = b.vertex();
    // (fwd, back) darts of every vertex on every circle, in circle order
    struct OnCircle {
        v: usize,
        fwd: (usize, bool),
        back: (usize, bool),
    }
    let mut circle_darts: Vec<Vec<OnCircle>> = Vec::new();
    let mut lower_ids: Vec<Vec<usize>> = Vec::new();
    let mut upper_ids: Vec<Vec<usize>> = Vec::new();
    for (i, c) in shape.circles.iter().enumerate() {
        let l = if i == 0 { left } else { cuts[i - 1] };
        let r = if i == k - 1 { right } else { cuts[i] };
        let lows: Vec<usize> = c.lower.iter().map(|_| b.vertex()).collect();
        let ups: Vec<usize> = (0..c.upper).map(|_| b.vertex()).collect();
        // counterclockwise: left, lower arc left to right, right, upper arc right to left
        let mut cyc = vec![l];
        cyc.extend(&lows);
        cyc.push(r);
        cyc.extend(ups.iter().rev());
        let m = cyc.len();
        let es: Vec<usize> = (0..m).map(|j| b.edge(cyc[j], cyc[(j + 1) % m], Sign::Positive)).collect();
        circle_darts.push((0..m).map(|j| OnCircle { v: cyc[j], fwd: (es[j], false), back: (es[(j + m - 1) % m], true) }).collect());
        lower_ids.push(lows);
        upper_ids.push(ups);
    }
    let find = |i: usize, v: usize| circle_darts[i].iter().find(|o| o.v == v).map(|o| (o.fwd, o.back)).unwrap();
    // the attached cell
    let mut touch = vec![left];
    for i in 0..k {
        for (j, &t) in shape.circles[i].lower.iter().enumerate() {
            if t {
                touch.push(lower_ids[i][j]);
            }
        }
        if i + 1 < k && shape.cut_touched[i] {
            touch.push(cuts[i]);
        }
    }
    touch.push(right);
    let cell: Vec<usize> = (0..touch.len() - 1).map(|j| b.edge(touch[j], touch[j + 1], Sign::Positive)).collect();
    let p = b.edge(left, right, Sign::Negative);
    let cell_left = |v: usize| touch.iter().position(|&t| t == v).and_then(|j| j.checked_sub(1)).map(|j| (cell[j], true));
    let cell_right = |v: usize| touch.iter().position(|&t| t == v).filter(|&j| j + 1 < touch.len()).map(|j| (cell[j], false));
    for i in 0..k {
        for &v in &lower_ids[i] {
            let (fwd, back) = find(i, v);
            let mut r = vec![fwd, back];
            r.extend(cell_left(v));
            r.extend(cell_right(v));
            b.rotation[v] = r;
        }
        for &v in &upper_ids[i] {
            let (fwd, back) = find(i, v);
            b.rotation[v] = vec![back, fwd];
        }
    }
    let (fwd, back) = find(0, left);
    b.rotation[left] = vec![back, (p, false), cell_right(left).unwrap(), fwd];
    let (fwd, back) = find(k - 1, right);
    b.rotation[right] = vec![(p, true), fwd, back, cell_left(right).unwrap()];
    for i in 0..k - 1 {
        let c = cuts[i];
        let (lf, lb) = find(i, c);
        let (rf, rb) = find(i + 1, c);
        let mut r = vec![rb, lf, lb];
        r.extend(cell_left(c));
        r.extend(cell_right(c));
        r.push(rf);
        b.rotation[c] = r;
    }
    let n = b.rotation.len();
    EvenValenceGraph::from_rotation(n, b.edges, b.rotation)?.canonical_orient()
}

/// A ring of `beads` double edges with one edge of one bead negative: the
/// graph of a `(2, ..., 2)`-pretzel diagram with one crossing switched.
pub fn necklace_graph(beads: usize) -> Result<EvenValenceGraph, EvError> {
    if beads < 2 {
        return Err(EvError::Precondition("a necklace needs at least two beads".into()));
    }
    let mut b = Builder { edges: Vec::new(), rotation: vec![Vec::new(); beads] };
    let inner: Vec<usize> = (0..beads).map(|i| b.edge(i, (i + 1) % beads, Sign::Positive)).collect();
    let outer: Vec<usize> = (0..beads).map(|i| b.edge(i, (i + 1) % beads, if i + 1 == beads { Sign::Negative } else { Sign::Positive })).collect();
    for i in 0..beads {
        let prev = (i + beads - 1) % beads;
        b.rotation[i] = vec![(inner[i], false), (inner[prev], true), (outer[prev], true), (outer[i], false)];
    }
    EvenValenceGraph::from_rotation(beads, b.edges, b.rotation)?.canonical_orient()
}

/// The graph of the pictured example: four circles in a chain, the cell touching
/// the lower arcs of the two middle circles.
pub fn fig8_graph() -> EvenValenceGraph {
    let c = |lower: &[bool]| ChainCircle { upper: 0, lower: lower.to_vec() };
    chain_graph(&ChainShape { circles: vec![c(&[]), c(&[true]), c(&[true]), c(&[])], cut_touched: vec![false; 3] }).expect("fixed shape")
}

/// A connected almost positive diagram that is fibered about half the time:
/// a chain or necklace shape, randomly bisected, sometimes spoiled by tripling an
/// edge, sometimes summed with a positive diagram; or a plain random almost
/// positive diagram.
pub fn random_fiber_candidate(seed: u64) -> Result<Diagram, EvError> {
    let mut r = rng(seed ^ 0x5eed_f1be);
    let kind = r.gen_range(0..6);
    if kind == 5 {
        let c = r.gen_range(4..=9);
        return Ok(almost_positive_diagram(seed, c, r.gen_bool(0.5))?);
    }
    let mut g = if kind < 3 {
        let k = r.gen_range(2..=3);
        let circles = (0..k)
            .map(|_| {
                let lows = r.gen_range(0..=2);
                ChainCircle { upper: r.gen_range(0..=1), lower: (0..lows).map(|_| r.gen_bool(0.6)).collect() }
            })
            .collect();
        let cut_touched = (0..k - 1).map(|_| r.gen_bool(0.3)).collect();
        chain_graph(&ChainShape { circles, cut_touched })?
    } else {
        necklace_graph(r.gen_range(2..=4))?
    };
    for _ in 0..r.gen_range(0..=2) {
        let pos: Vec<usize> = (0..g.edge_count()).filter(|&e| g.edges()[e].sign == Sign::Positive).collect();
        let e = pos[r.gen_range(0..pos.len())];
        g = g.bisect(e)?;
    }
    if r.gen_bool(0.5) {
        let pos: Vec<usize> = (0..g.edge_count()).filter(|&e| g.edges()[e].sign == Sign::Positive).collect();
        let e = pos[r.gen_range(0..pos.len())];
        g = g.triple(e)?;
    }
    let mut d = g.to_diagram()?;
    match r.gen_range(0..6) {
        0 | 1 => d = d.connected_sum(&torus_2(r.gen_range(2..=4)))?,
        2 => d = d.connected_sum(&positive_diagram(seed.wrapping_add(1), r.gen_range(3..=5))?)?,
        _ => {}
    }
    Ok(d)
}
