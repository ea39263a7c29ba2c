//! Seifert circles, the Seifert graph, smoothed regions and the Murasugi
//! decomposition along separating circles.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::diagram::{Diagram, End, Sign};
use crate::unionfind::UnionFind;

#[derive(Clone, Debug)]
pub struct SeifertData {
    /// Each circle as the cyclic list of outgoing ends of its edges; free loops are empty.
    pub circles: Vec<Vec<End>>,
    /// Circle of each edge (by [`Diagram::edge_index`]).
    pub edge_circle: Vec<usize>,
    /// Per crossing: the circle through its under-in/over-out arc and the one
    /// through its over-in/under-out arc.
    pub crossing_circles: Vec<(usize, usize)>,
}

impl SeifertData {
    pub fn new(d: &Diagram) -> SeifertData {
        let n = d.crossing_count();
        let mut edge_circle = vec![usize::MAX; 2 * n];
        let mut circles = Vec::new();
        for e0 in d.edges() {
            if edge_circle[d.edge_index(e0)] != usize::MAX {
                continue;
            }
            let id = circles.len();
            let mut circle = Vec::new();
            let mut e = e0;
            loop {
                edge_circle[d.edge_index(e)] = id;
                circle.push(e);
                let h = d.link(e);
                e = End::new(h.crossing, d.crossing(h.crossing).seifert_partner(h.slot));
                if e == e0 {
                    break;
                }
            }
            circles.push(circle);
        }
        for _ in 0..d.free_loops() {
            circles.push(Vec::new());
        }
        let crossing_circles = (0..n)
            .map(|x| {
                let c = d.crossing(x);
                (edge_circle[d.edge_index(End::new(x, c.over_out()))], edge_circle[d.edge_index(End::new(x, 2))])
            })
            .collect();
        SeifertData { circles, edge_circle, crossing_circles }
    }

    pub fn count(&self) -> usize {
        self.circles.len()
    }

    fn pair(&self, x: usize) -> (usize, usize) {
        let (a, b) = self.crossing_circles[x];
        (a.min(b), a.max(b))
    }

    /// Number of crossings attached to each circle.
    pub fn valency(&self) -> Vec<usize> {
        let mut v = vec![0; self.circles.len()];
        for &(a, b) in &self.crossing_circles {
            v[a] += 1;
            v[b] += 1;
        }
        v
    }

    /// Whether another crossing joins the same two circles as `x`.
    pub fn has_parallel_partner(&self, x: usize) -> bool {
        let p = self.pair(x);
        (0..self.crossing_circles.len()).any(|y| y != x && self.pair(y) == p)
    }

    pub fn graph(&self, d: &Diagram) -> SeifertGraph {
        SeifertGraph {
            vertices: self.circles.len(),
            edges: (0..d.crossing_count()).map(|x| (self.crossing_circles[x].0, self.crossing_circles[x].1, d.sign(x))).collect(),
        }
    }
}

/// Vertices are Seifert circles, edges are crossings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeifertGraph {
    pub vertices: usize,
    pub edges: Vec<(usize, usize, Sign)>,
}

impl SeifertGraph {
    /// One edge per adjacent pair of circles.
    pub fn reduced(&self) -> SeifertGraph {
        let mut seen = BTreeMap::new();
        for &(a, b, s) in &self.edges {
            seen.entry((a.min(b), a.max(b))).or_insert(s);
        }
        SeifertGraph { vertices: self.vertices, edges: seen.into_iter().map(|((a, b), s)| (a, b, s)).collect() }
    }

    pub fn components(&self) -> usize {
        let mut uf = UnionFind::new(self.vertices);
        for &(a, b, _) in &self.edges {
            uf.union(a, b);
        }
        uf.count()
    }

    /// First Betti number `E - V + components`.
    pub fn betti1(&self) -> usize {
        self.edges.len() + self.components() - self.vertices
    }
}

pub fn seifert_circle_count(d: &Diagram) -> usize {
    SeifertData::new(d).count()
}

/// `χ(D) = s(D) - c(D)`, the Euler characteristic of the canonical surface.
pub fn euler_characteristic(d: &Diagram) -> i64 {
    seifert_circle_count(d) as i64 - d.crossing_count() as i64
}

/// Bennequin number `w(D) - s(D) + 1`.
pub fn bennequin(d: &Diagram) -> i64 {
    d.writhe() - seifert_circle_count(d) as i64 + 1
}

/// Circles of valency at least two that touch at least one non-nugatory
/// crossing, all of whose non-nugatory crossings are negative.
pub fn negative_circle_count(d: &Diagram) -> usize {
    let sd = SeifertData::new(d);
    let nug = d.nugatory_crossings();
    let val = sd.valency();
    let mut pos = vec![false; sd.count()];
    let mut neg = vec![false; sd.count()];
    for x in 0..d.crossing_count() {
        if nug.contains(&x) {
            continue;
        }
        let (a, b) = sd.crossing_circles[x];
        let flag = if d.sign(x) == Sign::Positive { &mut pos } else { &mut neg };
        flag[a] = true;
        flag[b] = true;
    }
    (0..sd.count()).filter(|&c| val[c] >= 2 && neg[c] && !pos[c]).count()
}

/// Rudolph's refinement of the Bennequin number: `b(D) + 2 s_-(D)`.
pub fn rudolph_bennequin(d: &Diagram) -> i64 {
    bennequin(d) + 2 * negative_circle_count(d) as i64
}

/// Regions of the plane cut by the Seifert circles (unions of faces).
#[derive(Clone, Debug)]
pub struct Regions {
    pub face_region: Vec<usize>,
    pub count: usize,
    /// Per circle: regions to its left and right.
    pub circle_sides: Vec<(usize, usize)>,
    pub crossing_region: Vec<usize>,
}

impl Regions {
    pub fn new(d: &Diagram, sd: &SeifertData) -> Regions {
        let faces = d.faces();
        let nf = faces.faces.len();
        let mut uf = UnionFind::new(nf);
        for x in 0..d.crossing_count() {
            let c = d.crossing(x);
            uf.union(faces.corner_face[x][c.in_in_corner() as usize], faces.corner_face[x][c.out_out_corner() as usize]);
        }
        let (face_region, count) = uf.labels();
        let circle_sides = sd
            .circles
            .iter()
            .map(|circ| match circ.first() {
                Some(e) => {
                    let l = faces.corner_face[e.crossing][e.slot as usize];
                    let r = faces.corner_face[e.crossing][((e.slot + 3) % 4) as usize];
                    (face_region[l], face_region[r])
                }
                None => (usize::MAX, usize::MAX),
            })
            .collect();
        let crossing_region = (0..d.crossing_count()).map(|x| face_region[faces.corner_face[x][d.crossing(x).in_in_corner() as usize]]).collect();
        Regions { face_region, count, circle_sides, crossing_region }
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.count];
        for &(l, r) in &self.circle_sides {
            if l != usize::MAX {
                deg[l] += 1;
                deg[r] += 1;
            }
        }
        deg
    }
}

/// Circles with crossings on both sides.
pub fn separating_circles(d: &Diagram) -> Vec<usize> {
    if d.crossing_count() == 0 {
        return Vec::new();
    }
    let sd = SeifertData::new(d);
    let rg = Regions::new(d, &sd);
    let deg = rg.degrees();
    (0..sd.count())
        .filter(|&c| {
            let (l, r) = rg.circle_sides[c];
            l != usize::MAX && deg[l] >= 2 && deg[r] >= 2
        })
        .collect()
}

pub fn is_special(d: &Diagram) -> bool {
    separating_circles(d).is_empty()
}

pub fn is_special_alternating(d: &Diagram) -> bool {
    d.is_positive() && is_special(d)
}

#[derive(Clone, Debug)]
pub struct MurasugiDecomposition {
    pub summands: Vec<Diagram>,
    /// Per summand, the original index of each of its crossings.
    pub crossing_maps: Vec<Vec<usize>>,
    /// Per separating circle: the two summands glued along it.
    pub joins: Vec<(usize, usize, usize)>,
}

/// Decomposes along separating circles: one special summand per smoothed
/// region containing crossings.
pub fn murasugi_decomposition(d: &Diagram) -> MurasugiDecomposition {
    if d.crossing_count() == 0 {
        return MurasugiDecomposition { summands: vec![d.clone()], crossing_maps: vec![Vec::new()], joins: Vec::new() };
    }
    let sd = SeifertData::new(d);
    let rg = Regions::new(d, &sd);
    let mut by_region: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for x in 0..d.crossing_count() {
        by_region.entry(rg.crossing_region[x]).or_default().push(x);
    }
    let mut order: Vec<(usize, Vec<usize>)> = by_region.into_iter().collect();
    order.sort_by_key(|(_, xs)| xs[0]);
    let index: BTreeMap<usize, usize> = order.iter().enumerate().map(|(k, (r, _))| (*r, k)).collect();
    let deg = rg.degrees();
    let joins = (0..sd.count())
        .filter_map(|c| {
            let (l, r) = rg.circle_sides[c];
            if l == usize::MAX || deg[l] < 2 || deg[r] < 2 {
                return None;
            }
            Some((c, *index.get(&l)?, *index.get(&r)?))
        })
        .collect();
    let summands = order.iter().map(|(_, xs)| d.restrict_along_seifert(xs)).collect();
    MurasugiDecomposition { summands, crossing_maps: order.into_iter().map(|(_, xs)| xs).collect(), joins }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::Braid;

    fn braid(s: &str) -> Diagram {
        Diagram::from_braid(&Braid::parse(s).unwrap())
    }

    #[test]
    fn trefoil_numbers() {
        let d = braid("2: 1 1 1");
        assert_eq!(seifert_circle_count(&d), 2);
        assert_eq!(euler_characteristic(&d), -1);
        assert_eq!(bennequin(&d), 2);
        assert!(is_special(&d));
        let m = d.mirror();
        assert_eq!(bennequin(&m), -4);
        assert_eq!(rudolph_bennequin(&m), 0);
    }

    #[test]
    fn three_braid_middle_circle_separates() {
        let d = braid("3: 1 1 2 2");
        assert_eq!(separating_circles(&d).len(), 1);
        let dec = murasugi_decomposition(&d);
        assert_eq!(dec.summands.len(), 2);
        assert_eq!(dec.joins.len(), 1);
        for s in &dec.summands {
            assert!(is_special(s));
            assert_eq!(s.crossing_count(), 2);
        }
    }

    #[test]
    fn hopf_graph() {
        let d = braid("2: 1 1");
        let g = SeifertData::new(&d).graph(&d);
        assert_eq!(g.betti1(), 1);
        assert_eq!(g.reduced().edges.len(), 1);
    }
}
