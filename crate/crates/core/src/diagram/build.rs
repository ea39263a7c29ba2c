//! Unoriented shadows, tangle algebra and pretzel diagrams.
//!
//! A [`Shadow`] is a 4-valent planar map whose crossings know which straight
//! strand is on top but carry no orientation. Orienting the components turns it
//! into a [`Diagram`].

use alloc::vec;
use alloc::vec::Vec;

use super::{splice, walk_faces, Crossing, Diagram, DiagramError, End, Faces};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shadow {
    pub(crate) links: Vec<[End; 4]>,
    /// True when the over-strand occupies slots 1 and 3.
    pub(crate) over_odd: Vec<bool>,
    pub(crate) free_loops: usize,
}

impl Shadow {
    pub fn from_diagram(d: &Diagram) -> Shadow {
        Shadow { links: d.crossings.iter().map(|c| c.links).collect(), over_odd: vec![true; d.crossings.len()], free_loops: d.free_loops }
    }

    pub fn len(&self) -> usize {
        self.links.len()
    }

    pub fn is_empty(&self) -> bool {
        self.links.is_empty()
    }

    pub fn link(&self, e: End) -> End {
        self.links[e.crossing][e.slot as usize]
    }

    pub fn faces(&self) -> Faces {
        walk_faces(self.links.len(), |e| self.link(e))
    }

    pub fn nugatory(&self) -> Vec<usize> {
        let f = self.faces();
        (0..self.len()).filter(|&x| f.corner_face[x][0] == f.corner_face[x][2] || f.corner_face[x][1] == f.corner_face[x][3]).collect()
    }

    /// Components as lists of ends `(crossing, slot)` through which the traversal leaves.
    pub fn strands(&self) -> Vec<Vec<End>> {
        let mut seen = vec![[false; 4]; self.len()];
        let mut out = Vec::new();
        for x in 0..self.len() {
            for s in 0..4u8 {
                if seen[x][s as usize] {
                    continue;
                }
                let mut comp = Vec::new();
                let mut e = End::new(x, s);
                while !seen[e.crossing][e.slot as usize] {
                    seen[e.crossing][e.slot as usize] = true;
                    comp.push(e);
                    let a = self.link(e);
                    seen[a.crossing][a.slot as usize] = true;
                    e = End::new(a.crossing, (a.slot + 2) % 4);
                }
                out.push(comp);
            }
        }
        out
    }

    /// Deletes crossing `x`, letting both strands pass straight through.
    pub fn untwist(&self, x: usize) -> Shadow {
        let mut pairing = vec![None; self.len()];
        pairing[x] = Some(Diagram::STRAIGHT);
        let (links, _, loops) = splice(&self.links, &pairing);
        let mut over_odd = self.over_odd.clone();
        over_odd.remove(x);
        Shadow { links, over_odd, free_loops: self.free_loops + loops }
    }

    /// Inserts a crossing inside face `face`, joining the two boundary edges at
    /// positions `i` and `j` of the face walk (they must be different edges).
    pub fn insert_in_face(&mut self, faces: &Faces, face: usize, i: usize, j: usize) {
        let f = &faces.faces[face];
        let edge = |k: usize| {
            let c = f[k];
            let a = End::new(c.crossing, (c.index + 1) % 4);
            (a, self.link(a))
        };
        let (a, b) = edge(i);
        let (c, d) = edge(j);
        let x = self.links.len();
        // counterclockwise at the new crossing: a, d, c, b
        self.links.push([a, d, c, b]);
        self.over_odd.push(true);
        for (k, e) in [a, d, c, b].into_iter().enumerate() {
            self.links[e.crossing][e.slot as usize] = End::new(x, k as u8);
        }
    }

    /// Orients components: `reverse[k]` reverses the traversal direction of
    /// component `k` of [`Shadow::strands`].
    pub fn orient(&self, reverse: &[bool]) -> Diagram {
        let incoming = self.incoming_slots(reverse);
        let n = self.len();
        let mut rot = vec![0u8; n];
        let mut over_in = vec![0u8; n];
        for x in 0..n {
            let even = if incoming[x][0] { 0 } else { 2 };
            let odd = if incoming[x][1] { 1 } else { 3 };
            let (under, over) = if self.over_odd[x] { (even, odd) } else { (odd, even) };
            rot[x] = under;
            over_in[x] = (over + 4 - under) % 4;
        }
        self.rotate(&rot, &over_in)
    }

    /// Orients components and chooses every crossing positive.
    pub fn orient_positive(&self, reverse: &[bool]) -> Diagram {
        let incoming = self.incoming_slots(reverse);
        let n = self.len();
        let mut rot = vec![0u8; n];
        let over_in = vec![3u8; n];
        for x in 0..n {
            let even = if incoming[x][0] { 0u8 } else { 2 };
            let odd = if incoming[x][1] { 1u8 } else { 3 };
            // positive: over comes in just clockwise of the under-in slot
            rot[x] = if odd == (even + 3) % 4 { even } else { odd };
        }
        self.rotate(&rot, &over_in)
    }

    fn incoming_slots(&self, reverse: &[bool]) -> Vec<[bool; 4]> {
        let mut incoming = vec![[false; 4]; self.len()];
        for (k, comp) in self.strands().iter().enumerate() {
            let rev = reverse.get(k).copied().unwrap_or(false);
            for &e in comp {
                let i = if rev { e } else { self.link(e) };
                incoming[i.crossing][i.slot as usize] = true;
            }
        }
        incoming
    }

    fn rotate(&self, rot: &[u8], over_in: &[u8]) -> Diagram {
        let crossings = (0..self.len())
            .map(|x| {
                let mut links = [End::new(0, 0); 4];
                for k in 0..4u8 {
                    let e = self.links[x][((k + rot[x]) % 4) as usize];
                    links[k as usize] = End::new(e.crossing, (e.slot + 4 - rot[e.crossing]) % 4);
                }
                Crossing { links, over_in: over_in[x] }
            })
            .collect();
        Diagram::raw(crossings, self.free_loops)
    }
}

/// Boundary positions of a tangle.
pub const NW: usize = 0;
pub const NE: usize = 1;
pub const SE: usize = 2;
pub const SW: usize = 3;

// single crossing slots, counterclockwise from NE
const SLOT_NE: u8 = 0;
const SLOT_NW: u8 = 1;
const SLOT_SW: u8 = 2;
const SLOT_SE: u8 = 3;

/// A four-ended tangle built from crossings; every boundary end sits on a crossing.
#[derive(Clone, Debug)]
pub struct Tangle {
    sh: Shadow,
    ends: [End; 4],
}

impl Tangle {
    /// One crossing. Sign `+1` puts the NW–SE strand on top.
    pub fn crossing(sign: i32) -> Tangle {
        let dummy = End::new(usize::MAX, 0);
        Tangle {
            sh: Shadow { links: vec![[dummy; 4]], over_odd: vec![sign > 0], free_loops: 0 },
            ends: [End::new(0, SLOT_NW), End::new(0, SLOT_NE), End::new(0, SLOT_SE), End::new(0, SLOT_SW)],
        }
    }

    pub fn crossing_count(&self) -> usize {
        self.sh.len()
    }

    fn join(sh: &mut Shadow, a: End, b: End) {
        sh.links[a.crossing][a.slot as usize] = b;
        sh.links[b.crossing][b.slot as usize] = a;
    }

    fn absorb(&mut self, other: &Tangle) -> [End; 4] {
        let n = self.sh.len();
        for (l, o) in other.sh.links.iter().zip(&other.sh.over_odd) {
            let mut l = *l;
            for e in l.iter_mut() {
                if e.crossing != usize::MAX {
                    e.crossing += n;
                }
            }
            self.sh.links.push(l);
            self.sh.over_odd.push(*o);
        }
        other.ends.map(|e| End::new(e.crossing + n, e.slot))
    }

    /// Side-by-side sum `self + other`.
    pub fn add(mut self, other: &Tangle) -> Tangle {
        let o = self.absorb(other);
        Self::join(&mut self.sh, self.ends[NE], o[NW]);
        Self::join(&mut self.sh, self.ends[SE], o[SW]);
        self.ends = [self.ends[NW], o[NE], o[SE], self.ends[SW]];
        self
    }

    /// `self` stacked on top of `other`.
    pub fn stack(mut self, other: &Tangle) -> Tangle {
        let o = self.absorb(other);
        Self::join(&mut self.sh, self.ends[SW], o[NW]);
        Self::join(&mut self.sh, self.ends[SE], o[NE]);
        self.ends = [self.ends[NW], self.ends[NE], o[SE], o[SW]];
        self
    }

    /// Vertical twist of `|n|` crossings (`n != 0`).
    pub fn vertical(n: i32) -> Tangle {
        assert!(n != 0);
        let s = n.signum();
        (1..n.abs()).fold(Tangle::crossing(s), |t, _| t.stack(&Tangle::crossing(s)))
    }

    /// Horizontal twist of `|n|` crossings (`n != 0`).
    pub fn horizontal(n: i32) -> Tangle {
        assert!(n != 0);
        let s = n.signum();
        (1..n.abs()).fold(Tangle::crossing(s), |t, _| t.add(&Tangle::crossing(s)))
    }

    /// Numerator closure: NW–NE and SW–SE joined by arcs.
    pub fn numerator(mut self) -> Shadow {
        Self::join(&mut self.sh, self.ends[NW], self.ends[NE]);
        Self::join(&mut self.sh, self.ends[SW], self.ends[SE]);
        self.sh
    }

    /// Denominator closure: NW–SW and NE–SE joined by arcs.
    pub fn denominator(mut self) -> Shadow {
        Self::join(&mut self.sh, self.ends[NW], self.ends[SW]);
        Self::join(&mut self.sh, self.ends[NE], self.ends[SE]);
        self.sh
    }

    /// Boundary end at a position, for locating twist regions after closure.
    pub fn end(&self, pos: usize) -> End {
        self.ends[pos]
    }
}

/// Orientation requirement for one twist region of a pretzel diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwistScheme {
    /// The two strands of the region run in opposite directions.
    Reverse,
    /// Both strands run the same way.
    Parallel,
    Any,
}

/// The pretzel diagram `(p_1, ..., p_k)` (twist regions side by side, numerator
/// closure), oriented so that every region satisfies its scheme. Positive entries
/// are twists whose reverse-oriented crossings are positive.
pub fn pretzel(entries: &[i32], schemes: &[TwistScheme]) -> Result<Diagram, DiagramError> {
    if entries.is_empty() || entries.contains(&0) {
        return Err(DiagramError::Precondition("pretzel entries must be nonzero".into()));
    }
    if schemes.len() != entries.len() && schemes.len() != 1 {
        return Err(DiagramError::Precondition("one scheme per entry (or one for all)".into()));
    }
    let mut tops = Vec::new();
    let mut t: Option<Tangle> = None;
    for &p in entries {
        let v = Tangle::vertical(p);
        let base = t.as_ref().map_or(0, |t| t.crossing_count());
        tops.push(base);
        t = Some(match t {
            None => v,
            Some(t) => t.add(&v),
        });
    }
    let sh = t.unwrap().numerator();
    let comps = sh.strands().len();
    if comps > 20 {
        return Err(DiagramError::Precondition("too many components to search orientations".into()));
    }
    for mask in 0u32..(1 << comps) {
        let rev: Vec<bool> = (0..comps).map(|k| mask >> k & 1 == 1).collect();
        let d = sh.orient(&rev);
        let inc = sh.incoming_slots(&rev);
        let ok = tops.iter().enumerate().all(|(k, &x)| {
            let scheme = schemes[if schemes.len() == 1 { 0 } else { k }];
            // top crossing of the region: strands parallel iff both enter from the same side
            let from_top = usize::from(inc[x][SLOT_NW as usize]) + usize::from(inc[x][SLOT_NE as usize]);
            let parallel = from_top != 1;
            match scheme {
                TwistScheme::Any => true,
                TwistScheme::Reverse => !parallel,
                TwistScheme::Parallel => parallel,
            }
        });
        if ok {
            d.validate()?;
            return Ok(d);
        }
    }
    Err(DiagramError::Precondition("no orientation satisfies the twist schemes".into()))
}

/// The `(3, ..., 3, -1)`-pretzel with `n` threes, every twist region
/// reverse-oriented: `3n` positive crossings and one negative.
pub fn pretzel_three_minus_one(n: usize) -> Result<Diagram, DiagramError> {
    if n == 0 {
        return Err(DiagramError::Precondition("need at least one column of 3".into()));
    }
    let entries: Vec<i32> = core::iter::repeat_n(3, n).chain([-1]).collect();
    pretzel(&entries, &[TwistScheme::Reverse])
}

/// The same link with the `-1` merged into its neighbouring column: the
/// rational column `(-2 -1)` followed by `n - 1` columns of 3, `3n`
/// crossings, oriented with a single negative crossing.
pub fn pretzel_three_merged(n: usize) -> Result<Diagram, DiagramError> {
    if n < 2 {
        return Err(DiagramError::Precondition("need at least two columns".into()));
    }
    let first = Tangle::horizontal(-2).stack(&Tangle::crossing(-1));
    let sh = (1..n).fold(first, |t, _| t.add(&Tangle::vertical(3))).numerator();
    let comps = sh.strands().len();
    for mask in 0u32..(1 << comps) {
        let rev: Vec<bool> = (0..comps).map(|k| mask >> k & 1 == 1).collect();
        let d = sh.orient(&rev);
        if d.negative_crossings().len() == 1 {
            d.validate()?;
            return Ok(d);
        }
    }
    Err(DiagramError::Precondition("no almost positive orientation".into()))
}

/// Closure of `(σ_1)^n` on two strands.
pub fn torus_2(n: i32) -> Diagram {
    let word = if n >= 0 { vec![1; n as usize] } else { vec![-1; (-n) as usize] };
    Diagram::from_braid(&super::Braid { strands: 2, word })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pretzel_sizes() {
        let d = pretzel(&[3, 3, 3, -1], &[TwistScheme::Reverse]).unwrap();
        assert_eq!(d.crossing_count(), 10);
        assert_eq!(d.component_count(), 2);
        let c = pretzel(&[2, 2], &[TwistScheme::Reverse]).unwrap();
        assert_eq!(c.crossing_count(), 4);
        assert!(c.is_positive());
    }

    #[test]
    fn reverse_positive_entries_are_positive() {
        let d = pretzel(&[3, 3, 3, -1], &[TwistScheme::Reverse]).unwrap();
        assert_eq!(d.negative_crossings().len(), 1);
    }

    #[test]
    fn positive_orientation_of_shadow() {
        let sh = Tangle::vertical(3).add(&Tangle::vertical(-2)).numerator();
        for mask in 0..4u32 {
            let rev = [mask & 1 == 1, mask & 2 == 2];
            let d = sh.orient_positive(&rev);
            d.validate().unwrap();
            assert!(d.is_positive());
        }
    }

    #[test]
    fn merged_column_family() {
        for n in 2..=5 {
            let l = pretzel_three_minus_one(n).unwrap();
            let d = pretzel_three_merged(n).unwrap();
            assert_eq!(l.crossing_count(), 3 * n + 1);
            assert_eq!(d.crossing_count(), 3 * n);
            assert_eq!(d.negative_crossings().len(), 1);
            assert_eq!(l.component_count(), d.component_count());
            assert_eq!(d.component_count(), if n % 2 == 1 { 2 } else { 1 });
            let jl = crate::bracket::jones(&l, 1 << 20).unwrap();
            let jd = crate::bracket::jones(&d, 1 << 20).unwrap();
            assert_eq!(jl, jd);
            assert_eq!(crate::bracket::is_b_adequate(&d), n >= 3);
        }
    }
}
