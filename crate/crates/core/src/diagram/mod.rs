//! Oriented link diagrams as 4-valent planar maps.
//!
//! Each crossing has four slots in counterclockwise order; slot 0 is where the
//! under-strand comes in (the same convention as a PD code `X[a,b,c,d]`), so the
//! under-strand runs 0 → 2 and the over-strand runs either 1 → 3 (negative) or
//! 3 → 1 (positive). Every slot records the slot at the other end of its edge.

pub mod build;
pub mod random;

use alloc::collections::{BTreeMap, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct End {
    pub crossing: usize,
    pub slot: u8,
}

impl End {
    pub const fn new(crossing: usize, slot: u8) -> Self {
        End { crossing, slot }
    }
}

/// Corner `index` of a crossing lies between slots `index` and `index + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Corner {
    pub crossing: usize,
    pub index: u8,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub(crate) links: [End; 4],
    /// Slot where the over-strand enters: 3 for positive, 1 for negative.
    pub(crate) over_in: u8,
}

impl Crossing {
    pub fn links(&self) -> &[End; 4] {
        &self.links
    }

    pub fn over_in(&self) -> u8 {
        self.over_in
    }

    pub fn over_out(&self) -> u8 {
        (self.over_in + 2) % 4
    }

    pub fn sign(&self) -> Sign {
        if self.over_in == 3 {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub fn is_incoming(&self, slot: u8) -> bool {
        slot == 0 || slot == self.over_in
    }

    pub fn is_over(&self, slot: u8) -> bool {
        slot % 2 == 1
    }

    /// The slot joined to `slot` by the oriented (Seifert) smoothing.
    pub fn seifert_partner(&self, slot: u8) -> u8 {
        let o = self.over_out();
        match slot {
            0 => o,
            2 => self.over_in,
            s if s == o => 0,
            _ => 2,
        }
    }

    /// Corner between the two incoming slots.
    pub fn in_in_corner(&self) -> u8 {
        if self.over_in == 1 {
            0
        } else {
            3
        }
    }

    /// Corner between the two outgoing slots.
    pub fn out_out_corner(&self) -> u8 {
        (self.in_in_corner() + 2) % 4
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DiagramError {
    Parse(String),
    /// An edge label that does not occur exactly twice.
    DanglingLabel(i64),
    Inconsistent(String),
    NonPlanar,
    BadGenerator(i32),
    NotConnected,
    NotReduced { crossing: usize },
    NoSuchCrossing(usize),
    Precondition(String),
    Generator(String),
}

impl fmt::Display for DiagramError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiagramError::Parse(s) => write!(f, "parse error: {s}"),
            DiagramError::DanglingLabel(l) => write!(f, "edge label {l} does not occur exactly twice"),
            DiagramError::Inconsistent(s) => write!(f, "inconsistent orientation: {s}"),
            DiagramError::NonPlanar => f.write_str("crossing data does not describe a planar diagram"),
            DiagramError::BadGenerator(g) => write!(f, "braid generator {g} out of range"),
            DiagramError::NotConnected => f.write_str("diagram is not connected"),
            DiagramError::NotReduced { crossing } => write!(f, "crossing {crossing} is nugatory"),
            DiagramError::NoSuchCrossing(x) => write!(f, "no crossing {x}"),
            DiagramError::Precondition(s) => write!(f, "precondition failed: {s}"),
            DiagramError::Generator(s) => write!(f, "generator failed: {s}"),
        }
    }
}

impl core::error::Error for DiagramError {}

/// Faces of a diagram: each face is the cyclic list of its corners.
#[derive(Clone, Debug)]
pub struct Faces {
    pub faces: Vec<Vec<Corner>>,
    pub corner_face: Vec<[usize; 4]>,
}

impl Faces {
    pub fn face_of(&self, c: Corner) -> usize {
        self.corner_face[c.crossing][c.index as usize]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagram {
    pub(crate) crossings: Vec<Crossing>,
    pub(crate) free_loops: usize,
    pub(crate) outer: Option<Corner>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Braid {
    pub strands: usize,
    pub word: Vec<i32>,
}

impl Braid {
    pub fn new(strands: usize, word: Vec<i32>) -> Result<Self, DiagramError> {
        if strands == 0 {
            return Err(DiagramError::Parse("braid needs at least one strand".into()));
        }
        for &g in &word {
            if g == 0 || g.unsigned_abs() as usize >= strands {
                return Err(DiagramError::BadGenerator(g));
            }
        }
        Ok(Braid { strands, word })
    }

    /// Parses `"n: g1 g2 ..."` with signed generator indices.
    pub fn parse(s: &str) -> Result<Self, DiagramError> {
        let (n, w) = s.split_once(':').ok_or_else(|| DiagramError::Parse("expected `strands: word`".into()))?;
        let strands = n.trim().parse().map_err(|_| DiagramError::Parse(format!("bad strand count {:?}", n.trim())))?;
        let word = w
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<i32>().map_err(|_| DiagramError::Parse(format!("bad generator {t:?}"))))
            .collect::<Result<Vec<_>, _>>()?;
        Braid::new(strands, word)
    }

    pub fn writhe(&self) -> i64 {
        self.word.iter().map(|g| g.signum() as i64).sum()
    }
}

impl fmt::Display for Braid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.strands)?;
        for g in &self.word {
            write!(f, " {g}")?;
        }
        Ok(())
    }
}

impl Diagram {
    /// Builds and validates a diagram from raw crossings.
    pub fn from_crossings(crossings: Vec<Crossing>, free_loops: usize) -> Result<Self, DiagramError> {
        let d = Diagram { crossings, free_loops, outer: None };
        d.validate()?;
        Ok(d)
    }

    pub(crate) fn raw(crossings: Vec<Crossing>, free_loops: usize) -> Self {
        Diagram { crossings, free_loops, outer: None }
    }

    pub fn unknot() -> Self {
        Diagram { crossings: Vec::new(), free_loops: 1, outer: None }
    }

    pub fn unlink(n: usize) -> Self {
        Diagram { crossings: Vec::new(), free_loops: n, outer: None }
    }

    pub fn validate(&self) -> Result<(), DiagramError> {
        let n = self.crossings.len();
        for (x, c) in self.crossings.iter().enumerate() {
            if c.over_in != 1 && c.over_in != 3 {
                return Err(DiagramError::Inconsistent(format!("crossing {x} has over-in slot {}", c.over_in)));
            }
            for s in 0..4u8 {
                let e = c.links[s as usize];
                if e.crossing >= n || e.slot > 3 {
                    return Err(DiagramError::Inconsistent(format!("crossing {x} slot {s} links outside the diagram")));
                }
                if self.link(e) != End::new(x, s) {
                    return Err(DiagramError::Inconsistent(format!("link at crossing {x} slot {s} is not symmetric")));
                }
                let here_in = c.is_incoming(s);
                let there_in = self.crossings[e.crossing].is_incoming(e.slot);
                if here_in == there_in {
                    return Err(DiagramError::Inconsistent(format!("edge at crossing {x} slot {s} joins two same-direction ends")));
                }
            }
        }
        let faces = self.faces();
        let mut comp_faces = BTreeMap::new();
        let comps = self.crossing_components();
        let mut comp_of = vec![0usize; n];
        for (k, cs) in comps.iter().enumerate() {
            for &x in cs {
                comp_of[x] = k;
            }
        }
        for f in &faces.faces {
            *comp_faces.entry(comp_of[f[0].crossing]).or_insert(0usize) += 1;
        }
        for (k, cs) in comps.iter().enumerate() {
            if comp_faces.get(&k).copied().unwrap_or(0) != cs.len() + 2 {
                return Err(DiagramError::NonPlanar);
            }
        }
        Ok(())
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing(&self, x: usize) -> &Crossing {
        &self.crossings[x]
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn outer_corner(&self) -> Option<Corner> {
        self.outer
    }

    pub fn set_outer_corner(&mut self, c: Option<Corner>) {
        self.outer = c;
    }

    pub fn link(&self, e: End) -> End {
        self.crossings[e.crossing].links[e.slot as usize]
    }

    pub fn sign(&self, x: usize) -> Sign {
        self.crossings[x].sign()
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign().value()).sum()
    }

    pub fn negative_crossings(&self) -> Vec<usize> {
        (0..self.crossings.len()).filter(|&x| self.sign(x) == Sign::Negative).collect()
    }

    pub fn is_positive(&self) -> bool {
        self.crossings.iter().all(|c| c.sign() == Sign::Positive)
    }

    pub fn is_almost_positive(&self) -> bool {
        self.negative_crossings().len() == 1
    }

    /// The two outgoing ends of every crossing: these name the edges.
    pub fn edges(&self) -> Vec<End> {
        let mut v = Vec::with_capacity(2 * self.crossings.len());
        for (x, c) in self.crossings.iter().enumerate() {
            v.push(End::new(x, 2));
            v.push(End::new(x, c.over_out()));
        }
        v
    }

    /// Dense edge index of any end (both ends of an edge get the same index).
    pub fn edge_index(&self, e: End) -> usize {
        let c = &self.crossings[e.crossing];
        let tail = if c.is_incoming(e.slot) { self.link(e) } else { e };
        2 * tail.crossing + usize::from(tail.slot != 2)
    }

    /// Link components with at least one crossing, each as the cyclic list of
    /// outgoing ends met along the orientation.
    pub fn components(&self) -> Vec<Vec<End>> {
        let mut seen = vec![false; 2 * self.crossings.len()];
        let mut out = Vec::new();
        for start in self.edges() {
            if seen[self.edge_index(start)] {
                continue;
            }
            let mut comp = Vec::new();
            let mut e = start;
            loop {
                seen[self.edge_index(e)] = true;
                comp.push(e);
                let h = self.link(e);
                e = End::new(h.crossing, (h.slot + 2) % 4);
                if e == start {
                    break;
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn component_count(&self) -> usize {
        self.components().len() + self.free_loops
    }

    /// Walks faces: from corner (x, s) leave through slot s+1; the arrival end is the next corner.
    pub fn faces(&self) -> Faces {
        walk_faces(self.crossings.len(), |e| self.link(e))
    }

    /// Connected components of the crossing graph.
    pub fn crossing_components(&self) -> Vec<Vec<usize>> {
        let n = self.crossings.len();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut i = 0;
            while i < members.len() {
                let x = members[i];
                i += 1;
                for e in &self.crossings[x].links {
                    if comp[e.crossing] == usize::MAX {
                        comp[e.crossing] = id;
                        members.push(e.crossing);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// A diagram is connected when its projection is: one crossing component and
    /// no free loops, or a single crossingless loop.
    pub fn is_connected(&self) -> bool {
        if self.crossings.is_empty() {
            return self.free_loops == 1;
        }
        self.free_loops == 0 && self.crossing_components().len() == 1
    }

    pub fn is_split(&self) -> bool {
        !self.is_connected()
    }

    pub fn nugatory_crossings(&self) -> Vec<usize> {
        let f = self.faces();
        (0..self.crossings.len())
            .filter(|&x| f.corner_face[x][0] == f.corner_face[x][2] || f.corner_face[x][1] == f.corner_face[x][3])
            .collect()
    }

    pub fn is_nugatory(&self, x: usize) -> bool {
        let f = self.faces();
        f.corner_face[x][0] == f.corner_face[x][2] || f.corner_face[x][1] == f.corner_face[x][3]
    }

    pub fn is_reduced(&self) -> bool {
        self.nugatory_crossings().is_empty()
    }

    fn check_crossing(&self, x: usize) -> Result<(), DiagramError> {
        if x < self.crossings.len() {
            Ok(())
        } else {
            Err(DiagramError::NoSuchCrossing(x))
        }
    }

    /// Switches over/under at `x`, keeping the shadow and the orientation.
    pub fn switch(&self, x: usize) -> Result<Diagram, DiagramError> {
        self.check_crossing(x)?;
        let mut d = self.clone();
        let c = &self.crossings[x];
        // the old over-in becomes the new slot 0
        let r = c.over_in;
        let mut links = [End::new(0, 0); 4];
        for k in 0..4u8 {
            links[k as usize] = c.links[((k + r) % 4) as usize];
        }
        d.crossings[x] = Crossing { links, over_in: (4 - r) % 4 };
        // patch back-links, taking care of edges that return to x itself
        for k in 0..4u8 {
            let old = (k + r) % 4;
            let e = c.links[old as usize];
            if e.crossing == x {
                let new_slot = (e.slot + 4 - r) % 4;
                d.crossings[x].links[k as usize] = End::new(x, new_slot);
            } else {
                d.crossings[e.crossing].links[e.slot as usize] = End::new(x, k);
            }
        }
        if let Some(o) = d.outer {
            if o.crossing == x {
                d.outer = Some(Corner { crossing: x, index: (o.index + 4 - r) % 4 });
            }
        }
        Ok(d)
    }

    pub fn switch_all(&self, xs: &[usize]) -> Result<Diagram, DiagramError> {
        let mut d = self.clone();
        for &x in xs {
            d = d.switch(x)?;
        }
        Ok(d)
    }

    /// Mirror image: every crossing switched.
    pub fn mirror(&self) -> Diagram {
        let all: Vec<usize> = (0..self.crossings.len()).collect();
        self.switch_all(&all).expect("indices in range")
    }

    /// Removes crossings, joining slots inside each removed crossing according to
    /// `pairing` (an involution on 0..4 pairing incoming with outgoing slots).
    /// Closed cycles that no longer meet any crossing become free loops.
    pub fn remove_crossings(&self, removals: &[(usize, [u8; 4])]) -> Diagram {
        let n = self.crossings.len();
        let mut pairing: Vec<Option<[u8; 4]>> = vec![None; n];
        for &(x, p) in removals {
            pairing[x] = Some(p);
        }
        let links: Vec<[End; 4]> = self.crossings.iter().map(|c| c.links).collect();
        let (new_links, new_index, loops) = splice(&links, &pairing);
        let kept = (0..n).filter(|&x| pairing[x].is_none());
        let crossings = kept.zip(new_links).map(|(x, links)| Crossing { links, over_in: self.crossings[x].over_in }).collect();
        let outer = self.outer.and_then(|o| (new_index[o.crossing] != usize::MAX).then(|| Corner { crossing: new_index[o.crossing], index: o.index }));
        Diagram { crossings, free_loops: self.free_loops + loops, outer }
    }

    pub fn seifert_pairing(&self, x: usize) -> [u8; 4] {
        let c = &self.crossings[x];
        [c.seifert_partner(0), c.seifert_partner(1), c.seifert_partner(2), c.seifert_partner(3)]
    }

    pub const STRAIGHT: [u8; 4] = [2, 3, 0, 1];

    /// Oriented smoothing at `x`.
    pub fn smooth(&self, x: usize) -> Result<Diagram, DiagramError> {
        self.check_crossing(x)?;
        Ok(self.remove_crossings(&[(x, self.seifert_pairing(x))]))
    }

    /// Deletes a crossing keeping both strands (valid as an isotopy only for
    /// nugatory crossings, where it untwists one side).
    pub fn untwist(&self, x: usize) -> Result<Diagram, DiagramError> {
        self.check_crossing(x)?;
        Ok(self.remove_crossings(&[(x, Self::STRAIGHT)]))
    }

    /// Repeatedly untwists nugatory crossings.
    pub fn remove_nugatory(&self) -> Diagram {
        let mut d = self.clone();
        loop {
            let nug = d.nugatory_crossings();
            match nug.first() {
                Some(&x) => d = d.untwist(x).unwrap(),
                None => return d,
            }
        }
    }

    /// Closure of a braid: strands run upward, closing arcs pass to the right.
    pub fn from_braid(b: &Braid) -> Diagram {
        let n = b.strands;
        let mut first_in: Vec<Option<End>> = vec![None; n];
        let mut cur_out: Vec<Option<End>> = vec![None; n];
        let mut crossings: Vec<Crossing> = Vec::with_capacity(b.word.len());
        let dummy = End::new(usize::MAX, 0);
        let mut outer = None;
        fn join(cs: &mut [Crossing], a: End, b: End) {
            cs[a.crossing].links[a.slot as usize] = b;
            cs[b.crossing].links[b.slot as usize] = a;
        }
        for (k, &g) in b.word.iter().enumerate() {
            let i = g.unsigned_abs() as usize;
            // (left-in, right-in, left-out, right-out) slots
            let (li, ri, lo, ro, over_in) = if g > 0 { (3, 0, 2, 1, 3) } else { (0, 1, 3, 2, 1) };
            crossings.push(Crossing { links: [dummy; 4], over_in });
            if i == 1 && outer.is_none() {
                outer = Some(Corner { crossing: k, index: if g > 0 { 2 } else { 3 } });
            }
            for (pos, slot) in [(i - 1, li), (i, ri)] {
                let here = End::new(k, slot);
                match cur_out[pos] {
                    Some(o) => join(&mut crossings, o, here),
                    None => first_in[pos] = Some(here),
                }
            }
            cur_out[i - 1] = Some(End::new(k, lo));
            cur_out[i] = Some(End::new(k, ro));
        }
        let mut free = 0;
        for p in 0..n {
            match (cur_out[p], first_in[p]) {
                (Some(o), Some(f)) => join(&mut crossings, o, f),
                _ => free += 1,
            }
        }
        Diagram { crossings, free_loops: free, outer }
    }

    /// Parses a PD code such as `X[4,2,5,1] X[2,6,3,5] X[6,4,1,3]`.
    pub fn parse_pd(s: &str) -> Result<Diagram, DiagramError> {
        let mut quads: Vec<[i64; 4]> = Vec::new();
        let mut rest = s;
        while let Some(pos) = rest.find("X[") {
            let after = &rest[pos + 2..];
            let close = after.find(']').ok_or_else(|| DiagramError::Parse("unclosed X[".into()))?;
            let nums: Vec<i64> = after[..close]
                .split(',')
                .map(|t| t.trim().parse::<i64>().map_err(|_| DiagramError::Parse(format!("bad label {:?}", t.trim()))))
                .collect::<Result<_, _>>()?;
            if nums.len() != 4 {
                return Err(DiagramError::Parse(format!("crossing with {} labels", nums.len())));
            }
            quads.push([nums[0], nums[1], nums[2], nums[3]]);
            rest = &after[close + 1..];
        }
        let leftover = rest.trim().trim_end_matches(']').trim();
        if quads.is_empty() {
            if s.trim().is_empty() || s.trim() == "PD[]" {
                return Ok(Diagram::unknot());
            }
            return Err(DiagramError::Parse("no X[...] crossings found".into()));
        }
        if !leftover.is_empty() && !leftover.chars().all(|c| c == ',' || c == ']' || c.is_whitespace()) {
            return Err(DiagramError::Parse(format!("trailing input {leftover:?}")));
        }
        Self::from_pd(&quads)
    }

    pub fn from_pd(quads: &[[i64; 4]]) -> Result<Diagram, DiagramError> {
        let n = quads.len();
        let mut occ: BTreeMap<i64, Vec<End>> = BTreeMap::new();
        for (x, q) in quads.iter().enumerate() {
            for s in 0..4 {
                occ.entry(q[s]).or_default().push(End::new(x, s as u8));
            }
        }
        for (l, v) in &occ {
            if v.len() != 2 {
                return Err(DiagramError::DanglingLabel(*l));
            }
        }
        let other = |e: End| -> End {
            let v = &occ[&quads[e.crossing][e.slot as usize]];
            if v[0] == e {
                v[1]
            } else {
                v[0]
            }
        };
        // role: Some(true) = incoming
        let mut role = vec![[None::<bool>; 4]; n];
        let mut queue = VecDeque::new();
        let set = |role: &mut Vec<[Option<bool>; 4]>, q: &mut VecDeque<End>, e: End, r: bool| -> Result<(), DiagramError> {
            match role[e.crossing][e.slot as usize] {
                Some(old) if old != r => Err(DiagramError::Inconsistent(format!("label {} at crossing {}", quads[e.crossing][e.slot as usize], e.crossing))),
                Some(_) => Ok(()),
                None => {
                    role[e.crossing][e.slot as usize] = Some(r);
                    q.push_back(e);
                    Ok(())
                }
            }
        };
        for x in 0..n {
            set(&mut role, &mut queue, End::new(x, 0), true)?;
            set(&mut role, &mut queue, End::new(x, 2), false)?;
        }
        let mut next_undecided = 0;
        loop {
            while let Some(e) = queue.pop_front() {
                let r = role[e.crossing][e.slot as usize].unwrap();
                set(&mut role, &mut queue, other(e), !r)?;
                if e.slot % 2 == 1 {
                    set(&mut role, &mut queue, End::new(e.crossing, (e.slot + 2) % 4), !r)?;
                }
            }
            while next_undecided < n && role[next_undecided][1].is_some() {
                next_undecided += 1;
            }
            if next_undecided == n {
                break;
            }
            // A component that is over everywhere: fall back on label succession.
            let x = next_undecided;
            let (b, d) = (quads[x][1], quads[x][3]);
            let b_in = if d == b + 1 {
                true
            } else if b == d + 1 {
                false
            } else {
                b > d
            };
            set(&mut role, &mut queue, End::new(x, 1), b_in)?;
        }
        let mut crossings = Vec::with_capacity(n);
        for x in 0..n {
            let over_in = if role[x][1] == Some(true) { 1 } else { 3 };
            let mut links = [End::new(0, 0); 4];
            for s in 0..4u8 {
                links[s as usize] = other(End::new(x, s));
            }
            crossings.push(Crossing { links, over_in });
        }
        Diagram::from_crossings(crossings, 0)
    }

    /// PD code with edges numbered consecutively along each component.
    pub fn to_pd(&self) -> String {
        let mut label = vec![0usize; 2 * self.crossings.len()];
        let mut next = 1;
        for comp in self.components() {
            for e in comp {
                label[self.edge_index(e)] = next;
                next += 1;
            }
        }
        let mut s = String::new();
        for (x, c) in self.crossings.iter().enumerate() {
            if x > 0 {
                s.push(' ');
            }
            let l = |k: u8| label[self.edge_index(End::new(x, k))];
            s.push_str(&format!("X[{},{},{},{}]", l(0), l(1), l(2), l(3)));
            let _ = c;
        }
        s
    }

    /// Canonical code of the diagram up to relabelling of crossings.
    pub fn canonical_code(&self) -> Vec<u32> {
        let mut comps: Vec<Vec<u32>> = self.crossing_components().iter().map(|cs| self.component_code(cs)).collect();
        comps.sort();
        let mut out = vec![self.free_loops as u32, comps.len() as u32];
        for c in comps {
            out.push(c.len() as u32);
            out.extend(c);
        }
        out
    }

    fn component_code(&self, members: &[usize]) -> Vec<u32> {
        let size = members.len();
        let mut best: Option<Vec<u32>> = None;
        let mut label = vec![u32::MAX; self.crossings.len()];
        for &root in members {
            for &m in members {
                label[m] = u32::MAX;
            }
            let mut order = Vec::with_capacity(size);
            label[root] = 0;
            order.push(root);
            let mut code = Vec::with_capacity(5 * size);
            let mut i = 0;
            while i < order.len() {
                let x = order[i];
                i += 1;
                let c = &self.crossings[x];
                code.push(c.over_in as u32);
                for e in &c.links {
                    if label[e.crossing] == u32::MAX {
                        label[e.crossing] = order.len() as u32;
                        order.push(e.crossing);
                    }
                    code.push(label[e.crossing] * 4 + e.slot as u32);
                }
                if let Some(b) = &best {
                    if code.as_slice() > &b[..code.len()] {
                        break;
                    }
                }
            }
            if code.len() == 5 * size && best.as_ref().is_none_or(|b| code < *b) {
                best = Some(code);
            }
        }
        best.unwrap_or_default()
    }

    /// Relabels so crossings within a connected component are renumbered.
    pub fn sub_diagram(&self, members: &[usize]) -> Diagram {
        let mut idx = vec![usize::MAX; self.crossings.len()];
        for (k, &x) in members.iter().enumerate() {
            idx[x] = k;
        }
        let crossings = members
            .iter()
            .map(|&x| {
                let c = &self.crossings[x];
                let mut links = c.links;
                for l in links.iter_mut() {
                    *l = End::new(idx[l.crossing], l.slot);
                }
                Crossing { links, over_in: c.over_in }
            })
            .collect();
        let outer = self.outer.and_then(|o| (idx[o.crossing] != usize::MAX).then(|| Corner { crossing: idx[o.crossing], index: o.index }));
        Diagram { crossings, free_loops: 0, outer }
    }

    /// Connected pieces of a split diagram, free loops returned as a count.
    pub fn split_components(&self) -> (Vec<Diagram>, usize) {
        (self.crossing_components().iter().map(|m| self.sub_diagram(m)).collect(), self.free_loops)
    }

    pub fn disjoint_union(&self, other: &Diagram) -> Diagram {
        let n = self.crossings.len();
        let mut crossings = self.crossings.clone();
        for c in &other.crossings {
            let mut links = c.links;
            for l in links.iter_mut() {
                l.crossing += n;
            }
            crossings.push(Crossing { links, over_in: c.over_in });
        }
        Diagram { crossings, free_loops: self.free_loops + other.free_loops, outer: self.outer }
    }

    /// Connected sum along the edges leaving slot 2 of crossing 0 in each diagram.
    pub fn connected_sum(&self, other: &Diagram) -> Result<Diagram, DiagramError> {
        if !self.is_connected() || !other.is_connected() {
            return Err(DiagramError::NotConnected);
        }
        if self.crossings.is_empty() {
            return Ok(other.clone());
        }
        if other.crossings.is_empty() {
            return Ok(self.clone());
        }
        let n = self.crossings.len();
        let mut d = self.disjoint_union(other);
        let ta = End::new(0, 2);
        let ha = self.link(ta);
        let tb = End::new(n, 2);
        let hb = d.link(tb);
        d.crossings[ta.crossing].links[ta.slot as usize] = hb;
        d.crossings[hb.crossing].links[hb.slot as usize] = ta;
        d.crossings[tb.crossing].links[tb.slot as usize] = ha;
        d.crossings[ha.crossing].links[ha.slot as usize] = tb;
        Ok(d)
    }

    /// Inserts a Reidemeister-I kink of the given sign on the edge leaving `tail`.
    pub fn add_kink(&self, tail: End, sign: Sign) -> Result<Diagram, DiagramError> {
        self.check_crossing(tail.crossing)?;
        if self.crossings[tail.crossing].is_incoming(tail.slot) {
            return Err(DiagramError::Precondition("kink must be placed on an outgoing end".into()));
        }
        let head = self.link(tail);
        let k = self.crossings.len();
        let mut d = self.clone();
        let links = match sign {
            // 0 in, exits 2, loops into 3, leaves by 1
            Sign::Positive => [tail, head, End::new(k, 3), End::new(k, 2)],
            // 0 in, exits 2, loops into 1, leaves by 3
            Sign::Negative => [tail, End::new(k, 2), End::new(k, 1), head],
        };
        let over_in = if sign == Sign::Positive { 3 } else { 1 };
        d.crossings.push(Crossing { links, over_in });
        d.crossings[tail.crossing].links[tail.slot as usize] = End::new(k, 0);
        let hs = if sign == Sign::Positive { 1 } else { 3 };
        d.crossings[head.crossing].links[head.slot as usize] = End::new(k, hs);
        Ok(d)
    }

    /// Diagram on the crossings `keep`, where every strand leaving a kept crossing
    /// follows Seifert arcs through the other crossings until it meets a kept one.
    pub fn restrict_along_seifert(&self, keep: &[usize]) -> Diagram {
        let removals: Vec<(usize, [u8; 4])> = {
            let mut mask = vec![false; self.crossings.len()];
            for &x in keep {
                mask[x] = true;
            }
            (0..self.crossings.len()).filter(|&x| !mask[x]).map(|x| (x, self.seifert_pairing(x))).collect()
        };
        let mut d = self.remove_crossings(&removals);
        // circles that met no kept crossing are not part of the summand
        d.free_loops = 0;
        d.outer = None;
        d
    }

    /// Pairs of edges bounding the same two faces whose removal separates the
    /// crossings; each gives a connected-sum decomposition.
    fn find_two_face_cut(&self, faces: &Faces) -> Option<(End, End, Vec<bool>)> {
        let edges = self.edges();
        let mut by_faces: BTreeMap<(usize, usize), Vec<End>> = BTreeMap::new();
        for &e in &edges {
            let l = faces.corner_face[e.crossing][e.slot as usize];
            let r = faces.corner_face[e.crossing][((e.slot + 3) % 4) as usize];
            if l != r {
                by_faces.entry((l.min(r), l.max(r))).or_default().push(e);
            }
        }
        for group in by_faces.values() {
            for i in 0..group.len() {
                for j in i + 1..group.len() {
                    let (e, f) = (group[i], group[j]);
                    let side = self.side_without(e, f);
                    let cnt = side.iter().filter(|&&b| b).count();
                    if cnt > 0 && cnt < self.crossings.len() {
                        return Some((e, f, side));
                    }
                }
            }
        }
        None
    }

    fn side_without(&self, e: End, f: End) -> Vec<bool> {
        let cut = |a: End| -> bool {
            let idx = self.edge_index(a);
            idx == self.edge_index(e) || idx == self.edge_index(f)
        };
        let mut side = vec![false; self.crossings.len()];
        let mut stack = vec![e.crossing];
        side[e.crossing] = true;
        while let Some(x) = stack.pop() {
            for s in 0..4u8 {
                if cut(End::new(x, s)) {
                    continue;
                }
                let y = self.crossings[x].links[s as usize].crossing;
                if !side[y] {
                    side[y] = true;
                    stack.push(y);
                }
            }
        }
        side
    }

    /// Splits a connected-sum diagram into its prime factors (as diagrams).
    /// Requires a connected reduced diagram.
    pub fn prime_factors(&self) -> Result<Vec<Diagram>, DiagramError> {
        if !self.is_connected() {
            return Err(DiagramError::NotConnected);
        }
        if let Some(&x) = self.nugatory_crossings().first() {
            return Err(DiagramError::NotReduced { crossing: x });
        }
        let mut out = Vec::new();
        let mut stack = vec![self.clone()];
        while let Some(d) = stack.pop() {
            if d.crossings.is_empty() {
                continue;
            }
            let faces = d.faces();
            match d.find_two_face_cut(&faces) {
                None => out.push(d),
                Some((e, f, side)) => {
                    let (a, b) = d.split_at_cut(e, f, &side);
                    stack.push(b);
                    stack.push(a);
                }
            }
        }
        Ok(out)
    }

    pub fn prime_factor_count(&self) -> Result<usize, DiagramError> {
        self.prime_factors().map(|v| v.len())
    }

    /// For a two-edge cut `e`, `f` (given as outgoing ends) and the side containing
    /// `e`'s tail, closes each side with an arc.
    fn split_at_cut(&self, e: End, f: End, side: &[bool]) -> (Diagram, Diagram) {
        let he = self.link(e);
        let hf = self.link(f);
        let mut d = self.clone();
        // tail(e) and head(f) on one side, tail(f) and head(e) on the other
        debug_assert!(side[e.crossing] && side[hf.crossing] && !side[he.crossing] && !side[f.crossing]);
        d.crossings[e.crossing].links[e.slot as usize] = hf;
        d.crossings[hf.crossing].links[hf.slot as usize] = e;
        d.crossings[f.crossing].links[f.slot as usize] = he;
        d.crossings[he.crossing].links[he.slot as usize] = f;
        let a: Vec<usize> = (0..side.len()).filter(|&x| side[x]).collect();
        let b: Vec<usize> = (0..side.len()).filter(|&x| !side[x]).collect();
        (d.sub_diagram(&a), d.sub_diagram(&b))
    }
}

/// Faces of a 4-valent map given by its link function.
pub(crate) fn walk_faces(n: usize, link: impl Fn(End) -> End) -> Faces {
    let mut corner_face = vec![[usize::MAX; 4]; n];
    let mut faces = Vec::new();
    for x in 0..n {
        for s in 0..4u8 {
            if corner_face[x][s as usize] != usize::MAX {
                continue;
            }
            let id = faces.len();
            let mut face = Vec::new();
            let mut c = Corner { crossing: x, index: s };
            while corner_face[c.crossing][c.index as usize] == usize::MAX {
                corner_face[c.crossing][c.index as usize] = id;
                face.push(c);
                let nxt = link(End::new(c.crossing, (c.index + 1) % 4));
                c = Corner { crossing: nxt.crossing, index: nxt.slot };
            }
            faces.push(face);
        }
    }
    Faces { faces, corner_face }
}

/// Removes the crossings that have a pairing, joining their slots pairwise.
/// Returns the links of the kept crossings (renumbered in order), the index map
/// and the number of closed loops that lost all their crossings.
pub(crate) fn splice(links: &[[End; 4]], pairing: &[Option<[u8; 4]>]) -> (Vec<[End; 4]>, Vec<usize>, usize) {
    let n = links.len();
    let mut new_index = vec![usize::MAX; n];
    let mut k = 0;
    for x in 0..n {
        if pairing[x].is_none() {
            new_index[x] = k;
            k += 1;
        }
    }
    let mut visited = vec![[false; 4]; n];
    let mut out = Vec::with_capacity(k);
    for x in 0..n {
        if pairing[x].is_some() {
            continue;
        }
        let mut nl = [End::new(0, 0); 4];
        for s in 0..4 {
            let mut e = links[x][s];
            while let Some(p) = pairing[e.crossing] {
                visited[e.crossing][e.slot as usize] = true;
                let q = p[e.slot as usize];
                visited[e.crossing][q as usize] = true;
                e = links[e.crossing][q as usize];
            }
            nl[s] = End::new(new_index[e.crossing], e.slot);
        }
        out.push(nl);
    }
    let mut loops = 0;
    for x in 0..n {
        let Some(p) = pairing[x] else { continue };
        for s in 0..4u8 {
            if visited[x][s as usize] {
                continue;
            }
            loops += 1;
            let mut e = End::new(x, s);
            while !visited[e.crossing][e.slot as usize] {
                visited[e.crossing][e.slot as usize] = true;
                let q = pairing[e.crossing].unwrap()[e.slot as usize];
                visited[e.crossing][q as usize] = true;
                e = links[e.crossing][q as usize];
            }
            let _ = p;
        }
    }
    (out, new_index, loops)
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.crossings.is_empty() {
            return write!(f, "unlink({})", self.free_loops);
        }
        f.write_str(&self.to_pd())?;
        if self.free_loops > 0 {
            write!(f, " + {} loop(s)", self.free_loops)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests;
