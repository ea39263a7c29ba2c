//! Fiberedness of almost positive diagrams: a shape classifier on the even
//! valence graphs of the prime Murasugi summands, and the Alexander criterion.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::{blocks, EvError, EvenValenceGraph};
use crate::diagram::{Diagram, Sign};
use crate::seifert::{euler_characteristic, is_special, murasugi_decomposition};
use crate::skein::{alexander_symmetric, SkeinConfig, SkeinError};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum FiberVerdict {
    /// Chain of circles with one attached cell carrying the negative edge.
    TorusChain,
    /// `(2, ..., 2)`-pretzel with one crossing changed.
    PretzelSwitched,
    /// Every factor is a positive `(2, n)`-torus diagram.
    TorusFactor,
    NotFiberedShape,
}

/// What one prime factor of one Murasugi summand was matched as.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum FactorKind {
    /// Positive, graph a single cycle of this length.
    Torus { crossings: usize },
    /// The factor with the negative crossing, edge counts of the chain circles
    /// left to right and the length of the attached cell.
    Chain { circles: Vec<usize>, cell: usize },
    Pretzel { clasps: usize },
    Other { reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct FiberShape {
    pub verdict: FiberVerdict,
    pub summands: usize,
    pub factors: Vec<FactorKind>,
    pub nugatory_removed: usize,
}

impl FiberShape {
    pub fn is_fibered(&self) -> bool {
        self.verdict != FiberVerdict::NotFiberedShape
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct FiberCriterion {
    pub holds: bool,
    /// The diagram is not connected almost positive, so the criterion is only
    /// a heuristic for it.
    pub heuristic: bool,
    /// `2 maxdeg Δ` (`None` when `Δ = 0`).
    pub two_max_deg: Option<i64>,
    pub one_minus_chi: i64,
    #[cfg_attr(feature = "serde", serde(with = "decimal"))]
    pub min_cf: Option<BigInt>,
}

/// Big integers as decimal strings, like polynomial coefficients.
#[cfg(feature = "serde")]
mod decimal {
    use alloc::string::{String, ToString};
    use num_bigint::BigInt;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(x) => s.serialize_some(&x.to_string()),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigInt>, D::Error> {
        Option::<String>::deserialize(d)?.map(|t| t.parse().map_err(D::Error::custom)).transpose()
    }
}

/// `2 maxdeg Δ = 1 - χ` and `|min cf Δ| = 1` for the symmetric Alexander
/// polynomial and the canonical surface of `d`.
pub fn is_fibered_alexander(d: &Diagram, cfg: SkeinConfig) -> Result<FiberCriterion, SkeinError> {
    let a = alexander_symmetric(d, cfg)?;
    let one_minus_chi = 1 - euler_characteristic(d);
    let heuristic = !(d.is_connected() && d.negative_crossings().len() == 1);
    if a.is_zero() {
        return Ok(FiberCriterion { holds: false, heuristic, two_max_deg: None, one_minus_chi, min_cf: None });
    }
    let two_max_deg = a.max_deg().ok().and_then(|e| e.to_halves());
    let min_cf = a.min_cf().ok();
    let holds = two_max_deg == Some(one_minus_chi) && min_cf.as_ref().is_some_and(|c| c.abs().is_one());
    Ok(FiberCriterion { holds, heuristic, two_max_deg, one_minus_chi, min_cf })
}

/// Smooths one crossing of every bigon between two positive crossings whose
/// corners in the bigon are both in-in or out-out, as long as the bigon's
/// crossings do not close up a two-crossing cycle on their own.
pub fn reduce_clasps(d: &Diagram) -> Result<Diagram, EvError> {
    let mut d = d.clone();
    'again: loop {
        let faces = d.faces();
        for face in &faces.faces {
            if face.len() != 2 || face[0].crossing == face[1].crossing {
                continue;
            }
            let opposite = |c: crate::diagram::Corner| -> Option<usize> {
                let x = d.crossing(c.crossing);
                if x.sign() != Sign::Positive {
                    return None;
                }
                let (ii, oo) = (x.in_in_corner(), x.out_out_corner());
                let other = if c.index == ii {
                    oo
                } else if c.index == oo {
                    ii
                } else {
                    return None;
                };
                Some(faces.corner_face[c.crossing][other as usize])
            };
            match (opposite(face[0]), opposite(face[1])) {
                (Some(a), Some(b)) if a != b => {
                    d = d.smooth(face[0].crossing)?;
                    continue 'again;
                }
                _ => {}
            }
        }
        return Ok(d);
    }
}

/// Matches the reduced even valence graph of the factor holding the negative
/// edge `p` against the chain and pretzel shapes. Either cell at `p` may serve
/// as the attached cell; a pretzel reading wins over a chain, then the
/// smaller cell.
fn match_exceptional(g: &EvenValenceGraph, p: usize) -> FactorKind {
    let (cells, index) = g.cell_index();
    let (c1, c2) = (index[2 * p], index[2 * p + 1]);
    let mut found = Vec::new();
    let mut reasons = Vec::new();
    for c in if c1 == c2 { alloc::vec![c1] } else { alloc::vec![c1, c2] } {
        let cell: BTreeSet<usize> = cells[c].iter().map(|&dart| dart / 2).collect();
        match match_cell(g, p, &cell) {
            Ok(k) => found.push(k),
            Err(r) => reasons.push(r),
        }
    }
    found.sort_by_key(|k| match k {
        FactorKind::Pretzel { clasps } => (0, *clasps),
        FactorKind::Chain { cell, .. } => (1, *cell),
        _ => (2, 0),
    });
    match found.into_iter().next() {
        Some(k) => k,
        None => FactorKind::Other { reason: reasons.join("; ") },
    }
}

fn match_cell(g: &EvenValenceGraph, p: usize, cell: &BTreeSet<usize>) -> Result<FactorKind, String> {
    let n = g.vertex_count();
    if cell.iter().any(|&e| e != p && g.edges()[e].sign != Sign::Positive) {
        return Err("cell has another negative edge".into());
    }
    let rest = g.without_edges(cell);
    let mut deg = alloc::vec![0usize; n];
    for &(a, b) in &rest {
        deg[a] += 1;
        deg[b] += 1;
    }
    if deg.contains(&0) {
        return Err("complement of the cell misses a vertex".into());
    }
    let bl = blocks(n, &rest);
    let mut of_vertex: Vec<Vec<usize>> = alloc::vec![Vec::new(); n];
    for (i, b) in bl.iter().enumerate() {
        let mut vs = BTreeSet::new();
        for &k in b {
            vs.insert(rest[k].0);
            vs.insert(rest[k].1);
        }
        if vs.len() != b.len() || b.len() < 2 {
            return Err(format!("block {i} is not a cycle"));
        }
        for v in vs {
            of_vertex[v].push(i);
        }
    }
    let mut cut_of_block: Vec<Vec<usize>> = alloc::vec![Vec::new(); bl.len()];
    for (v, bs) in of_vertex.iter().enumerate() {
        if bs.len() > 2 {
            return Err(format!("vertex {v} lies on {} circles", bs.len()));
        }
        if bs.len() == 2 {
            cut_of_block[bs[0]].push(v);
            cut_of_block[bs[1]].push(v);
        }
    }
    if cut_of_block.iter().any(|c| c.len() > 2) {
        return Err("circles do not form a chain".into());
    }
    // a tree of blocks with all degrees at most two and `blocks - 1` cut vertices is a path
    let cuts = of_vertex.iter().filter(|b| b.len() == 2).count();
    if cuts + 1 != bl.len() {
        return Err("circles do not form a connected chain".into());
    }
    if bl.len() == 1 {
        return Ok(FactorKind::Pretzel { clasps: cell.len() });
    }
    let ep = g.edges()[p];
    let (bu, bv) = (&of_vertex[ep.tail], &of_vertex[ep.head]);
    if bu.len() != 1 || bv.len() != 1 || bu[0] == bv[0] {
        return Err("negative edge does not join the two outermost circles".into());
    }
    if cut_of_block[bu[0]].len() != 1 || cut_of_block[bv[0]].len() != 1 {
        return Err("negative edge does not join the two outermost circles".into());
    }
    // walk the chain from the circle of the tail
    let mut order = alloc::vec![bu[0]];
    let mut seen = BTreeSet::from([bu[0]]);
    while let Some(&b) = order.last() {
        let next = cut_of_block[b].iter().flat_map(|&v| of_vertex[v].iter().copied()).find(|x| !seen.contains(x));
        match next {
            Some(x) => {
                seen.insert(x);
                order.push(x);
            }
            None => break,
        }
    }
    Ok(FactorKind::Chain { circles: order.iter().map(|&b| bl[b].len()).collect(), cell: cell.len() })
}

/// Decides from diagram combinatorics alone whether a connected diagram with
/// at most one negative crossing has one of the fibered shapes: every prime
/// factor of every Murasugi summand, after removing nugatory crossings and
/// clasps, must be a positive `(2, n)`-torus diagram, except the one holding
/// the negative crossing, which must be a chain or switched pretzel.
pub fn classify_fiber_shape(d: &Diagram) -> Result<FiberShape, EvError> {
    if !d.is_connected() {
        return Err(EvError::NotConnected);
    }
    let neg = d.negative_crossings().len();
    if neg > 1 {
        return Err(EvError::NotAlmostPositive(neg));
    }
    let reduced = d.remove_nugatory();
    let nugatory_removed = d.crossing_count() - reduced.crossing_count();
    let dec = murasugi_decomposition(&reduced);
    let mut factors = Vec::new();
    let mut verdict = FiberVerdict::TorusFactor;
    for s in &dec.summands {
        let s = s.remove_nugatory();
        if s.crossing_count() == 0 {
            continue;
        }
        if !is_special(&s) {
            return Err(EvError::NotSpecial);
        }
        for f in s.prime_factors()? {
            let g = EvenValenceGraph::from_special(&f)?.unbisect();
            let negs = g.negative_edges();
            let kind = match negs.as_slice() {
                [] if g.vertex_count() == g.edge_count() && g.vertex_count() >= 2 && blocks(g.vertex_count(), &g.without_edges(&BTreeSet::new())).len() == 1 => {
                    FactorKind::Torus { crossings: f.crossing_count() }
                }
                [] => FactorKind::Other { reason: "positive factor is not a (2, n)-torus diagram".into() },
                &[p] => match_exceptional(&g, p),
                _ => unreachable!(),
            };
            match &kind {
                FactorKind::Chain { .. } => verdict = FiberVerdict::TorusChain,
                FactorKind::Pretzel { .. } => verdict = FiberVerdict::PretzelSwitched,
                FactorKind::Other { .. } => verdict = FiberVerdict::NotFiberedShape,
                FactorKind::Torus { .. } => {}
            }
            factors.push(kind);
            if verdict == FiberVerdict::NotFiberedShape {
                return Ok(FiberShape { verdict, summands: dec.summands.len(), factors, nugatory_removed });
            }
        }
    }
    Ok(FiberShape { verdict, summands: dec.summands.len(), factors, nugatory_removed })
}
