//! HOMFLY polynomial by skein resolution.
//!
//! Convention: `l^{-1} P(L+) + l P(L-) = -m P(L0)`, `P(unknot) = 1`, so a split
//! union multiplies by `δ = -(l + l^{-1}) m^{-1}`.
//!
//! A diagram is resolved by walking it from chosen basepoints and switching
//! every crossing first met from below, which leaves a descending diagram (an
//! unlink). Each switch spends one skein step and spawns a smoothing with one
//! crossing fewer. Nugatory crossings and Reidemeister-II bigons are removed
//! before each step, split pieces are evaluated separately, and results are
//! memoized on canonical codes.

mod braid;

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::diagram::{Braid, Diagram, End};
use crate::laurent::{homfly_to_alexander, homfly_to_jones, Exp4, LaurentPoly1, LaurentPoly2, PolyError, HOMFLY_VARS};
use crate::seifert::seifert_circle_count;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SkeinConfig {
    /// Maximum number of resolution nodes before giving up.
    pub node_budget: u64,
    /// Maximum number of memoized sub-results.
    pub memo_cap: usize,
}

impl Default for SkeinConfig {
    fn default() -> Self {
        SkeinConfig { node_budget: 200_000_000, memo_cap: 4_000_000 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SkeinError {
    BudgetExhausted { nodes: u64, max_depth: usize },
    Poly(PolyError),
}

impl fmt::Display for SkeinError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SkeinError::BudgetExhausted { nodes, max_depth } => {
                write!(f, "skein budget exhausted after {nodes} nodes (deepest recursion {max_depth})")
            }
            SkeinError::Poly(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for SkeinError {}

impl From<PolyError> for SkeinError {
    fn from(e: PolyError) -> Self {
        SkeinError::Poly(e)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SkeinStats {
    pub nodes: u64,
    pub memo_hits: u64,
    pub max_depth: usize,
}

/// Resolution engine; keeps its memo between calls.
pub struct Skein {
    cfg: SkeinConfig,
    memo: BTreeMap<Vec<u32>, LaurentPoly2>,
    braid_memo: BTreeMap<(usize, Vec<i32>), LaurentPoly2>,
    stats: SkeinStats,
    depth: usize,
    delta_pows: Vec<LaurentPoly2>,
}

pub(crate) fn delta() -> LaurentPoly2 {
    LaurentPoly2::from_int_terms(HOMFLY_VARS, [(1, -1, -1), (-1, -1, -1)])
}

impl Skein {
    pub fn new(cfg: SkeinConfig) -> Self {
        Skein { cfg, memo: BTreeMap::new(), braid_memo: BTreeMap::new(), stats: SkeinStats::default(), depth: 0, delta_pows: vec![LaurentPoly2::one(HOMFLY_VARS)] }
    }

    pub fn stats(&self) -> SkeinStats {
        self.stats
    }

    pub(crate) fn delta_pow(&mut self, k: usize) -> LaurentPoly2 {
        while self.delta_pows.len() <= k {
            let next = &self.delta_pows[self.delta_pows.len() - 1] * &delta();
            self.delta_pows.push(next);
        }
        self.delta_pows[k].clone()
    }

    pub(crate) fn tick(&mut self) -> Result<(), SkeinError> {
        self.stats.nodes += 1;
        self.stats.max_depth = self.stats.max_depth.max(self.depth);
        if self.stats.nodes > self.cfg.node_budget {
            return Err(SkeinError::BudgetExhausted { nodes: self.stats.nodes, max_depth: self.stats.max_depth });
        }
        Ok(())
    }

    pub fn homfly(&mut self, d: &Diagram) -> Result<LaurentPoly2, SkeinError> {
        self.tick()?;
        let d = simplify(d);
        let (pieces, free) = d.split_components();
        let total = pieces.len() + free;
        if total == 0 {
            return Ok(LaurentPoly2::one(HOMFLY_VARS));
        }
        let mut acc = self.delta_pow(total - 1);
        for p in &pieces {
            let v = self.connected(p)?;
            acc = &acc * &v;
        }
        Ok(acc)
    }

    pub fn homfly_braid(&mut self, b: &Braid) -> Result<LaurentPoly2, SkeinError> {
        braid::eval(self, b.strands, b.word.clone())
    }

    fn connected(&mut self, d: &Diagram) -> Result<LaurentPoly2, SkeinError> {
        if d.crossing_count() == 0 {
            return Ok(LaurentPoly2::one(HOMFLY_VARS));
        }
        let code = d.canonical_code();
        if let Some(v) = self.memo.get(&code) {
            self.stats.memo_hits += 1;
            return Ok(v.clone());
        }
        self.depth += 1;
        let r = self.descend(d);
        self.depth -= 1;
        let v = r?;
        if self.memo.len() < self.cfg.memo_cap {
            self.memo.insert(code, v.clone());
        }
        Ok(v)
    }

    fn descend(&mut self, d: &Diagram) -> Result<LaurentPoly2, SkeinError> {
        let bad = descending_switches(d);
        let n = d.component_count();
        let mut cur = d.clone();
        let mut factor = LaurentPoly2::one(HOMFLY_VARS);
        let mut out = LaurentPoly2::zero(HOMFLY_VARS);
        for x in bad {
            let e = d.sign(x).value();
            // P(D) = -l^e m P(D0) - l^{2e} P(D switched)
            let smoothed = cur.smooth(x).expect("crossing index in range");
            let p0 = self.homfly(&smoothed)?;
            let term = &factor * &p0;
            out.add_scaled(&term, -1, Exp4::int(e), Exp4::int(1));
            let mut f2 = LaurentPoly2::zero(HOMFLY_VARS);
            f2.add_scaled(&factor, -1, Exp4::int(2 * e), Exp4::ZERO);
            factor = f2;
            cur = cur.switch(x).expect("crossing index in range");
        }
        let unlink = self.delta_pow(n - 1);
        out = &out + &(&factor * &unlink);
        Ok(out)
    }
}

/// Crossing visits of one component: `(crossing, over?)` in traversal order.
fn visits(d: &Diagram, comp: &[End]) -> Vec<(usize, bool)> {
    comp.iter()
        .map(|&e| {
            let h = d.link(e);
            (h.crossing, h.slot % 2 == 1)
        })
        .collect()
}

fn bad_self_crossings(seq: &[(usize, bool)], start: usize, self_cross: &[bool], seen: &mut [bool]) -> usize {
    let mut bad = 0;
    let n = seq.len();
    for k in 0..n {
        let (x, over) = seq[(start + k) % n];
        if !self_cross[x] {
            continue;
        }
        if !seen[x] {
            seen[x] = true;
            if !over {
                bad += 1;
            }
        }
    }
    for &(x, _) in seq {
        seen[x] = false;
    }
    bad
}

fn best_order(m: usize, cost: &[Vec<usize>]) -> Vec<usize> {
    // cost[i][j]: crossings between i and j where i is under (bad if i goes first)
    if m <= 7 {
        let mut perm: Vec<usize> = (0..m).collect();
        let mut best = perm.clone();
        let mut best_cost = usize::MAX;
        permute(&mut perm, 0, cost, &mut best, &mut best_cost);
        best
    } else {
        let mut left: Vec<usize> = (0..m).collect();
        let mut order = Vec::new();
        while !left.is_empty() {
            // next: the component that is under least often against the rest
            let (k, _) = left.iter().enumerate().map(|(k, &i)| (k, left.iter().map(|&j| cost[i][j]).sum::<usize>())).min_by_key(|&(_, c)| c).unwrap();
            order.push(left.remove(k));
        }
        order
    }
}

fn permute(p: &mut Vec<usize>, k: usize, cost: &[Vec<usize>], best: &mut Vec<usize>, best_cost: &mut usize) {
    if k == p.len() {
        let mut c = 0;
        for a in 0..p.len() {
            for b in a + 1..p.len() {
                c += cost[p[a]][p[b]];
            }
        }
        if c < *best_cost {
            *best_cost = c;
            best.clone_from(p);
        }
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, cost, best, best_cost);
        p.swap(k, i);
    }
}

/// Crossings to switch (in walk order) to make the diagram descending, with
/// basepoints and component order chosen to keep the list short.
fn descending_switches(d: &Diagram) -> Vec<usize> {
    let comps = d.components();
    let n = d.crossing_count();
    let seqs: Vec<Vec<(usize, bool)>> = comps.iter().map(|c| visits(d, c)).collect();
    let mut owner = vec![[usize::MAX; 2]; n];
    for (k, seq) in seqs.iter().enumerate() {
        for &(x, _) in seq {
            if owner[x][0] == usize::MAX {
                owner[x][0] = k;
            } else {
                owner[x][1] = k;
            }
        }
    }
    let self_cross: Vec<bool> = owner.iter().map(|o| o[0] == o[1]).collect();
    let mut seen = vec![false; n];
    let starts: Vec<usize> = seqs
        .iter()
        .map(|seq| (0..seq.len()).min_by_key(|&s| bad_self_crossings(seq, s, &self_cross, &mut seen)).unwrap_or(0))
        .collect();
    let m = seqs.len();
    let mut cost = vec![vec![0usize; m]; m];
    for (k, seq) in seqs.iter().enumerate() {
        for &(x, over) in seq {
            if !self_cross[x] && !over {
                let other = if owner[x][0] == k { owner[x][1] } else { owner[x][0] };
                cost[k][other] += 1;
            }
        }
    }
    let order = best_order(m, &cost);
    let mut seen = vec![false; n];
    let mut bad = Vec::new();
    for &k in &order {
        let seq = &seqs[k];
        for j in 0..seq.len() {
            let (x, over) = seq[(starts[k] + j) % seq.len()];
            if !seen[x] {
                seen[x] = true;
                if !over {
                    bad.push(x);
                }
            }
        }
    }
    bad
}

/// Removes nugatory crossings and Reidemeister-II bigons until none remain.
pub fn simplify(d: &Diagram) -> Diagram {
    let mut d = d.remove_nugatory();
    loop {
        let faces = d.faces();
        let mut found = None;
        for f in &faces.faces {
            if f.len() != 2 || f[0].crossing == f[1].crossing {
                continue;
            }
            let (c1, c2) = (f[0], f[1]);
            // edge from slot c1+1 of one crossing arrives at slot c2.index of the other
            let s1 = (c1.index + 1) % 4;
            let t1 = c2.index;
            if s1 % 2 == t1 % 2 {
                found = Some((c1.crossing, c2.crossing));
                break;
            }
        }
        match found {
            Some((x, y)) => {
                d = d.remove_crossings(&[(x, Diagram::STRAIGHT), (y, Diagram::STRAIGHT)]).remove_nugatory();
            }
            None => return d,
        }
    }
}

pub fn homfly(d: &Diagram, cfg: SkeinConfig) -> Result<LaurentPoly2, SkeinError> {
    Skein::new(cfg).homfly(d)
}

pub fn homfly_braid(b: &Braid, cfg: SkeinConfig) -> Result<LaurentPoly2, SkeinError> {
    Skein::new(cfg).homfly_braid(b)
}

/// Jones polynomial through the HOMFLY polynomial (no state cap).
pub fn jones_via_skein(d: &Diagram, cfg: SkeinConfig) -> Result<LaurentPoly1, SkeinError> {
    Ok(homfly_to_jones(&homfly(d, cfg)?)?)
}

fn normalize_alexander(raw: LaurentPoly1, components: usize) -> LaurentPoly1 {
    if raw.is_zero() {
        return raw;
    }
    let negate = if components == 1 {
        let at_one: BigInt = raw.terms().map(|(_, c)| c.clone()).sum();
        at_one.is_negative()
    } else {
        raw.max_cf().unwrap().is_negative()
    };
    if negate {
        -&raw
    } else {
        raw
    }
}

/// Symmetric Alexander polynomial from `P`: `Δ(1) = 1` for knots, positive top
/// coefficient for links.
pub fn alexander_from_homfly(p: &LaurentPoly2, components: usize) -> Result<LaurentPoly1, PolyError> {
    Ok(normalize_alexander(homfly_to_alexander(p)?, components))
}

pub fn alexander_symmetric(d: &Diagram, cfg: SkeinConfig) -> Result<LaurentPoly1, SkeinError> {
    let p = homfly(d, cfg)?;
    Ok(alexander_from_homfly(&p, d.component_count())?)
}

/// Shift to lowest degree 0 with positive constant term.
pub fn nonneg_form(a: &LaurentPoly1) -> LaurentPoly1 {
    if a.is_zero() {
        return a.clone();
    }
    let lo = a.min_deg().unwrap();
    let sign = if a.min_cf().unwrap().is_negative() { -BigInt::one() } else { BigInt::one() };
    a.scale(&sign, -lo)
}

pub fn alexander_nonneg(d: &Diagram, cfg: SkeinConfig) -> Result<LaurentPoly1, SkeinError> {
    Ok(nonneg_form(&alexander_symmetric(d, cfg)?))
}

/// Integer degree extents of `P` in `l` and `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct HomflyDegrees {
    pub min_l: i64,
    pub max_l: i64,
    pub min_m: i64,
    pub max_m: i64,
}

pub fn degrees(p: &LaurentPoly2) -> Result<HomflyDegrees, PolyError> {
    let i = |e: Exp4| e.to_int().ok_or(PolyError::NotIntegral("non-integral HOMFLY exponent"));
    Ok(HomflyDegrees { min_l: i(p.min_deg_first()?)?, max_l: i(p.max_deg_first()?)?, min_m: i(p.min_deg_second()?)?, max_m: i(p.max_deg_second()?)? })
}

/// Morton's bounds `w-s+1 <= mindeg_l P <= maxdeg_l P <= w+s-1` and
/// `maxdeg_m P <= c-s+1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct MortonReport {
    pub lower_l: i64,
    pub upper_l: i64,
    pub upper_m: i64,
    pub degrees: HomflyDegrees,
    pub holds: bool,
    /// `mindeg_l P = w - s + 1`.
    pub sharp: bool,
}

pub fn morton_report(d: &Diagram, p: &LaurentPoly2) -> Result<MortonReport, PolyError> {
    let deg = degrees(p)?;
    let s = seifert_circle_count(d) as i64;
    let w = d.writhe();
    let c = d.crossing_count() as i64;
    let (lower_l, upper_l, upper_m) = (w - s + 1, w + s - 1, c - s + 1);
    Ok(MortonReport {
        lower_l,
        upper_l,
        upper_m,
        degrees: deg,
        holds: lower_l <= deg.min_l && deg.max_l <= upper_l && deg.max_m <= upper_m,
        sharp: deg.min_l == lower_l,
    })
}

/// `P` of the mirror image: `l -> l^{-1}`.
pub fn mirror_homfly(p: &LaurentPoly2) -> LaurentPoly2 {
    let mut r = LaurentPoly2::zero(HOMFLY_VARS);
    for ((a, b), c) in p.terms() {
        r.add_term(-a, b, c.clone());
    }
    r
}

/// The coefficient polynomial of `l^k` in `P`, as a polynomial in `m`.
pub fn l_coefficient(p: &LaurentPoly2, k: i64) -> LaurentPoly1 {
    p.coeff_first(Exp4::int(k))
}

#[cfg(test)]
mod tests;
