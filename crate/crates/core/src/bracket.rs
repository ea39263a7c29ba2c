//! Kauffman bracket state sums and the Jones polynomial.
//!
//! The A-corners of a crossing are the two swept by the over-strand when it is
//! turned counterclockwise onto the under-strand; in slot terms these are
//! corners 1 and 3, so the A-smoothing joins slots (0,1),(2,3) and the
//! B-smoothing joins (1,2),(3,0). For a positive crossing the A-smoothing is the
//! oriented one.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::diagram::{Diagram, End};
use crate::laurent::{Exp4, LaurentPoly1, Var};
use crate::seifert::{euler_characteristic, SeifertData};
use crate::unionfind::UnionFind;

pub const DEFAULT_STATE_CAP: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Split {
    A,
    B,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BracketError {
    /// More crossings than the state-sum cap allows; use the skein route.
    TooManyCrossings { crossings: usize, cap: usize },
    Precondition(String),
}

impl fmt::Display for BracketError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BracketError::TooManyCrossings { crossings, cap } => {
                write!(f, "{crossings} crossings exceed the state-sum cap of {cap}; use the skein route")
            }
            BracketError::Precondition(s) => write!(f, "precondition failed: {s}"),
        }
    }
}

impl core::error::Error for BracketError {}

const A_PAIRS: [(u8, u8); 2] = [(0, 1), (2, 3)];
const B_PAIRS: [(u8, u8); 2] = [(1, 2), (3, 0)];

/// Edge indices joined by each smoothing at each crossing.
struct Smoothings {
    a: Vec<[(usize, usize); 2]>,
    b: Vec<[(usize, usize); 2]>,
}

impl Smoothings {
    fn new(d: &Diagram) -> Self {
        let pairs = |x: usize, ps: [(u8, u8); 2]| ps.map(|(p, q)| (d.edge_index(End::new(x, p)), d.edge_index(End::new(x, q))));
        Smoothings {
            a: (0..d.crossing_count()).map(|x| pairs(x, A_PAIRS)).collect(),
            b: (0..d.crossing_count()).map(|x| pairs(x, B_PAIRS)).collect(),
        }
    }
}

/// Loops of a state (bit `x` of the mask set means crossing `x` is B-split).
fn loops_of_mask(sm: &Smoothings, uf: &mut UnionFind, mask: u64) -> usize {
    uf.reset();
    for x in 0..sm.a.len() {
        let pairs = if mask >> x & 1 == 1 { &sm.b[x] } else { &sm.a[x] };
        for &(p, q) in pairs {
            uf.union(p, q);
        }
    }
    uf.count()
}

/// Number of loops in the given state, free loops included.
pub fn state_loops(d: &Diagram, state: &[Split]) -> Result<usize, BracketError> {
    if state.len() != d.crossing_count() {
        return Err(BracketError::Precondition(format!("state has {} splits for {} crossings", state.len(), d.crossing_count())));
    }
    let sm = Smoothings::new(d);
    let mut uf = UnionFind::new(2 * d.crossing_count());
    for (x, s) in state.iter().enumerate() {
        let pairs = if *s == Split::B { &sm.b[x] } else { &sm.a[x] };
        for &(p, q) in pairs {
            uf.union(p, q);
        }
    }
    Ok(uf.count() + d.free_loops())
}

fn delta() -> LaurentPoly1 {
    LaurentPoly1::from_terms(Var::A, [(Exp4::int(2), -1), (Exp4::int(-2), -1)])
}

/// Kauffman bracket `Σ_S A^{#A-#B} (-A^2-A^-2)^{|S|-1}` in the variable `A`.
pub fn kauffman_bracket(d: &Diagram, cap: usize) -> Result<LaurentPoly1, BracketError> {
    let c = d.crossing_count();
    if c > cap || c > 62 {
        return Err(BracketError::TooManyCrossings { crossings: c, cap });
    }
    let free = d.free_loops();
    let max_loops = 2 * c + free + 1;
    // counts[a][loops] with a = number of A-splits
    let mut counts = vec![vec![0u64; max_loops + 1]; c + 1];
    if c == 0 {
        counts[0][free] = 1;
    } else {
        let sm = Smoothings::new(d);
        let mut uf = UnionFind::new(2 * c);
        for mask in 0u64..(1u64 << c) {
            let b = mask.count_ones() as usize;
            let loops = loops_of_mask(&sm, &mut uf, mask) + free;
            counts[c - b][loops] += 1;
        }
    }
    let dl = delta();
    let mut dpow = vec![LaurentPoly1::one(Var::A)];
    for k in 1..max_loops {
        let next = &dpow[k - 1] * &dl;
        dpow.push(next);
    }
    let mut out = LaurentPoly1::zero(Var::A);
    for (a, row) in counts.iter().enumerate() {
        for (loops, &n) in row.iter().enumerate() {
            if n == 0 {
                continue;
            }
            let e = Exp4::int(2 * a as i64 - c as i64);
            out = &out + &dpow[loops - 1].scale(&BigInt::from(n), e);
        }
    }
    Ok(out)
}

/// `V(t) = (-A^3)^{-w} <D>` at `A = t^{-1/4}`.
pub fn jones_from_bracket(d: &Diagram, bracket: &LaurentPoly1) -> LaurentPoly1 {
    let w = d.writhe();
    let sign = if w.rem_euclid(2) == 0 { BigInt::one() } else { -BigInt::one() };
    let f = bracket.scale(&sign, Exp4::int(-3 * w));
    f.rescale_exponents(Var::T, -1, 4)
}

pub fn jones(d: &Diagram, cap: usize) -> Result<LaurentPoly1, BracketError> {
    Ok(jones_from_bracket(d, &kauffman_bracket(d, cap)?))
}

fn adequate(d: &Diagram, side: Split) -> bool {
    let c = d.crossing_count();
    if c == 0 {
        return true;
    }
    let sm = Smoothings::new(d);
    let mut uf = UnionFind::new(2 * c);
    let mask = if side == Split::B { u64::MAX } else { 0 };
    let pairs = if side == Split::B { &sm.b } else { &sm.a };
    loops_of_mask_any(&sm, &mut uf, mask);
    pairs.iter().all(|p| uf.find(p[0].0) != uf.find(p[1].0))
}

fn loops_of_mask_any(sm: &Smoothings, uf: &mut UnionFind, mask: u64) {
    uf.reset();
    for x in 0..sm.a.len() {
        let b = if x < 64 { mask >> x & 1 == 1 } else { mask == u64::MAX };
        for &(p, q) in if b { &sm.b[x] } else { &sm.a[x] } {
            uf.union(p, q);
        }
    }
}

/// No crossing's A-splitting joins a loop of the all-A state to itself.
pub fn is_a_adequate(d: &Diagram) -> bool {
    adequate(d, Split::A)
}

pub fn is_b_adequate(d: &Diagram) -> bool {
    adequate(d, Split::B)
}

/// Predicted lowest term of the Jones polynomial of an almost positive diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LeadingTerm {
    /// The extreme term survives: exact degree and coefficient.
    Exact { min_deg: Exp4, min_cf: BigInt },
    /// The extreme contributions cancel; the minimal degree is at least `lower_bound`.
    Cancelled { lower_bound: Exp4 },
}

#[derive(Clone, Debug)]
pub struct LeadingAnalysis {
    pub negative_crossing: usize,
    /// Crossings (the negative one included) joining the same two Seifert circles.
    pub parallel_count: usize,
    pub seifert_circles: usize,
    pub crossings: usize,
    pub writhe: i64,
    pub chi: i64,
    pub components: usize,
    /// Highest A-degree `c + 2(s - 2)` that the extreme states can reach.
    pub bracket_degree: i64,
    /// Net coefficient of that degree in the bracket.
    pub bracket_coeff: BigInt,
    pub prediction: LeadingTerm,
}

fn binomial(n: u64, k: u64) -> BigInt {
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    r
}

fn sign_pow(k: i64) -> BigInt {
    if k.rem_euclid(2) == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// Extreme-state bookkeeping for a connected almost positive diagram with
/// negative crossing `p`.
///
/// The states at A-degree `c + 2(s-2)` are: `p` split along the Seifert
/// smoothing with everything else A (`s` loops), and `p` A-split together with
/// any subset `J` of the other `k-1` crossings parallel to `p` B-split
/// (`s - 1 + |J|` loops). Their signed sum is `(-1)^{s-1} + (-1)^s (1-1)^{k-1}`.
pub fn almost_positive_leading(d: &Diagram) -> Result<LeadingAnalysis, BracketError> {
    let neg = d.negative_crossings();
    if neg.len() != 1 {
        return Err(BracketError::Precondition(format!("expected exactly one negative crossing, found {}", neg.len())));
    }
    if !d.is_connected() {
        return Err(BracketError::Precondition("diagram is not connected".into()));
    }
    let p = neg[0];
    let sd = SeifertData::new(d);
    let (a, b) = sd.crossing_circles[p];
    let key = (a.min(b), a.max(b));
    let k = (0..d.crossing_count())
        .filter(|&x| {
            let (u, v) = sd.crossing_circles[x];
            (u.min(v), u.max(v)) == key
        })
        .count();
    let s = sd.count() as i64;
    let c = d.crossing_count() as i64;
    let w = d.writhe();
    let chi = euler_characteristic(d);
    let bracket_degree = c + 2 * (s - 2);
    let mut coeff = sign_pow(s - 1);
    let mut tail = BigInt::zero();
    for j in 0..k as u64 {
        tail += binomial(k as u64 - 1, j) * sign_pow(j as i64);
    }
    coeff += sign_pow(s) * tail;
    // A^e in <D> becomes t^{(3w - e)/4} in V, with sign (-1)^w
    let t_quarters = 3 * w - bracket_degree;
    use LeadingTerm::*;
    let prediction = if coeff.is_zero() {
        Cancelled { lower_bound: Exp4(t_quarters + 4) }
    } else {
        Exact { min_deg: Exp4(t_quarters), min_cf: sign_pow(w) * &coeff }
    };
    Ok(LeadingAnalysis {
        negative_crossing: p,
        parallel_count: k,
        seifert_circles: s as usize,
        crossings: c as usize,
        writhe: w,
        chi,
        components: d.component_count(),
        bracket_degree,
        bracket_coeff: coeff,
        prediction,
    })
}

impl LeadingAnalysis {
    /// `(1 - χ(D)) / 2` as an exponent.
    pub fn half_one_minus_chi(&self) -> Exp4 {
        Exp4(2 * (1 - self.chi))
    }

    /// Sign `(-1)^{n-1}` for `n` components.
    pub fn component_sign(&self) -> BigInt {
        sign_pow(self.components as i64 - 1)
    }

    /// In the cancelled case a reduced diagram attains the bound exactly:
    /// `min deg V = (1-χ)/2` with coefficient `(-1)^{n-1}`.
    pub fn reduced_prediction(&self) -> (Exp4, BigInt) {
        match &self.prediction {
            LeadingTerm::Exact { min_deg, min_cf } => (*min_deg, min_cf.clone()),
            LeadingTerm::Cancelled { lower_bound } => (*lower_bound, self.component_sign()),
        }
    }

    /// The statement with its two cases exchanged (as it reads without the
    /// correction): an exact value when no parallel crossing exists, a bound otherwise.
    pub fn swapped_cases(&self) -> LeadingTerm {
        let h = self.half_one_minus_chi();
        if self.parallel_count >= 2 {
            LeadingTerm::Cancelled { lower_bound: h }
        } else {
            LeadingTerm::Exact { min_deg: h - Exp4::int(1), min_cf: self.component_sign() }
        }
    }
}

/// Checks a leading-term claim against a computed Jones polynomial.
pub fn leading_term_holds(claim: &LeadingTerm, v: &LaurentPoly1) -> bool {
    let (Ok(lo), Ok(cf)) = (v.min_deg(), v.min_cf()) else { return false };
    match claim {
        LeadingTerm::Exact { min_deg, min_cf } => lo == *min_deg && cf == *min_cf,
        LeadingTerm::Cancelled { lower_bound } => lo >= *lower_bound,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{Braid, Sign};

    fn braid(s: &str) -> Diagram {
        Diagram::from_braid(&Braid::parse(s).unwrap())
    }

    #[test]
    fn hopf_bracket_and_jones() {
        let d = braid("2: 1 1");
        let br = kauffman_bracket(&d, DEFAULT_STATE_CAP).unwrap();
        assert_eq!(br, LaurentPoly1::from_terms(Var::A, [(Exp4::int(4), -1), (Exp4::int(-4), -1)]));
        let v = jones_from_bracket(&d, &br);
        assert_eq!(v, LaurentPoly1::from_terms(Var::T, [(Exp4::half(1), -1), (Exp4::half(5), -1)]));
    }

    #[test]
    fn hopf_state_loops() {
        let d = braid("2: 1 1");
        assert_eq!(state_loops(&d, &[Split::A, Split::A]).unwrap(), 2);
        assert_eq!(state_loops(&d, &[Split::A, Split::B]).unwrap(), 1);
    }

    #[test]
    fn trefoil_jones() {
        let v = jones(&braid("2: 1 1 1"), DEFAULT_STATE_CAP).unwrap();
        assert_eq!(v, LaurentPoly1::from_coeffs(Var::T, 1, &[1, 0, 1, -1]));
        let m = jones(&braid("2: -1 -1 -1"), DEFAULT_STATE_CAP).unwrap();
        assert_eq!(m, LaurentPoly1::from_coeffs(Var::T, -4, &[-1, 1, 0, 1]));
    }

    #[test]
    fn unknot_and_cap() {
        assert_eq!(jones(&Diagram::unknot(), 20).unwrap(), LaurentPoly1::one(Var::T));
        let big = braid("2: 1 1 1 1 1");
        assert!(matches!(kauffman_bracket(&big, 4), Err(BracketError::TooManyCrossings { .. })));
    }

    #[test]
    fn adequacy() {
        let t = braid("2: 1 1 1");
        assert!(is_a_adequate(&t) && is_b_adequate(&t));
        let k = t.add_kink(End::new(0, 2), Sign::Positive).unwrap();
        assert!(is_a_adequate(&k));
        assert!(!is_b_adequate(&k));
    }

    #[test]
    fn parallel_leading_term() {
        // one negative clasp among four positive ones on two strands
        let d = braid("2: -1 1 1 1 1");
        let la = almost_positive_leading(&d).unwrap();
        assert_eq!(la.parallel_count, 5);
        let v = jones(&d, 20).unwrap();
        assert!(leading_term_holds(&la.prediction, &v));
        assert_eq!(v.min_deg().unwrap(), la.half_one_minus_chi() - Exp4::int(1));
        assert!(!leading_term_holds(&la.swapped_cases(), &v));
    }
}
