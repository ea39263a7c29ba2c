//! Sparse Laurent polynomials with exact integer coefficients.
//!
//! Exponents are stored in quarter units ([`Exp4`]) so that `t^(1/2)`, `t^(1/4)`
//! and `A`-powers all live in one exact representation.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// An exponent measured in quarters: `Exp4(2)` is `1/2`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Exp4(pub i64);

impl Exp4 {
    pub const ZERO: Exp4 = Exp4(0);

    pub const fn int(n: i64) -> Self {
        Exp4(4 * n)
    }

    pub const fn half(n: i64) -> Self {
        Exp4(2 * n)
    }

    pub const fn quarters(self) -> i64 {
        self.0
    }

    pub const fn is_integral(self) -> bool {
        self.0 % 4 == 0
    }

    pub const fn is_half_integral(self) -> bool {
        self.0 % 2 == 0
    }

    pub fn to_int(self) -> Option<i64> {
        self.is_integral().then_some(self.0 / 4)
    }

    /// Value times two, when that is an integer.
    pub fn to_halves(self) -> Option<i64> {
        self.is_half_integral().then_some(self.0 / 2)
    }
}

impl Add for Exp4 {
    type Output = Exp4;
    fn add(self, o: Exp4) -> Exp4 {
        Exp4(self.0 + o.0)
    }
}

impl Sub for Exp4 {
    type Output = Exp4;
    fn sub(self, o: Exp4) -> Exp4 {
        Exp4(self.0 - o.0)
    }
}

impl Neg for Exp4 {
    type Output = Exp4;
    fn neg(self) -> Exp4 {
        Exp4(-self.0)
    }
}

impl Mul<i64> for Exp4 {
    type Output = Exp4;
    fn mul(self, k: i64) -> Exp4 {
        Exp4(self.0 * k)
    }
}

impl fmt::Display for Exp4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let q = self.0;
        if q % 4 == 0 {
            write!(f, "{}", q / 4)
        } else if q % 2 == 0 {
            write!(f, "{}/2", q / 2)
        } else {
            write!(f, "{}/4", q)
        }
    }
}

/// Variable tag. Polynomials in different variables never mix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Var {
    T,
    A,
    L,
    M,
    Z,
}

impl Var {
    pub fn name(self) -> &'static str {
        match self {
            Var::T => "t",
            Var::A => "A",
            Var::L => "l",
            Var::M => "m",
            Var::Z => "z",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolyError {
    VarMismatch,
    ZeroPolynomial,
    /// A substitution left a nonzero imaginary part or a nonzero remainder.
    NotIntegral(&'static str),
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::VarMismatch => f.write_str("variable tags do not match"),
            PolyError::ZeroPolynomial => f.write_str("degree of the zero polynomial is undefined"),
            PolyError::NotIntegral(what) => write!(f, "substitution failed: {what}"),
        }
    }
}

impl core::error::Error for PolyError {}

/// Laurent polynomial in one variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly1 {
    var: Var,
    terms: BTreeMap<Exp4, BigInt>,
}

impl LaurentPoly1 {
    pub fn zero(var: Var) -> Self {
        LaurentPoly1 { var, terms: BTreeMap::new() }
    }

    pub fn one(var: Var) -> Self {
        Self::monomial(var, BigInt::one(), Exp4::ZERO)
    }

    pub fn monomial(var: Var, c: impl Into<BigInt>, e: Exp4) -> Self {
        let mut p = Self::zero(var);
        p.add_term(e, c.into());
        p
    }

    /// Build from `(exponent, coefficient)` pairs; repeated exponents are summed.
    pub fn from_terms<C: Into<BigInt>>(var: Var, it: impl IntoIterator<Item = (Exp4, C)>) -> Self {
        let mut p = Self::zero(var);
        for (e, c) in it {
            p.add_term(e, c.into());
        }
        p
    }

    /// Consecutive integer powers starting at `lo`.
    pub fn from_coeffs(var: Var, lo: i64, coeffs: &[i64]) -> Self {
        Self::from_terms(var, coeffs.iter().enumerate().map(|(k, &c)| (Exp4::int(lo + k as i64), c)))
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Exp4, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, e: Exp4, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn coeff(&self, e: Exp4) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    pub fn min_deg(&self) -> Result<Exp4, PolyError> {
        self.terms.keys().next().copied().ok_or(PolyError::ZeroPolynomial)
    }

    pub fn max_deg(&self) -> Result<Exp4, PolyError> {
        self.terms.keys().next_back().copied().ok_or(PolyError::ZeroPolynomial)
    }

    pub fn span(&self) -> Result<Exp4, PolyError> {
        Ok(self.max_deg()? - self.min_deg()?)
    }

    pub fn min_cf(&self) -> Result<BigInt, PolyError> {
        self.terms.values().next().cloned().ok_or(PolyError::ZeroPolynomial)
    }

    pub fn max_cf(&self) -> Result<BigInt, PolyError> {
        self.terms.values().next_back().cloned().ok_or(PolyError::ZeroPolynomial)
    }

    fn same_var(&self, o: &Self) -> Result<(), PolyError> {
        if self.var == o.var {
            Ok(())
        } else {
            Err(PolyError::VarMismatch)
        }
    }

    pub fn try_add(&self, o: &Self) -> Result<Self, PolyError> {
        self.same_var(o)?;
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(*e, c.clone());
        }
        Ok(r)
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self, PolyError> {
        self.try_add(&o.neg_ref())
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self, PolyError> {
        self.same_var(o)?;
        let mut r = Self::zero(self.var);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                r.add_term(*e1 + *e2, c1 * c2);
            }
        }
        Ok(r)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut r = Self::one(self.var);
        for _ in 0..k {
            r = &r * self;
        }
        r
    }

    fn neg_ref(&self) -> Self {
        LaurentPoly1 { var: self.var, terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }

    /// Multiply by `c * var^e`.
    pub fn scale(&self, c: &BigInt, e: Exp4) -> Self {
        let mut r = Self::zero(self.var);
        for (e1, c1) in &self.terms {
            r.add_term(*e1 + e, c1 * c);
        }
        r
    }

    /// Substitute `var -> var^k` (with `k` possibly negative) and retag.
    pub fn rescale_exponents(&self, var: Var, num: i64, den: i64) -> Self {
        let mut r = Self::zero(var);
        for (e, c) in &self.terms {
            debug_assert_eq!((e.0 * num) % den, 0);
            r.add_term(Exp4(e.0 * num / den), c.clone());
        }
        r
    }

    pub fn retag(&self, var: Var) -> Self {
        LaurentPoly1 { var, terms: self.terms.clone() }
    }

    /// Coefficient-list notation: integer powers listed consecutively with the
    /// constant term bracketed, e.g. `(-3 [1] 2)`. Non-integral exponent sets are
    /// listed from their lowest power, prefixed by that power.
    pub fn to_list_notation(&self) -> String {
        if self.is_zero() {
            return "([0])".into();
        }
        let lo = self.min_deg().unwrap();
        let hi = self.max_deg().unwrap();
        let residue = lo.0.rem_euclid(4);
        if self.terms.keys().any(|e| e.0.rem_euclid(4) != residue) {
            // mixed quarter classes: fall back to monomials
            return format!("{self}");
        }
        let mut out = String::new();
        if residue == 0 {
            let a = lo.0.min(0) / 4;
            let b = hi.0.max(0) / 4;
            out.push('(');
            for k in a..=b {
                if k > a {
                    out.push(' ');
                }
                let c = self.coeff(Exp4::int(k));
                if k == 0 {
                    out.push_str(&format!("[{c}]"));
                } else {
                    out.push_str(&c.to_string());
                }
            }
            out.push(')');
        } else {
            out.push_str(&format!("{}^({})(", self.var.name(), lo));
            let mut e = lo;
            let mut first = true;
            while e <= hi {
                if !first {
                    out.push(' ');
                }
                first = false;
                out.push_str(&self.coeff(e).to_string());
                e = e + Exp4::int(1);
            }
            out.push(')');
        }
        out
    }

    /// `(exponent in quarters, decimal coefficient)` pairs, ascending.
    pub fn to_json_terms(&self) -> Vec<(i64, String)> {
        self.terms.iter().map(|(e, c)| (e.0, c.to_string())).collect()
    }

    pub fn from_json_terms(var: Var, terms: &[(i64, String)]) -> Option<Self> {
        let mut p = Self::zero(var);
        for (q, c) in terms {
            p.add_term(Exp4(*q), c.parse().ok()?);
        }
        Some(p)
    }
}

fn write_power(f: &mut fmt::Formatter<'_>, var: &str, e: Exp4) -> fmt::Result {
    if e == Exp4::ZERO {
        return Ok(());
    }
    if e == Exp4::int(1) {
        return f.write_str(var);
    }
    match e.to_int() {
        Some(n) => write!(f, "{var}^{n}"),
        None => write!(f, "{var}^({e})"),
    }
}

fn write_signed_coeff(f: &mut fmt::Formatter<'_>, first: bool, c: &BigInt, has_power: bool) -> fmt::Result {
    let mag = c.abs();
    if first {
        if c.is_negative() {
            f.write_str("-")?;
        }
    } else if c.is_negative() {
        f.write_str(" - ")?;
    } else {
        f.write_str(" + ")?;
    }
    if !mag.is_one() || !has_power {
        write!(f, "{mag}")?;
    }
    Ok(())
}

impl fmt::Display for LaurentPoly1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            let has_power = *e != Exp4::ZERO;
            write_signed_coeff(f, k == 0, c, has_power)?;
            write_power(f, self.var.name(), *e)?;
        }
        Ok(())
    }
}

impl<'a> Add<&'a LaurentPoly1> for &'a LaurentPoly1 {
    type Output = LaurentPoly1;
    /// Panics on mismatched variables; use [`LaurentPoly1::try_add`] otherwise.
    fn add(self, o: &LaurentPoly1) -> LaurentPoly1 {
        self.try_add(o).expect("variable mismatch")
    }
}

impl<'a> Sub<&'a LaurentPoly1> for &'a LaurentPoly1 {
    type Output = LaurentPoly1;
    fn sub(self, o: &LaurentPoly1) -> LaurentPoly1 {
        self.try_sub(o).expect("variable mismatch")
    }
}

impl<'a> Mul<&'a LaurentPoly1> for &'a LaurentPoly1 {
    type Output = LaurentPoly1;
    fn mul(self, o: &LaurentPoly1) -> LaurentPoly1 {
        self.try_mul(o).expect("variable mismatch")
    }
}

impl Neg for &LaurentPoly1 {
    type Output = LaurentPoly1;
    fn neg(self) -> LaurentPoly1 {
        self.neg_ref()
    }
}

/// Laurent polynomial in two variables, e.g. the HOMFLY polynomial in `(l, m)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly2 {
    vars: (Var, Var),
    terms: BTreeMap<(Exp4, Exp4), BigInt>,
}

impl LaurentPoly2 {
    pub fn zero(vars: (Var, Var)) -> Self {
        LaurentPoly2 { vars, terms: BTreeMap::new() }
    }

    pub fn one(vars: (Var, Var)) -> Self {
        Self::monomial(vars, BigInt::one(), Exp4::ZERO, Exp4::ZERO)
    }

    pub fn monomial(vars: (Var, Var), c: impl Into<BigInt>, e1: Exp4, e2: Exp4) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(e1, e2, c.into());
        p
    }

    /// Build from `(first exponent, second exponent, coefficient)` with integer exponents.
    pub fn from_int_terms(vars: (Var, Var), it: impl IntoIterator<Item = (i64, i64, i64)>) -> Self {
        let mut p = Self::zero(vars);
        for (a, b, c) in it {
            p.add_term(Exp4::int(a), Exp4::int(b), BigInt::from(c));
        }
        p
    }

    pub fn vars(&self) -> (Var, Var) {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((Exp4, Exp4), &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn add_term(&mut self, e1: Exp4, e2: Exp4, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let k = (e1, e2);
        let slot = self.terms.entry(k).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn coeff(&self, e1: Exp4, e2: Exp4) -> BigInt {
        self.terms.get(&(e1, e2)).cloned().unwrap_or_default()
    }

    fn same_vars(&self, o: &Self) -> Result<(), PolyError> {
        if self.vars == o.vars {
            Ok(())
        } else {
            Err(PolyError::VarMismatch)
        }
    }

    pub fn try_add(&self, o: &Self) -> Result<Self, PolyError> {
        self.same_vars(o)?;
        let mut r = self.clone();
        r.add_assign_ref(o);
        Ok(r)
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self, PolyError> {
        self.same_vars(o)?;
        let mut r = self.clone();
        for ((a, b), c) in &o.terms {
            r.add_term(*a, *b, -c);
        }
        Ok(r)
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self, PolyError> {
        self.same_vars(o)?;
        let mut r = Self::zero(self.vars);
        for ((a1, b1), c1) in &self.terms {
            for ((a2, b2), c2) in &o.terms {
                r.add_term(*a1 + *a2, *b1 + *b2, c1 * c2);
            }
        }
        Ok(r)
    }

    fn add_assign_ref(&mut self, o: &Self) {
        for ((a, b), c) in &o.terms {
            self.add_term(*a, *b, c.clone());
        }
    }

    /// `self += c * x^e1 * y^e2 * o`.
    pub fn add_scaled(&mut self, o: &Self, c: i64, e1: Exp4, e2: Exp4) {
        debug_assert_eq!(self.vars, o.vars);
        let c = BigInt::from(c);
        for ((a, b), k) in &o.terms {
            self.add_term(*a + e1, *b + e2, k * &c);
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut r = Self::one(self.vars);
        for _ in 0..k {
            r = &r * self;
        }
        r
    }

    fn degs<F: Fn(&(Exp4, Exp4)) -> Exp4>(&self, f: F) -> Result<(Exp4, Exp4), PolyError> {
        let mut it = self.terms.keys().map(f);
        let first = it.next().ok_or(PolyError::ZeroPolynomial)?;
        Ok(it.fold((first, first), |(lo, hi), e| (lo.min(e), hi.max(e))))
    }

    pub fn min_deg_first(&self) -> Result<Exp4, PolyError> {
        self.degs(|k| k.0).map(|d| d.0)
    }

    pub fn max_deg_first(&self) -> Result<Exp4, PolyError> {
        self.degs(|k| k.0).map(|d| d.1)
    }

    pub fn min_deg_second(&self) -> Result<Exp4, PolyError> {
        self.degs(|k| k.1).map(|d| d.0)
    }

    pub fn max_deg_second(&self) -> Result<Exp4, PolyError> {
        self.degs(|k| k.1).map(|d| d.1)
    }

    /// Coefficient of `x^e` as a polynomial in the second variable.
    pub fn coeff_first(&self, e: Exp4) -> LaurentPoly1 {
        LaurentPoly1::from_terms(self.vars.1, self.terms.iter().filter(|(k, _)| k.0 == e).map(|(k, c)| (k.1, c.clone())))
    }

    /// `((e1 quarters, e2 quarters), coefficient)` triples.
    pub fn to_json_terms(&self) -> Vec<(i64, i64, String)> {
        self.terms.iter().map(|((a, b), c)| (a.0, b.0, c.to_string())).collect()
    }
}

impl fmt::Display for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let (x, y) = (self.vars.0.name(), self.vars.1.name());
        for (k, ((a, b), c)) in self.terms.iter().enumerate() {
            let has_power = *a != Exp4::ZERO || *b != Exp4::ZERO;
            write_signed_coeff(f, k == 0, c, has_power)?;
            write_power(f, x, *a)?;
            write_power(f, y, *b)?;
        }
        Ok(())
    }
}

impl<'a> Add<&'a LaurentPoly2> for &'a LaurentPoly2 {
    type Output = LaurentPoly2;
    fn add(self, o: &LaurentPoly2) -> LaurentPoly2 {
        self.try_add(o).expect("variable mismatch")
    }
}

impl<'a> Sub<&'a LaurentPoly2> for &'a LaurentPoly2 {
    type Output = LaurentPoly2;
    fn sub(self, o: &LaurentPoly2) -> LaurentPoly2 {
        self.try_sub(o).expect("variable mismatch")
    }
}

impl<'a> Mul<&'a LaurentPoly2> for &'a LaurentPoly2 {
    type Output = LaurentPoly2;
    fn mul(self, o: &LaurentPoly2) -> LaurentPoly2 {
        self.try_mul(o).expect("variable mismatch")
    }
}

pub const HOMFLY_VARS: (Var, Var) = (Var::L, Var::M);

// ---------------------------------------------------------------------------
// Gaussian-integer helpers for the (l, m) substitutions.

#[derive(Clone, Debug, Default, PartialEq, Eq)]
struct Gauss {
    re: BigInt,
    im: BigInt,
}

impl Gauss {
    /// `i^k`
    fn i_pow(k: i64) -> Gauss {
        match k.rem_euclid(4) {
            0 => Gauss { re: BigInt::one(), im: BigInt::zero() },
            1 => Gauss { re: BigInt::zero(), im: BigInt::one() },
            2 => Gauss { re: -BigInt::one(), im: BigInt::zero() },
            _ => Gauss { re: BigInt::zero(), im: -BigInt::one() },
        }
    }

    fn mul(&self, o: &Gauss) -> Gauss {
        Gauss { re: &self.re * &o.re - &self.im * &o.im, im: &self.re * &o.im + &self.im * &o.re }
    }
}

/// Substitute `l -> u * i * t^a`-style monomials and `m -> i * B(t)` where `B` is a
/// two-term binomial in `t^(1/2)`, then divide out the powers of `B` introduced to
/// clear negative `m` exponents.
///
/// `l_unit` is the power of `i` multiplying `l`, `l_sign` its sign, `l_exp` the
/// t-exponent; `binom` is `(e_pos, e_neg)` for `t^{e_pos} - t^{e_neg}`.
fn substitute(p: &LaurentPoly2, l_sign: i64, l_exp: Exp4, binom: (Exp4, Exp4)) -> Result<LaurentPoly1, PolyError> {
    if p.vars != HOMFLY_VARS {
        return Err(PolyError::VarMismatch);
    }
    if p.is_zero() {
        return Ok(LaurentPoly1::zero(Var::T));
    }
    for (a, b) in p.terms.keys() {
        if !a.is_integral() || !b.is_integral() {
            return Err(PolyError::NotIntegral("non-integral exponent in P"));
        }
    }
    let mmin = p.min_deg_second()?.to_int().unwrap();
    let mmax = p.max_deg_second()?.to_int().unwrap();
    let k = (-mmin).max(0);
    let b = LaurentPoly1::from_terms(Var::T, [(binom.0, 1), (binom.1, -1)]);
    let top = (mmax + k) as usize;
    let mut bpow = Vec::with_capacity(top + 1);
    bpow.push(LaurentPoly1::one(Var::T));
    for j in 1..=top {
        let next = &bpow[j - 1] * &b;
        bpow.push(next);
    }
    // Sum of c * (l_sign * i * t^l_exp)^a * i^(b+k) * B^(b+k), times (-i)^k.
    let mut re = LaurentPoly1::zero(Var::T);
    let mut im = LaurentPoly1::zero(Var::T);
    for ((a, bb), c) in &p.terms {
        let a = a.to_int().unwrap();
        let bb = bb.to_int().unwrap() + k;
        let sign = if a.rem_euclid(2) == 1 && l_sign < 0 { -1 } else { 1 };
        let unit = Gauss::i_pow(a + bb).mul(&Gauss::i_pow(-k));
        let coef_re: BigInt = &unit.re * c * BigInt::from(sign);
        let coef_im: BigInt = &unit.im * c * BigInt::from(sign);
        let shifted = l_exp * a;
        let base = &bpow[bb as usize];
        if !coef_re.is_zero() {
            re = &re + &base.scale(&coef_re, shifted);
        }
        if !coef_im.is_zero() {
            im = &im + &base.scale(&coef_im, shifted);
        }
    }
    if !im.is_zero() {
        return Err(PolyError::NotIntegral("residual imaginary part"));
    }
    let mut q = re;
    for _ in 0..k {
        q = div_exact_binomial(&q, binom)?;
    }
    Ok(q)
}

/// Exact division by `t^{hi} - t^{lo}` (hi > lo).
fn div_exact_binomial(f: &LaurentPoly1, (e1, e2): (Exp4, Exp4)) -> Result<LaurentPoly1, PolyError> {
    // f = (t^e1 - t^e2) q, done by peeling the top term.
    let (hi, lo, s) = if e1 > e2 { (e1, e2, 1i64) } else { (e2, e1, -1i64) };
    // divisor = s * (t^hi - t^lo)
    let mut r = f.clone();
    let mut q = LaurentPoly1::zero(f.var);
    let sb = BigInt::from(s);
    while let Ok(top) = r.max_deg() {
        let c = r.coeff(top);
        let e = top - hi;
        let qc = &c * &sb;
        q.add_term(e, qc.clone());
        // subtract qc * s * (t^top - t^(e+lo)) = c * (t^top - t^(e+lo))
        r.add_term(top, -c.clone());
        r.add_term(e + lo, c);
        if let Ok(m) = r.min_deg() {
            if r.max_deg().unwrap() < m + (hi - lo) && !r.is_zero() {
                // remaining span is smaller than the divisor's: nonzero remainder
                return Err(PolyError::NotIntegral("division left a remainder"));
            }
        }
    }
    Ok(q)
}

/// Jones polynomial from HOMFLY: `V(t) = P(l = -i t, m = i (t^{-1/2} - t^{1/2}))`.
pub fn homfly_to_jones(p: &LaurentPoly2) -> Result<LaurentPoly1, PolyError> {
    substitute(p, -1, Exp4::int(1), (Exp4::half(-1), Exp4::half(1)))
}

/// Conway-normalized Alexander polynomial: `P(l = i, m = i (t^{1/2} - t^{-1/2}))`.
pub fn homfly_to_alexander(p: &LaurentPoly2) -> Result<LaurentPoly1, PolyError> {
    substitute(p, 1, Exp4::ZERO, (Exp4::half(1), Exp4::half(-1)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trefoil_p() -> LaurentPoly2 {
        // l^2 m^2 - l^4 - 2 l^2
        LaurentPoly2::from_int_terms(HOMFLY_VARS, [(2, 2, 1), (4, 0, -1), (2, 0, -2)])
    }

    #[test]
    fn exp4_display() {
        assert_eq!(Exp4::half(1).to_string(), "1/2");
        assert_eq!(Exp4(-3).to_string(), "-3/4");
        assert_eq!(Exp4::int(-2).to_string(), "-2");
    }

    #[test]
    fn list_notation() {
        let p = LaurentPoly1::from_coeffs(Var::T, -1, &[-3, 1, 2]);
        assert_eq!(p.to_list_notation(), "(-3 [1] 2)");
        let q = LaurentPoly1::from_coeffs(Var::T, 1, &[1, 0, 1, -1]);
        assert_eq!(q.to_list_notation(), "([0] 1 0 1 -1)");
        assert_eq!(q.to_string(), "t + t^3 - t^4");
    }

    #[test]
    fn degrees_of_zero_error() {
        assert_eq!(LaurentPoly1::zero(Var::T).min_deg(), Err(PolyError::ZeroPolynomial));
        assert_eq!(LaurentPoly2::zero(HOMFLY_VARS).max_deg_second(), Err(PolyError::ZeroPolynomial));
    }

    #[test]
    fn tag_mismatch() {
        let a = LaurentPoly1::one(Var::T);
        let b = LaurentPoly1::one(Var::A);
        assert_eq!(a.try_add(&b), Err(PolyError::VarMismatch));
        assert_eq!(a.try_mul(&b), Err(PolyError::VarMismatch));
    }

    #[test]
    fn trefoil_substitutions() {
        let v = homfly_to_jones(&trefoil_p()).unwrap();
        assert_eq!(v, LaurentPoly1::from_coeffs(Var::T, 1, &[1, 0, 1, -1]));
        let d = homfly_to_alexander(&trefoil_p()).unwrap();
        assert_eq!(d, LaurentPoly1::from_coeffs(Var::T, -1, &[1, -1, 1]));
    }

    #[test]
    fn hopf_substitution_divides() {
        // -l m + (l^3 + l) m^-1
        let p = LaurentPoly2::from_int_terms(HOMFLY_VARS, [(1, 1, -1), (3, -1, 1), (1, -1, 1)]);
        let v = homfly_to_jones(&p).unwrap();
        let want = LaurentPoly1::from_terms(Var::T, [(Exp4::half(1), -1), (Exp4::half(5), -1)]);
        assert_eq!(v, want);
        let d = homfly_to_alexander(&p).unwrap();
        assert_eq!(d.span().unwrap(), Exp4::int(1));
    }

    #[test]
    fn non_divisible_is_error() {
        // m^-1 alone does not come from any link
        let p = LaurentPoly2::from_int_terms(HOMFLY_VARS, [(0, -1, 1)]);
        assert!(homfly_to_jones(&p).is_err());
    }
}
