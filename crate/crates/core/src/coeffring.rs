//! Exact coefficients: Laurent polynomials in `u = r^(1/2)` and `v = s^(1/2)`
//! over the rationals.
//!
//! Every scalar that shows up in the generator actions and in the
//! denominator-cleared relations lives in this ring. Half powers of `r` and
//! `s` are stored by doubling the exponent, so `(rs)^(1/2)` is the monomial
//! `u v`. [`QuarterElem`] extends the ring by `r^(1/4)` and `s^(1/4)` as a
//! free module of rank four; it is only used for relation coefficients.
//!
//! The canonical text form lists terms by descending `(u, v)` exponent and
//! renders each one as `c*r^(p)*s^(q)`, dropping zero-exponent factors:
//!
//! ```
//! use fermifock::coeffring::RingElem;
//!
//! let x: RingElem = "r - s".parse().unwrap();
//! assert_eq!(x.to_string(), "1*r^(1) - 1*s^(1)");
//! assert_eq!(x.to_string().parse::<RingElem>().unwrap(), x);
//! ```

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, Zero};

use crate::cursor::Cursor;
use crate::error::{Error, Result};

/// `r^(u/2) s^(v/2)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub u: i64,
    pub v: i64,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { u: 0, v: 0 };

    pub const fn new(u: i64, v: i64) -> Self {
        Monomial { u, v }
    }

    /// `r^k s^m` for integer `k`, `m`.
    pub const fn rs(k: i64, m: i64) -> Self {
        Monomial { u: 2 * k, v: 2 * m }
    }

    pub fn from_exponents(r_exp: Ratio<i64>, s_exp: Ratio<i64>) -> Result<Self> {
        Ok(Monomial {
            u: doubled(r_exp)?,
            v: doubled(s_exp)?,
        })
    }

    pub fn r_exponent(self) -> Ratio<i64> {
        Ratio::new(self.u, 2)
    }

    pub fn s_exponent(self) -> Ratio<i64> {
        Ratio::new(self.v, 2)
    }

    pub fn is_one(self) -> bool {
        self == Monomial::ONE
    }

    pub fn inv(self) -> Self {
        Monomial::new(-self.u, -self.v)
    }

    pub fn pow(self, k: i64) -> Self {
        Monomial::new(self.u * k, self.v * k)
    }

    /// Square root, when both doubled exponents are even.
    pub fn sqrt(self) -> Option<Self> {
        (self.u % 2 == 0 && self.v % 2 == 0).then(|| Monomial::new(self.u / 2, self.v / 2))
    }

    /// True when this is an integer power of `r` times an integer power of `s`.
    pub fn is_integral(self) -> bool {
        self.u % 2 == 0 && self.v % 2 == 0
    }
}

impl Mul for Monomial {
    type Output = Monomial;
    fn mul(self, rhs: Monomial) -> Monomial {
        Monomial::new(self.u + rhs.u, self.v + rhs.v)
    }
}

fn doubled(e: Ratio<i64>) -> Result<i64> {
    let twice = e * 2;
    if twice.is_integer() {
        Ok(twice.to_integer())
    } else {
        Err(Error::NonHalfExponent(e.to_string()))
    }
}

fn half_exponent_text(doubled: i64) -> String {
    if doubled % 2 == 0 {
        (doubled / 2).to_string()
    } else {
        format!("{doubled}/2")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", RingElem::monomial(*self))
    }
}

/// Element of `Q[r^(±1/2), s^(±1/2)]` in normal form: no zero coefficient is
/// ever stored, so structural equality is ring equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RingElem {
    terms: BTreeMap<Monomial, BigRational>,
}

impl RingElem {
    pub fn zero() -> Self {
        RingElem::default()
    }

    pub fn one() -> Self {
        RingElem::monomial(Monomial::ONE)
    }

    pub fn monomial(m: Monomial) -> Self {
        RingElem::term(m, BigRational::one())
    }

    pub fn term(m: Monomial, c: BigRational) -> Self {
        let mut x = RingElem::zero();
        x.add_term(m, c);
        x
    }

    pub fn from_int(n: i64) -> Self {
        RingElem::term(Monomial::ONE, BigRational::from_integer(n.into()))
    }

    pub fn r() -> Self {
        RingElem::monomial(Monomial::rs(1, 0))
    }

    pub fn s() -> Self {
        RingElem::monomial(Monomial::rs(0, 1))
    }

    /// Builds an element from `(r exponent, s exponent, coefficient)` triples.
    /// Exponents must be multiples of 1/2; like terms are merged.
    pub fn make(terms: &[(Ratio<i64>, Ratio<i64>, BigRational)]) -> Result<Self> {
        let mut x = RingElem::zero();
        for (re, se, c) in terms {
            x.add_term(Monomial::from_exponents(*re, *se)?, c.clone());
        }
        Ok(x)
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_monomial()
            .is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    /// The single term, if there is exactly one.
    pub fn as_monomial(&self) -> Option<(Monomial, &BigRational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(m, c)| (*m, c))
        } else {
            None
        }
    }

    /// Multiplicative inverse; only single-term elements are units.
    pub fn try_inverse(&self) -> Option<RingElem> {
        let (m, c) = self.as_monomial()?;
        Some(RingElem::term(m.inv(), c.recip()))
    }

    pub fn mul_monomial(&self, m: Monomial) -> RingElem {
        if m.is_one() {
            return self.clone();
        }
        RingElem {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (*k * m, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> RingElem {
        if c.is_zero() {
            return RingElem::zero();
        }
        RingElem {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> RingElem {
        let mut acc = RingElem::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// The automorphism `r -> r^-1`, `s -> s^-1`.
    pub fn invert_vars(&self) -> RingElem {
        RingElem {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.inv(), c.clone()))
                .collect(),
        }
    }

    /// One-parameter specialization `u -> t`, `v -> t^-1` (so `r -> t^2`,
    /// `s -> t^-2`).
    pub fn specialize(&self) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(m.u - m.v, c.clone());
        }
        out
    }
}

impl From<Monomial> for RingElem {
    fn from(m: Monomial) -> Self {
        RingElem::monomial(m)
    }
}

impl From<i64> for RingElem {
    fn from(n: i64) -> Self {
        RingElem::from_int(n)
    }
}

impl Add for &RingElem {
    type Output = RingElem;
    fn add(self, rhs: &RingElem) -> RingElem {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &RingElem {
    type Output = RingElem;
    fn sub(self, rhs: &RingElem) -> RingElem {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl Mul for &RingElem {
    type Output = RingElem;
    fn mul(self, rhs: &RingElem) -> RingElem {
        let mut out = RingElem::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(*ma * *mb, ca * cb);
            }
        }
        out
    }
}

impl Neg for &RingElem {
    type Output = RingElem;
    fn neg(self) -> RingElem {
        RingElem {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($t:ty; $($tr:ident $f:ident),*) => {$(
        impl $tr for $t {
            type Output = $t;
            fn $f(self, rhs: $t) -> $t {
                (&self).$f(&rhs)
            }
        }
    )*};
}
forward_owned!(RingElem; Add add, Sub sub, Mul mul);

impl Neg for RingElem {
    type Output = RingElem;
    fn neg(self) -> RingElem {
        -&self
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, m: &Monomial, c: &BigRational) -> fmt::Result {
    write!(f, "{c}")?;
    if m.u != 0 {
        write!(f, "*r^({})", half_exponent_text(m.u))?;
    }
    if m.v != 0 {
        write!(f, "*s^({})", half_exponent_text(m.v))?;
    }
    Ok(())
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            if idx == 0 {
                write_term(f, m, c)?;
            } else if c.is_negative() {
                write!(f, " - ")?;
                write_term(f, m, &-c.clone())?;
            } else {
                write!(f, " + ")?;
                write_term(f, m, c)?;
            }
        }
        Ok(())
    }
}

impl FromStr for RingElem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new(s);
        let x = parse_sum(&mut cur)?;
        if !cur.at_end() {
            return Err(cur.error("unexpected trailing input"));
        }
        Ok(x)
    }
}

/// `['+'|'-'] product (('+'|'-') product)*`
pub(crate) fn parse_sum(cur: &mut Cursor<'_>) -> Result<RingElem> {
    let mut acc = RingElem::zero();
    let mut negate = if cur.eat('-') {
        true
    } else {
        cur.eat('+');
        false
    };
    loop {
        let t = parse_product(cur)?;
        acc = if negate { &acc - &t } else { &acc + &t };
        if cur.eat('+') {
            negate = false;
        } else if cur.eat('-') {
            negate = true;
        } else {
            return Ok(acc);
        }
    }
}

fn parse_product(cur: &mut Cursor<'_>) -> Result<RingElem> {
    let mut acc = match parse_factor(cur)? {
        Some(x) => x,
        None => return Err(cur.error("expected a number, r, s or '('")),
    };
    while cur.eat('*') {
        match parse_factor(cur)? {
            Some(x) => acc = &acc * &x,
            None => return Err(cur.error("expected a number, r, s or '('")),
        }
    }
    Ok(acc)
}

/// A single scalar factor: a rational number, `r`/`s` with an optional
/// exponent, or a parenthesized sum. Returns `None` without consuming input
/// when the next token does not start a scalar.
pub(crate) fn parse_factor(cur: &mut Cursor<'_>) -> Result<Option<RingElem>> {
    match cur.peek() {
        Some(c) if c.is_ascii_digit() => {
            let num = cur.unsigned()?;
            let den = if cur.eat('/') {
                let at = cur.pos();
                let d = cur.unsigned()?;
                if d.is_zero() {
                    return Err(Error::parse(at, "zero denominator"));
                }
                d
            } else {
                BigInt::one()
            };
            Ok(Some(RingElem::term(
                Monomial::ONE,
                BigRational::new(num, den),
            )))
        }
        Some('(') => {
            cur.eat('(');
            let x = parse_sum(cur)?;
            cur.expect(')')?;
            Ok(Some(x))
        }
        _ => {
            let var = if cur.eat_keyword("r") {
                'r'
            } else if cur.eat_keyword("s") {
                's'
            } else {
                return Ok(None);
            };
            let e = if cur.eat('^') {
                parse_exponent(cur)?
            } else {
                2
            };
            let m = if var == 'r' {
                Monomial::new(e, 0)
            } else {
                Monomial::new(0, e)
            };
            Ok(Some(RingElem::monomial(m)))
        }
    }
}

/// Returns the doubled exponent.
fn parse_exponent(cur: &mut Cursor<'_>) -> Result<i64> {
    let at = cur.pos();
    let paren = cur.eat('(');
    let neg = if cur.eat('-') {
        true
    } else {
        cur.eat('+');
        false
    };
    let num: i64 = cur
        .unsigned()?
        .try_into()
        .map_err(|_| Error::parse(at, "exponent out of range"))?;
    let den: i64 = if paren && cur.eat('/') {
        cur.unsigned()?
            .try_into()
            .map_err(|_| Error::parse(at, "exponent out of range"))?
    } else {
        1
    };
    if paren {
        cur.expect(')')?;
    }
    if den == 0 {
        return Err(Error::parse(at, "zero denominator in exponent"));
    }
    let e = Ratio::new(if neg { -num } else { num }, den);
    doubled(e).map_err(|_| Error::parse(at, format!("exponent {e} is not a multiple of 1/2")))
}

/// Laurent polynomial in one variable `t`; the image of [`RingElem::specialize`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(0)
    }

    /// `t^k`.
    pub fn monomial(k: i64) -> Self {
        let mut p = LaurentPoly::zero();
        p.add_term(k, BigRational::one());
        p
    }

    pub fn add_term(&mut self, k: i64, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(k).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, k: i64) -> BigRational {
        self.terms
            .get(&k)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &rhs.terms {
                out.add_term(ka + kb, ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (k, c)) in self.terms.iter().rev().enumerate() {
            let c = if idx == 0 {
                c.clone()
            } else if c.is_negative() {
                write!(f, " - ")?;
                -c.clone()
            } else {
                write!(f, " + ")?;
                c.clone()
            };
            write!(f, "{c}")?;
            if *k != 0 {
                write!(f, "*t^({k})")?;
            }
        }
        Ok(())
    }
}

/// Which of `r^(1/4)`, `s^(1/4)` multiply a component of a [`QuarterElem`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QuarterShift {
    pub r: bool,
    pub s: bool,
}

impl QuarterShift {
    pub const NONE: QuarterShift = QuarterShift { r: false, s: false };

    pub fn is_none(self) -> bool {
        self == QuarterShift::NONE
    }
}

impl fmt::Display for QuarterShift {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.r, self.s) {
            (false, false) => Ok(()),
            (true, false) => write!(f, "r^(1/4)"),
            (false, true) => write!(f, "s^(1/4)"),
            (true, true) => write!(f, "r^(1/4)*s^(1/4)"),
        }
    }
}

/// Element of `Q[r^(±1/4), s^(±1/4)]`, written uniquely as
/// `Σ r^(a/4) s^(b/4) x_ab` with `a, b ∈ {0, 1}` and `x_ab` a [`RingElem`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QuarterElem {
    parts: BTreeMap<QuarterShift, RingElem>,
}

impl QuarterElem {
    pub fn zero() -> Self {
        QuarterElem::default()
    }

    pub fn one() -> Self {
        RingElem::one().into()
    }

    /// `r^(1/4)`.
    pub fn r_quarter() -> Self {
        QuarterElem::shifted(QuarterShift { r: true, s: false }, RingElem::one())
    }

    /// `s^(1/4)`.
    pub fn s_quarter() -> Self {
        QuarterElem::shifted(QuarterShift { r: false, s: true }, RingElem::one())
    }

    pub fn shifted(shift: QuarterShift, x: RingElem) -> Self {
        let mut q = QuarterElem::zero();
        q.add_part(shift, x);
        q
    }

    fn add_part(&mut self, shift: QuarterShift, x: RingElem) {
        if x.is_zero() {
            return;
        }
        let slot = self.parts.entry(shift).or_default();
        *slot = &*slot + &x;
        if slot.is_zero() {
            self.parts.remove(&shift);
        }
    }

    pub fn parts(&self) -> impl Iterator<Item = (QuarterShift, &RingElem)> {
        self.parts.iter().map(|(k, v)| (*k, v))
    }

    pub fn is_zero(&self) -> bool {
        self.parts.is_empty()
    }

    /// The underlying ring element when no quarter powers are involved.
    pub fn as_ring(&self) -> Option<RingElem> {
        match self.parts.len() {
            0 => Some(RingElem::zero()),
            1 => self.parts.get(&QuarterShift::NONE).cloned(),
            _ => None,
        }
    }

    /// `r -> r^-1`, `s -> s^-1`. For a pure power of `r` and `s` this is the
    /// multiplicative inverse.
    pub fn invert_vars(&self) -> QuarterElem {
        let mut out = QuarterElem::zero();
        for (shift, x) in &self.parts {
            // r^(-1/4) = r^(1/4) r^(-1/2)
            let carry = Monomial::new(-(shift.r as i64), -(shift.s as i64));
            out.add_part(*shift, x.invert_vars().mul_monomial(carry));
        }
        out
    }
}

impl From<RingElem> for QuarterElem {
    fn from(x: RingElem) -> Self {
        QuarterElem::shifted(QuarterShift::NONE, x)
    }
}

impl From<Monomial> for QuarterElem {
    fn from(m: Monomial) -> Self {
        RingElem::monomial(m).into()
    }
}

impl Add for &QuarterElem {
    type Output = QuarterElem;
    fn add(self, rhs: &QuarterElem) -> QuarterElem {
        let mut out = self.clone();
        for (k, x) in &rhs.parts {
            out.add_part(*k, x.clone());
        }
        out
    }
}

impl Sub for &QuarterElem {
    type Output = QuarterElem;
    fn sub(self, rhs: &QuarterElem) -> QuarterElem {
        let mut out = self.clone();
        for (k, x) in &rhs.parts {
            out.add_part(*k, -x);
        }
        out
    }
}

impl Neg for &QuarterElem {
    type Output = QuarterElem;
    fn neg(self) -> QuarterElem {
        &QuarterElem::zero() - self
    }
}

impl Mul for &QuarterElem {
    type Output = QuarterElem;
    fn mul(self, rhs: &QuarterElem) -> QuarterElem {
        let mut out = QuarterElem::zero();
        for (ka, xa) in &self.parts {
            for (kb, xb) in &rhs.parts {
                let carry = Monomial::new((ka.r && kb.r) as i64, (ka.s && kb.s) as i64);
                let shift = QuarterShift {
                    r: ka.r ^ kb.r,
                    s: ka.s ^ kb.s,
                };
                out.add_part(shift, (xa * xb).mul_monomial(carry));
            }
        }
        out
    }
}

forward_owned!(QuarterElem; Add add, Sub sub, Mul mul);

impl fmt::Display for QuarterElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        for (idx, (shift, x)) in self.parts.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            if shift.is_none() {
                if self.parts.len() == 1 {
                    write!(f, "{x}")?;
                } else {
                    write!(f, "({x})")?;
                }
            } else {
                write!(f, "{shift}*({x})")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Ratio<i64> {
        Ratio::new(n, d)
    }

    fn c(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn p(s: &str) -> RingElem {
        s.parse().unwrap()
    }

    #[test]
    fn make_unit() {
        let x = RingElem::make(&[(q(0, 1), q(0, 1), c(1))]).unwrap();
        assert!(x.is_one());
    }

    #[test]
    fn make_r_minus_s() {
        let x = RingElem::make(&[(q(1, 1), q(0, 1), c(1)), (q(0, 1), q(1, 1), c(-1))]).unwrap();
        assert_eq!(x, &RingElem::r() - &RingElem::s());
    }

    #[test]
    fn make_sqrt_rs_is_uv() {
        let x = RingElem::make(&[(q(1, 2), q(1, 2), c(1))]).unwrap();
        assert_eq!(x, RingElem::monomial(Monomial::new(1, 1)));
    }

    #[test]
    fn make_merges_and_drops_zero() {
        let x = RingElem::make(&[
            (q(1, 1), q(0, 1), c(2)),
            (q(1, 1), q(0, 1), c(-2)),
            (q(0, 1), q(0, 1), c(0)),
        ])
        .unwrap();
        assert!(x.is_zero());
    }

    #[test]
    fn make_rejects_third_powers() {
        let err = RingElem::make(&[(q(1, 3), q(0, 1), c(1))]).unwrap_err();
        assert!(matches!(err, Error::NonHalfExponent(_)));
        assert!(RingElem::make(&[(q(0, 1), q(1, 4), c(1))]).is_err());
    }

    #[test]
    fn difference_of_squares() {
        let r = RingElem::r();
        let s = RingElem::s();
        assert_eq!(&(&r - &s) * &(&r + &s), &(&r * &r) - &(&s * &s));
    }

    #[test]
    fn half_power_difference_of_squares() {
        let ru = RingElem::monomial(Monomial::new(1, 0));
        let sv = RingElem::monomial(Monomial::new(0, 1));
        assert_eq!(&(&ru - &sv) * &(&ru + &sv), p("r - s"));
    }

    #[test]
    fn specialize_examples() {
        assert_eq!(
            (RingElem::r() * RingElem::s()).specialize(),
            LaurentPoly::one()
        );
        let mut expect = LaurentPoly::monomial(2);
        expect.add_term(-2, c(-1));
        assert_eq!(p("r - s").specialize(), expect);
        assert_eq!(p("r^(1/2)*s^(-1/2)").specialize(), LaurentPoly::monomial(2));
    }

    #[test]
    fn canonical_text() {
        assert_eq!(RingElem::zero().to_string(), "0");
        assert_eq!(p("r - s").to_string(), "1*r^(1) - 1*s^(1)");
        assert_eq!(
            p("-3/2 * r^(1/2) * s^(-1)").to_string(),
            "-3/2*r^(1/2)*s^(-1)"
        );
        assert_eq!(p("s + 2 + r").to_string(), "1*r^(1) + 1*s^(1) + 2");
        assert_eq!(p("(r+s)*(r-s)"), p("r^2 - s^2"));
    }

    #[test]
    fn parse_errors_carry_position() {
        match "r^(1/3)".parse::<RingElem>() {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!("r +".parse::<RingElem>().is_err());
        assert!("r s".parse::<RingElem>().is_err());
        assert!("1/0".parse::<RingElem>().is_err());
    }

    #[test]
    fn inverse_only_for_units() {
        let x = p("-2*r^(1/2)*s");
        assert_eq!(&x * &x.try_inverse().unwrap(), RingElem::one());
        assert!(p("r + s").try_inverse().is_none());
        assert!(RingElem::zero().try_inverse().is_none());
    }

    #[test]
    fn quarter_arithmetic() {
        let rq = QuarterElem::r_quarter();
        let r_half: QuarterElem = Monomial::new(1, 0).into();
        assert_eq!(&rq * &rq, r_half);
        let inv = rq.invert_vars();
        assert_eq!(&rq * &inv, QuarterElem::one());
        let sq = QuarterElem::s_quarter();
        let diff = &rq - &sq;
        let sum = &rq + &sq;
        let expect: QuarterElem = (&RingElem::monomial(Monomial::new(1, 0))
            - &RingElem::monomial(Monomial::new(0, 1)))
            .into();
        assert_eq!(&diff * &sum, expect);
        assert!(diff.as_ring().is_none());
    }
}
