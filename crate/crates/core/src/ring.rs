//! The Eisenstein ring `O = Z[ω]`, `ω = e^{2πi/6}`, and its residue field `O/θO = F₃`.
//!
//! Elements are stored as the integer pair `(a, b)` meaning `a + bω`. The
//! minimal polynomial `ω² = ω − 1` is the only rewriting rule.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("division by zero in the Eisenstein ring")]
    DivisionByZero,
    #[error("{0} is not divisible by {1}")]
    NotDivisible(EisensteinInteger, EisensteinInteger),
}

/// `a + bω` with `ω² = ω − 1`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[i64; 2]", into = "[i64; 2]")]
pub struct EisensteinInteger {
    pub a: i64,
    pub b: i64,
}

/// Shorthand constructor.
pub const fn eis(a: i64, b: i64) -> EisensteinInteger {
    EisensteinInteger { a, b }
}

impl From<[i64; 2]> for EisensteinInteger {
    fn from([a, b]: [i64; 2]) -> Self {
        eis(a, b)
    }
}

impl From<EisensteinInteger> for [i64; 2] {
    fn from(x: EisensteinInteger) -> Self {
        [x.a, x.b]
    }
}

impl From<i64> for EisensteinInteger {
    fn from(a: i64) -> Self {
        eis(a, 0)
    }
}

impl EisensteinInteger {
    pub const ZERO: Self = eis(0, 0);
    pub const ONE: Self = eis(1, 0);
    pub const OMEGA: Self = eis(0, 1);
    /// `θ = ω − ω⁻¹ = 2ω − 1`, a square root of −3.
    pub const THETA: Self = eis(-1, 2);

    pub fn is_zero(self) -> bool {
        self.a == 0 && self.b == 0
    }

    pub fn conj(self) -> Self {
        eis(self.a + self.b, -self.b)
    }

    pub fn norm(self) -> i64 {
        self.a * self.a + self.a * self.b + self.b * self.b
    }

    /// Twice the real part, `2a + b`, which is always an integer.
    pub fn trace(self) -> i64 {
        2 * self.a + self.b
    }

    /// `ω^k` for any integer `k`.
    pub fn omega_pow(k: i64) -> Self {
        UNITS[k.rem_euclid(6) as usize]
    }

    pub fn is_unit(self) -> bool {
        self.norm() == 1
    }

    /// Exponent `k ∈ 0..6` with `self = ω^k`, if `self` is a unit.
    pub fn unit_exponent(self) -> Option<usize> {
        UNITS.iter().position(|&u| u == self)
    }

    /// Is this element a rational integer?
    pub fn is_rational(self) -> bool {
        self.b == 0
    }

    pub fn scale(self, k: i64) -> Self {
        eis(self.a * k, self.b * k)
    }

    pub fn pow(self, mut e: u32) -> Self {
        let mut base = self;
        let mut acc = Self::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc *= base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// Image in `O/θO ≅ F₃`: `a + bω ↦ a − b (mod 3)`.
    pub fn reduce_mod_theta(self) -> F3 {
        F3::new(self.a - self.b)
    }

    /// Membership in the ideal `θO`.
    pub fn divisible_by_theta(self) -> bool {
        self.reduce_mod_theta().is_zero()
    }

    /// Exact quotient `self / d`, failing unless `d` divides `self`.
    pub fn exact_div(self, d: Self) -> Result<Self, RingError> {
        if d.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        let n = d.norm();
        let p = self * d.conj();
        if p.a % n != 0 || p.b % n != 0 {
            return Err(RingError::NotDivisible(self, d));
        }
        Ok(eis(p.a / n, p.b / n))
    }

    pub fn divides(self, x: Self) -> bool {
        if self.is_zero() {
            return x.is_zero();
        }
        x.exact_div(self).is_ok()
    }

    /// Euclidean division `self = q·d + r` with `N(r) < N(d)`, rounding to
    /// the nearest point of the hexagonal lattice.
    pub fn div_rem(self, d: Self) -> Result<(Self, Self), RingError> {
        if d.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        let n = d.norm();
        let p = self * d.conj();
        let mut best: Option<(Self, Self)> = None;
        for qa in [p.a.div_euclid(n), p.a.div_euclid(n) + 1] {
            for qb in [p.b.div_euclid(n), p.b.div_euclid(n) + 1] {
                let q = eis(qa, qb);
                let r = self - q * d;
                if best.is_none_or(|(_, br)| r.norm() < br.norm()) {
                    best = Some((q, r));
                }
            }
        }
        let (q, r) = best.expect("four candidates");
        debug_assert!(r.norm() < n);
        Ok((q, r))
    }

    /// The associate `u·self` with argument in `[0°, 60°)`, i.e. `a > 0, b ≥ 0`.
    pub fn normalize_associate(self) -> Self {
        if self.is_zero() {
            return self;
        }
        UNITS
            .iter()
            .map(|&u| u * self)
            .find(|x| x.a > 0 && x.b >= 0)
            .expect("exactly one associate lies in the fundamental sector")
    }

    pub fn gcd(self, other: Self) -> Self {
        let (mut x, mut y) = (self, other);
        while !y.is_zero() {
            let (_, r) = x.div_rem(y).expect("y nonzero");
            x = y;
            y = r;
        }
        x.normalize_associate()
    }

    pub fn to_rational(self) -> EisensteinRational {
        EisensteinRational::from(self)
    }
}

/// The six units `ω^0, …, ω^5`.
pub const UNITS: [EisensteinInteger; 6] = [eis(1, 0), eis(0, 1), eis(-1, 1), eis(-1, 0), eis(0, -1), eis(1, -1)];

pub fn units() -> [EisensteinInteger; 6] {
    UNITS
}

impl Add for EisensteinInteger {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        eis(self.a + o.a, self.b + o.b)
    }
}

impl Sub for EisensteinInteger {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        eis(self.a - o.a, self.b - o.b)
    }
}

impl Neg for EisensteinInteger {
    type Output = Self;
    fn neg(self) -> Self {
        eis(-self.a, -self.b)
    }
}

impl Mul for EisensteinInteger {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        eis(self.a * o.a - self.b * o.b, self.a * o.b + self.b * o.a + self.b * o.b)
    }
}

impl AddAssign for EisensteinInteger {
    fn add_assign(&mut self, o: Self) {
        *self = *self + o;
    }
}

impl SubAssign for EisensteinInteger {
    fn sub_assign(&mut self, o: Self) {
        *self = *self - o;
    }
}

impl MulAssign for EisensteinInteger {
    fn mul_assign(&mut self, o: Self) {
        *self = *self * o;
    }
}

impl std::iter::Sum for EisensteinInteger {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::ZERO, Add::add)
    }
}

impl fmt::Debug for EisensteinInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for EisensteinInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, 1) => write!(f, "w"),
            (0, -1) => write!(f, "-w"),
            (0, b) => write!(f, "{b}w"),
            (a, 1) => write!(f, "{a}+w"),
            (a, -1) => write!(f, "{a}-w"),
            (a, b) if b < 0 => write!(f, "{a}{b}w"),
            (a, b) => write!(f, "{a}+{b}w"),
        }
    }
}

/// The field with three elements.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct F3(u8);

impl F3 {
    pub const ZERO: Self = F3(0);
    pub const ONE: Self = F3(1);
    pub const MINUS_ONE: Self = F3(2);

    pub fn new(v: i64) -> Self {
        F3(v.rem_euclid(3) as u8)
    }

    pub fn value(self) -> u8 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn inv(self) -> Option<Self> {
        match self.0 {
            0 => None,
            v => Some(F3(v)),
        }
    }

    pub fn all() -> [F3; 3] {
        [F3(0), F3(1), F3(2)]
    }
}

impl fmt::Debug for F3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Add for F3 {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        F3((self.0 + o.0) % 3)
    }
}

impl Sub for F3 {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        F3((self.0 + 3 - o.0) % 3)
    }
}

impl Neg for F3 {
    type Output = Self;
    fn neg(self) -> Self {
        F3((3 - self.0) % 3)
    }
}

impl Mul for F3 {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        F3((self.0 * o.0) % 3)
    }
}

impl AddAssign for F3 {
    fn add_assign(&mut self, o: Self) {
        *self = *self + o;
    }
}

/// An element `a + bω` of the fraction field `Q(ω)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct EisensteinRational {
    pub a: BigRational,
    pub b: BigRational,
}

impl From<EisensteinInteger> for EisensteinRational {
    fn from(x: EisensteinInteger) -> Self {
        EisensteinRational { a: BigRational::from_integer(x.a.into()), b: BigRational::from_integer(x.b.into()) }
    }
}

impl EisensteinRational {
    pub fn zero() -> Self {
        EisensteinInteger::ZERO.into()
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn conj(&self) -> Self {
        EisensteinRational { a: &self.a + &self.b, b: -&self.b }
    }

    pub fn norm(&self) -> BigRational {
        &self.a * &self.a + &self.a * &self.b + &self.b * &self.b
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        EisensteinRational { a: &self.a * k, b: &self.b * k }
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        Some(self.conj().scale(&n.recip()))
    }

    /// The integral element equal to `self`, if any.
    pub fn to_integer(&self) -> Option<EisensteinInteger> {
        let conv = |q: &BigRational| -> Option<i64> {
            if !q.is_integer() {
                return None;
            }
            i64::try_from(q.to_integer()).ok()
        };
        Some(eis(conv(&self.a)?, conv(&self.b)?))
    }

    pub fn is_negative_real(&self) -> bool {
        self.b.is_zero() && self.a.is_negative()
    }

    pub fn half() -> BigRational {
        BigRational::new(BigInt::one(), BigInt::from(2))
    }
}

impl Add for &EisensteinRational {
    type Output = EisensteinRational;
    fn add(self, o: Self) -> EisensteinRational {
        EisensteinRational { a: &self.a + &o.a, b: &self.b + &o.b }
    }
}

impl Sub for &EisensteinRational {
    type Output = EisensteinRational;
    fn sub(self, o: Self) -> EisensteinRational {
        EisensteinRational { a: &self.a - &o.a, b: &self.b - &o.b }
    }
}

impl Mul for &EisensteinRational {
    type Output = EisensteinRational;
    fn mul(self, o: Self) -> EisensteinRational {
        let bd = &self.b * &o.b;
        EisensteinRational { a: &self.a * &o.a - &bd, b: &self.a * &o.b + &self.b * &o.a + bd }
    }
}

impl Neg for &EisensteinRational {
    type Output = EisensteinRational;
    fn neg(self) -> EisensteinRational {
        EisensteinRational { a: -&self.a, b: -&self.b }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const W: EisensteinInteger = EisensteinInteger::OMEGA;
    const TH: EisensteinInteger = EisensteinInteger::THETA;
    const ONE: EisensteinInteger = EisensteinInteger::ONE;

    #[test]
    fn products() {
        assert_eq!(W * W, W - ONE);
        assert_eq!(TH * TH, eis(-3, 0));
        assert_eq!((ONE + W) * (ONE - W), eis(2, 0) - W);
        assert_eq!(TH, W - W.conj());
    }

    #[test]
    fn conjugate_and_norm() {
        assert_eq!(W.conj(), ONE - W);
        assert_eq!(TH.norm(), 3);
        assert_eq!((ONE + W).norm(), 3);
        assert_eq!(TH.conj(), -TH);
        assert!(eis(3, 0).divisible_by_theta());
    }

    #[test]
    fn unit_group() {
        assert!(W.is_unit());
        assert!(!TH.is_unit());
        let us = units();
        for &x in &us {
            for &y in &us {
                assert!(us.contains(&(x * y)));
            }
        }
        let mut sorted = us.to_vec();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 6);
        for (k, &u) in us.iter().enumerate() {
            assert_eq!(W.pow(k as u32), u);
            assert_eq!(EisensteinInteger::omega_pow(k as i64 - 6), u);
        }
    }

    #[test]
    fn residues_mod_theta() {
        assert_eq!(TH.reduce_mod_theta(), F3::ZERO);
        assert_eq!(W.reduce_mod_theta(), F3::MINUS_ONE);
        assert_eq!((ONE + W).reduce_mod_theta(), F3::ZERO);
        // units ∪ {0}: two units over each of ±1, none over 0
        for r in [F3::ONE, F3::MINUS_ONE] {
            assert_eq!(units().iter().filter(|u| u.reduce_mod_theta() == r).count(), 3);
        }
        assert_eq!(units().iter().filter(|u| u.reduce_mod_theta().is_zero()).count(), 0);
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(eis(3, 0).gcd(TH), TH.normalize_associate());
        assert_eq!(TH.normalize_associate(), eis(1, 1));
        assert_eq!(eis(2, 0).gcd(W), ONE);
        let (q, r) = (W - ONE).div_rem(W).unwrap();
        assert_eq!(q * W + r, W - ONE);
        assert!(r.norm() < W.norm());
        assert_eq!(ONE.div_rem(EisensteinInteger::ZERO), Err(RingError::DivisionByZero));
    }

    #[test]
    fn display() {
        assert_eq!(TH.to_string(), "-1+2w");
        assert_eq!(eis(2, -3).to_string(), "2-3w");
        assert_eq!(serde_json::to_string(&TH).unwrap(), "[-1,2]");
        let back: EisensteinInteger = serde_json::from_str("[4,-1]").unwrap();
        assert_eq!(back, eis(4, -1));
    }

    #[test]
    fn f3_field() {
        for x in F3::all() {
            for y in F3::all() {
                assert_eq!(x + y - y, x);
                if let Some(i) = y.inv() {
                    assert_eq!(x * y * i, x);
                }
            }
        }
    }

    fn small() -> impl Strategy<Value = EisensteinInteger> {
        (-1000i64..1000, -1000i64..1000).prop_map(|(a, b)| eis(a, b))
    }

    proptest! {
        #[test]
        fn conj_and_norm_multiplicative(x in small(), y in small()) {
            prop_assert_eq!((x * y).conj(), x.conj() * y.conj());
            prop_assert_eq!((x * y).norm(), x.norm() * y.norm());
            prop_assert_eq!(x * x.conj(), eis(x.norm(), 0));
        }

        #[test]
        fn reduction_is_ring_homomorphism(x in small(), y in small()) {
            prop_assert_eq!((x + y).reduce_mod_theta(), x.reduce_mod_theta() + y.reduce_mod_theta());
            prop_assert_eq!((x * y).reduce_mod_theta(), x.reduce_mod_theta() * y.reduce_mod_theta());
            prop_assert_eq!((x * TH).reduce_mod_theta(), F3::ZERO);
        }

        #[test]
        fn euclidean_division(x in small(), y in small()) {
            prop_assume!(!y.is_zero());
            let (q, r) = x.div_rem(y).unwrap();
            prop_assert_eq!(q * y + r, x);
            prop_assert!(r.norm() < y.norm());
        }

        #[test]
        fn gcd_divides_both(x in small(), y in small()) {
            prop_assume!(!(x.is_zero() && y.is_zero()));
            let g = x.gcd(y);
            prop_assert!(g.divides(x) && g.divides(y));
            prop_assert!(g.a > 0 && g.b >= 0);
        }
    }
}
