//! Binary forms, the discriminant form `f₀³ + f₁²`, and GIT stability of
//! Weierstrass pairs `(f₀, f₁) ∈ H₄ × H₆` and of degree-12 divisors.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeierstrassError {
    #[error("the form is identically zero")]
    ZeroForm,
    #[error("f₀³ + f₁² vanishes identically")]
    DegenerateDiscriminant,
    #[error("expected degree {expected}, got {got}")]
    WrongDegree { expected: usize, got: usize },
    #[error("both forms are zero")]
    BothZero,
    #[error("profile sums to {0}, not 12")]
    WrongProfileDegree(usize),
    #[error("λ and μ are both zero")]
    ZeroPair,
    #[error("cannot parse coefficient {0:?}")]
    Parse(String),
}

type Q = BigRational;

fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Dense univariate polynomial over `Q`, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Poly(Vec<Q>);

impl Poly {
    fn new(mut c: Vec<Q>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Poly(c)
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    fn derivative(&self) -> Self {
        Poly::new(self.0.iter().enumerate().skip(1).map(|(i, c)| c * q(i as i64)).collect())
    }

    fn monic(&self) -> Self {
        match self.0.last() {
            None => self.clone(),
            Some(lead) => Poly(self.0.iter().map(|c| c / lead).collect()),
        }
    }

    fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Poly(Vec::new());
        }
        let mut c = vec![Q::zero(); self.0.len() + o.0.len() - 1];
        for (i, x) in self.0.iter().enumerate() {
            for (j, y) in o.0.iter().enumerate() {
                c[i + j] += x * y;
            }
        }
        Poly::new(c)
    }

    fn sub(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        Poly::new((0..n).map(|i| self.0.get(i).cloned().unwrap_or_default() - o.0.get(i).cloned().unwrap_or_default()).collect())
    }

    fn divrem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let mut r = self.0.clone();
        let lead = &d.0[dd];
        let mut quo = vec![Q::zero(); r.len().saturating_sub(dd)];
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1 - dd;
            let c = r.last().expect("nonempty") / lead;
            for (i, di) in d.0.iter().enumerate() {
                r[k + i] -= &c * di;
            }
            quo[k] = c;
            r.pop();
            while r.last().is_some_and(|x| x.is_zero()) {
                r.pop();
            }
        }
        (Poly::new(quo), Poly::new(r))
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    fn is_constant(&self) -> bool {
        self.degree() == Some(0)
    }
}

/// Yun's square-free decomposition `f = c·Π aᵢⁱ` (monic, pairwise coprime `aᵢ`); `result[i-1] = aᵢ`.
fn yun(f: &Poly) -> Vec<Poly> {
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let fp = f.derivative();
    let a0 = f.gcd(&fp);
    let mut b = f.divrem(&a0).0;
    let mut c = fp.divrem(&a0).0;
    let mut d = c.sub(&b.derivative());
    loop {
        let a = b.gcd(&d);
        out.push(a.clone());
        b = b.divrem(&a).0;
        if b.is_constant() {
            break;
        }
        c = d.divrem(&a).0;
        d = c.sub(&b.derivative());
    }
    out
}

/// `F(X, Y) = Σ cᵢ XⁱY^{d−i}`; the point `0` is `[0:1]`, `∞` is `[1:0]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BinaryForm {
    degree: usize,
    coeffs: Vec<Q>,
}

impl BinaryForm {
    pub fn new(degree: usize, coeffs: Vec<Q>) -> Result<Self, WeierstrassError> {
        if coeffs.len() != degree + 1 {
            return Err(WeierstrassError::WrongDegree { expected: degree, got: coeffs.len().saturating_sub(1) });
        }
        Ok(BinaryForm { degree, coeffs })
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        assert!(!coeffs.is_empty(), "a form needs at least one coefficient");
        BinaryForm { degree: coeffs.len() - 1, coeffs: coeffs.iter().map(|&c| q(c)).collect() }
    }

    pub fn zero(degree: usize) -> Self {
        BinaryForm { degree, coeffs: vec![Q::zero(); degree + 1] }
    }

    /// `c·XⁱY^{d−i}`.
    pub fn monomial(degree: usize, i: usize, c: i64) -> Self {
        let mut f = Self::zero(degree);
        f.coeffs[i] = q(c);
        f
    }

    /// Parses `"1, 0, -3/2"` (coefficients of `X⁰Y^d, X¹Y^{d−1}, …`).
    pub fn parse(s: &str) -> Result<Self, WeierstrassError> {
        let coeffs = s
            .split(',')
            .map(|t| t.trim().parse::<Q>().map_err(|_| WeierstrassError::Parse(t.trim().to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        if coeffs.is_empty() {
            return Err(WeierstrassError::Parse(s.to_string()));
        }
        Ok(BinaryForm { degree: coeffs.len() - 1, coeffs })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut c = vec![Q::zero(); self.degree + o.degree + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        BinaryForm { degree: self.degree + o.degree, coeffs: c }
    }

    pub fn add(&self, o: &Self) -> Result<Self, WeierstrassError> {
        if self.degree != o.degree {
            return Err(WeierstrassError::WrongDegree { expected: self.degree, got: o.degree });
        }
        Ok(BinaryForm { degree: self.degree, coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect() })
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(BinaryForm::from_integers(&[1]), |acc, _| acc.mul(self))
    }

    fn affine(&self) -> Poly {
        Poly::new(self.coeffs.clone())
    }

    /// Vanishing order at `∞ = [1:0]` (the power of `Y` dividing `F`).
    fn order_at_infinity(&self) -> Option<usize> {
        self.affine().degree().map(|k| self.degree - k)
    }

    /// Monic polynomial in `x = X/Y` whose roots are the finite points of multiplicity `≥ a`.
    fn points_of_order_at_least(&self, a: usize) -> Poly {
        let f = self.affine();
        if f.is_zero() {
            return Poly::new(Vec::new());
        }
        yun(&f).iter().skip(a.saturating_sub(1)).fold(Poly::new(vec![Q::one()]), |acc, p| acc.mul(p))
    }
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cs: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", cs.join(", "))
    }
}

/// `f₀³ + f₁²` for `f₀ ∈ H₄`, `f₁ ∈ H₆`.
pub fn discriminant_form(f0: &BinaryForm, f1: &BinaryForm) -> Result<BinaryForm, WeierstrassError> {
    check_degrees(f0, f1)?;
    let d = f0.pow(3).add(&f1.pow(2))?;
    if d.is_zero() {
        return Err(WeierstrassError::DegenerateDiscriminant);
    }
    Ok(d)
}

fn check_degrees(f0: &BinaryForm, f1: &BinaryForm) -> Result<(), WeierstrassError> {
    if f0.degree != 4 {
        return Err(WeierstrassError::WrongDegree { expected: 4, got: f0.degree });
    }
    if f1.degree != 6 {
        return Err(WeierstrassError::WrongDegree { expected: 6, got: f1.degree });
    }
    Ok(())
}

/// Root multiplicities over the algebraic closure, sorted decreasingly.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct MultiplicityProfile(pub Vec<usize>);

impl MultiplicityProfile {
    pub fn degree(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn max(&self) -> usize {
        self.0.first().copied().unwrap_or(0)
    }
}

pub fn multiplicity_profile(f: &BinaryForm) -> Result<MultiplicityProfile, WeierstrassError> {
    let inf = f.order_at_infinity().ok_or(WeierstrassError::ZeroForm)?;
    let mut m = Vec::new();
    for (i, a) in yun(&f.affine()).iter().enumerate() {
        m.extend(std::iter::repeat_n(i + 1, a.degree().unwrap_or(0)));
    }
    if inf > 0 {
        m.push(inf);
    }
    m.sort_unstable_by(|a, b| b.cmp(a));
    Ok(MultiplicityProfile(m))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum DivisorStability {
    Unstable,
    StrictlySemistable,
    MinimalStrictlySemistable,
    Stable,
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
pub enum PairStability {
    Unstable,
    SemistableNotStable,
    Stable,
}

impl DivisorStability {
    /// The coarse level on the scale `unstable < semistable < stable`.
    pub fn level(self) -> PairStability {
        match self {
            DivisorStability::Unstable => PairStability::Unstable,
            DivisorStability::StrictlySemistable | DivisorStability::MinimalStrictlySemistable => {
                PairStability::SemistableNotStable
            }
            DivisorStability::Stable => PairStability::Stable,
        }
    }
}

pub fn divisor_stability(p: &MultiplicityProfile) -> Result<DivisorStability, WeierstrassError> {
    if p.degree() != 12 {
        return Err(WeierstrassError::WrongProfileDegree(p.degree()));
    }
    Ok(match p.max().cmp(&6) {
        Ordering::Less => DivisorStability::Stable,
        Ordering::Equal if p.0 == [6, 6] => DivisorStability::MinimalStrictlySemistable,
        Ordering::Equal => DivisorStability::StrictlySemistable,
        Ordering::Greater => DivisorStability::Unstable,
    })
}

/// Whether some point has `ord f₀ ≥ a` and `ord f₁ ≥ b` (zero forms vanish to every order).
fn common_zero(f0: &BinaryForm, f1: &BinaryForm, a: usize, b: usize) -> bool {
    let at_inf = |f: &BinaryForm, k: usize| f.order_at_infinity().is_none_or(|o| o >= k);
    if at_inf(f0, a) && at_inf(f1, b) {
        return true;
    }
    let g = f0.points_of_order_at_least(a).gcd(&f1.points_of_order_at_least(b));
    g.degree().unwrap_or(1) > 0
}

/// Order of a common zero is `min(3·ord f₀, 2·ord f₁)`: unstable if some order exceeds 6,
/// not stable if some order reaches 6.
pub fn pair_stability(f0: &BinaryForm, f1: &BinaryForm) -> Result<PairStability, WeierstrassError> {
    check_degrees(f0, f1)?;
    if f0.is_zero() && f1.is_zero() {
        return Err(WeierstrassError::BothZero);
    }
    Ok(if common_zero(f0, f1, 3, 4) {
        PairStability::Unstable
    } else if common_zero(f0, f1, 2, 3) {
        PairStability::SemistableNotStable
    } else {
        PairStability::Stable
    })
}

/// Whether the pair is `(λf², μf³)` with `f` a product of two distinct linear forms.
pub fn is_minimal_pair(f0: &BinaryForm, f1: &BinaryForm) -> Result<bool, WeierstrassError> {
    check_degrees(f0, f1)?;
    let prof = |f: &BinaryForm| multiplicity_profile(f).map(|p| p.0);
    Ok(match (f0.is_zero(), f1.is_zero()) {
        (true, true) => return Err(WeierstrassError::BothZero),
        (true, false) => prof(f1)? == [3, 3],
        (false, true) => prof(f0)? == [2, 2],
        (false, false) => {
            if prof(f0)? != [2, 2] {
                return Ok(false);
            }
            // f₀³ and f₁² proportional
            let (a, b) = (f0.pow(3), f1.pow(2));
            let i = a.coeffs.iter().position(|c| !c.is_zero()).expect("nonzero");
            let r = &b.coeffs[i] / &a.coeffs[i];
            a.coeffs.iter().zip(&b.coeffs).all(|(x, y)| &(x * &r) == y)
        }
    })
}

/// A point `[a : b]` of `P¹(Q)`, normalized so that the last nonzero coordinate is 1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProjectivePoint(pub Q, pub Q);

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}:{}]", self.0, self.1)
    }
}

/// `J = [λ³ : λ³ + μ²]` of the minimal orbit `(λf², μf³)`.
pub fn minimal_ss_j_invariant(lambda: &Q, mu: &Q) -> Result<ProjectivePoint, WeierstrassError> {
    if lambda.is_zero() && mu.is_zero() {
        return Err(WeierstrassError::ZeroPair);
    }
    let a = lambda * lambda * lambda;
    let b = &a + mu * mu;
    Ok(if b.is_zero() { ProjectivePoint(Q::one(), Q::zero()) } else { ProjectivePoint(a / &b, Q::one()) })
}

pub fn rational(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn yun_on_known_product() {
        // 5·x²(x−1)³(x+2)
        let lin = |r: i64| Poly::new(vec![q(-r), q(1)]);
        let f = [lin(0), lin(0), lin(1), lin(1), lin(1), lin(-2)].iter().fold(Poly::new(vec![q(5)]), |a, b| a.mul(b));
        let parts = yun(&f);
        assert_eq!(parts, vec![lin(-2), lin(0), lin(1)]);
    }

    #[test]
    fn profiles() {
        let x12_y12 = BinaryForm::monomial(12, 0, 1).add(&BinaryForm::monomial(12, 12, 1)).unwrap();
        assert_eq!(multiplicity_profile(&x12_y12).unwrap().0, vec![1; 12]);
        assert_eq!(multiplicity_profile(&BinaryForm::monomial(12, 6, 1)).unwrap().0, vec![6, 6]);
        assert_eq!(multiplicity_profile(&BinaryForm::monomial(12, 7, 1)).unwrap().0, vec![7, 5]);
        assert_eq!(multiplicity_profile(&BinaryForm::zero(3)), Err(WeierstrassError::ZeroForm));
    }
}
