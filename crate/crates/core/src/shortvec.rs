//! Enumeration of vectors of fixed norm in positive definite lattices.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::lattice::{from_z, Coords, HermitianLattice};
use crate::ring::UNITS;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShortVectorError {
    #[error("lattice is not positive definite")]
    NotPositiveDefinite,
    #[error("norm {0} is not a positive multiple of 3")]
    BadNorm(i64),
    #[error("input is not closed under multiplication by units")]
    NotUnitClosed,
}

fn rat(x: i128) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// `Q(x) = Σᵢ dᵢ (xᵢ + Σ_{j>i} uᵢⱼ xⱼ)²` for a positive definite symmetric matrix.
struct Ldl {
    d: Vec<BigRational>,
    u: Vec<Vec<BigRational>>,
}

impl Ldl {
    fn new(m: &[Vec<i128>]) -> Option<Self> {
        let n = m.len();
        let mut d: Vec<BigRational> = Vec::with_capacity(n);
        let mut u = vec![vec![BigRational::zero(); n]; n];
        for i in 0..n {
            let mut di = rat(m[i][i]);
            for k in 0..i {
                di -= &d[k] * &u[k][i] * &u[k][i];
            }
            if !di.is_positive() {
                return None;
            }
            for j in i + 1..n {
                let mut s = rat(m[i][j]);
                for k in 0..i {
                    s -= &d[k] * &u[k][i] * &u[k][j];
                }
                u[i][j] = s / &di;
            }
            d.push(di);
        }
        Some(Ldl { d, u })
    }
}

/// Integers `x` with `(x + c)² ≤ r`, computed exactly.
fn integer_window(c: &BigRational, r: &BigRational) -> (BigInt, BigInt) {
    // y = x·cd + cn satisfies y² ≤ ⌊r·cd²⌋
    let (cn, cd) = (c.numer(), c.denom());
    let bound = (r * BigRational::from_integer(cd * cd)).floor().to_integer();
    let y = if bound.is_negative() { return (BigInt::from(1), BigInt::from(0)) } else { bound.sqrt() };
    let lo = (-&y - cn).div_ceil(cd);
    let hi = (&y - cn).div_floor(cd);
    (lo, hi)
}

/// All `x` with `xᵀMx = target` for a positive definite integer matrix `M`.
pub fn fincke_pohst(m: &[Vec<i128>], target: i128) -> Option<Vec<Vec<i128>>> {
    let n = m.len();
    let ldl = Ldl::new(m)?;
    let mut out = Vec::new();
    if n == 0 {
        if target == 0 {
            out.push(Vec::new());
        }
        return Some(out);
    }
    let target = rat(target);
    let mut x = vec![0i128; n];
    walk(&ldl, n - 1, &target, &mut x, &mut out);
    Some(out)
}

fn walk(
    ldl: &Ldl,
    i: usize,
    remaining: &BigRational,
    x: &mut [i128],
    out: &mut Vec<Vec<i128>>,
) {
    let n = x.len();
    let mut c = BigRational::zero();
    for j in i + 1..n {
        if x[j] != 0 {
            c += &ldl.u[i][j] * rat(x[j]);
        }
    }
    let (lo, hi) = integer_window(&c, &(remaining / &ldl.d[i]));
    let (Some(lo), Some(hi)) = (lo.to_i128(), hi.to_i128()) else { return };
    for xi in lo..=hi {
        x[i] = xi;
        let t = rat(xi) + &c;
        let rest = remaining - &ldl.d[i] * &t * &t;
        if i == 0 {
            if rest.is_zero() {
                out.push(x.to_vec());
            }
        } else {
            walk(ldl, i - 1, &rest, x, out);
        }
    }
    x[i] = 0;
}

/// All `x ∈ L` with `ψ(x, x) = n`, sorted lexicographically by coordinates.
pub fn vectors_of_norm(l: &HermitianLattice, n: i64) -> Result<Vec<Coords>, ShortVectorError> {
    if n <= 0 || n % 3 != 0 {
        return Err(ShortVectorError::BadNorm(n));
    }
    if !l.is_positive_definite() {
        return Err(ShortVectorError::NotPositiveDefinite);
    }
    let q = l.underlying_integral_form().as_i128();
    let raw = fincke_pohst(&q, i128::from(2 * n / 3)).ok_or(ShortVectorError::NotPositiveDefinite)?;
    let mut v: Vec<Coords> = raw.iter().map(|z| from_z(z)).collect();
    v.sort();
    Ok(v)
}

/// One representative (the lexicographic minimum) per `μ₆`-orbit, in sorted order.
pub fn unit_orbit_representatives(vectors: &[Coords]) -> Result<Vec<Coords>, ShortVectorError> {
    let set: BTreeSet<&Coords> = vectors.iter().collect();
    let mut reps = BTreeSet::new();
    for x in vectors {
        let orbit: Vec<Coords> = UNITS.iter().map(|&u| x.iter().map(|&c| u * c).collect()).collect();
        if orbit.iter().any(|y| !set.contains(y)) {
            return Err(ShortVectorError::NotUnitClosed);
        }
        reps.insert(orbit.into_iter().min().expect("six units"));
    }
    Ok(reps.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn window_is_exact() {
        let c = BigRational::new(BigInt::from(1), BigInt::from(3));
        let r = BigRational::from_integer(BigInt::from(4));
        // (x + 1/3)² ≤ 4  ⇔  x ∈ {-2, …, 1}
        assert_eq!(integer_window(&c, &r), (BigInt::from(-2), BigInt::from(1)));
        let r = BigRational::new(BigInt::from(1), BigInt::from(9));
        assert_eq!(integer_window(&c, &r), (BigInt::from(0), BigInt::from(0)));
    }

    #[test]
    fn small_counts() {
        assert_eq!(vectors_of_norm(&HermitianLattice::lambda(1), 3).unwrap().len(), 6);
        assert_eq!(vectors_of_norm(&HermitianLattice::lambda(2), 3).unwrap().len(), 24);
        assert!(matches!(vectors_of_norm(&HermitianLattice::lambda(5), 3), Err(ShortVectorError::NotPositiveDefinite)));
        assert!(matches!(vectors_of_norm(&HermitianLattice::lambda(2), 4), Err(ShortVectorError::BadNorm(4))));
    }

    #[test]
    fn representatives() {
        let v = vectors_of_norm(&HermitianLattice::lambda(1), 3).unwrap();
        assert_eq!(unit_orbit_representatives(&v).unwrap().len(), 1);
        assert_eq!(unit_orbit_representatives(&v[..3]), Err(ShortVectorError::NotUnitClosed));
    }
}

