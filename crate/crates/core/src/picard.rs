//! The odd unimodular lattice `I₁,₉ = Zℓ ⊕ Ze₁ ⊕ … ⊕ Ze₉` with the
//! anticanonical class `f = 3ℓ − Σeᵢ`, its roots, reflections,
//! Eichler–Siegel transformations and exceptional classes.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PicardError {
    #[error("{0} is not a root (needs α·f = 0 and α·α = −2)")]
    NotARoot(I19Vector),
    #[error("{0} is not orthogonal to f")]
    NotOrthogonalToF(I19Vector),
    #[error("expected c·f = 1, got {0}")]
    NotExceptional(i64),
    #[error("c·c = {0} is even")]
    EvenSelfProduct(i64),
    #[error("non-integral Eichler–Siegel output (û·û = {0} is odd)")]
    OddNorm(i64),
}

/// Coordinates `(ℓ, e₁, …, e₉)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default, Serialize, Deserialize)]
pub struct I19Vector(pub [i64; 10]);

impl I19Vector {
    pub const ZERO: I19Vector = I19Vector([0; 10]);

    pub fn ell() -> Self {
        Self::unit(0)
    }

    /// `eᵢ` for `i = 1..=9`.
    pub fn e(i: usize) -> Self {
        assert!((1..=9).contains(&i), "e index out of range");
        Self::unit(i)
    }

    fn unit(i: usize) -> Self {
        let mut v = [0; 10];
        v[i] = 1;
        I19Vector(v)
    }

    pub fn dot(&self, other: &Self) -> i64 {
        self.0[0] * other.0[0] - (1..10).map(|i| self.0[i] * other.0[i]).sum::<i64>()
    }

    pub fn norm(&self) -> i64 {
        self.dot(self)
    }

    pub fn scale(&self, k: i64) -> Self {
        I19Vector(self.0.map(|x| k * x))
    }
}

impl fmt::Display for I19Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, &c) in self.0.iter().enumerate() {
            if c != 0 {
                let name = if i == 0 { "ℓ".to_string() } else { format!("e{i}") };
                terms.push(match c {
                    1 => name,
                    -1 => format!("-{name}"),
                    _ => format!("{c}{name}"),
                });
            }
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + ").replace("+ -", "- "))
        }
    }
}

impl Add for I19Vector {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        I19Vector(std::array::from_fn(|i| self.0[i] + o.0[i]))
    }
}

impl Sub for I19Vector {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        I19Vector(std::array::from_fn(|i| self.0[i] - o.0[i]))
    }
}

impl Neg for I19Vector {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(-1)
    }
}

impl Mul<I19Vector> for i64 {
    type Output = I19Vector;
    fn mul(self, v: I19Vector) -> I19Vector {
        v.scale(self)
    }
}

/// `f = 3ℓ − e₁ − ⋯ − e₉`.
pub fn anticanonical_f() -> I19Vector {
    let mut v = [-1; 10];
    v[0] = 3;
    I19Vector(v)
}

pub fn is_root(a: &I19Vector) -> bool {
    a.dot(&anticanonical_f()) == 0 && a.norm() == -2
}

/// `α₀ = ℓ − e₁ − e₂ − e₃`, `αᵢ = eᵢ − eᵢ₊₁`.
pub fn simple_root_basis() -> [I19Vector; 9] {
    std::array::from_fn(|i| {
        if i == 0 {
            I19Vector::ell() - I19Vector::e(1) - I19Vector::e(2) - I19Vector::e(3)
        } else {
            I19Vector::e(i) - I19Vector::e(i + 1)
        }
    })
}

pub fn gram_of(vs: &[I19Vector]) -> Vec<Vec<i64>> {
    vs.iter().map(|a| vs.iter().map(|b| a.dot(b)).collect()).collect()
}

/// Generalized Cartan matrix of affine `E₈`: the chain `α₁ − … − α₈` with `α₀` attached to `α₃`.
pub fn affine_e8_cartan() -> Vec<Vec<i64>> {
    let mut c = vec![vec![0; 9]; 9];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut edges: Vec<(usize, usize)> = (1..8).map(|i| (i, i + 1)).collect();
    edges.push((0, 3));
    for (a, b) in edges {
        c[a][b] = -1;
        c[b][a] = -1;
    }
    c
}

/// `s_α(c) = c + (α·c)α`.
pub fn reflect(alpha: &I19Vector, c: &I19Vector) -> Result<I19Vector, PicardError> {
    if !is_root(alpha) {
        return Err(PicardError::NotARoot(*alpha));
    }
    Ok(*c + alpha.dot(c) * *alpha)
}

/// `T_u(c) = c + (c·f)u − (c·u)f − ½(u·u)(c·f)f`.
pub fn eichler_siegel(u: &I19Vector, c: &I19Vector) -> Result<I19Vector, PicardError> {
    let f = anticanonical_f();
    if u.dot(&f) != 0 {
        return Err(PicardError::NotOrthogonalToF(*u));
    }
    let uu = u.norm();
    if uu % 2 != 0 {
        return Err(PicardError::OddNorm(uu));
    }
    let cf = c.dot(&f);
    Ok(*c + cf * *u - c.dot(u) * f - (uu / 2 * cf) * f)
}

/// The unique `e ∈ c + Zf` with `e·e = −1`.
pub fn exceptional_normalize(c: &I19Vector) -> Result<I19Vector, PicardError> {
    let f = anticanonical_f();
    let cf = c.dot(&f);
    if cf != 1 {
        return Err(PicardError::NotExceptional(cf));
    }
    let cc = c.norm();
    if cc % 2 == 0 {
        return Err(PicardError::EvenSelfProduct(cc));
    }
    Ok(*c - ((1 + cc) / 2) * f)
}

/// Inertia `(p, q, null)`; the standard basis is orthogonal, so it is read off the diagonal.
pub fn signature() -> (usize, usize, usize) {
    let basis: Vec<I19Vector> = (0..10).map(I19Vector::unit).collect();
    let g = gram_of(&basis);
    let p = g.iter().enumerate().filter(|(i, r)| r[*i] > 0).count();
    let q = g.iter().enumerate().filter(|(i, r)| r[*i] < 0).count();
    (p, q, 10 - p - q)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PicardReport {
    pub signature: (usize, usize, usize),
    pub f_isotropic: bool,
    pub simple_roots_are_roots: bool,
    pub cartan_is_affine_e8: bool,
    pub reflections_fix_f: bool,
    pub eichler_siegel_homomorphism: bool,
    pub eichler_siegel_mod_f: bool,
}

impl PicardReport {
    pub fn all(&self) -> bool {
        self.signature == (1, 9, 0)
            && self.f_isotropic
            && self.simple_roots_are_roots
            && self.cartan_is_affine_e8
            && self.reflections_fix_f
            && self.eichler_siegel_homomorphism
            && self.eichler_siegel_mod_f
    }
}

/// Deterministic checks over the simple roots and the standard basis.
pub fn verify() -> PicardReport {
    let f = anticanonical_f();
    let roots = simple_root_basis();
    let minus_cartan: Vec<Vec<i64>> = affine_e8_cartan().iter().map(|r| r.iter().map(|x| -x).collect()).collect();
    let basis: Vec<I19Vector> = (0..10).map(I19Vector::unit).collect();
    let es = |u: &I19Vector, c: &I19Vector| eichler_siegel(u, c).expect("roots are orthogonal to f");
    let homomorphism = roots.iter().all(|u| {
        roots.iter().all(|v| basis.iter().all(|c| es(u, &es(v, c)) == es(&(*u + *v), c)))
    });
    let mod_f = roots.iter().all(|u| basis.iter().all(|c| es(u, c) == es(&(*u + f), c)));
    PicardReport {
        signature: signature(),
        f_isotropic: f.norm() == 0,
        simple_roots_are_roots: roots.iter().all(is_root),
        cartan_is_affine_e8: gram_of(&roots) == minus_cartan,
        reflections_fix_f: roots.iter().all(|a| reflect(a, &f) == Ok(f)),
        eichler_siegel_homomorphism: homomorphism,
        eichler_siegel_mod_f: mod_f,
    }
}
