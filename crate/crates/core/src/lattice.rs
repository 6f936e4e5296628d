//! Hermitian `O`-lattices given by a Gram matrix of a `θO`-valued form `ψ`.
//!
//! Conventions: `gram[(i, j)] = ψ(bᵢ, bⱼ)`, and `ψ` is `O`-linear in the first
//! argument, so `ψ(x, y) = Σ xᵢ·gram[(i, j)]·conj(yⱼ)`. The underlying even
//! `Z`-lattice uses the basis `b₁, ωb₁, …, bₙ, ωbₙ` and the form
//! `(x·y) = ⅓(ψ(x, y) + conj ψ(x, y))`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::omatrix::{solve_rational, OMatrix};
use crate::ring::{eis, EisensteinInteger as Eis};
use crate::zlinalg;

/// Coordinates of a lattice vector in the lattice's basis.
pub type Coords = Vec<Eis>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("gram matrix is not square")]
    NotSquare,
    #[error("gram matrix is not Hermitian at ({0}, {1})")]
    NotHermitian(usize, usize),
    #[error("gram entry ({0}, {1}) is not in θO")]
    NotThetaValued(usize, usize),
    #[error("vector has length {got}, lattice rank is {rank}")]
    RankMismatch { got: usize, rank: usize },
    #[error("vectors belong to different lattices")]
    LatticeMismatch,
    #[error("lattice is degenerate")]
    Degenerate,
    #[error("unknown lattice name `{0}`")]
    UnknownName(String),
    #[error("the frame vector s is not integral")]
    NonIntegralFrameVector,
    #[error("the basis identification is not unitary")]
    FrameNotUnitary,
}

/// A Hermitian `O`-lattice with `θO`-valued form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermitianLattice {
    gram: OMatrix,
}

/// A vector bound to a lattice; products across lattices are rejected.
#[derive(Clone, Debug)]
pub struct LatticeVector<'a> {
    lattice: &'a HermitianLattice,
    coords: Coords,
}

impl<'a> LatticeVector<'a> {
    pub fn coords(&self) -> &[Eis] {
        &self.coords
    }

    pub fn lattice(&self) -> &'a HermitianLattice {
        self.lattice
    }

    pub fn into_coords(self) -> Coords {
        self.coords
    }

    pub fn norm(&self) -> i64 {
        self.lattice.norm(&self.coords)
    }
}

impl PartialEq for LatticeVector<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.lattice, other.lattice) && self.coords == other.coords
    }
}

impl Eq for LatticeVector<'_> {}

/// Even symmetric integer matrix of the underlying `Z`-lattice.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntegralQuadraticForm {
    pub matrix: Vec<Vec<i64>>,
}

impl IntegralQuadraticForm {
    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    pub fn is_even(&self) -> bool {
        self.matrix.iter().enumerate().all(|(i, row)| row[i] % 2 == 0)
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| self.matrix[i][j] == self.matrix[j][i]))
    }

    pub fn determinant(&self) -> i128 {
        zlinalg::determinant(&self.as_i128())
    }

    pub fn evaluate(&self, x: &[i64]) -> i64 {
        let n = self.dim();
        (0..n).map(|i| (0..n).map(|j| x[i] * self.matrix[i][j] * x[j]).sum::<i64>()).sum()
    }

    pub fn as_i128(&self) -> Vec<Vec<i128>> {
        self.matrix.iter().map(|r| r.iter().map(|&x| i128::from(x)).collect()).collect()
    }

    pub fn inertia(&self) -> (usize, usize, usize) {
        real_inertia(&self.as_i128())
    }
}

/// Hermitian inertia `(p, q, z)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Signature {
    pub positive: usize,
    pub negative: usize,
    pub null: usize,
}

impl Signature {
    pub const fn new(positive: usize, negative: usize, null: usize) -> Self {
        Signature { positive, negative, null }
    }
}

/// `(p, q, z)` of a real symmetric integer matrix by exact congruence
/// diagonalisation over the rationals (Sylvester's law of inertia).
pub fn real_inertia(m: &[Vec<i128>]) -> (usize, usize, usize) {
    let mut a: Vec<Vec<BigRational>> =
        m.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect()).collect();
    let (mut p, mut q) = (0, 0);
    loop {
        let n = a.len();
        if n == 0 {
            return (p, q, 0);
        }
        if let Some(i) = (0..n).find(|&i| !a[i][i].is_zero()) {
            let piv = a[i][i].clone();
            if piv.is_positive() {
                p += 1;
            } else {
                q += 1;
            }
            let keep: Vec<usize> = (0..n).filter(|&k| k != i).collect();
            a = keep
                .iter()
                .map(|&r| keep.iter().map(|&c| &a[r][c] - &a[r][i] * &a[i][c] / &piv).collect())
                .collect();
            continue;
        }
        let off = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).find(|&(i, j)| !a[i][j].is_zero());
        match off {
            Some((i, j)) => {
                // x_i ← x_i + x_j makes the (i, i) entry 2·a_ij ≠ 0
                for c in 0..n {
                    let v = a[j][c].clone();
                    a[i][c] += v;
                }
                for r in 0..n {
                    let v = a[r][j].clone();
                    a[r][i] += v;
                }
            }
            None => return (p, q, n),
        }
    }
}

/// Echelon basis over `O` (Euclidean row reduction) of the `O`-span of `rows`.
pub fn o_echelon(rows: &[Coords]) -> Vec<Coords> {
    let Some(first) = rows.first() else { return Vec::new() };
    let n = first.len();
    let mut a: Vec<Coords> = rows.to_vec();
    let m = a.len();
    let mut row = 0;
    for col in 0..n {
        if row == m {
            break;
        }
        loop {
            let best = (row..m).filter(|&r| !a[r][col].is_zero()).min_by_key(|&r| a[r][col].norm());
            let Some(best) = best else { break };
            a.swap(row, best);
            let mut done = true;
            for r in row + 1..m {
                if !a[r][col].is_zero() {
                    let (q, rem) = a[r][col].div_rem(a[row][col]).expect("nonzero pivot");
                    let pivot_row = a[row].clone();
                    for (x, p) in a[r].iter_mut().zip(&pivot_row) {
                        *x -= q * *p;
                    }
                    debug_assert_eq!(a[r][col], rem);
                    done &= rem.is_zero();
                }
            }
            if done {
                break;
            }
        }
        if a[row][col].is_zero() {
            continue;
        }
        let p = a[row][col];
        let u = p.normalize_associate().exact_div(p).expect("unit");
        a[row].iter_mut().for_each(|x| *x = u * *x);
        let p = a[row][col];
        for r in 0..row {
            let (q, _) = a[r][col].div_rem(p).expect("nonzero pivot");
            let pivot_row = a[row].clone();
            for (x, y) in a[r].iter_mut().zip(&pivot_row) {
                *x -= q * *y;
            }
        }
        row += 1;
    }
    a.truncate(row);
    a
}

/// Rank over `O` of the span of the given vectors.
pub fn o_rank(rows: &[Coords]) -> usize {
    o_echelon(rows).len()
}

/// Integer coordinates `(a₁, b₁, …, aₙ, bₙ)` of `x` in the basis `b₁, ωb₁, …`.
pub fn to_z(x: &[Eis]) -> Vec<i128> {
    x.iter().flat_map(|c| [i128::from(c.a), i128::from(c.b)]).collect()
}

pub fn from_z(x: &[i128]) -> Coords {
    x.chunks(2).map(|c| eis(c[0] as i64, c[1] as i64)).collect()
}

/// Integer rows spanning the `Z`-module underlying the `O`-span of `rows`.
pub fn z_rows(rows: &[Coords]) -> Vec<Vec<i128>> {
    rows.iter()
        .flat_map(|r| {
            let w: Coords = r.iter().map(|&c| Eis::OMEGA * c).collect();
            [to_z(r), to_z(&w)]
        })
        .collect()
}

/// Canonical (Hermite) form of the `Z`-module underlying an `O`-span; equal
/// for two sets iff they span the same sublattice.
pub fn span_key(rows: &[Coords]) -> Vec<Vec<i128>> {
    zlinalg::hnf(&z_rows(rows))
}

impl HermitianLattice {
    pub fn new(gram: OMatrix) -> Result<Self, LatticeError> {
        if !gram.is_square() {
            return Err(LatticeError::NotSquare);
        }
        let n = gram.nrows();
        for i in 0..n {
            for j in 0..n {
                if gram[(i, j)] != gram[(j, i)].conj() {
                    return Err(LatticeError::NotHermitian(i, j));
                }
                if !gram[(i, j)].divisible_by_theta() {
                    return Err(LatticeError::NotThetaValued(i, j));
                }
            }
        }
        Ok(HermitianLattice { gram })
    }

    pub fn from_rows(rows: &[Vec<Eis>]) -> Result<Self, LatticeError> {
        Self::new(OMatrix::from_rows(rows))
    }

    /// `Λᵏ`: 3 on the diagonal, `θ` above, `θ̄` below.
    pub fn lambda(k: usize) -> Self {
        let mut g = OMatrix::zeros(k, k);
        for i in 0..k {
            g[(i, i)] = eis(3, 0);
            if i + 1 < k {
                g[(i, i + 1)] = Eis::THETA;
                g[(i + 1, i)] = Eis::THETA.conj();
            }
        }
        HermitianLattice { gram: g }
    }

    /// The hyperbolic plane `H_O` with `ψ(e, f) = θ`.
    pub fn hyperbolic() -> Self {
        HermitianLattice {
            gram: OMatrix::from_rows(&[vec![Eis::ZERO, Eis::THETA], vec![Eis::THETA.conj(), Eis::ZERO]]),
        }
    }

    /// Orthogonal direct sum.
    pub fn orthogonal_sum(parts: &[&HermitianLattice]) -> Self {
        let n: usize = parts.iter().map(|l| l.rank()).sum();
        let mut g = OMatrix::zeros(n, n);
        let mut off = 0;
        for l in parts {
            for i in 0..l.rank() {
                for j in 0..l.rank() {
                    g[(off + i, off + j)] = l.gram[(i, j)];
                }
            }
            off += l.rank();
        }
        HermitianLattice { gram: g }
    }

    /// Looks up `lambda<k>`, `H`/`hyperbolic`, or `Lambda`/`big_lambda` (the frame `Λ′⊥Λ″⊥H_O`).
    pub fn standard(name: &str) -> Result<Self, LatticeError> {
        match name {
            "H" | "hyperbolic" => Ok(Self::hyperbolic()),
            "Lambda" | "big_lambda" => Ok(BigLambda::new()?.frame),
            _ => name
                .strip_prefix("lambda")
                .and_then(|k| k.parse::<usize>().ok())
                .filter(|&k| k >= 1)
                .map(Self::lambda)
                .ok_or_else(|| LatticeError::UnknownName(name.to_string())),
        }
    }

    pub fn rank(&self) -> usize {
        self.gram.nrows()
    }

    pub fn gram(&self) -> &OMatrix {
        &self.gram
    }

    pub fn basis_coords(&self, i: usize) -> Coords {
        let mut v = vec![Eis::ZERO; self.rank()];
        v[i] = Eis::ONE;
        v
    }

    pub fn vector(&self, coords: Coords) -> Result<LatticeVector<'_>, LatticeError> {
        if coords.len() != self.rank() {
            return Err(LatticeError::RankMismatch { got: coords.len(), rank: self.rank() });
        }
        Ok(LatticeVector { lattice: self, coords })
    }

    pub fn basis_vector(&self, i: usize) -> LatticeVector<'_> {
        LatticeVector { lattice: self, coords: self.basis_coords(i) }
    }

    /// `ψ(x, y)` on raw coordinates. Panics on length mismatch.
    pub fn psi(&self, x: &[Eis], y: &[Eis]) -> Eis {
        let n = self.rank();
        assert!(x.len() == n && y.len() == n, "coordinate length must equal the rank");
        let mut s = Eis::ZERO;
        for (i, &xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            let mut t = Eis::ZERO;
            for (j, &yj) in y.iter().enumerate() {
                let g = self.gram[(i, j)];
                if !g.is_zero() && !yj.is_zero() {
                    t += g * yj.conj();
                }
            }
            s += xi * t;
        }
        s
    }

    /// `ψ(x, x)`, a rational integer divisible by 3.
    pub fn norm(&self, x: &[Eis]) -> i64 {
        let v = self.psi(x, x);
        debug_assert!(v.is_rational());
        v.a
    }

    /// `φ = −θ⁻¹ψ = θψ/3`, the `O`-valued skew-Hermitian form.
    pub fn phi(&self, x: &[Eis], y: &[Eis]) -> Eis {
        let p = self.psi(x, y) * Eis::THETA;
        p.exact_div(eis(3, 0)).expect("ψ is θO-valued")
    }

    pub fn hermitian_product(&self, x: &LatticeVector<'_>, y: &LatticeVector<'_>) -> Result<Eis, LatticeError> {
        if !std::ptr::eq(x.lattice, self) || !std::ptr::eq(y.lattice, self) {
            return Err(LatticeError::LatticeMismatch);
        }
        Ok(self.psi(&x.coords, &y.coords))
    }

    pub fn underlying_integral_form(&self) -> IntegralQuadraticForm {
        let n = self.rank();
        let mut m = vec![vec![0i64; 2 * n]; 2 * n];
        for i in 0..n {
            for j in 0..n {
                for s in 0..2 {
                    for t in 0..2 {
                        // ψ(ωˢbᵢ, ωᵗbⱼ) = ωˢ⁻ᵗ·gᵢⱼ
                        let v = Eis::omega_pow(s as i64 - t as i64) * self.gram[(i, j)];
                        debug_assert_eq!(v.trace() % 3, 0);
                        m[2 * i + s][2 * j + t] = v.trace() / 3;
                    }
                }
            }
        }
        IntegralQuadraticForm { matrix: m }
    }

    pub fn signature(&self) -> Signature {
        let (p, q, z) = self.underlying_integral_form().inertia();
        debug_assert!(p % 2 == 0 && q % 2 == 0 && z % 2 == 0);
        Signature::new(p / 2, q / 2, z / 2)
    }

    pub fn is_positive_definite(&self) -> bool {
        self.signature() == Signature::new(self.rank(), 0, 0)
    }

    /// Determinant of the Gram matrix (a rational integer).
    pub fn discriminant(&self) -> i64 {
        let d = self.gram.determinant().expect("Bareiss division is exact");
        debug_assert!(d.is_rational());
        d.a
    }

    /// Gram matrix of the given vectors.
    pub fn gram_of(&self, vectors: &[Coords]) -> OMatrix {
        let rows: Vec<Vec<Eis>> = vectors.iter().map(|x| vectors.iter().map(|y| self.psi(x, y)).collect()).collect();
        OMatrix::from_rows(&rows)
    }

    /// The lattice spanned by `basis` (assumed `O`-independent) with the restricted form.
    pub fn sublattice(&self, basis: &[Coords]) -> HermitianLattice {
        HermitianLattice { gram: self.gram_of(basis) }
    }

    /// An `O`-basis of `{x : ψ(x, s) = 0 for all s ∈ S}`; automatically saturated.
    pub fn orthogonal_complement(&self, s: &[Coords]) -> Result<Vec<Coords>, LatticeError> {
        if self.discriminant() == 0 {
            return Err(LatticeError::Degenerate);
        }
        let n = self.rank();
        let mut eqs: Vec<Vec<i128>> = Vec::new();
        for v in s {
            if v.len() != n {
                return Err(LatticeError::RankMismatch { got: v.len(), rank: n });
            }
            // ψ(x, v) = Σ xᵢ cᵢ with cᵢ = Σⱼ gᵢⱼ conj(vⱼ)
            let c: Coords = (0..n).map(|i| (0..n).map(|j| self.gram[(i, j)] * v[j].conj()).sum()).collect();
            let mut re = Vec::with_capacity(2 * n);
            let mut im = Vec::with_capacity(2 * n);
            for ci in &c {
                let (g, d) = (i128::from(ci.a), i128::from(ci.b));
                re.extend([g, -d]);
                im.extend([d, g + d]);
            }
            eqs.push(re);
            eqs.push(im);
        }
        if eqs.is_empty() {
            return Ok((0..n).map(|i| self.basis_coords(i)).collect());
        }
        let k = zlinalg::kernel(&eqs, 2 * n);
        Ok(o_echelon(&k.iter().map(|r| from_z(r)).collect::<Vec<_>>()))
    }

    /// Whether the `O`-span of `s` is primitive (saturated) in the lattice.
    pub fn is_primitive(&self, s: &[Coords]) -> bool {
        zlinalg::is_saturated(&z_rows(s), 2 * self.rank())
    }

    /// An `O`-basis of the saturation of the `O`-span of `s`.
    pub fn saturation(&self, s: &[Coords]) -> Vec<Coords> {
        let sat = zlinalg::saturation(&z_rows(s), 2 * self.rank());
        o_echelon(&sat.iter().map(|r| from_z(r)).collect::<Vec<_>>())
    }

    /// Is `x` in the `O`-span of `basis`?
    pub fn span_contains(&self, basis: &[Coords], x: &[Eis]) -> bool {
        zlinalg::span_contains(&z_rows(basis), &z_rows(&[x.to_vec()]))
    }
}

/// JSON exchange form `{"rank": n, "gram": [[[a, b], …], …]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LatticeJson {
    pub rank: usize,
    pub gram: Vec<Vec<Eis>>,
}

impl From<&HermitianLattice> for LatticeJson {
    fn from(l: &HermitianLattice) -> Self {
        LatticeJson { rank: l.rank(), gram: l.gram.to_rows() }
    }
}

impl TryFrom<LatticeJson> for HermitianLattice {
    type Error = LatticeError;
    fn try_from(j: LatticeJson) -> Result<Self, LatticeError> {
        if j.gram.len() != j.rank || j.gram.iter().any(|r| r.len() != j.rank) {
            return Err(LatticeError::NotSquare);
        }
        HermitianLattice::from_rows(&j.gram)
    }
}

/// Frame indices of `Λ′ ⊥ Λ″ ⊥ H_O`.
pub mod frame {
    /// `r′ᵢ` (1-based `i`).
    pub const fn r1(i: usize) -> usize {
        i - 1
    }
    /// `r″ᵢ` (1-based `i`).
    pub const fn r2(i: usize) -> usize {
        3 + i
    }
    pub const E: usize = 8;
    pub const F: usize = 9;
}

/// `Λ = Λ′ ⊥ Λ″ ⊥ H_O` (coordinates `r′₁…r′₄, r″₁…r″₄, e, f`) together with the
/// unitary identification of `Λ¹⁰` with it.
#[derive(Clone, Debug)]
pub struct BigLambda {
    pub frame: HermitianLattice,
    /// Frame coordinates of the images of `r₁, …, r₁₀`.
    pub images: Vec<Coords>,
    /// The vector of `Λ″` perpendicular to `r″₁, r″₂, r″₃` with `ψ(r″₄, s) = θ`.
    pub s: Coords,
}

impl BigLambda {
    pub fn new() -> Result<Self, LatticeError> {
        let l4 = HermitianLattice::lambda(4);
        let frame = HermitianLattice::orthogonal_sum(&[&l4, &l4, &HermitianLattice::hyperbolic()]);
        // ψ(r″ᵢ, s) = Σⱼ gᵢⱼ conj(sⱼ): solve for conj(s) in Λ″ = Λ⁴
        let target = [Eis::ZERO, Eis::ZERO, Eis::ZERO, Eis::THETA];
        let conj_s = solve_rational(l4.gram(), &target).ok_or(LatticeError::Degenerate)?;
        let s4: Coords = conj_s
            .iter()
            .map(|x| x.to_integer().map(Eis::conj))
            .collect::<Option<_>>()
            .ok_or(LatticeError::NonIntegralFrameVector)?;
        let mut s = vec![Eis::ZERO; 10];
        s[4..8].copy_from_slice(&s4);

        let unit = |i: usize| {
            let mut v = vec![Eis::ZERO; 10];
            v[i] = Eis::ONE;
            v
        };
        let combo = |terms: &[(Eis, usize)]| {
            let mut v = vec![Eis::ZERO; 10];
            for &(c, i) in terms {
                v[i] += c;
            }
            v
        };
        let mut images: Vec<Coords> = (1..=4).map(|i| unit(frame::r2(i))).collect();
        let mut r5 = s.clone();
        r5[frame::E] += Eis::ONE;
        images.push(r5);
        images.push(combo(&[(-Eis::OMEGA, frame::E), (Eis::ONE, frame::F)]));
        images.push(combo(&[(-Eis::ONE, frame::E), (Eis::ONE, frame::r1(1))]));
        images.extend((2..=4).map(|i| unit(frame::r1(i))));

        let out = BigLambda { frame, images, s };
        if out.frame.gram_of(&out.images) != *HermitianLattice::lambda(10).gram() {
            return Err(LatticeError::FrameNotUnitary);
        }
        if !OMatrix::from_columns(&out.images).determinant().map(Eis::is_unit).unwrap_or(false) {
            return Err(LatticeError::FrameNotUnitary);
        }
        Ok(out)
    }

    /// Frame coordinates of a vector given in the `r₁…r₁₀` basis.
    pub fn to_frame(&self, x: &[Eis]) -> Coords {
        OMatrix::from_columns(&self.images).apply(x)
    }

    /// `r₁…r₁₀` coordinates of a vector given in frame coordinates.
    pub fn from_frame(&self, x: &[Eis]) -> Coords {
        solve_rational(&OMatrix::from_columns(&self.images), x)
            .expect("identification is invertible")
            .iter()
            .map(|c| c.to_integer().expect("identification is unimodular"))
            .collect()
    }

    /// Primitive isotropic vector `e`.
    pub fn e(&self) -> Coords {
        self.frame.basis_coords(frame::E)
    }

    pub fn f(&self) -> Coords {
        self.frame.basis_coords(frame::F)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::EisensteinInteger;

    const TH: Eis = EisensteinInteger::THETA;
    const W: Eis = EisensteinInteger::OMEGA;

    fn v(pairs: &[(i64, i64)]) -> Coords {
        pairs.iter().map(|&(a, b)| eis(a, b)).collect()
    }

    #[test]
    fn products_in_standard_lattices() {
        let l2 = HermitianLattice::lambda(2);
        let (r1, r2) = (l2.basis_vector(0), l2.basis_vector(1));
        assert_eq!(l2.hermitian_product(&r1, &r2).unwrap(), TH);
        assert_eq!(l2.hermitian_product(&r1, &r1).unwrap(), eis(3, 0));
        let h = HermitianLattice::hyperbolic();
        assert_eq!(h.hermitian_product(&h.basis_vector(0), &h.basis_vector(1)).unwrap(), TH);
        let other = HermitianLattice::lambda(2);
        assert_eq!(l2.hermitian_product(&r1, &other.basis_vector(0)), Err(LatticeError::LatticeMismatch));
        assert!(l2.vector(vec![Eis::ONE]).is_err());
    }

    #[test]
    fn gram_shapes() {
        assert_eq!(HermitianLattice::lambda(1).gram().to_rows(), vec![vec![eis(3, 0)]]);
        assert_eq!(HermitianLattice::hyperbolic().gram().to_rows(), vec![vec![Eis::ZERO, TH], vec![-TH, Eis::ZERO]]);
        assert_eq!(HermitianLattice::standard("lambda4").unwrap(), HermitianLattice::lambda(4));
        assert!(HermitianLattice::standard("lambda0").is_err());
        assert!(HermitianLattice::from_rows(&[vec![eis(1, 0)]]).is_err());
    }

    #[test]
    fn underlying_forms() {
        let a2 = HermitianLattice::lambda(1).underlying_integral_form();
        assert_eq!(a2.matrix, vec![vec![2, 1], vec![1, 2]]);
        assert_eq!(a2.determinant(), 3);
        let e8 = HermitianLattice::lambda(4).underlying_integral_form();
        assert_eq!(e8.dim(), 8);
        assert!(e8.is_even() && e8.is_symmetric());
        assert_eq!(e8.determinant(), 1);
        let h = HermitianLattice::hyperbolic().underlying_integral_form();
        assert!(h.is_even());
        assert_eq!(h.determinant().abs(), 1);
    }

    #[test]
    fn signatures_and_discriminants() {
        assert_eq!(HermitianLattice::lambda(4).signature(), Signature::new(4, 0, 0));
        assert_eq!(HermitianLattice::lambda(10).signature(), Signature::new(9, 1, 0));
        assert_eq!(HermitianLattice::lambda(5).signature(), Signature::new(4, 0, 1));
        let d6 = HermitianLattice::from_rows(&[vec![eis(3, 0), TH], vec![TH.conj(), eis(3, 0)]]).unwrap();
        assert_eq!(d6.discriminant(), 6);
        let d18 = HermitianLattice::from_rows(&[vec![eis(6, 0), Eis::ZERO], vec![Eis::ZERO, eis(3, 0)]]).unwrap();
        assert_eq!(d18.discriminant(), 18);
        assert_eq!(HermitianLattice::lambda(4).discriminant(), 9);
    }

    #[test]
    fn discriminant_recurrence() {
        // d_k = 3 d_{k-1} - 3 d_{k-2}, d_0 = 1, d_1 = 3
        let (mut prev, mut cur) = (1i64, 3i64);
        for k in 1..=12 {
            assert_eq!(HermitianLattice::lambda(k).discriminant(), cur, "k = {k}");
            let sig = HermitianLattice::lambda(k).signature();
            if sig.null == 0 {
                assert_eq!(cur.signum(), if sig.negative.is_multiple_of(2) { 1 } else { -1 });
            }
            (prev, cur) = (cur, 3 * cur - 3 * prev);
        }
    }

    #[test]
    fn complements() {
        let l2 = HermitianLattice::lambda(2);
        let z = v(&[(1, 0), (1, 0)]);
        let c = l2.orthogonal_complement(std::slice::from_ref(&z)).unwrap();
        assert_eq!(c.len(), 1);
        let w2r1_r2 = vec![W * W, Eis::ONE];
        assert!(l2.span_contains(&c, &w2r1_r2));
        assert!(l2.is_primitive(&c));

        let h = HermitianLattice::hyperbolic();
        let c = h.orthogonal_complement(&[h.basis_coords(0)]).unwrap();
        assert_eq!(span_key(&c), span_key(&[h.basis_coords(0)]));

        let l10 = HermitianLattice::lambda(10);
        for k in 1..=10 {
            let s: Vec<Coords> = (0..k - 1).map(|i| l10.basis_coords(i)).collect();
            let c = l10.orthogonal_complement(&s).unwrap();
            for j in k..10 {
                assert!(l10.span_contains(&c, &l10.basis_coords(j)));
            }
            for x in &c {
                for y in &s {
                    assert!(l10.psi(x, y).is_zero());
                }
            }
        }
        let l5 = HermitianLattice::lambda(5);
        assert_eq!(l5.orthogonal_complement(&[]), Err(LatticeError::Degenerate));
    }

    #[test]
    fn primitivity() {
        let l2 = HermitianLattice::lambda(2);
        let z = v(&[(1, 0), (1, 0)]);
        let r = vec![W * W, Eis::ONE];
        assert!(!l2.is_primitive(&[z.clone(), r.clone()]));
        assert_eq!(l2.saturation(&[z, r]).len(), 2);
        let h = HermitianLattice::hyperbolic();
        assert!(h.is_primitive(&[h.basis_coords(0)]));
        assert!(!l2.is_primitive(&[v(&[(2, 0), (0, 0)])]));
    }

    #[test]
    fn big_lambda_identification() {
        let bl = BigLambda::new().unwrap();
        assert_eq!(bl.frame.gram_of(&bl.images), *HermitianLattice::lambda(10).gram());
        assert_eq!(bl.frame.signature(), Signature::new(9, 1, 0));
        let s = &bl.s;
        for i in 1..=3 {
            assert!(bl.frame.psi(&bl.frame.basis_coords(frame::r2(i)), s).is_zero());
        }
        assert_eq!(bl.frame.psi(&bl.frame.basis_coords(frame::r2(4)), s), TH);
        let x = v(&[(1, 2), (0, 0), (-1, 0), (3, 1), (0, 1), (0, 0), (2, 0), (0, 0), (1, -1), (0, 4)]);
        assert_eq!(bl.from_frame(&bl.to_frame(&x)), x);
        let zo = {
            let mut z = vec![Eis::ZERO; 10];
            z[frame::r1(1)] = Eis::ONE;
            z[frame::r1(2)] = Eis::ONE;
            z
        };
        let l10 = HermitianLattice::lambda(10);
        let back = bl.from_frame(&zo);
        assert_eq!(l10.norm(&back), 6);
    }

    #[test]
    fn json_round_trip() {
        let l = HermitianLattice::lambda(3);
        let j = serde_json::to_string(&LatticeJson::from(&l)).unwrap();
        let back: LatticeJson = serde_json::from_str(&j).unwrap();
        assert_eq!(HermitianLattice::try_from(back).unwrap(), l);
    }
}
