//! Isometries of Hermitian lattices: triflections, Heisenberg transvections,
//! reduction modulo `θ`, and closure of finite groups.
//!
//! Matrices act on coordinate columns; column `j` is the image of `bⱼ`. A matrix
//! `U` is an isometry iff `Uᵀ·G·Ū = G`.

use std::collections::{BTreeSet, HashSet};
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

use crate::lattice::{Coords, HermitianLattice};
use crate::omatrix::{solve_rational, OMatrix, RMatrix};
use crate::ring::{EisensteinInteger as Eis, EisensteinRational as ERat, F3};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UnitaryError {
    #[error("matrix is {0}x{1}, lattice rank is {2}")]
    Shape(usize, usize, usize),
    #[error("matrix does not preserve the form")]
    NotIsometry,
    #[error("ψ(r, r) = {0}, expected 3")]
    NotThreeVector(i64),
    #[error("e is not isotropic")]
    NotIsotropic,
    #[error("v is not orthogonal to e")]
    NotOrthogonal,
    #[error("ψ(v, v) = {0} is not divisible by 6")]
    BadParity(i64),
    #[error("transvection is not integral")]
    NonIntegral,
    #[error("maps act on different lattices")]
    LatticeMismatch,
    #[error("vector has length {got}, lattice rank is {rank}")]
    RankMismatch { got: usize, rank: usize },
    #[error("group closure exceeded the cap of {0} elements")]
    CapExceeded(usize),
    #[error("no generators given")]
    NoGenerators,
}

/// `Uᵀ·G·Ū = G`.
pub fn is_isometry(l: &HermitianLattice, m: &OMatrix) -> bool {
    let n = l.rank();
    if m.nrows() != n || m.ncols() != n {
        return false;
    }
    &(&m.transpose() * l.gram()) * &m.conj() == *l.gram()
}

/// An isometry of a fixed lattice.
#[derive(Clone, Debug)]
pub struct UnitaryMap<'a> {
    lattice: &'a HermitianLattice,
    matrix: OMatrix,
}

impl PartialEq for UnitaryMap<'_> {
    fn eq(&self, o: &Self) -> bool {
        std::ptr::eq(self.lattice, o.lattice) && self.matrix == o.matrix
    }
}

impl Eq for UnitaryMap<'_> {}

impl<'a> UnitaryMap<'a> {
    pub fn new(lattice: &'a HermitianLattice, matrix: OMatrix) -> Result<Self, UnitaryError> {
        let n = lattice.rank();
        if matrix.nrows() != n || matrix.ncols() != n {
            return Err(UnitaryError::Shape(matrix.nrows(), matrix.ncols(), n));
        }
        if !is_isometry(lattice, &matrix) {
            return Err(UnitaryError::NotIsometry);
        }
        Ok(UnitaryMap { lattice, matrix })
    }

    pub fn identity(lattice: &'a HermitianLattice) -> Self {
        UnitaryMap { lattice, matrix: OMatrix::identity(lattice.rank()) }
    }

    /// Multiplication by a unit.
    pub fn scalar(lattice: &'a HermitianLattice, u: Eis) -> Result<Self, UnitaryError> {
        Self::new(lattice, OMatrix::scalar(lattice.rank(), u))
    }

    pub fn lattice(&self) -> &'a HermitianLattice {
        self.lattice
    }

    pub fn matrix(&self) -> &OMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> OMatrix {
        self.matrix
    }

    pub fn apply(&self, x: &[Eis]) -> Result<Coords, UnitaryError> {
        if x.len() != self.lattice.rank() {
            return Err(UnitaryError::RankMismatch { got: x.len(), rank: self.lattice.rank() });
        }
        Ok(self.matrix.apply(x))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Result<Self, UnitaryError> {
        if !std::ptr::eq(self.lattice, other.lattice) {
            return Err(UnitaryError::LatticeMismatch);
        }
        Ok(UnitaryMap { lattice: self.lattice, matrix: &self.matrix * &other.matrix })
    }

    /// `U⁻¹ = conj(G⁻¹·Uᵀ·G)`.
    pub fn inverse(&self) -> Self {
        let g = self.lattice.gram();
        let n = g.nrows();
        let utg = &self.matrix.transpose() * g;
        let cols: Vec<Vec<ERat>> = (0..n)
            .map(|j| solve_rational(g, &utg.column(j)).expect("nondegenerate isometry"))
            .collect();
        let inv = OMatrix::from_columns(
            &cols
                .iter()
                .map(|c| c.iter().map(|x| x.to_integer().expect("integral inverse").conj()).collect())
                .collect::<Vec<_>>(),
        );
        debug_assert!((&inv * &self.matrix).is_identity());
        UnitaryMap { lattice: self.lattice, matrix: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity()
    }

    pub fn order(&self, limit: u32) -> Option<u32> {
        self.matrix.order(limit)
    }

    pub fn reduce_mod_theta(&self) -> SymplecticMapF3 {
        SymplecticMapF3::reduce(&self.matrix)
    }
}

/// `φ(x, y) = θψ(x, y)/3` for coordinate vectors over `Q(ω)`.
pub fn phi_rational(l: &HermitianLattice, x: &[ERat], y: &[ERat]) -> ERat {
    let n = l.rank();
    let mut s = ERat::zero();
    for i in 0..n {
        for j in 0..n {
            let g = l.gram()[(i, j)];
            if !g.is_zero() {
                s = &s + &(&(&x[i] * &ERat::from(g)) * &y[j].conj());
            }
        }
    }
    let third = BigRational::new(BigInt::from(1), BigInt::from(3));
    (&s * &ERat::from(Eis::THETA)).scale(&third)
}

fn to_rat(x: &[Eis]) -> Vec<ERat> {
    x.iter().map(|&c| c.into()).collect()
}

/// The triflection `s_r(x) = x − ω⁻¹φ(x, r)r` of a 3-vector `r`.
pub fn triflection<'a>(l: &'a HermitianLattice, r: &[Eis]) -> Result<UnitaryMap<'a>, UnitaryError> {
    if r.len() != l.rank() {
        return Err(UnitaryError::RankMismatch { got: r.len(), rank: l.rank() });
    }
    let nr = l.norm(r);
    if nr != 3 {
        return Err(UnitaryError::NotThreeVector(nr));
    }
    let w_inv = Eis::omega_pow(-1);
    let cols: Vec<Coords> = (0..l.rank())
        .map(|j| {
            let b = l.basis_coords(j);
            let c = w_inv * l.phi(&b, r);
            b.iter().zip(r).map(|(&x, &y)| x - c * y).collect()
        })
        .collect();
    UnitaryMap::new(l, OMatrix::from_columns(&cols))
}

/// `½φ(v, v)`, the coefficient of the central term of `T_{e,v}`.
pub fn transvection_coefficient(l: &HermitianLattice, v: &[ERat]) -> ERat {
    phi_rational(l, v, v).scale(&ERat::half())
}

/// `T_{e,v}(x) = x + φ(x,e)v + φ(x,v)e + ½φ(v,v)φ(x,e)e` over `Q(ω)`.
pub fn transvection_matrix(l: &HermitianLattice, e: &[ERat], v: &[ERat]) -> RMatrix {
    let n = l.rank();
    let c = transvection_coefficient(l, v);
    let cols: Vec<Vec<ERat>> = (0..n)
        .map(|j| {
            let b = to_rat(&l.basis_coords(j));
            let pe = phi_rational(l, &b, e);
            let pv = phi_rational(l, &b, v);
            let ce = &pv + &(&c * &pe);
            (0..n).map(|i| &(&b[i] + &(&pe * &v[i])) + &(&ce * &e[i])).collect()
        })
        .collect();
    RMatrix::from_fn(n, n, |i, j| cols[j][i].clone())
}

/// The Heisenberg transvection `T_{e,v}` for isotropic `e`, `v ⊥ e`, `ψ(v,v) ∈ 6Z`.
pub fn heisenberg_transvection<'a>(
    l: &'a HermitianLattice,
    e: &[Eis],
    v: &[Eis],
) -> Result<UnitaryMap<'a>, UnitaryError> {
    for x in [e, v] {
        if x.len() != l.rank() {
            return Err(UnitaryError::RankMismatch { got: x.len(), rank: l.rank() });
        }
    }
    if l.norm(e) != 0 {
        return Err(UnitaryError::NotIsotropic);
    }
    if !l.psi(e, v).is_zero() {
        return Err(UnitaryError::NotOrthogonal);
    }
    let nv = l.norm(v);
    if nv % 6 != 0 {
        return Err(UnitaryError::BadParity(nv));
    }
    let m = transvection_matrix(l, &to_rat(e), &to_rat(v)).to_integral().ok_or(UnitaryError::NonIntegral)?;
    UnitaryMap::new(l, m)
}

/// `φ(bᵢ, bⱼ) mod θ`: the symplectic form induced on `L/θL`.
pub fn induced_symplectic_form(l: &HermitianLattice) -> Vec<Vec<F3>> {
    let n = l.rank();
    (0..n)
        .map(|i| (0..n).map(|j| l.phi(&l.basis_coords(i), &l.basis_coords(j)).reduce_mod_theta()).collect())
        .collect()
}

pub fn reduce_vector(x: &[Eis]) -> Vec<F3> {
    x.iter().map(|c| c.reduce_mod_theta()).collect()
}

/// `ω_F(v, w) = Σ vᵢ·formᵢⱼ·wⱼ`.
pub fn symplectic_pairing(form: &[Vec<F3>], v: &[F3], w: &[F3]) -> F3 {
    let mut s = F3::ZERO;
    for (i, &vi) in v.iter().enumerate() {
        for (j, &wj) in w.iter().enumerate() {
            s += vi * form[i][j] * wj;
        }
    }
    s
}

/// A square matrix over `F₃` (columns are images).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SymplecticMapF3 {
    n: usize,
    data: Vec<F3>,
}

impl SymplecticMapF3 {
    pub fn from_rows(rows: &[Vec<F3>]) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "square matrix expected");
        SymplecticMapF3 { n, data: rows.concat() }
    }

    pub fn identity(n: usize) -> Self {
        let mut data = vec![F3::ZERO; n * n];
        for i in 0..n {
            data[i * n + i] = F3::ONE;
        }
        SymplecticMapF3 { n, data }
    }

    pub fn reduce(m: &OMatrix) -> Self {
        assert!(m.is_square());
        SymplecticMapF3 { n: m.nrows(), data: m.entries().iter().map(|x| x.reduce_mod_theta()).collect() }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> F3 {
        self.data[i * self.n + j]
    }

    pub fn apply(&self, v: &[F3]) -> Vec<F3> {
        (0..self.n).map(|i| (0..self.n).fold(F3::ZERO, |acc, j| acc + self.get(i, j) * v[j])).collect()
    }

    pub fn compose(&self, o: &Self) -> Self {
        let n = self.n;
        let mut data = vec![F3::ZERO; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    data[i * n + j] += a * o.get(k, j);
                }
            }
        }
        SymplecticMapF3 { n, data }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n)
    }

    /// `Mᵀ·form·M = form`.
    pub fn preserves(&self, form: &[Vec<F3>]) -> bool {
        let n = self.n;
        (0..n).all(|i| {
            (0..n).all(|j| {
                let mut s = F3::ZERO;
                for k in 0..n {
                    for l in 0..n {
                        s += self.get(k, i) * form[k][l] * self.get(l, j);
                    }
                }
                s == form[i][j]
            })
        })
    }

    pub fn order(&self, limit: u32) -> Option<u32> {
        let mut acc = self.clone();
        for k in 1..=limit {
            if acc.is_identity() {
                return Some(k);
            }
            acc = acc.compose(self);
        }
        None
    }

    /// Dimension of the fixed subspace `ker(M − 1)`.
    pub fn fixed_dimension(&self) -> usize {
        let n = self.n;
        let mut a: Vec<Vec<F3>> =
            (0..n).map(|i| (0..n).map(|j| self.get(i, j) - if i == j { F3::ONE } else { F3::ZERO }).collect()).collect();
        let mut rank = 0;
        for col in 0..n {
            let Some(p) = (rank..n).find(|&r| !a[r][col].is_zero()) else { continue };
            a.swap(rank, p);
            let inv = a[rank][col].inv().expect("nonzero");
            let prow: Vec<F3> = a[rank].iter().map(|&x| x * inv).collect();
            for (r, row) in a.iter_mut().enumerate() {
                if r != rank && !row[col].is_zero() {
                    let f = row[col];
                    for (x, &p) in row.iter_mut().zip(&prow) {
                        *x = *x - f * p;
                    }
                }
            }
            a[rank] = prow;
            rank += 1;
        }
        n - rank
    }
}

/// Elements that can be closed into a finite group.
pub trait GroupElement: Clone + Eq + Hash {
    fn compose(&self, other: &Self) -> Self;
    fn identity_like(&self) -> Self;
}

impl GroupElement for OMatrix {
    fn compose(&self, other: &Self) -> Self {
        self * other
    }
    fn identity_like(&self) -> Self {
        OMatrix::identity(self.nrows())
    }
}

impl GroupElement for SymplecticMapF3 {
    fn compose(&self, other: &Self) -> Self {
        SymplecticMapF3::compose(self, other)
    }
    fn identity_like(&self) -> Self {
        SymplecticMapF3::identity(self.n)
    }
}

/// A finite group given by its element set; multiplication is `compose`.
#[derive(Clone, Debug)]
pub struct FiniteGroup<T: GroupElement> {
    elements: HashSet<T>,
}

impl<T: GroupElement> FiniteGroup<T> {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: &T) -> bool {
        self.elements.contains(x)
    }

    pub fn iter(&self) -> impl Iterator<Item = &T> {
        self.elements.iter()
    }

    pub fn multiply(&self, a: &T, b: &T) -> T {
        a.compose(b)
    }

    /// The image under a homomorphism, as a group.
    pub fn image<S: GroupElement>(&self, f: impl Fn(&T) -> S) -> FiniteGroup<S> {
        FiniteGroup { elements: self.elements.iter().map(f).collect() }
    }
}

/// Breadth-first closure of the generators; fails once more than `cap` elements appear.
pub fn generate_group<T: GroupElement>(generators: &[T], cap: usize) -> Result<FiniteGroup<T>, UnitaryError> {
    let first = generators.first().ok_or(UnitaryError::NoGenerators)?;
    let id = first.identity_like();
    let mut elements = HashSet::from([id.clone()]);
    let mut frontier = vec![id];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for g in &frontier {
            for s in generators {
                let h = s.compose(g);
                if !elements.contains(&h) {
                    if elements.len() >= cap {
                        return Err(UnitaryError::CapExceeded(cap));
                    }
                    elements.insert(h.clone());
                    next.push(h);
                }
            }
        }
        frontier = next;
    }
    Ok(FiniteGroup { elements })
}

/// Closure of unitary maps of a common lattice.
pub fn generate_unitary_group(
    generators: &[UnitaryMap<'_>],
    cap: usize,
) -> Result<FiniteGroup<OMatrix>, UnitaryError> {
    if let Some(g) = generators.first() {
        if generators.iter().any(|h| !std::ptr::eq(h.lattice, g.lattice)) {
            return Err(UnitaryError::LatticeMismatch);
        }
    }
    let ms: Vec<OMatrix> = generators.iter().map(|g| g.matrix.clone()).collect();
    generate_group(&ms, cap)
}

/// Orbit of `seed` under the group generated by `generators`.
pub fn orbit(generators: &[OMatrix], seed: &[Eis], cap: usize) -> Result<BTreeSet<Coords>, UnitaryError> {
    let mut seen = BTreeSet::from([seed.to_vec()]);
    let mut frontier = vec![seed.to_vec()];
    while let Some(x) = frontier.pop() {
        for g in generators {
            let y = g.apply(&x);
            if !seen.contains(&y) {
                if seen.len() >= cap {
                    return Err(UnitaryError::CapExceeded(cap));
                }
                seen.insert(y.clone());
                frontier.push(y);
            }
        }
    }
    Ok(seen)
}

/// Number of group elements fixing `seed`.
pub fn stabilizer_order(group: &FiniteGroup<OMatrix>, seed: &[Eis]) -> usize {
    group.iter().filter(|g| g.apply(seed) == seed).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::eis;

    #[test]
    fn triflection_basics() {
        let l = HermitianLattice::lambda(2);
        let r1 = l.basis_coords(0);
        let s = triflection(&l, &r1).unwrap();
        assert_eq!(s.apply(&r1).unwrap(), vec![-Eis::OMEGA, Eis::ZERO]);
        assert_eq!(s.order(10), Some(3));
        let perp = l.orthogonal_complement(std::slice::from_ref(&r1)).unwrap();
        assert_eq!(s.apply(&perp[0]).unwrap(), perp[0]);
        assert!(matches!(triflection(&l, &[eis(1, 0), eis(1, 0)]), Err(UnitaryError::NotThreeVector(6))));
    }

    #[test]
    fn inverse_and_reduction() {
        let l = HermitianLattice::lambda(4);
        let s = triflection(&l, &l.basis_coords(1)).unwrap();
        assert!(s.compose(&s.inverse()).unwrap().is_identity());
        let w = UnitaryMap::scalar(&l, Eis::OMEGA).unwrap();
        let minus = SymplecticMapF3::identity(4).compose(&SymplecticMapF3::reduce(&OMatrix::scalar(4, -Eis::ONE)));
        assert_eq!(w.reduce_mod_theta(), minus);
        let form = induced_symplectic_form(&l);
        assert!(s.reduce_mod_theta().preserves(&form));
        assert_eq!(s.reduce_mod_theta().fixed_dimension(), 3);
    }

    #[test]
    fn rank_one_group() {
        let l = HermitianLattice::lambda(1);
        let g = generate_unitary_group(
            &[triflection(&l, &l.basis_coords(0)).unwrap(), UnitaryMap::scalar(&l, Eis::OMEGA).unwrap()],
            100,
        )
        .unwrap();
        assert_eq!(g.order(), 6);
        let h = generate_unitary_group(&[UnitaryMap::scalar(&l, Eis::OMEGA).unwrap()], 3);
        assert_eq!(h.unwrap_err(), UnitaryError::CapExceeded(3));
    }
}
