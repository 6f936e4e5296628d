//! The Pham module `A_O = O[η]/(Σηⁱ, Σ(ωη)ⁱ)` of the `μ₆`-cover of `P¹`
//! branched over the 12th roots of unity, its Hermitian form, the braid
//! monodromy `T̂_k`, and the integral module `A = Z[τ,η]/(Στⁱ, Σηⁱ, Σ(τη)ⁱ)`.
//!
//! Vectors of `A_O` are written in the basis `r₁…r₁₀`, `rᵢ` the image of `(ωη)ⁱ`.

use serde::Serialize;
use thiserror::Error;

use crate::lattice::{Coords, HermitianLattice, Signature};
use crate::omatrix::{solve_rational, OMatrix};
use crate::ring::{eis, EisensteinInteger as Eis};
use crate::zlinalg;

pub const N: usize = 12;
pub const RANK: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PhamError {
    #[error("relation matrix is singular on the eliminated monomials")]
    SingularRelations,
    #[error("a basis change that should be integral is not")]
    NonIntegral,
    #[error("no unit rescaling turns the Gram into the standard one (entry {0})")]
    NoUnitNormalization(usize),
    #[error("monodromy does not preserve the relation lattice")]
    MonodromyNotDefined,
}

/// `Σ cᵢηⁱ` acting on the cycle `e`; indices mod 12.
pub type EtaPolynomial = [Eis; N];

pub fn eta_monomial(i: i64, c: Eis) -> EtaPolynomial {
    let mut p = [Eis::ZERO; N];
    p[i.rem_euclid(N as i64) as usize] = c;
    p
}

/// `ψ(e, ηᵏe)`.
pub fn psi_e_eta(k: i64) -> Eis {
    match k.rem_euclid(N as i64) {
        0 => eis(3, 0),
        1 => -Eis::ONE - Eis::OMEGA,
        11 => -Eis::ONE - Eis::omega_pow(-1),
        _ => Eis::ZERO,
    }
}

/// `ψ(Σaᵢηⁱe, Σbⱼηʲe) = Σ aᵢ·conj(bⱼ)·ψ(e, ηʲ⁻ⁱe)`.
pub fn pham_form_poly(x: &EtaPolynomial, y: &EtaPolynomial) -> Eis {
    let mut s = Eis::ZERO;
    for (i, &a) in x.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, &b) in y.iter().enumerate() {
            let c = psi_e_eta(j as i64 - i as i64);
            if !b.is_zero() && !c.is_zero() {
                s += a * b.conj() * c;
            }
        }
    }
    s
}

pub fn eta_shift(x: &EtaPolynomial, k: i64) -> EtaPolynomial {
    let mut out = [Eis::ZERO; N];
    for (i, &c) in x.iter().enumerate() {
        out[(i as i64 + k).rem_euclid(N as i64) as usize] = c;
    }
    out
}

/// `Ψ(x, y) = Σᵢ ψ(x, ηⁱy)ηⁱ`.
pub fn aggregate_form(x: &EtaPolynomial, y: &EtaPolynomial) -> EtaPolynomial {
    std::array::from_fn(|i| pham_form_poly(x, &eta_shift(y, i as i64)))
}

/// The two defining relations `Σηⁱ` and `Σ(ωη)ⁱ`.
pub fn relations() -> [EtaPolynomial; 2] {
    [[Eis::ONE; N], std::array::from_fn(|i| Eis::omega_pow(i as i64))]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GramReport {
    pub gram: Vec<Vec<Eis>>,
    /// `uᵢ` with `ψ(uᵢrᵢ, uⱼrⱼ)` equal to the standard `Λ¹⁰` Gram.
    pub units: Vec<Eis>,
    pub signature: Signature,
    pub discriminant: i64,
}

/// The module `A_O` with its reduction map and Hermitian lattice structure.
#[derive(Clone, Debug)]
pub struct PhamModule {
    /// Column `i` holds the `r`-coordinates of `ηⁱ`.
    reduction: OMatrix,
    lattice: HermitianLattice,
}

impl PhamModule {
    pub fn new() -> Result<Self, PhamError> {
        let rel = relations();
        let mut cols: Vec<Coords> = vec![vec![Eis::ZERO; RANK]; N];
        for (i, col) in cols.iter_mut().enumerate().take(RANK + 1).skip(1) {
            // ηⁱ = ω⁻ⁱ rᵢ
            col[i - 1] = Eis::omega_pow(-(i as i64));
        }
        // ηᵏ (k = 0, 11) ≡ ηᵏ − λ₁R₁ − λ₂R₂ with λ chosen to kill columns 0 and 11
        let m = OMatrix::from_rows(&[vec![rel[0][0], rel[1][0]], vec![rel[0][11], rel[1][11]]]);
        for k in [0usize, 11] {
            let rhs = [Eis::from(i64::from(k == 0)), Eis::from(i64::from(k == 11))];
            let lam = solve_rational(&m, &rhs).ok_or(PhamError::SingularRelations)?;
            let lam: Vec<Eis> = lam.iter().map(|x| x.to_integer()).collect::<Option<_>>().ok_or(PhamError::NonIntegral)?;
            let mut v = vec![Eis::ZERO; RANK];
            for j in 1..=RANK {
                let c = -(lam[0] * rel[0][j] + lam[1] * rel[1][j]);
                for (t, &x) in v.iter_mut().zip(&cols[j]) {
                    *t += c * x;
                }
            }
            cols[k] = v;
        }
        let reduction = OMatrix::from_columns(&cols);
        let basis: Vec<EtaPolynomial> = (1..=RANK as i64).map(|i| eta_monomial(i, Eis::omega_pow(i))).collect();
        let gram: Vec<Vec<Eis>> = basis.iter().map(|x| basis.iter().map(|y| pham_form_poly(x, y)).collect()).collect();
        let lattice = HermitianLattice::from_rows(&gram).expect("pham form is θO-valued Hermitian");
        Ok(PhamModule { reduction, lattice })
    }

    pub fn lattice(&self) -> &HermitianLattice {
        &self.lattice
    }

    /// `r`-coordinates of the image of `p` in `A_O`.
    pub fn reduce(&self, p: &EtaPolynomial) -> Coords {
        self.reduction.apply(p)
    }

    /// Lift of `r`-coordinates to `O[η]`: `Σ xᵢωⁱηⁱ`.
    pub fn lift(&self, x: &[Eis]) -> EtaPolynomial {
        let mut p = [Eis::ZERO; N];
        for (i, &c) in x.iter().enumerate() {
            p[i + 1] = c * Eis::omega_pow(i as i64 + 1);
        }
        p
    }

    /// `r`-coordinates of `ηᵏe`.
    pub fn eta_e(&self, k: i64) -> Coords {
        self.reduce(&eta_monomial(k, Eis::ONE))
    }

    pub fn pham_form(&self, x: &[Eis], y: &[Eis]) -> Eis {
        self.lattice.psi(x, y)
    }

    pub fn gram(&self) -> &OMatrix {
        self.lattice.gram()
    }

    /// Units `u₁…u₁₀` (with `u₁ = 1`) such that `(uᵢrᵢ)` has the standard `Λ¹⁰` Gram.
    pub fn unit_normalization(&self) -> Result<Vec<Eis>, PhamError> {
        let g = self.gram();
        let target = HermitianLattice::lambda(RANK);
        let mut units = vec![Eis::ONE];
        for i in 0..RANK - 1 {
            // uᵢ·conj(uᵢ₊₁)·gᵢ,ᵢ₊₁ = θ
            let next = Eis::THETA
                .exact_div(units[i] * g[(i, i + 1)])
                .ok()
                .filter(|u| u.is_unit())
                .ok_or(PhamError::NoUnitNormalization(i))?;
            units.push(next.conj());
        }
        for i in 0..RANK {
            for j in 0..RANK {
                if units[i] * g[(i, j)] * units[j].conj() != target.gram()[(i, j)] {
                    return Err(PhamError::NoUnitNormalization(i));
                }
            }
        }
        Ok(units)
    }

    pub fn gram_report(&self) -> Result<GramReport, PhamError> {
        Ok(GramReport {
            gram: self.gram().to_rows(),
            units: self.unit_normalization()?,
            signature: self.lattice.signature(),
            discriminant: self.lattice.discriminant(),
        })
    }

    /// Matrix of multiplication by `ηᵏ`.
    pub fn eta_matrix(&self, k: i64) -> OMatrix {
        let cols: Vec<Coords> =
            (0..RANK).map(|j| self.reduce(&eta_shift(&self.lift(&self.lattice.basis_coords(j)), k))).collect();
        OMatrix::from_columns(&cols)
    }

    /// `T̂_k(x) = x + ω⁻¹θ⁻¹ψ(x, ηᵏe)ηᵏe`.
    pub fn monodromy(&self, k: i64) -> OMatrix {
        let ek = self.eta_e(k);
        let w_inv = Eis::omega_pow(-1);
        let cols: Vec<Coords> = (0..RANK)
            .map(|j| {
                let b = self.lattice.basis_coords(j);
                let c = w_inv * self.pham_form(&b, &ek).exact_div(Eis::THETA).expect("ψ is θO-valued");
                b.iter().zip(&ek).map(|(&x, &y)| x + c * y).collect()
            })
            .collect();
        OMatrix::from_columns(&cols)
    }

    /// `T̂₀` from its action on `ηⁱe` (`τ = ω`), before reduction.
    pub fn monodromy_from_table(&self) -> OMatrix {
        let cols: Vec<Coords> = (0..RANK)
            .map(|j| {
                let p = self.lift(&self.lattice.basis_coords(j));
                let mut q = p;
                for (i, &c) in p.iter().enumerate() {
                    let delta = match i {
                        0 => -(Eis::ONE + Eis::OMEGA),
                        1 => Eis::ONE,
                        11 => Eis::OMEGA,
                        _ => Eis::ZERO,
                    };
                    q[0] += c * delta;
                }
                self.reduce(&q)
            })
            .collect();
        OMatrix::from_columns(&cols)
    }

    /// `ψ(x, ηⁱe)` vanishes for `i ≢ 5 mod 6` and `l₀` is isotropic.
    pub fn l0() -> EtaPolynomial {
        let mut p = [Eis::ZERO; N];
        p[0] = Eis::ONE;
        p[1] = Eis::ONE + Eis::OMEGA;
        p[2] = eis(0, 2);
        p[3] = Eis::THETA;
        p[4] = Eis::OMEGA - Eis::ONE;
        p
    }

    /// `Σ(−1)ⁱηⁱ` and `ω⁻¹(η²+η⁸) + (η³+η⁴+η⁹+η¹⁰) + ω(η⁵+η¹¹)`.
    pub fn eisenstein_polynomials() -> (EtaPolynomial, EtaPolynomial) {
        let u = std::array::from_fn(|i| if i % 2 == 0 { Eis::ONE } else { -Eis::ONE });
        let mut z = [Eis::ZERO; N];
        for i in [2, 8] {
            z[i] = Eis::omega_pow(-1);
        }
        for i in [3, 4, 9, 10] {
            z[i] = Eis::ONE;
        }
        for i in [5, 11] {
            z[i] = Eis::OMEGA;
        }
        (u, z)
    }

    /// Signature of the span of `η⁰e, …, ηᵏe`, with `null = rank − p − q`.
    pub fn eta_span_signature(&self, k: usize) -> (usize, Signature) {
        let vs: Vec<Coords> = (0..=k as i64).map(|i| self.eta_e(i)).collect();
        let rank = crate::lattice::o_rank(&vs);
        let g = self.lattice.gram_of(&vs);
        let sig = HermitianLattice::from_rows(&g.to_rows()).expect("restricted form").signature();
        (rank, Signature::new(sig.positive, sig.negative, rank - sig.positive - sig.negative))
    }

    pub fn verify(&self) -> Result<PhamReport, PhamError> {
        let id = OMatrix::identity(RANK);
        let ts: Vec<OMatrix> = (0..N as i64).map(|k| self.monodromy(k)).collect();
        let eta = self.eta_matrix(1);
        let eta_inv = self.eta_matrix(-1);
        let preserves_form = ts.iter().all(|t| crate::unitary::is_isometry(&self.lattice, t));
        let order_three = ts.iter().all(|t| t.order(6) == Some(3));
        let conjugation = (0..N as i64)
            .all(|k| ts[k as usize] == &(&self.eta_matrix(k) * &ts[0]) * &self.eta_matrix(-k));
        let table = self.monodromy_from_table() == ts[0];
        let braid = (0..N).all(|k| {
            let (a, b) = (&ts[k], &ts[(k + 1) % N]);
            &(a * b) * a == &(b * a) * b
        });
        let commute = (0..N).all(|k| {
            (0..N).all(|l| {
                let d = (k + N - l) % N;
                d == 1 || d == N - 1 || &ts[k] * &ts[l] == &ts[l] * &ts[k]
            })
        });
        let r_hat = (1..N).fold(id.clone(), |acc, k| &acc * &ts[k]);
        let r_star = (1..N).rev().fold(id.clone(), |acc, k| &acc * &ts[k]);
        let omega = OMatrix::scalar(RANK, Eis::OMEGA);
        let r_is_tau_eta = r_hat == &omega * &eta;
        let r_star_is_eta_inv = r_star == eta_inv;
        let product_is_omega = &r_hat * &r_star == omega;
        let eta_order = eta.order(24) == Some(12) && crate::unitary::is_isometry(&self.lattice, &eta);
        Ok(PhamReport {
            preserves_form,
            order_three,
            conjugation,
            table,
            braid,
            commute,
            r_is_tau_eta,
            r_star_is_eta_inv,
            product_is_omega,
            eta_order,
        })
    }

    pub fn eisenstein_image(&self) -> EisensteinImage {
        let (up, zp) = Self::eisenstein_polynomials();
        let (u, z) = (self.reduce(&up), self.reduce(&zp));
        let two_theta = Eis::from(2) * Eis::THETA;
        let equal = u.iter().zip(&z).all(|(&a, &b)| a == two_theta * b);
        EisensteinImage { norm_u: self.lattice.norm(&u), norm_z: self.lattice.norm(&z), u_is_two_theta_z: equal, u, z }
    }

    pub fn l0_check(&self) -> L0Report {
        let l0 = Self::l0();
        let products: Vec<Eis> = (0..N as i64).map(|i| pham_form_poly(&l0, &eta_monomial(i, Eis::ONE))).collect();
        let reduced = self.reduce(&l0);
        L0Report {
            isotropic: pham_form_poly(&l0, &l0).is_zero() && self.lattice.norm(&reduced) == 0,
            perpendicular: products.iter().enumerate().all(|(i, p)| i % 6 == 5 || p.is_zero()),
            products,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PhamReport {
    pub preserves_form: bool,
    pub order_three: bool,
    /// `T̂_k = ηᵏT̂₀η⁻ᵏ`.
    pub conjugation: bool,
    /// The reflection formula agrees with the action on `ηⁱe`.
    pub table: bool,
    pub braid: bool,
    pub commute: bool,
    pub r_is_tau_eta: bool,
    pub r_star_is_eta_inv: bool,
    pub product_is_omega: bool,
    pub eta_order: bool,
}

impl PhamReport {
    pub fn all(&self) -> bool {
        self.preserves_form
            && self.order_three
            && self.conjugation
            && self.table
            && self.braid
            && self.commute
            && self.r_is_tau_eta
            && self.r_star_is_eta_inv
            && self.product_is_omega
            && self.eta_order
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EisensteinImage {
    pub u: Coords,
    pub z: Coords,
    pub norm_u: i64,
    pub norm_z: i64,
    pub u_is_two_theta_z: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct L0Report {
    pub isotropic: bool,
    pub perpendicular: bool,
    /// `ψ(l₀, ηⁱe)` for `i = 0…11`.
    pub products: Vec<Eis>,
}

/// Elements of `Z[C₆ × C₁₂]`: coefficient of `τᵃηᵇ` at `12a + b`.
pub type GroupRingElement = Vec<i64>;

const TA: usize = 6;
const SIZE: usize = TA * N;

fn mono_index(a: i64, b: i64) -> usize {
    (a.rem_euclid(TA as i64) as usize) * N + b.rem_euclid(N as i64) as usize
}

pub fn group_ring_monomial(a: i64, b: i64) -> GroupRingElement {
    let mut v = vec![0; SIZE];
    v[mono_index(a, b)] = 1;
    v
}

pub fn group_ring_mul(x: &[i64], y: &[i64]) -> GroupRingElement {
    let mut out = vec![0; SIZE];
    for (i, &a) in x.iter().enumerate() {
        if a == 0 {
            continue;
        }
        for (j, &b) in y.iter().enumerate() {
            if b != 0 {
                let k = mono_index((i / N + j / N) as i64, (i % N + j % N) as i64);
                out[k] += a * b;
            }
        }
    }
    out
}

/// The involution `g ↦ g⁻¹`.
pub fn group_ring_conj(x: &[i64]) -> GroupRingElement {
    let mut out = vec![0; SIZE];
    for (i, &a) in x.iter().enumerate() {
        out[mono_index(-((i / N) as i64), -((i % N) as i64))] = a;
    }
    out
}

fn gr_add(x: &[i64], y: &[i64], s: i64) -> GroupRingElement {
    x.iter().zip(y).map(|(a, b)| a + s * b).collect()
}

/// `⟨a, b⟩_R = (1−τ)(1−η)·a·conj(b(τη − 1))`.
pub fn pairing_r(a: &[i64], b: &[i64]) -> GroupRingElement {
    let one = group_ring_monomial(0, 0);
    let f = group_ring_mul(&gr_add(&one, &group_ring_monomial(1, 0), -1), &gr_add(&one, &group_ring_monomial(0, 1), -1));
    let g = group_ring_mul(b, &gr_add(&group_ring_monomial(1, 1), &one, -1));
    group_ring_mul(&group_ring_mul(&f, a), &group_ring_conj(&g))
}

/// Image of `x ∈ Z[C₆×C₁₂]` in `O[C₁₂]` under `τ ↦ ω`.
pub fn specialize_tau(x: &[i64]) -> EtaPolynomial {
    let mut p = [Eis::ZERO; N];
    for (i, &c) in x.iter().enumerate() {
        p[i % N] += Eis::from(c) * Eis::omega_pow((i / N) as i64);
    }
    p
}

/// The integral Pham module `A` modulo torsion, as `Z⁵⁰`.
#[derive(Clone, Debug)]
pub struct IntegralPhamModule {
    /// Hermite basis of the relation lattice in `Z⁷²`.
    relations: Vec<Vec<i128>>,
    /// Rows span the annihilator of the relations; `x ↦ Yx` is `Z⁷² → A/torsion`.
    coordinates: Vec<Vec<i128>>,
    /// `section[j]` lifts the `j`-th basis vector of `A/torsion` to `Z⁷²`.
    section: Vec<Vec<i64>>,
    /// Nontrivial Smith invariants of `Z⁷²/relations` (the torsion of `A`).
    pub torsion: Vec<i128>,
}

impl IntegralPhamModule {
    pub fn new() -> Result<Self, PhamError> {
        let gens = [
            (0..TA as i64).map(|i| mono_index(i, 0)).collect::<Vec<_>>(),
            (0..N as i64).map(|i| mono_index(0, i)).collect(),
            (0..N as i64).map(|i| mono_index(i, i)).collect(),
        ];
        let mut rows = Vec::new();
        for a in 0..TA as i64 {
            for b in 0..N as i64 {
                for g in &gens {
                    let mut v = vec![0i128; SIZE];
                    for &k in g {
                        v[mono_index((k / N) as i64 + a, (k % N) as i64 + b)] += 1;
                    }
                    rows.push(v);
                }
            }
        }
        let relations = zlinalg::hnf(&rows);
        let torsion = zlinalg::smith_invariants(&relations).into_iter().filter(|&d| d != 1).collect();
        let coordinates = zlinalg::kernel(&relations, SIZE);
        let section = Self::right_inverse(&coordinates)?;
        Ok(IntegralPhamModule { relations, coordinates, section, torsion })
    }

    /// Rank of the free part.
    pub fn rank(&self) -> usize {
        self.coordinates.len()
    }

    pub fn relation_rank(&self) -> usize {
        self.relations.len()
    }

    pub fn relations(&self) -> &[Vec<i128>] {
        &self.relations
    }

    /// Coordinates in `A/torsion ≅ Z⁵⁰`.
    pub fn coordinates(&self, x: &[i64]) -> Vec<i128> {
        self.coordinates.iter().map(|y| y.iter().zip(x).map(|(&a, &b)| a * i128::from(b)).sum()).collect()
    }

    /// A lift to `Z⁷²` of the basis vector `j` of `A/torsion`.
    pub fn lift(&self, j: usize) -> &[i64] {
        &self.section[j]
    }

    /// `T̂` on monomials: `T̂(τᵃηⁱ) − τᵃηⁱ = τᵃ·(−(1+τ), 1, τ)` for `i = 0, 1, −1`.
    pub fn monodromy_on_monomials() -> Vec<GroupRingElement> {
        (0..SIZE)
            .map(|k| {
                let (a, i) = ((k / N) as i64, k % N);
                let mut v = group_ring_monomial(a, i as i64);
                match i {
                    0 => {
                        v[mono_index(a, 0)] -= 1;
                        v[mono_index(a + 1, 0)] -= 1;
                    }
                    1 => v[mono_index(a, 0)] += 1,
                    11 => v[mono_index(a + 1, 0)] += 1,
                    _ => {}
                }
                v
            })
            .collect()
    }

    fn apply_monomial_map(images: &[GroupRingElement], x: &[i64]) -> GroupRingElement {
        let mut out = vec![0i64; SIZE];
        for (k, &c) in x.iter().enumerate() {
            if c != 0 {
                for (o, &y) in out.iter_mut().zip(&images[k]) {
                    *o += c * y;
                }
            }
        }
        out
    }

    /// Whether the additive map given on monomials kills the relation lattice modulo saturation.
    pub fn preserves_relations(&self, images: &[GroupRingElement]) -> bool {
        self.relations.iter().all(|r| {
            let r: Vec<i64> = r.iter().map(|&c| c as i64).collect();
            self.coordinates(&Self::apply_monomial_map(images, &r)).iter().all(|&c| c == 0)
        })
    }

    /// Matrix on `A/torsion` of an additive map given on monomials.
    pub fn induced_matrix(&self, images: &[GroupRingElement]) -> Result<Vec<Vec<i128>>, PhamError> {
        if !self.preserves_relations(images) {
            return Err(PhamError::MonodromyNotDefined);
        }
        let n = self.rank();
        let mut m = vec![vec![0i128; n]; n];
        for (j, lift) in self.section.iter().enumerate() {
            for (i, c) in self.coordinates(&Self::apply_monomial_map(images, lift)).into_iter().enumerate() {
                m[i][j] = c;
            }
        }
        Ok(m)
    }

    pub fn monodromy_matrix(&self) -> Result<Vec<Vec<i128>>, PhamError> {
        self.induced_matrix(&Self::monodromy_on_monomials())
    }

    /// Multiplication by `τᵃηᵇ`.
    pub fn multiplication_matrix(&self, a: i64, b: i64) -> Result<Vec<Vec<i128>>, PhamError> {
        let m = group_ring_monomial(a, b);
        let images: Vec<_> = (0..SIZE).map(|k| group_ring_mul(&m, &group_ring_monomial((k / N) as i64, (k % N) as i64))).collect();
        self.induced_matrix(&images)
    }

    /// Whether `T̂` preserves the `Z[C₆]`-valued intersection pairing (the `η⁰` part of `⟨,⟩_R`) on monomials.
    pub fn monodromy_preserves_pairing() -> bool {
        let t = Self::monodromy_on_monomials();
        let eta0 = |v: &GroupRingElement| (0..TA).map(|a| v[a * N]).collect::<Vec<_>>();
        (0..SIZE).all(|x| {
            let mx = group_ring_monomial((x / N) as i64, (x % N) as i64);
            (0..SIZE).all(|y| {
                let my = group_ring_monomial((y / N) as i64, (y % N) as i64);
                eta0(&pairing_r(&t[x], &t[y])) == eta0(&pairing_r(&mx, &my))
            })
        })
    }

    pub fn monodromy_report(&self) -> Result<IntegralMonodromyReport, PhamError> {
        let t = self.monodromy_matrix()?;
        let n = t.len();
        let id = zlinalg::identity(n);
        let t3 = int_matrix_pow(&t, 3);
        let t6 = int_matrix_mul(&t3, &t3);
        let defect: Vec<Vec<i128>> = t6.iter().zip(&id).map(|(r, s)| r.iter().zip(s).map(|(a, b)| a - b).collect()).collect();
        let tau = self.multiplication_matrix(1, 0)?;
        let one_plus_tau: Vec<Vec<i128>> = tau.iter().zip(&id).map(|(r, s)| r.iter().zip(s).map(|(a, b)| a + b).collect()).collect();
        let off_hyperelliptic = int_matrix_mul(&defect, &one_plus_tau).iter().all(|r| r.iter().all(|&x| x == 0));
        Ok(IntegralMonodromyReport {
            rank: n,
            torsion: self.torsion.clone(),
            preserves_pairing: Self::monodromy_preserves_pairing(),
            commutes_with_tau: int_matrix_mul(&t, &tau) == int_matrix_mul(&tau, &t),
            cube_is_identity: t3 == id,
            sixth_power_is_identity: t6 == id,
            sixth_power_defect_rank: zlinalg::rank(&defect),
            sixth_power_defect_square_zero: int_matrix_mul(&defect, &defect).iter().all(|r| r.iter().all(|&x| x == 0)),
            order_six_off_hyperelliptic: off_hyperelliptic,
            order: int_matrix_order(&t, 12),
        })
    }

    /// `Yᵀ` has a unimodular row space, so a Hermite reduction of `[Yᵀ | I]` yields `S` with `YS = I`.
    fn right_inverse(y: &[Vec<i128>]) -> Result<Vec<Vec<i64>>, PhamError> {
        let n = y.len();
        let aug: Vec<Vec<i128>> = (0..SIZE)
            .map(|k| {
                let mut row: Vec<i128> = y.iter().map(|v| v[k]).collect();
                row.extend((0..SIZE).map(|l| i128::from(l == k)));
                row
            })
            .collect();
        let h = zlinalg::hnf(&aug);
        let mut out = Vec::with_capacity(n);
        for (j, row) in h.iter().take(n).enumerate() {
            if (0..n).any(|i| row[i] != i128::from(i == j)) {
                return Err(PhamError::NonIntegral);
            }
            out.push(row[n..].iter().map(|&x| i64::try_from(x).map_err(|_| PhamError::NonIntegral)).collect::<Result<_, _>>()?);
        }
        Ok(out)
    }
}

/// Behaviour of the integral monodromy on `A/torsion`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntegralMonodromyReport {
    pub rank: usize,
    pub torsion: Vec<i128>,
    pub preserves_pairing: bool,
    pub commutes_with_tau: bool,
    pub cube_is_identity: bool,
    pub sixth_power_is_identity: bool,
    /// Rank of `T̂⁶ − 1`.
    pub sixth_power_defect_rank: usize,
    pub sixth_power_defect_square_zero: bool,
    /// `(T̂⁶ − 1)(1 + τ) = 0`: order 6 away from the `τ = −1` eigenspace.
    pub order_six_off_hyperelliptic: bool,
    pub order: Option<u32>,
}

pub fn int_matrix_mul(a: &[Vec<i128>], b: &[Vec<i128>]) -> Vec<Vec<i128>> {
    let n = a.len();
    let m = b[0].len();
    (0..n).map(|i| (0..m).map(|j| (0..b.len()).map(|k| a[i][k] * b[k][j]).sum()).collect()).collect()
}

pub fn int_matrix_pow(a: &[Vec<i128>], k: u32) -> Vec<Vec<i128>> {
    (0..k).fold(zlinalg::identity(a.len()), |acc, _| int_matrix_mul(&acc, a))
}

pub fn int_matrix_order(a: &[Vec<i128>], limit: u32) -> Option<u32> {
    let id = zlinalg::identity(a.len());
    let mut acc = a.to_vec();
    for k in 1..=limit {
        if acc == id {
            return Some(k);
        }
        acc = int_matrix_mul(&acc, a);
    }
    None
}
