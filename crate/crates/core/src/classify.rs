//! Relative position of 3-vectors and 6-vectors: rank-2 types, the
//! decompositions of a 6-vector, mod-`θ` flags, isotropic line types and the
//! sublattices spanned by `z_o` and 3-vectors of small `d`-invariant.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::lattice::{frame, o_echelon, o_rank, span_key, BigLambda, Coords, HermitianLattice, LatticeError, Signature};
use crate::ring::{EisensteinInteger as Eis, F3};
use crate::shortvec::{vectors_of_norm, ShortVectorError};
use crate::unitary::{induced_symplectic_form, reduce_vector, symplectic_pairing};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("expected a {expected}-vector, got norm {got}")]
    WrongNorm { expected: i64, got: i64 },
    #[error("the span is not primitive")]
    Imprimitive,
    #[error("the span is not positive definite")]
    NotPositiveDefinite,
    #[error("z_o is not perpendicular to e")]
    NotPerpendicularToE,
    #[error("component norms ({0}, {1}) are not a valid split of 6")]
    BadSplit(i64, i64),
    #[error("3-vector {0} has d-invariant {1}, expected 6 or 9")]
    StrayInvariant(usize, String),
    #[error("no model matches the span")]
    NoModel,
    #[error("reduction of L_z is degenerate")]
    DegeneratePlane,
    #[error("vector has length {got}, lattice rank is {rank}")]
    RankMismatch { got: usize, rank: usize },
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    ShortVector(#[from] ShortVectorError),
}

/// Isomorphism type of the rank-2 lattice spanned by a 6-vector and a 3-vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Rank2Type {
    D6,
    D9,
    D15,
    D18,
}

impl Rank2Type {
    pub fn discriminant(self) -> i64 {
        match self {
            Rank2Type::D6 => 6,
            Rank2Type::D9 => 9,
            Rank2Type::D15 => 15,
            Rank2Type::D18 => 18,
        }
    }

    pub fn from_discriminant(d: i64) -> Option<Self> {
        match d {
            6 => Some(Rank2Type::D6),
            9 => Some(Rank2Type::D9),
            15 => Some(Rank2Type::D15),
            18 => Some(Rank2Type::D18),
            _ => None,
        }
    }
}

impl fmt::Display for Rank2Type {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "δ{}", self.discriminant())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RelativePosition {
    A,
    B,
    C,
    D,
    E,
}

impl RelativePosition {
    pub const ALL: [RelativePosition; 5] =
        [RelativePosition::A, RelativePosition::B, RelativePosition::C, RelativePosition::D, RelativePosition::E];

    pub fn letter(self) -> char {
        match self {
            RelativePosition::A => 'a',
            RelativePosition::B => 'b',
            RelativePosition::C => 'c',
            RelativePosition::D => 'd',
            RelativePosition::E => 'e',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum IsotropicType {
    Theta,
    Zero,
}

impl IsotropicType {
    /// The standard `z_o` of this type in the frame `Λ′⊥Λ″⊥H_O`.
    pub fn standard_zo(self) -> Coords {
        let mut z = vec![Eis::ZERO; 10];
        z[frame::r1(1)] = Eis::ONE;
        match self {
            IsotropicType::Theta => z[frame::r1(2)] = Eis::ONE,
            IsotropicType::Zero => z[frame::r2(1)] = Eis::ONE,
        }
        z
    }
}

fn check_norm(l: &HermitianLattice, x: &[Eis], n: i64) -> Result<(), ClassifyError> {
    if x.len() != l.rank() {
        return Err(ClassifyError::RankMismatch { got: x.len(), rank: l.rank() });
    }
    let got = l.norm(x);
    if got != n {
        return Err(ClassifyError::WrongNorm { expected: n, got });
    }
    Ok(())
}

/// Type of `span{z, r}` for a 6-vector `z` and 3-vector `r`; its discriminant is `18 − |ψ(z, r)|²`.
pub fn rank2_type(l: &HermitianLattice, z: &[Eis], r: &[Eis]) -> Result<Rank2Type, ClassifyError> {
    check_norm(l, z, 6)?;
    check_norm(l, r, 3)?;
    let d = 18 - l.psi(z, r).norm();
    if d <= 0 {
        return Err(ClassifyError::NotPositiveDefinite);
    }
    if !l.is_primitive(&[z.to_vec(), r.to_vec()]) {
        return Err(ClassifyError::Imprimitive);
    }
    Rank2Type::from_discriminant(d).ok_or(ClassifyError::NotPositiveDefinite)
}

/// Relative position of a 3-vector `r` and a 6-vector `z`.
pub fn relative_position(l: &HermitianLattice, r: &[Eis], z: &[Eis]) -> Result<RelativePosition, ClassifyError> {
    check_norm(l, r, 3)?;
    check_norm(l, z, 6)?;
    Ok(match l.psi(r, z).norm() {
        12 => RelativePosition::B,
        3 => RelativePosition::C,
        9 => RelativePosition::D,
        0 if l.is_primitive(&[r.to_vec(), z.to_vec()]) => RelativePosition::E,
        0 => RelativePosition::A,
        _ => return Err(ClassifyError::NotPositiveDefinite),
    })
}

/// 3-vectors of `l`, cached by the caller where performance matters.
pub fn three_vectors(l: &HermitianLattice) -> Result<Vec<Coords>, ClassifyError> {
    Ok(vectors_of_norm(l, 3)?)
}

/// The decompositions `z = r₁ + r₂` into 3-vectors with `ψ(r₁, r₂) = θ`, and `L_z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaDecompositions {
    pub pairs: Vec<(Coords, Coords)>,
    /// `O`-basis of the common span `L_z`.
    pub span: Vec<Coords>,
    /// Whether every pair spans `L_z`.
    pub common_span: bool,
}

pub fn theta_decompositions(
    l: &HermitianLattice,
    roots: &[Coords],
    z: &[Eis],
) -> Result<ThetaDecompositions, ClassifyError> {
    check_norm(l, z, 6)?;
    // ψ(r, z − r) = θ  ⇔  ψ(r, z) = 3 + θ, and then z − r is a 3-vector
    let target = Eis::from(3) + Eis::THETA;
    let pairs: Vec<(Coords, Coords)> = roots
        .iter()
        .filter(|r| l.psi(r, z) == target)
        .map(|r| (r.clone(), z.iter().zip(r).map(|(&a, &b)| a - b).collect()))
        .collect();
    let keys: BTreeSet<_> = pairs.iter().map(|(a, b)| span_key(&[a.clone(), b.clone()])).collect();
    let span = pairs.first().map(|(a, b)| o_echelon(&[a.clone(), b.clone()])).unwrap_or_default();
    Ok(ThetaDecompositions { pairs, span, common_span: keys.len() == 1 })
}

/// Unordered decompositions `z = r + (z − r)` into perpendicular 3-vectors; `r` is the
/// lexicographically smaller member, and the list is sorted by `r`.
pub fn perpendicular_decompositions(
    l: &HermitianLattice,
    roots: &[Coords],
    z: &[Eis],
) -> Result<Vec<(Coords, Coords)>, ClassifyError> {
    check_norm(l, z, 6)?;
    let three = Eis::from(3);
    let mut out: Vec<(Coords, Coords)> = roots
        .iter()
        .filter(|r| l.psi(r, z) == three)
        .filter_map(|r| {
            let s: Coords = z.iter().zip(r).map(|(&a, &b)| a - b).collect();
            (*r < s).then(|| (r.clone(), s))
        })
        .collect();
    out.sort();
    Ok(out)
}

/// Reduced row echelon form over `F₃`; nonzero rows only.
pub fn f3_rref(rows: &[Vec<F3>]) -> Vec<Vec<F3>> {
    let Some(first) = rows.first() else { return Vec::new() };
    let n = first.len();
    let mut a = rows.to_vec();
    let mut rank = 0;
    for col in 0..n {
        let Some(p) = (rank..a.len()).find(|&r| !a[r][col].is_zero()) else { continue };
        a.swap(rank, p);
        let inv = a[rank][col].inv().expect("nonzero");
        a[rank] = a[rank].iter().map(|&x| x * inv).collect();
        let prow = a[rank].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let f = row[col];
                for (x, &p) in row.iter_mut().zip(&prow) {
                    *x = *x - f * p;
                }
            }
        }
        rank += 1;
    }
    a.truncate(rank);
    a
}

/// A nonzero vector `v` in a nondegenerate plane `P` of `L/θL`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Flag {
    pub v: Vec<F3>,
    /// `P` in reduced row echelon form.
    pub plane: Vec<Vec<F3>>,
}

/// The reduction of `(z, L_z)`.
pub fn flag_of(l: &HermitianLattice, roots: &[Coords], z: &[Eis]) -> Result<Flag, ClassifyError> {
    let dec = theta_decompositions(l, roots, z)?;
    let plane = f3_rref(&dec.span.iter().map(|x| reduce_vector(x)).collect::<Vec<_>>());
    let form = induced_symplectic_form(l);
    if plane.len() != 2 || symplectic_pairing(&form, &plane[0], &plane[1]).is_zero() {
        return Err(ClassifyError::DegeneratePlane);
    }
    Ok(Flag { v: reduce_vector(z), plane })
}

/// All nonzero vectors of `F₃ⁿ`.
pub fn f3_nonzero_vectors(n: usize) -> Vec<Vec<F3>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out.into_iter().flat_map(|v| F3::all().into_iter().map(move |c| [v.clone(), vec![c]].concat())).collect();
    }
    out.retain(|v| v.iter().any(|c| !c.is_zero()));
    out
}

/// Lines of `F₃ⁿ`, each represented by the vector whose first nonzero entry is 1.
pub fn f3_lines(n: usize) -> Vec<Vec<F3>> {
    f3_nonzero_vectors(n).into_iter().filter(|v| v.iter().find(|c| !c.is_zero()) == Some(&F3::ONE)).collect()
}

/// Position of the line `⟨w⟩` relative to the flag `(⟨v⟩, P)`, read off in `F₃ⁿ`.
pub fn flag_line_position(form: &[Vec<F3>], flag: &Flag, w: &[F3]) -> RelativePosition {
    let pair = |x: &[F3], y: &[F3]| symplectic_pairing(form, x, y);
    let same_line = f3_rref(&[flag.v.clone(), w.to_vec()]).len() == 1;
    let in_plane = f3_rref(&[flag.plane.clone(), vec![w.to_vec()]].concat()).len() == 2;
    let perp_v = pair(w, &flag.v).is_zero();
    let perp_p = flag.plane.iter().all(|p| pair(w, p).is_zero());
    if same_line {
        RelativePosition::A
    } else if in_plane {
        RelativePosition::B
    } else if !perp_v {
        RelativePosition::C
    } else if !perp_p {
        RelativePosition::D
    } else {
        RelativePosition::E
    }
}

/// Type of the isotropic line `Oe` relative to `z_o`, from the split of `ψ(z_o, z_o)` over `Λ′⊥Λ″`.
pub fn isotropic_line_type(bl: &BigLambda, zo: &[Eis]) -> Result<IsotropicType, ClassifyError> {
    let l = &bl.frame;
    check_norm(l, zo, 6)?;
    if !l.psi(zo, &bl.e()).is_zero() {
        return Err(ClassifyError::NotPerpendicularToE);
    }
    let part = |range: std::ops::Range<usize>| {
        let mut x = vec![Eis::ZERO; 10];
        x[range.clone()].copy_from_slice(&zo[range]);
        l.norm(&x)
    };
    match (part(0..4), part(4..8)) {
        (6, 0) | (0, 6) => Ok(IsotropicType::Theta),
        (3, 3) => Ok(IsotropicType::Zero),
        (a, b) => Err(ClassifyError::BadSplit(a, b)),
    }
}

/// `d`-invariant of a 3-vector relative to `z_o`, if the span is primitive and definite.
pub fn d_invariant(l: &HermitianLattice, zo: &[Eis], r: &[Eis]) -> Result<Rank2Type, ClassifyError> {
    rank2_type(l, zo, r)
}

/// `6x − ψ(x, z)z`, a multiple of the projection of `x` to `z⊥` (for `ψ(z, z) = 6`).
pub fn mirror_trace(l: &HermitianLattice, x: &[Eis], z: &[Eis]) -> Coords {
    let c = l.psi(x, z);
    x.iter().zip(z).map(|(&a, &b)| Eis::from(6) * a - c * b).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DclassProfile {
    pub isotropic_type: IsotropicType,
    /// Number of 3-vectors of `Λ′⊥Λ″` examined.
    pub pool: usize,
    pub count6: usize,
    pub count9: usize,
    /// Rank of `I(6)/I`, spanned by the traces on `z_o⊥` of the 3-vectors of `d`-invariant 6.
    pub rank6: usize,
    /// Rank of `I(9)/I`.
    pub rank9: usize,
    /// Distinct rank-one sublattices spanned by traces of 3-vectors of `d`-invariant 9.
    pub nine_lines: usize,
    pub perpendicular: bool,
}

/// Profile of `I(6)/I` and `I(9)/I` for `I = Oe`, computed on `I⊥/I ≅ Λ′⊥Λ″`.
pub fn dclass_profile(bl: &BigLambda, t: IsotropicType) -> Result<DclassProfile, ClassifyError> {
    let l = &bl.frame;
    let zo = t.standard_zo();
    let l4 = HermitianLattice::lambda(4);
    let mut pool = Vec::new();
    for r in vectors_of_norm(&l4, 3)? {
        for off in [0, 4] {
            let mut x = vec![Eis::ZERO; 10];
            x[off..off + 4].copy_from_slice(&r);
            pool.push(x);
        }
    }
    let (mut six, mut nine) = (Vec::new(), Vec::new());
    for r in &pool {
        match d_invariant(l, &zo, r) {
            Ok(Rank2Type::D6) => six.push(mirror_trace(l, r, &zo)),
            Ok(Rank2Type::D9) => nine.push(mirror_trace(l, r, &zo)),
            _ => {}
        }
    }
    let lines: BTreeSet<_> = nine.iter().map(|x| span_key(std::slice::from_ref(x))).collect();
    let perpendicular = six.iter().all(|x| nine.iter().all(|y| l.psi(x, y).is_zero()));
    Ok(DclassProfile {
        isotropic_type: t,
        pool: pool.len(),
        count6: six.len(),
        count9: nine.len(),
        rank6: o_rank(&six),
        rank9: o_rank(&nine),
        nine_lines: lines.len(),
        perpendicular,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum SpanTag {
    #[serde(rename = "(6)")]
    Six,
    #[serde(rename = "(9)")]
    Nine,
    #[serde(rename = "(6,9)")]
    SixNine,
    #[serde(rename = "(9,9)")]
    NineNine,
    #[serde(rename = "(6,9,9)")]
    SixNineNine,
}

impl SpanTag {
    pub const ALL: [SpanTag; 5] = [SpanTag::Six, SpanTag::Nine, SpanTag::SixNine, SpanTag::NineNine, SpanTag::SixNineNine];

    pub fn label(self) -> &'static str {
        match self {
            SpanTag::Six => "(6)",
            SpanTag::Nine => "(9)",
            SpanTag::SixNine => "(6,9)",
            SpanTag::NineNine => "(9,9)",
            SpanTag::SixNineNine => "(6,9,9)",
        }
    }

    /// Model `(L, z)`: Gram of a basis of 3-vectors and the coefficients of `z` in it.
    pub fn model(self) -> (HermitianLattice, Vec<Eis>) {
        let one = Eis::ONE;
        let o = Eis::ZERO;
        match self {
            SpanTag::Six => (HermitianLattice::lambda(2), vec![one, one]),
            SpanTag::Nine => {
                let l1 = HermitianLattice::lambda(1);
                (HermitianLattice::orthogonal_sum(&[&l1, &l1]), vec![one, one])
            }
            SpanTag::SixNine => (HermitianLattice::lambda(3), vec![one, one, o]),
            SpanTag::NineNine => (HermitianLattice::lambda(3), vec![one, o, one]),
            SpanTag::SixNineNine => (HermitianLattice::lambda(4), vec![one, one, o, o]),
        }
    }

    /// Invariants of the complement claimed for the model inside `Λ`.
    pub fn expected_complement(self) -> ComplementInvariants {
        let inv = |rank, p, discriminant| ComplementInvariants { rank, signature: Signature::new(p, 1, 0), discriminant };
        match self {
            SpanTag::Six => inv(8, 7, HermitianLattice::lambda(8).discriminant()),
            SpanTag::Nine => inv(8, 7, HermitianLattice::lambda(7).discriminant() * HermitianLattice::lambda(1).discriminant()),
            SpanTag::SixNine | SpanTag::NineNine => inv(7, 6, HermitianLattice::lambda(7).discriminant()),
            SpanTag::SixNineNine => inv(6, 5, HermitianLattice::lambda(6).discriminant()),
        }
    }
}

impl fmt::Display for SpanTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ComplementInvariants {
    pub rank: usize,
    pub signature: Signature,
    pub discriminant: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpanClassification {
    pub tag: SpanTag,
    /// A basis of `L` (ambient coordinates) realising the model Gram and `z_o`.
    pub model_basis: Vec<Coords>,
    pub d_invariants: Vec<i64>,
    pub complement: ComplementInvariants,
    pub expected: ComplementInvariants,
}

impl SpanClassification {
    pub fn complement_matches(&self) -> bool {
        self.complement == self.expected
    }
}

/// Classifies `(span{z_o, rs}, z_o)` against the five models.
pub fn span_type_with_zo(l: &HermitianLattice, zo: &[Eis], rs: &[Coords]) -> Result<SpanClassification, ClassifyError> {
    check_norm(l, zo, 6)?;
    let mut d_invariants = Vec::new();
    for (i, r) in rs.iter().enumerate() {
        match d_invariant(l, zo, r) {
            Ok(t @ (Rank2Type::D6 | Rank2Type::D9)) => d_invariants.push(t.discriminant()),
            Ok(t) => return Err(ClassifyError::StrayInvariant(i, t.to_string())),
            Err(ClassifyError::Imprimitive) => return Err(ClassifyError::StrayInvariant(i, "undefined".into())),
            Err(e) => return Err(e),
        }
    }
    let mut gens = vec![zo.to_vec()];
    gens.extend(rs.iter().cloned());
    let basis = o_echelon(&gens);
    if !l.is_primitive(&basis) {
        return Err(ClassifyError::Imprimitive);
    }
    let sub = l.sublattice(&basis);
    if !sub.is_positive_definite() {
        return Err(ClassifyError::NotPositiveDefinite);
    }
    // 3-vectors of L in ambient coordinates
    let roots: Vec<Coords> = vectors_of_norm(&sub, 3)?
        .iter()
        .map(|c| combine(&basis, c))
        .collect();
    let disc = sub.discriminant();
    let mut found = None;
    for tag in SpanTag::ALL {
        let (model, zc) = tag.model();
        if model.rank() != basis.len() || model.discriminant() != disc {
            continue;
        }
        let mut chosen = Vec::new();
        if search_model(l, &model, &zc, zo, &roots, &mut chosen) {
            found = Some((tag, chosen));
            break;
        }
    }
    let (tag, model_basis) = found.ok_or(ClassifyError::NoModel)?;
    let comp_basis = l.orthogonal_complement(&basis)?;
    let comp = l.sublattice(&comp_basis);
    let complement =
        ComplementInvariants { rank: comp.rank(), signature: comp.signature(), discriminant: comp.discriminant() };
    Ok(SpanClassification { tag, model_basis, d_invariants, complement, expected: tag.expected_complement() })
}

fn combine(basis: &[Coords], c: &[Eis]) -> Coords {
    let n = basis[0].len();
    (0..n).map(|k| basis.iter().zip(c).map(|(b, &ci)| ci * b[k]).sum()).collect()
}

/// Backtracking search for 3-vectors `x₁…x_k` with model Gram and `z_o = Σ zcᵢxᵢ`.
/// Equal discriminants make any such tuple a basis.
fn search_model(
    l: &HermitianLattice,
    model: &HermitianLattice,
    zc: &[Eis],
    zo: &[Eis],
    roots: &[Coords],
    chosen: &mut Vec<Coords>,
) -> bool {
    let k = chosen.len();
    let last_z = zc.iter().rposition(|c| !c.is_zero()).unwrap_or(0);
    if k == model.rank() {
        return true;
    }
    for x in roots {
        if (0..k).any(|i| l.psi(&chosen[i], x) != model.gram()[(i, k)]) {
            continue;
        }
        chosen.push(x.clone());
        let z_ok = k != last_z || combine(chosen, &zc[..=k]) == zo;
        if z_ok && search_model(l, model, zc, zo, roots, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f3_geometry() {
        assert_eq!(f3_nonzero_vectors(4).len(), 80);
        assert_eq!(f3_lines(4).len(), 40);
        let r = f3_rref(&[vec![F3::new(2), F3::new(1)], vec![F3::new(1), F3::new(2)]]);
        assert_eq!(r, vec![vec![F3::ONE, F3::new(2)]]);
    }

    #[test]
    fn models_have_expected_grams() {
        for tag in SpanTag::ALL {
            let (m, zc) = tag.model();
            assert_eq!(m.norm(&zc), 6, "{tag}");
        }
    }
}
