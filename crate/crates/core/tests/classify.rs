use eislat::classify::*;
use eislat::lattice::{frame, span_key, BigLambda, Coords, HermitianLattice};
use eislat::ring::{eis, EisensteinInteger as Eis};
use eislat::shortvec::vectors_of_norm;

const W: Eis = Eis::OMEGA;
const TH: Eis = Eis::THETA;

fn lam4(c: [Eis; 4]) -> Coords {
    c.to_vec()
}

fn z12() -> Coords {
    lam4([Eis::ONE, Eis::ONE, Eis::ZERO, Eis::ZERO])
}

fn e(i: usize) -> Coords {
    let mut v = vec![Eis::ZERO; 4];
    v[i - 1] = Eis::ONE;
    v
}

#[test]
fn rank2_types() {
    let l = HermitianLattice::lambda(4);
    let z = z12();
    assert_eq!(rank2_type(&l, &z, &e(1)).unwrap(), Rank2Type::D6);
    assert_eq!(rank2_type(&l, &z, &e(3)).unwrap(), Rank2Type::D15);
    assert_eq!(rank2_type(&l, &z, &lam4([Eis::ZERO, W, Eis::ONE, Eis::ZERO])).unwrap(), Rank2Type::D9);
    assert_eq!(rank2_type(&l, &z, &e(4)).unwrap(), Rank2Type::D18);
    let a = lam4([W * W, Eis::ONE, Eis::ZERO, Eis::ZERO]);
    assert_eq!(rank2_type(&l, &z, &a), Err(ClassifyError::Imprimitive));
    assert!(matches!(rank2_type(&l, &e(1), &e(2)), Err(ClassifyError::WrongNorm { expected: 6, got: 3 })));
}

#[test]
fn relative_positions_of_examples() {
    let l = HermitianLattice::lambda(4);
    let z = z12();
    let cases = [
        (lam4([W * W, Eis::ONE, Eis::ZERO, Eis::ZERO]), RelativePosition::A, Eis::ZERO),
        (e(1), RelativePosition::B, eis(3, 0) + TH),
        (e(3), RelativePosition::C, -TH),
        (lam4([Eis::ZERO, W, Eis::ONE, Eis::ZERO]), RelativePosition::D, eis(3, 0)),
        (e(4), RelativePosition::E, Eis::ZERO),
    ];
    for (r, pos, ip) in cases {
        assert_eq!(l.psi(&r, &z), ip);
        assert_eq!(relative_position(&l, &r, &z).unwrap(), pos);
    }
}

#[test]
fn theta_decompositions_of_standard_six_vector() {
    let l = HermitianLattice::lambda(4);
    let roots = vectors_of_norm(&l, 3).unwrap();
    let (r, rp) = (e(1), e(2));
    let d = theta_decompositions(&l, &roots, &z12()).unwrap();
    assert_eq!(d.pairs.len(), 3);
    assert!(d.common_span);
    let one_minus_w = Eis::ONE - W;
    let expected = [
        (r.clone(), rp.clone()),
        (rp.iter().map(|&c| W * c).collect::<Coords>(), r.iter().zip(&rp).map(|(&a, &b)| a + one_minus_w * b).collect()),
        (r.iter().map(|&c| one_minus_w * c).collect::<Coords>(), r.iter().zip(&rp).map(|(&a, &b)| W * a + b).collect()),
    ];
    // listed as unordered pairs; the ordered pair has ψ(r₁, r₂) = θ
    for (a, b) in &expected {
        assert!(d.pairs.contains(&(a.clone(), b.clone())) || d.pairs.contains(&(b.clone(), a.clone())), "{a:?} {b:?}");
    }
    for (a, b) in &d.pairs {
        assert_eq!(l.psi(a, b), TH);
    }
    assert_eq!(span_key(&d.span), span_key(&[r, rp]));
}

#[test]
fn perpendicular_decompositions_of_standard_six_vector() {
    let l = HermitianLattice::lambda(4);
    let roots = vectors_of_norm(&l, 3).unwrap();
    let z = z12();
    let d = perpendicular_decompositions(&l, &roots, &z).unwrap();
    assert_eq!(d.len(), 4);
    let wi = Eis::omega_pow(-1);
    let w2i = Eis::omega_pow(-2);
    let o = Eis::ZERO;
    let one = Eis::ONE;
    let expected: Vec<Coords> = vec![
        lam4([o, W, one, o]),
        lam4([o, W, one, wi]),
        lam4([o, W, one, w2i]),
        lam4([W, eis(2, 0), -TH, -one]),
    ];
    let got: Vec<Coords> = d.iter().map(|(r, _)| r.clone()).collect();
    let mut exp_sorted = expected.clone();
    exp_sorted.sort();
    assert_eq!(got, exp_sorted);
    for (r, s) in &d {
        assert!(l.psi(r, s).is_zero());
    }
    let mut span = vec![z.clone()];
    span.extend(expected);
    assert_eq!(eislat::lattice::o_rank(&span), 3);
}

#[test]
fn flags_are_nondegenerate() {
    let l = HermitianLattice::lambda(4);
    let roots = vectors_of_norm(&l, 3).unwrap();
    let f = flag_of(&l, &roots, &z12()).unwrap();
    assert_eq!(f.plane.len(), 2);
    let wz: Coords = z12().iter().map(|&c| W * W * c).collect();
    assert_eq!(flag_of(&l, &roots, &wz).unwrap(), f);
    let mz: Coords = z12().iter().map(|&c| -c).collect();
    assert_ne!(flag_of(&l, &roots, &mz).unwrap(), f);
}

#[test]
fn isotropic_types() {
    let bl = BigLambda::new().unwrap();
    assert_eq!(isotropic_line_type(&bl, &IsotropicType::Theta.standard_zo()).unwrap(), IsotropicType::Theta);
    assert_eq!(isotropic_line_type(&bl, &IsotropicType::Zero.standard_zo()).unwrap(), IsotropicType::Zero);
    let mut z = vec![Eis::ZERO; 10];
    z[frame::r2(1)] = Eis::ONE;
    z[frame::r2(2)] = Eis::ONE;
    assert_eq!(isotropic_line_type(&bl, &z).unwrap(), IsotropicType::Theta);
    z[frame::E] = TH;
    assert_eq!(isotropic_line_type(&bl, &z).unwrap(), IsotropicType::Theta);
    z[frame::F] = Eis::ONE;
    assert!(isotropic_line_type(&bl, &z).is_err());
}

#[test]
fn dclass_profiles() {
    let bl = BigLambda::new().unwrap();
    let t = dclass_profile(&bl, IsotropicType::Theta).unwrap();
    assert_eq!(t.pool, 480);
    assert_eq!((t.rank6, t.rank9, t.nine_lines), (1, 2, 4));
    assert!(t.perpendicular);
    let z = dclass_profile(&bl, IsotropicType::Zero).unwrap();
    assert_eq!(z.pool, 480);
    assert_eq!((z.rank6, z.rank9, z.nine_lines), (0, 1, 1));
}

fn frame_vec(terms: &[(usize, Eis)]) -> Coords {
    let mut v = vec![Eis::ZERO; 10];
    for &(i, c) in terms {
        v[i] += c;
    }
    v
}

#[test]
fn span_types() {
    let bl = BigLambda::new().unwrap();
    let l = &bl.frame;
    let zo = IsotropicType::Theta.standard_zo();
    let r1 = frame_vec(&[(frame::r1(1), Eis::ONE)]);
    let d9a = frame_vec(&[(frame::r1(2), W), (frame::r1(3), Eis::ONE)]);
    let d9b = frame_vec(&[(frame::r1(2), W), (frame::r1(3), Eis::ONE), (frame::r1(4), Eis::omega_pow(-1))]);

    let six = span_type_with_zo(l, &zo, std::slice::from_ref(&r1)).unwrap();
    assert_eq!(six.tag, SpanTag::Six);
    assert!(six.complement_matches(), "{six:?}");

    let nine = span_type_with_zo(l, &zo, std::slice::from_ref(&d9a)).unwrap();
    assert_eq!(nine.tag, SpanTag::Nine);
    assert_eq!(nine.complement.discriminant, -243);
    assert!(nine.complement_matches(), "{nine:?}");

    let sn = span_type_with_zo(l, &zo, &[r1.clone(), d9a.clone()]).unwrap();
    assert_eq!(sn.tag, SpanTag::SixNine);
    assert!(sn.complement_matches(), "{sn:?}");

    let full = span_type_with_zo(l, &zo, &[r1.clone(), d9a.clone(), d9b]).unwrap();
    assert_eq!(full.tag, SpanTag::SixNineNine);
    assert_eq!(full.complement.rank, 6);
    assert_eq!(full.complement.discriminant, -27);
    assert!(full.complement_matches());

    let stray = frame_vec(&[(frame::r1(4), Eis::ONE)]);
    assert!(matches!(span_type_with_zo(l, &zo, &[stray]), Err(ClassifyError::StrayInvariant(0, _))));
}
