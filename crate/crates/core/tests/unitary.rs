use eislat::lattice::{frame, BigLambda, HermitianLattice};
use eislat::ring::{EisensteinInteger as Eis, EisensteinRational as ERat, UNITS};
use eislat::shortvec::vectors_of_norm;
use eislat::unitary::*;

fn rat(x: &[Eis]) -> Vec<ERat> {
    x.iter().map(|&c| c.into()).collect()
}

#[test]
fn heisenberg_in_big_lambda() {
    let bl = BigLambda::new().unwrap();
    let l = &bl.frame;
    let e = bl.e();
    let mut v = vec![Eis::ZERO; 10];
    v[frame::r1(1)] = Eis::ONE;
    v[frame::r1(2)] = -Eis::ONE;
    assert_eq!(l.norm(&v), 6);
    let t = heisenberg_transvection(l, &e, &v).unwrap();
    assert_eq!(t.apply(&e).unwrap(), e);
    let zero = vec![Eis::ZERO; 10];
    assert!(heisenberg_transvection(l, &e, &zero).unwrap().is_identity());
    // on e⊥ it is x ↦ x + φ(x, v)e
    let x = {
        let mut x = vec![Eis::ZERO; 10];
        x[frame::r1(3)] = Eis::ONE;
        x[frame::r2(1)] = Eis::OMEGA;
        x[frame::E] = Eis::THETA;
        x
    };
    let expect: Vec<Eis> = x.iter().zip(&e).map(|(&a, &b)| a + l.phi(&x, &v) * b).collect();
    assert_eq!(t.apply(&x).unwrap(), expect);
    assert!(matches!(heisenberg_transvection(l, &e, &l.basis_coords(0)), Err(UnitaryError::BadParity(3))));
    assert!(matches!(heisenberg_transvection(l, &e, &bl.f()), Err(UnitaryError::NotOrthogonal)));
}

#[test]
fn heisenberg_composition_law() {
    let bl = BigLambda::new().unwrap();
    let l = &bl.frame;
    let e = rat(&bl.e());
    let mk = |pairs: &[(usize, Eis)]| {
        let mut v = vec![Eis::ZERO; 10];
        for &(i, c) in pairs {
            v[i] += c;
        }
        v
    };
    let u = mk(&[(frame::r1(1), Eis::ONE), (frame::r1(2), Eis::ONE)]);
    let v = mk(&[(frame::r2(1), Eis::OMEGA), (frame::r2(3), Eis::ONE), (frame::E, Eis::THETA)]);
    let (ur, vr) = (rat(&u), rat(&v));
    let tu = transvection_matrix(l, &e, &ur);
    let tv = transvection_matrix(l, &e, &vr);
    let half = phi_rational(l, &vr, &ur).scale(&ERat::half());
    let w: Vec<ERat> = (0..10).map(|i| &(&ur[i] + &vr[i]) + &(&half * &e[i])).collect();
    assert_eq!(&tu * &tv, transvection_matrix(l, &e, &w));
    // commutator is a central transvection T_{e, λe}
    let a = heisenberg_transvection(l, &bl.e(), &u).unwrap();
    let b = heisenberg_transvection(l, &bl.e(), &v).unwrap();
    let c = a.compose(&b).unwrap().compose(&a.inverse()).unwrap().compose(&b.inverse()).unwrap();
    let cm = c.matrix();
    for j in 0..10 {
        let col = cm.column(j);
        let mut diff = col.clone();
        diff[j] -= Eis::ONE;
        for (i, d) in diff.iter().enumerate() {
            if i != frame::E {
                assert!(d.is_zero());
            }
        }
    }
}

#[test]
fn triflection_properties() {
    let l = HermitianLattice::lambda(4);
    let roots = vectors_of_norm(&l, 3).unwrap();
    for r in roots.iter().step_by(7) {
        let s = triflection(&l, r).unwrap();
        assert_eq!(s.order(4), Some(3));
        let neg_w_r: Vec<Eis> = r.iter().map(|&c| -Eis::OMEGA * c).collect();
        assert_eq!(s.apply(r).unwrap(), neg_w_r);
        for u in UNITS {
            let ur: Vec<Eis> = r.iter().map(|&c| u * c).collect();
            assert_eq!(triflection(&l, &ur).unwrap(), s);
        }
    }
}

#[test]
fn reduction_is_homomorphism() {
    let l = HermitianLattice::lambda(4);
    let roots = vectors_of_norm(&l, 3).unwrap();
    let form = induced_symplectic_form(&l);
    for w in roots.windows(2).step_by(17) {
        let (a, b) = (triflection(&l, &w[0]).unwrap(), triflection(&l, &w[1]).unwrap());
        let ab = a.compose(&b).unwrap();
        assert_eq!(ab.reduce_mod_theta(), a.reduce_mod_theta().compose(&b.reduce_mod_theta()));
        assert!(ab.reduce_mod_theta().preserves(&form));
    }
}
