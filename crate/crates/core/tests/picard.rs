use eislat::picard::*;
use proptest::prelude::*;

fn vec10() -> impl Strategy<Value = I19Vector> {
    prop::array::uniform10(-6i64..=6).prop_map(I19Vector)
}

/// Arbitrary element of f⊥ with even norm: integer combinations of simple roots.
fn root_span() -> impl Strategy<Value = I19Vector> {
    prop::array::uniform9(-3i64..=3).prop_map(|c| {
        simple_root_basis().iter().zip(c).fold(I19Vector::ZERO, |acc, (a, k)| acc + k * *a)
    })
}

fn root() -> impl Strategy<Value = I19Vector> {
    // roots of the form ±(eᵢ − eⱼ), ±(ℓ − eᵢ − eⱼ − eₖ), and images under a simple reflection
    (1usize..=9, 1usize..=9, 1usize..=9, 0usize..9, any::<bool>()).prop_filter_map("distinct", |(i, j, k, s, flip)| {
        let a = if flip {
            if i == j || j == k || i == k {
                return None;
            }
            I19Vector::ell() - I19Vector::e(i) - I19Vector::e(j) - I19Vector::e(k)
        } else {
            if i == j {
                return None;
            }
            I19Vector::e(i) - I19Vector::e(j)
        };
        Some(reflect(&simple_root_basis()[s], &a).unwrap())
    })
}

#[test]
fn report() {
    let r = verify();
    assert!(r.all(), "{r:?}");
    assert_eq!(r.signature, (1, 9, 0));
}

#[test]
fn cartan_matrix_independent_oracle() {
    // the affine E₈ diagram has 9 nodes, 8 edges, one node of valence 3 with arms of length 1, 2, 5
    let g = gram_of(&simple_root_basis());
    let mut valence = [0usize; 9];
    for i in 0..9 {
        assert_eq!(g[i][i], -2);
        for j in 0..9 {
            if i != j {
                assert!(g[i][j] == 0 || g[i][j] == 1);
                valence[i] += g[i][j] as usize;
            }
        }
    }
    assert_eq!(valence.iter().sum::<usize>(), 16);
    assert_eq!(valence.iter().filter(|&&v| v == 3).count(), 1);
    assert_eq!(valence.iter().filter(|&&v| v == 1).count(), 3);
    // null vector of the affine diagram is f
    let marks = [3i64, 2, 4, 6, 5, 4, 3, 2, 1];
    let delta = simple_root_basis().iter().zip(marks).fold(I19Vector::ZERO, |acc, (a, k)| acc + k * *a);
    assert_eq!(delta, anticanonical_f());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn reflection_is_involutive_isometry(a in root(), c in vec10(), d in vec10()) {
        prop_assert!(is_root(&a));
        let sc = reflect(&a, &c).unwrap();
        let sd = reflect(&a, &d).unwrap();
        prop_assert_eq!(sc.dot(&sd), c.dot(&d));
        prop_assert_eq!(reflect(&a, &sc).unwrap(), c);
        prop_assert_eq!(reflect(&a, &a).unwrap(), -a);
        prop_assert_eq!(reflect(&a, &anticanonical_f()).unwrap(), anticanonical_f());
    }

    #[test]
    fn eichler_siegel_laws(u in root_span(), v in root_span(), c in vec10(), d in vec10(), k in -3i64..=3) {
        let f = anticanonical_f();
        let t = |x: &I19Vector, y: &I19Vector| eichler_siegel(x, y).unwrap();
        prop_assert_eq!(t(&u, &c).dot(&t(&u, &d)), c.dot(&d));
        prop_assert_eq!(t(&u, &f), f);
        prop_assert_eq!(t(&(u + k * f), &c), t(&u, &c));
        prop_assert_eq!(t(&u, &t(&v, &c)), t(&(u + v), &c));
        prop_assert_eq!(t(&I19Vector::ZERO, &c), c);
    }

    #[test]
    fn normalization_is_equivariant(u in root_span(), c in vec10()) {
        let f = anticanonical_f();
        // push c to c·f = 1 by adding a multiple of e₁ (e₁·f = 1)
        let c = c + (1 - c.dot(&f)) * I19Vector::e(1);
        prop_assume!(c.norm() % 2 != 0);
        let e = exceptional_normalize(&c).unwrap();
        prop_assert_eq!(e.norm(), -1);
        prop_assert_eq!(e.dot(&f), 1);
        prop_assert_eq!(exceptional_normalize(&e).unwrap(), e);
        let tc = eichler_siegel(&u, &c).unwrap();
        prop_assert_eq!(exceptional_normalize(&tc).unwrap(), eichler_siegel(&u, &e).unwrap());
    }
}

#[test]
fn errors() {
    let f = anticanonical_f();
    assert!(matches!(reflect(&f, &f), Err(PicardError::NotARoot(_))));
    assert!(matches!(eichler_siegel(&I19Vector::ell(), &f), Err(PicardError::NotOrthogonalToF(_))));
}
