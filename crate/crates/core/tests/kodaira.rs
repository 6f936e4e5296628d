use std::collections::BTreeSet;

use eislat::kodaira::*;
use KodairaType::*;

#[test]
fn table_examples() {
    assert_eq!(kodaira_type(JClass::Infinity, 2, 2), Ok(I(2)));
    assert_eq!(kodaira_type(JClass::Infinity, 2, 8), Ok(IStar(2)));
    assert_eq!(kodaira_type(JClass::Zero, 1, 2), Ok(II));
    assert_eq!(kodaira_type(JClass::Zero, 1, 8), Ok(IVStar));
    assert_eq!(kodaira_type(JClass::Zero, 2, 10), Ok(IIStar));
    assert_eq!(kodaira_type(JClass::One, 1, 3), Ok(III));
    assert!(kodaira_type(JClass::Zero, 1, 3).is_err());
    assert!(kodaira_type(JClass::One, 0, 0).is_err());
    assert_eq!(euler_char(IStar(0)), 6);
    assert_eq!(euler_char(IIStar), 10);
    assert_eq!(euler_char(I(1)), 1);
    assert_eq!(fiber_root_rank(IIStar), 8);
    assert_eq!(fiber_root_rank(I(9)), 8);
    assert_eq!(fiber_root_rank(II), 0);
}

#[test]
fn table_is_self_inverse() {
    let mut valid = 0;
    for j in [JClass::Zero, JClass::One, JClass::Infinity, JClass::Generic] {
        for degree in 0..=12 {
            for euler in 0..=24 {
                if let Ok(t) = kodaira_type(j, degree, euler) {
                    assert_eq!(euler_char(t), euler);
                    valid += 1;
                }
            }
            // totality: every degree ≥ 1 admits exactly two fibers
            if degree >= 1 || j == JClass::Generic {
                let n = (0..=24).filter(|&e| kodaira_type(j, degree, e).is_ok()).count();
                assert_eq!(n, 2, "{j} {degree}");
            }
        }
    }
    assert_eq!(valid, 2 * (12 * 3 + 13));
}

/// Euler characteristic 12 multisets, via a different enumeration order (largest first).
fn all_multisets() -> BTreeSet<Vec<KodairaType>> {
    let types = singular_types();
    let mut out = BTreeSet::new();
    let mut stack = vec![(Vec::<KodairaType>::new(), 12u32)];
    while let Some((cur, left)) = stack.pop() {
        if left == 0 {
            let mut c = cur.clone();
            c.sort();
            out.insert(c);
            continue;
        }
        for &t in types.iter().rev() {
            if t.euler_char() <= left && cur.last().is_none_or(|&l| t <= l) {
                let mut n = cur.clone();
                n.push(t);
                stack.push((n, left - t.euler_char()));
            }
        }
    }
    out
}

/// Brute-force feasibility: search over explicit local-degree assignments.
fn feasible(fibers: &[KodairaType]) -> bool {
    let d: u32 = fibers.iter().map(|t| t.pole_order()).sum();
    if d == 0 || fibers.iter().map(|t| t.root_rank()).sum::<u32>() > 8 {
        return false;
    }
    let reach = |residues: &[u32], modulus: u32| -> bool {
        // can we choose degrees dᵢ ≡ residueᵢ (≥ 1) and smooth fibers (multiples of modulus) summing to d?
        let mut sums = BTreeSet::from([0u32]);
        for &r in residues {
            let mut next = BTreeSet::new();
            for s in &sums {
                let mut k = if r == 0 { modulus } else { r };
                while s + k <= d {
                    next.insert(s + k);
                    k += modulus;
                }
            }
            sums = next;
        }
        sums.iter().any(|s| (d - s).is_multiple_of(modulus))
    };
    let r0: Vec<u32> = fibers.iter().filter_map(|t| match t { II | IVStar => Some(1), IV | IIStar => Some(2), _ => None }).collect();
    let r1: Vec<u32> = fibers.iter().filter_map(|t| match t { III | IIIStar => Some(1), _ => None }).collect();
    reach(&r0, 3) && reach(&r1, 2)
}

#[test]
fn enumeration() {
    let configs = enumerate_configurations();
    let listed: BTreeSet<Vec<KodairaType>> = configs.iter().map(|c| c.fibers.clone()).collect();
    assert_eq!(listed.len(), configs.len(), "duplicates");
    let oracle: BTreeSet<Vec<KodairaType>> = all_multisets().into_iter().filter(|m| feasible(m)).collect();
    assert_eq!(listed, oracle);
    for c in &configs {
        assert_eq!(validate(&c.fibers).as_ref(), Ok(c));
        assert_eq!(c.fibers.iter().map(|t| t.euler_char()).sum::<u32>(), 12);
        assert!(c.fibers.iter().map(|t| t.root_rank()).sum::<u32>() <= 8);
        for p in &c.placements {
            assert_eq!(kodaira_type(p.j, p.local_degree, p.fiber.euler_char()), Ok(p.fiber));
        }
    }
    let mut twelve = vec![I(1); 12];
    twelve.sort();
    assert!(listed.contains(&twelve));
    assert!(listed.contains(&vec![I(1), I(1), I(1), I(9)]));
    let mut ii = vec![I(1); 10];
    ii.push(II);
    ii.sort();
    assert!(listed.contains(&ii));
    assert!(!listed.iter().any(|c| c.contains(&I(10))));
    assert!(!listed.contains(&vec![II, IIStar]));
    eprintln!("{} configurations", configs.len());
}
