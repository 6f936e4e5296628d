//! Exact integer linear algebra: Hermite normal form, integer kernels,
//! saturation and Smith invariants. Matrices are row lists of `i128`.
//!
//! Sizes in this crate are small (at most a few dozen columns), so the plain
//! Euclidean row reduction with reduction above pivots keeps entries tiny.

pub type IntMatrix = Vec<Vec<i128>>;

fn sub_multiple(target: &mut [i128], src: &[i128], q: i128) {
    if q == 0 {
        return;
    }
    for (t, s) in target.iter_mut().zip(src) {
        *t -= q * s;
    }
}

/// Row-reduces `a` in place over the first `pivot_cols` columns, using only
/// unimodular row operations. Returns the pivot positions `(row, col)`.
fn echelon_in_place(a: &mut IntMatrix, pivot_cols: usize) -> Vec<(usize, usize)> {
    let m = a.len();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..pivot_cols {
        if row == m {
            break;
        }
        loop {
            let best = (row..m).filter(|&r| a[r][col] != 0).min_by_key(|&r| a[r][col].unsigned_abs());
            let Some(best) = best else { break };
            a.swap(row, best);
            let mut done = true;
            for r in row + 1..m {
                if a[r][col] != 0 {
                    let q = a[r][col] / a[row][col];
                    let (head, tail) = a.split_at_mut(r);
                    sub_multiple(&mut tail[0], &head[row], q);
                    if tail[0][col] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if a[row][col] == 0 {
            continue;
        }
        if a[row][col] < 0 {
            a[row].iter_mut().for_each(|x| *x = -*x);
        }
        let p = a[row][col];
        for r in 0..row {
            let q = a[r][col].div_euclid(p);
            let (head, tail) = a.split_at_mut(row);
            sub_multiple(&mut head[r], &tail[0], q);
        }
        pivots.push((row, col));
        row += 1;
    }
    pivots
}

/// Hermite normal form of the row span: nonzero rows only, positive pivots,
/// entries above each pivot reduced into `[0, pivot)`. Canonical for the
/// lattice spanned by the rows.
pub fn hnf(rows: &[Vec<i128>]) -> IntMatrix {
    let Some(first) = rows.first() else { return Vec::new() };
    let n = first.len();
    let mut a: IntMatrix = rows.to_vec();
    let pivots = echelon_in_place(&mut a, n);
    a.truncate(pivots.len());
    a
}

pub fn rank(rows: &[Vec<i128>]) -> usize {
    hnf(rows).len()
}

/// A basis (in Hermite normal form) of `{x ∈ Zⁿ : M x = 0}` for `M` given by rows.
pub fn kernel(rows: &[Vec<i128>], ncols: usize) -> IntMatrix {
    let m = rows.len();
    let mut aug: IntMatrix = (0..ncols)
        .map(|j| {
            let mut v: Vec<i128> = rows.iter().map(|r| r[j]).collect();
            v.extend((0..ncols).map(|k| i128::from(k == j)));
            v
        })
        .collect();
    let pivots = echelon_in_place(&mut aug, m);
    let basis: IntMatrix = aug[pivots.len()..].iter().map(|r| r[m..].to_vec()).collect();
    hnf(&basis)
}

/// The saturation `(Q·span) ∩ Zⁿ` of the row span, in Hermite normal form.
pub fn saturation(rows: &[Vec<i128>], ncols: usize) -> IntMatrix {
    if rows.is_empty() {
        return Vec::new();
    }
    let k = kernel(rows, ncols);
    if k.is_empty() {
        return identity(ncols);
    }
    kernel(&k, ncols)
}

/// Whether the row span is saturated in `Zⁿ`.
pub fn is_saturated(rows: &[Vec<i128>], ncols: usize) -> bool {
    hnf(rows) == saturation(rows, ncols)
}

pub fn identity(n: usize) -> IntMatrix {
    (0..n).map(|i| (0..n).map(|j| i128::from(i == j)).collect()).collect()
}

/// Is every row of `sub` in the row span of `sup`?
pub fn span_contains(sup: &[Vec<i128>], sub: &[Vec<i128>]) -> bool {
    let base = hnf(sup);
    let mut joined = base.clone();
    joined.extend(sub.iter().cloned());
    hnf(&joined) == base
}

/// Determinant via fraction-free Bareiss elimination.
pub fn determinant(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: IntMatrix = m.to_vec();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

/// Nonzero Smith invariant factors `d₁ | d₂ | …` of the matrix.
pub fn smith_invariants(rows: &[Vec<i128>]) -> Vec<i128> {
    let mut a = hnf(rows);
    let mut out = Vec::new();
    while !a.is_empty() && !a[0].is_empty() {
        // bring the gcd of the whole remaining block to the corner
        loop {
            let mut best: Option<(usize, usize)> = None;
            for (i, row) in a.iter().enumerate() {
                for (j, &x) in row.iter().enumerate() {
                    if x != 0 && best.is_none_or(|(bi, bj)| x.unsigned_abs() < a[bi][bj].unsigned_abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else { return out };
            a.swap(0, bi);
            for row in a.iter_mut() {
                row.swap(0, bj);
            }
            let p = a[0][0];
            let mut clean = true;
            for i in 1..a.len() {
                let q = a[i][0] / p;
                let (head, tail) = a.split_at_mut(i);
                sub_multiple(&mut tail[0], &head[0], q);
                clean &= tail[0][0] == 0;
            }
            for j in 1..a[0].len() {
                let q = a[0][j] / p;
                for row in a.iter_mut() {
                    let c0 = row[0];
                    row[j] -= q * c0;
                }
                clean &= a[0][j] == 0;
            }
            if !clean {
                continue;
            }
            // the corner must divide the rest; otherwise fold a row in
            let bad = (1..a.len()).find(|&i| a[i].iter().any(|&x| x % p != 0));
            match bad {
                Some(i) => {
                    let (head, tail) = a.split_at_mut(i);
                    for (h, t) in head[0].iter_mut().zip(tail[0].iter()) {
                        *h += t;
                    }
                }
                None => break,
            }
        }
        out.push(a[0][0].abs());
        a = a[1..].iter().map(|r| r[1..].to_vec()).collect();
        a.retain(|r| r.iter().any(|&x| x != 0));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[i128]]) -> IntMatrix {
        rows.iter().map(|r| r.to_vec()).collect()
    }

    #[test]
    fn hnf_is_canonical() {
        let a = mat(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
        let b = mat(&[&[2, 4, 4], &[-4, 10, 16], &[10, -4, -16], &[0, 0, 0]]);
        assert_eq!(hnf(&a), hnf(&b));
        let h = hnf(&a);
        assert!(h[0][0] > 0);
    }

    #[test]
    fn kernel_and_saturation() {
        let a = mat(&[&[2, 4, 0]]);
        let k = kernel(&a, 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert_eq!(2 * v[0] + 4 * v[1], 0);
        }
        assert_eq!(saturation(&a, 3), mat(&[&[1, 2, 0]]));
        assert!(!is_saturated(&a, 3));
        assert!(is_saturated(&mat(&[&[1, 2, 0]]), 3));
    }

    #[test]
    fn determinants() {
        assert_eq!(determinant(&mat(&[&[2, 1], &[1, 2]])), 3);
        assert_eq!(determinant(&mat(&[&[0, 1], &[1, 0]])), -1);
        assert_eq!(determinant(&mat(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]])), 0);
        assert_eq!(determinant(&mat(&[&[0, 2, 1], &[3, 0, 0], &[1, 1, 1]])), -3);
    }

    #[test]
    fn smith_forms() {
        assert_eq!(smith_invariants(&mat(&[&[2, 0], &[0, 3]])), vec![1, 6]);
        assert_eq!(smith_invariants(&mat(&[&[2, 4, 4], &[-6, 6, 12], &[10, 4, 16]])), vec![2, 2, 156]);
        assert_eq!(smith_invariants(&mat(&[&[1, 2, 0]])), vec![1]);
    }

    #[test]
    fn containment() {
        let sup = mat(&[&[1, 0, 0], &[0, 2, 0]]);
        assert!(span_contains(&sup, &mat(&[&[3, 4, 0]])));
        assert!(!span_contains(&sup, &mat(&[&[0, 1, 0]])));
    }
}
