//! Dense matrices over the Eisenstein ring, plus exact linear solves over `Q(ω)`.

use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use crate::ring::{EisensteinInteger as Eis, EisensteinRational, RingError};

/// Row-major matrix over `O`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Eis>,
}

impl OMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        OMatrix { rows, cols, data: vec![Eis::ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, Eis::ONE)
    }

    pub fn scalar(n: usize, c: Eis) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = c;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Eis>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        OMatrix { rows: r, cols: c, data: rows.concat() }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vec<Eis>]) -> Self {
        Self::from_rows(cols).transpose()
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Eis] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Eis> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Eis>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> &[Eis] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn conj(&self) -> Self {
        OMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x.conj()).collect() }
    }

    pub fn conj_transpose(&self) -> Self {
        self.transpose().conj()
    }

    pub fn scale(&self, c: Eis) -> Self {
        OMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|&x| c * x).collect() }
    }

    pub fn apply(&self, v: &[Eis]) -> Vec<Eis> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows).map(|i| self.row(i).iter().zip(v).map(|(&a, &b)| a * b).sum()).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.rows)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::identity(self.rows);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplicative order, searched up to `limit`.
    pub fn order(&self, limit: u32) -> Option<u32> {
        let mut acc = self.clone();
        for k in 1..=limit {
            if acc.is_identity() {
                return Some(k);
            }
            acc = &acc * self;
        }
        None
    }

    /// Determinant by fraction-free Bareiss elimination (exact division in `O`).
    pub fn determinant(&self) -> Result<Eis, RingError> {
        assert!(self.is_square());
        let n = self.rows;
        if n == 0 {
            return Ok(Eis::ONE);
        }
        let mut a = self.clone();
        let mut sign = Eis::ONE;
        let mut prev = Eis::ONE;
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                match (k + 1..n).find(|&r| !a[(r, k)].is_zero()) {
                    Some(r) => {
                        for j in 0..n {
                            a.data.swap(k * n + j, r * n + j);
                        }
                        sign = -sign;
                    }
                    None => return Ok(Eis::ZERO),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = a[(i, j)] * a[(k, k)] - a[(i, k)] * a[(k, j)];
                    a[(i, j)] = v.exact_div(prev)?;
                }
            }
            prev = a[(k, k)];
        }
        Ok(sign * a[(n - 1, n - 1)])
    }

    pub fn to_rational(&self) -> RMatrix {
        RMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| EisensteinRational::from(x)).collect(),
        }
    }
}

impl std::ops::Index<(usize, usize)> for OMatrix {
    type Output = Eis;
    fn index(&self, (i, j): (usize, usize)) -> &Eis {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for OMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Eis {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &OMatrix {
    type Output = OMatrix;
    fn mul(self, o: &OMatrix) -> OMatrix {
        assert_eq!(self.cols, o.rows, "dimension mismatch");
        let mut out = OMatrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o[(k, j)];
                    if !b.is_zero() {
                        out.data[i * o.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl fmt::Debug for OMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries((0..self.rows).map(|i| self.row(i))).finish()
    }
}

/// Row-major matrix over `Q(ω)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RMatrix {
    rows: usize,
    cols: usize,
    data: Vec<EisensteinRational>,
}

impl RMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RMatrix { rows, cols, data: vec![EisensteinRational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        OMatrix::identity(n).to_rational()
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> EisensteinRational) -> Self {
        let data = (0..rows * cols).map(|k| f(k / cols, k % cols)).collect();
        RMatrix { rows, cols, data }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn to_integral(&self) -> Option<OMatrix> {
        let data = self.data.iter().map(EisensteinRational::to_integer).collect::<Option<Vec<_>>>()?;
        Some(OMatrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn apply(&self, v: &[EisensteinRational]) -> Vec<EisensteinRational> {
        (0..self.rows)
            .map(|i| {
                (0..self.cols).fold(EisensteinRational::zero(), |acc, j| &acc + &(&self[(i, j)] * &v[j]))
            })
            .collect()
    }
}

impl std::ops::Index<(usize, usize)> for RMatrix {
    type Output = EisensteinRational;
    fn index(&self, (i, j): (usize, usize)) -> &EisensteinRational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut EisensteinRational {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &RMatrix {
    type Output = RMatrix;
    fn mul(self, o: &RMatrix) -> RMatrix {
        assert_eq!(self.cols, o.rows, "dimension mismatch");
        let mut out = RMatrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let p = a * &o[(k, j)];
                    out[(i, j)] = &out[(i, j)] + &p;
                }
            }
        }
        out
    }
}

/// Solves `A x = b` over `Q(ω)` for square nonsingular `A`; `None` if singular.
pub fn solve_rational(a: &OMatrix, b: &[Eis]) -> Option<Vec<EisensteinRational>> {
    let n = a.nrows();
    assert!(a.is_square() && b.len() == n);
    let mut m: Vec<Vec<EisensteinRational>> = (0..n)
        .map(|i| {
            let mut row: Vec<EisensteinRational> = a.row(i).iter().map(|&x| x.into()).collect();
            row.push(b[i].into());
            row
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        let inv = m[col][col].inv()?;
        m[col] = m[col].iter().map(|x| x * &inv).collect();
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                let pivot_row = m[col].clone();
                for (x, p) in m[r].iter_mut().zip(&pivot_row) {
                    *x = &*x - &(&f * p);
                }
            }
        }
    }
    Some(m.into_iter().map(|mut row| row.pop().expect("augmented column")).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::eis;

    #[test]
    fn determinant_and_products() {
        let th = Eis::THETA;
        let g = OMatrix::from_rows(&[vec![eis(3, 0), th], vec![th.conj(), eis(3, 0)]]);
        assert_eq!(g.determinant().unwrap(), eis(6, 0));
        let w = OMatrix::scalar(2, Eis::OMEGA);
        assert_eq!(w.order(12), Some(6));
        assert_eq!((&w * &g).determinant().unwrap(), eis(6, 0) * Eis::OMEGA * Eis::OMEGA);
    }

    #[test]
    fn rational_solve() {
        let a = OMatrix::from_rows(&[vec![eis(3, 0), Eis::THETA], vec![Eis::THETA.conj(), eis(3, 0)]]);
        let x = solve_rational(&a, &[eis(0, 0), eis(6, 0)]).unwrap();
        let back = a.to_rational().apply(&x);
        assert_eq!(back[0], eis(0, 0).into());
        assert_eq!(back[1], eis(6, 0).into());
    }
}
