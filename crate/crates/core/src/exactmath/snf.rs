//! Smith normal form over the integers.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense rectangular matrix of arbitrary-precision integers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Builds from rows; all rows must share the given column count.
    pub fn from_rows<T: Into<BigInt> + Clone>(cols: usize, rows: &[Vec<T>]) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged matrix");
            for (j, x) in r.iter().enumerate() {
                m.set(i, j, x.clone().into());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn mul(&self, other: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> IntegerMatrix {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// row_t <- row_t - q * row_s
    fn row_axpy(&mut self, t: usize, s: usize, q: &BigInt) {
        for j in 0..self.cols {
            let v = self.get(t, j) - q * self.get(s, j);
            self.set(t, j, v);
        }
    }

    fn col_axpy(&mut self, t: usize, s: usize, q: &BigInt) {
        for i in 0..self.rows {
            let v = self.get(i, t) - q * self.get(i, s);
            self.set(i, t, v);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self.get(i, j);
            self.set(i, j, v);
        }
    }

    /// Replaces rows (a, b) by (x*a + y*b, u*a + v*b).
    fn row_combine(&mut self, a: usize, b: usize, [x, y, u, v]: [&BigInt; 4]) {
        for j in 0..self.cols {
            let ra = self.get(a, j).clone();
            let rb = self.get(b, j).clone();
            self.set(a, j, x * &ra + y * &rb);
            self.set(b, j, u * &ra + v * &rb);
        }
    }

    fn col_combine(&mut self, a: usize, b: usize, [x, y, u, v]: [&BigInt; 4]) {
        for i in 0..self.rows {
            let ca = self.get(i, a).clone();
            let cb = self.get(i, b).clone();
            self.set(i, a, x * &ca + y * &cb);
            self.set(i, b, u * &ca + v * &cb);
        }
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        smith_normal_form(self).rank
    }
}

impl fmt::Debug for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.to_rows()).finish()
    }
}

/// Cokernel data of `Z^cols / rowspan(M)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    /// Nonzero diagonal entries `d_1 | d_2 | ...`, all positive.
    pub invariant_factors: Vec<BigInt>,
    pub rank: usize,
    /// `cols - rank`.
    pub free_rank: usize,
    /// Invariant factors greater than one.
    pub torsion: Vec<BigInt>,
}

pub fn smith_normal_form(m: &IntegerMatrix) -> SmithForm {
    let (d, _, _) = smith_with_transforms(m, false);
    summarize(&d)
}

pub(crate) fn summarize(d: &IntegerMatrix) -> SmithForm {
    let k = d.rows().min(d.cols());
    let invariant_factors: Vec<BigInt> = (0..k)
        .map(|i| d.get(i, i).clone())
        .filter(|x| !x.is_zero())
        .collect();
    let rank = invariant_factors.len();
    let torsion = invariant_factors
        .iter()
        .filter(|x| !x.is_one())
        .cloned()
        .collect();
    SmithForm {
        invariant_factors,
        rank,
        free_rank: d.cols() - rank,
        torsion,
    }
}

/// Returns `(D, U, V)` with `U * M * V = D` diagonal, `U`, `V` unimodular and
/// the diagonal a divisibility chain of nonnegative entries. When `track` is
/// false the transforms are returned as empty matrices.
pub(crate) fn smith_with_transforms(
    m: &IntegerMatrix,
    track: bool,
) -> (IntegerMatrix, IntegerMatrix, IntegerMatrix) {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut u = if track {
        IntegerMatrix::identity(rows)
    } else {
        IntegerMatrix::zeros(0, 0)
    };
    let mut v = if track {
        IntegerMatrix::identity(cols)
    } else {
        IntegerMatrix::zeros(0, 0)
    };
    let mut t = 0;
    while t < rows.min(cols) {
        // Pivot: smallest nonzero absolute value in the remaining block.
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                let x = a.get(i, j);
                if !x.is_zero()
                    && best.is_none_or(|(bi, bj)| x.abs() < a.get(bi, bj).abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap_rows(t, pi);
        a.swap_cols(t, pj);
        if track {
            u.swap_rows(t, pi);
            v.swap_cols(t, pj);
        }
        loop {
            let mut changed = false;
            for i in t + 1..rows {
                if a.get(i, t).is_zero() {
                    continue;
                }
                let p = a.get(t, t).clone();
                let x = a.get(i, t).clone();
                if x.is_multiple_of(&p) {
                    let q = &x / &p;
                    a.row_axpy(i, t, &q);
                    if track {
                        u.row_axpy(i, t, &q);
                    }
                } else {
                    let e = p.extended_gcd(&x);
                    let (g, s, r) = (e.gcd, e.x, e.y);
                    let pg = &p / &g;
                    let xg = &x / &g;
                    let nxg = -&xg;
                    a.row_combine(t, i, [&s, &r, &nxg, &pg]);
                    if track {
                        u.row_combine(t, i, [&s, &r, &nxg, &pg]);
                    }
                }
                changed = true;
            }
            for j in t + 1..cols {
                if a.get(t, j).is_zero() {
                    continue;
                }
                let p = a.get(t, t).clone();
                let x = a.get(t, j).clone();
                if x.is_multiple_of(&p) {
                    let q = &x / &p;
                    a.col_axpy(j, t, &q);
                    if track {
                        v.col_axpy(j, t, &q);
                    }
                } else {
                    let e = p.extended_gcd(&x);
                    let (g, s, r) = (e.gcd, e.x, e.y);
                    let pg = &p / &g;
                    let xg = &x / &g;
                    let nxg = -&xg;
                    a.col_combine(t, j, [&s, &r, &nxg, &pg]);
                    if track {
                        v.col_combine(t, j, [&s, &r, &nxg, &pg]);
                    }
                }
                changed = true;
            }
            if changed {
                continue;
            }
            // Enforce divisibility of the rest of the block by the pivot.
            let p = a.get(t, t).clone();
            let bad = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !a.get(i, j).is_multiple_of(&p));
            match bad {
                Some((i, _)) => {
                    let one = BigInt::one();
                    a.row_axpy(t, i, &-one.clone());
                    if track {
                        u.row_axpy(t, i, &-one);
                    }
                }
                None => break,
            }
        }
        if a.get(t, t).is_negative() {
            a.negate_row(t);
            if track {
                u.negate_row(t);
            }
        }
        t += 1;
    }
    (a, u, v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| x.into()).collect()
    }

    #[test]
    fn z2_example() {
        let m = IntegerMatrix::from_rows(2, &[vec![1, 0], vec![0, 2]]);
        let s = smith_normal_form(&m);
        assert_eq!(s.torsion, ints(&[2]));
        assert_eq!(s.free_rank, 0);
    }

    #[test]
    fn empty_rows() {
        let m = IntegerMatrix::zeros(0, 3);
        let s = smith_normal_form(&m);
        assert_eq!(s.free_rank, 3);
        assert!(s.torsion.is_empty());
    }

    #[test]
    fn chain_and_transforms() {
        let m = IntegerMatrix::from_rows(3, &[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
        let (d, u, v) = smith_with_transforms(&m, true);
        assert_eq!(u.mul(&m).mul(&v), d);
        assert_eq!(summarize(&d).invariant_factors, ints(&[2, 6, 12]));
    }

    #[test]
    fn gcd_path_pivot() {
        let m = IntegerMatrix::from_rows(2, &[vec![4, 6], vec![6, 9]]);
        let (d, u, v) = smith_with_transforms(&m, true);
        assert_eq!(u.mul(&m).mul(&v), d);
        let s = summarize(&d);
        assert_eq!(s.invariant_factors, ints(&[1]));
        assert_eq!(s.free_rank, 1);
    }
}
