//! Dense matrices over ℚ.

use super::rat::{fmt_rat, ri, to_f64, Rat};
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn scalar(n: usize, c: &Rat) -> Self {
        Mat::identity(n).scale(c)
    }

    pub fn diag(d: &[Rat]) -> Self {
        let mut m = Mat::zeros(d.len(), d.len());
        for (i, v) in d.iter().enumerate() {
            m[(i, i)] = v.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Mat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Mat::from_rows(rows.iter().map(|r| r.iter().map(|&v| ri(v)).collect()).collect())
    }

    pub fn column(v: Vec<Rat>) -> Self {
        let n = v.len();
        Mat { rows: n, cols: 1, data: v }
    }

    /// Unit column `e_i`.
    pub fn unit(n: usize, i: usize) -> Self {
        let mut m = Mat::zeros(n, 1);
        m[(i, 0)] = Rat::one();
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn entries(&self) -> impl Iterator<Item = &Rat> {
        self.data.iter()
    }

    pub fn row_vecs(&self) -> Vec<Vec<Rat>> {
        (0..self.rows).map(|i| self.data[i * self.cols..(i + 1) * self.cols].to_vec()).collect()
    }

    pub fn col_mat(&self, j: usize) -> Mat {
        Mat::column((0..self.rows).map(|i| self[(i, j)].clone()).collect())
    }

    pub fn set_col(&mut self, j: usize, c: &Mat) {
        for i in 0..self.rows {
            self[(i, j)] = c[(i, 0)].clone();
        }
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn scale(&self, c: &Rat) -> Mat {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * c).collect() }
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)].is_zero()))
    }

    pub fn is_upper_triangular(&self) -> bool {
        (0..self.rows).all(|i| (0..i.min(self.cols)).all(|j| self[(i, j)].is_zero()))
    }

    pub fn diagonal(&self) -> Vec<Rat> {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).collect()
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..a.cols {
            if row == a.rows {
                break;
            }
            let Some(p) = (row..a.rows).find(|&i| !a[(i, col)].is_zero()) else {
                continue;
            };
            a.swap_rows(row, p);
            let inv = a[(row, col)].recip();
            for j in col..a.cols {
                a[(row, j)] = &a[(row, j)] * &inv;
            }
            for i in 0..a.rows {
                if i != row && !a[(i, col)].is_zero() {
                    let f = a[(i, col)].clone();
                    for j in col..a.cols {
                        let v = &a[(row, j)] * &f;
                        a[(i, j)] -= v;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (a, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{v : A v = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<Rat>> {
        let (a, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Rat::zero(); self.cols];
                v[f] = Rat::one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -a[(r, f)].clone();
                }
                v
            })
            .collect()
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i != j {
            for c in 0..self.cols {
                self.data.swap(i * self.cols + c, j * self.cols + c);
            }
        }
    }

    /// Solves `self · X = b` exactly; `None` if `self` is singular.
    pub fn solve(&self, b: &Mat) -> Option<Mat> {
        assert!(self.is_square() && b.rows == self.rows);
        let n = self.rows;
        let m = b.cols;
        let mut a = self.clone();
        let mut x = b.clone();
        for col in 0..n {
            let p = (col..n).find(|&i| !a[(i, col)].is_zero())?;
            a.swap_rows(col, p);
            x.swap_rows(col, p);
            let inv = a[(col, col)].recip();
            for i in col + 1..n {
                if a[(i, col)].is_zero() {
                    continue;
                }
                let f = &a[(i, col)] * &inv;
                for j in col..n {
                    let v = &a[(col, j)] * &f;
                    a[(i, j)] -= v;
                }
                for j in 0..m {
                    let v = &x[(col, j)] * &f;
                    x[(i, j)] -= v;
                }
            }
        }
        for col in (0..n).rev() {
            let inv = a[(col, col)].recip();
            for j in 0..m {
                let mut acc = x[(col, j)].clone();
                for k in col + 1..n {
                    acc -= &a[(col, k)] * &x[(k, j)];
                }
                x[(col, j)] = acc * &inv;
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Mat> {
        self.solve(&Mat::identity(self.rows))
    }

    pub fn det(&self) -> Rat {
        assert!(self.is_square());
        let n = self.rows;
        let mut a = self.clone();
        let mut det = Rat::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&i| !a[(i, col)].is_zero()) else {
                return Rat::zero();
            };
            if p != col {
                a.swap_rows(col, p);
                det = -det;
            }
            det *= &a[(col, col)];
            let inv = a[(col, col)].recip();
            for i in col + 1..n {
                if a[(i, col)].is_zero() {
                    continue;
                }
                let f = &a[(i, col)] * &inv;
                for j in col..n {
                    let v = &a[(col, j)] * &f;
                    a[(i, j)] -= v;
                }
            }
        }
        det
    }

    /// Leading principal minors, top-left 1×1 first.
    pub fn leading_minors(&self) -> Vec<Rat> {
        (1..=self.rows)
            .map(|k| {
                let mut s = Mat::zeros(k, k);
                for i in 0..k {
                    for j in 0..k {
                        s[(i, j)] = self[(i, j)].clone();
                    }
                }
                s.det()
            })
            .collect()
    }

    /// Sylvester's criterion on a symmetric matrix.
    pub fn is_positive_definite(&self) -> bool {
        self.is_symmetric() && self.leading_minors().iter().all(|m| m.is_positive())
    }

    pub fn to_f64(&self) -> Vec<Vec<f64>> {
        self.row_vecs().iter().map(|r| r.iter().map(to_f64).collect()).collect()
    }
}

impl Index<(usize, usize)> for Mat {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl Add for &Mat {
    type Output = Mat;
    fn add(self, o: &Mat) -> Mat {
        assert!(self.rows == o.rows && self.cols == o.cols, "shape mismatch in add");
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Mat {
    type Output = Mat;
    fn sub(self, o: &Mat) -> Mat {
        assert!(self.rows == o.rows && self.cols == o.cols, "shape mismatch in sub");
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Mat {
    type Output = Mat;
    fn neg(self) -> Mat {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| -a).collect() }
    }
}

impl Mul for &Mat {
    type Output = Mat;
    fn mul(self, o: &Mat) -> Mat {
        assert_eq!(self.cols, o.rows, "shape mismatch in mul");
        let mut out = Mat::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let v = a * &o[(k, j)];
                    out[(i, j)] += v;
                }
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for Mat {
            type Output = Mat;
            fn $f(self, o: Mat) -> Mat {
                (&self).$f(&o)
            }
        }
        impl $tr<&Mat> for Mat {
            type Output = Mat;
            fn $f(self, o: &Mat) -> Mat {
                (&self).$f(o)
            }
        }
        impl $tr<Mat> for &Mat {
            type Output = Mat;
            fn $f(self, o: Mat) -> Mat {
                self.$f(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Mat {
    type Output = Mat;
    fn neg(self) -> Mat {
        -&self
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", fmt_rat(&self[(i, j)]))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matfun::rat::r;

    #[test]
    fn inverse_of_2x2() {
        let a = Mat::from_i64(&[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(inv, Mat::from_i64(&[&[1, -1], &[-1, 2]]));
        assert_eq!(&a * &inv, Mat::identity(2));
    }

    #[test]
    fn singular_has_no_inverse() {
        let a = Mat::from_i64(&[&[1, 2], &[2, 4]]);
        assert!(a.inverse().is_none());
        assert!(a.det().is_zero());
        assert_eq!(a.rank(), 1);
    }

    #[test]
    fn det_with_pivoting() {
        let a = Mat::from_i64(&[&[0, 1, 2], &[1, 0, 3], &[4, -3, 8]]);
        assert_eq!(a.det(), ri(-2));
    }

    #[test]
    fn nullspace_dimension() {
        let a = Mat::from_i64(&[&[1, 1, 0], &[0, 0, 1]]);
        let ns = a.nullspace();
        assert_eq!(ns.len(), 1);
        assert_eq!(ns[0], vec![ri(-1), ri(1), ri(0)]);
    }

    #[test]
    fn positive_definite_by_minors() {
        let a = Mat::from_rows(vec![vec![r(1, 2), r(1, 4)], vec![r(1, 4), r(1, 2)]]);
        assert!(a.is_positive_definite());
        assert!(!Mat::from_i64(&[&[1, 2], &[2, 1]]).is_positive_definite());
    }

    #[test]
    fn display_is_bracketed() {
        let a = Mat::from_rows(vec![vec![r(-1, 2), ri(1)], vec![ri(0), ri(3)]]);
        assert_eq!(a.to_string(), "[[-1/2, 1], [0, 3]]");
    }
}
