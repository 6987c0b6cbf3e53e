//! Dense exact matrices and fraction-free rank computations.
//!
//! All rank, span and independence questions go through [`IntSpan`], which
//! keeps an integer row basis in reduced echelon form. Rational input is
//! scaled by the lcm of its denominators first; rows stay primitive (content 1).

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::{Int, Rational};

/// Incrementally maintained integer row space.
#[derive(Clone, Debug)]
pub struct IntSpan {
    cols: usize,
    rows: Vec<Vec<Int>>,
    pivots: Vec<usize>,
}

fn make_primitive(v: &mut [Int]) {
    let mut g = Int::zero();
    for x in v.iter() {
        if !x.is_zero() {
            g = g.gcd(x);
            if g.is_one() {
                return;
            }
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for x in v.iter_mut() {
        if !x.is_zero() {
            *x = &*x / &g;
        }
    }
}

/// Scales a rational vector to a primitive integer vector with the same span.
pub fn integer_row(v: &[Rational]) -> Vec<Int> {
    let l = v
        .iter()
        .filter(|x| !x.is_zero())
        .fold(Int::one(), |acc, x| acc.lcm(x.denom()));
    let mut out: Vec<Int> = v.iter().map(|x| (x * &l).to_integer()).collect();
    make_primitive(&mut out);
    out
}

impl IntSpan {
    pub fn new(cols: usize) -> Self {
        IntSpan {
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &mut [Int]) {
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            if v[c].is_zero() {
                continue;
            }
            let p = &row[c];
            let f = v[c].clone();
            for (x, r) in v.iter_mut().zip(row) {
                let scaled = &*x * p;
                *x = if r.is_zero() { scaled } else { scaled - &f * r };
            }
            make_primitive(v);
        }
    }

    /// Adds `v` to the span; returns `true` if it was independent.
    pub fn insert(&mut self, mut v: Vec<Int>) -> bool {
        assert_eq!(v.len(), self.cols, "row length mismatch");
        self.reduce(&mut v);
        let Some(c) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        if v[c].is_negative() {
            v.iter_mut().for_each(|x| *x = -&*x);
        }
        make_primitive(&mut v);
        for row in self.rows.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, r) in row.iter_mut().zip(&v) {
                let scaled = &*x * &v[c];
                *x = if r.is_zero() { scaled } else { scaled - &f * r };
            }
            make_primitive(row);
        }
        self.rows.push(v);
        self.pivots.push(c);
        true
    }

    pub fn insert_rational(&mut self, v: &[Rational]) -> bool {
        self.insert(integer_row(v))
    }

    pub fn contains(&self, v: &[Int]) -> bool {
        let mut v = v.to_vec();
        self.reduce(&mut v);
        v.iter().all(Zero::is_zero)
    }

    pub fn contains_rational(&self, v: &[Rational]) -> bool {
        self.contains(&integer_row(v))
    }
}

/// Dense matrix of exact rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        ExactMatrix::scalar(n, Rational::one())
    }

    pub fn scalar(n: usize, c: Rational) -> Self {
        let mut m = ExactMatrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = c.clone();
        }
        m
    }

    pub fn diagonal(entries: Vec<Rational>) -> Self {
        let n = entries.len();
        let mut m = ExactMatrix::zeros(n, n);
        for (i, e) in entries.into_iter().enumerate() {
            m.data[i * n + i] = e;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::InvalidArgument("ragged matrix rows".into()));
        }
        Ok(ExactMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
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

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Rational) -> ExactMatrix {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i).clone())
            .sum()
    }

    /// The scalar `c` if the matrix equals `c·I`.
    pub fn as_scalar(&self) -> Option<Rational> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let c = if n == 0 {
            Rational::zero()
        } else {
            self.get(0, 0).clone()
        };
        for i in 0..n {
            for j in 0..n {
                let v = self.get(i, j);
                let ok = if i == j { *v == c } else { v.is_zero() };
                if !ok {
                    return None;
                }
            }
        }
        Some(c)
    }

    /// Kronecker product `self ⊗ other` on the basis `(i, j) -> i * other.dim + j`.
    pub fn kron(&self, other: &ExactMatrix) -> ExactMatrix {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut out = ExactMatrix::zeros(rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if b.is_zero() {
                            continue;
                        }
                        out.set(i * other.rows + k, j * other.cols + l, a * b);
                    }
                }
            }
        }
        out
    }

    pub fn commutes_with(&self, other: &ExactMatrix) -> bool {
        self * other == other * self
    }

    pub fn rank(&self) -> usize {
        let mut span = IntSpan::new(self.cols);
        for i in 0..self.rows {
            span.insert_rational(self.row(i));
        }
        span.rank()
    }

    pub fn pow(&self, e: u32) -> ExactMatrix {
        let mut acc = ExactMatrix::identity(self.rows);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl Mul for &ExactMatrix {
    type Output = ExactMatrix;
    fn mul(self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = ExactMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * rhs.cols + j;
                    out.data[idx] += a * b;
                }
            }
        }
        out
    }
}

impl Add for &ExactMatrix {
    type Output = ExactMatrix;
    fn add(self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &ExactMatrix {
    type Output = ExactMatrix;
    fn sub(self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{:>width$}", cells[i * self.cols + j])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, rat_frac};

    fn m(rows: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rat(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn rank_of_small_matrices() {
        assert_eq!(m(&[&[1, 2], &[2, 4]]).rank(), 1);
        assert_eq!(m(&[&[1, 2], &[3, 4]]).rank(), 2);
        assert_eq!(ExactMatrix::zeros(3, 3).rank(), 0);
        assert_eq!(m(&[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]]).rank(), 3);
        assert_eq!(m(&[&[1, 1, 0], &[0, 1, 1], &[1, 2, 1]]).rank(), 2);
    }

    #[test]
    fn rational_rows_span() {
        let mut span = IntSpan::new(2);
        assert!(span.insert_rational(&[rat_frac(1, 2), rat_frac(1, 3)]));
        assert!(span.contains_rational(&[rat(3), rat(2)]));
        assert!(!span.contains_rational(&[rat(1), rat(0)]));
        assert!(!span.insert_rational(&[rat(-6), rat(-4)]));
        assert_eq!(span.rank(), 1);
    }

    #[test]
    fn span_is_order_independent() {
        let vs = [[0i64, 1, 2, 3], [1, 0, 1, 0], [1, 1, 3, 3], [2, 3, 0, 1], [3, 3, 1, 1]];
        let mut a = IntSpan::new(4);
        let mut b = IntSpan::new(4);
        for v in vs.iter() {
            a.insert(v.iter().map(|&x| Int::from(x)).collect());
        }
        for v in vs.iter().rev() {
            b.insert(v.iter().map(|&x| Int::from(x)).collect());
        }
        assert_eq!(a.rank(), 3);
        assert_eq!(b.rank(), 3);
        for v in vs.iter() {
            let iv: Vec<Int> = v.iter().map(|&x| Int::from(x)).collect();
            assert!(a.contains(&iv) && b.contains(&iv));
        }
    }

    #[test]
    fn scalar_detection() {
        assert_eq!(
            ExactMatrix::scalar(3, rat_frac(3, 2)).as_scalar(),
            Some(rat_frac(3, 2))
        );
        assert_eq!(ExactMatrix::identity(2).as_scalar(), Some(rat(1)));
        assert_eq!(m(&[&[1, 1], &[0, 1]]).as_scalar(), None);
    }

    #[test]
    fn kron_dimensions_and_mixed_product() {
        let a = m(&[&[1, 2], &[3, 4]]);
        let b = m(&[&[0, 1], &[1, 0]]);
        let k = a.kron(&b);
        assert_eq!((k.rows(), k.cols()), (4, 4));
        let lhs = &a.kron(&b) * &b.kron(&a);
        let rhs = (&a * &b).kron(&(&b * &a));
        assert_eq!(lhs, rhs);
    }
}
