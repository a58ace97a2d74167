//! Small dense integer matrices acting on `ℤΠ` by columns.

use std::fmt;

use serde::{Serialize, Serializer};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntMatrix {
    n: usize,
    data: Vec<i32>,
}

impl IntMatrix {
    pub fn zero(n: usize) -> Self {
        IntMatrix {
            n,
            data: vec![0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i32>]) -> Self {
        let n = rows.len();
        let mut m = Self::zero(n);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n, "matrix must be square");
            for (c, &v) in row.iter().enumerate() {
                m.set(r, c, v);
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> i32 {
        self.data[r * self.n + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: i32) {
        self.data[r * self.n + c] = v;
    }

    pub fn rows(&self) -> Vec<Vec<i32>> {
        self.data.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> Vec<i32> {
        (0..self.n).map(|r| self.get(r, c)).collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n)
    }

    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, rhs.n);
        let n = self.n;
        let mut out = Self::zero(n);
        for r in 0..n {
            for k in 0..n {
                let a = self.get(r, k);
                if a != 0 {
                    for c in 0..n {
                        out.data[r * n + c] += a * rhs.get(k, c);
                    }
                }
            }
        }
        out
    }

    /// Product, or `None` if an entry leaves the `i32` range.
    pub fn checked_mul(&self, rhs: &IntMatrix) -> Option<IntMatrix> {
        assert_eq!(self.n, rhs.n);
        let n = self.n;
        let mut out = Self::zero(n);
        for r in 0..n {
            for c in 0..n {
                let mut acc: i64 = 0;
                for k in 0..n {
                    acc += self.get(r, k) as i64 * rhs.get(k, c) as i64;
                }
                out.data[r * n + c] = i32::try_from(acc).ok()?;
            }
        }
        Some(out)
    }

    pub fn apply(&self, v: &[i32]) -> Vec<i32> {
        (0..self.n)
            .map(|r| (0..self.n).map(|c| self.get(r, c) * v[c]).sum())
            .collect()
    }

    /// Inverse over `ℤ` of a unimodular matrix, `None` otherwise.
    pub fn inverse(&self) -> Option<IntMatrix> {
        let n = self.n;
        let mut a: Vec<Vec<i128>> = (0..n)
            .map(|r| {
                let mut row: Vec<i128> = (0..n).map(|c| self.get(r, c) as i128).collect();
                row.extend((0..n).map(|c| i128::from(r == c)));
                row
            })
            .collect();
        // fraction-free elimination with a common denominator per row
        for col in 0..n {
            let pivot = (col..n).find(|&r| a[r][col] != 0)?;
            a.swap(col, pivot);
            for r in 0..n {
                if r != col && a[r][col] != 0 {
                    let (p, f) = (a[col][col], a[r][col]);
                    for c in 0..2 * n {
                        a[r][c] = a[r][c] * p - a[col][c] * f;
                    }
                    let g = a[r].iter().fold(0i128, |g, &x| gcd_i128(g, x));
                    if g > 1 {
                        a[r].iter_mut().for_each(|x| *x /= g);
                    }
                }
            }
        }
        let mut out = Self::zero(n);
        for (r, row) in a.iter().enumerate() {
            let d = row[r];
            for c in 0..n {
                let v = row[n + c];
                if v % d != 0 {
                    return None;
                }
                out.set(r, c, i32::try_from(v / d).ok()?);
            }
        }
        Some(out)
    }
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows())
    }
}

impl Serialize for IntMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.rows().serialize(s)
    }
}

/// True iff every coordinate is `≥ 0` and some coordinate is `> 0`.
pub fn is_positive(v: &[i32]) -> bool {
    v.iter().all(|&x| x >= 0) && v.iter().any(|&x| x > 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_round_trip() {
        let m = IntMatrix::from_rows(&[vec![-1, 1, 0], vec![0, 1, 0], vec![0, 2, 1]]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        assert!(IntMatrix::from_rows(&[vec![2, 0], vec![0, 1]]).inverse().is_none());
    }
}
