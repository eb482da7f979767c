//! Coordinates with respect to an arbitrary (not echelon) linearly
//! independent family of vectors.

use crate::matrix::Matrix;

#[derive(Clone, Debug)]
pub struct Coordinates {
  p: u64,
  len: usize,
  /// Columns are the family members.
  basis: Matrix,
  /// Rows of the ambient space on which the family is already independent.
  rows: Vec<usize>,
  /// Inverse of the basis restricted to `rows`.
  inv: Matrix,
}

impl Coordinates {
  /// Returns `None` when the family is linearly dependent.
  pub fn new(p: u64, len: usize, family: &[Vec<u64>]) -> Option<Self> {
    let k = family.len();
    if k == 0 {
      return Some(Coordinates {
        p,
        len,
        basis: Matrix::zeros(p, len, 0),
        rows: Vec::new(),
        inv: Matrix::zeros(p, 0, 0),
      });
    }
    let basis = Matrix::from_cols(p, len, family);
    let (_, piv) = basis.transpose().rref();
    if piv.len() < k {
      return None;
    }
    let sq = basis.select_rows(&piv);
    let inv = sq.inverse()?;
    Some(Coordinates { p, len, basis, rows: piv, inv })
  }

  pub fn dim(&self) -> usize {
    self.rows.len()
  }

  pub fn ambient(&self) -> usize {
    self.len
  }

  /// Coordinates of `v`, assuming it lies in the span.
  pub fn coords_unchecked(&self, v: &[u64]) -> Vec<u64> {
    let r: Vec<u64> = self.rows.iter().map(|&i| v[i]).collect();
    self.inv.mul_vec(&r)
  }

  /// Coordinates of `v`, or `None` when `v` is outside the span.
  pub fn coords(&self, v: &[u64]) -> Option<Vec<u64>> {
    let c = self.coords_unchecked(v);
    let back = self.basis.mul_vec(&c);
    if back.as_slice() == v {
      Some(c)
    } else {
      None
    }
  }

  pub fn combine(&self, c: &[u64]) -> Vec<u64> {
    self.basis.mul_vec(c)
  }

  pub fn p(&self) -> u64 {
    self.p
  }
}

#[cfg(test)]
mod tests {
  use super::*;

  #[test]
  fn roundtrip() {
    let fam = vec![vec![1, 1, 0, 0], vec![0, 1, 1, 0]];
    let c = Coordinates::new(7, 4, &fam).unwrap();
    let v = vec![2, 5, 3, 0];
    assert_eq!(c.coords(&v), Some(vec![2, 3]));
    assert_eq!(c.coords(&[0, 0, 0, 1]), None);
    assert!(Coordinates::new(7, 2, &[vec![1, 2], vec![2, 4]]).is_none());
  }
}
