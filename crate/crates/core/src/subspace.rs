//! Subspaces of `F_p^n` in canonical form.
//!
//! A subspace is stored as the reduced row echelon basis of its span, so two
//! subspaces are equal exactly when their stored bases are equal.

use crate::field;
use crate::matrix::{Echelon, Matrix};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
  basis: Matrix,
  pivots: Vec<usize>,
}

impl Subspace {
  pub fn zero(p: u64, n: usize) -> Self {
    Subspace { basis: Matrix::zeros(p, 0, n), pivots: Vec::new() }
  }

  pub fn full(p: u64, n: usize) -> Self {
    Subspace { basis: Matrix::identity(p, n), pivots: (0..n).collect() }
  }

  /// Span of the rows of `m`.
  pub fn from_rows(m: &Matrix) -> Self {
    let (basis, pivots) = m.rref();
    Subspace { basis, pivots }
  }

  /// Span of the columns of `m`.
  pub fn from_cols(m: &Matrix) -> Self {
    Self::from_rows(&m.transpose())
  }

  pub fn span(p: u64, n: usize, vs: &[Vec<u64>]) -> Self {
    if vs.is_empty() {
      return Self::zero(p, n);
    }
    Self::from_rows(&Matrix::from_rows(p, n, vs))
  }

  pub fn span_iter(p: u64, n: usize, vs: impl IntoIterator<Item = Vec<u64>>) -> Self {
    let mut e = Echelon::new(p, n);
    for v in vs {
      if e.rank() == n {
        break;
      }
      e.insert(v);
    }
    let (basis, pivots) = e.finish();
    Subspace { basis, pivots }
  }

  pub fn p(&self) -> u64 {
    self.basis.p()
  }
  pub fn dim(&self) -> usize {
    self.pivots.len()
  }
  pub fn ambient(&self) -> usize {
    self.basis.cols()
  }
  pub fn basis(&self) -> &Matrix {
    &self.basis
  }
  pub fn pivots(&self) -> &[usize] {
    &self.pivots
  }
  pub fn is_zero(&self) -> bool {
    self.dim() == 0
  }
  pub fn is_full(&self) -> bool {
    self.dim() == self.ambient()
  }

  pub fn vectors(&self) -> Vec<Vec<u64>> {
    self.basis.row_vecs()
  }

  /// Basis vectors as the columns of an `ambient x dim` matrix.
  pub fn basis_cols(&self) -> Matrix {
    self.basis.transpose()
  }

  /// Subtracts pivot multiples so that `v` vanishes on the pivot columns.
  pub fn reduce(&self, v: &mut [u64]) {
    let p = self.p();
    for (i, &pc) in self.pivots.iter().enumerate() {
      let f = v[pc];
      if f == 0 {
        continue;
      }
      let nf = p - f;
      for (x, &y) in v.iter_mut().zip(self.basis.row(i)) {
        if y != 0 {
          *x = (*x + nf * y) % p;
        }
      }
    }
  }

  pub fn contains(&self, v: &[u64]) -> bool {
    let mut w = v.to_vec();
    self.reduce(&mut w);
    w.iter().all(|&x| x == 0)
  }

  pub fn contains_space(&self, other: &Subspace) -> bool {
    other.basis.row_vecs().iter().all(|v| self.contains(v))
  }

  /// Coordinates of a member vector in the stored basis.
  pub fn coords(&self, v: &[u64]) -> Vec<u64> {
    self.pivots.iter().map(|&c| v[c]).collect()
  }

  pub fn sum(&self, other: &Subspace) -> Subspace {
    assert_eq!(self.ambient(), other.ambient());
    if other.is_zero() {
      return self.clone();
    }
    if self.is_zero() {
      return other.clone();
    }
    Self::from_rows(&self.basis.vstack(&other.basis))
  }

  pub fn intersection(&self, other: &Subspace) -> Subspace {
    assert_eq!(self.ambient(), other.ambient());
    let (p, n) = (self.p(), self.ambient());
    if self.is_zero() || other.is_zero() {
      return Self::zero(p, n);
    }
    // x * B1 = y * B2  <=>  (x, -y) lies in the left kernel of [B1; B2].
    let stacked = self.basis.vstack(&other.basis);
    let k = stacked.transpose().kernel();
    let k1 = self.dim();
    let mut vs = Vec::new();
    for j in 0..k.cols() {
      let mut v = vec![0u64; n];
      for i in 0..k1 {
        let c = k.get(i, j);
        if c == 0 {
          continue;
        }
        for (x, &y) in v.iter_mut().zip(self.basis.row(i)) {
          *x = field::add(*x, field::mul(c, y, p), p);
        }
      }
      vs.push(v);
    }
    Self::span(p, n, &vs)
  }

  /// Columns not occupied by pivots; they index a basis of the quotient.
  pub fn free_cols(&self) -> Vec<usize> {
    let mut is_piv = vec![false; self.ambient()];
    for &c in &self.pivots {
      is_piv[c] = true;
    }
    (0..self.ambient()).filter(|&c| !is_piv[c]).collect()
  }

  /// Matrix of the quotient map `F_p^n -> F_p^n / self` in the basis given by
  /// the images of the free standard vectors.
  pub fn quotient_map(&self) -> Matrix {
    let free = self.free_cols();
    let n = self.ambient();
    let p = self.p();
    let mut q = Matrix::zeros(p, free.len(), n);
    for (j, &c) in free.iter().enumerate() {
      q.set(j, c, 1);
    }
    for (i, &pc) in self.pivots.iter().enumerate() {
      for (j, &c) in free.iter().enumerate() {
        let v = self.basis.get(i, c);
        if v != 0 {
          q.set(j, pc, field::neg(v, p));
        }
      }
    }
    q
  }

  /// Section of the quotient map: the free standard basis vectors as columns.
  pub fn quotient_section(&self) -> Matrix {
    let free = self.free_cols();
    let mut s = Matrix::zeros(self.p(), self.ambient(), free.len());
    for (j, &c) in free.iter().enumerate() {
      s.set(c, j, 1);
    }
    s
  }

  /// Image under a linear map acting on column vectors.
  pub fn image(&self, m: &Matrix) -> Subspace {
    assert_eq!(m.cols(), self.ambient());
    let vs: Vec<Vec<u64>> = self.basis.row_vecs().iter().map(|v| m.mul_vec(v)).collect();
    Self::span(self.p(), m.rows(), &vs)
  }

  /// `{v : m v in target}`.
  pub fn preimage(m: &Matrix, target: &Subspace) -> Subspace {
    assert_eq!(m.rows(), target.ambient());
    let q = target.quotient_map().mul(m);
    Self::from_cols(&q.kernel())
  }
}
