//! Dense matrices over `F_p` with exact row reduction.
//!
//! Storage is row-major. Linear maps act on column vectors, so a matrix with
//! `rows x cols` entries maps `F_p^cols` to `F_p^rows`.

use crate::field;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
  p: u64,
  rows: usize,
  cols: usize,
  data: Vec<u64>,
}

impl std::fmt::Debug for Matrix {
  fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
    writeln!(f, "Matrix {}x{} over F_{}", self.rows, self.cols, self.p)?;
    for r in 0..self.rows {
      let row: Vec<i64> = self.row(r).iter().map(|&x| field::to_i64(x, self.p)).collect();
      writeln!(f, "  {row:?}")?;
    }
    Ok(())
  }
}

/// How many products of reduced entries can be summed, on top of a reduced
/// value, before a `u64` accumulator may overflow.
fn lazy_span(p: u64) -> usize {
  let sq = (p - 1).saturating_mul(p - 1).max(1);
  ((u64::MAX - p) / sq).clamp(1, 1 << 20) as usize
}

impl Matrix {
  pub fn zeros(p: u64, rows: usize, cols: usize) -> Self {
    Matrix { p, rows, cols, data: vec![0; rows * cols] }
  }

  pub fn identity(p: u64, n: usize) -> Self {
    let mut m = Self::zeros(p, n, n);
    for i in 0..n {
      m.data[i * n + i] = 1 % p;
    }
    m
  }

  pub fn from_vec(p: u64, rows: usize, cols: usize, data: Vec<u64>) -> Self {
    assert_eq!(data.len(), rows * cols, "data length does not match shape");
    debug_assert!(data.iter().all(|&x| x < p));
    Matrix { p, rows, cols, data }
  }

  /// Builds a matrix from rows; every row must have length `cols`.
  pub fn from_rows(p: u64, cols: usize, rows: &[Vec<u64>]) -> Self {
    let mut data = Vec::with_capacity(rows.len() * cols);
    for r in rows {
      assert_eq!(r.len(), cols);
      data.extend(r.iter().map(|&x| x % p));
    }
    Matrix { p, rows: rows.len(), cols, data }
  }

  /// Builds a matrix whose columns are the given vectors of length `rows`.
  pub fn from_cols(p: u64, rows: usize, cols: &[Vec<u64>]) -> Self {
    let mut m = Self::zeros(p, rows, cols.len());
    for (j, c) in cols.iter().enumerate() {
      assert_eq!(c.len(), rows);
      for (i, &x) in c.iter().enumerate() {
        m.data[i * cols.len() + j] = x % p;
      }
    }
    m
  }

  pub fn from_fn(p: u64, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> u64) -> Self {
    let mut m = Self::zeros(p, rows, cols);
    for i in 0..rows {
      for j in 0..cols {
        m.data[i * cols + j] = f(i, j) % p;
      }
    }
    m
  }

  pub fn p(&self) -> u64 {
    self.p
  }
  pub fn rows(&self) -> usize {
    self.rows
  }
  pub fn cols(&self) -> usize {
    self.cols
  }
  pub fn data(&self) -> &[u64] {
    &self.data
  }

  #[inline]
  pub fn get(&self, r: usize, c: usize) -> u64 {
    self.data[r * self.cols + c]
  }

  #[inline]
  pub fn set(&mut self, r: usize, c: usize, v: u64) {
    self.data[r * self.cols + c] = v % self.p;
  }

  #[inline]
  pub fn add_at(&mut self, r: usize, c: usize, v: u64) {
    let i = r * self.cols + c;
    self.data[i] = field::add(self.data[i], v % self.p, self.p);
  }

  pub fn row(&self, r: usize) -> &[u64] {
    &self.data[r * self.cols..(r + 1) * self.cols]
  }

  pub fn col(&self, c: usize) -> Vec<u64> {
    (0..self.rows).map(|r| self.get(r, c)).collect()
  }

  pub fn row_vecs(&self) -> Vec<Vec<u64>> {
    (0..self.rows).map(|r| self.row(r).to_vec()).collect()
  }

  pub fn col_vecs(&self) -> Vec<Vec<u64>> {
    (0..self.cols).map(|c| self.col(c)).collect()
  }

  pub fn is_zero(&self) -> bool {
    self.data.iter().all(|&x| x == 0)
  }

  pub fn is_square(&self) -> bool {
    self.rows == self.cols
  }

  pub fn is_identity(&self) -> bool {
    self.is_square() && *self == Self::identity(self.p, self.rows)
  }

  pub fn transpose(&self) -> Self {
    let mut t = Self::zeros(self.p, self.cols, self.rows);
    for i in 0..self.rows {
      for j in 0..self.cols {
        t.data[j * self.rows + i] = self.data[i * self.cols + j];
      }
    }
    t
  }

  pub fn mul(&self, other: &Matrix) -> Matrix {
    assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
    assert_eq!(self.p, other.p);
    let p = self.p;
    let n = other.cols;
    let mut out = vec![0u64; self.rows * n];
    let span = lazy_span(p);
    for i in 0..self.rows {
      let orow = &mut out[i * n..(i + 1) * n];
      let mut pending = 0;
      for k in 0..self.cols {
        let a = self.data[i * self.cols + k];
        if a == 0 {
          continue;
        }
        let brow = &other.data[k * n..(k + 1) * n];
        for (o, &b) in orow.iter_mut().zip(brow) {
          *o += a * b;
        }
        pending += 1;
        if pending == span {
          orow.iter_mut().for_each(|o| *o %= p);
          pending = 0;
        }
      }
      orow.iter_mut().for_each(|o| *o %= p);
    }
    Matrix { p, rows: self.rows, cols: n, data: out }
  }

  pub fn mul_vec(&self, v: &[u64]) -> Vec<u64> {
    assert_eq!(v.len(), self.cols);
    let p = self.p;
    let nz: Vec<(usize, u64)> = v.iter().copied().enumerate().filter(|&(_, b)| b != 0).collect();
    let span = lazy_span(p);
    (0..self.rows)
      .map(|i| {
        let row = self.row(i);
        let mut s = 0u64;
        for chunk in nz.chunks(span) {
          for &(k, b) in chunk {
            s += row[k] * b;
          }
          s %= p;
        }
        s
      })
      .collect()
  }

  pub fn add(&self, other: &Matrix) -> Matrix {
    assert_eq!((self.rows, self.cols), (other.rows, other.cols));
    let p = self.p;
    let data = self.data.iter().zip(&other.data).map(|(&a, &b)| field::add(a, b, p)).collect();
    Matrix { p, rows: self.rows, cols: self.cols, data }
  }

  pub fn sub(&self, other: &Matrix) -> Matrix {
    assert_eq!((self.rows, self.cols), (other.rows, other.cols));
    let p = self.p;
    let data = self.data.iter().zip(&other.data).map(|(&a, &b)| field::sub(a, b, p)).collect();
    Matrix { p, rows: self.rows, cols: self.cols, data }
  }

  pub fn scale(&self, s: u64) -> Matrix {
    let p = self.p;
    let s = s % p;
    let data = self.data.iter().map(|&a| field::mul(a, s, p)).collect();
    Matrix { p, rows: self.rows, cols: self.cols, data }
  }

  /// `self += s * other`.
  /// Adds `s * other` to the block with top left corner `(r0, c0)`.
  pub fn add_block_scaled(&mut self, r0: usize, c0: usize, s: u64, other: &Matrix) {
    assert!(r0 + other.rows <= self.rows && c0 + other.cols <= self.cols);
    let p = self.p;
    let s = s % p;
    if s == 0 {
      return;
    }
    for r in 0..other.rows {
      let dst = &mut self.data[(r0 + r) * self.cols + c0..(r0 + r) * self.cols + c0 + other.cols];
      for (d, &o) in dst.iter_mut().zip(other.row(r)) {
        if o != 0 {
          *d = (*d + s * o) % p;
        }
      }
    }
  }

  pub fn axpy(&mut self, s: u64, other: &Matrix) {
    assert_eq!((self.rows, self.cols), (other.rows, other.cols));
    let p = self.p;
    let s = s % p;
    if s == 0 {
      return;
    }
    for (a, &b) in self.data.iter_mut().zip(&other.data) {
      if b != 0 {
        *a = (*a + s * b) % p;
      }
    }
  }

  /// Kronecker product; row index of the result is `i * other.rows + k`.
  pub fn kron(&self, other: &Matrix) -> Matrix {
    let p = self.p;
    let (r1, c1, r2, c2) = (self.rows, self.cols, other.rows, other.cols);
    let mut m = Self::zeros(p, r1 * r2, c1 * c2);
    for i in 0..r1 {
      for j in 0..c1 {
        let a = self.get(i, j);
        if a == 0 {
          continue;
        }
        for k in 0..r2 {
          for l in 0..c2 {
            let b = other.get(k, l);
            if b != 0 {
              m.data[(i * r2 + k) * (c1 * c2) + j * c2 + l] = field::mul(a, b, p);
            }
          }
        }
      }
    }
    m
  }

  pub fn hstack(&self, other: &Matrix) -> Matrix {
    assert_eq!(self.rows, other.rows);
    let mut m = Self::zeros(self.p, self.rows, self.cols + other.cols);
    for i in 0..self.rows {
      let c = self.cols + other.cols;
      m.data[i * c..i * c + self.cols].copy_from_slice(self.row(i));
      m.data[i * c + self.cols..(i + 1) * c].copy_from_slice(other.row(i));
    }
    m
  }

  pub fn vstack(&self, other: &Matrix) -> Matrix {
    assert_eq!(self.cols, other.cols);
    let mut data = self.data.clone();
    data.extend_from_slice(&other.data);
    Matrix { p: self.p, rows: self.rows + other.rows, cols: self.cols, data }
  }

  pub fn select_rows(&self, idx: &[usize]) -> Matrix {
    let mut data = Vec::with_capacity(idx.len() * self.cols);
    for &r in idx {
      data.extend_from_slice(self.row(r));
    }
    Matrix { p: self.p, rows: idx.len(), cols: self.cols, data }
  }

  pub fn select_cols(&self, idx: &[usize]) -> Matrix {
    Matrix::from_fn(self.p, self.rows, idx.len(), |i, j| self.get(i, idx[j]))
  }

  /// Block-diagonal sum.
  pub fn direct_sum(&self, other: &Matrix) -> Matrix {
    let mut m = Self::zeros(self.p, self.rows + other.rows, self.cols + other.cols);
    for i in 0..self.rows {
      for j in 0..self.cols {
        m.set(i, j, self.get(i, j));
      }
    }
    for i in 0..other.rows {
      for j in 0..other.cols {
        m.set(self.rows + i, self.cols + j, other.get(i, j));
      }
    }
    m
  }

  /// Row reduces in place to reduced row echelon form and returns the pivot
  /// column of each nonzero row. Zero rows end up at the bottom.
  pub fn rref_in_place(&mut self) -> Vec<usize> {
    let p = self.p;
    let (nr, nc) = (self.rows, self.cols);
    let mut pivots = Vec::new();
    let mut row = 0;
    let mut prow = vec![0u64; nc];
    for col in 0..nc {
      if row == nr {
        break;
      }
      let Some(pr) = (row..nr).find(|&i| self.data[i * nc + col] != 0) else {
        continue;
      };
      if pr != row {
        for j in 0..nc {
          self.data.swap(pr * nc + j, row * nc + j);
        }
      }
      let s = field::inv(self.data[row * nc + col], p);
      for j in col..nc {
        let x = &mut self.data[row * nc + j];
        *x = field::mul(*x, s, p);
      }
      prow[col..nc].copy_from_slice(&self.data[row * nc + col..(row + 1) * nc]);
      for i in 0..nr {
        if i == row {
          continue;
        }
        let f = self.data[i * nc + col];
        if f == 0 {
          continue;
        }
        let nf = p - f;
        let r = &mut self.data[i * nc + col..(i + 1) * nc];
        for (x, &y) in r.iter_mut().zip(&prow[col..nc]) {
          if y != 0 {
            *x = (*x + nf * y) % p;
          }
        }
      }
      pivots.push(col);
      row += 1;
    }
    pivots
  }

  /// Reduced row echelon form with zero rows removed, and its pivot columns.
  pub fn rref(&self) -> (Matrix, Vec<usize>) {
    let mut m = self.clone();
    let piv = m.rref_in_place();
    m.data.truncate(piv.len() * m.cols);
    m.rows = piv.len();
    (m, piv)
  }

  pub fn rank(&self) -> usize {
    if self.rows <= self.cols {
      self.clone().rref_in_place().len()
    } else {
      self.transpose().rref_in_place().len()
    }
  }

  /// Basis of the right null space `{x : self * x = 0}`, as the columns of the
  /// returned `cols x k` matrix. The basis is canonical: one vector per free
  /// column with a 1 in that column.
  pub fn kernel(&self) -> Matrix {
    let (r, piv) = self.rref();
    let n = self.cols;
    let mut is_piv = vec![false; n];
    for &c in &piv {
      is_piv[c] = true;
    }
    let free: Vec<usize> = (0..n).filter(|&c| !is_piv[c]).collect();
    let mut k = Matrix::zeros(self.p, n, free.len());
    for (j, &f) in free.iter().enumerate() {
      k.set(f, j, 1);
      for (i, &pc) in piv.iter().enumerate() {
        let v = r.get(i, f);
        if v != 0 {
          k.set(pc, j, field::neg(v, self.p));
        }
      }
    }
    k
  }

  /// Solves `self * x = b` for a matrix `x`, returning one solution if any.
  pub fn solve(&self, b: &Matrix) -> Option<Matrix> {
    assert_eq!(self.rows, b.rows);
    let aug = self.hstack(b);
    let (r, piv) = aug.rref();
    let n = self.cols;
    if piv.iter().any(|&c| c >= n) {
      return None;
    }
    let mut x = Matrix::zeros(self.p, n, b.cols);
    for (i, &pc) in piv.iter().enumerate() {
      for j in 0..b.cols {
        x.set(pc, j, r.get(i, n + j));
      }
    }
    Some(x)
  }

  pub fn inverse(&self) -> Option<Matrix> {
    if !self.is_square() {
      return None;
    }
    let n = self.rows;
    let aug = self.hstack(&Matrix::identity(self.p, n));
    let (r, piv) = aug.rref();
    if piv.len() < n || piv[n - 1] != n - 1 {
      return None;
    }
    Some(Matrix::from_fn(self.p, n, n, |i, j| r.get(i, n + j)))
  }

  pub fn is_invertible(&self) -> bool {
    self.is_square() && self.rank() == self.rows
  }

  pub fn trace(&self) -> u64 {
    assert!(self.is_square());
    (0..self.rows).fold(0, |s, i| field::add(s, self.get(i, i), self.p))
  }

  /// Flattens row-major into a single vector.
  pub fn flatten(&self) -> Vec<u64> {
    self.data.clone()
  }

  /// Entries as symmetric signed integers, row by row.
  pub fn to_signed_rows(&self) -> Vec<Vec<i64>> {
    (0..self.rows).map(|r| self.row(r).iter().map(|&x| field::to_i64(x, self.p)).collect()).collect()
  }
}

/// Rank of a family of vectors of a common length.
pub fn rank_of_vectors(p: u64, len: usize, vs: &[Vec<u64>]) -> usize {
  if vs.is_empty() {
    return 0;
  }
  Matrix::from_rows(p, len, vs).rank()
}

/// Incrementally maintained echelon basis of a row space. Rows are kept
/// reduced against earlier pivots only; `finish` returns the full RREF.
#[derive(Clone, Debug)]
pub struct Echelon {
  p: u64,
  len: usize,
  rows: Vec<Vec<u64>>,
  pivots: Vec<usize>,
}

impl Echelon {
  pub fn new(p: u64, len: usize) -> Self {
    Echelon { p, len, rows: Vec::new(), pivots: Vec::new() }
  }

  pub fn rank(&self) -> usize {
    self.rows.len()
  }

  /// Reduces `v` against the stored rows.
  pub fn reduce(&self, v: &mut [u64]) {
    let p = self.p;
    for (row, &pc) in self.rows.iter().zip(&self.pivots) {
      let f = v[pc];
      if f == 0 {
        continue;
      }
      let nf = p - f;
      for (x, &y) in v.iter_mut().zip(row) {
        if y != 0 {
          *x = (*x + nf * y) % p;
        }
      }
    }
  }

  /// Adds a vector; returns true when it enlarged the span.
  pub fn insert(&mut self, mut v: Vec<u64>) -> bool {
    debug_assert_eq!(v.len(), self.len);
    self.reduce(&mut v);
    let Some(pc) = v.iter().position(|&x| x != 0) else {
      return false;
    };
    let s = field::inv(v[pc], self.p);
    for x in v.iter_mut() {
      *x = field::mul(*x, s, self.p);
    }
    self.rows.push(v);
    self.pivots.push(pc);
    true
  }

  pub fn contains(&self, v: &[u64]) -> bool {
    let mut w = v.to_vec();
    self.reduce(&mut w);
    w.iter().all(|&x| x == 0)
  }

  pub fn finish(self) -> (Matrix, Vec<usize>) {
    if self.rows.is_empty() {
      return (Matrix::zeros(self.p, 0, self.len), Vec::new());
    }
    Matrix::from_rows(self.p, self.len, &self.rows).rref()
  }
}

impl serde::Serialize for Matrix {
  fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
    self.to_signed_rows().serialize(s)
  }
}
