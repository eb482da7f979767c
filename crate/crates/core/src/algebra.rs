//! Finite-dimensional algebras given by structure constants on a
//! block-adapted basis.
//!
//! The first `n` basis elements are the declared idempotents `e_0..e_{n-1}`
//! and every basis element `b` lies in a single block `e_i A e_j`, recorded as
//! `block[b] = (i, j)`. Indices are zero-based throughout.

use std::sync::OnceLock;

use serde::Serialize;

use crate::coords::Coordinates;
use crate::error::{Error, Result};
use crate::field;
use crate::matrix::{Echelon, Matrix};
use crate::subspace::Subspace;

#[derive(Clone, Debug)]
pub struct Algebra {
  p: u64,
  dim: usize,
  n: usize,
  labels: Vec<String>,
  block: Vec<(usize, usize)>,
  /// `table[(a * dim + b) * dim + c]` is the coefficient of `b_c` in `b_a b_b`.
  table: Vec<u64>,
  rad: OnceLock<Subspace>,
}

/// Per-invariant verdicts of [`Algebra::validate`].
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ValidationReport {
  pub associative: bool,
  pub unital: bool,
  pub block_adapted: bool,
  pub split: bool,
  pub basic: bool,
  pub connected: bool,
  pub semisimple: bool,
  pub messages: Vec<String>,
}

impl ValidationReport {
  /// All structural invariants hold.
  pub fn passes(&self) -> bool {
    self.associative && self.unital && self.block_adapted && self.split && self.basic
  }
}

impl Algebra {
  /// Builds an algebra from a dense table without validating it.
  pub fn from_table(
    p: u64,
    labels: Vec<String>,
    n: usize,
    block: Vec<(usize, usize)>,
    table: Vec<u64>,
  ) -> Self {
    let dim = labels.len();
    assert_eq!(block.len(), dim);
    assert_eq!(table.len(), dim * dim * dim);
    Algebra { p, dim, n, labels, block, table, rad: OnceLock::new() }
  }

  /// Builds an algebra from sparse products `(a, b, [(c, coeff)])`; products
  /// not listed are zero.
  pub fn from_products(
    p: u64,
    labels: Vec<String>,
    n: usize,
    block: Vec<(usize, usize)>,
    products: &[(usize, usize, Vec<(usize, u64)>)],
  ) -> Self {
    let d = labels.len();
    let mut table = vec![0u64; d * d * d];
    for (a, b, res) in products {
      for &(c, v) in res {
        let i = (a * d + b) * d + c;
        table[i] = field::add(table[i], v % p, p);
      }
    }
    Self::from_table(p, labels, n, block, table)
  }

  pub fn p(&self) -> u64 {
    self.p
  }
  pub fn dim(&self) -> usize {
    self.dim
  }
  /// Number of declared idempotents.
  pub fn n(&self) -> usize {
    self.n
  }
  pub fn labels(&self) -> &[String] {
    &self.labels
  }
  pub fn block(&self, b: usize) -> (usize, usize) {
    self.block[b]
  }
  pub fn blocks(&self) -> &[(usize, usize)] {
    &self.block
  }

  pub fn mul_basis(&self, a: usize, b: usize) -> &[u64] {
    let d = self.dim;
    &self.table[(a * d + b) * d..(a * d + b + 1) * d]
  }

  pub fn basis_vec(&self, a: usize) -> Vec<u64> {
    let mut v = vec![0; self.dim];
    v[a] = 1;
    v
  }

  pub fn zero_vec(&self) -> Vec<u64> {
    vec![0; self.dim]
  }

  pub fn mul(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
    let p = self.p;
    let mut out = vec![0u64; self.dim];
    for (a, &xa) in x.iter().enumerate() {
      if xa == 0 {
        continue;
      }
      for (b, &yb) in y.iter().enumerate() {
        if yb == 0 {
          continue;
        }
        let s = field::mul(xa, yb, p);
        for (o, &t) in out.iter_mut().zip(self.mul_basis(a, b)) {
          if t != 0 {
            *o = (*o + s * t) % p;
          }
        }
      }
    }
    out
  }

  pub fn unit(&self) -> Vec<u64> {
    let mut v = vec![0; self.dim];
    for i in 0..self.n {
      v[i] = 1 % self.p;
    }
    v
  }

  /// Matrix of `v -> x v`.
  pub fn left_mult(&self, x: &[u64]) -> Matrix {
    let d = self.dim;
    let mut m = Matrix::zeros(self.p, d, d);
    for c in 0..d {
      let col = self.mul(x, &self.basis_vec(c));
      for (r, &v) in col.iter().enumerate() {
        if v != 0 {
          m.set(r, c, v);
        }
      }
    }
    m
  }

  /// Matrix of `v -> v x`.
  pub fn right_mult(&self, x: &[u64]) -> Matrix {
    let d = self.dim;
    let mut m = Matrix::zeros(self.p, d, d);
    for c in 0..d {
      let col = self.mul(&self.basis_vec(c), x);
      for (r, &v) in col.iter().enumerate() {
        if v != 0 {
          m.set(r, c, v);
        }
      }
    }
    m
  }

  pub fn left_mult_basis(&self, a: usize) -> Matrix {
    let d = self.dim;
    Matrix::from_fn(self.p, d, d, |r, c| self.mul_basis(a, c)[r])
  }

  pub fn right_mult_basis(&self, a: usize) -> Matrix {
    let d = self.dim;
    Matrix::from_fn(self.p, d, d, |r, c| self.mul_basis(c, a)[r])
  }

  /// Basis indices lying in `e_i A e_j`.
  pub fn block_basis(&self, i: usize, j: usize) -> Vec<usize> {
    (0..self.dim).filter(|&b| self.block[b] == (i, j)).collect()
  }

  /// Basis of the left ideal `A e_j`.
  pub fn col_basis(&self, j: usize) -> Vec<usize> {
    (0..self.dim).filter(|&b| self.block[b].1 == j).collect()
  }

  /// Basis of the right ideal `e_i A`.
  pub fn row_basis(&self, i: usize) -> Vec<usize> {
    (0..self.dim).filter(|&b| self.block[b].0 == i).collect()
  }

  /// `dims[i][j] = dim e_i A e_j`.
  pub fn block_dims(&self) -> Vec<Vec<usize>> {
    let mut d = vec![vec![0; self.n]; self.n];
    for &(i, j) in &self.block {
      d[i][j] += 1;
    }
    d
  }

  pub fn with_prime_labels(&self) -> Vec<String> {
    self.labels.clone()
  }

  /// Checks the structural invariants. Never panics on malformed tables.
  pub fn validate(&self) -> ValidationReport {
    let mut messages = Vec::new();
    let d = self.dim;
    let n = self.n;
    let p = self.p;
    let mut block_adapted = n >= 1 && n <= d;
    if !block_adapted {
      messages.push(format!("idempotent count {n} out of range for dimension {d}"));
    }
    for (b, &(i, j)) in self.block.iter().enumerate() {
      if i >= n || j >= n {
        block_adapted = false;
        messages.push(format!("basis element {b} has block ({i},{j}) out of range"));
      }
    }
    if block_adapted {
      for i in 0..n {
        if self.block[i] != (i, i) {
          block_adapted = false;
          messages.push(format!("idempotent {i} must lie in block ({i},{i})"));
        }
      }
    }
    let mut associative = true;
    'outer: for a in 0..d {
      for b in 0..d {
        let ab = self.mul_basis(a, b).to_vec();
        for c in 0..d {
          let bc = self.mul_basis(b, c).to_vec();
          let lhs = self.mul(&ab, &self.basis_vec(c));
          let rhs = self.mul(&self.basis_vec(a), &bc);
          if lhs != rhs {
            associative = false;
            messages.push(format!("associativity fails at ({a},{b},{c})"));
            break 'outer;
          }
        }
      }
    }
    let mut unital = block_adapted;
    if block_adapted {
      let one = self.unit();
      for b in 0..d {
        let e = self.basis_vec(b);
        if self.mul(&one, &e) != e || self.mul(&e, &one) != e {
          unital = false;
          messages.push(format!("sum of idempotents is not a unit on basis element {b}"));
          break;
        }
      }
      'idem: for i in 0..n {
        for j in 0..n {
          let prod = self.mul_basis(i, j);
          let expect = if i == j { self.basis_vec(i) } else { self.zero_vec() };
          if prod != expect.as_slice() {
            unital = false;
            messages.push(format!("e_{i} e_{j} is not {}", if i == j { "e_i" } else { "zero" }));
            break 'idem;
          }
        }
      }
      // Left and right multiplication by idempotents must select blocks.
      'blocks: for b in 0..d {
        let (bi, bj) = self.block[b];
        for i in 0..n {
          let l = self.mul_basis(i, b);
          let r = self.mul_basis(b, i);
          let el = if i == bi { self.basis_vec(b) } else { self.zero_vec() };
          let er = if i == bj { self.basis_vec(b) } else { self.zero_vec() };
          if l != el.as_slice() || r != er.as_slice() {
            block_adapted = false;
            messages.push(format!("basis element {b} is not homogeneous for block ({bi},{bj})"));
            break 'blocks;
          }
        }
      }
      for a in 0..d {
        for b in 0..d {
          let (ai, aj) = self.block[a];
          let (bi, bj) = self.block[b];
          let prod = self.mul_basis(a, b);
          for (c, &v) in prod.iter().enumerate() {
            if v != 0 && (aj != bi || self.block[c] != (ai, bj)) {
              if block_adapted {
                messages.push(format!("product of {a} and {b} violates block compatibility"));
              }
              block_adapted = false;
            }
          }
        }
      }
    }
    let mut split = false;
    let mut basic = false;
    let mut semisimple = false;
    let mut connected = false;
    if associative && unital && block_adapted {
      if (p as usize) <= d {
        messages.push(format!("prime {p} does not exceed dimension {d}"));
      } else {
        let rad = self.radical();
        semisimple = rad.is_zero();
        split = true;
        basic = true;
        let dims = self.block_dims();
        let rdims = self.radical_block_dims();
        for i in 0..n {
          for j in 0..n {
            let top = dims[i][j] - rdims[i][j];
            if i == j && top != 1 {
              split = false;
              messages.push(format!("e_{i} (A/rad) e_{i} has dimension {top}"));
            }
            if i != j && top != 0 {
              basic = false;
              messages.push(format!("e_{i} (A/rad) e_{j} is nonzero"));
            }
          }
        }
      }
      connected = self.is_connected();
      if !connected {
        messages.push("the block graph is disconnected".into());
      }
    }
    ValidationReport { associative, unital, block_adapted, split, basic, connected, semisimple, messages }
  }

  /// Validation as a hard precondition.
  pub fn ensure_valid(&self) -> Result<()> {
    let r = self.validate();
    if r.passes() {
      Ok(())
    } else {
      Err(Error::Input(format!("algebra fails validation: {}", r.messages.join("; "))))
    }
  }

  fn is_connected(&self) -> bool {
    let dims = self.block_dims();
    let n = self.n;
    if n == 0 {
      return false;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(i) = stack.pop() {
      for j in 0..n {
        if !seen[j] && dims[i][j] + dims[j][i] > 0 {
          seen[j] = true;
          stack.push(j);
        }
      }
    }
    seen.iter().all(|&s| s)
  }

  /// Jacobson radical, as the kernel of the trace form
  /// `(x, y) -> tr(L_{xy})`. Requires `p > dim`.
  pub fn radical(&self) -> &Subspace {
    self.rad.get_or_init(|| {
      let d = self.dim;
      let p = self.p;
      assert!(p as usize > d, "radical requires p > dim");
      let traces: Vec<u64> = (0..d)
        .map(|k| (0..d).fold(0, |s, c| field::add(s, self.table[(k * d + c) * d + c], p)))
        .collect();
      let g = Matrix::from_fn(p, d, d, |a, b| {
        self.mul_basis(a, b).iter().zip(&traces).fold(0, |s, (&x, &t)| field::add(s, field::mul(x, t, p), p))
      });
      Subspace::from_cols(&g.kernel())
    })
  }

  /// `dims[i][j] = dim e_i rad(A) e_j`.
  pub fn radical_block_dims(&self) -> Vec<Vec<usize>> {
    let rad = self.radical();
    let mut out = vec![vec![0; self.n]; self.n];
    for i in 0..self.n {
      for j in 0..self.n {
        out[i][j] = self.project_to_block(rad, i, j).dim();
      }
    }
    out
  }

  /// Image of a subspace under `x -> e_i x e_j`, which for a block-adapted
  /// basis is a coordinate projection.
  pub fn project_to_block(&self, s: &Subspace, i: usize, j: usize) -> Subspace {
    let keep: Vec<bool> = self.block.iter().map(|&b| b == (i, j)).collect();
    let vs: Vec<Vec<u64>> = s
      .vectors()
      .into_iter()
      .map(|v| v.iter().zip(&keep).map(|(&x, &k)| if k { x } else { 0 }).collect())
      .collect();
    Subspace::span(self.p, self.dim, &vs)
  }

  /// Product `U V` of two subspaces.
  pub fn product_space(&self, u: &Subspace, v: &Subspace) -> Subspace {
    let us = u.vectors();
    let vs = v.vectors();
    Subspace::span_iter(self.p, self.dim, us.iter().flat_map(|x| vs.iter().map(move |y| (x, y))).map(|(x, y)| self.mul(x, y)))
  }

  /// `rad^k` for `k >= 0`.
  pub fn radical_power(&self, k: usize) -> Subspace {
    let mut cur = Subspace::full(self.p, self.dim);
    for _ in 0..k {
      cur = self.product_space(self.radical(), &cur);
    }
    cur
  }

  /// Smallest `c` with `rad^c = 0`.
  pub fn nilpotency_degree(&self) -> usize {
    let mut cur = Subspace::full(self.p, self.dim);
    let mut c = 0;
    while !cur.is_zero() {
      cur = self.product_space(self.radical(), &cur);
      c += 1;
    }
    c
  }

  /// Dimensions of `rad^k`, `k = 0, 1, ...` down to zero.
  pub fn loewy_vector(&self) -> Vec<usize> {
    let mut out = Vec::new();
    let mut cur = Subspace::full(self.p, self.dim);
    while !cur.is_zero() {
      out.push(cur.dim());
      cur = self.product_space(self.radical(), &cur);
    }
    out
  }

  /// Algebra generators: the idempotents followed by block-homogeneous lifts
  /// of a basis of `rad / rad^2`.
  pub fn generators(&self) -> Vec<Vec<u64>> {
    let mut gens: Vec<Vec<u64>> = (0..self.n).map(|i| self.basis_vec(i)).collect();
    gens.extend(self.arrows().into_iter().map(|(_, _, v)| v));
    gens
  }

  /// Block-homogeneous lifts of a basis of `rad / rad^2`, with their blocks.
  pub fn arrows(&self) -> Vec<(usize, usize, Vec<u64>)> {
    let rad = self.radical();
    let rad2 = self.product_space(rad, rad);
    let mut out = Vec::new();
    for i in 0..self.n {
      for j in 0..self.n {
        let r = self.project_to_block(rad, i, j);
        let r2 = self.project_to_block(&rad2, i, j);
        let mut e = Echelon::new(self.p, self.dim);
        for v in r2.vectors() {
          e.insert(v);
        }
        for v in r.vectors() {
          if e.insert(v.clone()) {
            out.push((i, j, v));
          }
        }
      }
    }
    out
  }

  /// Matrix `chi` with `x = sum_i chi(x)_i e_i mod rad`.
  pub fn character_map(&self) -> Matrix {
    let rad = self.radical();
    let q = rad.quotient_map();
    let e = Matrix::from_cols(self.p, self.dim, &(0..self.n).map(|i| self.basis_vec(i)).collect::<Vec<_>>());
    let qe = q.mul(&e);
    let inv = qe.inverse().expect("split basic algebra expected");
    inv.mul(&q)
  }

  /// Opposite algebra on the same basis; blocks are transposed.
  pub fn opposite(&self) -> Algebra {
    let d = self.dim;
    let mut table = vec![0u64; d * d * d];
    for a in 0..d {
      for b in 0..d {
        table[(a * d + b) * d..(a * d + b + 1) * d].copy_from_slice(self.mul_basis(b, a));
      }
    }
    let block = self.block.iter().map(|&(i, j)| (j, i)).collect();
    let labels = self.labels.iter().map(|l| format!("{l}'")).collect();
    Algebra::from_table(self.p, labels, self.n, block, table)
  }

  /// Tensor product over the ground field. Idempotents `e_i (x) f_j` come
  /// first in row-major order; the remaining pairs follow in row-major order.
  /// Returns the algebra and the position of each pair `(a, b)`, indexed by
  /// `a * other.dim() + b`.
  pub fn tensor(&self, other: &Algebra) -> (Algebra, Vec<usize>) {
    assert_eq!(self.p, other.p);
    let (d1, d2, n1, n2) = (self.dim, other.dim, self.n, other.n);
    let d = d1 * d2;
    let mut pos = vec![usize::MAX; d];
    let mut order = Vec::with_capacity(d);
    for i in 0..n1 {
      for j in 0..n2 {
        pos[i * d2 + j] = order.len();
        order.push((i, j));
      }
    }
    for a in 0..d1 {
      for b in 0..d2 {
        if pos[a * d2 + b] == usize::MAX {
          pos[a * d2 + b] = order.len();
          order.push((a, b));
        }
      }
    }
    let p = self.p;
    let mut table = vec![0u64; d * d * d];
    for (x, &(a, b)) in order.iter().enumerate() {
      for (y, &(a2, b2)) in order.iter().enumerate() {
        let l = self.mul_basis(a, a2);
        let r = other.mul_basis(b, b2);
        for (c1, &u) in l.iter().enumerate() {
          if u == 0 {
            continue;
          }
          for (c2, &v) in r.iter().enumerate() {
            if v == 0 {
              continue;
            }
            table[(x * d + y) * d + pos[c1 * d2 + c2]] = field::mul(u, v, p);
          }
        }
      }
    }
    let labels = order.iter().map(|&(a, b)| format!("{}*{}", self.labels[a], other.labels[b])).collect();
    let block = order
      .iter()
      .map(|&(a, b)| {
        let (i1, j1) = self.block[a];
        let (i2, j2) = other.block[b];
        (i1 * n2 + i2, j1 * n2 + j2)
      })
      .collect();
    (Algebra::from_table(p, labels, n1 * n2, block, table), pos)
  }

  /// The same structure constants reduced modulo another prime. Only
  /// meaningful for tables whose entries are small integers.
  pub fn reduce_to(&self, q: u64) -> Algebra {
    let table = self.table.iter().map(|&x| field::from_i64(field::to_i64(x, self.p), q)).collect();
    Algebra::from_table(q, self.labels.clone(), self.n, self.block.clone(), table)
  }

  /// Sparse products, for serialization.
  pub fn sparse_products(&self) -> Vec<(usize, usize, Vec<(usize, u64)>)> {
    let d = self.dim;
    let mut out = Vec::new();
    for a in 0..d {
      for b in 0..d {
        let res: Vec<(usize, u64)> =
          self.mul_basis(a, b).iter().enumerate().filter(|(_, &v)| v != 0).map(|(c, &v)| (c, v)).collect();
        if !res.is_empty() {
          out.push((a, b, res));
        }
      }
    }
    out
  }

  /// Dimension of the center.
  pub fn center_dim(&self) -> usize {
    let d = self.dim;
    // z commutes with every basis element: sum_z z_k (L_k - R_k) e_b = 0.
    let mut rows = Vec::new();
    for b in 0..d {
      for c in 0..d {
        let row: Vec<u64> = (0..d)
          .map(|k| field::sub(self.mul_basis(k, b)[c], self.mul_basis(b, k)[c], self.p))
          .collect();
        rows.push(row);
      }
    }
    let m = Matrix::from_rows(self.p, d, &rows);
    d - m.rank()
  }

  /// Basis of the center, as vectors.
  pub fn center(&self) -> Subspace {
    let d = self.dim;
    let mut rows = Vec::new();
    for b in 0..d {
      for c in 0..d {
        rows.push(
          (0..d).map(|k| field::sub(self.mul_basis(k, b)[c], self.mul_basis(b, k)[c], self.p)).collect(),
        );
      }
    }
    Subspace::from_cols(&Matrix::from_rows(self.p, d, &rows).kernel())
  }

  /// Cartan matrix with entry `(i, j) = dim e_j A e_i`.
  pub fn cartan_matrix(&self) -> Vec<Vec<usize>> {
    let b = self.block_dims();
    (0..self.n).map(|i| (0..self.n).map(|j| b[j][i]).collect()).collect()
  }

  /// Socle of the left ideal `A e_i`, in ambient coordinates.
  pub fn socle_of_projective(&self, i: usize) -> Subspace {
    let cols = self.col_basis(i);
    let rad = self.radical().vectors();
    // v = sum_c v_c b_c lies in the socle iff r v = 0 for every radical r.
    let mut rows = Vec::new();
    for r in &rad {
      let l = self.left_mult(r).select_cols(&cols);
      rows.extend(l.row_vecs());
    }
    let m = Matrix::from_rows(self.p, cols.len(), &rows);
    let k = m.kernel();
    let vs: Vec<Vec<u64>> = k
      .col_vecs()
      .into_iter()
      .map(|c| {
        let mut v = self.zero_vec();
        for (t, &b) in cols.iter().enumerate() {
          v[b] = c[t];
        }
        v
      })
      .collect();
    Subspace::span(self.p, self.dim, &vs)
  }

  /// Nakayama permutation: `soc(A e_i)` is the simple module at `sigma[i]`.
  /// Fails unless every socle is simple and the assignment is a bijection.
  pub fn nakayama_permutation(&self) -> Result<Vec<usize>> {
    let mut sigma = Vec::with_capacity(self.n);
    let mut used = vec![false; self.n];
    for i in 0..self.n {
      let soc = self.socle_of_projective(i);
      if soc.dim() != 1 {
        return Err(Error::NotSelfInjective {
          vertex: i,
          reason: format!("socle of A e_{i} has dimension {}", soc.dim()),
        });
      }
      let v = &soc.vectors()[0];
      let k = (0..self.n)
        .find(|&k| self.project_to_block(&soc, k, i).dim() == 1 && v.iter().enumerate().all(|(b, &x)| x == 0 || self.block[b].0 == k))
        .ok_or_else(|| Error::NotSelfInjective { vertex: i, reason: "socle is not block homogeneous".into() })?;
      if used[k] {
        return Err(Error::NotSelfInjective {
          vertex: i,
          reason: format!("socle of A e_{i} is the simple at {k}, already used"),
        });
      }
      used[k] = true;
      sigma.push(k);
    }
    Ok(sigma)
  }

  /// Builds a block-adapted algebra from a multiplicatively closed space of
  /// square matrices, with product `x * y = X Y`. `idempotents` is a complete
  /// set of orthogonal idempotents summing to the identity; `span` spans the
  /// algebra. Returns the algebra and the matrix of each basis element.
  pub fn from_matrices(p: u64, idempotents: &[Matrix], span: &[Matrix]) -> Result<(Algebra, Vec<Matrix>)> {
    let n = idempotents.len();
    if n == 0 {
      return Err(Error::Input("no idempotents".into()));
    }
    let sz = idempotents[0].rows();
    let len = sz * sz;
    let mut basis: Vec<Matrix> = idempotents.to_vec();
    let mut block: Vec<(usize, usize)> = (0..n).map(|i| (i, i)).collect();
    for i in 0..n {
      for j in 0..n {
        let mut e = Echelon::new(p, len);
        if i == j {
          e.insert(idempotents[i].flatten());
        }
        for x in span {
          let y = idempotents[i].mul(x).mul(&idempotents[j]);
          let f = y.flatten();
          if e.insert(f) {
            basis.push(y);
            block.push((i, j));
          }
        }
      }
    }
    let flat: Vec<Vec<u64>> = basis.iter().map(|m| m.flatten()).collect();
    let co = Coordinates::new(p, len, &flat).ok_or_else(|| Error::Input("dependent matrix basis".into()))?;
    let d = basis.len();
    let mut table = vec![0u64; d * d * d];
    for a in 0..d {
      for b in 0..d {
        let prod = basis[a].mul(&basis[b]).flatten();
        let c = co.coords(&prod).ok_or_else(|| Error::Input("matrix span is not closed under products".into()))?;
        table[(a * d + b) * d..(a * d + b + 1) * d].copy_from_slice(&c);
      }
    }
    let labels = (0..d).map(|k| if k < n { format!("e{k}") } else { format!("m{k}") }).collect();
    Ok((Algebra::from_table(p, labels, n, block, table), basis))
  }

  /// Subalgebra `e_S A e_S` for a set of idempotent indices, with blocks
  /// renumbered by position in `s`. Returns the algebra and, for each of its
  /// basis elements, the original index.
  pub fn corner(&self, s: &[usize]) -> (Algebra, Vec<usize>) {
    let pos = |i: usize| s.iter().position(|&x| x == i);
    let mut idx: Vec<usize> = s.to_vec();
    idx.extend((self.n..self.dim).filter(|&b| pos(self.block[b].0).is_some() && pos(self.block[b].1).is_some()));
    let d = idx.len();
    let mut back = vec![usize::MAX; self.dim];
    for (k, &b) in idx.iter().enumerate() {
      back[b] = k;
    }
    let mut table = vec![0u64; d * d * d];
    for (x, &bx) in idx.iter().enumerate() {
      for (y, &by) in idx.iter().enumerate() {
        for (c, &v) in self.mul_basis(bx, by).iter().enumerate() {
          if v != 0 {
            table[(x * d + y) * d + back[c]] = v;
          }
        }
      }
    }
    let labels = idx.iter().map(|&b| self.labels[b].clone()).collect();
    let block = idx.iter().map(|&b| (pos(self.block[b].0).unwrap(), pos(self.block[b].1).unwrap())).collect();
    (Algebra::from_table(self.p, labels, s.len(), block, table), idx)
  }

  /// Quotient by a two-sided ideal spanned by block-homogeneous vectors and
  /// meeting no idempotent. The quotient basis is a subset of the original
  /// basis, chosen greedily with idempotents first. Returns the algebra and
  /// the chosen original indices.
  pub fn quotient(&self, ideal: &Subspace) -> Result<(Algebra, Vec<usize>)> {
    let p = self.p;
    let mut e = Echelon::new(p, self.dim);
    for v in ideal.vectors() {
      e.insert(v);
    }
    let mut chosen = Vec::new();
    for b in 0..self.dim {
      if e.insert(self.basis_vec(b)) {
        chosen.push(b);
      } else if b < self.n {
        return Err(Error::Input("the ideal contains an idempotent modulo the others".into()));
      }
    }
    let mut family = ideal.vectors();
    let k = family.len();
    family.extend(chosen.iter().map(|&b| self.basis_vec(b)));
    let co = Coordinates::new(p, self.dim, &family).expect("complement is independent");
    let d = chosen.len();
    let mut table = vec![0u64; d * d * d];
    for (x, &bx) in chosen.iter().enumerate() {
      for (y, &by) in chosen.iter().enumerate() {
        let c = co.coords_unchecked(self.mul_basis(bx, by));
        table[(x * d + y) * d..(x * d + y + 1) * d].copy_from_slice(&c[k..]);
      }
    }
    let labels = chosen.iter().map(|&b| self.labels[b].clone()).collect();
    let block = chosen.iter().map(|&b| self.block[b]).collect();
    Ok((Algebra::from_table(p, labels, self.n, block, table), chosen))
  }

  /// Whether a subspace is a two-sided ideal.
  pub fn is_ideal(&self, s: &Subspace) -> bool {
    let vs = s.vectors();
    (0..self.dim).all(|b| {
      let e = self.basis_vec(b);
      vs.iter().all(|v| s.contains(&self.mul(&e, v)) && s.contains(&self.mul(v, &e)))
    })
  }

  pub fn is_commutative(&self) -> bool {
    (0..self.dim).all(|a| (0..self.dim).all(|b| self.mul_basis(a, b) == self.mul_basis(b, a)))
  }

  /// Structure-constant equality (same basis order and blocks).
  pub fn same_table(&self, other: &Algebra) -> bool {
    self.p == other.p && self.n == other.n && self.block == other.block && self.table == other.table
  }
}
