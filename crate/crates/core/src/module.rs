//! Finite-dimensional left modules given by action matrices.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field;
use crate::matrix::Matrix;
use crate::subspace::Subspace;

/// A left module: `act[b]` is the matrix of the basis element `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftModule {
  p: u64,
  dim: usize,
  act: Vec<Matrix>,
}

/// Linear combination of matrices.
pub fn combine(p: u64, rows: usize, cols: usize, mats: &[Matrix], coeffs: &[u64]) -> Matrix {
  let mut out = Matrix::zeros(p, rows, cols);
  for (m, &c) in mats.iter().zip(coeffs) {
    if c != 0 {
      out.axpy(c, m);
    }
  }
  out
}

impl LeftModule {
  pub fn new(p: u64, dim: usize, act: Vec<Matrix>) -> Self {
    LeftModule { p, dim, act }
  }

  pub fn zero(a: &Algebra) -> Self {
    LeftModule { p: a.p(), dim: 0, act: vec![Matrix::zeros(a.p(), 0, 0); a.dim()] }
  }

  pub fn regular(a: &Algebra) -> Self {
    LeftModule { p: a.p(), dim: a.dim(), act: (0..a.dim()).map(|b| a.left_mult_basis(b)).collect() }
  }

  /// The indecomposable projective `A e_i` on the basis elements of block
  /// column `i`.
  pub fn projective(a: &Algebra, i: usize) -> Self {
    LeftModule::regular(a).restrict(&Self::coordinate_space(a.p(), a.dim(), &a.col_basis(i)))
  }

  /// The simple module at vertex `i`.
  pub fn simple(a: &Algebra, i: usize) -> Self {
    let chi = a.character_map();
    let act = (0..a.dim()).map(|b| Matrix::from_vec(a.p(), 1, 1, vec![chi.get(i, b)])).collect();
    LeftModule { p: a.p(), dim: 1, act }
  }

  pub fn coordinate_space(p: u64, n: usize, idx: &[usize]) -> Subspace {
    let vs: Vec<Vec<u64>> = idx
      .iter()
      .map(|&i| {
        let mut v = vec![0; n];
        v[i] = 1;
        v
      })
      .collect();
    Subspace::span(p, n, &vs)
  }

  pub fn p(&self) -> u64 {
    self.p
  }
  pub fn dim(&self) -> usize {
    self.dim
  }
  pub fn act(&self, b: usize) -> &Matrix {
    &self.act[b]
  }
  pub fn actions(&self) -> &[Matrix] {
    &self.act
  }

  /// Matrix of an arbitrary algebra element.
  pub fn act_vec(&self, x: &[u64]) -> Matrix {
    combine(self.p, self.dim, self.dim, &self.act, x)
  }

  /// Checks that the actions form a unital representation.
  pub fn check(&self, a: &Algebra) -> Result<()> {
    if self.act.len() != a.dim() {
      return Err(Error::Dimension(format!("{} action matrices for an algebra of dimension {}", self.act.len(), a.dim())));
    }
    for m in &self.act {
      if m.rows() != self.dim || m.cols() != self.dim {
        return Err(Error::Dimension("action matrix has the wrong shape".into()));
      }
    }
    let one = self.act_vec(&a.unit());
    if !one.is_identity() && self.dim > 0 {
      return Err(Error::Input("unit does not act as the identity".into()));
    }
    for x in 0..a.dim() {
      for y in 0..a.dim() {
        let lhs = self.act[x].mul(&self.act[y]);
        let rhs = self.act_vec(a.mul_basis(x, y));
        if lhs != rhs {
          return Err(Error::Input(format!("action is not multiplicative at ({x},{y})")));
        }
      }
    }
    Ok(())
  }

  /// Smallest submodule containing `vs`.
  pub fn generate(&self, a: &Algebra, vs: &[Vec<u64>]) -> Subspace {
    let gens: Vec<Matrix> = a.generators().iter().map(|g| self.act_vec(g)).collect();
    let mut cur = Subspace::span(self.p, self.dim, vs);
    let mut frontier = cur.vectors();
    while !frontier.is_empty() {
      let mut next = cur.clone();
      let mut added = Vec::new();
      for v in &frontier {
        for g in &gens {
          let w = g.mul_vec(v);
          if !next.contains(&w) {
            next = next.sum(&Subspace::span(self.p, self.dim, std::slice::from_ref(&w)));
            added.push(w);
          }
        }
      }
      cur = next;
      frontier = added;
    }
    cur
  }

  pub fn is_submodule(&self, a: &Algebra, s: &Subspace) -> bool {
    let gens = a.generators();
    s.vectors().iter().all(|v| gens.iter().all(|g| s.contains(&self.act_vec(g).mul_vec(v))))
  }

  /// The submodule `s` with the induced action, in the echelon basis of `s`.
  pub fn restrict(&self, s: &Subspace) -> LeftModule {
    let b = s.basis_cols();
    let piv = s.pivots().to_vec();
    let act = self
      .act
      .iter()
      .map(|m| {
        let img = m.mul(&b);
        // Coordinates in an echelon basis are the pivot entries.
        img.select_rows(&piv)
      })
      .collect();
    LeftModule { p: self.p, dim: s.dim(), act }
  }

  /// The quotient by a submodule, together with the quotient map.
  pub fn quotient(&self, s: &Subspace) -> (LeftModule, Matrix) {
    let q = s.quotient_map();
    let sec = s.quotient_section();
    let act = self.act.iter().map(|m| q.mul(m).mul(&sec)).collect();
    (LeftModule { p: self.p, dim: q.rows(), act }, q)
  }

  pub fn direct_sum(&self, other: &LeftModule) -> LeftModule {
    let act = self.act.iter().zip(&other.act).map(|(x, y)| x.direct_sum(y)).collect();
    LeftModule { p: self.p, dim: self.dim + other.dim, act }
  }

  pub fn direct_sum_all(a: &Algebra, ms: &[LeftModule]) -> LeftModule {
    ms.iter().fold(LeftModule::zero(a), |acc, m| acc.direct_sum(m))
  }

  /// `rad(A) M`.
  pub fn radical(&self, a: &Algebra) -> Subspace {
    let rad = a.radical().vectors();
    let mats: Vec<Matrix> = rad.iter().map(|r| self.act_vec(r)).collect();
    Subspace::span_iter(self.p, self.dim, mats.iter().flat_map(|m| m.col_vecs()))
  }

  /// `{v : rad(A) v = 0}`.
  pub fn socle(&self, a: &Algebra) -> Subspace {
    if self.dim == 0 {
      return Subspace::zero(self.p, 0);
    }
    let rad = a.radical().vectors();
    let mut rows = Vec::new();
    for r in &rad {
      rows.extend(self.act_vec(r).row_vecs());
    }
    if rows.is_empty() {
      return Subspace::full(self.p, self.dim);
    }
    Subspace::from_cols(&Matrix::from_rows(self.p, self.dim, &rows).kernel())
  }

  /// Radical series re-indexed increasingly: `0 = R_k ⊂ ... ⊂ R_0 = M`
  /// returned as `[R_k, ..., R_0]`.
  pub fn radical_series(&self, a: &Algebra) -> Vec<Subspace> {
    let mut chain = vec![Subspace::full(self.p, self.dim)];
    let rad = a.radical().vectors();
    let mats: Vec<Matrix> = rad.iter().map(|r| self.act_vec(r)).collect();
    while !chain.last().unwrap().is_zero() {
      let cur = chain.last().unwrap().clone();
      let next = Subspace::span_iter(self.p, self.dim, mats.iter().flat_map(|m| cur.vectors().into_iter().map(move |v| m.mul_vec(&v))));
      chain.push(next);
    }
    chain.reverse();
    chain
  }

  /// Socle series `0 = S_0 ⊂ S_1 ⊂ ... ⊂ S_k = M`.
  pub fn socle_series(&self, a: &Algebra) -> Vec<Subspace> {
    let mut chain = vec![Subspace::zero(self.p, self.dim)];
    while !chain.last().unwrap().is_full() {
      let cur = chain.last().unwrap().clone();
      let (quo, q) = self.quotient(&cur);
      let soc = quo.socle(a);
      // Preimage of the socle of the quotient.
      let next = Subspace::preimage(&q, &soc);
      chain.push(next);
    }
    chain
  }

  pub fn loewy_length(&self, a: &Algebra) -> usize {
    self.radical_series(a).len() - 1
  }

  /// `dims[i] = dim e_i (M / rad M)`.
  pub fn top_decomposition(&self, a: &Algebra) -> Vec<usize> {
    let (top, _) = self.quotient(&self.radical(a));
    top.idempotent_ranks(a)
  }

  /// `dims[i] = dim e_i M`.
  pub fn idempotent_ranks(&self, a: &Algebra) -> Vec<usize> {
    (0..a.n()).map(|i| self.act[i].rank()).collect()
  }

  /// Composition multiplicities, summed over the layers of the radical
  /// series.
  pub fn composition_multiplicities(&self, a: &Algebra) -> Vec<usize> {
    let series = self.radical_series(a);
    let mut out = vec![0; a.n()];
    for w in series.windows(2) {
      let sub = self.restrict(&w[1]);
      let inner = w[0].basis_cols();
      // w[0] inside w[1], in the coordinates of w[1].
      let inner_coords = Subspace::from_cols(&inner.select_rows(w[1].pivots()));
      let (layer, _) = sub.quotient(&inner_coords);
      for (o, d) in out.iter_mut().zip(layer.idempotent_ranks(a)) {
        *o += d;
      }
    }
    out
  }

  /// Basis of `Hom_A(self, other)`, as `other.dim x self.dim` matrices.
  pub fn hom(&self, a: &Algebra, other: &LeftModule) -> Vec<Matrix> {
    let gens = a.generators();
    let ms: Vec<Matrix> = gens.iter().map(|g| self.act_vec(g)).collect();
    let ns: Vec<Matrix> = gens.iter().map(|g| other.act_vec(g)).collect();
    hom_space(self.p, self.dim, other.dim, &ms, &ns)
  }

  /// An isomorphism `self -> other`, found as a random combination of a Hom
  /// basis; `None` when none was found in `tries` attempts.
  pub fn find_isomorphism(&self, a: &Algebra, other: &LeftModule, rng: &mut ChaCha8Rng, tries: usize) -> Option<Matrix> {
    if self.dim != other.dim {
      return None;
    }
    if self.dim == 0 {
      return Some(Matrix::zeros(self.p, 0, 0));
    }
    let basis = self.hom(a, other);
    random_invertible(self.p, self.dim, &basis, rng, tries)
  }

  /// Checks that `f` intertwines the actions.
  pub fn is_homomorphism(&self, other: &LeftModule, f: &Matrix) -> bool {
    self.act.iter().zip(&other.act).all(|(m, n)| f.mul(m) == n.mul(f))
  }

  /// Random submodule generated by `k` random vectors.
  pub fn random_submodule(&self, a: &Algebra, rng: &mut ChaCha8Rng, k: usize) -> Subspace {
    let vs: Vec<Vec<u64>> = (0..k).map(|_| (0..self.dim).map(|_| rng.gen_range(0..self.p)).collect()).collect();
    self.generate(a, &vs)
  }
}

/// Solves `X M_g = N_g X` for all `g`.
pub fn hom_space(p: u64, m: usize, n: usize, ms: &[Matrix], ns: &[Matrix]) -> Vec<Matrix> {
  if m == 0 || n == 0 {
    return Vec::new();
  }
  let unknowns = n * m;
  let mut rows: Vec<Vec<u64>> = Vec::new();
  for (mg, ng) in ms.iter().zip(ns) {
    for r in 0..n {
      for c in 0..m {
        let mut row = vec![0u64; unknowns];
        for k in 0..m {
          let v = mg.get(k, c);
          if v != 0 {
            row[r * m + k] = field::add(row[r * m + k], v, p);
          }
        }
        for k in 0..n {
          let v = ng.get(r, k);
          if v != 0 {
            row[k * m + c] = field::sub(row[k * m + c], v, p);
          }
        }
        if row.iter().any(|&x| x != 0) {
          rows.push(row);
        }
      }
    }
  }
  let ker = if rows.is_empty() {
    Matrix::identity(p, unknowns)
  } else {
    Matrix::from_rows(p, unknowns, &rows).kernel()
  };
  ker.col_vecs().into_iter().map(|v| Matrix::from_vec(p, n, m, v)).collect()
}

/// Random combination of `basis` (square `dim x dim` matrices) that is
/// invertible.
pub fn random_invertible(p: u64, dim: usize, basis: &[Matrix], rng: &mut ChaCha8Rng, tries: usize) -> Option<Matrix> {
  if basis.is_empty() {
    return None;
  }
  for _ in 0..tries {
    let coeffs: Vec<u64> = basis.iter().map(|_| rng.gen_range(0..p)).collect();
    let f = combine(p, dim, dim, basis, &coeffs);
    if f.is_invertible() {
      return Some(f);
    }
  }
  None
}

#[cfg(test)]
mod tests {
  use super::*;
  use crate::corpus;
  use rand::SeedableRng;

  #[test]
  fn regular_module_is_a_module() {
    let a = corpus::nakayama(1009, 2, 2);
    LeftModule::regular(&a).check(&a).unwrap();
    LeftModule::projective(&a, 0).check(&a).unwrap();
    LeftModule::simple(&a, 1).check(&a).unwrap();
  }

  #[test]
  fn socle_chain_of_truncated_cubic() {
    // Oracle: annihilators computed directly from the monomial basis.
    let a = corpus::truncated_polynomial(7, 3);
    let m = LeftModule::regular(&a);
    let s = m.socle_series(&a);
    let exp = vec![
      Subspace::zero(7, 3),
      Subspace::span(7, 3, &[vec![0, 0, 1]]),
      Subspace::span(7, 3, &[vec![0, 1, 0], vec![0, 0, 1]]),
      Subspace::full(7, 3),
    ];
    assert_eq!(s, exp);
    assert_eq!(m.loewy_length(&a), 3);
  }

  #[test]
  fn multiplicities_and_tops() {
    let a = corpus::nakayama(1009, 2, 2);
    let m = LeftModule::regular(&a);
    assert_eq!(m.composition_multiplicities(&a), vec![2, 2]);
    assert_eq!(LeftModule::projective(&a, 1).top_decomposition(&a), vec![0, 1]);
    let t = corpus::truncated_polynomial(7, 3);
    assert_eq!(LeftModule::regular(&t).composition_multiplicities(&t), vec![3]);
  }

  #[test]
  fn hom_between_projectives() {
    // Hom(Ae_i, Ae_j) = e_i A e_j.
    let a = corpus::nakayama(1009, 3, 2);
    let dims = a.block_dims();
    for i in 0..3 {
      for j in 0..3 {
        let h = LeftModule::projective(&a, i).hom(&a, &LeftModule::projective(&a, j));
        assert_eq!(h.len(), dims[i][j]);
      }
    }
  }

  #[test]
  fn isomorphism_found() {
    let a = corpus::nakayama(1009, 2, 2);
    let m = LeftModule::regular(&a);
    let n = LeftModule::projective(&a, 0).direct_sum(&LeftModule::projective(&a, 1));
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let f = m.find_isomorphism(&a, &n, &mut rng, 10).unwrap();
    assert!(m.is_homomorphism(&n, &f));
  }
}
