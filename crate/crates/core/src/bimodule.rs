//! Bimodules, tensor products over an algebra, and the projective bimodules
//! `F_ij = A e_i (x) e_j A`.

use serde::Serialize;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field;
use crate::matrix::{Echelon, Matrix};
use crate::module::{combine, hom_space, LeftModule};
use crate::subspace::Subspace;

/// An `A`-`B` bimodule. `left[a]` is the matrix of `v -> a v` and `right[b]`
/// the matrix of `v -> v b`, so `right` is an anti-homomorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bimodule {
  p: u64,
  dim: usize,
  left: Vec<Matrix>,
  right: Vec<Matrix>,
}

impl Bimodule {
  pub fn new(p: u64, dim: usize, left: Vec<Matrix>, right: Vec<Matrix>) -> Self {
    Bimodule { p, dim, left, right }
  }

  /// `A` over itself.
  pub fn regular(a: &Algebra) -> Self {
    let d = a.dim();
    Bimodule {
      p: a.p(),
      dim: d,
      left: (0..d).map(|b| a.left_mult_basis(b)).collect(),
      right: (0..d).map(|b| a.right_mult_basis(b)).collect(),
    }
  }

  /// `A e_i (x)_k e_j A` on the pairs (basis of `A e_i`) x (basis of `e_j A`).
  pub fn projective(a: &Algebra, i: usize, j: usize) -> Result<Self> {
    if i >= a.n() || j >= a.n() {
      return Err(Error::Input(format!("index ({i},{j}) out of range")));
    }
    let cols = a.col_basis(i);
    let rows = a.row_basis(j);
    let p = a.p();
    let l: Vec<Matrix> = (0..a.dim()).map(|b| a.left_mult_basis(b).select_rows(&cols).select_cols(&cols)).collect();
    let r: Vec<Matrix> = (0..a.dim()).map(|b| a.right_mult_basis(b).select_rows(&rows).select_cols(&rows)).collect();
    let il = Matrix::identity(p, cols.len());
    let ir = Matrix::identity(p, rows.len());
    Ok(Bimodule {
      p,
      dim: cols.len() * rows.len(),
      left: l.iter().map(|m| m.kron(&ir)).collect(),
      right: r.iter().map(|m| il.kron(m)).collect(),
    })
  }

  /// A left module viewed as a bimodule over the ground field on the right.
  pub fn from_left(m: &LeftModule) -> Self {
    Bimodule { p: m.p(), dim: m.dim(), left: m.actions().to_vec(), right: vec![Matrix::identity(m.p(), m.dim())] }
  }

  pub fn to_left(&self) -> LeftModule {
    LeftModule::new(self.p, self.dim, self.left.clone())
  }

  /// The right action as a left module over the opposite algebra.
  pub fn right_as_left(&self) -> LeftModule {
    LeftModule::new(self.p, self.dim, self.right.clone())
  }

  pub fn p(&self) -> u64 {
    self.p
  }
  pub fn dim(&self) -> usize {
    self.dim
  }
  pub fn left(&self, a: usize) -> &Matrix {
    &self.left[a]
  }
  pub fn right(&self, b: usize) -> &Matrix {
    &self.right[b]
  }
  pub fn lefts(&self) -> &[Matrix] {
    &self.left
  }
  pub fn rights(&self) -> &[Matrix] {
    &self.right
  }
  pub fn left_vec(&self, x: &[u64]) -> Matrix {
    combine(self.p, self.dim, self.dim, &self.left, x)
  }
  pub fn right_vec(&self, x: &[u64]) -> Matrix {
    combine(self.p, self.dim, self.dim, &self.right, x)
  }

  /// Checks both module axioms and commutation of the actions.
  pub fn check(&self, a: &Algebra, b: &Algebra) -> Result<()> {
    self.to_left().check(a)?;
    if self.right.len() != b.dim() {
      return Err(Error::Dimension("right action count".into()));
    }
    let one = self.right_vec(&b.unit());
    if self.dim > 0 && !one.is_identity() {
      return Err(Error::Input("right unit does not act as the identity".into()));
    }
    for x in 0..b.dim() {
      for y in 0..b.dim() {
        // v (xy) = (v x) y.
        if self.right_vec(b.mul_basis(x, y)) != self.right[y].mul(&self.right[x]) {
          return Err(Error::Input(format!("right action is not multiplicative at ({x},{y})")));
        }
      }
    }
    for l in &self.left {
      for r in &self.right {
        if l.mul(r) != r.mul(l) {
          return Err(Error::Input("left and right actions do not commute".into()));
        }
      }
    }
    Ok(())
  }

  pub fn direct_sum(&self, other: &Bimodule) -> Bimodule {
    Bimodule {
      p: self.p,
      dim: self.dim + other.dim,
      left: self.left.iter().zip(&other.left).map(|(x, y)| x.direct_sum(y)).collect(),
      right: self.right.iter().zip(&other.right).map(|(x, y)| x.direct_sum(y)).collect(),
    }
  }

  /// `rad(A) X + X rad(B)`.
  pub fn radical(&self, a: &Algebra, b: &Algebra) -> Subspace {
    let mut mats: Vec<Matrix> = a.radical().vectors().iter().map(|r| self.left_vec(r)).collect();
    mats.extend(b.radical().vectors().iter().map(|r| self.right_vec(r)));
    Subspace::span_iter(self.p, self.dim, mats.iter().flat_map(|m| m.col_vecs()))
  }

  /// Sub-bimodule on an invariant subspace, in its echelon basis.
  pub fn restrict(&self, s: &Subspace) -> Bimodule {
    let b = s.basis_cols();
    let piv = s.pivots();
    let f = |m: &Matrix| m.mul(&b).select_rows(piv);
    Bimodule { p: self.p, dim: s.dim(), left: self.left.iter().map(f).collect(), right: self.right.iter().map(f).collect() }
  }

  pub fn quotient(&self, s: &Subspace) -> (Bimodule, Matrix) {
    let q = s.quotient_map();
    let sec = s.quotient_section();
    let f = |m: &Matrix| q.mul(m).mul(&sec);
    (Bimodule { p: self.p, dim: q.rows(), left: self.left.iter().map(f).collect(), right: self.right.iter().map(f).collect() }, q)
  }

  /// `dims[i][l] = dim e_i X f_l` for the idempotents of both sides.
  pub fn block_dims(&self, a: &Algebra, b: &Algebra) -> Vec<Vec<usize>> {
    (0..a.n())
      .map(|i| (0..b.n()).map(|l| if self.dim == 0 { 0 } else { self.left[i].mul(&self.right[l]).rank() }).collect())
      .collect()
  }

  /// Basis of bimodule maps `self -> other`.
  pub fn hom(&self, a: &Algebra, b: &Algebra, other: &Bimodule) -> Vec<Matrix> {
    let mut ms = Vec::new();
    let mut ns = Vec::new();
    for g in a.generators() {
      ms.push(self.left_vec(&g));
      ns.push(other.left_vec(&g));
    }
    for g in b.generators() {
      ms.push(self.right_vec(&g));
      ns.push(other.right_vec(&g));
    }
    hom_space(self.p, self.dim, other.dim, &ms, &ns)
  }

  pub fn is_homomorphism(&self, other: &Bimodule, f: &Matrix) -> bool {
    self.left.iter().zip(&other.left).all(|(m, n)| f.mul(m) == n.mul(f))
      && self.right.iter().zip(&other.right).all(|(m, n)| f.mul(m) == n.mul(f))
  }
}

/// `X (x)_B Y` with the data needed to transport maps.
///
/// `X` is presented through a projective cover of its right `B`-module
/// structure: `tops[u]` is a lift `tau_u` of a top basis vector lying in
/// `X e_{j_u}` and every element `x` of `X` is written `sum_u tau_u s_u(x)`.
/// The tensor product is the quotient of `Y^r` (slot `u` holding
/// `e_{j_u} Y`) by the relations coming from the kernel of the cover.
#[derive(Clone, Debug)]
pub struct Tensor {
  pub module: Bimodule,
  /// `dim Q x (dim X * dim Y)`: the canonical map `x (x) y -> x (x)_B y`.
  pub proj: Matrix,
  /// `(dim X * dim Y) x dim Q`: a section of `proj` by pure tensors.
  pub lift: Matrix,
  pres: Presentation,
  /// Quotient map `Y^r -> Q` and its section.
  q: Matrix,
  sec: Matrix,
  ydim: usize,
}

/// Right projective cover of a bimodule.
#[derive(Clone, Debug)]
pub struct Presentation {
  /// Idempotent index `j_u` for each generator.
  pub slots: Vec<usize>,
  /// Generators `tau_u` as a `dim X x r` matrix.
  pub tau: Matrix,
  /// Basis of `e_{j_u} B` for each slot.
  pub slot_basis: Vec<Vec<usize>>,
  /// `dim P x dim X`, with `pi * section = I`.
  pub section: Matrix,
  /// Kernel of the cover as columns in `P` coordinates.
  pub kernel: Matrix,
  offsets: Vec<usize>,
}

impl Presentation {
  pub fn new(x: &Bimodule, b: &Algebra) -> Self {
    let p = x.p;
    let d = x.dim;
    let mut e = Echelon::new(p, d);
    for r in b.radical().vectors() {
      for v in x.right_vec(&r).col_vecs() {
        e.insert(v);
      }
    }
    let mut slots = Vec::new();
    let mut taus = Vec::new();
    for j in 0..b.n() {
      for v in x.right[j].col_vecs() {
        if e.insert(v.clone()) {
          slots.push(j);
          taus.push(v);
        }
      }
    }
    let slot_basis: Vec<Vec<usize>> = slots.iter().map(|&j| b.row_basis(j)).collect();
    let mut offsets = vec![0];
    for s in &slot_basis {
      offsets.push(offsets.last().unwrap() + s.len());
    }
    let pdim = *offsets.last().unwrap();
    let mut pi = Matrix::zeros(p, d, pdim);
    for (u, t) in taus.iter().enumerate() {
      for (k, &bb) in slot_basis[u].iter().enumerate() {
        let img = x.right[bb].mul_vec(t);
        for (row, &v) in img.iter().enumerate() {
          pi.set(row, offsets[u] + k, v);
        }
      }
    }
    let section = if d == 0 {
      Matrix::zeros(p, pdim, 0)
    } else {
      pi.solve(&Matrix::identity(p, d)).expect("projective cover is surjective")
    };
    let kernel = if pdim == 0 { Matrix::zeros(p, 0, 0) } else { pi.kernel() };
    let tau = if taus.is_empty() { Matrix::zeros(p, d, 0) } else { Matrix::from_cols(p, d, &taus) };
    Presentation { slots, tau, slot_basis, section, kernel, offsets }
  }

  pub fn rank(&self) -> usize {
    self.slots.len()
  }

  /// True when the cover is an isomorphism, so `X` is right projective.
  pub fn is_projective(&self) -> bool {
    self.kernel.cols() == 0
  }

  /// For `x` in `X`, the components `s_u(x)` as algebra vectors.
  pub fn components(&self, b: &Algebra, x: &[u64]) -> Vec<Vec<u64>> {
    let c = self.section.mul_vec(x);
    self.split(b, &c)
  }

  /// Adds the blocks `y -> s_v(x) y` to `m` in block column `col`, given the
  /// section coordinates `csec` of `x`.
  fn place(&self, y: &Bimodule, csec: &[u64], col: usize, m: &mut Matrix) {
    let dy = y.dim;
    for (v, basis) in self.slot_basis.iter().enumerate() {
      for (k, &bb) in basis.iter().enumerate() {
        let coef = csec[self.offsets[v] + k];
        if coef != 0 {
          m.add_block_scaled(v * dy, col * dy, coef, &y.left[bb]);
        }
      }
    }
  }

  fn split(&self, b: &Algebra, c: &[u64]) -> Vec<Vec<u64>> {
    (0..self.rank())
      .map(|u| {
        let mut v = b.zero_vec();
        for (k, &bb) in self.slot_basis[u].iter().enumerate() {
          v[bb] = c[self.offsets[u] + k];
        }
        v
      })
      .collect()
  }
}

/// Tensor product `X (x)_B Y` of an `A`-`B` bimodule and a `B`-`C` bimodule.
pub fn tensor(x: &Bimodule, b: &Algebra, y: &Bimodule) -> Tensor {
  tensor_with(x, Presentation::new(x, b), b, y)
}

/// Tensor product reusing a precomputed presentation of `X`.
pub fn tensor_with(x: &Bimodule, pres: Presentation, b: &Algebra, y: &Bimodule) -> Tensor {
  let p = x.p;
  let (dx, dy) = (x.dim, y.dim);
  let r = pres.rank();
  let amb = r * dy;
  let ly = |v: &[u64]| y.left_vec(v);
  // Relations: slot u only holds e_{j_u} Y, plus the kernel of the cover.
  let mut rel = Echelon::new(p, amb);
  for (u, &j) in pres.slots.iter().enumerate() {
    let mut one_minus = b.unit();
    one_minus[j] = field::sub(one_minus[j], 1, p);
    let m = ly(&one_minus);
    for v in m.col_vecs() {
      let mut w = vec![0u64; amb];
      w[u * dy..(u + 1) * dy].copy_from_slice(&v);
      rel.insert(w);
    }
  }
  for kc in pres.kernel.col_vecs() {
    let comps = pres.split(b, &kc);
    let mats: Vec<Matrix> = comps.iter().map(|c| ly(c)).collect();
    for yb in 0..dy {
      let mut w = vec![0u64; amb];
      for (u, m) in mats.iter().enumerate() {
        for row in 0..dy {
          w[u * dy + row] = m.get(row, yb);
        }
      }
      rel.insert(w);
    }
  }
  let (relm, _) = rel.finish();
  let rels = Subspace::from_rows(&relm);
  let q = rels.quotient_map();
  let sec = rels.quotient_section();
  let qd = q.rows();

  // Maps Y^r -> Y^r induced by a map of presentations.
  let transport = |images: &[Vec<u64>]| -> Matrix {
    // images[u] = f(tau_u) in the target of f, already decomposed.
    let mut m = Matrix::zeros(p, amb, amb);
    for (u, img) in images.iter().enumerate() {
      pres.place(y, &pres.section.mul_vec(img), u, &mut m);
    }
    m
  };
  let taus = pres.tau.col_vecs();
  let left: Vec<Matrix> = x
    .left
    .iter()
    .map(|la| {
      let imgs: Vec<Vec<u64>> = taus.iter().map(|t| la.mul_vec(t)).collect();
      q.mul(&transport(&imgs)).mul(&sec)
    })
    .collect();
  let right: Vec<Matrix> = y
    .right
    .iter()
    .map(|rc| {
      let mut m = Matrix::zeros(p, amb, amb);
      for u in 0..r {
        for rr in 0..dy {
          for cc in 0..dy {
            let val = rc.get(rr, cc);
            if val != 0 {
              m.set(u * dy + rr, u * dy + cc, val);
            }
          }
        }
      }
      q.mul(&m).mul(&sec)
    })
    .collect();
  // proj: column (xb, yc) holds slot u = s_u(x_b) y_c.
  let mut w = Matrix::zeros(p, amb, dx * dy);
  for xb in 0..dx {
    pres.place(y, &pres.section.col(xb), xb, &mut w);
  }
  let proj = q.mul(&w);
  let mut lift = Matrix::zeros(p, dx * dy, qd);
  for (k, f) in rels.free_cols().into_iter().enumerate() {
    let (u, yb) = (f / dy, f % dy);
    for xr in 0..dx {
      let t = pres.tau.get(xr, u);
      if t != 0 {
        lift.set(xr * dy + yb, k, t);
      }
    }
  }
  Tensor { module: Bimodule { p, dim: qd, left, right }, proj, lift, pres, q, sec, ydim: dy }
}

impl Tensor {
  pub fn dim(&self) -> usize {
    self.module.dim
  }

  pub fn presentation(&self) -> &Presentation {
    &self.pres
  }

  /// `f (x) id_Y : X (x) Y -> X' (x) Y` for a bimodule map `f : X -> X'`,
  /// where `target` is `X' (x) Y` for the same `Y`.
  pub fn map_left(&self, y: &Bimodule, f: &Matrix, target: &Tensor) -> Matrix {
    let p = f.p();
    let dy = self.ydim;
    let amb_t = target.pres.rank() * dy;
    let amb_s = self.pres.rank() * dy;
    let mut m = Matrix::zeros(p, amb_t, amb_s);
    for (u, t) in self.pres.tau.col_vecs().iter().enumerate() {
      let img = f.mul_vec(t);
      target.pres.place(y, &target.pres.section.mul_vec(&img), u, &mut m);
    }
    target.q.mul(&m).mul(&self.sec)
  }

  /// `id_X (x) g : X (x) Y -> X (x) Y'` for a map `g : Y -> Y'` of left
  /// `B`-modules, where both tensors share the presentation of `X`.
  pub fn map_right(&self, g: &Matrix, target: &Tensor) -> Matrix {
    let r = self.pres.rank();
    assert_eq!(r, target.pres.rank());
    let blk = (0..r).fold(Matrix::zeros(g.p(), 0, 0), |acc, _| acc.direct_sum(g));
    target.q.mul(&blk).mul(&self.sec)
  }

  /// Left components of the element `w` of the tensor product: slot `u`
  /// holds `e_{j_u} y_u` with `w = sum_u tau_u (x) y_u`.
  pub fn slot_components(&self, b: &Algebra, y: &Bimodule, w: &[u64]) -> Vec<Vec<u64>> {
    let full = self.sec.mul_vec(w);
    let dy = self.ydim;
    self
      .pres
      .slots
      .iter()
      .enumerate()
      .map(|(u, &j)| y.left_vec(&b.basis_vec(j)).mul_vec(&full[u * dy..(u + 1) * dy]))
      .collect()
  }
}

/// Multiplicities of the identity and projective bimodules.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decomposition {
  pub identity: usize,
  pub proj: Vec<Vec<usize>>,
}

/// Decomposes an `A`-`A` bimodule assumed to be a sum of copies of `A` and
/// of the `F_il`, from its top and dimension accounting.
pub fn decompose(a: &Algebra, x: &Bimodule) -> Result<Decomposition> {
  let n = a.n();
  let rad = x.radical(a, a);
  let (top, _) = x.quotient(&rad);
  let t = top.block_dims(a, a);
  let cd: Vec<usize> = (0..n).map(|i| a.col_basis(i).len()).collect();
  let rd: Vec<usize> = (0..n).map(|i| a.row_basis(i).len()).collect();
  let tsum: i64 = (0..n).flat_map(|i| (0..n).map(move |l| (i, l))).map(|(i, l)| (t[i][l] * cd[i] * rd[l]) as i64).sum();
  let denom: i64 = a.dim() as i64 - (0..n).map(|i| (cd[i] * rd[i]) as i64).sum::<i64>();
  let num = x.dim() as i64 - tsum;
  if denom == 0 {
    return Err(Error::Precondition("semisimple algebra: identity and projectives coincide".into()));
  }
  if num % denom != 0 || num / denom < 0 {
    return Err(Error::Accounting(format!("dimension {} is not accounted for by the top", x.dim())));
  }
  let u = (num / denom) as usize;
  let mut proj = t.clone();
  for (i, row) in proj.iter_mut().enumerate() {
    if row[i] < u {
      return Err(Error::Accounting("identity multiplicity exceeds the diagonal of the top".into()));
    }
    row[i] -= u;
  }
  // Cross-check every block dimension.
  let bd = a.block_dims();
  let xd = x.block_dims(a, a);
  for p in 0..n {
    for q in 0..n {
      let mut exp = u * bd[p][q];
      for i in 0..n {
        for l in 0..n {
          exp += proj[i][l] * bd[p][i] * bd[l][q];
        }
      }
      if exp != xd[p][q] {
        return Err(Error::Accounting(format!("block ({p},{q}) has dimension {} but the decomposition predicts {exp}", xd[p][q])));
      }
    }
  }
  Ok(Decomposition { identity: u, proj })
}

/// The map `⊕_t F_{i_t l_t} -> Z` sending the generator `e_i (x) e_l` of
/// summand `t` to `gens[t]`, which must lie in `e_i Z e_l`.
pub fn map_from_projectives(a: &Algebra, z: &Bimodule, gens: &[((usize, usize), Vec<u64>)]) -> Matrix {
  let mut cols = Vec::new();
  for ((i, l), v) in gens {
    for x in a.col_basis(*i) {
      let lv = z.left(x).mul_vec(v);
      for y in a.row_basis(*l) {
        cols.push(z.right(y).mul_vec(&lv));
      }
    }
  }
  Matrix::from_cols(z.p, z.dim, &cols)
}

/// Isomorphism `⊕_t F_{i_t l_t} -> Z` from random generators in the corners
/// `e_i Z e_l`, or `None` when no attempt is invertible.
pub fn projective_isomorphism(a: &Algebra, z: &Bimodule, labels: &[(usize, usize)], rng: &mut rand_chacha::ChaCha8Rng, tries: usize) -> Option<Matrix> {
  use rand::Rng;
  let total: usize = labels.iter().map(|&(i, l)| a.col_basis(i).len() * a.row_basis(l).len()).sum();
  if total != z.dim {
    return None;
  }
  let corners: Vec<Matrix> = labels.iter().map(|&(i, l)| z.left(i).mul(z.right(l))).collect();
  for _ in 0..tries {
    let gens: Vec<((usize, usize), Vec<u64>)> = labels
      .iter()
      .zip(&corners)
      .map(|(&lab, c)| {
        let r: Vec<u64> = (0..z.dim).map(|_| rng.gen_range(0..z.p)).collect();
        (lab, c.mul_vec(&r))
      })
      .collect();
    let f = map_from_projectives(a, z, &gens);
    if f.is_invertible() {
      return Some(f);
    }
  }
  None
}

/// The adjoint label `F_ij* = F_{sigma^{-1}(j), i}`.
pub fn right_adjoint(sigma: &[usize], i: usize, j: usize) -> (usize, usize) {
  let inv = crate::cells::invert(sigma);
  (inv[j], i)
}

/// The inverse label `*F_ij = F_{j, sigma(i)}`.
pub fn left_adjoint(sigma: &[usize], i: usize, j: usize) -> (usize, usize) {
  (j, sigma[i])
}

/// The simple top `Q_ij` of `F_ij` and the presentation
/// `beta_ij : G_ij -> F_ij` from a projective cover of the radical.
#[derive(Clone, Debug)]
pub struct SimpleQuotient {
  pub q: Bimodule,
  /// Quotient map `F_ij -> Q_ij`.
  pub quotient_map: Matrix,
  /// Labels of the summands of `G_ij`.
  pub cover: Vec<(usize, usize)>,
  pub g: Bimodule,
  pub beta: Matrix,
}

pub fn simple_quotient(a: &Algebra, i: usize, j: usize) -> Result<SimpleQuotient> {
  let f = Bimodule::projective(a, i, j)?;
  let rad = f.radical(a, a);
  let (q, qm) = f.quotient(&rad);
  // Projective cover of the radical: lift a basis of rad / rad(rad).
  let rm = f.restrict(&rad);
  let rr = rm.radical(a, a);
  let mut e = Echelon::new(a.p(), rad.dim());
  for v in rr.vectors() {
    e.insert(v);
  }
  let mut cover = Vec::new();
  let mut gens = Vec::new();
  for s in 0..a.n() {
    for t in 0..a.n() {
      let m = rm.left[s].mul(&rm.right[t]);
      for v in m.col_vecs() {
        if e.insert(v.clone()) {
          cover.push((s, t));
          gens.push(rad.basis_cols().mul_vec(&v));
        }
      }
    }
  }
  let mut g = Bimodule::new(a.p(), 0, vec![Matrix::zeros(a.p(), 0, 0); a.dim()], vec![Matrix::zeros(a.p(), 0, 0); a.dim()]);
  let mut beta = Matrix::zeros(a.p(), f.dim(), 0);
  for (&(s, t), gv) in cover.iter().zip(&gens) {
    let fst = Bimodule::projective(a, s, t)?;
    // x (x) y -> x g y on the pure tensor basis of F_st.
    let cols = a.col_basis(s);
    let rows = a.row_basis(t);
    let mut m = Matrix::zeros(a.p(), f.dim(), fst.dim());
    for (ci, &xb) in cols.iter().enumerate() {
      for (ri, &yb) in rows.iter().enumerate() {
        let v = f.left[xb].mul(&f.right[yb]).mul_vec(gv);
        for (row, &val) in v.iter().enumerate() {
          m.set(row, ci * rows.len() + ri, val);
        }
      }
    }
    g = g.direct_sum(&fst);
    beta = beta.hstack(&m);
  }
  Ok(SimpleQuotient { q, quotient_map: qm, cover, g, beta })
}

#[cfg(test)]
mod tests {
  use super::*;
  use crate::corpus;

  #[test]
  fn projective_dimensions() {
    assert_eq!(Bimodule::projective(&corpus::truncated_polynomial(7, 2), 0, 0).unwrap().dim(), 4);
    assert_eq!(Bimodule::projective(&corpus::nakayama(7, 2, 2), 0, 1).unwrap().dim(), 4);
    assert_eq!(Bimodule::projective(&corpus::truncated_polynomial(11, 3), 0, 0).unwrap().dim(), 9);
  }

  #[test]
  fn projective_bimodules_are_bimodules() {
    let a = corpus::nakayama(1009, 3, 2);
    for i in 0..3 {
      for j in 0..3 {
        Bimodule::projective(&a, i, j).unwrap().check(&a, &a).unwrap();
      }
    }
  }

  #[test]
  fn dual_numbers_square() {
    let a = corpus::truncated_polynomial(7, 2);
    let f = Bimodule::projective(&a, 0, 0).unwrap();
    let t = tensor(&f, &a, &f);
    assert_eq!(t.dim(), 8);
    t.module.check(&a, &a).unwrap();
    let d = decompose(&a, &t.module).unwrap();
    assert_eq!(d, Decomposition { identity: 0, proj: vec![vec![2]] });
  }

  #[test]
  fn regular_decomposes_as_identity() {
    let a = corpus::nakayama(1009, 2, 2);
    let d = decompose(&a, &Bimodule::regular(&a)).unwrap();
    assert_eq!(d.identity, 1);
    assert_eq!(d.proj, vec![vec![0, 0], vec![0, 0]]);
  }

  #[test]
  fn unit_law_intertwiner() {
    let a = corpus::nakayama(1009, 2, 2);
    let x = Bimodule::projective(&a, 0, 1).unwrap();
    let t = tensor(&Bimodule::regular(&a), &a, &x);
    assert_eq!(t.dim(), x.dim());
    // a (x) v -> a v.
    let mut mult = Matrix::zeros(a.p(), x.dim(), a.dim() * x.dim());
    for ab in 0..a.dim() {
      for v in 0..x.dim() {
        let img = x.left(ab).col(v);
        for (r, &val) in img.iter().enumerate() {
          mult.set(r, ab * x.dim() + v, val);
        }
      }
    }
    let phi = mult.mul(&t.lift);
    assert!(phi.is_invertible());
    assert!(t.module.is_homomorphism(&x, &phi));
  }

  #[test]
  fn simple_quotients_are_one_dimensional() {
    let a = corpus::nakayama(1009, 2, 3);
    for i in 0..2 {
      for j in 0..2 {
        let s = simple_quotient(&a, i, j).unwrap();
        assert_eq!(s.q.dim(), 1);
        // coker(beta) = Q.
        let im = Subspace::from_cols(&s.beta);
        assert_eq!(im.dim() + 1, Bimodule::projective(&a, i, j).unwrap().dim());
        assert!(s.g.is_homomorphism(&Bimodule::projective(&a, i, j).unwrap(), &s.beta));
      }
    }
  }
}
