//! Finitary 2-representations of `C_A` presented by bimodules over a base
//! algebra `C`, with the action of `End(F) = A (x) A^op`.
//!
//! The functor `F_ij` acts on `C`-mod as `T_ij (x)_C -`. The endomorphism
//! action is stored through its two tensor factors: `end_left[a]` is
//! `E(a, 1)` and `end_right[b]` is `E(1, b)`, with `E(a, b) = E(a, 1) E(1, b)`
//! and `E(a, b) E(a', b') = E(a' a, b b')`. For the defining representation
//! `E(a, b)` sends `x (x) y` to `x a (x) b y`.

use serde::Serialize;

use crate::algebra::Algebra;
use crate::bimodule::{tensor, Bimodule, Presentation};
use crate::cells::{self, CellStructure, CompositionTable};
use crate::corpus;
use crate::error::{Error, Result};
use crate::filtration::AnnihilatorSet;
use crate::iso::{self, IsoVerdict};
use crate::matrix::{Echelon, Matrix};
use crate::module::{combine, LeftModule};
use crate::subspace::Subspace;

#[derive(Clone, Debug)]
pub struct TwoRep {
  pub a: Algebra,
  pub c: Algebra,
  /// `T_ij` at index `i * n + j`.
  pub blocks: Vec<Bimodule>,
  /// Offsets of the blocks inside `t`.
  pub offsets: Vec<usize>,
  /// `T = sum T_ij`.
  pub t: Bimodule,
  pub end_left: Vec<Matrix>,
  pub end_right: Vec<Matrix>,
}

fn sum_bimodules(c: &Algebra, xs: &[Bimodule]) -> Bimodule {
  let p = c.p();
  let empty = Bimodule::new(p, 0, vec![Matrix::zeros(p, 0, 0); c.dim()], vec![Matrix::zeros(p, 0, 0); c.dim()]);
  xs.iter().fold(empty, |acc, x| acc.direct_sum(x))
}

/// Whether a left module is projective: `dim M = sum_i top_i dim(C e_i)`.
pub fn is_left_projective(c: &Algebra, m: &LeftModule) -> bool {
  let top = m.top_decomposition(c);
  let total: usize = top.iter().enumerate().map(|(i, &t)| t * c.col_basis(i).len()).sum();
  total == m.dim()
}

/// Whether the right action makes `x` a projective right module.
pub fn is_right_projective(c: &Algebra, x: &Bimodule) -> bool {
  Presentation::new(x, c).is_projective()
}

impl TwoRep {
  pub fn new(a: Algebra, c: Algebra, blocks: Vec<Bimodule>, end_left: Vec<Matrix>, end_right: Vec<Matrix>) -> Result<Self> {
    let n = a.n();
    if blocks.len() != n * n {
      return Err(Error::Input(format!("expected {} action bimodules, got {}", n * n, blocks.len())));
    }
    for (k, b) in blocks.iter().enumerate() {
      if b.lefts().len() != c.dim() || b.rights().len() != c.dim() {
        return Err(Error::Input(format!("bimodule T_{},{} does not act by the base algebra", k / n, k % n)));
      }
    }
    let mut offsets = vec![0];
    for b in &blocks {
      offsets.push(offsets.last().unwrap() + b.dim());
    }
    let t = sum_bimodules(&c, &blocks);
    let d = t.dim();
    if end_left.len() != a.dim() || end_right.len() != a.dim() {
      return Err(Error::Input("the endomorphism action needs one matrix per basis element on each side".into()));
    }
    for m in end_left.iter().chain(&end_right) {
      if m.rows() != d || m.cols() != d {
        return Err(Error::Dimension(format!("endomorphism of size {}x{} on a space of dimension {d}", m.rows(), m.cols())));
      }
    }
    Ok(TwoRep { a, c, blocks, offsets, t, end_left, end_right })
  }

  /// The defining representation: `C = A` and `T_ij = A e_i (x) e_j A`.
  pub fn defining(a: &Algebra) -> Result<Self> {
    a.ensure_valid()?;
    let n = a.n();
    let p = a.p();
    let blocks: Vec<Bimodule> =
      (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| Bimodule::projective(a, i, j)).collect::<Result<_>>()?;
    let cols: Vec<Vec<usize>> = (0..n).map(|i| a.col_basis(i)).collect();
    let rows: Vec<Vec<usize>> = (0..n).map(|j| a.row_basis(j)).collect();
    let mut offsets = vec![0];
    for b in &blocks {
      offsets.push(offsets.last().unwrap() + b.dim());
    }
    let d = *offsets.last().unwrap();
    let index = |i: usize, j: usize, x: usize, y: usize| -> usize {
      let cx = cols[i].iter().position(|&z| z == x).unwrap();
      let ry = rows[j].iter().position(|&z| z == y).unwrap();
      offsets[i * n + j] + cx * rows[j].len() + ry
    };
    let mut end_left = Vec::with_capacity(a.dim());
    let mut end_right = Vec::with_capacity(a.dim());
    for g in 0..a.dim() {
      let mut l = Matrix::zeros(p, d, d);
      let mut r = Matrix::zeros(p, d, d);
      for i in 0..n {
        for j in 0..n {
          for &x in &cols[i] {
            for &y in &rows[j] {
              let src = index(i, j, x, y);
              for (z, &v) in a.mul_basis(x, g).iter().enumerate() {
                if v != 0 {
                  l.add_at(index(a.block(z).1, j, z, y), src, v);
                }
              }
              for (z, &v) in a.mul_basis(g, y).iter().enumerate() {
                if v != 0 {
                  r.add_at(index(i, a.block(z).0, x, z), src, v);
                }
              }
            }
          }
        }
      }
      end_left.push(l);
      end_right.push(r);
    }
    TwoRep::new(a.clone(), a.clone(), blocks, end_left, end_right)
  }

  pub fn p(&self) -> u64 {
    self.a.p()
  }

  pub fn n(&self) -> usize {
    self.a.n()
  }

  pub fn block(&self, i: usize, j: usize) -> &Bimodule {
    &self.blocks[i * self.n() + j]
  }

  /// `E(x, 1)` for an element `x` of `A`.
  pub fn end_left_vec(&self, x: &[u64]) -> Matrix {
    let d = self.t.dim();
    combine(self.p(), d, d, &self.end_left, x)
  }

  /// `E(1, y)` for an element `y` of `A`.
  pub fn end_right_vec(&self, y: &[u64]) -> Matrix {
    let d = self.t.dim();
    combine(self.p(), d, d, &self.end_right, y)
  }

  pub fn end(&self, a: usize, b: usize) -> Matrix {
    self.end_left[a].mul(&self.end_right[b])
  }

  /// Inclusion of `T_ij` into `T`.
  pub fn inclusion(&self, i: usize, j: usize) -> Matrix {
    let k = i * self.n() + j;
    let (lo, hi) = (self.offsets[k], self.offsets[k + 1]);
    Matrix::from_fn(self.p(), self.t.dim(), hi - lo, |r, c| u64::from(r == lo + c))
  }

  /// Structural checks: bimodule axioms, one-sided projectivity of every
  /// `T_ij`, and the relations of the endomorphism action.
  pub fn validate(&self) -> Result<()> {
    self.c.ensure_valid()?;
    let c = &self.c;
    let a = &self.a;
    let n = self.n();
    for i in 0..n {
      for j in 0..n {
        let b = self.block(i, j);
        b.check(c, c).map_err(|e| Error::Input(format!("T_{i},{j}: {e}")))?;
        if !is_left_projective(c, &b.to_left()) {
          return Err(Error::Violation(format!("T_{i},{j} is not projective as a left module")));
        }
        if !is_right_projective(c, b) {
          return Err(Error::Violation(format!("T_{i},{j} is not projective as a right module")));
        }
      }
    }
    let d = self.t.dim();
    let id = Matrix::identity(self.p(), d);
    if self.end_left_vec(&a.unit()) != id || self.end_right_vec(&a.unit()) != id {
      return Err(Error::Violation("the endomorphism action is not unital".into()));
    }
    for x in 0..a.dim() {
      let (l, r) = (&self.end_left[x], &self.end_right[x]);
      if !self.t.is_homomorphism(&self.t, l) || !self.t.is_homomorphism(&self.t, r) {
        return Err(Error::Violation(format!("E({x}, 1) or E(1, {x}) is not a bimodule map")));
      }
      for y in 0..a.dim() {
        if l.mul(&self.end_left[y]) != self.end_left_vec(a.mul_basis(y, x)) {
          return Err(Error::Violation(format!("E({x},1) E({y},1) differs from E({y}{x},1)")));
        }
        if r.mul(&self.end_right[y]) != self.end_right_vec(a.mul_basis(x, y)) {
          return Err(Error::Violation(format!("E(1,{x}) E(1,{y}) differs from E(1,{x}{y})")));
        }
        if l.mul(&self.end_right[y]) != self.end_right[y].mul(l) {
          return Err(Error::Violation(format!("E({x},1) and E(1,{y}) do not commute")));
        }
      }
    }
    for i in 0..n {
      for j in 0..n {
        let e = self.end(i, j);
        let k = i * n + j;
        let expect = Matrix::from_fn(self.p(), d, d, |r, cc| u64::from(r == cc && r >= self.offsets[k] && r < self.offsets[k + 1]));
        if e != expect {
          return Err(Error::Violation(format!("E(e_{i}, e_{j}) is not the projection onto T_{i},{j}")));
        }
      }
    }
    Ok(())
  }

  /// Rank of the endomorphism action; faithful when it equals `dim(A)^2`.
  pub fn end_rank(&self) -> usize {
    let d = self.a.dim();
    let mut e = Echelon::new(self.p(), self.t.dim() * self.t.dim());
    for x in 0..d {
      for y in 0..d {
        e.insert(self.end(x, y).flatten());
      }
    }
    e.rank()
  }

  pub fn is_faithful(&self) -> bool {
    self.end_rank() == self.a.dim() * self.a.dim()
  }

  /// Checks `dim(T_ij (x)_C T_kl) = dim(e_j A e_k) dim(T_il)` for all indices.
  pub fn check_coherence(&self) -> Result<()> {
    let n = self.n();
    let bd = self.a.block_dims();
    let pres: Vec<Presentation> = self.blocks.iter().map(|b| Presentation::new(b, &self.c)).collect();
    for i in 0..n {
      for j in 0..n {
        for k in 0..n {
          for l in 0..n {
            let tp = crate::bimodule::tensor_with(self.block(i, j), pres[i * n + j].clone(), &self.c, self.block(k, l));
            let expect = bd[j][k] * self.block(i, l).dim();
            if tp.dim() != expect {
              return Err(Error::Violation(format!(
                "dim(T_{i},{j} (x) T_{k},{l}) = {} but dim(e_{j} A e_{k}) dim(T_{i},{l}) = {expect}",
                tp.dim()
              )));
            }
          }
        }
      }
    }
    Ok(())
  }

  /// `T (x)_C X` as a left module.
  pub fn apply(&self, x: &LeftModule) -> LeftModule {
    tensor(&self.t, &self.c, &Bimodule::from_left(x)).module.to_left()
  }

  /// `T_ij (x)_C X` as a left module.
  pub fn apply_block(&self, i: usize, j: usize, x: &LeftModule) -> LeftModule {
    tensor(self.block(i, j), &self.c, &Bimodule::from_left(x)).module.to_left()
  }

  /// The space `alpha = E(1, rad A)` of endomorphisms of `F`.
  pub fn canonical_alpha(&self) -> Result<AnnihilatorSet> {
    let gens = self.a.radical().vectors().iter().map(|r| self.end_right_vec(r)).collect();
    AnnihilatorSet::new(&self.c, self.t.clone(), gens)
  }

  /// `T / rad(C) T`.
  fn top_quotient(&self) -> (Bimodule, Matrix) {
    let mut e = Echelon::new(self.p(), self.t.dim());
    for r in self.c.radical().vectors() {
      for v in self.t.left_vec(&r).col_vecs() {
        e.insert(v);
      }
    }
    let (rows, _) = e.finish();
    self.t.quotient(&Subspace::from_rows(&rows))
  }

  /// `[F]_M`: entry `(i, j)` is the multiplicity of `P_i` in `F P_j`, that
  /// is `dim e_i (T / rad(C) T) e_j`.
  pub fn action_matrix(&self) -> Vec<Vec<usize>> {
    let (top, _) = self.top_quotient();
    let r = self.c.n();
    (0..r).map(|i| (0..r).map(|j| top.left(i).mul(top.right(j)).rank()).collect()).collect()
  }

  /// Entry `(i, j)` is the multiplicity of `L_i` in `F L_j`.
  pub fn simple_matrix(&self) -> Vec<Vec<usize>> {
    let r = self.c.n();
    let cols: Vec<Vec<usize>> =
      (0..r).map(|j| self.apply(&LeftModule::simple(&self.c, j)).composition_multiplicities(&self.c)).collect();
    (0..r).map(|i| (0..r).map(|j| cols[j][i]).collect()).collect()
  }

  /// Descriptors of the transitive subquotients, one per strongly connected
  /// component of the action digraph.
  pub fn weak_jh_subquotients(&self) -> Result<Vec<Subquotient>> {
    let m = self.action_matrix();
    let comps = strongly_connected(&m);
    let (top, _) = self.top_quotient();
    let mut out = Vec::new();
    for s in comps {
      let matrix: Vec<Vec<usize>> = s.iter().map(|&i| s.iter().map(|&j| m[i][j]).collect()).collect();
      let (d, idx) = self.c.corner(&s);
      // U = sum over i, j in S of e_i top e_j.
      let mut ue = Echelon::new(self.p(), top.dim());
      for &i in &s {
        for &j in &s {
          for v in top.left(i).mul(top.right(j)).col_vecs() {
            ue.insert(v);
          }
        }
      }
      let (urows, _) = ue.finish();
      let u = Subspace::from_rows(&urows);
      // c in rad(D) with U c = 0.
      let rad: Vec<Vec<u64>> = d.radical().vectors();
      let lift = |v: &[u64]| {
        let mut w = self.c.zero_vec();
        for (k, &x) in v.iter().enumerate() {
          w[idx[k]] = x;
        }
        w
      };
      let ideal = if rad.is_empty() || u.dim() == 0 {
        Subspace::span(self.p(), d.dim(), &rad)
      } else {
        let ub = u.basis_cols();
        let cols: Vec<Vec<u64>> = rad.iter().map(|r| top.right_vec(&lift(r)).mul(&ub).flatten()).collect();
        let sys = Matrix::from_cols(self.p(), ub.rows() * ub.cols(), &cols);
        let ker = sys.kernel();
        let vs: Vec<Vec<u64>> = ker
          .col_vecs()
          .iter()
          .map(|k| {
            let mut v = vec![0u64; d.dim()];
            for (coef, r) in k.iter().zip(&rad) {
              for (o, &x) in v.iter_mut().zip(r) {
                *o = crate::field::add(*o, crate::field::mul(*coef, x, self.p()), self.p());
              }
            }
            v
          })
          .collect();
        Subspace::span(self.p(), d.dim(), &vs)
      };
      if !d.is_ideal(&ideal) {
        return Err(Error::Violation("the annihilator of the top is not an ideal".into()));
      }
      let (quo, _) = d.quotient(&ideal)?;
      out.push(Subquotient { vertices: s, matrix, corner_dim: d.dim(), ideal_dim: ideal.dim(), algebra: quo });
    }
    Ok(out)
  }

  /// All subquotients equivalent to the first: equal matrices up to a
  /// simultaneous permutation and isomorphic quotient algebras.
  pub fn is_isotypic(&self, bound: usize) -> Result<IsotypicReport> {
    let subs = self.weak_jh_subquotients()?;
    let mut verdicts = Vec::new();
    for s in &subs {
      verdicts.push(compare_subquotients(&subs[0], s, bound));
    }
    let isotypic = verdicts.iter().all(|v| v.is_equivalent());
    let up_to_invariants = verdicts.iter().any(|v| matches!(v, IsoVerdict::EquivalentUpToInvariants));
    Ok(IsotypicReport { subquotients: subs, verdicts, isotypic, up_to_invariants })
  }
}

/// A transitive subquotient: its vertices, its action matrix and the algebra
/// `e_S C e_S / I_S`, where `I_S` is the part of the radical acting by zero
/// on the top of the action bimodule restricted to `S`.
#[derive(Clone, Debug, Serialize)]
pub struct Subquotient {
  pub vertices: Vec<usize>,
  pub matrix: Vec<Vec<usize>>,
  pub corner_dim: usize,
  pub ideal_dim: usize,
  #[serde(skip)]
  pub algebra: Algebra,
}

#[derive(Clone, Debug, Serialize)]
pub struct IsotypicReport {
  pub subquotients: Vec<Subquotient>,
  pub verdicts: Vec<IsoVerdict>,
  pub isotypic: bool,
  pub up_to_invariants: bool,
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
  if n == 0 {
    return vec![vec![]];
  }
  let mut out = Vec::new();
  for perm in permutations(n - 1) {
    for k in 0..n {
      let mut q = perm.clone();
      q.insert(k, n - 1);
      out.push(q);
    }
  }
  out
}

/// Whether two square matrices agree after a simultaneous permutation.
pub fn equal_up_to_permutation(x: &[Vec<usize>], y: &[Vec<usize>]) -> bool {
  let n = x.len();
  if n != y.len() {
    return false;
  }
  permutations(n).iter().any(|pi| (0..n).all(|i| (0..n).all(|j| x[i][j] == y[pi[i]][pi[j]])))
}

pub fn compare_subquotients(x: &Subquotient, y: &Subquotient, bound: usize) -> IsoVerdict {
  if !equal_up_to_permutation(&x.matrix, &y.matrix) {
    return IsoVerdict::NotIsomorphic(format!("action matrices {:?} and {:?} differ", x.matrix, y.matrix));
  }
  iso::find_isomorphism(&x.algebra, &y.algebra, bound)
}

/// Strongly connected components of the digraph with an edge `j -> i`
/// whenever `m[i][j] > 0`, each sorted, ordered by smallest vertex.
pub fn strongly_connected(m: &[Vec<usize>]) -> Vec<Vec<usize>> {
  let r = m.len();
  // reach[i][j]: j reachable from i.
  let mut reach = vec![vec![false; r]; r];
  for i in 0..r {
    reach[i][i] = true;
    for j in 0..r {
      if m[j][i] > 0 {
        reach[i][j] = true;
      }
    }
  }
  for k in 0..r {
    for i in 0..r {
      if reach[i][k] {
        for j in 0..r {
          if reach[k][j] {
            reach[i][j] = true;
          }
        }
      }
    }
  }
  let mut seen = vec![false; r];
  let mut out = Vec::new();
  for i in 0..r {
    if seen[i] {
      continue;
    }
    let comp: Vec<usize> = (0..r).filter(|&j| reach[i][j] && reach[j][i]).collect();
    for &j in &comp {
      seen[j] = true;
    }
    out.push(comp);
  }
  out
}

/// Result of searching for a block-diagonal arrangement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum BlockDiagonal {
  /// `permutation[pos]` is the original index placed at position `pos`;
  /// `k` identical diagonal blocks equal to the target.
  Found { permutation: Vec<usize>, k: usize },
  /// A nonzero entry `(i, j)` linking two different components, or `None`
  /// when the sizes are incompatible or no arrangement matches.
  Failed { witness: Option<(usize, usize, usize)>, reason: String },
}

impl BlockDiagonal {
  pub fn is_found(&self) -> bool {
    matches!(self, BlockDiagonal::Found { .. })
  }
}

/// Searches for the lexicographically smallest permutation making `m`
/// block diagonal with every block equal to `target`.
pub fn block_diagonalize(m: &[Vec<usize>], target: &[Vec<usize>]) -> BlockDiagonal {
  let r = m.len();
  let n = target.len();
  let comps = strongly_connected(m);
  let cross = || {
    for ci in &comps {
      for cj in &comps {
        if ci == cj {
          continue;
        }
        for &i in ci {
          for &j in cj {
            if m[i][j] != 0 {
              return Some((i, j, m[i][j]));
            }
          }
        }
      }
    }
    None
  };
  if n == 0 || !r.is_multiple_of(n) {
    return BlockDiagonal::Failed { witness: cross(), reason: format!("size {r} is not a multiple of {n}") };
  }
  fn go(m: &[Vec<usize>], t: &[Vec<usize>], perm: &mut Vec<usize>, used: &mut [bool]) -> bool {
    let r = m.len();
    let n = t.len();
    let pos = perm.len();
    if pos == r {
      return true;
    }
    for cand in 0..r {
      if used[cand] {
        continue;
      }
      let ok = (0..=pos).all(|q| {
        let oq = if q == pos { cand } else { perm[q] };
        let same = q / n == pos / n;
        let (e1, e2) = (m[cand][oq], m[oq][cand]);
        if same {
          e1 == t[pos % n][q % n] && e2 == t[q % n][pos % n]
        } else {
          e1 == 0 && e2 == 0
        }
      });
      if ok {
        used[cand] = true;
        perm.push(cand);
        if go(m, t, perm, used) {
          return true;
        }
        perm.pop();
        used[cand] = false;
      }
    }
    false
  }
  let mut perm = Vec::new();
  let mut used = vec![false; r];
  if go(m, target, &mut perm, &mut used) {
    BlockDiagonal::Found { permutation: perm, k: r / n }
  } else {
    let w = cross();
    let reason = match w {
      Some((i, j, v)) => format!("entry ({i},{j}) = {v} links two components"),
      None => "no arrangement matches the target blocks".into(),
    };
    BlockDiagonal::Failed { witness: w, reason }
  }
}

/// Direct sum of two representations of the same `C_A`, over the product of
/// their base algebras.
pub fn direct_sum(x: &TwoRep, y: &TwoRep) -> Result<TwoRep> {
  if !x.a.same_table(&y.a) {
    return Err(Error::Input("the representations are over different algebras".into()));
  }
  let (c, pos) = corpus::product_with_positions(&x.c, &y.c);
  let p = c.p();
  let dx = x.c.dim();
  let spread = |bm: &Bimodule, second: bool| -> (Vec<Matrix>, Vec<Matrix>) {
    let z = Matrix::zeros(p, bm.dim(), bm.dim());
    let mut l = vec![z.clone(); c.dim()];
    let mut r = vec![z; c.dim()];
    let (src, off) = if second { (y.c.dim(), dx) } else { (dx, 0) };
    for b in 0..src {
      l[pos[off + b]] = bm.left(b).clone();
      r[pos[off + b]] = bm.right(b).clone();
    }
    (l, r)
  };
  let n = x.n();
  let mut blocks = Vec::with_capacity(n * n);
  for k in 0..n * n {
    let (l1, r1) = spread(&x.blocks[k], false);
    let (l2, r2) = spread(&y.blocks[k], true);
    let b1 = Bimodule::new(p, x.blocks[k].dim(), l1, r1);
    let b2 = Bimodule::new(p, y.blocks[k].dim(), l2, r2);
    blocks.push(b1.direct_sum(&b2));
  }
  let end = |ex: &Matrix, ey: &Matrix, k_off: &dyn Fn(&TwoRep, usize) -> (usize, usize)| -> Matrix {
    // Reorder from (T^x, T^y) to blockwise (T^x_k + T^y_k).
    let dxt = x.t.dim();
    let d = dxt + y.t.dim();
    let mut rows_map = vec![0usize; d];
    let mut cur = 0;
    for k in 0..n * n {
      let (lo, hi) = k_off(x, k);
      for s in lo..hi {
        rows_map[s] = cur;
        cur += 1;
      }
      let (lo, hi) = k_off(y, k);
      for s in lo..hi {
        rows_map[dxt + s] = cur;
        cur += 1;
      }
    }
    let big = ex.direct_sum(ey);
    let mut out = Matrix::zeros(p, d, d);
    for rr in 0..d {
      for cc in 0..d {
        let v = big.get(rr, cc);
        if v != 0 {
          out.set(rows_map[rr], rows_map[cc], v);
        }
      }
    }
    out
  };
  let offs = |m: &TwoRep, k: usize| (m.offsets[k], m.offsets[k + 1]);
  let end_left = (0..x.a.dim()).map(|g| end(&x.end_left[g], &y.end_left[g], &offs)).collect();
  let end_right = (0..x.a.dim()).map(|g| end(&x.end_right[g], &y.end_right[g], &offs)).collect();
  TwoRep::new(x.a.clone(), c, blocks, end_left, end_right)
}

/// Negative control: over `C = A x A`, the sum of the two defining
/// representations and a cross copy of every `F_ij` on which the first
/// factor acts on the left and the second on the right. The subquotients
/// are equivalent but the action matrix has a nonzero off-diagonal block.
pub fn cross_extension(a: &Algebra) -> Result<TwoRep> {
  let d = TwoRep::defining(a)?;
  let sum = direct_sum(&d, &d)?;
  let (_, pos) = corpus::product_with_positions(a, a);
  let p = a.p();
  let c = &sum.c;
  let da = a.dim();
  let n = a.n();
  let mut blocks = Vec::with_capacity(n * n);
  let mut cross_dims = Vec::new();
  for k in 0..n * n {
    let f = &d.blocks[k];
    let z = Matrix::zeros(p, f.dim(), f.dim());
    let mut l = vec![z.clone(); c.dim()];
    let mut r = vec![z; c.dim()];
    for b in 0..da {
      l[pos[b]] = f.left(b).clone();
      r[pos[da + b]] = f.right(b).clone();
    }
    cross_dims.push(f.dim());
    blocks.push(sum.blocks[k].direct_sum(&Bimodule::new(p, f.dim(), l, r)));
  }
  // The endomorphism action on the cross copy is the defining one.
  let total: usize = blocks.iter().map(|b| b.dim()).sum();
  let mut map_sum = Vec::with_capacity(sum.t.dim());
  let mut map_cross = Vec::with_capacity(d.t.dim());
  let mut cur = 0;
  for k in 0..n * n {
    for _ in sum.offsets[k]..sum.offsets[k + 1] {
      map_sum.push(cur);
      cur += 1;
    }
    for _ in 0..cross_dims[k] {
      map_cross.push(cur);
      cur += 1;
    }
  }
  let place = |es: &Matrix, ed: &Matrix| -> Matrix {
    let mut out = Matrix::zeros(p, total, total);
    for rr in 0..es.rows() {
      for cc in 0..es.cols() {
        let v = es.get(rr, cc);
        if v != 0 {
          out.set(map_sum[rr], map_sum[cc], v);
        }
      }
    }
    for rr in 0..ed.rows() {
      for cc in 0..ed.cols() {
        let v = ed.get(rr, cc);
        if v != 0 {
          out.set(map_cross[rr], map_cross[cc], v);
        }
      }
    }
    out
  };
  let end_left = (0..da).map(|g| place(&sum.end_left[g], &d.end_left[g])).collect();
  let end_right = (0..da).map(|g| place(&sum.end_right[g], &d.end_right[g])).collect();
  TwoRep::new(a.clone(), c.clone(), blocks, end_left, end_right)
}

/// The cell 2-representation for a left cell `cell` of the maximal two-sided
/// cell of `C_A`, realized as the defining representation with the object of
/// `F_kj` in the cell matched to the vertex `k`.
#[derive(Clone, Debug)]
pub struct CellRep {
  pub rep: TwoRep,
  /// Table elements of the left cell.
  pub members: Vec<usize>,
  /// Vertex of the base algebra attached to each member.
  pub vertex: Vec<usize>,
  /// The Duflo involution of the cell.
  pub duflo: usize,
}

pub fn cell_two_rep(a: &Algebra, table: &CompositionTable, cs: &CellStructure, cell: usize) -> Result<CellRep> {
  let n = a.n();
  let members = cs.left_cells[cell].clone();
  let mut vertex = Vec::new();
  let mut column = None;
  for &f in &members {
    if f == 0 {
      return Err(Error::Precondition("the identity cell has no cell representation here".into()));
    }
    let (i, j) = ((f - 1) / n, (f - 1) % n);
    if column.is_some_and(|c| c != j) {
      return Err(Error::Precondition("the cell is not a left cell of the maximal cell".into()));
    }
    column = Some(j);
    vertex.push(i);
  }
  let duflo = cells::duflo_involution(table, cs, cell)?;
  Ok(CellRep { rep: TwoRep::defining(a)?, members, vertex, duflo })
}

#[derive(Clone, Debug, Serialize)]
pub struct Eq1Report {
  /// `(F, H, dim F L_H)` for all members.
  pub entries: Vec<(String, String, usize)>,
}

/// Checks `F L_H = P_F` when `H` is the Duflo involution and `0` otherwise,
/// for `F`, `H` in the cell.
pub fn check_eq1(table: &CompositionTable, cr: &CellRep) -> Result<Eq1Report> {
  let a = &cr.rep.a;
  let n = a.n();
  let mut entries = Vec::new();
  for (fi, &f) in cr.members.iter().enumerate() {
    let (i, j) = ((f - 1) / n, (f - 1) % n);
    for (hi, &h) in cr.members.iter().enumerate() {
      let l = LeftModule::simple(a, cr.vertex[hi]);
      let out = cr.rep.apply_block(i, j, &l);
      let expect_duflo = h == cr.duflo;
      if expect_duflo {
        let pf = LeftModule::projective(a, cr.vertex[fi]);
        if out.dim() != pf.dim() || out.top_decomposition(a) != pf.top_decomposition(a) {
          return Err(Error::Violation(format!(
            "{} applied to L_{} is not the projective of {}",
            table.elements[f].label, table.elements[h].label, table.elements[f].label
          )));
        }
      } else if out.dim() != 0 {
        return Err(Error::Violation(format!("{} does not kill L_{}", table.elements[f].label, table.elements[h].label)));
      }
      entries.push((table.elements[f].label.clone(), table.elements[h].label.clone(), out.dim()));
    }
  }
  Ok(Eq1Report { entries })
}

#[derive(Clone, Debug, Serialize)]
pub struct Prop104Report {
  /// `(H, vertex of L_F, dim H L_F)`.
  pub products: Vec<(String, usize, usize)>,
  /// Socle vertex of `F* L_F` for each member `F`.
  pub adjoint_socles: Vec<usize>,
}

/// For every `H` in the maximal cell and every simple of the cell
/// representation, `H L_F` is zero or an indecomposable projective-injective
/// module: simple top `L_i` and simple socle `L_sigma(i)`. Also checks that
/// `F* L_F` has socle the simple of the Duflo involution.
pub fn check_prop104(table: &CompositionTable, cr: &CellRep) -> Result<Prop104Report> {
  let a = &cr.rep.a;
  let n = a.n();
  let sigma = a.nakayama_permutation()?;
  let mut products = Vec::new();
  for i in 0..n {
    for j in 0..n {
      for &v in &cr.vertex {
        let m = cr.rep.apply_block(i, j, &LeftModule::simple(a, v));
        if m.dim() > 0 {
          let top = m.top_decomposition(a);
          let socm = m.restrict(&m.socle(a));
          let sd = socm.idempotent_ranks(a);
          let simple_top = top.iter().sum::<usize>() == 1;
          let ti = top.iter().position(|&x| x == 1).unwrap_or(usize::MAX);
          if !simple_top || !is_left_projective(a, &m) {
            return Err(Error::Violation(format!("F_{i},{j} L_{v} is not an indecomposable projective")));
          }
          if sd.iter().sum::<usize>() != 1 || sd[sigma[ti]] != 1 {
            return Err(Error::Violation(format!("F_{i},{j} L_{v} does not have simple socle at sigma({ti})")));
          }
        }
        products.push((table.elements[1 + i * n + j].label.clone(), v, m.dim()));
      }
    }
  }
  let star = table.star.clone().ok_or_else(|| Error::Precondition("the table has no involution".into()))?;
  let dv = cr.vertex[cr.members.iter().position(|&x| x == cr.duflo).unwrap()];
  let mut adjoint_socles = Vec::new();
  for (fi, &f) in cr.members.iter().enumerate() {
    let fs = star[f];
    let (i, j) = ((fs - 1) / n, (fs - 1) % n);
    let m = cr.rep.apply_block(i, j, &LeftModule::simple(a, cr.vertex[fi]));
    let sd = m.restrict(&m.socle(a)).idempotent_ranks(a);
    if sd.iter().sum::<usize>() != 1 || sd[dv] != 1 {
      return Err(Error::Violation(format!("the socle of {}* L_F is not the Duflo simple", table.elements[f].label)));
    }
    adjoint_socles.push(dv);
  }
  Ok(Prop104Report { products, adjoint_socles })
}

#[cfg(test)]
mod tests {
  use super::*;

  #[test]
  fn defining_rep_of_dual_numbers() {
    let a = corpus::truncated_polynomial(1009, 2);
    let m = TwoRep::defining(&a).unwrap();
    m.validate().unwrap();
    assert_eq!(m.block(0, 0).dim(), 4);
    assert!(m.is_faithful());
    assert_eq!(m.action_matrix(), vec![vec![2]]);
    m.check_coherence().unwrap();
  }

  #[test]
  fn action_matrices_of_defining_reps() {
    let a = corpus::truncated_polynomial(7, 3);
    assert_eq!(TwoRep::defining(&a).unwrap().action_matrix(), vec![vec![3]]);
    let a = corpus::nakayama(1009, 2, 2);
    let m = TwoRep::defining(&a).unwrap();
    m.validate().unwrap();
    assert_eq!(m.action_matrix(), vec![vec![2, 2], vec![2, 2]]);
  }

  #[test]
  fn simple_matrix_is_transpose_of_action_matrix() {
    for (name, a) in corpus::named(1009) {
      let m = TwoRep::defining(&a).unwrap();
      let am = m.action_matrix();
      let bm = m.simple_matrix();
      let r = am.len();
      for i in 0..r {
        for j in 0..r {
          assert_eq!(am[i][j], bm[j][i], "{name}");
        }
      }
    }
  }

  #[test]
  fn defining_rep_is_one_block() {
    let a = corpus::nakayama(1009, 3, 2);
    let m = TwoRep::defining(&a).unwrap();
    let t = m.action_matrix();
    match block_diagonalize(&t, &t) {
      BlockDiagonal::Found { permutation, k } => {
        assert_eq!(k, 1);
        assert_eq!(permutation, vec![0, 1, 2]);
      }
      other => panic!("{other:?}"),
    }
    let rep = m.is_isotypic(12).unwrap();
    assert!(rep.isotypic);
    assert_eq!(rep.subquotients.len(), 1);
    assert!(iso::find_isomorphism(&rep.subquotients[0].algebra, &a, 12).is_isomorphic());
  }

  #[test]
  fn cross_extension_is_caught_by_block_form() {
    let a = corpus::truncated_polynomial(1009, 2);
    let m = cross_extension(&a).unwrap();
    m.validate().unwrap();
    assert!(m.is_faithful());
    let am = m.action_matrix();
    assert_eq!(am, vec![vec![2, 2], vec![0, 2]]);
    let rep = m.is_isotypic(12).unwrap();
    assert!(rep.isotypic);
    let target = TwoRep::defining(&a).unwrap().action_matrix();
    match block_diagonalize(&am, &target) {
      BlockDiagonal::Failed { witness, .. } => assert_eq!(witness, Some((0, 1, 2))),
      other => panic!("{other:?}"),
    }
    assert!(m.check_coherence().is_err());
  }

  #[test]
  fn sum_of_different_algebras_is_not_isotypic() {
    let a = corpus::truncated_polynomial(1009, 2);
    let d = TwoRep::defining(&a).unwrap();
    let s = direct_sum(&d, &d).unwrap();
    s.validate().unwrap();
    assert!(s.is_isotypic(12).unwrap().isotypic);
    assert_eq!(s.action_matrix(), vec![vec![2, 0], vec![0, 2]]);
    let x = Subquotient {
      vertices: vec![0],
      matrix: vec![vec![2]],
      corner_dim: 2,
      ideal_dim: 0,
      algebra: a.clone(),
    };
    let b = corpus::truncated_polynomial(1009, 3);
    let y = Subquotient { vertices: vec![0], matrix: vec![vec![3]], corner_dim: 3, ideal_dim: 0, algebra: b };
    assert!(!compare_subquotients(&x, &y, 12).is_equivalent());
  }

  #[test]
  fn strongly_connected_components() {
    let m = vec![vec![1, 1, 0], vec![0, 1, 0], vec![0, 0, 1]];
    assert_eq!(strongly_connected(&m), vec![vec![0], vec![1], vec![2]]);
    let m = vec![vec![0, 1], vec![1, 0]];
    assert_eq!(strongly_connected(&m), vec![vec![0, 1]]);
  }

  #[test]
  fn cell_action_and_duflo_socle_on_nakayama() {
    let a = corpus::nakayama(1009, 2, 2);
    let t = cells::table_of_ca(&a).unwrap();
    let cs = cells::compute_cells(&t);
    let j = cs.maximal_two_sided().unwrap();
    for l in cs.left_cells_in(j) {
      let cr = cell_two_rep(&a, &t, &cs, l).unwrap();
      let r = check_eq1(&t, &cr).unwrap();
      assert_eq!(r.entries.iter().filter(|e| e.2 > 0).count(), 2);
      let q = check_prop104(&t, &cr).unwrap();
      assert_eq!(q.products.iter().filter(|e| e.2 > 0).count(), 4);
    }
  }
}
