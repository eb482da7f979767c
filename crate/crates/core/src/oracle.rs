//! Brute-force reference computations. They share no code paths with the
//! production routines beyond basic linear algebra and are meant for tests
//! at small dimensions.

use crate::algebra::Algebra;
use crate::bimodule::Bimodule;
use crate::matrix::{Echelon, Matrix};
use crate::module::LeftModule;
use crate::subspace::Subspace;

/// `X (x)_k Y` modulo `x a (x) y - x (x) a y` for every basis element `a` of
/// `B`, with the induced outer actions.
pub fn naive_tensor(x: &Bimodule, b: &Algebra, y: &Bimodule) -> Bimodule {
  let p = x.p();
  let (dx, dy) = (x.dim(), y.dim());
  let ix = Matrix::identity(p, dx);
  let iy = Matrix::identity(p, dy);
  let mut rel = Echelon::new(p, dx * dy);
  for a in 0..b.dim() {
    let m = x.right(a).kron(&iy).sub(&ix.kron(y.left(a)));
    for v in m.col_vecs() {
      rel.insert(v);
    }
  }
  let (rm, _) = rel.finish();
  let s = Subspace::from_rows(&rm);
  let q = s.quotient_map();
  let sec = s.quotient_section();
  let left = x.lefts().iter().map(|l| q.mul(&l.kron(&iy)).mul(&sec)).collect();
  let right = y.rights().iter().map(|r| q.mul(&ix.kron(r)).mul(&sec)).collect();
  Bimodule::new(p, q.rows(), left, right)
}

/// All submodules of `m`, by closing upwards from zero through the
/// one-dimensional extensions `W + span(v)` with `v` in the socle of `M/W`.
/// Only feasible for tiny modules over tiny fields.
pub fn submodule_lattice(a: &Algebra, m: &LeftModule) -> Vec<Subspace> {
  let p = m.p();
  let zero = Subspace::zero(p, m.dim());
  let mut seen = std::collections::HashSet::new();
  seen.insert(zero.clone());
  let mut out = vec![zero.clone()];
  let mut frontier = vec![zero];
  while let Some(w) = frontier.pop() {
    let (quo, q) = m.quotient(&w);
    let soc = quo.socle(a);
    // Each line of the socle of M/W that is a submodule gives W' ⊃ W.
    for line in lines(&soc) {
      if !quo.is_submodule(a, &line) {
        continue;
      }
      let next = Subspace::preimage(&q, &line);
      if seen.insert(next.clone()) {
        out.push(next.clone());
        frontier.push(next);
      }
    }
  }
  out.sort_by_key(|s| s.dim());
  out
}

/// All one-dimensional subspaces of `s`.
fn lines(s: &Subspace) -> Vec<Subspace> {
  let p = s.p();
  let k = s.dim();
  let vs = s.vectors();
  let mut out = Vec::new();
  // Normalized coefficient vectors: first nonzero entry is 1.
  let total = (p as usize).pow(k as u32);
  for code in 0..total {
    let mut c = vec![0u64; k];
    let mut x = code;
    for ci in c.iter_mut() {
      *ci = (x % p as usize) as u64;
      x /= p as usize;
    }
    match c.iter().find(|&&z| z != 0) {
      Some(&1) => {}
      _ => continue,
    }
    let mut v = vec![0u64; s.ambient()];
    for (ci, b) in c.iter().zip(&vs) {
      for (o, &bb) in v.iter_mut().zip(b) {
        *o = (*o + ci * bb) % p;
      }
    }
    out.push(Subspace::span(p, s.ambient(), &[v]));
  }
  out
}

/// Naive Hom dimension of left modules by solving over all basis elements.
pub fn naive_hom_dim(a: &Algebra, m: &LeftModule, n: &LeftModule) -> usize {
  let p = m.p();
  let (dm, dn) = (m.dim(), n.dim());
  let mut rows = Vec::new();
  for b in 0..a.dim() {
    // X M_b - N_b X = 0, X in row-major coordinates.
    let lhs = Matrix::identity(p, dn).kron(&m.act(b).transpose());
    let rhs = n.act(b).kron(&Matrix::identity(p, dm));
    rows.extend(lhs.sub(&rhs).row_vecs());
  }
  if rows.is_empty() {
    return dm * dn;
  }
  dm * dn - Matrix::from_rows(p, dm * dn, &rows).rank()
}

#[cfg(test)]
mod tests {
  use super::*;
  use crate::corpus;

  #[test]
  fn lattice_of_uniserial_module() {
    let a = corpus::truncated_polynomial(5, 3);
    let l = submodule_lattice(&a, &LeftModule::regular(&a));
    assert_eq!(l.len(), 4);
  }

  #[test]
  fn lattice_of_semisimple_module() {
    // F_3^2 over the field: 1 + 4 lines + 1.
    let a = corpus::field_algebra(3);
    let m = LeftModule::new(3, 2, vec![Matrix::identity(3, 2)]);
    assert_eq!(submodule_lattice(&a, &m).len(), 6);
  }
}
