//! Annihilation of modules by spaces of bimodule endomorphisms, and the
//! upper and lower annihilation filtrations.

use serde::Serialize;

use crate::algebra::Algebra;
use crate::bimodule::{tensor_with, Bimodule, Presentation, Tensor};
use crate::error::{Error, Result};
use crate::matrix::{Echelon, Matrix};
use crate::module::LeftModule;
use crate::subspace::Subspace;

/// A `C`-`C` bimodule `T` (acting as `T (x)_C -`) with a finite list of
/// bimodule endomorphisms.
#[derive(Clone, Debug)]
pub struct AnnihilatorSet {
  pub t: Bimodule,
  pub gens: Vec<Matrix>,
  pres: Presentation,
}

/// Length of an annihilation filtration, or `Infinite` when the filtrations
/// stabilize before reaching the ends.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Length {
  Finite(usize),
  Infinite,
}

impl AnnihilatorSet {
  pub fn new(c: &Algebra, t: Bimodule, gens: Vec<Matrix>) -> Result<Self> {
    for (k, g) in gens.iter().enumerate() {
      if g.rows() != t.dim() || g.cols() != t.dim() || !t.is_homomorphism(&t, g) {
        return Err(Error::Input(format!("generator {k} is not a bimodule endomorphism")));
      }
    }
    let pres = Presentation::new(&t, c);
    Ok(AnnihilatorSet { t, gens, pres })
  }

  pub fn tensor(&self, c: &Algebra, x: &LeftModule) -> Tensor {
    tensor_with(&self.t, self.pres.clone(), c, &Bimodule::from_left(x))
  }

  /// `g (x) id_X` on `T (x)_C X` for every generator.
  pub fn induced(&self, c: &Algebra, x: &LeftModule) -> (Tensor, Vec<Matrix>) {
    let tx = self.tensor(c, x);
    let y = Bimodule::from_left(x);
    let maps = self.gens.iter().map(|g| tx.map_left(&y, g, &tx)).collect();
    (tx, maps)
  }

  pub fn annihilates(&self, c: &Algebra, x: &LeftModule) -> bool {
    if x.dim() == 0 {
      return true;
    }
    let (_, maps) = self.induced(c, x);
    maps.iter().all(|m| m.is_zero())
  }

  /// Largest submodule annihilated: `{v : g(t (x) v) = 0 for all t, g}`.
  pub fn sub_alpha(&self, c: &Algebra, x: &LeftModule) -> Subspace {
    let dx = x.dim();
    let p = x.p();
    if dx == 0 || self.gens.is_empty() {
      return Subspace::full(p, dx);
    }
    let tx = self.tensor(c, x);
    let dq = tx.dim();
    let mut e = Echelon::new(p, dx);
    'outer: for g in &self.gens {
      for tb in 0..self.t.dim() {
        let gt = g.col(tb);
        // v -> proj((g t_b) (x) v).
        let mut m = Matrix::zeros(p, dq, dx);
        for (xr, &coef) in gt.iter().enumerate() {
          if coef == 0 {
            continue;
          }
          let block = Matrix::from_fn(p, dq, dx, |r, cc| tx.proj.get(r, xr * dx + cc));
          m.axpy(coef, &block);
        }
        for row in m.row_vecs() {
          e.insert(row);
          if e.rank() == dx {
            break 'outer;
          }
        }
      }
    }
    let (rows, _) = e.finish();
    if rows.rows() == 0 {
      return Subspace::full(p, dx);
    }
    Subspace::from_cols(&rows.kernel())
  }

  /// Smallest submodule `Z` with the image of every `g (x) id_X` inside
  /// `T (x)_C Z`, by iterating slot-component closure to a fixpoint.
  pub fn und_alpha(&self, c: &Algebra, x: &LeftModule) -> Result<Subspace> {
    if !self.pres.is_projective() {
      return Err(Error::Precondition("T is not projective as a right module".into()));
    }
    let p = x.p();
    let dx = x.dim();
    if dx == 0 {
      return Ok(Subspace::zero(p, 0));
    }
    let (tx, maps) = self.induced(c, x);
    let y = Bimodule::from_left(x);
    let images: Vec<Vec<u64>> = maps.iter().flat_map(|m| m.col_vecs()).filter(|v| v.iter().any(|&z| z != 0)).collect();
    let mut z = Subspace::zero(p, dx);
    loop {
      let mut seeds = z.vectors();
      for w in &images {
        seeds.extend(tx.slot_components(c, &y, w));
      }
      let next = x.generate(c, &seeds);
      // Image of T (x) Z inside T (x) X.
      let sub = x.restrict(&next);
      let tz = self.tensor(c, &sub);
      let incl = next.basis_cols();
      let inc = tz.map_right(&incl, &tx);
      let img = Subspace::from_cols(&inc);
      let done = next == z && images.iter().all(|w| img.contains(w));
      if done || next == z {
        if !images.iter().all(|w| img.contains(w)) {
          return Err(Error::Violation("slot closure failed to contain the images".into()));
        }
        return Ok(next);
      }
      z = next;
    }
  }

  /// Upper filtration `0 = X_0 ⊂ X_1 ⊂ ...` with `X_{i+1}/X_i = sub(X/X_i)`.
  pub fn upper_filtration(&self, c: &Algebra, x: &LeftModule) -> (Vec<Subspace>, Length) {
    let p = x.p();
    let mut chain = vec![Subspace::zero(p, x.dim())];
    loop {
      let cur = chain.last().unwrap().clone();
      if cur.is_full() {
        let k = chain.len() - 1;
        return (chain, Length::Finite(k));
      }
      let (quo, q) = x.quotient(&cur);
      let s = self.sub_alpha(c, &quo);
      let next = Subspace::preimage(&q, &s);
      if next == cur {
        return (chain, Length::Infinite);
      }
      chain.push(next);
    }
  }

  /// Lower filtration `X = Z_0 ⊃ Z_1 = und(X) ⊃ ...`, returned increasing.
  pub fn lower_filtration(&self, c: &Algebra, x: &LeftModule) -> Result<(Vec<Subspace>, Length)> {
    let p = x.p();
    let mut chain = vec![Subspace::full(p, x.dim())];
    loop {
      let cur = chain.last().unwrap().clone();
      if cur.is_zero() {
        let k = chain.len() - 1;
        chain.reverse();
        return Ok((chain, Length::Finite(k)));
      }
      let sub = x.restrict(&cur);
      let u = self.und_alpha(c, &sub)?;
      let next = u.image(&cur.basis_cols());
      if next == cur {
        chain.reverse();
        return Ok((chain, Length::Infinite));
      }
      chain.push(next);
    }
  }

  /// Common length of the two filtrations.
  pub fn annihilation_length(&self, c: &Algebra, x: &LeftModule) -> Result<Length> {
    let (_, up) = self.upper_filtration(c, x);
    let (_, low) = self.lower_filtration(c, x)?;
    if up != low {
      return Err(Error::Violation(format!("upper length {up:?} differs from lower length {low:?}")));
    }
    Ok(up)
  }

  /// Whether every layer of the chain is annihilated.
  pub fn is_annihilation_filtration(&self, c: &Algebra, x: &LeftModule, chain: &[Subspace]) -> bool {
    chain.windows(2).all(|w| self.annihilates(c, &subquotient(x, &w[1], &w[0])))
  }

  /// Checks `und^{k-i}(X) ⊂ X_i ⊂ sub^i(X)` for an annihilation filtration
  /// `X_0 ⊂ ... ⊂ X_k`.
  pub fn check_prop4(&self, c: &Algebra, x: &LeftModule, chain: &[Subspace]) -> Result<Prop4Report> {
    if chain.is_empty() || !chain[0].is_zero() || !chain.last().unwrap().is_full() {
      return Err(Error::Precondition("the chain must run from 0 to X".into()));
    }
    if !self.is_annihilation_filtration(c, x, chain) {
      return Err(Error::Precondition("some layer is not annihilated".into()));
    }
    let (upper, _) = self.upper_filtration(c, x);
    let (lower, _) = self.lower_filtration(c, x)?;
    sandwich(&upper, &lower, chain)
  }
}

/// The sandwich of an annihilation filtration between precomputed upper and
/// lower filtrations of the same module.
pub fn sandwich(upper: &[Subspace], lower: &[Subspace], chain: &[Subspace]) -> Result<Prop4Report> {
  let k = chain.len() - 1;
  let (p, d) = (chain[0].p(), chain[0].ambient());
  let full = Subspace::full(p, d);
  let zero = Subspace::zero(p, d);
  // lower is increasing; und^j is lower[len-1-j].
  let und = |j: usize| if j < lower.len() { lower[lower.len() - 1 - j].clone() } else { zero.clone() };
  let sub = |i: usize| if i < upper.len() { upper[i].clone() } else { full.clone() };
  let mut left_equal = Vec::new();
  let mut right_equal = Vec::new();
  for (i, xi) in chain.iter().enumerate() {
    let u = und(k - i);
    let s = sub(i);
    if !xi.contains_space(&u) || !s.contains_space(xi) {
      return Err(Error::Violation(format!("sandwich fails at index {i}")));
    }
    left_equal.push(&u == xi);
    right_equal.push(&s == xi);
  }
  Ok(Prop4Report { length: k, left_equal, right_equal })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Prop4Report {
  pub length: usize,
  pub left_equal: Vec<bool>,
  pub right_equal: Vec<bool>,
}

/// `V / W` for submodules `W ⊂ V` of `X`.
pub fn subquotient(x: &LeftModule, v: &Subspace, w: &Subspace) -> LeftModule {
  let sub = x.restrict(v);
  let inner = Subspace::from_cols(&w.basis_cols().select_rows(v.pivots()));
  sub.quotient(&inner).0
}

#[cfg(test)]
mod tests {
  use super::*;
  use crate::corpus;
  use crate::tworep::TwoRep;

  #[test]
  fn canonical_alpha_on_regular_module() {
    let a = corpus::truncated_polynomial(1009, 3);
    let m = TwoRep::defining(&a).unwrap();
    let alpha = m.canonical_alpha().unwrap();
    let x = LeftModule::regular(&a);
    assert_eq!(alpha.sub_alpha(&a, &x), x.socle(&a));
    assert_eq!(alpha.und_alpha(&a, &x).unwrap(), x.radical(&a));
    let (up, l) = alpha.upper_filtration(&a, &x);
    assert_eq!(up, x.socle_series(&a));
    assert_eq!(l, Length::Finite(3));
    let (low, _) = alpha.lower_filtration(&a, &x).unwrap();
    assert_eq!(low, x.radical_series(&a));
  }

  #[test]
  fn identity_generator_never_annihilates() {
    let a = corpus::truncated_polynomial(1009, 2);
    let m = TwoRep::defining(&a).unwrap();
    let alpha = AnnihilatorSet::new(&a, m.t.clone(), vec![Matrix::identity(a.p(), m.t.dim())]).unwrap();
    let x = LeftModule::regular(&a);
    assert!(alpha.sub_alpha(&a, &x).is_zero());
    assert!(alpha.und_alpha(&a, &x).unwrap().is_full());
    assert_eq!(alpha.annihilation_length(&a, &x).unwrap(), Length::Infinite);
  }

  #[test]
  fn empty_generators_annihilate_everything() {
    let a = corpus::truncated_polynomial(1009, 2);
    let m = TwoRep::defining(&a).unwrap();
    let alpha = AnnihilatorSet::new(&a, m.t.clone(), vec![]).unwrap();
    let x = LeftModule::regular(&a);
    assert!(alpha.annihilates(&a, &x));
    assert!(alpha.sub_alpha(&a, &x).is_full());
    assert!(alpha.und_alpha(&a, &x).unwrap().is_zero());
  }
}
