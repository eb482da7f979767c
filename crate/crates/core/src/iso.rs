//! Bounded search for algebra isomorphisms between block-adapted algebras.

use serde::Serialize;

use crate::algebra::Algebra;
use crate::coords::Coordinates;
use crate::field;
use crate::matrix::Matrix;

/// Default dimension bound for the exhaustive search.
pub const DEFAULT_SEARCH_BOUND: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum IsoVerdict {
  /// An explicit isomorphism: column `b` of the matrix is the image of the
  /// basis element `b`.
  Isomorphic(Matrix),
  /// Invariants agree but the dimension exceeds the search bound.
  EquivalentUpToInvariants,
  /// Invariants differ, or the search found nothing.
  NotIsomorphic(String),
}

impl IsoVerdict {
  pub fn is_isomorphic(&self) -> bool {
    matches!(self, IsoVerdict::Isomorphic(_))
  }
  pub fn is_equivalent(&self) -> bool {
    !matches!(self, IsoVerdict::NotIsomorphic(_))
  }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Invariants {
  pub dim: usize,
  pub n: usize,
  pub center_dim: usize,
  pub loewy: Vec<usize>,
  pub cartan: Vec<Vec<usize>>,
}

pub fn invariants(a: &Algebra) -> Invariants {
  Invariants { dim: a.dim(), n: a.n(), center_dim: a.center_dim(), loewy: a.loewy_vector(), cartan: a.cartan_matrix() }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
  fn go(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
    let n = used.len();
    if cur.len() == n {
      out.push(cur.clone());
      return;
    }
    for i in 0..n {
      if !used[i] {
        used[i] = true;
        cur.push(i);
        go(cur, used, out);
        cur.pop();
        used[i] = false;
      }
    }
  }
  let mut out = Vec::new();
  go(&mut Vec::new(), &mut vec![false; n], &mut out);
  out
}

/// Words in the generators spanning the algebra: returns generator-index
/// sequences whose products form a basis.
fn word_basis(a: &Algebra, gens: &[Vec<u64>]) -> Option<Vec<Vec<usize>>> {
  let d = a.dim();
  let mut words: Vec<Vec<usize>> = Vec::new();
  let mut vecs: Vec<Vec<u64>> = Vec::new();
  let mut e = crate::matrix::Echelon::new(a.p(), d);
  let mut frontier: Vec<(Vec<usize>, Vec<u64>)> = Vec::new();
  for (k, g) in gens.iter().enumerate() {
    if e.insert(g.clone()) {
      words.push(vec![k]);
      vecs.push(g.clone());
      frontier.push((vec![k], g.clone()));
    }
  }
  while !frontier.is_empty() && e.rank() < d {
    let mut next = Vec::new();
    for (w, v) in &frontier {
      for (k, g) in gens.iter().enumerate() {
        let prod = a.mul(g, v);
        if e.insert(prod.clone()) {
          let mut nw = vec![k];
          nw.extend(w);
          words.push(nw.clone());
          vecs.push(prod.clone());
          next.push((nw, prod));
        }
      }
    }
    frontier = next;
  }
  if e.rank() < d {
    None
  } else {
    Some(words)
  }
}

fn eval_word(a: &Algebra, imgs: &[Vec<u64>], w: &[usize]) -> Vec<u64> {
  let mut v = imgs[*w.last().unwrap()].clone();
  for &k in w.iter().rev().skip(1) {
    v = a.mul(&imgs[k], &v);
  }
  v
}

/// Checks that `phi` (columns = images of basis elements) is an algebra
/// isomorphism `a -> b`.
pub fn is_isomorphism(a: &Algebra, b: &Algebra, phi: &Matrix) -> bool {
  if !phi.is_invertible() {
    return false;
  }
  let cols = phi.col_vecs();
  for x in 0..a.dim() {
    for y in 0..a.dim() {
      let lhs = phi.mul_vec(a.mul_basis(x, y));
      let rhs = b.mul(&cols[x], &cols[y]);
      if lhs != rhs {
        return false;
      }
    }
  }
  true
}

/// Searches for an isomorphism `a -> b`. Idempotents are matched by a
/// permutation, each arrow of `a` is sent to a combination with coefficients
/// in `{0, 1, -1}` of the arrows of `b` in the matching block, and the map is
/// extended along a word basis.
pub fn find_isomorphism(a: &Algebra, b: &Algebra, bound: usize) -> IsoVerdict {
  let ia = invariants(a);
  let ib = invariants(b);
  if ia.dim != ib.dim || ia.n != ib.n || ia.center_dim != ib.center_dim || ia.loewy != ib.loewy {
    return IsoVerdict::NotIsomorphic(format!("invariants differ: {ia:?} vs {ib:?}"));
  }
  let n = a.n();
  let perms: Vec<Vec<usize>> = permutations(n)
    .into_iter()
    .filter(|pi| (0..n).all(|i| (0..n).all(|j| ia.cartan[i][j] == ib.cartan[pi[i]][pi[j]])))
    .collect();
  if perms.is_empty() {
    return IsoVerdict::NotIsomorphic("Cartan matrices differ up to permutation".into());
  }
  if a.dim() > bound {
    return IsoVerdict::EquivalentUpToInvariants;
  }
  let p = a.p();
  let arrows_a = a.arrows();
  let arrows_b = b.arrows();
  let mut gens: Vec<Vec<u64>> = (0..n).map(|i| a.basis_vec(i)).collect();
  gens.extend(arrows_a.iter().map(|(_, _, v)| v.clone()));
  let Some(words) = word_basis(a, &gens) else {
    return IsoVerdict::NotIsomorphic("generators do not span".into());
  };
  let wvecs: Vec<Vec<u64>> = words.iter().map(|w| eval_word(a, &gens, w)).collect();
  let co = Coordinates::new(p, a.dim(), &wvecs).expect("word basis is independent");
  let coeffs = [0u64, 1, p - 1];
  for pi in &perms {
    // Candidate images for each arrow of a.
    let cands: Vec<Vec<Vec<u64>>> = arrows_a
      .iter()
      .map(|&(i, j, _)| {
        let pool: Vec<&Vec<u64>> =
          arrows_b.iter().filter(|&&(s, t, _)| s == pi[i] && t == pi[j]).map(|(_, _, v)| v).collect();
        let mut out = Vec::new();
        let total = 3usize.pow(pool.len() as u32);
        for code in 1..total {
          let mut v = b.zero_vec();
          let mut c = code;
          for w in &pool {
            let k = coeffs[c % 3];
            c /= 3;
            if k != 0 {
              for (o, &x) in v.iter_mut().zip(w.iter()) {
                *o = field::add(*o, field::mul(k, x, p), p);
              }
            }
          }
          out.push(v);
        }
        out
      })
      .collect();
    if cands.iter().any(|c| c.is_empty()) {
      continue;
    }
    let mut choice = vec![0usize; cands.len()];
    loop {
      let mut imgs: Vec<Vec<u64>> = (0..n).map(|i| b.basis_vec(pi[i])).collect();
      imgs.extend(choice.iter().enumerate().map(|(k, &c)| cands[k][c].clone()));
      let wimg: Vec<Vec<u64>> = words.iter().map(|w| eval_word(b, &imgs, w)).collect();
      // phi = W' * W^{-1} on the standard basis.
      let cols: Vec<Vec<u64>> = (0..a.dim())
        .map(|x| {
          let c = co.coords_unchecked(&a.basis_vec(x));
          let mut v = b.zero_vec();
          for (k, &ck) in c.iter().enumerate() {
            if ck != 0 {
              for (o, &y) in v.iter_mut().zip(&wimg[k]) {
                *o = field::add(*o, field::mul(ck, y, p), p);
              }
            }
          }
          v
        })
        .collect();
      let phi = Matrix::from_cols(p, b.dim(), &cols);
      if is_isomorphism(a, b, &phi) {
        return IsoVerdict::Isomorphic(phi);
      }
      // Next choice.
      let mut k = 0;
      loop {
        if k == choice.len() {
          break;
        }
        choice[k] += 1;
        if choice[k] < cands[k].len() {
          break;
        }
        choice[k] = 0;
        k += 1;
      }
      if k == choice.len() {
        break;
      }
    }
  }
  IsoVerdict::NotIsomorphic("no isomorphism with small coefficients".into())
}

#[cfg(test)]
mod tests {
  use super::*;
  use crate::corpus;

  #[test]
  fn self_isomorphism() {
    let a = corpus::nakayama(1009, 3, 2);
    let v = find_isomorphism(&a, &a, DEFAULT_SEARCH_BOUND);
    assert!(v.is_isomorphic());
  }

  #[test]
  fn opposite_of_commutative_is_isomorphic() {
    let a = corpus::truncated_polynomial(1009, 3);
    assert!(find_isomorphism(&a, &a.opposite(), 12).is_isomorphic());
  }

  #[test]
  fn different_algebras() {
    let a = corpus::truncated_polynomial(1009, 4);
    let b = corpus::nakayama(1009, 2, 2);
    assert!(!find_isomorphism(&a, &b, 12).is_equivalent());
  }

  #[test]
  fn bound_exceeded() {
    let a = corpus::nakayama(1009, 2, 3);
    assert_eq!(find_isomorphism(&a, &a, 4), IsoVerdict::EquivalentUpToInvariants);
  }
}
