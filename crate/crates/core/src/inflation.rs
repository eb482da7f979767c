//! Tensor products of finitary categories, given by their category
//! algebras, and the inflation of a 2-representation by such a category.

use serde::Serialize;

use crate::algebra::Algebra;
use crate::bimodule::Bimodule;
use crate::corpus;
use crate::error::{Error, Result};
use crate::iso::IsoVerdict;
use crate::matrix::Matrix;
use crate::tworep::{strongly_connected, TwoRep};

/// `c1 ⊠ c2` on the Kronecker product of the category algebras. Objects are
/// pairs `(i, j)` at index `i * n2 + j`; `pos[x * dim(c2) + y]` is the basis
/// index of `x (x) y`.
pub fn tensor_category(c1: &Algebra, c2: &Algebra) -> (Algebra, Vec<usize>) {
  c1.tensor(c2)
}

/// The category with one object and endomorphism ring `F_p`.
pub fn point(p: u64) -> Algebra {
  corpus::field_algebra(p)
}

/// The semisimple category with `k` pairwise non-isomorphic objects.
pub fn semisimple_category(p: u64, k: usize) -> Algebra {
  assert!(k >= 1);
  let mut c = point(p);
  for _ in 1..k {
    c = corpus::product(&c, &point(p));
  }
  c
}

/// The inflation `M ⊠ c`: base algebra `C (x) c`, action bimodules
/// `T_ij (x) c` with `c` acting regularly on the second factor, and the
/// endomorphism action extended by the identity.
pub fn inflate(m: &TwoRep, c: &Algebra) -> Result<TwoRep> {
  if m.p() != c.p() {
    return Err(Error::Input("the category is over a different field".into()));
  }
  let (base, pos) = tensor_category(&m.c, c);
  let dc = c.dim();
  let p = m.p();
  let lc: Vec<Matrix> = (0..dc).map(|y| c.left_mult_basis(y)).collect();
  let rc: Vec<Matrix> = (0..dc).map(|y| c.right_mult_basis(y)).collect();
  let blocks = m
    .blocks
    .iter()
    .map(|t| {
      let z = Matrix::zeros(p, t.dim() * dc, t.dim() * dc);
      let mut left = vec![z.clone(); base.dim()];
      let mut right = vec![z; base.dim()];
      for x in 0..m.c.dim() {
        for y in 0..dc {
          left[pos[x * dc + y]] = t.left(x).kron(&lc[y]);
          right[pos[x * dc + y]] = t.right(x).kron(&rc[y]);
        }
      }
      Bimodule::new(p, t.dim() * dc, left, right)
    })
    .collect();
  let id = Matrix::identity(p, dc);
  let end_left = m.end_left.iter().map(|e| e.kron(&id)).collect();
  let end_right = m.end_right.iter().map(|e| e.kron(&id)).collect();
  TwoRep::new(m.a.clone(), base, blocks, end_left, end_right)
}

/// `[F]_M (x) I_k`.
pub fn kron_identity(m: &[Vec<usize>], k: usize) -> Vec<Vec<usize>> {
  let r = m.len();
  (0..r * k).map(|x| (0..r * k).map(|y| if x % k == y % k { m[x / k][y / k] } else { 0 }).collect()).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct Prop2Report {
  pub subquotients: usize,
  pub objects: usize,
  pub matrices: Vec<Vec<Vec<usize>>>,
  pub verdicts: Vec<IsoVerdict>,
}

/// Runs the weak Jordan-Hölder analysis on `M ⊠ c` for a transitive `M`
/// and checks that there is one equivalent subquotient per object of `c`.
pub fn check_prop2(m: &TwoRep, c: &Algebra, bound: usize) -> Result<Prop2Report> {
  if strongly_connected(&m.action_matrix()).len() != 1 {
    return Err(Error::Precondition("the representation is not transitive".into()));
  }
  let inf = inflate(m, c)?;
  let rep = inf.is_isotypic(bound)?;
  let base = m.is_isotypic(bound)?;
  let mut verdicts = Vec::new();
  for s in &rep.subquotients {
    verdicts.push(crate::tworep::compare_subquotients(&base.subquotients[0], s, bound));
  }
  let report = Prop2Report {
    subquotients: rep.subquotients.len(),
    objects: c.n(),
    matrices: rep.subquotients.iter().map(|s| s.matrix.clone()).collect(),
    verdicts,
  };
  if report.subquotients != report.objects {
    return Err(Error::Violation(format!("{} subquotients for {} objects", report.subquotients, report.objects)));
  }
  if let Some(v) = report.verdicts.iter().find(|v| !v.is_equivalent()) {
    return Err(Error::Violation(format!("a subquotient is not equivalent to the original: {v:?}")));
  }
  Ok(report)
}

#[cfg(test)]
mod tests {
  use super::*;
  use crate::iso;

  #[test]
  fn point_is_a_unit() {
    let a = corpus::nakayama(1009, 2, 2);
    let (t, _) = tensor_category(&a, &point(1009));
    assert!(iso::find_isomorphism(&t, &a, 12).is_isomorphic());
  }

  #[test]
  fn local_times_local_is_local() {
    let a = corpus::truncated_polynomial(1009, 2);
    let b = corpus::truncated_polynomial(1009, 3);
    let (t, _) = tensor_category(&a, &b);
    assert_eq!(t.dim(), 6);
    assert_eq!(t.n(), 1);
    assert!(t.validate().passes());
  }

  #[test]
  fn inflation_by_dual_numbers() {
    let a = corpus::truncated_polynomial(7, 2);
    let m = TwoRep::defining(&a).unwrap();
    let inf = inflate(&m, &corpus::truncated_polynomial(7, 2)).unwrap();
    inf.validate().unwrap();
    assert_eq!(inf.c.dim(), 4);
    assert_eq!(inf.action_matrix(), vec![vec![2]]);
    assert!(inf.is_faithful());
  }

  #[test]
  fn inflation_by_two_objects_is_block_diagonal() {
    let a = corpus::nakayama(1009, 2, 2);
    let m = TwoRep::defining(&a).unwrap();
    let inf = inflate(&m, &semisimple_category(1009, 2)).unwrap();
    inf.validate().unwrap();
    assert_eq!(inf.action_matrix(), kron_identity(&m.action_matrix(), 2));
    let r = check_prop2(&m, &semisimple_category(1009, 2), 12).unwrap();
    assert_eq!(r.subquotients, 2);
  }
}
