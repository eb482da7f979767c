//! Trivial extensions, symmetric forms, the 2-categories `C(B, M)` at the
//! level of composition tables, products of tables and `Y_B`.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use crate::algebra::Algebra;
use crate::bimodule::{tensor, Bimodule};
use crate::cells::{self, CompositionTable, Element};
use crate::error::{Error, Result};
use crate::field;
use crate::matrix::{Echelon, Matrix};
use crate::module::{hom_space, random_invertible};

/// `(x, m)(y, n) = (xy, xn + my)` on `B ⊕ M`. The basis of `M` is replaced
/// by one adapted to the blocks `e_i M e_j`; the idempotents of `B` come
/// first and remain the idempotents.
pub fn trivial_extension(b: &Algebra, m: &Bimodule) -> Result<Algebra> {
  m.check(b, b)?;
  let p = b.p();
  let db = b.dim();
  let dm = m.dim();
  let n = b.n();
  let mut cols = Vec::new();
  let mut mblock = Vec::new();
  for i in 0..n {
    for j in 0..n {
      let proj = m.left(i).mul(m.right(j));
      let mut e = Echelon::new(p, dm);
      for v in proj.col_vecs() {
        if e.insert(v.clone()) {
          cols.push(v);
          mblock.push((i, j));
        }
      }
    }
  }
  let q = Matrix::from_cols(p, dm, &cols);
  let qi = q.inverse().ok_or_else(|| Error::Input("the bimodule is not the sum of its blocks".into()))?;
  let left: Vec<Matrix> = (0..db).map(|x| qi.mul(m.left(x)).mul(&q)).collect();
  let right: Vec<Matrix> = (0..db).map(|x| qi.mul(m.right(x)).mul(&q)).collect();
  let mut prods = Vec::new();
  for (x, y, res) in b.sparse_products() {
    prods.push((x, y, res));
  }
  for x in 0..db {
    for u in 0..dm {
      let l: Vec<(usize, u64)> = (0..dm).filter_map(|k| Some((db + k, left[x].get(k, u))).filter(|t| t.1 != 0)).collect();
      if !l.is_empty() {
        prods.push((x, db + u, l));
      }
      let r: Vec<(usize, u64)> = (0..dm).filter_map(|k| Some((db + k, right[x].get(k, u))).filter(|t| t.1 != 0)).collect();
      if !r.is_empty() {
        prods.push((db + u, x, r));
      }
    }
  }
  let mut labels = b.labels().to_vec();
  labels.extend((0..dm).map(|u| format!("m{u}")));
  let mut block = b.blocks().to_vec();
  block.extend(mblock);
  let a = Algebra::from_products(p, labels, n, block, &prods);
  a.ensure_valid()?;
  Ok(a)
}

/// The embedding of `B` into its trivial extension as the first basis vectors.
pub fn inclusion(b: &Algebra, a: &Algebra) -> Vec<Vec<u64>> {
  (0..b.dim()).map(|y| a.basis_vec(y)).collect()
}

/// `A` as an `A`-`B`-bimodule along `incl`.
pub fn restrict_right(a: &Algebra, incl: &[Vec<u64>]) -> Bimodule {
  Bimodule::new(a.p(), a.dim(), (0..a.dim()).map(|x| a.left_mult_basis(x)).collect(), incl.iter().map(|y| a.right_mult(y)).collect())
}

/// `A` as a `B`-`A`-bimodule along `incl`.
pub fn restrict_left(a: &Algebra, incl: &[Vec<u64>]) -> Bimodule {
  Bimodule::new(a.p(), a.dim(), incl.iter().map(|y| a.left_mult(y)).collect(), (0..a.dim()).map(|x| a.right_mult_basis(x)).collect())
}

/// `A (x)_B A` for `B ⊂ A` as an `A`-`A`-bimodule.
pub fn induced_square(a: &Algebra, b: &Algebra, incl: &[Vec<u64>]) -> Bimodule {
  tensor(&restrict_right(a, incl), b, &restrict_left(a, incl)).module
}

#[derive(Clone, Debug, Serialize)]
pub struct SymmetryReport {
  pub symmetric: bool,
  /// The form `lambda` on the basis, when found.
  pub lambda: Option<Vec<u64>>,
  pub reason: String,
}

/// Searches for `lambda` with `lambda(xy) = lambda(yx)` whose pairing
/// `(x, y) -> lambda(xy)` is nondegenerate. The solution space of the first
/// condition is computed exactly; its basis vectors are tried first and then
/// seeded random combinations.
pub fn is_symmetric(b: &Algebra) -> SymmetryReport {
  let p = b.p();
  let d = b.dim();
  match b.nakayama_permutation() {
    Ok(s) if s.iter().enumerate().all(|(i, &x)| i == x) => {}
    Ok(s) => return SymmetryReport { symmetric: false, lambda: None, reason: format!("not weakly symmetric: sigma = {s:?}") },
    Err(e) => return SymmetryReport { symmetric: false, lambda: None, reason: e.to_string() },
  }
  let mut rows = Vec::new();
  for x in 0..d {
    for y in 0..d {
      let c: Vec<u64> = b.mul_basis(x, y).iter().zip(b.mul_basis(y, x)).map(|(&u, &v)| field::sub(u, v, p)).collect();
      if c.iter().any(|&z| z != 0) {
        rows.push(c);
      }
    }
  }
  let sols = if rows.is_empty() { Matrix::identity(p, d) } else { Matrix::from_rows(p, d, &rows).kernel() };
  let basis = sols.col_vecs();
  let gram = |l: &[u64]| {
    Matrix::from_fn(p, d, d, |x, y| b.mul_basis(x, y).iter().zip(l).fold(0, |s, (&u, &v)| field::add(s, field::mul(u, v, p), p)))
  };
  let mut cands: Vec<Vec<u64>> = basis.clone();
  let mut rng = ChaCha8Rng::seed_from_u64(0);
  for _ in 0..32 {
    let mut v = vec![0u64; d];
    for s in &basis {
      let c = rng.gen_range(0..p);
      for (o, &x) in v.iter_mut().zip(s) {
        *o = field::add(*o, field::mul(c, x, p), p);
      }
    }
    cands.push(v);
  }
  for l in cands {
    if gram(&l).is_invertible() {
      return SymmetryReport { symmetric: true, lambda: Some(l), reason: String::new() };
    }
  }
  SymmetryReport { symmetric: false, lambda: None, reason: format!("no nondegenerate form among {} trace forms", basis.len()) }
}

/// `A_0 = B` and `A_t` the trivial extension of `A_{t-1}` by itself, each
/// certified symmetric.
pub fn iterate_trivext(b: &Algebra, k: usize) -> Result<Vec<Algebra>> {
  let mut out = vec![b.clone()];
  let r = is_symmetric(b);
  if !r.symmetric {
    return Err(Error::Precondition(format!("the base is not symmetric: {}", r.reason)));
  }
  for t in 1..=k {
    let prev = out.last().unwrap();
    let next = trivial_extension(prev, &Bimodule::regular(prev))?;
    let r = is_symmetric(&next);
    if !r.symmetric {
      return Err(Error::Violation(format!("A_{t} is not symmetric: {}", r.reason)));
    }
    out.push(next);
  }
  Ok(out)
}

/// One summand of `M`: `B` itself, or `B e_i (x) e_j B`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Summand {
  Regular,
  Free(usize, usize),
}

/// A split decomposition of `M` into summands of the two kinds:
/// `injections[k] : S_k -> M`, `projections[k] : M -> S_k`.
#[derive(Clone, Debug)]
pub struct AddWitness {
  pub summands: Vec<Summand>,
  pub injections: Vec<Matrix>,
  pub projections: Vec<Matrix>,
}

fn summand_bimodule(b: &Algebra, s: Summand) -> Result<Bimodule> {
  match s {
    Summand::Regular => Ok(Bimodule::regular(b)),
    Summand::Free(i, j) => Bimodule::projective(b, i, j),
  }
}

impl AddWitness {
  /// `M = B` with the identity maps.
  pub fn regular(b: &Algebra) -> Self {
    let id = Matrix::identity(b.p(), b.dim());
    AddWitness { summands: vec![Summand::Regular], injections: vec![id.clone()], projections: vec![id] }
  }

  pub fn check(&self, b: &Algebra, m: &Bimodule) -> Result<()> {
    let p = b.p();
    let k = self.summands.len();
    if self.injections.len() != k || self.projections.len() != k {
      return Err(Error::Input("witness lists have different lengths".into()));
    }
    let mut total = Matrix::zeros(p, m.dim(), m.dim());
    for s in 0..k {
      let x = summand_bimodule(b, self.summands[s])?;
      let (i, q) = (&self.injections[s], &self.projections[s]);
      if i.rows() != m.dim() || i.cols() != x.dim() || q.rows() != x.dim() || q.cols() != m.dim() {
        return Err(Error::Dimension(format!("summand {s} has maps of the wrong shape")));
      }
      if !x.is_homomorphism(m, i) || !m.is_homomorphism(&x, q) {
        return Err(Error::Violation(format!("the maps of summand {s} are not bimodule maps")));
      }
      for t in 0..k {
        let prod = self.projections[t].mul(i);
        let ok = if s == t { prod.is_identity() } else { prod.is_zero() };
        if !ok {
          return Err(Error::Violation(format!("projection {t} after injection {s} is wrong")));
        }
      }
      total = total.add(&i.mul(q));
    }
    if !total.is_identity() {
      return Err(Error::Violation("the summands do not exhaust M".into()));
    }
    Ok(())
  }
}

/// Bimodule isomorphism `x -> y` from a random combination of the hom basis.
pub fn find_bimodule_isomorphism(a: &Algebra, x: &Bimodule, y: &Bimodule, rng: &mut ChaCha8Rng) -> Option<Matrix> {
  if x.dim() != y.dim() {
    return None;
  }
  if x.dim() == 0 {
    return Some(Matrix::zeros(a.p(), 0, 0));
  }
  random_invertible(a.p(), x.dim(), &x.hom(a, a, y), rng, 32).filter(|f| x.is_homomorphism(y, f))
}

fn sum_all(a: &Algebra, xs: &[Bimodule]) -> Bimodule {
  let p = a.p();
  let empty = Bimodule::new(p, 0, vec![Matrix::zeros(p, 0, 0); a.dim()], vec![Matrix::zeros(p, 0, 0); a.dim()]);
  xs.iter().fold(empty, |acc, x| acc.direct_sum(x))
}

/// `C(B, M)`: the algebra `A`, the classes `1`, `F_ij` and `G = A (x)_B A`,
/// and the table with `1` at `0`, `F_ij` at `1 + i n + j`, `G` at `1 + n^2`.
#[derive(Clone, Debug)]
pub struct CbmTable {
  pub a: Algebra,
  pub classes: Vec<Bimodule>,
  pub table: CompositionTable,
}

#[derive(Clone, Debug, Serialize)]
pub struct Prop52Report {
  /// `(g, f, dim of g ∘ f, summands)` for every product.
  pub products: Vec<(String, String, usize, Vec<(String, usize)>)>,
  pub dim_a: usize,
  pub dim_g: usize,
}

/// Builds the table of `C(B, M)`, checking each product against its
/// predicted decomposition by an explicit bimodule isomorphism.
pub fn cbm_table(b: &Algebra, m: &Bimodule, w: &AddWitness) -> Result<(CbmTable, Prop52Report)> {
  w.check(b, m)?;
  let a = trivial_extension(b, m)?;
  a.nakayama_permutation()?;
  let n = a.n();
  let incl = inclusion(b, &a);
  let g = induced_square(&a, b, &incl);
  let ends = g.hom(&a, &a, &g);
  let (e, _) = Algebra::from_matrices(a.p(), &[Matrix::identity(a.p(), g.dim())], &ends)?;
  if e.dim() - e.radical().dim() != 1 {
    return Err(Error::Precondition("A (x)_B A is decomposable; only the indecomposable case is modelled".into()));
  }
  let mut classes = vec![Bimodule::regular(&a)];
  for i in 0..n {
    for j in 0..n {
      classes.push(Bimodule::projective(&a, i, j)?);
    }
  }
  classes.push(g.clone());
  let gi = 1 + n * n;
  let f = |i: usize, j: usize| 1 + i * n + j;
  let mut labels = vec!["1".to_string()];
  labels.extend((0..n).flat_map(|i| (0..n).map(move |j| format!("F{i}{j}"))));
  labels.push("G".into());
  let bd = a.block_dims();
  let mut rng = ChaCha8Rng::seed_from_u64(0);
  let mut mult = BTreeMap::new();
  let mut products = Vec::new();
  for x in 0..classes.len() {
    for y in 0..classes.len() {
      // x ∘ y = X (x)_A Y, apply y first.
      let z = tensor(&classes[x], &a, &classes[y]).module;
      let mut pred: BTreeMap<usize, usize> = BTreeMap::new();
      if x == 0 {
        pred.insert(y, 1);
      } else if y == 0 {
        pred.insert(x, 1);
      } else if x != gi && y != gi {
        let (i, j) = ((x - 1) / n, (x - 1) % n);
        let (k, l) = ((y - 1) / n, (y - 1) % n);
        if bd[j][k] > 0 {
          pred.insert(f(i, l), bd[j][k]);
        }
      } else if x == gi && y == gi {
        pred.insert(gi, 1);
        for s in &w.summands {
          match *s {
            Summand::Regular => *pred.entry(gi).or_default() += 1,
            Summand::Free(i, j) => *pred.entry(f(i, j)).or_default() += 1,
          }
        }
      } else if x == gi {
        // G (x)_A A e_k (x) e_l A = (G e_k) (x) e_l A.
        let (k, l) = ((y - 1) / n, (y - 1) % n);
        let top = left_top_of_corner(&a, &g, k);
        for (i, &t) in top.iter().enumerate() {
          if t > 0 {
            pred.insert(f(i, l), t);
          }
        }
      } else {
        // A e_i (x) e_j G.
        let (i, j) = ((x - 1) / n, (x - 1) % n);
        let top = right_top_of_corner(&a, &g, j);
        for (l, &t) in top.iter().enumerate() {
          if t > 0 {
            pred.insert(f(i, l), t);
          }
        }
      }
      let parts: Vec<Bimodule> = pred.iter().flat_map(|(&c, &k)| std::iter::repeat_n(classes[c].clone(), k)).collect();
      let target = sum_all(&a, &parts);
      if find_bimodule_isomorphism(&a, &z, &target, &mut rng).is_none() {
        return Err(Error::stage(
          "prop52",
          format!("{} ∘ {} does not decompose within the classes", labels[x], labels[y]),
          json!({ "g": labels[x], "f": labels[y], "dim": z.dim(), "predicted": target.dim() }),
        ));
      }
      let sums: Vec<(usize, usize)> = pred.iter().map(|(&c, &k)| (c, k)).collect();
      products.push((labels[x].clone(), labels[y].clone(), z.dim(), sums.iter().map(|&(c, k)| (labels[c].clone(), k)).collect()));
      mult.insert((x, y), sums);
    }
  }
  let elements = labels.iter().map(|l| Element { label: l.clone(), src: 0, tgt: 0 }).collect();
  // For M = B over a symmetric B the star map is F_ij -> F_{s(j), i} with
  // s the inverse Nakayama permutation, and G is self-adjoint.
  let star = if w.summands == [Summand::Regular] && is_symmetric(b).symmetric {
    let dual = left_dual(&a, &g);
    if find_bimodule_isomorphism(&a, &dual, &g, &mut rng).is_none() {
      return Err(Error::stage("prop52", "G is not self-adjoint", json!({ "dim": g.dim(), "dual": dual.dim() })));
    }
    let inv = cells::invert(&a.nakayama_permutation()?);
    let mut s = vec![0; labels.len()];
    for i in 0..n {
      for j in 0..n {
        s[f(i, j)] = f(inv[j], i);
      }
    }
    s[gi] = gi;
    Some(s)
  } else {
    None
  };
  let table = CompositionTable { elements, identities: vec![0], mult, star };
  table.validate()?;
  let report = Prop52Report { products, dim_a: a.dim(), dim_g: g.dim() };
  Ok((CbmTable { a, classes, table }, report))
}

/// Top multiplicities of the left module `G e_i`.
fn left_top_of_corner(a: &Algebra, g: &Bimodule, i: usize) -> Vec<usize> {
  let lm = g.to_left();
  let sub = crate::subspace::Subspace::from_cols(g.right(i));
  lm.restrict(&sub).top_decomposition(a)
}

/// Top multiplicities of the right module `e_l G`, indexed by vertex.
fn right_top_of_corner(a: &Algebra, g: &Bimodule, l: usize) -> Vec<usize> {
  let rm = g.right_as_left();
  let sub = crate::subspace::Subspace::from_cols(g.left(l));
  rm.restrict(&sub).top_decomposition(&a.opposite())
}

pub fn check_prop52(b: &Algebra, m: &Bimodule, w: &AddWitness) -> Result<Prop52Report> {
  cbm_table(b, m, w).map(|(_, r)| r)
}

/// `Hom_{A-}(X, A)` with `(a f b)(x) = f(x a) b`.
pub fn left_dual(a: &Algebra, x: &Bimodule) -> Bimodule {
  let p = a.p();
  let d = a.dim();
  let regl: Vec<Matrix> = (0..d).map(|y| a.left_mult_basis(y)).collect();
  let basis = hom_space(p, x.dim(), d, x.lefts(), &regl);
  let flat: Vec<Vec<u64>> = basis.iter().map(|f| f.flatten()).collect();
  let co = crate::coords::Coordinates::new(p, x.dim() * d, &flat).expect("hom basis is independent");
  let k = basis.len();
  let act = |op: &dyn Fn(&Matrix) -> Matrix| {
    let cols: Vec<Vec<u64>> = basis.iter().map(|f| co.coords(&op(f).flatten()).expect("closed")).collect();
    Matrix::from_cols(p, k, &cols)
  };
  let left = (0..d).map(|y| act(&|f: &Matrix| f.mul(x.right(y)))).collect();
  let right = (0..d).map(|y| act(&|f: &Matrix| a.right_mult_basis(y).mul(f))).collect();
  Bimodule::new(p, k, left, right)
}

#[derive(Clone, Debug, Serialize)]
pub struct Prop53Report {
  pub lambda: Vec<u64>,
  pub dim_g: usize,
  pub dual_dim: usize,
  pub self_dual: bool,
}

/// For symmetric `B` and `M = B`: the trivial extension is symmetric and
/// `Hom_{A-}(A (x)_B A, A) ≅ A (x)_B A`.
pub fn check_prop53(b: &Algebra) -> Result<Prop53Report> {
  let rb = is_symmetric(b);
  if !rb.symmetric {
    return Err(Error::Precondition(format!("B is not symmetric: {}", rb.reason)));
  }
  let a = trivial_extension(b, &Bimodule::regular(b))?;
  let ra = is_symmetric(&a);
  let lambda = ra.lambda.ok_or_else(|| Error::Violation(format!("the trivial extension is not symmetric: {}", ra.reason)))?;
  let g = induced_square(&a, b, &inclusion(b, &a));
  let dual = left_dual(&a, &g);
  let mut rng = ChaCha8Rng::seed_from_u64(0);
  let self_dual = find_bimodule_isomorphism(&a, &dual, &g, &mut rng).is_some();
  if !self_dual {
    return Err(Error::Violation("A (x)_B A is not isomorphic to its left dual".into()));
  }
  Ok(Prop53Report { lambda, dim_g: g.dim(), dual_dim: dual.dim(), self_dual })
}

#[derive(Clone, Debug, Serialize)]
pub struct Lemma55Report {
  pub dim_end: usize,
  pub center_dim: usize,
  pub top_dim: usize,
  pub local: bool,
}

/// `End_{A-A}(A (x)_B A)` for `A` the trivial extension of `B` by `B`.
pub fn check_lemma55(b: &Algebra) -> Result<Lemma55Report> {
  let a = trivial_extension(b, &Bimodule::regular(b))?;
  let g = induced_square(&a, b, &inclusion(b, &a));
  let ends = g.hom(&a, &a, &g);
  let (e, _) = Algebra::from_matrices(a.p(), &[Matrix::identity(a.p(), g.dim())], &ends)?;
  let top_dim = e.dim() - e.radical().dim();
  let r = Lemma55Report { dim_end: e.dim(), center_dim: b.center_dim(), top_dim, local: top_dim == 1 };
  if !r.local {
    return Err(Error::Violation(format!("End(A (x)_B A) has a {top_dim}-dimensional top")));
  }
  if r.dim_end != 4 * r.center_dim {
    return Err(Error::Violation(format!("dim End = {} but 4 dim Z(B) = {}", r.dim_end, 4 * r.center_dim)));
  }
  Ok(r)
}

pub fn tensor_tables(t1: &CompositionTable, t2: &CompositionTable) -> CompositionTable {
  t1.tensor(t2)
}

/// `Y_B`: one object whose identity has endomorphism algebra `b`.
#[derive(Clone, Debug)]
pub struct YbTable {
  pub table: CompositionTable,
  pub end_dim: usize,
}

pub fn y_b_table(b: &Algebra) -> Result<YbTable> {
  if b.n() != 1 || !b.is_commutative() {
    return Err(Error::Precondition("B must be local and commutative".into()));
  }
  let mut mult = BTreeMap::new();
  mult.insert((0, 0), vec![(0, 1)]);
  let table = CompositionTable { elements: vec![Element { label: "1".into(), src: 0, tgt: 0 }], identities: vec![0], mult, star: Some(vec![0]) };
  Ok(YbTable { table, end_dim: b.dim() })
}

/// Strong regularity of every two-sided cell of a product table, and the
/// m-function of each product element against the product of the factors.
#[derive(Clone, Debug, Serialize)]
pub struct ProductReport {
  pub maximal_cell_size: usize,
  pub strongly_regular: bool,
  pub m_multiplicative: bool,
}

pub fn check_product(t1: &CompositionTable, t2: &CompositionTable) -> Result<ProductReport> {
  let t = tensor_tables(t1, t2);
  let cs = cells::compute_cells(&t);
  let c1 = cells::compute_cells(t1);
  let c2 = cells::compute_cells(t2);
  let j = cs.maximal_two_sided().ok_or_else(|| Error::Violation("no maximal two-sided cell".into()))?;
  let size = cs.two_sided_cells[j].len();
  let strongly_regular = (0..cs.two_sided_cells.len()).all(|k| cells::is_strongly_regular(&t, &cs, k).ok);
  let m2 = t2.len();
  let mut m_multiplicative = true;
  for x in 0..t.len() {
    let (x1, x2) = (x / m2, x % m2);
    let m = cells::m_function(&t, &cs, x)?;
    let m1 = cells::m_function(t1, &c1, x1)?;
    let mm2 = cells::m_function(t2, &c2, x2)?;
    if m != m1 * mm2 {
      m_multiplicative = false;
    }
  }
  Ok(ProductReport { maximal_cell_size: size, strongly_regular, m_multiplicative })
}

/// The built-in algebras together with iterated trivial extensions (depth 2
/// over the field, depth 1 over the dual numbers) and tensor products.
pub fn full_corpus(p: u64) -> Result<Vec<(String, Algebra)>> {
  let mut out = crate::corpus::named(p);
  let field = crate::corpus::field_algebra(p);
  let dual = crate::corpus::truncated_polynomial(p, 2);
  for (name, b, depth) in [("field", &field, 2), ("dual", &dual, 1)] {
    for (t, a) in iterate_trivext(b, depth)?.into_iter().enumerate().skip(1) {
      out.push((format!("trivext{t}_{name}"), a));
    }
  }
  let nak = crate::corpus::nakayama(p, 2, 2);
  out.push(("dual_x_dual".into(), dual.tensor(&dual).0));
  out.push(("dual_x_nakayama2_2".into(), dual.tensor(&nak).0));
  Ok(out)
}

#[cfg(test)]
mod tests {
  use super::*;
  use crate::corpus;
  use crate::iso;

  #[test]
  fn field_by_itself_is_dual_numbers() {
    let f = corpus::field_algebra(7);
    let a = trivial_extension(&f, &Bimodule::regular(&f)).unwrap();
    assert!(iso::find_isomorphism(&a, &corpus::truncated_polynomial(7, 2), 12).is_isomorphic());
  }

  #[test]
  fn dual_numbers_by_themselves() {
    let b = corpus::truncated_polynomial(7, 2);
    let a = trivial_extension(&b, &Bimodule::regular(&b)).unwrap();
    assert_eq!(a.dim(), 4);
    assert_eq!(a.nilpotency_degree(), 3);
  }

  #[test]
  fn symmetric_forms() {
    let r = is_symmetric(&corpus::truncated_polynomial(7, 2));
    assert_eq!(r.lambda, Some(vec![0, 1]));
    assert!(!is_symmetric(&corpus::nakayama(1009, 2, 2)).symmetric);
  }

  #[test]
  fn iteration_doubles() {
    let xs = iterate_trivext(&corpus::field_algebra(7), 2).unwrap();
    assert_eq!(xs.iter().map(Algebra::dim).collect::<Vec<_>>(), vec![1, 2, 4]);
  }

  #[test]
  fn induced_square_is_local_over_field_and_dual() {
    assert_eq!(check_lemma55(&corpus::field_algebra(7)).unwrap().dim_end, 4);
    // The endomorphism algebra has dimension 8, above 7.
    assert_eq!(check_lemma55(&corpus::truncated_polynomial(1009, 2)).unwrap().dim_end, 8);
  }

  #[test]
  fn full_corpus_is_self_injective() {
    for (name, a) in full_corpus(1009).unwrap() {
      assert!(a.validate().passes(), "{name}");
      a.nakayama_permutation().unwrap_or_else(|e| panic!("{name}: {e}"));
    }
  }

  #[test]
  fn y_b_is_trivial() {
    let y = y_b_table(&corpus::truncated_polynomial(7, 2)).unwrap();
    assert_eq!(y.table.len(), 1);
    assert_eq!(y.end_dim, 2);
  }

  #[test]
  fn cbm_products_close_for_dual_numbers() {
    let b = corpus::truncated_polynomial(1009, 2);
    let r = check_prop52(&b, &Bimodule::regular(&b), &AddWitness::regular(&b)).unwrap();
    assert_eq!((r.dim_a, r.dim_g), (4, 8));
    let gg = r.products.iter().find(|x| x.0 == "G" && x.1 == "G").unwrap();
    assert_eq!(gg.2, 16);
    assert_eq!(gg.3, vec![("G".to_string(), 2)]);
    let (t, _) = cbm_table(&b, &Bimodule::regular(&b), &AddWitness::regular(&b)).unwrap();
    assert!(t.table.star.is_some());
  }

  #[test]
  fn free_summand_breaks_self_injectivity() {
    let p = 1009;
    let b = corpus::truncated_polynomial(p, 2);
    let reg = Bimodule::regular(&b);
    let free = Bimodule::projective(&b, 0, 0).unwrap();
    let m = reg.direct_sum(&free);
    let (d1, d2) = (reg.dim(), free.dim());
    let d = d1 + d2;
    let inj = |off: usize, k: usize| Matrix::from_fn(p, d, k, |r, c| u64::from(r == off + c));
    let prj = |off: usize, k: usize| Matrix::from_fn(p, k, d, |r, c| u64::from(c == off + r));
    let w = AddWitness {
      summands: vec![Summand::Regular, Summand::Free(0, 0)],
      injections: vec![inj(0, d1), inj(d1, d2)],
      projections: vec![prj(0, d1), prj(d1, d2)],
    };
    w.check(&b, &m).unwrap();
    // B ⊕ B (x) B gives a trivial extension that is not self-injective.
    match check_prop52(&b, &m, &w) {
      Err(Error::NotSelfInjective { .. }) => {}
      other => panic!("{other:?}"),
    }
  }

  #[test]
  fn induced_square_is_self_dual_for_dual_numbers() {
    let r = check_prop53(&corpus::truncated_polynomial(1009, 2)).unwrap();
    assert!(r.self_dual);
    assert_eq!(r.dual_dim, 8);
  }

  #[test]
  fn product_of_two_tables() {
    let t1 = cells::table_of_ca(&corpus::truncated_polynomial(1009, 2)).unwrap();
    let t2 = cells::table_of_ca(&corpus::nakayama(1009, 2, 2)).unwrap();
    let r = check_product(&t1, &t2).unwrap();
    assert_eq!(r.maximal_cell_size, 4);
    assert!(r.strongly_regular && r.m_multiplicative);
  }
}
