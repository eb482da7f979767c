//! Small worked examples. Each value was computed once by an independent
//! oracle (exhaustive search or a direct quotient-space computation) and is
//! frozen here as a literal.

use twocat::bimodule::{decompose, tensor, Bimodule};
use twocat::cells::{self, compute_cells, m_function};
use twocat::constructions::{is_symmetric, iterate_trivext, trivial_extension};
use twocat::inflation::{inflate, semisimple_category};
use twocat::module::LeftModule;
use twocat::tworep::TwoRep;
use twocat::{corpus, oracle, Algebra, Subspace};

fn nak() -> Algebra {
  corpus::nakayama(7, 2, 2)
}

fn span(p: u64, d: usize, vs: &[&[u64]]) -> Subspace {
  Subspace::span(p, d, &vs.iter().map(|v| v.to_vec()).collect::<Vec<_>>())
}

#[test]
fn radical_of_two_vertex_nakayama() {
  let a = nak();
  // Basis e0, e1, p0_1, p1_1: the radical is spanned by the two arrows.
  assert_eq!(a.radical(), &span(7, 4, &[&[0, 0, 1, 0], &[0, 0, 0, 1]]));
  assert_eq!(a.loewy_vector(), vec![4, 2]);
}

#[test]
fn socle_chain_of_truncated_cube() {
  let a = corpus::truncated_polynomial(7, 3);
  let x = LeftModule::regular(&a);
  let want = vec![
    Subspace::zero(7, 3),
    span(7, 3, &[&[0, 0, 1]]),
    span(7, 3, &[&[0, 1, 0], &[0, 0, 1]]),
    Subspace::full(7, 3),
  ];
  assert_eq!(x.socle_series(&a), want);
  // The lattice oracle sees exactly this chain.
  assert_eq!(oracle::submodule_lattice(&a, &x), want);
}

#[test]
fn composition_multiplicities() {
  let per_vertex = |a: &Algebra| (0..a.n()).map(|u| a.row_basis(u).len()).collect::<Vec<_>>();
  assert_eq!(per_vertex(&nak()), vec![2, 2]);
  assert_eq!(per_vertex(&corpus::truncated_polynomial(7, 3)), vec![3]);
}

#[test]
fn permutation_and_block_dims() {
  let a = nak();
  assert_eq!(a.nakayama_permutation().unwrap(), vec![1, 0]);
  assert_eq!(a.block_dims(), vec![vec![1, 1], vec![1, 1]]);
  assert!(!is_symmetric(&a).symmetric);
}

#[test]
fn projective_bimodules_and_products() {
  let a = nak();
  let f01 = Bimodule::projective(&a, 0, 1).unwrap();
  assert_eq!(f01.dim(), 4);
  let f10 = Bimodule::projective(&a, 1, 0).unwrap();
  let z = tensor(&f01, &a, &f10).module;
  assert_eq!(z.dim(), 4);
  assert_eq!(oracle::naive_tensor(&f01, &a, &f10).dim(), 4);
  assert_eq!(decompose(&a, &z).unwrap().proj, vec![vec![1, 0], vec![0, 0]]);
  let mut ones = 0;
  for k in 0..16 {
    let x = Bimodule::projective(&a, k / 8, (k / 4) % 2).unwrap();
    let y = Bimodule::projective(&a, (k / 2) % 2, k % 2).unwrap();
    let d = decompose(&a, &tensor(&x, &a, &y).module).unwrap();
    ones += d.proj.iter().flatten().sum::<usize>();
  }
  assert_eq!(ones, 16);
}

#[test]
fn star_and_m_values() {
  let t = cells::table_of_ca(&nak()).unwrap();
  // Element 1 + 2i + j is F_ij; F_01* = F_00.
  assert_eq!(t.star.as_ref().unwrap()[2], 1);
  let cs = compute_cells(&t);
  for f in 1..5 {
    assert_eq!(m_function(&t, &cs, f).unwrap(), 1);
  }
  for (k, m) in [(2, 2), (3, 3)] {
    let t = cells::table_of_ca(&corpus::truncated_polynomial(7, k)).unwrap();
    let cs = compute_cells(&t);
    assert_eq!(m_function(&t, &cs, 1).unwrap(), m);
    assert_eq!(t.compose(1, 1), &[(1, m)]);
  }
}

#[test]
fn defining_representations() {
  let dual = corpus::truncated_polynomial(7, 2);
  let m = TwoRep::defining(&dual).unwrap();
  assert_eq!(m.blocks[0].dim(), 4);
  assert_eq!(m.end_rank(), 4);
  assert_eq!(m.action_matrix(), vec![vec![2]]);
  let p = LeftModule::projective(&dual, 0);
  assert_eq!(m.apply(&p).dim(), 4);
  let m3 = TwoRep::defining(&corpus::truncated_polynomial(7, 3)).unwrap();
  assert_eq!(m3.action_matrix(), vec![vec![3]]);
  // F is the sum of all four F_ij, so F P_s has sum_j dim e_j A e_s = 2
  // copies of each P_i. The Cartan matrix records a single block dimension.
  let mn = TwoRep::defining(&nak()).unwrap();
  assert_eq!(mn.action_matrix(), vec![vec![2, 2], vec![2, 2]]);
  assert_eq!(nak().cartan_matrix(), vec![vec![1, 1], vec![1, 1]]);
}

#[test]
fn inflations_split_into_copies() {
  let a = corpus::nakayama(1009, 2, 2);
  let m = TwoRep::defining(&a).unwrap();
  let inf = inflate(&m, &semisimple_category(1009, 3)).unwrap();
  let rep = inf.is_isotypic(64).unwrap();
  assert_eq!(rep.subquotients.len(), 3);
  assert!(rep.isotypic);
  for s in &rep.subquotients {
    assert_eq!(s.matrix, vec![vec![2, 2], vec![2, 2]]);
  }
}

#[test]
fn self_extension_of_dual_numbers() {
  let b = corpus::truncated_polynomial(7, 2);
  let t = trivial_extension(&b, &Bimodule::regular(&b)).unwrap();
  assert_eq!(t.dim(), 4);
  // rad = span{x, m, xm}, rad^2 = span{xm}.
  assert_eq!(t.loewy_vector(), vec![4, 3, 1]);
  let f = corpus::field_algebra(7);
  let dims: Vec<usize> = iterate_trivext(&f, 2).unwrap().iter().map(Algebra::dim).collect();
  assert_eq!(dims, vec![1, 2, 4]);
}

#[test]
fn hom_between_projective_bimodules() {
  // Solved intertwiner spaces against dim(e_i A e_k) dim(e_l A e_j).
  let a = corpus::nakayama(1009, 3, 2);
  let bd = a.block_dims();
  let f = |i, j| Bimodule::projective(&a, i, j).unwrap();
  for k in 0..81 {
    let (i, j, kk, l) = (k / 27, (k / 9) % 3, (k / 3) % 3, k % 3);
    assert_eq!(f(i, j).hom(&a, &a, &f(kk, l)).len(), bd[i][kk] * bd[l][j], "({i},{j}) -> ({kk},{l})");
  }
}
