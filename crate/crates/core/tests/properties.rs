use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use twocat::bimodule::{tensor, Bimodule};
use twocat::cells::{self, CompositionTable};
use twocat::classify::{eq5_holds, random_module};
use twocat::constructions::{is_symmetric, trivial_extension};
use twocat::filtration::sandwich;
use twocat::tworep::TwoRep;
use twocat::{corpus, io, Matrix};

const PRIMES: [u64; 6] = [2, 3, 7, 1009, 65521, 2147483647];

fn matrix(p: u64, r: usize, c: usize, seed: u64) -> Matrix {
  let mut s = seed;
  Matrix::from_fn(p, r, c, |_, _| {
    s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
    if s >> 62 == 0 {
      0
    } else {
      (s >> 20) % p
    }
  })
}

fn naive_mul(a: &Matrix, b: &Matrix) -> Matrix {
  let p = a.p();
  Matrix::from_fn(p, a.rows(), b.cols(), |i, j| {
    (0..a.cols()).fold(0u64, |s, k| ((s as u128 + a.get(i, k) as u128 * b.get(k, j) as u128) % p as u128) as u64)
  })
}

proptest! {
  #![proptest_config(ProptestConfig::with_cases(64))]

  #[test]
  fn products_agree_with_wide_arithmetic(pi in 0usize..6, r in 1usize..9, k in 1usize..40, c in 1usize..9, seed: u64) {
    let p = PRIMES[pi];
    let a = matrix(p, r, k, seed);
    let b = matrix(p, k, c, seed ^ 0x9e37);
    prop_assert_eq!(a.mul(&b), naive_mul(&a, &b));
    let v = b.col(0);
    prop_assert_eq!(a.mul_vec(&v), naive_mul(&a, &b).col(0));
  }

  #[test]
  fn inverse_is_two_sided(pi in 0usize..6, n in 1usize..7, seed: u64) {
    let p = PRIMES[pi];
    let a = matrix(p, n, n, seed);
    if let Some(inv) = a.inverse() {
      prop_assert!(a.mul(&inv).is_identity());
      prop_assert!(inv.mul(&a).is_identity());
    } else {
      prop_assert!(a.rank() < n);
    }
  }

  #[test]
  fn tensor_of_projectives_has_block_dimension(n in 1usize..4, h in 2usize..4, idx: [u8; 4]) {
    let a = corpus::nakayama(1009, n, h);
    let [i, j, k, l] = idx.map(|x| x as usize % n);
    let x = Bimodule::projective(&a, i, j).unwrap();
    let y = Bimodule::projective(&a, k, l).unwrap();
    let z = tensor(&x, &a, &y).module;
    let bd = a.block_dims();
    prop_assert_eq!(z.dim(), bd[j][k] * Bimodule::projective(&a, i, l).unwrap().dim());
    z.check(&a, &a).unwrap();
  }

  #[test]
  fn nakayama_permutation_rotates(n in 1usize..5, h in 2usize..5) {
    let a = corpus::nakayama(1009, n, h);
    let sigma = a.nakayama_permutation().unwrap();
    let shifted: Vec<usize> = (0..n).map(|i| (i + h - 1) % n).collect();
    prop_assert_eq!(sigma, shifted);
  }

  #[test]
  fn random_modules_satisfy_dimension_identity(which in 0usize..4, seed: u64) {
    let a = [
      corpus::truncated_polynomial(1009, 2),
      corpus::truncated_polynomial(1009, 3),
      corpus::nakayama(1009, 2, 2),
      corpus::nakayama(1009, 3, 2),
    ][which].clone();
    let m = TwoRep::defining(&a).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let x = random_module(&a, &mut rng);
    prop_assert!(eq5_holds(&m, &x));
  }

  #[test]
  fn filtrations_sandwich_each_other(which in 0usize..3, seed: u64) {
    let a = [corpus::truncated_polynomial(7, 3), corpus::nakayama(7, 2, 3), corpus::nakayama(7, 3, 2)][which].clone();
    let m = TwoRep::defining(&a).unwrap();
    let alpha = m.canonical_alpha().unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let x = random_module(&a, &mut rng);
    let (up, lu) = alpha.upper_filtration(&a, &x);
    let (low, ll) = alpha.lower_filtration(&a, &x).unwrap();
    prop_assert_eq!(lu, ll);
    prop_assert_eq!(up.len(), low.len());
    for (l, u) in low.iter().zip(&up) {
      prop_assert!(u.contains_space(l));
    }
    prop_assert!(alpha.is_annihilation_filtration(&a, &x, &up));
    prop_assert!(alpha.is_annihilation_filtration(&a, &x, &low));
    sandwich(&up, &low, &up).unwrap();
    sandwich(&up, &low, &low).unwrap();
  }

  #[test]
  fn algebra_json_round_trips(pi in 2usize..6, n in 1usize..4, h in 1usize..4) {
    let a = corpus::nakayama(PRIMES[pi], n, h);
    let s = io::to_canonical_string(&io::algebra_to_value(&a));
    let b = io::algebra_from_value(&io::parse_json(&s).unwrap()).unwrap();
    prop_assert!(a.same_table(&b));
    prop_assert_eq!(s, io::to_canonical_string(&io::algebra_to_value(&b)));
  }

  #[test]
  fn self_extension_of_truncations_is_symmetric(k in 1usize..4, pi in 3usize..5) {
    let b = corpus::truncated_polynomial(PRIMES[pi], k);
    let t = trivial_extension(&b, &Bimodule::regular(&b)).unwrap();
    prop_assert_eq!(t.dim(), 2 * k);
    prop_assert!(is_symmetric(&t).symmetric);
  }

  #[test]
  fn table_products_follow_block_dimensions(n in 1usize..4, h in 2usize..4) {
    let a = corpus::nakayama(1009, n, h);
    let t: CompositionTable = cells::table_of_ca(&a).unwrap();
    t.validate().unwrap();
    let bd = a.block_dims();
    for g in 1..t.len() {
      for f in 1..t.len() {
        let (i, j) = ((g - 1) / n, (g - 1) % n);
        let (k, l) = ((f - 1) / n, (f - 1) % n);
        // F_ij ∘ F_kl is F_ij ⊗_A F_kl.
        prop_assert_eq!(t.multiplicity(g, f, 1 + i * n + l), bd[j][k]);
      }
    }
  }
}
