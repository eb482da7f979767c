//! Built-in algebras used as fixtures.

use crate::algebra::Algebra;

/// The ground field as a one-dimensional algebra.
pub fn field_algebra(p: u64) -> Algebra {
  Algebra::from_products(p, vec!["e".into()], 1, vec![(0, 0)], &[(0, 0, vec![(0, 1)])])
}

/// `F_p[x]/(x^k)` on the monomial basis `1, x, ..., x^{k-1}`.
pub fn truncated_polynomial(p: u64, k: usize) -> Algebra {
  assert!(k >= 1);
  let labels = (0..k).map(|i| if i == 0 { "e".to_string() } else if i == 1 { "x".into() } else { format!("x^{i}") }).collect();
  let mut prods = Vec::new();
  for a in 0..k {
    for b in 0..k {
      if a + b < k {
        prods.push((a, b, vec![(a + b, 1)]));
      }
    }
  }
  Algebra::from_products(p, labels, 1, vec![(0, 0); k], &prods)
}

/// Self-injective Nakayama algebra: the cyclic quiver on `n` vertices modulo
/// paths of length `h`.
///
/// Basis: paths `(s, l)` with start `s` and length `l < h`, ordered by length
/// then start, so the trivial paths come first. A path from `s` of length `l`
/// ends at `s + l mod n` and lies in `e_{s+l} A e_s`.
pub fn nakayama(p: u64, n: usize, h: usize) -> Algebra {
  assert!(n >= 1 && h >= 1);
  let paths: Vec<(usize, usize)> = (0..h).flat_map(|l| (0..n).map(move |s| (s, l))).collect();
  let idx = |s: usize, l: usize| l * n + s;
  let labels = paths
    .iter()
    .map(|&(s, l)| if l == 0 { format!("e{s}") } else { format!("p{s}_{l}") })
    .collect();
  let block = paths.iter().map(|&(s, l)| ((s + l) % n, s)).collect();
  let mut prods = Vec::new();
  for (q, &(sq, lq)) in paths.iter().enumerate() {
    for (r, &(sr, lr)) in paths.iter().enumerate() {
      if sq == (sr + lr) % n && lq + lr < h {
        prods.push((q, r, vec![(idx(sr, lq + lr), 1)]));
      }
    }
  }
  Algebra::from_products(p, labels, n, block, &prods)
}

/// Path algebra of `0 -> 1`: basis `e0, e1, a` with `a` in `e1 A e0`.
/// Not self-injective.
pub fn a2_path(p: u64) -> Algebra {
  Algebra::from_products(
    p,
    vec!["e0".into(), "e1".into(), "a".into()],
    2,
    vec![(0, 0), (1, 1), (1, 0)],
    &[(0, 0, vec![(0, 1)]), (1, 1, vec![(1, 1)]), (1, 2, vec![(2, 1)]), (2, 0, vec![(2, 1)])],
  )
}

/// `F_p[x]/(x^3)` with `x * x^2` changed to `x^2`, which breaks associativity.
pub fn broken_associativity(p: u64) -> Algebra {
  let a = truncated_polynomial(p, 3);
  let mut prods = a.sparse_products();
  prods.push((1, 2, vec![(2, 1)]));
  Algebra::from_products(p, a.labels().to_vec(), 1, a.blocks().to_vec(), &prods)
}

/// Direct product of two algebras; idempotents of the first factor come first.
pub fn product(a: &Algebra, b: &Algebra) -> Algebra {
  product_with_positions(a, b).0
}

/// Direct product together with the position of each basis element: index
/// `x` of `a` goes to `pos[x]`, index `y` of `b` to `pos[a.dim() + y]`.
pub fn product_with_positions(a: &Algebra, b: &Algebra) -> (Algebra, Vec<usize>) {
  let (da, db) = (a.dim(), b.dim());
  let (na, nb) = (a.n(), b.n());
  // Reorder: idempotents of a, idempotents of b, rest of a, rest of b.
  let mut order: Vec<(bool, usize)> = (0..na).map(|i| (false, i)).collect();
  order.extend((0..nb).map(|i| (true, i)));
  order.extend((na..da).map(|i| (false, i)));
  order.extend((nb..db).map(|i| (true, i)));
  let mut pos = vec![0usize; da + db];
  for (k, &(second, i)) in order.iter().enumerate() {
    pos[if second { da + i } else { i }] = k;
  }
  let mut prods = Vec::new();
  for (x, y, res) in a.sparse_products() {
    prods.push((pos[x], pos[y], res.into_iter().map(|(c, v)| (pos[c], v)).collect()));
  }
  for (x, y, res) in b.sparse_products() {
    prods.push((pos[da + x], pos[da + y], res.into_iter().map(|(c, v)| (pos[da + c], v)).collect()));
  }
  let labels = order
    .iter()
    .map(|&(second, i)| if second { format!("{}_2", b.labels()[i]) } else { format!("{}_1", a.labels()[i]) })
    .collect();
  let block = order
    .iter()
    .map(|&(second, i)| {
      if second {
        let (s, t) = b.block(i);
        (s + na, t + na)
      } else {
        a.block(i)
      }
    })
    .collect();
  (Algebra::from_products(a.p(), labels, na + nb, block, &prods), pos)
}

/// Named corpus entries.
pub fn named(p: u64) -> Vec<(String, Algebra)> {
  vec![
    ("field".into(), field_algebra(p)),
    ("dual".into(), truncated_polynomial(p, 2)),
    ("trunc3".into(), truncated_polynomial(p, 3)),
    ("trunc4".into(), truncated_polynomial(p, 4)),
    ("nakayama2_2".into(), nakayama(p, 2, 2)),
    ("nakayama2_3".into(), nakayama(p, 2, 3)),
    ("nakayama3_2".into(), nakayama(p, 3, 2)),
  ]
}

#[cfg(test)]
mod tests {
  use super::*;

  #[test]
  fn corpus_validates() {
    for (name, a) in named(1009) {
      let r = a.validate();
      assert!(r.passes(), "{name}: {:?}", r.messages);
      assert!(r.connected, "{name}");
    }
  }

  #[test]
  fn nakayama_permutations() {
    assert_eq!(nakayama(1009, 2, 2).nakayama_permutation().unwrap(), vec![1, 0]);
    assert_eq!(nakayama(1009, 2, 3).nakayama_permutation().unwrap(), vec![0, 1]);
    assert_eq!(nakayama(1009, 3, 2).nakayama_permutation().unwrap(), vec![1, 2, 0]);
    assert_eq!(truncated_polynomial(1009, 3).nakayama_permutation().unwrap(), vec![0]);
  }

  #[test]
  fn a2_fails_at_sink() {
    let a = a2_path(1009);
    assert!(a.validate().passes());
    match a.nakayama_permutation() {
      Err(crate::error::Error::NotSelfInjective { vertex, .. }) => assert_eq!(vertex, 1),
      other => panic!("unexpected {other:?}"),
    }
  }

  #[test]
  fn product_is_disconnected() {
    let a = truncated_polynomial(1009, 2);
    let pr = product(&a, &a);
    let r = pr.validate();
    assert!(r.passes(), "{:?}", r.messages);
    assert!(!r.connected);
  }
}
