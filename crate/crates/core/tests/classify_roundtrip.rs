use twocat::classify::{classify_isotypic, Config};
use twocat::inflation::{inflate, semisimple_category};
use twocat::iso;
use twocat::tworep::TwoRep;
use twocat::{corpus, Algebra, Error};

fn categories(p: u64) -> Vec<(&'static str, Algebra)> {
  vec![
    ("point", semisimple_category(p, 1)),
    ("two", semisimple_category(p, 2)),
    ("three", semisimple_category(p, 3)),
    ("dual", corpus::truncated_polynomial(p, 2)),
  ]
}

fn round_trip(a: &Algebra, name: &str, cat: &Algebra) {
  let m = inflate(&TwoRep::defining(a).unwrap(), cat).unwrap();
  let cert = classify_isotypic(&m, &Config::default()).unwrap_or_else(|e| panic!("{name}: {e}"));
  assert_eq!(cert.k, cat.n(), "{name}");
  assert_eq!(cert.prop23_rank, a.dim() * cat.dim(), "{name}");
  let v = iso::find_isomorphism(&cert.b, cat, iso::DEFAULT_SEARCH_BOUND);
  assert!(v.is_isomorphic(), "{name}: {v:?}");
  let expect: Vec<usize> = (0..a.n()).map(|u| a.row_basis(u).len()).collect();
  assert_eq!(cert.multiplicities, expect, "{name}");
}

#[test]
fn local_algebras_round_trip() {
  for k in [2, 3] {
    let a = corpus::truncated_polynomial(1009, k);
    for (name, cat) in categories(1009) {
      round_trip(&a, &format!("trunc{k} x {name}"), &cat);
    }
  }
}

#[test]
fn nakayama_round_trip() {
  let a = corpus::nakayama(1009, 2, 2);
  for (name, cat) in categories(1009) {
    round_trip(&a, &format!("nakayama2_2 x {name}"), &cat);
  }
}

#[test]
fn three_vertex_nakayama_by_dual_numbers() {
  let a = corpus::nakayama(1009, 3, 2);
  round_trip(&a, "nakayama3_2 x dual", &corpus::truncated_polynomial(1009, 2));
}

#[test]
fn non_semisimple_two_object_category() {
  let p = 1009;
  let cat = corpus::product(&corpus::truncated_polynomial(p, 2), &semisimple_category(p, 1));
  round_trip(&corpus::truncated_polynomial(p, 2), "dual x (dual + point)", &cat);
}

#[test]
fn semisimple_acting_algebra_is_rejected() {
  let a = corpus::field_algebra(1009);
  let m = TwoRep::defining(&a).unwrap();
  match classify_isotypic(&m, &Config::default()) {
    Err(Error::Stage { stage, .. }) => assert_eq!(stage, "validate"),
    other => panic!("{other:?}"),
  }
}
