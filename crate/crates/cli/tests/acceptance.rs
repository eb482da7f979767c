//! Acceptance suite: one line per criterion, exact arithmetic throughout.
//! Runs without the test harness so that the lines always reach stdout.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::process::Command;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use twocat::bimodule::{self, decompose, projective_isomorphism, simple_quotient, Bimodule};
use twocat::cells::{self, CompositionTable};
use twocat::classify::{self, classify_isotypic, Config};
use twocat::constructions::{self, AddWitness};
use twocat::filtration::{sandwich, subquotient, AnnihilatorSet, Length};
use twocat::inflation::{self, inflate, semisimple_category};
use twocat::module::LeftModule;
use twocat::tworep::{block_diagonalize, BlockDiagonal, TwoRep};
use twocat::{corpus, io, iso, oracle, Algebra, Subspace};

type Outcome = Result<String, String>;

macro_rules! ensure {
  ($c:expr, $($t:tt)*) => {
    if !$c {
      return Err(format!($($t)*));
    }
  };
}

const P: u64 = 1009;

fn corpus_all() -> Vec<(String, Algebra)> {
  constructions::full_corpus(P).expect("corpus builds")
}

fn block_dim(a: &Algebra, i: usize, j: usize) -> usize {
  (0..a.dim()).filter(|&b| a.block(b) == (i, j)).count()
}

fn c1_composition() -> Outcome {
  let mut rng = ChaCha8Rng::seed_from_u64(1);
  let mut tuples = 0;
  for (name, a) in corpus_all() {
    let n = a.n();
    let fs: Vec<Bimodule> = (0..n * n).map(|k| Bimodule::projective(&a, k / n, k % n).unwrap()).collect();
    let semisimple = a.radical().dim() == 0;
    for i in 0..n {
      for j in 0..n {
        for k in 0..n {
          for l in 0..n {
            let m = block_dim(&a, j, k);
            let x = &fs[i * n + j];
            let y = &fs[k * n + l];
            let z = bimodule::tensor(x, &a, y).module;
            let naive = oracle::naive_tensor(x, &a, y);
            let labels = vec![(i, l); m];
            for (what, w) in [("tensor", &z), ("oracle", &naive)] {
              let f = projective_isomorphism(&a, w, &labels, &mut rng, 16)
                .ok_or_else(|| format!("{name}: {what} of F{i}{j} and F{k}{l} is not {m} F{i}{l}"))?;
              let src = labels.iter().fold(Bimodule::new(P, 0, vec![twocat::Matrix::zeros(P, 0, 0); a.dim()], vec![twocat::Matrix::zeros(P, 0, 0); a.dim()]), |acc, &(s, t)| {
                acc.direct_sum(&Bimodule::projective(&a, s, t).unwrap())
              });
              ensure!(src.is_homomorphism(w, &f), "{name}: map into the {what} is not a bimodule map");
            }
            if !semisimple {
              let d = decompose(&a, &z).map_err(|e| format!("{name}: {e}"))?;
              let mut exp = vec![vec![0; n]; n];
              exp[i][l] = m;
              ensure!(d.identity == 0 && d.proj == exp, "{name}: decomposition {d:?}");
            }
            tuples += 1;
          }
        }
      }
    }
  }
  Ok(format!("{tuples} index tuples over the corpus agree with the quotient-space oracle"))
}

fn corpus_tables() -> Vec<(String, CompositionTable, Option<Algebra>)> {
  let mut out = Vec::new();
  for (name, a) in corpus_all() {
    if let Ok(t) = cells::table_of_ca(&a) {
      out.push((name, t, Some(a)));
    }
  }
  out
}

fn c2_m_function() -> Outcome {
  let mut count = 0;
  for (name, t, a) in corpus_tables() {
    let a = a.unwrap();
    let cs = cells::compute_cells(&t);
    let j = cs.maximal_two_sided().ok_or(format!("{name}: no maximal cell"))?;
    let rep = cells::check_prop1(&t, &cs, j).map_err(|e| format!("{name}: {e}"))?;
    // Independent value: *F_ij ∘ F_ij has dim(e_s A e_i) copies, s the
    // vertex carrying the socle of A e_i.
    let n = a.n();
    for &f in &cs.two_sided_cells[j] {
      let i = (f - 1) / n;
      let pi = LeftModule::projective(&a, i);
      let soc = pi.socle(&a);
      let ranks = pi.restrict(&soc).idempotent_ranks(&a);
      let s = ranks.iter().position(|&r| r > 0).unwrap();
      let m = cells::m_function(&t, &cs, f).map_err(|e| format!("{name}: {e}"))?;
      ensure!(m == block_dim(&a, s, i), "{name}: m({}) = {m}, expected {}", t.elements[f].label, block_dim(&a, s, i));
    }
    count += rep.values.len();
  }
  // Product tables: values multiply.
  let t1 = cells::table_of_ca(&corpus::truncated_polynomial(P, 3)).unwrap();
  let t2 = cells::table_of_ca(&corpus::nakayama(P, 3, 2)).unwrap();
  let t = t1.tensor(&t2);
  let cs = cells::compute_cells(&t);
  let j = cs.maximal_two_sided().unwrap();
  let rep = cells::check_prop1(&t, &cs, j).map_err(|e| format!("product: {e}"))?;
  ensure!(rep.values.iter().all(|(_, v)| *v == 3), "product values {:?}", rep.values);
  Ok(format!("constant on {count} right cells of {} corpus tables and on the product table", corpus_tables().len()))
}

fn c3_regular_filtrations() -> Outcome {
  let mut count = 0;
  for (name, a) in corpus_all() {
    let m = TwoRep::defining(&a).map_err(|e| e.to_string())?;
    let alpha = m.canonical_alpha().map_err(|e| e.to_string())?;
    let x = LeftModule::regular(&a);
    let (up, _) = alpha.upper_filtration(&a, &x);
    let (low, _) = alpha.lower_filtration(&a, &x).map_err(|e| format!("{name}: {e}"))?;
    ensure!(up == x.socle_series(&a), "{name}: upper filtration is not the socle series");
    ensure!(low == x.radical_series(&a), "{name}: lower filtration is not the radical series");
    count += 1;
  }
  Ok(format!("upper = socle series and lower = radical series for {count} algebras"))
}

/// Every strict chain `0 ⊂ ... ⊂ X` in `lattice` whose layers are annihilated.
fn annihilation_chains(alpha: &AnnihilatorSet, a: &Algebra, x: &LeftModule, lattice: &[Subspace]) -> Vec<Vec<Subspace>> {
  let n = lattice.len();
  let mut edge = vec![vec![false; n]; n];
  for u in 0..n {
    for v in 0..n {
      if lattice[v].dim() > lattice[u].dim() && lattice[v].contains_space(&lattice[u]) {
        edge[u][v] = alpha.annihilates(a, &subquotient(x, &lattice[v], &lattice[u]));
      }
    }
  }
  let start = lattice.iter().position(|s| s.is_zero()).unwrap();
  let end = lattice.iter().position(|s| s.is_full()).unwrap();
  let mut out = Vec::new();
  let mut stack = vec![vec![start]];
  while let Some(path) = stack.pop() {
    let last = *path.last().unwrap();
    if last == end {
      out.push(path.iter().map(|&k| lattice[k].clone()).collect());
      continue;
    }
    for v in 0..n {
      if edge[last][v] {
        let mut p = path.clone();
        p.push(v);
        stack.push(p);
      }
    }
  }
  out
}

fn c4_sandwich() -> Outcome {
  let p = 7;
  let mut rng = ChaCha8Rng::seed_from_u64(4);
  let mut modules = 0;
  let mut chains = 0;
  for (name, a) in corpus::named(p) {
    if a.radical().dim() == 0 {
      continue;
    }
    let m = TwoRep::defining(&a).unwrap();
    let alpha = m.canonical_alpha().unwrap();
    let mut xs = vec![LeftModule::regular(&a)];
    for i in 0..a.n() {
      xs.push(LeftModule::projective(&a, i));
      xs.push(LeftModule::simple(&a, i));
      xs.push(LeftModule::projective(&a, i).direct_sum(&LeftModule::simple(&a, (i + 1) % a.n())));
      for _ in 0..2 {
        xs.push(classify::random_module(&a, &mut rng));
      }
    }
    for x in xs.into_iter().filter(|x| x.dim() > 0 && x.dim() <= 6) {
      let lattice = oracle::submodule_lattice(&a, &x);
      let all = annihilation_chains(&alpha, &a, &x, &lattice);
      ensure!(!all.is_empty(), "{name}: no annihilation filtration of a module of dimension {}", x.dim());
      let shortest = all.iter().map(|c| c.len() - 1).min().unwrap();
      let len = alpha.annihilation_length(&a, &x).map_err(|e| format!("{name}: {e}"))?;
      ensure!(len == Length::Finite(shortest), "{name}: length {len:?} but the shortest filtration has {shortest} steps");
      let (up, _) = alpha.upper_filtration(&a, &x);
      let (low, _) = alpha.lower_filtration(&a, &x).map_err(|e| format!("{name}: {e}"))?;
      ensure!(up.len() - 1 == shortest, "{name}: upper length differs");
      alpha.check_prop4(&a, &x, &all[0]).map_err(|e| format!("{name}: {e}"))?;
      for c in &all {
        sandwich(&up, &low, c).map_err(|e| format!("{name}: {e}"))?;
      }
      modules += 1;
      chains += all.len();
    }
  }
  Ok(format!("{chains} annihilation filtrations of {modules} modules satisfy the sandwich; al = upper length"))
}

fn c5_diagonal_form() -> Outcome {
  let mut count = 0;
  for (name, a) in corpus::named(P) {
    if a.radical().dim() == 0 {
      continue;
    }
    let m = TwoRep::defining(&a).unwrap();
    let target = m.action_matrix();
    let two_obj = corpus::product(&corpus::truncated_polynomial(P, 2), &semisimple_category(P, 1));
    for (cname, c) in [("two", semisimple_category(P, 2)), ("three", semisimple_category(P, 3)), ("dual+point", two_obj)] {
      let inf = inflate(&m, &c).map_err(|e| e.to_string())?;
      let am = inf.action_matrix();
      let k = c.n();
      ensure!(am == inflation::kron_identity(&target, k), "{name} x {cname}: [F] is not [F] (x) Id");
      match block_diagonalize(&am, &target) {
        BlockDiagonal::Found { permutation, k: kk } => {
          ensure!(kk == k, "{name} x {cname}: {kk} blocks");
          let r = target.len();
          for b in 0..k {
            for u in 0..r {
              for v in 0..r {
                ensure!(am[permutation[b * r + u]][permutation[b * r + v]] == target[u][v], "{name} x {cname}: block {b} differs");
              }
            }
          }
        }
        BlockDiagonal::Failed { reason, .. } => return Err(format!("{name} x {cname}: {reason}")),
      }
      count += 1;
    }
  }
  Ok(format!("{count} inflations by 2- and 3-object categories are block diagonal with copies of [F]"))
}

fn corpus_reps() -> Vec<(String, TwoRep)> {
  let mut out = Vec::new();
  for (name, a) in corpus::named(P) {
    if a.radical().dim() == 0 {
      continue;
    }
    let m = TwoRep::defining(&a).unwrap();
    out.push((format!("{name} x dual"), inflate(&m, &corpus::truncated_polynomial(P, 2)).unwrap()));
    out.push((name, m));
  }
  out
}

fn c6_dimension_identity() -> Outcome {
  let mut rng = ChaCha8Rng::seed_from_u64(6);
  let mut reps = 0;
  for (name, m) in corpus_reps() {
    for t in 0..100 {
      let x = classify::random_module(&m.c, &mut rng);
      ensure!(classify::eq5_holds(&m, &x), "{name}: random module {t} of dimension {} fails", x.dim());
    }
    reps += 1;
  }
  Ok(format!("dim F X = dim A dim X for 100 seeded random modules on each of {reps} representations"))
}

fn inflations() -> Vec<(String, Algebra, Algebra)> {
  let mut out = Vec::new();
  let cats = vec![
    ("point", semisimple_category(P, 1)),
    ("two", semisimple_category(P, 2)),
    ("three", semisimple_category(P, 3)),
    ("dual", corpus::truncated_polynomial(P, 2)),
    ("dual+point", corpus::product(&corpus::truncated_polynomial(P, 2), &semisimple_category(P, 1))),
  ];
  for (name, a) in [
    ("dual", corpus::truncated_polynomial(P, 2)),
    ("trunc3", corpus::truncated_polynomial(P, 3)),
    ("nakayama2_2", corpus::nakayama(P, 2, 2)),
    ("nakayama3_2", corpus::nakayama(P, 3, 2)),
  ] {
    for (cname, c) in &cats {
      out.push((format!("{name} x {cname}"), a.clone(), c.clone()));
    }
  }
  out
}

fn c7_layers_and_projectives() -> Outcome {
  let mut count = 0;
  for (name, a, c) in inflations() {
    let m = inflate(&TwoRep::defining(&a).unwrap(), &c).unwrap();
    let cert = classify_isotypic(&m, &Config::default()).map_err(|e| format!("{name}: {e}"))?;
    for st in ["prop12", "eq5", "prop14"] {
      ensure!(cert.stages.iter().any(|s| s.stage == st), "{name}: stage {st} missing");
    }
    let l: Vec<usize> = (0..a.n()).map(|u| (0..a.n()).map(|v| block_dim(&a, u, v)).sum()).collect();
    ensure!(cert.multiplicities == l, "{name}: multiplicities {:?} but l = {l:?}", cert.multiplicities);
    let prep = classify::prepare(&m).map_err(|e| e.to_string())?;
    for (s, f) in cert.prop14.iter().enumerate() {
      let fns = m.apply(&prep.n_mods[s]);
      let projs: Vec<LeftModule> = prep.blocks[prep.block_of[s]].iter().map(|&v| LeftModule::projective(&m.c, v)).collect();
      let target = LeftModule::direct_sum_all(&m.c, &projs);
      ensure!(f.is_invertible() && fns.is_homomorphism(&target, f), "{name}: F N_{s} -> P is not a certified isomorphism");
    }
    count += 1;
  }
  Ok(format!("filtrations and F N_s = P certified on {count} inflations"))
}

fn c8_endomorphism_rank() -> Outcome {
  let mut count = 0;
  for (name, a, c) in inflations() {
    let m = inflate(&TwoRep::defining(&a).unwrap(), &c).unwrap();
    let cert = classify_isotypic(&m, &Config::default()).map_err(|e| format!("{name}: {e}"))?;
    ensure!(cert.prop23_rank == a.dim() * c.dim(), "{name}: rank {}", cert.prop23_rank);
    ensure!(cert.b.dim() == c.dim(), "{name}: dim B = {}", cert.b.dim());
    count += 1;
  }
  Ok(format!("A (x) B -> End(P̂) bijective on {count} inflations, including B = F_p[y]/(y^2)"))
}

fn c9_round_trip() -> Outcome {
  let mut count = 0;
  for (name, a, c) in inflations() {
    let m = inflate(&TwoRep::defining(&a).unwrap(), &c).unwrap();
    let cert = classify_isotypic(&m, &Config::default()).map_err(|e| format!("{name}: {e}"))?;
    let v = iso::find_isomorphism(&cert.b, &c, iso::DEFAULT_SEARCH_BOUND);
    ensure!(v.is_isomorphic(), "{name}: B is not isomorphic to the category algebra: {v:?}");
    let (ab, _) = a.tensor(&cert.b);
    ensure!(iso::is_isomorphism(&ab, &m.c, &cert.psi), "{name}: Psi is not an algebra isomorphism");
    let src = inflate(&TwoRep::defining(&a).unwrap(), &cert.b).unwrap();
    let th = &cert.theta;
    ensure!(th.is_invertible(), "{name}: Theta is singular");
    for x in 0..src.c.dim() {
      let cx = cert.psi.col(x);
      ensure!(th.mul(src.t.left(x)) == m.t.left_vec(&cx).mul(th), "{name}: left action of {x}");
      ensure!(th.mul(src.t.right(x)) == m.t.right_vec(&cx).mul(th), "{name}: right action of {x}");
    }
    for g in 0..a.dim() {
      ensure!(th.mul(&src.end_left[g]) == m.end_left[g].mul(th), "{name}: E({g}, 1)");
      ensure!(th.mul(&src.end_right[g]) == m.end_right[g].mul(th), "{name}: E(1, {g})");
    }
    let n = a.n();
    for k in 0..n * n {
      let pr = m.inclusion(k / n, k % n);
      ensure!(th.mul(&src.inclusion(k / n, k % n)).rank() == pr.rank(), "{name}: Theta moves T_{}{}", k / n, k % n);
    }
    count += 1;
  }
  Ok(format!("{count} round trips recover B with explicit isomorphisms and verified intertwiners"))
}

fn c10_simple_tops() -> Outcome {
  let mut rng = ChaCha8Rng::seed_from_u64(10);
  let mut count = 0;
  for (name, a) in corpus_all() {
    let n = a.n();
    let qs: Vec<_> = (0..n * n).map(|k| simple_quotient(&a, k / n, k % n).unwrap()).collect();
    for (k, q) in qs.iter().enumerate() {
      let f = Bimodule::projective(&a, k / n, k % n).unwrap();
      ensure!(q.quotient_map.mul(&q.beta).is_zero(), "{name}: beta does not land in the kernel");
      ensure!(q.beta.rank() + q.q.dim() == f.dim(), "{name}: Q is not the cokernel of beta");
    }
    for i in 0..n {
      for j in 0..n {
        for k in 0..n {
          for l in 0..n {
            let z = bimodule::tensor(&qs[i * n + j].q, &a, &qs[k * n + l].q).module;
            if j == k {
              let f = constructions::find_bimodule_isomorphism(&a, &z, &qs[i * n + l].q, &mut rng);
              ensure!(f.is_some(), "{name}: Q{i}{j} (x) Q{k}{l} is not Q{i}{l}");
            } else {
              ensure!(z.dim() == 0, "{name}: Q{i}{j} (x) Q{k}{l} is nonzero");
            }
            count += 1;
          }
        }
      }
    }
  }
  Ok(format!("Q_ij (x) Q_kl = delta_jk Q_il for {count} index tuples"))
}

fn c11_trivial_extensions() -> Outcome {
  let b = corpus::truncated_polynomial(P, 2);
  let r = constructions::check_prop52(&b, &Bimodule::regular(&b), &AddWitness::regular(&b)).map_err(|e| e.to_string())?;
  ensure!(r.dim_g == 8, "dim A (x)_B A = {}", r.dim_g);
  for base in [corpus::field_algebra(P), corpus::truncated_polynomial(P, 2)] {
    let l = constructions::check_lemma55(&base).map_err(|e| e.to_string())?;
    ensure!(l.local && l.dim_end == 4 * base.center_dim(), "locality report {l:?}");
    constructions::check_prop53(&base).map_err(|e| e.to_string())?;
  }
  for (base, dims) in [(corpus::field_algebra(P), vec![1, 2, 4]), (corpus::truncated_polynomial(P, 2), vec![2, 4, 8])] {
    let xs = constructions::iterate_trivext(&base, 2).map_err(|e| e.to_string())?;
    ensure!(xs.iter().map(Algebra::dim).collect::<Vec<_>>() == dims, "iterated dims");
    for x in &xs {
      ensure!(constructions::is_symmetric(x).symmetric, "an iterate is not symmetric");
    }
  }
  let pairs = [
    (corpus::truncated_polynomial(P, 2), corpus::nakayama(P, 2, 2), 4),
    (corpus::truncated_polynomial(P, 3), corpus::nakayama(P, 3, 2), 9),
  ];
  for (x, y, size) in pairs {
    let t1 = cells::table_of_ca(&x).unwrap();
    let t2 = cells::table_of_ca(&y).unwrap();
    let pr = constructions::check_product(&t1, &t2).map_err(|e| e.to_string())?;
    ensure!(pr.strongly_regular && pr.m_multiplicative && pr.maximal_cell_size == size, "product report {pr:?}");
  }
  Ok("C(B,M) products close, End(A (x)_B A) is local of dimension 4 dim Z(B), iterates stay symmetric to depth 2, product tables stay strongly regular".into())
}

fn run_cli(args: &[&str]) -> (i32, String, String) {
  let out = Command::new(env!("CARGO_BIN_EXE_twocat")).args(args).output().expect("binary runs");
  (out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into(), String::from_utf8_lossy(&out.stderr).into())
}

fn write(dir: &Path, name: &str, v: &Value) -> String {
  let p = dir.join(name);
  std::fs::write(&p, io::to_canonical_string(v)).unwrap();
  p.display().to_string()
}

fn corrupted_table() -> Value {
  // Two non-identity elements in one left and one right cell.
  let mut mult = vec![json!({ "g": 0, "f": 0, "summand": 0, "multiplicity": 1 })];
  for g in 1..3 {
    mult.push(json!({ "g": 0, "f": g, "summand": g, "multiplicity": 1 }));
    mult.push(json!({ "g": g, "f": 0, "summand": g, "multiplicity": 1 }));
    for f in 1..3 {
      mult.push(json!({ "g": g, "f": f, "summand": 1, "multiplicity": 1 }));
      mult.push(json!({ "g": g, "f": f, "summand": 2, "multiplicity": 1 }));
    }
  }
  json!({
    "elements": [{ "label": "1", "src": 0, "tgt": 0 }, { "label": "x", "src": 0, "tgt": 0 }, { "label": "y", "src": 0, "tgt": 0 }],
    "mult": mult,
    "star": [[0, 0], [1, 1], [2, 2]],
  })
}

fn c12_negative() -> Outcome {
  let dir = tempfile::tempdir().unwrap();
  let d = dir.path();
  let broken = write(d, "broken.json", &io::algebra_to_value(&corpus::broken_associativity(P)));
  let a2 = write(d, "a2.json", &io::algebra_to_value(&corpus::a2_path(P)));
  let dual = corpus::truncated_polynomial(P, 2);
  let dualp = write(d, "dual.json", &io::algebra_to_value(&dual));
  let fake = write(d, "fake.json", &io::tworep_to_value(&twocat::tworep::cross_extension(&dual).unwrap()));
  let table = write(d, "corrupted_table.json", &corrupted_table());
  let cases: [(&str, Vec<&str>, &str); 4] = [
    ("broken associativity", vec!["validate", &broken], "structure"),
    ("non-self-injective", vec!["validate", &a2], "nakayama"),
    ("cross extension", vec!["classify", &dualp, &fake], "stage `lemma6`"),
    ("corrupted table", vec!["cells", &table], "strongly-regular"),
  ];
  let mut lines = Vec::new();
  for (what, args, marker) in cases {
    let (code, _, err) = run_cli(&args);
    ensure!(code == 2, "{what}: exit {code}, stderr {err}");
    ensure!(err.contains(marker), "{what}: diagnostic lacks `{marker}`: {err}");
    ensure!(err.contains("witness=") && !err.contains("witness=null"), "{what}: no witness: {err}");
    lines.push(what);
  }
  Ok(format!("rejected with exit 2 and a witness: {}", lines.join(", ")))
}

fn main() {
  let criteria: Vec<(&str, fn() -> Outcome)> = vec![
    ("composition rule F F = F^dim", c1_composition),
    ("m-function constant on right cells", c2_m_function),
    ("annihilation filtrations of A are the socle and radical series", c3_regular_filtrations),
    ("sandwich for all annihilation filtrations", c4_sandwich),
    ("diagonal form of inflations", c5_diagonal_form),
    ("dim F X = dim A dim X", c6_dimension_identity),
    ("filtration of F N_s and F N_s = P", c7_layers_and_projectives),
    ("A (x) B = End(P̂)", c8_endomorphism_rank),
    ("inflate and classify round trip", c9_round_trip),
    ("tensor products of simple tops", c10_simple_tops),
    ("trivial extension suite", c11_trivial_extensions),
    ("negative controls", c12_negative),
  ];
  let mut failed = 0;
  for (k, (name, f)) in criteria.iter().enumerate() {
    let t = Instant::now();
    let res = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
      Err(e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_else(|| "panic".into()))
    });
    let secs = t.elapsed().as_secs_f64();
    let slow = secs >= 10.0;
    match res {
      Ok(detail) if !slow => println!("criterion {:>2} PASS ({secs:.2}s) {name}: {detail}", k + 1),
      Ok(detail) => {
        failed += 1;
        println!("criterion {:>2} FAIL ({secs:.2}s, over 10s) {name}: {detail}", k + 1);
      }
      Err(e) => {
        failed += 1;
        println!("criterion {:>2} FAIL ({secs:.2}s) {name}: {e}", k + 1);
      }
    }
  }
  if failed > 0 {
    println!("{failed} criteria failed");
    std::process::exit(1);
  }
  println!("all 12 criteria pass");
}
