//! `twocat`: command-line front end.
//!
//! Exit codes: 0 when every check passes, 1 for usage and input errors (and
//! unmet preconditions), 2 when a check fails.

mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use twocat::classify::{classify_isotypic, Config};
use twocat::constructions::{self, AddWitness, Summand};
use twocat::filtration::AnnihilatorSet;
use twocat::module::LeftModule;
use twocat::tworep::{block_diagonalize, BlockDiagonal, TwoRep};
use twocat::{cells, inflation, io, iso, Algebra, Error, Matrix, Result};

use report::Report;

#[derive(Parser, Debug)]
#[command(name = "twocat", version, about = "Exact computations with finitary 2-representations")]
struct Cli {
  /// Prime for generated algebras; input files must agree with it.
  #[arg(long, global = true)]
  p: Option<u64>,
  #[arg(long, global = true, default_value_t = 0)]
  seed: u64,
  #[arg(long = "search-bound", global = true, default_value_t = iso::DEFAULT_SEARCH_BOUND)]
  search_bound: usize,
  /// Write the JSON report here.
  #[arg(long, global = true)]
  out: Option<PathBuf>,
  #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
  format: Format,
  #[command(subcommand)]
  cmd: Cmd,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
  Json,
  Text,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Verify {
  Lemma6,
  Prop2,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TrivCheck {
  Prop52,
  Prop53,
  Lemma55,
}

#[derive(Subcommand, Debug)]
enum Cmd {
  /// Structural validation and the Nakayama permutation.
  Validate { algebra: PathBuf },
  /// Cells of a composition table, or of the table of an algebra.
  Cells { input: PathBuf },
  /// Annihilation filtrations of a module.
  Filtration {
    algebra: PathBuf,
    /// A module file or `regular`.
    module: String,
    /// `canonical` or a file with endomorphism matrices.
    #[arg(long, default_value = "canonical")]
    alpha: String,
  },
  /// Inflate a 2-representation by a category algebra.
  Inflate {
    algebra: PathBuf,
    /// A 2-representation file or `cell`.
    rep: String,
    /// A category algebra file or `semisimple:K`.
    category: String,
    #[arg(long, value_enum)]
    verify: Option<Verify>,
    /// Write the inflated 2-representation here.
    #[arg(long)]
    emit: Option<PathBuf>,
  },
  /// Certify an isotypic faithful 2-representation as an inflation.
  Classify { algebra: PathBuf, tworep: PathBuf },
  /// Trivial extensions and the associated checks.
  Trivext {
    base: PathBuf,
    /// `regular` or a bimodule file, optionally carrying a `witness`.
    #[arg(long = "M", default_value = "regular")]
    m: String,
    #[arg(long, default_value_t = 0)]
    iterate: usize,
    #[arg(long, value_enum)]
    check: Option<TrivCheck>,
    /// Write the constructed algebra (the last one when iterating) here.
    #[arg(long)]
    emit: Option<PathBuf>,
  },
  /// The built-in algebras.
  Corpus {
    /// Write one algebra file per entry into this directory.
    #[arg(long)]
    dir: Option<PathBuf>,
  },
}

fn load_algebra(path: &Path, p: Option<u64>) -> Result<Algebra> {
  let a = io::algebra_from_value(&io::read_json(path)?).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
  if let Some(q) = p {
    if q != a.p() {
      return Err(Error::Config(format!("--p {q} but {} is over p = {}", path.display(), a.p())));
    }
  }
  Ok(a)
}

fn write_file(path: &Path, v: &Value) -> Result<()> {
  std::fs::write(path, io::to_canonical_string(v)).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

fn validate(r: &mut Report, path: &Path, p: Option<u64>) -> Result<()> {
  r.input(path);
  let a = load_algebra(path, p)?;
  let v = a.validate();
  r.put("validation", json!(v));
  if !v.passes() {
    r.fail("structure", "structural validation failed", json!(v.messages));
    return Ok(());
  }
  r.pass("structure", format!("dim {}, {} idempotents", a.dim(), a.n()), Value::Null);
  match a.nakayama_permutation() {
    Ok(s) => {
      r.pass("nakayama", format!("sigma = {s:?}"), json!(s));
      r.put("sigma", json!(s));
      r.put("invariants", json!(iso::invariants(&a)));
    }
    Err(e) => r.record("nakayama", e)?,
  }
  Ok(())
}

fn cells_cmd(r: &mut Report, path: &Path, p: Option<u64>) -> Result<()> {
  r.input(path);
  let v = io::read_json(path)?;
  let (table, alg) = if v.get("elements").is_some() {
    (io::table_from_value(&v)?, None)
  } else {
    let a = load_algebra(path, p)?;
    match cells::table_of_ca(&a) {
      Ok(t) => (t, Some(a)),
      Err(e) => return r.record("table", e),
    }
  };
  table.validate()?;
  let cs = cells::compute_cells(&table);
  let lab = |xs: &Vec<Vec<usize>>| xs.iter().map(|c| cells::cell_labels(&table, c)).collect::<Vec<_>>();
  r.put("left_cells", json!(lab(&cs.left_cells)));
  r.put("right_cells", json!(lab(&cs.right_cells)));
  r.put("two_sided_cells", json!(lab(&cs.two_sided_cells)));
  if cs.orders_are_partial() {
    r.pass("partial-orders", "cell orders are antisymmetric", Value::Null);
  } else {
    r.fail("partial-orders", "a cell order is not antisymmetric", Value::Null);
  }
  let Some(j) = cs.maximal_two_sided() else {
    r.fail("maximal-cell", "no maximal two-sided cell", Value::Null);
    return Ok(());
  };
  let v = cells::is_strongly_regular(&table, &cs, j);
  if !v.ok {
    r.fail("strongly-regular", "the maximal two-sided cell is not strongly regular", v.witness);
    return Ok(());
  }
  r.pass("strongly-regular", format!("cell {:?}", cells::cell_labels(&table, &cs.two_sided_cells[j])), Value::Null);
  if table.star.is_none() {
    r.record("duflo", Error::Precondition("the table has no star map".into()))?;
    return Ok(());
  }
  let mut duflo = Vec::new();
  for l in cs.left_cells_in(j) {
    match cells::duflo_involution(&table, &cs, l) {
      Ok(g) => duflo.push(table.elements[g].label.clone()),
      Err(e) => return r.record("duflo", e),
    }
    if let Err(e) = cells::check_lemma10305(&table, &cs, l) {
      return r.record("lemma10305", e);
    }
  }
  r.pass("duflo", format!("{duflo:?}"), json!(duflo));
  r.pass("lemma10305", "F G = m_G F on every left cell", Value::Null);
  let mut m = Vec::new();
  for &f in &cs.two_sided_cells[j] {
    m.push(json!([table.elements[f].label, cells::m_function(&table, &cs, f)?]));
  }
  r.put("m_function", json!(m));
  match cells::check_prop1(&table, &cs, j) {
    Ok(rep) => r.pass("prop1", "m is constant on right cells", json!(rep)),
    Err(e) => r.record("prop1", e)?,
  }
  if let Some(a) = alg {
    match cells::check_j_simplicity(&a) {
      Ok(c) => r.pass("j-simple", format!("{} factorizations", c.len()), Value::Null),
      Err(e) => r.record("j-simple", e)?,
    }
  }
  Ok(())
}

fn filtration_cmd(r: &mut Report, apath: &Path, module: &str, alpha: &str, p: Option<u64>) -> Result<()> {
  r.input(apath);
  let a = load_algebra(apath, p)?;
  a.ensure_valid()?;
  let def = TwoRep::defining(&a)?;
  let x = if module == "regular" {
    LeftModule::regular(&a)
  } else {
    let mp = Path::new(module);
    r.input(mp);
    io::module_from_value(&a, &io::read_json(mp)?)?
  };
  let al = if alpha == "canonical" {
    def.canonical_alpha()?
  } else {
    let ap = Path::new(alpha);
    r.input(ap);
    let v = io::read_json(ap)?;
    let gens = v.get("generators").and_then(Value::as_array).ok_or_else(|| Error::Input("missing `generators`".into()))?;
    let d = def.t.dim();
    let gens: Vec<Matrix> = gens.iter().map(|g| io::matrix_from_value(a.p(), d, d, g)).collect::<Result<_>>()?;
    AnnihilatorSet::new(&a, def.t.clone(), gens)?
  };
  let chain = |c: &[twocat::Subspace]| c.iter().map(|s| io::matrix_to_value(s.basis())).collect::<Vec<_>>();
  let (up, ul) = al.upper_filtration(&a, &x);
  r.put("upper", json!(chain(&up)));
  r.put("upper_length", json!(ul));
  match al.lower_filtration(&a, &x) {
    Ok((low, ll)) => {
      r.put("lower", json!(chain(&low)));
      r.put("lower_length", json!(ll));
      if module == "regular" && alpha == "canonical" {
        if up == x.socle_series(&a) && low == x.radical_series(&a) {
          r.pass("socle-radical", "upper = socle series, lower = radical series", Value::Null);
        } else {
          r.fail("socle-radical", "the filtrations differ from the socle and radical series", Value::Null);
        }
      }
    }
    Err(e) => r.record("lower", e)?,
  }
  if ul != twocat::filtration::Length::Infinite {
    match al.check_prop4(&a, &x, &up) {
      Ok(rep) => r.pass("prop4", format!("sandwich holds, length {}", rep.length), json!(rep)),
      Err(e) => r.record("prop4", e)?,
    }
  }
  Ok(())
}

fn load_category(arg: &str, p: u64, r: &mut Report) -> Result<Algebra> {
  if let Some(k) = arg.strip_prefix("semisimple:") {
    let k: usize = k.parse().map_err(|_| Error::Input(format!("bad category `{arg}`")))?;
    if k == 0 {
      return Err(Error::Input("a category needs at least one object".into()));
    }
    return Ok(inflation::semisimple_category(p, k));
  }
  let path = Path::new(arg);
  r.input(path);
  load_algebra(path, Some(p))
}

fn load_rep(a: &Algebra, arg: &str, r: &mut Report) -> Result<TwoRep> {
  if arg == "cell" {
    return TwoRep::defining(a);
  }
  let path = Path::new(arg);
  r.input(path);
  io::tworep_from_value(a, &io::read_json(path)?, path.parent())
}

fn inflate_cmd(r: &mut Report, apath: &Path, rep: &str, cat: &str, verify: Option<Verify>, emit: Option<&Path>, cli: &Cli) -> Result<()> {
  r.input(apath);
  let a = load_algebra(apath, cli.p)?;
  a.ensure_valid()?;
  let m = load_rep(&a, rep, r)?;
  m.validate()?;
  let c = load_category(cat, a.p(), r)?;
  let inf = inflation::inflate(&m, &c)?;
  r.pass("inflate", format!("base dim {}, {} projectives", inf.c.dim(), inf.c.n()), Value::Null);
  match verify {
    None => {}
    Some(Verify::Lemma6) => {
      let am = inf.action_matrix();
      let target = m.action_matrix();
      let kron = inflation::kron_identity(&target, c.n());
      if am == kron {
        r.pass("kron", "[F] of the inflation is [F] (x) Id", Value::Null);
      } else {
        r.fail("kron", "[F] of the inflation differs from [F] (x) Id", json!({ "matrix": am, "expected": kron }));
      }
      match block_diagonalize(&am, &target) {
        BlockDiagonal::Found { permutation, k } if k == c.n() => {
          r.pass("lemma6", format!("{k} diagonal blocks"), json!({ "permutation": permutation, "k": k }))
        }
        BlockDiagonal::Found { k, .. } => r.fail("lemma6", format!("{k} blocks for {} objects", c.n()), json!({ "k": k })),
        BlockDiagonal::Failed { witness, reason } => r.fail("lemma6", reason, json!({ "entry": witness })),
      }
    }
    Some(Verify::Prop2) => match inflation::check_prop2(&m, &c, cli.search_bound) {
      Ok(rep) => r.pass("prop2", format!("{} equivalent subquotients", rep.subquotients), json!(rep)),
      Err(e) => r.record("prop2", e)?,
    },
  }
  let v = io::tworep_to_value(&inf);
  if let Some(path) = emit {
    write_file(path, &v)?;
  }
  r.put("tworep", v);
  Ok(())
}

fn classify_cmd(r: &mut Report, apath: &Path, tpath: &Path, cli: &Cli) -> Result<()> {
  r.input(apath);
  r.input(tpath);
  let a = load_algebra(apath, cli.p)?;
  let m = io::tworep_from_value(&a, &io::read_json(tpath)?, tpath.parent())?;
  let cfg = Config { search_bound: cli.search_bound, seed: cli.seed, ..Config::default() };
  match classify_isotypic(&m, &cfg) {
    Ok(cert) => {
      r.pass("classify", format!("equivalent to the inflation by an algebra of dimension {}", cert.b.dim()), Value::Null);
      r.put("certificate", serde_json::to_value(&cert).expect("certificate serializes"));
    }
    Err(e) => r.record("classify", e)?,
  }
  Ok(())
}

fn load_witness(b: &Algebra, v: &Value) -> Result<AddWitness> {
  let w = v.get("witness").ok_or_else(|| Error::Input("the bimodule has no `witness`".into()))?;
  let ss = w.get("summands").and_then(Value::as_array).ok_or_else(|| Error::Input("witness without `summands`".into()))?;
  let mut summands = Vec::new();
  for s in ss {
    match s.get("kind").and_then(Value::as_str) {
      Some("regular") => summands.push(Summand::Regular),
      Some("free") => {
        let ix = |k: &str| s.get(k).and_then(Value::as_u64).map(|x| x as usize).ok_or_else(|| Error::Input(format!("free summand without `{k}`")));
        summands.push(Summand::Free(ix("i")?, ix("j")?));
      }
      _ => return Err(Error::Input("summand kind must be `regular` or `free`".into())),
    }
  }
  let md = v.get("dim").and_then(Value::as_u64).unwrap_or(0) as usize;
  let mats = |key: &str, inj: bool| -> Result<Vec<Matrix>> {
    let arr = w.get(key).and_then(Value::as_array).ok_or_else(|| Error::Input(format!("witness without `{key}`")))?;
    arr
      .iter()
      .zip(&summands)
      .map(|(m, s)| {
        let sd = match *s {
          Summand::Regular => b.dim(),
          Summand::Free(i, j) => b.col_basis(i).len() * b.row_basis(j).len(),
        };
        if inj {
          io::matrix_from_value(b.p(), md, sd, m)
        } else {
          io::matrix_from_value(b.p(), sd, md, m)
        }
      })
      .collect()
  };
  Ok(AddWitness { injections: mats("injections", true)?, projections: mats("projections", false)?, summands })
}

fn trivext_cmd(r: &mut Report, bpath: &Path, m: &str, iterate: usize, check: Option<TrivCheck>, emit: Option<&Path>, cli: &Cli) -> Result<()> {
  r.input(bpath);
  let b = load_algebra(bpath, cli.p)?;
  b.ensure_valid()?;
  let regular = m == "regular";
  let (mbim, witness) = if regular {
    (twocat::bimodule::Bimodule::regular(&b), Some(AddWitness::regular(&b)))
  } else {
    let path = Path::new(m);
    r.input(path);
    let v = io::read_json(path)?;
    let x = io::bimodule_from_value(&b, &b, &v)?;
    let w = if v.get("witness").is_some() { Some(load_witness(&b, &v)?) } else { None };
    (x, w)
  };
  let last = if iterate > 0 {
    if !regular {
      return Err(Error::Config("--iterate requires --M regular".into()));
    }
    match constructions::iterate_trivext(&b, iterate) {
      Ok(xs) => {
        r.pass("symmetric", format!("A_0 .. A_{iterate} certified symmetric"), json!(xs.iter().map(Algebra::dim).collect::<Vec<_>>()));
        r.put("algebras", json!(xs.iter().map(io::algebra_to_value).collect::<Vec<_>>()));
        xs.last().cloned()
      }
      Err(e) => {
        r.record("symmetric", e)?;
        None
      }
    }
  } else {
    match constructions::trivial_extension(&b, &mbim) {
      Ok(a) => {
        r.pass("trivial-extension", format!("dim {}", a.dim()), Value::Null);
        match a.nakayama_permutation() {
          Ok(s) => r.pass("nakayama", format!("sigma = {s:?}"), json!(s)),
          Err(e) => r.record("nakayama", e)?,
        }
        r.put("algebra", io::algebra_to_value(&a));
        Some(a)
      }
      Err(e) => {
        r.record("trivial-extension", e)?;
        None
      }
    }
  };
  match check {
    None => {}
    Some(TrivCheck::Prop52) => match &witness {
      None => r.record("prop52", Error::Precondition("M needs a decomposition witness".into()))?,
      Some(w) => match constructions::cbm_table(&b, &mbim, w) {
        Ok((t, rep)) => {
          r.pass("prop52", format!("{} products close on {} classes", rep.products.len(), t.table.len()), json!(rep));
          r.put("table", io::table_to_value(&t.table));
        }
        Err(e) => r.record("prop52", e)?,
      },
    },
    Some(TrivCheck::Prop53) | Some(TrivCheck::Lemma55) if !regular => {
      r.record("fiat", Error::Precondition("only M = B is certified beyond finitarity".into()))?;
    }
    Some(TrivCheck::Prop53) => match constructions::check_prop53(&b) {
      Ok(rep) => r.pass("prop53", "symmetric, A (x)_B A is self-dual", json!(rep)),
      Err(e) => r.record("prop53", e)?,
    },
    Some(TrivCheck::Lemma55) => match constructions::check_lemma55(&b) {
      Ok(rep) => r.pass("lemma55", format!("End is local of dimension {}", rep.dim_end), json!(rep)),
      Err(e) => r.record("lemma55", e)?,
    },
  }
  if let (Some(path), Some(a)) = (emit, last) {
    write_file(path, &io::algebra_to_value(&a))?;
  }
  Ok(())
}

fn corpus_cmd(r: &mut Report, dir: Option<&Path>, p: u64) -> Result<()> {
  if !twocat::field::is_prime(p) {
    return Err(Error::Config(format!("{p} is not prime")));
  }
  let all = constructions::full_corpus(p)?;
  let mut names = Vec::new();
  for (name, a) in &all {
    let v = a.validate();
    if !v.passes() {
      r.fail(name, "validation failed", json!(v.messages));
      continue;
    }
    match a.nakayama_permutation() {
      Ok(s) => r.pass(name, format!("dim {}, sigma = {s:?}", a.dim()), Value::Null),
      Err(e) => r.record(name, e)?,
    }
    names.push(name.clone());
    if let Some(d) = dir {
      std::fs::create_dir_all(d).map_err(|e| Error::Input(format!("{}: {e}", d.display())))?;
      write_file(&d.join(format!("{name}.json")), &io::algebra_to_value(a))?;
    }
  }
  r.put("entries", json!(names));
  Ok(())
}

fn run(cli: &Cli, r: &mut Report) -> Result<()> {
  match &cli.cmd {
    Cmd::Validate { algebra } => validate(r, algebra, cli.p),
    Cmd::Cells { input } => cells_cmd(r, input, cli.p),
    Cmd::Filtration { algebra, module, alpha } => filtration_cmd(r, algebra, module, alpha, cli.p),
    Cmd::Inflate { algebra, rep, category, verify, emit } => inflate_cmd(r, algebra, rep, category, *verify, emit.as_deref(), cli),
    Cmd::Classify { algebra, tworep } => classify_cmd(r, algebra, tworep, cli),
    Cmd::Trivext { base, m, iterate, check, emit } => trivext_cmd(r, base, m, *iterate, *check, emit.as_deref(), cli),
    Cmd::Corpus { dir } => corpus_cmd(r, dir.as_deref(), cli.p.unwrap_or(1009)),
  }
}

fn main() -> ExitCode {
  let args: Vec<String> = std::env::args().collect();
  let cli = match Cli::try_parse_from(&args) {
    Ok(c) => c,
    Err(e) => {
      let code = if e.use_stderr() { 1 } else { 0 };
      let _ = e.print();
      return ExitCode::from(code);
    }
  };
  let mut r = Report::new(args[1..].to_vec());
  if let Err(e) = run(&cli, &mut r) {
    // Checks that fail inside input handling still count as check failures.
    if let Err(e) = r.record("input", e) {
      eprintln!("twocat: error: {e}");
      return ExitCode::from(1);
    }
  }
  for line in report::diagnostics(&r) {
    eprintln!("{line}");
  }
  let json = r.to_json();
  if let Some(path) = &cli.out {
    if let Err(e) = write_file(path, &json) {
      eprintln!("twocat: error: {e}");
      return ExitCode::from(1);
    }
  }
  match cli.format {
    Format::Json => print!("{}", io::to_canonical_string(&json)),
    Format::Text => print!("{}", r.to_text()),
  }
  ExitCode::from(r.exit_code() as u8)
}
