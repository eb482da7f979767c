//! JSON file formats. Output goes through `serde_json::Value`, whose maps
//! are ordered, so keys come out sorted and reports are reproducible.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize, Serializer};
use serde_json::{json, Value};

use crate::algebra::Algebra;
use crate::bimodule::Bimodule;
use crate::cells::{CompositionTable, Element};
use crate::error::{Error, Result};
use crate::field;
use crate::matrix::Matrix;
use crate::module::LeftModule;
use crate::tworep::TwoRep;

#[derive(Debug, Serialize, Deserialize)]
struct MultEntry {
  left: usize,
  right: usize,
  result: Vec<(usize, i64)>,
}

#[derive(Debug, Serialize, Deserialize)]
struct AlgebraFile {
  p: u64,
  basis: Vec<String>,
  n: usize,
  block: Vec<(usize, usize)>,
  mult: Vec<MultEntry>,
}

fn reduce(v: i64, p: u64) -> u64 {
  v.rem_euclid(p as i64) as u64
}

fn signed(v: u64, p: u64) -> i64 {
  if v > p / 2 {
    v as i64 - p as i64
  } else {
    v as i64
  }
}

fn parse<T: for<'de> Deserialize<'de>>(what: &str, v: &Value) -> Result<T> {
  T::deserialize(v).map_err(|e| Error::Input(format!("{what}: {e}")))
}

/// Reads JSON text; syntax errors report line and column.
pub fn parse_json(text: &str) -> Result<Value> {
  serde_json::from_str(text).map_err(|e| Error::Input(format!("malformed JSON at line {}, column {}: {e}", e.line(), e.column())))
}

pub fn read_json(path: &Path) -> Result<Value> {
  let text = std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
  parse_json(&text).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

/// Canonical text: sorted keys, two-space indentation, trailing newline.
pub fn to_canonical_string(v: &Value) -> String {
  let mut s = serde_json::to_string_pretty(v).expect("values serialize");
  s.push('\n');
  s
}

pub fn algebra_from_value(v: &Value) -> Result<Algebra> {
  let f: AlgebraFile = parse("algebra", v)?;
  if !field::is_prime(f.p) || f.p >= 1 << 31 {
    return Err(Error::Input(format!("p = {} is not a prime below 2^31", f.p)));
  }
  let d = f.basis.len();
  if f.block.len() != d {
    return Err(Error::Input(format!("{} block entries for {d} basis elements", f.block.len())));
  }
  if f.n > d || f.block.iter().any(|&(i, j)| i >= f.n || j >= f.n) {
    return Err(Error::Input("block index out of range".into()));
  }
  let mut prods = Vec::new();
  for (k, m) in f.mult.iter().enumerate() {
    if m.left >= d || m.right >= d || m.result.iter().any(|&(c, _)| c >= d) {
      return Err(Error::Input(format!("mult entry {k} has an index out of range")));
    }
    prods.push((m.left, m.right, m.result.iter().map(|&(c, x)| (c, reduce(x, f.p))).collect()));
  }
  Ok(Algebra::from_products(f.p, f.basis, f.n, f.block, &prods))
}

pub fn algebra_to_value(a: &Algebra) -> Value {
  let p = a.p();
  let mult: Vec<MultEntry> = a
    .sparse_products()
    .into_iter()
    .map(|(l, r, res)| MultEntry { left: l, right: r, result: res.into_iter().map(|(c, x)| (c, signed(x, p))).collect() })
    .collect();
  let f = AlgebraFile { p, basis: a.labels().to_vec(), n: a.n(), block: a.blocks().to_vec(), mult };
  serde_json::to_value(f).expect("algebra serializes")
}

pub fn serialize_algebra<S: Serializer>(a: &Algebra, s: S) -> std::result::Result<S::Ok, S::Error> {
  algebra_to_value(a).serialize(s)
}

pub fn matrix_from_value(p: u64, rows: usize, cols: usize, v: &Value) -> Result<Matrix> {
  let r: Vec<Vec<i64>> = parse("matrix", v)?;
  if r.len() != rows || r.iter().any(|x| x.len() != cols) {
    return Err(Error::Dimension(format!("expected a {rows} x {cols} matrix")));
  }
  let data = r.iter().flat_map(|x| x.iter().map(|&y| reduce(y, p))).collect();
  Ok(Matrix::from_vec(p, rows, cols, data))
}

pub fn matrix_to_value(m: &Matrix) -> Value {
  json!(m.to_signed_rows())
}

fn matrices(p: u64, d: usize, count: usize, v: &Value, what: &str) -> Result<Vec<Matrix>> {
  let arr = v.as_array().ok_or_else(|| Error::Input(format!("{what} must be an array")))?;
  if arr.len() != count {
    return Err(Error::Dimension(format!("{what}: expected {count} matrices, got {}", arr.len())));
  }
  arr.iter().map(|m| matrix_from_value(p, d, d, m)).collect()
}

fn dim_of(v: &Value) -> Result<usize> {
  v.get("dim").and_then(Value::as_u64).map(|d| d as usize).ok_or_else(|| Error::Input("missing `dim`".into()))
}

/// `{dim, action}` with one matrix per basis element of `a`.
pub fn module_from_value(a: &Algebra, v: &Value) -> Result<LeftModule> {
  let d = dim_of(v)?;
  let act = matrices(a.p(), d, a.dim(), v.get("action").unwrap_or(&Value::Null), "action")?;
  let m = LeftModule::new(a.p(), d, act);
  m.check(a)?;
  Ok(m)
}

pub fn module_to_value(m: &LeftModule) -> Value {
  json!({ "dim": m.dim(), "action": m.actions().iter().map(matrix_to_value).collect::<Vec<_>>() })
}

/// `{dim, left, right}`.
pub fn bimodule_from_value(a: &Algebra, b: &Algebra, v: &Value) -> Result<Bimodule> {
  let d = dim_of(v)?;
  let left = matrices(a.p(), d, a.dim(), v.get("left").unwrap_or(&Value::Null), "left")?;
  let right = matrices(a.p(), d, b.dim(), v.get("right").unwrap_or(&Value::Null), "right")?;
  let x = Bimodule::new(a.p(), d, left, right);
  x.check(a, b)?;
  Ok(x)
}

pub fn bimodule_to_value(x: &Bimodule) -> Value {
  json!({
    "dim": x.dim(),
    "left": x.lefts().iter().map(matrix_to_value).collect::<Vec<_>>(),
    "right": x.rights().iter().map(matrix_to_value).collect::<Vec<_>>(),
  })
}

#[derive(Debug, Serialize, Deserialize)]
struct MultRecord {
  g: usize,
  f: usize,
  summand: usize,
  multiplicity: usize,
}

#[derive(Debug, Serialize, Deserialize)]
struct TableFile {
  elements: Vec<Element>,
  #[serde(default, skip_serializing_if = "Option::is_none")]
  identities: Option<Vec<usize>>,
  mult: Vec<MultRecord>,
  #[serde(default, skip_serializing_if = "Option::is_none")]
  star: Option<Vec<(usize, usize)>>,
}

/// Composition table. Without an explicit `identities` list, the
/// identities are the endomorphisms `e` with `e ∘ e = e`.
pub fn table_from_value(v: &Value) -> Result<CompositionTable> {
  let f: TableFile = parse("composition table", v)?;
  let n = f.elements.len();
  let mut mult: BTreeMap<(usize, usize), Vec<(usize, usize)>> = BTreeMap::new();
  for r in &f.mult {
    if r.g >= n || r.f >= n || r.summand >= n {
      return Err(Error::Input(format!("mult entry ({}, {}) out of range", r.g, r.f)));
    }
    if r.multiplicity > 0 {
      let e = mult.entry((r.g, r.f)).or_default();
      match e.iter_mut().find(|(h, _)| *h == r.summand) {
        Some(x) => x.1 += r.multiplicity,
        None => e.push((r.summand, r.multiplicity)),
      }
    }
  }
  for sums in mult.values_mut() {
    sums.sort_unstable();
  }
  let identities = match f.identities {
    Some(ids) => ids,
    None => {
      let objs = f.elements.iter().map(|e| e.src.max(e.tgt) + 1).max().unwrap_or(0);
      let mut ids = Vec::new();
      for o in 0..objs {
        let id = (0..n).find(|&e| {
          f.elements[e].src == o && f.elements[e].tgt == o && mult.get(&(e, e)).is_some_and(|s| s == &[(e, 1)])
        });
        ids.push(id.ok_or_else(|| Error::Input(format!("no identity for object {o}")))?);
      }
      ids
    }
  };
  let star = match f.star {
    None => None,
    Some(pairs) => {
      let mut s = vec![usize::MAX; n];
      for (x, y) in pairs {
        if x >= n || y >= n {
          return Err(Error::Input("star pair out of range".into()));
        }
        s[x] = y;
      }
      if s.contains(&usize::MAX) {
        return Err(Error::Input("star is not defined on every element".into()));
      }
      Some(s)
    }
  };
  Ok(CompositionTable { elements: f.elements, identities, mult, star })
}

pub fn table_to_value(t: &CompositionTable) -> Value {
  let mut mult = Vec::new();
  for (&(g, f), sums) in &t.mult {
    for &(h, m) in sums {
      mult.push(MultRecord { g, f, summand: h, multiplicity: m });
    }
  }
  let f = TableFile {
    elements: t.elements.clone(),
    identities: Some(t.identities.clone()),
    mult,
    star: t.star.as_ref().map(|s| s.iter().copied().enumerate().collect()),
  };
  serde_json::to_value(f).expect("table serializes")
}

/// 2-representation over the acting algebra `a`:
/// `{baseAlgebra, T: [{i, j, bimodule}], endAction: {left, right}}` where
/// `endAction.left[x]` is `E(x, 1)` and `endAction.right[y]` is `E(1, y)` on
/// the sum of the blocks taken in the order `(0,0), (0,1), ...`.
/// `baseAlgebra` is an inline algebra or a path relative to `dir`.
pub fn tworep_from_value(a: &Algebra, v: &Value, dir: Option<&Path>) -> Result<TwoRep> {
  let base = v.get("baseAlgebra").ok_or_else(|| Error::Input("missing `baseAlgebra`".into()))?;
  let c = match base {
    Value::String(s) => {
      let path = dir.map_or_else(|| Path::new(s).to_path_buf(), |d| d.join(s));
      algebra_from_value(&read_json(&path)?)?
    }
    other => algebra_from_value(other)?,
  };
  let n = a.n();
  let ts = v.get("T").and_then(Value::as_array).ok_or_else(|| Error::Input("missing `T`".into()))?;
  let mut blocks: Vec<Option<Bimodule>> = vec![None; n * n];
  for t in ts {
    let i = t.get("i").and_then(Value::as_u64).ok_or_else(|| Error::Input("block without `i`".into()))? as usize;
    let j = t.get("j").and_then(Value::as_u64).ok_or_else(|| Error::Input("block without `j`".into()))? as usize;
    if i >= n || j >= n {
      return Err(Error::Input(format!("block ({i},{j}) out of range")));
    }
    let x = bimodule_from_value(&c, &c, t.get("bimodule").unwrap_or(&Value::Null))?;
    blocks[i * n + j] = Some(x);
  }
  let blocks: Vec<Bimodule> = blocks
    .into_iter()
    .enumerate()
    .map(|(k, b)| b.ok_or_else(|| Error::Input(format!("missing block ({},{})", k / n, k % n))))
    .collect::<Result<_>>()?;
  let d: usize = blocks.iter().map(Bimodule::dim).sum();
  let ea = v.get("endAction").ok_or_else(|| Error::Input("missing `endAction`".into()))?;
  let left = matrices(a.p(), d, a.dim(), ea.get("left").unwrap_or(&Value::Null), "endAction.left")?;
  let right = matrices(a.p(), d, a.dim(), ea.get("right").unwrap_or(&Value::Null), "endAction.right")?;
  TwoRep::new(a.clone(), c, blocks, left, right)
}

pub fn tworep_to_value(m: &TwoRep) -> Value {
  let n = m.n();
  let ts: Vec<Value> = (0..n * n).map(|k| json!({ "i": k / n, "j": k % n, "bimodule": bimodule_to_value(&m.blocks[k]) })).collect();
  json!({
    "baseAlgebra": algebra_to_value(&m.c),
    "T": ts,
    "endAction": {
      "left": m.end_left.iter().map(matrix_to_value).collect::<Vec<_>>(),
      "right": m.end_right.iter().map(matrix_to_value).collect::<Vec<_>>(),
    },
  })
}
