//! Reading algebra, representation, extension and morphism files.
//!
//! Every file is JSON with `"schema": "homlie/1"`. Rationals are strings
//! (`"3"`, `"-1/2"`) or JSON integers. An algebra may be given inline, as a
//! path relative to the referencing file, or as `"fixture:NAME"`.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use homlie_core::cohom::{Cochain, Representation};
use homlie_core::exactla::Matrix;
use homlie_core::extend::{ExtensionData, RawExtension};
use homlie_core::homlie::{fixture, HomLieAlgebra};
use homlie_core::{Scalar, Q};
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::CliError;

pub const SCHEMA: &str = "homlie/1";

/// A parsed JSON file with its source text, kept for error positions.
pub struct Doc {
    pub path: String,
    text: String,
    pub root: Value,
    dir: PathBuf,
}

impl Doc {
    /// Error at the first occurrence of `needle` in the source, if found.
    fn error_near(&self, needle: &str, message: String) -> CliError {
        let (line, column) = locate(&self.text, needle).unwrap_or((0, 0));
        CliError::Parse {
            path: self.path.clone(),
            line,
            column,
            message,
        }
    }

    fn field_error(&self, at: &str, message: impl Into<String>) -> CliError {
        let key = at.rsplit('.').next().unwrap_or(at);
        let key = key.split('[').next().unwrap_or(key);
        self.error_near(&format!("\"{key}\""), format!("{at}: {}", message.into()))
    }
}

/// 1-based line and column of the first occurrence of `needle`.
fn locate(text: &str, needle: &str) -> Option<(usize, usize)> {
    let offset = text.find(needle)?;
    let before = &text[..offset];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    Some((line, column))
}

/// Loads files and records a SHA-256 digest of every input read.
#[derive(Default)]
pub struct Loader {
    digests: BTreeMap<String, String>,
}

impl Loader {
    pub fn digests(&self) -> &BTreeMap<String, String> {
        &self.digests
    }

    pub fn load(&mut self, path: &str) -> Result<Doc, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Parse {
            path: path.to_string(),
            line: 0,
            column: 0,
            message: format!("cannot read file: {e}"),
        })?;
        self.digests
            .insert(path.to_string(), format!("sha256:{}", hex::encode(Sha256::digest(text.as_bytes()))));
        let root: Value = serde_json::from_str(&text).map_err(|e| CliError::Parse {
            path: path.to_string(),
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        let doc = Doc {
            path: path.to_string(),
            dir: Path::new(path).parent().map(Path::to_path_buf).unwrap_or_default(),
            text,
            root,
        };
        match doc.root.get("schema") {
            Some(Value::String(s)) if s == SCHEMA => Ok(doc),
            Some(other) => Err(doc.field_error("schema", format!("unsupported schema {other}, expected \"{SCHEMA}\""))),
            None => Err(doc.field_error("schema", format!("missing schema field \"{SCHEMA}\""))),
        }
    }

    /// Resolves an algebra reference (inline object, relative path, or
    /// `fixture:NAME`).
    pub fn algebra(&mut self, doc: &Doc, v: &Value, at: &str) -> Result<HomLieAlgebra<Q>, CliError> {
        match v {
            Value::String(s) => self.algebra_ref(Some(doc), s),
            Value::Object(_) => parse_algebra(doc, v, at),
            _ => Err(doc.field_error(at, "expected an algebra object, a path, or \"fixture:NAME\"")),
        }
    }

    /// An algebra named on the command line or inside a file.
    pub fn algebra_ref(&mut self, from: Option<&Doc>, s: &str) -> Result<HomLieAlgebra<Q>, CliError> {
        if let Some(name) = s.strip_prefix("fixture:") {
            self.digests.insert(s.to_string(), "builtin".to_string());
            return fixture(name).ok_or_else(|| CliError::Usage(format!("unknown fixture {name:?}")));
        }
        let path = match from {
            Some(d) => d.dir.join(s).to_string_lossy().into_owned(),
            None => s.to_string(),
        };
        let doc = self.load(&path)?;
        parse_algebra(&doc, &doc.root, "$")
    }

    pub fn representation(&mut self, path: &str) -> Result<(Option<HomLieAlgebra<Q>>, RepParts), CliError> {
        let doc = self.load(path)?;
        let g = match doc.root.get("g") {
            Some(v) => Some(self.algebra(&doc, v, "g")?),
            None => None,
        };
        let v_dim = usize_field(&doc, &doc.root, "v_dim")?;
        let rho_v = field(&doc, &doc.root, "rho")?;
        let rho = array(&doc, rho_v, "rho")?
            .iter()
            .enumerate()
            .map(|(i, m)| matrix(&doc, m, &format!("rho[{i}]"), v_dim, v_dim))
            .collect::<Result<Vec<_>, _>>()?;
        let beta = matrix(&doc, field(&doc, &doc.root, "beta")?, "beta", v_dim, v_dim)?;
        Ok((g, RepParts { rho, beta }))
    }

    pub fn extension(&mut self, path: &str) -> Result<ExtensionData<Q>, CliError> {
        let doc = self.load(path)?;
        let g = self.algebra(&doc, field(&doc, &doc.root, "g")?, "g")?;
        let h = self.algebra(&doc, field(&doc, &doc.root, "h")?, "h")?;
        let (n, m) = (g.dim(), h.dim());
        let rho_v = array(&doc, field(&doc, &doc.root, "rho")?, "rho")?;
        if rho_v.len() != n {
            return Err(doc.field_error("rho", format!("expected {n} matrices, found {}", rho_v.len())));
        }
        let rho = rho_v
            .iter()
            .enumerate()
            .map(|(i, x)| matrix(&doc, x, &format!("rho[{i}]"), m, m))
            .collect::<Result<Vec<_>, _>>()?;
        let omega = match doc.root.get("omega") {
            None => Cochain::zero(2, n, m),
            Some(v) => cochain2(&doc, v, "omega", n, m)?,
        };
        ExtensionData::new(g, h, rho, omega).map_err(|e| doc.field_error("rho", e.to_string()))
    }

    /// `(h, images)` of a morphism file; images are Out coordinates, one
    /// vector per basis element of `g`.
    pub fn morphism(&mut self, path: &str) -> Result<(HomLieAlgebra<Q>, Vec<Vec<Q>>, Doc), CliError> {
        let doc = self.load(path)?;
        let h = self.algebra(&doc, field(&doc, &doc.root, "h")?, "h")?;
        let images = array(&doc, field(&doc, &doc.root, "images")?, "images")?
            .iter()
            .enumerate()
            .map(|(i, v)| vector(&doc, v, &format!("images[{i}]"), None))
            .collect::<Result<Vec<_>, _>>()?;
        Ok((h, images, doc))
    }

    /// A raw extension `h -> total -> g` with explicit maps.
    pub fn raw_extension(&mut self, path: &str) -> Result<(RawExtension<Q>, Option<Matrix<Q>>), CliError> {
        let doc = self.load(path)?;
        let g = self.algebra(&doc, field(&doc, &doc.root, "g")?, "g")?;
        let h = self.algebra(&doc, field(&doc, &doc.root, "h")?, "h")?;
        let total = self.algebra(&doc, field(&doc, &doc.root, "total")?, "total")?;
        let (n, m, t) = (g.dim(), h.dim(), total.dim());
        let iota = matrix(&doc, field(&doc, &doc.root, "iota")?, "iota", t, m)?;
        let p = matrix(&doc, field(&doc, &doc.root, "p")?, "p", n, t)?;
        let section = match doc.root.get("section") {
            None | Some(Value::Null) => None,
            Some(v) => Some(matrix(&doc, v, "section", t, n)?),
        };
        let raw = RawExtension::new(g, h, total, iota, p).map_err(CliError::Core)?;
        Ok((raw, section))
    }
}

pub struct RepParts {
    pub rho: Vec<Matrix<Q>>,
    pub beta: Matrix<Q>,
}

impl RepParts {
    pub fn into_representation(self, g: HomLieAlgebra<Q>) -> Result<Representation<Q>, CliError> {
        if self.rho.len() != g.dim() {
            return Err(CliError::Usage(format!(
                "representation has {} matrices but the algebra has dimension {}",
                self.rho.len(),
                g.dim()
            )));
        }
        Representation::new(g, self.rho, self.beta).map_err(CliError::Core)
    }
}

fn field<'a>(doc: &Doc, v: &'a Value, name: &str) -> Result<&'a Value, CliError> {
    v.get(name)
        .ok_or_else(|| doc.error_near("{", format!("missing field \"{name}\"")))
}

fn array<'a>(doc: &Doc, v: &'a Value, at: &str) -> Result<&'a Vec<Value>, CliError> {
    v.as_array().ok_or_else(|| doc.field_error(at, "expected an array"))
}

fn usize_field(doc: &Doc, v: &Value, name: &str) -> Result<usize, CliError> {
    field(doc, v, name)?
        .as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| doc.field_error(name, "expected a non-negative integer"))
}

pub fn parse_rational(s: &str) -> Result<Q, String> {
    let t = s.trim();
    if t != s || t.is_empty() {
        return Err(format!("invalid rational {s:?}"));
    }
    t.parse::<Q>().map_err(|e| format!("invalid rational {s:?} ({e})"))
}

fn rational(doc: &Doc, v: &Value, at: &str) -> Result<Q, CliError> {
    match v {
        Value::String(s) => parse_rational(s).map_err(|m| doc.error_near(&format!("\"{s}\""), format!("{at}: {m}"))),
        Value::Number(n) => match n.as_i64() {
            Some(i) => Ok(Q::int(i)),
            None => Err(doc.error_near(&n.to_string(), format!("{at}: {n} is not an integer; write rationals as \"p/q\""))),
        },
        _ => Err(doc.field_error(at, "expected a rational")),
    }
}

fn vector(doc: &Doc, v: &Value, at: &str, len: Option<usize>) -> Result<Vec<Q>, CliError> {
    let items = array(doc, v, at)?;
    if let Some(n) = len {
        if items.len() != n {
            return Err(doc.field_error(at, format!("expected {n} entries, found {}", items.len())));
        }
    }
    items
        .iter()
        .enumerate()
        .map(|(i, x)| rational(doc, x, &format!("{at}[{i}]")))
        .collect()
}

/// A matrix given as a list of rows.
fn matrix(doc: &Doc, v: &Value, at: &str, rows: usize, cols: usize) -> Result<Matrix<Q>, CliError> {
    let items = array(doc, v, at)?;
    if items.len() != rows {
        return Err(doc.field_error(at, format!("expected {rows} rows, found {}", items.len())));
    }
    let data = items
        .iter()
        .enumerate()
        .map(|(r, row)| vector(doc, row, &format!("{at}[{r}]"), Some(cols)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Matrix::from_fn(rows, cols, |r, c| data[r][c].clone()))
}

fn index(doc: &Doc, v: &Value, at: &str, bound: usize) -> Result<usize, CliError> {
    match v.as_u64() {
        Some(i) if (i as usize) < bound => Ok(i as usize),
        _ => Err(doc.field_error(at, format!("expected an index below {bound}"))),
    }
}

/// `{"[i,j]": vector}` with `i < j`; missing pairs are zero.
fn cochain2(doc: &Doc, v: &Value, at: &str, n: usize, m: usize) -> Result<Cochain<Q>, CliError> {
    let obj = v.as_object().ok_or_else(|| doc.field_error(at, "expected an object keyed by \"[i,j]\""))?;
    let mut c = Cochain::zero(2, n, m);
    for (key, val) in obj {
        let bad = || doc.error_near(&format!("\"{key}\""), format!("{at}: key {key:?} is not \"[i,j]\" with i < j < {n}"));
        let inner = key.strip_prefix('[').and_then(|k| k.strip_suffix(']')).ok_or_else(bad)?;
        let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
        let [i, j] = parts[..] else { return Err(bad()) };
        let (i, j): (usize, usize) = (i.parse().map_err(|_| bad())?, j.parse().map_err(|_| bad())?);
        if !(i < j && j < n) {
            return Err(bad());
        }
        c.set_value(&[i, j], &vector(doc, val, &format!("{at}.{key}"), Some(m))?);
    }
    Ok(c)
}

fn parse_algebra(doc: &Doc, v: &Value, at: &str) -> Result<HomLieAlgebra<Q>, CliError> {
    let name = v.get("name").and_then(Value::as_str).unwrap_or("unnamed").to_string();
    let dim = field(doc, v, "dim")?
        .as_u64()
        .map(|d| d as usize)
        .ok_or_else(|| doc.field_error("dim", "expected a non-negative integer"))?;
    let mut brackets = Vec::new();
    if let Some(list) = v.get("brackets") {
        for (e, entry) in array(doc, list, "brackets")?.iter().enumerate() {
            let here = format!("brackets[{e}]");
            let parts = array(doc, entry, &here)?;
            if parts.len() != 3 {
                return Err(doc.field_error(&here, "expected [i, j, [[k, coefficient], ...]]"));
            }
            let i = index(doc, &parts[0], &here, dim)?;
            let j = index(doc, &parts[1], &here, dim)?;
            if i >= j {
                return Err(doc.field_error(&here, format!("entry ({i},{j}) must have i < j")));
            }
            let mut terms = Vec::new();
            for (t, term) in array(doc, &parts[2], &here)?.iter().enumerate() {
                let tat = format!("{here}[2][{t}]");
                let kc = array(doc, term, &tat)?;
                if kc.len() != 2 {
                    return Err(doc.field_error(&tat, "expected [k, coefficient]"));
                }
                terms.push((index(doc, &kc[0], &tat, dim)?, rational(doc, &kc[1], &tat)?));
            }
            brackets.push((i, j, terms));
        }
    }
    let twist = match v.get("twist") {
        Some(t) => matrix(doc, t, "twist", dim, dim)?,
        None => Matrix::identity(dim),
    };
    HomLieAlgebra::from_brackets(name, dim, &brackets, twist).map_err(|e| doc.field_error(at, e.to_string()))
}
