//! Named bicharacters: Cartan types, the super family, rank-3 examples, and
//! catalog files.
//!
//! A catalog file is line based. `#` starts a comment.
//!
//! ```text
//! # type A2 at a generic q
//! entry my:a2
//! alias plane
//! order 1
//! params q
//! vertex 1 q^2
//! vertex 2 q^2
//! edge 1 2 q^-2
//! expected vertices 6
//! expected objects 1
//! end
//! ```
//!
//! The matrix is given either by `row` lines (one literal per column) or by
//! `vertex i d` / `edge i j p` lines (diagonal and products, 1-based), which
//! fill the upper-triangular normal form. `expected` keys are `vertices`,
//! `objects`, `special` (`true`/`false`) and `convenient` (1-based index).

use std::collections::HashMap;
use std::fmt;
use std::path::Path;

use thiserror::Error;

use crate::bichar::{BicharError, Bicharacter};
use crate::coxeter::CoxeterSystem;
use crate::exactnum::{parse_scalar, CycScalar, ExactError};

pub const CATALOG_PATH_VAR: &str = "WEYL_CATALOG_PATH";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown type `{0}`")]
    BadRank(String),
    #[error("bad assignment: {0}")]
    BadAssignment(String),
    #[error("{source_name}:{line}:{column}: {reason}")]
    Parse {
        source_name: String,
        line: usize,
        column: usize,
        reason: String,
    },
    #[error("duplicate entry name `{0}`")]
    DuplicateName(String),
    #[error("no entry named `{0}`")]
    UnknownEntry(String),
    #[error("cannot read {path}: {reason}")]
    Io { path: String, reason: String },
    #[error(transparent)]
    Bichar(#[from] BicharError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Construction {
    Cartan(String),
    Super { n: usize, m: usize, p: Vec<u8> },
    Inline,
    File(String),
}

/// Assertions attached to an entry.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Expected {
    pub vertices: Option<usize>,
    pub objects: Option<usize>,
    pub special_exists: Option<bool>,
    /// 0-based generators for which a convenient circuit is claimed.
    pub convenient: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub aliases: Vec<String>,
    pub construction: Construction,
    pub chi: Bicharacter,
    pub expected: Expected,
}

/// `(q_i, q_j)` exponents of the minimally symmetrized Cartan matrix, in the
/// numbering used here: `B_n` has its short root first, `C_n` its long root
/// first, `D_n` attaches `n` to `n−2`, `E_n` attaches 2 to 4, `F_4` has long
/// roots 1, 2.
fn cartan_form(family: char, n: usize) -> Option<Vec<Vec<i32>>> {
    let mut f = vec![vec![0; n]; n];
    let link = |f: &mut Vec<Vec<i32>>, i: usize, j: usize, v: i32| {
        f[i][j] = v;
        f[j][i] = v;
    };
    match (family, n) {
        ('A', 1..) => {
            for i in 0..n {
                f[i][i] = 2;
                if i + 1 < n {
                    link(&mut f, i, i + 1, -1);
                }
            }
        }
        ('B', 2..) | ('C', 2..) => {
            let (short, long) = if family == 'B' { (2, 4) } else { (4, 2) };
            f[0][0] = short;
            for i in 1..n {
                f[i][i] = long;
            }
            link(&mut f, 0, 1, -2);
            for i in 1..n - 1 {
                link(&mut f, i, i + 1, -long / 2);
            }
        }
        ('D', 4..) => {
            for i in 0..n {
                f[i][i] = 2;
            }
            for i in 0..n - 2 {
                link(&mut f, i, i + 1, -1);
            }
            link(&mut f, n - 3, n - 1, -1);
        }
        ('E', 6..=8) => {
            for i in 0..n {
                f[i][i] = 2;
            }
            link(&mut f, 0, 2, -1);
            link(&mut f, 1, 3, -1);
            for i in 2..n - 1 {
                link(&mut f, i, i + 1, -1);
            }
        }
        ('F', 4) => {
            f[0][0] = 4;
            f[1][1] = 4;
            f[2][2] = 2;
            f[3][3] = 2;
            link(&mut f, 0, 1, -2);
            link(&mut f, 1, 2, -2);
            link(&mut f, 2, 3, -1);
        }
        ('G', 2) => {
            f[0][0] = 2;
            f[1][1] = 6;
            link(&mut f, 0, 1, -3);
        }
        _ => return None,
    }
    Some(f)
}

/// Splits `A2xA1`-style labels into `(family, rank)` components.
fn parse_type(label: &str) -> Result<Vec<(char, usize)>, CatalogError> {
    let bad = || CatalogError::BadRank(label.to_string());
    label
        .split(['x', 'X'])
        .map(|part| {
            let mut chars = part.trim().chars();
            let family = chars.next().ok_or_else(bad)?.to_ascii_uppercase();
            let n: usize = chars.as_str().parse().map_err(|_| bad())?;
            cartan_form(family, n).ok_or_else(bad)?;
            Ok((family, n))
        })
        .collect()
}

/// Cartan-type bicharacter `q_ij = q^{(α_i, α_j)}` for a generic parameter
/// `q`, over a product of types such as `B3` or `A2xA1`.
pub fn cartan_bicharacter(label: &str) -> Result<Bicharacter, CatalogError> {
    let parts = parse_type(label)?;
    let n: usize = parts.iter().map(|p| p.1).sum();
    let mut form = vec![vec![0; n]; n];
    let mut off = 0;
    for (family, k) in parts {
        let f = cartan_form(family, k).expect("checked by parse_type");
        for i in 0..k {
            for j in 0..k {
                form[off + i][off + j] = f[i][j];
            }
        }
        off += k;
    }
    let rows = form
        .iter()
        .map(|r| r.iter().map(|&e| CycScalar::new(1, 0, vec![e])).collect())
        .collect();
    Ok(Bicharacter::new(1, vec!["q".into()], rows)?)
}

/// The default assignment: zeros on `1..=m` and `n+1`, ones on `m+1..=n`.
pub fn default_assignment(n: usize, m: usize) -> Vec<u8> {
    let mut p: Vec<u8> = (0..n).map(|i| u8::from(i >= m)).collect();
    p.push(0);
    p
}

/// All maps `{1..n+1} → {0,1}` with `m` zeros among the first `n` values and
/// `p(n+1) = 1 ⇒ p(n) = 1`.
pub fn super_assignments(n: usize, m: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    for bits in 0u32..(1 << (n + 1)) {
        let p: Vec<u8> = (0..=n).map(|i| ((bits >> i) & 1) as u8).collect();
        let zeros = p[..n].iter().filter(|&&b| b == 0).count();
        if zeros == m && (p[n] == 0 || p[n - 1] == 1) {
            out.push(p);
        }
    }
    out
}

/// Simple roots `α_i` in the basis `ε_1 … ε_n` and the diagonal form
/// `λ(ε_i, ε_j) = δ_ij (−1)^{p(i)}` of the super family.
pub fn super_roots(n: usize, p: &[u8]) -> (Vec<Vec<i32>>, Vec<i32>) {
    let eps = |i: usize| {
        let mut v = vec![0; n];
        v[i] = 1;
        v
    };
    let combo = |a: usize, sa: i32, b: usize, sb: i32| {
        let mut v = vec![0; n];
        v[a] += sa;
        v[b] += sb;
        v
    };
    let (pn, pn1) = (p[n - 1], p[n]);
    let mut roots: Vec<Vec<i32>> = (0..n - 2).map(|i| combo(i, 1, i + 1, -1)).collect();
    let two_last = {
        let mut v = eps(n - 1);
        v[n - 1] = 2;
        v
    };
    roots.push(if pn1 == 0 { combo(n - 2, 1, n - 1, -1) } else { two_last.clone() });
    roots.push(match (pn, pn1) {
        (0, 0) => combo(n - 2, 1, n - 1, 1),
        (1, 0) => two_last,
        _ => combo(n - 2, 1, n - 1, -1),
    });
    let signs = (0..n).map(|i| if p[i] == 0 { 1 } else { -1 }).collect();
    (roots, signs)
}

/// `λ(α_i, α_j)` for the super family.
pub fn super_form(n: usize, p: &[u8]) -> Vec<Vec<i32>> {
    let (roots, signs) = super_roots(n, p);
    let dot = |a: &[i32], b: &[i32]| -> i32 { (0..n).map(|k| a[k] * b[k] * signs[k]).sum() };
    roots
        .iter()
        .map(|a| roots.iter().map(|b| dot(a, b)).collect())
        .collect()
}

/// The super-family bicharacter in normal form:
/// `q_ii = (−1)^{μ_i} q^{λ_ii}`, `q_ij = q^{2λ_ij}` for `i < j`, `q_ji = 1`,
/// with `μ_i = 1` exactly when `λ_ii = 0`.
pub fn super_bicharacter(n: usize, m: usize, p: Option<&[u8]>) -> Result<Bicharacter, CatalogError> {
    if n < 2 || m == 0 || m >= n {
        return Err(CatalogError::BadAssignment(format!("need n ≥ 2 and 1 ≤ m < n, got n={n}, m={m}")));
    }
    let p = p.map(|p| p.to_vec()).unwrap_or_else(|| default_assignment(n, m));
    if p.len() != n + 1 || p.iter().any(|&b| b > 1) {
        return Err(CatalogError::BadAssignment(format!("need {} binary values", n + 1)));
    }
    if p[..n].iter().filter(|&&b| b == 0).count() != m {
        return Err(CatalogError::BadAssignment(format!("need exactly {m} zeros among the first {n}")));
    }
    if p[n] == 1 && p[n - 1] == 0 {
        return Err(CatalogError::BadAssignment("parity constraint fails".into()));
    }
    let lam = super_form(n, &p);
    let mut rows = vec![vec![CycScalar::one(2, 1); n]; n];
    for i in 0..n {
        let sign = if lam[i][i] == 0 { 1 } else { 0 };
        rows[i][i] = CycScalar::new(2, sign, vec![lam[i][i]]);
        for j in i + 1..n {
            rows[i][j] = CycScalar::new(2, 0, vec![2 * lam[i][j]]);
        }
    }
    Ok(Bicharacter::new(2, vec!["q".into()], rows)?)
}

/// Names of diagram families by table and row.
pub fn family_aliases(table: u32, row: u32) -> &'static [&'static str] {
    match (table, row) {
        (3, 14) => &["wk(4)"],
        (1, 5) => &["br(2)"],
        (2, 18) => &["br(3)"],
        (1, 9) => &["brj(2;3)"],
        (2, 13) => &["g(1,6)"],
        (2, 15) => &["g(2,3)"],
        (3, 18) => &["g(3,3)"],
        (3, 20) => &["g(4,3)"],
        (3, 21) => &["g(3,6)"],
        (4, 11) => &["g(2,6)"],
        (4, 12) => &["el(5;3)"],
        (4, 13) => &["g(8,3)"],
        (4, 17) => &["g(4,6)"],
        (4, 18) => &["g(6,6)"],
        (4, 21) => &["g(8,6)"],
        (1, 13) => &["brj(2;5)"],
        (4, 15) => &["el(5;5)"],
        (4, 14) => &["ufo(1)"],
        (4, 19) => &["ufo(2)"],
        (2, 16) => &["ufo(3)"],
        (2, 17) => &["ufo(4)"],
        (3, 17) => &["ufo(5)"],
        (3, 22) => &["ufo(6)"],
        (1, 7) => &["ufo(7)"],
        (1, 8) => &["ufo(8)"],
        (1, 12) => &["ufo(9)"],
        (1, 14) => &["ufo(10)"],
        (1, 15) => &["ufo(11)"],
        (1, 16) => &["ufo(12)"],
        _ => &[],
    }
}

fn table_aliases(name: &str) -> Vec<String> {
    let mut parts = name.split(':');
    if parts.next() != Some("hec") {
        return Vec::new();
    }
    let (Some(Ok(t)), Some(Ok(r))) = (parts.next().map(str::parse), parts.next().map(str::parse)) else {
        return Vec::new();
    };
    family_aliases(t, r).iter().map(|s| s.to_string()).collect()
}

fn cartan_entry(label: &str) -> Result<CatalogEntry, CatalogError> {
    let chi = cartan_bicharacter(label)?;
    let order = CoxeterSystem::from_type(label)
        .ok()
        .and_then(|cs| cs.group_order())
        .map(|o| o as usize);
    Ok(CatalogEntry {
        name: format!("cartan:{label}"),
        aliases: vec![label.to_string()],
        construction: Construction::Cartan(label.to_string()),
        chi,
        expected: Expected {
            vertices: order,
            objects: Some(1),
            ..Expected::default()
        },
    })
}

fn super_entry(n: usize, m: usize) -> Result<CatalogEntry, CatalogError> {
    Ok(CatalogEntry {
        name: format!("super:N{n}:m{m}"),
        aliases: Vec::new(),
        construction: Construction::Super {
            n,
            m,
            p: default_assignment(n, m),
        },
        chi: super_bicharacter(n, m, None)?,
        expected: Expected {
            objects: Some(super_assignments(n, m).len()),
            ..Expected::default()
        },
    })
}

/// Rank-3 entries whose matrices are printed in the text: the example
/// diagram `q, −1, r` with products `q^{-1}`, `r^{-1}`, and the Cartan type
/// `A2×A1` with an independent parameter on the isolated node.
pub fn builtin_rank3_examples() -> Vec<CatalogEntry> {
    let s = |t: i64, q: i32, r: i32| CycScalar::new(2, t, vec![q, r]);
    let one = s(0, 0, 0);
    let hec = Bicharacter::new(
        2,
        vec!["q".into(), "r".into()],
        vec![
            vec![s(0, 1, 0), s(0, -1, 0), one.clone()],
            vec![one.clone(), s(1, 0, 0), s(0, 0, -1)],
            vec![one.clone(), one.clone(), s(0, 0, 1)],
        ],
    )
    .expect("square");
    let a2a1 = Bicharacter::new(
        2,
        vec!["q".into(), "r".into()],
        vec![
            vec![s(0, 1, 0), s(0, -1, 0), one.clone()],
            vec![one.clone(), s(0, 1, 0), one.clone()],
            vec![one.clone(), one.clone(), s(0, 0, 1)],
        ],
    )
    .expect("square");
    vec![
        CatalogEntry {
            name: "hec:2:9:1".into(),
            aliases: table_aliases("hec:2:9:1"),
            construction: Construction::Inline,
            chi: hec,
            expected: Expected {
                special_exists: Some(true),
                convenient: vec![2],
                ..Expected::default()
            },
        },
        CatalogEntry {
            name: "a2xa1".into(),
            aliases: vec!["A2xA1".into()],
            construction: Construction::Inline,
            chi: a2a1,
            expected: Expected {
                vertices: Some(12),
                objects: Some(1),
                special_exists: Some(true),
                convenient: vec![0],
            },
        },
    ]
}

const BUILTIN_CARTAN: &[&str] = &[
    "A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "C3", "C4", "D4", "D5", "F4", "G2",
];

#[derive(Debug, Clone, Default)]
pub struct Catalog {
    entries: Vec<CatalogEntry>,
    by_name: HashMap<String, usize>,
}

impl Catalog {
    pub fn empty() -> Self {
        Catalog::default()
    }

    /// Built-in entries only.
    pub fn builtin() -> Self {
        let mut c = Catalog::empty();
        for label in BUILTIN_CARTAN {
            c.add(cartan_entry(label).expect("built-in type")).expect("unique");
        }
        for m in 1..5 {
            c.add(super_entry(5, m).expect("valid")).expect("unique");
        }
        for e in builtin_rank3_examples() {
            c.add(e).expect("unique");
        }
        c
    }

    /// Built-ins plus every file listed in `WEYL_CATALOG_PATH`
    /// (separated like `PATH`).
    pub fn from_env() -> Result<Self, CatalogError> {
        let mut c = Catalog::builtin();
        if let Some(paths) = std::env::var_os(CATALOG_PATH_VAR) {
            for path in std::env::split_paths(&paths) {
                if !path.as_os_str().is_empty() {
                    for e in load_entries(&path)? {
                        c.add(e)?;
                    }
                }
            }
        }
        Ok(c)
    }

    pub fn add(&mut self, e: CatalogEntry) -> Result<(), CatalogError> {
        if self.by_name.contains_key(&e.name) {
            return Err(CatalogError::DuplicateName(e.name));
        }
        self.by_name.insert(e.name.clone(), self.entries.len());
        self.entries.push(e);
        Ok(())
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Looks up a name or alias. `cartan:X` (optionally `cartan:X:q`) and
    /// `super:N<n>:m<m>` are constructed on demand.
    pub fn get(&self, name: &str) -> Result<CatalogEntry, CatalogError> {
        if let Some(&i) = self.by_name.get(name) {
            return Ok(self.entries[i].clone());
        }
        if let Some(e) = self.entries.iter().find(|e| e.aliases.iter().any(|a| a == name)) {
            return Ok(e.clone());
        }
        if let Some(rest) = name.strip_prefix("cartan:") {
            let label = rest.strip_suffix(":q").unwrap_or(rest);
            return cartan_entry(label);
        }
        if let Some(rest) = name.strip_prefix("super:") {
            let parsed = rest.split_once(':').and_then(|(a, b)| {
                Some((a.strip_prefix('N')?.parse().ok()?, b.strip_prefix('m')?.parse().ok()?))
            });
            if let Some((n, m)) = parsed {
                return super_entry(n, m);
            }
        }
        Err(CatalogError::UnknownEntry(name.to_string()))
    }
}

/// Reads a catalog file.
pub fn load_entries(path: &Path) -> Result<Vec<CatalogEntry>, CatalogError> {
    let text = std::fs::read_to_string(path).map_err(|e| CatalogError::Io {
        path: path.display().to_string(),
        reason: e.to_string(),
    })?;
    parse_entries(&text, &path.display().to_string())
}

#[derive(Default)]
struct Draft {
    name: Option<String>,
    aliases: Vec<String>,
    order: u32,
    params: Vec<String>,
    rows: Vec<Vec<CycScalar>>,
    diag: Vec<(usize, CycScalar)>,
    edges: Vec<(usize, usize, CycScalar)>,
    expected: Expected,
    line: usize,
}

/// Parses catalog text; `source_name` is used in error messages.
pub fn parse_entries(text: &str, source_name: &str) -> Result<Vec<CatalogEntry>, CatalogError> {
    let mut out: Vec<CatalogEntry> = Vec::new();
    let mut draft: Option<Draft> = None;
    for (ln, raw) in text.lines().enumerate() {
        let line_no = ln + 1;
        let content = raw.split('#').next().unwrap_or("");
        // tokens with their 1-based columns
        let mut tokens: Vec<(usize, &str)> = Vec::new();
        let mut pos = 0;
        for tok in content.split_whitespace() {
            let at = content[pos..].find(tok).unwrap() + pos;
            tokens.push((at + 1, tok));
            pos = at + tok.len();
        }
        let Some(&(kcol, key)) = tokens.first() else {
            continue;
        };
        let perr = |column: usize, reason: String| CatalogError::Parse {
            source_name: source_name.to_string(),
            line: line_no,
            column,
            reason,
        };
        let args = &tokens[1..];
        let int = |k: usize| -> Result<usize, CatalogError> {
            let (c, t) = args.get(k).ok_or_else(|| perr(kcol, format!("`{key}` needs more arguments")))?;
            t.parse().map_err(|_| perr(*c, format!("expected a number, found `{t}`")))
        };
        if key == "entry" {
            if draft.is_some() {
                return Err(perr(kcol, "`entry` before `end`".into()));
            }
            let (_, name) = args.first().ok_or_else(|| perr(kcol, "`entry` needs a name".into()))?;
            if out.iter().any(|e| e.name == *name) {
                return Err(CatalogError::DuplicateName(name.to_string()));
            }
            draft = Some(Draft {
                name: Some(name.to_string()),
                order: 1,
                line: line_no,
                ..Draft::default()
            });
            continue;
        }
        let Some(d) = draft.as_mut() else {
            return Err(perr(kcol, format!("`{key}` outside an entry")));
        };
        let scalar = |d: &Draft, (c, t): (usize, &str)| -> Result<CycScalar, CatalogError> {
            parse_scalar(t, d.order, &d.params).map_err(|e| match e {
                ExactError::BadLiteral { column, reason } => perr(c + column - 1, reason),
                other => perr(c, other.to_string()),
            })
        };
        match key {
            "alias" => d.aliases.extend(args.iter().map(|a| a.1.to_string())),
            "order" => {
                d.order = int(0)? as u32;
                if d.order == 0 {
                    return Err(perr(args[0].0, "order must be positive".into()));
                }
            }
            "params" => d.params = args.iter().map(|a| a.1.to_string()).collect(),
            "row" => {
                let row = args.iter().map(|&a| scalar(d, a)).collect::<Result<Vec<_>, _>>()?;
                d.rows.push(row);
            }
            "vertex" => {
                let i = int(0)?;
                let v = scalar(d, *args.get(1).ok_or_else(|| perr(kcol, "`vertex i value`".into()))?)?;
                d.diag.push((i, v));
            }
            "edge" => {
                let (i, j) = (int(0)?, int(1)?);
                let v = scalar(d, *args.get(2).ok_or_else(|| perr(kcol, "`edge i j value`".into()))?)?;
                d.edges.push((i, j, v));
            }
            "expected" => {
                let (c, what) = args.first().ok_or_else(|| perr(kcol, "`expected` needs a key".into()))?;
                match *what {
                    "vertices" => d.expected.vertices = Some(int(1)?),
                    "objects" => d.expected.objects = Some(int(1)?),
                    "convenient" => {
                        let i = int(1)?;
                        if i == 0 {
                            return Err(perr(args[1].0, "generator indices are 1-based".into()));
                        }
                        d.expected.convenient.push(i - 1);
                    }
                    "special" => {
                        let (c2, t) = args.get(1).ok_or_else(|| perr(*c, "`expected special true|false`".into()))?;
                        d.expected.special_exists =
                            Some(t.parse().map_err(|_| perr(*c2, format!("expected true or false, found `{t}`")))?);
                    }
                    other => return Err(perr(*c, format!("unknown expectation `{other}`"))),
                }
            }
            "end" => {
                let d = draft.take().unwrap();
                out.push(finish(d, source_name).map_err(|reason| perr(kcol, reason))?);
            }
            other => return Err(perr(kcol, format!("unknown keyword `{other}`"))),
        }
    }
    if let Some(d) = draft {
        return Err(CatalogError::Parse {
            source_name: source_name.to_string(),
            line: d.line,
            column: 1,
            reason: "entry is missing `end`".into(),
        });
    }
    Ok(out)
}

fn finish(d: Draft, source_name: &str) -> Result<CatalogEntry, String> {
    let np = d.params.len();
    let rows = if !d.rows.is_empty() {
        if !d.diag.is_empty() || !d.edges.is_empty() {
            return Err("use either `row` lines or `vertex`/`edge` lines".into());
        }
        d.rows
    } else {
        let n = d.diag.len();
        if n == 0 {
            return Err("entry has no matrix".into());
        }
        let mut rows = vec![vec![CycScalar::one(d.order, np); n]; n];
        let mut seen = vec![false; n];
        for (i, v) in d.diag {
            if i == 0 || i > n || seen[i - 1] {
                return Err(format!("bad or repeated vertex {i}"));
            }
            seen[i - 1] = true;
            rows[i - 1][i - 1] = v;
        }
        for (i, j, v) in d.edges {
            if i == j || i == 0 || j == 0 || i > n || j > n {
                return Err(format!("bad edge {i} {j}"));
            }
            let (a, b) = (i.min(j) - 1, i.max(j) - 1);
            rows[a][b] = v;
        }
        rows
    };
    let name = d.name.unwrap_or_default();
    let chi = Bicharacter::new(d.order, d.params, rows).map_err(|e| e.to_string())?;
    let mut aliases = table_aliases(&name);
    aliases.extend(d.aliases);
    Ok(CatalogEntry {
        name,
        aliases,
        construction: Construction::File(source_name.to_string()),
        chi,
        expected: d.expected,
    })
}

impl fmt::Display for CatalogEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)?;
        if !self.aliases.is_empty() {
            write!(f, " ({})", self.aliases.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a2_cartan_data() {
        let chi = cartan_bicharacter("A2").unwrap();
        let key = chi.object_key();
        assert_eq!(key.diag[0], CycScalar::new(1, 0, vec![2]));
        assert_eq!(*key.product(0, 1), CycScalar::new(1, 0, vec![-2]));
        assert_eq!(chi.n_ij(0, 1).finite(), Some(1));
        assert_eq!(chi.cartan_label().as_deref(), Some("A2"));
    }

    #[test]
    fn cartan_labels() {
        for t in ["B3", "C3", "D4", "F4", "G2", "A2xA1"] {
            assert_eq!(cartan_bicharacter(t).unwrap().cartan_label().as_deref(), Some(t), "{t}");
        }
        assert!(matches!(cartan_bicharacter("B1"), Err(CatalogError::BadRank(_))));
        assert!(matches!(cartan_bicharacter("Q3"), Err(CatalogError::BadRank(_))));
    }

    #[test]
    fn super_assignment_count() {
        // C(n−1, m−1) + 2·C(n−1, m)
        let binom = |n: usize, k: usize| (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1));
        for m in 1..5 {
            assert_eq!(super_assignments(5, m).len(), binom(4, m - 1) + 2 * binom(4, m));
        }
    }

    #[test]
    fn super_diagonal() {
        let chi = super_bicharacter(5, 2, None).unwrap();
        assert_eq!(*chi.q(0, 0), CycScalar::new(2, 0, vec![2]));
        // the sign change sits at α_m
        assert_eq!(*chi.q(1, 1), CycScalar::minus_one(2, 1).unwrap());
        assert!(super_bicharacter(5, 5, None).is_err());
        assert!(super_bicharacter(5, 2, Some(&[0, 0, 1, 0, 1, 1])).is_err());
    }

    #[test]
    fn file_round_trip() {
        assert!(parse_entries("", "t").unwrap().is_empty());
        let text = "entry t:1\norder 2\nparams q\nrow q q^-1\nrow 1 -1\nexpected vertices 6\nend\n";
        let e = parse_entries(text, "t").unwrap();
        assert_eq!(e.len(), 1);
        assert_eq!(e[0].expected.vertices, Some(6));
        let bad = "entry t\norder 2\nparams q\nrow q q^x\nend\n";
        match parse_entries(bad, "t") {
            Err(CatalogError::Parse { line, column, .. }) => assert_eq!((line, column), (4, 7)),
            other => panic!("{other:?}"),
        }
        let dup = "entry a\nvertex 1 1\nend\nentry a\n";
        assert!(matches!(parse_entries(dup, "t"), Err(CatalogError::DuplicateName(_))));
    }

    #[test]
    fn lookup() {
        let c = Catalog::builtin();
        assert!(c.get("cartan:B4").is_ok());
        assert!(c.get("cartan:B4:q").is_ok());
        assert!(c.get("cartan:E6").is_ok());
        assert!(c.get("super:N6:m3").is_ok());
        assert!(c.get("F4").is_ok());
        assert!(matches!(c.get("nope"), Err(CatalogError::UnknownEntry(_))));
    }
}
