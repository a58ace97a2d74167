//! Finite Coxeter systems, their Cayley graphs in the exact geometric
//! representation, and the inductive coset-splicing Hamilton circuit.
//!
//! The representation acts on `⊕ ℝx_s` by `f(s)(y) = y − (y, x_s) x_s` with
//! `(x_s, x_t) = −2cos(π/m_st) = −(ζ_{2m} + ζ_{2m}^{-1})`, all entries living in
//! `ℤ[ζ_{2L}]` for `L` the lcm of the finite `m_st`.

use std::collections::HashMap;
use std::sync::Arc;

use thiserror::Error;

use crate::classify::{self, Component};
use crate::exactnum::{lcm, CycInteger, CycRing};
use crate::graph::{coset_partition, LabeledGraph};
use crate::hamilton::{splice, SpliceError};

pub const DEFAULT_GROUP_CAP: usize = 2_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoxeterError {
    #[error("invalid Coxeter matrix: {0}")]
    BadMatrix(String),
    #[error("unknown Coxeter type `{0}`")]
    UnknownType(String),
    #[error("the Coxeter group is infinite")]
    Infinite,
    #[error("more than {0} group elements")]
    CapExceeded(usize),
    #[error("no generator ordering with a last generator commuting with all but one other")]
    NotFound,
    #[error("splicing failed: {0}")]
    Splice(#[from] SpliceError),
}

/// A Coxeter matrix; `m[i][j] = 0` encodes `∞`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoxeterSystem {
    m: Vec<Vec<u32>>,
}

impl CoxeterSystem {
    pub fn new(m: Vec<Vec<u32>>) -> Result<Self, CoxeterError> {
        let n = m.len();
        if n == 0 {
            return Err(CoxeterError::BadMatrix("empty".into()));
        }
        for i in 0..n {
            if m[i].len() != n {
                return Err(CoxeterError::BadMatrix("not square".into()));
            }
            if m[i][i] != 1 {
                return Err(CoxeterError::BadMatrix(format!("diagonal entry {} is not 1", i + 1)));
            }
            for j in 0..n {
                if m[i][j] != m[j][i] {
                    return Err(CoxeterError::BadMatrix("not symmetric".into()));
                }
                if i != j && m[i][j] == 1 {
                    return Err(CoxeterError::BadMatrix("off-diagonal entry 1".into()));
                }
            }
        }
        Ok(CoxeterSystem { m })
    }

    /// Standard types: `A4`, `B3` (= `C3`), `D4`, `E6`, `F4`, `G2`, `H3`,
    /// `I2:7` (or `I2(7)`), and products such as `A2xA1`. `B_n` has its
    /// 4-bond between generators 1 and 2; `D_n` attaches generator `n` to
    /// `n−2`.
    pub fn from_type(label: &str) -> Result<Self, CoxeterError> {
        let parts: Vec<&str> = label.split(['x', '×']).map(str::trim).collect();
        let mut blocks = Vec::new();
        for p in &parts {
            blocks.push(Self::irreducible(p).ok_or_else(|| CoxeterError::UnknownType(label.to_string()))?);
        }
        let n: usize = blocks.iter().map(|b| b.len()).sum();
        let mut m = vec![vec![2u32; n]; n];
        let mut off = 0;
        for b in &blocks {
            for i in 0..b.len() {
                for j in 0..b.len() {
                    m[off + i][off + j] = b[i][j];
                }
            }
            off += b.len();
        }
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1;
        }
        Self::new(m)
    }

    fn irreducible(p: &str) -> Option<Vec<Vec<u32>>> {
        let (family, rest) = p.split_at(p.char_indices().nth(1)?.0);
        let family = family.to_ascii_uppercase();
        if family == "I" {
            let rest = rest.trim_start_matches('2');
            let mstr = rest.trim_start_matches([':', '(']).trim_end_matches(')');
            let m: u32 = mstr.parse().ok()?;
            if m < 2 {
                return None;
            }
            return Some(vec![vec![1, m], vec![m, 1]]);
        }
        let n: usize = rest.parse().ok()?;
        let path = |n: usize, w: &[(usize, u32)]| {
            let mut m = vec![vec![2u32; n]; n];
            for (i, row) in m.iter_mut().enumerate() {
                row[i] = 1;
            }
            for i in 0..n.saturating_sub(1) {
                m[i][i + 1] = 3;
                m[i + 1][i] = 3;
            }
            for &(i, v) in w {
                m[i][i + 1] = v;
                m[i + 1][i] = v;
            }
            m
        };
        match family.as_str() {
            "A" if n >= 1 => Some(path(n, &[])),
            "B" | "C" if n >= 2 => Some(path(n, &[(0, 4)])),
            "D" if n >= 4 => {
                let mut m = path(n - 1, &[]);
                for row in m.iter_mut() {
                    row.push(2);
                }
                m.push(vec![2; n]);
                m[n - 1][n - 1] = 1;
                m[n - 1][n - 3] = 3;
                m[n - 3][n - 1] = 3;
                Some(m)
            }
            "E" if (6..=8).contains(&n) => {
                // 1-3-4-5-…, with 2 attached to 4
                let mut m = vec![vec![2u32; n]; n];
                for (i, row) in m.iter_mut().enumerate() {
                    row[i] = 1;
                }
                let mut link = |a: usize, b: usize| {
                    m[a][b] = 3;
                    m[b][a] = 3;
                };
                link(0, 2);
                link(1, 3);
                for k in 2..n - 1 {
                    link(k, k + 1);
                }
                Some(m)
            }
            "F" if n == 4 => Some(path(4, &[(1, 4)])),
            "G" if n == 2 => Some(vec![vec![1, 6], vec![6, 1]]),
            "H" if n == 3 || n == 4 => Some(path(n, &[(0, 5)])),
            _ => None,
        }
    }

    /// Whitespace-separated square matrix; `inf` or `0` for `∞`, `#` comments.
    pub fn parse_matrix(text: &str) -> Result<Self, CoxeterError> {
        let mut rows = Vec::new();
        for line in text.lines() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let row = line
                .split_whitespace()
                .map(|t| match t {
                    "inf" | "∞" => Ok(0),
                    _ => t
                        .parse::<u32>()
                        .map_err(|_| CoxeterError::BadMatrix(format!("bad entry `{t}`"))),
                })
                .collect::<Result<Vec<_>, _>>()?;
            rows.push(row);
        }
        Self::new(rows)
    }

    pub fn rank(&self) -> usize {
        self.m.len()
    }

    pub fn m(&self, i: usize, j: usize) -> u32 {
        self.m[i][j]
    }

    pub fn matrix(&self) -> &[Vec<u32>] {
        &self.m
    }

    pub fn components(&self) -> Option<Vec<Component>> {
        classify::classify_coxeter(&self.m)
    }

    pub fn is_finite(&self) -> bool {
        self.components().is_some()
    }

    pub fn label(&self) -> Option<String> {
        self.components().map(|c| classify::label(&c))
    }

    /// `|W|` from the classification, `None` when infinite.
    pub fn group_order(&self) -> Option<u128> {
        self.components()
            .map(|cs| cs.iter().map(Component::group_order).product())
    }

    /// Sub-system on `indices`, in that order.
    pub fn restrict(&self, indices: &[usize]) -> CoxeterSystem {
        CoxeterSystem {
            m: indices
                .iter()
                .map(|&i| indices.iter().map(|&j| self.m[i][j]).collect())
                .collect(),
        }
    }

    fn neighbors(&self, i: usize) -> Vec<usize> {
        (0..self.rank()).filter(|&j| j != i && self.m[i][j] != 2).collect()
    }
}

/// Orders the generators so that the last commutes with all but the
/// second-to-last. The highest-index leaf (or isolated node) goes last.
pub fn generator_ordering(cs: &CoxeterSystem) -> Result<Vec<usize>, CoxeterError> {
    let n = cs.rank();
    for last in (0..n).rev() {
        let nb = cs.neighbors(last);
        let before = match nb.as_slice() {
            [] => (0..n).rev().find(|&j| j != last),
            [j] => Some(*j),
            _ => continue,
        };
        let mut order: Vec<usize> = (0..n).filter(|&j| j != last && Some(j) != before).collect();
        order.extend(before);
        order.push(last);
        return Ok(order);
    }
    Err(CoxeterError::NotFound)
}

/// Cayley graph of a Coxeter group under left multiplication by generators.
#[derive(Debug, Clone)]
pub struct CoxeterGraph {
    rank: usize,
    elements: Vec<Vec<CycInteger>>,
    adj: Vec<usize>,
}

impl CoxeterGraph {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Matrix of element `v` in the geometric representation (row-major).
    pub fn element(&self, v: usize) -> &[CycInteger] {
        &self.elements[v]
    }

    #[inline]
    pub fn step(&self, v: usize, i: usize) -> usize {
        self.adj[v * self.rank + i]
    }
}

impl LabeledGraph for CoxeterGraph {
    fn rank(&self) -> usize {
        self.rank
    }

    fn vertex_count(&self) -> usize {
        self.elements.len()
    }

    fn neighbor(&self, v: usize, i: usize) -> Option<usize> {
        Some(self.step(v, i))
    }
}

/// Gram matrix `(x_s, x_t)` in `ℤ[ζ_{2L}]`.
fn gram(cs: &CoxeterSystem) -> (Arc<CycRing>, Vec<Vec<CycInteger>>) {
    let n = cs.rank();
    let l = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| i != j && cs.m(i, j) != 0)
        .fold(1u64, |acc, (i, j)| lcm(acc, cs.m(i, j) as u64));
    let ring = CycRing::get(2 * l as u32);
    let mut b = vec![vec![CycInteger::zero(&ring); n]; n];
    for i in 0..n {
        for j in 0..n {
            b[i][j] = match cs.m(i, j) {
                1 => CycInteger::from_int(&ring, 2),
                0 => CycInteger::from_int(&ring, -2),
                m => {
                    let k = (l / m as u64) as i64;
                    let z = CycInteger::zeta_pow(&ring, k);
                    let zi = CycInteger::zeta_pow(&ring, -k);
                    -&(&z + &zi)
                }
            };
        }
    }
    (ring, b)
}

/// Breadth-first enumeration of `W` from the identity, generators ascending.
pub fn enumerate_group(cs: &CoxeterSystem, cap: usize) -> Result<CoxeterGraph, CoxeterError> {
    let n = cs.rank();
    let (ring, b) = gram(cs);
    let mut identity = vec![CycInteger::zero(&ring); n * n];
    for i in 0..n {
        identity[i * n + i] = CycInteger::one(&ring);
    }
    let mut index: HashMap<Vec<CycInteger>, usize> = HashMap::from([(identity.clone(), 0)]);
    let mut g = CoxeterGraph {
        rank: n,
        elements: vec![identity],
        adj: Vec::new(),
    };
    let mut v = 0;
    while v < g.elements.len() {
        for s in 0..n {
            let cur = &g.elements[v];
            let mut next = cur.clone();
            for c in 0..n {
                let mut acc = -&cur[s * n + c];
                for t in 0..n {
                    if t != s && !b[t][s].is_zero() {
                        acc = &acc - &(&b[t][s] * &cur[t * n + c]);
                    }
                }
                next[s * n + c] = acc;
            }
            let w = match index.get(&next) {
                Some(&w) => w,
                None => {
                    if g.elements.len() >= cap {
                        return Err(CoxeterError::CapExceeded(cap));
                    }
                    let w = g.elements.len();
                    index.insert(next.clone(), w);
                    g.elements.push(next);
                    w
                }
            };
            g.adj.push(w);
        }
        v += 1;
    }
    Ok(g)
}

/// Hamilton circuit of the Cayley graph of a finite Coxeter group, as a word
/// in application order (0-based generators).
///
/// Rank 1 gives `s s`, rank 2 gives `(s_1 s_2)^m`. In higher rank the circuit
/// of `Ŵ = ⟨ŝ(1), …, ŝ(n−1)⟩` is spread over the right cosets `Ŵw` by joints
/// through the last generator `ŝ(n)`.
pub fn csw_circuit(cs: &CoxeterSystem) -> Result<Vec<usize>, CoxeterError> {
    if !cs.is_finite() {
        return Err(CoxeterError::Infinite);
    }
    match cs.rank() {
        1 => return Ok(vec![0, 0]),
        2 => {
            let m = cs.m(0, 1) as usize;
            return Ok((0..2 * m).map(|t| t % 2).collect());
        }
        _ => {}
    }
    let g = enumerate_group(cs, DEFAULT_GROUP_CAP)?;
    csw_on_graph(cs, &g)
}

/// As [`csw_circuit`], on any labelled graph isomorphic to the Cayley graph
/// of `cs` (an enumerated group, or a groupoid with the same dihedral orders).
pub fn csw_on_graph<G: LabeledGraph + ?Sized>(cs: &CoxeterSystem, g: &G) -> Result<Vec<usize>, CoxeterError> {
    let n = cs.rank();
    if n <= 2 {
        return csw_circuit(cs);
    }
    let order = generator_ordering(cs)?;
    let sub = cs.restrict(&order[..n - 1]);
    let sub_word: Vec<usize> = csw_circuit(&sub)?.into_iter().map(|k| order[k]).collect();
    let part = coset_partition(g, order[n - 1]);
    let word = splice(g, &part, &|_block| vec![sub_word.clone()])?;
    Ok(word)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hamilton::check_walk;

    #[test]
    fn orders() {
        for (label, order) in [("A3", 24), ("B3", 48), ("D4", 192), ("H3", 120), ("I2:5", 10), ("A1xA1xA1", 8)] {
            let cs = CoxeterSystem::from_type(label).unwrap();
            let g = enumerate_group(&cs, 10_000).unwrap();
            assert_eq!(g.len(), order, "{label}");
            assert_eq!(cs.group_order(), Some(order as u128));
        }
    }

    #[test]
    fn orderings() {
        let a3 = CoxeterSystem::from_type("A3").unwrap();
        assert_eq!(generator_ordering(&a3).unwrap(), vec![0, 1, 2]);
        let b4 = CoxeterSystem::from_type("B4").unwrap();
        assert_eq!(generator_ordering(&b4).unwrap(), vec![0, 1, 2, 3]);
        let p = CoxeterSystem::from_type("A2xA1").unwrap();
        assert_eq!(*generator_ordering(&p).unwrap().last().unwrap(), 2);
        let affine = CoxeterSystem::new(vec![vec![1, 3, 3], vec![3, 1, 3], vec![3, 3, 1]]).unwrap();
        assert_eq!(generator_ordering(&affine), Err(CoxeterError::NotFound));
    }

    #[test]
    fn small_circuits_verify() {
        for label in ["A3", "B3", "H3", "A2xA1", "A1xA1xA1"] {
            let cs = CoxeterSystem::from_type(label).unwrap();
            let g = enumerate_group(&cs, 10_000).unwrap();
            let w = csw_circuit(&cs).unwrap();
            assert_eq!(w.len(), g.len(), "{label}");
            assert!(check_walk(&g, 0, &w).is_ok(), "{label}");
        }
    }

    #[test]
    fn infinite_rejected() {
        let cs = CoxeterSystem::new(vec![vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(csw_circuit(&cs), Err(CoxeterError::Infinite));
    }
}
