//! Bicharacters on `ℤΠ`, their generalized Dynkin diagrams, and the local
//! reflection data `N_ij`, `s_i`, `τ_i`.

use std::fmt;

use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::classify::{self, Component};
use crate::exactnum::{q_number_is_zero, solve_pow_eq, CycScalar, Order};
use crate::matrix::IntMatrix;

/// Default brute-force scan bound used by [`Bicharacter::n_ij`].
pub const DEFAULT_N_CAP: u32 = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BicharError {
    #[error("N_{{{i},{j}}} is infinite")]
    InfiniteType { i: usize, j: usize },
    #[error("bicharacter matrix must be square and nonempty")]
    NotSquare,
    #[error("entries live in different scalar workspaces")]
    WorkspaceMismatch,
    #[error("index set is empty or out of range")]
    BadIndexSet,
}

/// `N_ij`: a non-negative integer or infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NValue {
    Finite(u32),
    Infinite,
}

impl NValue {
    pub fn finite(self) -> Option<u32> {
        match self {
            NValue::Finite(k) => Some(k),
            NValue::Infinite => None,
        }
    }
}

/// A bicharacter given by the matrix `q[i][j] = χ(α_i, α_j)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Bicharacter {
    n: usize,
    order: u32,
    params: Vec<String>,
    q: Vec<CycScalar>,
}

/// Twist-equivalence class: the diagonal and the products `q_ij q_ji`, `i < j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ObjectKey {
    pub diag: Vec<CycScalar>,
    pub off: Vec<CycScalar>,
}

/// Generalized Dynkin diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DynkinDiagram {
    pub vertices: Vec<CycScalar>,
    /// `(i, j, q_ij q_ji)` for `i < j` with a label different from 1.
    pub edges: Vec<(usize, usize, CycScalar)>,
}

impl ObjectKey {
    pub fn rank(&self) -> usize {
        self.diag.len()
    }

    /// `q_ij q_ji` for `i ≠ j`.
    pub fn product(&self, i: usize, j: usize) -> &CycScalar {
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        let n = self.rank();
        // row-major index into the strict upper triangle
        let idx = a * n - a * (a + 1) / 2 + (b - a - 1);
        &self.off[idx]
    }

    pub fn dynkin(&self) -> DynkinDiagram {
        let n = self.rank();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let p = self.product(i, j);
                if !p.is_one() {
                    edges.push((i, j, p.clone()));
                }
            }
        }
        DynkinDiagram {
            vertices: self.diag.clone(),
            edges,
        }
    }

    /// Human-readable form: vertex labels, then edge labels `i-j:label`.
    pub fn describe(&self, names: &[String]) -> String {
        let d = self.dynkin();
        let verts: Vec<String> = d.vertices.iter().map(|s| s.to_literal(names)).collect();
        let edges: Vec<String> = d
            .edges
            .iter()
            .map(|(i, j, s)| format!("{}-{}:{}", i + 1, j + 1, s.to_literal(names)))
            .collect();
        format!("[{}] {{{}}}", verts.join(", "), edges.join(", "))
    }

    /// First eight hex digits of a SHA-256 of the canonical description.
    pub fn short_hash(&self) -> String {
        let digest = Sha256::digest(self.describe(&[]).as_bytes());
        digest[..4].iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl Bicharacter {
    pub fn new(order: u32, params: Vec<String>, rows: Vec<Vec<CycScalar>>) -> Result<Self, BicharError> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(BicharError::NotSquare);
        }
        let q: Vec<CycScalar> = rows.into_iter().flatten().collect();
        if q.iter().any(|s| s.order() != order || s.nparams() != params.len()) {
            return Err(BicharError::WorkspaceMismatch);
        }
        Ok(Bicharacter {
            n,
            order,
            params,
            q,
        })
    }

    /// The canonical representative of a class: `q_ij` is the full product
    /// for `i < j` and `q_ji = 1`.
    pub fn normalize(key: &ObjectKey, order: u32, params: &[String]) -> Self {
        let n = key.rank();
        let one = CycScalar::one(order, params.len());
        let mut q = vec![one; n * n];
        for i in 0..n {
            q[i * n + i] = key.diag[i].clone();
            for j in i + 1..n {
                q[i * n + j] = key.product(i, j).clone();
            }
        }
        Bicharacter {
            n,
            order,
            params: params.to_vec(),
            q,
        }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn params(&self) -> &[String] {
        &self.params
    }

    #[inline]
    pub fn q(&self, i: usize, j: usize) -> &CycScalar {
        &self.q[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<CycScalar>> {
        self.q.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn one(&self) -> CycScalar {
        CycScalar::one(self.order, self.params.len())
    }

    /// `χ(λ, μ) = ∏ q_ij^{λ_i μ_j}`.
    pub fn eval(&self, lambda: &[i32], mu: &[i32]) -> CycScalar {
        let mut acc = self.one();
        for i in 0..self.n {
            for j in 0..self.n {
                let e = lambda[i] as i64 * mu[j] as i64;
                if e != 0 {
                    acc = &acc * &self.q(i, j).pow(e);
                }
            }
        }
        acc
    }

    pub fn object_key(&self) -> ObjectKey {
        let n = self.n;
        let diag = (0..n).map(|i| self.q(i, i).clone()).collect();
        let mut off = Vec::with_capacity(n * (n - 1) / 2);
        for i in 0..n {
            for j in i + 1..n {
                off.push(self.q(i, j) * self.q(j, i));
            }
        }
        ObjectKey { diag, off }
    }

    /// Canonical representative of this bicharacter's class.
    pub fn normalized(&self) -> Self {
        Self::normalize(&self.object_key(), self.order, &self.params)
    }

    /// `N_ij` with the default scan bound.
    pub fn n_ij(&self, i: usize, j: usize) -> NValue {
        self.n_ij_capped(i, j, DEFAULT_N_CAP)
    }

    /// Least `k ≥ 0` with `(k+1)_{q_ii} = 0` or `q_ii^k q_ij q_ji = 1`.
    ///
    /// Candidates up to `cap` are scanned directly; beyond it the exponent
    /// system is solved exactly, so the result does not depend on `cap`.
    pub fn n_ij_capped(&self, i: usize, j: usize, cap: u32) -> NValue {
        assert_ne!(i, j, "N_ii is undefined");
        let qii = self.q(i, i);
        let prod = self.q(i, j) * self.q(j, i);
        let mut power = prod.clone();
        for k in 0..=cap {
            if q_number_is_zero(k as u64 + 1, qii) || power.is_one() {
                return NValue::Finite(k);
            }
            power = &power * qii;
        }
        let by_order = match qii.mult_order() {
            Order::Finite(o) if o > 1 => Some(o - 1),
            _ => None,
        };
        let by_string = solve_pow_eq(qii, &prod, u64::MAX);
        match (by_order, by_string) {
            (None, None) => NValue::Infinite,
            (a, b) => NValue::Finite(a.unwrap_or(u64::MAX).min(b.unwrap_or(u64::MAX)) as u32),
        }
    }

    /// `s_i` as a matrix acting on columns: `s_i(α_j) = α_j + N_ij α_i`.
    pub fn reflection(&self, i: usize) -> Result<IntMatrix, BicharError> {
        let mut m = IntMatrix::identity(self.n);
        m.set(i, i, -1);
        for j in 0..self.n {
            if j != i {
                match self.n_ij(i, j) {
                    NValue::Finite(k) => m.set(i, j, k as i32),
                    NValue::Infinite => return Err(BicharError::InfiniteType { i, j }),
                }
            }
        }
        Ok(m)
    }

    /// `τ_iχ(λ, μ) = χ(s_i λ, s_i μ)`, computed on this representative.
    pub fn tau(&self, i: usize) -> Result<Self, BicharError> {
        let s = self.reflection(i)?;
        let cols: Vec<Vec<i32>> = (0..self.n).map(|k| s.column(k)).collect();
        let mut q = Vec::with_capacity(self.n * self.n);
        for k in 0..self.n {
            for l in 0..self.n {
                q.push(self.eval(&cols[k], &cols[l]));
            }
        }
        Ok(Bicharacter {
            n: self.n,
            order: self.order,
            params: self.params.clone(),
            q,
        })
    }

    /// Submatrix on `indices` (in the given order); the returned map sends a
    /// new index to the old one.
    pub fn restrict(&self, indices: &[usize]) -> Result<(Self, Vec<usize>), BicharError> {
        if indices.is_empty() || indices.iter().any(|&i| i >= self.n) {
            return Err(BicharError::BadIndexSet);
        }
        let mut q = Vec::with_capacity(indices.len() * indices.len());
        for &a in indices {
            for &b in indices {
                q.push(self.q(a, b).clone());
            }
        }
        let chi = Bicharacter {
            n: indices.len(),
            order: self.order,
            params: self.params.clone(),
            q,
        };
        Ok((chi, indices.to_vec()))
    }

    /// `q'[f(i)][f(j)] = q[i][j]`.
    pub fn relabel(&self, f: &[usize]) -> Self {
        assert_eq!(f.len(), self.n);
        let mut q = self.q.clone();
        for i in 0..self.n {
            for j in 0..self.n {
                q[f[i] * self.n + f[j]] = self.q(i, j).clone();
            }
        }
        Bicharacter {
            n: self.n,
            order: self.order,
            params: self.params.clone(),
            q,
        }
    }

    /// Re-embeds every entry into a larger torsion order.
    pub fn rescale(&self, order: u32) -> Result<Self, crate::exactnum::ExactError> {
        let q = self
            .q
            .iter()
            .map(|s| s.rescale(order))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Bicharacter {
            n: self.n,
            order,
            params: self.params.clone(),
            q,
        })
    }

    /// Integer Cartan matrix `[−N_ij]` with diagonal `2`.
    pub fn cartan_matrix(&self) -> Result<Vec<Vec<i32>>, BicharError> {
        let mut a = vec![vec![2; self.n]; self.n];
        for i in 0..self.n {
            for j in 0..self.n {
                if i != j {
                    a[i][j] = -(self
                        .n_ij(i, j)
                        .finite()
                        .ok_or(BicharError::InfiniteType { i, j })? as i32);
                }
            }
        }
        Ok(a)
    }

    /// `q_ii ≠ 1` and `q_ii^{N_ij} q_ij q_ji = 1` for all `i ≠ j`.
    pub fn is_cartan_type(&self) -> bool {
        for i in 0..self.n {
            if self.q(i, i).is_one() {
                return false;
            }
            for j in 0..self.n {
                if i == j {
                    continue;
                }
                let Some(k) = self.n_ij(i, j).finite() else {
                    return false;
                };
                let lhs = &self.q(i, i).pow(k as i64) * &(self.q(i, j) * self.q(j, i));
                if !lhs.is_one() {
                    return false;
                }
            }
        }
        true
    }

    /// Finite type components when [`Self::is_cartan_type`] holds.
    pub fn cartan_components(&self) -> Option<Vec<Component>> {
        if !self.is_cartan_type() {
            return None;
        }
        classify::classify_cartan(&self.cartan_matrix().ok()?)
    }

    /// Type label such as `B3` or `A2xA1` for finite Cartan type.
    pub fn cartan_label(&self) -> Option<String> {
        self.cartan_components().map(|c| classify::label(&c))
    }

    pub fn dynkin(&self) -> DynkinDiagram {
        self.object_key().dynkin()
    }
}

impl fmt::Display for Bicharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.q.chunks(self.n) {
            let cells: Vec<String> = row.iter().map(|s| s.to_literal(&self.params)).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}
