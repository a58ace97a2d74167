//! The Weyl groupoid of a bicharacter: objects, the Cayley graph of morphisms
//! out of the base object, root systems, and the Cartan-scheme axioms.
//!
//! Cartan matrices are stored with the conventional diagonal `c_ii = +2`;
//! only off-diagonal entries `c_ij = −N_ij` enter the checks.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;
use thiserror::Error;

use crate::bichar::{BicharError, Bicharacter, ObjectKey};
use crate::graph::LabeledGraph;
use crate::matrix::{is_positive, IntMatrix};
use crate::par::{self, Exec};

pub const DEFAULT_VERTEX_CAP: usize = 1_000_000;
pub const DEFAULT_OBJECT_CAP: usize = 10_000;
/// Bound on the number of roots per object during propagation.
pub const ROOT_CAP: usize = 50_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupoidError {
    #[error("more than {cap} {what}")]
    CapExceeded { what: &'static str, cap: usize },
    #[error(transparent)]
    Bichar(#[from] BicharError),
    #[error("vertex {vertex} reached with target object {found}, previously {expected}")]
    TargetMismatch {
        vertex: usize,
        expected: usize,
        found: usize,
    },
}

/// Enumeration bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub vertices: usize,
    pub objects: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            vertices: DEFAULT_VERTEX_CAP,
            objects: DEFAULT_OBJECT_CAP,
        }
    }
}

/// Objects reachable from a base bicharacter under the `τ_i`, with their
/// canonical representatives, `τ̄_i` table, and reflections.
#[derive(Debug, Clone)]
pub struct ObjectTable {
    keys: Vec<ObjectKey>,
    reps: Vec<Bicharacter>,
    tau: Vec<Vec<usize>>,
    refl: Vec<Vec<IntMatrix>>,
}

impl ObjectTable {
    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    pub fn keys(&self) -> &[ObjectKey] {
        &self.keys
    }

    pub fn rep(&self, a: usize) -> &Bicharacter {
        &self.reps[a]
    }

    pub fn tau(&self, a: usize, i: usize) -> usize {
        self.tau[a][i]
    }

    pub fn reflection(&self, a: usize, i: usize) -> &IntMatrix {
        &self.refl[a][i]
    }

    pub fn index_of(&self, key: &ObjectKey) -> Option<usize> {
        self.keys.iter().position(|k| k == key)
    }
}

/// Breadth-first closure of the base object under `τ̄_i`.
pub fn objects(chi: &Bicharacter, object_cap: usize) -> Result<ObjectTable, GroupoidError> {
    let n = chi.rank();
    let base = chi.normalized();
    let mut index: HashMap<ObjectKey, usize> = HashMap::new();
    let mut table = ObjectTable {
        keys: vec![base.object_key()],
        reps: vec![base],
        tau: Vec::new(),
        refl: Vec::new(),
    };
    index.insert(table.keys[0].clone(), 0);
    let mut a = 0;
    while a < table.reps.len() {
        let rep = table.reps[a].clone();
        let mut taus = Vec::with_capacity(n);
        let mut refls = Vec::with_capacity(n);
        for i in 0..n {
            refls.push(rep.reflection(i)?);
            let next = rep.tau(i)?.normalized();
            let key = next.object_key();
            let b = match index.get(&key) {
                Some(&b) => b,
                None => {
                    if table.keys.len() >= object_cap {
                        return Err(GroupoidError::CapExceeded {
                            what: "objects",
                            cap: object_cap,
                        });
                    }
                    let b = table.keys.len();
                    index.insert(key.clone(), b);
                    table.keys.push(key);
                    table.reps.push(next);
                    b
                }
            };
            taus.push(b);
        }
        table.tau.push(taus);
        table.refl.push(refls);
        a += 1;
    }
    Ok(table)
}

/// Positive roots of one object.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootSystem {
    pub object: usize,
    pub positive: Vec<Vec<i32>>,
}

/// Per-object Cartan data plus the dihedral orders from rank-2 restrictions.
#[derive(Debug, Clone)]
pub struct CartanScheme {
    pub rank: usize,
    pub tau: Vec<Vec<usize>>,
    pub refl: Vec<Vec<IntMatrix>>,
    /// `m[a][i][j]` for `i ≠ j`, from the rank-2 restriction at `a`.
    pub m: Vec<Vec<Vec<u32>>>,
}

impl CartanScheme {
    pub fn object_count(&self) -> usize {
        self.tau.len()
    }

    /// `C^a` with `c_ii = 2` and `c_ij = −N_ij` read off `s_i^a`.
    pub fn cartan(&self, a: usize) -> IntMatrix {
        let n = self.rank;
        let mut c = IntMatrix::identity(n);
        for i in 0..n {
            for j in 0..n {
                c.set(i, j, if i == j { 2 } else { -self.refl[a][i].get(i, j) });
            }
        }
        c
    }
}

/// The Cayley graph `Γ(χ)`: morphisms out of the base object, joined by the
/// generator edges `w -- s_i w`.
pub struct CayleyGraph {
    rank: usize,
    objects: ObjectTable,
    vertices: Vec<IntMatrix>,
    target: Vec<usize>,
    index: HashMap<IntMatrix, usize>,
    adj: Vec<usize>,
    parent: Vec<(usize, usize)>,
    roots: OnceLock<Result<Vec<Vec<Vec<i32>>>, GroupoidError>>,
    m_table: OnceLock<Result<Vec<Vec<Vec<u32>>>, GroupoidError>>,
}

impl fmt::Debug for CayleyGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CayleyGraph")
            .field("rank", &self.rank)
            .field("objects", &self.objects.len())
            .field("vertices", &self.vertices.len())
            .finish()
    }
}

/// Enumerates `Γ(χ)` breadth-first from the identity at the base object.
pub fn enumerate(chi: &Bicharacter, caps: Caps) -> Result<CayleyGraph, GroupoidError> {
    let objects = objects(chi, caps.objects)?;
    let n = chi.rank();
    let id = IntMatrix::identity(n);
    let mut g = CayleyGraph {
        rank: n,
        objects,
        vertices: vec![id.clone()],
        target: vec![0],
        index: HashMap::from([(id, 0)]),
        adj: Vec::new(),
        parent: vec![(usize::MAX, usize::MAX)],
        roots: OnceLock::new(),
        m_table: OnceLock::new(),
    };
    let mut v = 0;
    while v < g.vertices.len() {
        let b = g.target[v];
        for i in 0..n {
            let next = g.objects.refl[b][i]
                .checked_mul(&g.vertices[v])
                .ok_or(GroupoidError::CapExceeded {
                    what: "matrix entries",
                    cap: i32::MAX as usize,
                })?;
            let tb = g.objects.tau[b][i];
            let w = match g.index.get(&next) {
                Some(&w) => {
                    if g.target[w] != tb {
                        return Err(GroupoidError::TargetMismatch {
                            vertex: w,
                            expected: g.target[w],
                            found: tb,
                        });
                    }
                    w
                }
                None => {
                    if g.vertices.len() >= caps.vertices {
                        return Err(GroupoidError::CapExceeded {
                            what: "vertices",
                            cap: caps.vertices,
                        });
                    }
                    let w = g.vertices.len();
                    g.index.insert(next.clone(), w);
                    g.vertices.push(next);
                    g.target.push(tb);
                    g.parent.push((v, i));
                    w
                }
            };
            g.adj.push(w);
        }
        v += 1;
    }
    Ok(g)
}

/// Closes `±Π` at every object under `β ∈ R(a) ⇒ s_i^a β ∈ R(τ̄_i a)`.
fn propagate_roots(
    tau: &[Vec<usize>],
    refl: &[Vec<IntMatrix>],
    rank: usize,
) -> Result<Vec<HashSet<Vec<i32>>>, GroupoidError> {
    let objs = tau.len();
    let mut sets: Vec<HashSet<Vec<i32>>> = vec![HashSet::new(); objs];
    let mut work: VecDeque<(usize, Vec<i32>)> = VecDeque::new();
    for (a, set) in sets.iter_mut().enumerate() {
        for j in 0..rank {
            for sign in [1, -1] {
                let mut v = vec![0; rank];
                v[j] = sign;
                if set.insert(v.clone()) {
                    work.push_back((a, v));
                }
            }
        }
    }
    while let Some((a, beta)) = work.pop_front() {
        for i in 0..rank {
            let b = tau[a][i];
            let image = refl[a][i].apply(&beta);
            if !sets[b].contains(&image) {
                if sets[b].len() >= ROOT_CAP {
                    return Err(GroupoidError::CapExceeded {
                        what: "roots per object",
                        cap: ROOT_CAP,
                    });
                }
                sets[b].insert(image.clone());
                work.push_back((b, image));
            }
        }
    }
    Ok(sets)
}

fn sorted_positive(set: &HashSet<Vec<i32>>) -> Vec<Vec<i32>> {
    let mut pos: Vec<Vec<i32>> = set.iter().filter(|v| is_positive(v)).cloned().collect();
    pos.sort_by(|a, b| {
        let ha: i32 = a.iter().sum();
        let hb: i32 = b.iter().sum();
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });
    pos
}

impl CayleyGraph {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.vertices.len() * self.rank / 2
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn objects(&self) -> &ObjectTable {
        &self.objects
    }

    pub fn base(&self) -> &Bicharacter {
        self.objects.rep(0)
    }

    pub fn base_key(&self) -> &ObjectKey {
        &self.objects.keys[0]
    }

    pub fn params(&self) -> &[String] {
        self.base().params()
    }

    pub fn matrix(&self, v: usize) -> &IntMatrix {
        &self.vertices[v]
    }

    /// Object index of the target of vertex `v`.
    pub fn target(&self, v: usize) -> usize {
        self.target[v]
    }

    #[inline]
    pub fn step(&self, v: usize, i: usize) -> usize {
        self.adj[v * self.rank + i]
    }

    pub fn find_vertex(&self, m: &IntMatrix) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// A word reaching `v` from the identity, in application order.
    pub fn witness(&self, v: usize) -> Vec<usize> {
        let mut word = Vec::new();
        let mut cur = v;
        while cur != 0 {
            let (p, i) = self.parent[cur];
            word.push(i);
            cur = p;
        }
        word.reverse();
        word
    }

    fn root_sets(&self) -> Result<&Vec<Vec<Vec<i32>>>, GroupoidError> {
        self.roots
            .get_or_init(|| {
                let sets = propagate_roots(&self.objects.tau, &self.objects.refl, self.rank)?;
                Ok(sets.iter().map(sorted_positive).collect())
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    /// `R⁺(a)`, ordered by height.
    pub fn roots(&self, a: usize) -> Result<RootSystem, GroupoidError> {
        Ok(RootSystem {
            object: a,
            positive: self.root_sets()?[a].clone(),
        })
    }

    fn m_values(&self) -> Result<&Vec<Vec<Vec<u32>>>, GroupoidError> {
        self.m_table
            .get_or_init(|| {
                let n = self.rank;
                let mut cache: HashMap<ObjectKey, u32> = HashMap::new();
                let mut out = Vec::with_capacity(self.objects.len());
                for a in 0..self.objects.len() {
                    let mut m = vec![vec![1u32; n]; n];
                    for i in 0..n {
                        for j in i + 1..n {
                            let (sub, _) = self.objects.rep(a).restrict(&[i, j])?;
                            let key = sub.object_key();
                            let val = match cache.get(&key) {
                                Some(&v) => v,
                                None => {
                                    let g2 = enumerate(&sub, Caps::default())?;
                                    let v = g2.roots(0)?.positive.len() as u32;
                                    cache.insert(key, v);
                                    v
                                }
                            };
                            m[i][j] = val;
                            m[j][i] = val;
                        }
                    }
                    out.push(m);
                }
                Ok(out)
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    /// `m^a_ij`: number of positive roots of the rank-2 restriction at `a`.
    pub fn m_ij(&self, a: usize, i: usize, j: usize) -> Result<u32, GroupoidError> {
        assert_ne!(i, j);
        Ok(self.m_values()?[a][i][j])
    }

    pub fn cartan_scheme(&self) -> Result<CartanScheme, GroupoidError> {
        Ok(CartanScheme {
            rank: self.rank,
            tau: self.objects.tau.clone(),
            refl: self.objects.refl.clone(),
            m: self.m_values()?.clone(),
        })
    }

    pub fn coset_partition(&self, i: usize) -> crate::graph::CosetPartition {
        crate::graph::coset_partition(self, i)
    }

    /// Runs the full axiom suite; failures are collected, never raised.
    pub fn verify_axioms(&self, exec: Exec) -> AxiomReport {
        let mut report = match self.cartan_scheme() {
            Ok(s) => verify_scheme(&s, exec),
            Err(e) => AxiomReport {
                checks: 1,
                failures: vec![AxiomFailure {
                    axiom: Axiom::R4,
                    object: None,
                    detail: format!("rank-2 restrictions: {e}"),
                }],
            },
        };
        let v = self.vertex_count();
        report.checks += 3;
        if !v.is_multiple_of(2) {
            report.failures.push(AxiomFailure {
                axiom: Axiom::EvenVertexCount,
                object: None,
                detail: format!("|V| = {v}"),
            });
        }
        let mut endpoints = 0usize;
        let mut involutive = true;
        for u in 0..v {
            for i in 0..self.rank {
                let w = self.step(u, i);
                endpoints += 1;
                if self.step(w, i) != u || w == u {
                    involutive = false;
                }
            }
        }
        if endpoints != 2 * self.edge_count() || !involutive {
            report.failures.push(AxiomFailure {
                axiom: Axiom::Handshake,
                object: None,
                detail: format!("{endpoints} edge ends for {} edges", self.edge_count()),
            });
        }
        if !graph_connected(self) {
            report.failures.push(AxiomFailure {
                axiom: Axiom::Handshake,
                object: None,
                detail: "graph is not connected".into(),
            });
        }
        report
    }

    /// JSON export with canonical ordering.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct ObjectOut {
            id: usize,
            key: String,
            hash: String,
        }
        #[derive(Serialize)]
        struct VertexOut<'a> {
            matrix: &'a IntMatrix,
            object: usize,
        }
        #[derive(Serialize)]
        struct EdgeOut {
            u: usize,
            v: usize,
            label: usize,
        }
        #[derive(Serialize)]
        struct GraphOut<'a> {
            base: String,
            rank: usize,
            objects: Vec<ObjectOut>,
            vertices: Vec<VertexOut<'a>>,
            edges: Vec<EdgeOut>,
        }
        let names = self.params();
        let out = GraphOut {
            base: self.base_key().describe(names),
            rank: self.rank,
            objects: (0..self.object_count())
                .map(|a| ObjectOut {
                    id: a,
                    key: self.objects.keys[a].describe(names),
                    hash: self.objects.keys[a].short_hash(),
                })
                .collect(),
            vertices: (0..self.vertex_count())
                .map(|v| VertexOut {
                    matrix: &self.vertices[v],
                    object: self.target[v],
                })
                .collect(),
            edges: self.edge_list().into_iter().map(|(u, v, label)| EdgeOut { u, v, label: label + 1 }).collect(),
        };
        serde_json::to_string_pretty(&out).expect("graph serializes")
    }

    /// DOT export: vertices labelled by the short hash of their target object.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph cayley {\n");
        for v in 0..self.vertex_count() {
            let h = self.objects.keys[self.target[v]].short_hash();
            s.push_str(&format!("  v{v} [label=\"{h}\"];\n"));
        }
        for (u, v, i) in self.edge_list() {
            s.push_str(&format!("  v{u} -- v{v} [label=\"{}\"];\n", i + 1));
        }
        s.push_str("}\n");
        s
    }

    /// Each edge once as `(u, v, label)` with `u < v`, sorted.
    pub fn edge_list(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.vertex_count() {
            for i in 0..self.rank {
                let v = self.step(u, i);
                if u < v {
                    out.push((u, v, i));
                }
            }
        }
        out
    }
}

impl LabeledGraph for CayleyGraph {
    fn rank(&self) -> usize {
        self.rank
    }

    fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    fn neighbor(&self, v: usize, i: usize) -> Option<usize> {
        Some(self.step(v, i))
    }

    fn object_of(&self, v: usize) -> usize {
        self.target[v]
    }

    fn object_count(&self) -> usize {
        self.objects.len()
    }
}

fn graph_connected<G: LabeledGraph + ?Sized>(g: &G) -> bool {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for i in 0..g.rank() {
            if let Some(w) = g.neighbor(v, i) {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
    }
    count == n
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Axiom {
    /// `τ̄_i² = id`.
    TauInvolution,
    /// `(s_i^a)² = id` and `s_i^{τ̄_i a} = s_i^a`.
    ReflectionInvolution,
    /// `c^{τ̄_i a}_{ij} = c^a_{ij}`.
    CartanConstancy,
    R1,
    R2,
    R3,
    R4,
    /// `s_i(R⁺(a)∖{α_i}) = R⁺(τ̄_i a)∖{α_i}`.
    PreserveMulti,
    RootCountConstant,
    EvenVertexCount,
    Handshake,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomFailure {
    pub axiom: Axiom,
    pub object: Option<usize>,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub checks: usize,
    pub failures: Vec<AxiomFailure>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn has(&self, axiom: Axiom) -> bool {
        self.failures.iter().any(|f| f.axiom == axiom)
    }
}

/// Checks a Cartan scheme with its root systems and braid relations.
pub fn verify_scheme(s: &CartanScheme, exec: Exec) -> AxiomReport {
    let n = s.rank;
    let objs = s.object_count();
    let roots = propagate_roots(&s.tau, &s.refl, n);
    let per_object = par::map_range(exec, objs, |a| check_object(s, a, roots.as_ref().ok()));
    let mut report = AxiomReport::default();
    for (checks, failures) in per_object {
        report.checks += checks;
        report.failures.extend(failures);
    }
    report.checks += 1;
    match &roots {
        Err(e) => report.failures.push(AxiomFailure {
            axiom: Axiom::R1,
            object: None,
            detail: format!("root closure: {e}"),
        }),
        Ok(sets) => {
            let counts: HashSet<usize> = sets.iter().map(|r| r.len()).collect();
            if counts.len() > 1 {
                report.failures.push(AxiomFailure {
                    axiom: Axiom::RootCountConstant,
                    object: None,
                    detail: format!("root counts {counts:?}"),
                });
            }
        }
    }
    report
}

fn check_object(
    s: &CartanScheme,
    a: usize,
    roots: Option<&Vec<HashSet<Vec<i32>>>>,
) -> (usize, Vec<AxiomFailure>) {
    let n = s.rank;
    let mut checks = 0;
    let mut fails = Vec::new();
    let mut fail = |axiom: Axiom, detail: String| {
        fails.push(AxiomFailure {
            axiom,
            object: Some(a),
            detail,
        })
    };
    let id = IntMatrix::identity(n);
    let ca = s.cartan(a);
    for i in 0..n {
        let b = s.tau[a][i];
        checks += 3;
        if s.tau[b][i] != a {
            fail(Axiom::TauInvolution, format!("τ̄_{}² moves the object", i + 1));
        }
        let si = &s.refl[a][i];
        if si.mul(si) != id || s.refl[b][i] != *si {
            fail(Axiom::ReflectionInvolution, format!("s_{}", i + 1));
        }
        let cb = s.cartan(b);
        if (0..n).any(|j| cb.get(i, j) != ca.get(i, j)) {
            fail(Axiom::CartanConstancy, format!("row {} differs at τ̄_{}", i + 1, i + 1));
        }
    }
    // braid relations
    for i in 0..n {
        for j in i + 1..n {
            let m = s.m[a][i][j];
            for (x, y) in [(i, j), (j, i)] {
                checks += 1;
                let mut mat = id.clone();
                let mut obj = a;
                for t in 0..2 * m {
                    let g = if t % 2 == 0 { x } else { y };
                    mat = s.refl[obj][g].mul(&mat);
                    obj = s.tau[obj][g];
                }
                if mat != id || obj != a {
                    fail(
                        Axiom::R4,
                        format!("(s_{} s_{})^{} is not the identity", y + 1, x + 1, m),
                    );
                }
            }
        }
    }
    let Some(sets) = roots else {
        return (checks, fails);
    };
    let r = &sets[a];
    checks += 1;
    let mixed = r.iter().any(|v| !is_positive(v) && !is_positive(&v.iter().map(|x| -x).collect::<Vec<_>>()));
    let asym = r.iter().any(|v| !r.contains(&v.iter().map(|x| -x).collect::<Vec<_>>()));
    if mixed || asym {
        fail(Axiom::R1, "R(a) ≠ R⁺(a) ∪ −R⁺(a)".into());
    }
    for i in 0..n {
        checks += 4;
        let on_axis: Vec<&Vec<i32>> = r
            .iter()
            .filter(|v| v.iter().enumerate().all(|(k, &x)| k == i || x == 0))
            .collect();
        if on_axis.len() != 2 || on_axis.iter().any(|v| v[i].abs() != 1) {
            fail(Axiom::R2, format!("R(a) ∩ ℤα_{} has {} elements", i + 1, on_axis.len()));
        }
        let b = s.tau[a][i];
        let image: HashSet<Vec<i32>> = r.iter().map(|v| s.refl[a][i].apply(v)).collect();
        if image != sets[b] {
            fail(Axiom::R3, format!("s_{}(R(a)) ≠ R(τ̄_{} a)", i + 1, i + 1));
        }
        let mut simple = vec![0; n];
        simple[i] = 1;
        let lhs: HashSet<Vec<i32>> = r
            .iter()
            .filter(|v| is_positive(v) && **v != simple)
            .map(|v| s.refl[a][i].apply(v))
            .collect();
        let rhs: HashSet<Vec<i32>> = sets[b]
            .iter()
            .filter(|v| is_positive(v) && **v != simple)
            .cloned()
            .collect();
        if lhs != rhs {
            fail(Axiom::PreserveMulti, format!("generator {}", i + 1));
        }
        for j in i + 1..n {
            let count = r
                .iter()
                .filter(|v| is_positive(v) && v.iter().enumerate().all(|(k, &x)| k == i || k == j || x == 0))
                .count() as u32;
            if count != s.m[a][i][j] {
                fail(
                    Axiom::R4,
                    format!(
                        "m_{{{},{}}} = {} from the restriction, {} from R⁺(a)",
                        i + 1,
                        j + 1,
                        s.m[a][i][j],
                        count
                    ),
                );
            }
        }
    }
    (checks, fails)
}
