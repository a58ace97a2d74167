//! Hamilton circuits on edge-labelled Cayley graphs.
//!
//! A circuit is stored as a start vertex plus a word `j_1 … j_k` in
//! application order: the walk `w_0 = start`, `w_t = s_{j_t} w_{t−1}` must
//! visit `k = |V|` distinct vertices and return to `w_0`.
//!
//! Circuits are produced three ways: by the coset-splicing engine
//! ([`splice`]), which serves both Coxeter groups and Weyl groupoids, by the
//! Coxeter construction in [`crate::coxeter`], and by [`backtrack_search`].

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bichar::{Bicharacter, ObjectKey};
use crate::coxeter::{self, CoxeterSystem};
use crate::graph::{coset_partition, CosetPartition, LabeledGraph};
use crate::groupoid::{self, Caps, CayleyGraph, GroupoidError};
use crate::matrix::IntMatrix;
use crate::par::{self, Exec};

pub const DEFAULT_BUDGET: u64 = 50_000_000;
/// Node expansions between connectivity checks of the unvisited region.
pub const CONNECTIVITY_INTERVAL: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WalkError {
    #[error("word has length {found}, the graph has {expected} vertices")]
    LengthMismatch { expected: usize, found: usize },
    #[error("no edge labelled {} at step {}", generator + 1, position + 1)]
    BadStep { position: usize, generator: usize },
    #[error("vertex revisited at step {}", position + 1)]
    Revisit { position: usize },
    #[error("walk does not return to its start")]
    NotClosed,
    #[error("circuit base object does not match the graph")]
    BaseMismatch,
    #[error("start matrix is not a vertex of the graph")]
    UnknownStart,
}

/// Walks `word` from `start`; on success returns the `k` visited vertices.
pub fn check_walk<G: LabeledGraph + ?Sized>(
    g: &G,
    start: usize,
    word: &[usize],
) -> Result<Vec<usize>, WalkError> {
    let n = g.vertex_count();
    if word.len() != n {
        return Err(WalkError::LengthMismatch {
            expected: n,
            found: word.len(),
        });
    }
    let mut seen = vec![false; n];
    let mut walk = Vec::with_capacity(n);
    let mut cur = start;
    for (t, &j) in word.iter().enumerate() {
        if seen[cur] {
            return Err(WalkError::Revisit { position: t });
        }
        seen[cur] = true;
        walk.push(cur);
        cur = g
            .neighbor(cur, j)
            .filter(|_| j < g.rank())
            .ok_or(WalkError::BadStep {
                position: t,
                generator: j,
            })?;
    }
    if cur != start {
        return Err(WalkError::NotClosed);
    }
    Ok(walk)
}

/// How a circuit was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Csw,
    Splice,
    Backtrack,
    File,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Csw => "csw",
            Method::Splice => "splice",
            Method::Backtrack => "backtrack",
            Method::File => "file",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CircuitReport {
    pub valid: bool,
    pub length: usize,
    pub special: bool,
    /// 0-based generators `i` for which the circuit is `i`-convenient.
    pub convenient: Vec<usize>,
    pub method: Method,
}

/// Validity plus the special and convenient predicates, read from the walk
/// rotated so that the identity (vertex 0) comes first.
pub fn report<G: LabeledGraph + ?Sized>(g: &G, start: usize, word: &[usize], method: Method) -> CircuitReport {
    let mut r = CircuitReport {
        valid: false,
        length: word.len(),
        special: false,
        convenient: Vec::new(),
        method,
    };
    let Ok(walk) = check_walk(g, start, word) else {
        return r;
    };
    r.valid = true;
    let x = walk.iter().position(|&v| v == 0).unwrap_or(0);
    let k = word.len();
    let letters: Vec<usize> = (0..k).map(|t| word[(x + t) % k]).collect();
    // object reached after step t+1
    let after: Vec<usize> = (0..k).map(|t| g.object_of(walk[(x + t + 1) % k])).collect();
    let (objs, n) = (g.object_count(), g.rank());
    let mut hit = vec![false; objs * n];
    for t in 0..k {
        hit[after[t] * n + letters[t]] = true;
    }
    r.special = hit.iter().all(|&h| h);
    for i in 0..n {
        // positions t+1 with t even / odd
        let convenient = (0..2).any(|parity| (0..k).filter(|t| t % 2 == parity).all(|t| letters[t] == i));
        if convenient && k >= 2 {
            r.convenient.push(i);
        }
    }
    r
}

/// A Hamilton circuit map of a Cayley graph `Γ(χ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircuitMap {
    pub base: ObjectKey,
    /// Start vertex; `None` means the identity.
    pub start: Option<IntMatrix>,
    pub word: Vec<usize>,
}

impl CircuitMap {
    pub fn new(base: ObjectKey, word: Vec<usize>) -> Self {
        CircuitMap {
            base,
            start: None,
            word,
        }
    }

    /// `s_{j1} s_{j2} …` with 1-based indices.
    pub fn to_text(&self) -> String {
        self.word
            .iter()
            .map(|j| format!("s_{}", j + 1))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn start_vertex(g: &CayleyGraph, c: &CircuitMap) -> Result<usize, WalkError> {
    if c.base != *g.base_key() {
        return Err(WalkError::BaseMismatch);
    }
    match &c.start {
        None => Ok(0),
        Some(m) => g.find_vertex(m).ok_or(WalkError::UnknownStart),
    }
}

/// Verifies a circuit on `g`. Length, base, and missing-edge problems are
/// errors; a walk that revisits or fails to close gives `valid = false`.
pub fn verify(g: &CayleyGraph, c: &CircuitMap, method: Method) -> Result<CircuitReport, WalkError> {
    let start = start_vertex(g, c)?;
    match check_walk(g, start, &c.word) {
        Err(e @ (WalkError::LengthMismatch { .. } | WalkError::BadStep { .. })) => Err(e),
        _ => Ok(report(g, start, &c.word, method)),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error("vertex is not on the walk")]
    VertexNotOnWalk,
    #[error(transparent)]
    Walk(#[from] WalkError),
}

/// Rotates (and optionally reverses) a word so the walk starts at the
/// vertex found at position `p`.
pub fn rotate_word(word: &[usize], p: usize, reflect: bool) -> Vec<usize> {
    let k = word.len();
    if reflect {
        (0..k).map(|t| word[(p + k - 1 - t) % k]).collect()
    } else {
        (0..k).map(|t| word[(p + t) % k]).collect()
    }
}

/// Re-bases a valid circuit at `rotate_to`, optionally reversed.
pub fn transform(g: &CayleyGraph, c: &CircuitMap, rotate_to: usize, reflect: bool) -> Result<CircuitMap, TransformError> {
    let start = start_vertex(g, c)?;
    let walk = check_walk(g, start, &c.word)?;
    let p = walk
        .iter()
        .position(|&v| v == rotate_to)
        .ok_or(TransformError::VertexNotOnWalk)?;
    Ok(CircuitMap {
        base: c.base.clone(),
        start: (rotate_to != 0).then(|| g.matrix(rotate_to).clone()),
        word: rotate_word(&c.word, p, reflect),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpliceError {
    #[error("no admissible joint: {covered} of {total} blocks covered")]
    Stuck { covered: usize, total: usize },
    #[error("no usable circuit for the base block")]
    NoBaseCircuit,
    #[error("spliced word failed verification: {0}")]
    Invalid(WalkError),
}

struct Candidate {
    word: Vec<usize>,
    /// Smallest position `p` for each `(object at p, letter p)`.
    first: HashMap<(usize, usize), usize>,
}

fn block_candidates<G: LabeledGraph + ?Sized>(g: &G, rep: usize, words: Vec<Vec<usize>>) -> Vec<Candidate> {
    let mut out = Vec::new();
    for w in words {
        for reflect in [false, true] {
            let word = if reflect { rotate_word(&w, 0, true) } else { w.clone() };
            let mut first = HashMap::new();
            let mut cur = rep;
            let mut ok = true;
            for (p, &l) in word.iter().enumerate() {
                first.entry((g.object_of(cur), l)).or_insert(p);
                match g.neighbor(cur, l) {
                    Some(nx) => cur = nx,
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
            if ok && cur == rep {
                out.push(Candidate { word, first });
            }
        }
    }
    out
}

/// Joins Hamilton circuits of the blocks of `part` into one circuit of `g`.
///
/// `block_words(b)` lists words that traverse block `b` when started at its
/// representative; each is also tried reversed. Starting from the block of
/// vertex 0, the engine scans the current circuit for the first step
/// `c → c'` with letter `r ≠ i` (`i` the extracted generator) such that `s_i c`
/// lies in an uncovered block and the square `c, c', s_i c', s_i c` closes
/// (where `s_i` and `s_r` commute). It then replaces that step by
/// `c → s_i c → … → s_i c' → c'`, where the middle is a rotation of a block
/// circuit that uses the edge `s_i c' → s_i c`. If this first-joint rule
/// leaves blocks uncovered, other joint orders are searched within
/// [`DEFAULT_JOINT_BUDGET`].
pub fn splice<G, F>(g: &G, part: &CosetPartition, block_words: &F) -> Result<Vec<usize>, SpliceError>
where
    G: LabeledGraph + ?Sized,
    F: Fn(usize) -> Vec<Vec<usize>>,
{
    splice_with_budget(g, part, block_words, DEFAULT_JOINT_BUDGET)
}

/// Joint orders tried after the first-joint rule gets stuck.
pub const DEFAULT_JOINT_BUDGET: u64 = 20_000;

#[derive(Clone)]
struct SpliceState {
    letters: Vec<usize>,
    verts: Vec<usize>,
    covered: Vec<bool>,
    ncovered: usize,
}

struct Splicer<'a, G: ?Sized> {
    g: &'a G,
    part: &'a CosetPartition,
    cands: Vec<Vec<Candidate>>,
    stamp: Vec<u32>,
    round: u32,
}

impl<G: LabeledGraph + ?Sized> Splicer<'_, G> {
    /// The joint at step `t` of the current circuit, if admissible: the block
    /// and the replacement for letter `t` and the inserted vertices.
    fn joint(&mut self, s: &SpliceState, t: usize) -> Option<(usize, Vec<usize>, Vec<usize>)> {
        let (g, part, x) = (self.g, self.part, self.part.extracted);
        let r = s.letters[t];
        if r == x {
            return None;
        }
        let (c0, c1) = (s.verts[t], s.verts[(t + 1) % s.verts.len()]);
        let v = g.neighbor(c0, x)?;
        let u = g.neighbor(c1, x)?;
        let b = part.block_of[v];
        if s.covered[b] || part.block_of[u] != b {
            return None;
        }
        // the edge u - v closing the square; its label is r wherever s_x and
        // s_r commute, but any label will do
        let r2 = (0..g.rank()).find(|&k| k != x && g.neighbor(u, k) == Some(v))?;
        let size = part.blocks[b].len();
        let ou = g.object_of(u);
        for cand in &self.cands[b] {
            let Some(&p) = cand.first.get(&(ou, r2)) else {
                continue;
            };
            // walk from v along the rotation that starts u -(r)-> v
            let h = cand.word.len();
            let path_letters: Vec<usize> = (1..h).map(|k| cand.word[(p + k) % h]).collect();
            self.round += 1;
            let round = self.round;
            let mut path = Vec::with_capacity(size);
            let mut w = v;
            let mut ok = true;
            for &l in &path_letters {
                if part.block_of[w] != b || self.stamp[w] == round {
                    ok = false;
                    break;
                }
                self.stamp[w] = round;
                path.push(w);
                match g.neighbor(w, l) {
                    Some(nx) => w = nx,
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
            if !ok || w != u || self.stamp[u] == round || path.len() + 1 != size {
                continue;
            }
            path.push(u);
            let mut new_letters = Vec::with_capacity(h + 1);
            new_letters.push(x);
            new_letters.extend(path_letters);
            new_letters.push(x);
            return Some((b, new_letters, path));
        }
        None
    }

    fn apply(s: &mut SpliceState, t: usize, (b, letters, path): (usize, Vec<usize>, Vec<usize>)) {
        s.letters.splice(t..=t, letters);
        s.verts.splice(t + 1..t + 1, path);
        s.covered[b] = true;
        s.ncovered += 1;
    }

    /// First-joint rule: always splice at the earliest admissible step. A
    /// step that is not admissible never becomes so later, so the scan resumes
    /// where the last joint was made.
    fn greedy(&mut self, mut s: SpliceState) -> Result<SpliceState, usize> {
        let mut t = 0;
        while s.ncovered < s.covered.len() {
            loop {
                if t >= s.letters.len() {
                    return Err(s.ncovered);
                }
                if let Some(j) = self.joint(&s, t) {
                    Self::apply(&mut s, t, j);
                    break;
                }
                t += 1;
            }
        }
        Ok(s)
    }

    /// Depth-first search over joint orders.
    fn search(&mut self, s: &SpliceState, budget: &mut u64, best: &mut usize) -> Option<SpliceState> {
        *best = (*best).max(s.ncovered);
        if s.ncovered == s.covered.len() {
            return Some(s.clone());
        }
        let mut tried = vec![false; s.covered.len()];
        for t in 0..s.letters.len() {
            if *budget == 0 {
                return None;
            }
            let Some(j) = self.joint(s, t) else {
                continue;
            };
            // one joint per block and level: other positions into the same
            // block are reached through the deeper levels' alternatives
            if std::mem::replace(&mut tried[j.0], true) {
                continue;
            }
            *budget -= 1;
            let mut next = s.clone();
            Self::apply(&mut next, t, j);
            if let Some(done) = self.search(&next, budget, best) {
                return Some(done);
            }
        }
        None
    }
}

/// As [`splice`]; when the first-joint rule leaves blocks uncovered, up to
/// `joint_budget` alternative joint orders are searched.
pub fn splice_with_budget<G, F>(g: &G, part: &CosetPartition, block_words: &F, joint_budget: u64) -> Result<Vec<usize>, SpliceError>
where
    G: LabeledGraph + ?Sized,
    F: Fn(usize) -> Vec<Vec<usize>>,
{
    let nblocks = part.blocks.len();
    let cands: Vec<Vec<Candidate>> = (0..nblocks)
        .map(|b| block_candidates(g, part.reps[b], block_words(b)))
        .collect();
    let base_block = part.block_of[0];
    let base = cands[base_block]
        .first()
        .map(|c| c.word.clone())
        .ok_or(SpliceError::NoBaseCircuit)?;
    let mut verts = Vec::with_capacity(g.vertex_count());
    let mut cur = 0;
    for &l in &base {
        verts.push(cur);
        cur = g.neighbor(cur, l).ok_or(SpliceError::NoBaseCircuit)?;
    }
    let mut covered = vec![false; nblocks];
    covered[base_block] = true;
    let start = SpliceState {
        letters: base,
        verts,
        covered,
        ncovered: 1,
    };
    let mut sp = Splicer {
        g,
        part,
        cands,
        stamp: vec![0; g.vertex_count()],
        round: 0,
    };
    let done = match sp.greedy(start.clone()) {
        Ok(s) => s,
        Err(mut best) => {
            let mut budget = joint_budget;
            sp.search(&start, &mut budget, &mut best).ok_or(SpliceError::Stuck {
                covered: best,
                total: nblocks,
            })?
        }
    };
    check_walk(g, 0, &done.letters).map_err(SpliceError::Invalid)?;
    Ok(done.letters)
}

/// Constraint on circuits accepted by the search and the pipeline.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Require {
    #[default]
    None,
    Special,
    /// 0-based generator.
    Convenient(usize),
    SpecialConvenient(usize),
}

impl Require {
    pub fn accepts(&self, r: &CircuitReport) -> bool {
        r.valid
            && match self {
                Require::None => true,
                Require::Special => r.special,
                Require::Convenient(i) => r.convenient.contains(i),
                Require::SpecialConvenient(i) => r.special && r.convenient.contains(i),
            }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(Vec<usize>),
    /// The search was complete: no circuit meeting the requirement exists.
    Exhausted,
    BudgetExceeded,
}

/// Depth-first search for a Hamilton circuit through vertex 0.
///
/// Generators are tried in ascending order, so sequential runs return the
/// lexicographically least accepted word. With [`Exec::Parallel`] the first
/// step is split across workers, each with the full `budget`, and the least
/// successful branch wins.
pub fn backtrack_search<G: LabeledGraph + ?Sized>(g: &G, require: Require, budget: u64, exec: Exec) -> SearchOutcome {
    let n = g.vertex_count();
    if n == 0 {
        return SearchOutcome::Exhausted;
    }
    let parities: Vec<Option<(usize, usize)>> = match require {
        Require::Convenient(i) | Require::SpecialConvenient(i) => vec![Some((i, 1)), Some((i, 0))],
        _ => vec![None],
    };
    let mut branches = Vec::new();
    for p in &parities {
        for first in 0..g.rank() {
            branches.push((*p, first));
        }
    }
    let results = if exec.is_parallel() {
        par::map(exec, &branches, |&(p, first)| {
            Search::new(g, require, p, budget).run(Some(first))
        })
    } else {
        let mut remaining = budget;
        let mut out = Vec::new();
        for &(p, first) in &branches {
            let mut s = Search::new(g, require, p, remaining);
            let res = s.run(Some(first));
            remaining = remaining.saturating_sub(s.expansions);
            let found = matches!(res, SearchOutcome::Found(_));
            out.push(res);
            if found {
                break;
            }
        }
        out
    };
    let mut exceeded = false;
    for r in results {
        match r {
            SearchOutcome::Found(w) => return SearchOutcome::Found(w),
            SearchOutcome::BudgetExceeded => exceeded = true,
            SearchOutcome::Exhausted => {}
        }
    }
    if exceeded {
        SearchOutcome::BudgetExceeded
    } else {
        SearchOutcome::Exhausted
    }
}

struct Search<'a, G: ?Sized> {
    g: &'a G,
    require: Require,
    /// `(generator, parity)`: steps `t` (1-based) with `t % 2 == parity` use it.
    forced: Option<(usize, usize)>,
    budget: u64,
    expansions: u64,
    visited: Vec<bool>,
    mark: Vec<u32>,
    epoch: u32,
}

impl<'a, G: LabeledGraph + ?Sized> Search<'a, G> {
    fn new(g: &'a G, require: Require, forced: Option<(usize, usize)>, budget: u64) -> Self {
        let n = g.vertex_count();
        Search {
            g,
            require,
            forced,
            budget,
            expansions: 0,
            visited: vec![false; n],
            mark: vec![0; n],
            epoch: 0,
        }
    }

    fn allowed(&self, step: usize, label: usize) -> bool {
        match self.forced {
            Some((i, parity)) => (step % 2 == parity) == (label == i),
            None => true,
        }
    }

    fn available(&self, x: usize, head: usize) -> usize {
        (0..self.g.rank())
            .filter_map(|i| self.g.neighbor(x, i))
            .filter(|&y| !self.visited[y] || y == head || y == 0)
            .count()
    }

    /// Unvisited vertices must form one component touching both ends.
    fn connected(&mut self, head: usize, remaining: usize) -> bool {
        if remaining == 0 {
            return true;
        }
        let g = self.g;
        let Some(seed) = (0..g.rank()).filter_map(|i| g.neighbor(head, i)).find(|&y| !self.visited[y]) else {
            return false;
        };
        self.epoch += 1;
        let epoch = self.epoch;
        self.mark[seed] = epoch;
        let mut stack = vec![seed];
        let mut count = 1;
        let mut touches_start = false;
        while let Some(v) = stack.pop() {
            for i in 0..g.rank() {
                if let Some(w) = g.neighbor(v, i) {
                    if w == 0 {
                        touches_start = true;
                    }
                    if !self.visited[w] && self.mark[w] != epoch {
                        self.mark[w] = epoch;
                        count += 1;
                        stack.push(w);
                    }
                }
            }
        }
        count == remaining && touches_start
    }

    fn run(&mut self, first: Option<usize>) -> SearchOutcome {
        let g = self.g;
        let n = g.vertex_count();
        let rank = g.rank();
        // frames: (vertex, next label to try)
        let mut path: Vec<usize> = vec![0];
        let mut word: Vec<usize> = Vec::with_capacity(n);
        let mut next_label: Vec<usize> = vec![first.unwrap_or(0)];
        self.visited[0] = true;
        let mut exceeded = false;
        while let Some(&head) = path.last() {
            let depth = path.len() - 1;
            let lbl = *next_label.last().unwrap();
            if depth == 0 && first.is_some() && lbl > first.unwrap() {
                break;
            }
            if lbl >= rank {
                self.visited[head] = false;
                path.pop();
                next_label.pop();
                if !word.is_empty() {
                    word.pop();
                }
                continue;
            }
            *next_label.last_mut().unwrap() += 1;
            let step = depth + 1;
            if !self.allowed(step, lbl) {
                continue;
            }
            let Some(w) = g.neighbor(head, lbl) else {
                continue;
            };
            if path.len() == n {
                if w == 0 && (n > 2 || n == 2 && lbl == word[0] || n == 1) {
                    word.push(lbl);
                    let accepted = match self.require {
                        Require::Special | Require::SpecialConvenient(_) => report(g, 0, &word, Method::Backtrack).special,
                        _ => true,
                    };
                    if accepted {
                        return SearchOutcome::Found(word);
                    }
                    word.pop();
                }
                continue;
            }
            if self.visited[w] {
                continue;
            }
            if self.expansions >= self.budget {
                exceeded = true;
                break;
            }
            self.expansions += 1;
            self.visited[w] = true;
            // the old head becomes interior: its unvisited neighbours need two free sides
            let dead = (0..rank)
                .filter_map(|i| g.neighbor(head, i))
                .any(|y| !self.visited[y] && self.available(y, w) < 2)
                || (path.len() + 1 < n && self.available(0, w) < 1);
            let disconnected = !dead
                && path.len().is_multiple_of(CONNECTIVITY_INTERVAL)
                && !self.connected(w, n - path.len() - 1);
            if dead || disconnected {
                self.visited[w] = false;
                continue;
            }
            path.push(w);
            word.push(lbl);
            next_label.push(0);
        }
        for &v in &path {
            self.visited[v] = false;
        }
        if exceeded {
            SearchOutcome::BudgetExceeded
        } else {
            SearchOutcome::Exhausted
        }
    }
}

/// Which construction `find_circuit` may use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    #[default]
    Auto,
    Csw,
    Splice,
    Backtrack,
}

#[derive(Debug, Clone, Copy)]
pub struct FindOptions {
    pub strategy: Strategy,
    pub require: Require,
    pub budget: u64,
    /// Budget for the special sub-circuits requested while splicing.
    pub sub_budget: u64,
    pub exec: Exec,
    pub caps: Caps,
}

impl Default for FindOptions {
    fn default() -> Self {
        FindOptions {
            strategy: Strategy::Auto,
            require: Require::None,
            budget: DEFAULT_BUDGET,
            sub_budget: 2_000_000,
            exec: Exec::Parallel,
            caps: Caps::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FindError {
    #[error(transparent)]
    Groupoid(#[from] GroupoidError),
    #[error("no circuit found: {}", .0.join("; "))]
    NotFound(Vec<String>),
}

/// Builds `Γ(χ)` and a circuit on it.
pub fn find_circuit(chi: &Bicharacter, opts: &FindOptions) -> Result<(CayleyGraph, CircuitMap, CircuitReport), FindError> {
    let g = groupoid::enumerate(chi, opts.caps)?;
    let (word, report) = find_on_graph(&g, opts, &mut HashMap::new())?;
    let c = CircuitMap::new(g.base_key().clone(), word);
    Ok((g, c, report))
}

type Memo = HashMap<(ObjectKey, bool), Option<Vec<usize>>>;

/// Coxeter matrix of a groupoid whose dihedral orders agree at all objects.
fn constant_coxeter(g: &CayleyGraph) -> Option<CoxeterSystem> {
    let n = g.rank();
    let mut m = vec![vec![1u32; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let v = g.m_ij(0, i, j).ok()?;
            if (1..g.object_count()).any(|a| g.m_ij(a, i, j).ok() != Some(v)) {
                return None;
            }
            m[i][j] = v;
            m[j][i] = v;
        }
    }
    CoxeterSystem::new(m).ok()
}

/// Extraction generators `i` for which some `j` makes every other generator
/// commute with `i` at every object.
pub fn extraction_candidates(g: &CayleyGraph) -> Vec<(usize, Option<usize>)> {
    let n = g.rank();
    let keys = g.objects().keys();
    let mut out = Vec::new();
    for i in 0..n {
        let linked: std::collections::BTreeSet<usize> = (0..n)
            .filter(|&k| k != i && keys.iter().any(|key| !key.product(i, k).is_one()))
            .collect();
        if linked.len() <= 1 {
            out.push((i, linked.first().copied()));
        }
    }
    out
}

fn find_on_graph(g: &CayleyGraph, opts: &FindOptions, memo: &mut Memo) -> Result<(Vec<usize>, CircuitReport), FindError> {
    let mut notes = Vec::new();
    let accept = |word: &[usize], method: Method| {
        let r = report(g, 0, word, method);
        opts.require.accepts(&r).then_some(r)
    };
    let stage = |s: Strategy| opts.strategy == Strategy::Auto || opts.strategy == s;

    if stage(Strategy::Csw) {
        match constant_coxeter(g) {
            Some(cs) if cs.group_order() == Some(g.vertex_count() as u128) => {
                match coxeter::csw_on_graph(&cs, g) {
                    Ok(word) => match accept(&word, Method::Csw) {
                        Some(r) => return Ok((word, r)),
                        None => notes.push("csw: circuit does not meet the requirement".into()),
                    },
                    Err(e) => notes.push(format!("csw: {e}")),
                }
            }
            _ => notes.push("csw: dihedral orders are not those of a Coxeter group of this size".into()),
        }
    }

    if stage(Strategy::Splice) && g.rank() >= 2 {
        let cands = extraction_candidates(g);
        if cands.is_empty() {
            notes.push("splice: no extraction generator".into());
        }
        for (i, _) in cands {
            match splice_groupoid(g, i, opts, memo) {
                Ok(word) => match accept(&word, Method::Splice) {
                    Some(r) => return Ok((word, r)),
                    None => notes.push(format!("splice at {}: requirement not met", i + 1)),
                },
                Err(e) => notes.push(format!("splice at {}: {e}", i + 1)),
            }
        }
    }

    if stage(Strategy::Backtrack) {
        match backtrack_search(g, opts.require, opts.budget, opts.exec) {
            SearchOutcome::Found(word) => {
                let r = report(g, 0, &word, Method::Backtrack);
                return Ok((word, r));
            }
            SearchOutcome::Exhausted => notes.push("backtrack: exhausted".into()),
            SearchOutcome::BudgetExceeded => notes.push("backtrack: budget exceeded".into()),
        }
    }
    Err(FindError::NotFound(notes))
}

/// Splices circuits of the blocks of `g` without `i`-edges, obtaining each
/// block circuit recursively from the restricted bicharacter at the block
/// representative. Special block circuits are preferred.
pub fn splice_groupoid(g: &CayleyGraph, i: usize, opts: &FindOptions, memo: &mut Memo) -> Result<Vec<usize>, FindError> {
    let part = coset_partition(g, i);
    let keep: Vec<usize> = (0..g.rank()).filter(|&k| k != i).collect();
    let mut words: Vec<Vec<Vec<usize>>> = Vec::with_capacity(part.blocks.len());
    for &rep in &part.reps {
        let (sub, map) = g
            .objects()
            .rep(g.target(rep))
            .restrict(&keep)
            .map_err(GroupoidError::from)?;
        let mut found = Vec::new();
        for special in [true, false] {
            if let Some(w) = sub_circuit(&sub, special, opts, memo)? {
                let global: Vec<usize> = w.iter().map(|&k| map[k]).collect();
                if !found.contains(&global) {
                    found.push(global);
                }
            }
        }
        words.push(found);
    }
    splice(g, &part, &|b| words[b].clone()).map_err(|e| FindError::NotFound(vec![e.to_string()]))
}

fn sub_circuit(sub: &Bicharacter, special: bool, opts: &FindOptions, memo: &mut Memo) -> Result<Option<Vec<usize>>, FindError> {
    let key = (sub.object_key(), special);
    if let Some(w) = memo.get(&key) {
        return Ok(w.clone());
    }
    let sg = groupoid::enumerate(sub, opts.caps)?;
    let sub_opts = FindOptions {
        strategy: Strategy::Auto,
        require: if special { Require::Special } else { Require::None },
        budget: opts.sub_budget,
        ..*opts
    };
    let result = find_on_graph(&sg, &sub_opts, memo).ok().map(|(w, _)| w);
    memo.insert(key, result.clone());
    Ok(result)
}

/// Circuit file contents: 1-based word in application order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CircuitFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub entry: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub object: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub start: Option<Vec<Vec<i32>>>,
    pub word: Vec<usize>,
    pub order: String,
}

impl CircuitFile {
    pub fn from_circuit(entry: Option<String>, g: &CayleyGraph, c: &CircuitMap) -> Self {
        CircuitFile {
            entry,
            object: Some(g.base_key().describe(g.params())),
            start: c.start.as_ref().map(|m| m.rows()),
            word: c.word.iter().map(|j| j + 1).collect(),
            order: "application".into(),
        }
    }

    /// Converts to 0-based form for `g`; unknown orders and zero indices are
    /// rejected.
    pub fn to_circuit(&self, g: &CayleyGraph) -> Result<CircuitMap, String> {
        if self.order != "application" {
            return Err(format!("unsupported word order `{}`", self.order));
        }
        let word = self
            .word
            .iter()
            .map(|&j| j.checked_sub(1).ok_or_else(|| "generator indices are 1-based".to_string()))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(CircuitMap {
            base: g.base_key().clone(),
            start: self.start.as_ref().map(|rows| IntMatrix::from_rows(rows)),
            word,
        })
    }
}
