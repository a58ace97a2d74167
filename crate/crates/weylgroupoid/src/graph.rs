//! Edge-labelled graphs as seen by the circuit algorithms.

/// An undirected graph whose edges at each vertex carry distinct labels
/// `0..rank`. Vertex `0` is the base vertex (the identity).
pub trait LabeledGraph: Sync {
    fn rank(&self) -> usize;
    fn vertex_count(&self) -> usize;
    /// The other end of the `i`-labelled edge at `v`, if present.
    fn neighbor(&self, v: usize, i: usize) -> Option<usize>;
    /// Object index of the target of `v`; single-object graphs use 0.
    fn object_of(&self, _v: usize) -> usize {
        0
    }
    fn object_count(&self) -> usize {
        1
    }
}

/// Plain adjacency-table graph, mostly for synthetic inputs.
#[derive(Debug, Clone)]
pub struct AdjGraph {
    rank: usize,
    adj: Vec<Option<usize>>,
    objects: Vec<usize>,
    object_count: usize,
}

impl AdjGraph {
    pub fn new(vertex_count: usize, rank: usize) -> Self {
        AdjGraph {
            rank,
            adj: vec![None; vertex_count * rank],
            objects: vec![0; vertex_count],
            object_count: 1,
        }
    }

    /// Adds the edge `{u, v}` with label `i`.
    pub fn connect(&mut self, u: usize, v: usize, i: usize) {
        self.adj[u * self.rank + i] = Some(v);
        self.adj[v * self.rank + i] = Some(u);
    }

    pub fn set_objects(&mut self, objects: Vec<usize>) {
        self.object_count = objects.iter().max().map_or(1, |m| m + 1);
        self.objects = objects;
    }

    /// Copies any labelled graph.
    pub fn from_graph<G: LabeledGraph + ?Sized>(g: &G) -> Self {
        let (n, r) = (g.vertex_count(), g.rank());
        let mut out = AdjGraph::new(n, r);
        for v in 0..n {
            for i in 0..r {
                out.adj[v * r + i] = g.neighbor(v, i);
            }
        }
        out.objects = (0..n).map(|v| g.object_of(v)).collect();
        out.object_count = g.object_count();
        out
    }
}

impl LabeledGraph for AdjGraph {
    fn rank(&self) -> usize {
        self.rank
    }

    fn vertex_count(&self) -> usize {
        self.objects.len()
    }

    fn neighbor(&self, v: usize, i: usize) -> Option<usize> {
        self.adj[v * self.rank + i]
    }

    fn object_of(&self, v: usize) -> usize {
        self.objects[v]
    }

    fn object_count(&self) -> usize {
        self.object_count
    }
}

/// Checks that the label-preserving map fixed by `0 ↦ 0` is an isomorphism,
/// by walking both graphs breadth-first in lockstep.
pub fn synchronized_isomorphic<A, B>(a: &A, b: &B) -> bool
where
    A: LabeledGraph + ?Sized,
    B: LabeledGraph + ?Sized,
{
    let n = a.vertex_count();
    if n != b.vertex_count() || a.rank() != b.rank() || n == 0 {
        return false;
    }
    let mut fwd = vec![usize::MAX; n];
    let mut back = vec![usize::MAX; n];
    fwd[0] = 0;
    back[0] = 0;
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(v) = queue.pop_front() {
        for i in 0..a.rank() {
            match (a.neighbor(v, i), b.neighbor(fwd[v], i)) {
                (None, None) => {}
                (Some(w), Some(w2)) => {
                    if fwd[w] == usize::MAX {
                        if back[w2] != usize::MAX {
                            return false;
                        }
                        fwd[w] = w2;
                        back[w2] = w;
                        queue.push_back(w);
                    } else if fwd[w] != w2 {
                        return false;
                    }
                }
                _ => return false,
            }
        }
    }
    fwd.iter().all(|&x| x != usize::MAX)
}

/// Blocks of the graph with all `extracted`-labelled edges removed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetPartition {
    pub extracted: usize,
    /// Block index of each vertex.
    pub block_of: Vec<usize>,
    /// Vertices of each block in breadth-first order from its representative.
    pub blocks: Vec<Vec<usize>>,
    /// Least vertex of each block; blocks are ordered by it.
    pub reps: Vec<usize>,
    /// One object per component of the object graph without `extracted`
    /// edges, taken from the block representatives in block order.
    pub object_reps: Vec<usize>,
}

pub fn coset_partition<G: LabeledGraph + ?Sized>(g: &G, extracted: usize) -> CosetPartition {
    let n = g.vertex_count();
    let mut block_of = vec![usize::MAX; n];
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if block_of[start] != usize::MAX {
            continue;
        }
        let b = blocks.len();
        block_of[start] = b;
        let mut members = vec![start];
        let mut k = 0;
        while k < members.len() {
            let v = members[k];
            for i in (0..g.rank()).filter(|&i| i != extracted) {
                if let Some(w) = g.neighbor(v, i) {
                    if block_of[w] == usize::MAX {
                        block_of[w] = b;
                        members.push(w);
                    }
                }
            }
            k += 1;
        }
        blocks.push(members);
    }
    let reps: Vec<usize> = blocks.iter().map(|b| b[0]).collect();
    let mut seen_objects = vec![false; g.object_count()];
    let mut object_reps = Vec::new();
    for block in &blocks {
        let a = g.object_of(block[0]);
        if !seen_objects[a] {
            object_reps.push(a);
            for &v in block {
                seen_objects[g.object_of(v)] = true;
            }
        }
    }
    CosetPartition {
        extracted,
        block_of,
        blocks,
        reps,
        object_reps,
    }
}
