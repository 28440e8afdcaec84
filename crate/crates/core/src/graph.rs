//! Simple undirected graphs and the independent family verifier.
//!
//! Vertices are `0..n` internally; the text format and every user-facing
//! rendering use `1..=n`.

use thiserror::Error;

use crate::family::{Family, FamilySet};
use crate::seq::{DegreeSequence, SequenceError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("edge {0}-{1} is out of range for {2} vertices")]
    OutOfRange(usize, usize, usize),
    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph is not a cactus")]
    NotCactus,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(u32, u32)>,
    /// Neighbors of `v` are `nbrs[offsets[v]..offsets[v + 1]]`.
    offsets: Vec<u32>,
    nbrs: Vec<u32>,
}

impl Graph {
    /// Builds a graph, rejecting loops, duplicate edges and out-of-range ends.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::OutOfRange(u, v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            list.push((u.min(v) as u32, u.max(v) as u32));
        }
        let mut sorted = list.clone();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0 as usize, w[0].1 as usize));
        }
        Ok(Self::from_trusted(n, list))
    }

    /// Caller guarantees `offsets`/`nbrs` are the adjacency of `edges`.
    pub(crate) fn from_parts(
        n: usize,
        edges: Vec<(u32, u32)>,
        offsets: Vec<u32>,
        nbrs: Vec<u32>,
    ) -> Self {
        debug_assert_eq!(offsets.len(), n + 1);
        debug_assert_eq!(nbrs.len(), 2 * edges.len());
        Graph {
            n,
            edges,
            offsets,
            nbrs,
        }
    }

    /// Caller guarantees the edge list is simple and in range.
    pub(crate) fn from_trusted(n: usize, edges: Vec<(u32, u32)>) -> Self {
        let mut deg = vec![0u32; n];
        for &(u, v) in &edges {
            debug_assert!(u != v && (u as usize) < n && (v as usize) < n);
            deg[u as usize] += 1;
            deg[v as usize] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0u32);
        for &d in &deg {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut fill: Vec<u32> = offsets[..n].to_vec();
        let mut nbrs = vec![0u32; 2 * edges.len()];
        for &(u, v) in &edges {
            nbrs[fill[u as usize] as usize] = v;
            fill[u as usize] += 1;
            nbrs[fill[v as usize] as usize] = u;
            fill[v as usize] += 1;
        }
        Graph {
            n,
            edges,
            offsets,
            nbrs,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, in insertion order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().map(|&(u, v)| (u as usize, v as usize))
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let (a, b) = (self.offsets[v] as usize, self.offsets[v + 1] as usize);
        self.nbrs[a..b].iter().map(|&w| w as usize)
    }

    pub fn degree(&self, v: usize) -> usize {
        (self.offsets[v + 1] - self.offsets[v]) as usize
    }

    pub fn degrees(&self) -> Vec<u32> {
        self.offsets.windows(2).map(|w| w[1] - w[0]).collect()
    }

    /// Component id per vertex, and the number of components.
    pub fn components(&self) -> (Vec<usize>, usize) {
        let mut comp = vec![usize::MAX; self.n];
        let mut count = 0;
        let mut stack = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = count;
            stack.push(s);
            while let Some(v) = stack.pop() {
                for w in self.neighbors(v) {
                    if comp[w] == usize::MAX {
                        comp[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        (comp, count)
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.components().1 == 1
    }

    /// 2-colorability by BFS over every component.
    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![u8::MAX; self.n];
        let mut queue = std::collections::VecDeque::new();
        for s in 0..self.n {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            queue.push_back(s);
            while let Some(v) = queue.pop_front() {
                for w in self.neighbors(v) {
                    if color[w] == u8::MAX {
                        color[w] = color[v] ^ 1;
                        queue.push_back(w);
                    } else if color[w] == color[v] {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Canonical degree sequence of `g`. `perm` maps canonical positions to vertex
/// indices.
pub fn degree_sequence_of(g: &Graph) -> Result<DegreeSequence, GraphError> {
    if let Some(v) = (0..g.n).find(|&v| g.degree(v) == 0) {
        return Err(GraphError::IsolatedVertex(v));
    }
    DegreeSequence::new(g.degrees()).map_err(|e| match e {
        SequenceError::Empty => GraphError::IsolatedVertex(0),
        other => unreachable!("degrees are positive: {other}"),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockKind {
    Bridge,
    /// A 2-connected block with as many edges as vertices: a simple cycle.
    Cycle,
    /// Any other 2-connected block; its presence rules out a cactus.
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub kind: BlockKind,
    /// For cycle blocks, the vertices in cycle order.
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

/// Blocks, cut vertices and the block-cutpoint tree of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
    pub cut_vertices: Vec<usize>,
    /// `(cut vertex, block index)` incidences of the block-cutpoint tree.
    pub bc_edges: Vec<(usize, usize)>,
}

impl BlockDecomposition {
    pub fn bridges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.blocks
            .iter()
            .filter(|b| b.kind == BlockKind::Bridge)
            .map(|b| b.edges[0])
    }

    pub fn cycle_blocks(&self) -> impl Iterator<Item = &[usize]> + '_ {
        self.blocks
            .iter()
            .filter(|b| b.kind == BlockKind::Cycle)
            .map(|b| b.vertices.as_slice())
    }

    pub fn bridge_count(&self) -> usize {
        self.bridges().count()
    }

    pub fn cycle_count(&self) -> usize {
        self.cycle_blocks().count()
    }

    pub fn is_cactus(&self) -> bool {
        self.blocks.iter().all(|b| b.kind != BlockKind::Other)
    }
}

const UNSEEN: u32 = u32::MAX;

/// Biconnected components by an iterative lowlink pass, so deep graphs do not
/// overflow the stack.
pub fn block_decomposition(g: &Graph) -> Result<BlockDecomposition, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    let n = g.n;
    // CSR with edge ids
    let mut offset = vec![0usize; n + 1];
    for v in 0..n {
        offset[v + 1] = offset[v] + g.degree(v);
    }
    let mut fill = offset.clone();
    let mut target = vec![0u32; offset[n]];
    let mut eid = vec![0u32; offset[n]];
    for (e, &(u, v)) in g.edges.iter().enumerate() {
        target[fill[u as usize]] = v;
        eid[fill[u as usize]] = e as u32;
        fill[u as usize] += 1;
        target[fill[v as usize]] = u;
        eid[fill[v as usize]] = e as u32;
        fill[v as usize] += 1;
    }

    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0u32; n];
    let mut time = 0u32;
    let mut edge_stack: Vec<u32> = Vec::new();
    // (vertex, parent edge id, next CSR slot)
    let mut frames: Vec<(u32, u32, usize)> = Vec::new();
    let mut raw_blocks: Vec<Vec<u32>> = Vec::new();

    disc[0] = time;
    low[0] = time;
    time += 1;
    frames.push((0, UNSEEN, offset[0]));
    while let Some(top) = frames.last_mut() {
        let (v, pe, it) = *top;
        let v = v as usize;
        if it < offset[v + 1] {
            top.2 += 1;
            let (w, e) = (target[it] as usize, eid[it]);
            if e == pe {
                continue;
            }
            if disc[w] == UNSEEN {
                edge_stack.push(e);
                disc[w] = time;
                low[w] = time;
                time += 1;
                frames.push((w as u32, e, offset[w]));
            } else if disc[w] < disc[v] {
                edge_stack.push(e);
                low[v] = low[v].min(disc[w]);
            }
        } else {
            frames.pop();
            if let Some(&(u, _, _)) = frames.last() {
                let u = u as usize;
                low[u] = low[u].min(low[v]);
                if low[v] >= disc[u] {
                    let mut block = Vec::new();
                    while let Some(e) = edge_stack.pop() {
                        block.push(e);
                        if e == pe {
                            break;
                        }
                    }
                    raw_blocks.push(block);
                }
            }
        }
    }

    let mut membership = vec![0u32; n];
    let mut stamp = vec![UNSEEN; n];
    let mut blocks = Vec::with_capacity(raw_blocks.len());
    for (bi, raw) in raw_blocks.iter().enumerate() {
        let edges: Vec<(usize, usize)> = raw
            .iter()
            .map(|&e| {
                let (u, v) = g.edges[e as usize];
                (u as usize, v as usize)
            })
            .collect();
        let mut vertices = Vec::new();
        for &(u, v) in &edges {
            for x in [u, v] {
                if stamp[x] != bi as u32 {
                    stamp[x] = bi as u32;
                    vertices.push(x);
                    membership[x] += 1;
                }
            }
        }
        let kind = if edges.len() == 1 {
            BlockKind::Bridge
        } else if edges.len() == vertices.len() {
            BlockKind::Cycle
        } else {
            BlockKind::Other
        };
        if kind == BlockKind::Cycle {
            vertices = cycle_order(&edges, vertices.len());
        }
        blocks.push(Block { kind, vertices, edges });
    }

    let cut_vertices: Vec<usize> = (0..n).filter(|&v| membership[v] >= 2).collect();
    let mut bc_edges = Vec::new();
    for (bi, b) in blocks.iter().enumerate() {
        for &v in &b.vertices {
            if membership[v] >= 2 {
                bc_edges.push((v, bi));
            }
        }
    }
    Ok(BlockDecomposition {
        blocks,
        cut_vertices,
        bc_edges,
    })
}

/// Walks a cycle given as an unordered edge list.
fn cycle_order(edges: &[(usize, usize)], len: usize) -> Vec<usize> {
    let mut nbrs: std::collections::HashMap<usize, [usize; 2]> =
        std::collections::HashMap::with_capacity(len);
    for &(u, v) in edges {
        for (a, b) in [(u, v), (v, u)] {
            nbrs.entry(a)
                .and_modify(|s| s[1] = b)
                .or_insert([b, usize::MAX]);
        }
    }
    let start = edges[0].0;
    let mut order = Vec::with_capacity(len);
    let (mut prev, mut cur) = (usize::MAX, start);
    loop {
        order.push(cur);
        let [a, b] = nbrs[&cur];
        let next = if a != prev { a } else { b };
        prev = cur;
        cur = next;
        if cur == start {
            break;
        }
    }
    order
}

/// Every family `g` belongs to, computed from one structural pass.
pub fn memberships(g: &Graph) -> FamilySet {
    let mut set = FamilySet::EMPTY;
    let n = g.n;
    let m = g.edge_count();
    let (_, comps) = g.components();
    if m + comps == n {
        set.insert(Family::Forest);
    }
    if comps != 1 {
        return set;
    }
    if m + 1 == n {
        set.insert(Family::Tree);
    }
    let bipartite = g.is_bipartite();
    if m == n {
        set.insert(Family::Unicyclic);
        if bipartite {
            set.insert(Family::BiUnicyclic);
        }
    }
    // a cactus has at most 3(n-1)/2 edges
    if 2 * m > 3 * n.saturating_sub(1) {
        return set;
    }
    let dec = block_decomposition(g).expect("connected");
    if !dec.is_cactus() {
        return set;
    }
    let mut fams = vec![Family::Cactus];
    if dec.bridge_count() == 0 {
        fams.push(Family::BridgelessCactus);
        if dec.cycle_blocks().all(|c| c.len() == 3) {
            fams.push(Family::TriangulatedCactus);
        }
    }
    if is_core(n, &dec) {
        fams.push(Family::CoreCactus);
    }
    for f in fams {
        set.insert(f);
        if bipartite {
            match f {
                Family::Cactus => set.insert(Family::Bicactus),
                Family::BridgelessCactus => set.insert(Family::BridgelessBicactus),
                Family::CoreCactus => set.insert(Family::CoreBicactus),
                _ => {}
            }
        }
    }
    set
}

/// After deleting all bridges, at most one component contains a cycle.
fn is_core(n: usize, dec: &BlockDecomposition) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for c in dec.cycle_blocks() {
        let r0 = find(&mut parent, c[0]);
        for &v in &c[1..] {
            let r = find(&mut parent, v);
            parent[r] = r0;
        }
    }
    let mut root = None;
    for c in dec.cycle_blocks() {
        let r = find(&mut parent, c[0]);
        match root {
            None => root = Some(r),
            Some(r0) if r0 != r => return false,
            _ => {}
        }
    }
    true
}

pub fn is_member(family: Family, g: &Graph) -> bool {
    memberships(g).contains(family)
}

/// Checks `m = n + c - 1` on a cactus.
pub fn euler_cycle_identity(g: &Graph) -> Result<bool, GraphError> {
    let dec = block_decomposition(g)?;
    if !dec.is_cactus() {
        return Err(GraphError::NotCactus);
    }
    Ok(g.edge_count() + 1 == g.vertex_count() + dec.cycle_count())
}

/// True iff `g` realizes `d` (as multisets) and belongs to `family`.
pub fn verify_realization(family: Family, d: &DegreeSequence, g: &Graph) -> bool {
    match degree_sequence_of(g) {
        Ok(got) => got.entries() == d.entries() && is_member(family, g),
        Err(_) => false,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EdgeListError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("header announces {expected} edges but {found} were listed")]
    EdgeCount { expected: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Reads the `n m` header followed by `m` lines of 1-based `u v` pairs.
pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let syntax = |line: usize, msg: &str| EdgeListError::Syntax {
        line,
        msg: msg.to_string(),
    };
    let (hl, header) = lines.next().ok_or_else(|| syntax(1, "missing `n m` header"))?;
    let pair = |line: usize, s: &str| -> Result<(usize, usize), EdgeListError> {
        let mut it = s.split_whitespace().map(str::parse::<usize>);
        match (it.next(), it.next(), it.next()) {
            (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
            _ => Err(syntax(line, "expected two non-negative integers")),
        }
    };
    let (n, m) = pair(hl, header)?;
    let mut edges = Vec::with_capacity(m);
    for (line, l) in lines {
        let (u, v) = pair(line, l)?;
        if u == 0 || v == 0 || u > n || v > n {
            return Err(syntax(line, "vertex label out of range 1..=n"));
        }
        edges.push((u - 1, v - 1));
    }
    if edges.len() != m {
        return Err(EdgeListError::EdgeCount {
            expected: m,
            found: edges.len(),
        });
    }
    Ok(Graph::new(n, edges)?)
}

/// Writes the edge-list format with 1-based labels, edges sorted.
pub fn to_edge_list(g: &Graph) -> String {
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    edges.sort_unstable();
    let mut out = format!("{} {}\n", g.vertex_count(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{} {}\n", u + 1, v + 1));
    }
    out
}
