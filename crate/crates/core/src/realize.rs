//! Linear-time witness construction.
//!
//! Every schedule peels the sequence with four attachment steps (leaf,
//! triangle, 4-cycle, two-edge correction path) and finishes by closing one
//! cycle through the vertices whose residual degree is 2. Residual degrees
//! live in lazily-cleaned buckets, so each selector is amortized O(1) and a
//! whole run is O(n + max degree).

use thiserror::Error;

use crate::decide::{decide, Verdict};
use crate::family::Family;
use crate::graph::Graph;
use crate::seq::DegreeSequence;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StepError {
    #[error("no vertex of residual degree 1 is left")]
    NoLeaf,
    #[error("needed {needed} vertices of residual degree 2, found {available}")]
    NotEnoughDegreeTwo { needed: usize, available: usize },
    #[error("target {vertex} has residual degree {residual}, needs at least {needed}")]
    TargetTooSmall {
        vertex: usize,
        residual: u32,
        needed: u32,
    },
    #[error("cycle of length {0} is not simple")]
    CycleTooShort(usize),
    #[error("vertex {vertex} has residual degree {residual}, a cycle needs exactly 2")]
    NotOnCycle { vertex: usize, residual: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RealizeError {
    #[error("sequence is not realizable: {}", .0.reason)]
    NotRealizable(Box<Verdict>),
    #[error("internal invariant breached: {0}")]
    Internal(String),
}

impl From<StepError> for RealizeError {
    fn from(e: StepError) -> Self {
        RealizeError::Internal(e.to_string())
    }
}

/// Residual degrees bucketed by value, plus the edges emitted so far.
///
/// Vertices are canonical positions of the sequence (`0` has the largest
/// degree). A bucket entry is live iff the vertex's residual still equals
/// the bucket index; residuals only decrease, so each vertex has at most one
/// live entry.
#[derive(Debug, Clone)]
pub struct RealizationState {
    residual: Vec<u32>,
    buckets: Vec<Vec<u32>>,
    count: Vec<usize>,
    edges: Vec<(u32, u32)>,
    remaining: usize,
    volume: u64,
    mult_odd: usize,
    max_cursor: usize,
    odd_cursor: usize,
    corrections: usize,
    steps: usize,
}

impl RealizationState {
    pub fn new(d: &DegreeSequence) -> Self {
        let top = d.max_degree() as usize;
        let mut buckets = vec![Vec::new(); top + 1];
        let mut count = vec![0usize; top + 1];
        // reverse push: the lowest canonical index sits on top
        for (v, &deg) in d.entries().iter().enumerate().rev() {
            buckets[deg as usize].push(v as u32);
            count[deg as usize] += 1;
        }
        let mult_odd = d.entries().iter().filter(|&&x| x > 1 && x % 2 == 1).count();
        RealizationState {
            residual: d.entries().to_vec(),
            buckets,
            count,
            edges: Vec::with_capacity(d.volume() as usize / 2),
            remaining: d.len(),
            volume: d.volume(),
            mult_odd,
            max_cursor: top,
            odd_cursor: 3,
            corrections: 0,
            steps: 0,
        }
    }

    pub fn residual(&self, v: usize) -> u32 {
        self.residual[v]
    }

    /// Vertices with positive residual degree.
    pub fn remaining(&self) -> usize {
        self.remaining
    }

    pub fn volume(&self) -> u64 {
        self.volume
    }

    pub fn count_with(&self, residual: u32) -> usize {
        self.count.get(residual as usize).copied().unwrap_or(0)
    }

    pub fn mult1(&self) -> usize {
        self.count_with(1)
    }

    pub fn mult_odd(&self) -> usize {
        self.mult_odd
    }

    pub fn corrections(&self) -> usize {
        self.corrections
    }

    pub fn steps(&self) -> usize {
        self.steps
    }

    /// Emitted edges as canonical-position pairs.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().map(|&(u, v)| (u as usize, v as usize))
    }

    /// Residual degrees of the remaining vertices, non-increasing.
    pub fn residual_sequence(&self) -> Vec<u32> {
        let mut r: Vec<u32> = self.residual.iter().copied().filter(|&x| x > 0).collect();
        r.sort_unstable_by(|a, b| b.cmp(a));
        r
    }

    fn set(&mut self, v: usize, new: u32) {
        let old = self.residual[v];
        debug_assert!(new < old);
        self.count[old as usize] -= 1;
        if old > 1 && old % 2 == 1 {
            self.mult_odd -= 1;
        }
        self.volume -= u64::from(old - new);
        self.residual[v] = new;
        if new == 0 {
            self.remaining -= 1;
            return;
        }
        self.count[new as usize] += 1;
        self.buckets[new as usize].push(v as u32);
        if new > 1 && new % 2 == 1 {
            self.mult_odd += 1;
            self.odd_cursor = self.odd_cursor.min(new as usize);
        }
    }

    fn peek(&mut self, k: usize) -> Option<usize> {
        let bucket = self.buckets.get_mut(k)?;
        while let Some(&v) = bucket.last() {
            if self.residual[v as usize] as usize == k {
                return Some(v as usize);
            }
            bucket.pop();
        }
        None
    }

    fn take(&mut self, k: usize) -> Option<usize> {
        let v = self.peek(k)?;
        self.buckets[k].pop();
        Some(v)
    }

    /// A vertex with the largest residual degree.
    pub fn max_vertex(&mut self) -> Option<usize> {
        while self.max_cursor > 0 {
            if let Some(v) = self.peek(self.max_cursor) {
                return Some(v);
            }
            self.max_cursor -= 1;
        }
        None
    }

    /// A vertex whose residual is the smallest odd value above 1.
    pub fn smallest_odd_vertex(&mut self) -> Option<usize> {
        if self.mult_odd == 0 {
            return None;
        }
        while self.odd_cursor < self.buckets.len() {
            if let Some(v) = self.peek(self.odd_cursor) {
                return Some(v);
            }
            self.odd_cursor += 2;
        }
        None
    }

    fn emit(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        self.edges.push((u.min(v) as u32, u.max(v) as u32));
    }

    fn require_target(&self, target: usize, needed: u32) -> Result<(), StepError> {
        let residual = self.residual[target];
        if residual < needed {
            return Err(StepError::TargetTooSmall {
                vertex: target,
                residual,
                needed,
            });
        }
        Ok(())
    }

    fn require_twos(&self, needed: usize) -> Result<(), StepError> {
        let available = self.count_with(2);
        if available < needed {
            return Err(StepError::NotEnoughDegreeTwo { needed, available });
        }
        Ok(())
    }

    /// Joins some residual-1 vertex to `target` and retires it.
    pub fn attach_leaf(&mut self, target: usize) -> Result<(), StepError> {
        self.require_target(target, 2)?;
        let leaf = self.take(1).ok_or(StepError::NoLeaf)?;
        self.emit(target, leaf);
        self.set(leaf, 0);
        self.set(target, self.residual[target] - 1);
        self.steps += 1;
        Ok(())
    }

    /// Closes a triangle through `target` and two residual-2 vertices.
    pub fn attach_triangle(&mut self, target: usize) -> Result<(), StepError> {
        self.attach_cycle_at(target, 2)
    }

    /// Closes a 4-cycle through `target` and three residual-2 vertices.
    pub fn attach_c4(&mut self, target: usize) -> Result<(), StepError> {
        self.attach_cycle_at(target, 3)
    }

    fn attach_cycle_at(&mut self, target: usize, others: usize) -> Result<(), StepError> {
        self.require_target(target, 3)?;
        self.require_twos(others)?;
        let mut prev = target;
        for _ in 0..others {
            let w = self.take(2).expect("counted");
            self.emit(prev, w);
            self.set(w, 0);
            prev = w;
        }
        self.emit(prev, target);
        self.set(target, self.residual[target] - 2);
        self.steps += 1;
        Ok(())
    }

    /// Hangs a two-edge path `target - w - leaf` off `target`, where `w` has
    /// residual 2 and `leaf` residual 1. Both edges are bridges.
    pub fn attach_correction_path(&mut self, target: usize) -> Result<(), StepError> {
        self.require_target(target, 3)?;
        self.require_twos(1)?;
        if self.count_with(1) == 0 {
            return Err(StepError::NoLeaf);
        }
        let w = self.take(2).expect("counted");
        let leaf = self.take(1).expect("counted");
        self.emit(target, w);
        self.emit(w, leaf);
        self.set(w, 0);
        self.set(leaf, 0);
        self.set(target, self.residual[target] - 1);
        self.corrections += 1;
        self.steps += 1;
        Ok(())
    }

    /// Emits one cycle through `vs` in the given order.
    pub fn close_cycle(&mut self, vs: &[usize]) -> Result<(), StepError> {
        if vs.len() < 3 {
            return Err(StepError::CycleTooShort(vs.len()));
        }
        if let Some(&v) = vs.iter().find(|&&v| self.residual[v] != 2) {
            return Err(StepError::NotOnCycle {
                vertex: v,
                residual: self.residual[v],
            });
        }
        for i in 0..vs.len() {
            self.emit(vs[i], vs[(i + 1) % vs.len()]);
        }
        for &v in vs {
            self.set(v, 0);
        }
        self.steps += 1;
        Ok(())
    }

    /// Closes the final cycle through every remaining vertex; returns its length.
    fn close_remaining(&mut self) -> Result<usize, RealizeError> {
        if self.count_with(2) != self.remaining {
            return Err(RealizeError::Internal(format!(
                "final cycle expected only residual-2 vertices, residual is {:?}",
                self.residual_sequence()
            )));
        }
        let residual = &self.residual;
        let mut vs: Vec<usize> = self.buckets[2]
            .iter()
            .map(|&v| v as usize)
            .filter(|&v| residual[v] == 2)
            .collect();
        vs.sort_unstable();
        self.close_cycle(&vs)?;
        Ok(vs.len())
    }

    fn edge_count_now(&self) -> u64 {
        self.volume / 2
    }

    fn internal(&self, what: &str) -> RealizeError {
        RealizeError::Internal(format!("{what}; residual {:?}", self.residual_sequence()))
    }

    // -- schedules ---------------------------------------------------------

    /// Volume `2n`, third degree >= 2: leaves onto high vertices, then one
    /// cycle through everything else (a closed caterpillar).
    fn run_unicyclic(&mut self) -> Result<(), RealizeError> {
        while self.mult1() > 0 {
            let t = self.max_vertex().ok_or_else(|| self.internal("no target"))?;
            self.attach_leaf(t)?;
        }
        self.close_remaining()?;
        Ok(())
    }

    /// Volume `2n`, fourth degree >= 2, not an odd all-2 sequence.
    fn run_bi_unicyclic(&mut self) -> Result<(), RealizeError> {
        while self.mult1() > 0 {
            let t = self.max_vertex().ok_or_else(|| self.internal("no target"))?;
            if self.mult1() == 1 && self.remaining.is_multiple_of(2) {
                // (3, 2^(k-2), 1) with k even: a leaf on the 3 would leave an
                // odd cycle, so route it through a degree-2 vertex.
                self.attach_correction_path(t)?;
            } else {
                self.attach_leaf(t)?;
            }
        }
        let len = self.close_remaining()?;
        if len % 2 == 1 {
            return Err(RealizeError::Internal(format!("odd final cycle of length {len}")));
        }
        Ok(())
    }

    /// All residuals even: triangles (or 4-cycles) onto the largest vertex
    /// until only 2s remain, then one closing cycle.
    fn run_bridgeless(&mut self, bipartite: bool) -> Result<usize, RealizeError> {
        while self.count_with(2) < self.remaining {
            let t = self.max_vertex().ok_or_else(|| self.internal("no target"))?;
            if bipartite {
                self.attach_c4(t)?;
            } else {
                self.attach_triangle(t)?;
            }
        }
        let len = self.close_remaining()?;
        if bipartite && len % 2 == 1 {
            return Err(RealizeError::Internal(format!("odd final cycle of length {len}")));
        }
        Ok(len)
    }

    /// Volume above `2n` with at least as many leaves as odd degrees > 1.
    fn run_core(&mut self, bipartite: bool) -> Result<(), RealizeError> {
        while let Some(j) = self.smallest_odd_vertex() {
            // the last leaf would leave an all-even remainder with odd m
            if bipartite && self.mult1() == 1 && (self.edge_count_now() - 1) % 2 == 1 {
                self.attach_correction_path(j)?;
            } else {
                self.attach_leaf(j)?;
            }
        }
        while self.mult1() > 0 {
            let t = self.max_vertex().ok_or_else(|| self.internal("no target"))?;
            if self.residual(t) < 4 {
                return Err(self.internal("leaf pair needs a target of residual >= 4"));
            }
            if bipartite && self.mult1() == 2 && self.edge_count_now() % 2 == 1 {
                self.attach_correction_path(t)?;
            } else {
                self.attach_leaf(t)?;
            }
            self.attach_leaf(t)?;
        }
        self.run_bridgeless(bipartite)?;
        Ok(())
    }

    /// Volume above `2n`, any leaf/odd balance.
    fn run_cactus(&mut self, bipartite: bool) -> Result<(), RealizeError> {
        if self.mult_odd() <= self.mult1() {
            return self.run_core(bipartite);
        }
        loop {
            let n = self.remaining as u64;
            if self.volume == 2 * n {
                return if bipartite {
                    self.run_bi_unicyclic()
                } else {
                    self.run_unicyclic()
                };
            }
            if self.mult1() == 0 && self.mult_odd() == 0 {
                self.run_bridgeless(bipartite)?;
                return Ok(());
            }
            let j = self
                .smallest_odd_vertex()
                .ok_or_else(|| self.internal("expected an odd residual above 1"))?;
            if self.mult1() > 0 {
                let last_pair = self.mult1() == 1 && self.mult_odd() == 1;
                if bipartite && last_pair && (self.edge_count_now() - 1) % 2 == 1 {
                    self.attach_correction_path(j)?;
                } else {
                    self.attach_leaf(j)?;
                }
            } else if bipartite {
                self.attach_c4(j)?;
            } else {
                self.attach_triangle(j)?;
            }
        }
    }

    /// Maps canonical positions back to input positions.
    /// Relabels to input positions. Adjacency is filled in canonical ids,
    /// where consecutive edges touch nearby vertices, and then copied out row
    /// by row; scattering straight into input order thrashes the cache.
    fn into_graph(self, d: &DegreeSequence) -> Graph {
        let n = d.len();
        let perm = d.perm();
        let entries = d.entries();
        let prefix = |degs: &mut dyn Iterator<Item = u32>| {
            let mut off = Vec::with_capacity(n + 1);
            off.push(0u32);
            for x in degs {
                off.push(off.last().unwrap() + x);
            }
            off
        };
        let canon_off = prefix(&mut entries.iter().copied());
        let mut fill = canon_off[..n].to_vec();
        let mut canon = vec![0u32; self.edges.len() * 2];
        for &(u, v) in &self.edges {
            canon[fill[u as usize] as usize] = v;
            fill[u as usize] += 1;
            canon[fill[v as usize] as usize] = u;
            fill[v as usize] += 1;
        }
        let offsets = prefix(&mut d.in_input_order().into_iter());
        let mut nbrs = vec![0u32; canon.len()];
        for c in 0..n {
            let dst = offsets[perm[c]] as usize;
            let row = &canon[canon_off[c] as usize..canon_off[c + 1] as usize];
            for (slot, &w) in nbrs[dst..dst + row.len()].iter_mut().zip(row) {
                *slot = perm[w as usize] as u32;
            }
        }
        let edges = self
            .edges
            .into_iter()
            .map(|(u, v)| {
                let (a, b) = (perm[u as usize] as u32, perm[v as usize] as u32);
                (a.min(b), a.max(b))
            })
            .collect();
        Graph::from_parts(n, edges, offsets, nbrs)
    }
}

/// A witness plus counters from the run that built it.
#[derive(Debug, Clone)]
pub struct Realization {
    /// Vertex `i` is position `i` of the caller's input sequence.
    pub graph: Graph,
    /// Two-edge correction paths used.
    pub corrections: usize,
    /// Primitive steps executed.
    pub steps: usize,
}

pub fn realize(family: Family, d: &DegreeSequence) -> Result<Graph, RealizeError> {
    realize_detailed(family, d).map(|r| r.graph)
}

pub fn realize_detailed(family: Family, d: &DegreeSequence) -> Result<Realization, RealizeError> {
    let verdict = decide(family, d);
    if !verdict.realizable {
        return Err(RealizeError::NotRealizable(Box::new(verdict)));
    }
    let p = verdict.params.expect("realizable verdicts carry params");
    let (n, m) = (p.n, p.m);
    if n == 2 || m + 1 == n || matches!(family, Family::Forest | Family::Tree) {
        return Ok(caterpillar(d));
    }
    let mut s = RealizationState::new(d);
    match family {
        Family::Forest | Family::Tree => unreachable!(),
        Family::Unicyclic => s.run_unicyclic()?,
        Family::BiUnicyclic => s.run_bi_unicyclic()?,
        Family::BridgelessCactus => {
            s.run_bridgeless(false)?;
        }
        Family::TriangulatedCactus => {
            let last = s.run_bridgeless(false)?;
            if last != 3 {
                return Err(RealizeError::Internal(format!("final cycle has length {last}")));
            }
        }
        Family::BridgelessBicactus => {
            s.run_bridgeless(true)?;
        }
        Family::CoreCactus | Family::Cactus if m == n => s.run_unicyclic()?,
        Family::CoreBicactus | Family::Bicactus if m == n => s.run_bi_unicyclic()?,
        Family::CoreCactus => s.run_core(false)?,
        Family::CoreBicactus => s.run_core(true)?,
        Family::Cactus => s.run_cactus(false)?,
        Family::Bicactus => s.run_cactus(true)?,
    }
    if s.remaining != 0 {
        return Err(s.internal("schedule finished with vertices left"));
    }
    let (corrections, steps) = (s.corrections, s.steps);
    Ok(Realization {
        graph: s.into_graph(d),
        corrections,
        steps,
    })
}

/// Forest by caterpillar: a path through every vertex of degree >= 2, leaves
/// hung left to right, surplus leaves paired into separate edges.
fn caterpillar(d: &DegreeSequence) -> Realization {
    let e = d.entries();
    let n = e.len();
    let spine = e.iter().take_while(|&&x| x >= 2).count();
    let mut edges: Vec<(u32, u32)> = Vec::with_capacity(n);
    for i in 1..spine {
        edges.push(((i - 1) as u32, i as u32));
    }
    let mut next_leaf = spine;
    for (i, &deg) in e[..spine].iter().enumerate() {
        let on_path = usize::from(i > 0) + usize::from(i + 1 < spine);
        for _ in 0..(deg as usize).saturating_sub(on_path) {
            edges.push((i as u32, next_leaf as u32));
            next_leaf += 1;
        }
    }
    while next_leaf + 1 < n {
        edges.push((next_leaf as u32, next_leaf as u32 + 1));
        next_leaf += 2;
    }
    let perm = d.perm();
    let edges = edges
        .into_iter()
        .map(|(u, v)| {
            let (a, b) = (perm[u as usize] as u32, perm[v as usize] as u32);
            (a.min(b), a.max(b))
        })
        .collect();
    Realization {
        graph: Graph::from_trusted(n, edges),
        corrections: 0,
        steps: 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{block_decomposition, degree_sequence_of, is_member, verify_realization};
    use crate::seq::parse_sequence;

    fn seq(s: &str) -> DegreeSequence {
        parse_sequence(s).unwrap()
    }

    #[test]
    fn leaf_steps() {
        let d = seq("3,2,2,2,1");
        let mut s = RealizationState::new(&d);
        s.attach_leaf(0).unwrap();
        assert_eq!(s.residual_sequence(), vec![2, 2, 2, 2]);
        assert_eq!(s.edges().collect::<Vec<_>>(), vec![(0, 4)]);

        let mut s = RealizationState::new(&seq("2,1,1"));
        s.attach_leaf(0).unwrap();
        assert_eq!(s.residual_sequence(), vec![1, 1]);

        let mut s = RealizationState::new(&seq("3,1,1,1"));
        for _ in 0..2 {
            s.attach_leaf(0).unwrap();
        }
        assert_eq!(s.remaining(), 2);
        assert_eq!(s.edges().count(), 2);
        assert_eq!(s.attach_leaf(0), Err(StepError::TargetTooSmall { vertex: 0, residual: 1, needed: 2 }));

        let mut s = RealizationState::new(&seq("2,2,2"));
        assert_eq!(s.attach_leaf(0), Err(StepError::NoLeaf));
    }

    #[test]
    fn triangle_steps() {
        let mut s = RealizationState::new(&seq("4,2,2,2,2"));
        s.attach_triangle(0).unwrap();
        assert_eq!(s.residual_sequence(), vec![2, 2, 2]);
        assert_eq!(s.residual(0), 2);

        // a residual-2 target must be closed as a cycle instead
        let mut s = RealizationState::new(&seq("2,2,2"));
        assert!(matches!(s.attach_triangle(0), Err(StepError::TargetTooSmall { .. })));

        let mut s = RealizationState::new(&seq("3,3,2,2,2,2"));
        s.attach_triangle(1).unwrap();
        assert_eq!(s.residual(1), 1);
    }

    #[test]
    fn c4_steps() {
        let mut s = RealizationState::new(&seq("4,2^6"));
        s.attach_c4(0).unwrap();
        assert_eq!(s.residual_sequence(), vec![2, 2, 2, 2]);

        let mut s = RealizationState::new(&seq("3,3,2^4"));
        s.attach_c4(1).unwrap();
        assert_eq!(s.residual(1), 1);

        let mut s = RealizationState::new(&seq("4,2,2,1,1"));
        assert_eq!(
            s.attach_c4(0),
            Err(StepError::NotEnoughDegreeTwo { needed: 3, available: 2 })
        );
    }

    #[test]
    fn correction_steps() {
        let mut s = RealizationState::new(&seq("4,3,2^6,1"));
        s.attach_correction_path(1).unwrap();
        assert_eq!(s.residual_sequence(), vec![4, 2, 2, 2, 2, 2, 2]);
        assert_eq!(s.edge_count_now(), 8);
        assert_eq!(s.corrections(), 1);

        let mut s = RealizationState::new(&seq("3,2^4,1"));
        s.attach_correction_path(0).unwrap();
        assert_eq!(s.residual_sequence(), vec![2, 2, 2, 2]);
        s.close_remaining().unwrap();
        assert_eq!(s.remaining(), 0);

        let mut s = RealizationState::new(&seq("3,1,1,1"));
        assert!(matches!(s.attach_correction_path(0), Err(StepError::NotEnoughDegreeTwo { .. })));
    }

    #[test]
    fn cycle_closures() {
        let mut s = RealizationState::new(&seq("2,2,2"));
        s.close_cycle(&[0, 1, 2]).unwrap();
        assert_eq!(s.edges().count(), 3);

        let mut s = RealizationState::new(&seq("2^6"));
        s.close_cycle(&[0, 1, 2, 3, 4, 5]).unwrap();
        assert_eq!(s.remaining(), 0);

        // family-blind: an odd cycle is emitted if asked
        let mut s = RealizationState::new(&seq("2^5"));
        s.close_cycle(&[0, 1, 2, 3, 4]).unwrap();

        let mut s = RealizationState::new(&seq("2,2,1,1"));
        assert_eq!(s.close_cycle(&[0, 1]), Err(StepError::CycleTooShort(2)));
        assert!(matches!(s.close_cycle(&[0, 1, 2]), Err(StepError::NotOnCycle { vertex: 2, .. })));
    }

    #[test]
    fn correction_example_witness() {
        let d = seq("4,3,2^6,1");
        let r = realize_detailed(Family::Bicactus, &d).unwrap();
        assert_eq!(r.graph.edge_count(), 10);
        assert!(verify_realization(Family::Bicactus, &d, &r.graph));
        assert_eq!(r.corrections, 1);
    }

    #[test]
    fn small_witnesses() {
        let g = realize(Family::Cactus, &seq("2,2,2")).unwrap();
        assert_eq!(g.edge_count(), 3);

        let d = seq("4,2,2,2,2");
        let g = realize(Family::TriangulatedCactus, &d).unwrap();
        assert!(verify_realization(Family::TriangulatedCactus, &d, &g));
        assert_eq!(g.degree(0), 4);

        let d = seq("3,2^4,1");
        let g = realize(Family::BiUnicyclic, &d).unwrap();
        assert!(verify_realization(Family::BiUnicyclic, &d, &g));
        let dec = block_decomposition(&g).unwrap();
        assert_eq!(dec.cycle_blocks().map(<[usize]>::len).collect::<Vec<_>>(), vec![4]);
        assert_eq!(dec.bridge_count(), 2);
    }

    #[test]
    fn rejects_unrealizable() {
        let err = realize(Family::BiUnicyclic, &seq("2^5")).unwrap_err();
        assert!(matches!(err, RealizeError::NotRealizable(_)));
    }

    #[test]
    fn degrees_follow_input_positions() {
        let d = seq("1,3,2,2,1,1");
        let g = realize(Family::Tree, &d).unwrap();
        assert_eq!(g.degrees(), vec![1, 3, 2, 2, 1, 1]);
        assert!(is_member(Family::Tree, &g));
    }

    #[test]
    fn forest_components() {
        let d = seq("2,1^6");
        let g = realize(Family::Forest, &d).unwrap();
        assert_eq!(degree_sequence_of(&g).unwrap().entries(), d.entries());
        assert_eq!(g.components().1, 3);
        assert!(is_member(Family::Forest, &g));
    }
}
