//! Brute-force ground truth at small `n`.
//!
//! Every labeled simple graph on `n` vertices is an edge bitmask over the
//! `n(n-1)/2` vertex pairs. A [`Census`] scans them all once, records which
//! families realize each positive degree multiset (and which families contain
//! *every* realization), and the cross-checks compare that table with
//! [`decide`] and [`realize`].

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::decide::{decide, decide_forcibly, Forcibly};
use crate::family::{Family, FamilySet};
use crate::graph::{block_decomposition, memberships, verify_realization, Graph};
use crate::realize::realize_detailed;
use crate::seq::{
    bicactus_bridge_bound, bicactus_edge_bound, bridge_parameter, cactus_edge_bound, DegreeSequence,
};

/// Largest `n` scanned without the explicit long-run opt-in.
pub const DEFAULT_MAX_N: usize = 7;
/// Hard cap.
pub const MAX_N: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("n = {0} is outside the enumeration range 1..={DEFAULT_MAX_N}")]
    OutOfRange(usize),
    #[error("n = 8 enumerates 2^28 graphs; pass the explicit opt-in to run it")]
    NeedsOptIn,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[derive(Default)]
pub struct ScanOptions {
    /// Worker threads; `0` uses rayon's default.
    pub jobs: usize,
    pub allow_n8: bool,
}


fn check_range(n: usize, allow_n8: bool) -> Result<(), OracleError> {
    match n {
        1..=DEFAULT_MAX_N => Ok(()),
        MAX_N if allow_n8 => Ok(()),
        MAX_N => Err(OracleError::NeedsOptIn),
        _ => Err(OracleError::OutOfRange(n)),
    }
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    let mut p = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            p.push((u, v));
        }
    }
    p
}

fn decode(n: usize, pairs: &[(usize, usize)], mask: u32) -> Graph {
    let edges = pairs
        .iter()
        .enumerate()
        .filter(|&(i, _)| mask >> i & 1 == 1)
        .map(|(_, &e)| e);
    Graph::new(n, edges).expect("distinct pairs")
}

/// All `2^(n(n-1)/2)` labeled simple graphs on `n` vertices, each exactly once.
pub fn enumerate_graphs(n: usize) -> Result<impl Iterator<Item = Graph>, OracleError> {
    check_range(n, true)?;
    let p = pairs(n);
    let total: u64 = 1 << p.len();
    Ok((0..total).map(move |mask| decode(n, &p, mask as u32)))
}

/// Sorted (non-increasing) degree multiset packed 4 bits per entry.
type Key = u32;

fn pack(sorted: &[u32]) -> Key {
    sorted.iter().enumerate().fold(0, |k, (i, &d)| k | d << (4 * i))
}

fn unpack(n: usize, key: Key) -> Vec<u32> {
    (0..n).map(|i| key >> (4 * i) & 0xf).collect()
}

#[derive(Debug, Clone, Copy)]
struct Tally {
    /// Families with at least one realization.
    some: FamilySet,
    /// Families containing every realization.
    every: FamilySet,
}

/// The per-multiset family table for one `n`.
#[derive(Debug, Clone)]
pub struct Census {
    n: usize,
    tallies: HashMap<Key, Tally>,
    /// Largest edge count per (family, beta) over family members.
    max_edges: HashMap<(Family, u64), usize>,
}

#[derive(Default)]
struct Partial {
    tallies: HashMap<Key, Tally>,
    max_edges: HashMap<(Family, u64), usize>,
}

impl Partial {
    fn merge(mut self, other: Partial) -> Partial {
        for (k, t) in other.tallies {
            self.tallies
                .entry(k)
                .and_modify(|a| {
                    a.some = a.some.union(t.some);
                    a.every = a.every.intersection(t.every);
                })
                .or_insert(t);
        }
        for (k, m) in other.max_edges {
            let e = self.max_edges.entry(k).or_insert(0);
            *e = (*e).max(m);
        }
        self
    }
}

/// Degrees of the graph encoded by `mask`, or `None` if a vertex is isolated.
fn mask_degrees(n: usize, pairs: &[(usize, usize)], mask: u32) -> Option<Vec<u32>> {
    let mut deg = vec![0u32; n];
    let mut bits = mask;
    while bits != 0 {
        let i = bits.trailing_zeros() as usize;
        let (u, v) = pairs[i];
        deg[u] += 1;
        deg[v] += 1;
        bits &= bits - 1;
    }
    deg.iter().all(|&d| d > 0).then_some(deg)
}

fn with_pool<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> T {
    if jobs == 0 {
        return f();
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool")
        .install(f)
}

/// Splits `0..total` into chunks by the high mask bits.
fn chunks(total: u64) -> impl ParallelIterator<Item = std::ops::Range<u64>> {
    let size = (total / 256).max(1);
    let count = total.div_ceil(size);
    (0..count)
        .into_par_iter()
        .map(move |c| c * size..((c + 1) * size).min(total))
}

impl Census {
    pub fn build(n: usize, opts: ScanOptions) -> Result<Census, OracleError> {
        check_range(n, opts.allow_n8)?;
        let p = pairs(n);
        let total: u64 = 1 << p.len();
        let merged = with_pool(opts.jobs, || {
            chunks(total)
                .map(|range| {
                    let mut part = Partial::default();
                    for mask in range {
                        let mask = mask as u32;
                        let Some(mut deg) = mask_degrees(n, &p, mask) else {
                            continue;
                        };
                        let g = decode(n, &p, mask);
                        let fams = memberships(&g);
                        deg.sort_unstable_by(|a, b| b.cmp(a));
                        let key = pack(&deg);
                        part.tallies
                            .entry(key)
                            .and_modify(|t| {
                                t.some = t.some.union(fams);
                                t.every = t.every.intersection(fams);
                            })
                            .or_insert(Tally {
                                some: fams,
                                every: fams,
                            });
                        let mult1 = deg.iter().filter(|&&d| d == 1).count() as u64;
                        let mult_odd = deg.iter().filter(|&&d| d > 1 && d % 2 == 1).count() as u64;
                        let beta = bridge_parameter(mult1, mult_odd);
                        let m = mask.count_ones() as usize;
                        for f in fams.iter() {
                            let e = part.max_edges.entry((f, beta)).or_insert(0);
                            *e = (*e).max(m);
                        }
                    }
                    part
                })
                .reduce(Partial::default, Partial::merge)
        });
        Ok(Census {
            n,
            tallies: merged.tallies,
            max_edges: merged.max_edges,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn tally(&self, entries: &[u32]) -> Option<Tally> {
        self.tallies.get(&pack(entries)).copied()
    }

    /// True iff some member of `family` realizes the sorted multiset.
    pub fn realizes(&self, family: Family, entries: &[u32]) -> bool {
        self.tally(entries).is_some_and(|t| t.some.contains(family))
    }

    /// True iff the multiset is graphic and every realization is in `family`.
    pub fn forces(&self, family: Family, entries: &[u32]) -> bool {
        self.tally(entries).is_some_and(|t| t.every.contains(family))
    }

    /// Every graphic positive multiset on `n` vertices, sorted.
    pub fn graphic_multisets(&self) -> Vec<Vec<u32>> {
        let mut v: Vec<Vec<u32>> = self.tallies.keys().map(|&k| unpack(self.n, k)).collect();
        v.sort();
        v
    }

    pub fn realizable_set(&self, family: Family) -> Vec<Vec<u32>> {
        let mut v: Vec<Vec<u32>> = self
            .tallies
            .iter()
            .filter(|(_, t)| t.some.contains(family))
            .map(|(&k, _)| unpack(self.n, k))
            .collect();
        v.sort();
        v
    }

    pub fn max_edges_by_beta(&self, family: Family) -> BTreeMap<u64, usize> {
        self.max_edges
            .iter()
            .filter(|((f, _), _)| *f == family)
            .map(|(&(_, beta), &m)| (beta, m))
            .collect()
    }
}

/// Multisets on `n` positive entries realized by some member of `family`.
pub fn realizable_set(family: Family, n: usize) -> Result<Vec<Vec<u32>>, OracleError> {
    Ok(Census::build(n, ScanOptions::default())?.realizable_set(family))
}

/// Non-increasing sequences of length `n` with entries in `1..=n-1` and even
/// sum, in lexicographic order.
pub fn candidate_multisets(n: usize) -> Vec<Vec<u32>> {
    fn rec(n: usize, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == n {
            if cur.iter().sum::<u32>() % 2 == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for d in 1..=cap {
            cur.push(d);
            rec(n, d, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n >= 2 {
        rec(n, n as u32 - 1, &mut Vec::with_capacity(n), &mut out);
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub multiset: Vec<u32>,
    pub decide: bool,
    pub oracle: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessFailure {
    pub multiset: Vec<u32>,
    pub error: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub family: Family,
    pub n: usize,
    pub candidates: usize,
    pub realizable_multisets: Vec<Vec<u32>>,
    pub mismatches: Vec<Mismatch>,
    /// Decide-yes multisets whose constructed witness failed verification.
    pub witness_failures: Vec<WitnessFailure>,
    /// Most corrections used by any single witness.
    pub max_corrections: usize,
    pub max_edges_seen: BTreeMap<u64, usize>,
}

impl CensusReport {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty() && self.witness_failures.is_empty()
    }
}

/// Compares `decide` with the census on every candidate multiset and checks
/// every constructed witness.
pub fn crosscheck_with(census: &Census, family: Family) -> CensusReport {
    let n = census.n();
    let candidates = candidate_multisets(n);
    let mut mismatches = Vec::new();
    let mut witness_failures = Vec::new();
    let mut max_corrections = 0;
    for c in &candidates {
        let d = DegreeSequence::new(c.clone()).expect("positive");
        let predicted = decide(family, &d).realizable;
        let truth = census.realizes(family, c);
        if predicted != truth {
            mismatches.push(Mismatch {
                multiset: c.clone(),
                decide: predicted,
                oracle: truth,
            });
        }
        if predicted {
            match realize_detailed(family, &d) {
                Ok(r) if verify_realization(family, &d, &r.graph) => {
                    max_corrections = max_corrections.max(r.corrections);
                }
                Ok(_) => witness_failures.push(WitnessFailure {
                    multiset: c.clone(),
                    error: "witness failed verification".into(),
                }),
                Err(e) => witness_failures.push(WitnessFailure {
                    multiset: c.clone(),
                    error: e.to_string(),
                }),
            }
        }
    }
    CensusReport {
        family,
        n,
        candidates: candidates.len(),
        realizable_multisets: census.realizable_set(family),
        mismatches,
        witness_failures,
        max_corrections,
        max_edges_seen: census.max_edges_by_beta(family),
    }
}

pub fn crosscheck(family: Family, n: usize) -> Result<CensusReport, OracleError> {
    let census = Census::build(n, ScanOptions::default())?;
    Ok(crosscheck_with(&census, family))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TightnessRow {
    pub beta: u64,
    pub max_edges: usize,
    pub bound: i64,
    pub attained: bool,
    pub holds: bool,
}

/// One row per bridge parameter seen among family members: the most edges
/// any member has against the edge bound for that beta.
pub fn bound_tightness_with(census: &Census, family: Family) -> Vec<TightnessRow> {
    let bipartite = family.non_bipartite_counterpart().is_some();
    let n = census.n() as u64;
    census
        .max_edges_by_beta(family)
        .into_iter()
        .map(|(beta, max_edges)| {
            let bound = if bipartite {
                bicactus_edge_bound(n, beta)
            } else {
                cactus_edge_bound(n, beta)
            };
            TightnessRow {
                beta,
                max_edges,
                bound,
                attained: max_edges as i64 == bound,
                holds: max_edges as i64 <= bound,
            }
        })
        .collect()
}

pub fn bound_tightness(family: Family, n: usize) -> Result<Vec<TightnessRow>, OracleError> {
    let census = Census::build(n, ScanOptions::default())?;
    Ok(bound_tightness_with(&census, family))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ForcedMismatch {
    pub class: &'static str,
    pub multiset: Vec<u32>,
    pub decide: bool,
    pub oracle: bool,
}

/// Compares the forcibly predicates with "every realization is a member" over
/// every graphic multiset of the census.
pub fn forcibly_crosscheck(census: &Census) -> (usize, Vec<ForcedMismatch>) {
    let graphic = census.graphic_multisets();
    let mut out = Vec::new();
    for c in &graphic {
        let d = DegreeSequence::new(c.clone()).expect("positive");
        for class in Forcibly::ALL {
            let family = match class {
                Forcibly::Bicactus => Family::Bicactus,
                Forcibly::BipartiteUnicyclic => Family::BiUnicyclic,
            };
            let predicted = decide_forcibly(class, &d).realizable;
            let truth = census.forces(family, c);
            if predicted != truth {
                out.push(ForcedMismatch {
                    class: class.name(),
                    multiset: c.clone(),
                    decide: predicted,
                    oracle: truth,
                });
            }
        }
    }
    (graphic.len(), out)
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct LemmaAudit {
    pub cacti: usize,
    pub bicacti: usize,
    pub violations: Vec<String>,
}

/// Checks the structural edge and bridge lemmas on every cactus with `n`
/// vertices and no isolated vertex.
pub fn lemma_audit(n: usize) -> Result<LemmaAudit, OracleError> {
    check_range(n, false)?;
    let p = pairs(n);
    let total: u64 = 1 << p.len();
    let audit = chunks(total)
        .map(|range| {
            let mut a = LemmaAudit::default();
            for mask in range {
                let mask = mask as u32;
                if mask_degrees(n, &p, mask).is_none() {
                    continue;
                }
                audit_graph(&decode(n, &p, mask), &mut a);
            }
            a
        })
        .reduce(LemmaAudit::default, |mut x, y| {
            x.cacti += y.cacti;
            x.bicacti += y.bicacti;
            x.violations.extend(y.violations);
            x
        });
    Ok(audit)
}

fn audit_graph(g: &Graph, a: &mut LemmaAudit) {
    let fams = memberships(g);
    if !fams.contains(Family::Cactus) {
        return;
    }
    a.cacti += 1;
    let n = g.vertex_count() as u64;
    let m = g.edge_count() as u64;
    let dec = block_decomposition(g).expect("cacti are connected");
    let b = dec.bridge_count() as u64;
    let c = dec.cycle_count() as u64;
    let mut deg = g.degrees();
    deg.sort_unstable_by(|x, y| y.cmp(x));
    let mult1 = deg.iter().filter(|&&d| d == 1).count() as u64;
    let mult_odd = deg.iter().filter(|&&d| d > 1 && d % 2 == 1).count() as u64;
    let beta = bridge_parameter(mult1, mult_odd);
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut fail = |what: &str| a.violations.push(format!("{what}: n={n} edges={edges:?}"));

    if m + 1 != n + c {
        fail("m = n + c - 1");
    }
    if (m as i64) > (3 * (n as i64 - 1) - b as i64).div_euclid(2) {
        fail("cactus bridge bound");
    }
    if n > 2 && b < beta {
        fail("bridges >= beta");
    }
    if n > 2 && (m as i64) > cactus_edge_bound(n, beta) {
        fail("cactus beta bound");
    }
    let all_even = mult1 + mult_odd == 0;
    if all_even != (b == 0) {
        fail("bridge-less iff all degrees even");
    }
    if fams.contains(Family::CoreCactus) && mult1 < mult_odd {
        fail("core cactus has mult1 >= mult_odd");
    }
    if fams.contains(Family::Bicactus) {
        a.bicacti += 1;
        if (m as i64) > bicactus_bridge_bound(n, b) {
            fail("bi-cactus bridge bound");
        }
        if n > 2 && (m as i64) > bicactus_edge_bound(n, beta) {
            fail("bi-cactus beta bound");
        }
        if m >= n && deg.get(3).copied().unwrap_or(0) < 2 {
            fail("bi-cactus with a cycle has d4 >= 2");
        }
    }
}
