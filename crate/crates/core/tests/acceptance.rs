//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each and
//! exits non-zero if any fails.

mod common;

use std::collections::HashSet;
use std::time::{Duration, Instant};

use cactus_core::graph::memberships;
use cactus_core::oracle::{
    candidate_multisets, crosscheck_with, forcibly_crosscheck, lemma_audit, Census, ScanOptions,
};
use cactus_core::{
    block_decomposition, decide, decide_forcibly, degree_sequence_of, parse_sequence, realize,
    realize_detailed, verify_realization, DegreeSequence, Family, Forcibly, Graph, Rule,
    SequenceParams,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

type Outcome = Result<String, String>;

fn seq(s: &str) -> DegreeSequence {
    parse_sequence(s).unwrap()
}

fn check(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn cycle_lengths(g: &Graph) -> Vec<usize> {
    block_decomposition(g)
        .map(|d| d.cycle_blocks().map(<[usize]>::len).collect())
        .unwrap_or_default()
}

fn criterion_1() -> Outcome {
    let d = seq("4,3,2^6,1");
    let t = Instant::now();
    let v = decide(Family::Bicactus, &d);
    let g = realize(Family::Bicactus, &d).map_err(|e| e.to_string())?;
    let elapsed = t.elapsed();
    let p = v.params.ok_or("no params")?;
    check(v.realizable && v.rule == Rule::R10, format!("verdict {v:?}"))?;
    check(p.m == 10 && v.bound == Some(10), format!("m = {}, bound = {:?}", p.m, v.bound))?;
    check(g.edge_count() == 10, format!("{} edges", g.edge_count()))?;
    check(verify_realization(Family::Bicactus, &d, &g), "witness fails verification")?;
    check(elapsed < Duration::from_millis(1), format!("took {elapsed:?}"))?;
    Ok(format!("m = bound = 10, 10-edge witness verified in {elapsed:?}"))
}

/// The 4-cycle 0-1-2-3 with the path 0-4-5 hanging off it.
fn c4_with_pendant_path() -> Graph {
    Graph::new(6, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5)]).unwrap()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return false;
    }
    let norm = |u: usize, v: usize| (u.min(v), u.max(v));
    let eb: HashSet<(usize, usize)> = b.edges().map(|(u, v)| norm(u, v)).collect();
    permutations(a.vertex_count())
        .iter()
        .any(|p| a.edges().all(|(u, v)| eb.contains(&norm(p[u], p[v]))))
}

fn criterion_2() -> Outcome {
    let d = seq("3,2^4,1");
    let t = Instant::now();
    let g = realize(Family::BiUnicyclic, &d).map_err(|e| e.to_string())?;
    let rejected = realize(Family::BiUnicyclic, &seq("2^5")).is_err();
    let elapsed = t.elapsed();
    check(verify_realization(Family::BiUnicyclic, &d, &g), "witness fails verification")?;
    check(cycle_lengths(&g) == vec![4], format!("cycles {:?}", cycle_lengths(&g)))?;
    check(isomorphic(&g, &c4_with_pendant_path()), "witness is not a 4-cycle with a pendant 2-path")?;
    check(rejected, "(2^5) was realized")?;
    check(elapsed < Duration::from_millis(1), format!("took {elapsed:?}"))?;
    Ok(format!("4-cycle with pendant 2-path; (2^5) rejected; {elapsed:?}"))
}

fn criterion_3() -> Outcome {
    let p = SequenceParams::of(&seq("9,5^5,4^2,3^4,2,1^8")).map_err(|e| e.to_string())?;
    check(
        (p.mult1, p.mult_odd, p.beta) == (8, 10, 9),
        format!("mult1 = {}, mult_odd = {}, beta = {}", p.mult1, p.mult_odd, p.beta),
    )?;
    Ok("mult1 = 8, mult_odd = 10, beta = 9".into())
}

fn criterion_4(censuses: &[Census]) -> Outcome {
    let t = Instant::now();
    let mut checked = 0;
    let mut witnesses = 0;
    for c in censuses {
        for f in Family::ALL {
            let r = crosscheck_with(c, f);
            checked += r.candidates;
            witnesses += r.realizable_multisets.len();
            check(
                r.mismatches.is_empty(),
                format!("{f} n={}: mismatches {:?}", c.n(), r.mismatches),
            )?;
            check(
                r.witness_failures.is_empty(),
                format!("{f} n={}: witness failures {:?}", c.n(), r.witness_failures),
            )?;
        }
    }
    Ok(format!(
        "0 mismatches over {checked} (family, multiset) pairs at n <= {}, {witnesses} witnesses verified, {:?}",
        censuses.len(),
        t.elapsed()
    ))
}

fn criterion_5() -> Outcome {
    let mut cacti = 0;
    let mut bicacti = 0;
    for n in 1..=6 {
        let a = lemma_audit(n).map_err(|e| e.to_string())?;
        check(a.violations.is_empty(), format!("n={n}: {:?}", a.violations))?;
        cacti += a.cacti;
        bicacti += a.bicacti;
    }
    check(cacti > 0 && bicacti > 0, "nothing audited")?;
    Ok(format!("{cacti} cacti and {bicacti} bi-cacti, 0 violations"))
}

fn fl(a: i64, b: i64) -> i64 {
    a.div_euclid(b)
}

fn criterion_6() -> Outcome {
    let t = Instant::now();
    let mut cases = 0;
    for n in 2..=200i64 {
        let k = n - 1;
        check(fl(fl(4 * k + 1, 3), 2) == fl(2 * k, 3), format!("halving identity at n={n}"))?;
        for beta in 0..=n {
            let at = |b: i64| 2 * fl(2 * (k - b), 3) + b;
            check(
                fl(4 * k - beta, 3) == at(beta).max(at(beta + 1)),
                format!("max identity at n={n}, beta={beta}"),
            )?;
            check(at(beta) >= at(beta + 2), format!("step inequality at n={n}, beta={beta}"))?;
            check(
                cactus_core::seq::technical_identities_hold(n as u64, beta as u64),
                format!("library disagrees at n={n}, beta={beta}"),
            )?;
            cases += 1;
        }
    }
    let elapsed = t.elapsed();
    check(elapsed < Duration::from_secs(1), format!("took {elapsed:?}"))?;
    Ok(format!("{cases} (n, beta) pairs, 0 violations, {elapsed:?}"))
}

/// True iff every vertex of degree at least 2 lies on the unique cycle.
fn closed_caterpillar(g: &Graph) -> bool {
    let Ok(dec) = block_decomposition(g) else {
        return false;
    };
    let cycles: Vec<&[usize]> = dec.cycle_blocks().collect();
    if cycles.len() != 1 || dec.blocks.len() != dec.cycle_count() + dec.bridge_count() {
        return false;
    }
    let on: HashSet<usize> = cycles[0].iter().copied().collect();
    (0..g.vertex_count()).all(|v| g.degree(v) < 2 || on.contains(&v))
}

const SAMPLES: usize = 10_000;

fn structural_violation(family: Family, seed: u64) -> Option<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let target = rng.gen_range(2..=1000);
    let member = common::random_member(&mut rng, family, target);
    let d = degree_sequence_of(&member).ok()?;
    if !decide(family, &d).realizable {
        return Some(format!("{family}: decide rejects member sequence {d}"));
    }
    let r = match realize_detailed(family, &d) {
        Ok(r) => r,
        Err(e) => return Some(format!("{family} {d}: {e}")),
    };
    let g = &r.graph;
    if !verify_realization(family, &d, g) {
        return Some(format!("{family} {d}: witness fails verification"));
    }
    let lens = cycle_lengths(g);
    let bipartite = family.non_bipartite_counterpart().is_some();
    if bipartite {
        if lens.iter().filter(|&&l| l != 4).count() > 1 {
            return Some(format!("{family} {d}: cycles {lens:?}"));
        }
        if r.corrections > 1 {
            return Some(format!("{family} {d}: {} corrections", r.corrections));
        }
    } else if lens.iter().filter(|&&l| l != 3).count() > 1 {
        return Some(format!("{family} {d}: cycles {lens:?}"));
    }
    if family == Family::Unicyclic && !closed_caterpillar(g) {
        return Some(format!("{family} {d}: not a closed caterpillar"));
    }
    None
}

fn criterion_7() -> Outcome {
    let t = Instant::now();
    for (i, f) in Family::ALL.into_iter().enumerate() {
        let base = (i as u64) << 32;
        let bad: Vec<String> = (0..SAMPLES as u64)
            .into_par_iter()
            .filter_map(|s| structural_violation(f, base + s))
            .collect();
        check(bad.is_empty(), format!("{} violations, first: {}", bad.len(), bad.first().map_or("", |s| s)))?;
    }
    Ok(format!("{SAMPLES} sequences per family, 0 violations, {:?}", t.elapsed()))
}

/// Minimum over repeated runs (at least 3, until ~20 ms have been spent) so
/// that millisecond-scale sizes are not dominated by scheduler noise.
fn best_time(family: Family, d: &DegreeSequence) -> Result<Duration, String> {
    let mut best = Duration::MAX;
    let mut spent = Duration::ZERO;
    let mut runs = 0;
    while runs < 3 || (spent < Duration::from_millis(20) && runs < 50) {
        let t = Instant::now();
        let g = realize(family, d).map_err(|e| e.to_string())?;
        let took = t.elapsed();
        best = best.min(took);
        spent += took;
        runs += 1;
        if g.edge_count() as u64 * 2 != d.volume() {
            return Err(format!("{family}: wrong edge count"));
        }
    }
    Ok(best)
}

fn criterion_8() -> Outcome {
    let mut report = Vec::new();
    for family in [Family::Cactus, Family::Bicactus] {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let mut sizes: Vec<usize> = (0..7).map(|k| 10_000 << k).collect();
        sizes.push(1_000_000);
        let mut seqs = Vec::new();
        for &n in &sizes {
            let member = common::member_with(&mut rng, family, n, 0.3);
            seqs.push(degree_sequence_of(&member).map_err(|e| e.to_string())?);
        }
        // rounds over all sizes, so a transient slowdown cannot cover every
        // sample of one size
        let mut best = vec![Duration::MAX; seqs.len()];
        for _ in 0..5 {
            for (b, d) in best.iter_mut().zip(&seqs) {
                *b = (*b).min(best_time(family, d)?);
            }
        }
        let times: Vec<(usize, Duration)> = seqs.iter().map(DegreeSequence::len).zip(best).collect();
        let (n_top, t_top) = *times.last().unwrap();
        check(
            t_top < Duration::from_secs(1),
            format!("{family}: n = {n_top} took {t_top:?}"),
        )?;
        let mut worst: f64 = 0.0;
        for w in times[..7].windows(2) {
            let ratio = w[1].1.as_secs_f64() / w[0].1.as_secs_f64().max(1e-9);
            worst = worst.max(ratio);
        }
        check(worst <= 3.0, format!("{family}: doubling ratio {worst:.2}, times {times:?}"))?;
        report.push(format!("{family} n={n_top} in {t_top:?}, worst doubling ratio {worst:.2}"));
    }
    Ok(report.join("; "))
}

/// (2^4) or a double star (k, h, 1^{n-2}) with k + h = n.
fn forced_bicactus_shape(s: &[u32]) -> bool {
    let n = s.len() as u32;
    s == [2, 2, 2, 2] || (n >= 2 && s[2..].iter().all(|&x| x == 1) && s[0] + s[1] == n)
}

fn criterion_9(censuses: &[Census]) -> Outcome {
    let mut graphic = 0;
    let mut accepted = 0;
    for c in censuses {
        let (count, mismatches) = forcibly_crosscheck(c);
        check(mismatches.is_empty(), format!("n={}: {mismatches:?}", c.n()))?;
        graphic += count;
        for s in candidate_multisets(c.n()) {
            let d = DegreeSequence::new(s.clone()).unwrap();
            let yes = decide_forcibly(Forcibly::Bicactus, &d).realizable;
            check(yes == forced_bicactus_shape(&s), format!("shape disagreement on {s:?}"))?;
            accepted += yes as usize;
        }
    }
    Ok(format!(
        "{graphic} graphic multisets at n <= {}, {accepted} forced bi-cactus, 0 mismatches",
        censuses.len()
    ))
}

fn main() {
    let t = Instant::now();
    let censuses: Vec<Census> = (1..=7)
        .map(|n| Census::build(n, ScanOptions::default()).expect("in range"))
        .collect();
    // the census itself must agree with direct membership on a few graphs
    assert!(memberships(&c4_with_pendant_path()).contains(Family::BiUnicyclic));
    println!("census n <= 7 built in {:?}", t.elapsed());

    let results: Vec<(u32, &str, Outcome)> = vec![
        (1, "bi-cactus example reproduction", criterion_1()),
        (2, "bi-unicyclic example reproduction", criterion_2()),
        (3, "parameter reproduction", criterion_3()),
        (4, "oracle exactness", criterion_4(&censuses)),
        (5, "graph-level lemma suite", criterion_5()),
        (6, "arithmetic lemma suite", criterion_6()),
        (7, "structural corollaries", criterion_7()),
        (8, "linear time", criterion_8()),
        (9, "forcibly predicates", criterion_9(&censuses)),
    ];
    let mut failed = 0;
    for (i, name, r) in &results {
        match r {
            Ok(msg) => println!("criterion {i} ({name}): PASS: {msg}"),
            Err(msg) => {
                failed += 1;
                println!("criterion {i} ({name}): FAIL: {msg}");
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
