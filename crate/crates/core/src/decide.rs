//! Constant-arithmetic realizability predicates, one per family.
//!
//! Each family is decided by the first matching row of a fixed rule table
//! (`R1`..`R13`). The table is exact: it agrees with exhaustive enumeration
//! for every sequence the oracle can reach.

use std::fmt;

use serde::Serialize;

use crate::family::Family;
use crate::seq::{DegreeSequence, SequenceParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Rule {
    /// Forest / tree volume condition.
    R1,
    /// Unicyclic: volume `2n`, third degree at least 2.
    R2,
    /// Bi-unicyclic: volume `2n`, fourth degree at least 2, not an odd all-2 cycle.
    R3,
    /// Bridge-less cactus: all even, edge bound.
    R4,
    /// Triangulated cactus: all even, odd `n`, exact edge count.
    R5,
    /// Bridge-less bi-cactus: all even, even `m`, edge bound.
    R6,
    /// Core cactus above volume `2n`.
    R7,
    /// Core bi-cactus above volume `2n` with leaves.
    R8,
    /// Cactus: edge bound in the bridge parameter.
    R9,
    /// Bi-cactus: edge bound in the bridge parameter plus parity at beta 0.
    R10,
    /// Forcibly bi-cactus shapes.
    R11,
    /// Forcibly bipartite unicyclic shape.
    R12,
    /// Not a degree sequence: odd volume or a degree above `n - 1`.
    R13,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub realizable: bool,
    pub rule: Rule,
    pub reason: String,
    /// Absent only when the volume is odd.
    pub params: Option<SequenceParams>,
    /// The edge bound the deciding rule compared `m` against, if any.
    pub bound: Option<i64>,
}

/// Classes decided by "every realization lies in the family".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Forcibly {
    Bicactus,
    BipartiteUnicyclic,
}

impl Forcibly {
    pub const ALL: [Forcibly; 2] = [Forcibly::Bicactus, Forcibly::BipartiteUnicyclic];

    pub fn name(self) -> &'static str {
        match self {
            Forcibly::Bicactus => "forcibly-bicactus",
            Forcibly::BipartiteUnicyclic => "forcibly-bipartite-unicyclic",
        }
    }
}

fn floor_div(a: i64, b: i64) -> i64 {
    a.div_euclid(b)
}

struct Outcome {
    ok: bool,
    rule: Rule,
    bound: Option<i64>,
    reason: String,
}

fn outcome(ok: bool, rule: Rule, bound: Option<i64>, reason: impl Into<String>) -> Outcome {
    Outcome {
        ok,
        rule,
        bound,
        reason: reason.into(),
    }
}

/// `a <= b` or `a > b`, whichever holds.
fn vs(a: impl Into<i64>, b: impl Into<i64>) -> String {
    let (a, b) = (a.into(), b.into());
    if a <= b {
        format!("{a} <= {b}")
    } else {
        format!("{a} > {b}")
    }
}

/// Rejects sequences that are not degree sequences at all.
fn guard(d: &DegreeSequence) -> Result<SequenceParams, Verdict> {
    let params = match d.params() {
        Ok(p) => p,
        Err(_) => {
            return Err(Verdict {
                realizable: false,
                rule: Rule::R13,
                reason: format!("volume {} is odd, so no graph has these degrees", d.volume()),
                params: None,
                bound: None,
            })
        }
    };
    let n = d.len() as u64;
    if u64::from(d.max_degree()) > n - 1 {
        return Err(Verdict {
            realizable: false,
            rule: Rule::R13,
            reason: format!(
                "largest degree {} exceeds n - 1 = {} for a simple graph",
                d.max_degree(),
                n - 1
            ),
            params: Some(params),
            bound: None,
        });
    }
    Ok(params)
}

fn finish(o: Outcome, params: SequenceParams) -> Verdict {
    Verdict {
        realizable: o.ok,
        rule: o.rule,
        reason: o.reason,
        params: Some(params),
        bound: o.bound,
    }
}

/// Decides whether `d` has a realization in `family`.
pub fn decide(family: Family, d: &DegreeSequence) -> Verdict {
    match guard(d) {
        Ok(p) => finish(decide_with(family, d, &p), p),
        Err(v) => v,
    }
}

fn decide_with(family: Family, d: &DegreeSequence, p: &SequenceParams) -> Outcome {
    let n = p.n as i64;
    let m = p.m as i64;
    let vol = p.volume as i64;
    let all_even = p.mult1 + p.mult_odd == 0;
    match family {
        Family::Forest => {
            let ok = vol <= 2 * n - 2;
            outcome(ok, Rule::R1, Some(n - 1), format!("forest needs m <= n - 1: {}", vs(m, n - 1)))
        }
        Family::Tree => tree(n, m),
        Family::Unicyclic => unicyclic(d, n, m),
        Family::BiUnicyclic => bi_unicyclic(d, n, m),
        Family::BridgelessCactus => {
            let bound = floor_div(3 * (n - 1), 2);
            if n < 3 {
                outcome(false, Rule::R4, Some(bound), "a bridge-less cactus with edges needs n >= 3")
            } else if !all_even {
                outcome(false, Rule::R4, Some(bound), "a bridge-less cactus has only even degrees")
            } else {
                outcome(m <= bound, Rule::R4, Some(bound), format!("bridge-less cactus edge bound: {}", vs(m, bound)))
            }
        }
        Family::TriangulatedCactus => {
            let target = 3 * (n - 1);
            let bound = Some(floor_div(target, 2));
            if n < 3 || n % 2 == 0 {
                outcome(false, Rule::R5, bound, "a triangulated cactus has an odd number n >= 3 of vertices")
            } else if !all_even {
                outcome(false, Rule::R5, bound, "a triangulated cactus has only even degrees")
            } else {
                outcome(2 * m == target, Rule::R5, bound, format!("triangulated cactus needs 2m = 3(n - 1): 2m = {}, 3(n - 1) = {target}", 2 * m))
            }
        }
        Family::BridgelessBicactus => bridgeless_bicactus(n, m, all_even),
        Family::CoreCactus => {
            if vol > 2 * n {
                let bound = floor_div(3 * (n - 1) - p.mult1 as i64, 2);
                if p.mult_odd > p.mult1 {
                    outcome(false, Rule::R7, Some(bound), format!(
                        "a core cactus needs at least as many leaves as odd degrees above 1: {} < {}",
                        p.mult1, p.mult_odd
                    ))
                } else {
                    outcome(m <= bound, Rule::R7, Some(bound), format!("core cactus edge bound: {}", vs(m, bound)))
                }
            } else if vol == 2 * n {
                unicyclic(d, n, m)
            } else {
                tree(n, m)
            }
        }
        Family::CoreBicactus => {
            if vol > 2 * n {
                if p.mult1 == 0 {
                    return bridgeless_bicactus(n, m, all_even);
                }
                let bound = floor_div(4 * (n - 1) - p.mult1 as i64, 3);
                if p.mult_odd > p.mult1 {
                    outcome(false, Rule::R8, Some(bound), format!(
                        "a core bi-cactus needs at least as many leaves as odd degrees above 1: {} < {}",
                        p.mult1, p.mult_odd
                    ))
                } else {
                    outcome(m <= bound, Rule::R8, Some(bound), format!("core bi-cactus edge bound: {}", vs(m, bound)))
                }
            } else if vol == 2 * n {
                bi_unicyclic(d, n, m)
            } else {
                tree(n, m)
            }
        }
        Family::Cactus => {
            let bound = p.cactus_bound();
            if n == 2 {
                // the guard leaves only (1,1)
                outcome(true, Rule::R9, Some(bound), "a single edge is a cactus")
            } else if m < n - 1 {
                outcome(false, Rule::R9, Some(bound), format!("a connected graph needs m >= n - 1: {m} < {}", n - 1))
            } else {
                outcome(m <= bound, Rule::R9, Some(bound), format!("cactus edge bound (beta = {}): {}", p.beta, vs(m, bound)))
            }
        }
        Family::Bicactus => {
            let bound = p.bicactus_bound();
            if n == 2 {
                outcome(true, Rule::R10, Some(bound), "a single edge is a bi-cactus")
            } else if m < n - 1 {
                outcome(false, Rule::R10, Some(bound), format!("a connected graph needs m >= n - 1: {m} < {}", n - 1))
            } else if m > bound {
                outcome(false, Rule::R10, Some(bound), format!("bi-cactus edge bound (beta = {}): {}", p.beta, vs(m, bound)))
            } else if p.beta == 0 && m % 2 == 1 {
                outcome(false, Rule::R10, Some(bound), format!(
                    "with all degrees even every block is an even cycle, so m must be even (m = {m})"
                ))
            } else {
                outcome(true, Rule::R10, Some(bound), format!("bi-cactus edge bound (beta = {}): {}", p.beta, vs(m, bound)))
            }
        }
    }
}

fn tree(n: i64, m: i64) -> Outcome {
    outcome(m == n - 1, Rule::R1, Some(n - 1), format!("tree needs m = n - 1, has m = {m}, n = {n}"))
}

fn unicyclic(d: &DegreeSequence, n: i64, m: i64) -> Outcome {
    if m != n {
        outcome(false, Rule::R2, Some(n), format!("unicyclic needs m = n, has m = {m}, n = {n}"))
    } else if d.nth(3).unwrap_or(0) < 2 {
        outcome(false, Rule::R2, Some(n), "unicyclic needs at least three vertices of degree >= 2")
    } else {
        outcome(true, Rule::R2, Some(n), format!("unicyclic: m = n = {n} and d3 >= 2"))
    }
}

fn bi_unicyclic(d: &DegreeSequence, n: i64, m: i64) -> Outcome {
    if m != n {
        outcome(false, Rule::R3, Some(n), format!("bi-unicyclic needs m = n, has m = {m}, n = {n}"))
    } else if d.nth(4).unwrap_or(0) < 2 {
        outcome(false, Rule::R3, Some(n), "an even cycle needs at least four vertices of degree >= 2")
    } else if n % 2 == 1 && d.is_constant(2) {
        outcome(false, Rule::R3, Some(n), format!(
            "all-2 sequence of odd length {n} is only realized by an odd cycle"
        ))
    } else {
        outcome(true, Rule::R3, Some(n), format!("bi-unicyclic: m = n = {n}, d4 >= 2"))
    }
}

fn bridgeless_bicactus(n: i64, m: i64, all_even: bool) -> Outcome {
    let bound = 2 * floor_div(2 * (n - 1), 3);
    if n < 4 {
        outcome(false, Rule::R6, Some(bound), "a bridge-less bi-cactus needs n >= 4")
    } else if !all_even {
        outcome(false, Rule::R6, Some(bound), "a bridge-less bi-cactus has only even degrees")
    } else if m % 2 == 1 {
        outcome(false, Rule::R6, Some(bound), format!("a bridge-less bi-cactus has an even edge count (m = {m})"))
    } else {
        outcome(m <= bound, Rule::R6, Some(bound), format!("bridge-less bi-cactus edge bound: {}", vs(m, bound)))
    }
}

/// Decides whether every realization of `d` lies in the class.
///
/// Meaningful for graphic sequences; the accepted shapes are all graphic.
pub fn decide_forcibly(class: Forcibly, d: &DegreeSequence) -> Verdict {
    let params = match guard(d) {
        Ok(p) => p,
        Err(v) => return v,
    };
    let c4 = d.len() == 4 && d.is_constant(2);
    let o = match class {
        Forcibly::Bicactus => {
            let ok = c4 || double_star(d);
            outcome(ok, Rule::R11, None, if ok {
                "only a 4-cycle or two adjacent star centers realize this sequence"
            } else {
                "some realization is not a bi-cactus: the sequence is neither (2^4) nor (k,h,1^(n-2)) with h + k = n"
            })
        }
        Forcibly::BipartiteUnicyclic => outcome(c4, Rule::R12, None, if c4 {
            "(2^4) is realized only by the 4-cycle"
        } else {
            "only (2^4) forces a bipartite unicyclic realization"
        }),
    };
    finish(o, params)
}

/// `(k, h, 1^(n-2))` with `h + k = n`: two adjacent star centers. A star is
/// the `h = 1` member.
fn double_star(d: &DegreeSequence) -> bool {
    let e = d.entries();
    if e.len() < 2 || e[2..].iter().any(|&x| x != 1) {
        return false;
    }
    u64::from(e[0]) + u64::from(e[1]) == e.len() as u64
}

/// One sentence naming the rule and the numbers that decided it.
pub fn explain(v: &Verdict) -> String {
    let verdict = if v.realizable { "realizable" } else { "not realizable" };
    let mut out = format!("{verdict} by rule {} ({}): {}", v.rule, rule_title(v.rule), v.reason);
    if let (Some(p), Some(b)) = (v.params, v.bound) {
        out.push_str(&format!(" [n = {}, m = {}, beta = {}, bound = {b}]", p.n, p.m, p.beta));
    }
    out
}

fn rule_title(r: Rule) -> &'static str {
    match r {
        Rule::R1 => "forest/tree characterization",
        Rule::R2 => "unicyclic characterization",
        Rule::R3 => "bi-unicyclic characterization",
        Rule::R4 => "bridge-less cactus characterization",
        Rule::R5 => "triangulated cactus characterization",
        Rule::R6 => "bridge-less bi-cactus characterization",
        Rule::R7 => "core cactus characterization",
        Rule::R8 => "core bi-cactus characterization",
        Rule::R9 => "cactus characterization",
        Rule::R10 => "bi-cactus characterization",
        Rule::R11 => "forcibly bi-cactus shapes",
        Rule::R12 => "forcibly bipartite unicyclic shape",
        Rule::R13 => "degree-sequence feasibility",
    }
}
