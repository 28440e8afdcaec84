#![allow(dead_code)]

use cactus_core::{Family, Graph};
use rand::Rng;

/// Grows an edge list one gadget at a time.
struct Builder {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn new() -> Self {
        Builder { n: 1, edges: Vec::new() }
    }

    fn pendant(&mut self, at: usize) {
        self.edges.push((at, self.n));
        self.n += 1;
    }

    fn cycle(&mut self, at: usize, len: usize) {
        let mut prev = at;
        for _ in 1..len {
            self.edges.push((prev, self.n));
            prev = self.n;
            self.n += 1;
        }
        self.edges.push((prev, at));
    }

    fn graph(self) -> Graph {
        Graph::new(self.n, self.edges).unwrap()
    }
}

fn cycle_len<R: Rng>(rng: &mut R, bipartite: bool, triangles_only: bool) -> usize {
    if triangles_only {
        3
    } else if bipartite {
        2 * rng.gen_range(2..=4)
    } else {
        rng.gen_range(3..=7)
    }
}

/// A random member of `family` with roughly `target` vertices (always at
/// least 2, at least 3 for the cycle-bearing families).
pub fn random_member<R: Rng>(rng: &mut R, family: Family, target: usize) -> Graph {
    let p_bridge = rng.gen_range(0.0..1.0);
    member_with(rng, family, target, p_bridge)
}

/// Like [`random_member`], with a fixed share of bridges for the cactus
/// families, so that members of different sizes have the same shape.
pub fn member_with<R: Rng>(rng: &mut R, family: Family, target: usize, p_bridge: f64) -> Graph {
    let bipartite = family.non_bipartite_counterpart().is_some();
    let target = target.max(2);
    let mut b = Builder::new();
    match family {
        Family::Forest => {
            let mut edges = Vec::new();
            let mut n = 0;
            while n + 2 <= target {
                let size = rng.gen_range(2..=(target - n).min(40));
                for v in 1..size {
                    edges.push((n + rng.gen_range(0..v), n + v));
                }
                n += size;
            }
            return Graph::new(n, edges).unwrap();
        }
        Family::Tree => {
            while b.n < target {
                let at = rng.gen_range(0..b.n);
                b.pendant(at);
            }
        }
        Family::Unicyclic | Family::BiUnicyclic => {
            let len = cycle_len(rng, bipartite, false).min(target.max(3));
            let len = if bipartite && len % 2 == 1 { len + 1 } else { len };
            b.cycle(0, len);
            while b.n < target {
                let at = rng.gen_range(0..b.n);
                b.pendant(at);
            }
        }
        Family::BridgelessCactus | Family::TriangulatedCactus | Family::BridgelessBicactus => {
            let tri = family == Family::TriangulatedCactus;
            loop {
                let at = rng.gen_range(0..b.n);
                let len = cycle_len(rng, bipartite, tri);
                b.cycle(at, len);
                if b.n >= target {
                    break;
                }
            }
        }
        Family::CoreCactus | Family::CoreBicactus => {
            let core = rng.gen_range(1..=target.max(4) / 2);
            loop {
                let at = rng.gen_range(0..b.n);
                let len = cycle_len(rng, bipartite, false);
                b.cycle(at, len);
                if b.n >= core {
                    break;
                }
            }
            while b.n < target {
                let at = rng.gen_range(0..b.n);
                b.pendant(at);
            }
        }
        Family::Cactus | Family::Bicactus => {
            while b.n < target {
                let at = rng.gen_range(0..b.n);
                if rng.gen_bool(p_bridge) {
                    b.pendant(at);
                } else {
                    let len = cycle_len(rng, bipartite, false);
                    b.cycle(at, len);
                }
            }
        }
    }
    b.graph()
}
