use std::fmt::Write;

use cactus_core::graph::to_edge_list;
use cactus_core::Graph;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum GraphFormat {
    #[default]
    Edges,
    Dot,
    Json,
}

#[derive(Serialize)]
struct JsonGraph {
    n: usize,
    edges: Vec<[usize; 2]>,
}

fn sorted_edges(g: &Graph) -> Vec<(usize, usize)> {
    let mut e: Vec<(usize, usize)> = g.edges().map(|(u, v)| (u.min(v), u.max(v))).collect();
    e.sort_unstable();
    e
}

/// Vertices are 1-based input positions in every format.
pub fn render(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::Edges => to_edge_list(g),
        GraphFormat::Dot => {
            let mut out = String::from("graph realization {\n");
            for v in 0..g.vertex_count() {
                let _ = writeln!(out, "  {} [label=\"{}: {}\"];", v + 1, v + 1, g.degree(v));
            }
            for (u, v) in sorted_edges(g) {
                let _ = writeln!(out, "  {} -- {};", u + 1, v + 1);
            }
            out.push_str("}\n");
            out
        }
        GraphFormat::Json => {
            let j = JsonGraph {
                n: g.vertex_count(),
                edges: sorted_edges(g).into_iter().map(|(u, v)| [u + 1, v + 1]).collect(),
            };
            let mut s = serde_json::to_string(&j).expect("serializable");
            s.push('\n');
            s
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Graph {
        Graph::new(3, [(1, 2), (0, 2), (0, 1)]).unwrap()
    }

    #[test]
    fn edges_text() {
        assert_eq!(render(&triangle(), GraphFormat::Edges), "3 3\n1 2\n1 3\n2 3\n");
        assert_eq!(GraphFormat::default(), GraphFormat::Edges);
    }

    #[test]
    fn dot_text() {
        let g = Graph::new(6, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5)]).unwrap();
        let dot = render(&g, GraphFormat::Dot);
        assert_eq!(dot.matches("[label=").count(), 6);
        assert_eq!(dot.matches(" -- ").count(), 6);
        assert!(dot.contains("1 [label=\"1: 3\"]"));
        assert!(dot.starts_with("graph "));
    }

    #[test]
    fn json_text() {
        assert_eq!(
            render(&triangle(), GraphFormat::Json),
            "{\"n\":3,\"edges\":[[1,2],[1,3],[2,3]]}\n"
        );
    }
}
