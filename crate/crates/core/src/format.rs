//! The `p edge n m` / `e u v` graph file dialect.
//!
//! Vertices are `1..=n`. `c` lines and blank lines are skipped on input. The
//! serializer writes the header followed by the edges in lexicographic
//! order, one per line, LF-terminated, with vertices renumbered `1..=n` in
//! label order.

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

fn parse_error<T>(line: usize, message: impl Into<String>) -> Result<T> {
    Err(Error::Parse { line, message: message.into() })
}

struct Block {
    n: u32,
    m: usize,
    header_line: usize,
    graph: Graph,
}

/// Parses one or more graphs. Each `p edge` line starts a new graph.
pub fn parse_graphs(text: &[u8]) -> Result<Vec<Graph>> {
    let text = std::str::from_utf8(text).map_err(|e| Error::Parse {
        line: 1 + text[..e.valid_up_to()].iter().filter(|&&b| b == b'\n').count(),
        message: "input is not valid UTF-8".into(),
    })?;
    let mut done = Vec::new();
    let mut current: Option<Block> = None;
    let mut last_line = 0;

    let finish = |block: Block, done: &mut Vec<Graph>, line: usize| -> Result<()> {
        if block.graph.edge_count() != block.m {
            return parse_error(
                line,
                format!(
                    "header on line {} announces {} edges, found {}",
                    block.header_line,
                    block.m,
                    block.graph.edge_count()
                ),
            );
        }
        done.push(block.graph);
        Ok(())
    };

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last_line = line;
        let mut tokens = raw.split_whitespace();
        let Some(tag) = tokens.next() else {
            continue;
        };
        let rest: Vec<&str> = tokens.collect();
        match tag {
            "c" => {}
            "p" => {
                if let Some(block) = current.take() {
                    finish(block, &mut done, line)?;
                }
                let [kind, n, m] = rest[..] else {
                    return parse_error(line, "expected `p edge <n> <m>`");
                };
                if kind != "edge" {
                    return parse_error(line, format!("unsupported problem kind {kind:?}"));
                }
                let (Ok(n), Ok(m)) = (n.parse::<u32>(), m.parse::<usize>()) else {
                    return parse_error(line, "vertex and edge counts must be non-negative integers");
                };
                current = Some(Block { n, m, header_line: line, graph: Graph::with_vertices(1..=n) });
            }
            "e" => {
                let Some(block) = current.as_mut() else {
                    return parse_error(line, "edge line before `p edge` header");
                };
                let [u, v] = rest[..] else {
                    return parse_error(line, "expected `e <u> <v>`");
                };
                let (Ok(u), Ok(v)) = (u.parse::<Vertex>(), v.parse::<Vertex>()) else {
                    return parse_error(line, "edge endpoints must be positive integers");
                };
                for x in [u, v] {
                    if x < 1 || x > block.n {
                        return parse_error(line, format!("vertex {x} outside 1..={}", block.n));
                    }
                }
                if u == v {
                    return parse_error(line, format!("self-loop on vertex {u}"));
                }
                if block.graph.edge_count() == block.m {
                    return parse_error(line, format!("more than the announced {} edges", block.m));
                }
                if !block.graph.add_edge(u, v).expect("checked above") {
                    return parse_error(line, format!("duplicate edge {u} {v}"));
                }
            }
            other => return parse_error(line, format!("unknown line type {other:?}")),
        }
    }
    match current {
        Some(block) => finish(block, &mut done, last_line.max(1))?,
        None if done.is_empty() => return parse_error(last_line.max(1), "missing `p edge` header"),
        None => {}
    }
    Ok(done)
}

/// Parses exactly one graph.
pub fn parse_graph(text: &[u8]) -> Result<Graph> {
    let mut graphs = parse_graphs(text)?;
    if graphs.len() != 1 {
        return parse_error(1, format!("expected one graph, found {}", graphs.len()));
    }
    Ok(graphs.pop().unwrap())
}

/// Canonical text form; labels are renumbered `1..=n` in ascending order.
pub fn serialize_graph(g: &Graph) -> String {
    let labels: Vec<Vertex> = g.vertices().collect();
    let rank = |v: Vertex| labels.binary_search(&v).unwrap() + 1;
    let mut out = format!("p edge {} {}\n", g.vertex_count(), g.edge_count());
    let mut edges: Vec<(usize, usize)> = g.edges().map(|e| (rank(e.u()), rank(e.v()))).collect();
    edges.sort_unstable();
    for (u, v) in edges {
        out.push_str(&format!("e {u} {v}\n"));
    }
    out
}
