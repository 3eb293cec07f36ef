//! Line-based weighted edge lists.
//!
//! ```text
//! # comment
//! graph 3
//! 1 2 x1*x2
//! 2 3 x2*x3   # trailing comments are allowed
//! ```
//!
//! Vertex indices are 1-based and every variable index must be at most `n`.

use std::collections::BTreeSet;
use std::path::Path;

use spantree_core::graphs::GraphError;
use spantree_core::{Polynomial, WeightedGraph};

use crate::expr::parse_weight_expr_at;
use crate::ParseError;

/// Splits off the next space/tab separated token, returning it with its
/// 0-based char offset and the remainder.
fn next_token(s: &str, offset: usize) -> Option<(&str, usize, &str, usize)> {
    let start = s.find(|c| c != ' ' && c != '\t')?;
    let rest = &s[start..];
    let end = rest.find([' ', '\t']).unwrap_or(rest.len());
    let token_offset = offset + s[..start].chars().count();
    let after = token_offset + rest[..end].chars().count();
    Some((&rest[..end], token_offset, &rest[end..], after))
}

fn parse_index(token: &str, line: usize, column: usize, what: &str) -> Result<usize, ParseError> {
    if token.is_empty() || !token.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ParseError::Syntax {
            line,
            column,
            message: format!("expected {what}, found {token:?}"),
        });
    }
    token.parse().map_err(|_| ParseError::Syntax {
        line,
        column,
        message: format!("{what} {token} is too large"),
    })
}

fn strip_line(raw: &str) -> &str {
    let line = raw.strip_suffix('\r').unwrap_or(raw);
    match line.find('#') {
        Some(k) => &line[..k],
        None => line,
    }
}

/// Parses the text of a graph file.
pub fn parse_graph_str(text: &str) -> Result<WeightedGraph, ParseError> {
    let mut n: Option<usize> = None;
    let mut seen = BTreeSet::new();
    let mut edges: Vec<(usize, usize, Polynomial)> = Vec::new();
    let mut last_line = 0;
    for (k, raw) in text.split('\n').enumerate() {
        let line = k + 1;
        last_line = line;
        let content = strip_line(raw);
        let Some((first, first_at, rest, rest_at)) = next_token(content, 0) else {
            continue;
        };
        let Some(n) = n else {
            if first != "graph" {
                return Err(ParseError::Syntax {
                    line,
                    column: first_at + 1,
                    message: "expected header 'graph <n>'".into(),
                });
            }
            let Some((count, count_at, tail, tail_at)) = next_token(rest, rest_at) else {
                return Err(ParseError::Syntax {
                    line,
                    column: rest_at + 1,
                    message: "expected a vertex count".into(),
                });
            };
            let count = parse_index(count, line, count_at + 1, "a vertex count")?;
            if let Some((extra, extra_at, _, _)) = next_token(tail, tail_at) {
                return Err(ParseError::Syntax {
                    line,
                    column: extra_at + 1,
                    message: format!("unexpected {extra:?} after the vertex count"),
                });
            }
            if count == 0 {
                return Err(ParseError::Graph {
                    line,
                    source: GraphError::Empty,
                });
            }
            n = Some(count);
            continue;
        };

        let i = parse_index(first, line, first_at + 1, "a vertex index")?;
        let Some((second, second_at, expr_text, expr_at)) = next_token(rest, rest_at) else {
            return Err(ParseError::Syntax {
                line,
                column: rest_at + 1,
                message: "expected a second vertex index".into(),
            });
        };
        let j = parse_index(second, line, second_at + 1, "a vertex index")?;
        let graph_error = |source| ParseError::Graph { line, source };
        for index in [i, j] {
            if index == 0 || index > n {
                return Err(graph_error(GraphError::IndexOutOfRange { index, n }));
            }
        }
        if i == j {
            return Err(graph_error(GraphError::LoopEdge(i)));
        }
        let expr = parse_weight_expr_at(expr_text, line, expr_at + 1)?;
        if let Some(v) = expr.variables().into_iter().find(|v| v.index() as usize > n) {
            return Err(ParseError::VariableOutOfRange { line, variable: v, n });
        }
        let weight = expr.lower().map_err(|e| match e {
            ParseError::TooLarge => ParseError::Syntax {
                line,
                column: expr_at + 1,
                message: "weight expression is too large to expand".into(),
            },
            other => other,
        })?;
        let key = (i.min(j), i.max(j));
        if weight.is_zero() {
            return Err(graph_error(GraphError::ZeroWeight(key.0, key.1)));
        }
        if !seen.insert(key) {
            return Err(graph_error(GraphError::DuplicateEdge(key.0, key.1)));
        }
        edges.push((i - 1, j - 1, weight));
    }
    let Some(n) = n else {
        return Err(ParseError::Syntax {
            line: last_line.max(1),
            column: 1,
            message: "missing header 'graph <n>'".into(),
        });
    };
    WeightedGraph::from_edge_list(n, edges).map_err(|source| ParseError::Graph { line: 0, source })
}

/// Reads and parses a graph file.
pub fn parse_graph_file(path: &Path) -> Result<WeightedGraph, ParseError> {
    let text = std::fs::read_to_string(path).map_err(|e| ParseError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    parse_graph_str(&text)
}

/// Renders a graph in the file format, with weights in canonical form.
pub fn render_graph(g: &WeightedGraph) -> String {
    let mut out = format!("graph {}\n", g.n());
    for (i, j, w) in g.edges() {
        out.push_str(&format!("{} {} {}\n", i + 1, j + 1, w));
    }
    out
}
