//! Line-oriented scripts of certified edge insertions and deletions.
//!
//! Each operation names an edge and a certificate vertex that must be
//! isolated once the edge's closed neighborhood is removed -- checked on
//! the graph that contains the edge, i.e. after an `add` and before a
//! `del`. Order matters: an operation valid at its position may be invalid
//! elsewhere in the sequence, and a failing certificate aborts the whole
//! run with no partial result.
//!
//! Grammar (whitespace-insensitive, `#` comments, `;` or newline between
//! operations):
//!
//! ```text
//! op := ("add" | "del") "(" int "," int ")" "!" int
//! ```

use crate::graph::{Graph, GraphError};
use serde::Serialize;
use std::fmt;
use thiserror::Error;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum IsolatingAction {
    Add,
    Del,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct IsolatingOp {
    pub action: IsolatingAction,
    pub edge: (u32, u32),
    pub certificate: u32,
}

impl fmt::Display for IsolatingOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verb = match self.action {
            IsolatingAction::Add => "add",
            IsolatingAction::Del => "del",
        };
        write!(
            f,
            "{verb}({},{})!{}",
            self.edge.0, self.edge.1, self.certificate
        )
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize)]
pub struct Script {
    pub ops: Vec<IsolatingOp>,
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("syntax error at line {line}, column {col}: {msg}")]
pub struct ScriptSyntaxError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ScriptRunError {
    #[error("op {index} ({op}): certificate invalid: {reason}")]
    CertificateInvalid {
        index: usize,
        op: IsolatingOp,
        reason: String,
    },
    #[error("op {index} ({op}): edge conflict: {source}")]
    EdgeConflict {
        index: usize,
        op: IsolatingOp,
        source: GraphError,
    },
    #[error("op {index} ({op}): {source}")]
    Graph {
        index: usize,
        op: IsolatingOp,
        source: GraphError,
    },
}

pub fn render_script(s: &Script) -> String {
    s.ops
        .iter()
        .map(|op| op.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

pub fn parse_script(text: &str) -> Result<Script, ScriptSyntaxError> {
    let mut ops = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        for chunk in line.split(';') {
            if chunk.trim().is_empty() {
                continue;
            }
            let col_base = offset_in(raw, chunk);
            ops.push(parse_op(chunk, lineno + 1, col_base)?);
        }
    }
    Ok(Script { ops })
}

fn offset_in(hay: &str, needle: &str) -> usize {
    // chunk is a slice of the line, so pointer arithmetic locates it
    (needle.as_ptr() as usize).saturating_sub(hay.as_ptr() as usize)
}

fn parse_op(chunk: &str, line: usize, col_base: usize) -> Result<IsolatingOp, ScriptSyntaxError> {
    let mut p = OpParser {
        bytes: chunk.as_bytes(),
        pos: 0,
        line,
        col_base,
    };
    let op = p.op()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(p.err("trailing characters after operation"));
    }
    Ok(op)
}

struct OpParser<'a> {
    bytes: &'a [u8],
    pos: usize,
    line: usize,
    col_base: usize,
}

impl OpParser<'_> {
    fn err(&self, msg: &str) -> ScriptSyntaxError {
        ScriptSyntaxError {
            line: self.line,
            col: self.col_base + self.pos + 1,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn expect(&mut self, tok: &str) -> Result<(), ScriptSyntaxError> {
        self.skip_ws();
        if self.bytes[self.pos..].starts_with(tok.as_bytes()) {
            self.pos += tok.len();
            Ok(())
        } else {
            Err(self.err(&format!("expected `{tok}`")))
        }
    }

    fn int(&mut self) -> Result<u32, ScriptSyntaxError> {
        self.skip_ws();
        let start = self.pos;
        while self.bytes.get(self.pos).is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a vertex number"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.err("vertex number out of range"))
    }

    fn op(&mut self) -> Result<IsolatingOp, ScriptSyntaxError> {
        self.skip_ws();
        let action = if self.bytes[self.pos..].starts_with(b"add") {
            self.pos += 3;
            IsolatingAction::Add
        } else if self.bytes[self.pos..].starts_with(b"del") {
            self.pos += 3;
            IsolatingAction::Del
        } else {
            return Err(self.err("expected `add` or `del`"));
        };
        self.expect("(")?;
        let u = self.int()?;
        self.expect(",")?;
        let v = self.int()?;
        self.expect(")")?;
        self.expect("!")?;
        let w = self.int()?;
        Ok(IsolatingOp {
            action,
            edge: (u, v),
            certificate: w,
        })
    }
}

/// Verified step of a script run.
#[derive(Clone, Debug, Serialize)]
pub struct StepLog {
    pub index: usize,
    pub op: IsolatingOp,
    /// Vertices left isolated by removing N[e] from the graph containing e;
    /// always includes the certificate.
    pub isolated: Vec<u32>,
}

#[derive(Clone, Debug, Serialize, Default)]
pub struct ScriptLog {
    pub steps: Vec<StepLog>,
}

/// Applies the ops in order, verifying each certificate before moving on.
/// Fails atomically: the first invalid certificate or edge conflict aborts
/// and nothing is returned.
pub fn run_script(g: &Graph, script: &Script) -> Result<(Graph, ScriptLog), ScriptRunError> {
    let mut current = g.clone();
    let mut log = ScriptLog::default();
    for (index, &op) in script.ops.iter().enumerate() {
        let (u, v) = op.edge;
        // the isolating check runs on the graph that contains the edge
        let with_edge = match op.action {
            IsolatingAction::Add => current.add_edge(u, v).map_err(|source| match source {
                GraphError::EdgeAlreadyPresent(..) => {
                    ScriptRunError::EdgeConflict { index, op, source }
                }
                other => ScriptRunError::Graph {
                    index,
                    op,
                    source: other,
                },
            })?,
            IsolatingAction::Del => {
                if !current.has_edge(u, v) {
                    return Err(ScriptRunError::EdgeConflict {
                        index,
                        op,
                        source: GraphError::MissingEdge(u, v),
                    });
                }
                current.clone()
            }
        };
        let ne = with_edge
            .edge_neighborhood(u, v)
            .map_err(|source| ScriptRunError::Graph { index, op, source })?;
        let rest = with_edge
            .remove_vertices(&ne)
            .map_err(|source| ScriptRunError::Graph { index, op, source })?;
        let isolated: Vec<u32> = rest
            .labels()
            .iter()
            .copied()
            .filter(|&w| rest.degree(w).unwrap() == 0)
            .collect();
        if !isolated.contains(&op.certificate) {
            let reason = if ne.contains(&op.certificate) {
                format!("vertex {} lies in N[e]", op.certificate)
            } else if !with_edge.has_vertex(op.certificate) {
                format!("vertex {} is not in the graph", op.certificate)
            } else {
                format!(
                    "vertex {} is not isolated in G \\ N[e] (isolated: {:?})",
                    op.certificate, isolated
                )
            };
            return Err(ScriptRunError::CertificateInvalid { index, op, reason });
        }
        current = match op.action {
            IsolatingAction::Add => with_edge,
            IsolatingAction::Del => with_edge
                .remove_edge(u, v)
                .map_err(|source| ScriptRunError::Graph { index, op, source })?,
        };
        log.steps.push(StepLog {
            index,
            op,
            isolated,
        });
    }
    Ok((current, log))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph;

    const EXAMPLE: &str = "add(0,4)!2; del(0,1)!3; del(3,4)!1";

    #[test]
    fn parse_and_render() {
        let s = parse_script(EXAMPLE).unwrap();
        assert_eq!(s.ops.len(), 3);
        assert_eq!(
            s.ops[0],
            IsolatingOp {
                action: IsolatingAction::Add,
                edge: (0, 4),
                certificate: 2
            }
        );
        assert_eq!(render_script(&s), EXAMPLE);
        assert_eq!(parse_script(&render_script(&s)).unwrap(), s);

        // newline separators and comments
        let s2 = parse_script("# zigzag\nadd(0,4)!2\ndel(0,1)!3 # inline\ndel(3,4)!1").unwrap();
        assert_eq!(s2, s);

        assert_eq!(parse_script("").unwrap(), Script::default());
    }

    #[test]
    fn syntax_errors_carry_position() {
        let err = parse_script("add(1,2)!!").unwrap_err();
        assert_eq!(err.line, 1);
        assert_eq!(err.col, 10);
        assert!(parse_script("mul(1,2)!3").is_err());
        assert!(parse_script("add(1 2)!3").is_err());
        assert!(parse_script("add(1,2)!3 nonsense").is_err());
    }

    #[test]
    fn zigzag_on_c9() {
        let script = parse_script(EXAMPLE).unwrap();
        let (result, log) = run_script(&graph::cycle(9), &script).unwrap();
        assert_eq!(log.steps.len(), 3);
        assert_eq!(log.steps[0].isolated, vec![2]);
        assert_eq!(log.steps[1].isolated, vec![3]);
        // final graph: path 1-2-3 disjoint from the 6-cycle 0-4-5-6-7-8
        let mut edges = result.edges();
        edges.sort_unstable();
        assert_eq!(
            edges,
            vec![
                (0, 4),
                (0, 8),
                (1, 2),
                (2, 3),
                (4, 5),
                (5, 6),
                (6, 7),
                (7, 8)
            ]
        );
    }

    #[test]
    fn swapped_order_fails_atomically() {
        let bad = parse_script("del(0,1)!3; add(0,4)!2; del(3,4)!1").unwrap();
        let err = run_script(&graph::cycle(9), &bad).unwrap_err();
        match err {
            ScriptRunError::CertificateInvalid { index, .. } => assert_eq!(index, 0),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn empty_script_is_identity() {
        let g = graph::cycle_power(10, 2);
        let (result, log) = run_script(&g, &Script::default()).unwrap();
        assert_eq!(result, g);
        assert!(log.steps.is_empty());
    }

    #[test]
    fn add_conflicts_are_reported() {
        let s = parse_script("add(0,1)!5").unwrap();
        match run_script(&graph::cycle(9), &s).unwrap_err() {
            ScriptRunError::EdgeConflict { index: 0, .. } => {}
            other => panic!("unexpected error {other:?}"),
        }
    }
}
