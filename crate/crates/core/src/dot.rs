//! Hasse diagram export in Graphviz DOT.

use std::fmt::Write;

use crate::ortho::OrthoPoset;

/// Undirected graph with solid cover edges and one dashed edge per
/// involution 2-cycle. Elements fixed by the involution are marked in their
/// label instead of with a loop.
pub fn export_dot(q: &OrthoPoset, name: &str) -> String {
    let mut out = String::new();
    let quote = |s: &str| format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""));
    writeln!(out, "graph {} {{", quote(name)).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=circle];").unwrap();
    for x in 0..q.len() {
        let label = if q.neg(x) == x {
            format!("{} (x' = x)", q.name(x))
        } else {
            q.name(x).to_string()
        };
        writeln!(out, "  n{x} [label={}];", quote(&label)).unwrap();
    }
    for (a, b) in q.poset().covers() {
        writeln!(out, "  n{a} -- n{b};").unwrap();
    }
    for x in 0..q.len() {
        let y = q.neg(x);
        if x < y {
            writeln!(out, "  n{x} -- n{y} [style=dashed, constraint=false];").unwrap();
        }
    }
    out.push_str("}\n");
    out
}
