//! Graphviz DOT emission for weighted DAGs, AR quivers and their slices.
//!
//! Vertices sharing a longest-path depth are placed on the same rank, which
//! lays AR quivers out in their usual diagonal columns. Witness paths can be
//! highlighted in grey.

use std::collections::BTreeSet;
use std::fmt::Write;

use crate::coxeter::{ArQuiver, ArSlice};
use crate::gk::{PathTuple, WeightedDag};
use crate::rsk::LiftedFilling;

/// Longest-path depth per vertex over an arbitrary arc list.
fn depths(count: usize, arcs: &[(usize, usize)]) -> Vec<usize> {
    let mut depth = vec![0usize; count];
    // Relax until fixed point; these graphs are tiny and acyclic.
    let mut changed = true;
    while changed {
        changed = false;
        for &(u, v) in arcs {
            if depth[u] + 1 > depth[v] {
                depth[v] = depth[u] + 1;
                changed = true;
            }
        }
    }
    depth
}

fn rank_groups(out: &mut String, names: &[String], depth: &[usize]) {
    let levels: BTreeSet<usize> = depth.iter().copied().collect();
    for level in levels {
        let members: Vec<&str> = (0..names.len())
            .filter(|&v| depth[v] == level)
            .map(|v| names[v].as_str())
            .collect();
        if members.len() > 1 {
            let _ = writeln!(out, "  {{ rank=same; {}; }}", members.join("; "));
        }
    }
}

/// The DAG with `id: weight` labels; vertices and arcs of `highlight` are
/// drawn bold grey.
pub fn weighted_dag(dag: &WeightedDag, highlight: Option<&PathTuple>) -> String {
    let mut lit_vertices = BTreeSet::new();
    let mut lit_arcs = BTreeSet::new();
    if let Some(tuple) = highlight {
        for path in tuple.paths() {
            lit_vertices.extend(path.iter().copied());
            for w in path.windows(2) {
                lit_arcs.insert((w[0], w[1]));
            }
        }
    }
    let mut out = String::from("digraph gk {\n  rankdir=TB;\n  node [shape=circle];\n");
    for v in 0..dag.vertex_count() {
        let style = if lit_vertices.contains(&v) {
            ", style=filled, fillcolor=grey80"
        } else {
            ""
        };
        let _ = writeln!(out, "  n{} [label=\"{}: {}\"{}];", v, v, dag.weight(v), style);
    }
    for &(u, v) in dag.arcs() {
        let style = if lit_arcs.contains(&(u, v)) {
            " [penwidth=3, color=grey40]"
        } else {
            ""
        };
        let _ = writeln!(out, "  n{} -> n{}{};", u, v, style);
    }
    let names: Vec<String> = (0..dag.vertex_count()).map(|v| format!("n{}", v)).collect();
    rank_groups(&mut out, &names, &depths(dag.vertex_count(), dag.arcs()));
    out.push_str("}\n");
    out
}

/// The full AR quiver with `(i,j)` labels, weighted when a lift is supplied.
pub fn ar_quiver(quiver: &ArQuiver, lift: Option<&LiftedFilling>) -> String {
    let vertices = quiver.vertices();
    let index = |t: (usize, usize)| vertices.iter().position(|&v| v == t).unwrap();
    let arcs: Vec<(usize, usize)> = quiver
        .arcs()
        .iter()
        .map(|&(s, t)| (index(s), index(t)))
        .collect();
    let mut out = String::from("digraph ar {\n  rankdir=LR;\n  node [shape=plaintext];\n");
    let names: Vec<String> = vertices.iter().map(|(x, y)| format!("t{}_{}", x, y)).collect();
    for (k, &(x, y)) in vertices.iter().enumerate() {
        let label = match lift {
            Some(l) => format!("({},{}): {}", x, y, l.weight(x, y)),
            None => format!("({},{})", x, y),
        };
        let _ = writeln!(out, "  {} [label=\"{}\"];", names[k], label);
    }
    for &(s, t) in &arcs {
        let _ = writeln!(out, "  {} -> {};", names[s], names[t]);
    }
    rank_groups(&mut out, &names, &depths(vertices.len(), &arcs));
    out.push_str("}\n");
    out
}

/// A single slice, same conventions as [`ar_quiver`].
pub fn ar_slice(slice: &ArSlice, lift: Option<&LiftedFilling>) -> String {
    let mut out = String::from("digraph ar_slice {\n  rankdir=LR;\n  node [shape=plaintext];\n");
    let names: Vec<String> = slice
        .vertices()
        .iter()
        .map(|(x, y)| format!("t{}_{}", x, y))
        .collect();
    for (k, &(x, y)) in slice.vertices().iter().enumerate() {
        let label = match lift {
            Some(l) => format!("({},{}): {}", x, y, l.weight(x, y)),
            None => format!("({},{})", x, y),
        };
        let _ = writeln!(out, "  {} [label=\"{}\"];", names[k], label);
    }
    for &(s, t) in slice.arcs() {
        let _ = writeln!(out, "  {} -> {};", names[s], names[t]);
    }
    rank_groups(&mut out, &names, &depths(slice.vertices().len(), slice.arcs()));
    out.push_str("}\n");
    out
}
