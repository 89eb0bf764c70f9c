//! Graphviz output of Hasse diagrams (covering relations only).

use std::fmt::Write;

use crate::order::Preorder;
use crate::rauszer::OpensLattice;
use crate::representation::PrimeFilterSpace;
use crate::subset::Subset;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// `x -> y` for every covering pair of `r`, drawn bottom to top.
pub fn hasse_dot(name: &str, r: &Preorder, labels: &[String]) -> String {
    let mut out = String::new();
    writeln!(out, "digraph {} {{", quote(name)).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=plaintext];").unwrap();
    for (i, l) in labels.iter().enumerate() {
        writeln!(out, "  n{i} [label={}];", quote(l)).unwrap();
    }
    for (x, y) in r.covering_pairs() {
        writeln!(out, "  n{x} -> n{y};").unwrap();
    }
    out.push_str("}\n");
    out
}

/// Set label in braces, points named by `names` when given.
pub fn set_label(s: &Subset, names: Option<&[String]>) -> String {
    let items: Vec<String> = match names {
        Some(names) => s.iter().map(|i| names[i].clone()).collect(),
        None => s.iter().map(|i| i.to_string()).collect(),
    };
    format!("{{{}}}", items.join(","))
}

fn inclusion(sets: &[Subset]) -> Preorder {
    Preorder::from_fn(sets.len(), |i, j| sets[i].is_subset(&sets[j]))
        .expect("inclusion is a preorder")
}

/// The lattice of opens ordered by `⊆`.
pub fn opens_dot(lattice: &OpensLattice, names: Option<&[String]>) -> String {
    let labels: Vec<String> = lattice
        .members()
        .iter()
        .map(|g| set_label(g, names))
        .collect();
    hasse_dot("opens", &inclusion(lattice.members()), &labels)
}

/// Prime filters of a spectrum ordered by `⊆`, labelled by their elements.
pub fn spectrum_dot(space: &PrimeFilterSpace) -> String {
    let labels: Vec<String> = space.points().iter().map(|p| set_label(p, None)).collect();
    hasse_dot("spectrum", space.order(), &labels)
}
