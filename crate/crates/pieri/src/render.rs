//! Plain-text rendering.

use std::fmt::Write;

use pieri_core::betti::EquivariantBettiTable;
use pieri_core::resolution::{EquivariantComplex, Provenance};
use pieri_core::Partition;

/// Young diagram with `lambda_i` boxes in column `i`, read top to bottom.
pub fn diagram(lambda: &Partition) -> String {
    let height = lambda.get(0);
    let mut out = String::new();
    if height == 0 {
        out.push_str(".\n");
    }
    for r in 0..height {
        let row: Vec<&str> = (0..lambda.len()).take_while(|&i| lambda.get(i) > r).map(|_| "#").collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// One line per homological degree, `partition[internal degree]`, with
/// multiplicities written as `2x`.
pub fn complex(c: &EquivariantComplex, diagrams: bool) -> String {
    let mut out = String::new();
    let kind = match c.provenance {
        Provenance::Minimal => "minimal",
        Provenance::PossiblyNonminimal => "possibly nonminimal",
    };
    let _ = writeln!(out, "n = {}, {kind}, length {}", c.n, c.length());
    for i in 0..=c.length() {
        let terms: Vec<String> = c
            .terms_in(i)
            .iter()
            .map(|t| {
                let m = if t.multiplicity > 1 { format!("{}x", t.multiplicity) } else { String::new() };
                format!("{m}{}[{}]", t.partition.text_padded(c.n), t.degree)
            })
            .collect();
        let _ = writeln!(out, "F{i}: {}", terms.join(" + "));
        if diagrams {
            for t in c.terms_in(i) {
                let _ = writeln!(out, "  {}:", t.partition.text_padded(c.n));
                for line in diagram(&t.partition).lines() {
                    let _ = writeln!(out, "    {line}");
                }
            }
        }
    }
    out
}

pub fn equivariant_table(t: &EquivariantBettiTable) -> String {
    let mut out = String::new();
    for ((i, j), v) in t.entries() {
        let _ = writeln!(out, "B[{i},{j}] (row {}) = {v}", j - *i as u32);
    }
    if out.is_empty() {
        out.push_str("0\n");
    }
    out
}
