//! Operation tables as JSON and Hasse diagrams as DOT.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::algebra::mv::{MvAlgebra, MvValue};
use crate::error::{Error, Result};

/// Largest carrier or fragment that will be exported.
pub const MAX_EXPORT_ELEMENTS: usize = 10_000;

const INFINITESIMAL_HORIZON: u32 = 64;

fn carrier(alg: &MvAlgebra, bound: u64) -> Result<Vec<MvValue>> {
    if let Some(n) = alg.cardinality() {
        if n > MAX_EXPORT_ELEMENTS as u64 {
            return Err(Error::Domain(format!(
                "{alg} has {n} elements; export is limited to {MAX_EXPORT_ELEMENTS}"
            )));
        }
    }
    let elems = alg.enumerate(bound);
    if elems.len() > MAX_EXPORT_ELEMENTS {
        return Err(Error::Domain(format!(
            "fragment of {alg} at bound {bound} has {} elements; export is limited to {MAX_EXPORT_ELEMENTS}",
            elems.len()
        )));
    }
    Ok(elems)
}

/// Full operation tables of a finite algebra, as indices into `elements`.
pub fn tables_json(alg: &MvAlgebra) -> Result<Value> {
    if !alg.is_finite() {
        return Err(Error::Mode(format!("{alg} is infinite; operation tables need a finite algebra")));
    }
    let elems = carrier(alg, 0)?;
    let positions: HashMap<&MvValue, usize> = elems.iter().enumerate().map(|(i, x)| (x, i)).collect();
    let index = |v: &MvValue| positions[v];
    let table = |op: &dyn Fn(&MvValue, &MvValue) -> MvValue| -> Value {
        elems
            .iter()
            .map(|x| elems.iter().map(|y| index(&op(x, y))).collect::<Vec<_>>())
            .collect::<Vec<_>>()
            .into()
    };
    Ok(json!({
        "algebra": alg.shorthand(),
        "elements": elems.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "zero": index(&alg.zero()),
        "one": index(&alg.one()),
        "neg": elems.iter().map(|x| index(&alg.neg(x))).collect::<Vec<_>>(),
        "oplus": table(&|x, y| alg.oplus(x, y)),
        "odot": table(&|x, y| alg.odot(x, y)),
        "meet": table(&|x, y| alg.meet(x, y)),
        "join": table(&|x, y| alg.join(x, y)),
    }))
}

/// Covering pairs `(i, j)` of the natural order on `elems`, which must be
/// sorted by a linear extension of that order.
pub fn hasse_edges(alg: &MvAlgebra, elems: &[MvValue]) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for (i, x) in elems.iter().enumerate() {
        let mut minimal: Vec<usize> = Vec::new();
        for (j, y) in elems.iter().enumerate().skip(i + 1) {
            if alg.leq(x, y) && !minimal.iter().any(|&m| alg.leq(&elems[m], y)) {
                minimal.push(j);
            }
        }
        edges.extend(minimal.into_iter().map(|j| (i, j)));
    }
    edges
}

fn is_infinitesimal(alg: &MvAlgebra, x: &MvValue) -> bool {
    alg.is_infinitesimal_exact(x)
        .unwrap_or_else(|| alg.infinitesimal_up_to(x, INFINITESIMAL_HORIZON))
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Hasse diagram of a finite algebra, or of the bounded fragment of an
/// infinite one. Idempotents are drawn as filled boxes and nonzero
/// infinitesimals as filled ellipses; algebras built on `Z ×lex G` place the
/// radical and the co-radical in separate clusters.
pub fn hasse_dot(alg: &MvAlgebra, bound: u64) -> Result<String> {
    let mut elems = carrier(alg, bound)?;
    elems.sort();
    let edges = hasse_edges(alg, &elems);
    let zero = alg.zero();
    let node = |i: usize, x: &MvValue| {
        let style = if alg.is_boolean(x) {
            ", shape=box, style=filled, fillcolor=lightblue"
        } else if *x != zero && is_infinitesimal(alg, x) {
            ", style=filled, fillcolor=lightyellow"
        } else {
            ""
        };
        format!("n{i} [label={}{style}];", quote(&x.to_string()))
    };
    let mut out = String::new();
    writeln!(out, "digraph {} {{", quote(&alg.shorthand())).unwrap();
    out.push_str("  rankdir=BT;\n  node [shape=ellipse];\n");
    if alg.lex_group().is_some() {
        for (name, top) in [("radical", false), ("coradical", true)] {
            writeln!(out, "  subgraph cluster_{name} {{\n    label={};", quote(name)).unwrap();
            for (i, x) in elems.iter().enumerate() {
                if matches!(x, MvValue::Lex { top: t, .. } if *t == top) {
                    writeln!(out, "    {}", node(i, x)).unwrap();
                }
            }
            out.push_str("  }\n");
        }
    } else {
        for (i, x) in elems.iter().enumerate() {
            writeln!(out, "  {}", node(i, x)).unwrap();
        }
    }
    for (i, j) in edges {
        writeln!(out, "  n{i} -> n{j};").unwrap();
    }
    out.push_str("}\n");
    Ok(out)
}
