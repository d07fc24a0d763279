use std::fmt::Write;

use crate::error::{Error, Result};
use crate::omega::{CellRef, OmegaCat};
use crate::tag::Tag;

/// Short label: the top set of a tower cell without its braces, otherwise
/// the whole tag.
fn label(x: &OmegaCat, c: CellRef) -> String {
    match &*x.tag(c) {
        Tag::Node(l, ch) if l == "cell" && !ch.is_empty() => {
            let s = ch[0].to_string();
            s.strip_prefix('{')
                .and_then(|t| t.strip_suffix('}'))
                .map_or(s.clone(), str::to_string)
        }
        t => t.to_string(),
    }
}

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for ch in s.chars() {
        match ch {
            '"' | '\\' => {
                out.push('\\');
                out.push(ch);
            }
            '\n' => out.push_str("\\n"),
            _ => out.push(ch),
        }
    }
    out.push('"');
    out
}

/// `dim = 1`: objects and non-identity 1-cells. `dim = 2` adds one note per
/// non-identity 2-cell naming its source and target 1-cells.
pub fn export_dot(x: &OmegaCat, dim: u32) -> Result<String> {
    if !(1..=2).contains(&dim) {
        return Err(Error::DimensionOutOfRange { level: dim, dim: 2 });
    }
    let mut out = String::from("digraph omegacat {\n  rankdir=LR;\n");
    for c in x.objects() {
        writeln!(out, "  o{} [label={}];", c.idx, quote(&label(x, c))).expect("string write");
    }
    let edges: Vec<CellRef> = if x.truncation() >= 1 {
        x.cells(1).filter(|&c| !x.is_identity(c)).collect()
    } else {
        Vec::new()
    };
    for &e in &edges {
        writeln!(
            out,
            "  o{} -> o{} [label={}];",
            x.src(e).idx,
            x.tgt(e).idx,
            quote(&label(x, e))
        )
        .expect("string write");
    }
    if dim == 2 && x.truncation() >= 2 {
        for c in x.cells(2).filter(|&c| !x.is_identity(c)) {
            let text = format!(
                "{}\nsrc: {}\ntgt: {}",
                label(x, c),
                label(x, x.src(c)),
                label(x, x.tgt(c))
            );
            writeln!(out, "  t{} [shape=note, label={}];", c.idx, quote(&text)).expect("string write");
        }
    }
    out.push_str("}\n");
    Ok(out)
}
