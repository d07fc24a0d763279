#![allow(dead_code)]

use omegacat::parity::{Flavor, ParityCategory, ParitySet};
use omegacat::{CellRef, OmegaCat};

pub fn simplex(dim: u32, s: &str) -> ParitySet {
    ParitySet::parse(Flavor::Simplex, dim, s).unwrap()
}

pub fn cube(dim: u32, s: &str) -> ParitySet {
    ParitySet::parse(Flavor::Cube, dim, s).unwrap()
}

pub fn oriental(n: u32) -> ParityCategory {
    ParityCategory::oriental(n).unwrap()
}

pub fn cubical(n: u32) -> ParityCategory {
    ParityCategory::cube(n).unwrap()
}

/// All registered `dim`-cells whose top is `top`.
pub fn with_top(p: &ParityCategory, dim: u32, top: &ParitySet) -> Vec<CellRef> {
    p.cat().cells(dim).filter(|&c| p.top(c) == *top).collect()
}

/// The unique non-identity `dim`-cell with the given top.
pub fn unique(p: &ParityCategory, dim: u32, top: &ParitySet) -> CellRef {
    let found = with_top(p, dim, top);
    assert_eq!(found.len(), 1, "cells with top {top}: {found:?}");
    found[0]
}

/// Structural equality: tags, boundaries, identities and every composition table.
pub fn same_structure(x: &OmegaCat, y: &OmegaCat) -> bool {
    if x.truncation() != y.truncation() {
        return false;
    }
    for d in 0..=x.truncation() {
        if x.cell_count(d) != y.cell_count(d) {
            return false;
        }
        for c in x.cells(d) {
            if x.tag(c) != y.tag(c) || x.identity_of(c) != y.identity_of(c) {
                return false;
            }
            if d > 0 && (x.src(c) != y.src(c) || x.tgt(c) != y.tgt(c)) {
                return false;
            }
        }
    }
    (1..=x.truncation()).all(|k| (0..k).all(|n| x.composition_table(k, n) == y.composition_table(k, n)))
}
