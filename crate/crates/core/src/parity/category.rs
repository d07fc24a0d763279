use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use super::generator::Flavor;
use super::set::ParitySet;
use super::shape::Shape;
use super::tower::{compose_towers, CellTower};
use crate::error::{Error, Result};
use crate::omega::{CatBuilder, CellRef, NewCell, OmegaCat};

pub const DEFAULT_NODE_LIMIT: u64 = 500_000_000;

/// `O(n)` or `Q(n)` built from parity data, with the top set of every cell.
#[derive(Clone, Debug)]
pub struct ParityCategory {
    shape: Arc<Shape>,
    cat: Arc<OmegaCat>,
    tops: Vec<Vec<u128>>,
    index: Vec<HashMap<(u128, u32, u32), u32>>,
}

#[derive(Clone, Copy)]
struct Raw {
    top: u128,
    src: u32,
    tgt: u32,
}

/// All well-formed tops moving `mu` somewhere, by depth-first search over
/// generators with incremental pruning.
struct Search<'a> {
    shape: &'a Shape,
    dim: u32,
    mu: u128,
    cands: Vec<u32>,
    suffix_plus: Vec<u128>,
    nodes: &'a AtomicU64,
    limit: u64,
    found: Vec<u128>,
}

impl Search<'_> {
    fn run(&mut self, from: usize, plus: u128, minus: u128, top: u128) -> Result<()> {
        if self.nodes.fetch_add(1, Ordering::Relaxed) >= self.limit {
            return Err(Error::BudgetExceeded(format!(
                "more than {} search nodes in dimension {}",
                self.limit, self.dim
            )));
        }
        if top != 0 && minus & !plus & !self.mu == 0 {
            self.found.push(top);
        }
        for j in from..self.cands.len() {
            let g = self.cands[j];
            let (gp, gm) = (self.shape.plus_of(self.dim, g), self.shape.minus_of(self.dim, g));
            if gp & plus != 0 || gm & minus != 0 {
                continue;
            }
            let (p, m) = (plus | gp, minus | gm);
            // odd faces outside μ must be cancelled by even faces still to come
            if m & !p & !self.mu & !self.suffix_plus[j + 1] != 0 {
                continue;
            }
            self.run(j + 1, p, m, top | 1 << g)?;
        }
        Ok(())
    }
}

fn tower_tag(shape: &Shape, raws: &[Vec<Raw>], dim: u32, c: Raw) -> crate::tag::Tag {
    let mut tower = CellTower::object(shape.set(dim, c.top));
    let (mut s, mut t) = (c.src, c.tgt);
    let mut bounds = Vec::new();
    for k in (0..dim).rev() {
        let (rs, rt) = (raws[k as usize][s as usize], raws[k as usize][t as usize]);
        bounds.push((shape.set(k, rs.top), shape.set(k, rt.top)));
        s = rs.src;
        t = rt.tgt;
    }
    bounds.reverse();
    tower.boundaries = bounds;
    tower.to_tag()
}

/// Enumerates `O(n)` (simplex) or `Q(n)` (cube) up to dimension `max_dim`.
pub fn enumerate_cells(flavor: Flavor, n: u32, max_dim: u32) -> Result<ParityCategory> {
    ParityCategory::enumerate(flavor, n, max_dim, DEFAULT_NODE_LIMIT)
}

impl ParityCategory {
    pub fn oriental(n: u32) -> Result<Self> {
        enumerate_cells(Flavor::Simplex, n, n)
    }

    pub fn cube(n: u32) -> Result<Self> {
        enumerate_cells(Flavor::Cube, n, n)
    }

    pub fn enumerate(flavor: Flavor, n: u32, max_dim: u32, node_limit: u64) -> Result<Self> {
        let shape = Shape::new(flavor, n)?;
        let truncation = max_dim.min(n);
        let mut builder = CatBuilder::new(truncation);
        let mut raws: Vec<Vec<Raw>> = Vec::new();
        let mut index: Vec<HashMap<(u128, u32, u32), u32>> = Vec::new();
        let nodes = AtomicU64::new(0);

        for d in 0..=truncation {
            let mut cells: Vec<Raw> = if d == 0 {
                (0..shape.generators(0).len())
                    .map(|i| Raw {
                        top: 1 << i,
                        src: 0,
                        tgt: 0,
                    })
                    .collect()
            } else {
                let prev = &raws[d as usize - 1];
                let prev_index = &index[d as usize - 1];
                let found: Vec<Vec<Raw>> = (0..prev.len() as u32)
                    .into_par_iter()
                    .map(|m| {
                        let mu = prev[m as usize];
                        let cands: Vec<u32> = (0..shape.generators(d).len() as u32)
                            .filter(|&g| shape.plus_of(d, g) & mu.top == 0)
                            .collect();
                        let mut suffix_plus = vec![0u128; cands.len() + 1];
                        for j in (0..cands.len()).rev() {
                            suffix_plus[j] = suffix_plus[j + 1] | shape.plus_of(d, cands[j]);
                        }
                        let mut search = Search {
                            shape: &shape,
                            dim: d,
                            mu: mu.top,
                            cands,
                            suffix_plus,
                            nodes: &nodes,
                            limit: node_limit,
                            found: Vec::new(),
                        };
                        search.run(0, 0, 0, 0)?;
                        let mut out = vec![Raw {
                            top: 0,
                            src: m,
                            tgt: m,
                        }];
                        for xi in search.found {
                            let (minus, plus) = shape.faces_mask(d, xi);
                            let pi = (mu.top | plus) & !minus;
                            let key = if d == 1 { (pi, 0, 0) } else { (pi, mu.src, mu.tgt) };
                            if let Some(&p) = prev_index.get(&key) {
                                out.push(Raw {
                                    top: xi,
                                    src: m,
                                    tgt: p,
                                });
                            }
                        }
                        Ok(out)
                    })
                    .collect::<Result<_>>()?;
                found.into_iter().flatten().collect()
            };
            let new_cells: Vec<NewCell> = cells
                .iter()
                .map(|&c| NewCell {
                    tag: tower_tag(&shape, &raws, d, c),
                    src: c.src,
                    tgt: c.tgt,
                    identity_of: (d > 0 && c.top == 0).then_some(c.src),
                })
                .collect();
            let perm = builder.push_layer(new_cells)?;
            let mut ordered = vec![cells[0]; cells.len()];
            for (old, &new) in perm.iter().enumerate() {
                ordered[new as usize] = cells[old];
            }
            cells = ordered;
            index.push(
                cells
                    .iter()
                    .enumerate()
                    .map(|(i, c)| {
                        let key = if d == 0 { (c.top, 0, 0) } else { (c.top, c.src, c.tgt) };
                        (key, i as u32)
                    })
                    .collect(),
            );
            raws.push(cells);
        }

        let tops: Vec<Vec<u128>> = raws.iter().map(|row| row.iter().map(|c| c.top).collect()).collect();
        builder.fill_all(|cat, n, x, y| {
            let k = x.dim;
            let top = tops[k as usize][x.idx as usize] | tops[k as usize][y.idx as usize];
            let (s, t) = if k - 1 > n {
                (cat.compose(n, cat.src(x), cat.src(y))?, cat.compose(n, cat.tgt(x), cat.tgt(y))?)
            } else {
                (cat.src(y), cat.tgt(x))
            };
            index[k as usize]
                .get(&(top, s.idx, t.idx))
                .map(|&i| CellRef::new(k, i))
                .ok_or_else(|| {
                    Error::Malformed(format!(
                        "union of {} and {} is not a cell",
                        cat.tag(x),
                        cat.tag(y)
                    ))
                })
        })?;
        Ok(ParityCategory {
            shape: Arc::new(shape),
            cat: Arc::new(builder.finish()?),
            tops,
            index,
        })
    }

    pub fn cat(&self) -> &Arc<OmegaCat> {
        &self.cat
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn flavor(&self) -> Flavor {
        self.shape.flavor()
    }

    pub fn n(&self) -> u32 {
        self.shape.n()
    }

    pub fn top_mask(&self, c: CellRef) -> u128 {
        if c.dim > self.cat.truncation() {
            0
        } else {
            self.tops[c.dim as usize][c.idx as usize]
        }
    }

    pub fn top(&self, c: CellRef) -> ParitySet {
        self.shape.set(c.dim, self.top_mask(c))
    }

    pub fn tower(&self, c: CellRef) -> CellTower {
        CellTower {
            top: self.top(c),
            boundaries: (0..c.dim)
                .map(|k| (self.top(self.cat.src_at(c, k)), self.top(self.cat.tgt_at(c, k))))
                .collect(),
        }
    }

    /// The cell with top `top` between the given cells (ignored in dimension 0).
    pub fn find_mask(&self, dim: u32, top: u128, src: CellRef, tgt: CellRef) -> Option<CellRef> {
        if dim > self.cat.truncation() {
            return (top == 0 && src == tgt).then(|| self.cat.identity(src));
        }
        let key = if dim == 0 { (top, 0, 0) } else { (top, src.idx, tgt.idx) };
        self.index[dim as usize].get(&key).map(|&i| CellRef::new(dim, i))
    }

    pub fn find(&self, top: &ParitySet, src: CellRef, tgt: CellRef) -> Option<CellRef> {
        let mask = self.shape.mask(top).ok()?;
        self.find_mask(top.dim(), mask, src, tgt)
    }

    pub fn object(&self, top: &ParitySet) -> Option<CellRef> {
        let mask = self.shape.mask(top).ok()?;
        self.find_mask(0, mask, CellRef::new(0, 0), CellRef::new(0, 0))
    }

    pub fn find_tower(&self, t: &CellTower) -> Option<CellRef> {
        if t.dim() == 0 {
            return self.object(&t.top);
        }
        let d = t.dim() - 1;
        let s = self.find_tower(&t.source(d))?;
        let g = self.find_tower(&t.target(d))?;
        self.find(&t.top, s, g)
    }

    /// Overwrites the recorded top of one cell, leaving the category untouched;
    /// used to check that [`ParityCategory::closure_check`] notices.
    pub fn inject_top(&mut self, c: CellRef, top: &ParitySet) -> Result<()> {
        self.cat.check(c)?;
        let mask = self.shape.mask(top)?;
        self.tops[c.dim as usize][c.idx as usize] = mask;
        Ok(())
    }

    /// Re-derives every registered cell and every composite from the set-level
    /// rules: towers must be well-formed and moving, and the tower union of
    /// each composable pair must be the registered composite.
    pub fn closure_check(&self, max_dim: u32) -> ClosureReport {
        let top = max_dim.min(self.cat.truncation());
        let mut witnesses = Vec::new();
        let mut checked = 0u64;
        for d in 0..=top {
            let bad: Vec<ClosureWitness> = self
                .cat
                .cells(d)
                .collect::<Vec<_>>()
                .into_par_iter()
                .filter_map(|c| {
                    let t = self.tower(c);
                    (!t.is_valid()).then(|| ClosureWitness {
                        cells: vec![c],
                        detail: format!("registered tower {t} is not well-formed and moving"),
                    })
                })
                .collect();
            checked += self.cat.cell_count(d) as u64;
            witnesses.extend(bad);
        }
        for k in 1..=top {
            for n in 0..k {
                let pairs = self.cat.composable_pairs(k, n);
                checked += pairs.len() as u64;
                let bad: Vec<ClosureWitness> = pairs
                    .par_iter()
                    .filter_map(|&(x, y)| {
                        let z = match compose_towers(n, &self.tower(x), &self.tower(y)) {
                            Ok(z) => z,
                            Err(e) => {
                                return Some(ClosureWitness {
                                    cells: vec![x, y],
                                    detail: e.to_string(),
                                })
                            }
                        };
                        let registered = self.cat.compose(n, x, y).ok();
                        if !z.is_valid() || self.find_tower(&z) != registered || registered.is_none() {
                            return Some(ClosureWitness {
                                cells: vec![x, y],
                                detail: format!("{} ∘_{n} {} = {z} is not the registered composite", self.top(x), self.top(y)),
                            });
                        }
                        None
                    })
                    .collect();
                witnesses.extend(bad);
            }
        }
        witnesses.sort();
        ClosureReport { checked, witnesses }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct ClosureWitness {
    pub cells: Vec<CellRef>,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClosureReport {
    pub checked: u64,
    pub witnesses: Vec<ClosureWitness>,
}

impl ClosureReport {
    pub fn is_ok(&self) -> bool {
        self.witnesses.is_empty()
    }
}
