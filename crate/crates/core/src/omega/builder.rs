use std::collections::HashMap;

use rayon::prelude::*;

use super::{CellRef, Layer, OmegaCat};
use crate::error::{Error, Result};
use crate::tag::Tag;

/// A cell handed to [`CatBuilder::push_layer`]. `src`, `tgt` and
/// `identity_of` index the previous layer in its canonical order.
#[derive(Clone, Debug)]
pub struct NewCell {
    pub tag: Tag,
    pub src: u32,
    pub tgt: u32,
    pub identity_of: Option<u32>,
}

impl NewCell {
    pub fn object(tag: Tag) -> Self {
        NewCell {
            tag,
            src: 0,
            tgt: 0,
            identity_of: None,
        }
    }
}

/// Assembles an [`OmegaCat`] layer by layer.
///
/// All layers `0..=truncation` are pushed first (each sorted by tag, which
/// fixes the canonical indices), then the composition tables are filled
/// bottom-up with [`CatBuilder::fill_layer`]. The closure passed there sees the
/// partially built category, whose tables below the current layer are final.
pub struct CatBuilder {
    cat: OmegaCat,
    pushed: usize,
    filled: Vec<bool>,
}

const UNSET: u32 = u32::MAX;

impl CatBuilder {
    pub fn new(truncation: u32) -> Self {
        CatBuilder {
            cat: OmegaCat {
                truncation,
                layers: vec![Layer::default(); truncation as usize + 1],
            },
            pushed: 0,
            filled: vec![false; truncation as usize + 1],
        }
    }

    pub fn truncation(&self) -> u32 {
        self.cat.truncation
    }

    /// Registers the next layer and returns, for each input position, its
    /// canonical index.
    pub fn push_layer(&mut self, cells: Vec<NewCell>) -> Result<Vec<u32>> {
        let d = self.pushed;
        if d > self.cat.truncation as usize {
            return Err(Error::Malformed("too many layers pushed".into()));
        }
        let prev_len = if d == 0 { 0 } else { self.cat.layers[d - 1].len() };
        if d > 0 && self.cat.layers[d - 1].len() == 0 && !cells.is_empty() {
            return Err(Error::Malformed(format!("layer {d} has cells but layer {} is empty", d - 1)));
        }

        let mut order: Vec<usize> = (0..cells.len()).collect();
        order.sort_by(|&a, &b| cells[a].tag.cmp(&cells[b].tag));
        let mut perm = vec![0u32; cells.len()];
        for (new, &old) in order.iter().enumerate() {
            perm[old] = new as u32;
        }
        let mut slots: Vec<Option<NewCell>> = cells.into_iter().map(Some).collect();

        let mut layer = Layer {
            comp: vec![HashMap::new(); d],
            ..Layer::default()
        };
        for &old in &order {
            let cell = slots[old].take().expect("each slot taken once");
            if d > 0 {
                if cell.src as usize >= prev_len || cell.tgt as usize >= prev_len {
                    return Err(Error::Malformed(format!(
                        "{}-cell {} has a dangling boundary",
                        d, cell.tag
                    )));
                }
                if let Some(x) = cell.identity_of {
                    if x as usize >= prev_len || cell.src != x || cell.tgt != x {
                        return Err(Error::Malformed(format!(
                            "{}-cell {} is declared an identity with the wrong boundary",
                            d, cell.tag
                        )));
                    }
                }
            }
            let idx = layer.tags.len() as u32;
            if layer.by_tag.insert(cell.tag.clone(), idx).is_some() {
                return Err(Error::Malformed(format!("duplicate {d}-cell tag {}", cell.tag)));
            }
            layer.tags.push(cell.tag);
            layer.src.push(cell.src);
            layer.tgt.push(cell.tgt);
            layer.identity_of.push(cell.identity_of);
        }
        if d > 0 {
            let prev = &mut self.cat.layers[d - 1];
            prev.identity = vec![UNSET; prev_len];
            for (i, id) in layer.identity_of.iter().enumerate() {
                if let Some(x) = id {
                    if prev.identity[*x as usize] != UNSET {
                        return Err(Error::Malformed(format!(
                            "{}-cell {} has two identities",
                            d - 1,
                            prev.tags[*x as usize]
                        )));
                    }
                    prev.identity[*x as usize] = i as u32;
                }
            }
            if let Some(x) = prev.identity.iter().position(|&i| i == UNSET) {
                return Err(Error::Malformed(format!(
                    "{}-cell {} has no identity",
                    d - 1,
                    prev.tags[x]
                )));
            }
        }
        for i in 0..layer.len() {
            if d > 0 {
                layer
                    .by_boundary
                    .entry((layer.src[i], layer.tgt[i]))
                    .or_default()
                    .push(i as u32);
            }
        }
        self.cat.layers[d] = layer;
        self.pushed += 1;
        Ok(perm)
    }

    /// Fills the composition tables of layer `k` for every level `n < k`.
    ///
    /// `compose(cat, n, x, y)` must return `x ∘_n y`; it is called once per
    /// composable pair, in parallel.
    pub fn fill_layer<F>(&mut self, k: u32, compose: F) -> Result<()>
    where
        F: Fn(&OmegaCat, u32, CellRef, CellRef) -> Result<CellRef> + Sync,
    {
        if self.pushed != self.cat.truncation as usize + 1 {
            return Err(Error::Malformed("fill_layer called before every layer was pushed".into()));
        }
        if k == 0 || k > self.cat.truncation || self.filled[k as usize] {
            return Err(Error::Malformed(format!("cannot fill layer {k}")));
        }
        if (1..k).any(|j| !self.filled[j as usize]) {
            return Err(Error::Malformed(format!("layer {k} filled before lower layers")));
        }
        for n in 0..k {
            let cat = &self.cat;
            let pairs = cat.composable_pairs(k, n);
            let results: Vec<(u32, u32, u32)> = pairs
                .par_iter()
                .map(|&(x, y)| {
                    let z = compose(cat, n, x, y)?;
                    if z.dim != k || !cat.contains(z) {
                        return Err(Error::Malformed(format!(
                            "composite of {} and {} at level {n} is not a registered {k}-cell",
                            cat.tag(x),
                            cat.tag(y)
                        )));
                    }
                    Ok((x.idx, y.idx, z.idx))
                })
                .collect::<Result<_>>()?;
            let table = &mut self.cat.layers[k as usize].comp[n as usize];
            table.reserve(results.len());
            for (x, y, z) in results {
                table.insert((x, y), z);
            }
        }
        self.filled[k as usize] = true;
        Ok(())
    }

    /// Fills every layer with the same composition rule.
    pub fn fill_all<F>(&mut self, compose: F) -> Result<()>
    where
        F: Fn(&OmegaCat, u32, CellRef, CellRef) -> Result<CellRef> + Sync,
    {
        for k in 1..=self.cat.truncation {
            self.fill_layer(k, &compose)?;
        }
        Ok(())
    }

    /// The category as built so far (tables above the last filled layer are empty).
    pub fn partial(&self) -> &OmegaCat {
        &self.cat
    }

    pub fn finish(self) -> Result<OmegaCat> {
        if self.pushed != self.cat.truncation as usize + 1 {
            return Err(Error::Malformed(format!(
                "{} of {} layers pushed",
                self.pushed,
                self.cat.truncation + 1
            )));
        }
        if let Some(k) = (1..=self.cat.truncation).find(|&k| !self.filled[k as usize]) {
            return Err(Error::Malformed(format!("layer {k} composition never filled")));
        }
        Ok(self.cat)
    }

    /// Installs raw tables without checking them; used by the JSON importer
    /// so that a corrupted table survives to be reported by the axiom checker.
    pub(crate) fn install_table(&mut self, k: u32, n: u32, entries: Vec<(u32, u32, u32)>) {
        let table = &mut self.cat.layers[k as usize].comp[n as usize];
        for (x, y, z) in entries {
            table.insert((x, y), z);
        }
        self.filled[k as usize] = true;
    }
}
