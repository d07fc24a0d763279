use std::collections::HashMap;
use std::sync::Arc;

use super::lax::Lax;
use crate::error::{Error, Result};
use crate::omega::{pullback, relabel, CellRef, OmegaCat};
use crate::tag::Tag;

/// The lax bislice `a/X/b = a/X ×_X X/b`; a cell is a coslice cell and a
/// slice cell over the same base.
#[derive(Clone, Debug)]
pub struct Bislice {
    cat: Arc<OmegaCat>,
    coslice: Arc<Lax>,
    slice: Arc<Lax>,
    parts: Vec<Vec<(CellRef, CellRef)>>,
    index: Vec<HashMap<(CellRef, CellRef), u32>>,
}

impl Bislice {
    pub fn new(coslice: Arc<Lax>, slice: Arc<Lax>) -> Result<Bislice> {
        let (cat, p1, p2) = pullback(&coslice.projection(), &slice.projection())?;
        let cat = relabel(&cat, |t| match t {
            Tag::Node(_, c) => Tag::Node("bislice".into(), c.clone()),
            other => other.clone(),
        })?;
        let parts: Vec<Vec<(CellRef, CellRef)>> = (0..=cat.truncation())
            .map(|d| {
                p1.assignment(d)
                    .iter()
                    .copied()
                    .zip(p2.assignment(d).iter().copied())
                    .collect()
            })
            .collect();
        let index = parts
            .iter()
            .map(|row| row.iter().enumerate().map(|(i, &pq)| (pq, i as u32)).collect())
            .collect();
        Ok(Bislice {
            cat: Arc::new(cat),
            coslice,
            slice,
            parts,
            index,
        })
    }

    pub fn build(x: &Arc<OmegaCat>, a: CellRef, b: CellRef) -> Result<Bislice> {
        Bislice::new(Arc::new(Lax::coslice(x, a)?), Arc::new(Lax::slice(x, b)?))
    }

    pub fn cat(&self) -> &Arc<OmegaCat> {
        &self.cat
    }

    pub fn coslice(&self) -> &Arc<Lax> {
        &self.coslice
    }

    pub fn slice(&self) -> &Arc<Lax> {
        &self.slice
    }

    /// The coslice and slice components of a cell.
    pub fn parts(&self, c: CellRef) -> (CellRef, CellRef) {
        let top = self.cat.truncation();
        if c.dim <= top {
            self.parts[c.dim as usize][c.idx as usize]
        } else {
            let (p, q) = self.parts[top as usize][c.idx as usize];
            (self.coslice.cat().lift(p, c.dim), self.slice.cat().lift(q, c.dim))
        }
    }

    /// `(x, x̄, x̂)`.
    pub fn triple(&self, c: CellRef) -> (CellRef, CellRef, CellRef) {
        let (p, q) = self.parts(c);
        (self.coslice.base(p), self.coslice.cert(p), self.slice.cert(q))
    }

    pub fn find(&self, p: CellRef, q: CellRef) -> Option<CellRef> {
        let top = self.cat.truncation();
        if p.dim > top {
            let under = self.find(self.coslice.cat().identity_of(p)?, self.slice.cat().identity_of(q)?)?;
            return Some(self.cat.identity(under));
        }
        self.index[p.dim as usize].get(&(p, q)).map(|&i| CellRef::new(p.dim, i))
    }

    fn lookup(&self, p: CellRef, q: CellRef) -> Result<CellRef> {
        self.find(p, q)
            .ok_or_else(|| Error::ActionMismatch("action left the bislice".into()))
    }

    /// Right action of `h : a' → a`, inherited from the coslice.
    pub fn act_right(&self, c: CellRef, h: CellRef, target: &Bislice) -> Result<CellRef> {
        let (p, q) = self.parts(c);
        let p2 = self.coslice.act(p, h, &target.coslice)?;
        target.lookup(p2, q)
    }

    /// Left action of `k : b → b'`, inherited from the slice.
    pub fn act_left(&self, c: CellRef, k: CellRef, target: &Bislice) -> Result<CellRef> {
        let (p, q) = self.parts(c);
        let q2 = self.slice.act(q, k, &target.slice)?;
        target.lookup(p, q2)
    }
}
