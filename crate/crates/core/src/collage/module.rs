use std::sync::Arc;

use crate::error::{Error, Result};
use crate::omega::{terminal, CellRef, OmegaCat};
use crate::slice::{Bislice, Lax};

/// Which side of a collage, if any, is the adjoined object `⋆`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sides {
    /// A right module over the left side; the right side is `⋆`.
    Right,
    /// A left module over the right side; the left side is `⋆`.
    Left,
    Both,
}

/// A bimodule `M : U^op × V → ωCat`, presented by finite hom ω-categories
/// `M(u, v)` and the two actions.
///
/// A `d`-cell of `M(u, v)` acts with `(d+1)`-cells of `U` and `V`:
/// `act_right(m, h)` for `h : u' → u` lies in `M(u', v)` and
/// `act_left(k, m)` for `k : v → v'` lies in `M(u, v')`.
pub trait Module: Sync {
    fn sides(&self) -> Sides;
    fn left(&self) -> &Arc<OmegaCat>;
    fn right(&self) -> &Arc<OmegaCat>;
    fn hom(&self, u: u32, v: u32) -> &OmegaCat;
    fn act_right(&self, u: u32, v: u32, m: CellRef, h: CellRef) -> Result<CellRef>;
    fn act_left(&self, u: u32, v: u32, k: CellRef, m: CellRef) -> Result<CellRef>;
}

fn trivial_action(star: &OmegaCat, k: CellRef, m: CellRef) -> Result<CellRef> {
    if k.dim != m.dim + 1 || !star.is_identity(k) {
        return Err(Error::ActionMismatch(format!("{} does not act on a {}-cell", star.tag(k), m.dim)));
    }
    Ok(m)
}

/// The right module `(−)/X` whose collage is the cone `s(X)`.
pub struct ConeModule {
    x: Arc<OmegaCat>,
    star: Arc<OmegaCat>,
    coslices: Vec<Lax>,
}

impl ConeModule {
    pub fn new(x: Arc<OmegaCat>) -> Result<Self> {
        let coslices = x.objects().map(|a| Lax::coslice(&x, a)).collect::<Result<_>>()?;
        Ok(ConeModule {
            x,
            star: Arc::new(terminal()),
            coslices,
        })
    }

    pub fn coslice(&self, a: u32) -> &Lax {
        &self.coslices[a as usize]
    }
}

impl Module for ConeModule {
    fn sides(&self) -> Sides {
        Sides::Right
    }

    fn left(&self) -> &Arc<OmegaCat> {
        &self.x
    }

    fn right(&self) -> &Arc<OmegaCat> {
        &self.star
    }

    fn hom(&self, u: u32, _: u32) -> &OmegaCat {
        self.coslices[u as usize].cat()
    }

    fn act_right(&self, u: u32, _: u32, m: CellRef, h: CellRef) -> Result<CellRef> {
        let u2 = self.x.src_at(h, 0).idx;
        self.coslices[u as usize].act(m, h, &self.coslices[u2 as usize])
    }

    fn act_left(&self, _: u32, _: u32, k: CellRef, m: CellRef) -> Result<CellRef> {
        trivial_action(&self.star, k, m)
    }
}

/// The left module `X/(−)` whose collage is `s̄(X)`.
pub struct ConeOverModule {
    x: Arc<OmegaCat>,
    star: Arc<OmegaCat>,
    slices: Vec<Lax>,
}

impl ConeOverModule {
    pub fn new(x: Arc<OmegaCat>) -> Result<Self> {
        let slices = x.objects().map(|b| Lax::slice(&x, b)).collect::<Result<_>>()?;
        Ok(ConeOverModule {
            x,
            star: Arc::new(terminal()),
            slices,
        })
    }

    pub fn slice(&self, b: u32) -> &Lax {
        &self.slices[b as usize]
    }
}

impl Module for ConeOverModule {
    fn sides(&self) -> Sides {
        Sides::Left
    }

    fn left(&self) -> &Arc<OmegaCat> {
        &self.star
    }

    fn right(&self) -> &Arc<OmegaCat> {
        &self.x
    }

    fn hom(&self, _: u32, v: u32) -> &OmegaCat {
        self.slices[v as usize].cat()
    }

    fn act_right(&self, _: u32, _: u32, m: CellRef, h: CellRef) -> Result<CellRef> {
        trivial_action(&self.star, h, m)
    }

    fn act_left(&self, _: u32, v: u32, k: CellRef, m: CellRef) -> Result<CellRef> {
        let v2 = self.x.tgt_at(k, 0).idx;
        self.slices[v as usize].act(m, k, &self.slices[v2 as usize])
    }
}

/// The bimodule `(−)/X/(−)` whose collage is the cylinder `c(X)`.
pub struct CylinderModule {
    x: Arc<OmegaCat>,
    bislices: Vec<Vec<Bislice>>,
}

impl CylinderModule {
    pub fn new(x: Arc<OmegaCat>) -> Result<Self> {
        let coslices: Vec<Arc<Lax>> = x
            .objects()
            .map(|a| Lax::coslice(&x, a).map(Arc::new))
            .collect::<Result<_>>()?;
        let slices: Vec<Arc<Lax>> = x
            .objects()
            .map(|b| Lax::slice(&x, b).map(Arc::new))
            .collect::<Result<_>>()?;
        let bislices = coslices
            .iter()
            .map(|co| {
                slices
                    .iter()
                    .map(|sl| Bislice::new(co.clone(), sl.clone()))
                    .collect::<Result<_>>()
            })
            .collect::<Result<_>>()?;
        Ok(CylinderModule { x, bislices })
    }

    pub fn bislice(&self, a: u32, b: u32) -> &Bislice {
        &self.bislices[a as usize][b as usize]
    }
}

impl Module for CylinderModule {
    fn sides(&self) -> Sides {
        Sides::Both
    }

    fn left(&self) -> &Arc<OmegaCat> {
        &self.x
    }

    fn right(&self) -> &Arc<OmegaCat> {
        &self.x
    }

    fn hom(&self, u: u32, v: u32) -> &OmegaCat {
        self.bislices[u as usize][v as usize].cat()
    }

    fn act_right(&self, u: u32, v: u32, m: CellRef, h: CellRef) -> Result<CellRef> {
        let u2 = self.x.src_at(h, 0).idx;
        self.bislice(u, v).act_right(m, h, self.bislice(u2, v))
    }

    fn act_left(&self, u: u32, v: u32, k: CellRef, m: CellRef) -> Result<CellRef> {
        let v2 = self.x.tgt_at(k, 0).idx;
        self.bislice(u, v).act_left(m, k, self.bislice(u, v2))
    }
}
