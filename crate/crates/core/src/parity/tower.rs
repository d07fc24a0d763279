use std::fmt;

use super::set::ParitySet;
use crate::error::{Error, Result};
use crate::tag::Tag;

/// A cell given by its top set and its full boundary tower:
/// `boundaries[k] = (μ_k, π_k)` for `k < dim`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CellTower {
    pub top: ParitySet,
    pub boundaries: Vec<(ParitySet, ParitySet)>,
}

impl CellTower {
    pub fn object(top: ParitySet) -> Self {
        CellTower {
            top,
            boundaries: Vec::new(),
        }
    }

    pub fn dim(&self) -> u32 {
        self.boundaries.len() as u32
    }

    pub fn is_identity(&self) -> bool {
        self.dim() > 0 && self.top.is_empty()
    }

    /// `s_k` as a tower.
    pub fn source(&self, k: u32) -> CellTower {
        let k = k as usize;
        CellTower {
            top: self.boundaries[k].0.clone(),
            boundaries: self.boundaries[..k].to_vec(),
        }
    }

    pub fn target(&self, k: u32) -> CellTower {
        let k = k as usize;
        CellTower {
            top: self.boundaries[k].1.clone(),
            boundaries: self.boundaries[..k].to_vec(),
        }
    }

    /// The identity on this cell, one dimension up.
    pub fn identity(&self) -> CellTower {
        let mut boundaries = self.boundaries.clone();
        boundaries.push((self.top.clone(), self.top.clone()));
        CellTower {
            top: ParitySet::empty(self.top.dim() + 1),
            boundaries,
        }
    }

    pub fn lift(&self, dim: u32) -> CellTower {
        let mut t = self.clone();
        while t.dim() < dim {
            t = t.identity();
        }
        t
    }

    /// Every level is well-formed and moves its source to its target;
    /// 0-dimensional parts are single vertices.
    pub fn is_valid(&self) -> bool {
        let single = |s: &ParitySet| s.dim() == 0 && s.len() == 1;
        if self.dim() == 0 {
            return single(&self.top);
        }
        let (m0, p0) = &self.boundaries[0];
        if !single(m0) || !single(p0) {
            return false;
        }
        for k in 1..self.boundaries.len() {
            let (mb, pb) = &self.boundaries[k - 1];
            for side in [&self.boundaries[k].0, &self.boundaries[k].1] {
                if !side.well_formed() || !side.moves(mb, pb) {
                    return false;
                }
            }
        }
        let (m, p) = self.boundaries.last().expect("positive dimension");
        self.top.well_formed() && self.top.moves(m, p)
    }

    pub fn to_tag(&self) -> Tag {
        let mut children = vec![self.top.to_tag()];
        for (m, p) in self.boundaries.iter().rev() {
            children.push(m.to_tag());
            children.push(p.to_tag());
        }
        Tag::node("cell", children)
    }
}

impl fmt::Display for CellTower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.top)?;
        if let Some((m, p)) = self.boundaries.last() {
            write!(f, ": {m} -> {p}")?;
        }
        Ok(())
    }
}

/// `x ∘_n y`, defined when `s_n(x) = t_n(y)` after lifting the lower cell.
///
/// The top is the union of the tops; boundaries above `n` are pairwise
/// unions, the `n`-boundary is `(s_n y, t_n x)` and lower ones are shared.
pub fn compose_towers(n: u32, x: &CellTower, y: &CellTower) -> Result<CellTower> {
    let d = x.dim().max(y.dim());
    if n >= d {
        return Err(Error::DimensionMismatch {
            level: n,
            left: x.dim(),
            right: y.dim(),
        });
    }
    let (x, y) = (x.lift(d), y.lift(d));
    if x.source(n) != y.target(n) {
        return Err(Error::NotComposable {
            level: n,
            detail: format!("s_{n} of {x} differs from t_{n} of {y}"),
        });
    }
    let n = n as usize;
    let boundaries = (0..d as usize)
        .map(|k| {
            let (xm, xp) = &x.boundaries[k];
            let (ym, yp) = &y.boundaries[k];
            if k > n {
                (xm.union(ym), xp.union(yp))
            } else if k == n {
                (ym.clone(), xp.clone())
            } else {
                (xm.clone(), xp.clone())
            }
        })
        .collect();
    Ok(CellTower {
        top: x.top.union(&y.top),
        boundaries,
    })
}
