use std::sync::Arc;

use super::{CellRef, OmegaCat};
use crate::error::{Error, Result};

/// A dimension-preserving assignment of cells between two ω-categories.
///
/// Only the registered cells of the source are stored; formal identities above
/// the source truncation are sent to the matching identities in the target.
#[derive(Clone, Debug)]
pub struct CellMap {
    source: Arc<OmegaCat>,
    target: Arc<OmegaCat>,
    assignment: Vec<Vec<CellRef>>,
}

impl CellMap {
    pub fn new(source: Arc<OmegaCat>, target: Arc<OmegaCat>, assignment: Vec<Vec<CellRef>>) -> Result<Self> {
        if assignment.len() != source.truncation() as usize + 1 {
            return Err(Error::Malformed(format!(
                "assignment covers {} dimensions, source has {}",
                assignment.len(),
                source.truncation() + 1
            )));
        }
        for (d, row) in assignment.iter().enumerate() {
            if row.len() != source.cell_count(d as u32) {
                return Err(Error::Malformed(format!("assignment of {d}-cells is not total")));
            }
            if let Some(c) = row.iter().find(|c| c.dim != d as u32 || !target.contains(**c)) {
                return Err(Error::UnknownCell(format!("{c} as the image of a {d}-cell")));
            }
        }
        Ok(CellMap {
            source,
            target,
            assignment,
        })
    }

    pub fn identity(x: Arc<OmegaCat>) -> Self {
        let assignment = (0..=x.truncation()).map(|d| x.cells(d).collect()).collect();
        CellMap {
            source: x.clone(),
            target: x,
            assignment,
        }
    }

    pub fn source(&self) -> &Arc<OmegaCat> {
        &self.source
    }

    pub fn target(&self) -> &Arc<OmegaCat> {
        &self.target
    }

    pub fn assignment(&self, dim: u32) -> &[CellRef] {
        &self.assignment[dim as usize]
    }

    pub fn apply(&self, c: CellRef) -> CellRef {
        let top = self.source.truncation();
        if c.dim <= top {
            self.assignment[c.dim as usize][c.idx as usize]
        } else {
            let base = self.assignment[top as usize][c.idx as usize];
            self.target.lift(base, c.dim)
        }
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &CellMap) -> Result<CellMap> {
        if !Arc::ptr_eq(&self.target, &other.source) {
            return Err(Error::TargetMismatch);
        }
        let assignment = self
            .assignment
            .iter()
            .map(|row| row.iter().map(|&c| other.apply(c)).collect())
            .collect();
        Ok(CellMap {
            source: self.source.clone(),
            target: other.target.clone(),
            assignment,
        })
    }

    /// Replaces the image of one cell; used to build deliberately broken maps.
    pub fn set(&mut self, c: CellRef, image: CellRef) {
        self.assignment[c.dim as usize][c.idx as usize] = image;
    }
}
