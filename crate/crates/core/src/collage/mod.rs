//! Collages of modules over ω-categories, and the cone and cylinder
//! constructions built from the lax slice modules.
//!
//! `s(X)` adjoins a terminal object `⋆` under `X` with `hom(x, ⋆) = x/X`,
//! `s̄(X)` adjoins one over `X` with `hom(⋆, b) = X/b`, and `c(X)` glues two
//! copies of `X` along `hom(a, b) = a/X/b`.

mod build;
mod module;
pub mod suites;

use std::sync::Arc;

pub use build::{Collage, CollageCell};
pub use module::{ConeModule, ConeOverModule, CylinderModule, Module, Sides};

use crate::error::{Error, Result};
use crate::omega::{terminal, OmegaCat};

/// `s(X)`.
pub fn cone_under(x: Arc<OmegaCat>) -> Result<Collage<ConeModule>> {
    Collage::new(ConeModule::new(x)?)
}

/// `s̄(X)`.
pub fn cone_over(x: Arc<OmegaCat>) -> Result<Collage<ConeOverModule>> {
    Collage::new(ConeOverModule::new(x)?)
}

/// `c(X)`.
pub fn cylinder(x: Arc<OmegaCat>) -> Result<Collage<CylinderModule>> {
    Collage::new(CylinderModule::new(x)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Construction {
    Cone,
    Cylinder,
}

/// Default cap on the number of registered cells of an iterate.
pub const DEFAULT_CELL_BUDGET: usize = 2_000_000;

/// `s^n(1)` or `c^n(1)`.
pub fn iterate(construction: Construction, n: u32) -> Result<Arc<OmegaCat>> {
    iterate_with_budget(construction, n, DEFAULT_CELL_BUDGET)
}

pub fn iterate_with_budget(construction: Construction, n: u32, budget: usize) -> Result<Arc<OmegaCat>> {
    let mut x = Arc::new(terminal());
    for step in 0..n {
        let size: usize = (0..=x.truncation()).map(|d| x.cell_count(d)).sum();
        if size > budget {
            return Err(Error::BudgetExceeded(format!(
                "{size} cells after {step} steps exceed the budget of {budget}"
            )));
        }
        x = match construction {
            Construction::Cone => cone_under(x)?.cat().clone(),
            Construction::Cylinder => cylinder(x)?.cat().clone(),
        };
    }
    Ok(x)
}
