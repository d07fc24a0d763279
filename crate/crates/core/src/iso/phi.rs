//! The comparison maps `s(O(n)) → O(n+1)` and `c(Q(n)) → Q(n+1)`, and their
//! iterates from the terminal ω-category.

use std::sync::Arc;

use super::faces::{eta, vee};
use crate::collage::{cone_under, cylinder, Collage, CollageCell, ConeModule, CylinderModule};
use crate::error::{Error, Result};
use crate::omega::{terminal, CellMap, CellRef, OmegaCat};
use crate::parity::{Generator, ParityCategory, ParitySet, Sign, SimplexGen};

/// An explicit map from a collage into an enumerated parity category.
pub struct Comparison<M> {
    pub collage: Collage<M>,
    pub target: ParityCategory,
    pub map: CellMap,
}

/// Sends each cell to the cell of `target` with the computed top whose
/// boundary is the image of its boundary; fails if no such cell exists.
fn transport(
    source: &Arc<OmegaCat>,
    target: &ParityCategory,
    top: impl Fn(CellRef) -> Result<ParitySet>,
) -> Result<CellMap> {
    let mut assignment: Vec<Vec<CellRef>> = Vec::new();
    for d in 0..=source.truncation() {
        let row = source
            .cells(d)
            .map(|c| {
                let t = top(c)?;
                let image = if d == 0 {
                    target.object(&t)
                } else {
                    let prev = &assignment[d as usize - 1];
                    let (s, g) = (source.src(c), source.tgt(c));
                    target.find(&t, prev[s.idx as usize], prev[g.idx as usize])
                };
                image.ok_or_else(|| {
                    Error::Malformed(format!("no cell {t} of the target lies over {}", source.tag(c)))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        assignment.push(row);
    }
    CellMap::new(source.clone(), target.cat().clone(), assignment)
}

fn image_top(base: &ParityCategory, rho: &CellMap, c: CellRef) -> ParitySet {
    base.top(rho.apply(c))
}

/// Extends `ρ : X → O(n)` to `s(X) → O(n+1)`: cells of `X` keep their tops,
/// `⋆ ↦ {(n+1)}` and `(x, x̄) ↦ x̄ ∪ x^∨`.
pub fn phi_cone(
    cone: &Collage<ConeModule>,
    rho: &CellMap,
    base: &ParityCategory,
    target: &ParityCategory,
) -> Result<CellMap> {
    let n = base.n();
    let apex = ParitySet::new(0, [Generator::Simplex(SimplexGen::new(vec![n + 1])?)])?;
    transport(cone.cat(), target, |c| {
        Ok(match cone.cell(c) {
            CollageCell::Left(y) => image_top(base, rho, y),
            CollageCell::Star(_) if c.dim == 0 => apex.clone(),
            CollageCell::Star(_) => ParitySet::empty(c.dim),
            CollageCell::Module { u, cell, .. } => {
                let lax = cone.module().coslice(u);
                let x = image_top(base, rho, lax.base(cell));
                image_top(base, rho, lax.cert(cell)).union(&vee(&x, n))
            }
            CollageCell::Right(_) => unreachable!("cones have no right region"),
        })
    })
}

/// Extends `ρ : X → Q(n)` to `c(X) → Q(n+1)`: `(−)⊖` on the left copy,
/// `(−)⊕` on the right copy and `(x, x̄, x̂) ↦ x̄⊖ ∪ x⊙ ∪ x̂⊕`.
pub fn phi_cylinder(
    cyl: &Collage<CylinderModule>,
    rho: &CellMap,
    base: &ParityCategory,
    target: &ParityCategory,
) -> Result<CellMap> {
    transport(cyl.cat(), target, |c| {
        Ok(match cyl.cell(c) {
            CollageCell::Left(y) => eta(&image_top(base, rho, y), Sign::Minus),
            CollageCell::Right(y) => eta(&image_top(base, rho, y), Sign::Plus),
            CollageCell::Module { u, v, cell } => {
                let (x, xbar, xhat) = cyl.module().bislice(u, v).triple(cell);
                eta(&image_top(base, rho, xbar), Sign::Minus)
                    .union(&eta(&image_top(base, rho, x), Sign::Zero))
                    .union(&eta(&image_top(base, rho, xhat), Sign::Plus))
            }
            CollageCell::Star(_) => unreachable!("cylinders have no apex"),
        })
    })
}

/// `φ : s(O(n)) → O(n+1)`.
pub fn phi_oriental(n: u32) -> Result<Comparison<ConeModule>> {
    let base = ParityCategory::oriental(n)?;
    let target = ParityCategory::oriental(n + 1)?;
    let collage = cone_under(base.cat().clone())?;
    let map = phi_cone(&collage, &CellMap::identity(base.cat().clone()), &base, &target)?;
    Ok(Comparison { collage, target, map })
}

/// `φ : c(Q(n)) → Q(n+1)`.
pub fn phi_cube(n: u32) -> Result<Comparison<CylinderModule>> {
    let base = ParityCategory::cube(n)?;
    let target = ParityCategory::cube(n + 1)?;
    let collage = cylinder(base.cat().clone())?;
    let map = phi_cylinder(&collage, &CellMap::identity(base.cat().clone()), &base, &target)?;
    Ok(Comparison { collage, target, map })
}

/// The composite comparison `s^n(1) → O(n)` (`cube == false`) or
/// `c^n(1) → Q(n)`, built one cone or cylinder at a time.
pub fn comparison_chain(cube: bool, n: u32) -> Result<(CellMap, ParityCategory)> {
    let make = |k| if cube { ParityCategory::cube(k) } else { ParityCategory::oriental(k) };
    let mut base = make(0)?;
    let start = Arc::new(terminal());
    let mut rho = CellMap::new(start, base.cat().clone(), vec![vec![CellRef::new(0, 0)]])?;
    for k in 0..n {
        let target = make(k + 1)?;
        let x = rho.source().clone();
        rho = if cube {
            phi_cylinder(&cylinder(x)?, &rho, &base, &target)?
        } else {
            phi_cone(&cone_under(x)?, &rho, &base, &target)?
        };
        base = target;
    }
    Ok((rho, base))
}
