use std::collections::HashMap;
use std::sync::Arc;

use super::module::{Module, Sides};
use crate::error::{Error, Result};
use crate::omega::{CatBuilder, CellRef, NewCell, OmegaCat};
use crate::tag::Tag;

/// Where a collage cell comes from. `Star` cells are those of the terminal
/// side of a one-sided collage; module cells sit one dimension below their
/// collage dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CollageCell {
    Left(CellRef),
    Right(CellRef),
    Star(CellRef),
    Module { u: u32, v: u32, cell: CellRef },
}

impl CollageCell {
    pub fn region(&self) -> &'static str {
        match self {
            CollageCell::Left(_) => "left",
            CollageCell::Right(_) => "right",
            CollageCell::Star(_) => "star",
            CollageCell::Module { .. } => "module",
        }
    }
}

/// The collage of a bimodule: objects `U_0 + V_0`, homs `U(u, u')`,
/// `V(v, v')`, `M(u, v)` from `u` to `v`, and nothing from `V` back to `U`.
pub struct Collage<M> {
    module: M,
    cat: Arc<OmegaCat>,
    cells: Vec<Vec<CollageCell>>,
    index: Vec<HashMap<CollageCell, u32>>,
}

impl<M: Module> Collage<M> {
    pub fn new(module: M) -> Result<Self> {
        let (u, v) = (module.left().clone(), module.right().clone());
        let homs: Vec<(u32, u32)> = u
            .objects()
            .flat_map(|a| v.objects().map(move |b| (a.idx, b.idx)))
            .collect();
        let hom_top = homs.iter().map(|&(a, b)| module.hom(a, b).truncation()).max();
        let truncation = u
            .truncation()
            .max(v.truncation())
            .max(hom_top.map_or(0, |t| t + 1));

        let mut builder = CatBuilder::new(truncation);
        let mut cells: Vec<Vec<CollageCell>> = Vec::new();
        let mut index: Vec<HashMap<CollageCell, u32>> = Vec::new();
        for d in 0..=truncation {
            let mut raw: Vec<CollageCell> = u.cells(d)
                .map(|c| left_of(&module, c))
                .chain(v.cells(d).map(|c| right_of(&module, c))).collect();
            if d > 0 {
                for &(a, b) in &homs {
                    raw.extend(
                        module
                            .hom(a, b)
                            .cells(d - 1)
                            .map(|cell| CollageCell::Module { u: a, v: b, cell }),
                    );
                }
            }
            let new_cells = raw
                .iter()
                .map(|&c| {
                    let tag = cell_tag(&module, c);
                    if d == 0 {
                        return Ok(NewCell::object(tag));
                    }
                    let prev = &index[d as usize - 1];
                    let look = |e: CollageCell| {
                        prev.get(&e)
                            .copied()
                            .ok_or_else(|| Error::Malformed(format!("collage boundary of {tag} is missing")))
                    };
                    let (s, t) = boundary(&module, c);
                    Ok(NewCell {
                        src: look(s)?,
                        tgt: look(t)?,
                        identity_of: identity_of(&module, c).map(look).transpose()?,
                        tag,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            let perm = builder.push_layer(new_cells)?;
            let mut order = vec![CollageCell::Left(CellRef::new(0, 0)); raw.len()];
            let mut idx = HashMap::with_capacity(raw.len());
            for (old, &new) in perm.iter().enumerate() {
                order[new as usize] = raw[old];
                idx.insert(raw[old], new);
            }
            cells.push(order);
            index.push(idx);
        }
        builder.fill_all(|_, n, p, q| {
            let z = compose(&module, n, cells[p.dim as usize][p.idx as usize], cells[q.dim as usize][q.idx as usize])?;
            index[p.dim as usize]
                .get(&z)
                .map(|&i| CellRef::new(p.dim, i))
                .ok_or_else(|| Error::ActionMismatch(format!("composite {z:?} is not a collage cell")))
        })?;
        let cat = Arc::new(builder.finish()?);
        Ok(Collage {
            module,
            cat,
            cells,
            index,
        })
    }

    pub fn module(&self) -> &M {
        &self.module
    }

    pub fn cat(&self) -> &Arc<OmegaCat> {
        &self.cat
    }

    /// Origin of a registered collage cell.
    pub fn cell(&self, c: CellRef) -> CollageCell {
        self.cells[c.dim as usize][c.idx as usize]
    }

    pub fn find(&self, dim: u32, c: CollageCell) -> Option<CellRef> {
        self.index.get(dim as usize)?.get(&c).map(|&i| CellRef::new(dim, i))
    }

    /// The image of a cell of the left side (or of `⋆` in `s̄(X)`).
    pub fn left(&self, c: CellRef) -> Option<CellRef> {
        self.find(c.dim, left_of(&self.module, c))
    }

    /// The image of a cell of the right side (or of `⋆` in `s(X)`).
    pub fn right(&self, c: CellRef) -> Option<CellRef> {
        self.find(c.dim, right_of(&self.module, c))
    }

    /// The object `⋆` of a one-sided collage.
    pub fn star(&self) -> Option<CellRef> {
        if self.module.sides() == Sides::Both {
            return None;
        }
        self.find(0, CollageCell::Star(CellRef::new(0, 0)))
    }
}

fn cell_tag<M: Module>(module: &M, c: CollageCell) -> Tag {
    match c {
        CollageCell::Left(x) => Tag::node("left", vec![module.left().tag(x).into_owned()]),
        CollageCell::Right(x) => Tag::node("right", vec![module.right().tag(x).into_owned()]),
        CollageCell::Star(x) => {
            let side = if module.sides() == Sides::Left { module.left() } else { module.right() };
            Tag::node("star", vec![side.tag(x).into_owned()])
        }
        CollageCell::Module { u, v, cell } => Tag::node(
            "module",
            vec![
                module.left().tag(CellRef::new(0, u)).into_owned(),
                module.right().tag(CellRef::new(0, v)).into_owned(),
                module.hom(u, v).tag(cell).into_owned(),
            ],
        ),
    }
}

fn left_of<M: Module>(module: &M, c: CellRef) -> CollageCell {
    if module.sides() == Sides::Left {
        CollageCell::Star(c)
    } else {
        CollageCell::Left(c)
    }
}

fn right_of<M: Module>(module: &M, c: CellRef) -> CollageCell {
    if module.sides() == Sides::Right {
        CollageCell::Star(c)
    } else {
        CollageCell::Right(c)
    }
}

fn is_left<M: Module>(module: &M, c: CollageCell) -> Option<CellRef> {
    match c {
        CollageCell::Left(x) => Some(x),
        CollageCell::Star(x) if module.sides() == Sides::Left => Some(x),
        _ => None,
    }
}

fn is_right<M: Module>(module: &M, c: CollageCell) -> Option<CellRef> {
    match c {
        CollageCell::Right(x) => Some(x),
        CollageCell::Star(x) if module.sides() == Sides::Right => Some(x),
        _ => None,
    }
}

fn boundary<M: Module>(module: &M, c: CollageCell) -> (CollageCell, CollageCell) {
    if let Some(x) = is_left(module, c) {
        let l = module.left();
        return (left_of(module, l.src(x)), left_of(module, l.tgt(x)));
    }
    if let Some(x) = is_right(module, c) {
        let r = module.right();
        return (right_of(module, r.src(x)), right_of(module, r.tgt(x)));
    }
    let CollageCell::Module { u, v, cell } = c else { unreachable!() };
    if cell.dim == 0 {
        return (left_of(module, CellRef::new(0, u)), right_of(module, CellRef::new(0, v)));
    }
    let m = module.hom(u, v);
    (
        CollageCell::Module { u, v, cell: m.src(cell) },
        CollageCell::Module { u, v, cell: m.tgt(cell) },
    )
}

fn identity_of<M: Module>(module: &M, c: CollageCell) -> Option<CollageCell> {
    if let Some(x) = is_left(module, c) {
        return module.left().identity_of(x).map(|y| left_of(module, y));
    }
    if let Some(x) = is_right(module, c) {
        return module.right().identity_of(x).map(|y| right_of(module, y));
    }
    let CollageCell::Module { u, v, cell } = c else { unreachable!() };
    module
        .hom(u, v)
        .identity_of(cell)
        .map(|cell| CollageCell::Module { u, v, cell })
}

fn compose<M: Module>(module: &M, n: u32, x: CollageCell, y: CollageCell) -> Result<CollageCell> {
    if let (Some(a), Some(b)) = (is_left(module, x), is_left(module, y)) {
        return Ok(left_of(module, module.left().compose(n, a, b)?));
    }
    if let (Some(a), Some(b)) = (is_right(module, x), is_right(module, y)) {
        return Ok(right_of(module, module.right().compose(n, a, b)?));
    }
    match (x, y) {
        (CollageCell::Module { u, v, cell }, _) if n == 0 => {
            let h = is_left(module, y).ok_or_else(|| not_composable(n))?;
            let u2 = module.left().src_at(h, 0).idx;
            let cell = module.act_right(u, v, cell, h)?;
            Ok(CollageCell::Module { u: u2, v, cell })
        }
        (_, CollageCell::Module { u, v, cell }) if n == 0 => {
            let k = is_right(module, x).ok_or_else(|| not_composable(n))?;
            let v2 = module.right().tgt_at(k, 0).idx;
            let cell = module.act_left(u, v, k, cell)?;
            Ok(CollageCell::Module { u, v: v2, cell })
        }
        (CollageCell::Module { u, v, cell: a }, CollageCell::Module { u: u2, v: v2, cell: b })
            if (u, v) == (u2, v2) =>
        {
            let cell = module.hom(u, v).compose(n - 1, a, b)?;
            Ok(CollageCell::Module { u, v, cell })
        }
        _ => Err(not_composable(n)),
    }
}

fn not_composable(n: u32) -> Error {
    Error::NotComposable {
        level: n,
        detail: "cells lie in different regions".into(),
    }
}
