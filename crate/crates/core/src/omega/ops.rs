//! Generic constructions on ω-categories: terminal object, duals, homs and pullbacks.

use std::collections::HashMap;
use std::sync::Arc;

use super::{CatBuilder, CellMap, CellRef, NewCell, OmegaCat};
use crate::error::{Error, Result};
use crate::tag::Tag;

/// The terminal ω-category: one cell in every dimension.
pub fn terminal() -> OmegaCat {
    let mut b = CatBuilder::new(0);
    b.push_layer(vec![NewCell::object(Tag::atom("*"))])
        .expect("single object");
    b.finish().expect("no compositions to fill")
}

/// `X^op`: sources and targets swapped in every dimension, so that
/// `x ∘_n y` in the dual is `y ∘_n x` in `X`.
pub fn dual(x: &OmegaCat) -> OmegaCat {
    let mut out = x.clone();
    for layer in &mut out.layers {
        std::mem::swap(&mut layer.src, &mut layer.tgt);
        for table in &mut layer.comp {
            *table = table.iter().map(|(&(a, b), &z)| ((b, a), z)).collect();
        }
        layer.by_boundary = layer
            .by_boundary
            .drain()
            .map(|((s, t), v)| ((t, s), v))
            .collect();
    }
    out
}

/// Rebuilds a category from chosen cells of another, one list per dimension.
/// `origin[d]` lists the cells of `x` becoming the `d`-cells of the result and
/// `tag` names each new cell.
fn restrict<T>(
    x: &OmegaCat,
    truncation: u32,
    origin: Vec<Vec<CellRef>>,
    tag: T,
    compose: impl Fn(u32, CellRef, CellRef) -> Result<CellRef> + Sync,
) -> Result<OmegaCat>
where
    T: Fn(CellRef) -> Tag,
{
    let mut b = CatBuilder::new(truncation);
    let mut index: Vec<HashMap<CellRef, u32>> = Vec::new();
    let mut ordered: Vec<Vec<CellRef>> = Vec::new();
    for (d, cells) in origin.into_iter().enumerate() {
        let new_cells = cells
            .iter()
            .map(|&c| {
                if d == 0 {
                    return Ok(NewCell::object(tag(c)));
                }
                let prev = &index[d - 1];
                let look = |e: CellRef| {
                    prev.get(&e)
                        .copied()
                        .ok_or_else(|| Error::Malformed(format!("boundary {} left the restriction", x.tag(e))))
                };
                Ok(NewCell {
                    tag: tag(c),
                    src: look(x.src(c))?,
                    tgt: look(x.tgt(c))?,
                    identity_of: x.identity_of(c).and_then(|e| prev.get(&e).copied()),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let perm = b.push_layer(new_cells)?;
        let mut order = vec![CellRef::new(0, 0); cells.len()];
        let mut idx = HashMap::with_capacity(cells.len());
        for (old, &new) in perm.iter().enumerate() {
            order[new as usize] = cells[old];
            idx.insert(cells[old], new);
        }
        ordered.push(order);
        index.push(idx);
    }
    b.fill_all(|_, n, p, q| {
        let z = compose(n, ordered[p.dim as usize][p.idx as usize], ordered[q.dim as usize][q.idx as usize])?;
        index[p.dim as usize]
            .get(&z)
            .map(|&i| CellRef::new(p.dim, i))
            .ok_or_else(|| Error::Malformed(format!("composite {} left the restriction", x.tag(z))))
    })?;
    b.finish()
}

/// `X(a, b)`: its `n`-cells are the `(n+1)`-cells of `X` from `a` to `b`.
pub fn hom(x: &OmegaCat, a: CellRef, b: CellRef) -> Result<OmegaCat> {
    for o in [a, b] {
        if o.dim != 0 || !x.contains(o) {
            return Err(Error::UnknownCell(o.to_string()));
        }
    }
    let truncation = x.truncation().saturating_sub(1);
    let origin = (0..=truncation)
        .map(|d| {
            x.cells(d + 1)
                .filter(|&c| x.src_at(c, 0) == a && x.tgt_at(c, 0) == b)
                .collect()
        })
        .collect();
    restrict(
        x,
        truncation,
        origin,
        |c| x.tag(c).into_owned(),
        |n, p, q| x.compose(n + 1, p, q),
    )
}

/// The pullback of `f: A → C` and `g: B → C`, with its two projections.
pub fn pullback(f: &CellMap, g: &CellMap) -> Result<(Arc<OmegaCat>, CellMap, CellMap)> {
    if !Arc::ptr_eq(f.target(), g.target()) {
        return Err(Error::TargetMismatch);
    }
    let (a, b) = (f.source(), g.source());
    let truncation = a.truncation().max(b.truncation());
    let mut builder = CatBuilder::new(truncation);
    let mut pairs: Vec<Vec<(CellRef, CellRef)>> = Vec::new();
    let mut index: Vec<HashMap<(CellRef, CellRef), u32>> = Vec::new();
    for d in 0..=truncation {
        let mut by_image: HashMap<CellRef, Vec<CellRef>> = HashMap::new();
        for c in b.cells(d) {
            by_image.entry(g.apply(c)).or_default().push(c);
        }
        let mut cells = Vec::new();
        for p in a.cells(d) {
            if let Some(qs) = by_image.get(&f.apply(p)) {
                cells.extend(qs.iter().map(|&q| (p, q)));
            }
        }
        let new_cells = cells
            .iter()
            .map(|&(p, q)| {
                let tag = Tag::node("pair", vec![a.tag(p).into_owned(), b.tag(q).into_owned()]);
                if d == 0 {
                    return NewCell::object(tag);
                }
                let prev = &index[d as usize - 1];
                let identity_of = match (a.identity_of(p), b.identity_of(q)) {
                    (Some(p0), Some(q0)) => prev.get(&(p0, q0)).copied(),
                    _ => None,
                };
                NewCell {
                    tag,
                    src: prev[&(a.src(p), b.src(q))],
                    tgt: prev[&(a.tgt(p), b.tgt(q))],
                    identity_of,
                }
            })
            .collect();
        let perm = builder.push_layer(new_cells)?;
        let mut order = vec![(CellRef::new(0, 0), CellRef::new(0, 0)); cells.len()];
        let mut idx = HashMap::with_capacity(cells.len());
        for (old, &new) in perm.iter().enumerate() {
            order[new as usize] = cells[old];
            idx.insert(cells[old], new);
        }
        pairs.push(order);
        index.push(idx);
    }
    builder.fill_all(|_, n, x, y| {
        let (p1, q1) = pairs[x.dim as usize][x.idx as usize];
        let (p2, q2) = pairs[y.dim as usize][y.idx as usize];
        let key = (a.compose(n, p1, p2)?, b.compose(n, q1, q2)?);
        Ok(CellRef::new(x.dim, index[x.dim as usize][&key]))
    })?;
    let cat = Arc::new(builder.finish()?);
    let first = pairs.iter().map(|row| row.iter().map(|&(p, _)| p).collect()).collect();
    let second = pairs.iter().map(|row| row.iter().map(|&(_, q)| q).collect()).collect();
    let p1 = CellMap::new(cat.clone(), a.clone(), first)?;
    let p2 = CellMap::new(cat.clone(), b.clone(), second)?;
    Ok((cat, p1, p2))
}

/// Renames every registered cell. The renaming must keep each layer in tag
/// order, so that indices (and hence the composition tables) carry over.
pub fn relabel(x: &OmegaCat, f: impl Fn(&Tag) -> Tag) -> Result<OmegaCat> {
    let mut out = x.clone();
    for (d, layer) in out.layers.iter_mut().enumerate() {
        layer.tags = layer.tags.iter().map(&f).collect();
        if layer.tags.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Malformed(format!("relabelling reorders the {d}-cells")));
        }
        layer.by_tag = layer
            .tags
            .iter()
            .enumerate()
            .map(|(i, t)| (t.clone(), i as u32))
            .collect();
    }
    Ok(out)
}
