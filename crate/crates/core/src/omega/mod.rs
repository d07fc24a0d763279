//! Finite, dimension-truncated strict globular ω-categories.
//!
//! An [`OmegaCat`] stores its cells layer by layer for dimensions
//! `0..=truncation`. Every cell above the truncation is a formal identity
//! `i^k(x)` on a top-dimensional cell `x`; such cells are addressed by a
//! [`CellRef`] whose `idx` points into the top layer, so they need no storage
//! and unfold on demand.
//!
//! Composition follows the convention `compose(n, x, y) = x ∘_n y`, defined
//! when `s_n(x) = t_n(y)`: `y` happens first. Arguments of different
//! dimensions are whiskered by lifting the lower one through identities.

mod axioms;
mod builder;
mod map;
mod ops;

use std::borrow::Cow;
use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

pub use axioms::{check_axioms, AxiomConfig, AxiomReport, Violation};
pub use builder::{CatBuilder, NewCell};
pub use map::CellMap;
pub use ops::{dual, hom, pullback, relabel, terminal};

use crate::error::{Error, Result};
use crate::tag::Tag;

/// Handle to a cell of a particular [`OmegaCat`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CellRef {
    pub dim: u32,
    pub idx: u32,
}

impl CellRef {
    pub const fn new(dim: u32, idx: u32) -> Self {
        CellRef { dim, idx }
    }
}

impl fmt::Display for CellRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d{}#{}", self.dim, self.idx)
    }
}

#[derive(Clone, Debug, Default)]
pub(crate) struct Layer {
    pub(crate) tags: Vec<Tag>,
    pub(crate) src: Vec<u32>,
    pub(crate) tgt: Vec<u32>,
    pub(crate) identity_of: Vec<Option<u32>>,
    /// Index in the next layer of each cell's identity; filled below the truncation.
    pub(crate) identity: Vec<u32>,
    /// One table per level `n < dim`, keyed by `(x, y)` for `x ∘_n y`.
    pub(crate) comp: Vec<HashMap<(u32, u32), u32>>,
    pub(crate) by_boundary: HashMap<(u32, u32), Vec<u32>>,
    pub(crate) by_tag: HashMap<Tag, u32>,
}

impl Layer {
    fn len(&self) -> usize {
        self.tags.len()
    }
}

#[derive(Clone, Debug)]
pub struct OmegaCat {
    truncation: u32,
    layers: Vec<Layer>,
}

impl OmegaCat {
    /// The ω-category with no cells at all.
    pub fn empty() -> OmegaCat {
        OmegaCat {
            truncation: 0,
            layers: vec![Layer::default()],
        }
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    pub fn is_empty(&self) -> bool {
        self.layers[0].len() == 0
    }

    fn layer_of(&self, dim: u32) -> &Layer {
        &self.layers[dim.min(self.truncation) as usize]
    }

    /// Number of `dim`-cells, identities included.
    pub fn cell_count(&self, dim: u32) -> usize {
        self.layer_of(dim).len()
    }

    /// Number of `dim`-cells that are not identities (all objects count).
    pub fn non_identity_count(&self, dim: u32) -> usize {
        if dim > self.truncation {
            return 0;
        }
        self.layers[dim as usize]
            .identity_of
            .iter()
            .filter(|o| o.is_none())
            .count()
    }

    /// Non-identity counts for dimensions `0..=truncation`.
    pub fn non_identity_counts(&self) -> Vec<usize> {
        (0..=self.truncation).map(|d| self.non_identity_count(d)).collect()
    }

    pub fn cells(&self, dim: u32) -> impl ExactSizeIterator<Item = CellRef> + Clone {
        (0..self.cell_count(dim) as u32).map(move |i| CellRef::new(dim, i))
    }

    pub fn objects(&self) -> impl ExactSizeIterator<Item = CellRef> + Clone {
        self.cells(0)
    }

    pub fn contains(&self, c: CellRef) -> bool {
        (c.idx as usize) < self.cell_count(c.dim)
    }

    pub(crate) fn check(&self, c: CellRef) -> Result<()> {
        if self.contains(c) {
            Ok(())
        } else {
            Err(Error::UnknownCell(c.to_string()))
        }
    }

    /// Canonical tag of a cell; formal identities get `formal(k, base)`.
    pub fn tag(&self, c: CellRef) -> Cow<'_, Tag> {
        if c.dim <= self.truncation {
            Cow::Borrowed(&self.layers[c.dim as usize].tags[c.idx as usize])
        } else {
            let base = &self.layers[self.truncation as usize].tags[c.idx as usize];
            Cow::Owned(Tag::node(
                "formal",
                vec![Tag::Int((c.dim - self.truncation) as i64), base.clone()],
            ))
        }
    }

    /// Looks a cell up by its tag.
    pub fn find(&self, dim: u32, tag: &Tag) -> Option<CellRef> {
        if dim <= self.truncation {
            return self.layers[dim as usize]
                .by_tag
                .get(tag)
                .map(|&i| CellRef::new(dim, i));
        }
        match tag {
            Tag::Node(l, c) if l == "formal" && c.len() == 2 => {
                if c[0] != Tag::Int((dim - self.truncation) as i64) {
                    return None;
                }
                self.find(self.truncation, &c[1])
                    .map(|b| CellRef::new(dim, b.idx))
            }
            _ => None,
        }
    }

    /// Source of a cell of positive dimension.
    ///
    /// Panics on 0-cells; use [`OmegaCat::boundary`] for a checked version.
    pub fn src(&self, c: CellRef) -> CellRef {
        assert!(c.dim > 0, "0-cells have no source");
        if c.dim <= self.truncation {
            CellRef::new(c.dim - 1, self.layers[c.dim as usize].src[c.idx as usize])
        } else {
            CellRef::new(c.dim - 1, c.idx)
        }
    }

    pub fn tgt(&self, c: CellRef) -> CellRef {
        assert!(c.dim > 0, "0-cells have no target");
        if c.dim <= self.truncation {
            CellRef::new(c.dim - 1, self.layers[c.dim as usize].tgt[c.idx as usize])
        } else {
            CellRef::new(c.dim - 1, c.idx)
        }
    }

    /// `s_n(c)`; returns `c` itself when `n == c.dim`.
    pub fn src_at(&self, mut c: CellRef, n: u32) -> CellRef {
        while c.dim > n {
            c = self.src(c);
        }
        c
    }

    pub fn tgt_at(&self, mut c: CellRef, n: u32) -> CellRef {
        while c.dim > n {
            c = self.tgt(c);
        }
        c
    }

    /// The `n`-boundary `(s_n x, t_n x)`.
    pub fn boundary(&self, x: CellRef, n: u32) -> Result<(CellRef, CellRef)> {
        self.check(x)?;
        if n >= x.dim {
            return Err(Error::DimensionOutOfRange { level: n, dim: x.dim });
        }
        Ok((self.src_at(x, n), self.tgt_at(x, n)))
    }

    pub fn identity(&self, c: CellRef) -> CellRef {
        if c.dim < self.truncation {
            CellRef::new(c.dim + 1, self.layers[c.dim as usize].identity[c.idx as usize])
        } else {
            CellRef::new(c.dim + 1, c.idx)
        }
    }

    /// `i^k(c)` with `k = dim - c.dim`.
    pub fn lift(&self, mut c: CellRef, dim: u32) -> CellRef {
        while c.dim < dim {
            c = self.identity(c);
        }
        c
    }

    pub fn is_identity(&self, c: CellRef) -> bool {
        c.dim > self.truncation || self.layers[c.dim as usize].identity_of[c.idx as usize].is_some()
    }

    /// For an identity cell `i(x)`, returns `x`.
    pub fn identity_of(&self, c: CellRef) -> Option<CellRef> {
        if c.dim == 0 {
            return None;
        }
        if c.dim > self.truncation {
            return Some(CellRef::new(c.dim - 1, c.idx));
        }
        self.layers[c.dim as usize].identity_of[c.idx as usize]
            .map(|i| CellRef::new(c.dim - 1, i))
    }

    /// Whether `x` and `y` have the same source and target (or are both objects).
    pub fn parallel(&self, x: CellRef, y: CellRef) -> bool {
        x.dim == y.dim && (x.dim == 0 || (self.src(x) == self.src(y) && self.tgt(x) == self.tgt(y)))
    }

    /// All `dim`-cells `s -> t`.
    pub fn cells_between(&self, dim: u32, s: CellRef, t: CellRef) -> Vec<CellRef> {
        debug_assert!(dim >= 1 && s.dim + 1 == dim && t.dim + 1 == dim);
        if dim <= self.truncation {
            self.layers[dim as usize]
                .by_boundary
                .get(&(s.idx, t.idx))
                .map(|v| v.iter().map(|&i| CellRef::new(dim, i)).collect())
                .unwrap_or_default()
        } else if s == t {
            vec![self.identity(s)]
        } else {
            Vec::new()
        }
    }

    /// `x ∘_n y`, whiskering whichever argument has lower dimension.
    pub fn compose(&self, n: u32, x: CellRef, y: CellRef) -> Result<CellRef> {
        self.check(x)?;
        self.check(y)?;
        if n >= x.dim.min(y.dim) {
            return Err(Error::DimensionMismatch {
                level: n,
                left: x.dim,
                right: y.dim,
            });
        }
        let k = x.dim.max(y.dim);
        let x = self.lift(x, k);
        let y = self.lift(y, k);
        if self.src_at(x, n) != self.tgt_at(y, n) {
            return Err(Error::NotComposable {
                level: n,
                detail: format!(
                    "s_{n}({}) = {} but t_{n}({}) = {}",
                    self.tag(x),
                    self.tag(self.src_at(x, n)),
                    self.tag(y),
                    self.tag(self.tgt_at(y, n))
                ),
            });
        }
        self.compose_lifted(n, x, y)
    }

    fn compose_lifted(&self, n: u32, x: CellRef, y: CellRef) -> Result<CellRef> {
        let k = x.dim;
        let top = self.truncation;
        if k <= top {
            self.layers[k as usize].comp[n as usize]
                .get(&(x.idx, y.idx))
                .map(|&z| CellRef::new(k, z))
                .ok_or_else(|| Error::NotComposable {
                    level: n,
                    detail: format!("no composite recorded for {} and {}", self.tag(x), self.tag(y)),
                })
        } else if n >= top {
            // both are identities on the same top cell
            Ok(x)
        } else {
            let z = self.compose_lifted(n, CellRef::new(top, x.idx), CellRef::new(top, y.idx))?;
            Ok(CellRef::new(k, z.idx))
        }
    }

    /// Pairs `(x, y)` of registered `k`-cells with `s_n(x) = t_n(y)`.
    pub fn composable_pairs(&self, k: u32, n: u32) -> Vec<(CellRef, CellRef)> {
        let mut by_src: HashMap<u32, Vec<CellRef>> = HashMap::new();
        let mut by_tgt: HashMap<u32, Vec<CellRef>> = HashMap::new();
        for c in self.cells(k) {
            by_src.entry(self.src_at(c, n).idx).or_default().push(c);
            by_tgt.entry(self.tgt_at(c, n).idx).or_default().push(c);
        }
        let mut out = Vec::new();
        for b in self.cells(n) {
            if let (Some(xs), Some(ys)) = (by_src.get(&b.idx), by_tgt.get(&b.idx)) {
                for &x in xs {
                    for &y in ys {
                        out.push((x, y));
                    }
                }
            }
        }
        out
    }

    /// Recorded composites at dimension `k`, level `n`, as sorted `(x, y, x ∘_n y)` index triples.
    pub fn composition_table(&self, k: u32, n: u32) -> Vec<(u32, u32, u32)> {
        let mut v: Vec<_> = self.layers[k as usize].comp[n as usize]
            .iter()
            .map(|(&(x, y), &z)| (x, y, z))
            .collect();
        v.sort_unstable();
        v
    }
}
