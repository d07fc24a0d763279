use std::collections::HashMap;
use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::omega::{dual, relabel, CatBuilder, CellMap, CellRef, NewCell, OmegaCat};
use crate::tag::Tag;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `a/X`: certificates leave the basepoint.
    Coslice,
    /// `X/b`: certificates enter the copoint.
    Slice,
}

/// The whiskering functors attached to a boundary tower of a coslice cell:
/// `m̄_i` and `p̄_i` are the certificates of its `i`-source and `i`-target.
#[derive(Clone, Debug)]
pub struct Whisker<'a> {
    x: &'a OmegaCat,
    mbar: Vec<CellRef>,
    pbar: Vec<CellRef>,
}

impl<'a> Whisker<'a> {
    pub fn new(x: &'a OmegaCat, mbar: Vec<CellRef>, pbar: Vec<CellRef>) -> Self {
        assert_eq!(mbar.len(), pbar.len());
        Whisker { x, mbar, pbar }
    }

    pub fn levels(&self) -> usize {
        self.mbar.len()
    }

    pub fn mbar(&self, i: usize) -> CellRef {
        self.mbar[i]
    }

    pub fn pbar(&self, i: usize) -> CellRef {
        self.pbar[i]
    }

    /// `M_n(u)` for even `n`, `P_n(u)` for odd `n`, and `u` itself for `n = -1`.
    ///
    /// `M_0(u) = u ∘_0 m̄_0`, `P_n(u) = p̄_n ∘_n M_{n-1}(u)` and
    /// `M_n(u) = P_{n-1}(u) ∘_n m̄_n`.
    pub fn chain(&self, n: i64, u: CellRef) -> Result<CellRef> {
        if n < 0 {
            return Ok(u);
        }
        if n % 2 == 0 {
            self.m(n as u32, u)
        } else {
            self.p(n as u32, u)
        }
    }

    pub fn m(&self, n: u32, u: CellRef) -> Result<CellRef> {
        debug_assert!(n % 2 == 0);
        let inner = if n == 0 { u } else { self.p(n - 1, u)? };
        self.x.compose(n, inner, self.mbar[n as usize])
    }

    pub fn p(&self, n: u32, u: CellRef) -> Result<CellRef> {
        debug_assert!(n % 2 == 1);
        let inner = self.m(n - 1, u)?;
        self.x.compose(n, self.pbar[n as usize], inner)
    }
}

/// A lax coslice `a/X` or lax slice `X/b`, with the `(base, certificate)`
/// pair of every cell.
#[derive(Clone, Debug)]
pub struct Lax {
    side: Side,
    ambient: Arc<OmegaCat>,
    point: CellRef,
    cat: Arc<OmegaCat>,
    base: Vec<Vec<CellRef>>,
    cert: Vec<Vec<CellRef>>,
    index: Vec<HashMap<(CellRef, CellRef, u32, u32), u32>>,
}

#[derive(Clone, Copy)]
struct Raw {
    base: CellRef,
    cert: CellRef,
    src: u32,
    tgt: u32,
}

fn boundary_certs(raws: &[Vec<Raw>], dim: usize, idx: u32) -> (Vec<CellRef>, Vec<CellRef>) {
    let mut mbar = vec![CellRef::new(0, 0); dim];
    let mut pbar = vec![CellRef::new(0, 0); dim];
    let (mut s, mut t) = (raws[dim][idx as usize].src, raws[dim][idx as usize].tgt);
    for k in (0..dim).rev() {
        mbar[k] = raws[k][s as usize].cert;
        pbar[k] = raws[k][t as usize].cert;
        s = raws[k][s as usize].src;
        t = raws[k][t as usize].tgt;
    }
    (mbar, pbar)
}

fn index_of(cat: &OmegaCat, base: &[Vec<CellRef>], cert: &[Vec<CellRef>]) -> Vec<HashMap<(CellRef, CellRef, u32, u32), u32>> {
    (0..=cat.truncation())
        .map(|d| {
            cat.cells(d)
                .map(|c| {
                    let (s, t) = if d == 0 { (0, 0) } else { (cat.src(c).idx, cat.tgt(c).idx) };
                    ((base[d as usize][c.idx as usize], cert[d as usize][c.idx as usize], s, t), c.idx)
                })
                .collect()
        })
        .collect()
}

impl Lax {
    /// The lax coslice `a/X`, truncated where `X` is.
    pub fn coslice(x: &Arc<OmegaCat>, a: CellRef) -> Result<Lax> {
        Lax::coslice_truncated(x, a, x.truncation())
    }

    /// `a/X` with cells registered up to `truncation`, which may exceed the
    /// truncation of `X`.
    pub fn coslice_truncated(x: &Arc<OmegaCat>, a: CellRef, truncation: u32) -> Result<Lax> {
        if a.dim != 0 || !x.contains(a) {
            return Err(Error::UnknownCell(a.to_string()));
        }
        let mut builder = CatBuilder::new(truncation);
        let mut raws: Vec<Vec<Raw>> = Vec::new();
        for d in 0..=truncation {
            let mut cells: Vec<Raw> = if d == 0 {
                x.cells(1)
                    .filter(|&c| x.src(c) == a)
                    .map(|c| Raw {
                        base: x.tgt(c),
                        cert: c,
                        src: 0,
                        tgt: 0,
                    })
                    .collect()
            } else {
                let prev = &raws[d as usize - 1];
                let mut groups: HashMap<(u32, u32), Vec<u32>> = HashMap::new();
                for (i, r) in prev.iter().enumerate() {
                    let key = if d == 1 { (0, 0) } else { (r.src, r.tgt) };
                    groups.entry(key).or_default().push(i as u32);
                }
                let mut pairs: Vec<(u32, u32)> = groups
                    .values()
                    .flat_map(|g| g.iter().flat_map(move |&m| g.iter().map(move |&p| (m, p))))
                    .collect();
                pairs.sort_unstable();
                let found: Vec<Vec<Raw>> = pairs
                    .par_iter()
                    .map(|&(m, p)| Lax::cells_over(x, &raws, d, m, p))
                    .collect::<Result<_>>()?;
                found.into_iter().flatten().collect()
            };
            let new_cells = cells
                .iter()
                .map(|r| {
                    let (bt, ct) = (x.tag(r.base).into_owned(), x.tag(r.cert).into_owned());
                    if d == 0 {
                        return NewCell::object(Tag::node("coslice", vec![bt, ct]));
                    }
                    let prev = &raws[d as usize - 1];
                    let under = prev[r.src as usize];
                    let is_identity = r.src == r.tgt
                        && r.base == x.identity(under.base)
                        && r.cert == x.identity(under.cert);
                    NewCell {
                        tag: Tag::node("coslice", vec![bt, ct, Tag::Int(r.src as i64), Tag::Int(r.tgt as i64)]),
                        src: r.src,
                        tgt: r.tgt,
                        identity_of: is_identity.then_some(r.src),
                    }
                })
                .collect();
            let perm = builder.push_layer(new_cells)?;
            let mut ordered = cells.clone();
            for (old, &new) in perm.iter().enumerate() {
                ordered[new as usize] = cells[old];
            }
            cells = ordered;
            raws.push(cells);
        }

        let base: Vec<Vec<CellRef>> = raws.iter().map(|r| r.iter().map(|c| c.base).collect()).collect();
        let cert: Vec<Vec<CellRef>> = raws.iter().map(|r| r.iter().map(|c| c.cert).collect()).collect();
        let keyed: Vec<HashMap<(CellRef, CellRef, u32, u32), u32>> = raws
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .map(|(i, r)| ((r.base, r.cert, r.src, r.tgt), i as u32))
                    .collect()
            })
            .collect();
        builder.fill_all(|cat, n, g, f| {
            let k = g.dim as usize;
            let (gb, gc) = (base[k][g.idx as usize], cert[k][g.idx as usize]);
            let (fb, fc) = (base[k][f.idx as usize], cert[k][f.idx as usize]);
            let w = Whisker::new(
                x,
                (0..n).map(|i| cert[i as usize][cat.src_at(f, i).idx as usize]).collect(),
                (0..n).map(|i| cert[i as usize][cat.tgt_at(f, i).idx as usize]).collect(),
            );
            let new_base = x.compose(n, gb, fb)?;
            let new_cert = if n % 2 == 0 {
                // ḡ ∘_{n+1} (P_{n-1}(s_{n+1} g) ∘_n f̄)
                let whiskered = w.chain(n as i64 - 1, x.src_at(gb, n + 1))?;
                x.compose(n + 1, gc, x.compose(n, whiskered, fc)?)?
            } else {
                // (ḡ ∘_n M_{n-1}(t_{n+1} f)) ∘_{n+1} f̄
                let whiskered = w.chain(n as i64 - 1, x.tgt_at(fb, n + 1))?;
                x.compose(n + 1, x.compose(n, gc, whiskered)?, fc)?
            };
            let (s, t) = if k as u32 - 1 == n {
                (cat.src(f), cat.tgt(g))
            } else {
                (cat.compose(n, cat.src(g), cat.src(f))?, cat.compose(n, cat.tgt(g), cat.tgt(f))?)
            };
            keyed[k]
                .get(&(new_base, new_cert, s.idx, t.idx))
                .map(|&i| CellRef::new(k as u32, i))
                .ok_or_else(|| {
                    Error::Malformed(format!(
                        "coslice composite ({}, {}) at level {n} is not a registered cell",
                        x.tag(new_base),
                        x.tag(new_cert)
                    ))
                })
        })?;
        let cat = builder.finish()?;
        let index = index_of(&cat, &base, &cert);
        Ok(Lax {
            side: Side::Coslice,
            ambient: x.clone(),
            point: a,
            cat: Arc::new(cat),
            base,
            cert,
            index,
        })
    }

    /// All `d`-cells `m → p` over a parallel pair of `(d-1)`-cells.
    fn cells_over(x: &OmegaCat, raws: &[Vec<Raw>], d: u32, m: u32, p: u32) -> Result<Vec<Raw>> {
        let n = d as usize - 1;
        let (mut mbar, mut pbar) = boundary_certs(raws, n, m);
        let (rm, rp) = (raws[n][m as usize], raws[n][p as usize]);
        mbar.push(rm.cert);
        pbar.push(rp.cert);
        let w = Whisker::new(x, mbar, pbar);
        let mut out = Vec::new();
        for xb in x.cells_between(d, rm.base, rp.base) {
            let (s, t) = if n % 2 == 0 {
                (w.m(n as u32, xb)?, w.pbar(n))
            } else {
                (w.mbar(n), w.p(n as u32, xb)?)
            };
            if s.dim != d || t.dim != d {
                return Err(Error::Malformed(format!("certificate boundary of {} has the wrong dimension", x.tag(xb))));
            }
            for xc in x.cells_between(d + 1, s, t) {
                out.push(Raw {
                    base: xb,
                    cert: xc,
                    src: m,
                    tgt: p,
                });
            }
        }
        Ok(out)
    }

    /// The lax slice `X/b = (b/X^op)^op`.
    pub fn slice(x: &Arc<OmegaCat>, b: CellRef) -> Result<Lax> {
        let op = Arc::new(dual(x));
        let co = Lax::coslice(&op, b)?;
        let cat = relabel(&dual(&co.cat), |t| match t {
            Tag::Node(_, c) => Tag::Node("slice".into(), c.clone()),
            other => other.clone(),
        })?;
        let index = index_of(&cat, &co.base, &co.cert);
        Ok(Lax {
            side: Side::Slice,
            ambient: x.clone(),
            point: b,
            cat: Arc::new(cat),
            base: co.base,
            cert: co.cert,
            index,
        })
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn ambient(&self) -> &Arc<OmegaCat> {
        &self.ambient
    }

    pub fn point(&self) -> CellRef {
        self.point
    }

    pub fn cat(&self) -> &Arc<OmegaCat> {
        &self.cat
    }

    pub fn base(&self, c: CellRef) -> CellRef {
        let top = self.cat.truncation();
        if c.dim <= top {
            self.base[c.dim as usize][c.idx as usize]
        } else {
            self.ambient.lift(self.base[top as usize][c.idx as usize], c.dim)
        }
    }

    pub fn cert(&self, c: CellRef) -> CellRef {
        let top = self.cat.truncation();
        if c.dim <= top {
            self.cert[c.dim as usize][c.idx as usize]
        } else {
            self.ambient.lift(self.cert[top as usize][c.idx as usize], c.dim + 1)
        }
    }

    /// The cell `(base, cert) : src → tgt`; boundaries are ignored for objects.
    pub fn find(&self, dim: u32, base: CellRef, cert: CellRef, src: CellRef, tgt: CellRef) -> Option<CellRef> {
        if dim > self.cat.truncation() {
            let ok = src == tgt
                && base == self.ambient.identity(self.base(src))
                && cert == self.ambient.identity(self.cert(src));
            return ok.then(|| self.cat.identity(src));
        }
        let key = if dim == 0 { (base, cert, 0, 0) } else { (base, cert, src.idx, tgt.idx) };
        self.index[dim as usize].get(&key).map(|&i| CellRef::new(dim, i))
    }

    pub fn find_object(&self, base: CellRef, cert: CellRef) -> Option<CellRef> {
        let o = CellRef::new(0, 0);
        self.find(0, base, cert, o, o)
    }

    /// Certificates of the boundary tower of `c`, levels `0..dim`.
    pub fn whisker(&self, c: CellRef) -> Whisker<'_> {
        let mbar = (0..c.dim).map(|i| self.cert(self.cat.src_at(c, i))).collect();
        let pbar = (0..c.dim).map(|i| self.cert(self.cat.tgt_at(c, i))).collect();
        Whisker::new(&self.ambient, mbar, pbar)
    }

    /// The forgetful ω-functor to the ambient category.
    pub fn projection(&self) -> CellMap {
        CellMap::new(self.cat.clone(), self.ambient.clone(), self.base.clone())
            .expect("bases are cells of the ambient category")
    }

    /// `c ⊙ h` for a coslice (`h : a' → a`, result in `a'/X`) or `h · c` for a
    /// slice (`h : b → b'`, result in `X/b'`). `h` is an ambient cell one
    /// dimension above `c`.
    pub fn act(&self, c: CellRef, h: CellRef, target: &Lax) -> Result<CellRef> {
        let x = &*self.ambient;
        if h.dim != c.dim + 1 {
            return Err(Error::DimensionMismatch {
                level: 0,
                left: c.dim,
                right: h.dim,
            });
        }
        let cert = match self.side {
            Side::Coslice => x.compose(0, self.cert(c), h)?,
            Side::Slice => x.compose(0, h, self.cert(c))?,
        };
        let base = self.base(c);
        let found = if c.dim == 0 {
            target.find_object(base, cert)
        } else {
            let s = self.act(self.cat.src(c), x.src(h), target)?;
            let t = self.act(self.cat.tgt(c), x.tgt(h), target)?;
            target.find(c.dim, base, cert, s, t)
        };
        found.ok_or_else(|| {
            Error::ActionMismatch(format!(
                "({}, {}) is not a cell of the target",
                x.tag(base),
                x.tag(cert)
            ))
        })
    }
}
