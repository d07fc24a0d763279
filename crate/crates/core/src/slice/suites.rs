//! Re-derivation checks for coslice cells: the boundary formulas of their
//! certificates, the behaviour of the whiskering functors under composition
//! and under the action.

use rayon::prelude::*;

use super::lax::{Lax, Side};
use crate::omega::{CellRef, OmegaCat};
use crate::report::CheckReport;

fn parallel_cells(x: &OmegaCat, c: CellRef) -> Vec<CellRef> {
    if c.dim == 0 {
        return x.objects().collect();
    }
    x.cells_between(c.dim, x.src(c), x.tgt(c))
}

/// For every cell `(x, x̄)` and every `n ≤ dim x`:
/// `s_n x̄ = m̄_{n-1}` or `M_{n-1}(m_n)` and `t_n x̄ = P_{n-1}(p_n)` or
/// `p̄_{n-1}`, according as `n` is even or odd (`m̄_{-1}` is the basepoint).
pub fn certificate_boundaries(lax: &Lax) -> CheckReport {
    assert_eq!(lax.side(), Side::Coslice);
    let x = &**lax.ambient();
    let cat = lax.cat();
    let mut report = CheckReport::new("certificate-boundaries");
    for d in 0..=cat.truncation() {
        let found: Vec<(u64, Vec<String>)> = cat
            .cells(d)
            .collect::<Vec<_>>()
            .par_iter()
            .map(|&c| {
                let xbar = lax.cert(c);
                let w = lax.whisker(c);
                let mut bad = Vec::new();
                for n in 0..=d {
                    let m = lax.base(cat.src_at(c, n));
                    let p = lax.base(cat.tgt_at(c, n));
                    let prev = n as i64 - 1;
                    let (s, t) = if n % 2 == 0 {
                        let s = if n == 0 { lax.point() } else { w.mbar(n as usize - 1) };
                        (Ok(s), w.chain(prev, p))
                    } else {
                        (w.chain(prev, m), Ok(w.pbar(n as usize - 1)))
                    };
                    if s != Ok(x.src_at(xbar, n)) || t != Ok(x.tgt_at(xbar, n)) {
                        bad.push(format!("{} at level {n}", cat.tag(c)));
                    }
                }
                (d as u64 + 1, bad)
            })
            .collect();
        for (checks, bad) in found {
            report.count("checks", checks);
            report.extend(bad);
        }
    }
    report.finish()
}

/// For `n`-composable `k`-cells `y`, `x` with `k > n + 1` and all cells
/// `f ∥ x`, `g ∥ y` of the ambient category, the whiskering functor of
/// `y ∘_n x` at level `k - 1` applied to `g ∘_n f` equals
/// `W^y(g) ∘_n M(t_{n+1} x) ∘_{n+1} W^x(f)` when `n` is odd, and
/// `W^y(g) ∘_{n+1} (P(s_{n+1} y) ∘_n W^x(f))` when `n` is even.
///
/// Counts are kept per parity of `n` so that the even-level form, which is
/// the mirror of the odd one, is visibly exercised.
pub fn composite_whiskering(lax: &Lax) -> CheckReport {
    assert_eq!(lax.side(), Side::Coslice);
    let x = &**lax.ambient();
    let cat = lax.cat();
    let mut report = CheckReport::new("composite-whiskering");
    for k in 2..=cat.truncation() {
        for n in 0..k - 1 {
            let pairs = cat.composable_pairs(k, n);
            let found: Vec<(u64, Vec<String>)> = pairs
                .par_iter()
                .map(|&(y, xc)| {
                    let mut bad = Vec::new();
                    let mut checks = 0;
                    let Ok(c) = cat.compose(n, y, xc) else {
                        return (0, vec![format!("{} ∘_{n} {} undefined", cat.tag(y), cat.tag(xc))]);
                    };
                    let (wc, wy, wx) = (lax.whisker(c), lax.whisker(y), lax.whisker(xc));
                    let lower = n as i64 - 1;
                    for f in parallel_cells(x, lax.base(xc)) {
                        for g in parallel_cells(x, lax.base(y)) {
                            checks += 1;
                            let lhs = x.compose(n, g, f).and_then(|gf| wc.chain(k as i64 - 1, gf));
                            let rhs = (|| {
                                let wg = wy.chain(k as i64 - 1, g)?;
                                let wf = wx.chain(k as i64 - 1, f)?;
                                if n % 2 == 1 {
                                    let mid = wx.chain(lower, x.tgt_at(lax.base(xc), n + 1))?;
                                    x.compose(n + 1, x.compose(n, wg, mid)?, wf)
                                } else {
                                    let mid = wx.chain(lower, x.src_at(lax.base(y), n + 1))?;
                                    x.compose(n + 1, wg, x.compose(n, mid, wf)?)
                                }
                            })();
                            if lhs.is_err() || lhs != rhs {
                                bad.push(format!(
                                    "{} ∘_{n} {} on ({}, {})",
                                    cat.tag(y),
                                    cat.tag(xc),
                                    x.tag(g),
                                    x.tag(f)
                                ));
                            }
                        }
                    }
                    (checks, bad)
                })
                .collect();
            let key = if n % 2 == 0 { "even-level" } else { "odd-level" };
            for (checks, bad) in found {
                report.count(key, checks);
                report.extend(bad);
            }
        }
    }
    report.finish()
}

/// For every cell `x` of `a/X` of positive dimension `n + 1`, every
/// `h ∈ X(b, a)` of matching dimension and every `u ∥ base(x)`:
/// `M_n^{x⊙h}(u) = M_n^x(u) ∘_0 s(h)` (`n` even) or
/// `P_n^{x⊙h}(u) = P_n^x(u) ∘_0 t(h)` (`n` odd).
pub fn action_whiskering(from: &Lax, to: &Lax) -> CheckReport {
    assert_eq!(from.side(), Side::Coslice);
    let x = &**from.ambient();
    let cat = from.cat();
    let (a, b) = (from.point(), to.point());
    let mut report = CheckReport::new("action-whiskering");
    for d in 1..=cat.truncation() {
        let hs: Vec<CellRef> = x
            .cells(d + 1)
            .filter(|&h| x.src_at(h, 0) == b && x.tgt_at(h, 0) == a)
            .collect();
        let n = d - 1;
        let found: Vec<(u64, Vec<String>)> = cat
            .cells(d)
            .collect::<Vec<_>>()
            .par_iter()
            .map(|&c| {
                let mut bad = Vec::new();
                let mut checks = 0;
                let wc = from.whisker(c);
                for &h in &hs {
                    let r = match from.act(c, h, to) {
                        Ok(r) => r,
                        Err(e) => {
                            bad.push(format!("{} ⊙ {}: {e}", cat.tag(c), x.tag(h)));
                            continue;
                        }
                    };
                    let wr = to.whisker(r);
                    let side = if n % 2 == 0 { x.src(h) } else { x.tgt(h) };
                    for u in parallel_cells(x, from.base(c)) {
                        checks += 1;
                        let lhs = wr.chain(n as i64, u);
                        let rhs = wc.chain(n as i64, u).and_then(|v| x.compose(0, v, side));
                        if lhs.is_err() || lhs != rhs {
                            bad.push(format!("{} ⊙ {} on {}", cat.tag(c), x.tag(h), x.tag(u)));
                        }
                    }
                }
                (checks, bad)
            })
            .collect();
        for (checks, bad) in found {
            report.count("checks", checks);
            report.extend(bad);
        }
    }
    report.finish()
}
