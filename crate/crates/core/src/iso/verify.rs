use std::collections::HashMap;

use rayon::prelude::*;

use crate::collage::{Collage, CollageCell, Module};
use crate::omega::{CellMap, CellRef};
use crate::parity::ParityCategory;
use crate::report::CheckReport;

/// Checks that `f` is bijective in each dimension up to `max_dim`, commutes
/// with source and target, and preserves identities and every composite.
/// An empty report certifies an isomorphism of ω-categories.
pub fn verify_functor_iso(f: &CellMap, max_dim: u32) -> CheckReport {
    let (x, y) = (f.source(), f.target());
    let mut report = CheckReport::new("functor-iso");
    let top = max_dim.min(x.truncation().max(y.truncation()));
    for d in 0..=top {
        let mut hits: HashMap<CellRef, Vec<CellRef>> = HashMap::new();
        for c in x.cells(d) {
            report.count("cells", 1);
            let image = f.apply(c);
            if image.dim != d || !y.contains(image) {
                report.fail(format!("{} has no image in dimension {d}", x.tag(c)));
                continue;
            }
            if d > 0 {
                if y.src(image) != f.apply(x.src(c)) {
                    report.fail(format!("source of {} is not preserved", x.tag(c)));
                }
                if y.tgt(image) != f.apply(x.tgt(c)) {
                    report.fail(format!("target of {} is not preserved", x.tag(c)));
                }
            }
            if d < top && f.apply(x.identity(c)) != y.identity(image) {
                report.fail(format!("identity on {} is not preserved", x.tag(c)));
            }
            hits.entry(image).or_default().push(c);
        }
        for (image, sources) in &hits {
            if sources.len() > 1 {
                let mut names: Vec<String> = sources.iter().map(|&c| x.tag(c).to_string()).collect();
                names.sort();
                report.fail(format!("not injective: {} all map to {}", names.join(", "), y.tag(*image)));
            }
        }
        for c in y.cells(d) {
            if !hits.contains_key(&c) {
                report.fail(format!("not surjective: {} is not an image", y.tag(c)));
            }
        }
    }
    for k in 1..=top.min(x.truncation()) {
        for n in 0..k {
            let pairs = x.composable_pairs(k, n);
            report.count("composites", pairs.len() as u64);
            let bad: Vec<String> = pairs
                .par_iter()
                .filter_map(|&(a, b)| {
                    let lhs = x.compose(n, a, b).map(|c| f.apply(c));
                    let rhs = y.compose(n, f.apply(a), f.apply(b));
                    (lhs.is_err() || lhs != rhs)
                        .then(|| format!("{} ∘_{n} {} is not preserved", x.tag(a), x.tag(b)))
                })
                .collect();
            report.extend(bad);
        }
    }
    report.finish()
}

/// `φ(k · x ⊙ h) = φ(k) ∘_0 φ(x) ∘_0 φ(h)` for every module cell `x` and all
/// cells `h`, `k` of the two sides one dimension up (for a cone the left
/// factor is an identity of `⋆`).
pub fn action_compatibility<M: Module>(collage: &Collage<M>, f: &CellMap) -> CheckReport {
    let module = collage.module();
    let (uc, vc) = (module.left(), module.right());
    let (src, y) = (collage.cat(), f.target());
    let mut report = CheckReport::new("action-compatibility");
    let modules: Vec<CellRef> = (1..=src.truncation())
        .flat_map(|d| src.cells(d))
        .filter(|&c| matches!(collage.cell(c), CollageCell::Module { .. }))
        .collect();
    let found: Vec<(u64, Vec<String>)> = modules
        .par_iter()
        .map(|&c| {
            let CollageCell::Module { u, v, cell } = collage.cell(c) else { unreachable!() };
            let d = c.dim;
            let mut bad = Vec::new();
            let mut checks = 0;
            let hs: Vec<CellRef> = uc.cells(d).filter(|&h| uc.tgt_at(h, 0).idx == u).collect();
            let ks: Vec<CellRef> = vc.cells(d).filter(|&k| vc.src_at(k, 0).idx == v).collect();
            for &h in &hs {
                for &k in &ks {
                    checks += 1;
                    let u2 = uc.src_at(h, 0).idx;
                    let v2 = vc.tgt_at(k, 0).idx;
                    let acted = module
                        .act_right(u, v, cell, h)
                        .and_then(|r| module.act_left(u2, v, k, r));
                    let lhs = acted.ok().and_then(|m| {
                        collage.find(d, CollageCell::Module { u: u2, v: v2, cell: m }).map(|e| f.apply(e))
                    });
                    let rhs = match (collage.right(k), collage.left(h)) {
                        (Some(k), Some(h)) => y
                            .compose(0, f.apply(c), f.apply(h))
                            .and_then(|xh| y.compose(0, f.apply(k), xh))
                            .ok(),
                        _ => None,
                    };
                    if lhs.is_none() || lhs != rhs {
                        bad.push(format!("{} · {} ⊙ {}", vc.tag(k), src.tag(c), uc.tag(h)));
                    }
                }
            }
            (checks, bad)
        })
        .collect();
    for (checks, bad) in found {
        report.count("triples", checks);
        report.extend(bad);
    }
    report.finish()
}

/// Tops of `n`-composable `(n+1)`-cells are disjoint.
pub fn disjointness_check(x: &ParityCategory, max_dim: u32) -> CheckReport {
    let cat = x.cat();
    let mut report = CheckReport::new("disjointness");
    for k in 1..=max_dim.min(cat.truncation()) {
        let pairs = cat.composable_pairs(k, k - 1);
        report.count(&format!("dim{k}"), pairs.len() as u64);
        let bad: Vec<String> = pairs
            .par_iter()
            .filter(|&&(a, b)| x.top_mask(a) & x.top_mask(b) != 0)
            .map(|&(a, b)| format!("{} and {}", x.top(a), x.top(b)))
            .collect();
        report.extend(bad);
    }
    report.finish()
}
