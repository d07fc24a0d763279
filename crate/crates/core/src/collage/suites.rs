//! Checks on modules and collages, evaluated on every tuple.

use std::collections::HashMap;

use rayon::prelude::*;

use super::build::{Collage, CollageCell};
use super::module::{ConeModule, Module, Sides};
use crate::omega::{CellRef, OmegaCat};
use crate::report::CheckReport;

/// `d`-cells grouped by their 0-boundary.
fn by_ends(x: &OmegaCat, d: u32) -> HashMap<(u32, u32), Vec<CellRef>> {
    let mut out: HashMap<(u32, u32), Vec<CellRef>> = HashMap::new();
    for c in x.cells(d) {
        out.entry((x.src_at(c, 0).idx, x.tgt_at(c, 0).idx)).or_default().push(c);
    }
    out
}

fn into_ends(x: &OmegaCat, d: u32) -> HashMap<u32, Vec<CellRef>> {
    let mut out: HashMap<u32, Vec<CellRef>> = HashMap::new();
    for c in x.cells(d) {
        out.entry(x.tgt_at(c, 0).idx).or_default().push(c);
    }
    out
}

fn out_of(x: &OmegaCat, d: u32) -> HashMap<u32, Vec<CellRef>> {
    let mut out: HashMap<u32, Vec<CellRef>> = HashMap::new();
    for c in x.cells(d) {
        out.entry(x.src_at(c, 0).idx).or_default().push(c);
    }
    out
}

fn show(x: &OmegaCat, c: CellRef) -> String {
    x.tag(c).to_string()
}

/// Unit, associativity and ω-functoriality of both actions, and the
/// compatibility square of a bimodule.
pub fn module_axioms<M: Module>(module: &M) -> CheckReport {
    let (uc, vc) = (&**module.left(), &**module.right());
    let mut report = CheckReport::new("module-axioms");
    let homs: Vec<(u32, u32)> = uc
        .objects()
        .flat_map(|a| vc.objects().map(move |b| (a.idx, b.idx)))
        .collect();
    let top = homs.iter().map(|&(a, b)| module.hom(a, b).truncation()).max().unwrap_or(0);
    for d in 0..=top {
        let (u_in, v_out) = (into_ends(uc, d + 1), out_of(vc, d + 1));
        let (u_ends, v_ends) = (by_ends(uc, d + 1), by_ends(vc, d + 1));
        let empty = Vec::new();
        let found: Vec<(Vec<(&'static str, u64)>, Vec<String>)> = homs
            .par_iter()
            .map(|&(u, v)| {
                let hom = module.hom(u, v);
                let mut counts = Vec::new();
                let mut bad = Vec::new();
                let mut tick = |key: &'static str, ok: bool, what: String| {
                    counts.push((key, 1));
                    if !ok {
                        bad.push(format!("{key}: {what}"));
                    }
                };
                let hs = u_in.get(&u).unwrap_or(&empty);
                let ks = v_out.get(&v).unwrap_or(&empty);
                for m in hom.cells(d) {
                    let name = show(hom, m);
                    if module.sides() != Sides::Left {
                        let unit = uc.lift(CellRef::new(0, u), d + 1);
                        tick("right-unit", module.act_right(u, v, m, unit) == Ok(m), name.clone());
                    }
                    if module.sides() != Sides::Right {
                        let unit = vc.lift(CellRef::new(0, v), d + 1);
                        tick("left-unit", module.act_left(u, v, unit, m) == Ok(m), name.clone());
                    }
                    for &h in hs {
                        let u2 = uc.src_at(h, 0).idx;
                        let Ok(r) = module.act_right(u, v, m, h) else {
                            tick("right-defined", false, format!("{name} ⊙ {}", show(uc, h)));
                            continue;
                        };
                        for &h2 in u_in.get(&u2).unwrap_or(&empty) {
                            let lhs = module.act_right(u2, v, r, h2);
                            let rhs = uc.compose(0, h, h2).and_then(|hh| module.act_right(u, v, m, hh));
                            tick(
                                "right-associativity",
                                lhs.is_ok() && lhs == rhs,
                                format!("{name} ⊙ {} ⊙ {}", show(uc, h), show(uc, h2)),
                            );
                        }
                        for &k in ks {
                            let v2 = vc.tgt_at(k, 0).idx;
                            let lhs = module.act_left(u2, v, k, r);
                            let rhs = module
                                .act_left(u, v, k, m)
                                .and_then(|l| module.act_right(u, v2, l, h));
                            tick(
                                "compatibility",
                                lhs.is_ok() && lhs == rhs,
                                format!("{} · {name} ⊙ {}", show(vc, k), show(uc, h)),
                            );
                        }
                        let (mi, hi) = (hom.identity(m), uc.identity(h));
                        let lhs = module.act_right(u, v, mi, hi);
                        tick(
                            "right-identities",
                            lhs.is_ok() && lhs == Ok(module.hom(u2, v).identity(r)),
                            format!("{name} ⊙ {}", show(uc, h)),
                        );
                    }
                    for &k in ks {
                        let v2 = vc.tgt_at(k, 0).idx;
                        let Ok(l) = module.act_left(u, v, k, m) else {
                            tick("left-defined", false, format!("{} · {name}", show(vc, k)));
                            continue;
                        };
                        for &k2 in v_out.get(&v2).unwrap_or(&empty) {
                            let lhs = module.act_left(u, v2, k2, l);
                            let rhs = vc.compose(0, k2, k).and_then(|kk| module.act_left(u, v, kk, m));
                            tick(
                                "left-associativity",
                                lhs.is_ok() && lhs == rhs,
                                format!("{} · {} · {name}", show(vc, k2), show(vc, k)),
                            );
                        }
                        let (mi, ki) = (hom.identity(m), vc.identity(k));
                        let lhs = module.act_left(u, v, ki, mi);
                        tick(
                            "left-identities",
                            lhs.is_ok() && lhs == Ok(module.hom(u, v2).identity(l)),
                            format!("{} · {name}", show(vc, k)),
                        );
                    }
                }
                // (g ∘_n f) ⊙ (h ∘_{n+1} h') = (g ⊙ h) ∘_n (f ⊙ h'), and dually
                for n in 0..d {
                    for (g, f) in hom.composable_pairs(d, n) {
                        let gf = hom.compose(n, g, f);
                        if module.sides() != Sides::Left {
                            for (&(u2, to), hs) in &u_ends {
                                if to != u {
                                    continue;
                                }
                                for &h in hs {
                                    for &h2 in hs {
                                        if uc.src_at(h, n + 1) != uc.tgt_at(h2, n + 1) {
                                            continue;
                                        }
                                        let lhs = gf.clone().and_then(|gf| {
                                            module.act_right(u, v, gf, uc.compose(n + 1, h, h2)?)
                                        });
                                        let rhs = module.act_right(u, v, g, h).and_then(|a| {
                                            let b = module.act_right(u, v, f, h2)?;
                                            module.hom(u2, v).compose(n, a, b)
                                        });
                                        tick(
                                            "right-functoriality",
                                            lhs.is_ok() && lhs == rhs,
                                            format!("({} ∘_{n} {}) ⊙ ({} ∘ {})", show(hom, g), show(hom, f), show(uc, h), show(uc, h2)),
                                        );
                                    }
                                }
                            }
                        }
                        if module.sides() != Sides::Right {
                            for (&(from, v2), ks) in &v_ends {
                                if from != v {
                                    continue;
                                }
                                for &k in ks {
                                    for &k2 in ks {
                                        if vc.src_at(k, n + 1) != vc.tgt_at(k2, n + 1) {
                                            continue;
                                        }
                                        let lhs = gf.clone().and_then(|gf| {
                                            module.act_left(u, v, vc.compose(n + 1, k, k2)?, gf)
                                        });
                                        let rhs = module.act_left(u, v, k, g).and_then(|a| {
                                            let b = module.act_left(u, v, k2, f)?;
                                            module.hom(u, v2).compose(n, a, b)
                                        });
                                        tick(
                                            "left-functoriality",
                                            lhs.is_ok() && lhs == rhs,
                                            format!("({} ∘ {}) · ({} ∘_{n} {})", show(vc, k), show(vc, k2), show(hom, g), show(hom, f)),
                                        );
                                    }
                                }
                            }
                        }
                    }
                }
                (counts, bad)
            })
            .collect();
        for (counts, bad) in found {
            for (k, c) in counts {
                report.count(k, c);
            }
            report.extend(bad);
        }
    }
    report.finish()
}

/// No cell of positive dimension runs from the right-hand side (or `⋆` of a
/// cone) back to the left-hand side, and module cells join the two sides.
pub fn hom_table<M: Module>(collage: &Collage<M>) -> CheckReport {
    let cat = collage.cat();
    let left = |c: CellRef| matches!(collage.cell(c), CollageCell::Left(_))
        || (collage.module().sides() == Sides::Left && matches!(collage.cell(c), CollageCell::Star(_)));
    let mut report = CheckReport::new("hom-table");
    for d in 1..=cat.truncation() {
        for c in cat.cells(d) {
            report.count("cells", 1);
            let (s, t) = (cat.src_at(c, 0), cat.tgt_at(c, 0));
            let module_cell = matches!(collage.cell(c), CollageCell::Module { .. });
            if !left(s) && left(t) {
                report.fail(format!("{} runs backwards", cat.tag(c)));
            }
            if module_cell != (left(s) && !left(t)) {
                report.fail(format!("{} is misplaced", cat.tag(c)));
            }
        }
    }
    report.finish()
}

/// For `d ≥ 1`, non-identity `d`-cells of `s(X)` number those of `X` plus
/// the non-identity `(d-1)`-cells of all coslices `a/X`.
pub fn cone_counts(cone: &Collage<ConeModule>) -> CheckReport {
    let module = cone.module();
    let x = module.left();
    let cat = cone.cat();
    let mut report = CheckReport::new("cone-counts");
    for d in 1..=cat.truncation() {
        let expected = x.non_identity_count(d)
            + x.objects()
                .map(|a| module.coslice(a.idx).cat().non_identity_count(d - 1))
                .sum::<usize>();
        let got = cat.non_identity_count(d);
        report.count(&format!("dim{d}"), got as u64);
        if got != expected {
            report.fail(format!("dimension {d}: {got} cells, expected {expected}"));
        }
    }
    report.finish()
}
