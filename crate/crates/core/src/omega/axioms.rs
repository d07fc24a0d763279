//! Exhaustive (or seeded-sampled) verification of the strict ω-category laws.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{CellRef, OmegaCat};

#[derive(Clone, Debug)]
pub struct AxiomConfig {
    /// Highest cell dimension inspected; defaults to the truncation.
    pub max_dim: Option<u32>,
    /// Number of tuples drawn per family when a family is too large to enumerate.
    pub budget: u64,
    pub seed: u64,
    /// Families with at most this many tuples are always checked exhaustively.
    pub exhaustive_limit: u64,
    /// Violations kept per family; the count is still exact.
    pub max_reported: usize,
}

impl Default for AxiomConfig {
    fn default() -> Self {
        AxiomConfig {
            max_dim: None,
            budget: 100_000,
            seed: 0,
            exhaustive_limit: 1_000_000,
            max_reported: 1000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Violation {
    pub axiom: String,
    pub witness: Vec<CellRef>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyStats {
    pub family: String,
    pub tuples: u64,
    pub checked: u64,
    pub sampled: bool,
    pub violations: u64,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct AxiomReport {
    pub families: Vec<FamilyStats>,
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    pub fn is_ok(&self) -> bool {
        self.families.iter().all(|f| f.violations == 0)
    }

    pub fn violation_count(&self) -> u64 {
        self.families.iter().map(|f| f.violations).sum()
    }

    pub fn sampled(&self) -> bool {
        self.families.iter().any(|f| f.sampled)
    }
}

/// A tuple space laid out as a union of blocks `mid × left × right`,
/// addressable by a flat index.
struct Blocks<'a> {
    blocks: Vec<(CellRef, &'a [CellRef], &'a [CellRef])>,
    offsets: Vec<u64>,
}

impl<'a> Blocks<'a> {
    fn new(blocks: Vec<(CellRef, &'a [CellRef], &'a [CellRef])>) -> Self {
        let mut offsets = Vec::with_capacity(blocks.len() + 1);
        let mut acc = 0u64;
        offsets.push(0);
        for (_, l, r) in &blocks {
            acc += (l.len() * r.len()) as u64;
            offsets.push(acc);
        }
        Blocks { blocks, offsets }
    }

    fn len(&self) -> u64 {
        *self.offsets.last().unwrap()
    }

    fn get(&self, i: u64) -> (CellRef, CellRef, CellRef) {
        let b = self.offsets.partition_point(|&o| o <= i) - 1;
        let (mid, l, r) = &self.blocks[b];
        let local = (i - self.offsets[b]) as usize;
        (*mid, l[local / r.len()], r[local % r.len()])
    }
}

struct Runner<'c> {
    cfg: &'c AxiomConfig,
    report: AxiomReport,
}

impl Runner<'_> {
    fn run<F>(&mut self, family: String, total: u64, check: F)
    where
        F: Fn(u64) -> Option<Violation> + Sync,
    {
        let exhaustive = total <= self.cfg.exhaustive_limit.max(self.cfg.budget);
        let indices: Vec<u64> = if exhaustive {
            (0..total).collect()
        } else {
            let mut seed = self.cfg.seed;
            for b in family.bytes() {
                seed = seed.wrapping_mul(0x100_0000_01b3).wrapping_add(b as u64);
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..self.cfg.budget).map(|_| rng.gen_range(0..total)).collect()
        };
        let mut found: Vec<Violation> = indices.par_iter().filter_map(|&i| check(i)).collect();
        found.sort();
        found.dedup();
        self.report.families.push(FamilyStats {
            family,
            tuples: total,
            checked: indices.len() as u64,
            sampled: !exhaustive,
            violations: found.len() as u64,
        });
        found.truncate(self.cfg.max_reported);
        self.report.violations.extend(found);
    }
}

fn violation(axiom: &str, witness: Vec<CellRef>, detail: String) -> Option<Violation> {
    Some(Violation {
        axiom: axiom.to_string(),
        witness,
        detail,
    })
}

fn group<F: Fn(CellRef) -> u32>(cells: &[CellRef], key: F) -> HashMap<u32, Vec<CellRef>> {
    let mut m: HashMap<u32, Vec<CellRef>> = HashMap::new();
    for &c in cells {
        m.entry(key(c)).or_default().push(c);
    }
    m
}

/// Checks globularity, identities, the source–target axioms of every recorded
/// composite, unit laws, associativity and interchange.
pub fn check_axioms(x: &OmegaCat, cfg: &AxiomConfig) -> AxiomReport {
    let top = cfg.max_dim.unwrap_or(x.truncation());
    let mut r = Runner {
        cfg,
        report: AxiomReport::default(),
    };
    let cells: Vec<Vec<CellRef>> = (0..=top).map(|d| x.cells(d).collect()).collect();

    for k in 2..=top {
        let cs = &cells[k as usize];
        r.run(format!("globularity/{k}"), cs.len() as u64, |i| {
            let c = cs[i as usize];
            let (s, t) = (x.src(c), x.tgt(c));
            if x.src(s) != x.src(t) || x.tgt(s) != x.tgt(t) {
                return violation("globularity", vec![c], format!("{} is not globular", x.tag(c)));
            }
            None
        });
    }

    for k in 0..top {
        let cs = &cells[k as usize];
        r.run(format!("identity/{k}"), cs.len() as u64, |i| {
            let c = cs[i as usize];
            let e = x.identity(c);
            if x.src(e) != c || x.tgt(e) != c || !x.is_identity(e) || x.identity_of(e) != Some(c) {
                return violation("identity", vec![c], format!("identity on {} is malformed", x.tag(c)));
            }
            None
        });
    }

    for k in 1..=top.min(x.truncation()) {
        for n in 0..k {
            let pairs = x.composable_pairs(k, n);
            r.run(format!("source-target/{k}/{n}"), pairs.len() as u64, |i| {
                let (a, b) = pairs[i as usize];
                source_target(x, n, a, b)
            });
            let table = x.composition_table(k, n);
            r.run(format!("spurious/{k}/{n}"), table.len() as u64, |i| {
                let (a, b, _) = table[i as usize];
                let (a, b) = (CellRef::new(k, a), CellRef::new(k, b));
                if x.src_at(a, n) != x.tgt_at(b, n) {
                    return violation(
                        "spurious-composite",
                        vec![a, b],
                        format!("{} and {} are not {n}-composable but have a composite", x.tag(a), x.tag(b)),
                    );
                }
                None
            });
        }
    }

    for k in 1..=top {
        let cs = &cells[k as usize];
        let total = cs.len() as u64 * k as u64;
        r.run(format!("unit/{k}"), total, |i| {
            let c = cs[(i / k as u64) as usize];
            let n = (i % k as u64) as u32;
            let right = x.compose(n, c, x.identity(x.src_at(c, n)));
            let left = x.compose(n, x.identity(x.tgt_at(c, n)), c);
            if right != Ok(c) || left != Ok(c) {
                return violation(
                    "unit",
                    vec![c],
                    format!("identities are not units for {} at level {n}", x.tag(c)),
                );
            }
            None
        });
    }

    for k in 1..=top {
        let cs = &cells[k as usize];
        for n in 0..k {
            let by_src = group(cs, |c| x.src_at(c, n).idx);
            let by_tgt = group(cs, |c| x.tgt_at(c, n).idx);
            let empty: &[CellRef] = &[];
            let blocks = Blocks::new(
                cs.iter()
                    .map(|&y| {
                        let l = by_src.get(&x.tgt_at(y, n).idx).map_or(empty, |v| v.as_slice());
                        let rr = by_tgt.get(&x.src_at(y, n).idx).map_or(empty, |v| v.as_slice());
                        (y, l, rr)
                    })
                    .filter(|(_, l, rr)| !l.is_empty() && !rr.is_empty())
                    .collect(),
            );
            r.run(format!("associativity/{k}/{n}"), blocks.len(), |i| {
                let (b, a, c) = blocks.get(i);
                let lhs = x.compose(n, a, b).and_then(|ab| x.compose(n, ab, c));
                let rhs = x.compose(n, b, c).and_then(|bc| x.compose(n, a, bc));
                match (lhs, rhs) {
                    (Ok(l), Ok(rr)) if l == rr => None,
                    (l, rr) => violation(
                        "associativity",
                        vec![a, b, c],
                        format!(
                            "({} ∘_{n} {}) ∘_{n} {}: {:?} vs {:?}",
                            x.tag(a),
                            x.tag(b),
                            x.tag(c),
                            l,
                            rr
                        ),
                    ),
                }
            });
        }
    }

    for m in 2..=top {
        for k in 1..m {
            let kpairs = x.composable_pairs(m, k);
            for n in 0..k {
                // pairs (x, z) with s_k x = t_k z, keyed by their common s_n
                let mut left: HashMap<u32, Vec<(CellRef, CellRef)>> = HashMap::new();
                let mut right: HashMap<u32, Vec<(CellRef, CellRef)>> = HashMap::new();
                for &(a, c) in &kpairs {
                    left.entry(x.src_at(a, n).idx).or_default().push((a, c));
                    right.entry(x.tgt_at(a, n).idx).or_default().push((a, c));
                }
                let mut keys: Vec<u32> = left.keys().filter(|b| right.contains_key(b)).copied().collect();
                keys.sort_unstable();
                let mut offsets = vec![0u64];
                for b in &keys {
                    let last = *offsets.last().unwrap();
                    offsets.push(last + (left[b].len() * right[b].len()) as u64);
                }
                let total = *offsets.last().unwrap();
                r.run(format!("interchange/{m}/{k}/{n}"), total, |i| {
                    let bi = offsets.partition_point(|&o| o <= i) - 1;
                    let b = keys[bi];
                    let (ls, rs) = (&left[&b], &right[&b]);
                    let local = (i - offsets[bi]) as usize;
                    let (a, c) = ls[local / rs.len()];
                    let (bb, d) = rs[local % rs.len()];
                    interchange(x, k, n, a, bb, c, d)
                });
            }
        }
    }

    r.report.violations.sort();
    r.report
}

fn source_target(x: &OmegaCat, n: u32, a: CellRef, b: CellRef) -> Option<Violation> {
    let k = a.dim;
    let z = match x.compose(n, a, b) {
        Ok(z) => z,
        Err(e) => {
            return violation(
                "composite-defined",
                vec![a, b],
                format!("{} ∘_{n} {}: {e}", x.tag(a), x.tag(b)),
            )
        }
    };
    for j in 0..k {
        let (want_s, want_t) = if j > n {
            let s = x.compose(n, x.src_at(a, j), x.src_at(b, j));
            let t = x.compose(n, x.tgt_at(a, j), x.tgt_at(b, j));
            match (s, t) {
                (Ok(s), Ok(t)) => (s, t),
                _ => {
                    return violation(
                        "source-target",
                        vec![a, b],
                        format!("{j}-boundaries of {} and {} do not compose at level {n}", x.tag(a), x.tag(b)),
                    )
                }
            }
        } else if j == n {
            (x.src_at(b, j), x.tgt_at(a, j))
        } else {
            (x.src_at(a, j), x.tgt_at(a, j))
        };
        if x.src_at(z, j) != want_s || x.tgt_at(z, j) != want_t {
            return violation(
                "source-target",
                vec![a, b],
                format!(
                    "{} ∘_{n} {} = {} has the wrong {j}-boundary",
                    x.tag(a),
                    x.tag(b),
                    x.tag(z)
                ),
            );
        }
    }
    None
}

/// `(a ∘_n b) ∘_k (c ∘_n d) = (a ∘_k c) ∘_n (b ∘_k d)`.
fn interchange(
    x: &OmegaCat,
    k: u32,
    n: u32,
    a: CellRef,
    b: CellRef,
    c: CellRef,
    d: CellRef,
) -> Option<Violation> {
    let lhs = x
        .compose(n, a, b)
        .and_then(|ab| x.compose(n, c, d).and_then(|cd| x.compose(k, ab, cd)));
    let rhs = x
        .compose(k, a, c)
        .and_then(|ac| x.compose(k, b, d).and_then(|bd| x.compose(n, ac, bd)));
    match (lhs, rhs) {
        (Ok(l), Ok(r)) if l == r => None,
        (l, r) => violation(
            "interchange",
            vec![a, b, c, d],
            format!(
                "levels {k}/{n} on {}, {}, {}, {}: {:?} vs {:?}",
                x.tag(a),
                x.tag(b),
                x.tag(c),
                x.tag(d),
                l,
                r
            ),
        ),
    }
}
