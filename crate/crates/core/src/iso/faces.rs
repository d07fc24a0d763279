//! The lifts `ξ ↦ ξ^∨` and `ξ ↦ ξη` and how they interact with faces.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::parity::{Flavor, ParitySet, Shape, Sign};
use crate::report::CheckReport;

/// `ξ^∨`: appends the vertex `n + 1` to every element of `ξ ⊆ [n]_j`.
pub fn vee(xi: &ParitySet, n: u32) -> ParitySet {
    xi.vee(n + 1)
}

/// `ξη`: appends `η` to every element of `ξ ⊆ ⟨n⟩_j`.
pub fn eta(xi: &ParitySet, s: Sign) -> ParitySet {
    xi.eta(s)
}

/// `(ξ^∨)^±` against the right-hand sides of the lifting identity, for
/// `ξ ⊆ [n]_j` with `j > 0`.
fn vee_case(xi: &ParitySet, n: u32) -> Result<bool> {
    let j = xi.dim();
    let (minus, plus) = vee(xi, n).faces()?;
    let (xm, xp) = xi.faces()?;
    let (want_plus, want_minus) = if j % 2 == 0 {
        (vee(&xp, n), vee(&xm, n).union(xi))
    } else {
        (vee(&xp, n).union(xi), vee(&xm, n))
    };
    Ok(plus == want_plus && minus == want_minus)
}

/// `(ξ⊙)^±` against the lifting identity, and `(ξη)^ε = (ξ^ε)η` for
/// `η ∈ {⊖, ⊕}`.
fn eta_case(xi: &ParitySet) -> Result<bool> {
    let j = xi.dim();
    let (minus, plus) = eta(xi, Sign::Zero).faces()?;
    let (xm, xp) = xi.faces()?;
    let (plus_side, minus_side) = if j % 2 == 0 { (Sign::Plus, Sign::Minus) } else { (Sign::Minus, Sign::Plus) };
    let mut ok = plus == eta(&xp, Sign::Zero).union(&eta(xi, plus_side))
        && minus == eta(&xm, Sign::Zero).union(&eta(xi, minus_side));
    for s in [Sign::Minus, Sign::Plus] {
        let (m, p) = eta(xi, s).faces()?;
        ok &= m == eta(&xm, s) && p == eta(&xp, s);
    }
    Ok(ok)
}

fn sweep(flavor: Flavor, n: u32, name: &str, masks: impl Fn(u32, usize) -> Vec<u128>) -> Result<CheckReport> {
    let shape = Shape::new(flavor, n)?;
    let mut report = CheckReport::new(name);
    for j in 1..=n {
        let count = shape.generators(j).len();
        for mask in masks(j, count) {
            let xi = shape.set(j, mask);
            let ok = match flavor {
                Flavor::Simplex => vee_case(&xi, n)?,
                Flavor::Cube => eta_case(&xi)?,
            };
            report.count(&format!("dim{j}"), 1);
            if !ok {
                report.fail(format!("{xi}"));
            }
        }
    }
    Ok(report.finish())
}

fn full(count: usize) -> u128 {
    if count >= 128 {
        u128::MAX
    } else {
        (1u128 << count) - 1
    }
}

/// Every subset of every `[n]_j` (or `⟨n⟩_j`); refuses more than `2^24`
/// subsets in one dimension.
pub fn lifting_identities_exhaustive(flavor: Flavor, n: u32) -> Result<CheckReport> {
    let shape = Shape::new(flavor, n)?;
    if let Some(j) = (1..=n).find(|&j| shape.generators(j).len() > 24) {
        return Err(crate::error::Error::BudgetExceeded(format!(
            "{} generators in dimension {j}",
            shape.generators(j).len()
        )));
    }
    sweep(flavor, n, "lifting-identities", |_, count| (0..=full(count)).collect())
}

/// `samples` seeded random subsets in each dimension `j ≥ 1`.
pub fn lifting_identities_sampled(flavor: Flavor, n: u32, samples: usize, seed: u64) -> Result<CheckReport> {
    sweep(flavor, n, "lifting-identities", |j, count| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ u64::from(j));
        (0..samples).map(|_| rng.gen::<u128>() & full(count)).collect()
    })
}
