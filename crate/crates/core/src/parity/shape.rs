use std::collections::HashMap;

use super::generator::{CubeGen, Flavor, Generator, Sign, SimplexGen};
use super::set::ParitySet;
use crate::error::{Error, Result};

/// Bitmask tables for all generators of `[n]` or `⟨n⟩`, one table per dimension.
///
/// Bit `i` of a dimension-`j` mask stands for the `i`-th generator of
/// dimension `j` in sorted order; `plus[j][i]` and `minus[j][i]` are the
/// masks of its even and odd faces.
#[derive(Clone, Debug)]
pub struct Shape {
    flavor: Flavor,
    n: u32,
    gens: Vec<Vec<Generator>>,
    index: Vec<HashMap<Generator, u32>>,
    plus: Vec<Vec<u128>>,
    minus: Vec<Vec<u128>>,
}

impl Shape {
    pub fn new(flavor: Flavor, n: u32) -> Result<Shape> {
        if n > 12 {
            return Err(Error::AmbientTooLarge(format!("n = {n}")));
        }
        let mut gens: Vec<Vec<Generator>> = vec![Vec::new(); n as usize + 1];
        match flavor {
            Flavor::Simplex => {
                for bits in 1u32..(1 << (n + 1)) {
                    let entries: Vec<u32> = (0..=n).filter(|i| bits >> i & 1 == 1).collect();
                    let g = SimplexGen::new(entries).expect("increasing by construction");
                    gens[g.dim() as usize].push(Generator::Simplex(g));
                }
            }
            Flavor::Cube => {
                for code in 0..3u32.pow(n) {
                    let mut c = code;
                    let symbols = (0..n)
                        .map(|_| {
                            let s = [Sign::Minus, Sign::Zero, Sign::Plus][(c % 3) as usize];
                            c /= 3;
                            s
                        })
                        .collect();
                    let g = CubeGen::new(symbols);
                    gens[g.dim() as usize].push(Generator::Cube(g));
                }
            }
        }
        for (j, row) in gens.iter_mut().enumerate() {
            if row.len() > 128 {
                return Err(Error::AmbientTooLarge(format!(
                    "{} generators in dimension {j}",
                    row.len()
                )));
            }
            row.sort();
        }
        let index: Vec<HashMap<Generator, u32>> = gens
            .iter()
            .map(|row| row.iter().enumerate().map(|(i, g)| (g.clone(), i as u32)).collect())
            .collect();
        let mut plus = vec![Vec::new()];
        let mut minus = vec![Vec::new()];
        for j in 1..gens.len() {
            let (mut p, mut m) = (Vec::new(), Vec::new());
            for g in &gens[j] {
                let (odd, even) = g.faces().expect("positive dimension");
                let mask = |fs: Vec<Generator>| fs.iter().fold(0u128, |acc, f| acc | 1 << index[j - 1][f]);
                m.push(mask(odd));
                p.push(mask(even));
            }
            plus.push(p);
            minus.push(m);
        }
        Ok(Shape {
            flavor,
            n,
            gens,
            index,
            plus,
            minus,
        })
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn generators(&self, dim: u32) -> &[Generator] {
        self.gens.get(dim as usize).map_or(&[], |v| v.as_slice())
    }

    pub fn generator_index(&self, g: &Generator) -> Option<u32> {
        self.index.get(g.dim() as usize)?.get(g).copied()
    }

    pub(crate) fn plus_of(&self, dim: u32, i: u32) -> u128 {
        self.plus[dim as usize][i as usize]
    }

    pub(crate) fn minus_of(&self, dim: u32, i: u32) -> u128 {
        self.minus[dim as usize][i as usize]
    }

    pub fn mask(&self, s: &ParitySet) -> Result<u128> {
        s.iter().try_fold(0u128, |acc, g| {
            self.generator_index(g)
                .map(|i| acc | 1 << i)
                .ok_or_else(|| Error::Malformed(format!("{g} is not a generator of this shape")))
        })
    }

    pub fn set(&self, dim: u32, mask: u128) -> ParitySet {
        let row = self.generators(dim);
        ParitySet::new(
            dim,
            (0..row.len()).filter(|&i| mask >> i & 1 == 1).map(|i| row[i].clone()),
        )
        .expect("generators of one dimension")
    }

    /// `(ξ⁻, ξ⁺)` on masks.
    pub fn faces_mask(&self, dim: u32, mask: u128) -> (u128, u128) {
        let (mut m, mut p) = (0, 0);
        let mut rest = mask;
        while rest != 0 {
            let i = rest.trailing_zeros();
            rest &= rest - 1;
            m |= self.minus_of(dim, i);
            p |= self.plus_of(dim, i);
        }
        (m, p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_counts() {
        let o3 = Shape::new(Flavor::Simplex, 3).unwrap();
        let counts: Vec<usize> = (0..=3).map(|j| o3.generators(j).len()).collect();
        assert_eq!(counts, vec![4, 6, 4, 1]);
        let q4 = Shape::new(Flavor::Cube, 4).unwrap();
        let counts: Vec<usize> = (0..=4).map(|j| q4.generators(j).len()).collect();
        assert_eq!(counts, vec![16, 32, 24, 8, 1]);
    }

    #[test]
    fn masks_agree_with_sets() {
        let q3 = Shape::new(Flavor::Cube, 3).unwrap();
        for (i, g) in q3.generators(2).iter().enumerate() {
            let set = ParitySet::new(2, [g.clone()]).unwrap();
            let (m, p) = set.faces().unwrap();
            assert_eq!(q3.faces_mask(2, 1 << i), (q3.mask(&m).unwrap(), q3.mask(&p).unwrap()));
        }
    }
}
