use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    Simplex,
    Cube,
}

/// A symbol of a cube generator: `⊖`, `⊙` or `⊕`, written `-`, `0`, `+`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Minus,
    Zero,
    Plus,
}

impl Sign {
    pub fn symbol(self) -> char {
        match self {
            Sign::Minus => '-',
            Sign::Zero => '0',
            Sign::Plus => '+',
        }
    }

    pub fn from_char(c: char) -> Option<Sign> {
        match c {
            '-' | '⊖' => Some(Sign::Minus),
            '0' | '⊙' => Some(Sign::Zero),
            '+' | '⊕' => Some(Sign::Plus),
            _ => None,
        }
    }
}

/// An order-preserving injection `[j] → [n]`, stored as its image.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimplexGen(Vec<u32>);

impl SimplexGen {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Parse("a simplex generator needs at least one vertex".into()));
        }
        if entries.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Parse(format!("{entries:?} is not strictly increasing")));
        }
        Ok(SimplexGen(entries))
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn dim(&self) -> u32 {
        self.0.len() as u32 - 1
    }

    /// `aδ_k`: drops the `k`-th vertex.
    pub fn delta(&self, k: usize) -> SimplexGen {
        let mut v = self.0.clone();
        v.remove(k);
        SimplexGen(v)
    }

    /// Appends a new top vertex.
    pub fn vee(&self, top: u32) -> SimplexGen {
        let mut v = self.0.clone();
        v.push(top);
        SimplexGen(v)
    }

    /// `(odd, even)` faces.
    pub fn faces(&self) -> Result<(Vec<SimplexGen>, Vec<SimplexGen>)> {
        if self.dim() == 0 {
            return Err(Error::NoFaces);
        }
        let (mut odd, mut even) = (Vec::new(), Vec::new());
        for k in 0..self.0.len() {
            if k % 2 == 0 {
                even.push(self.delta(k));
            } else {
                odd.push(self.delta(k));
            }
        }
        Ok((odd, even))
    }
}

impl fmt::Display for SimplexGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let spaced = self.0.iter().any(|&v| v > 9);
        f.write_str("(")?;
        for (i, v) in self.0.iter().enumerate() {
            if spaced && i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

/// A string over `{⊖, ⊙, ⊕}`; its dimension is the number of `⊙`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CubeGen(Vec<Sign>);

impl CubeGen {
    pub fn new(symbols: Vec<Sign>) -> Self {
        CubeGen(symbols)
    }

    pub fn symbols(&self) -> &[Sign] {
        &self.0
    }

    pub fn dim(&self) -> u32 {
        self.0.iter().filter(|&&s| s == Sign::Zero).count() as u32
    }

    /// Replaces the `i`-th `⊙` (counting from 1) by `s`.
    pub fn delta(&self, i: usize, s: Sign) -> CubeGen {
        let mut v = self.0.clone();
        let pos = v
            .iter()
            .enumerate()
            .filter(|(_, &c)| c == Sign::Zero)
            .nth(i - 1)
            .map(|(p, _)| p)
            .expect("index within dimension");
        v[pos] = s;
        CubeGen(v)
    }

    pub fn append(&self, s: Sign) -> CubeGen {
        let mut v = self.0.clone();
        v.push(s);
        CubeGen(v)
    }

    /// `(odd, even)` faces: `aδ_i⁻` and `aδ_i⁺` with alternating signs.
    pub fn faces(&self) -> Result<(Vec<CubeGen>, Vec<CubeGen>)> {
        let j = self.dim() as usize;
        if j == 0 {
            return Err(Error::NoFaces);
        }
        let (mut odd, mut even) = (Vec::new(), Vec::new());
        for i in 1..=j {
            let (m, p) = if i % 2 == 1 {
                (Sign::Minus, Sign::Plus)
            } else {
                (Sign::Plus, Sign::Minus)
            };
            odd.push(self.delta(i, m));
            even.push(self.delta(i, p));
        }
        Ok((odd, even))
    }
}

impl fmt::Display for CubeGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{}", s.symbol())?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    Simplex(SimplexGen),
    Cube(CubeGen),
}

impl Generator {
    pub fn flavor(&self) -> Flavor {
        match self {
            Generator::Simplex(_) => Flavor::Simplex,
            Generator::Cube(_) => Flavor::Cube,
        }
    }

    pub fn dim(&self) -> u32 {
        match self {
            Generator::Simplex(a) => a.dim(),
            Generator::Cube(a) => a.dim(),
        }
    }

    pub fn faces(&self) -> Result<(Vec<Generator>, Vec<Generator>)> {
        match self {
            Generator::Simplex(a) => {
                let (o, e) = a.faces()?;
                Ok((
                    o.into_iter().map(Generator::Simplex).collect(),
                    e.into_iter().map(Generator::Simplex).collect(),
                ))
            }
            Generator::Cube(a) => {
                let (o, e) = a.faces()?;
                Ok((
                    o.into_iter().map(Generator::Cube).collect(),
                    e.into_iter().map(Generator::Cube).collect(),
                ))
            }
        }
    }

    /// Parses `(0 1 3)`, `(013)` or `013` for simplices and `-0+` for cubes.
    pub fn parse(flavor: Flavor, s: &str) -> Result<Generator> {
        let s = s.trim();
        match flavor {
            Flavor::Simplex => {
                let inner = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(s);
                let entries: Vec<u32> = if inner.contains(|c: char| c.is_whitespace() || c == ',') {
                    inner
                        .split(|c: char| c.is_whitespace() || c == ',')
                        .filter(|t| !t.is_empty())
                        .map(|t| t.parse::<u32>().map_err(|e| Error::Parse(format!("{t:?}: {e}"))))
                        .collect::<Result<_>>()?
                } else {
                    inner
                        .chars()
                        .map(|c| {
                            c.to_digit(10)
                                .ok_or_else(|| Error::Parse(format!("{c:?} is not a vertex in {s:?}")))
                        })
                        .collect::<Result<_>>()?
                };
                SimplexGen::new(entries).map(Generator::Simplex)
            }
            Flavor::Cube => s
                .chars()
                .map(|c| Sign::from_char(c).ok_or_else(|| Error::Parse(format!("{c:?} is not a cube symbol in {s:?}"))))
                .collect::<Result<Vec<_>>>()
                .map(|v| Generator::Cube(CubeGen(v))),
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Simplex(a) => a.fmt(f),
            Generator::Cube(a) => a.fmt(f),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn simplex(s: &str) -> Generator {
        Generator::parse(Flavor::Simplex, s).unwrap()
    }

    fn cube(s: &str) -> Generator {
        Generator::parse(Flavor::Cube, s).unwrap()
    }

    #[test]
    fn parse_forms_agree() {
        assert_eq!(simplex("(0 1 3)"), simplex("013"));
        assert_eq!(simplex("(013)").to_string(), "(013)");
        assert_eq!(simplex("(2 11)").to_string(), "(2 11)");
        assert_eq!(cube("⊖⊙⊕"), cube("-0+"));
        assert!(Generator::parse(Flavor::Simplex, "(10)").is_err());
        assert!(Generator::parse(Flavor::Cube, "-x").is_err());
    }

    #[test]
    fn simplex_edge_faces() {
        let (odd, even) = simplex("01").faces().unwrap();
        assert_eq!(odd, vec![simplex("0")]);
        assert_eq!(even, vec![simplex("1")]);
    }

    #[test]
    fn simplex_triangle_faces() {
        let (odd, even) = simplex("012").faces().unwrap();
        assert_eq!(odd, vec![simplex("02")]);
        assert_eq!(even, vec![simplex("12"), simplex("01")]);
    }

    #[test]
    fn square_faces() {
        let (odd, even) = cube("00").faces().unwrap();
        assert_eq!(odd, vec![cube("-0"), cube("0+")]);
        assert_eq!(even, vec![cube("+0"), cube("0-")]);
    }

    #[test]
    fn vertices_have_no_faces() {
        assert_eq!(simplex("3").faces(), Err(Error::NoFaces));
        assert_eq!(cube("-+").faces(), Err(Error::NoFaces));
    }
}
