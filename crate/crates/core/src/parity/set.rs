use std::collections::BTreeSet;
use std::fmt;

use super::generator::{Flavor, Generator, Sign};
use crate::error::{Error, Result};
use crate::tag::Tag;

/// A finite set of generators of a common dimension.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParitySet {
    dim: u32,
    elements: BTreeSet<Generator>,
}

impl ParitySet {
    pub fn empty(dim: u32) -> Self {
        ParitySet {
            dim,
            elements: BTreeSet::new(),
        }
    }

    pub fn new(dim: u32, elements: impl IntoIterator<Item = Generator>) -> Result<Self> {
        let elements: BTreeSet<Generator> = elements.into_iter().collect();
        if let Some(g) = elements.iter().find(|g| g.dim() != dim) {
            return Err(Error::Malformed(format!("{g} does not have dimension {dim}")));
        }
        let mut flavors = elements.iter().map(Generator::flavor);
        if let Some(f) = flavors.next() {
            if flavors.any(|g| g != f) {
                return Err(Error::Malformed("simplex and cube generators mixed".into()));
            }
        }
        Ok(ParitySet { dim, elements })
    }

    /// Parses `{(01), (12)}`; the dimension is needed for the empty set.
    pub fn parse(flavor: Flavor, dim: u32, s: &str) -> Result<Self> {
        let inner = s.trim();
        let inner = inner
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .unwrap_or(inner);
        let items = match flavor {
            // simplex generators may contain commas inside parentheses
            Flavor::Simplex => inner
                .split_inclusive(')')
                .map(|t| t.trim_start_matches(|c: char| c == ',' || c.is_whitespace()))
                .filter(|t| !t.trim().is_empty())
                .map(|t| Generator::parse(flavor, t))
                .collect::<Result<Vec<_>>>()?,
            Flavor::Cube => inner
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| Generator::parse(flavor, t))
                .collect::<Result<Vec<_>>>()?,
        };
        ParitySet::new(dim, items)
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Generator> {
        self.elements.iter()
    }

    pub fn contains(&self, g: &Generator) -> bool {
        self.elements.contains(g)
    }

    fn same_dim(&self, other: &ParitySet) {
        assert_eq!(self.dim, other.dim, "parity sets of different dimensions");
    }

    pub fn union(&self, other: &ParitySet) -> ParitySet {
        self.same_dim(other);
        ParitySet {
            dim: self.dim,
            elements: self.elements.union(&other.elements).cloned().collect(),
        }
    }

    pub fn difference(&self, other: &ParitySet) -> ParitySet {
        self.same_dim(other);
        ParitySet {
            dim: self.dim,
            elements: self.elements.difference(&other.elements).cloned().collect(),
        }
    }

    pub fn intersection(&self, other: &ParitySet) -> ParitySet {
        self.same_dim(other);
        ParitySet {
            dim: self.dim,
            elements: self.elements.intersection(&other.elements).cloned().collect(),
        }
    }

    pub fn is_disjoint(&self, other: &ParitySet) -> bool {
        self.elements.is_disjoint(&other.elements)
    }

    /// `(ξ⁻, ξ⁺)`.
    pub fn faces(&self) -> Result<(ParitySet, ParitySet)> {
        if self.dim == 0 {
            return Err(Error::NoFaces);
        }
        let mut odd = ParitySet::empty(self.dim - 1);
        let mut even = ParitySet::empty(self.dim - 1);
        for g in &self.elements {
            let (o, e) = g.faces()?;
            odd.elements.extend(o);
            even.elements.extend(e);
        }
        Ok((odd, even))
    }

    /// `ξ⁺`, the even faces.
    pub fn plus(&self) -> Result<ParitySet> {
        self.faces().map(|(_, e)| e)
    }

    /// `ξ⁻`, the odd faces.
    pub fn minus(&self) -> Result<ParitySet> {
        self.faces().map(|(o, _)| o)
    }

    /// No two distinct elements share an even face or share an odd face.
    pub fn well_formed(&self) -> bool {
        if self.dim == 0 {
            return self.len() <= 1;
        }
        let mut odd = BTreeSet::new();
        let mut even = BTreeSet::new();
        for g in &self.elements {
            let (o, e) = g.faces().expect("positive dimension");
            if !o.into_iter().all(|f| odd.insert(f)) || !e.into_iter().all(|f| even.insert(f)) {
                return false;
            }
        }
        true
    }

    /// `π = (μ ∪ ξ⁺) ∖ ξ⁻` and `μ = (π ∪ ξ⁻) ∖ ξ⁺`.
    pub fn moves(&self, mu: &ParitySet, pi: &ParitySet) -> bool {
        if self.dim == 0 || mu.dim + 1 != self.dim || pi.dim + 1 != self.dim {
            return false;
        }
        let (minus, plus) = self.faces().expect("positive dimension");
        mu.union(&plus).difference(&minus) == *pi && pi.union(&minus).difference(&plus) == *mu
    }

    /// `ξ^∨`: appends the vertex `top` to every simplex.
    pub fn vee(&self, top: u32) -> ParitySet {
        ParitySet {
            dim: self.dim + 1,
            elements: self
                .elements
                .iter()
                .map(|g| match g {
                    Generator::Simplex(a) => Generator::Simplex(a.vee(top)),
                    Generator::Cube(_) => panic!("vee applies to simplex generators"),
                })
                .collect(),
        }
    }

    /// `ξη`: appends a symbol to every cube string.
    pub fn eta(&self, s: Sign) -> ParitySet {
        ParitySet {
            dim: self.dim + u32::from(s == Sign::Zero),
            elements: self
                .elements
                .iter()
                .map(|g| match g {
                    Generator::Cube(a) => Generator::Cube(a.append(s)),
                    Generator::Simplex(_) => panic!("eta applies to cube generators"),
                })
                .collect(),
        }
    }

    pub fn to_tag(&self) -> Tag {
        Tag::set(self.elements.iter().map(|g| Tag::atom(g.to_string())).collect())
    }
}

impl fmt::Display for ParitySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, g) in self.elements.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str("}")
    }
}

/// `(odd, even)` faces of a single simplex generator, as sets.
pub fn simplex_faces(a: &Generator) -> Result<(ParitySet, ParitySet)> {
    assert_eq!(a.flavor(), Flavor::Simplex);
    ParitySet::new(a.dim(), [a.clone()])?.faces()
}

/// `(odd, even)` faces of a single cube generator, as sets.
pub fn cube_faces(a: &Generator) -> Result<(ParitySet, ParitySet)> {
    assert_eq!(a.flavor(), Flavor::Cube);
    ParitySet::new(a.dim(), [a.clone()])?.faces()
}
