//! Orientals `O(n)` and cubes `Q(n)` built directly from parity data.
//!
//! A generator is a strictly increasing vertex list (simplex flavor) or a
//! string over `{⊖, ⊙, ⊕}` (cube flavor). Cells are towers of generator sets,
//! each level well-formed and moving its source to its target; composition
//! is union.

mod category;
mod generator;
mod set;
mod shape;
mod tower;

pub use category::{enumerate_cells, ClosureReport, ClosureWitness, ParityCategory, DEFAULT_NODE_LIMIT};
pub use generator::{CubeGen, Flavor, Generator, Sign, SimplexGen};
pub use set::{cube_faces, simplex_faces, ParitySet};
pub use shape::Shape;
pub use tower::{compose_towers, CellTower};
