pub mod collage;
pub mod error;
pub mod io;
pub mod iso;
pub mod omega;
pub mod parity;
pub mod report;
pub mod slice;
pub mod tag;

pub use error::{Error, Result};
pub use omega::{
    check_axioms, dual, hom, pullback, relabel, terminal, AxiomConfig, AxiomReport, CatBuilder, CellMap, CellRef,
    NewCell, OmegaCat, Violation,
};
pub use report::{CheckReport, Status};
pub use tag::Tag;
