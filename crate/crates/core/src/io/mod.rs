//! JSON interchange and DOT export.

mod dot;
mod json;

pub use dot::export_dot;
pub use json::{export_json, import_json, import_json_unchecked, Imported, Kind, Manifest, Parameter, FORMAT};
