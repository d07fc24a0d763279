use std::collections::HashSet;

use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::omega::{CatBuilder, NewCell, OmegaCat};
use crate::tag::Tag;

pub const FORMAT: &str = "omegacat/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Oriental,
    Cube,
    Cone,
    Cylinder,
    Coslice,
    Collage,
    Custom,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Parameter {
    pub name: String,
    pub value: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Manifest {
    pub kind: Kind,
    pub parameters: Vec<Parameter>,
    pub truncation: u32,
    pub checksum: String,
}

impl Manifest {
    pub fn parameter(&self, name: &str) -> Option<&Value> {
        self.parameters.iter().find(|p| p.name == name).map(|p| &p.value)
    }
}

/// A parsed document. `checksum_ok` is false when the recorded checksum does
/// not match the cell data.
#[derive(Clone, Debug)]
pub struct Imported {
    pub manifest: Manifest,
    pub cat: OmegaCat,
    pub checksum_ok: bool,
}

fn body(x: &OmegaCat) -> (Value, Value) {
    let cells: Vec<Value> = (0..=x.truncation())
        .map(|d| {
            Value::Array(
                x.cells(d)
                    .map(|c| {
                        let (s, t) = if d == 0 { (0, 0) } else { (x.src(c).idx, x.tgt(c).idx) };
                        json!({
                            "tag": x.tag(c).to_json(),
                            "src": s,
                            "tgt": t,
                            "identity_of": x.identity_of(c).map(|i| i.idx),
                        })
                    })
                    .collect(),
            )
        })
        .collect();
    let mut tables = Vec::new();
    for k in 1..=x.truncation() {
        for n in 0..k {
            let rows: Vec<Value> = x
                .composition_table(k, n)
                .into_iter()
                .map(|(a, b, c)| json!([a, b, c]))
                .collect();
            tables.push(json!({ "dim": k, "level": n, "table": rows }));
        }
    }
    (Value::Array(cells), Value::Array(tables))
}

fn checksum(cells: &Value, compositions: &Value) -> String {
    let canonical = serde_json::to_vec(&json!({ "cells": cells, "compositions": compositions }))
        .expect("values serialize");
    hex::encode(Sha256::digest(&canonical))
}

/// Canonical serialization: keys sorted, cells in canonical order, tables
/// sorted, so that equal categories give identical bytes.
pub fn export_json(x: &OmegaCat, kind: Kind, parameters: Vec<Parameter>) -> String {
    let (cells, compositions) = body(x);
    let manifest = Manifest {
        kind,
        parameters,
        truncation: x.truncation(),
        checksum: checksum(&cells, &compositions),
    };
    let doc = json!({
        "format": FORMAT,
        "manifest": manifest,
        "cells": cells,
        "compositions": compositions,
    });
    let mut out = serde_json::to_string_pretty(&doc).expect("values serialize");
    out.push('\n');
    out
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str, pointer: &str) -> Result<&'a Value> {
    obj.get(key)
        .ok_or_else(|| Error::schema(pointer, format!("missing field `{key}`")))
}

fn object<'a>(v: &'a Value, pointer: &str) -> Result<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| Error::schema(pointer, "expected an object"))
}

fn array<'a>(v: &'a Value, pointer: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| Error::schema(pointer, "expected an array"))
}

fn index(v: &Value, pointer: &str, bound: usize) -> Result<u32> {
    let i = v
        .as_u64()
        .ok_or_else(|| Error::schema(pointer, "expected a non-negative integer"))?;
    if i as usize >= bound {
        return Err(Error::schema(pointer, format!("index {i} is out of range (0..{bound})")));
    }
    Ok(i as u32)
}

/// Parses and validates a document; rejects a checksum mismatch.
pub fn import_json(text: &str) -> Result<Imported> {
    let doc = import_json_unchecked(text)?;
    if !doc.checksum_ok {
        return Err(Error::schema("/manifest/checksum", "checksum does not match the cell data"));
    }
    Ok(doc)
}

/// As [`import_json`], but reports a checksum mismatch instead of failing,
/// so that corrupted documents can still be inspected.
pub fn import_json_unchecked(text: &str) -> Result<Imported> {
    let doc: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let root = object(&doc, "")?;
    match field(root, "format", "")?.as_str() {
        Some(FORMAT) => {}
        _ => return Err(Error::schema("/format", format!("expected \"{FORMAT}\""))),
    }
    let manifest: Manifest = serde_json::from_value(field(root, "manifest", "")?.clone())
        .map_err(|e| Error::schema("/manifest", e.to_string()))?;
    let cells_v = field(root, "cells", "")?;
    let tables_v = field(root, "compositions", "")?;
    let layers = array(cells_v, "/cells")?;
    if layers.len() != manifest.truncation as usize + 1 {
        return Err(Error::schema(
            "/cells",
            format!("expected {} layers for truncation {}", manifest.truncation + 1, manifest.truncation),
        ));
    }

    let mut builder = CatBuilder::new(manifest.truncation);
    // document index -> canonical index, per layer
    let mut perms: Vec<Vec<u32>> = Vec::new();
    for (d, layer) in layers.iter().enumerate() {
        let p = format!("/cells/{d}");
        let rows = array(layer, &p)?;
        let prev = if d == 0 { 0 } else { perms[d - 1].len() };
        let mut new_cells = Vec::with_capacity(rows.len());
        for (i, row) in rows.iter().enumerate() {
            let p = format!("{p}/{i}");
            let obj = object(row, &p)?;
            let tag = Tag::from_json(field(obj, "tag", &p)?, &format!("{p}/tag"))?;
            if d == 0 {
                new_cells.push(NewCell::object(tag));
                continue;
            }
            let look = |key: &str| -> Result<u32> {
                let v = index(field(obj, key, &p)?, &format!("{p}/{key}"), prev)?;
                Ok(perms[d - 1][v as usize])
            };
            let identity_of = match field(obj, "identity_of", &p)? {
                Value::Null => None,
                _ => Some(look("identity_of")?),
            };
            new_cells.push(NewCell {
                tag,
                src: look("src")?,
                tgt: look("tgt")?,
                identity_of,
            });
        }
        let perm = builder.push_layer(new_cells).map_err(|e| match e {
            Error::Malformed(m) => Error::schema(p.clone(), m),
            other => other,
        })?;
        perms.push(perm);
    }

    let tables = array(tables_v, "/compositions")?;
    let mut seen = HashSet::new();
    for (t, table) in tables.iter().enumerate() {
        let p = format!("/compositions/{t}");
        let obj = object(table, &p)?;
        let k = index(field(obj, "dim", &p)?, &format!("{p}/dim"), manifest.truncation as usize + 1)?;
        let n = index(field(obj, "level", &p)?, &format!("{p}/level"), k as usize)?;
        if k == 0 || !seen.insert((k, n)) {
            return Err(Error::schema(format!("{p}/dim"), "duplicate or invalid table"));
        }
        let cat = builder.partial();
        let perm = &perms[k as usize];
        let mut entries = Vec::new();
        let mut keys = HashSet::new();
        for (r, row) in array(field(obj, "table", &p)?, &format!("{p}/table"))?.iter().enumerate() {
            let rp = format!("{p}/table/{r}");
            let triple = array(row, &rp)?;
            if triple.len() != 3 {
                return Err(Error::schema(rp, "expected [x, y, x ∘ y]"));
            }
            let ix = |j: usize| index(&triple[j], &format!("{rp}/{j}"), perm.len()).map(|i| perm[i as usize]);
            let (a, b, c) = (ix(0)?, ix(1)?, ix(2)?);
            let (xa, xb) = (crate::CellRef::new(k, a), crate::CellRef::new(k, b));
            if cat.src_at(xa, n) != cat.tgt_at(xb, n) {
                return Err(Error::schema(rp, format!("cells are not {n}-composable")));
            }
            if !keys.insert((a, b)) {
                return Err(Error::schema(rp, "pair listed twice"));
            }
            entries.push((a, b, c));
        }
        let expected = cat.composable_pairs(k, n).len();
        if entries.len() != expected {
            return Err(Error::schema(
                format!("{p}/table"),
                format!("{} composites listed, {expected} composable pairs exist", entries.len()),
            ));
        }
        builder.install_table(k, n, entries);
    }
    for k in 1..=manifest.truncation {
        for n in 0..k {
            if !seen.contains(&(k, n)) {
                return Err(Error::schema("/compositions", format!("no table for dimension {k}, level {n}")));
            }
        }
    }
    let cat = builder.finish()?;
    let checksum_ok = checksum(cells_v, tables_v) == manifest.checksum;
    Ok(Imported {
        manifest,
        cat,
        checksum_ok,
    })
}
