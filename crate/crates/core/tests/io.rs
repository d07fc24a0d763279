mod common;

use std::collections::BTreeSet;

use omegacat::collage::{iterate, Construction};
use omegacat::io::{export_dot, export_json, import_json, import_json_unchecked, Kind, Parameter, FORMAT};
use omegacat::{terminal, Error, OmegaCat};
use serde_json::Value;

use common::{cubical, oriental, same_structure};

fn doc(x: &OmegaCat) -> String {
    export_json(x, Kind::Custom, vec![Parameter { name: "note".into(), value: "test".into() }])
}

#[test]
fn terminal_document() {
    let text = export_json(&terminal(), Kind::Custom, vec![]);
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["format"], FORMAT);
    assert_eq!(v["manifest"]["truncation"], 0);
    assert_eq!(v["cells"].as_array().unwrap().len(), 1);
    assert_eq!(v["cells"][0].as_array().unwrap().len(), 1);
    assert_eq!(v["compositions"].as_array().unwrap().len(), 0);
    assert!(text.ends_with("}\n"));
}

#[test]
fn round_trips_are_exact() {
    let shapes = [
        oriental(2).cat().clone(),
        oriental(3).cat().clone(),
        cubical(2).cat().clone(),
        iterate(Construction::Cone, 3).unwrap(),
    ];
    for x in shapes {
        let text = doc(&x);
        let back = import_json(&text).unwrap();
        assert!(back.checksum_ok);
        assert!(same_structure(&back.cat, &x));
        assert_eq!(back.manifest.parameter("note"), Some(&Value::from("test")));
        assert_eq!(doc(&back.cat), text);
    }
}

#[test]
fn export_is_deterministic() {
    let a = doc(oriental(3).cat());
    let b = doc(oriental(3).cat());
    assert_eq!(a, b);
}

#[test]
fn import_accepts_any_cell_order() {
    let x = cubical(2);
    let mut v: Value = serde_json::from_str(&doc(x.cat())).unwrap();
    // reversing the objects renumbers every src/tgt of the 1-cells
    let objects = v["cells"][0].as_array_mut().unwrap();
    objects.reverse();
    let last = objects.len() as u64 - 1;
    for cell in v["cells"][1].as_array_mut().unwrap() {
        for key in ["src", "tgt"] {
            cell[key] = (last - cell[key].as_u64().unwrap()).into();
        }
        if let Some(i) = cell["identity_of"].as_u64() {
            cell["identity_of"] = (last - i).into();
        }
    }
    let back = import_json_unchecked(&v.to_string()).unwrap();
    assert!(!back.checksum_ok);
    assert!(same_structure(&back.cat, x.cat()));
}

fn schema_pointer(e: Error) -> String {
    match e {
        Error::Schema { pointer, .. } => pointer,
        other => panic!("expected a schema error, got {other}"),
    }
}

#[test]
fn dangling_source_is_located() {
    let mut v: Value = serde_json::from_str(&doc(oriental(2).cat())).unwrap();
    v["cells"][1][0]["src"] = 99.into();
    let e = import_json_unchecked(&v.to_string()).unwrap_err();
    assert_eq!(schema_pointer(e), "/cells/1/0/src");
}

#[test]
fn malformed_documents_are_located() {
    let base: Value = serde_json::from_str(&doc(oriental(2).cat())).unwrap();

    let mut v = base.clone();
    v["format"] = "other".into();
    assert_eq!(schema_pointer(import_json(&v.to_string()).unwrap_err()), "/format");

    let mut v = base.clone();
    v["compositions"][0]["table"].as_array_mut().unwrap().pop();
    assert_eq!(schema_pointer(import_json(&v.to_string()).unwrap_err()), "/compositions/0/table");

    let mut v = base.clone();
    v["cells"][0][0]["tag"] = Value::Bool(true);
    assert!(schema_pointer(import_json(&v.to_string()).unwrap_err()).starts_with("/cells/0/0/tag"));

    let mut v = base.clone();
    v["cells"].as_array_mut().unwrap().pop();
    assert_eq!(schema_pointer(import_json(&v.to_string()).unwrap_err()), "/cells");

    assert!(matches!(import_json("{"), Err(Error::Parse(_))));
}

#[test]
fn checksum_mismatch_is_rejected() {
    let mut v: Value = serde_json::from_str(&doc(oriental(2).cat())).unwrap();
    v["manifest"]["checksum"] = "0".repeat(64).into();
    let text = v.to_string();
    assert_eq!(schema_pointer(import_json(&text).unwrap_err()), "/manifest/checksum");
    assert!(!import_json_unchecked(&text).unwrap().checksum_ok);
}

#[test]
fn documents_carry_the_schema_keys() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../schema/omegacat.schema.json");
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    let v: Value = serde_json::from_str(&doc(oriental(2).cat())).unwrap();
    let keys = |o: &Value| o.as_object().unwrap().keys().cloned().collect::<BTreeSet<String>>();
    let required = |s: &Value| s["required"].as_array().unwrap().iter().map(|k| k.as_str().unwrap().to_string()).collect::<BTreeSet<_>>();
    assert_eq!(keys(&v), required(&schema));
    assert_eq!(keys(&v["manifest"]), required(&schema["properties"]["manifest"]));
    assert_eq!(keys(&v["cells"][1][0]), required(&schema["properties"]["cells"]["items"]["items"]));
}

#[test]
fn dot_of_the_edge() {
    let dot = export_dot(oriental(1).cat(), 1).unwrap();
    assert_eq!(dot.matches(" [label=").count(), 3);
    assert_eq!(dot.matches(" -> ").count(), 1);
    assert!(dot.contains("[label=\"(01)\"]"));
}

#[test]
fn dot_of_terminal() {
    let dot = export_dot(&terminal(), 2).unwrap();
    assert_eq!(dot.matches(" [label=").count(), 1);
    assert_eq!(dot.matches(" -> ").count(), 0);
}

#[test]
fn dot_of_the_square() {
    let dot = export_dot(cubical(2).cat(), 2).unwrap();
    assert_eq!(dot.lines().filter(|l| l.trim_start().starts_with('o') && !l.contains("->")).count(), 4);
    assert_eq!(dot.matches(" -> ").count(), 6);
    assert_eq!(dot.matches("shape=note").count(), 1);
    assert!(dot.contains("src: ") && dot.contains("tgt: "));
    assert!(export_dot(cubical(2).cat(), 3).is_err());
}
