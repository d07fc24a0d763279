mod common;

use std::sync::Arc;

use omegacat::io::{export_json, import_json_unchecked, Kind};
use omegacat::{check_axioms, dual, hom, pullback, relabel, terminal, AxiomConfig, CellMap, CellRef, Error, OmegaCat, Tag};
use proptest::prelude::*;
use serde_json::Value;

use common::{cubical, oriental, same_structure, simplex, unique};

#[test]
fn terminal_boundaries_are_the_object() {
    let t = terminal();
    let star = CellRef::new(0, 0);
    let two = t.lift(star, 2);
    assert_eq!(t.boundary(two, 0).unwrap(), (star, star));
    assert_eq!(t.boundary(two, 1).unwrap(), (t.lift(star, 1), t.lift(star, 1)));
}

#[test]
fn oriental_two_cell_boundaries() {
    let o2 = oriental(2);
    let x = unique(&o2, 2, &simplex(2, "{(012)}"));
    let (s0, t0) = o2.cat().boundary(x, 0).unwrap();
    assert_eq!(o2.top(s0), simplex(0, "{(0)}"));
    assert_eq!(o2.top(t0), simplex(0, "{(2)}"));
    let (s1, t1) = o2.cat().boundary(x, 1).unwrap();
    assert_eq!(o2.top(s1), simplex(1, "{(02)}"));
    assert_eq!(o2.top(t1), simplex(1, "{(01),(12)}"));
}

#[test]
fn boundary_errors() {
    let o2 = oriental(2);
    let x = unique(&o2, 2, &simplex(2, "{(012)}"));
    assert!(matches!(o2.cat().boundary(x, 2), Err(Error::DimensionOutOfRange { .. })));
    assert!(matches!(o2.cat().boundary(CellRef::new(1, 999), 0), Err(Error::UnknownCell(_))));
}

#[test]
fn edge_composite_is_the_union() {
    let o2 = oriental(2);
    let x = unique(&o2, 1, &simplex(1, "{(12)}"));
    let y = unique(&o2, 1, &simplex(1, "{(01)}"));
    let z = o2.cat().compose(0, x, y).unwrap();
    assert_eq!(o2.top(z), simplex(1, "{(01),(12)}"));
    assert_eq!(o2.top(o2.cat().src(z)), simplex(0, "{(0)}"));
    assert_eq!(o2.top(o2.cat().tgt(z)), simplex(0, "{(2)}"));
    assert!(matches!(o2.cat().compose(0, y, x), Err(Error::NotComposable { .. })));
}

#[test]
fn whiskering_keeps_the_top() {
    let o3 = oriental(3);
    let x = o3.cat();
    let alpha = o3
        .cat()
        .cells(2)
        .find(|&c| o3.top(c) == simplex(2, "{(012)}") && o3.top(x.src(c)) == simplex(1, "{(02)}"))
        .unwrap();
    let e = unique(&o3, 1, &simplex(1, "{(23)}"));
    let w = x.compose(0, e, alpha).unwrap();
    assert_eq!(w.dim, 2);
    assert_eq!(o3.top(w), simplex(2, "{(012)}"));
    assert_eq!(o3.top(x.src(w)), simplex(1, "{(02),(23)}"));
    assert_eq!(o3.top(x.tgt(w)), simplex(1, "{(01),(12),(23)}"));
}

#[test]
fn unit_laws_on_every_cell() {
    let q2 = cubical(2);
    let x = q2.cat();
    for d in 1..=2 {
        for c in x.cells(d) {
            for n in 0..d {
                let (s, t) = x.boundary(c, n).unwrap();
                assert_eq!(x.compose(n, c, x.lift(s, d)).unwrap(), c);
                assert_eq!(x.compose(n, x.lift(t, d), c).unwrap(), c);
            }
        }
    }
}

#[test]
fn axioms_hold_on_small_categories() {
    let cfg = AxiomConfig {
        max_dim: Some(3),
        ..AxiomConfig::default()
    };
    assert!(check_axioms(&terminal(), &cfg).is_ok());
    assert!(check_axioms(oriental(2).cat(), &AxiomConfig::default()).is_ok());
    assert!(check_axioms(cubical(2).cat(), &AxiomConfig::default()).is_ok());
}

/// Round-trips `x` through a document with one composite rewritten to `z`.
fn corrupt(x: &OmegaCat, k: u32, n: u32, pair: (CellRef, CellRef), z: CellRef) -> OmegaCat {
    let mut doc: Value = serde_json::from_str(&export_json(x, Kind::Custom, vec![])).unwrap();
    let tables = doc["compositions"].as_array_mut().unwrap();
    let table = tables
        .iter_mut()
        .find(|t| t["dim"] == k && t["level"] == n)
        .unwrap();
    let row = table["table"]
        .as_array_mut()
        .unwrap()
        .iter_mut()
        .find(|r| r[0] == pair.0.idx && r[1] == pair.1.idx)
        .unwrap();
    row[2] = z.idx.into();
    import_json_unchecked(&doc.to_string()).unwrap().cat
}

#[test]
fn corrupted_composite_is_reported() {
    let o2 = oriental(2);
    let x = o2.cat();
    let f = unique(&o2, 1, &simplex(1, "{(12)}"));
    let g = unique(&o2, 1, &simplex(1, "{(01)}"));
    let wrong = unique(&o2, 1, &simplex(1, "{(02)}"));
    let bad = corrupt(x, 1, 0, (f, g), wrong);
    let report = check_axioms(&bad, &AxiomConfig::default());
    assert!(!report.is_ok());
    let (fi, gi) = (bad.lift(f, 2), bad.lift(g, 2));
    for v in &report.violations {
        let touches = v.witness.contains(&f) && v.witness.contains(&g) || v.witness.contains(&fi) && v.witness.contains(&gi);
        assert!(touches, "unexpected witness {v:?}");
    }
}

#[test]
fn dual_of_terminal_and_edge() {
    let t = dual(&terminal());
    assert!(same_structure(&t, &terminal()));
    let o1 = oriental(1);
    let d = dual(o1.cat());
    let e = unique(&o1, 1, &simplex(1, "{(01)}"));
    assert_eq!(o1.top(d.src(e)), simplex(0, "{(1)}"));
    assert_eq!(o1.top(d.tgt(e)), simplex(0, "{(0)}"));
}

#[test]
fn dual_is_an_involution() {
    for x in [oriental(2).cat().clone(), cubical(2).cat().clone(), oriental(3).cat().clone()] {
        assert!(same_structure(&dual(&dual(&x)), &x));
    }
}

#[test]
fn dual_reverses_composition() {
    let o2 = oriental(2);
    let x = o2.cat();
    let d = dual(x);
    let f = unique(&o2, 1, &simplex(1, "{(12)}"));
    let g = unique(&o2, 1, &simplex(1, "{(01)}"));
    assert_eq!(d.compose(0, g, f).unwrap(), x.compose(0, f, g).unwrap());
    assert!(check_axioms(&d, &AxiomConfig::default()).is_ok());
}

#[test]
fn hom_of_terminal_is_terminal() {
    let t = terminal();
    let h = hom(&t, CellRef::new(0, 0), CellRef::new(0, 0)).unwrap();
    assert_eq!(h.non_identity_counts(), vec![1]);
}

#[test]
fn hom_between_ends_of_the_triangle() {
    let o2 = oriental(2);
    let a = o2.object(&simplex(0, "{(0)}")).unwrap();
    let b = o2.object(&simplex(0, "{(2)}")).unwrap();
    let h = hom(o2.cat(), a, b).unwrap();
    assert_eq!(h.non_identity_counts(), vec![2, 1]);
    let tops: Vec<Tag> = h.objects().map(|c| h.tag(c).into_owned()).collect();
    let expect = |s: &str| o2.tower(unique(&o2, 1, &simplex(1, s))).to_tag();
    assert!(tops.contains(&expect("{(02)}")));
    assert!(tops.contains(&expect("{(01),(12)}")));
    let e = h.cells(1).find(|&c| !h.is_identity(c)).unwrap();
    assert_eq!(h.tag(h.src(e)).into_owned(), expect("{(02)}"));
    assert_eq!(h.tag(h.tgt(e)).into_owned(), expect("{(01),(12)}"));
    assert!(check_axioms(&h, &AxiomConfig::default()).is_ok());
}

#[test]
fn backwards_hom_is_empty() {
    let o1 = oriental(1);
    let a = o1.object(&simplex(0, "{(1)}")).unwrap();
    let b = o1.object(&simplex(0, "{(0)}")).unwrap();
    assert!(hom(o1.cat(), a, b).unwrap().is_empty());
    assert!(hom(o1.cat(), a, CellRef::new(0, 7)).is_err());
}

#[test]
fn hom_counts_match_boundary_counts() {
    let o3 = oriental(3);
    let x = o3.cat();
    for a in x.objects() {
        for b in x.objects() {
            let h = hom(x, a, b).unwrap();
            for d in 0..h.truncation() {
                let direct = x.cells(d + 1).filter(|&c| x.boundary(c, 0).unwrap() == (a, b)).count();
                assert_eq!(h.cell_count(d), direct);
            }
        }
    }
}

#[test]
fn pullback_along_identities_is_a_copy() {
    let x = oriental(2).cat().clone();
    let id = CellMap::identity(x.clone());
    let (p, left, _) = pullback(&id, &id).unwrap();
    for d in 0..=x.truncation() {
        assert_eq!(p.cell_count(d), x.cell_count(d));
    }
    assert!(omegacat::iso::verify_functor_iso(&left, 2).is_ok());
}

#[test]
fn pullback_of_empty_maps_is_empty() {
    let empty = Arc::new(OmegaCat::empty());
    let t = Arc::new(terminal());
    let f = CellMap::new(empty.clone(), t.clone(), vec![vec![]]).unwrap();
    let (p, _, _) = pullback(&f, &f).unwrap();
    assert!(p.is_empty());
}

#[test]
fn pullback_requires_a_shared_target() {
    let x = Arc::new(terminal());
    let y = Arc::new(terminal());
    assert!(matches!(
        pullback(&CellMap::identity(x), &CellMap::identity(y)),
        Err(Error::TargetMismatch)
    ));
}

#[test]
fn relabel_keeps_structure_and_rejects_reordering() {
    let x = oriental(2).cat().clone();
    let wrapped = relabel(&x, |t| Tag::node("w", vec![t.clone()])).unwrap();
    assert!(check_axioms(&wrapped, &AxiomConfig::default()).is_ok());
    let c = CellRef::new(1, 0);
    assert_eq!(wrapped.tag(c).children()[0], *x.tag(c));
    let flipped = relabel(&x, |t| Tag::node("w", vec![Tag::Int(-(x.find(0, t).map_or(0, |c| c.idx as i64)))]));
    assert!(flipped.is_err());
}

#[test]
fn cell_map_rejects_partial_assignments() {
    let x = Arc::new(oriental(1).cat().as_ref().clone());
    let t = Arc::new(terminal());
    assert!(CellMap::new(x.clone(), t.clone(), vec![vec![CellRef::new(0, 0)]]).is_err());
    assert!(CellMap::new(x, t, vec![vec![CellRef::new(0, 0); 2], vec![CellRef::new(1, 5); 3]]).is_err());
}

#[test]
fn tag_canonicalization_is_idempotent() {
    let t = Tag::node("n", vec![Tag::List(vec![Tag::Int(3), Tag::Int(1)]), Tag::atom("a")]);
    let c = t.canonicalize();
    assert_eq!(c.canonicalize(), c);
    assert_eq!(c.children()[0], Tag::set(vec![Tag::Int(1), Tag::Int(3)]));
}

proptest! {
    #[test]
    fn source_target_axioms_on_random_pairs(k in 1u32..=3, seed in any::<u64>()) {
        let o3 = oriental(3);
        let x = o3.cat();
        for n in 0..k {
            let pairs = x.composable_pairs(k, n);
            let (a, b) = pairs[(seed % pairs.len() as u64) as usize];
            let z = x.compose(n, a, b).unwrap();
            for j in 0..k {
                let (sz, tz) = x.boundary(z, j).unwrap();
                if j > n {
                    let (sa, ta) = x.boundary(a, j).unwrap();
                    let (sb, tb) = x.boundary(b, j).unwrap();
                    prop_assert_eq!(sz, x.compose(n, sa, sb).unwrap());
                    prop_assert_eq!(tz, x.compose(n, ta, tb).unwrap());
                } else {
                    prop_assert_eq!(sz, x.boundary(b, j).unwrap().0);
                    prop_assert_eq!(tz, x.boundary(a, j).unwrap().1);
                }
            }
        }
    }

    #[test]
    fn associativity_on_random_triples(k in 1u32..=2, n in 0u32..2, i in any::<usize>(), j in any::<usize>()) {
        prop_assume!(n < k);
        let q2 = cubical(2);
        let x = q2.cat();
        let cells: Vec<CellRef> = x.cells(k).collect();
        let a = cells[i % cells.len()];
        let (sa, _) = x.boundary(a, n).unwrap();
        let bs: Vec<CellRef> = cells.iter().copied().filter(|&b| x.boundary(b, n).unwrap().1 == sa).collect();
        let b = bs[j % bs.len()];
        let (sb, _) = x.boundary(b, n).unwrap();
        let cs: Vec<CellRef> = cells.iter().copied().filter(|&c| x.boundary(c, n).unwrap().1 == sb).collect();
        let c = cs[(i ^ j) % cs.len()];
        let left = x.compose(n, x.compose(n, a, b).unwrap(), c).unwrap();
        let right = x.compose(n, a, x.compose(n, b, c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }
}
