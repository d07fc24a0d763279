mod common;

use std::collections::BTreeSet;
use std::sync::Arc;

use omegacat::parity::{ParityCategory, ParitySet};
use omegacat::slice::suites::{action_whiskering, certificate_boundaries, composite_whiskering};
use omegacat::slice::{Bislice, Lax, Side, Whisker};
use omegacat::{check_axioms, dual, terminal, AxiomConfig, CellRef, OmegaCat};

use common::{cube, cubical, oriental, simplex, unique};

fn point(p: &ParityCategory, s: &str) -> CellRef {
    p.object(&ParitySet::parse(p.flavor(), 0, s).unwrap()).unwrap()
}

/// `(base top, certificate top)` of every object.
fn object_tops(p: &ParityCategory, lax: &Lax) -> BTreeSet<(String, String)> {
    lax.cat()
        .objects()
        .map(|c| (p.top(lax.base(c)).to_string(), p.top(lax.cert(c)).to_string()))
        .collect()
}

fn pairs(items: &[(&str, &str)]) -> BTreeSet<(String, String)> {
    items.iter().map(|&(a, b)| (a.to_string(), b.to_string())).collect()
}

/// Same cells, boundaries, identities and composition tables, tags ignored.
fn same_shape(x: &OmegaCat, y: &OmegaCat) -> bool {
    x.truncation() == y.truncation()
        && (0..=x.truncation()).all(|d| {
            x.cell_count(d) == y.cell_count(d)
                && x.cells(d).all(|c| {
                    x.identity_of(c) == y.identity_of(c) && (d == 0 || (x.src(c), x.tgt(c)) == (y.src(c), y.tgt(c)))
                })
        })
        && (1..=x.truncation()).all(|k| (0..k).all(|n| x.composition_table(k, n) == y.composition_table(k, n)))
}

#[test]
fn coslice_under_the_edge() {
    let o1 = oriental(1);
    let lax = Lax::coslice(o1.cat(), point(&o1, "(0)")).unwrap();
    assert_eq!(lax.side(), Side::Coslice);
    assert_eq!(object_tops(&o1, &lax), pairs(&[("{(0)}", "{}"), ("{(1)}", "{(01)}")]));
    let edges: Vec<CellRef> = lax.cat().cells(1).filter(|&c| !lax.cat().is_identity(c)).collect();
    assert_eq!(edges.len(), 1);
    assert_eq!(o1.top(lax.base(edges[0])), simplex(1, "{(01)}"));
    assert!(o1.cat().is_identity(lax.cert(edges[0])));
}

#[test]
fn coslice_of_terminal_is_terminal() {
    let t = Arc::new(terminal());
    let lax = Lax::coslice(&t, CellRef::new(0, 0)).unwrap();
    assert_eq!(lax.cat().non_identity_counts(), vec![1]);
    assert!(Lax::coslice(&t, CellRef::new(0, 3)).is_err());
}

#[test]
fn coslice_under_the_middle_vertex() {
    let o2 = oriental(2);
    let lax = Lax::coslice(o2.cat(), point(&o2, "(1)")).unwrap();
    assert_eq!(object_tops(&o2, &lax), pairs(&[("{(1)}", "{}"), ("{(2)}", "{(12)}")]));
}

#[test]
fn slice_over_the_edge() {
    let o1 = oriental(1);
    let lax = Lax::slice(o1.cat(), point(&o1, "(1)")).unwrap();
    assert_eq!(lax.side(), Side::Slice);
    assert_eq!(object_tops(&o1, &lax), pairs(&[("{(0)}", "{(01)}"), ("{(1)}", "{}")]));
    let t = Arc::new(terminal());
    assert_eq!(Lax::slice(&t, CellRef::new(0, 0)).unwrap().cat().non_identity_counts(), vec![1]);
}

#[test]
fn slice_over_the_last_vertex() {
    let o2 = oriental(2);
    let lax = Lax::slice(o2.cat(), point(&o2, "(2)")).unwrap();
    let expected = pairs(&[
        ("{(0)}", "{(02)}"),
        ("{(0)}", "{(01),(12)}"),
        ("{(1)}", "{(12)}"),
        ("{(2)}", "{}"),
    ]);
    assert_eq!(object_tops(&o2, &lax), expected);
}

#[test]
fn slice_is_dual_coslice_of_dual() {
    for p in [oriental(2), cubical(2)] {
        for b in p.cat().objects() {
            let slice = Lax::slice(p.cat(), b).unwrap();
            let op = Arc::new(dual(p.cat()));
            let direct = dual(Lax::coslice(&op, b).unwrap().cat());
            assert!(same_shape(slice.cat(), &direct));
        }
    }
}

#[test]
fn slice_edges_are_triangles_into_the_copoint() {
    // the certificate of x : s -> t runs from ŝ to t̂ ∘_0 x
    let o2 = oriental(2);
    let lax = Lax::slice(o2.cat(), point(&o2, "(2)")).unwrap();
    let x = o2.cat();
    for e in lax.cat().cells(1).filter(|&c| !lax.cat().is_identity(c)) {
        let (s, t) = (lax.cat().src(e), lax.cat().tgt(e));
        let whiskered = x.compose(0, lax.cert(t), lax.base(e)).unwrap();
        assert_eq!(x.src(lax.cert(e)), lax.cert(s));
        assert_eq!(x.tgt(lax.cert(e)), whiskered);
    }
}

#[test]
fn bislice_of_the_interval() {
    let q1 = cubical(1);
    let bi = Bislice::build(q1.cat(), point(&q1, "-"), point(&q1, "+")).unwrap();
    let objects: BTreeSet<(String, String, String)> = bi
        .cat()
        .objects()
        .map(|c| {
            let (x, l, r) = bi.triple(c);
            (q1.top(x).to_string(), q1.top(l).to_string(), q1.top(r).to_string())
        })
        .collect();
    let expected: BTreeSet<(String, String, String)> = [("{-}", "{}", "{0}"), ("{+}", "{0}", "{}")]
        .iter()
        .map(|&(a, b, c)| (a.into(), b.into(), c.into()))
        .collect();
    assert_eq!(objects, expected);
    let edges: Vec<CellRef> = bi.cat().cells(1).filter(|&c| !bi.cat().is_identity(c)).collect();
    assert_eq!(edges.len(), 1);
    let (x, l, r) = bi.triple(edges[0]);
    assert_eq!(q1.top(x), cube(1, "{0}"));
    assert!(q1.cat().is_identity(l) && q1.cat().is_identity(r));
}

#[test]
fn bislice_of_terminal_is_terminal() {
    let t = Arc::new(terminal());
    let o = CellRef::new(0, 0);
    assert_eq!(Bislice::build(&t, o, o).unwrap().cat().non_identity_counts(), vec![1]);
}

#[test]
fn bislice_of_the_triangle_through_the_middle() {
    let o2 = oriental(2);
    let bi = Bislice::build(o2.cat(), point(&o2, "(0)"), point(&o2, "(2)")).unwrap();
    let found = bi.cat().objects().any(|c| {
        let (x, l, r) = bi.triple(c);
        o2.top(x) == simplex(0, "{(1)}") && o2.top(l) == simplex(1, "{(01)}") && o2.top(r) == simplex(1, "{(12)}")
    });
    assert!(found);
    let (p, q) = bi.parts(CellRef::new(0, 0));
    assert_eq!(bi.coslice().base(p), bi.slice().base(q));
}

#[test]
fn whiskering_by_an_identity_keeps_the_top() {
    let o1 = oriental(1);
    let x = o1.cat();
    let e = unique(&o1, 1, &simplex(1, "{(01)}"));
    let m0 = x.identity(point(&o1, "(0)"));
    let w = Whisker::new(x, vec![m0], vec![m0]);
    assert_eq!(w.m(0, e).unwrap(), e);
}

#[test]
fn whiskering_by_an_edge_is_a_union() {
    let o2 = oriental(2);
    let x = o2.cat();
    let u = unique(&o2, 1, &simplex(1, "{(12)}"));
    let m0 = unique(&o2, 1, &simplex(1, "{(01)}"));
    let w = Whisker::new(x, vec![m0], vec![m0]);
    assert_eq!(o2.top(w.m(0, u).unwrap()), simplex(1, "{(01),(12)}"));
    assert_eq!(w.chain(-1, u).unwrap(), u);
}

#[test]
fn action_extends_the_certificate() {
    let o2 = oriental(2);
    let (v0, v1, v2) = (point(&o2, "(0)"), point(&o2, "(1)"), point(&o2, "(2)"));
    let from = Lax::coslice(o2.cat(), v1).unwrap();
    let to = Lax::coslice(o2.cat(), v0).unwrap();
    let c = from.find_object(v2, unique(&o2, 1, &simplex(1, "{(12)}"))).unwrap();
    let h = unique(&o2, 1, &simplex(1, "{(01)}"));
    let r = from.act(c, h, &to).unwrap();
    assert_eq!(o2.top(to.base(r)), simplex(0, "{(2)}"));
    assert_eq!(o2.top(to.cert(r)), simplex(1, "{(01),(12)}"));
}

#[test]
fn action_by_an_identity_is_trivial() {
    let o2 = oriental(2);
    let v0 = point(&o2, "(0)");
    let lax = Lax::coslice(o2.cat(), v0).unwrap();
    for d in 0..=2 {
        for c in lax.cat().cells(d) {
            let h = o2.cat().lift(v0, d + 1);
            assert_eq!(lax.act(c, h, &lax).unwrap(), c);
        }
    }
}

#[test]
fn action_is_associative_on_objects() {
    let o2 = oriental(2);
    let x = o2.cat();
    let (v0, v1, v2) = (point(&o2, "(0)"), point(&o2, "(1)"), point(&o2, "(2)"));
    let l2 = Lax::coslice(x, v2).unwrap();
    let l1 = Lax::coslice(x, v1).unwrap();
    let l0 = Lax::coslice(x, v0).unwrap();
    let h = unique(&o2, 1, &simplex(1, "{(12)}"));
    let k = unique(&o2, 1, &simplex(1, "{(01)}"));
    for c in l2.cat().objects() {
        let stepwise = l1.act(l2.act(c, h, &l1).unwrap(), k, &l0).unwrap();
        let at_once = l2.act(c, x.compose(0, h, k).unwrap(), &l0).unwrap();
        assert_eq!(stepwise, at_once);
    }
}

#[test]
fn action_rejects_wrong_dimensions() {
    let o2 = oriental(2);
    let v0 = point(&o2, "(0)");
    let lax = Lax::coslice(o2.cat(), v0).unwrap();
    assert!(lax.act(CellRef::new(0, 0), v0, &lax).is_err());
}

fn all_points(p: &ParityCategory) -> Vec<CellRef> {
    p.cat().objects().collect()
}

#[test]
fn slices_satisfy_the_axioms() {
    let cfg = AxiomConfig::default();
    for p in [oriental(1), oriental(2), oriental(3), cubical(1), cubical(2)] {
        for a in all_points(&p) {
            let co = Lax::coslice(p.cat(), a).unwrap();
            assert!(check_axioms(co.cat(), &cfg).is_ok(), "coslice at {a}");
            let sl = Lax::slice(p.cat(), a).unwrap();
            assert!(check_axioms(sl.cat(), &cfg).is_ok(), "slice at {a}");
        }
    }
}

#[test]
fn bislices_of_the_square_satisfy_the_axioms() {
    let q2 = cubical(2);
    for a in all_points(&q2) {
        for b in all_points(&q2) {
            let bi = Bislice::build(q2.cat(), a, b).unwrap();
            assert!(check_axioms(bi.cat(), &AxiomConfig::default()).is_ok());
        }
    }
}

#[test]
fn certificates_have_the_recomputed_boundaries() {
    for p in [oriental(2), oriental(3), cubical(2)] {
        for a in all_points(&p) {
            let r = certificate_boundaries(&Lax::coslice(p.cat(), a).unwrap());
            assert!(r.is_ok(), "{:?}", r.witnesses);
        }
    }
}

#[test]
fn whiskering_respects_composites() {
    for p in [oriental(2), oriental(3), cubical(2)] {
        for a in all_points(&p) {
            let r = composite_whiskering(&Lax::coslice(p.cat(), a).unwrap());
            assert!(r.is_ok(), "{:?}", r.witnesses);
        }
    }
    let o3 = oriental(3);
    let r = composite_whiskering(&Lax::coslice(o3.cat(), point(&o3, "(0)")).unwrap());
    assert!(r.counts["odd-level"] > 0 && r.counts["even-level"] > 0);
}

#[test]
fn whiskering_respects_the_action() {
    for p in [oriental(2), oriental(3), cubical(2)] {
        let laxes: Vec<Lax> = all_points(&p).into_iter().map(|a| Lax::coslice(p.cat(), a).unwrap()).collect();
        for from in &laxes {
            for to in &laxes {
                let r = action_whiskering(from, to);
                assert!(r.is_ok(), "{:?}", r.witnesses);
            }
        }
    }
}

#[test]
fn extra_coslice_level_holds_only_identities() {
    for p in [oriental(2), cubical(2)] {
        let n = p.cat().truncation();
        for a in all_points(&p) {
            let co = Lax::coslice_truncated(p.cat(), a, n + 1).unwrap();
            assert_eq!(co.cat().non_identity_count(n + 1), 0);
            assert_eq!(co.cat().non_identity_counts()[..=n as usize], Lax::coslice(p.cat(), a).unwrap().cat().non_identity_counts()[..]);
        }
    }
}

#[test]
fn projection_forgets_certificates() {
    let o2 = oriental(2);
    let lax = Lax::coslice(o2.cat(), point(&o2, "(0)")).unwrap();
    let pi = lax.projection();
    for d in 0..=2 {
        for c in lax.cat().cells(d) {
            assert_eq!(pi.apply(c), lax.base(c));
            if d > 0 {
                assert_eq!(o2.cat().src(pi.apply(c)), pi.apply(lax.cat().src(c)));
            }
        }
    }
}
