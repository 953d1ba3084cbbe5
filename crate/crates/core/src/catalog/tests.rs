use super::*;
use crate::geometry::{is_smooth, linear_span_codim};
use crate::groebner::linear_syzygy_test;
use crate::idealops::{codim, hilbert, intersect_all, sum};
use crate::parse::parse_polynomial;
use num_bigint::BigInt;
use num_rational::BigRational;

fn rat(a: i64, b: i64) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

#[test]
fn scrolls_have_the_expected_invariants() {
    for kind in [ScrollKind::S22, ScrollKind::S13] {
        let s = quartic_scroll(kind);
        assert_eq!(s.gens().len(), 6);
        let h = hilbert(&s).unwrap();
        assert_eq!((h.dim, h.degree), (2, 4), "{kind:?}");
        assert_eq!(h.polynomial, vec![rat(1, 1), rat(3, 1), rat(2, 1)]);
        assert!(is_smooth(&s).unwrap(), "{kind:?}");
        assert_eq!(linear_span_codim(&s).unwrap(), 0);
        assert!(linear_syzygy_test(s.gens()).unwrap());
        assert!(s.saturation().unwrap().equals(&s).unwrap());
    }
}

#[test]
fn del_pezzo_parametrization_cuts_out_the_five_quadrics() {
    let s = del_pezzo_quintic().unwrap();
    let p2 = s.map.target().clone();
    let expected = [
        "t_0^2*t_2-t_0*t_1*t_2",
        "t_0*t_1*t_2-t_1^2*t_2",
        "t_0*t_2^2-t_1*t_2^2",
        "t_0^2*t_1-t_0*t_1*t_2",
        "t_0*t_1^2-t_1^2*t_2",
        "t_0*t_1*t_2-t_1*t_2^2",
    ];
    for (f, e) in s.map.forms().iter().zip(expected) {
        assert_eq!(f, &parse_polynomial(e, &p2).unwrap());
    }
    for q in s.ideal.gens() {
        assert!(s.map.apply(q).unwrap().is_zero());
    }
    assert!(s.image().unwrap().equals(&s.ideal).unwrap());
    let h = hilbert(&s.ideal).unwrap();
    assert_eq!((h.dim, h.degree), (2, 5));
    assert!(is_smooth(&s.ideal).unwrap());
    assert_eq!(graded_basis(&s.ideal, 1).unwrap().len(), 0);
    assert_eq!(graded_basis(&s.ideal, 2).unwrap().len(), 5);
    assert!(linear_syzygy_test(s.ideal.gens()).unwrap());
}

#[test]
fn the_skew_planes() {
    let p1 = named_plane("p1").unwrap();
    let p2 = named_plane("p2").unwrap();
    let r = Ring::p5();
    assert!(p1.equals(&Ideal::parse(&r, "x_2+x_5, x_1+x_4, x_0+x_3").unwrap()).unwrap());
    assert!(p2.equals(&Ideal::parse(&r, "2*x_2-x_5, 2*x_1-x_4, 2*x_0-x_3").unwrap()).unwrap());
    assert_eq!(codim(&sum(&p1, &p2).unwrap()).unwrap(), 6);
    let union = intersect_all(&[p1, p2]).unwrap();
    assert_eq!(union.gb().unwrap().len(), 9);
    assert!(linear_syzygy_test(union.gb().unwrap().elements()).unwrap());
    let h = hilbert(&union).unwrap();
    assert_eq!((h.dim, h.degree), (2, 2));
}

#[test]
fn named_planes_are_planes() {
    for (name, p) in standard_planes().unwrap() {
        let h = hilbert(&p).unwrap();
        assert_eq!((h.dim, h.degree), (2, 1), "{name}");
    }
    assert!(named_plane("coord0").is_ok());
    assert!(matches!(named_plane("z"), Err(Error::UnknownName(_))));
    assert!(matches!(lookup("nothing"), Err(Error::UnknownName(_))));
}

#[test]
fn conic_pencils_on_the_del_pezzo() {
    let s = del_pezzo_quintic().unwrap();
    let pencils = conic_pencils(&s).unwrap();
    assert_eq!(pencils.len(), 5);
    for p in &pencils {
        let mut members = Vec::new();
        for lambda in [[1, 2], [3, -1], [2, 5]] {
            let c = p.member(lambda).unwrap();
            let h = hilbert(&c).unwrap();
            assert_eq!((h.dim, h.degree), (1, 2), "{} {lambda:?}", p.label());
            assert_eq!(linear_span_codim(&c).unwrap(), 3);
            assert!(s.ideal.is_subset_of(&c).unwrap());
            members.push(c);
        }
        // strict transforms of two members are disjoint
        let meet = saturate(&sum(&members[0], &members[1]).unwrap(), None).unwrap();
        assert!(meet.is_unit().unwrap(), "{}", p.label());
    }
}

#[test]
fn segre_threefolds_of_the_pencils() {
    let s = del_pezzo_quintic().unwrap();
    for p in conic_pencils(&s).unwrap() {
        let sigma = segre_threefold(&p).unwrap();
        let h = hilbert(&sigma).unwrap();
        assert_eq!((h.dim, h.degree), (3, 3), "{}", p.label());
        assert!(sigma.is_subset_of(&s.ideal).unwrap());
        let c = p.member([1, 4]).unwrap();
        let span = Ideal::new(c.ring(), graded_basis(&c, 1).unwrap()).unwrap();
        assert!(sigma.is_subset_of(&span).unwrap());
    }
}

#[test]
fn lookup_by_name() {
    assert!(lookup("scroll:s22").unwrap().equals(&quartic_scroll(ScrollKind::S22)).unwrap());
    assert_eq!(lookup("delpezzo").unwrap().gens().len(), 5);
    assert_eq!(lookup("plane:a").unwrap().gens().len(), 3);
    assert!(names().iter().any(|n| n == "segre:conics"));
}

#[test]
fn the_conic_threefold_contains_both_skew_planes() {
    let sigma = lookup("segre:conics").unwrap();
    for name in ["p1", "p2"] {
        assert!(sigma.is_subset_of(&named_plane(name).unwrap()).unwrap(), "{name}");
    }
}
