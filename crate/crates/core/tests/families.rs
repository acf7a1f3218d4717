mod support;

use polycycle_core::families::{barrel, gon_triple, monocycle, snub_antiprism, snub_antiprism_with};
use polycycle_core::map::FaceAssembler;
use polycycle_core::symmetry::{symmetry_of_graph, symmetry_of_polycycle};
use polycycle_core::{Error, Params, Polycycle};

#[test]
fn barrels_are_totally_elementary() {
    for m in 2..=8 {
        assert_eq!(barrel(m).unwrap().is_totally_elementary(), Ok(true), "barrel({m})");
    }
}

#[test]
fn barrel_extensibility() {
    for m in [2, 6, 7] {
        assert!(!barrel(m).unwrap().is_extensible(), "barrel({m})");
    }
    for m in [3, 4, 5] {
        assert!(barrel(m).unwrap().is_extensible(), "barrel({m})");
    }
}

#[test]
fn large_snub_antiprisms_are_not_extensible() {
    for m in [4, 5, 6] {
        assert!(!snub_antiprism(m).unwrap().is_extensible(), "snub({m})");
    }
}

#[test]
fn snub_four_antiprism_with_triangles_only() {
    let p = snub_antiprism_with(4, Params::new([3], 5).unwrap()).unwrap();
    assert_eq!(p.hole_count(), 2);
    assert!(p.holes().all(|h| p.map().face(h).len() == 4));
}

#[test]
fn symmetry_spot_checks() {
    let tri = monocycle(3).unwrap();
    assert_eq!(symmetry_of_polycycle(&tri).order, 6);
    assert_eq!(symmetry_of_graph(&tri).order, 12);
    assert_eq!(symmetry_of_graph(&gon_triple(3, 3, 3).unwrap()).order, 24);
    assert_eq!(symmetry_of_graph(&barrel(5).unwrap()).order, 120);
    assert_eq!(symmetry_of_graph(&snub_antiprism(3).unwrap()).order, 120);
    for m in 2..=6 {
        assert_eq!(symmetry_of_polycycle(&barrel(m).unwrap()).order, 4 * m);
        assert_eq!(symmetry_of_polycycle(&snub_antiprism(m).unwrap()).order, 4 * m);
    }
}

#[test]
fn named_groups_for_families() {
    assert_eq!(symmetry_of_graph(&barrel(5).unwrap()).label(), "Ih");
    assert_eq!(symmetry_of_polycycle(&barrel(5).unwrap()).label(), "D5d");
    assert_eq!(symmetry_of_graph(&gon_triple(3, 3, 3).unwrap()).label(), "Td");
    assert_eq!(symmetry_of_polycycle(&monocycle(5).unwrap()).label(), "C5v");
}

#[test]
fn bracelets_have_touching_holes() {
    for m in [2, 3] {
        assert!(matches!(support::bracelet(m), Err(Error::HolesShareVertex { .. })), "m = {m}");
    }
}

#[test]
fn triangle_with_one_hole() {
    let mut fa = FaceAssembler::new(3);
    fa.face(&[0, 1, 2]);
    fa.face(&[2, 1, 0]);
    let (map, _) = fa.finish().unwrap();
    let p = Polycycle::new(map, vec![false, true], Params::new([3], 3).unwrap()).unwrap();
    assert!(p.is_elementary());
}

#[test]
fn validation_failures() {
    let p = monocycle(4).unwrap();
    let map = p.map().clone();
    let q3 = Params::new([3], 3).unwrap();
    assert!(matches!(Polycycle::new(map.clone(), vec![false, true], q3), Err(Error::BadGonSize { .. })));
    let q4 = Params::new([4], 3).unwrap();
    assert_eq!(Polycycle::new(map, vec![false, false], q4).unwrap_err(), Error::EmptyPartition);
    let b = barrel(4).unwrap();
    assert!(b.with_params(Params::new([4, 5], 3).unwrap()).is_ok());
    assert!(matches!(b.with_params(Params::new([4], 3).unwrap()), Err(Error::BadGonSize { .. })));
    assert!(matches!(b.with_params(Params::new([5], 4).unwrap()), Err(Error::InteriorNotQValent { .. })));
}
