mod support;

use std::collections::BTreeSet;

use polycycle_core::enumerate::{
    brute_force, catalog, classify, coincidence_classes, enumerate_elementary, enumerate_totally_elementary, family_of,
    Family, Sequential, Task,
};
use polycycle_core::families::{barrel, gon_triple};
use polycycle_core::{Error, Params};

#[test]
fn brute_force_agrees_up_to_four_faces() {
    for params in [Params::new([2, 3, 4, 5], 3), Params::new([2, 3], 4), Params::new([2, 3], 5)] {
        let params = params.unwrap();
        let fast: BTreeSet<_> = enumerate_elementary(&Task::new(params.clone(), 4), &Sequential)
            .unwrap()
            .iter()
            .map(|p| p.canonical_code())
            .collect();
        let slow: BTreeSet<_> = brute_force(&params, 4)
            .into_iter()
            .flatten()
            .filter(|p| p.is_elementary())
            .map(|p| p.canonical_code())
            .collect();
        assert_eq!(fast, slow, "R={:?} q={}", params.sizes(), params.q());
    }
}

#[test]
fn output_is_sound_sorted_and_duplicate_free() {
    for (params, max) in support::elliptic_sets() {
        let out = enumerate_elementary(&Task::new(params, max.min(10)), &Sequential).unwrap();
        let keys: Vec<_> = out.iter().map(|p| (p.face_count(), p.canonical_code())).collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]));
        assert!(out.iter().all(|p| p.is_elementary()));
    }
}

#[test]
fn four_valent_catalog() {
    let cat = support::small_catalog(&Params::new([2, 3], 4).unwrap(), 20);
    assert_eq!(cat.len(), 8);
    let mut orders: Vec<usize> = cat.iter().map(|e| e.aut_p.order).collect();
    orders.sort();
    assert_eq!(orders, [2, 4, 4, 4, 4, 6, 6, 8]);
    assert_eq!(cat.iter().filter(|e| !e.extensible).count(), 3);
}

#[test]
fn digon_entries() {
    let cat = support::small_catalog(&Params::new([2, 3, 4, 5], 3).unwrap(), 12);
    let with2: Vec<_> = cat.iter().filter(|e| e.polycycle.gon_sizes().contains(&2)).collect();
    assert_eq!(with2.len(), 8);
    assert_eq!(with2.iter().filter(|e| !e.extensible).count(), 5);
}

#[test]
fn totally_elementary_seeds() {
    let te = enumerate_totally_elementary(&Task::new(Params::new([3, 4, 5], 3).unwrap(), 10), &Sequential).unwrap();
    assert_eq!(te.len(), 17);
    assert_eq!(te.iter().filter(|p| p.face_count() == 1).count(), 3);
    assert_eq!(te.iter().filter(|p| p.face_count() == 3).count(), 10);
    let barrels: BTreeSet<_> = (2..=5).map(|m| barrel(m).unwrap().canonical_code()).collect();
    let found: BTreeSet<_> = te.iter().filter(|p| p.hole_count() == 2).map(|p| p.canonical_code()).collect();
    assert_eq!(found, barrels);
}

#[test]
fn task_errors() {
    let hyper = Params::new([3, 7], 3).unwrap();
    assert_eq!(enumerate_elementary(&Task::new(hyper, 4), &Sequential).unwrap_err(), Error::NotElliptic);
    let ok = Params::new([3, 4, 5], 3).unwrap();
    assert_eq!(enumerate_elementary(&Task::new(ok, 0), &Sequential).unwrap_err(), Error::BoundTooSmall);
    let q5 = Params::new([2, 3], 5).unwrap();
    assert_eq!(enumerate_totally_elementary(&Task::new(q5, 4), &Sequential).unwrap_err(), Error::WrongValence(5));
}

#[test]
fn families_are_recognised() {
    assert_eq!(family_of(&barrel(3).unwrap()), Family::Barrel(3));
    assert_eq!(family_of(&gon_triple(3, 4, 5).unwrap()), Family::GonTriple(3, 4, 5));
    let cat = support::small_catalog(&Params::new([3, 4, 5], 3).unwrap(), 6);
    assert_eq!(classify(&barrel(3).unwrap(), &cat).unwrap().0, Family::Barrel(3));
    assert_eq!(classify(&barrel(4).unwrap(), &cat).unwrap_err(), Error::NotInCatalog(8));
}

#[test]
fn every_entry_grows_from_a_smaller_one() {
    for (params, max) in support::elliptic_sets() {
        let cat = catalog(&Task::new(params, max.min(9)), &Sequential).unwrap();
        let codes: BTreeSet<_> = cat.iter().map(|e| e.code.clone()).collect();
        for e in cat.iter().filter(|e| e.face_count > 1) {
            let p = &e.polycycle;
            let ok = p.proper_faces().any(|f| {
                p.remove_face(f).is_ok_and(|s| s.decompose().pieces.iter().all(|x| codes.contains(&x.canonical_code())))
            });
            assert!(ok, "{} faces, {}", e.face_count, e.family);
        }
    }
}

#[test]
fn prism_has_two_realizations() {
    let cat = support::small_catalog(&Params::new([3, 4], 3).unwrap(), 6);
    let classes = coincidence_classes(&cat);
    assert_eq!(classes.len(), 1);
    assert_eq!(classes[0].len(), 2);
    assert!(classes[0].iter().all(|&i| cat[i].face_count == 4));
}
