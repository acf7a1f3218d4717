use std::collections::{BTreeMap, BTreeSet};

use polycycle_core::enumerate::{catalog, enumerate_elementary, Family, Sequential, Task};
use polycycle_core::families::{gon_triple, monocycle};
use polycycle_core::series::{self, series_member, series_members, SeriesId, SeriesIndex};
use polycycle_core::symmetry::symmetry_of_polycycle;
use polycycle_core::{Error, Params};

fn codes(q: u32, r: &[u32], max: usize) -> BTreeSet<polycycle_core::CanonicalCode> {
    let task = Task::new(Params::new(r.iter().copied(), q).unwrap(), max);
    enumerate_elementary(&task, &Sequential).unwrap().iter().map(|p| p.canonical_code()).collect()
}

#[test]
fn series_counts_per_q() {
    assert_eq!(SeriesId::all(3).len(), 21);
    assert_eq!(SeriesId::all(5).len(), 6);
    assert!(SeriesId::all(4).is_empty());
}

#[test]
fn members_grow_by_one_band_cell() {
    for (q, step) in [(3, 1), (5, 3)] {
        for id in SeriesId::all(q) {
            let ms = series_members(id, 6).unwrap();
            for w in ms[ms.len() - 4..].windows(2) {
                assert_eq!(w[0].face_count() + step, w[1].face_count(), "{id}");
            }
            assert!(ms.iter().all(|p| p.is_elementary() && p.hole_count() == 1), "{id}");
        }
    }
}

#[test]
fn three_valent_members_are_enumerated() {
    let known = codes(3, &[3, 4, 5], 10);
    for id in SeriesId::all(3) {
        for p in series_members(id, 8).unwrap() {
            assert!(known.contains(&p.canonical_code()), "{id} at {} faces", p.face_count());
        }
    }
}

#[test]
fn five_valent_members_are_enumerated() {
    let known = codes(5, &[2, 3], 17);
    for id in SeriesId::all(5) {
        for p in series_members(id, 4).unwrap() {
            assert!(known.contains(&p.canonical_code()), "{id} at {} faces", p.face_count());
        }
    }
}

#[test]
fn every_band_entry_is_a_series_member() {
    let cat = catalog(&Task::new(Params::new([3, 4, 5], 3).unwrap(), 9), &Sequential).unwrap();
    let mut per_size = BTreeMap::new();
    for e in &cat {
        if series::has_band(&e.polycycle) {
            assert!(matches!(e.family, Family::Series(..)), "{} faces: {}", e.face_count, e.family);
        }
        if matches!(e.family, Family::Series(..)) {
            *per_size.entry(e.face_count).or_insert(0) += 1;
        }
    }
    // Five-gon and the triple of pentagons open the alpha-alpha series but
    // are reported as a monocycle and a triple.
    assert_eq!(per_size.get(&4), Some(&18));
    for n in 5..=9 {
        assert_eq!(per_size.get(&n), Some(&21), "{n} faces");
    }
}

#[test]
fn alpha_alpha_opens_with_pentagon_and_triple() {
    let aa = SeriesId::parse(3, "alpha-alpha").unwrap();
    assert_eq!(aa.first_index(), 0);
    let ms = series_members(aa, 1).unwrap();
    assert_eq!(
        ms[0].canonical_code(),
        monocycle(5).unwrap().with_params(Params::new([3, 4, 5], 3).unwrap()).unwrap().canonical_code()
    );
    assert_eq!(ms[1].canonical_code(), gon_triple(5, 5, 5).unwrap().canonical_code());
    assert_eq!(series_member(aa, 2).unwrap().face_count(), 4);
    assert_eq!(series_member(aa, 3).unwrap().face_count(), 5);
}

#[test]
fn five_valent_alpha_alpha_starts_with_wheel() {
    let aa = SeriesId::parse(5, "αα").unwrap();
    let p = series_member(aa, aa.first_index()).unwrap();
    assert_eq!(p.face_count(), 5);
    assert_eq!(p.map().vertex_count(), 6);
    assert_eq!(symmetry_of_polycycle(&p).order, 10);
}

#[test]
fn five_valent_symmetry_sequences() {
    let labels = |name: &str, k: usize| -> Vec<String> {
        let id = SeriesId::parse(5, name).unwrap();
        series_members(id, id.first_index() + k - 1).unwrap().iter().map(|p| symmetry_of_polycycle(p).label()).collect()
    };
    assert_eq!(labels("alpha-alpha", 4), ["C5v", "C2v", "Cs", "C2"]);
    assert_eq!(labels("alpha-beta", 3), ["Cs", "Cs", "C1"]);
    assert_eq!(labels("beta-beta", 3), ["C2v", "Cs", "C2"]);
    assert_eq!(labels("gamma-gamma", 3), ["C2", "Cs", "C2"]);
}

#[test]
fn gamma_gamma_third_member_is_not_extensible() {
    let gg = SeriesId::parse(5, "gamma-gamma").unwrap();
    let p = series_member(gg, gg.first_index() + 2).unwrap();
    assert!(!p.is_extensible());
}

#[test]
fn bad_series_requests() {
    assert!(matches!(SeriesId::parse(5, "delta-alpha"), Err(Error::UnknownSeries(_))));
    assert!(matches!(SeriesId::parse(3, "omega-alpha"), Err(Error::UnknownSeries(_))));
    assert!(matches!(SeriesId::new(4, 0, 0), Err(Error::UnknownSeries(_))));
    let gg = SeriesId::parse(5, "gg").unwrap();
    assert_eq!(series_member(gg, 0).unwrap_err(), Error::IndexBelowStart { index: 0, first: 1 });
}

#[test]
fn names_round_trip() {
    for q in [3, 5] {
        for id in SeriesId::all(q) {
            assert_eq!(SeriesId::parse(q, &id.name()).unwrap(), id);
            assert_eq!(SeriesId::parse(q, &id.to_string()).unwrap(), id);
        }
    }
    assert_eq!(SeriesId::parse(3, "beta-alpha").unwrap(), SeriesId::parse(3, "ab").unwrap());
}

#[test]
fn index_lookup_matches_generator() {
    let index = SeriesIndex::new(5, 20);
    for id in SeriesId::all(5) {
        for (k, p) in series_members(id, 5).unwrap().iter().enumerate() {
            if p.face_count() <= 20 {
                assert_eq!(index.lookup(&p.canonical_code()), Some((id, id.first_index() + k)));
            }
        }
    }
}
