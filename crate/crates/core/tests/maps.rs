mod support;

use polycycle_core::{families, Polycycle};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;
use support::{relabel, small_catalog};

fn samples() -> Vec<Polycycle> {
    let mut out = Vec::new();
    for (params, max) in support::elliptic_sets() {
        out.extend(small_catalog(&params, max.min(10)).into_iter().map(|e| e.polycycle));
    }
    for m in 2..=6 {
        out.push(families::barrel(m).unwrap());
        out.push(families::snub_antiprism(m).unwrap());
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn relabeling_keeps_code(idx in 0usize..10_000, seed in any::<u64>()) {
        thread_local!(static S: Vec<Polycycle> = samples());
        S.with(|s| {
            let p = &s[idx % s.len()];
            let q = relabel(p, &mut StdRng::seed_from_u64(seed));
            prop_assert_eq!(q.canonical_code(), p.canonical_code());
            prop_assert_eq!(q.graph_code(), p.graph_code());
            prop_assert!(q.map().euler_genus_check());
            Ok(())
        })?;
    }
}

#[test]
fn euler_holds_on_constructed_maps() {
    for p in samples() {
        let m = p.map();
        assert_eq!(m.vertex_count() as i64 - m.edge_count() as i64 + m.face_count() as i64, 2);
        assert!(m.euler_genus_check());
    }
}

#[test]
fn canonical_form_is_a_fixed_point() {
    for p in samples() {
        let c = p.canonical_form();
        assert_eq!(c.canonical_code(), p.canonical_code());
        assert_eq!(c.canonical_form().map().rotations(), c.map().rotations());
    }
}
