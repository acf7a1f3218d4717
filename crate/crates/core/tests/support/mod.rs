#![allow(dead_code)]

use polycycle_core::enumerate::{catalog, CatalogEntry, Sequential, Task};
use polycycle_core::map::FaceAssembler;
use polycycle_core::{Params, PlanarMap, Polycycle};
use rand::seq::SliceRandom;
use rand::Rng;

/// Same polycycle with shuffled vertex, edge and dart ids, rotated rotation
/// lists and, at random, reversed orientation.
pub fn relabel(p: &Polycycle, rng: &mut impl Rng) -> Polycycle {
    let base = if rng.gen_bool(0.5) { p.mirrored() } else { p.clone() };
    let map = base.map();
    let mut vperm: Vec<usize> = (0..map.vertex_count()).collect();
    vperm.shuffle(rng);
    let mut eperm: Vec<u32> = (0..map.edge_count() as u32).collect();
    eperm.shuffle(rng);
    let flip: Vec<u32> = (0..map.edge_count()).map(|_| rng.gen_range(0..2)).collect();
    let nd = |d: u32| 2 * eperm[d as usize / 2] + ((d % 2) ^ flip[d as usize / 2]);
    let mut rots = vec![Vec::new(); map.vertex_count()];
    for v in 0..map.vertex_count() {
        let mut r: Vec<u32> = map.rotation(v).iter().map(|&d| nd(d)).collect();
        let k = rng.gen_range(0..r.len());
        r.rotate_left(k);
        rots[vperm[v]] = r;
    }
    let m = PlanarMap::from_dart_rotations(rots).unwrap();
    let mut flags = vec![false; m.face_count()];
    for h in base.holes() {
        flags[m.face_of(nd(map.face(h)[0]))] = true;
    }
    Polycycle::new(m, flags, base.params().clone()).unwrap()
}

/// An m-cycle with every edge tripled; the inner and outer m-gons are holes.
pub fn bracelet(m: u32) -> Result<Polycycle, polycycle_core::Error> {
    let mut fa = FaceAssembler::new(m as usize);
    let inner: Vec<(u32, u32)> = (0..m).map(|i| (i, 3 * i + 2)).collect();
    fa.tagged_face(&inner);
    for i in 0..m {
        let j = (i + 1) % m;
        fa.tagged_face(&[(j, 3 * i + 2), (i, 3 * i + 1)]);
        fa.tagged_face(&[(j, 3 * i + 1), (i, 3 * i)]);
    }
    let outer: Vec<(u32, u32)> = (0..m).rev().map(|i| ((i + 1) % m, 3 * i)).collect();
    fa.tagged_face(&outer);
    let (map, ids) = fa.finish()?;
    let mut flags = vec![false; map.face_count()];
    flags[ids[0]] = true;
    flags[ids[ids.len() - 1]] = true;
    Polycycle::new(map, flags, Params::new([2], 6)?)
}

pub fn elliptic_sets() -> [(Params, usize); 3] {
    [
        (Params::new([2, 3, 4, 5], 3).unwrap(), 8),
        (Params::new([2, 3], 4).unwrap(), 20),
        (Params::new([2, 3], 5).unwrap(), 14),
    ]
}

pub fn small_catalog(params: &Params, max: usize) -> Vec<CatalogEntry> {
    catalog(&Task::new(params.clone(), max), &Sequential).unwrap()
}

/// Glues `count` random pieces from `pool` in a chain of agglomerations.
/// Returns the result and the sorted codes of the pieces used; chains that
/// run out of open edges or overflow a degree are restarted a few times.
pub fn random_agglomerate(
    pool: &[Polycycle],
    count: usize,
    rng: &mut impl Rng,
) -> Option<(Polycycle, Vec<polycycle_core::CanonicalCode>)> {
    (0..50).find_map(|_| try_chain(pool, count, rng))
}

fn try_chain(
    pool: &[Polycycle],
    count: usize,
    rng: &mut impl Rng,
) -> Option<(Polycycle, Vec<polycycle_core::CanonicalCode>)> {
    let mut cur = pool.choose(rng)?.clone();
    let mut codes = vec![cur.canonical_code()];
    for _ in 1..count {
        let mut glued = false;
        for _ in 0..20 {
            let piece = pool.choose(rng)?;
            let (oa, ob) = (cur.open_edges(), piece.open_edges());
            let (Some(&ea), Some(&eb)) = (oa.choose(rng), ob.choose(rng)) else { continue };
            match cur.agglomerate(ea, piece, eb, rng.gen()) {
                Ok(g) => {
                    cur = g;
                    codes.push(piece.canonical_code());
                    glued = true;
                    break;
                }
                Err(polycycle_core::Error::DegreeOverflow { .. }) => {}
                Err(e) => panic!("unexpected agglomeration failure: {e}"),
            }
        }
        if !glued {
            return None;
        }
    }
    codes.sort();
    Some((cur, codes))
}
