//! Constructors for the named polycycle families.

use alloc::format;
use alloc::vec::Vec;

use crate::error::Error;
use crate::map::FaceAssembler;
use crate::polycycle::{Params, Polycycle};

/// Parameters used by the constructors when none are given.
pub fn default_params(kind: FamilyKind, size: usize) -> Params {
    match kind {
        FamilyKind::Monocycle => Params::new([size as u32], 3),
        FamilyKind::GonTriple | FamilyKind::Barrel => Params::new([3, 4, 5], 3),
        FamilyKind::SnubAntiprism => Params::new([2, 3], 5),
    }
    .expect("static parameters are valid")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    Monocycle,
    GonTriple,
    Barrel,
    SnubAntiprism,
}

/// Builds a polycycle from oriented faces; the last `holes` faces are holes.
fn assemble(vertices: usize, faces: &[Vec<(u32, u32)>], holes: usize, params: Params) -> Result<Polycycle, Error> {
    let mut fa = FaceAssembler::new(vertices);
    for f in faces {
        fa.tagged_face(f);
    }
    let (map, ids) = fa.finish()?;
    let mut flags = alloc::vec![false; map.face_count()];
    for &id in &ids[faces.len() - holes..] {
        flags[id] = true;
    }
    Polycycle::new(map, flags, params)
}

fn plain(cycle: impl IntoIterator<Item = u32>) -> Vec<(u32, u32)> {
    cycle.into_iter().map(|v| (v, 0)).collect()
}

/// A single `i`-gon whose outside is the hole.
pub fn monocycle(i: usize) -> Result<Polycycle, Error> {
    monocycle_with(i, default_params(FamilyKind::Monocycle, i.max(2)))
}

pub fn monocycle_with(i: usize, params: Params) -> Result<Polycycle, Error> {
    if i < 2 {
        return Err(Error::BadSize(format!("monocycle needs i >= 2, got {i}")));
    }
    let n = i as u32;
    let face: Vec<(u32, u32)> = (0..n).map(|v| (v, v)).collect();
    let hole: Vec<(u32, u32)> = (0..n).rev().map(|v| ((v + 1) % n, v)).collect();
    assemble(i, &[face, hole], 1, params)
}

/// Three faces of sizes `i`, `j`, `k` around a common 3-valent vertex.
pub fn gon_triple(i: usize, j: usize, k: usize) -> Result<Polycycle, Error> {
    gon_triple_with(i, j, k, default_params(FamilyKind::GonTriple, 0))
}

pub fn gon_triple_with(i: usize, j: usize, k: usize, params: Params) -> Result<Polycycle, Error> {
    for s in [i, j, k] {
        if s < 3 {
            return Err(Error::BadSize(format!("triple faces need at least 3 sides, got {s}")));
        }
    }
    let mut next = 4u32;
    let mut paths: Vec<Vec<u32>> = Vec::new();
    for s in [i, j, k] {
        let p: Vec<u32> = (0..s as u32 - 3).map(|t| next + t).collect();
        next += s as u32 - 3;
        paths.push(p);
    }
    let spokes = [1u32, 2, 3];
    let mut faces = Vec::new();
    let mut outer = Vec::new();
    for t in 0..3 {
        let (a, b) = (spokes[t], spokes[(t + 1) % 3]);
        let mut f = alloc::vec![0, a];
        f.extend(&paths[t]);
        f.push(b);
        faces.push(plain(f));
        outer.push(a);
        outer.extend(&paths[t]);
    }
    outer.reverse();
    faces.push(plain(outer));
    assemble(next as usize, &faces, 1, params)
}

/// Two `m`-gonal holes separated by two rings of `m` pentagons.
pub fn barrel(m: usize) -> Result<Polycycle, Error> {
    barrel_with(m, default_params(FamilyKind::Barrel, m))
}

pub fn barrel_with(m: usize, params: Params) -> Result<Polycycle, Error> {
    if m < 2 {
        return Err(Error::BadSize(format!("barrel needs m >= 2, got {m}")));
    }
    let mm = m as u32;
    let a = |i: u32| i % mm;
    let b = |i: u32| mm + i % mm;
    let c = |j: u32| 2 * mm + j % (2 * mm);
    let mut faces = Vec::new();
    for i in 0..mm {
        faces.push(alloc::vec![(a(i), 0), (c(2 * i), 0), (c(2 * i + 1), 0), (c(2 * i + 2), 0), (a(i + 1), i)]);
    }
    for i in 0..mm {
        faces.push(alloc::vec![(b(i), i), (b(i + 1), 0), (c(2 * i + 3), 0), (c(2 * i + 2), 0), (c(2 * i + 1), 0)]);
    }
    faces.push((0..mm).map(|i| (a(i), i)).collect());
    faces.push((0..mm).rev().map(|i| (b(i + 1), i)).collect());
    assemble(4 * m, &faces, 2, params)
}

/// Two `m`-gonal holes separated by `6m` triangles, 5-valent inside.
pub fn snub_antiprism(m: usize) -> Result<Polycycle, Error> {
    snub_antiprism_with(m, default_params(FamilyKind::SnubAntiprism, m))
}

pub fn snub_antiprism_with(m: usize, params: Params) -> Result<Polycycle, Error> {
    if m < 2 {
        return Err(Error::BadSize(format!("snub antiprism needs m >= 2, got {m}")));
    }
    let mm = m as u32;
    let a = |i: u32| i % mm;
    let b = |i: u32| mm + i % mm;
    let c = |j: u32| 2 * mm + j % (2 * mm);
    let mut faces = Vec::new();
    for i in 0..mm {
        faces.push(plain([a(i), c(2 * i), c(2 * i + 1)]));
        faces.push(plain([a(i), c(2 * i + 1), c(2 * i + 2)]));
        faces.push(alloc::vec![(a(i), 0), (c(2 * i + 2), 0), (a(i + 1), i)]);
        faces.push(plain([b(i), c(2 * i + 2), c(2 * i + 1)]));
        faces.push(plain([b(i), c(2 * i + 3), c(2 * i + 2)]));
        faces.push(alloc::vec![(b(i), i), (b(i + 1), 0), (c(2 * i + 3), 0)]);
    }
    faces.push((0..mm).map(|i| (a(i), i)).collect());
    faces.push((0..mm).rev().map(|i| (b(i + 1), i)).collect());
    assemble(4 * m, &faces, 2, params)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monocycle_counts() {
        for i in 2..8 {
            let p = monocycle(i).unwrap();
            assert_eq!(p.map().vertex_count(), i);
            assert_eq!(p.face_count(), 1);
            assert!(!p.is_hole(0));
            assert!(p.is_hole(1));
        }
        assert!(monocycle(1).is_err());
    }

    #[test]
    fn barrel_counts() {
        for m in 2..=12 {
            let p = barrel(m).unwrap();
            let map = p.map();
            assert_eq!((map.vertex_count(), map.edge_count()), (4 * m, 6 * m));
            assert_eq!(p.face_count(), 2 * m);
            assert_eq!(p.hole_count(), 2);
            assert!(p.is_elementary());
        }
    }

    #[test]
    fn snub_counts() {
        for m in 2..=12 {
            let p = snub_antiprism(m).unwrap();
            let map = p.map();
            assert_eq!((map.vertex_count(), map.edge_count()), (4 * m, 10 * m));
            assert_eq!(p.face_count(), 6 * m);
            assert_eq!(p.hole_count(), 2);
            assert!(p.is_elementary());
        }
    }

    #[test]
    fn ten_triples() {
        let mut codes = Vec::new();
        for i in 3..=5 {
            for j in 3..=5 {
                for k in 3..=5 {
                    codes.push(gon_triple(i, j, k).unwrap().canonical_code());
                }
            }
        }
        codes.sort();
        codes.dedup();
        assert_eq!(codes.len(), 10);
        assert_eq!(gon_triple(3, 3, 4).unwrap().canonical_code(), gon_triple(3, 4, 3).unwrap().canonical_code());
    }
}
