//! Concatenation series of elementary polycycles.
//!
//! A series member is two endings joined by a band: the barrel band of
//! pentagons for `q = 3`, the snub-antiprism band of triangles for `q = 5`.
//! One step of a series cuts the member along a short path crossing the band
//! from hole to hole, inserts one band cell and re-glues the far side
//! mirrored (the band is invariant under a glide reflection by one cell).
//!
//! Each series is stored as its first band member with a crossing path; the
//! members before it (where the band is too short to cut) are stored whole.
//! The tables come from `examples/seeds.rs`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;
use crate::map::{alpha, edge_of, CanonicalCode, Dart, FaceAssembler, PlanarMap};
use crate::polycycle::{Params, Polycycle};

const NAMES: [&str; 6] = ["alpha", "beta", "gamma", "delta", "epsilon", "mu"];
const GREEK: [char; 6] = ['α', 'β', 'γ', 'δ', 'ε', 'μ'];

/// A series: `q` and an unordered pair of endings (indices into
/// α β γ δ ε μ, smaller first).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SeriesId {
    pub q: u32,
    pub pair: (u8, u8),
}

impl SeriesId {
    pub fn new(q: u32, a: u8, b: u8) -> Result<Self, Error> {
        let id = SeriesId { q, pair: (a.min(b), a.max(b)) };
        id.row()?;
        Ok(id)
    }

    /// Parses `"alpha-beta"`, `"ab"`-style initials or Greek letters.
    pub fn parse(q: u32, s: &str) -> Result<Self, Error> {
        let bad = || Error::UnknownSeries(String::from(s));
        let one = |t: &str| -> Option<u8> {
            let t = t.trim().to_lowercase();
            NAMES
                .iter()
                .position(|n| *n == t)
                .or_else(|| GREEK.iter().position(|g| t.chars().eq(core::iter::once(*g))))
                .or_else(|| ["a", "b", "g", "d", "e", "m"].iter().position(|n| *n == t))
                .map(|i| i as u8)
        };
        let parts: Vec<&str> = if s.contains('-') {
            s.split('-').collect()
        } else {
            let idx: Vec<usize> = s.char_indices().map(|(i, _)| i).chain(core::iter::once(s.len())).collect();
            if idx.len() != 3 {
                return Err(bad());
            }
            vec![&s[idx[0]..idx[1]], &s[idx[1]..idx[2]]]
        };
        if parts.len() != 2 {
            return Err(bad());
        }
        let a = one(parts[0]).ok_or_else(bad)?;
        let b = one(parts[1]).ok_or_else(bad)?;
        SeriesId::new(q, a, b).map_err(|_| bad())
    }

    /// Every series for `q` (21 for 3, 6 for 5, none otherwise).
    pub fn all(q: u32) -> Vec<SeriesId> {
        table(q).iter().map(|s| SeriesId { q, pair: s.pair }).collect()
    }

    /// ASCII name such as `alpha-beta`.
    pub fn name(&self) -> String {
        let g = |i: u8| NAMES.get(i as usize).copied().unwrap_or("?");
        format!("{}-{}", g(self.pair.0), g(self.pair.1))
    }

    /// Smallest valid member index.
    pub fn first_index(&self) -> usize {
        self.row().map(|s| seed_index(self.q) - s.early.len()).unwrap_or(0)
    }

    fn row(&self) -> Result<&'static Row, Error> {
        table(self.q).iter().find(|s| s.pair == self.pair).ok_or_else(|| Error::UnknownSeries(format!("{self}")))
    }
}

impl fmt::Display for SeriesId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = |i: u8| GREEK.get(i as usize).copied().unwrap_or('?');
        write!(f, "{}{}", g(self.pair.0), g(self.pair.1))
    }
}

struct Encoded {
    rot: &'static [&'static [u32]],
    hole: u32,
    cut: &'static [u32],
}

pub(crate) struct Row {
    pair: (u8, u8),
    early: &'static [Encoded],
    seed: Encoded,
}

fn table(q: u32) -> &'static [Row] {
    match q {
        3 => Q3,
        5 => Q5,
        _ => &[],
    }
}

/// Index of the stored band seed.
fn seed_index(q: u32) -> usize {
    if q == 3 {
        2
    } else {
        1
    }
}

fn series_params(q: u32) -> Params {
    if q == 3 { Params::new([3, 4, 5], 3) } else { Params::new([2, 3], 5) }.expect("static parameters are valid")
}

fn decode(e: &Encoded, q: u32) -> Polycycle {
    let rots: Vec<Vec<Dart>> = e.rot.iter().map(|r| r.to_vec()).collect();
    let map = PlanarMap::from_dart_rotations(rots).expect("stored seeds are valid maps");
    let mut holes = vec![false; map.face_count()];
    holes[map.face_of(e.hole)] = true;
    Polycycle::new(map, holes, series_params(q)).expect("stored seeds are polycycles")
}

/// Members `first_index..=last` of a series, in order.
pub fn series_members(id: SeriesId, last: usize) -> Result<Vec<Polycycle>, Error> {
    let row = id.row()?;
    let mut out: Vec<Polycycle> = row.early.iter().map(|e| decode(e, id.q)).collect();
    let first = id.first_index();
    if last < first {
        return Err(Error::IndexBelowStart { index: last, first });
    }
    out.truncate(last + 1 - first);
    let mut p = decode(&row.seed, id.q);
    let mut cut: Cut = row.seed.cut.to_vec();
    let mut n = seed_index(id.q);
    while n <= last {
        if n == last {
            out.push(p);
            break;
        }
        let (next, seam) = insert_cell(&p, &cut)?;
        out.push(p);
        p = next;
        cut = seam;
        n += 1;
    }
    Ok(out)
}

/// The `n`-th member of a series.
pub fn series_member(id: SeriesId, n: usize) -> Result<Polycycle, Error> {
    let first = id.first_index();
    if n < first {
        return Err(Error::IndexBelowStart { index: n, first });
    }
    Ok(series_members(id, n)?.pop().expect("nonempty"))
}

/// Canonical codes of every series member up to a face bound.
#[derive(Debug, Clone, Default)]
pub struct SeriesIndex {
    codes: BTreeMap<CanonicalCode, (SeriesId, usize)>,
}

impl SeriesIndex {
    pub fn new(q: u32, max_faces: usize) -> Self {
        let mut codes = BTreeMap::new();
        for id in SeriesId::all(q) {
            let mut p = decode(&id.row().unwrap().seed, q);
            let mut members: Vec<(usize, Polycycle)> = Vec::new();
            for (i, e) in id.row().unwrap().early.iter().enumerate() {
                members.push((id.first_index() + i, decode(e, q)));
            }
            let mut cut: Cut = id.row().unwrap().seed.cut.to_vec();
            let mut n = seed_index(q);
            while p.face_count() <= max_faces {
                let step = insert_cell(&p, &cut);
                members.push((n, p));
                match step {
                    Ok((next, seam)) => {
                        p = next;
                        cut = seam;
                        n += 1;
                    }
                    Err(_) => break,
                }
            }
            for (n, m) in members {
                if m.face_count() <= max_faces {
                    codes.entry(m.canonical_code()).or_insert((id, n));
                }
            }
        }
        SeriesIndex { codes }
    }

    pub fn lookup(&self, code: &CanonicalCode) -> Option<(SeriesId, usize)> {
        self.codes.get(code).copied()
    }

    pub fn len(&self) -> usize {
        self.codes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codes.is_empty()
    }
}

/// Series and index of `p`, if it is a series member.
pub fn identify(p: &Polycycle) -> Option<(SeriesId, usize)> {
    SeriesIndex::new(p.params().q(), p.face_count()).lookup(&p.canonical_code())
}

/// Slice vertices: path vertex `P(j)`, or the two new vertices.
#[derive(Clone, Copy, PartialEq, Eq)]
enum S {
    P(usize),
    N,
    A,
}

struct Cell {
    /// Interior vertices on a crossing path.
    inner: usize,
    faces: &'static [&'static [S]],
    /// Path along which the mirrored far side is glued, from the new hole
    /// vertex back to the old path.
    seam: &'static [S],
}

const PENTAGON_CELL: Cell =
    Cell { inner: 2, faces: &[&[S::P(0), S::P(1), S::P(2), S::N, S::A]], seam: &[S::A, S::N, S::P(2), S::P(3)] };

const TRIANGLE_CELL: Cell = Cell {
    inner: 1,
    faces: &[&[S::P(0), S::P(1), S::N], &[S::P(1), S::P(2), S::N], &[S::A, S::P(0), S::N]],
    seam: &[S::A, S::N, S::P(2)],
};

fn cell_for(p: &Polycycle) -> Option<&'static Cell> {
    let params = p.params();
    match params.q() {
        3 if params.allows(5) => Some(&PENTAGON_CELL),
        5 if params.allows(3) => Some(&TRIANGLE_CELL),
        _ => None,
    }
}

/// A crossing path given by its darts, hole vertex to hole vertex.
pub type Cut = Vec<Dart>;

/// Crossing paths of the right length through interior vertices; each path
/// appears in both directions.
pub fn cuts(p: &Polycycle) -> Vec<Cut> {
    let Some(cell) = cell_for(p) else { return Vec::new() };
    if p.hole_count() != 1 {
        return Vec::new();
    }
    let map = p.map();
    let mut out = Vec::new();
    let mut stack: Vec<Dart> = Vec::new();
    fn extend(p: &Polycycle, inner: usize, stack: &mut Vec<Dart>, out: &mut Vec<Cut>) {
        let map = p.map();
        let last = *stack.last().unwrap();
        let v = map.head(last);
        if stack.len() == inner + 1 {
            if p.hole_at(v).is_some() && v != map.origin(stack[0]) {
                out.push(stack.clone());
            }
            return;
        }
        if p.hole_at(v).is_some() {
            return;
        }
        for &d in map.rotation(v) {
            if d == alpha(last) || stack.iter().any(|&s| map.origin(s) == map.head(d)) {
                continue;
            }
            stack.push(d);
            extend(p, inner, stack, out);
            stack.pop();
        }
    }
    for v in 0..map.vertex_count() {
        if p.hole_at(v).is_none() {
            continue;
        }
        for &d in map.rotation(v) {
            if p.is_hole_dart(d) || p.is_hole_dart(alpha(d)) {
                continue;
            }
            stack.push(d);
            extend(p, cell.inner, &mut stack, &mut out);
            stack.pop();
        }
    }
    out
}

/// Inserts one band cell at `cut`. Returns the new polycycle and the seam
/// path, which is again a valid cut for the next step.
///
/// Cuts come in two chiralities; the cell fits one of them directly and the
/// other after mirroring `p` (dart ids survive mirroring).
pub fn insert_cell(p: &Polycycle, cut: &[Dart]) -> Result<(Polycycle, Cut), Error> {
    let rev: Cut = cut.iter().rev().map(|&d| alpha(d)).collect();
    let m = p.mirrored();
    insert_oriented(p, cut)
        .or_else(|e| insert_oriented(&m, cut).map_err(|_| e))
        .or_else(|e| insert_oriented(p, &rev).map_err(|_| e))
        .or_else(|e| insert_oriented(&m, &rev).map_err(|_| e))
}

fn insert_oriented(p: &Polycycle, cut: &[Dart]) -> Result<(Polycycle, Cut), Error> {
    let cell = cell_for(p).ok_or(Error::BadRun("no band cell for these parameters"))?;
    let map = p.map();
    let k = cut.len();
    if k != cell.inner + 1 || p.hole_count() != 1 {
        return Err(Error::BadRun("cut does not cross a band"));
    }
    let path: Vec<usize> = core::iter::once(map.origin(cut[0])).chain(cut.iter().map(|&d| map.head(d))).collect();
    let path_edges: Vec<usize> = cut.iter().map(|&d| edge_of(d)).collect();
    let on_path = |e: usize| path_edges.iter().position(|&x| x == e);

    let side = sides(p, cut)?;
    let nf = map.face_count();

    const NEW: u32 = u32::MAX;
    let nv = map.vertex_count() as u32;
    let resolve = |s: S| -> u32 {
        match s {
            S::P(j) => path[j] as u32,
            S::N => nv,
            S::A => nv + 1,
        }
    };
    let tag_between = |a: S, b: S| -> u32 {
        match (a, b) {
            (S::P(i), S::P(j)) if i + 1 == j || j + 1 == i => path_edges[i.min(j)] as u32,
            _ => NEW,
        }
    };
    // Far-side path vertex j lands on seam[k - j]; far-side path edge j on
    // the seam edge between seam[k - j] and seam[k - j - 1].
    let rho = |v: usize| -> u32 {
        match path.iter().position(|&x| x == v) {
            Some(j) => resolve(cell.seam[k - j]),
            None => v as u32,
        }
    };
    let far_tag = |e: usize| -> u32 {
        match on_path(e) {
            Some(j) => tag_between(cell.seam[k - j], cell.seam[k - j - 1]),
            None => e as u32,
        }
    };

    let mut fa = FaceAssembler::new(map.vertex_count() + 2);
    for f in 0..nf {
        let walk = map.face(f);
        if p.is_hole(f) {
            continue;
        }
        if side[f] == 2 {
            let n = walk.len();
            let rev: Vec<(u32, u32)> =
                (0..n).rev().map(|i| (rho(map.head(walk[i])), far_tag(edge_of(walk[i])))).collect();
            fa.tagged_face(&rev);
        } else {
            let fw: Vec<(u32, u32)> = walk.iter().map(|&d| (map.origin(d) as u32, edge_of(d) as u32)).collect();
            fa.tagged_face(&fw);
        }
    }
    for face in cell.faces {
        let n = face.len();
        let cyc: Vec<(u32, u32)> =
            (0..n).map(|i| (resolve(face[i]), tag_between(face[i], face[(i + 1) % n]))).collect();
        fa.tagged_face(&cyc);
    }
    // The hole: near portion from the far end of the path round to its start,
    // then the new hole edge, then the far portion reversed.
    let hole = p.holes().next().unwrap();
    let walk = map.face(hole);
    let (v0, vk) = (path[0], path[k]);
    let n = walk.len();
    let start = walk.iter().position(|&d| map.origin(d) == vk).ok_or(Error::BadRun("cut misses the hole"))?;
    let w: Vec<Dart> = (0..n).map(|i| walk[(start + i) % n]).collect();
    let i0 = w.iter().position(|&d| map.origin(d) == v0).ok_or(Error::BadRun("cut misses the hole"))?;
    if side[map.face_of(alpha(w[0]))] != 1 {
        return Err(Error::BadRun("cut runs the wrong way"));
    }
    let mut hw: Vec<(u32, u32)> = w[..i0].iter().map(|&d| (map.origin(d) as u32, edge_of(d) as u32)).collect();
    hw.push((v0 as u32, NEW));
    for j in (i0..n).rev() {
        hw.push((rho(map.head(w[j])), edge_of(w[j]) as u32));
    }
    let hole_id = fa.tagged_face(&hw);

    let (new_map, ids) = fa.finish().map_err(Error::Map)?;
    let mut flags = vec![false; new_map.face_count()];
    flags[ids[hole_id]] = true;
    let q = Polycycle::new(new_map, flags, p.params().clone())?;
    // Locate the seam darts in the new map.
    let seam: Vec<u32> = cell.seam.iter().map(|&s| resolve(s)).collect();
    let nm = q.map();
    let mut next = Vec::with_capacity(k);
    for i in 0..k {
        let d = nm
            .rotation(seam[i] as usize)
            .iter()
            .copied()
            .find(|&d| nm.head(d) == seam[i + 1] as usize)
            .ok_or(Error::BadRun("seam lost"))?;
        next.push(d);
    }
    Ok((q, next))
}

/// Splits proper faces into the two sides of `cut`: 1 for the side of
/// `alpha` of the cut darts, 2 for the side of the darts themselves.
fn sides(p: &Polycycle, cut: &[Dart]) -> Result<Vec<u8>, Error> {
    let map = p.map();
    let path_edges: Vec<usize> = cut.iter().map(|&d| edge_of(d)).collect();
    let mut side = vec![0u8; map.face_count()];
    let mut queue = Vec::new();
    for &d in cut {
        for (dd, s) in [(alpha(d), 1u8), (d, 2u8)] {
            let f = map.face_of(dd);
            if side[f] != 0 && side[f] != s {
                return Err(Error::BadRun("cut does not separate"));
            }
            side[f] = s;
            queue.push(f);
        }
    }
    while let Some(f) = queue.pop() {
        for &d in map.face(f) {
            if path_edges.contains(&edge_of(d)) {
                continue;
            }
            let g = map.face_of(alpha(d));
            if p.is_hole(g) {
                continue;
            }
            if side[g] == 0 {
                side[g] = side[f];
                queue.push(g);
            } else if side[g] != side[f] {
                return Err(Error::BadRun("cut does not separate"));
            }
        }
    }
    Ok(side)
}

/// Canonical code and size of the piece on `keep` side of `cut`.
fn piece(p: &Polycycle, side: &[u8], keep: u8) -> Result<(crate::map::CanonicalCode, usize), Error> {
    let map = p.map();
    let mut e = p.editor();
    for f in p.proper_faces() {
        if side[f] != keep {
            e.dissolve_face(map.face(f)[0]);
        }
    }
    let (comps, _) = e.finish_components()?;
    let c = comps.into_iter().next().ok_or(Error::Disconnected)?;
    let keys: Vec<u32> =
        (0..c.map.face_count()).map(|f| if c.holes[f] { 0 } else { c.map.face(f).len() as u32 }).collect();
    let n = c.holes.iter().filter(|&&h| !h).count();
    Ok((c.map.canonical_code(&keys), n))
}

/// The two end pieces of a band member: for each end, the smallest piece of
/// at least `min` faces cut off by a repeatable cut. Sorted by (size, code).
#[doc(hidden)]
pub fn end_pieces(p: &Polycycle, min: usize) -> Option<[(crate::map::CanonicalCode, usize); 2]> {
    let mut parts: Vec<(usize, Vec<u8>, u8)> = Vec::new();
    for c in cuts(p) {
        if !repeats(p, &c, 2) {
            continue;
        }
        let side = sides(p, &c).ok()?;
        for keep in [1u8, 2] {
            let n = side.iter().filter(|&&s| s == keep).count();
            parts.push((n, side.clone(), keep));
        }
    }
    parts.sort_by_key(|x| x.0);
    let (_, s0, k0) = parts.first()?.clone();
    let touches = |s: &[u8], k: u8| (0..s.len()).any(|f| s[f] == k && s0[f] == k0);
    let (_, s1, k1) = parts.iter().find(|(n, s, k)| *n >= min && touches(s, *k))?.clone();
    let (_, s2, k2) = parts.iter().find(|(n, s, k)| *n >= min && !touches(s, *k))?.clone();
    let first = piece(p, &s1, k1).ok()?;
    let second = piece(p, &s2, k2).ok()?;
    let mut v = [first, second];
    v.sort_by(|a, b| (a.1, &a.0).cmp(&(b.1, &b.0)));
    Some(v)
}

/// True if some band cell can be inserted, i.e. `p` belongs to an infinite
/// concatenation series.
pub fn has_band(p: &Polycycle) -> bool {
    cuts(p).iter().any(|c| repeats(p, c, 3))
}

/// Inserting at `cut` and then `times - 1` more times along the seam keeps
/// the result elementary.
pub fn repeats(p: &Polycycle, cut: &[Dart], times: usize) -> bool {
    let mut cur = p.clone();
    let mut c = cut.to_vec();
    for _ in 0..times {
        match insert_cell(&cur, &c) {
            Ok((n, seam)) if n.is_elementary() => {
                cur = n;
                c = seam;
            }
            _ => return false,
        }
    }
    true
}

#[rustfmt::skip]
const Q3: &[Row] = &[
    Row { pair: (0, 0), early: &[Encoded { rot: &[&[0, 2], &[1, 4], &[3, 6], &[5, 8], &[7, 9]], hole: 0, cut: &[] }, Encoded { rot: &[&[0, 2], &[1, 4], &[3, 6, 8], &[5, 10, 13], &[7, 12, 16], &[9, 14], &[11, 18], &[15, 20], &[17, 22, 21], &[19, 23]], hole: 0, cut: &[] }], seed: Encoded { rot: &[&[0, 2], &[1, 4], &[3, 6, 8], &[5, 10, 13], &[7, 12, 16], &[9, 14], &[11, 18], &[15, 20, 26], &[17, 22, 21], &[19, 24, 23], &[25, 28], &[27, 29]], hole: 0, cut: &[6, 16, 22] } },
    Row { pair: (0, 1), early: &[], seed: Encoded { rot: &[&[0, 2], &[1, 4, 8], &[3, 6, 10], &[5, 12], &[7, 9, 14], &[11, 16], &[13, 18, 21], &[15, 20, 23], &[17, 22, 26], &[19, 24], &[25, 27]], hole: 0, cut: &[6, 14, 20] } },
    Row { pair: (0, 2), early: &[], seed: Encoded { rot: &[&[0, 2], &[1, 4, 8], &[3, 6, 10], &[5, 12, 16], &[7, 9, 14], &[11, 18], &[13, 20], &[15, 17, 22], &[19, 23, 25], &[21, 24]], hole: 0, cut: &[16, 15, 7] } },
    Row { pair: (0, 3), early: &[], seed: Encoded { rot: &[&[0, 2, 4], &[1, 6, 10], &[3, 8, 14], &[5, 12], &[7, 16], &[9, 11, 18], &[13, 20], &[15, 22, 21], &[17, 24], &[19, 25, 27], &[23, 26]], hole: 0, cut: &[10, 9, 14] } },
    Row { pair: (0, 4), early: &[], seed: Encoded { rot: &[&[0, 2, 4], &[1, 6, 9], &[3, 8, 12], &[5, 10, 16], &[7, 14], &[11, 13, 18], &[15, 20, 19], &[17, 22], &[21, 23]], hole: 0, cut: &[10, 13, 8] } },
    Row { pair: (0, 5), early: &[], seed: Encoded { rot: &[&[0, 2, 4], &[1, 6, 9], &[3, 8, 12], &[5, 10], &[7, 14], &[11, 16, 22], &[13, 18, 17], &[15, 20, 19], &[21, 24], &[23, 25]], hole: 0, cut: &[19, 13, 3] } },
    Row { pair: (1, 1), early: &[], seed: Encoded { rot: &[&[0, 2], &[1, 4, 8], &[3, 6, 10], &[5, 12], &[7, 9, 14], &[11, 16], &[13, 18, 21], &[15, 20, 23], &[17, 22, 25], &[19, 24]], hole: 0, cut: &[6, 14, 20] } },
    Row { pair: (1, 2), early: &[], seed: Encoded { rot: &[&[0, 2], &[1, 4, 8], &[3, 6, 10], &[5, 12, 16], &[7, 9, 14], &[11, 18], &[13, 20], &[15, 17, 22], &[19, 23, 21]], hole: 0, cut: &[8, 14, 22] } },
    Row { pair: (1, 3), early: &[], seed: Encoded { rot: &[&[0, 2], &[1, 4, 8], &[3, 6, 10], &[5, 12, 16], &[7, 9, 14], &[11, 18], &[13, 20], &[15, 17, 22], &[19, 23, 25], &[21, 24]], hole: 0, cut: &[8, 14, 22] } },
    Row { pair: (1, 4), early: &[], seed: Encoded { rot: &[&[0, 2, 4], &[1, 6, 9], &[3, 8, 12], &[5, 10, 16], &[7, 14], &[11, 13, 18], &[15, 20, 19], &[17, 21]], hole: 0, cut: &[10, 13, 8] } },
    Row { pair: (1, 5), early: &[], seed: Encoded { rot: &[&[0, 2, 4], &[1, 6, 9], &[3, 8, 12], &[5, 10], &[7, 14], &[11, 16, 22], &[13, 18, 17], &[15, 20, 19], &[21, 23]], hole: 0, cut: &[16, 13, 8] } },
    Row { pair: (2, 2), early: &[], seed: Encoded { rot: &[&[0, 2], &[1, 4, 8], &[3, 6, 10], &[5, 12, 16], &[7, 9, 14], &[11, 18, 21], &[13, 20], &[15, 17, 19]], hole: 0, cut: &[8, 14, 19] } },
    Row { pair: (2, 3), early: &[], seed: Encoded { rot: &[&[0, 2], &[1, 4, 8], &[3, 6, 10], &[5, 12, 16], &[7, 9, 14], &[11, 18, 22], &[13, 20], &[15, 17, 19], &[21, 23]], hole: 0, cut: &[8, 14, 19] } },
    Row { pair: (2, 4), early: &[], seed: Encoded { rot: &[&[0, 2, 4], &[1, 6, 9], &[3, 8, 12], &[5, 10, 16], &[7, 14, 18], &[11, 13, 19], &[15, 17]], hole: 0, cut: &[18, 13, 3] } },
    Row { pair: (2, 5), early: &[], seed: Encoded { rot: &[&[0, 2, 4], &[1, 6, 9], &[3, 8, 12], &[5, 10, 16], &[7, 14], &[11, 13, 18], &[15, 20, 19], &[17, 21]], hole: 0, cut: &[2, 12, 18] } },
    Row { pair: (3, 3), early: &[], seed: Encoded { rot: &[&[0, 2, 4], &[1, 6, 10], &[3, 8, 14], &[5, 12], &[7, 16], &[9, 11, 18], &[13, 20], &[15, 22, 21], &[17, 24], &[19, 25, 23]], hole: 0, cut: &[2, 8, 18] } },
    Row { pair: (3, 4), early: &[], seed: Encoded { rot: &[&[0, 2, 4], &[1, 6, 9], &[3, 8, 12], &[5, 10, 16], &[7, 14, 18], &[11, 13, 19], &[15, 20], &[17, 21]], hole: 0, cut: &[10, 13, 8] } },
    Row { pair: (3, 5), early: &[], seed: Encoded { rot: &[&[0, 2, 4], &[1, 6, 9], &[3, 8, 12], &[5, 10, 16], &[7, 14], &[11, 13, 18], &[15, 20, 19], &[17, 22], &[21, 23]], hole: 0, cut: &[2, 12, 18] } },
    Row { pair: (4, 4), early: &[], seed: Encoded { rot: &[&[0, 2, 4], &[1, 6, 9], &[3, 8, 12], &[5, 10, 15], &[7, 14, 16], &[11, 13, 17]], hole: 0, cut: &[9, 12, 11] } },
    Row { pair: (4, 5), early: &[], seed: Encoded { rot: &[&[0, 2, 4], &[1, 6, 9], &[3, 8, 12], &[5, 10, 16], &[7, 14], &[11, 13, 18], &[15, 17, 19]], hole: 0, cut: &[2, 12, 18] } },
    Row { pair: (5, 5), early: &[], seed: Encoded { rot: &[&[0, 2, 4], &[1, 6, 9], &[3, 8, 12], &[5, 10], &[7, 14], &[11, 16, 21], &[13, 18, 17], &[15, 20, 19]], hole: 0, cut: &[9, 12, 17] } },
];

#[rustfmt::skip]
const Q5: &[Row] = &[
    Row { pair: (0, 0), early: &[Encoded { rot: &[&[0, 2, 4], &[1, 6, 9], &[3, 8, 12, 18, 11], &[5, 10, 16], &[7, 14, 13], &[15, 17, 19]], hole: 0, cut: &[] }], seed: Encoded { rot: &[&[0, 2, 4], &[1, 6, 9], &[3, 8, 12, 18, 11], &[5, 10, 16, 22], &[7, 14, 20, 13], &[15, 24, 27], &[17, 19, 21, 26, 29], &[23, 28, 25]], hole: 0, cut: &[13, 11] } },
    Row { pair: (0, 1), early: &[Encoded { rot: &[&[0, 2, 4], &[1, 6, 9], &[3, 8, 12, 17, 11], &[5, 10, 16, 15], &[7, 14, 13]], hole: 0, cut: &[] }], seed: Encoded { rot: &[&[0, 2, 4], &[1, 6, 9], &[3, 8, 12, 18, 11], &[5, 10, 16, 22], &[7, 14, 20, 13], &[15, 23, 26, 25], &[17, 19, 21, 24, 27]], hole: 0, cut: &[16, 21] } },
    Row { pair: (0, 2), early: &[], seed: Encoded { rot: &[&[0, 2, 4], &[1, 6, 9], &[3, 8, 12, 18, 11], &[5, 10, 16, 22, 25], &[7, 14, 20, 13], &[15, 24, 27], &[17, 19, 21, 26, 23]], hole: 0, cut: &[10, 12] } },
    Row { pair: (1, 1), early: &[], seed: Encoded { rot: &[&[0, 2, 4, 8], &[1, 6, 12, 11], &[3, 10, 14, 19, 5], &[7, 16, 22, 21], &[9, 18, 24, 17], &[13, 20, 23, 25, 15]], hole: 0, cut: &[18, 10] } },
    Row { pair: (1, 2), early: &[], seed: Encoded { rot: &[&[0, 2, 4], &[1, 6, 10, 9], &[3, 8, 14, 19, 13], &[5, 12, 18, 24, 17], &[7, 16, 22, 21], &[11, 20, 23, 25, 15]], hole: 0, cut: &[24, 11] } },
    Row { pair: (2, 2), early: &[], seed: Encoded { rot: &[&[0, 2, 4], &[1, 6, 10, 15, 9], &[3, 8, 14, 20, 13], &[5, 12, 18, 24, 17], &[7, 16, 23], &[11, 22, 25, 19, 21]], hole: 0, cut: &[15, 13] } },
];
