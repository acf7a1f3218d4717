//! Isomorph-free generation of elementary polycycles.
//!
//! Every elementary polycycle with `n >= 2` faces has a hole-adjacent face `t`
//! whose removal leaves a valid polycycle `A` with `n - 1` faces. `A` is
//! either elementary or an agglomerate of smaller elementary pieces whose
//! bridges all end on the `t`-side of the hole, so the generator builds every
//! such `A` from the catalog found so far and closes it with one face.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::families;
use crate::map::{CanonicalCode, Dart};
use crate::polycycle::{Attachment, Ellipticity, Params, Polycycle};
use crate::series::{self, SeriesId};
use crate::symmetry::{symmetry_of_graph, symmetry_of_polycycle, SymmetryInfo};

/// Runs independent jobs; implementations may use threads.
pub trait Executor: Sync {
    fn run<T, R, F>(&self, items: Vec<T>, f: F) -> Vec<R>
    where
        T: Send + Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send;
}

/// Runs jobs one after another on the calling thread.
#[derive(Debug, Default, Clone, Copy)]
pub struct Sequential;

impl Executor for Sequential {
    fn run<T, R, F>(&self, items: Vec<T>, f: F) -> Vec<R>
    where
        T: Send + Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        items.iter().map(f).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Elementary,
    TotallyElementary,
}

#[derive(Debug, Clone)]
pub struct Task {
    pub params: Params,
    pub max_faces: usize,
    pub mode: Mode,
}

impl Task {
    pub fn new(params: Params, max_faces: usize) -> Self {
        Task { params, max_faces, mode: Mode::Elementary }
    }

    fn check(&self) -> Result<(), Error> {
        if self.params.ellipticity() != Ellipticity::Elliptic {
            return Err(Error::NotElliptic);
        }
        if self.max_faces < 1 {
            return Err(Error::BoundTooSmall);
        }
        if self.mode == Mode::TotallyElementary && self.params.q() != 3 {
            return Err(Error::WrongValence(self.params.q()));
        }
        Ok(())
    }
}

/// Named family an entry belongs to.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Monocycle(usize),
    GonTriple(usize, usize, usize),
    Barrel(usize),
    SnubAntiprism(usize),
    Series(SeriesId, usize),
    Sporadic,
}

impl Family {
    /// Short tag used for filtering: `monocycle`, `triple`, `barrel`,
    /// `antiprism`, `series` or `sporadic`.
    pub fn kind(&self) -> &'static str {
        match self {
            Family::Monocycle(_) => "monocycle",
            Family::GonTriple(..) => "triple",
            Family::Barrel(_) => "barrel",
            Family::SnubAntiprism(_) => "antiprism",
            Family::Series(..) => "series",
            Family::Sporadic => "sporadic",
        }
    }
}

impl core::fmt::Display for Family {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Family::Monocycle(i) => write!(f, "monocycle({i})"),
            Family::GonTriple(i, j, k) => write!(f, "triple({i},{j},{k})"),
            Family::Barrel(m) => write!(f, "barrel({m})"),
            Family::SnubAntiprism(m) => write!(f, "snub-antiprism({m})"),
            Family::Series(id, n) => write!(f, "series({},{n})", id.name()),
            Family::Sporadic => f.write_str("sporadic"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub polycycle: Polycycle,
    pub code: CanonicalCode,
    pub face_count: usize,
    pub hole_count: usize,
    pub aut_p: SymmetryInfo,
    pub aut_g: SymmetryInfo,
    pub extensible: bool,
    pub family: Family,
}

impl CatalogEntry {
    pub fn new(p: &Polycycle) -> CatalogEntry {
        let index = series::SeriesIndex::new(p.params().q(), p.face_count());
        CatalogEntry::with_index(p, &index)
    }

    /// Like [`CatalogEntry::new`] with a prebuilt series index.
    pub fn with_index(p: &Polycycle, index: &series::SeriesIndex) -> CatalogEntry {
        let polycycle = p.canonical_form();
        CatalogEntry {
            code: polycycle.canonical_code(),
            face_count: polycycle.face_count(),
            hole_count: polycycle.hole_count(),
            aut_p: symmetry_of_polycycle(&polycycle),
            aut_g: symmetry_of_graph(&polycycle),
            extensible: polycycle.is_extensible(),
            family: family_with(&polycycle, index),
            polycycle,
        }
    }

    /// Not a member of an infinite family; monocycles and triples count.
    pub fn is_sporadic(&self) -> bool {
        matches!(self.family, Family::Sporadic | Family::Monocycle(_) | Family::GonTriple(..))
    }
}

struct Piece {
    p: Polycycle,
    mirror: Polycycle,
    /// Hole darts of open edges, one per orbit of the automorphism group.
    open_reps: Vec<Dart>,
}

impl Piece {
    fn new(p: Polycycle, with_orbits: bool) -> Piece {
        let open_all: Vec<Dart> = p.open_edges().iter().map(|&e| p.hole_dart(e).unwrap()).collect();
        let open_reps = if with_orbits { orbit_reps(&p, &open_all) } else { open_all.clone() };
        Piece { mirror: p.mirrored(), p, open_reps }
    }
}

fn orbit_reps(p: &Polycycle, darts: &[Dart]) -> Vec<Dart> {
    let group = p.automorphisms();
    let mut seen = BTreeSet::new();
    let mut reps = Vec::new();
    for &d in darts {
        let e = d >> 1;
        if seen.contains(&e) {
            continue;
        }
        reps.push(d);
        for g in &group {
            seen.insert(g.darts[d as usize] >> 1);
        }
    }
    reps
}

/// Elementary polycycles with at most `max_faces` faces, ordered by
/// `(face count, canonical code)`.
pub fn enumerate_elementary<E: Executor>(task: &Task, exec: &E) -> Result<Vec<Polycycle>, Error> {
    task.check()?;
    let mut gen = Generator::new(task.params.clone(), exec);
    for n in 1..=task.max_faces {
        gen.step(n);
    }
    let mut out = Vec::new();
    for level in gen.elementary {
        out.extend(level.into_values().map(|p| p.p));
    }
    if task.mode == Mode::TotallyElementary {
        out.retain(|p| p.is_totally_elementary().unwrap_or(false));
    }
    Ok(out)
}

/// Totally elementary polycycles (q = 3 only).
pub fn enumerate_totally_elementary<E: Executor>(task: &Task, exec: &E) -> Result<Vec<Polycycle>, Error> {
    let mut t = task.clone();
    t.mode = Mode::TotallyElementary;
    enumerate_elementary(&t, exec)
}

/// Full catalog entries for an enumeration task.
pub fn catalog<E: Executor>(task: &Task, exec: &E) -> Result<Vec<CatalogEntry>, Error> {
    let found = enumerate_elementary(task, exec)?;
    let index = series::SeriesIndex::new(task.params.q(), task.max_faces);
    Ok(exec.run(found, |p| CatalogEntry::with_index(p, &index)))
}

struct Generator<'a, E> {
    params: Params,
    exec: &'a E,
    bridge_cap: usize,
    /// `elementary[n]`: elementary polycycles with `n` faces, keyed by code.
    elementary: Vec<BTreeMap<CanonicalCode, Piece>>,
    /// `agglomerates[n]`: non-elementary agglomerates that may still be closed.
    agglomerates: Vec<Vec<Polycycle>>,
}

impl<'a, E: Executor> Generator<'a, E> {
    fn new(params: Params, exec: &'a E) -> Self {
        let bridge_cap = ((params.r() - 1) * (params.q() - 2)) as usize;
        Generator { params, exec, bridge_cap, elementary: vec![BTreeMap::new()], agglomerates: vec![Vec::new()] }
    }

    fn step(&mut self, n: usize) {
        if n == 1 {
            let mut level = BTreeMap::new();
            for &i in self.params.sizes() {
                let p = families::monocycle_with(i as usize, self.params.clone()).expect("monocycles are valid");
                level.insert(p.canonical_code(), Piece::new(p, true));
            }
            self.elementary.push(level);
            self.agglomerates.push(Vec::new());
            return;
        }
        let s = n - 1;
        let aggs = self.build_agglomerates(s);
        self.agglomerates[s] = aggs;
        let mut bases: Vec<&Polycycle> = self.elementary[s].values().map(|x| &x.p).collect();
        bases.extend(self.agglomerates[s].iter());
        let params = &self.params;
        let found = self.exec.run(bases, |a| close(a, params));
        let mut level = BTreeMap::new();
        for batch in found {
            for (code, p) in batch {
                level.entry(code).or_insert(p);
            }
        }
        let pieces: Vec<(CanonicalCode, Polycycle)> = level.into_iter().collect();
        let built = self.exec.run(pieces, |(c, p)| (c.clone(), Piece::new(p.clone(), true)));
        self.elementary.push(built.into_iter().collect());
        self.agglomerates.push(Vec::new());
    }

    /// Non-elementary agglomerates with `s` faces and few enough bridges.
    fn build_agglomerates(&self, s: usize) -> Vec<Polycycle> {
        let mut jobs: Vec<(&Polycycle, Option<&[Dart]>, &Piece)> = Vec::new();
        for a in 1..s {
            let b = s - a;
            for x in self.elementary[a].values() {
                for q in self.elementary[b].values() {
                    jobs.push((&x.p, Some(&x.open_reps), q));
                }
            }
            for x in &self.agglomerates[a] {
                for q in self.elementary[b].values() {
                    jobs.push((x, None, q));
                }
            }
        }
        let cap = self.bridge_cap;
        let results = self.exec.run(jobs, |(x, reps, q)| {
            let own;
            let xs: &[Dart] = match reps {
                Some(r) => r,
                None => {
                    own = open_darts(x);
                    &own
                }
            };
            let mut out = Vec::new();
            for &d1 in xs {
                for &d2 in &q.open_reps {
                    for flip in [false, true] {
                        let glued = if flip { x.glue_darts(d1, &q.mirror, d2 ^ 1) } else { x.glue_darts(d1, &q.p, d2) };
                        if let Ok(g) = glued {
                            if g.bridges().len() <= cap {
                                out.push((g.canonical_code(), g));
                            }
                        }
                    }
                }
            }
            out
        });
        let mut found: BTreeMap<CanonicalCode, Polycycle> = BTreeMap::new();
        for batch in results {
            for (c, g) in batch {
                found.entry(c).or_insert(g);
            }
        }
        let mut frontier: Vec<Polycycle> = found.values().cloned().collect();
        frontier.extend(self.elementary[s].values().map(|x| x.p.clone()));
        while !frontier.is_empty() {
            let res = self.exec.run(frontier, |y| {
                let open = open_darts(y);
                let mut out = Vec::new();
                for i in 0..open.len() {
                    for j in i + 1..open.len() {
                        if let Ok(g) = y.self_glue_darts(open[i], open[j]) {
                            if g.bridges().len() <= cap {
                                out.push((g.canonical_code(), g));
                            }
                        }
                    }
                }
                out
            });
            frontier = Vec::new();
            for batch in res {
                for (c, g) in batch {
                    if let alloc::collections::btree_map::Entry::Vacant(slot) = found.entry(c) {
                        slot.insert(g.clone());
                        frontier.push(g);
                    }
                }
            }
        }
        found.into_values().collect()
    }
}

fn open_darts(p: &Polycycle) -> Vec<Dart> {
    p.open_edges().iter().map(|&e| p.hole_dart(e).unwrap()).collect()
}

/// Every elementary polycycle obtained from `a` by one added face that
/// removes all of its bridges.
fn close(a: &Polycycle, params: &Params) -> Vec<(CanonicalCode, Polycycle)> {
    let q = params.q() as usize;
    let r = params.r() as usize;
    let map = a.map();
    let bridges = a.bridges();
    let ends: Vec<[usize; 2]> = bridges.iter().map(|&e| map.edge_ends(e)).collect();
    let mut out = Vec::new();
    let mut push = |p: Polycycle| {
        if p.is_elementary() {
            out.push((p.canonical_code(), p));
        }
    };
    for h in a.holes() {
        let walk = map.face(h);
        let l = walk.len();
        if !ends.iter().all(|e| a.hole_at(e[0]) == Some(h) || a.hole_at(e[1]) == Some(h)) {
            continue;
        }
        for s in 0..l {
            let mut inner: Vec<usize> = Vec::new();
            for m in 2..=r.min(l - 1) {
                let v = map.origin(walk[(s + m - 1) % l]);
                if map.degree(v) != q {
                    break;
                }
                inner.push(v);
                if !ends.iter().all(|e| inner.contains(&e[0]) || inner.contains(&e[1])) {
                    continue;
                }
                for &i in params.sizes() {
                    let i = i as usize;
                    if i < m {
                        continue;
                    }
                    if let Ok(p) = a.add_face(&Attachment::run(walk[s], m, i)) {
                        push(p);
                    }
                }
            }
        }
        if bridges.is_empty() && a.hole_count() >= 2 {
            if let Ok(p) = a.add_face(&Attachment::Fill(h)) {
                push(p);
            }
        }
    }
    out
}

/// Family tag by comparison with the generators.
pub fn family_of(p: &Polycycle) -> Family {
    family_with(p, &series::SeriesIndex::new(p.params().q(), p.face_count()))
}

fn family_with(p: &Polycycle, index: &series::SeriesIndex) -> Family {
    let n = p.face_count();
    let code = p.canonical_code();
    let q = p.params().q();
    if n == 1 {
        return Family::Monocycle(p.map().face(p.proper_faces().next().unwrap()).len());
    }
    if n == 3 && q == 3 && p.hole_count() == 1 {
        let s = p.gon_sizes();
        if let Ok(t) = families::gon_triple_with(s[0], s[1], s[2], p.params().clone()) {
            if t.canonical_code() == code {
                return Family::GonTriple(s[0], s[1], s[2]);
            }
        }
    }
    if p.hole_count() == 2 {
        if q == 3 && n.is_multiple_of(2) {
            if let Ok(b) = families::barrel_with(n / 2, p.params().clone()) {
                if b.canonical_code() == code {
                    return Family::Barrel(n / 2);
                }
            }
        }
        if q == 5 && n.is_multiple_of(6) {
            if let Ok(b) = families::snub_antiprism_with(n / 6, p.params().clone()) {
                if b.canonical_code() == code {
                    return Family::SnubAntiprism(n / 6);
                }
            }
        }
    }
    if let Some((id, k)) = index.lookup(&code) {
        return Family::Series(id, k);
    }
    Family::Sporadic
}

/// Groups entries whose underlying sphere maps coincide once hole marks are
/// erased; only groups of two or more are returned.
pub fn coincidence_classes(entries: &[CatalogEntry]) -> Vec<Vec<usize>> {
    let mut groups: BTreeMap<CanonicalCode, Vec<usize>> = BTreeMap::new();
    for (i, e) in entries.iter().enumerate() {
        groups.entry(e.polycycle.graph_code()).or_default().push(i);
    }
    groups.into_values().filter(|g| g.len() >= 2).collect()
}

/// Catalog position of a polycycle, if it was enumerated.
pub fn classify(p: &Polycycle, catalog: &[CatalogEntry]) -> Result<(Family, usize), Error> {
    let code = p.canonical_code();
    catalog
        .iter()
        .position(|e| e.code == code)
        .map(|i| (catalog[i].family.clone(), i))
        .ok_or(Error::NotInCatalog(p.face_count()))
}

/// Every polycycle with at most `max_faces` faces reachable from single
/// faces by unrestricted face addition, bridged or not. Small-scale oracle.
pub fn brute_force(params: &Params, max_faces: usize) -> Vec<Vec<Polycycle>> {
    let mut levels: Vec<Vec<Polycycle>> = vec![Vec::new()];
    let mut first = BTreeMap::new();
    for &i in params.sizes() {
        let p = families::monocycle_with(i as usize, params.clone()).unwrap();
        first.insert(p.canonical_code(), p);
    }
    levels.push(first.into_values().collect());
    for _ in 2..=max_faces {
        let mut next = BTreeMap::new();
        for p in levels.last().unwrap() {
            for att in p.attachments() {
                if let Ok(x) = p.add_face(&att) {
                    next.entry(x.canonical_code()).or_insert(x);
                }
            }
        }
        levels.push(next.into_values().collect());
    }
    levels
}
