//! (R,q)-polycycles: validation, bridges, open edges, face surgery,
//! agglomeration and the bridge decomposition.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::edit::Editor;
use crate::error::Error;
use crate::map::{alpha, Automorphism, CanonicalCode, Dart, PlanarMap};

/// Allowed gon sizes `R` and valence `q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Params {
    sizes: Vec<u32>,
    q: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Ellipticity {
    Elliptic,
    Parabolic,
    Hyperbolic,
}

impl Params {
    pub fn new(sizes: impl IntoIterator<Item = u32>, q: u32) -> Result<Self, Error> {
        let mut sizes: Vec<u32> = sizes.into_iter().collect();
        sizes.sort_unstable();
        sizes.dedup();
        if sizes.is_empty() {
            return Err(Error::BadParams("R is empty".into()));
        }
        if sizes[0] < 2 {
            return Err(Error::BadParams(format!("gon size {} < 2", sizes[0])));
        }
        if q < 3 {
            return Err(Error::BadParams(format!("q = {q} < 3")));
        }
        Ok(Params { sizes, q })
    }

    pub fn sizes(&self) -> &[u32] {
        &self.sizes
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// Largest gon size.
    pub fn r(&self) -> u32 {
        *self.sizes.last().unwrap()
    }

    pub fn allows(&self, size: usize) -> bool {
        self.sizes.binary_search(&(size as u32)).is_ok()
    }

    /// `1/q + 1/r - 1/2` as a fraction `(numerator, denominator)` with positive denominator.
    pub fn ellipticity_value(&self) -> (i64, i64) {
        let (q, r) = (self.q as i64, self.r() as i64);
        (2 * r + 2 * q - q * r, 2 * q * r)
    }

    pub fn ellipticity(&self) -> Ellipticity {
        match self.ellipticity_value().0.cmp(&0) {
            Ordering::Greater => Ellipticity::Elliptic,
            Ordering::Equal => Ellipticity::Parabolic,
            Ordering::Less => Ellipticity::Hyperbolic,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeKind {
    Boundary { open: bool },
    Bridge,
    Interior,
}

/// One stretch of a new face's boundary: `len >= 1` consecutive hole edges
/// starting at hole dart `start`, followed by `link` new edges leading to the
/// next segment (`link = 0` identifies the two vertices instead).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Segment {
    pub start: Dart,
    pub len: usize,
    pub link: usize,
}

/// Where and how a new proper face is added.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Attachment {
    /// A face drawn inside a hole, touching its boundary along the given
    /// segments (listed in the hole's walking order).
    Along(Vec<Segment>),
    /// Turn a whole hole into a proper face.
    Fill(usize),
}

impl Attachment {
    /// A single run of `len` hole edges closed by a `gon`-gon.
    pub fn run(start: Dart, len: usize, gon: usize) -> Self {
        Attachment::Along(vec![Segment { start, len, link: gon.saturating_sub(len) }])
    }

    pub fn gon(&self, p: &Polycycle) -> usize {
        match self {
            Attachment::Along(segs) => segs.iter().map(|s| s.len + s.link).sum(),
            Attachment::Fill(h) => p.map.face(*h).len(),
        }
    }
}

/// Copy of a bridge after a cut: component index and the hole-side dart of
/// the open edge that carries it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Seam {
    pub a: (usize, Dart),
    pub b: (usize, Dart),
}

/// Result of cutting every bridge.
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub pieces: Vec<Polycycle>,
    pub seams: Vec<Seam>,
}

#[derive(Debug, Clone)]
pub struct Polycycle {
    map: PlanarMap,
    holes: Vec<bool>,
    params: Params,
    vertex_hole: Vec<Option<u32>>,
}

impl Polycycle {
    /// Checks the polycycle axioms for `map` with hole flags per face.
    pub fn new(map: PlanarMap, holes: Vec<bool>, params: Params) -> Result<Self, Error> {
        assert_eq!(holes.len(), map.face_count(), "one hole flag per face");
        if !map.euler_genus_check() {
            return Err(Error::NotPlanar(map.euler_characteristic()));
        }
        if holes.iter().all(|&h| h) || holes.iter().all(|&h| !h) {
            return Err(Error::EmptyPartition);
        }
        for (f, face) in map.faces().iter().enumerate() {
            if !holes[f] && !params.allows(face.len()) {
                return Err(Error::BadGonSize { face: f, size: face.len() });
            }
        }
        let mut vertex_hole = vec![None; map.vertex_count()];
        for v in 0..map.vertex_count() {
            for &d in map.rotation(v) {
                let f = map.face_of(d);
                if !holes[f] {
                    continue;
                }
                match vertex_hole[v] {
                    None => vertex_hole[v] = Some(f as u32),
                    Some(g) if g as usize == f => return Err(Error::NotTwoConnected { face: f }),
                    Some(g) => return Err(Error::HolesShareVertex { h1: g as usize, h2: f, vertex: v }),
                }
            }
        }
        let q = params.q as usize;
        for v in 0..map.vertex_count() {
            let degree = map.degree(v);
            if degree > q {
                return Err(Error::DegreeTooHigh { vertex: v, degree });
            }
            if vertex_hole[v].is_none() && degree != q {
                return Err(Error::InteriorNotQValent { vertex: v, degree });
            }
        }
        let mut mark = vec![usize::MAX; map.vertex_count()];
        for (f, face) in map.faces().iter().enumerate() {
            for &d in face {
                let v = map.origin(d);
                if mark[v] == f {
                    return Err(Error::NotTwoConnected { face: f });
                }
                mark[v] = f;
            }
        }
        Ok(Polycycle { map, holes, params, vertex_hole })
    }

    /// Same structure checked against other parameters.
    pub fn with_params(&self, params: Params) -> Result<Self, Error> {
        Polycycle::new(self.map.clone(), self.holes.clone(), params)
    }

    pub fn map(&self) -> &PlanarMap {
        &self.map
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn is_hole(&self, f: usize) -> bool {
        self.holes[f]
    }

    pub fn hole_flags(&self) -> &[bool] {
        &self.holes
    }

    pub fn holes(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.holes.len()).filter(|&f| self.holes[f])
    }

    pub fn proper_faces(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.holes.len()).filter(|&f| !self.holes[f])
    }

    /// Number of proper faces.
    pub fn face_count(&self) -> usize {
        self.holes.iter().filter(|&&h| !h).count()
    }

    pub fn hole_count(&self) -> usize {
        self.holes.iter().filter(|&&h| h).count()
    }

    /// Hole whose boundary passes through `v`, if any.
    pub fn hole_at(&self, v: usize) -> Option<usize> {
        self.vertex_hole[v].map(|h| h as usize)
    }

    pub fn is_hole_dart(&self, d: Dart) -> bool {
        self.holes[self.map.face_of(d)]
    }

    /// Gon sizes of the proper faces, sorted.
    pub fn gon_sizes(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.proper_faces().map(|f| self.map.face(f).len()).collect();
        s.sort_unstable();
        s
    }

    pub(crate) fn editor(&self) -> Editor {
        Editor::new(&self.map, &self.holes)
    }

    pub(crate) fn face_keys(&self) -> Vec<u32> {
        (0..self.holes.len()).map(|f| if self.holes[f] { 0 } else { self.map.face(f).len() as u32 }).collect()
    }

    pub(crate) fn graph_keys(&self) -> Vec<u32> {
        self.map.faces().iter().map(|f| f.len() as u32).collect()
    }

    /// Isomorphism class of the polycycle (holes and proper faces kept apart).
    pub fn canonical_code(&self) -> CanonicalCode {
        self.map.canonical_code(&self.face_keys())
    }

    /// Isomorphism class of the underlying sphere map, ignoring which faces are holes.
    pub fn graph_code(&self) -> CanonicalCode {
        self.map.canonical_code(&self.graph_keys())
    }

    pub fn is_isomorphic(&self, other: &Polycycle) -> bool {
        self.map.edge_count() == other.map.edge_count() && self.canonical_code() == other.canonical_code()
    }

    /// Automorphisms preserving the hole/proper partition.
    pub fn automorphisms(&self) -> Vec<Automorphism> {
        self.map.automorphisms(&self.face_keys())
    }

    /// Automorphisms of the underlying sphere map.
    pub fn graph_automorphisms(&self) -> Vec<Automorphism> {
        self.map.automorphisms(&self.graph_keys())
    }

    /// Isomorphic copy numbered in canonical breadth-first order.
    pub fn canonical_form(&self) -> Polycycle {
        let (map, new_id, reversed) = self.map.canonical_relabel(&self.face_keys());
        let mut holes = vec![false; map.face_count()];
        for (old, &nd) in new_id.iter().enumerate() {
            let src = if reversed { alpha(old as Dart) } else { old as Dart };
            if self.holes[self.map.face_of(src)] {
                holes[map.face_of(nd)] = true;
            }
        }
        Polycycle::new(map, holes, self.params.clone()).expect("relabeling preserves the axioms")
    }

    /// Mirror image.
    pub fn mirrored(&self) -> Polycycle {
        let mut e = self.editor();
        e.mirror();
        self.rebuild(&e).expect("mirror preserves the axioms")
    }

    pub fn classify_edges(&self) -> Vec<EdgeKind> {
        let q = self.params.q as usize;
        (0..self.map.edge_count())
            .map(|e| {
                let d = 2 * e as Dart;
                let [u, v] = self.map.edge_ends(e);
                if self.is_hole_dart(d) || self.is_hole_dart(d + 1) {
                    EdgeKind::Boundary { open: self.map.degree(u) < q && self.map.degree(v) < q }
                } else if self.vertex_hole[u].is_some() && self.vertex_hole[v].is_some() {
                    EdgeKind::Bridge
                } else {
                    EdgeKind::Interior
                }
            })
            .collect()
    }

    pub fn bridges(&self) -> Vec<usize> {
        self.classify_edges().iter().enumerate().filter(|(_, k)| **k == EdgeKind::Bridge).map(|(e, _)| e).collect()
    }

    pub fn is_elementary(&self) -> bool {
        (0..self.map.edge_count()).all(|e| {
            let d = 2 * e as Dart;
            let [u, v] = self.map.edge_ends(e);
            self.is_hole_dart(d)
                || self.is_hole_dart(d + 1)
                || self.vertex_hole[u].is_none()
                || self.vertex_hole[v].is_none()
        })
    }

    pub fn open_edges(&self) -> Vec<usize> {
        self.classify_edges()
            .iter()
            .enumerate()
            .filter(|(_, k)| **k == EdgeKind::Boundary { open: true })
            .map(|(e, _)| e)
            .collect()
    }

    /// Dart of edge `e` that runs along a hole, if the edge is on one.
    pub fn hole_dart(&self, e: usize) -> Option<Dart> {
        let d = 2 * e as Dart;
        if self.is_hole_dart(d) {
            Some(d)
        } else if self.is_hole_dart(d + 1) {
            Some(d + 1)
        } else {
            None
        }
    }

    /// Vertex degrees along a hole, in the rotation and direction that is
    /// lexicographically smallest.
    pub fn boundary_sequence(&self, hole: usize) -> Result<Vec<u32>, Error> {
        if hole >= self.holes.len() || !self.holes[hole] {
            return Err(Error::NotAHole(hole));
        }
        let seq: Vec<u32> = self.map.face(hole).iter().map(|&d| self.map.degree(self.map.origin(d)) as u32).collect();
        Ok(min_cyclic(&seq))
    }

    /// Rebuilds a polycycle from an edited workspace.
    pub(crate) fn rebuild(&self, e: &Editor) -> Result<Polycycle, Error> {
        let fin = e.finish().map_err(Error::in_result)?;
        Polycycle::new(fin.map, fin.holes, self.params.clone()).map_err(Error::in_result)
    }

    /// Turns proper face `f` into part of the hole system.
    pub fn remove_face(&self, f: usize) -> Result<Polycycle, Error> {
        if f >= self.holes.len() || self.holes[f] {
            return Err(Error::NotProper(f));
        }
        if self.face_count() < 2 {
            return Err(Error::LastProperFace);
        }
        let mut e = self.editor();
        e.dissolve_face(self.map.face(f)[0]);
        self.rebuild(&e)
    }

    /// Adds one proper face. Returns the new polycycle and the id of the new face.
    pub fn add_face_tracked(&self, att: &Attachment) -> Result<(Polycycle, usize), Error> {
        match att {
            Attachment::Fill(h) => {
                if *h >= self.holes.len() || !self.holes[*h] {
                    return Err(Error::NotAHole(*h));
                }
                if !self.params.allows(self.map.face(*h).len()) {
                    return Err(Error::SizeNotInR(self.map.face(*h).len()));
                }
                let mut holes = self.holes.clone();
                holes[*h] = false;
                let p = Polycycle::new(self.map.clone(), holes, self.params.clone()).map_err(Error::in_result)?;
                Ok((p, *h))
            }
            Attachment::Along(segs) => self.add_along(segs),
        }
    }

    pub fn add_face(&self, att: &Attachment) -> Result<Polycycle, Error> {
        self.add_face_tracked(att).map(|(p, _)| p)
    }

    fn add_along(&self, segs: &[Segment]) -> Result<(Polycycle, usize), Error> {
        if segs.is_empty() || segs.len() > 2 {
            return Err(Error::BadRun("one or two segments are supported"));
        }
        let gon: usize = segs.iter().map(|s| s.len + s.link).sum();
        if !self.params.allows(gon) {
            return Err(Error::SizeNotInR(gon));
        }
        let first = segs[0].start;
        if first as usize >= self.map.dart_count() || !self.is_hole_dart(first) {
            return Err(Error::BadRun("segment does not start on a hole"));
        }
        let walk = face_from(&self.map, first);
        let l = walk.len();
        let mut starts = Vec::with_capacity(segs.len());
        for s in segs {
            if s.len == 0 {
                return Err(Error::BadRun("segment without edges"));
            }
            match walk.iter().position(|&d| d == s.start) {
                Some(i) => starts.push(i),
                None => return Err(Error::BadRun("segments on different holes")),
            }
        }
        let used: usize = segs.iter().map(|s| s.len).sum();
        if segs.len() == 1 {
            if segs[0].len >= l {
                return Err(Error::BadRun("run covers the whole hole"));
            }
        } else {
            let gap1 = starts[1] as isize - (starts[0] + segs[0].len) as isize;
            if gap1 < 1 || used + gap1 as usize >= l {
                return Err(Error::BadRun("segments overlap or touch"));
            }
        }
        let q = self.params.q as usize;
        let deg = |d: Dart| self.map.degree(self.map.origin(d));
        let k = segs.len();
        for i in 0..k {
            let end = walk[(starts[i] + segs[i].len) % l];
            let next = walk[starts[(i + 1) % k]];
            let (a, b) = (deg(end), deg(next));
            if segs[i].link == 0 {
                if self.map.origin(end) == self.map.origin(next) {
                    return Err(Error::BadRun("merge of a vertex with itself"));
                }
                if a + b > q {
                    return Err(Error::DegreeOverflow { vertex: self.map.origin(end), degree: a + b });
                }
            } else {
                for (d, x) in [(end, a), (next, b)] {
                    let extra = if self.map.origin(end) == self.map.origin(next) { 2 } else { 1 };
                    if x + extra > q {
                        return Err(Error::DegreeOverflow { vertex: self.map.origin(d), degree: x + extra });
                    }
                }
            }
        }
        let mut e = self.editor();
        for i in 0..k {
            let end = walk[(starts[i] + segs[i].len) % l];
            let next = walk[starts[(i + 1) % k]];
            if segs[i].link == 0 {
                e.merge(end, next)?;
            } else {
                for d in e.connect(end, next, segs[i].link) {
                    e.hole[d as usize] = false;
                    e.hole[alpha(d) as usize] = true;
                }
            }
            for j in 0..segs[i].len {
                e.hole[walk[(starts[i] + j) % l] as usize] = false;
            }
        }
        let fin = e.finish().map_err(Error::in_result)?;
        let face = fin.map.face_of(fin.darts[first as usize].unwrap());
        let p = Polycycle::new(fin.map, fin.holes, self.params.clone()).map_err(Error::in_result)?;
        Ok((p, face))
    }

    /// All attachments of a face inside the holes, without checking validity.
    pub fn attachments(&self) -> Vec<Attachment> {
        let mut out = Vec::new();
        for h in self.holes() {
            let walk = self.map.face(h);
            let l = walk.len();
            for &gon in self.params.sizes() {
                let gon = gon as usize;
                for s in 0..l {
                    for len in 1..l.min(gon + 1) {
                        if len == gon && len < 2 {
                            continue;
                        }
                        out.push(Attachment::Along(vec![Segment { start: walk[s], len, link: gon - len }]));
                    }
                    for len1 in 1..gon {
                        for gap1 in 1..l {
                            for len2 in 1..=gon - len1 {
                                if len1 + gap1 + len2 >= l {
                                    break;
                                }
                                let links = gon - len1 - len2;
                                for link1 in 0..=links {
                                    out.push(Attachment::Along(vec![
                                        Segment { start: walk[s], len: len1, link: link1 },
                                        Segment { start: walk[(s + len1 + gap1) % l], len: len2, link: links - link1 },
                                    ]));
                                }
                            }
                        }
                    }
                }
            }
            if self.hole_count() >= 2 && self.params.allows(l) {
                out.push(Attachment::Fill(h));
            }
        }
        out
    }

    /// Whether some face can be added so that removing it gives this polycycle back.
    pub fn is_extensible(&self) -> bool {
        let code = self.canonical_code();
        self.attachments().iter().any(|att| match self.add_face_tracked(att) {
            Ok((p, f)) => p.remove_face(f).is_ok_and(|back| back.canonical_code() == code),
            Err(_) => false,
        })
    }

    /// For q = 3: elementary, and no hole-adjacent face can be removed while
    /// staying elementary.
    pub fn is_totally_elementary(&self) -> Result<bool, Error> {
        if self.params.q != 3 {
            return Err(Error::WrongValence(self.params.q));
        }
        if !self.is_elementary() {
            return Ok(false);
        }
        Ok(self.hole_adjacent_faces().into_iter().all(|f| match self.remove_face(f) {
            Ok(p) => !p.is_elementary(),
            Err(_) => true,
        }))
    }

    /// Proper faces sharing at least a vertex with some hole.
    pub fn hole_adjacent_faces(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .proper_faces()
            .filter(|&f| self.map.face(f).iter().any(|&d| self.vertex_hole[self.map.origin(d)].is_some()))
            .collect();
        out.sort_unstable();
        out
    }

    fn check_open(&self, e: usize) -> Result<Dart, Error> {
        if e >= self.map.edge_count() {
            return Err(Error::NotOpen(e));
        }
        match (self.classify_edges()[e], self.hole_dart(e)) {
            (EdgeKind::Boundary { open: true }, Some(d)) => Ok(d),
            _ => Err(Error::NotOpen(e)),
        }
    }

    fn glue_degrees(&self, d1: Dart, other: &Polycycle, d2: Dart) -> Result<(), Error> {
        let q = self.params.q as usize;
        let (x1, y1) = (self.map.origin(d1), self.map.head(d1));
        let (x2, y2) = (other.map.origin(d2), other.map.head(d2));
        for (v, a, b) in
            [(y1, self.map.degree(y1), other.map.degree(x2)), (x1, self.map.degree(x1), other.map.degree(y2))]
        {
            if a + b - 1 > q {
                return Err(Error::DegreeOverflow { vertex: v, degree: a + b - 1 });
            }
        }
        Ok(())
    }

    /// Identifies open edge `e1` of `self` with open edge `e2` of `other`.
    /// `flip` glues the mirror image of `other` instead.
    pub fn agglomerate(&self, e1: usize, other: &Polycycle, e2: usize, flip: bool) -> Result<Polycycle, Error> {
        if self.params != other.params {
            return Err(Error::BadParams("agglomerated pieces use different (R,q)".into()));
        }
        let d1 = self.check_open(e1)?;
        let mut d2 = other.check_open(e2)?;
        let mut e = self.editor();
        let mut o = other.editor();
        if flip {
            o.mirror();
            d2 = alpha(d2);
        }
        let (ds, de) = (other.map.degree(other.map.origin(d2)), other.map.degree(other.map.origin(alpha(d2))));
        let q = self.params.q as usize;
        let (x1, y1) = (self.map.origin(d1), self.map.head(d1));
        for (v, a, b) in [(y1, self.map.degree(y1), ds), (x1, self.map.degree(x1), de)] {
            if a + b - 1 > q {
                return Err(Error::DegreeOverflow { vertex: v, degree: a + b - 1 });
            }
        }
        let off = e.append(&o);
        e.glue(d1, d2 + off)?;
        self.rebuild(&e)
    }

    /// Identifies two distinct open edges of the same polycycle.
    pub fn self_agglomerate(&self, e1: usize, e2: usize) -> Result<Polycycle, Error> {
        if e1 == e2 {
            return Err(Error::BadRun("an edge cannot be glued to itself"));
        }
        let d1 = self.check_open(e1)?;
        let d2 = self.check_open(e2)?;
        self.glue_degrees(d1, self, d2)?;
        let mut e = self.editor();
        e.glue(d1, d2)?;
        self.rebuild(&e)
    }

    /// Glues hole dart `d1` of `self` to hole dart `d2` of `other`.
    pub(crate) fn glue_darts(&self, d1: Dart, other: &Polycycle, d2: Dart) -> Result<Polycycle, Error> {
        self.glue_degrees(d1, other, d2)?;
        let mut e = self.editor();
        let off = e.append(&other.editor());
        e.glue(d1, d2 + off)?;
        self.rebuild(&e)
    }

    pub(crate) fn self_glue_darts(&self, d1: Dart, d2: Dart) -> Result<Polycycle, Error> {
        self.glue_degrees(d1, self, d2)?;
        let mut e = self.editor();
        e.glue(d1, d2)?;
        self.rebuild(&e)
    }

    /// Cuts every bridge. Pieces are ordered by canonical code.
    pub fn decompose(&self) -> Decomposition {
        let bridges = self.bridges();
        if bridges.is_empty() {
            return Decomposition { pieces: vec![self.clone()], seams: Vec::new() };
        }
        let mut e = self.editor();
        let mut cuts = Vec::with_capacity(bridges.len());
        for &b in &bridges {
            cuts.push(e.cut(2 * b as Dart));
        }
        let (comps, owner) = e.finish_components().expect("cutting bridges keeps components valid");
        let mut pieces: Vec<(CanonicalCode, usize, Polycycle)> = comps
            .into_iter()
            .enumerate()
            .map(|(i, c)| {
                let p = Polycycle::new(c.map, c.holes, self.params.clone()).expect("bridge cut yields polycycles");
                (p.canonical_code(), i, p)
            })
            .collect();
        pieces.sort_by(|a, b| (&a.0, a.1).cmp(&(&b.0, b.1)));
        let mut rank = vec![0; pieces.len()];
        for (new, (_, old, _)) in pieces.iter().enumerate() {
            rank[*old] = new;
        }
        let seams = cuts
            .iter()
            .map(|&(n1, n2)| {
                let (ca, da) = owner[n1 as usize].unwrap();
                let (cb, db) = owner[n2 as usize].unwrap();
                Seam { a: (rank[ca], da), b: (rank[cb], db) }
            })
            .collect();
        Decomposition { pieces: pieces.into_iter().map(|(_, _, p)| p).collect(), seams }
    }

    /// Glues pieces back along recorded seams.
    pub fn reassemble(dec: &Decomposition) -> Result<Polycycle, Error> {
        let first = dec.pieces.first().ok_or(Error::EmptyPartition)?;
        let mut e = first.editor();
        let mut offsets = vec![0];
        for p in &dec.pieces[1..] {
            offsets.push(e.append(&p.editor()));
        }
        for s in &dec.seams {
            e.glue(s.a.1 + offsets[s.a.0], s.b.1 + offsets[s.b.0])?;
        }
        first.rebuild(&e)
    }
}

/// Face walk starting at a given dart.
pub(crate) fn face_from(map: &PlanarMap, d: Dart) -> Vec<Dart> {
    let face = map.face(map.face_of(d));
    let i = face.iter().position(|&x| x == d).unwrap();
    face[i..].iter().chain(&face[..i]).copied().collect()
}

/// Smallest rotation of `seq` or of its reversal.
pub fn min_cyclic(seq: &[u32]) -> Vec<u32> {
    let n = seq.len();
    let mut best: Vec<u32> = seq.to_vec();
    let mut rev: Vec<u32> = seq.to_vec();
    rev.reverse();
    for s in [seq, &rev[..]] {
        for i in 0..n {
            let cand: Vec<u32> = s[i..].iter().chain(&s[..i]).copied().collect();
            if cand < best {
                best = cand;
            }
        }
    }
    best
}

/// Whether `b` occurs in the cyclic sequence `a`, read forward or backward.
pub fn is_pattern(b: &[u32], a: &[u32]) -> bool {
    if b.len() >= a.len() {
        return false;
    }
    let n = a.len();
    let fwd = |i: usize| (0..b.len()).all(|k| a[(i + k) % n] == b[k]);
    let bwd = |i: usize| (0..b.len()).all(|k| a[(i + n - k) % n] == b[k]);
    (0..n).any(|i| fwd(i) || bwd(i))
}
