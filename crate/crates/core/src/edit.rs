//! Mutable rotation-system workspace used by every surgery operation.
//!
//! Dart ids stay stable across edits; `finish` compacts them into a fresh
//! `PlanarMap`. Each dart carries a flag telling whether the face it bounds
//! (its phi-orbit) is a hole.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::map::{Dart, MapError, PlanarMap};

const DEAD: u32 = u32::MAX;

#[derive(Clone, Debug)]
pub(crate) struct Editor {
    alpha: Vec<Dart>,
    origin: Vec<u32>,
    rot: Vec<Vec<Dart>>,
    pub(crate) hole: Vec<bool>,
}

pub(crate) struct Finished {
    pub map: PlanarMap,
    pub holes: Vec<bool>,
    /// Old dart id to new dart id.
    pub darts: Vec<Option<Dart>>,
}

pub(crate) struct Component {
    pub map: PlanarMap,
    pub holes: Vec<bool>,
}

impl Editor {
    pub fn new(map: &PlanarMap, face_is_hole: &[bool]) -> Self {
        let n = map.dart_count();
        Editor {
            alpha: (0..n as Dart).map(|d| d ^ 1).collect(),
            origin: (0..n as Dart).map(|d| map.origin(d) as u32).collect(),
            rot: map.rotations().to_vec(),
            hole: (0..n as Dart).map(|d| face_is_hole[map.face_of(d)]).collect(),
        }
    }

    /// Appends a disjoint copy of `other`; returns the dart offset.
    pub fn append(&mut self, other: &Editor) -> Dart {
        let off = self.alpha.len() as Dart;
        let voff = self.rot.len() as u32;
        self.alpha.extend(other.alpha.iter().map(|&a| if a == DEAD { DEAD } else { a + off }));
        self.origin.extend(other.origin.iter().map(|&o| if o == DEAD { DEAD } else { o + voff }));
        self.rot.extend(other.rot.iter().map(|r| r.iter().map(|&d| d + off).collect()));
        self.hole.extend_from_slice(&other.hole);
        off
    }

    /// Reverses the orientation of everything in the workspace.
    pub fn mirror(&mut self) {
        for r in &mut self.rot {
            r.reverse();
        }
        let old = self.hole.clone();
        for d in 0..self.alpha.len() {
            if self.alpha[d] != DEAD {
                self.hole[d] = old[self.alpha[d] as usize];
            }
        }
    }

    #[inline]
    pub fn alpha(&self, d: Dart) -> Dart {
        self.alpha[d as usize]
    }

    #[inline]
    pub fn origin(&self, d: Dart) -> usize {
        self.origin[d as usize] as usize
    }

    fn position(&self, d: Dart) -> (usize, usize) {
        let v = self.origin(d);
        let i = self.rot[v].iter().position(|&x| x == d).expect("dart present in its rotation");
        (v, i)
    }

    pub fn sigma(&self, d: Dart) -> Dart {
        let (v, i) = self.position(d);
        let r = &self.rot[v];
        r[(i + 1) % r.len()]
    }

    pub fn phi(&self, d: Dart) -> Dart {
        self.sigma(self.alpha(d))
    }

    /// Darts of the face containing `d`, starting at `d`.
    pub fn face_walk(&self, d: Dart) -> Vec<Dart> {
        let mut walk = vec![d];
        let mut x = self.phi(d);
        while x != d {
            walk.push(x);
            x = self.phi(x);
        }
        walk
    }

    fn new_edge(&mut self, from: usize, to: usize) -> Dart {
        let d = self.alpha.len() as Dart;
        self.alpha.push(d + 1);
        self.alpha.push(d);
        self.origin.push(from as u32);
        self.origin.push(to as u32);
        self.hole.push(false);
        self.hole.push(false);
        d
    }

    fn new_vertex(&mut self) -> usize {
        self.rot.push(Vec::new());
        self.rot.len() - 1
    }

    fn insert_before(&mut self, c: Dart, d: Dart) {
        let (v, i) = self.position(c);
        self.rot[v].insert(i, d);
    }

    /// Adds a path of `len >= 1` edges from the corner before `c_a` to the
    /// corner before `c_b`. Returns the forward darts of the path.
    pub fn connect(&mut self, c_a: Dart, c_b: Dart, len: usize) -> Vec<Dart> {
        debug_assert!(len >= 1);
        let va = self.origin(c_a);
        let vb = self.origin(c_b);
        let mut path = Vec::with_capacity(len);
        let mut prev = va;
        for k in 0..len {
            let next = if k + 1 == len { vb } else { self.new_vertex() };
            let d = self.new_edge(prev, next);
            if k == 0 {
                self.insert_before(c_a, d);
            } else {
                self.rot[prev].push(d);
            }
            if k + 1 < len {
                self.rot[next].push(d + 1);
            }
            path.push(d);
            prev = next;
        }
        let last = *path.last().unwrap();
        self.insert_before(c_b, self.alpha(last));
        // intermediate vertices must read [reverse, forward] counterclockwise
        for k in 0..len.saturating_sub(1) {
            let w = self.origin(path[k + 1]);
            self.rot[w] = vec![self.alpha(path[k]), path[k + 1]];
        }
        path
    }

    /// Identifies the vertices of `c_a` and `c_b`, splicing the two rotations
    /// at the corners before those darts.
    pub fn merge(&mut self, c_a: Dart, c_b: Dart) -> Result<(), Error> {
        let (va, ia) = self.position(c_a);
        let (vb, ib) = self.position(c_b);
        if va == vb {
            return Err(Error::BadRun("merge of a vertex with itself"));
        }
        let ra = core::mem::take(&mut self.rot[va]);
        let rb = core::mem::take(&mut self.rot[vb]);
        let mut merged = Vec::with_capacity(ra.len() + rb.len());
        merged.extend(ra[ia..].iter().chain(&ra[..ia]));
        merged.extend(rb[ib..].iter().chain(&rb[..ib]));
        for &d in &rb {
            self.origin[d as usize] = va as u32;
        }
        self.rot[va] = merged;
        Ok(())
    }

    /// Identifies two hole-side darts `d1`, `d2` of open edges so that the
    /// surviving darts `alpha(d1)` and `alpha(d2)` form a single edge.
    pub fn glue(&mut self, d1: Dart, d2: Dart) -> Result<(), Error> {
        let d1p = self.alpha(d1);
        let d2p = self.alpha(d2);
        let (x1, y1) = (self.origin(d1), self.origin(d1p));
        let (x2, y2) = (self.origin(d2), self.origin(d2p));
        if x1 == x2 || x1 == y2 || y1 == x2 || y1 == y2 {
            return Err(Error::BadRun("glued edges share a vertex"));
        }
        let after = |r: &Vec<Dart>, d: Dart| -> Vec<Dart> {
            let i = r.iter().position(|&x| x == d).unwrap();
            r[i + 1..].iter().chain(&r[..i]).copied().collect()
        };
        let mut m1 = vec![d1p];
        m1.extend(after(&self.rot[x2], d2));
        m1.extend(after(&self.rot[y1], d1p));
        let mut m2 = vec![d2p];
        m2.extend(after(&self.rot[x1], d1));
        m2.extend(after(&self.rot[y2], d2p));
        self.rot[x1].clear();
        self.rot[x2].clear();
        for &d in &m1 {
            self.origin[d as usize] = y1 as u32;
        }
        for &d in &m2 {
            self.origin[d as usize] = y2 as u32;
        }
        self.rot[y1] = m1;
        self.rot[y2] = m2;
        self.alpha[d1p as usize] = d2p;
        self.alpha[d2p as usize] = d1p;
        for d in [d1, d2] {
            self.alpha[d as usize] = DEAD;
            self.origin[d as usize] = DEAD;
        }
        Ok(())
    }

    /// Index in the rotation of `v` of the dart that follows the unique hole corner.
    fn hole_corners(&self, v: usize) -> Vec<usize> {
        let r = &self.rot[v];
        (0..r.len()).filter(|&i| self.hole[r[i] as usize]).collect()
    }

    /// Cuts the bridge containing dart `d`; each side keeps a copy of the edge.
    /// Returns the two new hole-side darts `(n1, n2)` with `alpha(d) = n1`,
    /// `alpha(alpha_old(d)) = n2`; gluing `n1` to `n2` undoes the cut.
    pub fn cut(&mut self, d: Dart) -> (Dart, Dart) {
        let dp = self.alpha(d);
        let x = self.origin(d);
        let y = self.origin(dp);
        let n1 = self.alpha.len() as Dart;
        let n2 = n1 + 1;
        self.alpha.extend([d, dp]);
        self.origin.extend([DEAD, DEAD]);
        self.hole.extend([true, true]);
        self.alpha[d as usize] = n1;
        self.alpha[dp as usize] = n2;
        for (v, keep, fresh) in [(x, d, n2), (y, dp, n1)] {
            let r = &self.rot[v];
            let i = r.iter().position(|&z| z == keep).unwrap();
            let cyc: Vec<Dart> = r[i..].iter().chain(&r[..i]).copied().collect();
            let a = (1..cyc.len()).find(|&k| self.hole[cyc[k] as usize]).expect("bridge endpoint on a hole");
            let w = self.new_vertex();
            let mut split = vec![fresh];
            split.extend_from_slice(&cyc[1..a]);
            let mut stay = vec![keep];
            stay.extend_from_slice(&cyc[a..]);
            for &z in &split {
                self.origin[z as usize] = w as u32;
            }
            self.rot[w] = split;
            self.rot[v] = stay;
        }
        (n1, n2)
    }

    /// Marks every dart of the face through `d` as hole, deletes edges with
    /// hole on both sides and splits vertices that touch holes several times.
    pub fn dissolve_face(&mut self, d: Dart) {
        for x in self.face_walk(d) {
            self.hole[x as usize] = true;
        }
        for x in 0..self.alpha.len() as Dart {
            let a = self.alpha[x as usize];
            if a != DEAD && x < a && self.hole[x as usize] && self.hole[a as usize] {
                for z in [x, a] {
                    let (v, i) = self.position(z);
                    self.rot[v].remove(i);
                    self.alpha[z as usize] = DEAD;
                    self.origin[z as usize] = DEAD;
                }
            }
        }
        for v in 0..self.rot.len() {
            let corners = self.hole_corners(v);
            if corners.len() < 2 {
                continue;
            }
            let r = core::mem::take(&mut self.rot[v]);
            for (k, &start) in corners.iter().enumerate() {
                let end = if k + 1 < corners.len() { corners[k + 1] } else { corners[0] + r.len() };
                let arc: Vec<Dart> = (start..end).map(|i| r[i % r.len()]).collect();
                let w = if k == 0 { v } else { self.new_vertex() };
                for &z in &arc {
                    self.origin[z as usize] = w as u32;
                }
                self.rot[w] = arc;
            }
        }
    }

    fn compact(&self) -> (Vec<Option<Dart>>, Vec<Vec<Dart>>) {
        let n = self.alpha.len();
        let mut new_id: Vec<Option<Dart>> = vec![None; n];
        let mut next = 0;
        for d in 0..n {
            let a = self.alpha[d];
            if a == DEAD || new_id[d].is_some() {
                continue;
            }
            new_id[d] = Some(next);
            new_id[a as usize] = Some(next + 1);
            next += 2;
        }
        let rots = self
            .rot
            .iter()
            .filter(|r| !r.is_empty())
            .map(|r| r.iter().map(|&d| new_id[d as usize].unwrap()).collect())
            .collect();
        (new_id, rots)
    }

    fn face_holes(&self, map: &PlanarMap, new_id: &[Option<Dart>]) -> Vec<bool> {
        let mut holes = vec![false; map.face_count()];
        for (old, id) in new_id.iter().enumerate() {
            if let Some(d) = id {
                if self.hole[old] {
                    holes[map.face_of(*d)] = true;
                }
            }
        }
        holes
    }

    pub fn finish(&self) -> Result<Finished, Error> {
        let (darts, rots) = self.compact();
        if rots.is_empty() {
            return Err(Error::Map(MapError::Empty));
        }
        let map = PlanarMap::from_dart_rotations(rots)?;
        let holes = self.face_holes(&map, &darts);
        Ok(Finished { map, holes, darts })
    }

    /// Splits the workspace into connected components. `owner[d]` gives the
    /// component and new dart of every surviving old dart.
    pub fn finish_components(&self) -> Result<(Vec<Component>, Vec<Option<(usize, Dart)>>), Error> {
        let n = self.alpha.len();
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        for start in 0..n {
            if self.alpha[start] == DEAD || comp[start] != usize::MAX {
                continue;
            }
            let mut stack = vec![start];
            comp[start] = count;
            while let Some(d) = stack.pop() {
                let v = self.origin[d] as usize;
                for z in self.rot[v].iter().map(|&z| z as usize).chain([self.alpha[d] as usize]) {
                    if comp[z] == usize::MAX {
                        comp[z] = count;
                        stack.push(z);
                    }
                }
            }
            count += 1;
        }
        let mut comps = Vec::with_capacity(count);
        let mut owner: Vec<Option<(usize, Dart)>> = vec![None; n];
        for c in 0..count {
            let mut sub = self.clone();
            for d in 0..n {
                if comp[d] != c && sub.alpha[d] != DEAD {
                    sub.alpha[d] = DEAD;
                }
            }
            for r in &mut sub.rot {
                if r.first().is_some_and(|&d| comp[d as usize] != c) {
                    r.clear();
                }
            }
            let fin = sub.finish()?;
            for (d, id) in fin.darts.iter().enumerate() {
                if let Some(id) = id {
                    owner[d] = Some((c, *id));
                }
            }
            comps.push(Component { map: fin.map, holes: fin.holes });
        }
        Ok((comps, owner))
    }
}
