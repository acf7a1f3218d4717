//! Sphere maps stored as rotation systems over darts.
//!
//! Edge `k` owns darts `2k` and `2k + 1`; `alpha` is the fixed-point-free
//! involution `d ^ 1`. `sigma` gives the counterclockwise successor of a dart
//! around its origin vertex, and faces are the orbits of `phi = sigma . alpha`.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use thiserror::Error;

/// One directed side of an edge.
pub type Dart = u32;

/// Opposite dart of the same edge.
#[inline]
pub fn alpha(d: Dart) -> Dart {
    d ^ 1
}

/// Edge owning a dart.
#[inline]
pub fn edge_of(d: Dart) -> usize {
    (d >> 1) as usize
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("edge {edge} is referenced {count} times (expected exactly 2 edge-ends)")]
    NonInvolutiveAlpha { edge: usize, count: usize },
    #[error("edge {edge} is listed at vertex {vertex} but does not end there")]
    ForeignEdgeEnd { edge: usize, vertex: usize },
    #[error("map is disconnected")]
    Disconnected,
    #[error("edge {edge} is a loop bounding a 1-gon")]
    LoopEdge { edge: usize },
    #[error("rotation data is not a permutation of the darts")]
    NotAPermutation,
    #[error("map has no edges")]
    Empty,
}

/// Connected map on an orientable surface (normally the sphere).
#[derive(Clone)]
pub struct PlanarMap {
    sigma: Vec<Dart>,
    sigma_inv: Vec<Dart>,
    origin: Vec<u32>,
    rotations: Vec<Vec<Dart>>,
    face_of: Vec<u32>,
    faces: Vec<Vec<Dart>>,
}

impl fmt::Debug for PlanarMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PlanarMap")
            .field("vertices", &self.vertex_count())
            .field("edges", &self.edge_count())
            .field("faces", &self.face_count())
            .field("rotations", &self.rotations)
            .finish()
    }
}

impl PlanarMap {
    /// Builds a map from per-vertex counterclockwise lists of incident edge ids.
    ///
    /// `edges[k] = [u, v]`; dart `2k` leaves `u` and dart `2k + 1` leaves `v`.
    /// Parallel edges are distinguished by id.
    pub fn from_rotations(edges: &[[u32; 2]], rotations: &[Vec<u32>]) -> Result<Self, MapError> {
        if edges.is_empty() {
            return Err(MapError::Empty);
        }
        let mut refs = vec![0usize; edges.len()];
        for rot in rotations {
            for &e in rot {
                let e = e as usize;
                if e >= edges.len() {
                    return Err(MapError::NonInvolutiveAlpha { edge: e, count: 1 });
                }
                refs[e] += 1;
            }
        }
        if let Some((edge, &count)) = refs.iter().enumerate().find(|(_, &c)| c != 2) {
            return Err(MapError::NonInvolutiveAlpha { edge, count });
        }
        let n = 2 * edges.len();
        let mut used = vec![false; n];
        let mut dart_rots = Vec::with_capacity(rotations.len());
        for (v, rot) in rotations.iter().enumerate() {
            let mut darts = Vec::with_capacity(rot.len());
            for &e in rot {
                let [a, b] = edges[e as usize];
                let cand = if a as usize == v && !used[2 * e as usize] {
                    2 * e
                } else if b as usize == v && !used[2 * e as usize + 1] {
                    2 * e + 1
                } else {
                    return Err(MapError::ForeignEdgeEnd { edge: e as usize, vertex: v });
                };
                used[cand as usize] = true;
                darts.push(cand);
            }
            dart_rots.push(darts);
        }
        Self::from_dart_rotations(dart_rots)
    }

    /// Builds a map from a permutation `sigma` of darts `0..2E`; vertices are
    /// numbered by their smallest dart.
    pub fn from_sigma(sigma: &[Dart]) -> Result<Self, MapError> {
        let n = sigma.len();
        if n == 0 || n % 2 == 1 {
            return Err(if n == 0 { MapError::Empty } else { MapError::NotAPermutation });
        }
        let mut seen = vec![false; n];
        let mut rots = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut d = start;
            while !seen[d] {
                seen[d] = true;
                orbit.push(d as Dart);
                d = sigma[d] as usize;
                if d >= n {
                    return Err(MapError::NotAPermutation);
                }
            }
            if d != start {
                return Err(MapError::NotAPermutation);
            }
            rots.push(orbit);
        }
        Self::from_dart_rotations(rots)
    }

    /// Builds a map from explicit dart rotations; vertex `v` gets `rots[v]`.
    pub fn from_dart_rotations(rots: Vec<Vec<Dart>>) -> Result<Self, MapError> {
        let n: usize = rots.iter().map(Vec::len).sum();
        if n == 0 {
            return Err(MapError::Empty);
        }
        if n % 2 == 1 {
            return Err(MapError::NotAPermutation);
        }
        let mut sigma = vec![u32::MAX; n];
        let mut origin = vec![u32::MAX; n];
        for (v, rot) in rots.iter().enumerate() {
            for (i, &d) in rot.iter().enumerate() {
                let d = d as usize;
                if d >= n || sigma[d] != u32::MAX {
                    return Err(MapError::NotAPermutation);
                }
                sigma[d] = rot[(i + 1) % rot.len()];
                origin[d] = v as u32;
            }
        }
        let mut sigma_inv = vec![0; n];
        for (d, &s) in sigma.iter().enumerate() {
            sigma_inv[s as usize] = d as Dart;
        }
        let mut face_of = vec![u32::MAX; n];
        let mut faces = Vec::new();
        for start in 0..n {
            if face_of[start] != u32::MAX {
                continue;
            }
            let id = faces.len() as u32;
            let mut walk = Vec::new();
            let mut d = start as Dart;
            while face_of[d as usize] == u32::MAX {
                face_of[d as usize] = id;
                walk.push(d);
                d = sigma[alpha(d) as usize];
            }
            faces.push(walk);
        }
        for face in &faces {
            if face.len() == 1 {
                return Err(MapError::LoopEdge { edge: edge_of(face[0]) });
            }
        }
        let map = PlanarMap { sigma, sigma_inv, origin, rotations: rots, face_of, faces };
        if !map.is_connected() {
            return Err(MapError::Disconnected);
        }
        Ok(map)
    }

    fn is_connected(&self) -> bool {
        let n = self.dart_count();
        let mut seen = vec![false; n];
        let mut stack = vec![0 as Dart];
        seen[0] = true;
        let mut count = 1;
        while let Some(d) = stack.pop() {
            for nb in [self.sigma[d as usize], alpha(d)] {
                if !seen[nb as usize] {
                    seen[nb as usize] = true;
                    count += 1;
                    stack.push(nb);
                }
            }
        }
        count == n
    }

    pub fn dart_count(&self) -> usize {
        self.sigma.len()
    }

    pub fn edge_count(&self) -> usize {
        self.sigma.len() / 2
    }

    pub fn vertex_count(&self) -> usize {
        self.rotations.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    #[inline]
    pub fn sigma(&self, d: Dart) -> Dart {
        self.sigma[d as usize]
    }

    #[inline]
    pub fn sigma_inv(&self, d: Dart) -> Dart {
        self.sigma_inv[d as usize]
    }

    /// Face successor `sigma(alpha(d))`.
    #[inline]
    pub fn phi(&self, d: Dart) -> Dart {
        self.sigma[alpha(d) as usize]
    }

    #[inline]
    pub fn origin(&self, d: Dart) -> usize {
        self.origin[d as usize] as usize
    }

    #[inline]
    pub fn head(&self, d: Dart) -> usize {
        self.origin[alpha(d) as usize] as usize
    }

    #[inline]
    pub fn face_of(&self, d: Dart) -> usize {
        self.face_of[d as usize] as usize
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotations[v].len()
    }

    /// Darts leaving `v` in counterclockwise order.
    pub fn rotation(&self, v: usize) -> &[Dart] {
        &self.rotations[v]
    }

    pub fn rotations(&self) -> &[Vec<Dart>] {
        &self.rotations
    }

    /// Face orbits in discovery order (scanning darts ascending); each walk
    /// starts at the face's smallest dart.
    pub fn faces(&self) -> &[Vec<Dart>] {
        &self.faces
    }

    pub fn face(&self, f: usize) -> &[Dart] {
        &self.faces[f]
    }

    /// Endpoints of edge `e` as `[origin(2e), origin(2e+1)]`.
    pub fn edge_ends(&self, e: usize) -> [usize; 2] {
        [self.origin(2 * e as Dart), self.origin(2 * e as Dart + 1)]
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64 + self.face_count() as i64
    }

    /// True iff the rotation system embeds the graph in the sphere.
    pub fn euler_genus_check(&self) -> bool {
        self.euler_characteristic() == 2
    }

    /// Same graph with every rotation reversed.
    pub fn mirrored(&self) -> PlanarMap {
        let rots = self
            .rotations
            .iter()
            .map(|r| {
                let mut r = r.clone();
                r.reverse();
                r
            })
            .collect();
        PlanarMap::from_dart_rotations(rots).expect("mirror of a valid map is valid")
    }

    /// Face id that corresponds, in the mirror image, to the face of dart `d`.
    #[inline]
    fn mirror_face(&self, d: Dart) -> usize {
        self.face_of(alpha(d))
    }

    /// Lexicographic-minimum traversal code over all start flags, using the
    /// caller-supplied per-face keys.
    pub fn canonical_code(&self, face_keys: &[u32]) -> CanonicalCode {
        let search = self.search(face_keys, false);
        CanonicalCode::from_words(&search.best)
    }

    /// All label-preserving automorphisms, including orientation-reversing ones.
    pub fn automorphisms(&self, face_keys: &[u32]) -> Vec<Automorphism> {
        self.search(face_keys, true).automorphisms
    }

    fn start_invariant(&self, d: Dart, reversed: bool, face_keys: &[u32]) -> [u32; 5] {
        let (own, other) =
            if reversed { (self.mirror_face(d), self.face_of(d)) } else { (self.face_of(d), self.mirror_face(d)) };
        [
            face_keys[own],
            self.faces[own].len() as u32,
            face_keys[other],
            self.faces[other].len() as u32,
            self.degree(self.origin(d)) as u32 * 1024 + self.degree(self.head(d)) as u32,
        ]
    }

    fn search(&self, face_keys: &[u32], want_automorphisms: bool) -> Search {
        assert_eq!(face_keys.len(), self.face_count(), "one key per face");
        let n = self.dart_count();
        let mut starts: Vec<(Dart, bool)> = Vec::new();
        let mut best_inv = [u32::MAX; 5];
        for d in 0..n as Dart {
            for reversed in [false, true] {
                let inv = self.start_invariant(d, reversed, face_keys);
                match inv.cmp(&best_inv) {
                    Ordering::Less => {
                        best_inv = inv;
                        starts.clear();
                        starts.push((d, reversed));
                    }
                    Ordering::Equal => starts.push((d, reversed)),
                    Ordering::Greater => {}
                }
            }
        }
        let mut scratch = Traversal::new(n);
        let mut best: Vec<u32> = Vec::new();
        let mut hits: Vec<(Dart, bool)> = Vec::new();
        for &(s, rev) in &starts {
            match scratch.run(self, s, rev, face_keys, &best) {
                Ordering::Less => {
                    best.clear();
                    best.extend_from_slice(&scratch.code);
                    hits.clear();
                    hits.push((s, rev));
                }
                Ordering::Equal => hits.push((s, rev)),
                Ordering::Greater => {}
            }
        }
        let mut automorphisms = Vec::new();
        if want_automorphisms {
            let (s0, r0) = hits[0];
            scratch.run(self, s0, r0, face_keys, &[]);
            let reference = scratch.order.clone();
            for &(s, rev) in &hits {
                scratch.run(self, s, rev, face_keys, &[]);
                let mut perm = vec![0 as Dart; n];
                for (k, &x) in reference.iter().enumerate() {
                    perm[x as usize] = scratch.order[k];
                }
                automorphisms.push(Automorphism { darts: perm, reversing: rev != r0 });
            }
            automorphisms.sort_by(|a, b| (a.reversing, &a.darts).cmp(&(b.reversing, &b.darts)));
        }
        Search { best, first_hit: hits[0], automorphisms }
    }
}

impl PlanarMap {
    /// Relabels darts, edges and vertices in the breadth-first order of the
    /// canonical start. Returns the new map, the old-to-new dart table and
    /// whether the orientation was reversed.
    pub fn canonical_relabel(&self, face_keys: &[u32]) -> (PlanarMap, Vec<Dart>, bool) {
        let search = self.search(face_keys, false);
        let (start, reversed) = search.first_hit;
        let mut t = Traversal::new(self.dart_count());
        t.run(self, start, reversed, face_keys, &[]);
        let n = self.dart_count();
        let mut new_id = vec![u32::MAX; n];
        let mut next = 0;
        for &x in &t.order {
            if new_id[x as usize] == u32::MAX {
                new_id[x as usize] = next;
                new_id[alpha(x) as usize] = next + 1;
                next += 2;
            }
        }
        let mut seen_vertex = vec![false; self.vertex_count()];
        let mut rots = Vec::with_capacity(self.vertex_count());
        for &x in &t.order {
            let v = self.origin(x);
            if seen_vertex[v] {
                continue;
            }
            seen_vertex[v] = true;
            let mut rot = Vec::with_capacity(self.degree(v));
            let mut y = x;
            loop {
                rot.push(new_id[y as usize]);
                y = if reversed { self.sigma_inv(y) } else { self.sigma(y) };
                if y == x {
                    break;
                }
            }
            rots.push(rot);
        }
        let map = PlanarMap::from_dart_rotations(rots).expect("relabeling preserves validity");
        (map, new_id, reversed)
    }
}

struct Search {
    best: Vec<u32>,
    first_hit: (Dart, bool),
    automorphisms: Vec<Automorphism>,
}

struct Traversal {
    num: Vec<u32>,
    order: Vec<Dart>,
    code: Vec<u32>,
}

impl Traversal {
    fn new(n: usize) -> Self {
        Traversal { num: vec![u32::MAX; n], order: Vec::with_capacity(n), code: Vec::with_capacity(3 * n) }
    }

    /// Breadth-first numbering from `(start, reversed)`. Compares against
    /// `bound` on the fly and stops early once the code is known to be larger.
    fn run(&mut self, map: &PlanarMap, start: Dart, reversed: bool, keys: &[u32], bound: &[u32]) -> Ordering {
        self.num.iter_mut().for_each(|x| *x = u32::MAX);
        self.order.clear();
        self.code.clear();
        self.num[start as usize] = 0;
        self.order.push(start);
        let mut head = 0;
        let mut state = if bound.is_empty() { Ordering::Less } else { Ordering::Equal };
        while head < self.order.len() {
            let x = self.order[head];
            head += 1;
            let rot = if reversed { map.sigma_inv(x) } else { map.sigma(x) };
            for y in [rot, alpha(x)] {
                if self.num[y as usize] == u32::MAX {
                    self.num[y as usize] = self.order.len() as u32;
                    self.order.push(y);
                }
            }
            let face = if reversed { map.mirror_face(x) } else { map.face_of(x) };
            let entry = [self.num[rot as usize], self.num[alpha(x) as usize], keys[face]];
            if state == Ordering::Equal {
                let base = self.code.len();
                for (k, &w) in entry.iter().enumerate() {
                    match w.cmp(&bound[base + k]) {
                        Ordering::Equal => continue,
                        other => {
                            state = other;
                            break;
                        }
                    }
                }
                if state == Ordering::Greater {
                    return Ordering::Greater;
                }
            }
            self.code.extend_from_slice(&entry);
        }
        state
    }
}

/// Dart permutation of a map automorphism; `reversing` marks orientation reversal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Automorphism {
    pub darts: Vec<Dart>,
    pub reversing: bool,
}

impl Automorphism {
    pub fn identity(n: usize) -> Self {
        Automorphism { darts: (0..n as Dart).collect(), reversing: false }
    }

    pub fn is_identity(&self) -> bool {
        !self.reversing && self.darts.iter().enumerate().all(|(i, &d)| i as Dart == d)
    }

    /// `self` after `other`: x -> self(other(x)).
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        Automorphism {
            darts: other.darts.iter().map(|&d| self.darts[d as usize]).collect(),
            reversing: self.reversing != other.reversing,
        }
    }

    pub fn inverse(&self) -> Automorphism {
        let mut inv = vec![0; self.darts.len()];
        for (i, &d) in self.darts.iter().enumerate() {
            inv[d as usize] = i as Dart;
        }
        Automorphism { darts: inv, reversing: self.reversing }
    }

    pub fn order(&self) -> usize {
        let mut power = self.clone();
        let mut k = 1;
        while !power.is_identity() {
            power = self.compose(&power);
            k += 1;
        }
        k
    }
}

/// Isomorphism-invariant identifier of a labeled map.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    fn from_words(words: &[u32]) -> Self {
        let mut bytes = Vec::with_capacity(words.len() * 2);
        let wide = words.iter().any(|&w| w > u16::MAX as u32);
        bytes.push(u8::from(wide));
        for &w in words {
            if wide {
                bytes.extend_from_slice(&w.to_be_bytes());
            } else {
                bytes.extend_from_slice(&(w as u16).to_be_bytes());
            }
        }
        CanonicalCode(bytes)
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn from_bytes(bytes: Vec<u8>) -> Self {
        CanonicalCode(bytes)
    }

    /// Lowercase hex rendering.
    pub fn to_hex(&self) -> alloc::string::String {
        use core::fmt::Write;
        let mut s = alloc::string::String::with_capacity(self.0.len() * 2);
        for b in &self.0 {
            let _ = write!(s, "{b:02x}");
        }
        s
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let hex = self.to_hex();
        if hex.len() > 24 {
            write!(f, "CanonicalCode({}..{} bytes)", &hex[..24], self.0.len())
        } else {
            write!(f, "CanonicalCode({hex})")
        }
    }
}

/// Breadth-first vertex order starting from `v`, used by a few callers that
/// need graph distances.
pub fn bfs_vertices(map: &PlanarMap, v: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; map.vertex_count()];
    let mut queue = VecDeque::new();
    dist[v] = 0;
    queue.push_back(v);
    while let Some(u) = queue.pop_front() {
        for &d in map.rotation(u) {
            let w = map.head(d);
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Assembles a map from oriented face boundaries given as vertex cycles.
///
/// Each step `(v, tag)` of a face goes from `v` to the next vertex of the
/// cycle along the edge keyed by `tag`; parallel edges use distinct tags.
/// Every edge must be traversed once in each direction.
pub struct FaceAssembler {
    vertex_count: usize,
    edges: Vec<[u32; 2]>,
    keys: alloc::collections::BTreeMap<(u32, u32, u32), usize>,
    next_of: Vec<(Dart, Dart)>,
    face_darts: Vec<Vec<Dart>>,
}

impl FaceAssembler {
    pub fn new(vertex_count: usize) -> Self {
        FaceAssembler {
            vertex_count,
            edges: Vec::new(),
            keys: alloc::collections::BTreeMap::new(),
            next_of: Vec::new(),
            face_darts: Vec::new(),
        }
    }

    fn dart(&mut self, u: u32, v: u32, tag: u32) -> Dart {
        let key = (u.min(v), u.max(v), tag);
        let e = match self.keys.get(&key) {
            Some(&e) => e,
            None => {
                self.edges.push([u, v]);
                self.keys.insert(key, self.edges.len() - 1);
                self.edges.len() - 1
            }
        };
        let [a, _] = self.edges[e];
        if a == u && u != v {
            2 * e as Dart
        } else {
            2 * e as Dart + 1
        }
    }

    /// Adds a face; returns its index in insertion order.
    pub fn face(&mut self, cycle: &[u32]) -> usize {
        let tagged: Vec<(u32, u32)> = cycle.iter().map(|&v| (v, 0)).collect();
        self.tagged_face(&tagged)
    }

    pub fn tagged_face(&mut self, cycle: &[(u32, u32)]) -> usize {
        let k = cycle.len();
        let darts: Vec<Dart> = (0..k)
            .map(|i| {
                let (u, tag) = cycle[i];
                let (v, _) = cycle[(i + 1) % k];
                self.dart(u, v, tag)
            })
            .collect();
        for i in 0..k {
            self.next_of.push((darts[i], darts[(i + 1) % k]));
        }
        self.face_darts.push(darts);
        self.face_darts.len() - 1
    }

    /// Finishes the map. The returned vector gives, for each added face in
    /// insertion order, the id of the corresponding face of the map.
    pub fn finish(self) -> Result<(PlanarMap, Vec<usize>), MapError> {
        let n = 2 * self.edges.len();
        let mut sigma = vec![u32::MAX; n];
        for &(d, next) in &self.next_of {
            let a = alpha(d) as usize;
            if a >= n || sigma[a] != u32::MAX {
                return Err(MapError::NotAPermutation);
            }
            sigma[a] = next;
        }
        if sigma.contains(&u32::MAX) {
            return Err(MapError::NotAPermutation);
        }
        let mut rots: Vec<Vec<Dart>> = vec![Vec::new(); self.vertex_count];
        let mut seen = vec![false; n];
        for (e, &[u, v]) in self.edges.iter().enumerate() {
            for (d, vertex) in [(2 * e, u), (2 * e + 1, v)] {
                if seen[d] {
                    continue;
                }
                let mut orbit = Vec::new();
                let mut x = d;
                while !seen[x] {
                    seen[x] = true;
                    orbit.push(x as Dart);
                    x = sigma[x] as usize;
                }
                let slot = &mut rots[vertex as usize];
                if !slot.is_empty() {
                    return Err(MapError::NotAPermutation);
                }
                *slot = orbit;
            }
        }
        if rots.iter().any(Vec::is_empty) {
            return Err(MapError::Disconnected);
        }
        let map = PlanarMap::from_dart_rotations(rots)?;
        let ids = self.face_darts.iter().map(|darts| map.face_of(darts[0])).collect();
        Ok((map, ids))
    }
}
