//! JSON interchange, planar_code export and DOT output.

use std::collections::BTreeMap;

use polycycle_core::{Params, PlanarMap, Polycycle};
use serde::{Deserialize, Serialize};

use crate::Error;

pub const FORMAT_TAG: &str = "polycycle-json/1";

/// Catalog metadata carried by files written by `enumerate`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryInfo {
    pub aut_g: usize,
    pub aut_p: usize,
    pub extensible: bool,
    pub family: String,
    pub index: usize,
    pub sporadic: bool,
}

/// On-disk form of a polycycle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolycycleDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub catalog: Option<EntryInfo>,
    pub edges: Vec<[u32; 2]>,
    pub format: String,
    pub holes: Vec<usize>,
    pub q: u32,
    #[serde(rename = "R")]
    pub r: Vec<u32>,
    pub rotations: Vec<Vec<u32>>,
    pub vertex_count: usize,
}

impl PolycycleDocument {
    pub fn from_polycycle(p: &Polycycle) -> Self {
        let map = p.map();
        PolycycleDocument {
            catalog: None,
            edges: (0..map.edge_count()).map(|e| map.edge_ends(e).map(|v| v as u32)).collect(),
            format: FORMAT_TAG.to_string(),
            holes: p.holes().collect(),
            q: p.params().q(),
            r: p.params().sizes().to_vec(),
            rotations: map.rotations().iter().map(|r| r.iter().map(|&d| d / 2).collect()).collect(),
            vertex_count: map.vertex_count(),
        }
    }

    pub fn to_polycycle(&self) -> Result<Polycycle, Error> {
        if self.format != FORMAT_TAG {
            return Err(Error::UnknownFormatTag(self.format.clone()));
        }
        if self.rotations.len() != self.vertex_count {
            return Err(Error::Parse(format!(
                "vertex_count is {} but {} rotations are given",
                self.vertex_count,
                self.rotations.len()
            )));
        }
        if let Some(&[u, v]) = self.edges.iter().find(|e| e.iter().any(|&x| x as usize >= self.vertex_count)) {
            return Err(Error::Parse(format!("edge [{u},{v}] names a missing vertex")));
        }
        let params = Params::new(self.r.iter().copied(), self.q)?;
        let map = PlanarMap::from_rotations(&self.edges, &self.rotations).map_err(polycycle_core::Error::from)?;
        let mut flags = vec![false; map.face_count()];
        for &h in &self.holes {
            *flags.get_mut(h).ok_or_else(|| Error::Parse(format!("hole {h} is not a face")))? = true;
        }
        Ok(Polycycle::new(map, flags, params)?)
    }
}

pub fn write_json(p: &Polycycle) -> Vec<u8> {
    document_bytes(&PolycycleDocument::from_polycycle(p))
}

pub fn document_bytes(doc: &PolycycleDocument) -> Vec<u8> {
    // Going through `Value` sorts the keys.
    let value = serde_json::to_value(doc).expect("documents always serialize");
    let mut out = serde_json::to_vec(&value).expect("values always serialize");
    out.push(b'\n');
    out
}

pub fn read_document(bytes: &[u8]) -> Result<PolycycleDocument, Error> {
    serde_json::from_slice(bytes).map_err(|e| Error::Parse(e.to_string()))
}

/// Parses and fully validates a document.
pub fn read_json(bytes: &[u8]) -> Result<Polycycle, Error> {
    read_document(bytes)?.to_polycycle()
}

/// Underlying graph in plantri's planar_code: a header, then the vertex count
/// and, per vertex, its neighbours (1-based) in clockwise order starting from
/// the smallest, each list closed by 0. Holes are not recorded.
pub fn write_planar_code(p: &Polycycle) -> Result<Vec<u8>, Error> {
    let map = p.map();
    let n = map.vertex_count();
    if n > 255 {
        return Err(Error::TooLarge(n));
    }
    let mut out = b">>planar_code<<".to_vec();
    out.push(n as u8);
    for v in 0..n {
        let mut nb: Vec<u8> = map.rotation(v).iter().rev().map(|&d| map.head(d) as u8 + 1).collect();
        let start = (0..nb.len()).min_by_key(|&i| nb[i]).unwrap_or(0);
        nb.rotate_left(start);
        out.extend(nb);
        out.push(0);
    }
    Ok(out)
}

/// Neighbour lists (0-based) decoded from a single-graph planar_code buffer.
pub fn read_planar_code(bytes: &[u8]) -> Result<Vec<Vec<usize>>, Error> {
    let body = bytes
        .strip_prefix(b">>planar_code<<".as_slice())
        .ok_or_else(|| Error::Parse("missing planar_code header".into()))?;
    let (&n, mut rest) = body.split_first().ok_or_else(|| Error::Parse("empty planar_code body".into()))?;
    let mut adj = Vec::with_capacity(n as usize);
    for _ in 0..n {
        let end = rest.iter().position(|&b| b == 0).ok_or_else(|| Error::Parse("unterminated record".into()))?;
        adj.push(rest[..end].iter().map(|&b| b as usize - 1).collect());
        rest = &rest[end + 1..];
    }
    Ok(adj)
}

/// Undirected DOT graph; hole-boundary edges are bold.
pub fn write_dot(p: &Polycycle) -> String {
    let map = p.map();
    let mut s = String::from("graph polycycle {\n  node [shape=circle];\n");
    for v in 0..map.vertex_count() {
        s.push_str(&format!("  {v};\n"));
    }
    for e in 0..map.edge_count() {
        let [u, v] = map.edge_ends(e);
        let style = if p.is_hole_dart(2 * e as u32) || p.is_hole_dart(2 * e as u32 + 1) { " [style=bold]" } else { "" };
        s.push_str(&format!("  {u} -- {v}{style};\n"));
    }
    s.push_str("}\n");
    s
}

/// Degree histogram used by tests and the `validate` report.
pub fn degree_histogram(p: &Polycycle) -> BTreeMap<usize, usize> {
    let map = p.map();
    let mut h = BTreeMap::new();
    for v in 0..map.vertex_count() {
        *h.entry(map.degree(v)).or_insert(0) += 1;
    }
    h
}
