//! SVG drawings from a Tutte embedding.
//!
//! The longest hole is pinned to a regular polygon and every other vertex
//! sits at the average of its neighbours. Parallel edges become symmetric
//! quadratic arcs.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt::Write;

use polycycle_core::Polycycle;

use crate::Error;

#[derive(Debug, Clone, PartialEq)]
pub struct RenderOptions {
    /// Width and height of the square canvas.
    pub size: f64,
    pub vertex_labels: bool,
    pub face_fill: String,
    pub hole_fill: String,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions { size: 400.0, vertex_labels: false, face_fill: "#f3e6b3".into(), hole_fill: "#d0d0d0".into() }
    }
}

const TOLERANCE: f64 = 1e-9;
const MAX_SWEEPS: usize = 200_000;

fn round6(x: f64) -> f64 {
    let r = (x * 1e6).round() / 1e6;
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

/// The hole drawn as the outside: the longest, lowest id on ties.
fn outer_hole(p: &Polycycle) -> Option<usize> {
    p.holes().max_by_key(|&h| (p.map().face(h).len(), std::cmp::Reverse(h)))
}

/// Vertex positions in the unit disc, rounded to 6 decimals.
pub fn tutte_embedding(p: &Polycycle) -> Result<Vec<[f64; 2]>, Error> {
    let map = p.map();
    let n = map.vertex_count();
    let outer = outer_hole(p).ok_or(Error::DegenerateBoundary(0))?;
    let walk = map.face(outer);
    let k = walk.len();
    let mut pos = vec![[0.0f64; 2]; n];
    let mut pinned = vec![false; n];
    for (i, &d) in walk.iter().enumerate() {
        // Clockwise along the hole walk so the proper faces come out counterclockwise.
        let t = PI / 2.0 - 2.0 * PI * i as f64 / k as f64;
        pos[map.origin(d)] = [t.cos(), t.sin()];
        pinned[map.origin(d)] = true;
    }
    if k < 3 && pinned.iter().any(|&x| !x) {
        return Err(Error::DegenerateBoundary(k));
    }
    for _ in 0..MAX_SWEEPS {
        let mut delta = 0.0f64;
        for v in 0..n {
            if pinned[v] {
                continue;
            }
            let rot = map.rotation(v);
            let mut s = [0.0, 0.0];
            for &d in rot {
                let w = pos[map.head(d)];
                s[0] += w[0];
                s[1] += w[1];
            }
            let new = [s[0] / rot.len() as f64, s[1] / rot.len() as f64];
            delta = delta.max((new[0] - pos[v][0]).abs()).max((new[1] - pos[v][1]).abs());
            pos[v] = new;
        }
        if delta < TOLERANCE {
            break;
        }
    }
    Ok(pos.into_iter().map(|[x, y]| [round6(x), round6(y)]).collect())
}

/// Control point per edge: `None` for a straight segment.
fn edge_controls(p: &Polycycle, pos: &[[f64; 2]]) -> Vec<Option<[f64; 2]>> {
    let map = p.map();
    let mut groups: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for e in 0..map.edge_count() {
        let [u, v] = map.edge_ends(e);
        groups.entry((u.min(v), u.max(v))).or_default().push(e);
    }
    let mut out = vec![None; map.edge_count()];
    for ((u, v), es) in groups {
        if es.len() < 2 {
            continue;
        }
        let (a, b) = (pos[u], pos[v]);
        let mid = [(a[0] + b[0]) / 2.0, (a[1] + b[1]) / 2.0];
        let len = ((b[0] - a[0]).powi(2) + (b[1] - a[1]).powi(2)).sqrt().max(1e-9);
        let normal = [-(b[1] - a[1]) / len, (b[0] - a[0]) / len];
        let m = es.len() as f64;
        for (i, &e) in es.iter().enumerate() {
            let off = (i as f64 - (m - 1.0) / 2.0) * len * 0.6;
            out[e] = Some([round6(mid[0] + normal[0] * off), round6(mid[1] + normal[1] * off)]);
        }
    }
    out
}

pub fn render_svg(p: &Polycycle, opts: &RenderOptions) -> Result<String, Error> {
    let pos = tutte_embedding(p)?;
    let ctrl = edge_controls(p, &pos);
    let map = p.map();
    let half = opts.size / 2.0;
    let scale = half * 0.9;
    let xy = |c: [f64; 2]| (round6(half + c[0] * scale), round6(half - c[1] * scale));
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{0}" height="{0}" viewBox="0 0 {0} {0}">"#,
        opts.size
    );
    let outer = outer_hole(p);
    for f in 0..map.face_count() {
        if Some(f) == outer {
            continue;
        }
        let walk = map.face(f);
        let (x0, y0) = xy(pos[map.origin(walk[0])]);
        let mut d = format!("M {x0} {y0}");
        for &dart in walk {
            let (x, y) = xy(pos[map.head(dart)]);
            match ctrl[dart as usize / 2] {
                Some(c) => {
                    let (cx, cy) = xy(c);
                    let _ = write!(d, " Q {cx} {cy} {x} {y}");
                }
                None => {
                    let _ = write!(d, " L {x} {y}");
                }
            }
        }
        let fill = if p.is_hole(f) { &opts.hole_fill } else { &opts.face_fill };
        let _ = writeln!(s, r#"  <path d="{d} Z" fill="{fill}" stroke="none"/>"#);
    }
    for e in 0..map.edge_count() {
        let [u, v] = map.edge_ends(e);
        let ((x1, y1), (x2, y2)) = (xy(pos[u]), xy(pos[v]));
        let width = if p.is_hole_dart(2 * e as u32) || p.is_hole_dart(2 * e as u32 + 1) { 2 } else { 1 };
        match ctrl[e] {
            Some(c) => {
                let (cx, cy) = xy(c);
                let _ = writeln!(
                    s,
                    r#"  <path d="M {x1} {y1} Q {cx} {cy} {x2} {y2}" fill="none" stroke="black" stroke-width="{width}"/>"#
                );
            }
            None => {
                let _ = writeln!(
                    s,
                    r#"  <line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="black" stroke-width="{width}"/>"#
                );
            }
        }
    }
    for (v, &c) in pos.iter().enumerate() {
        let (x, y) = xy(c);
        let _ = writeln!(s, r#"  <circle cx="{x}" cy="{y}" r="3" fill="black"/>"#);
        if opts.vertex_labels {
            let _ = writeln!(s, r#"  <text x="{}" y="{}" font-size="10">{v}</text>"#, round6(x + 4.0), round6(y - 4.0));
        }
    }
    s.push_str("</svg>\n");
    Ok(s)
}
