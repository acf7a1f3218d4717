use polycycle::io::{self, PolycycleDocument};
use polycycle::render::{render_svg, tutte_embedding, RenderOptions};
use polycycle::Error;
use polycycle_core::enumerate::{enumerate_elementary, Sequential, Task};
use polycycle_core::families::{barrel, monocycle, snub_antiprism};
use polycycle_core::map::FaceAssembler;
use polycycle_core::{Params, PlanarMap, Polycycle};

fn entries() -> Vec<Polycycle> {
    let mut out = Vec::new();
    for (r, q, max) in [(vec![2, 3, 4, 5], 3, 8), (vec![2, 3], 4, 20), (vec![2, 3], 5, 14)] {
        let task = Task::new(Params::new(r, q).unwrap(), max);
        out.extend(enumerate_elementary(&task, &Sequential).unwrap());
    }
    out
}

#[test]
fn digon_document() {
    let doc = PolycycleDocument::from_polycycle(&monocycle(2).unwrap());
    assert_eq!(doc.vertex_count, 2);
    assert_eq!(doc.edges.len(), 2);
    assert_eq!(doc.rotations, vec![vec![0, 1], vec![0, 1]]);
    assert_eq!(doc.holes, vec![1]);
}

#[test]
fn json_round_trip_is_stable() {
    for p in entries() {
        let bytes = io::write_json(&p);
        let back = io::read_json(&bytes).unwrap();
        assert_eq!(back.canonical_code(), p.canonical_code());
        assert_eq!(io::write_json(&back), bytes);
    }
}

#[test]
fn keys_are_sorted() {
    let text = String::from_utf8(io::write_json(&barrel(2).unwrap())).unwrap();
    let keys = ["\"R\"", "\"edges\"", "\"format\"", "\"holes\"", "\"q\"", "\"rotations\"", "\"vertex_count\""];
    let at: Vec<usize> = keys.iter().map(|k| text.find(k).unwrap()).collect();
    assert!(at.windows(2).all(|w| w[0] < w[1]), "{text}");
}

#[test]
fn touching_holes_are_rejected_on_read() {
    let mut fa = FaceAssembler::new(2);
    fa.tagged_face(&[(0, 2), (1, 5)]);
    fa.tagged_face(&[(1, 2), (0, 1)]);
    fa.tagged_face(&[(1, 1), (0, 0)]);
    fa.tagged_face(&[(0, 5), (1, 4)]);
    fa.tagged_face(&[(0, 4), (1, 3)]);
    fa.tagged_face(&[(0, 3), (1, 0)]);
    let (map, ids) = fa.finish().unwrap();
    let doc = PolycycleDocument {
        catalog: None,
        edges: (0..map.edge_count()).map(|e| map.edge_ends(e).map(|v| v as u32)).collect(),
        format: io::FORMAT_TAG.into(),
        holes: vec![ids[0], ids[5]],
        q: 6,
        r: vec![2],
        rotations: map.rotations().iter().map(|r| r.iter().map(|d| d / 2).collect()).collect(),
        vertex_count: 2,
    };
    let err = io::read_json(&io::document_bytes(&doc)).unwrap_err();
    assert!(matches!(err, Error::Validation(polycycle_core::Error::HolesShareVertex { .. })), "{err}");
}

#[test]
fn malformed_documents() {
    assert!(matches!(io::read_json(b"{not json"), Err(Error::Parse(_))));
    let mut doc = PolycycleDocument::from_polycycle(&monocycle(3).unwrap());
    doc.format = "polycycle-json/9".into();
    assert!(matches!(io::read_json(&io::document_bytes(&doc)), Err(Error::UnknownFormatTag(_))));
    let mut doc = PolycycleDocument::from_polycycle(&monocycle(3).unwrap());
    doc.holes = vec![7];
    assert!(matches!(io::read_json(&io::document_bytes(&doc)), Err(Error::Parse(_))));
}

#[test]
fn planar_code_examples() {
    let header = b">>planar_code<<".to_vec();
    let tri = io::write_planar_code(&monocycle(3).unwrap()).unwrap();
    assert_eq!(tri, [header.clone(), vec![3, 2, 3, 0, 1, 3, 0, 1, 2, 0]].concat());
    let digon = io::write_planar_code(&monocycle(2).unwrap()).unwrap();
    assert_eq!(digon, [header, vec![2, 2, 2, 0, 1, 1, 0]].concat());
    let adj = io::read_planar_code(&io::write_planar_code(&barrel(2).unwrap()).unwrap()).unwrap();
    assert_eq!(adj.len(), 8);
    assert!(adj.iter().all(|a| a.len() == 3));
}

/// Independent rebuild of the sphere map from clockwise neighbour lists.
fn map_from_planar_code(adj: &[Vec<usize>]) -> PlanarMap {
    let mut id = std::collections::BTreeMap::new();
    let mut edges = Vec::new();
    for (u, nb) in adj.iter().enumerate() {
        for &v in nb {
            if u < v {
                id.insert((u, v), edges.len() as u32);
                edges.push([u as u32, v as u32]);
            }
        }
    }
    let rotations: Vec<Vec<u32>> =
        adj.iter().enumerate().map(|(u, nb)| nb.iter().rev().map(|&v| id[&(u.min(v), u.max(v))]).collect()).collect();
    PlanarMap::from_rotations(&edges, &rotations).unwrap()
}

#[test]
fn planar_code_reimport_matches_graph() {
    let mut multigraphs = 0;
    for p in entries() {
        let adj = io::read_planar_code(&io::write_planar_code(&p).unwrap()).unwrap();
        let simple = adj.iter().all(|nb| {
            let mut s = nb.clone();
            s.sort();
            s.windows(2).all(|w| w[0] != w[1])
        });
        if !simple {
            multigraphs += 1;
            continue;
        }
        let map = map_from_planar_code(&adj);
        let keys: Vec<u32> = map.faces().iter().map(|f| f.len() as u32).collect();
        assert_eq!(map.canonical_code(&keys), p.graph_code());
    }
    assert!(multigraphs > 0);
}

#[test]
fn planar_code_size_limit() {
    let big = snub_antiprism(64).unwrap();
    assert!(matches!(io::write_planar_code(&big), Err(Error::TooLarge(256))));
}

#[test]
fn dot_output() {
    let tri = io::write_dot(&monocycle(3).unwrap());
    assert_eq!(tri.lines().filter(|l| l.trim_end().ends_with(';') && !l.contains("--") && !l.contains('[')).count(), 3);
    let b = io::write_dot(&barrel(2).unwrap());
    assert_eq!(b.matches(" -- ").count(), 12);
    assert!(b.starts_with("graph polycycle {") && b.trim_end().ends_with('}'));
    assert_eq!(b.matches("style=bold").count(), 4);
}

fn cross(a: [f64; 2], b: [f64; 2], c: [f64; 2]) -> f64 {
    (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
}

fn segments_cross(p: [f64; 2], q: [f64; 2], r: [f64; 2], s: [f64; 2]) -> bool {
    let eps = 1e-9;
    let d1 = cross(r, s, p);
    let d2 = cross(r, s, q);
    let d3 = cross(p, q, r);
    let d4 = cross(p, q, s);
    ((d1 > eps && d2 < -eps) || (d1 < -eps && d2 > eps)) && ((d3 > eps && d4 < -eps) || (d3 < -eps && d4 > eps))
}

#[test]
fn barrel_embedding_has_no_crossings() {
    let p = barrel(5).unwrap();
    let pos = tutte_embedding(&p).unwrap();
    let m = p.map();
    for e in 0..m.edge_count() {
        for f in e + 1..m.edge_count() {
            let [a, b] = m.edge_ends(e);
            let [c, d] = m.edge_ends(f);
            if [a, b].iter().any(|x| [c, d].contains(x)) {
                continue;
            }
            assert!(!segments_cross(pos[a], pos[b], pos[c], pos[d]), "edges {e} and {f} cross");
        }
    }
}

#[test]
fn pentagon_is_regular() {
    let pos = tutte_embedding(&monocycle(5).unwrap()).unwrap();
    let r: Vec<f64> = pos.iter().map(|p| (p[0] * p[0] + p[1] * p[1]).sqrt()).collect();
    assert!(r.iter().all(|x| (x - 1.0).abs() < 1e-5));
    let svg = render_svg(&monocycle(5).unwrap(), &RenderOptions::default()).unwrap();
    assert_eq!(svg.matches("<line").count(), 5);
}

#[test]
fn digon_is_two_arcs() {
    let svg = render_svg(&monocycle(2).unwrap(), &RenderOptions::default()).unwrap();
    assert_eq!(svg.matches("<line").count(), 0);
    assert_eq!(svg.matches(" Q ").count(), 2 + 2);
}

#[test]
fn svg_is_byte_stable() {
    for p in entries().iter().take(60) {
        let a = render_svg(p, &RenderOptions::default());
        let b = render_svg(p, &RenderOptions::default());
        match (a, b) {
            (Ok(a), Ok(b)) => assert_eq!(a, b),
            (Err(Error::DegenerateBoundary(k)), Err(_)) => assert!(k < 3),
            (a, b) => panic!("{a:?} / {b:?}"),
        }
    }
}
