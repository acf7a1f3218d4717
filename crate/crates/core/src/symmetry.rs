//! Automorphism groups of polycycles and their sphere maps.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::map::{alpha, Automorphism, PlanarMap};
use crate::polycycle::Polycycle;

/// Order and structure summary of an automorphism group.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SymmetryInfo {
    pub order: usize,
    /// Order of the orientation-preserving subgroup.
    pub op_order: usize,
    /// Largest order of an orientation-preserving element.
    pub max_rotation: usize,
    /// Whether some element reverses orientation.
    pub has_reflection: bool,
    /// Orientation-reversing involutions with a fixed point (plane reflections).
    pub mirror_count: usize,
    /// Schoenflies-style name, when the signature determines one.
    pub name: Option<String>,
}

impl SymmetryInfo {
    pub fn from_group(map: &PlanarMap, group: &[Automorphism]) -> SymmetryInfo {
        let order = group.len();
        let op: Vec<&Automorphism> = group.iter().filter(|g| !g.reversing).collect();
        let op_order = op.len();
        let max_rotation = op.iter().map(|g| g.order()).max().unwrap_or(1);
        let has_reflection = op_order < order;
        let mirror_count = group.iter().filter(|g| g.reversing && is_mirror(map, g)).count();
        let name = name_for(op_order, max_rotation, has_reflection, mirror_count);
        SymmetryInfo { order, op_order, max_rotation, has_reflection, mirror_count, name }
    }

    /// The name if known, else `"order-N"`.
    pub fn label(&self) -> String {
        self.name.clone().unwrap_or_else(|| format!("order-{}", self.order))
    }
}

fn is_mirror(map: &PlanarMap, g: &Automorphism) -> bool {
    if !g.compose(g).is_identity() {
        return false;
    }
    (0..map.dart_count() as u32).any(|x| {
        let y = g.darts[x as usize];
        y == x || y == alpha(x) || map.origin(y) == map.origin(x)
    })
}

fn name_for(op: usize, rot: usize, reflective: bool, mirrors: usize) -> Option<String> {
    let cyclic = rot == op;
    let dihedral = op >= 4 && op.is_multiple_of(2) && rot == op / 2;
    let special = match (op, rot) {
        (12, 3) => Some("T"),
        (24, 4) => Some("O"),
        (60, 5) => Some("I"),
        _ => None,
    };
    if !reflective {
        return if let Some(s) = special {
            Some(s.into())
        } else if cyclic {
            Some(format!("C{op}"))
        } else if dihedral {
            Some(format!("D{}", op / 2))
        } else {
            None
        };
    }
    if let Some(s) = special {
        return match (s, mirrors) {
            ("T", 6) => Some("Td".into()),
            ("T", 3) => Some("Th".into()),
            ("O", _) => Some("Oh".into()),
            ("I", _) => Some("Ih".into()),
            _ => None,
        };
    }
    if cyclic {
        let n = op;
        return match (n, mirrors) {
            (1, 1) => Some("Cs".into()),
            (1, 0) => Some("Ci".into()),
            (_, m) if m == n => Some(format!("C{n}v")),
            (_, 1) => Some(format!("C{n}h")),
            (_, 0) => Some(format!("S{}", 2 * n)),
            _ => None,
        };
    }
    if dihedral {
        let n = op / 2;
        return match mirrors {
            m if m == n + 1 => Some(format!("D{n}h")),
            m if m == n => Some(format!("D{n}d")),
            _ => None,
        };
    }
    None
}

/// Aut(P): automorphisms preserving the hole/proper partition.
pub fn symmetry_of_polycycle(p: &Polycycle) -> SymmetryInfo {
    SymmetryInfo::from_group(p.map(), &p.automorphisms())
}

/// Aut(G): automorphisms of the sphere map with hole marks erased.
pub fn symmetry_of_graph(p: &Polycycle) -> SymmetryInfo {
    SymmetryInfo::from_group(p.map(), &p.graph_automorphisms())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{barrel, gon_triple, monocycle, snub_antiprism};

    #[test]
    fn named_groups() {
        let t = monocycle(3).unwrap();
        assert_eq!(symmetry_of_polycycle(&t).label(), "C3v");
        assert_eq!(symmetry_of_graph(&t).label(), "D3h");
        assert_eq!(symmetry_of_graph(&gon_triple(3, 3, 3).unwrap()).label(), "Td");
        assert_eq!(symmetry_of_graph(&barrel(5).unwrap()).label(), "Ih");
        assert_eq!(symmetry_of_graph(&snub_antiprism(3).unwrap()).label(), "Ih");
        assert_eq!(symmetry_of_graph(&barrel(4).unwrap()).order, 16);
        for m in 2..=6 {
            let s = symmetry_of_polycycle(&barrel(m).unwrap());
            assert_eq!(s.order, 4 * m);
            assert_eq!(s.label(), format!("D{m}d"));
            let s = symmetry_of_polycycle(&snub_antiprism(m).unwrap());
            assert_eq!(s.order, 4 * m);
        }
        assert_eq!(symmetry_of_polycycle(&monocycle(5).unwrap()).label(), "C5v");
        assert_eq!(symmetry_of_graph(&monocycle(2).unwrap()).label(), "D2h");
    }
}
