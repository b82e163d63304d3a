//! Incidence graphs of the projective planes over the fields with 2 and 3
//! elements, and the named node sets of `I_26` and `I_14`.

use super::{bit, Color, CoxeterDiagram, DiagramError, NodeSet};

/// Normalised homogeneous coordinates: first nonzero entry equal to 1.
fn projective_points(q: u32) -> Vec<[u32; 3]> {
    let mut out = Vec::new();
    for x in 0..q {
        for y in 0..q {
            for z in 0..q {
                let v = [x, y, z];
                if v.iter().find(|&&c| c != 0) == Some(&1) {
                    out.push(v);
                }
            }
        }
    }
    out.sort();
    out
}

fn coord_label(kind: char, v: [u32; 3]) -> String {
    format!("{kind}{}{}{}", v[0], v[1], v[2])
}

/// Point-line incidence graph of P²(q): points `Pxyz` (black), lines `Lxyz`
/// (white), a point lies on a line when the coordinate dot product
/// vanishes mod q.
pub fn build_incidence(q: u32) -> Result<CoxeterDiagram, DiagramError> {
    if q != 2 && q != 3 {
        return Err(DiagramError::Unsupported(format!("projective plane over F_{q}; only q = 2, 3")));
    }
    let pts = projective_points(q);
    let n = pts.len();
    let mut labels: Vec<String> = pts.iter().map(|&v| coord_label('P', v)).collect();
    labels.extend(pts.iter().map(|&v| coord_label('L', v)));
    let mut edges = Vec::new();
    for (i, p) in pts.iter().enumerate() {
        for (j, l) in pts.iter().enumerate() {
            if (p[0] * l[0] + p[1] * l[1] + p[2] * l[2]) % q == 0 {
                edges.push((i, n + j));
            }
        }
    }
    let mut colors = vec![Color::Black; n];
    colors.extend(vec![Color::White; n]);
    CoxeterDiagram::new(labels, &edges, Some(colors))
}

/// Names of the `I_26` nodes and their coordinates, in the library's
/// fixed node order: `Y_555` first (triple node `a` and its three arms),
/// then the remaining ten nodes.
const I26_NAMES: [(&str, char, [u32; 3]); 26] = [
    ("a", 'P', [0, 0, 1]),
    ("b1", 'L', [0, 1, 0]),
    ("c1", 'P', [1, 0, 0]),
    ("d1", 'L', [0, 1, 2]),
    ("e1", 'P', [1, 2, 2]),
    ("f1", 'L', [1, 0, 1]),
    ("b2", 'L', [1, 0, 0]),
    ("c2", 'P', [0, 1, 2]),
    ("d2", 'L', [1, 1, 1]),
    ("e2", 'P', [1, 2, 0]),
    ("f2", 'L', [1, 1, 2]),
    ("b3", 'L', [1, 2, 0]),
    ("c3", 'P', [1, 1, 0]),
    ("d3", 'L', [1, 2, 1]),
    ("e3", 'P', [1, 2, 1]),
    ("f3", 'L', [1, 0, 2]),
    ("f", 'L', [1, 1, 0]),
    ("a1", 'P', [1, 0, 1]),
    ("a2", 'P', [0, 1, 0]),
    ("a3", 'P', [1, 1, 2]),
    ("g1", 'P', [1, 0, 2]),
    ("g2", 'P', [0, 1, 1]),
    ("g3", 'P', [1, 1, 1]),
    ("z1", 'L', [1, 2, 2]),
    ("z2", 'L', [0, 0, 1]),
    ("z3", 'L', [0, 1, 1]),
];

const I14_NAMES: [(&str, char, [u32; 3]); 14] = [
    ("a", 'P', [0, 0, 1]),
    ("b1", 'L', [0, 1, 0]),
    ("c1", 'P', [1, 0, 0]),
    ("d1", 'L', [0, 1, 1]),
    ("b2", 'L', [1, 1, 0]),
    ("c2", 'P', [1, 1, 0]),
    ("d2", 'L', [1, 1, 1]),
    ("b3", 'L', [1, 0, 0]),
    ("c3", 'P', [0, 1, 0]),
    ("d3", 'L', [1, 0, 1]),
    ("a1", 'P', [1, 0, 1]),
    ("a2", 'P', [1, 1, 1]),
    ("a3", 'P', [0, 1, 1]),
    ("z", 'L', [0, 0, 1]),
];

fn named(q: u32, names: &[(&str, char, [u32; 3])]) -> CoxeterDiagram {
    let base = build_incidence(q).expect("supported field");
    let order: Vec<usize> = names
        .iter()
        .map(|&(_, k, v)| base.index(&coord_label(k, v)).expect("coordinate table matches the plane"))
        .collect();
    let labels = names.iter().map(|&(n, _, _)| n.to_string()).collect();
    base.reordered(&order, Some(labels))
}

/// `I_26` with the named nodes `a, b_i, c_i, d_i, e_i, f_i, f, a_i, g_i,
/// z_i`. Points are black.
pub fn i26() -> CoxeterDiagram {
    named(3, &I26_NAMES)
}

/// `I_14` with points `a, a_i, c_i` and lines `z, b_i, d_i`; `Y_333` is
/// the first ten nodes.
pub fn i14() -> CoxeterDiagram {
    named(2, &I14_NAMES)
}

/// The `Y_555` subtree of `I_26`: nodes 0..16 in the fixed order.
pub const I26_Y555: [&str; 16] = [
    "a", "b1", "c1", "d1", "e1", "f1", "b2", "c2", "d2", "e2", "f2", "b3", "c3", "d3", "e3", "f3",
];

/// The `A_4` whose complement is the free 12-gon.
pub const I26_A4: [&str; 4] = ["c3", "d3", "e3", "f3"];

/// The free 12-gon of `I_26`, in cyclic order.
pub const I26_FREE_12GON: [&str; 12] = [
    "a", "b1", "c1", "d1", "e1", "f1", "a3", "f2", "e2", "d2", "c2", "b2",
];

/// Node set of a list of `I_26` labels.
pub fn i26_mask(labels: &[&str]) -> NodeSet {
    let d = i26();
    labels.iter().fold(0, |m, l| m | bit(d.index(l).expect("I26 label")))
}
