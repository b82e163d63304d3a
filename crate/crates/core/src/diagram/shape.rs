//! Names for the shapes of small connected diagrams.

use std::collections::BTreeMap;

use super::{indices, CoxeterDiagram, NodeSet};

/// Shape of one connected node set: `A5`, `D4`, `E8`, `tildeA11`,
/// `tildeD5`, `tildeE6`, `Y555`, or `G<n>:<m>` for anything else.
fn connected_shape(d: &CoxeterDiagram, m: NodeSet) -> String {
    let nodes = indices(m);
    let n = nodes.len();
    let deg: Vec<usize> = nodes.iter().map(|&i| (d.neighbors(i) & m).count_ones() as usize).collect();
    let edges: usize = deg.iter().sum::<usize>() / 2;
    if n == 1 {
        return "A1".into();
    }
    if edges == n && deg.iter().all(|&k| k == 2) {
        return format!("tildeA{}", n - 1);
    }
    if edges + 1 == n {
        let branch: Vec<usize> = (0..n).filter(|&k| deg[k] >= 3).collect();
        if branch.is_empty() {
            return format!("A{n}");
        }
        if branch.len() == 1 && deg[branch[0]] == 3 {
            let mut arms = arm_lengths(d, m, nodes[branch[0]]);
            arms.sort_unstable_by(|a, b| b.cmp(a));
            let (p, q, r) = (arms[0], arms[1], arms[2]);
            return match (p, q, r) {
                (_, 1, 1) => format!("D{n}"),
                (2..=4, 2, 1) => format!("E{n}"),
                (2, 2, 2) => "tildeE6".into(),
                (3, 3, 1) => "tildeE7".into(),
                (5, 2, 1) => "tildeE8".into(),
                _ if p < 10 => format!("Y{p}{q}{r}"),
                _ => format!("Y{p},{q},{r}"),
            };
        }
        if branch.len() == 1 && deg[branch[0]] == 4 && n == 5 {
            return "tildeD4".into();
        }
        if branch.len() == 2 && branch.iter().all(|&k| deg[k] == 3) {
            // tildeD_n: both branch nodes carry two leaves
            let leaves_ok = branch.iter().all(|&k| {
                indices(d.neighbors(nodes[k]) & m)
                    .into_iter()
                    .filter(|&j| (d.neighbors(j) & m).count_ones() == 1)
                    .count()
                    == 2
            });
            if leaves_ok {
                return format!("tildeD{}", n - 1);
            }
        }
    }
    format!("G{n}:{edges}")
}

fn arm_lengths(d: &CoxeterDiagram, m: NodeSet, center: usize) -> Vec<usize> {
    indices(d.neighbors(center) & m)
        .into_iter()
        .map(|start| {
            let (mut prev, mut cur, mut len) = (center, start, 1);
            loop {
                let next = d.neighbors(cur) & m & !super::bit(prev);
                if next.count_ones() != 1 {
                    return len;
                }
                prev = cur;
                cur = next.trailing_zeros() as usize;
                len += 1;
            }
        })
        .collect()
}

/// Shapes of the connected components of `m`, one entry per component.
pub fn component_shapes(d: &CoxeterDiagram, m: NodeSet) -> Vec<String> {
    d.components(m).into_iter().map(|c| connected_shape(d, c)).collect()
}

/// Shape of a node set with multiplicities, e.g. `3A5`, `4D4`, `2A2+A4`.
/// Components are listed by node count, then name.
pub fn shape_name(d: &CoxeterDiagram, m: NodeSet) -> String {
    let mut count: BTreeMap<(usize, String), usize> = BTreeMap::new();
    for c in d.components(m) {
        *count.entry((c.count_ones() as usize, connected_shape(d, c))).or_default() += 1;
    }
    count
        .into_iter()
        .map(|((_, s), k)| if k == 1 { s } else { format!("{k}{s}") })
        .collect::<Vec<_>>()
        .join("+")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names() {
        for name in ["A1", "A6", "D4", "D7", "E6", "E7", "E8", "tildeA5", "tildeD4", "tildeD7", "tildeE6", "tildeE7", "tildeE8", "Y555", "Y544"] {
            let d = CoxeterDiagram::by_name(name).unwrap();
            assert_eq!(shape_name(&d, d.all()), name);
        }
        let d = CoxeterDiagram::by_name("A5").unwrap();
        assert_eq!(shape_name(&d, 0b11011), "2A2");
        assert_eq!(shape_name(&d, 0b10111), "A1+A3");
        assert_eq!(shape_name(&d, 0), "");
    }
}
