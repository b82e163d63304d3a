//! Backtracking searches: induced subdiagrams and automorphisms.

use std::collections::{BTreeMap, VecDeque};

use super::{bit, indices, CoxeterDiagram, NodeSet};

/// Result of [`find_induced`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embeddings {
    /// One node map per image set: `map[k]` is the haystack node assigned
    /// to pattern node `k`. Sorted by image set, then map.
    pub maps: Vec<Vec<usize>>,
    /// False when the search budget ran out before the search finished.
    pub complete: bool,
    /// Search nodes visited.
    pub visited: u64,
}

/// Pattern nodes in breadth-first order, component by component.
fn bfs_order(d: &CoxeterDiagram) -> Vec<usize> {
    let mut seen = 0u64;
    let mut order = Vec::with_capacity(d.len());
    for s in 0..d.len() {
        if seen & bit(s) != 0 {
            continue;
        }
        seen |= bit(s);
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            order.push(u);
            for v in indices(d.neighbors(u) & !seen) {
                seen |= bit(v);
                q.push_back(v);
            }
        }
    }
    order
}

/// All induced copies of `pattern` in `haystack` (colors ignored), one per
/// image node set. The map kept for each image is the lexicographically
/// smallest, so copies related by a pattern automorphism collapse.
///
/// `budget` caps the number of search nodes; `None` means unlimited.
pub fn find_induced(haystack: &CoxeterDiagram, pattern: &CoxeterDiagram, budget: Option<u64>) -> Embeddings {
    let order = bfs_order(pattern);
    let k = pattern.len();
    let mut best: BTreeMap<NodeSet, Vec<usize>> = BTreeMap::new();
    let mut assign = vec![usize::MAX; k];
    let mut visited = 0u64;
    let mut complete = true;
    if k > haystack.len() {
        return Embeddings {
            maps: vec![],
            complete,
            visited,
        };
    }
    #[allow(clippy::too_many_arguments)]
    fn rec(
        h: &CoxeterDiagram,
        p: &CoxeterDiagram,
        order: &[usize],
        depth: usize,
        used: NodeSet,
        assign: &mut Vec<usize>,
        best: &mut BTreeMap<NodeSet, Vec<usize>>,
        visited: &mut u64,
        budget: Option<u64>,
        complete: &mut bool,
    ) {
        if let Some(b) = budget {
            if *visited >= b {
                *complete = false;
                return;
            }
        }
        *visited += 1;
        if depth == order.len() {
            let e = best.entry(used).or_insert_with(|| assign.clone());
            if *assign < *e {
                *e = assign.clone();
            }
            return;
        }
        let u = order[depth];
        // Candidates: adjacent to the image of an already placed neighbor
        // when there is one.
        let placed_nb = indices(p.neighbors(u)).into_iter().find(|&w| assign[w] != usize::MAX);
        let cand = match placed_nb {
            Some(w) => h.neighbors(assign[w]) & !used,
            None => h.all() & !used,
        };
        'c: for x in indices(cand) {
            if h.degree(x) < p.degree(u) {
                continue;
            }
            for (w, &img) in assign.iter().enumerate() {
                if img == usize::MAX {
                    continue;
                }
                if p.adjacent(u, w) != h.adjacent(x, img) {
                    continue 'c;
                }
            }
            assign[u] = x;
            rec(h, p, order, depth + 1, used | bit(x), assign, best, visited, budget, complete);
            assign[u] = usize::MAX;
            if !*complete {
                return;
            }
        }
    }
    rec(
        haystack,
        pattern,
        &order,
        0,
        0,
        &mut assign,
        &mut best,
        &mut visited,
        budget,
        &mut complete,
    );
    let mut maps: Vec<(Vec<usize>, Vec<usize>)> = best.into_iter().map(|(m, a)| (indices(m), a)).collect();
    maps.sort();
    Embeddings {
        maps: maps.into_iter().map(|(_, a)| a).collect(),
        complete,
        visited,
    }
}

/// Number of induced cycles of length `len` in `d`, by direct path
/// extension from each lowest node. Independent of [`find_induced`].
pub fn count_induced_cycles(d: &CoxeterDiagram, len: usize) -> u64 {
    assert!(len >= 4, "induced cycles have length at least 4");
    fn ext(d: &CoxeterDiagram, path: &mut Vec<usize>, start: usize, len: usize, count: &mut u64) {
        let last = *path.last().unwrap();
        if path.len() == len {
            if d.adjacent(last, start) && path[1] < last {
                *count += 1;
            }
            return;
        }
        for nb in indices(d.neighbors(last)) {
            if nb <= start || path.contains(&nb) {
                continue;
            }
            // chords are forbidden, except the closing edge back to start
            let closing_ok = path.len() + 1 == len;
            let chord = path[..path.len() - 1]
                .iter()
                .any(|&q| d.adjacent(q, nb) && !(closing_ok && q == start));
            if chord {
                continue;
            }
            path.push(nb);
            ext(d, path, start, len, count);
            path.pop();
        }
    }
    let mut count = 0;
    for s in 0..d.len() {
        ext(d, &mut vec![s], s, len, &mut count);
    }
    count
}

/// Per-node invariant used to prune automorphism candidates: degree,
/// optional color, and the counts of nodes at each distance.
fn invariants(d: &CoxeterDiagram, respect_colors: bool) -> Vec<(usize, i32, Vec<usize>)> {
    (0..d.len())
        .map(|i| {
            let dist = d.distances(i);
            let mut prof = vec![0usize; d.len() + 1];
            for x in dist {
                prof[x.min(d.len())] += 1;
            }
            let c = if respect_colors {
                d.color(i).map_or(-1, |c| c as i32)
            } else {
                -1
            };
            (d.degree(i), c, prof)
        })
        .collect()
}

/// All automorphisms as permutations `perm[i] = image of i`, in
/// lexicographic order.
pub fn automorphisms(d: &CoxeterDiagram, respect_colors: bool) -> Vec<Vec<usize>> {
    let n = d.len();
    let inv = invariants(d, respect_colors);
    let order = bfs_order(d);
    let mut out = Vec::new();
    let mut assign = vec![usize::MAX; n];
    fn rec(
        d: &CoxeterDiagram,
        inv: &[(usize, i32, Vec<usize>)],
        order: &[usize],
        depth: usize,
        used: NodeSet,
        assign: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if depth == order.len() {
            out.push(assign.clone());
            return;
        }
        let u = order[depth];
        let placed_nb = indices(d.neighbors(u)).into_iter().find(|&w| assign[w] != usize::MAX);
        let cand = match placed_nb {
            Some(w) => d.neighbors(assign[w]) & !used,
            None => d.all() & !used,
        };
        'c: for x in indices(cand) {
            if inv[x] != inv[u] {
                continue;
            }
            for (w, &img) in assign.iter().enumerate() {
                if img != usize::MAX && d.adjacent(u, w) != d.adjacent(x, img) {
                    continue 'c;
                }
            }
            assign[u] = x;
            rec(d, inv, order, depth + 1, used | bit(x), assign, out);
            assign[u] = usize::MAX;
        }
    }
    rec(d, &inv, &order, 0, 0, &mut assign, &mut out);
    out.sort();
    out
}

pub fn automorphism_count(d: &CoxeterDiagram, respect_colors: bool) -> usize {
    automorphisms(d, respect_colors).len()
}

/// Image of a node set under a permutation.
pub fn permute_mask(perm: &[usize], m: NodeSet) -> NodeSet {
    indices(m).into_iter().fold(0, |a, i| a | bit(perm[i]))
}
