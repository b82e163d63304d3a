//! Reduction of an even Gauss lattice modulo `(1+i)`.

use serde::Serialize;

use crate::linalg::Mat;
use crate::scalar::{GaussRing, Gaussian};

use super::{HermError, HermitianLattice};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum QuadraticType {
    /// Even dimension, `2^{d−1} + 2^{d/2−1}` zeros.
    Plus,
    /// Even dimension, `2^{d−1} − 2^{d/2−1}` zeros.
    Minus,
    /// Odd dimension: `b` has a one-dimensional radical on which `q` is
    /// nonzero.
    Odd,
}

/// A quadratic function on `F₂^dim`, stored as a table indexed by the
/// coordinate bitmask.
#[derive(Clone, Debug, Serialize)]
pub struct BinaryQuadraticSpace {
    pub dim: usize,
    pub q: Vec<u8>,
    pub kind: QuadraticType,
    /// Generator images as `F₂` matrices (row-major, `dim × dim`).
    pub generators: Vec<Vec<Vec<u8>>>,
    /// Whether each generator image preserves `q`.
    pub preserves_q: Vec<bool>,
}

impl BinaryQuadraticSpace {
    pub fn b(&self, x: usize, y: usize) -> u8 {
        self.q[x ^ y] ^ self.q[x] ^ self.q[y]
    }

    pub fn zeros(&self) -> usize {
        self.q.iter().filter(|&&v| v == 0).count()
    }

    /// Nonzero vectors with `q = 0`.
    pub fn singular_nonzero(&self) -> usize {
        self.zeros() - 1
    }

    /// Vectors orthogonal to everything under `b`.
    pub fn radical(&self) -> Vec<usize> {
        (0..self.q.len()).filter(|&x| (0..self.q.len()).all(|y| self.b(x, y) == 0)).collect()
    }
}

fn reduce_entry(x: Gaussian) -> u8 {
    (x.a + x.b).rem_euclid(2) as u8
}

fn apply(m: &[Vec<u8>], x: usize) -> usize {
    let mut out = 0;
    for (i, row) in m.iter().enumerate() {
        let bit = row.iter().enumerate().fold(0u8, |acc, (j, &v)| acc ^ (v & ((x >> j) & 1) as u8));
        out |= (bit as usize) << i;
    }
    out
}

/// Reduces `L` modulo `(1+i)L` to the `F₂`-space with
/// `q(v̄) = ⟨v,v⟩/2 mod 2`, classifies it, and reduces each generator.
///
/// Nondegenerate means `q` is nonzero on every nonzero vector of the
/// radical of the polar form `b`.
pub fn reduce_mod_two(
    lat: &HermitianLattice<GaussRing>,
    generators: &[Mat<Gaussian>],
) -> Result<BinaryQuadraticSpace, HermError> {
    let d = lat.rank();
    if d > 20 {
        return Err(HermError::Precondition("rank at most 20 for exhaustive reduction".into()));
    }
    if (0..d).any(|i| lat.gram.get(i, i).a.rem_euclid(2) != 0) {
        return Err(HermError::Precondition("Gauss lattice with even diagonal".into()));
    }
    let vec_of = |x: usize| -> Vec<Gaussian> { (0..d).map(|i| Gaussian::from(((x >> i) & 1) as i64)).collect() };
    let qv = |v: &[Gaussian]| -> u8 {
        let n = lat.norm(v);
        debug_assert!(n % 2 == 0);
        (n / 2).rem_euclid(2) as u8
    };
    let size = 1usize << d;
    let q: Vec<u8> = (0..size).map(|x| qv(&vec_of(x))).collect();
    // well defined on cosets of (1+i)L: shifts by (1+i)ε_k and (i−1)ε_k
    for x in 0..size {
        let v = vec_of(x);
        for k in 0..d {
            for s in [Gaussian::new(1, 1), Gaussian::new(-1, 1)] {
                let mut w = v.clone();
                w[k] += s;
                if qv(&w) != q[x] {
                    return Err(HermError::Precondition("q well defined modulo (1+i)".into()));
                }
            }
        }
    }
    let mut space = BinaryQuadraticSpace {
        dim: d,
        q,
        kind: QuadraticType::Odd,
        generators: vec![],
        preserves_q: vec![],
    };
    let rad = space.radical();
    if rad.iter().any(|&x| x != 0 && space.q[x] == 0) {
        return Err(HermError::DegenerateReduction {
            radical: rad.iter().map(|&x| x as u64).collect(),
        });
    }
    if d % 2 == 0 {
        if rad.len() != 1 {
            return Err(HermError::DegenerateReduction {
                radical: rad.iter().map(|&x| x as u64).collect(),
            });
        }
        let half = 1usize << (d / 2 - 1);
        let z = space.zeros();
        space.kind = if z == size / 2 + half {
            QuadraticType::Plus
        } else if z == size / 2 - half {
            QuadraticType::Minus
        } else {
            return Err(HermError::Precondition(format!("zero count {z} of a nondegenerate form")));
        };
    }
    for g in generators {
        let m: Vec<Vec<u8>> = (0..d).map(|i| (0..d).map(|j| reduce_entry(*g.get(i, j))).collect()).collect();
        let ok = (0..size).all(|x| space.q[apply(&m, x)] == space.q[x]);
        space.generators.push(m);
        space.preserves_q.push(ok);
    }
    Ok(space)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::CoxeterDiagram;
    use crate::herm::gram_from_diagram;

    #[test]
    fn rank_one() {
        let l = HermitianLattice::new(Mat::from_rows(vec![vec![Gaussian::from(2)]])).unwrap();
        let s = reduce_mod_two(&l, &[Mat::from_rows(vec![vec![Gaussian::new(0, 1)]])]).unwrap();
        assert_eq!(s.dim, 1);
        assert_eq!(s.q, vec![0, 1]);
        assert_eq!(s.singular_nonzero(), 0);
        assert_eq!(s.kind, QuadraticType::Odd);
        assert_eq!(s.preserves_q, vec![true]);
    }

    #[test]
    fn y322_is_minus_type() {
        let d = CoxeterDiagram::by_name("Y322").unwrap();
        let l: HermitianLattice<GaussRing> = gram_from_diagram(&d).unwrap();
        let s = reduce_mod_two(&l, &[]).unwrap();
        assert_eq!(s.dim, 8);
        assert_eq!(s.zeros(), 120);
        assert_eq!(s.singular_nonzero(), 119);
        assert_eq!(s.kind, QuadraticType::Minus);
        // b is the adjacency matrix mod 2
        for i in 0..8 {
            for j in 0..8 {
                assert_eq!(s.b(1 << i, 1 << j) == 1, d.adjacent(i, j));
            }
        }
    }

    #[test]
    fn degenerate_is_reported() {
        // A_3 over 𝒢: b = adjacency of a path on 3 nodes, radical spanned by
        // ε₁ + ε₃ with q = (2 + 2)/2 = 2 ≡ 0
        let d = CoxeterDiagram::by_name("A3").unwrap();
        let l: HermitianLattice<GaussRing> = gram_from_diagram(&d).unwrap();
        assert!(matches!(reduce_mod_two(&l, &[]), Err(HermError::DegenerateReduction { .. })));
    }
}
