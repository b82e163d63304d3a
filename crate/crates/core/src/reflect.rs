//! Complex reflections `t(λ) = λ + (ζ−1)·⟨λ,ε⟩/⟨ε,ε⟩·ε` and the
//! representations they generate.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::diagram::CoxeterDiagram;
use crate::herm::{gram_from_diagram, HermitianLattice, Quotient};
use crate::linalg::{self, Mat};
use crate::scalar::{QuadInt, QuadRat, QuadraticRing};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ReflectError {
    #[error("root has norm {0}, expected {1}")]
    RootNorm(i64, i64),
    #[error("reflection matrix is not integral; the root pairing is not divisible by the bond")]
    Integrality,
    #[error("group closure needs a positive definite lattice")]
    Indefinite,
    #[error("representation has {0} generators but the diagram has {1} nodes")]
    Shape(usize, usize),
    #[error("roots {0:?} do not form a basis of the quotient")]
    Basis(Vec<String>),
    #[error("diagram lattice: {0}")]
    Lattice(String),
}

/// Order of the reflection eigenvalue ζ: 3 over ℰ, 4 over 𝒢.
pub fn zeta_order<R: QuadraticRing>() -> u32 {
    match R::UNIT_COUNT {
        6 => 3,
        4 => 4,
        _ => unreachable!(),
    }
}

/// Matrix (acting on column coordinate vectors) of the reflection in
/// `root` with eigenvalue `zeta`.
pub fn reflection_matrix<R: QuadraticRing>(
    lat: &HermitianLattice<R>,
    root: &[QuadInt<R>],
    zeta: QuadInt<R>,
) -> Result<Mat<QuadInt<R>>, ReflectError> {
    let n = lat.rank();
    let norm = lat.norm(root);
    if norm != R::ROOT_NORM {
        return Err(ReflectError::RootNorm(norm, R::ROOT_NORM));
    }
    // column j is t(e_j) = e_j + (ζ−1)·⟨e_j, r⟩/N · r, with ⟨e_j, r⟩ = (G r̄)_j
    let gr = lat.gram.mul_vec(&root.iter().map(|x| x.conj()).collect::<Vec<_>>());
    let den = QuadInt::from_int(norm);
    let mut m = Mat::identity(n);
    for j in 0..n {
        let c = ((zeta - QuadInt::from_int(1)) * gr[j]).div_exact(den).ok_or(ReflectError::Integrality)?;
        for i in 0..n {
            let v = *m.get(i, j) + c * root[i];
            m.set(i, j, v);
        }
    }
    Ok(m)
}

/// Generators indexed like the diagram nodes, acting on a nondegenerate
/// lattice.
#[derive(Clone, Debug)]
pub struct ReflectionRep<R: QuadraticRing> {
    pub lattice: HermitianLattice<R>,
    pub labels: Vec<String>,
    pub generators: Vec<Mat<QuadInt<R>>>,
    pub zeta: QuadInt<R>,
}

/// The representation `T_i ↦ t_{ε_i}` on the quotient of the diagram
/// lattice by its radical.
pub fn rep_from_diagram<R: QuadraticRing>(
    q: &Quotient<R>,
    d: &CoxeterDiagram,
) -> Result<ReflectionRep<R>, ReflectError> {
    if q.projection.rows != d.len() {
        return Err(ReflectError::Shape(q.projection.rows, d.len()));
    }
    let zeta = R::zeta();
    let generators = (0..d.len())
        .map(|i| reflection_matrix(&q.lattice, q.projection.row(i), zeta))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ReflectionRep {
        lattice: q.lattice.clone(),
        labels: d.labels().to_vec(),
        generators,
        zeta,
    })
}

impl<R: QuadraticRing> ReflectionRep<R> {
    pub fn generator(&self, label: &str) -> Option<&Mat<QuadInt<R>>> {
        self.labels.iter().position(|l| l == label).map(|i| &self.generators[i])
    }

    /// `Mᵀ G M̄ = G`.
    pub fn is_unitary(&self, m: &Mat<QuadInt<R>>) -> bool {
        m.transpose().mul(&self.lattice.gram).mul(&m.conj()) == self.lattice.gram
    }

    /// Checks unitarity, order and non-triviality of every generator.
    pub fn generator_failures(&self) -> Vec<String> {
        let k = zeta_order::<R>();
        let mut out = Vec::new();
        for (l, m) in self.labels.iter().zip(&self.generators) {
            if !self.is_unitary(m) {
                out.push(format!("{l}: not unitary"));
            }
            if !m.pow(k).is_identity() {
                out.push(format!("{l}: order is not {k}"));
            }
            if m.is_identity() {
                out.push(format!("{l}: identity"));
            }
        }
        out
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationReport {
    pub pairs_checked: usize,
    pub braid_pairs: usize,
    pub commuting_pairs: usize,
    /// Failing pairs as `(label, label, relation)`.
    pub failures: Vec<(String, String, String)>,
}

/// Braid relation for connected pairs, commutation otherwise.
pub fn verify_relations<R: QuadraticRing>(
    rep: &ReflectionRep<R>,
    d: &CoxeterDiagram,
) -> Result<RelationReport, ReflectError> {
    let n = d.len();
    if rep.generators.len() != n {
        return Err(ReflectError::Shape(rep.generators.len(), n));
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let results: Vec<(usize, usize, bool, bool)> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let (a, b) = (&rep.generators[i], &rep.generators[j]);
            let ab = a.mul(b);
            if d.adjacent(i, j) {
                let ok = ab.mul(a) == b.mul(a).mul(b);
                (i, j, true, ok)
            } else {
                (i, j, false, ab == b.mul(a))
            }
        })
        .collect();
    let mut report = RelationReport {
        pairs_checked: results.len(),
        braid_pairs: 0,
        commuting_pairs: 0,
        failures: vec![],
    };
    for (i, j, braid, ok) in results {
        if braid {
            report.braid_pairs += 1;
        } else {
            report.commuting_pairs += 1;
        }
        if !ok {
            let rel = if braid { "braid" } else { "commute" };
            report.failures.push((d.label(i).into(), d.label(j).into(), rel.into()));
        }
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Closure {
    /// The group was enumerated completely.
    Finite(usize),
    /// The budget ran out with this many elements found.
    BudgetExceeded(usize),
}

/// Breadth-first enumeration of the matrix group generated by `gens`.
pub fn close_group<R: QuadraticRing>(gens: &[Mat<QuadInt<R>>], n: usize, max_elements: usize) -> Closure {
    let id: Mat<QuadInt<R>> = Mat::identity(n);
    let mut seen: HashSet<Mat<QuadInt<R>>> = HashSet::from([id.clone()]);
    let mut frontier = vec![id];
    while !frontier.is_empty() {
        let products: Vec<Mat<QuadInt<R>>> = frontier
            .par_iter()
            .flat_map_iter(|x| gens.iter().map(move |g| x.mul(g)))
            .collect();
        let mut next = Vec::new();
        for p in products {
            if !seen.contains(&p) {
                seen.insert(p.clone());
                next.push(p);
                if seen.len() > max_elements {
                    return Closure::BudgetExceeded(seen.len());
                }
            }
        }
        frontier = next;
    }
    Closure::Finite(seen.len())
}

/// Order of the group generated by a representation on a positive
/// definite lattice.
pub fn group_closure<R: QuadraticRing>(rep: &ReflectionRep<R>, max_elements: usize) -> Result<Closure, ReflectError> {
    if !rep.lattice.is_positive_definite() {
        return Err(ReflectError::Indefinite);
    }
    Ok(close_group(&rep.generators, rep.lattice.rank(), max_elements))
}

/// Order of a single matrix, up to `max`.
pub fn element_order<R: QuadraticRing>(m: &Mat<QuadInt<R>>, max: u64) -> Option<u64> {
    let mut p = m.clone();
    for k in 1..=max {
        if p.is_identity() {
            return Some(k);
        }
        p = p.mul(m);
    }
    None
}

/// Generator matrices rewritten in the field basis formed by the images of
/// the roots at `basis_labels`.
pub fn in_root_basis<R: QuadraticRing>(
    rep: &ReflectionRep<R>,
    q: &Quotient<R>,
    basis_labels: &[&str],
) -> Result<Vec<Mat<QuadRat<R>>>, ReflectError> {
    let bad = || ReflectError::Basis(basis_labels.iter().map(|s| s.to_string()).collect());
    let rows = basis_labels
        .iter()
        .map(|l| {
            let i = rep.labels.iter().position(|x| x == l).ok_or_else(bad)?;
            Ok(q.projection.row(i).iter().map(|x| QuadRat::from(*x)).collect())
        })
        .collect::<Result<Vec<Vec<QuadRat<R>>>, ReflectError>>()?;
    let bt = Mat::from_rows(rows).transpose();
    if bt.rows != bt.cols {
        return Err(bad());
    }
    let inv = linalg::inverse(&bt).ok_or_else(bad)?;
    Ok(rep.generators.iter().map(|m| inv.mul(&m.to_field()).mul(&bt)).collect())
}

#[derive(Clone, Debug, Serialize)]
pub struct CompatibilityReport {
    pub diagrams: Vec<usize>,
    pub quotient_ranks: Vec<usize>,
    pub shared_checked: usize,
    pub failures: Vec<String>,
}

/// Builds the representation of every diagram on its quotient and checks
/// that generators with the same label agree once written in the common
/// root basis `basis_labels`.
pub fn compatible_reps<R: QuadraticRing>(diagrams: &[CoxeterDiagram], basis_labels: &[&str]) -> Result<CompatibilityReport, ReflectError> {
    let mut first: std::collections::HashMap<String, Mat<QuadRat<R>>> = std::collections::HashMap::new();
    let mut report = CompatibilityReport {
        diagrams: diagrams.iter().map(|d| d.len()).collect(),
        quotient_ranks: vec![],
        shared_checked: 0,
        failures: vec![],
    };
    for d in diagrams {
        let lat: HermitianLattice<R> = gram_from_diagram(d).map_err(|e| ReflectError::Lattice(e.to_string()))?;
        let q = lat.quotient();
        report.quotient_ranks.push(q.lattice.rank());
        let rep = rep_from_diagram(&q, d)?;
        for f in rep.generator_failures() {
            report.failures.push(format!("{} nodes: {f}", d.len()));
        }
        let mats = in_root_basis(&rep, &q, basis_labels)?;
        for (l, m) in rep.labels.iter().zip(mats) {
            match first.get(l) {
                Some(prev) => {
                    report.shared_checked += 1;
                    if *prev != m {
                        report.failures.push(format!("{l}: differs on the {}-node diagram", d.len()));
                    }
                }
                None => {
                    first.insert(l.clone(), m);
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::i26;
    use crate::herm::gram_from_diagram;
    use crate::scalar::{omega, Eisenstein, EisensteinRing, GaussRing, Gaussian};
    use num_traits::Zero;

    fn eis(name: &str) -> (CoxeterDiagram, HermitianLattice<EisensteinRing>) {
        let d = CoxeterDiagram::by_name(name).unwrap();
        let l = gram_from_diagram(&d).unwrap();
        (d, l)
    }

    #[test]
    fn rank_one() {
        let (_, l) = eis("A1");
        let m = reflection_matrix(&l, &[Eisenstein::from(1)], omega()).unwrap();
        assert_eq!(m, Mat::from_rows(vec![vec![omega()]]));
        let g = HermitianLattice::new(Mat::from_rows(vec![vec![Gaussian::from(2)]])).unwrap();
        let m = reflection_matrix(&g, &[Gaussian::from(1)], Gaussian::new(0, 1)).unwrap();
        assert_eq!(m, Mat::from_rows(vec![vec![Gaussian::new(0, 1)]]));
        assert_eq!(element_order(&m, 10), Some(4));
    }

    #[test]
    fn a2_first_root() {
        // oracle: apply the formula to each basis vector by hand
        let (_, l) = eis("A2");
        let m = reflection_matrix(&l, &[Eisenstein::from(1), Eisenstein::zero()], omega()).unwrap();
        let w = omega();
        // ε₁ ↦ ωε₁; ε₂ ↦ ε₂ − ω²ε₁
        assert_eq!(*m.get(0, 0), w);
        assert_eq!(*m.get(1, 0), Eisenstein::zero());
        assert_eq!(*m.get(0, 1), -(w * w));
        assert_eq!(*m.get(1, 1), Eisenstein::from(1));
    }

    #[test]
    fn wrong_norm() {
        let (_, l) = eis("A2");
        let r = reflection_matrix(&l, &[Eisenstein::from(1), Eisenstein::from(1)], omega());
        assert_eq!(r, Err(ReflectError::RootNorm(6, 3)));
    }

    #[test]
    fn finite_groups() {
        for (name, order) in [("A1", 3), ("A2", 24), ("A3", 648)] {
            let (d, l) = eis(name);
            let rep = rep_from_diagram(&l.quotient(), &d).unwrap();
            assert_eq!(group_closure(&rep, 1_000_000).unwrap(), Closure::Finite(order), "{name}");
        }
    }

    #[test]
    fn closure_budget() {
        let (d, l) = eis("A3");
        let rep = rep_from_diagram(&l.quotient(), &d).unwrap();
        assert!(matches!(group_closure(&rep, 100).unwrap(), Closure::BudgetExceeded(_)));
    }

    #[test]
    fn refuses_indefinite() {
        let (d, l) = eis("A7");
        let rep = rep_from_diagram(&l.quotient(), &d).unwrap();
        assert_eq!(group_closure(&rep, 10).unwrap_err(), ReflectError::Indefinite);
    }

    #[test]
    fn closure_independent_of_generator_order() {
        let (d, l) = eis("A3");
        let rep = rep_from_diagram(&l.quotient(), &d).unwrap();
        let mut g = rep.generators.clone();
        g.reverse();
        assert_eq!(close_group(&g, 3, 10_000), Closure::Finite(648));
    }

    #[test]
    fn gauss_tetraflections() {
        let d = CoxeterDiagram::by_name("Y322").unwrap();
        let l: HermitianLattice<GaussRing> = gram_from_diagram(&d).unwrap();
        let rep = rep_from_diagram(&l.quotient(), &d).unwrap();
        assert!(rep.generator_failures().is_empty());
        assert!(verify_relations(&rep, &d).unwrap().failures.is_empty());
    }

    #[test]
    fn chain_and_cycle_reps_agree() {
        let cyc = CoxeterDiagram::by_name("tildeA11").unwrap();
        let l11: Vec<String> = (1..=11).map(|i| i.to_string()).collect();
        let a11 = cyc.induced_by_labels(&l11.iter().map(|s| s.as_str()).collect::<Vec<_>>()).unwrap();
        let a10 = cyc.induced_by_labels(&l11[..10].iter().map(|s| s.as_str()).collect::<Vec<_>>()).unwrap();
        let basis: Vec<&str> = l11[..10].iter().map(|s| s.as_str()).collect();
        let r = compatible_reps::<EisensteinRing>(&[a10, a11, cyc], &basis).unwrap();
        assert_eq!(r.quotient_ranks, vec![10, 10, 10]);
        assert_eq!(r.shared_checked, 10 + 11);
        assert!(r.failures.is_empty(), "{:?}", r.failures);
    }

    #[test]
    fn root_basis_rejects_dependent_roots() {
        let (d, l) = eis("A2");
        let q = l.quotient();
        let rep = rep_from_diagram(&q, &d).unwrap();
        assert!(matches!(in_root_basis(&rep, &q, &["1", "1"]), Err(ReflectError::Basis(_))));
    }

    #[test]
    fn i26_relations() {
        let d = i26();
        let l: HermitianLattice<EisensteinRing> = gram_from_diagram(&d).unwrap();
        let rep = rep_from_diagram(&l.quotient(), &d).unwrap();
        assert_eq!(rep.generators.len(), 26);
        assert!(rep.generator_failures().is_empty());
        let r = verify_relations(&rep, &d).unwrap();
        assert_eq!(r.pairs_checked, 325);
        assert_eq!(r.braid_pairs, 52);
        assert!(r.failures.is_empty(), "{:?}", r.failures);
    }
}
