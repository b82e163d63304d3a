//! Null vectors of incidence-graph lattices: `δ_l = c·ε_l + Σ_{p∼l} ε_p`
//! over the ring and `d_l = √3·e_l + Σ_{p∼l} e_p` over Q(√3).

use num_traits::Zero;
use serde::Serialize;

use crate::diagram::{build_incidence, indices, Color, CoxeterDiagram};
use crate::linalg::{self, Mat};
use crate::scalar::{EisensteinRing, GaussRing, QuadInt, QuadRat, QuadraticRing, Sqrt3};

use super::{gram_from_diagram, HermError, HermitianLattice};

#[derive(Clone, Debug, Serialize)]
pub struct NullIdentityReport {
    pub q: u32,
    /// Pairings `⟨δ_l, ε_k⟩` checked.
    pub pairings_checked: usize,
    pub failures: Vec<String>,
    /// Dimension of the span of `δ_l − δ_m`.
    pub span_dim: usize,
    pub radical_dim: usize,
    /// Whether every `δ_l − δ_m` lies in the radical.
    pub differences_null: bool,
    /// Real-form pairings `⟨d_l, e_k⟩` checked (q = 3 only).
    pub real_pairings_checked: usize,
}

impl NullIdentityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.differences_null && self.span_dim == self.radical_dim
    }
}

/// Coefficient of `ε_l` making `δ_l` orthogonal to every point root:
/// `−bond · root_norm / N(bond)`, i.e. `−θ` over ℰ and `−(1+i)` over 𝒢.
fn delta_coefficient<R: QuadraticRing>() -> QuadInt<R> {
    let b = R::bond();
    let c = (b * R::ROOT_NORM).div_exact(QuadInt::from_int(b.norm())).expect("bond norm divides");
    -c
}

fn deltas<R: QuadraticRing>(d: &CoxeterDiagram) -> Vec<(usize, Vec<QuadInt<R>>)> {
    let colors = d.colors().expect("incidence graphs are colored");
    let c = delta_coefficient::<R>();
    (0..d.len())
        .filter(|&l| colors[l] == Color::White)
        .map(|l| {
            let mut v = vec![QuadInt::zero(); d.len()];
            v[l] = c;
            for p in indices(d.neighbors(l)) {
                v[p] = QuadInt::from_int(1);
            }
            (l, v)
        })
        .collect()
}

fn check_ring<R: QuadraticRing>(q: u32, report: &mut NullIdentityReport) -> Result<(), HermError> {
    let d = build_incidence(q)?;
    let lat: HermitianLattice<R> = gram_from_diagram(&d)?;
    let colors = d.require_colors()?.to_vec();
    let ds = deltas::<R>(&d);
    for (l, v) in &ds {
        for k in 0..d.len() {
            let mut e = vec![QuadInt::zero(); d.len()];
            e[k] = QuadInt::from_int(1);
            let got = lat.pair(v, &e);
            let want = if colors[k] == Color::Black { QuadInt::zero() } else { R::bond() };
            report.pairings_checked += 1;
            if got != want {
                report.failures.push(format!("<delta_{}, e_{}> = {got}, expected {want}", d.label(*l), d.label(k)));
            }
        }
    }
    let diffs: Vec<Vec<QuadInt<R>>> = ds[1..].iter().map(|(_, v)| linalg::vsub(v, &ds[0].1)).collect();
    report.differences_null = diffs.iter().all(|v| {
        (0..d.len()).all(|k| {
            let mut e = vec![QuadInt::zero(); d.len()];
            e[k] = QuadInt::from_int(1);
            lat.pair(v, &e).is_zero()
        })
    });
    let m = Mat::from_rows(diffs).to_field();
    report.span_dim = linalg::rank::<QuadRat<R>>(&m);
    report.radical_dim = lat.radical_dim();
    Ok(())
}

fn check_real(report: &mut NullIdentityReport) -> Result<(), HermError> {
    let d = build_incidence(3)?;
    let n = d.len();
    let g = crate::polytope::real_gram(&d);
    let colors = d.require_colors()?;
    for l in (0..n).filter(|&l| colors[l] == Color::White) {
        let mut v = vec![Sqrt3::zero(); n];
        v[l] = Sqrt3::sqrt3();
        for p in indices(d.neighbors(l)) {
            v[p] = Sqrt3::from(1);
        }
        let pairings = g.vec_mul(&v);
        for k in 0..n {
            let want = if colors[k] == Color::Black { Sqrt3::zero() } else { -Sqrt3::sqrt3() };
            report.real_pairings_checked += 1;
            if pairings[k] != want {
                report.failures.push(format!("<d_{}, e_{}> = {}, expected {want}", d.label(l), d.label(k), pairings[k]));
            }
        }
    }
    Ok(())
}

/// Verifies the null-vector identities for the incidence graph of P²(q):
/// over ℰ for q = 3 (plus the real form), over 𝒢 for q = 2.
pub fn incidence_null_identities(q: u32) -> Result<NullIdentityReport, HermError> {
    let mut report = NullIdentityReport {
        q,
        pairings_checked: 0,
        failures: vec![],
        span_dim: 0,
        radical_dim: 0,
        differences_null: false,
        real_pairings_checked: 0,
    };
    match q {
        3 => {
            check_ring::<EisensteinRing>(3, &mut report)?;
            check_real(&mut report)?;
        }
        2 => check_ring::<GaussRing>(2, &mut report)?,
        _ => return Err(HermError::Precondition("q in {2, 3}".into())),
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{theta, Gaussian};

    #[test]
    fn coefficients() {
        assert_eq!(delta_coefficient::<EisensteinRing>(), -theta());
        assert_eq!(delta_coefficient::<GaussRing>(), Gaussian::new(-1, -1));
    }

    #[test]
    fn q3() {
        let r = incidence_null_identities(3).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.pairings_checked, 13 * 26);
        assert_eq!(r.span_dim, 12);
        assert_eq!(r.radical_dim, 12);
        assert_eq!(r.real_pairings_checked, 13 * 26);
    }

    #[test]
    fn q2() {
        let r = incidence_null_identities(2).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.span_dim, 6);
    }
}
