//! Schwarz–Christoffel polygons with real prevertices: singular edge
//! integrals, closure, reconstruction, and the area form on the space of
//! closed edge-length vectors.
//!
//! Floating point throughout.

use std::f64::consts::PI;
use std::num::NonZeroUsize;

use gauss_quad::{FiniteAboveNegOneF64, GaussJacobi};
use nalgebra::{DMatrix, DVector, SymmetricEigen};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

/// Nodes allowed per edge.
pub const NODE_BUDGET: usize = 2048;
pub const DEFAULT_TOL: f64 = 1e-8;

#[derive(Debug, Error, PartialEq)]
pub enum PolygonError {
    #[error("weights must lie in (0, 1) and sum to 2 (n ≥ 4), got {0:?}")]
    Weights(Vec<f64>),
    #[error("points must be strictly increasing and finite, got {0:?}")]
    Points(Vec<f64>),
    #[error("weights and points differ in length ({0} vs {1})")]
    Length(usize, usize),
    #[error("tolerance {0} is below 1e-12")]
    Tolerance(f64),
    #[error("edge {edge} did not converge within {budget} nodes (error estimate {estimate:e})")]
    NoConvergence { edge: usize, budget: usize, estimate: f64 },
    #[error("degenerate sampling: {0}")]
    Degenerate(String),
}

pub fn check_weights(mu: &[f64]) -> Result<(), PolygonError> {
    let sum: f64 = mu.iter().sum();
    if mu.len() < 4 || (sum - 2.0).abs() > 1e-12 || mu.iter().any(|&m| !(m > 0.0 && m < 1.0)) {
        return Err(PolygonError::Weights(mu.to_vec()));
    }
    Ok(())
}

pub fn check_points(z: &[f64]) -> Result<(), PolygonError> {
    if z.iter().any(|x| !x.is_finite()) || z.windows(2).any(|w| w[0] >= w[1]) {
        return Err(PolygonError::Points(z.to_vec()));
    }
    Ok(())
}

pub fn equal_weights(n: usize) -> Vec<f64> {
    vec![2.0 / n as f64; n]
}

/// `ω_j = exp(πi(μ₁ + ⋯ + μ_j))`.
pub fn phases(mu: &[f64]) -> Vec<Complex64> {
    let mut acc = 0.0;
    mu.iter()
        .map(|m| {
            acc += m;
            Complex64::from_polar(1.0, PI * acc)
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct PolygonData {
    pub mu: Vec<f64>,
    pub z: Vec<f64>,
    pub omega: Vec<(f64, f64)>,
    /// Edge integrals `w_j = ω_j l_j`.
    pub w: Vec<(f64, f64)>,
    pub lengths: Vec<f64>,
    /// Quadrature error estimate per edge.
    pub errors: Vec<f64>,
    pub vertices: Vec<(f64, f64)>,
    pub area: f64,
}

fn c(p: (f64, f64)) -> Complex64 {
    Complex64::new(p.0, p.1)
}

fn pair(z: Complex64) -> (f64, f64) {
    (z.re, z.im)
}

/// `∫_a^b (x−a)^β (b−x)^α f(x) dx` with `n` Gauss–Jacobi nodes.
fn jacobi(n: usize, a: f64, b: f64, alpha: f64, beta: f64, f: impl Fn(f64) -> f64) -> f64 {
    // even node counts only; odd counts misplace the middle node in gauss-quad 0.3
    let n = n + n % 2;
    let q = GaussJacobi::new(
        NonZeroUsize::new(n).unwrap(),
        FiniteAboveNegOneF64::new(alpha).unwrap(),
        FiniteAboveNegOneF64::new(beta).unwrap(),
    );
    let half = 0.5 * (b - a);
    half.powf(alpha + beta) * q.integrate(a, b, f)
}

/// Integrates with doubling node counts until two successive values agree
/// to `tol` relative to the value. Returns the value and the final change.
fn converge(
    edge: usize,
    tol: f64,
    pieces: usize,
    eval: impl Fn(usize) -> f64,
) -> Result<(f64, f64), PolygonError> {
    let mut n = 8;
    let mut prev = eval(n);
    let mut delta = f64::INFINITY;
    while pieces * 2 * n <= NODE_BUDGET {
        n *= 2;
        let cur = eval(n);
        delta = (cur - prev).abs();
        if delta <= tol * cur.abs().max(1.0) {
            return Ok((cur, delta));
        }
        prev = cur;
    }
    Err(PolygonError::NoConvergence {
        edge,
        budget: NODE_BUDGET,
        estimate: delta,
    })
}

/// Length of edge `j` (0-based): `∫ Π|s − z_k|^{−μ_k} ds` over
/// `[z_j, z_{j+1}]`, or through infinity for the last edge.
pub fn edge_length(z: &[f64], mu: &[f64], j: usize, tol: f64) -> Result<(f64, f64), PolygonError> {
    let n = z.len();
    if j + 1 < n {
        let (a, b) = (z[j], z[j + 1]);
        let m = 0.5 * (a + b);
        let smooth = move |s: f64, skip: usize| -> f64 {
            (0..n)
                .filter(|&k| k != skip)
                .map(|k| (s - z[k]).abs().powf(-mu[k]))
                .product()
        };
        converge(j, tol, 2, |deg| {
            jacobi(deg, a, m, 0.0, -mu[j], |s| smooth(s, j))
                + jacobi(deg, m, b, -mu[j + 1], 0.0, |s| smooth(s, j + 1))
        })
    } else {
        // s = z_n + u/(1−u) and s = z_1 − u/(1−u); the weights sum to 2
        let last = n - 1;
        let g1 = |u: f64| -> f64 {
            (0..last)
                .map(|k| (u + (z[last] - z[k]) * (1.0 - u)).powf(-mu[k]))
                .product()
        };
        let g2 = |u: f64| -> f64 {
            (1..n)
                .map(|k| (u + (z[k] - z[0]) * (1.0 - u)).powf(-mu[k]))
                .product()
        };
        converge(j, tol, 2, |deg| {
            jacobi(deg, 0.0, 1.0, 0.0, -mu[last], g1) + jacobi(deg, 0.0, 1.0, 0.0, -mu[0], g2)
        })
    }
}

fn shoelace(v: &[Complex64]) -> f64 {
    let n = v.len();
    0.5 * (0..n).map(|i| (v[i].conj() * v[(i + 1) % n]).im).sum::<f64>()
}

/// Edge integrals, lengths and the reconstructed polygon (first vertex at
/// the origin).
pub fn edge_integrals(z: &[f64], mu: &[f64], tol: f64) -> Result<PolygonData, PolygonError> {
    check_weights(mu)?;
    check_points(z)?;
    if z.len() != mu.len() {
        return Err(PolygonError::Length(mu.len(), z.len()));
    }
    if tol < 1e-12 {
        return Err(PolygonError::Tolerance(tol));
    }
    let n = z.len();
    let le: Vec<(f64, f64)> = (0..n)
        .into_par_iter()
        .map(|j| edge_length(z, mu, j, tol))
        .collect::<Result<_, _>>()?;
    let lengths: Vec<f64> = le.iter().map(|x| x.0).collect();
    let om = phases(mu);
    let w: Vec<Complex64> = om.iter().zip(&lengths).map(|(o, l)| o * l).collect();
    let mut v = vec![Complex64::new(0.0, 0.0)];
    for e in &w[..n - 1] {
        let last = *v.last().unwrap();
        v.push(last + e);
    }
    Ok(PolygonData {
        mu: mu.to_vec(),
        z: z.to_vec(),
        omega: om.into_iter().map(pair).collect(),
        w: w.into_iter().map(pair).collect(),
        lengths,
        errors: le.iter().map(|x| x.1).collect(),
        area: shoelace(&v),
        vertices: v.into_iter().map(pair).collect(),
    })
}

impl PolygonData {
    /// `(|Σ ω_j l_j|, |Σ ω̄_j l_j|)`.
    pub fn closure_residuals(&self) -> (f64, f64) {
        closure_residuals(&self.mu, &self.lengths)
    }

    /// Interior angles from the vertex positions; the closing edge runs
    /// from the last vertex back to the first.
    pub fn interior_angles(&self) -> Vec<f64> {
        let v: Vec<Complex64> = self.vertices.iter().copied().map(c).collect();
        let n = v.len();
        (0..n)
            .map(|j| {
                let into = v[j] - v[(j + n - 1) % n];
                let out = v[(j + 1) % n] - v[j];
                PI - (out / into).arg()
            })
            .collect()
    }

    pub fn to_svg(&self) -> String {
        polygon_svg(&self.vertices)
    }
}

pub fn closure_residuals(mu: &[f64], l: &[f64]) -> (f64, f64) {
    let om = phases(mu);
    let s: Complex64 = om.iter().zip(l).map(|(o, x)| o * x).sum();
    let t: Complex64 = om.iter().zip(l).map(|(o, x)| o.conj() * x).sum();
    (s.norm(), t.norm())
}

/// SVG of a polygon scaled into a 400×400 viewport.
pub fn polygon_svg(vertices: &[(f64, f64)]) -> String {
    let (mut x0, mut y0, mut x1, mut y1) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
    for &(x, y) in vertices {
        x0 = x0.min(x);
        y0 = y0.min(y);
        x1 = x1.max(x);
        y1 = y1.max(y);
    }
    let scale = 360.0 / (x1 - x0).max(y1 - y0).max(f64::MIN_POSITIVE);
    let pts: Vec<String> = vertices
        .iter()
        .map(|&(x, y)| format!("{:.4},{:.4}", 20.0 + (x - x0) * scale, 380.0 - (y - y0) * scale))
        .collect();
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 400 400\" width=\"400\" height=\"400\">\n  <polygon points=\"{}\" fill=\"#dde6f0\" stroke=\"#1f3b5a\" stroke-width=\"2\"/>\n</svg>\n",
        pts.join(" ")
    )
}

/// Symmetric matrix of the shoelace area as a quadratic form in the edge
/// lengths. Only meaningful on closed length vectors.
pub fn area_matrix(mu: &[f64]) -> DMatrix<f64> {
    let om = phases(mu);
    let n = mu.len();
    DMatrix::from_fn(n, n, |i, j| {
        let (a, b) = (i.min(j), i.max(j));
        if a == b {
            0.0
        } else {
            0.25 * (om[a].conj() * om[b]).im
        }
    })
}

pub fn area_of(mu: &[f64], l: &[f64]) -> f64 {
    let q = area_matrix(mu);
    let v = DVector::from_column_slice(l);
    v.dot(&(&q * &v))
}

fn closure_rows(mu: &[f64]) -> DMatrix<f64> {
    let om = phases(mu);
    DMatrix::from_fn(2, mu.len(), |r, j| if r == 0 { om[j].re } else { om[j].im })
}

/// Projection of `l` onto the closure subspace.
fn project_closed(p: &DMatrix<f64>, pinv: &DMatrix<f64>, l: &DVector<f64>) -> DVector<f64> {
    l - pinv * (p * l)
}

#[derive(Clone, Debug, Serialize)]
pub struct AreaSignature {
    pub dim: usize,
    /// Sign counts of `−Q` on the closure subspace: (positive, negative, zero).
    pub signature: (usize, usize, usize),
    pub eigenvalues: Vec<f64>,
    pub samples: usize,
}

/// Signature of minus the area form on the closure subspace, from a basis
/// built by Gram–Schmidt on random closed vectors.
pub fn area_form(mu: &[f64], samples: usize, seed: u64) -> Result<AreaSignature, PolygonError> {
    check_weights(mu)?;
    if samples < 200 {
        return Err(PolygonError::Degenerate(format!("{samples} samples, need at least 200")));
    }
    let n = mu.len();
    let p = closure_rows(mu);
    let ppt = (&p * p.transpose()).try_inverse().ok_or_else(|| PolygonError::Degenerate("closure rows dependent".into()))?;
    let pinv = p.transpose() * ppt;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut basis: Vec<DVector<f64>> = Vec::new();
    for _ in 0..samples {
        if basis.len() == n - 2 {
            break;
        }
        let r = DVector::from_fn(n, |_, _| rng.gen_range(-1.0..1.0));
        let mut v = project_closed(&p, &pinv, &r);
        for b in &basis {
            v -= b * b.dot(&v);
        }
        let norm = v.norm();
        if norm > 1e-6 {
            basis.push(v / norm);
        }
    }
    if basis.len() != n - 2 {
        return Err(PolygonError::Degenerate(format!("spanned only {} dimensions", basis.len())));
    }
    let b = DMatrix::from_columns(&basis);
    let restricted = -(b.transpose() * area_matrix(mu) * &b);
    let restricted = 0.5 * (&restricted + restricted.transpose());
    let eig = SymmetricEigen::new(restricted);
    let mut ev: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    ev.sort_by(|a, b| b.partial_cmp(a).unwrap());
    let eps = 1e-10 * ev.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    let signature = (
        ev.iter().filter(|&&x| x > eps).count(),
        ev.iter().filter(|&&x| x < -eps).count(),
        ev.iter().filter(|&&x| x.abs() <= eps).count(),
    );
    Ok(AreaSignature {
        dim: n - 2,
        signature,
        eigenvalues: ev,
        samples,
    })
}

/// A random valid configuration: `n` weights in `[0.05, 0.95]` summing to
/// 2 and increasing points with gaps at least 0.1.
pub fn random_configuration(rng: &mut impl Rng, n: usize) -> (Vec<f64>, Vec<f64>) {
    let mu = loop {
        let raw: Vec<f64> = (0..n).map(|_| rng.gen_range(0.2..1.0)).collect();
        let s: f64 = raw.iter().sum();
        let mu: Vec<f64> = raw.iter().map(|x| 2.0 * x / s).collect();
        if mu.iter().all(|&m| (0.05..=0.95).contains(&m)) {
            let fix = 2.0 - mu[..n - 1].iter().sum::<f64>();
            let mut mu = mu;
            mu[n - 1] = fix;
            if check_weights(&mu).is_ok() {
                break mu;
            }
        }
    };
    let mut z = Vec::with_capacity(n);
    let mut x = rng.gen_range(-3.0..0.0);
    for _ in 0..n {
        z.push(x);
        x += rng.gen_range(0.1..1.5);
    }
    (mu, z)
}

/// Prevertices of the regular `n`-gon with equal weights in closed form:
/// `z_k = tan(−π/2 + π(2k−1)/(2n))`.
pub fn regular_points(n: usize) -> Vec<f64> {
    (1..=n)
        .map(|k| (-PI / 2.0 + PI * (2 * k - 1) as f64 / (2 * n) as f64).tan())
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct RegularSolve {
    pub z: Vec<f64>,
    pub lengths: Vec<f64>,
    pub iterations: usize,
    pub spread: f64,
}

/// Gauss–Newton on `l_j / l_1 = 1` with equal weights, keeping the first
/// three points fixed to remove the affine and inversion freedom.
pub fn solve_regular(n: usize, start: &[f64], tol: f64) -> Result<RegularSolve, PolygonError> {
    let mu = equal_weights(n);
    let residual = |z: &[f64]| -> Result<DVector<f64>, PolygonError> {
        let l: Vec<f64> = (0..n).map(|j| edge_length(z, &mu, j, 1e-13).map(|x| x.0)).collect::<Result<_, _>>()?;
        Ok(DVector::from_fn(n - 1, |i, _| l[i + 1] / l[0] - 1.0))
    };
    let mut z = start.to_vec();
    for it in 0..50 {
        check_points(&z)?;
        let r = residual(&z)?;
        if r.amax() < tol {
            let lengths = (0..n).map(|j| edge_length(&z, &mu, j, 1e-13).map(|x| x.0)).collect::<Result<Vec<_>, _>>()?;
            let lo = lengths.iter().cloned().fold(f64::MAX, f64::min);
            let hi = lengths.iter().cloned().fold(f64::MIN, f64::max);
            return Ok(RegularSolve {
                z,
                spread: (hi - lo) / lo,
                lengths,
                iterations: it,
            });
        }
        let free = n - 3;
        let mut jac = DMatrix::zeros(n - 1, free);
        for k in 0..free {
            let h = 1e-7 * z[k + 3].abs().max(1.0);
            let mut zp = z.clone();
            zp[k + 3] += h;
            let rp = residual(&zp)?;
            jac.set_column(k, &((rp - &r) / h));
        }
        let step = jac
            .svd(true, true)
            .solve(&r, 1e-12)
            .map_err(|e| PolygonError::Degenerate(e.to_string()))?;
        for k in 0..free {
            z[k + 3] -= step[k];
        }
    }
    Err(PolygonError::Degenerate("Gauss–Newton did not converge".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::Rng;

    fn rect() -> PolygonData {
        edge_integrals(&[-1.0, 0.0, 1.0, 2.0], &[0.5; 4], DEFAULT_TOL).unwrap()
    }

    #[test]
    fn jacobi_scaling() {
        // ∫_0^1 x^{-1/2} dx = 2, ∫_2^3 (3−x)^{-1/3} dx = 3/2
        assert!((jacobi(8, 0.0, 1.0, 0.0, -0.5, |_| 1.0) - 2.0).abs() < 1e-12);
        assert!((jacobi(8, 2.0, 3.0, -1.0 / 3.0, 0.0, |_| 1.0) - 1.5).abs() < 1e-12);
        // ∫_0^2 x^{-1/2}(2−x)^{-1/2} dx = π
        assert!((jacobi(8, 0.0, 2.0, -0.5, -0.5, |_| 1.0) - PI).abs() < 1e-12);
    }

    #[test]
    fn rectangle() {
        let d = rect();
        for a in d.interior_angles() {
            assert!((a - PI / 2.0).abs() < 1e-8, "{a}");
        }
        let (r1, r2) = d.closure_residuals();
        assert!(r1 <= 1e-8 && r2 <= 1e-8);
        // opposite sides of a rectangle agree
        assert!((d.lengths[0] - d.lengths[2]).abs() < 1e-8);
        assert!((d.lengths[1] - d.lengths[3]).abs() < 1e-8);
        assert!(d.area > 0.0);
        assert!((d.area - area_of(&d.mu, &d.lengths)).abs() < 1e-8);
    }

    #[test]
    fn rectangle_against_adaptive_oracle() {
        // ∫_{-1}^{0} |s+1|^{-1/2}|s|^{-1/2}|s-1|^{-1/2}|s-2|^{-1/2} ds by
        // substitution s = −1 + t², then s = −t² near 0, both halves midpoint
        // refined
        let f = |s: f64| [(s + 1.0), s, (s - 1.0), (s - 2.0)].iter().map(|x| x.abs().powf(-0.5)).product::<f64>();
        let n = 200_000;
        let mut total = 0.0;
        let h = (0.5f64).sqrt() / n as f64;
        for i in 0..n {
            let t = (i as f64 + 0.5) * h;
            total += f(-1.0 + t * t) * 2.0 * t * h;
            total += f(-t * t) * 2.0 * t * h;
        }
        assert!((total - rect().lengths[0]).abs() < 1e-6, "{total}");
    }

    #[test]
    fn twelve_equal_weights() {
        let z: Vec<f64> = (1..=12).map(|k| k as f64).collect();
        let d = edge_integrals(&z, &equal_weights(12), 1e-10).unwrap();
        let (r1, r2) = d.closure_residuals();
        assert!(r1 <= 1e-6 && r2 <= 1e-6, "{r1} {r2}");
        for a in d.interior_angles() {
            assert!((a - 5.0 * PI / 6.0).abs() < 1e-6);
        }
    }

    #[test]
    fn perturbation_is_detected() {
        let mut l = rect().lengths;
        l[1] += 1e-3;
        let (r1, _) = closure_residuals(&[0.5; 4], &l);
        assert!(r1 >= 1e-4);
    }

    #[test]
    fn signatures() {
        assert_eq!(area_form(&equal_weights(12), 200, 7).unwrap().signature, (9, 1, 0));
        assert_eq!(area_form(&[0.5; 4], 200, 7).unwrap().signature, (1, 1, 0));
    }

    #[test]
    fn cyclic_relabelling() {
        let mu = [0.3, 0.5, 0.2, 0.4, 0.3, 0.3];
        let z = [-2.0, -1.0, 0.5, 1.0, 3.0, 4.0];
        let d = edge_integrals(&z, &mu, DEFAULT_TOL).unwrap();
        let a = area_of(&mu, &d.lengths);
        for s in 1..6 {
            let m: Vec<f64> = (0..6).map(|i| mu[(i + s) % 6]).collect();
            let l: Vec<f64> = (0..6).map(|i| d.lengths[(i + s) % 6]).collect();
            assert!((area_of(&m, &l) - a).abs() < 1e-10);
        }
    }

    #[test]
    fn invalid_inputs() {
        assert!(matches!(edge_integrals(&[0.0, 1.0, 2.0, 3.0], &[0.5, 0.5, 0.5, 0.6], 1e-8), Err(PolygonError::Weights(_))));
        assert!(matches!(edge_integrals(&[0.0, 1.0, 1.0, 3.0], &[0.5; 4], 1e-8), Err(PolygonError::Points(_))));
        assert!(matches!(edge_integrals(&[0.0, 1.0, 2.0, 3.0], &[0.5; 4], 1e-14), Err(PolygonError::Tolerance(_))));
    }

    #[test]
    fn regular_dodecagon() {
        let exact = regular_points(12);
        let start: Vec<f64> = exact.iter().enumerate().map(|(k, x)| if k < 3 { *x } else { x + 0.01 * ((k * 7 % 5) as f64 - 2.0) }).collect();
        let s = solve_regular(12, &start, 1e-9).unwrap();
        assert!(s.spread < 1e-6);
        for (a, b) in s.z.iter().zip(&exact) {
            assert!((a - b).abs() < 1e-6, "{a} {b}");
        }
    }

    #[test]
    fn svg_has_all_vertices() {
        let svg = rect().to_svg();
        assert!(svg.starts_with("<svg"));
        let pts = svg.split("points=\"").nth(1).unwrap().split('"').next().unwrap();
        assert_eq!(pts.split(' ').count(), 4);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]
        #[test]
        fn random_configs_close_with_positive_area(seed in any::<u64>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let n = rng.gen_range(4..=12);
            let (mu, z) = random_configuration(&mut rng, n);
            let d = edge_integrals(&z, &mu, DEFAULT_TOL).unwrap();
            let (r1, r2) = d.closure_residuals();
            prop_assert!(r1 < 1e-6 && r2 < 1e-6);
            prop_assert!(area_of(&mu, &d.lengths) > 0.0);
            prop_assert!(d.lengths.iter().all(|&l| l > 0.0));
        }

        #[test]
        fn affine_rescaling_scales_lengths(a in 0.2f64..5.0, b in -3.0f64..3.0) {
            let mu = [0.3, 0.7, 0.4, 0.6];
            let z = [-1.0, 0.2, 1.0, 2.5];
            let z2: Vec<f64> = z.iter().map(|x| a * x + b).collect();
            let l1 = edge_integrals(&z, &mu, 1e-10).unwrap().lengths;
            let l2 = edge_integrals(&z2, &mu, 1e-10).unwrap().lengths;
            let r0 = l2[0] / l1[0];
            for i in 1..4 {
                prop_assert!((l2[i] / l1[i] - r0).abs() < 1e-8 * r0.max(1.0));
            }
        }
    }
}
