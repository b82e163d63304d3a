//! Positive definite lattices: short vectors, mirror counts, the rank-5
//! extension search, and orthogonal complements of sublattices.

use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::herm::HermitianLattice;
use crate::linalg::{self, Mat};
use crate::scalar::{omega, theta, Eisenstein, QuadInt, QuadraticRing};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DefiniteError {
    #[error("lattice is not positive definite")]
    NotDefinite,
    #[error("bound must be at least 1")]
    Bound,
    #[error("sublattice is degenerate")]
    DegenerateSublattice,
}

/// Vectors of norm at most `bound`, in canonical order (norm, then
/// coordinates).
#[derive(Clone, Debug)]
pub struct RootInventory<R: QuadraticRing> {
    pub rank: usize,
    pub bound: i64,
    pub vectors: Vec<(i64, Vec<QuadInt<R>>)>,
}

impl<R: QuadraticRing> RootInventory<R> {
    pub fn count_of_norm(&self, n: i64) -> usize {
        self.vectors.iter().filter(|(k, _)| *k == n).count()
    }

    /// Root vectors up to unit scaling.
    pub fn mirror_count(&self) -> usize {
        self.count_of_norm(R::ROOT_NORM) / R::UNIT_COUNT
    }
}

/// `A = Σ q_ii (x_i + Σ_{j>i} q_ij x_j)²` decomposition of a positive
/// definite rational form.
fn cholesky_q(a: &Mat<BigRational>) -> Mat<BigRational> {
    let n = a.rows;
    let mut q = a.clone();
    for i in 0..n {
        for j in i + 1..n {
            let v = q.get(i, j).clone();
            q.set(j, i, v.clone());
            q.set(i, j, v / q.get(i, i).clone());
        }
        for k in i + 1..n {
            for l in k..n {
                let v = q.get(k, l).clone() - q.get(k, i).clone() * q.get(i, l).clone();
                q.set(k, l, v);
            }
        }
    }
    q
}

/// All integer vectors `x ≠ 0` with `xᵀ A x ≤ bound` for a positive
/// definite rational symmetric `A`. Exact: floating point only proposes
/// candidate ranges, every candidate is tested in rationals.
pub fn fincke_pohst(a: &Mat<BigRational>, bound: &BigRational) -> Vec<Vec<i64>> {
    let n = a.rows;
    let q = cholesky_q(a);
    let mut out = Vec::new();
    let mut x = vec![0i64; n];
    fn rec(q: &Mat<BigRational>, i: usize, rem: BigRational, x: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        let n = x.len();
        let mut u = BigRational::zero();
        for j in i + 1..n {
            u += q.get(i, j).clone() * BigRational::from_integer(x[j].into());
        }
        let qii = q.get(i, i).clone();
        let c = -u.clone();
        let cf = c.to_f64().unwrap();
        let rf = (rem.to_f64().unwrap() / qii.to_f64().unwrap()).max(0.0).sqrt();
        let lo = (cf - rf).floor() as i64 - 1;
        let hi = (cf + rf).ceil() as i64 + 1;
        for xi in lo..=hi {
            let t = BigRational::from_integer(xi.into()) + u.clone();
            let used = qii.clone() * t.clone() * t;
            if used > rem {
                continue;
            }
            x[i] = xi;
            let left = rem.clone() - used;
            if i == 0 {
                if x.iter().any(|&v| v != 0) {
                    out.push(x.clone());
                }
            } else {
                rec(q, i - 1, left, x, out);
            }
        }
        x[i] = 0;
    }
    if n > 0 {
        rec(&q, n - 1, bound.clone(), &mut x, &mut out);
    }
    out
}

/// Every lattice vector `v` with `0 < ⟨v,v⟩ ≤ bound`.
pub fn short_vectors<R: QuadraticRing>(lat: &HermitianLattice<R>, bound: i64) -> Result<RootInventory<R>, DefiniteError> {
    if bound < 1 {
        return Err(DefiniteError::Bound);
    }
    if !lat.is_positive_definite() {
        return Err(DefiniteError::NotDefinite);
    }
    let a = lat.realified();
    let raw = fincke_pohst(&a, &BigRational::from_integer(bound.into()));
    let mut vectors: Vec<(i64, Vec<QuadInt<R>>)> = raw
        .into_iter()
        .map(|x| {
            let v: Vec<QuadInt<R>> = x.chunks(2).map(|c| QuadInt::new(c[0], c[1])).collect();
            (lat.norm(&v), v)
        })
        .collect();
    vectors.sort();
    Ok(RootInventory {
        rank: lat.rank(),
        bound,
        vectors,
    })
}

/// Number of mirrors: root-norm vectors up to units.
pub fn mirror_count<R: QuadraticRing>(lat: &HermitianLattice<R>) -> Result<usize, DefiniteError> {
    Ok(short_vectors(lat, R::ROOT_NORM)?.mirror_count())
}

/// Eisenstein integers of norm at most `bound`, sorted.
pub fn eisenstein_ball(bound: i64) -> Vec<Eisenstein> {
    let r = (bound as f64).sqrt().ceil() as i64 * 2 + 1;
    let mut out: Vec<Eisenstein> = (-r..=r)
        .flat_map(|a| (-r..=r).map(move |b| Eisenstein::new(a, b)))
        .filter(|x| x.norm() <= bound)
        .collect();
    out.sort();
    out
}

/// Gram of `L⁴` extended by `ε₅` with `⟨ε_i, ε₅⟩ = c_i·θ`. The `L⁴` chain
/// carries `⟨ε_i, ε_{i+1}⟩ = θ`.
pub fn lemma_gram(c: [Eisenstein; 4]) -> Mat<Eisenstein> {
    let t = theta();
    let mut g = Mat::zeros(5, 5);
    for i in 0..5 {
        g.set(i, i, Eisenstein::from(3));
    }
    for i in 0..3 {
        g.set(i, i + 1, t);
        g.set(i + 1, i, t.conj());
    }
    for i in 0..4 {
        g.set(i, 4, c[i] * t);
        g.set(4, i, (c[i] * t).conj());
    }
    g
}

/// The determinant divided by 9, in the unsimplified form with
/// `a = yθ − x`, `b = zθ + w`.
pub fn lemma_expression(c: [Eisenstein; 4]) -> Eisenstein {
    let [x, y, z, w] = c;
    let t = theta();
    let a = y * t - x;
    let b = z * t + w;
    Eisenstein::from(3 - x.norm() - w.norm() - 2 * a.norm() - 2 * b.norm()) - t * a * b.conj() + t * b * a.conj()
}

/// The same expression as a sum of norms: `3 − N(x) − N(w) − N(a − bω) −
/// N(a + bω̄)`.
pub fn lemma_norm_form(c: [Eisenstein; 4]) -> i64 {
    let [x, y, z, w] = c;
    let t = theta();
    let a = y * t - x;
    let b = z * t + w;
    3 - x.norm() - w.norm() - (a - b * omega()).norm() - (a + b * omega().conj()).norm()
}

#[derive(Clone, Debug, Serialize)]
pub struct LemmaReport {
    pub bound: i64,
    pub candidates: usize,
    /// Coefficient tuples `(x, y, z, w)` giving a positive definite Gram.
    pub positive_definite: Vec<[Eisenstein; 4]>,
    /// Candidates where `det ≠ 9·expression`.
    pub det_mismatches: Vec<[Eisenstein; 4]>,
    /// Candidates where the sum-of-norms form disagrees with the expression.
    pub norm_form_mismatches: Vec<[Eisenstein; 4]>,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.positive_definite == vec![[Eisenstein::zero(); 4]]
            && self.det_mismatches.is_empty()
            && self.norm_form_mismatches.is_empty()
    }
}

/// Exhaustive search over `(x, y, z, w)` with every norm at most `bound`.
pub fn lemma_search(bound: i64) -> LemmaReport {
    let ball = eisenstein_ball(bound);
    let k = ball.len();
    let total = k.pow(4);
    struct Row {
        c: [Eisenstein; 4],
        pd: bool,
        det_ok: bool,
        form_ok: bool,
    }
    let rows: Vec<Row> = (0..total)
        .into_par_iter()
        .map(|idx| {
            let c = [ball[idx / (k * k * k)], ball[(idx / (k * k)) % k], ball[(idx / k) % k], ball[idx % k]];
            let g = lemma_gram(c);
            let minors = linalg::leading_minors(&g);
            let pd = minors.len() == 5 && minors.iter().all(|m| m.is_rational() && m.a > 0);
            let det = if minors.len() == 5 { minors[4] } else { Eisenstein::zero() };
            let expr = lemma_expression(c);
            Row {
                c,
                pd,
                det_ok: det == expr * 9,
                form_ok: expr == Eisenstein::from(lemma_norm_form(c)),
            }
        })
        .collect();
    LemmaReport {
        bound,
        candidates: total,
        positive_definite: rows.iter().filter(|r| r.pd).map(|r| r.c).collect(),
        det_mismatches: rows.iter().filter(|r| !r.det_ok).map(|r| r.c).collect(),
        norm_form_mismatches: rows.iter().filter(|r| !r.form_ok).map(|r| r.c).collect(),
    }
}

#[derive(Clone, Debug)]
pub struct Complement<R: QuadraticRing> {
    /// Basis of the complement in ambient coordinates.
    pub basis: Vec<Vec<QuadInt<R>>>,
    pub lattice: HermitianLattice<R>,
    pub signature: (usize, usize, usize),
    pub mirrors: Option<usize>,
}

/// Saturated orthogonal complement of the sublattice spanned by `sub`
/// (rows in ambient coordinates), with its mirror count when definite.
pub fn ortho_complement_roots<R: QuadraticRing>(
    ambient: &HermitianLattice<R>,
    sub: &[Vec<QuadInt<R>>],
) -> Result<Complement<R>, DefiniteError> {
    let n = ambient.rank();
    let s = Mat::from_rows(sub.to_vec());
    if !sub.is_empty() {
        // the sublattice must be nondegenerate
        let sg = s.mul(&ambient.gram).mul(&s.adjoint());
        let sl = HermitianLattice { gram: sg };
        let r = linalg::rank(&s.to_field());
        if linalg::rank(&sl.field_gram()) != r {
            return Err(DefiniteError::DegenerateSublattice);
        }
    }
    // x ⊥ s_j ⇔ xᵀ G s̄_j = 0
    let basis = if sub.is_empty() {
        (0..n)
            .map(|i| (0..n).map(|j| QuadInt::from_int((i == j) as i64)).collect())
            .collect()
    } else {
        linalg::left_kernel(&ambient.gram.mul(&s.adjoint()))
    };
    let k = Mat::from_rows(basis.clone());
    let gram = if basis.is_empty() {
        Mat::zeros(0, 0)
    } else {
        k.mul(&ambient.gram).mul(&k.adjoint())
    };
    let lattice = HermitianLattice { gram };
    let signature = lattice.signature();
    let mirrors = if lattice.rank() > 0 && signature.0 == lattice.rank() {
        Some(mirror_count(&lattice)?)
    } else {
        None
    };
    Ok(Complement {
        basis,
        lattice,
        signature,
        mirrors,
    })
}
