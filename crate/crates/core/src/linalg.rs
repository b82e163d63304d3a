//! Dense matrices, exact elimination over a [`Field`], symmetric signatures
//! over an [`OrderedField`], and Hermite normal forms over the Euclidean
//! rings.

use std::ops::{Add, Mul, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::scalar::{Field, OrderedField, QuadInt, QuadRat, QuadraticRing, Sign};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Mat<T> {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<T>,
}

impl<T: Clone> Mat<T> {
    pub fn filled(rows: usize, cols: usize, v: T) -> Self {
        Mat {
            rows,
            cols,
            data: vec![v; rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged matrix rows");
        Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut T {
        &mut self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Mat::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map<U: Clone>(&self, f: impl Fn(&T) -> U) -> Mat<U> {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// The submatrix on the given row and column index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Mat::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    /// Principal submatrix on an index list.
    pub fn principal(&self, idx: &[usize]) -> Self {
        self.select(idx, idx)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }
}

impl<T: Clone + Zero + One> Mat<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat::filled(rows, cols, T::zero())
    }

    pub fn identity(n: usize) -> Self {
        Mat::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn is_identity(&self) -> bool
    where
        T: PartialEq,
    {
        self.is_square() && *self == Mat::identity(self.rows)
    }
}

impl<T: Clone + Zero + Add<Output = T> + Mul<Output = T>> Mat<T> {
    pub fn mul(&self, o: &Mat<T>) -> Mat<T> {
        assert_eq!(self.cols, o.rows, "matrix product dimension mismatch");
        let mut out = Vec::with_capacity(self.rows * o.cols);
        for i in 0..self.rows {
            for j in 0..o.cols {
                let mut acc = T::zero();
                for k in 0..self.cols {
                    acc = acc + self.get(i, k).clone() * o.get(k, j).clone();
                }
                out.push(acc);
            }
        }
        Mat {
            rows: self.rows,
            cols: o.cols,
            data: out,
        }
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.rows, v.len());
        (0..self.cols)
            .map(|j| {
                (0..self.rows).fold(T::zero(), |acc, i| acc + v[i].clone() * self.get(i, j).clone())
            })
            .collect()
    }

    pub fn pow(&self, k: u32) -> Mat<T>
    where
        T: One,
    {
        let mut out = Mat::identity(self.rows);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }
}

impl<R: QuadraticRing> Mat<QuadInt<R>> {
    pub fn conj(&self) -> Self {
        self.map(|x| x.conj())
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        self.transpose().conj()
    }

    pub fn to_field(&self) -> Mat<QuadRat<R>> {
        self.map(|x| QuadRat::from(*x))
    }
}

impl<R: QuadraticRing> Mat<QuadRat<R>> {
    pub fn conj(&self) -> Self {
        self.map(|x| x.conj())
    }

    pub fn adjoint(&self) -> Self {
        self.transpose().conj()
    }

    /// The ring matrix with the same entries, when all are integral.
    pub fn to_ring(&self) -> Option<Mat<QuadInt<R>>> {
        let data = self.data.iter().map(|x| x.to_ring()).collect::<Option<Vec<_>>>()?;
        Some(Mat {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }
}

/// Reduced row echelon form and the pivot columns.
pub fn rref<T: Field>(m: &Mat<T>) -> (Mat<T>, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..a.cols {
        if r == a.rows {
            break;
        }
        let Some(p) = (r..a.rows).find(|&i| !a.get(i, c).is_zero()) else {
            continue;
        };
        swap_rows(&mut a, r, p);
        let inv = T::one() / a.get(r, c).clone();
        for j in c..a.cols {
            let v = a.get(r, j).clone() * inv.clone();
            a.set(r, j, v);
        }
        for i in 0..a.rows {
            if i == r || a.get(i, c).is_zero() {
                continue;
            }
            let f = a.get(i, c).clone();
            for j in c..a.cols {
                let v = a.get(i, j).clone() - f.clone() * a.get(r, j).clone();
                a.set(i, j, v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

fn swap_rows<T>(a: &mut Mat<T>, i: usize, j: usize) {
    if i == j {
        return;
    }
    let c = a.cols;
    for k in 0..c {
        a.data.swap(i * c + k, j * c + k);
    }
}

pub fn rank<T: Field>(m: &Mat<T>) -> usize {
    rref(m).1.len()
}

/// Basis of `{x : M x = 0}`. Each basis vector has a 1 at its own free
/// column and 0 at the other free columns.
pub fn kernel<T: Field>(m: &Mat<T>) -> Vec<Vec<T>> {
    let (r, pivots) = rref(m);
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![T::zero(); m.cols];
            v[f] = T::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(row, f).clone();
            }
            v
        })
        .collect()
}

/// One solution of `M x = b`, or `None` when the system is inconsistent.
pub fn solve<T: Field>(m: &Mat<T>, b: &[T]) -> Option<Vec<T>> {
    assert_eq!(m.rows, b.len());
    let aug = Mat::from_fn(m.rows, m.cols + 1, |i, j| {
        if j < m.cols {
            m.get(i, j).clone()
        } else {
            b[i].clone()
        }
    });
    let (r, pivots) = rref(&aug);
    if pivots.last() == Some(&m.cols) {
        return None;
    }
    let mut x = vec![T::zero(); m.cols];
    for (row, &p) in pivots.iter().enumerate() {
        x[p] = r.get(row, m.cols).clone();
    }
    Some(x)
}

pub fn det<T: Field>(m: &Mat<T>) -> T {
    assert!(m.is_square());
    let mut a = m.clone();
    let n = a.rows;
    let mut d = T::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a.get(i, c).is_zero()) else {
            return T::zero();
        };
        if p != c {
            swap_rows(&mut a, c, p);
            d = -d;
        }
        let piv = a.get(c, c).clone();
        d = d * piv.clone();
        for i in c + 1..n {
            if a.get(i, c).is_zero() {
                continue;
            }
            let f = a.get(i, c).clone() / piv.clone();
            for j in c..n {
                let v = a.get(i, j).clone() - f.clone() * a.get(c, j).clone();
                a.set(i, j, v);
            }
        }
    }
    d
}

pub fn inverse<T: Field>(m: &Mat<T>) -> Option<Mat<T>> {
    assert!(m.is_square());
    let n = m.rows;
    let aug = Mat::from_fn(n, 2 * n, |i, j| {
        if j < n {
            m.get(i, j).clone()
        } else if j - n == i {
            T::one()
        } else {
            T::zero()
        }
    });
    let (r, pivots) = rref(&aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(Mat::from_fn(n, n, |i, j| r.get(i, n + j).clone()))
}

/// Indices of the leftmost maximal linearly independent set of rows.
pub fn independent_rows<T: Field>(m: &Mat<T>) -> Vec<usize> {
    let (_, pivots) = rref(&m.transpose());
    pivots
}

/// Inertia `(n₊, n₋, n₀)` of a symmetric matrix, by congruence elimination.
pub fn sym_signature<T: OrderedField>(m: &Mat<T>) -> (usize, usize, usize) {
    assert!(m.is_square());
    let mut a = m.clone();
    let mut live: Vec<usize> = (0..a.rows).collect();
    let (mut pos, mut neg) = (0, 0);
    while !live.is_empty() {
        let diag = live.iter().position(|&i| !a.get(i, i).is_zero());
        let k = match diag {
            Some(k) => k,
            None => {
                // All diagonal entries vanish: e_i += e_j turns a nonzero
                // off-diagonal entry into a nonzero diagonal one.
                let hit = live.iter().enumerate().find_map(|(x, &i)| {
                    live.iter()
                        .find(|&&j| j != i && !a.get(i, j).is_zero())
                        .map(|&j| (x, i, j))
                });
                let Some((x, i, j)) = hit else { break };
                for &t in &live {
                    let v = a.get(i, t).clone() + a.get(j, t).clone();
                    a.set(i, t, v);
                }
                for &t in &live {
                    let v = a.get(t, i).clone() + a.get(t, j).clone();
                    a.set(t, i, v);
                }
                x
            }
        };
        let p = live.swap_remove(k);
        let piv = a.get(p, p).clone();
        match piv.sign() {
            Sign::Positive => pos += 1,
            Sign::Negative => neg += 1,
            Sign::Zero => unreachable!(),
        }
        for &i in &live {
            if a.get(i, p).is_zero() {
                continue;
            }
            let f = a.get(i, p).clone() / piv.clone();
            for &j in &live {
                let v = a.get(i, j).clone() - f.clone() * a.get(p, j).clone();
                a.set(i, j, v);
            }
        }
    }
    let n = m.rows;
    (pos, neg, n - pos - neg)
}

/// Row Hermite normal form over a Euclidean quadratic ring, pivoting only on
/// the first `pivot_cols` columns. Returns the pivot `(row, column)` pairs.
///
/// Pivots are normalised to their canonical associate, entries above a
/// pivot are reduced modulo it, and rows below the last pivot are zero in
/// the pivot columns.
pub fn row_hnf<R: QuadraticRing>(a: &mut Vec<Vec<QuadInt<R>>>, pivot_cols: usize) -> Vec<(usize, usize)> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..pivot_cols {
        if r == a.len() {
            break;
        }
        loop {
            let best = (r..a.len())
                .filter(|&i| !a[i][c].is_zero())
                .min_by_key(|&i| (a[i][c].norm(), i));
            let Some(b) = best else { break };
            a.swap(r, b);
            let mut clean = true;
            for i in r + 1..a.len() {
                if a[i][c].is_zero() {
                    continue;
                }
                let (q, rem) = a[i][c].div_rem(a[r][c]);
                row_axpy(a, i, r, q);
                if !rem.is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if r < a.len() && !a[r][c].is_zero() {
            let (_, u) = a[r][c].canonical_associate();
            for x in a[r].iter_mut() {
                *x = *x * u;
            }
            for i in 0..r {
                if a[i][c].is_zero() {
                    continue;
                }
                let (q, _) = a[i][c].div_rem(a[r][c]);
                row_axpy(a, i, r, q);
            }
            pivots.push((r, c));
            r += 1;
        }
    }
    pivots
}

/// `row_i -= q · row_r`.
fn row_axpy<R: QuadraticRing>(a: &mut [Vec<QuadInt<R>>], i: usize, r: usize, q: QuadInt<R>) {
    if q.is_zero() {
        return;
    }
    let (src, dst) = if i < r {
        let (lo, hi) = a.split_at_mut(r);
        (&hi[0], &mut lo[i])
    } else {
        let (lo, hi) = a.split_at_mut(i);
        (&lo[r], &mut hi[0])
    };
    for (d, s) in dst.iter_mut().zip(src.iter()) {
        *d = *d - q * *s;
    }
}

/// Basis of the module `{x ∈ Rⁿ : x A = 0}` for an `n × m` ring matrix `A`.
///
/// The result is saturated: it is the full left kernel inside `Rⁿ`, not
/// just a finite-index submodule.
pub fn left_kernel<R: QuadraticRing>(a: &Mat<QuadInt<R>>) -> Vec<Vec<QuadInt<R>>> {
    let n = a.rows;
    let m = a.cols;
    let mut aug: Vec<Vec<QuadInt<R>>> = (0..n)
        .map(|i| {
            let mut row = a.row(i).to_vec();
            row.extend((0..n).map(|j| if i == j { QuadInt::one() } else { QuadInt::zero() }));
            row
        })
        .collect();
    let pivots = row_hnf(&mut aug, m);
    let mut rest: Vec<Vec<QuadInt<R>>> = aug[pivots.len()..].iter().map(|row| row[m..].to_vec()).collect();
    // Tidy the kernel basis itself into echelon form.
    let k = rest.first().map_or(0, |r| r.len());
    row_hnf(&mut rest, k);
    rest
}

/// Scales a field vector to coprime ring coordinates.
///
/// The result is a ring multiple of the input, primitive (the coordinates
/// have unit gcd), with the first nonzero coordinate canonical.
pub fn saturate<R: QuadraticRing>(v: &[QuadRat<R>]) -> Vec<QuadInt<R>> {
    use num_integer::Integer;
    let d = v.iter().fold(num_bigint::BigInt::one(), |acc, x| acc.lcm(&x.denom()));
    let dq = QuadRat::<R>::from_rational(num_rational::BigRational::from_integer(d));
    let w: Vec<QuadInt<R>> = v
        .iter()
        .map(|x| {
            (x.clone() * dq.clone())
                .to_ring()
                .expect("saturated coordinate exceeds i64")
        })
        .collect();
    primitive(&w)
}

/// Divides a ring vector by the gcd of its entries and normalises the first
/// nonzero entry to its canonical associate.
pub fn primitive<R: QuadraticRing>(w: &[QuadInt<R>]) -> Vec<QuadInt<R>> {
    let g = w.iter().fold(QuadInt::zero(), |acc, x| QuadInt::gcd(acc, *x));
    if g.is_zero() {
        return w.to_vec();
    }
    let mut out: Vec<QuadInt<R>> = w.iter().map(|x| x.div_exact(g).expect("gcd divides")).collect();
    if let Some(first) = out.iter().find(|x| !x.is_zero()) {
        let (_, u) = first.canonical_associate();
        for x in out.iter_mut() {
            *x = *x * u;
        }
    }
    out
}

/// Hermitian inertia computed by direct elimination over the fraction field.
/// Used to cross-check the realified computation.
pub fn hermitian_signature<R: QuadraticRing>(m: &Mat<QuadRat<R>>) -> (usize, usize, usize) {
    assert!(m.is_square());
    let mut a = m.clone();
    let mut live: Vec<usize> = (0..a.rows).collect();
    let (mut pos, mut neg) = (0, 0);
    while !live.is_empty() {
        let k = match live.iter().position(|&i| !a.get(i, i).is_zero()) {
            Some(k) => k,
            None => {
                let hit = live.iter().enumerate().find_map(|(x, &i)| {
                    live.iter()
                        .find(|&&j| j != i && !a.get(i, j).is_zero())
                        .map(|&j| (x, i, j))
                });
                let Some((x, i, j)) = hit else { break };
                // e_i += c·e_j with c = conj(a_ij)/|a_ij|² ·... any c with
                // Re(c·a_ji) ≠ 0 works; c = a_ij does: 2·Re(a_ij·a_ji)=2|a_ij|².
                let c = a.get(i, j).clone();
                for &t in &live {
                    let v = a.get(i, t).clone() + c.clone() * a.get(j, t).clone();
                    a.set(i, t, v);
                }
                for &t in &live {
                    let v = a.get(t, i).clone() + a.get(t, j).clone() * c.conj();
                    a.set(t, i, v);
                }
                x
            }
        };
        let p = live.swap_remove(k);
        let piv = a.get(p, p).clone();
        debug_assert!(piv.is_rational());
        match crate::scalar::OrderedField::sign(&piv.a) {
            Sign::Positive => pos += 1,
            Sign::Negative => neg += 1,
            Sign::Zero => unreachable!(),
        }
        for &i in &live {
            if a.get(i, p).is_zero() {
                continue;
            }
            let f = a.get(i, p).clone() / piv.clone();
            for &j in &live {
                let v = a.get(i, j).clone() - f.clone() * a.get(p, j).clone();
                a.set(i, j, v);
            }
        }
    }
    let n = m.rows;
    (pos, neg, n - pos - neg)
}

/// Leading principal minors `d_1, …, d_k` of a square ring matrix by
/// fraction-free (Bareiss) elimination without pivoting. Stops after the
/// first zero minor, so the result is shorter than `n` exactly when some
/// leading minor vanishes.
pub fn leading_minors<R: QuadraticRing>(m: &Mat<QuadInt<R>>) -> Vec<QuadInt<R>> {
    assert!(m.is_square());
    let n = m.rows;
    let mut a = m.clone();
    let mut prev = QuadInt::<R>::one();
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let piv = *a.get(k, k);
        out.push(piv);
        if piv.is_zero() {
            break;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = piv * *a.get(i, j) - *a.get(i, k) * *a.get(k, j);
                a.set(i, j, v.div_exact(prev).expect("Bareiss division is exact"));
            }
        }
        prev = piv;
    }
    out
}

/// Sum of two equally sized vectors.
pub fn vadd<T: Clone + Add<Output = T>>(a: &[T], b: &[T]) -> Vec<T> {
    a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect()
}

pub fn vsub<T: Clone + Sub<Output = T>>(a: &[T], b: &[T]) -> Vec<T> {
    a.iter().zip(b).map(|(x, y)| x.clone() - y.clone()).collect()
}

pub fn vscale<T: Clone + Mul<Output = T>>(k: &T, a: &[T]) -> Vec<T> {
    a.iter().map(|x| k.clone() * x.clone()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q, theta, Eisenstein, EisensteinRing, Sqrt3};
    use num_rational::BigRational;
    use proptest::prelude::*;

    fn qm(rows: Vec<Vec<i64>>) -> Mat<BigRational> {
        Mat::from_rows(rows).map(|&x| q(x))
    }

    #[test]
    fn identity_solve_returns_rhs() {
        let id: Mat<BigRational> = Mat::identity(3);
        let b = vec![q(4), q(-1), q(7)];
        assert_eq!(solve(&id, &b), Some(b));
    }

    #[test]
    fn kernel_of_one_one() {
        let k = kernel(&qm(vec![vec![1, 1]]));
        assert_eq!(k, vec![vec![q(-1), q(1)]]);
    }

    #[test]
    fn inconsistent_system() {
        let m = qm(vec![vec![1, 1], vec![2, 2]]);
        assert_eq!(solve(&m, &[q(1), q(3)]), None);
    }

    #[test]
    fn signature_without_diagonal() {
        // hyperbolic plane: zero diagonal
        let m = qm(vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(sym_signature(&m), (1, 1, 0));
        let m = qm(vec![vec![0, 0, 1], vec![0, 0, 0], vec![1, 0, 0]]);
        assert_eq!(sym_signature(&m), (1, 1, 1));
    }

    #[test]
    fn signature_over_sqrt3() {
        // chain A_2 with weights 3, −√3
        let s = -Sqrt3::sqrt3();
        let m = Mat::from_rows(vec![vec![Sqrt3::from(3), s.clone()], vec![s, Sqrt3::from(3)]]);
        assert_eq!(sym_signature(&m), (2, 0, 0));
    }

    #[test]
    fn hermitian_signature_zero_diagonal() {
        let t = QuadRat::from(theta());
        let z = QuadRat::<EisensteinRing>::zero();
        let m = Mat::from_rows(vec![vec![z.clone(), t.clone()], vec![t.conj(), z]]);
        assert_eq!(hermitian_signature(&m), (1, 1, 0));
    }

    #[test]
    fn left_kernel_is_saturated() {
        // x·[θ; θ] = 0  ⇒ kernel spanned by (1, −1), not (θ, −θ)
        let a = Mat::from_rows(vec![vec![theta()], vec![theta()]]);
        let k = left_kernel(&a);
        assert_eq!(k.len(), 1);
        assert_eq!(primitive(&k[0]), primitive(&[Eisenstein::new(1, 0), Eisenstein::new(-1, 0)]));
    }

    #[test]
    fn hnf_generates_same_module() {
        let e = |a, b| Eisenstein::new(a, b);
        let mut rows = vec![vec![e(3, 0), e(1, 2)], vec![e(1, 2), e(0, 0)], vec![e(0, 0), e(3, 0)]];
        let piv = row_hnf(&mut rows, 2);
        assert_eq!(piv.len(), 2);
        // the three rows span θ·R² ... (θ, 0) and (0, θ) up to units
        assert!(rows[2].iter().all(|x| x.is_zero()));
        assert_eq!(rows[0][0].norm(), 3);
        assert_eq!(rows[1][1].norm(), 3);
    }

    proptest! {
        #[test]
        fn signature_matches_diagonal_congruence(d in proptest::collection::vec(-3i64..=3, 1..7),
                                                 seed in proptest::collection::vec(-2i64..=2, 49)) {
            let n = d.len();
            // P·D·Pᵀ with unit upper-triangular P has the inertia of D.
            let p = Mat::from_fn(n, n, |i, j| if i == j { q(1) } else if i < j { q(seed[i * 7 + j]) } else { q(0) });
            let dm = Mat::from_fn(n, n, |i, j| if i == j { q(d[i]) } else { q(0) });
            let m = p.mul(&dm).mul(&p.transpose());
            let expect = (d.iter().filter(|&&x| x > 0).count(), d.iter().filter(|&&x| x < 0).count(),
                          d.iter().filter(|&&x| x == 0).count());
            prop_assert_eq!(sym_signature(&m), expect);
        }
    }
}
