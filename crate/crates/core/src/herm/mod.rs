//! Hermitian lattices over the Eisenstein and Gauss integers.
//!
//! Forms are linear in the first argument: `⟨x, y⟩ = xᵀ G ȳ` with
//! `G[i][j] = ⟨ε_i, ε_j⟩`.

mod mod2;
mod nullvec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagram::{Color, CoxeterDiagram, DiagramError};
use crate::linalg::{self, Mat};
use crate::scalar::{QuadInt, QuadRat, QuadraticRing};

pub use mod2::{reduce_mod_two, BinaryQuadraticSpace, QuadraticType};
pub use nullvec::{incidence_null_identities, NullIdentityReport};

#[derive(Debug, Error)]
pub enum HermError {
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error("Gram matrix is not Hermitian")]
    NotHermitian,
    #[error("expected a {0}")]
    Precondition(String),
    #[error("reduction mod (1+i) is degenerate; radical of b: {radical:?}")]
    DegenerateReduction { radical: Vec<u64> },
}

/// A lattice `Rⁿ` with a Hermitian form given by its Gram matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermitianLattice<R: QuadraticRing> {
    pub gram: Mat<QuadInt<R>>,
}

/// Invariants compared by [`invariants_match`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeInvariants {
    pub ring: String,
    pub rank: usize,
    pub radical_dim: usize,
    /// `(n₊, n₋)` of the nondegenerate quotient.
    pub signature: (usize, usize),
    /// Determinant of the quotient Gram. Hermitian, hence a rational
    /// integer; unit ambiguity does not arise.
    #[serde(with = "bigint_string")]
    pub det: BigInt,
    /// Number of root-norm vectors, for definite lattices.
    pub roots: Option<usize>,
}

mod bigint_string {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A nondegenerate quotient and the images of the original basis.
#[derive(Clone, Debug)]
pub struct Quotient<R: QuadraticRing> {
    pub lattice: HermitianLattice<R>,
    /// Row `i` holds the coordinates of the image of `ε_i`.
    pub projection: Mat<QuadInt<R>>,
    /// Indices of the original basis vectors spanning the quotient over the
    /// fraction field.
    pub pivots: Vec<usize>,
}

/// JSON dump of a lattice: `{ring, rank, gram}`.
#[derive(Serialize, Deserialize)]
pub struct LatticeDump<R: QuadraticRing> {
    pub ring: String,
    pub rank: usize,
    #[serde(bound = "")]
    pub gram: Vec<Vec<QuadInt<R>>>,
}

/// Gram matrix of a colored bipartite diagram: root norm on the diagonal,
/// the ring's bond for each black→white edge and its conjugate for the
/// reverse.
pub fn gram_from_diagram<R: QuadraticRing>(d: &CoxeterDiagram) -> Result<HermitianLattice<R>, HermError> {
    let colors = d.require_colors()?;
    let n = d.len();
    let mut g = Mat::zeros(n, n);
    for i in 0..n {
        g.set(i, i, QuadInt::from_int(R::ROOT_NORM));
    }
    for (a, b) in d.edges() {
        let (p, l) = if colors[a] == Color::Black { (a, b) } else { (b, a) };
        g.set(p, l, R::bond());
        g.set(l, p, R::bond().conj());
    }
    Ok(HermitianLattice { gram: g })
}

impl<R: QuadraticRing> HermitianLattice<R> {
    pub fn new(gram: Mat<QuadInt<R>>) -> Result<Self, HermError> {
        if !gram.is_square() || gram.adjoint() != gram {
            return Err(HermError::NotHermitian);
        }
        Ok(HermitianLattice { gram })
    }

    pub fn rank(&self) -> usize {
        self.gram.rows
    }

    pub fn ring(&self) -> &'static str {
        R::TAG
    }

    /// `⟨x, y⟩ = xᵀ G ȳ`.
    pub fn pair(&self, x: &[QuadInt<R>], y: &[QuadInt<R>]) -> QuadInt<R> {
        let gy: Vec<QuadInt<R>> = self.gram.mul_vec(&y.iter().map(|v| v.conj()).collect::<Vec<_>>());
        x.iter().zip(&gy).fold(QuadInt::zero(), |a, (u, v)| a + *u * *v)
    }

    pub fn norm(&self, x: &[QuadInt<R>]) -> i64 {
        let v = self.pair(x, x);
        debug_assert!(v.is_rational());
        v.a
    }

    pub fn field_gram(&self) -> Mat<QuadRat<R>> {
        self.gram.to_field()
    }

    /// Saturated basis of the radical `{x : ⟨x, ·⟩ = 0}`.
    pub fn radical(&self) -> Vec<Vec<QuadInt<R>>> {
        linalg::kernel(&self.field_gram().transpose())
            .iter()
            .map(|v| linalg::saturate(v))
            .collect()
    }

    pub fn radical_dim(&self) -> usize {
        self.rank() - linalg::rank(&self.field_gram())
    }

    /// The quotient by the radical, as a module generated by the images of
    /// all basis vectors.
    pub fn quotient(&self) -> Quotient<R> {
        let n = self.rank();
        let f = self.field_gram();
        let pivots = linalg::independent_rows(&f);
        let r = pivots.len();
        if r == n {
            return Quotient {
                lattice: self.clone(),
                projection: Mat::identity(n),
                pivots,
            };
        }
        // ε_i ≡ Σ c_ik ε_{b_k} modulo the radical, where row_i(G) = c_i · G_B.
        let gb = Mat::from_fn(r, n, |k, j| f.get(pivots[k], j).clone());
        let gbt = gb.transpose();
        let coeffs: Vec<Vec<QuadRat<R>>> = (0..n)
            .map(|i| linalg::solve(&gbt, f.row(i)).expect("row lies in the row space"))
            .collect();
        let den = coeffs
            .iter()
            .flatten()
            .fold(BigInt::from(1), |acc, x| num_integer::Integer::lcm(&acc, &x.denom()));
        let denq = QuadRat::<R>::from_rational(BigRational::from_integer(den.clone()));
        let mut rows: Vec<Vec<QuadInt<R>>> = coeffs
            .iter()
            .map(|c| {
                c.iter()
                    .map(|x| (x.clone() * denq.clone()).to_ring().expect("cleared coordinate fits in i64"))
                    .collect()
            })
            .collect();
        let piv = linalg::row_hnf(&mut rows, r);
        assert_eq!(piv.len(), r, "quotient module has full rank");
        let basis = Mat::from_fn(r, r, |i, j| QuadRat::from(rows[i][j]) / denq.clone());
        let gbb = f.principal(&pivots);
        let qgram = basis.mul(&gbb).mul(&basis.adjoint());
        let qgram = qgram.to_ring().expect("quotient Gram is integral");
        let binv = linalg::inverse(&basis).expect("basis is invertible");
        let cm = Mat::from_rows(coeffs);
        let projection = cm.mul(&binv).to_ring().expect("projected roots are integral");
        Quotient {
            lattice: HermitianLattice { gram: qgram },
            projection,
            pivots,
        }
    }

    /// Real symmetric matrix of `Re⟨·,·⟩` on the Z-basis `ε_j, g·ε_j`.
    pub fn realified(&self) -> Mat<BigRational> {
        let n = self.rank();
        let g = QuadInt::<R>::generator();
        let units = [QuadInt::<R>::from_int(1), g];
        Mat::from_fn(2 * n, 2 * n, |x, y| {
            let (j, s) = (x / 2, x % 2);
            let (k, t) = (y / 2, y % 2);
            let v = units[s] * units[t].conj() * *self.gram.get(j, k);
            BigRational::new(v.twice_real().into(), 2.into())
        })
    }

    /// Complex signature `(n₊, n₋, n₀)`.
    pub fn signature(&self) -> (usize, usize, usize) {
        let (p, m, z) = linalg::sym_signature(&self.realified());
        debug_assert!(p % 2 == 0 && m % 2 == 0 && z % 2 == 0);
        (p / 2, m / 2, z / 2)
    }

    pub fn is_positive_definite(&self) -> bool {
        self.signature() == (self.rank(), 0, 0)
    }

    /// Determinant of the Gram matrix, a rational integer.
    pub fn det(&self) -> BigInt {
        let d = linalg::det(&self.field_gram());
        assert!(d.is_rational() && d.a.is_integer(), "Hermitian determinant is an integer");
        d.a.to_integer()
    }

    pub fn invariants(&self) -> LatticeInvariants {
        let q = self.quotient();
        let (p, m, _) = q.lattice.signature();
        let roots = (m == 0 && q.lattice.rank() > 0).then(|| {
            crate::definite::short_vectors(&q.lattice, R::ROOT_NORM)
                .map(|inv| inv.count_of_norm(R::ROOT_NORM))
                .unwrap_or(0)
        });
        LatticeInvariants {
            ring: R::TAG.to_string(),
            rank: self.rank(),
            radical_dim: self.rank() - q.lattice.rank(),
            signature: (p, m),
            det: q.lattice.det(),
            roots,
        }
    }

    /// Orthogonal direct sum.
    pub fn direct_sum(&self, other: &HermitianLattice<R>) -> HermitianLattice<R> {
        let (a, b) = (self.rank(), other.rank());
        let g = Mat::from_fn(a + b, a + b, |i, j| {
            if i < a && j < a {
                *self.gram.get(i, j)
            } else if i >= a && j >= a {
                *other.gram.get(i - a, j - a)
            } else {
                QuadInt::zero()
            }
        });
        HermitianLattice { gram: g }
    }

    /// Lattice with basis permuted: new basis vector `k` is old `perm[k]`.
    pub fn permuted(&self, perm: &[usize]) -> HermitianLattice<R> {
        HermitianLattice {
            gram: self.gram.principal(perm),
        }
    }

    pub fn dump(&self) -> LatticeDump<R> {
        LatticeDump {
            ring: R::TAG.to_string(),
            rank: self.rank(),
            gram: self.gram.to_rows(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.dump()).expect("lattice dump serializes")
    }

    pub fn from_dump(d: LatticeDump<R>) -> Result<Self, HermError> {
        if d.ring != R::TAG {
            return Err(HermError::Precondition(format!("{} lattice", R::TAG)));
        }
        if d.gram.len() != d.rank || d.gram.iter().any(|r| r.len() != d.rank) {
            return Err(HermError::Precondition(format!("{0}x{0} Gram matrix", d.rank)));
        }
        HermitianLattice::new(Mat::from_rows(d.gram))
    }
}

/// Mismatching invariants, as human-readable lines. Empty means match.
pub fn invariants_match(a: &LatticeInvariants, b: &LatticeInvariants) -> Vec<String> {
    let mut out = Vec::new();
    if a.ring != b.ring {
        out.push(format!("ring {} vs {}", a.ring, b.ring));
    }
    let qa = a.rank - a.radical_dim;
    let qb = b.rank - b.radical_dim;
    if qa != qb {
        out.push(format!("quotient rank {qa} vs {qb}"));
    }
    if a.signature != b.signature {
        out.push(format!("signature {:?} vs {:?}", a.signature, b.signature));
    }
    if a.det != b.det {
        out.push(format!("determinant {} vs {}", a.det, b.det));
    }
    if a.roots.is_some() && b.roots.is_some() && a.roots != b.roots {
        out.push(format!("root count {:?} vs {:?}", a.roots, b.roots));
    }
    out
}

/// Determinant as `i64`, for reports.
pub fn det_i64(d: &BigInt) -> Option<i64> {
    d.to_i64()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{i14, i26};
    use crate::scalar::{theta, Eisenstein, EisensteinRing, GaussRing, Gaussian};
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    fn eis(name: &str) -> HermitianLattice<EisensteinRing> {
        gram_from_diagram(&CoxeterDiagram::by_name(name).unwrap()).unwrap()
    }

    fn gauss(name: &str) -> HermitianLattice<GaussRing> {
        gram_from_diagram(&CoxeterDiagram::by_name(name).unwrap()).unwrap()
    }

    #[test]
    fn a2_gram() {
        let l = eis("A2");
        let t = theta();
        assert_eq!(l.gram, Mat::from_rows(vec![vec![Eisenstein::from(3), t], vec![-t, Eisenstein::from(3)]]));
    }

    #[test]
    fn disjoint_nodes_are_orthogonal() {
        let d = CoxeterDiagram::parse_text("nodes: x:b y:b\nedges:").unwrap();
        let l: HermitianLattice<EisensteinRing> = gram_from_diagram(&d).unwrap();
        assert_eq!(l.gram, Mat::from_fn(2, 2, |i, j| Eisenstein::from(if i == j { 3 } else { 0 })));
    }

    #[test]
    fn uncolored_is_rejected() {
        let d = CoxeterDiagram::by_name("tildeA4").unwrap();
        assert!(matches!(
            gram_from_diagram::<EisensteinRing>(&d),
            Err(HermError::Diagram(DiagramError::ColoringRequired))
        ));
    }

    #[test]
    fn i14_gauss_gram() {
        let l: HermitianLattice<GaussRing> = gram_from_diagram(&i14()).unwrap();
        let nonzero = l.gram.data.iter().filter(|x| !x.is_zero()).count();
        assert_eq!(nonzero, 14 + 2 * 21);
        assert!(l.gram.data.iter().all(|x| x.is_zero() || *x == Gaussian::from(2) || x.norm() == 2));
    }

    #[test]
    fn kernel_dimension_table() {
        let expect = [0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1];
        for (n, &k) in (1..=11).zip(expect.iter()) {
            assert_eq!(eis(&format!("A{n}")).radical_dim(), k, "A{n}");
        }
        assert_eq!(eis("tildeA11").radical_dim(), 2);
        assert_eq!(eis("Y555").radical_dim(), 2);
        assert_eq!(gauss("Y333").radical_dim(), 2);
        let l: HermitianLattice<GaussRing> = gram_from_diagram(&i14()).unwrap();
        assert_eq!(l.radical_dim(), 6);
    }

    #[test]
    fn determinant_recurrence() {
        // D_n = 3 D_{n−1} − 3 D_{n−2}
        let expect = [1i64, 3, 6, 9, 9, 0, -27, -81, -162, -243, -243, 0];
        for n in 1..=11 {
            assert_eq!(eis(&format!("A{n}")).det(), BigInt::from(expect[n]), "A{n}");
        }
    }

    #[test]
    fn radical_vectors_are_null_and_primitive() {
        let l = eis("A5");
        let rad = l.radical();
        assert_eq!(rad.len(), 1);
        for j in 0..5 {
            let mut e = vec![Eisenstein::zero(); 5];
            e[j] = Eisenstein::from(1);
            assert!(l.pair(&rad[0], &e).is_zero());
        }
        assert_eq!(linalg::primitive(&rad[0]), rad[0]);
    }

    fn check_quotient<R: QuadraticRing>(l: &HermitianLattice<R>) -> Quotient<R> {
        let q = l.quotient();
        let p = &q.projection;
        // images reproduce every original pairing
        let back = p.mul(&q.lattice.gram).mul(&p.adjoint());
        assert_eq!(back, l.gram);
        assert_eq!(q.lattice.radical_dim(), 0);
        q
    }

    #[test]
    fn quotients() {
        let q = check_quotient(&gram_from_diagram::<EisensteinRing>(&i26()).unwrap());
        assert_eq!(q.lattice.rank(), 14);
        assert_eq!(q.lattice.signature(), (13, 1, 0));
        let q = check_quotient(&eis("tildeA11"));
        assert_eq!(q.lattice.rank(), 10);
        assert_eq!(q.lattice.signature(), (9, 1, 0));
        let l = eis("A4");
        let q = check_quotient(&l);
        assert_eq!(q.lattice, l);
        assert!(q.projection.is_identity());
        check_quotient(&eis("Y555"));
        check_quotient(&gauss("Y333"));
    }

    #[test]
    fn tilde_a11_images_alternate() {
        let d = CoxeterDiagram::by_name("tildeA11").unwrap();
        let l: HermitianLattice<EisensteinRing> = gram_from_diagram(&d).unwrap();
        let q = l.quotient();
        for i in 0..12 {
            let ei = q.projection.row(i);
            let ej = q.projection.row((i + 1) % 12);
            let expect = if i % 2 == 0 { theta() } else { -theta() };
            assert_eq!(q.lattice.pair(ei, ej), expect, "{i}");
            for k in 2..=10 {
                let ek = q.projection.row((i + k) % 12);
                assert!(q.lattice.pair(ei, ek).is_zero());
            }
        }
    }

    #[test]
    fn signatures() {
        assert_eq!(eis("A7").signature(), (6, 1, 0));
        assert_eq!(gauss("Y322").signature(), (7, 1, 0));
        assert_eq!(eis("Y544").signature(), (13, 1, 0));
        assert_eq!(eis("Y544").det(), BigInt::from(-2187));
        assert_eq!(gauss("Y322").det(), BigInt::from(-16));
        for n in 1..=11 {
            let l = eis(&format!("A{n}"));
            assert_eq!(l.signature(), linalg::hermitian_signature(&l.field_gram()), "A{n}");
        }
    }

    #[test]
    fn invariant_comparisons() {
        let a = eis("Y555").invariants();
        let b = eis("Y544").invariants();
        assert!(invariants_match(&a, &b).is_empty(), "{:?}", invariants_match(&a, &b));
        let c = gram_from_diagram::<EisensteinRing>(&i26()).unwrap().invariants();
        assert!(invariants_match(&a, &c).is_empty());
        let a3 = eis("A3").invariants();
        let sum = eis("A2").direct_sum(&eis("A1")).invariants();
        let diff = invariants_match(&a3, &sum);
        assert_eq!(diff, vec!["determinant 9 vs 18".to_string(), "root count Some(72) vs Some(30)".to_string()]);
    }

    #[test]
    fn signature_invariant_under_permutation_and_flip() {
        let d = i26();
        let l: HermitianLattice<EisensteinRing> = gram_from_diagram(&d).unwrap();
        let base = l.signature();
        assert_eq!(base, (13, 1, 12));
        let flipped: HermitianLattice<EisensteinRing> = gram_from_diagram(&d.flipped()).unwrap();
        assert_eq!(flipped.signature(), base);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let mut perm: Vec<usize> = (0..26).collect();
        for _ in 0..20 {
            perm.shuffle(&mut rng);
            assert_eq!(l.permuted(&perm).signature(), base);
        }
    }

    #[test]
    fn json_dump_round_trip() {
        let l = eis("A2");
        let s = l.to_json();
        assert_eq!(s, r#"{"ring":"eisenstein","rank":2,"gram":[[{"a":3,"b":0},{"a":1,"b":2}],[{"a":-1,"b":-2},{"a":3,"b":0}]]}"#);
        let back: LatticeDump<EisensteinRing> = serde_json::from_str(&s).unwrap();
        assert_eq!(HermitianLattice::from_dump(back).unwrap(), l);
        let wrong: LatticeDump<GaussRing> = serde_json::from_str(&s).unwrap();
        assert!(HermitianLattice::from_dump(wrong).is_err());
    }
}
