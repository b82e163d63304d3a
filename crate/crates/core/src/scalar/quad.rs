//! Imaginary quadratic integers `a + b·g` where the generator satisfies
//! `g² = P + Q·g`. Two rings are used: the Eisenstein integers (`g = ω`)
//! and the Gauss integers (`g = i`).

use std::fmt;
use std::hash::Hash;
use std::marker::PhantomData;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

/// Compile-time description of an imaginary quadratic ring.
pub trait QuadraticRing:
    Copy + Clone + fmt::Debug + PartialEq + Eq + Hash + Ord + Send + Sync + 'static
{
    /// Constant term of the generator's minimal relation `g² = P + Q·g`.
    const P: i64;
    /// Linear coefficient of the generator's minimal relation.
    const Q: i64;
    /// Number of units in the ring.
    const UNIT_COUNT: usize;
    /// Norm of a root: 3 for Eisenstein lattices, 2 for Gauss lattices.
    const ROOT_NORM: i64;
    /// Short tag used in serialized output.
    const TAG: &'static str;
    /// Symbol printed for the generator.
    const SYMBOL: &'static str;

    /// Off-diagonal Gram entry for a bond oriented black to white.
    fn bond() -> QuadInt<Self>;

    /// The reflection eigenvalue: ω for triflections, i for tetraflections.
    fn zeta() -> QuadInt<Self> {
        QuadInt::new(0, 1)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EisensteinRing {}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GaussRing {}

impl QuadraticRing for EisensteinRing {
    const P: i64 = -1;
    const Q: i64 = -1;
    const UNIT_COUNT: usize = 6;
    const ROOT_NORM: i64 = 3;
    const TAG: &'static str = "eisenstein";
    const SYMBOL: &'static str = "w";

    /// θ = ω − ω̄ = 1 + 2ω.
    fn bond() -> QuadInt<Self> {
        QuadInt::new(1, 2)
    }
}

impl QuadraticRing for GaussRing {
    const P: i64 = -1;
    const Q: i64 = 0;
    const UNIT_COUNT: usize = 4;
    const ROOT_NORM: i64 = 2;
    const TAG: &'static str = "gauss";
    const SYMBOL: &'static str = "i";

    fn bond() -> QuadInt<Self> {
        QuadInt::new(1, 1)
    }
}

/// An element `a + b·g` of the ring `R`.
///
/// Arithmetic is checked: an `i64` overflow panics instead of wrapping.
#[derive(Serialize, Deserialize)]
#[serde(bound = "")]
pub struct QuadInt<R> {
    pub a: i64,
    pub b: i64,
    #[serde(skip)]
    _ring: PhantomData<fn() -> R>,
}

pub type Eisenstein = QuadInt<EisensteinRing>;
pub type Gaussian = QuadInt<GaussRing>;

impl<R> Clone for QuadInt<R> {
    fn clone(&self) -> Self {
        *self
    }
}
impl<R> Copy for QuadInt<R> {}
impl<R> PartialEq for QuadInt<R> {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a && self.b == other.b
    }
}
impl<R> Eq for QuadInt<R> {}
impl<R> Hash for QuadInt<R> {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.a.hash(state);
        self.b.hash(state);
    }
}
impl<R> PartialOrd for QuadInt<R> {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
/// Lexicographic on `(a, b)`; only used for canonical orderings.
impl<R> Ord for QuadInt<R> {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.a, self.b).cmp(&(other.a, other.b))
    }
}

fn ck(v: Option<i64>) -> i64 {
    v.expect("quadratic integer arithmetic overflowed i64")
}

impl<R: QuadraticRing> QuadInt<R> {
    pub const fn new(a: i64, b: i64) -> Self {
        QuadInt {
            a,
            b,
            _ring: PhantomData,
        }
    }

    pub const fn from_int(a: i64) -> Self {
        Self::new(a, 0)
    }

    pub fn generator() -> Self {
        Self::new(0, 1)
    }

    /// Complex conjugate: conj(g) = Q − g.
    pub fn conj(self) -> Self {
        Self::new(ck(self.a.checked_add(ck(self.b.checked_mul(R::Q)))), -self.b)
    }

    /// `x · conj(x) = a² + Q·ab − P·b²`.
    pub fn norm(self) -> i64 {
        let aa = ck(self.a.checked_mul(self.a));
        let ab = ck(ck(self.a.checked_mul(self.b)).checked_mul(R::Q));
        let bb = ck(ck(self.b.checked_mul(self.b)).checked_mul(R::P));
        ck(ck(aa.checked_add(ab)).checked_sub(bb))
    }

    /// Real part `a + b·Q/2`, returned doubled so that it stays integral.
    pub fn twice_real(self) -> i64 {
        ck(ck(self.a.checked_mul(2)).checked_add(ck(self.b.checked_mul(R::Q))))
    }

    /// True when the value is a real integer.
    pub fn is_rational(self) -> bool {
        self.b == 0
    }

    /// All units of the ring, starting with 1 and listed as powers of a
    /// primitive unit.
    pub fn units() -> Vec<Self> {
        let primitive = match R::UNIT_COUNT {
            6 => Self::new(1, 1), // −ω² = 1 + ω, a primitive sixth root of unity
            4 => Self::new(0, 1),
            n => unreachable!("unsupported unit group of order {n}"),
        };
        let mut out = Vec::with_capacity(R::UNIT_COUNT);
        let mut u = Self::one();
        for _ in 0..R::UNIT_COUNT {
            out.push(u);
            u = u * primitive;
        }
        out
    }

    pub fn is_unit(self) -> bool {
        self.norm() == 1
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(self, d: Self) -> Option<Self> {
        let n = d.norm();
        if n == 0 {
            return None;
        }
        let num = self * d.conj();
        if num.a % n == 0 && num.b % n == 0 {
            Some(Self::new(num.a / n, num.b / n))
        } else {
            None
        }
    }

    pub fn divides(self, x: Self) -> bool {
        if self.is_zero() {
            return x.is_zero();
        }
        x.div_exact(self).is_some()
    }

    /// Euclidean division: `self = q·d + r` with `norm(r) < norm(d)`.
    ///
    /// The quotient rounds each coordinate of `self/d` to the nearest integer,
    /// which leaves a remainder of norm at most 3/4 (Eisenstein) or 1/2
    /// (Gauss) of `norm(d)`.
    pub fn div_rem(self, d: Self) -> (Self, Self) {
        let n = d.norm();
        assert!(n != 0, "Euclidean division by zero");
        let num = self * d.conj();
        let q = Self::new(round_div(num.a, n), round_div(num.b, n));
        let r = self - q * d;
        debug_assert!(r.norm() < n);
        (q, r)
    }

    pub fn gcd(mut x: Self, mut y: Self) -> Self {
        while !y.is_zero() {
            let (_, r) = x.div_rem(y);
            x = y;
            y = r;
        }
        x.canonical_associate().0
    }

    /// The associate of `self` lying in the canonical sector, together with
    /// the unit `u` such that `self · u` is that associate.
    ///
    /// Canonical sector: argument in `[0, 2π/k)` where `k` is the number of
    /// units (first sextant for ℰ, first quadrant for 𝒢).
    pub fn canonical_associate(self) -> (Self, Self) {
        if self.is_zero() {
            return (self, Self::one());
        }
        for u in Self::units() {
            let v = self * u;
            if v.in_canonical_sector() {
                return (v, u);
            }
        }
        unreachable!("no associate in canonical sector for {self}")
    }

    fn in_canonical_sector(self) -> bool {
        // Work with 2·(re, im/√|P'|) to stay integral.
        match R::UNIT_COUNT {
            // a + bω = (a − b/2) + (b√3/2)i; sector arg ∈ [0, π/3):
            // im ≥ 0 and im < √3·re  ⇔  b ≥ 0 and b < 2a − b (when a > 0).
            6 => self.b >= 0 && self.b < 2 * self.a - self.b,
            // a + bi; arg ∈ [0, π/2): a > 0 and b ≥ 0.
            4 => self.a > 0 && self.b >= 0,
            _ => unreachable!(),
        }
    }

    /// Approximate complex value, for display and floating-point checks.
    pub fn to_complex(self) -> num_complex::Complex64 {
        let g = match R::UNIT_COUNT {
            6 => num_complex::Complex64::new(-0.5, 3f64.sqrt() / 2.0),
            _ => num_complex::Complex64::new(0.0, 1.0),
        };
        num_complex::Complex64::new(self.a as f64, 0.0) + g * self.b as f64
    }
}

fn round_div(n: i64, d: i64) -> i64 {
    debug_assert!(d > 0);
    // nearest integer to n/d, ties toward +∞
    (2 * n + d).div_euclid(2 * d)
}

impl<R: QuadraticRing> Zero for QuadInt<R> {
    fn zero() -> Self {
        Self::new(0, 0)
    }
    fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }
}

impl<R: QuadraticRing> One for QuadInt<R> {
    fn one() -> Self {
        Self::new(1, 0)
    }
}

impl<R: QuadraticRing> Default for QuadInt<R> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<R: QuadraticRing> Add for QuadInt<R> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(ck(self.a.checked_add(o.a)), ck(self.b.checked_add(o.b)))
    }
}

impl<R: QuadraticRing> Sub for QuadInt<R> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(ck(self.a.checked_sub(o.a)), ck(self.b.checked_sub(o.b)))
    }
}

impl<R: QuadraticRing> Neg for QuadInt<R> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(ck(self.a.checked_neg()), ck(self.b.checked_neg()))
    }
}

impl<R: QuadraticRing> Mul for QuadInt<R> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        // (a + bg)(c + dg) = ac + (ad + bc)g + bd·g², g² = P + Qg
        let ac = ck(self.a.checked_mul(o.a));
        let bd = ck(self.b.checked_mul(o.b));
        let cross = ck(ck(self.a.checked_mul(o.b)).checked_add(ck(self.b.checked_mul(o.a))));
        Self::new(
            ck(ac.checked_add(ck(bd.checked_mul(R::P)))),
            ck(cross.checked_add(ck(bd.checked_mul(R::Q)))),
        )
    }
}

impl<R: QuadraticRing> Mul<i64> for QuadInt<R> {
    type Output = Self;
    fn mul(self, k: i64) -> Self {
        Self::new(ck(self.a.checked_mul(k)), ck(self.b.checked_mul(k)))
    }
}

impl<R: QuadraticRing> AddAssign for QuadInt<R> {
    fn add_assign(&mut self, o: Self) {
        *self = *self + o;
    }
}

impl<R: QuadraticRing> SubAssign for QuadInt<R> {
    fn sub_assign(&mut self, o: Self) {
        *self = *self - o;
    }
}

impl<R: QuadraticRing> From<i64> for QuadInt<R> {
    fn from(a: i64) -> Self {
        Self::from_int(a)
    }
}

impl<R: QuadraticRing> fmt::Display for QuadInt<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, 1) => write!(f, "{}", R::SYMBOL),
            (0, -1) => write!(f, "-{}", R::SYMBOL),
            (0, b) => write!(f, "{b}{}", R::SYMBOL),
            (a, 1) => write!(f, "{a}+{}", R::SYMBOL),
            (a, -1) => write!(f, "{a}-{}", R::SYMBOL),
            (a, b) if b > 0 => write!(f, "{a}+{b}{}", R::SYMBOL),
            (a, b) => write!(f, "{a}{b}{}", R::SYMBOL),
        }
    }
}

impl<R: QuadraticRing> fmt::Debug for QuadInt<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// θ = √−3 as an Eisenstein integer.
pub fn theta() -> Eisenstein {
    EisensteinRing::bond()
}

/// ω as an Eisenstein integer.
pub fn omega() -> Eisenstein {
    Eisenstein::generator()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn e(a: i64, b: i64) -> Eisenstein {
        Eisenstein::new(a, b)
    }

    #[test]
    fn omega_relations() {
        let w = omega();
        assert_eq!(w * w + w + Eisenstein::one(), Eisenstein::zero());
        assert_eq!(w * w.conj(), Eisenstein::one());
        assert_eq!(w.conj(), w * w);
        assert_eq!(w - w.conj(), theta());
    }

    #[test]
    fn theta_squared_is_minus_three() {
        assert_eq!(theta() * theta(), e(-3, 0));
        assert_eq!(theta().norm(), 3);
    }

    #[test]
    fn omega_minus_one_times_theta_over_three() {
        let x = (omega() - Eisenstein::one()) * theta();
        assert_eq!(x.div_exact(e(3, 0)), Some(omega().conj()));
    }

    #[test]
    fn inexact_division_reports_none() {
        assert_eq!(e(1, 0).div_exact(theta()), None);
        assert_eq!(e(2, 0).div_exact(Gaussian::new(1, 1).a.into()), Some(e(1, 0) * 2));
        let g = Gaussian::new(1, 1);
        assert_eq!(Gaussian::new(2, 0).div_exact(g), Some(Gaussian::new(1, -1)));
        assert_eq!(Gaussian::new(1, 0).div_exact(g), None);
    }

    #[test]
    fn gauss_basics() {
        let i = Gaussian::generator();
        assert_eq!(i * i, Gaussian::new(-1, 0));
        assert_eq!(i.conj(), -i);
        assert_eq!(Gaussian::units().len(), 4);
        assert_eq!(Eisenstein::units().len(), 6);
        assert!(Eisenstein::units().iter().all(|u| u.is_unit()));
    }

    #[test]
    fn canonical_associates_are_unique() {
        for a in -4..=4 {
            for b in -4..=4 {
                let x = e(a, b);
                if x.is_zero() {
                    continue;
                }
                let hits = Eisenstein::units()
                    .into_iter()
                    .filter(|u| (x * *u).in_canonical_sector())
                    .count();
                assert_eq!(hits, 1, "{x}");
                let g = Gaussian::new(a, b);
                let hits = Gaussian::units()
                    .into_iter()
                    .filter(|u| (g * *u).in_canonical_sector())
                    .count();
                assert_eq!(hits, 1, "{g}");
            }
        }
    }

    #[test]
    fn display() {
        assert_eq!(theta().to_string(), "1+2w");
        assert_eq!(e(0, -1).to_string(), "-w");
        assert_eq!(Gaussian::new(1, 1).to_string(), "1+i");
    }

    // 2aā + 2bb̄ + θab̄ − θbā as a sum of two norms. The cross terms need
    // units u, v with u + v = θ, so the second norm is N(a + bω̄), not
    // N(a + bω).
    fn lemma_lhs(a: Eisenstein, b: Eisenstein) -> Eisenstein {
        let t = theta();
        a * a.conj() * 2 + b * b.conj() * 2 + t * a * b.conj() - t * b * a.conj()
    }

    fn lemma_identity_holds(a: Eisenstein, b: Eisenstein) -> bool {
        let w = omega();
        let p = a - b * w;
        let q = a + b * w.conj();
        lemma_lhs(a, b) == Eisenstein::from(p.norm() + q.norm())
    }

    #[test]
    fn literal_second_norm_with_omega_fails() {
        let (a, b) = (-omega(), Eisenstein::one());
        let w = omega();
        assert_eq!(lemma_lhs(a, b), e(7, 0));
        assert_eq!((a - b * w).norm() + (a + b * w).norm(), 4);
        assert!(lemma_identity_holds(a, b));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(10_000))]

        #[test]
        fn eisenstein_norm_and_conj_multiplicative(a in -1000i64..1000, b in -1000i64..1000,
                                                    c in -1000i64..1000, d in -1000i64..1000) {
            let x = e(a, b);
            let y = e(c, d);
            prop_assert_eq!((x * y).norm(), x.norm() * y.norm());
            prop_assert_eq!((x * y).conj(), x.conj() * y.conj());
            prop_assert!(x.norm() >= 0);
            prop_assert_eq!(x.norm() == 0, x.is_zero());
        }

        #[test]
        fn gauss_norm_and_conj_multiplicative(a in -1000i64..1000, b in -1000i64..1000,
                                               c in -1000i64..1000, d in -1000i64..1000) {
            let x = Gaussian::new(a, b);
            let y = Gaussian::new(c, d);
            prop_assert_eq!((x * y).norm(), x.norm() * y.norm());
            prop_assert_eq!((x * y).conj(), x.conj() * y.conj());
        }

        #[test]
        fn euclidean_remainder_is_smaller(a in -10_000i64..10_000, b in -10_000i64..10_000,
                                          c in -100i64..100, d in -100i64..100) {
            let y = e(c, d);
            prop_assume!(!y.is_zero());
            let x = e(a, b);
            let (q, r) = x.div_rem(y);
            prop_assert_eq!(q * y + r, x);
            prop_assert!(r.norm() < y.norm());
            let (gq, gr) = Gaussian::new(a, b).div_rem(Gaussian::new(c, d));
            prop_assert_eq!(gq * Gaussian::new(c, d) + gr, Gaussian::new(a, b));
            prop_assert!(gr.norm() < Gaussian::new(c, d).norm());
        }

        #[test]
        fn rank_five_proof_identity(a in -50i64..50, b in -50i64..50, c in -50i64..50, d in -50i64..50) {
            prop_assert!(lemma_identity_holds(e(a, b), e(c, d)));
        }
    }
}
