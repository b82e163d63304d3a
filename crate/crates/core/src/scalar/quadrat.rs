//! The fraction field of a [`QuadraticRing`], with rational coordinates.

use std::fmt;
use std::marker::PhantomData;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::field::Field;
use super::quad::{QuadInt, QuadraticRing};

pub struct QuadRat<R> {
    pub a: BigRational,
    pub b: BigRational,
    _ring: PhantomData<fn() -> R>,
}

impl<R> Clone for QuadRat<R> {
    fn clone(&self) -> Self {
        QuadRat {
            a: self.a.clone(),
            b: self.b.clone(),
            _ring: PhantomData,
        }
    }
}

impl<R> PartialEq for QuadRat<R> {
    fn eq(&self, o: &Self) -> bool {
        self.a == o.a && self.b == o.b
    }
}
impl<R> Eq for QuadRat<R> {}

impl<R> std::hash::Hash for QuadRat<R> {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.a.hash(state);
        self.b.hash(state);
    }
}

impl<R: QuadraticRing> QuadRat<R> {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        QuadRat {
            a,
            b,
            _ring: PhantomData,
        }
    }

    pub fn from_ring(x: QuadInt<R>) -> Self {
        Self::new(
            BigRational::from_integer(x.a.into()),
            BigRational::from_integer(x.b.into()),
        )
    }

    pub fn from_rational(a: BigRational) -> Self {
        Self::new(a, BigRational::zero())
    }

    pub fn conj(&self) -> Self {
        let q = BigRational::from_integer(R::Q.into());
        Self::new(&self.a + &self.b * q, -self.b.clone())
    }

    pub fn norm(&self) -> BigRational {
        let p = BigRational::from_integer(R::P.into());
        let q = BigRational::from_integer(R::Q.into());
        &self.a * &self.a + &self.a * &self.b * q - &self.b * &self.b * p
    }

    /// Real part as a rational.
    pub fn real(&self) -> BigRational {
        &self.a + &self.b * BigRational::new(R::Q.into(), 2.into())
    }

    /// True when the value is a real rational number.
    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Least common multiple of the two coordinate denominators.
    pub fn denom(&self) -> BigInt {
        self.a.denom().lcm(self.b.denom())
    }

    /// The ring element equal to `self`, when both coordinates are integers
    /// that fit in `i64`.
    pub fn to_ring(&self) -> Option<QuadInt<R>> {
        if !self.a.is_integer() || !self.b.is_integer() {
            return None;
        }
        Some(QuadInt::new(self.a.numer().to_i64()?, self.b.numer().to_i64()?))
    }
}

impl<R: QuadraticRing> From<QuadInt<R>> for QuadRat<R> {
    fn from(x: QuadInt<R>) -> Self {
        Self::from_ring(x)
    }
}

impl<R: QuadraticRing> Zero for QuadRat<R> {
    fn zero() -> Self {
        Self::new(BigRational::zero(), BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl<R: QuadraticRing> One for QuadRat<R> {
    fn one() -> Self {
        Self::new(BigRational::one(), BigRational::zero())
    }
}

impl<R: QuadraticRing> Add for QuadRat<R> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.a + o.a, self.b + o.b)
    }
}

impl<R: QuadraticRing> Sub for QuadRat<R> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.a - o.a, self.b - o.b)
    }
}

impl<R: QuadraticRing> Neg for QuadRat<R> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.a, -self.b)
    }
}

impl<R: QuadraticRing> Mul for QuadRat<R> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let p = BigRational::from_integer(R::P.into());
        let q = BigRational::from_integer(R::Q.into());
        let bd = &self.b * &o.b;
        Self::new(
            &self.a * &o.a + &bd * p,
            &self.a * &o.b + &self.b * &o.a + bd * q,
        )
    }
}

impl<R: QuadraticRing> Div for QuadRat<R> {
    type Output = Self;
    fn div(self, o: Self) -> Self {
        let n = o.norm();
        assert!(!n.is_zero(), "division by zero in quadratic field");
        let num = self * o.conj();
        Self::new(num.a / &n, num.b / n)
    }
}

impl<R: QuadraticRing> Field for QuadRat<R> {}

impl<R: QuadraticRing> fmt::Display for QuadRat<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.a.is_zero() {
            write!(f, "({}){}", self.b, R::SYMBOL)
        } else {
            write!(f, "{}+({}){}", self.a, self.b, R::SYMBOL)
        }
    }
}

impl<R: QuadraticRing> fmt::Debug for QuadRat<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
