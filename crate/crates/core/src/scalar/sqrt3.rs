//! The ordered field Q(sqrt 3).

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::field::{Field, OrderedField, Sign};

/// `x + y·sqrt(3)` with rational `x`, `y`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Sqrt3 {
    pub x: BigRational,
    pub y: BigRational,
}

fn rat_sign(r: &BigRational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

impl Sqrt3 {
    pub fn new(x: BigRational, y: BigRational) -> Self {
        Sqrt3 { x, y }
    }

    pub fn int(x: i64, y: i64) -> Self {
        Sqrt3::new(
            BigRational::from_integer(x.into()),
            BigRational::from_integer(y.into()),
        )
    }

    pub fn rational(x: BigRational) -> Self {
        Sqrt3::new(x, BigRational::zero())
    }

    pub fn sqrt3() -> Self {
        Sqrt3::int(0, 1)
    }

    /// Galois conjugate `x − y·sqrt(3)`.
    pub fn galois(&self) -> Self {
        Sqrt3::new(self.x.clone(), -self.y.clone())
    }

    /// Field norm `x² − 3y²`.
    pub fn norm(&self) -> BigRational {
        &self.x * &self.x - &self.y * &self.y * BigRational::from_integer(3.into())
    }

    pub fn to_f64(&self) -> f64 {
        self.x.to_f64().unwrap_or(f64::NAN) + self.y.to_f64().unwrap_or(f64::NAN) * 3f64.sqrt()
    }

    pub fn is_positive(&self) -> bool {
        self.sign() == Sign::Positive
    }

    pub fn is_negative(&self) -> bool {
        self.sign() == Sign::Negative
    }

    /// Parses the `x+y*sqrt3` notation produced by `Display`.
    pub fn parse(s: &str) -> Option<Self> {
        let s = s.trim();
        let Some(body) = s.strip_suffix("*sqrt3") else {
            return Some(Sqrt3::rational(s.parse().ok()?));
        };
        // split at the last sign that is not the leading one and not inside an exponent
        let bytes = body.as_bytes();
        let split = (1..bytes.len()).rev().find(|&i| bytes[i] == b'+' || bytes[i] == b'-')?;
        let x: BigRational = body[..split].parse().ok()?;
        let ystr = &body[split..];
        let y: BigRational = ystr.trim_start_matches('+').parse().ok()?;
        Some(Sqrt3::new(x, y))
    }
}

impl OrderedField for Sqrt3 {
    /// Sign of `x + y·sqrt 3` using only rational arithmetic.
    fn sign(&self) -> Sign {
        let sx = rat_sign(&self.x);
        let sy = rat_sign(&self.y);
        if sy == 0 {
            return Sign::of_i32(sx);
        }
        if sx == 0 || sx == sy {
            return Sign::of_i32(sy);
        }
        // Mixed signs: the term with the larger square wins.
        let xx = &self.x * &self.x;
        let yy3 = &self.y * &self.y * BigRational::from_integer(3.into());
        match xx.cmp(&yy3) {
            std::cmp::Ordering::Greater => Sign::of_i32(sx),
            std::cmp::Ordering::Less => Sign::of_i32(sy),
            std::cmp::Ordering::Equal => Sign::Zero,
        }
    }
}

impl PartialOrd for Sqrt3 {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Sqrt3 {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        match (self.clone() - other.clone()).sign() {
            Sign::Negative => std::cmp::Ordering::Less,
            Sign::Zero => std::cmp::Ordering::Equal,
            Sign::Positive => std::cmp::Ordering::Greater,
        }
    }
}

impl Zero for Sqrt3 {
    fn zero() -> Self {
        Sqrt3::int(0, 0)
    }
    fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }
}

impl One for Sqrt3 {
    fn one() -> Self {
        Sqrt3::int(1, 0)
    }
}

impl Add for Sqrt3 {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Sqrt3::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Sqrt3 {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Sqrt3::new(self.x - o.x, self.y - o.y)
    }
}

impl Neg for Sqrt3 {
    type Output = Self;
    fn neg(self) -> Self {
        Sqrt3::new(-self.x, -self.y)
    }
}

impl Mul for Sqrt3 {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let three = BigRational::from_integer(3.into());
        Sqrt3::new(
            &self.x * &o.x + &self.y * &o.y * three,
            &self.x * &o.y + &self.y * &o.x,
        )
    }
}

impl Div for Sqrt3 {
    type Output = Self;
    fn div(self, o: Self) -> Self {
        let n = o.norm();
        assert!(!n.is_zero(), "division by zero in Q(sqrt3)");
        let num = self * o.galois();
        Sqrt3::new(num.x / &n, num.y / n)
    }
}

impl Field for Sqrt3 {}

/// Renders as `x+y*sqrt3`, always with both parts.
impl fmt::Display for Sqrt3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.y.is_negative() {
            write!(f, "{}-{}*sqrt3", self.x, -self.y.clone())
        } else {
            write!(f, "{}+{}*sqrt3", self.x, self.y)
        }
    }
}

impl fmt::Debug for Sqrt3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<i64> for Sqrt3 {
    fn from(x: i64) -> Self {
        Sqrt3::int(x, 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::qq;
    use proptest::prelude::*;

    #[test]
    fn sign_examples() {
        assert_eq!(Sqrt3::int(2, -1).sign(), Sign::Positive);
        assert_eq!(Sqrt3::int(5, -3).sign(), Sign::Negative);
        assert_eq!(Sqrt3::int(0, 0).sign(), Sign::Zero);
        assert_eq!(Sqrt3::int(-7, 4).sign(), Sign::Negative);
        assert_eq!(Sqrt3::int(-6, 4).sign(), Sign::Positive);
    }

    #[test]
    fn display_and_parse() {
        let v = Sqrt3::new(qq(-3, 2), qq(5, 7));
        assert_eq!(v.to_string(), "-3/2+5/7*sqrt3");
        assert_eq!(Sqrt3::parse(&v.to_string()), Some(v));
        let w = Sqrt3::int(36, -24);
        assert_eq!(w.to_string(), "36-24*sqrt3");
        assert_eq!(Sqrt3::parse("36-24*sqrt3"), Some(w));
        assert_eq!(Sqrt3::parse("-4"), Some(Sqrt3::int(-4, 0)));
    }

    #[test]
    fn inverse() {
        let v = Sqrt3::int(2, 1);
        assert_eq!(Sqrt3::one() / v.clone(), Sqrt3::int(2, -1));
        assert_eq!(v.clone() / v, Sqrt3::one());
    }

    fn arb() -> impl Strategy<Value = Sqrt3> {
        (-10_000i64..10_000, 1i64..500, -10_000i64..10_000, 1i64..500)
            .prop_map(|(a, b, c, d)| Sqrt3::new(qq(a, b), qq(c, d)))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(10_000))]

        #[test]
        fn sign_is_odd(x in arb()) {
            prop_assert_eq!(x.sign(), (-x.clone()).sign().flip());
        }

        #[test]
        fn squares_are_nonnegative(x in arb()) {
            prop_assert_ne!((x.clone() * x).sign(), Sign::Negative);
        }

        #[test]
        fn sign_agrees_with_float(x in arb()) {
            let f = x.to_f64();
            if f.abs() > 1e-9 {
                prop_assert_eq!(x.sign() == Sign::Positive, f > 0.0);
            }
        }
    }
}
