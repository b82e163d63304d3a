//! One quadratic extension of Q(sqrt 3): `u + v·sqrt(r)` with `r > 0`.

use std::fmt;

use num_traits::Zero;

use super::field::{OrderedField, Sign};
use super::sqrt3::Sqrt3;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tower {
    pub u: Sqrt3,
    pub v: Sqrt3,
    pub r: Sqrt3,
}

impl Tower {
    /// Panics unless `r > 0`.
    pub fn new(u: Sqrt3, v: Sqrt3, r: Sqrt3) -> Tower {
        assert!(r.is_positive(), "tower radicand must be positive");
        Tower { u, v, r }
    }

    pub fn from_base(u: Sqrt3, r: Sqrt3) -> Tower {
        Tower::new(u, Sqrt3::zero(), r)
    }

    fn same_radicand(&self, o: &Tower) {
        assert_eq!(self.r, o.r, "tower elements over different radicands");
    }

    pub fn add(&self, o: &Tower) -> Tower {
        self.same_radicand(o);
        Tower::new(self.u.clone() + o.u.clone(), self.v.clone() + o.v.clone(), self.r.clone())
    }

    pub fn sub(&self, o: &Tower) -> Tower {
        self.same_radicand(o);
        Tower::new(self.u.clone() - o.u.clone(), self.v.clone() - o.v.clone(), self.r.clone())
    }

    pub fn mul(&self, o: &Tower) -> Tower {
        self.same_radicand(o);
        let u = self.u.clone() * o.u.clone() + self.v.clone() * o.v.clone() * self.r.clone();
        let v = self.u.clone() * o.v.clone() + self.v.clone() * o.u.clone();
        Tower::new(u, v, self.r.clone())
    }

    pub fn scale(&self, k: &Sqrt3) -> Tower {
        Tower::new(self.u.clone() * k.clone(), self.v.clone() * k.clone(), self.r.clone())
    }

    /// `u² − r·v²`, which lies in the base field.
    pub fn norm(&self) -> Sqrt3 {
        self.u.clone() * self.u.clone() - self.r.clone() * self.v.clone() * self.v.clone()
    }

    /// Division by a base-field element.
    pub fn div_base(&self, k: &Sqrt3) -> Tower {
        Tower::new(self.u.clone() / k.clone(), self.v.clone() / k.clone(), self.r.clone())
    }

    /// Exact sign by nested squaring: the sign of `u² − r·v²` settles the
    /// mixed-sign case.
    pub fn sign(&self) -> Sign {
        let su = self.u.sign();
        let sv = self.v.sign();
        if sv == Sign::Zero {
            return su;
        }
        if su == Sign::Zero || su == sv {
            return sv;
        }
        match self.norm().sign() {
            Sign::Positive => su,
            Sign::Negative => sv,
            Sign::Zero => Sign::Zero,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }

    /// The base-field value when `v = 0`.
    pub fn as_base(&self) -> Option<&Sqrt3> {
        self.v.is_zero().then_some(&self.u)
    }

    pub fn to_f64(&self) -> f64 {
        self.u.to_f64() + self.v.to_f64() * self.r.to_f64().sqrt()
    }
}

impl fmt::Display for Tower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.v.is_zero() {
            write!(f, "{}", self.u)
        } else {
            write!(f, "({})+({})*sqrt({})", self.u, self.v, self.r)
        }
    }
}
