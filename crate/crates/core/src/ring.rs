//! Coefficient rings.
//!
//! Every polynomial in the crate is generic over a [`Ring`]. The concrete
//! rings are the rationals ([`Rat`]), polynomial rings over them (used for
//! parametric coefficients and for the `x` coefficients of bivariate
//! polynomials), simple algebraic extensions `Q(α)` and quadratic extensions
//! `Q(α)(√w)` (see [`crate::algnum`]).

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary precision rational number, always kept in lowest terms with a
/// positive denominator.
pub type Rat = num_rational::BigRational;

/// Exact sign of a ring element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of_i64(v: i64) -> Sign {
        match v.cmp(&0) {
            std::cmp::Ordering::Less => Sign::Negative,
            std::cmp::Ordering::Equal => Sign::Zero,
            std::cmp::Ordering::Greater => Sign::Positive,
        }
    }

    pub fn as_i32(self) -> i32 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }

    pub fn is_zero(self) -> bool {
        self == Sign::Zero
    }

    pub fn negate(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        match (self, rhs) {
            (Sign::Zero, _) | (_, Sign::Zero) => Sign::Zero,
            (a, b) if a == b => Sign::Positive,
            _ => Sign::Negative,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Negative => "-",
            Sign::Zero => "0",
            Sign::Positive => "+",
        })
    }
}

/// A commutative ring with exact arithmetic.
///
/// `exact_div` is only called when the divisor is known to divide the
/// dividend; on fields it is ordinary division. Implementations may panic if
/// the division is not exact or the divisor is zero.
pub trait Ring: Clone + fmt::Debug + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn exact_div(&self, other: &Self) -> Self;
    fn from_rat(r: &Rat) -> Self;

    fn from_int(v: i64) -> Self {
        Self::from_rat(&Rat::from_integer(BigInt::from(v)))
    }

    fn is_one(&self) -> bool {
        self.sub(&Self::one()).is_zero()
    }

    fn pow(&self, mut e: usize) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    fn mul_int(&self, v: i64) -> Self {
        self.mul(&Self::from_int(v))
    }
}

/// Marker for rings in which every nonzero element is invertible.
pub trait Field: Ring {
    fn inv(&self) -> Self {
        Self::one().exact_div(self)
    }
}

/// Ring elements with an exactly decidable sign (real embeddings).
pub trait Ordered: Ring {
    fn sign(&self) -> Sign;

    /// Floating point snapshot, for display only.
    fn to_f64(&self) -> f64;

    /// Rational enclosure `[lo, hi]` of width at most `width`.
    fn enclosure(&self, width: &Rat) -> (Rat, Rat);
}

/// An ordered field: the coefficient domain of every sign-based algorithm.
pub trait OrderedField: Field + Ordered {}

impl<T: Field + Ordered> OrderedField for T {}

impl Ring for Rat {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, other: &Self) -> Self {
        assert!(!Zero::is_zero(other), "division by zero");
        self / other
    }
    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }
    fn from_int(v: i64) -> Self {
        Rat::from_integer(BigInt::from(v))
    }
}

impl Field for Rat {}

impl Ordered for Rat {
    fn sign(&self) -> Sign {
        if Zero::is_zero(self) {
            Sign::Zero
        } else if self.is_positive() {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    fn to_f64(&self) -> f64 {
        rat_to_f64(self)
    }

    fn enclosure(&self, _width: &Rat) -> (Rat, Rat) {
        (self.clone(), self.clone())
    }
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Float approximation that survives numerators and denominators beyond the
/// `f64` range.
pub fn rat_to_f64(r: &Rat) -> f64 {
    if let (Some(n), Some(d)) = (r.numer().to_f64(), r.denom().to_f64()) {
        if n.is_finite() && d.is_finite() && d != 0.0 {
            return n / d;
        }
    }
    let nb = r.numer().bits() as i64;
    let db = r.denom().bits() as i64;
    let shift = nb - db;
    let scaled = if shift > 0 {
        Rat::new(r.numer().clone(), r.denom().clone() << (shift as usize))
    } else {
        Rat::new(r.numer().clone() << ((-shift) as usize), r.denom().clone())
    };
    let m = scaled.numer().to_f64().unwrap_or(0.0) / scaled.denom().to_f64().unwrap_or(1.0);
    m * 2f64.powi(shift as i32)
}

/// Nearest "simple" rational to an `f64`, exact for dyadic inputs.
pub fn rat_from_f64(v: f64) -> Rat {
    Rat::from_float(v).unwrap_or_else(|| <Rat as Zero>::zero())
}

/// Canonical textual form `p` or `p/q`.
pub fn rat_to_string(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(Rat::new(n, d))
    } else {
        Some(Rat::from_integer(s.parse().ok()?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sign_product() {
        assert_eq!(Sign::Negative * Sign::Negative, Sign::Positive);
        assert_eq!(Sign::Negative * Sign::Zero, Sign::Zero);
        assert_eq!(Sign::Positive * Sign::Negative, Sign::Negative);
    }

    #[test]
    fn rat_float_roundtrip_for_huge_values() {
        let big = Rat::new(BigInt::from(10).pow(400) * 3, BigInt::from(10).pow(400));
        assert!((rat_to_f64(&big) - 3.0).abs() < 1e-12);
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(parse_rat("-6/4"), Some(rat(-3, 2)));
        assert_eq!(rat_to_string(&rat(-3, 2)), "-3/2");
        assert_eq!(rat_to_string(&int(7)), "7");
        assert_eq!(parse_rat("1/0"), None);
    }

    #[test]
    fn generic_pow() {
        assert_eq!(Ring::pow(&rat(2, 3), 3), rat(8, 27));
        assert_eq!(Ring::pow(&rat(2, 3), 0), int(1));
    }
}
