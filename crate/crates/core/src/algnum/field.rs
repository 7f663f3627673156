//! Elements of `Q(α)` as rational polynomials in `α`.
//!
//! The modulus starts as the defining polynomial of `α` and is replaced by a
//! proper factor whenever a gcd test splits it, so it always vanishes at `α`
//! and every nonzero element stays invertible modulo it.

use std::cell::RefCell;
use std::fmt;
use std::rc::Rc;

use crate::poly::RatPoly;
use crate::ring::{rat_to_f64, Field, Ordered, Rat, Ring, Sign};

use super::AlgebraicNumber;

#[derive(Debug)]
pub struct NumberField {
    alpha: RefCell<AlgebraicNumber>,
}

impl NumberField {
    pub fn new(alpha: AlgebraicNumber) -> Rc<Self> {
        Rc::new(NumberField {
            alpha: RefCell::new(alpha),
        })
    }

    /// `α` itself.
    pub fn generator(self: &Rc<Self>) -> AlgElem {
        AlgElem::from_poly(self, RatPoly::var())
    }

    pub fn alpha(&self) -> AlgebraicNumber {
        self.alpha.borrow().clone()
    }

    fn modulus(&self) -> RatPoly {
        self.alpha.borrow().defpoly().clone()
    }

    fn reduce(&self, p: &RatPoly) -> RatPoly {
        let a = self.alpha.borrow();
        match a.as_rat() {
            Some(r) => RatPoly::constant(p.eval(r)),
            None => p.rem(a.defpoly()),
        }
    }

    /// Exact `p(α) = 0`, splitting the modulus on a nontrivial gcd.
    fn vanishes(&self, p: &RatPoly) -> bool {
        let p = self.reduce(p);
        if p.is_zero() {
            return true;
        }
        if p.is_constant() {
            return false;
        }
        let m = self.modulus();
        let g = p.gcd(&m);
        if g.is_constant() {
            return false;
        }
        let mut a = self.alpha.borrow_mut();
        if a.has_root_of_factor(&g) {
            a.set_defpoly(g);
            true
        } else {
            a.set_defpoly(m.div_rem(&g).0);
            false
        }
    }

    fn sign(&self, p: &RatPoly) -> Sign {
        {
            let p = self.reduce(p);
            let a = self.alpha.borrow();
            let (lo, hi) = match a.as_rat() {
                Some(r) => return p.eval(r).sign(),
                None => interval_eval(&p, a.lo(), a.hi()),
            };
            if lo.sign() == Sign::Positive {
                return Sign::Positive;
            }
            if hi.sign() == Sign::Negative {
                return Sign::Negative;
            }
        }
        if self.vanishes(p) {
            return Sign::Zero;
        }
        let p = self.reduce(p);
        self.alpha.borrow_mut().sign_at_mut(&p)
    }

    fn inverse(&self, p: &RatPoly) -> RatPoly {
        let p = self.reduce(p);
        assert!(!p.is_zero(), "division by zero in Q(α)");
        if p.is_constant() {
            return RatPoly::constant(p.coeff(0).inv());
        }
        let (g, s, _) = p.ext_gcd(&self.modulus());
        if g.is_constant() {
            return self.reduce(&s.div_scalar(&g.coeff(0)));
        }
        // a common factor: split the modulus and retry
        assert!(!self.vanishes(&p), "division by zero in Q(α)");
        self.inverse(&p)
    }

    /// Rational enclosure of `p(α)` of width at most `width`.
    fn enclosure(&self, p: &RatPoly, width: &Rat) -> (Rat, Rat) {
        let p = self.reduce(p);
        let mut a = self.alpha.borrow_mut();
        loop {
            if let Some(r) = a.as_rat() {
                let v = p.eval(r);
                return (v.clone(), v);
            }
            let (lo, hi) = interval_eval(&p, a.lo(), a.hi());
            if &hi - &lo <= *width {
                return (lo, hi);
            }
            a.bisect_in_place();
        }
    }
}

/// Interval Horner evaluation over `[lo, hi]`.
fn interval_eval(p: &RatPoly, lo: &Rat, hi: &Rat) -> (Rat, Rat) {
    let mut acc = (Rat::zero(), Rat::zero());
    for c in p.coeffs().iter().rev() {
        let prods = [&acc.0 * lo, &acc.0 * hi, &acc.1 * lo, &acc.1 * hi];
        let mn = prods.iter().min().unwrap().clone();
        let mx = prods.iter().max().unwrap().clone();
        acc = (mn + c, mx + c);
    }
    acc
}

/// An element of `Q(α)`; rationals need no context.
#[derive(Clone)]
pub enum AlgElem {
    Rat(Rat),
    Ext(Rc<NumberField>, RatPoly),
}

impl AlgElem {
    pub fn from_poly(ctx: &Rc<NumberField>, p: RatPoly) -> Self {
        let p = ctx.reduce(&p);
        if p.is_constant() {
            AlgElem::Rat(p.coeff(0))
        } else {
            AlgElem::Ext(ctx.clone(), p)
        }
    }

    /// Representative polynomial in `α`.
    pub fn poly(&self) -> RatPoly {
        match self {
            AlgElem::Rat(r) => RatPoly::constant(r.clone()),
            AlgElem::Ext(_, p) => p.clone(),
        }
    }

    pub fn as_rat(&self) -> Option<Rat> {
        match self {
            AlgElem::Rat(r) => Some(r.clone()),
            AlgElem::Ext(c, p) => {
                let p = c.reduce(p);
                p.is_constant().then(|| p.coeff(0))
            }
        }
    }

    pub fn context(&self) -> Option<&Rc<NumberField>> {
        match self {
            AlgElem::Rat(_) => None,
            AlgElem::Ext(c, _) => Some(c),
        }
    }

    fn binary(&self, other: &Self, op: impl Fn(&RatPoly, &RatPoly) -> RatPoly) -> Self {
        match (self, other) {
            (AlgElem::Rat(a), AlgElem::Rat(b)) => {
                AlgElem::Rat(op(&RatPoly::constant(a.clone()), &RatPoly::constant(b.clone())).coeff(0))
            }
            (AlgElem::Ext(c, a), AlgElem::Rat(b)) => AlgElem::from_poly(c, op(a, &RatPoly::constant(b.clone()))),
            (AlgElem::Rat(a), AlgElem::Ext(c, b)) => AlgElem::from_poly(c, op(&RatPoly::constant(a.clone()), b)),
            (AlgElem::Ext(c, a), AlgElem::Ext(d, b)) => {
                debug_assert!(Rc::ptr_eq(c, d), "mixing elements of different fields");
                AlgElem::from_poly(c, op(a, b))
            }
        }
    }
}

impl Ring for AlgElem {
    fn zero() -> Self {
        AlgElem::Rat(Rat::zero())
    }
    fn one() -> Self {
        AlgElem::Rat(Rat::one())
    }
    fn is_zero(&self) -> bool {
        match self {
            AlgElem::Rat(r) => r.is_zero(),
            AlgElem::Ext(c, p) => c.vanishes(p),
        }
    }
    fn add(&self, other: &Self) -> Self {
        match (self, other) {
            (AlgElem::Rat(a), AlgElem::Rat(b)) => AlgElem::Rat(a + b),
            _ => self.binary(other, |a, b| a.add_ref(b)),
        }
    }
    fn sub(&self, other: &Self) -> Self {
        match (self, other) {
            (AlgElem::Rat(a), AlgElem::Rat(b)) => AlgElem::Rat(a - b),
            _ => self.binary(other, |a, b| a.sub_ref(b)),
        }
    }
    fn mul(&self, other: &Self) -> Self {
        match (self, other) {
            (AlgElem::Rat(a), AlgElem::Rat(b)) => AlgElem::Rat(a * b),
            (AlgElem::Ext(c, a), AlgElem::Rat(b)) | (AlgElem::Rat(b), AlgElem::Ext(c, a)) => {
                AlgElem::from_poly(c, a.scale(b))
            }
            _ => self.binary(other, |a, b| a.mul_ref(b)),
        }
    }
    fn neg(&self) -> Self {
        match self {
            AlgElem::Rat(a) => AlgElem::Rat(-a),
            AlgElem::Ext(c, p) => AlgElem::Ext(c.clone(), p.neg_ref()),
        }
    }
    fn exact_div(&self, other: &Self) -> Self {
        match other {
            AlgElem::Rat(b) => {
                assert!(!b.is_zero(), "division by zero");
                match self {
                    AlgElem::Rat(a) => AlgElem::Rat(a / b),
                    AlgElem::Ext(c, a) => AlgElem::Ext(c.clone(), a.div_scalar(b)),
                }
            }
            AlgElem::Ext(c, b) => {
                let inv = AlgElem::from_poly(c, c.inverse(b));
                self.mul(&inv)
            }
        }
    }
    fn from_rat(r: &Rat) -> Self {
        AlgElem::Rat(r.clone())
    }
}

impl Field for AlgElem {}

impl Ordered for AlgElem {
    fn sign(&self) -> Sign {
        match self {
            AlgElem::Rat(r) => r.sign(),
            AlgElem::Ext(c, p) => c.sign(p),
        }
    }

    fn to_f64(&self) -> f64 {
        match self {
            AlgElem::Rat(r) => rat_to_f64(r),
            AlgElem::Ext(c, p) => {
                let a = c.alpha.borrow().to_f64();
                p.coeffs().iter().rev().fold(0.0, |acc, k| acc * a + rat_to_f64(k))
            }
        }
    }

    fn enclosure(&self, width: &Rat) -> (Rat, Rat) {
        match self {
            AlgElem::Rat(r) => (r.clone(), r.clone()),
            AlgElem::Ext(c, p) => c.enclosure(p, width),
        }
    }
}

impl fmt::Debug for AlgElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for AlgElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgElem::Rat(r) => write!(f, "{}", crate::ring::rat_to_string(r)),
            AlgElem::Ext(_, p) => write!(f, "({})", p.display("α")),
        }
    }
}

impl PartialEq for AlgElem {
    fn eq(&self, other: &Self) -> bool {
        self.sub(other).is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::UniPoly;
    use crate::ring::{int, rat};
    use crate::rootcount::count_distinct_real_roots;

    fn field(defpoly: &[i64], lo: Rat, hi: Rat) -> Rc<NumberField> {
        NumberField::new(AlgebraicNumber::new(RatPoly::from_ints(defpoly), lo, hi).unwrap())
    }

    #[test]
    fn sqrt2_arithmetic() {
        let k = field(&[-2, 0, 1], int(1), int(2));
        let a = k.generator();
        assert_eq!(a.mul(&a), AlgElem::from_int(2));
        assert_eq!(a.sign(), Sign::Positive);
        assert_eq!(a.sub(&AlgElem::from_rat(&rat(3, 2))).sign(), Sign::Negative);
        let inv = AlgElem::one().exact_div(&a);
        assert_eq!(inv.mul(&a), AlgElem::one());
        assert!((inv.to_f64() - 0.5f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn reducible_modulus_splits() {
        // α = √2 given as a root of (T^2-2)(T^2-3)
        let k = field(&[6, 0, -5, 0, 1], rat(13, 10), rat(3, 2));
        let a = k.generator();
        let t = a.mul(&a).sub(&AlgElem::from_int(3));
        assert!(!t.is_zero());
        assert_eq!(t.sign(), Sign::Negative);
        assert_eq!(k.modulus().degree(), Some(2));
        assert!(a.mul(&a).sub(&AlgElem::from_int(2)).is_zero());
        let _ = t.exact_div(&a);
    }

    #[test]
    fn polynomials_over_the_extension() {
        // y^2 - α over α = √2 has two real roots; y^2 + α none
        let k = field(&[-2, 0, 1], int(1), int(2));
        let a = k.generator();
        let p = UniPoly::new(vec![a.neg(), AlgElem::zero(), AlgElem::one()]);
        assert_eq!(count_distinct_real_roots(&p), 2);
        let q = UniPoly::new(vec![a.clone(), AlgElem::zero(), AlgElem::one()]);
        assert_eq!(count_distinct_real_roots(&q), 0);
        // (y - α)^2 has a gcd of degree 1 with its derivative
        let r = UniPoly::new(vec![a.neg(), AlgElem::one()]).pow(2);
        assert_eq!(r.gcd(&r.derivative()).degree(), Some(1));
    }

    #[test]
    fn enclosures_shrink() {
        let k = field(&[-2, 0, 1], int(1), int(2));
        let a = k.generator();
        let (lo, hi) = a.mul(&a).add(&a).enclosure(&rat(1, 10000));
        assert!(&hi - &lo <= rat(1, 10000));
        assert!(lo <= rat(34142, 10000) && hi >= rat(34142, 10000));
    }
}
