//! Elements `a + b√w` of a quadratic extension of `Q(α)`, `w > 0`.

use std::fmt;

use crate::ring::{Field, Ordered, Rat, Ring, Sign};

use super::AlgElem;

#[derive(Clone)]
pub struct QuadElem {
    a: AlgElem,
    b: AlgElem,
    w: Option<AlgElem>,
}

impl QuadElem {
    /// `a + b√w`; `w` must be positive.
    pub fn new(a: AlgElem, b: AlgElem, w: AlgElem) -> Self {
        debug_assert!(w.sign() == Sign::Positive, "√w needs w > 0");
        QuadElem { a, b, w: Some(w) }
    }

    pub fn base(a: AlgElem) -> Self {
        QuadElem {
            a,
            b: AlgElem::zero(),
            w: None,
        }
    }

    /// `√w`
    pub fn sqrt(w: AlgElem) -> Self {
        Self::new(AlgElem::zero(), AlgElem::one(), w)
    }

    pub fn parts(&self) -> (&AlgElem, &AlgElem, Option<&AlgElem>) {
        (&self.a, &self.b, self.w.as_ref())
    }

    /// The element itself when it lies in `Q(α)`.
    pub fn as_base(&self) -> Option<AlgElem> {
        self.b.is_zero().then(|| self.a.clone())
    }

    fn radicand(&self, other: &Self) -> Option<AlgElem> {
        self.w.clone().or_else(|| other.w.clone())
    }

    pub fn conjugate(&self) -> Self {
        QuadElem {
            a: self.a.clone(),
            b: self.b.neg(),
            w: self.w.clone(),
        }
    }

    /// `a^2 - b^2 w`
    pub fn norm(&self) -> AlgElem {
        match &self.w {
            None => self.a.mul(&self.a),
            Some(w) => self.a.mul(&self.a).sub(&self.b.mul(&self.b).mul(w)),
        }
    }
}

impl Ring for QuadElem {
    fn zero() -> Self {
        Self::base(AlgElem::zero())
    }
    fn one() -> Self {
        Self::base(AlgElem::one())
    }
    fn is_zero(&self) -> bool {
        self.sign().is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        QuadElem {
            a: self.a.add(&other.a),
            b: self.b.add(&other.b),
            w: self.radicand(other),
        }
    }
    fn sub(&self, other: &Self) -> Self {
        QuadElem {
            a: self.a.sub(&other.a),
            b: self.b.sub(&other.b),
            w: self.radicand(other),
        }
    }
    fn mul(&self, other: &Self) -> Self {
        let w = self.radicand(other);
        let bb = self.b.mul(&other.b);
        let a = match &w {
            Some(w) if !bb.is_zero() => self.a.mul(&other.a).add(&bb.mul(w)),
            _ => self.a.mul(&other.a),
        };
        QuadElem {
            a,
            b: self.a.mul(&other.b).add(&self.b.mul(&other.a)),
            w,
        }
    }
    fn neg(&self) -> Self {
        QuadElem {
            a: self.a.neg(),
            b: self.b.neg(),
            w: self.w.clone(),
        }
    }
    fn exact_div(&self, other: &Self) -> Self {
        if other.b.is_zero() {
            return QuadElem {
                a: self.a.exact_div(&other.a),
                b: self.b.exact_div(&other.a),
                w: self.w.clone(),
            };
        }
        let n = other.norm();
        if n.is_zero() {
            // other = a + b√w with a = b√w, so other = 2a
            let two_a = other.a.mul_int(2);
            return QuadElem {
                a: self.a.exact_div(&two_a),
                b: self.b.exact_div(&two_a),
                w: self.radicand(other),
            };
        }
        let c = self.mul(&other.conjugate());
        QuadElem {
            a: c.a.exact_div(&n),
            b: c.b.exact_div(&n),
            w: c.w,
        }
    }
    fn from_rat(r: &Rat) -> Self {
        Self::base(AlgElem::from_rat(r))
    }
}

impl Field for QuadElem {}

impl Ordered for QuadElem {
    fn sign(&self) -> Sign {
        let sa = self.a.sign();
        let sb = self.b.sign();
        match (sa, sb) {
            (_, Sign::Zero) => sa,
            (Sign::Zero, _) => sb,
            _ if sa == sb => sa,
            // opposite signs: compare a^2 with b^2 w
            _ => self.norm().sign() * sa,
        }
    }

    fn to_f64(&self) -> f64 {
        match &self.w {
            None => self.a.to_f64(),
            Some(w) => self.a.to_f64() + self.b.to_f64() * w.to_f64().sqrt(),
        }
    }

    fn enclosure(&self, width: &Rat) -> (Rat, Rat) {
        let Some(w) = &self.w else {
            return self.a.enclosure(width);
        };
        // bisect on the rational line until [lo, hi] is narrow enough
        let mut eps = width.clone() / Rat::from_int(4);
        loop {
            let (alo, ahi) = self.a.enclosure(&eps);
            let (blo, bhi) = self.b.enclosure(&eps);
            let (wlo, whi) = w.enclosure(&eps);
            let (slo, shi) = sqrt_enclosure(&wlo.max(Rat::zero()), &whi, &eps);
            let prods = [&blo * &slo, &blo * &shi, &bhi * &slo, &bhi * &shi];
            let lo = alo + prods.iter().min().unwrap();
            let hi = ahi + prods.iter().max().unwrap();
            if &hi - &lo <= *width {
                return (lo, hi);
            }
            eps = eps / Rat::from_int(4);
        }
    }
}

/// Rational bounds `lo <= √wlo`, `hi >= √whi`, each within `eps`.
fn sqrt_enclosure(wlo: &Rat, whi: &Rat, eps: &Rat) -> (Rat, Rat) {
    let below = |w: &Rat| {
        let (mut lo, mut hi) = (Rat::zero(), w.clone().max(Rat::one()));
        while &hi - &lo > *eps {
            let m = (&lo + &hi) / Rat::from_int(2);
            if &m * &m <= *w {
                lo = m;
            } else {
                hi = m;
            }
        }
        (lo, hi)
    };
    (below(wlo).0, below(whi).1)
}

impl PartialEq for QuadElem {
    fn eq(&self, other: &Self) -> bool {
        self.sub(other).is_zero()
    }
}

impl fmt::Debug for QuadElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for QuadElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.w {
            Some(w) if !self.b.is_zero() => write!(f, "{} + {}*sqrt({})", self.a, self.b, w),
            _ => write!(f, "{}", self.a),
        }
    }
}
