//! Real algebraic numbers: a squarefree rational defining polynomial and an
//! isolating interval. Signs of rational polynomials at such numbers are
//! decided exactly (gcd test for zero, refinement otherwise).
//!
//! [`AlgElem`] and [`QuadElem`] wrap polynomial expressions in one fixed
//! algebraic number `α` (and in one square root over `Q(α)`) so that the
//! generic polynomial algorithms can run on fibers `P(α, y)`. Every
//! operation on them reduces to polynomial evaluation at `α`.

mod field;
pub mod isolate;
mod quad;

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{rat_coeff_strings, RatPoly};
use crate::ring::{parse_rat, rat_to_f64, rat_to_string, Ordered, Rat, Ring, Sign};

pub use field::{AlgElem, NumberField};
pub use isolate::{interval_variations, RootInterval};
pub use quad::QuadElem;

#[derive(Clone, Debug)]
pub struct AlgebraicNumber {
    defpoly: RatPoly,
    lo: Rat,
    hi: Rat,
}

impl AlgebraicNumber {
    pub fn from_rat(r: Rat) -> Self {
        AlgebraicNumber {
            defpoly: RatPoly::linear_root(&r),
            lo: r.clone(),
            hi: r,
        }
    }

    /// Validates `defpoly` (squarefree) and `[lo, hi]` (exactly one root).
    pub fn new(defpoly: RatPoly, lo: Rat, hi: Rat) -> Result<Self> {
        if defpoly.degree().unwrap_or(0) == 0 {
            return Err(Error::Invalid("defining polynomial must be nonconstant".into()));
        }
        if !defpoly.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        if lo > hi {
            return Err(Error::Invalid("empty interval".into()));
        }
        let (sl, sh) = (defpoly.eval(&lo).sign(), defpoly.eval(&hi).sign());
        if lo == hi {
            return if sl.is_zero() {
                Ok(Self::from_rat(lo))
            } else {
                Err(Error::Invalid("lo = hi is not a root".into()))
            };
        }
        let inner = interval_variations(&defpoly, &lo, &hi);
        match (sl.is_zero(), sh.is_zero(), inner) {
            (true, false, 0) => Ok(Self::from_rat(lo)),
            (false, true, 0) => Ok(Self::from_rat(hi)),
            (false, false, 1) if sl != sh => Ok(Self::from_isolated(&defpoly, RootInterval { lo, hi })),
            _ => Err(Error::Invalid("interval does not isolate exactly one root".into())),
        }
    }

    pub(crate) fn from_isolated(defpoly: &RatPoly, iv: RootInterval) -> Self {
        if iv.is_exact() {
            Self::from_rat(iv.lo)
        } else if defpoly.degree() == Some(1) {
            Self::from_rat(-defpoly.coeff(0) / defpoly.coeff(1))
        } else {
            AlgebraicNumber {
                defpoly: defpoly.clone(),
                lo: iv.lo,
                hi: iv.hi,
            }
        }
    }

    pub fn defpoly(&self) -> &RatPoly {
        &self.defpoly
    }

    pub fn lo(&self) -> &Rat {
        &self.lo
    }

    pub fn hi(&self) -> &Rat {
        &self.hi
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    pub fn as_rat(&self) -> Option<&Rat> {
        (self.lo == self.hi).then_some(&self.lo)
    }

    fn interval(&self) -> RootInterval {
        RootInterval {
            lo: self.lo.clone(),
            hi: self.hi.clone(),
        }
    }

    pub(crate) fn bisect_in_place(&mut self) {
        if self.as_rat().is_some() {
            return;
        }
        let iv = isolate::bisect(&self.defpoly, &self.interval());
        if iv.is_exact() {
            *self = Self::from_rat(iv.lo);
        } else {
            self.lo = iv.lo;
            self.hi = iv.hi;
        }
    }

    /// Same number, interval no wider than `width`.
    pub fn refine(&self, width: &Rat) -> Self {
        let mut a = self.clone();
        while a.width() > *width {
            a.bisect_in_place();
        }
        a
    }

    /// Replaces the defining polynomial by a factor that still vanishes here.
    pub(crate) fn set_defpoly(&mut self, g: RatPoly) {
        if g.degree() == Some(1) {
            let r = -g.coeff(0) / g.coeff(1);
            *self = Self::from_rat(r);
        } else if self.as_rat().is_none() {
            self.defpoly = g;
        }
    }

    /// Exact test `q(α) = 0`.
    pub fn is_root_of(&self, q: &RatPoly) -> bool {
        if let Some(r) = self.as_rat() {
            return q.eval(r).is_zero();
        }
        if q.is_zero() {
            return true;
        }
        let g = q.gcd(&self.defpoly);
        self.has_root_of_factor(&g)
    }

    /// For `g | defpoly`: does `g` vanish at `α`?
    pub(crate) fn has_root_of_factor(&self, g: &RatPoly) -> bool {
        match self.as_rat() {
            Some(r) => g.eval(r).is_zero(),
            None => {
                g.degree().unwrap_or(0) > 0 && g.eval(&self.lo).sign() != g.eval(&self.hi).sign()
            }
        }
    }

    /// Sign of `q(α)`, refining `self` as needed.
    pub(crate) fn sign_at_mut(&mut self, q: &RatPoly) -> Sign {
        if let Some(r) = self.as_rat() {
            return q.eval(r).sign();
        }
        if self.is_root_of(q) {
            return Sign::Zero;
        }
        while interval_variations(q, &self.lo, &self.hi) > 0 {
            self.bisect_in_place();
            if let Some(r) = self.as_rat() {
                return q.eval(r).sign();
            }
        }
        q.eval(&self.interval().mid()).sign()
    }

    pub fn sign_at(&self, q: &RatPoly) -> Sign {
        self.clone().sign_at_mut(q)
    }

    /// Position relative to a rational.
    pub fn cmp_rat(&self, r: &Rat) -> Ordering {
        let mut a = self.clone();
        a.cmp_rat_mut(r)
    }

    pub(crate) fn cmp_rat_mut(&mut self, r: &Rat) -> Ordering {
        loop {
            if let Some(v) = self.as_rat() {
                return v.cmp(r);
            }
            if *r <= self.lo {
                return Ordering::Greater;
            }
            if *r >= self.hi {
                return Ordering::Less;
            }
            if self.defpoly.eval(r).is_zero() {
                return Ordering::Equal;
            }
            self.bisect_in_place();
        }
    }

    pub fn compare(&self, other: &Self) -> Ordering {
        if let Some(r) = other.as_rat() {
            return self.cmp_rat(r);
        }
        if let Some(r) = self.as_rat() {
            return other.cmp_rat(r).reverse();
        }
        if self.is_root_of(&other.defpoly) {
            // α is the root of other.defpoly inside other's interval iff α = β
            let mut a = self.clone();
            if a.cmp_rat_mut(&other.lo) == Ordering::Greater && a.cmp_rat_mut(&other.hi) == Ordering::Less {
                return Ordering::Equal;
            }
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        loop {
            if a.hi <= b.lo {
                return Ordering::Less;
            }
            if b.hi <= a.lo {
                return Ordering::Greater;
            }
            if a.as_rat().is_some() || b.as_rat().is_some() {
                return a.compare(&b);
            }
            if a.width() >= b.width() {
                a.bisect_in_place();
            } else {
                b.bisect_in_place();
            }
        }
    }

    pub fn to_f64(&self) -> f64 {
        if let Some(r) = self.as_rat() {
            return rat_to_f64(r);
        }
        let scale = rat_to_f64(&self.lo).abs().max(rat_to_f64(&self.hi).abs()).max(1.0);
        let mut a = self.clone();
        while rat_to_f64(&a.width()) > scale * 1e-6 && a.as_rat().is_none() {
            a.bisect_in_place();
        }
        match a.as_rat() {
            Some(r) => rat_to_f64(r),
            None => {
                let f: Vec<f64> = a.defpoly.primitive().coeffs().iter().map(rat_to_f64).collect();
                isolate::float_bisect(&f, rat_to_f64(&a.lo), rat_to_f64(&a.hi))
            }
        }
    }

    pub fn to_json(&self) -> AlgebraicNumberJson {
        AlgebraicNumberJson {
            defpoly: rat_coeff_strings(&self.defpoly),
            lo: rat_to_string(&self.lo),
            hi: rat_to_string(&self.hi),
        }
    }

    pub fn from_json(j: &AlgebraicNumberJson) -> Result<Self> {
        let bad = |s: &str| Error::Invalid(format!("bad rational '{s}'"));
        let coeffs = j
            .defpoly
            .iter()
            .map(|s| parse_rat(s).ok_or_else(|| bad(s)))
            .collect::<Result<Vec<_>>>()?;
        let lo = parse_rat(&j.lo).ok_or_else(|| bad(&j.lo))?;
        let hi = parse_rat(&j.hi).ok_or_else(|| bad(&j.hi))?;
        Self::new(RatPoly::new(coeffs), lo, hi)
    }
}

impl PartialEq for AlgebraicNumber {
    fn eq(&self, other: &Self) -> bool {
        self.compare(other) == Ordering::Equal
    }
}

impl Eq for AlgebraicNumber {}

impl PartialOrd for AlgebraicNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for AlgebraicNumber {
    fn cmp(&self, other: &Self) -> Ordering {
        self.compare(other)
    }
}

impl std::fmt::Display for AlgebraicNumber {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.as_rat() {
            Some(r) => write!(f, "{}", rat_to_string(r)),
            None => write!(
                f,
                "root of {} in [{}, {}] (~{:.6})",
                self.defpoly.display("T"),
                rat_to_string(&self.lo),
                rat_to_string(&self.hi),
                self.to_f64()
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraicNumberJson {
    pub defpoly: Vec<String>,
    pub lo: String,
    pub hi: String,
}

/// One algebraic number per distinct real root of a squarefree `p`,
/// ascending.
pub fn isolate_real_roots(p: &RatPoly) -> Result<Vec<AlgebraicNumber>> {
    if p.is_zero() {
        return Err(Error::Invalid("root isolation of the zero polynomial".into()));
    }
    if !p.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let q = p.primitive();
    Ok(isolate::isolate(&q)
        .into_iter()
        .map(|iv| AlgebraicNumber::from_isolated(&q, iv))
        .collect())
}

pub fn sign_at(q: &RatPoly, alpha: &AlgebraicNumber) -> Sign {
    alpha.sign_at(q)
}

pub fn compare(a: &AlgebraicNumber, b: &AlgebraicNumber) -> Ordering {
    a.compare(b)
}

pub fn refine(a: &AlgebraicNumber, width: &Rat) -> AlgebraicNumber {
    a.refine(width)
}
