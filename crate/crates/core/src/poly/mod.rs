//! Dense exact polynomials.
//!
//! [`UniPoly<R>`] stores coefficients in increasing degree order. Because
//! `UniPoly<R>` is itself a [`Ring`], a bivariate polynomial is simply a
//! polynomial in `y` whose coefficients are polynomials in `x`
//! ([`BiPoly`]), and a polynomial with a symbolic parameter is a
//! polynomial whose coefficients are polynomials in that parameter.

mod bivariate;
pub mod json;
pub mod parse;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::ring::{rat_to_string, Field, Ordered, Rat, Ring, Sign};

pub use bivariate::*;

/// Dense univariate polynomial, `coeffs[i]` is the coefficient of `T^i`.
///
/// The leading coefficient is nonzero; the zero polynomial has no
/// coefficients.
#[derive(Clone, Debug)]
pub struct UniPoly<R> {
    coeffs: Vec<R>,
}

pub type RatPoly = UniPoly<Rat>;

impl<R: Ring> UniPoly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(R::one())
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    /// `c * T^k`
    pub fn monomial(c: R, k: usize) -> Self {
        let mut coeffs = vec![R::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// The main variable `T`.
    pub fn var() -> Self {
        Self::monomial(R::one(), 1)
    }

    /// `T - r`
    pub fn linear_root(r: &R) -> Self {
        Self::new(vec![r.neg(), R::one()])
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| R::from_int(c)).collect())
    }

    /// Product of `(T - r)` over the given roots.
    pub fn from_roots(roots: &[R]) -> Self {
        roots
            .iter()
            .fold(Self::one(), |acc, r| acc.mul_ref(&Self::linear_root(r)))
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the convention `deg 0 = -1`.
    pub fn deg(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    /// Coefficient of `T^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    pub fn lc(&self) -> R {
        self.coeffs.last().cloned().unwrap_or_else(R::zero)
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Self::new(coeffs)
    }

    pub fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.neg_ref())
    }

    pub fn neg_ref(&self) -> Self {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    /// Coefficientwise exact division by a ring element.
    pub fn div_scalar(&self, c: &R) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.exact_div(c)).collect())
    }

    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![R::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs }
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul_ref(self);
        }
        acc
    }

    /// Formal derivative in the main variable.
    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.mul_int(i as i64))
                .collect(),
        )
    }

    /// k-th formal derivative.
    pub fn nth_derivative(&self, k: usize) -> Self {
        (0..k).fold(self.clone(), |p, _| p.derivative())
    }

    /// Horner evaluation.
    pub fn eval(&self, t: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, c| acc.mul(t).add(c))
    }

    /// Evaluation in a ring that the coefficients map into.
    pub fn eval_in<S: Ring>(&self, t: &S, embed: impl Fn(&R) -> S) -> S {
        self.coeffs
            .iter()
            .rev()
            .fold(S::zero(), |acc, c| acc.mul(t).add(&embed(c)))
    }

    /// `self(q(T))`
    pub fn compose(&self, q: &Self) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| acc.mul_ref(q).add_ref(&Self::constant(c.clone())))
    }

    /// `self(T + a)`
    pub fn taylor_shift(&self, a: &R) -> Self {
        let n = self.coeffs.len();
        let mut c = self.coeffs.clone();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let t = c[j + 1].mul(a);
                c[j] = c[j].add(&t);
            }
        }
        Self::new(c)
    }

    /// `T^n self(1/T)` where `n = deg self`.
    pub fn reverse(&self) -> Self {
        let mut c = self.coeffs.clone();
        c.reverse();
        Self::new(c)
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> UniPoly<S> {
        UniPoly::new(self.coeffs.iter().map(f).collect())
    }

    /// Pseudo-remainder `lc(d)^(deg self - deg d + 1) * self mod d`,
    /// computed without divisions (`self` unchanged when already of lower
    /// degree).
    pub fn pseudo_rem(&self, d: &Self) -> Self {
        let dd = d.degree().expect("pseudo_rem by zero polynomial");
        let Some(n) = self.degree() else {
            return Self::zero();
        };
        if n < dd {
            return self.clone();
        }
        let lc = d.lc();
        let mut r = self.clone();
        let mut steps = n - dd + 1;
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let c = r.lc();
            let t = d.scale(&c).shift(rd - dd);
            r = r.scale(&lc).sub_ref(&t);
            steps -= 1;
        }
        r.scale(&lc.pow(steps))
    }

    /// Exact division, valid whenever `d` divides `self` in `R[T]`
    /// (coefficient divisions are delegated to [`Ring::exact_div`]).
    pub fn exact_div(&self, d: &Self) -> Self {
        let dd = d.degree().expect("division by zero polynomial");
        let Some(n) = self.degree() else {
            return Self::zero();
        };
        if n < dd {
            return Self::zero();
        }
        let lc = d.lc();
        let mut r = self.coeffs.clone();
        let mut q = vec![R::zero(); n - dd + 1];
        for k in (0..=n - dd).rev() {
            let c = r[k + dd].exact_div(&lc);
            if c.is_zero() {
                continue;
            }
            for (i, di) in d.coeffs.iter().enumerate() {
                r[k + i] = r[k + i].sub(&c.mul(di));
            }
            q[k] = c;
        }
        Self::new(q)
    }

    /// Content-free test helper: true when every coefficient is zero after
    /// exact evaluation.
    pub fn vanishes_at(&self, t: &R) -> bool {
        self.eval(t).is_zero()
    }
}

impl<F: Field> UniPoly<F> {
    /// Euclidean division.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let Some(n) = self.degree() else {
            return (Self::zero(), Self::zero());
        };
        if n < dd {
            return (Self::zero(), self.clone());
        }
        let inv = d.lc().inv();
        let mut r = self.coeffs.clone();
        let mut q = vec![F::zero(); n - dd + 1];
        for k in (0..=n - dd).rev() {
            let c = r[k + dd].mul(&inv);
            if c.is_zero() {
                continue;
            }
            for (i, di) in d.coeffs.iter().enumerate() {
                r[k + i] = r[k + i].sub(&c.mul(di));
            }
            q[k] = c;
        }
        r.truncate(dd);
        (Self::new(q), Self::new(r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        self.div_scalar(&self.lc())
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns `(g, s, t)` with `s*self + t*other = g`, `g` monic.
    pub fn ext_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = s0.sub_ref(&q.mul_ref(&s1));
            let t = t0.sub_ref(&q.mul_ref(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let lc = r0.lc();
        (r0.div_scalar(&lc), s0.div_scalar(&lc), t0.div_scalar(&lc))
    }

    /// `P / gcd(P, P')`, monic: same distinct roots as `P`, all simple.
    pub fn squarefree_part(&self) -> Self {
        assert!(!self.is_zero(), "squarefree part of the zero polynomial");
        if self.is_constant() {
            return Self::one();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).is_constant()
    }
}

impl RatPoly {
    /// Scales to a primitive integer polynomial with positive leading
    /// coefficient (same roots).
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        use num_integer::Integer;
        let mut l = num_bigint::BigInt::from(1);
        for c in &self.coeffs {
            l = l.lcm(c.denom());
        }
        let ints: Vec<num_bigint::BigInt> =
            self.coeffs.iter().map(|c| (c * Rat::from_integer(l.clone())).to_integer()).collect();
        let mut g = num_bigint::BigInt::zero();
        for c in &ints {
            g = g.gcd(c);
        }
        if self.lc().sign() == Sign::Negative {
            g = -g;
        }
        Self::new(ints.into_iter().map(|c| Rat::from_integer(c / &g)).collect())
    }

    pub fn eval_f64(&self, t: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * t + c.to_f64())
    }

    /// Number of sign variations in the coefficient sequence (zeros skipped).
    pub fn sign_variations(&self) -> usize {
        crate::rootcount::variations_skipping_zeros(self.coeffs.iter().map(|c| c.sign()))
    }
}

impl<R: Ring> PartialEq for UniPoly<R> {
    fn eq(&self, other: &Self) -> bool {
        self.sub_ref(other).is_zero()
    }
}

impl<R: Ring> Ring for UniPoly<R> {
    fn zero() -> Self {
        UniPoly::zero()
    }
    fn one() -> Self {
        UniPoly::one()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        self.add_ref(other)
    }
    fn sub(&self, other: &Self) -> Self {
        self.sub_ref(other)
    }
    fn mul(&self, other: &Self) -> Self {
        self.mul_ref(other)
    }
    fn neg(&self) -> Self {
        self.neg_ref()
    }
    fn exact_div(&self, other: &Self) -> Self {
        UniPoly::exact_div(self, other)
    }
    fn from_rat(r: &Rat) -> Self {
        UniPoly::constant(R::from_rat(r))
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $inner:ident) => {
        impl<R: Ring> $tr<&UniPoly<R>> for &UniPoly<R> {
            type Output = UniPoly<R>;
            fn $m(self, rhs: &UniPoly<R>) -> UniPoly<R> {
                self.$inner(rhs)
            }
        }
        impl<R: Ring> $tr<UniPoly<R>> for UniPoly<R> {
            type Output = UniPoly<R>;
            fn $m(self, rhs: UniPoly<R>) -> UniPoly<R> {
                self.$inner(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl<R: Ring> Neg for UniPoly<R> {
    type Output = UniPoly<R>;
    fn neg(self) -> UniPoly<R> {
        self.neg_ref()
    }
}

impl<R: Ring> Neg for &UniPoly<R> {
    type Output = UniPoly<R>;
    fn neg(self) -> UniPoly<R> {
        self.neg_ref()
    }
}

/// Display with an explicit variable name.
pub struct PolyDisplay<'a, R> {
    poly: &'a UniPoly<R>,
    var: &'a str,
}

impl<R: Ring> UniPoly<R> {
    pub fn display<'a>(&'a self, var: &'a str) -> PolyDisplay<'a, R> {
        PolyDisplay { poly: self, var }
    }
}

impl<R: Ring> fmt::Display for PolyDisplay<'_, R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.poly.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mut s = c.to_string();
            let compound = s.contains(['+', ' ']) || s[1..].contains('-');
            let negative = !compound && s.starts_with('-');
            if negative {
                s.remove(0);
            }
            if first {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            first = false;
            let body = if compound { format!("({s})") } else { s };
            match i {
                0 => f.write_str(&body)?,
                _ => {
                    if body != "1" {
                        write!(f, "{body}*")?;
                    }
                    f.write_str(self.var)?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl<R: Ring> fmt::Display for UniPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display("T"))
    }
}

/// Rational coefficient list as strings, used by several JSON forms.
pub fn rat_coeff_strings(p: &RatPoly) -> Vec<String> {
    p.coeffs().iter().map(rat_to_string).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{int, rat};
    use proptest::prelude::*;

    fn p(c: &[i64]) -> RatPoly {
        RatPoly::from_ints(c)
    }

    #[test]
    fn basic_ring_ops() {
        assert_eq!(p(&[-1, 0, 1]).derivative(), p(&[0, 2]));
        assert_eq!(p(&[-1, 0, 1]).eval(&int(1)), int(0));
        assert_eq!(&p(&[-1, 1]) * &p(&[1, 1]), p(&[-1, 0, 1]));
        assert!(p(&[0, 0]).is_zero());
    }

    #[test]
    fn squarefree_examples() {
        // (T-1)^2
        assert_eq!(p(&[1, -2, 1]).squarefree_part(), p(&[-1, 1]));
        assert_eq!(p(&[1, 0, 1]).squarefree_part(), p(&[1, 0, 1]));
        // (T-1)^3 (T-2) -> (T-1)(T-2)
        let f = p(&[-1, 1]).pow(3).mul_ref(&p(&[-2, 1]));
        assert_eq!(f.squarefree_part(), p(&[2, -3, 1]));
    }

    #[test]
    fn pseudo_remainder_is_fraction_free() {
        let a = p(&[1, 2, 3, 4]);
        let d = p(&[1, 0, 2]);
        let pr = a.pseudo_rem(&d);
        // lc(d)^2 * a = q*d + pr
        let (_, r) = a.scale(&int(4)).div_rem(&d);
        assert_eq!(pr, r);
    }

    #[test]
    fn exact_division_over_parametric_ring() {
        // (T - c)^2 / (T - c) over Q[c]
        let c = UniPoly::<Rat>::var();
        let lin = UniPoly::<RatPoly>::new(vec![c.neg_ref(), RatPoly::one()]);
        let sq = lin.mul_ref(&lin);
        assert_eq!(sq.exact_div(&lin), lin);
    }

    #[test]
    fn taylor_shift_matches_compose() {
        let f = p(&[3, -1, 4, 1, -5]);
        let a = rat(2, 3);
        assert_eq!(f.taylor_shift(&a), f.compose(&RatPoly::new(vec![a.clone(), int(1)])));
    }

    #[test]
    fn display_uses_signs() {
        assert_eq!(p(&[-1, 0, 1]).to_string(), "T^2 - 1");
        assert_eq!(p(&[0, -3, 2]).display("x").to_string(), "2*x^2 - 3*x");
    }

    fn small_poly() -> impl Strategy<Value = RatPoly> {
        prop::collection::vec(-9i64..=9, 1..7).prop_map(|c| RatPoly::from_ints(&c))
    }

    proptest! {
        #[test]
        fn eval_commutes_with_ring_ops(a in small_poly(), b in small_poly(), t in -5i64..=5) {
            let t = int(t);
            prop_assert_eq!((&a + &b).eval(&t), a.eval(&t) + b.eval(&t));
            prop_assert_eq!((&a * &b).eval(&t), a.eval(&t) * b.eval(&t));
        }

        #[test]
        fn squarefree_part_is_squarefree(a in small_poly(), b in small_poly()) {
            prop_assume!(!a.is_zero() && !b.is_zero());
            let f = a.mul_ref(&a).mul_ref(&b);
            let s = f.squarefree_part();
            prop_assert!(s.gcd(&s.derivative()).is_constant());
        }
    }
}
