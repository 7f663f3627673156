use crate::ring::{Rat, Ring};

use super::{RatPoly, UniPoly};

/// `P(x, y)` as a polynomial in `y` with coefficients in `Q[x]`:
/// `coeffs[j]` is the coefficient of `y^j`.
pub type BiPoly = UniPoly<RatPoly>;

/// Builds a bivariate polynomial from a dense table, `rows[j][i]` being the
/// coefficient of `x^i y^j`.
pub fn bipoly_from_ints(rows: &[&[i64]]) -> BiPoly {
    BiPoly::new(rows.iter().map(|r| RatPoly::from_ints(r)).collect())
}

/// The variable `x` as a bivariate polynomial.
pub fn bi_x() -> BiPoly {
    BiPoly::constant(RatPoly::var())
}

/// The variable `y` as a bivariate polynomial.
pub fn bi_y() -> BiPoly {
    BiPoly::var()
}

pub fn bi_const(c: Rat) -> BiPoly {
    BiPoly::constant(RatPoly::constant(c))
}

pub fn degree_y(p: &BiPoly) -> usize {
    p.degree().unwrap_or(0)
}

pub fn degree_x(p: &BiPoly) -> usize {
    p.coeffs().iter().filter_map(|c| c.degree()).max().unwrap_or(0)
}

pub fn total_degree(p: &BiPoly) -> usize {
    p.coeffs()
        .iter()
        .enumerate()
        .filter_map(|(j, c)| c.degree().map(|d| d + j))
        .max()
        .unwrap_or(0)
}

/// `P(x0, y)` as a polynomial in `y`.
pub fn eval_x(p: &BiPoly, x0: &Rat) -> RatPoly {
    p.map(|c| c.eval(x0))
}

/// `P(x0, y)` with `x0` in any ring the rationals embed into.
pub fn eval_x_in<F: Ring>(p: &BiPoly, x0: &F) -> UniPoly<F> {
    p.map(|c| c.eval_in(x0, F::from_rat))
}

/// `P(x, y0)` as a polynomial in `x`.
pub fn eval_y(p: &BiPoly, y0: &Rat) -> RatPoly {
    p.eval(&RatPoly::constant(y0.clone()))
}

pub fn eval_f64(p: &BiPoly, x: f64, y: f64) -> f64 {
    p.coeffs()
        .iter()
        .rev()
        .fold(0.0, |acc, c| acc * y + c.eval_f64(x))
}

/// Partial derivative in `x`.
pub fn derivative_x(p: &BiPoly) -> BiPoly {
    p.map(|c| c.derivative())
}

/// Partial derivative in `y`.
pub fn derivative_y(p: &BiPoly) -> BiPoly {
    p.derivative()
}

/// Exchanges the roles of `x` and `y`.
pub fn swap_xy(p: &BiPoly) -> BiPoly {
    let dx = degree_x(p);
    let rows = (0..=dx)
        .map(|i| RatPoly::new(p.coeffs().iter().map(|c| c.coeff(i)).collect()))
        .collect();
    BiPoly::new(rows)
}

/// The linear change of coordinates `P(x + t*y, y)`.
///
/// It is a homeomorphism of the plane, so the curve's topology is
/// unchanged; a point `(x', y')` of the result corresponds to
/// `(x' + t*y', y')` on the original curve.
pub fn shear(p: &BiPoly, t: &Rat) -> BiPoly {
    // x -> x + t*y, as a bivariate polynomial
    let sub = BiPoly::new(vec![RatPoly::var(), RatPoly::constant(t.clone())]);
    let mut out = BiPoly::zero();
    for (j, c) in p.coeffs().iter().enumerate() {
        let cj = c.eval_in(&sub, |a| bi_const(a.clone()));
        out = out.add_ref(&cj.shift(j));
    }
    out
}

/// Content of `P` as a polynomial in `y`: the monic gcd of its `Q[x]`
/// coefficients.
pub fn content_in_y(p: &BiPoly) -> RatPoly {
    let mut g = RatPoly::zero();
    for c in p.coeffs() {
        g = g.gcd(c);
        if g.is_constant() && !g.is_zero() {
            return RatPoly::one();
        }
    }
    g
}

/// `P / content_in_y(P)`.
pub fn primitive_part_in_y(p: &BiPoly) -> BiPoly {
    let c = content_in_y(p);
    if c.is_zero() {
        return p.clone();
    }
    p.map(|a| a.div_rem(&c).0)
}

/// Scalar multiple with coprime integer coefficients and a positive
/// leading coefficient.
pub fn integer_primitive(p: &BiPoly) -> BiPoly {
    if p.is_zero() {
        return p.clone();
    }
    let flat = RatPoly::new(p.coeffs().iter().flat_map(|c| c.coeffs().to_vec()).collect());
    let prim = flat.primitive();
    let f = prim.lc() / flat.lc();
    p.map(|c| c.scale(&f))
}

/// Embeds a univariate polynomial in `x` as a bivariate one.
pub fn from_x_poly(p: &RatPoly) -> BiPoly {
    BiPoly::constant(p.clone())
}

/// Reads a polynomial in `y` only as a univariate polynomial.
pub fn as_y_poly(p: &BiPoly) -> Option<RatPoly> {
    p.coeffs()
        .iter()
        .map(|c| if c.is_constant() { Some(c.coeff(0)) } else { None })
        .collect::<Option<Vec<_>>>()
        .map(RatPoly::new)
}

/// Reads a polynomial free of `y` as a univariate polynomial in `x`.
pub fn as_x_poly(p: &BiPoly) -> Option<RatPoly> {
    match p.degree() {
        None => Some(RatPoly::zero()),
        Some(0) => Some(p.coeff(0)),
        Some(_) => None,
    }
}
