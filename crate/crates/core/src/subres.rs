//! Subresultant polynomials with the sign convention
//! `Sres_j(P,Q) = (-1)^j δ_{p-j-1} det(...)`, `δ_k = (-1)^{k(k+1)/2}`.
//!
//! With this sign the single sequence of `P` and `P'` serves both gcd
//! computations and real root counting. Two independent routes are
//! provided: [`subresultant_by_determinant`] evaluates the defining
//! determinant literally (slow, small sizes) and [`signed_subresultants`]
//! runs a fraction-free remainder recursion. Both work over any [`Ring`];
//! over parametric rings nothing is ever inverted, every division is exact.

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::determinant;
use crate::poly::UniPoly;
use crate::ring::Ring;

/// `δ_k = (-1)^{k(k+1)/2}`
pub fn delta(k: i64) -> i64 {
    if (k * (k + 1) / 2).rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Literal determinant of the subresultant matrix: `q-j` shifted rows of
/// `P`, `p-j` shifted rows of `Q` and `j` rows `(1, -T)`, times
/// `(-1)^j δ_{p-j-1}`.
pub fn subresultant_by_determinant<R: Ring>(p: &UniPoly<R>, q: &UniPoly<R>, j: usize) -> Result<UniPoly<R>> {
    let (Some(dp), Some(dq)) = (p.degree(), q.degree()) else {
        return Err(Error::Invalid("subresultant of a zero polynomial".into()));
    };
    if dp < dq {
        return Err(Error::DegreeOrder { p: dp, q: dq });
    }
    if j > dq || (j == dq && dp == dq) {
        return Err(Error::Invalid(format!("subresultant index {j} out of range")));
    }
    let n = dp + dq - j;
    let zero = UniPoly::<R>::zero();
    let mut m = Vec::with_capacity(n);
    for r in 0..dq - j {
        let mut row = vec![zero.clone(); n];
        for i in 0..=dp {
            row[r + dp - i] = UniPoly::constant(p.coeff(i));
        }
        m.push(row);
    }
    for r in 0..dp - j {
        let mut row = vec![zero.clone(); n];
        for i in 0..=dq {
            row[r + dq - i] = UniPoly::constant(q.coeff(i));
        }
        m.push(row);
    }
    for r in 1..=j {
        let mut row = vec![zero.clone(); n];
        row[n + r - j - 2] = UniPoly::one();
        row[n + r - j - 1] = UniPoly::var().neg_ref();
        m.push(row);
    }
    let sign = if j % 2 == 0 { 1 } else { -1 } * delta(dp as i64 - j as i64 - 1);
    let d = determinant(m);
    Ok(if sign < 0 { d.neg_ref() } else { d })
}

/// All subresultants `Sres_j(P,Q)`, `j = 0..=p`, for `deg P = p > deg Q`,
/// with `Sres_p = P` and `Sres_{p-1} = Q`.
///
/// Fraction-free recursion on pseudo-remainders; defective entries
/// (`deg Sres_j < j`) are kept as computed and gaps are zero.
pub fn signed_subresultants<R: Ring>(p: &UniPoly<R>, q: &UniPoly<R>) -> Result<Vec<UniPoly<R>>> {
    let (Some(dp), Some(dq)) = (p.degree(), q.degree()) else {
        return Err(Error::Invalid("subresultants of a zero polynomial".into()));
    };
    if dp <= dq {
        return Err(Error::DegreeOrder { p: dp, q: dq });
    }
    let mut polys = vec![UniPoly::<R>::zero(); dp + 1];
    let mut s = vec![R::zero(); dp + 2];
    let mut t = vec![R::zero(); dp + 2];
    polys[dp] = p.clone();
    s[dp] = R::one();
    t[dp] = R::one();
    polys[dp - 1] = q.clone();
    t[dp - 1] = q.lc();

    let (mut i, mut j) = (dp + 1, dp);
    while j >= 1 && !polys[j - 1].is_zero() {
        let k = polys[j - 1].degree().expect("nonzero");
        let multiplier = if k == j - 1 {
            s[j - 1] = t[j - 1].clone();
            s[j - 1].mul(&s[j - 1])
        } else {
            s[j - 1] = R::zero();
            for d in 1..j - k {
                let v = t[j - 1].mul(&t[j - d]).exact_div(&s[j]);
                t[j - d - 1] = if d % 2 == 1 { v.neg() } else { v };
            }
            s[k] = t[k].clone();
            for l in k + 1..j - 1 {
                polys[l] = UniPoly::zero();
            }
            polys[k] = polys[j - 1].scale(&s[k]).div_scalar(&t[j - 1]);
            t[j - 1].mul(&s[k])
        };
        if k == 0 {
            break;
        }
        let a = &polys[i - 1];
        let b = &polys[j - 1];
        let e = a.degree().expect("nonzero") + 1 - k;
        let prem = a.pseudo_rem(b);
        let denom = b.lc().pow(e).mul(&s[j]).mul(&t[i - 1]);
        polys[k - 1] = prem.scale(&multiplier).div_scalar(&denom).neg_ref();
        t[k - 1] = polys[k - 1].lc();
        i = j;
        j = k;
    }
    Ok(polys)
}

/// `Sres_j(P, Q)` for `deg P >= deg Q > j`.
pub fn subresultant<R: Ring>(p: &UniPoly<R>, q: &UniPoly<R>, j: usize) -> Result<UniPoly<R>> {
    let (Some(dp), Some(dq)) = (p.degree(), q.degree()) else {
        return Err(Error::Invalid("subresultant of a zero polynomial".into()));
    };
    if dp < dq {
        return Err(Error::DegreeOrder { p: dp, q: dq });
    }
    if j >= dq {
        return Err(Error::Invalid(format!("subresultant index {j} must be below deg Q = {dq}")));
    }
    if dp == dq {
        return subresultant_by_determinant(p, q, j);
    }
    Ok(signed_subresultants(p, q)?.swap_remove(j))
}

/// The subresultant sequence of `P`: `Sres_p = P`, `Sres_{p-1} = P'`,
/// `Sres_j = Sres_j(P, P')` below.
#[derive(Clone, Debug)]
pub struct SubresSequence<R> {
    polys: Vec<UniPoly<R>>,
}

impl<R: Ring> SubresSequence<R> {
    /// `p = deg P`
    pub fn degree(&self) -> usize {
        self.polys.len() - 1
    }

    /// `Sres_j`
    pub fn poly(&self, j: usize) -> &UniPoly<R> {
        &self.polys[j]
    }

    /// Principal coefficient `s_j` (coefficient of `T^j` in `Sres_j`).
    pub fn principal(&self, j: usize) -> R {
        self.polys[j].coeff(j)
    }

    /// Secondary coefficient `s_{j,k}` (coefficient of `T^k` in `Sres_j`).
    pub fn coeff(&self, j: usize, k: usize) -> R {
        self.polys[j].coeff(k)
    }

    /// `[s_p, s_{p-1}, ..., s_0]`
    pub fn principals(&self) -> Vec<R> {
        (0..=self.degree()).rev().map(|j| self.principal(j)).collect()
    }

    /// Least index `i` with `s_i != 0`; `Sres_i` is then `gcd(P, P')`.
    pub fn gcd_index(&self) -> usize {
        (0..=self.degree())
            .find(|&i| !self.principal(i).is_zero())
            .expect("s_p is the leading coefficient of P")
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, &UniPoly<R>)> {
        self.polys.iter().enumerate()
    }
}

impl<R: Ring> fmt::Display for SubresSequence<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{:>3}  {:>4}  {:>24}  Sres_j", "j", "deg", "s_j")?;
        for j in (0..=self.degree()).rev() {
            let p = &self.polys[j];
            let deg = p.degree().map(|d| d.to_string()).unwrap_or_else(|| "-".into());
            writeln!(f, "{:>3}  {:>4}  {:>24}  {}", j, deg, self.principal(j).to_string(), p)?;
        }
        Ok(())
    }
}

/// Subresultant sequence of `P` (`deg P >= 1`).
pub fn sequence_for<R: Ring>(p: &UniPoly<R>) -> SubresSequence<R> {
    let d = p.degree().expect("subresultant sequence of the zero polynomial");
    assert!(d >= 1, "subresultant sequence needs deg P >= 1");
    let polys = signed_subresultants(p, &p.derivative()).expect("deg P' < deg P");
    SubresSequence { polys }
}

/// `Resultant(P, Q) = sres_0(P, Q)`: zero iff `P` and `Q` share a root.
///
/// For `deg P < deg Q` the arguments are exchanged.
pub fn resultant<R: Ring>(p: &UniPoly<R>, q: &UniPoly<R>) -> R {
    let (Some(dp), Some(dq)) = (p.degree(), q.degree()) else {
        return R::zero();
    };
    if dp < dq {
        return resultant(q, p);
    }
    if dq == 0 {
        let v = q.coeff(0).pow(dp);
        return if delta(dp as i64 - 1) < 0 { v.neg() } else { v };
    }
    if dp == dq {
        return subresultant_by_determinant(p, q, 0).expect("valid index").coeff(0);
    }
    signed_subresultants(p, q).expect("deg Q < deg P")[0].coeff(0)
}

/// `gcd(P, Q)` as the subresultant `Sres_i(P,Q)` with `i` the least index
/// such that `s_i != 0`. Not normalized.
pub fn gcd_by_subres<R: Ring>(p: &UniPoly<R>, q: &UniPoly<R>) -> UniPoly<R> {
    match (p.degree(), q.degree()) {
        (None, _) => return q.clone(),
        (_, None) => return p.clone(),
        _ => {}
    }
    let (dp, dq) = (p.degree().unwrap(), q.degree().unwrap());
    if dp < dq {
        return gcd_by_subres(q, p);
    }
    if dq == 0 {
        return q.clone();
    }
    if dp == dq {
        // same gcd as (Q, lc(Q) P - lc(P) Q), whose second entry is of lower degree
        let r = p.scale(&q.lc()).sub_ref(&q.scale(&p.lc()));
        return gcd_by_subres(q, &r);
    }
    let polys = signed_subresultants(p, q).expect("deg Q < deg P");
    for (i, sr) in polys.iter().enumerate().take(dq + 1) {
        if !sr.coeff(i).is_zero() {
            return sr.clone();
        }
    }
    q.clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::RatPoly;
    use crate::ring::{int, Rat};

    fn p(c: &[i64]) -> RatPoly {
        RatPoly::from_ints(c)
    }

    #[test]
    fn delta_values() {
        assert_eq!([delta(0), delta(1), delta(2), delta(3), delta(4), delta(-1)], [1, -1, -1, 1, 1, 1]);
    }

    #[test]
    fn sres0_of_quadratic_and_derivative() {
        let f = p(&[-1, 0, 1]);
        let by_det = subresultant_by_determinant(&f, &f.derivative(), 0).unwrap();
        // determinant [[1,0,-1],[2,0,0],[0,2,0]] = -4, sign (-1)^0 δ_1 = -1
        assert_eq!(by_det, p(&[4]));
        assert_eq!(subresultant(&f, &f.derivative(), 0).unwrap(), by_det);
    }

    #[test]
    fn sres_of_equal_polynomials_vanish() {
        let f = p(&[3, -1, 0, 2]);
        for j in 0..3 {
            assert!(subresultant(&f, &f, j).unwrap().is_zero());
        }
    }

    #[test]
    fn sres1_vanishes_at_double_root() {
        // (T-1)^2 (T+2)
        let f = p(&[2, -3, 0, 1]);
        let s1 = subresultant(&f, &f.derivative(), 1).unwrap();
        assert_eq!(s1, subresultant_by_determinant(&f, &f.derivative(), 1).unwrap());
        assert_eq!(s1.degree(), Some(1));
        assert_eq!(s1.eval(&int(1)), int(0));
    }

    #[test]
    fn sequence_examples() {
        let seq = sequence_for(&p(&[1, 0, 1]));
        assert_eq!(seq.principal(0), int(-4));
        assert_eq!(seq.principal(2), int(1));
        assert_eq!(seq.principal(1), int(2));
        let seq = sequence_for(&p(&[0, -3, 0, 1]));
        assert!(seq.principals().iter().all(|c| !c.is_zero()));
    }

    #[test]
    fn symbolic_double_root_has_zero_discriminant() {
        // (T - c)^2 over Q[c]
        let c = RatPoly::var();
        let lin = UniPoly::<RatPoly>::new(vec![c.neg_ref(), RatPoly::one()]);
        let seq = sequence_for(&lin.mul_ref(&lin));
        assert!(seq.principal(0).is_zero());
    }

    #[test]
    fn resultant_examples() {
        assert_eq!(resultant(&p(&[-1, 1]), &p(&[-1, 1])), int(0));
        assert_ne!(resultant(&p(&[-1, 1]), &p(&[1, 1])), int(0));
        let (a, b) = (p(&[-2, 0, 1]), p(&[-3, 0, 1]));
        let r = resultant(&a, &b);
        assert_ne!(r, int(0));
        assert_eq!(r, subresultant_by_determinant(&a, &b, 0).unwrap().coeff(0));
    }

    #[test]
    fn gcd_examples() {
        let f = p(&[2, -3, 0, 1]);
        let g = gcd_by_subres(&f, &f.derivative());
        assert_eq!(g.degree(), Some(1));
        assert_eq!(g.eval(&int(1)), int(0));
        assert_eq!(gcd_by_subres(&p(&[-1, 0, 1]), &p(&[1, 0, 1])).degree(), Some(0));
        let g = gcd_by_subres(&p(&[2, -3, 1]), &p(&[3, -4, 1]));
        assert_eq!(g.monic(), p(&[-1, 1]));
    }

    #[test]
    fn defective_sequence_matches_determinant() {
        // (T^2+1)^2 (T-3): gcd of degree 2, so Sres_1 and Sres_0 vanish
        let f = p(&[1, 0, 1]).pow(2).mul_ref(&p(&[-3, 1]));
        let d = f.derivative();
        let rec = signed_subresultants(&f, &d).unwrap();
        for j in 0..4 {
            assert_eq!(rec[j], subresultant_by_determinant(&f, &d, j).unwrap(), "j = {j}");
        }
        assert_eq!(rec[2].degree(), Some(2));
        assert!(rec[1].is_zero() && rec[0].is_zero());
    }

    #[test]
    fn gap_in_degrees() {
        // deg Q = deg P - 3 exercises the defective branch from the start
        let a = p(&[1, 2, 0, -1, 0, 3]);
        let b = p(&[5, 0, 1]);
        let rec = signed_subresultants(&a, &b).unwrap();
        for j in 0..2 {
            assert_eq!(rec[j], subresultant_by_determinant(&a, &b, j).unwrap(), "j = {j}");
        }
        let _: Rat = resultant(&a, &b);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn poly(max_deg: usize) -> impl Strategy<Value = RatPoly> {
            prop::collection::vec(-4i64..=4, 1..=max_deg + 1).prop_filter_map("nonzero", |c| {
                let p = RatPoly::from_ints(&c);
                (!p.is_zero()).then_some(p)
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            #[test]
            fn recursion_matches_determinant(a in poly(6), b in poly(4)) {
                let (a, b) = if a.deg() > b.deg() { (a, b) } else { (b, a) };
                prop_assume!(a.deg() > b.deg() && b.deg() >= 1);
                let rec = signed_subresultants(&a, &b).unwrap();
                for j in 0..b.degree().unwrap() {
                    prop_assert_eq!(&rec[j], &subresultant_by_determinant(&a, &b, j).unwrap());
                }
            }

            #[test]
            fn specialization_commutes(c in prop::collection::vec(-3i64..=3, 5), v in -3i64..=3) {
                // P = T^4 + (c0 + c1 u) T^2 + c2 u T + c3 + c4 u^2 over Q[u]
                let k = |n: &[i64]| RatPoly::from_ints(n);
                let p = UniPoly::<RatPoly>::new(vec![
                    k(&[c[3], 0, c[4]]), k(&[0, c[2]]), k(&[c[0], c[1]]), RatPoly::zero(), RatPoly::one(),
                ]);
                let seq = sequence_for(&p);
                let pv = p.map(|q| q.eval(&int(v)));
                let seqv = sequence_for(&pv);
                for j in 0..=4 {
                    prop_assert_eq!(seq.poly(j).map(|q| q.eval(&int(v))), seqv.poly(j).clone());
                }
            }
        }
    }
}
