//! Fixed case tables for degrees 4 and 5.

use crate::error::{Error, Result};
use crate::poly::UniPoly;
use crate::ring::{OrderedField, Sign};
use crate::rootcount::{generalized_count, SignList};
use crate::subres::{sequence_for, SubresSequence};

use super::{ClosedFormRoot, ComplexPairs, MultiplicityStructure, RealMultipleRoot};

fn check_degree<F: OrderedField>(p: &UniPoly<F>, n: usize) -> Result<SubresSequence<F>> {
    match p.degree() {
        Some(d) if d == n => {}
        d => {
            return Err(Error::DegreeMismatch {
                expected: n.to_string(),
                actual: d.unwrap_or(0),
            })
        }
    }
    let seq = sequence_for(p);
    if !seq.principal(0).is_zero() {
        return Err(Error::NoMultipleRoot);
    }
    Ok(seq)
}

fn linear<F: OrderedField>(r: &F) -> UniPoly<F> {
    UniPoly::new(vec![r.neg(), F::one()])
}

fn real<F: OrderedField>(m: usize, root: ClosedFormRoot<F>) -> RealMultipleRoot<F> {
    RealMultipleRoot { multiplicity: m, root }
}

fn structure<F: OrderedField>(tag: &str, p: &UniPoly<F>) -> MultiplicityStructure<F> {
    MultiplicityStructure {
        case_tag: tag.to_string(),
        leading: p.lc(),
        real_roots: Vec::new(),
        complex_pairs: Vec::new(),
        simple_part: UniPoly::one(),
        simple_closed_forms: Vec::new(),
    }
}

fn count<F: OrderedField>(values: &[F]) -> i64 {
    generalized_count(&SignList::from_elements(values).expect("leading coefficient is nonzero"))
}

/// `γ = num / (den β^k)` when `β ≠ 0`, otherwise the root of the exact
/// quotient `q / (T - β)^k`, which is linear.
fn cofactor_root<F: OrderedField>(
    beta: &F,
    k: usize,
    num: &F,
    den: &F,
    formula: &str,
    q: &UniPoly<F>,
) -> ClosedFormRoot<F> {
    if beta.is_zero() {
        let lin = q.exact_div(&linear(beta).pow(k));
        ClosedFormRoot::rational(lin.coeff(0).neg(), lin.coeff(1), "root of the linear cofactor")
    } else {
        ClosedFormRoot::rational(num.clone(), den.mul(&beta.pow(k)), formula)
    }
}

pub fn extract_deg4<F: OrderedField>(p: &UniPoly<F>) -> Result<MultiplicityStructure<F>> {
    let seq = check_degree(p, 4)?;
    let a = |i| p.coeff(i);
    let (s1, s2) = (seq.principal(1), seq.principal(2));
    if s1.is_zero() && s2.is_zero() {
        let mut ms = structure("deg4-case1", p);
        ms.real_roots.push(real(4, ClosedFormRoot::rational(a(3).neg(), a(4).mul_int(4), "-a3/(4 a4)")));
        return Ok(ms);
    }
    if s1.is_zero() {
        let (s21, s20) = (seq.coeff(2, 1), seq.coeff(2, 0));
        let disc = s21.mul(&s21).sub(&s2.mul(&s20).mul_int(4));
        return Ok(match disc.sign() {
            Sign::Zero => {
                let mut ms = structure("deg4-case2", p);
                let beta_root = ClosedFormRoot::rational(s21.neg(), s2.mul_int(2), "-s21/(2 s2)");
                let beta = beta_root.value().expect("rational");
                let gamma = if beta.is_zero() {
                    // β = 0: P = a4 T^3 (T - γ), so γ = -a3/a4
                    ClosedFormRoot::rational(a(3).neg(), a(4), "-a3/a4")
                } else {
                    cofactor_root(&beta, 3, &a(0), &a(4), "a0/(a4 β^3)", p)
                };
                ms.real_roots.push(real(3, beta_root));
                ms.simple_part = linear(&gamma.value().expect("rational"));
                ms.simple_closed_forms.push(gamma);
                ms
            }
            Sign::Positive => {
                let mut ms = structure("deg4-case3", p);
                for r in ClosedFormRoot::quadratic_pair(&s2, &s21, &s20, "(-s21 ± sqrt(s21^2 - 4 s2 s20))/(2 s2)") {
                    ms.real_roots.push(real(2, r));
                }
                ms
            }
            Sign::Negative => {
                let mut ms = structure("deg4-case4", p);
                ms.complex_pairs.push(ComplexPairs {
                    multiplicity: 2,
                    factor: seq.poly(2).monic(),
                });
                ms
            }
        });
    }
    let mut ms = structure("deg4-case5", p);
    let beta = ClosedFormRoot::rational(seq.coeff(1, 0).neg(), s1, "-s10/s1");
    let b = beta.value().expect("rational");
    ms.simple_part = p.exact_div(&linear(&b).pow(2)).monic();
    ms.real_roots.push(real(2, beta));
    Ok(ms)
}

pub fn extract_deg5<F: OrderedField>(p: &UniPoly<F>) -> Result<MultiplicityStructure<F>> {
    let seq = check_degree(p, 5)?;
    let a = |i| p.coeff(i);
    let (s1, s2, s3) = (seq.principal(1), seq.principal(2), seq.principal(3));

    if s1.is_zero() && s2.is_zero() && s3.is_zero() {
        let mut ms = structure("deg5-1", p);
        ms.real_roots.push(real(5, ClosedFormRoot::rational(a(4).neg(), a(5).mul_int(5), "-a4/(5 a5)")));
        return Ok(ms);
    }

    if s1.is_zero() && s2.is_zero() {
        let tau1 = seq.poly(3).clone();
        let t_seq = sequence_for(&tau1);
        if t_seq.principal(0).is_zero() && t_seq.principal(1).is_zero() {
            let mut ms = structure("deg5-2a", p);
            let beta = ClosedFormRoot::rational(seq.coeff(3, 2).neg(), s3.mul_int(3), "-s32/(3 s3)");
            let b = beta.value().expect("rational");
            let gamma = cofactor_root(&b, 4, &a(0).neg(), &a(5), "-a0/(a5 β^4)", p);
            ms.simple_part = linear(&gamma.value().expect("rational"));
            ms.simple_closed_forms.push(gamma);
            ms.real_roots.push(real(4, beta));
            return Ok(ms);
        }
        let mut ms = structure("deg5-2b", p);
        let beta = ClosedFormRoot::rational(t_seq.coeff(1, 0).neg(), t_seq.principal(1), "-s10(τ1)/s1(τ1)");
        let b = beta.value().expect("rational");
        let gamma = cofactor_root(&b, 2, &seq.coeff(3, 0).neg(), &s3, "-s30/(s3 β^2)", &tau1);
        ms.real_roots.push(real(3, beta));
        ms.real_roots.push(real(2, gamma));
        return Ok(ms);
    }

    let c6 = |last: F| count(&[a(5), a(5).mul_int(5), s3.clone(), s2.clone(), last, F::zero()]);

    if s1.is_zero() {
        let tau1 = seq.poly(2).clone();
        let (s21, s20) = (seq.coeff(2, 1), seq.coeff(2, 0));
        let disc = s21.mul(&s21).sub(&s2.mul(&s20).mul_int(4));
        let c = c6(F::zero());
        if disc.is_zero() {
            // τ2 linear: a triple root
            let mut ms = structure(if c == 3 { "deg5-3a" } else { "deg5-3b" }, p);
            let beta = ClosedFormRoot::rational(s21.neg(), s2.mul_int(2), "-s21/(2 s2)");
            let b = beta.value().expect("rational");
            ms.simple_part = p.exact_div(&linear(&b).pow(3)).monic();
            ms.real_roots.push(real(3, beta));
            return Ok(ms);
        }
        if c == 3 {
            let mut ms = structure("deg5-3c", p);
            for r in ClosedFormRoot::quadratic_pair(&s2, &s21, &s20, "(-s21 ± sqrt(s21^2 - 4 s2 s20))/(2 s2)") {
                ms.real_roots.push(real(2, r));
            }
            let gamma = if s20.is_zero() {
                let lin = p.exact_div(&tau1.pow(2));
                ClosedFormRoot::rational(lin.coeff(0).neg(), lin.coeff(1), "root of P/Sres2^2")
            } else {
                ClosedFormRoot::rational(
                    a(0).mul(&s2).mul(&s2).neg(),
                    a(5).mul(&s20).mul(&s20),
                    "-a0 s2^2/(a5 s20^2)",
                )
            };
            ms.simple_part = linear(&gamma.value().expect("rational"));
            ms.simple_closed_forms.push(gamma);
            return Ok(ms);
        }
        let mut ms = structure("deg5-3d", p);
        let beta = ClosedFormRoot::rational(
            a(0).mul(&s2).mul(&s2).neg(),
            a(5).mul(&s20).mul(&s20),
            "-a0 s2^2/(a5 s20^2)",
        );
        ms.complex_pairs.push(ComplexPairs {
            multiplicity: 2,
            factor: tau1.monic(),
        });
        ms.simple_part = linear(&beta.value().expect("rational"));
        ms.simple_closed_forms.push(beta);
        return Ok(ms);
    }

    let c = c6(s1.clone());
    let mut ms = structure(if c == 4 { "deg5-4a" } else { "deg5-4b" }, p);
    let beta = ClosedFormRoot::rational(seq.coeff(1, 0).neg(), s1, "-s10/s1");
    let b = beta.value().expect("rational");
    ms.simple_part = p.exact_div(&linear(&b).pow(2)).monic();
    ms.real_roots.push(real(2, beta));
    Ok(ms)
}

/// The sign count `C` separating the degree-5 subcases: 3 or 1 when the
/// largest multiplicity is 3 or a double pair, 4 or 2 for a single double
/// root. `None` for the other shapes.
pub fn deg5_c_count<F: OrderedField>(p: &UniPoly<F>) -> Result<Option<i64>> {
    let seq = check_degree(p, 5)?;
    let a = |i| p.coeff(i);
    let (s1, s2, s3) = (seq.principal(1), seq.principal(2), seq.principal(3));
    let c6 = |last: F| count(&[a(5), a(5).mul_int(5), s3.clone(), s2.clone(), last, F::zero()]);
    Ok(match (s1.is_zero(), s2.is_zero()) {
        (true, true) => None,
        (true, false) => Some(c6(F::zero())),
        (false, _) => Some(c6(s1)),
    })
}
