//! Real root isolation by Descartes' rule on bisected intervals, generic
//! over ordered coefficient fields.

use crate::poly::UniPoly;
use crate::ring::{OrderedField, Rat, Ring, Sign};
use crate::rootcount::descartes_positive_count;

/// An isolating interval `(lo, hi)` with a sign change of the polynomial, or
/// an exact rational root when `lo == hi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: Rat,
    pub hi: Rat,
}

impl RootInterval {
    pub fn exact(r: Rat) -> Self {
        RootInterval { lo: r.clone(), hi: r }
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn mid(&self) -> Rat {
        (&self.lo + &self.hi) / Rat::from_int(2)
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }
}

/// `p(a + (b - a) T)`
fn rescale<F: Ring>(p: &UniPoly<F>, a: &Rat, b: &Rat) -> UniPoly<F> {
    let q = p.taylor_shift(&F::from_rat(a));
    let w = F::from_rat(&(b - a));
    let mut f = F::one();
    let mut out = Vec::with_capacity(q.coeffs().len());
    for c in q.coeffs() {
        out.push(c.mul(&f));
        f = f.mul(&w);
    }
    UniPoly::new(out)
}

/// Sign variations of `(1+T)^n p((a + bT)/(1 + T))`: an upper bound, of the
/// same parity, on the number of roots of `p` in the open interval `(a, b)`;
/// `0` and `1` are exact.
pub fn interval_variations<F: OrderedField>(p: &UniPoly<F>, a: &Rat, b: &Rat) -> usize {
    let q = rescale(p, a, b).reverse().taylor_shift(&F::one());
    descartes_positive_count(&q)
}

/// `1 + max |a_i / a_n|`, strictly above every root modulus.
pub fn cauchy_bound<F: OrderedField>(p: &UniPoly<F>) -> Rat {
    let n = p.degree().expect("root bound of the zero polynomial");
    let lc = p.lc();
    let one = Rat::from_int(1);
    let mut m = Rat::from_int(0);
    for c in &p.coeffs()[..n] {
        if c.is_zero() {
            continue;
        }
        let (lo, hi) = c.exact_div(&lc).enclosure(&one);
        let a = abs(&lo).max(abs(&hi));
        if a > m {
            m = a;
        }
    }
    // integral bounds keep the bisection points short
    let b = m + one;
    Rat::from_integer(b.ceil().to_integer())
}

fn abs(r: &Rat) -> Rat {
    if r < &Rat::from_int(0) {
        -r
    } else {
        r.clone()
    }
}

pub fn sign_at_rat<F: OrderedField>(p: &UniPoly<F>, r: &Rat) -> Sign {
    p.eval(&F::from_rat(r)).sign()
}

/// Isolating intervals for the real roots of a squarefree `p`, ascending.
pub fn isolate<F: OrderedField>(p: &UniPoly<F>) -> Vec<RootInterval> {
    let Some(n) = p.degree() else {
        panic!("root isolation of the zero polynomial");
    };
    if n == 0 {
        return Vec::new();
    }
    let b = cauchy_bound(p);
    let mut out = Vec::new();
    let mut stack = vec![(-b.clone(), b)];
    while let Some((lo, hi)) = stack.pop() {
        match interval_variations(p, &lo, &hi) {
            0 => {}
            1 => out.push(RootInterval { lo, hi }),
            _ => {
                let mid = (&lo + &hi) / Rat::from_int(2);
                if sign_at_rat(p, &mid).is_zero() {
                    // step off the rational root so that no endpoint is a root
                    let mut eps = (&hi - &lo) / Rat::from_int(4);
                    loop {
                        let (a, b) = (&mid - &eps, &mid + &eps);
                        if !sign_at_rat(p, &a).is_zero()
                            && !sign_at_rat(p, &b).is_zero()
                            && interval_variations(p, &a, &b) == 1
                        {
                            out.push(RootInterval::exact(mid.clone()));
                            stack.push((lo, a));
                            stack.push((b, hi));
                            break;
                        }
                        eps /= Rat::from_int(2);
                    }
                } else {
                    stack.push((lo, mid.clone()));
                    stack.push((mid, hi));
                }
            }
        }
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    out
}

/// Halves an isolating interval of a simple root of `p`.
pub fn bisect<F: OrderedField>(p: &UniPoly<F>, iv: &RootInterval) -> RootInterval {
    if iv.is_exact() {
        return iv.clone();
    }
    let mid = iv.mid();
    let sm = sign_at_rat(p, &mid);
    if sm.is_zero() {
        RootInterval::exact(mid)
    } else if sm == sign_at_rat(p, &iv.lo) {
        RootInterval { lo: mid, hi: iv.hi.clone() }
    } else {
        RootInterval { lo: iv.lo.clone(), hi: mid }
    }
}

/// Float snapshot of the root in `[lo, hi]` where `p` changes sign.
pub(crate) fn float_bisect(p: &[f64], mut lo: f64, mut hi: f64) -> f64 {
    let eval = |t: f64| p.iter().rev().fold(0.0, |acc, c| acc * t + c);
    let slo = eval(lo) > 0.0;
    for _ in 0..64 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if (eval(mid) > 0.0) == slo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

pub fn refine_to<F: OrderedField>(p: &UniPoly<F>, iv: &RootInterval, width: &Rat) -> RootInterval {
    let mut iv = iv.clone();
    while iv.width() > *width {
        iv = bisect(p, &iv);
    }
    iv
}
