//! Multiplicity structure of a univariate polynomial with multiple roots,
//! with the multiple real roots as closed-form expressions in the
//! coefficients.
//!
//! Degrees 4 and 5 follow fixed case tables driven by subresultant
//! coefficients; higher degrees (and 2, 3) peel the factor of largest
//! multiplicity off the chain `τ_k = gcd(τ_{k-1}, τ_{k-1}')`. Everything is
//! generic over an ordered field, so the same code runs over `Q` and over
//! `Q(α)`.

mod general;
mod low;

use std::fmt;

use crate::error::{Error, Result};
use crate::poly::UniPoly;
use crate::ring::{OrderedField, Sign};

pub use general::{extract_deg67, extract_general, tau_chain};
pub use low::{deg5_c_count, extract_deg4, extract_deg5};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    Plus,
    Minus,
}

/// A root given by an exact expression in the coefficients.
#[derive(Clone, Debug)]
pub enum ClosedFormRoot<F> {
    /// `num / den`
    Rational { num: F, den: F, formula: String },
    /// `(u ± v √w) / d`, `w > 0`
    Quadratic {
        u: F,
        v: F,
        w: F,
        d: F,
        branch: Branch,
        formula: String,
    },
}

impl<F: OrderedField> ClosedFormRoot<F> {
    pub fn rational(num: F, den: F, formula: impl Into<String>) -> Self {
        debug_assert!(!den.is_zero());
        ClosedFormRoot::Rational {
            num,
            den,
            formula: formula.into(),
        }
    }

    /// The two real roots of `c2 T^2 + c1 T + c0` (positive discriminant),
    /// smaller first.
    pub fn quadratic_pair(c2: &F, c1: &F, c0: &F, formula: &str) -> [Self; 2] {
        let w = c1.mul(c1).sub(&c2.mul(c0).mul_int(4));
        debug_assert_eq!(w.sign(), Sign::Positive);
        let d = c2.mul_int(2);
        let mk = |branch| ClosedFormRoot::Quadratic {
            u: c1.neg(),
            v: F::one(),
            w: w.clone(),
            d: d.clone(),
            branch,
            formula: formula.replace('±', if branch == Branch::Plus { "+" } else { "-" }),
        };
        if d.sign() == Sign::Positive {
            [mk(Branch::Minus), mk(Branch::Plus)]
        } else {
            [mk(Branch::Plus), mk(Branch::Minus)]
        }
    }

    pub fn formula(&self) -> &str {
        match self {
            ClosedFormRoot::Rational { formula, .. } | ClosedFormRoot::Quadratic { formula, .. } => formula,
        }
    }

    /// The value, for rational expressions.
    pub fn value(&self) -> Option<F> {
        match self {
            ClosedFormRoot::Rational { num, den, .. } => Some(num.exact_div(den)),
            ClosedFormRoot::Quadratic { .. } => None,
        }
    }

    /// Monic polynomial over `F` of least degree vanishing at the root:
    /// `T - num/den`, or `T^2 - (2u/d) T + (u^2 - v^2 w)/d^2`.
    pub fn minimal_poly(&self) -> UniPoly<F> {
        match self {
            ClosedFormRoot::Rational { num, den, .. } => UniPoly::new(vec![num.exact_div(den).neg(), F::one()]),
            ClosedFormRoot::Quadratic { u, v, w, d, .. } => {
                let dd = d.mul(d);
                UniPoly::new(vec![
                    u.mul(u).sub(&v.mul(v).mul(w)).exact_div(&dd),
                    u.mul_int(-2).exact_div(d),
                    F::one(),
                ])
            }
        }
    }

    /// Floating point value, for display and numeric cross-checks.
    pub fn approx(&self) -> f64 {
        match self {
            ClosedFormRoot::Rational { num, den, .. } => num.exact_div(den).to_f64(),
            ClosedFormRoot::Quadratic { u, v, w, d, branch, .. } => {
                let b = v.exact_div(d);
                let s = b.mul(&b).mul(w).to_f64().sqrt();
                let plus = (*branch == Branch::Plus) == (b.sign() != Sign::Negative);
                u.exact_div(d).to_f64() + if plus { s } else { -s }
            }
        }
    }

    /// Exact check that `P^(k)` vanishes at the root for `k < m`.
    pub fn is_root_of_multiplicity(&self, p: &UniPoly<F>, m: usize) -> bool {
        let mp = self.minimal_poly();
        let mut q = p.clone();
        for _ in 0..m {
            let r = match self {
                ClosedFormRoot::Rational { .. } => q.eval(&mp.coeff(0).neg()),
                ClosedFormRoot::Quadratic { .. } => {
                    let r = q.rem(&mp);
                    if r.is_zero() {
                        F::zero()
                    } else {
                        F::one()
                    }
                }
            };
            if !r.is_zero() {
                return false;
            }
            q = q.derivative();
        }
        true
    }
}

impl<F: OrderedField> fmt::Display for ClosedFormRoot<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.value() {
            Some(v) => write!(f, "{} = {}", self.formula(), v),
            None => write!(f, "{} = {:.12}", self.formula(), self.approx()),
        }
    }
}

#[derive(Clone, Debug)]
pub struct RealMultipleRoot<F> {
    pub multiplicity: usize,
    pub root: ClosedFormRoot<F>,
}

/// Non-real roots sharing one multiplicity: the monic factor they form.
#[derive(Clone, Debug)]
pub struct ComplexPairs<F> {
    pub multiplicity: usize,
    pub factor: UniPoly<F>,
}

#[derive(Clone, Debug)]
pub struct MultiplicityStructure<F> {
    pub case_tag: String,
    pub leading: F,
    /// Multiple real roots, ascending within each multiplicity class.
    pub real_roots: Vec<RealMultipleRoot<F>>,
    pub complex_pairs: Vec<ComplexPairs<F>>,
    /// Monic, squarefree; its roots are exactly the simple roots.
    pub simple_part: UniPoly<F>,
    /// Simple real roots that the case formulas give in closed form.
    pub simple_closed_forms: Vec<ClosedFormRoot<F>>,
}

impl<F: OrderedField> MultiplicityStructure<F> {
    pub fn degree(&self) -> usize {
        self.real_roots.iter().map(|r| r.multiplicity).sum::<usize>()
            + self
                .complex_pairs
                .iter()
                .map(|c| c.multiplicity * c.factor.degree().unwrap_or(0))
                .sum::<usize>()
            + self.simple_part.degree().unwrap_or(0)
    }

    /// One multiplicity per conjugate pair.
    pub fn complex_pair_multiplicities(&self) -> Vec<usize> {
        self.complex_pairs
            .iter()
            .flat_map(|c| std::iter::repeat(c.multiplicity).take(c.factor.degree().unwrap_or(0) / 2))
            .collect()
    }

    /// `leading * Π factors^m * simple_part`; quadratic pairs contribute
    /// their minimal quadratic once.
    pub fn reconstruct(&self) -> UniPoly<F> {
        let mut acc = self.simple_part.scale(&self.leading);
        for r in &self.real_roots {
            match &r.root {
                ClosedFormRoot::Quadratic { branch: Branch::Plus, .. } => {}
                root => acc = acc.mul_ref(&root.minimal_poly().pow(r.multiplicity)),
            }
        }
        for c in &self.complex_pairs {
            acc = acc.mul_ref(&c.factor.pow(c.multiplicity));
        }
        acc
    }

    pub fn multiplicities(&self) -> Vec<usize> {
        self.real_roots.iter().map(|r| r.multiplicity).collect()
    }
}

impl<F: OrderedField> fmt::Display for MultiplicityStructure<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "case: {}", self.case_tag)?;
        for r in &self.real_roots {
            writeln!(f, "real root, multiplicity {}: {}", r.multiplicity, r.root)?;
        }
        for c in &self.complex_pairs {
            writeln!(
                f,
                "complex pairs, multiplicity {}: roots of {}",
                c.multiplicity,
                c.factor.display("T")
            )?;
        }
        for s in &self.simple_closed_forms {
            writeln!(f, "simple root: {s}")?;
        }
        write!(f, "simple part: {}", self.simple_part.display("T"))
    }
}

/// Dispatch on the degree: the fixed tables for 4 and 5, the
/// τ-chain peeling otherwise.
pub fn extract<F: OrderedField>(p: &UniPoly<F>) -> Result<MultiplicityStructure<F>> {
    match p.degree() {
        None | Some(0) | Some(1) => Err(Error::NoMultipleRoot),
        Some(4) => extract_deg4(p),
        Some(5) => extract_deg5(p),
        Some(6) | Some(7) => extract_deg67(p),
        Some(_) => extract_general(p),
    }
}

#[cfg(test)]
mod tests;
