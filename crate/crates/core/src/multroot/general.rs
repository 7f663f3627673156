//! Peeling along the chain `τ_k = gcd(τ_{k-1}, τ_{k-1}')`.
//!
//! `τ_{M-1}`, with `M` the largest multiplicity, is the squarefree product
//! of the roots of multiplicity `M`. A linear `τ_{M-1}` gives a rational
//! root, a quadratic one a real pair or a complex pair, and a factor
//! without real roots is set aside as complex; `τ_{M-1}^M` is divided out
//! and the chain recomputed. Three or more roots of one multiplicity with a
//! real one among them (equivalently: a real multiplicity repeated more than
//! twice or shared with a complex pair) is reported as unsupported.

use crate::error::{Error, Result};
use crate::poly::UniPoly;
use crate::ring::OrderedField;
use crate::rootcount::count_distinct_real_roots;
use crate::subres::{gcd_by_subres, sequence_for};

use super::{ClosedFormRoot, ComplexPairs, MultiplicityStructure, RealMultipleRoot};

/// `[τ_0 = P, τ_1, ...]` up to and including the first constant entry.
pub fn tau_chain<F: OrderedField>(p: &UniPoly<F>) -> Vec<UniPoly<F>> {
    let mut chain = vec![p.clone()];
    while chain.last().unwrap().degree().unwrap_or(0) > 0 {
        let t = chain.last().unwrap();
        chain.push(gcd_by_subres(t, &t.derivative()));
    }
    chain
}

pub fn extract_general<F: OrderedField>(p: &UniPoly<F>) -> Result<MultiplicityStructure<F>> {
    peel(p, "general")
}

/// Degrees 6 and 7; the unsupported shapes are the ones with three double
/// roots, or two double roots one of which is a complex pair.
pub fn extract_deg67<F: OrderedField>(p: &UniPoly<F>) -> Result<MultiplicityStructure<F>> {
    match p.degree() {
        Some(d @ (6 | 7)) => peel(p, &format!("deg{d}")),
        d => Err(Error::DegreeMismatch {
            expected: "6 or 7".into(),
            actual: d.unwrap_or(0),
        }),
    }
}

fn peel<F: OrderedField>(p: &UniPoly<F>, tag: &str) -> Result<MultiplicityStructure<F>> {
    let n = match p.degree() {
        Some(n) if n >= 2 => n,
        _ => return Err(Error::NoMultipleRoot),
    };
    if !sequence_for(p).principal(0).is_zero() {
        return Err(Error::NoMultipleRoot);
    }
    let mut ms = MultiplicityStructure {
        case_tag: tag.to_string(),
        leading: p.lc(),
        real_roots: Vec::new(),
        complex_pairs: Vec::new(),
        simple_part: UniPoly::one(),
        simple_closed_forms: Vec::new(),
    };
    let mut rest = p.clone();
    let mut shape = Vec::new();
    loop {
        let chain = tau_chain(&rest);
        let m = chain.len() - 1;
        if m <= 1 {
            break;
        }
        if count_distinct_real_roots(&chain[1]) == 0 {
            // every remaining multiple root is non-real
            let classes = squarefree_classes(&chain);
            for (k, a) in classes.iter().enumerate().skip(1) {
                if a.degree().unwrap_or(0) > 0 {
                    ms.complex_pairs.push(ComplexPairs {
                        multiplicity: k + 1,
                        factor: a.monic(),
                    });
                    shape.push(format!("{}x{}c", a.degree().unwrap() / 2, k + 1));
                }
            }
            rest = classes[0].clone();
            break;
        }
        let top = chain[m - 1].clone();
        let d = top.degree().expect("nonconstant");
        let real = count_distinct_real_roots(&top);
        let idx = format!("τ{}", m - 1);
        match (d, real) {
            (1, _) => {
                ms.real_roots.push(RealMultipleRoot {
                    multiplicity: m,
                    root: ClosedFormRoot::rational(top.coeff(0).neg(), top.coeff(1), format!("-{idx}[0]/{idx}[1]")),
                });
                shape.push(format!("1x{m}"));
            }
            (2, 2) => {
                let formula = format!("(-{idx}[1] ± sqrt({idx}[1]^2 - 4 {idx}[2] {idx}[0]))/(2 {idx}[2])");
                for r in ClosedFormRoot::quadratic_pair(&top.coeff(2), &top.coeff(1), &top.coeff(0), &formula) {
                    ms.real_roots.push(RealMultipleRoot { multiplicity: m, root: r });
                }
                shape.push(format!("2x{m}"));
            }
            (_, 0) => {
                ms.complex_pairs.push(ComplexPairs {
                    multiplicity: m,
                    factor: top.monic(),
                });
                shape.push(format!("{}x{m}c", d / 2));
            }
            _ => {
                return Err(Error::UnsupportedPattern {
                    degree: n,
                    shape: format!(
                        "{d} distinct roots of multiplicity {m}, {real} of them real{}",
                        if real < d { " and the rest non-real" } else { "" }
                    ),
                })
            }
        }
        rest = rest.exact_div(&top.pow(m));
    }
    ms.simple_part = rest.monic();
    if ms.simple_part.degree().unwrap_or(0) > 0 {
        shape.push(format!("{}x1", ms.simple_part.degree().unwrap()));
    }
    ms.case_tag = format!("{tag}-{}", shape.join("-"));
    Ok(ms)
}

/// `[A_1, A_2, ...]` with `A_k` the product of the roots of multiplicity
/// exactly `k`: `A_k = (τ_{k-1}/τ_k) / (τ_k/τ_{k+1})`.
fn squarefree_classes<F: OrderedField>(chain: &[UniPoly<F>]) -> Vec<UniPoly<F>> {
    let m = chain.len() - 1;
    let ratio: Vec<UniPoly<F>> = (1..=m).map(|k| chain[k - 1].exact_div(&chain[k])).collect();
    (0..m)
        .map(|k| {
            if k + 1 < m {
                ratio[k].exact_div(&ratio[k + 1])
            } else {
                ratio[k].clone()
            }
        })
        .collect()
}
