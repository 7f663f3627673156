//! Distribution of the half-branches seen on a sample line among the points
//! of an adjacent critical fiber.
//!
//! Each point of multiplicity `m` receives at most `m` half-branches on a
//! side, with the parity of `m`. When these constraints and the local
//! analysis leave several distributions open, the real branches of the
//! polar curve `P_y = 0` near the fiber tell them apart: the branches of
//! `P_y` converging to a `y` strictly between two fiber points separate the
//! half-branches of `P` that end at those points.

use std::cmp::Ordering;

use crate::algnum::isolate::isolate;
use crate::algnum::{interval_variations, AlgElem, AlgebraicNumber};
use crate::error::{Error, Result};
use crate::poly::{degree_y, derivative_y, eval_x, eval_x_in, BiPoly, RatPoly, UniPoly};
use crate::ring::{Rat, Ring};
use crate::subres::sequence_for;

use super::fiber::{separate, CriticalFiber};
use super::{discriminant_x, BranchCounts};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

fn ambiguous(fiber: usize, reason: impl Into<String>) -> Error {
    Error::AmbiguousAssignment { fiber, reason: reason.into() }
}

/// All count vectors extending `fixed` with `sum = total`.
fn hypotheses(fixed: &[Option<usize>], mult: &[usize], total: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(fixed.len());
    fn rec(i: usize, left: usize, fixed: &[Option<usize>], mult: &[usize], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == fixed.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let options: Vec<usize> = match fixed[i] {
            Some(c) => vec![c],
            None => (0..=mult[i]).filter(|c| c % 2 == mult[i] % 2).collect(),
        };
        for c in options {
            if c <= left {
                cur.push(c);
                rec(i + 1, left - c, fixed, mult, cur, out);
                cur.pop();
            }
        }
    }
    rec(0, total, fixed, mult, &mut cur, &mut out);
    out
}

/// Fills in the missing branch counts of `fiber`, given the number of
/// real roots on the sample lines to its left and right.
pub fn resolve_fiber(p: &BiPoly, disc: &RatPoly, fiber: &mut CriticalFiber, index: usize, left: usize, right: usize) -> Result<()> {
    if fiber.points.iter().all(|pt| pt.branches.is_some()) {
        let (l, r) = fiber
            .points
            .iter()
            .fold((0, 0), |(l, r), pt| (l + pt.branches.unwrap().left, r + pt.branches.unwrap().right));
        if (l, r) != (left, right) {
            return Err(ambiguous(index, format!("local analysis gives {l}+{r} half-branches, samples show {left}+{right}")));
        }
        return Ok(());
    }
    let mut per_side = Vec::new();
    for (side, total) in [(Side::Left, left), (Side::Right, right)] {
        per_side.push(resolve_side(p, disc, fiber, index, side, total)?);
    }
    for (i, pt) in fiber.points.iter_mut().enumerate() {
        pt.branches = Some(BranchCounts::new(per_side[0][i], per_side[1][i]));
    }
    Ok(())
}

fn resolve_side(p: &BiPoly, disc: &RatPoly, fiber: &CriticalFiber, index: usize, side: Side, total: usize) -> Result<Vec<usize>> {
    let fixed: Vec<Option<usize>> = fiber
        .points
        .iter()
        .map(|pt| pt.branches.map(|b| if side == Side::Left { b.left } else { b.right }))
        .collect();
    let mult: Vec<usize> = fiber.points.iter().map(|pt| pt.multiplicity).collect();
    let hyps = hypotheses(&fixed, &mult, total);
    match hyps.len() {
        0 => Err(ambiguous(index, "no distribution of half-branches fits the multiplicities")),
        1 => Ok(hyps.into_iter().next().unwrap()),
        _ => {
            let ok = polar_filter(p, disc, fiber, index, side, hyps)?;
            match ok.len() {
                1 => Ok(ok.into_iter().next().unwrap()),
                0 => Err(ambiguous(index, "polar curve contradicts every distribution")),
                n => Err(ambiguous(index, format!("{n} distributions remain after the polar curve test"))),
            }
        }
    }
}

/// A rational on the given side of `alpha` with no root of `e` in between;
/// `e` is squarefree and vanishes at `alpha`.
fn side_sample(e: &RatPoly, alpha: &AlgebraicNumber) -> (Rat, Rat) {
    let zero = |r: &Rat| e.eval(r).is_zero();
    if let Some(r) = alpha.as_rat() {
        let mut eps = Rat::from_int(1);
        loop {
            let (lo, hi) = (r - &eps, r + &eps);
            if !zero(&lo) && !zero(&hi) && interval_variations(e, &lo, &hi) == 1 {
                return (lo, hi);
            }
            eps /= Rat::from_int(2);
        }
    }
    let mut a = alpha.clone();
    let mut w = a.width();
    loop {
        if !zero(a.lo()) && !zero(a.hi()) && interval_variations(e, a.lo(), a.hi()) == 1 {
            return (a.lo().clone(), a.hi().clone());
        }
        w /= Rat::from_int(2);
        a = a.refine(&w);
        if let Some(r) = a.as_rat() {
            return side_sample(e, &AlgebraicNumber::from_rat(r.clone()));
        }
    }
}

/// Keeps the hypotheses consistent with the interleaving of the real roots
/// of `P` and `P_y` on a line close to the fiber.
fn polar_filter(
    p: &BiPoly,
    disc: &RatPoly,
    fiber: &CriticalFiber,
    index: usize,
    side: Side,
    hyps: Vec<Vec<usize>>,
) -> Result<Vec<Vec<usize>>> {
    let py = derivative_y(p);
    let dpy = if degree_y(&py) >= 2 {
        let s = sequence_for(&py).principal(0);
        if s.is_zero() {
            return Err(ambiguous(index, "polar curve is not squarefree"));
        }
        s
    } else {
        RatPoly::one()
    };
    let e = disc.mul_ref(&dpy).squarefree_part();
    let (lo, hi) = side_sample(&e, &fiber.alpha);
    let gamma = if side == Side::Left { lo } else { hi };

    // observed: for each real root of P(γ, y), the number of roots of
    // P_y(γ, y) above it
    let pg = eval_x(p, &gamma);
    let pyg = eval_x(&py, &gamma);
    let mut rp = isolate(&pg);
    let mut rpy = isolate(&pyg);
    let mut observed = Vec::with_capacity(rp.len());
    for a in rp.iter_mut() {
        let mut above = 0;
        for b in rpy.iter_mut() {
            if separate(&pg, a, &pyg, b) == Ordering::Less {
                above += 1;
            }
        }
        observed.push(above);
    }

    // limits of the branches of P_y off the fiber points: roots of
    // W = P_y(α, y) / Π (y - β)^(m - 1)
    let a = fiber.x();
    let mut w: UniPoly<AlgElem> = eval_x_in(&py, &a);
    for pt in fiber.points.iter().filter(|pt| pt.multiplicity > 1 && pt.pair_of.is_none()) {
        w = w.div_rem(&pt.ypoly.pow(pt.multiplicity - 1)).0;
    }
    if !w.is_squarefree() {
        return Err(ambiguous(index, "polar curve has a multiple root off the fiber points"));
    }
    let mut points = fiber.points.clone();
    let mut above_point = vec![0usize; points.len()];
    for mut iv in isolate(&w) {
        for (k, pt) in points.iter_mut().enumerate() {
            if separate(&w, &mut iv, &pt.ypoly, &mut pt.interval) == Ordering::Greater {
                above_point[k] += 1;
            }
        }
    }

    let mult: Vec<usize> = points.iter().map(|pt| pt.multiplicity).collect();
    let bounds = |k: usize| -> (usize, usize) {
        let lb = above_point[k] + mult[k + 1..].iter().map(|m| (m - 1) % 2).sum::<usize>();
        let ub = above_point[k] + mult[k..].iter().map(|m| m - 1).sum::<usize>();
        (lb, ub)
    };
    Ok(hyps
        .into_iter()
        .filter(|h| {
            let mut k = 0;
            for (pi, &c) in h.iter().enumerate() {
                let (lb, ub) = bounds(pi);
                for _ in 0..c {
                    if observed[k] < lb || observed[k] > ub {
                        return false;
                    }
                    k += 1;
                }
            }
            true
        })
        .collect())
}

fn check_fiber_degree(p: &BiPoly, expected: usize) -> Result<()> {
    let d = degree_y(p);
    if d != expected {
        return Err(Error::DegreeMismatch { expected: expected.to_string(), actual: d });
    }
    Ok(())
}

fn assign(p: &BiPoly, fiber: &CriticalFiber, left: usize, right: usize) -> Result<Vec<BranchCounts>> {
    let disc = discriminant_x(p)?;
    let mut f = fiber.clone();
    resolve_fiber(p, &disc, &mut f, 0, left, right)?;
    Ok(f.points.iter().map(|pt| pt.branches.unwrap()).collect())
}

/// Branch counts for the points of a fiber of a curve of degree 4 in `y`,
/// including the case of two double points that the local analysis leaves
/// open.
pub fn assign_branches_deg4(p: &BiPoly, fiber: &CriticalFiber, left: usize, right: usize) -> Result<Vec<BranchCounts>> {
    check_fiber_degree(p, 4)?;
    assign(p, fiber, left, right)
}

/// Same for degree 5: two double points and a simple one, or a triple and
/// a double point.
pub fn assign_branches_deg5(p: &BiPoly, fiber: &CriticalFiber, left: usize, right: usize) -> Result<Vec<BranchCounts>> {
    check_fiber_degree(p, 5)?;
    assign(p, fiber, left, right)
}
