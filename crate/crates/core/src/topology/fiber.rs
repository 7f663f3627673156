//! Points on a critical vertical line and their local branch structure.

use std::cmp::Ordering;
use std::rc::Rc;

use crate::algnum::isolate::{bisect, float_bisect, isolate};
use crate::algnum::{AlgElem, AlgebraicNumber, NumberField, QuadElem, RootInterval};
use crate::error::{Error, Result};
use crate::multroot::{self, Branch, ClosedFormRoot};
use crate::poly::{derivative_x, derivative_y, eval_x_in, total_degree, BiPoly, UniPoly};
use crate::rootcount::count_distinct_real_roots;
use crate::ring::{rat_to_f64, Ordered, OrderedField, Rat, Ring, Sign};

use super::BranchCounts;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PointKind {
    /// Simple root of the fiber polynomial.
    Regular,
    /// Multiple root with `P_x != 0`: the curve turns back.
    Ramification,
    /// `P_x = P_y = 0`.
    Singular,
}

impl PointKind {
    pub fn name(self) -> &'static str {
        match self {
            PointKind::Regular => "regular",
            PointKind::Ramification => "ramification",
            PointKind::Singular => "singular",
        }
    }
}

/// Lowest order homogeneous part of the curve at a point, read as the
/// polynomial in the slope `t/s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangentInfo {
    /// Order of the point (degree of the tangent cone).
    pub order: usize,
    /// The cone contains the vertical direction `s = 0`.
    pub vertical: bool,
    pub squarefree: bool,
    /// Distinct real slopes.
    pub real_slopes: usize,
}

impl TangentInfo {
    /// Branch count on each side when the tangent cone decides it: one
    /// smooth branch per distinct real non-vertical tangent.
    pub fn branches(&self) -> Option<BranchCounts> {
        (self.squarefree && !self.vertical).then(|| BranchCounts::new(self.real_slopes, self.real_slopes))
    }
}

#[derive(Clone, Debug)]
pub struct FiberPoint {
    pub multiplicity: usize,
    pub kind: PointKind,
    /// Closed form of a multiple root, over `Q(α)`.
    pub closed_form: Option<ClosedFormRoot<AlgElem>>,
    pub branches: Option<BranchCounts>,
    pub tangent: Option<TangentInfo>,
    /// Squarefree polynomial over `Q(α)` with this `y` as a root, and an
    /// isolating interval for it.
    pub(crate) ypoly: UniPoly<AlgElem>,
    pub(crate) interval: RootInterval,
    /// Index of the first point of a conjugate quadratic pair sharing the
    /// same minimal polynomial.
    pub(crate) pair_of: Option<usize>,
}

impl FiberPoint {
    pub fn y_f64(&self) -> f64 {
        if let Some(c) = &self.closed_form {
            return c.approx();
        }
        let iv = &self.interval;
        if iv.is_exact() {
            return rat_to_f64(&iv.lo);
        }
        let f: Vec<f64> = self.ypoly.coeffs().iter().map(|c| c.to_f64()).collect();
        float_bisect(&f, rat_to_f64(&iv.lo), rat_to_f64(&iv.hi))
    }

    pub fn interval(&self) -> &RootInterval {
        &self.interval
    }

    pub fn describe(&self) -> String {
        match &self.closed_form {
            Some(c) => c.formula().to_string(),
            None => format!("root of {} in [{}, {}]", self.ypoly.display("y"), self.interval.lo, self.interval.hi),
        }
    }

    /// Exact `y` for multiple roots.
    pub fn value(&self) -> Option<QuadElem> {
        self.closed_form.as_ref().map(closed_value)
    }
}

#[derive(Clone, Debug)]
pub struct CriticalFiber {
    pub alpha: AlgebraicNumber,
    /// Ascending in `y`.
    pub points: Vec<FiberPoint>,
    pub case_tag: String,
    pub(crate) field: Rc<NumberField>,
}

impl CriticalFiber {
    pub fn x(&self) -> AlgElem {
        if let Some(r) = self.alpha.as_rat() {
            return AlgElem::from_rat(r);
        }
        self.field.generator()
    }
}

pub(crate) fn closed_value(c: &ClosedFormRoot<AlgElem>) -> QuadElem {
    match c {
        ClosedFormRoot::Rational { num, den, .. } => QuadElem::base(num.exact_div(den)),
        ClosedFormRoot::Quadratic { u, v, w, d, branch, .. } => {
            let b = v.exact_div(d);
            let b = if *branch == Branch::Plus { b } else { b.neg() };
            QuadElem::new(u.exact_div(d), b, w.clone())
        }
    }
}

/// `P(a, y)` evaluated at `y = b`.
pub(crate) fn eval_at(p: &BiPoly, a: &AlgElem, b: &QuadElem) -> QuadElem {
    eval_x_in(p, a).map(|c| QuadElem::base(c.clone())).eval(b)
}

/// Order of two distinct roots given by isolating intervals, refining
/// both until they are disjoint.
pub(crate) fn separate<F: OrderedField>(
    p: &UniPoly<F>,
    a: &mut RootInterval,
    q: &UniPoly<F>,
    b: &mut RootInterval,
) -> Ordering {
    loop {
        if a.hi <= b.lo {
            return Ordering::Less;
        }
        if b.hi <= a.lo {
            return Ordering::Greater;
        }
        if !a.is_exact() && (b.is_exact() || a.width() >= b.width()) {
            *a = bisect(p, a);
        } else {
            *b = bisect(q, b);
        }
    }
}

fn precedes(p: &mut FiberPoint, q: &mut FiberPoint) -> Ordering {
    separate(&p.ypoly, &mut p.interval, &q.ypoly, &mut q.interval)
}

/// Sorts points by `y`, refining their intervals until pairwise disjoint.
pub(crate) fn sort_points(points: &mut Vec<FiberPoint>) {
    let n = points.len();
    for i in 1..n {
        let mut j = i;
        while j > 0 {
            let (a, b) = points.split_at_mut(j);
            if precedes(&mut a[j - 1], &mut b[0]) == Ordering::Greater {
                points.swap(j - 1, j);
                j -= 1;
            } else {
                break;
            }
        }
    }
    // neighbours are now disjoint; make every pair disjoint
    for i in 0..n {
        for j in i + 1..n {
            let (a, b) = points.split_at_mut(j);
            precedes(&mut a[i], &mut b[0]);
        }
    }
}

/// Locates the fiber point carrying a given quadratic-pair value.
fn interval_for(value: &QuadElem, ivs: &[RootInterval]) -> usize {
    ivs.iter()
        .position(|iv| {
            let lo = value.sub(&QuadElem::from_rat(&iv.lo)).sign();
            let hi = value.sub(&QuadElem::from_rat(&iv.hi)).sign();
            (lo == Sign::Zero && hi == Sign::Zero) || (lo == Sign::Positive && hi == Sign::Negative)
        })
        .expect("closed form lies in one of its isolating intervals")
}

/// Points of `P(α, y) = 0` with multiplicities and kinds; branch counts are
/// filled in for regular and ramification points and for singular points
/// whose tangent cone decides them.
pub fn analyze_fiber(p: &BiPoly, alpha: &AlgebraicNumber) -> Result<CriticalFiber> {
    let field = NumberField::new(alpha.clone());
    let a = match alpha.as_rat() {
        Some(r) => AlgElem::from_rat(r),
        None => field.generator(),
    };
    let fib = eval_x_in(p, &a);
    if fib.degree() != p.degree() {
        return Err(Error::Invalid("leading coefficient in y vanishes on the fiber".into()));
    }
    let (tag, multiple, simple) = match multroot::extract(&fib) {
        Ok(ms) => (ms.case_tag.clone(), ms.real_roots, ms.simple_part),
        Err(Error::NoMultipleRoot) => ("simple".to_string(), Vec::new(), fib.monic()),
        Err(e) => return Err(e),
    };
    let mut points = Vec::new();
    for r in multiple {
        let mp = r.root.minimal_poly();
        let ivs = isolate(&mp);
        let value = closed_value(&r.root);
        let k = interval_for(&value, &ivs);
        points.push(FiberPoint {
            multiplicity: r.multiplicity,
            kind: PointKind::Singular,
            closed_form: Some(r.root),
            branches: None,
            tangent: None,
            ypoly: mp,
            interval: ivs[k].clone(),
            pair_of: None,
        });
    }
    for iv in isolate(&simple) {
        points.push(FiberPoint {
            multiplicity: 1,
            kind: PointKind::Regular,
            closed_form: None,
            branches: Some(BranchCounts::new(1, 1)),
            tangent: None,
            ypoly: simple.clone(),
            interval: iv,
            pair_of: None,
        });
    }
    let px = derivative_x(p);
    for pt in points.iter_mut().filter(|pt| pt.multiplicity > 1) {
        let b = pt.value().expect("multiple roots have closed forms");
        if eval_at(&px, &a, &b).sign() != Sign::Zero {
            pt.kind = PointKind::Ramification;
            pt.branches = Some(ramification_branches(p, &a, &b)?);
        } else {
            let t = tangent_slopes(p, &a, &b);
            pt.branches = t.branches();
            pt.tangent = Some(t);
        }
    }
    sort_points(&mut points);
    for i in 0..points.len() {
        points[i].pair_of = None;
        if matches!(points[i].closed_form, Some(ClosedFormRoot::Quadratic { .. })) {
            points[i].pair_of = (0..i).find(|&j| points[j].ypoly == points[i].ypoly);
        }
    }
    Ok(CriticalFiber {
        alpha: field.alpha(),
        points,
        case_tag: tag,
        field,
    })
}

/// Branches at a point with `P_x != 0`: with `k` the order of the first
/// nonvanishing `y`-derivative, the curve is locally `x = Φ(y)` and
/// `Φ^(k) = -P_{y^k} / P_x` decides the side.
pub fn ramification_branches(p: &BiPoly, a: &AlgElem, b: &QuadElem) -> Result<BranchCounts> {
    let px = eval_at(&derivative_x(p), a, b).sign();
    let mut d = p.clone();
    for k in 1..=p.degree().unwrap_or(0) {
        d = derivative_y(&d);
        if k < 2 {
            continue;
        }
        let s = eval_at(&d, a, b).sign();
        if s == Sign::Zero {
            continue;
        }
        if k % 2 == 1 {
            return Ok(BranchCounts::new(1, 1));
        }
        let phi = (s * px).negate();
        return Ok(if phi == Sign::Positive {
            BranchCounts::new(0, 2)
        } else {
            BranchCounts::new(2, 0)
        });
    }
    Err(Error::DegenerateDirection)
}

/// Tangent cone of the curve at `(a, b)` from the Taylor coefficients of
/// `P(a + s, b + t)`.
pub fn tangent_slopes(p: &BiPoly, a: &AlgElem, b: &QuadElem) -> TangentInfo {
    let n = total_degree(p);
    // derivs[i] = d^i P / dx^i / i!
    let mut dx = vec![p.clone()];
    for i in 1..=n {
        let next = derivative_x(&dx[i - 1]).map(|c| c.div_scalar(&Rat::from_int(i as i64)));
        dx.push(next);
    }
    let taylor = |i: usize, j: usize| -> QuadElem {
        let mut q = dx[i].clone();
        for k in 1..=j {
            q = derivative_y(&q).map(|c| c.div_scalar(&Rat::from_int(k as i64)));
        }
        eval_at(&q, a, b)
    };
    for d in 1..=n {
        let cs: Vec<QuadElem> = (0..=d).map(|j| taylor(d - j, j)).collect();
        if cs.iter().all(|c| c.is_zero()) {
            continue;
        }
        let vertical = cs[d].is_zero();
        let g = UniPoly::new(cs);
        if vertical {
            return TangentInfo { order: d, vertical, squarefree: false, real_slopes: 0 };
        }
        return TangentInfo {
            order: d,
            vertical,
            squarefree: g.is_squarefree(),
            real_slopes: count_distinct_real_roots(&g.squarefree_part()),
        };
    }
    unreachable!("a nonzero polynomial has a nonzero Taylor coefficient")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse::parse_bipoly;
    use crate::ring::int;

    fn fiber(src: &str, x: i64) -> CriticalFiber {
        let p = parse_bipoly(src).unwrap();
        analyze_fiber(&p, &AlgebraicNumber::from_rat(int(x))).unwrap()
    }

    #[test]
    fn circle_right_end() {
        let f = fiber("x^2 + y^2 - 1", 1);
        assert_eq!(f.points.len(), 1);
        assert_eq!(f.points[0].kind, PointKind::Ramification);
        assert_eq!(f.points[0].branches, Some(BranchCounts::new(2, 0)));
        let f = fiber("x^2 + y^2 - 1", -1);
        assert_eq!(f.points[0].branches, Some(BranchCounts::new(0, 2)));
    }

    #[test]
    fn inflection_of_cubic_root() {
        let f = fiber("y^3 - x", 0);
        assert_eq!(f.points[0].multiplicity, 3);
        assert_eq!(f.points[0].kind, PointKind::Ramification);
        assert_eq!(f.points[0].branches, Some(BranchCounts::new(1, 1)));
    }

    #[test]
    fn node_of_nodal_cubic() {
        let f = fiber("y^2 - x^2*(x + 1)", 0);
        assert_eq!(f.points.len(), 1);
        assert_eq!(f.points[0].kind, PointKind::Singular);
        let t = f.points[0].tangent.clone().unwrap();
        assert_eq!((t.order, t.real_slopes, t.squarefree), (2, 2, true));
        assert_eq!(f.points[0].branches, Some(BranchCounts::new(2, 2)));
        let f = fiber("y^2 - x^2*(x + 1)", -1);
        assert_eq!(f.points[0].kind, PointKind::Ramification);
        assert_eq!(f.points[0].branches, Some(BranchCounts::new(0, 2)));
    }

    #[test]
    fn isolated_point_and_cusp() {
        let f = fiber("y^2 + x^2", 0);
        assert_eq!(f.points[0].branches, Some(BranchCounts::new(0, 0)));
        // cusp y^2 = x^3: tangent cone y^2 is not squarefree
        let f = fiber("y^2 - x^3", 0);
        assert_eq!(f.points[0].kind, PointKind::Singular);
        assert_eq!(f.points[0].branches, None);
    }

    #[test]
    fn points_are_sorted_with_simple_roots() {
        // y (y - 1)^2 (y + 2) at x = 0, plus x
        let f = fiber("y*(y - 1)^2*(y + 2) + x", 0);
        let ys: Vec<f64> = f.points.iter().map(|p| p.y_f64()).collect();
        assert_eq!(ys.len(), 3);
        assert!((ys[0] + 2.0).abs() < 1e-9 && ys[1].abs() < 1e-9 && (ys[2] - 1.0).abs() < 1e-9);
        assert_eq!(f.points[2].multiplicity, 2);
    }

    #[test]
    fn irrational_fiber() {
        // circle of radius sqrt 2 at x = sqrt 2
        let p = parse_bipoly("x^2 + y^2 - 2").unwrap();
        let a = crate::algnum::isolate_real_roots(&crate::poly::RatPoly::from_ints(&[-2, 0, 1])).unwrap()[1].clone();
        let f = analyze_fiber(&p, &a).unwrap();
        assert_eq!(f.points.len(), 1);
        assert_eq!(f.points[0].branches, Some(BranchCounts::new(2, 0)));
    }
}
