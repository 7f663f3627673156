//! Relative position of two ellipsoids from the pencil `λA + B`.
//!
//! The characteristic polynomial `f(λ) = det(λA + B)` decides separation and
//! external tangency from the signs of its real roots. The eigenvalue curve
//! `S(λ, μ) = det(λA + B - μI)` carries the index function `Id(λ)`, the
//! number of positive eigenvalues of `λA + B`.
//!
//! Every ellipsoid is normalized so that `X A X^T < 0` inside it.

use std::cmp::Ordering;
use std::fmt;

use serde_json::{json, Value};

use crate::algnum::{isolate_real_roots, AlgElem, AlgebraicNumber, NumberField};
use crate::error::{Error, Result};
use crate::linalg::determinant;
use crate::multroot::{extract_deg4, Branch, ClosedFormRoot, MultiplicityStructure};
use crate::poly::json::rat_from_value;
use crate::poly::{degree_y, eval_x, eval_x_in, rat_coeff_strings, BiPoly, RatPoly, UniPoly};
use crate::ring::{rat_to_string, Ordered, Rat, Ring, Sign};
use crate::rootcount::{count_distinct_real_roots, descartes_positive_count, variations_skipping_zeros};
use crate::subres::sequence_for;
use crate::topology::{discriminant_x, sample_points, squarefree_in_y};

pub type Matrix4 = [[Rat; 4]; 4];

/// A quadric `X A X^T = 0` with `X = (x, y, z, 1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Quadric {
    matrix: Matrix4,
}

impl Quadric {
    pub fn new(matrix: Matrix4) -> Result<Self> {
        for i in 0..4 {
            for j in 0..i {
                if matrix[i][j] != matrix[j][i] {
                    return Err(Error::Invalid(format!("matrix is not symmetric at ({i}, {j})")));
                }
            }
        }
        Ok(Quadric { matrix })
    }

    /// Validates an ellipsoid and scales it so that its interior is
    /// negative.
    pub fn ellipsoid(matrix: Matrix4) -> Result<Self> {
        Quadric::new(matrix)?.as_ellipsoid()
    }

    pub fn from_ints(rows: [[i64; 4]; 4]) -> Result<Self> {
        Quadric::new(rows.map(|r| r.map(Rat::from_int)))
    }

    /// Sphere of squared radius `r2` centred at `c`.
    pub fn sphere(c: [Rat; 3], r2: Rat) -> Self {
        let one = Rat::one();
        let zero = Rat::zero();
        let mut m: Matrix4 = std::array::from_fn(|i| std::array::from_fn(|j| if i == j { one.clone() } else { zero.clone() }));
        let mut k = -r2;
        for i in 0..3 {
            m[i][3] = -c[i].clone();
            m[3][i] = -c[i].clone();
            k += &c[i] * &c[i];
        }
        m[3][3] = k;
        Quadric { matrix: m }
    }

    /// Ellipsoid `(X - c) M (X - c)^T = r` for a positive definite `M` and
    /// `r > 0`.
    pub fn centred(m: [[Rat; 3]; 3], c: [Rat; 3], r: Rat) -> Result<Self> {
        let mut a: Matrix4 = std::array::from_fn(|_| std::array::from_fn(|_| Rat::zero()));
        for i in 0..3 {
            for j in 0..3 {
                a[i][j] = m[i][j].clone();
            }
        }
        let mc: Vec<Rat> = (0..3).map(|i| (0..3).map(|j| &m[i][j] * &c[j]).sum()).collect();
        for i in 0..3 {
            a[i][3] = -mc[i].clone();
            a[3][i] = -mc[i].clone();
        }
        a[3][3] = (0..3).map(|i| &c[i] * &mc[i]).sum::<Rat>() - r;
        Quadric::ellipsoid(a)
    }

    /// Reads 16 rationals in row-major order, as numbers or strings such as
    /// `"-3/2"`.
    pub fn from_json(v: &Value) -> Result<Self> {
        let items = v
            .as_array()
            .ok_or_else(|| Error::Invalid("matrix must be a JSON array of 16 rationals".into()))?;
        let flat: Vec<&Value> = if items.len() == 4 && items.iter().all(Value::is_array) {
            items.iter().flat_map(|r| r.as_array().unwrap().iter()).collect()
        } else {
            items.iter().collect()
        };
        if flat.len() != 16 {
            return Err(Error::Invalid(format!("matrix has {} entries, expected 16", flat.len())));
        }
        let entries = flat.iter().map(|e| rat_from_value(e)).collect::<Result<Vec<_>>>()?;
        Quadric::new(std::array::from_fn(|i| std::array::from_fn(|j| entries[4 * i + j].clone())))
    }

    pub fn matrix(&self) -> &Matrix4 {
        &self.matrix
    }

    pub fn scaled(&self, c: &Rat) -> Self {
        Quadric {
            matrix: self.matrix.clone().map(|r| r.map(|v| v * c)),
        }
    }

    pub fn determinant(&self) -> Rat {
        determinant(self.matrix.iter().map(|r| r.to_vec()).collect())
    }

    /// Value of `X A X^T` at a point.
    pub fn eval(&self, p: &[Rat; 3]) -> Rat {
        let x = [p[0].clone(), p[1].clone(), p[2].clone(), Rat::one()];
        let mut s = Rat::zero();
        for i in 0..4 {
            for j in 0..4 {
                s += &x[i] * &self.matrix[i][j] * &x[j];
            }
        }
        s
    }

    fn as_ellipsoid(&self) -> Result<Self> {
        let m = &self.matrix;
        let minors: Vec<Rat> = (1..=3)
            .map(|k| determinant((0..k).map(|i| m[i][..k].to_vec()).collect()))
            .collect();
        let signs: Vec<Sign> = minors.iter().map(|v| v.sign()).collect();
        let q = match signs[..] {
            [Sign::Positive, Sign::Positive, Sign::Positive] => self.clone(),
            [Sign::Negative, Sign::Positive, Sign::Negative] => self.scaled(&Rat::from_int(-1)),
            _ => return Err(Error::NotAnEllipsoid("the quadratic part is not definite".into())),
        };
        // det A = det M * (a44 - b^T M^-1 b)
        let k = q.determinant() / determinant((0..3).map(|i| q.matrix[i][..3].to_vec()).collect());
        if k.sign() != Sign::Negative {
            return Err(Error::NotAnEllipsoid("the quadric has no interior points".into()));
        }
        Ok(q)
    }
}

/// `det(λA + B)`.
pub fn characteristic_polynomial(a: &Quadric, b: &Quadric) -> RatPoly {
    let m = (0..4)
        .map(|i| {
            (0..4)
                .map(|j| RatPoly::new(vec![b.matrix[i][j].clone(), a.matrix[i][j].clone()]))
                .collect()
        })
        .collect();
    determinant(m)
}

/// `S(λ, μ) = det(λA + B - μI)`, with `λ` as `x` and `μ` as `y`.
pub fn eigenvalue_curve(a: &Quadric, b: &Quadric) -> BiPoly {
    let m = (0..4)
        .map(|i| {
            (0..4)
                .map(|j| {
                    let c = RatPoly::new(vec![b.matrix[i][j].clone(), a.matrix[i][j].clone()]);
                    let mu = if i == j { RatPoly::constant(Rat::from_int(-1)) } else { RatPoly::zero() };
                    BiPoly::new(vec![c, mu])
                })
                .collect()
        })
        .collect();
    determinant(m)
}

/// Number of positive eigenvalues of `λ0 A + B`.
pub fn index_function(a: &Quadric, b: &Quadric, lambda0: &Rat) -> usize {
    descartes_positive_count(&eval_x(&eigenvalue_curve(a, b), lambda0))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Classification {
    Separated,
    ExternallyTouching,
    Overlapping,
}

impl Classification {
    pub fn name(self) -> &'static str {
        match self {
            Classification::Separated => "Separated",
            Classification::ExternallyTouching => "ExternallyTouching",
            Classification::Overlapping => "Overlapping",
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A real root of the characteristic polynomial.
#[derive(Clone, Debug)]
pub struct PencilRoot {
    pub value: AlgebraicNumber,
    pub multiplicity: usize,
    pub sign: Sign,
}

impl PencilRoot {
    pub fn describe(&self) -> String {
        self.value.to_string()
    }
}

/// Distinct real roots of `f`, ascending, with multiplicities.
pub fn real_roots_with_multiplicity(f: &RatPoly) -> Result<Vec<PencilRoot>> {
    if f.degree().unwrap_or(0) == 0 {
        return Ok(Vec::new());
    }
    let roots = isolate_real_roots(&f.squarefree_part())?;
    Ok(roots
        .into_iter()
        .map(|value| {
            let mut multiplicity = 0;
            let mut d = f.clone();
            while !d.is_zero() && value.is_root_of(&d) {
                multiplicity += 1;
                d = d.derivative();
            }
            let sign = match value.cmp_rat(&Rat::zero()) {
                Ordering::Less => Sign::Negative,
                Ordering::Equal => Sign::Zero,
                Ordering::Greater => Sign::Positive,
            };
            PencilRoot {
                value,
                multiplicity,
                sign,
            }
        })
        .collect())
}

/// Exact sign of a closed-form root over the rationals.
pub fn closed_form_sign(r: &ClosedFormRoot<Rat>) -> Sign {
    match r {
        ClosedFormRoot::Rational { num, den, .. } => (num / den).sign(),
        ClosedFormRoot::Quadratic { u, v, w, d, branch, .. } => {
            let a = u / d;
            let b = v / d;
            let plus = (*branch == Branch::Plus) == (b.sign() != Sign::Negative);
            let a2 = &a * &a;
            let s2 = &b * &b * w;
            if s2.is_zero() {
                return a.sign();
            }
            match (plus, a.sign()) {
                (true, Sign::Positive | Sign::Zero) => Sign::Positive,
                (false, Sign::Negative | Sign::Zero) => Sign::Negative,
                (true, _) => (s2 - a2).sign(),
                (false, _) => (a2 - s2).sign(),
            }
        }
    }
}

/// Separation and tangency from the positive roots of `f`.
pub fn classify_pair(a: &Quadric, b: &Quadric) -> Result<Classification> {
    let (a, b) = (a.as_ellipsoid()?, b.as_ellipsoid()?);
    let f = characteristic_polynomial(&a, &b);
    classify_charpoly(&f)
}

fn classify_charpoly(f: &RatPoly) -> Result<Classification> {
    if f.degree() != Some(4) {
        return Err(Error::DegreeMismatch {
            expected: "4".into(),
            actual: f.degree().unwrap_or(0),
        });
    }
    if sequence_for(f).principal(0).is_zero() {
        let ms = extract_deg4(f)?;
        let touching = ms
            .real_roots
            .iter()
            .any(|r| r.multiplicity == 2 && closed_form_sign(&r.root) == Sign::Positive);
        if touching {
            return Ok(Classification::ExternallyTouching);
        }
    }
    let positive = real_roots_with_multiplicity(f)?
        .iter()
        .filter(|r| r.sign == Sign::Positive)
        .count();
    Ok(if positive >= 2 {
        Classification::Separated
    } else {
        Classification::Overlapping
    })
}

/// How the four eigenvalues meet on a critical line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FiberShape {
    /// `(μ - β)^4`
    Quadruple,
    /// `(μ - β)^3 (μ - γ)`
    TriplePlusSimple,
    /// `(μ - β)^2 (μ - γ)^2`
    TwoDoubles,
    /// `(μ - β)^2 (μ - γ1)(μ - γ2)`
    DoublePlusTwoSimple,
}

impl FiberShape {
    pub fn of<F: crate::ring::OrderedField>(ms: &MultiplicityStructure<F>) -> Result<Self> {
        let unsupported = || Error::UnsupportedPattern {
            degree: 4,
            shape: format!("{} with non-real roots", ms.case_tag),
        };
        if !ms.complex_pairs.is_empty() {
            return Err(unsupported());
        }
        let simple = ms.simple_part.degree().unwrap_or(0);
        let mut mults = ms.multiplicities();
        mults.sort_unstable();
        match (mults.as_slice(), simple) {
            ([4], 0) => Ok(FiberShape::Quadruple),
            ([3], 1) => Ok(FiberShape::TriplePlusSimple),
            ([2, 2], 0) => Ok(FiberShape::TwoDoubles),
            ([2], 2) => Ok(FiberShape::DoublePlusTwoSimple),
            _ => Err(unsupported()),
        }
    }

    pub fn describe(self) -> &'static str {
        match self {
            FiberShape::Quadruple => "(mu-b)^4",
            FiberShape::TriplePlusSimple => "(mu-b)^3(mu-c)",
            FiberShape::TwoDoubles => "(mu-b)^2(mu-c)^2",
            FiberShape::DoublePlusTwoSimple => "(mu-b)^2(mu-c1)(mu-c2)",
        }
    }
}

/// `S(α, μ)` on one vertical line.
#[derive(Clone, Debug)]
pub struct EigenFiber {
    pub lambda: AlgebraicNumber,
    /// `None` when the four eigenvalues are distinct.
    pub shape: Option<FiberShape>,
    pub case_tag: Option<String>,
    /// Eigenvalues equal to zero.
    pub zero_eigenvalues: usize,
    /// Positive eigenvalues, with multiplicity.
    pub index: usize,
    /// Float snapshots of the multiple eigenvalues.
    pub multiple_eigenvalues: Vec<(f64, usize)>,
}

pub fn analyze_eigen_fiber(s: &BiPoly, lambda: &AlgebraicNumber) -> Result<EigenFiber> {
    eigen_fiber(s, lambda, None)
}

/// `disc`, when given, is `sres_0(S, S_μ)`: the line has a collision only
/// where it vanishes.
fn eigen_fiber(s: &BiPoly, lambda: &AlgebraicNumber, disc: Option<&RatPoly>) -> Result<EigenFiber> {
    let zero_eigenvalues = s.coeffs().iter().take_while(|c| lambda.is_root_of(c)).count();
    let index = variations_skipping_zeros(s.coeffs().iter().map(|c| lambda.sign_at(c)));
    let mut fiber = EigenFiber {
        lambda: lambda.clone(),
        shape: None,
        case_tag: None,
        zero_eigenvalues,
        index,
        multiple_eigenvalues: Vec::new(),
    };
    if disc.is_some_and(|d| !lambda.is_root_of(d)) {
        return Ok(fiber);
    }
    let field = NumberField::new(lambda.clone());
    let p: UniPoly<AlgElem> = eval_x_in(s, &field.generator());
    match extract_deg4(&p) {
        Ok(ms) => {
            fiber.shape = Some(FiberShape::of(&ms)?);
            fiber.case_tag = Some(ms.case_tag.clone());
            fiber.multiple_eigenvalues = ms.real_roots.iter().map(|r| (r.root.approx(), r.multiplicity)).collect();
        }
        Err(Error::NoMultipleRoot) => {}
        Err(e) => return Err(e),
    }
    fiber.lambda = field.alpha();
    Ok(fiber)
}

/// `sres_0(S, S_μ)`, or `None` when `S` has a repeated factor and every
/// line carries a collision.
fn collision_polynomial(s: &BiPoly) -> Option<RatPoly> {
    let d = sequence_for(s).principal(0);
    (!d.is_zero()).then_some(d)
}

/// The lines `λ = α` where two eigenvalues of `λA + B` collide, each
/// analyzed with the degree-4 formulas.
pub fn eigenvalue_critical_fibers(a: &Quadric, b: &Quadric) -> Result<Vec<EigenFiber>> {
    let s = eigenvalue_curve(a, b);
    let sq = squarefree_in_y(&s);
    let mut lambdas = Vec::new();
    if degree_y(&sq) >= 2 {
        let d = discriminant_x(&sq)?;
        if d.degree().unwrap_or(0) > 0 && count_distinct_real_roots(&d) > 0 {
            lambdas = isolate_real_roots(&d)?;
        }
    }
    lambdas.iter().map(|l| eigen_fiber(&s, l, None)).collect()
}

#[derive(Clone, Debug)]
pub enum ProfileEntry {
    /// An open interval between consecutive roots of `f`, with the index
    /// at a rational sample.
    Interval { sample: Rat, index: usize },
    /// A root of `f`.
    Critical { root: usize, fiber: EigenFiber },
}

#[derive(Clone, Debug)]
pub struct PencilProfile {
    pub charpoly: RatPoly,
    pub roots: Vec<PencilRoot>,
    pub classification: Classification,
    pub index_profile: Vec<ProfileEntry>,
}

impl PencilProfile {
    /// Roots counted with multiplicity, by sign.
    pub fn count_with_multiplicity(&self, sign: Sign) -> usize {
        self.roots.iter().filter(|r| r.sign == sign).map(|r| r.multiplicity).sum()
    }

    /// `Id` on the intervals and at the roots, left to right.
    pub fn index_values(&self) -> Vec<usize> {
        self.index_profile
            .iter()
            .map(|e| match e {
                ProfileEntry::Interval { index, .. } => *index,
                ProfileEntry::Critical { fiber, .. } => fiber.index,
            })
            .collect()
    }

    /// Compact form such as `3 | -1: (mu-b)^2(mu-c1)(mu-c2) Id=2 | 2`.
    pub fn index_sequence(&self) -> String {
        self.index_profile
            .iter()
            .map(|e| match e {
                ProfileEntry::Interval { index, .. } => index.to_string(),
                ProfileEntry::Critical { root, fiber } => format!(
                    "[{:.6}{} {} Id={}]",
                    self.roots[*root].value.to_f64(),
                    if self.roots[*root].multiplicity > 1 {
                        format!(" x{}", self.roots[*root].multiplicity)
                    } else {
                        String::new()
                    },
                    fiber.shape.map_or("no collision", |s| s.describe()),
                    fiber.index
                ),
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn to_json(&self) -> Value {
        json!({
            "classification": self.classification.name(),
            "charpoly": rat_coeff_strings(&self.charpoly),
            "roots": self.roots.iter().map(|r| json!({
                "root": serde_json::to_value(r.value.to_json()).expect("serializable"),
                "description": r.describe(),
                "approx": r.value.to_f64(),
                "multiplicity": r.multiplicity,
                "sign": r.sign.as_i32(),
            })).collect::<Vec<_>>(),
            "index_profile": self.index_profile.iter().map(|e| match e {
                ProfileEntry::Interval { sample, index } => json!({
                    "interval": true,
                    "sample": rat_to_string(sample),
                    "index": index,
                }),
                ProfileEntry::Critical { root, fiber } => json!({
                    "root": root,
                    "index": fiber.index,
                    "zero_eigenvalues": fiber.zero_eigenvalues,
                    "collision": fiber.shape.map(|s| s.describe()),
                    "case": fiber.case_tag,
                    "multiple_eigenvalues": fiber.multiple_eigenvalues.iter()
                        .map(|(v, m)| json!({"approx": v, "multiplicity": m}))
                        .collect::<Vec<_>>(),
                }),
            }).collect::<Vec<_>>(),
            "index_sequence": self.index_sequence(),
        })
    }
}

pub fn index_profile(a: &Quadric, b: &Quadric) -> Result<PencilProfile> {
    let (a, b) = (a.as_ellipsoid()?, b.as_ellipsoid()?);
    let charpoly = characteristic_polynomial(&a, &b);
    let classification = classify_charpoly(&charpoly)?;
    let mut roots = real_roots_with_multiplicity(&charpoly)?;
    let s = eigenvalue_curve(&a, &b);
    let disc = collision_polynomial(&s);

    let mut alphas: Vec<AlgebraicNumber> = roots.iter().map(|r| r.value.clone()).collect();
    let samples = if alphas.is_empty() {
        vec![Rat::zero()]
    } else {
        sample_points(&mut alphas)
    };
    for (r, a) in roots.iter_mut().zip(alphas) {
        r.value = a;
    }

    let mut index_profile = Vec::with_capacity(2 * roots.len() + 1);
    for (i, sample) in samples.into_iter().enumerate() {
        let index = descartes_positive_count(&eval_x(&s, &sample));
        index_profile.push(ProfileEntry::Interval { sample, index });
        if i < roots.len() {
            let fiber = eigen_fiber(&s, &roots[i].value, disc.as_ref())?;
            index_profile.push(ProfileEntry::Critical { root: i, fiber });
        }
    }
    Ok(PencilProfile {
        charpoly,
        roots,
        classification,
        index_profile,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{int, rat};
    use crate::rootcount::count_distinct_real_roots;
    use proptest::prelude::*;

    fn unit_sphere() -> Quadric {
        Quadric::from_ints([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, -1]]).unwrap()
    }

    fn sphere_at(x: i64, r2: Rat) -> Quadric {
        Quadric::sphere([int(x), int(0), int(0)], r2)
    }

    #[test]
    fn charpoly_of_equal_and_scaled_spheres() {
        let a = unit_sphere();
        // -(λ+1)^4
        let expected = RatPoly::from_ints(&[1, 4, 6, 4, 1]).scale(&int(-1));
        assert_eq!(characteristic_polynomial(&a, &a), expected);
        let b = a.scaled(&int(2));
        // -(λ+2)^4
        let expected = RatPoly::from_ints(&[16, 32, 24, 8, 1]).scale(&int(-1));
        assert_eq!(characteristic_polynomial(&a, &b), expected);
        let f = characteristic_polynomial(&a, &sphere_at(3, int(1)));
        assert_eq!(f.lc(), a.determinant());
        assert_eq!(f.coeff(0), sphere_at(3, int(1)).determinant());
    }

    #[test]
    fn unit_spheres_at_distance() {
        // (λ+1)^2 (-λ^2 + (d^2-2)λ - 1)
        for d in [1i64, 2, 3, 4] {
            let f = characteristic_polynomial(&unit_sphere(), &sphere_at(d, int(1)));
            let expected = RatPoly::from_ints(&[1, 2, 1]).mul_ref(&RatPoly::from_ints(&[-1, d * d - 2, -1]));
            assert_eq!(f, expected, "d = {d}");
        }
        let classify = |d| classify_pair(&unit_sphere(), &sphere_at(d, int(1))).unwrap();
        assert_eq!(classify(1), Classification::Overlapping);
        assert_eq!(classify(2), Classification::ExternallyTouching);
        assert_eq!(classify(4), Classification::Separated);
    }

    #[test]
    fn ellipsoid_validation() {
        let neg = unit_sphere().scaled(&int(-3));
        let e = Quadric::ellipsoid(neg.matrix().clone()).unwrap();
        assert_eq!(e, unit_sphere().scaled(&int(3)));
        assert!(e.eval(&[int(0), int(0), int(0)]) < int(0));
        let no_points = Quadric::from_ints([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]).unwrap();
        assert_eq!(Quadric::ellipsoid(no_points.matrix().clone()).unwrap_err().kind(), "NotAnEllipsoid");
        let hyperboloid = Quadric::from_ints([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]]).unwrap();
        assert!(classify_pair(&hyperboloid, &unit_sphere()).is_err());
        let asym = [[1, 2, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, -1]];
        assert_eq!(Quadric::from_ints(asym).unwrap_err().kind(), "Invalid");
    }

    #[test]
    fn json_matrix() {
        let v: Value = serde_json::from_str(r#"[1,0,0,0, 0,1,0,0, 0,0,1,0, 0,0,0,"-1"]"#).unwrap();
        assert_eq!(Quadric::from_json(&v).unwrap(), unit_sphere());
        let v: Value = serde_json::from_str(r#"[["1/2",0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,"-1/4"]]"#).unwrap();
        assert_eq!(Quadric::from_json(&v).unwrap().matrix()[0][0], rat(1, 2));
        assert!(Quadric::from_json(&serde_json::json!([1, 2])).is_err());
        assert!(Quadric::from_json(&serde_json::json!([0.5, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1])).is_err());
    }

    #[test]
    fn eigenvalue_curve_of_equal_spheres() {
        let a = unit_sphere();
        let s = eigenvalue_curve(&a, &a);
        // (λ+1-μ)^3 (-(λ+1)-μ)
        let l1 = BiPoly::new(vec![RatPoly::from_ints(&[1, 1]), RatPoly::constant(int(-1))]);
        let l2 = BiPoly::new(vec![RatPoly::from_ints(&[-1, -1]), RatPoly::constant(int(-1))]);
        assert_eq!(s, l1.pow(3).mul_ref(&l2));
        assert_eq!(index_function(&a, &a, &int(0)), 3);
        assert_eq!(index_function(&a, &a, &int(1000)), 3);
        assert_eq!(index_function(&a, &a, &int(-1000)), 1);
    }

    #[test]
    fn touching_spheres_have_zero_eigenvalue() {
        let (a, b) = (unit_sphere(), sphere_at(2, int(1)));
        let s = eigenvalue_curve(&a, &b);
        // the double root of f is λ = 1
        assert!(eval_x(&s, &int(1)).coeff(0).is_zero());
    }

    #[test]
    fn profile_of_equal_spheres() {
        let a = unit_sphere();
        let p = index_profile(&a, &a).unwrap();
        assert_eq!(p.roots.len(), 1);
        assert_eq!(p.roots[0].multiplicity, 4);
        assert_eq!(p.roots[0].value.as_rat(), Some(&int(-1)));
        assert_eq!(p.index_values(), vec![1, 0, 3]);
        match &p.index_profile[1] {
            ProfileEntry::Critical { fiber, .. } => {
                assert_eq!(fiber.shape, Some(FiberShape::Quadruple));
                assert_eq!(fiber.zero_eigenvalues, 4);
            }
            e => panic!("unexpected {e:?}"),
        }
    }

    #[test]
    fn profile_of_separated_spheres() {
        let p = index_profile(&unit_sphere(), &sphere_at(4, int(1))).unwrap();
        assert_eq!(p.classification, Classification::Separated);
        // -1 double, and 7 ± 4√3
        assert_eq!(p.roots.len(), 3);
        assert_eq!(p.count_with_multiplicity(Sign::Negative), 2);
        assert_eq!(p.roots.iter().filter(|r| r.sign == Sign::Positive).count(), 2);
        assert!(p.index_values().iter().all(|&v| v <= 4));
        let j = p.to_json();
        assert_eq!(j["classification"], "Separated");
        assert_eq!(j["roots"].as_array().unwrap().len(), 3);
    }

    #[test]
    fn profile_of_touching_spheres() {
        let p = index_profile(&unit_sphere(), &sphere_at(2, int(1))).unwrap();
        assert_eq!(p.classification, Classification::ExternallyTouching);
        let positive: Vec<_> = p.roots.iter().filter(|r| r.sign == Sign::Positive).collect();
        assert_eq!(positive.len(), 1);
        assert_eq!(positive[0].multiplicity, 2);
        assert_eq!(positive[0].value.as_rat(), Some(&int(1)));
    }

    #[test]
    fn quadratic_closed_form_signs() {
        let [lo, hi] = ClosedFormRoot::quadratic_pair(&int(1), &int(-14), &int(1), "r±");
        assert_eq!(closed_form_sign(&lo), Sign::Positive);
        assert_eq!(closed_form_sign(&hi), Sign::Positive);
        let [lo, hi] = ClosedFormRoot::quadratic_pair(&int(1), &int(0), &int(-2), "r±");
        assert_eq!(closed_form_sign(&lo), Sign::Negative);
        assert_eq!(closed_form_sign(&hi), Sign::Positive);
        let [lo, hi] = ClosedFormRoot::quadratic_pair(&int(-1), &int(-3), &int(-1), "r±");
        assert_eq!((closed_form_sign(&lo), closed_form_sign(&hi)), (Sign::Negative, Sign::Negative));
        assert!(lo.approx() < hi.approx());
    }

    #[test]
    fn gallery_realizes_all_fiber_shapes() {
        let a = unit_sphere();
        let mut seen = Vec::new();
        let diag = |d: [i64; 4]| {
            Quadric::from_ints([[d[0], 0, 0, 0], [0, d[1], 0, 0], [0, 0, d[2], 0], [0, 0, 0, d[3]]]).unwrap()
        };
        for b in [a.clone(), diag([2, 2, 1, -1]), diag([2, 3, 1, -1]), sphere_at(3, int(1))] {
            for f in eigenvalue_critical_fibers(&a, &b).unwrap() {
                seen.extend(f.shape);
            }
            for r in real_roots_with_multiplicity(&characteristic_polynomial(&a, &b)).unwrap() {
                seen.extend(analyze_eigen_fiber(&eigenvalue_curve(&a, &b), &r.value).unwrap().shape);
            }
        }
        for s in [
            FiberShape::Quadruple,
            FiberShape::TriplePlusSimple,
            FiberShape::TwoDoubles,
            FiberShape::DoublePlusTwoSimple,
        ] {
            assert!(seen.contains(&s), "{s:?} not realized: {seen:?}");
        }
    }

    pub(crate) fn random_ellipsoid() -> impl Strategy<Value = Quadric> {
        (
            prop::array::uniform9(-3i64..=3),
            prop::array::uniform3(-4i64..=4),
            1i64..=6,
        )
            .prop_map(|(l, c, r)| {
                // M = L L^T + I
                let m: [[Rat; 3]; 3] = std::array::from_fn(|i| {
                    std::array::from_fn(|j| {
                        let s: i64 = (0..3).map(|k| l[3 * i + k] * l[3 * j + k]).sum();
                        int(s + i64::from(i == j))
                    })
                });
                Quadric::centred(m, c.map(int), int(r)).unwrap()
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn two_negative_roots(a in random_ellipsoid(), b in random_ellipsoid()) {
            let f = characteristic_polynomial(&a, &b);
            prop_assert_eq!(f.degree(), Some(4));
            let roots = real_roots_with_multiplicity(&f).unwrap();
            let neg: usize = roots.iter().filter(|r| r.sign == Sign::Negative).map(|r| r.multiplicity).sum();
            prop_assert!(neg >= 2);
        }

        #[test]
        fn eigenvalues_are_real(a in random_ellipsoid(), b in random_ellipsoid(), l in -20i64..=20) {
            let p = eval_x(&eigenvalue_curve(&a, &b), &rat(l, 3));
            prop_assert_eq!(p.degree(), Some(4));
            let total: usize = real_roots_with_multiplicity(&p).unwrap().iter().map(|r| r.multiplicity).sum();
            prop_assert_eq!(total, 4);
            prop_assert!(count_distinct_real_roots(&p) >= 1);
        }

        #[test]
        fn spheres_match_geometry(r1 in 1i64..=5, r2 in 1i64..=5, d in 0i64..=12) {
            let a = Quadric::sphere([int(0), int(0), int(0)], int(r1 * r1));
            let b = Quadric::sphere([int(d), int(0), int(0)], int(r2 * r2));
            let expected = match d.cmp(&(r1 + r2)) {
                Ordering::Greater => Classification::Separated,
                Ordering::Equal => Classification::ExternallyTouching,
                Ordering::Less => Classification::Overlapping,
            };
            prop_assert_eq!(classify_pair(&a, &b).unwrap(), expected);
        }
    }
}
