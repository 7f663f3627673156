//! Topology of a real plane algebraic curve `P(x, y) = 0` by a vertical
//! sweep: the curve is cut by the critical vertical lines (real roots of
//! the discriminant in `y`) and by one sample line in each interval
//! between them; the graph joins the points on consecutive lines along the
//! arcs of the curve.

mod assign;
mod fiber;
mod output;
pub mod trace;

use serde::Serialize;

use crate::algnum::isolate::{isolate, refine_to};
use crate::algnum::{isolate_real_roots, AlgebraicNumber, RootInterval};
use crate::error::{Error, Result};
use crate::poly::{
    content_in_y, degree_y, derivative_y, eval_x, integer_primitive, primitive_part_in_y, shear, BiPoly, RatPoly,
};
use crate::ring::{rat_to_f64, rat_to_string, Rat, Ring};
use crate::rootcount::count_distinct_real_roots;
use crate::subres::{gcd_by_subres, sequence_for};

pub use assign::{assign_branches_deg4, assign_branches_deg5, resolve_fiber, Side};
pub use fiber::{
    analyze_fiber, ramification_branches, tangent_slopes, CriticalFiber, FiberPoint, PointKind, TangentInfo,
};

/// Half-branches leaving a point to the left and to the right.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BranchCounts {
    pub left: usize,
    pub right: usize,
}

impl BranchCounts {
    pub fn new(left: usize, right: usize) -> Self {
        BranchCounts { left, right }
    }
}

/// Squarefree part of `sres_0(P, P_y)` with respect to `y`: its real roots
/// are the `x` of the critical vertical lines.
pub fn discriminant_x(p: &BiPoly) -> Result<RatPoly> {
    if degree_y(p) == 0 {
        return Err(Error::Invalid("polynomial does not involve y".into()));
    }
    let s = sequence_for(p).principal(0);
    if s.is_zero() {
        return Err(Error::ZeroDiscriminant);
    }
    Ok(s.squarefree_part())
}

/// Removes repeated factors involving `y`.
pub fn squarefree_in_y(p: &BiPoly) -> BiPoly {
    if degree_y(p) == 0 {
        return integer_primitive(p);
    }
    let g = primitive_part_in_y(&gcd_by_subres(p, &derivative_y(p)));
    if degree_y(&g) == 0 {
        return integer_primitive(p);
    }
    integer_primitive(&primitive_part_in_y(&p.exact_div(&g)))
}

/// Number of real points of the curve on the line `x = γ`, from the
/// subresultant signs, with isolating intervals of their `y`. The line must
/// not be critical.
pub fn count_branches_between(p: &BiPoly, gamma: &Rat) -> Result<(usize, Vec<RootInterval>)> {
    let q = eval_x(p, gamma);
    if q.is_zero() {
        return Err(Error::Invalid("the curve contains the line".into()));
    }
    if !q.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let n = count_distinct_real_roots(&q);
    let roots = isolate(&q);
    debug_assert_eq!(n, roots.len());
    Ok((n, roots))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VertexKind {
    /// Point on a sample line.
    Sample,
    /// Simple point on a critical line.
    Regular,
    Ramification,
    Singular,
}

impl VertexKind {
    pub fn name(self) -> &'static str {
        match self {
            VertexKind::Sample => "sample",
            VertexKind::Regular => "regular",
            VertexKind::Ramification => "ramification",
            VertexKind::Singular => "singular",
        }
    }

    pub fn is_critical(self) -> bool {
        matches!(self, VertexKind::Ramification | VertexKind::Singular)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Vertex {
    pub x: f64,
    pub y: f64,
    /// Exact coordinates in the swept (possibly sheared) frame.
    pub x_exact: String,
    pub y_exact: String,
    pub fiber: usize,
    pub kind: VertexKind,
    pub branches: BranchCounts,
}

/// A sweep line, in the swept frame.
#[derive(Clone, Debug, Serialize)]
pub struct FiberLine {
    pub x: f64,
    pub critical: bool,
}

#[derive(Clone, Debug)]
pub struct TopologyGraph {
    pub vertices: Vec<Vertex>,
    /// Pairs of vertex indices on consecutive lines, smaller `fiber` first.
    pub edges: Vec<(usize, usize)>,
    pub vertical_lines: Vec<AlgebraicNumber>,
    /// `t` of the shear `(x, y) -> (x - t y, y)` under which the sweep ran;
    /// the float coordinates are mapped back to the input frame.
    pub shear: Rat,
    pub fibers: Vec<FiberLine>,
    pub polynomial: BiPoly,
}

impl TopologyGraph {
    pub fn critical_vertices(&self) -> impl Iterator<Item = &Vertex> {
        self.vertices.iter().filter(|v| v.kind.is_critical())
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// Connected components, isolated vertices included.
    pub fn components(&self) -> usize {
        let n = self.vertices.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for &(a, b) in &self.edges {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra] = rb;
        }
        (0..n).filter(|&i| find(&mut parent, i) == i).count()
    }
}

#[derive(Clone, Debug)]
pub struct TopologyOptions {
    /// Shears tried after the unsheared sweep.
    pub max_shears: usize,
}

impl Default for TopologyOptions {
    fn default() -> Self {
        TopologyOptions { max_shears: 8 }
    }
}

/// `0, 1, -1, 2, -2, ...`
fn shear_value(k: usize) -> Rat {
    let m = ((k + 1) / 2) as i64;
    Rat::from_int(if k % 2 == 1 { m } else { -m })
}

pub fn compute_topology(p: &BiPoly) -> Result<TopologyGraph> {
    compute_topology_with(p, &TopologyOptions::default())
}

pub fn compute_topology_with(p: &BiPoly, opts: &TopologyOptions) -> Result<TopologyGraph> {
    if p.is_zero() {
        return Err(Error::Invalid("zero polynomial".into()));
    }
    let content = content_in_y(p);
    let vertical_lines = if content.degree().unwrap_or(0) > 0 {
        isolate_real_roots(&content.squarefree_part())?
    } else {
        Vec::new()
    };
    let q = squarefree_in_y(&primitive_part_in_y(p));
    if degree_y(&q) == 0 {
        return Ok(TopologyGraph {
            vertices: Vec::new(),
            edges: Vec::new(),
            vertical_lines,
            shear: Rat::from_int(0),
            fibers: Vec::new(),
            polynomial: p.clone(),
        });
    }
    let mut last = String::new();
    for k in 0..=opts.max_shears {
        let t = shear_value(k);
        let pt = if k == 0 { q.clone() } else { shear(&q, &t) };
        let lc = pt.lc();
        if lc.degree().unwrap_or(0) > 0 && count_distinct_real_roots(&lc) > 0 {
            last = "leading coefficient in y has real roots".into();
            continue;
        }
        let pt = primitive_part_in_y(&pt);
        match sweep(&pt) {
            Ok((vertices, edges, fibers)) => {
                return Ok(finish(p, vertices, edges, fibers, vertical_lines, t));
            }
            Err(e @ (Error::UnsupportedPattern { .. } | Error::AmbiguousAssignment { .. } | Error::DegenerateDirection)) => {
                last = e.to_string();
            }
            Err(e) => return Err(e),
        }
    }
    Err(Error::RetriesExhausted {
        attempts: opts.max_shears + 1,
        last,
    })
}

fn finish(
    p: &BiPoly,
    mut vertices: Vec<Vertex>,
    edges: Vec<(usize, usize)>,
    fibers: Vec<FiberLine>,
    vertical_lines: Vec<AlgebraicNumber>,
    t: Rat,
) -> TopologyGraph {
    let tf = rat_to_f64(&t);
    if tf != 0.0 {
        for v in &mut vertices {
            v.x += tf * v.y;
        }
    }
    TopologyGraph {
        vertices,
        edges,
        vertical_lines,
        shear: t,
        fibers,
        polynomial: p.clone(),
    }
}

fn fine() -> Rat {
    Rat::new(1.into(), (1u64 << 40).into())
}

/// Separates consecutive critical `x` by refining their intervals.
fn separate_alphas(alphas: &mut [AlgebraicNumber]) {
    for i in 1..alphas.len() {
        let mut w = alphas[i - 1].width().max(alphas[i].width());
        while alphas[i - 1].hi() >= alphas[i].lo() && !(alphas[i - 1].as_rat().is_some() && alphas[i].as_rat().is_some()) {
            w /= Rat::from_int(2);
            alphas[i - 1] = alphas[i - 1].refine(&w);
            alphas[i] = alphas[i].refine(&w);
        }
    }
}

pub(crate) fn sample_points(alphas: &mut [AlgebraicNumber]) -> Vec<Rat> {
    separate_alphas(alphas);
    let one = Rat::from_int(1);
    let bound = alphas
        .iter()
        .flat_map(|a| [a.lo().clone(), a.hi().clone()])
        .map(|r| if r < Rat::from_int(0) { -r } else { r })
        .max()
        .unwrap_or_else(|| Rat::from_int(0))
        + &one;
    let bound = Rat::from_integer(bound.ceil().to_integer());
    let mut out = vec![-bound.clone()];
    for w in alphas.windows(2) {
        out.push((w[0].hi() + w[1].lo()) / Rat::from_int(2));
    }
    out.push(bound);
    out
}

type Sweep = (Vec<Vertex>, Vec<(usize, usize)>, Vec<FiberLine>);

fn sweep(p: &BiPoly) -> Result<Sweep> {
    let disc = discriminant_x(p)?;
    let mut alphas = if disc.degree().unwrap_or(0) > 0 {
        isolate_real_roots(&disc)?
    } else {
        Vec::new()
    };
    let samples = sample_points(&mut alphas);

    let mut sample_roots = Vec::with_capacity(samples.len());
    for g in &samples {
        let q = eval_x(p, g);
        let ivs = isolate(&q);
        sample_roots.push((q, ivs));
    }

    let mut fibers = Vec::with_capacity(alphas.len());
    for (i, a) in alphas.iter().enumerate() {
        let mut f = analyze_fiber(p, a)?;
        resolve_fiber(p, &disc, &mut f, 2 * i + 1, sample_roots[i].1.len(), sample_roots[i + 1].1.len())?;
        fibers.push(f);
    }

    let mut vertices = Vec::new();
    let mut lines = Vec::new();
    // vertex ids per line, ascending in y
    let mut ids: Vec<Vec<usize>> = Vec::new();
    for i in 0..samples.len() {
        let g = &samples[i];
        let (q, ivs) = &sample_roots[i];
        let gx = rat_to_f64(g);
        let mut line = Vec::new();
        for iv in ivs {
            let r = refine_to(q, iv, &fine());
            line.push(vertices.len());
            vertices.push(Vertex {
                x: gx,
                y: rat_to_f64(&r.mid()),
                x_exact: rat_to_string(g),
                y_exact: if iv.is_exact() {
                    rat_to_string(&iv.lo)
                } else {
                    format!("root of {} in [{}, {}]", q.display("y"), rat_to_string(&iv.lo), rat_to_string(&iv.hi))
                },
                fiber: lines.len(),
                kind: VertexKind::Sample,
                branches: BranchCounts::new(1, 1),
            });
        }
        ids.push(line);
        lines.push(FiberLine { x: gx, critical: false });
        if let Some(f) = fibers.get(i) {
            let ax = f.alpha.to_f64();
            let mut line = Vec::new();
            for pt in &f.points {
                line.push(vertices.len());
                vertices.push(Vertex {
                    x: ax,
                    y: pt.y_f64(),
                    x_exact: f.alpha.to_string(),
                    y_exact: pt.describe(),
                    fiber: lines.len(),
                    kind: match pt.kind {
                        PointKind::Regular => VertexKind::Regular,
                        PointKind::Ramification => VertexKind::Ramification,
                        PointKind::Singular => VertexKind::Singular,
                    },
                    branches: pt.branches.expect("branches resolved"),
                });
            }
            ids.push(line);
            lines.push(FiberLine { x: ax, critical: true });
        }
    }

    let mut edges = Vec::new();
    for (i, f) in fibers.iter().enumerate() {
        let left = &ids[2 * i];
        let crit = &ids[2 * i + 1];
        let right = &ids[2 * i + 2];
        let (mut l, mut r) = (0, 0);
        for (k, pt) in f.points.iter().enumerate() {
            let b = pt.branches.unwrap();
            for _ in 0..b.left {
                edges.push((left[l], crit[k]));
                l += 1;
            }
            for _ in 0..b.right {
                edges.push((crit[k], right[r]));
                r += 1;
            }
        }
        debug_assert_eq!((l, r), (left.len(), right.len()));
    }
    if fibers.is_empty() {
        debug_assert_eq!(ids[0].len(), ids[1].len());
        for (&a, &b) in ids[0].iter().zip(&ids[1]) {
            edges.push((a, b));
        }
    }
    Ok((vertices, edges, lines))
}
