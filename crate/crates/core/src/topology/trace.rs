//! Numeric contour tracing by marching squares. Used for the picture
//! overlay and as an independent check of the exact sweep.

use crate::poly::{eval_f64, BiPoly};

#[derive(Clone, Copy, Debug)]
pub struct Window {
    pub xmin: f64,
    pub xmax: f64,
    pub ymin: f64,
    pub ymax: f64,
}

#[derive(Clone, Debug, Default)]
pub struct Trace {
    pub segments: Vec<([f64; 2], [f64; 2])>,
    /// Grid-edge ids of each segment's endpoints.
    ends: Vec<(usize, usize)>,
}

impl Trace {
    /// Connected pieces of the traced curve.
    pub fn components(&self) -> usize {
        self.components_outside(&[], 0.0)
    }

    /// Connected pieces after cutting out discs of radius `r` around the
    /// given points.
    pub fn components_outside(&self, centres: &[[f64; 2]], r: f64) -> usize {
        let near = |p: [f64; 2]| centres.iter().any(|c| (p[0] - c[0]).hypot(p[1] - c[1]) < r);
        let ends: Vec<(usize, usize)> = self
            .ends
            .iter()
            .zip(&self.segments)
            .filter(|(_, (a, b))| !near(*a) && !near(*b))
            .map(|(e, _)| *e)
            .collect();
        let mut ids: Vec<usize> = ends.iter().flat_map(|&(a, b)| [a, b]).collect();
        ids.sort_unstable();
        ids.dedup();
        let idx = |e: usize| ids.binary_search(&e).unwrap();
        let mut parent: Vec<usize> = (0..ids.len()).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for &(a, b) in &ends {
            let (ra, rb) = (find(&mut parent, idx(a)), find(&mut parent, idx(b)));
            parent[ra] = rb;
        }
        (0..ids.len()).filter(|&i| find(&mut parent, i) == i).count()
    }
}

/// Traces `P = 0` on an `n x n` grid over the window.
pub fn trace(p: &BiPoly, w: Window, n: usize) -> Trace {
    let dx = (w.xmax - w.xmin) / n as f64;
    let dy = (w.ymax - w.ymin) / n as f64;
    let xs: Vec<f64> = (0..=n).map(|i| w.xmin + i as f64 * dx).collect();
    let ys: Vec<f64> = (0..=n).map(|j| w.ymin + j as f64 * dy).collect();
    let val: Vec<Vec<f64>> = xs
        .iter()
        .map(|&x| {
            ys.iter()
                .map(|&y| {
                    let v = eval_f64(p, x, y);
                    if v == 0.0 {
                        f64::MIN_POSITIVE
                    } else {
                        v
                    }
                })
                .collect()
        })
        .collect();
    // horizontal edge (i, j)-(i+1, j): id 2*(i*(n+1)+j); vertical (i, j)-(i, j+1): id + 1
    let hid = |i: usize, j: usize| 2 * (i * (n + 1) + j);
    let vid = |i: usize, j: usize| 2 * (i * (n + 1) + j) + 1;
    let cross = |a: f64, b: f64| a / (a - b);
    let mut out = Trace::default();
    for i in 0..n {
        for j in 0..n {
            let (v00, v10, v01, v11) = (val[i][j], val[i + 1][j], val[i][j + 1], val[i + 1][j + 1]);
            let mut pts = Vec::with_capacity(4);
            if (v00 > 0.0) != (v10 > 0.0) {
                pts.push((hid(i, j), [xs[i] + cross(v00, v10) * dx, ys[j]]));
            }
            if (v10 > 0.0) != (v11 > 0.0) {
                pts.push((vid(i + 1, j), [xs[i + 1], ys[j] + cross(v10, v11) * dy]));
            }
            if (v01 > 0.0) != (v11 > 0.0) {
                pts.push((hid(i, j + 1), [xs[i] + cross(v01, v11) * dx, ys[j + 1]]));
            }
            if (v00 > 0.0) != (v01 > 0.0) {
                pts.push((vid(i, j), [xs[i], ys[j] + cross(v00, v01) * dy]));
            }
            match pts.len() {
                2 => {
                    out.segments.push((pts[0].1, pts[1].1));
                    out.ends.push((pts[0].0, pts[1].0));
                }
                4 => {
                    // saddle: pair the crossings around the corner whose sign
                    // differs from the centre
                    let centre = eval_f64(p, xs[i] + dx / 2.0, ys[j] + dy / 2.0);
                    let (a, b, c, d) = if (centre > 0.0) == (v00 > 0.0) {
                        (0, 1, 2, 3)
                    } else {
                        (0, 3, 1, 2)
                    };
                    out.segments.push((pts[a].1, pts[b].1));
                    out.ends.push((pts[a].0, pts[b].0));
                    out.segments.push((pts[c].1, pts[d].1));
                    out.ends.push((pts[c].0, pts[d].0));
                }
                _ => {}
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse::parse_bipoly;

    #[test]
    fn circle_is_one_loop() {
        let p = parse_bipoly("x^2 + y^2 - 1").unwrap();
        let t = trace(&p, Window { xmin: -2.0, xmax: 2.0, ymin: -2.0, ymax: 2.0 }, 64);
        assert_eq!(t.components(), 1);
        assert!(t.segments.len() > 20);
    }

    #[test]
    fn hyperbola_has_two_pieces() {
        let p = parse_bipoly("x*y - 1").unwrap();
        let t = trace(&p, Window { xmin: -3.1, xmax: 3.0, ymin: -3.1, ymax: 3.0 }, 64);
        assert_eq!(t.components(), 2);
    }
}
