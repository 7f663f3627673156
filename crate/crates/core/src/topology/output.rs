//! Renderings of a topology graph: JSON, Graphviz DOT and SVG.

use std::fmt::Write;

use serde_json::{json, Value};

use crate::ring::rat_to_string;

use super::trace::{trace, Window};
use super::{TopologyGraph, VertexKind};

impl TopologyGraph {
    pub fn to_json(&self) -> Value {
        json!({
            "vertices": self.vertices.iter().map(|v| json!({
                "x": v.x,
                "y": v.y,
                "kind": v.kind.name(),
                "fiber": v.fiber,
                "x_exact": v.x_exact,
                "y_exact": v.y_exact,
                "branches": [v.branches.left, v.branches.right],
            })).collect::<Vec<_>>(),
            "edges": self.edges.iter().map(|&(a, b)| json!([a, b])).collect::<Vec<_>>(),
            "vertical_lines": self.vertical_lines.iter().map(|a| {
                let mut j = serde_json::to_value(a.to_json()).expect("serializable");
                j["approx"] = json!(a.to_f64());
                j
            }).collect::<Vec<_>>(),
            "shear": rat_to_string(&self.shear),
        })
    }

    /// Critical points red, regular points on critical lines blue.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph curve {\n  node [shape=point, width=0.08];\n");
        for (i, v) in self.vertices.iter().enumerate() {
            let color = match v.kind {
                VertexKind::Ramification | VertexKind::Singular => "red",
                VertexKind::Regular => "blue",
                VertexKind::Sample => "black",
            };
            writeln!(
                s,
                "  v{i} [color={color}, pos=\"{:.4},{:.4}!\", tooltip=\"{} ({:.6}, {:.6})\"];",
                v.x,
                v.y,
                v.kind.name(),
                v.x,
                v.y
            )
            .unwrap();
        }
        for &(a, b) in &self.edges {
            writeln!(s, "  v{a} -- v{b};").unwrap();
        }
        s.push_str("}\n");
        s
    }

    /// Picture of the graph over a traced outline of the curve; coordinates
    /// are printed with `precision` decimals.
    pub fn to_svg(&self, precision: usize) -> String {
        let (mut xmin, mut xmax, mut ymin, mut ymax) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
        for v in &self.vertices {
            xmin = xmin.min(v.x);
            xmax = xmax.max(v.x);
            ymin = ymin.min(v.y);
            ymax = ymax.max(v.y);
        }
        for a in &self.vertical_lines {
            let x = a.to_f64();
            xmin = xmin.min(x);
            xmax = xmax.max(x);
        }
        if xmin > xmax {
            (xmin, xmax) = (-1.0, 1.0);
        }
        if ymin > ymax {
            (ymin, ymax) = (-1.0, 1.0);
        }
        let pad = 0.1 * (xmax - xmin).max(ymax - ymin).max(1.0);
        let w = Window {
            xmin: xmin - pad,
            xmax: xmax + pad,
            ymin: ymin - pad,
            ymax: ymax + pad,
        };
        let size = 600.0;
        let scale = size / (w.xmax - w.xmin).max(w.ymax - w.ymin);
        let px = |x: f64| (x - w.xmin) * scale;
        let py = |y: f64| (w.ymax - y) * scale;
        let p = precision;
        let mut s = String::new();
        writeln!(
            s,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{:.0}\" height=\"{:.0}\">",
            px(w.xmax),
            py(w.ymin)
        )
        .unwrap();
        s.push_str("<g stroke=\"#bbbbbb\" stroke-width=\"3\">\n");
        for (a, b) in trace(&self.polynomial, w, 200).segments {
            writeln!(
                s,
                "<line x1=\"{:.p$}\" y1=\"{:.p$}\" x2=\"{:.p$}\" y2=\"{:.p$}\"/>",
                px(a[0]),
                py(a[1]),
                px(b[0]),
                py(b[1])
            )
            .unwrap();
        }
        s.push_str("</g>\n<g stroke=\"#888888\" stroke-dasharray=\"4 4\">\n");
        for a in &self.vertical_lines {
            let x = px(a.to_f64());
            writeln!(s, "<line x1=\"{x:.p$}\" y1=\"0\" x2=\"{x:.p$}\" y2=\"{:.p$}\"/>", py(w.ymin)).unwrap();
        }
        s.push_str("</g>\n<g stroke=\"black\" stroke-width=\"1\">\n");
        for &(a, b) in &self.edges {
            let (u, v) = (&self.vertices[a], &self.vertices[b]);
            writeln!(
                s,
                "<line x1=\"{:.p$}\" y1=\"{:.p$}\" x2=\"{:.p$}\" y2=\"{:.p$}\"/>",
                px(u.x),
                py(u.y),
                px(v.x),
                py(v.y)
            )
            .unwrap();
        }
        s.push_str("</g>\n");
        for v in &self.vertices {
            let color = match v.kind {
                VertexKind::Ramification | VertexKind::Singular => "red",
                VertexKind::Regular => "blue",
                VertexKind::Sample => "black",
            };
            writeln!(
                s,
                "<circle cx=\"{:.p$}\" cy=\"{:.p$}\" r=\"3\" fill=\"{color}\"/>",
                px(v.x),
                py(v.y)
            )
            .unwrap();
        }
        s.push_str("</svg>\n");
        s
    }
}
