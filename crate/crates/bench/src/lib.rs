//! Inputs shared by the benchmarks.

use curvetop_core::poly::parse::{parse_bipoly, parse_unipoly};
use curvetop_core::quadrics::Quadric;
use curvetop_core::ring::int;
use curvetop_core::{BiPoly, RatPoly};

pub fn uni(src: &str) -> RatPoly {
    parse_unipoly(src).expect("valid polynomial")
}

pub fn bi(src: &str) -> BiPoly {
    parse_bipoly(src).expect("valid polynomial")
}

pub const CURVES: &[(&str, &str)] = &[
    ("circle", "x^2+y^2-1"),
    ("nodal_cubic", "y^2-x^2*(x+1)"),
    ("cusp", "y^2-x^3"),
    ("two_double_points", "(y^2-1)^2-x^3*y"),
    ("lemniscate", "(x^2+y^2)^2-2*(x^2-y^2)"),
];

pub fn sphere(x: i64, r2: i64) -> Quadric {
    Quadric::sphere([int(x), int(0), int(0)], int(r2))
}
