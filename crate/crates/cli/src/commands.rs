use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::Path;

use serde_json::{json, Value};

use curvetop_core::multroot::{extract, MultiplicityStructure};
use curvetop_core::poly::parse::{parse_bipoly, parse_unipoly};
use curvetop_core::poly::rat_coeff_strings;
use curvetop_core::quadrics::{classify_pair, index_profile, ProfileEntry, Quadric};
use curvetop_core::rootcount::count_distinct_real_roots;
use curvetop_core::subres::signed_subresultants;
use curvetop_core::topology::{compute_topology_with, TopologyGraph, TopologyOptions};
use curvetop_core::{Error, Rat};

use crate::{Command, Format};

pub enum CliError {
    Usage(String),
    Math(Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Math(Error::Parse { .. }) => 2,
            CliError::Math(_) => 1,
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            CliError::Usage(m) => json!({"error": "Usage", "message": m}),
            CliError::Math(e) => json!({"error": e.kind(), "message": e.to_string()}),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Math(e)
    }
}

type Result<T> = std::result::Result<T, CliError>;

pub fn run(cmd: &Command) -> Result<()> {
    let (text, out) = render(cmd)?;
    match out {
        Some(path) => fs::write(path, text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| CliError::Usage(e.to_string()))
        }
    }
}

fn unsupported(format: Format, cmd: &str) -> CliError {
    CliError::Usage(format!("format {format:?} is not available for {cmd}").to_lowercase())
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

/// Output text and, for `topology --out`, its destination.
pub fn render(cmd: &Command) -> Result<(String, Option<&Path>)> {
    let text = match cmd {
        Command::Topology {
            poly,
            format,
            out,
            max_shears,
            precision,
        } => {
            let p = parse_bipoly(poly)?;
            let g = compute_topology_with(&p, &TopologyOptions { max_shears: *max_shears })?;
            let text = match format {
                Format::Json => pretty(&g.to_json()),
                Format::Dot => g.to_dot(),
                Format::Svg => g.to_svg(*precision),
                Format::Text => topology_text(&g),
            };
            return Ok((text, out.as_deref()));
        }
        Command::Multroot { poly, format } => {
            let p = parse_unipoly(poly)?;
            let ms = extract(&p)?;
            match format {
                Format::Text => format!("{ms}\n"),
                Format::Json => pretty(&multroot_json(&ms)),
                f => return Err(unsupported(*f, "multroot")),
            }
        }
        Command::Count { poly } => {
            let p = parse_unipoly(poly)?;
            if p.is_zero() {
                return Err(Error::Invalid("the zero polynomial has infinitely many roots".into()).into());
            }
            format!("{}\n", count_distinct_real_roots(&p))
        }
        Command::Subres { p, q, format } => {
            let (p, q) = (parse_unipoly(p)?, parse_unipoly(q)?);
            let s = signed_subresultants(&p, &q)?;
            match format {
                Format::Text => {
                    let mut t = String::new();
                    for (j, sj) in s.iter().enumerate().rev() {
                        writeln!(t, "sres_{j} = {}", sj.display("T")).unwrap();
                    }
                    t
                }
                Format::Json => pretty(&json!(s
                    .iter()
                    .enumerate()
                    .map(|(j, sj)| json!({"j": j, "coeffs": rat_coeff_strings(sj)}))
                    .collect::<Vec<_>>())),
                f => return Err(unsupported(*f, "subres")),
            }
        }
        Command::ClassifyQuadrics { a, b, format } => {
            let (a, b) = (read_quadric(a)?, read_quadric(b)?);
            match format {
                Format::Text => format!("{}\n", classify_pair(&a, &b)?),
                Format::Json => {
                    let p = index_profile(&a, &b)?;
                    let j = p.to_json();
                    pretty(&json!({
                        "classification": j["classification"],
                        "charpoly": j["charpoly"],
                        "roots": j["roots"],
                        "index_profile": j["index_profile"],
                    }))
                }
                f => return Err(unsupported(*f, "classify-quadrics")),
            }
        }
        Command::IndexProfile { a, b, format } => {
            let (a, b) = (read_quadric(a)?, read_quadric(b)?);
            let p = index_profile(&a, &b)?;
            match format {
                Format::Json => pretty(&p.to_json()),
                Format::Text => {
                    let mut t = String::new();
                    writeln!(t, "f(lambda) = {}", p.charpoly.display("lambda")).unwrap();
                    writeln!(t, "classification: {}", p.classification).unwrap();
                    for e in &p.index_profile {
                        match e {
                            ProfileEntry::Interval { sample, index } => {
                                writeln!(t, "  Id = {index}  (at lambda = {sample})").unwrap()
                            }
                            ProfileEntry::Critical { root, fiber } => {
                                let r = &p.roots[*root];
                                writeln!(
                                    t,
                                    "lambda = {} (multiplicity {}): Id = {}, zero eigenvalues {}, {}",
                                    r.describe(),
                                    r.multiplicity,
                                    fiber.index,
                                    fiber.zero_eigenvalues,
                                    fiber.shape.map_or("distinct eigenvalues", |s| s.describe())
                                )
                                .unwrap()
                            }
                        }
                    }
                    writeln!(t, "sequence: {}", p.index_sequence()).unwrap();
                    t
                }
                f => return Err(unsupported(*f, "index-profile")),
            }
        }
    };
    Ok((text, None))
}

fn read_quadric(path: &Path) -> Result<Quadric> {
    let src = fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    let v: Value = serde_json::from_str(&src).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    Ok(Quadric::from_json(&v)?)
}

fn multroot_json(ms: &MultiplicityStructure<Rat>) -> Value {
    json!({
        "case": ms.case_tag,
        "leading": ms.leading.to_string(),
        "real_roots": ms.real_roots.iter().map(|r| json!({
            "multiplicity": r.multiplicity,
            "formula": r.root.formula(),
            "value": r.root.value().map(|v| v.to_string()),
            "minimal_poly": rat_coeff_strings(&r.root.minimal_poly()),
            "approx": r.root.approx(),
        })).collect::<Vec<_>>(),
        "complex_pairs": ms.complex_pairs.iter().map(|c| json!({
            "multiplicity": c.multiplicity,
            "factor": rat_coeff_strings(&c.factor),
        })).collect::<Vec<_>>(),
        "simple_part": rat_coeff_strings(&ms.simple_part),
    })
}

fn topology_text(g: &TopologyGraph) -> String {
    let mut t = String::new();
    writeln!(t, "shear t = {}", g.shear).unwrap();
    for a in &g.vertical_lines {
        writeln!(t, "vertical line x = {a}").unwrap();
    }
    for (i, v) in g.vertices.iter().enumerate() {
        writeln!(
            t,
            "v{i} fiber {} {} ({:.6}, {:.6}) branches {}/{}",
            v.fiber,
            v.kind.name(),
            v.x,
            v.y,
            v.branches.left,
            v.branches.right
        )
        .unwrap();
    }
    for (a, b) in &g.edges {
        writeln!(t, "v{a} -- v{b}").unwrap();
    }
    t
}
