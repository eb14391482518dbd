//! The punctured-disk arc model: modules as inner arcs, projectives as
//! arcs from the puncture, tau-rigidity as non-crossing, tau-tilting
//! modules as triangulations. One disk per component; the disk is a view,
//! mutation lives elsewhere.

use crate::algebra::{Algebra, IndModule, Pair, SignedInd};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ArcKind {
    /// `<start, end>` with `end = (start + span) mod n`, homotopic to the
    /// counterclockwise boundary path; `2 <= span <= n`.
    Inner { start: usize, span: usize },
    /// `<*, vertex>` from the puncture to a marked point.
    Projective { vertex: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arc {
    pub component: usize,
    pub kind: ArcKind,
}

impl Arc {
    pub fn text(&self) -> String {
        match self.kind {
            ArcKind::Inner { start, span } => format!("<{},{}>@{}+{}", start, start, self.component, span),
            ArcKind::Projective { vertex } => format!("<*,{}>@{}", vertex, self.component),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// Arcs with one sign per component disk: a disk is decorated with a
/// minus exactly when the pair has a shifted summand on that component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedDiagram {
    pub arcs: Vec<Arc>,
    pub signs: Vec<Sign>,
}

impl SignedDiagram {
    pub fn unsigned(alg: &Algebra, arcs: Vec<Arc>) -> SignedDiagram {
        SignedDiagram {
            arcs,
            signs: vec![Sign::Plus; alg.components.len()],
        }
    }

    pub fn has_minus(&self) -> bool {
        self.signs.contains(&Sign::Minus)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiskError {
    #[error("signed model unavailable: some projective of the component is shorter than the rank")]
    SignedModelUnavailable,
    #[error("unsupported format {0:?}")]
    UnsupportedFormat(String),
    #[error("module is not tau-rigid, no arc exists")]
    NoArc,
}

/// Does the signed-model hypothesis hold on the component: every
/// projective at least as long as the rank?
pub fn hypothesis_holds_on(alg: &Algebra, component: usize) -> bool {
    let comp = &alg.components[component];
    comp.kupisch.iter().all(|&l| l >= comp.rank())
}

pub fn hypothesis_holds(alg: &Algebra) -> bool {
    (0..alg.components.len()).all(|c| hypothesis_holds_on(alg, c))
}

/// The arc of a signed indecomposable. Shifted projectives need the
/// signed-model hypothesis on their component unless `allow_decorative`.
pub fn to_arc(alg: &Algebra, x: &SignedInd, allow_decorative: bool) -> Result<Arc, DiskError> {
    let m = x.module;
    let n = alg.local_rank(m.component);
    if x.is_shifted() {
        if !hypothesis_holds_on(alg, m.component) && !allow_decorative {
            return Err(DiskError::SignedModelUnavailable);
        }
        return Ok(Arc {
            component: m.component,
            kind: ArcKind::Projective {
                vertex: (m.top + n - 1) % n,
            },
        });
    }
    if m.is_projective(alg) {
        return Ok(Arc {
            component: m.component,
            kind: ArcKind::Projective { vertex: m.top },
        });
    }
    if m.len >= n {
        return Err(DiskError::NoArc);
    }
    // start = (top - len - 1) mod n, span = len + 1
    let start = (m.top + 2 * n - m.len - 1) % n;
    Ok(Arc {
        component: m.component,
        kind: ArcKind::Inner {
            start,
            span: m.len + 1,
        },
    })
}

/// Inverse of `to_arc` on unsigned arcs.
pub fn from_arc(alg: &Algebra, arc: &Arc) -> IndModule {
    let n = alg.local_rank(arc.component);
    match arc.kind {
        ArcKind::Projective { vertex } => alg.projective(arc.component, vertex),
        ArcKind::Inner { start, span } => IndModule {
            component: arc.component,
            top: (start + span) % n,
            len: span - 1,
        },
    }
}

/// Combinatorial crossing of two arcs. Arcs on different component disks
/// never cross; arcs sharing an endpoint never cross.
pub fn arcs_cross(alg: &Algebra, a: &Arc, b: &Arc) -> bool {
    if a.component != b.component || a == b {
        return false;
    }
    let n = alg.local_rank(a.component) as i64;
    match (a.kind, b.kind) {
        (ArcKind::Projective { .. }, ArcKind::Projective { .. }) => false,
        (ArcKind::Projective { vertex }, ArcKind::Inner { start, span })
        | (ArcKind::Inner { start, span }, ArcKind::Projective { vertex }) => {
            // the projective arc crosses iff its endpoint is strictly
            // inside the counterclockwise interval (start, start + span)
            (1..span as i64)
                .any(|k| (start as i64 + k).rem_euclid(n) == vertex as i64)
        }
        (
            ArcKind::Inner { start: s1, span: p1 },
            ArcKind::Inner { start: s2, span: p2 },
        ) => {
            // lift to the line: cross iff some lift of b properly
            // overlaps a (interiors meet, neither contains the other)
            let (x1, x2) = (s1 as i64, s1 as i64 + p1 as i64);
            for k in -2..=2i64 {
                let y1 = s2 as i64 + k * n;
                let y2 = y1 + p2 as i64;
                let interiors_meet = x1 < y2 && y1 < x2;
                let nested = (y1 >= x1 && y2 <= x2) || (x1 >= y1 && x2 <= y2);
                if interiors_meet && !nested {
                    return true;
                }
            }
            false
        }
    }
}

/// The arcs permitted by the Kupisch series: inner arcs of tau-rigid
/// non-projective modules plus all projective arcs.
pub fn allowed_arcs(alg: &Algebra) -> Vec<Arc> {
    let mut out = Vec::new();
    for m in alg.indecomposables() {
        if let Ok(arc) = to_arc(alg, &SignedInd::module(m), false) {
            out.push(arc);
        }
    }
    out.sort();
    out.dedup();
    out
}

/// All maximal pairwise non-crossing subsets of the allowed arcs.
pub fn triangulations(alg: &Algebra) -> Vec<Vec<Arc>> {
    maximal_noncrossing(alg, &allowed_arcs(alg))
}

fn maximal_noncrossing(alg: &Algebra, arcs: &[Arc]) -> Vec<Vec<Arc>> {
    let k = arcs.len();
    let mut out = Vec::new();
    let mut stack: Vec<(Vec<usize>, usize)> = vec![(Vec::new(), 0)];
    while let Some((chosen, from)) = stack.pop() {
        let mut extended = false;
        for i in from..k {
            if chosen.iter().all(|&j| !arcs_cross(alg, &arcs[j], &arcs[i])) {
                let mut next = chosen.clone();
                next.push(i);
                stack.push((next, i + 1));
                extended = true;
            }
        }
        if !extended {
            // maximal among later arcs; confirm global maximality
            let maximal = (0..k).all(|i| {
                chosen.contains(&i)
                    || chosen.iter().any(|&j| arcs_cross(alg, &arcs[j], &arcs[i]))
            });
            if maximal {
                out.push(chosen.iter().map(|&i| arcs[i]).collect());
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// All maximal non-crossing arc sets on one component disk.
pub fn component_triangulations(alg: &Algebra, component: usize) -> Vec<Vec<Arc>> {
    let arcs: Vec<Arc> = allowed_arcs(alg)
        .into_iter()
        .filter(|a| a.component == component)
        .collect();
    maximal_noncrossing(alg, &arcs)
}

/// Signed triangulation count: per component disk, each triangulation
/// carries sign +, and additionally sign - when it contains a projective
/// arc; component choices multiply.
pub fn signed_triangulation_count(alg: &Algebra) -> usize {
    (0..alg.components.len())
        .map(|c| {
            let tris = component_triangulations(alg, c);
            let with_proj = tris
                .iter()
                .filter(|t| {
                    t.iter()
                        .any(|a| matches!(a.kind, ArcKind::Projective { .. }))
                })
                .count();
            tris.len() + with_proj
        })
        .product()
}

/// Diagram of a pair: module summands as unsigned arcs, shifted summands
/// as index-shifted projective arcs under the minus decoration.
pub fn diagram_of_pair(
    alg: &Algebra,
    pair: &Pair,
    allow_decorative: bool,
) -> Result<SignedDiagram, DiskError> {
    let mut arcs = Vec::new();
    for s in pair.summands() {
        arcs.push(to_arc(alg, &s, allow_decorative)?);
    }
    arcs.sort();
    let signs = (0..alg.components.len())
        .map(|c| {
            if pair.shifted.iter().any(|p| p.component == c) {
                Sign::Minus
            } else {
                Sign::Plus
            }
        })
        .collect();
    Ok(SignedDiagram { arcs, signs })
}

// geometry constants: all rendering derives from these
const RADIUS: f64 = 100.0;
const DISK_GAP: f64 = 40.0;
const MARGIN: f64 = 30.0;
const LABEL_OFFSET: f64 = 14.0;
const POINT_SIZE: f64 = 3.0;
const INNER_PULL: f64 = 0.62;

fn point_angle(i: usize, n: usize) -> f64 {
    // marked points counterclockwise starting at angle 90/n degrees
    let base = std::f64::consts::PI / (2.0 * n as f64);
    base + 2.0 * std::f64::consts::PI * (i as f64) / (n as f64)
}

fn fmt(x: f64) -> String {
    format!("{x:.2}")
}

/// Deterministic SVG rendering; one disk per component, sign glyph at the
/// puncture.
pub fn render_svg(alg: &Algebra, diagram: &SignedDiagram) -> String {
    let k = alg.components.len();
    let width = 2.0 * MARGIN + (k as f64) * 2.0 * RADIUS + ((k - 1) as f64) * DISK_GAP;
    let height = 2.0 * MARGIN + 2.0 * RADIUS;
    let mut s = String::new();
    s.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">\n",
        fmt(width), fmt(height), fmt(width), fmt(height)
    ));
    for (c, comp) in alg.components.iter().enumerate() {
        let n = comp.rank();
        let cx = MARGIN + RADIUS + (c as f64) * (2.0 * RADIUS + DISK_GAP);
        let cy = MARGIN + RADIUS;
        let at = |i: usize, r: f64| -> (f64, f64) {
            let th = point_angle(i, n);
            (cx + r * th.cos(), cy - r * th.sin())
        };
        s.push_str(&format!(
            "  <circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"none\" stroke=\"black\"/>\n",
            fmt(cx), fmt(cy), fmt(RADIUS)
        ));
        s.push_str(&format!(
            "  <circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"black\"/>\n",
            fmt(cx), fmt(cy), fmt(POINT_SIZE)
        ));
        let glyph = match diagram.signs.get(c).copied().unwrap_or(Sign::Plus) {
            Sign::Plus => "+",
            Sign::Minus => "&#8722;",
        };
        s.push_str(&format!(
            "  <text x=\"{}\" y=\"{}\" font-size=\"14\" text-anchor=\"middle\">{}</text>\n",
            fmt(cx),
            fmt(cy - 8.0),
            glyph
        ));
        for i in 0..n {
            let (px, py) = at(i, RADIUS);
            s.push_str(&format!(
                "  <circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"black\"/>\n",
                fmt(px), fmt(py), fmt(POINT_SIZE)
            ));
            let (lx, ly) = at(i, RADIUS + LABEL_OFFSET);
            s.push_str(&format!(
                "  <text x=\"{}\" y=\"{}\" font-size=\"12\" text-anchor=\"middle\">{}</text>\n",
                fmt(lx), fmt(ly + 4.0), i
            ));
        }
        for arc in diagram.arcs.iter().filter(|a| a.component == c) {
            match arc.kind {
                ArcKind::Projective { vertex } => {
                    let (px, py) = at(vertex, RADIUS);
                    s.push_str(&format!(
                        "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"blue\"/>\n",
                        fmt(cx), fmt(cy), fmt(px), fmt(py)
                    ));
                }
                ArcKind::Inner { start, span } => {
                    let (x0, y0) = at(start, RADIUS);
                    let end = (start + span) % n;
                    let (x1, y1) = at(end, RADIUS);
                    // cubic through two interior control points on the
                    // counterclockwise side
                    let pull = RADIUS * (1.0 - INNER_PULL * (span as f64) / (n as f64));
                    let th0 = point_angle(start, n) + 2.0 * std::f64::consts::PI * (span as f64)
                        / (3.0 * n as f64);
                    let th1 = point_angle(start, n)
                        + 2.0 * 2.0 * std::f64::consts::PI * (span as f64) / (3.0 * n as f64);
                    let (c0x, c0y) = (cx + pull * th0.cos(), cy - pull * th0.sin());
                    let (c1x, c1y) = (cx + pull * th1.cos(), cy - pull * th1.sin());
                    s.push_str(&format!(
                        "  <path d=\"M {} {} C {} {}, {} {}, {} {}\" fill=\"none\" stroke=\"blue\"/>\n",
                        fmt(x0), fmt(y0), fmt(c0x), fmt(c0y), fmt(c1x), fmt(c1y), fmt(x1), fmt(y1)
                    ));
                }
            }
        }
    }
    s.push_str("</svg>\n");
    s
}

/// Deterministic TikZ rendering.
pub fn render_tikz(alg: &Algebra, diagram: &SignedDiagram) -> String {
    let mut s = String::from("\\begin{tikzpicture}\n");
    for (c, comp) in alg.components.iter().enumerate() {
        let n = comp.rank();
        let cx = (c as f64) * (2.0 * RADIUS + DISK_GAP) / 40.0;
        let r = RADIUS / 40.0;
        s.push_str(&format!(
            "  \\draw ({},0) circle ({});\n",
            fmt(cx), fmt(r)
        ));
        s.push_str(&format!(
            "  \\fill ({},0) circle (0.06);\n",
            fmt(cx)
        ));
        let glyph = match diagram.signs.get(c).copied().unwrap_or(Sign::Plus) {
            Sign::Plus => "$+$",
            Sign::Minus => "$-$",
        };
        s.push_str(&format!(
            "  \\node at ({},{}) {{{}}};\n",
            fmt(cx),
            fmt(0.3),
            glyph
        ));
        let deg = |i: usize| point_angle(i, n).to_degrees();
        for i in 0..n {
            s.push_str(&format!(
                "  \\fill ({}, 0) ++({}:{}) circle (0.06);\n",
                fmt(cx),
                fmt(deg(i)),
                fmt(r)
            ));
            s.push_str(&format!(
                "  \\node at ($({},0)+({}:{})$) {{{}}};\n",
                fmt(cx),
                fmt(deg(i)),
                fmt(r * 1.2),
                i
            ));
        }
        for arc in diagram.arcs.iter().filter(|a| a.component == c) {
            match arc.kind {
                ArcKind::Projective { vertex } => {
                    s.push_str(&format!(
                        "  \\draw[blue] ({},0) -- +({}:{});\n",
                        fmt(cx),
                        fmt(deg(vertex)),
                        fmt(r)
                    ));
                }
                ArcKind::Inner { start, span } => {
                    let end = (start + span) % n;
                    let bulge = fmt(90.0 - 60.0 * (span as f64) / (n as f64));
                    s.push_str(&format!(
                        "  \\draw[blue] ($({cx},0)+({a}:{r})$) to[out={o},in={i},looseness={l}] ($({cx},0)+({b}:{r})$);\n",
                        cx = fmt(cx),
                        a = fmt(deg(start)),
                        b = fmt(deg(end)),
                        r = fmt(r),
                        o = fmt(deg(start) + 90.0),
                        i = fmt(deg(end) - 90.0),
                        l = bulge
                    ));
                }
            }
        }
    }
    s.push_str("\\end{tikzpicture}\n");
    s
}

pub fn render(alg: &Algebra, diagram: &SignedDiagram, format: &str) -> Result<String, DiskError> {
    match format {
        "svg" => Ok(render_svg(alg, diagram)),
        "tikz" => Ok(render_tikz(alg, diagram)),
        other => Err(DiskError::UnsupportedFormat(other.to_string())),
    }
}
