//! SVG output. Geometric drawings are written exactly (so re-importing the
//! file recovers the same crossings); combinatorial drawings get a
//! schematic barycentric layout of their planarization.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::Path;

use regex::Regex;

use super::{CombinatorialDrawing, GeometricDrawing, Point};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexLabel};
use crate::planarity::trace_faces;

const SCALE: f64 = 60.0;
const MARGIN: f64 = 20.0;

pub enum SvgSource<'a> {
    Geometric(&'a GeometricDrawing),
    Combinatorial(&'a CombinatorialDrawing),
}

pub fn export_svg(src: SvgSource<'_>, path: &Path) -> Result<()> {
    let text = match src {
        SvgSource::Geometric(g) => render_svg(g, &[]),
        SvgSource::Combinatorial(d) => render_schematic(d)?,
    };
    std::fs::write(path, text)?;
    Ok(())
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('"', "&quot;").replace('<', "&lt;").replace('>', "&gt;")
}

fn unescape(s: &str) -> String {
    s.replace("&lt;", "<").replace("&gt;", ">").replace("&quot;", "\"").replace("&amp;", "&")
}

/// SVG text for a geometric drawing; `marks` are extra points drawn as small
/// crosses (used for dummy vertices of schematic layouts).
pub fn render_svg(g: &GeometricDrawing, marks: &[Point]) -> String {
    let mut pts: Vec<Point> = g.coords.clone();
    pts.extend(g.polylines.iter().flatten().copied());
    let (mut minx, mut miny, mut maxx, mut maxy) = (0.0f64, 0.0f64, 1.0f64, 1.0f64);
    if let Some(p) = pts.first() {
        (minx, miny, maxx, maxy) = (p.x, p.y, p.x, p.y);
    }
    for p in &pts {
        minx = minx.min(p.x);
        miny = miny.min(p.y);
        maxx = maxx.max(p.x);
        maxy = maxy.max(p.y);
    }
    let tx = |p: &Point| ((p.x - minx) * SCALE + MARGIN, (maxy - p.y) * SCALE + MARGIN);
    let width = (maxx - minx) * SCALE + 2.0 * MARGIN;
    let height = (maxy - miny) * SCALE + 2.0 * MARGIN;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.3}" height="{height:.3}" viewBox="0 0 {width:.3} {height:.3}">"#
    );
    let _ = writeln!(out, r#"<g fill="none" stroke="black" stroke-width="1">"#);
    for (e, poly) in g.polylines.iter().enumerate() {
        let points: Vec<String> = poly
            .iter()
            .map(|p| {
                let (x, y) = tx(p);
                format!("{x:.6},{y:.6}")
            })
            .collect();
        let _ =
            writeln!(out, r#"<polyline data-edge="{}" points="{}"/>"#, escape(&g.base.edge_key(e)), points.join(" "));
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, r#"<g fill="black">"#);
    for (v, p) in g.coords.iter().enumerate() {
        let (x, y) = tx(p);
        let _ = writeln!(
            out,
            r#"<circle data-vertex="{}" cx="{x:.6}" cy="{y:.6}" r="3"/>"#,
            escape(&g.base.label(v).to_string())
        );
    }
    let _ = writeln!(out, "</g>");
    if !marks.is_empty() {
        let _ = writeln!(out, r#"<g stroke="red" stroke-width="1">"#);
        for p in marks {
            let (x, y) = tx(p);
            let _ = writeln!(out, r#"<path class="crossing" d="M{:.3},{:.3}l6,6m0,-6l-6,6"/>"#, x - 3.0, y - 3.0);
        }
        let _ = writeln!(out, "</g>");
    }
    out.push_str("</svg>\n");
    out
}

/// Reads back an SVG written by [`render_svg`].
pub fn import_svg(text: &str) -> Result<GeometricDrawing> {
    let circle = Regex::new(r#"<circle data-vertex="([^"]*)" cx="([-0-9.eE+]+)" cy="([-0-9.eE+]+)""#).unwrap();
    let poly = Regex::new(r#"<polyline data-edge="([^"]*)" points="([^"]*)""#).unwrap();
    let mut vertices = Vec::new();
    for c in circle.captures_iter(text) {
        let label: VertexLabel = unescape(&c[1]).parse()?;
        let x: f64 = c[2].parse().map_err(|_| Error::Format("bad cx".into()))?;
        let y: f64 = c[3].parse().map_err(|_| Error::Format("bad cy".into()))?;
        vertices.push((label, Point::new(x, -y)));
    }
    let mut lines = Vec::new();
    for c in poly.captures_iter(text) {
        let key = unescape(&c[1]);
        let (a, b) = key.split_once('|').ok_or_else(|| Error::Format(format!("bad edge key {key:?}")))?;
        let (a, b): (VertexLabel, VertexLabel) = (a.parse()?, b.parse()?);
        let mut pts = Vec::new();
        for pair in c[2].split_whitespace() {
            let (x, y) = pair.split_once(',').ok_or_else(|| Error::Format(format!("bad point {pair:?}")))?;
            let x: f64 = x.parse().map_err(|_| Error::Format("bad x".into()))?;
            let y: f64 = y.parse().map_err(|_| Error::Format("bad y".into()))?;
            pts.push(Point::new(x, -y));
        }
        lines.push((a, b, pts));
    }
    let base =
        Graph::new(vertices.iter().map(|(l, _)| l.clone()), lines.iter().map(|(a, b, _)| (a.clone(), b.clone())))?;
    let mut coords = vec![Point::new(0.0, 0.0); base.vertex_count()];
    for (l, p) in &vertices {
        coords[base.index_of(l).unwrap()] = *p;
    }
    let mut polylines = vec![Vec::new(); base.edge_count()];
    for (a, b, mut pts) in lines {
        let e = base.edge_by_labels(&a, &b).unwrap();
        if base.index_of(&a).unwrap() > base.index_of(&b).unwrap() {
            pts.reverse();
        }
        polylines[e] = pts;
    }
    Ok(GeometricDrawing { base, coords, polylines })
}

/// Barycentric (Tutte) layout of the planarization with its largest face on
/// a circle.
fn render_schematic(d: &CombinatorialDrawing) -> Result<String> {
    let pz = d.planarization()?;
    let total = pz.vertex_count;
    let faces = trace_faces(&d.rotations);
    let outer: Vec<usize> = faces
        .boundary
        .iter()
        .max_by_key(|f| f.len())
        .map(|f| {
            let mut seen = BTreeSet::new();
            f.iter().map(|&(t, _)| t).filter(|&t| seen.insert(t)).collect()
        })
        .unwrap_or_default();
    let mut pos = vec![Point::new(0.0, 0.0); total];
    let mut fixed = vec![false; total];
    let radius = (total as f64).sqrt().max(2.0);
    for (k, &v) in outer.iter().enumerate() {
        let a = std::f64::consts::TAU * k as f64 / outer.len() as f64;
        pos[v] = Point::new(radius * a.cos(), radius * a.sin());
        fixed[v] = true;
    }
    for _ in 0..2000 {
        for v in 0..total {
            if fixed[v] || d.rotations[v].is_empty() {
                continue;
            }
            let nb = &d.rotations[v];
            let (sx, sy) = nb.iter().fold((0.0, 0.0), |acc, &w| (acc.0 + pos[w].x, acc.1 + pos[w].y));
            pos[v] = Point::new(sx / nb.len() as f64, sy / nb.len() as f64);
        }
    }
    let coords: Vec<Point> = pos[..d.base.vertex_count()].to_vec();
    let polylines: Vec<Vec<Point>> = pz.paths.iter().map(|p| p.iter().map(|&v| pos[v]).collect()).collect();
    let marks: Vec<Point> = pos[d.base.vertex_count()..].to_vec();
    let g = GeometricDrawing { base: d.base.clone(), coords, polylines };
    Ok(render_svg(&g, &marks))
}
