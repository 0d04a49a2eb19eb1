//! SVG, TikZ and plain-text pictures of windows and friezes. Output depends
//! only on the input, with coordinates printed to two decimals.

use std::f64::consts::PI;
use std::fmt::{Display, Write};

use clap::ValueEnum;

use infgon::{Arc, FriezeArray, TriangulationWindow};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Svg,
    Tikz,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Geometry {
    /// Marked points on a line, arcs as half-circles above it.
    Line,
    /// Marked points on a circle, accumulating at the top.
    Disc,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RenderSpec {
    pub format: Format,
    pub geometry: Geometry,
    pub scale: f64,
    pub labels: bool,
}

impl Default for RenderSpec {
    fn default() -> Self {
        RenderSpec { format: Format::Svg, geometry: Geometry::Line, scale: 40.0, labels: true }
    }
}

const MARGIN: f64 = 20.0;

/// Drawing order: longer arcs first, ties by position.
fn drawing_order(w: &TriangulationWindow) -> Vec<(i64, i64)> {
    let mut arcs: Vec<(i64, i64)> = w.arcs().iter().filter_map(Arc::ends).collect();
    arcs.sort_by_key(|&(a, b)| (-(b - a), a));
    arcs
}

struct Layout {
    w: TriangulationWindow,
    spec: RenderSpec,
}

impl Layout {
    fn n(&self) -> i64 {
        self.w.hi() - self.w.lo() + 1
    }

    fn point(&self, p: i64) -> (f64, f64) {
        let s = self.spec.scale;
        let i = (p - self.w.lo()) as f64;
        match self.spec.geometry {
            Geometry::Line => {
                let height = s * (self.n() as f64) / 2.0 + MARGIN;
                (MARGIN + i * s, height)
            }
            Geometry::Disc => {
                let r = self.radius();
                let theta = PI / 2.0 - 2.0 * PI * (i + 1.0) / (self.n() as f64 + 1.0);
                (MARGIN + r + r * theta.cos(), MARGIN + r - r * theta.sin())
            }
        }
    }

    fn radius(&self) -> f64 {
        self.spec.scale * (self.n() as f64 + 1.0) / (2.0 * PI)
    }

    fn infinity(&self) -> (f64, f64) {
        match self.spec.geometry {
            Geometry::Line => {
                let (x0, _) = self.point(self.w.lo());
                let (x1, _) = self.point(self.w.hi());
                ((x0 + x1) / 2.0, MARGIN / 2.0)
            }
            Geometry::Disc => (MARGIN + self.radius(), MARGIN),
        }
    }

    fn size(&self) -> (f64, f64) {
        match self.spec.geometry {
            Geometry::Line => {
                let (x, y) = self.point(self.w.hi());
                (x + MARGIN, y + MARGIN)
            }
            Geometry::Disc => {
                let d = 2.0 * (self.radius() + MARGIN);
                (d, d)
            }
        }
    }
}

pub fn render_window(w: &TriangulationWindow, spec: RenderSpec) -> String {
    match spec.format {
        Format::Svg => window_svg(&Layout { w: w.clone(), spec }),
        Format::Tikz => window_tikz(&Layout { w: w.clone(), spec }),
        Format::Text => window_text(w),
    }
}

fn window_svg(l: &Layout) -> String {
    let (width, height) = l.size();
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.2}" height="{height:.2}" viewBox="0 0 {width:.2} {height:.2}">"#
    );
    let _ = writeln!(out, r#"<g fill="none" stroke="black" stroke-width="1.5">"#);
    for (a, b) in drawing_order(&l.w) {
        let (x1, y1) = l.point(a);
        let (x2, y2) = l.point(b);
        let d = match l.spec.geometry {
            Geometry::Line => {
                let r = (x2 - x1) / 2.0;
                format!("M {x1:.2} {y1:.2} A {r:.2} {r:.2} 0 0 1 {x2:.2} {y2:.2}")
            }
            Geometry::Disc if b == a + 1 => format!("M {x1:.2} {y1:.2} L {x2:.2} {y2:.2}"),
            Geometry::Disc => {
                let c = MARGIN + l.radius();
                let (qx, qy) = ((x1 + x2 + c) / 3.0, (y1 + y2 + c) / 3.0);
                format!("M {x1:.2} {y1:.2} Q {qx:.2} {qy:.2} {x2:.2} {y2:.2}")
            }
        };
        let _ = writeln!(out, r#"<path class="arc" data-arc="{a},{b}" d="{d}"/>"#);
    }
    if let Some(f) = l.w.fountain() {
        let (x1, y1) = l.point(f);
        let (x2, y2) = l.infinity();
        let _ = writeln!(
            out,
            r#"<path class="infinite-arc" data-arc="{f},inf" stroke-dasharray="4 3" d="M {x1:.2} {y1:.2} L {x2:.2} {y2:.2}"/>"#
        );
    }
    let _ = writeln!(out, "</g>");
    let (ix, iy) = l.infinity();
    let _ = writeln!(out, r#"<circle class="infinity" cx="{ix:.2}" cy="{iy:.2}" r="3" fill="black"/>"#);
    if l.spec.labels {
        for p in l.w.lo()..=l.w.hi() {
            let (x, y) = l.point(p);
            let dy = match l.spec.geometry {
                Geometry::Line => 14.0,
                Geometry::Disc => {
                    if y > MARGIN + l.radius() {
                        14.0
                    } else {
                        -6.0
                    }
                }
            };
            let _ = writeln!(
                out,
                r#"<text class="label" x="{x:.2}" y="{:.2}" text-anchor="middle" font-size="12">{p}</text>"#,
                y + dy
            );
        }
    }
    out.push_str("</svg>\n");
    out
}

fn window_tikz(l: &Layout) -> String {
    let unit = l.spec.scale / 40.0;
    let coord = |p: i64| {
        let (x, y) = l.point(p);
        match l.spec.geometry {
            Geometry::Line => ((x - MARGIN) / l.spec.scale * unit, 0.0),
            Geometry::Disc => ((x - MARGIN - l.radius()) / 40.0, -(y - MARGIN - l.radius()) / 40.0),
        }
    };
    let mut out = String::from("\\begin{tikzpicture}\n");
    if l.spec.geometry == Geometry::Line {
        let (x1, _) = coord(l.w.hi());
        let _ = writeln!(out, "  \\draw[thick] (0.00,0) -- ({:.2},0);", x1 + unit);
    }
    if l.spec.labels {
        for p in l.w.lo()..=l.w.hi() {
            let (x, y) = coord(p);
            let _ = writeln!(out, "  \\node at ({x:.2}, {:.2}) {{{p}}};", y - 0.3);
        }
    }
    for (a, b) in drawing_order(&l.w) {
        let ((x1, y1), (x2, y2)) = (coord(a), coord(b));
        match l.spec.geometry {
            Geometry::Line => {
                let _ = writeln!(out, "  \\draw[thick] ({x1:.2},{y1:.2}) to[bend left=60] ({x2:.2},{y2:.2});");
            }
            Geometry::Disc => {
                let _ = writeln!(out, "  \\draw[thick] ({x1:.2},{y1:.2}) -- ({x2:.2},{y2:.2});");
            }
        }
    }
    let (ix, iy) = l.infinity();
    let inf = match l.spec.geometry {
        Geometry::Line => ((ix - MARGIN) / l.spec.scale * unit, (l.point(l.w.lo()).1 - iy) / l.spec.scale * unit),
        Geometry::Disc => (0.0, l.radius() / 40.0),
    };
    let _ = writeln!(out, "  \\node at ({:.2},{:.2}) {{$\\infty$}};", inf.0, inf.1 + 0.3);
    if let Some(f) = l.w.fountain() {
        let (x, y) = coord(f);
        let _ = writeln!(out, "  \\draw[thick, dashed] ({x:.2},{y:.2}) -- ({:.2},{:.2});", inf.0, inf.1);
    }
    out.push_str("\\end{tikzpicture}\n");
    out
}

/// One row per arc, longest first, drawn over a ruler of the marked points.
fn window_text(w: &TriangulationWindow) -> String {
    let cols = |p: i64| ((p - w.lo()) * 4) as usize;
    let width = cols(w.hi()) + 1;
    let mut out = String::new();
    if let Some(f) = w.fountain() {
        let mut row = vec![' '; width.max(cols(f) + 1)];
        row[cols(f)] = '∞';
        out.push_str(row.into_iter().collect::<String>().trim_end());
        out.push('\n');
    }
    for (a, b) in drawing_order(w) {
        let mut row = vec![' '; width];
        for c in row.iter_mut().take(cols(b)).skip(cols(a) + 1) {
            *c = '─';
        }
        row[cols(a)] = '╭';
        row[cols(b)] = '╮';
        out.push_str(row.into_iter().collect::<String>().trim_end());
        out.push('\n');
    }
    let mut ruler = String::new();
    for p in w.lo()..=w.hi() {
        let label = p.to_string();
        while ruler.chars().count() < cols(p) {
            ruler.push(' ');
        }
        ruler.push_str(&label);
    }
    out.push_str(&ruler);
    out.push('\n');
    out
}

pub fn render_frieze<T: Display + Clone>(f: &FriezeArray<T>, format: Format) -> String {
    let cell = |a: i64, b: i64| -> String {
        if f.in_hole(a, b) {
            "·".to_string()
        } else {
            f.get(a, b).map_or_else(|_| "?".to_string(), |v| v.to_string())
        }
    };
    match format {
        Format::Text => f.text_grid(),
        Format::Tikz => {
            let n = (f.hi() - f.lo() + 1) as usize;
            let mut out = format!("\\begin{{array}}{{c|{}}}\n", "c".repeat(n));
            let header: Vec<String> = (f.lo()..=f.hi()).map(|c| c.to_string()).collect();
            let _ = writeln!(out, "  & {} \\\\\\hline", header.join(" & "));
            for a in f.lo()..f.hi() {
                let cells: Vec<String> = (f.lo()..=f.hi())
                    .map(|b| match b.cmp(&a) {
                        std::cmp::Ordering::Less => String::new(),
                        _ if f.in_hole(a, b) => "\\cdot".to_string(),
                        _ => cell(a, b),
                    })
                    .collect();
                let _ = writeln!(out, "  {a} & {} \\\\", cells.join(" & "));
            }
            out.push_str("\\end{array}\n");
            out
        }
        Format::Svg => {
            let widest = f.entries().map(|(_, v)| v.to_string().chars().count()).max().unwrap_or(1).max(2);
            let cw = 9.0 * widest as f64 + 10.0;
            let rh = 22.0;
            let n = (f.hi() - f.lo() + 1) as f64;
            let (width, height) = (cw * (n + 1.0) + MARGIN, rh * (n + 1.0) + MARGIN);
            let mut out = String::new();
            let _ = writeln!(
                out,
                r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.2}" height="{height:.2}" viewBox="0 0 {width:.2} {height:.2}" font-family="monospace" font-size="14">"#
            );
            for b in f.lo()..=f.hi() {
                let x = MARGIN + cw * ((b - f.lo()) as f64 + 1.5);
                let _ = writeln!(out, r#"<text class="header" x="{x:.2}" y="{:.2}" text-anchor="middle">{b}</text>"#, MARGIN + 4.0);
            }
            for a in f.lo()..f.hi() {
                let y = MARGIN + rh * ((a - f.lo()) as f64 + 1.0) + 4.0;
                let _ = writeln!(out, r#"<text class="header" x="{:.2}" y="{y:.2}" text-anchor="middle">{a}</text>"#, MARGIN + cw / 2.0);
                for b in a..=f.hi() {
                    let x = MARGIN + cw * ((b - f.lo()) as f64 + 1.5);
                    let class = if f.in_hole(a, b) { "hole" } else { "entry" };
                    let _ = writeln!(
                        out,
                        r#"<text class="{class}" x="{x:.2}" y="{y:.2}" text-anchor="middle">{}</text>"#,
                        cell(a, b)
                    );
                }
            }
            out.push_str("</svg>\n");
            out
        }
    }
}

/// Bold every cell of a text grid that is exactly `1`.
pub fn highlight_ones(grid: &str) -> String {
    let mut out = String::new();
    for (i, line) in grid.lines().enumerate() {
        if i < 2 {
            out.push_str(line);
        } else {
            let (head, rest) = line.split_once('|').unwrap_or(("", line));
            out.push_str(head);
            out.push('|');
            let mut token = String::new();
            for ch in rest.chars().chain(std::iter::once(' ')) {
                if ch == ' ' {
                    if token == "1" {
                        out.push_str("\x1b[1;32m1\x1b[0m");
                    } else {
                        out.push_str(&token);
                    }
                    token.clear();
                    out.push(' ');
                } else {
                    token.push(ch);
                }
            }
            out.pop();
        }
        out.push('\n');
    }
    out
}
