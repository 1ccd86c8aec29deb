//! Minimal self-contained SVG line charts.
//!
//! Output depends only on the input data: fixed viewport, fixed number
//! formatting, no fonts or assets referenced from outside the document.

use std::fmt::Write as _;

const PANEL_WIDTH: f64 = 320.0;
const PANEL_HEIGHT: f64 = 420.0;
const MARGIN_LEFT: f64 = 64.0;
const MARGIN_RIGHT: f64 = 16.0;
const MARGIN_TOP: f64 = 56.0;
const MARGIN_BOTTOM: f64 = 92.0;

#[derive(Debug, Clone)]
pub struct Series {
    pub label: String,
    pub color: &'static str,
    pub dashed: bool,
    /// Non-finite coordinates break the line.
    pub points: Vec<(f64, f64)>,
}

#[derive(Debug, Clone)]
pub struct Panel {
    pub title: String,
    pub x_label: String,
    pub y_label: String,
    pub x_log: bool,
    /// Draw the y axis increasing downward.
    pub y_down: bool,
    pub series: Vec<Series>,
    /// Horizontal reference lines, `(y, label)`.
    pub guides: Vec<(f64, String)>,
}

impl Panel {
    pub fn new(title: impl Into<String>, x_label: impl Into<String>, y_label: impl Into<String>) -> Self {
        Self {
            title: title.into(),
            x_label: x_label.into(),
            y_label: y_label.into(),
            x_log: false,
            y_down: false,
            series: Vec::new(),
            guides: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Axis {
    lo: f64,
    hi: f64,
    log: bool,
}

impl Axis {
    fn fit(values: impl Iterator<Item = f64>, log: bool) -> Self {
        let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
        for v in values.filter(|v| v.is_finite() && (!log || *v > 0.0)) {
            lo = lo.min(v);
            hi = hi.max(v);
        }
        if !lo.is_finite() {
            return Axis { lo: if log { 1.0 } else { 0.0 }, hi: if log { 10.0 } else { 1.0 }, log };
        }
        if log {
            return Axis { lo: 10f64.powf(lo.log10().floor()), hi: 10f64.powf(hi.log10().ceil().max(lo.log10().floor() + 1.0)), log };
        }
        if hi - lo <= f64::EPSILON * hi.abs().max(lo.abs()).max(f64::MIN_POSITIVE) {
            let pad = if lo == 0.0 { 1.0 } else { 0.1 * lo.abs() };
            lo -= pad;
            hi += pad;
        }
        let step = nice_step((hi - lo) / 5.0);
        Axis { lo: (lo / step).floor() * step, hi: (hi / step).ceil() * step, log }
    }

    fn unit(&self, v: f64) -> f64 {
        if self.log {
            (v.log10() - self.lo.log10()) / (self.hi.log10() - self.lo.log10())
        } else {
            (v - self.lo) / (self.hi - self.lo)
        }
    }

    fn ticks(&self) -> Vec<f64> {
        if self.log {
            let (a, b) = (self.lo.log10().round() as i32, self.hi.log10().round() as i32);
            return (a..=b).map(|k| 10f64.powi(k)).collect();
        }
        let step = nice_step((self.hi - self.lo) / 5.0);
        let first = (self.lo / step).ceil() as i64;
        let last = (self.hi / step).floor() as i64;
        (first..=last).map(|k| k as f64 * step).collect()
    }
}

fn nice_step(raw: f64) -> f64 {
    let mag = 10f64.powf(raw.log10().floor());
    let f = raw / mag;
    let nice = if f <= 1.0 {
        1.0
    } else if f <= 2.0 {
        2.0
    } else if f <= 5.0 {
        5.0
    } else {
        10.0
    };
    nice * mag
}

fn tick_label(v: f64) -> String {
    if v == 0.0 {
        return "0".into();
    }
    let a = v.abs();
    if !(1e-3..1e5).contains(&a) {
        return format!("{v:.0e}");
    }
    let s = format!("{v:.4}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" { "0".into() } else { s.to_string() }
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Renders `panels` side by side under a common title.
pub fn render(title: &str, panels: &[Panel]) -> String {
    let width = PANEL_WIDTH * panels.len() as f64;
    let height = PANEL_HEIGHT;
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.0} {height:.0}" font-family="sans-serif" font-size="11">"#
    );
    let _ = writeln!(s, r#"<rect x="0" y="0" width="{width:.0}" height="{height:.0}" fill="white"/>"#);
    let _ = writeln!(s, r#"<text x="{:.1}" y="18" text-anchor="middle" font-size="14">{}</text>"#, width / 2.0, escape(title));
    for (i, panel) in panels.iter().enumerate() {
        render_panel(&mut s, panel, i as f64 * PANEL_WIDTH);
    }
    s.push_str("</svg>\n");
    s
}

fn render_panel(s: &mut String, panel: &Panel, offset: f64) {
    let x0 = offset + MARGIN_LEFT;
    let x1 = offset + PANEL_WIDTH - MARGIN_RIGHT;
    let y0 = MARGIN_TOP;
    let y1 = PANEL_HEIGHT - MARGIN_BOTTOM;
    let xs = Axis::fit(panel.series.iter().flat_map(|se| se.points.iter().map(|p| p.0)), panel.x_log);
    let ys = Axis::fit(
        panel
            .series
            .iter()
            .flat_map(|se| se.points.iter().map(|p| p.1))
            .chain(panel.guides.iter().map(|g| g.0)),
        false,
    );
    let px = |v: f64| x0 + xs.unit(v) * (x1 - x0);
    let py = |v: f64| {
        let u = ys.unit(v);
        if panel.y_down { y0 + u * (y1 - y0) } else { y1 - u * (y1 - y0) }
    };

    let _ = writeln!(s, r#"<g>"#);
    let _ = writeln!(s, r#"<text x="{:.1}" y="38" text-anchor="middle" font-size="12">{}</text>"#, (x0 + x1) / 2.0, escape(&panel.title));
    for t in xs.ticks() {
        let x = px(t);
        let _ = writeln!(s, r##"<line x1="{x:.2}" y1="{y0:.2}" x2="{x:.2}" y2="{y1:.2}" stroke="#e0e0e0"/>"##);
        let _ = writeln!(s, r#"<text x="{x:.2}" y="{:.2}" text-anchor="middle">{}</text>"#, y1 + 14.0, tick_label(t));
    }
    for t in ys.ticks() {
        let y = py(t);
        let _ = writeln!(s, r##"<line x1="{x0:.2}" y1="{y:.2}" x2="{x1:.2}" y2="{y:.2}" stroke="#e0e0e0"/>"##);
        let _ = writeln!(s, r#"<text x="{:.2}" y="{:.2}" text-anchor="end">{}</text>"#, x0 - 4.0, y + 4.0, tick_label(t));
    }
    if !xs.log && xs.lo < 0.0 && xs.hi > 0.0 {
        let x = px(0.0);
        let _ = writeln!(s, r##"<line x1="{x:.2}" y1="{y0:.2}" x2="{x:.2}" y2="{y1:.2}" stroke="#808080"/>"##);
    }
    let _ = writeln!(
        s,
        r#"<rect x="{x0:.2}" y="{y0:.2}" width="{:.2}" height="{:.2}" fill="none" stroke="black"/>"#,
        x1 - x0,
        y1 - y0
    );
    for (y, label) in &panel.guides {
        let y = py(*y);
        let _ = writeln!(s, r##"<line x1="{x0:.2}" y1="{y:.2}" x2="{x1:.2}" y2="{y:.2}" stroke="#808080" stroke-dasharray="2,3"/>"##);
        let _ = writeln!(s, r##"<text x="{:.2}" y="{:.2}" text-anchor="end" fill="#606060">{}</text>"##, x1 - 3.0, y - 3.0, escape(label));
    }
    for series in &panel.series {
        let dash = if series.dashed { r#" stroke-dasharray="6,4""# } else { "" };
        let mut segment: Vec<String> = Vec::new();
        let mut flush = |segment: &mut Vec<String>| {
            if segment.len() > 1 {
                let _ = writeln!(
                    s,
                    r#"<polyline fill="none" stroke="{}" stroke-width="1.6"{dash} points="{}"/>"#,
                    series.color,
                    segment.join(" ")
                );
            }
            segment.clear();
        };
        for &(x, y) in &series.points {
            if x.is_finite() && y.is_finite() && (!xs.log || x > 0.0) {
                segment.push(format!("{:.2},{:.2}", px(x), py(y)));
            } else {
                flush(&mut segment);
            }
        }
        flush(&mut segment);
    }
    let _ = writeln!(s, r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">{}</text>"#, (x0 + x1) / 2.0, y1 + 32.0, escape(&panel.x_label));
    let _ = writeln!(
        s,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle" transform="rotate(-90 {:.2} {:.2})">{}</text>"#,
        offset + 14.0,
        (y0 + y1) / 2.0,
        offset + 14.0,
        (y0 + y1) / 2.0,
        escape(&panel.y_label)
    );
    for (k, series) in panel.series.iter().enumerate() {
        let ly = y1 + 50.0 + 14.0 * k as f64;
        let dash = if series.dashed { r#" stroke-dasharray="6,4""# } else { "" };
        let _ = writeln!(
            s,
            r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="{}" stroke-width="1.6"{dash}/>"#,
            x0,
            ly - 4.0,
            x0 + 22.0,
            ly - 4.0,
            series.color
        );
        let _ = writeln!(s, r#"<text x="{:.2}" y="{ly:.2}">{}</text>"#, x0 + 28.0, escape(&series.label));
    }
    let _ = writeln!(s, "</g>");
}
