//! Static SVG convergence chart.
//!
//! Two stacked panels sharing the `k` axis: the bound columns against the
//! exact Estrada index, and the ladder values against the spectral radius.
//! Output depends only on the table, so identical inputs give identical bytes.

use std::fmt::Write;

use crate::bounds::{BoundTable, SequenceKind};

const WIDTH: f64 = 760.0;
const PANEL_HEIGHT: f64 = 260.0;
const LEFT: f64 = 80.0;
const RIGHT: f64 = 170.0;
const TOP: f64 = 40.0;
const GAP: f64 = 60.0;

struct Series<'a> {
    label: &'a str,
    color: &'a str,
    points: Vec<(f64, f64)>,
}

struct Panel<'a> {
    title: String,
    series: Vec<Series<'a>>,
    reference: (&'a str, &'a str, f64),
}

pub fn to_svg(table: &BoundTable, title: &str) -> String {
    let kmax = table.rows.last().map_or(0, |r| r.k).max(1) as f64;
    let column = |f: &dyn Fn(&crate::bounds::BoundRow) -> Option<f64>| -> Vec<(f64, f64)> {
        table
            .rows
            .iter()
            .filter_map(|r| f(r).map(|y| (r.k as f64, y)))
            .collect()
    };

    let mut bounds = Vec::new();
    let general = column(&|r| r.bound_general);
    if !general.is_empty() {
        bounds.push(Series {
            label: "J^k (general)",
            color: "#1f77b4",
            points: general,
        });
    }
    let bipartite = column(&|r| r.bound_bipartite);
    if !bipartite.is_empty() {
        bounds.push(Series {
            label: "C^k (bipartite)",
            color: "#ff7f0e",
            points: bipartite,
        });
    }
    let matrix = column(&|r| r.bound_matrix);
    if !matrix.is_empty() {
        bounds.push(Series {
            label: "matrix bound",
            color: "#2ca02c",
            points: matrix,
        });
    }
    let seq_label = match table.sequence {
        SequenceKind::GammaGraph => "gamma(k)",
        SequenceKind::XiMatrix => "xi(k)",
    };
    let panels = [
        Panel {
            title: "lower bounds on EE".into(),
            series: bounds,
            reference: ("exact EE", "#d62728", table.exact_ee),
        },
        Panel {
            title: format!("{seq_label} against the spectral radius"),
            series: vec![Series {
                label: seq_label,
                color: "#9467bd",
                points: column(&|r| Some(r.seq_value)),
            }],
            reference: ("spectral radius", "#d62728", table.spectral_radius),
        },
    ];

    let height = TOP + 2.0 * PANEL_HEIGHT + GAP + 50.0;
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<?xml version="1.0" encoding="UTF-8"?>
<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{height}" viewBox="0 0 {WIDTH} {height}" font-family="sans-serif" font-size="12">
<rect x="0" y="0" width="{WIDTH}" height="{height}" fill="white"/>
<text x="{:.1}" y="24" text-anchor="middle" font-size="15">{}</text>"#,
        WIDTH / 2.0,
        escape(title)
    );
    for (i, panel) in panels.iter().enumerate() {
        let top = TOP + i as f64 * (PANEL_HEIGHT + GAP);
        draw_panel(&mut svg, panel, top, kmax);
    }
    svg.push_str("</svg>\n");
    svg
}

fn draw_panel(svg: &mut String, panel: &Panel<'_>, top: f64, kmax: f64) {
    let plot_w = WIDTH - LEFT - RIGHT;
    let plot_h = PANEL_HEIGHT - 30.0;
    let y0 = top + 20.0;

    let (label, ref_color, ref_value) = panel.reference;
    let mut lo = ref_value;
    let mut hi = ref_value;
    for s in &panel.series {
        for &(_, y) in &s.points {
            lo = lo.min(y);
            hi = hi.max(y);
        }
    }
    let span = hi - lo;
    let pad = if span > 0.0 { 0.08 * span } else { 0.5 * hi.abs().max(1.0) * 0.1 };
    let (lo, hi) = (lo - pad, hi + pad);
    let sx = |k: f64| LEFT + k / kmax * plot_w;
    let sy = |v: f64| y0 + (hi - v) / (hi - lo) * plot_h;

    let _ = writeln!(
        svg,
        r#"<text x="{LEFT}" y="{:.1}" font-size="13">{}</text>
<rect x="{LEFT}" y="{y0:.1}" width="{plot_w:.1}" height="{plot_h:.1}" fill="none" stroke="black"/>"#,
        y0 - 6.0,
        escape(&panel.title)
    );
    for t in 0..=4 {
        let v = lo + (hi - lo) * t as f64 / 4.0;
        let y = sy(v);
        let _ = writeln!(
            svg,
            r##"<line x1="{LEFT}" y1="{y:.2}" x2="{:.1}" y2="{y:.2}" stroke="#dddddd"/>
<text x="{:.1}" y="{:.2}" text-anchor="end">{}</text>"##,
            LEFT + plot_w,
            LEFT - 6.0,
            y + 4.0,
            tick_label(v)
        );
    }
    let step = (kmax / 10.0).ceil().max(1.0);
    let mut k = 0.0;
    while k <= kmax {
        let _ = writeln!(
            svg,
            r#"<text x="{:.2}" y="{:.1}" text-anchor="middle">{k}</text>"#,
            sx(k),
            y0 + plot_h + 16.0
        );
        k += step;
    }
    let _ = writeln!(
        svg,
        r#"<text x="{:.1}" y="{:.1}" text-anchor="middle">k</text>"#,
        LEFT + plot_w / 2.0,
        y0 + plot_h + 30.0
    );

    let ry = sy(ref_value);
    let _ = writeln!(
        svg,
        r#"<line x1="{LEFT}" y1="{ry:.2}" x2="{:.1}" y2="{ry:.2}" stroke="{ref_color}" stroke-dasharray="6,4"/>"#,
        LEFT + plot_w
    );
    for s in &panel.series {
        let pts: Vec<String> = s
            .points
            .iter()
            .map(|&(k, v)| format!("{:.2},{:.2}", sx(k), sy(v)))
            .collect();
        let _ = writeln!(
            svg,
            r#"<polyline fill="none" stroke="{}" stroke-width="1.5" points="{}"/>"#,
            s.color,
            pts.join(" ")
        );
        if s.points.len() <= 60 {
            for &(k, v) in &s.points {
                let _ = writeln!(
                    svg,
                    r#"<circle cx="{:.2}" cy="{:.2}" r="2.5" fill="{}"/>"#,
                    sx(k),
                    sy(v),
                    s.color
                );
            }
        }
    }

    let lx = LEFT + plot_w + 12.0;
    let mut ly = y0 + 10.0;
    let mut legend = |color: &str, text: &str, dashed: bool| {
        let dash = if dashed { r#" stroke-dasharray="6,4""# } else { "" };
        let _ = writeln!(
            svg,
            r#"<line x1="{lx:.1}" y1="{ly:.1}" x2="{:.1}" y2="{ly:.1}" stroke="{color}" stroke-width="2"{dash}/>
<text x="{:.1}" y="{:.1}">{}</text>"#,
            lx + 20.0,
            lx + 26.0,
            ly + 4.0,
            escape(text)
        );
        ly += 18.0;
    };
    for s in &panel.series {
        legend(s.color, s.label, false);
    }
    legend(ref_color, &format!("{label} = {}", tick_label(ref_value)), true);
}

fn tick_label(v: f64) -> String {
    if v != 0.0 && (v.abs() >= 1e6 || v.abs() < 1e-3) {
        format!("{v:.3e}")
    } else {
        format!("{v:.4}")
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::bound_table_graph;
    use crate::graph::{generate, Family};

    #[test]
    fn svg_is_deterministic_and_complete() {
        let g = generate(Family::Path(4)).unwrap();
        let t = bound_table_graph(&g, 1000, 1e-10).unwrap();
        let a = to_svg(&t, "P4 <path>");
        assert_eq!(a, to_svg(&t, "P4 <path>"));
        assert!(a.starts_with("<?xml"));
        assert!(a.trim_end().ends_with("</svg>"));
        assert!(a.contains("P4 &lt;path&gt;"));
        assert!(a.contains("C^k (bipartite)") && a.contains("J^k (general)"));
        assert_eq!(a.matches("<polyline").count(), 3);
    }

    #[test]
    fn single_row_table() {
        let g = crate::graph::Graph::empty(1).unwrap();
        let t = bound_table_graph(&g, 10, 1e-10).unwrap();
        let svg = to_svg(&t, "K1");
        assert!(!svg.contains("NaN") && !svg.contains("inf"));
    }
}
