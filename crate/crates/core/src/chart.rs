//! Static SVG plots of LCC′ against the removed fraction `f`.

use std::fmt::Write as _;
use std::io::Write;

use crate::attack::{AttackStrategy, AttackTrace, Information};
use crate::error::{Error, Result};

/// Line colors indexed by [`AttackStrategy::index`].
pub const PALETTE: [&str; 8] = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#17becf",
];

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 480.0;
const LEFT: f64 = 64.0;
const RIGHT: f64 = 120.0;
const TOP: f64 = 40.0;
const BOTTOM: f64 = 56.0;

/// One curve: `(f, lcc_prime)` vertices of a step polyline.
#[derive(Clone, Debug, PartialEq)]
pub struct ChartSeries {
    pub strategy: AttackStrategy,
    pub points: Vec<(f64, f64)>,
}

impl ChartSeries {
    /// Staircase through the trace: LCC′ holds its value until the next
    /// removal, then drops.
    pub fn from_trace(trace: &AttackTrace) -> Self {
        let mut points = vec![(0.0, trace.rows[0].lcc_prime)];
        for pair in trace.rows.windows(2) {
            points.push((pair[1].f, pair[0].lcc_prime));
            points.push((pair[1].f, pair[1].lcc_prime));
        }
        ChartSeries {
            strategy: trace.strategy,
            points,
        }
    }

    /// Pointwise mean of several traces of one strategy, evaluated at
    /// every `f` where any of them steps.
    pub fn mean_of(strategy: AttackStrategy, traces: &[&AttackTrace]) -> Self {
        let mut fs: Vec<f64> = traces.iter().flat_map(|t| t.rows.iter().map(|r| r.f)).collect();
        fs.sort_by(f64::total_cmp);
        fs.dedup();
        let mean = |f: f64| traces.iter().map(|t| t.lcc_prime_at(f)).sum::<f64>() / traces.len() as f64;
        let mut points = vec![(0.0, mean(0.0))];
        let mut prev = points[0].1;
        for &f in fs.iter().filter(|&&f| f > 0.0) {
            let y = mean(f);
            points.push((f, prev));
            points.push((f, y));
            prev = y;
        }
        ChartSeries { strategy, points }
    }
}

fn x_px(f: f64) -> f64 {
    LEFT + f.clamp(0.0, 1.0) * (WIDTH - LEFT - RIGHT)
}

fn y_px(v: f64) -> f64 {
    HEIGHT - BOTTOM - v.clamp(0.0, 1.0) * (HEIGHT - TOP - BOTTOM)
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

/// Renders one polyline per trace with a legend of strategy codes.
pub fn render_chart<W: Write>(traces: &[AttackTrace], title: &str, out: W) -> Result<()> {
    let series: Vec<ChartSeries> = traces.iter().map(ChartSeries::from_trace).collect();
    render_series(&series, title, out)
}

pub fn render_series<W: Write>(series: &[ChartSeries], title: &str, mut out: W) -> Result<()> {
    if series.is_empty() {
        return Err(Error::InvalidArgument("a chart needs at least one trace".into()));
    }
    out.write_all(svg_document(series, title).as_bytes())?;
    out.flush()?;
    Ok(())
}

/// The chart as an SVG string.
pub fn svg_document(series: &[ChartSeries], title: &str) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(s, r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#);
    let _ = writeln!(
        s,
        r#"<text x="{:.1}" y="24" text-anchor="middle" font-size="14">{}</text>"#,
        (LEFT + WIDTH - RIGHT) / 2.0,
        escape(title)
    );

    // Grid, ticks and labels.
    let _ = writeln!(s, r##"<g stroke="#dddddd" stroke-width="1">"##);
    for i in 0..=5 {
        let t = i as f64 * 0.2;
        let _ = writeln!(
            s,
            r#"<line x1="{x:.1}" y1="{:.1}" x2="{x:.1}" y2="{:.1}"/>"#,
            y_px(0.0),
            y_px(1.0),
            x = x_px(t)
        );
        let _ = writeln!(
            s,
            r#"<line x1="{:.1}" y1="{y:.1}" x2="{:.1}" y2="{y:.1}"/>"#,
            x_px(0.0),
            x_px(1.0),
            y = y_px(t)
        );
    }
    let _ = writeln!(s, "</g>");
    let _ = writeln!(s, r#"<g fill="black">"#);
    for i in 0..=5 {
        let t = i as f64 * 0.2;
        let _ = writeln!(
            s,
            r#"<text x="{:.1}" y="{:.1}" text-anchor="middle">{t:.1}</text>"#,
            x_px(t),
            y_px(0.0) + 18.0
        );
        let _ = writeln!(
            s,
            r#"<text x="{:.1}" y="{:.1}" text-anchor="end">{t:.1}</text>"#,
            x_px(0.0) - 8.0,
            y_px(t) + 4.0
        );
    }
    let _ = writeln!(
        s,
        r#"<text x="{:.1}" y="{:.1}" text-anchor="middle">fraction removed f</text>"#,
        (x_px(0.0) + x_px(1.0)) / 2.0,
        HEIGHT - 12.0
    );
    let _ = writeln!(
        s,
        r#"<text x="18" y="{y:.1}" text-anchor="middle" transform="rotate(-90 18 {y:.1})">LCC′ (largest component / N)</text>"#,
        y = (y_px(0.0) + y_px(1.0)) / 2.0
    );
    let _ = writeln!(s, "</g>");
    let _ = writeln!(
        s,
        r#"<rect x="{:.1}" y="{:.1}" width="{:.1}" height="{:.1}" fill="none" stroke="black"/>"#,
        x_px(0.0),
        y_px(1.0),
        x_px(1.0) - x_px(0.0),
        y_px(0.0) - y_px(1.0)
    );

    for series in series {
        let color = PALETTE[series.strategy.index()];
        let dash = match series.strategy.info {
            Information::Initial => r#" stroke-dasharray="6 3""#,
            Information::Recalculated => "",
        };
        let points: Vec<String> = series
            .points
            .iter()
            .map(|&(f, v)| format!("{:.2},{:.2}", x_px(f), y_px(v)))
            .collect();
        let _ = writeln!(
            s,
            r#"<polyline fill="none" stroke="{color}" stroke-width="2"{dash} points="{}"/>"#,
            points.join(" ")
        );
    }

    // Legend: one entry per distinct strategy, in canonical order.
    let mut strategies: Vec<AttackStrategy> = series.iter().map(|s| s.strategy).collect();
    strategies.sort_by_key(|s| s.index());
    strategies.dedup();
    let legend_x = WIDTH - RIGHT + 16.0;
    let _ = writeln!(s, r#"<g class="legend">"#);
    for (i, strategy) in strategies.iter().enumerate() {
        let y = TOP + 12.0 + i as f64 * 20.0;
        let _ = writeln!(
            s,
            r#"<rect x="{legend_x:.1}" y="{:.1}" width="24" height="4" fill="{}"/><text x="{:.1}" y="{:.1}">{}</text>"#,
            y - 2.0,
            PALETTE[strategy.index()],
            legend_x + 32.0,
            y + 4.0,
            strategy.code()
        );
    }
    let _ = writeln!(s, "</g>");
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    fn svg_for(traces: &[AttackTrace]) -> String {
        let mut out = Vec::new();
        render_chart(traces, "test", &mut out).unwrap();
        String::from_utf8(out).unwrap()
    }

    #[test]
    fn one_trace_one_polyline() {
        let t = "RM".parse::<AttackStrategy>().unwrap().run(&named::path(7)).unwrap();
        let svg = svg_for(&[t]);
        assert_eq!(svg.matches("<polyline").count(), 1);
        assert_eq!(svg.matches("<g class=\"legend\">").count(), 1);
    }

    #[test]
    fn eight_traces_eight_legend_entries() {
        let g = named::path(9);
        let traces: Vec<AttackTrace> = AttackStrategy::ALL.iter().map(|s| s.run(&g).unwrap()).collect();
        let svg = svg_for(&traces);
        assert_eq!(svg.matches("<polyline").count(), 8);
        let legend = &svg[svg.find("class=\"legend\"").unwrap()..];
        let codes: Vec<&str> = legend
            .split("</text>")
            .filter_map(|chunk| chunk.rsplit('>').next())
            .filter(|c| c.len() == 2)
            .collect();
        assert_eq!(codes, ["IB", "IC", "ID", "IM", "RB", "RC", "RD", "RM"]);
    }

    #[test]
    fn tick_labels_on_both_axes() {
        let t = "RD".parse::<AttackStrategy>().unwrap().run(&named::star(5)).unwrap();
        let svg = svg_for(&[t]);
        for tick in ["0.0", "0.2", "0.4", "0.6", "0.8", "1.0"] {
            assert_eq!(svg.matches(&format!(">{tick}</text>")).count(), 2, "{tick}");
        }
    }

    #[test]
    fn empty_chart_is_rejected() {
        assert!(render_chart(&[], "x", Vec::new()).is_err());
    }

    #[test]
    fn staircase_points() {
        let t = "RM".parse::<AttackStrategy>().unwrap().run(&named::path(7)).unwrap();
        let s = ChartSeries::from_trace(&t);
        assert_eq!(s.points, vec![(0.0, 1.0), (1.0 / 7.0, 1.0), (1.0 / 7.0, 3.0 / 7.0)]);
    }

    #[test]
    fn mean_curve_averages_step_functions() {
        let rm = "RM".parse::<AttackStrategy>().unwrap();
        let a = rm.run(&named::path(7)).unwrap();
        let b = rm.run(&named::cycle(6)).unwrap();
        let m = ChartSeries::mean_of(rm, &[&a, &b]);
        assert_eq!(m.points.first(), Some(&(0.0, 1.0)));
        let (f, y) = *m.points.last().unwrap();
        assert_eq!(f, 1.0);
        assert!((y - (3.0 / 7.0) / 2.0).abs() < 1e-12);
    }
}
