//! Minimal SVG line charts with a log-scaled y axis.

use std::fmt::Write as _;

type Series = [(String, Vec<(f64, f64)>)];

const COLORS: [&str; 4] = ["#1b6ca8", "#d1495b", "#edae49", "#00798c"];
const W: f64 = 420.0;
const H: f64 = 300.0;
const PAD: f64 = 50.0;

fn panel(out: &mut String, dx: f64, title: &str, series: &Series, x_label: &str) {
    let pts = series.iter().flat_map(|(_, p)| p.iter());
    let (mut x0, mut x1, mut y0, mut y1) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for &(x, y) in pts {
        x0 = x0.min(x);
        x1 = x1.max(x);
        let ly = y.max(1e-3).log10();
        y0 = y0.min(ly);
        y1 = y1.max(ly);
    }
    if x0 > x1 {
        return;
    }
    let y0 = y0.floor();
    let y1 = y1.ceil().max(y0 + 1.0);
    let xspan = (x1 - x0).max(1.0);
    let sx = |x: f64| dx + PAD + (x - x0) / xspan * (W - 2.0 * PAD);
    let sy = |y: f64| H - PAD - (y.max(1e-3).log10() - y0) / (y1 - y0) * (H - 2.0 * PAD);

    writeln!(out, r#"<text x="{}" y="20" text-anchor="middle" font-size="14">{title}</text>"#, dx + W / 2.0).unwrap();
    writeln!(
        out,
        r#"<rect x="{}" y="{PAD}" width="{}" height="{}" fill="none" stroke="gray"/>"#,
        dx + PAD,
        W - 2.0 * PAD,
        H - 2.0 * PAD
    )
    .unwrap();
    let mut e = y0;
    while e <= y1 {
        let y = sy(10f64.powf(e));
        writeln!(out, r#"<text x="{}" y="{}" text-anchor="end" font-size="10">1e{e}</text>"#, dx + PAD - 4.0, y + 3.0)
            .unwrap();
        e += 1.0;
    }
    for &(x, _) in &series[0].1 {
        writeln!(out, r#"<text x="{}" y="{}" text-anchor="middle" font-size="10">{x}</text>"#, sx(x), H - PAD + 14.0)
            .unwrap();
    }
    writeln!(out, r#"<text x="{}" y="{}" text-anchor="middle" font-size="11">{x_label}</text>"#, dx + W / 2.0, H - 12.0)
        .unwrap();
    for (i, (label, p)) in series.iter().enumerate() {
        let color = COLORS[i % COLORS.len()];
        let coords: Vec<String> = p.iter().map(|&(x, y)| format!("{:.1},{:.1}", sx(x), sy(y))).collect();
        writeln!(out, r#"<polyline fill="none" stroke="{color}" stroke-width="2" points="{}"/>"#, coords.join(" "))
            .unwrap();
        let ly = PAD + 14.0 * i as f64 + 12.0;
        writeln!(out, r#"<text x="{}" y="{ly}" font-size="10" fill="{color}">{label}</text>"#, dx + PAD + 6.0).unwrap();
    }
}

/// Two charts side by side sharing the x axis label.
pub fn two_panel(left: (&str, &Series), right: (&str, &Series), x_label: &str) -> String {
    let mut out = format!(
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{H}" font-family="sans-serif">"#,
        2.0 * W
    );
    out.push('\n');
    panel(&mut out, 0.0, left.0, left.1, x_label);
    panel(&mut out, W, right.0, right.1, x_label);
    out.push_str("</svg>\n");
    out
}
