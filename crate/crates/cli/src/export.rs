use std::f64::consts::PI;
use std::fmt::Write as _;

use genusforge::construct::ChordDiagram;
use genusforge::CombinatorialMap;

/// Undirected DOT. When `(0, 1, …, v−1)` bounds a face its edges come
/// first, in cycle order, drawn bold.
pub fn dot(map: &CombinatorialMap) -> String {
    let v = map.vertex_count();
    let h: Vec<usize> = (0..v).collect();
    let has_h = v >= 3 && map.trace_faces().contains_cycle(map, &h);
    let mut out = String::from("graph embedding {\n  node [shape=circle];\n");
    for x in 0..v {
        let _ = writeln!(out, "  {};", map.label(x));
    }
    let mut edges: Vec<(usize, usize)> = map
        .edges()
        .map(|e| {
            let (d, _) = map.edge_darts(e);
            let (a, b) = (map.label(map.origin(d)), map.label(map.head(d)));
            (a.min(b), a.max(b))
        })
        .collect();
    edges.sort_unstable();
    if has_h {
        for x in 0..v {
            let (a, b) = (x, (x + 1) % v);
            if let Some(i) = edges.iter().position(|&e| e == (a.min(b), a.max(b))) {
                edges.remove(i);
            }
            let _ = writeln!(out, "  {a} -- {b} [style=bold, hcycle=true];");
        }
    }
    for (a, b) in edges {
        let _ = writeln!(out, "  {a} -- {b};");
    }
    out.push_str("}\n");
    out
}

const PALETTE: [&str; 4] = ["#1b9e77", "#d95f02", "#7570b3", "#e7298a"];

/// `H` on a circle with one chord per matched pair of its arcs, joining arc
/// midpoints and labelled by part index.
pub fn svg_chord(diagram: &ChordDiagram) -> String {
    let big = 2 * diagram.n;
    let (c, r) = (220.0, 180.0);
    let point = |t: f64| {
        let a = 2.0 * PI * t / big as f64 - PI / 2.0;
        (c + r * a.cos(), c + r * a.sin())
    };
    let mut out = String::new();
    let _ = writeln!(out, r#"<svg xmlns="http://www.w3.org/2000/svg" width="440" height="440" viewBox="0 0 440 440">"#);
    let _ = writeln!(out, r#"  <g class="h-edges" stroke="black" stroke-width="2">"#);
    for t in 0..big {
        let (x1, y1) = point(t as f64);
        let (x2, y2) = point(((t + 1) % big) as f64);
        let _ = writeln!(
            out,
            r#"    <line class="h-edge" data-from="{t}" data-to="{}" x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}"/>"#,
            (t + 1) % big
        );
    }
    out.push_str("  </g>\n  <g class=\"chords\" stroke-width=\"1.5\">\n");
    for (a, b, part) in diagram.chords() {
        // arc (t−1, t) has its midpoint at t − 1/2
        let (x1, y1) = point(a as f64 - 0.5);
        let (x2, y2) = point(b as f64 - 0.5);
        let colour = PALETTE[part % PALETTE.len()];
        let _ = writeln!(
            out,
            r#"    <line class="chord" data-part="{part}" data-arcs="{}-{a} {}-{b}" stroke="{colour}" x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}"/>"#,
            (a + big - 1) % big,
            (b + big - 1) % big
        );
        let (mx, my) = ((x1 + x2) / 2.0, (y1 + y2) / 2.0);
        let _ = writeln!(
            out,
            r#"    <text class="chord-label" x="{mx:.2}" y="{my:.2}" font-size="10" fill="{colour}">{part}</text>"#
        );
    }
    out.push_str("  </g>\n  <g class=\"vertices\" font-size=\"11\" text-anchor=\"middle\">\n");
    for t in 0..big {
        let (x, y) = point(t as f64);
        let (lx, ly) = (c + (x - c) * 1.08, c + (y - c) * 1.08 + 4.0);
        let _ = writeln!(out, r#"    <circle cx="{x:.2}" cy="{y:.2}" r="3"/>"#);
        let _ = writeln!(out, r#"    <text x="{lx:.2}" y="{ly:.2}">{t}</text>"#);
    }
    out.push_str("  </g>\n</svg>\n");
    out
}
