//! Deterministic SVG rendering of planar scenes: one closed polyline per
//! component in a fixed palette, inter-component crossings marked. All
//! coordinates are scaled exact rationals floored to integers, so identical
//! inputs produce byte-identical output.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use plgauss::constructions::planar_crossings;
use plgauss::invariants::Scene;
use plgauss::Rat;

const COLORS: [&str; 3] = ["#d62728", "#2ca02c", "#1f77b4"];
const SCALE: i64 = 100;

fn px(x: &Rat) -> i64 {
    // floor(SCALE * x), exactly.
    let scaled = x * Rat::from(BigInt::from(SCALE));
    scaled.floor().to_integer().to_i64().expect("coordinate fits i64 after scaling")
}

pub fn render(scene: &Scene<Rat>) -> String {
    assert_eq!(scene.ambient_dim, 2);
    let mut min_x = i64::MAX;
    let mut min_y = i64::MAX;
    let mut max_x = i64::MIN;
    let mut max_y = i64::MIN;
    for c in &scene.components {
        for p in &c.map.images {
            min_x = min_x.min(px(&p.coords[0]));
            max_x = max_x.max(px(&p.coords[0]));
            min_y = min_y.min(px(&p.coords[1]));
            max_y = max_y.max(px(&p.coords[1]));
        }
    }
    let pad = SCALE;
    let (x0, y0) = (min_x - pad, min_y - pad);
    let (w, h) = (max_x - min_x + 2 * pad, max_y - min_y + 2 * pad);

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{x0} {y0} {w} {h}\">\n"
    ));
    // Flip y so the mathematical orientation matches the picture.
    out.push_str(&format!("<g transform=\"translate(0 {}) scale(1 -1)\">\n", 2 * y0 + h));
    for (i, c) in scene.components.iter().enumerate() {
        let color = COLORS[i % COLORS.len()];
        // Chain the cells into polylines (cells are [u, v] edges).
        for cell in &c.map.domain.cells {
            let a = &c.map.images[cell[0]];
            let b = &c.map.images[cell[1]];
            out.push_str(&format!(
                "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{}\" stroke-width=\"8\"/>\n",
                px(&a.coords[0]),
                px(&a.coords[1]),
                px(&b.coords[0]),
                px(&b.coords[1]),
                color
            ));
        }
    }
    for i in 0..scene.components.len() {
        for j in i + 1..scene.components.len() {
            if let Ok(crossings) =
                planar_crossings(&scene.components[i].map, &scene.components[j].map)
            {
                for cr in crossings {
                    out.push_str(&format!(
                        "<circle cx=\"{}\" cy=\"{}\" r=\"14\" fill=\"none\" stroke=\"#333333\" stroke-width=\"4\"/>\n",
                        px(&cr.point.coords[0]),
                        px(&cr.point.coords[1])
                    ));
                }
            }
        }
    }
    out.push_str("</g>\n</svg>\n");
    out
}
