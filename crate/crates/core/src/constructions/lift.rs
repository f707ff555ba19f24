use num_traits::Zero;

use super::planar::{planar_crossings, CrossingError};
use crate::exactgeom::{product_triangulation, Complex, ComplexKind, PLMap, Point};
use crate::invariants::{Component, Role, Scene};
use crate::scalar::{int, rat, Rat};

/// Overpass lift of a planar three-component arrangement into 3-space:
/// component `i` is lifted to overpass component `i+1` (cyclically) wherever
/// they cross. Participating edges are subdivided at the crossing parameter
/// plus/minus a small rational offset; the overpassing strand's crossing
/// vertex gets height one, everything else stays at height zero.
/// Self-crossings of a single component are left flat.
pub fn lift_doodle(doodle: &Scene<Rat>) -> Result<Scene<Rat>, CrossingError> {
    assert_eq!(doodle.ambient_dim, 2);
    assert_eq!(doodle.components.len(), 3);

    // Crossing events per component: (cell, parameter, lifted?).
    let mut events: Vec<Vec<(usize, Rat, bool)>> = vec![Vec::new(); 3];
    for i in 0..3usize {
        let j = (i + 1) % 3;
        let crossings = planar_crossings(&doodle.components[i].map, &doodle.components[j].map)?;
        for c in crossings {
            events[i].push((c.cell_a, c.s.clone(), true));
            events[j].push((c.cell_b, c.t.clone(), false));
        }
    }

    let mut components = Vec::with_capacity(3);
    for (i, comp) in doodle.components.iter().enumerate() {
        components.push(Component {
            name: comp.name.clone(),
            role: Role::LinkComponent,
            map: lift_component(&comp.map, &events[i]),
        });
    }
    Ok(Scene::new(3, components))
}

fn lift_component(map: &PLMap<Rat>, events: &[(usize, Rat, bool)]) -> PLMap<Rat> {
    // Group events per cell and sort by parameter.
    let mut per_cell: Vec<Vec<(Rat, bool)>> = vec![Vec::new(); map.domain.cells.len()];
    for (cell, s, lifted) in events {
        per_cell[*cell].push((s.clone(), *lifted));
    }
    for list in per_cell.iter_mut() {
        list.sort_by(|a, b| a.0.cmp(&b.0));
    }

    let mut images: Vec<Point<Rat>> =
        map.images.iter().map(|p| p.extended(&[int(0)])).collect();
    let mut cells: Vec<Vec<usize>> = Vec::new();

    for (ci, cell) in map.domain.cells.iter().enumerate() {
        let list = &per_cell[ci];
        if list.is_empty() {
            cells.push(cell.clone());
            continue;
        }
        // Offset: a quarter of the smallest gap between events and the ends.
        let mut eps = list[0].0.clone();
        let end_gap = int(1) - list.last().expect("nonempty").0.clone();
        if end_gap < eps {
            eps = end_gap;
        }
        for w in list.windows(2) {
            let gap = w[1].0.clone() - w[0].0.clone();
            if gap < eps {
                eps = gap;
            }
        }
        eps = eps * rat(1, 4);
        assert!(eps.is_positive(), "coincident crossing parameters on one edge");

        let a = map.images[cell[0]].clone();
        let b = map.images[cell[1]].clone();
        let mut chain = vec![cell[0]];
        for (s, lifted) in list {
            for (param, height) in [
                (s.clone() - eps.clone(), int(0)),
                (s.clone(), if *lifted { int(1) } else { int(0) }),
                (s.clone() + eps.clone(), int(0)),
            ] {
                let planar = a.lerp(&b, &param);
                images.push(planar.extended(&[height]));
                chain.push(images.len() - 1);
            }
        }
        chain.push(cell[1]);
        for pair in chain.windows(2) {
            cells.push(vec![pair[0], pair[1]]);
        }
    }
    let domain = Complex::new(images.len(), 1, cells, map.domain.kind);
    PLMap::new(domain, 3, images)
}

use num_traits::Signed;

/// Spanning surfaces for a lifted arrangement: each component's track first
/// rises vertically above everything, then is capped by a cone. The vertical
/// phase never meets the cyclically next component because the overpass rule
/// puts the rising strand on top exactly at their common points.
pub fn lift_spanning_system(lifted: &Scene<Rat>, apex_jitter: u64) -> Vec<PLMap<Rat>> {
    assert_eq!(lifted.ambient_dim, 3);
    let rise = int(3);
    lifted
        .components
        .iter()
        .enumerate()
        .map(|(i, comp)| {
            let curve = &comp.map;
            let seg = crate::exactgeom::shapes::segment();
            let prism = product_triangulation(&curve.domain, &seg);
            let lift_vec = Point::new(vec![int(0), int(0), rise.clone()]);
            let mut images = Vec::with_capacity(prism.vertex_count);
            for v in 0..curve.domain.vertex_count {
                images.push(curve.images[v].clone());
                images.push(curve.images[v].add(&lift_vec));
            }
            // Centroid-ish apex above the lifted curve, jittered per
            // component and per attempt so the count is generic.
            let n = int(curve.domain.vertex_count as i64);
            let mut cx = Rat::zero();
            let mut cy = Rat::zero();
            for p in &curve.images {
                cx = cx + p.coords[0].clone();
                cy = cy + p.coords[1].clone();
            }
            let jitter = rat(1 + apex_jitter as i64, 17 + i as i64);
            let apex = Point::new(vec![
                cx / n.clone() + jitter.clone(),
                cy / n + jitter.clone() * rat(1, 3),
                rise.clone() + int(2) + rat(i as i64 + 1, 7),
            ]);
            build_capped_prism(curve, &prism, images, &apex)
        })
        .collect()
}

/// Glue a cone over the lifted end of the prism and orient the result so its
/// boundary is the original curve with its original orientation.
fn build_capped_prism(
    curve: &PLMap<Rat>,
    prism: &Complex,
    mut images: Vec<Point<Rat>>,
    apex: &Point<Rat>,
) -> PLMap<Rat> {
    let apex_idx = prism.vertex_count;
    images.push(apex.clone());
    let mut cells = prism.cells.clone();
    // The prism boundary splits into the t=0 copy (even vertex indices) and
    // the t=1 copy (odd). Cone the t=1 cells reversed so they cancel.
    let boundary = prism.boundary();
    for cell in &boundary.cells {
        if cell.iter().all(|v| v % 2 == 1) {
            cells.push(vec![apex_idx, cell[1], cell[0]]);
        }
    }
    let domain = Complex::new(
        prism.vertex_count + 1,
        2,
        cells,
        ComplexKind::PseudomanifoldWithBoundary,
    );
    let surface = PLMap::new(domain, 3, images);
    // Orient the whole surface so its boundary matches the curve exactly.
    let bd = surface.domain.boundary();
    if bd.same_oriented_cells_under(&curve.domain, |v| v / 2) {
        return surface;
    }
    let flipped = PLMap::new(
        surface.domain.orientation_reversed(),
        3,
        surface.images.clone(),
    );
    debug_assert!(flipped
        .domain
        .boundary()
        .same_oriented_cells_under(&curve.domain, |v| v / 2));
    flipped
}
