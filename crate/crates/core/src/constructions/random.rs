use super::basic::{octahedron_sphere_r4, pt};
use crate::coincidence::perturb;
use crate::exactgeom::{shapes, PLMap, Point};
use crate::invariants::{
    validate_link_map, validate_ornament, validate_pm_ne_0, Component, Role, Scene,
};
use crate::scalar::{int, rat, Rat};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RandomKind {
    /// Three planar loops with no common triple point.
    Doodle,
    /// A +/-/0 triple of 2-spheres in 4-space.
    PmNe0Triple,
    /// A two-component link map of 2-spheres in 4-space.
    LinkMapR4,
}

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn pick(state: &mut u64, lo: i64, hi: i64) -> i64 {
    lo + (splitmix64(state) % ((hi - lo + 1) as u64)) as i64
}

/// Seeded rational-coordinate scenes, certified exactly before emission; a
/// candidate failing its validator is skipped deterministically in favor of
/// the next derived attempt. Same seed, same scene.
pub fn random_scene(kind: RandomKind, seed: u64) -> Scene<Rat> {
    for attempt in 0u64..64 {
        let mut state = seed
            .wrapping_mul(0x9e37_79b9_7f4a_7c15)
            .wrapping_add(attempt)
            .wrapping_add(match kind {
                RandomKind::Doodle => 1,
                RandomKind::PmNe0Triple => 2,
                RandomKind::LinkMapR4 => 3,
            });
        let scene = match kind {
            RandomKind::Doodle => candidate_doodle(&mut state),
            RandomKind::PmNe0Triple => candidate_pm(&mut state),
            RandomKind::LinkMapR4 => candidate_linkmap(&mut state),
        };
        let ok = match kind {
            RandomKind::Doodle => validate_ornament(&scene).is_ok(),
            RandomKind::PmNe0Triple => validate_pm_ne_0(&scene).is_ok(),
            RandomKind::LinkMapR4 => validate_link_map(&scene).is_ok(),
        };
        if ok {
            return scene;
        }
    }
    unreachable!("the candidate generators certify within a bounded number of attempts");
}

fn hex_loop(state: &mut u64, cx: Rat, cy: Rat, scale_num: i64) -> PLMap<Rat> {
    let s = rat(scale_num, 2);
    let shape: [(i64, i64); 6] = [(2, 0), (1, 2), (-1, 2), (-2, 0), (-1, -2), (1, -2)];
    let images = shape
        .iter()
        .map(|(x, y)| {
            let jx = rat(pick(state, -2, 2), 16);
            let jy = rat(pick(state, -2, 2), 16);
            pt(&[
                cx.clone() + s.clone() * int(*x) + jx,
                cy.clone() + s.clone() * int(*y) + jy,
            ])
        })
        .collect();
    PLMap::new(shapes::cycle(6), 2, images)
}

fn candidate_doodle(state: &mut u64) -> Scene<Rat> {
    // Jittered three-loop arrangements around a triangle of centers.
    let centers = [
        (int(0) + rat(pick(state, -4, 4), 8), int(0) + rat(pick(state, -4, 4), 8)),
        (int(4) + rat(pick(state, -4, 4), 8), int(0) + rat(pick(state, -4, 4), 8)),
        (int(2) + rat(pick(state, -4, 4), 8), int(3) + rat(pick(state, -4, 4), 8)),
    ];
    let scale = pick(state, 2, 4);
    let components = centers
        .into_iter()
        .enumerate()
        .map(|(i, (cx, cy))| Component {
            name: format!("loop{}", i + 1),
            role: Role::OrnamentComponent,
            map: hex_loop(state, cx, cy, scale),
        })
        .collect();
    Scene::new(2, components)
}

fn candidate_pm(state: &mut u64) -> Scene<Rat> {
    // Component 0 sits near the origin; + and - wander in an annulus around
    // it, possibly intersecting each other.
    let zero = octahedron_sphere_r4(&Point::new(vec![int(0); 4]), &int(1));
    let mut sphere = |tag: u64| {
        let center = Point::new(vec![
            rat(pick(state, -6, 6), 2),
            rat(pick(state, -6, 6), 2),
            rat(pick(state, -6, 6), 2),
            rat(pick(state, 5, 9), 2) * int(if tag == 0 { 1 } else { -1 }),
        ]);
        let radius = rat(pick(state, 2, 5), 2);
        perturb(&octahedron_sphere_r4(&center, &radius), &rat(1, 16), splitmix64(state))
    };
    Scene::new(
        4,
        vec![
            Component { name: "plus".into(), role: Role::LinkComponent, map: sphere(0) },
            Component { name: "minus".into(), role: Role::LinkComponent, map: sphere(1) },
            Component { name: "zero".into(), role: Role::LinkComponent, map: zero },
        ],
    )
}

fn candidate_linkmap(state: &mut u64) -> Scene<Rat> {
    let zero = octahedron_sphere_r4(&Point::new(vec![int(0); 4]), &int(1));
    let center = Point::new(vec![
        rat(pick(state, 6, 12), 2),
        rat(pick(state, -4, 4), 2),
        rat(pick(state, -4, 4), 2),
        rat(pick(state, -4, 4), 2),
    ]);
    let radius = rat(pick(state, 2, 6), 2);
    let star = perturb(&octahedron_sphere_r4(&center, &radius), &rat(1, 16), splitmix64(state));
    Scene::new(
        4,
        vec![
            Component { name: "star".into(), role: Role::LinkComponent, map: star },
            Component { name: "zero".into(), role: Role::LinkComponent, map: zero },
        ],
    )
}

/// Double a two-component link map into a +/-/0 triple: the + and - entries
/// are copies of the first component (the + copy optionally perturbed with a
/// certified seed), component 0 is carried over.
pub fn double_link_map(
    scene: &Scene<Rat>,
    perturb_seed: Option<u64>,
) -> Result<Scene<Rat>, crate::invariants::InvariantError<Rat>> {
    validate_link_map(scene)?;
    assert_eq!(scene.components.len(), 2);
    let star = &scene.components[0].map;
    let zero = &scene.components[1].map;
    let plus = match perturb_seed {
        None => star.clone(),
        Some(seed) => {
            let mut chosen = None;
            for attempt in 0u64..32 {
                let p = perturb(star, &rat(1, 64), seed.wrapping_add(attempt));
                let trial = Scene::new(
                    4,
                    vec![
                        Component {
                            name: "plus".into(),
                            role: Role::LinkComponent,
                            map: p.clone(),
                        },
                        Component {
                            name: "zero".into(),
                            role: Role::LinkComponent,
                            map: zero.clone(),
                        },
                    ],
                );
                if validate_link_map(&trial).is_ok() {
                    chosen = Some(p);
                    break;
                }
            }
            chosen.ok_or_else(|| {
                crate::invariants::InvariantError::BadInput(
                    "perturbed doubling failed disjointness re-certification".into(),
                )
            })?
        }
    };
    Ok(Scene::new(
        4,
        vec![
            Component { name: "plus".into(), role: Role::LinkComponent, map: plus },
            Component { name: "minus".into(), role: Role::LinkComponent, map: star.clone() },
            Component { name: "zero".into(), role: Role::LinkComponent, map: zero.clone() },
        ],
    ))
}
