// Temporary exploration harness (removed before release).
use plgauss::coincidence::perturb;
use plgauss::constructions::*;
use plgauss::invariants::*;
use plgauss::{rat, Rat};

#[test]
#[ignore]
fn probe_beta_parity_welldefined() {
    let cor = build_cor33_linkmap();
    let apex = &beta_single_apexes::<Rat>()[0];

    // Same scene, differently perturbed first component (same class when the
    // wiggle is small and disjointness is preserved).
    for seed in [7u64, 77, 777] {
        let star = perturb(&cor.components[0].map, &rat(1, 400), seed);
        let scene = Scene::new(
            4,
            vec![
                Component { name: "star".into(), role: Role::LinkComponent, map: star },
                Component {
                    name: "zero".into(),
                    role: Role::LinkComponent,
                    map: cor.components[1].map.clone(),
                },
            ],
        );
        match beta_parity(&scene, apex) {
            Ok(r) => println!("wiggle {seed}: beta = {} witnesses {}", r.value, r.witnesses.len()),
            Err(e) => println!("wiggle {seed}: {e}"),
        }
    }

    // Witness structure on the unmodified scene.
    let r = beta_parity(&cor, apex).unwrap();
    let mut shared_hist = [0usize; 4];
    for w in &r.witnesses {
        if w.cells[0] > w.cells[1] {
            continue; // unordered representative
        }
        let h = generic_cone_track(&cor.components[0].map, apex, &rat(1, 40), 0x5eed).unwrap();
        let ca = &h.domain.cells[w.cells[0]];
        let cb = &h.domain.cells[w.cells[1]];
        let shared = ca.iter().filter(|v| cb.contains(v)).count();
        shared_hist[shared.min(3)] += 1;
    }
    println!("unordered witness pairs by shared vertex count: {shared_hist:?}");
}
