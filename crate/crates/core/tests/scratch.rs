// Temporary exploration harness (removed before release).
use plgauss::constructions::*;
use plgauss::invariants::*;
use plgauss::{int, rat, Rat};

#[test]
#[ignore]
fn pin_signs_basic() {
    // Linking number of the Hopf builder along z.
    let hopf = build_hopf_link();
    let v = plgauss::exactgeom::Point::new(vec![int(0), int(0), int(1)]);
    let lk = linking_number(&hopf.components[0].map, &hopf.components[1].map, &v).unwrap();
    println!("lk(hopf, z) = {}", lk.value);
    for d in lk_directions::<Rat>().iter().skip(1) {
        let r = linking_number(&hopf.components[0].map, &hopf.components[1].map, d).unwrap();
        println!("lk(hopf, {:?}) = {}", d, r.value);
    }

    // Planar invariant of the three-loop arrangement, both algorithms.
    let doodle = build_borromean_doodle();
    let degree = mu_breve_degree_with_fallbacks(&doodle).unwrap();
    println!("mu_breve_degree(doodle) = {}", degree.value);
    let homotopy = mu_breve_homotopy_with_fallbacks(&doodle).unwrap();
    println!("mu_breve_homotopy(doodle) = {}", homotopy.value);

    // Spanning-disk invariant of the rings.
    let a = int(2);
    let b = int(1);
    let rings = build_borromean_rings(&a, &b).unwrap();
    let disks = build_borromean_disks(&a, &b).unwrap();
    let mu = milnor_mu(
        [&rings.components[0].map, &rings.components[1].map, &rings.components[2].map],
        [&disks[0], &disks[1], &disks[2]],
    )
    .unwrap();
    println!("mu(rings, disks) = {} witnesses {}", mu.value, mu.witnesses.len());
    let alt = build_borromean_disks_alt(&a, &b).unwrap();
    let mu2 = milnor_mu(
        [&rings.components[0].map, &rings.components[1].map, &rings.components[2].map],
        [&alt[0], &alt[1], &alt[2]],
    )
    .unwrap();
    println!("mu(rings, alt disks) = {}", mu2.value);
}

#[test]
#[ignore]
fn pin_signs_lift() {
    let doodle = build_borromean_doodle();
    let lifted = lift_doodle(&doodle).unwrap();
    println!("lift ok; validating link map...");
    validate_link_map(&lifted).unwrap();
    println!("link map ok");
    for i in 0..3 {
        for j in i + 1..3 {
            let lk = with_fallbacks(&lk_directions::<Rat>(), |v| {
                linking_number(&lifted.components[i].map, &lifted.components[j].map, v)
            })
            .unwrap();
            println!("lk(lift {i},{j}) = {}", lk.value);
        }
    }
    for jitter in 0..4u64 {
        let surfaces = lift_spanning_system(&lifted, jitter);
        match milnor_mu(
            [
                &lifted.components[0].map,
                &lifted.components[1].map,
                &lifted.components[2].map,
            ],
            [&surfaces[0], &surfaces[1], &surfaces[2]],
        ) {
            Ok(r) => {
                println!("mu(lift(doodle)) = {} (jitter {jitter})", r.value);
                break;
            }
            Err(e) => println!("jitter {jitter}: {e}"),
        }
    }
}

#[test]
#[ignore]
fn pin_signs_beta() {
    let cor = build_cor33_linkmap();
    let apexes = beta_single_apexes::<Rat>();
    let r = with_fallbacks(&apexes, |apex| beta_parity(&cor, apex)).unwrap();
    println!("beta(cor33) = {} witnesses {}", r.value, r.witnesses.len());
    let dirs = beta_direction_pairs::<Rat>();
    let r = with_fallbacks(&dirs, |(u, w)| beta_star(&cor, u, w)).unwrap();
    println!("beta_star(cor33) = {} witnesses {}", r.value, r.witnesses.len());

    for seed in 0..3u64 {
        let scene = random_scene(RandomKind::PmNe0Triple, seed);
        let rays = with_fallbacks(&dirs, |(u, w)| beta_hat_rays(&scene, u, w)).unwrap();
        let hom =
            with_fallbacks(&beta_apex_pairs::<Rat>(), |(p, m)| beta_hat_homotopy(&scene, p, m))
                .unwrap();
        println!("seed {seed}: beta_hat rays = {} homotopy = {}", rays.value, hom.value);
    }

    // Doubled link map vanishing.
    let doubled = double_link_map(&cor, None).unwrap();
    let r = with_fallbacks(&dirs, |(u, w)| beta_hat_rays(&doubled, u, w)).unwrap();
    println!("beta_hat(double(cor33)) = {}", r.value);
}

#[test]
#[ignore]
fn pin_hex_family() {
    let family = build_borromean_hexagonal_family(&rat(1, 4), &rat(1, 16)).unwrap();
    let mut cells = 0;
    for f in &family.faces {
        cells += f.complex.cells.len();
        println!(
            "face t{}={}: {} vertices, {} triangles",
            f.axis + 1,
            f.level,
            f.params.len(),
            f.complex.cells.len()
        );
    }
    println!("total face triangles {cells}");
    let t0 = std::time::Instant::now();
    match verify_hexagonal(&family) {
        Ok(()) => println!("hexagonal certificate OK in {:?}", t0.elapsed()),
        Err(e) => println!("hexagonality FAILED: {e}"),
    }
}
