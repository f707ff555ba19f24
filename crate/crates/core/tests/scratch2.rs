// Temporary exploration harness (removed before release).
use plgauss::constructions::*;
use plgauss::invariants::*;
use plgauss::Rat;

#[test]
#[ignore]
fn probe_beta_parity_stability() {
    let cor = build_cor33_linkmap();
    for (i, apex) in beta_single_apexes::<Rat>().iter().enumerate() {
        match beta_parity(&cor, apex) {
            Ok(r) => println!("apex {i}: beta = {} witnesses {}", r.value, r.witnesses.len()),
            Err(e) => println!("apex {i}: {e}"),
        }
    }
    // Split link map sanity.
    let split = build_split(2, 4).unwrap();
    let r = with_fallbacks(&beta_single_apexes::<Rat>(), |a| beta_parity(&split, a)).unwrap();
    println!("beta(split) = {} witnesses {}", r.value, r.witnesses.len());
    // Random link maps: compare with beta_star.
    for seed in 0..3u64 {
        let g = random_scene(RandomKind::LinkMapR4, seed);
        let b = with_fallbacks(&beta_single_apexes::<Rat>(), |a| beta_parity(&g, a)).unwrap();
        let bs =
            with_fallbacks(&beta_direction_pairs::<Rat>(), |(u, w)| beta_star(&g, u, w)).unwrap();
        println!("seed {seed}: beta = {} beta* = {}", b.value, bs.value);
    }
}
