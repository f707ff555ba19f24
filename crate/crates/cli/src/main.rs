//! Command line front end: scene validation, invariant computation, example
//! builders and SVG rendering.
//!
//! Exit codes: 0 success, 2 validation violation, 3 degeneracy unresolved
//! after the documented fallbacks, 4 parse or usage error.

mod report;
mod scene_file;
mod svg;

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand};

use plgauss::constructions as build;
use plgauss::exactgeom::Point;
use plgauss::invariants as inv;
use plgauss::invariants::{InvariantError, InvariantReport};
use plgauss::{Rat, Scalar};

use scene_file::{from_scene, to_scene, LoadedScene, SceneFile};

#[derive(Parser)]
#[command(name = "plgauss", about = "Exact Gauss-type invariants of PL link maps and ornaments")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run a validator against a scene file.
    Validate {
        #[arg(long)]
        scene: PathBuf,
        /// One of: complex, linkmap, ornament, pm0, hexagonal.
        #[arg(long)]
        check: String,
    },
    /// Compute an invariant of a scene file.
    Compute {
        #[arg(long)]
        scene: PathBuf,
        /// One of: lk, mu-breve, mu, mu-star, beta-hat, beta, beta-star.
        #[arg(long)]
        invariant: String,
        /// Exact rational direction "x,y,..." (repeatable).
        #[arg(long = "direction")]
        directions: Vec<String>,
        /// Exact rational apex "x,y,..." (repeatable).
        #[arg(long = "apex")]
        apexes: Vec<String>,
        #[arg(long)]
        seed: Option<u64>,
        /// Algorithm selector: homotopy, degree or rays.
        #[arg(long)]
        algorithm: Option<String>,
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
    /// Emit a builder scene.
    Build {
        /// One of: borromean-rings, borromean-disks, borromean-doodle, hopf,
        /// split, cor33, hex-borromean, random.
        #[arg(long)]
        kind: String,
        #[arg(long)]
        a: Option<String>,
        #[arg(long)]
        b: Option<String>,
        /// Component count for split scenes.
        #[arg(long)]
        n: Option<usize>,
        /// Ambient dimension for split scenes.
        #[arg(long)]
        dim: Option<usize>,
        /// Random scene kind: doodle, pm0 or linkmap4.
        #[arg(long)]
        random_kind: Option<String>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(short = 'o', long)]
        output: PathBuf,
    },
    /// Render a planar scene to SVG.
    Render {
        #[arg(long)]
        scene: PathBuf,
        #[arg(short = 'o', long)]
        output: PathBuf,
    },
}

fn main() {
    std::process::exit(run());
}

const EXIT_OK: i32 = 0;
const EXIT_VIOLATION: i32 = 2;
const EXIT_DEGENERATE: i32 = 3;
const EXIT_PARSE: i32 = 4;

fn run() -> i32 {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Validate { scene, check } => cmd_validate(&scene, &check),
        Cmd::Compute { scene, invariant, directions, apexes, seed, algorithm, output } => {
            cmd_compute(
                &scene,
                &invariant,
                &directions,
                &apexes,
                seed,
                algorithm.as_deref(),
                output.as_deref(),
            )
        }
        Cmd::Build { kind, a, b, n, dim, random_kind, seed, output } => cmd_build(
            &kind,
            a.as_deref(),
            b.as_deref(),
            n,
            dim,
            random_kind.as_deref(),
            seed,
            &output,
        ),
        Cmd::Render { scene, output } => cmd_render(&scene, &output),
    }
}

fn load(path: &Path) -> Result<LoadedScene, i32> {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", path.display());
            return Err(EXIT_PARSE);
        }
    };
    let file: SceneFile = match serde_json::from_str(&text) {
        Ok(f) => f,
        Err(e) => {
            eprintln!("error: cannot parse scene file: {e}");
            return Err(EXIT_PARSE);
        }
    };
    match to_scene(&file) {
        Ok(s) => Ok(s),
        Err(e) => {
            eprintln!("error: {e}");
            Err(EXIT_PARSE)
        }
    }
}

fn emit(path: Option<&Path>, text: &str) -> i32 {
    match path {
        None => {
            println!("{text}");
            EXIT_OK
        }
        Some(p) => match std::fs::write(p, text) {
            Ok(()) => EXIT_OK,
            Err(e) => {
                eprintln!("error: cannot write {}: {e}", p.display());
                EXIT_PARSE
            }
        },
    }
}

fn violation_json(err: &InvariantError<Rat>) -> String {
    let detail = format!("{err}");
    serde_json::to_string_pretty(&serde_json::json!({ "violation": detail })).expect("json")
}

fn cmd_validate(path: &Path, check: &str) -> i32 {
    let loaded = match load(path) {
        Ok(l) => l,
        Err(code) => return code,
    };
    let outcome: Result<(), InvariantError<Rat>> = match check {
        "complex" => {
            for c in &loaded.scene.components {
                let complex_issue = c.map.domain.validate().err().map(|e| e.to_string());
                let map_issue = c.map.validate().err().map(|e| e.to_string());
                if let Some(e) = complex_issue.or(map_issue) {
                    println!(
                        "{}",
                        serde_json::json!({ "violation": format!("component {}: {e}", c.name) })
                    );
                    return EXIT_VIOLATION;
                }
            }
            Ok(())
        }
        "linkmap" => inv::validate_link_map(&loaded.scene),
        "ornament" => inv::validate_ornament(&loaded.scene),
        "pm0" => inv::validate_pm_ne_0(&loaded.scene),
        "hexagonal" => match &loaded.hex_family {
            Some(h) => inv::verify_hexagonal(h),
            None => {
                eprintln!("error: scene file has no hex_family block");
                return EXIT_PARSE;
            }
        },
        other => {
            eprintln!("error: unknown check {other:?}");
            return EXIT_PARSE;
        }
    };
    match outcome {
        Ok(()) => {
            println!("{}", serde_json::json!({ "certificate": check }));
            EXIT_OK
        }
        Err(e @ (InvariantError::Validation(_) | InvariantError::HexViolation { .. })) => {
            println!("{}", violation_json(&e));
            EXIT_VIOLATION
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_PARSE
        }
    }
}

fn parse_points(specs: &[String], dim: usize) -> Result<Vec<Point<Rat>>, i32> {
    let mut out = Vec::with_capacity(specs.len());
    for s in specs {
        let coords: Vec<&str> = s.split(',').collect();
        if coords.len() != dim {
            eprintln!("error: expected {dim} coordinates in {s:?}");
            return Err(EXIT_PARSE);
        }
        let mut pt = Vec::with_capacity(dim);
        for c in coords {
            match Rat::parse_exact(c) {
                Some(r) => pt.push(r),
                None => {
                    eprintln!("error: not an exact rational: {c:?}");
                    return Err(EXIT_PARSE);
                }
            }
        }
        out.push(Point::new(pt));
    }
    Ok(out)
}

fn chunk_triples(points: Vec<Point<Rat>>) -> Vec<[Point<Rat>; 3]> {
    points
        .chunks_exact(3)
        .map(|c| [c[0].clone(), c[1].clone(), c[2].clone()])
        .collect()
}

fn chunk_pairs(points: Vec<Point<Rat>>) -> Vec<(Point<Rat>, Point<Rat>)> {
    points.chunks_exact(2).map(|c| (c[0].clone(), c[1].clone())).collect()
}

fn finish(
    result: Result<InvariantReport<Rat>, InvariantError<Rat>>,
    started: Instant,
    output: Option<&Path>,
) -> i32 {
    match result {
        Ok(report) => {
            let file = report::to_report_file(&report, started.elapsed().as_millis());
            emit(output, &serde_json::to_string_pretty(&file).expect("json"))
        }
        Err(e @ (InvariantError::Validation(_) | InvariantError::HexViolation { .. })) => {
            println!("{}", violation_json(&e));
            EXIT_VIOLATION
        }
        Err(InvariantError::Degenerate(rep)) => {
            eprintln!("error: degenerate after all fallbacks: {rep}");
            EXIT_DEGENERATE
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_PARSE
        }
    }
}

fn cmd_compute(
    path: &Path,
    invariant: &str,
    directions: &[String],
    apexes: &[String],
    _seed: Option<u64>,
    algorithm: Option<&str>,
    output: Option<&Path>,
) -> i32 {
    let loaded = match load(path) {
        Ok(l) => l,
        Err(code) => return code,
    };
    let scene = &loaded.scene;
    let started = Instant::now();
    let result = match invariant {
        "lk" => {
            if scene.components.len() < 2 {
                eprintln!("error: lk needs two components");
                return EXIT_PARSE;
            }
            let dirs = if directions.is_empty() {
                inv::lk_directions::<Rat>()
            } else {
                match parse_points(directions, 3) {
                    Ok(d) => d,
                    Err(code) => return code,
                }
            };
            inv::with_fallbacks(&dirs, |v| {
                inv::linking_number(&scene.components[0].map, &scene.components[1].map, v)
            })
        }
        "mu-breve" => match algorithm.unwrap_or("degree") {
            "degree" => {
                let sets = if directions.is_empty() {
                    inv::mu_breve_direction_sets::<Rat>()
                } else {
                    match parse_points(directions, 2) {
                        Ok(d) => chunk_triples(d),
                        Err(code) => return code,
                    }
                };
                inv::with_fallbacks(&sets, |w| inv::doodle_mu_breve_degree(scene, w))
            }
            "homotopy" => {
                if directions.is_empty() {
                    inv::mu_breve_homotopy_with_fallbacks(scene)
                } else {
                    let sets = match parse_points(directions, 2) {
                        Ok(d) => chunk_triples(d),
                        Err(code) => return code,
                    };
                    inv::with_fallbacks(&sets, |d| inv::doodle_mu_breve_homotopy(scene, d))
                }
            }
            other => {
                eprintln!("error: unknown mu-breve algorithm {other:?}");
                return EXIT_PARSE;
            }
        },
        "mu" => {
            if scene.components.len() != 3 || loaded.spanning_surfaces.len() != 3 {
                eprintln!("error: mu needs 3 components and 3 spanning surfaces");
                return EXIT_PARSE;
            }
            inv::milnor_mu(
                [
                    &scene.components[0].map,
                    &scene.components[1].map,
                    &scene.components[2].map,
                ],
                [
                    &loaded.spanning_surfaces[0],
                    &loaded.spanning_surfaces[1],
                    &loaded.spanning_surfaces[2],
                ],
            )
        }
        "mu-star" => match &loaded.hex_family {
            None => {
                eprintln!("error: mu-star needs a hex_family block");
                return EXIT_PARSE;
            }
            Some(h) => {
                if directions.is_empty() {
                    inv::mu_star_with_fallbacks(h)
                } else {
                    let sets = match parse_points(directions, 3) {
                        Ok(d) => chunk_triples(d),
                        Err(code) => return code,
                    };
                    inv::with_fallbacks(&sets, |w| inv::mu_star(h, w))
                }
            }
        },
        "beta-hat" => match algorithm.unwrap_or("rays") {
            "rays" => {
                let pairs = if directions.is_empty() {
                    inv::beta_direction_pairs::<Rat>()
                } else {
                    match parse_points(directions, 4) {
                        Ok(d) => chunk_pairs(d),
                        Err(code) => return code,
                    }
                };
                inv::with_fallbacks(&pairs, |(u, w)| inv::beta_hat_rays(scene, u, w))
            }
            "homotopy" => {
                let pairs = if apexes.is_empty() {
                    if loaded.apexes.len() >= 2 {
                        vec![(loaded.apexes[0].clone(), loaded.apexes[1].clone())]
                    } else {
                        inv::beta_apex_pairs::<Rat>()
                    }
                } else {
                    match parse_points(apexes, 4) {
                        Ok(d) => chunk_pairs(d),
                        Err(code) => return code,
                    }
                };
                inv::with_fallbacks(&pairs, |(p, m)| inv::beta_hat_homotopy(scene, p, m))
            }
            other => {
                eprintln!("error: unknown beta-hat algorithm {other:?}");
                return EXIT_PARSE;
            }
        },
        "beta" => {
            let list = if apexes.is_empty() {
                if loaded.apexes.is_empty() {
                    inv::beta_single_apexes::<Rat>()
                } else {
                    loaded.apexes.clone()
                }
            } else {
                match parse_points(apexes, 4) {
                    Ok(d) => d,
                    Err(code) => return code,
                }
            };
            inv::with_fallbacks(&list, |apex| inv::beta_parity(scene, apex))
        }
        "beta-star" => {
            let pairs = if directions.is_empty() {
                inv::beta_direction_pairs::<Rat>()
            } else {
                match parse_points(directions, 4) {
                    Ok(d) => chunk_pairs(d),
                    Err(code) => return code,
                }
            };
            inv::with_fallbacks(&pairs, |(u, w)| inv::beta_star(scene, u, w))
        }
        other => {
            eprintln!("error: unknown invariant {other:?}");
            return EXIT_PARSE;
        }
    };
    finish(result, started, output)
}

fn parse_rat_arg(s: Option<&str>, default: Rat) -> Result<Rat, i32> {
    match s {
        None => Ok(default),
        Some(t) => Rat::parse_exact(t).ok_or_else(|| {
            eprintln!("error: not an exact rational: {t:?}");
            EXIT_PARSE
        }),
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_build(
    kind: &str,
    a: Option<&str>,
    b: Option<&str>,
    n: Option<usize>,
    dim: Option<usize>,
    random_kind: Option<&str>,
    seed: Option<u64>,
    output: &Path,
) -> i32 {
    macro_rules! try_build {
        ($e:expr) => {
            match $e {
                Ok(v) => v,
                Err(e) => {
                    eprintln!("error: {e}");
                    return EXIT_PARSE;
                }
            }
        };
    }
    let file = match kind {
        "borromean-rings" => {
            let a = match parse_rat_arg(a, Rat::from_int(2)) {
                Ok(v) => v,
                Err(c) => return c,
            };
            let b = match parse_rat_arg(b, Rat::from_int(1)) {
                Ok(v) => v,
                Err(c) => return c,
            };
            let scene = try_build!(build::build_borromean_rings(&a, &b));
            from_scene(&scene, &[], &[], None)
        }
        "borromean-disks" => {
            let a = match parse_rat_arg(a, Rat::from_int(2)) {
                Ok(v) => v,
                Err(c) => return c,
            };
            let b = match parse_rat_arg(b, Rat::from_int(1)) {
                Ok(v) => v,
                Err(c) => return c,
            };
            let rings = try_build!(build::build_borromean_rings(&a, &b));
            let disks = try_build!(build::build_borromean_disks(&a, &b));
            from_scene(&rings, &disks, &[], None)
        }
        "borromean-doodle" => from_scene(&build::build_borromean_doodle(), &[], &[], None),
        "hopf" => from_scene(&build::build_hopf_link(), &[], &[], None),
        "split" => {
            let scene = try_build!(build::build_split(n.unwrap_or(2), dim.unwrap_or(3)));
            from_scene(&scene, &[], &[], None)
        }
        "cor33" => from_scene(&build::build_cor33_linkmap(), &[], &[], None),
        "hex-borromean" => {
            let a = match parse_rat_arg(a, Rat::from_ratio(1, 4)) {
                Ok(v) => v,
                Err(c) => return c,
            };
            let b = match parse_rat_arg(b, Rat::from_ratio(1, 16)) {
                Ok(v) => v,
                Err(c) => return c,
            };
            let family = try_build!(build::build_borromean_hexagonal_family(&a, &b));
            from_scene(&family.scene.clone(), &[], &[], Some(&family))
        }
        "random" => {
            let rk = match random_kind.unwrap_or("doodle") {
                "doodle" => build::RandomKind::Doodle,
                "pm0" => build::RandomKind::PmNe0Triple,
                "linkmap4" => build::RandomKind::LinkMapR4,
                other => {
                    eprintln!("error: unknown random kind {other:?}");
                    return EXIT_PARSE;
                }
            };
            from_scene(&build::random_scene(rk, seed.unwrap_or(0)), &[], &[], None)
        }
        other => {
            eprintln!("error: unknown build kind {other:?}");
            return EXIT_PARSE;
        }
    };
    emit(Some(output), &serde_json::to_string_pretty(&file).expect("json"))
}

fn cmd_render(path: &Path, output: &Path) -> i32 {
    let loaded = match load(path) {
        Ok(l) => l,
        Err(code) => return code,
    };
    if loaded.scene.ambient_dim != 2 {
        println!(
            "{}",
            serde_json::json!({ "violation": "render needs a planar scene (ambient_dim = 2)" })
        );
        return EXIT_VIOLATION;
    }
    emit(Some(output), &svg::render(&loaded.scene))
}
