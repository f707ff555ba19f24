use crate::exactgeom::{PLMap, Point};
use crate::scalar::Scalar;

/// Denominator of every generated offset; keeps perturbed coordinates small.
const GRID: i64 = 64;

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Deterministic pseudo-random rational offsets with `|offset| <= magnitude`
/// and bounded denominators, applied to every vertex image. The same
/// `(seed, magnitude, map)` always yields the identical output.
pub fn perturb<S: Scalar>(map: &PLMap<S>, magnitude: &S, seed: u64) -> PLMap<S> {
    assert!(!magnitude.is_negative(), "magnitude must be nonnegative");
    if magnitude.is_zero() {
        return map.clone();
    }
    let mut state = seed ^ 0x51ed_2701_8c1a_5f6bu64;
    let images = map
        .images
        .iter()
        .map(|p| {
            let coords = p
                .coords
                .iter()
                .map(|c| {
                    let r = splitmix64(&mut state);
                    // Uniform numerator in [-GRID, GRID].
                    let num = (r % (2 * GRID as u64 + 1)) as i64 - GRID;
                    c.clone() + magnitude.clone() * S::from_ratio(num, GRID)
                })
                .collect();
            Point::new(coords)
        })
        .collect();
    PLMap::new(map.domain.clone(), map.ambient_dim, images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactgeom::shapes;
    use crate::scalar::{int, rat, Rat};

    fn map() -> PLMap<Rat> {
        PLMap::new(
            shapes::cycle(3),
            2,
            vec![
                Point::new(vec![int(0), int(0)]),
                Point::new(vec![int(1), int(0)]),
                Point::new(vec![int(0), int(1)]),
            ],
        )
    }

    #[test]
    fn zero_magnitude_is_identity() {
        let m = map();
        assert_eq!(perturb(&m, &int(0), 7), m);
    }

    #[test]
    fn deterministic_and_bounded() {
        let m = map();
        let a = perturb(&m, &rat(1, 10), 42);
        let b = perturb(&m, &rat(1, 10), 42);
        assert_eq!(a, b);
        let c = perturb(&m, &rat(1, 10), 43);
        assert_ne!(a, c);
        for (orig, moved) in m.images.iter().zip(&a.images) {
            for (o, p) in orig.coords.iter().zip(&moved.coords) {
                let diff = if p > o { p.clone() - o.clone() } else { o.clone() - p.clone() };
                assert!(diff <= rat(1, 10));
            }
        }
    }
}
