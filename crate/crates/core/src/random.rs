//! Seeded generator of random graded bounded posets, used as test input.

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::poset::Poset;
use crate::word::MAX_WORD_LEN;

/// A random graded bounded poset, fully determined by `seed`.
///
/// The rank is drawn from `1..=max_rank`, every inner rank level gets between
/// 1 and `max_width` elements, and each pair of elements on consecutive
/// levels is a cover with probability 1/2. Elements left without a lower or
/// upper cover are then joined to a random neighbour, so the result always
/// validates. Arguments below 1 are treated as 1.
pub fn random_graded_poset(seed: u64, max_rank: usize, max_width: usize) -> Poset {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let max_rank = max_rank.clamp(1, MAX_WORD_LEN);
    let max_width = max_width.max(1);
    let n = rng.random_range(1..=max_rank);

    let mut names = Vec::new();
    let mut levels: Vec<Vec<usize>> = Vec::with_capacity(n + 1);
    for r in 0..=n {
        let width = if r == 0 || r == n {
            1
        } else {
            rng.random_range(1..=max_width)
        };
        let level = (0..width)
            .map(|i| {
                names.push(match r {
                    0 => "bot".to_string(),
                    _ if r == n => "top".to_string(),
                    _ => format!("x{r}_{i}"),
                });
                names.len() - 1
            })
            .collect();
        levels.push(level);
    }

    let mut covers = Vec::new();
    for pair in levels.windows(2) {
        let (below, above) = (&pair[0], &pair[1]);
        let mut has_up = vec![false; below.len()];
        let mut has_down = vec![false; above.len()];
        for (i, &u) in below.iter().enumerate() {
            for (j, &v) in above.iter().enumerate() {
                if rng.random_bool(0.5) {
                    covers.push((u, v));
                    has_up[i] = true;
                    has_down[j] = true;
                }
            }
        }
        for (i, &u) in below.iter().enumerate() {
            if !has_up[i] {
                let j = rng.random_range(0..above.len());
                covers.push((u, above[j]));
                has_down[j] = true;
            }
        }
        for (j, &v) in above.iter().enumerate() {
            if !has_down[j] {
                covers.push((*below.choose(&mut rng).unwrap(), v));
            }
        }
    }

    Poset::from_index_covers(names, covers).expect("levelwise construction is always valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_one_width_one_is_the_two_chain() {
        for seed in 0..20 {
            let p = random_graded_poset(seed, 1, 1);
            assert_eq!(p.rank(), 1);
            assert_eq!(p.len(), 2);
        }
    }

    #[test]
    fn deterministic_in_seed() {
        for seed in 0..20 {
            assert_eq!(
                random_graded_poset(seed, 4, 4),
                random_graded_poset(seed, 4, 4)
            );
        }
    }

    #[test]
    fn respects_bounds() {
        for seed in 0..200 {
            let p = random_graded_poset(seed, 3, 4);
            assert!((1..=3).contains(&p.rank()));
            for r in 1..p.rank() {
                assert!((1..=4).contains(&p.elements_of_rank(r).len()));
            }
        }
    }
}
