//! Workloads shared by the benchmarks under `benches/`.

use posetcalc_core::{random_graded_poset, Poset};

/// The Boolean lattice of subsets of `{1, …, n}`, elements named by their
/// bitmask.
pub fn boolean_lattice(n: usize) -> Poset {
    let names: Vec<String> = (0..1u32 << n).map(|s| s.to_string()).collect();
    let mut covers = Vec::new();
    for s in 0..1usize << n {
        for i in 0..n {
            if s & (1 << i) == 0 {
                covers.push((s, s | 1 << i));
            }
        }
    }
    Poset::from_index_covers(names, covers).expect("Boolean lattices are graded and bounded")
}

/// A fixed batch of random posets with the given rank and width bounds.
pub fn random_batch(count: u64, max_rank: usize, max_width: usize) -> Vec<Poset> {
    (0..count)
        .map(|seed| random_graded_poset(seed, max_rank, max_width))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boolean_lattice_shape() {
        let b = boolean_lattice(3);
        assert_eq!(b.len(), 8);
        assert_eq!(b.rank(), 3);
        assert_eq!(b.poincare().coeffs(), &[1, 3, 3, 1]);
    }
}
