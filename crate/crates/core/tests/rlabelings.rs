use std::collections::HashMap;

use posetcalc_core::{
    chain_monomial, ex_ab_index, expsi_via_rlabeling, fixtures, is_r_labeling, is_tie_free,
    parse_poset, random_graded_poset, EdgeLabeling, ExPsiMethod, Poset, RankSet,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn labeling_from(p: &Poset, labels: impl IntoIterator<Item = i64>) -> EdgeLabeling {
    let map: HashMap<(usize, usize), i64> = p.covers().iter().copied().zip(labels).collect();
    EdgeLabeling::new(p, map).unwrap()
}

#[test]
fn random_labelings_that_pass_reproduce_expsi() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut accepted = 0;
    for seed in 0..300u64 {
        let p = random_graded_poset(seed, 4, 3);
        let ex = ex_ab_index(&p, ExPsiMethod::Omega).unwrap();
        for _ in 0..40 {
            let lab = labeling_from(&p, (0..p.covers().len()).map(|_| rng.random_range(1..=3)));
            if is_r_labeling(&p, &lab).unwrap().is_valid() && is_tie_free(&p, &lab) {
                accepted += 1;
                assert_eq!(expsi_via_rlabeling(&p, &lab).unwrap(), ex, "seed {seed}");
            }
        }
    }
    assert!(accepted > 50, "only {accepted} labelings passed");
}

#[test]
fn q_rejects_every_small_labeling() {
    let q = parse_poset(fixtures::Q).unwrap().poset;
    let edges = q.covers().len();
    for code in 0..3i64.pow(edges as u32) {
        let labels = (0..edges).map(|i| code / 3i64.pow(i as u32) % 3);
        let lab = labeling_from(&q, labels);
        assert!(!is_r_labeling(&q, &lab).unwrap().is_valid());
    }
}

#[test]
fn empty_sign_set_gives_descent_word() {
    for seed in 0..60u64 {
        let p = random_graded_poset(seed, 4, 3);
        let lab = labeling_from(&p, (0..p.covers().len() as i64).map(|i| (i * 7) % 5));
        for m in p.maximal_chains() {
            let seq: Vec<i64> = m
                .elements()
                .windows(2)
                .map(|w| lab.get(w[0], w[1]).unwrap())
                .collect();
            let descents: RankSet = (1..seq.len()).filter(|&i| seq[i - 1] > seq[i]).collect();
            let word = chain_monomial(&p, &lab, &m, RankSet::EMPTY).unwrap();
            assert_eq!(word.b_positions(), descents);
        }
    }
}
