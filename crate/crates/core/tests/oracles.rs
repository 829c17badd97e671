#![allow(clippy::needless_range_loop)]

// Brute-force recomputation of the chain sums from nothing but the order
// relation and ranks, compared against the library's fast paths.

use posetcalc_core::{
    ab_index, ex_ab_index, flag_alpha, flag_beta, random_graded_poset, wt_set, ExPsiMethod, NcPoly,
    Poset, PsiMethod, RankSet, YPoly,
};

fn mobius_table(p: &Poset) -> Vec<Vec<i64>> {
    let n = p.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| p.rank_of(v));
    let mut mu = vec![vec![0i64; n]; n];
    for u in 0..n {
        for &w in &order {
            if w == u {
                mu[u][w] = 1;
            } else if p.leq(u, w) {
                mu[u][w] = -(0..n)
                    .filter(|&v| p.leq(u, v) && p.leq(v, w) && v != w)
                    .map(|v| mu[u][v])
                    .sum::<i64>();
            }
        }
    }
    mu
}

fn interval_poincare(p: &Poset, mu: &[Vec<i64>], u: usize, w: usize) -> YPoly {
    (0..p.len())
        .filter(|&v| p.leq(u, v) && p.leq(v, w))
        .map(|v| YPoly::neg_var_pow(p.rank_of(v) - p.rank_of(u)).scale(mu[u][v]))
        .sum()
}

/// Every chain ending in the top element, as sorted element lists, found by
/// testing all subsets of the other elements for pairwise comparability.
fn all_chains(p: &Poset) -> Vec<Vec<usize>> {
    let others: Vec<usize> = (0..p.len()).filter(|&v| v != p.top()).collect();
    assert!(others.len() < 20, "too many elements for brute force");
    let mut out = Vec::new();
    for mask in 0u32..(1 << others.len()) {
        let mut chain: Vec<usize> = others
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &v)| v)
            .collect();
        chain.sort_by_key(|&v| p.rank_of(v));
        if chain.windows(2).all(|w| p.lt(w[0], w[1])) {
            chain.push(p.top());
            out.push(chain);
        }
    }
    out
}

fn rank_set(p: &Poset, chain: &[usize]) -> RankSet {
    chain[..chain.len() - 1]
        .iter()
        .map(|&v| p.rank_of(v))
        .collect()
}

fn brute_expsi(p: &Poset) -> NcPoly {
    let mu = mobius_table(p);
    let n = p.rank();
    all_chains(p)
        .iter()
        .map(|c| {
            let poin = c.windows(2).fold(YPoly::one(), |acc, w| {
                &acc * &interval_poincare(p, &mu, w[0], w[1])
            });
            wt_set(rank_set(p, c), n).unwrap().scale(&poin)
        })
        .fold(NcPoly::zero(n), |acc, t| &acc + &t)
}

fn brute_psi(p: &Poset) -> NcPoly {
    let n = p.rank();
    all_chains(p)
        .iter()
        .map(|c| wt_set(rank_set(p, c), n).unwrap())
        .fold(NcPoly::zero(n), |acc, t| &acc + &t)
}

fn suite() -> impl Iterator<Item = Poset> {
    (0..80u64).map(|seed| random_graded_poset(seed, 4, 3))
}

#[test]
fn poincare_matches_brute_mobius() {
    for p in suite() {
        let mu = mobius_table(&p);
        assert_eq!(
            interval_poincare(&p, &mu, p.bottom(), p.top()),
            p.poincare()
        );
        for u in 0..p.len() {
            for w in 0..p.len() {
                if p.leq(u, w) {
                    assert_eq!(p.mobius(u, w).unwrap(), mu[u][w]);
                }
            }
        }
    }
}

#[test]
fn expsi_matches_brute_chain_sum() {
    for p in suite() {
        let oracle = brute_expsi(&p);
        for &m in ExPsiMethod::ALL {
            assert_eq!(ex_ab_index(&p, m).unwrap(), oracle, "method {m}");
        }
    }
}

#[test]
fn psi_matches_brute_chain_sum() {
    for p in suite() {
        let oracle = brute_psi(&p);
        for &m in PsiMethod::ALL {
            assert_eq!(ab_index(&p, m).unwrap(), oracle, "method {m}");
        }
    }
}

#[test]
fn flag_vectors_match_brute_counts() {
    for p in suite() {
        let n = p.rank();
        let chains = all_chains(&p);
        let alpha = flag_alpha(&p).unwrap();
        let beta = flag_beta(&p).unwrap();
        for s in RankSet::range(0, n - 1).subsets() {
            let count = chains.iter().filter(|c| rank_set(&p, c) == s).count() as i64;
            assert_eq!(alpha.get(s), count, "alpha({s})");
            let b: i64 = s
                .subsets()
                .map(|t| {
                    let sign = if (s.len() - t.len()) % 2 == 0 { 1 } else { -1 };
                    sign * chains.iter().filter(|c| rank_set(&p, c) == t).count() as i64
                })
                .sum();
            assert_eq!(beta.get(s), b, "beta({s})");
        }
        assert_eq!(
            alpha.iter().map(|(_, v)| v).sum::<i64>(),
            chains.len() as i64
        );
    }
}
