//! Cross-path identity checks on a single poset.

use std::fmt;

use crate::abindex::{
    ab_index, ab_index_tilde, ex_ab_index, ex_ab_index_tilde, expsi_via_beta_e, flag_alpha,
    flag_beta, ExPsiMethod, ExPsiTildeMethod, PsiMethod,
};
use crate::chow::{canonical_decomposition_check, chow, gamma_expansion};
use crate::poly::{TPoly, YPoly};
use crate::poset::Poset;
use crate::rlabeling::{expsi_via_rlabeling, is_r_labeling, is_tie_free, EdgeLabeling};

/// `(-y)^n·χ(-1/y)` with denominators cleared.
pub fn poincare_from_char_poly(chi: &TPoly, n: usize) -> YPoly {
    let mut coeffs = vec![0; n + 1];
    for (j, &c) in chi.coeffs().iter().enumerate() {
        coeffs[n - j] = if (n + j).is_multiple_of(2) { c } else { -c };
    }
    YPoly::from_coeffs(coeffs)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub checks: Vec<CheckOutcome>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn record(&mut self, name: &'static str, result: Result<bool, String>) {
        let (passed, detail) = match result {
            Ok(ok) => (ok, None),
            Err(e) => (false, Some(e)),
        };
        self.checks.push(CheckOutcome {
            name,
            passed,
            detail,
        });
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.passed { "ok  " } else { "FAIL" };
            match &c.detail {
                Some(d) => writeln!(f, "{status} {}: {d}", c.name)?,
                None => writeln!(f, "{status} {}", c.name)?,
            }
        }
        Ok(())
    }
}

fn all_equal<T: PartialEq>(items: &[T]) -> bool {
    items.windows(2).all(|w| w[0] == w[1])
}

/// Run every identity that applies to `p`. Checks that need rank at least 1
/// are skipped on the trivial poset; the R-labeling check runs only when a
/// labeling is supplied, has positive labels, is tie-free, and passes
/// verification.
pub fn verify_poset(p: &Poset, labeling: Option<&EdgeLabeling>) -> VerifyReport {
    let mut report = VerifyReport::default();
    let n = p.rank();
    let err = |e: &dyn fmt::Display| e.to_string();

    report.record(
        "incidence sum Σ_w (-y)^rk(w) Poin_[w,1̂] = 1",
        Ok(p.upper_poincare_sum() == YPoly::one()),
    );
    report.record(
        "Poin_P(y) = (-y)^n χ_P(-1/y)",
        Ok(poincare_from_char_poly(&p.char_poly(), n) == p.poincare()),
    );
    report.record(
        "flag f-vector sums to the number of chains",
        flag_alpha(p)
            .map_err(|e| err(&e))
            .map(|a| a.iter().map(|(_, v)| v).sum::<i64>() == p.chains_to_top().count() as i64),
    );
    report.record(
        "flag h-vector vanishes on sets containing 0",
        flag_beta(p)
            .map_err(|e| err(&e))
            .map(|b| b.iter().filter(|(t, _)| t.contains(0)).all(|(_, v)| v == 0)),
    );

    let methods = |m: &[PsiMethod]| {
        m.iter()
            .map(|&m| ab_index(p, m))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| err(&e))
    };
    let recursive_ok = n >= 1;
    let psi_methods: Vec<PsiMethod> = PsiMethod::ALL
        .iter()
        .copied()
        .filter(|&m| recursive_ok || m != PsiMethod::Recursive)
        .collect();
    let psi = methods(&psi_methods);
    report.record(
        "Ψ: chains = beta = recursive",
        psi.as_ref().map(|v| all_equal(v)).map_err(Clone::clone),
    );

    let ex_methods: Vec<ExPsiMethod> = ExPsiMethod::ALL
        .iter()
        .copied()
        .filter(|&m| recursive_ok || m != ExPsiMethod::Recursive)
        .collect();
    let ex = ex_methods
        .iter()
        .map(|&m| ex_ab_index(p, m))
        .chain(std::iter::once(expsi_via_beta_e(p)))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| err(&e));
    report.record(
        "exΨ: chains = omega = recursive = beta = beta/E",
        ex.as_ref().map(|v| all_equal(v)).map_err(Clone::clone),
    );
    report.record(
        "exΨ at y = 0 equals Ψ",
        match (&ex, &psi) {
            (Ok(ex), Ok(psi)) => Ok(ex[0].specialize_y(0) == psi[0]),
            (Err(e), _) | (_, Err(e)) => Err(e.clone()),
        },
    );

    if n >= 1 {
        let one_plus_y = YPoly::from_coeffs(vec![1, 1]);
        let tilde = (|| -> Result<bool, String> {
            let paths = ExPsiTildeMethod::ALL
                .iter()
                .map(|&m| ex_ab_index_tilde(p, m))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| err(&e))?;
            let from_ex = ex.as_ref().map_err(Clone::clone)?[0]
                .iota()
                .map_err(|e| err(&e))?;
            let psi_tilde = ab_index_tilde(p, PsiMethod::Chains).map_err(|e| err(&e))?;
            let via_omega = psi_tilde.omega().scale(&one_plus_y);
            Ok(all_equal(&paths) && paths[0] == from_ex && paths[0] == via_omega)
        })();
        report.record(
            "exΨ~: chains = omega = recursive = ι(exΨ) = (1+y)·ω(Ψ~)",
            tilde,
        );

        let tilde_at_zero = (|| -> Result<bool, String> {
            let ex_tilde = ex_ab_index_tilde(p, ExPsiTildeMethod::Chains).map_err(|e| err(&e))?;
            let psi_tilde = ab_index_tilde(p, PsiMethod::Chains).map_err(|e| err(&e))?;
            Ok(ex_tilde.specialize_y(0) == psi_tilde)
        })();
        report.record("exΨ~ at y = 0 equals Ψ~", tilde_at_zero);

        report.record(
            "ι∘ω = (1+y)·ω∘ι on Ψ",
            psi.as_ref().map_err(Clone::clone).and_then(|psi| {
                let lhs = psi[0].omega().iota().map_err(|e| err(&e))?;
                let rhs = psi[0]
                    .iota()
                    .map_err(|e| err(&e))?
                    .omega()
                    .scale(&one_plus_y);
                Ok(lhs == rhs)
            }),
        );
    }

    for augmented in [true, false] {
        if !augmented && n == 0 {
            continue;
        }
        let name = if augmented {
            "γ-expansion reproduces H^aug"
        } else {
            "γ-expansion reproduces H"
        };
        let check = gamma_expansion(p, augmented)
            .and_then(|g| Ok(g.expand() == chow(p, augmented)?))
            .map_err(|e| err(&e));
        report.record(name, check);
    }

    if n >= 1 {
        report.record(
            "canonical decompositions of H^aug and H",
            canonical_decomposition_check(p)
                .map(|r| r.holds())
                .map_err(|e| err(&e)),
        );
    }

    if let Some(lab) = labeling {
        let positive = p
            .covers()
            .iter()
            .all(|&(u, v)| lab.get(u, v).is_some_and(|l| l > 0));
        if positive && is_tie_free(p, lab) && is_r_labeling(p, lab).is_ok_and(|c| c.is_valid()) {
            let check = (|| -> Result<bool, String> {
                let lhs = expsi_via_rlabeling(p, lab).map_err(|e| err(&e))?;
                Ok(&lhs == ex.as_ref().map_err(Clone::clone)?.first().ok_or("no exΨ")?)
            })();
            report.record("R-labeling expansion equals exΨ", check);
        }
    }

    report
}
