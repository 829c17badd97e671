use std::fmt;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use posetcalc_core::document::{
    structured_flags, structured_gamma, structured_ncpoly, structured_poly,
};
use posetcalc_core::{
    ab_index, ab_index_tilde, chain_monomial, chow, ex_ab_index, ex_ab_index_tilde,
    expsi_via_rlabeling, flag_alpha, flag_beta, gamma_expansion, is_r_labeling, is_tie_free,
    parse_poset, signed_labels, verify_poset, DocumentError, EdgeLabeling, ExPsiMethod,
    ExPsiTildeMethod, NcPoly, ParsedPoset, PsiMethod, RLabelingCheck, RankSet,
};
use serde_json::{json, Value};

/// Invariants of finite graded bounded posets.
#[derive(Debug, Parser)]
#[command(name = "posetcalc", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check that the document describes a graded bounded poset.
    Validate(Common),
    /// μ(0̂, w) for every element w.
    Mobius(Common),
    /// Poincaré polynomial.
    Poincare(Common),
    /// Characteristic polynomial.
    Charpoly(Common),
    /// ab-index Ψ (or Ψ~ with --tilde).
    Psi(IndexArgs),
    /// Extended ab-index exΨ (or exΨ~ with --tilde).
    Expsi(IndexArgs),
    /// Flag f-vector α and flag h-vector β.
    Flag(Common),
    /// Chow polynomial (augmented with --augmented).
    Chow(ChowArgs),
    /// γ-expansion of the (augmented) Chow polynomial.
    Gamma(ChowArgs),
    /// Check the document's labels form an R-labeling.
    RlabelCheck(Common),
    /// Expand exΨ over maximal chains using the document's R-labeling.
    RlabelExpand(Common),
    /// Check every cross-path identity on the poset.
    Verify(Common),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Poset document (JSON).
    #[arg(long, short)]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct IndexArgs {
    #[command(flatten)]
    pub common: Common,
    /// Computation route: chains, beta, recursive, or (expsi only) omega.
    #[arg(long)]
    pub method: Option<String>,
    #[arg(long)]
    pub tilde: bool,
}

#[derive(Debug, Args)]
pub struct ChowArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long)]
    pub augmented: bool,
}

#[derive(Debug)]
pub enum Failure {
    InvalidPoset(String),
    Parse(String),
    LabelingRejected {
        message: String,
        output: Option<String>,
    },
    IdentityViolation {
        output: String,
    },
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::InvalidPoset(_) => 1,
            Failure::Parse(_) => 2,
            Failure::LabelingRejected { .. } => 3,
            Failure::IdentityViolation { .. } => 4,
        }
    }

    /// Report to print on stdout even though the command failed.
    pub fn output(&self) -> Option<&str> {
        match self {
            Failure::LabelingRejected { output, .. } => output.as_deref(),
            Failure::IdentityViolation { output } => Some(output),
            _ => None,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::InvalidPoset(m) => write!(f, "invalid poset: {m}"),
            Failure::Parse(m) => write!(f, "{m}"),
            Failure::LabelingRejected { message, .. } => write!(f, "labeling rejected: {message}"),
            Failure::IdentityViolation { .. } => f.write_str("identity violation"),
        }
    }
}

fn invalid(e: impl fmt::Display) -> Failure {
    Failure::InvalidPoset(e.to_string())
}

fn load(common: &Common) -> Result<ParsedPoset, Failure> {
    let text = std::fs::read_to_string(&common.input)
        .map_err(|e| Failure::Parse(format!("cannot read {}: {e}", common.input.display())))?;
    parse_poset(&text).map_err(|e| match e {
        DocumentError::Parse(m) => Failure::Parse(format!("{}: {m}", common.input.display())),
        DocumentError::Poset(p) => invalid(p),
    })
}

fn json_out(v: Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("values always serialize");
    s.push('\n');
    s
}

fn line(s: impl fmt::Display) -> String {
    format!("{s}\n")
}

/// Left-aligned columns separated by two spaces.
fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let all = std::iter::once(header.iter().map(|h| h.to_string()).collect::<Vec<_>>());
    for row in all.chain(rows.iter().cloned()) {
        let mut text = String::new();
        for (i, (cell, w)) in row.iter().zip(&widths).enumerate() {
            if i > 0 {
                text.push_str("  ");
            }
            let pad = w - cell.chars().count();
            text.push_str(cell);
            text.extend(std::iter::repeat_n(' ', pad));
        }
        out.push_str(text.trim_end());
        out.push('\n');
    }
    out
}

fn set_json(s: RankSet) -> Value {
    Value::from(s.iter().collect::<Vec<_>>())
}

fn parse_method<M: std::str::FromStr<Err = String>>(
    method: &Option<String>,
    default: M,
) -> Result<M, Failure> {
    match method {
        None => Ok(default),
        Some(m) => m.parse().map_err(Failure::Parse),
    }
}

pub fn run(cli: &Cli) -> Result<String, Failure> {
    match &cli.command {
        Command::Validate(c) => validate(c),
        Command::Mobius(c) => mobius(c),
        Command::Poincare(c) => {
            let p = load(c)?.poset;
            let poin = p.poincare();
            Ok(match c.format {
                Format::Text => line(&poin),
                Format::Structured => json_out(json!({ "poincare": structured_poly(&poin) })),
            })
        }
        Command::Charpoly(c) => {
            let p = load(c)?.poset;
            let chi = p.char_poly();
            Ok(match c.format {
                Format::Text => line(&chi),
                Format::Structured => json_out(json!({ "charpoly": structured_poly(&chi) })),
            })
        }
        Command::Psi(args) => {
            let p = load(&args.common)?.poset;
            let method = parse_method(&args.method, PsiMethod::default())?;
            let f = if args.tilde {
                ab_index_tilde(&p, method)
            } else {
                ab_index(&p, method)
            }
            .map_err(invalid)?;
            Ok(render_nc(&f, args.common.format))
        }
        Command::Expsi(args) => {
            let p = load(&args.common)?.poset;
            let f = if args.tilde {
                let method = parse_method(&args.method, ExPsiTildeMethod::default())?;
                ex_ab_index_tilde(&p, method)
            } else {
                let method = parse_method(&args.method, ExPsiMethod::default())?;
                ex_ab_index(&p, method)
            }
            .map_err(invalid)?;
            Ok(render_nc(&f, args.common.format))
        }
        Command::Flag(c) => flag(c),
        Command::Chow(args) => {
            let p = load(&args.common)?.poset;
            let h = chow(&p, args.augmented).map_err(invalid)?;
            Ok(match args.common.format {
                Format::Text => line(&h),
                Format::Structured => {
                    json_out(json!({ "augmented": args.augmented, "chow": structured_poly(&h) }))
                }
            })
        }
        Command::Gamma(args) => gamma(args),
        Command::RlabelCheck(c) => rlabel_check(c),
        Command::RlabelExpand(c) => rlabel_expand(c),
        Command::Verify(c) => verify(c),
    }
}

fn render_nc(f: &NcPoly, format: Format) -> String {
    match format {
        Format::Text => line(f),
        Format::Structured => json_out(structured_ncpoly(f)),
    }
}

fn validate(c: &Common) -> Result<String, Failure> {
    let parsed = load(c)?;
    let p = &parsed.poset;
    let labels = parsed.labeling.as_ref().map(|_| p.covers().len());
    Ok(match c.format {
        Format::Text => {
            let mut out = String::new();
            if let Some(name) = &parsed.name {
                writeln!(out, "name: {name}").unwrap();
            }
            writeln!(out, "rank: {}", p.rank()).unwrap();
            writeln!(out, "elements: {}", p.len()).unwrap();
            writeln!(out, "covers: {}", p.covers().len()).unwrap();
            match labels {
                Some(k) => writeln!(out, "labels: {k}").unwrap(),
                None => writeln!(out, "labels: none").unwrap(),
            }
            out
        }
        Format::Structured => json_out(json!({
            "name": parsed.name,
            "rank": p.rank(),
            "elements": p.len(),
            "covers": p.covers().len(),
            "labeled": labels.is_some(),
        })),
    })
}

fn mobius(c: &Common) -> Result<String, Failure> {
    let p = load(c)?.poset;
    let values = (0..p.len())
        .map(|w| Ok((w, p.mobius(p.bottom(), w).map_err(invalid)?)))
        .collect::<Result<Vec<_>, Failure>>()?;
    Ok(match c.format {
        Format::Text => {
            let rows: Vec<Vec<String>> = values
                .iter()
                .map(|&(w, mu)| {
                    vec![
                        p.name(w).to_string(),
                        p.rank_of(w).to_string(),
                        mu.to_string(),
                    ]
                })
                .collect();
            table(&["element", "rank", "mobius"], &rows)
        }
        Format::Structured => json_out(json!({
            "mobius": values
                .iter()
                .map(|&(w, mu)| json!({ "element": p.name(w), "rank": p.rank_of(w), "value": mu }))
                .collect::<Vec<_>>(),
        })),
    })
}

fn flag(c: &Common) -> Result<String, Failure> {
    let p = load(c)?.poset;
    let alpha = flag_alpha(&p).map_err(invalid)?;
    let beta = flag_beta(&p).map_err(invalid)?;
    Ok(match c.format {
        Format::Text => {
            let rows: Vec<Vec<String>> = alpha
                .iter()
                .map(|(s, a)| vec![s.to_string(), a.to_string(), beta.get(s).to_string()])
                .collect();
            table(&["S", "alpha", "beta"], &rows)
        }
        Format::Structured => json_out(structured_flags(&alpha, &beta)),
    })
}

fn gamma(args: &ChowArgs) -> Result<String, Failure> {
    let p = load(&args.common)?.poset;
    let g = gamma_expansion(&p, args.augmented).map_err(invalid)?;
    Ok(match args.common.format {
        Format::Text => {
            let rows: Vec<Vec<String>> = g
                .terms
                .iter()
                .map(|(t, c)| vec![t.to_string(), c.to_string()])
                .collect();
            let mut out = table(&["T", "gamma"], &rows);
            writeln!(out, "expansion: {}", g.expand()).unwrap();
            writeln!(
                out,
                "nonnegative: {}",
                if g.has_negative() { "no" } else { "yes" }
            )
            .unwrap();
            out
        }
        Format::Structured => json_out(structured_gamma(&g)),
    })
}

fn labeled(c: &Common) -> Result<(ParsedPoset, EdgeLabeling), Failure> {
    let mut parsed = load(c)?;
    let labeling = parsed
        .labeling
        .take()
        .ok_or_else(|| Failure::LabelingRejected {
            message: "the document has no labels".to_string(),
            output: None,
        })?;
    Ok((parsed, labeling))
}

fn rlabel_check(c: &Common) -> Result<String, Failure> {
    let (parsed, lab) = labeled(c)?;
    let p = &parsed.poset;
    let check = is_r_labeling(p, &lab).map_err(|e| Failure::LabelingRejected {
        message: e.to_string(),
        output: None,
    })?;
    let tie_free = is_tie_free(p, &lab);
    let (out, witness) = match (&check, c.format) {
        (RLabelingCheck::Valid, Format::Text) => (
            format!(
                "R-labeling: yes\ntie-free: {}\n",
                if tie_free { "yes" } else { "no" }
            ),
            None,
        ),
        (
            RLabelingCheck::Invalid {
                bottom,
                top,
                rising,
            },
            Format::Text,
        ) => {
            let w = format!(
                "interval [{}, {}] has {rising} weakly increasing maximal chains",
                p.name(*bottom),
                p.name(*top)
            );
            (format!("R-labeling: no\nwitness: {w}\n"), Some(w))
        }
        (RLabelingCheck::Valid, Format::Structured) => (
            json_out(json!({ "r_labeling": true, "tie_free": tie_free })),
            None,
        ),
        (
            RLabelingCheck::Invalid {
                bottom,
                top,
                rising,
            },
            Format::Structured,
        ) => (
            json_out(json!({
                "r_labeling": false,
                "witness": { "bottom": p.name(*bottom), "top": p.name(*top), "rising": rising },
            })),
            Some(format!("interval [{}, {}]", p.name(*bottom), p.name(*top))),
        ),
    };
    match witness {
        None => Ok(out),
        Some(w) => Err(Failure::LabelingRejected {
            message: w,
            output: Some(out),
        }),
    }
}

fn rlabel_expand(c: &Common) -> Result<String, Failure> {
    let (parsed, lab) = labeled(c)?;
    let p = &parsed.poset;
    let reject = |e: posetcalc_core::RLabelError| Failure::LabelingRejected {
        message: e.to_string(),
        output: None,
    };
    let total = expsi_via_rlabeling(p, &lab).map_err(reject)?;
    let n = p.rank();
    let mut rows = Vec::new();
    for chain in p.maximal_chains() {
        for e in RankSet::range(1, n).subsets() {
            let seq = signed_labels(p, &lab, &chain, e).map_err(reject)?;
            let word = chain_monomial(p, &lab, &chain, e).map_err(reject)?;
            rows.push((chain.clone(), e, seq, word));
        }
    }
    if !is_tie_free(p, &lab) || p.covers().iter().any(|&(u, v)| lab.get(u, v) == Some(0)) {
        eprintln!(
            "posetcalc: note: zero or repeated consecutive labels; the expansion may differ from exΨ"
        );
    }
    Ok(match c.format {
        Format::Text => {
            let cells: Vec<Vec<String>> = rows
                .iter()
                .map(|(chain, e, seq, word)| {
                    let seq: Vec<String> = seq.iter().map(i64::to_string).collect();
                    vec![
                        chain.display(p).to_string(),
                        e.to_string(),
                        format!("({})", seq.join(", ")),
                        word.to_string(),
                    ]
                })
                .collect();
            let mut out = table(&["chain", "E", "labels", "m(M,E)"], &cells);
            writeln!(out, "sum: {total}").unwrap();
            out
        }
        Format::Structured => json_out(json!({
            "rows": rows
                .iter()
                .map(|(chain, e, seq, word)| json!({
                    "chain": chain.elements().iter().map(|&v| p.name(v)).collect::<Vec<_>>(),
                    "E": set_json(*e),
                    "labels": seq,
                    "word": word.to_string(),
                }))
                .collect::<Vec<_>>(),
            "sum": structured_ncpoly(&total),
        })),
    })
}

fn verify(c: &Common) -> Result<String, Failure> {
    let parsed = load(c)?;
    let report = verify_poset(&parsed.poset, parsed.labeling.as_ref());
    let out = match c.format {
        Format::Text => {
            let passed = report.checks.iter().filter(|c| c.passed).count();
            format!("{report}{passed}/{} checks passed\n", report.checks.len())
        }
        Format::Structured => json_out(json!({
            "passed": report.all_passed(),
            "checks": report
                .checks
                .iter()
                .map(|c| json!({ "name": c.name, "passed": c.passed, "detail": c.detail }))
                .collect::<Vec<_>>(),
        })),
    };
    if report.all_passed() {
        Ok(out)
    } else {
        Err(Failure::IdentityViolation { output: out })
    }
}
