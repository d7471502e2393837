use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use super::builders::lookup;
use super::spec::{GridConfig, IdentitySpec, Params};
use crate::error::Result;
use crate::klr::{Family, Orientation, PolyRep, ThinElement};

const DIFF_LIMIT: usize = 2000;

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    /// Cross-check every tuple in the polynomial representation.
    pub oracle: bool,
    pub orientation: Orientation,
    /// Corrupt the right side of every tuple.
    pub mutate: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self { oracle: true, orientation: Orientation::default(), mutate: false }
    }
}

/// The frozen thick-generator conventions, echoed into every report.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SignConfig {
    pub merge: i8,
    pub split: i8,
    pub delta: String,
}

impl Default for SignConfig {
    fn default() -> Self {
        Self { merge: 1, split: 1, delta: "descending".into() }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct EngineConfig {
    pub orientation: Orientation,
    pub signs: SignConfig,
    pub oracle: bool,
    pub mutate: bool,
    pub max_strands: usize,
    pub rank: u8,
}

#[derive(Clone, Debug, Serialize)]
pub struct TupleOutcome {
    pub params: Params,
    pub pass: bool,
    pub lhs_terms: usize,
    pub rhs_terms: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diff: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub millis: u64,
}

#[derive(Clone, Copy, Debug, Default, Serialize, PartialEq, Eq)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub total: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub identity: String,
    pub config: EngineConfig,
    pub grid: Vec<TupleOutcome>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &TupleOutcome> {
        self.grid.iter().filter(|t| !t.pass)
    }

    /// Copy with every timing field zeroed, for reproducibility checks.
    pub fn without_timing(&self) -> Self {
        let mut r = self.clone();
        for t in &mut r.grid {
            t.millis = 0;
        }
        r
    }
}

/// Checks every tuple of the spec's grid; tuples run on the current rayon
/// pool and come back in grid order.
pub fn verify(spec: &IdentitySpec, cfg: &GridConfig, opts: &VerifyOptions) -> VerificationReport {
    let tuples = spec.tuples(cfg);
    let grid: Vec<TupleOutcome> = tuples.par_iter().map(|p| check_tuple(spec, p, opts)).collect();
    let pass = grid.iter().filter(|t| t.pass).count();
    let summary = Summary { pass, fail: grid.len() - pass, total: grid.len() };
    VerificationReport {
        identity: spec.name.to_string(),
        config: EngineConfig {
            orientation: opts.orientation,
            signs: SignConfig::default(),
            oracle: opts.oracle,
            mutate: opts.mutate,
            max_strands: cfg.max_strands,
            rank: cfg.rank,
        },
        grid,
        summary,
    }
}

pub fn check_tuple(spec: &IdentitySpec, p: &Params, opts: &VerifyOptions) -> TupleOutcome {
    let start = Instant::now();
    let mut out = TupleOutcome { params: p.clone(), pass: false, lhs_terms: 0, rhs_terms: 0, diff: None, note: None, millis: 0 };
    if let Err(e) = run_checks(spec, p, opts, &mut out) {
        out.pass = false;
        out.note = Some(e.to_string());
    }
    out.millis = start.elapsed().as_millis() as u64;
    log::debug!("{} {} -> {} ({} ms)", spec.name, p, if out.pass { "pass" } else { "FAIL" }, out.millis);
    out
}

fn run_checks(spec: &IdentitySpec, p: &Params, opts: &VerifyOptions, out: &mut TupleOutcome) -> Result<()> {
    let mut case = spec.case(p)?;
    if opts.mutate {
        case.rhs = case.rhs.corrupted()?;
    }
    let (lhs, rhs) = (&case.lhs, &case.rhs);
    if lhs.bottom() != rhs.bottom() || lhs.top() != rhs.top() {
        out.note = Some(format!(
            "boundaries differ: {:?} -> {:?} vs {:?} -> {:?}",
            lhs.bottom(),
            lhs.top(),
            rhs.bottom(),
            rhs.top()
        ));
        return Ok(());
    }
    if let Some(n) = case.rhs_summands {
        if rhs.summands() != n && !opts.mutate {
            out.note = Some(format!("right side has {} summands, expected {n}", rhs.summands()));
            return Ok(());
        }
    }
    // a degree mismatch still gets a diff below
    let mut graded = true;
    match (lhs.degree(), rhs.degree()) {
        (Ok(Some(x)), Ok(Some(y))) if x != y => {
            out.note = Some(format!("degrees differ: {x} vs {y}"));
            graded = false;
        }
        (Err(e), _) | (_, Err(e)) => {
            out.note = Some(e.to_string());
            graded = false;
        }
        _ => {}
    }
    let (l, r) = (lhs.explode()?, rhs.explode()?);
    out.lhs_terms = l.len();
    out.rhs_terms = r.len();
    let diff = l.try_sub(&r)?;
    let equal = diff.is_zero();
    if !equal {
        out.diff = Some(render_diff(&diff));
    }
    if opts.oracle && graded {
        let rep = PolyRep::new(opts.orientation);
        // both sides commute with symmetric polynomials, so a basis of the
        // polynomial ring over them is enough
        let k = lhs.bottom().len();
        let agree = rep.agree(k, Family::Staircase, |f| lhs.act(&rep, f), |f| rhs.act(&rep, f))?;
        if agree != equal {
            out.note = Some(format!("polynomial oracle says {}, reduction says {}", verdict(agree), verdict(equal)));
            return Ok(());
        }
    }
    out.pass = equal && graded;
    Ok(())
}

fn verdict(eq: bool) -> &'static str {
    if eq {
        "equal"
    } else {
        "different"
    }
}

/// `lhs - rhs` in canonical form, cut short when very long.
fn render_diff(diff: &ThinElement) -> String {
    let s = diff.to_string();
    if s.len() <= DIFF_LIMIT {
        return s;
    }
    let mut cut = DIFF_LIMIT;
    while !s.is_char_boundary(cut) {
        cut -= 1;
    }
    format!("{} ... ({} terms)", &s[..cut], diff.len())
}

/// The adjacent-crossing orientation under which the polynomial oracle
/// satisfies the thin relations on three strands.
pub fn calibrate_orientation(rank: u8) -> Orientation {
    let spec = lookup("thin_relations").expect("thin_relations is registered");
    let cfg = GridConfig::new(3, rank.max(3));
    let first = Orientation::default();
    for o in [first, first.flipped()] {
        let opts = VerifyOptions { oracle: true, orientation: o, mutate: false };
        if verify(&spec, &cfg, &opts).passed() {
            return o;
        }
    }
    log::warn!("no oracle orientation satisfies the thin relations; keeping {first:?}");
    first
}
