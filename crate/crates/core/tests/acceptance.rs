//! Acceptance run: one line per criterion, nonzero exit if any fails.
//!
//! Everything is exact integer arithmetic; a criterion passes only on exact
//! equality.

use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use thickcalc::identities::{
    build_flatten_minus, build_flatten_plus, build_thick_r3, lookup, registry, verify, GridConfig, Params, Side,
    Value, VerificationReport, VerifyOptions,
};
use thickcalc::klr::{Family, Gen, Orientation, PolyRep};
use thickcalc::symfunc::{
    enumerate_partitions, quantum_binomial, quantum_binomial_partition, schur_bialternant, schur_giambelli,
};
use thickcalc::thick::RawWords;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn run(names: &[&str], cfg: &GridConfig) -> (bool, String) {
    let opts = VerifyOptions::default();
    let mut ok = true;
    let mut parts = Vec::new();
    for name in names {
        let spec = lookup(name).expect("registered identity");
        let r = verify(&spec, cfg, &opts);
        ok &= r.passed() && r.summary.total > 0;
        parts.push(format!("{name} {}/{}", r.summary.pass, r.summary.total));
        report_failures(&r);
    }
    (ok, parts.join(", "))
}

fn report_failures(r: &VerificationReport) {
    for t in r.failures().take(3) {
        eprintln!("    {} {}: {:?} {}", r.identity, t.params, t.note, t.diff.as_deref().unwrap_or(""));
    }
}

fn thin_relations() -> Outcome {
    let (ok, d) = run(&["thin_relations"], &GridConfig::new(5, 4));
    outcome(ok, d)
}

fn dot_migration() -> Outcome {
    let (ok, d) = run(&["dot_migration"], &GridConfig::default().with_override("d", 5));
    outcome(ok, d)
}

fn quantum_binomials() -> Outcome {
    let mut checked = 0;
    for n in 0..=10u32 {
        for a in 0..=n {
            let lhs = quantum_binomial_partition(a, n - a);
            if quantum_binomial(n, a).map(|r| r != lhs).unwrap_or(true) {
                return outcome(false, format!("mismatch at a={a} b={}", n - a));
            }
            checked += 1;
        }
    }
    outcome(true, format!("{checked} pairs with a+b <= 10"))
}

fn giambelli() -> Outcome {
    let mut checked = 0;
    for al in enumerate_partitions(4, 4) {
        for m in [4, 5] {
            if schur_giambelli(&al, m) != schur_bialternant(&al.conjugate(), m) {
                return outcome(false, format!("{al} in {m} variables"));
            }
            checked += 1;
        }
    }
    outcome(true, format!("{checked} cases over P(4,4)"))
}

fn digons() -> Outcome {
    let (ok, d) = run(&["digon_eval"], &GridConfig::new(5, 4));
    outcome(ok, d)
}

fn splitters() -> Outcome {
    let (ok, d) = run(&["splitter_associativity", "pitchfork", "opening_thick_edge"], &GridConfig::new(5, 4));
    outcome(ok, d)
}

fn thick_r2() -> Outcome {
    let (ok, d) = run(&["thick_r2", "thick_r2_flipped"], &GridConfig::new(5, 4));
    outcome(ok, d)
}

fn thick_r3() -> Outcome {
    let (ok, d) = run(&["thick_r3", "thick_r3_11b", "thick_r3_a1b"], &GridConfig::new(6, 4));
    outcome(ok, d)
}

fn square_flattening() -> Outcome {
    let (ok, d) = run(&["square_flatten_plus", "square_flatten_minus"], &GridConfig::new(6, 4));
    let mut degenerate = 0;
    for a in 1..=4u32 {
        for b in 1..=4 {
            for c in 1..=4 {
                if a + b + c > 6 {
                    continue;
                }
                let (_, r3) = build_thick_r3(a, b, c, 1, 2).expect("r3");
                let (_, plus) = build_flatten_plus(a, b, c, 0, 1, 2).expect("plus");
                let (_, minus) = build_flatten_minus(a, b, c, 0, 1, 2).expect("minus");
                let e = r3.explode().expect("explode");
                if plus.explode().expect("explode") != e || minus.explode().expect("explode") != e {
                    return outcome(false, format!("x=0 differs from thick R3 at a={a} b={b} c={c}"));
                }
                degenerate += 1;
            }
        }
    }
    outcome(ok, format!("{d}; x=0 equals thick R3 in {degenerate} cases"))
}

/// Random words, each at most `max_gens` long, over `bottom`.
fn random_words(rng: &mut ChaCha8Rng, k: usize, terms: usize, max_gens: usize) -> RawWords {
    (0..terms)
        .map(|_| {
            let len = rng.gen_range(0..=max_gens);
            let w = (0..len)
                .map(|_| {
                    if k < 2 || rng.gen_bool(0.4) {
                        Gen::Dot(rng.gen_range(0..k))
                    } else {
                        Gen::Cross(rng.gen_range(0..k - 1))
                    }
                })
                .collect();
            (BigInt::from(rng.gen_range(-3i32..=3)), w)
        })
        .collect()
}

fn top_of(bottom: &[u8], w: &[Gen]) -> Vec<u8> {
    let mut cols = bottom.to_vec();
    for g in w.iter().rev() {
        if let Gen::Cross(k) = *g {
            cols.swap(k, k + 1);
        }
    }
    cols
}

/// A vanishing combination: a local relation in a random context, with a
/// random word stacked below it.
fn random_zero(rng: &mut ChaCha8Rng, bottom: &[u8]) -> Option<RawWords> {
    let spec = lookup("thin_relations").expect("registered");
    let k = bottom.len();
    let below: Vec<Gen> = random_words(rng, k, 1, 3).remove(0).1;
    let mid = top_of(bottom, &below);
    let kinds = [("r2", 2), ("r3", 3), ("nil_dot_top", 2), ("nil_dot_bottom", 2), ("slide_left", 2), ("dot_far", 3)];
    let (kind, width) = kinds[rng.gen_range(0..kinds.len())];
    if width > k {
        return None;
    }
    let at = rng.gen_range(0..=k - width);
    let p = Params::new()
        .text("kind", kind)
        .with("local", Value::Colors(mid[at..at + width].to_vec()))
        .with("left", Value::Colors(mid[..at].to_vec()))
        .with("right", Value::Colors(mid[at + width..].to_vec()));
    let case = spec.case(&p).ok()?;
    let words = |s: &Side, sign: i32| match s {
        Side::Thin { terms, .. } => terms
            .iter()
            .map(|(c, w)| (c * sign, [w.clone(), below.clone()].concat()))
            .collect::<Vec<_>>(),
        Side::Thick(_) => unreachable!("thin relations are thin"),
    };
    Some([words(&case.lhs, 1), words(&case.rhs, -1)].concat())
}

fn dual_oracle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let (mut equal_pairs, mut checked) = (0, 0);
    while checked < 1000 {
        let k = rng.gen_range(1..=5usize);
        let bottom: Vec<u8> = (0..k).map(|_| rng.gen_range(1..=3u8)).collect();
        let terms = rng.gen_range(1..=3);
        let base = random_words(&mut rng, k, terms, 6);
        let extra = if rng.gen_bool(0.5) {
            match random_zero(&mut rng, &bottom) {
                Some(z) => z,
                None => continue,
            }
        } else {
            random_words(&mut rng, k, 1, 6)
        };
        // both sides must share a top boundary
        let top = top_of(&bottom, &base[0].1);
        let fits = |w: &RawWords| w.iter().all(|(_, g)| top_of(&bottom, g) == top);
        if !fits(&base) || !fits(&extra) {
            continue;
        }
        let lhs = Side::thin(&bottom, Some(top.clone()), base.clone()).expect("side");
        let rhs = Side::thin(&bottom, Some(top), [base, extra].concat()).expect("side");
        let equal = lhs.explode().expect("reduce") == rhs.explode().expect("reduce");
        let rep = PolyRep::new(Orientation::default());
        let family = if k <= 4 { Family::Box } else { Family::Staircase };
        let agree = rep.agree(k, family, |f| lhs.act(&rep, f), |f| rhs.act(&rep, f)).expect("oracle");
        if equal != agree {
            return outcome(false, format!("divergence on bottom {bottom:?} after {checked} elements"));
        }
        equal_pairs += equal as usize;
        checked += 1;
    }
    outcome(true, format!("{checked} random pairs, {equal_pairs} equal, no divergence"))
}

fn negative_controls() -> Outcome {
    let opts = VerifyOptions { oracle: false, mutate: true, ..Default::default() };
    let cfg = GridConfig::new(4, 4);
    for spec in registry() {
        let r = verify(&spec, &cfg, &opts);
        let all_fail = r.summary.total > 0 && r.summary.pass == 0;
        let diffs = r.grid.iter().all(|t| t.diff.as_deref().is_some_and(|d| !d.is_empty()));
        if !all_fail || !diffs {
            return outcome(false, format!("{} mutated: {}/{} passed", spec.name, r.summary.pass, r.summary.total));
        }
    }
    outcome(true, format!("all {} mutated identities fail with diffs", registry().len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("thin relation suite", thin_relations),
        ("dot migration", dot_migration),
        ("quantum binomial", quantum_binomials),
        ("Giambelli vs bialternant", giambelli),
        ("digon lemma", digons),
        ("splitter structure", splitters),
        ("thick R2", thick_r2),
        ("thick R3", thick_r3),
        ("square flattening", square_flattening),
        ("dual-oracle agreement", dual_oracle),
        ("negative controls", negative_controls),
    ];
    // optional criterion numbers on the command line restrict the run
    let only: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (mut ran, mut failed) = (0, 0);
    for (n, (name, f)) in criteria.iter().enumerate() {
        if !only.is_empty() && !only.contains(&(n + 1)) {
            continue;
        }
        let t = Instant::now();
        let o = f();
        let secs = t.elapsed().as_secs_f64();
        println!("criterion {:>2} {:<26} {} ({secs:.1}s) {}", n + 1, name, if o.pass { "PASS" } else { "FAIL" }, o.detail);
        ran += 1;
        failed += !o.pass as usize;
    }
    println!("acceptance: {} of {ran} criteria pass", ran - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
