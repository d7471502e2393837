//! Both sides of every verified relation, and their default grids.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::spec::{Case, GridConfig, IdentitySpec, Params, Side, Value};
use crate::error::{Error, Result};
use crate::klr::{link, Color, Gen, Link};
use crate::symfunc::{enumerate_partitions, multi_lr_coeff, partitions_with_rows, skew_coefficients, Partition};
use crate::thick::{RawWords, ThickDiagram as D, ThickObject};

pub fn registry() -> Vec<IdentitySpec> {
    vec![
        IdentitySpec {
            name: "thin_relations",
            statement: "local KLR relations in every tensor context",
            grid: thin_grid,
            build: build_thin,
        },
        IdentitySpec {
            name: "dot_migration",
            statement: "x1^d psi - psi x2^d = psi x1^d - x2^d psi = sum_{r+s=d-1} x1^r x2^s",
            grid: migration_grid,
            build: build_migration,
        },
        IdentitySpec {
            name: "splitter_associativity",
            statement: "both bracketings of a three-way split or merge agree",
            grid: assoc_grid,
            build: build_assoc,
        },
        IdentitySpec {
            name: "pitchfork",
            statement: "a splitter slides through a thick crossing",
            grid: pitchfork_grid,
            build: build_pitchfork,
        },
        IdentitySpec {
            name: "opening_thick_edge",
            statement: "split(b+x,a) merge(a+x,b) opens into a square with an x-edge",
            grid: ote_grid,
            build: build_ote,
        },
        IdentitySpec {
            name: "explode_antisymmetry",
            statement: "exploded strands are antisymmetric in their dots; sgn(sigma) evaluation",
            grid: antisym_grid,
            build: build_antisym,
        },
        IdentitySpec {
            name: "digon_eval",
            statement: "decorated digons collapse to delta (-1)^|beta| e_{a+b}, or to a single +-pi_gamma",
            grid: digon_grid,
            build: build_digon,
        },
        IdentitySpec {
            name: "skew_splitter",
            statement: "digon with pi_gamma pi_psi on the a-side is pi_{gamma/(K-psi)}",
            grid: skew_grid,
            build: build_skew,
        },
        IdentitySpec {
            name: "pomoc11",
            statement: "a thickness a+1 strand unfolds into (1, a) with a dots on the thin edge",
            grid: pomoc_grid,
            build: build_pomoc,
        },
        IdentitySpec {
            name: "dot_slide",
            statement: "thick dots slide through crossings of different colors",
            grid: slide_grid,
            build: build_slide,
        },
        IdentitySpec {
            name: "thick_r2",
            statement: "thick curl on adjacent colors is sum_{alpha in P(a,b)} pi_alpha (x) pi_alpha-hat",
            grid: r2_grid,
            build: build_r2,
        },
        IdentitySpec {
            name: "thick_r2_flipped",
            statement: "mirror image of thick_r2",
            grid: r2_grid,
            build: build_r2_flipped,
        },
        IdentitySpec {
            name: "thick_r3",
            statement: "thick triple crossing is a Littlewood-Richardson sum of squares",
            grid: r3_grid,
            build: build_r3,
        },
        IdentitySpec {
            name: "thick_r3_11b",
            statement: "thick_r3 with a = c = 1",
            grid: r3_11b_grid,
            build: build_r3,
        },
        IdentitySpec {
            name: "thick_r3_a1b",
            statement: "thick_r3 with c = 1",
            grid: r3_a1b_grid,
            build: build_r3,
        },
        IdentitySpec {
            name: "square_flatten_plus",
            statement: "(a, c, b+x) -> (b, c, a+x) flattening, sums over P(i, c-x-i)",
            grid: flatten_grid,
            build: build_flatten_plus_case,
        },
        IdentitySpec {
            name: "square_flatten_minus",
            statement: "(a+x, c, b) -> (b+x, c, a) flattening, sums over P(i+x, c-i)",
            grid: flatten_grid,
            build: build_flatten_minus_case,
        },
    ]
}

pub fn lookup(name: &str) -> Option<IdentitySpec> {
    registry().into_iter().find(|s| s.name == name)
}

fn s(i: Color, a: u32) -> D {
    D::strand(i, a)
}

fn thin_dot(i: Color, d: u32) -> D {
    D::dot(i, 1, &Partition::row(d))
}

fn chain(layers: Vec<D>) -> Result<D> {
    D::chain(layers)
}

fn row(parts: Vec<D>) -> D {
    D::row(parts)
}

fn sum(bottom: ThickObject, top: ThickObject, terms: Vec<(BigInt, D)>) -> Result<D> {
    D::sum(bottom, top, terms.into_iter().filter(|(c, _)| !c.is_zero()).collect())
}

fn sign(n: u32) -> BigInt {
    if n % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

fn ordered_pairs(cfg: &GridConfig, keep: impl Fn(Link) -> bool) -> Vec<(Color, Color)> {
    let cs = cfg.colors();
    let mut out = Vec::new();
    for &i in &cs {
        for &j in &cs {
            if keep(link(i, j)) {
                out.push((i, j));
            }
        }
    }
    out
}

fn adjacent_pairs(cfg: &GridConfig) -> Vec<(Color, Color)> {
    ordered_pairs(cfg, |l| l == Link::Adjacent)
}

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidParameters(msg.into())
}

// ---------------------------------------------------------------- thin

const THIN_KINDS: [(&str, usize); 8] = [
    ("nil_dot_top", 2),
    ("nil_dot_bottom", 2),
    ("slide_left", 2),
    ("slide_right", 2),
    ("r2", 2),
    ("r3", 3),
    ("dot_far", 3),
    ("cross_far", 4),
];

fn cross(k: usize) -> Gen {
    Gen::Cross(k)
}

fn dot(k: usize) -> Gen {
    Gen::Dot(k)
}

/// Local relation as `lhs - rhs`, or `None` when it does not apply to `cols`.
fn thin_local(kind: &str, cols: &[Color]) -> Option<(RawWords, RawWords)> {
    let one = BigInt::one;
    let neg = || -BigInt::one();
    let l = |k: usize| link(cols[k], cols[k + 1]);
    let same = cols.len() >= 2 && l(0) == Link::Same;
    Some(match kind {
        "nil_dot_top" if same => (
            vec![(one(), vec![dot(0), cross(0)]), (neg(), vec![cross(0), dot(1)])],
            vec![(one(), vec![])],
        ),
        "nil_dot_bottom" if same => (
            vec![(one(), vec![cross(0), dot(0)]), (neg(), vec![dot(1), cross(0)])],
            vec![(one(), vec![])],
        ),
        "slide_left" if !same => (vec![(one(), vec![dot(0), cross(0)])], vec![(one(), vec![cross(0), dot(1)])]),
        "slide_right" if !same => (vec![(one(), vec![dot(1), cross(0)])], vec![(one(), vec![cross(0), dot(0)])]),
        "r2" => {
            let rhs = match l(0) {
                Link::Same => vec![],
                Link::Adjacent => vec![(one(), vec![dot(0)]), (one(), vec![dot(1)])],
                Link::Distant => vec![(one(), vec![])],
            };
            (vec![(one(), vec![cross(0), cross(0)])], rhs)
        }
        "r3" => {
            let mut rhs = vec![(one(), vec![cross(1), cross(0), cross(1)])];
            if cols[0] == cols[2] && l(0) == Link::Adjacent {
                rhs.push((one(), vec![]));
            }
            (vec![(one(), vec![cross(0), cross(1), cross(0)])], rhs)
        }
        "dot_far" => (vec![(one(), vec![dot(0), cross(1)])], vec![(one(), vec![cross(1), dot(0)])]),
        "cross_far" => (vec![(one(), vec![cross(0), cross(2)])], vec![(one(), vec![cross(2), cross(0)])]),
        _ => return None,
    })
}

fn colorings(colors: &[Color], n: usize) -> Vec<Vec<Color>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w: Vec<Color>| {
                colors.iter().map(move |&c| {
                    let mut v = w.clone();
                    v.push(c);
                    v
                })
            })
            .collect();
    }
    out
}

fn thin_grid(cfg: &GridConfig) -> Vec<Params> {
    let budget = cfg.budget(5);
    let cs = cfg.colors();
    let mut out = Vec::new();
    for (kind, k) in THIN_KINDS {
        if k > budget {
            continue;
        }
        for local in colorings(&cs, k) {
            if thin_local(kind, &local).is_none() {
                continue;
            }
            for extra in 0..=budget - k {
                for nl in 0..=extra {
                    for left in colorings(&cs, nl) {
                        for right in colorings(&cs, extra - nl) {
                            out.push(
                                Params::new()
                                    .text("kind", kind)
                                    .with("local", Value::Colors(local.clone()))
                                    .with("left", Value::Colors(left.clone()))
                                    .with("right", Value::Colors(right)),
                            );
                        }
                    }
                }
            }
        }
    }
    out
}

fn shift_words(words: RawWords, by: usize) -> RawWords {
    words
        .into_iter()
        .map(|(c, w)| {
            let w = w
                .into_iter()
                .map(|g| match g {
                    Gen::Dot(p) => Gen::Dot(p + by),
                    Gen::Cross(k) => Gen::Cross(k + by),
                })
                .collect();
            (c, w)
        })
        .collect()
}

fn build_thin(p: &Params) -> Result<Case> {
    let kind = p.get_text("kind")?;
    let local = p.get_colors("local")?;
    let left = p.get_colors("left")?;
    let right = p.get_colors("right")?;
    let (lhs, rhs) = thin_local(kind, local).ok_or_else(|| bad(format!("{kind} does not apply to {local:?}")))?;
    let bottom = [left, local, right].concat();
    let lhs = Side::thin(&bottom, None, shift_words(lhs, left.len()))?;
    let rhs = Side::thin(&bottom, Some(lhs.top()), shift_words(rhs, left.len()))?;
    Ok(Case::new(lhs, rhs))
}

// ------------------------------------------------------- dot migration

fn migration_grid(cfg: &GridConfig) -> Vec<Params> {
    let mut out = Vec::new();
    if cfg.budget(2) < 2 {
        return out;
    }
    for i in cfg.colors() {
        for d in 1..=cfg.bound("d", 5) {
            for form in ["top_minus_bottom", "bottom_minus_top"] {
                out.push(Params::new().text("form", form).color("i", i).int("d", d));
            }
        }
    }
    out
}

fn build_migration(p: &Params) -> Result<Case> {
    let i = p.get_color("i")?;
    let d = p.get_int("d")? as usize;
    let pow = |k: usize, n: usize| vec![dot(k); n];
    let (a, b) = match p.get_text("form")? {
        "top_minus_bottom" => ([pow(0, d), vec![cross(0)]].concat(), [vec![cross(0)], pow(1, d)].concat()),
        "bottom_minus_top" => ([vec![cross(0)], pow(0, d)].concat(), [pow(1, d), vec![cross(0)]].concat()),
        f => return Err(bad(format!("unknown form {f}"))),
    };
    let lhs = vec![(BigInt::one(), a), (-BigInt::one(), b)];
    let rhs: RawWords = (0..d).map(|r| (BigInt::one(), [pow(0, r), pow(1, d - 1 - r)].concat())).collect();
    let bottom = [i, i];
    Ok(Case::new(Side::thin(&bottom, None, lhs)?, Side::thin(&bottom, None, rhs)?).expecting(d))
}

// ------------------------------------------------------------ splitters

fn assoc_grid(cfg: &GridConfig) -> Vec<Params> {
    let budget = cfg.budget(5) as u32;
    let mut out = Vec::new();
    for kind in ["split", "merge"] {
        for a in 1..=budget {
            for b in 1..=budget {
                for c in 1..=budget {
                    if a + b + c <= budget {
                        out.push(Params::new().text("kind", kind).color("i", 1).int("a", a).int("b", b).int("c", c));
                    }
                }
            }
        }
    }
    out
}

fn build_assoc(p: &Params) -> Result<Case> {
    let i = p.get_color("i")?;
    let (a, b, c) = (p.get_int("a")?, p.get_int("b")?, p.get_int("c")?);
    let (l, r) = match p.get_text("kind")? {
        "split" => (
            chain(vec![D::split(i, a + b, c), row(vec![D::split(i, a, b), s(i, c)])])?,
            chain(vec![D::split(i, a, b + c), row(vec![s(i, a), D::split(i, b, c)])])?,
        ),
        "merge" => (
            chain(vec![row(vec![D::merge(i, a, b), s(i, c)]), D::merge(i, a + b, c)])?,
            chain(vec![row(vec![s(i, a), D::merge(i, b, c)]), D::merge(i, a, b + c)])?,
        ),
        k => return Err(bad(format!("unknown kind {k}"))),
    };
    Ok(Case::thick(l, r))
}

fn pitchfork_grid(cfg: &GridConfig) -> Vec<Params> {
    let budget = cfg.budget(5) as u32;
    let mut pairs = ordered_pairs(cfg, |_| true);
    // one representative per relative position keeps the grid small
    pairs.retain(|&(i, j)| i == 1 || j == 1);
    let mut out = Vec::new();
    for kind in ["split_rl", "split_lr", "merge_rl", "merge_lr"] {
        for &(i, j) in &pairs {
            for a in 1..=cfg.bound("a", 2) {
                for b in 1..=cfg.bound("b", 2) {
                    for c in 1..=cfg.bound("c", 2) {
                        if a + b <= cfg.bound("ab", 3) && a + b + c <= budget {
                            out.push(
                                Params::new()
                                    .text("kind", kind)
                                    .color("i", i)
                                    .color("j", j)
                                    .int("a", a)
                                    .int("b", b)
                                    .int("c", c),
                            );
                        }
                    }
                }
            }
        }
    }
    out
}

fn build_pitchfork(p: &Params) -> Result<Case> {
    let (i, j) = (p.get_color("i")?, p.get_color("j")?);
    let (a, b, c) = (p.get_int("a")?, p.get_int("b")?, p.get_int("c")?);
    let (l, r) = match p.get_text("kind")? {
        // i^{a+b} j^c  ->  j^c i^a i^b
        "split_rl" => (
            chain(vec![
                row(vec![D::split(i, a, b), s(j, c)]),
                row(vec![s(i, a), D::cross(i, b, j, c)]),
                row(vec![D::cross(i, a, j, c), s(i, b)]),
            ])?,
            chain(vec![D::cross(i, a + b, j, c), row(vec![s(j, c), D::split(i, a, b)])])?,
        ),
        // j^c i^{a+b}  ->  i^a i^b j^c
        "split_lr" => (
            chain(vec![
                row(vec![s(j, c), D::split(i, a, b)]),
                row(vec![D::cross(j, c, i, a), s(i, b)]),
                row(vec![s(i, a), D::cross(j, c, i, b)]),
            ])?,
            chain(vec![D::cross(j, c, i, a + b), row(vec![D::split(i, a, b), s(j, c)])])?,
        ),
        // i^a i^b j^c  ->  j^c i^{a+b}
        "merge_rl" => (
            chain(vec![
                row(vec![s(i, a), D::cross(i, b, j, c)]),
                row(vec![D::cross(i, a, j, c), s(i, b)]),
                row(vec![s(j, c), D::merge(i, a, b)]),
            ])?,
            chain(vec![row(vec![D::merge(i, a, b), s(j, c)]), D::cross(i, a + b, j, c)])?,
        ),
        // j^c i^a i^b  ->  i^{a+b} j^c
        "merge_lr" => (
            chain(vec![
                row(vec![D::cross(j, c, i, a), s(i, b)]),
                row(vec![s(i, a), D::cross(j, c, i, b)]),
                row(vec![D::merge(i, a, b), s(j, c)]),
            ])?,
            chain(vec![row(vec![s(j, c), D::merge(i, a, b)]), D::cross(j, c, i, a + b)])?,
        ),
        k => return Err(bad(format!("unknown kind {k}"))),
    };
    Ok(Case::thick(l, r))
}

fn ote_grid(cfg: &GridConfig) -> Vec<Params> {
    let budget = cfg.budget(4) as u32;
    let mut out = Vec::new();
    for a in 1..=budget {
        for b in 1..=budget {
            for x in 0..=budget {
                if a + b + x <= budget {
                    out.push(Params::new().color("i", 1).int("a", a).int("b", b).int("x", x));
                }
            }
        }
    }
    out
}

fn build_ote(p: &Params) -> Result<Case> {
    let i = p.get_color("i")?;
    let (a, b, x) = (p.get_int("a")?, p.get_int("b")?, p.get_int("x")?);
    let lhs = chain(vec![D::merge(i, a + x, b), D::split(i, b + x, a)])?;
    let rhs = chain(vec![
        row(vec![D::split(i, x, a), s(i, b)]),
        row(vec![s(i, x), D::cross(i, a, i, b)]),
        row(vec![D::merge(i, x, b), s(i, a)]),
    ])?;
    Ok(Case::thick(lhs, rhs))
}

// -------------------------------------------------------- antisymmetry

/// `a → 1 + 1 + ⋯ + 1` by peeling off the leftmost thin strand.
fn split_to_thin(i: Color, a: u32) -> Result<D> {
    if a <= 1 {
        return Ok(s(i, a));
    }
    chain(vec![D::split(i, 1, a - 1), row(vec![s(i, 1), split_to_thin(i, a - 1)?])])
}

fn merge_from_thin(i: Color, a: u32) -> Result<D> {
    if a <= 1 {
        return Ok(s(i, a));
    }
    chain(vec![row(vec![s(i, 1), merge_from_thin(i, a - 1)?]), D::merge(i, 1, a - 1)])
}

/// The exploded strand with `xs[k]` dots on the `k`-th thin strand.
pub fn exploded(i: Color, xs: &[u32]) -> Result<D> {
    let a = xs.len() as u32;
    chain(vec![
        split_to_thin(i, a)?,
        row(xs.iter().map(|&d| thin_dot(i, d)).collect()),
        merge_from_thin(i, a)?,
    ])
}

fn antisym_grid(cfg: &GridConfig) -> Vec<Params> {
    let budget = cfg.budget(4) as u32;
    let mut out = Vec::new();
    for a in 2..=budget.min(cfg.bound("a", 4)) {
        let top = cfg.bound("dots", a - 1);
        for xs in colorings(&(0..=top as u8).collect::<Vec<_>>(), a as usize) {
            let xs: Vec<u32> = xs.into_iter().map(u32::from).collect();
            let dots = Value::Ints(xs.clone());
            for k in 0..a - 1 {
                out.push(Params::new().text("kind", "swap").color("i", 1).with("dots", dots.clone()).int("k", k));
            }
            if xs.iter().max() == Some(&(a - 1)) {
                out.push(Params::new().text("kind", "eval").color("i", 1).with("dots", dots));
            }
        }
    }
    out
}

/// Sign of `σ_i = x_{a-i}` when it is a permutation of `0..a`.
pub fn reversed_sign(xs: &[u32]) -> Option<i32> {
    let sigma: Vec<usize> = xs.iter().rev().map(|&x| x as usize).collect();
    let n = sigma.len();
    let mut seen = vec![false; n];
    for &v in &sigma {
        if v >= n || seen[v] {
            return None;
        }
        seen[v] = true;
    }
    let inversions = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| sigma[i] > sigma[j]).count();
    Some(if inversions % 2 == 0 { 1 } else { -1 })
}

fn build_antisym(p: &Params) -> Result<Case> {
    let i = p.get_color("i")?;
    let xs = p.get_ints("dots")?.to_vec();
    let a = xs.len() as u32;
    let lhs = exploded(i, &xs)?;
    let obj = ThickObject::single(i, a);
    let rhs = match p.get_text("kind")? {
        "swap" => {
            let k = p.get_int("k")? as usize;
            let mut ys = xs.clone();
            ys.swap(k, k + 1);
            exploded(i, &ys)?.scale(-1)
        }
        "eval" => match reversed_sign(&xs) {
            Some(sg) => s(i, a).scale(sg),
            None => D::zero(obj.clone(), obj),
        },
        k => return Err(bad(format!("unknown kind {k}"))),
    };
    Ok(Case::thick(lhs, rhs))
}

// --------------------------------------------------------------- digons

pub fn digon(i: Color, a: u32, b: u32, al: &Partition, be: &Partition) -> Result<D> {
    chain(vec![D::split(i, a, b), row(vec![D::dot(i, a, al), D::dot(i, b, be)]), D::merge(i, a, b)])
}

fn digon_grid(cfg: &GridConfig) -> Vec<Params> {
    let mut out = Vec::new();
    let (ma, mb) = (cfg.bound("a", 2), cfg.bound("b", 2));
    let budget = cfg.budget(5) as u32;
    for a in 1..=ma {
        for b in 1..=mb {
            if a + b > budget {
                continue;
            }
            for al in enumerate_partitions(a as usize, b + 1) {
                for be in enumerate_partitions(b as usize, a + 1) {
                    let exact = al.fits(a as usize, b) && be.fits(b as usize, a);
                    let kind = if exact { "rectangle" } else { "general" };
                    out.push(Params::new().text("kind", kind).color("i", 1).int("a", a).int("b", b).part("alpha", &al).part("beta", &be));
                }
            }
        }
    }
    for a in 1..budget {
        for b in 1..=budget - a {
            out.push(Params::new().text("kind", "dotless").color("i", 1).int("a", a).int("b", b));
        }
    }
    out
}

fn build_digon(p: &Params) -> Result<Case> {
    let i = p.get_color("i")?;
    let (a, b) = (p.get_int("a")?, p.get_int("b")?);
    let obj = ThickObject::single(i, a + b);
    let zero = || D::zero(obj.clone(), obj.clone());
    let kind = p.get_text("kind")?;
    if kind == "dotless" {
        let e = Partition::empty();
        return Ok(Case::thick(digon(i, a, b, &e, &e)?, zero()));
    }
    let (al, be) = (p.get_part("alpha")?, p.get_part("beta")?);
    let lhs = digon(i, a, b, al, be)?;
    let rhs = match kind {
        "rectangle" => {
            if *be == al.hat(a as usize, b)? {
                s(i, a + b).scale(sign(be.size()))
            } else {
                zero()
            }
        }
        "general" => general_digon_rhs(i, a, b, al, be, &lhs)?.unwrap_or_else(zero),
        k => return Err(bad(format!("unknown kind {k}"))),
    };
    Ok(Case::thick(lhs, rhs))
}

/// The `±π_γ` allowed by the general digon statement that matches `lhs`,
/// if any. The statement only asserts existence, so the candidates are
/// searched: `γ ∈ P(a+b, max(x-b, y-a))` with `|γ| = |α| + |β| - ab`.
fn general_digon_rhs(i: Color, a: u32, b: u32, al: &Partition, be: &Partition, lhs: &D) -> Result<Option<D>> {
    let size = (al.size() + be.size()) as i64 - (a * b) as i64;
    let (x, y) = (al.part(0) as i64, be.part(0) as i64);
    let width = (x - b as i64).max(y - a as i64);
    if size < 0 || width < 0 {
        return Ok(None);
    }
    let target = lhs.explode()?;
    if target.is_zero() {
        return Ok(None);
    }
    for g in enumerate_partitions((a + b) as usize, width as u32) {
        if g.size() as i64 != size {
            continue;
        }
        let cand = D::dot(i, a + b, &g).explode()?;
        for sg in [1, -1] {
            if target == cand.scale(&BigInt::from(sg)) {
                return Ok(Some(D::dot(i, a + b, &g).scale(sg)));
            }
        }
    }
    Ok(None)
}

fn skew_grid(cfg: &GridConfig) -> Vec<Params> {
    let mut out = Vec::new();
    for a in 1..=cfg.bound("a", 2) {
        for b in 1..=cfg.bound("b", 2) {
            if (a + b) as usize > cfg.budget(5) {
                continue;
            }
            for g in partitions_with_rows(a as usize, cfg.bound("gamma", 4)) {
                for psi in enumerate_partitions(a as usize, b) {
                    out.push(Params::new().color("i", 1).int("a", a).int("b", b).part("gamma", &g).part("psi", &psi));
                }
            }
        }
    }
    out
}

fn build_skew(p: &Params) -> Result<Case> {
    let i = p.get_color("i")?;
    let (a, b) = (p.get_int("a")?, p.get_int("b")?);
    let (g, psi) = (p.get_part("gamma")?, p.get_part("psi")?);
    let decorated = chain(vec![D::dot(i, a, g), D::dot(i, a, psi)])?;
    let lhs = chain(vec![D::split(i, a, b), row(vec![decorated, s(i, b)]), D::merge(i, a, b)])?;
    let mu = psi.rect_complement(a as usize, b)?;
    let terms = skew_coefficients(g, &mu).into_iter().map(|(be, c)| (c, D::dot(i, a + b, &be))).collect();
    let obj = ThickObject::single(i, a + b);
    Ok(Case::thick(lhs, sum(obj.clone(), obj, terms)?))
}

fn pomoc_grid(cfg: &GridConfig) -> Vec<Params> {
    let budget = cfg.budget(5) as u32;
    (1..budget).map(|a| Params::new().color("i", 1).int("a", a)).collect()
}

fn build_pomoc(p: &Params) -> Result<Case> {
    let i = p.get_color("i")?;
    let a = p.get_int("a")?;
    let rhs = chain(vec![D::split(i, 1, a), row(vec![thin_dot(i, a), s(i, a)]), D::merge(i, 1, a)])?;
    Ok(Case::thick(s(i, a + 1), rhs))
}

// --------------------------------------------------------- two colors

fn slide_grid(cfg: &GridConfig) -> Vec<Params> {
    let budget = cfg.budget(4) as u32;
    let mut out = Vec::new();
    for (i, j) in ordered_pairs(cfg, |l| l != Link::Same) {
        for a in 1..=cfg.bound("a", 2) {
            for b in 1..=cfg.bound("b", 2) {
                if a + b > budget {
                    continue;
                }
                for side in ["left", "right"] {
                    let t = if side == "left" { a } else { b };
                    for al in partitions_with_rows(t as usize, cfg.bound("size", 2)) {
                        if al.is_empty() {
                            continue;
                        }
                        out.push(
                            Params::new()
                                .text("side", side)
                                .color("i", i)
                                .color("j", j)
                                .int("a", a)
                                .int("b", b)
                                .part("alpha", &al),
                        );
                    }
                }
            }
        }
    }
    out
}

fn build_slide(p: &Params) -> Result<Case> {
    let (i, j) = (p.get_color("i")?, p.get_color("j")?);
    if i == j {
        return Err(bad("dot slide needs different colors"));
    }
    let (a, b) = (p.get_int("a")?, p.get_int("b")?);
    let al = p.get_part("alpha")?;
    let x = D::cross(i, a, j, b);
    let (l, r) = match p.get_text("side")? {
        "left" => (
            chain(vec![row(vec![D::dot(i, a, al), s(j, b)]), x.clone()])?,
            chain(vec![x, row(vec![s(j, b), D::dot(i, a, al)])])?,
        ),
        "right" => (
            chain(vec![row(vec![s(i, a), D::dot(j, b, al)]), x.clone()])?,
            chain(vec![x, row(vec![D::dot(j, b, al), s(i, a)])])?,
        ),
        k => return Err(bad(format!("unknown side {k}"))),
    };
    Ok(Case::thick(l, r))
}

fn r2_grid(cfg: &GridConfig) -> Vec<Params> {
    let budget = cfg.budget(5) as u32;
    let mut out = Vec::new();
    for (i, j) in adjacent_pairs(cfg) {
        for a in 1..=cfg.bound("a", budget) {
            for b in 1..=cfg.bound("b", budget) {
                if a + b <= budget {
                    out.push(Params::new().color("i", i).color("j", j).int("a", a).int("b", b));
                }
            }
        }
    }
    out
}

fn binomial(n: u32, k: u32) -> usize {
    (1..=k as usize).fold(1, |acc, t| acc * (n as usize - k as usize + t) / t)
}

/// `(i^a, j^b)` crossed twice, against `Σ_{α ∈ P(a,b)} π_α ⊗ π_{α̂}`.
pub fn build_thick_r2(i: Color, a: u32, j: Color, b: u32) -> Result<(D, D)> {
    if link(i, j) != Link::Adjacent {
        return Err(bad(format!("colors {i} and {j} are not adjacent")));
    }
    let lhs = chain(vec![D::cross(i, a, j, b), D::cross(j, b, i, a)])?;
    let obj = ThickObject::from_pairs(&[(i, a), (j, b)]);
    let mut terms = Vec::new();
    for al in enumerate_partitions(a as usize, b) {
        let hat = al.hat(a as usize, b)?;
        terms.push((BigInt::one(), row(vec![D::dot(i, a, &al), D::dot(j, b, &hat)])));
    }
    Ok((lhs, sum(obj.clone(), obj, terms)?))
}

fn build_r2(p: &Params) -> Result<Case> {
    let (i, j) = (p.get_color("i")?, p.get_color("j")?);
    let (a, b) = (p.get_int("a")?, p.get_int("b")?);
    let (l, r) = build_thick_r2(i, a, j, b)?;
    Ok(Case::thick(l, r).expecting(binomial(a + b, a)))
}

fn build_r2_flipped(p: &Params) -> Result<Case> {
    let (i, j) = (p.get_color("i")?, p.get_color("j")?);
    let (a, b) = (p.get_int("a")?, p.get_int("b")?);
    if link(i, j) != Link::Adjacent {
        return Err(bad(format!("colors {i} and {j} are not adjacent")));
    }
    let lhs = chain(vec![D::cross(j, b, i, a), D::cross(i, a, j, b)])?;
    let obj = ThickObject::from_pairs(&[(j, b), (i, a)]);
    let mut terms = Vec::new();
    for al in enumerate_partitions(a as usize, b) {
        let hat = al.hat(a as usize, b)?;
        terms.push((BigInt::one(), row(vec![D::dot(j, b, &hat), D::dot(i, a, &al)])));
    }
    Ok(Case::thick(lhs, sum(obj.clone(), obj, terms)?).expecting(binomial(a + b, a)))
}

// ------------------------------------------------------------------ R3

/// The square on `(A_i, c_j, B_i) → (l + B - r, c, A - l + r)`: `A` splits
/// off a left vertical of thickness `l`, `B` a right vertical of thickness
/// `r`, and the middle parts cross as in the plain R3 move.
#[allow(clippy::too_many_arguments)]
fn square(i: Color, j: Color, big_a: u32, big_b: u32, c: u32, l: u32, r: u32, al: &Partition, be: &Partition, gbar: &Partition) -> Result<D> {
    let (ar, bl) = (big_a - l, big_b - r);
    chain(vec![
        row(vec![s(i, big_a), D::dot(j, c, gbar), s(i, big_b)]),
        row(vec![D::split(i, l, ar), s(j, c), D::split(i, bl, r)]),
        row(vec![D::dot(i, l, al), s(i, ar), s(j, c), s(i, bl), D::dot(i, r, be)]),
        row(vec![s(i, l), s(i, ar), D::cross(j, c, i, bl), s(i, r)]),
        row(vec![s(i, l), D::cross(i, ar, i, bl), s(j, c), s(i, r)]),
        row(vec![s(i, l), s(i, bl), D::cross(i, ar, j, c), s(i, r)]),
        row(vec![D::merge(i, l, bl), s(j, c), D::merge(i, ar, r)]),
    ])
}

/// `c^K_{α,β,γ}` with `K` the `rows × cols` rectangle.
fn rect_coeff(al: &Partition, be: &Partition, ga: &Partition, rows: u32, cols: u32) -> BigInt {
    let k = Partition::rectangle(rows as usize, cols);
    if k.is_empty() {
        return if al.is_empty() && be.is_empty() && ga.is_empty() { BigInt::one() } else { BigInt::zero() };
    }
    multi_lr_coeff(&[al.clone(), be.clone(), ga.clone()], &k)
}

/// `Σ_{α,β,γ ∈ P(rows, cols)} c^{cols^rows}_{αβγ} · square(l, r)`.
#[allow(clippy::too_many_arguments)]
fn square_sum(i: Color, j: Color, big_a: u32, big_b: u32, c: u32, l: u32, r: u32, rows: u32, cols: u32) -> Result<Vec<(BigInt, D)>> {
    let ps = enumerate_partitions(rows as usize, cols);
    let mut out = Vec::new();
    for al in &ps {
        for be in &ps {
            for ga in &ps {
                let k = rect_coeff(al, be, ga, rows, cols);
                if !k.is_zero() {
                    out.push((k, square(i, j, big_a, big_b, c, l, r, al, be, &ga.conjugate())?));
                }
            }
        }
    }
    Ok(out)
}

fn check_r3_colors(i: Color, j: Color) -> Result<()> {
    if link(i, j) != Link::Adjacent {
        return Err(bad(format!("colors {i} and {j} are not adjacent")));
    }
    Ok(())
}

/// `(a_i, c_j, b_i) → (b, c, a)`: the triple crossing against its square sum.
pub fn build_thick_r3(a: u32, b: u32, c: u32, i: Color, j: Color) -> Result<(D, D)> {
    check_r3_colors(i, j)?;
    let lhs = chain(vec![
        row(vec![D::cross(i, a, j, c), s(i, b)]),
        row(vec![s(j, c), D::cross(i, a, i, b)]),
        row(vec![D::cross(j, c, i, b), s(i, a)]),
    ])?;
    let mut terms = Vec::new();
    for t in 0..=a.min(b).min(c) {
        terms.extend(square_sum(i, j, a, b, c, t, t, t, c - t)?);
    }
    let rhs = sum(lhs.bottom(), lhs.top(), terms)?;
    Ok((lhs, rhs))
}

fn r3_params(i: Color, j: Color, a: u32, b: u32, c: u32) -> Params {
    Params::new().color("i", i).color("j", j).int("a", a).int("b", b).int("c", c)
}

fn r3_grid(cfg: &GridConfig) -> Vec<Params> {
    let budget = cfg.budget(6) as u32;
    let mut out = Vec::new();
    for (i, j) in adjacent_pairs(cfg) {
        for a in 1..=cfg.bound("a", budget) {
            for b in 1..=cfg.bound("b", budget) {
                for c in 1..=cfg.bound("c", budget) {
                    if a + b + c <= budget {
                        out.push(r3_params(i, j, a, b, c));
                    }
                }
            }
        }
    }
    out
}

fn r3_11b_grid(cfg: &GridConfig) -> Vec<Params> {
    let budget = cfg.budget(6) as u32;
    let mut out = Vec::new();
    for (i, j) in adjacent_pairs(cfg) {
        for b in 1..=cfg.bound("b", 4) {
            if b + 2 <= budget {
                out.push(r3_params(i, j, 1, b, 1));
            }
        }
    }
    out
}

fn r3_a1b_grid(cfg: &GridConfig) -> Vec<Params> {
    let budget = cfg.budget(6) as u32;
    let mut out = Vec::new();
    for (i, j) in adjacent_pairs(cfg) {
        for a in 1..=cfg.bound("a", 3) {
            for b in 1..=cfg.bound("b", 2) {
                if a + b < budget {
                    out.push(r3_params(i, j, a, b, 1));
                }
            }
        }
    }
    out
}

fn build_r3(p: &Params) -> Result<Case> {
    let (i, j) = (p.get_color("i")?, p.get_color("j")?);
    let (a, b, c) = (p.get_int("a")?, p.get_int("b")?, p.get_int("c")?);
    let (l, r) = build_thick_r3(a, b, c, i, j)?;
    Ok(Case::thick(l, r))
}

// ---------------------------------------------------- square flattening

fn flatten_grid(cfg: &GridConfig) -> Vec<Params> {
    let budget = cfg.budget(6) as u32;
    let mut out = Vec::new();
    for (i, j) in adjacent_pairs(cfg) {
        for a in 1..=budget {
            for b in 1..=budget {
                for c in 1..=budget {
                    for x in 0..=cfg.bound("x", budget) {
                        if a + b + c + x <= budget {
                            out.push(r3_params(i, j, a, b, c).int("x", x));
                        }
                    }
                }
            }
        }
    }
    out
}

/// `(a, c, b+x) → (b, c, a+x)`.
pub fn build_flatten_plus(a: u32, b: u32, c: u32, x: u32, i: Color, j: Color) -> Result<(D, D)> {
    check_r3_colors(i, j)?;
    let lhs = chain(vec![
        row(vec![D::cross(i, a, j, c), s(i, b + x)]),
        row(vec![s(j, c), D::merge(i, a, b + x)]),
        row(vec![s(j, c), D::split(i, b, a + x)]),
        row(vec![D::cross(j, c, i, b), s(i, a + x)]),
    ])?;
    let e = Partition::empty();
    let mut terms = vec![(BigInt::one(), square(i, j, a, b + x, c, 0, x, &e, &e, &e)?)];
    if c > x {
        for k in 1..=a.min(b).min(c - x) {
            terms.extend(square_sum(i, j, a, b + x, c, k, k + x, k, c - x - k)?);
        }
    }
    let rhs = sum(lhs.bottom(), lhs.top(), terms)?;
    Ok((lhs, rhs))
}

/// `(a+x, c, b) → (b+x, c, a)`.
pub fn build_flatten_minus(a: u32, b: u32, c: u32, x: u32, i: Color, j: Color) -> Result<(D, D)> {
    check_r3_colors(i, j)?;
    let lhs = chain(vec![
        row(vec![D::cross(i, a + x, j, c), s(i, b)]),
        row(vec![s(j, c), D::merge(i, a + x, b)]),
        row(vec![s(j, c), D::split(i, b + x, a)]),
        row(vec![D::cross(j, c, i, b + x), s(i, a)]),
    ])?;
    let mut terms = Vec::new();
    for k in 0..=a.min(b).min(c) {
        terms.extend(square_sum(i, j, a + x, b, c, k + x, k, k + x, c - k)?);
    }
    let rhs = sum(lhs.bottom(), lhs.top(), terms)?;
    Ok((lhs, rhs))
}

fn flatten_args(p: &Params) -> Result<(u32, u32, u32, u32, Color, Color)> {
    Ok((p.get_int("a")?, p.get_int("b")?, p.get_int("c")?, p.get_int("x")?, p.get_color("i")?, p.get_color("j")?))
}

fn build_flatten_plus_case(p: &Params) -> Result<Case> {
    let (a, b, c, x, i, j) = flatten_args(p)?;
    let (l, r) = build_flatten_plus(a, b, c, x, i, j)?;
    Ok(Case::thick(l, r))
}

fn build_flatten_minus_case(p: &Params) -> Result<Case> {
    let (a, b, c, x, i, j) = flatten_args(p)?;
    let (l, r) = build_flatten_minus(a, b, c, x, i, j)?;
    Ok(Case::thick(l, r))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn holds(name: &str, p: &Params) -> bool {
        let case = lookup(name).unwrap().case(p).unwrap();
        case.lhs.explode().unwrap() == case.rhs.explode().unwrap()
    }

    #[test]
    fn registry_names_are_unique() {
        let mut names: Vec<_> = registry().iter().map(|s| s.name).collect();
        let n = names.len();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), n);
        assert_eq!(n, 17);
    }

    #[test]
    fn reversed_sign_examples() {
        assert_eq!(reversed_sign(&[2, 1, 0]), Some(1));
        assert_eq!(reversed_sign(&[1, 2, 0]), Some(-1));
        assert_eq!(reversed_sign(&[0, 1]), Some(-1));
        assert_eq!(reversed_sign(&[1, 1]), None);
    }

    #[test]
    fn r2_census_and_small_cases() {
        let (_, r) = build_thick_r2(1, 1, 2, 2).unwrap();
        assert_eq!(r.summands(), 3);
        assert!(build_thick_r2(1, 1, 3, 1).is_err());
        let p = Params::new().color("i", 1).color("j", 2).int("a", 1).int("b", 1);
        assert!(holds("thick_r2", &p));
    }

    #[test]
    fn r3_unit_thickness_is_thin_r3() {
        assert!(holds("thick_r3", &r3_params(1, 2, 1, 1, 1)));
        let (_, r) = build_thick_r3(1, 1, 1, 2, 1).unwrap();
        assert_eq!(r.summands(), 2);
    }

    #[test]
    fn r3_term_count_for_c2() {
        // t=0 plain square; t=1 the triples of P(1,1) with c^{(1)} = 1
        let (_, r) = build_thick_r3(1, 1, 2, 1, 2).unwrap();
        assert_eq!(r.summands(), 1 + 3);
    }

    #[test]
    fn flatten_at_x0_matches_r3() {
        let (_, r3) = build_thick_r3(1, 2, 1, 1, 2).unwrap();
        let (_, plus) = build_flatten_plus(1, 2, 1, 0, 1, 2).unwrap();
        let (_, minus) = build_flatten_minus(1, 2, 1, 0, 1, 2).unwrap();
        let e = r3.explode().unwrap();
        assert_eq!(plus.explode().unwrap(), e);
        assert_eq!(minus.explode().unwrap(), e);
    }

    #[test]
    fn general_digon_finds_a_single_schur() {
        let p = |v: &[u32]| Partition::new(v.to_vec()).unwrap();
        let lhs = digon(1, 1, 1, &p(&[2]), &p(&[])).unwrap();
        let rhs = general_digon_rhs(1, 1, 1, &p(&[2]), &p(&[]), &lhs).unwrap().unwrap();
        assert_eq!(rhs.explode().unwrap(), D::dot(1, 2, &p(&[1])).explode().unwrap());
        let lhs = digon(1, 1, 1, &p(&[]), &p(&[2])).unwrap();
        let rhs = general_digon_rhs(1, 1, 1, &p(&[]), &p(&[2]), &lhs).unwrap().unwrap();
        assert_eq!(rhs.explode().unwrap(), D::dot(1, 2, &p(&[1])).scale(-1).explode().unwrap());
    }

    #[test]
    fn digon_grid_has_nonvanishing_general_cases() {
        let spec = lookup("digon_eval").unwrap();
        let nonzero = spec
            .tuples(&GridConfig::default())
            .into_iter()
            .filter(|t| t.get_text("kind").unwrap() == "general")
            .filter(|t| !spec.case(t).unwrap().lhs.explode().unwrap().is_zero())
            .count();
        assert!(nonzero >= 10, "{nonzero}");
    }
}
