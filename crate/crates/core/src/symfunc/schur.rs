use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::partition::{partitions_of, Partition};
use super::poly::ExactPoly;
use crate::error::{Error, Result};

/// Signed permutations of `0..n` (Heap's algorithm), as `(perm, sign)`.
pub(crate) fn signed_permutations(n: usize) -> Vec<(Vec<usize>, i32)> {
    let mut out = Vec::new();
    let mut a: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    let mut sign = 1;
    out.push((a.clone(), sign));
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            sign = -sign;
            out.push((a.clone(), sign));
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// `Δ = ∏_{r<s} (x_r - x_s)` in `m` variables.
pub fn vandermonde(m: usize) -> ExactPoly {
    let mut acc = ExactPoly::one(m);
    for r in 0..m {
        for s in (r + 1)..m {
            let lin = &ExactPoly::var(m, r) - &ExactPoly::var(m, s);
            acc = &acc * &lin;
        }
    }
    acc
}

/// `det |x_i^{e_j}|` for the given exponent row.
fn alternant(exps: &[i32]) -> ExactPoly {
    let m = exps.len();
    let mut p = ExactPoly::zero(m);
    for (perm, sign) in signed_permutations(m) {
        let mut e = vec![0; m];
        for (i, &j) in perm.iter().enumerate() {
            e[i] = exps[j];
        }
        p.add_term(e, BigInt::from(sign));
    }
    p
}

/// Schur polynomial as the ratio of the alternant `|x_i^{α_j+m-j}|` by `Δ`.
///
/// Zero when `α` has more than `m` nonzero parts.
pub fn schur_bialternant(alpha: &Partition, m: usize) -> ExactPoly {
    assert!(m >= 1, "need at least one variable");
    if alpha.len() > m {
        return ExactPoly::zero(m);
    }
    let exps: Vec<i32> = (0..m).map(|j| (alpha.part(j) + (m - 1 - j) as u32) as i32).collect();
    alternant(&exps)
        .div_exact(&vandermonde(m))
        .expect("alternant is divisible by the Vandermonde product")
}

/// `ε_k(x_1..x_m)`; zero for `k < 0` or `k > m`.
pub fn elementary(k: i64, m: usize) -> ExactPoly {
    let mut p = ExactPoly::zero(m);
    if k < 0 || k as usize > m {
        return p;
    }
    let k = k as usize;
    fn rec(start: usize, left: usize, m: usize, cur: &mut Vec<i32>, p: &mut ExactPoly) {
        if left == 0 {
            p.add_term(cur.clone(), BigInt::one());
            return;
        }
        for i in start..=(m - left) {
            cur[i] = 1;
            rec(i + 1, left - 1, m, cur, p);
            cur[i] = 0;
        }
    }
    rec(0, k, m, &mut vec![0; m], &mut p);
    p
}

/// Determinant of a square matrix of polynomials by first-row Laplace expansion,
/// memoized on the set of remaining columns.
pub fn poly_determinant(mat: &[Vec<ExactPoly>], arity: usize) -> ExactPoly {
    let n = mat.len();
    if n == 0 {
        return ExactPoly::one(arity);
    }
    let mut memo: HashMap<u32, ExactPoly> = HashMap::new();
    fn minor(
        mat: &[Vec<ExactPoly>],
        row: usize,
        cols: u32,
        arity: usize,
        memo: &mut HashMap<u32, ExactPoly>,
    ) -> ExactPoly {
        let n = mat.len();
        if row == n {
            return ExactPoly::one(arity);
        }
        if let Some(p) = memo.get(&cols) {
            return p.clone();
        }
        let mut acc = ExactPoly::zero(arity);
        let mut sign = 1;
        for j in 0..n {
            if cols & (1 << j) == 0 {
                continue;
            }
            if !mat[row][j].is_zero() {
                let sub = minor(mat, row + 1, cols & !(1 << j), arity, memo);
                let term = &mat[row][j] * &sub;
                if sign > 0 {
                    acc += &term;
                } else {
                    acc -= &term;
                }
            }
            sign = -sign;
        }
        memo.insert(cols, acc.clone());
        acc
    }
    minor(mat, 0, (1u32 << n) - 1, arity, &mut memo)
}

/// Giambelli form: returns `π_{ᾱ} = det[ε_{α_i+j-i}]` in `m` variables.
pub fn schur_giambelli(alpha: &Partition, m: usize) -> ExactPoly {
    assert!(m >= 1, "need at least one variable");
    let a = alpha.len();
    let mat: Vec<Vec<ExactPoly>> = (0..a)
        .map(|i| {
            (0..a)
                .map(|j| elementary(alpha.part(i) as i64 + j as i64 - i as i64, m))
                .collect()
        })
        .collect();
    poly_determinant(&mat, m)
}

/// Schur polynomial as a sum over semistandard tableaux; used internally for
/// basis changes, cross-checked against the other two constructions.
pub fn schur_tableaux(alpha: &Partition, m: usize) -> Arc<ExactPoly> {
    static CACHE: OnceLock<Mutex<HashMap<(Partition, usize), Arc<ExactPoly>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.lock().unwrap().get(&(alpha.clone(), m)) {
        return p.clone();
    }
    let p = Arc::new(tableaux_sum(alpha, m));
    cache.lock().unwrap().insert((alpha.clone(), m), p.clone());
    p
}

fn tableaux_sum(alpha: &Partition, m: usize) -> ExactPoly {
    let mut p = ExactPoly::zero(m);
    if alpha.len() > m {
        return p;
    }
    let shape = alpha.parts().to_vec();
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c)))
        .collect();
    let mut fill: Vec<Vec<usize>> = shape.iter().map(|&l| vec![0; l as usize]).collect();
    let mut weight = vec![0i32; m];
    fn rec(
        idx: usize,
        cells: &[(usize, usize)],
        fill: &mut Vec<Vec<usize>>,
        weight: &mut Vec<i32>,
        m: usize,
        p: &mut ExactPoly,
    ) {
        if idx == cells.len() {
            p.add_term(weight.clone(), BigInt::one());
            return;
        }
        let (r, c) = cells[idx];
        let lo_row = if c > 0 { fill[r][c - 1] } else { 0 };
        let lo_col = if r > 0 { fill[r - 1][c] + 1 } else { 0 };
        for v in lo_row.max(lo_col)..m {
            fill[r][c] = v;
            weight[v] += 1;
            rec(idx + 1, cells, fill, weight, m, p);
            weight[v] -= 1;
        }
    }
    rec(0, &cells, &mut fill, &mut weight, m, &mut p);
    p
}

/// Expand a symmetric polynomial in the Schur basis by peeling off leading
/// monomials (the Schur basis is unitriangular with respect to them).
pub fn schur_expand(poly: &ExactPoly) -> Result<BTreeMap<Partition, BigInt>> {
    let m = poly.arity();
    let mut rem = poly.clone();
    let mut out = BTreeMap::new();
    while let Some((e, c)) = rem.leading().map(|(e, c)| (e.clone(), c.clone())) {
        if e.iter().any(|&k| k < 0) {
            return Err(Error::InvalidPartition(format!("negative exponent {e:?}")));
        }
        let lambda = Partition::new(e.iter().map(|&k| k as u32).collect())
            .map_err(|_| Error::InvalidPartition(format!("polynomial is not symmetric at {e:?}")))?;
        let s = schur_tableaux(&lambda, m);
        rem -= &s.scale(&c);
        out.insert(lambda, c);
    }
    Ok(out)
}

fn product_expansion(factors: &[Partition], m: usize) -> Arc<BTreeMap<Partition, BigInt>> {
    static CACHE: OnceLock<Mutex<HashMap<(Vec<Partition>, usize), Arc<BTreeMap<Partition, BigInt>>>>> =
        OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (factors.to_vec(), m);
    if let Some(r) = cache.lock().unwrap().get(&key) {
        return r.clone();
    }
    let mut prod = ExactPoly::one(m);
    for f in factors {
        prod = &prod * &schur_tableaux(f, m);
    }
    let r = Arc::new(schur_expand(&prod).expect("products of Schur polynomials are symmetric"));
    cache.lock().unwrap().insert(key, r.clone());
    r
}

/// Schur expansion of `∏ π_{α_i}` in `m` variables.
pub fn schur_product(factors: &[Partition], m: usize) -> BTreeMap<Partition, BigInt> {
    (*product_expansion(factors, m)).clone()
}

/// `c_{α,β}^{γ}`, computed in `m` variables for any `m >= ℓ(γ)`.
pub fn lr_coeff_in(alpha: &Partition, beta: &Partition, gamma: &Partition, m: usize) -> BigInt {
    assert!(m >= gamma.len().max(1));
    product_expansion(&[alpha.clone(), beta.clone()], m)
        .get(gamma)
        .cloned()
        .unwrap_or_default()
}

/// Littlewood-Richardson coefficient `c_{α,β}^{γ}`.
pub fn lr_coeff(alpha: &Partition, beta: &Partition, gamma: &Partition) -> BigInt {
    lr_coeff_in(alpha, beta, gamma, gamma.len().max(1))
}

/// Coefficient of `π_β` in `π_{α_1} ⋯ π_{α_k}`.
pub fn multi_lr_coeff(alphas: &[Partition], beta: &Partition) -> BigInt {
    assert!(alphas.len() >= 2, "need at least two factors");
    product_expansion(alphas, beta.len().max(1))
        .get(beta)
        .cloned()
        .unwrap_or_default()
}

/// Skew Schur coefficients `β ↦ c_{α,β}^{γ}`.
pub fn skew_coefficients(gamma: &Partition, alpha: &Partition) -> BTreeMap<Partition, BigInt> {
    let mut out = BTreeMap::new();
    if alpha.size() > gamma.size() {
        return out;
    }
    for beta in partitions_of(gamma.size() - alpha.size()) {
        let c = lr_coeff(alpha, &beta, gamma);
        if !c.is_zero() {
            out.insert(beta, c);
        }
    }
    out
}

/// `π_{γ/α} = Σ_β c_{α,β}^{γ} π_β` in `m` variables.
pub fn skew_schur(gamma: &Partition, alpha: &Partition, m: usize) -> ExactPoly {
    let mut p = ExactPoly::zero(m);
    for (beta, c) in skew_coefficients(gamma, alpha) {
        p += &schur_tableaux(&beta, m).scale(&c);
    }
    p
}

/// Determinant form `det[ε_{γ̄_i - ᾱ_j - i + j}]` of the skew Schur polynomial.
pub fn skew_schur_det(gamma: &Partition, alpha: &Partition, m: usize) -> ExactPoly {
    let gc = gamma.conjugate();
    let ac = alpha.conjugate();
    let n = gc.len().max(ac.len());
    let mat: Vec<Vec<ExactPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let k = gc.part(i) as i64 - ac.part(j) as i64 - i as i64 + j as i64;
                    elementary(k, m)
                })
                .collect()
        })
        .collect();
    poly_determinant(&mat, m)
}
