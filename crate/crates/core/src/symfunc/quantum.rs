use num_bigint::BigInt;
use num_traits::One;

use super::laurent::QLaurent;
use super::partition::enumerate_partitions;
use crate::error::{Error, Result};

/// `[n] = q^{n-1} + q^{n-3} + ⋯ + q^{1-n}`.
pub fn quantum_int(n: u32) -> QLaurent {
    let mut p = QLaurent::zero();
    for k in 0..n as i32 {
        p = &p + &QLaurent::q_pow(n as i32 - 1 - 2 * k);
    }
    p
}

pub fn quantum_factorial(n: u32) -> QLaurent {
    (1..=n).fold(QLaurent::one(), |acc, k| &acc * &quantum_int(k))
}

/// `[n]! / ([k]! [n-k]!)`, by exact Laurent division.
pub fn quantum_binomial(n: u32, k: u32) -> Result<QLaurent> {
    if k > n {
        return Err(Error::BinomialRange { n: n as usize, k: k as usize });
    }
    let den = &quantum_factorial(k) * &quantum_factorial(n - k);
    quantum_factorial(n).div_exact(&den)
}

/// `Σ_{α∈P(a,b)} q^{2|α|-ab}`.
pub fn quantum_binomial_partition(a: u32, b: u32) -> QLaurent {
    let ab = (a * b) as i32;
    enumerate_partitions(a as usize, b).iter().fold(QLaurent::zero(), |acc, al| {
        &acc + &QLaurent::monomial(2 * al.size() as i32 - ab, BigInt::one())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(quantum_int(2).to_string(), "q^-1 + q");
        assert_eq!(quantum_factorial(1), QLaurent::one());
        assert_eq!(quantum_factorial(0), QLaurent::one());
        assert_eq!(quantum_binomial(4, 2).unwrap().to_string(), "q^-4 + q^-2 + 2 + q^2 + q^4");
        assert!(quantum_binomial(2, 3).is_err());
        assert_eq!(quantum_binomial_partition(1, 1).to_string(), "q^-1 + q");
        assert_eq!(quantum_binomial_partition(3, 0), QLaurent::one());
        assert_eq!(quantum_binomial_partition(2, 2).to_string(), "q^-4 + q^-2 + 2 + q^2 + q^4");
    }

    /// Oracle: q-Pascal recursion `[n,k] = q^{-k}[n-1,k] + q^{n-k}[n-1,k-1]`.
    fn pascal(n: u32, k: u32) -> QLaurent {
        if k == 0 || k == n {
            return QLaurent::one();
        }
        let l = &QLaurent::q_pow(-(k as i32)) * &pascal(n - 1, k);
        let r = &QLaurent::q_pow((n - k) as i32) * &pascal(n - 1, k - 1);
        &l + &r
    }

    #[test]
    fn binomial_matches_pascal_and_partition_sum() {
        for n in 0..=10 {
            for k in 0..=n {
                let b = quantum_binomial(n, k).unwrap();
                assert_eq!(b, pascal(n, k), "[{n} {k}]");
                assert!(b.is_bar_invariant());
                assert_eq!(quantum_binomial_partition(k, n - k), b);
            }
        }
    }
}
