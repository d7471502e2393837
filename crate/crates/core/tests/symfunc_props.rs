use proptest::prelude::*;

use thickcalc::symfunc::{enumerate_partitions, lr_coeff, schur_bialternant, schur_giambelli};
use thickcalc::Partition;

fn sorted(rows: usize, cols: u32) -> impl Strategy<Value = Partition> {
    proptest::collection::vec(0..=cols, rows).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn lr_is_symmetric(a in sorted(3, 3), b in sorted(2, 3), g in sorted(4, 4)) {
        prop_assert_eq!(lr_coeff(&a, &b, &g), lr_coeff(&b, &a, &g));
    }

    #[test]
    fn lr_commutes_with_conjugation(a in sorted(3, 2), b in sorted(2, 2), g in sorted(4, 4)) {
        prop_assert_eq!(lr_coeff(&a, &b, &g), lr_coeff(&a.conjugate(), &b.conjugate(), &g.conjugate()));
    }

    #[test]
    fn lr_vanishes_off_degree(a in sorted(2, 3), b in sorted(2, 3), g in sorted(3, 4)) {
        prop_assume!(a.size() + b.size() != g.size());
        prop_assert_eq!(lr_coeff(&a, &b, &g), 0.into());
    }

    #[test]
    fn rectangle_duality(rows in 1usize..=3, cols in 1u32..=3, seed in sorted(3, 3), other in sorted(3, 3)) {
        prop_assume!(seed.fits(rows, cols) && other.fits(rows, cols));
        let rect = Partition::rectangle(rows, cols);
        let hat = seed.rect_complement(rows, cols).unwrap();
        prop_assert_eq!(lr_coeff(&seed, &hat, &rect), 1.into());
        let want = if other == hat { 1 } else { 0 };
        prop_assert_eq!(lr_coeff(&seed, &other, &rect), want.into());
    }

    #[test]
    fn giambelli_matches_bialternant(al in sorted(3, 3), m in 1usize..=4) {
        prop_assert_eq!(schur_giambelli(&al, m), schur_bialternant(&al.conjugate(), m));
    }
}

#[test]
fn unsorted_parts_are_rejected() {
    proptest!(|(v in proptest::collection::vec(0u32..5, 2..5))| {
        let ok = v.windows(2).all(|w| w[0] >= w[1]);
        prop_assert_eq!(Partition::new(v).is_ok(), ok);
    });
}

#[test]
fn box_counts_are_binomial() {
    for rows in 0..=4usize {
        for cols in 0..=4u32 {
            let n = rows + cols as usize;
            let binom = (1..=rows).fold(1usize, |acc, i| acc * (n + 1 - i) / i);
            assert_eq!(enumerate_partitions(rows, cols).len(), binom);
        }
    }
}
