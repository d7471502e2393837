//! Permutations of strands and their canonical reduced words.
//!
//! A word lists crossing positions (0-based) from the top of the diagram down.
//! A permutation is stored as the arrangement at the top: position `p` holds
//! the strand that started at bottom position `perm[p]`.

pub type Word = Vec<u8>;
pub type Perm = Vec<u8>;

pub fn identity(k: usize) -> Perm {
    (0..k as u8).collect()
}

/// Arrangement produced by a word read bottom-up from the identity.
pub fn perm_of_word(word: &[u8], k: usize) -> Perm {
    let mut p = identity(k);
    for &c in word.iter().rev() {
        p.swap(c as usize, c as usize + 1);
    }
    p
}

pub fn inversions(perm: &[u8]) -> usize {
    let mut n = 0;
    for i in 0..perm.len() {
        for j in (i + 1)..perm.len() {
            if perm[i] > perm[j] {
                n += 1;
            }
        }
    }
    n
}

pub fn is_reduced(word: &[u8], k: usize) -> bool {
    inversions(&perm_of_word(word, k)) == word.len()
}

/// Lexicographically smallest reduced word: repeatedly strip the leftmost
/// top descent.
pub fn canonical_word(perm: &[u8]) -> Word {
    let mut p = perm.to_vec();
    let mut w = Vec::new();
    'outer: loop {
        for k in 0..p.len().saturating_sub(1) {
            if p[k] > p[k + 1] {
                w.push(k as u8);
                p.swap(k, k + 1);
                continue 'outer;
            }
        }
        return w;
    }
}

/// Sign of the permutation.
pub fn sign(perm: &[u8]) -> i32 {
    if inversions(perm) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Longest element `w₀` on `k` strands.
pub fn longest(k: usize) -> Perm {
    (0..k as u8).rev().collect()
}

/// Crossing word of `b` strands passing over to the left of `a` strands:
/// top positions `0..b` come from bottom `a..a+b`, the rest from `0..a`.
pub fn block_transposition(a: usize, b: usize) -> Perm {
    (a..a + b).chain(0..a).map(|x| x as u8).collect()
}

/// Strand colors at the top of the arrangement.
pub fn top_colors(perm: &[u8], bottom: &[u8]) -> Vec<u8> {
    perm.iter().map(|&s| bottom[s as usize]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_perms(k: usize) -> Vec<Perm> {
        crate::symfunc::signed_permutations(k)
            .into_iter()
            .map(|(p, _)| p.into_iter().map(|x| x as u8).collect())
            .collect()
    }

    /// Every reduced word by breadth-first expansion, lexicographically sorted.
    fn reduced_words(perm: &[u8]) -> Vec<Word> {
        let k = perm.len();
        let len = inversions(perm);
        let mut frontier = vec![Vec::<u8>::new()];
        for _ in 0..len {
            let mut next = Vec::new();
            for w in &frontier {
                for c in 0..k.saturating_sub(1) as u8 {
                    let mut v = w.clone();
                    v.push(c);
                    if is_reduced(&v, k) {
                        next.push(v);
                    }
                }
            }
            frontier = next;
        }
        let mut out: Vec<Word> = frontier.into_iter().filter(|w| perm_of_word(w, k) == perm).collect();
        out.sort();
        out
    }

    #[test]
    fn canonical_is_lex_smallest_reduced_word() {
        for k in 1..=4 {
            for p in all_perms(k) {
                let w = canonical_word(&p);
                assert_eq!(perm_of_word(&w, k), p);
                assert_eq!(w, reduced_words(&p)[0], "{p:?}");
            }
        }
    }

    #[test]
    fn suffixes_of_canonical_words_are_canonical() {
        for p in all_perms(5) {
            let w = canonical_word(&p);
            for s in 0..=w.len() {
                let tail = &w[s..];
                assert_eq!(canonical_word(&perm_of_word(tail, 5)), tail);
            }
        }
    }

    #[test]
    fn signs_and_longest() {
        assert_eq!(sign(&[1, 0]), -1);
        assert_eq!(sign(&[1, 2, 0]), 1);
        assert_eq!(inversions(&longest(4)), 6);
        assert_eq!(canonical_word(&longest(3)), vec![0, 1, 0]);
        assert_eq!(block_transposition(1, 1), vec![1, 0]);
        assert_eq!(block_transposition(2, 1), vec![2, 0, 1]);
        assert_eq!(inversions(&block_transposition(2, 3)), 6);
    }
}
