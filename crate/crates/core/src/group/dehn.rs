//! Dehn-style word problem solver for `<a, b | (ab)^n>`.
//!
//! Every subword of a cyclic permutation of `(ab)^{±n}` is a same-sign run
//! of alternating letters. A cyclically reduced word that is trivial in the
//! group contains such a run of length at least `2n - 1`, so replacing runs
//! of length `2n - 1` or `2n` by the inverse of their complement (length 1
//! or 0) reaches the empty word exactly for trivial input.

use super::Index;
use crate::words::{cyclic_reduce, free_reduce, Letter, Word};

/// True iff `y` may follow `x` inside a subword of `(ab)^{±n}`.
fn continues(x: Letter, y: Letter) -> bool {
    x.inverse == y.inverse && x.generator != y.generator
}

/// First run (scanning start positions from 0) of length `>= 2n - 1`,
/// as `(start, run length)`.
fn first_long_run(letters: &[Letter], threshold: usize) -> Option<(usize, usize)> {
    let len = letters.len();
    let at = |i: usize| letters[i % len];
    let starts: Vec<usize> = (0..len)
        .filter(|&i| !continues(at(i + len - 1), at(i)))
        .collect();
    if starts.is_empty() {
        // The whole cyclic word is a single run, e.g. (ab)^k.
        return (len >= threshold).then_some((0, len));
    }
    starts.iter().find_map(|&s| {
        let run = (1..len)
            .take_while(|&k| continues(at(s + k - 1), at(s + k)))
            .count()
            + 1;
        (run >= threshold).then_some((s, run))
    })
}

/// Repeatedly replaces long relator runs; returns a cyclically reduced fixed point.
///
/// The result is empty iff `w = 1` in `H(0;n)`.
pub fn dehn_reduce(w: &Word, n: Index) -> Word {
    let full = 2 * n.get() as usize;
    let threshold = full - 1;
    let mut current = cyclic_reduce(w).0.representative().clone();
    while let Some((start, run)) = first_long_run(current.letters(), threshold) {
        let letters = current.letters();
        let len = letters.len();
        let matched = run.min(full);
        let mut next: Vec<Letter> = Vec::with_capacity(len);
        if matched < full {
            // The run has odd length, so it ends on its first generator; the
            // complement is the other generator with the same sign.
            let first = letters[start];
            let complement = Letter::new(first.generator.other(), first.inverse);
            next.push(complement.inv());
        }
        next.extend((start + matched..start + len).map(|i| letters[i % len]));
        current = cyclic_reduce(&free_reduce(&next))
            .0
            .representative()
            .clone();
    }
    current
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn idx(n: i64) -> Index {
        Index::new(n).unwrap()
    }

    #[test]
    fn examples() {
        assert!(dehn_reduce(&w("ababab"), idx(3)).is_empty());
        assert_eq!(dehn_reduce(&w("ababa"), idx(3)).to_string(), "B");
        assert_eq!(dehn_reduce(&w("abAB"), idx(3)).to_string(), "abAB");
    }

    #[test]
    fn wrapped_runs_are_found() {
        // The run `bab` wraps from the end of `bAba` to its start.
        assert_eq!(dehn_reduce(&w("bAba"), idx(2)).to_string(), "AA");
        assert!(dehn_reduce(&w("bababa"), idx(3)).is_empty());
        assert!(dehn_reduce(&w("BABABA"), idx(3)).is_empty());
        assert_eq!(dehn_reduce(&w("abababab"), idx(3)).to_string(), "ab");
    }

    #[test]
    fn long_runs_collapse_stepwise() {
        // (ab)^7 with n = 3 leaves ab.
        assert_eq!(dehn_reduce(&w("ab").pow(7), idx(3)).to_string(), "ab");
        assert!(dehn_reduce(&w("ab").pow(12), idx(4)).is_empty());
        assert!(dehn_reduce(&w("BA").pow(12), idx(3)).is_empty());
    }

    #[test]
    fn conjugated_relators_vanish() {
        let r = super::super::relator(idx(4));
        let g = w("aaBab");
        let x = r.conjugate_by(&g).mul(&r.inverse().conjugate_by(&w("bA")));
        assert!(dehn_reduce(&x, idx(4)).is_empty());
    }
}
