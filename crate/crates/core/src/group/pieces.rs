//! Pieces of a symmetrized relator set (small cancellation theory).

use std::collections::BTreeSet;

use crate::words::{cyclic_reduce, Word};

/// All cyclic permutations of the cyclically reduced form of `r` and of `r⁻¹`.
pub fn symmetrized_closure(r: &Word) -> BTreeSet<Word> {
    let core = cyclic_reduce(r).0;
    let mut out = BTreeSet::new();
    for base in [
        core.representative().clone(),
        core.representative().inverse(),
    ] {
        let letters = base.letters();
        for k in 0..letters.len() {
            let rotated: Vec<_> = letters[k..].iter().chain(&letters[..k]).copied().collect();
            out.insert(Word::from_letters(&rotated));
        }
    }
    out
}

/// Nonempty common prefixes of distinct elements of the symmetrized closure of `{r}`.
///
/// Pass the full relator, e.g. `(ab)^n`.
pub fn pieces(r: &Word) -> BTreeSet<Word> {
    let closure: Vec<Word> = symmetrized_closure(r).into_iter().collect();
    let mut out = BTreeSet::new();
    for (i, w1) in closure.iter().enumerate() {
        for w2 in &closure[i + 1..] {
            let common = w1
                .letters()
                .iter()
                .zip(w2.letters())
                .take_while(|(x, y)| x == y)
                .count();
            for k in 1..=common {
                out.insert(Word::from_letters(&w1.letters()[..k]));
            }
        }
    }
    out
}
