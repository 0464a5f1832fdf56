//! Words in the free group `F(a, b)`, cyclic words and cyclic S-sequences.
//!
//! Text format: `a`, `b` are the generators and `A`, `B` their inverses.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rotation::{canonical_rotation, is_rotation, least_rotation, rotated};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Generator {
    A,
    B,
}

impl Generator {
    pub fn other(self) -> Generator {
        match self {
            Generator::A => Generator::B,
            Generator::B => Generator::A,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Generator::A => "a",
            Generator::B => "b",
        })
    }
}

/// A generator with exponent `+1` or `-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub generator: Generator,
    pub inverse: bool,
}

impl Letter {
    pub const A: Letter = Letter::new(Generator::A, false);
    pub const A_INV: Letter = Letter::new(Generator::A, true);
    pub const B: Letter = Letter::new(Generator::B, false);
    pub const B_INV: Letter = Letter::new(Generator::B, true);

    pub const fn new(generator: Generator, inverse: bool) -> Letter {
        Letter { generator, inverse }
    }

    /// `g^e` for `e = ±1`.
    pub fn with_sign(generator: Generator, exponent: i8) -> Letter {
        Letter::new(generator, exponent < 0)
    }

    pub fn inv(self) -> Letter {
        Letter::new(self.generator, !self.inverse)
    }

    pub fn exponent(self) -> i8 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    pub fn is_positive(self) -> bool {
        !self.inverse
    }

    pub fn to_char(self) -> char {
        match (self.generator, self.inverse) {
            (Generator::A, false) => 'a',
            (Generator::A, true) => 'A',
            (Generator::B, false) => 'b',
            (Generator::B, true) => 'B',
        }
    }

    pub fn from_char(c: char) -> Option<Letter> {
        match c {
            'a' => Some(Letter::A),
            'A' => Some(Letter::A_INV),
            'b' => Some(Letter::B),
            'B' => Some(Letter::B_INV),
            _ => None,
        }
    }
}

/// Parses `/[abAB]*/` into raw letters without reducing.
pub fn parse_letters(s: &str) -> Result<Vec<Letter>> {
    s.char_indices()
        .map(|(position, c)| {
            Letter::from_char(c).ok_or_else(|| Error::ParseWord {
                input: s.to_string(),
                found: c,
                position,
            })
        })
        .collect()
}

/// A freely reduced word.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    letters: Vec<Letter>,
}

/// Cancels adjacent inverse pairs.
pub fn free_reduce(raw: &[Letter]) -> Word {
    let mut letters: Vec<Letter> = Vec::with_capacity(raw.len());
    for &l in raw {
        if letters.last() == Some(&l.inv()) {
            letters.pop();
        } else {
            letters.push(l);
        }
    }
    Word { letters }
}

impl Word {
    pub fn empty() -> Word {
        Word::default()
    }

    pub fn from_letters(raw: &[Letter]) -> Word {
        free_reduce(raw)
    }

    pub fn letter(l: Letter) -> Word {
        Word { letters: vec![l] }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|l| l.inv()).collect(),
        }
    }

    /// Free product `self · other`.
    pub fn mul(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        let mut rest = other.letters.as_slice();
        while let (Some(&last), Some(&first)) = (letters.last(), rest.first()) {
            if last != first.inv() {
                break;
            }
            letters.pop();
            rest = &rest[1..];
        }
        letters.extend_from_slice(rest);
        Word { letters }
    }

    pub fn pow(&self, e: i64) -> Word {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let (cyc, conj) = cyclic_reduce(&base);
        let mut core = Vec::with_capacity(cyc.len() * e.unsigned_abs() as usize);
        for _ in 0..e.unsigned_abs() {
            core.extend_from_slice(cyc.letters());
        }
        conj.mul(&Word { letters: core }).mul(&conj.inverse())
    }

    /// `g · self · g⁻¹`.
    pub fn conjugate_by(&self, g: &Word) -> Word {
        g.mul(self).mul(&g.inverse())
    }

    /// Number of letters `a^{±1}` and `b^{±1}`.
    pub fn generator_counts(&self) -> (usize, usize) {
        let a = self
            .letters
            .iter()
            .filter(|l| l.generator == Generator::A)
            .count();
        (a, self.len() - a)
    }

    pub fn exponent_sum(&self, g: Generator) -> i64 {
        self.letters
            .iter()
            .filter(|l| l.generator == g)
            .map(|l| i64::from(l.exponent()))
            .sum()
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        match (self.letters.first(), self.letters.last()) {
            (Some(&f), Some(&l)) => self.len() == 1 || f != l.inv(),
            _ => true,
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.letters
            .iter()
            .try_for_each(|l| write!(f, "{}", l.to_char()))
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Parses and freely reduces.
    fn from_str(s: &str) -> Result<Word> {
        Ok(free_reduce(&parse_letters(s)?))
    }
}

/// A cyclically reduced word considered up to cyclic permutation.
#[derive(Clone, Debug, Default)]
pub struct CyclicWord {
    representative: Word,
}

/// Splits `w = c · r · c⁻¹` with `r` cyclically reduced.
pub fn cyclic_reduce(w: &Word) -> (CyclicWord, Word) {
    let letters = w.letters();
    let mut lo = 0;
    let mut hi = letters.len();
    while hi - lo >= 2 && letters[lo] == letters[hi - 1].inv() {
        lo += 1;
        hi -= 1;
    }
    let core = Word {
        letters: letters[lo..hi].to_vec(),
    };
    let conjugator = Word {
        letters: letters[..lo].to_vec(),
    };
    (
        CyclicWord {
            representative: core,
        },
        conjugator,
    )
}

impl CyclicWord {
    /// Cyclically reduces `w` and forgets the conjugator.
    pub fn new(w: &Word) -> CyclicWord {
        cyclic_reduce(w).0
    }

    pub fn representative(&self) -> &Word {
        &self.representative
    }

    pub fn letters(&self) -> &[Letter] {
        self.representative.letters()
    }

    pub fn len(&self) -> usize {
        self.representative.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representative.is_empty()
    }

    pub fn rotate(&self, k: usize) -> CyclicWord {
        if self.is_empty() {
            return self.clone();
        }
        CyclicWord {
            representative: Word {
                letters: rotated(self.letters(), k % self.len()),
            },
        }
    }

    /// Lexicographically least rotation.
    pub fn canonical(&self) -> Word {
        Word {
            letters: canonical_rotation(self.letters()),
        }
    }

    /// Letter at cyclic position `i`.
    pub fn at(&self, i: usize) -> Letter {
        self.letters()[i % self.len()]
    }
}

impl PartialEq for CyclicWord {
    fn eq(&self, other: &Self) -> bool {
        is_rotation(self.letters(), other.letters())
    }
}

impl Eq for CyclicWord {}

impl Hash for CyclicWord {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.canonical().hash(state);
    }
}

impl fmt::Display for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.representative)
    }
}

/// True iff no `a^{±2}` or `b^{±2}` occurs cyclically.
pub fn is_alternating(cw: &CyclicWord) -> bool {
    let n = cw.len();
    (0..n).all(|i| cw.at(i).generator != cw.at(i + 1).generator)
}

/// The cyclic sequence of lengths of maximal constant-sign blocks,
/// stored as its lexicographically least rotation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SSequence {
    runs: Vec<usize>,
}

impl SSequence {
    /// Canonicalizes an arbitrary rotation of a run list.
    pub fn from_runs(runs: &[usize]) -> SSequence {
        SSequence {
            runs: canonical_rotation(runs),
        }
    }

    pub fn runs(&self) -> &[usize] {
        &self.runs
    }

    pub fn total(&self) -> usize {
        self.runs.iter().sum()
    }

    pub fn max_run(&self) -> usize {
        self.runs.iter().copied().max().unwrap_or(0)
    }
}

impl fmt::Display for SSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("((")?;
        for (i, r) in self.runs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{r}")?;
        }
        f.write_str("))")
    }
}

impl Serialize for SSequence {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.runs.serialize(serializer)
    }
}

pub fn s_sequence(cw: &CyclicWord) -> Result<SSequence> {
    let n = cw.len();
    if n == 0 {
        return Err(Error::EmptyCyclicWord);
    }
    // Start right after a sign change so that no block wraps around.
    let start = match (0..n).find(|&i| cw.at(i + n - 1).is_positive() != cw.at(i).is_positive()) {
        Some(i) => i,
        None => return Ok(SSequence { runs: vec![n] }),
    };
    let mut runs = Vec::new();
    let mut len = 0;
    for i in 0..n {
        if i > 0 && cw.at(start + i).is_positive() != cw.at(start + i - 1).is_positive() {
            runs.push(len);
            len = 0;
        }
        len += 1;
    }
    runs.push(len);
    Ok(SSequence::from_runs(&runs))
}

/// Least rotation index, exposed for callers that store rotations.
pub fn canonical_offset(cw: &CyclicWord) -> usize {
    least_rotation(cw.letters())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn cw(s: &str) -> CyclicWord {
        CyclicWord::new(&w(s))
    }

    #[test]
    fn free_reduce_examples() {
        assert_eq!(w("abB").to_string(), "a");
        assert!(w("aA").is_empty());
        assert_eq!(w("abAB").to_string(), "abAB");
        assert_eq!(w("abBAab").to_string(), "ab");
    }

    #[test]
    fn parser_rejects_foreign_characters() {
        assert!("ab A".parse::<Word>().is_err());
        assert!("abc".parse::<Word>().is_err());
        assert!("a\n".parse::<Word>().is_err());
        assert!("".parse::<Word>().unwrap().is_empty());
        match "aXb".parse::<Word>() {
            Err(Error::ParseWord {
                found, position, ..
            }) => {
                assert_eq!((found, position), ('X', 1));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn cyclic_reduce_examples() {
        let (c, g) = cyclic_reduce(&w("Bab"));
        assert_eq!(c.representative().to_string(), "a");
        assert_eq!(g.to_string(), "B");

        let (c, g) = cyclic_reduce(&w("abAB"));
        assert_eq!(c.representative().to_string(), "abAB");
        assert!(g.is_empty());

        // "AabaB" reduces to "baB" first.
        let raw = parse_letters("AabaB").unwrap();
        let (c, g) = cyclic_reduce(&free_reduce(&raw));
        assert_eq!(c.representative().to_string(), "a");
        assert_eq!(g.to_string(), "b");
        assert_eq!(g.mul(c.representative()).mul(&g.inverse()), w("baB"));

        let (c, _) = cyclic_reduce(&w("abA"));
        assert_eq!(c.representative().to_string(), "b");
    }

    #[test]
    fn cyclic_equality_is_up_to_rotation() {
        assert_eq!(cw("abAB"), cw("BabA"));
        assert_ne!(cw("abAB"), cw("abBA".replace("bB", "").as_str()));
        assert_ne!(cw("ab"), cw("aB"));
        assert_eq!(cw("abAB").canonical(), cw("ABab").canonical());
    }

    #[test]
    fn s_sequence_examples() {
        assert_eq!(s_sequence(&cw("abaBAB")).unwrap().runs(), &[3, 3]);
        assert_eq!(
            s_sequence(&cw("abaBAbabAB")).unwrap(),
            SSequence::from_runs(&[3, 2, 3, 2])
        );
        assert_eq!(s_sequence(&cw("ab")).unwrap().runs(), &[2]);
        assert_eq!(s_sequence(&cw("aB")).unwrap().runs(), &[1, 1]);
        assert_eq!(s_sequence(&cw("")), Err(Error::EmptyCyclicWord));
    }

    #[test]
    fn alternating_examples() {
        assert!(is_alternating(&cw("abAB")));
        assert!(!is_alternating(&cw("aab")));
        assert!(!is_alternating(&cw("a")));
        assert!(!is_alternating(&cw("aba")));
    }

    #[test]
    fn powers_and_conjugates() {
        assert_eq!(w("ab").pow(3).to_string(), "ababab");
        assert_eq!(w("ab").pow(-2).to_string(), "BABA");
        assert_eq!(w("bAa").pow(0), Word::empty());
        assert_eq!(w("Bab").pow(2), w("Baab"));
        assert_eq!(w("a").conjugate_by(&w("b")), w("baB"));
    }

    fn raw_letters() -> impl Strategy<Value = Vec<Letter>> {
        proptest::collection::vec(
            prop_oneof![
                Just(Letter::A),
                Just(Letter::A_INV),
                Just(Letter::B),
                Just(Letter::B_INV)
            ],
            0..60,
        )
    }

    proptest! {
        #[test]
        fn free_reduce_is_idempotent(raw in raw_letters()) {
            let r = free_reduce(&raw);
            prop_assert_eq!(free_reduce(r.letters()), r.clone());
            prop_assert!(r.len() <= raw.len());
            let already = raw.windows(2).all(|p| p[0] != p[1].inv());
            prop_assert_eq!(r.len() == raw.len(), already);
        }

        #[test]
        fn cyclic_reduce_reconstructs(raw in raw_letters()) {
            let word = free_reduce(&raw);
            let (c, g) = cyclic_reduce(&word);
            prop_assert!(c.representative().is_cyclically_reduced());
            prop_assert_eq!(g.mul(c.representative()).mul(&g.inverse()), word);
        }

        #[test]
        fn s_sequence_properties(raw in raw_letters(), k in 0usize..60) {
            let c = CyclicWord::new(&free_reduce(&raw));
            prop_assume!(!c.is_empty());
            let seq = s_sequence(&c).unwrap();
            prop_assert_eq!(seq.total(), c.len());
            prop_assert_eq!(s_sequence(&c.rotate(k)).unwrap(), seq.clone());
            let flipped: Vec<Letter> = c.letters().iter().map(|l| l.inv()).collect();
            let flipped = CyclicWord::new(&Word::from_letters(&flipped));
            prop_assert_eq!(s_sequence(&flipped).unwrap(), seq);
        }

        #[test]
        fn rotation_preserves_cyclic_identity(raw in raw_letters(), k in 0usize..60) {
            let c = CyclicWord::new(&free_reduce(&raw));
            prop_assert_eq!(c.rotate(k), c.clone());
        }
    }
}
