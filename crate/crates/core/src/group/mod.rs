//! Exact algebra in `H(0;n) = <a, b | (ab)^n>`.
//!
//! The group is the free product `Z * Z/n` with `a` generating `Z` and
//! `x = ab` generating `Z/n`; substituting `b = a⁻¹x` turns any word into an
//! alternating syllable sequence. Conjugacy and classification use the
//! standard cyclic-reduction criterion for free products. [`dehn_reduce`]
//! works directly with the presentation and serves as a second oracle.

mod dehn;
mod pieces;

use std::collections::VecDeque;
use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rotation::{canonical_rotation, is_rotation};
use crate::words::{Generator, Letter, Word};

pub use dehn::dehn_reduce;
pub use pieces::{pieces, symmetrized_closure};

/// The index `n >= 2` of the Heckoid group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Index(u32);

impl Index {
    pub fn new(n: i64) -> Result<Index> {
        match u32::try_from(n) {
            Ok(v) if v >= 2 => Ok(Index(v)),
            _ => Err(Error::BadIndex(n)),
        }
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// The relator `(ab)^n`.
pub fn relator(n: Index) -> Word {
    "ab".parse::<Word>().unwrap().pow(i64::from(n.get()))
}

/// A syllable of `Z * Z/n`: `a^k` with `k != 0`, or `x^m` with `1 <= m <= n-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Syllable {
    A(i64),
    X(u32),
}

impl Syllable {
    fn same_factor(self, other: Syllable) -> bool {
        matches!(
            (self, other),
            (Syllable::A(_), Syllable::A(_)) | (Syllable::X(_), Syllable::X(_))
        )
    }

    fn inverse(self, n: u32) -> Syllable {
        match self {
            Syllable::A(k) => Syllable::A(-k),
            Syllable::X(m) => Syllable::X((n - m) % n),
        }
    }

    fn is_identity(self) -> bool {
        matches!(self, Syllable::A(0) | Syllable::X(0))
    }

    /// Product of two syllables in the same factor.
    fn combine(self, other: Syllable, n: u32) -> Syllable {
        match (self, other) {
            (Syllable::A(j), Syllable::A(k)) => Syllable::A(j + k),
            (Syllable::X(j), Syllable::X(k)) => Syllable::X((j + k) % n),
            _ => unreachable!("syllables from different factors"),
        }
    }
}

impl fmt::Display for Syllable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Syllable::A(k) => write!(f, "A^{k}"),
            Syllable::X(m) => write!(f, "X^{m}"),
        }
    }
}

/// Reduced form of an element of `Z * Z/n`; empty for the identity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NormalForm {
    syllables: Vec<Syllable>,
    n: Index,
}

impl NormalForm {
    pub fn identity(n: Index) -> NormalForm {
        NormalForm {
            syllables: Vec::new(),
            n,
        }
    }

    /// Reduces an arbitrary syllable list (exponents of `X` taken mod `n`).
    pub fn from_syllables(syllables: impl IntoIterator<Item = Syllable>, n: Index) -> NormalForm {
        let mut nf = NormalForm::identity(n);
        for s in syllables {
            nf.push(s);
        }
        nf
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn index(&self) -> Index {
        self.n
    }

    pub fn len(&self) -> usize {
        self.syllables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Right-multiplies by one syllable.
    pub fn push(&mut self, s: Syllable) {
        let n = self.n.get();
        let s = match s {
            Syllable::X(m) => Syllable::X(m % n),
            a => a,
        };
        if s.is_identity() {
            return;
        }
        match self.syllables.last_mut() {
            Some(top) if top.same_factor(s) => {
                let merged = top.combine(s, n);
                if merged.is_identity() {
                    self.syllables.pop();
                } else {
                    *top = merged;
                }
            }
            _ => self.syllables.push(s),
        }
    }

    pub fn push_letter(&mut self, l: Letter) {
        let n = self.n.get();
        match (l.generator, l.inverse) {
            (Generator::A, false) => self.push(Syllable::A(1)),
            (Generator::A, true) => self.push(Syllable::A(-1)),
            // b = a⁻¹x
            (Generator::B, false) => {
                self.push(Syllable::A(-1));
                self.push(Syllable::X(1));
            }
            // b⁻¹ = x⁻¹a
            (Generator::B, true) => {
                self.push(Syllable::X(n - 1));
                self.push(Syllable::A(1));
            }
        }
    }

    pub fn mul(&self, other: &NormalForm) -> NormalForm {
        let mut out = self.clone();
        for &s in &other.syllables {
            out.push(s);
        }
        out
    }

    pub fn inverse(&self) -> NormalForm {
        let n = self.n.get();
        NormalForm {
            syllables: self.syllables.iter().rev().map(|s| s.inverse(n)).collect(),
            n: self.n,
        }
    }

    /// A word in `{a, b}` representing the same element (`x` spelled `ab`).
    pub fn to_word(&self) -> Word {
        let mut letters = Vec::new();
        for &s in &self.syllables {
            match s {
                Syllable::A(k) => {
                    let l = if k > 0 { Letter::A } else { Letter::A_INV };
                    letters.extend(std::iter::repeat_n(l, k.unsigned_abs() as usize));
                }
                Syllable::X(m) => {
                    for _ in 0..m {
                        letters.push(Letter::A);
                        letters.push(Letter::B);
                    }
                }
            }
        }
        Word::from_letters(&letters)
    }

    /// Splits `self = c · z · c⁻¹` with `z` cyclically reduced.
    pub fn cyclic_reduce(&self) -> (CyclicNormalForm, NormalForm) {
        let n = self.n.get();
        let mut s: VecDeque<Syllable> = self.syllables.iter().copied().collect();
        let mut conjugator = NormalForm::identity(self.n);
        while s.len() >= 2 {
            let (first, last) = (s[0], s[s.len() - 1]);
            if !first.same_factor(last) {
                break;
            }
            // f·M·l = l⁻¹ · (l·f·M) · l
            conjugator.push(last.inverse(n));
            s.pop_back();
            let merged = last.combine(first, n);
            if merged.is_identity() {
                s.pop_front();
            } else {
                s[0] = merged;
            }
        }
        (
            CyclicNormalForm {
                syllables: s.into(),
                n: self.n,
            },
            conjugator,
        )
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, s) in self.syllables.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str("]")
    }
}

/// A cyclically reduced normal form, compared up to rotation.
#[derive(Clone, Debug)]
pub struct CyclicNormalForm {
    syllables: Vec<Syllable>,
    n: Index,
}

impl CyclicNormalForm {
    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn len(&self) -> usize {
        self.syllables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Least rotation; equal for conjugate elements.
    pub fn canonical(&self) -> Vec<Syllable> {
        canonical_rotation(&self.syllables)
    }

    pub fn as_normal_form(&self) -> NormalForm {
        NormalForm {
            syllables: self.syllables.clone(),
            n: self.n,
        }
    }
}

impl PartialEq for CyclicNormalForm {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && is_rotation(&self.syllables, &other.syllables)
    }
}

impl Eq for CyclicNormalForm {}

pub fn to_normal_form(w: &Word, n: Index) -> NormalForm {
    let mut nf = NormalForm::identity(n);
    for &l in w.letters() {
        nf.push_letter(l);
    }
    nf
}

pub fn to_cyclic_normal_form(w: &Word, n: Index) -> (CyclicNormalForm, NormalForm) {
    to_normal_form(w, n).cyclic_reduce()
}

pub fn is_trivial(w: &Word, n: Index) -> bool {
    to_normal_form(w, n).is_identity()
}

/// Oriented conjugacy in `H(0;n)`.
pub fn are_conjugate(w1: &Word, w2: &Word, n: Index) -> bool {
    to_cyclic_normal_form(w1, n).0 == to_cyclic_normal_form(w2, n).0
}

/// A complete conjugacy invariant: the least rotation of the cyclic normal form.
pub fn conjugacy_key(w: &Word, n: Index) -> Vec<Syllable> {
    to_cyclic_normal_form(w, n).0.canonical()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "class", rename_all = "lowercase")]
pub enum ElementClass {
    Trivial,
    /// Conjugate to a nontrivial power of `x = ab`.
    Torsion {
        order: u32,
    },
    /// Conjugate to `base^power`.
    Peripheral {
        base: Generator,
        power: i64,
    },
    Generic,
}

impl ElementClass {
    pub fn name(&self) -> &'static str {
        match self {
            ElementClass::Trivial => "trivial",
            ElementClass::Torsion { .. } => "torsion",
            ElementClass::Peripheral { .. } => "peripheral",
            ElementClass::Generic => "generic",
        }
    }
}

impl fmt::Display for ElementClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElementClass::Torsion { order } => write!(f, "torsion({order})"),
            ElementClass::Peripheral { base, power } => write!(f, "peripheral({base}, {power})"),
            other => f.write_str(other.name()),
        }
    }
}

pub fn classify(w: &Word, n: Index) -> ElementClass {
    let (cyc, _) = to_cyclic_normal_form(w, n);
    classify_cyclic(&cyc)
}

pub fn classify_cyclic(cyc: &CyclicNormalForm) -> ElementClass {
    let n = cyc.n.get();
    match cyc.syllables() {
        [] => ElementClass::Trivial,
        &[Syllable::X(m)] => ElementClass::Torsion {
            order: n / n.gcd(&m),
        },
        &[Syllable::A(t)] => ElementClass::Peripheral {
            base: Generator::A,
            power: t,
        },
        syl => {
            let matches_b = |a_exp: i64, x_exp: u32| {
                syl.iter().all(|&s| match s {
                    Syllable::A(k) => k == a_exp,
                    Syllable::X(m) => m == x_exp,
                })
            };
            let t = (syl.len() / 2) as i64;
            if matches_b(-1, 1) {
                ElementClass::Peripheral {
                    base: Generator::B,
                    power: t,
                }
            } else if matches_b(1, n - 1) {
                ElementClass::Peripheral {
                    base: Generator::B,
                    power: -t,
                }
            } else {
                ElementClass::Generic
            }
        }
    }
}
