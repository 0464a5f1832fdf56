//! Computations in the even Heckoid groups of the trivial knot,
//! `H(0;n) = <a, b | (ab)^n>`.
//!
//! The crate covers the whole pipeline from a slope `s = q/p` to a decision
//! about the element its simple loop represents:
//!
//! * [`slopes`]: exact extended rationals and continued fractions.
//! * [`words`]: free-group words over `{a, b}`, cyclic words and their
//!   cyclic S-sequences.
//! * [`riley`]: the slope word `u_{q/p}` of the upper presentation.
//! * [`group`]: normal forms in `Z * Z/n`, conjugacy, classification, a
//!   Dehn-style solver and small-cancellation pieces.
//! * [`farey`]: the reflection group `Γ(0;n)` acting on the Farey boundary
//!   and reduction of slopes into `[1/n, 1] ∪ {∞, 0}`.
//! * [`hecke`]: the floating-point representation into the Hecke group,
//!   used as an independent numerical oracle.
//! * [`harness`]: enumeration sweeps checking the classification theorems.

pub mod error;
pub mod farey;
pub mod group;
pub mod harness;
pub mod hecke;
pub mod riley;
pub mod slopes;
pub mod words;

mod rotation;

pub use error::{Error, Result};
pub use farey::{BoundaryMap, ReductionTrace, Step};
pub use group::{ElementClass, Index, NormalForm, Syllable};
pub use slopes::{ContinuedFraction, Slope};
pub use words::{CyclicWord, Generator, Letter, SSequence, Word};

use std::str::FromStr;

/// A CLI-style argument that is either a word over `{a, b}` or a slope.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WordOrSlope {
    Word(Word),
    Slope(Slope),
}

impl WordOrSlope {
    /// The word itself, or the slope word `u_s` for a slope.
    pub fn to_word(&self) -> Result<Word> {
        match self {
            WordOrSlope::Word(w) => Ok(w.clone()),
            WordOrSlope::Slope(s) => Ok(riley::riley_word(s)?.word),
        }
    }
}

impl FromStr for WordOrSlope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.bytes().all(|c| matches!(c, b'a' | b'b' | b'A' | b'B')) {
            return Ok(WordOrSlope::Word(s.parse()?));
        }
        Ok(WordOrSlope::Slope(s.parse()?))
    }
}
