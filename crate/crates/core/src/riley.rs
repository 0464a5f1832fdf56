//! Slope words `u_{q/p}` of the upper presentation `<a, b | u_r^n>`.
//!
//! With `ε_i = (-1)^{⌊iq/p⌋}` for `1 <= i <= p-1`:
//!
//! * `p` odd: `u = a · û · b^{(-1)^q} · û⁻¹` with `û = b^{ε_1} a^{ε_2} ⋯ b^{ε_{p-2}} a^{ε_{p-1}}`,
//! * `p` even: `u = a · û · a⁻¹ · û⁻¹` with `û = b^{ε_1} a^{ε_2} ⋯ a^{ε_{p-2}} b^{ε_{p-1}}`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::slopes::Slope;
use crate::words::{cyclic_reduce, s_sequence, Generator, Letter, SSequence, Word};

/// Longest denominator accepted by [`riley_word`]; the word has `2p` letters.
pub const MAX_WORD_DENOMINATOR: i64 = 1 << 26;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SlopeWord {
    pub slope: Slope,
    pub word: Word,
    pub hat_word: Word,
}

/// `(-1)^{⌊iq/p⌋}` with the true floor.
pub fn epsilon(i: i64, p: i64, q: i64) -> Result<i8> {
    if p < 1 || i < 1 || i > p - 1 {
        return Err(Error::EpsilonRange { i, max: p - 1 });
    }
    let f = (i128::from(i) * i128::from(q)).div_euclid(i128::from(p));
    Ok(if f.rem_euclid(2) == 0 { 1 } else { -1 })
}

pub fn riley_word(s: &Slope) -> Result<SlopeWord> {
    if s.is_infinite() {
        return Err(Error::OutOfRange(s.to_string(), "Q (∞ has no slope word)"));
    }
    let p = s
        .denominator()
        .to_i64()
        .filter(|&p| p <= MAX_WORD_DENOMINATOR)
        .ok_or_else(|| Error::SlopeTooLarge(s.denominator().to_string()))?;
    // ε_i and (-1)^q only depend on q mod 2p.
    let q = s
        .numerator()
        .mod_floor(&BigInt::from(2 * p))
        .to_i64()
        .expect("residue below 2p fits in i64");

    let hat: Vec<Letter> = (1..p)
        .map(|i| {
            let g = if i % 2 == 1 {
                Generator::B
            } else {
                Generator::A
            };
            Ok(Letter::with_sign(g, epsilon(i, p, q)?))
        })
        .collect::<Result<_>>()?;
    let hat_word = Word::from_letters(&hat);
    debug_assert_eq!(hat_word.len() as i64, p - 1);

    let middle = if p % 2 == 1 {
        Letter::with_sign(Generator::B, if q % 2 == 0 { 1 } else { -1 })
    } else {
        Letter::A_INV
    };
    let mut letters = Vec::with_capacity(2 * p as usize);
    letters.push(Letter::A);
    letters.extend_from_slice(hat_word.letters());
    letters.push(middle);
    letters.extend_from_slice(hat_word.inverse().letters());
    let word = Word::from_letters(&letters);
    debug_assert_eq!(word.len() as i64, 2 * p);

    Ok(SlopeWord {
        slope: s.clone(),
        word,
        hat_word,
    })
}

/// `CS(s) = CS(u_s)` for `0 < s <= 1`.
pub fn cs_of_slope(s: &Slope) -> Result<SSequence> {
    if s.is_infinite() || s.numerator() <= &BigInt::zero() || s.numerator() > s.denominator() {
        return Err(Error::OutOfRange(s.to_string(), "(0, 1]"));
    }
    let u = riley_word(s)?;
    s_sequence(&cyclic_reduce(&u.word).0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{is_alternating, CyclicWord};

    #[test]
    fn epsilon_examples() {
        assert_eq!(epsilon(3, 5, 2).unwrap(), -1);
        assert_eq!(epsilon(1, 5, 2).unwrap(), 1);
        assert_eq!(epsilon(2, 3, 1).unwrap(), 1);
        // floor(-2/3) = -1
        assert_eq!(epsilon(1, 3, -2).unwrap(), -1);
        assert!(epsilon(0, 5, 2).is_err());
        assert!(epsilon(5, 5, 2).is_err());
        assert!(epsilon(1, 1, 0).is_err());
    }

    fn word_of(num: i64, den: i64) -> String {
        riley_word(&Slope::ratio(num, den))
            .unwrap()
            .word
            .to_string()
    }

    #[test]
    fn slope_word_examples() {
        assert_eq!(word_of(0, 1), "ab");
        assert_eq!(word_of(1, 2), "abAB");
        assert_eq!(word_of(1, 3), "abaBAB");
        assert_eq!(word_of(2, 5), "abaBAbabAB");
        assert_eq!(word_of(1, 1), "aB");
        assert_eq!(word_of(1, 4), "ababABAB");
        assert_eq!(
            riley_word(&Slope::ratio(2, 5))
                .unwrap()
                .hat_word
                .to_string(),
            "baBA"
        );
    }

    #[test]
    fn integer_slopes_use_parity() {
        assert_eq!(word_of(4, 1), "ab");
        assert_eq!(word_of(-3, 1), "aB");
    }

    #[test]
    fn shifting_numerator_by_twice_denominator_is_invisible() {
        for (q, p) in [(1, 3), (2, 5), (3, 8), (-1, 4)] {
            assert_eq!(word_of(q, p), word_of(q + 2 * p, p));
            assert_eq!(word_of(q, p), word_of(q - 6 * p, p));
        }
    }

    #[test]
    fn infinity_is_rejected() {
        assert!(riley_word(&Slope::infinity()).is_err());
        assert!(riley_word(&"1/100000000000".parse().unwrap()).is_err());
    }

    #[test]
    fn cs_examples() {
        assert_eq!(cs_of_slope(&Slope::ratio(1, 3)).unwrap().runs(), &[3, 3]);
        assert_eq!(
            cs_of_slope(&Slope::ratio(2, 5)).unwrap(),
            SSequence::from_runs(&[3, 2, 3, 2])
        );
        assert_eq!(cs_of_slope(&Slope::ratio(1, 4)).unwrap().runs(), &[4, 4]);
        assert_eq!(cs_of_slope(&Slope::integer(1)).unwrap().runs(), &[1, 1]);
        assert!(cs_of_slope(&Slope::zero()).is_err());
        assert!(cs_of_slope(&Slope::ratio(3, 2)).is_err());
    }

    #[test]
    fn words_are_alternating_with_balanced_letters() {
        for p in 1..=120i64 {
            for q in 0..=p {
                if q.gcd(&p) != 1 {
                    continue;
                }
                let u = riley_word(&Slope::ratio(q, p)).unwrap().word;
                assert_eq!(u.len() as i64, 2 * p);
                assert!(u.is_cyclically_reduced());
                assert!(is_alternating(&CyclicWord::new(&u)));
                assert_eq!(u.generator_counts(), (p as usize, p as usize));
            }
        }
    }
}
