//! Extended rationals `q/p` (with `∞ = 1/0`) and continued fractions.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A point of the extended rational line `Q ∪ {∞}`.
///
/// Always stored in lowest terms with a nonnegative denominator; `∞` is
/// `1/0` and `0` is `0/1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Slope {
    num: BigInt,
    den: BigInt,
}

impl Slope {
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Slope> {
        let (mut num, mut den) = (num.into(), den.into());
        if num.is_zero() && den.is_zero() {
            return Err(Error::Indeterminate);
        }
        if den.is_zero() {
            return Ok(Slope::infinity());
        }
        let g = num.gcd(&den);
        if !g.is_one() {
            num /= &g;
            den /= &g;
        }
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        Ok(Slope { num, den })
    }

    /// Panicking shorthand for small literals.
    pub fn ratio(num: i64, den: i64) -> Slope {
        Slope::new(num, den).expect("0/0 is not a slope")
    }

    pub fn integer(k: impl Into<BigInt>) -> Slope {
        Slope {
            num: k.into(),
            den: BigInt::one(),
        }
    }

    pub fn infinity() -> Slope {
        Slope {
            num: BigInt::one(),
            den: BigInt::zero(),
        }
    }

    pub fn zero() -> Slope {
        Slope::integer(0)
    }

    pub fn numerator(&self) -> &BigInt {
        &self.num
    }

    /// Nonnegative; zero only for `∞`.
    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn is_infinite(&self) -> bool {
        self.den.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one()
    }

    /// Sort key used by enumeration sweeps: denominator first, then numerator.
    pub fn enumeration_key(&self) -> (BigInt, BigInt) {
        (self.den.clone(), self.num.clone())
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_infinite() {
            return f64::INFINITY;
        }
        match (self.num.to_f64(), self.den.to_f64()) {
            (Some(a), Some(b)) => a / b,
            _ => f64::NAN,
        }
    }
}

impl Ord for Slope {
    /// Usual order on `Q`, with `∞` above every rational.
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.is_infinite(), other.is_infinite()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            (false, false) => (&self.num * &other.den).cmp(&(&other.num * &self.den)),
        }
    }
}

impl PartialOrd for Slope {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinite() {
            f.write_str("∞")
        } else if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl Serialize for Slope {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl FromStr for Slope {
    type Err = Error;

    /// Accepts `q/p`, `k`, `∞` and `inf`.
    fn from_str(s: &str) -> Result<Slope> {
        let bad = || Error::ParseSlope(s.to_string());
        let t = s.trim();
        if t == "∞" || t.eq_ignore_ascii_case("inf") {
            return Ok(Slope::infinity());
        }
        let parse_int = |x: &str| -> Result<BigInt> {
            let digits = x.strip_prefix(['+', '-']).unwrap_or(x);
            if digits.is_empty() || !digits.bytes().all(|c| c.is_ascii_digit()) {
                return Err(bad());
            }
            x.parse::<BigInt>().map_err(|_| bad())
        };
        match t.split_once('/') {
            Some((q, p)) => Slope::new(parse_int(q)?, parse_int(p)?).map_err(|_| bad()),
            None => Ok(Slope::integer(parse_int(t)?)),
        }
    }
}

/// A finite continued fraction `[m1, ..., mk] = 1/(m1 + 1/(m2 + ... + 1/mk))`
/// representing a rational in `(0, 1]`.
///
/// Entries are positive and the last entry is at least 2 whenever `k >= 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ContinuedFraction {
    entries: Vec<BigUint>,
}

impl ContinuedFraction {
    pub fn new(entries: Vec<BigUint>) -> Result<ContinuedFraction> {
        let valid = !entries.is_empty()
            && entries.iter().all(|m| !m.is_zero())
            && (entries.len() == 1 || *entries.last().unwrap() >= BigUint::from(2u8));
        if !valid {
            return Err(Error::BadContinuedFraction(
                entries.iter().map(|m| m.to_string()).collect(),
            ));
        }
        Ok(ContinuedFraction { entries })
    }

    pub fn from_u64s(entries: &[u64]) -> Result<ContinuedFraction> {
        ContinuedFraction::new(entries.iter().map(|&m| BigUint::from(m)).collect())
    }

    pub fn entries(&self) -> &[BigUint] {
        &self.entries
    }

    /// `m1`, the leading entry.
    pub fn first(&self) -> &BigUint {
        &self.entries[0]
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl fmt::Display for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, m) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{m}")?;
        }
        f.write_str("]")
    }
}

/// Expands `0 < s <= 1` by the Euclidean algorithm on `(p, q)`.
pub fn continued_fraction(s: &Slope) -> Result<ContinuedFraction> {
    if s.is_infinite() || !s.num.is_positive() || s.num > s.den {
        return Err(Error::OutOfRange(s.to_string(), "(0, 1]"));
    }
    let mut a = s.den.magnitude().clone();
    let mut b = s.num.magnitude().clone();
    let mut entries = Vec::new();
    while !b.is_zero() {
        let (quot, rem) = a.div_rem(&b);
        entries.push(quot);
        a = b;
        b = rem;
    }
    ContinuedFraction::new(entries)
}

pub fn evaluate_cf(cf: &ContinuedFraction) -> Slope {
    // Fold from the tail: x_k = 1/m_k, x_{i} = 1/(m_i + x_{i+1}).
    let mut num = BigInt::zero();
    let mut den = BigInt::one();
    for m in cf.entries.iter().rev() {
        let m = BigInt::from_biguint(Sign::Plus, m.clone());
        let next_den = &m * &den + &num;
        num = den;
        den = next_den;
    }
    Slope::new(num, den).expect("continued fractions have nonzero value")
}

/// True iff `s` is rational with `1/n <= s <= 1`.
pub fn in_fundamental_interval(s: &Slope, n: u32) -> bool {
    if s.is_infinite() {
        return false;
    }
    let n = BigInt::from(n);
    &s.num * &n >= s.den && s.num <= s.den
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cf(xs: &[u64]) -> ContinuedFraction {
        ContinuedFraction::from_u64s(xs).unwrap()
    }

    #[test]
    fn normalization() {
        assert_eq!(Slope::ratio(2, -4), Slope::ratio(-1, 2));
        assert_eq!(Slope::ratio(-1, 0), Slope::infinity());
        assert_eq!(Slope::ratio(0, -7), Slope::zero());
        assert_eq!(Slope::new(0, 0), Err(Error::Indeterminate));
        assert_eq!(Slope::ratio(-3, -6).to_string(), "1/2");
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("3/8".parse::<Slope>().unwrap(), Slope::ratio(3, 8));
        assert_eq!("inf".parse::<Slope>().unwrap(), Slope::infinity());
        assert_eq!("∞".parse::<Slope>().unwrap(), Slope::infinity());
        assert_eq!("-4".parse::<Slope>().unwrap(), Slope::integer(-4));
        assert_eq!("6/4".parse::<Slope>().unwrap().to_string(), "3/2");
        for bad in [
            "", "/", "1/", "/2", "0/0", "1//2", "a", "1/2/3", "--1", "1.5", "+",
        ] {
            assert!(bad.parse::<Slope>().is_err(), "{bad:?} parsed");
        }
        for s in ["0", "1", "-7/3", "∞", "123456789012345678901234567891/2"] {
            assert_eq!(s.parse::<Slope>().unwrap().to_string(), s);
        }
    }

    #[test]
    fn ordering_puts_infinity_last() {
        let mut v = [Slope::infinity(), Slope::ratio(1, 2), Slope::ratio(-3, 1)];
        v.sort();
        assert_eq!(v[0], Slope::integer(-3));
        assert!(v[2].is_infinite());
    }

    #[test]
    fn continued_fraction_examples() {
        assert_eq!(continued_fraction(&Slope::ratio(1, 3)).unwrap(), cf(&[3]));
        assert_eq!(
            continued_fraction(&Slope::ratio(2, 5)).unwrap(),
            cf(&[2, 2])
        );
        assert_eq!(
            continued_fraction(&Slope::ratio(3, 8)).unwrap(),
            cf(&[2, 1, 2])
        );
        assert_eq!(continued_fraction(&Slope::integer(1)).unwrap(), cf(&[1]));
    }

    #[test]
    fn continued_fraction_rejects_out_of_range() {
        for s in [
            Slope::zero(),
            Slope::ratio(-1, 2),
            Slope::ratio(3, 2),
            Slope::infinity(),
        ] {
            assert!(continued_fraction(&s).is_err());
        }
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(evaluate_cf(&cf(&[3])), Slope::ratio(1, 3));
        assert_eq!(evaluate_cf(&cf(&[2, 2])), Slope::ratio(2, 5));
        assert_eq!(evaluate_cf(&cf(&[1])), Slope::integer(1));
        assert_eq!(evaluate_cf(&cf(&[2, 1, 2])), Slope::ratio(3, 8));
    }

    #[test]
    fn bad_continued_fractions() {
        assert!(ContinuedFraction::from_u64s(&[]).is_err());
        assert!(ContinuedFraction::from_u64s(&[2, 1]).is_err());
        assert!(ContinuedFraction::from_u64s(&[0, 3]).is_err());
    }

    #[test]
    fn fundamental_interval() {
        assert!(in_fundamental_interval(&Slope::ratio(1, 4), 4));
        assert!(in_fundamental_interval(&Slope::ratio(2, 5), 4));
        assert!(!in_fundamental_interval(&Slope::ratio(1, 5), 4));
        assert!(in_fundamental_interval(&Slope::integer(1), 2));
        assert!(!in_fundamental_interval(&Slope::ratio(5, 4), 2));
        assert!(!in_fundamental_interval(&Slope::infinity(), 2));
        assert!(!in_fundamental_interval(&Slope::zero(), 2));
    }

    #[test]
    fn round_trip_small_denominators() {
        for p in 1..=300i64 {
            for q in 1..=p {
                if q.gcd(&p) != 1 {
                    continue;
                }
                let s = Slope::ratio(q, p);
                let c = continued_fraction(&s).unwrap();
                if c.len() >= 2 {
                    assert!(*c.entries().last().unwrap() >= BigUint::from(2u8));
                }
                assert_eq!(evaluate_cf(&c), s);
            }
        }
    }
}
