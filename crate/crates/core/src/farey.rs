//! The reflection group `Γ(0;n)` acting on the boundary `Q ∪ {∞}` of the
//! Farey tessellation.
//!
//! `Γ(0;n)` is generated by the reflections in the Farey edges `⟨∞,0⟩`,
//! `⟨∞,1⟩` and `⟨0,1/n⟩`:
//!
//! | map  | action           | matrix          |
//! |------|------------------|-----------------|
//! | `g1` | `x ↦ -x`         | `(-1, 0; 0, 1)` |
//! | `g2` | `x ↦ 2 - x`      | `(-1, 2; 0, 1)` |
//! | `g3` | `x ↦ x/(2nx-1)`  | `(1, 0; 2n, -1)`|
//!
//! Every orbit meets `[1/n, 1] ∪ {∞, 0}` in exactly one point, which
//! [`reduce_slope`] computes.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::group::Index;
use crate::slopes::{in_fundamental_interval, Slope};

/// An integral Möbius map of determinant ±1, up to sign.
#[derive(Clone, Debug)]
pub struct BoundaryMap {
    entries: [BigInt; 4],
    label: Option<String>,
}

impl BoundaryMap {
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Result<BoundaryMap> {
        let mut entries = [a.into(), b.into(), c.into(), d.into()];
        let det = &entries[0] * &entries[3] - &entries[1] * &entries[2];
        if det.abs() != BigInt::one() {
            return Err(Error::BadDeterminant);
        }
        if entries
            .iter()
            .find(|e| !e.is_zero())
            .is_some_and(|e| e.is_negative())
        {
            for e in &mut entries {
                *e = -&*e;
            }
        }
        Ok(BoundaryMap {
            entries,
            label: None,
        })
    }

    pub fn labeled(mut self, label: impl Into<String>) -> BoundaryMap {
        self.label = Some(label.into());
        self
    }

    pub fn identity() -> BoundaryMap {
        BoundaryMap::new(1, 0, 0, 1).unwrap()
    }

    pub fn entries(&self) -> &[BigInt; 4] {
        &self.entries
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn determinant(&self) -> BigInt {
        let [a, b, c, d] = &self.entries;
        a * d - b * c
    }

    pub fn trace(&self) -> BigInt {
        &self.entries[0] + &self.entries[3]
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &BoundaryMap) -> BoundaryMap {
        let [a, b, c, d] = &self.entries;
        let [e, f, g, h] = &other.entries;
        BoundaryMap::new(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)
            .expect("determinants multiply")
    }

    pub fn apply(&self, s: &Slope) -> Slope {
        let [a, b, c, d] = &self.entries;
        let (q, p) = (s.numerator(), s.denominator());
        Slope::new(a * q + b * p, c * q + d * p)
            .expect("unimodular maps send primitive vectors to primitive vectors")
    }
}

/// Projective equality; labels are ignored.
impl PartialEq for BoundaryMap {
    fn eq(&self, other: &Self) -> bool {
        self.entries == other.entries
    }
}

impl Eq for BoundaryMap {}

impl fmt::Display for BoundaryMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = &self.entries;
        write!(f, "({a}, {b}; {c}, {d})")
    }
}

/// The three reflections `g1, g2, g3` generating `Γ(0;n)`.
pub fn generators(n: Index) -> [BoundaryMap; 3] {
    let two_n = BigInt::from(2 * n.get());
    [
        BoundaryMap::new(-1, 0, 0, 1).unwrap().labeled("g1"),
        BoundaryMap::new(-1, 2, 0, 1).unwrap().labeled("g2"),
        BoundaryMap::new(1, 0, two_n, -1).unwrap().labeled("g3"),
    ]
}

pub fn apply(map: &BoundaryMap, s: &Slope) -> Slope {
    map.apply(s)
}

/// One recorded step of a reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Step {
    G1,
    G2,
    G3,
    /// `(g2∘g1)^k`, i.e. `x ↦ x + 2k`.
    Translate(BigInt),
    /// `(g1∘g3)^k` with `k >= 1`, i.e. `x ↦ x/(1 - 2nkx)`. Counts as `k` pierces.
    Parabolic(BigInt),
}

impl Step {
    pub fn map(&self, n: Index) -> BoundaryMap {
        let [g1, g2, g3] = generators(n);
        match self {
            Step::G1 => g1,
            Step::G2 => g2,
            Step::G3 => g3,
            Step::Translate(k) => BoundaryMap::new(1, 2 * k, 0, 1).unwrap(),
            Step::Parabolic(k) => {
                BoundaryMap::new(1, 0, -BigInt::from(2 * n.get()) * k, 1).unwrap()
            }
        }
    }

    /// The step as a sequence of generator indices (0, 1, 2), applied left to right.
    ///
    /// Panics if the exponent does not fit in `usize`.
    pub fn expand(&self) -> Vec<usize> {
        let times = |k: &BigInt| -> usize {
            k.magnitude()
                .try_into()
                .expect("exponent too large to expand")
        };
        match self {
            Step::G1 => vec![0],
            Step::G2 => vec![1],
            Step::G3 => vec![2],
            Step::Translate(k) if k.is_negative() => [1, 0].repeat(times(k)),
            Step::Translate(k) => [0, 1].repeat(times(k)),
            Step::Parabolic(k) => [2, 0].repeat(times(k)),
        }
    }

    fn pierces(&self) -> BigInt {
        match self {
            Step::G3 => BigInt::one(),
            Step::Parabolic(k) => k.clone(),
            _ => BigInt::zero(),
        }
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Step::G1 => f.write_str("g1"),
            Step::G2 => f.write_str("g2"),
            Step::G3 => f.write_str("g3"),
            Step::Translate(k) => write!(f, "(g2g1)^{k}"),
            Step::Parabolic(k) => write!(f, "(g1g3)^{k}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionTrace {
    pub start: Slope,
    pub steps: Vec<(Step, Slope)>,
    pub canonical: Slope,
}

impl ReductionTrace {
    /// Number of `g3` applications, counting `(g1g3)^k` as `k`.
    pub fn pierce_count(&self) -> BigInt {
        self.steps.iter().map(|(s, _)| s.pierces()).sum()
    }

    /// The composite map sending `start` to `canonical`.
    pub fn composite(&self, n: Index) -> BoundaryMap {
        self.steps
            .iter()
            .fold(BoundaryMap::identity(), |acc, (step, _)| {
                step.map(n).compose(&acc)
            })
    }
}

impl Serialize for ReductionTrace {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct StepRecord {
            generator: String,
            result: Slope,
        }
        let steps: Vec<StepRecord> = self
            .steps
            .iter()
            .map(|(s, r)| StepRecord {
                generator: s.to_string(),
                result: r.clone(),
            })
            .collect();
        let mut st = serializer.serialize_struct("ReductionTrace", 3)?;
        st.serialize_field("start", &self.start)?;
        st.serialize_field("canonical", &self.canonical)?;
        st.serialize_field("steps", &steps)?;
        st.end()
    }
}

/// Moves `s` into `[0, 1]` with one translation and at most one `g2`.
fn fold(s: &mut Slope, steps: &mut Vec<(Step, Slope)>, n: Index) {
    let (q, p) = (s.numerator().clone(), s.denominator().clone());
    let k = q.div_floor(&(&p * 2));
    let t = &q - &k * 2 * &p;
    if !k.is_zero() {
        push(Step::Translate(-k), s, steps, n);
    }
    if t > p {
        push(Step::G2, s, steps, n);
    }
}

fn push(step: Step, s: &mut Slope, steps: &mut Vec<(Step, Slope)>, n: Index) {
    *s = step.map(n).apply(s);
    steps.push((step, s.clone()));
}

/// Reduces `s` to the unique point of its `Γ(0;n)`-orbit in `[1/n, 1] ∪ {∞, 0}`.
pub fn reduce_slope(s: &Slope, n: Index) -> ReductionTrace {
    let mut cur = s.clone();
    let mut steps = Vec::new();
    let two_n = BigInt::from(2 * n.get());
    loop {
        if cur.is_infinite() {
            break;
        }
        fold(&mut cur, &mut steps, n);
        if cur.is_zero() || in_fundamental_interval(&cur, n.get()) {
            break;
        }
        // 0 < cur < 1/n: every pierce strictly lowers the denominator.
        let (q, p) = (cur.numerator().clone(), cur.denominator().clone());
        let step_width = &two_n * &q;
        if step_width < p {
            let k = (&p - 1) / &step_width;
            push(Step::Parabolic(k), &mut cur, &mut steps, n);
        } else {
            push(Step::G3, &mut cur, &mut steps, n);
        }
    }
    ReductionTrace {
        start: s.clone(),
        steps,
        canonical: cur,
    }
}

pub fn same_orbit(s: &Slope, t: &Slope, n: Index) -> bool {
    reduce_slope(s, n).canonical == reduce_slope(t, n).canonical
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn idx(n: i64) -> Index {
        Index::new(n).unwrap()
    }

    fn r(q: i64, p: i64) -> Slope {
        Slope::ratio(q, p)
    }

    #[test]
    fn generator_examples() {
        let [g1, g2, g3] = generators(idx(2));
        assert_eq!(g3.apply(&Slope::infinity()), r(1, 4));
        assert_eq!(g2.apply(&r(1, 3)), r(5, 3));
        assert_eq!(g1.apply(&Slope::zero()), Slope::zero());
        assert_eq!(g1.label(), Some("g1"));
    }

    #[test]
    fn generators_fix_their_edges_and_are_involutions() {
        for n in 2..9 {
            let [g1, g2, g3] = generators(idx(n));
            for (g, fixed) in [
                (&g1, [Slope::infinity(), Slope::zero()]),
                (&g2, [Slope::infinity(), Slope::integer(1)]),
                (&g3, [Slope::zero(), r(1, n)]),
            ] {
                for f in fixed {
                    assert_eq!(g.apply(&f), f);
                }
                assert_eq!(g.compose(g), BoundaryMap::identity());
                assert_eq!(g.determinant(), BigInt::from(-1));
            }
        }
    }

    #[test]
    fn apply_examples() {
        let [g1, g2, _] = generators(idx(3));
        assert_eq!(g1.apply(&r(3, 7)), r(-3, 7));
        assert_eq!(generators(idx(3))[2].apply(&r(1, 6)), Slope::infinity());
        assert_eq!(g2.compose(&g1).apply(&r(3, 7)), r(17, 7));
    }

    #[test]
    fn parabolic_at_zero() {
        for n in 2..7 {
            let [g1, _, g3] = generators(idx(n));
            let h = g3.compose(&g1);
            assert_eq!(h.trace().abs(), BigInt::from(2));
            assert_eq!(h.apply(&Slope::zero()), Slope::zero());
        }
    }

    #[test]
    fn bad_determinant_rejected() {
        assert!(BoundaryMap::new(2, 0, 0, 1).is_err());
        assert_eq!(
            BoundaryMap::new(-1, 0, 0, -1).unwrap(),
            BoundaryMap::identity()
        );
    }

    #[test]
    fn reduce_examples() {
        let t = reduce_slope(&r(7, 3), idx(3));
        assert_eq!(t.canonical, r(1, 3));
        assert_eq!(t.steps, vec![(Step::Translate(BigInt::from(-1)), r(1, 3))]);

        assert_eq!(reduce_slope(&r(1, 4), idx(2)).canonical, Slope::infinity());

        let t = reduce_slope(&r(2, 5), idx(4));
        assert_eq!(t.canonical, r(2, 5));
        assert!(t.steps.is_empty());

        assert_eq!(reduce_slope(&r(1, 5), idx(2)).canonical, Slope::integer(1));
        assert_eq!(
            reduce_slope(&Slope::integer(4), idx(5)).canonical,
            Slope::zero()
        );
        assert_eq!(
            reduce_slope(&Slope::integer(-3), idx(5)).canonical,
            Slope::integer(1)
        );
    }

    #[test]
    fn boundary_points_are_fixed() {
        for n in 2..6 {
            for s in [Slope::zero(), r(1, n), Slope::integer(1), Slope::infinity()] {
                let t = reduce_slope(&s, idx(n));
                assert_eq!(t.canonical, s);
                assert!(t.steps.is_empty());
            }
        }
    }

    #[test]
    fn same_orbit_examples() {
        assert!(same_orbit(&r(1, 5), &Slope::integer(1), idx(2)));
        assert!(!same_orbit(&r(1, 2), &r(1, 3), idx(4)));
    }

    #[test]
    fn unit_fractions_need_many_pierces() {
        // 1/p sheds 2n from its denominator per pierce.
        let t = reduce_slope(&r(1, 1001), idx(2));
        assert_eq!(t.canonical, Slope::integer(1));
        assert_eq!(t.pierce_count(), BigInt::from(250));
        assert_eq!(t.steps.len(), 1);
    }

    fn random_slope(rng: &mut ChaCha8Rng, bound: i64) -> Slope {
        loop {
            let q = rng.gen_range(-bound..=bound);
            let p = rng.gen_range(0..=bound);
            if let Ok(s) = Slope::new(q, p) {
                return s;
            }
        }
    }

    #[test]
    fn traces_replay_and_pierces_shrink_denominators() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..2000 {
            let n = idx(rng.gen_range(2..9));
            let s = random_slope(&mut rng, 100_000);
            let t = reduce_slope(&s, n);
            let mut cur = s.clone();
            for (step, result) in &t.steps {
                let before = cur.clone();
                cur = step.map(n).apply(&cur);
                assert_eq!(&cur, result);
                if matches!(step, Step::G3 | Step::Parabolic(_)) && !cur.is_infinite() {
                    assert!(cur.denominator() < before.denominator());
                }
            }
            assert_eq!(t.composite(n).apply(&s), t.canonical);
            if !s.is_infinite() {
                assert!(t.pierce_count() <= *s.denominator());
            }
            let c = &t.canonical;
            assert!(c.is_infinite() || c.is_zero() || in_fundamental_interval(c, n.get()));
        }
    }

    #[test]
    fn expanded_steps_agree_with_closed_forms() {
        for n in 2..5 {
            let gens = generators(idx(n));
            for step in [
                Step::Translate(BigInt::from(3)),
                Step::Translate(BigInt::from(-2)),
                Step::Parabolic(BigInt::from(4)),
                Step::G2,
            ] {
                let composed = step
                    .expand()
                    .into_iter()
                    .fold(BoundaryMap::identity(), |acc, g| gens[g].compose(&acc));
                assert_eq!(composed, step.map(idx(n)), "{step}");
            }
        }
    }

    #[test]
    fn orbit_invariance_under_random_words() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..2000 {
            let n = idx(rng.gen_range(2..7));
            let gens = generators(n);
            let s = random_slope(&mut rng, 1_000_000);
            let mut moved = s.clone();
            for _ in 0..rng.gen_range(0..=20) {
                moved = gens[rng.gen_range(0..3)].apply(&moved);
            }
            let c = reduce_slope(&s, n).canonical;
            assert_eq!(reduce_slope(&moved, n).canonical, c);
            assert_eq!(reduce_slope(&c, n).canonical, c);
        }
    }

    #[test]
    fn canonical_points_are_not_related_by_short_words() {
        // Independent check of uniqueness: breadth-first images of each
        // canonical point never land on a different canonical point.
        for n in 2..5 {
            let n = idx(n);
            let gens = generators(n);
            let mut canon = vec![Slope::infinity(), Slope::zero()];
            for p in 1..=12i64 {
                for q in 1..=p {
                    if q.gcd(&p) == 1 && in_fundamental_interval(&r(q, p), n.get()) {
                        canon.push(r(q, p));
                    }
                }
            }
            for c in &canon {
                let mut frontier = vec![c.clone()];
                for _ in 0..7 {
                    frontier = frontier
                        .iter()
                        .flat_map(|x| gens.iter().map(move |g| g.apply(x)))
                        .collect();
                    for x in &frontier {
                        assert!(x == c || !canon.contains(x), "{c} reaches {x}");
                    }
                }
            }
        }
    }
}
