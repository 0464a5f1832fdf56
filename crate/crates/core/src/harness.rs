//! Enumeration sweeps that check the classification of simple loops in
//! `H(0;n)` against the exact oracle, the Dehn solver and the Hecke
//! representation.
//!
//! Reports serialize as JSON Lines: one `record` line per slope followed by
//! one `summary` line. Output is a pure function of the configuration, so
//! two runs with the same seed produce identical bytes. Wall-clock timing
//! is kept on the report but never serialized.

use std::fmt;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::farey::{generators, reduce_slope};
use crate::group::{
    are_conjugate, classify, dehn_reduce, is_trivial, relator, ElementClass, Index,
};
use crate::hecke::{classify_matrix, rho, TraceKind, TRACE_TOLERANCE};
use crate::riley::{cs_of_slope, riley_word};
use crate::slopes::{continued_fraction, in_fundamental_interval, Slope};
use crate::words::{Generator, Letter, SSequence, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OracleSelection {
    Exact,
    Dehn,
    Matrix,
    All,
}

impl OracleSelection {
    pub fn dehn(self) -> bool {
        matches!(self, OracleSelection::Dehn | OracleSelection::All)
    }

    pub fn matrix(self) -> bool {
        matches!(self, OracleSelection::Matrix | OracleSelection::All)
    }
}

impl FromStr for OracleSelection {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(OracleSelection::Exact),
            "dehn" => Ok(OracleSelection::Dehn),
            "matrix" => Ok(OracleSelection::Matrix),
            "all" => Ok(OracleSelection::All),
            other => Err(Error::Config(format!("unknown oracle `{other}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunConfig {
    pub index: Index,
    /// Denominator bound for per-slope checks.
    pub max_denominator: u64,
    /// Denominator bound for the pairwise conjugacy check.
    pub pair_max_denominator: u64,
    /// Random slopes (domain sweep) or random words (cross sweep).
    pub samples: usize,
    pub seed: u64,
    pub oracle: OracleSelection,
    #[serde(skip)]
    pub out: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(index: Index) -> RunConfig {
        RunConfig {
            index,
            max_denominator: 50,
            pair_max_denominator: 20,
            samples: 10_000,
            seed: 42,
            oracle: OracleSelection::All,
            out: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_denominator == 0 || self.pair_max_denominator == 0 {
            return Err(Error::Config("denominator bounds must be positive".into()));
        }
        if self.max_denominator > 1 << 20 || self.pair_max_denominator > 1 << 12 {
            return Err(Error::Config(
                "denominator bound too large for a sweep".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SlopeRecord {
    pub slope: Slope,
    pub word_length: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cs: Option<SSequence>,
    pub class: ElementClass,
    pub canonical: Slope,
    /// Which orientation of `u_{s0}` the slope word is conjugate to.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub orientation: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub check: &'static str,
    pub subject: String,
    pub detail: String,
}

impl Counterexample {
    fn new(check: &'static str, subject: impl fmt::Display, detail: impl Into<String>) -> Self {
        Counterexample {
            check,
            subject: subject.to_string(),
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PairSummary {
    pub max_denominator: u64,
    pub slopes: usize,
    pub pairs_checked: usize,
    pub conjugate_pairs: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepReport {
    pub sweep: &'static str,
    pub config: RunConfig,
    pub records: Vec<SlopeRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pairs: Option<PairSummary>,
    /// Number of individual theorem instances checked.
    pub checks: usize,
    pub counterexamples: Vec<Counterexample>,
    /// Tolerance-zone observations from the floating-point oracle.
    pub warnings: Vec<String>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl SweepReport {
    fn new(sweep: &'static str, cfg: &RunConfig) -> SweepReport {
        SweepReport {
            sweep,
            config: cfg.clone(),
            records: Vec::new(),
            pairs: None,
            checks: 0,
            counterexamples: Vec::new(),
            warnings: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }

    fn absorb(&mut self, outcome: SlopeOutcome) {
        self.checks += outcome.checks;
        self.counterexamples.extend(outcome.counterexamples);
        self.warnings.extend(outcome.warnings);
        if let Some(r) = outcome.record {
            self.records.push(r);
        }
    }

    pub fn summary(&self) -> serde_json::Value {
        serde_json::json!({
            "type": "summary",
            "sweep": self.sweep,
            "config": self.config,
            "records": self.records.len(),
            "pairs": self.pairs,
            "checks": self.checks,
            "counterexamples": self.counterexamples,
            "warnings": self.warnings,
            "passed": self.passed(),
        })
    }

    pub fn write_jsonl<W: Write>(&self, mut out: W) -> Result<()> {
        for r in &self.records {
            let mut line = serde_json::to_value(r).expect("records serialize");
            line.as_object_mut()
                .unwrap()
                .insert("type".into(), "record".into());
            writeln!(out, "{line}")?;
        }
        writeln!(out, "{}", self.summary())?;
        Ok(())
    }

    pub fn write_text<W: Write>(&self, mut out: W) -> Result<()> {
        writeln!(
            out,
            "sweep {} (n = {}, max denominator {}): {} records, {} checks, {} counterexamples, {} warnings",
            self.sweep,
            self.config.index,
            self.config.max_denominator,
            self.records.len(),
            self.checks,
            self.counterexamples.len(),
            self.warnings.len()
        )?;
        if let Some(p) = &self.pairs {
            writeln!(
                out,
                "pairs (max denominator {}): {} slopes, {} pairs, {} conjugate",
                p.max_denominator, p.slopes, p.pairs_checked, p.conjugate_pairs
            )?;
        }
        for c in &self.counterexamples {
            writeln!(
                out,
                "COUNTEREXAMPLE [{}] {}: {}",
                c.check, c.subject, c.detail
            )?;
        }
        for w in &self.warnings {
            writeln!(out, "warning: {w}")?;
        }
        writeln!(out, "{}", if self.passed() { "PASS" } else { "FAIL" })?;
        Ok(())
    }
}

#[derive(Default)]
struct SlopeOutcome {
    record: Option<SlopeRecord>,
    checks: usize,
    counterexamples: Vec<Counterexample>,
    warnings: Vec<String>,
}

impl SlopeOutcome {
    fn check(&mut self, ok: bool, fail: impl FnOnce() -> Counterexample) {
        self.checks += 1;
        if !ok {
            self.counterexamples.push(fail());
        }
    }
}

/// Half-width of the window `[-W, W]` swept by the fundamental-domain check.
pub const DOMAIN_WINDOW: i64 = 4;

/// Reduced rationals `q/p` with `|q/p| <= DOMAIN_WINDOW` accepted by `keep`, ordered by `(p, q)`.
fn rationals_with(max_den: u64, mut keep: impl FnMut(i64, i64) -> bool) -> Vec<Slope> {
    let mut out = Vec::new();
    for p in 1..=max_den as i64 {
        for q in -DOMAIN_WINDOW * p..=DOMAIN_WINDOW * p {
            if q.gcd(&p) == 1 && keep(q, p) {
                out.push(Slope::ratio(q, p));
            }
        }
    }
    out
}

/// All `s = q/p ∈ [1/n, 1]` with `p <= max_den`, ordered by `(p, q)`.
pub fn interval_slopes(n: Index, max_den: u64) -> Vec<Slope> {
    let n = i64::from(n.get());
    rationals_with(max_den, |q, p| q <= p && n * q >= p)
}

/// `CS(s)` against the continued-fraction shape; `None` when it holds.
pub fn cs_lemma_violation(s: &Slope) -> Option<String> {
    let cs = match cs_of_slope(s) {
        Ok(cs) => cs,
        Err(e) => return Some(e.to_string()),
    };
    let cf = continued_fraction(s).ok()?;
    let m1 = cf.first().to_usize()?;
    if cf.len() == 1 {
        (cs.runs() != [m1, m1]).then(|| format!("CS = {cs}, expected (({m1},{m1}))"))
    } else {
        (!cs.runs().iter().all(|&r| r == m1 || r == m1 + 1))
            .then(|| format!("CS = {cs} has a run outside {{{m1},{}}} for {cf}", m1 + 1))
    }
}

/// For `s ∈ [1/n, 1]`, every run of `CS(s)` is at most `n`.
pub fn cs_bound_violation(s: &Slope, n: Index) -> Option<String> {
    if !in_fundamental_interval(s, n.get()) {
        return None;
    }
    match cs_of_slope(s) {
        Ok(cs) if cs.max_run() <= n.get() as usize => None,
        Ok(cs) => Some(format!("CS = {cs} has a run above {n}")),
        Err(e) => Some(e.to_string()),
    }
}

fn matrix_check(
    out: &mut SlopeOutcome,
    subject: &Slope,
    w: &Word,
    n: Index,
    expected: TraceKind,
) -> Option<f64> {
    let m = rho(w, n);
    match classify_matrix(&m, TRACE_TOLERANCE) {
        Ok(tc) => {
            out.checks += 1;
            if tc.kind != expected {
                // Near-parabolic traces are reported, not failed.
                if (tc.trace.abs() - 2.0).abs() <= 10.0 * TRACE_TOLERANCE {
                    out.warnings.push(format!(
                        "{subject}: trace {} in tolerance zone, expected {expected:?}",
                        tc.trace
                    ));
                } else {
                    out.counterexamples.push(Counterexample::new(
                        "matrix",
                        subject,
                        format!(
                            "trace {} classifies {:?}, expected {expected:?}",
                            tc.trace, tc.kind
                        ),
                    ));
                }
            }
            Some(tc.trace)
        }
        Err(e) => {
            out.warnings.push(format!("{subject}: {e}"));
            None
        }
    }
}

/// Parts (1), (3), (4) per slope in `[1/n, 1] ∪ {0}` and part (2) pairwise.
pub fn verify_main_theorem(cfg: &RunConfig) -> Result<SweepReport> {
    cfg.validate()?;
    let started = Instant::now();
    let n = cfg.index;
    let mut report = SweepReport::new("main", cfg);

    let mut slopes = vec![Slope::zero()];
    slopes.extend(interval_slopes(n, cfg.max_denominator));

    let outcomes: Vec<SlopeOutcome> = slopes
        .par_iter()
        .map(|s| {
            let mut out = SlopeOutcome::default();
            let u = match riley_word(s) {
                Ok(u) => u.word,
                Err(e) => {
                    out.check(false, || Counterexample::new("word", s, e.to_string()));
                    return out;
                }
            };
            let class = classify(&u, n);
            out.check(class != ElementClass::Trivial, || {
                Counterexample::new("nontrivial", s, format!("u_s = {u} is trivial"))
            });
            if cfg.oracle.dehn() {
                out.check(!dehn_reduce(&u, n).is_empty(), || {
                    Counterexample::new(
                        "nontrivial-dehn",
                        s,
                        format!("Dehn reduces u_s = {u} to 1"),
                    )
                });
            }
            let in_interval = in_fundamental_interval(s, n.get());
            let mut cs = None;
            let mut trace = None;
            if in_interval {
                out.check(class == ElementClass::Generic, || {
                    Counterexample::new("generic", s, format!("u_s = {u} classifies as {class}"))
                });
                if let Some(v) = cs_bound_violation(s, n) {
                    out.check(false, || Counterexample::new("cs-bound", s, v));
                }
                cs = cs_of_slope(s).ok();
                if cfg.oracle.matrix() {
                    trace = matrix_check(&mut out, s, &u, n, TraceKind::Hyperbolic);
                }
            }
            out.record = Some(SlopeRecord {
                slope: s.clone(),
                word_length: u.len(),
                cs,
                class,
                canonical: reduce_slope(s, n).canonical,
                orientation: None,
                trace,
            });
            out
        })
        .collect();
    for o in outcomes {
        report.absorb(o);
    }

    let pair_slopes = interval_slopes(n, cfg.pair_max_denominator);
    let words: Vec<(Word, Word)> = pair_slopes
        .iter()
        .map(|s| {
            let u = riley_word(s).expect("interval slopes are rational").word;
            let inv = u.inverse();
            (u, inv)
        })
        .collect();
    let conjugate_pairs: Vec<(usize, usize)> = (0..words.len())
        .into_par_iter()
        .flat_map_iter(|i| {
            let words = &words;
            (i + 1..words.len()).filter_map(move |j| {
                let (u, _) = &words[i];
                let (v, v_inv) = &words[j];
                (are_conjugate(u, v, n) || are_conjugate(u, v_inv, n)).then_some((i, j))
            })
        })
        .collect();
    let pairs_checked = words.len() * words.len().saturating_sub(1) / 2;
    report.checks += pairs_checked;
    for &(i, j) in &conjugate_pairs {
        report.counterexamples.push(Counterexample::new(
            "distinct-classes",
            format!("{} ~ {}", pair_slopes[i], pair_slopes[j]),
            "slope words conjugate up to inversion",
        ));
    }
    report.pairs = Some(PairSummary {
        max_denominator: cfg.pair_max_denominator,
        slopes: words.len(),
        pairs_checked,
        conjugate_pairs: conjugate_pairs.len(),
    });
    report.elapsed = started.elapsed();
    Ok(report)
}

fn random_slope(rng: &mut impl Rng, bound: i64) -> Slope {
    loop {
        let q = rng.gen_range(-bound..=bound);
        let p = rng.gen_range(0..=bound);
        if let Ok(s) = Slope::new(q, p) {
            return s;
        }
    }
}

/// Applies `steps` uniformly random generators of `Γ(0;n)`.
pub fn random_orbit_image(rng: &mut impl Rng, s: &Slope, n: Index, steps: usize) -> Slope {
    let gens = generators(n);
    (0..steps).fold(s.clone(), |x, _| gens.choose(rng).unwrap().apply(&x))
}

fn in_canonical_set(s: &Slope, n: Index) -> bool {
    s.is_infinite() || s.is_zero() || in_fundamental_interval(s, n.get())
}

const ORBIT_WORD_LENGTH: usize = 20;

fn check_reduction(out: &mut SlopeOutcome, s: &Slope, n: Index, rng: &mut impl Rng) -> Slope {
    let trace = reduce_slope(s, n);
    let c = trace.canonical.clone();
    out.check(in_canonical_set(&c, n), || {
        Counterexample::new(
            "lands",
            s,
            format!("canonical {c} outside [1/n,1] ∪ {{∞,0}}"),
        )
    });
    out.check(reduce_slope(&c, n).canonical == c, || {
        Counterexample::new("idempotent", s, format!("canonical {c} is not fixed"))
    });
    out.check(trace.composite(n).apply(s) == c, || {
        Counterexample::new(
            "replay",
            s,
            "recorded steps do not reproduce the canonical slope",
        )
    });
    if let Some(p) = s.denominator().to_u64() {
        out.check(trace.pierce_count() <= BigInt::from(p.max(1)), || {
            Counterexample::new(
                "termination",
                s,
                format!("{} pierces", trace.pierce_count()),
            )
        });
    }
    let moved = random_orbit_image(rng, s, n, ORBIT_WORD_LENGTH);
    let moved_c = reduce_slope(&moved, n).canonical;
    out.check(moved_c == c, || {
        Counterexample::new(
            "orbit-invariance",
            s,
            format!("image {moved} reduces to {moved_c}, not {c}"),
        )
    });
    c
}

/// Reduction into the fundamental set plus the conjugacy consequences.
pub fn verify_fundamental_domain(cfg: &RunConfig) -> Result<SweepReport> {
    cfg.validate()?;
    let started = Instant::now();
    let n = cfg.index;
    let mut report = SweepReport::new("domain", cfg);

    let mut slopes = rationals_with(cfg.max_denominator, |_, _| true);
    slopes.push(Slope::infinity());

    let outcomes: Vec<SlopeOutcome> = slopes
        .par_iter()
        .enumerate()
        .map(|(i, s)| {
            let mut rng = ChaCha8Rng::seed_from_u64(
                cfg.seed ^ (i as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15),
            );
            let mut out = SlopeOutcome::default();
            let c = check_reduction(&mut out, s, n, &mut rng);
            if s.is_infinite() {
                return out;
            }
            let u = riley_word(s).expect("finite slope").word;
            let class = classify(&u, n);
            let mut orientation = None;
            let mut trace = None;
            if c.is_infinite() {
                out.check(is_trivial(&u, n), || {
                    Counterexample::new("orbit-of-infinity", s, format!("u_s = {u} is not trivial"))
                });
                if cfg.oracle.dehn() {
                    out.check(dehn_reduce(&u, n).is_empty(), || {
                        Counterexample::new("orbit-of-infinity-dehn", s, format!("Dehn leaves {u}"))
                    });
                }
                if cfg.oracle.matrix() {
                    trace = matrix_check(&mut out, s, &u, n, TraceKind::IdentityLike);
                }
            } else if c.is_zero() {
                out.check(matches!(class, ElementClass::Torsion { .. }), || {
                    Counterexample::new(
                        "orbit-of-zero",
                        s,
                        format!("u_s = {u} classifies as {class}"),
                    )
                });
                if cfg.oracle.matrix() {
                    trace = matrix_check(&mut out, s, &u, n, TraceKind::Elliptic);
                }
            } else {
                let target = riley_word(&c).expect("finite canonical").word;
                let same = are_conjugate(&u, &target, n);
                let inverse = are_conjugate(&u, &target.inverse(), n);
                orientation = Some(match (same, inverse) {
                    (true, true) => "both",
                    (true, false) => "same",
                    (false, true) => "inverse",
                    (false, false) => "none",
                });
                out.check(same || inverse, || {
                    Counterexample::new(
                        "conjugate-to-canonical",
                        s,
                        format!("u_s not conjugate to u_{c}^±1"),
                    )
                });
                if cfg.oracle.matrix() {
                    let (t1, t2) = (rho(&u, n).trace().abs(), rho(&target, n).trace().abs());
                    out.checks += 1;
                    if (t1 - t2).abs() > TRACE_TOLERANCE * t1.max(1.0) {
                        out.counterexamples.push(Counterexample::new(
                            "matrix-trace",
                            s,
                            format!("|tr| {t1} differs from |tr(u_{c})| {t2}"),
                        ));
                    }
                    trace = Some(t1);
                }
            }
            out.record = Some(SlopeRecord {
                slope: s.clone(),
                word_length: u.len(),
                cs: cs_of_slope(s).ok(),
                class,
                canonical: c,
                orientation,
                trace,
            });
            out
        })
        .collect();
    for o in outcomes {
        report.absorb(o);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let samples: Vec<(Slope, u64)> = (0..cfg.samples)
        .map(|_| (random_slope(&mut rng, 1_000_000), rng.gen()))
        .collect();
    let outcomes: Vec<SlopeOutcome> = samples
        .par_iter()
        .map(|(s, seed)| {
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            let mut out = SlopeOutcome::default();
            check_reduction(&mut out, s, n, &mut rng);
            out
        })
        .collect();
    for o in outcomes {
        report.absorb(o);
    }
    report.elapsed = started.elapsed();
    Ok(report)
}

/// A uniformly random freely reduced word of length at most `max_len`.
pub fn random_word(rng: &mut impl Rng, max_len: usize) -> Word {
    const LETTERS: [Letter; 4] = [Letter::A, Letter::A_INV, Letter::B, Letter::B_INV];
    let len = rng.gen_range(0..=max_len);
    let mut letters: Vec<Letter> = Vec::with_capacity(len);
    while letters.len() < len {
        let l = *LETTERS.choose(rng).unwrap();
        if letters.last() != Some(&l.inv()) {
            letters.push(l);
        }
    }
    Word::from_letters(&letters)
}

/// A word that is trivial in `H(0;n)`: cyclic rotations of `(ab)^{±n}`
/// spliced into random positions, then freely reduced.
pub fn random_trivial_word(rng: &mut impl Rng, n: Index, max_len: usize) -> Word {
    let r = relator(n);
    let mut current = Word::empty();
    for _ in 0..rng.gen_range(1..=12) {
        let base = if rng.gen() { r.clone() } else { r.inverse() };
        let k = rng.gen_range(0..base.len());
        let rot: Vec<Letter> = base.letters()[k..]
            .iter()
            .chain(&base.letters()[..k])
            .copied()
            .collect();
        let at = rng.gen_range(0..=current.len());
        let (head, tail) = current.letters().split_at(at);
        let g = random_word(rng, 6);
        let spliced: Vec<Letter> = head
            .iter()
            .chain(g.letters())
            .chain(&rot)
            .chain(g.inverse().letters())
            .chain(tail)
            .copied()
            .collect();
        let next = Word::from_letters(&spliced);
        if next.len() > max_len {
            break;
        }
        current = next;
    }
    current
}

/// A trivial word with one letter replaced or deleted.
pub fn random_near_trivial_word(rng: &mut impl Rng, n: Index, max_len: usize) -> Word {
    let w = random_trivial_word(rng, n, max_len);
    if w.is_empty() {
        return random_word(rng, 3);
    }
    let mut letters = w.letters().to_vec();
    let i = rng.gen_range(0..letters.len());
    if rng.gen() {
        letters.remove(i);
    } else {
        let g = if rng.gen() {
            Generator::A
        } else {
            Generator::B
        };
        letters[i] = Letter::new(g, rng.gen());
    }
    Word::from_letters(&letters)
}

/// One of the three families above, chosen uniformly.
pub fn random_test_word(rng: &mut impl Rng, n: Index, max_len: usize) -> Word {
    match rng.gen_range(0..3) {
        0 => random_word(rng, max_len),
        1 => random_trivial_word(rng, n, max_len),
        _ => random_near_trivial_word(rng, n, max_len),
    }
}

pub const CROSS_WORD_LENGTH: usize = 200;

/// Agreement between the normal-form oracle, the Dehn solver and the matrix representation.
pub fn cross_oracle(cfg: &RunConfig) -> Result<SweepReport> {
    cfg.validate()?;
    let started = Instant::now();
    let n = cfg.index;
    let mut report = SweepReport::new("cross", cfg);

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let words: Vec<Word> = (0..cfg.samples)
        .map(|_| random_test_word(&mut rng, n, CROSS_WORD_LENGTH))
        .collect();
    let oracle = cfg.oracle;
    let outcomes: Vec<SlopeOutcome> = words
        .par_iter()
        .map(|w| {
            let mut out = SlopeOutcome::default();
            let exact = is_trivial(w, n);
            if oracle.dehn() {
                let dehn = dehn_reduce(w, n).is_empty();
                out.check(exact == dehn, || {
                    Counterexample::new(
                        "dehn-vs-normal-form",
                        w,
                        format!("normal form {exact}, Dehn {dehn}"),
                    )
                });
            }
            out
        })
        .collect();
    for o in outcomes {
        report.absorb(o);
    }

    // Relator powers are trivial under every oracle.
    for k in 1..=3i64 {
        let w = relator(n).pow(k).conjugate_by(&random_word(&mut rng, 6));
        let mut out = SlopeOutcome::default();
        out.check(is_trivial(&w, n), || {
            Counterexample::new("relator-power", &w, "normal form nontrivial")
        });
        if oracle.dehn() {
            out.check(dehn_reduce(&w, n).is_empty(), || {
                Counterexample::new("relator-power", &w, "Dehn nontrivial")
            });
        }
        if oracle.matrix() {
            let m = rho(&w, n);
            out.check(m.distance_to_plus_minus_identity() < 1e-9, || {
                Counterexample::new("relator-power", &w, format!("rho = {m}"))
            });
        }
        report.absorb(out);
    }

    if oracle.matrix() {
        let conjugators: Vec<Word> = (0..cfg.samples.min(2000))
            .map(|_| random_word(&mut rng, 6))
            .collect();
        for (i, g) in conjugators.iter().enumerate() {
            let mut out = SlopeOutcome::default();
            let t = (i as i64 % 5) + 1;
            let t = if i % 2 == 0 { t } else { -t };
            let base = if i % 4 < 2 {
                Generator::A
            } else {
                Generator::B
            };
            let peripheral = Word::letter(Letter::new(base, false))
                .pow(t)
                .conjugate_by(g);
            let expected = ElementClass::Peripheral { base, power: t };
            let class = classify(&peripheral, n);
            out.check(class == expected, || {
                Counterexample::new(
                    "peripheral-class",
                    &peripheral,
                    format!("{class}, expected {expected}"),
                )
            });
            let tc = classify_matrix(&rho(&peripheral, n), TRACE_TOLERANCE);
            out.check(
                matches!(tc, Ok(c) if c.kind == TraceKind::Parabolic),
                || Counterexample::new("peripheral-parabolic", &peripheral, format!("{tc:?}")),
            );

            let m = (i as u32 % (n.get() - 1)) + 1;
            let torsion = Word::from_letters(&[Letter::A, Letter::B])
                .pow(i64::from(m))
                .conjugate_by(g);
            let class = classify(&torsion, n);
            out.check(matches!(class, ElementClass::Torsion { .. }), || {
                Counterexample::new("torsion-class", &torsion, format!("{class}"))
            });
            let tc = classify_matrix(&rho(&torsion, n), TRACE_TOLERANCE);
            out.check(matches!(tc, Ok(c) if c.kind == TraceKind::Elliptic), || {
                Counterexample::new("torsion-elliptic", &torsion, format!("{tc:?}"))
            });
            report.absorb(out);
        }

        let half = Slope::ratio(1, 2);
        let u = riley_word(&half).expect("1/2").word;
        let mut out = SlopeOutcome::default();
        out.check(!is_trivial(&u, n), || {
            Counterexample::new("u_1/2", &u, "trivial")
        });
        out.check(classify(&u, n) == ElementClass::Generic, || {
            Counterexample::new("u_1/2", &u, classify(&u, n).to_string())
        });
        if in_fundamental_interval(&half, n.get()) {
            matrix_check(&mut out, &half, &u, n, TraceKind::Hyperbolic);
        }
        report.absorb(out);
    }
    report.elapsed = started.elapsed();
    Ok(report)
}
