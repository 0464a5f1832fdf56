//! Numerical representation of `H(0;n)` in the Hecke group.
//!
//! With `λ = 2cos(π/2n)`, `P = (1, λ; 0, 1)` and `S = (0, 1; -1, 0)`, the
//! subgroup `<P, SPS⁻¹>` is a copy of `H(0;n)`; we send `a ↦ P` and
//! `b ↦ SPS⁻¹ = (1, 0; -λ, 1)`. Peripheral elements map to parabolics and
//! torsion to elliptics, which makes the trace a cheap cross-check of the
//! exact classifier.

use std::f64::consts::PI;
use std::fmt;
use std::ops::Mul;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::Index;
use crate::words::{Generator, Word};

/// Classification tolerance.
pub const TRACE_TOLERANCE: f64 = 1e-6;
/// Tolerance for identity checks.
pub const IDENTITY_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Mat2 {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl Mat2 {
    pub const IDENTITY: Mat2 = Mat2::new(1.0, 0.0, 0.0, 1.0);

    pub const fn new(a: f64, b: f64, c: f64, d: f64) -> Mat2 {
        Mat2 { a, b, c, d }
    }

    pub fn det(&self) -> f64 {
        self.a * self.d - self.b * self.c
    }

    pub fn trace(&self) -> f64 {
        self.a + self.d
    }

    /// Inverse of a determinant-one matrix.
    pub fn inverse(&self) -> Mat2 {
        Mat2::new(self.d, -self.b, -self.c, self.a)
    }

    pub fn neg(&self) -> Mat2 {
        Mat2::new(-self.a, -self.b, -self.c, -self.d)
    }

    pub fn max_abs_diff(&self, other: &Mat2) -> f64 {
        [
            self.a - other.a,
            self.b - other.b,
            self.c - other.c,
            self.d - other.d,
        ]
        .iter()
        .fold(0.0, |m, x| m.max(x.abs()))
    }

    /// `min(‖M - I‖∞, ‖M + I‖∞)`.
    pub fn distance_to_plus_minus_identity(&self) -> f64 {
        self.max_abs_diff(&Mat2::IDENTITY)
            .min(self.max_abs_diff(&Mat2::IDENTITY.neg()))
    }

    pub fn to_array(&self) -> [[f64; 2]; 2] {
        [[self.a, self.b], [self.c, self.d]]
    }
}

impl Mul for Mat2 {
    type Output = Mat2;

    fn mul(self, o: Mat2) -> Mat2 {
        Mat2::new(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}; {}, {})", self.a, self.b, self.c, self.d)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HeckeGenerators {
    pub lambda: f64,
    pub p: Mat2,
    pub s: Mat2,
    /// Image of `a`.
    pub a: Mat2,
    /// Image of `b`.
    pub b: Mat2,
}

pub fn lambda(n: Index) -> f64 {
    2.0 * (PI / (2.0 * f64::from(n.get()))).cos()
}

pub fn hecke_generators(n: Index) -> HeckeGenerators {
    let lambda = lambda(n);
    let p = Mat2::new(1.0, lambda, 0.0, 1.0);
    let s = Mat2::new(0.0, 1.0, -1.0, 0.0);
    HeckeGenerators {
        lambda,
        p,
        s,
        a: p,
        b: s * p * s.inverse(),
    }
}

/// The image of `w`, multiplying generator images left to right.
pub fn rho(w: &Word, n: Index) -> Mat2 {
    let g = hecke_generators(n);
    let (a_inv, b_inv) = (g.a.inverse(), g.b.inverse());
    w.letters()
        .iter()
        .fold(Mat2::IDENTITY, |m, l| match (l.generator, l.inverse) {
            (Generator::A, false) => m * g.a,
            (Generator::A, true) => m * a_inv,
            (Generator::B, false) => m * g.b,
            (Generator::B, true) => m * b_inv,
        })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TraceKind {
    IdentityLike,
    Elliptic,
    Parabolic,
    Hyperbolic,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct TraceClass {
    pub kind: TraceKind,
    pub trace: f64,
}

/// Classifies a unimodular matrix by `|trace|` against 2.
///
/// The determinant check is relative to the size of the products `ad` and
/// `bc`, since long words produce entries far from unit scale.
pub fn classify_matrix(m: &Mat2, tolerance: f64) -> Result<TraceClass> {
    let det = m.det();
    let scale = 1f64.max((m.a * m.d).abs()).max((m.b * m.c).abs());
    if !det.is_finite() || (det - 1.0).abs() >= 1e-6 * scale {
        return Err(Error::NotUnimodular(det));
    }
    let trace = m.trace();
    let kind = if m.distance_to_plus_minus_identity() <= tolerance {
        TraceKind::IdentityLike
    } else if trace.abs() < 2.0 - tolerance {
        TraceKind::Elliptic
    } else if (trace.abs() - 2.0).abs() <= tolerance {
        TraceKind::Parabolic
    } else {
        TraceKind::Hyperbolic
    };
    Ok(TraceClass { kind, trace })
}
