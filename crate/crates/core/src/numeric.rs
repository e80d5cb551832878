//! Dual-backend scalar arithmetic.
//!
//! Every construction that is rational in the input coordinates runs on the
//! `Rational` backend (fractions of arbitrary-precision integers, always in
//! lowest terms). Constructions that require square roots (side lengths,
//! incenter, axis directions) run on the `Float` backend. The two backends
//! never mix silently: callers choose one per construction.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// Absolute epsilon for zero/equality tests on the float backend.
///
/// Generators pre-scale configurations so the circumradius is O(1); all
/// checks then stay well clear of this threshold.
pub const FLOAT_EPS: f64 = 1e-12;

/// Looser tolerance used by float-backend theorem checks that sit at the end
/// of longer construction chains (reflection, second intersection, conic fit).
pub const CHECK_EPS: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NumericError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("mixed scalar backends")]
    MixedBackend,
    #[error("square root of a negative value")]
    NegativeArgument,
    #[error("irrational square root in the rational backend")]
    IrrationalInRationalBackend,
    #[error("cannot parse scalar `{0}`")]
    Parse(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Backend {
    Rational,
    Float,
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Backend::Rational => write!(f, "rational"),
            Backend::Float => write!(f, "float"),
        }
    }
}

impl FromStr for Backend {
    type Err = NumericError;
    fn from_str(s: &str) -> Result<Self, NumericError> {
        match s {
            "rational" => Ok(Backend::Rational),
            "float" => Ok(Backend::Float),
            other => Err(NumericError::Parse(other.to_string())),
        }
    }
}

/// A number in one of the two backends.
///
/// `Rational` values are normalized by `BigRational` itself: lowest terms,
/// positive denominator. Values are immutable; arithmetic between two
/// scalars of different backends is a caller bug and panics (use the
/// `checked_*` methods at API boundaries where mixing must be reported).
#[derive(Debug, Clone)]
pub enum Scalar {
    Rational(BigRational),
    Float(f64),
}

impl Scalar {
    pub fn backend(&self) -> Backend {
        match self {
            Scalar::Rational(_) => Backend::Rational,
            Scalar::Float(_) => Backend::Float,
        }
    }

    pub fn zero(backend: Backend) -> Scalar {
        match backend {
            Backend::Rational => Scalar::Rational(BigRational::zero()),
            Backend::Float => Scalar::Float(0.0),
        }
    }

    pub fn one(backend: Backend) -> Scalar {
        match backend {
            Backend::Rational => Scalar::Rational(BigRational::one()),
            Backend::Float => Scalar::Float(1.0),
        }
    }

    /// Exact integer in the rational backend.
    pub fn int(n: i64) -> Scalar {
        Scalar::Rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// Exact fraction `p/q` in the rational backend. Panics if `q == 0`.
    pub fn ratio(p: i64, q: i64) -> Scalar {
        assert!(q != 0, "zero denominator");
        Scalar::Rational(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    pub fn float(v: f64) -> Scalar {
        Scalar::Float(v)
    }

    pub fn from_int(n: i64, backend: Backend) -> Scalar {
        match backend {
            Backend::Rational => Scalar::int(n),
            Backend::Float => Scalar::Float(n as f64),
        }
    }

    /// Sign in {-1, 0, +1}. Exact on the rational backend; on the float
    /// backend magnitudes below [`FLOAT_EPS`] report 0.
    pub fn sign(&self) -> i32 {
        match self {
            Scalar::Rational(r) => {
                if r.is_zero() {
                    0
                } else if r.is_positive() {
                    1
                } else {
                    -1
                }
            }
            Scalar::Float(v) => {
                if v.abs() <= FLOAT_EPS {
                    0
                } else if *v > 0.0 {
                    1
                } else {
                    -1
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.sign() == 0
    }

    /// Zero test at the looser [`CHECK_EPS`] tolerance; exact on rationals.
    pub fn is_negligible(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Float(v) => v.abs() <= CHECK_EPS,
        }
    }

    pub fn abs(&self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(r.abs()),
            Scalar::Float(v) => Scalar::Float(v.abs()),
        }
    }

    pub fn sq(&self) -> Scalar {
        self * self
    }

    pub fn checked_add(&self, rhs: &Scalar) -> Result<Scalar, NumericError> {
        self.combine(rhs, |a, b| a + b, |a, b| a + b)
    }

    pub fn checked_sub(&self, rhs: &Scalar) -> Result<Scalar, NumericError> {
        self.combine(rhs, |a, b| a - b, |a, b| a - b)
    }

    pub fn checked_mul(&self, rhs: &Scalar) -> Result<Scalar, NumericError> {
        self.combine(rhs, |a, b| a * b, |a, b| a * b)
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar, NumericError> {
        if rhs.is_exact_zero() {
            return Err(NumericError::DivisionByZero);
        }
        self.combine(rhs, |a, b| a / b, |a, b| a / b)
    }

    fn combine(
        &self,
        rhs: &Scalar,
        fr: impl FnOnce(&BigRational, &BigRational) -> BigRational,
        ff: impl FnOnce(f64, f64) -> f64,
    ) -> Result<Scalar, NumericError> {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(fr(a, b))),
            (Scalar::Float(a), Scalar::Float(b)) => Ok(Scalar::Float(ff(*a, *b))),
            _ => Err(NumericError::MixedBackend),
        }
    }

    /// True zero, with no epsilon on either backend (used for division guards).
    fn is_exact_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Float(v) => *v == 0.0,
        }
    }

    /// Square root. Float: IEEE sqrt. Rational: exact root when the value is
    /// a perfect square of a rational, otherwise
    /// [`NumericError::IrrationalInRationalBackend`] so the caller can switch
    /// backends.
    pub fn sqrt(&self) -> Result<Scalar, NumericError> {
        match self {
            Scalar::Float(v) => {
                if *v < 0.0 {
                    Err(NumericError::NegativeArgument)
                } else {
                    Ok(Scalar::Float(v.sqrt()))
                }
            }
            Scalar::Rational(r) => {
                if r.is_negative() {
                    return Err(NumericError::NegativeArgument);
                }
                let num = r.numer();
                let den = r.denom();
                let sn = num.sqrt();
                let sd = den.sqrt();
                if &(&sn * &sn) == num && &(&sd * &sd) == den {
                    Ok(Scalar::Rational(BigRational::new(sn, sd)))
                } else {
                    Err(NumericError::IrrationalInRationalBackend)
                }
            }
        }
    }

    /// Closest double. Exact for floats; a (possibly rounded) approximation
    /// for rationals — used only for rendering and float-side checks.
    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Rational(r) => r.to_f64().unwrap_or_else(|| {
                // Fall back to a manual quotient for extreme magnitudes.
                let n = r.numer().to_f64().unwrap_or(f64::NAN);
                let d = r.denom().to_f64().unwrap_or(f64::NAN);
                n / d
            }),
            Scalar::Float(v) => *v,
        }
    }

    /// Reinterpret in the float backend (identity on floats).
    pub fn to_float_backend(&self) -> Scalar {
        Scalar::Float(self.to_f64())
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(r) => Some(r),
            Scalar::Float(_) => None,
        }
    }

    /// Parse `p/q`, an integer, or a decimal literal into the given backend.
    /// Decimal literals are converted exactly (base 10) on the rational side.
    pub fn parse(text: &str, backend: Backend) -> Result<Scalar, NumericError> {
        let text = text.trim();
        if text.is_empty() {
            return Err(NumericError::Parse(text.to_string()));
        }
        match backend {
            Backend::Float => text
                .parse::<f64>()
                .map(Scalar::Float)
                .or_else(|_| {
                    // Allow "p/q" in the float backend too.
                    let r = Scalar::parse(text, Backend::Rational)?;
                    Ok(Scalar::Float(r.to_f64()))
                })
                .map_err(|_: NumericError| NumericError::Parse(text.to_string())),
            Backend::Rational => {
                if let Some((p, q)) = text.split_once('/') {
                    let p = BigInt::from_str(p.trim())
                        .map_err(|_| NumericError::Parse(text.to_string()))?;
                    let q = BigInt::from_str(q.trim())
                        .map_err(|_| NumericError::Parse(text.to_string()))?;
                    if q.is_zero() {
                        return Err(NumericError::DivisionByZero);
                    }
                    Ok(Scalar::Rational(BigRational::new(p, q)))
                } else if let Some((int, frac)) = text.split_once('.') {
                    let sign = if int.trim_start().starts_with('-') { -1 } else { 1 };
                    let int = BigInt::from_str(if int.is_empty() { "0" } else { int })
                        .map_err(|_| NumericError::Parse(text.to_string()))?;
                    if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
                        return Err(NumericError::Parse(text.to_string()));
                    }
                    let num = BigInt::from_str(frac)
                        .map_err(|_| NumericError::Parse(text.to_string()))?;
                    let den = num::pow(BigInt::from(10), frac.len());
                    let frac_part = BigRational::new(num * sign, den);
                    Ok(Scalar::Rational(BigRational::from_integer(int) + frac_part))
                } else {
                    BigInt::from_str(text)
                        .map(|n| Scalar::Rational(BigRational::from_integer(n)))
                        .map_err(|_| NumericError::Parse(text.to_string()))
                }
            }
        }
    }
}

impl fmt::Display for Scalar {
    /// Rationals serialize in lowest terms as `p` or `p/q`; floats use the
    /// shortest round-trippable decimal.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Float(v) => write!(f, "{v}"),
        }
    }
}

impl serde::Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Scalar::Rational(_) => serializer.serialize_str(&self.to_string()),
            Scalar::Float(v) => serializer.serialize_f64(*v),
        }
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Scalar) -> bool {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => a == b,
            (Scalar::Float(a), Scalar::Float(b)) => (a - b).abs() <= FLOAT_EPS,
            _ => false,
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $fr:expr, $ff:expr) => {
        impl std::ops::$trait for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational($fr(a, b)),
                    (Scalar::Float(a), Scalar::Float(b)) => Scalar::Float($ff(*a, *b)),
                    _ => panic!("mixed scalar backends"),
                }
            }
        }
        impl std::ops::$trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                std::ops::$trait::$method(&self, &rhs)
            }
        }
        impl std::ops::$trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                std::ops::$trait::$method(&self, rhs)
            }
        }
        impl std::ops::$trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                std::ops::$trait::$method(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a + b, |a: f64, b: f64| a + b);
forward_binop!(Sub, sub, |a, b| a - b, |a: f64, b: f64| a - b);
forward_binop!(Mul, mul, |a, b| a * b, |a: f64, b: f64| a * b);

impl std::ops::Div for &Scalar {
    type Output = Scalar;
    /// Panics on division by exact zero; use [`Scalar::checked_div`] where a
    /// zero divisor is a reportable condition rather than a bug.
    fn div(self, rhs: &Scalar) -> Scalar {
        self.checked_div(rhs).expect("scalar division")
    }
}
impl std::ops::Div for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        &self / &rhs
    }
}
impl std::ops::Div<&Scalar> for Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        &self / rhs
    }
}
impl std::ops::Div<Scalar> for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        self / &rhs
    }
}

impl std::ops::Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Float(v) => Scalar::Float(-v),
        }
    }
}
impl std::ops::Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

/// A complex number with scalar components, used for conjugate-linear maps
/// (indirect similarities z ↦ a·conj(z) + b).
#[derive(Debug, Clone, PartialEq)]
pub struct Complex {
    pub re: Scalar,
    pub im: Scalar,
}

impl Complex {
    pub fn new(re: Scalar, im: Scalar) -> Complex {
        debug_assert_eq!(re.backend(), im.backend());
        Complex { re, im }
    }

    pub fn backend(&self) -> Backend {
        self.re.backend()
    }

    pub fn conj(&self) -> Complex {
        Complex { re: self.re.clone(), im: -&self.im }
    }

    pub fn norm_sq(&self) -> Scalar {
        self.re.sq() + self.im.sq()
    }

    pub fn add(&self, rhs: &Complex) -> Complex {
        Complex { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }

    pub fn sub(&self, rhs: &Complex) -> Complex {
        Complex { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }

    pub fn mul(&self, rhs: &Complex) -> Complex {
        Complex {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }

    pub fn div(&self, rhs: &Complex) -> Result<Complex, NumericError> {
        let n = rhs.norm_sq();
        if n.is_exact_zero() {
            return Err(NumericError::DivisionByZero);
        }
        let num = self.mul(&rhs.conj());
        Ok(Complex { re: num.re / &n, im: num.im / &n })
    }
}
