//! Slopes on a torus and their numerical values under a framing.
//!
//! Every torus carries a fixed abstract reference basis `(e_μ, e_λ)` of its
//! first homology; a class `a·e_μ + b·e_λ` is stored as the pair `(a, b)`.
//! The torus is oriented so that the intersection number `ω(e_λ, e_μ)` is
//! `+1`, hence `ω(x, y) = x_b·y_a − x_a·y_b`.
//!
//! With this orientation `ω(α, λ) / ω(α, μ) = −a/b` for `α = aμ + bλ`, so the
//! two descriptions of the numerical slope agree for every framing.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Mul, Neg};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::encoding;
use crate::error::{Error, Result};

/// A unit `±1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub fn of(n: &BigInt) -> Option<Sign> {
        if n.is_one() {
            Some(Sign::Plus)
        } else if *n == -BigInt::one() {
            Some(Sign::Minus)
        } else {
            None
        }
    }

    pub fn to_int(self) -> BigInt {
        BigInt::from(self.as_i32())
    }

    pub fn as_i32(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn apply(self, n: BigInt) -> BigInt {
        match self {
            Sign::Plus => n,
            Sign::Minus => -n,
        }
    }

    pub fn apply_q(self, r: BigRational) -> BigRational {
        match self {
            Sign::Plus => r,
            Sign::Minus => -r,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        self * Sign::Minus
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

impl Serialize for Sign {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_i32(self.as_i32())
    }
}

impl<'de> Deserialize<'de> for Sign {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        match i64::deserialize(d)? {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            v => Err(serde::de::Error::custom(format!(
                "sign must be 1 or -1, got {v}"
            ))),
        }
    }
}

/// A primitive element of `H₁(T²; Z)` in reference coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrimitiveClass {
    a: BigInt,
    b: BigInt,
}

impl PrimitiveClass {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Result<Self> {
        let (a, b) = (a.into(), b.into());
        if a.is_zero() && b.is_zero() {
            return Err(Error::ZeroClass);
        }
        if !a.gcd(&b).is_one() {
            return Err(Error::NotPrimitive { a, b });
        }
        Ok(PrimitiveClass { a, b })
    }

    pub fn meridian() -> Self {
        PrimitiveClass {
            a: BigInt::one(),
            b: BigInt::zero(),
        }
    }

    pub fn longitude() -> Self {
        PrimitiveClass {
            a: BigInt::zero(),
            b: BigInt::one(),
        }
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn coords(&self) -> [BigInt; 2] {
        [self.a.clone(), self.b.clone()]
    }

    /// `x·self + y·other`, which must again be primitive.
    pub fn combine(&self, x: &BigInt, other: &PrimitiveClass, y: &BigInt) -> Result<Self> {
        PrimitiveClass::new(x * &self.a + y * &other.a, x * &self.b + y * &other.b)
    }

    pub fn slope(&self) -> Slope {
        Slope::from_class(self.clone())
    }
}

impl Neg for PrimitiveClass {
    type Output = PrimitiveClass;
    fn neg(self) -> PrimitiveClass {
        PrimitiveClass {
            a: -self.a,
            b: -self.b,
        }
    }
}

impl Neg for &PrimitiveClass {
    type Output = PrimitiveClass;
    fn neg(self) -> PrimitiveClass {
        -self.clone()
    }
}

impl fmt::Display for PrimitiveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.a, self.b)
    }
}

impl Serialize for PrimitiveClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        encoding::int_pair::serialize(&(self.a.clone(), self.b.clone()), s)
    }
}

impl<'de> Deserialize<'de> for PrimitiveClass {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let (a, b) = encoding::int_pair::deserialize(d)?;
        PrimitiveClass::new(a, b).map_err(serde::de::Error::custom)
    }
}

/// An unoriented slope `⟨α⟩ = ⟨−α⟩`, stored by its canonical representative
/// (`b > 0`, or `(1, 0)`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Slope(PrimitiveClass);

impl Slope {
    pub fn from_class(c: PrimitiveClass) -> Slope {
        if c.b.is_negative() || (c.b.is_zero() && c.a.is_negative()) {
            Slope(-c)
        } else {
            Slope(c)
        }
    }

    pub fn meridian() -> Slope {
        Slope(PrimitiveClass::meridian())
    }

    pub fn longitude() -> Slope {
        Slope(PrimitiveClass::longitude())
    }

    pub fn rep(&self) -> &PrimitiveClass {
        &self.0
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", self.0)
    }
}

impl Serialize for Slope {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Slope {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(Slope::from_class(PrimitiveClass::deserialize(d)?))
    }
}

pub fn canonical_slope(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Result<Slope> {
    let (a, b) = (a.into(), b.into());
    if a.is_zero() && b.is_zero() {
        return Err(Error::ZeroClass);
    }
    let g = a.gcd(&b);
    Ok(Slope::from_class(PrimitiveClass {
        a: a / &g,
        b: b / &g,
    }))
}

/// An element of `Q ∪ {∞}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ExtendedRational {
    Finite(BigRational),
    Infinity,
}

impl ExtendedRational {
    pub fn finite(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Self {
        ExtendedRational::Finite(BigRational::new(num.into(), den.into()))
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        ExtendedRational::Finite(BigRational::from_integer(n.into()))
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtendedRational::Infinity)
    }

    pub fn as_finite(&self) -> Option<&BigRational> {
        match self {
            ExtendedRational::Finite(r) => Some(r),
            ExtendedRational::Infinity => None,
        }
    }
}

impl From<BigRational> for ExtendedRational {
    fn from(r: BigRational) -> Self {
        ExtendedRational::Finite(r)
    }
}

/// Finite values in their usual order, with `∞` above every one of them.
impl Ord for ExtendedRational {
    fn cmp(&self, other: &Self) -> Ordering {
        use ExtendedRational::*;
        match (self, other) {
            (Finite(x), Finite(y)) => x.cmp(y),
            (Finite(_), Infinity) => Ordering::Less,
            (Infinity, Finite(_)) => Ordering::Greater,
            (Infinity, Infinity) => Ordering::Equal,
        }
    }
}

impl PartialOrd for ExtendedRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ExtendedRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedRational::Finite(r) => write!(f, "{r}"),
            ExtendedRational::Infinity => f.write_str("inf"),
        }
    }
}

impl Serialize for ExtendedRational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ExtendedRational::Finite(r) => encoding::rational::serialize(r, s),
            ExtendedRational::Infinity => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for ExtendedRational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        match &v {
            serde_json::Value::String(s) if s == "inf" => Ok(ExtendedRational::Infinity),
            _ => encoding::rational::deserialize(v)
                .map(ExtendedRational::Finite)
                .map_err(serde::de::Error::custom),
        }
    }
}

/// An ordered basis `(μ, λ)` of the torus, `μ` being a meridian class.
///
/// `sign` is the intersection number `ω(λ, μ)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Framing {
    mu: PrimitiveClass,
    lambda: PrimitiveClass,
    sign: Sign,
}

/// `ω(x, y)` in the reference orientation.
pub fn intersection_number(x: &PrimitiveClass, y: &PrimitiveClass) -> BigInt {
    &x.b * &y.a - &x.a * &y.b
}

impl Framing {
    pub fn new(mu: PrimitiveClass, lambda: PrimitiveClass) -> Result<Self> {
        let omega = intersection_number(&lambda, &mu);
        let sign = Sign::of(&omega).ok_or(Error::NotABasis { det: omega })?;
        Ok(Framing { mu, lambda, sign })
    }

    /// The reference basis itself.
    pub fn reference() -> Self {
        Framing {
            mu: PrimitiveClass::meridian(),
            lambda: PrimitiveClass::longitude(),
            sign: Sign::Plus,
        }
    }

    pub fn mu(&self) -> &PrimitiveClass {
        &self.mu
    }

    pub fn lambda(&self) -> &PrimitiveClass {
        &self.lambda
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    /// Coordinates `(c, d)` of a reference class `x = c·μ + d·λ`.
    pub fn coordinates(&self, x: &PrimitiveClass) -> (BigInt, BigInt) {
        // det[μ λ] = ω(λ, μ) = ±1
        let det = self.sign.to_int();
        let c = (&x.a * &self.lambda.b - &x.b * &self.lambda.a) * &det;
        let d = (&self.mu.a * &x.b - &self.mu.b * &x.a) * &det;
        (c, d)
    }

    /// The reference class `c·μ + d·λ`.
    pub fn class(&self, c: &BigInt, d: &BigInt) -> Result<PrimitiveClass> {
        self.mu.combine(c, &self.lambda, d)
    }

    /// Apply a framing change: the result `f2` satisfies
    /// `numerical_slope(f2, s) = ε·numerical_slope(self, s) + h`.
    pub fn changed_by(&self, change: &FramingChange) -> Framing {
        let eps = change.epsilon.to_int();
        // μ₂ = εμ₁, λ₂ = λ₁ + εh·μ₁
        let k = &eps * &change.h;
        let mu = PrimitiveClass {
            a: &eps * &self.mu.a,
            b: &eps * &self.mu.b,
        };
        let lambda = PrimitiveClass {
            a: &self.lambda.a + &k * &self.mu.a,
            b: &self.lambda.b + &k * &self.mu.b,
        };
        Framing::new(mu, lambda).expect("a framing change preserves the basis property")
    }
}

impl<'de> Deserialize<'de> for Framing {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            mu: PrimitiveClass,
            lambda: PrimitiveClass,
            sign: Option<Sign>,
        }
        let raw = Raw::deserialize(d)?;
        let f = Framing::new(raw.mu, raw.lambda).map_err(serde::de::Error::custom)?;
        if let Some(sign) = raw.sign {
            if sign != f.sign {
                return Err(serde::de::Error::custom(format!(
                    "framing sign {sign} disagrees with the intersection number {}",
                    f.sign
                )));
            }
        }
        Ok(f)
    }
}

/// `ν_{μ,λ}(⟨aμ + bλ⟩) = −a/b`.
pub fn numerical_slope(f: &Framing, s: &Slope) -> ExtendedRational {
    let (c, d) = f.coordinates(s.rep());
    if d.is_zero() {
        ExtendedRational::Infinity
    } else {
        ExtendedRational::Finite(BigRational::new(-c, d))
    }
}

pub fn slope_from_numerical(f: &Framing, r: &ExtendedRational) -> Slope {
    let (c, d) = match r {
        ExtendedRational::Infinity => (BigInt::one(), BigInt::zero()),
        ExtendedRational::Finite(r) => (-r.numer().clone(), r.denom().clone()),
    };
    f.class(&c, &d)
        .expect("coprime coordinates in a basis give a primitive class")
        .slope()
}

/// The affine relation `s₂ = ε·s₁ + h` between two framings of one knot.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FramingChange {
    pub epsilon: Sign,
    #[serde(with = "encoding::int")]
    pub h: BigInt,
}

impl FramingChange {
    pub fn identity() -> Self {
        FramingChange {
            epsilon: Sign::Plus,
            h: BigInt::zero(),
        }
    }

    pub fn apply(&self, s: &ExtendedRational) -> ExtendedRational {
        match s {
            ExtendedRational::Infinity => ExtendedRational::Infinity,
            ExtendedRational::Finite(r) => ExtendedRational::Finite(
                self.epsilon.apply_q(r.clone()) + BigRational::from_integer(self.h.clone()),
            ),
        }
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &FramingChange) -> FramingChange {
        FramingChange {
            epsilon: self.epsilon * next.epsilon,
            h: next.epsilon.apply(self.h.clone()) + &next.h,
        }
    }

    pub fn inverse(&self) -> FramingChange {
        FramingChange {
            epsilon: self.epsilon,
            h: -self.epsilon.apply(self.h.clone()),
        }
    }
}

/// The change from `f1` to `f2`, normalised with the simultaneous sign
/// freedom `(μ₂, λ₂) ~ (−μ₂, −λ₂)` so that `λ₂ = λ₁ + kμ₁`; then `μ₂ = εμ₁`
/// and the returned offset is `h = ε·k`.
pub fn framing_change(f1: &Framing, f2: &Framing) -> Result<FramingChange> {
    let (c, d) = f1.coordinates(&f2.mu);
    if !d.is_zero() {
        return Err(Error::MeridianMismatch);
    }
    let mut eps = Sign::of(&c).expect("a primitive multiple of μ is ±μ");
    let (mut k, lam_d) = f1.coordinates(&f2.lambda);
    match Sign::of(&lam_d) {
        Some(Sign::Plus) => {}
        Some(Sign::Minus) => {
            eps = -eps;
            k = -k;
        }
        None => unreachable!("f2 is a basis sharing μ with f1"),
    }
    Ok(FramingChange {
        epsilon: eps,
        h: eps.apply(k),
    })
}

/// `|ω(s, t)|`, the minimal number of intersections of the two slopes.
pub fn geometric_intersection(s: &Slope, t: &Slope) -> BigInt {
    intersection_number(s.rep(), t.rep()).abs()
}
