//! The slope bijection across a cable space and its numerical form.
//!
//! For slopes `σ` on `T₁` the image `φ(σ)` on `T₂` is the slope whose class
//! has image in `H₁(N; Q)` proportional to that of `σ`. Writing the model's
//! relations as `μ̄ = −ζ·q·μ̄'` and `λ̄' = t·μ̄ + ζθη·q·λ̄` and solving for the
//! proportionality gives
//!
//! ```text
//! ν'(φ(σ)) = −ηθ·q²·ν(σ) − ζ·q·t
//! ```
//!
//! so the transfer law is `s ↦ ε·q²·s + u` with `ε = −ηθ` and `u = −ζqt`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::encoding;
use crate::error::{Error, Result};
use crate::homology::{derive, det2, group_from_presentation, CableSpaceModel};
use crate::slope::{
    canonical_slope, numerical_slope, ExtendedRational, Framing, FramingChange, PrimitiveClass,
    Sign, Slope,
};

/// `s ↦ ε·q²·s + u`, fixing `∞`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AffineSlopeMap {
    pub epsilon: Sign,
    #[serde(with = "encoding::int")]
    pub q: BigInt,
    #[serde(with = "encoding::rational")]
    pub u: BigRational,
}

impl AffineSlopeMap {
    pub fn q_squared(&self) -> BigInt {
        &self.q * &self.q
    }

    pub fn apply(&self, s: &ExtendedRational) -> ExtendedRational {
        AffineMap::from(self).apply(s)
    }

    pub fn inverse(&self) -> AffineMap {
        AffineMap::from(self).inverse()
    }
}

impl fmt::Display for AffineSlopeMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let scale = self.epsilon.apply(self.q_squared());
        write!(f, "s -> {scale}s")?;
        if self.u.is_negative() {
            write!(f, " - {}", -&self.u)
        } else if self.u.is_positive() {
            write!(f, " + {}", self.u)
        } else {
            Ok(())
        }
    }
}

/// A general map `s ↦ scale·s + shift` on `Q ∪ {∞}` with `scale ≠ 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffineMap {
    pub scale: BigRational,
    pub shift: BigRational,
}

impl AffineMap {
    pub fn identity() -> Self {
        AffineMap {
            scale: BigRational::one(),
            shift: BigRational::zero(),
        }
    }

    pub fn apply(&self, s: &ExtendedRational) -> ExtendedRational {
        match s {
            ExtendedRational::Infinity => ExtendedRational::Infinity,
            ExtendedRational::Finite(r) => ExtendedRational::Finite(&self.scale * r + &self.shift),
        }
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &AffineMap) -> AffineMap {
        AffineMap {
            scale: &next.scale * &self.scale,
            shift: &next.scale * &self.shift + &next.shift,
        }
    }

    pub fn inverse(&self) -> AffineMap {
        let scale = self.scale.recip();
        AffineMap {
            shift: -(&scale * &self.shift),
            scale,
        }
    }
}

impl From<&AffineSlopeMap> for AffineMap {
    fn from(m: &AffineSlopeMap) -> Self {
        AffineMap {
            scale: BigRational::from_integer(m.epsilon.apply(m.q_squared())),
            shift: m.u.clone(),
        }
    }
}

impl From<&FramingChange> for AffineMap {
    fn from(c: &FramingChange) -> Self {
        AffineMap {
            scale: BigRational::from_integer(c.epsilon.to_int()),
            shift: BigRational::from_integer(c.h.clone()),
        }
    }
}

fn model_ok(model: &CableSpaceModel) -> Result<()> {
    let ok = model.h1.is_free_of_rank(2)
        && !det2(&model.img_mu, &model.img_lambda).is_zero()
        && !det2(&model.img_mu_prime, &model.img_lambda_prime).is_zero();
    if ok {
        Ok(())
    } else {
        Err(Error::InconsistentModel(
            "boundary inclusions are not rational isomorphisms".into(),
        ))
    }
}

/// The primitive integer vector on the ray through `v`, up to sign.
fn primitive_direction(v: &[BigRational]) -> (BigInt, BigInt) {
    let l = v[0].denom().lcm(v[1].denom());
    let a = (&v[0] * BigRational::from_integer(l.clone())).to_integer();
    let b = (&v[1] * BigRational::from_integer(l)).to_integer();
    let g = a.gcd(&b);
    (a / &g, b / g)
}

/// `φ(s)`: solve `ι²(α₂) ∥ ι¹(α₁)` exactly in `H₁(N; Q) = Q²`.
pub fn phi(model: &CableSpaceModel, s: &Slope) -> Result<Slope> {
    model_ok(model)?;
    let v = model.outer_image(s.rep());
    let b1 = model.inner_image(&PrimitiveClass::meridian());
    let b2 = model.inner_image(&PrimitiveClass::longitude());
    let det = det2(&b1, &b2);
    if det.is_zero() {
        return Err(Error::InconsistentModel(
            "T2 inclusion is degenerate".into(),
        ));
    }
    let det = BigRational::from_integer(det);
    let y = [
        BigRational::from_integer(det2(&v, &b2)) / &det,
        BigRational::from_integer(det2(&b1, &v)) / &det,
    ];
    let (a, b) = primitive_direction(&y);
    canonical_slope(a, b)
}

/// The numerical transfer law of `model` in its framings.
pub fn transfer_map(
    model: &CableSpaceModel,
    f_outer: &Framing,
    f_inner: &Framing,
) -> Result<AffineSlopeMap> {
    if *f_outer != model.f_outer {
        return Err(Error::FramingMismatch { torus: "T1" });
    }
    if *f_inner != model.f_inner {
        return Err(Error::FramingMismatch { torus: "T2" });
    }
    model_ok(model)?;
    Ok(AffineSlopeMap {
        epsilon: -(model.eta * model.theta),
        q: model.q.clone(),
        u: -(BigRational::from_integer(model.zeta.apply(model.q.clone())) * &model.t),
    })
}

/// All slopes `⟨aμ + bλ⟩` of `f` with `|a|, |b| ≤ grid`.
pub fn sample_slopes(f: &Framing, grid: u32) -> Vec<Slope> {
    let g = i64::from(grid);
    let mut out = Vec::new();
    for b in 0..=g {
        for a in -g..=g {
            if (b == 0 && a != 1) || a.gcd(&b) != 1 {
                continue;
            }
            let c = f
                .class(&BigInt::from(a), &BigInt::from(b))
                .expect("coprime coordinates");
            out.push(c.slope());
        }
    }
    out
}

/// A primitive `α₁` on `T₁`, its partner `α₂` on `T₂` and `r` with
/// `ι²(α₂) = r·ι¹(α₁)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalMultiple {
    pub source: PrimitiveClass,
    pub image: PrimitiveClass,
    #[serde(with = "encoding::rational")]
    pub r: BigRational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witnesses {
    /// `∂[P] = μ + ζqμ'` in coordinates `(μ, λ, μ', λ')`.
    #[serde(with = "encoding::int_vec")]
    pub boundary_p: Vec<BigInt>,
    /// `−ζq`, the coefficient in `μ̄ = −ζqμ̄'`.
    #[serde(with = "encoding::int")]
    pub meridian_coefficient: BigInt,
    /// `t` in `λ̄' = tμ̄ + ζθηqλ̄`.
    #[serde(with = "encoding::rational")]
    pub t: BigRational,
    /// `ζθηq`, the coefficient of `λ̄` in that relation.
    #[serde(with = "encoding::rational")]
    pub lambda_coefficient: BigRational,
    pub zeta: Sign,
    pub theta: Sign,
    pub eta: Sign,
    pub rational_multiples: Vec<RationalMultiple>,
    /// Sampling bound used when the certificate was emitted.
    pub grid: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransferCertificate {
    pub model: CableSpaceModel,
    pub map: AffineSlopeMap,
    pub witnesses: Witnesses,
}

fn ratio(num: &[BigInt], den: &[BigInt]) -> Option<BigRational> {
    let i = den.iter().position(|x| !x.is_zero())?;
    let r = BigRational::new(num[i].clone(), den[i].clone());
    num.iter()
        .zip(den)
        .all(|(n, d)| {
            BigRational::from_integer(n.clone()) == &r * BigRational::from_integer(d.clone())
        })
        .then_some(r)
}

fn rational_multiple(model: &CableSpaceModel, source: &PrimitiveClass) -> Result<RationalMultiple> {
    let image = phi(model, &source.slope())?.rep().clone();
    let r = ratio(&model.inner_image(&image), &model.outer_image(source))
        .ok_or_else(|| Error::InconsistentModel("images are not proportional".into()))?;
    Ok(RationalMultiple {
        source: source.clone(),
        image,
        r,
    })
}

/// First sampled slope on which `φ` and the affine law disagree.
fn sampled_disagreement(
    model: &CableSpaceModel,
    map: &AffineSlopeMap,
    grid: u32,
) -> Result<Option<Slope>> {
    for s in sample_slopes(&model.f_outer, grid) {
        let image = phi(model, &s)?;
        if numerical_slope(&model.f_inner, &image)
            != map.apply(&numerical_slope(&model.f_outer, &s))
        {
            return Ok(Some(s));
        }
    }
    Ok(None)
}

/// Bundle a model, its transfer law and the witnesses of every relation.
pub fn certify(model: &CableSpaceModel, grid: u32) -> Result<TransferCertificate> {
    let map = transfer_map(model, &model.f_outer, &model.f_inner)?;
    if let Some(s) = sampled_disagreement(model, &map, grid)? {
        return Err(Error::InconsistentModel(format!(
            "transfer law disagrees with phi on {s}"
        )));
    }
    let rational_multiples = [model.f_outer.mu(), model.f_outer.lambda()]
        .into_iter()
        .map(|c| rational_multiple(model, c))
        .collect::<Result<Vec<_>>>()?;
    let q = &model.q;
    Ok(TransferCertificate {
        map,
        witnesses: Witnesses {
            boundary_p: model.boundary_p.clone(),
            meridian_coefficient: -model.zeta.apply(q.clone()),
            t: model.t.clone(),
            lambda_coefficient: model.lambda_coefficient.clone(),
            zeta: model.zeta,
            theta: model.theta,
            eta: model.eta,
            rational_multiples,
            grid,
        },
        model: model.clone(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    fn record(&mut self, name: &str, passed: bool, detail: impl FnOnce() -> String) {
        self.checks.push(Check {
            name: name.to_string(),
            passed,
            detail: (!passed).then(detail),
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let mark = if c.passed { "pass" } else { "FAIL" };
            write!(f, "  [{mark}] {}", c.name)?;
            if let Some(d) = &c.detail {
                write!(f, ": {d}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

pub const CHECK_REPLAY: &str = "model replays from (p, q, framings, orientation)";
pub const CHECK_H1: &str = "H1(N; Z) = Z + Z";
pub const CHECK_IMAGES: &str = "boundary images match the presentation";
pub const CHECK_ISO: &str = "iota^1, iota^2 are rational isomorphisms";
pub const CHECK_BOUNDARY_P: &str = "d[P] = mu + zeta*q*mu'";
pub const CHECK_MERIDIAN: &str = "mu = -zeta*q*mu' in H1(N; Q)";
pub const CHECK_LONGITUDE: &str = "lambda' = t*mu + zeta*theta*eta*q*lambda in H1(N; Q)";
pub const CHECK_CONSTANTS: &str = "epsilon = -eta*theta, u = -zeta*q*t";
pub const CHECK_MULTIPLES: &str = "iota^2(phi(a)) is a rational multiple of iota^1(a)";
pub const CHECK_MERIDIAN_FIXED: &str = "phi(<mu>) = <mu'>";
pub const CHECK_SAMPLED: &str = "nu'(phi(s)) = epsilon*q^2*nu(s) + u on the sample grid";

fn scaled(c: &BigInt, v: &[BigInt]) -> Vec<BigInt> {
    v.iter().map(|x| c * x).collect()
}

fn add(x: &[BigInt], y: &[BigInt]) -> Vec<BigInt> {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

/// Replay every relation of `cert` against its raw homology data. Sampled
/// checks use `grid`; failures are report entries, never errors.
pub fn verify_certificate(cert: &TransferCertificate, grid: u32) -> VerificationReport {
    let mut rep = VerificationReport::default();
    let m = &cert.model;
    let w = &cert.witnesses;

    let rebuilt = CableSpaceModel::build(
        m.p.clone(),
        m.q.clone(),
        &m.f_outer,
        &m.f_inner,
        m.orientation,
    );
    rep.record(
        CHECK_REPLAY,
        rebuilt.as_ref().is_ok_and(|r| r == m),
        || match &rebuilt {
            Ok(_) => "stored model differs from the rebuilt one".into(),
            Err(e) => e.to_string(),
        },
    );

    let h1 = group_from_presentation(&m.presentation);
    rep.record(CHECK_H1, h1.is_free_of_rank(2) && h1 == m.h1, || {
        format!("presentation gives {h1}, stored {}", m.h1)
    });

    let derived = derive(
        &m.q,
        &m.presentation,
        &m.reference_images,
        &m.f_outer,
        &m.f_inner,
    );
    let stored_img = [
        &m.img_mu,
        &m.img_lambda,
        &m.img_mu_prime,
        &m.img_lambda_prime,
    ];
    rep.record(
        CHECK_IMAGES,
        derived
            .as_ref()
            .is_ok_and(|d| d.img.iter().zip(stored_img).all(|(a, b)| a == b)),
        || match &derived {
            Ok(_) => "stored images differ from the presentation".into(),
            Err(e) => e.to_string(),
        },
    );

    rep.record(
        CHECK_ISO,
        !det2(&m.img_mu, &m.img_lambda).is_zero()
            && !det2(&m.img_mu_prime, &m.img_lambda_prime).is_zero(),
        || "an image pair is linearly dependent".into(),
    );

    let zq = w.zeta.apply(m.q.clone());
    let expected_bp = vec![BigInt::one(), BigInt::zero(), zq.clone(), BigInt::zero()];
    let bp_image = stored_img
        .iter()
        .zip(&w.boundary_p)
        .fold(vec![BigInt::zero(); 2], |acc, (img, c)| {
            add(&acc, &scaled(c, img))
        });
    let bp_derived = derived.as_ref().map(|d| &d.boundary_p);
    rep.record(
        CHECK_BOUNDARY_P,
        w.boundary_p == expected_bp
            && m.boundary_p == w.boundary_p
            && bp_image.iter().all(Zero::is_zero)
            && bp_derived.is_ok_and(|b| *b == w.boundary_p),
        || format!("boundary {:?} with zeta = {}", w.boundary_p, w.zeta),
    );

    let meridian_ok = w.meridian_coefficient == -&zq
        && m.img_mu == scaled(&w.meridian_coefficient, &m.img_mu_prime)
        && m.zeta == w.zeta;
    rep.record(CHECK_MERIDIAN, meridian_ok, || {
        format!(
            "coefficient {} with zeta = {}",
            w.meridian_coefficient, w.zeta
        )
    });

    let h = BigRational::from_integer((w.zeta * w.theta * w.eta).apply(m.q.clone()));
    let lhs: Vec<BigRational> = m
        .img_lambda_prime
        .iter()
        .cloned()
        .map(BigRational::from_integer)
        .collect();
    let rhs: Vec<BigRational> = m
        .img_mu
        .iter()
        .zip(&m.img_lambda)
        .map(|(a, b)| {
            &w.t * BigRational::from_integer(a.clone()) + &h * BigRational::from_integer(b.clone())
        })
        .collect();
    let longitude_ok = lhs == rhs
        && w.lambda_coefficient == h
        && w.t == m.t
        && w.theta == m.f_inner.sign()
        && w.eta == m.f_outer.sign();
    rep.record(CHECK_LONGITUDE, longitude_ok, || {
        format!("t = {}, coefficient {}", w.t, w.lambda_coefficient)
    });

    let u = -(BigRational::from_integer(zq) * &w.t);
    let constants_ok =
        cert.map.epsilon == -(w.eta * w.theta) && cert.map.q == m.q && cert.map.u == u;
    rep.record(CHECK_CONSTANTS, constants_ok, || {
        format!(
            "map {}, expected epsilon {} and u {u}",
            cert.map,
            -(w.eta * w.theta)
        )
    });

    let multiples_ok = !w.rational_multiples.is_empty()
        && w.rational_multiples.iter().all(|rm| {
            phi(m, &rm.source.slope()).is_ok_and(|s| s == rm.image.slope())
                && ratio(&m.inner_image(&rm.image), &m.outer_image(&rm.source))
                    == Some(rm.r.clone())
        });
    rep.record(CHECK_MULTIPLES, multiples_ok, || {
        "a recorded multiple does not replay".into()
    });

    let fixed = phi(m, &m.f_outer.mu().slope());
    rep.record(
        CHECK_MERIDIAN_FIXED,
        fixed.as_ref().is_ok_and(|s| *s == m.f_inner.mu().slope())
            && cert.map.apply(&ExtendedRational::Infinity).is_infinite(),
        || format!("{fixed:?}"),
    );

    let sampled = sampled_disagreement(m, &cert.map, grid);
    rep.record(
        CHECK_SAMPLED,
        matches!(sampled, Ok(None)),
        || match &sampled {
            Ok(Some(s)) => format!("disagreement on {s}"),
            Ok(None) => unreachable!(),
            Err(e) => e.to_string(),
        },
    );
    rep
}

/// Diameter of a finite set of finite values, `None` when it is empty.
pub fn diameter<'a>(values: impl IntoIterator<Item = &'a BigRational>) -> Option<BigRational> {
    let mut it = values.into_iter();
    let first = it.next()?;
    let (lo, hi) = it.fold((first, first), |(lo, hi), x| (lo.min(x), hi.max(x)));
    Some((hi - lo).abs())
}
