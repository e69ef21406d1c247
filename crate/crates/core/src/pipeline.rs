//! Iterated cabling chains and certified lower bounds for `d_K`.
//!
//! A [`KnotDescription`] is a base atom `K_n` together with the cablings that
//! build `K_{n-1}, …, K_0` from it, listed from the base outward. Strict slope
//! sets of the atom are trusted inputs; everything downstream is computed.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::encoding;
use crate::error::{Error, Result};
use crate::homology::{
    glued_manifold_h1, validate_cabling, CableSpaceModel, FpAbelianGroup, PlanarOrientation,
};
use crate::slope::{ExtendedRational, Framing, Slope};
use crate::transfer::{certify, diameter, transfer_map, AffineSlopeMap, TransferCertificate};

/// Sampling bound used when certifying each level's transfer law.
pub const DEFAULT_GRID: u32 = 20;

fn is_reference(f: &Framing) -> bool {
    *f == Framing::reference()
}

/// The innermost knot of a chain: its declared strict numerical slopes and
/// the flags the bounds depend on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AtomKnot {
    #[serde(default)]
    pub strict_slopes: Vec<ExtendedRational>,
    #[serde(default)]
    pub meridionally_small: bool,
    #[serde(default)]
    pub is_round: bool,
    #[serde(default)]
    pub is_cable: bool,
    #[serde(default)]
    pub ambient_pi1_cyclic: bool,
    /// Meridian of the complementary solid torus, for round atoms.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub complementary_meridian: Option<Slope>,
    /// Framing in which `strict_slopes` are written.
    #[serde(default = "Framing::reference", skip_serializing_if = "is_reference")]
    pub framing: Framing,
}

impl AtomKnot {
    /// A meridionally small atom with the given strict slopes and no other flags.
    pub fn with_slopes(strict_slopes: Vec<ExtendedRational>) -> Self {
        AtomKnot {
            strict_slopes,
            meridionally_small: true,
            is_round: false,
            is_cable: false,
            ambient_pi1_cyclic: false,
            complementary_meridian: None,
            framing: Framing::reference(),
        }
    }

    /// A meridionally small atom in a manifold with cyclic `π₁` that is
    /// neither round nor a cable knot.
    pub fn theorem_b(strict_slopes: Vec<ExtendedRational>) -> Self {
        AtomKnot {
            ambient_pi1_cyclic: true,
            ..AtomKnot::with_slopes(strict_slopes)
        }
    }

    /// A round atom whose exterior is a solid torus glued along `complementary_meridian`.
    pub fn round(complementary_meridian: Option<Slope>) -> Self {
        AtomKnot {
            is_round: true,
            ambient_pi1_cyclic: true,
            complementary_meridian,
            ..AtomKnot::with_slopes(Vec::new())
        }
    }

    fn theorem_b_flags(&self) -> bool {
        self.meridionally_small && !self.is_round && !self.is_cable && self.ambient_pi1_cyclic
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Cabling {
    #[serde(with = "encoding::int")]
    pub p: BigInt,
    #[serde(with = "encoding::int")]
    pub q: BigInt,
    /// Framing of the new knot; the surface framing of the concentric torus
    /// when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inner_framing: Option<Framing>,
    #[serde(default, skip_serializing_if = "is_standard")]
    pub orientation: PlanarOrientation,
}

fn is_standard(o: &PlanarOrientation) -> bool {
    *o == PlanarOrientation::Standard
}

impl Cabling {
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Self {
        Cabling {
            p: p.into(),
            q: q.into(),
            inner_framing: None,
            orientation: PlanarOrientation::Standard,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KnotDescription {
    pub base: AtomKnot,
    /// Applied from the base outward.
    #[serde(default)]
    pub cablings: Vec<Cabling>,
}

impl KnotDescription {
    pub fn new(base: AtomKnot, cablings: Vec<Cabling>) -> Self {
        KnotDescription { base, cablings }
    }

    /// Parse and validate a JSON description.
    pub fn from_json(text: &str) -> Result<Self> {
        let d: KnotDescription =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        d.validate()?;
        Ok(d)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("descriptions always serialize")
    }

    pub fn validate(&self) -> Result<()> {
        let b = &self.base;
        if b.is_round && !b.strict_slopes.is_empty() {
            return Err(Error::validation(
                "round atoms have no strict slopes",
                format!(
                    "{} strict slopes declared on a round atom",
                    b.strict_slopes.len()
                ),
            ));
        }
        if b.meridionally_small && b.strict_slopes.iter().any(ExtendedRational::is_infinite) {
            return Err(Error::validation(
                "the meridian is not a boundary slope of a meridionally small knot",
                "strict slopes contain inf",
            ));
        }
        if b.complementary_meridian.is_some() && !b.is_round {
            return Err(Error::validation(
                "gluing data belongs to round atoms",
                "complementary_meridian given for a non-round atom",
            ));
        }
        if b.framing.mu().slope() != Slope::meridian() {
            return Err(Error::validation(
                "a framing starts with a meridian class",
                format!("base framing has mu = {}", b.framing.mu()),
            ));
        }
        for (i, c) in self.cablings.iter().enumerate() {
            validate_cabling(&c.p, &c.q).map_err(|e| {
                Error::validation(
                    "cablings have q >= 2 and gcd(p, q) = 1",
                    format!("cabling {i}: {e}"),
                )
            })?;
        }
        if let Some(h1) = ambient_h1(self) {
            if b.ambient_pi1_cyclic && !h1.is_cyclic() {
                return Err(Error::validation(
                    "cyclic fundamental group forces cyclic H1",
                    format!("computed H1 = {h1}"),
                ));
            }
        }
        Ok(())
    }

    fn level_models(&self) -> Result<Vec<CableSpaceModel>> {
        let mut outer = self.base.framing.clone();
        self.cablings
            .iter()
            .map(|c| {
                let inner = c.inner_framing.clone().unwrap_or_else(Framing::reference);
                let model = CableSpaceModel::build(
                    c.p.clone(),
                    c.q.clone(),
                    &outer,
                    &inner,
                    c.orientation,
                )?;
                outer = inner;
                Ok(model)
            })
            .collect()
    }

    /// `q₁²⋯q_n²`
    pub fn q_squared_product(&self) -> BigInt {
        self.cablings.iter().map(|c| &c.q * &c.q).product()
    }
}

/// A lower bound in `Q ∪ {−∞}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LowerBound {
    NegInfinity,
    Finite(BigRational),
}

impl LowerBound {
    pub fn integer(n: impl Into<BigInt>) -> Self {
        LowerBound::Finite(BigRational::from_integer(n.into()))
    }

    pub fn as_finite(&self) -> Option<&BigRational> {
        match self {
            LowerBound::Finite(r) => Some(r),
            LowerBound::NegInfinity => None,
        }
    }
}

impl From<Option<BigRational>> for LowerBound {
    fn from(r: Option<BigRational>) -> Self {
        r.map_or(LowerBound::NegInfinity, LowerBound::Finite)
    }
}

impl fmt::Display for LowerBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LowerBound::Finite(r) => write!(f, "{r}"),
            LowerBound::NegInfinity => f.write_str("-inf"),
        }
    }
}

impl Serialize for LowerBound {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            LowerBound::Finite(r) => encoding::rational::serialize(r, s),
            LowerBound::NegInfinity => s.serialize_str("-inf"),
        }
    }
}

impl<'de> Deserialize<'de> for LowerBound {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        match &v {
            serde_json::Value::String(s) if s == "-inf" => Ok(LowerBound::NegInfinity),
            _ => encoding::rational::deserialize(v)
                .map(LowerBound::Finite)
                .map_err(serde::de::Error::custom),
        }
    }
}

fn set_diameter(values: &[ExtendedRational]) -> LowerBound {
    diameter(values.iter().filter_map(ExtendedRational::as_finite)).into()
}

/// The single route a certificate's `d_lower` comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    /// The knot is a generalized iterated torus knot; no bound is asserted.
    Gitk,
    /// Base `d ≥ 2` for atoms meeting the Theorem B hypotheses, scaled by `∏qᵢ²`.
    TheoremBAxiom,
    /// Diameter of the propagated declared strict slopes.
    DeclaredSet,
    NoBound,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::Gitk => "GITK (Theorem B, case (ii))",
            Route::TheoremBAxiom => "Theorem B axiom: d >= 2 q_1^2 ... q_n^2",
            Route::DeclaredSet => "propagated strict slopes (Theorem A)",
            Route::NoBound => "no bound",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Theorem {
    A,
    BAxiom,
    C,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremTag {
    pub theorem: Theorem,
    /// Chain level the tag refers to, counted from the base.
    pub level: usize,
    pub bound: LowerBound,
    pub statement: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Level {
    pub framing: Framing,
    pub slopes: Vec<ExtendedRational>,
    pub diameter: LowerBound,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiameterCertificate {
    pub levels: Vec<Level>,
    pub transfers: Vec<TransferCertificate>,
    pub d_lower: LowerBound,
    pub route: Route,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub tags: Vec<TheoremTag>,
    pub gitk: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ambient_h1: Option<FpAbelianGroup>,
}

/// A knot is a generalized iterated torus knot iff its chain ends in a round knot.
pub fn recognize_gitk(d: &KnotDescription) -> bool {
    d.base.is_round
}

/// `H₁` of the ambient manifold when it is determined by round gluing data.
pub fn ambient_h1(d: &KnotDescription) -> Option<FpAbelianGroup> {
    let b = &d.base;
    match (&b.complementary_meridian, b.is_round) {
        (Some(cm), true) => Some(glued_manifold_h1(&b.framing, cm)),
        _ => None,
    }
}

fn sorted(mut v: Vec<ExtendedRational>) -> Vec<ExtendedRational> {
    v.sort();
    v.dedup();
    v
}

fn propagate_with(d: &KnotDescription, maps: &[AffineSlopeMap]) -> Vec<Vec<ExtendedRational>> {
    let mut levels = vec![sorted(d.base.strict_slopes.clone())];
    for m in maps {
        let next = levels
            .last()
            .expect("level 0")
            .iter()
            .map(|s| m.apply(s))
            .collect();
        levels.push(sorted(next));
    }
    levels
}

/// Strict slope sets of every knot in the chain, level 0 being the base.
pub fn propagate(d: &KnotDescription) -> Result<Vec<Vec<ExtendedRational>>> {
    d.validate()?;
    if !d.base.meridionally_small {
        return Err(Error::validation(
            "propagation starts from a meridionally small base",
            "base is not flagged meridionally_small",
        ));
    }
    let maps = d
        .level_models()?
        .iter()
        .map(|m| transfer_map(m, &m.f_outer, &m.f_inner))
        .collect::<Result<Vec<_>>>()?;
    Ok(propagate_with(d, &maps))
}

pub fn diameter_lower_bound(d: &KnotDescription) -> Result<DiameterCertificate> {
    diameter_lower_bound_with_grid(d, DEFAULT_GRID)
}

pub fn diameter_lower_bound_with_grid(
    d: &KnotDescription,
    grid: u32,
) -> Result<DiameterCertificate> {
    d.validate()?;
    let models = d.level_models()?;
    let transfers = models
        .iter()
        .map(|m| certify(m, grid))
        .collect::<Result<Vec<_>>>()?;
    let maps: Vec<_> = transfers.iter().map(|t| t.map.clone()).collect();
    let sets = propagate_with(d, &maps);

    let framings =
        std::iter::once(d.base.framing.clone()).chain(models.iter().map(|m| m.f_inner.clone()));
    let levels: Vec<Level> = sets
        .into_iter()
        .zip(framings)
        .map(|(slopes, framing)| Level {
            diameter: set_diameter(&slopes),
            framing,
            slopes,
        })
        .collect();

    let gitk = recognize_gitk(d);
    let base = &d.base;
    let mut tags = Vec::new();
    let mut routes: Vec<(Route, LowerBound)> = Vec::new();

    if !gitk && base.meridionally_small {
        if base.theorem_b_flags() {
            let bound = LowerBound::integer(BigInt::from(2) * d.q_squared_product());
            tags.push(TheoremTag {
                theorem: Theorem::BAxiom,
                level: 0,
                bound: LowerBound::integer(2),
                statement: "base atom is meridionally small, neither round nor cable, in a manifold with cyclic pi_1: d >= 2".into(),
            });
            routes.push((Route::TheoremBAxiom, bound));
        }
        if !base.strict_slopes.is_empty() {
            for (i, c) in d.cablings.iter().enumerate() {
                tags.push(TheoremTag {
                    theorem: Theorem::A,
                    level: i + 1,
                    bound: levels[i + 1].diameter.clone(),
                    statement: format!(
                        "d_K' >= q^2 d_K with q = {}: {} = {}*{}",
                        c.q,
                        levels[i + 1].diameter,
                        &c.q * &c.q,
                        levels[i].diameter
                    ),
                });
            }
            routes.push((
                Route::DeclaredSet,
                levels.last().expect("level 0").diameter.clone(),
            ));
        }
        if let (Some(last), true) = (d.cablings.last(), base.ambient_pi1_cyclic) {
            let q2 = &last.q * &last.q;
            tags.push(TheoremTag {
                theorem: Theorem::C,
                level: d.cablings.len(),
                bound: LowerBound::integer(BigInt::from(2) * &q2),
                statement: format!(
                    "q-strand cable knot with q = {}: d >= 2q^2 = {} unless GITK",
                    last.q,
                    BigInt::from(2) * q2
                ),
            });
        }
    }

    let (route, d_lower, reason) = if gitk {
        (
            Route::Gitk,
            LowerBound::NegInfinity,
            Some("generalized iterated torus knot: no bound asserted".to_string()),
        )
    } else if let Some((route, bound)) =
        routes
            .iter()
            .fold(None::<&(Route, LowerBound)>, |best, r| match best {
                Some(b) if b.1 >= r.1 => Some(b),
                _ => Some(r),
            })
    {
        (*route, bound.clone(), None)
    } else {
        let why = if !base.meridionally_small {
            "base is not meridionally small, so d_K is undefined along the chain"
        } else {
            "no strict slopes declared and the Theorem B hypotheses are not all flagged: d_K = -inf"
        };
        (
            Route::NoBound,
            LowerBound::NegInfinity,
            Some(why.to_string()),
        )
    };

    Ok(DiameterCertificate {
        levels,
        transfers,
        d_lower,
        route,
        reason,
        tags,
        gitk,
        ambient_h1: ambient_h1(d),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CorollaryBranch {
    /// `d_K ≥ 2q²`
    LargeDiameter,
    /// `K` is a generalized iterated torus knot.
    Gitk,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorollaryReport {
    #[serde(with = "encoding::int")]
    pub q: BigInt,
    #[serde(with = "encoding::rational")]
    pub threshold: BigRational,
    pub d_lower: LowerBound,
    pub gitk: bool,
    pub branch: Option<CorollaryBranch>,
    pub satisfied: bool,
}

/// Check the dichotomy `d_K ≥ 2q²` or GITK for a cable description.
pub fn check_corollary_c(d: &KnotDescription) -> Result<CorollaryReport> {
    let Some(outer) = d.cablings.last() else {
        return Err(Error::NotCableDescription("no cablings".into()));
    };
    if !(d.base.ambient_pi1_cyclic && d.base.meridionally_small) {
        return Err(Error::NotCableDescription(
            "needs meridionally_small and ambient_pi1_cyclic".into(),
        ));
    }
    let cert = diameter_lower_bound(d)?;
    Ok(corollary_from(&cert, &outer.q))
}

pub(crate) fn corollary_from(cert: &DiameterCertificate, q: &BigInt) -> CorollaryReport {
    let threshold = BigRational::from_integer(BigInt::from(2) * q * q);
    let branch = if cert.gitk {
        Some(CorollaryBranch::Gitk)
    } else if cert.d_lower.as_finite().is_some_and(|b| *b >= threshold) {
        Some(CorollaryBranch::LargeDiameter)
    } else {
        None
    };
    CorollaryReport {
        q: q.clone(),
        threshold,
        d_lower: cert.d_lower.clone(),
        gitk: cert.gitk,
        satisfied: branch.is_some(),
        branch,
    }
}

impl DiameterCertificate {
    /// The Corollary C check for a certificate of a cable description.
    pub fn corollary(&self, d: &KnotDescription) -> Option<CorollaryReport> {
        let outer = d.cablings.last()?;
        (d.base.ambient_pi1_cyclic && d.base.meridionally_small)
            .then(|| corollary_from(self, &outer.q))
    }

    pub fn bound_is_trivial(&self) -> bool {
        self.d_lower == LowerBound::NegInfinity
    }
}
