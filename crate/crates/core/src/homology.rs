//! Integer linear algebra and the first homology of the pieces we glue.
//!
//! The cable space `N` of a `(p, q)` cabling is cut along the concentric torus
//! `T` carrying the cabling curve `K'`. That leaves an inner solid torus
//! `V_in` and an outer collar `C ≅ T² × I`, meeting in the annulus
//! `A = T − nbhd(K')`. Mayer–Vietoris for this decomposition gives
//!
//! ```text
//! H₁(A) = Z⟨k⟩ ──> H₁(V_in) ⊕ H₁(C) = Z⟨x⟩ ⊕ Z⟨m, l⟩ ──> H₁(N) ──> 0
//!           k ↦ (q·x, p·m + q·l)
//! ```
//!
//! so `H₁(N)` is presented on generators `(x, m, l)` by the single relation
//! `q·x − p·m − q·l`. Here `x` is the core of `V_in`, `m` the meridian and `l`
//! the longitude of the enveloping solid torus, all carried through the collar
//! to `T₁ = ∂V`.
//!
//! Reference classes on the two boundary tori, written in `(x, m, l)`:
//!
//! * `T₁`: `e_μ = m`, `e_λ = l`.
//! * `T₂ = ∂W`: `e_λ' = p·m + q·l` is the push-off of `K'` along `T`;
//!   `e_μ'` is the meridian of `K'`. With `p·s − q·r = 1`, the curve
//!   `c = r·m + s·l` on `T` meets `K'` once and the meridian is the difference
//!   of its two push-offs, `e_μ' = (r·m + s·l) − s·x`. This orientation gives
//!   `q·e_μ' = −m` in `H₁(N)`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::encoding;
use crate::error::{Error, Result};
use crate::slope::{Framing, PrimitiveClass, Sign, Slope};

/// A dense integer matrix in row-major order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    #[serde(with = "encoding::int_vec")]
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(IntMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows<T: Clone + Into<BigInt>>(rows: &[Vec<T>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        let entries = rows
            .iter()
            .flat_map(|r| r.iter().cloned().map(Into::into))
            .collect();
        IntMatrix::new(rows.len(), cols, entries)
    }

    /// Parses `rows cols` followed by the row-major entries, all
    /// whitespace-separated.
    pub fn parse(text: &str) -> Result<Self> {
        let mut it = text.split_whitespace();
        let mut dim = |what: &str| -> Result<usize> {
            it.next()
                .ok_or_else(|| Error::Parse(format!("missing {what}")))?
                .parse::<usize>()
                .map_err(|e| Error::Parse(format!("bad {what}: {e}")))
        };
        let (rows, cols) = (dim("row count")?, dim("column count")?);
        let entries = it
            .map(|tok| {
                tok.parse::<BigInt>()
                    .map_err(|_| Error::Parse(format!("not an integer: {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        IntMatrix::new(rows, cols, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * &other[(k, j)];
                }
            }
        }
        Ok(out)
    }

    /// Row vector times matrix.
    pub fn apply_row(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.rows, "vector length must match row count");
        (0..self.cols)
            .map(|j| (0..self.rows).map(|i| &v[i] * &self[(i, j)]).sum())
            .collect()
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<BigInt> {
        if self.rows != self.cols {
            return Err(Error::Dimension(
                "determinant of a non-square matrix".into(),
            ));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                    Some(i) => {
                        a.swap_rows(i, k);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)]) / &prev;
                    a[(i, j)] = v;
                }
            }
            prev = a[(k, k)].clone();
        }
        Ok(if n == 0 {
            sign
        } else {
            sign * &a[(n - 1, n - 1)]
        })
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for r in 0..self.rows {
            self.entries.swap(r * self.cols + i, r * self.cols + j);
        }
    }

    /// row[dst] += c · row[src]
    fn add_row(&mut self, dst: usize, src: usize, c: &BigInt) {
        for k in 0..self.cols {
            let v = c * &self[(src, k)];
            self[(dst, k)] += v;
        }
    }

    /// col[dst] += c · col[src]
    fn add_col(&mut self, dst: usize, src: usize, c: &BigInt) {
        for k in 0..self.rows {
            let v = c * &self[(k, src)];
            self[(k, dst)] += v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for k in 0..self.cols {
            let v = -&self[(i, k)];
            self[(i, k)] = v;
        }
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)].is_zero()))
    }

    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.rows.min(self.cols))
            .map(|i| self[(i, i)].clone())
            .collect()
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for i in 0..self.rows {
            let line: Vec<String> = (0..self.cols)
                .map(|j| format!("{:>width$}", cells[i * self.cols + j]))
                .collect();
            writeln!(f, "[{}]", line.join(" "))?;
        }
        Ok(())
    }
}

/// `U·A·V = D` with `U`, `V` unimodular and `D` in Smith normal form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SnfResult {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SnfResult {
    pub fn rank(&self) -> usize {
        self.d.diagonal().iter().filter(|x| !x.is_zero()).count()
    }
}

/// Smith normal form by repeated pivoting on the entry of smallest nonzero
/// absolute value (first in row-major order) of the trailing submatrix.
pub fn smith_normal_form(a: &IntMatrix) -> SnfResult {
    let (r, c) = (a.rows, a.cols);
    let mut d = a.clone();
    let mut u = IntMatrix::identity(r);
    let mut v = IntMatrix::identity(c);

    for k in 0..r.min(c) {
        loop {
            let mut pivot: Option<(usize, usize)> = None;
            for i in k..r {
                for j in k..c {
                    let x = &d[(i, j)];
                    if !x.is_zero() && pivot.is_none_or(|(pi, pj)| x.abs() < d[(pi, pj)].abs()) {
                        pivot = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = pivot else {
                // trailing block is zero
                return SnfResult { u, d, v };
            };
            d.swap_rows(k, pi);
            u.swap_rows(k, pi);
            d.swap_cols(k, pj);
            v.swap_cols(k, pj);

            let mut clean = true;
            for i in k + 1..r {
                let quo = d[(i, k)].div_floor(&d[(k, k)]);
                if !quo.is_zero() {
                    d.add_row(i, k, &-&quo);
                    u.add_row(i, k, &-&quo);
                }
                clean &= d[(i, k)].is_zero();
            }
            for j in k + 1..c {
                let quo = d[(k, j)].div_floor(&d[(k, k)]);
                if !quo.is_zero() {
                    d.add_col(j, k, &-&quo);
                    v.add_col(j, k, &-&quo);
                }
                clean &= d[(k, j)].is_zero();
            }
            if !clean {
                continue;
            }
            let bad_row =
                (k + 1..r).find(|&i| (k + 1..c).any(|j| !d[(i, j)].is_multiple_of(&d[(k, k)])));
            match bad_row {
                Some(i) => {
                    d.add_row(k, i, &BigInt::one());
                    u.add_row(k, i, &BigInt::one());
                }
                None => break,
            }
        }
        if d[(k, k)].is_negative() {
            d.negate_row(k);
            u.negate_row(k);
        }
    }
    SnfResult { u, d, v }
}

/// A basis (as rows) of the saturated lattice `{ w ∈ Zʳ : w·M = 0 }`.
pub fn left_kernel(m: &IntMatrix) -> IntMatrix {
    let snf = smith_normal_form(m);
    let rank = snf.rank();
    let rows: Vec<BigInt> = (rank..m.rows).flat_map(|i| snf.u.row(i).to_vec()).collect();
    IntMatrix::new(m.rows - rank, m.rows, rows).expect("kernel rows have length m.rows")
}

/// A finitely generated abelian group `Z^n / (row space of A)` in invariant
/// factor form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FpAbelianGroup {
    /// Nonzero factors `≥ 2` in divisibility order, then one `0` per free `Z`.
    #[serde(with = "encoding::int_vec")]
    pub invariant_factors: Vec<BigInt>,
    /// `V` from the Smith form: presentation coordinates `x` become `x·V`.
    pub coordinate_map: IntMatrix,
    /// Diagonal of `D` padded with zeros to one entry per generator.
    #[serde(with = "encoding::int_vec")]
    pub generator_orders: Vec<BigInt>,
}

impl FpAbelianGroup {
    pub fn rank(&self) -> usize {
        self.invariant_factors
            .iter()
            .filter(|d| d.is_zero())
            .count()
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    pub fn is_cyclic(&self) -> bool {
        self.invariant_factors.len() <= 1
    }

    pub fn is_free_of_rank(&self, n: usize) -> bool {
        self.invariant_factors.len() == n && self.rank() == n
    }

    /// Coordinates of the element represented by presentation vector `x`,
    /// one per invariant factor, reduced modulo the finite factors.
    pub fn element(&self, x: &[BigInt]) -> Vec<BigInt> {
        let y = self.coordinate_map.apply_row(x);
        y.into_iter()
            .zip(&self.generator_orders)
            .filter(|(_, d)| !d.is_one())
            .map(|(y, d)| if d.is_zero() { y } else { y.mod_floor(d) })
            .collect()
    }
}

impl fmt::Display for FpAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .invariant_factors
            .iter()
            .map(|d| {
                if d.is_zero() {
                    "Z".to_string()
                } else {
                    format!("Z/{d}")
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// The cokernel of a relation matrix whose columns are the generators.
pub fn group_from_presentation(a: &IntMatrix) -> FpAbelianGroup {
    let snf = smith_normal_form(a);
    let mut orders = snf.d.diagonal();
    orders.resize(a.cols, BigInt::zero());
    let invariant_factors = orders.iter().filter(|d| !d.is_one()).cloned().collect();
    FpAbelianGroup {
        invariant_factors,
        coordinate_map: snf.v,
        generator_orders: orders,
    }
}

/// `H₁` of the closed manifold obtained by filling both sides of a torus,
/// one along the meridian of `f` and the other along `complementary_meridian`.
pub fn glued_manifold_h1(f: &Framing, complementary_meridian: &Slope) -> FpAbelianGroup {
    let rows = vec![
        f.mu().coords().to_vec(),
        complementary_meridian.rep().coords().to_vec(),
    ];
    group_from_presentation(&IntMatrix::from_rows(&rows).expect("two rows of length two"))
}

/// Which way the `q` meridian circles of the planar surface `P = D ∩ N` are
/// oriented against the reference basis of `T₂`.
///
/// `Reversed` negates both reference classes of `T₂`; it describes the same
/// slopes, so slope-level results do not depend on it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PlanarOrientation {
    #[default]
    Standard,
    Reversed,
}

impl PlanarOrientation {
    pub fn flipped(self) -> Self {
        match self {
            PlanarOrientation::Standard => PlanarOrientation::Reversed,
            PlanarOrientation::Reversed => PlanarOrientation::Standard,
        }
    }

    fn sign(self) -> BigInt {
        match self {
            PlanarOrientation::Standard => BigInt::one(),
            PlanarOrientation::Reversed => -BigInt::one(),
        }
    }
}

/// Presentation-coordinate images of the reference classes of both tori.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReferenceImages {
    #[serde(with = "encoding::int_vec")]
    pub outer_mu: Vec<BigInt>,
    #[serde(with = "encoding::int_vec")]
    pub outer_lambda: Vec<BigInt>,
    #[serde(with = "encoding::int_vec")]
    pub inner_mu: Vec<BigInt>,
    #[serde(with = "encoding::int_vec")]
    pub inner_lambda: Vec<BigInt>,
}

/// `H₁(N; Z)` of a cable space with the boundary images and relation constants.
///
/// Images `img_*` are coordinates in `h1 ≅ Z²` of the framing classes
/// `μ, λ` (on `T₁`) and `μ', λ'` (on `T₂`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CableSpaceModel {
    #[serde(with = "encoding::int")]
    pub p: BigInt,
    #[serde(with = "encoding::int")]
    pub q: BigInt,
    pub orientation: PlanarOrientation,
    pub f_outer: Framing,
    pub f_inner: Framing,
    /// Relations on the generators `(x, m, l)`.
    pub presentation: IntMatrix,
    pub reference_images: ReferenceImages,
    pub h1: FpAbelianGroup,
    #[serde(with = "encoding::int_vec")]
    pub img_mu: Vec<BigInt>,
    #[serde(with = "encoding::int_vec")]
    pub img_lambda: Vec<BigInt>,
    #[serde(with = "encoding::int_vec")]
    pub img_mu_prime: Vec<BigInt>,
    #[serde(with = "encoding::int_vec")]
    pub img_lambda_prime: Vec<BigInt>,
    /// `∂[P]` in framing coordinates `(μ, λ, μ', λ')`.
    #[serde(with = "encoding::int_vec")]
    pub boundary_p: Vec<BigInt>,
    pub zeta: Sign,
    #[serde(with = "encoding::rational")]
    pub t: BigRational,
    /// Coefficient of `λ̄` in `λ̄'`; equals `ζ·θ·η·q`.
    #[serde(with = "encoding::rational")]
    pub lambda_coefficient: BigRational,
    pub theta: Sign,
    pub eta: Sign,
}

/// Constants re-derived from raw data; shared by construction and replay.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Derived {
    pub h1: FpAbelianGroup,
    pub img: [Vec<BigInt>; 4],
    pub boundary_p: Vec<BigInt>,
    pub zeta: Sign,
    pub t: BigRational,
    pub lambda_coefficient: BigRational,
}

pub(crate) fn validate_cabling(p: &BigInt, q: &BigInt) -> Result<()> {
    if *q < BigInt::from(2) {
        return Err(Error::TooFewStrands { q: q.clone() });
    }
    if !p.gcd(q).is_one() {
        return Err(Error::CablingNotSimple {
            p: p.clone(),
            q: q.clone(),
        });
    }
    Ok(())
}

fn check_meridional(f: &Framing, torus: &'static str) -> Result<()> {
    if f.mu().slope() != Slope::meridian() {
        return Err(Error::FramingNotMeridional { torus });
    }
    Ok(())
}

fn combo(a: &BigInt, x: &[BigInt], b: &BigInt, y: &[BigInt]) -> Vec<BigInt> {
    x.iter().zip(y).map(|(x, y)| a * x + b * y).collect()
}

fn framing_image(f_class: &PrimitiveClass, e_mu: &[BigInt], e_lambda: &[BigInt]) -> Vec<BigInt> {
    combo(f_class.a(), e_mu, f_class.b(), e_lambda)
}

pub(crate) fn det2(x: &[BigInt], y: &[BigInt]) -> BigInt {
    &x[0] * &y[1] - &x[1] * &y[0]
}

fn mayer_vietoris(
    p: &BigInt,
    q: &BigInt,
    orientation: PlanarOrientation,
) -> (IntMatrix, ReferenceImages) {
    let relation = vec![q.clone(), -p, -q];
    let presentation = IntMatrix::new(1, 3, relation).expect("1x3");
    // p·s − q·r = 1
    let eg = p.extended_gcd(q);
    debug_assert!(eg.gcd.is_one());
    let (s, r) = (eg.x, -eg.y);
    let o = orientation.sign();
    let images = ReferenceImages {
        outer_mu: vec![BigInt::zero(), BigInt::one(), BigInt::zero()],
        outer_lambda: vec![BigInt::zero(), BigInt::zero(), BigInt::one()],
        inner_mu: vec![-&s * &o, &r * &o, &s * &o],
        inner_lambda: vec![BigInt::zero(), p * &o, q * &o],
    };
    (presentation, images)
}

/// Recompute every derived quantity of the model from the presentation, the
/// reference images and the framings, checking each relation on the way.
pub(crate) fn derive(
    q: &BigInt,
    presentation: &IntMatrix,
    refs: &ReferenceImages,
    f_outer: &Framing,
    f_inner: &Framing,
) -> Result<Derived> {
    let bad = |msg: String| Error::InconsistentModel(msg);
    let h1 = group_from_presentation(presentation);
    if !h1.is_free_of_rank(2) {
        return Err(bad(format!("H1(N) is {h1}, expected Z + Z")));
    }
    let to_h1 = |v: Vec<BigInt>| h1.element(&v);
    let img_mu = to_h1(framing_image(
        f_outer.mu(),
        &refs.outer_mu,
        &refs.outer_lambda,
    ));
    let img_lambda = to_h1(framing_image(
        f_outer.lambda(),
        &refs.outer_mu,
        &refs.outer_lambda,
    ));
    let img_mu_p = to_h1(framing_image(
        f_inner.mu(),
        &refs.inner_mu,
        &refs.inner_lambda,
    ));
    let img_lambda_p = to_h1(framing_image(
        f_inner.lambda(),
        &refs.inner_mu,
        &refs.inner_lambda,
    ));

    let det_outer = det2(&img_mu, &img_lambda);
    let det_inner = det2(&img_mu_p, &img_lambda_p);
    if det_outer.is_zero() || det_inner.is_zero() {
        return Err(bad(
            "a boundary inclusion is not a rational isomorphism".into()
        ));
    }

    // ∂[P]: the kernel element of H₁(T₁) ⊕ H₁(T₂) → H₁(N) supported on μ, μ'.
    let img = [img_mu, img_lambda, img_mu_p, img_lambda_p];
    let boundary_map = IntMatrix::from_rows(img.as_ref()).expect("4x2");
    let kernel = left_kernel(&boundary_map);
    let lambda_part = IntMatrix::from_rows(
        &(0..kernel.rows())
            .map(|i| vec![kernel[(i, 1)].clone(), kernel[(i, 3)].clone()])
            .collect::<Vec<_>>(),
    )
    .expect("kx2");
    let meridional = left_kernel(&lambda_part);
    if meridional.rows() != 1 {
        return Err(bad("no unique meridional boundary class".into()));
    }
    let mut boundary_p = kernel.apply_row(meridional.row(0));
    if boundary_p[0].is_negative() {
        boundary_p.iter_mut().for_each(|x| *x = -&*x);
    }
    if !boundary_p[0].is_one() {
        return Err(bad(format!(
            "boundary of P meets T1 in {} meridians",
            boundary_p[0]
        )));
    }
    if boundary_p[2].abs() != *q {
        return Err(bad(format!(
            "boundary of P meets T2 in {} meridians, expected {q}",
            boundary_p[2].abs()
        )));
    }
    let zeta = if boundary_p[2].is_positive() {
        Sign::Plus
    } else {
        Sign::Minus
    };

    // μ̄ = −ζ q μ̄'
    let zq = zeta.apply(q.clone());
    if img[0] != img[2].iter().map(|x| -&zq * x).collect::<Vec<_>>() {
        return Err(bad("meridian relation mu = -zeta q mu' fails".into()));
    }

    // λ̄' = t μ̄ + h λ̄
    let det = BigRational::from_integer(det_outer);
    let t = BigRational::from_integer(det2(&img[3], &img[1])) / &det;
    let h = BigRational::from_integer(det2(&img[0], &img[3])) / &det;
    let expected_h =
        BigRational::from_integer((zeta * f_inner.sign() * f_outer.sign()).apply(q.clone()));
    if h != expected_h {
        return Err(bad(format!(
            "longitude relation: coefficient {h} of lambda, expected zeta*theta*eta*q = {expected_h}"
        )));
    }

    Ok(Derived {
        h1,
        img,
        boundary_p,
        zeta,
        t,
        lambda_coefficient: h,
    })
}

/// The homology model of the cable space of the `q`-strand cabling whose
/// curve is `p·m + q·l` on the concentric torus, with standard orientation.
pub fn cable_space_homology(
    p: impl Into<BigInt>,
    q: impl Into<BigInt>,
    f_outer: &Framing,
    f_inner: &Framing,
) -> Result<CableSpaceModel> {
    CableSpaceModel::build(
        p.into(),
        q.into(),
        f_outer,
        f_inner,
        PlanarOrientation::Standard,
    )
}

impl CableSpaceModel {
    pub fn build(
        p: BigInt,
        q: BigInt,
        f_outer: &Framing,
        f_inner: &Framing,
        orientation: PlanarOrientation,
    ) -> Result<Self> {
        validate_cabling(&p, &q)?;
        check_meridional(f_outer, "T1")?;
        check_meridional(f_inner, "T2")?;
        let (presentation, reference_images) = mayer_vietoris(&p, &q, orientation);
        let d = derive(&q, &presentation, &reference_images, f_outer, f_inner)?;
        let [img_mu, img_lambda, img_mu_prime, img_lambda_prime] = d.img;
        Ok(CableSpaceModel {
            p,
            q,
            orientation,
            f_outer: f_outer.clone(),
            f_inner: f_inner.clone(),
            presentation,
            reference_images,
            h1: d.h1,
            img_mu,
            img_lambda,
            img_mu_prime,
            img_lambda_prime,
            boundary_p: d.boundary_p,
            zeta: d.zeta,
            t: d.t,
            lambda_coefficient: d.lambda_coefficient,
            theta: f_inner.sign(),
            eta: f_outer.sign(),
        })
    }

    /// The same cabling with the opposite planar-surface orientation.
    pub fn reoriented(&self) -> Result<Self> {
        CableSpaceModel::build(
            self.p.clone(),
            self.q.clone(),
            &self.f_outer,
            &self.f_inner,
            self.orientation.flipped(),
        )
    }

    /// Image in `H₁(N)` of a reference class on `T₁`.
    pub fn outer_image(&self, c: &PrimitiveClass) -> Vec<BigInt> {
        let r = &self.reference_images;
        self.h1
            .element(&framing_image(c, &r.outer_mu, &r.outer_lambda))
    }

    /// Image in `H₁(N)` of a reference class on `T₂`.
    pub fn inner_image(&self, c: &PrimitiveClass) -> Vec<BigInt> {
        let r = &self.reference_images;
        self.h1
            .element(&framing_image(c, &r.inner_mu, &r.inner_lambda))
    }

    /// Reference slope of the cabling curve `p·m + q·l` on `T₁`.
    pub fn cabling_slope(&self) -> Slope {
        PrimitiveClass::new(self.p.clone(), self.q.clone())
            .expect("validated coprime")
            .slope()
    }
}
