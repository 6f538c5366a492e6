//! PGL_n as pairs `(L; M)`: a line bundle with `Lⁿ ≅ O` and an n×n matrix of
//! sections of `L` whose determinant generates `Lⁿ`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::bundle::Bundle;
use crate::error::{Error, Result};
use crate::ideal::{primes_above, FractionalIdeal, PicClass};
use crate::point::ProjPoint;
use crate::ring::{factor_bigint, RingDescriptor, RingElement};

pub type Matrix = Vec<Vec<RingElement>>;

/// An element `(L; M)` of G_n.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GnElement {
    bundle: Bundle,
    matrix: Matrix,
}

/// An invertible matrix over R.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GLMatrix {
    ring: RingDescriptor,
    rows: Matrix,
}

/// Outcome of the Dedekind membership test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Membership {
    Member(GnElement),
    NotMember { violating_prime: FractionalIdeal },
}

fn square_size(m: &Matrix) -> Result<usize> {
    let n = m.len();
    if n == 0 || m.iter().any(|row| row.len() != n) {
        return Err(Error::DimensionMismatch("matrix is not square".into()));
    }
    Ok(n)
}

/// Determinant by cofactor expansion along the first row.
pub fn det(m: &Matrix) -> Result<RingElement> {
    let n = square_size(m)?;
    if n == 1 {
        return Ok(m[0][0].clone());
    }
    let mut acc = RingElement::zero(m[0][0].ring());
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let term = m[0][j].try_mul(&det(&minor(m, 0, j))?)?;
        acc = if j % 2 == 0 { acc.try_add(&term)? } else { acc.try_sub(&term)? };
    }
    Ok(acc)
}

fn minor(m: &Matrix, row: usize, col: usize) -> Matrix {
    m.iter()
        .enumerate()
        .filter(|&(i, _)| i != row)
        .map(|(_, r)| {
            r.iter()
                .enumerate()
                .filter(|&(j, _)| j != col)
                .map(|(_, x)| x.clone())
                .collect()
        })
        .collect()
}

/// `ad(M)_{ij} = (−1)^{i+j} det(M^{ji})`.
pub fn adjugate(m: &Matrix) -> Result<Matrix> {
    let n = square_size(m)?;
    let ring = m[0][0].ring();
    if n == 1 {
        return Ok(vec![vec![RingElement::one(ring)]]);
    }
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            let c = det(&minor(m, j, i))?;
            row.push(if (i + j) % 2 == 0 { c } else { -c });
        }
        out.push(row);
    }
    Ok(out)
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    let n = square_size(a)?;
    if square_size(b)? != n {
        return Err(Error::DimensionMismatch(format!("{n}x{n} times {0}x{0}", b.len())));
    }
    let ring = a[0][0].ring();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            let mut acc = RingElement::zero(ring);
            for k in 0..n {
                acc = acc.try_add(&a[i][k].try_mul(&b[k][j])?)?;
            }
            row.push(acc);
        }
        out.push(row);
    }
    Ok(out)
}

fn scale_matrix(m: &Matrix, x: &RingElement) -> Matrix {
    m.iter().map(|row| row.iter().map(|e| e * x).collect()).collect()
}

fn identity_matrix(ring: RingDescriptor, n: usize) -> Matrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { RingElement::one(ring) } else { RingElement::zero(ring) })
                .collect()
        })
        .collect()
}

impl GnElement {
    /// Validate `(L; M)`: entries are sections of `L` and `det M` generates `Lⁿ`.
    pub fn new(bundle: Bundle, matrix: Matrix) -> Result<GnElement> {
        let n = square_size(&matrix)?;
        if n < 2 {
            return Err(Error::DimensionMismatch("G_n needs n >= 2".into()));
        }
        let matrix = matrix
            .iter()
            .map(|row| row.iter().map(|x| bundle.require_section(x)).collect())
            .collect::<Result<Matrix>>()?;
        let d = det(&matrix)?;
        let power = bundle.pow(n as i64);
        if !power.generates(&d)? {
            return Err(Error::DeterminantNotGenerating {
                det: d.to_string(),
                power: power.to_string(),
            });
        }
        Ok(GnElement { bundle, matrix })
    }

    pub fn identity(ring: RingDescriptor, n: usize) -> GnElement {
        let bundle = Bundle::trivial(ring);
        let matrix = identity_matrix(bundle.section_ring(), n);
        GnElement { bundle, matrix }
    }

    pub fn ring(&self) -> RingDescriptor {
        self.bundle.ring()
    }

    pub fn n(&self) -> usize {
        self.matrix.len()
    }

    pub fn bundle(&self) -> &Bundle {
        &self.bundle
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn det(&self) -> RingElement {
        det(&self.matrix).expect("validated matrix")
    }

    fn require_compatible(&self, other: &GnElement) -> Result<()> {
        if self.ring() != other.ring() {
            return Err(Error::RingMismatch {
                left: self.ring(),
                right: other.ring(),
            });
        }
        if self.n() != other.n() {
            return Err(Error::DimensionMismatch(format!("G_{} vs G_{}", self.n(), other.n())));
        }
        Ok(())
    }

    /// `(L·L′; M ⋆ M′)`.
    pub fn mul(&self, other: &GnElement) -> Result<GnElement> {
        self.require_compatible(other)?;
        Ok(GnElement {
            bundle: self.bundle.mul(&other.bundle)?,
            matrix: mat_mul(&self.matrix, &other.matrix)?,
        })
    }

    /// `(L^{n−1}; ad M)`.
    pub fn inverse(&self) -> GnElement {
        GnElement {
            bundle: self.bundle.pow(self.n() as i64 - 1),
            matrix: adjugate(&self.matrix).expect("square"),
        }
    }

    /// The scalar λ with `λL = L′` and `λM = M′`, if there is one.
    ///
    /// `M′ = λM` forces `M′·ad(M) = λ·det(M)·I`, which pins λ down even when
    /// no single entry ratio is defined (as over ℤ/n).
    pub fn equivalence_scalar(&self, other: &GnElement) -> Result<Option<RingElement>> {
        self.require_compatible(other)?;
        let p = mat_mul(&other.matrix, &adjugate(&self.matrix)?)?;
        let c = p[0][0].clone();
        for (i, row) in p.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                let expected = if i == j { &c } else { &RingElement::zero(x.ring()) };
                if x != expected {
                    return Ok(None);
                }
            }
        }
        let lambda = c.checked_div(&self.det())?;
        if !lambda.is_zero() && !self.ring().is_domain() && !lambda.is_unit() {
            return Ok(None);
        }
        if lambda.is_zero() || scale_matrix(&self.matrix, &lambda) != other.matrix {
            return Ok(None);
        }
        if self.bundle.scaled_by(&lambda)? != other.bundle {
            return Ok(None);
        }
        Ok(Some(lambda))
    }

    /// `(L; M) ∼ (L′; M′)`.
    pub fn equivalent(&self, other: &GnElement) -> Result<bool> {
        Ok(self.equivalence_scalar(other)?.is_some())
    }

    /// `(λL; λM)`.
    pub fn rescale(&self, lambda: &RingElement) -> Result<GnElement> {
        let lambda = self.bundle.section(lambda)?;
        if lambda.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(GnElement {
            bundle: self.bundle.scaled_by(&lambda)?,
            matrix: scale_matrix(&self.matrix, &lambda),
        })
    }

    /// The class of `L`, an n-torsion element of Pic(R).
    pub fn pic_class(&self) -> Result<PicClass> {
        self.bundle.pic_class().ok_or(Error::Unsupported {
            operation: "Picard class",
            ring: self.ring(),
        })
    }

    /// A matrix `M/g` representing the element when `L = gR` is principal.
    pub fn lift_to_gl(&self) -> Result<Option<GLMatrix>> {
        let Some(g) = self.bundle.trivializing_generator() else {
            return Ok(None);
        };
        let g = self.bundle.section(&g)?;
        let ring = self.ring();
        let rows = self
            .matrix
            .iter()
            .map(|row| row.iter().map(|x| x.checked_div(&g)?.coerce(ring)).collect())
            .collect::<Result<Matrix>>()?;
        GLMatrix::new(ring, rows).map(Some)
    }

    /// The action on ℙ¹: `(L·A; M ⋆ (a₀, a₁)ᵀ)`.
    pub fn act(&self, a: &ProjPoint) -> Result<ProjPoint> {
        if self.n() != 2 {
            return Err(Error::DimensionMismatch(format!("G_{} does not act on P^1", self.n())));
        }
        if self.ring() != a.ring() {
            return Err(Error::RingMismatch {
                left: self.ring(),
                right: a.ring(),
            });
        }
        let m = &self.matrix;
        let b0 = &(&m[0][0] * a.a0()) + &(&m[0][1] * a.a1());
        let b1 = &(&m[1][0] * a.a0()) + &(&m[1][1] * a.a1());
        ProjPoint::new(self.bundle.mul(a.bundle())?, &b0, &b1)
    }

    /// A representative depending only on the equivalence class.
    ///
    /// The bundle is moved to the integral ideal of least norm in its class
    /// (ties broken by the HNF data), then the remaining unit ambiguity is
    /// removed by normalizing the first nonzero entry.
    pub fn canonical(&self) -> Result<GnElement> {
        let moved = match &self.bundle {
            Bundle::Ideal(ideal) if !self.ring().is_field() => {
                let target = least_ideal_in_class(ideal)?;
                let lambda = target
                    .mul(&ideal.inverse())?
                    .principal_generator()
                    .ok_or_else(|| Error::Internal("class representative is not equivalent".into()))?;
                self.rescale(&lambda)?
            }
            _ => self.clone(),
        };
        let pivot = moved
            .matrix
            .iter()
            .flatten()
            .find(|x| !x.is_zero())
            .expect("nonsingular")
            .clone();
        let ring = self.ring();
        if ring.is_field() {
            return moved.rescale(&pivot.unit_inverse()?);
        }
        let key = |x: &RingElement| -> Vec<num_rational::BigRational> {
            match x.rational_parts() {
                Some((a, b)) => vec![a, b],
                None => vec![num_rational::BigRational::from_integer(x.residue().expect("residue").into())],
            }
        };
        let best = units(ring)
            .into_iter()
            .map(|u| {
                let u = moved.bundle.section(&u).expect("unit");
                (key(&(&pivot * &u)), u)
            })
            .max_by(|x, y| x.0.cmp(&y.0))
            .expect("units exist");
        moved.rescale(&best.1)
    }
}

impl fmt::Display for GnElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .matrix
            .iter()
            .map(|row| {
                let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        write!(f, "({}; [{}])", self.bundle, rows.join(", "))
    }
}

/// The units of a non-field ring kind.
fn units(ring: RingDescriptor) -> Vec<RingElement> {
    match ring {
        RingDescriptor::IntegersMod { n } => (1..n)
            .map(|x| RingElement::from_int(ring, x))
            .filter(RingElement::is_unit)
            .collect(),
        RingDescriptor::QuadraticOrder { d: -1 } => {
            let i = RingElement::sqrt_d(ring).expect("quadratic");
            vec![RingElement::one(ring), -RingElement::one(ring), i.clone(), -i]
        }
        _ => vec![RingElement::one(ring), -RingElement::one(ring)],
    }
}

/// The integral ideal of least norm in the class of `ideal`, smallest `(k, a, b)` for `k·(a, b+√d)`.
fn least_ideal_in_class(ideal: &FractionalIdeal) -> Result<FractionalIdeal> {
    let ring = ideal.ring();
    let inverse = ideal.inverse();
    let Some(d) = ring.quadratic_d() else {
        return Ok(FractionalIdeal::unit(ring));
    };
    let mut norm = 1u64;
    loop {
        for k in 1..=norm {
            if norm % (k * k) != 0 {
                continue;
            }
            let a = norm / (k * k);
            for b in 0..a {
                let bb = BigInt::from(b);
                if !(&bb * &bb - BigInt::from(d)).is_multiple_of(&BigInt::from(a)) {
                    continue;
                }
                let gens = [
                    RingElement::from_int(ring, a * k),
                    RingElement::from_int_parts(ring, (b * k) as i64, k as i64)?,
                ];
                let candidate = FractionalIdeal::from_generators(ring, &gens)?;
                if candidate.mul(&inverse)?.is_principal() {
                    return Ok(candidate);
                }
            }
        }
        norm += 1;
    }
}

impl GLMatrix {
    pub fn new(ring: RingDescriptor, rows: Matrix) -> Result<GLMatrix> {
        square_size(&rows)?;
        let rows = rows
            .iter()
            .map(|row| row.iter().map(|x| x.coerce(ring)).collect())
            .collect::<Result<Matrix>>()?;
        let d = det(&rows)?;
        if !d.is_unit() {
            return Err(Error::NotAUnit(format!("determinant {d}")));
        }
        Ok(GLMatrix { ring, rows })
    }

    pub fn from_ints(ring: RingDescriptor, rows: &[Vec<i64>]) -> Result<GLMatrix> {
        let rows = rows
            .iter()
            .map(|row| row.iter().map(|&x| RingElement::from_int(ring, x)).collect())
            .collect();
        GLMatrix::new(ring, rows)
    }

    pub fn ring(&self) -> RingDescriptor {
        self.ring
    }

    pub fn rows(&self) -> &Matrix {
        &self.rows
    }

    /// `(O; M)`.
    pub fn to_gn(&self) -> Result<GnElement> {
        let bundle = Bundle::trivial(self.ring);
        let matrix = self
            .rows
            .iter()
            .map(|row| row.iter().map(|x| bundle.section(x)).collect())
            .collect::<Result<Matrix>>()?;
        GnElement::new(bundle, matrix)
    }

    /// Whether `M` maps to the identity of G_n.
    pub fn in_scalar_kernel(&self) -> Result<bool> {
        let gn = self.to_gn()?;
        GnElement::identity(self.ring, gn.n()).equivalent(&gn)
    }

    pub fn is_unit_scalar(&self) -> bool {
        let c = &self.rows[0][0];
        c.is_unit()
            && self.rows.iter().enumerate().all(|(i, row)| {
                row.iter()
                    .enumerate()
                    .all(|(j, x)| if i == j { x == c } else { x.is_zero() })
            })
    }
}

/// Rational primes dividing the numerator or denominator of the norm of `x`.
fn norm_support(x: &RingElement) -> Vec<u64> {
    let Some(n) = x.norm() else {
        return Vec::new();
    };
    if n.is_zero() {
        return Vec::new();
    }
    let mut out: Vec<u64> = factor_bigint(&n.numer().abs())
        .into_iter()
        .chain(factor_bigint(n.denom()))
        .map(|(p, _)| p)
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Whether the matrix `A` over K comes from an element `(I; A)` of G_n(R), for R = ℤ or ℤ[√d].
///
/// The conditions are `n | ord_𝔭(det A)` and `ord_𝔭(A_ij) ≥ ord_𝔭(det A)/n`
/// at every prime; then `I = ∏ 𝔭^{ord_𝔭(det A)/n}`. Only primes over
/// rational primes dividing a norm of `det A` or of an entry can contribute.
pub fn dedekind_membership(ring: RingDescriptor, a: &Matrix) -> Result<Membership> {
    if !matches!(ring, RingDescriptor::Integers | RingDescriptor::QuadraticOrder { .. }) {
        return Err(Error::Unsupported {
            operation: "Dedekind membership",
            ring,
        });
    }
    let field = ring.fraction_field().expect("domain");
    let a = a
        .iter()
        .map(|row| row.iter().map(|x| x.coerce(field)).collect())
        .collect::<Result<Matrix>>()?;
    let n = square_size(&a)?;
    let d = det(&a)?;
    if d.is_zero() {
        return Err(Error::Singular);
    }
    let mut support = norm_support(&d);
    for x in a.iter().flatten() {
        support.extend(norm_support(x));
    }
    support.sort_unstable();
    support.dedup();

    let det_ideal = FractionalIdeal::principal(ring, &d)?;
    let mut bundle = FractionalIdeal::unit(ring);
    for p in support {
        for prime in primes_above(ring, p)? {
            let v = det_ideal.ord(&prime)?;
            let violation = prime.clone();
            if v.rem_euclid(n as i64) != 0 {
                return Ok(Membership::NotMember { violating_prime: violation });
            }
            let m = v / n as i64;
            for x in a.iter().flatten().filter(|x| !x.is_zero()) {
                if FractionalIdeal::principal(ring, x)?.ord(&prime)? < m {
                    return Ok(Membership::NotMember { violating_prime: violation });
                }
            }
            bundle = bundle.mul(&prime.pow(m))?;
        }
    }
    GnElement::new(Bundle::Ideal(bundle), a).map(Membership::Member)
}
