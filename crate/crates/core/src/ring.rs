//! Exact arithmetic for the supported base rings.
//!
//! Six ring kinds are available: ℚ, 𝔽_p, ℤ, ℤ/n, the maximal order ℤ[√d]
//! of an imaginary quadratic field (d ≡ 2, 3 mod 4) and its fraction field.
//! Elements carry their ring, are always stored in canonical form and
//! compare by coordinates.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One of the supported base rings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawDescriptor", into = "RawDescriptor")]
pub enum RingDescriptor {
    Rationals,
    PrimeField { p: u64 },
    Integers,
    IntegersMod { n: u64 },
    /// ℤ[√d], d < 0 squarefree with d ≡ 2, 3 mod 4.
    QuadraticOrder { d: i64 },
    /// ℚ(√d) for the same d.
    QuadraticFractionField { d: i64 },
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "ring")]
enum RawDescriptor {
    #[serde(rename = "Q")]
    Rationals,
    #[serde(rename = "Fp")]
    PrimeField { p: u64 },
    #[serde(rename = "Z")]
    Integers,
    #[serde(rename = "Zmod")]
    IntegersMod { n: u64 },
    #[serde(rename = "ZsqrtD")]
    QuadraticOrder { d: i64 },
    #[serde(rename = "FracZsqrtD")]
    QuadraticFractionField { d: i64 },
}

impl TryFrom<RawDescriptor> for RingDescriptor {
    type Error = Error;

    fn try_from(raw: RawDescriptor) -> Result<Self> {
        match raw {
            RawDescriptor::Rationals => Ok(RingDescriptor::Rationals),
            RawDescriptor::PrimeField { p } => RingDescriptor::prime_field(p),
            RawDescriptor::Integers => Ok(RingDescriptor::Integers),
            RawDescriptor::IntegersMod { n } => RingDescriptor::integers_mod(n),
            RawDescriptor::QuadraticOrder { d } => RingDescriptor::quadratic_order(d),
            RawDescriptor::QuadraticFractionField { d } => {
                RingDescriptor::quadratic_order(d)?;
                Ok(RingDescriptor::QuadraticFractionField { d })
            }
        }
    }
}

impl From<RingDescriptor> for RawDescriptor {
    fn from(ring: RingDescriptor) -> Self {
        match ring {
            RingDescriptor::Rationals => RawDescriptor::Rationals,
            RingDescriptor::PrimeField { p } => RawDescriptor::PrimeField { p },
            RingDescriptor::Integers => RawDescriptor::Integers,
            RingDescriptor::IntegersMod { n } => RawDescriptor::IntegersMod { n },
            RingDescriptor::QuadraticOrder { d } => RawDescriptor::QuadraticOrder { d },
            RingDescriptor::QuadraticFractionField { d } => {
                RawDescriptor::QuadraticFractionField { d }
            }
        }
    }
}

// Moduli stay below 2^62 so residue products fit comfortably in u128.
const MAX_MODULUS: u64 = 1 << 62;

impl RingDescriptor {
    pub fn prime_field(p: u64) -> Result<Self> {
        if p >= MAX_MODULUS || !is_prime_u64(p) {
            return Err(Error::InvalidDescriptor(format!("{p} is not a supported prime")));
        }
        Ok(RingDescriptor::PrimeField { p })
    }

    pub fn integers_mod(n: u64) -> Result<Self> {
        if !(2..MAX_MODULUS).contains(&n) {
            return Err(Error::InvalidDescriptor(format!("modulus {n} out of range")));
        }
        Ok(RingDescriptor::IntegersMod { n })
    }

    pub fn quadratic_order(d: i64) -> Result<Self> {
        if d >= 0 {
            return Err(Error::InvalidDescriptor(format!("d = {d} must be negative")));
        }
        if !matches!(d.rem_euclid(4), 2 | 3) {
            return Err(Error::InvalidDescriptor(format!(
                "d = {d} must be 2 or 3 mod 4 for Z[sqrt d] to be maximal"
            )));
        }
        if !is_squarefree(d.unsigned_abs()) {
            return Err(Error::InvalidDescriptor(format!("d = {d} is not squarefree")));
        }
        Ok(RingDescriptor::QuadraticOrder { d })
    }

    pub fn quadratic_fraction_field(d: i64) -> Result<Self> {
        RingDescriptor::quadratic_order(d)?;
        Ok(RingDescriptor::QuadraticFractionField { d })
    }

    pub fn is_domain(&self) -> bool {
        !matches!(self, RingDescriptor::IntegersMod { .. })
    }

    pub fn is_field(&self) -> bool {
        matches!(
            self,
            RingDescriptor::Rationals
                | RingDescriptor::PrimeField { .. }
                | RingDescriptor::QuadraticFractionField { .. }
        )
    }

    /// The fraction field, for domains.
    pub fn fraction_field(&self) -> Option<RingDescriptor> {
        match *self {
            RingDescriptor::Integers => Some(RingDescriptor::Rationals),
            RingDescriptor::QuadraticOrder { d } => {
                Some(RingDescriptor::QuadraticFractionField { d })
            }
            RingDescriptor::IntegersMod { .. } => None,
            field => Some(field),
        }
    }

    /// Where sections of bundles over this ring live: K for domains, R itself otherwise.
    pub fn section_ring(&self) -> RingDescriptor {
        self.fraction_field().unwrap_or(*self)
    }

    /// The `d` of a quadratic kind.
    pub fn quadratic_d(&self) -> Option<i64> {
        match *self {
            RingDescriptor::QuadraticOrder { d } | RingDescriptor::QuadraticFractionField { d } => {
                Some(d)
            }
            _ => None,
        }
    }

    /// The modulus of 𝔽_p or ℤ/n.
    pub fn modulus(&self) -> Option<u64> {
        match *self {
            RingDescriptor::PrimeField { p } => Some(p),
            RingDescriptor::IntegersMod { n } => Some(n),
            _ => None,
        }
    }

    fn require_same(&self, other: &RingDescriptor) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RingMismatch {
                left: *self,
                right: *other,
            })
        }
    }
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingDescriptor::Rationals => write!(f, "Q"),
            RingDescriptor::PrimeField { p } => write!(f, "F_{p}"),
            RingDescriptor::Integers => write!(f, "Z"),
            RingDescriptor::IntegersMod { n } => write!(f, "Z/{n}"),
            RingDescriptor::QuadraticOrder { d } => write!(f, "Z[√{d}]"),
            RingDescriptor::QuadraticFractionField { d } => write!(f, "Q(√{d})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Value {
    Rational(BigRational),
    Residue(u64),
    Integer(BigInt),
    Quadratic(BigInt, BigInt),
    QuadraticRational(BigRational, BigRational),
}

/// An exact element of a supported ring, in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingElement {
    ring: RingDescriptor,
    value: Value,
}

fn residue_of(x: &BigInt, n: u64) -> u64 {
    x.mod_floor(&BigInt::from(n))
        .to_u64()
        .expect("residue below modulus")
}

fn mul_mod(x: u64, y: u64, n: u64) -> u64 {
    ((x as u128 * y as u128) % n as u128) as u64
}

/// Inverse of `x` modulo `n` when it exists.
pub(crate) fn inverse_mod(x: u64, n: u64) -> Option<u64> {
    let e = (x as i128).extended_gcd(&(n as i128));
    if e.gcd != 1 {
        return None;
    }
    Some(e.x.rem_euclid(n as i128) as u64)
}

fn rational_into_residue(r: &BigRational, n: u64) -> Option<u64> {
    let den = residue_of(r.denom(), n);
    let inv = inverse_mod(den, n)?;
    Some(mul_mod(residue_of(r.numer(), n), inv, n))
}

impl RingElement {
    pub fn zero(ring: RingDescriptor) -> Self {
        RingElement::from_int(ring, 0)
    }

    pub fn one(ring: RingDescriptor) -> Self {
        RingElement::from_int(ring, 1)
    }

    /// The image of an integer under ℤ → R.
    pub fn from_int(ring: RingDescriptor, x: impl Into<BigInt>) -> Self {
        let x: BigInt = x.into();
        let value = match ring {
            RingDescriptor::Rationals => Value::Rational(BigRational::from_integer(x)),
            RingDescriptor::PrimeField { p: n } | RingDescriptor::IntegersMod { n } => {
                Value::Residue(residue_of(&x, n))
            }
            RingDescriptor::Integers => Value::Integer(x),
            RingDescriptor::QuadraticOrder { .. } => Value::Quadratic(x, BigInt::zero()),
            RingDescriptor::QuadraticFractionField { .. } => {
                Value::QuadraticRational(BigRational::from_integer(x), BigRational::zero())
            }
        };
        RingElement { ring, value }
    }

    /// A rational number interpreted in `ring`, if it lies there.
    pub fn from_rational(ring: RingDescriptor, r: BigRational) -> Result<Self> {
        RingElement::from_parts(ring, r, BigRational::zero())
    }

    /// The element `a + b√d`. Non-quadratic rings require `b = 0`.
    pub fn from_parts(ring: RingDescriptor, a: BigRational, b: BigRational) -> Result<Self> {
        let not_in_ring = |a: &BigRational, b: &BigRational| Error::NotInRing {
            element: format_parts(a, b, ring.quadratic_d().unwrap_or(0)),
            ring,
        };
        if ring.quadratic_d().is_none() && !b.is_zero() {
            return Err(not_in_ring(&a, &b));
        }
        let value = match ring {
            RingDescriptor::Rationals => Value::Rational(a),
            RingDescriptor::PrimeField { p: n } | RingDescriptor::IntegersMod { n } => {
                Value::Residue(rational_into_residue(&a, n).ok_or_else(|| not_in_ring(&a, &b))?)
            }
            RingDescriptor::Integers => {
                if !a.is_integer() {
                    return Err(not_in_ring(&a, &b));
                }
                Value::Integer(a.to_integer())
            }
            RingDescriptor::QuadraticOrder { .. } => {
                if !a.is_integer() || !b.is_integer() {
                    return Err(not_in_ring(&a, &b));
                }
                Value::Quadratic(a.to_integer(), b.to_integer())
            }
            RingDescriptor::QuadraticFractionField { .. } => Value::QuadraticRational(a, b),
        };
        Ok(RingElement { ring, value })
    }

    pub fn from_int_parts(
        ring: RingDescriptor,
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
    ) -> Result<Self> {
        RingElement::from_parts(
            ring,
            BigRational::from_integer(a.into()),
            BigRational::from_integer(b.into()),
        )
    }

    /// √d in a quadratic ring.
    pub fn sqrt_d(ring: RingDescriptor) -> Result<Self> {
        if ring.quadratic_d().is_none() {
            return Err(Error::Unsupported {
                operation: "sqrt_d",
                ring,
            });
        }
        RingElement::from_int_parts(ring, 0, 1)
    }

    pub fn ring(&self) -> RingDescriptor {
        self.ring
    }

    pub fn is_zero(&self) -> bool {
        match &self.value {
            Value::Rational(r) => r.is_zero(),
            Value::Residue(r) => *r == 0,
            Value::Integer(x) => x.is_zero(),
            Value::Quadratic(a, b) => a.is_zero() && b.is_zero(),
            Value::QuadraticRational(a, b) => a.is_zero() && b.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        *self == RingElement::one(self.ring)
    }

    /// Residue in `[0, n)` for 𝔽_p and ℤ/n.
    pub fn residue(&self) -> Option<u64> {
        match self.value {
            Value::Residue(r) => Some(r),
            _ => None,
        }
    }

    /// Coordinates `(a, b)` of `a + b√d` over ℚ (b = 0 for ℤ and ℚ); none for residue rings.
    pub fn rational_parts(&self) -> Option<(BigRational, BigRational)> {
        match &self.value {
            Value::Rational(r) => Some((r.clone(), BigRational::zero())),
            Value::Integer(x) => Some((BigRational::from_integer(x.clone()), BigRational::zero())),
            Value::Quadratic(a, b) => Some((
                BigRational::from_integer(a.clone()),
                BigRational::from_integer(b.clone()),
            )),
            Value::QuadraticRational(a, b) => Some((a.clone(), b.clone())),
            Value::Residue(_) => None,
        }
    }

    /// Integer value for ℤ, or an integral rational.
    pub fn as_integer(&self) -> Option<BigInt> {
        match &self.value {
            Value::Integer(x) => Some(x.clone()),
            Value::Rational(r) if r.is_integer() => Some(r.to_integer()),
            _ => None,
        }
    }

    /// Rational value for ℚ and ℤ.
    pub fn as_rational(&self) -> Option<BigRational> {
        match &self.value {
            Value::Integer(x) => Some(BigRational::from_integer(x.clone())),
            Value::Rational(r) => Some(r.clone()),
            _ => None,
        }
    }

    fn binary(&self, rhs: &RingElement, op: Op) -> Result<RingElement> {
        self.ring.require_same(&rhs.ring)?;
        let d = self.ring.quadratic_d().unwrap_or(0);
        let value = match (&self.value, &rhs.value) {
            (Value::Rational(x), Value::Rational(y)) => Value::Rational(match op {
                Op::Add => x + y,
                Op::Sub => x - y,
                Op::Mul => x * y,
            }),
            (Value::Residue(x), Value::Residue(y)) => {
                let n = self.ring.modulus().expect("residue ring");
                Value::Residue(match op {
                    Op::Add => ((*x as u128 + *y as u128) % n as u128) as u64,
                    Op::Sub => ((*x as u128 + n as u128 - *y as u128) % n as u128) as u64,
                    Op::Mul => mul_mod(*x, *y, n),
                })
            }
            (Value::Integer(x), Value::Integer(y)) => Value::Integer(match op {
                Op::Add => x + y,
                Op::Sub => x - y,
                Op::Mul => x * y,
            }),
            (Value::Quadratic(a, b), Value::Quadratic(c, e)) => {
                let (x, y) = quad_op(a, b, c, e, &BigInt::from(d), op);
                Value::Quadratic(x, y)
            }
            (Value::QuadraticRational(a, b), Value::QuadraticRational(c, e)) => {
                let (x, y) = quad_op(a, b, c, e, &BigRational::from_integer(d.into()), op);
                Value::QuadraticRational(x, y)
            }
            _ => return Err(Error::Internal("payload does not match descriptor".into())),
        };
        Ok(RingElement {
            ring: self.ring,
            value,
        })
    }

    pub fn try_add(&self, rhs: &RingElement) -> Result<RingElement> {
        self.binary(rhs, Op::Add)
    }

    pub fn try_sub(&self, rhs: &RingElement) -> Result<RingElement> {
        self.binary(rhs, Op::Sub)
    }

    pub fn try_mul(&self, rhs: &RingElement) -> Result<RingElement> {
        self.binary(rhs, Op::Mul)
    }

    pub fn pow(&self, exp: u32) -> RingElement {
        let mut acc = RingElement::one(self.ring);
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Field norm `a² − d·b²` of a quadratic element, or the value itself for ℤ and ℚ.
    pub fn norm(&self) -> Option<BigRational> {
        let (a, b) = self.rational_parts()?;
        let d = BigRational::from_integer(self.ring.quadratic_d().unwrap_or(0).into());
        Some(&a * &a - d * &b * &b)
    }

    /// `a − b√d`; the identity on non-quadratic rings.
    pub fn conjugate(&self) -> RingElement {
        let value = match &self.value {
            Value::Quadratic(a, b) => Value::Quadratic(a.clone(), -b),
            Value::QuadraticRational(a, b) => Value::QuadraticRational(a.clone(), -b),
            v => v.clone(),
        };
        RingElement {
            ring: self.ring,
            value,
        }
    }

    pub fn is_unit(&self) -> bool {
        match &self.value {
            Value::Rational(r) => !r.is_zero(),
            Value::QuadraticRational(a, b) => !(a.is_zero() && b.is_zero()),
            Value::Residue(r) => inverse_mod(*r, self.ring.modulus().expect("residue ring")).is_some(),
            Value::Integer(x) => x.abs().is_one(),
            Value::Quadratic(..) => self.norm().is_some_and(|n| n.is_one()),
        }
    }

    pub fn unit_inverse(&self) -> Result<RingElement> {
        if !self.is_unit() {
            return Err(Error::NotAUnit(format!("{self} in {}", self.ring)));
        }
        let value = match &self.value {
            Value::Rational(r) => Value::Rational(r.recip()),
            Value::Residue(r) => {
                Value::Residue(inverse_mod(*r, self.ring.modulus().expect("residue ring")).expect("unit"))
            }
            Value::Integer(x) => Value::Integer(x.clone()),
            // norm 1, so the inverse is the conjugate
            Value::Quadratic(a, b) => Value::Quadratic(a.clone(), -b),
            Value::QuadraticRational(a, b) => {
                let n = self.norm().expect("quadratic");
                Value::QuadraticRational(a / &n, -b / &n)
            }
        };
        Ok(RingElement {
            ring: self.ring,
            value,
        })
    }

    /// `self / rhs` when the quotient exists in the ring.
    ///
    /// Fields divide by any nonzero element, ℤ and ℤ[√d] divide exactly when
    /// the quotient is integral, ℤ/n only by units.
    pub fn checked_div(&self, rhs: &RingElement) -> Result<RingElement> {
        self.ring.require_same(&rhs.ring)?;
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match self.ring {
            RingDescriptor::IntegersMod { .. } | RingDescriptor::PrimeField { .. } => {
                Ok(self * &rhs.unit_inverse()?)
            }
            RingDescriptor::Rationals | RingDescriptor::QuadraticFractionField { .. } => {
                Ok(self * &rhs.unit_inverse()?)
            }
            RingDescriptor::Integers | RingDescriptor::QuadraticOrder { .. } => {
                let k = self.ring.fraction_field().expect("domain");
                let q = self.coerce(k)?.checked_div(&rhs.coerce(k)?)?;
                q.coerce(self.ring)
            }
        }
    }

    /// Move the element between a domain and its fraction field (or keep it in place).
    ///
    /// Embedding R → K always succeeds; K → R succeeds only for integral elements.
    pub fn coerce(&self, target: RingDescriptor) -> Result<RingElement> {
        if self.ring == target {
            return Ok(self.clone());
        }
        let compatible = self.ring.fraction_field() == Some(target)
            || target.fraction_field() == Some(self.ring);
        if !compatible {
            return Err(Error::RingMismatch {
                left: self.ring,
                right: target,
            });
        }
        let (a, b) = self.rational_parts().expect("domain element");
        RingElement::from_parts(target, a, b)
    }
}

#[derive(Clone, Copy)]
enum Op {
    Add,
    Sub,
    Mul,
}

fn quad_op<T>(a: &T, b: &T, c: &T, e: &T, d: &T, op: Op) -> (T, T)
where
    T: Clone,
    for<'x> &'x T: Add<&'x T, Output = T> + Sub<&'x T, Output = T> + Mul<&'x T, Output = T>,
{
    match op {
        Op::Add => (a + c, b + e),
        Op::Sub => (a - c, b - e),
        Op::Mul => (&(a * c) + &(&(b * e) * d), &(a * e) + &(b * c)),
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&RingElement> for &RingElement {
            type Output = RingElement;

            /// Panics when the operands live in different rings; use the `try_` form to handle that.
            fn $method(self, rhs: &RingElement) -> RingElement {
                self.$checked(rhs).expect("ring mismatch in arithmetic")
            }
        }

        impl $trait<RingElement> for RingElement {
            type Output = RingElement;

            fn $method(self, rhs: RingElement) -> RingElement {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &RingElement {
    type Output = RingElement;

    fn neg(self) -> RingElement {
        &RingElement::zero(self.ring) - self
    }
}

impl Neg for RingElement {
    type Output = RingElement;

    fn neg(self) -> RingElement {
        -&self
    }
}

fn format_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn format_parts(a: &BigRational, b: &BigRational, d: i64) -> String {
    if b.is_zero() {
        return format_rational(a);
    }
    let root = format!("√{d}");
    let b_part = if b.is_one() {
        root
    } else if *b == -BigRational::one() {
        format!("-{root}")
    } else {
        format!("{}{root}", format_rational(b))
    };
    if a.is_zero() {
        b_part
    } else if b.is_negative() {
        format!("{}{b_part}", format_rational(a))
    } else {
        format!("{}+{b_part}", format_rational(a))
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.value {
            Value::Residue(r) => write!(f, "{r}"),
            _ => {
                let (a, b) = self.rational_parts().expect("non-residue");
                write!(f, "{}", format_parts(&a, &b, self.ring.quadratic_d().unwrap_or(0)))
            }
        }
    }
}

/// How a [`RingHom`] acts on elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HomRule {
    Identity,
    /// ℤ → ℤ/n or ℤ → 𝔽_p.
    Quotient,
    /// ℤ → ℚ or ℤ[√d] → ℚ(√d).
    Inclusion,
    /// ℤ/n → ℤ/m or ℤ/n → 𝔽_p for m, p dividing n; 𝔽_p → ℤ/p.
    Reduction,
    /// The partial map ℚ ⊃ ℤ_(n) → ℤ/n: defined on fractions whose denominator is prime to n.
    LocalizedReduction,
    /// √d ↦ −√d on ℤ[√d] or ℚ(√d).
    Conjugation,
}

/// A ring homomorphism between supported rings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RingHom {
    source: RingDescriptor,
    target: RingDescriptor,
    rule: HomRule,
}

impl RingHom {
    pub fn identity(ring: RingDescriptor) -> Self {
        RingHom {
            source: ring,
            target: ring,
            rule: HomRule::Identity,
        }
    }

    /// ℤ → `target`, where `target` is ℤ/n or 𝔽_p.
    pub fn quotient(target: RingDescriptor) -> Result<Self> {
        if target.modulus().is_none() {
            return Err(Error::Unsupported {
                operation: "quotient map",
                ring: target,
            });
        }
        Ok(RingHom {
            source: RingDescriptor::Integers,
            target,
            rule: HomRule::Quotient,
        })
    }

    /// The inclusion of a domain into its fraction field.
    pub fn inclusion(source: RingDescriptor) -> Result<Self> {
        match source {
            RingDescriptor::Integers | RingDescriptor::QuadraticOrder { .. } => Ok(RingHom {
                source,
                target: source.fraction_field().expect("domain"),
                rule: HomRule::Inclusion,
            }),
            _ => Err(Error::Unsupported {
                operation: "inclusion into fraction field",
                ring: source,
            }),
        }
    }

    /// Reduction between residue rings along a divisibility `target.modulus | source.modulus`.
    pub fn reduction(source: RingDescriptor, target: RingDescriptor) -> Result<Self> {
        match (source.modulus(), target.modulus()) {
            (Some(n), Some(m)) if n % m == 0 => Ok(RingHom {
                source,
                target,
                rule: HomRule::Reduction,
            }),
            _ => Err(Error::Unsupported {
                operation: "reduction",
                ring: source,
            }),
        }
    }

    /// The reduction ℤ_(n) → ℤ/n, applied to rationals (partial: denominators must be prime to n).
    pub fn localized_reduction(target: RingDescriptor) -> Result<Self> {
        if target.modulus().is_none() {
            return Err(Error::Unsupported {
                operation: "localized reduction",
                ring: target,
            });
        }
        Ok(RingHom {
            source: RingDescriptor::Rationals,
            target,
            rule: HomRule::LocalizedReduction,
        })
    }

    pub fn conjugation(ring: RingDescriptor) -> Result<Self> {
        if ring.quadratic_d().is_none() {
            return Err(Error::Unsupported {
                operation: "conjugation",
                ring,
            });
        }
        Ok(RingHom {
            source: ring,
            target: ring,
            rule: HomRule::Conjugation,
        })
    }

    pub fn source(&self) -> RingDescriptor {
        self.source
    }

    pub fn target(&self) -> RingDescriptor {
        self.target
    }

    pub fn rule(&self) -> HomRule {
        self.rule
    }

    pub fn apply(&self, x: &RingElement) -> Result<RingElement> {
        self.source.require_same(&x.ring)?;
        match self.rule {
            HomRule::Identity => Ok(x.clone()),
            HomRule::Conjugation => Ok(x.conjugate()),
            HomRule::Inclusion => x.coerce(self.target),
            HomRule::Quotient => Ok(RingElement::from_int(
                self.target,
                x.as_integer().expect("integer source"),
            )),
            HomRule::Reduction => Ok(RingElement::from_int(
                self.target,
                x.residue().expect("residue source"),
            )),
            HomRule::LocalizedReduction => {
                RingElement::from_rational(self.target, x.as_rational().expect("rational source"))
            }
        }
    }

    /// The extension to fraction fields, for maps between domains that admit one.
    pub fn extend_to_fractions(&self) -> Option<RingHom> {
        let source = self.source.fraction_field()?;
        let target = self.target.fraction_field()?;
        match self.rule {
            HomRule::Identity | HomRule::Inclusion => Some(RingHom::identity(source))
                .filter(|_| source == target),
            HomRule::Conjugation => Some(RingHom {
                source,
                target,
                rule: HomRule::Conjugation,
            }),
            _ => None,
        }
    }
}

/// A prime ideal of an enumerable ring: the zero ideal, or the one generated by a rational prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeIdeal {
    ring: RingDescriptor,
    generator: Option<u64>,
}

impl PrimeIdeal {
    pub fn ring(&self) -> RingDescriptor {
        self.ring
    }

    /// The rational prime generating the ideal, none for the zero ideal.
    pub fn generator(&self) -> Option<u64> {
        self.generator
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generator.is_none()
    }

    pub fn contains(&self, x: &RingElement) -> Result<bool> {
        self.ring.require_same(&x.ring)?;
        Ok(match self.generator {
            None => x.is_zero(),
            Some(p) => match &x.value {
                Value::Residue(r) => r % p == 0,
                Value::Integer(v) => (v % BigInt::from(p)).is_zero(),
                _ => return Err(Error::Internal("prime of a non-enumerable ring".into())),
            },
        })
    }

    /// The map to the residue field κ(𝔭).
    pub fn residue_map(&self) -> RingHom {
        match (self.ring, self.generator) {
            (RingDescriptor::Integers, None) => RingHom::inclusion(self.ring).expect("Z"),
            (RingDescriptor::Integers, Some(p)) => {
                RingHom::quotient(RingDescriptor::PrimeField { p }).expect("prime")
            }
            (RingDescriptor::IntegersMod { .. }, Some(p)) => {
                RingHom::reduction(self.ring, RingDescriptor::PrimeField { p }).expect("p | n")
            }
            _ => RingHom::identity(self.ring),
        }
    }
}

impl fmt::Display for PrimeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.generator.unwrap_or(0))
    }
}

/// All prime ideals of a finite ring or a field, or of ℤ up to `bound` (plus the zero ideal).
pub fn enumerate_prime_ideals(ring: RingDescriptor, bound: Option<u64>) -> Result<Vec<PrimeIdeal>> {
    let prime = |generator| PrimeIdeal { ring, generator };
    match ring {
        RingDescriptor::Rationals
        | RingDescriptor::PrimeField { .. }
        | RingDescriptor::QuadraticFractionField { .. } => Ok(vec![prime(None)]),
        RingDescriptor::IntegersMod { n } => Ok(factor_u64(n)
            .into_iter()
            .map(|(p, _)| prime(Some(p)))
            .collect()),
        RingDescriptor::Integers => {
            let bound = bound.ok_or(Error::Unsupported {
                operation: "prime enumeration without a bound",
                ring,
            })?;
            Ok(std::iter::once(prime(None))
                .chain((2..=bound).filter(|&p| is_prime_u64(p)).map(|p| prime(Some(p))))
                .collect())
        }
        RingDescriptor::QuadraticOrder { .. } => Err(Error::Unsupported {
            operation: "prime enumeration",
            ring,
        }),
    }
}

pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut i = 2u64;
    while i.saturating_mul(i) <= n {
        if n % i == 0 {
            return false;
        }
        i += 1;
    }
    true
}

fn is_squarefree(n: u64) -> bool {
    factor_u64(n).iter().all(|&(_, e)| e == 1)
}

/// Trial-division factorization of a machine integer.
pub(crate) fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Trial-division factorization of a nonzero big integer's absolute value.
pub(crate) fn factor_bigint(n: &BigInt) -> Vec<(u64, u32)> {
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut p = 2u64;
    loop {
        let bp = BigInt::from(p);
        if &bp * &bp > n {
            break;
        }
        if (&n % &bp).is_zero() {
            let mut e = 0;
            while (&n % &bp).is_zero() {
                n /= &bp;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > BigInt::one() {
        out.push((n.to_u64().expect("cofactor exceeds u64"), 1));
    }
    out
}
