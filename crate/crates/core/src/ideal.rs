//! Fractional ideals of the domain kinds, standing in for line bundles on Spec R.
//!
//! An ideal of ℤ[√d] is stored as `scale · J` where `scale` is a positive
//! rational and `J = ℤa + ℤ(b + √d)` is a primitive integral ideal in
//! Hermite normal form (`a > 0`, `0 ≤ b < a`, `a | b² − d`). Every nonzero
//! fractional ideal has exactly one such form, so equality is structural.
//! Over ℤ only the positive generator `scale` is kept, and a field has the
//! single fractional ideal (1).

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::ring::{factor_bigint, RingDescriptor, RingElement};

/// A nonzero finitely generated R-submodule of the fraction field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FractionalIdeal {
    ring: RingDescriptor,
    scale: BigRational,
    // (a, b) of the primitive part, quadratic kinds only
    lattice: Option<(BigInt, BigInt)>,
}

/// Prime factorization `I = ∏ 𝔭^e` with pairwise distinct primes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeIdealFactorization {
    pub factors: Vec<(FractionalIdeal, i64)>,
}

/// The Picard class of a fractional ideal, with a generator when the class is trivial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PicClass {
    pub representative: FractionalIdeal,
    pub generator: Option<RingElement>,
}

fn rat(x: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(x.into())
}

mod lattice {
    //! Full-rank lattices in ℚ², written as rows `(x, y)` meaning `x + y√d`.

    use super::*;

    pub type Vector = (BigRational, BigRational);

    /// Integer HNF `(a, b, c)` of the lattice spanned by integer vectors:
    /// basis `(a, 0), (b, c)` with `a, c > 0` and `0 ≤ b < a`.
    pub fn integer_hnf(vectors: &[(BigInt, BigInt)]) -> Option<(BigInt, BigInt, BigInt)> {
        let mut pivot: Option<(BigInt, BigInt)> = None;
        let mut axis = BigInt::zero();
        for (x, y) in vectors {
            if y.is_zero() {
                axis = axis.gcd(x);
                continue;
            }
            pivot = Some(match pivot {
                None => (x.clone(), y.clone()),
                Some((px, py)) => {
                    let e = py.extended_gcd(y);
                    let g = e.gcd;
                    // unimodular change of basis: one row keeps the gcd, the other lands on the axis
                    let merged = (&e.x * &px + &e.y * x, g.clone());
                    let on_axis = (y * &px - &py * x) / &g;
                    axis = axis.gcd(&on_axis);
                    merged
                }
            });
        }
        let (mut bx, mut c) = pivot?;
        if c.is_negative() {
            bx = -bx;
            c = -c;
        }
        if axis.is_zero() {
            return None;
        }
        let b = bx.mod_floor(&axis);
        Some((axis, b, c))
    }

    /// A reduced basis `[(a, 0), (b, c)]` of the lattice spanned by rational vectors.
    pub fn basis(vectors: &[Vector]) -> Option<[Vector; 2]> {
        let den = vectors
            .iter()
            .flat_map(|(x, y)| [x.denom().clone(), y.denom().clone()])
            .fold(BigInt::one(), |acc, d| acc.lcm(&d));
        let ints: Vec<(BigInt, BigInt)> = vectors
            .iter()
            .map(|(x, y)| ((x * rat(den.clone())).to_integer(), (y * rat(den.clone())).to_integer()))
            .collect();
        let (a, b, c) = integer_hnf(&ints)?;
        let den = rat(den);
        Some([
            (rat(a) / &den, BigRational::zero()),
            (rat(b) / &den, rat(c) / &den),
        ])
    }

    /// The dual lattice under the standard pairing of ℚ².
    pub fn dual(basis: &[Vector; 2]) -> [Vector; 2] {
        let [(a11, a12), (a21, a22)] = basis;
        let det = a11 * a22 - a12 * a21;
        [
            (a22 / &det, -a21 / &det),
            (-a12 / &det, a11 / &det),
        ]
    }

    pub fn intersect(l1: &[Vector; 2], l2: &[Vector; 2]) -> [Vector; 2] {
        let mut sum: Vec<Vector> = dual(l1).to_vec();
        sum.extend(dual(l2));
        dual(&basis(&sum).expect("sum of full-rank lattices"))
    }
}

impl FractionalIdeal {
    /// The R-module generated by `gens` (elements of R or of its fraction field).
    pub fn from_generators(ring: RingDescriptor, gens: &[RingElement]) -> Result<Self> {
        let field = ring.fraction_field().ok_or(Error::Unsupported {
            operation: "fractional ideals",
            ring,
        })?;
        let gens: Vec<RingElement> = gens
            .iter()
            .map(|g| g.coerce(field))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .filter(|g| !g.is_zero())
            .collect();
        if gens.is_empty() {
            return Err(Error::ZeroIdeal);
        }
        match ring {
            RingDescriptor::Integers => {
                let mut num = BigInt::zero();
                let mut den = BigInt::one();
                for g in &gens {
                    let r = g.as_rational().expect("rational");
                    num = num.gcd(r.numer());
                    den = den.lcm(r.denom());
                }
                Ok(FractionalIdeal {
                    ring,
                    scale: BigRational::new(num, den),
                    lattice: None,
                })
            }
            RingDescriptor::QuadraticOrder { d } => {
                let d = rat(d);
                let mut vectors = Vec::with_capacity(2 * gens.len());
                for g in &gens {
                    let (u, v) = g.rational_parts().expect("quadratic");
                    vectors.push((&v * &d, u.clone()));
                    vectors.push((u, v));
                }
                let basis = lattice::basis(&vectors)
                    .ok_or_else(|| Error::Internal("degenerate ideal lattice".into()))?;
                FractionalIdeal::from_lattice_basis(ring, &basis)
            }
            _ => Ok(FractionalIdeal::unit(ring)),
        }
    }

    fn from_lattice_basis(ring: RingDescriptor, basis: &[lattice::Vector; 2]) -> Result<Self> {
        let den = basis
            .iter()
            .flat_map(|(x, y)| [x.denom().clone(), y.denom().clone()])
            .fold(BigInt::one(), |acc, d| acc.lcm(&d));
        let scaled = |r: &BigRational| (r * rat(den.clone())).to_integer();
        let (a, b, c) = (scaled(&basis[0].0), scaled(&basis[1].0), scaled(&basis[1].1));
        let content = a.gcd(&b).gcd(&c);
        let (a, b, c) = (&a / &content, &b / &content, &c / &content);
        let d = ring.quadratic_d().expect("quadratic");
        // closed under √d: (0, a) and (c·d, b) in ℤ(a, 0) + ℤ(b, c)
        if !c.is_one() || !(&b * &b - BigInt::from(d)).is_multiple_of(&a) {
            return Err(Error::Internal(format!(
                "lattice ({a}, 0), ({b}, {c}) is not an ideal of {ring}"
            )));
        }
        Ok(FractionalIdeal {
            ring,
            scale: BigRational::new(content, den),
            lattice: Some((a.clone(), b.mod_floor(&a))),
        })
    }

    /// The ideal (1) = R.
    pub fn unit(ring: RingDescriptor) -> Self {
        let lattice = ring
            .quadratic_d()
            .filter(|_| !ring.is_field())
            .map(|_| (BigInt::one(), BigInt::zero()));
        FractionalIdeal {
            ring,
            scale: BigRational::one(),
            lattice,
        }
    }

    /// The principal ideal (x), x ≠ 0.
    pub fn principal(ring: RingDescriptor, x: &RingElement) -> Result<Self> {
        FractionalIdeal::from_generators(ring, std::slice::from_ref(x))
    }

    pub fn ring(&self) -> RingDescriptor {
        self.ring
    }

    fn field(&self) -> RingDescriptor {
        self.ring.fraction_field().expect("domain")
    }

    fn element(&self, a: BigRational, b: BigRational) -> RingElement {
        RingElement::from_parts(self.field(), a, b).expect("fraction field element")
    }

    /// A ℤ-basis for ℤ and ℤ[√d]; the generator 1 for fields.
    pub fn basis(&self) -> Vec<RingElement> {
        match &self.lattice {
            Some((a, b)) => vec![
                self.element(&self.scale * rat(a.clone()), BigRational::zero()),
                self.element(&self.scale * rat(b.clone()), self.scale.clone()),
            ],
            None => vec![self.element(self.scale.clone(), BigRational::zero())],
        }
    }

    fn lattice_vectors(&self) -> [lattice::Vector; 2] {
        let (a, b) = self.lattice.as_ref().expect("quadratic");
        [
            (&self.scale * rat(a.clone()), BigRational::zero()),
            (&self.scale * rat(b.clone()), self.scale.clone()),
        ]
    }

    fn require_same(&self, other: &FractionalIdeal) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch {
                left: self.ring,
                right: other.ring,
            })
        }
    }

    pub fn is_unit_ideal(&self) -> bool {
        *self == FractionalIdeal::unit(self.ring)
    }

    pub fn is_integral(&self) -> bool {
        self.ring.is_field() || self.scale.is_integer()
    }

    pub fn mul(&self, other: &FractionalIdeal) -> Result<FractionalIdeal> {
        self.require_same(other)?;
        let products: Vec<RingElement> = self
            .basis()
            .iter()
            .flat_map(|x| other.basis().into_iter().map(move |y| x * &y))
            .collect();
        FractionalIdeal::from_generators(self.ring, &products)
    }

    /// `x · I` for `x ≠ 0` in the fraction field.
    pub fn scaled_by(&self, x: &RingElement) -> Result<FractionalIdeal> {
        let x = x.coerce(self.field())?;
        let gens: Vec<RingElement> = self.basis().iter().map(|g| g * &x).collect();
        FractionalIdeal::from_generators(self.ring, &gens)
    }

    pub fn conjugate(&self) -> FractionalIdeal {
        let gens: Vec<RingElement> = self.basis().iter().map(RingElement::conjugate).collect();
        FractionalIdeal::from_generators(self.ring, &gens).expect("nonzero")
    }

    /// The inverse fractional ideal; for ℤ[√d] this is `Ī / N(I)`.
    pub fn inverse(&self) -> FractionalIdeal {
        match self.lattice {
            Some(_) => {
                let n = self.element(self.norm(), BigRational::zero());
                let inv_norm = n.unit_inverse().expect("nonzero norm");
                self.conjugate().scaled_by(&inv_norm).expect("nonzero")
            }
            None if self.ring.is_field() => self.clone(),
            None => FractionalIdeal {
                ring: self.ring,
                scale: self.scale.recip(),
                lattice: None,
            },
        }
    }

    pub fn pow(&self, exp: i64) -> FractionalIdeal {
        let base = if exp < 0 { self.inverse() } else { self.clone() };
        let mut acc = FractionalIdeal::unit(self.ring);
        for _ in 0..exp.unsigned_abs() {
            acc = acc.mul(&base).expect("same ring");
        }
        acc
    }

    /// The index-based norm, multiplicative in I.
    pub fn norm(&self) -> BigRational {
        match &self.lattice {
            Some((a, _)) => &self.scale * &self.scale * rat(a.clone()),
            None if self.ring.is_field() => BigRational::one(),
            None => self.scale.clone(),
        }
    }

    /// Membership of an element of R or K.
    pub fn contains(&self, x: &RingElement) -> Result<bool> {
        let x = x.coerce(self.field())?;
        if self.ring.is_field() {
            return Ok(true);
        }
        let (u, v) = x.rational_parts().expect("domain element");
        let (u, v) = (u / &self.scale, v / &self.scale);
        Ok(match &self.lattice {
            None => u.is_integer(),
            Some((a, b)) => {
                v.is_integer()
                    && (&u - &v * rat(b.clone())).is_integer()
                    && (&u - &v * rat(b.clone())).to_integer().is_multiple_of(a)
            }
        })
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &FractionalIdeal) -> Result<bool> {
        self.require_same(other)?;
        for g in other.basis() {
            if !self.contains(&g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Intersection of two fractional ideals, computed on the underlying lattices.
    pub fn intersect(&self, other: &FractionalIdeal) -> Result<FractionalIdeal> {
        self.require_same(other)?;
        match (&self.lattice, &other.lattice) {
            (Some(_), Some(_)) => {
                let basis = lattice::intersect(&self.lattice_vectors(), &other.lattice_vectors());
                let gens: Vec<RingElement> = basis
                    .iter()
                    .map(|(x, y)| self.element(x.clone(), y.clone()))
                    .collect();
                FractionalIdeal::from_generators(self.ring, &gens)
            }
            _ if self.ring.is_field() => Ok(self.clone()),
            _ => {
                // q1ℤ ∩ q2ℤ for reduced positive fractions
                let (x, y) = (&self.scale, &other.scale);
                let scale = BigRational::new(x.numer().lcm(y.numer()), x.denom().gcd(y.denom()));
                Ok(FractionalIdeal {
                    ring: self.ring,
                    scale,
                    lattice: None,
                })
            }
        }
    }

    /// A generator g with (g) = I, or none when I is not principal.
    ///
    /// For ℤ[√d] the primitive part `J` has norm `a`, and a generator of `J`
    /// is an element of `J` of norm `a`; the norm form `x² + |d|y² = a` has
    /// finitely many solutions, so a `None` certifies non-principality.
    /// Among the generators found, the lexicographically greatest `(x, y)` wins.
    pub fn principal_generator(&self) -> Option<RingElement> {
        let Some((a, b)) = &self.lattice else {
            return Some(self.element(self.scale.clone(), BigRational::zero()));
        };
        let primitive = FractionalIdeal {
            ring: self.ring,
            scale: BigRational::one(),
            lattice: Some((a.clone(), b.clone())),
        };
        let (x, y) = norm_form_solutions(a, self.ring.quadratic_d().expect("quadratic"))
            .into_iter()
            .filter(|(x, y)| {
                primitive
                    .contains(&self.element(rat(x.clone()), rat(y.clone())))
                    .expect("same ring")
            })
            .max()?;
        Some(self.element(&self.scale * rat(x), &self.scale * rat(y)))
    }

    pub fn is_principal(&self) -> bool {
        self.principal_generator().is_some()
    }

    /// The ideal (p) ∩ ℤ = pℤ below a prime ideal: `scale · a` for the HNF form.
    fn rational_prime_below(&self) -> Option<u64> {
        let below = match &self.lattice {
            Some((a, _)) => &self.scale * rat(a.clone()),
            None => self.scale.clone(),
        };
        if !below.is_integer() {
            return None;
        }
        below.to_integer().to_u64()
    }

    /// Whether this is a nonzero prime ideal of R.
    pub fn is_prime(&self) -> bool {
        if self.ring.is_field() {
            return false;
        }
        match self.rational_prime_below() {
            Some(p) if crate::ring::is_prime_u64(p) => {
                primes_above(self.ring, p).is_ok_and(|ps| ps.contains(self))
            }
            _ => false,
        }
    }

    /// Exponent of the prime `prime` in this ideal.
    pub fn ord(&self, prime: &FractionalIdeal) -> Result<i64> {
        self.require_same(prime)?;
        if !prime.is_prime() {
            return Err(Error::NotPrime(prime.to_string()));
        }
        let p = prime.rational_prime_below().expect("prime");
        if self.lattice.is_none() {
            let v = |n: &BigInt| valuation(n, p) as i64;
            return Ok(v(self.scale.numer()) - v(self.scale.denom()));
        }
        // clear denominators, then peel off factors of 𝔭 while the result stays integral
        let den = self.scale.denom().clone();
        let mut integral = self
            .scaled_by(&self.element(rat(den.clone()), BigRational::zero()))
            .expect("nonzero");
        let prime_inverse = prime.inverse();
        let mut k = 0i64;
        loop {
            let next = integral.mul(&prime_inverse)?;
            if !next.is_integral() {
                break;
            }
            integral = next;
            k += 1;
        }
        let e = if primes_above(self.ring, p)?.len() == 1 && prime.norm() == rat(p) {
            2
        } else {
            1
        };
        Ok(k - e * valuation(&den, p) as i64)
    }

    pub fn factor(&self) -> Result<PrimeIdealFactorization> {
        if self.ring.is_field() {
            return Ok(PrimeIdealFactorization {
                factors: Vec::new(),
            });
        }
        let mut support: Vec<u64> = Vec::new();
        let mut add_support = |n: &BigInt| {
            if !n.is_zero() {
                support.extend(factor_bigint(n).into_iter().map(|(p, _)| p));
            }
        };
        add_support(self.scale.numer());
        add_support(self.scale.denom());
        if let Some((a, _)) = &self.lattice {
            add_support(a);
        }
        support.sort_unstable();
        support.dedup();
        let mut factors = Vec::new();
        for p in support {
            for prime in primes_above(self.ring, p)? {
                let e = self.ord(&prime)?;
                if e != 0 {
                    factors.push((prime, e));
                }
            }
        }
        Ok(PrimeIdealFactorization { factors })
    }

    pub fn pic_class(&self) -> PicClass {
        PicClass {
            representative: self.clone(),
            generator: self.principal_generator(),
        }
    }
}

/// All `(x, y)` with `x² − d·y² = n`, for `d < 0`.
pub fn norm_form_solutions(n: &BigInt, d: i64) -> Vec<(BigInt, BigInt)> {
    let abs_d = BigInt::from(d.unsigned_abs());
    let mut out = Vec::new();
    let mut y = BigInt::zero();
    loop {
        let rest = n - &abs_d * &y * &y;
        if rest.is_negative() {
            break;
        }
        let x = rest.sqrt();
        if &x * &x == rest {
            for sx in [x.clone(), -x.clone()] {
                for sy in [y.clone(), -y.clone()] {
                    out.push((sx.clone(), sy));
                }
            }
        }
        y += 1;
    }
    out.sort();
    out.dedup();
    out
}

fn valuation(n: &BigInt, p: u64) -> u32 {
    if n.is_zero() {
        return 0;
    }
    let p = BigInt::from(p);
    let mut n = n.clone();
    let mut v = 0;
    while n.is_multiple_of(&p) {
        n /= &p;
        v += 1;
    }
    v
}

/// The prime ideals of R lying over the rational prime `p`.
///
/// In ℤ[√d] they are read off from the roots of `t² ≡ d (mod p)`: none means
/// `p` is inert, one means ramified, two means split.
pub fn primes_above(ring: RingDescriptor, p: u64) -> Result<Vec<FractionalIdeal>> {
    if !crate::ring::is_prime_u64(p) {
        return Err(Error::NotPrime(p.to_string()));
    }
    match ring {
        RingDescriptor::Integers => Ok(vec![FractionalIdeal {
            ring,
            scale: rat(p),
            lattice: None,
        }]),
        RingDescriptor::QuadraticOrder { d } => {
            let roots: Vec<u64> = (0..p)
                .filter(|&t| {
                    (BigInt::from(t) * BigInt::from(t) - BigInt::from(d))
                        .is_multiple_of(&BigInt::from(p))
                })
                .collect();
            if roots.is_empty() {
                return Ok(vec![FractionalIdeal {
                    ring,
                    scale: rat(p),
                    lattice: Some((BigInt::one(), BigInt::zero())),
                }]);
            }
            Ok(roots
                .into_iter()
                .map(|t| FractionalIdeal {
                    ring,
                    scale: BigRational::one(),
                    lattice: Some((BigInt::from(p), BigInt::from(t))),
                })
                .collect())
        }
        _ => Ok(Vec::new()),
    }
}

impl PrimeIdealFactorization {
    /// Multiply the factors back together.
    pub fn product(&self, ring: RingDescriptor) -> FractionalIdeal {
        self.factors
            .iter()
            .fold(FractionalIdeal::unit(ring), |acc, (prime, e)| {
                acc.mul(&prime.pow(*e)).expect("same ring")
            })
    }
}

impl PicClass {
    pub fn is_trivial(&self) -> bool {
        self.generator.is_some()
    }

    /// Classes agree iff `I · J⁻¹` is principal.
    pub fn same_class(&self, other: &PicClass) -> Result<bool> {
        let quotient = self.representative.mul(&other.representative.inverse())?;
        Ok(quotient.is_principal())
    }

    pub fn mul(&self, other: &PicClass) -> Result<PicClass> {
        Ok(self.representative.mul(&other.representative)?.pic_class())
    }

    pub fn inverse(&self) -> PicClass {
        self.representative.inverse().pic_class()
    }
}

impl fmt::Display for FractionalIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.lattice {
            Some((a, _)) if !a.is_one() => {
                let basis = self.basis();
                write!(f, "({}, {})", basis[0], basis[1])
            }
            _ => write!(f, "({})", self.basis()[0]),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r() -> RingDescriptor {
        RingDescriptor::quadratic_order(-5).unwrap()
    }

    fn el(a: i64, b: i64) -> RingElement {
        RingElement::from_int_parts(r(), a, b).unwrap()
    }

    fn ideal(gens: &[(i64, i64)]) -> FractionalIdeal {
        let gens: Vec<_> = gens.iter().map(|&(a, b)| el(a, b)).collect();
        FractionalIdeal::from_generators(r(), &gens).unwrap()
    }

    fn zint(n: i64) -> RingElement {
        RingElement::from_int(RingDescriptor::Integers, n)
    }

    fn p2() -> FractionalIdeal {
        ideal(&[(2, 0), (1, 1)])
    }

    fn p3() -> FractionalIdeal {
        ideal(&[(3, 0), (1, 1)])
    }

    fn p3bar() -> FractionalIdeal {
        ideal(&[(3, 0), (1, -1)])
    }

    #[test]
    fn generators_canonicalize() {
        let i = FractionalIdeal::from_generators(RingDescriptor::Integers, &[zint(4), zint(6)]).unwrap();
        assert_eq!(i, FractionalIdeal::principal(RingDescriptor::Integers, &zint(2)).unwrap());

        let p = p2();
        assert_eq!(p.lattice, Some((BigInt::from(2), BigInt::from(1))));
        assert!(p.scale.is_one());
        assert_eq!(p.to_string(), "(2, 1+√-5)");

        let half = RingElement::from_rational(RingDescriptor::Rationals, BigRational::new(1.into(), 2.into())).unwrap();
        let q = FractionalIdeal::from_generators(RingDescriptor::Rationals, &[half]).unwrap();
        assert!(q.is_unit_ideal());

        assert_eq!(
            FractionalIdeal::from_generators(r(), &[el(0, 0)]),
            Err(Error::ZeroIdeal)
        );
        let z6 = RingDescriptor::integers_mod(6).unwrap();
        assert!(FractionalIdeal::from_generators(z6, &[RingElement::one(z6)]).is_err());
    }

    #[test]
    fn multiplication_and_inverse() {
        assert_eq!(p2().mul(&p2()).unwrap(), ideal(&[(2, 0)]));
        let six = FractionalIdeal::principal(RingDescriptor::Integers, &zint(6)).unwrap();
        assert_eq!(six.inverse().scale, BigRational::new(1.into(), 6.into()));
        let half = RingElement::from_rational(r().fraction_field().unwrap(), BigRational::new(1.into(), 2.into())).unwrap();
        assert_eq!(p2().inverse(), p2().scaled_by(&half).unwrap());
        assert!(p2().mul(&p2().inverse()).unwrap().is_unit_ideal());
    }

    #[test]
    fn norms() {
        assert_eq!(p2().norm(), rat(2));
        let six = FractionalIdeal::principal(RingDescriptor::Integers, &zint(6)).unwrap();
        assert_eq!(six.norm(), rat(6));
        assert_eq!(ideal(&[(1, 1)]).norm(), rat(6));
    }

    #[test]
    fn membership() {
        assert!(p2().contains(&el(1, -1)).unwrap());
        assert!(!p2().contains(&el(1, 0)).unwrap());
        let a = FractionalIdeal::from_generators(RingDescriptor::Integers, &[zint(4), zint(6)]).unwrap();
        let b = FractionalIdeal::principal(RingDescriptor::Integers, &zint(2)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn principality() {
        let two = p2().mul(&p2()).unwrap().principal_generator().unwrap();
        assert_eq!(two, el(2, 0).coerce(r().fraction_field().unwrap()).unwrap());
        assert!(p2().principal_generator().is_none());
        let six = FractionalIdeal::principal(RingDescriptor::Integers, &zint(6)).unwrap();
        assert_eq!(six.principal_generator().unwrap().to_string(), "6");
        // a fractional principal ideal keeps its scale
        let x = RingElement::from_parts(
            r().fraction_field().unwrap(),
            BigRational::new(1.into(), 3.into()),
            BigRational::new(1.into(), 3.into()),
        )
        .unwrap();
        let i = FractionalIdeal::principal(r(), &x).unwrap();
        let g = i.principal_generator().unwrap();
        assert_eq!(FractionalIdeal::principal(r(), &g).unwrap(), i);
    }

    #[test]
    fn factorization_of_six() {
        let six = ideal(&[(6, 0)]);
        let f = six.factor().unwrap();
        let mut expected = vec![(p2(), 2), (p3(), 1), (p3bar(), 1)];
        let mut got = f.factors.clone();
        let key = |x: &(FractionalIdeal, i64)| x.0.to_string();
        expected.sort_by_key(key);
        got.sort_by_key(key);
        assert_eq!(got, expected);
        assert_eq!(f.product(r()), six);
    }

    #[test]
    fn orders() {
        assert_eq!(ideal(&[(1, 1)]).ord(&p2()).unwrap(), 1);
        let twelve = FractionalIdeal::principal(RingDescriptor::Integers, &zint(12)).unwrap();
        let three = FractionalIdeal::principal(RingDescriptor::Integers, &zint(3)).unwrap();
        assert_eq!(twelve.ord(&three).unwrap(), 1);
        // fractional exponents go negative
        assert_eq!(p2().inverse().ord(&p2()).unwrap(), -1);
        assert_eq!(ideal(&[(2, 0)]).inverse().ord(&p2()).unwrap(), -2);
        assert!(matches!(twelve.ord(&twelve), Err(Error::NotPrime(_))));
    }

    #[test]
    fn primes_above_split_ramify_inert() {
        assert_eq!(primes_above(r(), 2).unwrap(), vec![p2()]);
        assert_eq!(primes_above(r(), 5).unwrap(), vec![ideal(&[(0, 1)])]);
        assert_eq!(primes_above(r(), 3).unwrap().len(), 2);
        // -5 is not a square mod 11
        assert_eq!(primes_above(r(), 11).unwrap(), vec![ideal(&[(11, 0)])]);
        assert!(ideal(&[(11, 0)]).is_prime());
        assert!(!ideal(&[(6, 0)]).is_prime());
    }

    #[test]
    fn pic_classes() {
        assert!(!p2().pic_class().is_trivial());
        assert!(ideal(&[(3, 7)]).pic_class().is_trivial());
        assert!(p2().pic_class().same_class(&p3().pic_class()).unwrap());
        assert!(!p2().pic_class().same_class(&ideal(&[(1, 0)]).pic_class()).unwrap());
    }

    #[test]
    fn intersection_matches_lcm() {
        // coprime ideals: intersection equals product
        assert_eq!(p2().intersect(&p3()).unwrap(), p2().mul(&p3()).unwrap());
        assert_eq!(p2().intersect(&ideal(&[(2, 0)])).unwrap(), ideal(&[(2, 0)]));
        let a = FractionalIdeal::principal(RingDescriptor::Integers, &zint(4)).unwrap();
        let b = FractionalIdeal::principal(RingDescriptor::Integers, &zint(6)).unwrap();
        assert_eq!(a.intersect(&b).unwrap(), FractionalIdeal::principal(RingDescriptor::Integers, &zint(12)).unwrap());
    }

    #[test]
    fn norm_form_enumeration() {
        assert!(norm_form_solutions(&BigInt::from(2), -5).is_empty());
        assert_eq!(norm_form_solutions(&BigInt::from(4), -5).len(), 2);
        assert_eq!(norm_form_solutions(&BigInt::from(9), -5).len(), 6); // ±3, ±2±√-5
    }
}
