//! Points of ℙ¹(R): a line bundle together with two generating sections.

use std::collections::BTreeSet;
use std::fmt;

use crate::bundle::Bundle;
use crate::error::{Error, Result};
use crate::ideal::FractionalIdeal;
use crate::ring::{enumerate_prime_ideals, PrimeIdeal, RingDescriptor, RingElement, RingHom};
use crate::zero_scheme::{zero_scheme_ideal, Section, ZeroSchemeIdeal};

/// `(A; a₀, a₁)` with `a₀, a₁` generating `A`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProjPoint {
    bundle: Bundle,
    a0: RingElement,
    a1: RingElement,
}

/// `Δ(a, b) = a₀b₁ − a₁b₀` as a section of `A·B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaSection {
    pub value: RingElement,
    pub home: Bundle,
}

impl ProjPoint {
    pub fn new(bundle: Bundle, a0: &RingElement, a1: &RingElement) -> Result<ProjPoint> {
        let a0 = bundle.require_section(a0)?;
        let a1 = bundle.require_section(a1)?;
        let pair = [a0.clone(), a1.clone()];
        if !bundle.generated_by(&pair)? {
            let generated = match &bundle {
                Bundle::Trivial(ring) => {
                    crate::zero_scheme::ZeroSchemeIdeal::generated_by(*ring, &pair)?.to_string()
                }
                Bundle::Ideal(ideal) => match FractionalIdeal::from_generators(ideal.ring(), &pair) {
                    Ok(g) => g.to_string(),
                    Err(_) => "(0)".to_string(),
                },
            };
            return Err(Error::NotGenerating {
                generated,
                bundle: bundle.to_string(),
            });
        }
        Ok(ProjPoint { bundle, a0, a1 })
    }

    /// A point on the trivial bundle.
    pub fn trivial(ring: RingDescriptor, a0: &RingElement, a1: &RingElement) -> Result<ProjPoint> {
        ProjPoint::new(Bundle::trivial(ring), a0, a1)
    }

    /// The trivial-bundle point with integer coordinates.
    pub fn from_ints(ring: RingDescriptor, a0: i64, a1: i64) -> Result<ProjPoint> {
        let el = |x| RingElement::from_int(ring, x);
        ProjPoint::trivial(ring, &el(a0), &el(a1))
    }

    pub fn ring(&self) -> RingDescriptor {
        self.bundle.ring()
    }

    pub fn bundle(&self) -> &Bundle {
        &self.bundle
    }

    pub fn a0(&self) -> &RingElement {
        &self.a0
    }

    pub fn a1(&self) -> &RingElement {
        &self.a1
    }

    /// The same point carried by `λ·A` with sections `λa₀, λa₁`.
    pub fn rescale(&self, lambda: &RingElement) -> Result<ProjPoint> {
        let lambda = self.bundle.section(lambda)?;
        if lambda.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(ProjPoint {
            bundle: self.bundle.scaled_by(&lambda)?,
            a0: &self.a0 * &lambda,
            a1: &self.a1 * &lambda,
        })
    }

    /// Push the point along `h`, applied to the sections.
    ///
    /// Sections of the trivial bundle are ring elements and go through `h`
    /// itself; sections of other bundles need the extension of `h` to
    /// fraction fields. The image bundle is the one the images generate.
    pub fn push_forward(&self, h: &RingHom) -> Result<ProjPoint> {
        let (b0, b1) = if self.bundle.is_trivial() {
            let r0 = self.a0.coerce(h.source())?;
            let r1 = self.a1.coerce(h.source())?;
            (h.apply(&r0)?, h.apply(&r1)?)
        } else {
            let k = h.extend_to_fractions().ok_or(Error::Unsupported {
                operation: "pushing a nontrivial bundle",
                ring: h.source(),
            })?;
            (k.apply(&self.a0)?, k.apply(&self.a1)?)
        };
        let target = h.target();
        if !target.is_domain() || self.bundle.is_trivial() {
            return ProjPoint::trivial(target, &b0, &b1);
        }
        let ideal = FractionalIdeal::from_generators(target, &[b0.clone(), b1.clone()])?;
        ProjPoint::new(Bundle::Ideal(ideal), &b0, &b1)
    }

    /// The sections divided by a global generator of the bundle, as elements of R.
    fn trivialized(&self) -> Result<(RingElement, RingElement)> {
        let g = self.bundle.trivializing_generator().ok_or_else(|| Error::Unsupported {
            operation: "trivializing a non-principal bundle",
            ring: self.ring(),
        })?;
        let g = self.bundle.section(&g)?;
        let ring = self.ring();
        Ok((
            self.a0.checked_div(&g)?.coerce(ring)?,
            self.a1.checked_div(&g)?.coerce(ring)?,
        ))
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; {}, {})", self.bundle, self.a0, self.a1)
    }
}

fn same_ring(a: &ProjPoint, b: &ProjPoint) -> Result<()> {
    if a.ring() == b.ring() {
        Ok(())
    } else {
        Err(Error::RingMismatch {
            left: a.ring(),
            right: b.ring(),
        })
    }
}

pub fn delta(a: &ProjPoint, b: &ProjPoint) -> Result<DeltaSection> {
    same_ring(a, b)?;
    Ok(DeltaSection {
        value: &(&a.a0 * &b.a1) - &(&a.a1 * &b.a0),
        home: a.bundle.mul(&b.bundle)?,
    })
}

/// Whether `a` and `b` are the same morphism Spec R → ℙ¹.
pub fn point_equal(a: &ProjPoint, b: &ProjPoint) -> Result<bool> {
    Ok(delta(a, b)?.value.is_zero())
}

/// Determinant criterion: `Δ(a, b)` generates `A·B`.
pub fn strongly_distinct(a: &ProjPoint, b: &ProjPoint) -> Result<bool> {
    let d = delta(a, b)?;
    d.home.generates(&d.value)
}

/// The ideal cutting out the locus where `a` and `b` agree: the zero scheme of `Δ(a, b)`.
pub fn equalizer_ideal(a: &ProjPoint, b: &ProjPoint) -> Result<ZeroSchemeIdeal> {
    let d = delta(a, b)?;
    let section = match &d.home {
        Bundle::Trivial(ring) => Section::free(*ring, vec![d.value])?,
        Bundle::Ideal(ideal) => Section::of_ideal(ideal.clone(), &d.value)?,
    };
    zero_scheme_ideal(&section)
}

/// A point of ℙ¹ over a field, scaled so that its first nonzero coordinate is 1.
fn projective_normal_form(x0: &RingElement, x1: &RingElement) -> Result<(RingElement, RingElement)> {
    let pivot = if x0.is_zero() { x1 } else { x0 };
    let inv = pivot.unit_inverse()?;
    Ok((x0 * &inv, x1 * &inv))
}

/// The enumerable primes 𝔭 at which the fibers `a(𝔭)` and `b(𝔭)` coincide in ℙ¹(κ(𝔭)).
///
/// Each point is reduced to the residue field and compared in normal form;
/// no determinant is involved.
pub fn disagreement_locus(a: &ProjPoint, b: &ProjPoint, bound: Option<u64>) -> Result<BTreeSet<PrimeIdeal>> {
    same_ring(a, b)?;
    let primes = enumerate_prime_ideals(a.ring(), bound)?;
    let (a0, a1) = a.trivialized()?;
    let (b0, b1) = b.trivialized()?;
    let mut out = BTreeSet::new();
    for prime in primes {
        let h = prime.residue_map();
        let fa = projective_normal_form(&h.apply(&a0)?, &h.apply(&a1)?)?;
        let fb = projective_normal_form(&h.apply(&b0)?, &h.apply(&b1)?)?;
        if fa == fb {
            out.insert(prime);
        }
    }
    Ok(out)
}

/// `∞ = (O; 1, 0)`, `0 = (O; 0, 1)`, `1 = (O; 1, 1)`.
pub fn standard_points(ring: RingDescriptor) -> (ProjPoint, ProjPoint, ProjPoint) {
    let pt = |x, y| ProjPoint::from_ints(ring, x, y).expect("standard point");
    (pt(1, 0), pt(0, 1), pt(1, 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zs5() -> RingDescriptor {
        RingDescriptor::quadratic_order(-5).unwrap()
    }

    fn q(x: i64, y: i64) -> RingElement {
        RingElement::from_int_parts(zs5(), x, y).unwrap()
    }

    fn p2() -> Bundle {
        Bundle::Ideal(FractionalIdeal::from_generators(zs5(), &[q(2, 0), q(1, 1)]).unwrap())
    }

    fn ints(a0: i64, a1: i64) -> ProjPoint {
        ProjPoint::from_ints(RingDescriptor::Integers, a0, a1).unwrap()
    }

    #[test]
    fn construction() {
        assert!(ProjPoint::new(p2(), &q(2, 0), &q(1, 1)).is_ok());
        assert!(matches!(
            ProjPoint::from_ints(RingDescriptor::Integers, 2, 4),
            Err(Error::NotGenerating { .. })
        ));
        assert!(matches!(
            ProjPoint::new(p2(), &q(1, 0), &q(1, 1)),
            Err(Error::NotInBundle { .. })
        ));
    }

    #[test]
    fn deltas() {
        let (inf, zero, _) = standard_points(RingDescriptor::Integers);
        assert!(delta(&inf, &zero).unwrap().value.is_one());
        let a = ProjPoint::new(p2(), &q(2, 0), &q(1, 1)).unwrap();
        let b = ProjPoint::new(p2(), &q(1, 1), &q(-2, 0)).unwrap();
        let d = delta(&a, &b).unwrap();
        assert_eq!(d.value, q(0, -2).coerce(d.value.ring()).unwrap());
        assert!(delta(&a, &a).unwrap().value.is_zero());
    }

    #[test]
    fn equality() {
        assert!(point_equal(&ints(2, 1), &ints(-2, -1)).unwrap());
        let (inf, zero, _) = standard_points(RingDescriptor::Integers);
        assert!(!point_equal(&inf, &zero).unwrap());
        let a = ProjPoint::new(p2(), &q(2, 0), &q(1, 1)).unwrap();
        let three = a.rescale(&q(3, 0)).unwrap();
        assert_eq!(three.a0(), &q(6, 0).coerce(three.a0().ring()).unwrap());
        assert!(point_equal(&a, &three).unwrap());
    }

    #[test]
    fn strong_distinctness() {
        let (inf, zero, _) = standard_points(RingDescriptor::Integers);
        assert!(strongly_distinct(&inf, &zero).unwrap());
        assert!(!strongly_distinct(&ints(2, 1), &ints(8, 1)).unwrap());
        let a = ProjPoint::new(p2(), &q(2, 0), &q(1, 1)).unwrap();
        let b = ProjPoint::new(p2(), &q(1, 1), &q(-2, 0)).unwrap();
        assert!(!strongly_distinct(&a, &b).unwrap());
    }

    #[test]
    fn equalizers() {
        let e = equalizer_ideal(&ints(2, 1), &ints(8, 1)).unwrap();
        assert_eq!(
            e,
            ZeroSchemeIdeal::generated_by(RingDescriptor::Integers, &[RingElement::from_int(RingDescriptor::Integers, 6)])
                .unwrap()
        );
        let (inf, zero, _) = standard_points(RingDescriptor::Integers);
        assert!(equalizer_ideal(&inf, &zero).unwrap().is_unit_ideal());

        let a = ProjPoint::new(p2(), &q(2, 0), &q(1, 1)).unwrap();
        let b = ProjPoint::new(p2(), &q(1, 1), &q(-2, 0)).unwrap();
        let e = equalizer_ideal(&a, &b).unwrap();
        let p5 = FractionalIdeal::principal(zs5(), &q(0, 1)).unwrap();
        assert_eq!(e.as_fractional(), Some(&p5));
        assert!(p5.is_prime());
    }

    #[test]
    fn loci() {
        let gens = |s: BTreeSet<PrimeIdeal>| s.iter().map(|p| p.generator()).collect::<Vec<_>>();
        assert_eq!(
            gens(disagreement_locus(&ints(2, 1), &ints(8, 1), Some(10)).unwrap()),
            vec![Some(2), Some(3)]
        );
        let z6 = RingDescriptor::integers_mod(6).unwrap();
        assert!(ProjPoint::from_ints(z6, 1, 3).is_ok());
        let a = ProjPoint::from_ints(z6, 1, 1).unwrap();
        let b = ProjPoint::from_ints(z6, 5, 1).unwrap();
        assert_eq!(gens(disagreement_locus(&a, &b, None).unwrap()), vec![Some(2)]);
        let f7 = RingDescriptor::prime_field(7).unwrap();
        let a = ProjPoint::from_ints(f7, 3, 1).unwrap();
        let b = ProjPoint::from_ints(f7, 4, 1).unwrap();
        assert!(disagreement_locus(&a, &b, None).unwrap().is_empty());
    }

    #[test]
    fn standard_triples_are_distinct() {
        for ring in [
            RingDescriptor::Rationals,
            RingDescriptor::integers_mod(6).unwrap(),
            zs5(),
        ] {
            let (inf, zero, one) = standard_points(ring);
            for (x, y) in [(&inf, &zero), (&inf, &one), (&zero, &one)] {
                assert!(strongly_distinct(x, y).unwrap(), "{ring}");
            }
        }
    }

    #[test]
    fn push_forward_reduces() {
        let z25 = RingDescriptor::integers_mod(25).unwrap();
        let h = RingHom::quotient(z25).unwrap();
        let p = ints(27, 1).push_forward(&h).unwrap();
        assert_eq!(p.a0().residue(), Some(2));
        let a = ProjPoint::new(p2(), &q(2, 0), &q(1, 1)).unwrap();
        let c = a.push_forward(&RingHom::conjugation(zs5()).unwrap()).unwrap();
        assert_eq!(c.a1(), &q(1, -1).coerce(c.a1().ring()).unwrap());
    }
}
