//! Zero schemes of sections of free modules and of line bundles.
//!
//! The zero scheme of `s` is cut out by the image of the dual map
//! `s^∨: E^∨ → O`. For a free module this is the ideal of the coordinates;
//! for a bundle given by a fractional ideal `I` (dual `I⁻¹`) it is `s·I⁻¹`.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::ideal::FractionalIdeal;
use crate::ring::{enumerate_prime_ideals, PrimeIdeal, RingDescriptor, RingElement, RingHom};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SectionBundle {
    /// R^m
    Free(usize),
    Ideal(FractionalIdeal),
}

/// A global section of a free module or of a fractional-ideal bundle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Section {
    ring: RingDescriptor,
    bundle: SectionBundle,
    coords: Vec<RingElement>,
}

impl Section {
    /// A section `(s₁, …, s_m)` of `R^m`.
    pub fn free(ring: RingDescriptor, coords: Vec<RingElement>) -> Result<Section> {
        if coords.is_empty() {
            return Err(Error::DimensionMismatch("free module of rank 0".into()));
        }
        let coords = coords
            .iter()
            .map(|c| c.coerce(ring))
            .collect::<Result<Vec<_>>>()?;
        Ok(Section {
            ring,
            bundle: SectionBundle::Free(coords.len()),
            coords,
        })
    }

    /// A section `s ∈ I` of the bundle `I`.
    pub fn of_ideal(ideal: FractionalIdeal, s: &RingElement) -> Result<Section> {
        let ring = ideal.ring();
        let s = s.coerce(ring.section_ring())?;
        if !ideal.contains(&s)? {
            return Err(Error::NotInBundle {
                element: s.to_string(),
                bundle: ideal.to_string(),
            });
        }
        Ok(Section {
            ring,
            bundle: SectionBundle::Ideal(ideal),
            coords: vec![s],
        })
    }

    pub fn ring(&self) -> RingDescriptor {
        self.ring
    }

    pub fn bundle(&self) -> &SectionBundle {
        &self.bundle
    }

    pub fn coords(&self) -> &[RingElement] {
        &self.coords
    }

    pub fn rank(&self) -> usize {
        match self.bundle {
            SectionBundle::Free(m) => m,
            SectionBundle::Ideal(_) => 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Repr {
    Zero,
    /// nonzero ideal of a domain, integral
    Integral(FractionalIdeal),
    /// gℤ/n with g a proper divisor of n
    Divisor(u64),
}

/// An ordinary ideal of R (generators in R, not just in K).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ZeroSchemeIdeal {
    ring: RingDescriptor,
    repr: Repr,
}

impl ZeroSchemeIdeal {
    pub fn zero(ring: RingDescriptor) -> Self {
        ZeroSchemeIdeal {
            ring,
            repr: Repr::Zero,
        }
    }

    pub fn unit(ring: RingDescriptor) -> Self {
        match ring.modulus() {
            Some(_) if !ring.is_domain() => ZeroSchemeIdeal {
                ring,
                repr: Repr::Divisor(1),
            },
            _ => ZeroSchemeIdeal {
                ring,
                repr: Repr::Integral(FractionalIdeal::unit(ring)),
            },
        }
    }

    /// The ideal of R generated by `elements`.
    pub fn generated_by(ring: RingDescriptor, elements: &[RingElement]) -> Result<Self> {
        let elements = elements
            .iter()
            .map(|x| x.coerce(ring))
            .collect::<Result<Vec<_>>>()?;
        if !ring.is_domain() {
            let n = ring.modulus().expect("residue ring");
            let g = elements
                .iter()
                .map(|x| x.residue().expect("residue"))
                .fold(n, |acc, r| acc.gcd(&r));
            return Ok(ZeroSchemeIdeal::from_divisor(ring, g));
        }
        match FractionalIdeal::from_generators(ring, &elements) {
            Ok(ideal) => ZeroSchemeIdeal::from_integral(ideal),
            Err(Error::ZeroIdeal) => Ok(ZeroSchemeIdeal::zero(ring)),
            Err(e) => Err(e),
        }
    }

    fn from_divisor(ring: RingDescriptor, g: u64) -> Self {
        let n = ring.modulus().expect("residue ring");
        let repr = if g % n == 0 {
            Repr::Zero
        } else {
            Repr::Divisor(g)
        };
        ZeroSchemeIdeal { ring, repr }
    }

    /// Wrap a fractional ideal that lies inside R.
    pub fn from_integral(ideal: FractionalIdeal) -> Result<Self> {
        if !ideal.is_integral() {
            return Err(Error::ContractViolation(format!("{ideal} is not contained in R")));
        }
        Ok(ZeroSchemeIdeal {
            ring: ideal.ring(),
            repr: Repr::Integral(ideal),
        })
    }

    pub fn ring(&self) -> RingDescriptor {
        self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.repr == Repr::Zero
    }

    /// (1): the zero scheme is empty.
    pub fn is_unit_ideal(&self) -> bool {
        match &self.repr {
            Repr::Zero => false,
            Repr::Integral(ideal) => ideal.is_unit_ideal(),
            Repr::Divisor(g) => *g == 1,
        }
    }

    /// The ideal as a fractional ideal, for nonzero ideals of domains.
    pub fn as_fractional(&self) -> Option<&FractionalIdeal> {
        match &self.repr {
            Repr::Integral(ideal) => Some(ideal),
            _ => None,
        }
    }

    /// Generators in R.
    pub fn generators(&self) -> Vec<RingElement> {
        match &self.repr {
            Repr::Zero => vec![RingElement::zero(self.ring)],
            Repr::Divisor(g) => vec![RingElement::from_int(self.ring, *g)],
            Repr::Integral(ideal) => ideal
                .basis()
                .iter()
                .map(|g| g.coerce(self.ring).expect("integral ideal"))
                .collect(),
        }
    }

    pub fn contains(&self, x: &RingElement) -> Result<bool> {
        let x = x.coerce(self.ring)?;
        Ok(match &self.repr {
            Repr::Zero => x.is_zero(),
            Repr::Divisor(g) => x.residue().expect("residue") % g == 0,
            Repr::Integral(ideal) => ideal.contains(&x)?,
        })
    }

    /// Whether `prime ⊇ self`, i.e. the prime lies on the zero scheme.
    pub fn is_contained_in(&self, prime: &PrimeIdeal) -> Result<bool> {
        for g in self.generators() {
            if !prime.contains(&g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// V(I): the enumerable primes containing this ideal.
    pub fn zero_locus(&self, bound: Option<u64>) -> Result<BTreeSet<PrimeIdeal>> {
        let mut out = BTreeSet::new();
        for prime in enumerate_prime_ideals(self.ring, bound)? {
            if self.is_contained_in(&prime)? {
                out.insert(prime);
            }
        }
        Ok(out)
    }

    /// Whether every generator maps to zero under `h`.
    pub fn killed_by(&self, h: &RingHom) -> Result<bool> {
        for g in self.generators() {
            if !h.apply(&g)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn intersect(&self, other: &ZeroSchemeIdeal) -> Result<ZeroSchemeIdeal> {
        Ok(match (&self.repr, &other.repr) {
            (Repr::Zero, _) | (_, Repr::Zero) => ZeroSchemeIdeal::zero(self.ring),
            (Repr::Integral(a), Repr::Integral(b)) => ZeroSchemeIdeal::from_integral(a.intersect(b)?)?,
            (Repr::Divisor(a), Repr::Divisor(b)) => ZeroSchemeIdeal::from_divisor(self.ring, a.lcm(b)),
            _ => return Err(Error::Internal("mixed ideal representations".into())),
        })
    }
}

impl fmt::Display for ZeroSchemeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Zero => write!(f, "(0)"),
            Repr::Divisor(g) => write!(f, "({g})"),
            Repr::Integral(ideal) => write!(f, "{ideal}"),
        }
    }
}

/// The ideal `im(s^∨)` cutting out the zero scheme of `s`.
pub fn zero_scheme_ideal(s: &Section) -> Result<ZeroSchemeIdeal> {
    match &s.bundle {
        SectionBundle::Free(_) => ZeroSchemeIdeal::generated_by(s.ring, &s.coords),
        SectionBundle::Ideal(ideal) => {
            let x = &s.coords[0];
            if x.is_zero() {
                return Ok(ZeroSchemeIdeal::zero(s.ring));
            }
            let image = FractionalIdeal::principal(s.ring, x)?.mul(&ideal.inverse())?;
            ZeroSchemeIdeal::from_integral(image)
        }
    }
}

/// `Ann(E/⟨s⟩)` for any section, rank 1 or not.
///
/// Computed directly as `{r ∈ R : r·E ⊆ R·s}`: a colon ideal of lattices for
/// bundles over domains, a coordinatewise analysis for free modules over
/// domains, and exhaustive search over ℤ/n.
pub fn module_annihilator(s: &Section) -> Result<ZeroSchemeIdeal> {
    let ring = s.ring;
    if !ring.is_domain() {
        return residue_annihilator(s);
    }
    match &s.bundle {
        SectionBundle::Ideal(ideal) => colon_ideal(&s.coords[0], ideal),
        SectionBundle::Free(1) => colon_ideal(&s.coords[0], &FractionalIdeal::unit(ring)),
        SectionBundle::Free(_) => {
            // r·e_i = t·s forces s ∈ K·e_i; with two or more coordinates some e_i fails
            let mut acc = ZeroSchemeIdeal::unit(ring);
            for i in 0..s.coords.len() {
                let only_i = s
                    .coords
                    .iter()
                    .enumerate()
                    .all(|(j, c)| j == i || c.is_zero());
                let part = if only_i {
                    ZeroSchemeIdeal::generated_by(ring, std::slice::from_ref(&s.coords[i]))?
                } else {
                    ZeroSchemeIdeal::zero(ring)
                };
                acc = acc.intersect(&part)?;
            }
            Ok(acc)
        }
    }
}

/// `(sR : L) = {r ∈ R : r·L ⊆ sR} = R ∩ ⋂_α (s/α)R` over a ℤ-basis α of L.
fn colon_ideal(s: &RingElement, bundle: &FractionalIdeal) -> Result<ZeroSchemeIdeal> {
    let ring = bundle.ring();
    if s.is_zero() {
        return Ok(ZeroSchemeIdeal::zero(ring));
    }
    let mut acc = FractionalIdeal::unit(ring);
    for alpha in bundle.basis() {
        let quotient = s.coerce(alpha.ring())?.checked_div(&alpha)?;
        acc = acc.intersect(&FractionalIdeal::principal(ring, &quotient)?)?;
    }
    ZeroSchemeIdeal::from_integral(acc)
}

fn residue_annihilator(s: &Section) -> Result<ZeroSchemeIdeal> {
    let ring = s.ring;
    let n = ring.modulus().expect("residue ring");
    let el = |x: u64| RingElement::from_int(ring, x);
    let multiples: Vec<Vec<RingElement>> = (0..n)
        .map(|t| s.coords.iter().map(|c| &el(t) * c).collect())
        .collect();
    let mut g = n;
    for r in 1..n {
        let kills = (0..s.coords.len()).all(|i| {
            let target: Vec<RingElement> = (0..s.coords.len())
                .map(|j| if i == j { el(r) } else { el(0) })
                .collect();
            multiples.contains(&target)
        });
        if kills {
            g = g.gcd(&r);
        }
    }
    Ok(ZeroSchemeIdeal::from_divisor(ring, g))
}

/// `Ann(L/⟨s⟩)` for a rank-1 bundle; agrees with [`zero_scheme_ideal`] there.
pub fn annihilator_ideal(s: &Section) -> Result<ZeroSchemeIdeal> {
    if s.rank() > 1 {
        return Err(Error::RankTooLarge(s.rank()));
    }
    module_annihilator(s)
}

/// The enumerable primes at which `s` vanishes in the fiber `E ⊗ κ(𝔭)`.
pub fn vanishing_set(s: &Section, bound: Option<u64>) -> Result<BTreeSet<PrimeIdeal>> {
    let primes = enumerate_prime_ideals(s.ring, bound)?;
    let local: Vec<RingElement> = match &s.bundle {
        SectionBundle::Free(_) => s.coords.clone(),
        SectionBundle::Ideal(ideal) => {
            // enumerable domains are PIDs: trivialize L = gR globally
            let g = ideal
                .principal_generator()
                .ok_or_else(|| Error::Internal(format!("{ideal} is not principal")))?;
            vec![s.coords[0].checked_div(&g)?.coerce(s.ring)?]
        }
    };
    let mut out = BTreeSet::new();
    for prime in primes {
        let mut vanishes = true;
        for c in &local {
            vanishes &= prime.contains(c)?;
        }
        if vanishes {
            out.insert(prime);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: i64) -> RingElement {
        RingElement::from_int(RingDescriptor::Integers, n)
    }

    fn zs5() -> RingDescriptor {
        RingDescriptor::quadratic_order(-5).unwrap()
    }

    fn p2() -> FractionalIdeal {
        let gens = [
            RingElement::from_int(zs5(), 2),
            RingElement::from_int_parts(zs5(), 1, 1).unwrap(),
        ];
        FractionalIdeal::from_generators(zs5(), &gens).unwrap()
    }

    #[test]
    fn free_rank_one() {
        let s = Section::free(RingDescriptor::Integers, vec![z(12)]).unwrap();
        let expected = ZeroSchemeIdeal::generated_by(RingDescriptor::Integers, &[z(12)]).unwrap();
        assert_eq!(zero_scheme_ideal(&s).unwrap(), expected);
        assert_eq!(annihilator_ideal(&s).unwrap(), expected);
    }

    #[test]
    fn ideal_bundle_section() {
        let s = Section::of_ideal(p2(), &RingElement::from_int(zs5(), 2)).unwrap();
        let expected = ZeroSchemeIdeal::from_integral(p2()).unwrap();
        assert_eq!(zero_scheme_ideal(&s).unwrap(), expected);
        assert_eq!(annihilator_ideal(&s).unwrap(), expected);
        assert!(Section::of_ideal(p2(), &RingElement::one(zs5())).is_err());
    }

    #[test]
    fn rank_two_counterexample() {
        let s = Section::free(RingDescriptor::Integers, vec![z(1), z(0)]).unwrap();
        assert!(zero_scheme_ideal(&s).unwrap().is_unit_ideal());
        assert!(matches!(annihilator_ideal(&s), Err(Error::RankTooLarge(2))));
        assert!(module_annihilator(&s).unwrap().is_zero());

        let z6 = RingDescriptor::integers_mod(6).unwrap();
        let s = Section::free(z6, vec![RingElement::one(z6), RingElement::zero(z6)]).unwrap();
        assert!(zero_scheme_ideal(&s).unwrap().is_unit_ideal());
        assert!(module_annihilator(&s).unwrap().is_zero());
    }

    #[test]
    fn vanishing_examples() {
        let z6 = RingDescriptor::integers_mod(6).unwrap();
        let s = Section::free(z6, vec![RingElement::from_int(z6, 3)]).unwrap();
        let set: Vec<_> = vanishing_set(&s, None).unwrap().iter().map(|p| p.generator()).collect();
        assert_eq!(set, vec![Some(3)]);

        let s = Section::free(RingDescriptor::Integers, vec![z(6), z(10)]).unwrap();
        let set: Vec<_> = vanishing_set(&s, Some(10)).unwrap().iter().map(|p| p.generator()).collect();
        assert_eq!(set, vec![Some(2)]);

        let f7 = RingDescriptor::prime_field(7).unwrap();
        let s = Section::free(f7, vec![RingElement::zero(f7)]).unwrap();
        let set = vanishing_set(&s, None).unwrap();
        assert_eq!(set.len(), 1);
        assert!(set.iter().next().unwrap().is_zero_ideal());
    }

    #[test]
    fn vanishing_on_ideal_bundle_over_z() {
        // s = 12 in the bundle (4): locally s/4 = 3
        let four = FractionalIdeal::principal(RingDescriptor::Integers, &z(4)).unwrap();
        let s = Section::of_ideal(four, &z(12)).unwrap();
        let set: Vec<_> = vanishing_set(&s, Some(10)).unwrap().iter().map(|p| p.generator()).collect();
        assert_eq!(set, vec![Some(3)]);
        assert_eq!(
            zero_scheme_ideal(&s).unwrap().zero_locus(Some(10)).unwrap(),
            vanishing_set(&s, Some(10)).unwrap()
        );
    }

    #[test]
    fn residue_annihilator_matches_coordinates() {
        let z12 = RingDescriptor::integers_mod(12).unwrap();
        for x in 0..12 {
            let s = Section::free(z12, vec![RingElement::from_int(z12, x)]).unwrap();
            assert_eq!(annihilator_ideal(&s).unwrap(), zero_scheme_ideal(&s).unwrap(), "x = {x}");
        }
    }

    #[test]
    fn universal_property_on_quotients() {
        // s = (6, 10) dies in Z/2, so Z/2 kills the zero-scheme ideal (2)
        let s = Section::free(RingDescriptor::Integers, vec![z(6), z(10)]).unwrap();
        let ideal = zero_scheme_ideal(&s).unwrap();
        let h = RingHom::quotient(RingDescriptor::integers_mod(2).unwrap()).unwrap();
        assert!(ideal.killed_by(&h).unwrap());
        let h = RingHom::quotient(RingDescriptor::integers_mod(4).unwrap()).unwrap();
        assert!(!ideal.killed_by(&h).unwrap());
    }
}
