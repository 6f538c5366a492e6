//! Line bundles on Spec R as they are carried by points and group elements.
//!
//! Over a domain a bundle is a fractional ideal and its sections are
//! elements of the fraction field lying in that ideal. Over ℤ/n (semilocal,
//! trivial Picard group) only the trivial bundle occurs and sections are
//! ring elements.

use std::fmt;

use crate::error::{Error, Result};
use crate::ideal::{FractionalIdeal, PicClass};
use crate::ring::{RingDescriptor, RingElement};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Bundle {
    /// O_S over a non-domain.
    Trivial(RingDescriptor),
    Ideal(FractionalIdeal),
}

impl Bundle {
    /// The structure sheaf; over a domain this is the unit ideal.
    pub fn trivial(ring: RingDescriptor) -> Bundle {
        if ring.is_domain() {
            Bundle::Ideal(FractionalIdeal::unit(ring))
        } else {
            Bundle::Trivial(ring)
        }
    }

    pub fn ring(&self) -> RingDescriptor {
        match self {
            Bundle::Trivial(ring) => *ring,
            Bundle::Ideal(ideal) => ideal.ring(),
        }
    }

    pub fn section_ring(&self) -> RingDescriptor {
        self.ring().section_ring()
    }

    pub fn ideal(&self) -> Option<&FractionalIdeal> {
        match self {
            Bundle::Trivial(_) => None,
            Bundle::Ideal(ideal) => Some(ideal),
        }
    }

    /// Literally O_S (not merely isomorphic to it).
    pub fn is_trivial(&self) -> bool {
        match self {
            Bundle::Trivial(_) => true,
            Bundle::Ideal(ideal) => ideal.is_unit_ideal(),
        }
    }

    /// Bring an element of R or K into the section ring.
    pub fn section(&self, x: &RingElement) -> Result<RingElement> {
        x.coerce(self.section_ring())
    }

    pub fn contains(&self, x: &RingElement) -> Result<bool> {
        match self {
            Bundle::Trivial(ring) => Ok(x.ring() == *ring),
            Bundle::Ideal(ideal) => ideal.contains(x),
        }
    }

    pub fn require_section(&self, x: &RingElement) -> Result<RingElement> {
        let x = self.section(x)?;
        if self.contains(&x)? {
            Ok(x)
        } else {
            Err(Error::NotInBundle {
                element: x.to_string(),
                bundle: self.to_string(),
            })
        }
    }

    pub fn mul(&self, other: &Bundle) -> Result<Bundle> {
        match (self, other) {
            (Bundle::Trivial(a), Bundle::Trivial(b)) if a == b => Ok(self.clone()),
            (Bundle::Ideal(a), Bundle::Ideal(b)) => Ok(Bundle::Ideal(a.mul(b)?)),
            _ => Err(Error::RingMismatch {
                left: self.ring(),
                right: other.ring(),
            }),
        }
    }

    pub fn pow(&self, exp: i64) -> Bundle {
        match self {
            Bundle::Trivial(_) => self.clone(),
            Bundle::Ideal(ideal) => Bundle::Ideal(ideal.pow(exp)),
        }
    }

    pub fn inverse(&self) -> Bundle {
        self.pow(-1)
    }

    /// The bundle `λ·L` for a nonzero λ of the fraction field (a unit over ℤ/n).
    pub fn scaled_by(&self, lambda: &RingElement) -> Result<Bundle> {
        match self {
            Bundle::Trivial(_) => {
                if !lambda.is_unit() {
                    return Err(Error::NotAUnit(lambda.to_string()));
                }
                Ok(self.clone())
            }
            Bundle::Ideal(ideal) => Ok(Bundle::Ideal(ideal.scaled_by(lambda)?)),
        }
    }

    /// The subsheaf generated by the given sections: a fractional ideal, or
    /// for trivial bundles whether the sections generate the unit ideal.
    pub fn generated_by(&self, sections: &[RingElement]) -> Result<bool> {
        match self {
            Bundle::Trivial(ring) => {
                let n = ring.modulus().expect("residue ring");
                let g = sections
                    .iter()
                    .filter_map(RingElement::residue)
                    .fold(n, num_integer::gcd);
                Ok(g == 1)
            }
            Bundle::Ideal(ideal) => match FractionalIdeal::from_generators(ideal.ring(), sections) {
                Ok(generated) => Ok(generated == *ideal),
                Err(Error::ZeroIdeal) => Ok(false),
                Err(e) => Err(e),
            },
        }
    }

    /// Whether a single section is nowhere vanishing, i.e. generates the bundle.
    pub fn generates(&self, x: &RingElement) -> Result<bool> {
        self.generated_by(std::slice::from_ref(x))
    }

    pub fn pic_class(&self) -> Option<PicClass> {
        self.ideal().map(FractionalIdeal::pic_class)
    }

    /// A global generator `g` with `L = g·O`, when the bundle is isomorphic to O.
    pub fn trivializing_generator(&self) -> Option<RingElement> {
        match self {
            Bundle::Trivial(ring) => Some(RingElement::one(*ring)),
            Bundle::Ideal(ideal) => ideal.principal_generator(),
        }
    }
}

impl fmt::Display for Bundle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bundle::Trivial(_) => write!(f, "O"),
            Bundle::Ideal(ideal) => write!(f, "{ideal}"),
        }
    }
}
