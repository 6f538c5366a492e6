//! Random instance generators shared by the integration tests.
#![allow(dead_code)]

use num_rational::BigRational;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use xratio::bundle::Bundle;
use xratio::ideal::FractionalIdeal;
use xratio::pgl::{GLMatrix, GnElement, Matrix};
use xratio::point::ProjPoint;
use xratio::ring::{RingDescriptor, RingElement};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn zs5() -> RingDescriptor {
    RingDescriptor::quadratic_order(-5).unwrap()
}

pub fn qs5() -> RingDescriptor {
    RingDescriptor::quadratic_fraction_field(-5).unwrap()
}

pub fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(num.into(), den.into())
}

pub fn random_rational(rng: &mut StdRng, bound: i64) -> BigRational {
    rational(rng.gen_range(-bound..=bound), rng.gen_range(1..=bound))
}

/// `k` pairwise distinct rationals.
pub fn distinct_rationals(rng: &mut StdRng, k: usize, bound: i64) -> Vec<BigRational> {
    let mut out: Vec<BigRational> = Vec::new();
    while out.len() < k {
        let x = random_rational(rng, bound);
        if !out.contains(&x) {
            out.push(x);
        }
    }
    out
}

pub fn affine(ring: RingDescriptor, x: &RingElement) -> ProjPoint {
    ProjPoint::trivial(ring, x, &RingElement::one(x.ring())).unwrap()
}

/// A random nonzero multiple of a homogeneous representative, so points are not always normalized.
fn scrambled(ring: RingDescriptor, rng: &mut StdRng, x0: RingElement, x1: RingElement) -> ProjPoint {
    let unit = loop {
        let u = match ring.modulus() {
            Some(n) => RingElement::from_int(ring, rng.gen_range(1..n)),
            None => RingElement::from_rational(ring, random_rational(rng, 5)).unwrap(),
        };
        if u.is_unit() {
            break u;
        }
    };
    ProjPoint::trivial(ring, &(&x0 * &unit), &(&x1 * &unit)).unwrap()
}

/// `k` pairwise distinct points of ℙ¹ over ℚ or 𝔽_p, ∞ included with some probability.
pub fn distinct_field_points(ring: RingDescriptor, rng: &mut StdRng, k: usize) -> Vec<ProjPoint> {
    let mut coords: Vec<Option<RingElement>> = Vec::new();
    while coords.len() < k {
        let c = if rng.gen_bool(0.1) {
            None
        } else {
            Some(match ring.modulus() {
                Some(p) => RingElement::from_int(ring, rng.gen_range(0..p)),
                None => RingElement::from_rational(ring, random_rational(rng, 12)).unwrap(),
            })
        };
        if !coords.contains(&c) {
            coords.push(c);
        }
    }
    coords
        .into_iter()
        .map(|c| match c {
            None => scrambled(ring, rng, RingElement::one(ring), RingElement::zero(ring)),
            Some(x) => scrambled(ring, rng, x, RingElement::one(ring)),
        })
        .collect()
}

pub fn random_zs5(rng: &mut StdRng, bound: i64) -> RingElement {
    RingElement::from_int_parts(zs5(), rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound)).unwrap()
}

pub fn random_nonzero_qs5(rng: &mut StdRng, bound: i64) -> RingElement {
    loop {
        let x = RingElement::from_parts(qs5(), random_rational(rng, bound), random_rational(rng, bound)).unwrap();
        if !x.is_zero() {
            return x;
        }
    }
}

pub fn p2() -> FractionalIdeal {
    let q = |x, y| RingElement::from_int_parts(zs5(), x, y).unwrap();
    FractionalIdeal::from_generators(zs5(), &[q(2, 0), q(1, 1)]).unwrap()
}

/// `(𝔭₂; [[2, 1+√-5], [1−√-5, 2]])`, a G₂ element that is not a matrix.
pub fn non_matrix_element() -> GnElement {
    let q = |x, y| RingElement::from_int_parts(qs5(), x, y).unwrap();
    GnElement::new(
        Bundle::Ideal(p2()),
        vec![vec![q(2, 0), q(1, 1)], vec![q(1, -1), q(2, 0)]],
    )
    .unwrap()
}

/// A random element of GL₂(R) as a product of elementary matrices, a swap and a sign.
pub fn random_gl2(ring: RingDescriptor, rng: &mut StdRng, entry: impl Fn(&mut StdRng) -> RingElement) -> GLMatrix {
    let one = RingElement::one(ring);
    let zero = RingElement::zero(ring);
    let mut m: Matrix = vec![vec![one.clone(), zero.clone()], vec![zero.clone(), one.clone()]];
    for _ in 0..rng.gen_range(1..=4) {
        let x = entry(rng);
        let e: Matrix = match rng.gen_range(0..4) {
            0 => vec![vec![one.clone(), x], vec![zero.clone(), one.clone()]],
            1 => vec![vec![one.clone(), zero.clone()], vec![x, one.clone()]],
            2 => vec![vec![zero.clone(), one.clone()], vec![one.clone(), zero.clone()]],
            _ => vec![vec![-one.clone(), zero.clone()], vec![zero.clone(), one.clone()]],
        };
        m = xratio::pgl::mat_mul(&m, &e).unwrap();
    }
    GLMatrix::new(ring, m).unwrap()
}

pub fn random_gl2_zs5(rng: &mut StdRng) -> GLMatrix {
    random_gl2(zs5(), rng, |r| random_zs5(r, 3))
}

pub fn random_gl2_z(rng: &mut StdRng) -> GLMatrix {
    random_gl2(RingDescriptor::Integers, rng, |r| RingElement::from_int(RingDescriptor::Integers, r.gen_range(-4..=4)))
}

/// A random G₂(ℤ[√-5]) element: GL factors around an optional non-matrix factor, rescaled by λ ∈ K^×.
pub fn random_g2_zs5(rng: &mut StdRng, principal: Option<bool>) -> GnElement {
    let principal = principal.unwrap_or_else(|| rng.gen_bool(0.5));
    let mut g = random_gl2_zs5(rng).to_gn().unwrap();
    let factors = if principal { 2 * rng.gen_range(0..=1) } else { 1 };
    for _ in 0..factors {
        g = g
            .mul(&non_matrix_element())
            .unwrap()
            .mul(&random_gl2_zs5(rng).to_gn().unwrap())
            .unwrap();
    }
    g.rescale(&random_nonzero_qs5(rng, 4)).unwrap()
}

/// A random element of G₂ over a field (ℚ or 𝔽_p): a trivial-bundle invertible matrix.
pub fn random_g2_field(ring: RingDescriptor, rng: &mut StdRng) -> GnElement {
    loop {
        let rows: Matrix = (0..2)
            .map(|_| {
                (0..2)
                    .map(|_| match ring.modulus() {
                        Some(p) => RingElement::from_int(ring, rng.gen_range(0..p)),
                        None => RingElement::from_rational(ring, random_rational(rng, 9)).unwrap(),
                    })
                    .collect()
            })
            .collect();
        if let Ok(g) = GnElement::new(Bundle::trivial(ring), rows) {
            return g;
        }
    }
}

pub fn random_g2(ring: RingDescriptor, rng: &mut StdRng) -> GnElement {
    if ring == zs5() {
        random_g2_zs5(rng, None)
    } else {
        random_g2_field(ring, rng)
    }
}

/// A random point: a group element applied to a standard point.
pub fn random_point(ring: RingDescriptor, rng: &mut StdRng) -> ProjPoint {
    let (inf, zero, one) = xratio::point::standard_points(ring);
    let base = [inf, zero, one].choose(rng).unwrap().clone();
    random_g2(ring, rng).act(&base).unwrap()
}

/// All generating pairs `(a₀, a₁)` over ℤ/n or 𝔽_p.
pub fn all_points(ring: RingDescriptor) -> Vec<ProjPoint> {
    let n = ring.modulus().unwrap();
    let mut out = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if let Ok(p) = ProjPoint::from_ints(ring, x as i64, y as i64) {
                out.push(p);
            }
        }
    }
    out
}

/// A pair of coprime integers, not both zero.
pub fn coprime_pair(rng: &mut StdRng, bound: i64) -> (i64, i64) {
    loop {
        let (x, y) = (rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound));
        if num_integer::gcd(x, y) == 1 {
            return (x, y);
        }
    }
}
