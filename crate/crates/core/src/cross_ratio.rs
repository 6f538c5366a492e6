//! The cross-ratio of four pairwise strongly distinct points of ℙ¹(R),
//! triple normalization, orbit comparison, the S₄ symmetries and base change.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::bundle::Bundle;
use crate::error::{Error, Result};
use crate::pgl::GnElement;
use crate::point::{delta, point_equal, standard_points, strongly_distinct, ProjPoint};
use crate::ring::{RingElement, RingHom};

/// A generator `g` of `L²`, read as the isomorphism `φ(x) = x/g` onto O.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trivialization {
    pub bundle_square: Bundle,
    pub generator: RingElement,
}

impl Trivialization {
    /// The trivialization given by the bundle's preferred generator.
    pub fn of(bundle_square: &Bundle) -> Result<Trivialization> {
        let g = bundle_square
            .trivializing_generator()
            .ok_or_else(|| Error::Internal(format!("{bundle_square} is not principal")))?;
        Trivialization::with_generator(bundle_square, &g)
    }

    pub fn with_generator(bundle_square: &Bundle, g: &RingElement) -> Result<Trivialization> {
        let generator = bundle_square.section(g)?;
        if !bundle_square.generates(&generator)? {
            return Err(Error::NotGenerating {
                generated: format!("({generator})"),
                bundle: bundle_square.to_string(),
            });
        }
        Ok(Trivialization {
            bundle_square: bundle_square.clone(),
            generator,
        })
    }

    /// `φ(x) = x/g` as an element of R.
    pub fn apply(&self, x: &RingElement) -> Result<RingElement> {
        let ring = self.bundle_square.ring();
        self.bundle_square
            .require_section(x)?
            .checked_div(&self.generator)?
            .coerce(ring)
    }
}

/// A cross-ratio together with the trivialization that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossRatioValue {
    pub value: RingElement,
    pub trivialization: Trivialization,
}

impl fmt::Display for CrossRatioValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Error unless all points are pairwise strongly distinct.
pub fn require_pairwise_distinct(points: &[ProjPoint]) -> Result<()> {
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            if !strongly_distinct(&points[i], &points[j])? {
                return Err(Error::NotStronglyDistinct { first: i, second: j });
            }
        }
    }
    Ok(())
}

/// Move every point onto the bundle of the first one.
///
/// Each other bundle `A` differs from `L` by the principal ideal `L·A⁻¹`;
/// rescaling by its generator lands the point literally on `L`.
pub fn common_bundle(points: &[ProjPoint]) -> Result<(Bundle, Vec<ProjPoint>)> {
    let first = points
        .first()
        .ok_or_else(|| Error::DimensionMismatch("no points".into()))?;
    let target = first.bundle().clone();
    let mut out = Vec::with_capacity(points.len());
    for p in points {
        if p.bundle() == &target {
            out.push(p.clone());
            continue;
        }
        let quotient = target.mul(&p.bundle().inverse())?;
        let lambda = quotient.trivializing_generator().ok_or_else(|| {
            Error::Internal(format!("bundles {target} and {} are in different classes", p.bundle()))
        })?;
        out.push(p.rescale(&lambda)?);
    }
    Ok((target, out))
}

fn phi_delta(t: &Trivialization, a: &ProjPoint, b: &ProjPoint) -> Result<RingElement> {
    t.apply(&delta(a, b)?.value)
}

/// `(a, b; c, d) = φΔ(a,c)·φΔ(b,d) / (φΔ(a,d)·φΔ(b,c))`.
pub fn cross_ratio(a: &ProjPoint, b: &ProjPoint, c: &ProjPoint, d: &ProjPoint) -> Result<CrossRatioValue> {
    let points = [a.clone(), b.clone(), c.clone(), d.clone()];
    require_pairwise_distinct(&points)?;
    let (bundle, _) = common_bundle(&points)?;
    let t = Trivialization::of(&bundle.pow(2))?;
    cross_ratio_with(&points, &t)
}

/// The cross-ratio computed with a given trivialization of `L²`.
pub fn cross_ratio_with(points: &[ProjPoint; 4], t: &Trivialization) -> Result<CrossRatioValue> {
    require_pairwise_distinct(points)?;
    let (bundle, p) = common_bundle(points)?;
    if bundle.pow(2) != t.bundle_square {
        return Err(Error::ContractViolation(format!(
            "trivialization of {} used for points on {bundle}",
            t.bundle_square
        )));
    }
    let num = &phi_delta(t, &p[0], &p[2])? * &phi_delta(t, &p[1], &p[3])?;
    let den = &phi_delta(t, &p[0], &p[3])? * &phi_delta(t, &p[1], &p[2])?;
    let value = num.checked_div(&den)?;
    if !value.is_unit() {
        return Err(Error::Internal(format!("cross-ratio {value} is not a unit")));
    }
    Ok(CrossRatioValue {
        value,
        trivialization: t.clone(),
    })
}

/// The σ with σ(a) = ∞, σ(b) = 0, σ(c) = 1:
/// `M = diag(φΔ(a,c), φΔ(c,b)) ⋆ [[b₁, −b₀], [−a₁, a₀]]` on the common bundle.
pub fn normalize_triple(a: &ProjPoint, b: &ProjPoint, c: &ProjPoint) -> Result<GnElement> {
    let points = [a.clone(), b.clone(), c.clone()];
    require_pairwise_distinct(&points)?;
    let (bundle, p) = common_bundle(&points)?;
    let t = Trivialization::of(&bundle.pow(2))?;
    let section = |x: RingElement| bundle.section(&x);
    let u = section(phi_delta(&t, &p[0], &p[2])?)?;
    let v = section(phi_delta(&t, &p[2], &p[1])?)?;
    let (a, b) = (&p[0], &p[1]);
    let matrix = vec![
        vec![&u * b.a1(), -(&u * b.a0())],
        vec![-(&v * a.a1()), &v * a.a0()],
    ];
    GnElement::new(bundle, matrix)
}

/// `σ(d)` for the normalizer σ of `(a, b, c)`; equals `(O; z, 1)` with z the cross-ratio.
pub fn witness(a: &ProjPoint, b: &ProjPoint, c: &ProjPoint, d: &ProjPoint) -> Result<ProjPoint> {
    normalize_triple(a, b, c)?.act(d)
}

/// A γ carrying `x` to `y` pointwise, which exists exactly when the cross-ratios agree.
pub fn orbit_equal(x: &[ProjPoint; 4], y: &[ProjPoint; 4]) -> Result<Option<GnElement>> {
    let zx = cross_ratio(&x[0], &x[1], &x[2], &x[3])?;
    let zy = cross_ratio(&y[0], &y[1], &y[2], &y[3])?;
    if zx.value != zy.value {
        return Ok(None);
    }
    let alpha = normalize_triple(&x[0], &x[1], &x[2])?;
    let beta = normalize_triple(&y[0], &y[1], &y[2])?;
    let gamma = beta.inverse().mul(&alpha)?;
    for (p, q) in x.iter().zip(y) {
        if !point_equal(&gamma.act(p)?, q)? {
            return Err(Error::Internal(format!("γ does not carry {p} to {q}")));
        }
    }
    Ok(Some(gamma))
}

/// A permutation of four positions: the permuted tuple is `t'[i] = t[perm[i]]`.
pub type Perm4 = [usize; 4];

pub const IDENTITY: Perm4 = [0, 1, 2, 3];

/// The generators (12), (23) and (13)(24).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SymmetryGenerator {
    SwapFirstPair,
    SwapMiddle,
    SwapPairs,
}

impl SymmetryGenerator {
    pub const ALL: [SymmetryGenerator; 3] = [
        SymmetryGenerator::SwapFirstPair,
        SymmetryGenerator::SwapMiddle,
        SymmetryGenerator::SwapPairs,
    ];

    pub fn perm(self) -> Perm4 {
        match self {
            SymmetryGenerator::SwapFirstPair => [1, 0, 2, 3],
            SymmetryGenerator::SwapMiddle => [0, 2, 1, 3],
            SymmetryGenerator::SwapPairs => [2, 3, 0, 1],
        }
    }

    /// The effect on the cross-ratio: z⁻¹, 1 − z, z.
    pub fn transform(self, z: &RingElement) -> Result<RingElement> {
        let out = match self {
            SymmetryGenerator::SwapFirstPair => z.unit_inverse()?,
            SymmetryGenerator::SwapMiddle => &RingElement::one(z.ring()) - z,
            SymmetryGenerator::SwapPairs => z.clone(),
        };
        if !out.is_unit() {
            return Err(Error::ContractViolation(format!("{out} is not a unit")));
        }
        Ok(out)
    }
}

/// `p ∘ q` in the tuple convention: permuting by `p` then by `q`.
pub fn compose(p: &Perm4, q: &Perm4) -> Perm4 {
    [p[q[0]], p[q[1]], p[q[2]], p[q[3]]]
}

pub fn permute<T: Clone>(tuple: &[T; 4], perm: &Perm4) -> [T; 4] {
    [
        tuple[perm[0]].clone(),
        tuple[perm[1]].clone(),
        tuple[perm[2]].clone(),
        tuple[perm[3]].clone(),
    ]
}

/// The permutation reached by a word in the generators.
pub fn word_perm(word: &[SymmetryGenerator]) -> Perm4 {
    word.iter().fold(IDENTITY, |p, g| compose(&p, &g.perm()))
}

/// The cross-ratio after applying a word in the generators, one generator at a time.
pub fn apply_word(word: &[SymmetryGenerator], z: &RingElement) -> Result<RingElement> {
    word.iter().try_fold(z.clone(), |acc, g| g.transform(&acc))
}

/// A shortest word in the generators for each of the 24 permutations.
pub fn generator_words() -> HashMap<Perm4, Vec<SymmetryGenerator>> {
    let mut words = HashMap::from([(IDENTITY, Vec::new())]);
    let mut queue = VecDeque::from([IDENTITY]);
    while let Some(p) = queue.pop_front() {
        for g in SymmetryGenerator::ALL {
            let next = compose(&p, &g.perm());
            if !words.contains_key(&next) {
                let mut word = words[&p].clone();
                word.push(g);
                words.insert(next, word);
                queue.push_back(next);
            }
        }
    }
    words
}

/// The cross-ratio of the permuted tuple, derived symbolically from `value`.
pub fn symmetry_transform(perm: &Perm4, value: &CrossRatioValue) -> Result<CrossRatioValue> {
    let words = generator_words();
    let word = words
        .get(perm)
        .ok_or_else(|| Error::Parse(format!("{perm:?} is not a permutation of 0..4")))?;
    Ok(CrossRatioValue {
        value: apply_word(word, &value.value)?,
        trivialization: value.trivialization.clone(),
    })
}

/// Both sides of the base-change law for a homomorphism `h`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseChangeRecord {
    pub source_value: RingElement,
    /// `h` applied to the cross-ratio over the source.
    pub pulled_back: RingElement,
    /// The cross-ratio of the pushed-forward points.
    pub target_value: RingElement,
    pub agrees: bool,
}

pub fn base_change_cross_ratio(h: &RingHom, points: &[ProjPoint; 4]) -> Result<BaseChangeRecord> {
    let source = cross_ratio(&points[0], &points[1], &points[2], &points[3])?;
    let pushed = [
        points[0].push_forward(h)?,
        points[1].push_forward(h)?,
        points[2].push_forward(h)?,
        points[3].push_forward(h)?,
    ];
    let target = cross_ratio(&pushed[0], &pushed[1], &pushed[2], &pushed[3])?;
    let pulled_back = h.apply(&source.value.coerce(h.source())?)?;
    let agrees = pulled_back == target.value;
    Ok(BaseChangeRecord {
        source_value: source.value,
        pulled_back,
        target_value: target.value,
        agrees,
    })
}

/// `(∞, 0, 1)` as an array.
pub fn standard_triple(ring: crate::ring::RingDescriptor) -> [ProjPoint; 3] {
    let (inf, zero, one) = standard_points(ring);
    [inf, zero, one]
}
