mod common;

use proptest::prelude::*;
use rand::Rng;

use common::*;
use xratio::cross_ratio::{cross_ratio, cross_ratio_with, orbit_equal, permute, Trivialization};
use xratio::ideal::FractionalIdeal;
use xratio::json::{gn_json, ideal_json, parse_gn, parse_ideal, parse_point, point_json};
use xratio::pgl::{dedekind_membership, GnElement, Matrix, Membership};
use xratio::point::{delta, point_equal, standard_points, strongly_distinct, ProjPoint};
use xratio::ring::{RingDescriptor, RingElement};

fn field(choice: u8) -> RingDescriptor {
    match choice % 3 {
        0 => RingDescriptor::Rationals,
        1 => RingDescriptor::prime_field(7).unwrap(),
        _ => RingDescriptor::prime_field(101).unwrap(),
    }
}

fn any_ring(choice: u8) -> RingDescriptor {
    if choice % 4 == 3 {
        zs5()
    } else {
        field(choice)
    }
}

fn random_ideal(rng: &mut rand::rngs::StdRng) -> FractionalIdeal {
    loop {
        let gens: Vec<RingElement> = (0..rng.gen_range(1..=2)).map(|_| random_zs5(rng, 6)).collect();
        if let Ok(i) = FractionalIdeal::from_generators(zs5(), &gens) {
            let scale = random_nonzero_qs5(rng, 3);
            return i.scaled_by(&scale).unwrap();
        }
    }
}

fn over_field(m: &Matrix, k: RingDescriptor) -> Matrix {
    m.iter().map(|r| r.iter().map(|x| x.coerce(k).unwrap()).collect()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn delta_is_antisymmetric_and_detects_equality(seed in any::<u64>(), choice in any::<u8>()) {
        let ring = any_ring(choice);
        let mut rng = rng(seed);
        let a = random_point(ring, &mut rng);
        let b = if rng.gen_bool(0.3) {
            a.rescale(&RingElement::from_int(a.bundle().section_ring(), 3)).unwrap()
        } else {
            random_point(ring, &mut rng)
        };
        let ab = delta(&a, &b).unwrap().value;
        let ba = delta(&b, &a).unwrap().value;
        prop_assert_eq!(&ab, &-ba);
        prop_assert_eq!(point_equal(&a, &b).unwrap(), ab.is_zero());
        prop_assert!(delta(&a, &a).unwrap().value.is_zero());
    }

    #[test]
    fn strongly_distinct_bundles_are_inverse(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let (inf, zero, _) = standard_points(zs5());
        let g = random_g2_zs5(&mut rng, None);
        let (a, b) = (g.act(&inf).unwrap(), g.act(&zero).unwrap());
        prop_assert!(strongly_distinct(&a, &b).unwrap());
        let product = a.bundle().mul(b.bundle()).unwrap();
        prop_assert!(product.pic_class().map_or(true, |c| c.is_trivial()));
    }

    #[test]
    fn ideal_laws(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let (i, j) = (random_ideal(&mut rng), random_ideal(&mut rng));
        let one = FractionalIdeal::unit(zs5());
        prop_assert_eq!(i.mul(&i.inverse()).unwrap(), one.clone());
        prop_assert_eq!(i.mul(&j).unwrap().norm(), i.norm() * j.norm());
        prop_assert_eq!(i.factor().unwrap().product(zs5()), i.clone());
        prop_assert_eq!(i.mul(&i.conjugate()).unwrap().is_principal(), true);
        prop_assert_eq!(i.pow(2).mul(&i.pow(-1)).unwrap(), i.clone());
        prop_assert_eq!(i.pic_class().same_class(&i.pic_class()).unwrap(), true);
        for (p, e) in &i.factor().unwrap().factors {
            prop_assert_eq!(i.ord(p).unwrap(), *e);
        }
    }

    #[test]
    fn group_axioms(seed in any::<u64>(), choice in any::<u8>()) {
        let ring = any_ring(choice);
        let mut rng = rng(seed);
        let (s, t, u) = (random_g2(ring, &mut rng), random_g2(ring, &mut rng), random_g2(ring, &mut rng));
        let id = GnElement::identity(ring, 2);
        let l = s.mul(&t).unwrap().mul(&u).unwrap();
        let r = s.mul(&t.mul(&u).unwrap()).unwrap();
        prop_assert!(l.equivalent(&r).unwrap());
        prop_assert!(s.mul(&s.inverse()).unwrap().equivalent(&id).unwrap());
        prop_assert!(s.canonical().unwrap().equivalent(&s).unwrap());
        let lambda = random_nonzero_qs5(&mut rng, 3);
        if ring == zs5() {
            let scaled = s.rescale(&lambda).unwrap();
            prop_assert!(scaled.equivalent(&s).unwrap());
            prop_assert_eq!(scaled.canonical().unwrap(), s.canonical().unwrap());
        }
    }

    #[test]
    fn action_is_compatible(seed in any::<u64>(), choice in any::<u8>()) {
        let ring = any_ring(choice);
        let mut rng = rng(seed);
        let (s, t) = (random_g2(ring, &mut rng), random_g2(ring, &mut rng));
        let a = random_point(ring, &mut rng);
        let lhs = s.mul(&t).unwrap().act(&a).unwrap();
        let rhs = s.act(&t.act(&a).unwrap()).unwrap();
        prop_assert!(point_equal(&lhs, &rhs).unwrap());
        prop_assert!(point_equal(&GnElement::identity(ring, 2).act(&a).unwrap(), &a).unwrap());
    }

    #[test]
    fn cross_ratio_is_invariant_and_a_unit(seed in any::<u64>(), choice in any::<u8>()) {
        let ring = field(choice);
        let mut rng = rng(seed);
        let p: [ProjPoint; 4] = distinct_field_points(ring, &mut rng, 4).try_into().unwrap();
        let z = cross_ratio(&p[0], &p[1], &p[2], &p[3]).unwrap().value;
        prop_assert!(z.is_unit());
        prop_assert!(!(&z - &RingElement::one(ring)).is_zero());
        let g = random_g2_field(ring, &mut rng);
        let q: Vec<ProjPoint> = p.iter().map(|x| g.act(x).unwrap()).collect();
        prop_assert_eq!(cross_ratio(&q[0], &q[1], &q[2], &q[3]).unwrap().value, z.clone());
        let q: [ProjPoint; 4] = q.try_into().unwrap();
        let gamma = orbit_equal(&p, &q).unwrap();
        prop_assert!(gamma.is_some());
        for perm in [[1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]] {
            let t = permute(&p, &perm);
            prop_assert_eq!(cross_ratio(&t[0], &t[1], &t[2], &t[3]).unwrap().value, z.clone());
        }
    }

    #[test]
    fn cross_ratio_ignores_the_trivialization(seed in any::<u64>(), modulus in prop::sample::select(vec![25u64, 49, 121])) {
        let ring = RingDescriptor::integers_mod(modulus).unwrap();
        let p = (modulus as f64).sqrt() as i64;
        let mut rng = rng(seed);
        let mut xs: Vec<i64> = Vec::new();
        while xs.len() < 4 {
            let x = rng.gen_range(0..modulus as i64);
            if xs.iter().all(|y| (x - y).rem_euclid(p) != 0) {
                xs.push(x);
            }
        }
        let pts: Vec<ProjPoint> = xs.iter().map(|&x| ProjPoint::from_ints(ring, x, 1).unwrap()).collect();
        let pts: [ProjPoint; 4] = pts.try_into().unwrap();
        let z = cross_ratio(&pts[0], &pts[1], &pts[2], &pts[3]).unwrap();
        let unit = loop {
            let u = RingElement::from_int(ring, rng.gen_range(1..modulus as i64));
            if u.is_unit() {
                break u;
            }
        };
        let t = Trivialization::with_generator(&z.trivialization.bundle_square, &unit).unwrap();
        prop_assert_eq!(cross_ratio_with(&pts, &t).unwrap().value, z.value);
    }

    #[test]
    fn dedekind_membership_is_sound(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let g = random_g2_zs5(&mut rng, None);
        match dedekind_membership(zs5(), &over_field(g.matrix(), qs5())).unwrap() {
            Membership::Member(h) => {
                prop_assert_eq!(h.bundle(), g.bundle());
                prop_assert!(h.equivalent(&g).unwrap());
            }
            Membership::NotMember { violating_prime } => prop_assert!(false, "rejected at {}", violating_prime),
        }
    }

    #[test]
    fn json_round_trips(seed in any::<u64>(), choice in any::<u8>()) {
        let ring = any_ring(choice);
        let mut rng = rng(seed);
        let a = random_point(ring, &mut rng);
        let back = parse_point(ring, &point_json(&a)).unwrap();
        prop_assert_eq!(back.bundle(), a.bundle());
        prop_assert!(point_equal(&back, &a).unwrap());
        let g = random_g2(ring, &mut rng);
        let h = parse_gn(ring, &gn_json(&g)).unwrap();
        prop_assert_eq!(&h, &g);
        let i = random_ideal(&mut rng);
        prop_assert_eq!(parse_ideal(zs5(), &ideal_json(&i)).unwrap(), i);
    }
}
