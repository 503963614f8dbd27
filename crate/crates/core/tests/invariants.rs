//! Property-based invariants.

use index2_core::analysis::planarity;
use index2_core::enumerator::{build_family, class_representative};
use index2_core::exactgeom::{FieldElement, PlatonicKind, PointGroup, Vec3};
use index2_core::tracer::{FaceShape, TurnSymbol};
use proptest::prelude::*;

fn field() -> impl Strategy<Value = FieldElement> {
    (-40i64..=40, 1i64..=12, -40i64..=40, 1i64..=12).prop_map(|(a, b, c, d)| FieldElement::from_ratios(a, b, c, d))
}

fn shape(choices: usize) -> impl Strategy<Value = FaceShape> {
    let alphabet = TurnSymbol::alphabet(choices);
    (0..choices, 0..choices).prop_map(move |(i, j)| FaceShape::new(alphabet[i], alphabet[j]))
}

proptest! {
    #[test]
    fn field_ring_laws(x in field(), y in field(), z in field()) {
        prop_assert_eq!(&(&x + &y) * &z, &(&x * &z) + &(&y * &z));
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert!((&(&x - &y) + &y - x.clone()).is_zero());
    }

    #[test]
    fn field_inverse_and_norm(x in field(), y in field()) {
        prop_assume!(!x.is_zero());
        prop_assert!((&x * &x.inv().unwrap()).is_one());
        prop_assert_eq!((&x * &y).norm(), x.norm() * y.norm());
        prop_assert_eq!(x.conjugate().conjugate(), x.clone());
    }

    #[test]
    fn field_order_matches_floats(x in field(), y in field()) {
        let (a, b) = (x.to_f64(), y.to_f64());
        prop_assume!((a - b).abs() > 1e-9);
        prop_assert_eq!(x < y, a < b);
    }

    #[test]
    fn field_literal_round_trip(x in field()) {
        let back: FieldElement = x.to_string().parse().unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn shape_class_is_closed(s in prop_oneof![shape(2), shape(3), shape(4)]) {
        let rep = class_representative(s);
        prop_assert!(rep <= s);
        prop_assert_eq!(class_representative(s.reversed()), rep);
        prop_assert_eq!(class_representative(s.swapped()), rep);
        let back: FaceShape = s.to_string().parse().unwrap();
        prop_assert_eq!(back, s);
    }

    #[test]
    fn group_elements_are_orthogonal(k in 0usize..120) {
        let g = PointGroup::shared(PlatonicKind::Icosahedral);
        let m = g.element(k);
        let e = [Vec3::from_ints(1, 0, 0), Vec3::from_ints(0, 1, 0), Vec3::from_ints(0, 0, 1)];
        for a in &e {
            for b in &e {
                prop_assert_eq!(m.apply(a).dot(&m.apply(b)), a.dot(b));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn doubled_families_never_planar(n in 1i64..40, d in 1i64..9, s in -6i64..6) {
        let lambda = FieldElement::from_ratios(n, d, s, d);
        prop_assume!(lambda.is_positive() && !lambda.is_one());
        for id in ["tetA-rr", "oct-rl", "dod1-rr", "ico2-srsr"] {
            let p = build_family(id).unwrap();
            prop_assert!(!planarity(&p, &lambda).iter().all(|&b| b), "{} planar at {}", id, lambda);
        }
    }

    #[test]
    fn positions_lie_on_two_spheres(n in 1i64..40, d in 1i64..9) {
        let lambda = FieldElement::from_ratios(n, d, 0, 1);
        let p = build_family("ico1-hrsr").unwrap();
        let pos = p.positions(&lambda);
        let r = pos[0].norm2();
        let half = pos.len() / 2;
        for v in &pos[..half] {
            prop_assert_eq!(v.norm2(), r.clone());
        }
        for v in &pos[half..] {
            prop_assert_eq!(v.norm2(), &(&lambda * &lambda) * &r);
        }
    }
}
