mod common;

use common::*;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn ring_laws_hold(a in laurent(), b in laurent(), c in laurent()) {
        ring_laws(&a, &b, &c)?;
    }

    #[test]
    fn substitution_is_a_ring_map(s in substitution(), a in laurent(), b in laurent()) {
        homomorphism(&s, &a, &b)?;
    }

    #[test]
    fn inverse_cancels(f in auto(0, true), p in poly_xyz(0)) {
        inverse_composition(&f, &p)?;
    }

    #[test]
    fn inverse_cancels_over_laurent(f in auto(2, false), p in poly_xyz(2)) {
        inverse_composition(&f, &p)?;
    }

    #[test]
    fn pullback_is_contravariant(e in family(), a in auto(0, true), b in auto(0, true), p in poly_xyz(0)) {
        contravariance(&e, &a, &b, &p)?;
    }
}
