use std::sync::Arc;

use gpd_core::canonical::canonical_form;
use gpd_core::format::{groupoid_json, Decoder};
use gpd_core::sample::{random_fraction, random_groupoid, random_map, random_relabelling, random_weak_equivalence};
use gpd_core::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn groupoid(r: &mut ChaCha8Rng, max: usize) -> Arc<FiniteGroupoid> {
    Arc::new(random_groupoid(r, max))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonical_form_ignores_labels(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = groupoid(&mut r, 16);
        let shuffle = random_relabelling(&mut r, &g);
        let a = canonical_form(&g).unwrap();
        let b = canonical_form(shuffle.domain()).unwrap();
        prop_assert_eq!(a.groupoid, b.groupoid);
    }

    #[test]
    fn json_round_trip(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = groupoid(&mut r, 20);
        let text = serde_json::to_string(&groupoid_json(&g)).unwrap();
        let back = Decoder::new().groupoid(&serde_json::from_str(&text).unwrap()).unwrap();
        prop_assert_eq!(&back, &*g);
        prop_assert_eq!(serde_json::to_string(&groupoid_json(&back)).unwrap(), text);
    }

    #[test]
    fn charequi_matches_weak_equivalence(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = groupoid(&mut r, 20);
        let h = groupoid(&mut r, 20);
        if let Some(f) = random_map(&mut r, &h, &g) {
            prop_assert_eq!(is_weak_equivalence(&f), charequi_check(&f));
        }
        let w = random_weak_equivalence(&mut r, &g);
        prop_assert!(charequi_check(&w));
    }

    #[test]
    fn two_out_of_three(seed in any::<u64>()) {
        let mut r = rng(seed);
        let a = groupoid(&mut r, 10);
        let b = groupoid(&mut r, 10);
        let c = groupoid(&mut r, 10);
        let (Some(f), Some(g)) = (random_map(&mut r, &a, &b), random_map(&mut r, &b, &c)) else {
            return Ok(());
        };
        let gf = g.compose(&f).unwrap();
        let (wf, wg, wgf) = (is_weak_equivalence(&f), is_weak_equivalence(&g), is_weak_equivalence(&gf));
        prop_assert!(!(wf && wg) || wgf);
        prop_assert!(!(wg && wgf) || wf);
        prop_assert!(!(wf && wgf) || wg);
    }

    #[test]
    fn base_change_of_a_weak_equivalence(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = groupoid(&mut r, 12);
        let h = groupoid(&mut r, 8);
        let f1 = random_weak_equivalence(&mut r, &g);
        if let Some(f2) = random_map(&mut r, &h, &g) {
            prop_assert!(base_change_is_surjective_equivalence(&f1, &f2).unwrap());
            let pb = homotopy_pullback(&f1, &f2).unwrap();
            pb.groupoid.check_laws().unwrap();
        }
    }

    #[test]
    fn fraction_equality_is_an_equivalence(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = groupoid(&mut r, 8);
        let t = groupoid(&mut r, 8);
        let Some(a) = random_fraction(&mut r, &g, &t) else { return Ok(()) };
        prop_assert!(fraction_equal(&a, &a).unwrap());
        // a refined copy of a presents the same generalized map
        let w = random_weak_equivalence(&mut r, a.apex());
        let b = Fraction::new(a.left().compose(&w).unwrap(), a.right().compose(&w).unwrap()).unwrap();
        prop_assert!(fraction_equal(&a, &b).unwrap());
        prop_assert!(fraction_equal(&b, &a).unwrap());
        if let Some(c) = random_fraction(&mut r, &g, &t) {
            let ab = fraction_equal(&a, &c).unwrap();
            prop_assert_eq!(ab, fraction_equal(&c, &a).unwrap());
            prop_assert_eq!(ab, fraction_equal(&b, &c).unwrap());
        }
    }

    #[test]
    fn composition_is_unital_and_associative(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g1 = groupoid(&mut r, 6);
        let g2 = groupoid(&mut r, 6);
        let g3 = groupoid(&mut r, 6);
        let g4 = groupoid(&mut r, 6);
        let (Some(a), Some(b), Some(c)) = (
            random_fraction(&mut r, &g1, &g2),
            random_fraction(&mut r, &g2, &g3),
            random_fraction(&mut r, &g3, &g4),
        ) else {
            return Ok(());
        };
        let id = Fraction::identity(&g1);
        prop_assert!(fraction_equal(&compose_fractions(&id, &a).unwrap(), &a).unwrap());
        prop_assert!(fraction_equal(&compose_fractions(&a, &Fraction::identity(&g2)).unwrap(), &a).unwrap());
        let left = compose_fractions(&compose_fractions(&a, &b).unwrap(), &c).unwrap();
        let right = compose_fractions(&a, &compose_fractions(&b, &c).unwrap()).unwrap();
        prop_assert!(fraction_equal(&left, &right).unwrap());
    }

    #[test]
    fn inverse_of_an_invertible_fraction(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = groupoid(&mut r, 8);
        let phi = random_weak_equivalence(&mut r, &g);
        // a weak equivalence out of the apex: quasi-inverse of one into it
        let w = random_weak_equivalence(&mut r, phi.domain());
        let (psi, _) = quasi_inverse(&w).unwrap();
        let fr = Fraction::new(phi, psi).unwrap();
        let inv = invert_fraction(&fr).unwrap();
        prop_assert!(fraction_equal(&compose_fractions(&fr, &inv).unwrap(), &Fraction::identity(&g)).unwrap());
        let target = fr.target().clone();
        prop_assert!(fraction_equal(&compose_fractions(&inv, &fr).unwrap(), &Fraction::identity(&target)).unwrap());
    }

    #[test]
    fn refinements_present_the_same_map(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = groupoid(&mut r, 8);
        let t = groupoid(&mut r, 8);
        let Some(fr) = random_fraction(&mut r, &g, &t) else { return Ok(()) };
        let re = refine_over_cover(&fr).unwrap();
        prop_assert!(fraction_equal(&re.fraction, &fr).unwrap());
    }

    #[test]
    fn bibundle_round_trips(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = groupoid(&mut r, 8);
        let t = groupoid(&mut r, 8);
        let Some(fr) = random_fraction(&mut r, &g, &t) else { return Ok(()) };
        let w = roundtrip_alpha_beta(&fr).unwrap();
        prop_assert!(fraction_equal(&w.fraction, &fr).unwrap());
        let b = fraction_to_bibundle(&fr).unwrap().bibundle;
        prop_assert!(b.is_right_principal());
        prop_assert_eq!(b.is_left_principal(), is_weak_equivalence(fr.right()));
        let iso = roundtrip_beta_alpha(&b).unwrap();
        prop_assert_eq!(iso.len(), b.carrier());
        if b.is_left_principal() {
            let gi = gauge_from_bibundle(&b).unwrap();
            prop_assert!(gi.iso.is_isomorphism());
        }
    }

    #[test]
    fn morita_verdict_matches_the_span(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = groupoid(&mut r, 12);
        let w = random_weak_equivalence(&mut r, &g);
        let h = w.domain().clone();
        let v = morita_equivalent(&g, &h).unwrap();
        prop_assert!(v.equivalent);
        let span = v.span.unwrap();
        prop_assert!(is_weak_equivalence(span.left()) && is_weak_equivalence(span.right()));
        let other = groupoid(&mut r, 12);
        let v2 = morita_equivalent(&g, &other).unwrap();
        let back = morita_equivalent(&other, &g).unwrap();
        prop_assert_eq!(v2.equivalent, back.equivalent);
        if let Some(s) = v2.span {
            prop_assert!(is_weak_equivalence(s.left()) && is_weak_equivalence(s.right()));
        }
    }
}
