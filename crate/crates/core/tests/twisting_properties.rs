use proptest::prelude::*;
use twistcheck::algebroid::{check_cocycle, check_main_theorem, induced_cocycle, scalar_extension};
use twistcheck::catalog::{
    adjoint_yd, bicharacter_structures, character_graded_yd, coboundary_twist, conjugation_yd, group_algebra,
    sweedler_h4, GroupPresentation,
};
use twistcheck::exactlin::Field;
use twistcheck::twist::{check_twist, inverse_twist, twist_bialgebra};
use twistcheck::yd::check_czgen;

fn config() -> ProptestConfig {
    ProptestConfig {
        cases: 12,
        ..ProptestConfig::default()
    }
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn sweedler_coboundaries_satisfy_both_theorems(num in -6i64..=6, den in 1i64..=5) {
        prop_assume!(num != 0);
        let hd = sweedler_h4(Field::Rationals).unwrap();
        let h = &hd.bialgebra;
        let t = h.field().ratio(num, den).unwrap();
        let u = h.one().add(&h.basis(2).scale(&t));
        let twist = coboundary_twist(h, &u).unwrap();
        let a = adjoint_yd(&hd).unwrap();
        prop_assert!(check_czgen(&twist, &a.yd, Some(&a)).passed());
        prop_assert!(check_main_theorem(&a, &twist).passed());
    }

    #[test]
    fn s3_coboundaries_satisfy_the_main_theorem(c in -4i64..=4, g in 1usize..6) {
        // u = e + c(g − e) has ε(u) = 1; invertible unless c = 1/2 for an involution
        let grp = GroupPresentation::symmetric3();
        let h = group_algebra(&grp, Field::Rationals).unwrap().bialgebra;
        let f = h.field();
        let u = h.one().add(&h.basis(g).sub(h.one()).scale(&f.from_i64(c)));
        let Ok(twist) = coboundary_twist(&h, &u) else { return Ok(()) };
        let a = conjugation_yd(&grp, &h).unwrap();
        let r = check_main_theorem(&a, &twist);
        prop_assert!(r.passed(), "{}", r);
    }

    #[test]
    fn bicharacter_twists_on_klein(bits in 0u8..16) {
        let g = GroupPresentation::elementary_abelian_2(2);
        let h = group_algebra(&g, Field::Rationals).unwrap().bialgebra;
        let m = vec![vec![bits & 1, (bits >> 1) & 1], vec![(bits >> 2) & 1, (bits >> 3) & 1]];
        let (twist, _) = bicharacter_structures(&g, &h, &m).unwrap();
        prop_assert!(check_twist(&h, &twist.f).passed());
        for a in [conjugation_yd(&g, &h).unwrap(), character_graded_yd(&g, &h).unwrap()] {
            prop_assert!(check_main_theorem(&a, &twist).passed());
            let b = scalar_extension(&a, &h).unwrap();
            prop_assert!(check_cocycle(&induced_cocycle(&b, &twist).unwrap()).passed());
        }
    }

    #[test]
    fn twisting_back_restores_the_coproduct(c in -4i64..=4) {
        let grp = GroupPresentation::symmetric3();
        let h = group_algebra(&grp, Field::Rationals).unwrap().bialgebra;
        let f = h.field();
        let u = h.one().add(&h.basis(4).sub(h.one()).scale(&f.from_i64(c)));
        let Ok(twist) = coboundary_twist(&h, &u) else { return Ok(()) };
        let back = inverse_twist(&twist).unwrap();
        let restored = twist_bialgebra(&back.host, &back).unwrap();
        prop_assert_eq!(restored.coalgebra.comult, h.coalgebra.comult);
    }
}
