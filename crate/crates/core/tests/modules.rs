use proptest::prelude::*;

use bsc_core::exactnum::{FieldData, QSqrtQ, Rat};
use bsc_core::isocrystal::{
    admissible_by_inequalities, build_admissible_filtration, polygon_dominates, weak_admissible, Filtration,
    PhiModule,
};
use bsc_core::rootdata::{in_hull, in_vxi, HighestWeight, RootDatum};
use bsc_core::satake::{norm_xi_val, twisted_action, GroupRingElem};
use bsc_core::weildeligne::{mod_of_wd, wd_of_mod, WdRep};

fn halves(lo: i64, hi: i64) -> impl Strategy<Value = Rat> {
    (2 * lo..=2 * hi).prop_map(Rat::half)
}

proptest! {
    #[test]
    fn inequalities_match_polygons(
        slopes in prop::collection::vec(halves(-6, 6), 1..=5),
        seed in prop::collection::vec(halves(-6, 6), 5),
    ) {
        let n = slopes.len();
        let mut jumps = seed[..n].to_vec();
        let total: Rat = slopes.iter().sum();
        let rest: Rat = jumps[1..].iter().sum();
        jumps[0] = total - rest;
        let d = PhiModule::from_slopes(FieldData::qp(3), &slopes).unwrap();
        let f = Filtration::from_jumps(&[jumps]).unwrap();
        let ineq = admissible_by_inequalities(&d, &f).unwrap();
        prop_assert_eq!(ineq, polygon_dominates(&d.newton_polygon(), &f.hodge_polygon().unwrap()).unwrap());
        if ineq {
            let w = build_admissible_filtration(&d, &f).unwrap();
            prop_assert!(weak_admissible(&d, &w).unwrap());
        }
    }

    #[test]
    fn dominance_matches_hull_for_sp4(x in halves(-4, 4), y in halves(-4, 4), k in 0i64..=2) {
        let g = RootDatum::sp4();
        let l = FieldData::qp(5);
        let xi = HighestWeight::new(&g, &l, vec![vec![Rat::int(k), Rat::zero()]]).unwrap();
        let z = vec![x, y];
        prop_assert_eq!(in_vxi(&g, &l, &xi, &z, false).unwrap(), in_hull(&g, &l, &xi, &z).unwrap());
    }

    #[test]
    fn norm_is_weyl_invariant(
        lam in prop::collection::vec(-3i64..=3, 3),
        mu in prop::collection::vec(-3i64..=3, 3),
        a in -5i64..=5,
        w_index in 0usize..6,
    ) {
        let g = RootDatum::gl(3).unwrap();
        let l = FieldData::qp(3);
        let xi = HighestWeight::new(&g, &l, vec![vec![Rat::zero(), Rat::one(), Rat::int(2)]]).unwrap();
        let x = GroupRingElem::from_terms(3, [(lam, QSqrtQ::one(3)), (mu, QSqrtQ::new(Rat::int(a), Rat::one(), 3))]);
        let w = &g.weyl_group()[w_index];
        prop_assert_eq!(
            norm_xi_val(&g, &l, &xi, &x).unwrap(),
            norm_xi_val(&g, &l, &xi, &twisted_action(&g, w, &x)).unwrap()
        );
    }

    #[test]
    fn unramified_round_trip(vals in prop::collection::vec(-10i64..=10, 1..=6), f in 1u32..=3) {
        let l = FieldData::new(2, 1, f).unwrap();
        let vals: Vec<Rat> = vals.into_iter().map(|v| Rat::new(v, 2)).collect();
        let mut distinct = vals.clone();
        distinct.sort();
        distinct.dedup();
        let r = WdRep::unramified(l, &distinct).unwrap();
        let d = mod_of_wd(&r).unwrap();
        prop_assert_eq!(d.t_n(), r.det_valuation());
        prop_assert_eq!(wd_of_mod(&d).unwrap(), r.canonical());
    }
}
