use std::collections::BTreeSet;

use fewdist::geometry::{self, Point, PointSet};
use fewdist::search::{self, Objective};
use fewdist::setcalc::{self, BinOp, Limits};
use fewdist::verify::{self, Depth, Holds};
use fewdist::{NumSet, Scalar};
use proptest::prelude::*;

fn lim() -> Limits {
    Limits::default()
}

fn int_set(max_len: usize, range: std::ops::Range<i64>) -> impl Strategy<Value = NumSet> {
    prop::collection::btree_set(range, 2..=max_len).prop_map(NumSet::from_ints)
}

fn rational() -> impl Strategy<Value = Scalar> {
    (-40i64..=40, 1i64..=9).prop_map(|(p, q)| Scalar::new(p, q).unwrap())
}

fn rational_set(max_len: usize) -> impl Strategy<Value = NumSet> {
    prop::collection::btree_set(rational(), 2..=max_len).prop_map(|v| v.into_iter().collect())
}

fn nonzero_int() -> impl Strategy<Value = i64> {
    prop_oneof![-7i64..=-1, 1i64..=7]
}

fn affine(a: &NumSet, c: i64, t: i64) -> NumSet {
    a.iter()
        .map(|x| &(&x * &Scalar::from_int(c)) + &Scalar::from_int(t))
        .collect()
}

fn is_ap(v: &[i64]) -> bool {
    v.windows(2).all(|w| w[1] - w[0] == v[1] - v[0])
}

proptest! {
    #[test]
    fn sumset_commutes_and_is_bounded(x in rational_set(7), y in rational_set(7)) {
        let xy = setcalc::sumset(&x, &y, &lim()).unwrap();
        prop_assert_eq!(&xy, &setcalc::sumset(&y, &x, &lim()).unwrap());
        prop_assert!(xy.len() >= x.len().max(y.len()));
        prop_assert!(xy.len() <= x.len() * y.len());
    }

    #[test]
    fn difference_set_is_symmetric(a in rational_set(8)) {
        let d = setcalc::difference_set(&a, &a, &lim()).unwrap();
        prop_assert!(d.contains_zero());
        prop_assert_eq!(&setcalc::dilate(&d, &Scalar::from_int(-1)), &d);
    }

    #[test]
    fn fast_path_matches_rational_path(
        x in int_set(40, -500..500),
        y in int_set(40, -500..500),
        wide in any::<bool>(),
    ) {
        let (x, y) = if wide {
            (affine(&x, 1_000_003, 7), affine(&y, 999_983, -3))
        } else {
            (x, y)
        };
        for op in [BinOp::Add, BinOp::Sub, BinOp::Mul] {
            prop_assert_eq!(
                setcalc::combine(op, &x, &y, &lim()).unwrap(),
                setcalc::combine_rational(op, &x, &y, &lim()).unwrap()
            );
        }
        prop_assert_eq!(
            setcalc::combine(BinOp::Add, &x, &x, &lim()).unwrap(),
            setcalc::combine_rational(BinOp::Add, &x, &x, &lim()).unwrap()
        );
    }

    #[test]
    fn rep_counts_total_a_squared(a in rational_set(9)) {
        let d = setcalc::difference_set(&a, &a, &lim()).unwrap();
        let total: u64 = d.iter().map(|x| setcalc::rep_count(&a, &x)).sum();
        prop_assert_eq!(total, (a.len() * a.len()) as u64);
    }

    #[test]
    fn plunnecke_holds(s in int_set(6, -20..20), m in 0u32..3, n in 0u32..3) {
        prop_assume!(m + n >= 1);
        let rec = verify::check_plunnecke(&s, m, n, &lim()).unwrap();
        prop_assert_eq!(rec.holds, Holds::True);
    }

    #[test]
    fn rich_line_meets_pigeonhole_bound(a in rational_set(9)) {
        let r = geometry::rich_line(&a, &lim()).unwrap();
        prop_assert!(Scalar::from_int(r.count() as i64) >= r.bound);
        for p in &r.points {
            prop_assert_eq!(&(&p.x - &p.y), &r.d);
            prop_assert!(a.contains(&p.x) && a.contains(&p.y));
        }
    }

    #[test]
    fn distances_are_equivariant(a in rational_set(6), c in rational(), t in rational()) {
        prop_assume!(!c.is_zero());
        let moved: NumSet = a.iter().map(|x| &(&x * &c) + &t).collect();
        let grid = PointSet::cartesian(&moved, &moved, &lim()).unwrap();
        let base = geometry::product_distance_set(&a, &lim()).unwrap();
        prop_assert_eq!(
            geometry::distance_set(&grid, &lim()).unwrap(),
            setcalc::dilate(&base, &c.square())
        );
        prop_assert_eq!(
            geometry::rich_line(&moved, &lim()).unwrap().count(),
            geometry::rich_line(&a, &lim()).unwrap().count()
        );
    }

    #[test]
    fn slopes_are_infinite_only_for_verticals(pts in prop::collection::vec((rational(), rational()), 2..8)) {
        let p: PointSet = pts.into_iter().map(|(x, y)| Point::new(x, y)).collect();
        prop_assume!(p.len() >= 2);
        let slopes = geometry::slope_set(&p, &lim()).unwrap();
        let has_vertical = p.iter().any(|a| p.iter().any(|b| a.x == b.x && a.y != b.y));
        prop_assert_eq!(slopes.contains(&geometry::Slope::Infinity), has_vertical);
        if !geometry::is_collinear(&p) {
            prop_assert!(slopes.len() + 1 >= p.len());
        }
    }

    #[test]
    fn audit_ratios_are_exact(a in int_set(5, -12..12)) {
        let mut recs = vec![
            verify::check_differencing(&a, &lim()).unwrap(),
            verify::check_main_theorem(&a, Depth::RatioOnly, &lim()).unwrap(),
            verify::check_rudin_exponent(&a, &lim()).unwrap(),
        ];
        recs.push(verify::check_plunnecke(&a, 2, 1, &lim()).unwrap());
        recs.push(verify::check_main_theorem(&a, Depth::FullChain, &lim()).unwrap());
        for rec in recs {
            match &rec.ratio {
                Some(r) => prop_assert_eq!(&(r * &rec.rhs), &rec.lhs),
                None => prop_assert!(rec.rhs.is_zero()),
            }
        }
    }

    #[test]
    fn rho_hat_orders_like_rho(a in int_set(7, 0..40), b in int_set(7, 0..40)) {
        let ra = verify::main_theorem_report(&a, Depth::RatioOnly, &lim()).unwrap();
        let rb = verify::main_theorem_report(&b, Depth::RatioOnly, &lim()).unwrap();
        // the f64 roots are only compared when they are clearly apart
        if (ra.rho - rb.rho).abs() > 1e-9 {
            prop_assert_eq!(ra.rho_hat > rb.rho_hat, ra.rho > rb.rho);
        }
    }

    #[test]
    fn objectives_are_affine_invariant(a in int_set(7, 0..30), c in nonzero_int(), t in -50i64..50) {
        let moved = affine(&a, c, t);
        for objective in [Objective::MinDistances, Objective::MaxRho] {
            prop_assert_eq!(
                search::objective_value(&a, objective, &lim()).unwrap(),
                search::objective_value(&moved, objective, &lim()).unwrap()
            );
        }
        let tri = |s: &NumSet| {
            let r = verify::main_theorem_report(s, Depth::RatioOnly, &lim()).unwrap();
            (r.a_card, r.d_card, r.delta_card)
        };
        prop_assert_eq!(tri(&a), tri(&moved));
    }

    #[test]
    fn generated_families_have_requested_size(n in 1usize..40, seed in any::<u64>()) {
        use fewdist::search::FamilySpec;
        for spec in [
            FamilySpec::Ap { gap: 3 },
            FamilySpec::Random { universe: 100, seed },
            FamilySpec::PerturbedAp { gap: 5, radius: 2, seed },
            FamilySpec::Squares,
        ] {
            prop_assert_eq!(search::generate_family(&spec, n).unwrap().len(), n);
        }
    }
}

#[test]
fn doubling_is_minimal_exactly_for_progressions() {
    let universe: Vec<i64> = (0..=9).collect();
    for mask in 1u32..(1 << universe.len()) {
        if mask.count_ones() > 5 {
            continue;
        }
        let v: Vec<i64> = (0..10)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| universe[i])
            .collect();
        let x = NumSet::from_ints(v.iter().copied());
        let doubled = setcalc::sumset(&x, &x, &lim()).unwrap().len();
        assert!(doubled >= 2 * v.len() - 1, "{v:?}");
        assert_eq!(
            doubled == 2 * v.len() - 1,
            v.len() <= 2 || is_ap(&v),
            "{v:?}"
        );
    }
}

#[test]
fn sumset_matches_brute_force_on_small_sets() {
    let sets: [&[i64]; 4] = [&[0], &[1, 2, 4, 8], &[-3, 0, 5, 6, 11], &[10, 20, 30]];
    for x in sets {
        for y in sets {
            let expect: BTreeSet<i64> = x
                .iter()
                .flat_map(|a| y.iter().map(move |b| a + b))
                .collect();
            let got = setcalc::sumset(
                &NumSet::from_ints(x.iter().copied()),
                &NumSet::from_ints(y.iter().copied()),
                &lim(),
            )
            .unwrap();
            assert_eq!(got, NumSet::from_ints(expect));
        }
    }
}
