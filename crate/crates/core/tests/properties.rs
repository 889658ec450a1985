// SPDX-License-Identifier: Apache-2.0

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use deutsch_paths::kernel::{f_unbounded_closed, f_unbounded_sum};
use deutsch_paths::oracle::{count_paths, count_series, enumerate_paths, CountTable, StripSpec, Upper};
use deutsch_paths::{motzkin_v, TruncatedSeries, Var};

fn series(var: Var, order: usize) -> impl Strategy<Value = TruncatedSeries> {
    prop::collection::vec((-20i64..20, 1i64..5), order).prop_map(move |cs| {
        let coeffs = cs
            .into_iter()
            .map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
            .collect();
        TruncatedSeries::new(var, coeffs).unwrap()
    })
}

fn unit(var: Var, order: usize) -> impl Strategy<Value = TruncatedSeries> {
    (series(var, order), 1i64..4).prop_map(move |(s, lead)| {
        let mut c: Vec<BigRational> = s.coeffs().to_vec();
        c[0] = BigRational::from_integer(lead.into());
        TruncatedSeries::new(var, c).unwrap()
    })
}

fn nonunit(var: Var, order: usize) -> impl Strategy<Value = TruncatedSeries> {
    series(var, order).prop_map(move |s| {
        let mut c: Vec<BigRational> = s.coeffs().to_vec();
        c[0] = BigRational::from_integer(0.into());
        TruncatedSeries::new(var, c).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in series(Var::Z, 7), b in series(Var::Z, 7), c in series(Var::Z, 7)) {
        let left = a.add(&b).unwrap().mul(&c).unwrap();
        let right = a.mul(&c).unwrap().add(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
    }

    #[test]
    fn division_round_trips(a in series(Var::V, 8), b in unit(Var::V, 8)) {
        prop_assert_eq!(a.div(&b).unwrap().mul(&b).unwrap(), a);
    }

    #[test]
    fn sqrt_squares_back(s in nonunit(Var::Z, 8)) {
        let a = TruncatedSeries::one(Var::Z, 8).unwrap().add(&s).unwrap();
        let r = a.sqrt().unwrap();
        prop_assert_eq!(r.mul(&r).unwrap(), a);
    }

    #[test]
    fn composition_is_associative(f in series(Var::V, 6), g in nonunit(Var::V, 6), h in nonunit(Var::V, 6)) {
        let left = f.compose(&g).unwrap().compose(&h).unwrap();
        let right = f.compose(&g.compose(&h).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn motzkin_fixed_point(order in 1usize..30) {
        let v = motzkin_v(order).unwrap();
        let one = TruncatedSeries::one(Var::Z, order).unwrap();
        let z = TruncatedSeries::monomial(Var::Z, 1, 1, order).unwrap();
        let rhs = z.mul(&one.add(&v).unwrap().add(&v.mul(&v).unwrap()).unwrap()).unwrap();
        prop_assert_eq!(v, rhs);
    }

    #[test]
    fn dp_matches_enumeration(n in 0usize..=8, t in 0usize..=4, j in 0usize..=4, m in prop::option::of(5usize..8)) {
        let spec = match m {
            Some(m) => StripSpec::strip(m, t, j).unwrap(),
            None => StripSpec::unbounded(t, j),
        };
        let listed = enumerate_paths(n, &spec).unwrap();
        prop_assert_eq!(BigInt::from(listed.len()), BigInt::from(count_paths(n, &spec).unwrap()));
        for p in &listed {
            prop_assert_eq!(p.iter().sum::<i64>(), j as i64 - t as i64);
        }
    }

    #[test]
    fn ceiling_monotone_and_stabilizes(t in 0usize..5, j in 0usize..5, n in 0usize..10) {
        let low = t.max(j) + 1;
        let unbounded = count_paths(n, &StripSpec::unbounded(t, j)).unwrap();
        let mut prev = None;
        for m in low..low + 4 {
            let c = count_paths(n, &StripSpec::strip(m, t, j).unwrap()).unwrap();
            if let Some(p) = prev {
                prop_assert!(p <= c);
            }
            prop_assert!(c <= unbounded);
            prev = Some(c);
        }
        let tall = StripSpec::strip((t + n + 1).max(j + 1), t, j).unwrap();
        prop_assert_eq!(count_paths(n, &tall).unwrap(), unbounded);
    }

    #[test]
    fn level_sums_match_walk_totals(t in 0usize..6, n in 0usize..12) {
        let table = CountTable::build(n, t, Upper::Unbounded).unwrap();
        let by_level: num_bigint::BigUint = (0..=t + n)
            .map(|j| count_paths(n, &StripSpec::unbounded(t, j)).unwrap())
            .sum();
        prop_assert_eq!(by_level, table.row_sum(n));
    }
}

#[test]
fn sum_and_closed_forms_agree() {
    for t in 0..=8 {
        for j in 0..=8 {
            let closed = f_unbounded_closed(t, j, 12).unwrap();
            assert_eq!(f_unbounded_sum(t, j, 12).unwrap(), closed, "t={t} j={j}");
            assert!(closed.to_counts().is_ok(), "t={t} j={j}");
            assert_eq!(closed, count_series(&StripSpec::unbounded(t, j), 12).unwrap());
        }
    }
}
