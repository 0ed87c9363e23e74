use proptest::prelude::*;
use rootloci::arith::{rat, solve_in_span, RatMatrix, Rational};
use rootloci::poly::{c1, c2, BiForm, SymForm};

fn form(max_degree: usize) -> impl Strategy<Value = BiForm> {
    (0..=max_degree).prop_flat_map(|m| {
        prop::collection::vec(-20i64..=20, m + 1).prop_map(|c| BiForm::from_ints(&c))
    })
}

fn sym_form(max_degree: usize) -> impl Strategy<Value = SymForm> {
    (0..=max_degree).prop_flat_map(|m| {
        prop::collection::vec(-20i64..=20, m / 2 + 1).prop_map(move |c| SymForm::from_ints(m, &c))
    })
}

/// Nonzero product of up to four linear factors with small coefficients.
fn linear_product() -> impl Strategy<Value = BiForm> {
    prop::collection::vec((-3i64..=3, 1i64..=3), 0..=4).prop_map(|fs| {
        fs.into_iter()
            .map(|(a, b)| BiForm::linear_int(a, b))
            .product()
    })
}

fn matrix() -> impl Strategy<Value = RatMatrix> {
    (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(-4i64..=4, c), r).prop_map(|rows| {
            RatMatrix::from_rows(
                rows.into_iter()
                    .map(|row| row.into_iter().map(rat).collect())
                    .collect(),
            )
            .unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn leibniz_rule(a in form(8), b in form(8)) {
        let lhs = (&a * &b).divided_difference();
        let rhs = &(&b.swap() * &a.divided_difference()) + &(&a * &b.divided_difference());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn divided_difference_is_symmetric(f in form(9)) {
        prop_assert!(f.divided_difference().is_symmetric());
    }

    #[test]
    fn divided_difference_recovers_antisymmetric_part(f in form(9)) {
        let lhs = &BiForm::linear_int(1, -1) * &f.divided_difference();
        prop_assert_eq!(lhs, &f - &f.swap());
    }

    #[test]
    fn divided_difference_vanishes_on_symmetric(f in form(9)) {
        let s = &f + &f.swap();
        prop_assert!(s.divided_difference().is_zero());
        prop_assert_eq!(f.divided_difference().is_zero(), f.is_symmetric());
    }

    #[test]
    fn sym_round_trip(s in sym_form(10)) {
        prop_assert_eq!(s.to_biform().to_sym().unwrap(), s);
    }

    #[test]
    fn symmetric_forms_convert(f in form(9)) {
        let s = &f + &f.swap();
        prop_assert_eq!(s.to_sym().unwrap().to_biform(), s);
    }

    #[test]
    fn sym_product_matches_roots(a in sym_form(6), b in sym_form(6)) {
        prop_assert_eq!(a.mul(&b).to_biform(), &a.to_biform() * &b.to_biform());
    }

    #[test]
    fn sym_evaluation_matches_roots(s in sym_form(8), u0 in -5i64..=5, v0 in -5i64..=5) {
        let (u, v) = (rat(u0), rat(v0));
        let via_roots = s.to_biform().evaluate(&u, &v);
        prop_assert_eq!(s.evaluate(&(&u + &v), &(&u * &v)), via_roots);
    }

    #[test]
    fn exact_division_inverts_product(a in form(6), b in linear_product()) {
        prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
    }

    #[test]
    fn gcd_divides_and_keeps_common_factor(
        a in linear_product(),
        b in linear_product(),
        c in linear_product(),
    ) {
        let x = &a * &c;
        let y = &b * &c;
        let g = x.gcd_homogeneous(&y);
        prop_assert!(x.exact_div(&g).is_ok());
        prop_assert!(y.exact_div(&g).is_ok());
        prop_assert!(g.exact_div(&c).is_ok());
    }

    #[test]
    fn rank_of_transpose(m in matrix()) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn nullspace_is_kernel(m in matrix()) {
        let kernel = m.nullspace();
        prop_assert_eq!(m.rank() + kernel.len(), m.cols());
        for x in kernel {
            prop_assert!(m.mul_vec(&x).unwrap().iter().all(|c| *c == Rational::from_integer(0.into())));
        }
    }

    #[test]
    fn solve_in_span_reproduces_target(m in matrix(), seed in prop::collection::vec(-3i64..=3, 5)) {
        let x: Vec<Rational> = seed.into_iter().take(m.cols()).map(rat).collect();
        prop_assume!(x.len() == m.cols());
        let target = m.mul_vec(&x).unwrap();
        let sol = solve_in_span(&target, &m).unwrap().expect("target lies in the span");
        prop_assert_eq!(m.mul_vec(&sol).unwrap(), target);
    }
}

#[test]
fn chern_root_generators() {
    assert_eq!(c1(), BiForm::from_ints(&[1, 1]));
    assert_eq!(c2(), BiForm::from_ints(&[0, 1, 0]));
}

#[test]
fn off_span_target_has_no_solution() {
    let m = RatMatrix::from_rows(vec![vec![rat(1)], vec![rat(1)]]).unwrap();
    assert_eq!(solve_in_span(&[rat(1), rat(2)], &m).unwrap(), None);
}
