use proptest::prelude::*;
use qhopf::coeff::{CoeffPoly, Var};

fn poly() -> impl Strategy<Value = CoeffPoly> {
    prop::collection::vec((-4i64..=4, 1i64..=3, prop::array::uniform5(0i32..=2)), 0..4).prop_map(|terms| {
        let mut p = CoeffPoly::zero();
        for (n, d, mut e) in terms {
            e[0] -= 1;
            p += &CoeffPoly::monomial(qhopf::coeff::rat(n, d), e);
        }
        p
    })
}

proptest! {
    #[test]
    fn ring_laws(x in poly(), y in poly(), z in poly()) {
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert!((&x - &x).is_zero());
        prop_assert_eq!(&x * &CoeffPoly::one(), x.clone());
        prop_assert!((&x * &CoeffPoly::zero()).is_zero());
    }

    #[test]
    fn truncation_is_a_ring_map_below_order(x in poly(), y in poly()) {
        // on polynomials with a-degree ≥ -1, truncating early loses nothing at order k
        let k = 2;
        let lhs = (&x * &y).truncate_a(k);
        let rhs = (&x.truncate_a(k + 1) * &y.truncate_a(k + 1)).truncate_a(k);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn substitution_is_a_ring_map(x in poly(), y in poly()) {
        let s = &CoeffPoly::var(Var::Alpha) + &CoeffPoly::from_int(2);
        prop_assert_eq!(
            (&x * &y).substitute(Var::Beta, &s),
            &x.substitute(Var::Beta, &s) * &y.substitute(Var::Beta, &s)
        );
    }
}

#[test]
fn display_forms() {
    let p = &(&CoeffPoly::a_pow(-1) - &CoeffPoly::from_ratio(1, 2)) * &CoeffPoly::var(Var::E);
    assert_eq!(p.to_string(), "a^-1*E - 1/2*E");
    assert_eq!(CoeffPoly::zero().to_string(), "0");
    assert!(p.div_a_exact().is_none());
    assert_eq!(CoeffPoly::a_pow(3).div_a_exact(), Some(CoeffPoly::a_pow(2)));
}
