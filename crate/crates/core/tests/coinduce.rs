use qhopf::coeff::rat;
use qhopf::coinduce::{
    build_coinduced, character_consistency, check_rep_relations, classical_limit, commutator_closed_forms,
    equivariance_check, laurent_report, truncation_coherence, Character, CharacterAction, CoinduceError, VSeries,
};
use qhopf::duality::PairingContext;
use qhopf::galilei::{H, I, N, P};
use qhopf::ncpoly::monomials_up_to;
use qhopf::parse::parse_element;
use qhopf::{CoeffPoly, NcElement, Rational, Var};

fn var(v: Var) -> CoeffPoly {
    CoeffPoly::var(v)
}

fn pw(c: &CoeffPoly, n: i64) -> CoeffPoly {
    c.pow(n as u32)
}

fn q(n: i64, d: i64) -> CoeffPoly {
    CoeffPoly::from_ratio(n, d)
}

// Coefficients written out term by term from the series expansions.
fn oracle_p(n: usize) -> CoeffPoly {
    if n == 0 {
        return var(Var::Beta);
    }
    let n = n as i64;
    let sign = if n % 2 == 1 { 1 } else { -1 };
    let ae = &var(Var::Alpha) * &var(Var::E);
    &(&pw(&var(Var::A), n - 1) * &pw(&ae, n)) * &q(sign, n)
}

fn oracle_h(n: usize) -> CoeffPoly {
    match n {
        0 => var(Var::Gamma),
        1 => (&CoeffPoly::one() - &var(Var::E)).shift_a(-1).scale(&rat(1, 2)),
        _ => {
            let n = n as i64;
            let sign = if n % 2 == 0 { 1 } else { -1 };
            let core = &pw(&var(Var::Alpha), n - 1) * &pw(&var(Var::E), n);
            (&core * &q(sign, 2)).shift_a((n - 2) as i32)
        }
    }
}

#[test]
fn operator_series_match_expansions() {
    for order in [2, 5, 9, 12] {
        let rep = build_coinduced(&Character::symbolic(), order).unwrap();
        for n in 0..order {
            assert_eq!(rep.p.coeff(n), oracle_p(n), "p, v^{n}, order {order}");
            assert_eq!(rep.h.coeff(n), oracle_h(n), "h, v^{n}, order {order}");
        }
        let i1 = &(&var(Var::A) * &pw(&var(Var::Alpha), 2)) * &var(Var::E);
        assert_eq!(rep.i, VSeries::new(vec![var(Var::Alpha), i1], order));
    }
}

#[test]
fn action_examples() {
    let rep = build_coinduced(&Character::symbolic(), 4).unwrap();
    assert_eq!(rep.act(N, &VSeries::v_pow(1, 4)), VSeries::one(3));
    assert_eq!(rep.act(I, &VSeries::one(4)).to_string(), "alpha + a*alpha^2*E*v + O(v^4)");
    assert_eq!(
        rep.act(P, &VSeries::one(4)).to_string(),
        "beta + alpha*E*v - 1/2*a*alpha^2*E^2*v^2 + 1/3*a^2*alpha^3*E^3*v^3 + O(v^4)"
    );
    let hn = rep.act(N, &rep.act(H, &VSeries::one(4))).sub(&rep.act(H, &rep.act(N, &VSeries::one(4))));
    assert_eq!(hn.coeff(0), oracle_h(1));
    assert!(rep.act(I, &rep.act(H, &VSeries::v_pow(2, 4))).sub(&rep.act(H, &rep.act(I, &VSeries::v_pow(2, 4)))).is_zero());
}

#[test]
fn relations_hold_for_orders_two_to_twelve() {
    for order in 2..=12 {
        let rep = build_coinduced(&Character::symbolic(), order).unwrap();
        for r in [
            check_rep_relations(&rep),
            commutator_closed_forms(&rep),
            character_consistency(&rep),
            classical_limit(&rep),
            laurent_report(&rep),
        ] {
            assert!(r.passed(), "order {order}: {r}");
        }
    }
}

#[test]
fn numeric_characters() {
    for (a, b, g) in [(1, 0, 0), (2, 3, -1), (-1, 1, 5), (0, 0, 0)] {
        let chi = Character::numeric(rat(a, 1), rat(b, 1), rat(g, 1));
        let rep = build_coinduced(&chi, 6).unwrap();
        assert!(check_rep_relations(&rep).passed());
        assert!(character_consistency(&rep).passed());
        if b == 0 {
            assert!(rep.h.laurent_positions().is_empty());
        }
    }
}

#[test]
fn truncation_is_coherent() {
    let chi = Character::symbolic();
    for n in 3..=10 {
        for m in 2..n {
            assert!(truncation_coherence(&chi, n, m).unwrap());
        }
    }
}

#[test]
fn order_one_is_rejected() {
    assert_eq!(build_coinduced(&Character::symbolic(), 1).unwrap_err(), CoinduceError::OrderTooSmall(1));
}

#[test]
fn equivariance_examples() {
    let ctx = PairingContext::new(4).unwrap();
    let uq = &ctx.uq.algebra;
    let fq = &ctx.fq.algebra;
    let k_gens: Vec<NcElement> = [I, P, H].iter().map(|&g| uq.gen(g)).collect();
    let probes: Vec<NcElement> = monomials_up_to(4, 2)
        .into_iter()
        .map(NcElement::monomial)
        .chain([uq.one()])
        .collect();
    let zero = CharacterAction(Character::numeric(Rational::from_integer(0.into()), rat(0, 1), rat(0, 1)));
    let constant = vec![(fq.one(), vec![CoeffPoly::one()])];
    let r = equivariance_check(&ctx, &constant, &k_gens, &zero, &probes).unwrap();
    assert_eq!(r.pass_count(), 3 * probes.len());
    assert!(r.passed(), "{r}");

    let empty = equivariance_check(&ctx, &constant, &k_gens, &zero, &[]).unwrap();
    assert!(empty.passed());
    assert_eq!(empty.pass_count(), 0);

    let mu = vec![(parse_element("mu", fq).unwrap(), vec![CoeffPoly::one()])];
    let alpha = CharacterAction(Character::numeric(rat(2, 1), rat(0, 1), rat(0, 1)));
    let r = equivariance_check(&ctx, &mu, &[uq.gen(I)], &alpha, &[uq.one()]).unwrap();
    assert!(!r.passed());

    let bad = vec![(fq.one(), vec![CoeffPoly::one(), CoeffPoly::one()])];
    assert!(matches!(
        equivariance_check(&ctx, &bad, &k_gens, &zero, &probes),
        Err(CoinduceError::DimensionMismatch { expected: 1, got: 2 })
    ));
}
