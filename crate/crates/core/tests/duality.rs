mod common;

use std::sync::OnceLock;

use common::{element, raw_words};
use proptest::prelude::*;
use qhopf::duality::{
    check_actions_commute, check_cospace_law, check_module_laws, check_uq_relations, derive_uq_structure,
    left_invariant_monomials, reconcile_mk, verify_pairing_axioms, PairingContext, PairingRule, Side,
};
use qhopf::galilei::{H, I, MU, N, P, V, X};
use qhopf::hopf::check_hopf_axioms;
use qhopf::ncpoly::monomials_up_to;
use qhopf::parse::{parse_element, parse_tensor};
use qhopf::{CoeffPoly, NcElement, TensorElement};

fn ctx4() -> &'static PairingContext {
    static CTX: OnceLock<PairingContext> = OnceLock::new();
    CTX.get_or_init(|| PairingContext::new(4).unwrap())
}

#[test]
fn derived_coproducts() {
    let c = ctx4();
    let alg = &c.uq.algebra;
    let t = |s: &str| parse_tensor(s, alg, 2).unwrap();
    assert_eq!(c.uq.coproduct_on_gen(P), Some(&t("P@1 + 1@P")));
    assert_eq!(c.uq.coproduct_on_gen(H), Some(&t("H@1 + 1@H")));
    // ΔI = I⊗1 + e^{2aP}⊗I, ΔN = N⊗e^{-2aP} + 1⊗N
    let e2 = qhopf::duality::exp_p(c, 2);
    let em2 = qhopf::duality::exp_p(c, -2);
    let di = TensorElement::outer(&alg.gen(I), &alg.one()).add(&TensorElement::outer(&e2, &alg.gen(I)));
    let dn = TensorElement::outer(&alg.gen(N), &em2).add(&TensorElement::outer(&alg.one(), &alg.gen(N)));
    assert_eq!(c.uq.coproduct_on_gen(I), Some(&di.truncate_a(Some(4))));
    assert_eq!(c.uq.coproduct_on_gen(N), Some(&dn.truncate_a(Some(4))));
    for g in [I, P, H, N] {
        assert!(c.uq.counit_on_gen(g).unwrap().is_zero());
    }
    let s_i = alg.mul(&alg.gen(I), &em2).neg();
    assert_eq!(c.uq.antipode_on_gen(I), Some(&s_i));
}

#[test]
fn derivation_is_stable_across_orders() {
    let c2 = PairingContext::new(2).unwrap();
    for g in [I, P, H, N] {
        let high = ctx4().uq.coproduct_on_gen(g).unwrap().truncate_a(Some(2));
        let low = c2.uq.coproduct_on_gen(g).unwrap();
        assert_eq!(c2.uq.fmt_tensor(low), ctx4().uq.fmt_tensor(&high));
    }
    let again = derive_uq_structure(&c2);
    assert_eq!(again.antipode_on_gen(N), c2.uq.antipode_on_gen(N));
}

#[test]
fn uq_hopf_axioms_degree_three() {
    let r = check_hopf_axioms(&ctx4().uq, 3);
    assert_eq!(r.pass_count(), 34 * 5);
    assert!(r.passed(), "{r}");
}

#[test]
fn pairing_axioms_degree_three() {
    let r = verify_pairing_axioms(ctx4(), 3);
    assert!(r.passed(), "{r}");
    for id in [
        "pairing-product-coproduct",
        "pairing-unit-counit",
        "pairing-counit-unit",
        "pairing-coproduct-product",
        "pairing-antipode",
    ] {
        assert!(r.checks.iter().any(|c| c.identity == id), "missing {id}");
    }
}

#[test]
fn counit_from_pairing() {
    let c = ctx4();
    assert!(c.pair(&c.uq.algebra.gen(I), &c.fq.algebra.one()).is_zero());
    assert!(c.pair(&c.uq.algebra.one(), &c.fq.algebra.one()).is_one());
}

#[test]
fn dropped_factorial_is_caught() {
    let bad = ctx4().with_rule(PairingRule::DropFactorial(N));
    let r = verify_pairing_axioms(&bad, 2);
    assert!(!r.passed());
    let hit = r.failures_of("pairing-product-coproduct").any(|c| c.subject.starts_with("N^2"));
    assert!(hit, "{r}");
}

#[test]
fn relations_reproduced() {
    let r = check_uq_relations(ctx4());
    assert_eq!(r.pass_count(), 6);
    assert!(r.passed(), "{r}");
}

#[test]
fn product_via_pairing_on_generator_pairs() {
    let c = ctx4();
    let alg = &c.uq.algebra;
    for g in 0..4 {
        for h in 0..4 {
            let via = c.product_via_pairing(&alg.gen(g), &alg.gen(h));
            assert_eq!(via, alg.mul(&alg.gen(g), &alg.gen(h)), "{g} {h}");
        }
    }
    assert_eq!(c.product_via_pairing(&alg.one(), &alg.gen(N)), alg.gen(N));
    let nn = c.product_via_pairing(&alg.gen(N), &alg.gen(N));
    assert_eq!(nn, parse_element("N^2", alg).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn product_via_pairing_matches_normalize(u in raw_words(4, 3, 1), w in raw_words(4, 3, 1)) {
        let c = ctx4();
        let alg = &c.uq.algebra;
        let (x, y) = (element(alg, &u), element(alg, &w));
        let keep = |e: &NcElement| {
            let mut out = NcElement::zero();
            for (m, k) in e.terms() {
                if m.degree() <= 3 {
                    out.add_term(m.clone(), k.clone());
                }
            }
            out
        };
        let (x, y) = (keep(&x), keep(&y));
        prop_assert_eq!(c.product_via_pairing(&x, &y), alg.mul(&x, &y));
    }

    #[test]
    fn uq_structure_maps_respect_products(u in raw_words(4, 2, 2), w in raw_words(4, 2, 2)) {
        let uq = &ctx4().uq;
        let (a, b) = (element(&uq.algebra, &u), element(&uq.algebra, &w));
        let ab = uq.algebra.mul(&a, &b);
        let lhs = uq.coproduct(&ab).unwrap();
        let rhs = uq.algebra.tensor_mul(&uq.coproduct(&a).unwrap(), &uq.coproduct(&b).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(
            uq.counit(&ab).unwrap(),
            (&uq.counit(&a).unwrap() * &uq.counit(&b).unwrap()).truncate_a(4)
        );
        prop_assert_eq!(uq.antipode(&ab).unwrap(), uq.algebra.mul(&uq.antipode(&b).unwrap(), &uq.antipode(&a).unwrap()));
    }
}

#[test]
fn uq_antipode_consequences() {
    let uq = &ctx4().uq;
    for m in monomials_up_to(4, 3) {
        let e = NcElement::monomial(m.clone());
        let s = uq.antipode(&e).unwrap();
        assert_eq!(uq.counit(&s).unwrap(), uq.counit(&e).unwrap());
        let lhs = uq.coproduct(&s).unwrap();
        let rhs = uq
            .coproduct(&e)
            .unwrap()
            .twist()
            .map_slot(0, |m| uq.antipode_monomial(m).unwrap())
            .map_slot(1, |m| uq.antipode_monomial(m).unwrap())
            .truncate_a(Some(4));
        assert_eq!(lhs, rhs, "{}", uq.algebra.fmt_monomial(&m));
    }
}

#[test]
fn dual_action_examples() {
    let c = ctx4();
    let u = |g| c.uq.algebra.gen(g);
    let f = |g| c.fq.algebra.gen(g);
    assert_eq!(c.act_dual(&u(I), &f(MU), Side::Left), c.fq.algebra.one());
    assert_eq!(c.act_dual(&u(N), &f(X), Side::Right), f(qhopf::galilei::T));
    for g in [I, P, H, N] {
        let eps = c.uq.counit(&u(g)).unwrap();
        assert_eq!(c.act_dual(&u(g), &c.fq.algebra.one(), Side::Left), c.fq.algebra.scalar(eps));
    }
    let v2 = c.fq.algebra.pow(&f(V), 2);
    assert_eq!(c.act_dual(&u(N), &v2, Side::Left), f(V).scale(&CoeffPoly::from_int(2)));
}

#[test]
fn module_laws_and_commuting_actions() {
    let c = ctx4();
    let r = check_module_laws(c, 3);
    assert!(r.passed(), "{r}");
    let r = check_actions_commute(c, 3);
    assert!(r.passed(), "{r}");
    let r = check_cospace_law(c, 2);
    assert!(r.passed(), "{r}");
}

#[test]
fn only_constants_are_invariant() {
    let inv = left_invariant_monomials(ctx4(), 3);
    assert!(inv.iter().all(|m| m.is_unit()), "{inv:?}");
}

#[test]
fn mk_reconciliation() {
    let (report, rows) = reconcile_mk(ctx4());
    assert!(report.passed());
    let find = |cand: &str, claim: &str| {
        rows.iter()
            .find(|r| r.candidate == cand && r.claim.starts_with(claim))
            .map(|r| r.reproduced)
            .unwrap()
    };
    assert!(!find("M = e^{-aP}", "ΔM"));
    assert!(find("M = e^{-aP} I", "ΔM"));
    assert!(find("M = e^{-aP} I", "S(M)"));
    assert!(find("K = e^{aP} N", "ΔK"));
    assert!(find("K = e^{aP} N, M = e^{-aP} I", "S(K)"));
    assert!(!find("K = e^{aP} N, M = e^{-aP}", "S(K)"));
    let flag = report
        .checks
        .iter()
        .find(|c| c.identity.starts_with("literal M"))
        .unwrap();
    assert!(!flag.passed);
    assert!(flag.note.as_deref().unwrap().contains("INCONSISTENT"));
}
