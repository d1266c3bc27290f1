use std::sync::OnceLock;

use qhopf::duality::{PairingContext, Side};
use qhopf::galilei::{
    check_classical_limit, check_relations_as_operators, differential_test, fq, fq_algebra,
    partial_derivative_conventions, uq_bare, BarReading, Composition, GalileiOperators, FQ_DOCUMENT, H, I, N, P,
    UQ_DOCUMENT,
};
use qhopf::hopf::{from_document, to_document};
use qhopf::ncpoly::monomials_up_to;
use qhopf::parse::parse_element;
use qhopf::NcElement;

fn ctx() -> &'static PairingContext {
    static CTX: OnceLock<PairingContext> = OnceLock::new();
    CTX.get_or_init(|| PairingContext::new(4).unwrap())
}

fn el(s: &str) -> NcElement {
    parse_element(s, &fq_algebra()).unwrap()
}

#[test]
fn differential_test_degree_three() {
    let r = differential_test(ctx(), &GalileiOperators::default(), 3);
    assert_eq!(monomials_up_to(4, 3).len(), 34);
    assert_eq!(r.pass_count(), 34 * 4 * 2);
    assert!(r.passed(), "{r}");
}

#[test]
fn other_bar_readings_fail() {
    for reading in [BarReading::LeftMultiply, BarReading::RightMultiply] {
        let r = differential_test(ctx(), &GalileiOperators::new(reading, Composition::DerivativeFirst), 3);
        assert!(!r.passed(), "{} should not reproduce the dual actions", reading.label());
    }
}

#[test]
fn both_compositions_agree() {
    for comp in Composition::ALL {
        let r = differential_test(ctx(), &GalileiOperators::new(BarReading::Commuting, comp), 3);
        assert!(r.passed(), "{r}");
    }
}

#[test]
fn relations_hold_as_operators() {
    let r = check_relations_as_operators(ctx(), &GalileiOperators::default(), 3);
    assert!(r.pass_count() > 0);
    assert!(r.passed(), "{r}");
}

#[test]
fn classical_limit() {
    let r = check_classical_limit(&GalileiOperators::default(), 3);
    assert!(r.passed(), "{r}");
}

#[test]
fn derivative_conventions() {
    let r = partial_derivative_conventions(ctx(), 3);
    assert!(r.passed(), "{r}");
}

#[test]
fn closed_form_examples() {
    let o = GalileiOperators::default();
    assert_eq!(o.act_left(N, &el("v^2")).unwrap(), el("2*v"));
    assert!(o.act_left(I, &el("1")).unwrap().is_zero());
    assert_eq!(o.act_left(P, &el("mu")).unwrap(), el("v"));
    assert_eq!(o.act_right(&el("mu"), I).unwrap(), el("1"));
    assert!(o.act_right(&el("1"), N).unwrap().is_zero());
    assert_eq!(o.act_right(&el("x"), N).unwrap(), el("t"));
    assert_eq!(o.act(P, &el("mu"), Side::Left).unwrap(), ctx().act_dual(&ctx().uq.algebra.gen(P), &el("mu"), Side::Left));
    assert_eq!(o.act(N, &el("x"), Side::Right).unwrap(), ctx().act_dual(&ctx().uq.algebra.gen(N), &el("x"), Side::Right));
}

#[test]
fn h_action_cancels_its_prefactor_beyond_degree_three() {
    let o = GalileiOperators::default();
    for m in monomials_up_to(4, 5) {
        let f = NcElement::monomial(m);
        o.act_left(H, &f).unwrap();
        o.act_right(&f, H).unwrap();
        o.act_right(&f, N).unwrap();
    }
}

#[test]
fn embedded_documents() {
    assert_eq!(FQ_DOCUMENT.trim_end(), to_document(&fq()).trim_end());
    assert_eq!(UQ_DOCUMENT.trim_end(), to_document(&uq_bare(4)).trim_end());
    let back = from_document(FQ_DOCUMENT).unwrap();
    assert_eq!(to_document(&back), to_document(&fq()));
}
