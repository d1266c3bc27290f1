use std::collections::BTreeMap;

use proptest::prelude::*;
use qhopf::finite::{
    check_comodule_induction, check_frobenius, check_integral, check_prop2, check_unitarity, check_unitarity_with,
    class_values, coaction_condition, dualize_action, gi, induce_rep, induced_carrier, int, invariant_functionals,
    invariant_integral, one_dim_characters, ratio, verify_suite, ClassFunction, FiniteError, FiniteGroup, FiniteRep,
    GSpace, Scalar, StarRule,
};

fn s3() -> FiniteGroup {
    FiniteGroup::symmetric3()
}

fn a3(g: &FiniteGroup) -> Vec<usize> {
    let c = g.element_by_label("(123)").unwrap();
    g.generated(&[c])
}

// Induced character from the conjugation formula.
fn induced_character_oracle(g: &FiniteGroup, k: &[usize], chi: &ClassFunction) -> ClassFunction {
    (0..g.order())
        .map(|y| {
            let mut sum = int(0);
            for x in 0..g.order() {
                let c = g.mul(g.mul(x, y), g.inv(x));
                if k.contains(&c) {
                    sum += &chi[&c];
                }
            }
            (y, sum / int(k.len() as i64))
        })
        .collect()
}

fn builtins() -> Vec<FiniteGroup> {
    ["Z4", "Z6", "S3", "D4", "Q8"].iter().map(|n| FiniteGroup::builtin(n).unwrap()).collect()
}

#[test]
fn s3_over_a3_trivial() {
    let g = s3();
    let k = a3(&g);
    let rho = FiniteRep::trivial(&g, &k).unwrap();
    let ind = induce_rep(&g, &k, &rho).unwrap();
    assert_eq!(ind.dim(), 2);
    let expect: Vec<Scalar> = [2, 0, 2].iter().map(|&x| int(x)).collect();
    assert_eq!(class_values(&g, &ind.character()), expect);
    assert_eq!(ind.character(), induced_character_oracle(&g, &k, &rho.character()));
}

#[test]
fn index_one_and_regular() {
    let g = s3();
    let all: Vec<usize> = (0..6).collect();
    let chars = one_dim_characters(&g, &all).unwrap();
    for c in &chars {
        let rho = FiniteRep::one_dimensional(&g, c).unwrap();
        assert_eq!(induce_rep(&g, &all, &rho).unwrap().character(), rho.character());
    }
    let e = vec![g.identity()];
    let ind = induce_rep(&g, &e, &FiniteRep::trivial(&g, &e).unwrap()).unwrap();
    assert_eq!(ind.dim(), 6);
    assert_eq!(ind.character(), FiniteRep::regular(&g).character());
    for (y, v) in ind.character() {
        assert_eq!(v, int(if y == g.identity() { 6 } else { 0 }));
    }
}

#[test]
fn induction_matches_conjugation_formula() {
    for g in builtins() {
        for k in g.subgroups() {
            for chi in one_dim_characters(&g, &k).unwrap() {
                let rho = FiniteRep::one_dimensional(&g, &chi).unwrap();
                let ind = induce_rep(&g, &k, &rho).unwrap();
                assert_eq!(ind.dim() * k.len(), g.order());
                assert_eq!(ind.character(), induced_character_oracle(&g, &k, &chi), "{} over {k:?}", g.name());
            }
        }
    }
}

#[test]
fn frobenius_reciprocity() {
    for name in ["Z4", "S3", "D4"] {
        let r = check_frobenius(&FiniteGroup::builtin(name).unwrap()).unwrap();
        assert!(r.pass_count() > 0);
        assert!(r.passed(), "{r}");
    }
}

#[test]
fn not_a_subgroup() {
    let g = s3();
    let t = g.element_by_label("(12)").unwrap();
    let rho = FiniteRep::trivial(&g, &[g.identity()]).unwrap();
    assert!(matches!(induce_rep(&g, &[g.identity(), t, 3], &rho), Err(FiniteError::NotSubgroup(_))));
}

#[test]
fn integrals() {
    let z4 = FiniteGroup::cyclic(4).unwrap();
    let reg = GSpace::regular(&z4);
    let i = invariant_integral(&reg, &z4).unwrap();
    assert_eq!(i.weights, vec![ratio(1, 4); 4]);
    assert_eq!(i.eval(&vec![int(1); 4]), int(1));
    for g in builtins() {
        for k in g.subgroups() {
            let x = GSpace::cosets(&g, &k).unwrap();
            assert_eq!(invariant_functionals(&x, &g).len(), 1);
            assert!(check_integral(&x, &g).unwrap().passed());
        }
    }
    let two = reg.disjoint_union(&reg);
    assert!(matches!(invariant_integral(&two, &z4), Err(FiniteError::NotTransitive { .. })));
    assert_eq!(invariant_functionals(&two, &z4).len(), 2);
}

#[test]
fn unitarity() {
    let g = s3();
    let x = GSpace::cosets(&g, &a3(&g)).unwrap();
    assert!(check_unitarity(&x, &g).unwrap().passed());
    let reg = GSpace::regular(&g);
    assert!(check_unitarity(&reg, &g).unwrap().passed());
    let ones = vec![int(1); reg.points()];
    for h in 0..g.order() {
        assert_eq!(reg.act_function(h, &ones), ones);
    }
    let mutated = check_unitarity_with(&reg, &g, StarRule::Identity).unwrap();
    assert!(!mutated.passed());
    let q8 = FiniteGroup::quaternion();
    assert!(!check_unitarity_with(&GSpace::regular(&q8), &q8, StarRule::Identity).unwrap().passed());
}

#[test]
fn prop2_examples() {
    let g = s3();
    let k = a3(&g);
    let triv = FiniteRep::trivial(&g, &k).unwrap();
    let c = induced_carrier(&g, &k, &triv).unwrap();
    assert_eq!(c.basis.len(), 2);
    assert!(check_prop2(&g, &k, &triv).unwrap().passed());

    let e = vec![g.identity()];
    let c = induced_carrier(&g, &e, &FiniteRep::trivial(&g, &e).unwrap()).unwrap();
    assert_eq!(c.basis.len(), 6);

    let t = g.element_by_label("(12)").unwrap();
    let k = g.generated(&[t]);
    let sign: ClassFunction = BTreeMap::from([(g.identity(), int(1)), (t, int(-1))]);
    let chi = FiniteRep::one_dimensional(&g, &sign).unwrap();
    let c = induced_carrier(&g, &k, &chi).unwrap();
    assert_eq!(c.basis.len(), 3);
    let act = c.action.expect("invariant");
    assert_eq!(class_values(&g, &act.character()), vec![int(3), int(-1), int(0)]);
    assert!(check_prop2(&g, &k, &chi).unwrap().passed());
}

#[test]
fn comodule_examples() {
    let z4 = FiniteGroup::cyclic(4).unwrap();
    let z2 = z4.generated(&[2]);
    let triv = FiniteRep::trivial(&z4, &z2).unwrap();
    let r = check_comodule_induction(&z4, &z2, &triv).unwrap();
    assert!(r.passed(), "{r}");
    let ones = vec![int(1); 4];
    let (lhs, rhs) = coaction_condition(&z4, &z2, &triv, &ones).unwrap();
    assert_eq!(lhs, rhs);

    let g = s3();
    let k = a3(&g);
    let r = check_comodule_induction(&g, &k, &FiniteRep::trivial(&g, &k).unwrap()).unwrap();
    assert!(r.passed(), "{r}");
}

#[test]
fn dualize() {
    let g = s3();
    let all: Vec<usize> = (0..6).collect();
    let triv = FiniteRep::trivial(&g, &all).unwrap();
    assert_eq!(dualize_action(&g, &triv), triv);

    let z3 = FiniteGroup::cyclic(3).unwrap();
    let reg = FiniteRep::regular(&z3);
    let dual = dualize_action(&z3, &reg);
    for (g, v) in dual.character() {
        assert_eq!(v, reg.character()[&g].conj());
    }
    for g in builtins() {
        let reg = FiniteRep::regular(&g);
        assert_eq!(dualize_action(&g, &dualize_action(&g, &reg)).character(), reg.character());
    }
    let z4 = FiniteGroup::cyclic(4).unwrap();
    let chi: ClassFunction = (0..4).map(|k| (k, qhopf::finite::i_pow(k as i64))).collect();
    let rho = FiniteRep::one_dimensional(&z4, &chi).unwrap();
    assert_eq!(dualize_action(&z4, &rho).character()[&1], gi(0, -1));
}

#[test]
fn table_format() {
    let text = "3\n1 2 3\n2 3 1\n3 1 2\n";
    let g = FiniteGroup::parse_table("c3", text).unwrap();
    assert_eq!(g.order(), 3);
    assert_eq!(g.to_table_text(), text);
    for g in builtins() {
        let back = FiniteGroup::parse_table("copy", &g.to_table_text()).unwrap();
        assert_eq!(back.table(), g.table());
    }
    assert!(matches!(FiniteGroup::parse_table("x", "2\n1 2\n2 2\n"), Err(FiniteError::InvalidTable(_))));
    assert!(matches!(
        FiniteGroup::parse_table("x", "2\n1 2\n2 5\n"),
        Err(FiniteError::Format { line: 3, .. })
    ));
    assert!(matches!(FiniteGroup::parse_table("x", "two\n"), Err(FiniteError::Format { line: 1, .. })));
    assert!(matches!(FiniteGroup::builtin("A5"), Err(FiniteError::UnknownGroup(_))));
}

#[test]
fn full_suite() {
    let r = verify_suite().unwrap();
    assert!(r.passed(), "{r}");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn cyclic_induction_dimension(n in 1usize..=12, pick in 0usize..12, c in 0usize..64) {
        let g = FiniteGroup::cyclic(n).unwrap();
        let subs = g.subgroups();
        let k = &subs[pick % subs.len()];
        let chars = one_dim_characters(&g, k).unwrap();
        let chi = &chars[c % chars.len()];
        let rho = FiniteRep::one_dimensional(&g, chi).unwrap();
        let ind = induce_rep(&g, k, &rho).unwrap();
        prop_assert_eq!(ind.dim() * k.len(), n);
        prop_assert_eq!(ind.character(), induced_character_oracle(&g, k, chi));
        let carrier = induced_carrier(&g, k, &rho).unwrap();
        prop_assert_eq!(carrier.basis.len(), ind.dim());
    }
}
