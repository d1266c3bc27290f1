mod common;

use common::{element, raw_words};
use proptest::prelude::*;
use qhopf::galilei::{fq_algebra, uq_algebra};
use qhopf::parse::{parse_element, parse_scalar, parse_tensor, ParseError};
use qhopf::{CoeffPoly, NcElement, TensorElement, Var};

fn coeff() -> impl Strategy<Value = CoeffPoly> {
    (-9i64..=9, 1i64..=6, 0u32..=2, 0u32..=2, 0u32..=1).prop_map(|(n, d, a, al, e)| {
        let c = &CoeffPoly::from_ratio(n, d) * &CoeffPoly::var(Var::A).pow(a);
        &(&c * &CoeffPoly::var(Var::Alpha).pow(al)) * &CoeffPoly::var(Var::E).pow(e)
    })
}

fn scaled(e: NcElement, c: &CoeffPoly) -> NcElement {
    e.scale(c)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn fq_round_trip(w in raw_words(4, 4, 4), c in coeff()) {
        let alg = fq_algebra();
        let e = scaled(element(&alg, &w), &c);
        let text = alg.fmt(&e);
        prop_assert_eq!(parse_element(&text, &alg).unwrap(), e);
    }

    #[test]
    fn uq_round_trip(w in raw_words(4, 3, 3), c in coeff()) {
        let alg = uq_algebra(3);
        let e = alg.truncate(&scaled(element(&alg, &w), &c));
        let text = alg.fmt(&e);
        prop_assert_eq!(parse_element(&text, &alg).unwrap(), e);
    }

    #[test]
    fn tensor_round_trip(w1 in raw_words(4, 3, 3), w2 in raw_words(4, 3, 3)) {
        let alg = fq_algebra();
        let t = TensorElement::outer(&element(&alg, &w1), &element(&alg, &w2));
        let text = alg.fmt_tensor(&t);
        prop_assert_eq!(parse_tensor(&text, &alg, 2).unwrap(), t);
    }

    #[test]
    fn printing_after_parsing_normalizes(w in raw_words(4, 4, 4)) {
        let alg = fq_algebra();
        let raw: Vec<String> = w
            .iter()
            .map(|(c, k, word)| {
                let mut parts = vec![format!("({c})"), format!("a^{k}")];
                parts.extend(word.iter().map(|&g| alg.generators()[g].clone()));
                parts.join("*")
            })
            .collect();
        let parsed = parse_element(&raw.join(" + "), &alg).unwrap();
        prop_assert_eq!(&parsed, &element(&alg, &w));
        let text = alg.fmt(&parsed);
        prop_assert_eq!(alg.fmt(&parse_element(&text, &alg).unwrap()), text);
    }
}

#[test]
fn examples() {
    let fq = fq_algebra();
    assert_eq!(fq.fmt(&parse_element("v*x", &fq).unwrap()), "-2*a*v + x*v");
    assert_eq!(parse_element("1", &fq).unwrap(), fq.one());
    let uq = uq_algebra(1);
    assert_eq!(uq.fmt(&parse_element("N*P", &uq).unwrap()), "I - 2*a*I*P + P*N");
    assert_eq!(fq.fmt(&parse_element("(x + v)^2 - x^2", &fq).unwrap()), "-2*a*v + 2*x*v + v^2");
    assert_eq!(parse_scalar("beta - beta + 3/6", &fq).unwrap(), CoeffPoly::from_ratio(1, 2));
}

#[test]
fn errors() {
    let fq = fq_algebra();
    let uq = uq_algebra(4);
    assert!(matches!(
        parse_element("P*x", &uq),
        Err(ParseError::UnknownGenerator { ref name, pos: 2, .. }) if name == "x"
    ));
    assert!(matches!(parse_element("mu mu", &fq), Err(ParseError::Syntax { pos: 3, .. })));
    assert!(matches!(parse_element("", &fq), Err(ParseError::Syntax { .. })));
    assert!(matches!(parse_element("x +", &fq), Err(ParseError::Syntax { .. })));
    assert!(matches!(parse_element("x)", &fq), Err(ParseError::Syntax { .. })));
    assert!(matches!(parse_element("x # t", &fq), Err(ParseError::Syntax { pos: 2, .. })));
    assert!(parse_scalar("x", &fq).is_err());
    assert!(parse_tensor("x", &fq, 2).is_err());
    let msg = parse_element("x + H", &fq).unwrap_err().to_string();
    assert!(msg.contains("'H'") && msg.contains("Fq"), "{msg}");
}
