//! The quantum extended Galilei pair in 1+1 dimensions.
//!
//! `F_q` is generated by `mu < x < t < v` with
//! `[mu, x] = -2a mu`, `[mu, v] = a v^2`, `[x, v] = 2a v`, and `U_q` by
//! `I < P < H < N` with the exponential relations
//! `[I, N] = -a e^{-2aP} I^2`, `[P, N] = -e^{-2aP} I`,
//! `[H, N] = -(1 - e^{-2aP}) / (2a)`.
//!
//! `U_q` structure maps are not entered here; they come from the pairing
//! (see [`crate::duality::derive_uq_structure`]).

use std::collections::BTreeMap;

use crate::coeff::{rat, CoeffPoly, Var};
use crate::hopf::Presentation;
use crate::ncpoly::{Algebra, Correction, ExpSeries, Monomial, NcElement, TensorElement};

pub const MU: usize = 0;
pub const X: usize = 1;
pub const T: usize = 2;
pub const V: usize = 3;

pub const I: usize = 0;
pub const P: usize = 1;
pub const H: usize = 2;
pub const N: usize = 3;

pub const FQ_NAMES: [&str; 4] = ["mu", "x", "t", "v"];
pub const UQ_NAMES: [&str; 4] = ["I", "P", "H", "N"];

/// Grading shared by both algebras: `mu, x, t, v` and `I, P, H, N` weigh
/// `3, 2, 1, 1`. In `F_q` the parameter `a` weighs `+2`, in `U_q` `-2`.
pub const WEIGHTS: [i32; 4] = [3, 2, 1, 1];
pub const A_WEIGHT: i32 = 2;

fn names(list: [&str; 4]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

fn a() -> CoeffPoly {
    CoeffPoly::var(Var::A)
}

fn mono(exps: [u32; 4]) -> Monomial {
    Monomial::new(exps.to_vec())
}

fn elem(terms: &[(CoeffPoly, [u32; 4])]) -> NcElement {
    let mut e = NcElement::zero();
    for (c, m) in terms {
        e.add_term(mono(*m), c.clone());
    }
    e
}

fn tensor(terms: &[(CoeffPoly, [u32; 4], [u32; 4])]) -> TensorElement {
    let mut t = TensorElement::zero(2);
    for (c, l, r) in terms {
        t.add_term(vec![mono(*l), mono(*r)], c.clone());
    }
    t
}

/// Relations of `F_q` (exact, no truncation).
pub fn fq_algebra() -> Algebra {
    let mut rules = BTreeMap::new();
    // x·mu = mu·x + 2a mu
    rules.insert(
        (X, MU),
        Correction::poly(elem(&[(a().scale(&rat(2, 1)), [1, 0, 0, 0])])),
    );
    // v·mu = mu·v - a v^2
    rules.insert((V, MU), Correction::poly(elem(&[(-a(), [0, 0, 0, 2])])));
    // v·x = x·v - 2a v
    rules.insert(
        (V, X),
        Correction::poly(elem(&[(a().scale(&rat(-2, 1)), [0, 0, 0, 1])])),
    );
    Algebra::new("Fq", names(FQ_NAMES), rules, None).expect("F_q relations are finite")
}

/// `F_q` with its coproduct, counit and antipode.
pub fn fq() -> Presentation {
    let mut p = Presentation::new(fq_algebra());
    let one = CoeffPoly::one;
    let half = CoeffPoly::from_ratio(1, 2);
    let u = [0, 0, 0, 0];
    p.set_coproduct(
        MU,
        tensor(&[
            (one(), [1, 0, 0, 0], u),
            (one(), u, [1, 0, 0, 0]),
            (one(), [0, 0, 0, 1], [0, 1, 0, 0]),
            (half.clone(), [0, 0, 0, 2], [0, 0, 1, 0]),
        ]),
    );
    p.set_coproduct(
        X,
        tensor(&[
            (one(), [0, 1, 0, 0], u),
            (one(), u, [0, 1, 0, 0]),
            (one(), [0, 0, 0, 1], [0, 0, 1, 0]),
        ]),
    );
    p.set_coproduct(T, tensor(&[(one(), [0, 0, 1, 0], u), (one(), u, [0, 0, 1, 0])]));
    p.set_coproduct(V, tensor(&[(one(), [0, 0, 0, 1], u), (one(), u, [0, 0, 0, 1])]));
    for g in [MU, X, T, V] {
        p.set_counit(g, CoeffPoly::zero());
    }
    // S(mu) = -mu + v·x - 1/2 v^2 t, with v·x = x·v - 2a v
    let s_mu = elem(&[
        (CoeffPoly::from_int(-1), [1, 0, 0, 0]),
        (one(), [0, 1, 0, 1]),
        (a().scale(&rat(-2, 1)), [0, 0, 0, 1]),
        (half.scale(&rat(-1, 1)), [0, 0, 1, 2]),
    ]);
    p.set_antipode(MU, s_mu);
    p.set_antipode(
        X,
        elem(&[(CoeffPoly::from_int(-1), [0, 1, 0, 0]), (one(), [0, 0, 1, 1])]),
    );
    p.set_antipode(T, elem(&[(CoeffPoly::from_int(-1), [0, 0, 1, 0])]));
    p.set_antipode(V, elem(&[(CoeffPoly::from_int(-1), [0, 0, 0, 1])]));
    p
}

/// The `e^{-2aP}` series rules of `U_q`.
pub fn uq_rules() -> BTreeMap<(usize, usize), Correction> {
    let mut rules = BTreeMap::new();
    // N·I = I·N + a e^{-2aP} I^2
    rules.insert(
        (N, I),
        Correction {
            poly: NcElement::zero(),
            series: vec![ExpSeries {
                scale: rat(1, 1),
                rate: rat(-2, 1),
                a_shift: 1,
                start: 0,
                prefix: mono([2, 0, 0, 0]),
                generator: P,
            }],
        },
    );
    // N·P = P·N + e^{-2aP} I
    rules.insert(
        (N, P),
        Correction {
            poly: NcElement::zero(),
            series: vec![ExpSeries {
                scale: rat(1, 1),
                rate: rat(-2, 1),
                a_shift: 0,
                start: 0,
                prefix: mono([1, 0, 0, 0]),
                generator: P,
            }],
        },
    );
    // N·H = H·N + (1 - e^{-2aP}) / (2a)
    rules.insert(
        (N, H),
        Correction {
            poly: NcElement::zero(),
            series: vec![ExpSeries {
                scale: rat(-1, 2),
                rate: rat(-2, 1),
                a_shift: -1,
                start: 1,
                prefix: mono([0, 0, 0, 0]),
                generator: P,
            }],
        },
    );
    rules
}

/// `U_q` relations truncated at `a^order` (inclusive).
pub fn uq_algebra(order: u32) -> Algebra {
    Algebra::new("Uq", names(UQ_NAMES), uq_rules(), Some(order)).expect("finite truncation")
}

/// `U_q` without structure maps.
pub fn uq_bare(order: u32) -> Presentation {
    Presentation::new(uq_algebra(order))
}

mod operators;

pub use operators::{
    check_classical_limit, check_relations_as_operators, differential_test,
    partial_derivative_conventions, BarReading, Composition, DivisibilityError, GalileiOperators,
};

/// [`fq`] as a presentation document.
pub const FQ_DOCUMENT: &str = include_str!("../../presentations/fq.txt");
/// [`uq_bare`] at order 4 as a presentation document; structure maps are derived.
pub const UQ_DOCUMENT: &str = include_str!("../../presentations/uq.txt");
