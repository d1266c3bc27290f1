//! Closed-form regular actions of `U_q` on `F_q` as shift/derivative operators.
//!
//! Left:
//! `I ≻ = (1 + X) ∂μ`, `P ≻ = ∂x + (1/a) ln(1 + X)`,
//! `H ≻ = ∂t + (1/2a) v̄ (1 - T (1 + X)^{-1})`, `N ≻ = ∂v`,
//! with `T = e^{-2a ∂x}` and `X = a v̄ ∂μ T`.
//!
//! Right:
//! `≺ I = ∂μ`, `≺ P = ∂x`, `≺ H = ∂t`,
//! `≺ N = ∂v + a μ̄ T ∂μ² + x̄ T ∂μ + t̄ (1 - T)/(2a)`.

use thiserror::Error;

use crate::coeff::{binomial, CoeffPoly, Rational, Var};
use crate::duality::{uq_relations, PairingContext, Side};
use crate::ncpoly::{monomials_up_to, Algebra, Monomial, NcElement};
use crate::report::Report;

use super::{fq_algebra, H, I, MU, N, P, T, V, X};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{operator}: 1/(2a) prefactor does not cancel on {element}")]
pub struct DivisibilityError {
    pub operator: String,
    pub element: String,
}

/// How a barred coordinate `μ̄, x̄, t̄, v̄` acts on a PBW monomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BarReading {
    /// Raise the exponent of the coordinate in the normal form.
    Commuting,
    /// Multiply on the left in `F_q`, then normal-order.
    LeftMultiply,
    /// Multiply on the right in `F_q`, then normal-order.
    RightMultiply,
}

impl BarReading {
    pub const ALL: [BarReading; 3] = [
        BarReading::Commuting,
        BarReading::LeftMultiply,
        BarReading::RightMultiply,
    ];

    pub fn label(self) -> &'static str {
        match self {
            BarReading::Commuting => "exponent shift",
            BarReading::LeftMultiply => "left multiplication",
            BarReading::RightMultiply => "right multiplication",
        }
    }
}

/// Order of the two factors in `I ≻ = (1 + X) ∂μ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Composition {
    /// `(1 + X)(∂μ f)`
    DerivativeFirst,
    /// `∂μ((1 + X) f)`
    DerivativeLast,
}

impl Composition {
    pub const ALL: [Composition; 2] = [Composition::DerivativeFirst, Composition::DerivativeLast];

    pub fn label(self) -> &'static str {
        match self {
            Composition::DerivativeFirst => "derivative first",
            Composition::DerivativeLast => "derivative last",
        }
    }
}

/// Operator catalog on `F_q`.
#[derive(Clone, Debug)]
pub struct GalileiOperators {
    fq: Algebra,
    pub reading: BarReading,
    pub composition: Composition,
}

impl Default for GalileiOperators {
    fn default() -> Self {
        GalileiOperators::new(BarReading::Commuting, Composition::DerivativeFirst)
    }
}

fn map_monomials(f: &NcElement, mut op: impl FnMut(&Monomial) -> NcElement) -> NcElement {
    let mut out = NcElement::zero();
    for (m, c) in f.terms() {
        out.add_assign_scaled(&op(m), c);
    }
    out
}

impl GalileiOperators {
    pub fn new(reading: BarReading, composition: Composition) -> Self {
        GalileiOperators {
            fq: fq_algebra(),
            reading,
            composition,
        }
    }

    pub fn algebra(&self) -> &Algebra {
        &self.fq
    }

    /// Formal `∂/∂g` on PBW exponents.
    pub fn partial(&self, f: &NcElement, g: usize) -> NcElement {
        map_monomials(f, |m| {
            let e = m.exp(g);
            if e == 0 {
                NcElement::zero()
            } else {
                NcElement::term(CoeffPoly::from_int(e as i64), m.with_exp(g, e - 1))
            }
        })
    }

    /// `ḡ`, according to [`BarReading`].
    pub fn bar(&self, f: &NcElement, g: usize) -> NcElement {
        match self.reading {
            BarReading::Commuting => map_monomials(f, |m| NcElement::monomial(m.with_exp(g, m.exp(g) + 1))),
            BarReading::LeftMultiply => self.fq.mul(&self.fq.gen(g), f),
            BarReading::RightMultiply => self.fq.mul(f, &self.fq.gen(g)),
        }
    }

    /// `e^{-2a ∂x}`: `x^q ↦ (x - 2a)^q`, expanded exactly.
    pub fn shift(&self, f: &NcElement) -> NcElement {
        map_monomials(f, |m| {
            let q = m.exp(X);
            let mut out = NcElement::zero();
            for k in 0..=q {
                let c = CoeffPoly::from_int(-2).pow(q - k).shift_a((q - k) as i32);
                out.add_term(m.with_exp(X, k), c.scale(&binomial(q, k)));
            }
            out
        })
    }

    /// `X = a v̄ ∂μ T`.
    fn x_op(&self, f: &NcElement) -> NcElement {
        let inner = self.partial(&self.shift(f), MU);
        self.bar(&inner, V).scale(&CoeffPoly::var(Var::A))
    }

    /// `Σ_{n≥1} c_n Xⁿ f`; stops once `Xⁿ f` vanishes (X lowers the μ-degree).
    fn x_series(&self, f: &NcElement, coeff: impl Fn(u32) -> Rational) -> NcElement {
        let mut out = NcElement::zero();
        let mut cur = f.clone();
        let mut n = 0;
        loop {
            n += 1;
            cur = self.x_op(&cur);
            if cur.is_zero() {
                return out;
            }
            out.add_assign_scaled(&cur, &CoeffPoly::constant(coeff(n)));
        }
    }

    fn div_2a(&self, f: &NcElement, operator: &str) -> Result<NcElement, DivisibilityError> {
        let mut out = NcElement::zero();
        for (m, c) in f.terms() {
            let d = c.div_a_exact().ok_or_else(|| DivisibilityError {
                operator: operator.to_string(),
                element: self.fq.fmt(f),
            })?;
            out.add_term(m.clone(), d.scale(&Rational::new(1.into(), 2.into())));
        }
        Ok(out)
    }

    /// `g ≻ f` for a generator `g` of `U_q`.
    pub fn act_left(&self, g: usize, f: &NcElement) -> Result<NcElement, DivisibilityError> {
        Ok(match g {
            I => match self.composition {
                Composition::DerivativeFirst => {
                    let d = self.partial(f, MU);
                    d.add(&self.x_op(&d))
                }
                Composition::DerivativeLast => self.partial(&f.add(&self.x_op(f)), MU),
            },
            P => {
                // (1/a) ln(1 + X) = Σ (-1)^{n+1} Xⁿ / (n a)
                let log = self.x_series(f, |n| {
                    let s = if n % 2 == 1 { 1 } else { -1 };
                    Rational::new(s.into(), n.into())
                });
                let mut q = NcElement::zero();
                for (m, c) in log.terms() {
                    let d = c.div_a_exact().ok_or_else(|| DivisibilityError {
                        operator: "P≻".into(),
                        element: self.fq.fmt(f),
                    })?;
                    q.add_term(m.clone(), d);
                }
                self.partial(f, X).add(&q)
            }
            H => {
                // (1 + X)^{-1} f = Σ (-X)ⁿ f
                let inv = f.add(&self.x_series(f, |n| {
                    Rational::from_integer(if n % 2 == 0 { 1 } else { -1 }.into())
                }));
                let inner = f.sub(&self.shift(&inv));
                let inner = self.div_2a(&inner, "H≻")?;
                self.partial(f, T).add(&self.bar(&inner, V))
            }
            N => self.partial(f, V),
            _ => panic!("generator index {g} out of range"),
        })
    }

    /// `f ≺ g` for a generator `g` of `U_q`.
    pub fn act_right(&self, f: &NcElement, g: usize) -> Result<NcElement, DivisibilityError> {
        Ok(match g {
            I => self.partial(f, MU),
            P => self.partial(f, X),
            H => self.partial(f, T),
            N => {
                let a = CoeffPoly::var(Var::A);
                let d1 = self.partial(f, MU);
                let d2 = self.partial(&d1, MU);
                let t1 = self.bar(&self.shift(&d2), MU).scale(&a);
                let t2 = self.bar(&self.shift(&d1), X);
                let diff = self.div_2a(&f.sub(&self.shift(f)), "≺N")?;
                let t3 = self.bar(&diff, T);
                self.partial(f, V).add(&t1).add(&t2).add(&t3)
            }
            _ => panic!("generator index {g} out of range"),
        })
    }

    /// `u ≻ f` for a `U_q` element, composing generator actions along each word.
    pub fn act_left_element(&self, u: &NcElement, f: &NcElement) -> Result<NcElement, DivisibilityError> {
        let mut out = NcElement::zero();
        for (m, c) in u.terms() {
            let mut cur = f.clone();
            for g in m.word().into_iter().rev() {
                cur = self.act_left(g, &cur)?;
            }
            out.add_assign_scaled(&cur, c);
        }
        Ok(out)
    }

    /// `f ≺ u` for a `U_q` element.
    pub fn act_right_element(&self, f: &NcElement, u: &NcElement) -> Result<NcElement, DivisibilityError> {
        let mut out = NcElement::zero();
        for (m, c) in u.terms() {
            let mut cur = f.clone();
            for g in m.word() {
                cur = self.act_right(&cur, g)?;
            }
            out.add_assign_scaled(&cur, c);
        }
        Ok(out)
    }

    pub fn act(&self, g: usize, f: &NcElement, side: Side) -> Result<NcElement, DivisibilityError> {
        match side {
            Side::Left => self.act_left(g, f),
            Side::Right => self.act_right(f, g),
        }
    }

    /// The undeformed operators, built from exponent shifts only.
    fn classical(&self, g: usize, f: &NcElement, side: Side) -> NcElement {
        let c = GalileiOperators::new(BarReading::Commuting, self.composition);
        let d = |f: &NcElement, g| c.partial(f, g);
        let b = |f: &NcElement, g| c.bar(f, g);
        let half = CoeffPoly::from_ratio(1, 2);
        match (side, g) {
            (Side::Left, P) => d(f, X).add(&b(&d(f, MU), V)),
            (Side::Left, H) => d(f, T)
                .add(&b(&d(f, X), V))
                .add(&b(&b(&d(f, MU), V), V).scale(&half)),
            (Side::Right, N) => d(f, V).add(&b(&d(f, MU), X)).add(&b(&d(f, X), T)),
            (_, I) => d(f, MU),
            (Side::Right, P) => d(f, X),
            (Side::Right, H) => d(f, T),
            (Side::Left, N) => d(f, V),
            _ => panic!("generator index {g} out of range"),
        }
    }
}

fn gen_name(g: usize) -> &'static str {
    super::UQ_NAMES[g]
}

fn side_label(g: usize, f: &str, side: Side) -> String {
    match side {
        Side::Left => format!("{} ≻ {f}", gen_name(g)),
        Side::Right => format!("{f} ≺ {}", gen_name(g)),
    }
}

/// Closed-form operators against the duality-defined actions, for every
/// generator, both sides and every `F_q` monomial of degree `1..=max_degree`.
pub fn differential_test(ctx: &PairingContext, ops: &GalileiOperators, max_degree: u32) -> Report {
    let mut report = Report::new(format!(
        "closed-form actions vs duality, degree ≤ {max_degree} (bars: {}, I≻: {})",
        ops.reading.label(),
        ops.composition.label()
    ));
    let fq = &ctx.fq.algebra;
    for side in [Side::Left, Side::Right] {
        for g in [I, P, H, N] {
            let h = ctx.uq.algebra.gen(g);
            for m in monomials_up_to(4, max_degree) {
                let f = NcElement::monomial(m.clone());
                let subject = side_label(g, &fq.fmt_monomial(&m), side);
                let dual = ctx.act_dual(&h, &f, side);
                match ops.act(g, &f, side) {
                    Ok(closed) => {
                        report.check_eq("closed = dual", subject, &closed, &dual, |e| fq.fmt(e));
                    }
                    Err(e) => {
                        report.assert("closed = dual", subject, false, Some(e.to_string()));
                    }
                }
            }
        }
    }
    report
}

/// The `U_q` relations as identities between composed closed-form operators,
/// on `F_q` monomials of degree `1..=max_degree`, mod `a^(order+1)`.
pub fn check_relations_as_operators(ctx: &PairingContext, ops: &GalileiOperators, max_degree: u32) -> Report {
    let mut report = Report::new(format!(
        "U_q relations as closed-form operators, degree ≤ {max_degree}"
    ));
    let fq = &ctx.fq.algebra;
    let alg = &ctx.uq.algebra;
    for rel in uq_relations(ctx) {
        let (x, y) = (alg.gen(rel.left), alg.gen(rel.right));
        let k = Some(rel.valid_order);
        for side in [Side::Left, Side::Right] {
            for m in monomials_up_to(4, max_degree) {
                let f = NcElement::monomial(m.clone());
                let res = (|| -> Result<(NcElement, NcElement), DivisibilityError> {
                    let (xy, yx, r) = match side {
                        Side::Left => (
                            ops.act_left_element(&x, &ops.act_left_element(&y, &f)?)?,
                            ops.act_left_element(&y, &ops.act_left_element(&x, &f)?)?,
                            ops.act_left_element(&rel.rhs, &f)?,
                        ),
                        Side::Right => (
                            ops.act_right_element(&ops.act_right_element(&f, &x)?, &y)?,
                            ops.act_right_element(&ops.act_right_element(&f, &y)?, &x)?,
                            ops.act_right_element(&f, &rel.rhs)?,
                        ),
                    };
                    Ok((xy.sub(&yx).truncate_a(k), r.truncate_a(k)))
                })();
                let side_name = match side {
                    Side::Left => "left",
                    Side::Right => "right",
                };
                let subject = format!("{side_name}, f = {}", fq.fmt_monomial(&m));
                match res {
                    Ok((l, r)) => {
                        report.check_eq(&rel.name, subject, &l, &r, |e| fq.fmt(e));
                    }
                    Err(e) => {
                        report.assert(&rel.name, subject, false, Some(e.to_string()));
                    }
                }
            }
        }
    }
    report
}

/// Setting `a = 0` in every closed-form output recovers the undeformed
/// Galilei actions.
pub fn check_classical_limit(ops: &GalileiOperators, max_degree: u32) -> Report {
    let mut report = Report::new(format!("a → 0 limit of the closed forms, degree ≤ {max_degree}"));
    let fq = ops.algebra();
    for side in [Side::Left, Side::Right] {
        for g in [I, P, H, N] {
            for m in monomials_up_to(4, max_degree) {
                let f = NcElement::monomial(m.clone());
                let subject = side_label(g, &fq.fmt_monomial(&m), side);
                match ops.act(g, &f, side) {
                    Ok(e) => {
                        let lim = e.map_coeffs(|c| c.a_coefficient(0));
                        let classical = ops.classical(g, &f, side);
                        report.check_eq("a → 0 limit", subject, &lim, &classical, |e| fq.fmt(e));
                    }
                    Err(e) => {
                        report.assert("a → 0 limit", subject, false, Some(e.to_string()));
                    }
                }
            }
        }
    }
    report
}

/// Fixtures for the formal derivatives and the shift, and their agreement with
/// the duality actions that they are meant to reproduce.
pub fn partial_derivative_conventions(ctx: &PairingContext, max_degree: u32) -> Report {
    let mut report = Report::new("formal derivative conventions");
    let ops = GalileiOperators::default();
    let fq = ops.algebra();
    let m = |e: [u32; 4]| NcElement::monomial(Monomial::new(e.to_vec()));
    let fmt = |e: &NcElement| fq.fmt(e);

    report.check_eq(
        "∂x(μx²) = 2μx",
        "fixture",
        &ops.partial(&m([1, 2, 0, 0]), X),
        &m([1, 1, 0, 0]).scale(&CoeffPoly::from_int(2)),
        fmt,
    );
    report.check_eq("∂μ(x) = 0", "fixture", &ops.partial(&m([0, 1, 0, 0]), MU), &NcElement::zero(), fmt);
    let a = CoeffPoly::var(Var::A);
    let expect = m([0, 2, 0, 0])
        .sub(&m([0, 1, 0, 0]).scale(&a.scale(&Rational::from_integer(4.into()))))
        .add(&NcElement::scalar(4, a.pow(2).scale(&Rational::from_integer(4.into()))));
    report.check_eq("e^{-2a∂x}(x²) = x² - 4ax + 4a²", "fixture", &ops.shift(&m([0, 2, 0, 0])), &expect, fmt);

    // Leibniz rule and multiplicativity of the shift for the commuting product of exponents.
    let basis: Vec<Monomial> = monomials_up_to(4, 2).into_iter().collect();
    let mul_c = |x: &NcElement, y: &NcElement| {
        let mut out = NcElement::zero();
        for (p, c) in x.terms() {
            for (q, d) in y.terms() {
                out.add_term(p.concat_commuting(q), c * d);
            }
        }
        out
    };
    for g in 0..4 {
        let mut ok = true;
        for p in &basis {
            for q in &basis {
                let (fp, fq_) = (NcElement::monomial(p.clone()), NcElement::monomial(q.clone()));
                let lhs = ops.partial(&mul_c(&fp, &fq_), g);
                let rhs = mul_c(&ops.partial(&fp, g), &fq_).add(&mul_c(&fp, &ops.partial(&fq_, g)));
                ok &= lhs == rhs;
            }
        }
        report.assert("Leibniz rule on exponents", format!("∂/∂{}", super::FQ_NAMES[g]), ok, None);
    }
    let mut ok = true;
    for p in &basis {
        for q in &basis {
            let (fp, fq_) = (NcElement::monomial(p.clone()), NcElement::monomial(q.clone()));
            ok &= ops.shift(&mul_c(&fp, &fq_)) == mul_c(&ops.shift(&fp), &ops.shift(&fq_));
        }
    }
    report.assert("shift is multiplicative on exponents", "e^{-2a∂x}", ok, None);

    // The plain derivatives are exactly the duality actions of single generators.
    let pairs = [(I, Side::Right, MU), (P, Side::Right, X), (H, Side::Right, T), (N, Side::Left, V)];
    for (g, side, coord) in pairs {
        let h = ctx.uq.algebra.gen(g);
        let mut first = None;
        for mono in monomials_up_to(4, max_degree) {
            let f = NcElement::monomial(mono.clone());
            if ops.partial(&f, coord) != ctx.act_dual(&h, &f, side) && first.is_none() {
                first = Some(fq.fmt_monomial(&mono));
            }
        }
        report.assert(
            &format!("∂/∂{} = duality action of {}", super::FQ_NAMES[coord], gen_name(g)),
            side_label(g, "f", side),
            first.is_none(),
            first.map(|f| format!("differs on {f}")),
        );
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_element;

    fn ops() -> GalileiOperators {
        GalileiOperators::default()
    }

    fn el(s: &str) -> NcElement {
        parse_element(s, &fq_algebra()).unwrap()
    }

    #[test]
    fn derivative_fixtures() {
        let o = ops();
        assert_eq!(o.partial(&el("mu*x^2"), X), el("2*mu*x"));
        assert!(o.partial(&el("x"), MU).is_zero());
        assert_eq!(o.shift(&el("x^2")), el("x^2 - 4*a*x + 4*a^2"));
    }

    #[test]
    fn closed_form_examples() {
        let o = ops();
        assert_eq!(o.act_left(N, &el("v^2")).unwrap(), el("2*v"));
        assert!(o.act_left(I, &el("1")).unwrap().is_zero());
        assert_eq!(o.act_left(P, &el("mu")).unwrap(), el("v"));
        assert_eq!(o.act_right(&el("mu"), I).unwrap(), el("1"));
        assert!(o.act_right(&el("1"), N).unwrap().is_zero());
        assert_eq!(o.act_right(&el("x"), N).unwrap(), el("t"));
    }

    #[test]
    fn readings_are_distinct() {
        let f = el("mu*v");
        let commuting = GalileiOperators::new(BarReading::Commuting, Composition::DerivativeFirst);
        let left = GalileiOperators::new(BarReading::LeftMultiply, Composition::DerivativeFirst);
        assert_ne!(commuting.bar(&f, X), left.bar(&f, X));
    }
}
