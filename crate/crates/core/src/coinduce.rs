//! Character-coinduced representations of `U_q` on truncated power series in `v`.
//!
//! For the character `(I, P, H) ↦ (α, β, γ)` and `c = aαE` (with `E` standing
//! for `e^{-2aβ}`):
//!
//! ```text
//! I ⊢ φ = α(1 + cv) φ
//! P ⊢ φ = (β + (1/a) ln(1 + cv)) φ
//! H ⊢ φ = (γ + (1/2a)((1 - E) + cv)(1 + cv)^{-1} v) φ
//! N ⊢ φ = φ'
//! ```

use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::coeff::{factorial, CoeffPoly, Rational, Var};
use crate::duality::PairingContext;
use crate::galilei::{H, I, N, P};
use crate::ncpoly::NcElement;
use crate::report::Report;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoinduceError {
    #[error("truncation order {0} is too small (need at least 2)")]
    OrderTooSmall(usize),
    #[error("{0}: 1/a prefactor does not cancel")]
    Divisibility(String),
    #[error("vector of length {got} does not match the representation dimension {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("{0} is not in the span of I, P, H monomials")]
    OutsideSubalgebra(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CharacterMode {
    Symbolic,
    Numeric,
}

/// A character of the abelian subalgebra generated by `I, P, H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    pub alpha: CoeffPoly,
    pub beta: CoeffPoly,
    pub gamma: CoeffPoly,
    /// `e^{-2aβ}`, kept formal unless `β = 0`.
    pub e: CoeffPoly,
    pub mode: CharacterMode,
}

impl Character {
    pub fn symbolic() -> Self {
        Character {
            alpha: CoeffPoly::var(Var::Alpha),
            beta: CoeffPoly::var(Var::Beta),
            gamma: CoeffPoly::var(Var::Gamma),
            e: CoeffPoly::var(Var::E),
            mode: CharacterMode::Symbolic,
        }
    }

    pub fn numeric(alpha: Rational, beta: Rational, gamma: Rational) -> Self {
        let e = if beta.is_zero() {
            CoeffPoly::one()
        } else {
            CoeffPoly::var(Var::E)
        };
        Character {
            alpha: CoeffPoly::constant(alpha),
            beta: CoeffPoly::constant(beta),
            gamma: CoeffPoly::constant(gamma),
            e,
            mode: CharacterMode::Numeric,
        }
    }

    /// `χ(I^p P^q H^r) = α^p β^q γ^r`; fails on monomials containing `N`.
    pub fn value(&self, u: &NcElement) -> Result<CoeffPoly, CoinduceError> {
        let mut out = CoeffPoly::zero();
        for (m, c) in u.terms() {
            if m.exp(N) > 0 {
                return Err(CoinduceError::OutsideSubalgebra(format!("{m:?}")));
            }
            let v = &(&self.alpha.pow(m.exp(I)) * &self.beta.pow(m.exp(P))) * &self.gamma.pow(m.exp(H));
            out += &(c * &v);
        }
        Ok(out)
    }
}

/// `Σ_{n<order} c_n vⁿ`; powers `v^order` and above are dropped.
#[derive(Clone, PartialEq, Eq)]
pub struct VSeries {
    coeffs: Vec<CoeffPoly>,
    order: usize,
}

impl VSeries {
    pub fn new(mut coeffs: Vec<CoeffPoly>, order: usize) -> Self {
        coeffs.truncate(order);
        while coeffs.last().is_some_and(CoeffPoly::is_zero) {
            coeffs.pop();
        }
        VSeries { coeffs, order }
    }

    pub fn zero(order: usize) -> Self {
        VSeries::new(Vec::new(), order)
    }

    pub fn constant(c: CoeffPoly, order: usize) -> Self {
        VSeries::new(vec![c], order)
    }

    pub fn one(order: usize) -> Self {
        VSeries::constant(CoeffPoly::one(), order)
    }

    /// `vⁿ`
    pub fn v_pow(n: usize, order: usize) -> Self {
        let mut c = vec![CoeffPoly::zero(); n + 1];
        c[n] = CoeffPoly::one();
        VSeries::new(c, order)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, n: usize) -> CoeffPoly {
        self.coeffs.get(n).cloned().unwrap_or_else(CoeffPoly::zero)
    }

    pub fn coeffs(&self) -> &[CoeffPoly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn truncate(&self, order: usize) -> Self {
        VSeries::new(self.coeffs.clone(), order.min(self.order))
    }

    fn zip(&self, other: &VSeries, f: impl Fn(&CoeffPoly, &CoeffPoly) -> CoeffPoly) -> VSeries {
        let order = self.order.min(other.order);
        let c = (0..order).map(|n| f(&self.coeff(n), &other.coeff(n))).collect();
        VSeries::new(c, order)
    }

    pub fn add(&self, other: &VSeries) -> VSeries {
        self.zip(other, |x, y| x + y)
    }

    pub fn sub(&self, other: &VSeries) -> VSeries {
        self.zip(other, |x, y| x - y)
    }

    pub fn scale(&self, c: &CoeffPoly) -> VSeries {
        VSeries::new(self.coeffs.iter().map(|x| x * c).collect(), self.order)
    }

    pub fn mul(&self, other: &VSeries) -> VSeries {
        let order = self.order.min(other.order);
        let mut c = vec![CoeffPoly::zero(); order];
        for (i, x) in self.coeffs.iter().enumerate() {
            for (j, y) in other.coeffs.iter().enumerate() {
                if i + j < order {
                    c[i + j] += &(x * y);
                }
            }
        }
        VSeries::new(c, order)
    }

    pub fn pow(&self, n: u32) -> VSeries {
        (0..n).fold(VSeries::one(self.order), |acc, _| acc.mul(self))
    }

    /// `d/dv`; the result is known only to one order less.
    pub fn derivative(&self) -> VSeries {
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(n, x)| x.scale(&Rational::from_integer((n as i64).into())))
            .collect();
        VSeries::new(c, self.order.saturating_sub(1))
    }

    /// `(1 + x)^{-1}` for `x` without constant term.
    pub fn inverse_one_plus(x: &VSeries) -> VSeries {
        assert!(x.coeff(0).is_zero(), "series must have zero constant term");
        let sign = |n: u32| Rational::from_integer(if n.is_multiple_of(2) { 1 } else { -1 }.into());
        VSeries::one(x.order).add(&power_sum(x, sign))
    }

    /// `ln(1 + x)` for `x` without constant term.
    pub fn log_one_plus(x: &VSeries) -> VSeries {
        assert!(x.coeff(0).is_zero(), "series must have zero constant term");
        let c = |n: u32| Rational::new(if n % 2 == 1 { 1 } else { -1 }.into(), (n as i64).into());
        power_sum(x, c)
    }

    /// `exp(x)` for `x` without constant term.
    pub fn exp(x: &VSeries) -> VSeries {
        assert!(x.coeff(0).is_zero(), "series must have zero constant term");
        VSeries::one(x.order).add(&power_sum(x, |n| Rational::one() / factorial(n)))
    }

    pub fn map_coeffs(&self, f: impl Fn(&CoeffPoly) -> CoeffPoly) -> VSeries {
        VSeries::new(self.coeffs.iter().map(f).collect(), self.order)
    }

    /// Indices of coefficients carrying a negative power of `a`.
    pub fn laurent_positions(&self) -> Vec<usize> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| c.min_a_degree().is_some_and(|d| d < 0))
            .map(|(n, _)| n)
            .collect()
    }
}

impl fmt::Display for VSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(String, bool)> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(n, c)| {
                let body = match n {
                    0 => "1".to_string(),
                    1 => "v".to_string(),
                    _ => format!("v^{n}"),
                };
                crate::ncpoly::fmt_scaled(c, &body, n == 0)
            })
            .collect();
        write!(f, "{} + O(v^{})", crate::ncpoly::join_signed(terms), self.order)
    }
}

impl fmt::Debug for VSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `Σ_{n≥1} c_n xⁿ` for a series `x` without constant term.
fn power_sum(x: &VSeries, c: impl Fn(u32) -> Rational) -> VSeries {
    let mut out = VSeries::zero(x.order);
    let mut p = VSeries::one(x.order);
    for n in 1..x.order as u32 {
        p = p.mul(x);
        out = out.add(&p.scale(&CoeffPoly::constant(c(n))));
    }
    out
}

/// The coinduced module: `I, P, H` act by multiplication, `N` by `d/dv`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoinducedRep {
    pub character: Character,
    pub order: usize,
    pub i: VSeries,
    pub p: VSeries,
    pub h: VSeries,
}

fn c_series(chi: &Character, order: usize) -> VSeries {
    // c v with c = a α E
    let c = &(&CoeffPoly::var(Var::A) * &chi.alpha) * &chi.e;
    VSeries::new(vec![CoeffPoly::zero(), c], order)
}

/// Divide every coefficient by `a`; where that is impossible the coefficient
/// becomes Laurent only if `allow` permits its index.
fn div_a(s: &VSeries, allow: impl Fn(usize) -> bool, what: &str) -> Result<VSeries, CoinduceError> {
    let mut c = Vec::new();
    for (n, x) in s.coeffs().iter().enumerate() {
        match x.div_a_exact() {
            Some(d) => c.push(d),
            None if allow(n) => c.push(x.shift_a(-1)),
            None => return Err(CoinduceError::Divisibility(format!("{what}, coefficient of v^{n}"))),
        }
    }
    Ok(VSeries::new(c, s.order()))
}

pub fn build_coinduced(chi: &Character, order: usize) -> Result<CoinducedRep, CoinduceError> {
    if order < 2 {
        return Err(CoinduceError::OrderTooSmall(order));
    }
    let cv = c_series(chi, order);
    let one = VSeries::one(order);
    let i = one.add(&cv).scale(&chi.alpha);
    let p = VSeries::constant(chi.beta.clone(), order).add(&div_a(&VSeries::log_one_plus(&cv), |_| false, "P⊢")?);
    let inner = VSeries::constant(&CoeffPoly::one() - &chi.e, order)
        .add(&cv)
        .mul(&VSeries::inverse_one_plus(&cv))
        .mul(&VSeries::v_pow(1, order));
    let h = VSeries::constant(chi.gamma.clone(), order).add(
        &div_a(&inner, |n| n == 1, "H⊢")?.scale(&CoeffPoly::from_ratio(1, 2)),
    );
    Ok(CoinducedRep {
        character: chi.clone(),
        order,
        i,
        p,
        h,
    })
}

impl CoinducedRep {
    /// `g ⊢ φ` for a generator `g` of `U_q`.
    pub fn act(&self, g: usize, phi: &VSeries) -> VSeries {
        match g {
            I => self.i.mul(phi),
            P => self.p.mul(phi),
            H => self.h.mul(phi),
            N => phi.derivative(),
            _ => panic!("generator index {g} out of range"),
        }
    }

    /// `u ⊢ φ` for a `U_q` element, composing along each PBW word.
    pub fn act_element(&self, u: &NcElement, phi: &VSeries) -> VSeries {
        let mut out = VSeries::zero(phi.order());
        for (m, c) in u.terms() {
            let mut cur = phi.clone();
            for g in m.word().into_iter().rev() {
                cur = self.act(g, &cur);
            }
            out = out.add(&cur.scale(c));
        }
        out
    }

    /// `e^{-2aP}` on the carrier: `E (1 + cv)^{-2}`.
    pub fn exp_minus_2a_p(&self) -> VSeries {
        let cv = c_series(&self.character, self.order);
        VSeries::inverse_one_plus(&cv).pow(2).scale(&self.character.e)
    }
}

/// `[N⊢, I⊢]`, `[N⊢, P⊢]`, `[N⊢, H⊢]` against the relation right-hand sides
/// assembled with `e^{-2aP} ↦ E (1 + cv)^{-2}`, on `vᵏ` for `k < order`
/// (commutators are exact to order `order - 1`).
pub fn check_rep_relations(rep: &CoinducedRep) -> Report {
    let n = rep.order;
    let mut report = Report::new(format!("coinduced representation relations, order {n}"));
    let e2 = rep.exp_minus_2a_p();
    let a = CoeffPoly::var(Var::A);
    let cv = c_series(&rep.character, n);

    let closed = VSeries::exp(&VSeries::log_one_plus(&cv).scale(&CoeffPoly::from_int(-2))).scale(&rep.character.e);
    report.check_eq(
        "E(1+cv)^{-2} = E exp(-2a(p - β))",
        "e^{-2aP} on the carrier",
        &e2,
        &closed,
        |s| s.to_string(),
    );

    let rhs_i = e2.mul(&rep.i).mul(&rep.i).scale(&a);
    let rhs_p = e2.mul(&rep.i);
    let one_minus = VSeries::one(n).sub(&e2);
    let rhs_h = div_a(&one_minus, |k| k == 0, "[N,H]")
        .expect("only the constant term of 1 - E(1+cv)^{-2} lacks a factor a")
        .scale(&CoeffPoly::from_ratio(1, 2));
    let cases = [
        ("[N⊢, I⊢] = a e^{-2aP} I²", I, rhs_i),
        ("[N⊢, P⊢] = e^{-2aP} I", P, rhs_p),
        ("[N⊢, H⊢] = (1 - e^{-2aP})/(2a)", H, rhs_h),
    ];
    for (name, g, mult) in cases {
        for k in 0..n {
            let phi = VSeries::v_pow(k, n);
            let lhs = rep.act(N, &rep.act(g, &phi)).sub(&rep.act(g, &rep.act(N, &phi)));
            let rhs = mult.mul(&phi).truncate(n - 1);
            report.check_eq(name, format!("v^{k}"), &lhs, &rhs, |s| s.to_string());
        }
    }
    for (name, x, y) in [("[I⊢, P⊢] = 0", I, P), ("[I⊢, H⊢] = 0", I, H), ("[P⊢, H⊢] = 0", P, H)] {
        for k in 0..n {
            let phi = VSeries::v_pow(k, n);
            let lhs = rep.act(x, &rep.act(y, &phi)).sub(&rep.act(y, &rep.act(x, &phi)));
            report.check_eq(name, format!("v^{k}"), &lhs, &VSeries::zero(n), |s| s.to_string());
        }
    }
    report
}

/// The derivative of each multiplier, in closed form.
pub fn commutator_closed_forms(rep: &CoinducedRep) -> Report {
    let n = rep.order;
    let mut report = Report::new(format!("closed-form commutators, order {n}"));
    let chi = &rep.character;
    let a = CoeffPoly::var(Var::A);
    let cv = c_series(chi, n);
    let inv = VSeries::inverse_one_plus(&cv);
    let a_alpha2_e = &(&a * &chi.alpha.pow(2)) * &chi.e;
    report.check_eq(
        "i'(v) = aα²E",
        "I⊢",
        &rep.i.derivative(),
        &VSeries::constant(a_alpha2_e, n - 1),
        |s| s.to_string(),
    );
    report.check_eq(
        "p'(v) = αE(1+cv)^{-1}",
        "P⊢",
        &rep.p.derivative(),
        &inv.scale(&(&chi.alpha * &chi.e)).truncate(n - 1),
        |s| s.to_string(),
    );
    let rhs = VSeries::one(n).sub(&inv.pow(2).scale(&chi.e));
    let rhs = div_a(&rhs, |k| k == 0, "h'").expect("constant term only").scale(&CoeffPoly::from_ratio(1, 2));
    report.check_eq(
        "h'(v) = (1 - E(1+cv)^{-2})/(2a)",
        "H⊢",
        &rep.h.derivative(),
        &rhs.truncate(n - 1),
        |s| s.to_string(),
    );
    report
}

/// `g ⊢ 1` at `v = 0` is `α, β, γ` for `I, P, H`, and `N ⊢ 1 = 0`.
pub fn character_consistency(rep: &CoinducedRep) -> Report {
    let mut report = Report::new("character consistency");
    let one = VSeries::one(rep.order);
    let chi = &rep.character;
    for (g, name, expected) in [(I, "I", &chi.alpha), (P, "P", &chi.beta), (H, "H", &chi.gamma)] {
        let got = rep.act(g, &one).coeff(0);
        report.check_eq(&format!("({name} ⊢ 1)|v=0"), name, &got, expected, |c| c.to_string());
    }
    let got = rep.act(N, &one);
    report.check_eq("N ⊢ 1 = 0", "N", &got, &VSeries::zero(rep.order - 1), |s| s.to_string());
    report
}

/// Substitute `E = e^{-2aβ}` as an `a`-series (enough terms for the
/// Laurent coefficient), then keep the `a⁰` part.
fn classical_part(c: &CoeffPoly, beta: &CoeffPoly) -> CoeffPoly {
    let min = c.min_a_degree().unwrap_or(0).min(0);
    let depth = (1 - min) as u32;
    let mut e = CoeffPoly::zero();
    for k in 0..=depth {
        let term = (&CoeffPoly::from_int(-2) * beta).pow(k).shift_a(k as i32).scale(&(Rational::one() / factorial(k)));
        e += &term;
    }
    c.substitute(Var::E, &e).a_coefficient(0)
}

/// The `a → 0` limit: `i → α`, `p → β + αv`, `h → γ + βv + ½αv²`.
pub fn classical_limit(rep: &CoinducedRep) -> Report {
    let n = rep.order;
    let mut report = Report::new(format!("classical limit, order {n}"));
    let chi = &rep.character;
    let lim = |s: &VSeries| s.map_coeffs(|c| classical_part(c, &chi.beta));
    let half = CoeffPoly::from_ratio(1, 2);
    let expect_i = VSeries::constant(chi.alpha.clone(), n);
    let expect_p = VSeries::new(vec![chi.beta.clone(), chi.alpha.clone()], n);
    let expect_h = VSeries::new(vec![chi.gamma.clone(), chi.beta.clone(), &chi.alpha * &half], n);
    report.check_eq("I⊢ → α", "I", &lim(&rep.i), &expect_i, |s| s.to_string());
    report.check_eq("P⊢ → β + αv", "P", &lim(&rep.p), &expect_p, |s| s.to_string());
    report.check_eq("H⊢ → γ + βv + ½αv²", "H", &lim(&rep.h), &expect_h, |s| s.to_string());
    report
}

/// Negative `a`-powers may appear only in the `v¹` coefficient of `h`, and
/// that Laurent part must vanish at `E = 1`.
pub fn laurent_report(rep: &CoinducedRep) -> Report {
    let mut report = Report::new("Laurent coefficients");
    for (name, s) in [("I⊢", &rep.i), ("P⊢", &rep.p), ("H⊢", &rep.h)] {
        let pos = s.laurent_positions();
        let allowed = if name == "H⊢" { vec![1] } else { vec![] };
        let ok = pos.iter().all(|k| allowed.contains(k));
        report.assert(
            "negative a-powers only in (1 - E)/(2a)",
            name,
            ok,
            (!ok).then(|| format!("Laurent coefficients at v^{pos:?}")),
        );
    }
    let c1 = rep.h.coeff(1);
    let polar: CoeffPoly = (c1.min_a_degree().unwrap_or(0)..0).fold(CoeffPoly::zero(), |acc, k| {
        &acc + &c1.a_coefficient(k).shift_a(k)
    });
    let at_one = polar.substitute(Var::E, &CoeffPoly::one());
    report.check_eq("polar part vanishes at E = 1", "H⊢ v¹", &at_one, &CoeffPoly::zero(), |c| c.to_string());
    report
}

/// Building at order `n` and truncating to `m` agrees with building at `m`.
pub fn truncation_coherence(chi: &Character, n: usize, m: usize) -> Result<bool, CoinduceError> {
    let big = build_coinduced(chi, n)?;
    let small = build_coinduced(chi, m)?;
    Ok(big.i.truncate(m) == small.i && big.p.truncate(m) == small.p && big.h.truncate(m) == small.h)
}

/// An element of `F_q ⊗ V`: functions paired with coordinate vectors.
pub type VectorValued = Vec<(NcElement, Vec<CoeffPoly>)>;

/// A representation of the subalgebra `K` on `V = K^dim`.
pub trait SubalgebraAction {
    fn dim(&self) -> usize;
    fn act(&self, k: &NcElement, v: &[CoeffPoly]) -> Result<Vec<CoeffPoly>, CoinduceError>;
}

/// `V = K` with `k ⊳ v = χ(k) v`.
pub struct CharacterAction(pub Character);

impl SubalgebraAction for CharacterAction {
    fn dim(&self) -> usize {
        1
    }

    fn act(&self, k: &NcElement, v: &[CoeffPoly]) -> Result<Vec<CoeffPoly>, CoinduceError> {
        let c = self.0.value(k)?;
        Ok(v.iter().map(|x| x * &c).collect())
    }
}

/// `⟨f, kh⟩ = k ⊳ ⟨f, h⟩` with `⟨φ ⊗ w, h⟩ = ⟨h, φ⟩ w`, for every `k` and probe `h`.
pub fn equivariance_check(
    ctx: &PairingContext,
    f: &VectorValued,
    k_gens: &[NcElement],
    action: &dyn SubalgebraAction,
    probes: &[NcElement],
) -> Result<Report, CoinduceError> {
    let dim = action.dim();
    for (_, w) in f {
        if w.len() != dim {
            return Err(CoinduceError::DimensionMismatch {
                expected: dim,
                got: w.len(),
            });
        }
    }
    let eval = |h: &NcElement| -> Vec<CoeffPoly> {
        let mut out = vec![CoeffPoly::zero(); dim];
        for (phi, w) in f {
            let p = ctx.pair(h, phi);
            for (o, x) in out.iter_mut().zip(w) {
                *o += &(&p * x);
            }
        }
        out.into_iter().map(|c| c.truncate_a(ctx.order() as i32)).collect()
    };
    let uq = &ctx.uq.algebra;
    let mut report = Report::new("equivariance ⟨f, kh⟩ = k ⊳ ⟨f, h⟩");
    for k in k_gens {
        for h in probes {
            let lhs = eval(&uq.mul(k, h));
            let rhs: Vec<CoeffPoly> = action
                .act(k, &eval(h))?
                .into_iter()
                .map(|c| c.truncate_a(ctx.order() as i32))
                .collect();
            report.check_eq(
                "⟨f, kh⟩ = k ⊳ ⟨f, h⟩",
                format!("k = {}, h = {}", uq.fmt(k), uq.fmt(h)),
                &lhs,
                &rhs,
                |v| {
                    let parts: Vec<String> = v.iter().map(|c| c.to_string()).collect();
                    format!("({})", parts.join(", "))
                },
            );
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::rat;

    #[test]
    fn series_arithmetic() {
        let x = VSeries::v_pow(1, 6);
        let inv = VSeries::inverse_one_plus(&x);
        assert_eq!(inv.mul(&VSeries::one(6).add(&x)), VSeries::one(6));
        let l = VSeries::log_one_plus(&x);
        assert_eq!(VSeries::exp(&l), VSeries::one(6).add(&x));
        assert_eq!(x.pow(6), VSeries::zero(6));
        assert_eq!(VSeries::v_pow(3, 6).derivative().coeff(2), CoeffPoly::from_int(3));
    }

    #[test]
    fn operator_formulas() {
        let rep = build_coinduced(&Character::symbolic(), 4).unwrap();
        assert_eq!(rep.i.to_string(), "alpha + a*alpha^2*E*v + O(v^4)");
        assert_eq!(
            rep.p.to_string(),
            "beta + alpha*E*v - 1/2*a*alpha^2*E^2*v^2 + 1/3*a^2*alpha^3*E^3*v^3 + O(v^4)"
        );
        let one = VSeries::one(4);
        assert_eq!(rep.act(N, &VSeries::v_pow(1, 4)), VSeries::one(3));
        assert!(rep.act(N, &one).is_zero());
    }

    #[test]
    fn order_too_small() {
        assert!(matches!(build_coinduced(&Character::symbolic(), 1), Err(CoinduceError::OrderTooSmall(1))));
    }

    #[test]
    fn numeric_character_at_zero_beta() {
        let chi = Character::numeric(rat(2, 1), rat(0, 1), rat(1, 3));
        assert!(chi.e.is_one());
        let rep = build_coinduced(&chi, 5).unwrap();
        assert!(check_rep_relations(&rep).passed());
        assert!(rep.h.laurent_positions().is_empty());
    }
}
