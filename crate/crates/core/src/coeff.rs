//! Exact multivariate coefficients over ℚ.
//!
//! A [`CoeffPoly`] is a sparse polynomial in the ordered indeterminates
//! `a, alpha, beta, gamma, E`. The exponent of `a` may be negative (Laurent),
//! every other exponent is nonnegative. Zero coefficients are never stored,
//! so structural equality is ring equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Rational scalar used throughout the crate.
pub type Rational = BigRational;

/// Construct the rational `n / d`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// `n!` as a rational.
pub fn factorial(n: u32) -> Rational {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= k;
    }
    Rational::from_integer(acc)
}

/// `binomial(n, k)` as a rational.
pub fn binomial(n: u32, k: u32) -> Rational {
    if k > n {
        return Rational::zero();
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// The coefficient indeterminates, in canonical order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    A,
    Alpha,
    Beta,
    Gamma,
    E,
}

impl Var {
    pub const ALL: [Var; 5] = [Var::A, Var::Alpha, Var::Beta, Var::Gamma, Var::E];

    pub fn index(self) -> usize {
        self as usize
    }

    /// ASCII spelling used by the text format.
    pub fn name(self) -> &'static str {
        match self {
            Var::A => "a",
            Var::Alpha => "alpha",
            Var::Beta => "beta",
            Var::Gamma => "gamma",
            Var::E => "E",
        }
    }

    pub fn from_name(name: &str) -> Option<Var> {
        Var::ALL.into_iter().find(|v| v.name() == name)
    }
}

/// Exponent vector over `(a, alpha, beta, gamma, E)`.
pub type Exponents = [i32; 5];

const ONE_EXPS: Exponents = [0; 5];

/// Sparse polynomial with exact rational coefficients, Laurent in `a`.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoeffPoly {
    terms: BTreeMap<Exponents, Rational>,
}

impl CoeffPoly {
    pub fn zero() -> Self {
        CoeffPoly::default()
    }

    pub fn one() -> Self {
        CoeffPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        CoeffPoly::monomial(c, ONE_EXPS)
    }

    pub fn from_int(n: i64) -> Self {
        CoeffPoly::constant(Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        CoeffPoly::constant(rat(n, d))
    }

    /// `c * vars^exps`; zero when `c` is zero.
    pub fn monomial(c: Rational, exps: Exponents) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        CoeffPoly { terms }
    }

    pub fn var(v: Var) -> Self {
        let mut exps = ONE_EXPS;
        exps[v.index()] = 1;
        CoeffPoly::monomial(Rational::one(), exps)
    }

    /// `a^k`, with `k` possibly negative.
    pub fn a_pow(k: i32) -> Self {
        CoeffPoly::monomial(Rational::one(), [k, 0, 0, 0, 0])
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&ONE_EXPS).is_some_and(|c| c.is_one())
    }

    /// True when the polynomial has no indeterminates.
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| *e == ONE_EXPS)
    }

    /// The rational value of a constant polynomial.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::zero());
        }
        if self.is_constant() {
            return self.terms.get(&ONE_EXPS).cloned();
        }
        None
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest exponent of `a` among the terms; `None` for zero.
    pub fn a_degree(&self) -> Option<i32> {
        self.terms.keys().map(|e| e[0]).max()
    }

    /// Smallest exponent of `a` among the terms; `None` for zero.
    pub fn min_a_degree(&self) -> Option<i32> {
        self.terms.keys().map(|e| e[0]).min()
    }

    /// Largest exponent of `v` over all terms.
    pub fn degree_in(&self, v: Var) -> Option<i32> {
        self.terms.keys().map(|e| e[v.index()]).max()
    }

    /// Drop every term whose `a`-exponent exceeds `k`.
    pub fn truncate_a(&self, k: i32) -> Self {
        CoeffPoly {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e[0] <= k)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    /// Apply an optional truncation order in place.
    pub fn truncate_opt(self, k: Option<u32>) -> Self {
        match k {
            Some(k) if self.a_degree().is_some_and(|d| d > k as i32) => self.truncate_a(k as i32),
            _ => self,
        }
    }

    /// The coefficient of `a^k`, as a polynomial free of `a`.
    pub fn a_coefficient(&self, k: i32) -> Self {
        CoeffPoly {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e[0] == k)
                .map(|(e, c)| {
                    let mut e = *e;
                    e[0] = 0;
                    (e, c.clone())
                })
                .collect(),
        }
    }

    /// Multiply by `a^k`.
    pub fn shift_a(&self, k: i32) -> Self {
        CoeffPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = *e;
                    e[0] += k;
                    (e, c.clone())
                })
                .collect(),
        }
    }

    /// Divide by `a`, returning `None` unless every term carries at least one `a`.
    pub fn div_a_exact(&self) -> Option<Self> {
        if self.min_a_degree().is_some_and(|d| d < 1) {
            return None;
        }
        Some(self.shift_a(-1))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return CoeffPoly::zero();
        }
        CoeffPoly {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = CoeffPoly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Substitute a polynomial for a variable with nonnegative exponents.
    ///
    /// Panics if `v` appears with a negative exponent (only possible for `a`).
    pub fn substitute(&self, v: Var, value: &CoeffPoly) -> Self {
        let mut out = CoeffPoly::zero();
        let mut powers: Vec<CoeffPoly> = vec![CoeffPoly::one()];
        for (e, c) in &self.terms {
            let k = e[v.index()];
            assert!(k >= 0, "cannot substitute into a negative power of {}", v.name());
            while powers.len() <= k as usize {
                let next = powers.last().unwrap() * value;
                powers.push(next);
            }
            let mut rest = *e;
            rest[v.index()] = 0;
            out += &(&CoeffPoly::monomial(c.clone(), rest) * &powers[k as usize]);
        }
        out
    }

    fn add_term(&mut self, e: Exponents, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }
}

fn add_exps(x: &Exponents, y: &Exponents) -> Exponents {
    let mut out = *x;
    for (o, v) in out.iter_mut().zip(y) {
        *o += v;
    }
    out
}

impl AddAssign<&CoeffPoly> for CoeffPoly {
    fn add_assign(&mut self, rhs: &CoeffPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&CoeffPoly> for CoeffPoly {
    fn sub_assign(&mut self, rhs: &CoeffPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c.clone());
        }
    }
}

impl Add for &CoeffPoly {
    type Output = CoeffPoly;
    fn add(self, rhs: &CoeffPoly) -> CoeffPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &CoeffPoly {
    type Output = CoeffPoly;
    fn sub(self, rhs: &CoeffPoly) -> CoeffPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &CoeffPoly {
    type Output = CoeffPoly;
    fn mul(self, rhs: &CoeffPoly) -> CoeffPoly {
        let mut out = CoeffPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(add_exps(e1, e2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &CoeffPoly {
    type Output = CoeffPoly;
    fn neg(self) -> CoeffPoly {
        CoeffPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for CoeffPoly {
            type Output = CoeffPoly;
            fn $method(self, rhs: CoeffPoly) -> CoeffPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&CoeffPoly> for CoeffPoly {
            type Output = CoeffPoly;
            fn $method(self, rhs: &CoeffPoly) -> CoeffPoly {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for CoeffPoly {
    type Output = CoeffPoly;
    fn neg(self) -> CoeffPoly {
        -&self
    }
}

impl From<Rational> for CoeffPoly {
    fn from(c: Rational) -> Self {
        CoeffPoly::constant(c)
    }
}

impl From<i64> for CoeffPoly {
    fn from(n: i64) -> Self {
        CoeffPoly::from_int(n)
    }
}

pub(crate) fn fmt_rational(c: &Rational) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn fmt_vars(e: &Exponents) -> String {
    let mut parts = Vec::new();
    for v in Var::ALL {
        let k = e[v.index()];
        match k {
            0 => {}
            1 => parts.push(v.name().to_string()),
            _ => parts.push(format!("{}^{}", v.name(), k)),
        }
    }
    parts.join("*")
}

/// Format one signed term; the result starts with `-` when negative.
fn fmt_term(e: &Exponents, c: &Rational) -> String {
    let vars = fmt_vars(e);
    if vars.is_empty() {
        return fmt_rational(c);
    }
    if c.is_one() {
        vars
    } else if (-c).is_one() {
        format!("-{vars}")
    } else {
        format!("{}*{vars}", fmt_rational(c))
    }
}

impl fmt::Display for CoeffPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let s = fmt_term(e, c);
            if i == 0 {
                write!(f, "{s}")?;
            } else if c.is_negative() {
                write!(f, " - {}", &s[1..])?;
            } else {
                write!(f, " + {s}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CoeffPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CoeffPoly({self})")
    }
}
