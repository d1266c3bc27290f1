//! Noncommutative polynomials in PBW normal form.
//!
//! An [`Algebra`] is a finite presentation: ordered generators plus, for every
//! out-of-order pair `g_j g_i` (`j > i`), the commutator correction
//! `g_j g_i - g_i g_j`. Normal ordering moves the larger generator to the
//! right. Corrections may be power series in `a` (see [`ExpSeries`]); those
//! require a finite `a`-truncation order.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::RwLock;

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::coeff::{factorial, fmt_rational, CoeffPoly, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("generator index {index} is out of range for {algebra} ({count} generators)")]
    InvalidGenerator {
        algebra: String,
        index: usize,
        count: usize,
    },
    #[error("rule {lhs} in {algebra} has an infinite a-series right-hand side; a finite a-truncation order is required")]
    TruncationRequired { algebra: String, lhs: String },
    #[error("invalid rewrite rule: {0}")]
    InvalidRule(String),
    #[error("tensor rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("rewriting exceeded the step bound {0}")]
    StepBound(usize),
}

/// PBW monomial: one exponent per generator, in generator order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn unit(ngens: usize) -> Self {
        Monomial(vec![0; ngens])
    }

    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn generator(ngens: usize, g: usize) -> Self {
        let mut m = Monomial::unit(ngens);
        m.0[g] = 1;
        m
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn exp(&self, g: usize) -> u32 {
        self.0[g]
    }

    pub fn ngens(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Index of the largest generator present.
    pub fn last_generator(&self) -> Option<usize> {
        self.0.iter().rposition(|&e| e > 0)
    }

    pub fn with_exp(&self, g: usize, e: u32) -> Self {
        let mut m = self.clone();
        m.0[g] = e;
        m
    }

    /// The monomial as a sorted generator word.
    pub fn word(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(g, &e)| std::iter::repeat_n(g, e as usize))
            .collect()
    }

    /// Product of exponent vectors (valid as an algebra product only when
    /// the result needs no reordering).
    pub fn concat_commuting(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(x, y)| x + y).collect())
    }

    /// Weighted degree under a weight per generator.
    pub fn weight(&self, weights: &[i32]) -> i32 {
        self.0.iter().zip(weights).map(|(&e, &w)| e as i32 * w).sum()
    }

    /// Number factor `p! q! r! s! …`.
    pub fn factorial_norm(&self) -> Rational {
        self.0
            .iter()
            .fold(Rational::from_integer(1.into()), |acc, &e| acc * factorial(e))
    }

    pub fn fmt_with(&self, names: &[String]) -> String {
        if self.is_unit() {
            return "1".to_string();
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(g, &e)| {
                if e == 1 {
                    names[g].clone()
                } else {
                    format!("{}^{}", names[g], e)
                }
            })
            .collect();
        parts.join("*")
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// All monomials of total degree exactly `d` over `ngens` generators.
pub fn monomials_of_degree(ngens: usize, d: u32) -> Vec<Monomial> {
    fn rec(ngens: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if cur.len() == ngens - 1 {
            cur.push(left);
            out.push(Monomial(cur.clone()));
            cur.pop();
            return;
        }
        for e in (0..=left).rev() {
            cur.push(e);
            rec(ngens, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(ngens, d, &mut Vec::new(), &mut out);
    out
}

/// Nonconstant monomials of degree `1..=d`, in canonical order.
pub fn monomials_up_to(ngens: usize, d: u32) -> Vec<Monomial> {
    (1..=d).flat_map(|k| monomials_of_degree(ngens, k)).collect()
}

/// Monomials whose weight is at most `max_weight` (positive weights only).
pub fn monomials_with_weight_at_most(weights: &[i32], max_weight: i32) -> Vec<Monomial> {
    fn rec(weights: &[i32], left: i32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        let g = cur.len();
        if g == weights.len() {
            out.push(Monomial(cur.clone()));
            return;
        }
        let mut e = 0;
        while e * weights[g] <= left {
            cur.push(e as u32);
            rec(weights, left - e * weights[g], cur, out);
            cur.pop();
            e += 1;
        }
    }
    let mut out = Vec::new();
    if max_weight >= 0 {
        rec(weights, max_weight, &mut Vec::new(), &mut out);
    }
    out.sort();
    out
}

/// Linear combination of PBW monomials with [`CoeffPoly`] coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct NcElement {
    terms: BTreeMap<Monomial, CoeffPoly>,
}

impl NcElement {
    pub fn zero() -> Self {
        NcElement::default()
    }

    pub fn one(ngens: usize) -> Self {
        NcElement::term(CoeffPoly::one(), Monomial::unit(ngens))
    }

    pub fn term(c: CoeffPoly, m: Monomial) -> Self {
        let mut e = NcElement::zero();
        e.add_term(m, c);
        e
    }

    pub fn monomial(m: Monomial) -> Self {
        NcElement::term(CoeffPoly::one(), m)
    }

    pub fn generator(ngens: usize, g: usize) -> Self {
        NcElement::monomial(Monomial::generator(ngens, g))
    }

    pub fn scalar(ngens: usize, c: CoeffPoly) -> Self {
        NcElement::term(c, Monomial::unit(ngens))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &CoeffPoly)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> CoeffPoly {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: Monomial, c: CoeffPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += &c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn add_assign_scaled(&mut self, other: &NcElement, c: &CoeffPoly) {
        for (m, x) in &other.terms {
            self.add_term(m.clone(), x * c);
        }
    }

    pub fn add(&self, other: &NcElement) -> NcElement {
        let mut out = self.clone();
        out.add_assign_scaled(other, &CoeffPoly::one());
        out
    }

    pub fn sub(&self, other: &NcElement) -> NcElement {
        let mut out = self.clone();
        out.add_assign_scaled(other, &CoeffPoly::from_int(-1));
        out
    }

    pub fn neg(&self) -> NcElement {
        self.scale(&CoeffPoly::from_int(-1))
    }

    pub fn scale(&self, c: &CoeffPoly) -> NcElement {
        let mut out = NcElement::zero();
        out.add_assign_scaled(self, c);
        out
    }

    /// Drop terms whose coefficient has `a`-degree above `k`.
    pub fn truncate_a(&self, k: Option<u32>) -> NcElement {
        let Some(k) = k else { return self.clone() };
        NcElement {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.truncate_a(k as i32)))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    /// Apply `f` to every coefficient, dropping zeros.
    pub fn map_coeffs(&self, f: impl Fn(&CoeffPoly) -> CoeffPoly) -> NcElement {
        let mut out = NcElement::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    /// Constant part (coefficient of the unit monomial).
    pub fn constant_term(&self) -> CoeffPoly {
        self.terms
            .iter()
            .find(|(m, _)| m.is_unit())
            .map(|(_, c)| c.clone())
            .unwrap_or_default()
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn min_a_degree(&self) -> Option<i32> {
        self.terms.values().filter_map(CoeffPoly::min_a_degree).min()
    }

    pub fn max_a_degree(&self) -> Option<i32> {
        self.terms.values().filter_map(CoeffPoly::a_degree).max()
    }

    /// Canonical text form, e.g. `x*v - 2*a*v`.
    pub fn fmt_with(&self, names: &[String]) -> String {
        let terms: Vec<(String, bool)> = self
            .terms
            .iter()
            .map(|(m, c)| fmt_scaled(c, &m.fmt_with(names), m.is_unit()))
            .collect();
        join_signed(terms)
    }
}

impl fmt::Debug for NcElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

/// Render `c * body`; returns the text without a leading sign and whether it
/// is negative.
pub(crate) fn fmt_scaled(c: &CoeffPoly, body: &str, body_is_unit: bool) -> (String, bool) {
    if c.len() == 1 {
        let (e, r) = c.terms().next().unwrap();
        let neg = r.is_negative();
        let abs = CoeffPoly::monomial(r.abs(), *e);
        let cs = abs.to_string();
        let text = if body_is_unit {
            cs
        } else if abs.is_one() {
            body.to_string()
        } else {
            format!("{cs}*{body}")
        };
        return (text, neg);
    }
    if body_is_unit {
        (format!("({c})"), false)
    } else {
        (format!("({c})*{body}"), false)
    }
}

pub(crate) fn join_signed(terms: Vec<(String, bool)>) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (t, neg)) in terms.into_iter().enumerate() {
        match (i, neg) {
            (0, false) => out.push_str(&t),
            (0, true) => {
                out.push('-');
                out.push_str(&t);
            }
            (_, false) => {
                out.push_str(" + ");
                out.push_str(&t);
            }
            (_, true) => {
                out.push_str(" - ");
                out.push_str(&t);
            }
        }
    }
    out
}

/// Element of the rank-2 or rank-3 tensor power of an algebra.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TensorElement {
    rank: usize,
    terms: BTreeMap<Vec<Monomial>, CoeffPoly>,
}

impl TensorElement {
    pub fn zero(rank: usize) -> Self {
        TensorElement {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(rank: usize, ngens: usize) -> Self {
        TensorElement::term(rank, CoeffPoly::one(), vec![Monomial::unit(ngens); rank])
    }

    pub fn term(rank: usize, c: CoeffPoly, slots: Vec<Monomial>) -> Self {
        let mut t = TensorElement::zero(rank);
        t.add_term(slots, c);
        t
    }

    /// `x ⊗ y` for plain elements.
    pub fn outer(x: &NcElement, y: &NcElement) -> Self {
        let mut t = TensorElement::zero(2);
        for (m1, c1) in x.terms() {
            for (m2, c2) in y.terms() {
                t.add_term(vec![m1.clone(), m2.clone()], c1 * c2);
            }
        }
        t
    }

    /// `t ⊗ y`, appending one slot.
    pub fn append(&self, y: &NcElement) -> Self {
        let mut out = TensorElement::zero(self.rank + 1);
        for (slots, c1) in &self.terms {
            for (m2, c2) in y.terms() {
                let mut s = slots.clone();
                s.push(m2.clone());
                out.add_term(s, c1 * c2);
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Monomial>, &CoeffPoly)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, slots: &[Monomial]) -> CoeffPoly {
        self.terms.get(slots).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, slots: Vec<Monomial>, c: CoeffPoly) {
        debug_assert_eq!(slots.len(), self.rank);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(slots) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += &c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn add_assign_scaled(&mut self, other: &TensorElement, c: &CoeffPoly) {
        assert_eq!(self.rank, other.rank, "tensor rank mismatch");
        for (s, x) in &other.terms {
            self.add_term(s.clone(), x * c);
        }
    }

    pub fn add(&self, other: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        out.add_assign_scaled(other, &CoeffPoly::one());
        out
    }

    pub fn sub(&self, other: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        out.add_assign_scaled(other, &CoeffPoly::from_int(-1));
        out
    }

    pub fn scale(&self, c: &CoeffPoly) -> TensorElement {
        let mut out = TensorElement::zero(self.rank);
        out.add_assign_scaled(self, c);
        out
    }

    pub fn truncate_a(&self, k: Option<u32>) -> TensorElement {
        let Some(k) = k else { return self.clone() };
        let mut out = TensorElement::zero(self.rank);
        for (s, c) in &self.terms {
            out.add_term(s.clone(), c.truncate_a(k as i32));
        }
        out
    }

    /// Swap the two slots of a rank-2 tensor.
    pub fn twist(&self) -> TensorElement {
        assert_eq!(self.rank, 2, "twist is defined on rank 2");
        let mut out = TensorElement::zero(2);
        for (s, c) in &self.terms {
            out.add_term(vec![s[1].clone(), s[0].clone()], c.clone());
        }
        out
    }

    /// Replace slot `slot` by the tensor `f(monomial)` of rank `r`, producing
    /// a tensor of rank `self.rank + r - 1`.
    pub fn expand_slot(
        &self,
        slot: usize,
        new_rank: usize,
        mut f: impl FnMut(&Monomial) -> TensorElement,
    ) -> TensorElement {
        let mut out = TensorElement::zero(self.rank + new_rank - 1);
        for (s, c) in &self.terms {
            let img = f(&s[slot]);
            assert_eq!(img.rank, new_rank);
            for (is, ic) in &img.terms {
                let mut ns = Vec::with_capacity(out.rank);
                ns.extend_from_slice(&s[..slot]);
                ns.extend(is.iter().cloned());
                ns.extend_from_slice(&s[slot + 1..]);
                out.add_term(ns, c * ic);
            }
        }
        out
    }

    /// Apply a linear map to slot `slot` keeping the rank.
    pub fn map_slot(&self, slot: usize, mut f: impl FnMut(&Monomial) -> NcElement) -> TensorElement {
        let mut out = TensorElement::zero(self.rank);
        for (s, c) in &self.terms {
            for (m, x) in f(&s[slot]).terms() {
                let mut ns = s.clone();
                ns[slot] = m.clone();
                out.add_term(ns, c * x);
            }
        }
        out
    }

    /// Contract slot `slot` with a scalar-valued functional, lowering the rank.
    pub fn contract_slot(&self, slot: usize, mut f: impl FnMut(&Monomial) -> CoeffPoly) -> TensorElement {
        let mut out = TensorElement::zero(self.rank - 1);
        for (s, c) in &self.terms {
            let v = f(&s[slot]);
            if v.is_zero() {
                continue;
            }
            let mut ns = s.clone();
            ns.remove(slot);
            out.add_term(ns, c * &v);
        }
        out
    }

    /// View a rank-1 tensor as an element.
    pub fn into_element(self) -> NcElement {
        assert_eq!(self.rank, 1);
        let mut out = NcElement::zero();
        for (mut s, c) in self.terms {
            out.add_term(s.pop().unwrap(), c);
        }
        out
    }

    pub fn fmt_with(&self, names: &[String]) -> String {
        let terms: Vec<(String, bool)> = self
            .terms
            .iter()
            .map(|(s, c)| {
                let body: Vec<String> = s.iter().map(|m| m.fmt_with(names)).collect();
                fmt_scaled(c, &body.join("@"), false)
            })
            .collect();
        join_signed(terms)
    }
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

/// `Σ_{n ≥ start} scale · rate^n / n! · a^(n + a_shift) · prefix · g^n`,
/// the a-expansion of `scale · a^a_shift · prefix · exp(rate·a·g)` (minus its
/// first `start` terms).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpSeries {
    pub scale: Rational,
    pub rate: Rational,
    pub a_shift: i32,
    pub start: u32,
    pub prefix: Monomial,
    pub generator: usize,
}

impl ExpSeries {
    /// Terms with `a`-degree at most `k`.
    pub fn expand(&self, k: i32) -> NcElement {
        let mut out = NcElement::zero();
        let mut n = self.start;
        while n as i32 + self.a_shift <= k {
            let c = &self.scale * num_traits::pow(self.rate.clone(), n as usize) / factorial(n);
            let m = self
                .prefix
                .with_exp(self.generator, self.prefix.exp(self.generator) + n);
            out.add_term(m, CoeffPoly::constant(c).shift_a(n as i32 + self.a_shift));
            n += 1;
        }
        out
    }
}

/// Right-hand side of `g_j g_i - g_i g_j`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Correction {
    pub poly: NcElement,
    pub series: Vec<ExpSeries>,
}

impl Correction {
    pub fn poly(poly: NcElement) -> Self {
        Correction {
            poly,
            series: Vec::new(),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.series.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero() && self.series.is_empty()
    }

    fn expand(&self, k: Option<u32>) -> NcElement {
        let mut out = self.poly.truncate_a(k);
        if let Some(k) = k {
            for s in &self.series {
                out = out.add(&s.expand(k as i32));
            }
        }
        out
    }
}

/// Order in which the word rewriter picks an out-of-order adjacent pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

/// A finitely presented algebra with PBW normal ordering.
pub struct Algebra {
    name: String,
    generators: Vec<String>,
    rules: BTreeMap<(usize, usize), Correction>,
    truncation: Option<u32>,
    expanded: Vec<Vec<NcElement>>,
    cache: RwLock<HashMap<(Monomial, usize), NcElement>>,
}

impl Clone for Algebra {
    fn clone(&self) -> Self {
        Algebra {
            name: self.name.clone(),
            generators: self.generators.clone(),
            rules: self.rules.clone(),
            truncation: self.truncation,
            expanded: self.expanded.clone(),
            cache: RwLock::new(HashMap::new()),
        }
    }
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Algebra")
            .field("name", &self.name)
            .field("generators", &self.generators)
            .field("truncation", &self.truncation)
            .finish()
    }
}

impl Algebra {
    /// Build a presentation. Missing pairs commute. Fails if a series rule
    /// is present without a finite truncation order.
    pub fn new(
        name: impl Into<String>,
        generators: Vec<String>,
        rules: BTreeMap<(usize, usize), Correction>,
        truncation: Option<u32>,
    ) -> Result<Self, AlgebraError> {
        let name = name.into();
        let n = generators.len();
        let mut full = BTreeMap::new();
        for j in 0..n {
            for i in 0..j {
                full.insert((j, i), Correction::default());
            }
        }
        for ((j, i), c) in rules {
            if j >= n || i >= j {
                return Err(AlgebraError::InvalidRule(format!(
                    "pair ({j}, {i}) is not an out-of-order pair of {n} generators"
                )));
            }
            for s in &c.series {
                if s.prefix.ngens() != n || s.generator >= n {
                    return Err(AlgebraError::InvalidRule(format!(
                        "series on pair ({j}, {i}) has malformed prefix or generator"
                    )));
                }
                if s.prefix.last_generator().is_some_and(|g| g > s.generator) {
                    return Err(AlgebraError::InvalidRule(format!(
                        "series on pair ({j}, {i}) is not in normal order"
                    )));
                }
            }
            if !c.is_finite() && truncation.is_none() {
                return Err(AlgebraError::TruncationRequired {
                    algebra: name.clone(),
                    lhs: format!("{}*{}", generators[j], generators[i]),
                });
            }
            full.insert((j, i), c);
        }
        let mut expanded = vec![vec![NcElement::zero(); n]; n];
        for (&(j, i), c) in &full {
            expanded[j][i] = c.expand(truncation);
        }
        Ok(Algebra {
            name,
            generators,
            rules: full,
            truncation,
            expanded,
            cache: RwLock::new(HashMap::new()),
        })
    }

    /// Same relations, different truncation order.
    pub fn with_truncation(&self, truncation: Option<u32>) -> Result<Self, AlgebraError> {
        Algebra::new(
            self.name.clone(),
            self.generators.clone(),
            self.rules.clone(),
            truncation,
        )
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn ngens(&self) -> usize {
        self.generators.len()
    }

    pub fn truncation(&self) -> Option<u32> {
        self.truncation
    }

    pub fn rules(&self) -> &BTreeMap<(usize, usize), Correction> {
        &self.rules
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    /// The correction `g_j g_i - g_i g_j` expanded to the truncation order.
    pub fn correction(&self, j: usize, i: usize) -> &NcElement {
        &self.expanded[j][i]
    }

    pub fn one(&self) -> NcElement {
        NcElement::one(self.ngens())
    }

    pub fn gen(&self, g: usize) -> NcElement {
        NcElement::generator(self.ngens(), g)
    }

    pub fn scalar(&self, c: CoeffPoly) -> NcElement {
        NcElement::scalar(self.ngens(), c)
    }

    pub fn truncate(&self, e: &NcElement) -> NcElement {
        e.truncate_a(self.truncation)
    }

    fn check_index(&self, g: usize) -> Result<(), AlgebraError> {
        if g >= self.ngens() {
            return Err(AlgebraError::InvalidGenerator {
                algebra: self.name.clone(),
                index: g,
                count: self.ngens(),
            });
        }
        Ok(())
    }

    /// Normal form of `Σ c · g_{w1} g_{w2} …`.
    pub fn normalize(&self, raw: &[(CoeffPoly, Vec<usize>)]) -> Result<NcElement, AlgebraError> {
        let mut out = NcElement::zero();
        for (c, word) in raw {
            for &g in word {
                self.check_index(g)?;
            }
            let mut e = self.scalar(c.clone().truncate_opt(self.truncation));
            for &g in word {
                e = self.mul_gen(&e, g);
            }
            out = out.add(&e);
        }
        Ok(out)
    }

    /// Normal form computed by explicit adjacent-pair rewriting, with a
    /// chosen redex strategy. Returns the result and the number of rewrite
    /// steps taken.
    pub fn normalize_words(
        &self,
        raw: &[(CoeffPoly, Vec<usize>)],
        strategy: Strategy,
        step_bound: usize,
    ) -> Result<(NcElement, usize), AlgebraError> {
        let mut stack: Vec<(CoeffPoly, Vec<usize>)> = Vec::new();
        for (c, w) in raw {
            for &g in w {
                self.check_index(g)?;
            }
            let c = c.clone().truncate_opt(self.truncation);
            if !c.is_zero() {
                stack.push((c, w.clone()));
            }
        }
        let mut out = NcElement::zero();
        let mut steps = 0;
        while let Some((c, w)) = stack.pop() {
            let descents = (0..w.len().saturating_sub(1)).filter(|&k| w[k] > w[k + 1]);
            let pos = match strategy {
                Strategy::Leftmost => descents.min(),
                Strategy::Rightmost => descents.max(),
            };
            let Some(k) = pos else {
                let mut exps = vec![0; self.ngens()];
                for g in w {
                    exps[g] += 1;
                }
                out.add_term(Monomial(exps), c);
                continue;
            };
            steps += 1;
            if steps > step_bound {
                return Err(AlgebraError::StepBound(step_bound));
            }
            let (j, i) = (w[k], w[k + 1]);
            let mut swapped = w.clone();
            swapped.swap(k, k + 1);
            stack.push((c.clone(), swapped));
            for (m, x) in self.expanded[j][i].terms() {
                let coeff = (&c * x).truncate_opt(self.truncation);
                if coeff.is_zero() {
                    continue;
                }
                let mut nw = w[..k].to_vec();
                nw.extend(m.word());
                nw.extend_from_slice(&w[k + 2..]);
                stack.push((coeff, nw));
            }
        }
        Ok((out, steps))
    }

    /// `m · g` in normal form (memoized).
    pub fn mul_monomial_gen(&self, m: &Monomial, g: usize) -> NcElement {
        let key = (m.clone(), g);
        if let Some(hit) = self.cache.read().unwrap().get(&key) {
            return hit.clone();
        }
        let result = match m.last_generator() {
            Some(last) if last > g => {
                // m·g = m'·g_last·g = (m'·g)·g_last + m'·[g_last, g]
                let rest = m.with_exp(last, m.exp(last) - 1);
                let head = self.mul_monomial_gen(&rest, g);
                let head = self.mul_gen(&head, last);
                let tail = self.mul_monomial_elem(&rest, &self.expanded[last][g]);
                self.truncate(&head.add(&tail))
            }
            _ => NcElement::monomial(m.with_exp(g, m.exp(g) + 1)),
        };
        self.cache.write().unwrap().insert(key, result.clone());
        result
    }

    /// `e · g_g`.
    pub fn mul_gen(&self, e: &NcElement, g: usize) -> NcElement {
        let mut out = NcElement::zero();
        for (m, c) in e.terms() {
            out.add_assign_scaled(&self.mul_monomial_gen(m, g), c);
        }
        self.truncate(&out)
    }

    fn mul_monomial_elem(&self, m: &Monomial, e: &NcElement) -> NcElement {
        let mut out = NcElement::zero();
        for (m2, c) in e.terms() {
            out.add_assign_scaled(&self.mul_monomials(m, m2), c);
        }
        self.truncate(&out)
    }

    pub fn mul_monomials(&self, m1: &Monomial, m2: &Monomial) -> NcElement {
        let mut acc = NcElement::monomial(m1.clone());
        for g in m2.word() {
            acc = self.mul_gen(&acc, g);
        }
        acc
    }

    pub fn mul(&self, x: &NcElement, y: &NcElement) -> NcElement {
        let mut out = NcElement::zero();
        for (m1, c1) in x.terms() {
            for (m2, c2) in y.terms() {
                out.add_assign_scaled(&self.mul_monomials(m1, m2), &(c1 * c2));
            }
        }
        self.truncate(&out)
    }

    pub fn pow(&self, x: &NcElement, n: u32) -> NcElement {
        let mut acc = self.one();
        for _ in 0..n {
            acc = self.mul(&acc, x);
        }
        acc
    }

    pub fn commutator(&self, x: &NcElement, y: &NcElement) -> NcElement {
        self.mul(x, y).sub(&self.mul(y, x))
    }

    /// Slotwise product of two tensors of equal rank.
    pub fn tensor_mul(&self, s: &TensorElement, t: &TensorElement) -> Result<TensorElement, AlgebraError> {
        if s.rank() != t.rank() {
            return Err(AlgebraError::RankMismatch {
                left: s.rank(),
                right: t.rank(),
            });
        }
        let mut out = TensorElement::zero(s.rank());
        for (s1, c1) in s.terms() {
            for (s2, c2) in t.terms() {
                let mut partial = TensorElement::term(0, c1 * c2, Vec::new());
                for (m1, m2) in s1.iter().zip(s2) {
                    partial = partial.append(&self.mul_monomials(m1, m2));
                    if partial.is_zero() {
                        break;
                    }
                }
                out.add_assign_scaled(&partial, &CoeffPoly::one());
            }
        }
        Ok(out.truncate_a(self.truncation))
    }

    /// Multiply the slots of a rank-2 tensor: `m(x ⊗ y) = x·y`.
    pub fn multiply_slots(&self, t: &TensorElement) -> NcElement {
        assert_eq!(t.rank(), 2);
        let mut out = NcElement::zero();
        for (s, c) in t.terms() {
            out.add_assign_scaled(&self.mul_monomials(&s[0], &s[1]), c);
        }
        self.truncate(&out)
    }

    pub fn fmt(&self, e: &NcElement) -> String {
        e.fmt_with(&self.generators)
    }

    pub fn fmt_tensor(&self, t: &TensorElement) -> String {
        t.fmt_with(&self.generators)
    }

    pub fn fmt_monomial(&self, m: &Monomial) -> String {
        m.fmt_with(&self.generators)
    }
}

/// Drop `a`-powers above `k` from a coefficient.
pub fn truncate_element(e: &NcElement, k: Option<u32>) -> NcElement {
    e.truncate_a(k)
}

pub(crate) fn fmt_series_rule(s: &ExpSeries, names: &[String]) -> String {
    format!(
        "scale={} rate={} ashift={} start={} prefix={} gen={}",
        fmt_rational(&s.scale),
        fmt_rational(&s.rate),
        s.a_shift,
        s.start,
        s.prefix.fmt_with(names),
        names[s.generator]
    )
}

impl Zero for NcElement {
    fn zero() -> Self {
        NcElement::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl std::ops::Add for NcElement {
    type Output = NcElement;
    fn add(self, rhs: NcElement) -> NcElement {
        NcElement::add(&self, &rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{rat, Var};

    fn toy() -> Algebra {
        // x·y = y·x... with generators (y, x): x y - y x = y
        let mut rules = BTreeMap::new();
        rules.insert((1, 0), Correction::poly(NcElement::generator(2, 0)));
        Algebra::new("toy", vec!["y".into(), "x".into()], rules, None).unwrap()
    }

    #[test]
    fn monomial_enumeration_counts() {
        assert_eq!(monomials_up_to(4, 4).len(), 69);
        assert_eq!(monomials_up_to(4, 3).len(), 34);
        assert_eq!(monomials_of_degree(4, 0).len(), 1);
    }

    #[test]
    fn toy_reordering() {
        let alg = toy();
        let e = alg.normalize(&[(CoeffPoly::one(), vec![1, 0])]).unwrap();
        assert_eq!(alg.fmt(&e), "y + y*x");
        let (w, steps) = alg
            .normalize_words(&[(CoeffPoly::one(), vec![1, 1, 0])], Strategy::Rightmost, 100)
            .unwrap();
        let fast = alg.normalize(&[(CoeffPoly::one(), vec![1, 1, 0])]).unwrap();
        assert_eq!(w, fast);
        assert!(steps >= 2);
    }

    #[test]
    fn invalid_generator_is_reported() {
        let alg = toy();
        let err = alg.normalize(&[(CoeffPoly::one(), vec![5])]).unwrap_err();
        assert!(matches!(err, AlgebraError::InvalidGenerator { index: 5, .. }));
    }

    #[test]
    fn exp_series_expansion() {
        // e^{-2aP} with P the only generator: 1 - 2aP + 2a²P² - 4/3 a³P³
        let s = ExpSeries {
            scale: rat(1, 1),
            rate: rat(-2, 1),
            a_shift: 0,
            start: 0,
            prefix: Monomial::unit(1),
            generator: 0,
        };
        let e = s.expand(3);
        let names = vec!["P".to_string()];
        assert_eq!(e.fmt_with(&names), "1 - 2*a*P + 2*a^2*P^2 - 4/3*a^3*P^3");
    }

    #[test]
    fn tensor_rank_mismatch() {
        let alg = toy();
        let s = TensorElement::one(2, 2);
        let t = TensorElement::one(3, 2);
        assert!(matches!(
            alg.tensor_mul(&s, &t),
            Err(AlgebraError::RankMismatch { left: 2, right: 3 })
        ));
    }

    #[test]
    fn coefficient_formatting_in_elements() {
        let names = vec!["y".to_string(), "x".to_string()];
        let c = &CoeffPoly::one() - &CoeffPoly::var(Var::A).scale(&rat(2, 1));
        let e = NcElement::term(c, Monomial::generator(2, 1));
        assert_eq!(e.fmt_with(&names), "(1 - 2*a)*x");
    }
}
