//! Hopf-algebra presentations and axiom checkers.
//!
//! Structure maps are stored on generators only; [`Presentation::coproduct`]
//! and [`Presentation::counit`] extend them multiplicatively and
//! [`Presentation::antipode`] anti-multiplicatively.

use std::collections::{BTreeMap, HashMap};
use std::sync::RwLock;

use thiserror::Error;

use crate::coeff::{CoeffPoly, Rational};
use crate::ncpoly::{
    fmt_series_rule, monomials_up_to, Algebra, AlgebraError, Correction, ExpSeries, Monomial, NcElement,
    TensorElement,
};
use crate::parse::{parse_element, parse_scalar, parse_tensor, ParseError};
use crate::report::Report;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("{map} is not defined on generator {generator} of {algebra}")]
    MissingMap {
        map: &'static str,
        generator: String,
        algebra: String,
    },
}

/// A presented algebra with coproduct, counit and antipode on generators.
pub struct Presentation {
    pub algebra: Algebra,
    coproduct: BTreeMap<usize, TensorElement>,
    counit: BTreeMap<usize, CoeffPoly>,
    antipode: BTreeMap<usize, NcElement>,
    coproduct_cache: RwLock<HashMap<Monomial, TensorElement>>,
}

impl Clone for Presentation {
    fn clone(&self) -> Self {
        Presentation {
            algebra: self.algebra.clone(),
            coproduct: self.coproduct.clone(),
            counit: self.counit.clone(),
            antipode: self.antipode.clone(),
            coproduct_cache: RwLock::new(HashMap::new()),
        }
    }
}

impl std::fmt::Debug for Presentation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Presentation")
            .field("algebra", &self.algebra)
            .field("coproduct", &self.coproduct.len())
            .field("counit", &self.counit.len())
            .field("antipode", &self.antipode.len())
            .finish()
    }
}

impl Presentation {
    pub fn new(algebra: Algebra) -> Self {
        Presentation {
            algebra,
            coproduct: BTreeMap::new(),
            counit: BTreeMap::new(),
            antipode: BTreeMap::new(),
            coproduct_cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn name(&self) -> &str {
        self.algebra.name()
    }

    pub fn ngens(&self) -> usize {
        self.algebra.ngens()
    }

    pub fn truncation(&self) -> Option<u32> {
        self.algebra.truncation()
    }

    pub fn set_coproduct(&mut self, g: usize, value: TensorElement) {
        assert_eq!(value.rank(), 2);
        self.coproduct.insert(g, value);
        self.coproduct_cache.write().unwrap().clear();
    }

    pub fn set_counit(&mut self, g: usize, value: CoeffPoly) {
        self.counit.insert(g, value);
    }

    pub fn set_antipode(&mut self, g: usize, value: NcElement) {
        self.antipode.insert(g, value);
    }

    pub fn coproduct_on_gen(&self, g: usize) -> Option<&TensorElement> {
        self.coproduct.get(&g)
    }

    pub fn counit_on_gen(&self, g: usize) -> Option<&CoeffPoly> {
        self.counit.get(&g)
    }

    pub fn antipode_on_gen(&self, g: usize) -> Option<&NcElement> {
        self.antipode.get(&g)
    }

    /// True when all three maps are defined on every generator.
    pub fn is_complete(&self) -> bool {
        (0..self.ngens()).all(|g| {
            self.coproduct.contains_key(&g) && self.counit.contains_key(&g) && self.antipode.contains_key(&g)
        })
    }

    fn missing(&self, map: &'static str, g: usize) -> StructureError {
        StructureError::MissingMap {
            map,
            generator: self.algebra.generators()[g].clone(),
            algebra: self.name().to_string(),
        }
    }

    pub fn coproduct_monomial(&self, m: &Monomial) -> Result<TensorElement, StructureError> {
        if let Some(hit) = self.coproduct_cache.read().unwrap().get(m) {
            return Ok(hit.clone());
        }
        let Some(g) = m.last_generator() else {
            return Ok(TensorElement::one(2, self.ngens()));
        };
        let dg = self.coproduct.get(&g).ok_or_else(|| self.missing("coproduct", g))?;
        let prefix = self.coproduct_monomial(&m.with_exp(g, m.exp(g) - 1))?;
        let acc = self.algebra.tensor_mul(&prefix, dg).expect("rank 2");
        self.coproduct_cache.write().unwrap().insert(m.clone(), acc.clone());
        Ok(acc)
    }

    pub fn coproduct(&self, e: &NcElement) -> Result<TensorElement, StructureError> {
        let mut out = TensorElement::zero(2);
        for (m, c) in e.terms() {
            out.add_assign_scaled(&self.coproduct_monomial(m)?, c);
        }
        Ok(out.truncate_a(self.truncation()))
    }

    pub fn counit_monomial(&self, m: &Monomial) -> Result<CoeffPoly, StructureError> {
        let mut acc = CoeffPoly::one();
        for g in m.word() {
            let eg = self.counit.get(&g).ok_or_else(|| self.missing("counit", g))?;
            acc = &acc * eg;
        }
        Ok(acc.truncate_opt(self.truncation()))
    }

    pub fn counit(&self, e: &NcElement) -> Result<CoeffPoly, StructureError> {
        let mut out = CoeffPoly::zero();
        for (m, c) in e.terms() {
            out += &(c * &self.counit_monomial(m)?);
        }
        Ok(out.truncate_opt(self.truncation()))
    }

    pub fn antipode_monomial(&self, m: &Monomial) -> Result<NcElement, StructureError> {
        let mut acc = self.algebra.one();
        for g in m.word().into_iter().rev() {
            let sg = self.antipode.get(&g).ok_or_else(|| self.missing("antipode", g))?;
            acc = self.algebra.mul(&acc, sg);
        }
        Ok(acc)
    }

    pub fn antipode(&self, e: &NcElement) -> Result<NcElement, StructureError> {
        let mut out = NcElement::zero();
        for (m, c) in e.terms() {
            out.add_assign_scaled(&self.antipode_monomial(m)?, c);
        }
        Ok(self.algebra.truncate(&out))
    }

    /// `(Δ ⊗ id) ∘ Δ` applied to `e`.
    pub fn coproduct_left_iterated(&self, e: &NcElement) -> Result<TensorElement, StructureError> {
        let d = self.coproduct(e)?;
        self.expand(&d, 0)
    }

    /// `(id ⊗ Δ) ∘ Δ` applied to `e`.
    pub fn coproduct_right_iterated(&self, e: &NcElement) -> Result<TensorElement, StructureError> {
        let d = self.coproduct(e)?;
        self.expand(&d, 1)
    }

    fn expand(&self, t: &TensorElement, slot: usize) -> Result<TensorElement, StructureError> {
        let mut err = None;
        let out = t.expand_slot(slot, 2, |m| match self.coproduct_monomial(m) {
            Ok(v) => v,
            Err(e) => {
                err = Some(e);
                TensorElement::zero(2)
            }
        });
        match err {
            Some(e) => Err(e),
            None => Ok(out.truncate_a(self.truncation())),
        }
    }

    /// `(ε ⊗ id) ∘ Δ` or `(id ⊗ ε) ∘ Δ`.
    pub fn counit_contraction(&self, e: &NcElement, slot: usize) -> Result<NcElement, StructureError> {
        let d = self.coproduct(e)?;
        let mut err = None;
        let t = d.contract_slot(slot, |m| match self.counit_monomial(m) {
            Ok(v) => v,
            Err(e) => {
                err = Some(e);
                CoeffPoly::zero()
            }
        });
        match err {
            Some(e) => Err(e),
            None => Ok(self.algebra.truncate(&t.into_element())),
        }
    }

    /// `m ∘ (S ⊗ id) ∘ Δ` (slot 0) or `m ∘ (id ⊗ S) ∘ Δ` (slot 1).
    pub fn antipode_contraction(&self, e: &NcElement, slot: usize) -> Result<NcElement, StructureError> {
        let d = self.coproduct(e)?;
        let mut out = NcElement::zero();
        for (s, c) in d.terms() {
            let (left, right) = if slot == 0 {
                (self.antipode_monomial(&s[0])?, NcElement::monomial(s[1].clone()))
            } else {
                (NcElement::monomial(s[0].clone()), self.antipode_monomial(&s[1])?)
            };
            out.add_assign_scaled(&self.algebra.mul(&left, &right), c);
        }
        Ok(self.algebra.truncate(&out))
    }

    pub fn fmt(&self, e: &NcElement) -> String {
        self.algebra.fmt(e)
    }

    pub fn fmt_tensor(&self, t: &TensorElement) -> String {
        self.algebra.fmt_tensor(t)
    }
}

fn render_err<T>(r: &Result<T, StructureError>, ok: impl Fn(&T) -> String) -> String {
    match r {
        Ok(v) => ok(v),
        Err(e) => format!("<error: {e}>"),
    }
}

/// Evaluate coassociativity, both counit laws and both antipode laws on every
/// PBW monomial of degree `1..=max_degree`.
pub fn check_hopf_axioms(pres: &Presentation, max_degree: u32) -> Report {
    let mut report = Report::new(format!(
        "Hopf axioms for {} up to degree {max_degree}",
        pres.name()
    ));
    for m in monomials_up_to(pres.ngens(), max_degree) {
        check_hopf_axioms_on(pres, &m, &mut report);
    }
    report
}

/// The five Hopf identities on a single basis monomial.
pub fn check_hopf_axioms_on(pres: &Presentation, m: &Monomial, report: &mut Report) {
    let e = NcElement::monomial(m.clone());
    let subject = pres.algebra.fmt_monomial(m);
    let ft = |r: &Result<TensorElement, StructureError>| render_err(r, |t| pres.fmt_tensor(t));
    let fe = |r: &Result<NcElement, StructureError>| render_err(r, |x| pres.fmt(x));

    let l = pres.coproduct_left_iterated(&e);
    let r = pres.coproduct_right_iterated(&e);
    report.check_eq("coassociativity", &subject, &l, &r, ft);

    let expect = Ok(e.clone());
    let l = pres.counit_contraction(&e, 0);
    report.check_eq("counit-left", &subject, &l, &expect, fe);
    let l = pres.counit_contraction(&e, 1);
    report.check_eq("counit-right", &subject, &l, &expect, fe);

    let eps = pres.counit(&e).map(|c| pres.algebra.scalar(c));
    let l = pres.antipode_contraction(&e, 0);
    report.check_eq("antipode-left", &subject, &l, &eps, fe);
    let l = pres.antipode_contraction(&e, 1);
    report.check_eq("antipode-right", &subject, &l, &eps, fe);
}

/// Check `τ ∘ Δ = Δ` on the monomials of degree `1..=max_degree`.
pub fn check_cocommutativity(pres: &Presentation, max_degree: u32) -> Report {
    check_cocommutativity_on(pres, &monomials_up_to(pres.ngens(), max_degree))
}

/// Check `τ ∘ Δ = Δ` on a chosen list of monomials.
pub fn check_cocommutativity_on(pres: &Presentation, monomials: &[Monomial]) -> Report {
    let mut report = Report::new(format!("cocommutativity of {}", pres.name()));
    for m in monomials {
        let d = pres.coproduct_monomial(m);
        let twisted = d.clone().map(|t| t.twist());
        report.check_eq(
            "cocommutativity",
            pres.algebra.fmt_monomial(m),
            &twisted,
            &d,
            |r| render_err(r, |t| pres.fmt_tensor(t)),
        );
    }
    report
}

/// Monomials in the subalgebra generated by `gens`, degree `1..=max_degree`.
pub fn monomials_in_subalgebra(pres: &Presentation, gens: &[usize], max_degree: u32) -> Vec<Monomial> {
    monomials_up_to(pres.ngens(), max_degree)
        .into_iter()
        .filter(|m| (0..pres.ngens()).all(|g| m.exp(g) == 0 || gens.contains(&g)))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DocumentError {
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
    #[error("line {line}: {source}")]
    Parse { line: usize, source: ParseError },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Structured-text form of a presentation.
///
/// ```text
/// presentation Fq
/// generators mu x t v
/// truncation none
/// rule x*mu = 2*a*mu
/// series N*I scale=1 rate=-2 ashift=1 start=0 prefix=I^2 gen=P
/// coproduct x = 1@x + x@1 + v@t
/// counit x = 0
/// antipode x = -x + t*v
/// ```
///
/// A `rule` line gives `g_j g_i - g_i g_j` in normal order; a `series` line
/// adds an exponential term to the same correction. Pairs without a line
/// commute.
pub fn to_document(pres: &Presentation) -> String {
    let alg = &pres.algebra;
    let names = alg.generators();
    let mut out = String::new();
    out.push_str(&format!("presentation {}\n", alg.name()));
    out.push_str(&format!("generators {}\n", names.join(" ")));
    match alg.truncation() {
        Some(k) => out.push_str(&format!("truncation {k}\n")),
        None => out.push_str("truncation none\n"),
    }
    for (&(j, i), c) in alg.rules() {
        let lhs = format!("{}*{}", names[j], names[i]);
        if !c.poly.is_zero() {
            out.push_str(&format!("rule {lhs} = {}\n", c.poly.fmt_with(names)));
        }
        for s in &c.series {
            out.push_str(&format!("series {lhs} {}\n", fmt_series_rule(s, names)));
        }
    }
    for (g, name) in names.iter().enumerate() {
        if let Some(d) = pres.coproduct_on_gen(g) {
            out.push_str(&format!("coproduct {name} = {}\n", pres.fmt_tensor(d)));
        }
    }
    for (g, name) in names.iter().enumerate() {
        if let Some(c) = pres.counit_on_gen(g) {
            out.push_str(&format!("counit {name} = {c}\n"));
        }
    }
    for (g, name) in names.iter().enumerate() {
        if let Some(s) = pres.antipode_on_gen(g) {
            out.push_str(&format!("antipode {name} = {}\n", pres.fmt(s)));
        }
    }
    out
}

/// Inverse of [`to_document`].
pub fn from_document(text: &str) -> Result<Presentation, DocumentError> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect();
    let bad = |line: usize, message: String| DocumentError::Line { line, message };
    let mut name = None;
    let mut gens: Option<Vec<String>> = None;
    let mut truncation = None;
    let mut rest = Vec::new();
    for &(line, l) in &lines {
        let (key, body) = l.split_once(' ').unwrap_or((l, ""));
        let body = body.trim();
        match key {
            "presentation" => name = Some(body.to_string()),
            "generators" => gens = Some(body.split_whitespace().map(str::to_string).collect()),
            "truncation" => {
                truncation = Some(match body {
                    "none" => None,
                    k => Some(k.parse::<u32>().map_err(|e| bad(line, format!("bad truncation '{k}': {e}")))?),
                })
            }
            "rule" | "series" | "coproduct" | "counit" | "antipode" => rest.push((line, key, body)),
            other => return Err(bad(line, format!("unknown keyword '{other}'"))),
        }
    }
    let name = name.ok_or_else(|| bad(0, "missing 'presentation' line".into()))?;
    let gens = gens.ok_or_else(|| bad(0, "missing 'generators' line".into()))?;
    let truncation = truncation.ok_or_else(|| bad(0, "missing 'truncation' line".into()))?;
    // Right-hand sides of rules are already normal-ordered, so a relation-free
    // copy of the generators is enough to read them.
    let free = Algebra::new(name.clone(), gens.clone(), BTreeMap::new(), None)?;
    let gen_of = |line: usize, s: &str| {
        free.generator_index(s)
            .ok_or_else(|| bad(line, format!("unknown generator '{s}'")))
    };
    let pair_of = |line: usize, s: &str| -> Result<(usize, usize), DocumentError> {
        let (l, r) = s.split_once('*').ok_or_else(|| bad(line, format!("expected g*h, found '{s}'")))?;
        Ok((gen_of(line, l.trim())?, gen_of(line, r.trim())?))
    };
    let parse_err = |line: usize| move |source: ParseError| DocumentError::Parse { line, source };

    let mut rules: BTreeMap<(usize, usize), Correction> = BTreeMap::new();
    for &(line, key, body) in &rest {
        match key {
            "rule" => {
                let (lhs, rhs) = body.split_once('=').ok_or_else(|| bad(line, "expected '='".into()))?;
                let pair = pair_of(line, lhs.trim())?;
                let e = parse_element(rhs.trim(), &free).map_err(parse_err(line))?;
                rules.entry(pair).or_default().poly = e;
            }
            "series" => {
                let mut words = body.split_whitespace();
                let pair = pair_of(line, words.next().unwrap_or(""))?;
                let mut fields = BTreeMap::new();
                for w in words {
                    let (k, v) = w.split_once('=').ok_or_else(|| bad(line, format!("expected key=value, found '{w}'")))?;
                    fields.insert(k, v);
                }
                let field = |k: &str| fields.get(k).copied().ok_or_else(|| bad(line, format!("series is missing '{k}'")));
                let rational = |k: &str| -> Result<Rational, DocumentError> {
                    let c = parse_scalar(field(k)?, &free).map_err(parse_err(line))?;
                    c.as_constant().ok_or_else(|| bad(line, format!("'{k}' must be a rational number")))
                };
                let int = |k: &str| -> Result<i64, DocumentError> {
                    let v = field(k)?;
                    v.parse().map_err(|_| bad(line, format!("'{k}' must be an integer, found '{v}'")))
                };
                let prefix = parse_element(field("prefix")?, &free).map_err(parse_err(line))?;
                let prefix = match prefix.terms().next() {
                    Some((m, c)) if prefix.len() == 1 && c.is_one() => m.clone(),
                    _ => return Err(bad(line, "series prefix must be a single monomial".into())),
                };
                let series = ExpSeries {
                    scale: rational("scale")?,
                    rate: rational("rate")?,
                    a_shift: int("ashift")? as i32,
                    start: int("start")? as u32,
                    prefix,
                    generator: gen_of(line, field("gen")?)?,
                };
                rules.entry(pair).or_default().series.push(series);
            }
            _ => {}
        }
    }
    let algebra = Algebra::new(name, gens, rules, truncation)?;
    let mut pres = Presentation::new(algebra);
    for &(line, key, body) in &rest {
        if !matches!(key, "coproduct" | "counit" | "antipode") {
            continue;
        }
        let (lhs, rhs) = body.split_once('=').ok_or_else(|| bad(line, "expected '='".into()))?;
        let g = gen_of(line, lhs.trim())?;
        let alg = &pres.algebra;
        match key {
            "coproduct" => {
                let t = parse_tensor(rhs.trim(), alg, 2).map_err(parse_err(line))?;
                pres.set_coproduct(g, t);
            }
            "counit" => {
                let c = parse_scalar(rhs.trim(), alg).map_err(parse_err(line))?;
                pres.set_counit(g, c);
            }
            _ => {
                let e = parse_element(rhs.trim(), alg).map_err(parse_err(line))?;
                pres.set_antipode(g, e);
            }
        }
    }
    Ok(pres)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galilei::{fq, uq_bare, FQ_DOCUMENT, MU, N, T, V, X};

    #[test]
    fn missing_map_reported() {
        let uq = uq_bare(2);
        let err = uq.coproduct(&uq.algebra.gen(N)).unwrap_err();
        assert!(matches!(err, StructureError::MissingMap { map: "coproduct", .. }));
        assert!(uq.counit(&uq.algebra.gen(N)).is_err());
        assert!(!uq.is_complete());
    }

    #[test]
    fn coproduct_of_x() {
        let f = fq();
        let d = f.coproduct(&f.algebra.gen(X)).unwrap();
        assert_eq!(f.fmt_tensor(&d), "1@x + x@1 + v@t");
    }

    #[test]
    fn antipode_of_xv() {
        let f = fq();
        let xv = f.algebra.mul(&f.algebra.gen(X), &f.algebra.gen(V));
        assert_eq!(f.fmt(&f.antipode(&xv).unwrap()), "-2*a*v + x*v - t*v^2");
    }

    #[test]
    fn unit_maps() {
        let f = fq();
        let one = f.algebra.one();
        assert_eq!(f.coproduct(&one).unwrap(), TensorElement::one(2, 4));
        assert!(f.counit(&one).unwrap().is_one());
        assert_eq!(f.antipode(&one).unwrap(), one);
        assert!(f.counit(&f.algebra.gen(MU)).unwrap().is_zero());
        assert!(f.counit(&f.algebra.gen(T)).unwrap().is_zero());
    }

    #[test]
    fn document_round_trip() {
        let f = fq();
        assert_eq!(to_document(&f), FQ_DOCUMENT);
        let back = from_document(FQ_DOCUMENT).unwrap();
        assert_eq!(to_document(&back), FQ_DOCUMENT);
    }

    #[test]
    fn document_errors_carry_lines() {
        let bad = FQ_DOCUMENT.replace("coproduct x = ", "coproduct x = q + ");
        match from_document(&bad) {
            Err(DocumentError::Parse { line, .. }) => assert!(line > 1),
            other => panic!("{other:?}"),
        }
    }
}
