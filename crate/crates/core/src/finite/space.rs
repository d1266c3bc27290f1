//! Group algebra, G-spaces, invariant integrals and the unitarity check.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::group::FiniteGroup;
use super::linalg::Matrix;
use super::scalar::{fmt_scalar, gi, int};
use super::{FiniteError, Scalar};
use crate::report::Report;

/// Formal linear combination Σ c_g g with no zero coefficients stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    coeffs: BTreeMap<usize, Scalar>,
}

/// Star structure on group elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StarRule {
    /// g* = g⁻¹
    Inverse,
    /// g* = g
    Identity,
}

impl GroupAlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(g: usize) -> Self {
        Self::term(Scalar::one(), g)
    }

    pub fn term(c: Scalar, g: usize) -> Self {
        let mut e = Self::zero();
        e.add_term(c, g);
        e
    }

    pub fn add_term(&mut self, c: Scalar, g: usize) {
        let entry = self.coeffs.entry(g).or_insert_with(Scalar::zero);
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.coeffs.remove(&g);
        }
    }

    pub fn coeffs(&self) -> &BTreeMap<usize, Scalar> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&g, c) in &other.coeffs {
            out.add_term(c.clone(), g);
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero();
        for (&g, x) in &self.coeffs {
            out.add_term(x * c, g);
        }
        out
    }

    pub fn mul(&self, other: &Self, group: &FiniteGroup) -> Self {
        let mut out = Self::zero();
        for (&g, x) in &self.coeffs {
            for (&h, y) in &other.coeffs {
                out.add_term(x * y, group.mul(g, h));
            }
        }
        out
    }

    /// S(g) = g⁻¹ extended linearly.
    pub fn antipode(&self, group: &FiniteGroup) -> Self {
        let mut out = Self::zero();
        for (&g, x) in &self.coeffs {
            out.add_term(x.clone(), group.inv(g));
        }
        out
    }

    /// Antilinear star extending the rule on group elements.
    pub fn star(&self, group: &FiniteGroup, rule: StarRule) -> Self {
        let mut out = Self::zero();
        for (&g, x) in &self.coeffs {
            let gs = match rule {
                StarRule::Inverse => group.inv(g),
                StarRule::Identity => g,
            };
            out.add_term(x.conj(), gs);
        }
        out
    }

    pub fn counit(&self) -> Scalar {
        self.coeffs.values().fold(Scalar::zero(), |a, x| a + x)
    }

    pub fn to_string(&self, group: &FiniteGroup) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(&g, c)| format!("({})*{}", fmt_scalar(c), group.label(g)))
            .collect();
        parts.join(" + ")
    }
}

/// A finite set with a right action x⊲g.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GSpace {
    action: Vec<Vec<usize>>,
}

impl GSpace {
    /// `action[x][g]` is x⊲g; validated against the group law.
    pub fn new(group: &FiniteGroup, action: Vec<Vec<usize>>) -> Result<Self, FiniteError> {
        let m = action.len();
        let bad = |s: String| Err(FiniteError::InvalidGSpace(s));
        for (x, row) in action.iter().enumerate() {
            if row.len() != group.order() || row.iter().any(|&y| y >= m) {
                return bad(format!("row for point {x} is malformed"));
            }
            if row[group.identity()] != x {
                return bad(format!("identity moves point {x}"));
            }
            for g in 0..group.order() {
                for h in 0..group.order() {
                    if action[row[g]][h] != row[group.mul(g, h)] {
                        return bad(format!(
                            "(x{x}⊲{})⊲{} != x{x}⊲({}{})",
                            group.label(g),
                            group.label(h),
                            group.label(g),
                            group.label(h)
                        ));
                    }
                }
            }
        }
        Ok(GSpace { action })
    }

    /// G acting on itself by right multiplication.
    pub fn regular(group: &FiniteGroup) -> Self {
        let action = group.table().to_vec();
        GSpace::new(group, action).expect("regular action")
    }

    /// Right cosets K·r, indexed by their smallest-index representatives.
    pub fn cosets(group: &FiniteGroup, subgroup: &[usize]) -> Result<Self, FiniteError> {
        if !group.is_subgroup(subgroup) {
            return Err(FiniteError::NotSubgroup(subgroup.to_vec()));
        }
        let reps = group.right_coset_representatives(subgroup);
        let action = reps
            .iter()
            .map(|&r| {
                (0..group.order())
                    .map(|g| group.coset_of(subgroup, &reps, group.mul(r, g)))
                    .collect()
            })
            .collect();
        GSpace::new(group, action)
    }

    /// Disjoint union, points of `other` numbered after those of `self`.
    pub fn disjoint_union(&self, other: &GSpace) -> GSpace {
        let shift = self.points();
        let mut action = self.action.clone();
        action.extend(other.action.iter().map(|row| row.iter().map(|y| y + shift).collect()));
        GSpace { action }
    }

    pub fn points(&self) -> usize {
        self.action.len()
    }

    pub fn act(&self, x: usize, g: usize) -> usize {
        self.action[x][g]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.action
    }

    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.points()];
        let mut out = Vec::new();
        for x in 0..self.points() {
            if seen[x] {
                continue;
            }
            let mut orbit: Vec<usize> = self.action[x].clone();
            orbit.sort_unstable();
            orbit.dedup();
            for &y in &orbit {
                seen[y] = true;
            }
            out.push(orbit);
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.orbits().len() == 1
    }

    /// (g⊳f)(x) = f(x⊲g).
    pub fn act_function(&self, g: usize, f: &[Scalar]) -> Vec<Scalar> {
        (0..self.points()).map(|x| f[self.act(x, g)].clone()).collect()
    }

    pub fn act_element(&self, h: &GroupAlgebraElement, f: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.points()];
        for (&g, c) in h.coeffs() {
            for (o, v) in out.iter_mut().zip(self.act_function(g, f)) {
                *o = &*o + c * v;
            }
        }
        out
    }

    pub fn delta(&self, x: usize) -> Vec<Scalar> {
        let mut f = vec![Scalar::zero(); self.points()];
        f[x] = Scalar::one();
        f
    }
}

/// Linear form I(f) = Σ w_x f(x) on functions on a G-space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralFunctional {
    pub weights: Vec<Scalar>,
}

impl IntegralFunctional {
    pub fn eval(&self, f: &[Scalar]) -> Scalar {
        self.weights.iter().zip(f).fold(Scalar::zero(), |a, (w, x)| a + w * x)
    }
}

/// Basis of all functionals w with I(g⊳δ_y) = I(δ_y) for every g, y.
pub fn invariant_functionals(space: &GSpace, group: &FiniteGroup) -> Vec<Vec<Scalar>> {
    let m = space.points();
    let mut rows = Vec::new();
    for g in 0..group.order() {
        for y in 0..m {
            // g⊳δ_y = δ_{y⊲g⁻¹}
            let z = space.act(y, group.inv(g));
            if z == y {
                continue;
            }
            let mut row = vec![Scalar::zero(); m];
            row[z] = Scalar::one();
            row[y] = -Scalar::one();
            rows.push(row);
        }
    }
    if rows.is_empty() {
        return Matrix::zeros(0, m).nullspace();
    }
    Matrix::from_rows(rows).nullspace()
}

/// The normalized invariant integral I(f) = |X|⁻¹ Σ f(x).
pub fn invariant_integral(space: &GSpace, group: &FiniteGroup) -> Result<IntegralFunctional, FiniteError> {
    if !space.is_transitive() {
        return Err(FiniteError::NotTransitive {
            orbits: space.orbits().len(),
        });
    }
    let m = space.points();
    let w = Scalar::one() / int(m as i64);
    let integral = IntegralFunctional { weights: vec![w; m] };
    debug_assert!((0..group.order()).all(|g| (0..m).all(|y| {
        let d = space.delta(y);
        integral.eval(&space.act_function(g, &d)) == integral.eval(&d)
    })));
    Ok(integral)
}

/// Invariance, normalization and uniqueness of the integral.
pub fn check_integral(space: &GSpace, group: &FiniteGroup) -> Result<Report, FiniteError> {
    let integral = invariant_integral(space, group)?;
    let mut report = Report::new(format!("invariant integral on {} points of {}", space.points(), group.name()));
    let m = space.points();
    let ones = vec![Scalar::one(); m];
    report.check_eq("integral-normalized", "I(1)", &integral.eval(&ones), &Scalar::one(), fmt_scalar);
    for g in 0..group.order() {
        let ok = (0..m).all(|y| {
            let d = space.delta(y);
            integral.eval(&space.act_function(g, &d)) == integral.eval(&d)
        });
        report.assert("integral-invariant", group.label(g), ok, None);
    }
    let solutions = invariant_functionals(space, group);
    report.assert(
        "invariant-functional-unique",
        "solution space dimension",
        solutions.len() == 1,
        Some(format!("dimension {}", solutions.len())),
    );
    if let [w] = solutions.as_slice() {
        let lambda = w[0].clone() / integral.weights[0].clone();
        let proportional = w.iter().zip(&integral.weights).all(|(a, b)| *a == &lambda * b);
        report.assert("invariant-functional-unique", "solution is a multiple of I", proportional, None);
    }
    Ok(report)
}

fn conj_vec(f: &[Scalar]) -> Vec<Scalar> {
    f.iter().map(|x| x.conj()).collect()
}

fn pointwise(f: &[Scalar], g: &[Scalar]) -> Vec<Scalar> {
    f.iter().zip(g).map(|(a, b)| a * b).collect()
}

/// Unitarity of the regular action for the form ⟨a, b⟩ = I(a* b) and the
/// compatibility (h⊳a)* = S(h)*⊳a*, under g* = g⁻¹.
pub fn check_unitarity(space: &GSpace, group: &FiniteGroup) -> Result<Report, FiniteError> {
    check_unitarity_with(space, group, StarRule::Inverse)
}

pub fn check_unitarity_with(space: &GSpace, group: &FiniteGroup, rule: StarRule) -> Result<Report, FiniteError> {
    let integral = invariant_integral(space, group)?;
    let m = space.points();
    let form = |a: &[Scalar], b: &[Scalar]| integral.eval(&pointwise(&conj_vec(a), b));
    let mut report = Report::new(format!("unitarity on {} points of {}", m, group.name()));
    let i = gi(0, 1);
    let tests: Vec<Vec<Scalar>> = (0..m)
        .flat_map(|x| {
            let d = space.delta(x);
            let id: Vec<Scalar> = d.iter().map(|v| v * &i).collect();
            [d, id]
        })
        .collect();
    for g in 0..group.order() {
        let h = GroupAlgebraElement::basis(g);
        let hs = h.star(group, rule);
        let mut unitary = true;
        for f1 in &tests {
            for f2 in &tests {
                let lhs = form(&space.act_element(&hs, f1), f2);
                let rhs = form(f1, &space.act_function(g, f2));
                unitary &= lhs == rhs;
            }
        }
        report.assert("star-unitarity", group.label(g), unitary, None);
        let mut compatible = true;
        for h in [h.clone(), GroupAlgebraElement::term(i.clone(), g)] {
            let sh_star = h.antipode(group).star(group, rule);
            for a in &tests {
                let lhs = conj_vec(&space.act_element(&h, a));
                let rhs = space.act_element(&sh_star, &conj_vec(a));
                compatible &= lhs == rhs;
            }
        }
        report.assert("star-action-compatibility", group.label(g), compatible, None);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::scalar::ratio;

    #[test]
    fn z4_regular_integral() {
        let z4 = FiniteGroup::cyclic(4).unwrap();
        let x = GSpace::regular(&z4);
        let i = invariant_integral(&x, &z4).unwrap();
        assert_eq!(i.weights, vec![ratio(1, 4); 4]);
        assert_eq!(i.eval(&[int(1), int(1), int(1), int(1)]), int(1));
        assert_eq!(invariant_functionals(&x, &z4).len(), 1);
    }

    #[test]
    fn non_transitive_refused() {
        let s3 = FiniteGroup::symmetric3();
        let a3 = s3.generated(&[3]);
        let x = GSpace::cosets(&s3, &a3).unwrap();
        let two = x.disjoint_union(&x);
        assert!(matches!(invariant_integral(&two, &s3), Err(FiniteError::NotTransitive { orbits: 2 })));
        assert_eq!(invariant_functionals(&two, &s3).len(), 2);
    }

    #[test]
    fn unitarity_and_mutation() {
        let s3 = FiniteGroup::symmetric3();
        let a3 = s3.generated(&[3]);
        let x = GSpace::cosets(&s3, &a3).unwrap();
        assert!(check_unitarity(&x, &s3).unwrap().passed());
        let reg = GSpace::regular(&s3);
        let bad = check_unitarity_with(&reg, &s3, StarRule::Identity).unwrap();
        let failing: Vec<&str> = bad.failures_of("star-unitarity").map(|c| c.subject.as_str()).collect();
        assert_eq!(failing, ["(123)", "(132)"]);
    }

    #[test]
    fn bad_action_rejected() {
        let z2 = FiniteGroup::cyclic(2).unwrap();
        assert!(GSpace::new(&z2, vec![vec![0, 1], vec![1, 1]]).is_err());
    }

    #[test]
    fn group_algebra_product() {
        let s3 = FiniteGroup::symmetric3();
        let a = GroupAlgebraElement::basis(1).add(&GroupAlgebraElement::term(gi(0, 1), 3));
        let sq = a.mul(&a, &s3);
        assert_eq!(sq.counit(), a.counit() * a.counit());
        assert_eq!(a.antipode(&s3).antipode(&s3), a);
        assert_eq!(a.star(&s3, StarRule::Inverse).star(&s3, StarRule::Inverse), a);
    }
}
