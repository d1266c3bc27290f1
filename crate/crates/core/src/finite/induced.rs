//! The induced module as a subspace of functions on G, and its
//! corepresentation picture.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::group::FiniteGroup;
use super::linalg::Matrix;
use super::rep::{class_values, fmt_class_function, induce_rep, ClassFunction, FiniteRep};
use super::scalar::fmt_scalar;
use super::{FiniteError, Scalar};
use crate::report::Report;

/// {φ ∈ F(G) : φ(l·y) = χ(l)φ(y)} with the left regular action (g≻φ)(x) = φ(xg).
#[derive(Clone, Debug)]
pub struct InducedCarrier {
    /// Basis functions, each of length |G|.
    pub basis: Vec<Vec<Scalar>>,
    /// Matrices of ≻ in that basis, or `None` if the span is not invariant.
    pub action: Option<FiniteRep>,
}

fn validate_character(group: &FiniteGroup, subgroup: &[usize], chi: &FiniteRep) -> Result<Vec<usize>, FiniteError> {
    let mut k = subgroup.to_vec();
    k.sort_unstable();
    k.dedup();
    if !group.is_subgroup(&k) {
        return Err(FiniteError::NotSubgroup(k));
    }
    if chi.dim() != 1 {
        return Err(FiniteError::DimensionMismatch {
            expected: 1,
            found: chi.dim(),
        });
    }
    if chi.domain() != k {
        return Err(FiniteError::NotSubgroup(chi.domain()));
    }
    Ok(k)
}

fn right_translate(group: &FiniteGroup, phi: &[Scalar], g: usize) -> Vec<Scalar> {
    (0..group.order()).map(|x| phi[group.mul(x, g)].clone()).collect()
}

/// Coordinates of `v` in the column span of `basis`, if it lies there.
fn coordinates(basis: &Matrix, v: &[Scalar]) -> Option<Vec<Scalar>> {
    basis.solve(v)
}

pub fn induced_carrier(group: &FiniteGroup, subgroup: &[usize], chi: &FiniteRep) -> Result<InducedCarrier, FiniteError> {
    let k = validate_character(group, subgroup, chi)?;
    let n = group.order();
    let mut rows = Vec::new();
    for &l in &k {
        let c = chi.matrix(l)[(0, 0)].clone();
        for y in 0..n {
            let mut row = vec![Scalar::zero(); n];
            let ly = group.mul(l, y);
            row[ly] = &row[ly] + Scalar::one();
            row[y] = &row[y] - &c;
            if row.iter().any(|x| !x.is_zero()) {
                rows.push(row);
            }
        }
    }
    let basis = if rows.is_empty() {
        Matrix::zeros(0, n).nullspace()
    } else {
        Matrix::from_rows(rows).nullspace()
    };
    let bmat = Matrix::from_columns(n, &basis);
    let d = basis.len();
    let mut mats = BTreeMap::new();
    for g in 0..n {
        let mut m = Matrix::zeros(d, d);
        for (j, b) in basis.iter().enumerate() {
            let Some(c) = coordinates(&bmat, &right_translate(group, b, g)) else {
                return Ok(InducedCarrier { basis, action: None });
            };
            for (i, x) in c.into_iter().enumerate() {
                m[(i, j)] = x;
            }
        }
        mats.insert(g, m);
    }
    let action = FiniteRep::new(group, d, mats).ok();
    Ok(InducedCarrier { basis, action })
}

fn record_characters(report: &mut Report, group: &FiniteGroup, identity: &str, a: &ClassFunction, b: &ClassFunction) {
    let passed = a == b;
    let note = Some(format!("{} vs {}", fmt_class_function(group, a), fmt_class_function(group, b)));
    report.assert(identity, "all elements", passed, note);
}

/// The one-dimensional carrier is ≻-invariant and carries induce_rep's character.
pub fn check_prop2(group: &FiniteGroup, subgroup: &[usize], chi: &FiniteRep) -> Result<Report, FiniteError> {
    let carrier = induced_carrier(group, subgroup, chi)?;
    let k = validate_character(group, subgroup, chi)?;
    let mut report = Report::new(format!("induced module inside F({}) for |K| = {}", group.name(), k.len()));
    report.assert(
        "carrier-dimension-is-index",
        "dim",
        carrier.basis.len() * k.len() == group.order(),
        Some(format!("dimension {}", carrier.basis.len())),
    );
    let Some(action) = &carrier.action else {
        report.assert("carrier-invariant-under-left-action", "all elements", false, None);
        return Ok(report);
    };
    report.assert("carrier-invariant-under-left-action", "all elements", true, None);
    let induced = induce_rep(group, &k, chi)?;
    record_characters(&mut report, group, "character-matches-induced", &action.character(), &induced.character());
    let classes: Vec<String> = class_values(group, &action.character()).iter().map(fmt_scalar).collect();
    report.finding("character-by-class", "classes", true, Some(format!("({})", classes.join(", "))));
    Ok(report)
}

/// Values indexed `[k][y]`.
pub type Table = Vec<Vec<Scalar>>;

/// Both sides of (id⊗L)F = (β⊗id)F for F = 1⊗φ, as tables indexed [k][y]
/// over the subgroup elements k and all y, where L = (π⊗id)∘Δ.
pub fn coaction_condition(
    group: &FiniteGroup,
    subgroup: &[usize],
    chi: &FiniteRep,
    phi: &[Scalar],
) -> Result<(Table, Table), FiniteError> {
    let k = validate_character(group, subgroup, chi)?;
    let n = group.order();
    // Δφ(x, y) = φ(xy); π restricts the first slot to K
    let delta: Vec<Vec<Scalar>> = (0..n)
        .map(|x| (0..n).map(|y| phi[group.mul(x, y)].clone()).collect())
        .collect();
    let lhs = k.iter().map(|&l| delta[l].clone()).collect();
    let rhs = k
        .iter()
        .map(|&l| {
            let c = &chi.matrix(l)[(0, 0)];
            phi.iter().map(|v| c * v).collect()
        })
        .collect();
    Ok((lhs, rhs))
}

/// Coaction condition, the induced coaction ▶F = (id⊗Δ)F landing in V↑⊗C,
/// corepresentation laws, and duality with the induced representation.
pub fn check_comodule_induction(group: &FiniteGroup, subgroup: &[usize], chi: &FiniteRep) -> Result<Report, FiniteError> {
    let carrier = induced_carrier(group, subgroup, chi)?;
    let k = validate_character(group, subgroup, chi)?;
    let n = group.order();
    let mut report = Report::new(format!("induced corepresentation of F({}) for |K| = {}", group.name(), k.len()));
    let mut coaction_ok = true;
    for phi in &carrier.basis {
        let (lhs, rhs) = coaction_condition(group, &k, chi, phi)?;
        coaction_ok &= lhs == rhs;
    }
    report.assert("coaction-condition", "carrier basis", coaction_ok, None);
    let bmat = Matrix::from_columns(n, &carrier.basis);
    let d = carrier.basis.len();
    // c_ij(y) with b_j(x y) = Σ_i b_i(x) c_ij(y)
    let mut corep: Vec<Matrix> = vec![Matrix::zeros(d, d); n];
    let mut lands = true;
    for (j, b) in carrier.basis.iter().enumerate() {
        for (y, cy) in corep.iter_mut().enumerate() {
            let column = right_translate(group, b, y);
            match coordinates(&bmat, &column) {
                Some(c) => {
                    for (i, x) in c.into_iter().enumerate() {
                        cy[(i, j)] = x;
                    }
                }
                None => lands = false,
            }
        }
    }
    report.assert("induced-coaction-lands-in-carrier", "carrier basis", lands, None);
    if !lands {
        return Ok(report);
    }
    report.assert(
        "corepresentation-counit",
        "c(e) = 1",
        corep[group.identity()] == Matrix::identity(d),
        None,
    );
    let coassoc = (0..n).all(|x| (0..n).all(|y| corep[group.mul(x, y)] == &corep[x] * &corep[y]));
    report.assert("corepresentation-coassociativity", "c(xy) = c(x)c(y)", coassoc, None);
    let dual_matches = carrier
        .action
        .as_ref()
        .is_some_and(|a| (0..n).all(|g| *a.matrix(g) == corep[g]));
    report.assert("coaction-dualizes-to-action", "all elements", dual_matches, None);
    let corep_char: ClassFunction = corep.iter().enumerate().map(|(g, m)| (g, m.trace())).collect();
    let induced = induce_rep(group, &k, chi)?;
    record_characters(&mut report, group, "corepresentation-character-matches-induced", &corep_char, &induced.character());
    Ok(report)
}
