//! Finite groups: group algebras, induced representations, G-spaces with
//! their invariant integrals, and the corepresentation picture of induction.

mod group;
mod induced;
mod linalg;
mod rep;
mod scalar;
mod space;

use thiserror::Error;

pub use group::FiniteGroup;
pub use induced::{check_comodule_induction, check_prop2, coaction_condition, induced_carrier, InducedCarrier, Table};
pub use linalg::Matrix;
pub use rep::{
    check_frobenius, class_values, dualize_action, fmt_class_function, induce_rep, inner_product,
    irreducible_characters, one_dim_characters, restrict_function, two_dim_irrep, ClassFunction, FiniteRep,
};
pub use scalar::{fmt_scalar, gi, i_pow, int, parse_scalar, ratio, Scalar};
pub use space::{
    check_integral, check_unitarity, check_unitarity_with, invariant_functionals, invariant_integral, GSpace,
    GroupAlgebraElement, IntegralFunctional, StarRule,
};

use crate::report::Report;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FiniteError {
    #[error("group file line {line}: {message}")]
    Format { line: usize, message: String },
    #[error("invalid multiplication table: {0}")]
    InvalidTable(String),
    #[error("unknown group {0}")]
    UnknownGroup(String),
    #[error("elements {0:?} do not form a subgroup")]
    NotSubgroup(Vec<usize>),
    #[error("not a representation: {0}")]
    NotHomomorphism(String),
    #[error("expected dimension {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid G-space: {0}")]
    InvalidGSpace(String),
    #[error("action is not transitive ({orbits} orbits); the invariant integral is not unique")]
    NotTransitive { orbits: usize },
    #[error("irreducible characters of {0} are not available over Gaussian rationals")]
    CharacterTableUnavailable(String),
}

/// Every finite-group check on the built-in examples.
pub fn verify_suite() -> Result<Report, FiniteError> {
    let mut report = Report::new("finite-group suite");
    for name in ["Z4", "S3", "D4"] {
        report.extend(check_frobenius(&FiniteGroup::builtin(name)?)?);
    }
    for name in ["Z4", "Z6", "S3", "D4", "Q8"] {
        let g = FiniteGroup::builtin(name)?;
        for k in g.subgroups() {
            let x = GSpace::cosets(&g, &k)?;
            report.extend(check_integral(&x, &g)?);
        }
    }
    let s3 = FiniteGroup::symmetric3();
    let a3 = s3.generated(&[3]);
    report.extend(check_unitarity(&GSpace::cosets(&s3, &a3)?, &s3)?);
    report.extend(check_unitarity(&GSpace::regular(&s3), &s3)?);
    let mutated = check_unitarity_with(&GSpace::regular(&s3), &s3, StarRule::Identity)?;
    report.assert(
        "mutated-star-detected",
        "g* = g on the regular S3-space",
        mutated.failures_of("star-unitarity").count() == 2,
        Some(format!("{} failing elements", mutated.failures_of("star-unitarity").count())),
    );
    for name in ["Z4", "S3", "D4", "Q8"] {
        let g = FiniteGroup::builtin(name)?;
        for k in g.subgroups() {
            for chi in one_dim_characters(&g, &k)? {
                let chi = FiniteRep::one_dimensional(&g, &chi)?;
                report.extend(check_prop2(&g, &k, &chi)?);
                report.extend(check_comodule_induction(&g, &k, &chi)?);
            }
        }
    }
    let z3 = FiniteGroup::cyclic(3)?;
    let reg = FiniteRep::regular(&z3);
    let dual = dualize_action(&z3, &reg);
    let conj: ClassFunction = reg.character().into_iter().map(|(g, v)| (g, v.conj())).collect();
    report.check_eq("dual-character-is-conjugate", "Z3 regular", &dual.character(), &conj, |c| {
        fmt_class_function(&z3, c)
    });
    report.check_eq("double-dual-is-original", "Z3 regular", &dualize_action(&z3, &dual), &reg, |r| {
        fmt_class_function(&z3, &r.character())
    });
    Ok(report)
}
