//! Matrix representations, induction and characters.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::group::FiniteGroup;
use super::linalg::Matrix;
use super::scalar::{fmt_scalar, gi, i_pow, int};
use super::{FiniteError, Scalar};
use crate::report::Report;

/// Values of a function on (a subset of) the group, keyed by element index.
pub type ClassFunction = BTreeMap<usize, Scalar>;

/// A representation of a subgroup (possibly all) of a finite group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteRep {
    dim: usize,
    matrices: BTreeMap<usize, Matrix>,
}

impl FiniteRep {
    /// Validate ρ(e) = 1 and ρ(gh) = ρ(g)ρ(h) over the domain, which must be a subgroup.
    pub fn new(group: &FiniteGroup, dim: usize, matrices: BTreeMap<usize, Matrix>) -> Result<Self, FiniteError> {
        let domain: Vec<usize> = matrices.keys().copied().collect();
        if !group.is_subgroup(&domain) {
            return Err(FiniteError::NotSubgroup(domain));
        }
        for m in matrices.values() {
            if m.rows() != dim || m.cols() != dim {
                return Err(FiniteError::DimensionMismatch {
                    expected: dim,
                    found: m.rows().max(m.cols()),
                });
            }
        }
        if matrices[&group.identity()] != Matrix::identity(dim) {
            return Err(FiniteError::NotHomomorphism(format!(
                "identity {} is not sent to the identity matrix",
                group.label(group.identity())
            )));
        }
        for (&g, mg) in &matrices {
            for (&h, mh) in &matrices {
                if matrices[&group.mul(g, h)] != mg * mh {
                    return Err(FiniteError::NotHomomorphism(format!(
                        "rho({}*{}) != rho({})*rho({})",
                        group.label(g),
                        group.label(h),
                        group.label(g),
                        group.label(h)
                    )));
                }
            }
        }
        Ok(FiniteRep { dim, matrices })
    }

    pub fn trivial(group: &FiniteGroup, domain: &[usize]) -> Result<Self, FiniteError> {
        let mats = domain.iter().map(|&g| (g, Matrix::identity(1))).collect();
        FiniteRep::new(group, 1, mats)
    }

    /// Left regular representation on delta functions: ρ(g)δ_h = δ_{gh}.
    pub fn regular(group: &FiniteGroup) -> Self {
        let n = group.order();
        let mats = (0..n)
            .map(|g| {
                let mut m = Matrix::zeros(n, n);
                for h in 0..n {
                    m[(group.mul(g, h), h)] = Scalar::one();
                }
                (g, m)
            })
            .collect();
        FiniteRep::new(group, n, mats).expect("regular representation")
    }

    /// One-dimensional representation from its values.
    pub fn one_dimensional(group: &FiniteGroup, values: &ClassFunction) -> Result<Self, FiniteError> {
        let mats = values
            .iter()
            .map(|(&g, v)| (g, Matrix::from_rows(vec![vec![v.clone()]])))
            .collect();
        FiniteRep::new(group, 1, mats)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn domain(&self) -> Vec<usize> {
        self.matrices.keys().copied().collect()
    }

    pub fn matrix(&self, g: usize) -> &Matrix {
        &self.matrices[&g]
    }

    pub fn matrices(&self) -> &BTreeMap<usize, Matrix> {
        &self.matrices
    }

    pub fn character(&self) -> ClassFunction {
        self.matrices.iter().map(|(&g, m)| (g, m.trace())).collect()
    }

    /// Restriction to a subgroup of the domain.
    pub fn restrict(&self, group: &FiniteGroup, subgroup: &[usize]) -> Result<Self, FiniteError> {
        let mats = subgroup
            .iter()
            .map(|g| {
                self.matrices
                    .get(g)
                    .cloned()
                    .map(|m| (*g, m))
                    .ok_or_else(|| FiniteError::NotSubgroup(subgroup.to_vec()))
            })
            .collect::<Result<_, _>>()?;
        FiniteRep::new(group, self.dim, mats)
    }
}

/// Induce ρ from K to G on V-valued functions with f(kg) = ρ(k)f(g), realized
/// by the values on the smallest-index right coset representatives.
pub fn induce_rep(group: &FiniteGroup, subgroup: &[usize], rho: &FiniteRep) -> Result<FiniteRep, FiniteError> {
    let mut k: Vec<usize> = subgroup.to_vec();
    k.sort_unstable();
    k.dedup();
    if !group.is_subgroup(&k) {
        return Err(FiniteError::NotSubgroup(k));
    }
    if rho.domain() != k {
        return Err(FiniteError::NotSubgroup(rho.domain()));
    }
    let reps = group.right_coset_representatives(&k);
    let d = rho.dim();
    let big = reps.len() * d;
    let mut mats = BTreeMap::new();
    for g in 0..group.order() {
        let mut m = Matrix::zeros(big, big);
        for (j, &rj) in reps.iter().enumerate() {
            // r_j g = k r_i
            let x = group.mul(rj, g);
            let i = group.coset_of(&k, &reps, x);
            let kk = group.mul(x, group.inv(reps[i]));
            let block = rho.matrix(kk);
            for b in 0..d {
                for a in 0..d {
                    m[(j * d + b, i * d + a)] = block[(b, a)].clone();
                }
            }
        }
        mats.insert(g, m);
    }
    FiniteRep::new(group, big, mats)
}

/// Contragredient action g ↦ ρ(g⁻¹)ᵀ.
pub fn dualize_action(group: &FiniteGroup, rep: &FiniteRep) -> FiniteRep {
    let mats = rep
        .matrices
        .keys()
        .map(|&g| (g, rep.matrix(group.inv(g)).transpose()))
        .collect();
    FiniteRep::new(group, rep.dim, mats).expect("contragredient of a representation")
}

/// ⟨χ, ψ⟩ = |H|⁻¹ Σ_{h∈H} χ(h) conj(ψ(h)) over the keys of χ.
pub fn inner_product(chi: &ClassFunction, psi: &ClassFunction) -> Scalar {
    let sum = chi
        .iter()
        .fold(Scalar::zero(), |acc, (g, x)| acc + x * psi[g].conj());
    sum / int(chi.len() as i64)
}

pub fn restrict_function(f: &ClassFunction, subgroup: &[usize]) -> ClassFunction {
    subgroup.iter().map(|g| (*g, f[g].clone())).collect()
}

pub fn fmt_class_function(group: &FiniteGroup, f: &ClassFunction) -> String {
    let parts: Vec<String> = f
        .iter()
        .map(|(&g, v)| format!("{}: {}", group.label(g), fmt_scalar(v)))
        .collect();
    format!("({})", parts.join(", "))
}

/// Character values grouped by conjugacy class of the whole group.
pub fn class_values(group: &FiniteGroup, f: &ClassFunction) -> Vec<Scalar> {
    group
        .conjugacy_classes()
        .iter()
        .map(|c| f[&c[0]].clone())
        .collect()
}

/// One-dimensional characters of a subgroup with values in {±1, ±i}.
pub fn one_dim_characters(group: &FiniteGroup, subgroup: &[usize]) -> Result<Vec<ClassFunction>, FiniteError> {
    let mut k: Vec<usize> = subgroup.to_vec();
    k.sort_unstable();
    k.dedup();
    if !group.is_subgroup(&k) {
        return Err(FiniteError::NotSubgroup(k));
    }
    let mut gens = Vec::new();
    while group.generated(&gens).len() < k.len() {
        let span = group.generated(&gens);
        gens.push(*k.iter().find(|g| !span.contains(g)).expect("element outside span"));
    }
    let mut out = Vec::new();
    let combos = 4usize.pow(gens.len() as u32);
    'assign: for code in 0..combos {
        let exps: Vec<u8> = (0..gens.len()).map(|i| ((code >> (2 * i)) & 3) as u8).collect();
        let mut val: BTreeMap<usize, u8> = BTreeMap::from([(group.identity(), 0)]);
        let mut queue = vec![group.identity()];
        while let Some(x) = queue.pop() {
            for (&g, &e) in gens.iter().zip(&exps) {
                let y = group.mul(x, g);
                let v = (val[&x] + e) % 4;
                match val.get(&y) {
                    Some(&w) if w != v => continue 'assign,
                    Some(_) => {}
                    None => {
                        val.insert(y, v);
                        queue.push(y);
                    }
                }
            }
        }
        out.push(val.into_iter().map(|(g, e)| (g, i_pow(e as i64))).collect());
    }
    Ok(out)
}

/// Explicit two-dimensional irreducible matrices for the built-in S3, D4 and Q8.
pub fn two_dim_irrep(group: &FiniteGroup) -> Option<FiniteRep> {
    let mat = |rows: [[Scalar; 2]; 2]| Matrix::from_rows(rows.into_iter().map(Vec::from).collect());
    let mats: BTreeMap<usize, Matrix> = if group.table() == FiniteGroup::symmetric3().table() {
        let perms: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        perms
            .iter()
            .enumerate()
            .map(|(g, p)| {
                // basis e1−e2, e2−e3 of the sum-zero plane; coordinates (c1, −c3)
                let image = |u: [i64; 3]| {
                    let mut w = [0i64; 3];
                    for x in 0..3 {
                        w[p[x]] += u[x];
                    }
                    [int(w[0]), int(-w[2])]
                };
                let c0 = image([1, -1, 0]);
                let c1 = image([0, 1, -1]);
                (g, mat([[c0[0].clone(), c1[0].clone()], [c0[1].clone(), c1[1].clone()]]))
            })
            .collect()
    } else if group.table() == FiniteGroup::dihedral4().table() {
        let r = mat([[int(0), int(-1)], [int(1), int(0)]]);
        let s = mat([[int(1), int(0)], [int(0), int(-1)]]);
        (0..8)
            .map(|g| {
                let mut m = Matrix::identity(2);
                for _ in 0..g % 4 {
                    m = &m * &r;
                }
                if g >= 4 {
                    m = &m * &s;
                }
                (g, m)
            })
            .collect()
    } else if group.table() == FiniteGroup::quaternion().table() {
        let units = [
            Matrix::identity(2),
            mat([[gi(0, 1), int(0)], [int(0), gi(0, -1)]]),
            mat([[int(0), int(1)], [int(-1), int(0)]]),
            mat([[int(0), gi(0, 1)], [gi(0, 1), int(0)]]),
        ];
        (0..8)
            .map(|g| {
                let u = units[g / 2].clone();
                (g, if g % 2 == 0 { u } else { -&u })
            })
            .collect()
    } else {
        return None;
    };
    FiniteRep::new(group, 2, mats).ok()
}

/// Irreducible characters available exactly over Gaussian rationals, or
/// `None` when those do not exhaust the group (Σ dim² < |G|).
pub fn irreducible_characters(group: &FiniteGroup) -> Option<Vec<ClassFunction>> {
    let all: Vec<usize> = (0..group.order()).collect();
    let mut chars = one_dim_characters(group, &all).ok()?;
    let mut dim_sq = chars.len();
    if let Some(rep) = two_dim_irrep(group) {
        chars.push(rep.character());
        dim_sq += 4;
    }
    (dim_sq == group.order()).then_some(chars)
}

/// Frobenius reciprocity ⟨Ind χ_ρ, χ_σ⟩_G = ⟨χ_ρ, Res χ_σ⟩_K for every
/// subgroup, every one-dimensional ρ with values in {±1, ±i} and every
/// irreducible σ.
pub fn check_frobenius(group: &FiniteGroup) -> Result<Report, FiniteError> {
    let irreps = irreducible_characters(group).ok_or_else(|| FiniteError::CharacterTableUnavailable(group.name().to_string()))?;
    let mut report = Report::new(format!("Frobenius reciprocity for {}", group.name()));
    let irreps_ok = irreps.iter().all(|c| inner_product(c, c).is_one())
        && irreps
            .iter()
            .enumerate()
            .all(|(i, a)| irreps[..i].iter().all(|b| inner_product(a, b).is_zero()));
    report.assert("irreducible-characters-orthonormal", group.name(), irreps_ok, None);
    for k in group.subgroups() {
        let labels: Vec<&str> = k.iter().map(|&g| group.label(g)).collect();
        let kname = format!("K = {{{}}}", labels.join(", "));
        for (n, rho) in one_dim_characters(group, &k)?.iter().enumerate() {
            let rep = FiniteRep::one_dimensional(group, rho)?;
            let ind = induce_rep(group, &k, &rep)?;
            let subject = format!("{kname}, rho #{n}");
            report.assert(
                "induced-dimension-is-index",
                subject.clone(),
                ind.dim() * k.len() == group.order(),
                None,
            );
            let chi_ind = ind.character();
            let mut failures = Vec::new();
            for (s, sigma) in irreps.iter().enumerate() {
                let lhs = inner_product(&chi_ind, sigma);
                let rhs = inner_product(rho, &restrict_function(sigma, &k));
                if lhs != rhs {
                    failures.push(format!("sigma #{s}: {} vs {}", fmt_scalar(&lhs), fmt_scalar(&rhs)));
                }
            }
            let note = (!failures.is_empty()).then(|| failures.join("; "));
            report.assert("frobenius-reciprocity", subject, failures.is_empty(), note);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_induced_from_a3() {
        let s3 = FiniteGroup::symmetric3();
        let a3 = s3.generated(&[3]);
        let rho = FiniteRep::trivial(&s3, &a3).unwrap();
        let ind = induce_rep(&s3, &a3, &rho).unwrap();
        assert_eq!(ind.dim(), 2);
        assert_eq!(class_values(&s3, &ind.character()), vec![int(2), int(0), int(2)]);
    }

    #[test]
    fn regular_from_trivial_subgroup() {
        let s3 = FiniteGroup::symmetric3();
        let e = [s3.identity()];
        let ind = induce_rep(&s3, &e, &FiniteRep::trivial(&s3, &e).unwrap()).unwrap();
        assert_eq!(ind.character(), FiniteRep::regular(&s3).character());
        assert_eq!(ind.character()[&0], int(6));
    }

    #[test]
    fn index_one_keeps_character() {
        let d4 = FiniteGroup::dihedral4();
        let all: Vec<usize> = (0..8).collect();
        let rho = two_dim_irrep(&d4).unwrap();
        assert_eq!(induce_rep(&d4, &all, &rho).unwrap().character(), rho.character());
    }

    #[test]
    fn not_a_subgroup() {
        let s3 = FiniteGroup::symmetric3();
        let rho = FiniteRep::trivial(&s3, &[0]).unwrap();
        assert!(matches!(induce_rep(&s3, &[0, 1, 2], &rho), Err(FiniteError::NotSubgroup(_))));
    }

    #[test]
    fn bad_representation_rejected() {
        let z4 = FiniteGroup::cyclic(4).unwrap();
        let vals: ClassFunction = (0..4).map(|g| (g, if g == 1 { int(-1) } else { int(1) })).collect();
        assert!(matches!(FiniteRep::one_dimensional(&z4, &vals), Err(FiniteError::NotHomomorphism(_))));
    }

    #[test]
    fn character_counts() {
        let z4 = FiniteGroup::cyclic(4).unwrap();
        assert_eq!(one_dim_characters(&z4, &[0, 1, 2, 3]).unwrap().len(), 4);
        let z3 = FiniteGroup::cyclic(3).unwrap();
        assert_eq!(one_dim_characters(&z3, &[0, 1, 2]).unwrap().len(), 1);
        assert!(irreducible_characters(&z3).is_none());
        for g in [FiniteGroup::symmetric3(), FiniteGroup::dihedral4(), FiniteGroup::quaternion()] {
            assert!(irreducible_characters(&g).is_some(), "{}", g.name());
        }
    }

    #[test]
    fn contragredient_of_z3_regular() {
        let z3 = FiniteGroup::cyclic(3).unwrap();
        let reg = FiniteRep::regular(&z3);
        let dual = dualize_action(&z3, &reg);
        for (g, v) in reg.character() {
            assert_eq!(dual.character()[&g], v.conj());
        }
        assert_eq!(dualize_action(&z3, &dual), reg);
    }
}
