//! Catalog of real simple Lie algebras addressable by name.
//!
//! Names follow the grammar `name(params)`: `sl(4,R)`, `sl(2,H)`,
//! `su(3,1)`, `so(4,3)`, `sp(2,R)`, plus `split-A3` ... `split-D8`,
//! `split-G2`, `split-F4` for the Chevalley-backend split forms. Matrix
//! forms are admitted up to total matrix size 10, split forms up to rank 8.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::algebra::{chevalley_nilradical, NilpotentAlgebra};
use crate::model::{build_model, KMat, ModelKind};
use crate::roots::{build_root_system, Family, RestrictedRootDatum, RootError};

/// A parsed catalog request.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealFormSpec {
    pub name: String,
}

impl RealFormSpec {
    pub fn new(name: &str) -> Self {
        RealFormSpec {
            name: name.trim().to_string(),
        }
    }
}

/// Which construction backs a catalog entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Backend {
    Chevalley { family: Family, rank: usize },
    Matrix(ModelKind),
}

/// A fully built catalog algebra.
pub struct BuiltForm {
    pub name: String,
    pub backend: Backend,
    pub datum: RestrictedRootDatum,
    pub algebra: NilpotentAlgebra,
    /// Model matrices for the basis (matrix backend only).
    pub basis_matrices: Option<Vec<KMat>>,
}

const MAX_MATRIX_SIZE: usize = 10;
const MAX_SPLIT_RANK: usize = 8;

fn parse_two_ints(args: &str) -> Option<(usize, usize)> {
    let (a, b) = args.split_once(',')?;
    Some((a.trim().parse().ok()?, b.trim().parse().ok()?))
}

/// Resolves a name to its backend, or an error for anything outside the
/// catalog.
pub fn resolve(spec: &RealFormSpec) -> Result<Backend, RootError> {
    let name = spec.name.as_str();
    let unknown = || RootError::UnknownForm(name.to_string());
    if let Some(rest) = name.strip_prefix("split-") {
        let (family, rank) = match rest {
            "G2" => (Family::G2, 2),
            "F4" => (Family::F4, 4),
            _ => {
                let fam = match rest.chars().next() {
                    Some('A') => Family::A,
                    Some('B') => Family::B,
                    Some('C') => Family::C,
                    Some('D') => Family::D,
                    _ => return Err(unknown()),
                };
                let rank: usize = rest[1..].parse().map_err(|_| unknown())?;
                (fam, rank)
            }
        };
        if rank > MAX_SPLIT_RANK {
            return Err(unknown());
        }
        // defer range validity (A>=1, B>=2, ...) to build_root_system
        build_root_system(family, rank)?;
        return Ok(Backend::Chevalley { family, rank });
    }
    let (head, args) = name
        .split_once('(')
        .and_then(|(h, rest)| rest.strip_suffix(')').map(|a| (h, a)))
        .ok_or_else(unknown)?;
    let kind = match head {
        "sl" => {
            let (n, field) = args.split_once(',').ok_or_else(unknown)?;
            let n: usize = n.trim().parse().map_err(|_| unknown())?;
            match field.trim() {
                "R" => {
                    if n < 2 || n > MAX_MATRIX_SIZE {
                        return Err(unknown());
                    }
                    ModelKind::SlR { n }
                }
                "H" => {
                    if n < 2 || 2 * n > MAX_MATRIX_SIZE {
                        return Err(unknown());
                    }
                    ModelKind::SlH { n }
                }
                _ => return Err(unknown()),
            }
        }
        "su" => {
            let (p, q) = parse_two_ints(args).ok_or_else(unknown)?;
            if p < q || q < 1 || p + q > MAX_MATRIX_SIZE {
                return Err(unknown());
            }
            ModelKind::Su { p, q }
        }
        "so" => {
            let (p, q) = parse_two_ints(args).ok_or_else(unknown)?;
            if p < q || q < 1 || p + q > MAX_MATRIX_SIZE || p + q < 3 || (p, q) == (2, 2) {
                return Err(unknown());
            }
            ModelKind::So { p, q }
        }
        "sp" => {
            let (n, field) = args.split_once(',').ok_or_else(unknown)?;
            let n: usize = n.trim().parse().map_err(|_| unknown())?;
            if field.trim() != "R" || n < 1 || 2 * n > MAX_MATRIX_SIZE {
                return Err(unknown());
            }
            ModelKind::SpR { n }
        }
        _ => return Err(unknown()),
    };
    Ok(Backend::Matrix(kind))
}

/// Restricted root system of a catalog form, with exact multiplicities.
/// Chevalley-backend (split) forms have all multiplicities one; matrix
/// forms get theirs from eigenspace dimensions in the model.
pub fn restricted_datum(spec: &RealFormSpec) -> Result<RestrictedRootDatum, RootError> {
    match resolve(spec)? {
        Backend::Chevalley { family, rank } => build_root_system(family, rank),
        Backend::Matrix(kind) => {
            let b = build_model(kind).map_err(|e| RootError::UnknownForm(format!("{}: {}", spec.name, e)))?;
            Ok(b.datum)
        }
    }
}

/// Nilradical of the minimal parabolic of a catalog form, with the datum
/// that grades it.
pub fn build_nilradical(spec: &RealFormSpec) -> Result<BuiltForm, RootError> {
    let backend = resolve(spec)?;
    match backend {
        Backend::Chevalley { family, rank } => {
            let datum = build_root_system(family, rank)?;
            let algebra = chevalley_nilradical(&datum);
            Ok(BuiltForm {
                name: spec.name.clone(),
                backend,
                datum,
                algebra,
                basis_matrices: None,
            })
        }
        Backend::Matrix(kind) => {
            let b = build_model(kind).map_err(|e| RootError::UnknownForm(format!("{}: {}", spec.name, e)))?;
            Ok(BuiltForm {
                name: spec.name.clone(),
                backend,
                datum: b.datum,
                algebra: b.algebra,
                basis_matrices: Some(b.basis_matrices),
            })
        }
    }
}

/// Catalog names with matrix size bounded by `max_size` and split rank
/// bounded by `max_split_rank`, in a fixed enumeration order.
pub fn catalog_names(max_size: usize, max_split_rank: usize) -> Vec<String> {
    let mut names = Vec::new();
    for rank in 1..=max_split_rank {
        names.push(format!("split-A{}", rank));
    }
    for rank in 2..=max_split_rank {
        names.push(format!("split-B{}", rank));
    }
    for rank in 3..=max_split_rank {
        names.push(format!("split-C{}", rank));
    }
    for rank in 4..=max_split_rank {
        names.push(format!("split-D{}", rank));
    }
    names.push("split-G2".to_string());
    names.push("split-F4".to_string());
    for n in 2..=max_size {
        names.push(format!("sl({},R)", n));
    }
    for n in 2..=(max_size / 2) {
        names.push(format!("sl({},H)", n));
    }
    for q in 1..=(max_size / 2) {
        for p in q..=(max_size - q) {
            names.push(format!("su({},{})", p, q));
        }
    }
    for q in 1..=(max_size / 2) {
        for p in q..=(max_size - q) {
            if (p, q) != (2, 2) && p + q >= 3 {
                names.push(format!("so({},{})", p, q));
            }
        }
    }
    for n in 1..=(max_size / 2) {
        names.push(format!("sp({},R)", n));
    }
    names
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn resolve_known_and_unknown() {
        assert!(matches!(
            resolve(&RealFormSpec::new("sl(3,R)")).unwrap(),
            Backend::Matrix(ModelKind::SlR { n: 3 })
        ));
        assert!(matches!(
            resolve(&RealFormSpec::new("split-F4")).unwrap(),
            Backend::Chevalley { family: Family::F4, .. }
        ));
        assert!(resolve(&RealFormSpec::new("nope")).is_err());
        assert!(resolve(&RealFormSpec::new("so(2,2)")).is_err());
        assert!(resolve(&RealFormSpec::new("su(0,0)")).is_err());
        assert!(resolve(&RealFormSpec::new("sl(99,R)")).is_err());
        assert!(resolve(&RealFormSpec::new("split-D3")).is_err());
    }

    #[test]
    fn split_datum_has_unit_multiplicities() {
        let d = restricted_datum(&RealFormSpec::new("split-B3")).unwrap();
        assert!(d.mult.iter().all(|&m| m == 1));
        assert_eq!(d.rank(), 3);
    }

    #[test]
    fn sl3r_split_matches_su21_bc() {
        let sl3 = restricted_datum(&RealFormSpec::new("sl(3,R)")).unwrap();
        assert!(sl3.mult.iter().all(|&m| m == 1));
        let su21 = restricted_datum(&RealFormSpec::new("su(2,1)")).unwrap();
        assert_eq!(su21.label.family, Family::BC);
    }

    #[test]
    fn every_catalog_name_builds() {
        // the desk-scale sub-catalog used by the fast suites
        for name in catalog_names(6, 4) {
            let form = build_nilradical(&RealFormSpec::new(&name)).unwrap();
            assert!(form.algebra.grading_witness().is_none(), "{}", name);
            assert_eq!(form.algebra.dim(), form.datum.nilradical_dim(), "{}", name);
        }
    }

    #[test]
    fn both_backends_agree_on_sl_n_r() {
        // slotwise |constants| match after sign normalization
        for n in [3usize, 4, 5] {
            let split = build_nilradical(&RealFormSpec::new(&format!("split-A{}", n - 1))).unwrap();
            let matrix = build_nilradical(&RealFormSpec::new(&format!("sl({},R)", n))).unwrap();
            assert_eq!(split.algebra.dim(), matrix.algebra.dim());
            for i in 0..split.algebra.dim() {
                assert_eq!(split.algebra.basis[i].root, matrix.algebra.basis[i].root);
                for j in (i + 1)..split.algebra.dim() {
                    let a: Vec<(usize, crate::rat::Rat)> = split
                        .algebra
                        .bracket_basis(i, j)
                        .into_iter()
                        .map(|(k, c)| (k, crate::rat::abs(&c)))
                        .collect();
                    let b: Vec<(usize, crate::rat::Rat)> = matrix
                        .algebra
                        .bracket_basis(i, j)
                        .into_iter()
                        .map(|(k, c)| (k, crate::rat::abs(&c)))
                        .collect();
                    assert_eq!(a, b, "sl({},R) bracket ({},{})", n, i, j);
                }
            }
        }
    }
}
