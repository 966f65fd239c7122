use super::eval::check_identity;
use super::report::{AxiomReport, Failure, Residual, DEFAULT_MAX_FAILURES};
use super::{Kind, PairError, PairStructure, Side};
use crate::supercore::catalog_entry;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOptions {
    /// Failures stored per report; every failure is still counted.
    pub max_failures: usize,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions { max_failures: DEFAULT_MAX_FAILURES }
    }
}

fn require(p: &PairStructure, kind: Kind) -> Result<(), PairError> {
    if p.kind() == kind {
        Ok(())
    } else {
        Err(PairError::WrongKind { expected: kind, found: p.kind() })
    }
}

fn catalog_check(p: &PairStructure, id: &str, opts: &CheckOptions) -> AxiomReport {
    let c = catalog_entry(id);
    check_identity(p, id, &c.adopted, Some(c.form_id()), opts).expect("catalog pair identities are element-valued")
}

fn evenness(p: &PairStructure, opts: &CheckOptions) -> AxiomReport {
    let mut r = AxiomReport::new("evenness", None);
    for side in [Side::First, Side::Second] {
        let (sp, other) = (p.space(side), p.space(side.other()));
        let d = sp.dim();
        for s in 0..other.dim() {
            for a in 0..d {
                for b in 0..d {
                    let want = other.parity(s) + sp.parity(a) + sp.parity(b);
                    let bad: Vec<_> =
                        p.m(side, s, a, b).iter().filter(|(k, _)| sp.parity(*k) != want).cloned().collect();
                    let failure = (!bad.is_empty()).then(|| Failure {
                        orientation: side.index(),
                        tuple: vec![s, a, b],
                        labels: vec![other.label(s).to_string(), sp.label(a).to_string(), sp.label(b).to_string()],
                        residual: Residual::vector(side.index(), &bad),
                    });
                    r.record(failure, opts.max_failures);
                }
            }
        }
    }
    r
}

/// Every nonzero output component has parity `p(sub) + p(left) + p(right)`.
pub fn check_evenness(p: &PairStructure) -> AxiomReport {
    evenness(p, &CheckOptions::default())
}

fn symmetry(p: &PairStructure, opts: &CheckOptions) -> AxiomReport {
    match p.kind() {
        Kind::Isotopic => catalog_check(p, "antisymmetry", opts),
        Kind::SuperJordan => catalog_check(p, "jordan-symmetry", opts),
    }
}

/// Graded antisymmetry for isotopic pairs, graded symmetry for super-Jordan
/// pairs, on both spaces.
pub fn check_symmetry(p: &PairStructure) -> AxiomReport {
    symmetry(p, &CheckOptions::default())
}

pub fn check_jacobi_analog(p: &PairStructure) -> Result<AxiomReport, PairError> {
    require(p, Kind::Isotopic)?;
    Ok(catalog_check(p, "jacobi-analog", &CheckOptions::default()))
}

pub fn check_compatibility(p: &PairStructure) -> Result<AxiomReport, PairError> {
    require(p, Kind::Isotopic)?;
    Ok(catalog_check(p, "compatibility", &CheckOptions::default()))
}

pub fn check_super_jordan(p: &PairStructure) -> Result<AxiomReport, PairError> {
    require(p, Kind::SuperJordan)?;
    Ok(catalog_check(p, "super-jordan", &CheckOptions::default()))
}

/// Evenness, symmetry, and the identities belonging to the pair's kind.
pub fn verify(p: &PairStructure) -> AxiomReport {
    verify_with(p, &CheckOptions::default())
}

pub fn verify_with(p: &PairStructure, opts: &CheckOptions) -> AxiomReport {
    let mut parts = vec![evenness(p, opts), symmetry(p, opts)];
    match p.kind() {
        Kind::Isotopic => {
            parts.push(catalog_check(p, "jacobi-analog", opts));
            parts.push(catalog_check(p, "compatibility", opts));
        }
        Kind::SuperJordan => parts.push(catalog_check(p, "super-jordan", opts)),
    }
    AxiomReport::aggregate("verify", parts)
}
