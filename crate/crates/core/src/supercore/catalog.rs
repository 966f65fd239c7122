//! The displayed identities as data, each with its printed form and the form
//! actually wired into the checkers.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::expand::{expand_template, validate_identity, ValidationReport};
use super::template::{Identity, Term};
use super::Parity;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TermChange {
    Negate,
    Swap,
    NegateSwap,
}

/// A change applied to one term of an identity. `side` is `"lhs"` or `"rhs"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Modification {
    pub side: String,
    pub index: usize,
    pub change: TermChange,
    pub before: String,
    pub after: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CatalogIdentity {
    pub id: String,
    pub title: String,
    pub printed: Identity,
    pub adopted: Identity,
    pub changes: Vec<Modification>,
    /// Parity assignments on which the printed form fails.
    pub printed_failures: usize,
    pub printed_report: ValidationReport,
    pub adopted_report: ValidationReport,
    pub note: String,
}

impl CatalogIdentity {
    pub fn corrected(&self) -> bool {
        !self.changes.is_empty()
    }

    /// `"<id>:printed"` or `"<id>:corrected"`.
    pub fn form_id(&self) -> String {
        format!("{}:{}", self.id, if self.corrected() { "corrected" } else { "printed" })
    }

    /// Human-readable printed-vs-adopted diff, one line per changed term.
    pub fn diff_lines(&self) -> Vec<String> {
        self.changes
            .iter()
            .map(|m| format!("{} term {}: {} -> {}", m.side, m.index, m.before, m.after))
            .collect()
    }
}

fn cancels_everywhere(id: &Identity) -> bool {
    let z = id.zero_form();
    (0u8..32).all(|pm| {
        let ps: [Parity; 5] = std::array::from_fn(|i| Parity::new((pm >> i) & 1));
        expand_template(&z, &ps).map(|m| m.is_empty()).unwrap_or(false)
    })
}

fn apply(term: &Term, change: TermChange) -> Term {
    match change {
        TermChange::Negate => term.negated(),
        TermChange::Swap => Term { expr: term.expr.swapped(), ..term.clone() },
        TermChange::NegateSwap => Term { expr: term.expr.swapped(), ..term.negated() },
    }
}

fn render(t: &Term) -> String {
    super::IdentityTemplate::new(vec![t.clone()]).to_string()
}

/// Smallest set of per-term edits (sign flip, operand swap) that makes the
/// identity cancel in the free envelope for all parity assignments. The first
/// left-hand term is held fixed. Candidates are tried by number of edited
/// terms, then by number of swaps, then lexicographically. Returns `None` when
/// no candidate with at most eight editable terms works.
pub fn minimal_correction(id: &Identity) -> Option<(Identity, Vec<Modification>)> {
    if cancels_everywhere(id) {
        return Some((id.clone(), Vec::new()));
    }
    let nl = id.lhs.terms.len();
    let total = nl + id.rhs.terms.len();
    if !(2..=9).contains(&total) {
        return None;
    }
    let free = total - 1;
    const OPTS: [Option<TermChange>; 4] =
        [None, Some(TermChange::Negate), Some(TermChange::Swap), Some(TermChange::NegateSwap)];
    let mut candidates: Vec<Vec<usize>> = (0..4usize.pow(free as u32))
        .map(|mut code| {
            (0..free)
                .map(|_| {
                    let o = code % 4;
                    code /= 4;
                    o
                })
                .collect()
        })
        .collect();
    let cost = |v: &Vec<usize>| {
        let edited = v.iter().filter(|&&o| o != 0).count();
        let swaps = v.iter().filter(|&&o| o >= 2).count();
        (edited, swaps, v.clone())
    };
    candidates.sort_by_key(cost);
    for cand in candidates.into_iter().skip(1) {
        let mut fixed = id.clone();
        let mut mods = Vec::new();
        for (k, &o) in cand.iter().enumerate() {
            let Some(change) = OPTS[o] else { continue };
            let pos = k + 1;
            let (side, idx, term) = if pos < nl {
                ("lhs", pos, &mut fixed.lhs.terms[pos])
            } else {
                ("rhs", pos - nl, &mut fixed.rhs.terms[pos - nl])
            };
            let before = render(term);
            *term = apply(term, change);
            mods.push(Modification { side: side.into(), index: idx, change, before, after: render(term) });
        }
        if cancels_everywhere(&fixed) {
            return Some((fixed, mods));
        }
    }
    None
}

const PRINTED: &[(&str, &str, &str, &str, &str)] = &[
    (
        "antisymmetry",
        "graded antisymmetry of the isocommutator",
        "[X,Y]_U",
        "A_{XUY}[Y,X]_U",
        "Printed relation lacks the minus sign forced by the associative model.",
    ),
    (
        "jordan-symmetry",
        "graded symmetry of the Jordan product",
        "X∘_U Y",
        "A_{XUY}Y∘_U X",
        "",
    ),
    (
        "jacobi-analog",
        "six-term Jacobi analog",
        "A_{VYZ}[[X,Y]_U,Z]_V + A_{UZV}[X,[Z,Y]_U]_V + A_{XZU}[[Z,X]_U,Y]_V \
         + B_{VZYU}[[X,Y]_V,Z]_U + [X,[Z,Y]_V]_U + B_{XZUV}[[Z,X]_V,Y]_U",
        "0",
        "",
    ),
    (
        "compatibility",
        "compatibility of the two isocommutator families",
        "[X,Y]_{[U,V]_Z}",
        "1/2(A_{VYZ}[[X,Y]_U,Z]_V + [X,[Z,Y]_V]_U + B_{XZUV}[[Z,X]_V,Y]_U) \
         - 1/2(B_{VZYU}[[X,Y]_V,Z]_U + A_{UZV}[X,[Z,Y]_U]_V + A_{XZU}[[Z,X]_U,Y]_V)",
        "",
    ),
    (
        "super-jordan",
        "super-Jordan pair identity",
        "X∘_{U∘_Z V}Y",
        "X∘_U(Z∘_V Y) - A_{VYZ}(X∘_U Y)∘_V Z - B_{XZUV}(Z∘_V X)∘_U Y",
        "The subscript of the left-hand side is read as U∘_Z V.",
    ),
    (
        "rep-first",
        "representation identity on the first space",
        "T1([X,Y]_U)",
        "T1(X)T2(U)T1(Y) - A_{XUY}T1(Y)T2(U)T1(X)",
        "",
    ),
    (
        "rep-second",
        "representation identity on the second space",
        "T2([U,V]_X)",
        "T2(U)T1(X)T2(V) - A_{UXV}T2(U)T1(X)T2(V)",
        "Printed right-hand side repeats the same operator word twice.",
    ),
];

fn build_catalog() -> Vec<CatalogIdentity> {
    PRINTED
        .iter()
        .map(|&(id, title, lhs, rhs, note)| {
            let printed = Identity::parse(lhs, rhs).expect("catalog identities parse");
            let (adopted, changes) =
                minimal_correction(&printed).expect("every catalog identity admits a correction");
            let printed_report = validate_identity(&printed.lhs, &printed.rhs).expect("typed");
            let adopted_report = validate_identity(&adopted.lhs, &adopted.rhs).expect("typed");
            CatalogIdentity {
                id: id.into(),
                title: title.into(),
                printed_failures: printed_report.failing(),
                printed,
                adopted,
                changes,
                printed_report,
                adopted_report,
                note: note.into(),
            }
        })
        .collect()
}

/// All catalogued identities, validated once and cached.
pub fn identity_catalog() -> &'static [CatalogIdentity] {
    static CATALOG: OnceLock<Vec<CatalogIdentity>> = OnceLock::new();
    CATALOG.get_or_init(build_catalog)
}

/// Looks up a catalogued identity by id. Panics on an unknown id, since ids
/// are internal constants.
pub fn catalog_entry(id: &str) -> &'static CatalogIdentity {
    identity_catalog().iter().find(|c| c.id == id).unwrap_or_else(|| panic!("unknown identity {id}"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::supercore::parse_template;

    #[test]
    fn every_adopted_form_validates() {
        for c in identity_catalog() {
            assert!(c.adopted_report.all_equal, "{} does not validate", c.id);
        }
    }

    #[test]
    fn printed_forms_that_hold_are_untouched() {
        for id in ["jordan-symmetry", "jacobi-analog", "compatibility", "rep-first"] {
            let c = catalog_entry(id);
            assert_eq!(c.printed_failures, 0, "{id}");
            assert!(!c.corrected());
        }
    }

    #[test]
    fn antisymmetry_gets_minus_sign() {
        let c = catalog_entry("antisymmetry");
        assert!(c.corrected());
        assert_eq!(c.adopted.rhs, parse_template("-A_{XUY}[Y,X]_U").unwrap());
    }

    #[test]
    fn super_jordan_flips_last_sign_only() {
        let c = catalog_entry("super-jordan");
        assert_eq!(c.printed_failures, 32);
        let expected = parse_template("X∘_U(Z∘_V Y) - A_{VYZ}(X∘_U Y)∘_V Z + B_{XZUV}(Z∘_V X)∘_U Y").unwrap();
        assert_eq!(c.adopted.rhs, expected);
        assert_eq!(c.changes.len(), 1);
        assert_eq!(c.changes[0].change, TermChange::Negate);
    }

    #[test]
    fn second_rep_identity_reverses_repeated_word() {
        let c = catalog_entry("rep-second");
        assert!(c.printed_failures > 0);
        let expected = parse_template("T2(U)T1(X)T2(V) - A_{UXV}T2(V)T1(X)T2(U)").unwrap();
        assert_eq!(c.adopted.rhs, expected);
        assert_eq!(c.changes[0].change, TermChange::Swap);
    }

    #[test]
    fn hopeless_identity_has_no_correction() {
        let id = Identity::parse("[X,Y]_U", "0").unwrap();
        assert!(minimal_correction(&id).is_none());
    }
}
