use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::template::{Expr, Identity, IdentityTemplate, Letter, TemplateError};
use super::{sign_a_bit, Parity};
use crate::exactlin::Scalar;

type WordSum = BTreeMap<String, Scalar>;

fn pm_of(parities: &[Parity; 5]) -> u8 {
    parities.iter().enumerate().fold(0, |m, (i, p)| m | (p.bit() << i))
}

fn word_parity(w: &str, pm: u8) -> Parity {
    w.chars().fold(Parity::EVEN, |p, c| {
        let l = Letter::from_char(c).expect("words are built from letters");
        p + Parity::new((pm >> l.index()) & 1)
    })
}

fn add_into(acc: &mut WordSum, w: String, c: Scalar) {
    use std::collections::btree_map::Entry;
    if c.is_zero() {
        return;
    }
    match acc.entry(w) {
        Entry::Occupied(mut o) => {
            *o.get_mut() += &c;
            if o.get().is_zero() {
                o.remove();
            }
        }
        Entry::Vacant(v) => {
            v.insert(c);
        }
    }
}

fn expand_expr(e: &Expr, pm: u8) -> WordSum {
    match e {
        Expr::Letter(l) => BTreeMap::from([(l.as_char().to_string(), Scalar::one())]),
        Expr::Word(fs) => {
            let mut acc: WordSum = BTreeMap::from([(String::new(), Scalar::one())]);
            for f in fs {
                let ef = expand_expr(f, pm);
                let mut next = WordSum::new();
                for (w1, c1) in &acc {
                    for (w2, c2) in &ef {
                        add_into(&mut next, format!("{w1}{w2}"), c1 * c2);
                    }
                }
                acc = next;
            }
            acc
        }
        Expr::Bracket { kind, left, right, sub } => {
            let (el, er, es) = (expand_expr(left, pm), expand_expr(right, pm), expand_expr(sub, pm));
            let mut acc = WordSum::new();
            let model = Scalar::from_int(kind.model_sign());
            for (wl, cl) in &el {
                let pl = word_parity(wl, pm);
                for (ws, cs) in &es {
                    let ps = word_parity(ws, pm);
                    for (wr, cr) in &er {
                        let pr = word_parity(wr, pm);
                        let c = cl.mul3(cs, cr);
                        add_into(&mut acc, format!("{wl}{ws}{wr}"), c.clone());
                        let a = Scalar::sign(sign_a_bit(pl, ps, pr));
                        add_into(&mut acc, format!("{wr}{ws}{wl}"), c.mul3(&model, &a));
                    }
                }
            }
            acc
        }
    }
}

/// Expands every bracket by the associative model `[X,Y]_U = XUY - A·YUX`
/// (`+A` for Jordan products) and every operator word by concatenation,
/// returning the signed sum of letter words.
pub fn expand_template(t: &IdentityTemplate, parities: &[Parity; 5]) -> Result<BTreeMap<String, Scalar>, TemplateError> {
    t.typecheck()?;
    let pm = pm_of(parities);
    let mut acc = WordSum::new();
    for term in &t.terms {
        let c = term.signed_coef(pm);
        for (w, x) in expand_expr(&term.expr, pm) {
            add_into(&mut acc, w, &c * &x);
        }
    }
    Ok(acc)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordDiff {
    pub word: String,
    pub lhs: Scalar,
    pub rhs: Scalar,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AssignmentVerdict {
    /// Parities of `X Y Z U V`, e.g. `"01100"`.
    pub parities: String,
    pub equal: bool,
    pub first_diff: Option<WordDiff>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub identity: String,
    pub assignments: Vec<AssignmentVerdict>,
    pub all_equal: bool,
}

impl ValidationReport {
    pub fn failing(&self) -> usize {
        self.assignments.iter().filter(|a| !a.equal).count()
    }
}

/// Expands both sides for all 32 parity assignments of `X Y Z U V`.
pub fn validate_identity(lhs: &IdentityTemplate, rhs: &IdentityTemplate) -> Result<ValidationReport, TemplateError> {
    let id = Identity::new(lhs.clone(), rhs.clone());
    id.typecheck()?;
    let mut assignments = Vec::with_capacity(32);
    for pm in 0u8..32 {
        let ps: [Parity; 5] = std::array::from_fn(|i| Parity::new((pm >> i) & 1));
        let l = expand_template(lhs, &ps)?;
        let r = expand_template(rhs, &ps)?;
        let mut first_diff = None;
        let keys: std::collections::BTreeSet<&String> = l.keys().chain(r.keys()).collect();
        for k in keys {
            let a = l.get(k).cloned().unwrap_or_default();
            let b = r.get(k).cloned().unwrap_or_default();
            if a != b {
                first_diff = Some(WordDiff { word: k.clone(), lhs: a, rhs: b });
                break;
            }
        }
        assignments.push(AssignmentVerdict {
            parities: ps.iter().map(|p| p.to_string()).collect(),
            equal: first_diff.is_none(),
            first_diff,
        });
    }
    let all_equal = assignments.iter().all(|a| a.equal);
    Ok(ValidationReport { identity: id.to_string(), assignments, all_equal })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::supercore::parse_template;

    fn ps(bits: [u8; 5]) -> [Parity; 5] {
        bits.map(Parity::new)
    }

    fn words(pairs: &[(&str, i64)]) -> BTreeMap<String, Scalar> {
        pairs.iter().map(|(w, c)| (w.to_string(), Scalar::from_int(*c))).collect()
    }

    #[test]
    fn expand_examples() {
        let t = parse_template("[X,Y]_U").unwrap();
        assert_eq!(expand_template(&t, &ps([0; 5])).unwrap(), words(&[("XUY", 1), ("YUX", -1)]));
        assert_eq!(expand_template(&t, &ps([1, 1, 0, 0, 0])).unwrap(), words(&[("XUY", 1), ("YUX", 1)]));
        let j = parse_template("X∘_U Y").unwrap();
        assert_eq!(expand_template(&j, &ps([0; 5])).unwrap(), words(&[("XUY", 1), ("YUX", 1)]));
    }

    #[test]
    fn validate_examples() {
        let p = |s| parse_template(s).unwrap();
        let r = validate_identity(&p("[X,Y]_U"), &p("-A_{XUY}[Y,X]_U")).unwrap();
        assert!(r.all_equal);
        let r = validate_identity(&p("X∘_U Y"), &p("A_{XUY}Y∘_U X")).unwrap();
        assert!(r.all_equal);
        let r = validate_identity(&p("[X,Y]_U"), &p("[Y,X]_U")).unwrap();
        assert!(!r.assignments[0].equal);
        assert_eq!(r.assignments[0].parities, "00000");
        assert!(r.assignments[0].first_diff.is_some());
    }

    #[test]
    fn cancelling_terms_vanish() {
        let t = parse_template("[X,Y]_U + A_{XUY}[Y,X]_U").unwrap();
        for pm in 0..32u8 {
            let p: [Parity; 5] = std::array::from_fn(|i| Parity::new((pm >> i) & 1));
            assert!(expand_template(&t, &p).unwrap().is_empty());
        }
    }
}
