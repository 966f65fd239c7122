//! Randomized invariants. Structured inputs are drawn from the crate's LCG
//! with a proptest-chosen seed, so failures shrink to a seed.

use std::collections::BTreeMap;

use proptest::prelude::*;

use isopair_core::constructions::*;
use isopair_core::exactlin::{intersect_spans, rref, span_basis, Matrix, SVec};
use isopair_core::pairs::{eval_on_elements, verify, Kind, PairStructure, Residual, Side};
use isopair_core::polyfields::sample_check_w_o_pair;
use isopair_core::reps::*;
use isopair_core::rng::Lcg;
use isopair_core::suite::round_trip;
use isopair_core::supercore::{catalog_entry, expand_template, sign_a, sign_b, IdentityTemplate, Letter, Parity};
use isopair_core::tkk::{check_superalgebra, superalgebra_from_pair};
use isopair_core::Scalar;

fn cfg(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, ..ProptestConfig::default() }
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (-6i64..=6, 1i64..=5).prop_map(|(n, d)| Scalar::ratio(n, d))
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(scalar(), rows * cols).prop_map(move |v| Matrix::from_vec(rows, cols, v).unwrap())
}

fn vectors(n: usize, len: usize) -> impl Strategy<Value = Vec<Vec<Scalar>>> {
    prop::collection::vec(prop::collection::vec(-2i64..=2, len), 0..=n)
        .prop_map(|vs| vs.into_iter().map(|v| v.into_iter().map(Scalar::from_int).collect()).collect())
}

fn parity() -> impl Strategy<Value = Parity> {
    (0u8..2).prop_map(Parity::new)
}

fn small_subpair(seed: u64) -> EnvelopePair {
    random_closed_subpair(&SuperMatrixSpace::new(2, 1), Kind::Isotopic, &mut Lcg::new(seed))
}

proptest! {
    #![proptest_config(cfg(64))]

    #[test]
    fn rref_is_idempotent(m in matrix(3, 4)) {
        let once = rref(&m).reduced;
        prop_assert_eq!(rref(&once).reduced, once);
    }

    #[test]
    fn dimension_formula(a in vectors(3, 4), b in vectors(3, 4)) {
        let (da, db) = (span_basis(&a, 4).unwrap().len(), span_basis(&b, 4).unwrap().len());
        let sum: Vec<Vec<Scalar>> = a.iter().chain(&b).cloned().collect();
        let dsum = span_basis(&sum, 4).unwrap().len();
        let dint = intersect_spans(&a, &b, 4).unwrap().len();
        prop_assert_eq!(dint + dsum, da + db);
    }

    #[test]
    fn reciprocals_are_exact(p in 1i64..1_000_000_007, q in 1i64..1_000_000_007, neg in any::<bool>()) {
        let x = Scalar::ratio(if neg { -p } else { p }, q);
        prop_assert!((&x * &x.recip().unwrap()).is_one());
    }

    #[test]
    fn sign_a_is_symmetric(a in parity(), b in parity(), c in parity()) {
        let s = sign_a(a, b, c);
        for t in [sign_a(a, c, b), sign_a(b, a, c), sign_a(b, c, a), sign_a(c, a, b), sign_a(c, b, a)] {
            prop_assert_eq!(&t, &s);
        }
    }

    #[test]
    fn sign_b_cyclic_and_reversal(a in parity(), b in parity(), c in parity(), d in parity()) {
        let s = sign_b(a, b, c, d);
        prop_assert_eq!(&sign_b(b, c, d, a), &s);
        prop_assert_eq!(&sign_b(d, c, b, a), &s);
    }
}

const IDS: [&str; 7] = ["antisymmetry", "jordan-symmetry", "jacobi-analog", "compatibility", "super-jordan", "rep-first", "rep-second"];

fn merged(a: &BTreeMap<String, Scalar>, b: &BTreeMap<String, Scalar>) -> BTreeMap<String, Scalar> {
    let mut out = a.clone();
    for (w, c) in b {
        let e = out.entry(w.clone()).or_insert_with(Scalar::zero);
        *e += c;
    }
    out.retain(|_, c| !c.is_zero());
    out
}

proptest! {
    #![proptest_config(cfg(48))]

    #[test]
    fn expansion_is_linear(k in 0usize..IDS.len(), pm in 0u8..32, cut in 0usize..8) {
        let t = catalog_entry(IDS[k]).adopted.zero_form();
        let cut = cut.min(t.terms.len());
        let (head, tail) = t.terms.split_at(cut);
        let ps: [Parity; 5] = std::array::from_fn(|i| Parity::new((pm >> i) & 1));
        let whole = expand_template(&t, &ps).unwrap();
        let a = expand_template(&IdentityTemplate::new(head.to_vec()), &ps).unwrap();
        let b = expand_template(&IdentityTemplate::new(tail.to_vec()), &ps).unwrap();
        prop_assert_eq!(whole, merged(&a, &b));
    }
}

#[test]
fn even_assignments_carry_no_signs() {
    for id in IDS {
        let t = catalog_entry(id).adopted.zero_form();
        for term in &t.terms {
            assert_eq!(term.signed_coef(0), term.coef, "{id}");
        }
    }
}

/// A random element of `side` supported on basis vectors of parity `p`.
fn element(pair: &PairStructure, side: Side, p: Parity, rng: &mut Lcg) -> SVec {
    let sp = pair.space(side);
    (0..sp.dim()).filter(|&i| sp.parity(i) == p).map(|i| (i, rng.coef())).filter(|(_, c)| !c.is_zero()).collect()
}

proptest! {
    #![proptest_config(cfg(24))]

    /// Identities checked on basis tuples hold on random homogeneous elements.
    #[test]
    fn identities_hold_on_elements(seed in any::<u64>(), pm in 0u8..32, orientation in 0u8..2) {
        let pair = series_gl(1, 1).unwrap().pair;
        let mut rng = Lcg::new(seed);
        for id in ["antisymmetry", "jacobi-analog", "compatibility"] {
            let t = catalog_entry(id).adopted.zero_form();
            let binding: [Option<SVec>; 5] = std::array::from_fn(|i| {
                let l = Letter::ALL[i];
                let side = Side::from_index(l.home_side() ^ orientation);
                Some(element(&pair, side, Parity::new((pm >> i) & 1), &mut rng))
            });
            let v = eval_on_elements(&pair, &t, orientation, pm, &binding).unwrap();
            prop_assert!(v.is_empty(), "{} leaves {:?}", id, v);
        }
    }

    #[test]
    fn random_subpairs_are_pairs_with_sound_algebras(seed in any::<u64>()) {
        let ep = small_subpair(seed);
        prop_assert!(verify(&ep.pair).pass());
        prop_assert!(verify(&ep.pair.parity_flip()).pass());
        prop_assert!(check_rep(&tautological_rep(&ep)).pass());
        let a = superalgebra_from_pair(&ep.pair).unwrap();
        let (d1, d2) = (ep.pair.v1().dim(), ep.pair.v2().dim());
        prop_assert!(a.g0_dim() <= d1 * d1 + d2 * d2);
        prop_assert!(check_superalgebra(&a).pass());
        prop_assert_eq!(round_trip(&ep.pair), Ok(true));
    }

    /// Failure residuals are homogeneous vectors of the space they name.
    #[test]
    fn residuals_live_in_their_space(seed in any::<u64>()) {
        let gl = series_gl(2, 1).unwrap().pair;
        let q = perturb(&gl, &mut Lcg::new(seed)).unwrap();
        let r = verify(&q);
        prop_assert!(!r.pass());
        let mut stack = vec![&r];
        while let Some(node) = stack.pop() {
            stack.extend(node.parts.iter());
            for f in &node.failures {
                if let Residual::Vector { side, entries } = &f.residual {
                    let sp = q.space(Side::from_index(*side));
                    prop_assert!(entries.iter().all(|e| e.idx < sp.dim()));
                    let ps: Vec<Parity> = entries.iter().map(|e| sp.parity(e.idx)).collect();
                    prop_assert!(ps.windows(2).all(|w| w[0] == w[1]));
                }
            }
        }
        prop_assert_eq!(round_trip(&r), Ok(true));
    }

    #[test]
    fn graph_reports_match_rep_reports(seed in any::<u64>(), valid in any::<bool>()) {
        let mut rng = Lcg::new(seed);
        let r = if valid { tautological_rep(&small_subpair(seed)) } else { random_rep(&isoquaternionic_pair().pair, 2, &mut rng) };
        let one = Matrix::identity(1);
        let g = GraphRep { pair: r.pair.clone(), h: r.h.clone(), t1: vec![r.t1.clone()], t2: vec![r.t2.clone()], p: one.clone(), q: one };
        let (a, b) = (check_rep(&r), check_graph_rep(&g).unwrap());
        prop_assert_eq!(a.pass(), b.pass());
        prop_assert!(reports_agree(&a, &b));
        prop_assert_eq!(round_trip(&g), Ok(true));
    }

    #[test]
    fn lie_round_trip(q in matrix(3, 3)) {
        prop_assume!(q.rank() == 3);
        let g = LieData::sl2();
        let ad: Vec<Matrix> = (0..3).map(|a| g.ad(a)).collect();
        let r = pair_rep_from_lie(&g, &ad, &q).unwrap();
        prop_assert_eq!(lie_from_pair_rep(&r).unwrap().mats, ad);
    }

    #[test]
    fn sampled_vector_field_checks(seed in any::<u64>()) {
        prop_assert!(sample_check_w_o_pair(1, 1, 2, 4, seed).pass());
    }
}

#[test]
fn magnetic_pairs_are_equivariant() {
    for g in [LieData::sl2(), LieData::so3()] {
        let p = magnetic_pair(&g, &killing_form(&g), 1).unwrap();
        let ad: Vec<Matrix> = (0..g.dim()).map(|z| g.ad(z)).collect();
        assert!(check_equivariance(&p, &ad, &ad).pass());
    }
}

#[test]
fn reports_do_not_depend_on_thread_count() {
    let p = series_gl(2, 1).unwrap().pair;
    let runs: Vec<_> = [1, 2, 5]
        .into_iter()
        .map(|n| rayon::ThreadPoolBuilder::new().num_threads(n).build().unwrap().install(|| verify(&p)))
        .collect();
    assert!(runs.windows(2).all(|w| w[0] == w[1]));
}

#[test]
fn highest_weight_dimensions_settle() {
    let g = diagonal_grading(&isoquaternionic_pair()).unwrap();
    let half = Scalar::ratio(1, 2);
    let (c1, c2) = weight_characters(&g, &half, &half).unwrap();
    let m = hw_split_module(&g, &c1, &c2, 6).unwrap();
    for h in &m.history {
        assert!(h.windows(2).all(|w| w[0] >= w[1]), "{h:?}");
    }
    assert!(m.stabilized);
    let (r, s) = (m.rep.unwrap(), m.split.unwrap());
    assert!(check_rep(&r).pass() && check_split(&r, &s).pass());
}
