use isopair_core::constructions::{isoquaternionic_pair, series_gl, series_osp, series_q};
use isopair_core::exactlin::sparse;
use isopair_core::pairs::{Kind, PairStructure};
use isopair_core::supercore::{Parity, SuperSpace};
use isopair_core::tkk::*;
use isopair_core::Scalar;

fn zero_pair() -> PairStructure {
    let v = SuperSpace::numbered("e", vec![Parity::EVEN, Parity::ODD]);
    PairStructure::zero(v.clone(), v, Kind::Isotopic)
}

#[test]
fn zero_pair_is_abelian() {
    let a = superalgebra_from_pair(&zero_pair()).unwrap();
    assert_eq!(a.g0_dim(), 0);
    assert_eq!(a.dim(), 4);
    assert!(check_superalgebra(&a).pass());
}

#[test]
fn series_superalgebras_pass() {
    let pairs = [
        series_gl(1, 0).unwrap().pair,
        series_gl(1, 1).unwrap().pair,
        isoquaternionic_pair().pair,
        series_osp(1, 1, 1).unwrap().pair,
        series_q(1).unwrap().pair,
    ];
    for p in &pairs {
        let a = superalgebra_from_pair(p).unwrap();
        let r = check_superalgebra(&a);
        assert!(r.pass(), "{}", r.to_text());
        assert!(check_g0_equivariance(p, &a).pass());
        let bound = p.v1().dim().pow(2) + p.v2().dim().pow(2);
        assert!(a.g0_dim() <= bound);
        assert!(a.closure_rounds <= bound + 1);
    }
    let gl10 = superalgebra_from_pair(&pairs[0]).unwrap();
    // On gl(1) every isocommutator vanishes, so g0 = 0.
    assert_eq!(gl10.g0_dim(), 0);
}

#[test]
fn perturbed_table_fails() {
    let mut a = superalgebra_from_pair(&series_gl(1, 1).unwrap().pair).unwrap();
    let x = a.g1_index(isopair_core::pairs::Side::First, 0);
    let u = a.g1_index(isopair_core::pairs::Side::Second, 0);
    let mut v = a.bracket(x, u).clone();
    v = sparse::add_scaled(&v, &Scalar::one(), &sparse::unit(0));
    a.set_bracket(x, u, v);
    assert!(!check_superalgebra(&a).pass());
}

#[test]
fn wrong_kind_and_failing_pairs_are_rejected() {
    let flipped = series_gl(1, 1).unwrap().pair.parity_flip();
    assert!(matches!(superalgebra_from_pair(&flipped), Err(TkkError::WrongKind { .. })));
    let gl = series_gl(1, 1).unwrap().pair;
    assert!(matches!(lts_from_pair(&gl), Err(TkkError::WrongKind { .. })));
    let mut bad = gl.clone();
    bad.set(isopair_core::pairs::Side::First, 0, 0, 0, sparse::unit(0)).unwrap();
    assert!(matches!(superalgebra_from_pair(&bad), Err(TkkError::Precondition(_))));
}

#[test]
fn triple_systems() {
    let v = SuperSpace::numbered("e", vec![Parity::EVEN, Parity::ODD]);
    let zero = lts_from_pair(&PairStructure::zero(v.clone(), v, Kind::SuperJordan)).unwrap();
    assert!(check_lts_axioms(&zero).pass());
    for (n, m) in [(1, 0), (1, 1)] {
        let p = series_gl(n, m).unwrap().pair.parity_flip();
        let l = lts_from_pair(&p).unwrap();
        let r = check_lts_axioms(&l);
        assert!(r.pass(), "{}", r.to_text());
    }
    let mut l = lts_from_pair(&series_gl(1, 1).unwrap().pair.parity_flip()).unwrap();
    let t = l.triple(0, 4, 0).clone();
    l.set_triple(0, 4, 0, sparse::add_scaled(&t, &Scalar::from_int(2), &sparse::unit(0)));
    assert!(!check_lts_axioms(&l).pass());
}

#[test]
fn json_round_trips() {
    let a = superalgebra_from_pair(&isoquaternionic_pair().pair).unwrap();
    let s = a.to_json();
    let b = PolarizedSuperalgebra::from_json(&s).unwrap();
    assert_eq!(a, b);
    assert_eq!(s, b.to_json());
    let l = lts_from_pair(&series_gl(1, 1).unwrap().pair.parity_flip()).unwrap();
    let s = l.to_json();
    assert_eq!(PolarizedLTS::from_json(&s).unwrap().to_json(), s);
    assert!(PolarizedLTS::from_json("{}").is_err());
}
