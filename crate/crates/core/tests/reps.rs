use isopair_core::constructions::*;
use isopair_core::exactlin::Matrix;
use isopair_core::pairs::{Kind, Side};
use isopair_core::reps::*;
use isopair_core::rng::Lcg;
use isopair_core::supercore::{Parity, SuperSpace};
use isopair_core::tkk::{check_superalgebra, superalgebra_from_pair};
use isopair_core::Scalar;

#[test]
fn zero_and_tautological_reps() {
    let ep = series_gl(1, 1).unwrap();
    let z = PairRep::zero(ep.pair.clone(), SuperSpace::numbered("h", vec![Parity::EVEN, Parity::ODD]));
    assert!(check_rep(&z).pass());
    assert!(check_split(&z, &SplitData { h1: vec![0], h2: vec![1] }).pass());
    for ep in [series_gl(2, 1).unwrap(), series_osp(1, 2, 1).unwrap(), series_q(2).unwrap(), isoquaternionic_pair()] {
        let t = tautological_rep(&ep);
        let r = check_rep(&t);
        assert!(r.pass(), "{}", r.to_text());
    }
    let mut rng = Lcg::new(11);
    for _ in 0..5 {
        let ep = random_closed_subpair(&SuperMatrixSpace::new(2, 1), Kind::Isotopic, &mut rng);
        assert!(check_rep(&tautological_rep(&ep)).pass());
    }
    let t = tautological_rep(&isoquaternionic_pair());
    assert!(!check_split(&t, &SplitData { h1: vec![0], h2: vec![1] }).pass());
    assert!(!check_split(&t, &SplitData { h1: vec![0], h2: vec![0, 1] }).pass());
}

#[test]
fn random_maps_fail() {
    let p = isoquaternionic_pair().pair;
    let mut rng = Lcg::new(3);
    for _ in 0..5 {
        let r = check_rep(&random_rep(&p, 3, &mut rng));
        assert!(!r.pass());
        assert!(r.failing_checks().iter().any(|c| c.starts_with("rep-")));
    }
}

#[test]
fn vanishing_characters_give_the_vacua() {
    let g = diagonal_grading(&isoquaternionic_pair()).unwrap();
    let zero = vec![Scalar::zero(); 4];
    let m = hw_split_module(&g, &zero, &zero, 5).unwrap();
    assert!(m.stabilized);
    assert_eq!(m.total_dim(), 2);
    let (r, s) = (m.rep.unwrap(), m.split.unwrap());
    assert!(check_split(&r, &s).pass());
    assert!(check_rep(&r).pass());
}

#[test]
fn fundamental_representation() {
    let (r, s) = isoquaternion_fundamental().unwrap();
    assert_eq!(r.dim(), 4);
    assert_eq!((s.h1.len(), s.h2.len()), (2, 2));
    assert!(check_rep(&r).pass());
    assert!(check_split(&r, &s).pass());
    let g = diagonal_grading(&isoquaternionic_pair()).unwrap();
    let (c1, c2) = weight_characters(&g, &Scalar::ratio(1, 2), &Scalar::ratio(1, 2)).unwrap();
    let m = hw_split_module(&g, &c1, &c2, 6).unwrap();
    assert!(m.seed_embedded);
    for h in &m.history {
        assert!(h.windows(2).skip(1).all(|w| w[1] <= w[0]), "{h:?}");
    }
    // Different weights give other modules; (1/2, 1) is not four-dimensional.
    let (c1, c2) = weight_characters(&g, &Scalar::ratio(1, 2), &Scalar::one()).unwrap();
    let m = hw_split_module(&g, &c1, &c2, 6).unwrap();
    assert_ne!(m.stabilized.then(|| m.total_dim()), Some(4));
}

#[test]
fn one_level_bound_and_bad_input() {
    for ep in [isoquaternionic_pair(), series_gl(2, 1).unwrap()] {
        let g = diagonal_grading(&ep).unwrap();
        assert!(g.check().pass());
        let (d1, d2) = (ep.pair.v1().dim(), ep.pair.v2().dim());
        let one = |d: usize, g: &GradedPairData, side| {
            (0..d).map(|k| if g.degrees(side)[k] == 0 && k == 0 { Scalar::one() } else { Scalar::zero() }).collect::<Vec<_>>()
        };
        let m = hw_split_module(&g, &one(d1, &g, Side::First), &one(d2, &g, Side::Second), 1).unwrap();
        assert!(m.total_dim() <= 2 + d1 + d2);
        assert!(hw_split_module(&g, &vec![Scalar::zero(); d1], &vec![Scalar::zero(); d2], 0).is_err());
    }
    let g = diagonal_grading(&isoquaternionic_pair()).unwrap();
    let mut bad = vec![Scalar::zero(); 4];
    bad[1] = Scalar::one();
    assert!(matches!(hw_split_module(&g, &bad, &bad, 3), Err(RepError::Precondition(_))));
    let broken = GradedPairData::new(g.pair.clone(), vec![0, 1, 1, 0], g.deg2.clone()).unwrap();
    assert!(!broken.check().pass());
}

#[test]
fn induced_modules() {
    let (r, s) = isoquaternion_fundamental().unwrap();
    let full = Subpair::full(&r.pair);
    for cap in [1, 3] {
        let m = induced_split_module(&r.pair.clone(), &full, &r, &s, cap).unwrap();
        assert!(m.stabilized && m.seed_embedded);
        assert_eq!(m.rep.as_ref(), Some(&r));
        assert_eq!(m.split.as_ref(), Some(&s));
    }

    // Free alternating words on gl(1): one new word per side and level.
    let gl1 = series_gl(1, 0).unwrap().pair;
    let zero = Subpair::zero(&gl1);
    let h = SuperSpace::new(vec!["a".into(), "b".into()], vec![Parity::EVEN; 2]).unwrap();
    let lines = PairRep::zero(zero.pair.clone(), h);
    let split = SplitData { h1: vec![0], h2: vec![1] };
    let m = induced_split_module(&gl1, &zero, &lines, &split, 4).unwrap();
    assert!(!m.stabilized && m.rep.is_none());
    assert_eq!(m.total_dim(), 10);
    assert!(m.dims.iter().all(|d| d.dim == 1));

    // Diagonal subpair of the isoquaternionic pair acting on a line in H1.
    let iq = isoquaternionic_pair().pair;
    let diag = Subpair::of_indices(&iq, &[0, 3], &[0, 3]).unwrap();
    let line = PairRep::zero(diag.pair.clone(), SuperSpace::numbered("v", vec![Parity::EVEN]));
    let m = induced_split_module(&iq, &diag, &line, &SplitData { h1: vec![0], h2: vec![] }, 4).unwrap();
    assert!(!m.dims.is_empty());
    if let (Some(r), Some(s)) = (&m.rep, &m.split) {
        assert!(check_rep(r).pass() && check_split(r, s).pass());
    }

    // Seeds that are not a representation are rejected.
    let mut bad = lines.clone();
    bad.h = SuperSpace::numbered("h", vec![Parity::EVEN; 2]);
    assert!(induced_split_module(&gl1, &zero, &bad, &SplitData { h1: vec![0], h2: vec![0] }, 2).is_err());
    assert!(Subpair::of_indices(&iq, &[1], &[]).is_ok());
    assert!(matches!(Subpair::of_indices(&iq, &[1, 2], &[0]), Err(RepError::NotClosed(_))));
}

#[test]
fn lie_conversions() {
    let g = LieData::sl2();
    let ad: Vec<Matrix> = (0..3).map(|a| g.ad(a)).collect();
    let id = pair_rep_from_lie(&g, &ad, &Matrix::identity(3)).unwrap();
    assert_eq!(id.t1, ad);
    let lr = lie_from_pair_rep(&id).unwrap();
    assert_eq!(lr.mats, ad);
    assert!(lr.report.pass());
    let q = Matrix::diag(&[Scalar::from_int(1), Scalar::from_int(2), Scalar::from_int(3)]);
    let r = pair_rep_from_lie(&g, &ad, &q).unwrap();
    assert!(check_rep(&r).pass());
    let mut rng = Lcg::new(21);
    let mut done = 0;
    while done < 10 {
        let mut q = Matrix::zeros(3, 3);
        for i in 0..3 {
            for j in 0..3 {
                q[(i, j)] = rng.coef();
            }
        }
        if q.rank() < 3 {
            continue;
        }
        let r = pair_rep_from_lie(&g, &ad, &q).unwrap();
        assert_eq!(lie_from_pair_rep(&r).unwrap().mats, ad);
        done += 1;
    }
    let z = PairRep::zero(gk_pair(&g), SuperSpace::numbered("h", vec![Parity::EVEN; 2]));
    assert!(lie_from_pair_rep(&z).unwrap().mats.iter().all(Matrix::is_zero));
    let singular = Matrix::diag(&[Scalar::one(), Scalar::zero(), Scalar::one()]);
    assert!(matches!(pair_rep_from_lie(&g, &ad, &singular), Err(RepError::Singular(_))));
    let t = tautological_rep(&isoquaternionic_pair());
    assert!(matches!(lie_from_pair_rep(&t), Err(RepError::Precondition(_))));
}

#[test]
fn superalgebra_lift() {
    let iq = isoquaternionic_pair().pair;
    let a = superalgebra_from_pair(&iq).unwrap();
    let (r, s) = isoquaternion_fundamental().unwrap();
    // On the plain algebra the assignment is not well defined: the sum of
    // the D(E_ii, E_ii) vanishes on V but not on H.
    let plain = tkk_rep_from_split(&r, &s, &a).unwrap();
    assert!(!plain.report.pass());
    let ext = rep_superalgebra(&r).unwrap();
    assert!(check_superalgebra(&ext).pass());
    assert_eq!(ext.g0_dim(), a.g0_dim() + 1);
    let lift = tkk_rep_from_split(&r, &s, &ext).unwrap();
    assert!(lift.report.pass(), "{}", lift.report.to_text());
    assert_eq!(lift.images.len(), ext.dim());
    let z = PairRep::zero(iq.clone(), SuperSpace::numbered("h", vec![Parity::EVEN; 2]));
    let zs = SplitData { h1: vec![0], h2: vec![1] };
    let lift = tkk_rep_from_split(&z, &zs, &a).unwrap();
    assert!(lift.report.pass() && lift.images.iter().all(Matrix::is_zero));
    let t = tautological_rep(&isoquaternionic_pair());
    assert!(matches!(tkk_rep_from_split(&t, &zs, &a), Err(RepError::Precondition(_))));
}

#[test]
fn graph_representations() {
    let one = Matrix::identity(1);
    let as_graph = |r: &PairRep, p: Matrix, q: Matrix, copies: usize| GraphRep {
        pair: r.pair.clone(),
        h: r.h.clone(),
        t1: vec![r.t1.clone(); copies],
        t2: vec![r.t2.clone(); copies],
        p,
        q,
    };
    let (f, _) = isoquaternion_fundamental().unwrap();
    let mut rng = Lcg::new(8);
    let mut reps = vec![f.clone(), tautological_rep(&series_gl(1, 1).unwrap())];
    reps.extend((0..3).map(|_| random_rep(&f.pair, 2, &mut rng)));
    for r in &reps {
        let a = check_rep(r);
        let b = check_graph_rep(&as_graph(r, one.clone(), one.clone(), 1)).unwrap();
        assert_eq!(a.pass(), b.pass());
        assert!(reports_agree(&a, &b), "{}\n{}", a.to_text(), b.to_text());
    }
    let half = Matrix::from_rows(vec![vec![Scalar::ratio(1, 2); 2]; 2]).unwrap();
    // Identical copies: each half-weighted sum reproduces the single identity.
    let two = check_graph_rep(&as_graph(&f, half.clone(), half, 2)).unwrap();
    assert_eq!(two.total, 2 * check_graph_rep(&as_graph(&f, one.clone(), one.clone(), 1)).unwrap().total);
    assert!(two.pass());
    let zero = PairRep::zero(f.pair.clone(), f.h.clone());
    assert!(check_graph_rep(&as_graph(&zero, Matrix::zeros(1, 1), Matrix::zeros(1, 1), 1)).unwrap().pass());
    assert!(matches!(check_graph_rep(&as_graph(&f, Matrix::zeros(2, 1), one, 1)), Err(RepError::Shape(_))));
}

#[test]
fn json_round_trips() {
    let (r, s) = isoquaternion_fundamental().unwrap();
    let j = r.to_json();
    assert_eq!(PairRep::from_json(&j).unwrap(), r);
    assert_eq!(serde_json::from_str::<SplitData>(&serde_json::to_string(&s).unwrap()).unwrap(), s);
    let mut v: serde_json::Value = serde_json::from_str(&j).unwrap();
    v["t1"].as_array_mut().unwrap().pop();
    assert!(PairRep::from_json(&v.to_string()).is_err());
}
