use isopair_core::constructions::*;
use isopair_core::exactlin::Matrix;
use isopair_core::pairs::{verify, Kind, PairStructure, Side};
use isopair_core::rng::Lcg;
use isopair_core::Scalar;

fn dims(ep: &EnvelopePair) -> (String, String) {
    (ep.pair.v1().dims_string(), ep.pair.v2().dims_string())
}

#[test]
fn gl_dimensions_and_verify() {
    let g10 = series_gl(1, 0).unwrap();
    assert_eq!(dims(&g10), ("1|0".into(), "1|0".into()));
    assert!(g10.pair.is_zero());
    for (n, m, d) in [(1, 1, "2|2"), (2, 1, "5|4")] {
        let ep = series_gl(n, m).unwrap();
        assert_eq!(dims(&ep), (d.into(), d.into()));
        let r = verify(&ep.pair);
        assert!(r.pass(), "{}", r.to_text());
    }
    assert!(series_gl(0, 0).is_err());
}

#[test]
fn osp_dimensions() {
    for eps in [1, -1] {
        let ep = series_osp(2, 2, eps).unwrap();
        assert_eq!(dims(&ep), ("4|4".into(), "4|4".into()));
        assert_eq!(ep.transpose, Some(Transpose::Plain));
        assert!(verify(&ep.pair).pass());
        let small = series_osp(1, 1, eps).unwrap();
        assert_eq!(small.pair.v1().even_dim(), 1);
        assert!(verify(&small.pair).pass());
    }
}

#[test]
fn q_and_osq() {
    assert_eq!(dims(&series_q(1).unwrap()), ("1|1".into(), "1|1".into()));
    let q2 = series_q(2).unwrap();
    assert_eq!(dims(&q2), ("4|4".into(), "4|4".into()));
    assert!(verify(&q2.pair).pass());
    let o1 = series_osq(1).unwrap();
    assert_eq!(o1.pair.v1().dims_string(), "0|1");
    let o2 = series_osq(2).unwrap();
    assert_eq!(dims(&o2), ("1|3".into(), "1|3".into()));
    assert!(verify(&o2.pair).pass());
    assert_eq!(osq_literal_dims(2), ["3|1".to_string(), "0|4".to_string()]);
    assert!(matches!(series_osq_literal(2), Err(ConstructionError::NotClosed { .. })));
}

#[test]
fn osp_embeds_in_gl() {
    let gl = series_gl(2, 1).unwrap();
    let osp = series_osp(2, 1, 1).unwrap();
    for side in [Side::First, Side::Second] {
        let sub = osp.span(side);
        let other = osp.span(side.other());
        for (s, u) in other.basis.iter().enumerate() {
            for (a, x) in sub.basis.iter().enumerate() {
                for (b, y) in sub.basis.iter().enumerate() {
                    // Bracket in gl of the included elements equals the inclusion of the osp bracket.
                    let cu = gl.coords_of(side.other(), u).unwrap();
                    let cx = gl.coords_of(side, x).unwrap();
                    let cy = gl.coords_of(side, y).unwrap();
                    let big = gl.pair.bracket(side, &cu, &cx, &cy).unwrap();
                    let small = osp.pair.m(side, s, a, b);
                    let mut dense = vec![Scalar::zero(); sub.dim()];
                    for (k, c) in small {
                        dense[*k] = c.clone();
                    }
                    let included = gl.coords_of(side, &osp.element(side, &dense)).unwrap();
                    assert_eq!(big, included);
                }
            }
        }
    }
}

#[test]
fn envelope_examples() {
    let sp = SuperMatrixSpace::new(1, 1);
    let ep = envelope_pair(&sp, MatrixSpan::full(&sp), MatrixSpan::full(&sp), Kind::Isotopic).unwrap();
    assert_eq!(ep.pair.v1().dim(), 4);
    let sp2 = SuperMatrixSpace::new(2, 0);
    let upper = MatrixSpan::new(&sp2, vec![Matrix::unit(2, 0, 1)]);
    let ep = envelope_pair(&sp2, upper.clone(), upper, Kind::Isotopic).unwrap();
    assert!(ep.pair.is_zero());
    let s1 = MatrixSpan::new(&sp2, vec![Matrix::unit(2, 0, 0), Matrix::unit(2, 0, 1)]);
    let s2 = MatrixSpan::new(&sp2, vec![Matrix::unit(2, 1, 0)]);
    // [E11, E12]_{E21} = E11E21E12 - E12E21E11 = E12 - 0, fine; [E12,E12]_{E21} = 2·E12E21E12 = 2E12.
    let ep = envelope_pair(&sp2, s1, s2, Kind::Isotopic);
    match ep {
        Ok(ep) => assert!(verify(&ep.pair).pass()),
        Err(ConstructionError::NotClosed { side, .. }) => assert_eq!(side, 2),
        Err(e) => panic!("{e}"),
    }
}

#[test]
fn centralizer_examples() {
    let gl = series_gl(2, 0).unwrap();
    let z = vec![Scalar::zero(); 4];
    let full = centralizer_subpair(&gl, &z, &z).unwrap();
    assert_eq!(full.pair.v1().dim(), 4);
    let e11 = gl.coords_of(Side::First, &Matrix::unit(2, 0, 0)).unwrap();
    let id = gl.coords_of(Side::Second, &Matrix::identity(2)).unwrap();
    let c = centralizer_subpair(&gl, &e11, &id).unwrap();
    assert_eq!(c.pair.v1().dim(), 2);
    assert!(verify(&c.pair).pass());
    let g11 = series_gl(1, 1).unwrap();
    let i1 = g11.coords_of(Side::First, &Matrix::identity(2)).unwrap();
    let i2 = g11.coords_of(Side::Second, &Matrix::identity(2)).unwrap();
    assert_eq!(centralizer_subpair(&g11, &i1, &i2).unwrap().pair.v1().dim(), 4);
}

#[test]
fn random_subpairs_pass_and_perturbations_fail() {
    let sp = SuperMatrixSpace::new(2, 1);
    let mut rng = Lcg::new(11);
    for _ in 0..5 {
        let ep = random_closed_subpair(&sp, Kind::Isotopic, &mut rng);
        assert!(verify(&ep.pair).pass());
    }
    let gl = series_gl(2, 1).unwrap();
    for _ in 0..5 {
        let q = perturb(&gl.pair, &mut rng).unwrap();
        let r = verify(&q);
        assert!(!r.pass());
        assert!(r.find("evenness").unwrap().pass());
    }
}

#[test]
fn killing_values() {
    let k = killing_form(&LieData::sl2());
    assert_eq!(k[(1, 1)], Scalar::from_int(8));
    assert_eq!(k[(0, 2)], Scalar::from_int(4));
    assert_eq!(k[(0, 0)], Scalar::zero());
    let k = killing_form(&LieData::so3());
    assert_eq!(k, Matrix::identity(3).scale(&Scalar::from_int(-2)));
    assert!(killing_form(&LieData::abelian(2)).is_zero());
}

#[test]
fn magnetic_pairs() {
    for g in [LieData::sl2(), LieData::so3()] {
        let k = killing_form(&g);
        for sign in [1, -1] {
            let p = magnetic_pair(&g, &k, sign).unwrap();
            assert!(verify(&p).pass(), "{}", verify(&p).to_text());
            let ad: Vec<Matrix> = (0..3).map(|z| g.ad(z)).collect();
            assert!(check_equivariance(&p, &ad, &ad).pass());
        }
    }
    let g = LieData::sl2();
    let p = magnetic_pair(&g, &killing_form(&g), 1).unwrap();
    // [h, e]_h = (h,h)e - (h,e)h = 8e
    assert_eq!(p.m(Side::First, 1, 1, 0), &vec![(0, Scalar::from_int(8))]);
    // Same sign on both sides: compatibility fails, the Jacobi analog holds.
    let same = PairStructure::from_fn(p.v1().clone(), p.v2().clone(), Kind::Isotopic, |_, u, x, y| {
        p.m(Side::First, u, x, y).clone()
    });
    let r = verify(&same);
    assert!(!r.find("compatibility").unwrap().pass());
    assert!(r.find("jacobi-analog").unwrap().pass());
    let ab = LieData::abelian(2);
    assert!(verify(&magnetic_pair(&ab, &Matrix::identity(2), 1).unwrap()).pass());
    assert!(magnetic_pair(&ab, &Matrix::zeros(2, 2), 1).is_err());
}

#[test]
fn gk_pair_is_isotopic() {
    assert!(verify(&gk_pair(&LieData::sl2())).pass());
}

#[test]
fn sym2_so3() {
    let g = LieData::so3();
    let eta = killing_form(&g).scale(&Scalar::ratio(-1, 2));
    let r = sym2_pair(&g, &eta).unwrap();
    assert_eq!(r.invariants.len(), 1);
    assert!(r.m_antisymmetry.pass());
    assert_eq!(r.readings.len(), 2);
    for reading in &r.readings {
        assert!(reading.report.total > 0);
        assert!(reading.quotient.is_some());
    }
    let ab = sym2_pair(&LieData::abelian(2), &Matrix::identity(2)).unwrap();
    assert!(ab.primary().pair.is_zero());
    assert!(ab.primary().report.pass());
}
