use isopair_core::pairs::verify;
use isopair_core::polyfields::*;
use isopair_core::rng::Lcg;
use isopair_core::supercore::Parity;
use isopair_core::Scalar;

fn p(s: &str) -> SuperPolynomial {
    parse_poly(s, 1, 2).unwrap()
}

fn v(s: &str) -> SuperVectorField {
    parse_field(s, 1, 2).unwrap()
}

#[test]
fn grassmann_products() {
    assert!(poly_mul(&p("t1"), &p("t1")).unwrap().is_zero());
    assert_eq!(poly_mul(&p("t2"), &p("t1")).unwrap(), p("-t1*t2"));
    assert_eq!(poly_mul(&p("x1 + t1"), &p("x1 - t1")).unwrap(), p("x1^2"));
    assert!(poly_mul(&p("x1"), &parse_poly("x1", 1, 0).unwrap()).is_err());
}

#[test]
fn field_application() {
    assert_eq!(vf_apply(&v("dx1"), &p("x1^2")).unwrap(), p("2*x1"));
    assert_eq!(vf_apply(&v("dt1"), &p("t1*t2")).unwrap(), p("t2"));
    assert_eq!(vf_apply(&v("x1*dx1"), &p("x1^3")).unwrap(), p("3*x1^3"));
}

#[test]
fn field_brackets() {
    let (x, y) = (v("x1*dx1 + t1*dt2"), v("x1^2*dt1"));
    assert_eq!(iso_bracket_fields(&x, &y, &p("1")).unwrap(), x.lie_bracket(&y).unwrap());
    let even = v("x1*dx1");
    assert!(iso_bracket_fields(&even, &even, &p("x1^2 + t1*t2")).unwrap().is_zero());
    let (dx, xdx, f) = (v("dx1"), v("x1*dx1"), p("x1"));
    let z = iso_bracket_fields(&dx, &xdx, &f).unwrap();
    assert!(fields_match_composition(&dx, &xdx, &f).unwrap());
    // X(f)Y - Y(f)X + f[X,Y] = x∂ - x∂ + x∂ = x∂.
    assert_eq!(z, v("x1*dx1"));
    assert_eq!(iso_bracket_fields(&v("dx1 + dt1"), &dx, &f), Err(PolyError::Inhomogeneous));
}

#[test]
fn function_brackets() {
    let f = p("x1^2 + t1*t2");
    assert!(iso_bracket_functions(&f, &f, &v("x1*dx1")).unwrap().is_zero());
    assert_eq!(iso_bracket_functions(&p("x1"), &p("1"), &v("dx1")).unwrap(), p("-1"));
    let (t1, t2, d) = (p("t1"), p("t2"), v("dt1"));
    assert_eq!(iso_bracket_functions(&t1, &t2, &d).unwrap(), p("t2"));
    assert!(functions_match_composition(&t1, &t2, &d).unwrap());
    assert_eq!(iso_bracket_functions(&p("x1 + t1"), &t2, &d), Err(PolyError::Inhomogeneous));
}

#[test]
fn brackets_are_derivations() {
    let mut rng = Lcg::new(5);
    let par = |rng: &mut Lcg| Parity::new(rng.below(2) as u8);
    for _ in 0..20 {
        let (px, py, pf) = (par(&mut rng), par(&mut rng), par(&mut rng));
        let x = random_field(1, 2, 2, px, &mut rng);
        let y = random_field(1, 2, 2, py, &mut rng);
        let f = random_poly(1, 2, 2, pf, &mut rng);
        let z = iso_bracket_fields(&x, &y, &f).unwrap();
        let pz = z.parity().unwrap();
        let pg = par(&mut rng);
        let g = random_poly(1, 2, 2, pg, &mut rng);
        let h = random_poly(1, 2, 2, par(&mut rng), &mut rng);
        let lhs = z.apply(&g.mul(&h));
        let rhs = z.apply(&g).mul(&h).add_scaled(&Scalar::sign(pz.mul(pg)), &g.mul(&z.apply(&h)));
        assert_eq!(lhs, rhs);
        assert!(z.degree() <= x.degree() + y.degree() + f.degree());
        assert!(fields_match_composition(&x, &y, &f).unwrap());
    }
}

#[test]
fn sampled_pair_identities() {
    for (n, m) in [(1, 0), (1, 1)] {
        let r = sample_check_w_o_pair(n, m, 3, 50, 7);
        assert!(r.pass(), "{}", r.to_text());
        assert_eq!(r.find("jacobi-analog").unwrap().total, 100);
    }
    let empty = sample_check_w_o_pair(1, 1, 3, 0, 7);
    assert!(empty.pass());
    assert!(!sample_check_w_o_pair(0, 0, 3, 5, 7).pass());
}

#[test]
fn sampling_is_deterministic() {
    let a = sample_check_w_o_pair(1, 1, 2, 10, 3);
    let b = sample_check_w_o_pair(1, 1, 2, 10, 3);
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
}

#[test]
fn truncated_pair_verifies() {
    for (n, m) in [(1, 0), (1, 1), (2, 1)] {
        let pair = wo_truncated_pair(n, m);
        assert_eq!(pair.v1().dim(), n + m);
        assert_eq!(pair.v2().dim(), 1 + n + m);
        let r = verify(&pair);
        assert!(r.pass(), "{}", r.to_text());
    }
    // [dx1, dx1]_{x1} = 1·dx1 - 1·dx1 = 0, [1, x1]_{dx1} = 1.
    let pair = wo_truncated_pair(1, 0);
    assert!(pair.m(isopair_core::pairs::Side::First, 1, 0, 0).is_empty());
    assert_eq!(pair.m(isopair_core::pairs::Side::Second, 0, 0, 1), &vec![(0, Scalar::one())]);
}

#[test]
fn serde_uses_text() {
    let f = p("3*x1^2*t1 + 1/2*t2");
    let s = serde_json::to_string(&f).unwrap();
    assert_eq!(s, r#"{"n":1,"m":2,"text":"3*x1^2*t1 + 1/2*t2"}"#);
    assert_eq!(serde_json::from_str::<SuperPolynomial>(&s).unwrap(), f);
    let x = v("-t1*dx1 + (x1 + 2)*dt1");
    let s = serde_json::to_string(&x).unwrap();
    assert_eq!(serde_json::from_str::<SuperVectorField>(&s).unwrap(), x);
}
