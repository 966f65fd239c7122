//! The acceptance suite: thirteen exact checks over the whole crate, shared
//! by the `acceptance` test target and `isopair suite`.
//!
//! Every criterion records its artifacts (pairs, algebras, representations,
//! reports) so the last one can round-trip each of them through JSON.

use std::time::{Duration, Instant};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::constructions::{
    check_equivariance, isoquaternionic_pair, killing_form, magnetic_pair, perturb, random_closed_subpair, series_gl,
    series_osp, series_osq, series_q, sym2_pair, EnvelopePair, LieData, SuperMatrixSpace,
};
use crate::exactlin::Matrix;
use crate::pairs::{check_super_jordan, verify, AxiomReport, Kind};
use crate::polyfields::{sample_check_w_o_pair, wo_truncated_pair};
use crate::reps::{
    check_graph_rep, check_rep, check_split, diagonal_grading, hw_split_module, lie_from_pair_rep, pair_rep_from_lie,
    random_rep, rep_superalgebra, reports_agree, tautological_rep, tkk_rep_from_split, weight_characters, GraphRep,
    PairRep, RepError,
};
use crate::rng::Lcg;
use crate::supercore::{catalog_entry, validate_identity};
use crate::tkk::{check_lts_axioms, check_superalgebra, lts_from_pair, superalgebra_from_pair};
use crate::Scalar;

pub const DEFAULT_SEED: u64 = 20240601;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionResult {
    pub number: u8,
    pub title: String,
    pub pass: bool,
    pub millis: u64,
    /// One line per sub-check, `ok`/`FAIL` or `info`.
    pub lines: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub criteria: Vec<CriterionResult>,
}

impl SuiteReport {
    pub fn pass(&self) -> bool {
        self.criteria.iter().all(|c| c.pass)
    }

    /// `[PASS] 1 identity validation (12 ms)` per criterion, details indented.
    pub fn to_table(&self, details: bool) -> String {
        let mut out = format!("seed {}\n", self.seed);
        for c in &self.criteria {
            let tag = if c.pass { "PASS" } else { "FAIL" };
            out += &format!("[{tag}] {:>2} {} ({} ms)\n", c.number, c.title, c.millis);
            if details || !c.pass {
                for l in &c.lines {
                    out += &format!("       {l}\n");
                }
            }
        }
        let passed = self.criteria.iter().filter(|c| c.pass).count();
        out += &format!("{passed}/{} criteria passed\n", self.criteria.len());
        out
    }
}

/// Collects sub-check outcomes for one criterion.
struct Sheet {
    pass: bool,
    lines: Vec<String>,
}

impl Sheet {
    fn new() -> Self {
        Sheet { pass: true, lines: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl Into<String>) -> bool {
        self.pass &= ok;
        self.lines.push(format!("{} {}", if ok { "ok  " } else { "FAIL" }, what.into()));
        ok
    }

    fn report(&mut self, what: &str, r: &AxiomReport) -> bool {
        let mut line = format!("{what}: {} instances", r.total);
        if !r.pass() {
            line += &format!(", {} failures in {}", r.failure_count, r.failing_checks().join(", "));
        }
        self.check(r.pass(), line)
    }

    fn info(&mut self, what: impl Into<String>) {
        self.lines.push(format!("info {}", what.into()));
    }

    fn error(&mut self, what: &str, e: impl std::fmt::Display) {
        self.check(false, format!("{what}: {e}"));
    }

    fn timed(&mut self, what: &str, took: Duration, limit: Duration) {
        self.check(took < limit, format!("{what} took {:.2} s (limit {} s)", took.as_secs_f64(), limit.as_secs()));
    }
}

/// JSON artifacts and their round-trip verdicts, in production order.
#[derive(Default)]
struct Artifacts {
    entries: Vec<(String, Result<bool, String>)>,
}

impl Artifacts {
    fn add<T: Serialize + DeserializeOwned>(&mut self, name: impl Into<String>, v: &T) {
        self.entries.push((name.into(), round_trip(v)));
    }
}

/// `serialize → parse → serialize` and compare the two texts byte for byte.
pub fn round_trip<T: Serialize + DeserializeOwned>(v: &T) -> Result<bool, String> {
    let a = serde_json::to_string_pretty(v).map_err(|e| e.to_string())?;
    let back: T = serde_json::from_str(&a).map_err(|e| e.to_string())?;
    let b = serde_json::to_string_pretty(&back).map_err(|e| e.to_string())?;
    Ok(a == b)
}

fn series() -> Vec<(&'static str, Result<EnvelopePair, String>)> {
    let s = |r: Result<EnvelopePair, crate::constructions::ConstructionError>| r.map_err(|e| e.to_string());
    vec![
        ("gl(1,1)", s(series_gl(1, 1))),
        ("gl(2,1)", s(series_gl(2, 1))),
        ("gl(2,2)", s(series_gl(2, 2))),
        ("osp+(2,2)", s(series_osp(2, 2, 1))),
        ("osp-(2,2)", s(series_osp(2, 2, -1))),
        ("osp+(1,1)", s(series_osp(1, 1, 1))),
        ("osp-(1,1)", s(series_osp(1, 1, -1))),
        ("q(2)", s(series_q(2))),
        ("osq(2)", s(series_osq(2))),
    ]
}

fn c1(sh: &mut Sheet) {
    let start = Instant::now();
    for id in ["antisymmetry", "jacobi-analog", "compatibility", "super-jordan", "rep-first", "rep-second"] {
        let c = catalog_entry(id);
        match validate_identity(&c.adopted.lhs, &c.adopted.rhs) {
            Ok(v) => {
                let ok = v.all_equal && v.assignments.len() == 32;
                sh.check(ok, format!("{id}: {}/32 parity assignments cancel", 32 - v.failing()));
            }
            Err(e) => sh.error(id, e),
        }
        if c.corrected() {
            sh.info(format!("{id}: adopted form differs from the printed one ({} of 32 printed assignments fail)", c.printed_failures));
            for d in c.diff_lines() {
                sh.info(format!("  {d}"));
            }
        }
    }
    sh.timed("validation", start.elapsed(), Duration::from_secs(1));
}

fn c2(sh: &mut Sheet, art: &mut Artifacts) {
    for (name, ep) in series() {
        let ep = match ep {
            Ok(ep) => ep,
            Err(e) => {
                sh.error(name, e);
                continue;
            }
        };
        let start = Instant::now();
        let r = verify(&ep.pair);
        let took = start.elapsed();
        sh.report(&format!("{name} [{} / {}]", ep.pair.v1().dims_string(), ep.pair.v2().dims_string()), &r);
        if name == "gl(2,2)" {
            sh.timed("gl(2,2) verify", took, Duration::from_secs(60));
        }
        art.add(format!("{name} pair"), &ep.pair);
        art.add(format!("{name} report"), &r);
    }
}

fn c3(sh: &mut Sheet, art: &mut Artifacts, seed: u64) {
    let mut rng = Lcg::new(seed).fork(3);
    let sp = SuperMatrixSpace::new(2, 1);
    let mut passed = 0;
    for k in 0..20 {
        let ep = random_closed_subpair(&sp, Kind::Isotopic, &mut rng);
        let r = verify(&ep.pair);
        if r.pass() {
            passed += 1;
        } else {
            sh.report(&format!("subpair {k}"), &r);
        }
        art.add(format!("subpair {k}"), &ep.pair);
    }
    sh.check(passed == 20, format!("{passed}/20 random closed subpairs of Mat(2|1) pass"));
    let gl = match series_gl(2, 1) {
        Ok(gl) => gl,
        Err(e) => return sh.error("gl(2,1)", e),
    };
    let mut failed = 0;
    for k in 0..20 {
        match perturb(&gl.pair, &mut rng) {
            Some(q) => {
                let r = verify(&q);
                failed += usize::from(!r.pass());
                art.add(format!("perturbation {k}"), &q);
                art.add(format!("perturbation {k} report"), &r);
            }
            None => sh.error(&format!("perturbation {k}"), "no even slot to perturb"),
        }
    }
    sh.check(failed == 20, format!("{failed}/20 perturbations of gl(2,1) fail"));
}

fn c4(sh: &mut Sheet, art: &mut Artifacts) {
    for (name, ep) in series() {
        let Ok(ep) = ep else {
            sh.error(name, "did not build");
            continue;
        };
        let flipped = ep.pair.parity_flip();
        match check_super_jordan(&flipped) {
            Ok(r) => {
                sh.report(&format!("flipped {name}"), &r);
                art.add(format!("flipped {name}"), &flipped);
            }
            Err(e) => sh.error(name, e),
        }
    }
}

fn c5(sh: &mut Sheet, art: &mut Artifacts) {
    let sl2 = LieData::sl2();
    let k = killing_form(&sl2);
    sh.check(k[(1, 1)] == Scalar::from_int(8), format!("sl(2): kappa(h,h) = {}", k[(1, 1)]));
    sh.check(k[(0, 2)] == Scalar::from_int(4), format!("sl(2): kappa(e,f) = {}", k[(0, 2)]));
    for (name, g) in [("sl(2)", sl2), ("so(3)", LieData::so3())] {
        match magnetic_pair(&g, &killing_form(&g), 1) {
            Ok(p) => {
                let r = verify(&p);
                sh.report(&format!("magnetic {name}"), &r);
                let ad: Vec<Matrix> = (0..g.dim()).map(|z| g.ad(z)).collect();
                sh.report(&format!("magnetic {name} equivariance"), &check_equivariance(&p, &ad, &ad));
                art.add(format!("magnetic {name}"), &p);
                art.add(format!("magnetic {name} report"), &r);
            }
            Err(e) => sh.error(name, e),
        }
    }
}

fn c6(sh: &mut Sheet, art: &mut Artifacts) {
    let g = LieData::so3();
    let eta = killing_form(&g).scale(&Scalar::ratio(-1, 2));
    let res = match sym2_pair(&g, &eta) {
        Ok(r) => r,
        Err(e) => return sh.error("sym2 so(3)", e),
    };
    sh.check(res.invariants.len() == 1, format!("dim S2(g)^g = {}", res.invariants.len()));
    sh.report("m-bracket antisymmetry", &res.m_antisymmetry);
    for name in ["literal", "c-substituted"] {
        let Some(rd) = res.reading(name) else {
            sh.error(name, "reading missing");
            continue;
        };
        let complete = rd.report.total > 0 && !rd.report.parts.is_empty();
        sh.check(complete, format!("{name}: verdict report with {} instances", rd.report.total));
        let verdict = if rd.report.pass() { "passes".to_string() } else { format!("fails {}", rd.report.failing_checks().join(", ")) };
        sh.info(format!("{name}: verify {verdict}; equivariance {}", if rd.equivariance.pass() { "passes" } else { "fails" }));
        if let Some(q) = &rd.quotient {
            sh.info(format!(
                "{name}: quotient by invariants well defined: {}, verify {}",
                q.well_defined,
                if q.report.pass() { "passes" } else { "fails" }
            ));
            art.add(format!("sym2 {name} quotient"), &q.pair);
        }
        art.add(format!("sym2 {name}"), &rd.pair);
        art.add(format!("sym2 {name} report"), &rd.report);
    }
}

fn c7(sh: &mut Sheet, art: &mut Artifacts) {
    let start = Instant::now();
    let pairs = [("gl(1,1)", series_gl(1, 1).map(|e| e.pair)), ("isoquaternionic", Ok(isoquaternionic_pair().pair))];
    for (name, p) in pairs {
        let p = match p {
            Ok(p) => p,
            Err(e) => {
                sh.error(name, e);
                continue;
            }
        };
        match superalgebra_from_pair(&p) {
            Ok(a) => {
                let r = check_superalgebra(&a);
                sh.report(&format!("{name} superalgebra [g0 dim {}, total {}]", a.g0_dim(), a.dim()), &r);
                art.add(format!("{name} superalgebra"), &a);
                art.add(format!("{name} superalgebra report"), &r);
            }
            Err(e) => sh.error(name, e),
        }
    }
    sh.timed("construction and checks", start.elapsed(), Duration::from_secs(30));
}

fn c8(sh: &mut Sheet, art: &mut Artifacts) {
    let p = match series_gl(1, 1) {
        Ok(ep) => ep.pair.parity_flip(),
        Err(e) => return sh.error("gl(1,1)", e),
    };
    match lts_from_pair(&p) {
        Ok(l) => {
            let r = check_lts_axioms(&l);
            sh.report("triple system of flipped gl(1,1)", &r);
            art.add("triple system", &l);
            art.add("triple system report", &r);
        }
        Err(e) => sh.error("lts", e),
    }
}

fn c9(sh: &mut Sheet, art: &mut Artifacts) {
    let iq = isoquaternionic_pair();
    let run = || -> Result<_, RepError> {
        let g = diagonal_grading(&iq)?;
        let half = Scalar::ratio(1, 2);
        let (chi1, chi2) = weight_characters(&g, &half, &half)?;
        Ok((g.clone(), hw_split_module(&g, &chi1, &chi2, 6)?))
    };
    let (g, m) = match run() {
        Ok(x) => x,
        Err(e) => return sh.error("highest-weight module", e),
    };
    art.add("grading", &g);
    art.add("highest-weight module", &m);
    sh.check(m.stabilized, format!("stabilized after {} levels", m.levels));
    sh.check(m.total_dim() == 4, format!("total dimension {}", m.total_dim()));
    let (Some(r), Some(s)) = (m.rep, m.split) else {
        return sh.error("module", "no action extracted");
    };
    sh.info(format!("H1 dim {}, H2 dim {}", s.h1.len(), s.h2.len()));
    let rr = check_rep(&r);
    sh.report("check_rep", &rr);
    let sr = check_split(&r, &s);
    sh.report("check_split", &sr);
    art.add("fundamental rep", &r);
    art.add("fundamental split", &s);
    art.add("fundamental rep report", &rr);
    match rep_superalgebra(&r) {
        Ok(ext) => {
            sh.report(&format!("superalgebra with g0 acting on V and H [g0 dim {}]", ext.g0_dim()), &check_superalgebra(&ext));
            match tkk_rep_from_split(&r, &s, &ext) {
                Ok(lift) => {
                    sh.report("superalgebra homomorphism", &lift.report);
                    art.add("superalgebra lift", &lift);
                }
                Err(e) => sh.error("superalgebra homomorphism", e),
            }
            art.add("extended superalgebra", &ext);
        }
        Err(e) => sh.error("extended superalgebra", e),
    }
    if let Ok(plain) = superalgebra_from_pair(&iq.pair) {
        if let Ok(l) = tkk_rep_from_split(&r, &s, &plain) {
            sh.info(format!(
                "with g0 = inner derivations of V only [dim {}] the assignment is not a homomorphism: {} failures",
                plain.g0_dim(),
                l.report.failure_count
            ));
        }
    }
}

fn c10(sh: &mut Sheet, art: &mut Artifacts, seed: u64) {
    let g = LieData::sl2();
    let ad: Vec<Matrix> = (0..g.dim()).map(|a| g.ad(a)).collect();
    let mut rng = Lcg::new(seed).fork(10);
    let mut exact = 0;
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
        match pair_rep_from_lie(&g, &ad, &q).and_then(|r| lie_from_pair_rep(&r).map(|l| (r, l))) {
            Ok((r, l)) => {
                exact += usize::from(l.mats == ad && l.report.pass());
                art.add(format!("sl(2) rep {done}"), &r);
                art.add(format!("sl(2) lie rep {done}"), &l);
            }
            Err(e) => sh.error(&format!("Q {done}"), e),
        }
        done += 1;
    }
    sh.check(exact == 10, format!("{exact}/10 round trips return T0 exactly"));
    let singular = Matrix::diag(&[Scalar::one(), Scalar::zero(), Scalar::one()]);
    let rejected = matches!(pair_rep_from_lie(&g, &ad, &singular), Err(RepError::Singular(_)));
    sh.check(rejected, "singular Q rejected");
}

fn c11(sh: &mut Sheet, art: &mut Artifacts, seed: u64) {
    let mut rng = Lcg::new(seed).fork(11);
    let sp = SuperMatrixSpace::new(2, 1);
    let mut valid: Vec<PairRep> = Vec::new();
    while valid.len() < 10 {
        let r = tautological_rep(&random_closed_subpair(&sp, Kind::Isotopic, &mut rng));
        if check_rep(&r).pass() {
            valid.push(r);
        } else {
            sh.error("tautological rep", "failed check_rep");
            return;
        }
    }
    let iq = isoquaternionic_pair().pair;
    let mut invalid: Vec<PairRep> = Vec::new();
    while invalid.len() < 10 {
        let r = random_rep(&iq, 2, &mut rng);
        if !check_rep(&r).pass() {
            invalid.push(r);
        }
    }
    let one = Matrix::identity(1);
    for (kind, reps) in [("valid", &valid), ("invalid", &invalid)] {
        let mut agree = 0;
        for (k, r) in reps.iter().enumerate() {
            let gr = GraphRep { pair: r.pair.clone(), h: r.h.clone(), t1: vec![r.t1.clone()], t2: vec![r.t2.clone()], p: one.clone(), q: one.clone() };
            let a = check_rep(r);
            match check_graph_rep(&gr) {
                Ok(b) => {
                    agree += usize::from(a.pass() == b.pass() && reports_agree(&a, &b));
                    art.add(format!("{kind} graph rep {k}"), &gr);
                    art.add(format!("{kind} graph rep {k} report"), &b);
                }
                Err(e) => sh.error(&format!("{kind} {k}"), e),
            }
        }
        sh.check(agree == 10, format!("{agree}/10 {kind} reps: graph report equals check_rep"));
    }
}

fn c12(sh: &mut Sheet, art: &mut Artifacts, seed: u64) {
    let r = sample_check_w_o_pair(1, 1, 3, 50, seed);
    for part in ["antisymmetry", "jacobi-analog", "compatibility", "composition-oracle"] {
        match r.find(part) {
            Some(p) => {
                sh.report(part, p);
            }
            None => sh.error(part, "missing from report"),
        }
    }
    sh.report("all sampled checks", &r);
    art.add("w/o sample report", &r);
    let p = wo_truncated_pair(1, 1);
    sh.info(format!("truncated pair verify: {}", if verify(&p).pass() { "passes" } else { "fails" }));
    art.add("w/o truncated pair", &p);
}

fn c13(sh: &mut Sheet, art: &Artifacts) {
    let mut ok = 0;
    for (name, verdict) in &art.entries {
        match verdict {
            Ok(true) => ok += 1,
            Ok(false) => {
                sh.check(false, format!("{name}: second serialization differs"));
            }
            Err(e) => sh.error(name, e),
        }
    }
    sh.check(ok == art.entries.len() && ok > 0, format!("{ok}/{} artifacts byte-identical after a round trip", art.entries.len()));
}

const TITLES: [&str; 13] = [
    "identity validation",
    "series pairs build and verify",
    "envelope oracle",
    "parity-flip duality",
    "magnetic pairs",
    "sym2 pair of so(3)",
    "polarized superalgebras",
    "triple system axioms",
    "fundamental isoquaternionic representation",
    "(g,k) round trip",
    "graph-representations",
    "vector fields and functions",
    "JSON round trips",
];

/// Runs all criteria in order with `jobs` worker threads for the parallel
/// checkers (`None` leaves the global pool alone).
pub fn run_suite(seed: u64, jobs: Option<usize>) -> SuiteReport {
    match jobs {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| run_all(seed)),
            Err(_) => run_all(seed),
        },
        None => run_all(seed),
    }
}

fn run_all(seed: u64) -> SuiteReport {
    let mut art = Artifacts::default();
    let mut criteria = Vec::with_capacity(13);
    for number in 1..=13u8 {
        let mut sh = Sheet::new();
        let start = Instant::now();
        match number {
            1 => c1(&mut sh),
            2 => c2(&mut sh, &mut art),
            3 => c3(&mut sh, &mut art, seed),
            4 => c4(&mut sh, &mut art),
            5 => c5(&mut sh, &mut art),
            6 => c6(&mut sh, &mut art),
            7 => c7(&mut sh, &mut art),
            8 => c8(&mut sh, &mut art),
            9 => c9(&mut sh, &mut art),
            10 => c10(&mut sh, &mut art, seed),
            11 => c11(&mut sh, &mut art, seed),
            12 => c12(&mut sh, &mut art, seed),
            _ => c13(&mut sh, &art),
        }
        criteria.push(CriterionResult {
            number,
            title: TITLES[number as usize - 1].into(),
            pass: sh.pass,
            millis: start.elapsed().as_millis() as u64,
            lines: sh.lines,
        });
    }
    SuiteReport { seed, criteria }
}
