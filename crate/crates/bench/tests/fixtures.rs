//! The benchmark inputs build and pass, so timings measure passing runs.

use isopair_core::constructions::{isoquaternionic_pair, series_gl};
use isopair_core::pairs::verify;
use isopair_core::reps::{check_rep, isoquaternion_fundamental};
use isopair_core::tkk::{check_superalgebra, superalgebra_from_pair};

#[test]
fn bench_inputs_pass() {
    assert!(verify(&series_gl(1, 1).unwrap().pair).pass());
    let a = superalgebra_from_pair(&isoquaternionic_pair().pair).unwrap();
    assert!(check_superalgebra(&a).pass());
    let (r, _) = isoquaternion_fundamental().unwrap();
    assert!(check_rep(&r).pass());
}
