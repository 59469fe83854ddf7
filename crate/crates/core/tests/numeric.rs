use std::f64::consts::PI;

use num_complex::Complex64;
use qladder_core::basis::{self, TIndex};
use qladder_core::numeric::{self, diag, Compiled, GridSpec};
use qladder_core::pairings::pair_hr;
use qladder_core::{parse_zh, Alphabet, Qi};

#[test]
fn poisson_converges_when_grid_doubles() {
    let phi = parse_zh("z11^2 + z12*z21 + z11*z22").unwrap();
    assert!(phi.is_harmonic(Alphabet::Z));
    let w = diag(Complex64::new(0.5, 0.1), Complex64::new(0.0, 0.45));
    let res: Vec<f64> = [8, 16, 32]
        .iter()
        .map(|&n| numeric::verify_poisson(&phi, &w, 1.0, &GridSpec::uniform(n)).unwrap().residual)
        .collect();
    for p in res.windows(2) {
        assert!(p[1] <= (p[0] / 10.0).max(1e-10), "{res:?}");
    }
}

#[test]
fn sphere_pairing_matches_exact() {
    let r = 1.2f64;
    let rq = Qi::frac(6, 5);
    let grid = GridSpec::uniform(20);
    let idxs = basis::indices(2, 0..=0);
    for (i, a) in idxs.iter().enumerate().step_by(2).take(10) {
        let b = idxs[(3 * i + 1) % idxs.len()];
        let phi1 = a.element();
        let dual = TIndex { two_m: b.two_n, two_n: b.two_m, ..b };
        let phi2 = dual.element().invert(Alphabet::Z).mul_norm_pow(Alphabet::Z, -1);
        let exact = pair_hr(&phi1, &phi2).unwrap().eval(&rq).to_c64();
        let g = Compiled::new(&(&phi1.deg_tilde(Alphabet::Z) * &phi2));
        let v = numeric::integrate_s3(&|z| g.eval(z), r, &grid).unwrap() / (2.0 * PI * PI * r);
        assert!((v - exact).norm() <= 1e-8 * exact.norm().max(1.0), "{a} {b}: {v} vs {exact}");
    }
}

#[test]
fn pull_back_jacobian_of_scaling() {
    let mut h = nalgebra::Matrix4::<Complex64>::identity();
    h[(0, 0)] = Complex64::new(1.5, 0.0);
    h[(1, 1)] = Complex64::new(1.5, 0.0);
    let z = diag(Complex64::new(0.3, 0.2), Complex64::new(-0.4, 0.1));
    assert!(numeric::jacobian_check(&h, &z).unwrap() < 1e-12);
}
