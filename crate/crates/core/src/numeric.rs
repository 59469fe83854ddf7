//! Floating-point cross-checks: quadrature over `S^3_R` and `U(2)_R`, the
//! Poisson formula, the matrix-coefficient expansion of `1/N(Z - W)`, the
//! conformal lemmas and difference quotients of the group actions.

use std::f64::consts::PI;
use std::num::NonZeroUsize;

use gauss_quad::GaussLegendre;
use nalgebra::Matrix4;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::actions::{act, Action, ActionKind, GlElement};
use crate::basis;
use crate::error::{Error, Result};
use crate::mat2::Mat2;
use crate::poly::Alphabet;
use crate::qi::{self, Qi};
use crate::zh::Zh;

pub type CPoint = Mat2<Complex64>;

/// Sign making `int_{U(2)_R} dV / N^2 = -2 pi^3 i` for the chart below.
const U2_ORIENTATION: f64 = -1.0;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn cpoint(z11: Complex64, z12: Complex64, z21: Complex64, z22: Complex64) -> CPoint {
    Mat2::new(z11, z12, z21, z22)
}

pub fn diag(a: Complex64, b: Complex64) -> CPoint {
    cpoint(a, c(0.0, 0.0), c(0.0, 0.0), b)
}

/// `x0 + i x1 + j x2 + k x3` as a 2x2 matrix; its determinant is `|x|^2`.
pub fn quaternion(x: [f64; 4]) -> CPoint {
    cpoint(c(x[0], -x[3]), c(-x[2], -x[1]), c(x[2], -x[1]), c(x[0], x[3]))
}

/// `R e^{i theta} (e^{i a} cos b, e^{i g} sin b; -e^{-i g} sin b, e^{-i a} cos b)`.
pub fn u2_point(r: f64, theta: f64, alpha: f64, beta: f64, gamma: f64) -> CPoint {
    let e = Complex64::from_polar(r, theta);
    let ea = Complex64::from_polar(1.0, alpha);
    let eg = Complex64::from_polar(1.0, gamma);
    let (s, co) = beta.sin_cos();
    cpoint(e * ea * co, e * eg * s, -e * eg.conj() * s, e * ea.conj() * co)
}

pub fn eval_at(f: &Zh, z: &CPoint) -> Complex64 {
    f.eval_c64(&|v| *z.at(v.row(), v.col()))
}

/// A `Z`-alphabet element with floating-point coefficients, for evaluation
/// at many quadrature nodes.
#[derive(Clone, Debug)]
pub struct Compiled {
    terms: Vec<(Complex64, [i32; 4])>,
    den: i32,
}

impl Compiled {
    pub fn new(f: &Zh) -> Self {
        let terms = f
            .numerator()
            .terms()
            .map(|(m, c)| {
                let e = Alphabet::Z.vars().map(|v| m.exp(v) as i32);
                (c.to_c64(), e)
            })
            .collect();
        Compiled { terms, den: f.den(Alphabet::Z) as i32 }
    }

    pub fn eval(&self, z: &CPoint) -> Complex64 {
        let mut acc = c(0.0, 0.0);
        for (co, e) in &self.terms {
            let mut t = *co;
            for (x, &p) in z.0.iter().zip(e) {
                if p > 0 {
                    t *= x.powi(p);
                }
            }
            acc += t;
        }
        if self.den > 0 {
            acc /= z.det().powi(self.den);
        }
        acc
    }
}

fn conj_transpose(z: &CPoint) -> CPoint {
    cpoint(z.at(0, 0).conj(), z.at(1, 0).conj(), z.at(0, 1).conj(), z.at(1, 1).conj())
}

/// Eigenvalues of the Hermitian matrix `Z Z^* - R^2`, ascending.
fn gram_eigs(z: &CPoint, r: f64) -> (f64, f64) {
    let h = z * &conj_transpose(z);
    let (a, d) = (h.at(0, 0).re, h.at(1, 1).re);
    let disc = (((a - d) / 2.0).powi(2) + h.at(0, 1).norm_sqr()).sqrt();
    let mid = (a + d) / 2.0 - r * r;
    (mid - disc, mid + disc)
}

pub fn in_d_plus(z: &CPoint, r: f64) -> bool {
    gram_eigs(z, r).1 < -1e-12
}

pub fn in_d_minus(z: &CPoint, r: f64) -> bool {
    gram_eigs(z, r).0 > 1e-12
}

/// Node counts for product quadrature.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GridSpec {
    pub theta: usize,
    pub alpha: usize,
    pub beta: usize,
    pub gamma: usize,
    pub seed: u64,
}

impl GridSpec {
    pub fn uniform(n: usize) -> Self {
        GridSpec { theta: n, alpha: n, beta: n, gamma: n, seed: 0 }
    }

    pub fn validate(&self) -> Result<()> {
        if [self.theta, self.alpha, self.beta, self.gamma].iter().any(|&n| n < 8) {
            return Err(Error::Domain("grid node counts must be at least 8".into()));
        }
        Ok(())
    }
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec::uniform(24)
    }
}

fn legendre(n: usize, a: f64, b: f64) -> Vec<(f64, f64)> {
    let rule = GaussLegendre::new(NonZeroUsize::new(n).expect("nonzero"));
    let (h, m) = ((b - a) / 2.0, (b + a) / 2.0);
    rule.as_node_weight_pairs().iter().map(|&(x, w)| (m + h * x, h * w)).collect()
}

fn periodic(n: usize) -> Vec<f64> {
    (0..n).map(|i| 2.0 * PI * i as f64 / n as f64).collect()
}

type Integrand<'a> = &'a (dyn Fn(&CPoint) -> Complex64 + Sync);

/// `int_{S^3_R} g dS` in hyperspherical angles.
pub fn integrate_s3(g: Integrand<'_>, r: f64, grid: &GridSpec) -> Result<Complex64> {
    grid.validate()?;
    let psi = legendre(grid.beta, 0.0, PI);
    let chi = legendre(grid.alpha, 0.0, PI);
    let phi = periodic(grid.theta);
    let wphi = 2.0 * PI / grid.theta as f64;
    let slices: Vec<Complex64> = psi
        .par_iter()
        .map(|&(p, wp)| {
            let mut acc = c(0.0, 0.0);
            for &(x, wx) in &chi {
                for &f in &phi {
                    let (sp, cp) = p.sin_cos();
                    let (sx, cx) = x.sin_cos();
                    let pt = [r * cp, r * sp * cx, r * sp * sx * f.cos(), r * sp * sx * f.sin()];
                    acc += g(&quaternion(pt)) * (wp * wx * wphi * r.powi(3) * sp * sp * sx);
                }
            }
            acc
        })
        .collect();
    finite(slices.into_iter().sum())
}

fn finite(v: Complex64) -> Result<Complex64> {
    if v.re.is_finite() && v.im.is_finite() {
        Ok(v)
    } else {
        Err(Error::Domain("integrand singular on the cycle".into()))
    }
}

/// Pull-back of `dV = 1/4 dz11 dz12 dz21 dz22` to the chart, per unit of
/// `dtheta dalpha dbeta dgamma`.
fn u2_density(r: f64, theta: f64, alpha: f64, beta: f64, gamma: f64) -> Complex64 {
    let e = Complex64::from_polar(r, theta);
    let ea = Complex64::from_polar(1.0, alpha);
    let eg = Complex64::from_polar(1.0, gamma);
    let i = c(0.0, 1.0);
    let (s, co) = beta.sin_cos();
    let z = u2_point(r, theta, alpha, beta, gamma);
    let cols = [
        [i * z.0[0], i * z.0[1], i * z.0[2], i * z.0[3]],
        [e * i * ea * co, c(0.0, 0.0), c(0.0, 0.0), -e * i * ea.conj() * co],
        [-e * ea * s, e * eg * co, -e * eg.conj() * co, -e * ea.conj() * s],
        [c(0.0, 0.0), e * i * eg * s, e * i * eg.conj() * s, c(0.0, 0.0)],
    ];
    let j = Matrix4::from_fn(|row, col| cols[col][row]);
    j.determinant() * (0.25 * U2_ORIENTATION)
}

/// `int_{U(2)_R} g dV`.
pub fn integrate_u2(g: Integrand<'_>, r: f64, grid: &GridSpec) -> Result<Complex64> {
    grid.validate()?;
    let thetas = periodic(grid.theta);
    let alphas = periodic(grid.alpha);
    let gammas = periodic(grid.gamma);
    let betas = legendre(grid.beta, 0.0, PI / 2.0);
    let w = (2.0 * PI).powi(3) / (grid.theta * grid.alpha * grid.gamma) as f64;
    let slices: Vec<Complex64> = thetas
        .par_iter()
        .map(|&t| {
            let mut acc = c(0.0, 0.0);
            for &a in &alphas {
                for &(b, wb) in &betas {
                    for &g_ in &gammas {
                        let z = u2_point(r, t, a, b, g_);
                        acc += g(&z) * u2_density(r, t, a, b, g_) * wb;
                    }
                }
            }
            acc
        })
        .collect();
    // e^{i theta} SU(2) covers U(2) twice
    finite(slices.into_iter().sum::<Complex64>() * (w / 2.0))
}

/// The functional `g -> int_{U(2)} g dV / (-2 pi^3 i)`, the numeric
/// counterpart of the exact `u2` functional.
pub fn u2_numeric(f: &Zh, grid: &GridSpec) -> Result<Complex64> {
    let cf = Compiled::new(f);
    let v = integrate_u2(&|z| cf.eval(z), 1.0, grid)?;
    Ok(v / c(0.0, -2.0 * PI.powi(3)))
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NumericCheck {
    pub got: Complex64,
    pub expected: Complex64,
    /// `|got - expected| / max(|expected|, 1)`.
    pub residual: f64,
}

impl NumericCheck {
    pub fn new(got: Complex64, expected: Complex64) -> Self {
        let residual = (got - expected).norm() / expected.norm().max(1.0);
        NumericCheck { got, expected, residual }
    }
}

/// `1/(2 pi^2 R) int_{S^3_R} deg~phi(Z) / N(Z - W) dS` against `phi(W)`.
pub fn verify_poisson(phi: &Zh, w: &CPoint, r: f64, grid: &GridSpec) -> Result<NumericCheck> {
    if !in_d_plus(w, r) {
        return Err(Error::Domain("W must lie in D+_R".into()));
    }
    if phi.den(Alphabet::Z) > 0 || !phi.is_harmonic(Alphabet::Z) {
        return Err(Error::NotHarmonic(Alphabet::Z));
    }
    let dphi = Compiled::new(&phi.deg_tilde(Alphabet::Z));
    let integrand = |z: &CPoint| dphi.eval(z) / (z - w).det();
    let got = integrate_s3(&integrand, r, grid)? / (2.0 * PI * PI * r);
    Ok(NumericCheck::new(got, eval_at(phi, w)))
}

fn tau_values(two_l: u32, z: &CPoint) -> Vec<Vec<Complex64>> {
    let n = two_l as i32;
    (0..=n)
        .map(|i| {
            (0..=n)
                .map(|j| {
                    let p = basis::t_poly(two_l, -n + 2 * i, -n + 2 * j).expect("valid index");
                    p.eval_c64(&|v| *z.at(v.row(), v.col()))
                })
                .collect()
        })
        .collect()
}

/// Residuals `|S_L - 1/N(Z - W)|` of the truncated matrix-coefficient
/// expansion for `L = 0, ..., two_l_max`, where `S_L` sums `2l <= L`.
pub fn verify_expansion(z: &CPoint, w: &CPoint, two_l_max: u32) -> Result<Vec<f64>> {
    let nw = w.det();
    if nw.norm() < 1e-14 {
        return Err(Error::Domain("W must be invertible".into()));
    }
    let winv = w.inverse();
    if !in_d_plus(&(z * &winv), 1.0) {
        return Err(Error::Domain("Z W^-1 must lie in D+".into()));
    }
    let exact = 1.0 / (z - w).det();
    let mut partial = c(0.0, 0.0);
    let mut out = Vec::new();
    for two_l in 0..=two_l_max {
        let (tz, tw) = (tau_values(two_l, z), tau_values(two_l, &winv));
        let n = tz.len();
        for i in 0..n {
            for j in 0..n {
                partial += tz[i][j] * tw[j][i];
            }
        }
        out.push((partial / nw - exact).norm());
    }
    Ok(out)
}

// ---- conformal lemmas ------------------------------------------------------------

fn blocks_qi(g: &[Vec<Qi>]) -> [Mat2<Qi>; 4] {
    let b = |r0: usize, c0: usize| {
        Mat2::new(g[r0][c0].clone(), g[r0][c0 + 1].clone(), g[r0 + 1][c0].clone(), g[r0 + 1][c0 + 1].clone())
    };
    [b(0, 0), b(0, 2), b(2, 0), b(2, 2)]
}

fn blocks_c(g: &Matrix4<Complex64>) -> [CPoint; 4] {
    let b = |r0: usize, c0: usize| cpoint(g[(r0, c0)], g[(r0, c0 + 1)], g[(r0 + 1, c0)], g[(r0 + 1, c0 + 1)]);
    [b(0, 0), b(0, 2), b(2, 0), b(2, 2)]
}

pub fn gl_to_c64(x: &GlElement) -> Matrix4<Complex64> {
    Matrix4::from_fn(|r, s| x.m[r][s].to_c64())
}

/// Checks both forms of `Z~ - W~` exactly for `h = (a b; c d)`.
pub fn verify_z_w_exact(h: &GlElement, z: &Mat2<Qi>, w: &Mat2<Qi>) -> Result<bool> {
    let rows: Vec<Vec<Qi>> = h.m.iter().map(|r| r.to_vec()).collect();
    let hinv = qi::invert(&rows).ok_or(Error::DivisionByZero)?;
    let [a, b, c_, d] = blocks_qi(&rows);
    let [ap, _, cp, _] = blocks_qi(&hinv);
    let inv = |m: Mat2<Qi>| m.inverse().ok_or(Error::DivisionByZero);
    let tr = |x: &Mat2<Qi>| -> Result<Mat2<Qi>> { Ok(&(&(&a * x) + &b) * &inv(&(&c_ * x) + &d)?) };
    let lhs = &tr(z)? - &tr(w)?;
    let diff = z - w;
    let first = &(&inv(&ap - &(w * &cp))? * &diff) * &inv(&(&c_ * z) + &d)?;
    let second = &(&inv(&ap - &(z * &cp))? * &diff) * &inv(&(&c_ * w) + &d)?;
    Ok(lhs == first && lhs == second)
}

fn moebius(h: &Matrix4<Complex64>, z: &CPoint) -> CPoint {
    let [a, b, c_, d] = blocks_c(h);
    &(&(&a * z) + &b) * &(&(&c_ * z) + &d).inverse()
}

/// Relative error between the Jacobian determinant of `Z -> (aZ+b)(cZ+d)^-1`
/// and `N(cZ+d)^-2 N(a' - Z c')^-2`.
pub fn jacobian_check(h: &Matrix4<Complex64>, z: &CPoint) -> Result<f64> {
    let hinv = h.try_inverse().ok_or(Error::DivisionByZero)?;
    let [a, _, c_, d] = blocks_c(h);
    let [ap, _, cp, _] = blocks_c(&hinv);
    let zt = moebius(h, z);
    let right = (&(&c_ * z) + &d).inverse();
    let left = &a - &(&zt * &c_);
    let zero = c(0.0, 0.0);
    let mut j = Matrix4::zeros();
    for (col, (r, s)) in [(0, 0), (0, 1), (1, 0), (1, 1)].into_iter().enumerate() {
        let mut e = Mat2([zero; 4]);
        e.0[2 * r + s] = c(1.0, 0.0);
        let dz = &(&left * &e) * &right;
        for row in 0..4 {
            j[(row, col)] = dz.0[row];
        }
    }
    let want = 1.0 / ((&(&c_ * z) + &d).det().powi(2) * (&ap - &(z * &cp)).det().powi(2));
    Ok((j.determinant() - want).norm() / want.norm())
}

/// `i/(2 pi^3) int_{U(2)} dV / (N(Z1-T) N(Z2-T) N(W1-T) N(W2-T))`.
pub fn l1_numeric(pts: &[CPoint; 4], grid: &GridSpec) -> Result<Complex64> {
    for p in pts {
        let (lo, hi) = gram_eigs(p, 1.0);
        if lo.abs() < 1e-3 || hi.abs() < 1e-3 || lo * hi < 0.0 {
            return Err(Error::Domain("kernel pole too close to the cycle".into()));
        }
    }
    let g = |t: &CPoint| {
        let mut v = c(1.0, 0.0);
        for p in pts {
            v *= (p - t).det();
        }
        1.0 / v
    };
    Ok(integrate_u2(&g, 1.0, grid)? * c(0.0, 1.0 / (2.0 * PI.powi(3))))
}

/// `l1` at transformed points against the covariance factor times `l1`.
pub fn l1_covariance(h: &Matrix4<Complex64>, pts: &[CPoint; 4], grid: &GridSpec) -> Result<NumericCheck> {
    let hinv = h.try_inverse().ok_or(Error::DivisionByZero)?;
    let [_, _, c_, d] = blocks_c(h);
    let [ap, _, cp, _] = blocks_c(&hinv);
    let moved = [moebius(h, &pts[0]), moebius(h, &pts[1]), moebius(h, &pts[2]), moebius(h, &pts[3])];
    let left = |z: &CPoint| (&ap - &(z * &cp)).det();
    let right = |z: &CPoint| (&(&c_ * z) + &d).det();
    let factor = left(&pts[0]) * right(&pts[1]) * right(&pts[2]) * left(&pts[3]);
    let got = l1_numeric(&moved, grid)?;
    let expected = factor * l1_numeric(pts, grid)?;
    let residual = (got - expected).norm() / expected.norm();
    Ok(NumericCheck { got, expected, residual })
}

pub fn random_unitary(rng: &mut impl Rng) -> CPoint {
    u2_point(
        1.0,
        rng.gen_range(0.0..2.0 * PI),
        rng.gen_range(0.0..2.0 * PI),
        rng.gen_range(0.0..PI / 2.0),
        rng.gen_range(0.0..2.0 * PI),
    )
}

fn random_gaussian_rational(rng: &mut impl Rng) -> Mat2<Qi> {
    let mut e = || Qi::from_parts(rng.gen_range(-9..=9), 10, rng.gen_range(-9..=9), 10);
    Mat2::new(e(), e(), e(), e())
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConformalReport {
    pub z_w_exact: bool,
    pub jacobian_residual: f64,
    pub l1: NumericCheck,
}

impl ConformalReport {
    pub fn pass(&self) -> bool {
        self.z_w_exact && self.jacobian_residual <= 1e-8 && self.l1.residual <= 1e-3
    }
}

/// Runs the three conformal checks for `h = exp(s X)`. The exact check uses
/// `1 + s X`, which equals the exponential for nilpotent `X`.
pub fn verify_conformal_lemmas(x: &GlElement, s: Qi, samples: usize, grid: &GridSpec) -> Result<ConformalReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(grid.seed);
    let h_exact = GlElement::identity().add(&x.scale(&s));
    let sc = s.to_c64();
    let h = (gl_to_c64(x) * sc).exp();
    let mut z_w_exact = true;
    let mut jacobian_residual: f64 = 0.0;
    for _ in 0..samples {
        let (z, w) = (random_gaussian_rational(&mut rng), random_gaussian_rational(&mut rng));
        match verify_z_w_exact(&h_exact, &z, &w) {
            Ok(ok) => z_w_exact &= ok,
            Err(Error::DivisionByZero) => continue,
            Err(e) => return Err(e),
        }
        jacobian_residual = jacobian_residual.max(jacobian_check(&h, &z.to_c64())?);
    }
    let pts = [
        random_unitary(&mut rng).scale(&c(1.8, 0.0)),
        random_unitary(&mut rng).scale(&c(1.8, 0.0)),
        random_unitary(&mut rng).scale(&c(0.4, 0.0)),
        random_unitary(&mut rng).scale(&c(0.4, 0.0)),
    ];
    let l1 = l1_covariance(&h, &pts, grid)?;
    Ok(ConformalReport { z_w_exact, jacobian_residual, l1 })
}

/// `f((aZ+b)(cZ+d)^-1) N(cZ+d)^-p N(a' - Z c')^-q` with `(a b; c d) = h^-1`
/// and `(a' b'; c' d') = h`.
pub fn group_act(kind: ActionKind, h: &Matrix4<Complex64>, f: &Zh, z: &CPoint) -> Result<Complex64> {
    let hinv = h.try_inverse().ok_or(Error::DivisionByZero)?;
    let [_, _, c_, d] = blocks_c(&hinv);
    let [ap, _, cp, _] = blocks_c(h);
    let (p, q) = kind.weights();
    let zt = moebius(&hinv, z);
    let n1 = (&(&c_ * z) + &d).det();
    let n2 = (&ap - &(z * &cp)).det();
    Ok(eval_at(f, &zt) * n1.powi(-p as i32) * n2.powi(-q as i32))
}

/// Central difference of `t -> pi(exp(tX)) f` at `t = 0` against the exact
/// infinitesimal action, both evaluated at `z`.
pub fn verify_group_action_derivative(kind: ActionKind, x: &GlElement, f: &Zh, z: &CPoint) -> Result<NumericCheck> {
    let t = 1e-4;
    let xm = gl_to_c64(x);
    let plus = group_act(kind, &(xm * c(t, 0.0)).exp(), f, z)?;
    let minus = group_act(kind, &(xm * c(-t, 0.0)).exp(), f, z)?;
    let numeric = (plus - minus) / (2.0 * t);
    let exact = eval_at(&act(&Action::on_z(kind), x, f), z);
    let residual = (numeric - exact).norm() / exact.norm().max(1.0);
    Ok(NumericCheck { got: numeric, expected: exact, residual })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_zh;

    fn real(x: f64) -> Complex64 {
        c(x, 0.0)
    }

    #[test]
    fn domains() {
        assert!(in_d_plus(&diag(real(0.0), real(0.0)), 1.0));
        assert!(in_d_minus(&diag(real(2.0), real(2.0)), 1.0));
        let z = diag(real(0.5), real(3.0));
        assert!(!in_d_plus(&z, 1.0) && !in_d_minus(&z, 1.0));
    }

    #[test]
    fn compiled_matches_exact_eval() {
        let z = cpoint(c(0.3, 0.1), c(0.2, -0.4), c(-0.5, 0.2), c(0.7, 0.3));
        for s in ["1", "z11^2*z21/N^2 - 3/2i*z12", "(z11 - z22)^3/N"] {
            let f = parse_zh(s).unwrap();
            assert!((Compiled::new(&f).eval(&z) - eval_at(&f, &z)).norm() < 1e-12);
        }
    }

    #[test]
    fn sphere_volume() {
        let g = GridSpec::uniform(16);
        let v = integrate_s3(&|_| real(1.0), 1.0, &g).unwrap();
        assert!((v.re - 2.0 * PI * PI).abs() < 1e-10 * 2.0 * PI * PI);
        let v = integrate_s3(&|z| z.det(), 2.0, &g).unwrap();
        let want = 2.0 * PI * PI * 8.0 * 4.0;
        assert!((v - real(want)).norm() < 1e-10 * want);
    }

    #[test]
    fn u2_normalization() {
        let g = GridSpec::uniform(16);
        for r in [1.0, 0.7] {
            let v = integrate_u2(&|z| 1.0 / z.det().powi(2), r, &g).unwrap();
            let want = c(0.0, -2.0 * PI.powi(3));
            assert!((v - want).norm() < 1e-8 * want.norm(), "{v}");
        }
        let v = integrate_u2(&|_| real(1.0), 1.0, &g).unwrap();
        assert!(v.norm() < 1e-8);
        let v = integrate_u2(&|z| 1.0 / z.det(), 1.0, &g).unwrap();
        assert!(v.norm() < 1e-8);
    }

    #[test]
    fn poisson_small() {
        let g = GridSpec::uniform(24);
        let one = Zh::one();
        assert!(verify_poisson(&one, &diag(real(0.0), real(0.0)), 1.0, &g).unwrap().residual < 1e-6);
        let w = diag(real(0.3), c(0.0, 0.1));
        assert!(verify_poisson(&parse_zh("z11").unwrap(), &w, 1.0, &g).unwrap().residual < 1e-6);
        assert!(verify_poisson(&one, &diag(real(2.0), real(0.0)), 1.0, &g).is_err());
    }

    #[test]
    fn expansion_diagonal() {
        let z = diag(real(0.2), real(0.2));
        let w = diag(real(1.0), real(1.0));
        let r = verify_expansion(&z, &w, 12).unwrap();
        assert!(r[12] < 1e-7);
        assert!(r.windows(2).all(|p| p[1] < p[0]));
        let r = verify_expansion(&diag(real(0.0), real(0.0)), &diag(real(2.0), c(0.0, 1.0)), 0).unwrap();
        assert!(r[0] < 1e-14);
        assert!(verify_expansion(&diag(real(2.0), real(0.0)), &w, 3).is_err());
    }

    #[test]
    fn derivative_examples() {
        let z = cpoint(c(0.3, 0.1), c(0.2, -0.4), c(-0.5, 0.2), c(0.7, 0.3));
        let d = GlElement::elementary(2, 2).add(&GlElement::elementary(3, 3));
        let r = verify_group_action_derivative(ActionKind::Varpi(2), &d, &Zh::one(), &z).unwrap();
        assert!((r.got - real(4.0)).norm() < 1e-6);
        let f = parse_zh("z11/N").unwrap();
        for i in 0..16 {
            let x = GlElement::elementary(i / 4, i % 4);
            let r = verify_group_action_derivative(ActionKind::Varpi(2), &x, &f, &z).unwrap();
            assert!(r.residual < 1e-6, "{i}: {r:?}");
        }
    }

    #[test]
    fn conformal_identity_and_b_block() {
        let g = GridSpec::uniform(16);
        let r = verify_conformal_lemmas(&GlElement::zero(), Qi::frac(1, 10), 3, &g).unwrap();
        assert!(r.z_w_exact && r.jacobian_residual < 1e-12 && r.l1.residual < 1e-12);
        let r = verify_conformal_lemmas(&GlElement::elementary(0, 2), Qi::frac(1, 10), 3, &g).unwrap();
        assert!(r.pass(), "{r:?}");
    }
}
