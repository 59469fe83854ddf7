//! Batches of verifications shared by the CLI and the acceptance suite.
//! Each check yields one [`CheckResult`] per case.

use std::collections::BTreeMap;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::actions::{invariance_scan, verify_structural_identities, ActionKind, GlElement};
use crate::basis::{self, Scheme, TIndex};
use crate::error::Result;
use crate::ladder::{self, EquivariantOp, LadderOp};
use crate::numeric::{self, cpoint, diag, CPoint, GridSpec, NumericCheck};
use crate::pairings::{self, i_embed, pair_hr, pair_rho1, poisson_project, quotient_iso, quotient_iso_inverse};
use crate::poly::Alphabet;
use crate::qi::Qi;
use crate::tensor::TensorElement;
use crate::zh::Zh;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub check: String,
    pub params: BTreeMap<String, String>,
    pub expected: String,
    pub got: String,
    pub pass: bool,
}

impl CheckResult {
    pub fn new(check: &str, params: &[(&str, String)], expected: String, got: String, pass: bool) -> Self {
        CheckResult {
            check: check.to_string(),
            params: params.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
            expected,
            got,
            pass,
        }
    }

    fn exact(check: &str, params: &[(&str, String)], expected: impl ToString, got: impl ToString) -> Self {
        let (e, g) = (expected.to_string(), got.to_string());
        let pass = e == g;
        Self::new(check, params, e, g, pass)
    }

    fn error(check: &str, params: &[(&str, String)], expected: impl ToString, err: impl ToString) -> Self {
        Self::new(check, params, expected.to_string(), format!("error: {}", err.to_string()), false)
    }

    fn numeric(check: &str, params: &[(&str, String)], r: &NumericCheck, tol: f64) -> Self {
        Self::new(
            check,
            params,
            format!("{} (tol {tol:e})", fmt_c(r.expected)),
            format!("{} (residual {:.3e})", fmt_c(r.got), r.residual),
            r.residual <= tol,
        )
    }
}

pub fn all_pass(rs: &[CheckResult]) -> bool {
    rs.iter().all(|r| r.pass)
}

pub fn fmt_c(z: Complex64) -> String {
    format!("{:.12e}{:+.12e}i", z.re, z.im)
}

fn idx_params(i: &TIndex) -> Vec<(&'static str, String)> {
    vec![("twoL", i.two_l.to_string()), ("twoM", i.two_m.to_string()), ("twoN", i.two_n.to_string()), ("k", i.k.to_string())]
}

// ---- ladder operators ------------------------------------------------------------

pub fn eigenvalues(op: LadderOp, ns: impl IntoIterator<Item = u32>) -> Vec<CheckResult> {
    ns.into_iter()
        .map(|n| {
            let want = op.predicted_eigenvalue(n);
            let params = [("op", format!("{op:?}").to_lowercase()), ("n", n.to_string())];
            match ladder::eigencheck(op, n) {
                Ok(r) => {
                    let got = if r.is_eigen { r.ratio.to_string() } else { format!("not eigen (ratio {})", r.ratio) };
                    CheckResult::exact("eigenvalue", &params, &want, got)
                }
                Err(e) => CheckResult::error("eigenvalue", &params, &want, e),
            }
        })
        .collect()
}

/// `L2` on random `H+ (x) H+` samples never fails its harmonicity check.
pub fn l2_harmonic(count: usize, degmax: u32, seed: u64) -> Vec<CheckResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let samples: Vec<TensorElement> = (0..count).map(|_| ladder::random_harmonic_pair(&mut rng, degmax)).collect();
    samples
        .par_iter()
        .enumerate()
        .map(|(i, t)| {
            let params = [("sample", i.to_string()), ("seed", seed.to_string())];
            let got = match ladder::l2(t) {
                Ok(o) => (o.as_zh().is_harmonic(Alphabet::Z) && o.as_zh().is_harmonic(Alphabet::Zp)).to_string(),
                Err(e) => format!("error: {e}"),
            };
            CheckResult::exact("l2-harmonic", &params, "true", got)
        })
        .collect()
}

pub fn symmetry(count: usize, degmax: u32, seed: u64) -> Vec<CheckResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pairs: Vec<(Zh, Zh)> = (0..count)
        .map(|_| {
            let (d1, d2) = (rng.gen_range(0..=degmax), rng.gen_range(0..=degmax));
            (ladder::random_harmonic(&mut rng, Alphabet::Z, d1), ladder::random_harmonic(&mut rng, Alphabet::Z, d2))
        })
        .collect();
    pairs
        .par_iter()
        .enumerate()
        .map(|(i, (a, b))| {
            let params = [("phi1", a.to_string()), ("phi2", b.to_string()), ("sample", i.to_string())];
            match ladder::symmetry_check(a, b) {
                Ok(r) => CheckResult::exact("symmetry", &params, "0", &r),
                Err(e) => CheckResult::error("symmetry", &params, "0", e),
            }
        })
        .collect()
}

pub fn equivariance(ops: &[EquivariantOp], nmax: u32) -> Vec<CheckResult> {
    let xs = GlElement::all_elementary();
    let mut jobs = Vec::new();
    for &op in ops {
        for n in 1..=nmax {
            for x in 0..xs.len() {
                jobs.push((op, n, x));
            }
        }
    }
    jobs.par_iter()
        .map(|&(op, n, x)| {
            let params = [
                ("X", format!("E{}{}", x / 4 + 1, x % 4 + 1)),
                ("n", n.to_string()),
                ("op", op.name().to_string()),
            ];
            match ladder::equivariance(op, &xs[x], &op.sample(n)) {
                Ok(r) => CheckResult::exact("equivariance", &params, "0", &r),
                Err(e) => CheckResult::error("equivariance", &params, "0", e),
            }
        })
        .collect()
}

// ---- pairings ------------------------------------------------------------------

/// `<t^l'_{n',m'} N^k', t^l_{m,n}(Z^-1) N^(-k-2)> = delta / (2l+1)`.
pub fn orthogonality(two_l_max: u32, kmax: i32) -> Vec<CheckResult> {
    let idxs = basis::indices(two_l_max, -kmax..=kmax);
    let dual = |i: &TIndex| {
        TIndex { k: 0, two_m: i.two_n, two_n: i.two_m, ..*i }
            .element()
            .invert(Alphabet::Z)
            .mul_norm_pow(Alphabet::Z, -i.k - 2)
    };
    let duals: Vec<Zh> = idxs.iter().map(dual).collect();
    let elems: Vec<Zh> = idxs.iter().map(TIndex::element).collect();
    (0..idxs.len())
        .into_par_iter()
        .map(|a| {
            let mut bad = Vec::new();
            for b in 0..idxs.len() {
                let want = if a == b { Qi::frac(1, idxs[a].two_l as i64 + 1) } else { Qi::zero() };
                match pair_rho1(&elems[a], &duals[b]) {
                    Ok(v) if v == want => {}
                    Ok(v) => bad.push(format!("{} vs {}: {v}", idxs[a], idxs[b])),
                    Err(e) => bad.push(format!("{e}")),
                }
            }
            let want = format!("delta/{}", idxs[a].two_l + 1);
            let got = if bad.is_empty() { want.clone() } else { bad.join("; ") };
            CheckResult::exact("orthogonality-rho1", &idx_params(&idxs[a]), want, got)
        })
        .collect()
}

/// `(t^l'_{n',m'}, t^l_{m,n}(Z^-1)/N)_R = delta` with exact `R`-independence,
/// and the antisymmetric reverse pairing.
pub fn h_orthogonality(two_l_max: u32) -> Vec<CheckResult> {
    let idxs = basis::indices(two_l_max, 0..=0);
    let duals: Vec<Zh> = idxs
        .iter()
        .map(|i| TIndex { two_m: i.two_n, two_n: i.two_m, ..*i }.element().invert(Alphabet::Z).mul_norm_pow(Alphabet::Z, -1))
        .collect();
    idxs.par_iter()
        .enumerate()
        .map(|(a, ia)| {
            let mut bad = Vec::new();
            let f = ia.element();
            for (b, d) in duals.iter().enumerate() {
                let want = if a == b { Qi::one() } else { Qi::zero() };
                for (sign, v) in [(Qi::one(), pair_hr(&f, d)), (-Qi::one(), pair_hr(d, &f))] {
                    match v {
                        Ok(v) if v.is_r_independent() && &v.constant_term() * &sign == want => {}
                        Ok(v) => bad.push(format!("{} vs {}: {v}", ia, idxs[b])),
                        Err(e) => bad.push(e.to_string()),
                    }
                }
            }
            let got = if bad.is_empty() { "delta, R-independent".to_string() } else { bad.join("; ") };
            CheckResult::exact("orthogonality-hr", &idx_params(ia), "delta, R-independent", got)
        })
        .collect()
}

/// `I(z_ij^p) = (1/(p+1)) sum_k w^k w'^(p-k)`.
pub fn z_power(pmax: u32) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for (r, c) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
        for p in 1..=pmax {
            let params = [("p", p.to_string()), ("var", format!("z{}{}", r + 1, c + 1))];
            let want = pairings::z_power_closed_form(r, c, p);
            match i_embed(&Zh::var(Alphabet::Z.var(r, c)).pow(p)) {
                Ok(got) => out.push(CheckResult::exact("z-power", &params, &want, got.as_zh())),
                Err(e) => out.push(CheckResult::error("z-power", &params, &want, e)),
            }
        }
    }
    out
}

/// `quotient_iso_inverse(quotient_iso(t)) = t` on harmonic basis elements.
pub fn quotient(two_l_max: u32) -> Vec<CheckResult> {
    basis::indices(two_l_max, 0..=0)
        .par_iter()
        .map(|i| {
            let t = i.element();
            let want = t.rename(Alphabet::Z, Alphabet::W);
            let got = quotient_iso(&t).and_then(|q| quotient_iso_inverse(&q, Alphabet::W));
            match got {
                Ok(g) => CheckResult::exact("quotient-iso", &idx_params(i), &want, &g),
                Err(e) => CheckResult::error("quotient-iso", &idx_params(i), &want, e),
            }
        })
        .collect()
}

/// Exact Poisson reproduction `phi(W) = (phi, 1/N(Z - W))_R` on the harmonic basis.
pub fn poisson_exact(two_l_max: u32) -> Vec<CheckResult> {
    basis::indices(two_l_max, 0..=0)
        .par_iter()
        .map(|i| {
            let t = i.element();
            let want = t.rename(Alphabet::Z, Alphabet::W);
            match poisson_project(&t, Alphabet::W) {
                Ok(g) => CheckResult::exact("poisson-exact", &idx_params(i), &want, &g),
                Err(e) => CheckResult::error("poisson-exact", &idx_params(i), &want, e),
            }
        })
        .collect()
}

// ---- actions ---------------------------------------------------------------------

/// Invariance scan of the elementary actions plus the exact coefficient
/// identities on every cell of the grid.
pub fn decomposition(scheme: Scheme, two_l_max: u32, kmin: i32, kmax: i32) -> Vec<CheckResult> {
    let scan = invariance_scan(scheme, two_l_max, kmin, kmax);
    let params = [
        ("kmax", kmax.to_string()),
        ("kmin", kmin.to_string()),
        ("scheme", format!("{scheme:?}").to_lowercase()),
        ("twoLMax", two_l_max.to_string()),
    ];
    let got = if scan.pass() { "no violations".to_string() } else { scan.failures.join("; ") };
    let mut out = vec![CheckResult::exact("invariance-scan", &params, "no violations", got)];
    out.push(CheckResult::new(
        "invariance-scan-cases",
        &params,
        format!("{}", 16 * basis::indices(two_l_max, kmin..=kmax).len()),
        scan.cases.to_string(),
        scan.cases == 16 * basis::indices(two_l_max, kmin..=kmax).len(),
    ));
    if scheme == Scheme::Varpi2 {
        let cells: Vec<(u32, i32)> = (0..=two_l_max).flat_map(|l| (kmin..=kmax).map(move |k| (l, k))).collect();
        out.par_extend(cells.par_iter().map(|&(two_l, k)| {
            let r = verify_structural_identities(two_l, k);
            let failed: Vec<String> = r
                .checks
                .iter()
                .filter(|c| !c.pass)
                .map(|c| format!("{} at (2m={}, 2n={})", c.name, c.two_m, c.two_n))
                .collect();
            let got = if failed.is_empty() { "all identities hold".to_string() } else { failed.join("; ") };
            CheckResult::exact(
                "structural-identities",
                &[("k", k.to_string()), ("twoL", two_l.to_string())],
                "all identities hold",
                got,
            )
        }));
    }
    out
}

// ---- numeric -------------------------------------------------------------------

fn rand_c(rng: &mut impl Rng, scale: f64) -> Complex64 {
    Complex64::new(rng.gen_range(-scale..scale), rng.gen_range(-scale..scale))
}

/// `int_{U(2)_R} dV/N^2 = -2 pi^3 i`, vanishing of `1` and `1/N`, and
/// agreement of the exact and numeric `u2` functionals on small basis elements.
pub fn numeric_norm(grid: &GridSpec) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let want = Complex64::new(0.0, -2.0 * std::f64::consts::PI.powi(3));
    for r in [1.0, 0.5, 1.7] {
        let params = [("R", r.to_string())];
        match numeric::integrate_u2(&|z| 1.0 / z.det().powi(2), r, grid) {
            Ok(v) => {
                let chk = NumericCheck { got: v, expected: want, residual: (v - want).norm() / want.norm() };
                out.push(CheckResult::numeric("u2-normalization", &params, &chk, 1e-8));
            }
            Err(e) => out.push(CheckResult::error("u2-normalization", &params, fmt_c(want), e)),
        }
    }
    let idxs = basis::indices(2, -3..=3);
    out.par_extend(idxs.par_iter().map(|i| {
        let f = i.element();
        let want = pairings::u2_functional(&f).map(|q| q.to_c64()).unwrap_or(Complex64::new(f64::NAN, 0.0));
        match numeric::u2_numeric(&f, grid) {
            Ok(v) => CheckResult::numeric("u2-exact-vs-numeric", &idx_params(i), &NumericCheck::new(v, want), 1e-8),
            Err(e) => CheckResult::error("u2-exact-vs-numeric", &idx_params(i), fmt_c(want), e),
        }
    }));
    out
}

/// `int_{S^3_R} t N^k dS / (2 pi^2 R) = R^(2k+2) [l = 0]`, and the sphere
/// volume.
pub fn numeric_s3(grid: &GridSpec) -> Vec<CheckResult> {
    let r = 1.3f64;
    let mut out = Vec::new();
    let vol = numeric::integrate_s3(&|_| Complex64::new(1.0, 0.0), 1.0, grid);
    let want = Complex64::new(2.0 * std::f64::consts::PI.powi(2), 0.0);
    match vol {
        Ok(v) => out.push(CheckResult::numeric(
            "s3-volume",
            &[("R", "1".into())],
            &NumericCheck { got: v, expected: want, residual: (v - want).norm() / want.norm() },
            1e-10,
        )),
        Err(e) => out.push(CheckResult::error("s3-volume", &[], fmt_c(want), e)),
    }
    let idxs = basis::indices(2, -2..=2);
    out.par_extend(idxs.par_iter().map(|i| {
        let f = i.element();
        let want = if i.two_l == 0 { r.powi(2 * i.k + 2) } else { 0.0 };
        let want = Complex64::new(want, 0.0);
        let mut params = idx_params(i);
        params.push(("R", r.to_string()));
        let cf = numeric::Compiled::new(&f);
        match numeric::integrate_s3(&|z| cf.eval(z), r, grid) {
            Ok(v) => {
                let got = v / (2.0 * std::f64::consts::PI.powi(2) * r);
                CheckResult::numeric("s3-functional", &params, &NumericCheck::new(got, want), 1e-8)
            }
            Err(e) => CheckResult::error("s3-functional", &params, fmt_c(want), e),
        }
    }));
    out
}

/// The Poisson formula at random points of `D+_1` for random harmonic `phi`.
pub fn numeric_poisson(count: usize, grid: &GridSpec) -> Vec<CheckResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(grid.seed);
    let mut cases: Vec<(Zh, CPoint)> = vec![
        (Zh::one(), diag(Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0))),
        (Zh::var(Alphabet::Z.var(0, 0)), diag(Complex64::new(0.3, 0.0), Complex64::new(0.0, 0.1))),
    ];
    while cases.len() < count + 2 {
        let d = rng.gen_range(0..=3);
        let phi = ladder::random_harmonic(&mut rng, Alphabet::Z, d);
        let u = numeric::random_unitary(&mut rng);
        let v = numeric::random_unitary(&mut rng);
        let s = diag(Complex64::new(rng.gen_range(0.05..0.6), 0.0), Complex64::new(rng.gen_range(0.05..0.6), 0.0));
        cases.push((phi, &(&u * &s) * &v));
    }
    cases
        .par_iter()
        .enumerate()
        .map(|(i, (phi, w))| {
            let params = [("phi", phi.to_string()), ("sample", i.to_string())];
            match numeric::verify_poisson(phi, w, 1.0, grid) {
                Ok(r) => CheckResult::numeric("poisson", &params, &r, 1e-6),
                Err(e) => CheckResult::error("poisson", &params, "phi(W)", e),
            }
        })
        .collect()
}

/// Truncations of the matrix-coefficient expansion: the diagonal case
/// decreases monotonically at the geometric rate `0.2`, and `Z = 0` is exact.
pub fn numeric_expansion() -> Vec<CheckResult> {
    let c = |x| Complex64::new(x, 0.0);
    let mut out = Vec::new();
    let z = diag(c(0.2), c(0.2));
    let w = diag(c(1.0), c(1.0));
    match numeric::verify_expansion(&z, &w, 12) {
        Ok(r) => {
            let monotone = r.windows(2).all(|p| p[1] < p[0]);
            // tail sum_{j > L} (j+1) 0.2^j, ratio of consecutive tails tends to 0.2
            let rate_ok = r.windows(2).skip(2).all(|p| p[1] / p[0] <= 0.2 * 1.5);
            out.push(CheckResult::new(
                "expansion-diagonal",
                &[("L", "12".into())],
                "residual <= 1e-7, monotone, rate <= 0.3".into(),
                format!("residual {:.3e}, monotone {monotone}, rate {:.3}", r[12], r[12] / r[11]),
                r[12] <= 1e-7 && monotone && rate_ok,
            ));
        }
        Err(e) => out.push(CheckResult::error("expansion-diagonal", &[], "residual <= 1e-7", e)),
    }
    let w2 = cpoint(c(1.1), Complex64::new(0.2, 0.3), c(-0.4), Complex64::new(0.9, -0.2));
    match numeric::verify_expansion(&diag(c(0.0), c(0.0)), &w2, 0) {
        Ok(r) => out.push(CheckResult::new(
            "expansion-origin",
            &[("L", "0".into())],
            "residual <= 1e-14".into(),
            format!("residual {:.3e}", r[0]),
            r[0] <= 1e-14,
        )),
        Err(e) => out.push(CheckResult::error("expansion-origin", &[], "residual <= 1e-14", e)),
    }
    let rejected = numeric::verify_expansion(&diag(c(2.0), c(0.0)), &w, 3).is_err();
    out.push(CheckResult::exact("expansion-region", &[], "rejected", if rejected { "rejected" } else { "accepted" }));
    out
}

/// Conformal covariance checks for `h = exp(X/10)` over a few elementary `X` from each block.
pub fn numeric_conformal(grid: &GridSpec) -> Vec<CheckResult> {
    let xs = [(0, 2), (2, 0), (0, 1), (3, 3), (1, 3)];
    xs.par_iter()
        .map(|&(i, j)| {
            let x = GlElement::elementary(i, j);
            let params = [("X", format!("E{}{}", i + 1, j + 1))];
            match numeric::verify_conformal_lemmas(&x, Qi::frac(1, 10), 4, grid) {
                Ok(r) => CheckResult::new(
                    "conformal",
                    &params,
                    "Z-W exact, jacobian <= 1e-8, l1 covariance <= 1e-3".into(),
                    format!(
                        "Z-W exact {}, jacobian {:.3e}, l1 {:.3e}",
                        r.z_w_exact, r.jacobian_residual, r.l1.residual
                    ),
                    r.pass(),
                ),
                Err(e) => CheckResult::error("conformal", &params, "pass", e),
            }
        })
        .collect()
}

/// Difference quotients of the group actions against the exact
/// infinitesimal actions on `count` samples.
pub fn numeric_derivative(count: usize, seed: u64) -> Vec<CheckResult> {
    let kinds = [ActionKind::Varpi(1), ActionKind::Varpi(2), ActionKind::Varpi(3), ActionKind::Pi0l, ActionKind::Pi0r];
    let fs = ["1", "z11", "z11/N", "z11^2 + z12*z21 - z11*z22", "z21^2/N^2", "(z11 - 2*z12)^3"];
    let fs: Vec<Zh> = fs.iter().map(|s| crate::parse::parse_zh(s).expect("literal")).collect();
    let xs = GlElement::all_elementary();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cases = Vec::new();
    while cases.len() < count {
        let kind = kinds[cases.len() % kinds.len()];
        let mut x = xs[rng.gen_range(0..16)].clone();
        if rng.gen_bool(0.5) {
            x = x.add(&xs[rng.gen_range(0..16)].scale(&Qi::frac(rng.gen_range(-3..=3), 2)));
        }
        let f = fs[rng.gen_range(0..fs.len())].clone();
        let z = cpoint(rand_c(&mut rng, 1.0), rand_c(&mut rng, 1.0), rand_c(&mut rng, 1.0), rand_c(&mut rng, 1.0));
        if z.det().norm() < 0.2 {
            continue;
        }
        cases.push((kind, x, f, z));
    }
    cases
        .par_iter()
        .enumerate()
        .map(|(i, (kind, x, f, z))| {
            let params = [("X", x.to_string()), ("f", f.to_string()), ("kind", kind.to_string()), ("sample", i.to_string())];
            match numeric::verify_group_action_derivative(*kind, x, f, z) {
                Ok(r) => CheckResult::numeric("action-derivative", &params, &r, 1e-6),
                Err(e) => CheckResult::error("action-derivative", &params, "match", e),
            }
        })
        .collect()
}

/// Lambda sends `(Zh1- + Zh0) (x) H+` to zero on basis elements.
pub fn annihilation(two_l_max: u32, kmin: i32, kmax: i32) -> Vec<CheckResult> {
    basis::indices(two_l_max, kmin..=kmax)
        .par_iter()
        .map(|i| {
            let t = TensorElement::pure(&i.element(), &Zh::var(Alphabet::Z.var(0, 1))).expect("harmonic");
            let a = ladder::lambda(&t);
            let b = ladder::tilde_l2(&t);
            let got = if a.is_zero() && b.is_zero() { "0".to_string() } else { format!("{a} / {b}") };
            CheckResult::exact("annihilation", &idx_params(i), "0", got)
        })
        .collect()
}

pub fn results_or_error(r: Result<Vec<CheckResult>>, check: &str) -> Vec<CheckResult> {
    r.unwrap_or_else(|e| vec![CheckResult::error(check, &[], "ok", e)])
}
