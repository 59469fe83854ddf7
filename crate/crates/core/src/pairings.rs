//! Invariant pairings, Poisson reproduction, the quotient isomorphism and the
//! two-variable embedding `I`.
//!
//! The `U(2)` integral `(i / 2 pi^3) int g dV` is the coefficient of
//! `t^0 N^-2` in `g`. For a single term `z11^a z12^b z21^c z22^e / N^D` of
//! degree `-4` that coefficient is `(-1)^b a! b! / (a+b+1)!` when `a = e`,
//! `b = c`, and zero otherwise; [`u2_closed`] uses this, [`u2_functional`]
//! reads it off the expansion.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::basis::{self, expand_in_tbasis, expand_parametric, TIndex};
use crate::error::{Error, Result};
use crate::mat2::Mat2;
use crate::poly::{Alphabet, Poly};
use crate::qi::Qi;
use crate::tensor::TensorElement;
use crate::zh::Zh;

const U2_INDEX: TIndex = TIndex { two_l: 0, two_m: 0, two_n: 0, k: -2 };

/// Coefficient of `t^0 N^-2` in the expansion of a pure-`Z` element.
pub fn u2_functional(g: &Zh) -> Result<Qi> {
    Ok(expand_in_tbasis(g)?.get(&U2_INDEX))
}

fn factorial(n: u32) -> BigInt {
    (1..=n as u64).map(BigInt::from).product()
}

/// The same functional by the per-monomial formula, integrating out `Z` only;
/// the result carries the other alphabets.
pub fn u2_closed(g: &Zh) -> Zh {
    let big_d = g.den(Alphabet::Z) as i64;
    let mut dens = g.dens();
    dens[0] = 0;
    let e = big_d - 2;
    if e < 0 {
        return Zh::zero();
    }
    let mut out = Poly::zero();
    let mut memo: HashMap<(u16, u16), Qi> = HashMap::new();
    for (m, c) in g.numerator().terms() {
        let (inside, rest) = m.split(Alphabet::Z);
        let [a, b, cc, d] = inside.alpha_exps(Alphabet::Z);
        if a != d || b != cc || (a + b) as i64 != e {
            continue;
        }
        let w = memo.entry((a, b)).or_insert_with(|| {
            let v = BigRational::new(
                factorial(a as u32) * factorial(b as u32),
                factorial((a + b + 1) as u32),
            );
            let v = Qi::from_rational(v);
            if b % 2 == 1 { -v } else { v }
        });
        out.add_term(rest, &(c * &*w));
    }
    Zh::new(out, dens)
}

fn u2_scalar(g: &Zh) -> Qi {
    u2_closed(g).as_constant().expect("scalar u2 argument")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairingKind {
    /// `(phi1, phi2)_R` over the sphere of radius `R`.
    HR,
    /// `<f1, f2>` over `U(2)_R`.
    Rho1,
    /// `u2(deg~ f1 * f2 / N)`.
    H2,
}

/// A Laurent polynomial in `R^2`, keyed by the exponent of `R^2`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LaurentR2(pub BTreeMap<i32, Qi>);

impl LaurentR2 {
    pub fn constant_term(&self) -> Qi {
        self.0.get(&0).cloned().unwrap_or_else(Qi::zero)
    }

    /// True when only the `R^0` coefficient can be nonzero.
    pub fn is_r_independent(&self) -> bool {
        self.0.keys().all(|&p| p == 0)
    }

    pub fn eval(&self, r: &Qi) -> Qi {
        let r2 = r * r;
        let r2inv = r2.inv().expect("R > 0");
        let mut acc = Qi::zero();
        for (&p, c) in &self.0 {
            let f = if p >= 0 { r2.pow(p as u32) } else { r2inv.pow((-p) as u32) };
            acc += &(c * &f);
        }
        acc
    }
}

impl fmt::Display for LaurentR2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.0.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match p {
                0 => write!(f, "{c}")?,
                _ if c.is_compound() => write!(f, "({c})*R^{}", 2 * p)?,
                _ => write!(f, "{c}*R^{}", 2 * p)?,
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PairValue {
    Scalar(Qi),
    InR2(LaurentR2),
}

impl fmt::Display for PairValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PairValue::Scalar(q) => write!(f, "{q}"),
            PairValue::InR2(p) => write!(f, "{p}"),
        }
    }
}

fn pure_z(f: &Zh) -> Result<()> {
    for a in [Alphabet::Zp, Alphabet::W] {
        if f.uses(a) {
            return Err(Error::Alphabet(a));
        }
    }
    Ok(())
}

pub fn pair_rho1(f1: &Zh, f2: &Zh) -> Result<Qi> {
    pure_z(f1)?;
    pure_z(f2)?;
    Ok(u2_scalar(&(f1 * f2)))
}

pub fn pair_h2(f1: &Zh, f2: &Zh) -> Result<Qi> {
    pure_z(f1)?;
    pure_z(f2)?;
    let g = &(&f1.deg_tilde(Alphabet::Z) * f2) * &Zh::norm_pow(Alphabet::Z, -1);
    Ok(u2_scalar(&g))
}

/// Sphere functional with parameters: `t^0 N^k -> R^(2k+2)`, `l > 0` terms vanish.
fn sphere_parametric(g: &Zh) -> BTreeMap<i32, Zh> {
    let mut out: BTreeMap<i32, Zh> = BTreeMap::new();
    for (idx, c) in expand_parametric(g, Alphabet::Z) {
        if idx.two_l == 0 {
            let e = out.entry(idx.k + 1).or_default();
            *e = &*e + &c;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

pub fn pair_hr(f1: &Zh, f2: &Zh) -> Result<LaurentR2> {
    pure_z(f1)?;
    pure_z(f2)?;
    for f in [f1, f2] {
        if !f.is_harmonic(Alphabet::Z) {
            return Err(Error::NotHarmonic(Alphabet::Z));
        }
    }
    let g = &f1.deg_tilde(Alphabet::Z) * f2;
    Ok(LaurentR2(
        sphere_parametric(&g)
            .into_iter()
            .map(|(p, c)| (p, c.as_constant().expect("scalar")))
            .collect(),
    ))
}

pub fn pair(kind: PairingKind, f1: &Zh, f2: &Zh) -> Result<PairValue> {
    Ok(match kind {
        PairingKind::HR => PairValue::InR2(pair_hr(f1, f2)?),
        PairingKind::Rho1 => PairValue::Scalar(pair_rho1(f1, f2)?),
        PairingKind::H2 => PairValue::Scalar(pair_h2(f1, f2)?),
    })
}

fn binom(n: u32, k: u32) -> Qi {
    Qi::from_rational(BigRational::from_integer(num_integer::binomial(BigInt::from(n), BigInt::from(k))))
}

/// `K_a(Z, W) = sum_{2l=a} t^l_{n,m}(W) t^l_{m,n}(Z^+)`, in closed form
/// `sum_j C(a-j, j) (-1)^j tr(Z W^+)^(a-2j) N(W)^j N(Z)^j`.
pub fn kernel_term(a: u32, w: Alphabet) -> Zh {
    let z = Mat2::<Zh>::of(Alphabet::Z);
    let wm = Mat2::<Zh>::of(w);
    let tr = (&z * &wm.conjugate()).trace();
    let nn = &Zh::norm_pow(Alphabet::Z, 1) * &Zh::norm_pow(w, 1);
    let mut acc = Zh::zero();
    for j in 0..=a / 2 {
        let mut c = binom(a - j, j);
        if j % 2 == 1 {
            c = -c;
        }
        acc = &acc + &(&tr.pow(a - 2 * j) * &nn.pow(j)).scale(&c);
    }
    acc
}

/// `phi(W) = (phi, 1/N(Z - W))_R` for harmonic polynomial `phi`, computed
/// with `1/N(Z-W) = sum_a K_a(Z,W) / N(Z)^(a+1)`.
pub fn poisson_project(phi: &Zh, w: Alphabet) -> Result<Zh> {
    pure_z(phi)?;
    if w == Alphabet::Z {
        return Err(Error::Alphabet(w));
    }
    let p = phi.as_poly().ok_or_else(|| Error::Invalid("expected a polynomial".into()))?;
    if !phi.is_harmonic(Alphabet::Z) {
        return Err(Error::NotHarmonic(Alphabet::Z));
    }
    let top = p.degree().unwrap_or(0);
    let g0 = phi.deg_tilde(Alphabet::Z);
    let mut acc: BTreeMap<i32, Zh> = BTreeMap::new();
    for a in 0..=top {
        let k = kernel_term(a, w).mul_norm_pow(Alphabet::Z, -(a as i32) - 1);
        for (pw, c) in sphere_parametric(&(&g0 * &k)) {
            let e = acc.entry(pw).or_default();
            *e = &*e + &c;
        }
    }
    acc.retain(|_, c| !c.is_zero());
    if acc.keys().any(|&p| p != 0) {
        return Err(Error::Invalid("Poisson integral depends on R".into()));
    }
    Ok(acc.remove(&0).unwrap_or_default())
}

/// `phi -> deg~ phi / N`.
pub fn quotient_iso(phi: &Zh) -> Result<Zh> {
    if !phi.is_harmonic(Alphabet::Z) {
        return Err(Error::NotHarmonic(Alphabet::Z));
    }
    Ok(&phi.deg_tilde(Alphabet::Z) * &Zh::norm_pow(Alphabet::Z, -1))
}

/// `f -> <f, 1/N(Z - W)>_Z`, with the result written in alphabet `w`.
pub fn quotient_iso_inverse(f: &Zh, w: Alphabet) -> Result<Zh> {
    pure_z(f)?;
    if w == Alphabet::Z {
        return Err(Error::Alphabet(w));
    }
    let mut acc = Zh::zero();
    for (delta, piece) in f.graded(Alphabet::Z) {
        let a = delta + 2;
        if a < 0 {
            continue;
        }
        let a = a as u32;
        let k = kernel_term(a, w).mul_norm_pow(Alphabet::Z, -(a as i32) - 1);
        acc = &acc + &u2_closed(&(&piece * &k));
    }
    Ok(acc)
}

// ---- the embedding I ---------------------------------------------------------

fn t_plus_cache() -> &'static RwLock<HashMap<(u32, i32, i32), Arc<Poly>>> {
    static C: OnceLock<RwLock<HashMap<(u32, i32, i32), Arc<Poly>>>> = OnceLock::new();
    C.get_or_init(Default::default)
}

/// `t^l_{n,m}(Z^+)` as a polynomial in `Z`.
fn t_plus(two_l: u32, two_n: i32, two_m: i32) -> Arc<Poly> {
    let key = (two_l, two_n, two_m);
    if let Some(p) = t_plus_cache().read().unwrap().get(&key) {
        return p.clone();
    }
    let zp = Mat2(Alphabet::Z.vars().map(Poly::var)).adjugate();
    let p = Arc::new(basis::t_poly_of(two_l, two_n, two_m, &zp).expect("valid index"));
    t_plus_cache().write().unwrap().insert(key, p.clone());
    p
}

fn embed_cache() -> &'static RwLock<HashMap<TIndex, Arc<Poly>>> {
    static C: OnceLock<RwLock<HashMap<TIndex, Arc<Poly>>>> = OnceLock::new();
    C.get_or_init(Default::default)
}

/// Pairs `((2l1, 2n1, 2m1), (2l2, 2n2, 2m2))` that can pair nontrivially with
/// `t^L_{N,M} N^K`: `2l1 + 2l2 = 2L + 2K`, `n1 + n2 = N`, `m1 + m2 = M`.
fn weight_pairs(b: &TIndex) -> Vec<((u32, i32, i32), (u32, i32, i32))> {
    let d = b.degree();
    let mut v = Vec::new();
    if d < 0 {
        return v;
    }
    let d = d as u32;
    for l1 in 0..=d {
        let l2 = d - l1;
        for (m1, n1) in basis::weights(l1) {
            let (m2, n2) = (b.two_m - m1, b.two_n - n1);
            if m2.abs() <= l2 as i32 && n2.abs() <= l2 as i32 {
                v.push(((l1, n1, m1), (l2, n2, m2)));
            }
        }
    }
    v
}

/// `I(t^L N^K)` as a polynomial in `(Z, Zp)` standing for `(W1, W2)`.
pub fn embed_basis(b: &TIndex) -> Arc<Poly> {
    if let Some(p) = embed_cache().read().unwrap().get(b) {
        return p.clone();
    }
    let p = Arc::new(embed_basis_uncached(b, &weight_pairs(b)));
    embed_cache().write().unwrap().insert(*b, p.clone());
    p
}

fn embed_basis_uncached(b: &TIndex, pairs: &[((u32, i32, i32), (u32, i32, i32))]) -> Poly {
    let d = b.degree();
    if d < 0 {
        return Poly::zero();
    }
    let base = basis::basis_element(b, Alphabet::Z);
    let mut out = Poly::zero();
    for &((l1, n1, m1), (l2, n2, m2)) in pairs {
        // N^-2 t^l1_{m1,n1}(Z^-1) t^l2_{m2,n2}(Z^-1) = t(Z^+) t(Z^+) / N^(2 + d)
        let dual = &*t_plus(l1, m1, n1) * &*t_plus(l2, m2, n2);
        let g = (&base * &Zh::from(dual)).mul_norm_pow(Alphabet::Z, -2 - d as i32);
        let c = u2_scalar(&g);
        if c.is_zero() {
            continue;
        }
        let w1 = basis::t_poly(l1, n1, m1).unwrap();
        let w2 = basis::t_poly_in(Alphabet::Zp, l2, n2, m2).unwrap();
        out = &out + &(&*w1 * &w2).scale(&c);
    }
    out
}

/// Same sum over every index pair of the right total degree, without the
/// weight restriction. Used as an oracle.
pub fn embed_basis_all_pairs(b: &TIndex) -> Poly {
    let d = b.degree();
    if d < 0 {
        return Poly::zero();
    }
    let d = d as u32;
    let mut pairs = Vec::new();
    for l1 in 0..=d {
        for (m1, n1) in basis::weights(l1) {
            for (m2, n2) in basis::weights(d - l1) {
                pairs.push(((l1, n1, m1), (d - l1, n2, m2)));
            }
        }
    }
    embed_basis_uncached(b, &pairs)
}

/// `I(f)(W1, W2)` for `f` in the `Z` alphabet, returned in `(Z, Zp)`.
pub fn i_embed(f: &Zh) -> Result<TensorElement> {
    let e = expand_in_tbasis(f)?;
    let mut out = Poly::zero();
    for (idx, c) in &e.coeffs {
        out = &out + &embed_basis(idx).scale(c);
    }
    Ok(TensorElement::new_unchecked(Zh::from(out)))
}

/// `(1/(p+1)) sum_k x^k y^(p-k)` for the entry `(row, col)` in `Z` and `Zp`.
pub fn z_power_closed_form(row: usize, col: usize, p: u32) -> Zh {
    let x = Poly::var(Alphabet::Z.var(row, col));
    let y = Poly::var(Alphabet::Zp.var(row, col));
    let mut s = Poly::zero();
    for k in 0..=p {
        s = &s + &(&x.pow(k) * &y.pow(p - k));
    }
    Zh::from(s.scale(&Qi::frac(1, p as i64 + 1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_zh;

    fn p(s: &str) -> Zh {
        parse_zh(s).unwrap()
    }

    #[test]
    fn u2_examples() {
        assert_eq!(u2_functional(&p("N^-2")).unwrap(), Qi::one());
        assert_eq!(u2_functional(&p("1")).unwrap(), Qi::zero());
        assert_eq!(u2_functional(&p("z11*z22/N^3")).unwrap(), Qi::frac(1, 2));
        assert_eq!(u2_closed(&p("z11*z22/N^3")), p("1/2"));
        assert_eq!(u2_closed(&p("z12*z21/N^3")), p("-1/2"));
    }

    #[test]
    fn pair_examples() {
        assert_eq!(pair_rho1(&p("z11"), &p("z22/N^3")).unwrap(), Qi::frac(1, 2));
        let hr = pair_hr(&p("1"), &p("1/N")).unwrap();
        assert!(hr.is_r_independent());
        assert_eq!(hr.constant_term(), Qi::one());
        assert_eq!(pair_hr(&p("1/N"), &p("1")).unwrap().constant_term(), -Qi::one());
        assert!(pair_hr(&p("N"), &p("1")).is_err());
    }

    #[test]
    fn kernel_matches_t_sum() {
        for a in 0..4u32 {
            let mut want = Poly::zero();
            for (m, n) in basis::weights(a) {
                let tw = basis::t_poly_in(Alphabet::W, a, n, m).unwrap();
                want = &want + &(&tw * &*t_plus(a, m, n));
            }
            assert_eq!(kernel_term(a, Alphabet::W), Zh::from(want), "a = {a}");
        }
    }

    #[test]
    fn poisson_examples() {
        assert_eq!(poisson_project(&p("1"), Alphabet::W).unwrap(), p("1"));
        assert_eq!(poisson_project(&p("z11"), Alphabet::W).unwrap(), p("w11"));
        let t = p("z11*z22 + z12*z21");
        assert_eq!(poisson_project(&t, Alphabet::W).unwrap(), t.rename(Alphabet::Z, Alphabet::W));
        assert!(poisson_project(&p("N"), Alphabet::W).is_err());
    }

    #[test]
    fn quotient_examples() {
        assert_eq!(quotient_iso(&p("1")).unwrap(), p("1/N"));
        assert_eq!(quotient_iso_inverse(&p("1/N"), Alphabet::W).unwrap(), p("1"));
        assert_eq!(quotient_iso(&p("z11")).unwrap(), p("2*z11/N"));
        assert_eq!(quotient_iso_inverse(&p("2*z11/N"), Alphabet::W).unwrap(), p("w11"));
        assert!(quotient_iso_inverse(&p("N"), Alphabet::W).unwrap().is_zero());
    }

    #[test]
    fn embed_examples() {
        assert_eq!(i_embed(&p("1")).unwrap().as_zh(), &p("1"));
        assert_eq!(i_embed(&p("z11")).unwrap().as_zh(), &p("1/2*z11 + 1/2*y11"));
        assert!(i_embed(&p("1/N")).unwrap().is_zero());
        assert_eq!(i_embed(&p("z11^2")).unwrap().as_zh(), &z_power_closed_form(0, 0, 2));
    }

    #[test]
    fn weight_restriction_loses_nothing() {
        for b in basis::indices(3, -2..=1) {
            assert_eq!(*embed_basis(&b), embed_basis_all_pairs(&b), "{b}");
        }
    }
}
