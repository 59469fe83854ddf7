//! Matrix coefficients `t^l_{n,m}`, the symmetric-power matrices `tau_l`, and
//! expansion of `Zh` elements in the basis `t^l_{n,m}(Z) N(Z)^k`.
//!
//! Expansion works weight block by weight block. A monomial
//! `z11^a z12^b z21^c z22^e` has row weight `(a+b) - (c+e)` and column weight
//! `(a+c) - (b+e)`; `t^l_{n,m} N^j` lives in the block with those weights equal
//! to `-2n` and `-2m`. Each block of fixed degree is a square system.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_integer::binomial;

use crate::error::{Error, Result};
use crate::mat2::Mat2;
use crate::poly::{Alphabet, Monomial, Poly};
use crate::qi::{self, Qi};
use crate::zh::Zh;

/// Index of `t^l_{n,m}(Z) N(Z)^k`, with half-integers stored doubled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TIndex {
    pub two_l: u32,
    pub two_m: i32,
    pub two_n: i32,
    pub k: i32,
}

impl TIndex {
    pub fn new(two_l: u32, two_m: i32, two_n: i32, k: i32) -> Result<Self> {
        check_index(two_l, two_n, two_m)?;
        Ok(TIndex { two_l, two_m, two_n, k })
    }

    /// Homogeneous degree `2l + 2k`.
    pub fn degree(&self) -> i64 {
        self.two_l as i64 + 2 * self.k as i64
    }

    pub fn element(&self) -> Zh {
        basis_element(self, Alphabet::Z)
    }
}

impl fmt::Display for TIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(2l={}, 2m={}, 2n={}, k={})", self.two_l, self.two_m, self.two_n, self.k)
    }
}

fn check_index(two_l: u32, two_n: i32, two_m: i32) -> Result<()> {
    let l = two_l as i32;
    let ok = two_n.abs() <= l
        && two_m.abs() <= l
        && (l - two_n).rem_euclid(2) == 0
        && (l - two_m).rem_euclid(2) == 0;
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidIndex { two_l: two_l as i64, two_n: two_n as i64, two_m: two_m as i64 })
    }
}

fn binom(n: u32, k: u32) -> Qi {
    Qi::from_rational(num_rational::BigRational::from_integer(binomial(
        num_bigint::BigInt::from(n),
        num_bigint::BigInt::from(k),
    )))
}

/// `t^l_{n,m}` evaluated at a matrix with polynomial entries: the coefficient
/// of `s^(l-n)` in `(s a + c)^(l-m) (s b + d)^(l+m)` for `M = (a b; c d)`.
pub fn t_poly_of(two_l: u32, two_n: i32, two_m: i32, m: &Mat2<Poly>) -> Result<Poly> {
    check_index(two_l, two_n, two_m)?;
    let l = two_l as i32;
    let p = ((l - two_m) / 2) as u32;
    let q = ((l + two_m) / 2) as u32;
    let e = ((l - two_n) / 2) as u32;
    let [a, b, c, d] = &m.0;
    let mut out = Poly::zero();
    let lo = e.saturating_sub(q);
    for i in lo..=p.min(e) {
        let j = e - i;
        let coef = &binom(p, i) * &binom(q, j);
        let t = &(&a.pow(i) * &c.pow(p - i)) * &(&b.pow(j) * &d.pow(q - j));
        out = &out + &t.scale(&coef);
    }
    Ok(out)
}

type TKey = (u32, i32, i32);

fn t_cache() -> &'static RwLock<HashMap<TKey, Arc<Poly>>> {
    static C: OnceLock<RwLock<HashMap<TKey, Arc<Poly>>>> = OnceLock::new();
    C.get_or_init(Default::default)
}

/// `t^l_{n,m}(Z)` in alphabet `Z`.
pub fn t_poly(two_l: u32, two_n: i32, two_m: i32) -> Result<Arc<Poly>> {
    check_index(two_l, two_n, two_m)?;
    let key = (two_l, two_n, two_m);
    if let Some(p) = t_cache().read().unwrap().get(&key) {
        return Ok(p.clone());
    }
    let z = Mat2(Alphabet::Z.vars().map(Poly::var));
    let p = Arc::new(t_poly_of(two_l, two_n, two_m, &z)?);
    t_cache().write().unwrap().insert(key, p.clone());
    Ok(p)
}

pub fn t_poly_in(a: Alphabet, two_l: u32, two_n: i32, two_m: i32) -> Result<Poly> {
    Ok(t_poly(two_l, two_n, two_m)?.rename(Alphabet::Z, a))
}

/// `t^l_{n,m}(X) N(X)^k` in alphabet `a`.
pub fn basis_element(idx: &TIndex, a: Alphabet) -> Zh {
    let t = t_poly(idx.two_l, idx.two_n, idx.two_m).expect("valid index");
    Zh::from(t.rename(Alphabet::Z, a)).mul_norm_pow(a, idx.k)
}

/// The `(2l+1) x (2l+1)` matrix with entry `[i][j] = t^l_{-l+i, -l+j}(M)`.
pub fn tau_matrix(two_l: u32, m: &Mat2<Poly>) -> Vec<Vec<Poly>> {
    let l = two_l as i32;
    (0..=l)
        .map(|i| (0..=l).map(|j| t_poly_of(two_l, 2 * i - l, 2 * j - l, m).unwrap()).collect())
        .collect()
}

/// All `(2m, 2n)` pairs for a given `2l`, ordered.
pub fn weights(two_l: u32) -> impl Iterator<Item = (i32, i32)> {
    let l = two_l as i32;
    (0..=l).flat_map(move |i| (0..=l).map(move |j| (2 * i - l, 2 * j - l)))
}

/// Every index with `2l <= two_l_max` and `k` in the given range.
pub fn indices(two_l_max: u32, ks: std::ops::RangeInclusive<i32>) -> Vec<TIndex> {
    let mut v = Vec::new();
    for two_l in 0..=two_l_max {
        for k in ks.clone() {
            for (two_m, two_n) in weights(two_l) {
                v.push(TIndex { two_l, two_m, two_n, k });
            }
        }
    }
    v
}

// ---- weight blocks ----------------------------------------------------------

/// `(degree, 2n, 2m)`.
type BlockKey = (u32, i32, i32);

struct Block {
    /// Exponent of `x11` at position 0.
    a_min: u32,
    /// `inv[j][pos]`: coefficient of `t^{l_j} N^j` contributed by block monomial `pos`.
    inv: Vec<Vec<Qi>>,
}

fn block_cache() -> &'static RwLock<HashMap<BlockKey, Arc<Block>>> {
    static C: OnceLock<RwLock<HashMap<BlockKey, Arc<Block>>>> = OnceLock::new();
    C.get_or_init(Default::default)
}

fn block_shape(d: u32, two_n: i32, two_m: i32) -> (u32, u32, u32, u32) {
    let r = ((d as i32 - two_n) / 2) as u32;
    let c = ((d as i32 - two_m) / 2) as u32;
    let a_min = (r + c).saturating_sub(d);
    let a_max = r.min(c);
    (r, c, a_min, a_max)
}

fn block_monomial(d: u32, r: u32, c: u32, a: u32) -> [u16; 4] {
    [a as u16, (r - a) as u16, (c - a) as u16, (d + a - r - c) as u16]
}

fn block(key: BlockKey) -> Arc<Block> {
    if let Some(b) = block_cache().read().unwrap().get(&key) {
        return b.clone();
    }
    let (d, two_n, two_m) = key;
    let (_, _, a_min, a_max) = block_shape(d, two_n, two_m);
    let size = (a_max - a_min + 1) as usize;
    let mut m = vec![vec![Qi::zero(); size]; size];
    for j in 0..size {
        let two_l = d - 2 * j as u32;
        let t = t_poly(two_l, two_n, two_m).expect("block index");
        let p = &*t * &Poly::norm(Alphabet::Z).pow(j as u32);
        for (mono, coef) in p.terms() {
            let a = mono.exps()[0] as u32;
            m[(a - a_min) as usize][j] = coef.clone();
        }
    }
    let inv = qi::invert(&m).expect("t N^j spans its weight block");
    let b = Arc::new(Block { a_min, inv });
    block_cache().write().unwrap().insert(key, b.clone());
    b
}

/// Expansion of `f` in the basis of alphabet `a`, with coefficients that may
/// involve the other alphabets.
pub fn expand_parametric(f: &Zh, a: Alphabet) -> BTreeMap<TIndex, Zh> {
    let big_d = f.den(a) as i32;
    let mut other_den = f.dens();
    other_den[a.index()] = 0;
    let mut blocks: BTreeMap<BlockKey, BTreeMap<u32, Poly>> = BTreeMap::new();
    for (m, c) in f.numerator().terms() {
        let (inside, rest) = m.split(a);
        let [e11, e12, e21, e22] = inside.alpha_exps(a).map(|x| x as i32);
        let d = (e11 + e12 + e21 + e22) as u32;
        let two_n = d as i32 - 2 * (e11 + e12);
        let two_m = d as i32 - 2 * (e11 + e21);
        blocks
            .entry((d, two_n, two_m))
            .or_default()
            .entry(e11 as u32)
            .or_default()
            .add_term(rest, c);
    }
    let mut out = BTreeMap::new();
    for ((d, two_n, two_m), vec) in blocks {
        let b = block((d, two_n, two_m));
        for (j, row) in b.inv.iter().enumerate() {
            let mut acc = Poly::zero();
            for (&a11, p) in &vec {
                let w = &row[(a11 - b.a_min) as usize];
                if !w.is_zero() {
                    acc = &acc + &p.scale(w);
                }
            }
            if !acc.is_zero() {
                let idx = TIndex { two_l: d - 2 * j as u32, two_m, two_n, k: j as i32 - big_d };
                out.insert(idx, Zh::new(acc, other_den));
            }
        }
    }
    out
}

/// Inverse of [`expand_parametric`].
pub fn reconstruct_parametric(e: &BTreeMap<TIndex, Zh>, a: Alphabet) -> Zh {
    let mut acc = Zh::zero();
    for (idx, c) in e {
        acc = &acc + &(c * &basis_element(idx, a));
    }
    acc
}

/// Coefficients of a `Zh` element over the t-basis.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TExpansion {
    pub coeffs: BTreeMap<TIndex, Qi>,
}

impl TExpansion {
    pub fn get(&self, idx: &TIndex) -> Qi {
        self.coeffs.get(idx).cloned().unwrap_or_else(Qi::zero)
    }

    pub fn reconstruct(&self) -> Zh {
        let mut by_den: BTreeMap<i32, Poly> = BTreeMap::new();
        let kmin = self.coeffs.keys().map(|i| i.k).min().unwrap_or(0).min(0);
        for (idx, c) in &self.coeffs {
            let t = t_poly(idx.two_l, idx.two_n, idx.two_m).unwrap();
            let p = by_den.entry(idx.k - kmin).or_default();
            *p = &*p + &t.scale(c);
        }
        let n = Poly::norm(Alphabet::Z);
        let mut num = Poly::zero();
        for (j, p) in by_den {
            num = &num + &(&p * &n.pow(j as u32));
        }
        Zh::new(num, [(-kmin) as u32, 0, 0])
    }
}

impl fmt::Display for TExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (idx, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{idx}: {c}")?;
        }
        Ok(())
    }
}

/// Expansion of an element of the `Z` alphabet only.
pub fn expand_in_tbasis(f: &Zh) -> Result<TExpansion> {
    for a in [Alphabet::Zp, Alphabet::W] {
        if f.uses(a) {
            return Err(Error::Alphabet(a));
        }
    }
    let coeffs = expand_parametric(f, Alphabet::Z)
        .into_iter()
        .map(|(i, c)| (i, c.as_constant().expect("scalar coefficient")))
        .collect();
    Ok(TExpansion { coeffs })
}

pub fn reconstruct(e: &TExpansion) -> Zh {
    e.reconstruct()
}

/// Fischer decomposition `p = sum_j h_j N^j` with every `h_j` harmonic in `a`.
pub fn harmonic_decompose(p: &Poly, a: Alphabet) -> Vec<Poly> {
    let mut hs: Vec<Poly> = vec![Poly::zero()];
    for (idx, c) in expand_parametric(&Zh::from(p.clone()), a) {
        let j = idx.k as usize;
        if hs.len() <= j {
            hs.resize(j + 1, Poly::zero());
        }
        let t = t_poly_in(a, idx.two_l, idx.two_n, idx.two_m).unwrap();
        let c = c.as_poly().expect("polynomial coefficient").clone();
        hs[j] = &hs[j] + &(&t * &c);
    }
    hs
}

pub fn is_harmonic(f: &Zh) -> bool {
    f.is_harmonic(Alphabet::Z)
}

/// For `t^l_{n,m}(X) N^k`, the scalar `c` with
/// `invert(t^l_{n,m} N^k) = c t^l_{-m,-n} N^{-k-2l}`. `None` if the image is
/// not a multiple of that single basis element.
pub fn inversion_constant(idx: &TIndex) -> Option<Qi> {
    let img = expand_in_tbasis(&idx.element().invert(Alphabet::Z)).ok()?;
    let target = TIndex { two_l: idx.two_l, two_m: -idx.two_n, two_n: -idx.two_m, k: -idx.k - idx.two_l as i32 };
    (img.coeffs.len() == 1).then(|| img.get(&target)).filter(|c| !c.is_zero())
}

// ---- invariant subspaces ---------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scheme {
    Varpi2,
    Rho1,
}

/// Primitive cells of the `(2l, k)` lattice. For `Varpi2` the cells are
/// `ZhPlus`, `J2`, `Zh2Minus` and the two bands `k = -1` (`I2PlusOnly`) and
/// `k = -(2l+2)` (`I2MinusOnly`). For `Rho1` they are `ZhPlus`, `Zh0`, `Zh1Minus`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ComponentLabel {
    ZhPlus,
    Zh2Minus,
    J2,
    I2PlusOnly,
    I2MinusOnly,
    Zh0,
    Zh1Minus,
}

impl ComponentLabel {
    pub fn name(self) -> &'static str {
        match self {
            ComponentLabel::ZhPlus => "Zh+",
            ComponentLabel::Zh2Minus => "Zh2-",
            ComponentLabel::J2 => "J2",
            ComponentLabel::I2PlusOnly => "I2+ only",
            ComponentLabel::I2MinusOnly => "I2- only",
            ComponentLabel::Zh0 => "Zh0",
            ComponentLabel::Zh1Minus => "Zh1-",
        }
    }
}

impl fmt::Display for ComponentLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn classify(idx: &TIndex, scheme: Scheme) -> ComponentLabel {
    classify_lk(idx.two_l, idx.k, scheme)
}

pub fn classify_lk(two_l: u32, k: i32, scheme: Scheme) -> ComponentLabel {
    let l2 = two_l as i32;
    match scheme {
        Scheme::Varpi2 => {
            if k >= 0 {
                ComponentLabel::ZhPlus
            } else if k == -1 {
                ComponentLabel::I2PlusOnly
            } else if k >= -(l2 + 1) {
                ComponentLabel::J2
            } else if k == -(l2 + 2) {
                ComponentLabel::I2MinusOnly
            } else {
                ComponentLabel::Zh2Minus
            }
        }
        Scheme::Rho1 => {
            if k >= 0 {
                ComponentLabel::ZhPlus
            } else if k >= -(l2 + 1) {
                ComponentLabel::Zh0
            } else {
                ComponentLabel::Zh1Minus
            }
        }
    }
}

/// Named invariant subspaces, each a union of primitive cells.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Subspace {
    ZhPlus,
    Zh2Minus,
    J2,
    I2Plus,
    I2Minus,
    Zh0,
    Zh1Minus,
}

impl Subspace {
    pub const VARPI2: [Subspace; 5] =
        [Subspace::ZhPlus, Subspace::Zh2Minus, Subspace::J2, Subspace::I2Plus, Subspace::I2Minus];
    pub const RHO1: [Subspace; 3] = [Subspace::ZhPlus, Subspace::Zh0, Subspace::Zh1Minus];

    pub fn contains_lk(self, two_l: u32, k: i32) -> bool {
        let l2 = two_l as i32;
        match self {
            Subspace::ZhPlus => k >= 0,
            Subspace::Zh2Minus => k <= -(l2 + 3),
            Subspace::J2 => -(l2 + 1) <= k && k <= -2,
            Subspace::I2Plus => k >= -(l2 + 1),
            Subspace::I2Minus => k <= -2,
            Subspace::Zh0 => -(l2 + 1) <= k && k <= -1,
            Subspace::Zh1Minus => k <= -(l2 + 2),
        }
    }

    pub fn contains(self, idx: &TIndex) -> bool {
        self.contains_lk(idx.two_l, idx.k)
    }
}

/// Keep only the basis terms of `f` (expanded in `Z`) whose cell is `label`.
pub fn project_component(f: &Zh, label: ComponentLabel, scheme: Scheme) -> Zh {
    project_where(f, Alphabet::Z, |i| classify(i, scheme) == label)
}

pub fn project_subspace(f: &Zh, s: Subspace) -> Zh {
    project_where(f, Alphabet::Z, |i| s.contains(i))
}

pub fn project_where(f: &Zh, a: Alphabet, keep: impl Fn(&TIndex) -> bool) -> Zh {
    let mut e = expand_parametric(f, a);
    e.retain(|i, _| keep(i));
    reconstruct_parametric(&e, a)
}

/// Monomials of a weight block, exposed for tests.
pub fn block_monomials(d: u32, two_n: i32, two_m: i32) -> Vec<Monomial> {
    let (r, c, a_min, a_max) = block_shape(d, two_n, two_m);
    (a_min..=a_max)
        .map(|a| {
            let e = block_monomial(d, r, c, a);
            let mut full = [0u16; 12];
            full[..4].copy_from_slice(&e);
            Monomial::from_exps(full)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_zh;

    fn p(s: &str) -> Zh {
        parse_zh(s).unwrap()
    }

    #[test]
    fn t_examples() {
        assert_eq!(*t_poly(0, 0, 0).unwrap(), Poly::one());
        assert_eq!(Zh::from((*t_poly(1, -1, -1).unwrap()).clone()), p("z11"));
        assert_eq!(Zh::from((*t_poly(2, 0, 0).unwrap()).clone()), p("z11*z22 + z12*z21"));
        assert!(t_poly(2, 1, 0).is_err());
        assert!(t_poly(1, 3, 1).is_err());
    }

    #[test]
    fn t_corner_powers() {
        for two_l in 0..6u32 {
            let l = two_l as i32;
            let t = Zh::from((*t_poly(two_l, -l, -l).unwrap()).clone());
            assert_eq!(t, p("z11").pow(two_l));
        }
    }

    #[test]
    fn tau_small() {
        let z = Mat2(Alphabet::Z.vars().map(Poly::var));
        assert_eq!(tau_matrix(0, &z), vec![vec![Poly::one()]]);
        let t1 = tau_matrix(1, &z);
        assert_eq!(t1, vec![vec![z.0[0].clone(), z.0[1].clone()], vec![z.0[2].clone(), z.0[3].clone()]]);
        let a = Poly::var(Alphabet::W.var(0, 0));
        let d = Poly::var(Alphabet::W.var(1, 1));
        let diag = Mat2([a.clone(), Poly::zero(), Poly::zero(), d.clone()]);
        let t2 = tau_matrix(2, &diag);
        let want = [a.pow(2), &a * &d, d.pow(2)];
        for i in 0..3 {
            for j in 0..3 {
                let w = if i == j { want[i].clone() } else { Poly::zero() };
                assert_eq!(t2[i][j], w);
            }
        }
    }

    #[test]
    fn expansion_examples() {
        let e = expand_in_tbasis(&p("z11")).unwrap();
        assert_eq!(e.coeffs.len(), 1);
        assert_eq!(e.get(&TIndex { two_l: 1, two_m: -1, two_n: -1, k: 0 }), Qi::one());
        let e = expand_in_tbasis(&p("1/N")).unwrap();
        assert_eq!(e.get(&TIndex { two_l: 0, two_m: 0, two_n: 0, k: -1 }), Qi::one());
        let e = expand_in_tbasis(&p("z11*z22")).unwrap();
        assert_eq!(e.coeffs.len(), 2);
        assert_eq!(e.get(&TIndex { two_l: 2, two_m: 0, two_n: 0, k: 0 }), Qi::frac(1, 2));
        assert_eq!(e.get(&TIndex { two_l: 0, two_m: 0, two_n: 0, k: 1 }), Qi::frac(1, 2));
        assert!(expand_in_tbasis(&p("y11")).is_err());
    }

    #[test]
    fn fischer_examples() {
        let z11 = Poly::var(Alphabet::Z.var(0, 0));
        assert_eq!(harmonic_decompose(&z11, Alphabet::Z), vec![z11.clone()]);
        assert_eq!(harmonic_decompose(&Poly::norm(Alphabet::Z), Alphabet::Z), vec![Poly::zero(), Poly::one()]);
        let h = harmonic_decompose(p("z11*z22").numerator(), Alphabet::Z);
        assert_eq!(Zh::from(h[0].clone()), p("1/2*z11*z22 + 1/2*z12*z21"));
        assert_eq!(Zh::from(h[1].clone()), p("1/2"));
    }

    #[test]
    fn classify_examples() {
        let lab = |two_l, k| classify_lk(two_l, k, Scheme::Varpi2);
        assert_eq!(lab(0, 0), ComponentLabel::ZhPlus);
        assert_eq!(lab(2, -2), ComponentLabel::J2);
        assert_eq!(lab(0, -3), ComponentLabel::Zh2Minus);
        assert_eq!(lab(0, -1), ComponentLabel::I2PlusOnly);
        assert_eq!(lab(0, -2), ComponentLabel::I2MinusOnly);
        assert_eq!(classify_lk(1, -3, Scheme::Rho1), ComponentLabel::Zh1Minus);
        assert_eq!(classify_lk(1, -2, Scheme::Rho1), ComponentLabel::Zh0);
    }

    #[test]
    fn cells_refine_subspaces() {
        for two_l in 0..6 {
            for k in -10..4 {
                let cell = classify_lk(two_l, k, Scheme::Varpi2);
                let inside: Vec<_> = Subspace::VARPI2.iter().filter(|s| s.contains_lk(two_l, k)).collect();
                let want: &[Subspace] = match cell {
                    ComponentLabel::ZhPlus => &[Subspace::ZhPlus, Subspace::I2Plus],
                    ComponentLabel::I2PlusOnly => &[Subspace::I2Plus],
                    ComponentLabel::J2 => &[Subspace::J2, Subspace::I2Plus, Subspace::I2Minus],
                    ComponentLabel::I2MinusOnly => &[Subspace::I2Minus],
                    ComponentLabel::Zh2Minus => &[Subspace::Zh2Minus, Subspace::I2Minus],
                    _ => unreachable!(),
                };
                let mut want = want.to_vec();
                want.sort();
                let mut got: Vec<Subspace> = inside.into_iter().copied().collect();
                got.sort();
                assert_eq!(got, want, "2l={two_l} k={k}");
                let rho: Vec<_> = Subspace::RHO1.iter().filter(|s| s.contains_lk(two_l, k)).collect();
                assert_eq!(rho.len(), 1);
            }
        }
    }

    #[test]
    fn projection_keeps_matching_terms() {
        let f = p("z11*z22 + 1/N^3 + z12/N");
        assert_eq!(project_subspace(&f, Subspace::ZhPlus), p("z11*z22"));
        assert_eq!(project_component(&f, ComponentLabel::Zh2Minus, Scheme::Varpi2), p("1/N^3"));
        assert_eq!(project_component(&f, ComponentLabel::I2PlusOnly, Scheme::Varpi2), p("z12/N"));
    }
}
