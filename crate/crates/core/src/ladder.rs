//! The multiplication map `M`, the zig-zag operator `Lambda`, its cube, and
//! the one- and two-loop ladder operators on two-alphabet functions.
//!
//! Tensors are stored flat in the alphabets `(Z, Zp)`. All operators return
//! their result in the same pair of alphabets; they print as `z`/`y`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::actions::{act, equivariance_residual, Action, ActionKind, GlElement};
use crate::basis::{self, TIndex};
use crate::error::{Error, Result};
use crate::mat2::Mat2;
use crate::pairings::{embed_basis, i_embed};
use crate::poly::Alphabet;
use crate::qi::Qi;
use crate::tensor::TensorElement;
use crate::zh::Zh;

/// `phi1(Z) (x) phi2(Zp) -> (phi1 phi2)(Z)`.
pub fn m_multiply(t: &TensorElement) -> Zh {
    t.as_zh().rename(Alphabet::Zp, Alphabet::Z)
}

/// `f (x) phi -> (phi . I(Proj f)_1) (x) I(Proj f)_2`, where `Proj` keeps the
/// `k >= 0` part of the first slot.
pub fn lambda(t: &TensorElement) -> TensorElement {
    let parts = basis::expand_parametric(t.as_zh(), Alphabet::Z);
    let out = parts
        .par_iter()
        .filter(|(idx, _)| idx.k >= 0)
        .map(|(idx, c)| &c.rename(Alphabet::Zp, Alphabet::Z) * &Zh::from((*embed_basis(idx)).clone()))
        .reduce(Zh::zero, |a, b| &a + &b);
    TensorElement::new_unchecked(out)
}

pub fn tilde_l2(t: &TensorElement) -> TensorElement {
    lambda(&lambda(&lambda(t)))
}

pub fn l1(t: &TensorElement) -> Result<TensorElement> {
    i_embed(&m_multiply(t))
}

fn check_harmonic_pair(f: &Zh) -> Result<()> {
    if f.den(Alphabet::Z) > 0 {
        return Err(Error::Invalid("first slot must be polynomial".into()));
    }
    for a in [Alphabet::Z, Alphabet::Zp] {
        if !f.is_harmonic(a) {
            return Err(Error::NotHarmonic(a));
        }
    }
    Ok(())
}

/// The split `N(Z - W) = sum c(W) e(Z)` with `W` written in alphabet `Z`
/// and `e` in a stand-in copy of `Z`, returned as `(c, e)` with `e` in `Z`.
fn norm_difference_split() -> Vec<(Zh, Zh)> {
    let z = Mat2::<Zh>::of(Alphabet::Z);
    let zp = z.conjugate();
    let mut v = vec![(Zh::one(), Zh::norm_pow(Alphabet::Z, 1))];
    for i in 0..2 {
        for j in 0..2 {
            v.push((-zp.at(j, i), Zh::var(Alphabet::Z.var(i, j))));
        }
    }
    v.push((Zh::norm_pow(Alphabet::Z, 1), Zh::one()));
    v
}

/// Two-loop ladder operator on `H+ (x) H+`. The result is checked to be
/// harmonic in both output alphabets.
pub fn l2(t: &TensorElement) -> Result<TensorElement> {
    let f = t.as_zh();
    check_harmonic_pair(f)?;
    let g = f.deg_tilde(Alphabet::Z).mul_norm_pow(Alphabet::Z, -1);
    let out = norm_difference_split()
        .into_par_iter()
        .map(|(c, e)| {
            let img = tilde_l2(&TensorElement::new_unchecked(&e * &g));
            &c * img.as_zh()
        })
        .reduce(Zh::zero, |a, b| &a + &b);
    for a in [Alphabet::Z, Alphabet::Zp] {
        if !out.is_harmonic(a) {
            return Err(Error::NotHarmonic(a));
        }
    }
    Ok(TensorElement::new_unchecked(out))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LadderOp {
    Lambda,
    L1,
    TildeL2,
    L2,
}

impl LadderOp {
    pub fn apply(self, t: &TensorElement) -> Result<TensorElement> {
        match self {
            LadderOp::Lambda => Ok(lambda(t)),
            LadderOp::L1 => l1(t),
            LadderOp::TildeL2 => Ok(tilde_l2(t)),
            LadderOp::L2 => l2(t),
        }
    }

    /// The action the operator commutes with, on both source and target.
    pub fn action(self) -> Action {
        match self {
            LadderOp::Lambda | LadderOp::TildeL2 => Action::tensor(ActionKind::RHO1, ActionKind::Pi0r),
            LadderOp::L1 | LadderOp::L2 => Action::tensor(ActionKind::Pi0l, ActionKind::Pi0r),
        }
    }

    /// Eigenvalue on the `n`-th component predicted in closed form.
    pub fn predicted_eigenvalue(self, n: u32) -> Qi {
        let n = n as i64;
        let sign = if n % 2 == 1 { 1 } else { -1 };
        let lam = Qi::frac(sign, n);
        match self {
            LadderOp::Lambda => lam,
            LadderOp::TildeL2 => lam.pow(3),
            LadderOp::L1 => Qi::int((n == 1) as i64),
            LadderOp::L2 if n == 1 => Qi::one(),
            LadderOp::L2 => Qi::frac(sign, n * (n - 1)),
        }
    }
}

impl std::str::FromStr for LadderOp {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "lambda" => Ok(LadderOp::Lambda),
            "l1" => Ok(LadderOp::L1),
            "tildel2" => Ok(LadderOp::TildeL2),
            "l2" => Ok(LadderOp::L2),
            _ => Err(Error::Invalid(format!("unknown operator {s}"))),
        }
    }
}

/// `(z11 - y11)^(n-1)`.
pub fn generator(n: u32) -> TensorElement {
    let d = &Zh::var(Alphabet::Z.var(0, 0)) - &Zh::var(Alphabet::Zp.var(0, 0));
    TensorElement::new_unchecked(d.pow(n.saturating_sub(1)))
}

/// Images of `g` under short random words in the elementary matrices.
pub fn orbit_samples(g: &TensorElement, action: &Action, count: usize, seed: u64) -> Vec<TensorElement> {
    let xs = GlElement::all_elementary();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    let mut tries = 0;
    while out.len() < count && tries < 20 * count {
        tries += 1;
        let depth = rng.gen_range(1..=2);
        let mut f = g.as_zh().clone();
        for _ in 0..depth {
            f = act(action, &xs[rng.gen_range(0..xs.len())], &f);
        }
        if !f.is_zero() {
            out.push(TensorElement::new_unchecked(f));
        }
    }
    out
}

fn ratio_of(input: &Zh, output: &Zh) -> Option<Qi> {
    let (m, c) = input.numerator().terms().next()?;
    let scaled = output.mul_norm_pow(Alphabet::Z, input.den(Alphabet::Z) as i32 - output.den(Alphabet::Z) as i32);
    let d = if scaled.dens() == input.dens() { scaled.numerator().coeff(m) } else { Qi::zero() };
    Some(&d / c)
}

#[derive(Clone, Debug, PartialEq)]
pub struct EigenReport {
    pub is_eigen: bool,
    pub ratio: Qi,
    pub samples: usize,
}

/// Applies `op` to the generator of the `n`-th component and to five orbit
/// samples; reports whether every output is the same multiple of its input.
pub fn eigencheck(op: LadderOp, n: u32) -> Result<EigenReport> {
    let g = generator(n);
    let mut inputs = vec![g.clone()];
    inputs.extend(orbit_samples(&g, &op.action(), 5, 0x5eed + n as u64));
    let outs: Vec<TensorElement> = inputs.iter().map(|x| op.apply(x)).collect::<Result<_>>()?;
    let ratio = ratio_of(g.as_zh(), outs[0].as_zh()).unwrap_or_else(Qi::zero);
    let is_eigen = inputs.iter().zip(&outs).all(|(i, o)| o.as_zh() == &i.as_zh().scale(&ratio));
    Ok(EigenReport { is_eigen, ratio, samples: inputs.len() })
}

/// `L2(phi1 (x) phi2)(W1, W2) - L2(phi2 (x) phi1)(W2, W1)`, inputs in `Z`.
pub fn symmetry_check(phi1: &Zh, phi2: &Zh) -> Result<Zh> {
    let a = l2(&TensorElement::pure(phi1, phi2)?)?;
    let b = l2(&TensorElement::pure(phi2, phi1)?)?;
    Ok(a.as_zh() - &b.as_zh().swap_alphabets(Alphabet::Z, Alphabet::Zp))
}

/// A random harmonic homogeneous polynomial of degree `d` in alphabet `a`,
/// with small integer coefficients on the `t`-basis.
pub fn random_harmonic(rng: &mut impl Rng, a: Alphabet, d: u32) -> Zh {
    loop {
        let mut f = Zh::zero();
        for (two_m, two_n) in basis::weights(d) {
            let c = rng.gen_range(-2i64..=2);
            if c != 0 {
                let idx = TIndex { two_l: d, two_m, two_n, k: 0 };
                f = &f + &basis::basis_element(&idx, a).scale(&Qi::int(c));
            }
        }
        if !f.is_zero() {
            return f;
        }
    }
}

/// A random element of `H+ (x) H+` with both slot degrees at most `dmax`.
pub fn random_harmonic_pair(rng: &mut impl Rng, dmax: u32) -> TensorElement {
    let d1 = rng.gen_range(0..=dmax);
    let d2 = rng.gen_range(0..=dmax);
    let f = &random_harmonic(rng, Alphabet::Z, d1) * &random_harmonic(rng, Alphabet::Zp, d2);
    TensorElement::new_unchecked(f)
}

/// Operators whose equivariance can be checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EquivariantOp {
    M,
    IEmbed,
    Lambda,
    L2,
}

impl EquivariantOp {
    pub const ALL: [EquivariantOp; 4] = [EquivariantOp::M, EquivariantOp::IEmbed, EquivariantOp::Lambda, EquivariantOp::L2];

    pub fn name(self) -> &'static str {
        match self {
            EquivariantOp::M => "M",
            EquivariantOp::IEmbed => "I",
            EquivariantOp::Lambda => "lambda",
            EquivariantOp::L2 => "l2",
        }
    }

    fn actions(self) -> (Action, Action) {
        let pair = Action::tensor(ActionKind::Pi0l, ActionKind::Pi0r);
        let rho = Action::on_z(ActionKind::RHO1);
        match self {
            EquivariantOp::M => (pair, rho),
            EquivariantOp::IEmbed => (rho, pair),
            EquivariantOp::Lambda => {
                let a = Action::tensor(ActionKind::RHO1, ActionKind::Pi0r);
                (a.clone(), a)
            }
            EquivariantOp::L2 => (pair.clone(), pair),
        }
    }

    fn apply(self, f: &Zh) -> Result<Zh> {
        match self {
            EquivariantOp::M => Ok(m_multiply(&TensorElement::new_unchecked(f.clone()))),
            EquivariantOp::IEmbed => Ok(i_embed(f)?.into_zh()),
            EquivariantOp::Lambda => Ok(lambda(&TensorElement::new_unchecked(f.clone())).into_zh()),
            EquivariantOp::L2 => Ok(l2(&TensorElement::new_unchecked(f.clone()))?.into_zh()),
        }
    }

    /// Natural samples: the generators for the two-slot operators and
    /// `M` of them for `I`.
    pub fn sample(self, n: u32) -> Zh {
        let g = generator(n);
        match self {
            EquivariantOp::IEmbed => {
                let mut e = Zh::var(Alphabet::Z.var(0, 0)).pow(n - 1);
                if n > 1 {
                    e = &e + &Zh::var(Alphabet::Z.var(0, 1)).pow(n - 2).mul_norm_pow(Alphabet::Z, -1);
                }
                e
            }
            _ => g.into_zh(),
        }
    }
}

/// `op(X s) - X op(s)` for one elementary `X`.
pub fn equivariance(op: EquivariantOp, x: &GlElement, sample: &Zh) -> Result<Zh> {
    let (ain, aout) = op.actions();
    equivariance_residual(&|f| op.apply(f), &ain, &aout, x, sample)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_zh;

    fn t(s: &str) -> TensorElement {
        TensorElement::new(parse_zh(s).unwrap()).unwrap()
    }

    #[test]
    fn m_examples() {
        assert_eq!(m_multiply(&t("1")), Zh::one());
        assert_eq!(m_multiply(&t("z11*y22")), parse_zh("z11*z22").unwrap());
        assert!(m_multiply(&t("z11 - y11")).is_zero());
    }

    #[test]
    fn lambda_examples() {
        assert_eq!(lambda(&t("1")), t("1"));
        assert_eq!(lambda(&t("z11 - y11")), t("-1/2*z11 + 1/2*y11"));
        assert!(lambda(&t("1/N")).is_zero());
        assert_eq!(tilde_l2(&t("z11 - y11")), t("-1/8*z11 + 1/8*y11"));
        assert_eq!(tilde_l2(&t("(z11 - y11)^2")), t("(z11 - y11)^2").scale(&Qi::frac(1, 27)));
    }

    #[test]
    fn l1_examples() {
        assert_eq!(l1(&t("1")).unwrap(), t("1"));
        assert!(l1(&t("(z11 - y11)^2")).unwrap().is_zero());
        assert_eq!(l1(&t("z11")).unwrap(), t("1/2*z11 + 1/2*y11"));
    }

    #[test]
    fn l2_examples() {
        assert_eq!(l2(&t("1")).unwrap(), t("1"));
        assert_eq!(l2(&t("z11 - y11")).unwrap(), t("-1/2*z11 + 1/2*y11"));
        assert_eq!(l2(&t("(z11 - y11)^2")).unwrap(), t("(z11 - y11)^2").scale(&Qi::frac(1, 6)));
        assert!(l2(&t("z11*z22")).is_err());
    }

    #[test]
    fn eigen_small() {
        let r = eigencheck(LadderOp::Lambda, 3).unwrap();
        assert!(r.is_eigen);
        assert_eq!(r.ratio, Qi::frac(1, 3));
        assert_eq!(r.samples, 6);
        let r = eigencheck(LadderOp::L2, 1).unwrap();
        assert!(r.is_eigen && r.ratio.is_one());
    }

    #[test]
    fn symmetry_examples() {
        for (a, b) in [("1", "1"), ("z11", "1"), ("z11", "z22")] {
            let r = symmetry_check(&parse_zh(a).unwrap(), &parse_zh(b).unwrap()).unwrap();
            assert!(r.is_zero(), "{a} {b}: {r}");
        }
    }

    #[test]
    fn predicted_values() {
        assert_eq!(LadderOp::L2.predicted_eigenvalue(4), Qi::frac(-1, 12));
        assert_eq!(LadderOp::TildeL2.predicted_eigenvalue(2), Qi::frac(-1, 8));
    }
}
