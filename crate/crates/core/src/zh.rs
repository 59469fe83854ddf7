//! Elements of the ring of polynomials with `N` inverted, one `N` per alphabet.
//!
//! A value is `num / (N_Z^a N_Zp^b N_W^c)`. The canonical form keeps each
//! exponent minimal: `num` is not divisible by the `N` of any alphabet whose
//! exponent is positive.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::poly::{Alphabet, Monomial, Poly, Var};
use crate::qi::Qi;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Zh {
    num: Poly,
    den: [u32; 3],
}

impl Zh {
    pub fn new(num: Poly, den: [u32; 3]) -> Self {
        let mut z = Zh { num, den };
        z.canonicalize();
        z
    }

    fn canonicalize(&mut self) {
        if self.num.is_zero() {
            self.den = [0; 3];
            return;
        }
        for a in Alphabet::ALL {
            while self.den[a.index()] > 0 {
                match self.num.divide_by_n(a) {
                    Some(q) => {
                        self.num = q;
                        self.den[a.index()] -= 1;
                    }
                    None => break,
                }
            }
        }
    }

    pub fn zero() -> Self {
        Zh::default()
    }

    pub fn one() -> Self {
        Zh::from(Poly::one())
    }

    pub fn constant(c: Qi) -> Self {
        Zh::from(Poly::constant(c))
    }

    pub fn var(v: Var) -> Self {
        Zh::from(Poly::var(v))
    }

    /// `N^k` of alphabet `a`, for any integer `k`.
    pub fn norm_pow(a: Alphabet, k: i32) -> Self {
        if k >= 0 {
            Zh::from(Poly::norm(a).pow(k as u32))
        } else {
            let mut den = [0; 3];
            den[a.index()] = (-k) as u32;
            Zh { num: Poly::one(), den }
        }
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self, a: Alphabet) -> u32 {
        self.den[a.index()]
    }

    pub fn dens(&self) -> [u32; 3] {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den == [0; 3]
    }

    pub fn as_poly(&self) -> Option<&Poly> {
        self.is_polynomial().then_some(&self.num)
    }

    pub fn as_constant(&self) -> Option<Qi> {
        if self.is_polynomial() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn uses(&self, a: Alphabet) -> bool {
        self.den[a.index()] > 0 || self.num.uses(a)
    }

    pub fn scale(&self, c: &Qi) -> Zh {
        if c.is_zero() {
            return Zh::zero();
        }
        Zh { num: self.num.scale(c), den: self.den }
    }

    pub fn pow(&self, e: u32) -> Zh {
        let mut acc = Zh::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Multiply by `N_a^k` for any integer `k`.
    pub fn mul_norm_pow(&self, a: Alphabet, k: i32) -> Zh {
        if k >= 0 {
            self * &Zh::norm_pow(a, k)
        } else {
            let mut den = self.den;
            den[a.index()] += (-k) as u32;
            Zh::new(self.num.clone(), den)
        }
    }

    /// Multiplicative inverse, defined when the numerator is a nonzero constant
    /// times a product of norms.
    pub fn inv(&self) -> Result<Zh> {
        let mut num = self.num.clone();
        let mut pows = [0u32; 3];
        for a in Alphabet::ALL {
            while let Some(q) = num.divide_by_n(a) {
                if q.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                num = q;
                pows[a.index()] += 1;
            }
        }
        let c = num.as_constant().ok_or(Error::NotInZh)?;
        let c = c.inv()?;
        let mut out = Zh::constant(c);
        for a in Alphabet::ALL {
            out = out.mul_norm_pow(a, self.den[a.index()] as i32 - pows[a.index()] as i32);
        }
        Ok(out)
    }

    pub fn checked_div(&self, rhs: &Zh) -> Result<Zh> {
        Ok(self * &rhs.inv()?)
    }

    fn lift(&self, den: [u32; 3]) -> Poly {
        let mut p = self.num.clone();
        for a in Alphabet::ALL {
            let extra = den[a.index()] - self.den[a.index()];
            if extra > 0 {
                p = &p * &Poly::norm(a).pow(extra);
            }
        }
        p
    }

    fn common(&self, rhs: &Zh) -> [u32; 3] {
        let mut d = self.den;
        for i in 0..3 {
            d[i] = d[i].max(rhs.den[i]);
        }
        d
    }

    pub fn partial(&self, v: Var) -> Zh {
        let a = v.alpha;
        let d = self.den[a.index()];
        let dp = self.num.derivative(v);
        if d == 0 {
            return Zh::new(dp, self.den);
        }
        let n = Poly::norm(a);
        let dn = n.derivative(v);
        let num = &(&dp * &n) - &(&self.num * &dn).scale(&Qi::int(d as i64));
        let mut den = self.den;
        den[a.index()] += 1;
        Zh::new(num, den)
    }

    /// `4 (d11 d22 - d12 d21)` in alphabet `a`.
    pub fn laplacian(&self, a: Alphabet) -> Zh {
        let [v11, v12, v21, v22] = a.vars();
        let t = &self.partial(v11).partial(v22) - &self.partial(v12).partial(v21);
        t.scale(&Qi::int(4))
    }

    pub fn is_harmonic(&self, a: Alphabet) -> bool {
        self.laplacian(a).is_zero()
    }

    /// Euler operator `sum x_ij d_ij` in alphabet `a`.
    pub fn deg(&self, a: Alphabet) -> Zh {
        let shift = 2 * self.den[a.index()] as i64;
        let num = Poly::from_terms(
            self.num
                .terms()
                .map(|(m, c)| (*m, c * &Qi::int(m.degree_in(a) as i64 - shift))),
        );
        Zh::new(num, self.den)
    }

    /// `f + sum x_ij d_ij f`.
    pub fn deg_tilde(&self, a: Alphabet) -> Zh {
        &self.deg(a) + self
    }

    /// Homogeneous degree in alphabet `a`, when `self` is homogeneous there.
    pub fn homogeneous_degree(&self, a: Alphabet) -> Option<i64> {
        let g = self.num.graded_in(a);
        if g.len() != 1 {
            return None;
        }
        let d = *g.keys().next().unwrap() as i64;
        Some(d - 2 * self.den[a.index()] as i64)
    }

    /// Pieces of fixed homogeneous degree in alphabet `a`.
    pub fn graded(&self, a: Alphabet) -> Vec<(i64, Zh)> {
        let shift = 2 * self.den[a.index()] as i64;
        self.num
            .graded_in(a)
            .into_iter()
            .map(|(d, p)| (d as i64 - shift, Zh::new(p, self.den)))
            .collect()
    }

    /// `f(X) -> f(X^{-1})` in alphabet `a`, using `X^{-1} = X^+ / N`.
    pub fn invert(&self, a: Alphabet) -> Zh {
        let o = 4 * a.index();
        let mut top = 0u32;
        for (m, _) in self.num.terms() {
            top = top.max(m.degree_in(a));
        }
        let mut num = Poly::zero();
        let n = Poly::norm(a);
        for (m, c) in self.num.terms() {
            let mut e = *m.exps();
            e.swap(o, o + 3);
            let sign = (e[o + 1] + e[o + 2]) % 2 == 1;
            let c = if sign { -c } else { c.clone() };
            let t = Poly::term(Monomial::from_exps(e), c);
            num = &num + &(&t * &n.pow(top - m.degree_in(a)));
        }
        let mut den = self.den;
        den[a.index()] = top;
        Zh::new(num, den).mul_norm_pow(a, self.den[a.index()] as i32)
    }

    pub fn rename(&self, from: Alphabet, to: Alphabet) -> Zh {
        if from == to {
            return self.clone();
        }
        let mut den = self.den;
        den[to.index()] += den[from.index()];
        den[from.index()] = 0;
        Zh::new(self.num.rename(from, to), den)
    }

    pub fn swap_alphabets(&self, a: Alphabet, b: Alphabet) -> Zh {
        let mut den = self.den;
        den.swap(a.index(), b.index());
        Zh { num: self.num.swap_alphabets(a, b), den }
    }

    /// Substitute a `Zh` for every variable. Fails when a norm that sits in
    /// the denominator maps to something that is not a unit of the ring.
    pub fn substitute(&self, rule: &dyn Fn(Var) -> Zh) -> Result<Zh> {
        let mut acc = Zh::zero();
        let mut cache = std::collections::BTreeMap::new();
        for (m, c) in self.num.terms() {
            let mut t = Zh::constant(c.clone());
            for (s, &p) in m.exps().iter().enumerate() {
                if p > 0 {
                    let f = cache
                        .entry((s, p))
                        .or_insert_with(|| rule(Var::from_slot(s)).pow(p as u32));
                    t = &t * f;
                }
            }
            acc = &acc + &t;
        }
        for a in Alphabet::ALL {
            let d = self.den[a.index()];
            if d > 0 {
                let [v11, v12, v21, v22] = a.vars().map(rule);
                let n = &(&v11 * &v22) - &(&v12 * &v21);
                acc = &acc * &n.inv()?.pow(d);
            }
        }
        Ok(acc)
    }

    pub fn eval(&self, point: &dyn Fn(Var) -> Qi) -> Result<Qi> {
        let mut v = self.num.eval(point);
        for a in Alphabet::ALL {
            let d = self.den[a.index()];
            if d > 0 {
                let n = Poly::norm(a).eval(point);
                if n.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                v = &v / &n.pow(d);
            }
        }
        Ok(v)
    }

    pub fn eval_c64(&self, point: &dyn Fn(Var) -> Complex64) -> Complex64 {
        let mut v = self.num.eval_c64(point);
        for a in Alphabet::ALL {
            let d = self.den[a.index()];
            if d > 0 {
                v /= Poly::norm(a).eval_c64(point).powu(d);
            }
        }
        v
    }
}

impl From<Poly> for Zh {
    fn from(p: Poly) -> Self {
        Zh { num: p, den: [0; 3] }
    }
}

impl From<Qi> for Zh {
    fn from(c: Qi) -> Self {
        Zh::constant(c)
    }
}

impl Add for &Zh {
    type Output = Zh;
    fn add(self, rhs: &Zh) -> Zh {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        if self.den == rhs.den {
            return Zh::new(&self.num + &rhs.num, self.den);
        }
        let d = self.common(rhs);
        Zh::new(&self.lift(d) + &rhs.lift(d), d)
    }
}

impl Sub for &Zh {
    type Output = Zh;
    fn sub(self, rhs: &Zh) -> Zh {
        self + &(-rhs)
    }
}

impl Mul for &Zh {
    type Output = Zh;
    fn mul(self, rhs: &Zh) -> Zh {
        if self.is_zero() || rhs.is_zero() {
            return Zh::zero();
        }
        let mut den = self.den;
        for i in 0..3 {
            den[i] += rhs.den[i];
        }
        let num = &self.num * &rhs.num;
        if den == [0; 3] {
            return Zh { num, den };
        }
        Zh::new(num, den)
    }
}

impl Neg for &Zh {
    type Output = Zh;
    fn neg(self) -> Zh {
        Zh { num: -&self.num, den: self.den }
    }
}

impl Neg for Zh {
    type Output = Zh;
    fn neg(self) -> Zh {
        -&self
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Zh {
            type Output = Zh;
            fn $m(self, rhs: Zh) -> Zh { (&self).$m(&rhs) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

/// Prints `<poly>` or `<poly> / N^d`, with `Ny`, `Nw` for the other alphabets.
impl fmt::Display for Zh {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            return write!(f, "{}", self.num);
        }
        if self.num.len() > 1 {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        for a in Alphabet::ALL {
            match self.den[a.index()] {
                0 => {}
                1 => write!(f, " / {}", a.norm_name())?,
                d => write!(f, " / {}^{d}", a.norm_name())?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Zh {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_zh;

    fn p(s: &str) -> Zh {
        parse_zh(s).unwrap()
    }

    fn z(r: usize, c: usize) -> Zh {
        Zh::var(Alphabet::Z.var(r, c))
    }

    #[test]
    fn cancellation() {
        let n = Zh::norm_pow(Alphabet::Z, 1);
        assert_eq!(&n * &Zh::norm_pow(Alphabet::Z, -1), Zh::one());
        assert_eq!(p("(z11*z22 - z12*z21) / N^2"), Zh::norm_pow(Alphabet::Z, -1));
        assert_eq!(p("(z11 + z22)*(z11 - z22)"), p("z11^2 - z22^2"));
    }

    #[test]
    fn quotient_rule() {
        // d11 (1/N) = -z22 / N^2 by d(N^-1) = -N^-2 dN, dN/dz11 = z22
        let got = Zh::norm_pow(Alphabet::Z, -1).partial(Alphabet::Z.var(0, 0));
        assert_eq!(got, p("-z22 / N^2"));
        assert_eq!(p("z11^2").partial(Alphabet::Z.var(0, 0)), p("2*z11"));
        assert!(z(0, 0).partial(Alphabet::Z.var(0, 1)).is_zero());
    }

    #[test]
    fn laplacian_examples() {
        assert!(p("z11*z22 + z12*z21").laplacian(Alphabet::Z).is_zero());
        assert_eq!(Zh::norm_pow(Alphabet::Z, 1).laplacian(Alphabet::Z), Zh::constant(Qi::int(8)));
        // box N^k = 4k(k+1) N^(k-1)
        for k in -3..4 {
            let got = Zh::norm_pow(Alphabet::Z, k).laplacian(Alphabet::Z);
            let want = Zh::norm_pow(Alphabet::Z, k - 1).scale(&Qi::int(4 * k as i64 * (k as i64 + 1)));
            assert_eq!(got, want, "k = {k}");
        }
    }

    #[test]
    fn degree_tilde() {
        assert_eq!(Zh::one().deg_tilde(Alphabet::Z), Zh::one());
        assert_eq!(p("z11^2").deg_tilde(Alphabet::Z), p("3*z11^2"));
        assert_eq!(p("1/N").deg_tilde(Alphabet::Z), p("-1/N"));
    }

    #[test]
    fn inversion() {
        assert_eq!(z(0, 0).invert(Alphabet::Z), p("z22 / N"));
        assert_eq!(Zh::norm_pow(Alphabet::Z, 1).invert(Alphabet::Z), p("1/N"));
        let f = p("z12^3 + 1/N");
        assert_eq!(f.invert(Alphabet::Z).invert(Alphabet::Z), f);
    }

    #[test]
    fn substitution_rejects_non_units() {
        let f = p("1/N");
        let bad = f.substitute(&|v| if v.idx == 0 { &Zh::var(v) + &Zh::one() } else { Zh::var(v) });
        assert_eq!(bad, Err(Error::NotInZh));
        let swap = f.substitute(&|v| Zh::var(Var { alpha: Alphabet::W, idx: v.idx })).unwrap();
        assert_eq!(swap, p("1/Nw"));
    }

    #[test]
    fn evaluation() {
        let id = |v: Var| if v.idx == 0 || v.idx == 3 { Qi::one() } else { Qi::zero() };
        assert_eq!(Zh::norm_pow(Alphabet::Z, 1).eval(&id).unwrap(), Qi::one());
        let d23 = |v: Var| match v.idx {
            0 => Qi::int(2),
            3 => Qi::int(3),
            _ => Qi::zero(),
        };
        assert_eq!(p("1/N").eval(&d23).unwrap(), Qi::frac(1, 6));
        let sing = |_: Var| Qi::one();
        assert_eq!(p("1/N").eval(&sing), Err(Error::DivisionByZero));
    }

    #[test]
    fn display_round_trip() {
        for s in ["(z11 + 1/2i*z22) / N^2", "-z11*y22 / N / Ny^3", "w11 - (1/2-i)*w22"] {
            let f = p(s);
            assert_eq!(p(&f.to_string()), f);
        }
    }
}
