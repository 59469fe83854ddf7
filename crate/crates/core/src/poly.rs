//! Sparse polynomials in up to twelve variables: three alphabets of four
//! matrix entries each. Terms are kept in a `BTreeMap` under graded-lex order.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::qi::Qi;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Alphabet {
    Z,
    Zp,
    W,
}

impl Alphabet {
    pub const ALL: [Alphabet; 3] = [Alphabet::Z, Alphabet::Zp, Alphabet::W];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn letter(self) -> char {
        match self {
            Alphabet::Z => 'z',
            Alphabet::Zp => 'y',
            Alphabet::W => 'w',
        }
    }

    /// Name of the norm form in the text format: `N`, `Ny`, `Nw`.
    pub fn norm_name(self) -> &'static str {
        match self {
            Alphabet::Z => "N",
            Alphabet::Zp => "Ny",
            Alphabet::W => "Nw",
        }
    }

    pub fn var(self, row: usize, col: usize) -> Var {
        debug_assert!(row < 2 && col < 2);
        Var { alpha: self, idx: (2 * row + col) as u8 }
    }

    pub fn vars(self) -> [Var; 4] {
        [self.var(0, 0), self.var(0, 1), self.var(1, 0), self.var(1, 1)]
    }
}

/// A matrix entry `x_{row+1, col+1}` of one alphabet. `idx = 2*row + col`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var {
    pub alpha: Alphabet,
    pub idx: u8,
}

impl Var {
    pub fn slot(self) -> usize {
        4 * self.alpha.index() + self.idx as usize
    }

    pub fn from_slot(s: usize) -> Var {
        Var { alpha: Alphabet::ALL[s / 4], idx: (s % 4) as u8 }
    }

    pub fn row(self) -> usize {
        self.idx as usize / 2
    }

    pub fn col(self) -> usize {
        self.idx as usize % 2
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}", self.alpha.letter(), self.row() + 1, self.col() + 1)
    }
}

/// Exponent vector. Ordering is graded lexicographic with `z11` as the most
/// significant variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    deg: u16,
    e: [u16; 12],
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn from_exps(e: [u16; 12]) -> Self {
        Monomial { deg: e.iter().sum(), e }
    }

    pub fn var(v: Var, p: u16) -> Self {
        let mut e = [0; 12];
        e[v.slot()] = p;
        Self::from_exps(e)
    }

    pub fn exps(&self) -> &[u16; 12] {
        &self.e
    }

    pub fn exp(&self, v: Var) -> u16 {
        self.e[v.slot()]
    }

    pub fn degree(&self) -> u32 {
        self.deg as u32
    }

    pub fn alpha_exps(&self, a: Alphabet) -> [u16; 4] {
        let o = 4 * a.index();
        [self.e[o], self.e[o + 1], self.e[o + 2], self.e[o + 3]]
    }

    pub fn degree_in(&self, a: Alphabet) -> u32 {
        self.alpha_exps(a).iter().map(|&x| x as u32).sum()
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        let mut e = self.e;
        for (x, y) in e.iter_mut().zip(o.e.iter()) {
            *x += *y;
        }
        Monomial { deg: self.deg + o.deg, e }
    }

    /// `self / o` if `o` divides `self`.
    pub fn div(&self, o: &Monomial) -> Option<Monomial> {
        let mut e = self.e;
        for (x, y) in e.iter_mut().zip(o.e.iter()) {
            *x = x.checked_sub(*y)?;
        }
        Some(Monomial { deg: self.deg - o.deg, e })
    }

    /// Split into the part in alphabet `a` and the rest.
    pub fn split(&self, a: Alphabet) -> (Monomial, Monomial) {
        let mut inside = [0; 12];
        let mut rest = self.e;
        for s in 4 * a.index()..4 * a.index() + 4 {
            inside[s] = rest[s];
            rest[s] = 0;
        }
        (Monomial::from_exps(inside), Monomial::from_exps(rest))
    }

    pub fn uses(&self, a: Alphabet) -> bool {
        self.degree_in(a) > 0
    }

    fn with_exp(&self, v: Var, p: u16) -> Monomial {
        let mut e = self.e;
        e[v.slot()] = p;
        Monomial::from_exps(e)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (s, &p) in self.e.iter().enumerate() {
            if p == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", Var::from_slot(s))?;
            if p > 1 {
                write!(f, "^{p}")?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, Qi>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Self::constant(Qi::one())
    }

    pub fn constant(c: Qi) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn term(m: Monomial, c: Qi) -> Self {
        let mut p = Poly::zero();
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn var(v: Var) -> Self {
        Self::term(Monomial::var(v, 1), Qi::one())
    }

    /// `x11 x22 - x12 x21` in alphabet `a`.
    pub fn norm(a: Alphabet) -> Self {
        let [x11, x12, x21, x22] = a.vars().map(Poly::var);
        &(&x11 * &x22) - &(&x12 * &x21)
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Qi)>>(it: I) -> Self {
        let mut p = Poly::zero();
        for (m, c) in it {
            p.add_term(m, &c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: &Qi) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Qi)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Monomial, Qi> {
        self.terms
    }

    pub fn coeff(&self, m: &Monomial) -> Qi {
        self.terms.get(m).cloned().unwrap_or_else(Qi::zero)
    }

    pub fn as_constant(&self) -> Option<Qi> {
        match self.terms.len() {
            0 => Some(Qi::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                (m.degree() == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn scale(&self, c: &Qi) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Poly {
        Poly { terms: self.terms.iter().map(|(k, x)| (k.mul(m), x.clone())).collect() }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn degree_in(&self, a: Alphabet) -> Option<u32> {
        self.terms.keys().map(|m| m.degree_in(a)).max()
    }

    pub fn uses(&self, a: Alphabet) -> bool {
        self.terms.keys().any(|m| m.uses(a))
    }

    pub fn derivative(&self, v: Var) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let p = m.exp(v);
            if p > 0 {
                out.add_term(m.with_exp(v, p - 1), &(c * &Qi::int(p as i64)));
            }
        }
        out
    }

    /// Homogeneous pieces by degree in alphabet `a`.
    pub fn graded_in(&self, a: Alphabet) -> BTreeMap<u32, Poly> {
        let mut out: BTreeMap<u32, Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.degree_in(a)).or_default().terms.insert(*m, c.clone());
        }
        out
    }

    /// Group terms by their monomial in alphabet `a`; values carry the remaining variables.
    pub fn split_by(&self, a: Alphabet) -> BTreeMap<Monomial, Poly> {
        let mut out: BTreeMap<Monomial, Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (inside, rest) = m.split(a);
            out.entry(inside).or_default().terms.insert(rest, c.clone());
        }
        out
    }

    /// Rename alphabet `from` to `to` and `to` to `from` simultaneously.
    pub fn swap_alphabets(&self, a: Alphabet, b: Alphabet) -> Poly {
        if a == b {
            return self.clone();
        }
        let (oa, ob) = (4 * a.index(), 4 * b.index());
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = m.e;
                    for i in 0..4 {
                        e.swap(oa + i, ob + i);
                    }
                    (Monomial::from_exps(e), c.clone())
                })
                .collect(),
        }
    }

    /// Move alphabet `from` onto `to`, merging with whatever `to` already holds.
    pub fn rename(&self, from: Alphabet, to: Alphabet) -> Poly {
        if from == to {
            return self.clone();
        }
        let (of, ot) = (4 * from.index(), 4 * to.index());
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut e = m.e;
            for i in 0..4 {
                e[ot + i] += e[of + i];
                e[of + i] = 0;
            }
            out.add_term(Monomial::from_exps(e), c);
        }
        out
    }

    /// Replace every variable by a polynomial.
    pub fn substitute(&self, rule: &dyn Fn(Var) -> Poly) -> Poly {
        let mut cache: BTreeMap<(usize, u16), Poly> = BTreeMap::new();
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut t = Poly::constant(c.clone());
            for (s, &p) in m.e.iter().enumerate() {
                if p == 0 {
                    continue;
                }
                let f = cache
                    .entry((s, p))
                    .or_insert_with(|| rule(Var::from_slot(s)).pow(p as u32));
                t = &t * f;
            }
            out = &out + &t;
        }
        out
    }

    pub fn eval(&self, point: &dyn Fn(Var) -> Qi) -> Qi {
        let vals: Vec<Qi> = (0..12).map(|s| point(Var::from_slot(s))).collect();
        let mut acc = Qi::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (s, &p) in m.e.iter().enumerate() {
                if p > 0 {
                    t = &t * &vals[s].pow(p as u32);
                }
            }
            acc += &t;
        }
        acc
    }

    pub fn eval_c64(&self, point: &dyn Fn(Var) -> Complex64) -> Complex64 {
        let vals: Vec<Complex64> = (0..12).map(|s| point(Var::from_slot(s))).collect();
        let mut acc = Complex64::new(0.0, 0.0);
        for (m, c) in &self.terms {
            let mut t = c.to_c64();
            for (s, &p) in m.e.iter().enumerate() {
                if p > 0 {
                    t *= vals[s].powu(p as u32);
                }
            }
            acc += t;
        }
        acc
    }

    /// Exact division by `N` of alphabet `a`, by reduction with leading term
    /// `x11 x22` in lex order. `None` when the remainder is nonzero.
    pub fn divide_by_n(&self, a: Alphabet) -> Option<Poly> {
        let [v11, v12, v21, v22] = a.vars();
        let lead = Monomial::var(v11, 1).mul(&Monomial::var(v22, 1));
        let swap = Monomial::var(v12, 1).mul(&Monomial::var(v21, 1));
        let mut work = self.terms.clone();
        let mut q = Poly::zero();
        // Each rewrite produces a strictly smaller monomial, so a popped key
        // never reappears.
        while let Some((m, c)) = work.pop_last() {
            let r = m.div(&lead)?;
            let next = r.mul(&swap);
            q.terms.insert(r, c.clone());
            use std::collections::btree_map::Entry;
            match work.entry(next) {
                Entry::Vacant(v) => {
                    v.insert(c);
                }
                Entry::Occupied(mut o) => {
                    *o.get_mut() += &c;
                    if o.get().is_zero() {
                        o.remove();
                    }
                }
            }
        }
        Some(q)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let (big, small) = if self.len() >= rhs.len() { (self, rhs) } else { (rhs, self) };
        let mut out = big.clone();
        for (m, c) in &small.terms {
            out.add_term(*m, c);
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, &-c);
        }
        out
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), &(c1 * c2));
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly { (&self).$m(&rhs) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.leading_negative();
            let mag = if neg { -c } else { c.clone() };
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let constant = m.degree() == 0;
            if mag.is_one() {
                if constant {
                    write!(f, "1")?;
                } else {
                    write!(f, "{m}")?;
                }
            } else {
                let cs = if mag.is_compound() { format!("({mag})") } else { mag.to_string() };
                if constant {
                    write!(f, "{cs}")?;
                } else {
                    write!(f, "{cs}*{m}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(r: usize, c: usize) -> Poly {
        Poly::var(Alphabet::Z.var(r, c))
    }

    #[test]
    fn divide_examples() {
        let n = Poly::norm(Alphabet::Z);
        assert_eq!(n.pow(2).divide_by_n(Alphabet::Z), Some(n.clone()));
        assert_eq!(z(0, 0).divide_by_n(Alphabet::Z), None);
        let p = &(&z(0, 0).pow(2) * &z(1, 1)) - &(&(&z(0, 0) * &z(0, 1)) * &z(1, 0));
        let q = p.divide_by_n(Alphabet::Z).unwrap();
        assert_eq!(&q * &n, p);
        assert_eq!(q, z(0, 0));
    }

    #[test]
    fn divide_mixed_alphabets() {
        let y = Poly::var(Alphabet::Zp.var(0, 1));
        let p = &(&Poly::norm(Alphabet::Z) * &y) * &Poly::norm(Alphabet::W);
        let q = p.divide_by_n(Alphabet::W).unwrap();
        assert_eq!(q, &Poly::norm(Alphabet::Z) * &y);
        assert!(y.divide_by_n(Alphabet::Z).is_none());
        assert_eq!(Poly::zero().divide_by_n(Alphabet::Z), Some(Poly::zero()));
    }

    #[test]
    fn printing() {
        let p = &(&z(0, 0).pow(2) * &z(0, 1)).scale(&Qi::from_parts(3, 2, 1, 2)) - &Poly::one();
        assert_eq!(p.to_string(), "(3/2+1/2i)*z11^2*z12 - 1");
        let y = Poly::var(Alphabet::Zp.var(1, 0)).scale(&Qi::frac(-1, 3));
        assert_eq!(y.to_string(), "-1/3*y21");
        assert_eq!(Poly::var(Alphabet::W.var(0, 0)).to_string(), "w11");
    }

    #[test]
    fn graded_lex_order() {
        let a = Monomial::var(Alphabet::Z.var(0, 0), 1);
        let b = Monomial::var(Alphabet::Z.var(1, 1), 2);
        let c = Monomial::var(Alphabet::Z.var(0, 1), 2);
        assert!(a < b);
        assert!(b < c);
    }

    #[test]
    fn rename_and_swap() {
        let p = &z(0, 0) * &Poly::var(Alphabet::Zp.var(1, 1));
        let s = p.swap_alphabets(Alphabet::Z, Alphabet::Zp);
        assert_eq!(s.to_string(), "z22*y11");
        assert_eq!(p.rename(Alphabet::Zp, Alphabet::Z), &z(0, 0) * &z(1, 1));
    }
}
