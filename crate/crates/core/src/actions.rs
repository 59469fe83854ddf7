//! Infinitesimal actions of `gl(2, H_C) = gl(4, C)` on functions of `Z`.
//!
//! Every action here is a member of the family
//! `f -> f((aZ+b)(cZ+d)^-1) N(cZ+d)^-p N(a' - Z c')^-q` with
//! `(a b; c d) = h^-1` and `(a' b'; c' d') = h`. Differentiating at the
//! identity along `X = (A B; C D)` gives
//!
//! ```text
//! A: -tr(A Z df) - q tr(A) f        B: -tr(B df)
//! C:  tr(C Z df Z) + (p+q) tr(C Z) f D:  tr(D df Z) + p tr(D) f
//! ```
//!
//! `varpi(m)` has `(p, q) = (m, 1)`, `pi0l` has `(1, 0)`, `pi0r` has `(0, 1)`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;

use crate::basis::{self, classify_lk, ComponentLabel, Scheme, Subspace, TIndex};
use crate::error::Result;
use crate::mat2::Mat2;
use crate::poly::Alphabet;
use crate::qi::Qi;
use crate::zh::Zh;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GlElement {
    pub m: [[Qi; 4]; 4],
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Block {
    A,
    B,
    C,
    D,
}

impl GlElement {
    pub fn zero() -> Self {
        GlElement { m: std::array::from_fn(|_| std::array::from_fn(|_| Qi::zero())) }
    }

    pub fn identity() -> Self {
        let mut g = Self::zero();
        for i in 0..4 {
            g.m[i][i] = Qi::one();
        }
        g
    }

    /// The single-entry matrix `E_{ij}`, `0 <= i, j < 4`.
    pub fn elementary(i: usize, j: usize) -> Self {
        let mut g = Self::zero();
        g.m[i][j] = Qi::one();
        g
    }

    /// All sixteen `E_{ij}` in row-major order.
    pub fn all_elementary() -> Vec<GlElement> {
        (0..16).map(|k| Self::elementary(k / 4, k % 4)).collect()
    }

    pub fn from_blocks(a: &Mat2<Qi>, b: &Mat2<Qi>, c: &Mat2<Qi>, d: &Mat2<Qi>) -> Self {
        let mut g = Self::zero();
        for r in 0..2 {
            for s in 0..2 {
                g.m[r][s] = a.at(r, s).clone();
                g.m[r][s + 2] = b.at(r, s).clone();
                g.m[r + 2][s] = c.at(r, s).clone();
                g.m[r + 2][s + 2] = d.at(r, s).clone();
            }
        }
        g
    }

    pub fn block(&self, which: Block) -> Mat2<Qi> {
        let (r0, c0) = match which {
            Block::A => (0, 0),
            Block::B => (0, 2),
            Block::C => (2, 0),
            Block::D => (2, 2),
        };
        Mat2::new(
            self.m[r0][c0].clone(),
            self.m[r0][c0 + 1].clone(),
            self.m[r0 + 1][c0].clone(),
            self.m[r0 + 1][c0 + 1].clone(),
        )
    }

    /// The block holding the single nonzero entry of an elementary matrix.
    pub fn only_block(&self) -> Option<Block> {
        let nz: Vec<Block> = [Block::A, Block::B, Block::C, Block::D]
            .into_iter()
            .filter(|&b| !self.block(b).is_zero())
            .collect();
        (nz.len() == 1).then(|| nz[0])
    }

    pub fn mul(&self, o: &GlElement) -> GlElement {
        let mut g = Self::zero();
        for i in 0..4 {
            for j in 0..4 {
                let mut s = Qi::zero();
                for k in 0..4 {
                    s += &(&self.m[i][k] * &o.m[k][j]);
                }
                g.m[i][j] = s;
            }
        }
        g
    }

    pub fn add(&self, o: &GlElement) -> GlElement {
        let mut g = self.clone();
        for i in 0..4 {
            for j in 0..4 {
                g.m[i][j] += &o.m[i][j];
            }
        }
        g
    }

    pub fn scale(&self, c: &Qi) -> GlElement {
        let mut g = self.clone();
        for row in g.m.iter_mut() {
            for x in row.iter_mut() {
                *x = &*x * c;
            }
        }
        g
    }

    pub fn bracket(&self, o: &GlElement) -> GlElement {
        self.mul(o).add(&o.mul(self).scale(&Qi::int(-1)))
    }

    pub fn trace(&self) -> Qi {
        (0..4).fold(Qi::zero(), |acc, i| acc + &self.m[i][i])
    }

    pub fn is_zero(&self) -> bool {
        self.m.iter().flatten().all(Qi::is_zero)
    }
}

impl fmt::Display for GlElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .m
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "[{}]", rows.join("; "))
    }
}

impl fmt::Debug for GlElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ActionKind {
    /// `varpi(1)` is `rho1`.
    Varpi(u32),
    Pi0l,
    Pi0r,
}

impl ActionKind {
    pub const RHO1: ActionKind = ActionKind::Varpi(1);

    /// The exponents `(p, q)` of `N(cZ+d)^-p N(a' - Z c')^-q`.
    pub fn weights(self) -> (i64, i64) {
        match self {
            ActionKind::Varpi(m) => (m as i64, 1),
            ActionKind::Pi0l => (1, 0),
            ActionKind::Pi0r => (0, 1),
        }
    }
}

impl fmt::Display for ActionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ActionKind::Varpi(1) => write!(f, "rho1"),
            ActionKind::Varpi(m) => write!(f, "varpi{m}"),
            ActionKind::Pi0l => write!(f, "pi0l"),
            ActionKind::Pi0r => write!(f, "pi0r"),
        }
    }
}

/// One kind per alphabet; acts on products by the Leibniz rule.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Action(pub Vec<(ActionKind, Alphabet)>);

impl Action {
    pub fn on_z(kind: ActionKind) -> Self {
        Action(vec![(kind, Alphabet::Z)])
    }

    /// `k1` on `Z` and `k2` on `Zp`.
    pub fn tensor(k1: ActionKind, k2: ActionKind) -> Self {
        Action(vec![(k1, Alphabet::Z), (k2, Alphabet::Zp)])
    }
}

impl fmt::Display for Action {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(k, _)| k.to_string()).collect();
        write!(f, "{}", parts.join("(x)"))
    }
}

fn tr_prod(x: &Mat2<Zh>, y: &Mat2<Zh>) -> Zh {
    let mut acc = Zh::zero();
    for i in 0..2 {
        for k in 0..2 {
            acc = &acc + &(x.at(i, k) * y.at(k, i));
        }
    }
    acc
}

/// Action of `X` with weights `(p, q)` on the variables of alphabet `a`.
pub fn act_weighted(p: i64, q: i64, a: Alphabet, x: &GlElement, f: &Zh) -> Zh {
    let z = Mat2::<Zh>::of(a);
    let df = Mat2::<Zh>::dee(f, a);
    let mut acc = Zh::zero();
    let blk = |b| Mat2::<Zh>::from_qi(&x.block(b));
    let a_ = x.block(Block::A);
    if !a_.is_zero() {
        let am = blk(Block::A);
        acc = &acc - &tr_prod(&(&am * &z), &df);
        acc = &acc - &f.scale(&(&a_.trace() * &Qi::int(q)));
    }
    let b_ = x.block(Block::B);
    if !b_.is_zero() {
        acc = &acc - &tr_prod(&blk(Block::B), &df);
    }
    let c_ = x.block(Block::C);
    if !c_.is_zero() {
        let cm = blk(Block::C);
        let zdz = &(&z * &df) * &z;
        acc = &acc + &tr_prod(&cm, &zdz);
        let tcz = tr_prod(&cm, &z);
        acc = &acc + &(&tcz * f).scale(&Qi::int(p + q));
    }
    let d_ = x.block(Block::D);
    if !d_.is_zero() {
        let dm = blk(Block::D);
        acc = &acc + &tr_prod(&dm, &(&df * &z));
        acc = &acc + &f.scale(&(&d_.trace() * &Qi::int(p)));
    }
    acc
}

pub fn act(action: &Action, x: &GlElement, f: &Zh) -> Zh {
    let mut acc = Zh::zero();
    for &(kind, a) in &action.0 {
        let (p, q) = kind.weights();
        acc = &acc + &act_weighted(p, q, a, x, f);
    }
    acc
}

/// `X(Y f) - Y(X f) - [X, Y] f`; zero for a Lie-algebra homomorphism.
pub fn commutator_check(action: &Action, x: &GlElement, y: &GlElement, f: &Zh) -> Zh {
    let xy = act(action, x, &act(action, y, f));
    let yx = act(action, y, &act(action, x, f));
    &(&xy - &yx) - &act(action, &x.bracket(y), f)
}

/// `op(X . s) - X . op(s)`.
pub fn equivariance_residual(
    op: &dyn Fn(&Zh) -> Result<Zh>,
    action_in: &Action,
    action_out: &Action,
    x: &GlElement,
    sample: &Zh,
) -> Result<Zh> {
    let lhs = op(&act(action_in, x, sample))?;
    let rhs = act(action_out, x, &op(sample)?);
    Ok(&lhs - &rhs)
}

/// The group element `(0 1; 1 0)` under `varpi(m)`: `f(Z^-1) / N^(m+1)`.
pub fn varpi_inversion(f: &Zh, m: u32) -> Zh {
    f.invert(Alphabet::Z).mul_norm_pow(Alphabet::Z, -(m as i32) - 1)
}

// ---- structural identities ---------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub two_m: i32,
    pub two_n: i32,
    pub pass: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct StructuralReport {
    pub two_l: u32,
    pub k: i32,
    pub checks: Vec<IdentityCheck>,
}

impl StructuralReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

fn mat_harmonic(m: &Mat2<Zh>) -> bool {
    m.0.iter().all(|x| x.is_harmonic(Alphabet::Z))
}

/// Checks, for every `f = t^l_{n,m}` and `g = f N^k`:
/// `df N = 2l Z^+ f - Z^+ (d^+ f) Z^+`;
/// `box(Z^+ f) = Z^+ box f + 4 df`;
/// `box(N g) = N box g + 4 (deg + 2) g`;
/// the split of `Z^+ f` into harmonic pieces;
/// the `B` and `C` action formulas on `g`;
/// `Z df Z + Z f = (Z df + f) Z`; `tr(Z dg + g) = (deg + 2) g`.
pub fn verify_structural_identities(two_l: u32, k: i32) -> StructuralReport {
    let a = Alphabet::Z;
    let z = Mat2::<Zh>::of(a);
    let zp = z.conjugate();
    let n = Zh::norm_pow(a, 1);
    let l2 = two_l as i64;
    let inv = Qi::frac(1, l2 + 1);
    let nk = Zh::norm_pow(a, k);
    let nk1 = Zh::norm_pow(a, k - 1);
    let nkp = Zh::norm_pow(a, k + 1);
    let mut checks = Vec::new();
    for (two_m, two_n) in basis::weights(two_l) {
        let f = TIndex { two_l, two_m, two_n, k: 0 }.element();
        let g = &f * &nk;
        let df = Mat2::<Zh>::dee(&f, a);
        let dpf = Mat2::<Zh>::dee_plus(&f, a);
        let zf = z.mul_zh(&f);
        let zpf = zp.mul_zh(&f);
        let zp_dp_zp = &(&zp * &dpf) * &zp;
        let mut push = |name, pass| checks.push(IdentityCheck { name, two_m, two_n, pass });

        let lhs = df.mul_zh(&n);
        let rhs = &zp.mul_zh(&f.scale(&Qi::int(l2))) - &zp_dp_zp;
        push("dN", lhs == rhs);

        let lhs = zpf.laplacian(a);
        let rhs = &zp.mul_zh(&f.laplacian(a)) + &df.map(|x| x.scale(&Qi::int(4)));
        push("box-zplus", lhs == rhs);

        let lhs = (&n * &g).laplacian(a);
        let rhs = &(&n * &g.laplacian(a)) + &(&g.deg(a) + &g.scale(&Qi::int(2))).scale(&Qi::int(4));
        push("box-n", lhs == rhs);

        let upper = &zp_dp_zp + &zpf;
        let rhs = (&upper + &df.mul_zh(&n)).map(|x| x.scale(&inv));
        push("zplus-split", zpf == rhs && mat_harmonic(&df) && mat_harmonic(&upper));

        let lhs = Mat2::<Zh>::dee(&g, a);
        let c1 = Qi::frac(l2 + k as i64 + 1, l2 + 1);
        let c2 = Qi::frac(k as i64, l2 + 1);
        let rhs = &df.mul_zh(&nk.scale(&c1)) + &upper.mul_zh(&nk1.scale(&c2));
        push("b-action", lhs == rhs);

        let dg = Mat2::<Zh>::dee(&g, a);
        let lhs = &(&(&z * &dg) * &z) + &z.mul_zh(&g.scale(&Qi::int(3)));
        let lower = &(&(&z * &df) * &z) + &zf;
        let c1 = Qi::frac(l2 + k as i64 + 3, l2 + 1);
        let c2 = Qi::frac(k as i64 + 2, l2 + 1);
        let rhs = &lower.mul_zh(&nk.scale(&c1)) + &dpf.mul_zh(&nkp.scale(&c2));
        push("c-action", lhs == rhs && mat_harmonic(&lower) && mat_harmonic(&dpf));

        let alt = &(&(&z * &df) + &Mat2::scalar(f.clone())) * &z;
        push("z-df-z", lower == alt && !lower.is_zero());

        let t = (&(&z * &dg) + &Mat2::scalar(g.clone())).trace();
        push("trace", t == &g.deg(a) + &g.scale(&Qi::int(2)));
    }
    StructuralReport { two_l, k, checks }
}

// ---- invariance scan -----------------------------------------------------------

/// `(2l, k)` cells reached by `varpi(2)` of a block from `(2l, k)`, with their
/// coefficients. Arrows with zero coefficient or negative `2l` are dropped.
pub fn predicted_arrows(block: Block, two_l: u32, k: i32) -> Vec<((u32, i32), Qi)> {
    let l2 = two_l as i64;
    let k64 = k as i64;
    let mut v = Vec::new();
    let mut push = |t: (i64, i32), c: Qi| {
        if t.0 >= 0 && !c.is_zero() {
            v.push(((t.0 as u32, t.1), c));
        }
    };
    match block {
        Block::A | Block::D => push((l2, k), Qi::one()),
        Block::B => {
            push((l2 - 1, k), Qi::frac(l2 + k64 + 1, l2 + 1));
            push((l2 + 1, k - 1), Qi::frac(k64, l2 + 1));
        }
        Block::C => {
            push((l2 + 1, k), Qi::frac(l2 + k64 + 3, l2 + 1));
            push((l2 - 1, k + 1), Qi::frac(k64 + 2, l2 + 1));
        }
    }
    v
}

#[derive(Clone, Debug, Default)]
pub struct ScanReport {
    /// Number of `(X, index)` pairs examined.
    pub cases: usize,
    pub failures: Vec<String>,
    /// Observed `(block, source cell) -> target cells`.
    pub observed: BTreeMap<(Block, u32, i32), BTreeSet<(u32, i32)>>,
}

impl ScanReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Applies every elementary `X` to every basis element in range and checks
/// that the image stays inside each invariant subspace containing the source.
/// For `Varpi2` it also checks the exact arrow pattern of each block.
pub fn invariance_scan(scheme: Scheme, two_l_max: u32, kmin: i32, kmax: i32) -> ScanReport {
    let kind = match scheme {
        Scheme::Varpi2 => ActionKind::Varpi(2),
        Scheme::Rho1 => ActionKind::RHO1,
    };
    let subspaces: &[Subspace] = match scheme {
        Scheme::Varpi2 => &Subspace::VARPI2,
        Scheme::Rho1 => &Subspace::RHO1,
    };
    let action = Action::on_z(kind);
    let xs = GlElement::all_elementary();
    let idxs = basis::indices(two_l_max, kmin..=kmax);
    let jobs: Vec<(usize, TIndex)> =
        (0..xs.len()).flat_map(|i| idxs.iter().map(move |&b| (i, b))).collect();

    let results: Vec<(Block, TIndex, BTreeSet<(u32, i32)>, Vec<String>)> = jobs
        .par_iter()
        .map(|&(xi, src)| {
            let x = &xs[xi];
            let block = x.only_block().expect("elementary");
            let img = act(&action, x, &src.element());
            let e = basis::expand_parametric(&img, Alphabet::Z);
            let support: BTreeSet<(u32, i32)> = e.keys().map(|i| (i.two_l, i.k)).collect();
            let mut fails = Vec::new();
            for s in subspaces {
                if s.contains(&src) {
                    for t in e.keys() {
                        if !s.contains(t) {
                            fails.push(format!("E{}{} on {src}: {t} leaves {s:?}", xi / 4 + 1, xi % 4 + 1));
                        }
                    }
                }
            }
            if scheme == Scheme::Varpi2 {
                let allowed: BTreeSet<(u32, i32)> =
                    predicted_arrows(block, src.two_l, src.k).into_iter().map(|(t, _)| t).collect();
                for t in &support {
                    if !allowed.contains(t) {
                        fails.push(format!("E{}{} on {src}: unexpected cell {t:?}", xi / 4 + 1, xi % 4 + 1));
                    }
                }
            }
            (block, src, support, fails)
        })
        .collect();

    let mut report = ScanReport { cases: results.len(), ..Default::default() };
    for (block, src, support, fails) in results {
        report.failures.extend(fails);
        report.observed.entry((block, src.two_l, src.k)).or_default().extend(support);
    }
    if scheme == Scheme::Varpi2 {
        for ((block, two_l, k), seen) in &report.observed {
            if matches!(block, Block::B | Block::C) {
                let want: BTreeSet<(u32, i32)> =
                    predicted_arrows(*block, *two_l, *k).into_iter().map(|(t, _)| t).collect();
                if &want != seen {
                    report.failures.push(format!(
                        "{block:?} on (2l={two_l}, k={k}): arrows {seen:?}, expected {want:?}"
                    ));
                }
            }
        }
    }
    report.failures.sort();
    report
}

/// Cell of `(2l, k)` under `scheme`, re-exported for reports.
pub fn cell(two_l: u32, k: i32, scheme: Scheme) -> ComponentLabel {
    classify_lk(two_l, k, scheme)
}
