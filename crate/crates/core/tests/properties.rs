use proptest::prelude::*;
use qladder_core::actions::{commutator_check, Action, ActionKind, GlElement};
use qladder_core::basis::{self, TIndex};
use qladder_core::ladder::{self, lambda, l1, m_multiply};
use qladder_core::pairings::{self, i_embed, pair_h2, pair_hr, pair_rho1, u2_closed, u2_functional};
use qladder_core::tensor::TensorElement;
use qladder_core::{parse_zh, Alphabet, Mat2, Monomial, Poly, Qi, Zh};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn qi() -> impl Strategy<Value = Qi> {
    (-6i64..=6, 1i64..=4, -6i64..=6, 1i64..=4).prop_map(|(a, b, c, d)| Qi::from_parts(a, b, c, d))
}

fn poly_in(a: Alphabet, max_exp: u16, max_terms: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec((qi(), prop::array::uniform4(0..=max_exp)), 0..=max_terms).prop_map(move |ts| {
        Poly::from_terms(ts.into_iter().map(|(c, e)| {
            let vars = a.vars();
            let m = (0..4).fold(Monomial::one(), |m, i| m.mul(&Monomial::var(vars[i], e[i])));
            (m, c)
        }))
    })
}

fn zh() -> impl Strategy<Value = Zh> {
    (poly_in(Alphabet::Z, 2, 4), 0u32..=3).prop_map(|(p, d)| Zh::from(p).mul_norm_pow(Alphabet::Z, -(d as i32)))
}

fn homogeneous(d: u32) -> impl Strategy<Value = Zh> {
    prop::collection::vec((qi(), 0..=d, 0..=d, 0..=d), 1..=4).prop_map(move |ts| {
        let mut f = Zh::zero();
        for (c, a, b, e) in ts {
            let (a, b) = (a.min(d), b.min(d - a.min(d)));
            let e = e.min(d - a - b);
            let rest = d - a - b - e;
            let v = |r, s, p| Zh::var(Alphabet::Z.var(r, s)).pow(p);
            f = &f + &(&(&v(0, 0, a) * &v(0, 1, b)) * &(&v(1, 0, e) * &v(1, 1, rest))).scale(&c);
        }
        f
    })
}

fn harmonic(a: Alphabet, dmax: u32) -> impl Strategy<Value = Zh> {
    (0..=dmax, any::<u64>()).prop_map(move |(d, seed)| ladder::random_harmonic(&mut ChaCha8Rng::seed_from_u64(seed), a, d))
}

fn elementary() -> impl Strategy<Value = GlElement> {
    (0usize..4, 0usize..4).prop_map(|(i, j)| GlElement::elementary(i, j))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn gaussian_rational_field(a in qi(), b in qi(), c in qi()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn zh_ring_and_canonical_form(f in zh(), g in zh(), h in zh()) {
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f + &g) - &g, f.clone());
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        let n = Zh::norm_pow(Alphabet::Z, 1);
        prop_assert_eq!((&f * &n).mul_norm_pow(Alphabet::Z, -1), f.clone());
        prop_assert_eq!(parse_zh(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn euler_relation(f in homogeneous(4), k in -3i32..=2) {
        let g = f.mul_norm_pow(Alphabet::Z, k);
        prop_assert_eq!(g.deg(Alphabet::Z), g.scale(&Qi::int(4 + 2 * k as i64)));
    }

    #[test]
    fn expansion_round_trip(f in zh()) {
        let e = basis::expand_in_tbasis(&f).unwrap();
        prop_assert_eq!(e.reconstruct(), f);
    }

    #[test]
    fn u2_closed_form_matches_expansion(f in zh()) {
        prop_assert_eq!(u2_closed(&f), Zh::constant(u2_functional(&f).unwrap()));
    }

    #[test]
    fn rho1_pairing_symmetric(f in zh(), g in zh()) {
        prop_assert_eq!(pair_rho1(&f, &g).unwrap(), pair_rho1(&g, &f).unwrap());
    }

    #[test]
    fn h_pairings_on_plus_minus(p in harmonic(Alphabet::Z, 3), q in harmonic(Alphabet::Z, 3)) {
        let minus = q.invert(Alphabet::Z).mul_norm_pow(Alphabet::Z, -1);
        let hr = pair_hr(&p, &minus).unwrap();
        prop_assert!(hr.is_r_independent());
        let back = pair_hr(&minus, &p).unwrap();
        prop_assert_eq!(hr.constant_term(), -back.constant_term());
        prop_assert_eq!(hr.constant_term(), pair_h2(&p, &minus).unwrap());
    }

    #[test]
    fn commutators_vanish(x in elementary(), y in elementary(), f in zh(), m in 0u32..=3) {
        let kind = match m { 0 => ActionKind::Pi0l, 1 => ActionKind::Pi0r, _ => ActionKind::Varpi(m) };
        prop_assert!(commutator_check(&Action::on_z(kind), &x, &y, &f).is_zero());
    }

    #[test]
    fn lambda_is_linear(p in harmonic(Alphabet::Z, 2), q in harmonic(Alphabet::Zp, 2), f in zh()) {
        let a = TensorElement::new(&f * &q).unwrap();
        let b = TensorElement::new(&p * &q).unwrap();
        prop_assert_eq!(lambda(&(&a + &b)), &lambda(&a) + &lambda(&b));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn tau_is_multiplicative(two_l in 0u32..=3, a in prop::array::uniform4(qi()), b in prop::array::uniform4(qi())) {
        let m = |v: &[Qi; 4]| Mat2(v.clone().map(Poly::constant));
        let (ma, mb) = (m(&a), m(&b));
        let ab = &ma * &mb;
        let (ta, tb, tab) = (basis::tau_matrix(two_l, &ma), basis::tau_matrix(two_l, &mb), basis::tau_matrix(two_l, &ab));
        let n = ta.len();
        for i in 0..n {
            for j in 0..n {
                let mut s = Poly::zero();
                for k in 0..n {
                    s = &s + &(&ta[i][k] * &tb[k][j]);
                }
                prop_assert_eq!(&s, &tab[i][j]);
            }
        }
    }

    #[test]
    fn embedding_properties(f in homogeneous(3), g in homogeneous(2), k in 0i32..=1) {
        let h = &f.mul_norm_pow(Alphabet::Z, k) + &g;
        let plus = basis::project_where(&h, Alphabet::Z, |i| i.k >= 0);
        let e = i_embed(&h).unwrap();
        prop_assert!(e.as_zh().is_harmonic(Alphabet::Z) && e.as_zh().is_harmonic(Alphabet::Zp));
        prop_assert_eq!(m_multiply(&e), plus);
    }

    #[test]
    fn l1_idempotent(seed in any::<u64>()) {
        let t = ladder::random_harmonic_pair(&mut ChaCha8Rng::seed_from_u64(seed), 2);
        let once = l1(&t).unwrap();
        prop_assert_eq!(l1(&once).unwrap(), once.clone());
        let img = i_embed(&m_multiply(&t)).unwrap();
        prop_assert_eq!(l1(&img).unwrap(), img);
    }
}

#[test]
fn weight_restricted_embedding_matches_all_pairs() {
    for idx in basis::indices(3, -2..=1) {
        assert_eq!(*pairings::embed_basis(&idx), pairings::embed_basis_all_pairs(&idx), "{idx}");
    }
}

#[test]
fn lambda_annihilates_lower_cells() {
    let r = qladder_core::checks::annihilation(2, -4, -1);
    assert!(qladder_core::checks::all_pass(&r));
}

#[test]
fn rho1_subspaces_invariant() {
    let scan = qladder_core::actions::invariance_scan(basis::Scheme::Rho1, 3, -5, 2);
    assert!(scan.pass(), "{:?}", scan.failures);
}

#[test]
fn wrong_action_breaks_equivariance() {
    let g = ladder::generator(2);
    let wrong = Action::on_z(ActionKind::Varpi(2));
    let res = GlElement::all_elementary().iter().any(|x| {
        let lhs = ladder::l2(&TensorElement::new(qladder_core::actions::act(&wrong, x, g.as_zh())).unwrap_or_default());
        let rhs = qladder_core::actions::act(&wrong, x, ladder::l2(&g).unwrap().as_zh());
        lhs.map(|l| l.as_zh() != &rhs).unwrap_or(true)
    });
    assert!(res);
}

#[test]
fn indices_are_valid() {
    assert!(TIndex::new(1, 0, 1, 0).is_err());
    assert!(TIndex::new(2, -2, 2, -1).is_ok());
}
