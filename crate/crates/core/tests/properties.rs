use proptest::prelude::*;

use eqschubert::expr::{parse_polynomial, render, Coords, Style};
use eqschubert::polynomial::{divided_difference_borel, divided_difference_fast, weyl_act_x, x_linear, Monomial};
use eqschubert::presentations::{
    borel_to_gkm, chevalley_multiply, dd_gkm, dd_schubert, gkm_to_schubert, schubert_to_gkm, weyl_act_gkm,
    weyl_act_schubert, LocalizationCache,
};
use eqschubert::store::{ArtifactKind, CacheKey, Lookup, Store};
use eqschubert::{BorelClass, DoublePolynomial, Family, Rational, RootSystem, SchubertSum, Weight, WeylElement};

type RawPoly = Vec<(Vec<u32>, i64)>;
type Picks = Vec<(usize, RawPoly)>;

const TYPES: [&str; 6] = ["A2", "B2", "G2", "A3", "B3", "C3"];

fn root_system(k: usize) -> RootSystem {
    RootSystem::from_type_str(TYPES[k % TYPES.len()]).unwrap()
}

fn small_types() -> impl Strategy<Value = RootSystem> {
    (0..TYPES.len()).prop_map(root_system)
}

/// Polynomial in `2n` variables from `(exponents, coefficient)` triples.
fn poly(n: usize, raw: &[(Vec<u32>, i64)], with_x: bool) -> DoublePolynomial {
    DoublePolynomial::from_terms(
        n,
        raw.iter().map(|(e, c)| {
            let mut exps = vec![0u32; 2 * n];
            for (k, x) in e.iter().enumerate() {
                let slot = if with_x { k % (2 * n) } else { k % n };
                exps[slot] += x;
            }
            (Monomial(exps), Rational::from_integer((*c).into()))
        }),
    )
}

fn raw_terms() -> impl Strategy<Value = RawPoly> {
    prop::collection::vec((prop::collection::vec(0u32..3, 6), -4i64..=4), 0..4)
}

fn element(rs: &RootSystem, k: usize) -> WeylElement {
    let all = rs.all_elements(100_000).unwrap();
    all[k % all.len()].clone()
}

fn schubert_sum(rs: &RootSystem, picks: &[(usize, RawPoly)]) -> SchubertSum {
    let mut s = SchubertSum::zero(rs.rank());
    for (k, raw) in picks {
        s.add_term(&element(rs, *k), &poly(rs.rank(), raw, false)).unwrap();
    }
    s
}

fn picks() -> impl Strategy<Value = Picks> {
    prop::collection::vec((0usize..1000, raw_terms()), 0..3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ring_axioms(a in raw_terms(), b in raw_terms(), c in raw_terms()) {
        let (a, b, c) = (poly(3, &a, true), poly(3, &b, true), poly(3, &c, true));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn exact_division_by_linear_forms(a in raw_terms(), b in raw_terms(), lin in prop::collection::vec(-3i64..=3, 4)) {
        let (a, b) = (poly(2, &a, true), poly(2, &b, true));
        let d = DoublePolynomial::from_terms(
            2,
            lin.iter().enumerate().map(|(k, c)| {
                let mut e = vec![0; 4];
                e[k] = 1;
                (Monomial(e), Rational::from_integer((*c).into()))
            }),
        );
        prop_assume!(!d.is_zero());
        prop_assert_eq!((&a * &d).exact_divide(&d).unwrap(), a.clone());
        // a remainder is reported, never silently dropped
        match (&b + &DoublePolynomial::one(2)).exact_divide(&d) {
            Ok(q) => prop_assert_eq!(&q * &d, &b + &DoublePolynomial::one(2)),
            Err(e) => prop_assert!(matches!(e, eqschubert::Error::NotDivisible { .. }), "{}", e),
        }
    }

    #[test]
    fn text_round_trip(rs in small_types(), raw in raw_terms()) {
        let p = poly(rs.rank(), &raw, true);
        let mut styles = vec![Style::default(), Style { alpha: true, ..Default::default() }];
        if rs.cartan_type().family == Family::A {
            styles.push(Style { coords: Coords::TypeA, alpha: false });
        }
        for style in styles {
            let text = render(&rs, &p, style);
            prop_assert_eq!(parse_polynomial(&text, &rs, style.coords).unwrap(), p.clone(), "{}", text);
        }
    }

    #[test]
    fn divided_difference_rules(rs in small_types(), f in raw_terms(), g in raw_terms(), i in 1usize..4) {
        let i = (i - 1) % rs.rank() + 1;
        let n = rs.rank();
        let (f, g) = (poly(n, &f, true), poly(n, &g, true));
        let dd = |p: &DoublePolynomial| divided_difference_fast(&rs, i, p).unwrap();
        prop_assert_eq!(dd(&f), divided_difference_borel(&rs, i, &f).unwrap());
        prop_assert!(dd(&dd(&f)).is_zero());
        // twisted Leibniz rule
        let s = rs.simple_reflection(i).unwrap();
        prop_assert_eq!(dd(&(&f * &g)), &(&dd(&f) * &g) + &(&weyl_act_x(&rs, &s, &f) * &dd(&g)));
    }

    #[test]
    fn weyl_group_laws(rs in small_types(), a in 0usize..1000, b in 0usize..1000) {
        let (u, v) = (element(&rs, a), element(&rs, b));
        let uv = rs.multiply(&u, &v).unwrap();
        prop_assert!(rs.multiply(&u, &rs.inverse(&u)).unwrap().is_identity());
        prop_assert_eq!(rs.inversion_roots(&u).len(), u.length());
        prop_assert!(uv.length() <= u.length() + v.length());
        prop_assert_eq!(rs.inverse(&u).length(), u.length());
        let word = rs.reduced_word(&u);
        prop_assert_eq!(word.len(), u.length());
        prop_assert_eq!(&rs.parse_element(&word.to_string()).unwrap(), &u);
        for w in rs.reduced_words(&u) {
            prop_assert_eq!(&rs.from_word(&w).unwrap(), &u);
        }
        // Bruhat order is compatible with length and with inversion
        if rs.bruhat_leq(&u, &v) {
            prop_assert!(u.length() <= v.length());
            prop_assert!(rs.bruhat_leq(&rs.inverse(&u), &rs.inverse(&v)));
        }
    }

    #[test]
    fn schubert_dd_matches_gkm(rs in small_types(), p in picks(), i in 1usize..4) {
        let i = (i - 1) % rs.rank() + 1;
        let s = schubert_sum(&rs, &p);
        let top = rs.positive_roots().len();
        let mut cache = LocalizationCache::new();
        let h = schubert_to_gkm(&rs, &s, top, &mut cache).unwrap();
        let via_gkm = gkm_to_schubert(&rs, &dd_gkm(&rs, i, &h).unwrap()).unwrap();
        prop_assert_eq!(dd_schubert(&rs, i, &s).unwrap(), via_gkm);
    }

    #[test]
    fn weyl_action_is_an_involution(rs in small_types(), p in picks(), i in 1usize..4) {
        let i = (i - 1) % rs.rank() + 1;
        let s = schubert_sum(&rs, &p);
        let once = weyl_act_schubert(&rs, i, &s).unwrap();
        prop_assert_eq!(weyl_act_schubert(&rs, i, &once).unwrap(), s.clone());
        // the same action computed on localizations
        let top = rs.positive_roots().len();
        let mut cache = LocalizationCache::new();
        let h = schubert_to_gkm(&rs, &s, top, &mut cache).unwrap();
        let si = rs.simple_reflection(i).unwrap();
        let moved = weyl_act_gkm(&rs, &si, &h).unwrap();
        prop_assert_eq!(gkm_to_schubert(&rs, &moved).unwrap(), once);
    }

    #[test]
    fn chevalley_matches_gkm_product(rs in small_types(), p in picks(), lam in prop::collection::vec(-2i64..=2, 3)) {
        let n = rs.rank();
        let lambda = Weight::from_ints(&lam[..n]);
        let s = schubert_sum(&rs, &p);
        let top = rs.positive_roots().len();
        let mut cache = LocalizationCache::new();
        let h = schubert_to_gkm(&rs, &s, top, &mut cache).unwrap();
        let l = borel_to_gkm(&rs, &BorelClass::new(x_linear(&rs, &lambda)), top).unwrap();
        let want = gkm_to_schubert(&rs, &h.mul(&l).unwrap()).unwrap();
        prop_assert_eq!(chevalley_multiply(&rs, &lambda, &s).unwrap(), want);
    }

    #[test]
    fn gkm_classes_form_a_ring(rs in small_types(), p in picks(), q in picks()) {
        let top = rs.positive_roots().len();
        let mut cache = LocalizationCache::new();
        let (a, b) = (schubert_sum(&rs, &p), schubert_sum(&rs, &q));
        let ha = schubert_to_gkm(&rs, &a, top, &mut cache).unwrap();
        let hb = schubert_to_gkm(&rs, &b, top, &mut cache).unwrap();
        let sum = ha.add(&hb).unwrap();
        let prod = ha.mul(&hb).unwrap();
        prop_assert!(sum.check_edges(&rs).is_ok());
        prop_assert!(prod.check_edges(&rs).is_ok());
        prop_assert_eq!(gkm_to_schubert(&rs, &sum).unwrap(), a.add(&b));
        prop_assert_eq!(prod, hb.mul(&ha).unwrap());
    }

    #[test]
    fn store_round_trip(payload in ".*", words in prop::collection::vec("[a-z0-9]{0,6}", 0..3)) {
        let dir = tempfile::tempdir().unwrap();
        let store = Store::open(dir.path()).unwrap();
        let key = CacheKey::new("B3", ArtifactKind::Localization, words);
        prop_assert_eq!(store.get(&key), Lookup::Miss);
        store.put(&key, &payload).unwrap();
        prop_assert_eq!(store.get(&key), Lookup::Hit(payload));
    }
}
