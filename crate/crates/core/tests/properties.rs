use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use symcrystal::freealg::{form, WordVector};
use symcrystal::thetamod::{e_op, f_op, theta_form, ThetaClassVector};
use symcrystal::{LaurentPoly, Multisegment, RatFunc, Window};

fn poly(terms: Vec<(i32, i64)>) -> LaurentPoly {
    LaurentPoly::from_terms(terms.into_iter().map(|(e, c)| (e, BigRational::from_integer(BigInt::from(c)))))
}

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-3i32..=3, -4i64..=4), 0..4).prop_map(poly)
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (laurent(), laurent()).prop_map(|(n, d)| {
        if d.is_zero() {
            RatFunc::from(n)
        } else {
            RatFunc::new(n, d).unwrap()
        }
    })
}

fn window() -> Window {
    Window::symmetric(3).unwrap()
}

/// Random combination of words of a fixed length over `{±1, ±3}`.
fn word_vector(len: usize) -> impl Strategy<Value = WordVector> {
    let letter = prop::sample::select(vec![-3, -1, 1, 3]);
    prop::collection::vec((prop::collection::vec(letter, len), laurent()), 1..4).prop_map(|terms| {
        let w = window();
        let mut out = WordVector::zero(&w);
        for (letters, c) in terms {
            out += &WordVector::word(&w, &letters).unwrap().scale(&RatFunc::from(c));
        }
        out
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        if let Some(inv) = a.inv() {
            prop_assert!((&a * &inv).is_one());
        }
        prop_assert_eq!(a.bar().bar(), a.clone());
        prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
        prop_assert_eq!(a.to_string().parse::<RatFunc>().unwrap(), a);
    }

    #[test]
    fn form_is_adjoint_to_eprime(u in word_vector(2), v in word_vector(3), i in prop::sample::select(vec![-3, -1, 1, 3])) {
        prop_assert_eq!(form(&u.left_mul_letter(i).unwrap(), &v), form(&u, &v.eprime(i)));
        prop_assert_eq!(form(&v, &u.left_mul_letter(i).unwrap()), form(&u.left_mul_letter(i).unwrap(), &v));
    }

    #[test]
    fn derivations_commute(u in word_vector(3), i in prop::sample::select(vec![-3, -1, 1, 3]), j in prop::sample::select(vec![-3, -1, 1, 3])) {
        prop_assert_eq!(u.eprime(i).estar(j), u.estar(j).eprime(i));
    }

    #[test]
    fn bar_commutes_with_letters(u in word_vector(2), i in prop::sample::select(vec![-3, -1, 1, 3])) {
        prop_assert_eq!(u.left_mul_letter(i).unwrap().bar(), u.bar().left_mul_letter(i).unwrap());
        prop_assert_eq!(u.bar().bar(), u);
    }

    #[test]
    fn theta_form_adjunction(u in word_vector(1), v in word_vector(2), i in prop::sample::select(vec![-3, -1, 1, 3])) {
        let u = ThetaClassVector::from_rep(u).unwrap();
        let v = ThetaClassVector::from_rep(v).unwrap();
        let lhs = theta_form(&e_op(i, &v).unwrap(), &u).unwrap();
        let rhs = theta_form(&v, &f_op(i, &u).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        let w = f_op(i, &u).unwrap();
        prop_assert_eq!(theta_form(&v, &w).unwrap(), theta_form(&w, &v).unwrap());
    }

    #[test]
    fn multisegment_json_round_trip(t in prop::collection::vec((-2i32..=2, 0i32..=2, 1u32..=3), 0..4)) {
        let triples: Vec<(i32, i32, u32)> = t.into_iter().map(|(i, len, n)| (2 * i + 1, 2 * i + 1 + 2 * len, n)).collect();
        let m = Multisegment::from_segments(
            triples.iter().map(|&(i, j, n)| (symcrystal::Segment::new(i, j).unwrap(), n)),
        );
        let back = Multisegment::from_json_str(&m.to_json().to_string()).unwrap();
        prop_assert_eq!(back, m);
    }
}
