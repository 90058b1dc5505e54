use parared_core::series::{parse_rat, rat, ratio, LaurentSeries, EXACT};
use proptest::prelude::*;

fn s(terms: &[(i64, i64)], trunc: i64) -> LaurentSeries {
    LaurentSeries::new(terms.iter().map(|&(k, c)| (k, rat(c))), trunc)
}

#[test]
fn add_examples() {
    assert!((&s(&[(-1, 1)], EXACT) + &s(&[(-1, -1)], EXACT)).is_zero());
    assert_eq!(&s(&[(0, 1), (1, 1)], EXACT) + &s(&[(1, 1)], EXACT), s(&[(0, 1), (1, 2)], EXACT));
}

#[test]
fn mul_examples() {
    assert_eq!(&s(&[(-1, 1), (0, 1)], EXACT) * &s(&[(1, 1)], EXACT), s(&[(0, 1), (1, 1)], EXACT));
    let a = s(&[(-2, 3), (1, 5)], 6);
    assert_eq!(&a * &LaurentSeries::one(), a);
    let z = &LaurentSeries::zero() * &a;
    assert!(z.is_zero() && z.is_exact());
}

#[test]
fn inv_examples() {
    assert_eq!(s(&[(1, 1)], EXACT).inv().unwrap(), s(&[(-1, 1)], EXACT));
    let g = s(&[(0, 1), (1, 1)], 6).inv().unwrap();
    assert_eq!(g, s(&[(0, 1), (1, -1), (2, 1), (3, -1), (4, 1), (5, -1)], 6));
    assert!(LaurentSeries::zero().inv().is_err());
}

#[test]
fn deriv_and_ramify_examples() {
    assert_eq!(s(&[(2, 1)], EXACT).deriv(), s(&[(1, 2)], EXACT));
    assert_eq!(s(&[(-1, 1)], EXACT).deriv(), s(&[(-2, -1)], EXACT));
    assert_eq!(s(&[(-1, 1)], EXACT).ramify(2), s(&[(-2, 1)], EXACT));
    let a = s(&[(-3, 2), (0, 7)], 4);
    assert_eq!(a.ramify(1), a);
    assert_eq!(a.ramify(3).unramify(3).unwrap(), a);
}

#[test]
fn rational_parsing() {
    assert_eq!(parse_rat("-2/4").unwrap(), ratio(-1, 2));
    assert!(parse_rat("1/0").is_err());
    assert!(parse_rat("x").is_err());
}

fn series() -> impl Strategy<Value = LaurentSeries> {
    (prop::collection::vec((-4i64..6, -5i64..6), 0..6), 2i64..9)
        .prop_map(|(terms, t)| LaurentSeries::new(terms.into_iter().map(|(k, c)| (k, rat(c))), t))
}

fn unit() -> impl Strategy<Value = LaurentSeries> {
    (series(), -3i64..3, 1i64..4).prop_map(|(s0, v, c)| {
        let t = s0.trunc().max(v + 1);
        &LaurentSeries::new([(v, rat(c))], t) + &s0.shift(v + 1 - s0.val().min(v + 1)).truncate(t)
    })
}

/// Naive convolution on the exactly known window.
fn convolution(a: &LaurentSeries, b: &LaurentSeries, below: i64) -> LaurentSeries {
    let mut terms = Vec::new();
    for (i, x) in a.terms() {
        for (j, y) in b.terms() {
            terms.push((i + j, x * y));
        }
    }
    LaurentSeries::new(terms, below)
}

proptest! {
    #[test]
    fn sum_is_termwise(a in series(), b in series()) {
        let c = &a + &b;
        prop_assert_eq!(c.trunc(), a.trunc().min(b.trunc()));
        for k in -10..c.trunc() {
            prop_assert_eq!(c.coeff(k), a.coeff(k) + b.coeff(k));
        }
    }

    #[test]
    fn product_matches_convolution(a in series(), b in series()) {
        let c = &a * &b;
        prop_assert!(c.agrees_below(&convolution(&a, &b, c.trunc()), c.trunc()));
    }

    #[test]
    fn ring_axioms(a in series(), b in series(), c in series()) {
        let l = &(&a * &b) * &c;
        let r = &a * &(&b * &c);
        let t = l.trunc().min(r.trunc());
        prop_assert!(l.agrees_below(&r, t));
        let l = &a * &(&b + &c);
        let r = &(&a * &b) + &(&a * &c);
        let t = l.trunc().min(r.trunc());
        prop_assert!(l.agrees_below(&r, t));
    }

    #[test]
    fn inverse_replays(u in unit()) {
        prop_assume!(!u.is_zero());
        let v = u.inv().unwrap();
        let p = &u * &v;
        prop_assert!(p.agrees_below(&LaurentSeries::one(), p.trunc()));
        let w = v.inv().unwrap();
        let t = w.trunc().min(u.trunc());
        prop_assert!(w.agrees_below(&u, t));
    }

    #[test]
    fn leibniz(a in series(), b in series()) {
        let l = (&a * &b).deriv();
        let r = &(&a.deriv() * &b) + &(&a * &b.deriv());
        let t = l.trunc().min(r.trunc());
        prop_assert!(l.agrees_below(&r, t));
    }

    #[test]
    fn chain_rule_under_ramification(a in series(), k in 1i64..4) {
        let l = a.ramify(k).deriv();
        let r = &a.deriv().ramify(k) * &LaurentSeries::monomial(k - 1, rat(k));
        let t = l.trunc().min(r.trunc());
        prop_assert!(l.agrees_below(&r, t));
    }

    #[test]
    fn truncation_is_sound(a in series(), b in series(), cut in 0i64..4) {
        // recompute with less precision and compare on the overlap
        let full = &(&a * &b) + &a.deriv();
        let a2 = a.truncate(a.trunc() - cut);
        let b2 = b.truncate(b.trunc() - cut);
        let part = &(&a2 * &b2) + &a2.deriv();
        prop_assert!(part.trunc() <= full.trunc());
        prop_assert!(full.agrees_below(&part, part.trunc()));
    }
}
