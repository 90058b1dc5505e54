use parared_core::lie::*;
use parared_core::parahoric::*;
use parared_core::reduction::*;
use parared_core::series::{rat, ratio, Rat};
use parared_core::Error;
use proptest::prelude::*;

fn e(n: usize, a: usize, b: usize) -> ConstMat {
    ConstMat::unit(n, a, b)
}

fn mono(x: &ConstMat, k: i64) -> MatSeries {
    MatSeries::monomial(x, k)
}

fn conn(terms: &[(&ConstMat, i64)], trunc: i64) -> Connection {
    let n = terms[0].0.n();
    let mut m = MatSeries::zero(n);
    for (x, k) in terms {
        m = &m + &mono(x, *k);
    }
    Connection::new(m.truncate(trunc))
}

fn replays(a: &Connection, w: &GaugeWord, b: &Connection) -> bool {
    let t = b.trunc();
    let r = a.gauge(w).unwrap();
    r.trunc() >= t && r.mat.agrees_below(&b.mat, t)
}

fn h2() -> ConstMat {
    ConstMat::diag_i64(&[1, -1])
}

#[test]
fn semisimple_split_example() {
    let a = conn(&[(&h2(), -2), (&e(2, 0, 1), -1)], 8);
    let z = Weight::zero(2);
    let (b, w, s) = reduce_semisimple_commute(&z, &a).unwrap();
    assert_eq!(s, h2());
    assert!(replays(&a, &w, &b));
    assert!(b.trunc() >= 8);
    for k in b.mat.exponents() {
        assert!(h2().bracket(&b.mat.coeff(k)).is_zero());
    }
    assert_eq!(b.mat.coeff(-2), h2());
    match &w.factors[0] {
        Factor::Exp(y) => assert_eq!(*y, mono(&e(2, 0, 1).scale(&ratio(1, 2)), 1)),
        f => panic!("unexpected factor {f:?}"),
    }
}

#[test]
fn semisimple_trivial_and_errors() {
    let z = Weight::zero(2);
    let a = Connection::new(mono(&h2(), -2));
    let (b, w, _) = reduce_semisimple_commute(&z, &a).unwrap();
    assert!(w.is_identity());
    assert_eq!(b, a);
    let log = Connection::new(mono(&h2(), -1));
    assert_eq!(reduce_semisimple_commute(&z, &log).unwrap_err(), Error::OrderTooLow(1));
    let nil = Connection::new(mono(&e(2, 1, 0), -2));
    assert_eq!(reduce_semisimple_commute(&z, &nil).unwrap_err(), Error::ZeroSemisimplePart);
}

#[test]
fn multi_and_cartan_examples() {
    let z3 = Weight::zero(3);
    let s = ConstMat::diag_i64(&[1, 2, 1]);
    let a = conn(&[(&s, -2), (&e(3, 0, 1), -1), (&e(3, 2, 1), -1)], 7);
    let list = [ConstMat::diag_i64(&[1, 1, 0]), ConstMat::diag_i64(&[0, 1, 1])];
    let (b, w) = reduce_multi_semisimple(&z3, &a, &list).unwrap();
    assert!(replays(&a, &w, &b));
    let cent = Subalgebra::gl(3).centralizer(&list).unwrap();
    for k in b.mat.exponents() {
        assert!(cent.contains(&b.mat.coeff(k)));
    }
    let (b0, w0) = reduce_multi_semisimple(&z3, &a, &[]).unwrap();
    assert!(w0.is_identity());
    assert_eq!(b0, a);
    let bad = [ConstMat::diag_i64(&[1, 0, 0]), e(3, 0, 1)];
    assert_eq!(reduce_multi_semisimple(&z3, &a, &bad).unwrap_err(), Error::NonCommutingList);

    let z = Weight::zero(2);
    let a = conn(&[(&h2(), -2), (&e(2, 0, 1), -1)], 8);
    let (b, w) = reduce_to_cartan(&z, &a, &[h2()]).unwrap();
    assert!(replays(&a, &w, &b));
    assert_eq!(b.mat.truncate(8), mono(&h2(), -2).truncate(8));
    assert_eq!(
        reduce_to_cartan(&Weight::zero(3), &a_gl3(), &[ConstMat::diag_i64(&[1, 1, 0])]).unwrap_err(),
        Error::NotCartan
    );
}

fn a_gl3() -> Connection {
    conn(&[(&ConstMat::diag_i64(&[1, 1, 0]), -2)], 6)
}

fn small() -> impl Strategy<Value = Rat> {
    (-3i64..=3).prop_map(rat)
}

fn tail(n: usize, from: i64, to: i64) -> impl Strategy<Value = Vec<(usize, usize, i64, Rat)>> {
    proptest::collection::vec((0..n, 0..n, from..to, small()), 0..6)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]
    #[test]
    fn semisimple_postcondition_gl3(t in tail(3, -1, 4)) {
        let s = ConstMat::diag_i64(&[1, 2, 3]);
        let mut m = mono(&s, -2);
        m = &m + &MatSeries::from_terms(3, t, 5);
        let a = Connection::new(m.truncate(5));
        let (b, w, s2) = reduce_semisimple_commute(&Weight::zero(3), &a).unwrap();
        prop_assert_eq!(&s2, &s);
        prop_assert!(replays(&a, &w, &b));
        for k in b.mat.exponents() {
            prop_assert!(s.bracket(&b.mat.coeff(k)).is_zero());
        }
    }

    #[test]
    fn cartan_postcondition_gl2(t in tail(2, -1, 5)) {
        let mut m = mono(&h2(), -2);
        m = &m + &MatSeries::from_terms(2, t, 6);
        let a = Connection::new(m.truncate(6));
        let (b, w) = reduce_to_cartan(&Weight::zero(2), &a, &[h2()]).unwrap();
        prop_assert!(replays(&a, &w, &b));
        prop_assert_eq!(b.mat.coeff(-2), h2());
        for k in b.mat.exponents() {
            prop_assert!(b.mat.coeff(k).is_diagonal());
        }
    }
}

#[test]
fn nilpotent_center_example() {
    let z = Weight::zero(2);
    let a = conn(&[(&e(2, 1, 0), -2), (&ConstMat::diag_i64(&[1, 0]), -1)], 8);
    let (b, w, t) = reduce_nilpotent_center(&z, &a).unwrap();
    assert_eq!(t, Sl2Triple { p: e(2, 1, 0), q: e(2, 0, 1), h: h2() });
    assert!(replays(&a, &w, &b));
    assert_eq!(b.mat.coeff(-1), ConstMat::identity(2).scale(&ratio(1, 2)));
    for k in b.mat.exponents().into_iter().filter(|&k| k > -2) {
        assert!(t.q.bracket(&b.mat.coeff(k)).is_zero());
    }
    let bare = Connection::new(mono(&e(2, 1, 0), -2));
    let (b, w, _) = reduce_nilpotent_center(&z, &bare).unwrap();
    assert!(w.is_identity());
    assert_eq!(b, bare);
    assert_eq!(
        reduce_nilpotent_center(&z, &Connection::new(mono(&h2(), -2))).unwrap_err(),
        Error::NotNilpotentLeading
    );
}

#[test]
fn invariants_examples() {
    let z = Weight::zero(2);
    let t = Sl2Triple { p: e(2, 1, 0), q: e(2, 0, 1), h: h2() };
    let bare = Connection::new(mono(&e(2, 1, 0), -2));
    assert_eq!(splitting_invariants(&z, &bare, &t), (rat(2), None));
    let crafted = conn(&[(&e(2, 1, 0), -2), (&e(2, 0, 1), -1)], 6);
    assert_eq!(splitting_invariants(&z, &crafted, &t), (rat(2), Some(ratio(1, 2))));
}

#[test]
fn shear_examples() {
    let t = Sl2Triple { p: e(2, 1, 0), q: e(2, 0, 1), h: h2() };
    let b = Connection::new(mono(&e(2, 1, 0), -2));
    let (c, _) = shear(&b, &t, 2, -1).unwrap();
    let expect = &e(2, 1, 0).scale(&rat(2)) - &h2();
    assert_eq!(c.mat, mono(&expect, -1).with_ctx(c.mat.ctx));
    let (same, w) = shear(&b, &t, 1, 0).unwrap();
    assert!(w.is_identity());
    assert_eq!(same, b);
    // Υ = 1/2 on an order-4 instance: δ = 2, b = 4, n = −1
    let crafted = conn(&[(&e(2, 1, 0), -4), (&e(2, 0, 1), -3)], 6);
    let z = Weight::zero(2);
    let (_, u) = splitting_invariants(&z, &crafted, &t);
    assert_eq!(u, Some(ratio(1, 2)));
    let (cover, n) = shear_parameters(4, &u);
    assert_eq!((cover, n), (4, -1));
    let (c, _) = shear(&crafted, &t, cover, n).unwrap();
    // leading index −2δc + 2δΥ + 2δ − 1
    assert_eq!(-c.mat.val(), 2 * 2 * 4 - 2 * 2 * 1 / 2 - 2 * 2 + 1);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]
    #[test]
    fn nilpotent_postcondition_gl3(t in tail(3, -1, 4)) {
        let p = &e(3, 1, 0) + &e(3, 2, 1);
        let mut m = mono(&p, -2);
        m = &m + &MatSeries::from_terms(3, t, 5);
        let a = Connection::new(m.truncate(5));
        let (b, w, tr) = reduce_nilpotent_center(&Weight::zero(3), &a).unwrap();
        prop_assert!(tr.relations_hold());
        prop_assert!(replays(&a, &w, &b));
        prop_assert!(tr.q.bracket(&b.mat.coeff(-2)).is_diagonal());
        for k in b.mat.exponents().into_iter().filter(|&k| k > -2) {
            prop_assert!(tr.q.bracket(&b.mat.coeff(k)).is_zero());
        }
    }
}

fn companion(k: i64) -> Connection {
    Connection::new(&mono(&e(2, 0, 1), 0) + &mono(&e(2, 1, 0), -k))
}

fn replays_report(a: &Connection, r: &ReductionReport) -> bool {
    let t = r.effective_trunc;
    let a = if a.mat.is_exact() { a.with_mat(a.mat.truncate(64)) } else { a.clone() };
    let got = a.gauge(&r.certificate).unwrap();
    got.trunc() >= t && got.mat.agrees_below(&r.final_form.mat, t)
}

#[test]
fn full_reduce_examples() {
    let z = Weight::zero(2);
    let x = ConstMat::from_i64(&[&[1, 2], &[3, 4]]);
    let log = Connection::new(mono(&x, -1).truncate(6));
    let r = full_reduce(&z, &log, &Budget::default()).unwrap();
    assert_eq!(r.slope, rat(0));
    assert!(matches!(r.form_class, FormClass::Logarithmic | FormClass::Boalch));
    assert!(replays_report(&log, &r));

    let nil = Connection::new(mono(&e(2, 1, 0), -2));
    let r = full_reduce(&z, &nil, &Budget::default()).unwrap();
    assert_eq!(r.ramification, 2);
    assert_eq!(r.slope, rat(0));
    assert!(replays_report(&nil, &r));
    let expect = &e(2, 1, 0).scale(&rat(2)) - &h2();
    assert!(r.final_form.mat.agrees_below(&mono(&expect, -1), r.effective_trunc));

    let r = full_reduce(&z, &companion(3), &Budget::default()).unwrap();
    assert_eq!(r.form_class, FormClass::CartanIrregular);
    assert_eq!(r.slope, ratio(1, 2));
    assert_eq!(r.ramification, 4);
    assert!(replays_report(&companion(3), &r));

    let d = Connection::new(mono(&h2(), -2));
    assert_eq!(slope(&d).unwrap(), rat(1));
    assert_eq!(full_reduce(&Weight::new(vec![ratio(1, 2), rat(0)]), &d, &Budget::default()).unwrap_err(), Error::NotIntegerWeight);
}

#[test]
fn companion_slopes() {
    for k in 2..=8 {
        let r = full_reduce(&Weight::zero(2), &companion(k), &Budget::default()).unwrap();
        let oracle = if k <= 2 { rat(0) } else { ratio(k - 2, 2) };
        assert_eq!(r.slope, oracle, "k = {k}");
        assert!(replays_report(&companion(k), &r), "k = {k}");
        let keys: Vec<_> = r.progress_log.iter().filter(|(s, _)| s == "iteration").map(|(_, s)| s.key()).collect();
        assert!(keys.windows(2).all(|p| p[1] < p[0]));
    }
}

#[test]
fn regularity_examples() {
    let x = ConstMat::from_i64(&[&[1, 2], &[3, 4]]);
    let v = is_regular(&Connection::new(mono(&x, -1))).unwrap();
    assert!(v.regular);
    let v = is_regular(&Connection::new(mono(&h2(), -2))).unwrap();
    assert!(!v.regular);
    assert!(v.witness_gauge.is_none());
    let v = is_regular(&Connection::new(mono(&e(2, 1, 0), -2))).unwrap();
    assert!(v.regular);
    assert_eq!(v.witness_gauge.unwrap().ramification(), 2);
}

#[test]
fn relative_regularity_examples() {
    let x = ConstMat::from_i64(&[&[1, 2], &[3, 4]]);
    let r = relative_regularity_check(&Connection::new(mono(&x, -1))).unwrap();
    assert!(r.verdict);
    let a = Connection::new(mono(&e(2, 0, 1), -2).truncate(6));
    let r = relative_regularity_check(&a).unwrap();
    assert!(r.verdict);
    assert!(replays(&r.input, &r.certificate, &r.final_form));
    let r = relative_regularity_check(&companion(3)).unwrap();
    assert!(r.verdict);
    let q = ConstMat::diag_i64(&[1, 2]);
    assert_eq!(r.input.mat.coeff(-3), &q + &e(2, 1, 0));
    assert!(replays(&r.input, &r.certificate, &r.final_form));
    assert_eq!(r.final_form.mat.coeff(-3), q);
    assert_eq!(r.final_form.mat.coeff(-2), q);
    let r = relative_regularity_check(&Connection::new(mono(&h2(), -2))).unwrap();
    assert!(!r.verdict);
}

#[test]
fn boalch_examples() {
    let z = Weight::zero(2);
    let r0 = ConstMat::diag_i64(&[1, 0]);
    let a = logarithmic(&(&mono(&r0, 0) + &mono(&e(2, 0, 1), 1)));
    let (b, w, r) = boalch_normalize(&z, &a).unwrap();
    assert!(w.is_identity());
    assert_eq!((b.clone(), r.clone()), (a.clone(), r0.clone()));
    let (t, _) = deligne_twist(&b, &r).unwrap();
    assert_eq!(t.mat, mono(&e(2, 0, 1), -1));

    let a = logarithmic(&(&mono(&r0, 0) + &mono(&e(2, 1, 0), 1)).truncate(8));
    let (b, w, _) = boalch_normalize(&z, &a).unwrap();
    assert!(replays(&a, &w, &b));
    assert!(b.mat.agrees_below(&mono(&r0, -1), b.trunc()));
    assert!(b.trunc() >= 6);

    let (b, w, _) = boalch_normalize(&z, &logarithmic(&mono(&r0, 0))).unwrap();
    assert!(w.is_identity());
    let (t, _) = deligne_twist(&b, &r0).unwrap();
    assert!(t.mat.is_zero());
    let irr = ConstMat::diag(&[ratio(1, 2), rat(0)]);
    let (_, w) = deligne_twist(&logarithmic(&mono(&irr, 0)), &irr).unwrap();
    assert!(w.is_identity());
    assert_eq!(boalch_normalize(&z, &Connection::new(mono(&h2(), -2))).unwrap_err(), Error::NotLogarithmic);
}

#[test]
fn borel_examples() {
    let z = Weight::zero(2);
    let nil = Connection::new(mono(&e(2, 1, 0), -2));
    let (b, w) = borel_reduce(&z, &nil, &Budget::default()).unwrap();
    assert!(w.is_identity());
    assert_eq!(b, nil);

    let d = Connection::new(mono(&h2(), -2));
    let (b, w) = borel_reduce(&z, &d, &Budget::default()).unwrap();
    assert_eq!(
        w.factors,
        vec![Factor::Const(ConstMat::from_i64(&[&[1, 1], &[1, -1]])), Factor::Cochar(vec![1, 0])]
    );
    let expect = &mono(&e(2, 1, 0), -3) + &mono(&(&e(2, 0, 1) + &ConstMat::diag_i64(&[1, 0])), -1);
    assert_eq!(b.mat, expect);
    assert!(is_borel_shaped(&b));
    assert_eq!(borel_reduce(&z, &Connection::new(mono(&h2(), -1)), &Budget::default()).unwrap_err(), Error::OrderTooLow(1));
}

#[test]
fn transport_examples() {
    let z = Weight::zero(2);
    let a = conn(&[(&e(2, 1, 0), -2), (&h2(), -1)], 8);
    assert!(nilpotency_transport_check(&z, &a, &MatSeries::identity(2)).unwrap());
    let g = cochar_matrix(&[0, 1]);
    let moved = a.gauge(&GaugeWord::single(Factor::Cochar(vec![0, 1]))).unwrap();
    assert!(theta_order(&z, &moved).unwrap() <= 2);
    assert!(nilpotency_transport_check(&z, &a, &g).unwrap());
}

#[test]
fn springer_examples() {
    let z = Weight::zero(2);
    let x = ConstMat::from_i64(&[&[1, 2], &[3, 4]]);
    let id = GaugeWord::identity();
    let log = Connection::new(mono(&x, -1).truncate(10));
    let d = springer_tangent_dim(&z, &log, &id, 3).unwrap();
    assert!((d as i64) < springer_bound(&z, 1));
    let irr = Connection::new(mono(&h2(), -2).truncate(10));
    let d = springer_tangent_dim(&z, &irr, &id, 3).unwrap();
    assert!(d < 12);
    assert_eq!(springer_bound(&z, 2), 12);
    assert_eq!(springer_tangent_dim(&z, &irr, &id, 0).unwrap(), 0);
    assert_eq!(springer_tangent_dim(&z, &irr, &id, 20).unwrap_err(), Error::WindowTooLarge(20));
    // resonant residue: ad eigenvalue −1 on E21 gives a pole direction
    let res = Connection::new(mono(&ConstMat::diag_i64(&[1, 0]), -1).truncate(10));
    assert_eq!(springer_tangent_dim(&z, &res, &id, 2).unwrap(), 1);
}

#[test]
fn levi_step_cross_terms() {
    // leading depth −2 data H + E12 + E21 has eigenvalues ±√2, so no Levi
    // conjugation can make it commute with S = H
    let w = Weight::from_i64(&[1, 0]);
    let a = conn(&[(&h2(), -2), (&e(2, 0, 1), -3), (&e(2, 1, 0), -1)], 6);
    assert!(matches!(reduce_semisimple_commute(&w, &a).unwrap_err(), Error::LeviSplitFailed(_)));
}

#[test]
fn semisimple_fractional_weight() {
    let w = Weight::new(vec![ratio(1, 2), rat(0)]);
    let a = conn(&[(&h2(), -2), (&e(2, 0, 1), -2), (&e(2, 1, 0), -1)], 6);
    let (b, word, s) = reduce_semisimple_commute(&w, &a).unwrap();
    assert_eq!(s, h2());
    assert!(replays(&a, &word, &b));
    for (_, x) in graded::components(&w, &b.mat) {
        assert!(s.bracket(&x).is_zero());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]
    #[test]
    fn borel_random_nilpotent_gl2(u in -3i64..=3, v in -3i64..=3, t in tail(2, -1, 4)) {
        // conjugate E21 by [[1,u],[v,1+uv]], which has determinant 1
        let g = ConstMat::from_i64(&[&[1, u], &[v, 1 + u * v]]);
        let p = e(2, 1, 0).conj(&g, &g.inverse().unwrap());
        let m = &mono(&p, -2) + &MatSeries::from_terms(2, t, 5);
        let a = Connection::new(m.truncate(5));
        match borel_reduce(&Weight::zero(2), &a, &Budget::default()) {
            Ok((b, w)) => {
                prop_assert!(replays(&a, &w, &b));
                prop_assert!(is_borel_shaped(&b));
                prop_assert_eq!(-b.mat.val(), 2);
            }
            Err(Error::SearchExhausted(_)) => {}
            Err(e) => prop_assert!(false, "{e:?}"),
        }
    }
}
