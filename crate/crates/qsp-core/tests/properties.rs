//! Property tests for the algebraic invariants.

use proptest::prelude::*;

use qsp_core::hecke::{HeckeModule, ModuleVector};
use qsp_core::laurent::{gcd, q_binomial, quantum_factorial, quantum_int};
use qsp_core::paths::{eta, weight_le, zeta, BinaryPath, Shape, Sign};
use qsp_core::{LaurentPoly, RationalFn};

fn poly() -> impl Strategy<Value = LaurentPoly> {
    (-4i64..4, prop::collection::vec(-5i64..=5, 0..5))
        .prop_map(|(low, cs)| LaurentPoly::from_terms(cs.into_iter().enumerate().map(|(i, c)| (low + i as i64, c))))
}

fn nonzero_poly() -> impl Strategy<Value = LaurentPoly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn shape() -> impl Strategy<Value = Shape> {
    prop::collection::vec(1u32..=3, 1..=3).prop_map(|p| Shape::new(p).unwrap())
}

fn path(n: usize) -> impl Strategy<Value = BinaryPath> {
    (0u32..(1 << n)).prop_map(move |c| BinaryPath::from_code(c, n))
}

fn sign() -> impl Strategy<Value = Sign> {
    prop_oneof![Just(Sign::Plus), Just(Sign::Minus)]
}

proptest! {
    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &LaurentPoly::one(), a.clone());
    }

    #[test]
    fn bar_is_a_ring_involution(a in poly(), b in poly()) {
        prop_assert_eq!(a.bar().bar(), a.clone());
        prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
        prop_assert_eq!((&a + &b).bar(), &a.bar() + &b.bar());
    }

    #[test]
    fn exact_division_inverts_multiplication(a in poly(), b in nonzero_poly()) {
        prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
    }

    #[test]
    fn text_round_trip(a in poly()) {
        let back: LaurentPoly = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn gcd_divides_both(a in nonzero_poly(), b in nonzero_poly(), c in nonzero_poly()) {
        let (x, y) = (&a * &c, &b * &c);
        let g = gcd(&x, &y);
        prop_assert!(x.exact_div(&g).is_ok());
        prop_assert!(y.exact_div(&g).is_ok());
        prop_assert!(g.exact_div(&gcd(&c, &c)).is_ok());
    }

    #[test]
    fn rational_functions_form_a_field(a in nonzero_poly(), b in nonzero_poly(), c in nonzero_poly()) {
        let x = RationalFn::new(a.clone(), b.clone()).unwrap();
        let y = RationalFn::new(c.clone(), a.clone()).unwrap();
        prop_assert_eq!(&(&x * &y) / &y, x.clone());
        prop_assert_eq!(&(&x + &y) - &y, x.clone());
        prop_assert_eq!(x.bar().bar(), x);
    }

    #[test]
    fn quantum_integers_add(a in -8i64..8, b in -8i64..8) {
        prop_assert_eq!(quantum_int(a + b), quantum_int(a).shift(b) + quantum_int(b).shift(-a));
        prop_assert!(quantum_int(a).is_bar_symmetric());
    }

    #[test]
    fn binomials_are_factorial_ratios(n in 0i64..9, k in 0i64..9) {
        prop_assume!(k <= n);
        let ratio = quantum_factorial(n).unwrap()
            .exact_div(&(quantum_factorial(k).unwrap() * quantum_factorial(n - k).unwrap()))
            .unwrap();
        prop_assert_eq!(q_binomial(n, k), ratio);
    }

    #[test]
    fn area_counts_down_steps_from_the_right(p in path(10)) {
        let n = p.len() as i64;
        let brute: i64 = p.steps().iter().enumerate().filter(|(_, &s)| s < 0).map(|(i, _)| n - i as i64).sum();
        prop_assert_eq!(p.area(), brute);
    }

    #[test]
    fn weight_order_matches_path_order(s in shape(), sg in sign(), a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>()) {
        let w = s.weights();
        let (k, l) = (a.get(&w), b.get(&w));
        let (pk, pl) = (eta(&s, k).unwrap(), eta(&s, l).unwrap());
        prop_assert_eq!(weight_le(sg, k, l), pk.order_le(&pl, sg).unwrap());
    }

    #[test]
    fn path_order_is_a_partial_order(a in path(6), b in path(6), sg in sign()) {
        prop_assert!(a.order_le(&a, sg).unwrap());
        if a.order_le(&b, sg).unwrap() && b.order_le(&a, sg).unwrap() {
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn hecke_relations(p in path(5), sg in sign()) {
        let h = HeckeModule::new(5, sg);
        let v = ModuleVector::basis(&p);
        let t = |s: usize, w: &ModuleVector| h.t_action(s, w).unwrap();
        let step = LaurentPoly::q_pow(1) - LaurentPoly::q_pow(-1);
        for s in 1..=5 {
            // T^2 = (t - t^-1) T + 1
            let lhs = t(s, &t(s, &v));
            let rhs = t(s, &v).scaled(&step).plus(&v);
            prop_assert_eq!(lhs, rhs);
            prop_assert_eq!(h.t_inverse_action(s, &t(s, &v)).unwrap(), v.clone());
        }
        for s in 1..4 {
            prop_assert_eq!(t(s, &t(s + 1, &t(s, &v))), t(s + 1, &t(s, &t(s + 1, &v))));
        }
        for s in 1..4 {
            for r in s + 2..=5 {
                prop_assert_eq!(t(s, &t(r, &v)), t(r, &t(s, &v)));
            }
        }
        // The type B braid relation between the last two generators.
        let lhs = t(4, &t(5, &t(4, &t(5, &v))));
        let rhs = t(5, &t(4, &t(5, &t(4, &v))));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn bar_is_an_involution_on_the_module(p in path(5), sg in sign()) {
        let mut h = HeckeModule::new(5, sg);
        let v = ModuleVector::basis(&p);
        let once = h.bar(&v);
        prop_assert_eq!(h.bar(&once), v);
    }

    #[test]
    fn kl_basis_is_bar_fixed(p in path(5), sg in sign()) {
        let mut h = HeckeModule::new(5, sg);
        let c = h.kl_basis(&p).unwrap();
        prop_assert_eq!(h.bar(&c), c.clone());
        prop_assert!(c.coeff(&p).is_one());
        for (code, coef) in c.terms() {
            if code != p.code() {
                prop_assert!(coef.in_negative_lattice());
            }
        }
    }
}

#[test]
fn interval_sum_is_a_binomial() {
    for m in 1..=8u32 {
        let s = Shape::new(vec![m]).unwrap();
        for l in s.weights() {
            let (top, bottom) = (eta(&s, &l).unwrap(), zeta(&s, &l).unwrap());
            let mut sum = LaurentPoly::zero();
            for g in BinaryPath::all(m as usize) {
                if bottom.order_le(&g, Sign::Plus).unwrap() && g.order_le(&top, Sign::Plus).unwrap() {
                    sum += LaurentPoly::q_pow(2 * g.area() - top.area() - bottom.area());
                }
            }
            assert_eq!(sum, q_binomial(m as i64, ((m as i32 - l[0]) / 2) as i64), "m={m} l={l:?}");
        }
    }
}
