use qsp_core::ballot::{enumerate_configs, q_polynomial, verify_inversion, Rule};
use qsp_core::hecke::HeckeModule;
use qsp_core::paths::{eta, zeta, BinaryPath, Shape, Sign};
use qsp_core::LaurentPoly;

fn p(s: &str) -> BinaryPath {
    s.parse().unwrap()
}

fn t(s: &str) -> LaurentPoly {
    s.parse().unwrap()
}

#[test]
fn rule_one_example_has_five_configurations() {
    let (a, b) = (p("--++-+"), p("++++++"));
    let confs = enumerate_configs(&a, &b, Rule::I, Sign::Minus, None).unwrap();
    assert_eq!(confs.len(), 5);
    let q = q_polynomial(&a, &b, Rule::I, Sign::Minus, None).unwrap();
    assert_eq!(q, t("q^-5 + 2*q^-9 + q^-11 + q^-13"));
}

#[test]
fn rule_two_example_has_two_configurations() {
    let shape = Shape::uniform(2, 4).unwrap();
    let (a, b) = (p("-+-+-+-+"), p("++++++--"));
    let confs = enumerate_configs(&a, &b, Rule::II, Sign::Minus, Some(&shape)).unwrap();
    assert_eq!(confs.len(), 2);
    let q = q_polynomial(&a, &b, Rule::II, Sign::Minus, Some(&shape)).unwrap();
    assert_eq!(q, t("q^-3 + q^-5"));
}

#[test]
fn plus_sign_is_the_transpose() {
    let (a, b) = (p("--++-+"), p("++++++"));
    for rule in [Rule::I, Rule::II] {
        let minus = q_polynomial(&a, &b, rule, Sign::Minus, None).unwrap();
        let plus = q_polynomial(&b, &a, rule, Sign::Plus, None).unwrap();
        assert_eq!(minus, plus);
    }
}

#[test]
fn rule_one_matches_plus_kl_polynomials() {
    for n in 1..=5 {
        let mut h = HeckeModule::new(n, Sign::Plus);
        let paths = BinaryPath::all(n);
        for a in &paths {
            for b in &paths {
                if a.order_le(b, Sign::Plus).unwrap() {
                    let q = q_polynomial(a, b, Rule::I, Sign::Plus, None).unwrap();
                    assert_eq!(q, h.kl_poly(a, b).unwrap(), "{a} {b}");
                }
            }
        }
    }
}

#[test]
fn rule_two_with_p_domains_matches_minus_kl_polynomials() {
    // Q^II(α, β) = Σ_γ t^{|γ|-|α|} P^-_{γ,β}(-t^-1) over α <= γ <= min(ζ(k), β).
    for shape in [Shape::new(vec![2, 2]).unwrap(), Shape::new(vec![3, 1]).unwrap(), Shape::new(vec![2, 1, 2]).unwrap()] {
        let n = shape.total();
        let mut h = HeckeModule::new(n, Sign::Minus);
        for k in shape.weights() {
            let a = eta(&shape, &k).unwrap();
            let cap = zeta(&shape, &k).unwrap();
            for l in shape.weights() {
                let b = eta(&shape, &l).unwrap();
                if !a.order_le(&b, Sign::Minus).unwrap() {
                    continue;
                }
                let top = cap.min_path(&b).unwrap();
                let mut expect = LaurentPoly::zero();
                for g in BinaryPath::all(n) {
                    if a.order_le(&g, Sign::Minus).unwrap() && g.order_le(&top, Sign::Minus).unwrap() {
                        let pm = h.kl_poly(&g, &b).unwrap().negate_variable();
                        expect += pm.shift(g.area() - a.area());
                    }
                }
                let q = q_polynomial(&a, &b, Rule::II, Sign::Minus, Some(&shape)).unwrap();
                assert_eq!(q, expect, "{shape} {a} {b}");
            }
        }
    }
}

#[test]
fn inversion_small_shapes() {
    for shape in ["1,1,1,1", "2,2", "3,1,2"] {
        let r = verify_inversion(&shape.parse().unwrap()).unwrap();
        assert!(r.passed(), "{shape}: {:?}", r.violations);
        assert!(r.pairs_checked > 0);
    }
}

#[test]
fn rendering_marks_every_square() {
    let (a, b) = (p("--++-+"), p("++++++"));
    for c in enumerate_configs(&a, &b, Rule::I, Sign::Minus, None).unwrap() {
        let art = c.render(6);
        let squares: usize = c.strips.iter().map(|s| s.cells.len()).sum();
        assert_eq!(art.chars().filter(|ch| ch.is_ascii_alphanumeric()).count(), squares);
    }
}
