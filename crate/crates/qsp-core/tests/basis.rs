use std::collections::BTreeMap;

use qsp_core::ballot::{q_polynomial, Rule};
use qsp_core::basis::{
    build_diagram, club_basis, club_by_projection, heart, heart_fixed_points, heart_to_spade, is_positive_decomposition, r_matrices, spade,
    spade_fixed_points, spade_to_heart, tensor_heart_spade, Decomposer, DiagramKind,
};
use qsp_core::hecke::HeckeModule;
use qsp_core::paths::{eta, weight_le, Shape, Sign};
use qsp_core::quantum::{psi_bar, psi_iota, PsiVariant, UpsilonSeries};
use qsp_core::LaurentPoly;

fn shape(s: &str) -> Shape {
    s.parse().unwrap()
}

fn t(s: &str) -> LaurentPoly {
    s.parse().unwrap()
}

fn small_shapes(max: usize) -> Vec<Shape> {
    Shape::all_up_to(max)
}

#[test]
fn spade_example_in_v3_v3() {
    let s = shape("3,3");
    let v = spade(&s, &[-1, -1]).unwrap();
    let expect: BTreeMap<Vec<i32>, LaurentPoly> = [
        (vec![-1, -1], t("1")),
        (vec![1, -3], t("-q^-2")),
        (vec![1, 1], t("-q^-1")),
        (vec![-1, 1], t("-q^-2")),
        (vec![3, -1], t("q^-3")),
        (vec![1, -1], t("q^-5")),
        (vec![1, 3], t("q^-2")),
        (vec![3, 1], t("-q^-5")),
    ]
    .into_iter()
    .collect();
    let got: BTreeMap<Vec<i32>, LaurentPoly> = v.terms().map(|(k, c)| (k.clone(), c.clone())).collect();
    assert_eq!(got, expect);
}

#[test]
fn worked_diagram_in_three_blocks() {
    let d = build_diagram(&shape("3,4,4"), &[1, 0, -2]).unwrap();
    assert_eq!(d.arcs().len(), 2);
    assert_eq!(d.dashed().len(), 1);
    assert!(d.star().is_some());
    assert_eq!(d.ups().len(), 3);
    assert!(d.unpaired().is_some());
}

#[test]
fn spade_is_unitriangular_and_never_arcs_inside_a_block() {
    for s in small_shapes(6) {
        for k in s.weights() {
            let d = build_diagram(&s, &k).unwrap();
            let offsets = s.offsets();
            let block = |i: usize| offsets.iter().rposition(|&o| o <= i).unwrap();
            for &(a, b) in d.arcs() {
                assert_ne!(block(a), block(b), "{s} {k:?}");
            }
            let v = d.vector().unwrap();
            assert!(v.coeff(&k).is_one());
            for (l, c) in v.terms() {
                if l != &k {
                    assert!(weight_le(Sign::Minus, l, &k), "{s} {k:?} {l:?}");
                    assert!(c.in_negative_lattice());
                }
            }
        }
    }
}

#[test]
fn spade_and_club_are_fixed_by_the_coideal_involutions() {
    let ups = UpsilonSeries::solve(6).unwrap();
    for s in small_shapes(4) {
        for k in s.weights() {
            let v = spade(&s, &k).unwrap();
            assert_eq!(psi_iota(&v, Sign::Minus, &ups).unwrap(), v, "{s} {k:?}");
        }
        for (k, c) in club_basis(&s, &ups).unwrap() {
            assert_eq!(psi_iota(&c, Sign::Plus, &ups).unwrap(), c, "{s} {k:?}");
        }
    }
}

#[test]
fn heart_is_fixed_by_psi_minus() {
    for s in small_shapes(4) {
        for k in s.weights() {
            let v = heart(&s, &k).unwrap();
            assert_eq!(psi_bar(&v, PsiVariant::Minus).unwrap(), v, "{s} {k:?}");
        }
    }
}

#[test]
fn diagrams_agree_with_fixed_point_solves() {
    let ups = UpsilonSeries::solve(6).unwrap();
    for s in small_shapes(4) {
        let spades = spade_fixed_points(&s, &ups).unwrap();
        let hearts = heart_fixed_points(&s).unwrap();
        for k in s.weights() {
            assert_eq!(spades[&k], spade(&s, &k).unwrap(), "{s} {k:?}");
            assert_eq!(hearts[&k], heart(&s, &k).unwrap(), "{s} {k:?}");
        }
    }
}

#[test]
fn club_is_the_projection_of_the_site_basis() {
    let ups = UpsilonSeries::solve(6).unwrap();
    for s in small_shapes(5) {
        assert_eq!(club_by_projection(&s, &ups).unwrap(), club_basis(&s, &ups).unwrap(), "{s}");
    }
}

#[test]
fn club_in_two_sites() {
    let ups = UpsilonSeries::solve(4).unwrap();
    let s = shape("1,1");
    let clubs = club_basis(&s, &ups).unwrap();
    let c = &clubs[&vec![-1, 1]];
    assert!(c.coeff(&[-1, 1]).is_one());
    for (l, coef) in c.terms() {
        if l != &vec![-1, 1] {
            assert!(coef.in_negative_lattice());
        }
    }
    // The bottom of the upward order has nothing below it.
    let bottom = &clubs[&vec![-1, -1]];
    assert_eq!(bottom.len(), 1);
}

#[test]
fn club_pairs_dually_with_spade_and_matches_plus_kl() {
    let ups = UpsilonSeries::solve(6).unwrap();
    for s in small_shapes(4) {
        let r = r_matrices(&s, &ups).unwrap();
        assert!(r.pairing_is_identity().unwrap(), "{s}");
        assert!(r.upper.is_unitriangular(Sign::Minus, true), "{s}");
        assert!(r.lower.is_unitriangular(Sign::Plus, false), "{s}");
        let mut h = HeckeModule::new(s.total(), Sign::Plus);
        for k in s.weights() {
            for l in s.weights() {
                let (ek, el) = (eta(&s, &k).unwrap(), eta(&s, &l).unwrap());
                let p = if ek.order_le(&el, Sign::Plus).unwrap() { h.kl_poly(&ek, &el).unwrap() } else { LaurentPoly::zero() };
                assert_eq!(r.lower.entry(&k, &l), p, "{s} {k:?} {l:?}");
            }
        }
    }
}

#[test]
fn spade_coefficients_are_rule_two_polynomials() {
    for s in small_shapes(5) {
        for k in s.weights() {
            let v = spade(&s, &k).unwrap();
            let ek = eta(&s, &k).unwrap();
            for l in s.weights() {
                let el = eta(&s, &l).unwrap();
                let q = if el.order_le(&ek, Sign::Minus).unwrap() {
                    q_polynomial(&el, &ek, Rule::II, Sign::Minus, Some(&s)).unwrap()
                } else {
                    LaurentPoly::zero()
                };
                assert_eq!(v.coeff(&l), q, "{s} {k:?} {l:?}");
            }
        }
    }
}

#[test]
fn heart_spade_decompositions_are_positive() {
    for s in small_shapes(5) {
        let m = heart_to_spade(&s).unwrap();
        for (i, k) in s.weights().iter().enumerate() {
            assert!(m.get(i, i).is_one());
            for j in 0..m.dim() {
                if i != j {
                    assert!(m.get(i, j).in_negative_cone(), "{s} {k:?}");
                }
            }
        }
        let back = spade_to_heart(&s).unwrap();
        for (i, j, c) in back.nonzero() {
            assert!(if i == j { c.is_one() } else { c.in_negative_lattice() });
        }
    }
}

#[test]
fn heart_tensor_spade_is_positive() {
    for left in small_shapes(2) {
        for right in small_shapes(2) {
            let mut dec = Decomposer::new(&left.concat(&right), DiagramKind::Spade);
            for k in left.weights() {
                for kr in right.weights() {
                    let c = tensor_heart_spade(&left, &k, &right, &kr, &mut dec).unwrap();
                    let mut diag = k.clone();
                    diag.extend(&kr);
                    assert!(is_positive_decomposition(&diag, &c), "{left} {right} {k:?} {kr:?}: {c:?}");
                }
            }
        }
    }
}

#[test]
fn kl_polynomials_average_over_block_intervals() {
    use qsp_core::laurent::q_binomial;
    use qsp_core::paths::{zeta, BinaryPath};
    for s in small_shapes(6) {
        let n = s.total();
        let mut h = HeckeModule::new(n, Sign::Plus);
        let all = BinaryPath::all(n);
        for l in s.weights() {
            let (top, bottom) = (eta(&s, &l).unwrap(), zeta(&s, &l).unwrap());
            let scale: LaurentPoly = s.parts().iter().zip(&l).map(|(&m, &x)| q_binomial(m as i64, ((m as i32 - x) / 2) as i64)).product();
            for k in s.weights() {
                let target = eta(&s, &k).unwrap();
                let mut kl = |g: &qsp_core::paths::BinaryPath| {
                    if g.order_le(&target, Sign::Plus).unwrap() {
                        h.kl_poly(g, &target).unwrap()
                    } else {
                        LaurentPoly::zero()
                    }
                };
                let lhs = &kl(&top) * &scale;
                let mut rhs = LaurentPoly::zero();
                for g in &all {
                    if bottom.order_le(g, Sign::Plus).unwrap() && g.order_le(&top, Sign::Plus).unwrap() {
                        rhs += &LaurentPoly::q_pow(g.area() - bottom.area()) * &kl(g);
                    }
                }
                assert_eq!(lhs, rhs, "{s} {l:?} {k:?}");
            }
        }
    }
}
