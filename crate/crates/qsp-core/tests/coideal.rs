use num_bigint::BigInt;
use num_rational::BigRational;

use qsp_core::basis::{build_diagram, spade, Decomposer, Diagram, DiagramKind};
use qsp_core::coideal::{
    a000902, appendix_identity_one, appendix_identity_two, chain_component, closed_form_parts, is_generic_point, is_quantum_integer,
    psi_closed, psi_from_standard, psi_solve, spectrum, sum_at_one, sum_rule_one, y_components, y_matrix, y_on_diagram, y_on_standard,
    QFactor, QRatio,
};
use qsp_core::laurent::q_pow_sum;
use qsp_core::paths::Shape;
use qsp_core::quantum::{y_action, Basis, TensorVector};
use qsp_core::LaurentPoly;

fn shape(s: &str) -> Shape {
    s.parse().unwrap()
}

fn ints(ns: &[i64]) -> QRatio {
    QRatio { num: ns.iter().map(|&n| QFactor::Int(n)).collect(), den: vec![] }
}

fn same_value(a: &QRatio, b: &QRatio) -> bool {
    a.to_rational_fn().unwrap() == b.to_rational_fn().unwrap()
}

#[test]
fn standard_action_matches_the_coproduct() {
    for s in ["1,1,1", "1,1,1,1", "2,1", "2,2", "3,1"] {
        let s = shape(s);
        for k in s.weights() {
            let v = TensorVector::basis_vector(&s, Basis::Dual, &k).unwrap();
            assert_eq!(y_on_standard(&v).unwrap(), y_action(&v), "{s} {k:?}");
        }
    }
}

#[test]
fn diagram_action_matches_standard_action() {
    for s in Shape::all_up_to(6) {
        let mut dec = Decomposer::new(&s, DiagramKind::Spade);
        for k in s.weights() {
            let d = build_diagram(&s, &k).unwrap();
            let lhs = dec.decompose(&y_on_standard(&spade(&s, &k).unwrap()).unwrap()).unwrap();
            let rhs = y_on_diagram(&d);
            assert_eq!(lhs, rhs, "{s} {k:?}");
            assert!(rhs.values().all(is_quantum_integer));
        }
    }
}

#[test]
fn worked_diagram_action() {
    let d = build_diagram(&shape("3,4,4"), &[1, 0, -2]).unwrap();
    let terms = y_components(&d);
    let live: Vec<usize> = terms.iter().filter(|t| t.result.is_some()).map(|t| t.index).collect();
    assert_eq!(live, [2, 3, 4]);
    assert_eq!(terms[0].result, None);
}

#[test]
fn diagram_action_without_up_arrows() {
    // Only arcs: Y fixes the diagram.
    let s = shape("1,1,1,1");
    let d = Diagram::from_sites(&s, &[-1, 1, -1, 1], DiagramKind::Spade).unwrap();
    let y = y_on_diagram(&d);
    assert_eq!(y.len(), 1);
    assert!(y[&vec![-1, 1, -1, 1]].is_one());
    // A star and no unpaired arrow: Y kills it.
    let d = Diagram::from_sites(&shape("1,1,1"), &[-1, 1, -1], DiagramKind::Spade).unwrap();
    assert!(y_on_diagram(&d).is_empty());
}

#[test]
fn spectrum_of_small_shapes() {
    let q0 = BigRational::from_integer(BigInt::from(2));
    assert!(is_generic_point(&q0, 25).unwrap());
    for s in ["2,2", "1,1,1,1", "2,1,1", "3,1"] {
        let r = spectrum(&shape(s), &q0).unwrap();
        assert!(r.passed(), "{s}: {r:?}");
    }
}

#[test]
fn psi_routes_agree() {
    let mut shapes: Vec<Shape> = (1..=6).map(|n| Shape::ones(n).unwrap()).collect();
    shapes.extend(["2,2", "2,2,2", "3,3", "2,1,3", "3,1"].map(shape));
    for s in shapes {
        let a = psi_solve(&s).unwrap();
        let b = psi_from_standard(&s).unwrap();
        let c = psi_closed(&s).unwrap();
        assert_eq!(a, b, "{s}");
        assert_eq!(a, c, "{s}");
        assert!(a.is_top_eigenvector(&y_matrix(&s).unwrap()));
        assert!(a.get(&s.lowest_weight()).is_one());
        for (k, p) in &a.components {
            assert!(p.is_bar_symmetric() && p.has_nonnegative_coeffs(), "{s} {k:?}");
            let d = qsp_core::coideal::leading_degree(&s, k).unwrap();
            assert_eq!(p.degree(), Some(d), "{s} {k:?}");
            assert_eq!(p.leading_coeff(), BigInt::from(1));
        }
    }
}

#[test]
fn psi_along_the_chain() {
    for n in 1..=7usize {
        let s = Shape::ones(n).unwrap();
        let psi = psi_solve(&s).unwrap();
        for i in 1..=n + 1 {
            let k: Vec<i32> = (0..n).map(|j| if j < n + 1 - i { 1 } else { -1 }).collect();
            assert_eq!(psi.get(&k), chain_component(n, i).unwrap(), "{n} {i}");
        }
    }
}

#[test]
fn closed_form_worked_example() {
    let sites: Vec<i8> = "++--+++-+----+----++".chars().map(|c| if c == '+' { 1 } else { -1 }).collect();
    let d = Diagram::from_sites(&Shape::ones(20).unwrap(), &sites, DiagramKind::Spade).unwrap();
    assert_eq!(d.render(), "^|^|(|(|)|)|^|(|)|{|}|{|(|)|}|*|(|(|)|)");
    let p = closed_form_parts(&d);
    assert_eq!(p.n2, 9);
    let ratio = |num: &[i64], den: &[i64]| QRatio {
        num: num.iter().map(|&n| QFactor::Int(n)).collect(),
        den: den.iter().map(|&n| QFactor::Int(n)).collect(),
    };
    assert!(same_value(&p.n5, &ratio(&[19], &[4])));
    assert!(same_value(&p.n6, &ratio(&[13], &[14])));
    assert!(same_value(&p.n7, &ratio(&[4], &[5, 6])));
    assert!(same_value(&p.n8, &ratio(&[], &[3])));
    assert!(same_value(&p.n10, &ints(&[3, 4, 6, 7, 8, 9, 10, 11])));
    let mut n9 = QRatio { num: [1, 2, 4].map(QFactor::PowSum).to_vec(), den: vec![] };
    n9.num.extend((7..=11).map(QFactor::PowSum));
    assert!(same_value(&p.n9, &n9));
}

#[test]
fn top_component_on_sites() {
    for n in 1..=6usize {
        let s = Shape::ones(n).unwrap();
        let expect: LaurentPoly = (1..=n as i64).map(q_pow_sum).product();
        assert_eq!(psi_closed(&s).unwrap().get(&s.highest_weight()), expect);
    }
}

#[test]
fn table_of_sums() {
    let table: [(u32, &[i64]); 3] = [(1, &[3, 10, 38, 156]), (2, &[8, 92, 1408]), (3, &[21, 832, 52736])];
    for (m, row) in table {
        for (l, &v) in row.iter().enumerate() {
            assert_eq!(sum_at_one(m, l + 1).unwrap(), BigInt::from(v), "m={m} L={}", l + 1);
        }
    }
    // The symbolic route agrees at q = 1.
    assert_eq!(psi_solve(&shape("2,2")).unwrap().sum_at_one(), BigInt::from(92));
}

#[test]
fn first_sum_rule() {
    for m in 1..=12u32 {
        assert_eq!(sum_at_one(m, 1).unwrap(), sum_rule_one(m as usize), "m={m}");
    }
}

#[test]
fn second_sum_rule() {
    for l in 1..=10usize {
        assert_eq!(sum_at_one(1, l).unwrap(), a000902(l + 1), "L={l}");
    }
}

#[test]
fn appendix_identities() {
    let vals = 0..=2i64;
    for k in 1..=3usize {
        let tuples = tuples(k, vals.clone());
        for n in &tuples {
            for m in &tuples {
                assert!(appendix_identity_one(n, m).unwrap().is_zero(), "{n:?} {m:?}");
            }
        }
        for m in &tuples {
            for x in vals.clone() {
                for z in vals.clone() {
                    assert!(appendix_identity_two(m, x, z).unwrap().is_zero(), "{m:?} {x} {z}");
                }
            }
        }
    }
}

fn tuples(k: usize, vals: std::ops::RangeInclusive<i64>) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|p: Vec<i64>| {
                vals.clone().map(move |v| {
                    let mut p = p.clone();
                    p.push(v);
                    p
                })
            })
            .collect();
    }
    out
}

#[test]
fn quantum_integer_entries_of_y() {
    for s in ["2,2", "1,1,1", "3,2"] {
        let y = y_matrix(&shape(s)).unwrap();
        assert!(y.nonzero().all(|(_, _, e)| is_quantum_integer(e)));
    }
}
