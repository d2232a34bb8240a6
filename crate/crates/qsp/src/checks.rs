use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;

use qsp_core::ballot::{inversion_from, q_matrices, q_polynomial, QMatrices, Rule};
use qsp_core::basis::{
    build_diagram, club_basis, heart_to_spade, is_positive_decomposition, spade, spade_to_heart, tensor_heart_spade, Decomposer, Diagram,
    DiagramKind,
};
use qsp_core::coideal::{
    a000902, appendix_identity_one, appendix_identity_two, closed_form_parts, is_quantum_integer, leading_degree, psi_closed,
    psi_from_standard, psi_solve, spectrum, sum_at_one, sum_rule_one, y_matrix, y_on_diagram, y_on_standard, QFactor, QRatio,
};
use qsp_core::hecke::HeckeModule;
use qsp_core::paths::{eta, zeta};
use qsp_core::quantum::{psi_iota, UpsilonSeries};
use qsp_core::{BinaryPath, LaurentPoly, Result, Shape, Sign};

/// Result of one suite: cases examined and a description of each failure.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Outcome {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.checked > 0
    }

    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn absorb(&mut self, other: Outcome) {
        self.checked += other.checked;
        self.failures.extend(other.failures);
    }

    /// One line: `checked N, failed M` plus the first few failures.
    pub fn summary(&self) -> String {
        let mut s = format!("checked {}, failed {}", self.checked, self.failures.len());
        for f in self.failures.iter().take(3) {
            s.push_str("; ");
            s.push_str(f);
        }
        s
    }
}

/// Caches shared between shapes and suites: `Q^{I,-}` per path pair, one
/// Hecke module per length and sign, and the ballot tables per shape.
#[derive(Default)]
pub struct Oracles {
    rule_one: HashMap<(BinaryPath, BinaryPath), LaurentPoly>,
    hecke: HashMap<(usize, Sign), HeckeModule>,
    tables: HashMap<Shape, QMatrices>,
}

impl Oracles {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rule_one(&mut self, a: &BinaryPath, b: &BinaryPath) -> Result<LaurentPoly> {
        if let Some(q) = self.rule_one.get(&(a.clone(), b.clone())) {
            return Ok(q.clone());
        }
        let q = q_polynomial(a, b, Rule::I, Sign::Minus, None)?;
        self.rule_one.insert((a.clone(), b.clone()), q.clone());
        Ok(q)
    }

    /// `P^sign_{a,b}`, zero unless `a <=_sign b`.
    pub fn kl(&mut self, sign: Sign, a: &BinaryPath, b: &BinaryPath) -> Result<LaurentPoly> {
        if !a.order_le(b, sign)? {
            return Ok(LaurentPoly::zero());
        }
        self.hecke.entry((a.len(), sign)).or_insert_with(|| HeckeModule::new(a.len(), sign)).kl_poly(a, b)
    }

    /// Both ballot matrices of a shape, with `Q^{I,-}` drawn from the cache.
    pub fn q_tables(&mut self, shape: &Shape) -> Result<QMatrices> {
        if let Some(t) = self.tables.get(shape) {
            return Ok(t.clone());
        }
        let t = q_matrices(shape, &mut |a, b| self.rule_one(a, b))?;
        self.tables.insert(shape.clone(), t.clone());
        Ok(t)
    }
}

/// The two worked `Q` values.
pub fn q_examples() -> Result<Outcome> {
    let mut out = Outcome::default();
    let p = |s: &str| s.parse::<BinaryPath>();
    let q1 = q_polynomial(&p("--++-+")?, &p("++++++")?, Rule::I, Sign::Minus, None)?;
    let want1: LaurentPoly = "q^-13 + q^-11 + 2*q^-9 + q^-5".parse()?;
    out.expect(q1 == want1, || format!("rule I example gave {q1}"));
    let shape = Shape::uniform(2, 4)?;
    let q2 = q_polynomial(&p("-+-+-+-+")?, &p("++++++--")?, Rule::II, Sign::Minus, Some(&shape))?;
    let want2: LaurentPoly = "q^-3 + q^-5".parse()?;
    out.expect(q2 == want2, || format!("rule II example gave {q2}"));
    Ok(out)
}

/// `Σ_β Q^{I,-} Q^{II,-} = δ` on one shape.
pub fn inversion(shape: &Shape, tables: &QMatrices) -> Result<Outcome> {
    let report = inversion_from(shape, tables)?;
    let mut out = Outcome { checked: report.pairs_checked, failures: Vec::new() };
    for (a, g, s) in report.violations {
        out.failures.push(format!("{shape}: ({a}, {g}) sums to {s}"));
    }
    Ok(out)
}

/// Ballot route against Hecke route on one shape: `Q^{I,+} = P^+`,
/// `Q^{II,-}` as the interval sum of `P^-(-t^-1)`, and the product of the
/// two `R` matrices is the identity.
pub fn ballot_vs_hecke(shape: &Shape, (q1, q2): &QMatrices, oracles: &mut Oracles) -> Result<Outcome> {
    let weights = shape.weights();
    let paths: Vec<BinaryPath> = weights.iter().map(|k| eta(shape, k)).collect::<Result<_>>()?;
    let caps: Vec<BinaryPath> = weights.iter().map(|k| zeta(shape, k)).collect::<Result<_>>()?;
    let all = BinaryPath::all(shape.total());
    let mut out = Outcome::default();
    for (&(a, b), q) in q1 {
        // The plus polynomial is the minus one with the arguments swapped.
        let p = oracles.kl(Sign::Plus, &paths[b], &paths[a])?;
        out.expect(&p == q, || format!("{shape}: Q^I({}, {}) = {q}, P^+ = {p}", paths[a], paths[b]));
    }
    for (&(a, b), q) in q2 {
        let top = caps[a].min_path(&paths[b])?;
        let mut expect = LaurentPoly::zero();
        for g in &all {
            if paths[a].order_le(g, Sign::Minus)? && g.order_le(&top, Sign::Minus)? {
                let p = oracles.kl(Sign::Minus, g, &paths[b])?.negate_variable();
                expect += p.shift(g.area() - paths[a].area());
            }
        }
        out.expect(&expect == q, || format!("{shape}: Q^II({}, {}) = {q}, oracle {expect}", paths[a], paths[b]));
    }
    let n = paths.len();
    let mut lower = vec![vec![LaurentPoly::zero(); n]; n];
    for (k, row) in lower.iter_mut().enumerate() {
        for (l, e) in row.iter_mut().enumerate() {
            *e = oracles.kl(Sign::Plus, &paths[k], &paths[l])?;
        }
    }
    for l in 0..n {
        for l2 in 0..n {
            let mut s = LaurentPoly::zero();
            for (k, row) in lower.iter().enumerate() {
                if let Some(u) = q2.get(&(k, l2)) {
                    s += &row[l] * u;
                }
            }
            let ok = if l == l2 { s.is_one() } else { s.is_zero() };
            out.expect(ok, || format!("{shape}: R product ({:?}, {:?}) = {s}", weights[l], weights[l2]));
        }
    }
    Ok(out)
}

/// The eight-term ♠ expansion in `V_3 ⊗ V_3`.
pub fn spade_example() -> Result<Outcome> {
    let shape: Shape = "3,3".parse()?;
    let v = spade(&shape, &[-1, -1])?;
    let want: [(&[i32], &str); 8] = [
        (&[-1, -1], "1"),
        (&[1, -3], "-q^-2"),
        (&[1, 1], "-q^-1"),
        (&[-1, 1], "-q^-2"),
        (&[3, -1], "q^-3"),
        (&[1, -1], "q^-5"),
        (&[1, 3], "q^-2"),
        (&[3, 1], "-q^-5"),
    ];
    let mut out = Outcome::default();
    out.expect(v.len() == want.len(), || format!("{} terms", v.len()));
    for (k, c) in want {
        let c: LaurentPoly = c.parse()?;
        let got = v.coeff(k);
        out.expect(got == c, || format!("coefficient of {k:?} is {got}, expected {c}"));
    }
    Ok(out)
}

/// `ψ^ι_-` fixes every ♠ vector and `ψ^ι_+` every ♣ vector.
pub fn coideal_bar_fixes(max_sites: usize) -> Result<Outcome> {
    let ups = UpsilonSeries::solve(2 * max_sites + 2)?;
    let mut out = Outcome::default();
    for s in Shape::all_up_to(max_sites) {
        for k in s.weights() {
            let v = spade(&s, &k)?;
            out.expect(psi_iota(&v, Sign::Minus, &ups)? == v, || format!("spade {s} {k:?}"));
        }
        for (k, c) in club_basis(&s, &ups)? {
            out.expect(psi_iota(&c, Sign::Plus, &ups)? == c, || format!("club {s} {k:?}"));
        }
    }
    Ok(out)
}

/// ♥ → ♠ and ♥ ⊗ ♠ → ♠ coefficients: diagonal 1, the rest in `q^-1 N[q^-1]`.
pub fn positivity(max_sites: usize) -> Result<Outcome> {
    let mut out = Outcome::default();
    for s in Shape::all_up_to(max_sites) {
        let m = heart_to_spade(&s)?;
        let w = s.weights();
        for i in 0..m.dim() {
            for j in 0..m.dim() {
                let c = m.get(i, j);
                let ok = if i == j { c.is_one() } else { c.in_negative_cone() };
                out.expect(ok, || format!("heart {s} {:?} -> {:?}: {c}", w[i], w[j]));
            }
        }
        let back = spade_to_heart(&s)?;
        let product = m.multiply(&back)?;
        out.expect(product.is_identity(), || format!("{s}: transitions are not inverse"));
    }
    for total in 2..=max_sites {
        for left_total in 1..total {
            for left in Shape::all_up_to(left_total).into_iter().filter(|s| s.total() == left_total) {
                for right in Shape::all_up_to(total - left_total).into_iter().filter(|s| s.total() == total - left_total) {
                    let mut dec = Decomposer::new(&left.concat(&right), DiagramKind::Spade);
                    for k in left.weights() {
                        for kr in right.weights() {
                            let c = tensor_heart_spade(&left, &k, &right, &kr, &mut dec)?;
                            let mut diag = k.clone();
                            diag.extend(&kr);
                            out.expect(is_positive_decomposition(&diag, &c), || format!("{left}|{right} {k:?} {kr:?}"));
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Diagram rule for `Y` against the standard action through the ♠
/// transition; every entry a quantum integer.
pub fn y_consistency(shape: &Shape) -> Result<Outcome> {
    let mut out = Outcome::default();
    let mut dec = Decomposer::new(shape, DiagramKind::Spade);
    for k in shape.weights() {
        let d = build_diagram(shape, &k)?;
        let lhs = dec.decompose(&y_on_standard(&spade(shape, &k)?)?)?;
        let rhs = y_on_diagram(&d);
        out.expect(lhs == rhs, || format!("{shape} {k:?}"));
        out.expect(rhs.values().all(is_quantum_integer), || format!("{shape} {k:?}: entry not a quantum integer"));
    }
    Ok(out)
}

pub fn y_consistency_up_to(max_sites: usize) -> Result<Outcome> {
    let mut out = Outcome::default();
    for s in Shape::all_up_to(max_sites) {
        out.absorb(y_consistency(&s)?);
    }
    Ok(out)
}

/// The shapes whose spectrum the suites check.
pub fn spectrum_shapes(max_ones: usize) -> Vec<Shape> {
    let mut v: Vec<Shape> = (1..=max_ones).filter_map(|n| Shape::ones(n).ok()).collect();
    v.extend(["2,2", "2,2,2", "3,3"].iter().filter_map(|s| s.parse().ok()));
    v
}

/// Spectrum of `Y` at `q0` against `{M_j}`, plus the `(2,2)` table.
pub fn spectra(shapes: &[Shape], q0: &BigRational) -> Result<Outcome> {
    let mut out = Outcome::default();
    for s in shapes {
        let r = spectrum(s, q0)?;
        out.expect(r.passed(), || format!("{s}: predicted {:?}, observed {:?}", r.predicted, r.observed));
    }
    let r = spectrum(&"2,2".parse()?, q0)?;
    let want: BTreeMap<i64, usize> = [(5, 1), (3, 2), (1, 3), (-1, 2), (-3, 1)].into_iter().collect();
    out.expect(r.predicted == want && r.observed == want, || format!("(2,2) multiplicities {:?}", r.observed));
    Ok(out)
}

/// The shapes on which the three `Ψ` routes are compared.
pub fn psi_shapes(max_ones: usize, max_part: u32, max_len: usize) -> Vec<Shape> {
    let mut v: Vec<Shape> = (1..=max_ones).filter_map(|n| Shape::ones(n).ok()).collect();
    for m in 2..=max_part {
        for n in 1..=max_len {
            v.extend(Shape::uniform(m, n).ok());
        }
    }
    v
}

/// Linear solve, projection of the site vector and closed form agree;
/// components are positive, bar symmetric, with leading term `q^{d_k}`.
pub fn psi_agreement(shapes: &[Shape]) -> Result<Outcome> {
    let mut out = Outcome::default();
    for s in shapes {
        let a = psi_solve(s)?;
        let b = psi_from_standard(s)?;
        let c = psi_closed(s)?;
        out.expect(a == b, || format!("{s}: solve and projection differ"));
        out.expect(a == c, || format!("{s}: solve and closed form differ"));
        out.expect(a.is_top_eigenvector(&y_matrix(s)?), || format!("{s}: not an eigenvector for [L+1]"));
        for k in s.weights() {
            let p = a.get(&k);
            let d = leading_degree(s, &k)?;
            let ok = p.is_bar_symmetric() && p.has_nonnegative_coeffs() && p.degree() == Some(d) && p.leading_coeff() == BigInt::from(1);
            out.expect(ok, || format!("{s} {k:?}: component {p}"));
        }
    }
    out.absorb(worked_closed_form()?);
    Ok(out)
}

/// The closed-form pieces of the twenty-site worked diagram.
pub fn worked_closed_form() -> Result<Outcome> {
    let sites: Vec<i8> = "++--+++-+----+----++".chars().map(|c| if c == '+' { 1 } else { -1 }).collect();
    let d = Diagram::from_sites(&Shape::ones(20)?, &sites, DiagramKind::Spade)?;
    let p = closed_form_parts(&d);
    let ratio = |num: &[i64], den: &[i64]| QRatio {
        num: num.iter().map(|&n| QFactor::Int(n)).collect(),
        den: den.iter().map(|&n| QFactor::Int(n)).collect(),
    };
    let mut n9 = QRatio { num: [1, 2, 4].map(QFactor::PowSum).to_vec(), den: vec![] };
    n9.num.extend((7..=11).map(QFactor::PowSum));
    let pieces = [
        ("N5", &p.n5, ratio(&[19], &[4])),
        ("N6", &p.n6, ratio(&[13], &[14])),
        ("N7", &p.n7, ratio(&[4], &[5, 6])),
        ("N8", &p.n8, ratio(&[], &[3])),
        ("N9", &p.n9, n9),
        ("N10", &p.n10, ratio(&[3, 4, 6, 7, 8, 9, 10, 11], &[])),
    ];
    let mut out = Outcome::default();
    out.expect(p.n2 == 9, || format!("N2 = {}", p.n2));
    for (name, got, want) in pieces {
        out.expect(got.to_rational_fn()? == want.to_rational_fn()?, || format!("{name} differs"));
    }
    Ok(out)
}

/// The q = 1 table of sums.
pub const TABLE: [(u32, &[i64]); 3] = [(1, &[3, 10, 38, 156]), (2, &[8, 92, 1408]), (3, &[21, 832, 52736])];

/// Table entries, the Pell rule for `m <= max_m` and A000902 for `L <= max_len`.
pub fn sum_rules(max_m: u32, max_len: usize) -> Result<Outcome> {
    let mut out = Outcome::default();
    for (m, row) in TABLE {
        for (i, &v) in row.iter().enumerate() {
            let got = sum_at_one(m, i + 1)?;
            out.expect(got == BigInt::from(v), || format!("s({m},{}) = {got}", i + 1));
        }
    }
    for m in 1..=max_m {
        let (got, want) = (sum_at_one(m, 1)?, sum_rule_one(m as usize));
        out.expect(got == want, || format!("s({m},1) = {got}, Pell rule {want}"));
    }
    for l in 1..=max_len {
        let (got, want) = (sum_at_one(1, l)?, a000902(l + 1));
        out.expect(got == want, || format!("s(1,{l}) = {got}, A000902 {want}"));
    }
    Ok(out)
}

/// Both appendix identities for tuples of length `<= max_len` with entries
/// in `0..=max_entry`.
pub fn appendix(max_len: usize, max_entry: i64) -> Result<Outcome> {
    let mut out = Outcome::default();
    for len in 1..=max_len {
        let tuples = tuples(len, max_entry);
        for n in &tuples {
            for m in &tuples {
                out.expect(appendix_identity_one(n, m)?.is_zero(), || format!("first identity at {n:?} {m:?}"));
            }
        }
        for m in &tuples {
            for x in 0..=max_entry {
                for z in 0..=max_entry {
                    out.expect(appendix_identity_two(m, x, z)?.is_zero(), || format!("second identity at {m:?} {x} {z}"));
                }
            }
        }
    }
    Ok(out)
}

fn tuples(len: usize, max_entry: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|p: Vec<i64>| {
                (0..=max_entry).map(move |v| {
                    let mut p = p.clone();
                    p.push(v);
                    p
                })
            })
            .collect();
    }
    out
}

/// Inversion and ballot-vs-Hecke over every shape up to `max_sites`.
pub fn ballot_suite(max_sites: usize, oracles: &mut Oracles) -> Result<(Outcome, Outcome)> {
    let (mut inv, mut rh) = (Outcome::default(), Outcome::default());
    for s in Shape::all_up_to(max_sites) {
        let tables = oracles.q_tables(&s)?;
        inv.absorb(inversion(&s, &tables)?);
        rh.absorb(ballot_vs_hecke(&s, &tables, oracles)?);
    }
    Ok((inv, rh))
}
