//! The coideal generator `Y`, its eigensystem on the ♠ basis, and the top
//! eigenvector `Ψ`.
//!
//! `Y` acts on diagrams by quantum-integer combinations of other diagrams,
//! so its matrix in the ♠ basis has quantum-integer entries and can be read
//! off combinatorially. The eigenvalues are `[N_k]` for a diagram statistic
//! `N_k`. The eigenvector `Ψ` for the largest eigenvalue `[L+1]` is computed
//! three ways: a linear solve on the ♠ matrix, the ♠ decomposition of an
//! explicit standard-basis eigenvector `Ψ^0`, and a closed product formula.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::basis::{build_diagram, Decomposer, Diagram, DiagramKind, TransitionMatrix};
use crate::laurent::{q_binomial, q_pow_sum, quantum_int, LaurentPoly, RationalFn};
use crate::linalg;
use crate::paths::{kappa, Shape, Weight};
use crate::quantum::{lift_sorted, project_pi, Basis, TensorVector};
use crate::{Error, Result};

/// `Y` on dual vectors. On `V_1^{⊗N}`:
/// `Y(v^κ) = Σ_i q^{d_{i-1}} v^{κ with site i flipped} + q^{d_N} v^κ`, with
/// `d_i` the partial sums of `κ`. Other shapes go through the sorted lift
/// and the projection.
pub fn y_on_standard(v: &TensorVector) -> Result<TensorVector> {
    if v.basis() != Basis::Dual {
        return Err(Error::InvalidShape(String::from("Y is defined here on dual vectors")));
    }
    if !v.shape().is_all_ones() {
        return project_pi(&y_on_sites(&lift_sorted(v)?), v.shape());
    }
    Ok(y_on_sites(v))
}

fn y_on_sites(v: &TensorVector) -> TensorVector {
    let mut out = TensorVector::zero(v.shape(), Basis::Dual);
    for (kap, c) in v.terms() {
        let mut d = 0i64;
        let mut flipped = kap.clone();
        for i in 0..kap.len() {
            flipped[i] = -kap[i];
            out.add_term(&flipped, &c.shift(d));
            flipped[i] = kap[i];
            d += kap[i] as i64;
        }
        out.add_term(kap, &c.shift(d));
    }
    out
}

/// One summand `[i] Y_(i)(D)` of the diagram action; `result` is `None`
/// when `Y_(i)(D)` vanishes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YTerm {
    pub index: usize,
    pub coeff: LaurentPoly,
    pub result: Option<Weight>,
}

fn sorted_blocks(shape: &Shape, sites: &[i8]) -> bool {
    let mut p = 0;
    shape.parts().iter().all(|&m| {
        let blk = &sites[p..p + m as usize];
        p += m as usize;
        blk.windows(2).all(|w| w[0] >= w[1])
    })
}

/// The summands of `Y(D) = Σ_{1 <= i <= n_up + 1} [i] Y_(i)(D)`.
///
/// For `i <= n_up`, `Y_(i)` turns the `i`-th up arrow down. The last term
/// keeps `D` when there is no star, turns the unpaired down arrow up when
/// there is one, and vanishes otherwise. A result whose block strings are
/// not sorted is zero after projection.
pub fn y_components(d: &Diagram) -> Vec<YTerm> {
    let shape = d.shape();
    let ups = d.ups();
    let mut out = Vec::with_capacity(ups.len() + 1);
    let result_of = |sites: Vec<i8>| sorted_blocks(shape, &sites).then(|| crate::paths::weight_of_sites(shape, &sites));
    for (i, &u) in ups.iter().enumerate() {
        let mut s = d.sites().to_vec();
        s[u] = -1;
        out.push(YTerm { index: i + 1, coeff: quantum_int(i as i64 + 1), result: result_of(s) });
    }
    let last = match (d.star(), d.unpaired()) {
        (None, _) => result_of(d.sites().to_vec()),
        (Some(_), Some(p)) => {
            let mut s = d.sites().to_vec();
            s[p] = 1;
            result_of(s)
        }
        (Some(_), None) => None,
    };
    out.push(YTerm { index: ups.len() + 1, coeff: quantum_int(ups.len() as i64 + 1), result: last });
    out
}

/// `Y(D)` as a combination of ♠ diagrams, keyed by weight.
pub fn y_on_diagram(d: &Diagram) -> BTreeMap<Weight, LaurentPoly> {
    let mut out: BTreeMap<Weight, LaurentPoly> = BTreeMap::new();
    for t in y_components(d) {
        if let Some(k) = t.result {
            *out.entry(k).or_default() += &t.coeff;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// The matrix of `Y` on the ♠ basis: row `k` holds the expansion of `Y(♠_k)`.
pub fn y_matrix(shape: &Shape) -> Result<TransitionMatrix> {
    let mut rows = BTreeMap::new();
    for k in shape.weights() {
        let mut v = TensorVector::zero(shape, Basis::Dual);
        for (l, c) in y_on_diagram(&build_diagram(shape, &k)?) {
            v.add_term(&l, &c);
        }
        rows.insert(k, v);
    }
    TransitionMatrix::from_rows(shape.weights(), &rows)
}

/// The eigenvalue label of a diagram: `n_up + 1` without a star, `n_up`
/// with a star and no unpaired down arrow, `-(n_up + 1)` with both.
pub fn n_k(d: &Diagram) -> i64 {
    let n = d.ups().len() as i64;
    match (d.star(), d.unpaired()) {
        (None, _) => n + 1,
        (Some(_), None) => n,
        (Some(_), Some(_)) => -(n + 1),
    }
}

/// `M_j = #{k : N_k = j}`.
pub fn multiplicities(shape: &Shape) -> Result<BTreeMap<i64, usize>> {
    let mut m = BTreeMap::new();
    for k in shape.weights() {
        *m.entry(n_k(&build_diagram(shape, &k)?)).or_insert(0) += 1;
    }
    Ok(m)
}

/// Predicted and observed eigenvalue multiplicities of `Y` at a point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenReport {
    pub shape: Shape,
    pub q0: BigRational,
    /// `j ↦ M_j`.
    pub predicted: BTreeMap<i64, usize>,
    /// `j ↦ dim ker(Y - [j](q0))`.
    pub observed: BTreeMap<i64, usize>,
    pub dimension: usize,
}

impl EigenReport {
    pub fn passed(&self) -> bool {
        self.predicted == self.observed && self.predicted.values().sum::<usize>() == self.dimension
    }
}

/// No two of `[i](q0)`, `|i| <= bound`, coincide, and none vanishes except `[0]`.
pub fn is_generic_point(q0: &BigRational, bound: i64) -> Result<bool> {
    let mut seen = Vec::new();
    for i in -bound..=bound {
        let v = quantum_int(i).evaluate_at(q0)?;
        if seen.contains(&v) || (i != 0 && v.is_zero()) {
            return Ok(false);
        }
        seen.push(v);
    }
    Ok(true)
}

/// Checks the spectrum of `Y` on a shape at `q0` against `{M_j}`.
pub fn spectrum(shape: &Shape, q0: &BigRational) -> Result<EigenReport> {
    let y = y_matrix(shape)?;
    let n = y.dim();
    let mut numeric = vec![vec![BigRational::zero(); n]; n];
    for (i, j, e) in y.nonzero() {
        numeric[i][j] = e.evaluate_at(q0)?;
    }
    let predicted = multiplicities(shape)?;
    let mut observed = BTreeMap::new();
    for &j in predicted.keys() {
        let lambda = quantum_int(j).evaluate_at(q0)?;
        let mut a = numeric.clone();
        for (i, row) in a.iter_mut().enumerate() {
            row[i] -= &lambda;
        }
        observed.insert(j, n - linalg::rank(a));
    }
    Ok(EigenReport { shape: shape.clone(), q0: q0.clone(), predicted, observed, dimension: n })
}

/// The top eigenvector in ♠ coordinates, normalized so that the lowest
/// weight component is 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsiVector {
    pub shape: Shape,
    pub components: BTreeMap<Weight, LaurentPoly>,
}

impl PsiVector {
    fn normalized(shape: &Shape, components: BTreeMap<Weight, RationalFn>) -> Result<Self> {
        let low = components
            .get(&shape.lowest_weight())
            .filter(|c| !c.is_zero())
            .cloned()
            .ok_or_else(|| Error::Singular(String::from("lowest component vanishes")))?;
        let mut out = BTreeMap::new();
        for (k, c) in components {
            let v = (c / low.clone()).to_laurent()?;
            if !v.is_zero() {
                out.insert(k, v);
            }
        }
        Ok(PsiVector { shape: shape.clone(), components: out })
    }

    pub fn get(&self, k: &[i32]) -> LaurentPoly {
        self.components.get(k).cloned().unwrap_or_default()
    }

    /// `Σ_k Ψ_k(1)`.
    pub fn sum_at_one(&self) -> BigInt {
        self.components.values().map(|c| c.at_one()).sum()
    }

    /// `Y Ψ = [L+1] Ψ` with `Y` from the ♠ matrix.
    pub fn is_top_eigenvector(&self, y: &TransitionMatrix) -> bool {
        let lambda = quantum_int(self.shape.total() as i64 + 1);
        let mut image: BTreeMap<usize, LaurentPoly> = BTreeMap::new();
        for (i, j, e) in y.nonzero() {
            if let Some(c) = self.components.get(&y.index()[i]) {
                *image.entry(j).or_default() += e * c;
            }
        }
        y.index().iter().enumerate().all(|(j, k)| image.get(&j).cloned().unwrap_or_default() == &lambda * &self.get(k))
    }
}

/// `d_k`: the sum of the positions, counted from the right end, of the up
/// arrows of `κ(k)`.
pub fn leading_degree(shape: &Shape, k: &[i32]) -> Result<i64> {
    let kap = kappa(shape, k)?;
    let n = kap.len() as i64;
    Ok(kap.iter().enumerate().filter(|(_, &x)| x == 1).map(|(i, _)| n - i as i64).sum())
}

/// `Ψ^0 = Σ_κ q^{d_κ} v^κ` on `V_1^{⊗N}`, a standard-basis eigenvector of
/// `Y` for `[N+1]`.
pub fn psi0(n: usize) -> Result<TensorVector> {
    let shape = Shape::ones(n)?;
    let mut v = TensorVector::zero(&shape, Basis::Dual);
    for k in shape.weights() {
        let d = leading_degree(&shape, &k)?;
        v.add_term(&k, &LaurentPoly::q_pow(d));
    }
    Ok(v)
}

/// `Ψ` from the ♠ decomposition of the projected `Ψ^0`.
pub fn psi_from_standard(shape: &Shape) -> Result<PsiVector> {
    let v = project_pi(&psi0(shape.total())?, shape)?;
    let coeffs = Decomposer::new(shape, DiagramKind::Spade).decompose(&v)?;
    PsiVector::normalized(shape, coeffs.into_iter().map(|(k, c)| (k, RationalFn::from(c))).collect())
}

/// `Ψ` from `(Y - [L+1]) Ψ = 0` on the ♠ matrix. Equations are solved one
/// strongly connected component at a time, dependencies first; the top
/// weight is the free unknown.
pub fn psi_solve(shape: &Shape) -> Result<PsiVector> {
    let y = y_matrix(shape)?;
    let index = y.index().to_vec();
    let n = index.len();
    let lambda = RationalFn::from(quantum_int(shape.total() as i64 + 1));
    // into[l] lists (k, y_{k→l}).
    let mut into: Vec<Vec<(usize, RationalFn)>> = vec![Vec::new(); n];
    for (k, l, e) in y.nonzero() {
        into[l].push((k, RationalFn::from(e.clone())));
    }
    let adj: Vec<Vec<usize>> = into.iter().enumerate().map(|(l, v)| v.iter().map(|(k, _)| *k).filter(|&k| k != l).collect()).collect();
    let top = index.iter().position(|k| *k == shape.highest_weight()).expect("top weight");
    let mut value: Vec<Option<RationalFn>> = vec![None; n];
    value[top] = Some(RationalFn::one());
    for comp in linalg::strongly_connected_components(&adj) {
        let unknown: Vec<usize> = comp.iter().copied().filter(|&c| c != top).collect();
        if unknown.is_empty() {
            continue;
        }
        let pos = |x: usize| unknown.iter().position(|&u| u == x);
        let mut a = vec![vec![RationalFn::zero(); unknown.len()]; unknown.len()];
        let mut b = vec![RationalFn::zero(); unknown.len()];
        for (r, &l) in unknown.iter().enumerate() {
            a[r][r] = -lambda.clone();
            for (k, e) in &into[l] {
                match pos(*k) {
                    Some(c) => a[r][c] = &a[r][c] + e,
                    None => {
                        let v = value[*k].as_ref().ok_or_else(|| Error::Inconsistent(format!("unsolved dependency {:?}", index[*k])))?;
                        b[r] = &b[r] - &(e * v);
                    }
                }
            }
        }
        for (u, x) in unknown.iter().zip(linalg::solve(a, b)?) {
            value[*u] = Some(x);
        }
    }
    let comps = index.into_iter().zip(value).map(|(k, v)| (k, v.unwrap_or_else(RationalFn::zero))).collect();
    PsiVector::normalized(shape, comps)
}

/// A factor of the closed formula: `[n]` or `q^n + q^-n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QFactor {
    Int(i64),
    PowSum(i64),
}

impl QFactor {
    fn poly(self) -> LaurentPoly {
        match self {
            QFactor::Int(n) => quantum_int(n),
            QFactor::PowSum(n) => q_pow_sum(n),
        }
    }

    fn at_one(self) -> BigInt {
        match self {
            QFactor::Int(n) => BigInt::from(n),
            QFactor::PowSum(_) => BigInt::from(2),
        }
    }
}

/// A ratio of products of [`QFactor`]s.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct QRatio {
    pub num: Vec<QFactor>,
    pub den: Vec<QFactor>,
}

impl QRatio {
    pub fn one() -> Self {
        Self::default()
    }

    fn times(&mut self, f: QFactor) {
        self.num.push(f);
    }

    fn over(&mut self, f: QFactor) {
        self.den.push(f);
    }

    fn absorb(&mut self, other: &QRatio) {
        self.num.extend(&other.num);
        self.den.extend(&other.den);
    }

    pub fn to_rational_fn(&self) -> Result<RationalFn> {
        let num: LaurentPoly = self.num.iter().map(|f| f.poly()).product();
        let den: LaurentPoly = self.den.iter().map(|f| f.poly()).product();
        RationalFn::new(num, den)
    }

    /// The value as a Laurent polynomial; fails if it is not one.
    pub fn to_laurent(&self) -> Result<LaurentPoly> {
        let num: LaurentPoly = self.num.iter().map(|f| f.poly()).product();
        let den: LaurentPoly = self.den.iter().map(|f| f.poly()).product();
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        num.exact_div(&den)
    }

    pub fn at_one(&self) -> Result<BigRational> {
        let num: BigInt = self.num.iter().map(|f| f.at_one()).product();
        let den: BigInt = self.den.iter().map(|f| f.at_one()).product();
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(BigRational::new(num, den))
    }
}

/// The ingredients of the closed formula for one diagram. Positions are
/// one-based and `S`, `T` are the arcs and dashed arcs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedFormParts {
    pub n1: usize,
    pub n2: usize,
    pub n3: usize,
    pub n4: i64,
    pub prefactor: QRatio,
    pub n5: QRatio,
    pub n6: QRatio,
    pub n7: QRatio,
    pub n8: QRatio,
    pub n9: QRatio,
    pub n10: QRatio,
}

impl ClosedFormParts {
    pub fn total(&self) -> QRatio {
        let mut r = self.prefactor.clone();
        for p in [&self.n5, &self.n6, &self.n7, &self.n8, &self.n9, &self.n10] {
            r.absorb(p);
        }
        r
    }
}

type Arc = (i64, i64);

fn inside(a: Arc, b: Arc) -> bool {
    b.0 < a.0 && a.1 < b.1
}

fn size(a: Arc) -> i64 {
    (a.1 - a.0 + 1) / 2
}

/// Computes the quantities `N_1 … N_10` of the closed formula for `Ψ_D`.
pub fn closed_form_parts(d: &Diagram) -> ClosedFormParts {
    let n = d.len() as i64;
    let one = |x: usize| x as i64 + 1;
    let s: Vec<Arc> = d.arcs().iter().map(|&(a, b)| (one(a), one(b))).collect();
    let t: Vec<Arc> = d.dashed().iter().map(|&(a, b)| (one(a), one(b))).collect();
    let ups: Vec<i64> = d.ups().iter().map(|&u| one(u)).collect();
    let star = d.star().map(one);
    let unp = d.unpaired().map(one);
    let n1 = usize::from(unp.is_some());

    let (mut sr, mut sm, mut sl) = (Vec::new(), Vec::new(), Vec::new());
    if let Some(st) = star {
        sr = s.iter().copied().filter(|a| a.0 > st).collect();
        let reference = unp.or_else(|| t.iter().map(|a| a.0).min());
        if let Some(r) = reference {
            sm = s.iter().copied().filter(|a| !sr.contains(a) && a.0 > r).collect();
        }
        let rest: Vec<Arc> = s.iter().copied().filter(|a| !sr.contains(a) && !sm.contains(a)).collect();
        sl = match ups.iter().max() {
            Some(&u) => rest.into_iter().filter(|a| a.0 > u).collect(),
            None => rest,
        };
    }
    let outer: Vec<Arc> = s.iter().copied().filter(|&a| !s.iter().chain(&t).any(|&b| inside(a, b))).collect();

    let n2 = if star.is_some() { s.len() + t.len() + 1 } else { s.len() };
    let n3 = sm.len() + t.len();
    let n4 = n - s.len() as i64 + (sr.len() + sm.len() + sl.len()) as i64 + 1;

    let mut n5 = QRatio::one();
    if star.is_some() && n1 == 0 {
        n5.times(QFactor::Int(n4));
        n5.over(QFactor::Int(n3 as i64 + 1));
    }

    let mut n6 = QRatio::one();
    for &a in &outer {
        if sm.contains(&a) || (n1 == 0 && sl.contains(&a)) {
            let (m, d1) = (size(a), n - a.1);
            n6.times(QFactor::Int(1 + m + d1));
            n6.over(QFactor::Int(1 + 2 * m + d1));
        }
    }

    let mut n7 = QRatio::one();
    if let Some(st) = star {
        for &a in outer.iter().filter(|a| sr.contains(a)) {
            let (m, d2) = (size(a), (a.0 - st + 1) / 2);
            for i in 0..=n3 as i64 {
                n7.times(QFactor::Int(d2 + i));
                n7.over(QFactor::Int(d2 + m + i));
            }
            for &b in &sm {
                let c = sm.iter().filter(|&&c| c.0 > b.1 || inside(b, c) || c == b).count() + t.iter().filter(|c| c.0 > b.1).count();
                let c = c as i64;
                n7.times(QFactor::Int(d2 + m + c));
                n7.over(QFactor::Int(d2 + c));
            }
        }
    }

    let mut n8 = QRatio::one();
    if let Some(st) = star {
        let skip = usize::from(n1 == 0);
        for &a in t.iter().skip(skip) {
            n8.over(QFactor::Int((st - a.1 + 1) / 2 + size(a)));
        }
    }

    let mut n9 = QRatio::one();
    for i in 1..=(n - n2 as i64) {
        n9.times(QFactor::PowSum(i));
    }
    if let Some(st) = star {
        n9.over(QFactor::PowSum(1 + (n - st) / 2));
        for &a in &t {
            n9.over(QFactor::PowSum(1 + (n - a.0) / 2));
        }
    }

    // Number ups, arcs, dashed arcs and the unpaired arrow left to right.
    let mut items: Vec<(i64, bool)> = ups.iter().map(|&u| (u, false)).collect();
    items.extend(s.iter().map(|a| (a.0, true)));
    items.extend(t.iter().map(|a| (a.0, true)));
    items.extend(unp.map(|u| (u, true)));
    items.sort_unstable();
    let mut n10 = QRatio::one();
    for (c, &(_, counted)) in items.iter().enumerate() {
        if counted {
            n10.times(QFactor::Int(c as i64 + 1));
        }
    }

    let mut prefactor = QRatio::one();
    for &a in &s {
        prefactor.over(QFactor::Int(size(a)));
    }

    ClosedFormParts { n1, n2, n3, n4, prefactor, n5, n6, n7, n8, n9, n10 }
}

/// `Ψ_D` from the closed formula.
pub fn psi_closed_form(d: &Diagram) -> Result<LaurentPoly> {
    closed_form_parts(d).total().to_laurent()
}

/// `Ψ` of a shape from the closed formula, component by component.
pub fn psi_closed(shape: &Shape) -> Result<PsiVector> {
    let mut components = BTreeMap::new();
    for k in shape.weights() {
        components.insert(k.clone(), psi_closed_form(&build_diagram(shape, &k)?)?);
    }
    Ok(PsiVector { shape: shape.clone(), components })
}

/// `s_{m,L} = Σ_k Ψ_k(1)` over the weights of `(m, …, m)` of length `L`,
/// from the closed formula at `q = 1`.
pub fn sum_at_one(m: u32, len: usize) -> Result<BigInt> {
    let shape = Shape::uniform(m, len)?;
    let mut total = BigRational::zero();
    for k in shape.weights() {
        total += closed_form_parts(&build_diagram(&shape, &k)?).total().at_one()?;
    }
    if !total.is_integer() {
        return Err(Error::Inconsistent(format!("sum {total} is not an integer")));
    }
    Ok(total.to_integer())
}

/// Pell numbers with `P_0 = 0`, `P_1 = 1`.
pub fn pell(n: usize) -> BigInt {
    let (mut a, mut b) = (BigInt::zero(), BigInt::one());
    for _ in 0..n {
        let next = &b * 2 + &a;
        a = core::mem::replace(&mut b, next);
    }
    a
}

/// The first sum rule's prediction `s_{m,1} = P_{m+2} - 2^m`.
pub fn sum_rule_one(m: usize) -> BigInt {
    pell(m + 2) - (BigInt::one() << m)
}

/// `c_1 = 1`, `c_2 = 3`, `c_n = 2 c_{n-1} + (2n - 2) c_{n-2}` (OEIS A000902).
pub fn a000902(n: usize) -> BigInt {
    let (mut a, mut b) = (BigInt::one(), BigInt::from(3));
    if n <= 1 {
        return a;
    }
    for i in 3..=n {
        let next = &b * 2 + &a * BigInt::from(2 * i - 2);
        a = core::mem::replace(&mut b, next);
    }
    b
}

/// The left side minus the right side of the first appendix identity,
/// `Σ_i [1 + Σ_{j<=i} n_j][m_i] Π_{j>i}[1 + Σ_{k<=j}(n_k + m_k)] /
/// Π_{j>=i}[1 + Σ_{k<=j} n_k + Σ_{k<j} m_k] = [Σ m_i]`.
pub fn appendix_identity_one(n: &[i64], m: &[i64]) -> Result<RationalFn> {
    if n.len() != m.len() {
        return Err(Error::LengthMismatch(n.len(), m.len()));
    }
    let k = n.len();
    let q = |x: i64| RationalFn::from(quantum_int(x));
    let sn = |j: usize| n[..j].iter().sum::<i64>();
    let sm = |j: usize| m[..j].iter().sum::<i64>();
    let mut lhs = RationalFn::zero();
    for i in 1..=k {
        let mut term = q(1 + sn(i)) * q(m[i - 1]);
        for j in i + 1..=k {
            term *= q(1 + sn(j) + sm(j));
        }
        for j in i..=k {
            term = term / q(1 + sn(j) + sm(j - 1));
        }
        lhs += term;
    }
    Ok(lhs - q(sm(k)))
}

/// The left side minus the right side of the second appendix identity in
/// the parameters `m_1 … m_K`, `x`, `z`.
pub fn appendix_identity_two(m: &[i64], x: i64, z: i64) -> Result<RationalFn> {
    let k = m.len();
    let q = |v: i64| RationalFn::from(quantum_int(v));
    let tail = |j: usize| m[j..].iter().sum::<i64>();
    let head = |j: usize| m[..j].iter().sum::<i64>();
    let big_i = |i: usize| {
        let mut r = RationalFn::one();
        for j in 1..=i {
            r = r * q(2 + 2 * m[j - 1] + 2 * z + 2 * tail(j)) / q(2 + m[j - 1] + 2 * z + 2 * tail(j));
        }
        r
    };
    let mut lhs = RationalFn::zero();
    for i in 1..=k {
        let j = q(m[i - 1]) * q(x + 3 + head(i) + 2 * tail(i) + 2 * z) / (q(1 + x + head(i - 1)) * q(1 + x + head(i)));
        lhs += big_i(i) * j;
    }
    lhs += q(2 * z + 2) / q(x + 1 + head(k)) * big_i(k);
    let rhs = q(2 + 2 * z + 2 * head(k)) / q(1 + x);
    Ok(lhs - rhs)
}

/// The components of `Ψ` on `(1)^N` along the chain
/// `k_i = (+1^{N-i+1}, -1^{i-1})`, from their product formulas.
pub fn chain_component(n: usize, i: usize) -> Result<LaurentPoly> {
    let n = n as i64;
    let i = i as i64;
    let m = i / 2;
    let mut num: LaurentPoly = (1..=n - m).map(q_pow_sum).product();
    let mut den: LaurentPoly = (1..=m).map(q_pow_sum).product();
    if i % 2 == 1 {
        num *= q_binomial(n - m, m);
    } else {
        num *= quantum_int(n + 1) * q_binomial(n - m, m - 1);
        den *= quantum_int(m);
    }
    num.exact_div(&den)
}

/// Whether `p` is `±[j]` for some `j`, or zero.
pub fn is_quantum_integer(p: &LaurentPoly) -> bool {
    if p.is_zero() {
        return true;
    }
    let d = p.degree().unwrap_or(0);
    let j = d + 1;
    let lead = p.leading_coeff();
    if lead.is_positive() {
        *p == quantum_int(j)
    } else {
        *p == -quantum_int(j)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(s: &str) -> Shape {
        s.parse().unwrap()
    }

    #[test]
    fn y_on_one_site() {
        let s = shape("1");
        let up = TensorVector::basis_vector(&s, Basis::Dual, &[1]).unwrap();
        let y = y_on_standard(&up).unwrap();
        assert!(y.coeff(&[-1]).is_one());
        assert_eq!(y.coeff(&[1]), LaurentPoly::q_pow(1));
        let down = TensorVector::basis_vector(&s, Basis::Dual, &[-1]).unwrap();
        let y = y_on_standard(&down).unwrap();
        assert!(y.coeff(&[1]).is_one());
        assert_eq!(y.coeff(&[-1]), LaurentPoly::q_pow(-1));
    }

    #[test]
    fn eigen_labels_for_two_two() {
        let s = shape("2,2");
        assert_eq!(n_k(&build_diagram(&s, &[2, -2]).unwrap()), -3);
        assert_eq!(n_k(&build_diagram(&s, &[0, -2]).unwrap()), 1);
        let m = multiplicities(&s).unwrap();
        let expect: BTreeMap<i64, usize> = [(5, 1), (3, 2), (1, 3), (-1, 2), (-3, 1)].into_iter().collect();
        assert_eq!(m, expect);
    }

    #[test]
    fn sequences() {
        let p: Vec<i64> = (0..8).map(|n| pell(n).try_into().unwrap()).collect();
        assert_eq!(p, [0, 1, 2, 5, 12, 29, 70, 169]);
        let s: Vec<i64> = (1..=4).map(|m| sum_rule_one(m).try_into().unwrap()).collect();
        assert_eq!(s, [3, 8, 21, 54]);
        let a: Vec<i64> = (1..=6).map(|n| a000902(n).try_into().unwrap()).collect();
        assert_eq!(a, [1, 3, 10, 38, 156, 692]);
    }

    #[test]
    fn leading_degree_example() {
        assert_eq!(leading_degree(&shape("2,2"), &[0, 2]).unwrap(), 7);
    }

    #[test]
    fn quantum_integer_recognition() {
        assert!(is_quantum_integer(&quantum_int(4)));
        assert!(is_quantum_integer(&-quantum_int(2)));
        assert!(!is_quantum_integer(&LaurentPoly::q_pow(1)));
    }
}
