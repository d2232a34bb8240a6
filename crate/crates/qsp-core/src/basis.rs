//! Diagrams and the canonical and dual canonical bases of tensor products.
//!
//! A dual canonical vector of the coideal (♠) is drawn on the `±1` site
//! string `κ` of its weight:
//!
//! 1. a down arrow and the next unmatched up arrow to its right form an arc;
//! 2. the remaining up arrows stay as arrows (they all sit left of the
//!    remaining down arrows);
//! 3. the rightmost remaining down arrow carries a star;
//! 4. the other remaining down arrows pair from the right into dashed arcs,
//!    and a single leftover is the unpaired down arrow.
//!
//! The dual canonical basis of `U_q(sl2)` (♥) stops after the first two
//! rules. Expanding a diagram sitewise and projecting blockwise gives the
//! vector. The canonical basis (♣) has no diagram calculus and is obtained
//! as the unique `ψ^ι+`-fixed vector by a triangular solve.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::laurent::LaurentPoly;
use crate::paths::{kappa, partial_sums, weight_le, Shape, Sign, Weight};
use crate::quantum::{project_pi, project_pi_lower, psi_bar, psi_iota, Basis, PsiVariant, TensorVector, UpsilonSeries};
use crate::{Error, Result};

/// Which dual canonical basis a diagram describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DiagramKind {
    /// The coideal basis (arcs, dashed arcs, star).
    Spade,
    /// The `U_q(sl2)` basis (arcs and plain arrows).
    Heart,
}

/// What a single site is in a diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SiteRole {
    ArcStart,
    ArcEnd,
    DashedStart,
    DashedEnd,
    Star,
    Up,
    Down,
}

impl SiteRole {
    pub fn name(self) -> &'static str {
        match self {
            SiteRole::ArcStart => "arc-start",
            SiteRole::ArcEnd => "arc-end",
            SiteRole::DashedStart => "dashed-start",
            SiteRole::DashedEnd => "dashed-end",
            SiteRole::Star => "star",
            SiteRole::Up => "up",
            SiteRole::Down => "down",
        }
    }

    fn glyph(self) -> char {
        match self {
            SiteRole::ArcStart => '(',
            SiteRole::ArcEnd => ')',
            SiteRole::DashedStart => '{',
            SiteRole::DashedEnd => '}',
            SiteRole::Star => '*',
            SiteRole::Up => '^',
            SiteRole::Down => 'v',
        }
    }
}

/// A diagram on sites `0..N`. Site numbers are zero-based throughout.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Diagram {
    shape: Shape,
    kind: DiagramKind,
    sites: Vec<i8>,
    arcs: Vec<(usize, usize)>,
    dashed: Vec<(usize, usize)>,
    star: Option<usize>,
    downs: Vec<usize>,
    ups: Vec<usize>,
}

impl Diagram {
    /// Builds the diagram of a site string. `shape` only records the block
    /// partition used when projecting.
    pub fn from_sites(shape: &Shape, sites: &[i8], kind: DiagramKind) -> Result<Self> {
        if sites.len() != shape.total() || sites.iter().any(|&x| x != 1 && x != -1) {
            return Err(Error::InvalidShape(format!("site string does not fit shape {shape}")));
        }
        let mut stack = Vec::new();
        let mut arcs = Vec::new();
        let mut used = vec![false; sites.len()];
        for (i, &x) in sites.iter().enumerate() {
            if x == -1 {
                stack.push(i);
            } else if let Some(a) = stack.pop() {
                arcs.push((a, i));
                used[a] = true;
                used[i] = true;
            }
        }
        arcs.sort_unstable();
        let ups: Vec<usize> = (0..sites.len()).filter(|&i| !used[i] && sites[i] == 1).collect();
        let mut downs: Vec<usize> = (0..sites.len()).filter(|&i| !used[i] && sites[i] == -1).collect();
        let mut dashed = Vec::new();
        let mut star = None;
        if kind == DiagramKind::Spade {
            star = downs.pop();
            while downs.len() >= 2 {
                let b = downs.pop().unwrap();
                let a = downs.pop().unwrap();
                dashed.push((a, b));
            }
            dashed.reverse();
        }
        Ok(Diagram { shape: shape.clone(), kind, sites: sites.to_vec(), arcs, dashed, star, downs, ups })
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn kind(&self) -> DiagramKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.sites.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sites.is_empty()
    }

    /// The `±1` site string the diagram was drawn on.
    pub fn sites(&self) -> &[i8] {
        &self.sites
    }

    /// Arcs `(down, up)`, sorted by left end.
    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    /// Dashed arcs, sorted by left end.
    pub fn dashed(&self) -> &[(usize, usize)] {
        &self.dashed
    }

    pub fn star(&self) -> Option<usize> {
        self.star
    }

    /// The unpaired down arrow of a ♠ diagram.
    pub fn unpaired(&self) -> Option<usize> {
        match self.kind {
            DiagramKind::Spade => self.downs.first().copied(),
            DiagramKind::Heart => None,
        }
    }

    /// Plain down arrows: the unpaired one for ♠, all leftovers for ♥.
    pub fn downs(&self) -> &[usize] {
        &self.downs
    }

    pub fn ups(&self) -> &[usize] {
        &self.ups
    }

    pub fn weight(&self) -> Weight {
        crate::paths::weight_of_sites(&self.shape, &self.sites)
    }

    pub fn role(&self, site: usize) -> SiteRole {
        if self.star == Some(site) {
            return SiteRole::Star;
        }
        if self.ups.contains(&site) {
            return SiteRole::Up;
        }
        if self.downs.contains(&site) {
            return SiteRole::Down;
        }
        for &(a, b) in &self.arcs {
            if a == site {
                return SiteRole::ArcStart;
            }
            if b == site {
                return SiteRole::ArcEnd;
            }
        }
        for &(a, b) in &self.dashed {
            if a == site {
                return SiteRole::DashedStart;
            }
            if b == site {
                return SiteRole::DashedEnd;
            }
        }
        unreachable!("site {site} has no role")
    }

    /// Expands the building blocks into `V_1^{⊗N}` (dual basis):
    /// arc `v^-1 ⊗ v^1 - q^-1 v^1 ⊗ v^-1`, dashed arc
    /// `v^-1 ⊗ v^-1 - q^-1 v^1 ⊗ v^1`, star `v^-1 - q^-1 v^1`.
    pub fn expand(&self) -> TensorVector {
        let n = self.sites.len();
        let minus_inv = -LaurentPoly::q_pow(-1);
        let mut partial: Vec<(Vec<i32>, LaurentPoly)> = vec![(vec![0; n], LaurentPoly::one())];
        let mut branch = |sites: &[usize], lead: &[i32], tail: &[i32]| {
            let mut next = Vec::with_capacity(partial.len() * 2);
            for (idx, c) in &partial {
                let mut a = idx.clone();
                let mut b = idx.clone();
                for (j, &s) in sites.iter().enumerate() {
                    a[s] = lead[j];
                    b[s] = tail[j];
                }
                next.push((a, c.clone()));
                next.push((b, c * &minus_inv));
            }
            partial = next;
        };
        for &(a, b) in &self.arcs {
            branch(&[a, b], &[-1, 1], &[1, -1]);
        }
        for &(a, b) in &self.dashed {
            branch(&[a, b], &[-1, -1], &[1, 1]);
        }
        if let Some(s) = self.star {
            branch(&[s], &[-1], &[1]);
        }
        let ones = Shape::ones(n).expect("nonempty diagram");
        let mut out = TensorVector::zero(&ones, Basis::Dual);
        for (mut idx, c) in partial {
            for &u in &self.ups {
                idx[u] = 1;
            }
            for &d in &self.downs {
                idx[d] = -1;
            }
            out.add_term(&idx, &c);
        }
        out
    }

    /// The basis vector itself: the expansion projected onto the shape.
    pub fn vector(&self) -> Result<TensorVector> {
        project_pi(&self.expand(), &self.shape)
    }

    /// One-line picture: `(`/`)` arcs, `{`/`}` dashed arcs, `*` star,
    /// `^`/`v` arrows, `|` between blocks.
    pub fn render(&self) -> String {
        let mut s = String::new();
        let mut next_cut = 0;
        let mut cuts = self.shape.parts().iter();
        for i in 0..self.sites.len() {
            if i == next_cut {
                if i > 0 {
                    s.push('|');
                }
                next_cut += *cuts.next().unwrap_or(&0) as usize;
            }
            s.push(self.role(i).glyph());
        }
        s
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// The ♠ diagram of a weight.
pub fn build_diagram(shape: &Shape, k: &[i32]) -> Result<Diagram> {
    Diagram::from_sites(shape, &kappa(shape, k)?, DiagramKind::Spade)
}

/// The ♥ diagram of a weight.
pub fn heart_diagram(shape: &Shape, k: &[i32]) -> Result<Diagram> {
    Diagram::from_sites(shape, &kappa(shape, k)?, DiagramKind::Heart)
}

/// `v^{k_1} ♠ … ♠ v^{k_n}`.
pub fn spade(shape: &Shape, k: &[i32]) -> Result<TensorVector> {
    build_diagram(shape, k)?.vector()
}

/// `v^{k_1} ♥ … ♥ v^{k_n}`.
pub fn heart(shape: &Shape, k: &[i32]) -> Result<TensorVector> {
    heart_diagram(shape, k)?.vector()
}

fn psum_total(k: &[i32]) -> i64 {
    partial_sums(k).iter().map(|&x| x as i64).sum()
}

/// Solves for the unitriangular basis fixed by an involution `ρ`, given on
/// basis vectors. Each solution is `v_k + Σ_{l < k} a_l v_l` with
/// `a_l ∈ q^-1 Z[q^-1]`. `order` lists the weights so that, for each `k`,
/// the weights below `k` come closest-first.
fn triangular_fixed_points(
    weights: &[Weight],
    rho: &BTreeMap<Weight, TensorVector>,
    sign: Sign,
    order: &[Weight],
) -> Result<BTreeMap<Weight, BTreeMap<Weight, LaurentPoly>>> {
    for (j, r) in rho {
        if let Some((l, _)) = r.terms().find(|(l, _)| !weight_le(sign, l, j)) {
            return Err(Error::Inconsistent(format!("involution is not triangular: {j:?} reaches {l:?}")));
        }
    }
    let mut out = BTreeMap::new();
    for k in weights {
        let mut a: BTreeMap<Weight, LaurentPoly> = BTreeMap::new();
        a.insert(k.clone(), LaurentPoly::one());
        for l in order.iter().filter(|l| *l != k && weight_le(sign, l, k)) {
            let mut s = LaurentPoly::zero();
            for (j, aj) in &a {
                if let Some(r) = rho[j].coeff_ref(l) {
                    s += r * &aj.bar();
                }
            }
            // The unknown a_l satisfies a_l - bar(a_l) = s.
            let p = s.negative_part();
            if &p - &p.bar() != s {
                return Err(Error::Inconsistent(format!("no bar-fixed solution at {k:?}, {l:?}")));
            }
            if !p.is_zero() {
                a.insert(l.clone(), p);
            }
        }
        out.insert(k.clone(), a);
    }
    Ok(out)
}

fn to_vectors(shape: &Shape, basis: Basis, raw: BTreeMap<Weight, BTreeMap<Weight, LaurentPoly>>) -> BTreeMap<Weight, TensorVector> {
    raw.into_iter()
        .map(|(k, a)| {
            let mut v = TensorVector::zero(shape, basis);
            for (l, c) in a {
                v.add_term(&l, &c);
            }
            (k, v)
        })
        .collect()
}

fn sorted_by_psums(shape: &Shape, descending: bool) -> Vec<Weight> {
    let mut w = shape.weights();
    w.sort_by_key(|k| if descending { -psum_total(k) } else { psum_total(k) });
    w
}

/// The canonical basis `v_{k_1} ♣ … ♣ v_{k_n}` (lower basis) of every weight.
pub fn club_basis(shape: &Shape, upsilon: &UpsilonSeries) -> Result<BTreeMap<Weight, TensorVector>> {
    let weights = shape.weights();
    let mut rho = BTreeMap::new();
    for k in &weights {
        let v = TensorVector::basis_vector(shape, Basis::Lower, k)?;
        rho.insert(k.clone(), psi_iota(&v, Sign::Plus, upsilon)?);
    }
    let order = sorted_by_psums(shape, true);
    Ok(to_vectors(shape, Basis::Lower, triangular_fixed_points(&weights, &rho, Sign::Plus, &order)?))
}

/// One canonical basis vector.
pub fn canonical_club(shape: &Shape, k: &[i32], upsilon: &UpsilonSeries) -> Result<TensorVector> {
    shape.check(k)?;
    Ok(club_basis(shape, upsilon)?.remove(k).expect("weight of the shape"))
}

/// The canonical basis of a shape obtained from the one on `V_1^{⊗N}` by
/// projecting the vector of each sorted block string.
pub fn club_by_projection(shape: &Shape, upsilon: &UpsilonSeries) -> Result<BTreeMap<Weight, TensorVector>> {
    let sites = club_basis(&Shape::ones(shape.total())?, upsilon)?;
    let mut out = BTreeMap::new();
    for k in shape.weights() {
        let kap: Vec<i32> = kappa(shape, &k)?.iter().map(|&x| x as i32).collect();
        out.insert(k, project_pi_lower(&sites[&kap], shape)?);
    }
    Ok(out)
}

/// The ♠ basis recomputed as the `ψ^ι-`-fixed points, without diagrams.
pub fn spade_fixed_points(shape: &Shape, upsilon: &UpsilonSeries) -> Result<BTreeMap<Weight, TensorVector>> {
    let weights = shape.weights();
    let mut rho = BTreeMap::new();
    for k in &weights {
        let v = TensorVector::basis_vector(shape, Basis::Dual, k)?;
        rho.insert(k.clone(), psi_iota(&v, Sign::Minus, upsilon)?);
    }
    let order = sorted_by_psums(shape, false);
    Ok(to_vectors(shape, Basis::Dual, triangular_fixed_points(&weights, &rho, Sign::Minus, &order)?))
}

/// The ♥ basis recomputed as the `ψ-`-fixed points, without diagrams.
pub fn heart_fixed_points(shape: &Shape) -> Result<BTreeMap<Weight, TensorVector>> {
    let weights = shape.weights();
    let mut rho = BTreeMap::new();
    for k in &weights {
        let v = TensorVector::basis_vector(shape, Basis::Dual, k)?;
        // ψ- only reaches weights below k in the downward order.
        rho.insert(k.clone(), psi_bar(&v, PsiVariant::Minus)?);
    }
    let order = sorted_by_psums(shape, false);
    Ok(to_vectors(shape, Basis::Dual, triangular_fixed_points(&weights, &rho, Sign::Minus, &order)?))
}

/// A square matrix indexed by the weights of a shape in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransitionMatrix {
    index: Vec<Weight>,
    entries: BTreeMap<(usize, usize), LaurentPoly>,
}

impl TransitionMatrix {
    /// Builds the matrix from `entry(row, col)`.
    pub fn from_fn(index: Vec<Weight>, mut entry: impl FnMut(&Weight, &Weight) -> Result<LaurentPoly>) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for (i, r) in index.iter().enumerate() {
            for (j, c) in index.iter().enumerate() {
                let e = entry(r, c)?;
                if !e.is_zero() {
                    entries.insert((i, j), e);
                }
            }
        }
        Ok(TransitionMatrix { index, entries })
    }

    /// Rows are the weights `k` of `vectors`, entries their coefficients.
    pub fn from_rows(index: Vec<Weight>, vectors: &BTreeMap<Weight, TensorVector>) -> Result<Self> {
        Self::from_fn(index, |r, c| Ok(vectors.get(r).map(|v| v.coeff(c)).unwrap_or_default()))
    }

    pub fn index(&self) -> &[Weight] {
        &self.index
    }

    pub fn dim(&self) -> usize {
        self.index.len()
    }

    pub fn get(&self, row: usize, col: usize) -> LaurentPoly {
        self.entries.get(&(row, col)).cloned().unwrap_or_default()
    }

    pub fn entry(&self, row: &[i32], col: &[i32]) -> LaurentPoly {
        match (self.position(row), self.position(col)) {
            (Some(i), Some(j)) => self.get(i, j),
            _ => LaurentPoly::zero(),
        }
    }

    pub fn position(&self, k: &[i32]) -> Option<usize> {
        self.index.iter().position(|x| x == k)
    }

    pub fn nonzero(&self) -> impl Iterator<Item = (usize, usize, &LaurentPoly)> {
        self.entries.iter().map(|(&(i, j), e)| (i, j, e))
    }

    pub fn transpose(&self) -> Self {
        let entries = self.entries.iter().map(|(&(i, j), e)| ((j, i), e.clone())).collect();
        TransitionMatrix { index: self.index.clone(), entries }
    }

    pub fn multiply(&self, other: &TransitionMatrix) -> Result<Self> {
        if self.index != other.index {
            return Err(Error::LengthMismatch(self.dim(), other.dim()));
        }
        let mut by_row: BTreeMap<usize, Vec<(usize, &LaurentPoly)>> = BTreeMap::new();
        for (&(i, j), e) in &other.entries {
            by_row.entry(i).or_default().push((j, e));
        }
        let mut entries: BTreeMap<(usize, usize), LaurentPoly> = BTreeMap::new();
        for (&(i, j), a) in &self.entries {
            for &(l, b) in by_row.get(&j).map(|v| v.as_slice()).unwrap_or(&[]) {
                *entries.entry((i, l)).or_default() += a * b;
            }
        }
        entries.retain(|_, e| !e.is_zero());
        Ok(TransitionMatrix { index: self.index.clone(), entries })
    }

    pub fn is_identity(&self) -> bool {
        self.entries.len() == self.index.len() && self.entries.iter().all(|(&(i, j), e)| i == j && e.is_one())
    }

    /// Diagonal 1, and `(row, col)` nonzero only when `col <= row` (or
    /// `row <= col` when `row_major` is false) in the given order.
    pub fn is_unitriangular(&self, sign: Sign, row_major: bool) -> bool {
        (0..self.dim()).all(|i| self.get(i, i).is_one())
            && self.entries.keys().all(|&(i, j)| {
                let (r, c) = (&self.index[i], &self.index[j]);
                if row_major {
                    weight_le(sign, c, r)
                } else {
                    weight_le(sign, r, c)
                }
            })
    }

    /// Comma-separated rows with a header of column weights.
    pub fn to_csv(&self) -> String {
        let label = |k: &Weight| k.iter().map(|x| format!("{x}")).collect::<Vec<_>>().join(" ");
        let mut s = String::from("row");
        for c in &self.index {
            s.push(',');
            s.push_str(&label(c));
        }
        s.push('\n');
        for i in 0..self.dim() {
            s.push_str(&label(&self.index[i]));
            for j in 0..self.dim() {
                s.push(',');
                s.push_str(&format!("{}", self.get(i, j)));
            }
            s.push('\n');
        }
        s
    }
}

/// The transition matrices of a shape.
///
/// - `lower[k][l]` is the coefficient of `v_k` in `♣_l`;
/// - `upper[k][l]` is the coefficient of `v^l` in `♠_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RMatrices {
    pub lower: TransitionMatrix,
    pub upper: TransitionMatrix,
}

impl RMatrices {
    /// `Σ_k lower[k][l] upper[k][l'] = δ_{l,l'}`, the pairing of ♣ with ♠.
    pub fn pairing_is_identity(&self) -> Result<bool> {
        Ok(self.lower.transpose().multiply(&self.upper.transpose())?.is_identity())
    }
}

pub fn r_matrices(shape: &Shape, upsilon: &UpsilonSeries) -> Result<RMatrices> {
    let index = shape.weights();
    let clubs = club_basis(shape, upsilon)?;
    let lower = TransitionMatrix::from_fn(index.clone(), |k, l| Ok(clubs[l].coeff(k)))?;
    let mut spades = BTreeMap::new();
    for k in &index {
        spades.insert(k.clone(), spade(shape, k)?);
    }
    let upper = TransitionMatrix::from_rows(index, &spades)?;
    Ok(RMatrices { lower, upper })
}

/// Decomposes dual-basis vectors over ♠ or ♥ by peeling off leading terms.
///
/// Both bases are unitriangular with the leading term at the weight of
/// smallest partial-sum total in their support.
#[derive(Debug, Clone)]
pub struct Decomposer {
    shape: Shape,
    kind: DiagramKind,
    cache: BTreeMap<Weight, TensorVector>,
}

impl Decomposer {
    pub fn new(shape: &Shape, kind: DiagramKind) -> Self {
        Decomposer { shape: shape.clone(), kind, cache: BTreeMap::new() }
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    /// The target basis vector of weight `k`.
    pub fn basis_vector(&mut self, k: &[i32]) -> Result<&TensorVector> {
        if !self.cache.contains_key(k) {
            let v = match self.kind {
                DiagramKind::Spade => spade(&self.shape, k)?,
                DiagramKind::Heart => heart(&self.shape, k)?,
            };
            self.cache.insert(k.to_vec(), v);
        }
        Ok(&self.cache[k])
    }

    pub fn decompose(&mut self, v: &TensorVector) -> Result<BTreeMap<Weight, LaurentPoly>> {
        if v.shape() != &self.shape || v.basis() != Basis::Dual {
            return Err(Error::InvalidShape(format!("expected a dual vector on {}", self.shape)));
        }
        let mut rest = v.clone();
        let mut out = BTreeMap::new();
        while let Some(k) = rest.terms().map(|(k, _)| k).min_by_key(|k| psum_total(k)).cloned() {
            let c = rest.coeff(&k);
            let b = self.basis_vector(&k)?;
            if !b.coeff(&k).is_one() {
                return Err(Error::Singular(format!("basis vector {k:?} is not unitriangular")));
            }
            rest.add_scaled(b, &-c.clone());
            if rest.coeff_ref(&k).is_some() {
                return Err(Error::Singular(format!("pivot {k:?} did not clear")));
            }
            out.insert(k, c);
        }
        Ok(out)
    }
}

/// The expansion `♥_l = Σ_k c_k ♠_k` for every `l`, as rows.
pub fn heart_to_spade(shape: &Shape) -> Result<TransitionMatrix> {
    let mut dec = Decomposer::new(shape, DiagramKind::Spade);
    let mut rows = BTreeMap::new();
    for l in shape.weights() {
        rows.insert(l.clone(), coefficient_vector(shape, dec.decompose(&heart(shape, &l)?)?));
    }
    TransitionMatrix::from_rows(shape.weights(), &rows)
}

/// The expansion `♠_l = Σ_k c_k ♥_k` for every `l`, as rows.
pub fn spade_to_heart(shape: &Shape) -> Result<TransitionMatrix> {
    let mut dec = Decomposer::new(shape, DiagramKind::Heart);
    let mut rows = BTreeMap::new();
    for l in shape.weights() {
        rows.insert(l.clone(), coefficient_vector(shape, dec.decompose(&spade(shape, &l)?)?));
    }
    TransitionMatrix::from_rows(shape.weights(), &rows)
}

fn coefficient_vector(shape: &Shape, coeffs: BTreeMap<Weight, LaurentPoly>) -> TensorVector {
    let mut v = TensorVector::zero(shape, Basis::Dual);
    for (k, c) in coeffs {
        v.add_term(&k, &c);
    }
    v
}

/// Decomposes `♥_k ⊗ ♠_{k'}` over the ♠ basis of the concatenated shape.
pub fn tensor_heart_spade(
    left: &Shape,
    k: &[i32],
    right: &Shape,
    k_right: &[i32],
    dec: &mut Decomposer,
) -> Result<BTreeMap<Weight, LaurentPoly>> {
    let v = heart(left, k)?.tensor(&spade(right, k_right)?);
    dec.decompose(&v)
}

/// Diagonal coefficient 1 and every other coefficient in `q^-1 N[q^-1]`.
pub fn is_positive_decomposition(diagonal: &[i32], coeffs: &BTreeMap<Weight, LaurentPoly>) -> bool {
    coeffs.get(diagonal).is_some_and(|c| c.is_one()) && coeffs.iter().all(|(k, c)| k.as_slice() == diagonal || c.in_negative_cone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(s: &str) -> Shape {
        s.parse().unwrap()
    }

    #[test]
    fn diagram_rules() {
        let d = Diagram::from_sites(&shape("1,1,1,1"), &[1, -1, -1, -1], DiagramKind::Spade).unwrap();
        assert_eq!(d.ups(), &[0]);
        assert_eq!(d.dashed(), &[(1, 2)]);
        assert_eq!(d.star(), Some(3));
        assert_eq!(d.render(), "^|{|}|*");
        let d = Diagram::from_sites(&shape("2"), &[-1, 1], DiagramKind::Spade).unwrap();
        assert_eq!(d.arcs(), &[(0, 1)]);
        let d = Diagram::from_sites(&shape("1,1,1,1"), &[-1, -1, -1, -1], DiagramKind::Spade).unwrap();
        assert_eq!(d.unpaired(), Some(0));
        assert_eq!(d.render(), "v|{|}|*");
    }

    #[test]
    fn all_up_expands_to_the_top_vector() {
        let s = shape("2,1");
        let v = spade(&s, &[2, 1]).unwrap();
        assert_eq!(v.len(), 1);
        assert!(v.coeff(&[2, 1]).is_one());
    }

    #[test]
    fn decomposer_round_trip() {
        let s = shape("2,1,1");
        let mut dec = Decomposer::new(&s, DiagramKind::Spade);
        for k in s.weights() {
            let c = dec.decompose(&spade(&s, &k).unwrap()).unwrap();
            assert_eq!(c.len(), 1);
            assert!(c[&k].is_one());
        }
    }
}
