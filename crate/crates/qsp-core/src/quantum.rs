//! Tensor products of finite-dimensional `U_q(sl2)` modules.
//!
//! A [`TensorVector`] lives in `V_{m_1} ⊗ … ⊗ V_{m_n}` and is written either
//! in the lower basis `v_k` or in the dual basis `v^k = v_k / [m, (m-k)/2]`.
//! Generators act through one of two comultiplications:
//!
//! - `Δ+`: `E ↦ E⊗1 + K⊗E`, `F ↦ F⊗K^-1 + 1⊗F`;
//! - `Δ-`: `E ↦ E⊗K^-1 + 1⊗E`, `F ↦ F⊗1 + K⊗F`.
//!
//! On top of that this module provides the quasi-R-matrices, the bar
//! involutions `ψ±`, the intertwiner `Υ` of the coideal and the coideal bar
//! involutions `ψ^ι±`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::ops::Range;

use crate::laurent::{q_binomial, quantum_factorial, quantum_int, LaurentPoly};
use crate::paths::{Shape, Sign, Weight};
use crate::{Error, Result};

/// Which basis a [`TensorVector`] is written in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Basis {
    Lower,
    Dual,
}

/// The generators of `U_q(sl2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Generator {
    E,
    F,
    K,
    KInv,
}

/// Selects `Δ+` or `Δ-`.
pub type Coproduct = Sign;

/// The three bar involutions on tensor products.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PsiVariant {
    /// Conjugate coefficients only.
    Plain,
    Plus,
    Minus,
}

/// A finite combination of standard tensors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorVector {
    shape: Shape,
    basis: Basis,
    terms: BTreeMap<Weight, LaurentPoly>,
}

impl TensorVector {
    pub fn zero(shape: &Shape, basis: Basis) -> Self {
        TensorVector { shape: shape.clone(), basis, terms: BTreeMap::new() }
    }

    /// The standard tensor `v_k` or `v^k`.
    pub fn basis_vector(shape: &Shape, basis: Basis, k: &[i32]) -> Result<Self> {
        shape.check(k)?;
        let mut v = Self::zero(shape, basis);
        v.terms.insert(k.to_vec(), LaurentPoly::one());
        Ok(v)
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Weight, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, k: &[i32]) -> LaurentPoly {
        self.terms.get(k).cloned().unwrap_or_default()
    }

    pub fn coeff_ref(&self, k: &[i32]) -> Option<&LaurentPoly> {
        self.terms.get(k)
    }

    pub fn add_term(&mut self, k: &[i32], c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(k) {
            Some(e) => {
                *e += c;
                if e.is_zero() {
                    self.terms.remove(k);
                }
            }
            None => {
                self.terms.insert(k.to_vec(), c.clone());
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &TensorVector, c: &LaurentPoly) {
        for (k, v) in &other.terms {
            self.add_term(k, &(v * c));
        }
    }

    pub fn plus(&self, other: &TensorVector) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &LaurentPoly::one());
        out
    }

    pub fn minus(&self, other: &TensorVector) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &-LaurentPoly::one());
        out
    }

    pub fn scaled(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero(&self.shape, self.basis);
        out.add_scaled(self, c);
        out
    }

    /// Conjugates every coefficient.
    pub fn bar_coeffs(&self) -> Self {
        let terms = self.terms.iter().map(|(k, c)| (k.clone(), c.bar())).collect();
        TensorVector { shape: self.shape.clone(), basis: self.basis, terms }
    }

    /// The tensor product `self ⊗ other`, on the concatenated shape.
    pub fn tensor(&self, other: &TensorVector) -> Self {
        let mut out = Self::zero(&self.shape.concat(&other.shape), self.basis);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let mut k = a.clone();
                k.extend_from_slice(b);
                out.add_term(&k, &(x * y));
            }
        }
        out
    }

    /// The same coefficients read in the other basis of a shape of ones,
    /// where lower and dual bases coincide.
    pub fn with_basis(&self, basis: Basis) -> Result<Self> {
        if !self.shape.is_all_ones() && basis != self.basis {
            return Err(Error::InvalidShape(alloc::format!("bases differ on shape {}", self.shape)));
        }
        Ok(TensorVector { shape: self.shape.clone(), basis, terms: self.terms.clone() })
    }
}

/// `g · v_k` (or `v^k`) in a single `V_n`: the new index and its coefficient.
pub fn single_action(n: u32, k: i32, g: Generator, basis: Basis) -> Option<(i32, LaurentPoly)> {
    let n = n as i32;
    match g {
        Generator::K => Some((k, LaurentPoly::q_pow(k as i64))),
        Generator::KInv => Some((k, LaurentPoly::q_pow(-(k as i64)))),
        Generator::E => (k + 2 <= n).then(|| {
            let c = match basis {
                Basis::Lower => (n + k) / 2 + 1,
                Basis::Dual => (n - k) / 2,
            };
            (k + 2, quantum_int(c as i64))
        }),
        Generator::F => (k - 2 >= -n).then(|| {
            let c = match basis {
                Basis::Lower => (n - k) / 2 + 1,
                Basis::Dual => (n + k) / 2,
            };
            (k - 2, quantum_int(c as i64))
        }),
    }
}

/// Applies `g` to one tensor factor.
pub fn act_on_factor(v: &TensorVector, pos: usize, g: Generator) -> TensorVector {
    let m = v.shape.parts()[pos];
    let mut out = TensorVector::zero(&v.shape, v.basis);
    for (k, c) in &v.terms {
        if let Some((nk, d)) = single_action(m, k[pos], g, v.basis) {
            let mut idx = k.clone();
            idx[pos] = nk;
            out.add_term(&idx, &(c * &d));
        }
    }
    out
}

/// Applies `g` to the factors in `range` through the iterated coproduct.
pub fn act_range(v: &TensorVector, g: Generator, cop: Coproduct, range: Range<usize>) -> TensorVector {
    match g {
        Generator::K | Generator::KInv => range.fold(v.clone(), |w, p| act_on_factor(&w, p, g)),
        Generator::E | Generator::F => {
            let mut total = TensorVector::zero(&v.shape, v.basis);
            for p in range.clone() {
                let mut w = act_on_factor(v, p, g);
                // The grouplike tails sit left or right of the acting factor.
                let (tail, side): (Generator, Range<usize>) = match (cop, g) {
                    (Sign::Plus, Generator::E) => (Generator::K, range.start..p),
                    (Sign::Plus, _) => (Generator::KInv, p + 1..range.end),
                    (Sign::Minus, Generator::E) => (Generator::KInv, p + 1..range.end),
                    (Sign::Minus, _) => (Generator::K, range.start..p),
                };
                for x in side {
                    w = act_on_factor(&w, x, tail);
                }
                total.add_scaled(&w, &LaurentPoly::one());
            }
            total
        }
    }
}

/// Applies `g` to every factor through the iterated coproduct.
pub fn rep_action(g: Generator, v: &TensorVector, cop: Coproduct) -> TensorVector {
    act_range(v, g, cop, 0..v.shape.len())
}

fn power_range(v: &TensorVector, g: Generator, k: usize, cop: Coproduct, range: Range<usize>) -> TensorVector {
    (0..k).fold(v.clone(), |w, _| act_range(&w, g, cop, range.clone()))
}

/// The divided power `g^k / [k]!` on the factors in `range`.
pub fn divided_power(v: &TensorVector, g: Generator, k: usize, cop: Coproduct, range: Range<usize>) -> Result<TensorVector> {
    let w = power_range(v, g, k, cop, range);
    let f = quantum_factorial(k as i64)?;
    let mut out = TensorVector::zero(&v.shape, v.basis);
    for (idx, c) in &w.terms {
        out.add_term(idx, &c.exact_div(&f)?);
    }
    Ok(out)
}

/// The projection `V_1^{⊗N} → V_{m_1} ⊗ … ⊗ V_{m_n}` on dual vectors: a
/// block string `κ` goes to `q^{-inv(κ)} v^{|κ|}`, where `inv(κ)` counts
/// pairs `i < j` in the block with `κ_i < κ_j`.
pub fn project_pi(v: &TensorVector, target: &Shape) -> Result<TensorVector> {
    if !v.shape.is_all_ones() || v.shape.total() != target.total() {
        return Err(Error::InvalidShape(alloc::format!("cannot project {} onto {}", v.shape, target)));
    }
    let mut out = TensorVector::zero(target, Basis::Dual);
    for (idx, c) in &v.terms {
        let (k, inv, _) = block_reduce(target, idx);
        out.add_term(&k, &c.shift(-inv));
    }
    Ok(out)
}

/// The projection on lower vectors, the module map for `Δ+`: a block
/// string `κ` goes to `q^{coinv(κ)} / [m, (m-k)/2] v_{|κ|}`, where
/// `coinv(κ)` counts pairs `i < j` with `κ_i > κ_j`. The binomial division
/// is exact only after collecting every term of an output index.
pub fn project_pi_lower(v: &TensorVector, target: &Shape) -> Result<TensorVector> {
    if !v.shape.is_all_ones() || v.shape.total() != target.total() {
        return Err(Error::InvalidShape(alloc::format!("cannot project {} onto {}", v.shape, target)));
    }
    let mut raw = TensorVector::zero(target, Basis::Lower);
    for (idx, c) in &v.terms {
        let (k, _, coinv) = block_reduce(target, idx);
        raw.add_term(&k, &c.shift(coinv));
    }
    let mut out = TensorVector::zero(target, Basis::Lower);
    for (k, c) in &raw.terms {
        let b: LaurentPoly = k.iter().zip(target.parts()).map(|(&ki, &mi)| q_binomial(mi as i64, ((mi as i32 - ki) / 2) as i64)).product();
        out.add_term(k, &c.exact_div(&b)?);
    }
    Ok(out)
}

/// Block sums of a site string with its counts of ascending and
/// descending pairs inside blocks.
fn block_reduce(target: &Shape, sites: &[i32]) -> (Weight, i64, i64) {
    let mut k = Vec::with_capacity(target.len());
    let mut inv = 0i64;
    let mut coinv = 0i64;
    let mut p = 0;
    for &m in target.parts() {
        let blk = &sites[p..p + m as usize];
        for a in 0..blk.len() {
            for b in a + 1..blk.len() {
                if blk[a] < blk[b] {
                    inv += 1;
                } else if blk[a] > blk[b] {
                    coinv += 1;
                }
            }
        }
        k.push(blk.iter().sum());
        p += m as usize;
    }
    (k, inv, coinv)
}

/// The lift `v^k ↦ v^{κ(k)}` into `V_1^{⊗N}`, a right inverse of
/// [`project_pi`] (sorted block strings have no inversions).
pub fn lift_sorted(v: &TensorVector) -> Result<TensorVector> {
    let ones = Shape::ones(v.shape.total())?;
    let mut out = TensorVector::zero(&ones, Basis::Dual);
    for (k, c) in &v.terms {
        let sites: Vec<i32> = crate::paths::kappa(&v.shape, k)?.iter().map(|&x| x as i32).collect();
        out.add_term(&sites, c);
    }
    Ok(out)
}

/// One quasi-R-matrix `Θ±` across the cut between factors `split-1` and
/// `split`:
///
/// - `Θ+ = Σ_k (-1)^k q^{-k(k-1)/2} (q-q^-1)^k / [k]! F^k ⊗ E^k` via `Δ+`;
/// - `Θ- = Σ_k q^{k(k-1)/2} (q-q^-1)^k / [k]! E^k ⊗ F^k` via `Δ-`.
pub fn theta_action(v: &TensorVector, variant: Sign, split: usize) -> Result<TensorVector> {
    let n = v.shape.len();
    theta_on(v, variant, 0..split, split..n)
}

fn theta_on(v: &TensorVector, variant: Sign, left: Range<usize>, right: Range<usize>) -> Result<TensorVector> {
    let step = LaurentPoly::q_pow(1) - LaurentPoly::q_pow(-1);
    let mut total = v.clone();
    let (gl, gr) = match variant {
        Sign::Plus => (Generator::F, Generator::E),
        Sign::Minus => (Generator::E, Generator::F),
    };
    for k in 1.. {
        let w = power_range(v, gl, k, variant, left.clone());
        let w = power_range(&w, gr, k, variant, right.clone());
        if w.is_zero() {
            break;
        }
        let k = k as i64;
        let tri = k * (k - 1) / 2;
        let pre = match variant {
            Sign::Plus => LaurentPoly::monomial(-tri, if k % 2 == 0 { 1 } else { -1 }),
            Sign::Minus => LaurentPoly::q_pow(tri),
        } * step.pow(k as u32);
        let f = quantum_factorial(k)?;
        for (idx, c) in &w.terms {
            total.add_term(idx, &(c.exact_div(&f)? * &pre));
        }
    }
    Ok(total)
}

/// The bar involutions. `ψ±` peel one factor at a time from the left:
/// `ψ(m ⊗ n) = Θ±(ψ(m) ⊗ ψ±(n))`, starting from coefficient conjugation on
/// the standard tensors.
pub fn psi_bar(v: &TensorVector, variant: PsiVariant) -> Result<TensorVector> {
    let sign = match variant {
        PsiVariant::Plain => return Ok(v.bar_coeffs()),
        PsiVariant::Plus => Sign::Plus,
        PsiVariant::Minus => Sign::Minus,
    };
    let n = v.shape.len();
    let mut w = v.bar_coeffs();
    for start in (0..n.saturating_sub(1)).rev() {
        w = theta_on(&w, sign, start..start + 1, start + 1..n)?;
    }
    Ok(w)
}

/// The intertwiner `Υ+ = Σ_n c_n F^(n)` of the coideal; `Υ- = Σ_n bar(c_n) E^(n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UpsilonSeries {
    coeffs: Vec<LaurentPoly>,
}

/// `ι(X) = E + q F K^-1 + K^-1` when `twisted` is false, and its bar image
/// `E + q^-1 F K + K` otherwise, on a single `V_n`.
fn embedded_x(v: &TensorVector, twisted: bool) -> TensorVector {
    let all = 0..v.shape.len();
    let e = act_range(v, Generator::E, Sign::Plus, all.clone());
    let (k, s) = if twisted { (Generator::K, -1) } else { (Generator::KInv, 1) };
    let kv = act_range(v, k, Sign::Plus, all.clone());
    let f = act_range(&kv, Generator::F, Sign::Plus, all).scaled(&LaurentPoly::q_pow(s));
    e.plus(&f).plus(&kv)
}

impl UpsilonSeries {
    /// Solves for `c_0 = 1, c_1, …, c_{n_max}` degree by degree on the
    /// highest weight vector of `V_{2 n_max + 2}`.
    ///
    /// `literal` selects the orientation `ι(X) Υ = Υ ψ(ι(X))`; otherwise
    /// `Υ ι(X) = ψ(ι(X)) Υ` is used. The second orientation yields the
    /// series for which `ψ^ι = Υ ∘ ψ±` fixes the canonical bases; the first
    /// yields its bar conjugate.
    pub fn solve_with(n_max: usize, literal: bool) -> Result<Self> {
        let n = 2 * n_max as u32 + 2;
        let shape = Shape::new(alloc::vec![n])?;
        let top = TensorVector::basis_vector(&shape, Basis::Lower, &[n as i32])?;
        let mut coeffs = alloc::vec![LaurentPoly::one()];
        for _ in 0..n_max {
            let residual = |last: LaurentPoly, coeffs: &[LaurentPoly]| -> Result<TensorVector> {
                let mut cs = coeffs.to_vec();
                cs.push(last);
                let u = UpsilonSeries { coeffs: cs };
                let (lhs, rhs) = if literal {
                    (embedded_x(&u.apply_lower(&top)?, false), u.apply_lower(&embedded_x(&top, true))?)
                } else {
                    (u.apply_lower(&embedded_x(&top, false))?, embedded_x(&u.apply_lower(&top)?, true))
                };
                Ok(lhs.minus(&rhs))
            };
            let r0 = residual(LaurentPoly::zero(), &coeffs)?;
            let r1 = residual(LaurentPoly::one(), &coeffs)?;
            let lin = r1.minus(&r0);
            let (idx, a) = lin
                .terms
                .iter()
                .next_back()
                .ok_or_else(|| Error::Singular(alloc::format!("coefficient {} is undetermined", coeffs.len())))?;
            let c = (-r0.coeff(idx)).exact_div(a)?;
            coeffs.push(c);
        }
        Ok(UpsilonSeries { coeffs })
    }

    /// The series used by [`psi_iota`].
    pub fn solve(n_max: usize) -> Result<Self> {
        Self::solve_with(n_max, false)
    }

    /// `c_n = -q^{-(n-1)} (q - q^-1) (q [n-1] c_{n-2} + c_{n-1})` from the
    /// seeds `(c_{-1}, c_0)`, up to `c_{n_max}`.
    pub fn from_recurrence(seed_prev: LaurentPoly, seed_zero: LaurentPoly, n_max: usize) -> Self {
        let step = LaurentPoly::q_pow(1) - LaurentPoly::q_pow(-1);
        let mut prev = seed_prev;
        let mut coeffs = alloc::vec![seed_zero];
        for n in 1..=n_max as i64 {
            let cur = coeffs[coeffs.len() - 1].clone();
            let inner = quantum_int(n - 1).shift(1) * &prev + &cur;
            let next = -(LaurentPoly::q_pow(-(n - 1)) * &step * inner);
            prev = cur;
            coeffs.push(next);
        }
        UpsilonSeries { coeffs }
    }

    pub fn coeffs(&self) -> &[LaurentPoly] {
        &self.coeffs
    }

    /// Highest divided power available.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    fn check_order(&self, v: &TensorVector) -> Result<()> {
        let need = v.shape.total();
        if self.order() < need {
            return Err(Error::Inconsistent(alloc::format!("intertwiner truncated at order {} but {} is needed", self.order(), need)));
        }
        Ok(())
    }

    fn apply_lower(&self, v: &TensorVector) -> Result<TensorVector> {
        self.apply(v, Generator::F, Sign::Plus, false)
    }

    fn apply(&self, v: &TensorVector, g: Generator, cop: Coproduct, conj: bool) -> Result<TensorVector> {
        let mut out = TensorVector::zero(&v.shape, v.basis);
        let all = 0..v.shape.len();
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let w = divided_power(v, g, n, cop, all.clone())?;
            if w.is_zero() && n > 0 {
                break;
            }
            out.add_scaled(&w, &if conj { c.bar() } else { c.clone() });
        }
        Ok(out)
    }

    /// `Υ+ v = Σ c_n F^(n) v` through `Δ+`.
    pub fn apply_plus(&self, v: &TensorVector) -> Result<TensorVector> {
        self.check_order(v)?;
        self.apply(v, Generator::F, Sign::Plus, false)
    }

    /// `Υ- v = Σ bar(c_n) E^(n) v` through `Δ-`.
    pub fn apply_minus(&self, v: &TensorVector) -> Result<TensorVector> {
        self.check_order(v)?;
        self.apply(v, Generator::E, Sign::Minus, true)
    }
}

/// The coideal bar involutions `ψ^ι+ = Υ+ ∘ ψ+` and `ψ^ι- = Υ- ∘ ψ-`.
pub fn psi_iota(v: &TensorVector, variant: Sign, upsilon: &UpsilonSeries) -> Result<TensorVector> {
    match variant {
        Sign::Plus => upsilon.apply_plus(&psi_bar(v, PsiVariant::Plus)?),
        Sign::Minus => upsilon.apply_minus(&psi_bar(v, PsiVariant::Minus)?),
    }
}

/// The coideal generator `Y = F + q^-1 K E + K` through `Δ-`.
pub fn y_action(v: &TensorVector) -> TensorVector {
    let f = rep_action(Generator::F, v, Sign::Minus);
    let e = rep_action(Generator::E, v, Sign::Minus);
    let ke = rep_action(Generator::K, &e, Sign::Minus).scaled(&LaurentPoly::q_pow(-1));
    let k = rep_action(Generator::K, v, Sign::Minus);
    f.plus(&ke).plus(&k)
}

/// Rewrites a vector between the lower and dual bases of its shape.
pub fn change_basis(v: &TensorVector, to: Basis) -> Result<TensorVector> {
    if v.basis == to {
        return Ok(v.clone());
    }
    let mut out = TensorVector::zero(&v.shape, to);
    for (k, c) in &v.terms {
        // v^k = v_k / B(k) with B the product of blockwise binomials.
        let b: LaurentPoly = k.iter().zip(v.shape.parts()).map(|(&ki, &mi)| q_binomial(mi as i64, ((mi as i32 - ki) / 2) as i64)).product();
        let d = match to {
            Basis::Dual => c * &b,
            Basis::Lower => c.exact_div(&b)?,
        };
        out.add_term(k, &d);
    }
    Ok(out)
}
