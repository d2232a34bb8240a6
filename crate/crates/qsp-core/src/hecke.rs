//! The maximal parabolic modules of the type-B Hecke algebra and their
//! parabolic Kazhdan-Lusztig bases.
//!
//! Basis vectors `m_v` are indexed by binary paths of length `N`. The
//! generators `T_1, …, T_{N-1}` act on adjacent steps and `T_N` on the last
//! step; the sign selects which of the two one-dimensional parabolic
//! representations is induced. All coefficients are Laurent polynomials in
//! the Hecke parameter `t`, stored as [`LaurentPoly`] in the variable `t`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::laurent::LaurentPoly;
use crate::paths::{BinaryPath, Sign};
use crate::{Error, Result};

/// A finite combination of basis vectors `m_v`, keyed by path code (bit `i`
/// set when step `i` is `+1`).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ModuleVector {
    terms: BTreeMap<u32, LaurentPoly>,
}

impl ModuleVector {
    pub fn basis(path: &BinaryPath) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(path.code(), LaurentPoly::one());
        ModuleVector { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `m_path`.
    pub fn coeff(&self, path: &BinaryPath) -> LaurentPoly {
        self.terms.get(&path.code()).cloned().unwrap_or_default()
    }

    /// Nonzero terms as `(path code, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &LaurentPoly)> {
        self.terms.iter().map(|(&c, p)| (c, p))
    }

    pub fn add_term(&mut self, code: u32, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(code).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&code);
        }
    }

    pub fn scaled(&self, c: &LaurentPoly) -> Self {
        let mut out = ModuleVector::default();
        for (&k, v) in &self.terms {
            out.add_term(k, &(v * c));
        }
        out
    }

    pub fn plus(&self, other: &ModuleVector) -> Self {
        let mut out = self.clone();
        for (&k, v) in &other.terms {
            out.add_term(k, v);
        }
        out
    }
}

/// `t - t^-1`.
fn t_minus_inverse() -> LaurentPoly {
    LaurentPoly::q_pow(1) - LaurentPoly::q_pow(-1)
}

/// A parabolic module `M_N` for one sign, with memoized bar images.
///
/// The memo tables make this type stateful; share one instance per thread or
/// guard it externally.
#[derive(Debug, Clone)]
pub struct HeckeModule {
    n: usize,
    sign: Sign,
    bar_memo: BTreeMap<u32, ModuleVector>,
    kl_memo: BTreeMap<u32, ModuleVector>,
}

impl HeckeModule {
    pub fn new(n: usize, sign: Sign) -> Self {
        assert!(n < 32, "paths are encoded in 32-bit masks");
        HeckeModule { n, sign, bar_memo: BTreeMap::new(), kl_memo: BTreeMap::new() }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    fn step(&self, code: u32, i: usize) -> i8 {
        if code >> i & 1 == 1 {
            1
        } else {
            -1
        }
    }

    /// `T_s m_v` for one basis vector, `s` in `1..=N`.
    fn act_basis(&self, s: usize, code: u32) -> Vec<(u32, LaurentPoly)> {
        let n = self.n;
        // The "simple" direction moves the path up for Minus and down for Plus.
        let plus = self.sign == Sign::Plus;
        if s < n {
            let (a, b) = (self.step(code, s - 1), self.step(code, s));
            if a == b {
                let diag = if plus { LaurentPoly::q_pow(1) } else { -LaurentPoly::q_pow(-1) };
                return alloc::vec![(code, diag)];
            }
            let swapped = code ^ (1 << (s - 1)) ^ (1 << s);
            let simple = if plus { (a, b) == (1, -1) } else { (a, b) == (-1, 1) };
            if simple {
                alloc::vec![(swapped, LaurentPoly::one())]
            } else {
                alloc::vec![(swapped, LaurentPoly::one()), (code, t_minus_inverse())]
            }
        } else {
            let last = self.step(code, n - 1);
            let flipped = code ^ (1 << (n - 1));
            let simple = if plus { last == 1 } else { last == -1 };
            if simple {
                alloc::vec![(flipped, LaurentPoly::one())]
            } else {
                alloc::vec![(flipped, LaurentPoly::one()), (code, t_minus_inverse())]
            }
        }
    }

    fn check_generator(&self, s: usize) -> Result<()> {
        if s == 0 || s > self.n {
            return Err(Error::GeneratorOutOfRange { index: s, max: self.n });
        }
        Ok(())
    }

    /// Applies the generator `T_s`.
    pub fn t_action(&self, s: usize, v: &ModuleVector) -> Result<ModuleVector> {
        self.check_generator(s)?;
        let mut out = ModuleVector::default();
        for (&code, c) in &v.terms {
            for (w, d) in self.act_basis(s, code) {
                out.add_term(w, &(c * &d));
            }
        }
        Ok(out)
    }

    /// Applies `T_s^{-1} = T_s - (t - t^-1)`.
    pub fn t_inverse_action(&self, s: usize, v: &ModuleVector) -> Result<ModuleVector> {
        let tv = self.t_action(s, v)?;
        Ok(tv.plus(&v.scaled(&-t_minus_inverse())))
    }

    /// The path `v'` and generator `s` with `m_v = T_s m_{v'}`, or `None`
    /// for the generating vector.
    fn descent(&self, code: u32) -> Option<(usize, u32)> {
        let n = self.n;
        // Minus: generated from all minus; Plus: from all plus.
        let up: i8 = if self.sign == Sign::Minus { 1 } else { -1 };
        if self.step(code, n - 1) == up {
            return Some((n, code ^ (1 << (n - 1))));
        }
        (0..n - 1).find(|&i| self.step(code, i) == up && self.step(code, i + 1) == -up).map(|i| (i + 1, code ^ (1 << i) ^ (1 << (i + 1))))
    }

    /// `bar(m_v)` by induction along descents.
    fn bar_basis(&mut self, code: u32) -> ModuleVector {
        if let Some(v) = self.bar_memo.get(&code) {
            return v.clone();
        }
        let out = match self.descent(code) {
            None => {
                let mut v = ModuleVector::default();
                v.add_term(code, &LaurentPoly::one());
                v
            }
            Some((s, prev)) => {
                let b = self.bar_basis(prev);
                // The generator index is in range by construction.
                self.t_inverse_action(s, &b).unwrap_or_default()
            }
        };
        self.bar_memo.insert(code, out.clone());
        out
    }

    /// The bar involution: `T_s -> T_s^{-1}`, `t -> t^-1`, generator fixed.
    pub fn bar(&mut self, v: &ModuleVector) -> ModuleVector {
        let mut out = ModuleVector::default();
        for (&code, c) in &v.terms {
            let cb = c.bar();
            for (w, d) in self.bar_basis(code).terms() {
                out.add_term(w, &(&cb * d));
            }
        }
        out
    }

    fn le(&self, a: &[i32], b: &[i32]) -> bool {
        match self.sign {
            Sign::Minus => a.iter().zip(b).all(|(x, y)| x <= y),
            Sign::Plus => a.iter().zip(b).all(|(x, y)| x >= y),
        }
    }

    /// The Kazhdan-Lusztig element `C_β`: bar invariant and equal to `m_β`
    /// modulo `t^-1 Z[t^-1]`.
    pub fn kl_basis(&mut self, beta: &BinaryPath) -> Result<ModuleVector> {
        if beta.len() != self.n {
            return Err(Error::LengthMismatch(beta.len(), self.n));
        }
        let code = beta.code();
        if let Some(v) = self.kl_memo.get(&code) {
            return Ok(v.clone());
        }
        let hb = beta.heights();
        let mut below: Vec<(i64, u32)> = (0..1u32 << self.n)
            .filter(|&c| c != code)
            .filter_map(|c| {
                let h = BinaryPath::from_code(c, self.n).heights();
                self.le(&h, &hb).then(|| (h.iter().map(|&x| x as i64).sum::<i64>(), c))
            })
            .collect();
        // Closest to β first: larger height sum below (Minus), smaller above (Plus).
        match self.sign {
            Sign::Minus => below.sort_by(|a, b| b.cmp(a)),
            Sign::Plus => below.sort(),
        }
        self.bar_basis(code);
        let mut p: Vec<(u32, LaurentPoly)> = alloc::vec![(code, LaurentPoly::one())];
        let mut p_bar = p.clone();
        for &(_, alpha) in &below {
            // With r the bar matrix, P_α - bar(P_α) = Σ_γ r_{α,γ} bar(P_γ).
            let mut s = LaurentPoly::zero();
            for (gamma, pg_bar) in p_bar.iter() {
                if let Some(r) = self.bar_memo.get(gamma).and_then(|v| v.terms.get(&alpha)) {
                    s += r * pg_bar;
                }
            }
            let pa = s.negative_part();
            if &pa - &pa.bar() != s {
                return Err(Error::Inconsistent(alloc::format!(
                    "no bar-invariant correction at {} below {}",
                    BinaryPath::from_code(alpha, self.n),
                    beta
                )));
            }
            if !pa.is_zero() {
                self.bar_basis(alpha);
                p_bar.push((alpha, pa.bar()));
                p.push((alpha, pa));
            }
        }
        let mut v = ModuleVector::default();
        for (c, poly) in p {
            v.add_term(c, &poly);
        }
        self.kl_memo.insert(code, v.clone());
        Ok(v)
    }

    /// The polynomial `P_{α,β}`: the coefficient of `m_α` in `C_β`, in `t`.
    /// Incomparable pairs give zero.
    pub fn kl_poly(&mut self, alpha: &BinaryPath, beta: &BinaryPath) -> Result<LaurentPoly> {
        if alpha.len() != self.n {
            return Err(Error::LengthMismatch(alpha.len(), self.n));
        }
        Ok(self.kl_basis(beta)?.coeff(alpha))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> BinaryPath {
        s.parse().unwrap()
    }

    #[test]
    fn generator_examples() {
        let h = HeckeModule::new(2, Sign::Minus);
        let v = h.t_action(1, &ModuleVector::basis(&p("-+"))).unwrap();
        assert_eq!(v, ModuleVector::basis(&p("+-")));
        let w = h.t_action(1, &ModuleVector::basis(&p("++"))).unwrap();
        assert_eq!(w, ModuleVector::basis(&p("++")).scaled(&-LaurentPoly::q_pow(-1)));
        assert!(h.t_action(3, &w).is_err());
    }

    #[test]
    fn generating_vector_is_bar_fixed() {
        for sign in [Sign::Minus, Sign::Plus] {
            let mut h = HeckeModule::new(4, sign);
            let g = BinaryPath::constant(if sign == Sign::Minus { -1 } else { 1 }, 4);
            let v = ModuleVector::basis(&g);
            assert_eq!(h.bar(&v), v);
        }
    }

    #[test]
    fn diagonal_is_one() {
        let mut h = HeckeModule::new(3, Sign::Plus);
        for b in BinaryPath::all(3) {
            assert!(h.kl_poly(&b, &b).unwrap().is_one());
        }
    }
}
