//! Laurent polynomials in `q` with big-integer coefficients.
//!
//! [`LaurentPoly`] is the scalar ring of the whole crate. [`RationalFn`] is
//! its fraction field, kept in lowest terms so that structural equality is
//! mathematical equality. Quantum integers, factorials and binomials live
//! here as free functions.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// An element of `Z[q, q^-1]`.
///
/// Stored densely as a lowest exponent plus the coefficient run up to the
/// highest exponent. Both end coefficients are nonzero, so every value has
/// exactly one representation and the derived equality is exact.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    fn from_dense(mut low: i64, mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == coeffs.len() {
            return Self::zero();
        }
        if lead > 0 {
            coeffs.drain(..lead);
            low += lead as i64;
        }
        LaurentPoly { low, coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(0, c)
    }

    /// `c * q^exp`.
    pub fn monomial(exp: i64, c: impl Into<BigInt>) -> Self {
        Self::from_dense(exp, vec![c.into()])
    }

    /// `q^exp`.
    pub fn q_pow(exp: i64) -> Self {
        Self::monomial(exp, 1)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let terms: Vec<(i64, BigInt)> = terms.into_iter().map(|(e, c)| (e, c.into())).collect();
        let Some(lo) = terms.iter().map(|t| t.0).min() else {
            return Self::zero();
        };
        let hi = terms.iter().map(|t| t.0).max().unwrap_or(lo);
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - lo) as usize] += c;
        }
        Self::from_dense(lo, coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn degree(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn low_degree(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        let i = exp - self.low;
        if i < 0 || i >= self.coeffs.len() as i64 {
            BigInt::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    /// Leading coefficient, zero for the zero polynomial.
    pub fn leading_coeff(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        let low = self.low;
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(i, c)| (low + i as i64, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// True when the polynomial is a single term.
    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    /// The bar involution `q -> q^-1`.
    pub fn bar(&self) -> Self {
        match self.degree() {
            None => Self::zero(),
            Some(d) => {
                let mut c = self.coeffs.clone();
                c.reverse();
                LaurentPoly { low: -d, coeffs: c }
            }
        }
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        let mut r = self.clone();
        if !r.is_zero() {
            r.low += k;
        }
        r
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { low: self.low, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// The substitution `q -> -q`.
    pub fn negate_variable(&self) -> Self {
        let coeffs =
            self.coeffs.iter().enumerate().map(|(i, c)| if (self.low + i as i64).rem_euclid(2) == 1 { -c } else { c.clone() }).collect();
        LaurentPoly { low: self.low, coeffs }
    }

    /// The part made of terms with negative exponent.
    pub fn negative_part(&self) -> Self {
        if self.is_zero() || self.low >= 0 {
            return Self::zero();
        }
        let keep = ((-self.low) as usize).min(self.coeffs.len());
        Self::from_dense(self.low, self.coeffs[..keep].to_vec())
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut r = Self::one();
        for _ in 0..n {
            r = &r * self;
        }
        r
    }

    pub fn is_bar_symmetric(&self) -> bool {
        *self == self.bar()
    }

    /// Every coefficient is nonnegative.
    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Membership in `q^-1 Z[q^-1]`.
    pub fn in_negative_lattice(&self) -> bool {
        self.degree().is_none_or(|d| d < 0)
    }

    /// Membership in `q^-1 N[q^-1]`.
    pub fn in_negative_cone(&self) -> bool {
        self.in_negative_lattice() && self.has_nonnegative_coeffs()
    }

    /// Value at `q = 1`.
    pub fn at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Exact value at a nonzero rational point.
    pub fn evaluate_at(&self, q0: &BigRational) -> Result<BigRational> {
        if q0.is_zero() {
            return Err(Error::ZeroEvaluation);
        }
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q0 + BigRational::from_integer(c.clone());
        }
        let shift = if self.low >= 0 { q0.pow(self.low as i32) } else { q0.recip().pow((-self.low) as i32) };
        Ok(acc * shift)
    }

    /// Exact quotient `self / d`, failing when the division leaves a remainder.
    pub fn exact_div(&self, d: &LaurentPoly) -> Result<LaurentPoly> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let not_divisible = || Error::NotDivisible { dividend: format!("{self}"), divisor: format!("{d}") };
        match poly_div_exact(&self.coeffs, &d.coeffs) {
            Some(q) => Ok(Self::from_dense(self.low - d.low, q)),
            None => Err(not_divisible()),
        }
    }

    /// Greatest common divisor of the coefficients (nonnegative).
    pub fn content(&self) -> BigInt {
        content(&self.coeffs)
    }
}

/// Greatest common divisor of a coefficient run.
fn content(c: &[BigInt]) -> BigInt {
    c.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

/// Exact division of ordinary polynomials given as ascending coefficient runs.
fn poly_div_exact(a: &[BigInt], d: &[BigInt]) -> Option<Vec<BigInt>> {
    let (da, dd) = (a.len(), d.len());
    if da < dd {
        return if a.iter().all(Zero::is_zero) { Some(Vec::new()) } else { None };
    }
    let lc = d.last()?;
    let mut r = a.to_vec();
    let mut q = vec![BigInt::zero(); da - dd + 1];
    for i in (0..q.len()).rev() {
        let top = &r[i + dd - 1];
        if top.is_zero() {
            continue;
        }
        let (c, rem) = top.div_rem(lc);
        if !rem.is_zero() {
            return None;
        }
        for (j, dj) in d.iter().enumerate() {
            r[i + j] -= &c * dj;
        }
        q[i] = c;
    }
    r.iter().all(Zero::is_zero).then_some(q)
}

/// Divides out the content and makes the leading coefficient positive.
fn primitive(v: &[BigInt]) -> Vec<BigInt> {
    let g = content(v);
    if g.is_zero() {
        return Vec::new();
    }
    let g = if v.last().is_some_and(Signed::is_negative) { -g } else { g };
    v.iter().map(|c| c / &g).collect()
}

fn eval_int(v: &[BigInt], x: &BigInt) -> BigInt {
    v.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

/// Heuristic gcd by evaluation and symmetric-remainder interpolation,
/// with a primitive remainder sequence as fallback.
fn poly_gcd_primitive(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let a = primitive(a);
    let b = primitive(b);
    if a.is_empty() {
        return b;
    }
    if b.is_empty() {
        return a;
    }
    if a.len() == 1 || b.len() == 1 {
        return vec![BigInt::one()];
    }
    let norm = |v: &[BigInt]| v.iter().map(|c| c.abs()).max().unwrap_or_default();
    let mut xi: BigInt = norm(&a).min(norm(&b)) * 2 + 29;
    for _ in 0..6 {
        let g = eval_int(&a, &xi).gcd(&eval_int(&b, &xi));
        let mut h = Vec::new();
        let mut rest = g;
        let half = &xi / 2;
        while !rest.is_zero() {
            let mut c = rest.mod_floor(&xi);
            if c > half {
                c -= &xi;
            }
            rest = (rest - &c) / &xi;
            h.push(c);
        }
        let h = primitive(&h);
        if !h.is_empty() && poly_div_exact(&a, &h).is_some() && poly_div_exact(&b, &h).is_some() {
            return h;
        }
        xi = xi * 73794 / 27011;
    }
    prs_gcd(a, b)
}

fn prs_gcd(mut a: Vec<BigInt>, mut b: Vec<BigInt>) -> Vec<BigInt> {
    if a.len() < b.len() {
        core::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let lc = b.last().cloned().unwrap_or_default();
        let mut r = a.clone();
        while r.len() >= b.len() {
            let lr = r.last().cloned().unwrap_or_default();
            let off = r.len() - b.len();
            for c in r.iter_mut() {
                *c *= &lc;
            }
            for (j, bj) in b.iter().enumerate() {
                r[off + j] -= &lr * bj;
            }
            trim(&mut r);
        }
        a = b;
        b = primitive(&r);
    }
    primitive(&a)
}

/// Greatest common divisor of two Laurent polynomials, normalized to lowest
/// exponent zero and positive leading coefficient. Includes the integer
/// content.
pub fn gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let g = content(&a.coeffs).gcd(&content(&b.coeffs));
    let h = poly_gcd_primitive(&a.coeffs, &b.coeffs);
    if h.is_empty() {
        return LaurentPoly::zero();
    }
    LaurentPoly::from_dense(0, h).scale(&g)
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.low.min(rhs.low);
        let hi = self.degree().max(rhs.degree()).unwrap_or(lo);
        let mut c = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (i, x) in self.coeffs.iter().enumerate() {
            c[(self.low - lo) as usize + i] += x;
        }
        for (i, x) in rhs.coeffs.iter().enumerate() {
            c[(rhs.low - lo) as usize + i] += x;
        }
        LaurentPoly::from_dense(lo, c)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { low: self.low, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut c = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in rhs.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    c[i + j] += x * y;
                }
            }
        }
        LaurentPoly::from_dense(self.low + rhs.low, c)
    }
}

macro_rules! forward_binops {
    ($t:ty; $($tr:ident $m:ident),*) => {$(
        impl $tr<$t> for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t { $tr::$m(&self, &rhs) }
        }
        impl $tr<&$t> for $t {
            type Output = $t;
            fn $m(self, rhs: &$t) -> $t { $tr::$m(&self, rhs) }
        }
        impl $tr<$t> for &$t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t { $tr::$m(self, &rhs) }
        }
    )*};
}

macro_rules! forward_assign {
    ($t:ty; $($tr:ident $m:ident $op:tt),*) => {$(
        impl $tr<&$t> for $t {
            fn $m(&mut self, rhs: &$t) { *self = &*self $op rhs; }
        }
        impl $tr<$t> for $t {
            fn $m(&mut self, rhs: $t) { *self = &*self $op &rhs; }
        }
    )*};
}

forward_binops!(LaurentPoly; Add add, Sub sub, Mul mul);
forward_assign!(LaurentPoly; AddAssign add_assign +, SubAssign sub_assign -, MulAssign mul_assign *);

impl core::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |a, b| a + b)
    }
}

impl core::iter::Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::one(), |a, b| a * b)
    }
}

/// Writes `2*q^3 - q + 5 - q^-2`, exponents descending.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut terms: Vec<(i64, &BigInt)> = self.terms().collect();
        terms.reverse();
        for (n, (e, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            match (n, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let unit = a.is_one();
            match e {
                0 => write!(f, "{a}")?,
                _ if unit => {}
                _ => write!(f, "{a}*")?,
            }
            match e {
                0 => {}
                1 => f.write_str("q")?,
                _ => write!(f, "q^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

/// Parses the canonical text form, also accepting `c*q^e` terms in any order.
impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(String::from(s));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        let mut terms = Vec::new();
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let (sign, body) = match rest.as_bytes()[0] {
                b'+' => (1, &rest[1..]),
                b'-' => (-1, &rest[1..]),
                _ => (1, rest),
            };
            // A term ends at the next sign that is not an exponent sign.
            let bytes = body.as_bytes();
            let mut end = bytes.len();
            for i in 1..bytes.len() {
                if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' {
                    end = i;
                    break;
                }
            }
            let term = &body[..end];
            rest = &body[end..];
            let (coef, var) = match term.find('q') {
                None => (term, None),
                Some(p) => (term[..p].trim_end_matches('*'), Some(&term[p + 1..])),
            };
            let c: BigInt = if coef.is_empty() { BigInt::one() } else { coef.parse().map_err(|_| bad())? };
            let e: i64 = match var {
                None => 0,
                Some("") => 1,
                Some(v) => v.strip_prefix('^').ok_or_else(bad)?.parse().map_err(|_| bad())?,
            };
            terms.push((e, c * sign));
        }
        Ok(LaurentPoly::from_terms(terms))
    }
}

/// Which quantum number [`quantum_numbers`] returns.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuantumKind {
    Int,
    Factorial,
}

/// The quantum integer `[n] = (q^n - q^-n)/(q - q^-1)`, defined for all `n`.
pub fn quantum_int(n: i64) -> LaurentPoly {
    if n == 0 {
        return LaurentPoly::zero();
    }
    let s = if n > 0 { 1 } else { -1 };
    let a = n.abs();
    let mut coeffs = Vec::with_capacity((2 * a - 1) as usize);
    for i in 0..(2 * a - 1) {
        coeffs.push(BigInt::from(if i % 2 == 0 { s } else { 0 }));
    }
    LaurentPoly::from_dense(-(a - 1), coeffs)
}

/// The quantum factorial `[n]! = [1][2]...[n]`.
pub fn quantum_factorial(n: i64) -> Result<LaurentPoly> {
    if n < 0 {
        return Err(Error::NegativeFactorial(n));
    }
    Ok((1..=n).map(quantum_int).product())
}

/// Quantum integer or factorial, selected by `kind`.
pub fn quantum_numbers(n: i64, kind: QuantumKind) -> Result<LaurentPoly> {
    match kind {
        QuantumKind::Int => Ok(quantum_int(n)),
        QuantumKind::Factorial => quantum_factorial(n),
    }
}

/// The quantum binomial `[n]!/([m]![n-m]!)`, zero outside `0 <= m <= n`.
pub fn q_binomial(n: i64, m: i64) -> LaurentPoly {
    if n < 0 || m < 0 || m > n {
        return LaurentPoly::zero();
    }
    // Factorials of nonnegative integers always exist and the quotient is
    // always a Laurent polynomial.
    let top = quantum_factorial(n).unwrap_or_default();
    let bottom = quantum_factorial(m).unwrap_or_default() * quantum_factorial(n - m).unwrap_or_default();
    top.exact_div(&bottom).unwrap_or_default()
}

/// `q^n + q^-n`.
pub fn q_pow_sum(n: i64) -> LaurentPoly {
    if n == 0 {
        return LaurentPoly::constant(2);
    }
    LaurentPoly::q_pow(n) + LaurentPoly::q_pow(-n)
}

/// An element of the fraction field `Q(q)`, always kept in lowest terms.
///
/// The denominator has lowest exponent zero and positive leading
/// coefficient, and is coprime to the numerator, so structural equality is
/// equality of rational functions.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFn {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFn {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let num_low = num.low - den.low;
        let a = LaurentPoly { low: 0, coeffs: num.coeffs };
        let b = LaurentPoly { low: 0, coeffs: den.coeffs };
        let g = gcd(&a, &b);
        let (mut a, mut b) = if g.is_one() {
            (a, b)
        } else {
            // g divides both by construction.
            (a.exact_div(&g).unwrap_or_default(), b.exact_div(&g).unwrap_or_default())
        };
        if b.leading_coeff().is_negative() {
            a = -a;
            b = -b;
        }
        let b_low = b.low;
        RationalFn { num: a.shift(num_low - b_low), den: b.shift(-b_low) }
    }

    pub fn zero() -> Self {
        RationalFn { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        Self::from(LaurentPoly::one())
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn bar(&self) -> Self {
        Self::normalized(self.num.bar(), self.den.bar())
    }

    /// The Laurent polynomial this function equals, if it is one.
    pub fn to_laurent(&self) -> Result<LaurentPoly> {
        self.num.exact_div(&self.den)
    }

    pub fn evaluate_at(&self, q0: &BigRational) -> Result<BigRational> {
        let d = self.den.evaluate_at(q0)?;
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.num.evaluate_at(q0)? / d)
    }
}

impl From<LaurentPoly> for RationalFn {
    fn from(p: LaurentPoly) -> Self {
        RationalFn { num: p, den: LaurentPoly::one() }
    }
}

impl From<i64> for RationalFn {
    fn from(c: i64) -> Self {
        Self::from(LaurentPoly::constant(c))
    }
}

impl Add<&RationalFn> for &RationalFn {
    type Output = RationalFn;
    fn add(self, rhs: &RationalFn) -> RationalFn {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RationalFn::normalized(&self.num + &rhs.num, self.den.clone());
        }
        RationalFn::normalized(&self.num * &rhs.den + &rhs.num * &self.den, &self.den * &rhs.den)
    }
}

impl Neg for &RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        RationalFn { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        -&self
    }
}

impl Sub<&RationalFn> for &RationalFn {
    type Output = RationalFn;
    fn sub(self, rhs: &RationalFn) -> RationalFn {
        self + &(-rhs)
    }
}

impl Mul<&RationalFn> for &RationalFn {
    type Output = RationalFn;
    fn mul(self, rhs: &RationalFn) -> RationalFn {
        if self.is_zero() || rhs.is_zero() {
            return RationalFn::zero();
        }
        RationalFn::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

/// Division panics on a zero divisor, like integer division; use
/// [`RationalFn::recip`] for a checked variant.
impl Div<&RationalFn> for &RationalFn {
    type Output = RationalFn;
    fn div(self, rhs: &RationalFn) -> RationalFn {
        assert!(!rhs.is_zero(), "division of rational functions by zero");
        RationalFn::normalized(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

forward_binops!(RationalFn; Add add, Sub sub, Mul mul, Div div);
forward_assign!(RationalFn; AddAssign add_assign +, SubAssign sub_assign -, MulAssign mul_assign *);

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFn({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn quantum_integers() {
        assert_eq!(quantum_int(3), p("q^2 + 1 + q^-2"));
        assert!(quantum_int(0).is_zero());
        assert_eq!(quantum_int(-2), -quantum_int(2));
        assert_eq!(quantum_factorial(3).unwrap(), p("q^3 + 2*q + 2*q^-1 + q^-3"));
        assert_eq!(quantum_factorial(-1), Err(Error::NegativeFactorial(-1)));
    }

    #[test]
    fn binomials() {
        assert_eq!(q_binomial(4, 2), p("q^4 + q^2 + 2 + q^-2 + q^-4"));
        assert!(q_binomial(5, 0).is_one());
        assert!(q_binomial(5, 7).is_zero());
    }

    #[test]
    fn bar_examples() {
        assert_eq!(p("q^2 - 3*q^-1").bar(), p("q^-2 - 3*q"));
        assert!(LaurentPoly::zero().bar().is_zero());
    }

    #[test]
    fn exact_division() {
        // [6]/[3] = q^3 + q^-3, checked by re-multiplication.
        let r = quantum_int(6).exact_div(&quantum_int(3)).unwrap();
        assert_eq!(&r * &quantum_int(3), quantum_int(6));
        assert_eq!(r, p("q^3 + q^-3"));
        assert!(matches!(quantum_int(3).exact_div(&quantum_int(2)), Err(Error::NotDivisible { .. })));
        assert_eq!(p("q - 7").exact_div(&LaurentPoly::one()).unwrap(), p("q - 7"));
        assert_eq!(p("q").exact_div(&LaurentPoly::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn evaluation() {
        let two = BigRational::from_integer(2.into());
        let one = BigRational::one();
        assert_eq!(p("q + q^-1").evaluate_at(&two).unwrap(), BigRational::new(5.into(), 2.into()));
        assert_eq!(quantum_int(7).evaluate_at(&one).unwrap(), BigRational::from_integer(7.into()));
        assert_eq!(quantum_factorial(3).unwrap().evaluate_at(&one).unwrap(), BigRational::from_integer(6.into()));
        assert_eq!(p("q").evaluate_at(&BigRational::zero()), Err(Error::ZeroEvaluation));
    }

    #[test]
    fn display_round_trip() {
        for s in ["0", "1", "-1", "q", "-q^-1", "2*q^3 - q + 5 - q^-2"] {
            assert_eq!(p(s).to_string(), s);
        }
        assert_eq!(p("1*q^0 + 3*q^1").to_string(), "3*q + 1");
    }

    #[test]
    fn gcd_and_rational_normal_form() {
        let a = quantum_int(6);
        let b = quantum_int(4);
        // gcd([6],[4]) = [2] up to a unit.
        let g = gcd(&a, &b);
        assert_eq!(g, quantum_int(2).shift(1));
        let r = RationalFn::new(a.clone(), b.clone()).unwrap();
        let s = RationalFn::new(&a * &quantum_int(5), &b * &quantum_int(5)).unwrap();
        assert_eq!(r, s);
        let back = &r * &RationalFn::from(b);
        assert_eq!(back.to_laurent().unwrap(), a);
    }

    #[test]
    fn negate_variable_and_parts() {
        assert_eq!(p("q^2 + q - 1 + 2*q^-1").negate_variable(), p("q^2 - q - 1 - 2*q^-1"));
        assert_eq!(p("q + 1 + q^-1 + q^-3").negative_part(), p("q^-1 + q^-3"));
        assert!(p("q^-1 + 2*q^-4").in_negative_cone());
        assert!(!p("1 + q^-1").in_negative_lattice());
    }
}
