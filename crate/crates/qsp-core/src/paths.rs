//! Binary lattice paths, shapes and weight indices.
//!
//! A path of length `N` is a sequence of `±1` steps; its height profile is
//! the sequence of partial sums starting at 0. A weight index `k` for a
//! shape `m = (m_1, …, m_n)` has `|k_i| <= m_i` and `k_i ≡ m_i (mod 2)`; the
//! maps [`eta`] and [`zeta`] turn it into a path blockwise.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::{Error, Result};

/// The two signs that select a parabolic module or a partial order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// A weight index: one integer per tensor factor.
pub type Weight = Vec<i32>;

/// The dimensions `(m_1, …, m_n)` of the tensor factors `V_{m_i}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Shape {
    parts: Vec<u32>,
}

impl Shape {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidShape(String::from("a shape needs at least one part")));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidShape(alloc::format!("parts must be positive, got {parts:?}")));
        }
        Ok(Shape { parts })
    }

    /// `(1, 1, …, 1)` with `n` parts.
    pub fn ones(n: usize) -> Result<Self> {
        Self::new(vec![1; n])
    }

    /// `(m, m, …, m)` with `n` parts.
    pub fn uniform(m: u32, n: usize) -> Result<Self> {
        Self::new(vec![m; n])
    }

    /// Every shape with total size between 1 and `max_total`, ordered by
    /// total size and then lexicographically.
    pub fn all_up_to(max_total: usize) -> Vec<Shape> {
        let mut out = Vec::new();
        for total in 1..=max_total {
            let mut acc = Vec::new();
            compositions(total as u32, &mut acc, &mut out);
        }
        out
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of tensor factors.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Total number of sites `N = Σ m_i`.
    pub fn total(&self) -> usize {
        self.parts.iter().map(|&m| m as usize).sum()
    }

    pub fn is_all_ones(&self) -> bool {
        self.parts.iter().all(|&m| m == 1)
    }

    pub fn concat(&self, other: &Shape) -> Shape {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Shape { parts }
    }

    pub fn contains(&self, k: &[i32]) -> bool {
        k.len() == self.parts.len() && k.iter().zip(&self.parts).all(|(&ki, &mi)| ki.unsigned_abs() <= mi && (ki - mi as i32) % 2 == 0)
    }

    pub fn check(&self, k: &[i32]) -> Result<()> {
        if self.contains(k) {
            Ok(())
        } else {
            Err(Error::InvalidWeight { weight: k.to_vec(), shape: self.parts.clone() })
        }
    }

    /// All weight indices in lexicographic order.
    pub fn weights(&self) -> Vec<Weight> {
        let mut out = vec![Vec::new()];
        for &m in &self.parts {
            let m = m as i32;
            let mut next = Vec::new();
            for prefix in &out {
                for k in (-m..=m).step_by(2) {
                    let mut w = prefix.clone();
                    w.push(k);
                    next.push(w);
                }
            }
            out = next;
        }
        out
    }

    /// Number of weight indices, `Π (m_i + 1)`.
    pub fn dimension(&self) -> usize {
        self.parts.iter().map(|&m| m as usize + 1).product()
    }

    /// The lowest weight `(-m_1, …, -m_n)`.
    pub fn lowest_weight(&self) -> Weight {
        self.parts.iter().map(|&m| -(m as i32)).collect()
    }

    /// The highest weight `(m_1, …, m_n)`.
    pub fn highest_weight(&self) -> Weight {
        self.parts.iter().map(|&m| m as i32).collect()
    }

    /// Start offset of each block among the sites.
    pub fn offsets(&self) -> Vec<usize> {
        let mut acc = 0;
        self.parts
            .iter()
            .map(|&m| {
                let o = acc;
                acc += m as usize;
                o
            })
            .collect()
    }
}

fn compositions(rest: u32, acc: &mut Vec<u32>, out: &mut Vec<Shape>) {
    if rest == 0 {
        out.push(Shape { parts: acc.clone() });
        return;
    }
    for first in 1..=rest {
        acc.push(first);
        compositions(rest - first, acc, out);
        acc.pop();
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, m) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

impl FromStr for Shape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = s.split(',').map(|p| p.trim().parse::<u32>().map_err(|_| Error::Parse(String::from(s)))).collect::<Result<Vec<_>>>()?;
        Shape::new(parts)
    }
}

/// Partial sums `(k_1, k_1 + k_2, …)`.
pub fn partial_sums(k: &[i32]) -> Vec<i32> {
    let mut s = 0;
    k.iter()
        .map(|&x| {
            s += x;
            s
        })
        .collect()
}

/// The weight orders: `k <=_+ l` compares partial sums upward, `k <=_- l`
/// downward. They match the path orders on `η` images.
pub fn weight_le(sign: Sign, k: &[i32], l: &[i32]) -> bool {
    let (a, b) = (partial_sums(k), partial_sums(l));
    match sign {
        Sign::Plus => a.iter().zip(&b).all(|(x, y)| x <= y),
        Sign::Minus => a.iter().zip(&b).all(|(x, y)| x >= y),
    }
}

/// The `±1` site string of a weight: each block is `(m+k)/2` copies of `+1`
/// followed by `(m-k)/2` copies of `-1`.
pub fn kappa(shape: &Shape, k: &[i32]) -> Result<Vec<i8>> {
    shape.check(k)?;
    let mut out = Vec::with_capacity(shape.total());
    for (&ki, &mi) in k.iter().zip(shape.parts()) {
        let mi = mi as i32;
        out.extend(core::iter::repeat_n(1i8, ((mi + ki) / 2) as usize));
        out.extend(core::iter::repeat_n(-1i8, ((mi - ki) / 2) as usize));
    }
    Ok(out)
}

/// Block sums of a site string.
pub fn weight_of_sites(shape: &Shape, sites: &[i8]) -> Weight {
    let mut out = Vec::with_capacity(shape.len());
    let mut p = 0;
    for &m in shape.parts() {
        out.push(sites[p..p + m as usize].iter().map(|&x| x as i32).sum());
        p += m as usize;
    }
    out
}

/// A lattice path of `±1` steps.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryPath {
    steps: Vec<i8>,
}

impl BinaryPath {
    pub fn new(steps: Vec<i8>) -> Result<Self> {
        if steps.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::Parse(alloc::format!("steps must be ±1, got {steps:?}")));
        }
        Ok(BinaryPath { steps })
    }

    /// Decodes a bit mask: bit `i` set means step `i` is `+1`.
    pub fn from_code(code: u32, len: usize) -> Self {
        BinaryPath { steps: (0..len).map(|i| if code >> i & 1 == 1 { 1 } else { -1 }).collect() }
    }

    pub fn code(&self) -> u32 {
        self.steps.iter().enumerate().filter(|(_, &s)| s == 1).map(|(i, _)| 1u32 << i).sum()
    }

    /// All `2^len` paths in code order.
    pub fn all(len: usize) -> Vec<BinaryPath> {
        (0..1u32 << len).map(|c| Self::from_code(c, len)).collect()
    }

    pub fn constant(step: i8, len: usize) -> Self {
        BinaryPath { steps: vec![step; len] }
    }

    pub fn steps(&self) -> &[i8] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Heights `h(0) = 0, h(1), …, h(N)`.
    pub fn heights(&self) -> Vec<i32> {
        let mut h = Vec::with_capacity(self.steps.len() + 1);
        h.push(0);
        let mut acc = 0;
        for &s in &self.steps {
            acc += s as i32;
            h.push(acc);
        }
        h
    }

    pub fn endpoint(&self) -> i32 {
        self.steps.iter().map(|&s| s as i32).sum()
    }

    /// Number of lattice squares of the shifted Ferrers region above the path.
    pub fn area(&self) -> i64 {
        self.heights().iter().enumerate().skip(1).map(|(i, &h)| (i as i64 - h as i64) / 2).sum()
    }

    /// The path order: below for `Minus`, above for `Plus`. Endpoints may differ.
    pub fn order_le(&self, other: &BinaryPath, sign: Sign) -> Result<bool> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch(self.len(), other.len()));
        }
        let (a, b) = (self.heights(), other.heights());
        Ok(match sign {
            Sign::Minus => a.iter().zip(&b).all(|(x, y)| x <= y),
            Sign::Plus => a.iter().zip(&b).all(|(x, y)| x >= y),
        })
    }

    /// The highest path lying below both inputs.
    pub fn min_path(&self, other: &BinaryPath) -> Result<BinaryPath> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch(self.len(), other.len()));
        }
        let h: Vec<i32> = self.heights().iter().zip(other.heights()).map(|(&x, y)| x.min(y)).collect();
        Ok(BinaryPath { steps: h.windows(2).map(|w| (w[1] - w[0]) as i8).collect() })
    }
}

impl fmt::Display for BinaryPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.steps {
            f.write_str(if s == 1 { "+" } else { "-" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryPath({self})")
    }
}

/// Parses `+-+-`; the Unicode minus sign is accepted too.
impl FromStr for BinaryPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '+' => Ok(1),
                '-' | '\u{2212}' => Ok(-1),
                _ => Err(Error::Parse(String::from(s))),
            })
            .collect::<Result<Vec<i8>>>()
            .map(|steps| BinaryPath { steps })
    }
}

/// The path of a weight with each block written as `-^{(m+k)/2} +^{(m-k)/2}`.
pub fn eta(shape: &Shape, k: &[i32]) -> Result<BinaryPath> {
    let sites = kappa(shape, k)?;
    Ok(BinaryPath { steps: sites.iter().map(|&x| -x).collect() })
}

/// The path of a weight with each block written as `+^{(m-k)/2} -^{(m+k)/2}`.
pub fn zeta(shape: &Shape, k: &[i32]) -> Result<BinaryPath> {
    shape.check(k)?;
    let mut steps = Vec::with_capacity(shape.total());
    for (&ki, &mi) in k.iter().zip(shape.parts()) {
        let mi = mi as i32;
        steps.extend(core::iter::repeat_n(1i8, ((mi - ki) / 2) as usize));
        steps.extend(core::iter::repeat_n(-1i8, ((mi + ki) / 2) as usize));
    }
    Ok(BinaryPath { steps })
}

/// Inverts [`eta`]: the weight whose image is `path`, if any.
pub fn eta_inverse(shape: &Shape, path: &BinaryPath) -> Result<Weight> {
    if path.len() != shape.total() {
        return Err(Error::LengthMismatch(path.len(), shape.total()));
    }
    let sites: Vec<i8> = path.steps().iter().map(|&s| -s).collect();
    let k = weight_of_sites(shape, &sites);
    if eta(shape, &k)? == *path {
        Ok(k)
    } else {
        Err(Error::NotEtaImage(alloc::format!("{path}")))
    }
}

/// The `η` images lying between `alpha` and `gamma` in the `Minus` order.
pub fn admissible_paths(alpha: &BinaryPath, gamma: &BinaryPath, shape: &Shape) -> Result<Vec<BinaryPath>> {
    eta_inverse(shape, alpha)?;
    eta_inverse(shape, gamma)?;
    if !alpha.order_le(gamma, Sign::Minus)? {
        return Err(Error::Incomparable { lower: alloc::format!("{alpha}"), upper: alloc::format!("{gamma}") });
    }
    let mut out = Vec::new();
    for k in shape.weights() {
        let b = eta(shape, &k)?;
        if alpha.order_le(&b, Sign::Minus)? && b.order_le(gamma, Sign::Minus)? {
            out.push(b);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> BinaryPath {
        s.parse().unwrap()
    }

    #[test]
    fn eta_zeta_examples() {
        let s = Shape::uniform(2, 4).unwrap();
        assert_eq!(eta(&s, &[0, 0, 0, 0]).unwrap(), p("-+-+-+-+"));
        assert_eq!(eta(&s, &[-2, -2, -2, 2]).unwrap(), p("++++++--"));
        assert_eq!(zeta(&Shape::uniform(2, 2).unwrap(), &[0, -2]).unwrap(), p("+-++"));
        assert!(eta(&s, &[1, 0, 0, 0]).is_err());
    }

    #[test]
    fn min_and_order() {
        assert_eq!(p("+---+").min_path(&p("-+++-")).unwrap(), p("-+--+"));
        assert!(p("--++").order_le(&p("++--"), Sign::Minus).unwrap());
        assert!(p("+-").order_le(&p("+-"), Sign::Plus).unwrap());
        assert!(p("+").order_le(&p("+-"), Sign::Plus).is_err());
    }

    #[test]
    fn areas() {
        assert_eq!(p("++").area(), 0);
        assert_eq!(p("----").area(), 10);
    }

    #[test]
    fn admissible() {
        let s = Shape::uniform(2, 2).unwrap();
        let a = p("-+-+");
        assert_eq!(admissible_paths(&a, &a, &s).unwrap(), vec![a.clone()]);
        let adm = admissible_paths(&a, &p("++++"), &s).unwrap();
        // k' ranges over weights with partial sums at most those of (0, 0).
        let expect: Vec<BinaryPath> =
            s.weights().into_iter().filter(|k| weight_le(Sign::Minus, &[0, 0], k)).map(|k| eta(&s, &k).unwrap()).collect();
        assert_eq!(adm.len(), expect.len());
        for b in expect {
            assert!(adm.contains(&b));
        }
    }

    #[test]
    fn shapes_up_to_three() {
        let all: Vec<String> = Shape::all_up_to(3).iter().map(|s| alloc::format!("{s}")).collect();
        assert_eq!(all, ["1", "1,1", "2", "1,1,1", "1,2", "2,1", "3"]);
    }
}
