//! Ballot-strip tilings of skew shifted Ferrers regions and their
//! generating polynomials.
//!
//! The region between two paths `α <= β` (in the `Minus` order) is the set
//! of lattice squares, one per point `(i, j)` with `1 <= i <= N`,
//! `h_α(i) < j < h_β(i)` and `i + j` odd. A ballot strip is a chain of
//! squares in consecutive columns, each a diagonal step `(1, ±1)` from the
//! last, never dipping below the level of its leftmost square. It either
//! returns to that level (`l' = 0`) or stops in the last column `l' > 0`
//! levels higher, on an anchor square; `l` counts its remaining up-down
//! pairs. Two stacking rules select admissible tilings:
//!
//! - Rule I: a strip resting on another strip rests on it along its whole
//!   underside; strips of each odd-tail length `(l, l')` come in pairs; and
//!   no tail has even length `>= 2`.
//! - Rule II: a strip covering part of another strip's upper boundary covers
//!   all of it; a strip with odd tail is capped by a strip with tail one
//!   longer, and a strip with even tail rests on one with tail one shorter.
//!   A `p`-domain of unit squares may fill the bottom of the region.
//!
//! Generating polynomials are returned in the variable `t`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::laurent::LaurentPoly;
use crate::paths::{eta, eta_inverse, zeta, BinaryPath, Shape, Sign};
use crate::{Error, Result};

/// A square of the region, by the coordinates `(column, row)` of its centre.
pub type Cell = (i32, i32);

/// The two stacking rules.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    I,
    II,
}

/// The squares between two comparable paths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewDomain {
    lower: BinaryPath,
    upper: BinaryPath,
    cells: Vec<Cell>,
}

impl SkewDomain {
    pub fn new(lower: &BinaryPath, upper: &BinaryPath) -> Result<Self> {
        if !lower.order_le(upper, Sign::Minus)? {
            return Err(incomparable(lower, upper));
        }
        let (hl, hu) = (lower.heights(), upper.heights());
        let mut cells = Vec::new();
        for i in 1..=lower.len() {
            for j in (hl[i] + 1)..hu[i] {
                if (i as i32 + j).rem_euclid(2) == 1 {
                    cells.push((i as i32, j));
                }
            }
        }
        Ok(SkewDomain { lower: lower.clone(), upper: upper.clone(), cells })
    }

    pub fn lower(&self) -> &BinaryPath {
        &self.lower
    }

    pub fn upper(&self) -> &BinaryPath {
        &self.upper
    }

    /// Squares ordered by column, then row.
    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    /// Squares in the last column.
    pub fn anchors(&self) -> Vec<Cell> {
        let n = self.lower.len() as i32;
        self.cells.iter().copied().filter(|c| c.0 == n).collect()
    }
}

fn incomparable(lower: &BinaryPath, upper: &BinaryPath) -> Error {
    Error::Incomparable { lower: alloc::format!("{lower}"), upper: alloc::format!("{upper}") }
}

/// One tile of a configuration.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Strip {
    /// Squares from left to right.
    pub cells: Vec<Cell>,
    pub l: u32,
    pub l_prime: u32,
}

/// A tiling accepted by one of the rules, with its weight in `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StripConfig {
    pub strips: Vec<Strip>,
    /// Unit squares of the `p`-domain (Rule II only).
    pub p_domain: Vec<Cell>,
    pub weight: LaurentPoly,
}

impl StripConfig {
    /// One character per square, top row first: strips are lettered in
    /// order, `p`-domain squares are `#`, other lattice points are `.`.
    pub fn render(&self, n: usize) -> String {
        let mut owner: BTreeMap<Cell, char> = BTreeMap::new();
        const LETTERS: &[u8] = b"abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789";
        for (k, s) in self.strips.iter().enumerate() {
            let ch = LETTERS[k % LETTERS.len()] as char;
            for &c in &s.cells {
                owner.insert(c, ch);
            }
        }
        for &c in &self.p_domain {
            owner.insert(c, '#');
        }
        let (lo, hi) = owner.keys().fold((i32::MAX, i32::MIN), |(a, b), c| (a.min(c.1), b.max(c.1)));
        let mut out = String::new();
        if owner.is_empty() {
            return out;
        }
        for j in (lo..=hi).rev() {
            for i in 1..=n as i32 {
                out.push(match owner.get(&(i, j)) {
                    Some(&ch) => ch,
                    None if (i + j).rem_euclid(2) == 1 => '.',
                    None => ' ',
                });
            }
            out.push('\n');
        }
        out
    }
}

/// A strip placed during the search, with precomputed neighbourhoods.
struct Placed {
    cells: Vec<usize>,
    mask: u128,
    l: u32,
    lp: u32,
    /// Rule I: squares directly below, `None` outside the tiled region.
    below: Vec<Option<usize>>,
    /// Rule II: boundary squares above, `None` outside the tiled region.
    shell: Vec<Option<usize>>,
}

struct Tiler {
    n: i32,
    rule: Rule,
    cells: Vec<Cell>,
    grid: BTreeMap<Cell, usize>,
    p_domain: Vec<Cell>,
    owner: Vec<Option<usize>>,
    placed: Vec<Placed>,
}

impl Tiler {
    fn new(n: usize, rule: Rule, cells: Vec<Cell>, p_domain: Vec<Cell>) -> Result<Self> {
        if cells.len() > 128 {
            return Err(Error::Inconsistent(alloc::format!("region of {} squares is too large", cells.len())));
        }
        let grid = cells.iter().enumerate().map(|(k, &c)| (c, k)).collect();
        let owner = vec![None; cells.len()];
        Ok(Tiler { n: n as i32, rule, cells, grid, p_domain, owner, placed: Vec::new() })
    }

    fn id(&self, c: Cell) -> Option<usize> {
        self.grid.get(&c).copied()
    }

    /// Candidate strips whose leftmost square is `start`.
    fn strips_from(&self, start: usize, free: u128) -> Vec<(Vec<usize>, u32)> {
        let mut out = Vec::new();
        let mut path = vec![start];
        self.extend(start, 0, free & !(1u128 << start), &mut path, &mut out);
        out
    }

    fn extend(&self, cur: usize, level: i32, free: u128, path: &mut Vec<usize>, out: &mut Vec<(Vec<usize>, u32)>) {
        let (i, j) = self.cells[cur];
        if level == 0 {
            out.push((path.clone(), 0));
        } else if i == self.n {
            // Rule I forbids even tails of length two or more.
            if !(self.rule == Rule::I && level % 2 == 0) {
                out.push((path.clone(), level as u32));
            }
        }
        if i == self.n {
            return;
        }
        for d in [1, -1] {
            if level + d < 0 {
                continue;
            }
            if let Some(next) = self.id((i + 1, j + d)) {
                if free >> next & 1 == 1 {
                    path.push(next);
                    self.extend(next, level + d, free & !(1u128 << next), path, out);
                    path.pop();
                }
            }
        }
    }

    fn make_placed(&self, cells: Vec<usize>, lp: u32) -> Placed {
        let len = cells.len() as u32;
        let mask = cells.iter().fold(0u128, |m, &c| m | 1u128 << c);
        let coords: Vec<Cell> = cells.iter().map(|&c| self.cells[c]).collect();
        let below = match self.rule {
            Rule::I => coords.iter().map(|&(i, j)| self.id((i, j - 2))).collect(),
            Rule::II => Vec::new(),
        };
        let shell = match self.rule {
            Rule::I => Vec::new(),
            Rule::II => {
                let mut s: Vec<Cell> = Vec::new();
                for &(i, j) in &coords {
                    for c in [(i, j + 2), (i - 1, j + 1), (i + 1, j + 1)] {
                        if c.0 >= 1 && c.0 <= self.n && !coords.contains(&c) && !self.p_domain.contains(&c) && !s.contains(&c) {
                            s.push(c);
                        }
                    }
                }
                s.into_iter().map(|c| self.id(c)).collect()
            }
        };
        Placed { cells, mask, l: (len - 1 - lp) / 2, lp, below, shell }
    }

    /// The pairwise stacking condition: if `touch` meets the strip `other`,
    /// it must lie inside it entirely.
    fn touch_ok(touch: &[Option<usize>], other_mask: u128) -> bool {
        let hits = touch.iter().any(|c| c.is_some_and(|c| other_mask >> c & 1 == 1));
        !hits || touch.iter().all(|c| c.is_some_and(|c| other_mask >> c & 1 == 1))
    }

    fn compatible(&self, x: &Placed) -> bool {
        self.placed.iter().all(|y| {
            let (tx, ty) = match self.rule {
                Rule::I => (&x.below, &y.below),
                Rule::II => (&x.shell, &y.shell),
            };
            Self::touch_ok(tx, y.mask) && Self::touch_ok(ty, x.mask)
        })
    }

    fn search(&mut self, free: u128, visit: &mut dyn FnMut(&Tiler)) {
        if free == 0 {
            if self.final_ok() {
                visit(self);
            }
            return;
        }
        let start = free.trailing_zeros() as usize;
        for (cells, lp) in self.strips_from(start, free) {
            let x = self.make_placed(cells, lp);
            if !self.compatible(&x) {
                continue;
            }
            let rest = free & !x.mask;
            let k = self.placed.len();
            for &c in &x.cells {
                self.owner[c] = Some(k);
            }
            self.placed.push(x);
            self.search(rest, visit);
            let x = self.placed.pop();
            for &c in x.iter().flat_map(|x| x.cells.iter()) {
                self.owner[c] = None;
            }
        }
    }

    fn final_ok(&self) -> bool {
        match self.rule {
            Rule::I => {
                let mut counts: BTreeMap<(u32, u32), u32> = BTreeMap::new();
                for s in self.placed.iter().filter(|s| s.lp % 2 == 1) {
                    *counts.entry((s.l, s.lp)).or_default() += 1;
                }
                counts.values().all(|c| c % 2 == 0)
            }
            Rule::II => self.placed.iter().enumerate().all(|(k, s)| s.lp == 0 || self.has_partner(k, s)),
        }
    }

    /// Rule II partner: odd tails are capped by a strip with tail `l'+1` and
    /// `l'' >= l`; even tails rest on a strip with tail `l'-1` and `l'' <= l`.
    fn has_partner(&self, k: usize, s: &Placed) -> bool {
        let odd = s.lp % 2 == 1;
        let dj = if odd { 2 } else { -2 };
        let neighbours: Vec<usize> = s
            .cells
            .iter()
            .filter_map(|&c| {
                let (i, j) = self.cells[c];
                self.id((i, j + dj))
            })
            .collect();
        neighbours.iter().any(|&c| match self.owner[c] {
            Some(o) if o != k => {
                let t = &self.placed[o];
                if odd {
                    t.lp == s.lp + 1 && t.l >= s.l
                } else {
                    t.lp + 1 == s.lp && t.l <= s.l
                }
            }
            _ => false,
        })
    }

    fn weight(&self) -> LaurentPoly {
        let even = self.placed.iter().filter(|s| s.lp % 2 == 0).count() as i64;
        let extra = self.p_domain.len() as i64;
        let sign = if self.rule == Rule::II && even % 2 == 1 { -1 } else { 1 };
        LaurentPoly::monomial(-even - extra, sign)
    }

    fn snapshot(&self) -> StripConfig {
        let strips =
            self.placed.iter().map(|s| Strip { cells: s.cells.iter().map(|&c| self.cells[c]).collect(), l: s.l, l_prime: s.lp }).collect();
        StripConfig { strips, p_domain: self.p_domain.clone(), weight: self.weight() }
    }

    fn run(mut self, visit: &mut dyn FnMut(&Tiler)) {
        let free = if self.cells.len() == 128 { u128::MAX } else { (1u128 << self.cells.len()) - 1 };
        self.search(free, visit);
    }
}

/// The tiling problems making up `Conf(α, β)` for the `Minus` sign: the
/// region to tile together with its `p`-domain.
fn problems(alpha: &BinaryPath, beta: &BinaryPath, rule: Rule, shape: Option<&Shape>) -> Result<Vec<(Vec<Cell>, Vec<Cell>)>> {
    let whole = SkewDomain::new(alpha, beta)?;
    let plain = || vec![(whole.cells.clone(), Vec::new())];
    let shape = match (rule, shape) {
        (Rule::II, Some(s)) if !s.is_all_ones() => s,
        _ => return Ok(plain()),
    };
    let k = eta_inverse(shape, alpha)?;
    let cap = zeta(shape, &k)?.min_path(beta)?;
    let mut out = Vec::new();
    for gamma in BinaryPath::all(alpha.len()) {
        if alpha.order_le(&gamma, Sign::Minus)? && gamma.order_le(&cap, Sign::Minus)? {
            let tiled = SkewDomain::new(&gamma, beta)?.cells;
            let pdom = SkewDomain::new(alpha, &gamma)?.cells;
            out.push((tiled, pdom));
        }
    }
    Ok(out)
}

/// Orients a pair so the enumeration always runs in the `Minus` picture.
fn oriented<'a>(alpha: &'a BinaryPath, beta: &'a BinaryPath, sign: Sign) -> Result<(&'a BinaryPath, &'a BinaryPath)> {
    if !alpha.order_le(beta, sign)? {
        return Err(incomparable(alpha, beta));
    }
    Ok(match sign {
        Sign::Minus => (alpha, beta),
        Sign::Plus => (beta, alpha),
    })
}

/// All configurations for `(α, β)` under `rule`. For `Plus` the pair is
/// transposed. Rule II uses `p`-domains when a shape other than all ones is
/// given, in which case the lower path must be an `η` image.
pub fn enumerate_configs(alpha: &BinaryPath, beta: &BinaryPath, rule: Rule, sign: Sign, shape: Option<&Shape>) -> Result<Vec<StripConfig>> {
    let (lo, hi) = oriented(alpha, beta, sign)?;
    let mut out = Vec::new();
    for (cells, pdom) in problems(lo, hi, rule, shape)? {
        Tiler::new(lo.len(), rule, cells, pdom)?.run(&mut |t| out.push(t.snapshot()));
    }
    Ok(out)
}

/// The generating polynomial `Q^{rule, sign}_{α,β}` in `t`.
pub fn q_polynomial(alpha: &BinaryPath, beta: &BinaryPath, rule: Rule, sign: Sign, shape: Option<&Shape>) -> Result<LaurentPoly> {
    let (lo, hi) = oriented(alpha, beta, sign)?;
    let mut total = LaurentPoly::zero();
    for (cells, pdom) in problems(lo, hi, rule, shape)? {
        Tiler::new(lo.len(), rule, cells, pdom)?.run(&mut |t| total += t.weight());
    }
    Ok(total)
}

/// Outcome of checking that the two `Q` matrices of a shape are inverse.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct InversionReport {
    pub pairs_checked: usize,
    /// `(α, γ, Σ_β Q^I_{α,β} Q^II_{β,γ})` for every failing pair.
    pub violations: Vec<(BinaryPath, BinaryPath, LaurentPoly)>,
}

impl InversionReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Both `Minus` generating matrices of a shape on its `η` images:
/// `(Q^I, Q^II)` keyed by `(lower, upper)` weight positions in
/// [`Shape::weights`] order. Incomparable pairs are absent.
pub type QMatrices = (BTreeMap<(usize, usize), LaurentPoly>, BTreeMap<(usize, usize), LaurentPoly>);

/// Computes `(Q^{I,-}, Q^{II,-})` on all comparable `η` pairs, using
/// `rule_one` to supply `Q^{I,-}` (which is shape independent and worth
/// caching across shapes).
pub fn q_matrices(shape: &Shape, rule_one: &mut dyn FnMut(&BinaryPath, &BinaryPath) -> Result<LaurentPoly>) -> Result<QMatrices> {
    let paths: Vec<BinaryPath> = shape.weights().iter().map(|k| eta(shape, k)).collect::<Result<_>>()?;
    let mut q1 = BTreeMap::new();
    let mut q2 = BTreeMap::new();
    for (a, pa) in paths.iter().enumerate() {
        for (b, pb) in paths.iter().enumerate() {
            if pa.order_le(pb, Sign::Minus)? {
                q1.insert((a, b), rule_one(pa, pb)?);
                q2.insert((a, b), q_polynomial(pa, pb, Rule::II, Sign::Minus, Some(shape))?);
            }
        }
    }
    Ok((q1, q2))
}

/// Checks `Σ_β Q^{I,-}_{α,β} Q^{II,-}_{β,γ} = δ_{α,γ}` over the `η` images.
pub fn verify_inversion(shape: &Shape) -> Result<InversionReport> {
    let mut plain = |a: &BinaryPath, b: &BinaryPath| q_polynomial(a, b, Rule::I, Sign::Minus, None);
    let mats = q_matrices(shape, &mut plain)?;
    inversion_from(shape, &mats)
}

/// The inversion check on precomputed matrices.
pub fn inversion_from(shape: &Shape, (q1, q2): &QMatrices) -> Result<InversionReport> {
    let paths: Vec<BinaryPath> = shape.weights().iter().map(|k| eta(shape, k)).collect::<Result<_>>()?;
    let n = paths.len();
    let mut report = InversionReport::default();
    for a in 0..n {
        for g in 0..n {
            if !q1.contains_key(&(a, g)) {
                continue;
            }
            report.pairs_checked += 1;
            let mut s = LaurentPoly::zero();
            for b in 0..n {
                if let (Some(x), Some(y)) = (q1.get(&(a, b)), q2.get(&(b, g))) {
                    s += x * y;
                }
            }
            let expect = if a == g { LaurentPoly::one() } else { LaurentPoly::zero() };
            if s != expect {
                report.violations.push((paths[a].clone(), paths[g].clone(), s));
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> BinaryPath {
        s.parse().unwrap()
    }

    #[test]
    fn empty_region_has_one_configuration() {
        let a = p("+-+-");
        let c = enumerate_configs(&a, &a, Rule::I, Sign::Minus, None).unwrap();
        assert_eq!(c.len(), 1);
        assert!(c[0].strips.is_empty());
        assert!(q_polynomial(&a, &a, Rule::II, Sign::Plus, None).unwrap().is_one());
    }

    #[test]
    fn incomparable_pairs_are_rejected() {
        assert!(q_polynomial(&p("+-"), &p("-+"), Rule::I, Sign::Minus, None).is_err());
    }

    #[test]
    fn skew_domain_anchors() {
        let d = SkewDomain::new(&p("--"), &p("++")).unwrap();
        assert_eq!(d.cells(), &[(1, 0), (2, -1), (2, 1)]);
        assert_eq!(d.anchors(), vec![(2, -1), (2, 1)]);
    }
}
