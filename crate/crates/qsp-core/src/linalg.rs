//! Small exact linear-algebra kernels: rank over `Q`, dense solves over
//! `Q(q)`, and strongly connected components for block-triangular systems.

use alloc::vec;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::Zero;

use crate::laurent::RationalFn;
use crate::{Error, Result};

/// Rank of a rational matrix by fraction-exact Gaussian elimination.
pub fn rank(mut m: Vec<Vec<BigRational>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][c].clone();
        for i in (r + 1)..rows {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] / &pivot;
            let (top, bottom) = m.split_at_mut(i);
            for (x, y) in bottom[0][c..cols].iter_mut().zip(&top[r][c..cols]) {
                *x -= &f * y;
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

/// Solves the square system `a x = b` over `Q(q)`.
pub fn solve(mut a: Vec<Vec<RationalFn>>, mut b: Vec<RationalFn>) -> Result<Vec<RationalFn>> {
    let n = a.len();
    for c in 0..n {
        let p = (c..n).find(|&i| !a[i][c].is_zero()).ok_or_else(|| Error::Singular(alloc::format!("no pivot in column {c} of {n}")))?;
        a.swap(c, p);
        b.swap(c, p);
        let inv = a[c][c].recip()?;
        for i in (c + 1)..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] * &inv;
            let (top, bottom) = a.split_at_mut(i);
            for (x, y) in bottom[0][c..n].iter_mut().zip(&top[c][c..n]) {
                *x -= &f * y;
            }
            let delta = &f * &b[c];
            b[i] -= delta;
        }
    }
    let mut x = vec![RationalFn::zero(); n];
    for i in (0..n).rev() {
        let mut s = b[i].clone();
        for j in (i + 1)..n {
            if !a[i][j].is_zero() {
                s -= &a[i][j] * &x[j];
            }
        }
        x[i] = &s / &a[i][i];
    }
    Ok(x)
}

/// Strongly connected components of a directed graph given by adjacency
/// lists, in reverse topological order: a component comes after every
/// component reachable from it.
pub fn strongly_connected_components(adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    // Iterative Tarjan, so deep graphs cannot overflow the stack.
    let n = adj.len();
    let mut index = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut out = Vec::new();
    let mut next = 0;
    for root in 0..n {
        if index[root] != usize::MAX {
            continue;
        }
        let mut work: Vec<(usize, usize)> = vec![(root, 0)];
        index[root] = next;
        low[root] = next;
        next += 1;
        stack.push(root);
        on_stack[root] = true;
        while let Some(&mut (v, ref mut child)) = work.last_mut() {
            if *child < adj[v].len() {
                let w = adj[v][*child];
                *child += 1;
                if index[w] == usize::MAX {
                    index[w] = next;
                    low[w] = next;
                    next += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    work.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            work.pop();
            if let Some(&(parent, _)) = work.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                let mut comp = Vec::new();
                while let Some(w) = stack.pop() {
                    on_stack[w] = false;
                    comp.push(w);
                    if w == v {
                        break;
                    }
                }
                comp.sort_unstable();
                out.push(comp);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::{quantum_int, LaurentPoly};

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn rank_of_small_matrices() {
        assert_eq!(rank(vec![vec![r(1), r(2)], vec![r(2), r(4)]]), 1);
        assert_eq!(rank(vec![vec![r(0), r(1)], vec![r(1), r(0)]]), 2);
        assert_eq!(rank(vec![vec![r(0), r(0)]]), 0);
    }

    #[test]
    fn solve_two_by_two() {
        // [2] x = [4]  and  x + y = 1.
        let two = RationalFn::from(quantum_int(2));
        let a = vec![vec![two.clone(), RationalFn::zero()], vec![RationalFn::one(), RationalFn::one()]];
        let b = vec![RationalFn::from(quantum_int(4)), RationalFn::one()];
        let x = solve(a, b).unwrap();
        let expect = LaurentPoly::q_pow(2) + LaurentPoly::q_pow(-2);
        assert_eq!(x[0].to_laurent().unwrap(), expect);
        assert_eq!(&x[0] + &x[1], RationalFn::one());
    }

    #[test]
    fn scc_order() {
        // 0 -> 1 <-> 2 -> 3
        let adj = vec![vec![1], vec![2], vec![1, 3], vec![]];
        let comps = strongly_connected_components(&adj);
        assert_eq!(comps, vec![vec![3], vec![1, 2], vec![0]]);
    }
}
