//! Effective good divisibility of `G(k,n)` and zero-divisor search.
//!
//! Effective classes of a fixed codimension are nonnegative combinations of
//! Schubert classes, and all structure constants are nonnegative, so an
//! effective product vanishes only if some Schubert product does. `ed` is
//! therefore found by scanning Schubert pairs by increasing degree sum.
//!
//! For ordinary good divisibility only upper bounds are produced: a found
//! zero divisor `x * y = 0` with `deg x + deg y = s` shows `gd < s`. Not
//! finding one proves nothing.

use rayon::prelude::*;
use serde::Serialize;

use crate::cohomology::{
    checked_add, checked_mul, product, schubert_basis, schubert_product, CohomologyClass,
};
use crate::partitions::{GrassContext, Partition};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdReport {
    pub ctx: GrassContext,
    pub ed_value: usize,
    /// A pair with `|a| + |b| = ed_value + 1` and `sigma_a * sigma_b = 0`.
    pub minimal_vanishing_pair: (Partition, Partition),
    pub pairs_checked: u64,
}

/// `sigma_(1^{k+1}) * sigma_(n-k)`: a full column times a full row, zero in
/// degree `n + 1` because no horizontal strip of `n-k` boxes fits beside the
/// first column.
pub fn canonical_vanishing_pair(ctx: GrassContext) -> (Partition, Partition) {
    (Partition::column(ctx.rows()), Partition::row(ctx.cols()))
}

/// Schubert pairs `(a, b)` with `|a| = i >= 1`, `|b| = s - i >= i`, each pair
/// listed once.
fn pairs_at(ctx: GrassContext, s: usize) -> Vec<(Partition, Partition)> {
    let dim = ctx.dim();
    let mut out = Vec::new();
    for i in 1..=s / 2 {
        let j = s - i;
        if i > dim || j > dim {
            continue;
        }
        let left = schubert_basis(ctx, i).expect("degree in range");
        let right = schubert_basis(ctx, j).expect("degree in range");
        for (ia, a) in left.iter().enumerate() {
            let start = if i == j { ia } else { 0 };
            for b in &right[start..] {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out
}

fn vanishing(ctx: GrassContext, pairs: &[(Partition, Partition)]) -> Vec<bool> {
    pairs
        .par_iter()
        .map(|(a, b)| schubert_product(ctx, a, b).is_zero())
        .collect()
}

/// Exact `ed(G(k,n))`: the largest `s` such that no Schubert pair with
/// degree sum at most `s` multiplies to zero.
pub fn effective_good_divisibility(ctx: GrassContext) -> EdReport {
    let mut pairs_checked = 0u64;
    // Degree sums beyond the dimension always vanish, so the scan stops by
    // dim + 1.
    for s in 2..=ctx.dim() + 1 {
        let pairs = pairs_at(ctx, s);
        let zero = vanishing(ctx, &pairs);
        pairs_checked += pairs.len() as u64;
        let found: Vec<&(Partition, Partition)> = pairs
            .iter()
            .zip(&zero)
            .filter(|(_, &z)| z)
            .map(|(p, _)| p)
            .collect();
        if found.is_empty() {
            continue;
        }
        let canonical = canonical_vanishing_pair(ctx);
        let swapped = (canonical.1.clone(), canonical.0.clone());
        let pair = if found.iter().any(|&p| *p == canonical || *p == swapped) {
            canonical
        } else {
            found[0].clone()
        };
        return EdReport {
            ctx,
            ed_value: s - 1,
            minimal_vanishing_pair: pair,
            pairs_checked,
        };
    }
    unreachable!("products of degree above the dimension vanish");
}

/// Every Schubert pair with `|a| + |b| <= s` has a nonzero product.
pub fn check_pair_nonvanishing(s: usize, ctx: GrassContext) -> bool {
    (2..=s).all(|t| !vanishing(ctx, &pairs_at(ctx, t)).into_iter().any(|z| z))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZeroDivisorWitness {
    pub ctx: GrassContext,
    pub x: CohomologyClass,
    pub y: CohomologyClass,
    pub degrees: (usize, usize),
}

/// Coefficient vectors over `len` basis elements with at most `support`
/// nonzero entries in `[-bound, bound]`, first nonzero entry positive.
fn sparse_vectors(len: usize, bound: i64, support: usize) -> Vec<Vec<i64>> {
    fn place(
        start: usize,
        left: usize,
        values: &[i64],
        cur: &mut Vec<i64>,
        out: &mut Vec<Vec<i64>>,
    ) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        let first = cur.iter().all(|&c| c == 0);
        for pos in start..cur.len() {
            for &v in values {
                if first && v < 0 {
                    continue;
                }
                cur[pos] = v;
                place(pos + 1, left - 1, values, cur, out);
                cur[pos] = 0;
            }
        }
    }
    let values: Vec<i64> = (1..=bound).chain(-bound..=-1).collect();
    let mut out = Vec::new();
    for size in 1..=support.min(len) {
        place(0, size, &values, &mut vec![0; len], &mut out);
    }
    out
}

fn class_from(ctx: GrassContext, degree: usize, basis: &[Partition], v: &[i64]) -> CohomologyClass {
    CohomologyClass::from_terms(ctx, degree, basis.iter().cloned().zip(v.iter().copied()))
        .expect("basis elements fit the box")
}

/// Bounded search for nonzero `x`, `y` with `deg x + deg y = s` and
/// `x * y = 0`. Degrees are tried with `deg x` from `s - 1` down to `s / 2`.
pub fn gd_upper_bound_witness(
    ctx: GrassContext,
    s: usize,
    coeff_bound: i64,
    support_bound: usize,
) -> Option<ZeroDivisorWitness> {
    if coeff_bound < 1 || support_bound < 1 {
        return None;
    }
    let dim = ctx.dim();
    for i in (s.div_ceil(2)..s).rev() {
        let j = s - i;
        if i > dim || j == 0 || j > dim {
            continue;
        }
        let left = schubert_basis(ctx, i).expect("degree in range");
        let right = schubert_basis(ctx, j).expect("degree in range");
        let top = schubert_basis(ctx, s).unwrap_or_default();
        // table[a][b] = coordinates of sigma_a * sigma_b in degree s.
        let table: Vec<Vec<Vec<i64>>> = left
            .iter()
            .map(|a| {
                right
                    .iter()
                    .map(|b| {
                        let p = schubert_product(ctx, a, b);
                        top.iter().map(|c| p.coeff(c)).collect()
                    })
                    .collect()
            })
            .collect();
        let xs = sparse_vectors(left.len(), coeff_bound, support_bound);
        let ys = sparse_vectors(right.len(), coeff_bound, support_bound);
        let hit = xs.par_iter().find_map_first(|x| {
            // Row vector x^T * table, as a matrix acting on y.
            let acting: Vec<Vec<i64>> = (0..right.len())
                .map(|bi| {
                    (0..top.len())
                        .map(|ci| {
                            (0..left.len()).fold(0i64, |acc, ai| {
                                checked_add(acc, checked_mul(x[ai], table[ai][bi][ci]))
                            })
                        })
                        .collect()
                })
                .collect();
            ys.iter()
                .find(|y| {
                    (0..top.len()).all(|ci| {
                        (0..right.len()).fold(0i64, |acc, bi| {
                            checked_add(acc, checked_mul(y[bi], acting[bi][ci]))
                        }) == 0
                    })
                })
                .map(|y| (x.clone(), y.clone()))
        });
        if let Some((x, y)) = hit {
            let x = class_from(ctx, i, &left, &x);
            let y = class_from(ctx, j, &right, &y);
            let check = product(&x, &y).expect("same ring");
            assert!(
                check.is_zero(),
                "zero divisor failed re-verification: ({x}) * ({y}) = {check}"
            );
            return Some(ZeroDivisorWitness {
                ctx,
                x,
                y,
                degrees: (i, j),
            });
        }
    }
    None
}
