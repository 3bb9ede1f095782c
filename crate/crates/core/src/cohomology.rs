//! The cohomology ring of `G(k,n)` in the Schubert basis.
//!
//! Products are computed with the Littlewood-Richardson rule over all
//! partitions and then truncated to the `(k+1) x (n-k)` box. Coefficients
//! are `i64` with checked arithmetic; overflow panics rather than wraps.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Mutex;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::partitions::{
    complement, fits_in_box, partitions_in_box, skew, GrassContext, Partition,
};
use crate::tableaux::{count_lr_tableaux, Weight};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CohomologyError {
    #[error("classes live in different rings: {left} and {right}")]
    ContextMismatch {
        left: GrassContext,
        right: GrassContext,
    },
    #[error("degree {degree} is out of range for {ctx} (dimension {})", ctx.dim())]
    Degree { degree: usize, ctx: GrassContext },
    #[error("cannot combine classes of degrees {left} and {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("{partition} does not fit the box of {ctx}")]
    NotInBox {
        partition: Partition,
        ctx: GrassContext,
    },
    #[error("{partition} has weight {} but the class has degree {degree}", partition.weight())]
    WrongWeight { partition: Partition, degree: usize },
}

impl CohomologyError {
    pub fn name(&self) -> &'static str {
        match self {
            CohomologyError::ContextMismatch { .. } => "ContextMismatch",
            CohomologyError::Degree { .. } | CohomologyError::DegreeMismatch { .. } => {
                "DegreeError"
            }
            CohomologyError::NotInBox { .. } | CohomologyError::WrongWeight { .. } => "BoxError",
        }
    }
}

pub(crate) fn checked_add(x: i64, y: i64) -> i64 {
    x.checked_add(y).expect("coefficient overflow")
}

pub(crate) fn checked_mul(x: i64, y: i64) -> i64 {
    x.checked_mul(y).expect("coefficient overflow")
}

/// A homogeneous class `sum coeff_a * sigma_a` of fixed codimension.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ClassRepr", into = "ClassRepr")]
pub struct CohomologyClass {
    ctx: GrassContext,
    degree: usize,
    coeffs: BTreeMap<Partition, i64>,
}

impl CohomologyClass {
    pub fn zero(ctx: GrassContext, degree: usize) -> Self {
        CohomologyClass {
            ctx,
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(ctx: GrassContext) -> Self {
        Self::schubert(ctx, Partition::empty()).expect("empty partition fits")
    }

    /// The Schubert class `sigma_a`.
    pub fn schubert(ctx: GrassContext, a: Partition) -> Result<Self, CohomologyError> {
        if !fits_in_box(&a, ctx) {
            return Err(CohomologyError::NotInBox { partition: a, ctx });
        }
        let degree = a.weight();
        Ok(CohomologyClass {
            ctx,
            degree,
            coeffs: BTreeMap::from([(a, 1)]),
        })
    }

    /// Sums repeated partitions and drops zero coefficients.
    pub fn from_terms<I>(
        ctx: GrassContext,
        degree: usize,
        terms: I,
    ) -> Result<Self, CohomologyError>
    where
        I: IntoIterator<Item = (Partition, i64)>,
    {
        let mut class = Self::zero(ctx, degree);
        for (p, c) in terms {
            if !fits_in_box(&p, ctx) {
                return Err(CohomologyError::NotInBox { partition: p, ctx });
            }
            if p.weight() != degree {
                return Err(CohomologyError::WrongWeight {
                    partition: p,
                    degree,
                });
            }
            class.add_term(p, c);
        }
        Ok(class)
    }

    fn add_term(&mut self, p: Partition, c: i64) {
        if c == 0 {
            return;
        }
        match self.coeffs.entry(p) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = checked_add(*o.get(), c);
                if sum == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn ctx(&self) -> GrassContext {
        self.ctx
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeff(&self, a: &Partition) -> i64 {
        self.coeffs.get(a).copied().unwrap_or(0)
    }

    /// Nonzero terms in basis order (lexicographically descending).
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, i64)> + '_ {
        self.coeffs.iter().rev().map(|(p, &c)| (p, c))
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_effective(&self) -> bool {
        self.coeffs.values().all(|&c| c >= 0)
    }

    pub fn is_anti_effective(&self) -> bool {
        self.coeffs.values().all(|&c| c <= 0)
    }

    fn check_same_ring(&self, other: &Self) -> Result<(), CohomologyError> {
        if self.ctx != other.ctx {
            return Err(CohomologyError::ContextMismatch {
                left: self.ctx,
                right: other.ctx,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, CohomologyError> {
        self.check_same_ring(other)?;
        if self.degree != other.degree {
            return Err(CohomologyError::DegreeMismatch {
                left: self.degree,
                right: other.degree,
            });
        }
        let mut out = self.clone();
        for (p, &c) in &other.coeffs {
            out.add_term(p.clone(), c);
        }
        Ok(out)
    }

    pub fn scale(&self, factor: i64) -> Self {
        if factor == 0 {
            return Self::zero(self.ctx, self.degree);
        }
        CohomologyClass {
            ctx: self.ctx,
            degree: self.degree,
            coeffs: self
                .coeffs
                .iter()
                .map(|(p, &c)| (p.clone(), checked_mul(c, factor)))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(-1)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, CohomologyError> {
        self.add(&other.neg())
    }
}

impl fmt::Display for CohomologyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.terms().enumerate() {
            let sign = if c < 0 {
                "-"
            } else if i > 0 {
                "+"
            } else {
                ""
            };
            if i > 0 {
                write!(f, " {sign} ")?;
            } else {
                write!(f, "{sign}")?;
            }
            if c.abs() != 1 {
                write!(f, "{}*", c.abs())?;
            }
            write!(f, "s{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CohomologyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} deg {}] {}", self.ctx, self.degree, self)
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    partition: Partition,
    coeff: i64,
}

/// `{"k", "n", "degree", "terms": [{"partition", "coeff"}]}`, terms in basis order.
#[derive(Serialize, Deserialize)]
struct ClassRepr {
    k: usize,
    n: usize,
    degree: usize,
    terms: Vec<TermRepr>,
}

impl From<CohomologyClass> for ClassRepr {
    fn from(c: CohomologyClass) -> Self {
        ClassRepr {
            k: c.ctx.k(),
            n: c.ctx.n(),
            degree: c.degree,
            terms: c
                .terms()
                .map(|(p, coeff)| TermRepr {
                    partition: p.clone(),
                    coeff,
                })
                .collect(),
        }
    }
}

impl TryFrom<ClassRepr> for CohomologyClass {
    type Error = String;

    fn try_from(r: ClassRepr) -> Result<Self, String> {
        let ctx = GrassContext::new(r.k, r.n).map_err(|e| e.to_string())?;
        CohomologyClass::from_terms(
            ctx,
            r.degree,
            r.terms.into_iter().map(|t| (t.partition, t.coeff)),
        )
        .map_err(|e| e.to_string())
    }
}

/// Schubert classes of codimension `degree`, lexicographically descending.
pub fn schubert_basis(ctx: GrassContext, degree: usize) -> Result<Vec<Partition>, CohomologyError> {
    if degree > ctx.dim() {
        return Err(CohomologyError::Degree { degree, ctx });
    }
    Ok(partitions_in_box(degree, ctx.rows(), ctx.cols()))
}

/// Rank of the whole ring; equals `binomial(n+1, k+1)`.
pub fn total_rank(ctx: GrassContext) -> usize {
    (0..=ctx.dim())
        .map(|d| partitions_in_box(d, ctx.rows(), ctx.cols()).len())
        .sum()
}

/// Partitions `c` of the given weight containing `a`, with at most `max_len`
/// parts and first part at most `max_first`.
fn containing_partitions(
    a: &Partition,
    weight: usize,
    max_len: usize,
    max_first: usize,
) -> Vec<Partition> {
    fn go(
        a: &Partition,
        row: usize,
        remaining: usize,
        cap: usize,
        max_len: usize,
        prefix: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        let need: usize = (row..a.len()).map(|i| a.part(i)).sum();
        if remaining < need {
            return;
        }
        if remaining == 0 {
            out.push(Partition::new(prefix.clone()).expect("decreasing by construction"));
            return;
        }
        if row == max_len {
            return;
        }
        let lo = a.part(row).max(1);
        let hi = cap.min(remaining);
        for p in (lo..=hi).rev() {
            prefix.push(p);
            go(a, row + 1, remaining - p, p, max_len, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if weight < a.weight() {
        return out;
    }
    go(a, 0, weight, max_first, max_len, &mut Vec::new(), &mut out);
    out
}

/// Full LR expansion of `s_a * s_b` over all partitions, without any box.
pub fn lr_expansion(a: &Partition, b: &Partition) -> BTreeMap<Partition, u64> {
    let weight = a.weight() + b.weight();
    let w = Weight::from(b);
    containing_partitions(a, weight, a.len() + b.len(), a.part(0) + b.part(0))
        .into_iter()
        .filter(|c| c.contains(b))
        .filter_map(|c| {
            let shape = skew(&c, a).expect("c contains a");
            let n = count_lr_tableaux(&shape, &w);
            (n > 0).then_some((c, n))
        })
        .collect()
}

/// `sigma_a * sigma_b` in `H*(G(k,n))`.
pub fn schubert_product(ctx: GrassContext, a: &Partition, b: &Partition) -> CohomologyClass {
    let degree = a.weight() + b.weight();
    let mut out = CohomologyClass::zero(ctx, degree);
    if degree > ctx.dim() {
        return out;
    }
    for (c, n) in lr_expansion(a, b) {
        if fits_in_box(&c, ctx) {
            out.add_term(c, i64::try_from(n).expect("coefficient overflow"));
        }
    }
    out
}

/// Bilinear extension of the LR rule.
pub fn product(
    x: &CohomologyClass,
    y: &CohomologyClass,
) -> Result<CohomologyClass, CohomologyError> {
    x.check_same_ring(y)?;
    let ctx = x.ctx;
    let mut out = CohomologyClass::zero(ctx, x.degree + y.degree);
    for (a, ca) in x.terms() {
        for (b, cb) in y.terms() {
            let coeff = checked_mul(ca, cb);
            for (c, n) in schubert_product(ctx, a, b).coeffs {
                out.add_term(c, checked_mul(coeff, n));
            }
        }
    }
    Ok(out)
}

/// Memoized Schubert products for one ring. Entries are pure functions of
/// their key, so concurrent writers may race without changing any result.
#[derive(Debug)]
pub struct ProductCache {
    ctx: GrassContext,
    table: Mutex<HashMap<(Partition, Partition), CohomologyClass>>,
}

impl ProductCache {
    pub fn new(ctx: GrassContext) -> Self {
        ProductCache {
            ctx,
            table: Mutex::new(HashMap::new()),
        }
    }

    pub fn ctx(&self) -> GrassContext {
        self.ctx
    }

    pub fn schubert(&self, a: &Partition, b: &Partition) -> CohomologyClass {
        let key = if a <= b {
            (a.clone(), b.clone())
        } else {
            (b.clone(), a.clone())
        };
        if let Some(hit) = self.table.lock().expect("cache lock").get(&key) {
            return hit.clone();
        }
        let value = schubert_product(self.ctx, a, b);
        self.table
            .lock()
            .expect("cache lock")
            .entry(key)
            .or_insert(value)
            .clone()
    }

    /// Same as [`product`], served from the cache.
    pub fn product(
        &self,
        x: &CohomologyClass,
        y: &CohomologyClass,
    ) -> Result<CohomologyClass, CohomologyError> {
        x.check_same_ring(y)?;
        if x.ctx != self.ctx {
            return Err(CohomologyError::ContextMismatch {
                left: self.ctx,
                right: x.ctx,
            });
        }
        let mut out = CohomologyClass::zero(self.ctx, x.degree + y.degree);
        for (a, ca) in x.terms() {
            for (b, cb) in y.terms() {
                let coeff = checked_mul(ca, cb);
                for (c, n) in self.schubert(a, b).coeffs {
                    out.add_term(c, checked_mul(coeff, n));
                }
            }
        }
        Ok(out)
    }
}

/// Multiplication by `sigma_(p)` through the one-row Pieri rule: add `p`
/// boxes, no two in the same column. Used as an oracle for [`product`].
pub fn pieri_product(x: &CohomologyClass, p: usize) -> Result<CohomologyClass, CohomologyError> {
    let ctx = x.ctx;
    if p == 0 || p > ctx.cols() {
        return Err(CohomologyError::Degree { degree: p, ctx });
    }
    let mut out = CohomologyClass::zero(ctx, x.degree + p);
    for (a, coeff) in x.terms() {
        for c in horizontal_strips(a, p, ctx) {
            out.add_term(c, coeff);
        }
    }
    Ok(out)
}

/// Partitions `c` in the box with `c/a` a horizontal strip of `p` boxes:
/// `a_i <= c_i <= a_{i-1}`.
fn horizontal_strips(a: &Partition, p: usize, ctx: GrassContext) -> Vec<Partition> {
    fn go(
        a: &[usize],
        row: usize,
        left: usize,
        cols: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if row == a.len() {
            if left == 0 {
                out.push(Partition::new(cur.clone()).expect("strip keeps order"));
            }
            return;
        }
        let upper = if row == 0 { cols } else { a[row - 1] };
        let room = upper.saturating_sub(a[row]);
        for add in 0..=room.min(left) {
            cur.push(a[row] + add);
            go(a, row + 1, left - add, cols, cur, out);
            cur.pop();
        }
    }
    let padded = a.padded(ctx.rows());
    let mut out = Vec::new();
    go(&padded, 0, p, ctx.cols(), &mut Vec::new(), &mut out);
    out
}

/// Coefficient of the point class in `sigma_a * sigma_b`.
pub fn duality_pairing(
    a: &Partition,
    b: &Partition,
    ctx: GrassContext,
) -> Result<i64, CohomologyError> {
    let degree = a.weight() + b.weight();
    if degree != ctx.dim() {
        return Err(CohomologyError::Degree { degree, ctx });
    }
    for p in [a, b] {
        if !fits_in_box(p, ctx) {
            return Err(CohomologyError::NotInBox {
                partition: p.clone(),
                ctx,
            });
        }
    }
    Ok(schubert_product(ctx, a, b).coeff(&ctx.full_box()))
}

/// Whether `b` is the rotated complement of `a`.
pub fn is_dual_pair(a: &Partition, b: &Partition, ctx: GrassContext) -> bool {
    fits_in_box(a, ctx) && complement(a, ctx) == *b
}
