//! Chern series and the constancy argument for maps `G(k,n) -> G(l,m)`.
//!
//! A morphism to `G(l,m)` pulls back the universal sequence
//! `0 -> S^* -> O^{m+1} -> Q -> 0`, giving series `lambda(t) = c_t(Q)` and
//! `mu(t) = c_t(S^*)` with `lambda(t) * mu(t) = 1`, `lambda_i = 0` for
//! `i > l+1`, `mu_j = 0` for `j > m-l`, every `lambda_i` effective and every
//! `mu_j` effective or anti-effective. If `i0`, `j0` are the top nonzero
//! degrees then `lambda_{i0} * mu_{j0}` is the top term of the product and
//! must vanish, which is impossible when `i0 + j0 <= ed` unless both are zero.
//!
//! [`chern_system_search`] enumerates integer solutions of these necessary
//! conditions only. A nontrivial system in its output does not mean a
//! nonconstant morphism exists.

use serde::Serialize;
use thiserror::Error;

use crate::cohomology::{schubert_basis, CohomologyClass, CohomologyError, ProductCache};
use crate::partitions::{GrassContext, Partition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TangoError {
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("search visited more than {} nodes", .partial.budget)]
    SearchBudgetExceeded { partial: Box<SearchReport> },
}

impl TangoError {
    pub fn name(&self) -> &'static str {
        match self {
            TangoError::Cohomology(e) => e.name(),
            TangoError::Precondition(_) => "PreconditionError",
            TangoError::SearchBudgetExceeded { .. } => "SearchBudgetExceeded",
        }
    }
}

/// Graded series `sum_i terms[i] t^i` with `terms[0] = 1`, kept through
/// degree `cap`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChernSeries {
    ctx: GrassContext,
    cap: usize,
    terms: Vec<CohomologyClass>,
}

impl ChernSeries {
    /// The series `1`.
    pub fn one(ctx: GrassContext, cap: usize) -> Self {
        let terms = (0..=cap)
            .map(|d| {
                if d == 0 {
                    CohomologyClass::one(ctx)
                } else {
                    CohomologyClass::zero(ctx, d)
                }
            })
            .collect();
        ChernSeries { ctx, cap, terms }
    }

    /// Series from its low-degree terms, padded with zeros through `cap`.
    pub fn new(
        ctx: GrassContext,
        terms: Vec<CohomologyClass>,
        cap: usize,
    ) -> Result<Self, TangoError> {
        if terms.first() != Some(&CohomologyClass::one(ctx)) {
            return Err(TangoError::Precondition(
                "degree-0 term must be the unit".into(),
            ));
        }
        let mut series = Self::one(ctx, cap.max(terms.len() - 1));
        for (d, t) in terms.into_iter().enumerate() {
            if t.ctx() != ctx {
                return Err(CohomologyError::ContextMismatch {
                    left: ctx,
                    right: t.ctx(),
                }
                .into());
            }
            if t.degree() != d {
                return Err(TangoError::Precondition(format!(
                    "term {d} has degree {}",
                    t.degree()
                )));
            }
            series.terms[d] = t;
        }
        Ok(series.truncate(cap))
    }

    pub fn ctx(&self) -> GrassContext {
        self.ctx
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// Term of degree `d`; zero beyond the cap.
    pub fn term(&self, d: usize) -> CohomologyClass {
        self.terms
            .get(d)
            .cloned()
            .unwrap_or_else(|| CohomologyClass::zero(self.ctx, d))
    }

    pub fn terms(&self) -> &[CohomologyClass] {
        &self.terms
    }

    pub fn truncate(mut self, cap: usize) -> Self {
        while self.terms.len() < cap + 1 {
            let d = self.terms.len();
            self.terms.push(CohomologyClass::zero(self.ctx, d));
        }
        self.terms.truncate(cap + 1);
        self.cap = cap;
        self
    }

    /// Highest degree with a nonzero term.
    pub fn top_degree(&self) -> usize {
        self.terms.iter().rposition(|t| !t.is_zero()).unwrap_or(0)
    }

    pub fn is_one(&self) -> bool {
        self.top_degree() == 0
    }

    /// Product of two series through degree `cap`.
    pub fn mul(&self, other: &Self, cap: usize, ring: &ProductCache) -> Result<Self, TangoError> {
        if self.ctx != other.ctx {
            return Err(CohomologyError::ContextMismatch {
                left: self.ctx,
                right: other.ctx,
            }
            .into());
        }
        let mut terms = Vec::with_capacity(cap + 1);
        for d in 0..=cap {
            let mut acc = CohomologyClass::zero(self.ctx, d);
            for i in 0..=d {
                let p = ring.product(&self.term(i), &other.term(d - i))?;
                acc = acc.add(&p)?;
            }
            terms.push(acc);
        }
        Ok(ChernSeries {
            ctx: self.ctx,
            cap,
            terms,
        })
    }
}

/// The formal inverse: `mu_0 = 1`, `mu_j = -sum_{i=1..j} lambda_i mu_{j-i}`.
pub fn series_inverse(lambda: &ChernSeries, cap: usize) -> ChernSeries {
    series_inverse_with(lambda, cap, &ProductCache::new(lambda.ctx))
}

pub fn series_inverse_with(lambda: &ChernSeries, cap: usize, ring: &ProductCache) -> ChernSeries {
    let ctx = lambda.ctx;
    let mut mu = ChernSeries::one(ctx, cap);
    for j in 1..=cap {
        let mut acc = CohomologyClass::zero(ctx, j);
        for i in 1..=j {
            let p = ring
                .product(&lambda.term(i), &mu.terms[j - i])
                .expect("one ring");
            acc = acc.add(&p).expect("same degree");
        }
        mu.terms[j] = acc.neg();
    }
    mu
}

/// `(i0, j0)`, the top nonzero degrees of the two series.
pub fn max_nonzero_degrees(
    lambda: &ChernSeries,
    mu: &ChernSeries,
) -> Result<(usize, usize), TangoError> {
    if lambda.ctx != mu.ctx {
        return Err(CohomologyError::ContextMismatch {
            left: lambda.ctx,
            right: mu.ctx,
        }
        .into());
    }
    Ok((lambda.top_degree(), mu.top_degree()))
}

/// A target Grassmannian `G(l,m)`; `Q` has rank `l+1` and `S` rank `m-l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TargetSpec {
    l: usize,
    m: usize,
}

impl TargetSpec {
    pub fn new(l: usize, m: usize) -> Result<Self, TangoError> {
        if l >= m {
            return Err(TangoError::Precondition(format!(
                "target G({l},{m}) needs l <= m-1"
            )));
        }
        Ok(TargetSpec { l, m })
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn rank_q(&self) -> usize {
        self.l + 1
    }

    pub fn rank_s(&self) -> usize {
        self.m - self.l
    }
}

/// Every morphism `M -> G(l,m)` is constant once `ed(M) > m`.
pub fn constancy_forced(ed_value: usize, target: TargetSpec) -> bool {
    ed_value > target.m
}

/// Constancy for maps to the partial flag variety of subspaces of
/// dimensions `ls` in `P^m`, through its projections to each `G(l_j, m)`.
pub fn constancy_for_flag_target(
    ed_value: usize,
    ls: &[usize],
    m: usize,
) -> Result<bool, TangoError> {
    if ls.is_empty() {
        return Err(TangoError::Precondition(
            "flag type must be nonempty".into(),
        ));
    }
    if !ls.windows(2).all(|w| w[0] < w[1]) {
        return Err(TangoError::Precondition(format!(
            "flag dimensions {ls:?} must increase strictly"
        )));
    }
    let targets = ls
        .iter()
        .map(|&l| TargetSpec::new(l, m))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(targets.into_iter().all(|t| constancy_forced(ed_value, t)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Sign {
    Zero,
    Effective,
    AntiEffective,
}

fn sign_of(c: &CohomologyClass) -> Option<Sign> {
    if c.is_zero() {
        Some(Sign::Zero)
    } else if c.is_effective() {
        Some(Sign::Effective)
    } else if c.is_anti_effective() {
        Some(Sign::AntiEffective)
    } else {
        None
    }
}

/// A candidate pair of pulled-back Chern series.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChernSystem {
    /// Terms of degree `0..=l+1` (or up to the ring dimension).
    pub lambda: ChernSeries,
    /// Terms of degree `0..=m-l`; all higher terms of the inverse vanish.
    pub mu: ChernSeries,
    pub mu_signs: Vec<Sign>,
    /// Whether every nonzero `mu_j` has sign `(-1)^j`. Recorded, not required.
    pub alternating: bool,
}

impl ChernSystem {
    pub fn is_trivial(&self) -> bool {
        self.lambda.is_one()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub ctx: GrassContext,
    pub target: TargetSpec,
    pub coeff_bound: u32,
    pub budget: u64,
    pub nodes_visited: u64,
    pub systems: Vec<ChernSystem>,
}

pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

struct ChernSearch<'a> {
    ctx: GrassContext,
    target: TargetSpec,
    ring: &'a ProductCache,
    bases: Vec<Vec<Partition>>,
    lambda_top: usize,
    cap: usize,
    coeff_bound: u32,
    budget: u64,
    nodes: u64,
    lambda: Vec<CohomologyClass>,
    mu: Vec<CohomologyClass>,
    found: Vec<ChernSystem>,
}

impl ChernSearch<'_> {
    /// `mu_j` from the current `lambda_1..` and `mu_0..mu_{j-1}`.
    fn next_mu(&self, j: usize) -> CohomologyClass {
        let mut acc = CohomologyClass::zero(self.ctx, j);
        for i in 1..=j.min(self.lambda.len() - 1) {
            let p = self
                .ring
                .product(&self.lambda[i], &self.mu[j - i])
                .expect("one ring");
            acc = acc.add(&p).expect("same degree");
        }
        acc.neg()
    }

    fn mu_allowed(&self, j: usize, mu_j: &CohomologyClass) -> bool {
        if j > self.target.rank_s() {
            mu_j.is_zero()
        } else {
            sign_of(mu_j).is_some()
        }
    }

    fn run(&mut self, d: usize) -> Result<(), ()> {
        if d > self.lambda_top {
            return self.finish();
        }
        let basis = self.bases[d].clone();
        let mut coeffs = vec![0u32; basis.len()];
        loop {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(());
            }
            let term = CohomologyClass::from_terms(
                self.ctx,
                d,
                basis
                    .iter()
                    .cloned()
                    .zip(coeffs.iter().map(|&c| i64::from(c))),
            )
            .expect("basis fits");
            self.lambda.push(term);
            let mu_d = self.next_mu(d);
            if self.mu_allowed(d, &mu_d) {
                self.mu.push(mu_d);
                let r = self.run(d + 1);
                self.mu.pop();
                r?;
            }
            self.lambda.pop();

            // Odometer over [0, bound]^len, least significant digit last.
            let Some(pos) = coeffs.iter().rposition(|&c| c < self.coeff_bound) else {
                return Ok(());
            };
            coeffs[pos] += 1;
            for c in &mut coeffs[pos + 1..] {
                *c = 0;
            }
        }
    }

    fn finish(&mut self) -> Result<(), ()> {
        let pushed = self.mu.len();
        let mut ok = true;
        for j in pushed..=self.cap {
            let mu_j = self.next_mu(j);
            if !self.mu_allowed(j, &mu_j) {
                ok = false;
                break;
            }
            self.mu.push(mu_j);
        }
        if ok {
            let lambda = ChernSeries::new(self.ctx, self.lambda.clone(), self.lambda_top)
                .expect("unit first");
            let mu_cap = self.target.rank_s().min(self.cap);
            let mu = ChernSeries::new(self.ctx, self.mu[..=mu_cap].to_vec(), mu_cap)
                .expect("unit first");
            let mu_signs: Vec<Sign> = mu
                .terms()
                .iter()
                .map(|t| sign_of(t).expect("checked"))
                .collect();
            let alternating = mu_signs.iter().enumerate().all(|(j, s)| match s {
                Sign::Zero => true,
                Sign::Effective => j % 2 == 0,
                Sign::AntiEffective => j % 2 == 1,
            });
            self.found.push(ChernSystem {
                lambda,
                mu,
                mu_signs,
                alternating,
            });
        }
        self.mu.truncate(pushed);
        Ok(())
    }
}

/// All `lambda` with effective integer terms, coefficients in
/// `[0, coeff_bound]` in degrees `1..=l+1`, whose inverse vanishes above
/// degree `m-l` and has every term effective or anti-effective.
///
/// Systems are listed in odometer order of the coefficient vectors, degree 1
/// outermost; the trivial system `lambda = 1` is always first.
pub fn chern_system_search(
    ctx: GrassContext,
    target: TargetSpec,
    coeff_bound: u32,
    budget: u64,
) -> Result<SearchReport, TangoError> {
    let ring = ProductCache::new(ctx);
    let cap = ctx.dim();
    let lambda_top = target.rank_q().min(cap);
    let bases = (0..=lambda_top)
        .map(|d| schubert_basis(ctx, d).expect("degree in range"))
        .collect();
    let mut search = ChernSearch {
        ctx,
        target,
        ring: &ring,
        bases,
        lambda_top,
        cap,
        coeff_bound,
        budget,
        nodes: 0,
        lambda: vec![CohomologyClass::one(ctx)],
        mu: vec![CohomologyClass::one(ctx)],
        found: Vec::new(),
    };
    let outcome = search.run(1);
    let report = SearchReport {
        ctx,
        target,
        coeff_bound,
        budget,
        nodes_visited: search.nodes.min(budget),
        systems: search.found,
    };
    match outcome {
        Ok(()) => Ok(report),
        Err(()) => Err(TangoError::SearchBudgetExceeded {
            partial: Box::new(report),
        }),
    }
}
