//! Explicit nonvanishing certificates for `sigma_a * sigma_b` when
//! `|a| + |b| <= n`.
//!
//! After possibly passing to the dual Grassmannian so that `2k <= n-1`, one
//! of two constructions applies:
//!
//! * `a_1 + b_1 <= n-k`: take `c = a + b` and fill row `i` of `c/a` with `i`.
//! * otherwise, the marking construction: mark `b_1` boxes of the strip
//!   `(n-k, a_1, ..., a_k) / a` with `1` from the top row down, each row left
//!   to right; then for `i = 2, ..., k` form a two-row strip in rows `i, i+1`
//!   whose row sizes are the number of `i-1` marks in the two rows the
//!   previous step started at, and mark `b_i` boxes of it with `i` the same
//!   way.
//!
//! Every certificate carries an LR tableau of shape `c/a` and content `b`,
//! so `sigma_c` occurs in the product with coefficient at least one.

use serde::Serialize;
use thiserror::Error;

use crate::partitions::{
    add_rowwise, conjugate, dual_context, fits_in_box, skew, GrassContext, Partition,
};
use crate::tableaux::{first_lr_tableau, is_lr_tableau, SkewFilling, Weight};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error("{partition} does not fit the box of {ctx}")]
    NotInBox {
        partition: Partition,
        ctx: GrassContext,
    },
    #[error("precondition failed: {0}")]
    Precondition(String),
    /// The construction ran outside the range where it is guaranteed to
    /// succeed and did not produce a valid tableau.
    #[error("construction did not certify the product: {0}")]
    NotCertified(String),
}

impl WitnessError {
    pub fn name(&self) -> &'static str {
        match self {
            WitnessError::NotInBox { .. } => "BoxError",
            WitnessError::Precondition(_) => "PreconditionError",
            WitnessError::NotCertified(_) => "NotCertified",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CaseTag {
    /// `a_1 + b_1 <= n - k`
    Simple,
    /// `a_1 + b_1 > n - k`
    Marking,
}

/// One marking step `i`: boxes of `region / before` receive the entry `i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MarkingStep {
    pub step: usize,
    /// Partition before the step (`a^{i-1}`, with `a^0 = a`).
    pub before: Partition,
    /// Outer boundary of the strip that may be marked.
    pub region: Partition,
    /// Marks placed per row, padded to `k+1` rows.
    pub marks: Vec<usize>,
    /// Partition after the step (`a^i`).
    pub after: Partition,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessCertificate {
    pub ctx: GrassContext,
    pub a: Partition,
    pub b: Partition,
    pub c: Partition,
    pub case: CaseTag,
    pub filling: SkewFilling,
    pub trace: Vec<MarkingStep>,
    pub dualized: bool,
    /// Certificate of the conjugated problem in `G(n-k-1,n)` when dualized.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dual: Option<Box<WitnessCertificate>>,
}

impl WitnessCertificate {
    /// Re-checks every invariant: the filling is an LR tableau on `c/a` of
    /// content `b`, `c` fits the box with `|c| = |a| + |b|`, and a stored dual
    /// certificate is valid and conjugate to this one.
    pub fn validate(&self) -> bool {
        let shape_ok =
            self.filling.shape().outer() == &self.c && self.filling.shape().inner() == &self.a;
        let lr_ok = is_lr_tableau(&self.filling, &Weight::from(&self.b));
        let box_ok =
            fits_in_box(&self.c, self.ctx) && self.c.weight() == self.a.weight() + self.b.weight();
        let dual_ok = match (&self.dual, self.dualized) {
            (None, false) => true,
            (Some(d), true) => {
                d.validate()
                    && d.ctx == dual_context(self.ctx)
                    && d.a == conjugate(&self.a)
                    && d.b == conjugate(&self.b)
                    && d.c == conjugate(&self.c)
            }
            _ => false,
        };
        shape_ok && lr_ok && box_ok && dual_ok
    }

    /// The filling drawn as `:` for boxes of `a` and digits for entries.
    pub fn figure(&self) -> Vec<String> {
        self.filling.render_lines()
    }

    /// Inequalities the marking construction relies on, checked along the
    /// trace. Returns the first violated fact.
    ///
    /// Only meaningful for undualized MARKING certificates with
    /// `|a| + |b| <= n`; other certificates trivially pass.
    pub fn structural_facts(&self) -> Result<(), String> {
        if self.case != CaseTag::Marking || self.dualized {
            return Ok(());
        }
        let ctx = self.ctx;
        let (rows, cols) = (ctx.rows(), ctx.cols());
        let a = self.a.padded(rows);
        let b = self.b.padded(rows);
        if a[rows - 1] != 0 || b[rows - 1] != 0 {
            return Err("a_{k+1} and b_{k+1} must vanish".into());
        }
        for (i, ai) in a.iter().enumerate().skip(1) {
            for (j, bj) in b.iter().enumerate().skip(1) {
                if ai + bj >= cols {
                    return Err(format!("a_{} + b_{} >= n-k", i + 1, j + 1));
                }
            }
        }
        if self.c.part(0) != cols {
            return Err("c_1 != n-k".into());
        }
        let first = &self.trace[0].marks;
        for j in 1..rows {
            if first[j] + a[j] > a[j - 1] {
                return Err(format!("beta^1_{} + a_{} > a_{}", j + 1, j + 1, j));
            }
        }
        for w in self.trace.windows(2) {
            // Step i marks rows i, i+1 within the counts step i-1 left in the
            // two rows where it started.
            let (prev, cur) = (&w[0], &w[1]);
            let start = cur.step - 2;
            for off in 0..2 {
                let row = start + 1 + off;
                if row < rows && cur.marks[row] > prev.marks[start + off] {
                    return Err(format!(
                        "step {} row {} exceeds previous marks",
                        cur.step,
                        row + 1
                    ));
                }
            }
        }
        Ok(())
    }
}

fn check_inputs(a: &Partition, b: &Partition, ctx: GrassContext) -> Result<(), WitnessError> {
    for p in [a, b] {
        if !fits_in_box(p, ctx) {
            return Err(WitnessError::NotInBox {
                partition: p.clone(),
                ctx,
            });
        }
    }
    Ok(())
}

/// The case `a_1 + b_1 <= n-k`: `c = a + b`, row `i` of `c/a` filled with `i`.
pub fn witness_simple(
    a: &Partition,
    b: &Partition,
    ctx: GrassContext,
) -> Result<WitnessCertificate, WitnessError> {
    check_inputs(a, b, ctx)?;
    if a.part(0) + b.part(0) > ctx.cols() {
        return Err(WitnessError::Precondition(format!(
            "a_1 + b_1 = {} exceeds n-k = {}",
            a.part(0) + b.part(0),
            ctx.cols()
        )));
    }
    let c = add_rowwise(a, b.parts()).expect("sum of partitions is a partition");
    let rows = (0..c.len()).map(|i| vec![i + 1; b.part(i)]).collect();
    let filling =
        SkewFilling::new(skew(&c, a).expect("a + b contains a"), rows).expect("row sizes match");
    let cert = WitnessCertificate {
        ctx,
        a: a.clone(),
        b: b.clone(),
        c,
        case: CaseTag::Simple,
        filling,
        trace: Vec::new(),
        dualized: false,
        dual: None,
    };
    assert!(
        cert.validate(),
        "simple construction failed for {a} * {b} in {ctx}"
    );
    Ok(cert)
}

/// Greedily places up to `count` marks into `region / before` from the top
/// row down, returning marks per row and the number left unplaced.
fn mark_greedily(before: &[usize], region: &[usize], count: usize) -> (Vec<usize>, usize) {
    let mut left = count;
    let marks = before
        .iter()
        .zip(region)
        .map(|(&lo, &hi)| {
            let m = left.min(hi - lo);
            left -= m;
            m
        })
        .collect();
    (marks, left)
}

/// The case `a_1 + b_1 > n-k` with `2k <= n-1`.
///
/// Inside the range `|a| + |b| <= n` the construction always succeeds and a
/// failure panics. Outside it the construction is still attempted and a
/// failure is reported as [`WitnessError::NotCertified`].
pub fn witness_marking(
    a: &Partition,
    b: &Partition,
    ctx: GrassContext,
) -> Result<WitnessCertificate, WitnessError> {
    check_inputs(a, b, ctx)?;
    let (k, n) = (ctx.k(), ctx.n());
    if 2 * k > n - 1 {
        return Err(WitnessError::Precondition(format!(
            "marking needs 2k <= n-1, got k={k}, n={n}; dualize first"
        )));
    }
    if a.part(0) + b.part(0) <= ctx.cols() {
        return Err(WitnessError::Precondition(format!(
            "a_1 + b_1 = {} does not exceed n-k = {}",
            a.part(0) + b.part(0),
            ctx.cols()
        )));
    }
    let guaranteed = a.weight() + b.weight() <= n;
    let fail = |msg: String| -> Result<WitnessCertificate, WitnessError> {
        if guaranteed {
            panic!("internal error: marking construction failed for {a} * {b} in {ctx}: {msg}");
        }
        Err(WitnessError::NotCertified(msg))
    };

    let rows = ctx.rows();
    let cols = ctx.cols();
    let bw = b.padded(rows);
    let mut cur = a.padded(rows);
    let mut entries: Vec<Vec<usize>> = vec![Vec::new(); rows];
    let mut trace = Vec::new();

    // Step 1: the strip (n-k, a_1, ..., a_k) / a.
    let mut region: Vec<usize> = std::iter::once(cols)
        .chain(cur[..rows - 1].iter().copied())
        .collect();
    for step in 1..=k.max(1) {
        if step > 1 {
            let prev: &MarkingStep = trace.last().expect("previous step");
            let start = step - 2;
            region = cur.clone();
            region[step - 1] += prev.marks[start];
            if step < rows {
                region[step] += prev.marks[start + 1];
            }
        }
        let Some(region_p) = Partition::new(region.clone()).ok() else {
            return fail(format!(
                "region at step {step} is not a partition: {region:?}"
            ));
        };
        let before_p = Partition::new(cur.clone()).expect("current shape is a partition");
        if !skew(&region_p, &before_p).is_ok_and(|s| s.is_horizontal_strip()) {
            return fail(format!("region at step {step} has two boxes in one column"));
        }
        let (marks, left) = mark_greedily(&cur, &region, bw[step - 1]);
        if left > 0 {
            return fail(format!(
                "step {step} lacks room for {left} of b_{step} = {}",
                bw[step - 1]
            ));
        }
        for (row, &m) in marks.iter().enumerate() {
            entries[row].extend(std::iter::repeat_n(step, m));
            cur[row] += m;
        }
        let Ok(after) = Partition::new(cur.clone()) else {
            return fail(format!(
                "shape after step {step} is not a partition: {cur:?}"
            ));
        };
        trace.push(MarkingStep {
            step,
            before: before_p,
            region: region_p,
            marks,
            after,
        });
    }
    if bw[k.max(1)..].iter().any(|&x| x > 0) {
        return fail("b has more nonzero parts than marking steps".into());
    }

    let c = trace.last().expect("at least one step").after.clone();
    let filling = SkewFilling::new(skew(&c, a).expect("marks only add boxes"), entries)
        .expect("row sizes match");
    let cert = WitnessCertificate {
        ctx,
        a: a.clone(),
        b: b.clone(),
        c,
        case: CaseTag::Marking,
        filling,
        trace,
        dualized: false,
        dual: None,
    };
    if cert.c.part(0) != cols {
        return fail(format!(
            "c_1 = {} differs from n-k = {cols}",
            cert.c.part(0)
        ));
    }
    if !cert.validate() {
        return fail(format!("filling {} is not an LR tableau", cert.filling));
    }
    if guaranteed {
        if let Err(msg) = cert.structural_facts() {
            return fail(msg);
        }
    }
    Ok(cert)
}

/// A certificate that `sigma_a * sigma_b != 0`, for `|a| + |b| <= n`.
///
/// When `2k > n-1` the problem is conjugated into `G(n-k-1,n)`, solved
/// there, and `c` is conjugated back. The filling on `c/a` in the original
/// ring is then the lexicographically first LR tableau of that shape, which
/// exists because LR coefficients are invariant under conjugating all three
/// partitions.
pub fn witness(
    a: &Partition,
    b: &Partition,
    ctx: GrassContext,
) -> Result<WitnessCertificate, WitnessError> {
    check_inputs(a, b, ctx)?;
    if a.weight() + b.weight() > ctx.n() {
        return Err(WitnessError::Precondition(format!(
            "|a| + |b| = {} exceeds n = {}",
            a.weight() + b.weight(),
            ctx.n()
        )));
    }
    if 2 * ctx.k() > ctx.n() - 1 {
        let dctx = dual_context(ctx);
        let dual = witness(&conjugate(a), &conjugate(b), dctx)?;
        let c = conjugate(&dual.c);
        let shape = skew(&c, a).expect("conjugation preserves containment");
        let filling = first_lr_tableau(&shape, &Weight::from(b))
            .unwrap_or_else(|| panic!("no LR tableau on {c}/{a} despite dual certificate"));
        let cert = WitnessCertificate {
            ctx,
            a: a.clone(),
            b: b.clone(),
            c,
            case: dual.case,
            filling,
            trace: Vec::new(),
            dualized: true,
            dual: Some(Box::new(dual)),
        };
        assert!(
            cert.validate(),
            "dualized certificate invalid for {a} * {b} in {ctx}"
        );
        return Ok(cert);
    }
    if a.part(0) + b.part(0) <= ctx.cols() {
        witness_simple(a, b, ctx)
    } else {
        witness_marking(a, b, ctx)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::schubert_product;
    use crate::part;
    use crate::partitions::partitions_in_box;
    use crate::tableaux::enumerate_lr_tableaux;

    fn ctx(k: usize, n: usize) -> GrassContext {
        GrassContext::new(k, n).unwrap()
    }

    #[test]
    fn first_worked_example() {
        let cert = witness(&part![3, 2, 1], &part![2, 2, 1], ctx(5, 12)).unwrap();
        assert_eq!(cert.case, CaseTag::Simple);
        assert!(!cert.dualized);
        assert_eq!(cert.c, part![5, 4, 2]);
        assert_eq!(cert.filling.rows(), &[vec![1, 1], vec![2, 2], vec![3]]);
        assert_eq!(cert.figure(), vec![":::11", "::22", ":3"]);
    }

    #[test]
    fn second_worked_example() {
        let cert = witness(&part![8, 3, 1], &part![4, 4, 1], ctx(10, 21)).unwrap();
        assert_eq!(cert.case, CaseTag::Marking);
        assert_eq!(cert.c, part![11, 7, 3]);
        assert_eq!(
            cert.filling.rows(),
            &[vec![1, 1, 1], vec![1, 2, 2, 2], vec![2, 3]]
        );
        assert_eq!(cert.figure(), vec!["::::::::111", ":::1222", ":23"]);
        assert_eq!(cert.trace[0].region, part![11, 8, 3, 1]);
        assert_eq!(&cert.trace[0].marks[..3], &[3, 1, 0]);
        assert_eq!(cert.trace[1].region, part![11, 7, 2]);
        assert_eq!(cert.trace[2].region, part![11, 7, 5, 1]);
        cert.structural_facts().unwrap();
    }

    #[test]
    fn worked_examples_have_positive_coefficients() {
        let s = skew(&part![5, 4, 2], &part![3, 2, 1]).unwrap();
        let n1 = enumerate_lr_tableaux(&s, &Weight::new(vec![2, 2, 1])).len();
        let s = skew(&part![11, 7, 3], &part![8, 3, 1]).unwrap();
        let n2 = enumerate_lr_tableaux(&s, &Weight::new(vec![4, 4, 1])).len();
        assert!(n1 >= 1 && n2 >= 1);
        assert_eq!(
            schubert_product(ctx(5, 12), &part![3, 2, 1], &part![2, 2, 1]).coeff(&part![5, 4, 2])
                as usize,
            n1
        );
    }

    #[test]
    fn simple_edge_cases() {
        let e = witness_simple(&part![], &part![], ctx(2, 5)).unwrap();
        assert_eq!(e.c, part![]);
        assert!(e.filling.rows().is_empty());

        let w = witness_simple(&part![1], &part![1], ctx(1, 3)).unwrap();
        assert_eq!(w.c, part![2]);
        assert_eq!(w.filling.rows(), &[vec![1]]);
        let oracle =
            enumerate_lr_tableaux(&skew(&part![2], &part![1]).unwrap(), &Weight::new(vec![1]));
        assert_eq!(oracle, vec![w.filling.clone()]);

        let err = witness_simple(&part![2], &part![1], ctx(1, 3)).unwrap_err();
        assert_eq!(err.name(), "PreconditionError");
    }

    #[test]
    fn marking_beyond_the_degree_bound() {
        let w = witness_marking(&part![3], &part![2], ctx(1, 4)).unwrap();
        assert_eq!(w.c, part![3, 2]);
        assert_eq!(w.filling.rows(), &[vec![], vec![1, 1]]);
        assert!(!enumerate_lr_tableaux(
            &skew(&part![3, 2], &part![3]).unwrap(),
            &Weight::new(vec![2])
        )
        .is_empty());

        let w = witness_marking(&part![4], &part![3], ctx(1, 5)).unwrap();
        assert_eq!(w.c.part(0), 4);
        assert_eq!(w.c.weight(), 7);
        assert!(is_lr_tableau(&w.filling, &Weight::new(vec![3])));
    }

    #[test]
    fn marking_preconditions() {
        let err = witness_marking(&part![1], &part![1], ctx(1, 3)).unwrap_err();
        assert_eq!(err.name(), "PreconditionError");
        let err = witness_marking(&part![1], &part![1], ctx(2, 4)).unwrap_err();
        assert_eq!(err.name(), "PreconditionError");
        let err = witness_marking(&part![5], &part![1], ctx(1, 4)).unwrap_err();
        assert_eq!(err.name(), "BoxError");
    }

    #[test]
    fn marking_outside_guarantee_can_fail_cleanly() {
        // G(1,3): a = b = (2,1); the strips run out of room for the 2.
        let r = witness_marking(&part![2, 1], &part![2, 1], ctx(1, 3));
        assert!(matches!(r, Err(WitnessError::NotCertified(_))), "{r:?}");
    }

    #[test]
    fn degree_bound_is_enforced() {
        let err = witness(&part![2, 2], &part![1], ctx(1, 4)).unwrap_err();
        assert_eq!(err.name(), "PreconditionError");
    }

    #[test]
    fn dualizes_in_g24() {
        let c = ctx(2, 4);
        for d in 0..=4 {
            for a in partitions_in_box(d, c.rows(), c.cols()) {
                for e in 0..=4 - d {
                    for b in partitions_in_box(e, c.rows(), c.cols()) {
                        let cert = witness(&a, &b, c).unwrap();
                        assert!(cert.dualized);
                        assert_eq!(cert.dual.as_ref().unwrap().ctx, ctx(1, 4));
                        assert!(cert.validate());
                        assert!(schubert_product(c, &a, &b).coeff(&cert.c) >= 1);
                    }
                }
            }
        }
    }

    #[test]
    fn deterministic() {
        let c = ctx(3, 8);
        let a = part![4, 2];
        let b = part![2];
        assert_eq!(witness(&a, &b, c).unwrap(), witness(&a, &b, c).unwrap());
    }
}
