//! Partitions, the `(k+1) x (n-k)` box of a Grassmannian, and skew shapes.
//!
//! A [`Partition`] is always kept in canonical form: weakly decreasing with
//! no trailing zeros. Padding to `k+1` parts is done on demand with
//! [`Partition::padded`].

use std::fmt;
use std::ops::Index;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("parts {0:?} are not weakly decreasing")]
    NotDecreasing(Vec<usize>),
    #[error("row-wise sum {0:?} is not weakly decreasing")]
    Shape(Vec<usize>),
    #[error("inner partition {inner} is not contained in outer partition {outer}")]
    Containment { outer: Partition, inner: Partition },
    #[error("invalid Grassmannian G({k},{n}): need 0 <= k <= n-1")]
    Context { k: usize, n: usize },
}

impl PartitionError {
    /// Stable error name used by the command-line front end.
    pub fn name(&self) -> &'static str {
        match self {
            PartitionError::NotDecreasing(_) => "PartitionError",
            PartitionError::Shape(_) => "ShapeError",
            PartitionError::Containment { .. } => "ContainmentError",
            PartitionError::Context { .. } => "ContextError",
        }
    }
}

/// A weakly decreasing sequence of nonnegative integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self, PartitionError> {
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(PartitionError::NotDecreasing(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The partition `(p)` with a single row.
    pub fn row(p: usize) -> Self {
        if p == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![p] }
        }
    }

    /// The partition `(1, ..., 1)` with `len` rows.
    pub fn column(len: usize) -> Self {
        Partition {
            parts: vec![1; len],
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `|a|`, the number of boxes.
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Part `i` (0-based), zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// The parts padded with zeros to exactly `len` entries.
    ///
    /// Panics if the partition has more than `len` nonzero parts.
    pub fn padded(&self, len: usize) -> Vec<usize> {
        assert!(self.len() <= len, "{self} has more than {len} parts");
        let mut v = self.parts.clone();
        v.resize(len, 0);
        v
    }

    /// Whether the Young diagram of `self` contains the diagram of `other`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(o, s)| o <= s)
    }

    /// Rows of one character per box, left-justified.
    pub fn render(&self, glyph: char) -> String {
        self.parts
            .iter()
            .map(|&p| std::iter::repeat_n(glyph, p).collect::<String>())
            .collect::<Vec<_>>()
            .join("\n")
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = PartitionError;

    fn try_from(parts: Vec<usize>) -> Result<Self, Self::Error> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl Index<usize> for Partition {
    type Output = usize;

    fn index(&self, index: usize) -> &usize {
        self.parts.get(index).unwrap_or(&0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{self}")
    }
}

/// Builds a partition from a literal list, panicking on invalid input.
#[macro_export]
macro_rules! part {
    () => { $crate::partitions::Partition::empty() };
    ($($p:expr),+ $(,)?) => {
        $crate::partitions::Partition::new(vec![$($p),+]).expect("valid partition literal")
    };
}

/// The Grassmannian `G(k,n)` of projective `k`-planes in projective `n`-space.
///
/// Schubert classes are indexed by partitions inside a box of `k+1` rows and
/// `n-k` columns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GrassContext {
    k: usize,
    n: usize,
}

impl GrassContext {
    pub fn new(k: usize, n: usize) -> Result<Self, PartitionError> {
        if k >= n {
            return Err(PartitionError::Context { k, n });
        }
        Ok(GrassContext { k, n })
    }

    /// Projective space `P^n = G(0,n)`.
    pub fn projective(n: usize) -> Result<Self, PartitionError> {
        Self::new(0, n)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> usize {
        self.k + 1
    }

    pub fn cols(&self) -> usize {
        self.n - self.k
    }

    pub fn dim(&self) -> usize {
        self.rows() * self.cols()
    }

    /// The largest partition in the box, the class of a point.
    pub fn full_box(&self) -> Partition {
        Partition {
            parts: vec![self.cols(); self.rows()],
        }
    }
}

impl fmt::Display for GrassContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G({},{})", self.k, self.n)
    }
}

pub fn fits_in_box(a: &Partition, ctx: GrassContext) -> bool {
    a.len() <= ctx.rows() && a.part(0) <= ctx.cols()
}

/// Transpose of the Young diagram.
pub fn conjugate(a: &Partition) -> Partition {
    let parts = (0..a.part(0))
        .map(|col| a.parts.iter().take_while(|&&p| p > col).count())
        .collect();
    Partition { parts }
}

/// `G(k,n) = G(n-k-1,n)`; the box is transposed.
pub fn dual_context(ctx: GrassContext) -> GrassContext {
    GrassContext {
        k: ctx.n - ctx.k - 1,
        n: ctx.n,
    }
}

/// Complement of `a` in the box, rotated by 180 degrees.
///
/// Panics if `a` does not fit the box.
pub fn complement(a: &Partition, ctx: GrassContext) -> Partition {
    assert!(fits_in_box(a, ctx), "{a} does not fit the box of {ctx}");
    let parts = (0..ctx.rows())
        .rev()
        .map(|i| ctx.cols() - a.part(i))
        .collect();
    Partition::new(parts).expect("complement is weakly decreasing")
}

/// Partition with parts `a[i] + delta[i]`.
pub fn add_rowwise(a: &Partition, delta: &[usize]) -> Result<Partition, PartitionError> {
    let len = a.len().max(delta.len());
    let sum: Vec<usize> = (0..len)
        .map(|i| a.part(i) + delta.get(i).copied().unwrap_or(0))
        .collect();
    Partition::new(sum.clone()).map_err(|_| PartitionError::Shape(sum))
}

/// All partitions of `weight` with at most `rows` parts, each at most `cols`,
/// in lexicographically descending order.
pub fn partitions_in_box(weight: usize, rows: usize, cols: usize) -> Vec<Partition> {
    fn go(
        remaining: usize,
        rows_left: usize,
        max_part: usize,
        prefix: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        if rows_left == 0 || max_part * rows_left < remaining {
            return;
        }
        for p in (1..=max_part.min(remaining)).rev() {
            prefix.push(p);
            go(remaining - p, rows_left - 1, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(weight, rows, cols, &mut Vec::new(), &mut out);
    out
}

/// The skew diagram `outer / inner`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    /// Number of rows that may hold boxes (the length of `outer`).
    pub fn num_rows(&self) -> usize {
        self.outer.len()
    }

    /// Half-open, 0-based column range of the boxes in row `i`.
    pub fn row_range(&self, i: usize) -> std::ops::Range<usize> {
        self.inner.part(i)..self.outer.part(i)
    }

    pub fn row_len(&self, i: usize) -> usize {
        self.outer.part(i) - self.inner.part(i)
    }

    pub fn box_count(&self) -> usize {
        self.outer.weight() - self.inner.weight()
    }

    /// Whether the box at `(row, col)` belongs to the skew shape.
    pub fn contains_box(&self, row: usize, col: usize) -> bool {
        self.row_range(row).contains(&col)
    }

    /// At most one box in every column.
    pub fn is_horizontal_strip(&self) -> bool {
        (1..self.num_rows()).all(|i| self.outer.part(i) <= self.inner.part(i - 1))
    }
}

pub fn skew(outer: &Partition, inner: &Partition) -> Result<SkewShape, PartitionError> {
    if !outer.contains(inner) {
        return Err(PartitionError::Containment {
            outer: outer.clone(),
            inner: inner.clone(),
        });
    }
    Ok(SkewShape {
        outer: outer.clone(),
        inner: inner.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ctx(k: usize, n: usize) -> GrassContext {
        GrassContext::new(k, n).unwrap()
    }

    #[test]
    fn canonical_form_drops_trailing_zeros() {
        assert_eq!(Partition::new(vec![3, 1, 0, 0]).unwrap(), part![3, 1]);
        assert!(Partition::new(vec![0, 0]).unwrap().is_empty());
        assert!(matches!(
            Partition::new(vec![1, 2]),
            Err(PartitionError::NotDecreasing(_))
        ));
    }

    #[test]
    fn box_membership() {
        assert!(fits_in_box(&part![3, 2, 1], ctx(5, 12)));
        assert!(fits_in_box(&part![], ctx(0, 1)));
        assert!(!fits_in_box(&part![3], ctx(0, 2)));
        assert!(!fits_in_box(&part![1, 1], ctx(0, 2)));
    }

    #[test]
    fn conjugates() {
        assert_eq!(conjugate(&part![3, 2, 1]), part![3, 2, 1]);
        assert_eq!(conjugate(&Partition::column(6)), part![6]);
        assert_eq!(conjugate(&part![8, 3, 1]), part![3, 2, 2, 1, 1, 1, 1, 1]);
        assert_eq!(conjugate(&part![]), part![]);
    }

    #[test]
    fn dual_contexts() {
        assert_eq!(dual_context(ctx(5, 12)), ctx(6, 12));
        assert_eq!(dual_context(ctx(0, 4)), ctx(3, 4));
        assert_eq!(dual_context(ctx(10, 21)), ctx(10, 21));
    }

    #[test]
    fn skew_shapes() {
        let s = skew(&part![5, 4, 2], &part![3, 2, 1]).unwrap();
        assert_eq!(
            (0..3).map(|i| s.row_len(i)).collect::<Vec<_>>(),
            vec![2, 2, 1]
        );
        assert_eq!(s.row_range(0), 3..5);
        assert_eq!(s.box_count(), 5);

        let a = part![4, 2];
        assert_eq!(skew(&a, &a).unwrap().box_count(), 0);

        let err = skew(&part![2], &part![3]).unwrap_err();
        assert_eq!(err.name(), "ContainmentError");
    }

    #[test]
    fn rowwise_addition() {
        assert_eq!(
            add_rowwise(&part![3, 2, 1], &[2, 2, 1]).unwrap(),
            part![5, 4, 2]
        );
        assert_eq!(
            add_rowwise(&part![8, 3, 1], &[0, 0, 0]).unwrap(),
            part![8, 3, 1]
        );
        let err = add_rowwise(&part![2, 2], &[0, 3]).unwrap_err();
        assert_eq!(err.name(), "ShapeError");
    }

    #[test]
    fn rotated_complement() {
        assert_eq!(complement(&part![2], ctx(1, 3)), part![2]);
        assert_eq!(complement(&part![2, 1], ctx(1, 3)), part![1]);
        assert_eq!(complement(&part![], ctx(1, 3)), part![2, 2]);
        assert_eq!(complement(&part![3, 1], ctx(2, 5)), part![3, 2]);
    }

    #[test]
    fn box_enumeration_is_descending_and_complete() {
        assert_eq!(partitions_in_box(2, 2, 2), vec![part![2], part![1, 1]]);
        assert_eq!(partitions_in_box(4, 2, 2), vec![part![2, 2]]);
        assert_eq!(partitions_in_box(0, 3, 3), vec![part![]]);
        let all = partitions_in_box(6, 4, 4);
        assert!(all.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn fits_iff_conjugate_fits_dual_exhaustive() {
        for n in 1..=8 {
            for k in 0..n {
                let c = ctx(k, n);
                // Partitions inside a box one larger on each side, to include
                // shapes that do not fit.
                for w in 0..=(c.rows() + 1) * (c.cols() + 1) {
                    for a in partitions_in_box(w, c.rows() + 1, c.cols() + 1) {
                        assert_eq!(
                            fits_in_box(&a, c),
                            fits_in_box(&conjugate(&a), dual_context(c)),
                            "{a} in {c}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn json_form_is_a_plain_array() {
        let a = part![3, 2, 1];
        assert_eq!(serde_json::to_string(&a).unwrap(), "[3,2,1]");
        let back: Partition = serde_json::from_str("[3,2,1,0]").unwrap();
        assert_eq!(back, a);
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
    }

    #[test]
    fn render_one_glyph_per_box() {
        assert_eq!(part![3, 1].render('#'), "###\n#");
    }

    fn arb_partition() -> impl Strategy<Value = Partition> {
        proptest::collection::vec(0usize..=8, 0..=8).prop_map(|mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            Partition::new(v).unwrap()
        })
    }

    proptest! {
        #[test]
        fn conjugation_is_weight_preserving_involution(a in arb_partition()) {
            prop_assume!(a.weight() <= 20);
            let c = conjugate(&a);
            prop_assert_eq!(c.weight(), a.weight());
            prop_assert_eq!(conjugate(&c), a);
        }

        #[test]
        fn skew_box_count_is_weight_difference(a in arb_partition(), b in arb_partition()) {
            let outer = Partition::new(
                (0..a.len().max(b.len())).map(|i| a.part(i).max(b.part(i))).collect()
            ).unwrap();
            let s = skew(&outer, &a).unwrap();
            let by_rows: usize = (0..s.num_rows()).map(|i| s.row_len(i)).sum();
            prop_assert_eq!(s.box_count(), outer.weight() - a.weight());
            prop_assert_eq!(by_rows, s.box_count());
        }
    }
}
