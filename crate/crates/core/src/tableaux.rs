//! Littlewood-Richardson tableaux on skew shapes.
//!
//! A filling of `c/a` with content `b` is an LR tableau when rows weakly
//! increase, columns strictly increase, and the reverse reading word (rows
//! read right to left, top row first) is a lattice word. The number of such
//! fillings is the structure constant of `sigma_c` in `sigma_a * sigma_b`.

use std::fmt;
use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::partitions::{Partition, SkewShape};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableauError {
    #[error("row {row} holds {found} entries but the shape has {expected} boxes there")]
    RowLength {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("filling has {found} rows but the shape has {expected}")]
    RowCount { expected: usize, found: usize },
    #[error("entries must be positive")]
    ZeroEntry,
}

impl TableauError {
    pub fn name(&self) -> &'static str {
        "TableauError"
    }
}

/// Content of a filling: `counts[i]` is the multiplicity of entry `i+1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight {
    counts: Vec<usize>,
}

impl Weight {
    pub fn new(mut counts: Vec<usize>) -> Self {
        while counts.last() == Some(&0) {
            counts.pop();
        }
        Weight { counts }
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn count(&self, entry: usize) -> usize {
        entry
            .checked_sub(1)
            .and_then(|i| self.counts.get(i))
            .copied()
            .unwrap_or(0)
    }

    /// Largest entry with nonzero multiplicity.
    pub fn max_entry(&self) -> usize {
        self.counts.len()
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }
}

impl From<&Partition> for Weight {
    fn from(p: &Partition) -> Self {
        Weight::new(p.parts().to_vec())
    }
}

/// A skew shape together with one positive entry per box.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SkewFilling {
    shape: SkewShape,
    /// Entries row by row, left to right.
    rows: Vec<Vec<usize>>,
}

impl SkewFilling {
    pub fn new(shape: SkewShape, mut rows: Vec<Vec<usize>>) -> Result<Self, TableauError> {
        // Trailing empty rows are allowed in input.
        while rows.len() > shape.num_rows() && rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        if rows.len() > shape.num_rows() {
            return Err(TableauError::RowCount {
                expected: shape.num_rows(),
                found: rows.len(),
            });
        }
        rows.resize(shape.num_rows(), Vec::new());
        for (i, row) in rows.iter().enumerate() {
            if row.len() != shape.row_len(i) {
                return Err(TableauError::RowLength {
                    row: i,
                    expected: shape.row_len(i),
                    found: row.len(),
                });
            }
            if row.contains(&0) {
                return Err(TableauError::ZeroEntry);
            }
        }
        Ok(SkewFilling { shape, rows })
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Entry at absolute 0-based position, if that box is in the skew shape.
    pub fn entry(&self, row: usize, col: usize) -> Option<usize> {
        if !self.shape.contains_box(row, col) {
            return None;
        }
        Some(self.rows[row][col - self.shape.inner().part(row)])
    }

    /// Rows with inner boxes drawn as `:` and entries as digits, e.g.
    /// `:::11`, `::22`, `:3`.
    pub fn render_lines(&self) -> Vec<String> {
        self.rows
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let mut line = ":".repeat(self.shape.inner().part(i));
                line.extend(row.iter().map(|&e| entry_glyph(e)));
                line
            })
            .collect()
    }

    pub fn render(&self) -> String {
        self.render_lines().join("\n")
    }
}

impl fmt::Display for SkewFilling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_lines().join(" / "))
    }
}

fn entry_glyph(e: usize) -> char {
    u32::try_from(e)
        .ok()
        .and_then(|e| char::from_digit(e, 36))
        .unwrap_or('?')
}

/// Rows reversed and concatenated, top row first.
pub fn reading_word(f: &SkewFilling) -> Vec<usize> {
    f.rows
        .iter()
        .flat_map(|r| r.iter().rev().copied())
        .collect()
}

/// Every prefix contains at least as many `i` as `i+1`.
pub fn is_lattice_word(word: &[usize]) -> bool {
    let max = word.iter().copied().max().unwrap_or(0);
    let mut counts = vec![0usize; max + 1];
    for &e in word {
        if e == 0 {
            return false;
        }
        counts[e] += 1;
        if e > 1 && counts[e] > counts[e - 1] {
            return false;
        }
    }
    true
}

pub fn is_lr_tableau(f: &SkewFilling, w: &Weight) -> bool {
    let shape = &f.shape;

    let mut content = vec![0usize; w.max_entry() + 1];
    for &e in f.rows.iter().flatten() {
        if e > w.max_entry() {
            return false;
        }
        content[e] += 1;
    }
    if (1..=w.max_entry()).any(|e| content[e] != w.count(e)) {
        return false;
    }

    if !f.rows.iter().all(|r| r.windows(2).all(|p| p[0] <= p[1])) {
        return false;
    }

    for row in 1..shape.num_rows() {
        for col in shape.row_range(row) {
            if let Some(above) = f.entry(row - 1, col) {
                if above >= f.entry(row, col).expect("box in shape") {
                    return false;
                }
            }
        }
    }

    is_lattice_word(&reading_word(f))
}

/// DFS state over boxes in reading order.
struct Search<'a> {
    shape: &'a SkewShape,
    weight: &'a Weight,
    boxes: Vec<(usize, usize)>,
    rows: Vec<Vec<usize>>,
    used: Vec<usize>,
}

impl<'a> Search<'a> {
    fn new(shape: &'a SkewShape, weight: &'a Weight) -> Self {
        let boxes = (0..shape.num_rows())
            .flat_map(|r| shape.row_range(r).rev().map(move |c| (r, c)))
            .collect();
        let rows = (0..shape.num_rows())
            .map(|r| vec![0; shape.row_len(r)])
            .collect();
        Search {
            shape,
            weight,
            boxes,
            rows,
            used: vec![0; weight.max_entry() + 1],
        }
    }

    fn get(&self, row: usize, col: usize) -> Option<usize> {
        if self.shape.contains_box(row, col) {
            Some(self.rows[row][col - self.shape.inner().part(row)])
        } else {
            None
        }
    }

    fn run<F>(&mut self, idx: usize, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[Vec<usize>]) -> ControlFlow<()>,
    {
        if idx == self.boxes.len() {
            return visit(&self.rows);
        }
        let (r, c) = self.boxes[idx];
        // Right neighbour is already placed; rows weakly increase.
        let hi = self
            .get(r, c + 1)
            .unwrap_or(usize::MAX)
            .min(self.weight.max_entry())
            .min(r + 1);
        let lo = match r.checked_sub(1).and_then(|up| self.get(up, c)) {
            Some(above) => above + 1,
            None => 1,
        };
        for v in lo..=hi {
            if self.used[v] == self.weight.count(v) {
                continue;
            }
            if v > 1 && self.used[v] == self.used[v - 1] {
                continue;
            }
            self.used[v] += 1;
            let off = c - self.shape.inner().part(r);
            self.rows[r][off] = v;
            let flow = self.run(idx + 1, visit);
            self.rows[r][off] = 0;
            self.used[v] -= 1;
            flow?;
        }
        ControlFlow::Continue(())
    }
}

fn search<F>(shape: &SkewShape, w: &Weight, mut visit: F)
where
    F: FnMut(&[Vec<usize>]) -> ControlFlow<()>,
{
    if shape.box_count() != w.total() {
        return;
    }
    let _ = Search::new(shape, w).run(0, &mut visit);
}

/// All LR tableaux of the given shape and content, lexicographic in the
/// reading word.
pub fn enumerate_lr_tableaux(shape: &SkewShape, w: &Weight) -> Vec<SkewFilling> {
    let mut out = Vec::new();
    search(shape, w, |rows| {
        out.push(SkewFilling {
            shape: shape.clone(),
            rows: rows.to_vec(),
        });
        ControlFlow::Continue(())
    });
    out
}

/// Number of LR tableaux, without materializing them.
pub fn count_lr_tableaux(shape: &SkewShape, w: &Weight) -> u64 {
    let mut count = 0u64;
    search(shape, w, |_| {
        count += 1;
        ControlFlow::Continue(())
    });
    count
}

/// The lexicographically first LR tableau, if any.
pub fn first_lr_tableau(shape: &SkewShape, w: &Weight) -> Option<SkewFilling> {
    let mut found = None;
    search(shape, w, |rows| {
        found = Some(SkewFilling {
            shape: shape.clone(),
            rows: rows.to_vec(),
        });
        ControlFlow::Break(())
    });
    found
}
