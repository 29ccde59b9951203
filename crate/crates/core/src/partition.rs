//! Young diagrams: partitions, conjugation, containment, hooks and rim strips.
//!
//! A [`Partition`] is an immutable, weakly decreasing list of positive row
//! lengths. The empty diagram is stored as an empty list and printed as `[0]`.
//!
//! Partitions order by decreasing box count, then by decreasing rows in
//! lexicographic order, so `[3,2]` precedes `[2,2,1]` and every `BTreeMap`
//! keyed by partitions iterates in the conventional display order.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("rows must be weakly decreasing, got {0:?}")]
    NotDecreasing(Vec<usize>),
    #[error("cannot parse partition from {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    rows: Vec<usize>,
    size: usize,
}

impl Partition {
    /// Builds a partition from row lengths. Trailing zeros are dropped.
    pub fn new(mut rows: Vec<usize>) -> Result<Self, PartitionError> {
        while rows.last() == Some(&0) {
            rows.pop();
        }
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotDecreasing(rows));
        }
        let size = rows.iter().sum();
        Ok(Self { rows, size })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// Single-row diagram `[k]`.
    pub fn row_of(k: usize) -> Self {
        Self::new(vec![k]).expect("single row is always valid")
    }

    /// Single-column diagram `[1^k]`.
    pub fn column_of(k: usize) -> Self {
        Self::new(vec![1; k]).expect("single column is always valid")
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    /// Total number of boxes.
    pub fn size(&self) -> usize {
        self.size
    }

    /// Number of nonzero rows.
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Row length at a 0-based index; zero past the last row.
    pub fn row(&self, i: usize) -> usize {
        self.rows.get(i).copied().unwrap_or(0)
    }

    /// Column lengths of the diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.row(0);
        let cols = (0..width)
            .map(|j| self.rows.iter().take_while(|&&r| r > j).count())
            .collect::<Vec<_>>();
        Partition {
            rows: cols,
            size: self.size,
        }
    }

    /// Length of column `j` (0-based).
    pub fn column(&self, j: usize) -> usize {
        self.rows.iter().take_while(|&&r| r > j).count()
    }

    /// `true` iff `other` fits inside `self` cell by cell.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.rows.iter().zip(&self.rows).all(|(a, b)| a <= b)
    }

    /// Hook lengths, row by row.
    pub fn hook_lengths(&self) -> Vec<Vec<usize>> {
        let conj = self.conjugate();
        self.rows
            .iter()
            .enumerate()
            .map(|(i, &len)| (0..len).map(|j| len - j + conj.rows[j] - i - 1).collect())
            .collect()
    }

    /// Row indices (0-based) whose last box can be removed.
    pub fn removable_rows(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&i| self.row(i) > self.row(i + 1))
    }

    /// Row indices (0-based) where a box can be added; `len()` means a new row.
    pub fn addable_rows(&self) -> impl Iterator<Item = usize> + '_ {
        (0..=self.len()).filter(move |&i| i == 0 || self.row(i) < self.row(i - 1))
    }

    /// Removes the last box of row `i`. The caller must pick a removable row.
    pub fn remove_box(&self, i: usize) -> Partition {
        let mut rows = self.rows.clone();
        rows[i] -= 1;
        Partition::new(rows).expect("removable corner keeps the diagram valid")
    }

    /// Appends a box to row `i`. The caller must pick an addable row.
    pub fn add_box(&self, i: usize) -> Partition {
        let mut rows = self.rows.clone();
        if i == rows.len() {
            rows.push(1);
        } else {
            rows[i] += 1;
        }
        Partition::new(rows).expect("addable corner keeps the diagram valid")
    }

    /// All partitions of `n`, in display order.
    pub fn all_of(n: usize) -> Vec<Partition> {
        fn go(left: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if left == 0 {
                out.push(Partition::new(prefix.clone()).expect("generated rows decrease"));
                return;
            }
            for part in (1..=left.min(max)).rev() {
                prefix.push(part);
                go(left - part, part, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions of `n` with at most `max_rows` rows.
    pub fn all_of_with_rows(n: usize, max_rows: usize) -> Vec<Partition> {
        Self::all_of(n)
            .into_iter()
            .filter(|p| p.len() <= max_rows)
            .collect()
    }

    /// Removes the rim strip of `h` boxes that starts at the foot of the
    /// first column.
    ///
    /// The walk runs along the south-east rim: from box `(i, j)` it moves
    /// right when `(i, j+1)` is in the diagram and up otherwise. Those boxes
    /// are exactly the rim, so the first `h` of them form the only connected
    /// border strip of length `h` containing the foot of the first column.
    pub fn boundary_strip(&self, h: usize) -> Result<SkewStrip, NotRemovable> {
        if h == 0 || self.is_empty() {
            return Err(NotRemovable);
        }
        // 1-based coordinates
        let mut boxes = Vec::with_capacity(h);
        let (mut i, mut j) = (self.len(), 1usize);
        loop {
            boxes.push((i, j));
            if boxes.len() == h {
                break;
            }
            if j < self.rows[i - 1] {
                j += 1;
            } else if i > 1 {
                i -= 1;
            } else {
                return Err(NotRemovable);
            }
        }
        // Within a row the walk takes a contiguous run, so the row stays a
        // row exactly when that run reaches the row's last box.
        let mut rows = self.rows.clone();
        for (r, len) in rows.iter_mut().enumerate() {
            let in_row = boxes.iter().filter(|b| b.0 == r + 1);
            let (count, last) = in_row.fold((0, 0), |(n, m), b| (n + 1, m.max(b.1)));
            if count > 0 && last != *len {
                return Err(NotRemovable);
            }
            *len -= count;
        }
        let inner = Partition::new(rows).map_err(|_| NotRemovable)?;
        let min_col = boxes.iter().map(|b| b.1).min().unwrap_or(1);
        let max_col = boxes.iter().map(|b| b.1).max().unwrap_or(1);
        let min_row = boxes.iter().map(|b| b.0).min().unwrap_or(1);
        let max_row = boxes.iter().map(|b| b.0).max().unwrap_or(1);
        Ok(SkewStrip {
            outer: self.clone(),
            inner,
            boxes,
            columns_spanned: max_col - min_col + 1,
            rows_spanned: max_row - min_row + 1,
        })
    }
}

/// The requested rim strip does not exist or leaves an irregular diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("boundary strip cannot be removed")]
pub struct NotRemovable;

/// A connected rim strip `outer / inner`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewStrip {
    pub outer: Partition,
    pub inner: Partition,
    /// 1-based `(row, column)` coordinates in walk order.
    pub boxes: Vec<(usize, usize)>,
    pub columns_spanned: usize,
    pub rows_spanned: usize,
}

impl SkewStrip {
    pub fn remainder(&self) -> &Partition {
        &self.inner
    }

    pub fn len(&self) -> usize {
        self.boxes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boxes.is_empty()
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .size
            .cmp(&self.size)
            .then_with(|| other.rows.cmp(&self.rows))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("[0]");
        }
        f.write_str("[")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{r}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Accepts `[3,3,3,1]`, `3,3,3,1`, `[0]`, `[]` and exponent shorthand
/// such as `3^3,1` or `[3^3,1]`.
impl FromStr for Partition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason: &str| PartitionError::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let body = s.trim();
        let body = match (body.strip_prefix('['), body.strip_suffix(']')) {
            (Some(_), Some(_)) => &body[1..body.len() - 1],
            (None, None) => body,
            _ => return Err(err("unbalanced brackets")),
        };
        let mut rows = Vec::new();
        for item in body.split(',').map(str::trim) {
            if item.is_empty() {
                if body.trim().is_empty() {
                    continue;
                }
                return Err(err("empty entry"));
            }
            let (base, count) = match item.split_once('^') {
                Some((b, e)) => (b.trim(), e.trim()),
                None => (item, "1"),
            };
            let base: usize = base.parse().map_err(|_| err("row length is not a nonnegative integer"))?;
            let count: usize = count.parse().map_err(|_| err("exponent is not a nonnegative integer"))?;
            rows.extend(std::iter::repeat_n(base, count));
        }
        Partition::new(rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(rows: &[usize]) -> Partition {
        Partition::new(rows.to_vec()).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[]).conjugate(), p(&[]));
        assert_eq!(p(&[2, 1, 1, 1]).conjugate(), p(&[4, 1]));
        assert_eq!(p(&[3, 3, 3, 1]).conjugate(), p(&[4, 3, 3]));
    }

    #[test]
    fn containment() {
        assert!(p(&[2, 1]).contains(&p(&[1])));
        assert!(!p(&[2, 1]).contains(&p(&[2, 2])));
        assert!(p(&[3, 3, 3, 1]).contains(&p(&[3, 3])));
        assert!(p(&[1]).contains(&p(&[])));
    }

    #[test]
    fn hooks() {
        assert_eq!(p(&[1]).hook_lengths(), vec![vec![1]]);
        assert_eq!(p(&[2, 1]).hook_lengths(), vec![vec![3, 1], vec![1]]);
        assert_eq!(p(&[2, 2]).hook_lengths(), vec![vec![3, 2], vec![2, 1]]);
    }

    #[test]
    fn strip_one_box() {
        let s = p(&[3, 3, 3, 1]).boundary_strip(1).unwrap();
        assert_eq!(s.boxes, vec![(4, 1)]);
        assert_eq!(s.remainder(), &p(&[3, 3, 3]));
        assert_eq!(s.columns_spanned, 1);
    }

    #[test]
    fn strip_turns_along_row_above() {
        let s = p(&[3, 3, 3, 1]).boundary_strip(4).unwrap();
        assert_eq!(s.boxes, vec![(4, 1), (3, 1), (3, 2), (3, 3)]);
        assert_eq!(s.remainder(), &p(&[3, 3]));
        assert_eq!(s.columns_spanned, 3);
        assert_eq!(s.rows_spanned, 2);
    }

    #[test]
    fn strip_leaving_detached_box_is_rejected() {
        assert_eq!(p(&[3, 3, 3, 1]).boundary_strip(3), Err(NotRemovable));
        assert_eq!(p(&[3, 3, 3, 1]).boundary_strip(2), Err(NotRemovable));
    }

    #[test]
    fn strip_cannot_jump_diagonally() {
        // the rim of a hook is the whole hook; four boxes up the first
        // column strand the arm box
        assert_eq!(p(&[2, 1, 1, 1]).boundary_strip(4), Err(NotRemovable));
        let s = p(&[2, 1, 1, 1]).boundary_strip(5).unwrap();
        assert!(s.remainder().is_empty());
        assert_eq!(s.columns_spanned, 2);
    }

    #[test]
    fn strip_longer_than_rim() {
        assert_eq!(p(&[2, 2]).boundary_strip(4), Err(NotRemovable));
        assert_eq!(p(&[2, 2]).boundary_strip(3).unwrap().remainder(), &p(&[1]));
        assert_eq!(p(&[]).boundary_strip(1), Err(NotRemovable));
        assert_eq!(p(&[1]).boundary_strip(0), Err(NotRemovable));
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("[3,3,3,1]".parse::<Partition>().unwrap(), p(&[3, 3, 3, 1]));
        assert_eq!("3^3,1".parse::<Partition>().unwrap(), p(&[3, 3, 3, 1]));
        assert_eq!("[3^3, 1]".parse::<Partition>().unwrap(), p(&[3, 3, 3, 1]));
        assert_eq!("[0]".parse::<Partition>().unwrap(), p(&[]));
        assert_eq!("[]".parse::<Partition>().unwrap(), p(&[]));
        assert_eq!("[2,1,0]".parse::<Partition>().unwrap(), p(&[2, 1]));
        assert!("[1,2]".parse::<Partition>().is_err());
        assert!("[a]".parse::<Partition>().is_err());
        assert!("[1,,1]".parse::<Partition>().is_err());
        assert!("[1".parse::<Partition>().is_err());
        assert_eq!(p(&[]).to_string(), "[0]");
        assert_eq!(p(&[3, 2]).to_string(), "[3,2]");
    }

    #[test]
    fn display_order() {
        let mut v = vec![p(&[1]), p(&[2, 2, 1]), p(&[3]), p(&[3, 2]), p(&[2, 1])];
        v.sort();
        assert_eq!(v, vec![p(&[3, 2]), p(&[2, 2, 1]), p(&[3]), p(&[2, 1]), p(&[1])]);
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..10).map(|n| Partition::all_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30]);
    }

    #[test]
    fn corners() {
        let l = p(&[3, 1, 1]);
        assert_eq!(l.removable_rows().collect::<Vec<_>>(), vec![0, 2]);
        assert_eq!(l.addable_rows().collect::<Vec<_>>(), vec![0, 1, 3]);
        assert_eq!(l.remove_box(2), p(&[3, 1]));
        assert_eq!(l.add_box(3), p(&[3, 1, 1, 1]));
    }
}
