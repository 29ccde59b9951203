//! Littlewood–Richardson coefficients and symmetric-group dimensions.
//!
//! Two independent enumerators live here. [`lr_tableaux`] fills a fixed
//! skew shape with lattice-word tableaux and tallies their contents; it backs
//! [`lr_coefficient`] and [`skew_expand`]. [`lr_product`] instead grows the
//! first diagram by successive horizontal strips of 1s, 2s, ... (Littlewood's
//! original procedure). The test suites play the two against each other.

use num_bigint::BigUint;
use num_traits::One;

use crate::decomposition::Decomposition;
use crate::partition::Partition;

/// Counts LR tableaux of shape `outer / inner`, grouped by content.
///
/// A filling qualifies when rows weakly increase, columns strictly increase
/// and the reverse reading word (right to left, top to bottom) is a lattice
/// word. With `content` set, only fillings of that content are counted.
pub fn lr_tableaux(
    outer: &Partition,
    inner: &Partition,
    content: Option<&Partition>,
) -> Decomposition {
    let mut out = Decomposition::new();
    if !outer.contains(inner) {
        return out;
    }
    if let Some(c) = content {
        if c.size() + inner.size() != outer.size() {
            return out;
        }
    }
    let cells: Vec<(usize, usize)> = (0..outer.len())
        .flat_map(|i| (inner.row(i)..outer.row(i)).rev().map(move |j| (i, j)))
        .collect();
    let mut filler = Filler {
        outer,
        inner,
        content,
        grid: outer.rows().iter().map(|&r| vec![0; r]).collect(),
        counts: vec![0; cells.len() + 2],
        cells: &cells,
        out: &mut out,
    };
    filler.fill(0);
    out
}

struct Filler<'a> {
    outer: &'a Partition,
    inner: &'a Partition,
    content: Option<&'a Partition>,
    grid: Vec<Vec<usize>>,
    // counts[v] = occurrences of letter v so far; index 0 unused
    counts: Vec<usize>,
    cells: &'a [(usize, usize)],
    out: &'a mut Decomposition,
}

impl Filler<'_> {
    fn fill(&mut self, k: usize) {
        if k == self.cells.len() {
            let rows: Vec<usize> = self.counts[1..].iter().copied().take_while(|&c| c > 0).collect();
            let content = Partition::new(rows).expect("lattice words have partition content");
            self.out.add(content, 1);
            return;
        }
        let (i, j) = self.cells[k];
        let lower = if i > 0 && j >= self.inner.row(i - 1) {
            self.grid[i - 1][j] + 1
        } else {
            1
        };
        let mut upper = if j + 1 < self.outer.row(i) {
            self.grid[i][j + 1]
        } else {
            usize::MAX
        };
        // a new letter v needs v-1 already present
        let distinct = self.counts[1..].iter().take_while(|&&c| c > 0).count();
        upper = upper.min(distinct + 1);
        if let Some(c) = self.content {
            upper = upper.min(c.len());
        }
        for v in lower..=upper {
            if v > 1 && self.counts[v - 1] <= self.counts[v] {
                continue;
            }
            if let Some(c) = self.content {
                if self.counts[v] >= c.row(v - 1) {
                    continue;
                }
            }
            self.grid[i][j] = v;
            self.counts[v] += 1;
            self.fill(k + 1);
            self.counts[v] -= 1;
        }
        self.grid[i][j] = 0;
    }
}

/// The coefficient of `nu` in the product of `lambda` and `mu`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.size() + mu.size() != nu.size() || !nu.contains(lambda) || !nu.contains(mu) {
        return 0;
    }
    lr_tableaux(nu, lambda, Some(mu)).get(mu) as u64
}

/// Full outer product of `lambda` and `mu`.
pub fn lr_product(lambda: &Partition, mu: &Partition) -> Decomposition {
    let mut grower = StripGrower {
        shape: lambda.rows().to_vec(),
        labels: vec![Vec::new(); lambda.len()],
        content: mu.rows(),
        out: Decomposition::new(),
    };
    grower.place_letter(0);
    grower.out
}

struct StripGrower<'a> {
    shape: Vec<usize>,
    // labels[r] holds the letters added to row r, left to right
    labels: Vec<Vec<usize>>,
    content: &'a [usize],
    out: Decomposition,
}

impl StripGrower<'_> {
    fn place_letter(&mut self, letter: usize) {
        if letter == self.content.len() {
            let shape = Partition::new(self.shape.clone()).expect("strips keep the shape valid");
            self.out.add(shape, 1);
            return;
        }
        let before = self.shape.clone();
        self.shape.push(0);
        self.labels.push(Vec::new());
        self.add_strip(letter, 0, self.content[letter], &before);
        self.shape.pop();
        self.labels.pop();
    }

    /// Distributes `left` boxes labelled `letter + 1` over rows `row..`,
    /// never putting two in one column of the strip.
    fn add_strip(&mut self, letter: usize, row: usize, left: usize, before: &[usize]) {
        if left == 0 {
            if self.is_lattice(letter + 1) {
                let trimmed = self.shape.last() == Some(&0);
                if trimmed {
                    self.shape.pop();
                    self.labels.pop();
                }
                self.place_letter(letter + 1);
                if trimmed {
                    self.shape.push(0);
                    self.labels.push(Vec::new());
                }
            }
            return;
        }
        if row >= self.shape.len() {
            return;
        }
        let room = if row == 0 {
            left
        } else {
            (before[row - 1] - before.get(row).copied().unwrap_or(0)).min(left)
        };
        for take in (0..=room).rev() {
            self.shape[row] += take;
            self.labels[row].extend(std::iter::repeat_n(letter + 1, take));
            self.add_strip(letter, row + 1, left - take, before);
            self.shape[row] -= take;
            let keep = self.labels[row].len() - take;
            self.labels[row].truncate(keep);
        }
    }

    fn is_lattice(&self, max_letter: usize) -> bool {
        let mut counts = vec![0usize; max_letter + 1];
        for row in &self.labels {
            for &v in row.iter().rev() {
                counts[v] += 1;
                if v > 1 && counts[v] > counts[v - 1] {
                    return false;
                }
            }
        }
        true
    }
}

/// All `alpha` with `c^lambda_{delta, alpha} > 0`, with that coefficient.
pub fn skew_expand(lambda: &Partition, delta: &Partition) -> Decomposition {
    lr_tableaux(lambda, delta, None)
}

/// Number of standard Young tableaux of shape `lambda`, by the hook formula.
pub fn sym_dim(lambda: &Partition) -> BigUint {
    let numerator: BigUint = (1..=lambda.size()).map(BigUint::from).product();
    let hooks: BigUint = lambda
        .hook_lengths()
        .into_iter()
        .flatten()
        .fold(BigUint::one(), |acc, h| acc * h);
    numerator / hooks
}
