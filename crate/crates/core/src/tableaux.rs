//! Standard Young tableaux of shape (n,n), the simple-transposition move, and
//! column reading words.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A two-row filling of {1..2n} with columns of height two. Rows are not
/// required to increase, so this also models images of tableaux under
/// arbitrary permutations.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Filling {
    top: Vec<usize>,
    bottom: Vec<usize>,
}

impl Filling {
    pub fn new(top: Vec<usize>, bottom: Vec<usize>) -> Result<Self> {
        if top.len() != bottom.len() {
            return Err(Error::InvalidTableau(format!(
                "rows have lengths {} and {}",
                top.len(),
                bottom.len()
            )));
        }
        if top.is_empty() {
            return Err(Error::UnsupportedSize(0));
        }
        let size = 2 * top.len();
        let mut seen = vec![false; size + 1];
        for &v in top.iter().chain(&bottom) {
            if v == 0 || v > size {
                return Err(Error::InvalidTableau(format!(
                    "entry {v} outside 1..{size}"
                )));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidTableau(format!("entry {v} repeated")));
            }
        }
        Ok(Self { top, bottom })
    }

    pub fn n(&self) -> usize {
        self.top.len()
    }

    pub fn top(&self) -> &[usize] {
        &self.top
    }

    pub fn bottom(&self) -> &[usize] {
        &self.bottom
    }

    /// Columns as (top, bottom) pairs, left to right.
    pub fn columns(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.top.iter().copied().zip(self.bottom.iter().copied())
    }

    pub fn is_standard(&self) -> bool {
        self.top.windows(2).all(|w| w[0] < w[1])
            && self.bottom.windows(2).all(|w| w[0] < w[1])
            && self.columns().all(|(t, b)| t < b)
    }

    /// Exchanges the entries `i` and `i + 1`.
    pub fn swap_values(&self, i: usize) -> Result<Filling> {
        check_generator(i, self.n())?;
        let relabel = |v: usize| {
            if v == i {
                i + 1
            } else if v == i + 1 {
                i
            } else {
                v
            }
        };
        Ok(Filling {
            top: self.top.iter().map(|&v| relabel(v)).collect(),
            bottom: self.bottom.iter().map(|&v| relabel(v)).collect(),
        })
    }

    pub fn into_tableau(self) -> Result<Tableau> {
        if self.is_standard() {
            Ok(Tableau(self))
        } else {
            Err(Error::InvalidTableau(format!("{self} is not standard")))
        }
    }
}

impl fmt::Display for Filling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_row(f, &self.top)?;
        f.write_str(" | ")?;
        write_row(f, &self.bottom)
    }
}

fn write_row(f: &mut fmt::Formatter<'_>, row: &[usize]) -> fmt::Result {
    for (k, v) in row.iter().enumerate() {
        if k > 0 {
            f.write_str(" ")?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}

impl FromStr for Filling {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (top, bottom) = s
            .split_once('|')
            .ok_or_else(|| Error::Parse(format!("expected `top | bottom`, got {s:?}")))?;
        let row = |text: &str| -> Result<Vec<usize>> {
            text.split_whitespace()
                .map(|tok| {
                    tok.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad tableau entry {tok:?}")))
                })
                .collect()
        };
        Filling::new(row(top)?, row(bottom)?)
    }
}

/// A standard Young tableau of shape (n,n).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau(Filling);

impl Tableau {
    pub fn new(top: Vec<usize>, bottom: Vec<usize>) -> Result<Self> {
        Filling::new(top, bottom)?.into_tableau()
    }

    /// The column-filled tableau with odd numbers on top: the source vertex.
    pub fn column_filled(n: usize) -> Result<Self> {
        check_size(n)?;
        Ok(Tableau(Filling {
            top: (0..n).map(|c| 2 * c + 1).collect(),
            bottom: (0..n).map(|c| 2 * c + 2).collect(),
        }))
    }

    /// The row-filled tableau with 1..n on top: the sink vertex.
    pub fn row_filled(n: usize) -> Result<Self> {
        check_size(n)?;
        Ok(Tableau(Filling {
            top: (1..=n).collect(),
            bottom: (n + 1..=2 * n).collect(),
        }))
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    pub fn top(&self) -> &[usize] {
        self.0.top()
    }

    pub fn bottom(&self) -> &[usize] {
        self.0.bottom()
    }

    pub fn as_filling(&self) -> &Filling {
        &self.0
    }

    /// Membership mask: `in_top[v]` is true when `v` sits in the top row.
    pub fn top_mask(&self) -> Vec<bool> {
        let mut mask = vec![false; 2 * self.n() + 1];
        for &v in self.top() {
            mask[v] = true;
        }
        mask
    }

    /// True when `i` is in the bottom row and `i + 1` in the top row, i.e.
    /// the tableau graph has an out-edge labeled `s_i` at this vertex.
    pub fn has_ascent(&self, i: usize) -> bool {
        let mask = self.top_mask();
        i >= 1 && i < 2 * self.n() && !mask[i] && mask[i + 1]
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for Tableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.parse::<Filling>()?.into_tableau()
    }
}

/// A permutation of {1..len} in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; word.len() + 1];
        for &v in &word {
            if v == 0 || v > word.len() || std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidPermutation(format!(
                    "{word:?} is not a bijection"
                )));
            }
        }
        Ok(Self { word })
    }

    pub fn identity(len: usize) -> Self {
        Self {
            word: (1..=len).collect(),
        }
    }

    /// The product `s_{labels[0]} s_{labels[1]} ...` acting on positions,
    /// written in one-line notation.
    pub fn from_simple_word(len: usize, labels: &[usize]) -> Result<Self> {
        let mut word: Vec<usize> = (1..=len).collect();
        for &i in labels {
            if i == 0 || i >= len {
                return Err(Error::GeneratorOutOfRange {
                    index: i,
                    size: len,
                });
            }
            word.swap(i - 1, i);
        }
        Ok(Self { word })
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// Number of position pairs `a < b` with `word[a] > word[b]`.
    pub fn inversion_count(&self) -> usize {
        // Fenwick tree over values; quadratic would also do at these sizes.
        let len = self.word.len();
        let mut tree = vec![0usize; len + 1];
        let mut inversions = 0;
        for (seen, &v) in self.word.iter().enumerate() {
            let mut not_greater = 0;
            let mut k = v;
            while k > 0 {
                not_greater += tree[k];
                k &= k - 1;
            }
            inversions += seen - not_greater;
            let mut k = v;
            while k <= len {
                tree[k] += 1;
                k += k & k.wrapping_neg();
            }
        }
        inversions
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_row(f, &self.word)
    }
}

pub(crate) fn check_size(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::UnsupportedSize(0))
    } else {
        Ok(())
    }
}

pub(crate) fn check_generator(i: usize, n: usize) -> Result<()> {
    if i == 0 || i >= 2 * n {
        Err(Error::GeneratorOutOfRange {
            index: i,
            size: 2 * n,
        })
    } else {
        Ok(())
    }
}

/// Every standard tableau of shape (n,n), lexicographic by top row.
pub fn enumerate_tableaux(n: usize) -> Result<Vec<Tableau>> {
    check_size(n)?;
    let mut out = Vec::new();
    let mut top = Vec::with_capacity(n);
    let mut bottom = Vec::with_capacity(n);
    fill(n, 1, &mut top, &mut bottom, &mut out);
    Ok(out)
}

fn fill(
    n: usize,
    next: usize,
    top: &mut Vec<usize>,
    bottom: &mut Vec<usize>,
    out: &mut Vec<Tableau>,
) {
    if next > 2 * n {
        out.push(Tableau(Filling {
            top: top.clone(),
            bottom: bottom.clone(),
        }));
        return;
    }
    // Placing `next` on top first yields lexicographically smaller top rows.
    if top.len() < n {
        top.push(next);
        fill(n, next + 1, top, bottom, out);
        top.pop();
    }
    if bottom.len() < top.len() {
        bottom.push(next);
        fill(n, next + 1, top, bottom, out);
        bottom.pop();
    }
}

/// Swaps `i` and `i + 1` in `t`; the flag reports whether the result is standard.
pub fn apply_simple_to_tableau(t: &Tableau, i: usize) -> Result<(Filling, bool)> {
    let swapped = t.as_filling().swap_values(i)?;
    let standard = swapped.is_standard();
    Ok((swapped, standard))
}

/// Reads `t` down each column, leftmost column first.
pub fn reading_permutation(t: &Tableau) -> Permutation {
    Permutation {
        word: t.as_filling().columns().flat_map(|(a, b)| [a, b]).collect(),
    }
}

pub fn inversion_count(p: &Permutation) -> usize {
    p.inversion_count()
}
