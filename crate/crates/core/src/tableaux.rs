//! Skew tableaux in French convention, reading words, standardization,
//! recording matrices and the rotation `•`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::shapes::{Partition, Rect, SkewShape};
use crate::{Error, Result};

/// A word over the alphabet `1..=alphabet`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<u32>,
    alphabet: u32,
}

impl Word {
    pub fn new(letters: Vec<u32>, alphabet: u32) -> Result<Self> {
        if let Some(&bad) = letters.iter().find(|&&a| a == 0 || a > alphabet) {
            return Err(Error::Tableau(format!("letter {bad} outside alphabet [{alphabet}]")));
        }
        Ok(Word { letters, alphabet })
    }

    /// Word with the smallest alphabet containing all its letters.
    pub fn from_letters(letters: Vec<u32>) -> Self {
        let alphabet = letters.iter().copied().max().unwrap_or(1);
        Word { letters, alphabet }
    }

    /// Parses digits; letters above 9 are written in parentheses, e.g. `"71(10)96"`.
    pub fn parse(s: &str, alphabet: u32) -> Result<Self> {
        let mut letters = Vec::new();
        let mut chars = s.chars();
        while let Some(c) = chars.next() {
            if c == '(' {
                let num: String = chars.by_ref().take_while(|&c| c != ')').collect();
                letters.push(num.parse().map_err(|_| Error::Parse(format!("bad letter ({num}) in {s:?}")))?);
            } else {
                letters.push(c.to_digit(10).ok_or_else(|| Error::Parse(format!("bad letter {c:?} in {s:?}")))?);
            }
        }
        Word::new(letters, alphabet)
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn alphabet(&self) -> u32 {
        self.alphabet
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn with_alphabet(&self, alphabet: u32) -> Result<Word> {
        Word::new(self.letters.clone(), alphabet)
    }

    /// `content()[i]` counts the letter `i + 1`.
    pub fn content(&self) -> Vec<usize> {
        let mut c = vec![0; self.alphabet as usize];
        for &a in &self.letters {
            c[a as usize - 1] += 1;
        }
        c
    }

    /// Every prefix has at least as many `i` as `i + 1`.
    pub fn is_yamanouchi(&self) -> bool {
        let mut c = vec![0usize; self.alphabet as usize + 1];
        for &a in &self.letters {
            let a = a as usize;
            c[a] += 1;
            if a > 1 && c[a] > c[a - 1] {
                return false;
            }
        }
        true
    }

    pub fn is_opposite_yamanouchi(&self) -> bool {
        self.dual().is_yamanouchi()
    }

    /// `w^•`: reverse the word and complement every letter.
    pub fn dual(&self) -> Word {
        let k = self.alphabet + 1;
        Word { letters: self.letters.iter().rev().map(|a| k - a).collect(), alphabet: self.alphabet }
    }

    /// Standard word on `[len]`; equal letters are numbered right to left.
    pub fn standardize(&self) -> Word {
        let content = self.content();
        let mut out = vec![0; self.letters.len()];
        let mut seen = vec![0u32; content.len()];
        let mut base = vec![0u32; content.len()];
        let mut acc = 0u32;
        for (i, &c) in content.iter().enumerate() {
            base[i] = acc;
            acc += c as u32;
        }
        for (i, &a) in self.letters.iter().enumerate().rev() {
            let k = a as usize - 1;
            seen[k] += 1;
            out[i] = base[k] + seen[k];
        }
        Word { letters: out, alphabet: self.letters.len().max(1) as u32 }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &a in &self.letters {
            if a < 10 {
                write!(f, "{a}")?;
            } else {
                write!(f, "({a})")?;
            }
        }
        Ok(())
    }
}

/// `M[i][j]` counts the letter `j + 1` in row `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RecordingMatrix {
    m: Vec<Vec<usize>>,
}

impl RecordingMatrix {
    pub fn new(m: Vec<Vec<usize>>) -> Result<Self> {
        if let Some(first) = m.first() {
            if m.iter().any(|r| r.len() != first.len()) {
                return Err(Error::Mismatch("ragged recording matrix".into()));
            }
        }
        Ok(RecordingMatrix { m })
    }

    pub fn rows(&self) -> usize {
        self.m.len()
    }

    pub fn cols(&self) -> usize {
        self.m.first().map_or(0, |r| r.len())
    }

    pub fn get(&self, i: usize, j: usize) -> usize {
        self.m[i][j]
    }

    pub fn as_rows(&self) -> &[Vec<usize>] {
        &self.m
    }

    pub fn transpose(&self) -> RecordingMatrix {
        let (r, c) = (self.rows(), self.cols());
        let mut t = vec![vec![0; r]; c];
        for (i, row) in self.m.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                t[j][i] = v;
            }
        }
        RecordingMatrix { m: t }
    }

    /// `P_rev M P_rev`.
    pub fn reverse_conjugate(&self) -> RecordingMatrix {
        RecordingMatrix { m: self.m.iter().rev().map(|r| r.iter().rev().copied().collect()).collect() }
    }

    pub fn row_sums(&self) -> Vec<usize> {
        self.m.iter().map(|r| r.iter().sum()).collect()
    }

    pub fn col_sums(&self) -> Vec<usize> {
        self.transpose().row_sums()
    }

    /// Pads or trims with zero rows and columns to a square of side `k`.
    pub fn squared(&self, k: usize) -> Result<RecordingMatrix> {
        let mut m = vec![vec![0; k]; k];
        for (i, row) in self.m.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if v > 0 {
                    if i >= k || j >= k {
                        return Err(Error::Mismatch(format!("entry ({i},{j}) outside a {k}x{k} matrix")));
                    }
                    m[i][j] = v;
                }
            }
        }
        Ok(RecordingMatrix { m })
    }
}

/// Boundary data `(μ, ν, λ)` of an LR tableau of shape `complement(λ)/μ` and content `ν`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Boundary {
    pub mu: Partition,
    pub nu: Partition,
    pub lam: Partition,
}

impl Boundary {
    pub fn new(mu: Partition, nu: Partition, lam: Partition) -> Result<Self> {
        if mu.rect() != nu.rect() || mu.rect() != lam.rect() {
            return Err(Error::Mismatch("boundary partitions live in different rectangles".into()));
        }
        Ok(Boundary { mu, nu, lam })
    }

    pub fn rect(&self) -> Rect {
        self.mu.rect()
    }

    pub fn as_array(&self) -> [&Partition; 3] {
        [&self.mu, &self.nu, &self.lam]
    }

    pub fn from_array([mu, nu, lam]: [Partition; 3]) -> Result<Self> {
        Boundary::new(mu, nu, lam)
    }

    /// The skew shape `complement(λ)/μ`, if `μ ⊆ complement(λ)`.
    pub fn shape(&self) -> Option<SkewShape> {
        SkewShape::new(self.lam.complement(), self.mu.clone()).ok()
    }

    pub fn transpose(&self) -> Boundary {
        Boundary { mu: self.mu.transpose(), nu: self.nu.transpose(), lam: self.lam.transpose() }
    }

    pub fn to_strings(&self) -> [String; 3] {
        [self.mu.to_string(), self.nu.to_string(), self.lam.to_string()]
    }

    pub fn parse(texts: [&str; 3], rect: Rect) -> Result<Self> {
        Boundary::new(
            Partition::parse(texts[0], rect)?,
            Partition::parse(texts[1], rect)?,
            Partition::parse(texts[2], rect)?,
        )
    }
}

impl fmt::Display for Boundary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.mu, self.nu, self.lam)
    }
}

/// A filling of a skew shape. Row `r` (0-based, bottom to top) starts at column
/// `inner[r]` and its entries are stored left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewTableau {
    rect: Rect,
    inner: Vec<usize>,
    rows: Vec<Vec<u32>>,
}

impl SkewTableau {
    /// Checks the shape only; see [`SkewTableau::is_semistandard`] for the filling.
    pub fn new(rect: Rect, inner: Vec<usize>, rows: Vec<Vec<u32>>) -> Result<Self> {
        if inner.len() != rect.d || rows.len() != rect.d {
            return Err(Error::Tableau(format!("expected {} rows", rect.d)));
        }
        let outer: Vec<usize> = inner.iter().zip(&rows).map(|(i, r)| i + r.len()).collect();
        Partition::new(&inner, rect)?;
        Partition::new(&outer, rect)?;
        if rows.iter().flatten().any(|&a| a == 0) {
            return Err(Error::Tableau("entries must be positive".into()));
        }
        Ok(SkewTableau { rect, inner, rows })
    }

    pub(crate) fn from_raw(rect: Rect, inner: Vec<usize>, rows: Vec<Vec<u32>>) -> Self {
        debug_assert!(SkewTableau::new(rect, inner.clone(), rows.clone()).is_ok());
        SkewTableau { rect, inner, rows }
    }

    pub(crate) fn set_entry(&mut self, r: usize, c: usize, a: u32) {
        self.rows[r][c - self.inner[r]] = a;
    }

    /// Semistandard tableau; errors if the filling is not.
    pub fn semistandard(rect: Rect, inner: Vec<usize>, rows: Vec<Vec<u32>>) -> Result<Self> {
        let t = SkewTableau::new(rect, inner, rows)?;
        if !t.is_semistandard() {
            return Err(Error::Tableau("filling is not semistandard".into()));
        }
        Ok(t)
    }

    pub fn empty(shape: &SkewShape) -> SkewTableau {
        SkewTableau {
            rect: shape.rect(),
            inner: shape.inner.parts().to_vec(),
            rows: (0..shape.rect().d).map(|r| vec![0; shape.row_len(r)]).collect(),
        }
    }

    /// Fills `shape` by its row reading order (rows bottom to top, right to left).
    pub fn fill_row_word(shape: &SkewShape, word: &[u32]) -> Result<SkewTableau> {
        if word.len() != shape.size() {
            return Err(Error::Mismatch(format!("word of length {} for {} cells", word.len(), shape.size())));
        }
        let mut t = SkewTableau::empty(shape);
        let mut it = word.iter();
        for row in &mut t.rows {
            for slot in row.iter_mut().rev() {
                *slot = *it.next().unwrap();
            }
        }
        SkewTableau::new(t.rect, t.inner, t.rows)
    }

    /// Fills `shape` by its column reading order (columns right to left, bottom to top).
    pub fn fill_column_word(shape: &SkewShape, word: &[u32]) -> Result<SkewTableau> {
        if word.len() != shape.size() {
            return Err(Error::Mismatch(format!("word of length {} for {} cells", word.len(), shape.size())));
        }
        let mut t = SkewTableau::empty(shape);
        let mut it = word.iter();
        for c in (0..shape.rect().width).rev() {
            for r in 0..shape.rect().d {
                if c >= t.inner[r] && c < t.inner[r] + t.rows[r].len() {
                    t.rows[r][c - t.inner[r]] = *it.next().unwrap();
                }
            }
        }
        SkewTableau::new(t.rect, t.inner, t.rows)
    }

    /// `Y(ν)`: row `i` filled with `i`.
    pub fn yamanouchi(nu: &Partition) -> SkewTableau {
        let rows = nu.parts().iter().enumerate().map(|(i, &p)| vec![i as u32 + 1; p]).collect();
        SkewTableau { rect: nu.rect(), inner: vec![0; nu.rect().d], rows }
    }

    /// `Y(λ)^a`, the antinormal form of `Y(λ)`, of shape `D/λ^∨`.
    pub fn antinormal_yamanouchi(lam: &Partition) -> SkewTableau {
        let rect = lam.rect();
        let (d, w) = (rect.d, rect.width);
        let lt = lam.transpose();
        let inner = lam.complement().parts().to_vec();
        let mut rows: Vec<Vec<u32>> = inner.iter().map(|&i| vec![0; w - i]).collect();
        for c in 0..w {
            let h = lt.part(w - 1 - c);
            for k in 0..h {
                let r = d - h + k;
                rows[r][c - inner[r]] = k as u32 + 1;
            }
        }
        SkewTableau { rect, inner, rows }
    }

    pub fn rect(&self) -> Rect {
        self.rect
    }

    pub fn d(&self) -> usize {
        self.rect.d
    }

    pub fn width(&self) -> usize {
        self.rect.width
    }

    pub fn inner(&self) -> &[usize] {
        &self.inner
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn outer(&self) -> Vec<usize> {
        self.inner.iter().zip(&self.rows).map(|(i, r)| i + r.len()).collect()
    }

    pub fn inner_partition(&self) -> Partition {
        Partition::new(&self.inner, self.rect).expect("validated inner shape")
    }

    pub fn outer_partition(&self) -> Partition {
        Partition::new(&self.outer(), self.rect).expect("validated outer shape")
    }

    pub fn shape(&self) -> SkewShape {
        SkewShape { outer: self.outer_partition(), inner: self.inner_partition() }
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn is_straight(&self) -> bool {
        self.inner.iter().all(|&i| i == 0)
    }

    /// Entry at `(row, col)`, 0-based.
    pub fn get(&self, r: usize, c: usize) -> Option<u32> {
        let i = *self.inner.get(r)?;
        if c < i {
            return None;
        }
        self.rows[r].get(c - i).copied()
    }

    /// `(row, col, entry)` in row reading position order (bottom to top, left to right).
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(move |(r, row)| row.iter().enumerate().map(move |(k, &a)| (r, self.inner[r] + k, a)))
    }

    pub fn max_letter(&self) -> u32 {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Alphabet used for words and matrices: at least the number of rows.
    pub fn alphabet(&self) -> u32 {
        self.max_letter().max(self.rect.d as u32)
    }

    pub fn content(&self) -> Vec<usize> {
        let mut c = vec![0; self.alphabet() as usize];
        for &a in self.rows.iter().flatten() {
            c[a as usize - 1] += 1;
        }
        c
    }

    pub fn is_semistandard(&self) -> bool {
        if self.rows.iter().any(|r| r.windows(2).any(|w| w[0] > w[1])) {
            return false;
        }
        self.columns_ok(|below, above| below < above)
    }

    /// Rows strictly increase and columns weakly increase.
    pub fn is_row_strict(&self) -> bool {
        if self.rows.iter().any(|r| r.windows(2).any(|w| w[0] >= w[1])) {
            return false;
        }
        self.columns_ok(|below, above| below <= above)
    }

    fn columns_ok(&self, ok: impl Fn(u32, u32) -> bool) -> bool {
        for r in 1..self.rect.d {
            let (lo, hi) = (self.inner[r], self.inner[r] + self.rows[r].len());
            for c in lo..hi {
                if let Some(b) = self.get(r - 1, c) {
                    if !ok(b, self.rows[r][c - lo]) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn is_standard(&self) -> bool {
        let n = self.size();
        let mut seen = vec![false; n + 1];
        for &a in self.rows.iter().flatten() {
            if a as usize > n || seen[a as usize] {
                return false;
            }
            seen[a as usize] = true;
        }
        self.is_semistandard()
    }

    /// Rows bottom to top, each read right to left.
    pub fn row_word(&self) -> Word {
        let letters = self.rows.iter().flat_map(|r| r.iter().rev().copied()).collect();
        Word { letters, alphabet: self.alphabet() }
    }

    /// Columns right to left, each read bottom to top.
    pub fn column_word(&self) -> Word {
        let mut letters = Vec::with_capacity(self.size());
        for c in (0..self.rect.width).rev() {
            for r in 0..self.rect.d {
                if let Some(a) = self.get(r, c) {
                    letters.push(a);
                }
            }
        }
        Word { letters, alphabet: self.alphabet() }
    }

    /// Standard tableau numbering equal letters from the north-west.
    pub fn standardize(&self) -> SkewTableau {
        let std = self.row_word().standardize();
        SkewTableau::fill_row_word(&self.shape(), std.letters()).expect("same shape")
    }

    /// `d × alphabet` recording matrix.
    pub fn recording_matrix(&self) -> RecordingMatrix {
        let k = self.alphabet() as usize;
        let m = self
            .rows
            .iter()
            .map(|r| {
                let mut v = vec![0; k];
                for &a in r {
                    v[a as usize - 1] += 1;
                }
                v
            })
            .collect();
        RecordingMatrix { m }
    }

    /// Rebuilds the tableau whose row `i` holds `m[i][j]` letters `j + 1`, anchored at `inner`.
    pub fn from_matrix(m: &RecordingMatrix, rect: Rect, inner: &[usize]) -> Result<SkewTableau> {
        if m.rows() != rect.d {
            return Err(Error::Mismatch(format!("matrix has {} rows, rectangle {}", m.rows(), rect.d)));
        }
        let rows = m
            .as_rows()
            .iter()
            .map(|r| r.iter().enumerate().flat_map(|(j, &c)| std::iter::repeat(j as u32 + 1).take(c)).collect())
            .collect();
        SkewTableau::new(rect, inner.to_vec(), rows)
    }

    /// The involution `•` over the alphabet `[d]`; letters must not exceed `d`.
    pub fn rotate(&self) -> SkewTableau {
        self.rotate_with(self.rect.d as u32)
    }

    /// Rotation by π with letters complemented in `[k]`.
    pub fn rotate_with(&self, k: u32) -> SkewTableau {
        let w = self.rect.width;
        let outer = self.outer();
        let inner = outer.iter().rev().map(|o| w - o).collect();
        let rows = self.rows.iter().rev().map(|r| r.iter().rev().map(|a| k + 1 - a).collect()).collect();
        SkewTableau { rect: self.rect, inner, rows }
    }

    /// Reflection in the main diagonal into the transposed rectangle.
    pub fn transpose(&self) -> SkewTableau {
        let rect = self.rect.transpose();
        let shape = self.shape().transpose();
        let mut t = SkewTableau::empty(&shape);
        for (r, c, a) in self.cells() {
            t.rows[c][r - t.inner[c]] = a;
        }
        SkewTableau { rect, inner: t.inner, rows: t.rows }
    }

    /// Semistandard with Yamanouchi row word.
    pub fn is_lr(&self) -> bool {
        self.is_semistandard() && self.row_word().is_yamanouchi()
    }

    /// Semistandard with opposite Yamanouchi row word over `[d]`.
    pub fn is_opposite_lr(&self) -> bool {
        self.is_semistandard()
            && self.max_letter() as usize <= self.rect.d
            && self.row_word().with_alphabet(self.rect.d as u32).map_or(false, |w| w.is_opposite_yamanouchi())
    }

    /// `(inner, content, complement of outer)`.
    pub fn boundary(&self) -> Result<Boundary> {
        let content = self.content();
        let mut nu = content.clone();
        while nu.len() > self.rect.d && nu.last() == Some(&0) {
            nu.pop();
        }
        let nu = Partition::new(&nu, self.rect).map_err(|e| Error::NotLr(format!("content {content:?}: {e}")))?;
        Ok(Boundary { mu: self.inner_partition(), nu, lam: self.outer_partition().complement() })
    }

    /// Boundary of an LR tableau; errors on anything else.
    pub fn lr_boundary(&self) -> Result<Boundary> {
        if !self.is_lr() {
            return Err(Error::NotLr(format!("row word {} is not Yamanouchi or filling not semistandard", self.row_word())));
        }
        self.boundary()
    }

    pub fn to_json(&self) -> TableauJson {
        TableauJson {
            n: self.rect.n(),
            d: self.rect.d,
            inner: self.inner.clone(),
            outer: self.outer(),
            rows: self.rows.clone(),
        }
    }

    pub fn from_json(j: &TableauJson) -> Result<SkewTableau> {
        let rect = Rect::from_n_d(j.n, j.d)?;
        if j.outer.len() != j.d {
            return Err(Error::Parse(format!("outer must have {} entries", j.d)));
        }
        for r in 0..j.d {
            let len = j.rows.get(r).map_or(0, |x| x.len());
            if j.inner.get(r).map(|i| i + len) != Some(j.outer[r]) {
                return Err(Error::Parse(format!("row {} length disagrees with inner/outer", r + 1)));
            }
        }
        SkewTableau::new(rect, j.inner.clone(), j.rows.clone())
    }

    /// French-convention diagram, top row first; `.` marks cells of the inner shape.
    pub fn render(&self) -> String {
        let wd = self.max_letter().max(1).to_string().len();
        let mut out = String::new();
        for r in (0..self.rect.d).rev() {
            let mut line: Vec<String> = vec![format!("{:>wd$}", ".", wd = wd); self.inner[r]];
            line.extend(self.rows[r].iter().map(|a| format!("{a:>wd$}")));
            out.push_str(line.join(" ").trim_end());
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for SkewTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Interchange form of a tableau; rows listed bottom to top.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableauJson {
    pub n: usize,
    pub d: usize,
    pub inner: Vec<usize>,
    pub outer: Vec<usize>,
    pub rows: Vec<Vec<u32>>,
}

/// Tableau from `(inner offset, entries)` rows listed bottom to top; example helper.
pub fn tableau(d: usize, width: usize, rows: &[(usize, &[u32])]) -> SkewTableau {
    let rect = Rect::new(d, width).expect("non-empty rectangle");
    let inner = rows.iter().map(|r| r.0).collect();
    let body = rows.iter().map(|r| r.1.to_vec()).collect();
    SkewTableau::new(rect, inner, body).expect("well-formed example tableau")
}
