//! Partitions in a rectangle, their 01-words, and the shape maps
//! complement, transpose, rotate and rotate-transpose.

use std::fmt;

use crate::{Error, Result};

/// The ambient `d × width` rectangle `D`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rect {
    pub d: usize,
    pub width: usize,
}

impl Rect {
    pub fn new(d: usize, width: usize) -> Result<Self> {
        if d == 0 || width == 0 {
            return Err(Error::Shape(format!("rectangle {d}x{width} must be non-empty")));
        }
        Ok(Rect { d, width })
    }

    /// Rectangle with `d` rows inside a word of length `n`.
    pub fn from_n_d(n: usize, d: usize) -> Result<Self> {
        if d == 0 || d >= n {
            return Err(Error::Shape(format!("need 0 < d < n, got n={n}, d={d}")));
        }
        Rect::new(d, n - d)
    }

    pub fn n(&self) -> usize {
        self.d + self.width
    }

    pub fn transpose(&self) -> Rect {
        Rect { d: self.width, width: self.d }
    }

    pub fn area(&self) -> usize {
        self.d * self.width
    }
}

/// A 01-word of length `n`. Zeros are horizontal steps, ones vertical steps.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryWord {
    bits: Vec<u8>,
}

impl BinaryWord {
    pub fn new(bits: Vec<u8>) -> Result<Self> {
        if bits.iter().any(|&b| b > 1) {
            return Err(Error::Parse("01-word may only contain 0 and 1".into()));
        }
        Ok(BinaryWord { bits })
    }

    pub fn parse(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                _ => Err(Error::Parse(format!("bad 01-word character {c:?} in {s:?}"))),
            })
            .collect::<Result<Vec<u8>>>()?;
        BinaryWord::new(bits)
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b == 1).count()
    }

    pub fn zeros(&self) -> usize {
        self.len() - self.ones()
    }

    pub fn reverse(&self) -> BinaryWord {
        BinaryWord { bits: self.bits.iter().rev().copied().collect() }
    }

    pub fn swap(&self) -> BinaryWord {
        BinaryWord { bits: self.bits.iter().map(|b| 1 - b).collect() }
    }

    /// All words of length `n` with `d` ones, in lexicographic order.
    pub fn all(n: usize, d: usize) -> Vec<BinaryWord> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(n);
        fn rec(n: usize, ones: usize, cur: &mut Vec<u8>, out: &mut Vec<BinaryWord>) {
            let left = n - cur.len();
            if left == 0 {
                out.push(BinaryWord { bits: cur.clone() });
                return;
            }
            if left > ones {
                cur.push(0);
                rec(n, ones, cur, out);
                cur.pop();
            }
            if ones > 0 {
                cur.push(1);
                rec(n, ones - 1, cur, out);
                cur.pop();
            }
        }
        if d <= n {
            rec(n, d, &mut cur, &mut out);
        }
        out
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.bits {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

/// A partition stored zero-padded to the rectangle height.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    rect: Rect,
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: &[usize], rect: Rect) -> Result<Self> {
        let mut padded: Vec<usize> = parts.to_vec();
        while padded.len() > rect.d && padded.last() == Some(&0) {
            padded.pop();
        }
        if padded.len() > rect.d {
            return Err(Error::Shape(format!("{parts:?} has more than {} parts", rect.d)));
        }
        padded.resize(rect.d, 0);
        if padded.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Shape(format!("{parts:?} is not weakly decreasing")));
        }
        if padded[0] > rect.width {
            return Err(Error::Shape(format!("{parts:?} does not fit in width {}", rect.width)));
        }
        Ok(Partition { rect, parts: padded })
    }

    pub fn empty(rect: Rect) -> Self {
        Partition { rect, parts: vec![0; rect.d] }
    }

    pub fn full(rect: Rect) -> Self {
        Partition { rect, parts: vec![rect.width; rect.d] }
    }

    pub fn rect(&self) -> Rect {
        self.rect
    }

    /// Parts padded with zeros to length `d`.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Part `i` (0-based), zero beyond the rectangle.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn trimmed(&self) -> &[usize] {
        let len = self.parts.iter().rposition(|&p| p > 0).map_or(0, |i| i + 1);
        &self.parts[..len]
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts[0] == 0
    }

    /// Boundary path read from the lower-right corner of `D` to the upper-left.
    pub fn to_word(&self) -> BinaryWord {
        let mut bits = Vec::with_capacity(self.rect.n());
        let mut x = self.rect.width;
        for &p in &self.parts {
            bits.extend(std::iter::repeat(0).take(x - p));
            bits.push(1);
            x = p;
        }
        bits.extend(std::iter::repeat(0).take(x));
        BinaryWord { bits }
    }

    /// Inverse of [`Partition::to_word`]; the rectangle is read off the word.
    pub fn from_word(word: &BinaryWord) -> Result<Self> {
        let rect = Rect::new(word.ones(), word.zeros())?;
        let mut x = rect.width;
        let mut parts = Vec::with_capacity(rect.d);
        for &b in word.bits() {
            if b == 0 {
                x -= 1;
            } else {
                parts.push(x);
            }
        }
        Ok(Partition { rect, parts })
    }

    pub fn complement(&self) -> Partition {
        let w = self.rect.width;
        Partition { rect: self.rect, parts: self.parts.iter().rev().map(|p| w - p).collect() }
    }

    /// Conjugate partition in the transposed rectangle.
    pub fn transpose(&self) -> Partition {
        let rect = self.rect.transpose();
        let mut parts = vec![0; rect.d];
        for &p in &self.parts {
            for part in parts.iter_mut().take(p) {
                *part += 1;
            }
        }
        Partition { rect, parts }
    }

    pub fn contains(&self, other: &Partition) -> bool {
        self.rect == other.rect && self.parts.iter().zip(&other.parts).all(|(a, b)| a >= b)
    }

    /// Accepts `"4210"`, `"(10,7,3)"` or `"w:0010010101"`.
    pub fn parse(text: &str, rect: Rect) -> Result<Partition> {
        let text = text.trim();
        if let Some(w) = text.strip_prefix("w:") {
            let p = Partition::from_word(&BinaryWord::parse(w)?)?;
            if p.rect != rect {
                return Err(Error::Parse(format!(
                    "word {w} lives in a {}x{} box, expected {}x{}",
                    p.rect.d, p.rect.width, rect.d, rect.width
                )));
            }
            return Ok(p);
        }
        let parts: Vec<usize> = if let Some(inner) = text.strip_prefix('(').and_then(|t| t.strip_suffix(')')) {
            if inner.trim().is_empty() {
                Vec::new()
            } else {
                inner
                    .split(',')
                    .map(|s| s.trim().parse::<usize>().map_err(|e| Error::Parse(format!("{text:?}: {e}"))))
                    .collect::<Result<_>>()?
            }
        } else {
            text.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|v| v as usize)
                        .ok_or_else(|| Error::Parse(format!("bad partition character {c:?} in {text:?}")))
                })
                .collect::<Result<_>>()?
        };
        Partition::new(&parts, rect)
    }
}

impl fmt::Display for Partition {
    /// Zero-padded digit string when every part is below 10, else a parenthesised list.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.iter().all(|&p| p < 10) {
            for p in &self.parts {
                write!(f, "{p}")?;
            }
            Ok(())
        } else {
            let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
            write!(f, "({})", s.join(","))
        }
    }
}

/// A skew shape `outer/inner` inside a common rectangle.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    pub outer: Partition,
    pub inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::Shape(format!("{inner} is not contained in {outer}")));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(p: Partition) -> Self {
        let inner = Partition::empty(p.rect());
        SkewShape { outer: p, inner }
    }

    pub fn rect(&self) -> Rect {
        self.outer.rect()
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn row_len(&self, r: usize) -> usize {
        self.outer.part(r) - self.inner.part(r)
    }

    /// Cells `(row, col)`, 0-based, rows bottom to top.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut v = Vec::with_capacity(self.size());
        for r in 0..self.rect().d {
            for c in self.inner.part(r)..self.outer.part(r) {
                v.push((r, c));
            }
        }
        v
    }

    pub fn transpose(&self) -> SkewShape {
        SkewShape { outer: self.outer.transpose(), inner: self.inner.transpose() }
    }

    /// Rotation by π inside `D`: `(λ/μ)^• = μ^∨/λ^∨`.
    pub fn rotate(&self) -> SkewShape {
        SkewShape { outer: self.inner.complement(), inner: self.outer.complement() }
    }

    /// Reflection in the anti-diagonal, landing in the transposed rectangle.
    pub fn rotate_transpose(&self) -> SkewShape {
        self.rotate().transpose()
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}
