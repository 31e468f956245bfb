//! Jeu de taquin, the Burge correspondence, Knuth classes and tableau switching.

use crate::shapes::Rect;
use crate::tableaux::{SkewTableau, Word};
use crate::{Error, Result};

/// Dense working copy of a tableau used by the slides.
struct Grid {
    rect: Rect,
    inner: Vec<usize>,
    outer: Vec<usize>,
    cells: Vec<u32>,
}

impl Grid {
    fn new(t: &SkewTableau) -> Grid {
        let rect = t.rect();
        let mut cells = vec![0; rect.d * rect.width];
        for (r, c, a) in t.cells() {
            cells[r * rect.width + c] = a;
        }
        Grid { rect, inner: t.inner().to_vec(), outer: t.outer(), cells }
    }

    fn at(&self, r: usize, c: usize) -> u32 {
        self.cells[r * self.rect.width + c]
    }

    fn set(&mut self, r: usize, c: usize, a: u32) {
        self.cells[r * self.rect.width + c] = a;
    }

    fn filled(&self, r: usize, c: usize) -> bool {
        r < self.rect.d && c < self.rect.width && self.inner[r] <= c && c < self.outer[r]
    }

    fn is_inside_corner(&self, r: usize, c: usize) -> bool {
        r < self.rect.d && c + 1 == self.inner[r] && (r + 1 == self.rect.d || self.inner[r + 1] <= c)
    }

    fn is_outside_corner(&self, r: usize, c: usize) -> bool {
        r < self.rect.d && c < self.rect.width && c == self.outer[r] && (r == 0 || self.outer[r - 1] > c)
    }

    /// Slides the hole at inside corner `(r, c)` out through the outer boundary; ties go north.
    fn contract(&mut self, mut r: usize, mut c: usize) {
        let r0 = r;
        loop {
            let right = self.filled(r, c + 1).then(|| self.at(r, c + 1));
            let above = self.filled(r + 1, c).then(|| self.at(r + 1, c));
            match (right, above) {
                (Some(x), Some(y)) if x < y => {
                    self.set(r, c, x);
                    c += 1;
                }
                (_, Some(y)) => {
                    self.set(r, c, y);
                    r += 1;
                }
                (Some(x), None) => {
                    self.set(r, c, x);
                    c += 1;
                }
                (None, None) => break,
            }
        }
        self.set(r, c, 0);
        self.inner[r0] -= 1;
        self.outer[r] -= 1;
    }

    /// Slides the hole at outside corner `(r, c)` in through the inner boundary; ties go south.
    fn expand(&mut self, mut r: usize, mut c: usize) {
        let r0 = r;
        loop {
            let left = (c > 0 && self.filled(r, c - 1)).then(|| self.at(r, c - 1));
            let below = (r > 0 && self.filled(r - 1, c)).then(|| self.at(r - 1, c));
            match (left, below) {
                (Some(x), Some(y)) if x > y => {
                    self.set(r, c, x);
                    c -= 1;
                }
                (_, Some(y)) => {
                    self.set(r, c, y);
                    r -= 1;
                }
                (Some(x), None) => {
                    self.set(r, c, x);
                    c -= 1;
                }
                (None, None) => break,
            }
        }
        self.set(r, c, 0);
        self.outer[r0] += 1;
        self.inner[r] += 1;
    }

    fn into_tableau(self) -> SkewTableau {
        let w = self.rect.width;
        let rows = (0..self.rect.d).map(|r| self.cells[r * w + self.inner[r]..r * w + self.outer[r]].to_vec()).collect();
        SkewTableau::from_raw(self.rect, self.inner, rows)
    }
}

/// One contracting slide into the inside corner `(row, col)` (0-based).
pub fn contracting_slide(t: &SkewTableau, corner: (usize, usize)) -> Result<SkewTableau> {
    let mut g = Grid::new(t);
    if !g.is_inside_corner(corner.0, corner.1) {
        return Err(Error::Shape(format!("{corner:?} is not an inside corner")));
    }
    g.contract(corner.0, corner.1);
    Ok(g.into_tableau())
}

/// One expanding slide from the outside corner `(row, col)` (0-based).
pub fn expanding_slide(t: &SkewTableau, corner: (usize, usize)) -> Result<SkewTableau> {
    let mut g = Grid::new(t);
    if !g.is_outside_corner(corner.0, corner.1) {
        return Err(Error::Shape(format!("{corner:?} is not an outside corner")));
    }
    g.expand(corner.0, corner.1);
    Ok(g.into_tableau())
}

/// Order in which inside corners are chosen during rectification.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CornerPolicy {
    /// Leftmost column first (the top corner).
    Leftmost,
    /// Rightmost column first (the bottom corner).
    Rightmost,
}

pub fn rectify(t: &SkewTableau) -> SkewTableau {
    rectify_with(t, CornerPolicy::Leftmost)
}

pub fn rectify_with(t: &SkewTableau, policy: CornerPolicy) -> SkewTableau {
    let mut g = Grid::new(t);
    loop {
        let corner = match policy {
            CornerPolicy::Leftmost => (0..g.rect.d).rev().find(|&r| g.inner[r] > 0),
            CornerPolicy::Rightmost => {
                (0..g.rect.d).find(|&r| g.inner[r] > 0 && (r + 1 == g.rect.d || g.inner[r + 1] < g.inner[r]))
            }
        };
        match corner {
            Some(r) => {
                let c = g.inner[r] - 1;
                g.contract(r, c);
            }
            None => return g.into_tableau(),
        }
    }
}

/// Antinormal form: slides everything into the upper-right corner of `D`.
pub fn arectify(t: &SkewTableau) -> SkewTableau {
    let mut g = Grid::new(t);
    let w = g.rect.width;
    while let Some(r) = (0..g.rect.d).find(|&r| g.outer[r] < w) {
        let c = g.outer[r];
        g.expand(r, c);
    }
    g.into_tableau()
}

/// A pair of straight tableaux `(P, Q)` of equal shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableauPair {
    pub p: SkewTableau,
    pub q: SkewTableau,
}

/// Two-line array: top weakly increasing, bottom weakly decreasing under equal tops.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BurgeArray {
    pub top: Vec<u32>,
    pub bottom: Vec<u32>,
}

impl BurgeArray {
    pub fn new(top: Vec<u32>, bottom: Vec<u32>) -> Result<Self> {
        if top.len() != bottom.len() {
            return Err(Error::Mismatch("biword rows differ in length".into()));
        }
        for k in 1..top.len() {
            if top[k - 1] > top[k] || (top[k - 1] == top[k] && bottom[k - 1] < bottom[k]) {
                return Err(Error::Tableau(format!("biletter {} is out of Burge order", k + 1)));
            }
        }
        Ok(BurgeArray { top, bottom })
    }

    /// Sorts arbitrary biletters into Burge order.
    pub fn from_biletters(mut pairs: Vec<(u32, u32)>) -> BurgeArray {
        pairs.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
        BurgeArray { top: pairs.iter().map(|p| p.0).collect(), bottom: pairs.iter().map(|p| p.1).collect() }
    }
}

/// Column insertion of `x`; returns the new cell.
fn column_insert(rows: &mut Vec<Vec<u32>>, mut x: u32) -> (usize, usize) {
    let mut j = 0;
    'columns: loop {
        let mut r = 0;
        while r < rows.len() && rows[r].len() > j {
            if rows[r][j] >= x {
                std::mem::swap(&mut x, &mut rows[r][j]);
                j += 1;
                continue 'columns;
            }
            r += 1;
        }
        if r == rows.len() {
            rows.push(Vec::new());
        }
        debug_assert_eq!(rows[r].len(), j);
        rows[r].push(x);
        return (r, j);
    }
}

fn straight_in(rect: Rect, rows: Vec<Vec<u32>>) -> Result<SkewTableau> {
    if rows.len() > rect.d {
        return Err(Error::Shape(format!("{} rows do not fit in {} rows", rows.len(), rect.d)));
    }
    let mut rows = rows;
    rows.resize(rect.d, Vec::new());
    SkewTableau::new(rect, vec![0; rect.d], rows)
}

/// Raw insertion and recording rows for a biword.
fn insert_raw(top: &[u32], bottom: &[u32]) -> (Vec<Vec<u32>>, Vec<Vec<u32>>) {
    let mut p: Vec<Vec<u32>> = Vec::new();
    let mut q: Vec<Vec<u32>> = Vec::new();
    for (&a, &b) in top.iter().zip(bottom) {
        let (r, _) = column_insert(&mut p, b);
        if r == q.len() {
            q.push(Vec::new());
        }
        q[r].push(a);
    }
    (p, q)
}

/// Burge correspondence of a word; `Q` is standard.
pub fn burge_insert(w: &Word, rect: Rect) -> Result<TableauPair> {
    let top: Vec<u32> = (1..=w.len() as u32).collect();
    let (p, q) = insert_raw(&top, w.letters());
    Ok(TableauPair { p: straight_in(rect, p)?, q: straight_in(rect, q)? })
}

pub fn burge_insert_biword(b: &BurgeArray, rect: Rect) -> Result<TableauPair> {
    let (p, q) = insert_raw(&b.top, &b.bottom);
    Ok(TableauPair { p: straight_in(rect, p)?, q: straight_in(rect, q)? })
}

/// Inverse of [`burge_insert_biword`].
pub fn burge_inverse(pair: &TableauPair) -> Result<BurgeArray> {
    let (p, q) = (&pair.p, &pair.q);
    if !p.is_straight() || !q.is_straight() || p.outer() != q.outer() {
        return Err(Error::Mismatch("P and Q must be straight tableaux of one shape".into()));
    }
    let mut pr: Vec<Vec<u32>> = p.rows().to_vec();
    let mut qr: Vec<Vec<u32>> = q.rows().to_vec();
    let n = p.size();
    let (mut top, mut bottom) = (Vec::with_capacity(n), Vec::with_capacity(n));
    for _ in 0..n {
        // rightmost cell holding the largest recording entry
        let mut best: Option<(u32, usize, usize)> = None;
        for (r, row) in qr.iter().enumerate() {
            if let Some(&a) = row.last() {
                let c = row.len() - 1;
                if best.map_or(true, |(b, _, bc)| a > b || (a == b && c > bc)) {
                    best = Some((a, r, c));
                }
            }
        }
        let (a, r, c) = best.expect("non-empty");
        if r + 1 < qr.len() && qr[r + 1].len() > c {
            return Err(Error::Tableau("recording tableau is not semistandard".into()));
        }
        qr[r].pop();
        let mut z = pr[r].pop().expect("same shape");
        for j in (0..c).rev() {
            let mut best_r = None;
            for (rr, row) in pr.iter().enumerate() {
                if row.len() > j && row[j] <= z {
                    best_r = Some(rr);
                }
            }
            let rr = best_r.ok_or_else(|| Error::Tableau("insertion tableau is not semistandard".into()))?;
            std::mem::swap(&mut z, &mut pr[rr][j]);
        }
        top.push(a);
        bottom.push(z);
    }
    top.reverse();
    bottom.reverse();
    Ok(BurgeArray { top, bottom })
}

/// Insertion tableau rows of a word, without a rectangle.
pub fn p_rows(w: &[u32]) -> Vec<Vec<u32>> {
    let top: Vec<u32> = (1..=w.len() as u32).collect();
    insert_raw(&top, w).0
}

/// Recording tableau rows of a word, without a rectangle.
pub fn q_rows(w: &[u32]) -> Vec<Vec<u32>> {
    let top: Vec<u32> = (1..=w.len() as u32).collect();
    insert_raw(&top, w).1
}

/// `U(w)`: the standard tableau with `k` in row `w_k`.
pub fn u_of_w(w: &Word, rect: Rect) -> Result<SkewTableau> {
    if !w.is_yamanouchi() {
        return Err(Error::NotLr(format!("{w} is not a Yamanouchi word")));
    }
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for (k, &a) in w.letters().iter().enumerate() {
        let i = a as usize - 1;
        if rows.len() <= i {
            rows.resize(i + 1, Vec::new());
        }
        rows[i].push(k as u32 + 1);
    }
    straight_in(rect, rows)
}

pub fn knuth_equivalent(t1: &SkewTableau, t2: &SkewTableau) -> bool {
    p_rows(t1.row_word().letters()) == p_rows(t2.row_word().letters())
}

/// Same shape and equal recording tableaux of the row words.
pub fn dual_knuth_equivalent(t1: &SkewTableau, t2: &SkewTableau) -> bool {
    t1.rect() == t2.rect()
        && t1.shape() == t2.shape()
        && q_rows(t1.row_word().letters()) == q_rows(t2.row_word().letters())
}

/// Which monotonicity a filling obeys.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strictness {
    /// Semistandard: rows weak, columns strict.
    Column,
    /// Transpose-semistandard: rows strict, columns weak.
    Row,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Cell {
    Empty,
    S(u32),
    T(u32),
}

/// Switches two semistandard tableaux where `t` extends `s`. Returns `(t', s')`
/// with `t'` Knuth equivalent to `t` placed inside and `s'` Knuth equivalent to `s`.
pub fn switch(s: &SkewTableau, t: &SkewTableau) -> Result<(SkewTableau, SkewTableau)> {
    switch_hybrid(s, Strictness::Column, t, Strictness::Column)
}

/// Switching where either member may be row strict.
pub fn switch_hybrid(
    s: &SkewTableau,
    s_kind: Strictness,
    t: &SkewTableau,
    t_kind: Strictness,
) -> Result<(SkewTableau, SkewTableau)> {
    if s.rect() != t.rect() || s.outer() != t.inner() {
        return Err(Error::Shape("second tableau does not extend the first".into()));
    }
    let rect = s.rect();
    let (d, w) = (rect.d, rect.width);
    let mut g = vec![Cell::Empty; d * w];
    for (r, c, a) in s.cells() {
        g[r * w + c] = Cell::S(a);
    }
    for (r, c, a) in t.cells() {
        g[r * w + c] = Cell::T(a);
    }
    let mut order: Vec<(usize, usize, u32)> = s.cells().collect();
    match s_kind {
        Strictness::Column => order.sort_by(|a, b| b.2.cmp(&a.2).then(b.1.cmp(&a.1))),
        Strictness::Row => order.sort_by(|a, b| b.2.cmp(&a.2).then(b.0.cmp(&a.0))),
    }
    let t_at = |g: &[Cell], r: usize, c: usize| -> Option<u32> {
        if r < d && c < w {
            if let Cell::T(a) = g[r * w + c] {
                return Some(a);
            }
        }
        None
    };
    for (mut r, mut c, a) in order {
        loop {
            let right = t_at(&g, r, c + 1);
            let above = t_at(&g, r + 1, c);
            let go_right = match (right, above) {
                (Some(x), Some(y)) => match t_kind {
                    Strictness::Column => x < y,
                    Strictness::Row => x <= y,
                },
                (Some(_), None) => true,
                (None, Some(_)) => false,
                (None, None) => break,
            };
            if go_right {
                g[r * w + c] = g[r * w + c + 1];
                c += 1;
            } else {
                g[r * w + c] = g[(r + 1) * w + c];
                r += 1;
            }
        }
        g[r * w + c] = Cell::S(a);
    }
    let mut t_rows = vec![Vec::new(); d];
    let mut s_rows = vec![Vec::new(); d];
    let mut mid = vec![0; d];
    for r in 0..d {
        let mut c = s.inner()[r];
        while c < w {
            match g[r * w + c] {
                Cell::T(a) => t_rows[r].push(a),
                _ => break,
            }
            c += 1;
        }
        mid[r] = c;
        while c < w {
            match g[r * w + c] {
                Cell::S(a) => s_rows[r].push(a),
                _ => break,
            }
            c += 1;
        }
        if c != t.outer()[r] {
            return Err(Error::Invariant(format!("switching left row {} fragmented", r + 1)));
        }
    }
    let t_new = SkewTableau::new(rect, s.inner().to_vec(), t_rows)?;
    let s_new = SkewTableau::new(rect, mid, s_rows)?;
    Ok((t_new, s_new))
}

/// The tableau dual Knuth equivalent to `dual_rep` and Knuth equivalent to the
/// straight tableau `knuth_rep`, by two switches.
pub fn haiman_intersection(dual_rep: &SkewTableau, knuth_rep: &SkewTableau) -> Result<SkewTableau> {
    let inner = dual_rep.inner_partition();
    let w = SkewTableau::yamanouchi(&inner);
    let (qn, z) = switch(&w, dual_rep)?;
    if !knuth_rep.is_straight() || knuth_rep.rect() != qn.rect() || knuth_rep.outer() != qn.outer() {
        return Err(Error::Shape("the two classes rectify to different shapes".into()));
    }
    let (_, x) = switch(knuth_rep, &z)?;
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::Partition;
    use crate::tableaux::tableau;
    use proptest::prelude::*;

    fn yam_t() -> SkewTableau {
        tableau(3, 6, &[(2, &[1, 1, 1, 1]), (1, &[1, 2, 2]), (0, &[2, 3, 3])])
    }

    fn r36() -> Rect {
        Rect::new(3, 6).unwrap()
    }

    #[test]
    fn rectify_lr_gives_yamanouchi() {
        let t = yam_t();
        let nu = Partition::new(&[5, 3, 2], r36()).unwrap();
        assert_eq!(rectify(&t), SkewTableau::yamanouchi(&nu));
        assert_eq!(rectify_with(&t, CornerPolicy::Rightmost), SkewTableau::yamanouchi(&nu));
        let y = SkewTableau::yamanouchi(&nu);
        assert_eq!(rectify(&y), y);
    }

    #[test]
    fn arectify_yamanouchi_is_antinormal_yamanouchi() {
        for parts in [[5usize, 3, 2], [4, 2, 1], [6, 6, 0], [1, 0, 0]] {
            let nu = Partition::new(&parts, r36()).unwrap();
            assert_eq!(arectify(&SkewTableau::yamanouchi(&nu)), SkewTableau::antinormal_yamanouchi(&nu));
        }
    }

    #[test]
    fn one_box_slides() {
        let t = tableau(2, 2, &[(1, &[1]), (0, &[])]);
        let s = contracting_slide(&t, (0, 0)).unwrap();
        assert_eq!(s.inner(), &[0, 0]);
        assert_eq!(s.rows()[0], vec![1]);
        assert_eq!(expanding_slide(&s, (0, 1)).unwrap(), t);
        assert!(contracting_slide(&t, (1, 0)).is_err());
    }

    #[test]
    fn burge_example() {
        let b = BurgeArray::new(
            Word::parse("1111222333", 3).unwrap().letters().to_vec(),
            Word::parse("1111221332", 3).unwrap().letters().to_vec(),
        )
        .unwrap();
        let pair = burge_insert_biword(&b, r36()).unwrap();
        let nu = Partition::new(&[5, 3, 2], r36()).unwrap();
        assert_eq!(pair.p, SkewTableau::yamanouchi(&nu));
        let g = tableau(3, 6, &[(0, &[1, 1, 1, 1, 2]), (0, &[2, 2, 3]), (0, &[3, 3])]);
        assert_eq!(pair.q, g);
        assert_eq!(burge_inverse(&pair).unwrap(), b);

        let b2 = BurgeArray::new(
            Word::parse("1111122233", 3).unwrap().letters().to_vec(),
            Word::parse("2111132233", 3).unwrap().letters().to_vec(),
        )
        .unwrap();
        let pair2 = burge_insert_biword(&b2, r36()).unwrap();
        assert_eq!(pair2.p, g);
        assert_eq!(pair2.q, SkewTableau::yamanouchi(&nu));
        assert_eq!(burge_inverse(&pair2).unwrap(), b2);
    }

    #[test]
    fn single_letter_insert() {
        let r = Rect::new(1, 1).unwrap();
        let pair = burge_insert(&Word::parse("1", 1).unwrap(), r).unwrap();
        assert_eq!(pair.p.rows(), &[vec![1]]);
        assert_eq!(pair.q.rows(), &[vec![1]]);
    }

    #[test]
    fn u_of_w_examples() {
        let u = u_of_w(&Word::parse("1111221332", 3).unwrap(), r36()).unwrap();
        assert_eq!(u.rows(), &[vec![1, 2, 3, 4, 7], vec![5, 6, 10], vec![8, 9]]);
        let u2 = u_of_w(&Word::parse("1111223", 3).unwrap(), Rect::new(3, 4).unwrap()).unwrap();
        assert_eq!(u2.rows(), &[vec![1, 2, 3, 4], vec![5, 6], vec![7]]);
        assert!(u_of_w(&Word::parse("21", 2).unwrap(), r36()).is_err());
        // U(w) is the standardized recording tableau of the LR biword
        let b = BurgeArray::new(
            Word::parse("1111222333", 3).unwrap().letters().to_vec(),
            Word::parse("1111221332", 3).unwrap().letters().to_vec(),
        )
        .unwrap();
        assert_eq!(burge_insert_biword(&b, r36()).unwrap().q.standardize(), u);
    }

    #[test]
    fn knuth_classes() {
        let t = yam_t();
        assert!(knuth_equivalent(&t, &rectify(&t)));
        let a = tableau(2, 2, &[(0, &[1, 1]), (0, &[2])]);
        let b = tableau(2, 2, &[(0, &[1, 2]), (0, &[2])]);
        assert!(dual_knuth_equivalent(&a, &b));
        assert!(!knuth_equivalent(&a, &b));
    }

    #[test]
    fn switch_with_empty() {
        let t = yam_t();
        let inner = Partition::empty(r36());
        let e = SkewTableau::yamanouchi(&inner);
        let rect_t = rectify(&t);
        let (a, b) = switch(&e, &rect_t).unwrap();
        assert_eq!(a, rect_t);
        assert_eq!(b.size(), 0);
    }

    #[test]
    fn switch_rectifies_against_yamanouchi() {
        let t = yam_t();
        let mu = t.inner_partition();
        let (a, b) = switch(&SkewTableau::yamanouchi(&mu), &t).unwrap();
        assert_eq!(a, rectify(&t));
        assert!(knuth_equivalent(&b, &SkewTableau::yamanouchi(&mu)));
        let (s2, t2) = switch(&a, &b).unwrap();
        assert_eq!(s2, SkewTableau::yamanouchi(&mu));
        assert_eq!(t2, t);
    }

    #[test]
    fn haiman_trivial_case() {
        let t = yam_t();
        assert_eq!(haiman_intersection(&t, &rectify(&t)).unwrap(), t);
        let wrong = SkewTableau::yamanouchi(&Partition::new(&[4, 3, 3], r36()).unwrap());
        assert!(haiman_intersection(&t, &wrong).is_err());
    }

    fn arb_straight() -> impl Strategy<Value = SkewTableau> {
        proptest::collection::vec(1u32..=3, 0..9).prop_map(|w| {
            let rect = Rect::new(3, 9).unwrap();
            straight_in(rect, p_rows(&w)).unwrap()
        })
    }

    proptest! {
        #[test]
        fn burge_round_trip(w in proptest::collection::vec(1u32..=3, 0..9)) {
            let rect = Rect::new(3, 9).unwrap();
            let word = Word::new(w.clone(), 3).unwrap();
            let pair = burge_insert(&word, rect).unwrap();
            prop_assert!(pair.p.is_semistandard());
            prop_assert!(pair.q.is_standard());
            let back = burge_inverse(&pair).unwrap();
            prop_assert_eq!(back.bottom, w);
        }

        #[test]
        fn slides_invert(t in arb_straight(), k in 0usize..20) {
            // expand at some outside corner, then contract at the freed inside corner
            let outer = t.outer();
            let corners: Vec<usize> = (0..3).filter(|&r| outer[r] < 9 && (r == 0 || outer[r - 1] > outer[r])).collect();
            let r = corners[k % corners.len()];
            let e = expanding_slide(&t, (r, outer[r])).unwrap();
            let ir = (0..3).find(|&r| e.inner()[r] > 0).unwrap();
            prop_assert_eq!(contracting_slide(&e, (ir, e.inner()[ir] - 1)).unwrap(), t);
        }
    }
}
