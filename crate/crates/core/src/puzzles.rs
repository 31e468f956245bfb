//! Knutson-Tao-Woodward puzzles on the side-`n` triangular lattice.
//!
//! Lattice points are `(x, y)` with `x + y ≤ n`; `(0,0)` is the lower-left corner,
//! `(n,0)` the lower-right and `(0,n)` the apex. Edges come in three classes:
//! `H(x,y)` joins `(x,y)-(x+1,y)`, `L(x,y)` joins `(x,y)-(x,y+1)` and `R(x,y)`
//! joins `(x+1,y)-(x,y+1)`. Labels are 0, 1 and 2, where 2 marks the diagonal
//! inside a rhombus. The upward cell `U(x,y)` reads `(L, R, H)` and the downward
//! cell `D(x,y)` reads `(H(x,y+1), L(x+1,y), R(x,y))`, both clockwise.
//!
//! The boundary is read clockwise from the lower-left corner: `μ` up the left
//! side, `ν` down the right side and `λ` leftwards along the bottom.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::shapes::{BinaryWord, Partition, Rect};
use crate::tableaux::{Boundary, SkewTableau};
use crate::{Error, Result};

const PIECES: [[u8; 3]; 5] = [[0, 0, 0], [1, 1, 1], [0, 2, 1], [2, 1, 0], [1, 0, 2]];

fn is_piece(t: [u8; 3]) -> bool {
    PIECES.contains(&t)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Puzzle {
    n: usize,
    h: Vec<Vec<u8>>,
    l: Vec<Vec<u8>>,
    r: Vec<Vec<u8>>,
}

/// Boundary words of a puzzle, each with the same number of ones.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PuzzleBoundary {
    pub nw: BinaryWord,
    pub ne: BinaryWord,
    pub south: BinaryWord,
}

impl PuzzleBoundary {
    pub fn new(nw: BinaryWord, ne: BinaryWord, south: BinaryWord) -> Result<Self> {
        if nw.len() != ne.len() || ne.len() != south.len() || nw.is_empty() {
            return Err(Error::Puzzle("boundary words must share a positive length".into()));
        }
        if nw.ones() != ne.ones() || ne.ones() != south.ones() {
            return Err(Error::Puzzle("boundary words must have equally many ones".into()));
        }
        Ok(PuzzleBoundary { nw, ne, south })
    }

    pub fn from_boundary(b: &Boundary) -> PuzzleBoundary {
        PuzzleBoundary { nw: b.mu.to_word(), ne: b.nu.to_word(), south: b.lam.to_word() }
    }

    pub fn to_boundary(&self) -> Result<Boundary> {
        Boundary::new(
            Partition::from_word(&self.nw)?,
            Partition::from_word(&self.ne)?,
            Partition::from_word(&self.south)?,
        )
    }

    pub fn n(&self) -> usize {
        self.nw.len()
    }

    pub fn d(&self) -> usize {
        self.nw.ones()
    }
}

fn grid(n: usize, fill: u8) -> Vec<Vec<u8>> {
    (0..n).map(|y| vec![fill; n - y]).collect()
}

impl Puzzle {
    pub fn n(&self) -> usize {
        self.n
    }

    /// `H(x,y)`.
    pub fn h(&self, x: usize, y: usize) -> u8 {
        self.h[y][x]
    }

    /// `L(x,y)`.
    pub fn l(&self, x: usize, y: usize) -> u8 {
        self.l[y][x]
    }

    /// `R(x,y)`.
    pub fn r(&self, x: usize, y: usize) -> u8 {
        self.r[y][x]
    }

    fn up(&self, x: usize, y: usize) -> [u8; 3] {
        [self.l[y][x], self.r[y][x], self.h[y][x]]
    }

    fn down(&self, x: usize, y: usize) -> [u8; 3] {
        [self.h[y + 1][x], self.l[y][x + 1], self.r[y][x]]
    }

    pub fn boundary(&self) -> PuzzleBoundary {
        let n = self.n;
        let word = |f: &dyn Fn(usize) -> u8| BinaryWord::new((1..=n).map(f).collect()).ok();
        PuzzleBoundary {
            nw: word(&|k| self.l[k - 1][0]).unwrap_or_else(|| BinaryWord::new(vec![]).unwrap()),
            ne: word(&|k| self.r[n - k][k - 1]).unwrap_or_else(|| BinaryWord::new(vec![]).unwrap()),
            south: word(&|k| self.h[0][n - k]).unwrap_or_else(|| BinaryWord::new(vec![]).unwrap()),
        }
    }

    fn boundary_labels(&self) -> impl Iterator<Item = u8> + '_ {
        let n = self.n;
        (1..=n).flat_map(move |k| [self.l[k - 1][0], self.r[n - k][k - 1], self.h[0][n - k]])
    }

    /// Every unit cell is a piece and no rhombus diagonal sits on the boundary.
    pub fn is_valid(&self) -> bool {
        let n = self.n;
        for y in 0..n {
            for x in 0..n - y {
                if !is_piece(self.up(x, y)) {
                    return false;
                }
                if x + 1 < n - y && !is_piece(self.down(x, y)) {
                    return false;
                }
            }
        }
        self.boundary_labels().all(|v| v < 2)
    }

    /// Upward and downward cells with all edges equal to `label`.
    pub fn count_triangles(&self, label: u8) -> usize {
        let n = self.n;
        let mut c = 0;
        for y in 0..n {
            for x in 0..n - y {
                c += (self.up(x, y) == [label; 3]) as usize;
                if x + 1 < n - y {
                    c += (self.down(x, y) == [label; 3]) as usize;
                }
            }
        }
        c
    }

    fn empty(n: usize) -> Puzzle {
        Puzzle { n, h: grid(n, 0), l: grid(n, 0), r: grid(n, 0) }
    }

    fn with_boundary(b: &PuzzleBoundary) -> Puzzle {
        let n = b.n();
        let mut p = Puzzle::empty(n);
        for k in 1..=n {
            p.l[k - 1][0] = b.nw.bits()[k - 1];
            p.r[n - k][k - 1] = b.ne.bits()[k - 1];
            p.h[0][n - k] = b.south.bits()[k - 1];
        }
        p
    }

    fn label_of(&self, e: Edge) -> u8 {
        match e.kind {
            EdgeKind::H => self.h[e.y][e.x],
            EdgeKind::L => self.l[e.y][e.x],
            EdgeKind::R => self.r[e.y][e.x],
        }
    }

    fn set(&mut self, e: Edge, v: u8) {
        match e.kind {
            EdgeKind::H => self.h[e.y][e.x] = v,
            EdgeKind::L => self.l[e.y][e.x] = v,
            EdgeKind::R => self.r[e.y][e.x] = v,
        }
    }

    fn edges(n: usize) -> impl Iterator<Item = Edge> {
        (0..n).flat_map(move |y| {
            (0..n - y).flat_map(move |x| [EdgeKind::H, EdgeKind::L, EdgeKind::R].map(|kind| Edge { kind, x, y }))
        })
    }

    fn transform(&self, f: impl Fn((usize, usize)) -> (usize, usize), swap: bool) -> Puzzle {
        let mut out = Puzzle::empty(self.n);
        for e in Puzzle::edges(self.n) {
            let (p, q) = e.ends();
            let mut v = self.label_of(e);
            if swap && v < 2 {
                v = 1 - v;
            }
            out.set(Edge::between(f(p), f(q)), v);
        }
        out
    }

    pub fn to_json(&self) -> PuzzleJson {
        let b = self.boundary();
        PuzzleJson {
            n: self.n,
            boundary: [b.nw.to_string(), b.ne.to_string(), b.south.to_string()],
            h: self.h.clone(),
            l: self.l.clone(),
            r: self.r.clone(),
        }
    }

    pub fn from_json(j: &PuzzleJson) -> Result<Puzzle> {
        let p = Puzzle { n: j.n, h: j.h.clone(), l: j.l.clone(), r: j.r.clone() };
        let shape_ok = |g: &Vec<Vec<u8>>| g.len() == j.n && g.iter().enumerate().all(|(y, row)| row.len() == j.n - y);
        if !(shape_ok(&p.h) && shape_ok(&p.l) && shape_ok(&p.r)) {
            return Err(Error::Parse("edge arrays do not match the side length".into()));
        }
        Ok(p)
    }

    /// `n`, the three boundary words, then per row `y` the `H`, `L` and `R` labels.
    pub fn to_text(&self) -> String {
        let b = self.boundary();
        let mut s = format!("{}\n{}\n{}\n{}\n", self.n, b.nw, b.ne, b.south);
        let digits = |v: &[u8]| v.iter().map(|d| char::from(b'0' + d)).collect::<String>();
        for y in 0..self.n {
            let _ = writeln!(s, "{} {} {}", digits(&self.h[y]), digits(&self.l[y]), digits(&self.r[y]));
        }
        s
    }

    pub fn parse_text(text: &str) -> Result<Puzzle> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let mut next = || lines.next().ok_or_else(|| Error::Parse("puzzle text ended early".into()));
        let n: usize = next()?.parse().map_err(|_| Error::Parse("first line must be n".into()))?;
        let b = PuzzleBoundary::new(BinaryWord::parse(next()?)?, BinaryWord::parse(next()?)?, BinaryWord::parse(next()?)?)?;
        if b.n() != n {
            return Err(Error::Parse("boundary words must have length n".into()));
        }
        let mut p = Puzzle::empty(n);
        for y in 0..n {
            let parts: Vec<&str> = next()?.split_whitespace().collect();
            if parts.len() != 3 {
                return Err(Error::Parse(format!("row {y} needs H, L and R labels")));
            }
            for (k, part) in parts.iter().enumerate() {
                let v: Vec<u8> = part
                    .bytes()
                    .map(|c| match c {
                        b'0'..=b'2' => Ok(c - b'0'),
                        _ => Err(Error::Parse(format!("bad label '{}'", c as char))),
                    })
                    .collect::<Result<_>>()?;
                if v.len() != n - y {
                    return Err(Error::Parse(format!("row {y} must have {} labels per class", n - y)));
                }
                match k {
                    0 => p.h[y] = v,
                    1 => p.l[y] = v,
                    _ => p.r[y] = v,
                }
            }
        }
        if p.boundary() != b {
            return Err(Error::Parse("edge labels disagree with the boundary words".into()));
        }
        Ok(p)
    }

    /// SVG drawing: 1-triangles blue, 0-triangles pink, rhombus halves white.
    pub fn to_svg(&self) -> String {
        let n = self.n;
        let s = 40.0;
        let h = s * 3f64.sqrt() / 2.0;
        let pt = |x: usize, y: usize| (10.0 + s * (x as f64 + y as f64 / 2.0), 10.0 + h * (n - y) as f64);
        let mut out = format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{:.0}\" height=\"{:.0}\">\n",
            s * n as f64 + 20.0,
            h * n as f64 + 20.0
        );
        let mut tri = |a: (f64, f64), b: (f64, f64), c: (f64, f64), t: [u8; 3]| {
            let fill = match t {
                [1, 1, 1] => "#7fa7e0",
                [0, 0, 0] => "#f2b8c6",
                _ => "#ffffff",
            };
            let _ = writeln!(
                out,
                "<polygon points=\"{:.1},{:.1} {:.1},{:.1} {:.1},{:.1}\" fill=\"{fill}\" stroke=\"#ccc\"/>",
                a.0, a.1, b.0, b.1, c.0, c.1
            );
        };
        for y in 0..n {
            for x in 0..n - y {
                tri(pt(x, y), pt(x + 1, y), pt(x, y + 1), self.up(x, y));
                if x + 1 < n - y {
                    tri(pt(x + 1, y), pt(x, y + 1), pt(x + 1, y + 1), self.down(x, y));
                }
            }
        }
        for e in Puzzle::edges(n) {
            let v = self.label_of(e);
            if v == 2 {
                continue;
            }
            let (p, q) = e.ends();
            let (a, b) = (pt(p.0, p.1), pt(q.0, q.1));
            let color = if v == 1 { "#1f4e9c" } else { "#b03a5b" };
            let _ = writeln!(
                out,
                "<line x1=\"{:.1}\" y1=\"{:.1}\" x2=\"{:.1}\" y2=\"{:.1}\" stroke=\"{color}\" stroke-width=\"2\"/>",
                a.0, a.1, b.0, b.1
            );
        }
        out.push_str("</svg>\n");
        out
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PuzzleJson {
    pub n: usize,
    pub boundary: [String; 3],
    pub h: Vec<Vec<u8>>,
    pub l: Vec<Vec<u8>>,
    pub r: Vec<Vec<u8>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum EdgeKind {
    H,
    L,
    R,
}

#[derive(Clone, Copy, Debug)]
struct Edge {
    kind: EdgeKind,
    x: usize,
    y: usize,
}

impl Edge {
    fn ends(self) -> ((usize, usize), (usize, usize)) {
        let (x, y) = (self.x, self.y);
        match self.kind {
            EdgeKind::H => ((x, y), (x + 1, y)),
            EdgeKind::L => ((x, y), (x, y + 1)),
            EdgeKind::R => ((x + 1, y), (x, y + 1)),
        }
    }

    fn between(p: (usize, usize), q: (usize, usize)) -> Edge {
        let ((a, b), (c, d)) = if p <= q { (p, q) } else { (q, p) };
        if b == d {
            Edge { kind: EdgeKind::H, x: a, y: b }
        } else if a == c {
            Edge { kind: EdgeKind::L, x: a, y: b }
        } else {
            Edge { kind: EdgeKind::R, x: a, y: d }
        }
    }
}

/// All puzzles with the given boundary, in lexicographic order of their labels.
pub fn enumerate_puzzles(b: &PuzzleBoundary) -> Vec<Puzzle> {
    let mut p = Puzzle::with_boundary(b);
    let mut out = Vec::new();
    fill_row(&mut p, 0, &mut out);
    out.sort();
    out
}

fn fill_row(p: &mut Puzzle, y: usize, out: &mut Vec<Puzzle>) {
    if y == p.n {
        out.push(p.clone());
        return;
    }
    fill_up(p, 0, y, out);
}

fn fill_up(p: &mut Puzzle, x: usize, y: usize, out: &mut Vec<Puzzle>) {
    let m = p.n - y;
    if x == m - 1 {
        if is_piece(p.up(x, y)) {
            fill_row(p, y + 1, out);
        }
        return;
    }
    for r in 0..3 {
        if is_piece([p.l[y][x], r, p.h[y][x]]) {
            p.r[y][x] = r;
            fill_down(p, x, y, out);
        }
    }
}

fn fill_down(p: &mut Puzzle, x: usize, y: usize, out: &mut Vec<Puzzle>) {
    for piece in PIECES {
        if piece[2] == p.r[y][x] {
            p.h[y + 1][x] = piece[0];
            p.l[y][x + 1] = piece[1];
            fill_up(p, x + 1, y, out);
        }
    }
}

pub fn puzzle_count(b: &PuzzleBoundary) -> usize {
    enumerate_puzzles(b).len()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Duality {
    Spade,
    Club,
    Lozenge,
}

/// Diagonal reflection with every 0 and 1 swapped.
pub fn duality(p: &Puzzle, which: Duality) -> Puzzle {
    let n = p.n;
    match which {
        Duality::Spade => p.transform(|(x, y)| (n - x - y, y), true),
        Duality::Lozenge => p.transform(|(x, y)| (y, x), true),
        Duality::Club => p.transform(|(x, y)| (x, n - x - y), true),
    }
}

/// Clockwise rotation by `thirds · 2π/3`.
pub fn rotation(p: &Puzzle, thirds: usize) -> Puzzle {
    let n = p.n;
    match thirds % 3 {
        0 => p.clone(),
        1 => p.transform(|(x, y)| (y, n - x - y), false),
        _ => p.transform(|(x, y)| (n - x - y, x), false),
    }
}

/// Labels of the left-leaned rhombi: the `k`-th rhombus met along the 0-path
/// leaving the bottom gets label `k`. Indexed `[y][x]` by the downward cell.
fn rhombus_labels(p: &Puzzle) -> Result<Vec<Vec<u32>>> {
    let n = p.n;
    let bad = |what: &str, t: [u8; 3]| Error::Puzzle(format!("0-path meets {what} cell {t:?}"));
    let mut lab = vec![vec![0u32; n]; n];
    for x0 in 0..n {
        if p.h[0][x0] != 0 {
            continue;
        }
        let mut rhombi = Vec::new();
        let (mut x, mut y, mut up) = (x0, 0, true);
        let end = loop {
            if up {
                match p.up(x, y) {
                    [0, 0, 0] => {
                        if x == 0 {
                            break y;
                        }
                        x -= 1;
                        up = false;
                    }
                    [2, 1, 0] => {
                        rhombi.push((x - 1, y));
                        x -= 1;
                        y += 1;
                    }
                    t => return Err(bad("upward", t)),
                }
            } else {
                match p.down(x, y) {
                    [0, 0, 0] => {
                        y += 1;
                        up = true;
                    }
                    [1, 0, 2] => {
                        if x == 0 {
                            break y;
                        }
                        x -= 1;
                    }
                    t => return Err(bad("downward", t)),
                }
            }
        };
        let ones_below = (0..end).filter(|&yy| p.l[yy][0] == 1).count();
        if rhombi.len() != ones_below {
            return Err(Error::Puzzle("0-path crosses the wrong number of rhombi".into()));
        }
        for (k, (rx, ry)) in rhombi.into_iter().enumerate() {
            lab[ry][rx] = k as u32 + 1;
        }
    }
    Ok(lab)
}

/// Tao's bijection: walk the 1-paths from the bottom doors, right to left, and record
/// the labels of the rhombi crossed. The result lies in `LR(λ, μ, ν)`.
pub fn tao_to_tableau(p: &Puzzle) -> Result<SkewTableau> {
    if !p.is_valid() {
        return Err(Error::Puzzle("not a valid puzzle".into()));
    }
    let n = p.n;
    let lab = rhombus_labels(p)?;
    let pb = p.boundary();
    let d = pb.d();
    if d == 0 || d == n {
        return Err(Error::Puzzle("boundary words must mix 0s and 1s".into()));
    }
    let bad = |t: [u8; 3]| Error::Puzzle(format!("1-path meets cell {t:?}"));
    let mut rows = Vec::with_capacity(d);
    for x0 in (0..n).rev().filter(|&x| p.h[0][x] == 1) {
        let mut row = Vec::new();
        let (mut x, mut y, mut up) = (x0, 0, true);
        loop {
            if up {
                match p.up(x, y) {
                    [1, 1, 1] => {
                        if x + y == n - 1 {
                            break;
                        }
                        up = false;
                    }
                    [0, 2, 1] => y += 1,
                    t => return Err(bad(t)),
                }
            } else {
                match p.down(x, y) {
                    [1, 1, 1] => {
                        y += 1;
                        up = true;
                    }
                    [0, 2, 1] => {
                        row.push(lab[y][x]);
                        if x + 1 + y == n - 1 {
                            break;
                        }
                        x += 1;
                    }
                    t => return Err(bad(t)),
                }
            }
        }
        rows.push(row);
    }
    let b = pb.to_boundary()?;
    let t = SkewTableau::new(Rect::from_n_d(n, d)?, b.lam.parts().to_vec(), rows)?;
    let expect = Boundary::new(b.lam.clone(), b.mu.clone(), b.nu.clone())?;
    match t.lr_boundary() {
        Ok(got) if got == expect => Ok(t),
        _ => Err(Error::Invariant("trail walk did not produce an LR tableau".into())),
    }
}

type Info = Option<(usize, usize)>;

/// Depth-first reconstruction of the puzzle whose trail walk yields `rows`.
///
/// Along each horizontal line every edge carries a tag: a 1-edge knows which row of
/// the tableau its path spells and how much of it is consumed; a 0-edge knows how
/// many rhombi its path has crossed and how many it must cross in total.
struct Inverse<'a> {
    p: Puzzle,
    rows: &'a [Vec<u32>],
}

impl Inverse<'_> {
    fn row(&mut self, y: usize, info: Vec<Info>) -> bool {
        if y == self.p.n {
            return true;
        }
        let lab = self.p.h[y].clone();
        let mut ninfo = Vec::with_capacity(lab.len());
        self.cell(y, 0, None, &lab, &info, &mut ninfo)
    }

    fn cell(&mut self, y: usize, x: usize, carry: Info, lab: &[u8], inf: &[Info], ninfo: &mut Vec<Info>) -> bool {
        let m = self.p.n - y;
        let lx = self.p.l[y][x];
        let (rx, carry) = match (lx, lab[x]) {
            (0, 0) => {
                if x == 0 && inf[x].map_or(true, |(c, b)| c != b) {
                    return false;
                }
                (0, None)
            }
            (1, 1) => (1, inf[x]),
            (0, 1) => (2, carry),
            (2, 0) => (1, carry),
            (1, 2) => (0, None),
            _ => return false,
        };
        if x == m - 1 {
            if self.p.r[y][x] != rx {
                return false;
            }
            if rx == 1 {
                match carry {
                    Some((rr, pos)) if self.rows.get(rr).map(Vec::len) == Some(pos) => {}
                    _ => return false,
                }
            }
            let next = std::mem::take(ninfo);
            let ok = self.row(y + 1, next.clone());
            *ninfo = next;
            return ok;
        }
        self.p.r[y][x] = rx;
        let descend = |this: &mut Self, top: u8, side: u8, carry: Info, tag: Info, ninfo: &mut Vec<Info>| {
            this.p.h[y + 1][x] = top;
            this.p.l[y][x + 1] = side;
            ninfo.push(tag);
            let ok = this.cell(y, x + 1, carry, lab, inf, ninfo);
            ninfo.pop();
            ok
        };
        match rx {
            2 => descend(self, 1, 0, carry, inf[x], ninfo),
            1 => {
                let Some((rr, pos)) = carry else { return false };
                if lab[x + 1] == 0 {
                    let Some((c, b)) = inf[x + 1] else { return false };
                    if c + 1 > b || self.rows.get(rr).and_then(|r| r.get(pos)) != Some(&(c as u32 + 1)) {
                        return false;
                    }
                    descend(self, 0, 2, Some((rr, pos + 1)), Some((c + 1, b)), ninfo)
                } else {
                    descend(self, 1, 1, None, Some((rr, pos)), ninfo)
                }
            }
            _ => {
                let source = {
                    let mut z = x + 1;
                    while z < m && lab[z] == 1 {
                        z += 1;
                    }
                    z
                };
                let (try_up, try_flat) = match lab[x + 1] {
                    0 => (false, true),
                    2 => (true, false),
                    _ => (true, !(source == m || lab[source] == 2)),
                };
                if try_up && descend(self, 2, 1, None, None, ninfo) {
                    return true;
                }
                try_flat && descend(self, 0, 0, None, inf.get(source).copied().flatten(), ninfo)
            }
        }
    }
}

/// Inverse of [`tao_to_tableau`]: the puzzle with boundary `(ν, λ, μ)` for `T ∈ LR(μ, ν, λ)`.
pub fn tao_from_tableau(t: &SkewTableau) -> Result<Puzzle> {
    let b = t.lr_boundary()?;
    let pb = PuzzleBoundary::new(b.nu.to_word(), b.lam.to_word(), b.mu.to_word())?;
    let n = pb.n();
    let mut p = Puzzle::with_boundary(&pb);
    let mut info: Vec<Info> = vec![None; n];
    let mut door = 0;
    for x in (0..n).rev() {
        if p.h[0][x] == 1 {
            info[x] = Some((door, 0));
            door += 1;
        }
    }
    // a 0-door must cross as many rhombi as there are 1s below where its path exits
    let mut caps = Vec::new();
    let mut ones = 0;
    for y in 0..n {
        if p.l[y][0] == 1 {
            ones += 1;
        } else {
            caps.push(ones);
        }
    }
    for (k, x) in (0..n).filter(|&x| p.h[0][x] == 0).enumerate() {
        info[x] = Some((0, caps[k]));
    }
    let rows = t.rows().to_vec();
    let mut inv = Inverse { p, rows: &rows };
    if !inv.row(0, info) {
        return Err(Error::Puzzle("no puzzle reproduces this tableau".into()));
    }
    p = inv.p;
    if !p.is_valid() || &tao_to_tableau(&p)? != t {
        return Err(Error::Invariant("reconstructed puzzle does not walk back to the tableau".into()));
    }
    Ok(p)
}
