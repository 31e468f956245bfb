//! Right and left companion tableaux (Gelfand-Tsetlin patterns) of LR tableaux,
//! their validity tests, companion-level symmetries and hives.
//!
//! A right companion `G = ι(T)` has shape `ν` and row `i` lists the rows of `T`
//! holding the letter `i`. A left companion `L` has shape `μ` and records the
//! shapes occupied by entries `< r` in rows `r..d` of `T`.

use serde::{Deserialize, Serialize};

use crate::crystal::{epsilon, evacuate, phi, sigma};
use crate::shapes::{Partition, Rect};
use crate::symmetries::GroupElement;
use crate::tableaux::{Boundary, RecordingMatrix, SkewTableau, TableauJson, Word};
use crate::{Error, Result};

/// A companion pattern, stored as a straight tableau.
pub type GtPattern = SkewTableau;

/// Triangular view: entry `k` is the shape `ν^(k+1)` of the entries `≤ k + 1`.
pub fn gt_rows(g: &GtPattern) -> Vec<Vec<usize>> {
    let d = g.d();
    (1..=d as u32)
        .map(|k| {
            g.rows()
                .iter()
                .take(k as usize)
                .map(|row| row.iter().filter(|&&a| a <= k).count())
                .collect()
        })
        .collect()
}

fn straight_from_matrix(m: &RecordingMatrix, rect: Rect) -> Result<SkewTableau> {
    SkewTableau::from_matrix(m, rect, &vec![0; rect.d])
}

/// `ι(T)`: the tableau whose recording matrix is the transpose of that of `T`.
pub fn right_companion(t: &SkewTableau) -> Result<GtPattern> {
    t.lr_boundary()?;
    straight_from_matrix(&t.recording_matrix().transpose(), t.rect())
}

/// `ι^{-1}`: rebuilds `T` from `G` and its boundary.
pub fn from_right_companion(g: &GtPattern, b: &Boundary) -> Result<SkewTableau> {
    let m = g.recording_matrix().transpose();
    if m.rows() != b.rect().d {
        return Err(Error::Mismatch("companion alphabet exceeds the rectangle".into()));
    }
    let t = SkewTableau::from_matrix(&m, b.rect(), b.mu.parts())?;
    match t.lr_boundary() {
        Ok(got) if &got == b => Ok(t),
        _ => Err(Error::NotLr(format!("not a right companion for {b}"))),
    }
}

/// Companion of an opposite LR tableau: the right-justified antitableau whose row `i`
/// lists the rows of `T` holding `i`.
pub fn opposite_companion(t: &SkewTableau) -> Result<SkewTableau> {
    if !t.is_opposite_lr() {
        return Err(Error::NotLr("expected an opposite LR tableau".into()));
    }
    let m = t.recording_matrix().transpose();
    let d = t.d();
    let rows: Vec<Vec<u32>> = (0..d)
        .map(|i| (0..d).flat_map(|p| std::iter::repeat(p as u32 + 1).take(m.get(i, p))).collect())
        .collect();
    let width = rows.iter().map(Vec::len).max().unwrap_or(0).max(1);
    let inner = rows.iter().map(|r| width - r.len()).collect();
    SkewTableau::new(Rect::new(d, width)?, inner, rows)
}

/// Left companion `L` of shape `μ` and weight `rev(outer - ν)`.
pub fn left_companion(t: &SkewTableau) -> Result<GtPattern> {
    let b = t.lr_boundary()?;
    let d = t.d();
    let m = t.recording_matrix();
    let mu = b.mu.parts();
    // shapes[k-1] has k parts: entries < r in rows r..d, r = d - k + 1
    let shapes: Vec<Vec<usize>> = (1..=d)
        .map(|k| {
            let r = d - k + 1;
            (0..k)
                .map(|p| {
                    let row = r + p - 1;
                    mu[row] + (0..r - 1).map(|j| m.get(row, j)).sum::<usize>()
                })
                .collect()
        })
        .collect();
    tableau_from_shapes(&shapes, t.rect())
}

/// The tableau with `k` in row `p` exactly `shapes[k-1][p] - shapes[k-2][p]` times.
fn tableau_from_shapes(shapes: &[Vec<usize>], rect: Rect) -> Result<SkewTableau> {
    let d = rect.d;
    let mut rows = vec![Vec::new(); d];
    for (k, s) in shapes.iter().enumerate() {
        for (p, &len) in s.iter().enumerate() {
            let prev = if p < k { shapes[k - 1][p] } else { 0 };
            if len < prev {
                return Err(Error::Invariant("companion shapes are not nested".into()));
            }
            rows[p].extend(std::iter::repeat(k as u32 + 1).take(len - prev));
        }
    }
    SkewTableau::semistandard(rect, vec![0; d], rows)
}

/// Rebuilds `T` from its left companion and boundary.
pub fn from_left_companion(l: &GtPattern, b: &Boundary) -> Result<SkewTableau> {
    let rect = b.rect();
    let d = rect.d;
    let gt = gt_rows(l);
    let mu = b.mu.parts();
    let outer = b.lam.complement();
    // below[p][r] = number of entries < r+1 in row p (0-based), read from the shape with r+1..d
    let mut m = vec![vec![0usize; d]; d];
    for p in 0..d {
        let mut prev = 0;
        for r in 0..=p {
            let k = d - r; // shapes[k-1] covers rows r..d
            let below = gt[k - 1][p - r] - mu[p];
            if r > 0 {
                m[p][r - 1] = below
                    .checked_sub(prev)
                    .ok_or_else(|| Error::NotLr("left companion is not nested".into()))?;
            }
            prev = below;
        }
        let len = outer.part(p) - mu[p];
        m[p][p] = len.checked_sub(prev).ok_or_else(|| Error::NotLr("left companion overflows".into()))?;
    }
    let t = SkewTableau::from_matrix(&RecordingMatrix::new(m)?, rect, mu)?;
    match t.lr_boundary() {
        Ok(got) if &got == b => Ok(t),
        _ => Err(Error::NotLr(format!("not a left companion for {b}"))),
    }
}

fn straight_with_letters_le_d(g: &GtPattern) -> bool {
    g.is_straight() && g.is_semistandard() && g.max_letter() as usize <= g.d()
}

/// Outcome of the two independent membership tests.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RouteCheck {
    pub crystal: bool,
    pub inequalities: bool,
}

/// `μ + weight(G)` as a partition in the rectangle, if it is one.
fn right_outer(g: &GtPattern, mu: &Partition) -> Option<Partition> {
    let c = g.content();
    let parts: Vec<usize> = (0..g.d()).map(|i| mu.part(i) + c.get(i).copied().unwrap_or(0)).collect();
    Partition::new(&parts, g.rect()).ok()
}

pub fn right_routes(g: &GtPattern, mu: &Partition) -> RouteCheck {
    let d = g.d();
    if !straight_with_letters_le_d(g) || mu.rect() != g.rect() || right_outer(g, mu).is_none() {
        return RouteCheck { crystal: false, inequalities: false };
    }
    let word = g.row_word().with_alphabet(d as u32).expect("letters within [d]");
    let crystal = (1..d).all(|i| epsilon(&word, i as u32) <= mu.part(i - 1) - mu.part(i));
    // #j in rows 1..i minus #(j-1) in rows 1..i-1 is at most μ_{j-1} - μ_j
    let count = |letter: u32, rows: usize| -> usize {
        g.rows().iter().take(rows).map(|r| r.iter().filter(|&&a| a == letter).count()).sum()
    };
    let inequalities = (2..=d).all(|j| {
        (1..j).all(|i| count(j as u32, i) <= count(j as u32 - 1, i - 1) + mu.part(j - 2) - mu.part(j - 1))
    });
    RouteCheck { crystal, inequalities }
}

/// Whether `G` is a right companion over inner shape `μ`; errors if the two routes disagree.
pub fn validate_right(g: &GtPattern, mu: &Partition) -> Result<bool> {
    let r = right_routes(g, mu);
    if r.crystal != r.inequalities {
        return Err(Error::Invariant(format!("right companion routes disagree: {r:?}")));
    }
    Ok(r.crystal)
}

/// `ν + rev(weight(L))` as a partition in the rectangle, if it is one.
fn left_outer(l: &GtPattern, nu: &Partition) -> Option<Partition> {
    let c = l.content();
    let d = l.d();
    let parts: Vec<usize> = (0..d).map(|i| nu.part(i) + c.get(d - 1 - i).copied().unwrap_or(0)).collect();
    Partition::new(&parts, l.rect()).ok()
}

pub fn left_routes(l: &GtPattern, nu: &Partition) -> RouteCheck {
    let d = l.d();
    if !straight_with_letters_le_d(l) || nu.rect() != l.rect() || left_outer(l, nu).is_none() {
        return RouteCheck { crystal: false, inequalities: false };
    }
    let word = l.row_word().with_alphabet(d as u32).expect("letters within [d]");
    let crystal = (1..d).all(|i| phi(&word, (d - i) as u32) <= nu.part(i - 1) - nu.part(i));
    let gt = gt_rows(l);
    // μ^(m)_k with μ^(0) empty and out-of-range parts zero
    let part = |m: usize, k: usize| -> i64 {
        if m == 0 || k == 0 || k > m {
            0
        } else {
            gt[m - 1][k - 1] as i64
        }
    };
    let inequalities = (1..d).all(|i| {
        (i + 1..=d).all(|j| {
            let first: i64 = (j..=d).map(|k| part(d - i, k - i) - part(d - i + 1, k - i + 1)).sum();
            let second: i64 = (j + 1..=d)
                .map(|k| if d > i { part(d - i - 1, k - i - 1) - part(d - i, k - i) } else { 0 })
                .sum();
            first - second <= nu.part(i - 1) as i64 - nu.part(i) as i64
        })
    });
    RouteCheck { crystal, inequalities }
}

/// Whether `L` is a left companion over `ν`; errors if the two routes disagree.
pub fn validate_left(l: &GtPattern, nu: &Partition) -> Result<bool> {
    let r = left_routes(l, nu);
    if r.crystal != r.inequalities {
        return Err(Error::Invariant(format!("left companion routes disagree: {r:?}")));
    }
    Ok(r.crystal)
}

/// A right companion together with the boundary of the LR tableau it encodes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Companion {
    pub tableau: GtPattern,
    pub boundary: Boundary,
}

impl Companion {
    pub fn of(t: &SkewTableau) -> Result<Companion> {
        Ok(Companion { tableau: right_companion(t)?, boundary: t.lr_boundary()? })
    }

    pub fn to_lr(&self) -> Result<SkewTableau> {
        from_right_companion(&self.tableau, &self.boundary)
    }

    pub fn is_valid(&self) -> Result<bool> {
        if self.tableau.outer() != self.boundary.nu.parts() {
            return Ok(false);
        }
        let ok = validate_right(&self.tableau, &self.boundary.mu)?;
        Ok(ok && right_outer(&self.tableau, &self.boundary.mu) == Some(self.boundary.lam.complement()))
    }
}

/// `G^♦`: transpose, then renumber the strip of each letter `i` bottom to top from `λ_{d-i+1} + 1`.
pub fn companion_lozenge(c: &Companion) -> Result<Companion> {
    let g = &c.tableau;
    let b = &c.boundary;
    let (d, w) = (b.rect().d, b.rect().width);
    let outer = b.lam.complement();
    let gt = g.transpose();
    let mut next: Vec<u32> = (0..d).map(|i| (w - outer.part(i)) as u32).collect();
    let rows: Vec<Vec<u32>> = gt
        .rows()
        .iter()
        .map(|row| {
            row.iter()
                .map(|&a| {
                    next[a as usize - 1] += 1;
                    next[a as usize - 1]
                })
                .collect()
        })
        .collect();
    let tableau = SkewTableau::new(gt.rect(), gt.inner().to_vec(), rows)?;
    Ok(Companion { tableau, boundary: GroupElement::Lozenge.boundary_image(b) })
}

/// `G^♠`: recover the column sets of `T`, complement them, and renumber by vertical strips.
pub fn companion_spade(c: &Companion) -> Result<Companion> {
    let g = &c.tableau;
    let b = &c.boundary;
    let (d, w) = (b.rect().d, b.rect().width);
    let mu = b.mu.parts();
    let outer_t = b.lam.complement().transpose();
    // columns[r] = columns of T that hold the letter r + 1
    let mut used = vec![0usize; d];
    let mut rows_of_column: Vec<Vec<usize>> = vec![Vec::new(); w];
    for (r, row) in g.rows().iter().enumerate() {
        for &p in row.iter().rev() {
            let p = p as usize - 1;
            used[p] += 1;
            let col = mu[p] + used[p];
            if col > w {
                return Err(Error::NotLr("companion weight overflows the rectangle".into()));
            }
            rows_of_column[col - 1].push(r + 1);
        }
    }
    let nu = b.nu.parts();
    let mut next: Vec<u32> = nu.iter().map(|&x| x as u32).collect();
    let mut rows: Vec<Vec<u32>> = Vec::with_capacity(w);
    for k in 0..w {
        let have = &rows_of_column[k];
        let free: Vec<usize> = (1..=outer_t.part(k)).rev().filter(|r| !have.contains(r)).collect();
        rows.push(free.iter().map(|&j| j as u32).collect());
    }
    // renumber the vertical strip of each j bottom to top from ν_j + 1
    for row in rows.iter_mut() {
        for a in row.iter_mut() {
            let j = *a as usize - 1;
            next[j] += 1;
            *a = next[j];
        }
        row.sort_unstable();
    }
    let tableau = SkewTableau::new(b.rect().transpose(), vec![0; w], rows)?;
    Ok(Companion { tableau, boundary: GroupElement::Spade.boundary_image(b) })
}

/// Evacuation of the companion; it encodes `ρ(T)`.
pub fn companion_evac(c: &Companion) -> Result<Companion> {
    Ok(Companion { tableau: evacuate(&c.tableau)?, boundary: GroupElement::Rho.boundary_image(&c.boundary) })
}

/// `θ_i` on a companion recording matrix (rows of `G` by entries of `G`): `ι ∘ σ_i ∘ ι^{-1}`.
pub fn theta(g: &RecordingMatrix, i: u32) -> Result<RecordingMatrix> {
    let d = g.rows() as u32;
    if i == 0 || i >= d {
        return Err(Error::Parse(format!("theta index {i} outside 1..{d}")));
    }
    Ok(reflect(g, |w| sigma(w, i)))
}

/// `θ_0`, the longest-element action; equals the matrix of the antinormal form of `G`.
pub fn theta_zero(g: &RecordingMatrix) -> RecordingMatrix {
    reflect(g, crate::crystal::sigma_zero)
}

fn reflect(g: &RecordingMatrix, f: impl Fn(&Word) -> Word) -> RecordingMatrix {
    let m = g.transpose();
    let d = m.cols();
    let lens = m.row_sums();
    // row word of T: rows bottom to top, each right to left
    let mut letters = Vec::new();
    for row in m.as_rows() {
        for j in (0..d).rev() {
            letters.extend(std::iter::repeat(j as u32 + 1).take(row[j]));
        }
    }
    let word = f(&Word::new(letters, d as u32).expect("letters within [d]"));
    let mut out = vec![vec![0; d]; m.rows()];
    let mut it = word.letters().iter();
    for (p, &len) in lens.iter().enumerate() {
        for _ in 0..len {
            out[p][*it.next().unwrap() as usize - 1] += 1;
        }
    }
    RecordingMatrix::new(out).expect("rectangular").transpose()
}

/// An LR companion pair `(L, G)` with its boundary; this is how hives are represented.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hive {
    pub left: GtPattern,
    pub right: GtPattern,
    pub boundary: Boundary,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HiveJson {
    pub left: TableauJson,
    pub right: TableauJson,
    pub boundary: [String; 3],
}

impl Hive {
    pub fn of(t: &SkewTableau) -> Result<Hive> {
        Ok(Hive { left: left_companion(t)?, right: right_companion(t)?, boundary: t.lr_boundary()? })
    }

    pub fn to_lr(&self) -> Result<SkewTableau> {
        from_right_companion(&self.right, &self.boundary)
    }

    fn right_companion(&self) -> Companion {
        Companion { tableau: self.right.clone(), boundary: self.boundary.clone() }
    }

    fn left_as_companion(&self) -> Companion {
        Companion { tableau: self.left.clone(), boundary: GroupElement::Rot240.boundary_image(&self.boundary) }
    }

    pub fn to_json(&self) -> HiveJson {
        HiveJson { left: self.left.to_json(), right: self.right.to_json(), boundary: self.boundary.to_strings() }
    }

    pub fn from_json(j: &HiveJson) -> Result<Hive> {
        let right = SkewTableau::from_json(&j.right)?;
        let left = SkewTableau::from_json(&j.left)?;
        let boundary = Boundary::parse([&j.boundary[0], &j.boundary[1], &j.boundary[2]], right.rect())?;
        hive_from_pair(left, right, boundary)
    }
}

/// Checks both sides and the pair identity `L = ♦♠ G`.
pub fn hive_from_pair(left: GtPattern, right: GtPattern, boundary: Boundary) -> Result<Hive> {
    let h = Hive { left, right, boundary };
    let g = h.right_companion();
    if !g.is_valid()? {
        return Err(Error::NotLr("right side is not a companion for the boundary".into()));
    }
    if !validate_left(&h.left, &h.boundary.nu)? || h.left.outer() != h.boundary.mu.parts() {
        return Err(Error::NotLr("left side is not a left companion for the boundary".into()));
    }
    let expect = companion_lozenge(&companion_spade(&g)?)?;
    if expect.tableau != h.left {
        return Err(Error::Invariant("pair does not satisfy L = ♦♠G".into()));
    }
    Ok(h)
}

fn pair(left: Companion, right: Companion) -> Hive {
    debug_assert_eq!(left.boundary, GroupElement::Rot240.boundary_image(&right.boundary));
    Hive { left: left.tableau, right: right.tableau, boundary: right.boundary }
}

/// The companion pair of `g(T)` computed from the pair of `T` by companion-level maps.
pub fn symmetry_on_hive(g: GroupElement, h: &Hive) -> Result<Hive> {
    use GroupElement::*;
    let gc = h.right_companion();
    let lc = h.left_as_companion();
    let loz = companion_lozenge;
    let spd = companion_spade;
    let ev = companion_evac;
    Ok(match g {
        Id => h.clone(),
        Spade => pair(loz(&gc)?, spd(&gc)?),
        Lozenge => pair(spd(&lc)?, loz(&gc)?),
        Club => pair(spd(&gc)?, spd(&lc)?),
        Rot240 => pair(spd(&loz(&gc)?)?, lc),
        Rot120 => pair(gc.clone(), spd(&loz(&gc)?)?),
        Rho => {
            let e = ev(&gc)?;
            pair(loz(&spd(&e)?)?, e)
        }
        Rho1 => pair(ev(&gc)?, ev(&lc)?),
        Rho2 => {
            let e = ev(&gc)?;
            pair(ev(&lc)?, loz(&spd(&e)?)?)
        }
        Varrho => pair(loz(&ev(&lc)?)?, loz(&ev(&gc)?)?),
        SpadeRho => {
            let e = ev(&gc)?;
            pair(loz(&e)?, spd(&e)?)
        }
        ClubRho => pair(spd(&ev(&gc)?)?, loz(&ev(&lc)?)?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::tableau;

    fn yam_t() -> SkewTableau {
        tableau(3, 6, &[(2, &[1, 1, 1, 1]), (1, &[1, 2, 2]), (0, &[2, 3, 3])])
    }

    fn e_spade() -> SkewTableau {
        tableau(4, 7, &[(4, &[1, 1, 1]), (2, &[1, 2, 2]), (1, &[2, 2, 3]), (0, &[1, 3])])
    }

    #[test]
    fn companions_of_example() {
        let t = yam_t();
        let g = right_companion(&t).unwrap();
        assert_eq!(g.rows(), &[vec![1, 1, 1, 1, 2], vec![2, 2, 3], vec![3, 3]]);
        let l = left_companion(&t).unwrap();
        assert_eq!(l.rows(), &[vec![1, 2], vec![3], vec![]]);
        assert_eq!(gt_rows(&l), vec![vec![1], vec![2, 0], vec![2, 1, 0]]);
        let b = t.lr_boundary().unwrap();
        assert_eq!(from_right_companion(&g, &b).unwrap(), t);
        assert_eq!(from_left_companion(&l, &b).unwrap(), t);
        assert_eq!(validate_right(&g, &b.mu), Ok(true));
        assert_eq!(validate_left(&l, &b.nu), Ok(true));
        let u = crate::plactic::u_of_w(&t.row_word(), t.rect()).unwrap();
        assert_eq!(g.standardize(), u);
    }

    #[test]
    fn yamanouchi_is_its_own_companion() {
        let rect = Rect::new(3, 5).unwrap();
        let nu = Partition::new(&[4, 2, 1], rect).unwrap();
        let y = SkewTableau::yamanouchi(&nu);
        assert_eq!(right_companion(&y).unwrap(), y);
        assert!(left_companion(&y).unwrap().rows().iter().all(Vec::is_empty));
        assert_eq!(validate_right(&y, &Partition::empty(rect)), Ok(true));
    }

    #[test]
    fn opposite_companion_example() {
        let s = tableau(3, 6, &[(2, &[1, 1, 3, 3]), (1, &[2, 2, 2]), (0, &[3, 3, 3])]);
        let h = opposite_companion(&s).unwrap();
        assert_eq!(h.inner(), &[3, 2, 0]);
        assert_eq!(h.rows(), &[vec![1, 1], vec![2, 2, 2], vec![1, 1, 3, 3, 3]]);
    }

    #[test]
    fn companion_lozenge_example() {
        let t = tableau(3, 4, &[(2, &[1, 1]), (1, &[1, 2, 2]), (0, &[1, 3])]);
        let c = Companion::of(&t).unwrap();
        assert_eq!(c.tableau.rows(), &[vec![1, 1, 2, 3], vec![2, 2], vec![3]]);
        let l = companion_lozenge(&c).unwrap();
        assert_eq!(l.tableau.rows(), &[vec![1, 1, 3], vec![2, 2], vec![3], vec![4]]);
        assert_eq!(l, Companion::of(&crate::symmetries::lozenge(&t).unwrap()).unwrap());
    }

    #[test]
    fn companion_spade_example() {
        let t = e_spade();
        let c = Companion::of(&t).unwrap();
        assert_eq!(c.tableau.rows(), &[vec![1, 1, 1, 2, 4], vec![2, 2, 3, 3], vec![3, 4], vec![]]);
        let s = companion_spade(&c).unwrap();
        assert_eq!(s.tableau.rows()[..4], [vec![1, 3, 5], vec![2, 6], vec![4], vec![7]]);
        assert_eq!(s, Companion::of(&crate::symmetries::spade(&t).unwrap()).unwrap());
        let l = companion_lozenge(&s).unwrap();
        assert_eq!(l.tableau.rows(), &[vec![1, 1, 2, 4], vec![2, 4], vec![3], vec![]]);
        assert_eq!(l.tableau, left_companion(&t).unwrap());
    }

    fn biword_matrix(top: &str, bottom: &str) -> RecordingMatrix {
        let mut m = vec![vec![0; 3]; 3];
        for (a, b) in top.bytes().zip(bottom.bytes()) {
            m[(b - b'1') as usize][(a - b'1') as usize] += 1;
        }
        RecordingMatrix::new(m).unwrap()
    }

    #[test]
    fn theta_ladder() {
        let g = biword_matrix("2111132233", "1111122233");
        assert_eq!(g, right_companion(&yam_t()).unwrap().recording_matrix());
        let t1 = theta(&g, 1).unwrap();
        let t2 = theta(&g, 2).unwrap();
        assert_eq!(t1, biword_matrix("2113221133", "1112222233"));
        assert_eq!(t2, biword_matrix("2111122333", "1111122333"));
        assert_eq!(theta(&t1, 2).unwrap(), biword_matrix("2112233311", "1112233333"));
        assert_eq!(theta(&t2, 1).unwrap(), biword_matrix("1122211333", "1122222333"));
        let t0 = theta_zero(&g);
        assert_eq!(t0, biword_matrix("1122211333", "1122233333"));
        let arect = crate::plactic::arectify(&right_companion(&yam_t()).unwrap());
        assert_eq!(t0, arect.recording_matrix());
        assert_eq!(theta(&t1, 1).unwrap(), g);
    }

    #[test]
    fn hive_example_under_rho1() {
        let t = yam_t();
        let h = Hive::of(&t).unwrap();
        let img = symmetry_on_hive(GroupElement::Rho1, &h).unwrap();
        assert_eq!(img.left, evacuate(&h.right).unwrap());
        assert_eq!(img.right, evacuate(&h.left).unwrap());
        assert_eq!(symmetry_on_hive(GroupElement::Id, &h).unwrap(), h);
        let j = serde_json::to_string(&h.to_json()).unwrap();
        let back: HiveJson = serde_json::from_str(&j).unwrap();
        assert_eq!(Hive::from_json(&back).unwrap(), h);
    }
}
