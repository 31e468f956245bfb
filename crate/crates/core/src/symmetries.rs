//! The twelve bijections between LR sets: the generators `♦` and `♠`, the
//! derived `♣` and rotations, the reversal-based maps and their group structure.

use std::fmt;
use std::str::FromStr;

use crate::crystal::reversal;
use crate::plactic::switch;
use crate::tableaux::{Boundary, SkewTableau, Word};
use crate::{Error, Result};

/// `w^♦` for a Yamanouchi or opposite Yamanouchi word.
///
/// For a Yamanouchi word the `j`-th occurrence of any letter becomes `j`. For an
/// opposite word over `[k]` with `ν_i` copies of `k - i + 1`, the `j`-th
/// occurrence of `k - i + 1` becomes `ν_1 - ν_i + j`.
pub fn lozenge_word(w: &Word) -> Result<Word> {
    let k = w.alphabet() as usize;
    let mut seen = vec![0u32; k + 2];
    if w.is_yamanouchi() {
        let letters = w
            .letters()
            .iter()
            .map(|&a| {
                seen[a as usize] += 1;
                seen[a as usize]
            })
            .collect();
        return Ok(Word::from_letters(letters));
    }
    if w.is_opposite_yamanouchi() {
        let content = w.content();
        let nu1 = content[k - 1] as u32;
        let letters = w
            .letters()
            .iter()
            .map(|&a| {
                seen[a as usize] += 1;
                nu1 - content[a as usize - 1] as u32 + seen[a as usize]
            })
            .collect();
        return Ok(Word::from_letters(letters));
    }
    Err(Error::NotLr(format!("{w} is neither Yamanouchi nor opposite Yamanouchi")))
}

/// `♦` on an LR or opposite LR tableau, computed from the recording matrix.
pub fn lozenge(t: &SkewTableau) -> Result<SkewTableau> {
    if t.is_lr() {
        lozenge_lr(t)
    } else if t.is_opposite_lr() {
        Ok(lozenge_lr(&t.rotate())?.rotate())
    } else {
        Err(Error::NotLr("lozenge needs an LR or opposite LR tableau".into()))
    }
}

/// `♦` by transporting the row word and refilling the rotated transposed shape by columns.
pub fn lozenge_by_word(t: &SkewTableau) -> Result<SkewTableau> {
    if !t.is_semistandard() {
        return Err(Error::NotLr("lozenge needs a semistandard tableau".into()));
    }
    let word = t.row_word().with_alphabet(t.d() as u32)?;
    let image = lozenge_word(&word)?;
    SkewTableau::fill_column_word(&t.shape().rotate_transpose(), image.letters())
}

fn lozenge_lr(t: &SkewTableau) -> Result<SkewTableau> {
    let rect = t.rect();
    let (d, w) = (rect.d, rect.width);
    let m = t.recording_matrix();
    let outer = t.outer();
    let mu = t.inner();
    // suffix[p][i] = a_{p,i} + a_{p,i+1} + ... (0-based p, i)
    let suffix: Vec<Vec<usize>> = (0..d)
        .map(|p| {
            let mut s = vec![0; d + 1];
            for i in (0..d).rev() {
                s[i] = s[i + 1] + m.get(p, i);
            }
            s
        })
        .collect();
    let mut by_letter: Vec<Vec<usize>> = vec![Vec::new(); w + 1];
    for i in 0..d {
        let mut c = 0;
        let mut prev: Option<usize> = None;
        for p in i..d {
            let a = m.get(p, i);
            let tilde = suffix[p][i] + (w - outer[p]);
            let start = tilde - a;
            if prev.is_some_and(|q| start < q) {
                return Err(Error::Invariant(format!("lozenge blocks for letter {} overlap", i + 1)));
            }
            prev = Some(tilde);
            for s in 1..=a {
                by_letter[c + s].push(start + s - 1);
            }
            c += a;
        }
    }
    let mut rows: Vec<Vec<u32>> = vec![Vec::new(); w];
    for (letter, targets) in by_letter.iter().enumerate() {
        for &r in targets {
            rows[r].push(letter as u32);
        }
    }
    let inner: Vec<usize> = (1..=w).map(|a| outer.iter().filter(|&&o| o + a <= w).count()).collect();
    for a in 1..=w {
        let new_outer = mu.iter().filter(|&&x| x + a <= w).count();
        if rows[a - 1].len() + inner[a - 1] != new_outer {
            return Err(Error::Invariant(format!("lozenge row {a} has the wrong length")));
        }
    }
    SkewTableau::new(rect.transpose(), inner, rows)
}

/// Appends `value` at column `col` of output row `row`, insisting rows grow contiguously.
fn place(rows: &mut [Vec<u32>], inner: &[usize], row: usize, col: usize, value: u32) -> Result<()> {
    if inner[row] + rows[row].len() != col {
        return Err(Error::Invariant(format!("output row {} is not contiguous", row + 1)));
    }
    rows[row].push(value);
    Ok(())
}

fn transpose_parts(parts: &[usize], len: usize) -> Vec<usize> {
    (1..=len).map(|c| parts.iter().filter(|&&p| p >= c).count()).collect()
}

/// `♠`: row `r` of the image records, in order, the columns of `T` without a letter `r`.
pub fn spade(t: &SkewTableau) -> Result<SkewTableau> {
    let b = t.lr_boundary()?;
    let rect = t.rect();
    let (d, w) = (rect.d, rect.width);
    let outer = t.outer();
    let nu = b.nu.parts();
    // columns (1-based) holding each letter, ascending
    let mut cols: Vec<Vec<usize>> = vec![Vec::new(); d + 1];
    for r in (0..d).rev() {
        for (k, &a) in t.rows()[r].iter().enumerate() {
            cols[a as usize].push(t.inner()[r] + k + 1);
        }
    }
    let inner = transpose_parts(nu, w);
    let mut rows: Vec<Vec<u32>> = vec![Vec::new(); w];
    for r in 1..=d {
        let mut taken = cols[r].iter().peekable();
        let mut k = 0;
        for c in 1..=outer[r - 1] {
            if taken.peek() == Some(&&c) {
                taken.next();
                continue;
            }
            place(&mut rows, &inner, nu[r - 1] + k, r - 1, c as u32)?;
            k += 1;
        }
        if taken.next().is_some() || k != outer[r - 1] - nu[r - 1] {
            return Err(Error::Invariant(format!("letter {r} sits outside the first {} columns", outer[r - 1])));
        }
    }
    SkewTableau::new(rect.transpose(), inner, rows)
}

/// `♣`: the `k`-th copy of each letter in reading order is sent to column `w - k + 1`.
/// The columns left free in each row are numbered; column `c` of the image lists
/// the numbers that landed in column `c`, bottom to top.
pub fn club(t: &SkewTableau) -> Result<SkewTableau> {
    t.lr_boundary()?;
    let rect = t.rect();
    let (d, w) = (rect.d, rect.width);
    let mu = t.inner();
    let inner = transpose_parts(mu, w);
    let mut occ = vec![0usize; d + 1];
    let mut rows: Vec<Vec<u32>> = vec![Vec::new(); w];
    for r in 0..d {
        let mut targets: Vec<usize> = t.rows()[r]
            .iter()
            .rev()
            .map(|&a| {
                occ[a as usize] += 1;
                w + 1 - occ[a as usize]
            })
            .collect();
        targets.reverse();
        if targets.windows(2).any(|p| p[0] >= p[1]) || targets.first().is_some_and(|&c| c <= mu[r]) {
            return Err(Error::Invariant(format!("club targets in row {} are not increasing", r + 1)));
        }
        let mut hit = targets.iter().peekable();
        let mut k = 0;
        for c in mu[r] + 1..=w {
            if hit.peek() == Some(&&c) {
                hit.next();
                continue;
            }
            k += 1;
            rows[c - 1].push(k);
        }
    }
    SkewTableau::new(rect.transpose(), inner, rows)
}

pub fn rotate120(t: &SkewTableau) -> Result<SkewTableau> {
    spade(&lozenge(t)?)
}

pub fn rotate240(t: &SkewTableau) -> Result<SkewTableau> {
    lozenge(&spade(t)?)
}

/// `ρ = • ∘ e`.
pub fn rho(t: &SkewTableau) -> Result<SkewTableau> {
    t.lr_boundary()?;
    Ok(reversal(t).rotate())
}

/// `ϱ = ♦ ∘ ρ`.
pub fn varrho(t: &SkewTableau) -> Result<SkewTableau> {
    lozenge(&rho(t)?)
}

/// Switching `Y(μ)` past `T`; the second component.
pub fn rho1(t: &SkewTableau) -> Result<SkewTableau> {
    let b = t.lr_boundary()?;
    Ok(switch(&SkewTableau::yamanouchi(&b.mu), t)?.1)
}

/// Switching `T` past `Y(λ)^a`; the first component.
pub fn rho2(t: &SkewTableau) -> Result<SkewTableau> {
    let b = t.lr_boundary()?;
    Ok(switch(t, &SkewTableau::antinormal_yamanouchi(&b.lam))?.0)
}

/// The generators every group element is built from; swappable for fault injection.
#[derive(Clone, Copy)]
pub struct Generators {
    pub lozenge: fn(&SkewTableau) -> Result<SkewTableau>,
    pub spade: fn(&SkewTableau) -> Result<SkewTableau>,
    pub reversal: fn(&SkewTableau) -> Result<SkewTableau>,
    pub rotate: fn(&SkewTableau) -> Result<SkewTableau>,
}

impl Generators {
    pub fn standard() -> Self {
        Generators {
            lozenge,
            spade,
            reversal: |t| Ok(reversal(t)),
            rotate: |t| Ok(t.rotate()),
        }
    }
}

impl Default for Generators {
    fn default() -> Self {
        Generators::standard()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Step {
    Lozenge,
    Spade,
    Reversal,
    Rotate,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupElement {
    Id,
    Spade,
    Club,
    Lozenge,
    Rot120,
    Rot240,
    Rho,
    Varrho,
    Rho1,
    Rho2,
    SpadeRho,
    ClubRho,
}

impl GroupElement {
    pub const ALL: [GroupElement; 12] = [
        GroupElement::Id,
        GroupElement::Spade,
        GroupElement::Club,
        GroupElement::Lozenge,
        GroupElement::Rot120,
        GroupElement::Rot240,
        GroupElement::Rho,
        GroupElement::Varrho,
        GroupElement::Rho1,
        GroupElement::Rho2,
        GroupElement::SpadeRho,
        GroupElement::ClubRho,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            GroupElement::Id => "id",
            GroupElement::Spade => "spade",
            GroupElement::Club => "club",
            GroupElement::Lozenge => "lozenge",
            GroupElement::Rot120 => "rot120",
            GroupElement::Rot240 => "rot240",
            GroupElement::Rho => "rho",
            GroupElement::Varrho => "varrho",
            GroupElement::Rho1 => "rho1",
            GroupElement::Rho2 => "rho2",
            GroupElement::SpadeRho => "spade_rho",
            GroupElement::ClubRho => "club_rho",
        }
    }

    /// `(p, flag)`: the image boundary is `(b[p0], b[p1], b[p2])`, transposed when `flag`.
    pub fn action(self) -> ([usize; 3], bool) {
        match self {
            GroupElement::Id => ([0, 1, 2], false),
            GroupElement::Spade => ([1, 0, 2], true),
            GroupElement::Club => ([0, 2, 1], true),
            GroupElement::Lozenge => ([2, 1, 0], true),
            GroupElement::Rot120 => ([1, 2, 0], false),
            GroupElement::Rot240 => ([2, 0, 1], false),
            GroupElement::Rho => ([2, 1, 0], false),
            GroupElement::Varrho => ([0, 1, 2], true),
            GroupElement::Rho1 => ([1, 0, 2], false),
            GroupElement::Rho2 => ([0, 2, 1], false),
            GroupElement::SpadeRho => ([1, 2, 0], true),
            GroupElement::ClubRho => ([2, 0, 1], true),
        }
    }

    pub fn from_action(p: [usize; 3], flag: bool) -> GroupElement {
        *GroupElement::ALL.iter().find(|g| g.action() == (p, flag)).expect("S3 × Z2 is covered")
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(self, other: GroupElement) -> GroupElement {
        let (pg, fg) = self.action();
        let (ph, fh) = other.action();
        GroupElement::from_action([ph[pg[0]], ph[pg[1]], ph[pg[2]]], fg ^ fh)
    }

    pub fn inverse(self) -> GroupElement {
        *GroupElement::ALL.iter().find(|&&h| self.compose(h) == GroupElement::Id).expect("group")
    }

    pub fn boundary_image(self, b: &Boundary) -> Boundary {
        let (p, flag) = self.action();
        let arr = b.as_array();
        let image = Boundary::from_array([arr[p[0]].clone(), arr[p[1]].clone(), arr[p[2]].clone()])
            .expect("parts share a rectangle");
        if flag {
            image.transpose()
        } else {
            image
        }
    }

    fn steps(self) -> &'static [Step] {
        use Step::*;
        match self {
            GroupElement::Id => &[],
            GroupElement::Spade => &[Spade],
            GroupElement::Club => &[Lozenge, Spade, Lozenge],
            GroupElement::Lozenge => &[Lozenge],
            GroupElement::Rot120 => &[Lozenge, Spade],
            GroupElement::Rot240 => &[Spade, Lozenge],
            GroupElement::Rho => &[Reversal, Rotate],
            GroupElement::Varrho => &[Reversal, Rotate, Lozenge],
            GroupElement::Rho1 => &[Reversal, Rotate, Lozenge, Spade],
            GroupElement::Rho2 => &[Reversal, Rotate, Spade, Lozenge],
            GroupElement::SpadeRho => &[Reversal, Rotate, Spade],
            GroupElement::ClubRho => &[Reversal, Rotate, Lozenge, Spade, Lozenge],
        }
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for GroupElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GroupElement::ALL
            .into_iter()
            .find(|g| g.tag() == s)
            .ok_or_else(|| Error::Parse(format!("unknown group element '{s}'")))
    }
}

/// Applies `g` and checks that the image is an LR tableau with the expected boundary.
pub fn apply(g: GroupElement, t: &SkewTableau) -> Result<SkewTableau> {
    apply_with(&Generators::standard(), g, t)
}

pub fn apply_with(gens: &Generators, g: GroupElement, t: &SkewTableau) -> Result<SkewTableau> {
    let b = t.lr_boundary()?;
    let mut cur = t.clone();
    for step in g.steps() {
        cur = match step {
            Step::Lozenge => (gens.lozenge)(&cur)?,
            Step::Spade => (gens.spade)(&cur)?,
            Step::Reversal => (gens.reversal)(&cur)?,
            Step::Rotate => (gens.rotate)(&cur)?,
        };
    }
    let expected = g.boundary_image(&b);
    match cur.lr_boundary() {
        Ok(got) if got == expected => Ok(cur),
        Ok(got) => Err(Error::Invariant(format!("{g} produced boundary {got}, expected {expected}"))),
        Err(e) => Err(Error::Invariant(format!("{g} left the LR set: {e}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::Rect;
    use crate::tableaux::tableau;

    fn e_spade() -> SkewTableau {
        tableau(4, 7, &[(4, &[1, 1, 1]), (2, &[1, 2, 2]), (1, &[2, 2, 3]), (0, &[1, 3])])
    }

    fn yam_t() -> SkewTableau {
        tableau(3, 6, &[(2, &[1, 1, 1, 1]), (1, &[1, 2, 2]), (0, &[2, 3, 3])])
    }

    fn bullblack() -> SkewTableau {
        tableau(3, 4, &[(2, &[1, 1]), (1, &[1, 2, 2]), (0, &[1, 3])])
    }

    #[test]
    fn lozenge_words() {
        let w = Word::parse("1122131", 3).unwrap();
        assert_eq!(lozenge_word(&w).unwrap().to_string(), "1212314");
        let y = Word::parse("1111221332", 3).unwrap();
        assert_eq!(lozenge_word(&y).unwrap().to_string(), "1234125123");
        let o = crate::crystal::sigma_zero(&y);
        assert_eq!(lozenge_word(&o).unwrap().to_string(), "1245345345");
        assert!(lozenge_word(&Word::parse("21", 2).unwrap()).is_err());
    }

    #[test]
    fn lozenge_routes_agree_on_examples() {
        for t in [bullblack(), e_spade(), yam_t()] {
            let a = lozenge(&t).unwrap();
            assert_eq!(a, lozenge_by_word(&t).unwrap());
            assert_eq!(lozenge(&a).unwrap(), t);
        }
        assert_eq!(lozenge(&bullblack()).unwrap().rotate().column_word().to_string(), "1423434");
    }

    #[test]
    fn spade_example() {
        let s = spade(&e_spade()).unwrap();
        let expect = tableau(7, 4, &[(3, &[1]), (3, &[2]), (2, &[1]), (2, &[3]), (1, &[1]), (0, &[2]), (0, &[4])]);
        assert_eq!(s, expect);
        assert_eq!(spade(&s).unwrap(), e_spade());
    }

    #[test]
    fn club_example() {
        let c = club(&e_spade()).unwrap();
        let expect = tableau(
            7,
            4,
            &[(3, &[1]), (2, &[1, 2]), (1, &[1, 2]), (1, &[3]), (0, &[2, 4]), (0, &[3]), (0, &[5])],
        );
        assert_eq!(c, expect);
        assert_eq!(apply(GroupElement::Club, &e_spade()).unwrap(), c);
    }

    #[test]
    fn rotation_example() {
        let expect = tableau(4, 7, &[(5, &[1, 1]), (4, &[2, 2]), (2, &[1, 1, 3]), (0, &[1, 2, 3])]);
        assert_eq!(spade(&lozenge(&e_spade()).unwrap()).unwrap(), expect);
    }

    #[test]
    fn rho_maps_match_switching_examples() {
        let t = yam_t();
        assert_eq!(varrho(&t).unwrap().column_word().to_string(), "1231231245");
        for g in [GroupElement::Rho1, GroupElement::Rho2] {
            let via_group = apply(g, &t).unwrap();
            let direct = if g == GroupElement::Rho1 { rho1(&t) } else { rho2(&t) }.unwrap();
            assert_eq!(via_group, direct, "{g}");
        }
    }

    #[test]
    fn group_table() {
        use GroupElement::*;
        assert_eq!(Spade.compose(Lozenge).compose(Spade), Club);
        assert_eq!(Spade.compose(Lozenge), Rot120);
        assert_eq!(Lozenge.compose(Spade), Rot240);
        assert_eq!(Lozenge.compose(Rho), Varrho);
        assert_eq!(Rot120.compose(Rot120), Rot240);
        for g in GroupElement::ALL {
            assert_eq!(g.compose(g.inverse()), Id);
            assert_eq!(g.tag().parse::<GroupElement>().unwrap(), g);
        }
        let mut seen: Vec<_> = GroupElement::ALL.iter().map(|g| g.action()).collect();
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), 12);
    }

    #[test]
    fn boundary_action() {
        let rect = Rect::new(3, 6).unwrap();
        let b = Boundary::parse(["210", "532", "320"], rect).unwrap();
        let t = yam_t();
        assert_eq!(t.lr_boundary().unwrap(), b);
        for g in GroupElement::ALL {
            let img = apply(g, &t).unwrap();
            assert_eq!(img.lr_boundary().unwrap(), g.boundary_image(&b), "{g}");
        }
    }
}
