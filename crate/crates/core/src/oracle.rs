//! Brute-force enumeration of LR tableaux, two independent coefficient routes,
//! and the symmetry sweep behind the verification commands.

use std::collections::HashSet;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::shapes::{BinaryWord, Partition, Rect, SkewShape};
use crate::symmetries::{apply_with, GroupElement, Generators};
use crate::tableaux::{Boundary, SkewTableau, TableauJson};

/// All LR tableaux of shape `complement(λ)/μ` and content `ν`, in row-lex order.
pub fn enumerate_lr(b: &Boundary) -> Vec<SkewTableau> {
    let rect = b.rect();
    let d = rect.d;
    let Some(shape) = b.shape() else { return Vec::new() };
    if shape.size() != b.nu.size() {
        return Vec::new();
    }
    let inner = b.mu.parts().to_vec();
    let lens: Vec<usize> = (0..d).map(|r| shape.row_len(r)).collect();
    let nu = b.nu.parts().to_vec();
    let mut out = Vec::new();
    let mut rows: Vec<Vec<u32>> = Vec::with_capacity(d);
    let mut count = vec![0usize; d + 1];
    lr_rows(rect, &inner, &lens, &nu, &mut rows, &mut count, &mut out);
    out
}

fn lr_rows(
    rect: Rect,
    inner: &[usize],
    lens: &[usize],
    nu: &[usize],
    rows: &mut Vec<Vec<u32>>,
    count: &mut Vec<usize>,
    out: &mut Vec<SkewTableau>,
) {
    let r = rows.len();
    if r == rect.d {
        if count[1..].iter().zip(nu).all(|(a, b)| a == b) {
            out.push(SkewTableau::new(rect, inner.to_vec(), rows.clone()).expect("shape from boundary"));
        }
        return;
    }
    let mut row = Vec::with_capacity(lens[r]);
    fill_row(rect, inner, lens, nu, rows, count, out, &mut row, 1);
}

#[allow(clippy::too_many_arguments)]
fn fill_row(
    rect: Rect,
    inner: &[usize],
    lens: &[usize],
    nu: &[usize],
    rows: &mut Vec<Vec<u32>>,
    count: &mut Vec<usize>,
    out: &mut Vec<SkewTableau>,
    row: &mut Vec<u32>,
    min: u32,
) {
    let r = rows.len();
    if row.len() == lens[r] {
        // the row is read right to left; keep the prefix ballot and bounded by ν
        let mut c = count.clone();
        for &a in row.iter().rev() {
            let a = a as usize;
            c[a] += 1;
            if c[a] > nu[a - 1] || (a > 1 && c[a] > c[a - 1]) {
                return;
            }
        }
        rows.push(row.clone());
        let saved = std::mem::replace(count, c);
        lr_rows(rect, inner, lens, nu, rows, count, out);
        *count = saved;
        rows.pop();
        return;
    }
    let col = inner[r] + row.len();
    let below = if r > 0 && col >= inner[r - 1] && col < inner[r - 1] + rows[r - 1].len() {
        rows[r - 1][col - inner[r - 1]]
    } else {
        0
    };
    for v in min.max(below + 1)..=(r as u32 + 1) {
        row.push(v);
        fill_row(rect, inner, lens, nu, rows, count, out, row, v);
        row.pop();
    }
}

pub fn lr_coefficient(b: &Boundary) -> usize {
    enumerate_lr(b).len()
}

/// Yamanouchi words of content `ν`, lexicographic.
pub fn yamanouchi_words(nu: &[usize]) -> Vec<Vec<u32>> {
    fn rec(nu: &[usize], cnt: &mut Vec<usize>, cur: &mut Vec<u32>, total: usize, out: &mut Vec<Vec<u32>>) {
        if cur.len() == total {
            out.push(cur.clone());
            return;
        }
        for i in 0..nu.len() {
            if cnt[i] < nu[i] && (i == 0 || cnt[i] < cnt[i - 1]) {
                cnt[i] += 1;
                cur.push(i as u32 + 1);
                rec(nu, cnt, cur, total, out);
                cur.pop();
                cnt[i] -= 1;
            }
        }
    }
    let mut out = Vec::new();
    let total = nu.iter().sum();
    rec(nu, &mut vec![0; nu.len()], &mut Vec::new(), total, &mut out);
    out
}

/// Second route: place every Yamanouchi word of content `ν` into the shape and keep the semistandard fillings.
pub fn lr_coefficient_by_words(b: &Boundary) -> usize {
    let Some(shape) = b.shape() else { return 0 };
    if shape.size() != b.nu.size() {
        return 0;
    }
    yamanouchi_words(b.nu.parts())
        .iter()
        .filter(|w| SkewTableau::fill_row_word(&shape, w).map_or(false, |t| t.is_semistandard()))
        .count()
}

/// Semistandard fillings of `shape` with the given content, in row-lex order.
pub fn enumerate_ssyt(shape: &SkewShape, content: &[usize]) -> Vec<SkewTableau> {
    let cells = shape.cells();
    if cells.len() != content.iter().sum::<usize>() {
        return Vec::new();
    }
    let mut t = SkewTableau::empty(shape);
    let mut left = content.to_vec();
    let mut out = Vec::new();
    fn rec(k: usize, cells: &[(usize, usize)], t: &mut SkewTableau, left: &mut [usize], out: &mut Vec<SkewTableau>) {
        if k == cells.len() {
            out.push(t.clone());
            return;
        }
        let (r, c) = cells[k];
        let lo_row = if c > t.inner()[r] { t.get(r, c - 1).unwrap() } else { 1 };
        let lo_col = if r > 0 { t.get(r - 1, c).map_or(1, |b| b + 1) } else { 1 };
        for v in lo_row.max(lo_col)..=left.len() as u32 {
            if left[v as usize - 1] == 0 {
                continue;
            }
            left[v as usize - 1] -= 1;
            t.set_entry(r, c, v);
            rec(k + 1, cells, t, left, out);
            left[v as usize - 1] += 1;
        }
    }
    rec(0, &cells, &mut t, &mut left, &mut out);
    out
}

/// All boundary triples in a `d × (n-d)` rectangle, ordered by their 01-words.
pub fn all_boundaries(n: usize, d: usize) -> Vec<Boundary> {
    let parts: Vec<Partition> =
        BinaryWord::all(n, d).iter().map(|w| Partition::from_word(w).expect("d ones")).collect();
    let mut out = Vec::with_capacity(parts.len().pow(3));
    for mu in &parts {
        for nu in &parts {
            for lam in &parts {
                out.push(Boundary { mu: mu.clone(), nu: nu.clone(), lam: lam.clone() });
            }
        }
    }
    out
}

/// Every boundary with a non-empty LR set, paired with that set, for all `d`.
pub fn all_lr_sets(n: usize) -> Vec<(Boundary, Vec<SkewTableau>)> {
    (1..n)
        .flat_map(|d| all_boundaries(n, d))
        .filter_map(|b| {
            let ts = enumerate_lr(&b);
            (!ts.is_empty()).then_some((b, ts))
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    /// Position of the triple in the sweep order.
    pub index: usize,
    pub n: usize,
    pub d: usize,
    pub boundary: [String; 3],
    pub element: String,
    pub kind: String,
    pub witness: Option<TableauJson>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub n: usize,
    pub ds: Vec<usize>,
    pub convention: &'static str,
    pub triples: usize,
    pub nonzero_triples: usize,
    pub tableaux: usize,
    pub checks: usize,
    pub violations: Vec<Violation>,
}

impl SweepReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn first_failing_triple(&self) -> Option<&[String; 3]> {
        self.violations.first().map(|v| &v.boundary)
    }

    pub fn to_table(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "symmetry sweep n={} d={:?} ({})", self.n, self.ds, self.convention);
        let _ = writeln!(s, "{:<16}{:>12}", "triples", self.triples);
        let _ = writeln!(s, "{:<16}{:>12}", "nonzero", self.nonzero_triples);
        let _ = writeln!(s, "{:<16}{:>12}", "tableaux", self.tableaux);
        let _ = writeln!(s, "{:<16}{:>12}", "checks", self.checks);
        let _ = writeln!(s, "{:<16}{:>12}", "violations", self.violations.len());
        for v in self.violations.iter().take(20) {
            let _ = writeln!(
                s,
                "  d={} ({}, {}, {}) {}: {}",
                v.d, v.boundary[0], v.boundary[1], v.boundary[2], v.element, v.kind
            );
        }
        s
    }
}

struct TripleOutcome {
    nonzero: bool,
    tableaux: usize,
    checks: usize,
    violations: Vec<Violation>,
}

fn check_triple(index: usize, n: usize, b: &Boundary, gens: &Generators) -> TripleOutcome {
    let d = b.rect().d;
    let ts = enumerate_lr(b);
    let mut out = TripleOutcome { nonzero: !ts.is_empty(), tableaux: ts.len(), checks: 0, violations: Vec::new() };
    let mut fail = |element: &str, kind: String, witness: Option<&SkewTableau>| {
        out.violations.push(Violation {
            index,
            n,
            d,
            boundary: b.to_strings(),
            element: element.to_string(),
            kind,
            witness: witness.map(|t| t.to_json()),
        });
    };
    let by_words = lr_coefficient_by_words(b);
    if by_words != ts.len() {
        fail("id", format!("coefficient routes disagree: {} vs {by_words}", ts.len()), None);
    }
    for g in GroupElement::ALL {
        let target = g.boundary_image(b);
        let expected = lr_coefficient(&target);
        out.checks += 1;
        if expected != ts.len() {
            fail(g.tag(), format!("coefficient {} maps to {expected}", ts.len()), None);
        }
        let mut images = HashSet::with_capacity(ts.len());
        for t in &ts {
            match apply_with(gens, g, t) {
                Ok(img) => {
                    if !images.insert(img) {
                        fail(g.tag(), "map is not injective".into(), Some(t));
                        break;
                    }
                }
                Err(e) => {
                    fail(g.tag(), e.to_string(), Some(t));
                    break;
                }
            }
        }
    }
    out
}

/// Checks every group element on every LR set in the `n` rectangles (all `d`, or one).
pub fn verify_symmetry_sweep(n: usize, d: Option<usize>, gens: &Generators) -> SweepReport {
    let ds: Vec<usize> = match d {
        Some(d) => vec![d],
        None => (1..n).collect(),
    };
    let triples: Vec<Boundary> = ds.iter().flat_map(|&d| all_boundaries(n, d)).collect();
    let outcomes: Vec<TripleOutcome> =
        triples.par_iter().enumerate().map(|(i, b)| check_triple(i, n, b, gens)).collect();
    let mut report = SweepReport {
        n,
        ds,
        convention: crate::CONVENTION,
        triples: triples.len(),
        nonzero_triples: 0,
        tableaux: 0,
        checks: 0,
        violations: Vec::new(),
    };
    for o in outcomes {
        report.nonzero_triples += o.nonzero as usize;
        report.tableaux += o.tableaux;
        report.checks += o.checks;
        report.violations.extend(o.violations);
    }
    report
}

/// Caps the global worker pool at `LRKIT_THREADS` when that variable is set.
pub fn configure_threads_from_env() {
    if let Some(k) = std::env::var("LRKIT_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(k.max(1)).build_global();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::tableau;

    fn bnd(n: usize, d: usize, mu: &str, nu: &str, lam: &str) -> Boundary {
        Boundary::parse([mu, nu, lam], Rect::from_n_d(n, d).unwrap()).unwrap()
    }

    #[test]
    fn example_tableau_is_enumerated() {
        let b = bnd(9, 3, "210", "532", "320");
        let ts = enumerate_lr(&b);
        let t = tableau(3, 6, &[(2, &[1, 1, 1, 1]), (1, &[1, 2, 2]), (0, &[2, 3, 3])]);
        assert!(ts.contains(&t));
        assert_eq!(ts.len(), lr_coefficient_by_words(&b));
        let mut sorted = ts.clone();
        sorted.sort_by(|a, b| a.rows().cmp(b.rows()));
        assert_eq!(sorted, ts);
    }

    #[test]
    fn straight_boundary_has_single_tableau() {
        let rect = Rect::from_n_d(7, 3).unwrap();
        let gamma = Partition::parse("421", rect).unwrap();
        let b = Boundary::new(Partition::empty(rect), gamma.clone(), gamma.complement()).unwrap();
        assert_eq!(enumerate_lr(&b), vec![SkewTableau::yamanouchi(&gamma)]);
    }

    #[test]
    fn classical_coefficient_two() {
        let rect = Rect::from_n_d(6, 3).unwrap();
        let lam = Partition::parse("321", rect).unwrap().complement();
        let b = Boundary::new(Partition::parse("21", rect).unwrap(), Partition::parse("21", rect).unwrap(), lam).unwrap();
        assert_eq!(enumerate_lr(&b).len(), 2);
        assert_eq!(lr_coefficient_by_words(&b), 2);
    }

    #[test]
    fn pieri_one() {
        let rect = Rect::from_n_d(4, 2).unwrap();
        let lam = Partition::parse("2", rect).unwrap().complement();
        let one = Partition::parse("1", rect).unwrap();
        assert_eq!(lr_coefficient(&Boundary::new(one.clone(), one, lam).unwrap()), 1);
    }

    #[test]
    fn ssyt_counts() {
        let rect = Rect::new(3, 3).unwrap();
        let shape = SkewShape::straight(Partition::parse("21", rect).unwrap());
        // SSYT(21) with content 111 are the two standard tableaux
        assert_eq!(enumerate_ssyt(&shape, &[1, 1, 1]).len(), 2);
        assert_eq!(enumerate_ssyt(&shape, &[2, 1, 0]).len(), 1);
    }

    #[test]
    fn yamanouchi_words_count_standard_tableaux() {
        // hook length counts
        assert_eq!(yamanouchi_words(&[2, 1]).len(), 2);
        assert_eq!(yamanouchi_words(&[3, 2]).len(), 5);
        assert_eq!(yamanouchi_words(&[3, 2, 1]).len(), 16);
        assert_eq!(yamanouchi_words(&[4, 2, 2]).len(), 56);
    }
}
