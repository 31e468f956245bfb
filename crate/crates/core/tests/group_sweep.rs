use std::collections::HashSet;

use lrkit::oracle::{all_lr_sets, lr_coefficient, lr_coefficient_by_words, verify_symmetry_sweep};
use lrkit::plactic::{haiman_intersection, switch};
use lrkit::symmetries::{
    apply, club, lozenge, lozenge_by_word, rho1, rho2, rotate120, rotate240, spade, varrho, Generators,
};
use lrkit::{GroupElement, SkewTableau};

#[test]
fn sweep_is_clean_up_to_six() {
    for n in 2..=6 {
        let report = verify_symmetry_sweep(n, None, &Generators::standard());
        assert!(report.is_clean(), "{}", report.to_table());
        assert!(report.nonzero_triples > 0);
    }
}

#[test]
fn derived_maps_agree_with_their_factorizations() {
    for n in 2..=6 {
        for (_, ts) in all_lr_sets(n) {
            for t in &ts {
                let loz = lozenge(t).unwrap();
                assert_eq!(loz, lozenge_by_word(t).unwrap());
                assert_eq!(club(t).unwrap(), apply(GroupElement::Club, t).unwrap(), "{t}");
                assert_eq!(rotate120(t).unwrap(), apply(GroupElement::Rot120, t).unwrap());
                assert_eq!(rotate240(t).unwrap(), apply(GroupElement::Rot240, t).unwrap());
                assert_eq!(varrho(t).unwrap(), apply(GroupElement::Varrho, t).unwrap());
                assert_eq!(rho1(t).unwrap(), apply(GroupElement::Rho1, t).unwrap(), "{t}");
                assert_eq!(rho2(t).unwrap(), apply(GroupElement::Rho2, t).unwrap(), "{t}");
            }
        }
    }
}

#[test]
fn generators_are_involutions_and_satisfy_braid_relation() {
    for n in 2..=6 {
        for (_, ts) in all_lr_sets(n) {
            for t in &ts {
                assert_eq!(&spade(&spade(t).unwrap()).unwrap(), t);
                assert_eq!(&lozenge(&lozenge(t).unwrap()).unwrap(), t);
                assert_eq!(&club(&club(t).unwrap()).unwrap(), t);
                // ♣♠♣ = ♠♣♠
                let a = club(&spade(&club(t).unwrap()).unwrap()).unwrap();
                let b = spade(&club(&spade(t).unwrap()).unwrap()).unwrap();
                assert_eq!(a, b);
                // ♣♦ = ♦♠ = ♠♣ and ♦♣ = ♠♦ = ♣♠
                let r = lozenge(&spade(t).unwrap()).unwrap();
                assert_eq!(club(&lozenge(t).unwrap()).unwrap(), r);
                assert_eq!(spade(&club(t).unwrap()).unwrap(), r);
                let r2 = spade(&lozenge(t).unwrap()).unwrap();
                assert_eq!(lozenge(&club(t).unwrap()).unwrap(), r2);
                assert_eq!(club(&spade(t).unwrap()).unwrap(), r2);
            }
        }
    }
}

#[test]
fn composition_matches_group_law() {
    for (_, ts) in all_lr_sets(5) {
        for t in &ts {
            for g in GroupElement::ALL {
                for h in GroupElement::ALL {
                    let seq = apply(g, &apply(h, t).unwrap()).unwrap();
                    assert_eq!(seq, apply(g.compose(h), t).unwrap(), "{g} after {h}");
                }
            }
        }
    }
}

#[test]
fn coefficient_routes_agree() {
    for n in 2..=7 {
        for d in 1..n {
            for b in lrkit::oracle::all_boundaries(n, d) {
                assert_eq!(lr_coefficient(&b), lr_coefficient_by_words(&b), "{b}");
            }
        }
    }
}

#[test]
fn reversal_matches_haiman_intersection() {
    for (b, ts) in all_lr_sets(6) {
        let y = SkewTableau::yamanouchi(&b.nu);
        let ey = lrkit::crystal::evacuate(&y).unwrap();
        for t in &ts {
            let e = lrkit::crystal::reversal(t);
            assert_eq!(haiman_intersection(t, &ey).unwrap(), e);
        }
    }
}

#[test]
fn switching_is_an_involution() {
    let mut seen = HashSet::new();
    for (b, ts) in all_lr_sets(6) {
        let y = SkewTableau::yamanouchi(&b.mu);
        for t in &ts {
            let (t1, y1) = switch(&y, t).unwrap();
            let (y2, t2) = switch(&t1, &y1).unwrap();
            assert_eq!((&y2, &t2), (&y, t));
            seen.insert(t.clone());
        }
    }
    assert!(seen.len() > 100);
}

/// ♠ with the horizontal slide of the numbers left out: every marker keeps the
/// column it had after the vertical slide.
fn spade_without_horizontal_slide(t: &SkewTableau) -> lrkit::Result<SkewTableau> {
    t.lr_boundary()?;
    let rect = t.rect();
    let (d, w) = (rect.d, rect.width);
    let outer = t.outer();
    let mut taken = vec![vec![false; w + 1]; d + 1];
    for r in 0..d {
        for (k, &a) in t.rows()[r].iter().enumerate() {
            taken[a as usize][t.inner()[r] + k + 1] = true;
        }
    }
    let mut rows: Vec<Vec<u32>> = vec![Vec::new(); w];
    let mut inner = vec![0; w];
    for r in 1..=d {
        for c in 1..=outer[r - 1] {
            if !taken[r][c] {
                if rows[c - 1].is_empty() {
                    inner[c - 1] = r - 1;
                }
                rows[c - 1].push(c as u32);
            }
        }
    }
    SkewTableau::new(rect.transpose(), inner, rows)
}

#[test]
fn corrupted_spade_is_caught_by_the_sweep() {
    let gens = Generators { spade: spade_without_horizontal_slide, ..Generators::standard() };
    for n in 4..=5 {
        let report = verify_symmetry_sweep(n, None, &gens);
        assert!(!report.is_clean());
        let first = report.violations.first().unwrap();
        assert_eq!(report.first_failing_triple(), Some(&first.boundary));
        assert!(report.violations.windows(2).all(|v| v[0].index <= v[1].index));
    }
    // the standard generators stay clean on the same range
    assert!(verify_symmetry_sweep(5, None, &Generators::standard()).is_clean());
}
