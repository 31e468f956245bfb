//! Type A crystal operators on words via the signature rule, the reflections
//! `σ_i`, the longest element `σ_0`, reversal and evacuation.

use crate::plactic::rectify;
use crate::tableaux::{SkewTableau, Word};
use crate::{Error, Result};

/// Unbracketed positions of an `i`-signature. The reduced signature is `-^ε +^φ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignatureScan {
    pub minus: Vec<usize>,
    pub plus: Vec<usize>,
}

impl SignatureScan {
    pub fn epsilon(&self) -> usize {
        self.minus.len()
    }

    pub fn phi(&self) -> usize {
        self.plus.len()
    }
}

/// Letters `i` count as `+`, letters `i + 1` as `-`; adjacent `+-` pairs cancel.
pub fn signature(w: &[u32], i: u32) -> SignatureScan {
    let mut minus = Vec::new();
    let mut plus = Vec::new();
    for (k, &a) in w.iter().enumerate() {
        if a == i {
            plus.push(k);
        } else if a == i + 1 && plus.pop().is_none() {
            minus.push(k);
        }
    }
    SignatureScan { minus, plus }
}

pub fn epsilon(w: &Word, i: u32) -> usize {
    signature(w.letters(), i).epsilon()
}

pub fn phi(w: &Word, i: u32) -> usize {
    signature(w.letters(), i).phi()
}

fn check_index(w: &Word, i: u32) {
    assert!(i >= 1 && i < w.alphabet(), "crystal index {i} outside 1..{}", w.alphabet());
}

/// `e_i`: the rightmost unbracketed `i + 1` becomes `i`.
pub fn raise(w: &Word, i: u32) -> Option<Word> {
    check_index(w, i);
    let s = signature(w.letters(), i);
    let &k = s.minus.last()?;
    let mut letters = w.letters().to_vec();
    letters[k] = i;
    Some(Word::new(letters, w.alphabet()).expect("same alphabet"))
}

/// `f_i`: the leftmost unbracketed `i` becomes `i + 1`.
pub fn lower(w: &Word, i: u32) -> Option<Word> {
    check_index(w, i);
    let s = signature(w.letters(), i);
    let &k = s.plus.first()?;
    let mut letters = w.letters().to_vec();
    letters[k] = i + 1;
    Some(Word::new(letters, w.alphabet()).expect("same alphabet"))
}

fn sigma_in_place(letters: &mut [u32], i: u32) {
    let s = signature(letters, i);
    let (e, f) = (s.epsilon(), s.phi());
    // unbracketed block (i+1)^e i^f becomes (i+1)^f i^e
    for (n, &k) in s.minus.iter().chain(&s.plus).enumerate() {
        letters[k] = if n < f { i + 1 } else { i };
    }
    debug_assert_eq!(e + f, s.minus.len() + s.plus.len());
}

/// The Kashiwara reflection `σ_i`.
pub fn sigma(w: &Word, i: u32) -> Word {
    check_index(w, i);
    let mut letters = w.letters().to_vec();
    sigma_in_place(&mut letters, i);
    Word::new(letters, w.alphabet()).expect("same alphabet")
}

/// Reflection indices in application order for `σ_1 · σ_2σ_1 · … · σ_{k-1}…σ_1`.
pub fn staircase(k: u32) -> Vec<u32> {
    let mut v = Vec::new();
    for top in (1..k).rev() {
        v.extend(1..=top);
    }
    v
}

/// Reflection indices in application order for `σ_{k-1} · σ_{k-2}σ_{k-1} · … · σ_1…σ_{k-1}`.
pub fn reverse_staircase(k: u32) -> Vec<u32> {
    let mut v = Vec::new();
    for low in 1..k {
        v.extend((low..k).rev());
    }
    v
}

/// Applies reflections in the given order.
pub fn sigma_along(w: &Word, order: &[u32]) -> Word {
    let mut letters = w.letters().to_vec();
    for &i in order {
        assert!(i >= 1 && i < w.alphabet(), "crystal index {i} outside 1..{}", w.alphabet());
        sigma_in_place(&mut letters, i);
    }
    Word::new(letters, w.alphabet()).expect("same alphabet")
}

/// Action of the longest permutation of the word's alphabet.
pub fn sigma_zero(w: &Word) -> Word {
    sigma_along(w, &staircase(w.alphabet()))
}

fn refill(t: &SkewTableau, w: &Word) -> SkewTableau {
    SkewTableau::fill_row_word(&t.shape(), w.letters()).expect("same number of cells")
}

pub fn raise_tableau(t: &SkewTableau, i: u32) -> Option<SkewTableau> {
    raise(&t.row_word(), i).map(|w| refill(t, &w))
}

pub fn lower_tableau(t: &SkewTableau, i: u32) -> Option<SkewTableau> {
    lower(&t.row_word(), i).map(|w| refill(t, &w))
}

pub fn sigma_tableau(t: &SkewTableau, i: u32) -> SkewTableau {
    refill(t, &sigma(&t.row_word(), i))
}

/// Reversal `e`: `σ_0` applied to the row word inside the shape.
pub fn reversal(t: &SkewTableau) -> SkewTableau {
    refill(t, &sigma_zero(&t.row_word()))
}

/// Evacuation of a straight tableau, computed as the rectification of its rotation.
pub fn evacuate(t: &SkewTableau) -> Result<SkewTableau> {
    if !t.is_straight() {
        return Err(Error::Shape("evacuation needs a straight shape".into()));
    }
    Ok(rectify(&t.rotate_with(t.alphabet())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plactic::{arectify, burge_insert, q_rows};
    use crate::shapes::{Partition, Rect};
    use crate::tableaux::tableau;

    fn w(s: &str, k: u32) -> Word {
        Word::parse(s, k).unwrap()
    }

    #[test]
    fn sigma_examples() {
        let a = sigma(&w("1111221332", 3), 1);
        assert_eq!(a.to_string(), "2211221332");
        assert_eq!(sigma(&a, 2).to_string(), "3311221333");
        assert_eq!(sigma_zero(&w("1111221332", 3)).to_string(), "3311222333");
        assert_eq!(sigma_zero(&w("1111221332", 4)).to_string(), "4422333444");
        assert_eq!(sigma_zero(&w("1", 5)).to_string(), "5");
        assert_eq!(staircase(4), vec![1, 2, 3, 1, 2, 1]);
    }

    #[test]
    fn lower_shifts_weight() {
        let x = w("1111221332", 3);
        let y = lower(&x, 1).unwrap();
        let (cx, cy) = (x.content(), y.content());
        assert_eq!((cy[0], cy[1], cy[2]), (cx[0] - 1, cx[1] + 1, cx[2]));
        assert_eq!(raise(&y, 1).unwrap(), x);
        // highest weight words are killed by every raising operator
        assert!(raise(&x, 1).is_none() && raise(&x, 2).is_none());
    }

    #[test]
    fn crystal_of_shape_21() {
        // the crystal of SSYT(21) over [3] has 8 vertices reachable from Y(21)
        let start = tableau(3, 2, &[(0, &[1, 1]), (0, &[2]), (0, &[])]);
        let mut seen = vec![start.clone()];
        let mut stack = vec![start];
        while let Some(t) = stack.pop() {
            for i in 1..3 {
                if let Some(u) = lower_tableau(&t, i) {
                    assert!(u.is_semistandard());
                    if !seen.contains(&u) {
                        seen.push(u.clone());
                        stack.push(u);
                    }
                }
            }
        }
        assert_eq!(seen.len(), 8);
    }

    #[test]
    fn evacuation_example() {
        let t = tableau(3, 2, &[(0, &[1, 2]), (0, &[2]), (0, &[])]);
        let e = evacuate(&t).unwrap();
        assert_eq!(e.rows(), &[vec![2, 2], vec![3], vec![]]);
        assert_eq!(reversal(&t), e);
        assert_eq!(evacuate(&e).unwrap(), t);
        assert!(evacuate(&tableau(2, 2, &[(1, &[1]), (0, &[2])])).is_err());
    }

    #[test]
    fn evacuation_routes_agree() {
        let rect = Rect::new(3, 5).unwrap();
        let nu = Partition::new(&[5, 3, 2], rect).unwrap();
        let y = SkewTableau::yamanouchi(&nu);
        let e = evacuate(&y).unwrap();
        // evac Y(ν) has shape ν and reversed content
        assert_eq!(e.outer(), vec![5, 3, 2]);
        assert_eq!(e.content(), vec![2, 3, 5]);
        assert_eq!(arectify(&y).rotate(), e);
        let p = burge_insert(&y.row_word().dual(), rect).unwrap().p;
        assert_eq!(p, e);
    }

    #[test]
    fn exhaustive_reflection_laws() {
        for len in 0..=8u32 {
            for code in 0..4u64.pow(len) {
                let mut c = code;
                let letters: Vec<u32> = (0..len)
                    .map(|_| {
                        let a = (c % 4) as u32 + 1;
                        c /= 4;
                        a
                    })
                    .collect();
                let x = Word::new(letters, 4).unwrap();
                for i in 1..4 {
                    let y = sigma(&x, i);
                    assert_eq!(sigma(&y, i), x);
                    let (cx, cy) = (x.content(), y.content());
                    assert_eq!((cy[i as usize - 1], cy[i as usize]), (cx[i as usize], cx[i as usize - 1]));
                }
                assert_eq!(sigma_along(&x, &staircase(4)), sigma_along(&x, &reverse_staircase(4)));
                if len <= 7 && x.letters().iter().all(|&a| a <= 3) {
                    let x3 = x.with_alphabet(3).unwrap();
                    for i in 1..3 {
                        assert_eq!(q_rows(sigma(&x3, i).letters()), q_rows(x3.letters()));
                    }
                }
            }
        }
    }
}
