#![allow(dead_code)]

use proptest::prelude::*;
use qhopf::{Algebra, CoeffPoly, NcElement};

/// Raw input for `Algebra::normalize`: a few words with small coefficients.
pub type RawWords = Vec<(i64, i32, Vec<usize>)>;

pub fn raw_words(ngens: usize, max_len: usize, max_terms: usize) -> impl Strategy<Value = RawWords> {
    prop::collection::vec(
        (-3i64..=3, 0i32..=1, prop::collection::vec(0..ngens, 0..=max_len)),
        1..=max_terms,
    )
}

pub fn to_raw(w: &RawWords) -> Vec<(CoeffPoly, Vec<usize>)> {
    w.iter()
        .map(|(c, k, word)| (&CoeffPoly::from_int(*c) * &CoeffPoly::a_pow(*k), word.clone()))
        .collect()
}

pub fn element(alg: &Algebra, w: &RawWords) -> NcElement {
    alg.normalize(&to_raw(w)).unwrap()
}

pub fn word(alg: &Algebra, letters: &[usize]) -> NcElement {
    alg.normalize(&[(CoeffPoly::one(), letters.to_vec())]).unwrap()
}
