use std::collections::{HashMap, HashSet};

use crate::root_system::RootSystem;
use crate::weyl::{WeylElement, Word};

/// All pairs `(u, u^{-1} w)` with `l(u) + l(u^{-1} w) = l(w)` and `u != e`.
fn length_additive_splits(rs: &RootSystem, w: &WeylElement) -> Vec<(WeylElement, WeylElement)> {
    let mut out = vec![(rs.identity(), w.clone())];
    let mut seen: HashSet<WeylElement> = HashSet::from([rs.identity()]);
    let mut k = 0;
    while k < out.len() {
        let (u, r) = out[k].clone();
        for i in 1..=rs.rank() {
            if rs.is_left_descent(&r, i) {
                let us = rs.times_simple(&u, i);
                if seen.insert(us.clone()) {
                    out.push((us, rs.simple_times(i, &r)));
                }
            }
        }
        k += 1;
    }
    out.remove(0);
    out
}

/// Ordered factorizations `w = w_1 ... w_k` into non-identity factors with
/// `sum l(w_j) = l(w)`, sorted by the canonical words of the factors.
/// `k = 0` yields the empty tuple exactly when `w = e`.
pub fn factor_decompositions(rs: &RootSystem, w: &WeylElement, k: usize) -> Vec<Vec<WeylElement>> {
    let mut memo = HashMap::new();
    let mut out = decompose(rs, w, k, &mut memo);
    let mut keyed: Vec<(Vec<Word>, Vec<WeylElement>)> =
        out.drain(..).map(|f| (f.iter().map(|x| rs.reduced_word(x)).collect(), f)).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    keyed.into_iter().map(|(_, f)| f).collect()
}

type Memo = HashMap<(WeylElement, usize), Vec<Vec<WeylElement>>>;

fn decompose(rs: &RootSystem, w: &WeylElement, k: usize, memo: &mut Memo) -> Vec<Vec<WeylElement>> {
    if k == 0 {
        return if w.is_identity() { vec![Vec::new()] } else { Vec::new() };
    }
    if w.is_identity() || k > w.length() {
        return Vec::new();
    }
    if k == 1 {
        return vec![vec![w.clone()]];
    }
    if let Some(v) = memo.get(&(w.clone(), k)) {
        return v.clone();
    }
    let mut out = Vec::new();
    for (u, rest) in length_additive_splits(rs, w) {
        for mut tail in decompose(rs, &rest, k - 1, memo) {
            tail.insert(0, u.clone());
            out.push(tail);
        }
    }
    memo.insert((w.clone(), k), out.clone());
    out
}
