use std::collections::HashMap;

use crate::polynomial::{t_linear, DoublePolynomial};
use crate::root_system::{CartanType, RootSystem, Weight};
use crate::weyl::WeylElement;

/// `X_w(v)` by the subword formula: for the canonical reduced word
/// `v = s_{i_1} ... s_{i_l}` with roots `beta_k = s_{i_1} ... s_{i_{k-1}}(alpha_{i_k})`,
/// sum `prod_k beta_{j_k}(t)` over reduced subwords `(j_1 < ... < j_m)` whose
/// product is `w`.
///
/// Subwords are aggregated by the element their prefix multiplies to, so
/// the work is bounded by the number of reachable prefixes rather than
/// the number of subwords.
pub fn billey_localize(rs: &RootSystem, w: &WeylElement, v: &WeylElement) -> DoublePolynomial {
    let n = rs.rank();
    let target = w.length();
    if target > v.length() {
        return DoublePolynomial::zero(n);
    }
    if target == 0 {
        return DoublePolynomial::one(n);
    }
    let word = rs.reduced_word(v);
    let letters = word.letters();
    let mut states: HashMap<WeylElement, DoublePolynomial> = HashMap::new();
    states.insert(rs.identity(), DoublePolynomial::one(n));
    let mut prefix = rs.identity();
    for (k, &i) in letters.iter().enumerate() {
        let beta = t_linear(rs, &prefix.apply(&Weight::simple_root(n, i)));
        let remaining = letters.len() - k;
        let mut next = HashMap::with_capacity(states.len() * 2);
        for (p, c) in &states {
            // A prefix can still reach w only if enough letters remain.
            let len = p.length();
            if target - len < remaining {
                add(&mut next, p.clone(), c.clone());
            }
            if len < target {
                let ps = rs.times_simple(p, i);
                if ps.length() == len + 1 {
                    add(&mut next, ps, c * &beta);
                }
            }
        }
        states = next;
        prefix = rs.times_simple(&prefix, i);
    }
    states.remove(w).unwrap_or_else(|| DoublePolynomial::zero(n))
}

fn add(map: &mut HashMap<WeylElement, DoublePolynomial>, key: WeylElement, value: DoublePolynomial) {
    match map.get_mut(&key) {
        Some(acc) => *acc = &*acc + &value,
        None => {
            map.insert(key, value);
        }
    }
}

/// Memoised [`billey_localize`]. Entries belong to one root system; a
/// lookup against a different Cartan type empties the cache first.
#[derive(Debug, Default)]
pub struct LocalizationCache {
    cartan_type: Option<CartanType>,
    entries: HashMap<(WeylElement, WeylElement), DoublePolynomial>,
}

impl LocalizationCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, rs: &RootSystem, w: &WeylElement, v: &WeylElement) -> DoublePolynomial {
        if self.cartan_type != Some(rs.cartan_type()) {
            self.entries.clear();
            self.cartan_type = Some(rs.cartan_type());
        }
        if let Some(p) = self.entries.get(&(w.clone(), v.clone())) {
            return p.clone();
        }
        let p = billey_localize(rs, w, v);
        self.entries.insert((w.clone(), v.clone()), p.clone());
        p
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::{parse_polynomial, Coords};

    #[test]
    fn small_values() {
        let rs = RootSystem::from_type_str("A2").unwrap();
        let e = |s: &str| rs.parse_element(s).unwrap();
        let p = |s: &str| parse_polynomial(s, &rs, Coords::Canonical).unwrap();
        assert_eq!(billey_localize(&rs, &e("1"), &e("1")), p("a1"));
        assert_eq!(billey_localize(&rs, &e("1"), &e("2")), p("0"));
        assert_eq!(billey_localize(&rs, &e("1"), &e("121")), p("a1+a2"));
        assert_eq!(billey_localize(&rs, &e("121"), &e("121")), p("a1*a2*(a1+a2)"));
        assert_eq!(billey_localize(&rs, &e(""), &e("12")), p("1"));
        assert_eq!(billey_localize(&rs, &e("12"), &e("1")), p("0"));
    }

    #[test]
    fn cache_follows_root_system() {
        let a2 = RootSystem::from_type_str("A2").unwrap();
        let c2 = RootSystem::from_type_str("C2").unwrap();
        let mut cache = LocalizationCache::new();
        for rs in [&a2, &c2, &a2] {
            for w in rs.all_elements(10).unwrap() {
                for v in rs.all_elements(10).unwrap() {
                    assert_eq!(cache.get(rs, &w, &v), billey_localize(rs, &w, &v));
                }
            }
        }
    }
}
