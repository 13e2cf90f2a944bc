//! Weyl group elements as integer matrices acting on the simple-root basis.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::root_system::{Family, RootSystem, Weight};
use crate::Rational;

/// A Weyl group element. Column `j` of the matrix is the image of `alpha_j`
/// in simple-root coordinates. Equality and hashing are matrix based.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    n: usize,
    matrix: Vec<i64>,
    length: usize,
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylElement(len {}, {:?})", self.length, self.matrix)
    }
}

impl WeylElement {
    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }

    pub fn matrix(&self) -> &[i64] {
        &self.matrix
    }

    fn entry(&self, r: usize, c: usize) -> i64 {
        self.matrix[r * self.n + c]
    }

    fn apply_int(&self, v: &[i64]) -> Vec<i64> {
        (0..self.n).map(|r| (0..self.n).map(|c| self.entry(r, c) * v[c]).sum()).collect()
    }

    /// The image `w(lambda)`.
    pub fn apply(&self, lambda: &Weight) -> Weight {
        let n = self.n;
        Weight {
            coords: (0..n)
                .map(|r| {
                    (0..n)
                        .filter(|&c| self.entry(r, c) != 0)
                        .map(|c| Rational::from_integer(self.entry(r, c).into()) * &lambda.coords[c])
                        .sum()
                })
                .collect(),
        }
    }

    /// `l(w s_i) < l(w)`, i.e. `w(alpha_i)` is negative.
    pub fn is_right_descent(&self, i: usize) -> bool {
        (0..self.n).any(|r| self.entry(r, i - 1) < 0)
    }
}

/// A sequence of simple-reflection indices (1-based).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Comma-separated form used on the command line, e.g. `4,2`.
    pub fn to_comma_string(&self) -> String {
        self.0.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")
    }
}

impl fmt::Display for Word {
    /// `e` for the empty word, otherwise `s4s2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "e");
        }
        for i in &self.0 {
            write!(f, "s{i}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Accepts `e`, the empty string, `s4s2`, `4,2`, `4 2`, and a bare digit
    /// string such as `121` read one letter per digit.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("invalid word {s:?}"));
        if s.is_empty() || s == "e" || s == "()" {
            return Ok(Word(Vec::new()));
        }
        let inner = s.strip_prefix('(').and_then(|x| x.strip_suffix(')')).unwrap_or(s);
        let letters: Result<Vec<usize>> = if inner.len() > 1 && inner.chars().all(|c| c.is_ascii_digit()) {
            Ok(inner.chars().map(|c| c as usize - '0' as usize).collect())
        } else if inner.starts_with('s') {
            inner.split('s').skip(1).map(|p| p.trim().parse().map_err(|_| bad())).collect()
        } else {
            inner
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|p| !p.is_empty())
                .map(|p| p.parse().map_err(|_| bad()))
                .collect()
        };
        let letters = letters?;
        if letters.contains(&0) {
            return Err(bad());
        }
        Ok(Word(letters))
    }
}

impl RootSystem {
    fn element_from_matrix(&self, matrix: Vec<i64>) -> WeylElement {
        let n = self.rank();
        let mut w = WeylElement { n, matrix, length: 0 };
        w.length = self.positive_roots_int().iter().filter(|b| is_negative(&w.apply_int(b))).count();
        w
    }

    pub fn identity(&self) -> WeylElement {
        let n = self.rank();
        let mut m = vec![0i64; n * n];
        for i in 0..n {
            m[i * n + i] = 1;
        }
        WeylElement { n, matrix: m, length: 0 }
    }

    /// The simple reflection `s_i` (1-based).
    pub fn simple_reflection(&self, i: usize) -> Result<WeylElement> {
        self.check_index(i)?;
        let n = self.rank();
        let c = self.cartan_matrix();
        let mut m = vec![0i64; n * n];
        for j in 0..n {
            m[j * n + j] = 1;
            m[(i - 1) * n + j] -= c[i - 1][j];
        }
        Ok(WeylElement { n, matrix: m, length: 1 })
    }

    pub fn multiply(&self, u: &WeylElement, v: &WeylElement) -> Result<WeylElement> {
        if u.n != self.rank() || v.n != self.rank() {
            return Err(Error::RankMismatch(u.n, v.n));
        }
        let n = self.rank();
        let mut m = vec![0i64; n * n];
        for r in 0..n {
            for k in 0..n {
                let a = u.entry(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..n {
                    m[r * n + c] += a * v.entry(k, c);
                }
            }
        }
        Ok(self.element_from_matrix(m))
    }

    /// `w s_i`.
    pub fn times_simple(&self, w: &WeylElement, i: usize) -> WeylElement {
        let s = self.simple_reflection(i).expect("valid index");
        self.multiply(w, &s).expect("same rank")
    }

    /// `s_i w`.
    pub fn simple_times(&self, i: usize, w: &WeylElement) -> WeylElement {
        let s = self.simple_reflection(i).expect("valid index");
        self.multiply(&s, w).expect("same rank")
    }

    /// Product of the simple reflections in word order; the empty word is `e`.
    pub fn from_word(&self, word: &Word) -> Result<WeylElement> {
        for &i in word.letters() {
            self.check_index(i)?;
        }
        let mut w = self.identity();
        for &i in word.letters() {
            w = self.times_simple(&w, i);
        }
        Ok(w)
    }

    pub fn parse_element(&self, text: &str) -> Result<WeylElement> {
        self.from_word(&text.parse()?)
    }

    pub fn length(&self, w: &WeylElement) -> usize {
        w.length
    }

    pub fn is_reduced(&self, word: &Word) -> Result<bool> {
        Ok(self.from_word(word)?.length == word.len())
    }

    pub fn is_left_descent(&self, w: &WeylElement, i: usize) -> bool {
        self.simple_times(i, w).length < w.length
    }

    pub fn descent(&self, w: &WeylElement, i: usize, side: Side) -> Result<bool> {
        self.check_index(i)?;
        Ok(match side {
            Side::Right => w.is_right_descent(i),
            Side::Left => self.is_left_descent(w, i),
        })
    }

    /// The lexicographically first reduced word, obtained by repeatedly
    /// peeling the smallest left descent.
    pub fn reduced_word(&self, w: &WeylElement) -> Word {
        let mut letters = Vec::with_capacity(w.length);
        let mut cur = w.clone();
        while cur.length > 0 {
            let i = (1..=self.rank())
                .find(|&i| self.is_left_descent(&cur, i))
                .expect("non-identity element has a left descent");
            letters.push(i);
            cur = self.simple_times(i, &cur);
        }
        Word(letters)
    }

    /// All reduced words of `w`, sorted lexicographically.
    pub fn reduced_words(&self, w: &WeylElement) -> Vec<Word> {
        if w.length == 0 {
            return vec![Word::default()];
        }
        let mut out = Vec::new();
        for i in 1..=self.rank() {
            if w.is_right_descent(i) {
                for mut word in self.reduced_words(&self.times_simple(w, i)) {
                    word.0.push(i);
                    out.push(word);
                }
            }
        }
        out.sort();
        out
    }

    pub fn inverse(&self, w: &WeylElement) -> WeylElement {
        let mut word = self.reduced_word(w);
        word.0.reverse();
        self.from_word(&word).expect("letters in range")
    }

    /// Bruhat order `u <= w`, decided by the lifting property.
    pub fn bruhat_leq(&self, u: &WeylElement, w: &WeylElement) -> bool {
        let mut u = u.clone();
        let mut w = w.clone();
        loop {
            if u.length == 0 {
                return true;
            }
            if u.length > w.length {
                return false;
            }
            if u.length == w.length {
                return u == w;
            }
            let i = (1..=self.rank()).find(|&i| w.is_right_descent(i)).expect("w is not e");
            if u.is_right_descent(i) {
                u = self.times_simple(&u, i);
            }
            w = self.times_simple(&w, i);
        }
    }

    /// The reflection `s_beta` for a root `beta`.
    pub fn reflection(&self, beta: &Weight) -> Result<WeylElement> {
        self.check_weight(beta)?;
        if !self.is_root(beta) {
            return Err(Error::NotARoot(beta.to_string()));
        }
        let n = self.rank();
        let mut m = vec![0i64; n * n];
        for j in 0..n {
            let aj = Weight::simple_root(n, j + 1);
            let p = self.coroot_pair(&aj, beta)?;
            let img = aj.sub(&beta.scale(&p));
            for r in 0..n {
                m[r * n + j] = i64::try_from(img.coords[r].to_integer()).expect("small entries");
            }
        }
        Ok(self.element_from_matrix(m))
    }

    /// All elements of length at most `max_length`, grouped by length,
    /// generated breadth-first by right multiplication.
    pub fn enumerate_up_to_length(&self, max_length: usize, cap: usize) -> Result<Vec<WeylElement>> {
        let mut out = vec![self.identity()];
        let mut seen: HashSet<WeylElement> = out.iter().cloned().collect();
        let mut layer_start = 0;
        for _ in 0..max_length {
            let layer_end = out.len();
            for k in layer_start..layer_end {
                let w = out[k].clone();
                for i in 1..=self.rank() {
                    if w.is_right_descent(i) {
                        continue;
                    }
                    let ws = self.times_simple(&w, i);
                    if seen.insert(ws.clone()) {
                        if out.len() >= cap {
                            return Err(Error::EnumerationLimit { cap });
                        }
                        out.push(ws);
                    }
                }
            }
            if out.len() == layer_end {
                break;
            }
            layer_start = layer_end;
        }
        Ok(out)
    }

    /// The whole group; errors when `|W|` exceeds `bound`.
    pub fn all_elements(&self, bound: u128) -> Result<Vec<WeylElement>> {
        let order = self.weyl_order();
        if order > bound {
            return Err(Error::GroupTooLarge { order, bound });
        }
        self.enumerate_up_to_length(self.positive_roots().len(), order as usize)
    }

    pub fn longest_element(&self, bound: u128) -> Result<WeylElement> {
        Ok(self.all_elements(bound)?.pop().expect("nonempty"))
    }

    /// Roots `beta_k = s_{i_1} ... s_{i_{k-1}}(alpha_{i_k})` along the
    /// canonical reduced word; these are the positive roots sent negative
    /// by `w^{-1}`.
    pub fn inversion_roots(&self, w: &WeylElement) -> Vec<Weight> {
        let n = self.rank();
        let mut prefix = self.identity();
        let mut out = Vec::with_capacity(w.length);
        for &i in self.reduced_word(w).letters() {
            out.push(prefix.apply(&Weight::simple_root(n, i)));
            prefix = self.times_simple(&prefix, i);
        }
        out
    }

    /// Sort key putting elements in `(length, canonical word)` order.
    pub fn sort_key(&self, w: &WeylElement) -> (usize, Word) {
        (w.length, self.reduced_word(w))
    }

    /// One-line notation of a type-A element: entry `k` is `w(k)`.
    pub fn one_line(&self, w: &WeylElement) -> Option<Vec<usize>> {
        if self.cartan_type().family != Family::A {
            return None;
        }
        let m = self.rank() + 1;
        let mut perm: Vec<usize> = (1..=m).collect();
        // Apply the word right to left: w(k) = s_{i1}(...s_{ik}(k)).
        for &i in self.reduced_word(w).letters().iter().rev() {
            for p in perm.iter_mut() {
                if *p == i {
                    *p = i + 1;
                } else if *p == i + 1 {
                    *p = i;
                }
            }
        }
        Some(perm)
    }

    /// Parses a type-A permutation given in one-line notation.
    pub fn from_one_line(&self, perm: &[usize]) -> Result<WeylElement> {
        let m = self.rank() + 1;
        let mut sorted = perm.to_vec();
        sorted.sort_unstable();
        if self.cartan_type().family != Family::A || sorted != (1..=m).collect::<Vec<_>>() {
            return Err(Error::Parse(format!("not a permutation of 1..{m}: {perm:?}")));
        }
        // Bubble sort the one-line word; each swap at position i multiplies by s_i on the right.
        let mut p = perm.to_vec();
        let mut letters = Vec::new();
        while let Some(i) = (0..m - 1).find(|&i| p[i] > p[i + 1]) {
            p.swap(i, i + 1);
            letters.push(i + 1);
        }
        letters.reverse();
        self.from_word(&Word(letters))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

fn is_negative(v: &[i64]) -> bool {
    v.iter().all(|&c| c <= 0) && v.iter().any(|&c| c < 0)
}

/// Renders `(231)`-style one-line notation.
pub fn format_one_line(perm: &[usize]) -> String {
    let body: Vec<String> = perm.iter().map(|p| p.to_string()).collect();
    if perm.iter().all(|&p| p < 10) {
        format!("({})", body.concat())
    } else {
        format!("({})", body.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> RootSystem {
        RootSystem::from_type_str("A2").unwrap()
    }

    fn w(rs: &RootSystem, s: &str) -> WeylElement {
        rs.parse_element(s).unwrap()
    }

    #[test]
    fn words_parse() {
        assert_eq!("4,2".parse::<Word>().unwrap(), Word(vec![4, 2]));
        assert_eq!("s4s2".parse::<Word>().unwrap(), Word(vec![4, 2]));
        assert_eq!("e".parse::<Word>().unwrap(), Word(vec![]));
        assert_eq!("(1,2,1)".parse::<Word>().unwrap(), Word(vec![1, 2, 1]));
        assert!("0,1".parse::<Word>().is_err());
        assert!("s1x".parse::<Word>().is_err());
        assert_eq!(Word(vec![3, 5, 4, 2]).to_string(), "s3s5s4s2");
    }

    #[test]
    fn a2_basics() {
        let rs = a2();
        assert_eq!(w(&rs, "1,2,1"), w(&rs, "2,1,2"));
        assert_eq!(w(&rs, "1,2,1").length(), 3);
        assert!(w(&rs, "").is_identity());
        assert!(w(&rs, "1,1").is_identity());
        assert_eq!(w(&rs, "1,2").length(), 2);
        assert!(rs.from_word(&Word(vec![3])).is_err());
    }

    #[test]
    fn reduced_words_a2() {
        let rs = a2();
        assert_eq!(rs.reduced_word(&w(&rs, "2,1,2")), Word(vec![1, 2, 1]));
        assert_eq!(rs.reduced_word(&rs.identity()), Word(vec![]));
        let s2s1 = rs.from_one_line(&[3, 1, 2]).unwrap();
        assert_eq!(rs.reduced_word(&s2s1), Word(vec![2, 1]));
        assert_eq!(rs.reduced_words(&w(&rs, "1,2,1")), vec![Word(vec![1, 2, 1]), Word(vec![2, 1, 2])]);
    }

    #[test]
    fn one_line_a2() {
        let rs = a2();
        let cases = [("1", [2, 1, 3]), ("2", [1, 3, 2]), ("1,2", [2, 3, 1]), ("2,1", [3, 1, 2]), ("1,2,1", [3, 2, 1])];
        for (word, perm) in cases {
            assert_eq!(rs.one_line(&w(&rs, word)).unwrap(), perm.to_vec(), "{word}");
            assert_eq!(rs.from_one_line(&perm).unwrap(), w(&rs, word));
        }
        assert_eq!(format_one_line(&[2, 3, 1]), "(231)");
    }

    #[test]
    fn products() {
        let rs = a2();
        let s1 = w(&rs, "1");
        let s2 = w(&rs, "2");
        let s1s2 = rs.multiply(&s1, &s2).unwrap();
        assert_eq!(rs.one_line(&s1s2).unwrap(), vec![2, 3, 1]);
        let w0 = w(&rs, "1,2,1");
        assert!(rs.multiply(&w0, &w0).unwrap().is_identity());
        let u = w(&rs, "1,2");
        assert!(rs.multiply(&u, &rs.inverse(&u)).unwrap().is_identity());
        let b3 = RootSystem::from_type_str("B3").unwrap();
        assert!(rs.multiply(&u, &b3.identity()).is_err());
    }

    #[test]
    fn descents() {
        let rs = a2();
        let w0 = w(&rs, "1,2,1");
        assert!(rs.descent(&w0, 1, Side::Right).unwrap());
        assert!(!rs.descent(&rs.identity(), 1, Side::Right).unwrap());
        assert!(!rs.descent(&w(&rs, "1,2"), 1, Side::Right).unwrap());
        assert!(rs.descent(&w(&rs, "1,2"), 1, Side::Left).unwrap());
        assert!(rs.descent(&w0, 3, Side::Right).is_err());
    }

    #[test]
    fn bruhat_a2() {
        let rs = a2();
        assert!(rs.bruhat_leq(&rs.identity(), &w(&rs, "1,2")));
        assert!(!rs.bruhat_leq(&w(&rs, "1"), &w(&rs, "2")));
        assert!(rs.bruhat_leq(&w(&rs, "2"), &w(&rs, "1,2")));
        assert!(!rs.bruhat_leq(&w(&rs, "1,2"), &w(&rs, "2,1")));
    }

    #[test]
    fn enumeration() {
        let rs = a2();
        assert_eq!(rs.enumerate_up_to_length(3, 100).unwrap().len(), 6);
        assert_eq!(rs.enumerate_up_to_length(0, 100).unwrap(), vec![rs.identity()]);
        let l1 = rs.enumerate_up_to_length(1, 100).unwrap();
        assert_eq!(l1, vec![rs.identity(), w(&rs, "1"), w(&rs, "2")]);
        assert!(rs.enumerate_up_to_length(3, 4).is_err());
        let a3 = RootSystem::from_type_str("A3").unwrap();
        assert_eq!(a3.enumerate_up_to_length(6, 100).unwrap().len(), 24);
        let e8 = RootSystem::from_type_str("E8").unwrap();
        assert!(e8.all_elements(10_000).is_err());
    }

    #[test]
    fn reflections() {
        let rs = a2();
        let a1 = Weight::simple_root(2, 1);
        assert_eq!(rs.reflection(&a1).unwrap(), w(&rs, "1"));
        let hi = Weight::from_ints(&[1, 1]);
        let s = rs.reflection(&hi).unwrap();
        assert_eq!(s.length(), 3);
        assert!(rs.multiply(&s, &s).unwrap().is_identity());
        assert!(rs.reflection(&Weight::from_ints(&[2, 1])).is_err());
    }

    #[test]
    fn inversion_roots_e8() {
        let rs = RootSystem::from_type_str("E8").unwrap();
        let roots = rs.inversion_roots(&w(&rs, "4,2"));
        assert_eq!(roots, vec![Weight::simple_root(8, 4), Weight::from_ints(&[0, 1, 0, 1, 0, 0, 0, 0])]);
        assert_eq!(rs.reduced_word(&w(&rs, "5,3,4,2")), Word(vec![3, 5, 4, 2]));
    }
}
