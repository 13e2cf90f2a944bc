use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::expr::{parse_polynomial, render, Coords, Style};
use crate::polynomial::{t_linear, DoublePolynomial};
use crate::root_system::{RootSystem, Weight};
use crate::weyl::{WeylElement, Word};

/// `sum_w d_w X_w` with t-only coefficients; zero coefficients are not stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchubertSum {
    n: usize,
    coeffs: HashMap<WeylElement, DoublePolynomial>,
}

impl SchubertSum {
    pub fn zero(n: usize) -> Self {
        SchubertSum { n, coeffs: HashMap::new() }
    }

    /// The class `X_w`.
    pub fn schubert_class(w: &WeylElement) -> Self {
        let mut s = Self::zero(w.rank());
        s.coeffs.insert(w.clone(), DoublePolynomial::one(w.rank()));
        s
    }

    /// The class `g(t) X_e`.
    pub fn constant(rs: &RootSystem, g: DoublePolynomial) -> Result<Self> {
        let mut s = Self::zero(rs.rank());
        s.add_term(&rs.identity(), &g)?;
        Ok(s)
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Adds `coeff * X_w`.
    pub fn add_term(&mut self, w: &WeylElement, coeff: &DoublePolynomial) -> Result<()> {
        if !coeff.is_t_only() {
            return Err(Error::NotTOnly(coeff.to_string()));
        }
        if coeff.rank() != self.n || w.rank() != self.n {
            return Err(Error::RankMismatch(coeff.rank(), self.n));
        }
        self.add_unchecked(w, coeff);
        Ok(())
    }

    pub(crate) fn add_unchecked(&mut self, w: &WeylElement, coeff: &DoublePolynomial) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(w.clone()).or_insert_with(|| DoublePolynomial::zero(self.n));
        *entry = &*entry + coeff;
        if entry.is_zero() {
            self.coeffs.remove(w);
        }
    }

    pub fn coefficient(&self, w: &WeylElement) -> DoublePolynomial {
        self.coeffs.get(w).cloned().unwrap_or_else(|| DoublePolynomial::zero(self.n))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&WeylElement, &DoublePolynomial)> {
        self.coeffs.iter()
    }

    /// Terms in `(length, canonical word)` order.
    pub fn sorted_terms(&self, rs: &RootSystem) -> Vec<(Word, &WeylElement, &DoublePolynomial)> {
        let mut v: Vec<_> = self.coeffs.iter().map(|(w, c)| (rs.sort_key(w), w, c)).collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v.into_iter().map(|((_, word), w, c)| (word, w, c)).collect()
    }

    pub fn add(&self, other: &SchubertSum) -> SchubertSum {
        let mut out = self.clone();
        for (w, c) in &other.coeffs {
            out.add_unchecked(w, c);
        }
        out
    }

    pub fn sub(&self, other: &SchubertSum) -> SchubertSum {
        let mut out = self.clone();
        for (w, c) in &other.coeffs {
            out.add_unchecked(w, &-c);
        }
        out
    }

    /// Multiplies every coefficient by a t-only polynomial.
    pub fn scale(&self, g: &DoublePolynomial) -> Result<SchubertSum> {
        if !g.is_t_only() {
            return Err(Error::NotTOnly(g.to_string()));
        }
        let mut out = SchubertSum::zero(self.n);
        for (w, c) in &self.coeffs {
            out.add_unchecked(w, &(c * g));
        }
        Ok(out)
    }

    /// True when `deg(d_w) + l(w)` is the same for every term.
    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.coeffs.iter().map(|(w, c)| {
            if !c.is_homogeneous() {
                None
            } else {
                c.degree().map(|d| d as usize + w.length())
            }
        });
        match degs.next() {
            None => true,
            Some(None) => false,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// One `word: polynomial` line per nonzero term, in `(length, word)` order.
    pub fn to_text(&self, rs: &RootSystem, style: Style) -> String {
        let mut out = String::new();
        for (word, _, c) in self.sorted_terms(rs) {
            out.push_str(&format!("{word}: {}\n", render(rs, c, style)));
        }
        out
    }

    /// Inverse of [`SchubertSum::to_text`]. Blank lines and `#` comments are
    /// skipped; repeated words are summed.
    pub fn parse_text(rs: &RootSystem, text: &str, coords: Coords) -> Result<SchubertSum> {
        let mut s = SchubertSum::zero(rs.rank());
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (word, poly) = line
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("expected 'word: polynomial', got {line:?}")))?;
            let w = rs.parse_element(word)?;
            let c = parse_polynomial(poly, rs, coords)?;
            s.add_term(&w, &c)?;
        }
        Ok(s)
    }
}

/// `Delta_i X_w = X_{w s_i}` on right descents and `0` otherwise, extended
/// t-linearly.
pub fn dd_schubert(rs: &RootSystem, i: usize, s: &SchubertSum) -> Result<SchubertSum> {
    rs.check_index(i)?;
    let mut out = SchubertSum::zero(rs.rank());
    for (w, c) in s.iter() {
        if w.is_right_descent(i) {
            out.add_unchecked(&rs.times_simple(w, i), c);
        }
    }
    Ok(out)
}

fn positive_reflections(rs: &RootSystem) -> Vec<(Weight, WeylElement)> {
    rs.positive_roots().iter().map(|b| (b.clone(), rs.reflection(b).expect("positive root"))).collect()
}

/// Equivariant Chevalley formula:
/// `lambda(x) X_w = w(lambda)(t) X_w - sum_beta <lambda, beta^vee> X_{w s_beta}`,
/// over positive roots `beta` with `l(w s_beta) = l(w) + 1`.
pub fn chevalley_multiply(rs: &RootSystem, lambda: &Weight, s: &SchubertSum) -> Result<SchubertSum> {
    rs.check_weight(lambda)?;
    let n = rs.rank();
    let mut out = SchubertSum::zero(n);
    if lambda.is_zero() {
        return Ok(out);
    }
    let refl = positive_reflections(rs);
    for (w, c) in s.iter() {
        out.add_unchecked(w, &(c * &t_linear(rs, &w.apply(lambda))));
        for (beta, sb) in &refl {
            let wsb = rs.multiply(w, sb)?;
            if wsb.length() == w.length() + 1 {
                let k = rs.coroot_pair(lambda, beta)?;
                out.add_unchecked(&wsb, &c.scale(&-k));
            }
        }
    }
    Ok(out)
}

/// The action of `s_i` on Schubert classes. On a descent `l(w s_i) < l(w)`:
/// `s_i X_w = X_w - w(alpha_i)(t) X_{w s_i} - sum_beta <alpha_i, beta^vee> X_{w s_i s_beta}`
/// with `beta` running over positive roots such that `l(w s_i s_beta) = l(w)`
/// (the Chevalley condition `l(v s_beta) = l(v) + 1` at `v = w s_i`).
/// Ascents are fixed.
pub fn weyl_act_schubert(rs: &RootSystem, i: usize, s: &SchubertSum) -> Result<SchubertSum> {
    rs.check_index(i)?;
    let n = rs.rank();
    let alpha = Weight::simple_root(n, i);
    let refl = positive_reflections(rs);
    let mut out = SchubertSum::zero(n);
    for (w, c) in s.iter() {
        out.add_unchecked(w, c);
        if !w.is_right_descent(i) {
            continue;
        }
        let v = rs.times_simple(w, i);
        out.add_unchecked(&v, &-&(c * &t_linear(rs, &w.apply(&alpha))));
        for (beta, sb) in &refl {
            let vsb = rs.multiply(&v, sb)?;
            if vsb.length() == w.length() {
                let k = rs.coroot_pair(&alpha, beta)?;
                out.add_unchecked(&vsb, &c.scale(&-k));
            }
        }
    }
    Ok(out)
}
