use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::expr::{parse_polynomial, render, Coords, Style};
use crate::polynomial::{divided_difference_fast, z_x, DoublePolynomial, Monomial};
use crate::root_system::{Family, RootSystem};
use crate::weyl::WeylElement;
use crate::Rational;

use super::{DEFAULT_ENUMERATION_CAP, DEFAULT_GROUP_BOUND};

/// How a [`SigmaTable`] was produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SigmaSource {
    /// Divided differences of `(1/|W|) prod_{beta > 0} (-beta)(x)`.
    Bgg,
    /// The monomial linear system, one degree at a time.
    LinearSystem,
    /// Schubert polynomials from `z_1^n z_2^{n-1} ... z_n` (type A only).
    TypeA,
}

impl fmt::Display for SigmaSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SigmaSource::Bgg => "bgg",
            SigmaSource::LinearSystem => "linear-system",
            SigmaSource::TypeA => "type-a",
        })
    }
}

impl FromStr for SigmaSource {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bgg" => Ok(SigmaSource::Bgg),
            "linear-system" => Ok(SigmaSource::LinearSystem),
            "type-a" => Ok(SigmaSource::TypeA),
            _ => Err(Error::Parse(format!("unknown sigma source {s:?}"))),
        }
    }
}

/// x-only representatives `sigma_w` of the ordinary Schubert classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaTable {
    n: usize,
    source: SigmaSource,
    entries: HashMap<WeylElement, DoublePolynomial>,
}

impl SigmaTable {
    pub fn new(n: usize, source: SigmaSource) -> Self {
        SigmaTable { n, source, entries: HashMap::new() }
    }

    pub fn source(&self) -> SigmaSource {
        self.source
    }

    pub fn get(&self, w: &WeylElement) -> Option<&DoublePolynomial> {
        self.entries.get(w)
    }

    pub fn insert(&mut self, w: WeylElement, sigma: DoublePolynomial) -> Result<()> {
        if !sigma.is_x_only() {
            return Err(Error::Precondition(format!("sigma must be x-only, got {sigma}")));
        }
        if sigma.rank() != self.n {
            return Err(Error::RankMismatch(sigma.rank(), self.n));
        }
        self.entries.insert(w, sigma);
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&WeylElement, &DoublePolynomial)> {
        self.entries.iter()
    }

    /// First line `source: <tag>`, then `word: polynomial` lines in
    /// `(length, word)` order.
    pub fn to_text(&self, rs: &RootSystem, style: Style) -> String {
        let mut rows: Vec<_> = self.entries.iter().map(|(w, p)| (rs.sort_key(w), p)).collect();
        rows.sort_by(|a, b| a.0.cmp(&b.0));
        let mut out = format!("source: {}\n", self.source);
        for ((_, word), p) in rows {
            out.push_str(&format!("{word}: {}\n", render(rs, p, style)));
        }
        out
    }

    pub fn parse_text(rs: &RootSystem, text: &str, coords: Coords) -> Result<SigmaTable> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let head = lines.next().ok_or_else(|| Error::Parse("empty sigma table".into()))?;
        let source = head
            .strip_prefix("source:")
            .ok_or_else(|| Error::Parse(format!("expected 'source: <tag>', got {head:?}")))?
            .trim()
            .parse()?;
        let mut table = SigmaTable::new(rs.rank(), source);
        for line in lines {
            let (word, poly) = line
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("expected 'word: polynomial', got {line:?}")))?;
            table.insert(rs.parse_element(word)?, parse_polynomial(poly, rs, coords)?)?;
        }
        Ok(table)
    }
}

/// Fills in every `sigma_w` from the top class by `sigma_{w s_i} = Delta_i sigma_w`
/// on right descents.
fn descend_from_top(
    rs: &RootSystem,
    source: SigmaSource,
    elements: Vec<WeylElement>,
    top: DoublePolynomial,
) -> Result<SigmaTable> {
    let mut table = SigmaTable::new(rs.rank(), source);
    let w0 = elements.last().expect("nonempty").clone();
    table.insert(w0, top)?;
    // Breadth-first enumeration lists elements by increasing length; walk it backwards.
    for w in elements.iter().rev() {
        let sigma = table.entries.get(w).expect("filled from above").clone();
        for i in 1..=rs.rank() {
            if w.is_right_descent(i) {
                let ws = rs.times_simple(w, i);
                if !table.entries.contains_key(&ws) {
                    table.insert(ws, divided_difference_fast(rs, i, &sigma)?)?;
                }
            }
        }
    }
    Ok(table)
}

/// `sigma_{w0} = (1/|W|) prod_{beta > 0} (-beta(x))` and `sigma_w = Delta_{w^{-1} w0} sigma_{w0}`.
pub fn sigma_bgg(rs: &RootSystem, bound: u128) -> Result<SigmaTable> {
    let elements = rs.all_elements(bound)?;
    let n = rs.rank();
    let mut top = DoublePolynomial::constant(n, Rational::new(1.into(), rs.weyl_order().into()));
    for beta in rs.positive_roots() {
        top = &top * &-&crate::polynomial::x_linear(rs, beta);
    }
    descend_from_top(rs, SigmaSource::Bgg, elements, top)
}

/// Schubert polynomials: `sigma_{w0} = z_1^n z_2^{n-1} ... z_n` in the x-variables.
pub fn sigma_type_a(rs: &RootSystem, bound: u128) -> Result<SigmaTable> {
    if rs.cartan_type().family != Family::A {
        return Err(Error::Precondition(format!("type-A Schubert polynomials need type A, not {}", rs.cartan_type())));
    }
    let elements = rs.all_elements(bound)?;
    let n = rs.rank();
    let mut top = DoublePolynomial::one(n);
    for k in 1..=n {
        top = &top * &z_x(n, k).pow((n + 1 - k) as u32);
    }
    descend_from_top(rs, SigmaSource::TypeA, elements, top)
}

/// x-only monomials of total degree `k`, highest first in the canonical order.
fn x_monomials(n: usize, k: u32) -> Vec<Monomial> {
    fn rec(n: usize, slot: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if slot == n - 1 {
            cur[n + slot] = left;
            out.push(Monomial(cur.clone()));
            cur[n + slot] = 0;
            return;
        }
        for e in 0..=left {
            cur[n + slot] = e;
            rec(n, slot + 1, left - e, cur, out);
        }
        cur[n + slot] = 0;
    }
    let mut out = Vec::new();
    rec(n, 0, k, &mut vec![0; 2 * n], &mut out);
    out.sort();
    out.reverse();
    out
}

/// For each element after `e`, its smallest left descent `i` and the index
/// of `s_i w`, so that `Delta_w = Delta_i Delta_{s_i w}`.
pub(crate) fn left_peel_steps(rs: &RootSystem, elements: &[WeylElement]) -> Vec<(usize, usize)> {
    let index: HashMap<&WeylElement, usize> = elements.iter().enumerate().map(|(k, w)| (w, k)).collect();
    elements
        .iter()
        .skip(1)
        .map(|w| {
            let i = (1..=rs.rank()).find(|&i| rs.is_left_descent(w, i)).expect("w != e");
            (i, index[&rs.simple_times(i, w)])
        })
        .collect()
}

/// Ordinary divided differences `Delta_v(p)` for all `v` of length `k`,
/// where `p` has degree `k`, so each value is a constant. `elements`
/// starts at `e` and is ordered by length.
fn full_divided_differences(
    rs: &RootSystem,
    elements: &[WeylElement],
    steps: &[(usize, usize)],
    k: usize,
    p: &DoublePolynomial,
) -> Result<Vec<Rational>> {
    let mut d: Vec<Option<DoublePolynomial>> = vec![None; elements.len()];
    d[0] = Some(p.clone());
    for (j, &(i, parent)) in steps.iter().enumerate() {
        if let Some(g) = &d[parent] {
            let dg = divided_difference_fast(rs, i, g)?;
            if !dg.is_zero() {
                d[j + 1] = Some(dg);
            }
        }
    }
    Ok(elements
        .iter()
        .zip(&d)
        .filter(|(w, _)| w.length() == k)
        .map(|(_, g)| g.as_ref().map(|g| g.constant_term()).unwrap_or_else(Rational::zero))
        .collect())
}

/// Inverse of a square rational matrix by Gauss-Jordan elimination.
fn invert(mut a: Vec<Vec<Rational>>) -> Option<Vec<Vec<Rational>>> {
    let m = a.len();
    let mut inv: Vec<Vec<Rational>> =
        (0..m).map(|r| (0..m).map(|c| if r == c { Rational::one() } else { Rational::zero() }).collect()).collect();
    for col in 0..m {
        let piv = (col..m).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        inv.swap(col, piv);
        let scale = a[col][col].recip();
        for c in 0..m {
            a[col][c] *= &scale;
            inv[col][c] *= &scale;
        }
        for r in 0..m {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..m {
                    let (x, y) = (&a[col][c] * &f, &inv[col][c] * &f);
                    a[r][c] -= x;
                    inv[r][c] -= y;
                }
            }
        }
    }
    Some(inv)
}

/// `sigma_v` for every `v` of length `k` from `x_J = sum_v Delta_v(x_J) sigma_v`.
///
/// The system is underdetermined; the solution used is supported on the
/// first monomials, in descending canonical order, whose rows of
/// `Delta_v(x_J)` are linearly independent.
pub fn sigma_linear_system(rs: &RootSystem, k: usize) -> Result<SigmaTable> {
    let n = rs.rank();
    let all = rs.enumerate_up_to_length(k, DEFAULT_ENUMERATION_CAP)?;
    let split = all.iter().position(|w| w.length() == k).unwrap_or(all.len());
    let layer = &all[split..];
    let mut table = SigmaTable::new(n, SigmaSource::LinearSystem);
    let m = layer.len();
    if m == 0 {
        return Ok(table);
    }

    let steps = left_peel_steps(rs, &all);
    let mut chosen: Vec<(Monomial, Vec<Rational>)> = Vec::with_capacity(m);
    // Row-echelon basis of the chosen rows, keyed by pivot column.
    let mut echelon: Vec<(usize, Vec<Rational>)> = Vec::with_capacity(m);
    for mono in x_monomials(n, k as u32) {
        if chosen.len() == m {
            break;
        }
        let p = DoublePolynomial::from_terms(n, [(mono.clone(), Rational::one())]);
        let row = full_divided_differences(rs, &all, &steps, k, &p)?;
        let mut r = row.clone();
        for (pc, b) in &echelon {
            if !r[*pc].is_zero() {
                let f = &r[*pc] / &b[*pc];
                for c in 0..m {
                    let x = &b[c] * &f;
                    r[c] -= x;
                }
            }
        }
        if let Some(pc) = r.iter().position(|x| !x.is_zero()) {
            echelon.push((pc, r));
            chosen.push((mono, row));
        }
    }
    if chosen.len() < m {
        return Err(Error::InconsistentSystem(k));
    }
    let square: Vec<Vec<Rational>> = chosen.iter().map(|(_, row)| row.clone()).collect();
    // x_R = M_R sigma with M_R[J][v] = Delta_v(x_J), so sigma = M_R^{-1} x_R.
    let inv = invert(square).ok_or(Error::InconsistentSystem(k))?;
    for (v, w) in layer.iter().enumerate() {
        let sigma = DoublePolynomial::from_terms(
            n,
            chosen.iter().enumerate().map(|(j, (mono, _))| (mono.clone(), inv[v][j].clone())),
        );
        table.insert(w.clone(), sigma)?;
    }
    Ok(table)
}

/// Particular solution of `A y = b` for each right-hand side in `rhs`, with
/// free variables set to zero. `None` if some system is inconsistent.
fn solve_many(mut a: Vec<Vec<Rational>>, mut rhs: Vec<Vec<Rational>>, unknowns: usize) -> Option<Vec<Vec<Rational>>> {
    let rows = a.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..unknowns {
        let Some(p) = (r..rows).find(|&q| !a[q][col].is_zero()) else { continue };
        a.swap(r, p);
        for b in rhs.iter_mut() {
            b.swap(r, p);
        }
        let scale = a[r][col].recip();
        for x in &mut a[r][col..unknowns] {
            *x *= &scale;
        }
        for b in rhs.iter_mut() {
            b[r] *= &scale;
        }
        let pivot_row = a[r][col..unknowns].to_vec();
        for q in 0..rows {
            if q != r && !a[q][col].is_zero() {
                let f = a[q][col].clone();
                for (x, p) in a[q][col..unknowns].iter_mut().zip(&pivot_row) {
                    *x -= p * &f;
                }
                for b in rhs.iter_mut() {
                    let x = &b[r] * &f;
                    b[q] -= x;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    let mut out = Vec::with_capacity(rhs.len());
    for b in rhs {
        if b[r..].iter().any(|x| !x.is_zero()) {
            return None;
        }
        let mut y = vec![Rational::zero(); unknowns];
        for (row, &col) in pivots.iter().enumerate() {
            y[col] = b[row].clone();
        }
        out.push(y);
    }
    Some(out)
}

/// Adjusts the degree-`k` entries so that `Delta_i sigma_w = sigma_{w s_i}`
/// when `w s_i < w` and `0` otherwise, given compatible entries of degree
/// `k - 1`. Entries that already comply are kept; the others receive the
/// correction `g` solving `Delta_i g = residual_i` with free monomials set
/// to zero. The correction is unique up to W-invariants.
fn make_compatible(rs: &RootSystem, table: &mut SigmaTable, layer: &[WeylElement], k: usize) -> Result<()> {
    let n = rs.rank();
    let mut pending: Vec<(&WeylElement, Vec<DoublePolynomial>)> = Vec::new();
    for w in layer {
        let sigma = table.entries[w].clone();
        let mut residuals = Vec::with_capacity(n);
        for i in 1..=n {
            let target = if w.is_right_descent(i) {
                table.entries[&rs.times_simple(w, i)].clone()
            } else {
                DoublePolynomial::zero(n)
            };
            residuals.push(&target - &divided_difference_fast(rs, i, &sigma)?);
        }
        if residuals.iter().any(|r| !r.is_zero()) {
            pending.push((w, residuals));
        }
    }
    if pending.is_empty() {
        return Ok(());
    }
    let unknowns = x_monomials(n, k as u32);
    let lower = x_monomials(n, k as u32 - 1);
    let row_of: HashMap<&Monomial, usize> = lower.iter().enumerate().map(|(j, m)| (m, j)).collect();
    let rows = n * lower.len();
    let mut a = vec![vec![Rational::zero(); unknowns.len()]; rows];
    for (c, mono) in unknowns.iter().enumerate() {
        let p = DoublePolynomial::from_terms(n, [(mono.clone(), Rational::one())]);
        for i in 1..=n {
            for (m, coeff) in divided_difference_fast(rs, i, &p)?.terms() {
                a[(i - 1) * lower.len() + row_of[m]][c] = coeff.clone();
            }
        }
    }
    let rhs: Vec<Vec<Rational>> = pending
        .iter()
        .map(|(_, residuals)| {
            let mut b = vec![Rational::zero(); rows];
            for (i, r) in residuals.iter().enumerate() {
                for (m, coeff) in r.terms() {
                    b[i * lower.len() + row_of[m]] = coeff.clone();
                }
            }
            b
        })
        .collect();
    let solutions = solve_many(a, rhs, unknowns.len()).ok_or(Error::InconsistentSystem(k))?;
    for ((w, _), y) in pending.iter().zip(solutions) {
        let g = DoublePolynomial::from_terms(n, unknowns.iter().cloned().zip(y));
        let fixed = &table.entries[*w] + &g;
        table.entries.insert((*w).clone(), fixed);
    }
    Ok(())
}

/// A table covering every element of length at most `max_length`: Schubert
/// polynomials in type A when the group is small enough, the linear system
/// otherwise.
///
/// The double Schubert formula needs a family closed under divided
/// differences, `Delta_i sigma_w = sigma_{w s_i}` on right descents. Each
/// degree of the linear system is therefore adjusted against the one below.
pub fn sigma_up_to_length(rs: &RootSystem, max_length: usize) -> Result<SigmaTable> {
    if rs.cartan_type().family == Family::A && rs.weyl_order() <= DEFAULT_GROUP_BOUND {
        return sigma_type_a(rs, DEFAULT_GROUP_BOUND);
    }
    let mut table = SigmaTable::new(rs.rank(), SigmaSource::LinearSystem);
    for k in 0..=max_length.min(rs.positive_roots().len()) {
        let part = sigma_linear_system(rs, k)?;
        let layer: Vec<WeylElement> = part.entries.keys().cloned().collect();
        table.entries.extend(part.entries);
        if k >= 2 {
            make_compatible(rs, &mut table, &layer, k)?;
        }
    }
    Ok(table)
}

/// True when `Delta_i sigma_w` equals `sigma_{w s_i}` on right descents and
/// vanishes otherwise, for every entry whose lower neighbours are present.
pub fn is_compatible(rs: &RootSystem, table: &SigmaTable) -> Result<bool> {
    for (w, sigma) in table.iter() {
        for i in 1..=rs.rank() {
            let d = divided_difference_fast(rs, i, sigma)?;
            let ok = if w.is_right_descent(i) {
                match table.get(&rs.times_simple(w, i)) {
                    Some(t) => *t == d,
                    None => true,
                }
            } else {
                d.is_zero()
            };
            if !ok {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `Delta_v(sigma_w)` evaluated at `x = 0` for `l(v) = l(w)`; a correct
/// table gives the Kronecker delta.
pub fn sigma_pairing(rs: &RootSystem, table: &SigmaTable, v: &WeylElement, w: &WeylElement) -> Result<Rational> {
    let sigma = table.get(w).ok_or_else(|| Error::MissingSigma(rs.reduced_word(w).to_string()))?;
    let mut cur = sigma.clone();
    for &i in rs.reduced_word(v).letters().iter().rev() {
        cur = divided_difference_fast(rs, i, &cur)?;
    }
    Ok(cur.constant_term())
}
