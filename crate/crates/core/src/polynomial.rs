//! Exact sparse polynomials in `t_1..t_n` and `x_1..x_n`.
//!
//! Each generator stands for a fundamental weight: `t_i = omega_i(t)` and
//! `x_i = omega_i(x)`. Every generator has cohomological degree 2; the
//! degree reported here is the polynomial degree.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::root_system::{RootSystem, Weight};
use crate::weyl::WeylElement;
use crate::Rational;

/// Exponent vector: `n` t-exponents followed by `n` x-exponents.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; 2 * n])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn split(&self) -> (&[u32], &[u32]) {
        self.0.split_at(self.0.len() / 2)
    }
}

impl Ord for Monomial {
    /// Graded lexicographic: total degree first, then the exponent vector
    /// compared from `t_1` onwards.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DoublePolynomial {
    n: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl fmt::Debug for DoublePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl DoublePolynomial {
    pub fn zero(n: usize) -> Self {
        DoublePolynomial { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, Rational::one())
    }

    pub fn constant(n: usize, c: Rational) -> Self {
        let mut p = Self::zero(n);
        p.add_term(Monomial::one(n), c);
        p
    }

    pub fn from_int(n: usize, c: i64) -> Self {
        Self::constant(n, Rational::from_integer(c.into()))
    }

    /// The generator `t_i` (1-based).
    pub fn t(n: usize, i: usize) -> Self {
        Self::generator(n, i - 1)
    }

    /// The generator `x_i` (1-based).
    pub fn x(n: usize, i: usize) -> Self {
        Self::generator(n, n + i - 1)
    }

    fn generator(n: usize, slot: usize) -> Self {
        let mut m = Monomial::one(n);
        m.0[slot] = 1;
        let mut p = Self::zero(n);
        p.add_term(m, Rational::one());
        p
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Self::zero(n);
        for (m, c) in terms {
            assert_eq!(m.0.len(), 2 * n, "exponent vector length");
            p.add_term(m, c);
        }
        p
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Monomial::one(self.n))
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_rank(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            Err(Error::RankMismatch(self.n, other.n))
        } else {
            Ok(())
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        Ok(self + other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        Ok(self * other)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        DoublePolynomial { n: self.n, terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one(self.n);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                out = &out * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        out
    }

    /// Total polynomial degree; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn x_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.split().1.iter().sum()).max().unwrap_or(0)
    }

    pub fn t_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.split().0.iter().sum()).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn is_t_only(&self) -> bool {
        self.terms.keys().all(|m| m.split().1.iter().all(|&e| e == 0))
    }

    pub fn is_x_only(&self) -> bool {
        self.terms.keys().all(|m| m.split().0.iter().all(|&e| e == 0))
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    /// Exchanges the two variable families.
    pub fn swap_families(&self) -> Self {
        let n = self.n;
        self.map_monomials(|m| {
            let (t, x) = m.split();
            let mut v = x.to_vec();
            v.extend_from_slice(t);
            debug_assert_eq!(v.len(), 2 * n);
            Monomial(v)
        })
    }

    fn map_monomials(&self, f: impl Fn(&Monomial) -> Monomial) -> Self {
        let mut out = Self::zero(self.n);
        for (m, c) in &self.terms {
            out.add_term(f(m), c.clone());
        }
        out
    }

    /// `ev`: substitutes `x_i <- t_i`.
    pub fn evaluate_x_to_t(&self) -> Self {
        let n = self.n;
        self.map_monomials(|m| {
            let (t, x) = m.split();
            let mut v: Vec<u32> = t.iter().zip(x).map(|(a, b)| a + b).collect();
            v.resize(2 * n, 0);
            Monomial(v)
        })
    }

    /// Sets every t-variable to zero.
    pub fn evaluate_t_at_zero(&self) -> Self {
        let mut out = Self::zero(self.n);
        for (m, c) in &self.terms {
            if m.split().0.iter().all(|&e| e == 0) {
                out.add_term(m.clone(), c.clone());
            }
        }
        out
    }

    /// Substitutes every generator by a polynomial. `None` keeps a family as is.
    pub fn substitute(&self, t_images: Option<&[DoublePolynomial]>, x_images: Option<&[DoublePolynomial]>) -> Self {
        let n = self.n;
        let target_rank =
            t_images.and_then(|v| v.first()).or_else(|| x_images.and_then(|v| v.first())).map_or(n, |p| p.n);
        let mut powers: HashMap<(usize, u32), DoublePolynomial> = HashMap::new();
        let mut power = |slot: usize, e: u32| -> DoublePolynomial {
            powers
                .entry((slot, e))
                .or_insert_with(|| {
                    let base = if slot < n {
                        t_images.map(|v| v[slot].clone())
                    } else {
                        x_images.map(|v| v[slot - n].clone())
                    };
                    match base {
                        Some(b) => b.pow(e),
                        None => {
                            let mut m = Monomial::one(target_rank);
                            m.0[slot] = e;
                            DoublePolynomial::from_terms(target_rank, [(m, Rational::one())])
                        }
                    }
                })
                .clone()
        };
        let mut out = Self::zero(target_rank);
        for (m, c) in &self.terms {
            let mut term = Self::constant(target_rank, c.clone());
            for (slot, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    term = &term * &power(slot, e);
                }
            }
            out = &out + &term;
        }
        out
    }

    /// Evaluates a t-only polynomial on rational values of `t_1..t_n`.
    pub fn evaluate_t(&self, values: &[Rational]) -> Rational {
        let mut s = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, &e) in m.split().0.iter().enumerate() {
                for _ in 0..e {
                    v *= &values[i];
                }
            }
            s += v;
        }
        s
    }

    /// Decomposes by the exponent of one generator slot:
    /// `self = sum_e parts[e] * var^e` with `parts[e]` free of the variable.
    fn split_by_slot(&self, slot: usize) -> BTreeMap<u32, DoublePolynomial> {
        let mut parts: BTreeMap<u32, DoublePolynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.0[slot];
            let mut rest = m.clone();
            rest.0[slot] = 0;
            parts.entry(e).or_insert_with(|| Self::zero(self.n)).add_term(rest, c.clone());
        }
        parts
    }

    fn times_slot_power(&self, slot: usize, e: u32) -> Self {
        self.map_monomials(|m| {
            let mut v = m.clone();
            v.0[slot] += e;
            v
        })
    }

    /// Exact division by a nonzero homogeneous linear polynomial.
    ///
    /// Eliminates along the first generator with a nonzero coefficient in
    /// `d`. A nonzero remainder is returned as [`Error::NotDivisible`].
    pub fn exact_divide(&self, d: &DoublePolynomial) -> Result<Self> {
        self.check_rank(d)?;
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if d.terms.keys().any(|m| m.degree() != 1) {
            return Err(Error::Precondition(format!("divisor {d} is not a linear form")));
        }
        if self.is_zero() {
            return Ok(Self::zero(self.n));
        }
        let (lead_mon, lead_coef) = d.terms.iter().next_back().unwrap();
        let slot = lead_mon.0.iter().position(|&e| e == 1).unwrap();
        let mut rest = d.clone();
        rest.terms.remove(lead_mon);
        let inv = lead_coef.recip();

        let mut parts = self.split_by_slot(slot);
        let top = *parts.keys().next_back().unwrap();
        let mut quotient = Self::zero(self.n);
        // f = sum_e f_e v^e, d = c v + r. Synthetic division from the top.
        for e in (1..=top).rev() {
            let cur = parts.remove(&e).unwrap_or_else(|| Self::zero(self.n));
            if cur.is_zero() {
                continue;
            }
            let q = cur.scale(&inv);
            let lower = parts.entry(e - 1).or_insert_with(|| Self::zero(self.n));
            *lower = &*lower - &(&rest * &q);
            quotient = &quotient + &q.times_slot_power(slot, e - 1);
        }
        let remainder = parts.remove(&0).unwrap_or_else(|| Self::zero(self.n));
        if !remainder.is_zero() {
            return Err(Error::NotDivisible { remainder });
        }
        Ok(quotient)
    }

    /// Exact division by a product of linear forms.
    pub fn exact_divide_by_product(&self, factors: &[DoublePolynomial]) -> Result<Self> {
        let mut q = self.clone();
        for f in factors {
            q = q.exact_divide(f)?;
        }
        Ok(q)
    }
}

impl Add for &DoublePolynomial {
    type Output = DoublePolynomial;

    fn add(self, rhs: &DoublePolynomial) -> DoublePolynomial {
        assert_eq!(self.n, rhs.n, "rank mismatch");
        let (mut out, other) =
            if self.terms.len() >= rhs.terms.len() { (self.clone(), rhs) } else { (rhs.clone(), self) };
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &DoublePolynomial {
    type Output = DoublePolynomial;

    fn sub(self, rhs: &DoublePolynomial) -> DoublePolynomial {
        assert_eq!(self.n, rhs.n, "rank mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Neg for &DoublePolynomial {
    type Output = DoublePolynomial;

    fn neg(self) -> DoublePolynomial {
        DoublePolynomial { n: self.n, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Mul for &DoublePolynomial {
    type Output = DoublePolynomial;

    fn mul(self, rhs: &DoublePolynomial) -> DoublePolynomial {
        assert_eq!(self.n, rhs.n, "rank mismatch");
        let mut acc: HashMap<Monomial, Rational> = HashMap::with_capacity(self.terms.len() * rhs.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let m = ma.mul(mb);
                let c = ca * cb;
                match acc.get_mut(&m) {
                    Some(v) => *v += c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        DoublePolynomial { n: self.n, terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for DoublePolynomial {
            type Output = DoublePolynomial;
            fn $f(self, rhs: DoublePolynomial) -> DoublePolynomial {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for DoublePolynomial {
    type Output = DoublePolynomial;
    fn neg(self) -> DoublePolynomial {
        -&self
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, c: &Rational) -> fmt::Result {
    if c.is_integer() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

/// Writes a polynomial with the given variable names, highest graded-lex
/// term first: `t1^2*t2-3/2*x1+1`.
pub(crate) fn write_with_names(
    f: &mut fmt::Formatter<'_>,
    p: &DoublePolynomial,
    names: &dyn Fn(usize) -> String,
) -> fmt::Result {
    if p.is_zero() {
        return write!(f, "0");
    }
    for (k, (m, c)) in p.terms.iter().rev().enumerate() {
        let neg = c.is_negative();
        if neg {
            write!(f, "-")?;
        } else if k > 0 {
            write!(f, "+")?;
        }
        let abs = c.abs();
        let vars: Vec<String> =
            m.0.iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(slot, &e)| if e == 1 { names(slot) } else { format!("{}^{e}", names(slot)) })
                .collect();
        if vars.is_empty() {
            write_rational(f, &abs)?;
        } else {
            if !abs.is_one() {
                write_rational(f, &abs)?;
                write!(f, "*")?;
            }
            write!(f, "{}", vars.join("*"))?;
        }
    }
    Ok(())
}

impl fmt::Display for DoublePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n;
        write_with_names(f, self, &|slot| {
            if slot < n {
                format!("t{}", slot + 1)
            } else {
                format!("x{}", slot - n + 1)
            }
        })
    }
}

/// A degree-1 form `lambda(t) + mu(x)` for weights `lambda`, `mu`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearForm {
    pub t_part: Weight,
    pub x_part: Weight,
}

impl LinearForm {
    pub fn t(lambda: Weight) -> Self {
        let n = lambda.rank();
        LinearForm { t_part: lambda, x_part: Weight::zero(n) }
    }

    pub fn x(lambda: Weight) -> Self {
        let n = lambda.rank();
        LinearForm { t_part: Weight::zero(n), x_part: lambda }
    }

    pub fn is_zero(&self) -> bool {
        self.t_part.is_zero() && self.x_part.is_zero()
    }

    pub fn to_polynomial(&self, rs: &RootSystem) -> DoublePolynomial {
        let n = rs.rank();
        let mut terms = Vec::new();
        for (family, w) in [(0, &self.t_part), (n, &self.x_part)] {
            for (i, c) in rs.to_fundamental_coords(w).into_iter().enumerate() {
                let mut m = Monomial::one(n);
                m.0[family + i] = 1;
                terms.push((m, c));
            }
        }
        DoublePolynomial::from_terms(n, terms)
    }
}

/// `lambda(t)` as a polynomial.
pub fn t_linear(rs: &RootSystem, lambda: &Weight) -> DoublePolynomial {
    LinearForm::t(lambda.clone()).to_polynomial(rs)
}

/// `lambda(x)` as a polynomial.
pub fn x_linear(rs: &RootSystem, lambda: &Weight) -> DoublePolynomial {
    LinearForm::x(lambda.clone()).to_polynomial(rs)
}

pub fn exact_divide(rs: &RootSystem, f: &DoublePolynomial, d: &LinearForm) -> Result<DoublePolynomial> {
    if d.is_zero() {
        return Err(Error::DivisionByZero);
    }
    f.exact_divide(&d.to_polynomial(rs))
}

/// Images `w(omega_i)(x)` for all `i`.
fn x_images(rs: &RootSystem, w: &WeylElement) -> Vec<DoublePolynomial> {
    (1..=rs.rank()).map(|i| x_linear(rs, &w.apply(&rs.fundamental_weight(i)))).collect()
}

/// Images `w(omega_i)(t)` for all `i`.
pub(crate) fn t_images(rs: &RootSystem, w: &WeylElement) -> Vec<DoublePolynomial> {
    (1..=rs.rank()).map(|i| t_linear(rs, &w.apply(&rs.fundamental_weight(i)))).collect()
}

/// The Weyl action on the x-variables; t-variables are untouched.
pub fn weyl_act_x(rs: &RootSystem, w: &WeylElement, f: &DoublePolynomial) -> DoublePolynomial {
    if w.is_identity() || f.is_t_only() {
        return f.clone();
    }
    f.substitute(None, Some(&x_images(rs, w)))
}

/// The Weyl action on the t-variables.
pub fn weyl_act_t(rs: &RootSystem, w: &WeylElement, f: &DoublePolynomial) -> DoublePolynomial {
    if w.is_identity() || f.is_constant() {
        return f.clone();
    }
    f.substitute(Some(&t_images(rs, w)), None)
}

/// `ev(v(f))`: substitutes `x_i <- v(omega_i)(t)`.
pub fn localize_borel(rs: &RootSystem, v: &WeylElement, f: &DoublePolynomial) -> DoublePolynomial {
    if f.is_t_only() {
        return f.clone();
    }
    let x_as_t = t_images(rs, v);
    let n = rs.rank();
    let mut out = DoublePolynomial::zero(n);
    let mut cache: HashMap<Vec<u32>, DoublePolynomial> = HashMap::new();
    for (m, c) in f.terms() {
        let (t, x) = m.split();
        let xpart = cache
            .entry(x.to_vec())
            .or_insert_with(|| {
                let mut acc = DoublePolynomial::one(n);
                for (i, &e) in x.iter().enumerate() {
                    if e > 0 {
                        acc = &acc * &x_as_t[i].pow(e);
                    }
                }
                acc
            })
            .clone();
        let mut tm = t.to_vec();
        tm.resize(2 * n, 0);
        let tpoly = DoublePolynomial::from_terms(n, [(Monomial(tm), c.clone())]);
        out = &out + &(&tpoly * &xpart);
    }
    out
}

/// `Delta_i f = (f - s_i f) / (-alpha_i(x))`, computed by exact division.
pub fn divided_difference_borel(rs: &RootSystem, i: usize, f: &DoublePolynomial) -> Result<DoublePolynomial> {
    rs.check_index(i)?;
    if f.is_zero() {
        return Ok(DoublePolynomial::zero(rs.rank()));
    }
    let si = rs.simple_reflection(i)?;
    let num = f - &weyl_act_x(rs, &si, f);
    let denom = -&x_linear(rs, &Weight::simple_root(rs.rank(), i));
    num.exact_divide(&denom)
}

/// `-(sum_{k=1}^{m} (omega_i - alpha_i)^{k-1} omega_i^{m-k})` in the x-variables,
/// i.e. `Delta_i(omega_i(x)^m)`.
fn power_kernel(rs: &RootSystem, i: usize, m: u32) -> DoublePolynomial {
    let n = rs.rank();
    if m == 0 {
        return DoublePolynomial::zero(n);
    }
    let a = DoublePolynomial::x(n, i);
    let b = &a - &x_linear(rs, &Weight::simple_root(n, i));
    let mut sum = DoublePolynomial::zero(n);
    let mut bpow = DoublePolynomial::one(n);
    for k in 1..=m {
        sum = &sum + &(&bpow * &a.pow(m - k));
        bpow = &bpow * &b;
    }
    -&sum
}

/// `Delta_i(g * omega_i(x)^m)` for `g` free of `x_i`, normalised to the same
/// sign as [`divided_difference_borel`].
pub fn leibniz_power_rule(rs: &RootSystem, i: usize, g: &DoublePolynomial, m: u32) -> Result<DoublePolynomial> {
    rs.check_index(i)?;
    let slot = rs.rank() + i - 1;
    if g.terms().any(|(mon, _)| mon.0[slot] > 0) {
        return Err(Error::Precondition(format!("{g} involves x{i}")));
    }
    Ok(g * &power_kernel(rs, i, m))
}

/// Fast `Delta_i`: decomposes `f` by powers of `x_i` and applies
/// [`leibniz_power_rule`] to each part.
pub fn divided_difference_fast(rs: &RootSystem, i: usize, f: &DoublePolynomial) -> Result<DoublePolynomial> {
    rs.check_index(i)?;
    let n = rs.rank();
    let slot = n + i - 1;
    let mut out = DoublePolynomial::zero(n);
    for (m, g) in f.split_by_slot(slot) {
        if m > 0 {
            out = &out + &(&g * &power_kernel(rs, i, m));
        }
    }
    Ok(out)
}

/// Type-A adapter: the t-image of `z_k = omega_{k-1} - omega_k`
/// (`omega_0 = omega_{n+1} = 0`), `1 <= k <= n+1`.
pub fn z_t(n: usize, k: usize) -> DoublePolynomial {
    z_generator(n, k, 0)
}

/// Type-A adapter: the x-image of `z_k`.
pub fn z_x(n: usize, k: usize) -> DoublePolynomial {
    z_generator(n, k, n)
}

fn z_generator(n: usize, k: usize, offset: usize) -> DoublePolynomial {
    let mut terms = Vec::new();
    if k >= 2 {
        let mut m = Monomial::one(n);
        m.0[offset + k - 2] = 1;
        terms.push((m, Rational::one()));
    }
    if k <= n {
        let mut m = Monomial::one(n);
        m.0[offset + k - 1] = 1;
        terms.push((m, -Rational::one()));
    }
    DoublePolynomial::from_terms(n, terms)
}

/// Rewrites a polynomial in the `z_1..z_n` coordinates of type `A_n`
/// (eliminating `z_{n+1}` via `omega_i = -(z_1 + ... + z_i)`). The result
/// uses the same slots, now read as `z`-indexed t and x variables.
pub fn to_z_coordinates(f: &DoublePolynomial) -> DoublePolynomial {
    let n = f.rank();
    let image = |offset: usize, i: usize| {
        let terms = (1..=i).map(|k| {
            let mut m = Monomial::one(n);
            m.0[offset + k - 1] = 1;
            (m, -Rational::one())
        });
        DoublePolynomial::from_terms(n, terms)
    };
    let t: Vec<_> = (1..=n).map(|i| image(0, i)).collect();
    let x: Vec<_> = (1..=n).map(|i| image(n, i)).collect();
    f.substitute(Some(&t), Some(&x))
}

/// Rewrites t- and x-variables in the simple-root basis
/// (`omega_i = sum_j Cinv[j][i] alpha_j`).
pub fn to_alpha_coordinates(rs: &RootSystem, f: &DoublePolynomial) -> DoublePolynomial {
    let n = rs.rank();
    let inv = rs.cartan_inverse();
    let image = |offset: usize, i: usize| {
        let terms = (0..n).map(|j| {
            let mut m = Monomial::one(n);
            m.0[offset + j] = 1;
            (m, inv[j][i].clone())
        });
        DoublePolynomial::from_terms(n, terms)
    };
    let t: Vec<_> = (0..n).map(|i| image(0, i)).collect();
    let x: Vec<_> = (0..n).map(|i| image(n, i)).collect();
    f.substitute(Some(&t), Some(&x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::{parse_polynomial, Coords};

    fn a2() -> RootSystem {
        RootSystem::from_type_str("A2").unwrap()
    }

    fn za(rs: &RootSystem, s: &str) -> DoublePolynomial {
        parse_polynomial(s, rs, Coords::TypeA).unwrap()
    }

    #[test]
    fn ring_basics() {
        let n = 2;
        let x1 = DoublePolynomial::x(n, 1);
        let t1 = DoublePolynomial::t(n, 1);
        let f = &(&x1 - &t1) * &(&x1 + &t1);
        assert_eq!(f, &x1.pow(2) - &t1.pow(2));
        assert_eq!(&f * &DoublePolynomial::one(n), f);
        assert!((&f - &f).is_zero());
        assert!(f.try_add(&DoublePolynomial::one(3)).is_err());
        assert_eq!(f.to_string(), "-t1^2+x1^2");
    }

    #[test]
    fn z_adapter() {
        let rs = a2();
        let n = 2;
        let sum = &(&z_t(n, 1) + &z_t(n, 2)) + &z_t(n, 3);
        assert!(sum.is_zero());
        assert_eq!(&z_t(n, 2) - &z_t(n, 1), t_linear(&rs, &Weight::simple_root(2, 1)));
        assert_eq!(&z_t(n, 3) - &z_t(n, 1), t_linear(&rs, &Weight::from_ints(&[1, 1])));
    }

    #[test]
    fn weyl_action_on_x() {
        let rs = a2();
        let s1 = rs.parse_element("1").unwrap();
        let w1 = DoublePolynomial::x(2, 1);
        let expect = &w1 - &x_linear(&rs, &Weight::simple_root(2, 1));
        assert_eq!(weyl_act_x(&rs, &s1, &w1), expect);
        assert_eq!(weyl_act_x(&rs, &rs.identity(), &w1), w1);
        let p = za(&rs, "x1*x2");
        assert_eq!(weyl_act_x(&rs, &s1, &p), p);
    }

    #[test]
    fn evaluation() {
        let rs = a2();
        assert!(za(&rs, "x1-t1").evaluate_x_to_t().is_zero());
        assert_eq!(za(&rs, "t1*x1*x2").evaluate_x_to_t(), za(&rs, "t1^2*t2"));
        let g = za(&rs, "t1*t3+t2");
        assert_eq!(g.evaluate_x_to_t(), g);
    }

    #[test]
    fn division() {
        let rs = a2();
        let f = za(&rs, "x1^2-t1^2");
        assert_eq!(f.exact_divide(&za(&rs, "x1-t1")).unwrap(), za(&rs, "x1+t1"));
        assert!(DoublePolynomial::zero(2).exact_divide(&za(&rs, "x1")).unwrap().is_zero());
        let g = za(&rs, "t1^2*t2-t1*t2*t3");
        let d = LinearForm::t(Weight::from_ints(&[-1, -1]));
        let q = exact_divide(&rs, &g, &d).unwrap();
        assert_eq!(q, za(&rs, "t1*t2"));
        match za(&rs, "t1^2+1").exact_divide(&za(&rs, "t1")) {
            Err(Error::NotDivisible { remainder }) => assert_eq!(remainder, DoublePolynomial::one(2)),
            other => panic!("{other:?}"),
        }
        assert!(matches!(f.exact_divide(&DoublePolynomial::zero(2)), Err(Error::DivisionByZero)));
        assert!(f.exact_divide(&za(&rs, "t1*t2")).is_err());
    }

    #[test]
    fn divided_differences_a2() {
        let rs = a2();
        let f = za(&rs, "t1*x1*x2");
        assert!(divided_difference_borel(&rs, 1, &f).unwrap().is_zero());
        let d2 = divided_difference_borel(&rs, 2, &f).unwrap();
        assert_eq!(d2, za(&rs, "t1*x1"));
        assert_eq!(divided_difference_borel(&rs, 1, &d2).unwrap(), za(&rs, "t1"));
        assert!(divided_difference_borel(&rs, 1, &za(&rs, "t1*t2")).unwrap().is_zero());
        let w1 = DoublePolynomial::x(2, 1);
        assert_eq!(divided_difference_borel(&rs, 1, &w1).unwrap(), DoublePolynomial::from_int(2, -1));
        assert!(divided_difference_borel(&rs, 3, &w1).is_err());
    }

    #[test]
    fn power_rule_matches_generic() {
        for t in ["A2", "B2", "G2", "C3"] {
            let rs = RootSystem::from_type_str(t).unwrap();
            let n = rs.rank();
            for i in 1..=n {
                let one = DoublePolynomial::one(n);
                assert!(leibniz_power_rule(&rs, i, &one, 0).unwrap().is_zero());
                for m in 1..=4 {
                    let xi = DoublePolynomial::x(n, i).pow(m);
                    assert_eq!(
                        leibniz_power_rule(&rs, i, &one, m).unwrap(),
                        divided_difference_borel(&rs, i, &xi).unwrap()
                    );
                }
                assert!(leibniz_power_rule(&rs, i, &DoublePolynomial::x(n, i), 1).is_err());
            }
        }
    }

    #[test]
    fn coordinate_rewrites() {
        let rs = a2();
        let f = za(&rs, "t3-t1");
        assert_eq!(to_z_coordinates(&f).to_string(), "-2*t1-t2");
        let e8 = RootSystem::from_type_str("E8").unwrap();
        let w2 = DoublePolynomial::t(8, 2);
        assert_eq!(to_alpha_coordinates(&e8, &w2).to_string(), "5*t1+8*t2+10*t3+15*t4+12*t5+9*t6+6*t7+3*t8");
    }
}
