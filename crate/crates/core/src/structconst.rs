//! Equivariant structure constants `X_u X_v = sum_w c_{uv}^w X_w`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::expr::{render, Style};
use crate::polynomial::{t_linear, to_alpha_coordinates, DoublePolynomial};
use crate::presentations::{
    borel_to_schubert, double_schubert, BorelClass, LocalizationCache, SchubertSum, SigmaTable, DEFAULT_ENUMERATION_CAP,
};
use crate::root_system::RootSystem;
use crate::weyl::{WeylElement, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    /// Localize at each fixed point and solve the triangular system.
    Gkm,
    /// Multiply double Schubert polynomials and expand.
    Borel,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Gkm => "gkm",
            Method::Borel => "borel",
        })
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gkm" => Ok(Method::Gkm),
            "borel" => Ok(Method::Borel),
            _ => Err(Error::Parse(format!("unknown method {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructConstResult {
    pub u: WeylElement,
    pub v: WeylElement,
    pub expansion: SchubertSum,
    pub method: Method,
}

/// Elements `w` with `l(w) <= l(u) + l(v)` and `u, v <= w`, by increasing length.
fn candidates(rs: &RootSystem, u: &WeylElement, v: &WeylElement) -> Result<Vec<WeylElement>> {
    let top = (u.length() + v.length()).min(rs.positive_roots().len());
    let lo = u.length().max(v.length());
    Ok(rs
        .enumerate_up_to_length(top, DEFAULT_ENUMERATION_CAP)?
        .into_iter()
        .filter(|w| w.length() >= lo && rs.bruhat_leq(u, w) && rs.bruhat_leq(v, w))
        .collect())
}

/// Localizing `X_u X_v = sum_q c^q X_q` at `w` gives
/// `c^w X_w(w) = X_u(w) X_v(w) - sum_{q < w} c^q X_q(w)`, solved in order of
/// increasing length. `X_w(w)` is the product of the inversion roots, never zero.
pub fn multiply_via_gkm(
    rs: &RootSystem,
    u: &WeylElement,
    v: &WeylElement,
    cache: &mut LocalizationCache,
) -> Result<StructConstResult> {
    let n = rs.rank();
    let mut expansion = SchubertSum::zero(n);
    let mut found: Vec<(WeylElement, DoublePolynomial)> = Vec::new();
    for w in candidates(rs, u, v)? {
        let mut rhs = &cache.get(rs, u, &w) * &cache.get(rs, v, &w);
        for (q, c) in &found {
            if q.length() < w.length() {
                let loc = cache.get(rs, q, &w);
                if !loc.is_zero() {
                    rhs = &rhs - &(c * &loc);
                }
            }
        }
        if rhs.is_zero() {
            continue;
        }
        let roots: Vec<_> = rs.inversion_roots(&w).iter().map(|b| t_linear(rs, b)).collect();
        let c = rhs.exact_divide_by_product(&roots)?;
        expansion.add_unchecked(&w, &c);
        found.push((w, c));
    }
    Ok(StructConstResult { u: u.clone(), v: v.clone(), expansion, method: Method::Gkm })
}

/// `X_u X_v` as `borel_to_schubert(S_u S_v)`. The table must cover every
/// element below `u` and `v`.
pub fn multiply_via_borel(
    rs: &RootSystem,
    u: &WeylElement,
    v: &WeylElement,
    sigma: &SigmaTable,
) -> Result<StructConstResult> {
    let su = double_schubert(rs, u, sigma)?;
    let sv = if u == v { su.clone() } else { double_schubert(rs, v, sigma)? };
    let expansion = borel_to_schubert(rs, &BorelClass::new(&su.rep * &sv.rep))?;
    Ok(StructConstResult { u: u.clone(), v: v.clone(), expansion, method: Method::Borel })
}

/// A negative coefficient of some `c_{uv}^w` written in the simple roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositivityViolation {
    pub word: Word,
    pub coefficient: String,
}

/// Expands every coefficient in the simple roots `alpha_i(t)` and collects
/// the terms with negative coefficients. An empty list means positive.
pub fn check_graham_positivity(rs: &RootSystem, r: &StructConstResult) -> Vec<PositivityViolation> {
    let mut out = Vec::new();
    for (word, _, c) in r.expansion.sorted_terms(rs) {
        let alpha = to_alpha_coordinates(rs, c);
        if alpha.terms().any(|(_, k)| k.is_negative()) {
            out.push(PositivityViolation {
                word,
                coefficient: render(rs, c, Style { alpha: true, ..Default::default() }),
            });
        }
    }
    out
}

/// Sets `t = 0`: the ordinary structure constants, as integers, in
/// `(length, word)` order with zeros dropped.
pub fn specialize_ordinary(rs: &RootSystem, r: &StructConstResult) -> Result<Vec<(Word, BigInt)>> {
    let mut out = Vec::new();
    for (word, _, c) in r.expansion.sorted_terms(rs) {
        let k = c.constant_term();
        if k.is_zero() {
            continue;
        }
        if !k.is_integer() {
            return Err(Error::Precondition(format!("non-integral ordinary structure constant {k} at {word}")));
        }
        out.push((word, k.to_integer()));
    }
    Ok(out)
}
