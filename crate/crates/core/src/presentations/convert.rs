use crate::error::{Error, Result};
use crate::polynomial::{divided_difference_fast, localize_borel, DoublePolynomial};
use crate::root_system::RootSystem;
use crate::weyl::WeylElement;

use super::billey::LocalizationCache;
use super::factor::factor_decompositions;
use super::gkm::{dd_gkm, GkmClass, VertexSet};
use super::schubert::SchubertSum;
use super::sigma::{left_peel_steps, SigmaTable};
use super::{BorelClass, DEFAULT_ENUMERATION_CAP};

/// `h_v = ev(v(f))` at every vertex of length at most `cutoff`.
pub fn borel_to_gkm(rs: &RootSystem, f: &BorelClass, cutoff: usize) -> Result<GkmClass> {
    let vs = VertexSet::new(rs, cutoff)?;
    GkmClass::from_fn(vs, |v| Ok(localize_borel(rs, v, &f.rep)))
}

/// `h_v = sum_w d_w X_w(v)` with localizations from the subword formula.
pub fn schubert_to_gkm(
    rs: &RootSystem,
    s: &SchubertSum,
    cutoff: usize,
    cache: &mut LocalizationCache,
) -> Result<GkmClass> {
    let vs = VertexSet::new(rs, cutoff)?;
    GkmClass::from_fn(vs, |v| {
        let mut acc = DoublePolynomial::zero(rs.rank());
        for (w, c) in s.iter() {
            if w.length() <= v.length() {
                acc = &acc + &(c * &cache.get(rs, w, v));
            }
        }
        Ok(acc)
    })
}

/// `sum_w (Delta_w h)(e) X_w`. `Delta_w` lowers degree by `l(w)`, so only
/// elements up to the top degree of `h` are visited, and the cutoff must
/// reach that degree.
pub fn gkm_to_schubert(rs: &RootSystem, h: &GkmClass) -> Result<SchubertSum> {
    let n = rs.rank();
    let mut out = SchubertSum::zero(n);
    let Some(deg) = h.max_degree() else { return Ok(out) };
    let deg = deg as usize;
    let vs = h.vertices();
    if !vs.is_complete() && vs.cutoff() < deg {
        return Err(Error::CutoffTooSmall { cutoff: vs.cutoff(), needed: deg });
    }
    let elements: Vec<WeylElement> = vs.elements().iter().take_while(|w| w.length() <= deg).cloned().collect();
    let steps = left_peel_steps(rs, &elements);
    let mut d: Vec<Option<GkmClass>> = vec![None; elements.len()];
    d[0] = Some(h.clone());
    out.add_unchecked(&elements[0], h.value(&elements[0]).expect("e is a vertex"));
    for (j, &(i, parent)) in steps.iter().enumerate() {
        let Some(g) = &d[parent] else { continue };
        let dg = dd_gkm(rs, i, g)?;
        if dg.is_zero() {
            continue;
        }
        out.add_unchecked(&elements[j + 1], dg.value(&elements[0]).expect("e is a vertex"));
        d[j + 1] = Some(dg);
    }
    Ok(out)
}

/// `sum_w ev(Delta_w f) X_w`; only `l(w)` up to the x-degree of `f` contributes.
pub fn borel_to_schubert(rs: &RootSystem, f: &BorelClass) -> Result<SchubertSum> {
    let n = rs.rank();
    let mut out = SchubertSum::zero(n);
    if f.rep.is_zero() {
        return Ok(out);
    }
    let deg = (f.rep.x_degree() as usize).min(rs.positive_roots().len());
    let elements = rs.enumerate_up_to_length(deg, DEFAULT_ENUMERATION_CAP)?;
    let steps = left_peel_steps(rs, &elements);
    let mut d: Vec<Option<DoublePolynomial>> = vec![None; elements.len()];
    out.add_unchecked(&elements[0], &f.rep.evaluate_x_to_t());
    d[0] = Some(f.rep.clone());
    for (j, &(i, parent)) in steps.iter().enumerate() {
        let Some(g) = &d[parent] else { continue };
        let dg = divided_difference_fast(rs, i, g)?;
        if dg.is_zero() {
            continue;
        }
        out.add_unchecked(&elements[j + 1], &dg.evaluate_x_to_t());
        d[j + 1] = Some(dg);
    }
    Ok(out)
}

/// The double Schubert polynomial
/// `S_w = sum_{k >= 1} sum_{(w_1..w_k) in P_k(w)} (-1)^k sigma_{w_1}(t) ... sigma_{w_{k-1}}(t) (sigma_{w_k}(t) - sigma_{w_k}(x))`,
/// with `S_e = 1`.
pub fn double_schubert(rs: &RootSystem, w: &WeylElement, sigma: &SigmaTable) -> Result<BorelClass> {
    let n = rs.rank();
    if w.is_identity() {
        return Ok(BorelClass::new(DoublePolynomial::one(n)));
    }
    let lookup = |u: &WeylElement| -> Result<&DoublePolynomial> {
        sigma.get(u).ok_or_else(|| Error::MissingSigma(rs.reduced_word(u).to_string()))
    };
    let mut total = DoublePolynomial::zero(n);
    for k in 1..=w.length() {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        for factors in factor_decompositions(rs, w, k) {
            let (last, init) = factors.split_last().expect("k >= 1");
            let mut term = DoublePolynomial::from_int(n, sign);
            for u in init {
                term = &term * &lookup(u)?.swap_families();
            }
            let s = lookup(last)?;
            term = &term * &(&s.swap_families() - s);
            total = &total + &term;
        }
    }
    Ok(BorelClass::new(total))
}

/// `sum_w d_w S_w`.
pub fn schubert_to_borel(rs: &RootSystem, s: &SchubertSum, sigma: &SigmaTable) -> Result<BorelClass> {
    let mut total = DoublePolynomial::zero(rs.rank());
    for (w, c) in s.iter() {
        total = &total + &(c * &double_schubert(rs, w, sigma)?.rep);
    }
    Ok(BorelClass::new(total))
}

/// Through the Schubert basis: [`gkm_to_schubert`] then [`schubert_to_borel`].
pub fn gkm_to_borel(rs: &RootSystem, h: &GkmClass, sigma: &SigmaTable) -> Result<BorelClass> {
    schubert_to_borel(rs, &gkm_to_schubert(rs, h)?, sigma)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::{parse_polynomial, Coords};
    use crate::presentations::sigma_type_a;

    #[test]
    fn a2_worked_example() {
        let rs = RootSystem::from_type_str("A2").unwrap();
        let z = |s: &str| parse_polynomial(s, &rs, Coords::TypeA).unwrap();
        let f = BorelClass::new(z("t1*x1*x2"));
        let s = borel_to_schubert(&rs, &f).unwrap();
        let expect = SchubertSum::parse_text(&rs, "e: t1^2*t2\ns2: t1^2\ns1s2: t1", Coords::TypeA).unwrap();
        assert_eq!(s, expect);
        let h = borel_to_gkm(&rs, &f, 3).unwrap();
        assert_eq!(gkm_to_schubert(&rs, &h).unwrap(), expect);
        let mut cache = LocalizationCache::new();
        assert_eq!(schubert_to_gkm(&rs, &expect, 3, &mut cache).unwrap(), h);
        let sigma = sigma_type_a(&rs, 100).unwrap();
        let w0 = rs.parse_element("121").unwrap();
        assert_eq!(double_schubert(&rs, &w0, &sigma).unwrap().rep, z("(x1-t1)*(x1-t2)*(x2-t1)"));
        assert_eq!(schubert_to_borel(&rs, &expect, &sigma).unwrap().rep, z("t1*x1*x2"));
    }

    #[test]
    fn cutoff_guard() {
        let rs = RootSystem::from_type_str("B3").unwrap();
        let f = BorelClass::new(DoublePolynomial::x(3, 1).pow(3));
        let h = borel_to_gkm(&rs, &f, 2).unwrap();
        assert!(matches!(gkm_to_schubert(&rs, &h), Err(Error::CutoffTooSmall { needed: 3, .. })));
        let empty = SigmaTable::new(3, crate::presentations::SigmaSource::Bgg);
        let s1 = rs.parse_element("1").unwrap();
        assert!(matches!(double_schubert(&rs, &s1, &empty), Err(Error::MissingSigma(_))));
    }
}
