//! The Schubert, Borel and GKM presentations of `H*_T(G/T; Q)`, their
//! divided differences and Weyl actions, and the conversions among them.

mod billey;
mod borel;
mod convert;
mod factor;
mod gkm;
mod schubert;
mod sigma;

pub use billey::{billey_localize, LocalizationCache};
pub use borel::BorelClass;
pub use convert::{
    borel_to_gkm, borel_to_schubert, double_schubert, gkm_to_borel, gkm_to_schubert, schubert_to_borel, schubert_to_gkm,
};
pub use factor::factor_decompositions;
pub use gkm::{gkm_edges, gkm_graph_dot, GkmClass, GkmEdge, VertexSet};
pub use schubert::{chevalley_multiply, weyl_act_schubert, SchubertSum};
pub use sigma::{
    is_compatible, sigma_bgg, sigma_linear_system, sigma_pairing, sigma_type_a, sigma_up_to_length, SigmaSource,
    SigmaTable,
};

use crate::error::{Error, Result};
use crate::root_system::RootSystem;
use crate::weyl::Word;

/// Default upper bound on `|W|` for operations that materialise the whole group.
pub const DEFAULT_GROUP_BOUND: u128 = 50_000;

/// Default cap on the number of elements a bounded enumeration may produce.
pub const DEFAULT_ENUMERATION_CAP: usize = 2_000_000;

/// A presentation carrying the operators `Delta_i`.
pub trait DividedDifference: Sized {
    fn divided_difference(&self, rs: &RootSystem, i: usize) -> Result<Self>;
}

/// `Delta_w = Delta_{i_1} o ... o Delta_{i_k}` for a reduced word
/// `w = s_{i_1} ... s_{i_k}`; the last letter acts first.
pub fn dd_word<P: DividedDifference + Clone>(rs: &RootSystem, word: &Word, class: &P) -> Result<P> {
    if !rs.is_reduced(word)? {
        return Err(Error::NotReduced(word.to_string()));
    }
    let mut cur = class.clone();
    for &i in word.letters().iter().rev() {
        cur = cur.divided_difference(rs, i)?;
    }
    Ok(cur)
}

impl DividedDifference for SchubertSum {
    fn divided_difference(&self, rs: &RootSystem, i: usize) -> Result<Self> {
        schubert::dd_schubert(rs, i, self)
    }
}

impl DividedDifference for GkmClass {
    fn divided_difference(&self, rs: &RootSystem, i: usize) -> Result<Self> {
        gkm::dd_gkm(rs, i, self)
    }
}

impl DividedDifference for BorelClass {
    fn divided_difference(&self, rs: &RootSystem, i: usize) -> Result<Self> {
        Ok(BorelClass::new(crate::polynomial::divided_difference_fast(rs, i, &self.rep)?))
    }
}

pub use gkm::dd_gkm;
pub use gkm::weyl_act_gkm;
pub use schubert::dd_schubert;
