use crate::expr::{render, Style};
use crate::polynomial::DoublePolynomial;
use crate::root_system::RootSystem;

/// A class in the Borel presentation, held by a polynomial representative
/// in `Q[t, x]`.
///
/// Equality compares representatives. Two representatives that differ by
/// an element of the ideal `(f(x) - f(t) : f W-invariant)` give the same
/// class; compare their localizations or Schubert expansions to detect that.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BorelClass {
    pub rep: DoublePolynomial,
}

impl BorelClass {
    pub fn new(rep: DoublePolynomial) -> Self {
        BorelClass { rep }
    }

    pub fn rank(&self) -> usize {
        self.rep.rank()
    }

    pub fn to_text(&self, rs: &RootSystem, style: Style) -> String {
        format!("{}\n", render(rs, &self.rep, style))
    }
}
