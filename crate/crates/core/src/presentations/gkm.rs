use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::expr::{parse_polynomial, render, Coords, Style};
use crate::polynomial::{t_linear, DoublePolynomial};
use crate::root_system::{RootSystem, Weight};
use crate::weyl::{format_one_line, WeylElement, Word};

use super::DEFAULT_ENUMERATION_CAP;

/// The vertices `{v : l(v) <= cutoff}` of the GKM graph, in breadth-first
/// order. When the cutoff reaches the number of positive roots the set is
/// all of `W` and operations no longer shrink it.
#[derive(Debug)]
pub struct VertexSet {
    cutoff: usize,
    complete: bool,
    elements: Vec<WeylElement>,
    index: HashMap<WeylElement, usize>,
}

impl VertexSet {
    pub fn new(rs: &RootSystem, cutoff: usize) -> Result<Arc<VertexSet>> {
        Self::with_cap(rs, cutoff, DEFAULT_ENUMERATION_CAP)
    }

    pub fn with_cap(rs: &RootSystem, cutoff: usize, cap: usize) -> Result<Arc<VertexSet>> {
        let top = rs.positive_roots().len();
        let cutoff = cutoff.min(top);
        let elements = rs.enumerate_up_to_length(cutoff, cap)?;
        Ok(Arc::new(Self::from_elements(cutoff, cutoff == top, elements)))
    }

    fn from_elements(cutoff: usize, complete: bool, elements: Vec<WeylElement>) -> VertexSet {
        let index = elements.iter().cloned().enumerate().map(|(k, w)| (w, k)).collect();
        VertexSet { cutoff, complete, elements, index }
    }

    /// The prefix of elements of length at most `cutoff`.
    fn truncate(self: &Arc<Self>, cutoff: usize) -> Arc<VertexSet> {
        if self.complete || cutoff >= self.cutoff {
            return Arc::clone(self);
        }
        let elements = self.elements.iter().take_while(|w| w.length() <= cutoff).cloned().collect();
        Arc::new(Self::from_elements(cutoff, false, elements))
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn position(&self, w: &WeylElement) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn contains(&self, w: &WeylElement) -> bool {
        self.index.contains_key(w)
    }
}

/// A GKM class: one t-only polynomial per vertex of a [`VertexSet`].
#[derive(Clone, Debug)]
pub struct GkmClass {
    vertices: Arc<VertexSet>,
    values: Vec<DoublePolynomial>,
}

impl PartialEq for GkmClass {
    fn eq(&self, other: &Self) -> bool {
        self.vertices.cutoff == other.vertices.cutoff
            && self.vertices.complete == other.vertices.complete
            && self.vertices.len() == other.vertices.len()
            && self.vertices.elements.iter().zip(&self.values).all(|(w, h)| other.value(w) == Some(h))
    }
}

impl Eq for GkmClass {}

impl GkmClass {
    /// Builds a class from `f(v)` at every vertex; values must be t-only.
    pub fn from_fn(
        vertices: Arc<VertexSet>,
        mut f: impl FnMut(&WeylElement) -> Result<DoublePolynomial>,
    ) -> Result<GkmClass> {
        let values = vertices
            .elements
            .iter()
            .map(|v| {
                let h = f(v)?;
                if h.is_t_only() {
                    Ok(h)
                } else {
                    Err(Error::NotTOnly(h.to_string()))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GkmClass { vertices, values })
    }

    pub fn vertices(&self) -> &Arc<VertexSet> {
        &self.vertices
    }

    pub fn cutoff(&self) -> usize {
        self.vertices.cutoff
    }

    pub fn value(&self, v: &WeylElement) -> Option<&DoublePolynomial> {
        self.vertices.position(v).map(|k| &self.values[k])
    }

    pub fn iter(&self) -> impl Iterator<Item = (&WeylElement, &DoublePolynomial)> {
        self.vertices.elements.iter().zip(&self.values)
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(DoublePolynomial::is_zero)
    }

    /// Largest total degree among the values.
    pub fn max_degree(&self) -> Option<u32> {
        self.values.iter().filter_map(DoublePolynomial::degree).max()
    }

    /// Pointwise sum; both classes must live on vertex sets of the same cutoff.
    pub fn add(&self, other: &GkmClass) -> Result<GkmClass> {
        self.zip_with(other, |a, b| a + b)
    }

    /// Pointwise product.
    pub fn mul(&self, other: &GkmClass) -> Result<GkmClass> {
        self.zip_with(other, |a, b| a * b)
    }

    fn zip_with(
        &self,
        other: &GkmClass,
        op: impl Fn(&DoublePolynomial, &DoublePolynomial) -> DoublePolynomial,
    ) -> Result<GkmClass> {
        if self.vertices.cutoff != other.vertices.cutoff {
            return Err(Error::Precondition(format!(
                "GKM classes on different vertex sets (cutoffs {} and {})",
                self.vertices.cutoff, other.vertices.cutoff
            )));
        }
        let values = self.iter().map(|(w, a)| op(a, other.value(w).expect("same vertex set"))).collect();
        Ok(GkmClass { vertices: Arc::clone(&self.vertices), values })
    }

    /// Checks `beta(t) | h(v) - h(s_beta v)` on every edge inside the vertex set.
    pub fn check_edges(&self, rs: &RootSystem) -> Result<()> {
        for edge in gkm_edges(rs, &self.vertices)? {
            let u = &self.vertices.elements[edge.from];
            let v = &self.vertices.elements[edge.to];
            let diff = &self.values[edge.from] - &self.values[edge.to];
            if diff.exact_divide(&t_linear(rs, &edge.root)).is_err() {
                return Err(Error::EdgeCondition {
                    u: rs.reduced_word(u).to_string(),
                    v: rs.reduced_word(v).to_string(),
                });
            }
        }
        Ok(())
    }

    /// One `word: polynomial` line per vertex, zeros included, in
    /// `(length, word)` order.
    pub fn to_text(&self, rs: &RootSystem, style: Style) -> String {
        let mut rows: Vec<_> = self.iter().map(|(w, h)| (rs.sort_key(w), h)).collect();
        rows.sort_by(|a, b| a.0.cmp(&b.0));
        let mut out = String::new();
        for ((_, word), h) in rows {
            let _ = writeln!(out, "{word}: {}", render(rs, h, style));
        }
        out
    }

    /// Inverse of [`GkmClass::to_text`]. Without an explicit cutoff the
    /// largest listed length is used. Every vertex must appear exactly once
    /// and the edge conditions must hold.
    pub fn parse_text(rs: &RootSystem, text: &str, coords: Coords, cutoff: Option<usize>) -> Result<GkmClass> {
        let mut rows: Vec<(WeylElement, DoublePolynomial)> = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (word, poly) = line
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("expected 'word: polynomial', got {line:?}")))?;
            rows.push((rs.parse_element(word)?, parse_polynomial(poly, rs, coords)?));
        }
        let cutoff = cutoff.unwrap_or_else(|| rows.iter().map(|(w, _)| w.length()).max().unwrap_or(0));
        let vertices = VertexSet::new(rs, cutoff)?;
        let mut values: Vec<Option<DoublePolynomial>> = vec![None; vertices.len()];
        for (w, h) in rows {
            let k = vertices.position(&w).ok_or_else(|| {
                Error::Parse(format!("{} is not a vertex of length <= {}", rs.reduced_word(&w), vertices.cutoff))
            })?;
            if values[k].replace(h).is_some() {
                return Err(Error::Parse(format!("vertex {} listed twice", rs.reduced_word(&w))));
            }
        }
        let class = GkmClass::from_fn(Arc::clone(&vertices), |v| {
            values[vertices.position(v).expect("vertex")]
                .clone()
                .ok_or_else(|| Error::Parse(format!("missing value at vertex {}", rs.reduced_word(v))))
        })?;
        class.check_edges(rs)?;
        Ok(class)
    }
}

/// `(Delta_i h)(v) = (h(v) - h(v s_i)) / (-v(alpha_i)(t))`. The result lives
/// on the vertex set with cutoff one smaller, unless the set is all of `W`.
pub fn dd_gkm(rs: &RootSystem, i: usize, h: &GkmClass) -> Result<GkmClass> {
    rs.check_index(i)?;
    let vs = &h.vertices;
    if !vs.complete && vs.cutoff == 0 {
        return Err(Error::CutoffTooSmall { cutoff: 0, needed: 1 });
    }
    let target = if vs.complete { Arc::clone(vs) } else { vs.truncate(vs.cutoff - 1) };
    let alpha = Weight::simple_root(rs.rank(), i);
    GkmClass::from_fn(target, |v| {
        let hv = h.value(v).expect("subset");
        let hvs = h.value(&rs.times_simple(v, i)).expect("neighbour inside the larger set");
        let diff = hv - hvs;
        if diff.is_zero() {
            return Ok(diff);
        }
        diff.exact_divide(&-&t_linear(rs, &v.apply(&alpha)))
    })
}

/// `(w . h)(v) = h(v w)`; shrinks the cutoff by `l(w)` unless the set is all of `W`.
pub fn weyl_act_gkm(rs: &RootSystem, w: &WeylElement, h: &GkmClass) -> Result<GkmClass> {
    let vs = &h.vertices;
    let target = if vs.complete {
        Arc::clone(vs)
    } else if vs.cutoff < w.length() {
        return Err(Error::CutoffTooSmall { cutoff: vs.cutoff, needed: w.length() });
    } else {
        vs.truncate(vs.cutoff - w.length())
    };
    GkmClass::from_fn(target, |v| Ok(h.value(&rs.multiply(v, w)?).expect("inside the larger set").clone()))
}

/// An edge `v -- s_beta v` of the GKM graph, stored once with `from < to`
/// as positions in the vertex set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GkmEdge {
    pub from: usize,
    pub to: usize,
    pub root: Weight,
}

/// All edges between vertices of the set, labelled by positive roots.
pub fn gkm_edges(rs: &RootSystem, vs: &VertexSet) -> Result<Vec<GkmEdge>> {
    let refl: Vec<_> = rs.positive_roots().iter().map(|b| Ok((b.clone(), rs.reflection(b)?))).collect::<Result<_>>()?;
    let mut out = Vec::new();
    for (k, v) in vs.elements.iter().enumerate() {
        for (beta, sb) in &refl {
            let u = rs.multiply(sb, v)?;
            if let Some(j) = vs.position(&u) {
                if j > k {
                    out.push(GkmEdge { from: k, to: j, root: beta.clone() });
                }
            }
        }
    }
    Ok(out)
}

fn vertex_label(rs: &RootSystem, w: &WeylElement) -> String {
    let word = rs.reduced_word(w);
    match rs.one_line(w) {
        Some(p) => format!("{word} {}", format_one_line(&p)),
        None => word.to_string(),
    }
}

/// The GKM graph up to `cutoff` in DOT format. Vertices are labelled by
/// reduced words (plus one-line notation in type A) and edges by roots.
pub fn gkm_graph_dot(rs: &RootSystem, cutoff: usize, style: Style) -> Result<String> {
    let vs = VertexSet::new(rs, cutoff)?;
    let mut order: Vec<(usize, Word, usize)> =
        vs.elements.iter().enumerate().map(|(k, w)| (w.length(), rs.reduced_word(w), k)).collect();
    order.sort();
    let mut name = vec![0usize; vs.len()];
    for (rank, (_, _, k)) in order.iter().enumerate() {
        name[*k] = rank;
    }
    let mut out = String::new();
    let _ = writeln!(out, "graph gkm_{} {{", rs.cartan_type());
    for (_, _, k) in &order {
        let _ = writeln!(out, "  v{} [label=\"{}\"];", name[*k], vertex_label(rs, &vs.elements[*k]));
    }
    let mut edges: Vec<(usize, usize, String)> = gkm_edges(rs, &vs)?
        .into_iter()
        .map(|e| {
            let (a, b) = (name[e.from].min(name[e.to]), name[e.from].max(name[e.to]));
            (a, b, render(rs, &t_linear(rs, &e.root), style))
        })
        .collect();
    edges.sort();
    for (a, b, label) in edges {
        let _ = writeln!(out, "  v{a} -- v{b} [label=\"{label}\"];");
    }
    out.push_str("}\n");
    Ok(out)
}
