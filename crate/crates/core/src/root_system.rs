//! Finite root systems in the simple-root basis.
//!
//! Cartan matrices follow Bourbaki numbering, with the convention
//! `C[i][j] = <alpha_j, alpha_i^vee>`. For `E8` node 2 hangs off node 4.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CartanType {
    pub family: Family,
    pub rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(CartanType { family, rank })
        } else {
            Err(Error::InvalidCartanType(format!("{family:?}{rank}")))
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidCartanType(s.to_string());
        let mut chars = s.trim().chars();
        let family = match chars.next().ok_or_else(bad)?.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return Err(bad()),
        };
        let rest = chars.as_str();
        if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let rank = rest.parse().map_err(|_| bad())?;
        CartanType::new(family, rank).map_err(|_| bad())
    }
}

/// A weight, given by its coordinates in the simple-root basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Weight {
    pub coords: Vec<Rational>,
}

impl Weight {
    pub fn zero(n: usize) -> Self {
        Weight { coords: vec![Rational::zero(); n] }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Weight { coords: coords.iter().map(|&c| Rational::from_integer(c.into())).collect() }
    }

    /// The simple root `alpha_i` (1-based index).
    pub fn simple_root(n: usize, i: usize) -> Self {
        let mut w = Weight::zero(n);
        w.coords[i - 1] = Rational::one();
        w
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// True when every coordinate is `>= 0` and some coordinate is positive.
    pub fn is_positive(&self) -> bool {
        !self.is_zero() && self.coords.iter().all(|c| !c.is_negative())
    }

    pub fn is_negative(&self) -> bool {
        !self.is_zero() && self.coords.iter().all(|c| !c.is_positive())
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight { coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight { coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect() }
    }

    pub fn scale(&self, c: &Rational) -> Weight {
        Weight { coords: self.coords.iter().map(|a| a * c).collect() }
    }

    pub fn neg(&self) -> Weight {
        Weight { coords: self.coords.iter().map(|a| -a).collect() }
    }
}

impl fmt::Display for Weight {
    /// Renders as a combination of simple roots, e.g. `a1+2*a2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let abs = c.abs();
            if abs.is_one() {
                write!(f, "{sign}a{}", i + 1)?;
            } else {
                write!(f, "{sign}{abs}*a{}", i + 1)?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    cartan_type: CartanType,
    cartan: Vec<Vec<i64>>,
    symmetrizer: Vec<Rational>,
    cartan_inverse: Vec<Vec<Rational>>,
    positive_roots: Vec<Weight>,
    positive_int: Vec<Vec<i64>>,
    root_index: HashMap<Vec<i64>, usize>,
}

fn cartan_matrix(ct: CartanType) -> Vec<Vec<i64>> {
    let n = ct.rank;
    let mut c = vec![vec![0i64; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        c[i - 1][j - 1] = -1;
        c[j - 1][i - 1] = -1;
    };
    match ct.family {
        Family::A | Family::B | Family::C => {
            for i in 1..n {
                link(i, i + 1);
            }
        }
        Family::D => {
            for i in 1..n - 1 {
                link(i, i + 1);
            }
            link(n - 2, n);
        }
        Family::E => {
            link(1, 3);
            link(2, 4);
            for i in 3..n {
                link(i, i + 1);
            }
        }
        Family::F => {
            link(1, 2);
            link(2, 3);
            link(3, 4);
        }
        Family::G => link(1, 2),
    }
    // Double and triple bonds. Row i is the coroot of alpha_i.
    match ct.family {
        Family::B => c[n - 1][n - 2] = -2,
        Family::C => c[n - 2][n - 1] = -2,
        Family::F => c[2][1] = -2,
        Family::G => c[0][1] = -3,
        _ => {}
    }
    c
}

fn invert(m: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m.to_vec();
    let mut inv: Vec<Vec<Rational>> =
        (0..n).map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect()).collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !a[r][col].is_zero()).expect("Cartan matrix is invertible");
        a.swap(col, p);
        inv.swap(col, p);
        let piv = a[col][col].clone();
        for k in 0..n {
            a[col][k] = &a[col][k] / &piv;
            inv[col][k] = &inv[col][k] / &piv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for k in 0..n {
                    let da = &f * &a[col][k];
                    let di = &f * &inv[col][k];
                    a[r][k] -= da;
                    inv[r][k] -= di;
                }
            }
        }
    }
    inv
}

impl RootSystem {
    pub fn new(cartan_type: CartanType) -> Self {
        let n = cartan_type.rank;
        let cartan = cartan_matrix(cartan_type);

        // d_i C[i][j] = d_j C[j][i]; propagate along the Dynkin diagram.
        let mut d: Vec<Option<Rational>> = vec![None; n];
        d[0] = Some(Rational::one());
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for j in 0..n {
                if j != i && cartan[i][j] != 0 && d[j].is_none() {
                    let di = d[i].clone().unwrap();
                    d[j] = Some(
                        di * Rational::from_integer(cartan[i][j].into()) / Rational::from_integer(cartan[j][i].into()),
                    );
                    queue.push_back(j);
                }
            }
        }
        let d: Vec<Rational> = d.into_iter().map(|x| x.expect("Dynkin diagram is connected")).collect();
        let min = d.iter().min().cloned().unwrap();
        let symmetrizer = d.into_iter().map(|x| x / &min).collect();

        let cq: Vec<Vec<Rational>> =
            cartan.iter().map(|row| row.iter().map(|&x| Rational::from_integer(x.into())).collect()).collect();
        let cartan_inverse = invert(&cq);

        let mut rs = RootSystem {
            cartan_type,
            cartan,
            symmetrizer,
            cartan_inverse,
            positive_roots: Vec::new(),
            positive_int: Vec::new(),
            root_index: HashMap::new(),
        };
        rs.generate_roots();
        rs
    }

    pub fn from_type_str(s: &str) -> Result<Self> {
        Ok(RootSystem::new(s.parse()?))
    }

    fn generate_roots(&mut self) {
        let n = self.rank();
        let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
        let mut roots: Vec<Vec<i64>> = Vec::new();
        let mut queue = VecDeque::new();
        for i in 0..n {
            let mut r = vec![0i64; n];
            r[i] = 1;
            seen.insert(r.clone(), ());
            roots.push(r.clone());
            queue.push_back(r);
        }
        while let Some(beta) = queue.pop_front() {
            for i in 0..n {
                let pairing: i64 = (0..n).map(|j| beta[j] * self.cartan[i][j]).sum();
                let mut gamma = beta.clone();
                gamma[i] -= pairing;
                if gamma.iter().all(|&c| c >= 0) && gamma.iter().any(|&c| c > 0) && !seen.contains_key(&gamma) {
                    seen.insert(gamma.clone(), ());
                    roots.push(gamma.clone());
                    queue.push_back(gamma);
                }
            }
        }
        roots.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        self.root_index = roots.iter().cloned().enumerate().map(|(k, r)| (r, k)).collect();
        self.positive_roots = roots.iter().map(|r| Weight::from_ints(r)).collect();
        self.positive_int = roots;
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn symmetrizer(&self) -> &[Rational] {
        &self.symmetrizer
    }

    /// Positive roots ordered by height.
    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive_roots
    }

    pub(crate) fn positive_roots_int(&self) -> &[Vec<i64>] {
        &self.positive_int
    }

    /// Position of a positive root in [`RootSystem::positive_roots`].
    pub fn root_position(&self, beta: &Weight) -> Option<usize> {
        let ints: Option<Vec<i64>> = beta
            .coords
            .iter()
            .map(|c| if c.is_integer() { i64::try_from(c.to_integer()).ok() } else { None })
            .collect();
        self.root_index.get(&ints?).copied()
    }

    pub fn is_root(&self, beta: &Weight) -> bool {
        self.root_position(beta).is_some() || self.root_position(&beta.neg()).is_some()
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.rank() {
            Err(Error::IndexOutOfRange { index: i, rank: self.rank() })
        } else {
            Ok(())
        }
    }

    pub fn check_weight(&self, w: &Weight) -> Result<()> {
        if w.rank() != self.rank() {
            Err(Error::RankMismatch(w.rank(), self.rank()))
        } else {
            Ok(())
        }
    }

    /// `<lambda, alpha_i^vee>`.
    pub fn simple_coroot_pair(&self, lambda: &Weight, i: usize) -> Rational {
        let row = &self.cartan[i - 1];
        lambda.coords.iter().zip(row).map(|(c, &a)| c * Rational::from_integer(a.into())).sum()
    }

    /// `s_i(lambda) = lambda - <lambda, alpha_i^vee> alpha_i`.
    pub fn reflect(&self, i: usize, lambda: &Weight) -> Result<Weight> {
        self.check_index(i)?;
        self.check_weight(lambda)?;
        let p = self.simple_coroot_pair(lambda, i);
        let mut out = lambda.clone();
        out.coords[i - 1] -= p;
        Ok(out)
    }

    /// The invariant form `(lambda, mu)`, normalised so short simple roots
    /// have `(alpha, alpha) = 2`.
    pub fn inner(&self, lambda: &Weight, mu: &Weight) -> Rational {
        let n = self.rank();
        let mut s = Rational::zero();
        for i in 0..n {
            if lambda.coords[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if self.cartan[i][j] == 0 || mu.coords[j].is_zero() {
                    continue;
                }
                s += &lambda.coords[i]
                    * &mu.coords[j]
                    * &self.symmetrizer[i]
                    * Rational::from_integer(self.cartan[i][j].into());
            }
        }
        s
    }

    /// `2(lambda, beta)/(beta, beta)`.
    pub fn coroot_pair(&self, lambda: &Weight, beta: &Weight) -> Result<Rational> {
        self.check_weight(lambda)?;
        self.check_weight(beta)?;
        if beta.is_zero() {
            return Err(Error::NotARoot(beta.to_string()));
        }
        let two = Rational::from_integer(2.into());
        Ok(two * self.inner(lambda, beta) / self.inner(beta, beta))
    }

    /// The fundamental weight `omega_i` in simple-root coordinates.
    pub fn fundamental_weight(&self, i: usize) -> Weight {
        Weight { coords: self.cartan_inverse.iter().map(|row| row[i - 1].clone()).collect() }
    }

    /// Coordinates of a weight in the fundamental-weight basis:
    /// the `i`-th entry is `<lambda, alpha_i^vee>`.
    pub fn to_fundamental_coords(&self, lambda: &Weight) -> Vec<Rational> {
        (1..=self.rank()).map(|i| self.simple_coroot_pair(lambda, i)).collect()
    }

    pub fn from_fundamental_coords(&self, coords: &[Rational]) -> Weight {
        let n = self.rank();
        Weight { coords: (0..n).map(|i| (0..n).map(|j| &self.cartan_inverse[i][j] * &coords[j]).sum()).collect() }
    }

    /// Entry `[i][j]` is the `alpha_i` coefficient of `omega_{j+1}`.
    pub fn cartan_inverse(&self) -> &[Vec<Rational>] {
        &self.cartan_inverse
    }

    /// Order of the Weyl group, from the Poincare polynomial at `q = 1`.
    pub fn weyl_order(&self) -> u128 {
        let n = self.rank() as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        match self.cartan_type.family {
            Family::A => fact(n + 1),
            Family::B | Family::C => fact(n) << n,
            Family::D => fact(n) << (n - 1),
            Family::E => match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Family::F => 1152,
            Family::G => 12,
        }
    }
}
