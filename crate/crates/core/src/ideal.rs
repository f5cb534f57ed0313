//! Domain types: exponent vectors, monomial ideals, coordinate subsets and
//! weight vectors, together with exact ideal arithmetic (sum, product, power,
//! minimalization).
//!
//! A monomial ideal is identified with the set of exponent vectors of its
//! minimal generators, kept in canonical (lexicographic) order. All values are
//! immutable after construction and every operation is a pure function, so
//! everything here is safe to share across threads.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rat;

/// Lattice point in `Z^n_{>=0}`: the exponent vector `k` of a monomial `x^k`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Exponent(pub Vec<u32>);

impl Exponent {
    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Componentwise `self <= other` (monomial divisibility).
    pub fn divides(&self, other: &Exponent) -> bool {
        debug_assert_eq!(self.len(), other.len());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Indices (0-based) of the nonzero coordinates.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    pub fn plus(&self, other: &Exponent) -> Exponent {
        debug_assert_eq!(self.len(), other.len());
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl From<Vec<u32>> for Exponent {
    fn from(coords: Vec<u32>) -> Self {
        Exponent(coords)
    }
}

impl fmt::Debug for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Keeps only the componentwise-minimal elements; generates the same ideal.
///
/// Duplicates collapse to one copy. Order of the input is irrelevant; the
/// output is sorted lexicographically.
pub fn minimalize(gens: Vec<Exponent>) -> Vec<Exponent> {
    let mut cands = gens;
    cands.sort();
    cands.dedup();
    if cands.len() <= 1 {
        return cands;
    }
    let m = cands[0].len();
    if m == 0 {
        return cands;
    }
    if cands.len() <= 1024 {
        minimalize_pairwise(cands)
    } else {
        minimalize_grid(cands, m)
    }
}

fn minimalize_pairwise(cands: Vec<Exponent>) -> Vec<Exponent> {
    // lex-sorted: a strict divisor always sorts earlier
    let mut keep = vec![true; cands.len()];
    for i in 0..cands.len() {
        if !keep[i] {
            continue;
        }
        for j in (i + 1)..cands.len() {
            if keep[j] && cands[i].divides(&cands[j]) {
                keep[j] = false;
            }
        }
    }
    cands
        .into_iter()
        .zip(keep)
        .filter_map(|(g, k)| k.then_some(g))
        .collect()
}

/// Staircase-grid minimalization for large candidate sets: O(cells + G)
/// instead of O(G^2). `cells` is the product of coordinate ranges over all
/// axes but the last.
fn minimalize_grid(cands: Vec<Exponent>, m: usize) -> Vec<Exponent> {
    if m == 1 {
        let min = cands.iter().map(|g| g.0[0]).min().unwrap();
        return vec![Exponent(vec![min])];
    }
    let mut extents = vec![0usize; m - 1];
    for g in &cands {
        for a in 0..m - 1 {
            extents[a] = extents[a].max(g.0[a] as usize + 1);
        }
    }
    let cells: usize = extents.iter().product();
    if cells > 200_000_000 {
        return minimalize_pairwise(cands);
    }
    let mut strides = vec![1usize; m - 1];
    for a in (0..m - 2).rev() {
        strides[a] = strides[a + 1] * extents[a + 1];
    }
    let idx = |g: &Exponent| -> usize {
        g.0[..m - 1]
            .iter()
            .zip(&strides)
            .map(|(&c, &s)| c as usize * s)
            .sum()
    };
    // raw per-cell minimum of the last coordinate
    let mut raw = vec![u32::MAX; cells];
    for g in &cands {
        let i = idx(g);
        raw[i] = raw[i].min(g.0[m - 1]);
    }
    // prefix-min sweep along every grid axis
    let mut swept = raw.clone();
    for a in 0..m - 1 {
        let stride = strides[a];
        for i in 0..cells {
            let coord = (i / stride) % extents[a];
            if coord > 0 {
                let prev = swept[i - stride];
                if prev < swept[i] {
                    swept[i] = prev;
                }
            }
        }
    }
    cands
        .into_iter()
        .filter(|g| {
            let i = idx(g);
            if raw[i] < g.0[m - 1] {
                return false;
            }
            // strict-prefix dominance: best value over cells strictly below
            for a in 0..m - 1 {
                if g.0[a] > 0 && swept[i - strides[a]] <= g.0[m - 1] {
                    return false;
                }
            }
            true
        })
        .collect()
}

/// Monomial ideal in a fixed ambient dimension, stored by its minimal
/// generators in canonical lexicographic order.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct MonomialIdeal {
    dim: usize,
    gens: Vec<Exponent>,
    finite_colength: bool,
}

impl MonomialIdeal {
    /// Builds an ideal from any generating set: validates dimensions,
    /// minimalizes, sorts, and derives the finite-colength flag.
    pub fn new(dim: usize, gens: Vec<Exponent>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidConfig("ambient dimension must be >= 1".into()));
        }
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        for g in &gens {
            if g.len() != dim {
                return Err(Error::DimensionMismatch { left: dim, right: g.len() });
            }
        }
        let gens = minimalize(gens);
        Ok(Self::from_minimal(dim, gens))
    }

    fn from_minimal(dim: usize, gens: Vec<Exponent>) -> Self {
        let finite_colength = (0..dim).all(|i| {
            gens.iter()
                .any(|g| g.support().all(|j| j == i))
        });
        MonomialIdeal { dim, gens, finite_colength }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gens(&self) -> &[Exponent] {
        &self.gens
    }

    /// True iff every variable appears as a pure-power generator, i.e. the
    /// quotient ring is finite-dimensional.
    pub fn finite_colength(&self) -> bool {
        self.finite_colength
    }

    /// The unit ideal `<1>`, represented by the zero exponent vector.
    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_zero()
    }

    pub fn is_proper(&self) -> bool {
        !self.is_unit()
    }

    fn require_proper(&self) -> Result<()> {
        if self.is_unit() {
            Err(Error::NotProper)
        } else {
            Ok(())
        }
    }

    pub(crate) fn require_finite_colength(&self) -> Result<()> {
        if self.finite_colength {
            Ok(())
        } else {
            Err(Error::NotFiniteColength)
        }
    }

    pub(crate) fn require_same_dim(&self, other: &MonomialIdeal) -> Result<()> {
        if self.dim == other.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { left: self.dim, right: other.dim })
        }
    }

    /// Degree of the minimal pure power of variable `i` (0-based), if any.
    pub fn pure_power_degree(&self, i: usize) -> Option<u32> {
        self.gens
            .iter()
            .filter(|g| g.support().all(|j| j == i))
            .map(|g| g.0[i])
            .min()
    }

    /// Pure-power degrees of all variables; `Some` exactly when the ideal has
    /// finite colength. These are the side lengths of the counting box.
    pub fn pure_power_degrees(&self) -> Option<Vec<u32>> {
        (0..self.dim).map(|i| self.pure_power_degree(i)).collect()
    }

    /// Largest pure-power degree among the variables.
    pub fn max_pure_power(&self) -> Option<u32> {
        self.pure_power_degrees().map(|d| d.into_iter().max().unwrap())
    }

    /// Monomial membership: `x^k` lies in the ideal iff some generator
    /// divides it.
    pub fn contains_exponent(&self, k: &Exponent) -> bool {
        k.len() == self.dim && self.gens.iter().any(|g| g.divides(k))
    }

    /// Ideal inclusion `self ⊆ other` (every generator of `self` is a member
    /// of `other`).
    pub fn is_subideal_of(&self, other: &MonomialIdeal) -> bool {
        self.dim == other.dim && self.gens.iter().all(|g| other.contains_exponent(g))
    }

    /// Product ideal; its Newton polyhedron is the Minkowski sum of the two
    /// factors'.
    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.require_same_dim(other)?;
        let mut cands = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                cands.push(a.plus(b));
            }
        }
        Ok(MonomialIdeal::from_minimal(self.dim, minimalize(cands)))
    }

    /// `self^s` for `s >= 1`, minimalizing after every product step to keep
    /// generator sets small.
    pub fn power(&self, s: u32) -> Result<MonomialIdeal> {
        if s == 0 {
            return Err(Error::ZeroPower);
        }
        let mut acc = self.clone();
        for _ in 1..s {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// Ideal sum: the minimalized union of the generating sets.
    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.require_same_dim(other)?;
        let mut cands = self.gens.clone();
        cands.extend(other.gens.iter().cloned());
        Ok(MonomialIdeal::from_minimal(self.dim, minimalize(cands)))
    }

    /// Order of the ideal: the minimal total degree of a generator, i.e. the
    /// largest `r` with `I ⊆ m^r`.
    pub fn ord(&self) -> u32 {
        self.gens.iter().map(|g| g.total_degree() as u32).min().unwrap()
    }

    pub fn require_proper_checked(&self) -> Result<&Self> {
        self.require_proper()?;
        Ok(self)
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonomialIdeal(dim={}, <{}>)", self.dim, crate::parse::render(self))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::parse::render(self))
    }
}

impl<'de> Deserialize<'de> for MonomialIdeal {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            dim: usize,
            gens: Vec<Exponent>,
        }
        let repr = Repr::deserialize(deserializer)?;
        MonomialIdeal::new(repr.dim, repr.gens).map_err(serde::de::Error::custom)
    }
}

/// The maximal ideal `m_n = <x_1, ..., x_n>`.
pub fn maximal_ideal(n: usize) -> MonomialIdeal {
    let gens = (0..n)
        .map(|i| {
            let mut c = vec![0u32; n];
            c[i] = 1;
            Exponent(c)
        })
        .collect();
    MonomialIdeal::new(n, gens).expect("maximal ideal")
}

/// The principal ideal `<x_1 ... x_n>` generated by the full diagonal
/// monomial.
pub fn principal_diag(n: usize) -> MonomialIdeal {
    MonomialIdeal::new(n, vec![Exponent(vec![1; n])]).expect("principal diagonal ideal")
}

/// All exponent vectors of length `parts` with total degree `total`
/// (the generators of `m^total`), in lexicographic order.
pub fn compositions(total: u32, parts: usize) -> Vec<Exponent> {
    fn rec(total: u32, parts: usize, prefix: &mut Vec<u32>, out: &mut Vec<Exponent>) {
        if parts == 1 {
            prefix.push(total);
            out.push(Exponent(prefix.clone()));
            prefix.pop();
            return;
        }
        for first in 0..=total {
            prefix.push(first);
            rec(total - first, parts - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(total, parts, &mut Vec::with_capacity(parts), &mut out);
    out
}

/// `m_n^r` generated directly from the degree-`r` layer.
pub fn maximal_ideal_power(n: usize, r: u32) -> MonomialIdeal {
    if r == 0 {
        return MonomialIdeal::new(n, vec![Exponent(vec![0; n])]).expect("unit ideal");
    }
    MonomialIdeal::new(n, compositions(r, n)).expect("power of maximal ideal")
}

/// Nonempty subset `L ⊆ {1, ..., n}` of coordinate directions (1-based).
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CoordinateSet {
    members: Vec<usize>,
}

impl CoordinateSet {
    pub fn new(mut members: Vec<usize>, n: usize) -> Result<Self> {
        members.sort_unstable();
        members.dedup();
        if members.is_empty() {
            return Err(Error::InvalidConfig("coordinate set must be nonempty".into()));
        }
        if members[0] < 1 || *members.last().unwrap() > n {
            return Err(Error::InvalidConfig(format!(
                "coordinate set {members:?} not contained in 1..={n}"
            )));
        }
        Ok(CoordinateSet { members })
    }

    /// 1-based member list, sorted.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.binary_search(&i).is_ok()
    }

    /// Builds the subset from a bitmask over `{0, ..., n-1}`.
    pub fn from_mask(mask: u32, n: usize) -> Result<Self> {
        let members = (0..n).filter(|i| mask & (1 << i) != 0).map(|i| i + 1).collect();
        CoordinateSet::new(members, n)
    }
}

impl fmt::Display for CoordinateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, m) in self.members.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for CoordinateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Strictly positive rational weight vector `v` with derived minimum and the
/// index set attaining it.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct WeightVector {
    coords: Vec<Rat>,
}

impl WeightVector {
    pub fn new(coords: Vec<Rat>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::InvalidConfig("weight vector must be nonempty".into()));
        }
        if coords.iter().any(|c| !c.is_positive()) {
            return Err(Error::InvalidConfig("weight vector must be strictly positive".into()));
        }
        Ok(WeightVector { coords })
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `v_min`: the minimal coordinate.
    pub fn v_min(&self) -> Rat {
        self.coords.iter().cloned().reduce(Rat::min).unwrap()
    }

    /// `A(v)`: the (1-based) index set where the minimum is attained.
    pub fn min_set(&self) -> CoordinateSet {
        let v_min = self.v_min();
        let members: Vec<usize> = self
            .coords
            .iter()
            .enumerate()
            .filter(|(_, c)| **c == v_min)
            .map(|(i, _)| i + 1)
            .collect();
        CoordinateSet::new(members, self.coords.len()).expect("nonempty by construction")
    }

    /// Membership in the region `S^(i) = { v > 0 : #A(v) >= n+1-i }`.
    pub fn in_s_region(&self, i: usize) -> bool {
        let n = self.coords.len();
        i >= 1 && i <= n && self.min_set().len() >= n + 1 - i
    }
}
