//! Factorizations over the minimal generators, R-classes and catenary degree.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;
use crate::union_find::UnionFind;

/// Exponent vector over the minimal generators `a_1 < ... < a_e`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Factorization(pub Vec<u64>);

impl Factorization {
    pub fn exps(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// 1-based indices of the nonzero entries.
    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &x)| x != 0)
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn supports_intersect(&self, other: &Factorization) -> bool {
        self.0.iter().zip(&other.0).any(|(&a, &b)| a != 0 && b != 0)
    }

    /// The element this factorization evaluates to.
    pub fn evaluate(&self, gens: &[u64]) -> u64 {
        self.0.iter().zip(gens).map(|(&x, &g)| x * g).sum()
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// `max(|x - g|, |y - g|)` where `g` is the componentwise minimum.
pub fn distance(x: &Factorization, y: &Factorization) -> Result<u64> {
    if x.0.len() != y.0.len() {
        return Err(Error::DimensionMismatch(x.0.len(), y.0.len()));
    }
    let common: u64 = x.0.iter().zip(&y.0).map(|(&a, &b)| a.min(b)).sum();
    Ok(x.len().max(y.len()) - common)
}

/// The complete set `Z(s)`, sorted lexicographically descending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorizationSet {
    pub element: u64,
    pub factorizations: Vec<Factorization>,
}

impl FactorizationSet {
    pub fn len(&self) -> usize {
        self.factorizations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factorizations.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Factorization> {
        self.factorizations.iter()
    }

    /// Distinct lengths, ascending.
    pub fn lengths(&self) -> Vec<u64> {
        let mut out: Vec<u64> = self.factorizations.iter().map(Factorization::len).collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// All factorizations of `s`. Empty when `s` is not a member.
pub fn factorizations(sg: &NumericalSemigroup, s: u64) -> FactorizationSet {
    let gens = sg.min_gens();
    let mut out = Vec::new();
    if sg.contains_u(s) {
        let mut exps = vec![0; gens.len()];
        descend(sg, gens, gens.len() - 1, s, &mut exps, &mut out);
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    FactorizationSet {
        element: s,
        factorizations: out,
    }
}

// Chooses the exponent of generator `i` (largest generator first); the
// multiplicity is settled last by divisibility. Remainders outside the
// semigroup are cut immediately.
fn descend(
    sg: &NumericalSemigroup,
    gens: &[u64],
    i: usize,
    rest: u64,
    exps: &mut Vec<u64>,
    out: &mut Vec<Factorization>,
) {
    if i == 0 {
        if rest.is_multiple_of(gens[0]) {
            exps[0] = rest / gens[0];
            out.push(Factorization(exps.clone()));
            exps[0] = 0;
        }
        return;
    }
    let g = gens[i];
    for k in 0..=rest / g {
        let r = rest - k * g;
        if sg.contains_u(r) {
            exps[i] = k;
            descend(sg, gens, i - 1, r, exps, out);
        }
    }
    exps[i] = 0;
}

/// The set of lengths `L(s)`.
pub fn length_set(sg: &NumericalSemigroup, s: u64) -> Result<Vec<u64>> {
    if !sg.contains_u(s) {
        return Err(Error::NotMember(s));
    }
    Ok(factorizations(sg, s).lengths())
}

/// `Z^i(s)`: factorizations of `s` using generator `i` (1-based).
pub fn factorizations_with_support(
    sg: &NumericalSemigroup,
    s: u64,
    index: usize,
) -> Result<Vec<Factorization>> {
    let e = sg.embedding_dimension();
    if index == 0 || index > e {
        return Err(Error::IndexOutOfRange {
            index,
            embedding_dimension: e,
        });
    }
    if !sg.contains_u(s) {
        return Err(Error::NotMember(s));
    }
    Ok(factorizations(sg, s)
        .factorizations
        .into_iter()
        .filter(|x| x.0[index - 1] != 0)
        .collect())
}

/// Partition of a factorization set under chained support intersection.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RClassPartition {
    pub classes: Vec<Vec<Factorization>>,
    pub min_lengths: Vec<u64>,
    pub m_value: u64,
}

impl RClassPartition {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

pub fn r_classes(z: &FactorizationSet) -> Result<RClassPartition> {
    let facts = &z.factorizations;
    if facts.is_empty() {
        return Err(Error::EmptyFactorizationSet);
    }
    let dim = facts[0].0.len();
    let mut uf = UnionFind::new(facts.len());
    for i in 0..dim {
        let mut holders = facts.iter().enumerate().filter(|(_, x)| x.0[i] != 0);
        if let Some((first, _)) = holders.next() {
            for (j, _) in holders {
                uf.union(first, j);
            }
        }
    }
    let classes: Vec<Vec<Factorization>> = uf
        .groups()
        .into_iter()
        .map(|idx| idx.into_iter().map(|k| facts[k].clone()).collect())
        .collect();
    let min_lengths: Vec<u64> = classes
        .iter()
        .map(|c| c.iter().map(Factorization::len).min().unwrap_or(0))
        .collect();
    let m_value = min_lengths.iter().copied().max().unwrap_or(0);
    Ok(RClassPartition {
        classes,
        min_lengths,
        m_value,
    })
}

/// Catenary degree of a single factorization set: the least `N` such that
/// the graph joining factorizations at distance `<= N` is connected.
pub fn catenary_of_set(z: &FactorizationSet) -> u64 {
    let facts = &z.factorizations;
    if facts.len() <= 1 {
        return 0;
    }
    let mut edges = Vec::with_capacity(facts.len() * (facts.len() - 1) / 2);
    for i in 0..facts.len() {
        for j in i + 1..facts.len() {
            let d = distance(&facts[i], &facts[j]).expect("same dimension");
            edges.push((d, i, j));
        }
    }
    edges.sort_unstable();
    let mut uf = UnionFind::new(facts.len());
    let mut joined = 1;
    for (d, i, j) in edges {
        if uf.union(i, j) {
            joined += 1;
            if joined == facts.len() {
                return d;
            }
        }
    }
    unreachable!("complete graph is connected")
}

/// `C(s)` for a member `s`.
pub fn element_catenary(sg: &NumericalSemigroup, s: u64) -> Result<u64> {
    if !sg.contains_u(s) {
        return Err(Error::NotMember(s));
    }
    Ok(catenary_of_set(&factorizations(sg, s)))
}

/// `{ w + a_i : w in Ap(S, a_1) \ {0}, 2 <= i <= e }`, ascending.
pub fn betti_candidates(sg: &NumericalSemigroup) -> Result<Vec<u64>> {
    if sg.embedding_dimension() < 2 {
        return Ok(Vec::new());
    }
    let ap = sg.apery_set(sg.multiplicity())?;
    let mut out = Vec::new();
    for &w in &ap[1..] {
        for &a in &sg.min_gens()[1..] {
            out.push(
                w.checked_add(a)
                    .ok_or(Error::Overflow("Betti candidates"))?,
            );
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Both routes to `C(S)` together with the candidates that realize it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatenaryDetail {
    pub value: u64,
    /// Max over candidates with at least two R-classes of the largest
    /// per-class minimum length.
    pub m_value: u64,
    /// Max over candidates of the element catenary degree.
    pub bottleneck_max: u64,
    /// Candidates whose element catenary degree equals `value`.
    pub attained_at: Vec<u64>,
}

pub fn semigroup_catenary_detail(sg: &NumericalSemigroup) -> Result<CatenaryDetail> {
    let candidates = betti_candidates(sg)?;
    let mut m_value = 0;
    let mut per_element = Vec::with_capacity(candidates.len());
    for &s in &candidates {
        let z = factorizations(sg, s);
        let part = r_classes(&z)?;
        if part.len() >= 2 {
            m_value = m_value.max(part.m_value);
        }
        per_element.push((s, catenary_of_set(&z)));
    }
    let bottleneck_max = per_element.iter().map(|&(_, c)| c).max().unwrap_or(0);
    if m_value != bottleneck_max {
        return Err(Error::Internal(format!(
            "catenary degree of {sg}: R-class route gives {m_value}, bottleneck route gives {bottleneck_max}"
        )));
    }
    let attained_at = per_element
        .iter()
        .filter(|&&(_, c)| c == bottleneck_max)
        .map(|&(s, _)| s)
        .collect();
    Ok(CatenaryDetail {
        value: m_value,
        m_value,
        bottleneck_max,
        attained_at,
    })
}

/// `C(S)`, computed through R-classes and through element bottlenecks; the
/// two must agree.
pub fn semigroup_catenary(sg: &NumericalSemigroup) -> Result<u64> {
    semigroup_catenary_detail(sg).map(|d| d.value)
}
