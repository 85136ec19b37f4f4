//! Canonical representation of a numerical semigroup.
//!
//! A semigroup is stored through its minimal generators, its conductor and
//! the Apéry set of its multiplicity indexed by residue class. Membership of
//! any integer is then a single comparison: `n` is in `S` iff
//! `n >= w[n mod a_1]`.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;

use crate::error::{Error, Result};

/// Largest multiplicity accepted by [`NumericalSemigroup::from_generators`].
pub const MAX_MULTIPLICITY: u64 = 10_000_000;

/// Largest conductor for which the small elements are materialized.
pub const MAX_CONDUCTOR: u64 = 20_000_000;

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub(crate) fn gcd_all(values: &[u64]) -> u64 {
    values.iter().fold(0, |g, &v| gcd(g, v))
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    min_gens: Vec<u64>,
    /// `apery[r]` is the least element congruent to `r` modulo the multiplicity.
    apery: Vec<u64>,
    small_elements: Vec<u64>,
    conductor: u64,
}

impl NumericalSemigroup {
    /// The semigroup of all non-negative integers.
    pub fn naturals() -> Self {
        NumericalSemigroup {
            min_gens: vec![1],
            apery: vec![0],
            small_elements: Vec::new(),
            conductor: 0,
        }
    }

    /// Builds the semigroup generated by `gens`. Order and duplicates are
    /// irrelevant; redundant generators are dropped.
    pub fn from_generators(gens: &[u64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if gens.contains(&0) {
            return Err(Error::ZeroGenerator);
        }
        let mut gens = gens.to_vec();
        gens.sort_unstable();
        gens.dedup();

        let g = gcd_all(&gens);
        if g != 1 {
            return Err(Error::NotNumericalSemigroup { gens, gcd: g });
        }
        if gens[0] == 1 {
            return Ok(Self::naturals());
        }

        let m = gens[0];
        if m > MAX_MULTIPLICITY {
            return Err(Error::BoundExceeded {
                what: "multiplicity",
                value: m,
                limit: MAX_MULTIPLICITY,
            });
        }
        let apery = shortest_residues(&gens)?;
        let frobenius = apery.iter().max().copied().unwrap_or(0) - m;
        let conductor = frobenius + 1;
        if conductor > MAX_CONDUCTOR {
            return Err(Error::BoundExceeded {
                what: "conductor",
                value: conductor,
                limit: MAX_CONDUCTOR,
            });
        }

        let member = |x: u64| x >= apery[(x % m) as usize];
        let min_gens: Vec<u64> = gens
            .iter()
            .copied()
            .filter(|&g| gens.iter().take_while(|&&h| h < g).all(|&h| !member(g - h)))
            .collect();
        let small_elements = (0..conductor).filter(|&x| member(x)).collect();

        Ok(NumericalSemigroup {
            min_gens,
            apery,
            small_elements,
            conductor,
        })
    }

    /// Builds the semigroup whose elements below `conductor` are exactly
    /// `small_elements` (all integers from `conductor` on are members).
    /// Returns `None` when the set is not closed under addition, does not
    /// contain 0, or `conductor - 1` is listed.
    pub fn from_small_elements(small_elements: &[u64], conductor: u64) -> Option<Self> {
        let mut elems = small_elements.to_vec();
        elems.sort_unstable();
        elems.dedup();
        if conductor == 0 {
            return elems.is_empty().then(Self::naturals);
        }
        if elems.first() != Some(&0) || elems.last().is_some_and(|&x| x >= conductor) {
            return None;
        }
        let mut is_member = vec![false; conductor as usize];
        for &x in &elems {
            is_member[x as usize] = true;
        }
        for (i, &x) in elems.iter().enumerate() {
            for &y in &elems[i..] {
                let sum = x + y;
                if sum < conductor && !is_member[sum as usize] {
                    return None;
                }
            }
        }
        let m = elems.get(1).copied().unwrap_or(conductor);
        let mut gens: Vec<u64> = elems[1..].to_vec();
        gens.extend(conductor..conductor + m);
        let s = Self::from_generators(&gens).ok()?;
        (s.conductor == conductor && s.small_elements == elems).then_some(s)
    }

    pub fn min_gens(&self) -> &[u64] {
        &self.min_gens
    }

    pub fn small_elements(&self) -> &[u64] {
        &self.small_elements
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn frobenius(&self) -> i64 {
        self.conductor as i64 - 1
    }

    pub fn multiplicity(&self) -> u64 {
        self.min_gens[0]
    }

    pub fn embedding_dimension(&self) -> usize {
        self.min_gens.len()
    }

    pub fn is_naturals(&self) -> bool {
        self.conductor == 0
    }

    /// Integers in `[0, conductor)` that are not members.
    pub fn gaps(&self) -> Vec<u64> {
        (0..self.conductor)
            .filter(|&x| !self.contains_u(x))
            .collect()
    }

    pub fn genus(&self) -> u64 {
        self.conductor - self.small_elements.len() as u64
    }

    pub fn contains(&self, n: i64) -> bool {
        n >= 0 && self.contains_u(n as u64)
    }

    pub fn contains_u(&self, n: u64) -> bool {
        let m = self.multiplicity();
        n >= self.apery[(n % m) as usize]
    }

    /// Members in `[0, bound]`, ascending.
    pub fn elements_up_to(&self, bound: u64) -> Vec<u64> {
        let mut out: Vec<u64> = self
            .small_elements
            .iter()
            .copied()
            .take_while(|&x| x <= bound)
            .collect();
        if bound >= self.conductor {
            out.extend(self.conductor..=bound);
        }
        out
    }

    fn require_nonzero_member(&self, s: u64) -> Result<()> {
        if s == 0 || !self.contains_u(s) {
            Err(Error::NotNonzeroMember(s))
        } else {
            Ok(())
        }
    }

    /// Apéry set of `s`: the least member in each residue class modulo `s`,
    /// returned ascending.
    pub fn apery_set(&self, s: u64) -> Result<Vec<u64>> {
        self.require_nonzero_member(s)?;
        if s == self.multiplicity() {
            let mut out = self.apery.clone();
            out.sort_unstable();
            return Ok(out);
        }
        let bound = self
            .conductor
            .checked_add(s)
            .ok_or(Error::Overflow("Apery set window"))?;
        let mut least: Vec<Option<u64>> = vec![None; s as usize];
        let mut remaining = s;
        for x in 0..bound {
            if remaining == 0 {
                break;
            }
            if self.contains_u(x) {
                let slot = &mut least[(x % s) as usize];
                if slot.is_none() {
                    *slot = Some(x);
                    remaining -= 1;
                }
            }
        }
        let mut out: Vec<u64> = least
            .into_iter()
            .map(|w| w.expect("every residue class is hit below conductor + s"))
            .collect();
        out.sort_unstable();
        Ok(out)
    }

    /// `gcd { x in S : 0 < x <= a }` for a nonzero member `a`.
    pub fn d_value(&self, a: u64) -> Result<u64> {
        self.require_nonzero_member(a)?;
        Ok(self.d_value_unchecked(a))
    }

    pub(crate) fn d_value_unchecked(&self, a: u64) -> u64 {
        let mut g = 0;
        for &x in self.small_elements.iter().skip(1) {
            if x > a || g == 1 {
                break;
            }
            g = gcd(g, x);
        }
        if a >= self.conductor && self.conductor > 0 {
            g = gcd(g, self.conductor);
            if a > self.conductor {
                g = 1;
            }
        }
        g
    }

    /// Maximal embedding dimension. Checked both as `e = a_1` and as
    /// `Ap(S, a_1) = {0, a_2, ..., a_e}`; the two must agree.
    pub fn is_med(&self) -> bool {
        let by_count = self.embedding_dimension() as u64 == self.multiplicity();
        let mut expected = vec![0];
        expected.extend_from_slice(&self.min_gens[1..]);
        let mut ap = self.apery.clone();
        ap.sort_unstable();
        let by_apery = ap == expected;
        assert_eq!(
            by_count, by_apery,
            "MED criteria disagree for {self}: e = a_1 is {by_count}, Apery form is {by_apery}"
        );
        by_count
    }

    /// Arf property: `x + y - z` is a member for all members `z <= y <= x`.
    /// Only triples with `x` below the conductor can fail.
    pub fn is_arf(&self) -> bool {
        let elems = &self.small_elements;
        for (xi, &x) in elems.iter().enumerate() {
            for (yi, &y) in elems[..=xi].iter().enumerate() {
                if elems[..=yi].iter().any(|&z| !self.contains_u(x + y - z)) {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.min_gens.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

/// Dijkstra over residues modulo the least generator: entry `r` is the least
/// member of `<gens>` congruent to `r`.
fn shortest_residues(sorted_gens: &[u64]) -> Result<Vec<u64>> {
    let m = sorted_gens[0];
    let mut dist = vec![u64::MAX; m as usize];
    dist[0] = 0;
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0u64, 0u64)));
    while let Some(Reverse((d, r))) = heap.pop() {
        if d > dist[r as usize] {
            continue;
        }
        for &g in &sorted_gens[1..] {
            let nd = d.checked_add(g).ok_or(Error::Overflow("Apery set"))?;
            let nr = ((r + g % m) % m) as usize;
            if nd < dist[nr] {
                dist[nr] = nd;
                heap.push(Reverse((nd, nr as u64)));
            }
        }
    }
    debug_assert!(dist.iter().all(|&d| d != u64::MAX));
    Ok(dist)
}
