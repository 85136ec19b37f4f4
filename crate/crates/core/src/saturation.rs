//! Saturated numerical semigroups.
//!
//! `S` is saturated when `s + d_S(s)` is a member for every nonzero member
//! `s`, where `d_S(s)` is the gcd of the members up to `s`. This module holds
//! the saturation test, the closed-form saturation closure `Sat(A)`, minimal
//! SAT-systems, and a brute-force enumerator used as an oracle for both.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::semigroup::{gcd, gcd_all, NumericalSemigroup};

/// Checks `s + d_S(s) in S` for every member `s` in `(0, conductor]`. Larger
/// members satisfy it trivially.
pub fn is_saturated(s: &NumericalSemigroup) -> bool {
    let c = s.conductor();
    s.small_elements()
        .iter()
        .copied()
        .skip(1)
        .chain((c > 0).then_some(c))
        .all(|x| s.contains_u(x + s.d_value_unchecked(x)))
}

/// A minimal SAT-system `n_1 < ... < n_r` with its partial gcds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SatSystem {
    pub gens: Vec<u64>,
    pub gcd_chain: Vec<u64>,
}

impl SatSystem {
    /// Reduces an arbitrary gcd-1 set to the chain of elements at which the
    /// running gcd strictly drops.
    pub fn reduce(set: &[u64]) -> Result<Self> {
        if set.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if set.contains(&0) {
            return Err(Error::ZeroGenerator);
        }
        let mut sorted = set.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let g = gcd_all(&sorted);
        if g != 1 {
            return Err(Error::NotNumericalSemigroup {
                gens: sorted,
                gcd: g,
            });
        }
        let mut gens = Vec::new();
        let mut gcd_chain = Vec::new();
        let mut running = 0;
        for x in sorted {
            let next = gcd(running, x);
            if running == 0 || next < running {
                gens.push(x);
                gcd_chain.push(next);
                running = next;
            }
            if running == 1 {
                break;
            }
        }
        Ok(SatSystem { gens, gcd_chain })
    }
}

/// `Sat(A)`: the smallest saturated numerical semigroup containing `set`.
///
/// With `n_1 < ... < n_r` the gcd-dropping chain of `set` and `d_j` its
/// partial gcds, the closure is `{0} ∪ {n_j + t d_j : 0 <= t <= t_j}` for
/// `j < r`, followed by every integer from `n_r` on, where `t_j` is the
/// largest `t` with `n_j + t d_j < n_{j+1}`.
pub fn sat_closure(set: &[u64]) -> Result<NumericalSemigroup> {
    let chain = SatSystem::reduce(set)?;
    let r = chain.gens.len();
    let conductor_candidate = chain.gens[r - 1];
    let mut elems = vec![0];
    for j in 0..r - 1 {
        let (n, d, next) = (chain.gens[j], chain.gcd_chain[j], chain.gens[j + 1]);
        elems.extend((n..next).step_by(d as usize));
    }
    // The tail of the last progression may run up to n_r; trim the conductor
    // down to the true one.
    let mut conductor = conductor_candidate;
    while conductor > 0 && elems.last() == Some(&(conductor - 1)) {
        elems.pop();
        conductor -= 1;
    }
    let out = NumericalSemigroup::from_small_elements(&elems, conductor).ok_or_else(|| {
        Error::Internal(format!("saturation closure of {set:?} is not a semigroup"))
    })?;
    if !is_saturated(&out) {
        return Err(Error::Internal(format!(
            "saturation closure of {set:?} failed the saturation test"
        )));
    }
    debug_assert!(set.iter().all(|&a| out.contains_u(a)));
    Ok(out)
}

/// The unique minimal SAT-system of a saturated semigroup: the members where
/// `d_S` strictly drops.
pub fn minimal_sat_system(s: &NumericalSemigroup) -> Result<SatSystem> {
    if !is_saturated(s) {
        return Err(Error::NotSaturated);
    }
    let mut gens = Vec::new();
    let mut gcd_chain = Vec::new();
    let mut running = 0;
    let c = s.conductor();
    let members = s.small_elements().iter().copied().skip(1).chain(c.max(1)..);
    for x in members {
        let next = gcd(running, x);
        if running == 0 || next < running {
            gens.push(x);
            gcd_chain.push(next);
            running = next;
        }
        if running == 1 {
            break;
        }
    }
    Ok(SatSystem { gens, gcd_chain })
}

/// `d_1 > d_2 > ... > d_k = 1` with each term divisible by its successor.
pub fn is_saturated_sequence(d: &[u64]) -> bool {
    d.last() == Some(&1)
        && d.windows(2)
            .all(|w| w[0] > w[1] && w[1] != 0 && w[0] % w[1] == 0)
}

/// Size limits for the exhaustive enumerators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationBounds {
    pub max_multiplicity: u64,
    pub max_conductor: u64,
}

impl Default for EnumerationBounds {
    fn default() -> Self {
        EnumerationBounds {
            max_multiplicity: 10,
            max_conductor: 60,
        }
    }
}

/// All saturated semigroups with multiplicity exactly `multiplicity` and
/// conductor exactly `conductor`, sorted by element set.
///
/// This is a subset search over the window `(m, c)`: members are decided in
/// increasing order, an undecided value is forced in when it is a sum of two
/// chosen members or equals `s + d(s)` for a chosen `s`, and otherwise both
/// branches are explored. Every leaf is then re-checked from scratch.
pub fn enumerate_saturated(multiplicity: u64, conductor: u64) -> Result<Vec<NumericalSemigroup>> {
    enumerate_saturated_with(multiplicity, conductor, EnumerationBounds::default())
}

pub fn enumerate_saturated_with(
    multiplicity: u64,
    conductor: u64,
    bounds: EnumerationBounds,
) -> Result<Vec<NumericalSemigroup>> {
    if multiplicity < 2 {
        return Err(Error::MultiplicityTooSmall(multiplicity));
    }
    if conductor < multiplicity {
        return Err(Error::ConductorBelowMultiplicity {
            multiplicity,
            conductor,
        });
    }
    check_bound("multiplicity", multiplicity, bounds.max_multiplicity)?;
    check_bound("conductor", conductor, bounds.max_conductor)?;

    let mut search = SubsetSearch::new(conductor);
    search.excluded_below = multiplicity;
    search.forced[multiplicity as usize] = true;
    search.require_gap = Some(conductor - 1);
    let mut leaves = Vec::new();
    search.run(1, &mut leaves);

    let mut out: Vec<NumericalSemigroup> = leaves
        .into_iter()
        .filter(|elems| closed_within(elems, conductor))
        .filter_map(|elems| NumericalSemigroup::from_small_elements(&elems, conductor))
        .filter(|s| s.conductor() == conductor && s.multiplicity() == multiplicity)
        .filter(is_saturated)
        .collect();
    out.sort_by(|a, b| a.small_elements().cmp(b.small_elements()));
    out.dedup();
    Ok(out)
}

/// All saturated semigroups containing `set`, found by the same subset
/// search over the window `[0, conductor(<set>))`. Their intersection is
/// `Sat(set)`; see [`intersection`].
pub fn enumerate_saturated_containing(
    set: &[u64],
    max_window: u64,
) -> Result<Vec<NumericalSemigroup>> {
    let generated = NumericalSemigroup::from_generators(set)?;
    let window = generated.conductor().max(1);
    check_bound("window", window, max_window)?;

    let mut search = SubsetSearch::new(window);
    for &a in set {
        if a < window {
            search.forced[a as usize] = true;
        }
    }
    let mut leaves = Vec::new();
    search.run(1, &mut leaves);

    let mut out: Vec<NumericalSemigroup> = leaves
        .into_iter()
        .filter(|elems| closed_within(elems, window))
        .filter_map(|elems| {
            let mut elems = elems;
            let mut c = window;
            while c > 0 && elems.last() == Some(&(c - 1)) {
                elems.pop();
                c -= 1;
            }
            NumericalSemigroup::from_small_elements(&elems, c)
        })
        .filter(is_saturated)
        .filter(|s| set.iter().all(|&a| s.contains_u(a)))
        .collect();
    out.sort_by(|a, b| {
        (a.conductor(), a.small_elements()).cmp(&(b.conductor(), b.small_elements()))
    });
    out.dedup();
    Ok(out)
}

/// Elementwise intersection of numerical semigroups.
pub fn intersection(semigroups: &[NumericalSemigroup]) -> Option<NumericalSemigroup> {
    let conductor = semigroups.iter().map(|s| s.conductor()).max()?;
    let elems: Vec<u64> = (0..conductor)
        .filter(|&x| semigroups.iter().all(|s| s.contains_u(x)))
        .collect();
    NumericalSemigroup::from_small_elements(&elems, conductor)
}

fn check_bound(what: &'static str, value: u64, limit: u64) -> Result<()> {
    if value > limit {
        Err(Error::BoundExceeded { what, value, limit })
    } else {
        Ok(())
    }
}

fn closed_within(elems: &[u64], window: u64) -> bool {
    let mut member = vec![false; window as usize];
    for &x in elems {
        member[x as usize] = true;
    }
    elems.iter().enumerate().all(|(i, &x)| {
        elems[i..]
            .iter()
            .all(|&y| x + y >= window || member[(x + y) as usize])
    })
}

/// Depth-first search over membership decisions for `1..window`; everything
/// from `window` on is a member.
struct SubsetSearch {
    window: u64,
    /// Values in `(0, excluded_below)` are never members.
    excluded_below: u64,
    /// A value that must stay a gap.
    require_gap: Option<u64>,
    forced: Vec<bool>,
    chosen: Vec<u64>,
}

impl SubsetSearch {
    fn new(window: u64) -> Self {
        SubsetSearch {
            window,
            excluded_below: 0,
            require_gap: None,
            forced: vec![false; window as usize + 1],
            chosen: vec![0],
        }
    }

    fn run(&mut self, v: u64, leaves: &mut Vec<Vec<u64>>) {
        if v >= self.window {
            leaves.push(self.chosen.clone());
            return;
        }
        let forced = self.forced[v as usize];
        let may_include = v >= self.excluded_below && self.require_gap != Some(v);
        if forced && !may_include {
            return;
        }
        if may_include {
            let saved = self.forced.clone();
            self.chosen.push(v);
            let running = self.chosen[1..].iter().fold(0, |g, &x| gcd(g, x));
            let marks = self
                .chosen
                .iter()
                .map(|&x| x + v)
                .chain(std::iter::once(v + running));
            for t in marks {
                if t < self.window {
                    self.forced[t as usize] = true;
                }
            }
            self.run(v + 1, leaves);
            self.chosen.pop();
            self.forced = saved;
        }
        if !forced {
            self.run(v + 1, leaves);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(gens: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    #[test]
    fn saturation_test() {
        assert!(is_saturated(&s(&[5, 33, 34, 36, 37])));
        assert!(!is_saturated(&s(&[3, 5])));
        assert!(is_saturated(&NumericalSemigroup::naturals()));
    }

    #[test]
    fn closure_examples() {
        assert_eq!(sat_closure(&[1]).unwrap(), NumericalSemigroup::naturals());
        assert_eq!(sat_closure(&[5, 33]).unwrap(), s(&[5, 33, 34, 36, 37]));
        let t = sat_closure(&[4, 6, 7]).unwrap();
        // {0, 4, 6} followed by everything from 7 on
        assert_eq!(t.small_elements(), &[0, 4]);
        assert_eq!(t.conductor(), 6);
        assert_eq!(t.min_gens(), &[4, 6, 7, 9]);
        assert!(sat_closure(&[4, 6]).is_err());
        assert_eq!(sat_closure(&[6, 4, 8, 7, 7]).unwrap(), t);
    }

    #[test]
    fn minimal_systems() {
        let n = minimal_sat_system(&NumericalSemigroup::naturals()).unwrap();
        assert_eq!((n.gens, n.gcd_chain), (vec![1], vec![1]));
        let e = minimal_sat_system(&s(&[5, 33, 34, 36, 37])).unwrap();
        assert_eq!((e.gens, e.gcd_chain), (vec![5, 33], vec![5, 1]));
        let t = minimal_sat_system(&sat_closure(&[4, 6, 7]).unwrap()).unwrap();
        assert_eq!((t.gens, t.gcd_chain), (vec![4, 6, 7], vec![4, 2, 1]));
        assert_eq!(minimal_sat_system(&s(&[3, 5])), Err(Error::NotSaturated));
    }

    #[test]
    fn saturated_sequences() {
        assert!(is_saturated_sequence(&[4, 2, 1]));
        assert!(!is_saturated_sequence(&[6, 4, 1]));
        assert!(is_saturated_sequence(&[1]));
        assert!(!is_saturated_sequence(&[]));
        assert!(!is_saturated_sequence(&[4, 2]));
        assert!(!is_saturated_sequence(&[2, 2, 1]));
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(
            enumerate_saturated(5, 33).unwrap(),
            vec![s(&[5, 33, 34, 36, 37])]
        );
        assert!(enumerate_saturated(5, 31).unwrap().is_empty());
        let four_ten = enumerate_saturated(4, 10).unwrap();
        let sets: Vec<&[u64]> = four_ten.iter().map(|s| s.small_elements()).collect();
        assert_eq!(sets, vec![&[0, 4, 6, 8][..], &[0, 4, 8][..]]);
        assert!(four_ten.iter().all(|s| s.conductor() == 10));
    }

    #[test]
    fn enumeration_errors() {
        assert_eq!(
            enumerate_saturated(1, 5),
            Err(Error::MultiplicityTooSmall(1))
        );
        assert!(matches!(
            enumerate_saturated(5, 3),
            Err(Error::ConductorBelowMultiplicity { .. })
        ));
        assert!(matches!(
            enumerate_saturated(11, 20),
            Err(Error::BoundExceeded {
                what: "multiplicity",
                ..
            })
        ));
        assert!(matches!(
            enumerate_saturated(5, 61),
            Err(Error::BoundExceeded {
                what: "conductor",
                ..
            })
        ));
    }

    #[test]
    fn containing_oracle_matches_closure() {
        for set in [&[4, 6, 7][..], &[5, 33], &[6, 10, 15], &[7, 11], &[3]] {
            if gcd_all(set) != 1 {
                continue;
            }
            let all = enumerate_saturated_containing(set, 2_000).unwrap();
            assert_eq!(
                intersection(&all).unwrap(),
                sat_closure(set).unwrap(),
                "{set:?}"
            );
        }
    }
}
