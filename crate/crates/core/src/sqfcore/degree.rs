use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest number of variables a [`SqfDegree`] can address.
pub const MAX_VARS: usize = 64;

/// A squarefree multidegree: a subset of the variables `x_1, ..., x_n`.
///
/// Variables are 1-indexed; variable `i` is stored in bit `i - 1`. The total
/// order is lexicographic on the sorted member lists, so `{1,2} < {1,3} < {2}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct SqfDegree(u64);

impl SqfDegree {
    pub const EMPTY: SqfDegree = SqfDegree(0);

    pub fn from_bits(bits: u64) -> Self {
        SqfDegree(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// Builds a degree from 1-indexed variables, checking each against `n`.
    pub fn from_vars<I: IntoIterator<Item = usize>>(n: usize, vars: I) -> Result<Self> {
        let mut bits = 0u64;
        for v in vars {
            if v == 0 || v > n || v > MAX_VARS {
                return Err(Error::VariableOutOfRange { index: v, n });
            }
            bits |= 1 << (v - 1);
        }
        Ok(SqfDegree(bits))
    }

    /// `{1, ..., n}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_VARS, "at most {MAX_VARS} variables");
        if n == MAX_VARS {
            SqfDegree(u64::MAX)
        } else {
            SqfDegree((1u64 << n) - 1)
        }
    }

    pub fn singleton(var: usize) -> Self {
        debug_assert!((1..=MAX_VARS).contains(&var));
        SqfDegree(1 << (var - 1))
    }

    /// Sorted 1-indexed members.
    pub fn vars(self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let tz = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(tz + 1)
            }
        })
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, var: usize) -> bool {
        (1..=MAX_VARS).contains(&var) && self.0 & (1 << (var - 1)) != 0
    }

    pub fn is_subset(self, other: SqfDegree) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset(self, other: SqfDegree) -> bool {
        self != other && self.is_subset(other)
    }

    pub fn union(self, other: SqfDegree) -> SqfDegree {
        SqfDegree(self.0 | other.0)
    }

    pub fn intersection(self, other: SqfDegree) -> SqfDegree {
        SqfDegree(self.0 & other.0)
    }

    pub fn difference(self, other: SqfDegree) -> SqfDegree {
        SqfDegree(self.0 & !other.0)
    }

    pub fn complement(self, n: usize) -> SqfDegree {
        SqfDegree::full(n).difference(self)
    }

    pub fn with(self, var: usize) -> SqfDegree {
        self.union(SqfDegree::singleton(var))
    }

    pub fn without(self, var: usize) -> SqfDegree {
        self.difference(SqfDegree::singleton(var))
    }

    /// Largest variable index in the degree, or 0 for the empty degree.
    pub fn max_var(self) -> usize {
        64 - self.0.leading_zeros() as usize
    }

    /// Ordering by size first, then lexicographically. This is the order of
    /// free-module bases in resolutions.
    pub fn cmp_graded(&self, other: &SqfDegree) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.cmp(other))
    }

    /// All subsets of `self`, in increasing numeric order of their bitmasks.
    pub fn subsets(self) -> impl Iterator<Item = SqfDegree> {
        let mask = self.0;
        let mut cur = Some(0u64);
        std::iter::from_fn(move || {
            let s = cur?;
            cur = if s == mask { None } else { Some(((s | !mask).wrapping_add(1)) & mask) };
            Some(SqfDegree(s))
        })
    }
}

impl Ord for SqfDegree {
    fn cmp(&self, other: &Self) -> Ordering {
        // Lexicographic on sorted member lists: walk the common prefix, then
        // the smaller next member wins; a proper prefix sorts first.
        let (mut a, mut b) = (self.0, other.0);
        loop {
            match (a == 0, b == 0) {
                (true, true) => return Ordering::Equal,
                (true, false) => return Ordering::Less,
                (false, true) => return Ordering::Greater,
                _ => {}
            }
            let (ta, tb) = (a.trailing_zeros(), b.trailing_zeros());
            if ta != tb {
                return ta.cmp(&tb);
            }
            a &= a - 1;
            b &= b - 1;
        }
    }
}

impl PartialOrd for SqfDegree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for SqfDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Renders as a sorted variable list, e.g. `[1,3]`.
impl fmt::Display for SqfDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")
    }
}

impl Serialize for SqfDegree {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.vars().serialize(s)
    }
}

impl<'de> Deserialize<'de> for SqfDegree {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let vars = Vec::<usize>::deserialize(d)?;
        SqfDegree::from_vars(MAX_VARS, vars).map_err(serde::de::Error::custom)
    }
}

/// Keeps only the inclusion-minimal members, sorted and deduplicated.
pub fn minimalize(mut degs: Vec<SqfDegree>) -> Vec<SqfDegree> {
    degs.sort_by(SqfDegree::cmp_graded);
    degs.dedup();
    let mut out: Vec<SqfDegree> = Vec::with_capacity(degs.len());
    for d in degs {
        if !out.iter().any(|m| m.is_subset(d)) {
            out.push(d);
        }
    }
    out.sort();
    out
}

/// Keeps only the inclusion-maximal members, sorted and deduplicated.
pub fn maximalize(mut degs: Vec<SqfDegree>) -> Vec<SqfDegree> {
    degs.sort_by(|a, b| b.cmp_graded(a));
    degs.dedup();
    let mut out: Vec<SqfDegree> = Vec::with_capacity(degs.len());
    for d in degs {
        if !out.iter().any(|m| d.is_subset(*m)) {
            out.push(d);
        }
    }
    out.sort();
    out
}

/// Minimal transversals (minimal hitting sets) of a family of sets.
///
/// Berge's incremental algorithm: the covers of the first `k` sets are
/// extended one set at a time and re-minimalized. An empty member admits no
/// transversal, so the result is empty; an empty family has the single
/// transversal `∅`.
pub fn minimal_transversals(family: &[SqfDegree]) -> Vec<SqfDegree> {
    let mut edges = minimalize(family.to_vec());
    // Small edges first keep the intermediate cover lists short.
    edges.sort_by(SqfDegree::cmp_graded);
    let mut covers = vec![SqfDegree::EMPTY];
    for e in edges {
        let mut next = Vec::with_capacity(covers.len());
        let mut extended = Vec::new();
        for c in &covers {
            if !c.intersection(e).is_empty() {
                next.push(*c);
            } else {
                extended.extend(e.iter().map(|v| c.with(v)));
            }
        }
        // Untouched covers stay minimal; an extension survives only if no
        // other cover (old or new) sits strictly inside it.
        extended.sort_by(SqfDegree::cmp_graded);
        extended.dedup();
        let mut kept: Vec<SqfDegree> = Vec::with_capacity(extended.len());
        for x in extended {
            if next.iter().any(|c| c.is_subset(x)) || kept.iter().any(|c| c.is_subset(x)) {
                continue;
            }
            kept.push(x);
        }
        next.extend(kept);
        covers = next;
        if covers.is_empty() {
            break;
        }
    }
    covers.sort();
    covers
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(vars: &[usize]) -> SqfDegree {
        SqfDegree::from_vars(10, vars.iter().copied()).unwrap()
    }

    #[test]
    fn lex_order_on_member_lists() {
        let mut v = vec![d(&[2]), d(&[1, 3]), d(&[]), d(&[1, 2]), d(&[1])];
        v.sort();
        assert_eq!(v, vec![d(&[]), d(&[1]), d(&[1, 2]), d(&[1, 3]), d(&[2])]);
        v.sort_by(SqfDegree::cmp_graded);
        assert_eq!(v, vec![d(&[]), d(&[1]), d(&[2]), d(&[1, 2]), d(&[1, 3])]);
    }

    #[test]
    fn out_of_range_variable() {
        assert!(matches!(
            SqfDegree::from_vars(3, [4]),
            Err(Error::VariableOutOfRange { index: 4, n: 3 })
        ));
        assert!(SqfDegree::from_vars(3, [0]).is_err());
    }

    #[test]
    fn subsets_enumerates_power_set() {
        let s: Vec<_> = d(&[1, 3, 4]).subsets().collect();
        assert_eq!(s.len(), 8);
        assert!(s.iter().all(|x| x.is_subset(d(&[1, 3, 4]))));
        assert_eq!(SqfDegree::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn transversals_of_triangle_edges() {
        let t = minimal_transversals(&[d(&[1, 2]), d(&[2, 3]), d(&[1, 3])]);
        assert_eq!(t, vec![d(&[1, 2]), d(&[1, 3]), d(&[2, 3])]);
        assert_eq!(minimal_transversals(&[]), vec![SqfDegree::EMPTY]);
        assert!(minimal_transversals(&[SqfDegree::EMPTY]).is_empty());
    }

    #[test]
    fn display_and_serde() {
        assert_eq!(d(&[3, 1]).to_string(), "[1,3]");
        let js = serde_json::to_string(&d(&[2, 5])).unwrap();
        assert_eq!(js, "[2,5]");
        let back: SqfDegree = serde_json::from_str(&js).unwrap();
        assert_eq!(back, d(&[2, 5]));
    }
}
