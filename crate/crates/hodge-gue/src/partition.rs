//! Integer partitions: weakly decreasing sequences of positive parts.

use std::fmt;

use num::BigInt;

use crate::rational::factorial;

/// A partition; the empty partition is allowed.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds from parts in any order; zero parts are rejected.
    pub fn new(mut parts: Vec<u32>) -> Self {
        assert!(parts.iter().all(|&p| p > 0), "partition parts must be positive");
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts.
    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Multiplicity of `i` among the parts.
    pub fn multiplicity(&self, i: u32) -> u32 {
        self.parts.iter().filter(|&&p| p == i).count() as u32
    }

    /// `prod_i m_i(lambda)!`.
    pub fn multiplicity_factorial(&self) -> BigInt {
        let mut acc = BigInt::from(1);
        let mut run = 1u32;
        for w in self.parts.windows(2) {
            if w[0] == w[1] {
                run += 1;
            } else {
                acc *= factorial(run);
                run = 1;
            }
        }
        if !self.parts.is_empty() {
            acc *= factorial(run);
        }
        acc
    }

    /// The partition with 1 added to every part.
    pub fn shift_up(&self) -> Partition {
        Partition { parts: self.parts.iter().map(|p| p + 1).collect() }
    }

    /// Removes one copy of `part`; `None` when absent.
    pub fn remove_part(&self, part: u32) -> Option<Partition> {
        let pos = self.parts.iter().position(|&p| p == part)?;
        let mut parts = self.parts.clone();
        parts.remove(pos);
        Some(Partition { parts })
    }

    /// Removes the sub-multiset `other`; `None` when not contained.
    pub fn remove_all(&self, other: &Partition) -> Option<Partition> {
        let mut cur = self.clone();
        for &p in &other.parts {
            cur = cur.remove_part(p)?;
        }
        Some(cur)
    }

    /// All partitions of `n`.
    pub fn all_of(n: u32) -> Vec<Partition> {
        Self::all_of_bounded(n, n)
    }

    /// All partitions of `n` with parts at most `max_part`.
    pub fn all_of_bounded(n: u32, max_part: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(remaining: u32, max_part: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            let hi = remaining.min(max_part);
            for p in (1..=hi).rev() {
                cur.push(p);
                rec(remaining - p, p, cur, out);
                cur.pop();
            }
        }
        rec(n, max_part, &mut cur, &mut out);
        out
    }

    /// Parses the display form: comma-separated parts, `-` for empty.
    pub fn parse(s: &str) -> Option<Partition> {
        let s = s.trim();
        if s == "-" || s.is_empty() {
            return Some(Partition::empty());
        }
        let parts: Option<Vec<u32>> = s.split(',').map(|p| p.trim().parse().ok()).collect();
        let parts = parts?;
        if parts.iter().any(|&p| p == 0) {
            return None;
        }
        Some(Partition::new(parts))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", strs.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_statistics() {
        let p = Partition::new(vec![1, 3, 1]);
        assert_eq!(p.parts(), &[3, 1, 1]);
        assert_eq!(p.weight(), 5);
        assert_eq!(p.len(), 3);
        assert_eq!(p.multiplicity(1), 2);
        assert_eq!(p.multiplicity_factorial(), BigInt::from(2));
        assert_eq!(p.shift_up().parts(), &[4, 2, 2]);
    }

    #[test]
    fn empty_partition() {
        let e = Partition::empty();
        assert_eq!(e.weight(), 0);
        assert_eq!(e.multiplicity_factorial(), BigInt::from(1));
        assert_eq!(e.to_string(), "-");
        assert_eq!(Partition::parse("-"), Some(Partition::empty()));
    }

    #[test]
    fn enumeration_counts_match_partition_numbers() {
        let p: Vec<usize> = (0..=8).map(|n| Partition::all_of(n).len()).collect();
        assert_eq!(p, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(Partition::all_of_bounded(6, 2).len(), 4);
    }

    #[test]
    fn multiset_removal() {
        let p = Partition::new(vec![3, 2, 2, 1]);
        let q = Partition::new(vec![2, 1]);
        assert_eq!(p.remove_all(&q), Some(Partition::new(vec![3, 2])));
        assert_eq!(p.remove_all(&Partition::new(vec![4])), None);
    }

    #[test]
    fn display_parse_roundtrip() {
        let p = Partition::new(vec![4, 2, 2]);
        assert_eq!(Partition::parse(&p.to_string()), Some(p));
        assert_eq!(Partition::parse("0,1"), None);
    }
}
