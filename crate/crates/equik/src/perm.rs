//! Permutations of `{0, .., n-1}` stored by their image arrays.
//!
//! The derived `Ord` (lexicographic on images) is the fixed total order that
//! every "canonical representative" choice in the crate derives from.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    images: Vec<u8>,
}

impl Perm {
    pub fn identity(degree: usize) -> Perm {
        Perm {
            images: (0..degree as u8).collect(),
        }
    }

    /// Builds a permutation from its image array, checking bijectivity.
    pub fn from_images(images: Vec<u8>) -> Result<Perm> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if (i as usize) >= n || seen[i as usize] {
                return Err(Error::InvalidPerm(format!("{images:?} is not a bijection")));
            }
            seen[i as usize] = true;
        }
        Ok(Perm { images })
    }

    /// Builds a permutation of the given degree from disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<u8>]) -> Result<Perm> {
        let mut images: Vec<u8> = (0..degree as u8).collect();
        for cycle in cycles {
            for w in 0..cycle.len() {
                let from = cycle[w] as usize;
                let to = cycle[(w + 1) % cycle.len()];
                if from >= degree || (to as usize) >= degree {
                    return Err(Error::InvalidPerm(format!(
                        "cycle point out of range for degree {degree}"
                    )));
                }
                images[from] = to;
            }
        }
        Perm::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    /// `(self * other)(x) = self(other(x))`: `other` acts first.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: other.images.iter().map(|&i| self.images[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u8; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j as usize] = i as u8;
        }
        Perm { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j as usize)
    }

    /// Multiplicative order.
    pub fn order(&self) -> usize {
        self.cycles_with_fixed()
            .iter()
            .fold(1usize, |acc, c| lcm(acc, c.len()))
    }

    /// Cycle decomposition, fixed points omitted, each cycle starting at its
    /// minimal point, cycles sorted by first point.
    pub fn cycles(&self) -> Vec<Vec<u8>> {
        self.cycles_with_fixed()
            .into_iter()
            .filter(|c| c.len() > 1)
            .collect()
    }

    fn cycles_with_fixed(&self) -> Vec<Vec<u8>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start as u8];
            seen[start] = true;
            let mut p = self.apply(start);
            while p != start {
                seen[p] = true;
                cycle.push(p as u8);
                p = self.apply(p);
            }
            out.push(cycle);
        }
        out
    }

    /// `self * g * self^{-1}`.
    pub fn conjugate(&self, g: &Perm) -> Perm {
        self.compose(g).compose(&self.inverse())
    }

    /// Renders the cycle notation used in all external formats, e.g.
    /// `"(0 1)(2 3)"`; the identity is `"()"`.
    pub fn cycle_notation(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        let mut s = String::new();
        for c in cycles {
            s.push('(');
            let parts: Vec<String> = c.iter().map(|p| p.to_string()).collect();
            s.push_str(&parts.join(" "));
            s.push(')');
        }
        s
    }

    /// Parses cycle notation relative to a fixed degree.
    pub fn parse_cycles(degree: usize, s: &str) -> Result<Perm> {
        let s = s.trim();
        if s == "()" || s.is_empty() {
            return Ok(Perm::identity(degree));
        }
        let mut cycles = Vec::new();
        let mut rest = s;
        while !rest.is_empty() {
            let open = rest
                .find('(')
                .ok_or_else(|| Error::InvalidPerm(format!("bad cycle notation: {s}")))?;
            let close = rest
                .find(')')
                .ok_or_else(|| Error::InvalidPerm(format!("bad cycle notation: {s}")))?;
            if close < open {
                return Err(Error::InvalidPerm(format!("bad cycle notation: {s}")));
            }
            let inner = &rest[open + 1..close];
            let cycle: Vec<u8> = inner
                .split_whitespace()
                .map(|t| {
                    t.parse::<u8>()
                        .map_err(|_| Error::InvalidPerm(format!("bad point in: {s}")))
                })
                .collect::<Result<_>>()?;
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            rest = &rest[close + 1..];
        }
        Perm::from_cycles(degree, &cycles)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycle_notation())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm[{}]", self.cycle_notation())
    }
}

impl FromStr for Perm {
    type Err = Error;

    /// Parses cycle notation; the degree is the smallest that fits the cycles.
    fn from_str(s: &str) -> Result<Perm> {
        let max = s
            .split(|c: char| !c.is_ascii_digit())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().unwrap_or(0))
            .max()
            .unwrap_or(0);
        Perm::parse_cycles(max + 1, s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_applies_right_factor_first() {
        let a = Perm::from_cycles(3, &[vec![0, 1]]).unwrap();
        let b = Perm::from_cycles(3, &[vec![1, 2]]).unwrap();
        // (a*b)(1) = a(b(1)) = a(2) = 2
        assert_eq!(a.compose(&b).apply(1), 2);
    }

    #[test]
    fn inverse_and_identity() {
        let g = Perm::from_cycles(4, &[vec![0, 1, 2, 3]]).unwrap();
        assert!(g.compose(&g.inverse()).is_identity());
        assert_eq!(g.order(), 4);
        assert_eq!(Perm::identity(4).order(), 1);
    }

    #[test]
    fn cycle_notation_round_trip() {
        let g = Perm::from_cycles(5, &[vec![0, 3], vec![1, 2]]).unwrap();
        assert_eq!(g.cycle_notation(), "(0 3)(1 2)");
        assert_eq!(Perm::parse_cycles(5, "(0 3)(1 2)").unwrap(), g);
        assert_eq!(Perm::parse_cycles(5, "()").unwrap(), Perm::identity(5));
        assert_eq!(Perm::identity(5).cycle_notation(), "()");
    }

    #[test]
    fn rejects_non_bijection() {
        assert!(Perm::from_images(vec![0, 0, 1]).is_err());
        assert!(Perm::from_images(vec![0, 3]).is_err());
    }
}
