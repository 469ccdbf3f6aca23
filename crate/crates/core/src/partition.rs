//! Module shapes: strictly decreasing parts with multiplicities.
//!
//! A shape `(λ_1^{ρ_1} > λ_2^{ρ_2} > … > λ_k^{ρ_k})` encodes the finite
//! module `⊕ (R/π^{λ_i})^{ρ_i}`. The empty shape is the zero module. The
//! canonical text form is `l^r,l^r,…` with no whitespace; the empty string
//! denotes the empty shape.

use std::fmt;

use crate::error::{Error, Result};

/// A module shape. Parts are strictly decreasing, multiplicities positive.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Partition {
    parts: Vec<(u32, u32)>,
}

impl Partition {
    /// The empty shape (zero module).
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a shape from `(part, multiplicity)` pairs, validating that
    /// parts are strictly decreasing and everything is positive.
    pub fn new(parts: Vec<(u32, u32)>) -> Result<Self> {
        for &(l, r) in &parts {
            if l == 0 {
                return Err(Error::Parse("zero part is not allowed".into()));
            }
            if r == 0 {
                return Err(Error::Parse(format!("part {l} has zero multiplicity")));
            }
        }
        for w in parts.windows(2) {
            if w[0].0 <= w[1].0 {
                return Err(Error::Parse(format!(
                    "parts must strictly decrease: {} followed by {}",
                    w[0].0, w[1].0
                )));
            }
        }
        Ok(Partition { parts })
    }

    /// Parses the canonical text form `l^r(,l^r)*`; the empty string is the
    /// empty shape.
    pub fn parse(text: &str) -> Result<Self> {
        if text.is_empty() {
            return Ok(Self::empty());
        }
        let mut parts = Vec::new();
        for token in text.split(',') {
            let (l, r) = token
                .split_once('^')
                .ok_or_else(|| Error::Parse(format!("token `{token}` is not of the form l^r")))?;
            let part: u32 = l
                .parse()
                .map_err(|_| Error::Parse(format!("bad part in token `{token}`")))?;
            let mult: u32 = r
                .parse()
                .map_err(|_| Error::Parse(format!("bad multiplicity in token `{token}`")))?;
            if part == 0 || mult == 0 {
                return Err(Error::Parse(format!(
                    "token `{token}` has a zero part or multiplicity"
                )));
            }
            parts.push((part, mult));
        }
        Self::new(parts)
    }

    /// The `(part, multiplicity)` pairs, largest part first.
    pub fn parts(&self) -> &[(u32, u32)] {
        &self.parts
    }

    /// The distinct parts (rows of the truncated poset), largest first.
    pub fn rows(&self) -> Vec<u32> {
        self.parts.iter().map(|&(l, _)| l).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of cyclic summands, `Σ ρ_i`.
    pub fn summands(&self) -> u64 {
        self.parts.iter().map(|&(_, r)| r as u64).sum()
    }

    /// `|λ| = Σ λ_i ρ_i`, the length of the module as an `R`-module.
    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&(l, r)| l as u64 * r as u64).sum()
    }

    /// The largest part, or 0 for the empty shape.
    pub fn largest_part(&self) -> u32 {
        self.parts.first().map_or(0, |&(l, _)| l)
    }

    /// Multiplicity of `part`, or 0 if absent.
    pub fn multiplicity(&self, part: u32) -> u32 {
        self.parts
            .iter()
            .find(|&&(l, _)| l == part)
            .map_or(0, |&(_, r)| r)
    }

    /// Index of `part` among the parts, if present.
    pub fn part_index(&self, part: u32) -> Option<usize> {
        self.parts.iter().position(|&(l, _)| l == part)
    }

    /// The shape of `πA`: every part reduced by one, zero parts dropped.
    ///
    /// Strict decrease is preserved by reducing every part in lockstep, so no
    /// merging of equal parts can occur; this is asserted.
    pub fn delete_first_column(&self) -> Partition {
        let parts: Vec<(u32, u32)> = self
            .parts
            .iter()
            .filter(|&&(l, _)| l > 1)
            .map(|&(l, r)| (l - 1, r))
            .collect();
        assert!(
            parts.windows(2).all(|w| w[0].0 > w[1].0),
            "first-column deletion must preserve strict decrease"
        );
        Partition { parts }
    }

    /// Caps every multiplicity at 2. Orbit-pair counts are invariant under
    /// this reduction, so it bounds the work of whole-table scans.
    pub fn cap_multiplicities(&self) -> Partition {
        Partition {
            parts: self.parts.iter().map(|&(l, r)| (l, r.min(2))).collect(),
        }
    }

    /// True for shapes whose distinct parts are at most two consecutive
    /// values: `(a^r)` or `(a^r > (a-1)^s)`, plus the empty shape.
    ///
    /// Every ideal of such a shape is principal, and the class is closed
    /// under [`delete_first_column`](Self::delete_first_column), which is
    /// what the closed-form engine in [`crate::heightzero`] relies on.
    pub fn is_principal_class(&self) -> bool {
        match self.parts.len() {
            0 | 1 => true,
            2 => self.parts[0].0 == self.parts[1].0 + 1,
            _ => false,
        }
    }

    /// Removes one copy of the part at `index`, dropping the part when its
    /// multiplicity reaches zero.
    pub fn remove_copy(&self, index: usize) -> Partition {
        let mut parts = self.parts.clone();
        if parts[index].1 > 1 {
            parts[index].1 -= 1;
        } else {
            parts.remove(index);
        }
        Partition { parts }
    }

    /// All nonempty shapes with multiplicities ≤ 2 and weight ≤ `max_weight`,
    /// ordered by weight and then by the canonical text form.
    pub fn capped_up_to_weight(max_weight: u64) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut stack: Vec<(u32, u32)> = Vec::new();
        fn rec(
            largest_allowed: u32,
            remaining: u64,
            stack: &mut Vec<(u32, u32)>,
            out: &mut Vec<Partition>,
        ) {
            if !stack.is_empty() {
                out.push(Partition {
                    parts: stack.clone(),
                });
            }
            for l in (1..=largest_allowed).rev() {
                for r in 1..=2u32 {
                    let w = l as u64 * r as u64;
                    if w <= remaining {
                        stack.push((l, r));
                        rec(l - 1, remaining - w, stack, out);
                        stack.pop();
                    }
                }
            }
        }
        rec(
            max_weight.min(u32::MAX as u64) as u32,
            max_weight,
            &mut stack,
            &mut out,
        );
        out.sort_by_key(|p| (p.weight(), p.to_string()));
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for &(l, r) in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{l}^{r}")?;
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(text: &str) -> Partition {
        Partition::parse(text).unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(p("3^1,1^1").parts(), &[(3, 1), (1, 1)]);
        assert_eq!(p(""), Partition::empty());
        assert_eq!(p("2^2").parts(), &[(2, 2)]);
    }

    #[test]
    fn parse_rejects_bad_syntax() {
        assert!(Partition::parse("3").is_err());
        assert!(Partition::parse("1^1,3^1").is_err());
        assert!(Partition::parse("0^1").is_err());
        assert!(Partition::parse("2^0").is_err());
        assert!(Partition::parse("2^2,2^1").is_err());
        assert!(Partition::parse("x^1").is_err());
    }

    #[test]
    fn weight_examples() {
        assert_eq!(p("3^1,1^1").weight(), 4);
        assert_eq!(Partition::empty().weight(), 0);
        assert_eq!(p("2^2").weight(), 4);
    }

    #[test]
    fn delete_first_column_examples() {
        assert_eq!(p("3^1,1^1").delete_first_column(), p("2^1"));
        assert_eq!(p("1^3").delete_first_column(), Partition::empty());
        assert_eq!(p("4^1,3^2").delete_first_column(), p("3^1,2^2"));
    }

    #[test]
    fn cap_multiplicities_examples() {
        assert_eq!(p("1^3").cap_multiplicities(), p("1^2"));
        assert_eq!(p("3^5,2^1").cap_multiplicities(), p("3^2,2^1"));
        assert_eq!(p("2^2").cap_multiplicities(), p("2^2"));
    }

    #[test]
    fn principal_class_examples() {
        assert!(p("3^1,2^1").is_principal_class());
        assert!(!p("3^1,1^1").is_principal_class());
        assert!(p("2^2").is_principal_class());
        assert!(Partition::empty().is_principal_class());
    }

    #[test]
    fn capped_enumeration_small() {
        let up2: Vec<String> = Partition::capped_up_to_weight(2)
            .iter()
            .map(|q| q.to_string())
            .collect();
        assert_eq!(up2, vec!["1^1", "1^2", "2^1"]);
        // Every enumerated shape is capped and within the weight bound.
        for q in Partition::capped_up_to_weight(6) {
            assert!(q.weight() <= 6 && !q.is_empty());
            assert!(q.parts().iter().all(|&(_, r)| r <= 2));
            assert_eq!(q, q.cap_multiplicities());
        }
    }

    proptest! {
        #[test]
        fn roundtrip(parts in proptest::collection::vec((1u32..7, 1u32..4), 0..4)) {
            // Sort/dedup into a valid shape, then round-trip through text.
            let mut parts = parts;
            parts.sort_by_key(|&(part, _)| std::cmp::Reverse(part));
            parts.dedup_by_key(|e| e.0);
            let shape = Partition::new(parts).unwrap();
            prop_assert_eq!(Partition::parse(&shape.to_string()).unwrap(), shape);
        }

        #[test]
        fn column_and_cap_commute(parts in proptest::collection::vec((1u32..7, 1u32..5), 0..4)) {
            let mut parts = parts;
            parts.sort_by_key(|&(part, _)| std::cmp::Reverse(part));
            parts.dedup_by_key(|e| e.0);
            let shape = Partition::new(parts).unwrap();
            prop_assert_eq!(
                shape.cap_multiplicities().delete_first_column(),
                shape.delete_first_column().cap_multiplicities()
            );
            // Weight drops by the number of summands.
            prop_assert_eq!(
                shape.delete_first_column().weight(),
                shape.weight() - shape.summands()
            );
            // The principal class is closed under first-column deletion.
            if shape.is_principal_class() {
                prop_assert!(shape.delete_first_column().is_principal_class());
            }
        }
    }
}
