//! The fundamental poset and its order ideals in boundary form.
//!
//! The poset has points `(v, l)` with `0 ≤ v ≤ l`, ordered by
//! `(v, l) ≤ (v', l')` iff `v ≥ v'` and `l − v ≤ l' − v'`. The orbit of a
//! module element `x` corresponds to the order ideal generated by the points
//! `(v(x_c), part(c))` over its nonzero coordinates.
//!
//! An ideal over the rows of a shape is stored as its boundary: per row `l`
//! the least valuation `v` with `(v, l)` in the ideal, or [`EMPTY`] when the
//! row misses the ideal entirely (the minimum over an empty set, treated as
//! +∞). Unions and intersections become pointwise min and max, and ideal
//! equality is boundary equality.

use std::fmt;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// A point `(v, l)` of the fundamental poset, `0 ≤ v ≤ l`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct PosetPoint {
    pub valuation: u32,
    pub part: u32,
}

impl PosetPoint {
    pub fn new(valuation: u32, part: u32) -> Self {
        assert!(valuation <= part, "poset point needs v <= l");
        PosetPoint { valuation, part }
    }
}

impl fmt::Display for PosetPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.valuation, self.part)
    }
}

/// `a ≤ b` in the fundamental poset: `a.v ≥ b.v` and `a.l − a.v ≤ b.l − b.v`.
pub fn point_leq(a: PosetPoint, b: PosetPoint) -> bool {
    a.valuation >= b.valuation && a.part - a.valuation <= b.part - b.valuation
}

/// Boundary entry of one row: least valuation present, or [`EMPTY`].
pub type Boundary = Option<u32>;

/// The empty-row boundary (+∞).
pub const EMPTY: Boundary = None;

/// Downward closure of a generator set, expressed as a boundary over `rows`.
///
/// `(v, l)` lies below a generator `(v_g, l_g)` iff `v ≥ v_g + max(0, l − l_g)`.
fn closure_boundary(rows: &[u32], gens: &[(u32, u32)]) -> Vec<Boundary> {
    rows.iter()
        .map(|&row| {
            gens.iter()
                .map(|&(v, l)| v + row.saturating_sub(l))
                .min()
                .filter(|&b| b <= row)
        })
        .collect()
}

/// An order ideal over the rows of a fixed shape, in boundary form.
///
/// Invariant (cross-row closure): whenever row `i` has boundary `b_i`, every
/// row `j` with `b_i + max(0, λ_j − λ_i) ≤ λ_j` is nonempty with boundary at
/// most that value.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct OrderIdeal {
    rows: Vec<u32>,
    boundary: Vec<Boundary>,
}

impl OrderIdeal {
    /// The empty ideal over the rows of `shape`.
    pub fn empty(shape: &Partition) -> Self {
        let rows = shape.rows();
        let boundary = vec![EMPTY; rows.len()];
        OrderIdeal { rows, boundary }
    }

    /// Builds an ideal from an explicit boundary, validating closure.
    pub fn from_boundary(rows: Vec<u32>, boundary: Vec<Boundary>) -> Result<Self> {
        assert_eq!(rows.len(), boundary.len());
        for (i, &b) in boundary.iter().enumerate() {
            if let Some(b) = b {
                if b > rows[i] {
                    return Err(Error::InvalidInput(format!(
                        "boundary {b} exceeds row length {}",
                        rows[i]
                    )));
                }
            }
        }
        let ideal = OrderIdeal { rows, boundary };
        if !ideal.closure_holds() {
            return Err(Error::InvalidInput(format!(
                "boundary ({}) is not downward closed",
                ideal.boundary_text()
            )));
        }
        Ok(ideal)
    }

    /// The ideal generated by `gens` inside the rows of `shape`.
    ///
    /// Every generator must sit in a row of the shape with `0 ≤ v ≤ l`.
    pub fn from_generators(shape: &Partition, gens: &[PosetPoint]) -> Result<Self> {
        let rows = shape.rows();
        let mut pairs = Vec::with_capacity(gens.len());
        for g in gens {
            if !rows.contains(&g.part) {
                return Err(Error::InvalidInput(format!(
                    "generator {g} does not lie in a row of {shape}"
                )));
            }
            if g.valuation > g.part {
                return Err(Error::InvalidInput(format!(
                    "generator {g} has valuation above its row length"
                )));
            }
            pairs.push((g.valuation, g.part));
        }
        let boundary = closure_boundary(&rows, &pairs);
        Ok(OrderIdeal { rows, boundary })
    }

    /// The ideal whose characteristic submodule is `πA`: boundary 1 in every
    /// row. Unrealized when some part equals 1 (there `πA` vanishes rowwise).
    pub fn pi(shape: &Partition) -> Self {
        let rows = shape.rows();
        let boundary = vec![Some(1); rows.len()];
        OrderIdeal { rows, boundary }
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    pub fn boundary(&self) -> &[Boundary] {
        &self.boundary
    }

    fn closure_holds(&self) -> bool {
        for i in 0..self.rows.len() {
            if let Some(bi) = self.boundary[i] {
                for j in 0..self.rows.len() {
                    let w = bi + self.rows[j].saturating_sub(self.rows[i]);
                    if w <= self.rows[j] && self.boundary[j].is_none_or(|bj| bj > w) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Boundary of the ideal at an arbitrary row `l` of the full poset.
    pub fn boundary_at(&self, l: u32) -> Boundary {
        self.rows
            .iter()
            .zip(&self.boundary)
            .filter_map(|(&row, &b)| b.map(|b| b + l.saturating_sub(row)))
            .min()
            .filter(|&b| b <= l)
    }

    /// Restriction to the rows of another shape.
    pub fn restrict(&self, target: &Partition) -> OrderIdeal {
        let rows = target.rows();
        let boundary = rows.iter().map(|&l| self.boundary_at(l)).collect();
        OrderIdeal { rows, boundary }
    }

    pub fn is_empty_ideal(&self) -> bool {
        self.boundary.iter().all(|b| b.is_none())
    }

    /// Pointwise min of boundaries. Both ideals must share their rows.
    pub fn union(&self, other: &OrderIdeal) -> OrderIdeal {
        assert_eq!(self.rows, other.rows, "ideal context mismatch");
        let boundary = self
            .boundary
            .iter()
            .zip(&other.boundary)
            .map(|(&a, &b)| match (a, b) {
                (Some(x), Some(y)) => Some(x.min(y)),
                (Some(x), None) | (None, Some(x)) => Some(x),
                (None, None) => None,
            })
            .collect();
        OrderIdeal {
            rows: self.rows.clone(),
            boundary,
        }
    }

    /// Pointwise max of boundaries. Both ideals must share their rows.
    pub fn intersection(&self, other: &OrderIdeal) -> OrderIdeal {
        assert_eq!(self.rows, other.rows, "ideal context mismatch");
        let boundary = self
            .boundary
            .iter()
            .zip(&other.boundary)
            .map(|(&a, &b)| match (a, b) {
                (Some(x), Some(y)) => Some(x.max(y)),
                _ => None,
            })
            .collect();
        OrderIdeal {
            rows: self.rows.clone(),
            boundary,
        }
    }

    /// Containment as subsets of the poset: larger boundaries mean smaller
    /// ideals, with [`EMPTY`] smallest of all.
    pub fn is_subideal_of(&self, other: &OrderIdeal) -> bool {
        assert_eq!(self.rows, other.rows, "ideal context mismatch");
        self.boundary
            .iter()
            .zip(&other.boundary)
            .all(|(&a, &b)| match (a, b) {
                (None, _) => true,
                (Some(_), None) => false,
                (Some(x), Some(y)) => x >= y,
            })
    }

    /// The antichain of maximal elements; it determines the ideal.
    pub fn max_elements(&self) -> Vec<PosetPoint> {
        let candidates: Vec<PosetPoint> = self
            .rows
            .iter()
            .zip(&self.boundary)
            .filter_map(|(&row, &b)| b.map(|v| PosetPoint::new(v, row)))
            .collect();
        candidates
            .iter()
            .copied()
            .filter(|&p| candidates.iter().all(|&q| q == p || !point_leq(p, q)))
            .collect()
    }

    /// True when some maximal element has valuation 0; with downward closure
    /// this is simply "some boundary entry is 0".
    pub fn is_height_zero(&self) -> bool {
        self.boundary.contains(&Some(0))
    }

    /// True when the ideal has at most one maximal element.
    pub fn is_principal(&self) -> bool {
        self.max_elements().len() <= 1
    }

    /// True when the ideal is of the form `I(x)`: it equals the closure of
    /// its boundary points with `v < l` (the empty ideal is realized by 0).
    pub fn is_realized(&self) -> bool {
        let gens: Vec<(u32, u32)> = self
            .rows
            .iter()
            .zip(&self.boundary)
            .filter_map(|(&row, &b)| b.filter(|&v| v < row).map(|v| (v, row)))
            .collect();
        closure_boundary(&self.rows, &gens) == self.boundary
    }

    /// Comma-separated boundary entries, `-` for an empty row.
    pub fn boundary_text(&self) -> String {
        self.boundary
            .iter()
            .map(|b| match b {
                Some(v) => v.to_string(),
                None => "-".to_string(),
            })
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Parses the output of [`boundary_text`](Self::boundary_text) in the
    /// context of `shape`.
    pub fn parse_boundary(shape: &Partition, text: &str) -> Result<Self> {
        let rows = shape.rows();
        if rows.is_empty() {
            if text.is_empty() {
                return Ok(Self::empty(shape));
            }
            return Err(Error::Parse(format!(
                "boundary `{text}` given for the empty shape"
            )));
        }
        let entries: Vec<&str> = text.split(',').collect();
        if entries.len() != rows.len() {
            return Err(Error::Parse(format!(
                "boundary `{text}` has {} entries, shape {shape} has {} rows",
                entries.len(),
                rows.len()
            )));
        }
        let mut boundary = Vec::with_capacity(rows.len());
        for e in entries {
            if e == "-" {
                boundary.push(None);
            } else {
                let v: u32 = e
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad boundary entry `{e}`")))?;
                boundary.push(Some(v));
            }
        }
        Self::from_boundary(rows, boundary)
    }
}

impl fmt::Display for OrderIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.boundary_text())
    }
}

/// An ideal of the full poset truncated at a largest row: boundary entries for
/// every row `1..=lmax`. Quotient modules produce ideals whose maximal
/// elements sit in rows that are not parts of the ambient shape; this type
/// carries exactly the boundary data those ideals are consumed through.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GenericIdeal {
    boundary: Vec<Boundary>,
}

impl GenericIdeal {
    /// Builds from per-row boundaries, index `l-1` holding row `l`.
    pub fn from_profile(boundary: Vec<Boundary>) -> Self {
        for (i, &b) in boundary.iter().enumerate() {
            if let Some(b) = b {
                assert!(b <= (i + 1) as u32, "boundary exceeds row length");
            }
        }
        GenericIdeal { boundary }
    }

    pub fn empty(lmax: u32) -> Self {
        GenericIdeal {
            boundary: vec![EMPTY; lmax as usize],
        }
    }

    pub fn is_empty_ideal(&self) -> bool {
        self.boundary.iter().all(|b| b.is_none())
    }

    pub fn boundary_at(&self, l: u32) -> Boundary {
        assert!(
            l >= 1 && (l as usize) <= self.boundary.len(),
            "row {l} outside the truncation"
        );
        self.boundary[l as usize - 1]
    }

    /// Restriction to the rows of a shape (all rows must be within the
    /// truncation).
    pub fn restrict(&self, target: &Partition) -> OrderIdeal {
        let rows = target.rows();
        let boundary = rows.iter().map(|&l| self.boundary_at(l)).collect();
        OrderIdeal { rows, boundary }
    }
}

/// Parses a semicolon-separated generator list `(v,l);(v,l);…`.
/// The empty string denotes no generators (the empty ideal).
pub fn parse_generators(text: &str) -> Result<Vec<PosetPoint>> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for token in text.split(';') {
        let token = token.trim();
        let inner = token
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("generator `{token}` is not of the form (v,l)")))?;
        let (v, l) = inner
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("generator `{token}` is not of the form (v,l)")))?;
        let v: u32 = v
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad valuation in generator `{token}`")))?;
        let l: u32 = l
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad part in generator `{token}`")))?;
        if v > l {
            return Err(Error::Parse(format!(
                "generator `{token}` has valuation above its row length"
            )));
        }
        out.push(PosetPoint::new(v, l));
    }
    Ok(out)
}
