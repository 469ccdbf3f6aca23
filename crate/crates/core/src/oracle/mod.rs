//! Brute-force ground truth over concrete modules at a fixed prime.
//!
//! The ring is realized as `F_p[t]` truncated per row: the coordinate of a
//! summand of length `l` is a polynomial with `l` coefficients mod `p`, and
//! multiplication by the uniformizer is the truncated shift. The theory only
//! depends on the residue-field size, so prime fields suffice: interpolation
//! merely needs enough distinct sample points, and primes are plentiful.
//!
//! Elements are indexed `0..p^|λ|` in row-major order with ascending
//! coefficients, so enumeration, orbit claiming, and representative choice
//! are reproducible.

mod raw;
mod stabilizer;

pub use raw::{
    endomorphism_count, enumerate_automorphisms, orbit_partition, pairs_orbit_count,
    stabilizer_subgroup, Endomorphism,
};
pub use stabilizer::{count_stab_orbits, n_lambda_at, StabilizerContext};

use crate::counting::CanonicalElement;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::poset::{Boundary, OrderIdeal};

/// Enumeration limits. Exceeding a limit is a hard error, never a silent
/// truncation.
#[derive(Clone, Copy, Debug)]
pub struct OracleConfig {
    /// Largest element count any single enumeration may touch.
    pub max_elements: u64,
    /// Largest endomorphism count the raw tier may enumerate.
    pub max_endomorphisms: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            max_elements: 1 << 26,
            max_endomorphisms: 1 << 20,
        }
    }
}

impl OracleConfig {
    pub fn with_max_elements(max_elements: u64) -> Self {
        OracleConfig {
            max_elements,
            ..Default::default()
        }
    }
}

/// A concrete module element: flattened coordinate coefficients, ascending
/// `t`-powers within each coordinate.
pub type Element = Vec<u8>;

/// First nonzero coefficient index of one coordinate; `None` for the zero
/// coordinate (valuation +∞).
pub fn valuation(coordinate: &[u8]) -> Option<u32> {
    coordinate.iter().position(|&c| c != 0).map(|i| i as u32)
}

/// The module `⊕ (F_p[t]/t^{λ_i})^{ρ_i}` with its element indexing.
pub struct ModuleSpace {
    shape: Partition,
    p: u32,
    /// Row part per flattened coordinate, rows descending, copies in order.
    coord_parts: Vec<u32>,
    /// Starting coefficient slot per coordinate.
    offsets: Vec<usize>,
    weight: usize,
    size: u64,
    /// `p^i` for each coefficient slot.
    pow: Vec<u64>,
}

impl ModuleSpace {
    pub fn new(shape: &Partition, p: u32, config: &OracleConfig) -> Result<Self> {
        if !(2..=251).contains(&p) {
            return Err(Error::InvalidInput(format!(
                "prime {p} outside the supported range 2..=251"
            )));
        }
        let weight = shape.weight() as usize;
        let needed = (p as u128).checked_pow(weight as u32).unwrap_or(u128::MAX);
        if needed > config.max_elements as u128 {
            return Err(Error::BudgetExceeded {
                needed,
                cap: config.max_elements,
            });
        }
        let mut coord_parts = Vec::new();
        for &(l, r) in shape.parts() {
            for _ in 0..r {
                coord_parts.push(l);
            }
        }
        let mut offsets = Vec::with_capacity(coord_parts.len());
        let mut acc = 0usize;
        for &l in &coord_parts {
            offsets.push(acc);
            acc += l as usize;
        }
        debug_assert_eq!(acc, weight);
        let mut pow = Vec::with_capacity(weight + 1);
        let mut v = 1u64;
        for _ in 0..=weight {
            pow.push(v);
            v = v.saturating_mul(p as u64);
        }
        Ok(ModuleSpace {
            shape: shape.clone(),
            p,
            coord_parts,
            offsets,
            weight,
            size: needed as u64,
            pow,
        })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    pub fn coord_parts(&self) -> &[u32] {
        &self.coord_parts
    }

    /// Coefficient slot range of one coordinate.
    pub fn coord_range(&self, coord: usize) -> std::ops::Range<usize> {
        let start = self.offsets[coord];
        start..start + self.coord_parts[coord] as usize
    }

    pub fn zero(&self) -> Element {
        vec![0; self.weight]
    }

    pub fn element(&self, index: u64) -> Element {
        let mut el = vec![0u8; self.weight];
        self.decode_into(index, &mut el);
        el
    }

    pub fn decode_into(&self, mut index: u64, el: &mut Element) {
        let p = self.p as u64;
        for slot in el.iter_mut() {
            *slot = (index % p) as u8;
            index /= p;
        }
        debug_assert_eq!(index, 0);
    }

    pub fn index_of(&self, el: &Element) -> u64 {
        el.iter()
            .enumerate()
            .map(|(i, &c)| c as u64 * self.pow[i])
            .sum()
    }

    pub fn add(&self, a: &Element, b: &Element) -> Element {
        let p = self.p as u16;
        a.iter()
            .zip(b)
            .map(|(&x, &y)| ((x as u16 + y as u16) % p) as u8)
            .collect()
    }

    pub fn sub(&self, a: &Element, b: &Element) -> Element {
        let p = self.p as u16;
        a.iter()
            .zip(b)
            .map(|(&x, &y)| ((x as u16 + p - y as u16) % p) as u8)
            .collect()
    }

    pub fn coord_valuation(&self, el: &Element, coord: usize) -> Option<u32> {
        valuation(&el[self.coord_range(coord)])
    }

    /// Boundary of the ideal `I(x)` over the rows of the shape.
    pub fn ideal_boundary(&self, el: &Element) -> Vec<Boundary> {
        let rows = self.shape.rows();
        let mut gens: Vec<(u32, u32)> = Vec::new();
        for (c, &part) in self.coord_parts.iter().enumerate() {
            if let Some(v) = self.coord_valuation(el, c) {
                gens.push((v, part));
            }
        }
        rows.iter()
            .map(|&row| {
                gens.iter()
                    .map(|&(v, l)| v + row.saturating_sub(l))
                    .min()
                    .filter(|&b| b <= row)
            })
            .collect()
    }

    /// The order ideal `I(x)` generated by the valuations of the nonzero
    /// coordinates; the zero element gives the empty ideal.
    pub fn ideal_of(&self, el: &Element) -> OrderIdeal {
        OrderIdeal::from_boundary(self.shape.rows(), self.ideal_boundary(el))
            .expect("element boundaries are downward closed")
    }

    /// True when every coordinate has valuation at least 1.
    pub fn in_pi(&self, el: &Element) -> bool {
        self.offsets.iter().all(|&o| el[o] == 0)
    }

    /// Realizes a canonical element: coefficient 1 at `t^{v}` in the first
    /// copy of each entry's row (zero coordinate when the exponent equals the
    /// row length).
    pub fn realize(&self, ce: &CanonicalElement) -> Element {
        let mut el = self.zero();
        for &(part, v) in ce.entries() {
            if v >= part {
                continue;
            }
            let coord = self
                .coord_parts
                .iter()
                .position(|&l| l == part)
                .expect("canonical entry sits in a row of the shape");
            el[self.offsets[coord] + v as usize] = 1;
        }
        el
    }

    /// Per-coordinate minimal valuations cut out by an ideal over the same
    /// rows: the boundary clamped to the row length (an empty row forces the
    /// zero coordinate).
    pub fn valuation_floor(&self, ideal: &OrderIdeal) -> Vec<u32> {
        assert_eq!(ideal.rows(), self.shape.rows(), "ideal context mismatch");
        self.coord_parts
            .iter()
            .map(|&part| {
                let row = self
                    .shape
                    .rows()
                    .iter()
                    .position(|&l| l == part)
                    .expect("coordinate part is a row");
                ideal.boundary()[row].map_or(part, |b| b.min(part))
            })
            .collect()
    }

    /// Indices of all elements whose coordinate valuations meet the given
    /// per-coordinate floors, in ascending index order.
    pub fn submodule_indices(&self, floors: &[u32]) -> Vec<u64> {
        assert_eq!(floors.len(), self.coord_parts.len());
        let mut free_slots: Vec<usize> = Vec::new();
        for (c, &part) in self.coord_parts.iter().enumerate() {
            for i in floors[c]..part {
                free_slots.push(self.offsets[c] + i as usize);
            }
        }
        let p = self.p as u64;
        let count = p.pow(free_slots.len() as u32);
        let mut out = Vec::with_capacity(count as usize);
        for mut n in 0..count {
            let mut idx = 0u64;
            for &slot in &free_slots {
                idx += (n % p) * self.pow[slot];
                n /= p;
            }
            out.push(idx);
        }
        out.sort_unstable();
        out
    }

    /// Size of the characteristic submodule cut out by `floors`.
    pub fn submodule_size(&self, floors: &[u32]) -> u64 {
        let free: u32 = self
            .coord_parts
            .iter()
            .zip(floors)
            .map(|(&part, &f)| part - f)
            .sum();
        (self.p as u64).pow(free)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::canonical_element;
    use crate::lattice::enumerate_realized_ideals;

    fn p(text: &str) -> Partition {
        Partition::parse(text).unwrap()
    }

    fn space(text: &str, prime: u32) -> ModuleSpace {
        ModuleSpace::new(&p(text), prime, &OracleConfig::default()).unwrap()
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(valuation(&[0, 0, 0]), None);
        assert_eq!(valuation(&[0, 0, 1]), Some(2));
        assert_eq!(valuation(&[2, 0, 1]), Some(0));
    }

    #[test]
    fn indexing_roundtrip() {
        let s = space("3^1,1^1", 3);
        assert_eq!(s.size(), 81);
        for idx in 0..s.size() {
            let el = s.element(idx);
            assert_eq!(s.index_of(&el), idx);
        }
        // Additive group structure is coefficient-wise mod p.
        let a = s.element(17);
        let b = s.element(64);
        assert_eq!(s.sub(&s.add(&a, &b), &b), a);
    }

    #[test]
    fn ideal_of_examples() {
        let s = space("3^1,1^1", 2);
        // x = (t^2, 0)
        let mut x = s.zero();
        x[2] = 1;
        assert_eq!(s.ideal_of(&x).boundary(), &[Some(2), None]);
        assert!(s.ideal_of(&s.zero()).is_empty_ideal());
    }

    #[test]
    fn canonical_elements_realize_their_ideal() {
        for shape in [p("1^1"), p("2^1"), p("3^1,1^1"), p("2^2,1^1")] {
            for prime in [2u32, 3] {
                let s = ModuleSpace::new(&shape, prime, &OracleConfig::default()).unwrap();
                for ideal in enumerate_realized_ideals(&shape) {
                    let e = s.realize(&canonical_element(&ideal));
                    assert_eq!(s.ideal_of(&e), ideal);
                }
            }
        }
    }

    #[test]
    fn symbolic_orbit_sizes_match_element_counts() {
        // orbit_size(λ, I) evaluated at p equals |{x : I(x) = I}|.
        use crate::lattice::IdealLattice;
        for shape in [p("1^1"), p("2^1,1^1"), p("3^1,1^1"), p("2^2")] {
            let lattice = IdealLattice::new(&shape);
            for prime in [2u32, 3] {
                let s = ModuleSpace::new(&shape, prime, &OracleConfig::default()).unwrap();
                let mut counts = vec![0u64; lattice.len()];
                for idx in 0..s.size() {
                    let id = lattice.id_of(&s.ideal_of(&s.element(idx))).unwrap();
                    counts[id] += 1;
                }
                for (id, &count) in counts.iter().enumerate() {
                    let size = crate::counting::orbit_size(&lattice, lattice.ideal(id));
                    assert_eq!(
                        size.eval_u64(prime as u64),
                        num_bigint::BigInt::from(count),
                        "{shape} p={prime} ideal ({})",
                        lattice.ideal(id).boundary_text()
                    );
                }
            }
        }
    }

    #[test]
    fn realized_ideals_match_oracle_image() {
        // The ideals realized by actual elements at p = 2 are exactly the
        // realized sublattice (realization is q-independent).
        for shape in [p("1^1"), p("3^1,1^1"), p("2^1,1^1"), p("2^2")] {
            let s = ModuleSpace::new(&shape, 2, &OracleConfig::default()).unwrap();
            let mut seen = std::collections::HashSet::new();
            for idx in 0..s.size() {
                seen.insert(s.ideal_of(&s.element(idx)));
            }
            let realized: std::collections::HashSet<_> =
                enumerate_realized_ideals(&shape).into_iter().collect();
            assert_eq!(seen, realized);
        }
    }

    #[test]
    fn submodule_enumeration_matches_floors() {
        let s = space("3^1,1^1", 2);
        let pi = OrderIdeal::pi(s.shape());
        let floors = s.valuation_floor(&pi);
        let subs = s.submodule_indices(&floors);
        assert_eq!(subs.len() as u64, s.submodule_size(&floors));
        assert_eq!(subs.len(), 4); // |πA| = 2^2
        for idx in 0..s.size() {
            let el = s.element(idx);
            assert_eq!(subs.contains(&idx), s.in_pi(&el));
        }
    }

    #[test]
    fn pi_submodule_matches_deleted_column_shape() {
        // πA has the shape of the first-column deletion: element counts of
        // the t^l-torsion filtration agree, checked at p = 2.
        let shape = p("4^1,3^2");
        let tilde = shape.delete_first_column();
        assert_eq!(tilde, p("3^1,2^2"));
        let s = ModuleSpace::new(&shape, 2, &OracleConfig::default()).unwrap();
        let t = ModuleSpace::new(&tilde, 2, &OracleConfig::default()).unwrap();
        let torsion_counts = |sp: &ModuleSpace, only_pi: bool| -> Vec<u64> {
            (0..=sp.shape().largest_part())
                .map(|l| {
                    (0..sp.size())
                        .filter(|&i| {
                            let el = sp.element(i);
                            if only_pi && !sp.in_pi(&el) {
                                return false;
                            }
                            // t^l kills the element iff every coordinate has
                            // valuation >= part - l.
                            (0..sp.coord_parts().len()).all(|c| {
                                let part = sp.coord_parts()[c];
                                sp.coord_valuation(&el, c).is_none_or(|v| v + l >= part)
                            })
                        })
                        .count() as u64
                })
                .collect()
        };
        let pi_counts = torsion_counts(&s, true);
        let tilde_counts = torsion_counts(&t, false);
        assert_eq!(
            &pi_counts[..=t.shape().largest_part() as usize],
            &tilde_counts[..]
        );
    }

    #[test]
    fn budget_is_enforced() {
        let cfg = OracleConfig::with_max_elements(10);
        assert!(matches!(
            ModuleSpace::new(&p("2^2"), 2, &cfg),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
