//! Symbolic cardinalities: characteristic submodules, orbit sizes, and
//! canonical orbit representatives.
//!
//! The characteristic submodule of an ideal `I` consists of the elements
//! whose coordinate valuations dominate the boundary of `I`; its cardinality
//! is the monomial `q^e` with `e = Σ ρ_i (λ_i − eff_i)`, where `eff_i` clamps
//! the boundary to the row length (an empty row forces the zero coordinate).
//! Characteristic submodules are disjoint unions of the orbits below `I`, so
//! orbit cardinalities fall out by Möbius inversion over the ideal lattice;
//! unrealized ideals invert to the zero polynomial.

use std::fmt;

use crate::lattice::IdealLattice;
use crate::partition::Partition;
use crate::poly::IntPoly;
use crate::poset::OrderIdeal;

/// Exponent `e` with `|(A_λ)_I| = q^e`.
pub fn char_submodule_exponent(shape: &Partition, ideal: &OrderIdeal) -> u64 {
    assert_eq!(
        shape.rows(),
        ideal.rows(),
        "ideal context does not match the shape"
    );
    shape
        .parts()
        .iter()
        .zip(ideal.boundary())
        .map(|(&(l, r), &b)| {
            let eff = b.map_or(l, |b| b.min(l));
            (l - eff) as u64 * r as u64
        })
        .sum()
}

/// `|(A_λ)_I|` as the monomial `q^e`.
pub fn char_submodule_size(shape: &Partition, ideal: &OrderIdeal) -> IntPoly {
    IntPoly::monomial(1, char_submodule_exponent(shape, ideal) as usize)
}

/// `|{x : I(x) = I}|` by Möbius inversion of the characteristic-submodule
/// sizes over the interval below `I`. Zero exactly when `I` is unrealized.
pub fn orbit_size(lattice: &IdealLattice, ideal: &OrderIdeal) -> IntPoly {
    let id = lattice
        .id_of(ideal)
        .expect("ideal does not belong to this lattice");
    let mut acc = IntPoly::zero();
    for sub in 0..lattice.len() {
        if lattice.le(sub, id) {
            let mu = lattice.moebius(sub, id);
            let size = char_submodule_size(lattice.shape(), lattice.ideal(sub));
            acc = &acc + &(&IntPoly::from_coeffs(vec![mu]) * &size);
        }
    }
    acc
}

/// The canonical representative of the orbit of an ideal: coordinate
/// `π^{v_j}` at the first copy of row `l_j` for each maximal element
/// `(v_j, l_j)`, zero elsewhere. An exponent equal to its row length encodes
/// a zero coordinate, which happens exactly for unrealized ideals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CanonicalElement {
    rows: Vec<u32>,
    /// `(part, exponent)` per maximal element; the copy index is always 1.
    entries: Vec<(u32, u32)>,
}

impl CanonicalElement {
    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    pub fn entries(&self) -> &[(u32, u32)] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&(l, v)| v >= l)
    }

    /// Exponent at the first copy of `row`, if that coordinate is nonzero.
    pub fn exponent_at(&self, row: u32) -> Option<u32> {
        self.entries
            .iter()
            .find(|&&(l, v)| l == row && v < l)
            .map(|&(_, v)| v)
    }
}

impl fmt::Display for CanonicalElement {
    /// One entry per row (first copy): `(t,1)` for exponents `1, 0`, with `0`
    /// for rows outside the ideal.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, &row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            match self.entries.iter().find(|&&(l, _)| l == row) {
                Some(&(l, v)) if v < l => match v {
                    0 => write!(f, "1")?,
                    1 => write!(f, "t")?,
                    _ => write!(f, "t^{v}")?,
                },
                _ => write!(f, "0")?,
            }
        }
        write!(f, ")")
    }
}

/// The canonical element `e_I` of an ideal.
pub fn canonical_element(ideal: &OrderIdeal) -> CanonicalElement {
    let mut entries: Vec<(u32, u32)> = ideal
        .max_elements()
        .iter()
        .map(|m| (m.part, m.valuation))
        .collect();
    entries.sort_by_key(|&(part, _)| std::cmp::Reverse(part));
    CanonicalElement {
        rows: ideal.rows().to_vec(),
        entries,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::enumerate_realized_ideals;
    use crate::poset::PosetPoint;
    use num_bigint::BigInt;

    fn p(text: &str) -> Partition {
        Partition::parse(text).unwrap()
    }

    fn ideal(shape: &Partition, text: &str) -> OrderIdeal {
        OrderIdeal::parse_boundary(shape, text).unwrap()
    }

    #[test]
    fn char_size_examples() {
        let shape = p("3^1,1^1");
        assert_eq!(
            char_submodule_size(&shape, &OrderIdeal::pi(&shape)),
            IntPoly::monomial(1, 2)
        );
        assert_eq!(
            char_submodule_size(&shape, &OrderIdeal::empty(&shape)),
            IntPoly::one()
        );
        assert_eq!(
            char_submodule_size(&shape, &ideal(&shape, "2,-")),
            IntPoly::monomial(1, 1)
        );
    }

    #[test]
    fn char_size_multiplicative_over_lattice_ops() {
        for shape in [p("3^1,1^1"), p("2^2,1^1"), p("3^1,2^1")] {
            for a in crate::lattice::enumerate_ideals(&shape) {
                for b in crate::lattice::enumerate_ideals(&shape) {
                    let lhs = &char_submodule_size(&shape, &a.union(&b))
                        * &char_submodule_size(&shape, &a.intersection(&b));
                    let rhs = &char_submodule_size(&shape, &a) * &char_submodule_size(&shape, &b);
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn orbit_size_examples() {
        let shape = p("1^1");
        let lat = IdealLattice::new(&shape);
        assert_eq!(
            orbit_size(&lat, &ideal(&shape, "0")),
            IntPoly::from_coeffs(vec![-1, 1])
        );
        // Unrealized ideals invert to zero.
        assert_eq!(orbit_size(&lat, &ideal(&shape, "1")), IntPoly::zero());

        // Elements with valuations exactly (1, 0): (q^2 - q)(q - 1).
        let shape = p("3^1,1^1");
        let lat = IdealLattice::new(&shape);
        assert_eq!(
            orbit_size(&lat, &ideal(&shape, "1,0")),
            IntPoly::from_coeffs(vec![0, 1, -2, 1])
        );
    }

    #[test]
    fn orbit_sizes_partition_the_module() {
        for shape in Partition::capped_up_to_weight(6) {
            let lat = IdealLattice::new(&shape);
            let mut acc = IntPoly::zero();
            for ideal in enumerate_realized_ideals(&shape) {
                let size = orbit_size(&lat, &ideal);
                assert!(
                    !size.is_zero() && size.leading_coeff() == BigInt::from(1),
                    "realized orbit sizes are monic"
                );
                acc = &acc + &size;
            }
            assert_eq!(acc, IntPoly::monomial(1, shape.weight() as usize));
            // And every unrealized ideal has orbit size zero.
            for id in 0..lat.len() {
                if !lat.is_realized(id) {
                    assert!(orbit_size(&lat, lat.ideal(id)).is_zero());
                }
            }
        }
    }

    #[test]
    fn canonical_element_examples() {
        let shape = p("3^1,1^1");
        let e = canonical_element(&ideal(&shape, "1,0"));
        assert_eq!(e.entries(), &[(3, 1), (1, 0)]);
        assert_eq!(e.to_string(), "(t,1)");

        let e = canonical_element(
            &OrderIdeal::from_generators(&shape, &[PosetPoint::new(2, 3)]).unwrap(),
        );
        assert_eq!(e.entries(), &[(3, 2)]);
        assert_eq!(e.to_string(), "(t^2,0)");

        let e = canonical_element(&OrderIdeal::empty(&shape));
        assert!(e.is_zero());
        assert_eq!(e.to_string(), "(0,0)");
    }
}
