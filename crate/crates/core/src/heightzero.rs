//! Closed-form stabilizer-orbit polynomials for height-zero principal ideals.
//!
//! Fix a shape `λ` and the principal height-zero ideal generated by
//! `(0, λ_i)`. The module splits as `A = A' ⊕ A''` where `A'` is the cyclic
//! summand carrying the canonical element's unit coordinate and `A''` is the
//! rest, of shape `λ` with one copy of `λ_i` removed. Grouping the elements
//! of `A` by the ideal `K` realized by their `A''`-component turns the orbit
//! count of the stabilizer into
//!
//! ```text
//!   n(q)  = Σ_K  q^{λ_i}   / |(A')_K|          over realized K of A''
//!   n¹(q) = Σ_K  q^{λ_i−1} / |(A')_K|          over realized K ⊆ the πA ideal
//! ```
//!
//! Every quotient is an exact monomial (the split summand has a single row),
//! so both polynomials visibly have non-negative coefficients, of degrees
//! `λ_i` and `λ_i − 1`. The coefficient of `q^j` counts the ideals `K` whose
//! characteristic submodule in `A'` has index `q^{λ_i−j}`; see
//! [`coefficient_profile`].
//!
//! The sum over `K` ranges over the ideals realized by actual elements of
//! `A''`, which is the grouping the brute-force oracle confirms directly.

use crate::counting::char_submodule_size;
use crate::error::{Error, Result};
use crate::lattice::IdealLattice;
use crate::partition::Partition;
use crate::poly::IntPoly;
use crate::poset::OrderIdeal;

/// The split of a shape induced by a principal ideal: `pivot` is the cyclic
/// summand carrying the canonical element's nonzero coordinate, `rest` the
/// complementary shape. Weights add up to the weight of the original shape.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SplitDecomposition {
    pub pivot: Partition,
    pub rest: Partition,
    /// Index of the part carrying the generator; `None` for the empty ideal,
    /// whose stabilizer is the whole automorphism group.
    pub part_index: Option<usize>,
}

/// Splits a shape along a realized principal ideal. The empty ideal yields
/// the trivial split `(∅, λ)`.
pub fn split(shape: &Partition, ideal: &OrderIdeal) -> Result<SplitDecomposition> {
    if !ideal.is_realized() {
        return Err(Error::UnrealizedIdeal(ideal.boundary_text()));
    }
    let max = ideal.max_elements();
    if max.is_empty() {
        return Ok(SplitDecomposition {
            pivot: Partition::empty(),
            rest: shape.clone(),
            part_index: None,
        });
    }
    if max.len() > 1 {
        return Err(Error::InvalidInput(format!(
            "ideal with boundary ({}) is not principal",
            ideal.boundary_text()
        )));
    }
    let part = max[0].part;
    let index = shape
        .part_index(part)
        .ok_or_else(|| Error::InvalidInput(format!("part {part} is not a part of {shape}")))?;
    Ok(SplitDecomposition {
        pivot: Partition::new(vec![(part, 1)])?,
        rest: shape.remove_copy(index),
        part_index: Some(index),
    })
}

fn summand_terms(
    shape: &Partition,
    part_index: usize,
    numerator_degree: usize,
    within_pi: bool,
) -> IntPoly {
    let part = shape.parts()[part_index].0;
    let pivot = Partition::new(vec![(part, 1)]).expect("single part is a valid shape");
    let rest = shape.remove_copy(part_index);
    let rest_lattice = IdealLattice::new(&rest);
    let pi_ideal = OrderIdeal::pi(&rest);
    let mut acc = IntPoly::zero();
    for id in rest_lattice.realized_ids() {
        let k = rest_lattice.ideal(id);
        if within_pi && !k.is_subideal_of(&pi_ideal) {
            continue;
        }
        let denom = char_submodule_size(&pivot, &k.restrict(&pivot));
        acc = &acc + &IntPoly::monomial(1, numerator_degree).div_exact(&denom);
    }
    acc
}

/// Stabilizer-orbit count on the whole module, for the height-zero principal
/// ideal generated at the part with the given index. Degree exactly `λ_i`,
/// all coefficients non-negative.
pub fn orbit_poly(shape: &Partition, part_index: usize) -> IntPoly {
    let part = shape.parts()[part_index].0;
    let poly = summand_terms(shape, part_index, part as usize, false);
    assert_eq!(poly.degree(), Some(part as usize));
    assert!(poly.is_nonnegative());
    poly
}

/// Stabilizer-orbit count on `πA`, for the same ideal. Degree exactly
/// `λ_i − 1` (a nonzero constant when `λ_i = 1`), all coefficients
/// non-negative.
pub fn pi_orbit_poly(shape: &Partition, part_index: usize) -> IntPoly {
    let part = shape.parts()[part_index].0;
    let poly = summand_terms(shape, part_index, part as usize - 1, true);
    assert_eq!(poly.degree(), Some(part as usize - 1));
    assert!(poly.is_nonnegative());
    poly
}

/// Coefficient interpretation of the two polynomials: `full[j]` counts the
/// realized ideals `K` of the complement with `|(A')_K| = q^{λ_i−j}`, and
/// `pi[j]` the same among `K` contained in the `πA` ideal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoefficientProfile {
    pub full: Vec<u64>,
    pub pi: Vec<u64>,
}

pub fn coefficient_profile(shape: &Partition, part_index: usize) -> CoefficientProfile {
    let part = shape.parts()[part_index].0 as usize;
    let pivot = Partition::new(vec![(shape.parts()[part_index].0, 1)]).unwrap();
    let rest = shape.remove_copy(part_index);
    let rest_lattice = IdealLattice::new(&rest);
    let pi_ideal = OrderIdeal::pi(&rest);
    let mut full = vec![0u64; part + 1];
    let mut pi = vec![0u64; part];
    for id in rest_lattice.realized_ids() {
        let k = rest_lattice.ideal(id);
        let e = crate::counting::char_submodule_exponent(&pivot, &k.restrict(&pivot)) as usize;
        // |(A')_K| = q^e = q^{λ_i - j}
        full[part - e] += 1;
        if k.is_subideal_of(&pi_ideal) {
            pi[part - 1 - e] += 1;
        }
    }
    CoefficientProfile { full, pi }
}

/// The total `Σ (n + n¹)` over all realized height-zero ideals, available in
/// closed form exactly when every such ideal is principal. A non-principal
/// height-zero ideal aborts with an error pointing at the interpolation
/// route.
pub fn total_orbit_poly(shape: &Partition) -> Result<IntPoly> {
    let mut acc = IntPoly::zero();
    for ideal in crate::lattice::enumerate_realized_ideals(shape) {
        if !ideal.is_height_zero() {
            continue;
        }
        let max = ideal.max_elements();
        if max.len() != 1 {
            return Err(Error::NonPrincipalHeightZero(ideal.boundary_text()));
        }
        assert_eq!(
            max[0].valuation, 0,
            "height zero means a valuation-0 generator"
        );
        let index = shape
            .part_index(max[0].part)
            .expect("maximal element sits in a row of the shape");
        acc = &acc + &orbit_poly(shape, index);
        acc = &acc + &pi_orbit_poly(shape, index);
    }
    Ok(acc)
}
