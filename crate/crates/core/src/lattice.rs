//! The distributive lattice of order ideals of a shape.
//!
//! Enumerates every boundary vector satisfying cross-row closure, indexes the
//! ideals in a deterministic order (lexicographic on boundaries with the
//! empty row greatest), precomputes inclusion, and evaluates the Möbius
//! function of inclusion intervals by the standard recursion.

use std::collections::HashMap;

use crate::partition::Partition;
use crate::poset::{Boundary, OrderIdeal};

/// The ideal lattice of one shape, with realized flags and Möbius values.
pub struct IdealLattice {
    shape: Partition,
    ideals: Vec<OrderIdeal>,
    realized: Vec<bool>,
    index: HashMap<Vec<Boundary>, usize>,
    /// `le[j * n + i]` is true iff ideal `j` is contained in ideal `i`.
    le: Vec<bool>,
    /// Möbius values for contained pairs, keyed `(sub, sup)`.
    moebius: HashMap<(usize, usize), i64>,
}

impl IdealLattice {
    pub fn new(shape: &Partition) -> Self {
        let ideals = enumerate_ideals(shape);
        let n = ideals.len();
        let realized = ideals.iter().map(|i| i.is_realized()).collect();
        let mut index = HashMap::with_capacity(n);
        for (id, ideal) in ideals.iter().enumerate() {
            index.insert(ideal.boundary().to_vec(), id);
        }
        let mut le = vec![false; n * n];
        for j in 0..n {
            for i in 0..n {
                le[j * n + i] = ideals[j].is_subideal_of(&ideals[i]);
            }
        }
        let mut lattice = IdealLattice {
            shape: shape.clone(),
            ideals,
            realized,
            index,
            le,
            moebius: HashMap::new(),
        };
        lattice.fill_moebius();
        lattice
    }

    /// μ(J, J) = 1 and μ(J, I) = −Σ_{J ⊆ K ⊂ I} μ(J, K), filled bottom-up in
    /// interval size so every referenced value already exists.
    fn fill_moebius(&mut self) {
        let n = self.ideals.len();
        let mut order: Vec<usize> = (0..n).collect();
        let heights: Vec<usize> = (0..n)
            .map(|i| (0..n).filter(|&k| self.le(k, i)).count())
            .collect();
        order.sort_by_key(|&i| heights[i]);
        for &i in &order {
            for j in 0..n {
                if !self.le(j, i) {
                    continue;
                }
                let value = if j == i {
                    1
                } else {
                    let mut acc = 0i64;
                    for k in 0..n {
                        if k != i && self.le(j, k) && self.le(k, i) {
                            acc += self.moebius[&(j, k)];
                        }
                    }
                    -acc
                };
                self.moebius.insert((j, i), value);
            }
        }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    pub fn ideals(&self) -> &[OrderIdeal] {
        &self.ideals
    }

    pub fn ideal(&self, id: usize) -> &OrderIdeal {
        &self.ideals[id]
    }

    pub fn is_realized(&self, id: usize) -> bool {
        self.realized[id]
    }

    /// Ids of the realized ideals, in enumeration order.
    pub fn realized_ids(&self) -> Vec<usize> {
        (0..self.ideals.len())
            .filter(|&i| self.realized[i])
            .collect()
    }

    pub fn id_of(&self, ideal: &OrderIdeal) -> Option<usize> {
        self.index.get(ideal.boundary()).copied()
    }

    /// Inclusion of lattice members by id.
    pub fn le(&self, sub: usize, sup: usize) -> bool {
        self.le[sub * self.ideals.len() + sup]
    }

    /// Möbius function of the inclusion interval `[sub, sup]`.
    pub fn moebius(&self, sub: usize, sup: usize) -> i64 {
        assert!(self.le(sub, sup), "moebius requires sub ⊆ sup");
        self.moebius[&(sub, sup)]
    }
}

/// All ideals over the rows of `shape`, ordered lexicographically on the
/// boundary vector with the empty row greatest.
pub fn enumerate_ideals(shape: &Partition) -> Vec<OrderIdeal> {
    let rows = shape.rows();
    let mut out = Vec::new();
    let mut boundary: Vec<Boundary> = Vec::with_capacity(rows.len());
    fn rec(rows: &[u32], boundary: &mut Vec<Boundary>, out: &mut Vec<OrderIdeal>) {
        if boundary.len() == rows.len() {
            if let Ok(ideal) = OrderIdeal::from_boundary(rows.to_vec(), boundary.clone()) {
                out.push(ideal);
            }
            return;
        }
        let row = rows[boundary.len()];
        for b in (0..=row).map(Some).chain([None]) {
            boundary.push(b);
            rec(rows, boundary, out);
            boundary.pop();
        }
    }
    rec(&rows, &mut boundary, &mut out);
    out
}

/// The ideals of the form `I(x)`: closures of their sub-diagonal boundary
/// points, together with the empty ideal.
pub fn enumerate_realized_ideals(shape: &Partition) -> Vec<OrderIdeal> {
    enumerate_ideals(shape)
        .into_iter()
        .filter(|i| i.is_realized())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::{point_leq, PosetPoint};

    fn p(text: &str) -> Partition {
        Partition::parse(text).unwrap()
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_ideals(&p("1^1")).len(), 3);
        for l1 in 1..=6u32 {
            let shape = Partition::new(vec![(l1, 1)]).unwrap();
            assert_eq!(enumerate_ideals(&shape).len(), l1 as usize + 2);
            assert_eq!(enumerate_realized_ideals(&shape).len(), l1 as usize + 1);
        }
        assert_eq!(enumerate_ideals(&p("3^1,1^1")).len(), 9);
    }

    #[test]
    fn realized_examples() {
        let shape = p("1^1");
        let realized = enumerate_realized_ideals(&shape);
        assert_eq!(realized.len(), 2);
        assert!(realized[0].boundary() == [Some(0)]);
        assert!(realized[1].is_empty_ideal());

        let texts: Vec<String> = enumerate_realized_ideals(&p("3^1,1^1"))
            .iter()
            .map(|i| i.boundary_text())
            .collect();
        assert_eq!(texts, vec!["0,0", "1,0", "1,1", "2,0", "2,-", "-,-"]);
    }

    #[test]
    fn enumerated_ideals_are_downward_closed() {
        // Point-set downward closure under the poset order, checked
        // exhaustively at small shapes.
        for shape in [p("2^1,1^1"), p("3^1,1^1"), p("3^1,2^1")] {
            let rows = shape.rows();
            for ideal in enumerate_ideals(&shape) {
                let points: Vec<PosetPoint> = rows
                    .iter()
                    .flat_map(|&l| (0..=l).map(move |v| PosetPoint::new(v, l)))
                    .collect();
                let member =
                    |q: PosetPoint| ideal.boundary_at(q.part).is_some_and(|b| q.valuation >= b);
                for &a in &points {
                    for &b in &points {
                        if member(b) && point_leq(a, b) {
                            assert!(member(a));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn generators_of_max_recover_ideal() {
        for shape in [p("1^1"), p("3^1,1^1"), p("3^1,2^1"), p("2^2,1^1")] {
            for ideal in enumerate_ideals(&shape) {
                let gens = ideal.max_elements();
                let back = OrderIdeal::from_generators(&shape, &gens).unwrap();
                assert_eq!(back, ideal);
            }
        }
    }

    #[test]
    fn lattice_axioms_and_distributivity() {
        // Exhaustive on every capped shape of weight <= 6.
        for shape in Partition::capped_up_to_weight(6) {
            let ideals = enumerate_ideals(&shape);
            for a in &ideals {
                for b in &ideals {
                    let u = a.union(b);
                    let i = a.intersection(b);
                    assert_eq!(u, b.union(a));
                    assert_eq!(i, b.intersection(a));
                    assert_eq!(a.union(&i), *a, "absorption");
                    assert_eq!(a.intersection(&u), *a, "absorption");
                    assert!(ideals.contains(&u) && ideals.contains(&i), "closure");
                    for c in &ideals {
                        assert_eq!(
                            a.union(&b.intersection(c)),
                            a.union(b).intersection(&a.union(c)),
                            "distributivity"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn moebius_examples() {
        let shape = p("1^1");
        let lat = IdealLattice::new(&shape);
        let full = lat
            .id_of(&OrderIdeal::parse_boundary(&shape, "0").unwrap())
            .unwrap();
        let mid = lat
            .id_of(&OrderIdeal::parse_boundary(&shape, "1").unwrap())
            .unwrap();
        let empty = lat.id_of(&OrderIdeal::empty(&shape)).unwrap();
        assert_eq!(lat.moebius(full, full), 1);
        assert_eq!(lat.moebius(mid, full), -1);
        assert_eq!(lat.moebius(empty, full), 0);
    }

    #[test]
    fn moebius_defining_identity() {
        // Σ_{J ⊆ K ⊆ I} μ(J, K) = [J = I] on every lattice up to weight 6.
        for shape in Partition::capped_up_to_weight(6) {
            let lat = IdealLattice::new(&shape);
            let n = lat.len();
            for j in 0..n {
                for i in 0..n {
                    if !lat.le(j, i) {
                        continue;
                    }
                    let mut acc = 0i64;
                    for k in 0..n {
                        if lat.le(j, k) && lat.le(k, i) {
                            acc += lat.moebius(j, k);
                        }
                    }
                    assert_eq!(acc, i64::from(j == i));
                }
            }
        }
    }
}
