//! Orbit counting for the stabilizer of a canonical element.
//!
//! Fix a realized ideal `I` with maximal elements `(v_j, l_j)`. The module
//! splits as `A = A' ⊕ A''`, where `A'` collects the first copy of each row
//! `l_j` (the summands where the canonical element `e = (e', 0)` is nonzero)
//! and `A''` the rest. Writing `J = I(x̄')` for the ideal of the image of
//! `x'` in `A' / R e'` and `K = I(x'')`, an element `y` lies in the orbit of
//! `x` under the stabilizer of `e` iff
//!
//! * `y' − x'` lies in the characteristic submodule `(A')_{J ∪ K}`, and
//! * `y''` lies in the sum set `(A'')*_K + (A'')_J` of the orbit of `K` and
//!   the characteristic submodule of `J`.
//!
//! So each orbit is a product of a coset panel and a sum set, with
//! cardinality `α_{J,K} = |(A')_{J∪K}| · |(A'')*_K + (A'')_J|`.
//!
//! `J` is consumed purely through boundary values: the boundary of `I(x̄')`
//! at `l` is the least valuation of `φ(x')` over homomorphisms
//! `φ : A' → R/t^l` killing `e'` (an element of a cyclic target is a
//! homomorphic image exactly when its ideal is contained in the source's).
//! The homomorphisms killing `e'` form a submodule with one generator per
//! maximal element, so the minimum is taken over that generating set; a
//! principal ideal short-circuits through the cyclic quotient `R/t^{v_1}`.
//!
//! Counting runs two independent methods and asserts they agree:
//!
//! * CLAIM: walk elements in index order and mark each unvisited element's
//!   whole orbit through the product description above.
//! * BUCKET: bucket elements by `(J, K)`; a bucket is generally not a union
//!   of orbits, but orbits of equal cardinality fill groups of equal-α
//!   buckets exactly, so grouping buckets by α and dividing each group's
//!   population by its α (asserting exactness) counts the orbits.
//!
//! Restriction to `πA` drops elements outside `πA` from both methods; this
//! is sound because `πA` is a characteristic submodule, hence a union of
//! orbits.

use std::collections::HashMap;
use std::rc::Rc;

use crate::counting::canonical_element;
use crate::error::{Error, Result};
use crate::lattice::{enumerate_realized_ideals, IdealLattice};
use crate::partition::Partition;
use crate::poset::{Boundary, GenericIdeal, OrderIdeal, PosetPoint};

use super::{Element, ModuleSpace, OracleConfig};

/// One term of a homomorphism generator: the coordinate it reads, the power
/// of `t` it multiplies by, and its sign.
struct HomTerm {
    slot: usize,
    shift: u32,
    negate: bool,
}

struct Bucket {
    alpha: u64,
    sub_prime: Rc<Vec<u64>>,
    /// Ideals whose orbits make up the sum set, per rest-lattice id.
    sumset_ideals: Vec<bool>,
}

/// Precomputed tables for one `(shape, p, ideal)` stabilizer.
pub struct StabilizerContext {
    shape: Partition,
    p: u32,
    ideal: OrderIdeal,
    max_elts: Vec<PosetPoint>,
    full: ModuleSpace,
    prime: ModuleSpace,
    rest: ModuleSpace,
    /// Full-space coordinate per split-space coordinate.
    prime_coords: Vec<usize>,
    rest_coords: Vec<usize>,
    e_prime: Element,
    lmax: u32,
    /// Generators of the homomorphisms killing `e'`, per target length.
    hom_gens: Vec<Vec<Vec<HomTerm>>>,
    j_profiles: Vec<GenericIdeal>,
    j_of: Vec<u32>,
    prime_pop: Vec<u64>,
    prime_pop_pi: Vec<u64>,
    prime_pi: Vec<bool>,
    rest_lattice: IdealLattice,
    k_of: Vec<u32>,
    rest_pop: Vec<u64>,
    rest_pop_pi: Vec<u64>,
    rest_pi: Vec<bool>,
    rest_by_ideal: Vec<Vec<u64>>,
    rest_canonical: Vec<Option<Element>>,
}

impl StabilizerContext {
    pub fn new(
        shape: &Partition,
        p: u32,
        ideal: &OrderIdeal,
        config: &OracleConfig,
    ) -> Result<Self> {
        if ideal.rows() != shape.rows() {
            return Err(Error::InvalidInput(format!(
                "ideal with boundary ({}) does not live over {shape}",
                ideal.boundary_text()
            )));
        }
        if !ideal.is_realized() {
            return Err(Error::UnrealizedIdeal(ideal.boundary_text()));
        }
        let full = ModuleSpace::new(shape, p, config)?;
        let mut max_elts = ideal.max_elements();
        max_elts.sort_by_key(|m| std::cmp::Reverse(m.part));
        for m in &max_elts {
            assert!(
                m.valuation < m.part,
                "realized ideals have sub-diagonal maxima"
            );
        }

        let prime_shape = Partition::new(max_elts.iter().map(|m| (m.part, 1)).collect())
            .expect("antichain rows are strictly decreasing");
        let mut rest_shape = shape.clone();
        for m in &max_elts {
            let idx = rest_shape
                .part_index(m.part)
                .expect("maximal element sits in a row of the shape");
            rest_shape = rest_shape.remove_copy(idx);
        }
        let prime = ModuleSpace::new(&prime_shape, p, config)?;
        let rest = ModuleSpace::new(&rest_shape, p, config)?;

        let mut prime_coords = Vec::new();
        let mut rest_coords = Vec::new();
        let mut full_coord = 0usize;
        for &(part, mult) in shape.parts() {
            let in_max = max_elts.iter().any(|m| m.part == part);
            for copy in 0..mult {
                if copy == 0 && in_max {
                    prime_coords.push(full_coord);
                } else {
                    rest_coords.push(full_coord);
                }
                full_coord += 1;
            }
        }
        debug_assert_eq!(prime_coords.len(), prime.coord_parts().len());
        debug_assert_eq!(rest_coords.len(), rest.coord_parts().len());

        let mut e_prime = prime.zero();
        for (slot, m) in max_elts.iter().enumerate() {
            e_prime[prime.coord_range(slot).start + m.valuation as usize] = 1;
        }

        let lmax = shape.largest_part();
        let mut hom_gens = Vec::with_capacity(lmax as usize);
        for l in 1..=lmax {
            hom_gens.push(hom_generators(&max_elts, l));
        }

        let mut ctx = StabilizerContext {
            shape: shape.clone(),
            p,
            ideal: ideal.clone(),
            max_elts,
            full,
            prime,
            rest,
            prime_coords,
            rest_coords,
            e_prime,
            lmax,
            hom_gens,
            j_profiles: Vec::new(),
            j_of: Vec::new(),
            prime_pop: Vec::new(),
            prime_pop_pi: Vec::new(),
            prime_pi: Vec::new(),
            rest_lattice: IdealLattice::new(&rest_shape),
            k_of: Vec::new(),
            rest_pop: Vec::new(),
            rest_pop_pi: Vec::new(),
            rest_pi: Vec::new(),
            rest_by_ideal: Vec::new(),
            rest_canonical: Vec::new(),
        };
        ctx.build_prime_tables();
        ctx.build_rest_tables();
        Ok(ctx)
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn ideal(&self) -> &OrderIdeal {
        &self.ideal
    }

    /// The canonical element's component in `A'` (its coordinates are
    /// `t^{v_j}` at the maximal elements).
    pub fn canonical_prime(&self) -> &Element {
        &self.e_prime
    }

    pub fn full_space(&self) -> &ModuleSpace {
        &self.full
    }

    pub fn prime_space(&self) -> &ModuleSpace {
        &self.prime
    }

    pub fn rest_space(&self) -> &ModuleSpace {
        &self.rest
    }

    /// The canonical element realized in the full space.
    pub fn canonical_in_full(&self) -> Element {
        self.full.realize(&canonical_element(&self.ideal))
    }

    fn build_prime_tables(&mut self) {
        let np = self.prime.size() as usize;
        let mut profile_ids: HashMap<Vec<Boundary>, u32> = HashMap::new();
        let mut profiles: Vec<GenericIdeal> = Vec::new();
        let mut j_of = Vec::with_capacity(np);
        let mut pi = Vec::with_capacity(np);
        let mut el = self.prime.zero();
        for idx in 0..np as u64 {
            self.prime.decode_into(idx, &mut el);
            let profile = self.profile_of(&el);
            let next = profiles.len() as u32;
            let id = *profile_ids.entry(profile.clone()).or_insert_with(|| {
                profiles.push(GenericIdeal::from_profile(profile.clone()));
                next
            });
            j_of.push(id);
            pi.push(self.prime.in_pi(&el));
        }
        let mut pop = vec![0u64; profiles.len()];
        let mut pop_pi = vec![0u64; profiles.len()];
        for (idx, &j) in j_of.iter().enumerate() {
            pop[j as usize] += 1;
            if pi[idx] {
                pop_pi[j as usize] += 1;
            }
        }
        self.j_profiles = profiles;
        self.j_of = j_of;
        self.prime_pop = pop;
        self.prime_pop_pi = pop_pi;
        self.prime_pi = pi;
    }

    fn build_rest_tables(&mut self) {
        let nr = self.rest.size() as usize;
        let nk = self.rest_lattice.len();
        // Pack boundary vectors into a dense key for table lookup.
        let rows = self.rest.shape().rows();
        let mut strides = Vec::with_capacity(rows.len());
        let mut total = 1usize;
        for &row in &rows {
            strides.push(total);
            total *= row as usize + 2;
        }
        let key = |boundary: &[Boundary]| -> usize {
            boundary
                .iter()
                .enumerate()
                .map(|(i, &b)| strides[i] * b.map_or(rows[i] as usize + 1, |v| v as usize))
                .sum()
        };
        let mut key_to_id = vec![u32::MAX; total];
        for (id, ideal) in self.rest_lattice.ideals().iter().enumerate() {
            key_to_id[key(ideal.boundary())] = id as u32;
        }
        let mut k_of = Vec::with_capacity(nr);
        let mut pi = Vec::with_capacity(nr);
        let mut by_ideal = vec![Vec::new(); nk];
        let mut el = self.rest.zero();
        for idx in 0..nr as u64 {
            self.rest.decode_into(idx, &mut el);
            let id = key_to_id[key(&self.rest.ideal_boundary(&el))];
            assert_ne!(id, u32::MAX, "element boundary must be a lattice member");
            k_of.push(id);
            by_ideal[id as usize].push(idx);
            pi.push(self.rest.in_pi(&el));
        }
        let mut pop = vec![0u64; nk];
        let mut pop_pi = vec![0u64; nk];
        for (idx, &k) in k_of.iter().enumerate() {
            pop[k as usize] += 1;
            if pi[idx] {
                pop_pi[k as usize] += 1;
            }
        }
        let canonical = (0..nk)
            .map(|id| {
                self.rest_lattice.is_realized(id).then(|| {
                    self.rest
                        .realize(&canonical_element(self.rest_lattice.ideal(id)))
                })
            })
            .collect();
        self.k_of = k_of;
        self.rest_pop = pop;
        self.rest_pop_pi = pop_pi;
        self.rest_pi = pi;
        self.rest_by_ideal = by_ideal;
        self.rest_canonical = canonical;
    }

    /// Boundary profile of `I(x̄')` at every length `1..=lmax`.
    fn profile_of(&self, xp: &Element) -> Vec<Boundary> {
        if self.max_elts.len() == 1 {
            self.profile_fast(xp)
        } else {
            self.profile_via_homs(xp)
        }
    }

    /// Principal short-circuit: the quotient by `R e'` is cyclic of length
    /// `v_1`, so the image's ideal is generated by `(w, v_1)` with `w` the
    /// valuation of `x'` truncated below `v_1`.
    fn profile_fast(&self, xp: &Element) -> Vec<Boundary> {
        let v0 = self.max_elts[0].valuation;
        let range = self.prime.coord_range(0);
        let w = xp[range][..v0 as usize]
            .iter()
            .position(|&c| c != 0)
            .map(|i| i as u32);
        (1..=self.lmax)
            .map(|l| w.and_then(|w| Some(w + l.saturating_sub(v0)).filter(|&b| b <= l)))
            .collect()
    }

    /// Generator-search profile. The search sees only valuations of nonzero
    /// images, so a row whose sole members are diagonal reads empty; the
    /// diagonal point `(l, l)` lies in the ideal iff some row has a
    /// sub-diagonal point of valuation at most `l`, which supplies the
    /// correction.
    pub fn profile_via_homs(&self, xp: &Element) -> Vec<Boundary> {
        let mins: Vec<Boundary> = (1..=self.lmax)
            .map(|l| self.quotient_boundary_via_homs(xp, l))
            .collect();
        let smallest = mins.iter().flatten().min().copied();
        mins.iter()
            .enumerate()
            .map(|(i, &m)| {
                let l = (i + 1) as u32;
                m.or_else(|| smallest.filter(|&t| t <= l).map(|_| l))
            })
            .collect()
    }

    /// Boundary of `I(x̄')` at one length `l`, by dispatching to the
    /// principal short-circuit or the corrected generator search.
    pub fn quotient_boundary(&self, xp: &Element, l: u32) -> Boundary {
        assert!(l >= 1 && l <= self.lmax);
        self.profile_of(xp)[l as usize - 1]
    }

    /// Least valuation of a nonzero homomorphic image of `x̄'` in `R/t^l`,
    /// by the generator search; `None` when every image is zero.
    pub fn quotient_boundary_via_homs(&self, xp: &Element, l: u32) -> Boundary {
        let p = self.p as u16;
        let mut best: Option<u32> = None;
        let mut buf = vec![0u16; l as usize];
        for gen in &self.hom_gens[l as usize - 1] {
            buf.fill(0);
            for term in gen {
                let coord = &xp[self.prime.coord_range(term.slot)];
                for (i, &c) in coord.iter().enumerate() {
                    let d = term.shift as usize + i;
                    if d < l as usize && c != 0 {
                        let add = if term.negate { p - c as u16 } else { c as u16 };
                        buf[d] = (buf[d] + add) % p;
                    }
                }
            }
            if let Some(v) = buf.iter().position(|&c| c != 0) {
                let v = v as u32;
                if best.is_none_or(|b| v < b) {
                    best = Some(v);
                }
            }
        }
        best
    }

    /// Splits a full-space element along the decomposition.
    pub fn decompose(&self, x: &Element) -> (Element, Element) {
        let mut xp = self.prime.zero();
        for (slot, &fc) in self.prime_coords.iter().enumerate() {
            xp[self.prime.coord_range(slot)].copy_from_slice(&x[self.full.coord_range(fc)]);
        }
        let mut xr = self.rest.zero();
        for (slot, &fc) in self.rest_coords.iter().enumerate() {
            xr[self.rest.coord_range(slot)].copy_from_slice(&x[self.full.coord_range(fc)]);
        }
        (xp, xr)
    }

    /// Inverse of [`decompose`](Self::decompose).
    pub fn compose(&self, xp: &Element, xr: &Element) -> Element {
        let mut x = self.full.zero();
        for (slot, &fc) in self.prime_coords.iter().enumerate() {
            x[self.full.coord_range(fc)].copy_from_slice(&xp[self.prime.coord_range(slot)]);
        }
        for (slot, &fc) in self.rest_coords.iter().enumerate() {
            x[self.full.coord_range(fc)].copy_from_slice(&xr[self.rest.coord_range(slot)]);
        }
        x
    }

    /// Per-coordinate valuation floors of `(A')_{J ∪ K}`.
    fn prime_floors(&self, j: u32, k: u32) -> Vec<u32> {
        let profile = &self.j_profiles[j as usize];
        let k_ideal = self.rest_lattice.ideal(k as usize);
        self.prime
            .coord_parts()
            .iter()
            .map(|&part| {
                let a = profile.boundary_at(part);
                let b = k_ideal.boundary_at(part);
                match (a, b) {
                    (Some(x), Some(y)) => x.min(y).min(part),
                    (Some(x), None) | (None, Some(x)) => x.min(part),
                    (None, None) => part,
                }
            })
            .collect()
    }

    /// Per-coordinate valuation floors of `(A'')_J`.
    fn rest_floors(&self, j: u32) -> Vec<u32> {
        let profile = &self.j_profiles[j as usize];
        self.rest
            .coord_parts()
            .iter()
            .map(|&part| profile.boundary_at(part).map_or(part, |b| b.min(part)))
            .collect()
    }

    /// Stabilizer-orbit membership: `y` lies in the orbit of `x` iff the
    /// coset condition holds in `A'` and the sum-set condition in `A''`, the
    /// latter tested by enumerating `(A'')_J` and checking `y'' − b` against
    /// the orbit of `K`.
    pub fn equivalent(&self, x: &Element, y: &Element) -> bool {
        let (xp, xr) = self.decompose(x);
        let (yp, yr) = self.decompose(y);
        let j = self.j_of[self.prime.index_of(&xp) as usize];
        let k = self.k_of[self.rest.index_of(&xr) as usize];
        let d = self.prime.sub(&yp, &xp);
        for (c, &floor) in self.prime_floors(j, k).iter().enumerate() {
            if let Some(v) = self.prime.coord_valuation(&d, c) {
                if v < floor {
                    return false;
                }
            }
        }
        let mut buf = self.rest.zero();
        for b in self.rest.submodule_indices(&self.rest_floors(j)) {
            self.rest.decode_into(b, &mut buf);
            let diff = self.rest.sub(&yr, &buf);
            if self.k_of[self.rest.index_of(&diff) as usize] == k {
                return true;
            }
        }
        false
    }

    fn build_bucket(
        &self,
        j: u32,
        k: u32,
        sub_prime_memo: &mut HashMap<Vec<u32>, Rc<Vec<u64>>>,
        sub_rest_memo: &mut HashMap<u32, Rc<Vec<u64>>>,
    ) -> Bucket {
        let floors = self.prime_floors(j, k);
        let sub_prime = sub_prime_memo
            .entry(floors.clone())
            .or_insert_with(|| Rc::new(self.prime.submodule_indices(&floors)))
            .clone();
        let sub_rest = sub_rest_memo
            .entry(j)
            .or_insert_with(|| Rc::new(self.rest.submodule_indices(&self.rest_floors(j))))
            .clone();
        let e_k = self.rest_canonical[k as usize]
            .as_ref()
            .expect("occupied buckets carry realized ideals");
        let mut sumset_ideals = vec![false; self.rest_lattice.len()];
        let mut buf = self.rest.zero();
        for &b in sub_rest.iter() {
            self.rest.decode_into(b, &mut buf);
            let sum = self.rest.add(e_k, &buf);
            sumset_ideals[self.k_of[self.rest.index_of(&sum) as usize] as usize] = true;
        }
        let sumset_size: u64 = sumset_ideals
            .iter()
            .enumerate()
            .filter(|&(_, &m)| m)
            .map(|(id, _)| self.rest_pop[id])
            .sum();
        Bucket {
            alpha: sub_prime.len() as u64 * sumset_size,
            sub_prime,
            sumset_ideals,
        }
    }

    /// Number of stabilizer orbits on the module (or on `πA`), by the CLAIM
    /// and BUCKET methods, asserted equal.
    pub fn count_orbits(&self, restrict_to_pi: bool) -> u64 {
        let np = self.prime.size() as usize;
        let nr = self.rest.size() as usize;
        let nk = self.rest_lattice.len();

        let mut buckets: HashMap<(u32, u32), Bucket> = HashMap::new();
        let mut sub_prime_memo: HashMap<Vec<u32>, Rc<Vec<u64>>> = HashMap::new();
        let mut sub_rest_memo: HashMap<u32, Rc<Vec<u64>>> = HashMap::new();

        // BUCKET: group occupied buckets by orbit cardinality.
        let mut groups: HashMap<u64, u128> = HashMap::new();
        for j in 0..self.j_profiles.len() as u32 {
            let pj = if restrict_to_pi {
                self.prime_pop_pi[j as usize]
            } else {
                self.prime_pop[j as usize]
            };
            if pj == 0 {
                continue;
            }
            for k in 0..nk as u32 {
                let pk = if restrict_to_pi {
                    self.rest_pop_pi[k as usize]
                } else {
                    self.rest_pop[k as usize]
                };
                if pk == 0 {
                    continue;
                }
                let bucket = buckets.entry((j, k)).or_insert_with(|| {
                    self.build_bucket(j, k, &mut sub_prime_memo, &mut sub_rest_memo)
                });
                *groups.entry(bucket.alpha).or_default() += pj as u128 * pk as u128;
            }
        }
        let mut bucket_total = 0u64;
        for (alpha, population) in groups {
            assert_eq!(
                population % alpha as u128,
                0,
                "group population must be an exact multiple of the orbit cardinality"
            );
            bucket_total += (population / alpha as u128) as u64;
        }

        // CLAIM: sweep elements in index order, marking whole orbits.
        let mut visited = vec![false; np * nr];
        let mut claimed = 0u64;
        let mut marked = 0u64;
        let mut xp_el = self.prime.zero();
        let mut s_el = self.prime.zero();
        for xp in 0..np {
            if restrict_to_pi && !self.prime_pi[xp] {
                continue;
            }
            let base = xp * nr;
            for xr in 0..nr {
                if restrict_to_pi && !self.rest_pi[xr] {
                    continue;
                }
                if visited[base + xr] {
                    continue;
                }
                claimed += 1;
                let j = self.j_of[xp];
                let k = self.k_of[xr];
                let bucket = buckets.entry((j, k)).or_insert_with(|| {
                    self.build_bucket(j, k, &mut sub_prime_memo, &mut sub_rest_memo)
                });
                self.prime.decode_into(xp as u64, &mut xp_el);
                let panel: Vec<usize> = bucket
                    .sub_prime
                    .iter()
                    .map(|&s| {
                        self.prime.decode_into(s, &mut s_el);
                        self.prime.index_of(&self.prime.add(&xp_el, &s_el)) as usize
                    })
                    .collect();
                for (id, &present) in bucket.sumset_ideals.iter().enumerate() {
                    if !present {
                        continue;
                    }
                    for &yr in &self.rest_by_ideal[id] {
                        for &yp in &panel {
                            let pos = yp * nr + yr as usize;
                            debug_assert!(!visited[pos], "orbit panels must not overlap");
                            visited[pos] = true;
                        }
                    }
                    marked += (self.rest_by_ideal[id].len() * panel.len()) as u64;
                }
            }
        }
        let expected = if restrict_to_pi {
            self.prime_pi.iter().filter(|&&b| b).count() as u64
                * self.rest_pi.iter().filter(|&&b| b).count() as u64
        } else {
            (np * nr) as u64
        };
        assert_eq!(marked, expected, "claimed orbits must partition the space");
        assert_eq!(
            bucket_total, claimed,
            "bucket-sum and claim-based orbit counts disagree"
        );
        bucket_total
    }
}

/// Generators of the homomorphisms `A' → R/t^l` killing `e'`.
///
/// Writing the hom as coordinates `c_j = t^{a_j} u_j` with
/// `a_j = max(0, l − l_j)`, the kernel of `(u_j) ↦ Σ t^{m_j} u_j` with
/// `m_j = a_j + v_j` is generated by one element per slot: the annihilator
/// generator at the slot of minimal `m`, plus for every other slot the
/// two-term relation against the minimal slot.
fn hom_generators(max_elts: &[PosetPoint], l: u32) -> Vec<Vec<HomTerm>> {
    let s = max_elts.len();
    if s == 0 {
        return Vec::new();
    }
    let a: Vec<u32> = max_elts.iter().map(|m| l.saturating_sub(m.part)).collect();
    let m: Vec<u32> = max_elts
        .iter()
        .zip(&a)
        .map(|(e, &a)| a + e.valuation)
        .collect();
    let star = (0..s).min_by_key(|&i| m[i]).unwrap();
    let mut gens = Vec::with_capacity(s);
    gens.push(vec![HomTerm {
        slot: star,
        shift: a[star] + l.saturating_sub(m[star]),
        negate: false,
    }]);
    for j in 0..s {
        if j == star {
            continue;
        }
        gens.push(vec![
            HomTerm {
                slot: j,
                shift: a[j],
                negate: false,
            },
            HomTerm {
                slot: star,
                shift: a[star] + (m[j] - m[star]),
                negate: true,
            },
        ]);
    }
    gens
}

/// Stabilizer-orbit count for one realized ideal at `q = p`.
pub fn count_stab_orbits(
    shape: &Partition,
    p: u32,
    ideal: &OrderIdeal,
    restrict_to_pi: bool,
    config: &OracleConfig,
) -> Result<u64> {
    let ctx = StabilizerContext::new(shape, p, ideal, config)?;
    Ok(ctx.count_orbits(restrict_to_pi))
}

/// The orbit-of-pairs count at `q = p`: every pair orbit contains a pair
/// `(e_I, x)` with `I` realized, and those orbits biject with stabilizer
/// orbits, so the total is the sum over realized ideals.
pub fn n_lambda_at(shape: &Partition, p: u32, config: &OracleConfig) -> Result<u64> {
    let mut total = 0u64;
    for ideal in enumerate_realized_ideals(shape) {
        let ctx = StabilizerContext::new(shape, p, &ideal, config)?;
        total += ctx.count_orbits(false);
    }
    Ok(total)
}
