//! Raw automorphism enumeration for tiny instances.
//!
//! Endomorphisms are block matrices: the block from a summand of length
//! `l_s` into one of length `l_t` is multiplication by an element of
//! `t^{max(0, l_t - l_s)} R / t^{l_t}`, giving `p^{min(l_t, l_s)}` choices.
//! An endomorphism is invertible iff its reduction mod `t` is, and that
//! reduction is block triangular in the part ordering, so the criterion is
//! the invertibility of each same-part block of constant terms. Every
//! enumerated map is additionally cross-checked by evaluation: the candidate
//! set is verified to be exactly the bijective maps.
//!
//! This tier exists to validate the stabilizer-orbit machinery on instances
//! small enough to enumerate the full group.

use crate::error::{Error, Result};
use crate::partition::Partition;

use super::{Element, ModuleSpace, OracleConfig};

/// A module endomorphism as dense blocks; `blocks[t * n + s]` is the image
/// polynomial (length `l_t`) of the generator of source coordinate `s` in
/// target coordinate `t`.
#[derive(Clone, Debug)]
pub struct Endomorphism {
    ncoords: usize,
    blocks: Vec<Vec<u8>>,
}

impl Endomorphism {
    /// Applies the map to an element of `space`.
    pub fn apply(&self, space: &ModuleSpace, x: &Element) -> Element {
        let p = self.p_of(space);
        let mut y = space.zero();
        for t in 0..self.ncoords {
            let t_range = space.coord_range(t);
            let lt = t_range.len();
            for s in 0..self.ncoords {
                let block = &self.blocks[t * self.ncoords + s];
                let xs = &x[space.coord_range(s)];
                for (a, &xa) in xs.iter().enumerate() {
                    if xa == 0 {
                        continue;
                    }
                    for (b, &cb) in block.iter().enumerate() {
                        let d = a + b;
                        if d >= lt || cb == 0 {
                            continue;
                        }
                        let slot = t_range.start + d;
                        y[slot] = ((y[slot] as u32 + xa as u32 * cb as u32) % p) as u8;
                    }
                }
            }
        }
        y
    }

    fn p_of(&self, space: &ModuleSpace) -> u32 {
        space.p()
    }
}

/// Total endomorphism count `Π p^{min(λ_i, λ_j) ρ_i ρ_j}`.
pub fn endomorphism_count(shape: &Partition, p: u32) -> u128 {
    let mut coords = Vec::new();
    for &(l, r) in shape.parts() {
        for _ in 0..r {
            coords.push(l);
        }
    }
    let mut total = 1u128;
    for &lt in &coords {
        for &ls in &coords {
            total = total.saturating_mul((p as u128).pow(lt.min(ls)));
        }
    }
    total
}

/// Enumerates every automorphism of the space.
///
/// Every endomorphism is tested twice: by the mod-`t` block criterion and by
/// evaluation on all elements; the two verdicts are asserted to agree.
pub fn enumerate_automorphisms(
    space: &ModuleSpace,
    config: &OracleConfig,
) -> Result<Vec<Endomorphism>> {
    let p = space.p();
    let shape = space.shape().clone();
    let needed = endomorphism_count(&shape, p);
    if needed > config.max_endomorphisms as u128 {
        return Err(Error::EndomorphismCapExceeded {
            needed,
            cap: config.max_endomorphisms,
        });
    }
    let coords: Vec<u32> = space.coord_parts().to_vec();
    let n = coords.len();
    // Free coefficient counts per block, row-major over (target, source).
    let freedom: Vec<u32> = (0..n * n)
        .map(|i| coords[i / n].min(coords[i % n]))
        .collect();
    let mut digits: Vec<Vec<u8>> = freedom.iter().map(|&f| vec![0u8; f as usize]).collect();
    let mut out = Vec::new();
    loop {
        let endo = assemble(&coords, &digits);
        let candidate = unit_block_criterion(&coords, &endo, p);
        let bijective = is_bijective(space, &endo);
        assert_eq!(
            candidate, bijective,
            "mod-t block criterion must match evaluation"
        );
        if bijective {
            out.push(endo);
        }
        if !advance(&mut digits, p as u8) {
            break;
        }
    }
    Ok(out)
}

fn assemble(coords: &[u32], digits: &[Vec<u8>]) -> Endomorphism {
    let n = coords.len();
    let blocks = (0..n * n)
        .map(|i| {
            let (lt, ls) = (coords[i / n], coords[i % n]);
            let shift = lt.saturating_sub(ls) as usize;
            let mut poly = vec![0u8; lt as usize];
            for (m, &d) in digits[i].iter().enumerate() {
                poly[shift + m] = d;
            }
            poly
        })
        .collect();
    Endomorphism { ncoords: n, blocks }
}

fn advance(digits: &mut [Vec<u8>], p: u8) -> bool {
    for block in digits.iter_mut() {
        for d in block.iter_mut() {
            if *d + 1 < p {
                *d += 1;
                return true;
            }
            *d = 0;
        }
    }
    false
}

/// Each same-part block of constant terms must be invertible mod `p`.
fn unit_block_criterion(coords: &[u32], endo: &Endomorphism, p: u32) -> bool {
    let n = coords.len();
    let mut parts: Vec<u32> = coords.to_vec();
    parts.dedup();
    for part in parts {
        let group: Vec<usize> = (0..n).filter(|&c| coords[c] == part).collect();
        let k = group.len();
        let mut m: Vec<u32> = Vec::with_capacity(k * k);
        for &r in &group {
            for &c in &group {
                m.push(endo.blocks[r * n + c][0] as u32);
            }
        }
        if det_mod_p(&mut m, k, p) == 0 {
            return false;
        }
    }
    true
}

fn det_mod_p(m: &mut [u32], k: usize, p: u32) -> u32 {
    let mut det = 1u64;
    for col in 0..k {
        let pivot = (col..k).find(|&r| !m[r * k + col].is_multiple_of(p));
        let Some(pivot) = pivot else {
            return 0;
        };
        if pivot != col {
            for j in 0..k {
                m.swap(pivot * k + j, col * k + j);
            }
            det = det * (p as u64 - 1) % p as u64;
        }
        let inv = mod_inverse(m[col * k + col] % p, p);
        det = det * (m[col * k + col] % p) as u64 % p as u64;
        for r in col + 1..k {
            let factor = m[r * k + col] % p * inv % p;
            for j in col..k {
                let sub = factor as u64 * m[col * k + j] as u64 % p as u64;
                m[r * k + j] = ((m[r * k + j] as u64 + p as u64 - sub) % p as u64) as u32;
            }
        }
    }
    (det % p as u64) as u32
}

fn mod_inverse(a: u32, p: u32) -> u32 {
    // Fermat: p is prime.
    let mut result = 1u64;
    let mut base = a as u64 % p as u64;
    let mut exp = p - 2;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % p as u64;
        }
        base = base * base % p as u64;
        exp >>= 1;
    }
    result as u32
}

fn is_bijective(space: &ModuleSpace, endo: &Endomorphism) -> bool {
    let mut seen = vec![false; space.size() as usize];
    for idx in 0..space.size() {
        let y = endo.apply(space, &space.element(idx));
        let yi = space.index_of(&y) as usize;
        if seen[yi] {
            return false;
        }
        seen[yi] = true;
    }
    true
}

/// The subgroup fixing `e`, as indices into `autos`.
pub fn stabilizer_subgroup(space: &ModuleSpace, autos: &[Endomorphism], e: &Element) -> Vec<usize> {
    autos
        .iter()
        .enumerate()
        .filter(|(_, g)| &g.apply(space, e) == e)
        .map(|(i, _)| i)
        .collect()
}

/// Orbit class per element index under a set of group elements (the whole
/// group: one application sweep per orbit representative suffices).
pub fn orbit_partition(space: &ModuleSpace, autos: &[Endomorphism], members: &[usize]) -> Vec<u32> {
    let n = space.size() as usize;
    let mut class = vec![u32::MAX; n];
    let mut next = 0u32;
    for idx in 0..n {
        if class[idx] != u32::MAX {
            continue;
        }
        let x = space.element(idx as u64);
        for &g in members {
            let y = autos[g].apply(space, &x);
            class[space.index_of(&y) as usize] = next;
        }
        assert_eq!(class[idx], next, "the identity keeps x in its own orbit");
        next += 1;
    }
    class
}

/// Orbit count of the diagonal action on pairs, optionally restricted to
/// `πA × πA` (which the group preserves).
pub fn pairs_orbit_count(
    space: &ModuleSpace,
    autos: &[Endomorphism],
    restrict_to_pi: bool,
    config: &OracleConfig,
) -> Result<u64> {
    let n = space.size();
    let needed = (n as u128) * (n as u128);
    if needed > config.max_elements as u128 {
        return Err(Error::BudgetExceeded {
            needed,
            cap: config.max_elements,
        });
    }
    let n = n as usize;
    let pi: Vec<bool> = (0..n)
        .map(|i| space.in_pi(&space.element(i as u64)))
        .collect();
    let mut visited = vec![false; n * n];
    let mut count = 0u64;
    for a in 0..n {
        if restrict_to_pi && !pi[a] {
            continue;
        }
        for b in 0..n {
            if restrict_to_pi && !pi[b] {
                continue;
            }
            if visited[a * n + b] {
                continue;
            }
            count += 1;
            let x = space.element(a as u64);
            let y = space.element(b as u64);
            for g in autos {
                let gx = space.index_of(&g.apply(space, &x)) as usize;
                let gy = space.index_of(&g.apply(space, &y)) as usize;
                visited[gx * n + gy] = true;
            }
        }
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::n_lambda_at;

    fn p(text: &str) -> Partition {
        Partition::parse(text).unwrap()
    }

    fn space(text: &str, prime: u32) -> ModuleSpace {
        ModuleSpace::new(&p(text), prime, &OracleConfig::default()).unwrap()
    }

    #[test]
    fn automorphism_counts() {
        // Invertible 2x2 residue maps: (p^2 - 1)(p^2 - p).
        let s = space("1^2", 2);
        assert_eq!(
            enumerate_automorphisms(&s, &OracleConfig::default())
                .unwrap()
                .len(),
            6
        );
        // Units of the residue field.
        let s = space("1^1", 3);
        assert_eq!(
            enumerate_automorphisms(&s, &OracleConfig::default())
                .unwrap()
                .len(),
            2
        );
        // Units of the length-2 truncated ring.
        let s = space("2^1", 2);
        assert_eq!(
            enumerate_automorphisms(&s, &OracleConfig::default())
                .unwrap()
                .len(),
            2
        );
    }

    #[test]
    fn endomorphism_cap_is_enforced() {
        let s = space("2^2", 2);
        let cfg = OracleConfig {
            max_endomorphisms: 10,
            ..Default::default()
        };
        assert!(matches!(
            enumerate_automorphisms(&s, &cfg),
            Err(Error::EndomorphismCapExceeded { .. })
        ));
    }

    #[test]
    fn pair_orbit_counts_match_stabilizer_route() {
        for (shape, prime, expected) in [("1^2", 2, 5), ("2^1", 2, 10), ("3^1,1^1", 2, 46)] {
            let s = space(shape, prime);
            let autos = enumerate_automorphisms(&s, &OracleConfig::default()).unwrap();
            let pairs = pairs_orbit_count(&s, &autos, false, &OracleConfig::default()).unwrap();
            assert_eq!(pairs, expected);
            assert_eq!(
                pairs,
                n_lambda_at(&p(shape), prime, &OracleConfig::default()).unwrap()
            );
        }
    }

    #[test]
    fn pair_orbits_in_pi_match_deleted_column() {
        // Pair orbits inside πA × πA equal the pair-orbit count of the
        // first-column deletion (restrictions of automorphisms are exactly
        // the automorphisms of πA).
        for (shape, prime) in [("2^1", 2), ("3^1,1^1", 2), ("2^2", 2), ("2^1,1^1", 3)] {
            let shape = p(shape);
            let s = ModuleSpace::new(&shape, prime, &OracleConfig::default()).unwrap();
            let autos = enumerate_automorphisms(&s, &OracleConfig::default()).unwrap();
            let restricted = pairs_orbit_count(&s, &autos, true, &OracleConfig::default()).unwrap();
            assert_eq!(
                restricted,
                n_lambda_at(
                    &shape.delete_first_column(),
                    prime,
                    &OracleConfig::default()
                )
                .unwrap()
            );
        }
    }

    #[test]
    fn orbit_partition_matches_ideals() {
        // Full-group orbits are the fibers of x ↦ I(x).
        let s = space("3^1,1^1", 2);
        let autos = enumerate_automorphisms(&s, &OracleConfig::default()).unwrap();
        let members: Vec<usize> = (0..autos.len()).collect();
        let classes = orbit_partition(&s, &autos, &members);
        for a in 0..s.size() {
            for b in 0..s.size() {
                let same_class = classes[a as usize] == classes[b as usize];
                let same_ideal = s.ideal_of(&s.element(a)) == s.ideal_of(&s.element(b));
                assert_eq!(same_class, same_ideal);
            }
        }
    }
}
