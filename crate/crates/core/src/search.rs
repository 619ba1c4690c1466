//! Exhaustive search for circulant quadruples `(M, N, P, Q)` over `Z_p`.
//!
//! A circulant 0/1 matrix is stored as the support of its first row, a
//! bitmask over `Z_p`. For circulants the `(0, j)` entry of `M M^T` is the
//! periodic autocorrelation `|S ∩ (S + j)|` and the `(0, j)` entry of
//! `M P^T` is `|S_M ∩ (S_P + j)|`, so all matrix identities reduce to
//! counting conditions on supports.
//!
//! Pair conditions force `paf(S_N) = c - paf(S_M)`, `paf(S_P) = paf(S_N)`
//! and `paf(S_Q) = paf(S_M)` with `c = (p - 3) / 2`, so supports are indexed
//! by their autocorrelation vector and the cross condition `M P^T = N Q^T`
//! is resolved by a hash lookup on cross-correlation vectors.

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};

/// Largest prime the packed search tables support.
pub const MAX_SEARCH_PRIME: u32 = 31;

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Checks that `p` is an odd prime with `3 < p <= 31`.
pub fn check_prime(p: u32) -> Result<()> {
    if p <= 3 || p > MAX_SEARCH_PRIME || !is_prime(p) {
        return Err(Error::InvalidPrime(p));
    }
    Ok(())
}

#[inline]
fn full_mask(p: u32) -> u64 {
    (1u64 << p) - 1
}

/// `S + t` for a set `S ⊆ Z_p` given as a bitmask.
#[inline]
pub(crate) fn translate(mask: u64, t: u32, p: u32) -> u64 {
    let t = t % p;
    if t == 0 {
        return mask;
    }
    ((mask << t) | (mask >> (p - t))) & full_mask(p)
}

/// `a * S` for a unit `a` of `Z_p`.
#[inline]
pub(crate) fn multiply(mask: u64, a: u32, p: u32) -> u64 {
    let mut out = 0u64;
    let mut m = mask;
    while m != 0 {
        let x = m.trailing_zeros();
        m &= m - 1;
        out |= 1u64 << ((x * a) % p);
    }
    out
}

/// Sort key whose integer order is the lexicographic order of the ascending
/// element lists (for sets of equal size).
#[inline]
pub(crate) fn lex_key(mask: u64, p: u32) -> u64 {
    let rev = mask.reverse_bits() >> (64 - p);
    !rev & full_mask(p)
}

/// The lexicographically least translate of a set.
pub(crate) fn translate_min(mask: u64, p: u32) -> u64 {
    let mut best = mask;
    let mut m = mask;
    while m != 0 {
        let x = m.trailing_zeros();
        m &= m - 1;
        let cand = translate(mask, p - x, p);
        if lex_key(cand, p) < lex_key(best, p) {
            best = cand;
        }
    }
    best
}

/// The lexicographically least image under `x -> a x + t`.
pub(crate) fn affine_min(mask: u64, p: u32) -> u64 {
    (1..p).map(|a| translate_min(multiply(mask, a, p), p)).min_by_key(|&m| lex_key(m, p)).unwrap_or(mask)
}

/// A subset of `Z_p`: the support of the first row of a circulant matrix.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct CyclicSupport {
    p: u32,
    mask: u64,
}

impl CyclicSupport {
    pub fn new(p: u32, elements: &[u32]) -> Result<Self> {
        if p == 0 || p > 63 {
            return Err(Error::InvalidPrime(p));
        }
        let mut mask = 0u64;
        for &e in elements {
            if e >= p {
                return Err(Error::SupportOutOfRange { p, element: e });
            }
            mask |= 1 << e;
        }
        if mask.count_ones() as usize != elements.len() {
            return Err(Error::CirculantCondition("repeated support element".into()));
        }
        Ok(CyclicSupport { p, mask })
    }

    pub(crate) fn from_mask(p: u32, mask: u64) -> Self {
        debug_assert!(mask & !full_mask(p) == 0);
        CyclicSupport { p, mask }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn contains(&self, x: u32) -> bool {
        x < self.p && self.mask >> x & 1 == 1
    }

    /// Ascending residues.
    pub fn elements(&self) -> Vec<u32> {
        (0..self.p).filter(|&x| self.contains(x)).collect()
    }

    pub fn translate(&self, t: u32) -> Self {
        CyclicSupport { p: self.p, mask: translate(self.mask, t, self.p) }
    }

    pub fn multiply(&self, a: u32) -> Self {
        CyclicSupport { p: self.p, mask: multiply(self.mask, a % self.p, self.p) }
    }

    #[cfg(test)]
    fn lex_cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.elements().cmp(&other.elements())
    }
}

impl fmt::Debug for CyclicSupport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.elements())
    }
}

impl fmt::Display for CyclicSupport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.elements().iter().map(|x| x.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Periodic autocorrelation `|{x ∈ S : x + j ∈ S}|`.
pub fn paf(s: &CyclicSupport, j: u32) -> u32 {
    (s.mask & translate(s.mask, s.p - j % s.p, s.p)).count_ones()
}

/// `|{x ∈ S : x - j ∈ T}| = |S ∩ (T + j)|`, the `(0, j)` entry of `M P^T`.
pub fn cross_correlation(s: &CyclicSupport, t: &CyclicSupport, j: u32) -> u32 {
    debug_assert_eq!(s.p, t.p);
    (s.mask & translate(t.mask, j, s.p)).count_ones()
}

/// Row-sum and `M M^T + N N^T = (p+1)/2 I + (p-3)/2 J` for a pair of supports.
pub fn check_pair(s1: &CyclicSupport, s2: &CyclicSupport) -> Result<bool> {
    if s1.p != s2.p {
        return Err(Error::DimensionMismatch(format!("p = {} vs p = {}", s1.p, s2.p)));
    }
    let p = s1.p;
    let k = (p as usize - 1) / 2;
    for s in [s1, s2] {
        if s.len() != k {
            return Err(Error::SupportSize { expected: k, got: s.len() });
        }
    }
    let target = (p - 3) / 2;
    Ok((1..p).all(|j| paf(s1, j) + paf(s2, j) == target))
}

/// A candidate `(S_M, S_N, S_P, S_Q)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct CirculantQuadruple {
    pub sm: CyclicSupport,
    pub sn: CyclicSupport,
    pub sp: CyclicSupport,
    pub sq: CyclicSupport,
}

impl CirculantQuadruple {
    pub fn new(sm: CyclicSupport, sn: CyclicSupport, sp: CyclicSupport, sq: CyclicSupport) -> Result<Self> {
        let p = sm.p;
        if [sn.p, sp.p, sq.p].iter().any(|&x| x != p) {
            return Err(Error::DimensionMismatch("supports over different p".into()));
        }
        Ok(CirculantQuadruple { sm, sn, sp, sq })
    }

    pub fn p(&self) -> u32 {
        self.sm.p
    }

    pub fn supports(&self) -> [CyclicSupport; 4] {
        [self.sm, self.sn, self.sp, self.sq]
    }

    /// Checks every circulant identity, naming the first one that fails.
    pub fn validate(&self) -> Result<()> {
        let p = self.p();
        check_prime(p)?;
        let k = (p as usize - 1) / 2;
        for (name, s) in ["M", "N", "P", "Q"].iter().zip(self.supports()) {
            if s.len() != k {
                return Err(Error::CirculantCondition(format!("row sum of {name} is {} instead of {k}", s.len())));
            }
        }
        let pairs = [
            ("MM^T+NN^T", &self.sm, &self.sn),
            ("PP^T+QQ^T", &self.sp, &self.sq),
            ("MM^T+PP^T", &self.sm, &self.sp),
            ("NN^T+QQ^T", &self.sn, &self.sq),
        ];
        for (name, a, b) in pairs {
            if !check_pair(a, b)? {
                return Err(Error::CirculantCondition(format!("{name} != (p+1)/2 I + (p-3)/2 J")));
            }
        }
        if !check_cross(self) {
            return Err(Error::CirculantCondition("MP^T != NQ^T".into()));
        }
        Ok(())
    }

    #[cfg(test)]
    fn lex_cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.supports()
            .iter()
            .zip(other.supports().iter())
            .map(|(a, b)| a.lex_cmp(b))
            .find(|o| o.is_ne())
            .unwrap_or(std::cmp::Ordering::Equal)
    }

    fn sort_key(&self) -> [u64; 4] {
        let p = self.p();
        self.supports().map(|s| lex_key(s.mask, p))
    }

    /// Parses `p: s_M | s_N | s_P | s_Q`. With `one_based` the residues are
    /// read from `{1, ..., p}` and shifted down by one.
    pub fn parse_line(line: &str, one_based: bool) -> Result<Self> {
        let err = |column: usize, message: String| Error::Parse { line: 1, column, message };
        let (head, rest) = line.split_once(':').ok_or_else(|| err(1, "missing ':' after p".into()))?;
        let p: u32 = head.trim().parse().map_err(|_| err(1, format!("bad prime {:?}", head.trim())))?;
        let parts: Vec<&str> = rest.split('|').collect();
        if parts.len() != 4 {
            return Err(err(head.len() + 2, format!("expected 4 supports, found {}", parts.len())));
        }
        let mut offset = head.len() + 2;
        let mut sets = Vec::with_capacity(4);
        for part in parts {
            let mut elems = Vec::new();
            for tok in part.split_whitespace() {
                let col = offset + part.find(tok).unwrap_or(0);
                let v: u32 = tok.parse().map_err(|_| err(col, format!("bad residue {tok:?}")))?;
                let v = if one_based {
                    if v == 0 || v > p {
                        return Err(err(col, format!("{v} outside 1..={p}")));
                    }
                    v - 1
                } else {
                    v
                };
                elems.push(v);
            }
            if elems.windows(2).any(|w| w[0] >= w[1]) && !one_based {
                return Err(err(offset, "residues must be strictly increasing".into()));
            }
            elems.sort_unstable();
            sets.push(CyclicSupport::new(p, &elems).map_err(|e| err(offset, e.to_string()))?);
            offset += part.len() + 1;
        }
        CirculantQuadruple::new(sets[0], sets[1], sets[2], sets[3])
    }
}

impl fmt::Debug for CirculantQuadruple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CirculantQuadruple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} | {} | {} | {}", self.p(), self.sm, self.sn, self.sp, self.sq)
    }
}

/// `M P^T = N Q^T`, checked on the first row.
pub fn check_cross(q: &CirculantQuadruple) -> bool {
    let p = q.p();
    (0..p).all(|j| cross_correlation(&q.sm, &q.sp, j) == cross_correlation(&q.sn, &q.sq, j))
}

/// Generators of the symmetry group used to prune the search. Each one maps
/// solutions to solutions and designs to isomorphic designs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ReductionPolicy {
    /// Simultaneous translation of `(S_M, S_N)` (relabels the first block orbit).
    pub translate_mn: bool,
    /// Simultaneous translation of `(S_P, S_Q)`.
    pub translate_pq: bool,
    /// Simultaneous translation of `(S_M, S_P)` (relabels the first point orbit).
    pub translate_mp: bool,
    /// Simultaneous translation of `(S_N, S_Q)`.
    pub translate_nq: bool,
    /// A multiplier `x -> a x` applied to all four supports.
    pub multiplier: bool,
}

impl ReductionPolicy {
    pub const NONE: ReductionPolicy = ReductionPolicy {
        translate_mn: false,
        translate_pq: false,
        translate_mp: false,
        translate_nq: false,
        multiplier: false,
    };
    pub const FULL: ReductionPolicy = ReductionPolicy {
        translate_mn: true,
        translate_pq: true,
        translate_mp: true,
        translate_nq: true,
        multiplier: true,
    };

    pub fn is_none(&self) -> bool {
        *self == Self::NONE
    }

    pub fn is_full(&self) -> bool {
        *self == Self::FULL
    }

    /// One-parameter subgroups enabled by this policy, as maps on quadruples.
    fn generators(&self) -> Vec<Generator> {
        let mut g = Vec::new();
        if self.translate_mn {
            g.push(Generator::Translate([true, true, false, false]));
        }
        if self.translate_pq {
            g.push(Generator::Translate([false, false, true, true]));
        }
        if self.translate_mp {
            g.push(Generator::Translate([true, false, true, false]));
        }
        if self.translate_nq {
            g.push(Generator::Translate([false, true, false, true]));
        }
        if self.multiplier {
            g.push(Generator::Multiply);
        }
        g
    }
}

impl Default for ReductionPolicy {
    fn default() -> Self {
        Self::FULL
    }
}

#[derive(Debug, Clone, Copy)]
enum Generator {
    Translate([bool; 4]),
    Multiply,
}

impl Generator {
    fn parameters(&self, p: u32) -> std::ops::Range<u32> {
        match self {
            Generator::Translate(_) => 1..p,
            Generator::Multiply => 2..p,
        }
    }

    fn apply(&self, q: &CirculantQuadruple, t: u32) -> CirculantQuadruple {
        let s = q.supports();
        let img: Vec<CyclicSupport> = match self {
            Generator::Translate(which) => {
                s.iter().zip(which).map(|(x, &w)| if w { x.translate(t) } else { *x }).collect()
            }
            Generator::Multiply => s.iter().map(|x| x.multiply(t)).collect(),
        };
        CirculantQuadruple { sm: img[0], sn: img[1], sp: img[2], sq: img[3] }
    }
}

/// Applies one group element of an enabled generator family; exposed for
/// soundness checks.
pub fn apply_reduction(
    policy: &ReductionPolicy,
    family: usize,
    q: &CirculantQuadruple,
    t: u32,
) -> Option<CirculantQuadruple> {
    policy.generators().get(family).map(|g| g.apply(q, t))
}

pub fn reduction_families(policy: &ReductionPolicy) -> usize {
    policy.generators().len()
}

const PAF_BITS: u32 = 4;

/// Packs `paf(S, j)` for `j = 1..=(p-1)/2` (the rest follow by symmetry).
fn paf_key(mask: u64, p: u32) -> u64 {
    let s = CyclicSupport::from_mask(p, mask);
    (1..=(p - 1) / 2).fold(0u64, |acc, j| acc | (paf(&s, j) as u64) << (PAF_BITS * (j - 1)))
}

fn complement_key(key: u64, p: u32) -> u64 {
    let c = ((p - 3) / 2) as u64;
    let mut out = 0;
    for j in 0..(p - 1) / 2 {
        let v = key >> (PAF_BITS * j) & 0xf;
        if v > c {
            return u64::MAX;
        }
        out |= (c - v) << (PAF_BITS * j);
    }
    out
}

/// Cross-correlation vector `j -> |S ∩ (T + j)|`, 4 bits per entry.
#[inline]
fn cross_vector(s: u64, t: u64, p: u32) -> u128 {
    let mut out = 0u128;
    for j in 0..p {
        out |= ((s & translate(t, j, p)).count_ones() as u128) << (4 * j);
    }
    out
}

#[inline]
fn rotate_vector(x: u128, s: u32, p: u32) -> u128 {
    if s == 0 {
        return x;
    }
    let bits = 4 * p;
    let mask = (1u128 << bits) - 1;
    ((x >> (4 * s)) | (x << (bits - 4 * s))) & mask
}

/// Least rotation of a packed vector and the shift that produces it.
#[inline]
fn min_rotation(x: u128, p: u32) -> (u128, u32) {
    let mut best = (x, 0);
    for s in 1..p {
        let r = rotate_vector(x, s, p);
        if r < best.0 {
            best = (r, s);
        }
    }
    best
}

/// Translation classes of `(p-1)/2`-subsets grouped by autocorrelation.
struct SupportIndex {
    p: u32,
    /// Lexicographically least translate of each class member.
    classes: HashMap<u64, Vec<u64>>,
}

impl SupportIndex {
    fn build(p: u32, memory_limit: usize) -> Result<Self> {
        let k = (p - 1) / 2;
        let estimate = binomial(p as u64 - 1, k as u64 - 1) as usize * 24;
        if estimate > memory_limit {
            return Err(Error::Resource(format!("support index needs about {estimate} bytes (limit {memory_limit})")));
        }
        // Subsets containing 0 that are the least of their translates,
        // generated in parallel by the next element after 0.
        let reps: Vec<Vec<(u64, u64)>> = (1..p)
            .into_par_iter()
            .map(|second| {
                let mut out = Vec::new();
                let base = 1u64 | 1u64 << second;
                for_each_subset(second + 1, p, k - 2, base, &mut |mask| {
                    if translate_min(mask, p) == mask {
                        out.push((paf_key(mask, p), mask));
                    }
                });
                out
            })
            .collect();
        let mut classes: HashMap<u64, Vec<u64>> = HashMap::new();
        for (key, mask) in reps.into_iter().flatten() {
            classes.entry(key).or_default().push(mask);
        }
        for v in classes.values_mut() {
            v.sort_unstable_by_key(|&m| lex_key(m, p));
        }
        Ok(SupportIndex { p, classes })
    }

    fn class_size(&self) -> usize {
        self.classes.values().map(Vec::len).sum()
    }

    fn all_translates(&self, reps: &[u64]) -> Vec<u64> {
        let mut out: Vec<u64> = reps.iter().flat_map(|&r| (0..self.p).map(move |t| translate(r, t, self.p))).collect();
        out.sort_unstable_by_key(|&m| lex_key(m, self.p));
        out
    }
}

/// Calls `f` on `base | S` for every `count`-subset `S` of `{from, ..., p-1}`.
fn for_each_subset(from: u32, p: u32, count: u32, base: u64, f: &mut impl FnMut(u64)) {
    if count == 0 {
        f(base);
        return;
    }
    if from + count > p {
        return;
    }
    for x in from..=p - count {
        for_each_subset(x + 1, p, count - 1, base | 1u64 << x, f);
    }
}

pub(crate) fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Search options beyond the reduction policy.
#[derive(Debug, Clone, Copy)]
pub struct SearchOptions {
    pub reduction: ReductionPolicy,
    /// Ceiling on the estimated size of the autocorrelation index, in bytes.
    pub memory_limit: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { reduction: ReductionPolicy::FULL, memory_limit: 4 << 30 }
    }
}

/// Every quadruple satisfying the circulant identities, up to the symmetry
/// reductions of `reduction`, in lexicographic order of `(S_M, S_N, S_P, S_Q)`.
///
/// With `ReductionPolicy::NONE` this is the complete raw solution set. With
/// `FULL` it is the set of normal forms in which `S_M` is the least of its
/// affine images and `S_N`, `S_P` are the least of their translates; every
/// orbit of the full group meets this set. Other policies enumerate the raw
/// set and keep a quadruple iff no single generator maps it to something
/// smaller.
pub fn enumerate_quadruples(p: u32, reduction: ReductionPolicy) -> Result<Vec<CirculantQuadruple>> {
    enumerate_with(p, SearchOptions { reduction, ..SearchOptions::default() })
}

pub fn enumerate_with(p: u32, opts: SearchOptions) -> Result<Vec<CirculantQuadruple>> {
    check_prime(p)?;
    let index = SupportIndex::build(p, opts.memory_limit)?;
    debug_assert!(index.class_size() > 0);
    let full = opts.reduction.is_full();

    let mut keys: Vec<u64> = index.classes.keys().copied().collect();
    keys.sort_unstable();

    let mut found: Vec<CirculantQuadruple> = keys
        .par_iter()
        .flat_map_iter(|&key| {
            let comp = complement_key(key, p);
            let (Some(reps_v), Some(reps_c)) = (index.classes.get(&key), index.classes.get(&comp)) else {
                return Vec::new().into_iter();
            };
            let (sm_list, partner_list) = if full {
                let sm: Vec<u64> = reps_v.iter().copied().filter(|&m| affine_min(m, p) == m).collect();
                (sm, reps_c.clone())
            } else {
                (index.all_translates(reps_v), index.all_translates(reps_c))
            };
            search_class(p, &sm_list, &partner_list, reps_v).into_iter()
        })
        .collect();

    if !full && !opts.reduction.is_none() {
        let gens = opts.reduction.generators();
        found.retain(|q| gens.iter().all(|g| g.parameters(p).all(|t| g.apply(q, t).sort_key() >= q.sort_key())));
    }
    found.par_sort_unstable_by_key(|q| q.sort_key());
    found.dedup();
    Ok(found)
}

/// All `(sm, sn, sp, sq)` with `sm ∈ sm_list`, `sn, sp ∈ partners` and `sq` any
/// translate of a member of `sq_reps`, satisfying `M P^T = N Q^T`.
fn search_class(p: u32, sm_list: &[u64], partners: &[u64], sq_reps: &[u64]) -> Vec<CirculantQuadruple> {
    let mut out = Vec::new();
    if sm_list.is_empty() {
        return out;
    }
    let mut table: HashMap<u128, Vec<(u64, u32)>> = HashMap::with_capacity(sq_reps.len());
    for &sn in partners {
        table.clear();
        for &r in sq_reps {
            let (canon, shift) = min_rotation(cross_vector(sn, r, p), p);
            table.entry(canon).or_default().push((r, shift));
        }
        for &sm in sm_list {
            for &sp in partners {
                let (canon, shift_k) = min_rotation(cross_vector(sm, sp, p), p);
                let Some(hits) = table.get(&canon) else { continue };
                for &(r, shift_x) in hits {
                    let t = (shift_x + p - shift_k) % p;
                    let sq = translate(r, t, p);
                    let quad = CirculantQuadruple {
                        sm: CyclicSupport::from_mask(p, sm),
                        sn: CyclicSupport::from_mask(p, sn),
                        sp: CyclicSupport::from_mask(p, sp),
                        sq: CyclicSupport::from_mask(p, sq),
                    };
                    debug_assert!(check_cross(&quad));
                    out.push(quad);
                }
            }
        }
    }
    out
}

/// Statistics about a search, for progress reporting.
pub fn index_statistics(p: u32) -> Result<(usize, usize)> {
    check_prime(p)?;
    let index = SupportIndex::build(p, SearchOptions::default().memory_limit)?;
    Ok((index.classes.len(), index.class_size()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::cmp::Ordering;

    fn sup(p: u32, e: &[u32]) -> CyclicSupport {
        CyclicSupport::new(p, e).unwrap()
    }

    #[test]
    fn paf_examples() {
        let empty = sup(7, &[]);
        let full = sup(7, &[0, 1, 2, 3, 4, 5, 6]);
        let ds = sup(7, &[1, 2, 4]);
        for j in 0..7 {
            assert_eq!(paf(&empty, j), 0);
            assert_eq!(paf(&full, j), 7);
        }
        for j in 1..7 {
            assert_eq!(paf(&ds, j), 1);
        }
    }

    #[test]
    fn cross_correlation_examples() {
        let s = sup(5, &[0, 1]);
        let t = sup(5, &[0, 2]);
        assert_eq!(cross_correlation(&s, &s, 0), 2);
        // {0,1} ∩ ({0,2} + 1) = {0,1} ∩ {1,3} = {1}
        assert_eq!(cross_correlation(&s, &t, 1), 1);
        let e = sup(5, &[]);
        assert!((0..5).all(|j| cross_correlation(&e, &t, j) == 0));
    }

    #[test]
    fn pair_examples() {
        assert!(check_pair(&sup(5, &[0, 1]), &sup(5, &[0, 2])).unwrap());
        assert!(!check_pair(&sup(5, &[0, 1]), &sup(5, &[0, 1])).unwrap());
        assert!(check_pair(&sup(7, &[1, 2, 4]), &sup(7, &[1, 2, 4])).unwrap());
        assert!(check_pair(&sup(5, &[0]), &sup(5, &[0, 2])).is_err());
    }

    #[test]
    fn cross_examples() {
        let q = CirculantQuadruple::new(sup(5, &[0, 1]), sup(5, &[0, 2]), sup(5, &[0, 1]), sup(5, &[0, 2])).unwrap();
        assert!(!check_cross(&q));
        let sym = CirculantQuadruple::new(sup(5, &[0, 1]), sup(5, &[0, 1]), sup(5, &[0, 2]), sup(5, &[0, 2])).unwrap();
        assert!(check_cross(&sym));
    }

    #[test]
    fn primes_are_checked() {
        assert!(enumerate_quadruples(3, ReductionPolicy::NONE).is_err());
        assert!(enumerate_quadruples(9, ReductionPolicy::NONE).is_err());
        assert!(enumerate_quadruples(37, ReductionPolicy::NONE).is_err());
    }

    #[test]
    fn lex_key_matches_list_order() {
        let p = 7;
        let all: Vec<u64> = (0u64..1 << p).filter(|m| m.count_ones() == 3).collect();
        for &a in &all {
            for &b in &all {
                let sa = CyclicSupport::from_mask(p, a);
                let sb = CyclicSupport::from_mask(p, b);
                assert_eq!(lex_key(a, p).cmp(&lex_key(b, p)), sa.lex_cmp(&sb));
            }
        }
    }

    #[test]
    fn vector_rotation_tracks_translation() {
        let p = 11;
        let s = sup(p, &[0, 1, 3, 7, 9]).mask;
        let t = sup(p, &[2, 3, 4, 8, 10]).mask;
        let base = cross_vector(s, t, p);
        for shift in 0..p {
            assert_eq!(cross_vector(s, translate(t, shift, p), p), rotate_vector(base, shift, p));
        }
    }

    #[test]
    fn raw_and_full_p5() {
        let raw = enumerate_quadruples(5, ReductionPolicy::NONE).unwrap();
        let full = enumerate_quadruples(5, ReductionPolicy::FULL).unwrap();
        assert!(!raw.is_empty());
        assert!(!full.is_empty());
        assert!(full.iter().all(|q| raw.contains(q)));
        for q in &raw {
            q.validate().unwrap();
        }
        assert!(raw.windows(2).all(|w| w[0].lex_cmp(&w[1]) == Ordering::Less));
    }

    #[test]
    fn raw_search_matches_brute_force_p5() {
        let p = 5;
        let subsets: Vec<u64> = (0u64..1 << p).filter(|m| m.count_ones() == 2).collect();
        let mut brute = Vec::new();
        for &a in &subsets {
            for &b in &subsets {
                for &c in &subsets {
                    for &d in &subsets {
                        let q = CirculantQuadruple {
                            sm: CyclicSupport::from_mask(p, a),
                            sn: CyclicSupport::from_mask(p, b),
                            sp: CyclicSupport::from_mask(p, c),
                            sq: CyclicSupport::from_mask(p, d),
                        };
                        if q.validate().is_ok() {
                            brute.push(q);
                        }
                    }
                }
            }
        }
        brute.sort_by(|x, y| x.lex_cmp(y));
        assert_eq!(enumerate_quadruples(p, ReductionPolicy::NONE).unwrap(), brute);
    }

    #[test]
    fn quadruple_line_format() {
        let line = "5: 0 1 | 0 2 | 1 2 | 0 3";
        let q = CirculantQuadruple::parse_line(line, false).unwrap();
        assert_eq!(q.to_string(), line);
        let one = CirculantQuadruple::parse_line("5: 1 2 | 1 3 | 2 3 | 1 4", true).unwrap();
        assert_eq!(one, q);
        assert!(CirculantQuadruple::parse_line("5: 0 1 | 0 2 | 1 2", false).is_err());
        assert!(CirculantQuadruple::parse_line("5: 0 5 | 0 2 | 1 2 | 0 3", false).is_err());
        assert!(CirculantQuadruple::parse_line("5: 1 0 | 0 2 | 1 2 | 0 3", false).is_err());
    }
}
