//! Codes spanned by Hadamard matrices and designs, minimum weights,
//! fixed-weight counts and the near-extremal enumerator templates.

use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::construct::{Design, SignMatrix};
use crate::error::{Error, Result};
use crate::gf::{is_doubly_even, is_self_orthogonal, rref, weight, FieldId, GFMatrix, LinearCode};

/// Largest message space the brute-force scan will walk.
pub const BRUTE_FORCE_LIMIT: f64 = 1e8;

/// Default bound on the number of enumerated codewords in counting mode.
pub const COUNT_LIMIT: f64 = 2e11;

/// Rows of `h` with `+1 -> 1` and `-1 -> q - 1`.
pub fn code_from_sign_matrix(h: &SignMatrix, q: FieldId) -> Result<LinearCode> {
    if q != FieldId::GF3 && q != FieldId::GF5 {
        return Err(Error::UnsupportedField(q.q()));
    }
    let rows: Vec<Vec<u8>> = h.rows().map(|r| r.iter().map(|&x| q.from_int(x as i64)).collect()).collect();
    Ok(LinearCode::new(GFMatrix::from_rows(q, &rows)?))
}

/// Binary code of length `2(v+1)` with generator `[I | R]`, where the first
/// row of `R` is `(0, 1, ..., 1)` and the others are `(1 | J - A)`.
///
/// The result is self-dual and doubly even when `v = 2p + 1` with
/// `p ≡ 1 (mod 4)`; for `p ≡ 3 (mod 4)` the rows of `J - A` meet in an odd
/// number of points and the code is not self-orthogonal.
pub fn code_c2(d: &Design) -> Result<LinearCode> {
    let v = d.points();
    if d.blocks() != v {
        return Err(Error::DimensionMismatch(format!("C2 needs a square incidence matrix, got {} x {v}", d.blocks())));
    }
    let m = v + 1;
    if !(2 * m).is_multiple_of(8) {
        return Err(Error::DimensionMismatch(format!("C2 length {} is not divisible by 8", 2 * m)));
    }
    let mut rows = vec![vec![0u8; 2 * m]; m];
    for (i, row) in rows.iter_mut().enumerate() {
        row[i] = 1;
        if i == 0 {
            row[m + 1..].iter_mut().for_each(|x| *x = 1);
        } else {
            row[m] = 1;
            for (x, &a) in row[m + 1..].iter_mut().zip(d.row(i - 1)) {
                *x = 1 - a;
            }
        }
    }
    Ok(LinearCode::new(GFMatrix::from_rows(FieldId::GF2, &rows)?))
}

/// Binary code spanned by the rows of `(A | 1)`.
pub fn code_c2prime(d: &Design) -> Result<LinearCode> {
    let rows: Vec<Vec<u8>> = d
        .rows()
        .map(|r| {
            let mut x = r.to_vec();
            x.push(1);
            x
        })
        .collect();
    Ok(LinearCode::new(GFMatrix::from_rows(FieldId::GF2, &rows)?))
}

fn message_space(c: &LinearCode) -> f64 {
    (c.field().q() as f64).powi(c.dimension() as i32)
}

/// Number of codewords of each weight `0..=n`, by a scan of all `q^k`
/// messages.
pub fn weight_distribution_bruteforce(c: &LinearCode) -> Result<Vec<u64>> {
    let size = message_space(c);
    if size > BRUTE_FORCE_LIMIT {
        return Err(Error::GuardExceeded { estimate: size, limit: BRUTE_FORCE_LIMIT });
    }
    let f = c.field();
    let q = f.q();
    let n = c.length();
    let rows: Vec<Vec<(usize, u8)>> =
        c.basis().map(|r| r.iter().enumerate().filter(|(_, &x)| x != 0).map(|(j, &x)| (j, x)).collect()).collect();
    let mut dist = vec![0u64; n + 1];
    let mut word = vec![0u8; n];
    let mut wt = 0usize;
    let mut digits = vec![0u8; rows.len()];
    dist[0] = 1;
    loop {
        // odometer step: every digit that moves adds its row once
        let mut i = 0;
        loop {
            if i == digits.len() {
                return Ok(dist);
            }
            for &(j, x) in &rows[i] {
                let before = word[j] != 0;
                word[j] = f.add(word[j], x);
                let after = word[j] != 0;
                wt = wt + after as usize - before as usize;
            }
            digits[i] += 1;
            if digits[i] < q {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
        dist[wt] += 1;
    }
}

/// Minimum nonzero weight and the number of words attaining it.
pub fn min_weight_bruteforce(c: &LinearCode) -> Result<(usize, u64)> {
    if c.dimension() == 0 {
        return Err(Error::ZeroCode);
    }
    let dist = weight_distribution_bruteforce(c)?;
    let d = (1..dist.len()).find(|&w| dist[w] > 0).expect("nonzero code has a nonzero word");
    Ok((d, dist[d]))
}

/// Every nonzero weight is a multiple of the returned value.
pub fn weight_divisor(c: &LinearCode) -> usize {
    match c.field().q() {
        2 if is_doubly_even(c).unwrap_or(false) => 4,
        2 if c.basis().all(|r| weight(r).is_multiple_of(2)) => 2,
        3 if is_self_orthogonal(c) => 3,
        _ => 1,
    }
}

// Bit-sliced vectors: up to three bit planes of W words each. GF(2) uses
// plane 0, GF(3) stores "is 1" and "is 2" in planes 0 and 1, GF(5) stores
// the value in binary.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
struct Sliced<const W: usize>([[u64; W]; 3]);

impl<const W: usize> Sliced<W> {
    const ZERO: Self = Sliced([[0; W]; 3]);

    fn encode(field: FieldId, v: &[u8]) -> Self {
        let mut s = Self::ZERO;
        for (j, &x) in v.iter().enumerate() {
            let (w, b) = (j / 64, 1u64 << (j % 64));
            match field.q() {
                3 => {
                    if x == 1 {
                        s.0[0][w] |= b;
                    } else if x == 2 {
                        s.0[1][w] |= b;
                    }
                }
                _ => {
                    for (p, plane) in s.0.iter_mut().enumerate() {
                        if (x >> p) & 1 == 1 {
                            plane[w] |= b;
                        }
                    }
                }
            }
        }
        s
    }

    #[cfg(test)]
    fn decode(&self, field: FieldId, n: usize) -> Vec<u8> {
        (0..n)
            .map(|j| {
                let bit = |p: usize| ((self.0[p][j / 64] >> (j % 64)) & 1) as u8;
                match field.q() {
                    3 => bit(0) + 2 * bit(1),
                    _ => bit(0) | bit(1) << 1 | bit(2) << 2,
                }
            })
            .collect()
    }

    #[inline(always)]
    fn weight_within(&self, mask: &[u64; W]) -> u32 {
        (0..W).map(|w| ((self.0[0][w] | self.0[1][w] | self.0[2][w]) & mask[w]).count_ones()).sum()
    }

    /// Weight of `self + x` where `neg_x` encodes `-x`.
    #[inline(always)]
    fn weight_of_sum(&self, neg_x: &Self) -> u32 {
        let mut total = 0;
        for w in 0..W {
            let d = (self.0[0][w] ^ neg_x.0[0][w]) | (self.0[1][w] ^ neg_x.0[1][w]) | (self.0[2][w] ^ neg_x.0[2][w]);
            total += d.count_ones();
        }
        total
    }
}

trait SlicedField: Send + Sync {
    fn add<const W: usize>(a: &Sliced<W>, b: &Sliced<W>) -> Sliced<W>;
}

struct Gf2;
struct Gf3;
struct Gf5;

impl SlicedField for Gf2 {
    #[inline(always)]
    fn add<const W: usize>(a: &Sliced<W>, b: &Sliced<W>) -> Sliced<W> {
        let mut r = Sliced::ZERO;
        for w in 0..W {
            r.0[0][w] = a.0[0][w] ^ b.0[0][w];
        }
        r
    }
}

impl SlicedField for Gf3 {
    #[inline(always)]
    fn add<const W: usize>(a: &Sliced<W>, b: &Sliced<W>) -> Sliced<W> {
        let mut r = Sliced::ZERO;
        for w in 0..W {
            let (a1, a2, b1, b2) = (a.0[0][w], a.0[1][w], b.0[0][w], b.0[1][w]);
            let a0 = !(a1 | a2);
            let b0 = !(b1 | b2);
            r.0[0][w] = (a1 & b0) | (a0 & b1) | (a2 & b2);
            r.0[1][w] = (a2 & b0) | (a0 & b2) | (a1 & b1);
        }
        r
    }
}

impl SlicedField for Gf5 {
    #[inline(always)]
    fn add<const W: usize>(a: &Sliced<W>, b: &Sliced<W>) -> Sliced<W> {
        let mut r = Sliced::ZERO;
        for w in 0..W {
            let (x0, x1, x2) = (a.0[0][w], a.0[1][w], a.0[2][w]);
            let (y0, y1, y2) = (b.0[0][w], b.0[1][w], b.0[2][w]);
            // four-bit sum
            let s0 = x0 ^ y0;
            let c0 = x0 & y0;
            let s1 = x1 ^ y1 ^ c0;
            let c1 = (x1 & y1) | (c0 & (x1 ^ y1));
            let s2 = x2 ^ y2 ^ c1;
            let s3 = (x2 & y2) | (c1 & (x2 ^ y2));
            // subtract 5 where the sum is at least 5 by adding 0b1011
            let m = s3 | (s2 & (s1 | s0));
            let r0 = s0 ^ m;
            let k0 = s0 & m;
            let r1 = s1 ^ m ^ k0;
            let k1 = (s1 & m) | (k0 & (s1 ^ m));
            let r2 = s2 ^ k1;
            r.0[0][w] = r0;
            r.0[1][w] = r1;
            r.0[2][w] = r2;
        }
        r
    }
}

/// One systematic generator matrix of the chain: `mul[c-1][i]` encodes
/// `c * row_i`, `neg[c-1][i]` encodes `-c * row_i`.
struct InfoSet<const W: usize> {
    fresh: usize,
    mask: [u64; W],
    mul: Vec<Vec<Sliced<W>>>,
    neg: Vec<Vec<Sliced<W>>>,
}

/// Greedy chain of information sets: each new set prefers columns not yet
/// covered by earlier sets. `fresh` counts the pivots in such columns.
fn information_sets(c: &LinearCode) -> Vec<(usize, Vec<usize>, Vec<Vec<u8>>)> {
    let f = c.field();
    let n = c.length();
    let basis = c.basis_matrix().expect("nonzero code");
    let mut used = vec![false; n];
    let mut sets = Vec::new();
    loop {
        let order: Vec<usize> = (0..n).filter(|&j| !used[j]).chain((0..n).filter(|&j| used[j])).collect();
        let unused = order.iter().filter(|&&j| !used[j]).count();
        if unused == 0 {
            break;
        }
        let permuted: Vec<Vec<u8>> =
            (0..basis.rows()).map(|r| order.iter().map(|&j| basis.get(r, j)).collect()).collect();
        let (red, rank, piv) = rref(&GFMatrix::from_rows(f, &permuted).expect("shape"));
        let fresh = piv.iter().filter(|&&p| p < unused).count();
        if fresh == 0 {
            break;
        }
        let mut rows = vec![vec![0u8; n]; rank];
        for (r, row) in rows.iter_mut().enumerate() {
            for (pj, &j) in order.iter().enumerate() {
                row[j] = red.get(r, pj);
            }
        }
        let pivots: Vec<usize> = piv.iter().map(|&p| order[p]).collect();
        for &p in &pivots {
            used[p] = true;
        }
        sets.push((fresh, pivots, rows));
    }
    sets
}

fn build_sets<const W: usize>(c: &LinearCode) -> Vec<InfoSet<W>> {
    let f = c.field();
    let q = f.q();
    information_sets(c)
        .into_iter()
        .map(|(fresh, pivots, rows)| {
            let mut mask = [0u64; W];
            for &p in &pivots {
                mask[p / 64] |= 1 << (p % 64);
            }
            let scaled = |c: u8| -> Vec<Sliced<W>> {
                rows.iter().map(|r| Sliced::encode(f, &r.iter().map(|&x| f.mul(c, x)).collect::<Vec<_>>())).collect()
            };
            InfoSet { fresh, mask, mul: (1..q).map(scaled).collect(), neg: (1..q).map(|c| scaled(f.neg(c))).collect() }
        })
        .collect()
}

/// Lower bound on the weight of any word not yet enumerated after all sets
/// have been done for information weight `r` and sets `0..=j` for `r + 1`.
fn lower_bound(k: usize, fresh: &[usize], r: usize, j: Option<usize>) -> usize {
    fresh
        .iter()
        .enumerate()
        .map(|(i, &ki)| {
            let done = if j.is_some_and(|j| i <= j) { r + 1 } else { r };
            (done + 1).saturating_sub(k - ki)
        })
        .sum()
}

fn round_up(x: usize, delta: usize) -> usize {
    x.div_ceil(delta) * delta
}

/// Depth-first walk over information-weight-`r` messages with leading
/// coefficient 1. `leaf` receives the parent sum, the last row index and the
/// last coefficient index, together with the resulting weight.
#[allow(clippy::too_many_arguments)]
fn walk<F: SlicedField, const W: usize, L: FnMut(u32, &Sliced<W>, usize, usize)>(
    set: &InfoSet<W>,
    remaining: usize,
    start: usize,
    acc: &Sliced<W>,
    leading: bool,
    leaf: &mut L,
) {
    let k = set.mul[0].len();
    let coeffs = if leading { 1 } else { set.mul.len() };
    if remaining == 1 {
        for i in start..k {
            for c in 0..coeffs {
                leaf(acc.weight_of_sum(&set.neg[c][i]), acc, i, c);
            }
        }
        return;
    }
    for i in start..=k - remaining {
        for c in 0..coeffs {
            let next = F::add(acc, &set.mul[c][i]);
            walk::<F, W, L>(set, remaining - 1, i + 1, &next, false, leaf);
        }
    }
}

/// Number of leaves `walk` visits for weight `r` in dimension `k`.
fn leaves(k: usize, r: usize, q: u8) -> f64 {
    let mut b = 1f64;
    for i in 0..r {
        b = b * (k - i) as f64 / (i + 1) as f64;
    }
    b * ((q - 1) as f64).powi(r as i32 - 1)
}

fn min_weight_sets<F: SlicedField, const W: usize>(c: &LinearCode) -> usize {
    let sets = build_sets::<W>(c);
    let k = c.dimension();
    let fresh: Vec<usize> = sets.iter().map(|s| s.fresh).collect();
    let delta = weight_divisor(c);
    let mut best = c.length();
    for r in 1..=k {
        for (j, set) in sets.iter().enumerate() {
            let found = (0..=k - r)
                .into_par_iter()
                .map(|i0| {
                    let mut local = u32::MAX;
                    let mut leaf = |w: u32, _: &Sliced<W>, _: usize, _: usize| local = local.min(w);
                    if r == 1 {
                        leaf(set.mul[0][i0].weight_within(&[u64::MAX; W]), &Sliced::ZERO, i0, 0);
                    } else {
                        walk::<F, W, _>(set, r - 1, i0 + 1, &set.mul[0][i0], false, &mut leaf);
                    }
                    local
                })
                .min()
                .unwrap_or(u32::MAX);
            best = best.min(found as usize);
            if round_up(lower_bound(k, &fresh, r - 1, Some(j)), delta) >= best {
                return best;
            }
        }
    }
    best
}

/// Exact minimum weight by Brouwer–Zimmermann enumeration over a chain of
/// information sets.
pub fn min_weight_bz(c: &LinearCode) -> Result<usize> {
    if c.dimension() == 0 {
        return Err(Error::ZeroCode);
    }
    dispatch(c, MinWeight)
}

trait Job {
    type Out;
    fn run<F: SlicedField, const W: usize>(&self, c: &LinearCode) -> Self::Out;
}

struct MinWeight;

impl Job for MinWeight {
    type Out = usize;
    fn run<F: SlicedField, const W: usize>(&self, c: &LinearCode) -> usize {
        min_weight_sets::<F, W>(c)
    }
}

struct Count(usize);

impl Job for Count {
    type Out = u64;
    fn run<F: SlicedField, const W: usize>(&self, c: &LinearCode) -> u64 {
        count_sets::<F, W>(c, self.0)
    }
}

fn dispatch<J: Job>(c: &LinearCode, job: J) -> Result<J::Out> {
    fn by_width<F: SlicedField, J: Job>(c: &LinearCode, job: &J) -> Result<J::Out> {
        match c.length().div_ceil(64) {
            0 | 1 => Ok(job.run::<F, 1>(c)),
            2 => Ok(job.run::<F, 2>(c)),
            3 | 4 => Ok(job.run::<F, 4>(c)),
            _ => Err(Error::Resource(format!("code length {} exceeds 256", c.length()))),
        }
    }
    match c.field().q() {
        2 => by_width::<Gf2, J>(c, &job),
        3 => by_width::<Gf3, J>(c, &job),
        5 => by_width::<Gf5, J>(c, &job),
        q => Err(Error::UnsupportedField(q)),
    }
}

/// Steps `(r, j)` of the enumeration needed before every word of weight at
/// most `w` has been seen, with the estimated number of leaves.
fn counting_plan(k: usize, fresh: &[usize], q: u8, w: usize) -> (Vec<(usize, usize)>, f64) {
    let mut steps = Vec::new();
    let mut cost = 0.0;
    for r in 1..=k {
        for j in 0..fresh.len() {
            steps.push((r, j));
            cost += leaves(k, r, q);
            if lower_bound(k, fresh, r - 1, Some(j)) > w {
                return (steps, cost);
            }
        }
    }
    (steps, cost)
}

/// Estimated enumeration size of `count_words_of_weight(c, w)`.
pub fn count_estimate(c: &LinearCode, w: usize) -> f64 {
    if c.dimension() == 0 || w == 0 || w > c.length() {
        return 0.0;
    }
    let fresh: Vec<usize> = information_sets(c).iter().map(|s| s.0).collect();
    counting_plan(c.dimension(), &fresh, c.field().q(), w).1
}

fn count_sets<F: SlicedField, const W: usize>(c: &LinearCode, w: usize) -> u64 {
    let sets = build_sets::<W>(c);
    let k = c.dimension();
    let q = c.field().q();
    let fresh: Vec<usize> = sets.iter().map(|s| s.fresh).collect();
    let (steps, _) = counting_plan(k, &fresh, q, w);
    let masks: Vec<[u64; W]> = sets.iter().map(|s| s.mask).collect();
    let target = w as u32;
    let mut total = 0u64;
    for &(r, j) in &steps {
        let set = &sets[j];
        // a word is counted at the first step (r', j') that produces it
        let first_here = |word: &Sliced<W>| {
            masks.iter().enumerate().all(|(i, m)| {
                let ri = word.weight_within(m) as usize;
                i == j || (ri, i) > (r, j)
            })
        };
        total += (0..=k - r)
            .into_par_iter()
            .map(|i0| {
                let mut local = 0u64;
                let mut leaf = |wt: u32, acc: &Sliced<W>, i: usize, cc: usize| {
                    if wt == target {
                        let word = F::add(acc, &set.mul[cc][i]);
                        if first_here(&word) {
                            local += 1;
                        }
                    }
                };
                if r == 1 {
                    let word = set.mul[0][i0];
                    if word.weight_within(&[u64::MAX; W]) == target && first_here(&word) {
                        local += 1;
                    }
                } else {
                    walk::<F, W, _>(set, r - 1, i0 + 1, &set.mul[0][i0], false, &mut leaf);
                }
                local
            })
            .sum::<u64>();
    }
    total * (q as u64 - 1)
}

/// Number of codewords of weight exactly `w`, refusing enumerations larger
/// than [`COUNT_LIMIT`].
pub fn count_words_of_weight(c: &LinearCode, w: usize) -> Result<u64> {
    count_words_of_weight_with_limit(c, w, COUNT_LIMIT)
}

pub fn count_words_of_weight_with_limit(c: &LinearCode, w: usize, limit: f64) -> Result<u64> {
    if w == 0 {
        return Ok(1);
    }
    if c.dimension() == 0 || w > c.length() {
        return Ok(0);
    }
    let estimate = count_estimate(c, w);
    if estimate > limit {
        return Err(Error::GuardExceeded { estimate, limit });
    }
    dispatch(c, Count(w))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TemplateFamily {
    Ternary60,
    Binary120,
}

impl std::str::FromStr for TemplateFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ternary-60" => Ok(TemplateFamily::Ternary60),
            "binary-120" => Ok(TemplateFamily::Binary120),
            other => Err(Error::UnknownFamily(other.to_string())),
        }
    }
}

/// `(exponent, constant, slope)`: the coefficient of `y^exponent` is
/// `constant + slope * α`.
const TERNARY_60: [(usize, i64, i64); 3] = [(15, 0, 1), (18, 3_901_080, -15), (21, 241_456_320, 105)];

const BINARY_120: [(usize, i64, i64); 6] = [
    (20, 0, 1),
    (24, 39_703_755, -20),
    (28, 6_101_289_120, 190),
    (32, 475_644_139_425, -1140),
    (36, 18_824_510_698_240, 4845),
    (40, 397_450_513_031_544, -15504),
];

/// Displayed leading coefficients of the near-extremal weight enumerator
/// with parameter `alpha`, as `(exponent, coefficient)` pairs.
pub fn enumerator_template(family: TemplateFamily, alpha: &BigInt) -> Vec<(usize, BigInt)> {
    let terms: &[(usize, i64, i64)] = match family {
        TemplateFamily::Ternary60 => &TERNARY_60,
        TemplateFamily::Binary120 => &BINARY_120,
    };
    terms.iter().map(|&(e, c, s)| (e, BigInt::from(c) + BigInt::from(s) * alpha)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExtremalityClass {
    Extremal,
    NearExtremal,
    Neither,
}

impl fmt::Display for ExtremalityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExtremalityClass::Extremal => "extremal",
            ExtremalityClass::NearExtremal => "near-extremal",
            ExtremalityClass::Neither => "neither",
        })
    }
}

/// Compares `d` with `4⌊n/24⌋ + 4` for doubly even binary codes and with
/// `3⌊n/12⌋ + 3` for ternary codes; one step below the bound is
/// near-extremal.
pub fn classify_extremality(q: FieldId, n: usize, d: usize, doubly_even: bool) -> Result<ExtremalityClass> {
    let (bound, step) = match (q.q(), doubly_even) {
        (2, true) => (4 * (n / 24) + 4, 4),
        (3, _) => (3 * (n / 12) + 3, 3),
        (q, de) => return Err(Error::UnsupportedExtremality { q, doubly_even: de }),
    };
    Ok(if d == bound {
        ExtremalityClass::Extremal
    } else if d + step == bound {
        ExtremalityClass::NearExtremal
    } else {
        ExtremalityClass::Neither
    })
}

/// One line of the code report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeReport {
    pub source: String,
    pub field: FieldId,
    pub length: usize,
    pub dimension: usize,
    pub min_weight: usize,
    pub extremality: Option<ExtremalityClass>,
    pub counts: Vec<(usize, u64)>,
}

impl fmt::Display for CodeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}\t{}\t{}\t{}\t{}\t{}",
            self.source,
            self.field,
            self.length,
            self.dimension,
            self.min_weight,
            self.extremality.map_or_else(|| "-".to_string(), |e| e.to_string())
        )?;
        for (w, n) in &self.counts {
            write!(f, "\t{w}:{n}")?;
        }
        Ok(())
    }
}

/// Minimum weight, extremality where defined, and the number of
/// minimum-weight words when the counting guard admits it.
pub fn report(source: &str, c: &LinearCode, count_limit: f64) -> Result<CodeReport> {
    let d = min_weight_bz(c)?;
    let doubly_even = c.field() == FieldId::GF2 && is_doubly_even(c)?;
    let self_dual = crate::gf::is_self_dual(c);
    let extremality = if self_dual { classify_extremality(c.field(), c.length(), d, doubly_even).ok() } else { None };
    let counts = match count_words_of_weight_with_limit(c, d, count_limit) {
        Ok(n) => vec![(d, n)],
        Err(Error::GuardExceeded { .. }) => Vec::new(),
        Err(e) => return Err(e),
    };
    Ok(CodeReport {
        source: source.to_string(),
        field: c.field(),
        length: c.length(),
        dimension: c.dimension(),
        min_weight: d,
        extremality,
        counts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{incidence_matrix, paley_type_ii};
    use crate::gf::is_self_dual;
    use crate::search::{enumerate_quadruples, ReductionPolicy};

    fn code(q: u8, rows: &[&[u8]]) -> LinearCode {
        let rows: Vec<Vec<u8>> = rows.iter().map(|r| r.to_vec()).collect();
        LinearCode::new(GFMatrix::from_rows(FieldId::new(q).unwrap(), &rows).unwrap())
    }

    #[test]
    fn repetition_code() {
        let c = code(2, &[&[1, 1]]);
        assert_eq!(min_weight_bruteforce(&c).unwrap(), (2, 1));
        assert_eq!(min_weight_bz(&c).unwrap(), 2);
        assert_eq!(count_words_of_weight(&c, 2).unwrap(), 1);
        assert_eq!(count_words_of_weight(&c, 0).unwrap(), 1);
    }

    #[test]
    fn zero_code_is_an_error() {
        let c = code(3, &[&[0, 0, 0]]);
        assert_eq!(min_weight_bruteforce(&c), Err(Error::ZeroCode));
        assert_eq!(min_weight_bz(&c), Err(Error::ZeroCode));
    }

    #[test]
    fn sliced_adders_match_field() {
        for q in [2u8, 3, 5] {
            let f = FieldId::new(q).unwrap();
            let a: Vec<u8> = (0..70).map(|i| (i * 7 % 11) as u8 % q).collect();
            let b: Vec<u8> = (0..70).map(|i| (i * 3 % 13) as u8 % q).collect();
            let sum: Vec<u8> = a.iter().zip(&b).map(|(&x, &y)| f.add(x, y)).collect();
            let (sa, sb) = (Sliced::<2>::encode(f, &a), Sliced::<2>::encode(f, &b));
            let got = match q {
                2 => Gf2::add(&sa, &sb),
                3 => Gf3::add(&sa, &sb),
                _ => Gf5::add(&sa, &sb),
            };
            assert_eq!(got.decode(f, 70), sum, "q = {q}");
            let neg_b: Vec<u8> = b.iter().map(|&x| f.neg(x)).collect();
            assert_eq!(sa.weight_of_sum(&Sliced::encode(f, &neg_b)) as usize, weight(&sum));
        }
    }

    #[test]
    fn ternary_golay_from_order_12() {
        let c = code_from_sign_matrix(&paley_type_ii(5).unwrap(), FieldId::GF3).unwrap();
        assert_eq!((c.length(), c.dimension()), (12, 6));
        assert!(is_self_dual(&c));
        assert_eq!(min_weight_bruteforce(&c).unwrap(), (6, 264));
        assert_eq!(min_weight_bz(&c).unwrap(), 6);
        assert_eq!(count_words_of_weight(&c, 6).unwrap(), 264);
        let dist = weight_distribution_bruteforce(&c).unwrap();
        assert_eq!(dist.iter().sum::<u64>(), 729);
        assert_eq!((dist[9], dist[12]), (440, 24));
    }

    #[test]
    fn c2_self_duality_depends_on_p_mod_4() {
        for p in [5u32, 7, 13] {
            for q in enumerate_quadruples(p, ReductionPolicy::FULL).unwrap() {
                let c = code_c2(&incidence_matrix(&q).unwrap()).unwrap();
                assert_eq!((c.length(), c.dimension()), (4 * p as usize + 4, 2 * p as usize + 2));
                let good = p % 4 == 1;
                assert_eq!(is_self_dual(&c), good, "p = {p}");
                assert_eq!(is_doubly_even(&c).unwrap(), good, "p = {p}");
            }
        }
    }

    #[test]
    fn c2prime_shape() {
        let q = enumerate_quadruples(7, ReductionPolicy::FULL).unwrap()[0];
        let c = code_c2prime(&incidence_matrix(&q).unwrap()).unwrap();
        assert_eq!(c.length(), 16);
        let (d, _) = min_weight_bruteforce(&c).unwrap();
        assert_eq!(min_weight_bz(&c).unwrap(), d);
    }

    #[test]
    fn templates() {
        let t = enumerator_template(TemplateFamily::Ternary60, &BigInt::from(0));
        assert_eq!(t[1], (18, BigInt::from(3_901_080)));
        let a = BigInt::from(8 * 2552);
        let t = enumerator_template(TemplateFamily::Ternary60, &a);
        assert_eq!(t[0].1, a);
        assert_eq!(t[1].1, BigInt::from(3_901_080 - 15 * 8 * 2552));
        let b = enumerator_template(TemplateFamily::Binary120, &BigInt::from(98484));
        assert_eq!(b[1], (24, BigInt::from(39_703_755i64 - 20 * 98484)));
        assert!("octal-7".parse::<TemplateFamily>().is_err());
    }

    #[test]
    fn extremality_labels() {
        use ExtremalityClass::*;
        assert_eq!(classify_extremality(FieldId::GF3, 60, 18, false).unwrap(), Extremal);
        assert_eq!(classify_extremality(FieldId::GF3, 60, 15, false).unwrap(), NearExtremal);
        assert_eq!(classify_extremality(FieldId::GF3, 60, 12, false).unwrap(), Neither);
        assert_eq!(classify_extremality(FieldId::GF2, 120, 20, true).unwrap(), NearExtremal);
        assert_eq!(classify_extremality(FieldId::GF2, 120, 24, true).unwrap(), Extremal);
        assert!(classify_extremality(FieldId::GF2, 120, 20, false).is_err());
        assert!(classify_extremality(FieldId::GF5, 60, 18, false).is_err());
    }

    #[test]
    fn report_line() {
        let c = code_from_sign_matrix(&paley_type_ii(5).unwrap(), FieldId::GF3).unwrap();
        let r = report("golay", &c, COUNT_LIMIT).unwrap();
        assert_eq!(r.to_string(), "golay\tGF(3)\t12\t6\t6\textremal\t6:264");
    }
}
