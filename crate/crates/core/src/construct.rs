//! Incidence matrices, Hadamard matrices and the identities they satisfy.

use std::fmt;

use crate::error::{Error, Result};
use crate::search::{CirculantQuadruple, CyclicSupport};

/// Declared `t-(v, k, λ)` parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DesignParams {
    pub t: usize,
    pub v: usize,
    pub k: usize,
    pub lambda: usize,
}

impl fmt::Display for DesignParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-({}, {}, {})", self.t, self.v, self.k, self.lambda)
    }
}

/// A block-by-point 0/1 incidence matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Design {
    v: usize,
    b: usize,
    incidence: Vec<u8>,
    params: Option<DesignParams>,
}

impl Design {
    /// `rows` are blocks, columns are points.
    pub fn from_rows(rows: &[Vec<u8>]) -> Result<Self> {
        let b = rows.len();
        let v = rows.first().map_or(0, Vec::len);
        if b == 0 || v == 0 {
            return Err(Error::EmptyMatrix { rows: b, cols: v });
        }
        if rows.iter().any(|r| r.len() != v) {
            return Err(Error::DimensionMismatch("ragged incidence rows".into()));
        }
        if let Some((i, j)) = rows.iter().enumerate().find_map(|(i, r)| r.iter().position(|&x| x > 1).map(|j| (i, j))) {
            return Err(Error::InvalidResidue { row: i, col: j, value: rows[i][j], q: 2 });
        }
        Ok(Design { v, b, incidence: rows.concat(), params: None })
    }

    /// Builds a design from a list of blocks given as point sets.
    pub fn from_blocks(v: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        let mut rows = vec![vec![0u8; v]; blocks.len()];
        for (row, block) in rows.iter_mut().zip(blocks) {
            for &x in block {
                if x >= v {
                    return Err(Error::IndexOutOfRange { index: x, bound: v });
                }
                row[x] = 1;
            }
        }
        Design::from_rows(&rows)
    }

    pub fn with_params(mut self, params: DesignParams) -> Self {
        self.params = Some(params);
        self
    }

    pub fn params(&self) -> Option<DesignParams> {
        self.params
    }

    pub fn points(&self) -> usize {
        self.v
    }

    pub fn blocks(&self) -> usize {
        self.b
    }

    #[inline]
    pub fn get(&self, block: usize, point: usize) -> u8 {
        self.incidence[block * self.v + point]
    }

    pub fn row(&self, block: usize) -> &[u8] {
        &self.incidence[block * self.v..(block + 1) * self.v]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u8]> {
        self.incidence.chunks(self.v)
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.rows().map(|r| r.iter().filter(|&&x| x == 1).count()).collect()
    }

    /// Relabels points and blocks: block `i` of the result is block
    /// `block_perm[i]` of `self`, point `j` is point `point_perm[j]`.
    pub fn relabel(&self, block_perm: &[usize], point_perm: &[usize]) -> Design {
        let rows: Vec<Vec<u8>> =
            block_perm.iter().map(|&bi| point_perm.iter().map(|&pj| self.get(bi, pj)).collect()).collect();
        Design { v: self.v, b: self.b, incidence: rows.concat(), params: self.params }
    }

    /// Integer product `A A^T`.
    pub fn gram(&self) -> Vec<Vec<u32>> {
        let rows: Vec<&[u8]> = self.rows().collect();
        rows.iter()
            .map(|a| rows.iter().map(|b| a.iter().zip(*b).map(|(&x, &y)| (x & y) as u32).sum()).collect())
            .collect()
    }
}

/// A square matrix with entries `±1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignMatrix {
    n: usize,
    entries: Vec<i8>,
}

impl SignMatrix {
    pub fn from_rows(rows: &[Vec<i8>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::EmptyMatrix { rows: 0, cols: 0 });
        }
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch("sign matrix must be square".into()));
        }
        if let Some((i, j)) =
            rows.iter().enumerate().find_map(|(i, r)| r.iter().position(|&x| x != 1 && x != -1).map(|j| (i, j)))
        {
            return Err(Error::NotHadamard(format!("entry ({i}, {j}) is not ±1")));
        }
        Ok(SignMatrix { n, entries: rows.concat() })
    }

    /// `(-1)^{b_ij}` for a 0/1 matrix `b`.
    pub fn from_exponents(b: &[Vec<u8>]) -> Result<Self> {
        let rows: Vec<Vec<i8>> =
            b.iter().map(|r| r.iter().map(|&x| if x & 1 == 0 { 1 } else { -1 }).collect()).collect();
        SignMatrix::from_rows(&rows)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[i8] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[i8]> {
        self.entries.chunks(self.n)
    }

    pub fn transpose(&self) -> SignMatrix {
        let n = self.n;
        let entries = (0..n * n).map(|x| self.get(x % n, x / n)).collect();
        SignMatrix { n, entries }
    }

    pub fn negate(&self) -> SignMatrix {
        SignMatrix { n: self.n, entries: self.entries.iter().map(|&x| -x).collect() }
    }

    /// `P H Q`: entry `(i, j)` is `rows.sign[i] * cols.sign[j] * H[rows.perm[i]][cols.perm[j]]`.
    pub fn transform(&self, rows: &Monomial, cols: &Monomial) -> SignMatrix {
        let n = self.n;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(rows.signs[i] * cols.signs[j] * self.get(rows.perm[i], cols.perm[j]));
            }
        }
        SignMatrix { n, entries }
    }

    /// Negates columns, then rows, so that row 0 and column 0 are all `+1`.
    pub fn normalized(&self) -> SignMatrix {
        let n = self.n;
        let col_sign: Vec<i8> = (0..n).map(|j| self.get(0, j)).collect();
        let row_sign: Vec<i8> = (0..n).map(|i| self.get(i, 0) * col_sign[0]).collect();
        let entries = (0..n * n)
            .map(|x| {
                let (i, j) = (x / n, x % n);
                self.get(i, j) * col_sign[j] * row_sign[i]
            })
            .collect();
        SignMatrix { n, entries }
    }
}

/// A signed permutation, `(perm, signs)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub perm: Vec<usize>,
    pub signs: Vec<i8>,
}

impl Monomial {
    pub fn identity(n: usize) -> Self {
        Monomial { perm: (0..n).collect(), signs: vec![1; n] }
    }
}

/// `p x p` circulant whose row `i` is the first row shifted right by `i`.
pub fn circulant_matrix(s: &CyclicSupport) -> Vec<Vec<u8>> {
    let p = s.p();
    (0..p).map(|i| (0..p).map(|x| s.contains((x + p - i) % p) as u8).collect()).collect()
}

/// The `(2p+1) x (2p+1)` incidence matrix
/// `[M | N | 1], [P | J-Q | 0], [1...1 | 0...0 | 0]`.
pub fn incidence_matrix(q: &CirculantQuadruple) -> Result<Design> {
    q.validate()?;
    Ok(incidence_unchecked(q))
}

pub(crate) fn incidence_unchecked(q: &CirculantQuadruple) -> Design {
    let p = q.p() as usize;
    let v = 2 * p + 1;
    let m = circulant_matrix(&q.sm);
    let n = circulant_matrix(&q.sn);
    let pp = circulant_matrix(&q.sp);
    let qq = circulant_matrix(&q.sq);
    let mut rows = Vec::with_capacity(v);
    for i in 0..p {
        let mut r = m[i].clone();
        r.extend_from_slice(&n[i]);
        r.push(1);
        rows.push(r);
    }
    for i in 0..p {
        let mut r = pp[i].clone();
        r.extend(qq[i].iter().map(|&x| 1 - x));
        r.push(0);
        rows.push(r);
    }
    let mut last = vec![1u8; p];
    last.extend(std::iter::repeat_n(0, p + 1));
    rows.push(last);
    Design { v, b: v, incidence: rows.concat(), params: None }.with_params(DesignParams {
        t: 2,
        v,
        k: p,
        lambda: (p - 1) / 2,
    })
}

/// The Hadamard matrix `((-1)^{b_ij})` of order `2p+2` bordering the incidence matrix.
pub fn hadamard_from_quadruple(q: &CirculantQuadruple) -> Result<SignMatrix> {
    q.validate()?;
    let h = hadamard_from_incidence(&incidence_unchecked(q))?;
    debug_assert!(verify_hadamard(&h));
    Ok(h)
}

/// Borders a symmetric design's incidence matrix with a row and column of
/// ones in the exponent.
pub fn hadamard_from_incidence(d: &Design) -> Result<SignMatrix> {
    if d.v != d.b {
        return Err(Error::DimensionMismatch("incidence matrix must be square".into()));
    }
    let n = d.v + 1;
    let mut b = Vec::with_capacity(n);
    b.push(vec![1u8; n]);
    for row in d.rows() {
        let mut r = Vec::with_capacity(n);
        r.push(1);
        r.extend_from_slice(row);
        b.push(r);
    }
    SignMatrix::from_exponents(&b)
}

/// `H H^T = n I` over the integers.
pub fn verify_hadamard(h: &SignMatrix) -> bool {
    let n = h.n;
    let rows: Vec<&[i8]> = h.rows().collect();
    (0..n).all(|i| {
        (i..n).all(|j| {
            let s: i32 = rows[i].iter().zip(rows[j]).map(|(&a, &b)| (a * b) as i32).sum();
            s == if i == j { n as i32 } else { 0 }
        })
    })
}

/// Returns the constant block size `k` and the constant number `λ` of blocks
/// through every `t`-subset of points.
pub fn verify_t_design(d: &Design, t: usize) -> Result<(usize, usize)> {
    if t > d.v {
        return Err(Error::DesignViolation(format!("t = {t} exceeds v = {}", d.v)));
    }
    let sizes = d.block_sizes();
    let k = sizes[0];
    if let Some(i) = sizes.iter().position(|&s| s != k) {
        return Err(Error::DesignViolation(format!("block {i} has size {} but block 0 has size {k}", sizes[i])));
    }
    let words = d.b.div_ceil(64);
    // blocks through each point
    let mut through = vec![vec![0u64; words]; d.v];
    for (bi, row) in d.rows().enumerate() {
        for (x, &e) in row.iter().enumerate() {
            if e == 1 {
                through[x][bi / 64] |= 1 << (bi % 64);
            }
        }
    }
    let mut lambda: Option<usize> = None;
    let mut subset = Vec::with_capacity(t);
    let all = vec![u64::MAX; words];
    let mut first_bad = None;
    check_subsets(&through, t, 0, &all, d.b, &mut subset, &mut lambda, &mut first_bad);
    if let Some((set, count, expected)) = first_bad {
        return Err(Error::DesignViolation(format!("points {set:?} lie in {count} blocks, expected {expected}")));
    }
    Ok((k, lambda.unwrap_or(d.b)))
}

#[allow(clippy::too_many_arguments)]
fn check_subsets(
    through: &[Vec<u64>],
    remaining: usize,
    from: usize,
    acc: &[u64],
    b: usize,
    subset: &mut Vec<usize>,
    lambda: &mut Option<usize>,
    bad: &mut Option<(Vec<usize>, usize, usize)>,
) {
    if bad.is_some() {
        return;
    }
    if remaining == 0 {
        let count = acc
            .iter()
            .enumerate()
            .map(|(w, x)| {
                let valid = if (w + 1) * 64 <= b { u64::MAX } else { (1u64 << (b % 64)) - 1 };
                (x & valid).count_ones() as usize
            })
            .sum();
        match *lambda {
            None => *lambda = Some(count),
            Some(l) if l != count => *bad = Some((subset.clone(), count, l)),
            _ => {}
        }
        return;
    }
    for x in from..=through.len().saturating_sub(remaining) {
        let next: Vec<u64> = acc.iter().zip(&through[x]).map(|(a, b)| a & b).collect();
        subset.push(x);
        check_subsets(through, remaining - 1, x + 1, &next, b, subset, lambda, bad);
        subset.pop();
    }
}

/// Incidence matrix `J - A`.
pub fn complement_design(d: &Design) -> Design {
    let params = d.params.map(|pr| {
        // complement of a symmetric 2-design: λ' = b - 2r + λ with r = k
        DesignParams { t: pr.t, v: pr.v, k: pr.v - pr.k, lambda: d.b + pr.lambda - 2 * pr.k }
    });
    Design {
        v: d.v,
        b: d.b,
        incidence: d.incidence.iter().map(|&x| 1 - x).collect(),
        params: params.filter(|pr| pr.t == 2 && d.v == d.b),
    }
}

/// Incidence matrix `A^T`.
pub fn dual_design(d: &Design) -> Design {
    let mut inc = vec![0u8; d.v * d.b];
    for i in 0..d.b {
        for j in 0..d.v {
            inc[j * d.b + i] = d.get(i, j);
        }
    }
    Design { v: d.b, b: d.v, incidence: inc, params: d.params.filter(|pr| pr.t == 2 && d.v == d.b) }
}

/// Blocks through `point`, restricted to the remaining points.
pub fn derived_design(d: &Design, point: usize) -> Result<Design> {
    if point >= d.v {
        return Err(Error::IndexOutOfRange { index: point, bound: d.v });
    }
    let rows: Vec<Vec<u8>> = d
        .rows()
        .filter(|r| r[point] == 1)
        .map(|r| r.iter().enumerate().filter(|&(j, _)| j != point).map(|(_, &x)| x).collect())
        .collect();
    let mut out = Design::from_rows(&rows)?;
    out.params = d.params.filter(|pr| pr.t >= 1 && pr.k >= 1).map(|pr| DesignParams {
        t: pr.t - 1,
        v: pr.v - 1,
        k: pr.k - 1,
        lambda: pr.lambda,
    });
    Ok(out)
}

/// The Hadamard 3-`(n, n/2, n/4 - 1)` design of `h`. After normalizing row 0
/// and column 0 to `+1`, each row `i ≥ 1` contributes the block of columns
/// where it is `+1` and the complementary block where it is `-1`. The
/// `+1`-blocks come first, so the design derived at point 0 lists the rows
/// in their original order.
pub fn hadamard_3_design(h: &SignMatrix) -> Result<Design> {
    let n = h.n;
    if n < 8 || !verify_hadamard(h) {
        return Err(Error::NotHadamard(format!("need a Hadamard matrix of order >= 8, got order {n}")));
    }
    let norm = h.normalized();
    let plus: Vec<Vec<u8>> = (1..n).map(|i| (0..n).map(|j| (norm.get(i, j) == 1) as u8).collect()).collect();
    let minus: Vec<Vec<u8>> = plus.iter().map(|r| r.iter().map(|&x| 1 - x).collect()).collect();
    let mut rows = plus;
    rows.extend(minus);
    let d = Design::from_rows(&rows)?.with_params(DesignParams { t: 3, v: n, k: n / 2, lambda: n / 4 - 1 });
    Ok(d)
}

/// Quadratic character of `x` mod the prime `q`.
pub fn legendre(x: i64, q: u32) -> i8 {
    let x = x.rem_euclid(q as i64) as u64;
    if x == 0 {
        return 0;
    }
    let (mut base, mut e, mut acc) = (x, (q as u64 - 1) / 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % q as u64;
        }
        base = base * base % q as u64;
        e >>= 1;
    }
    if acc == 1 {
        1
    } else {
        -1
    }
}

fn check_paley_prime(q: u32, residue: u32, kind: &str) -> Result<()> {
    if !crate::search::is_prime(q) || q % 4 != residue {
        return Err(Error::BadCongruence(format!("Paley type {kind} needs a prime q ≡ {residue} (mod 4), got {q}")));
    }
    Ok(())
}

/// Bordered Jacobsthal matrix `[[0, 1^T], [±1, Q]]`, `Q_ab = χ(b - a)`.
fn bordered_jacobsthal(q: u32, first_column: i8) -> Vec<Vec<i8>> {
    let n = q as usize + 1;
    let mut c = vec![vec![0i8; n]; n];
    c[0][1..].fill(1);
    for row in &mut c[1..] {
        row[0] = first_column;
    }
    for a in 0..q as usize {
        for b in 0..q as usize {
            c[a + 1][b + 1] = legendre(b as i64 - a as i64, q);
        }
    }
    c
}

/// Paley type I matrix `I + S` of order `q + 1` for a prime `q ≡ 3 (mod 4)`.
pub fn paley_type_i(q: u32) -> Result<SignMatrix> {
    check_paley_prime(q, 3, "I")?;
    let mut s = bordered_jacobsthal(q, -1);
    for (i, row) in s.iter_mut().enumerate() {
        row[i] = 1;
    }
    SignMatrix::from_rows(&s)
}

/// Paley type II matrix of order `2q + 2` for a prime `q ≡ 1 (mod 4)`:
/// `C ⊗ [[1, 1], [1, -1]] + I ⊗ [[1, -1], [-1, -1]]`.
pub fn paley_type_ii(q: u32) -> Result<SignMatrix> {
    check_paley_prime(q, 1, "II")?;
    let c = bordered_jacobsthal(q, 1);
    let m = c.len();
    let mut rows = vec![vec![0i8; 2 * m]; 2 * m];
    for i in 0..m {
        for j in 0..m {
            let block: [[i8; 2]; 2] = if i == j {
                [[1, -1], [-1, -1]]
            } else {
                let x = c[i][j];
                [[x, x], [x, -x]]
            };
            for (a, brow) in block.iter().enumerate() {
                for (b, &val) in brow.iter().enumerate() {
                    rows[2 * i + a][2 * j + b] = val;
                }
            }
        }
    }
    SignMatrix::from_rows(&rows)
}

/// Quadratic-residue difference-set design `2-(q, (q-1)/2, (q-3)/4)` for a
/// prime `q ≡ 3 (mod 4)`; block `i` is `QR + i`.
pub fn paley_design(q: u32) -> Result<Design> {
    check_paley_prime(q, 3, "I")?;
    let qs = q as usize;
    let rows: Vec<Vec<u8>> =
        (0..qs).map(|i| (0..qs).map(|x| (legendre(x as i64 - i as i64, q) == 1) as u8).collect()).collect();
    Ok(Design::from_rows(&rows)?.with_params(DesignParams { t: 2, v: qs, k: (qs - 1) / 2, lambda: (qs - 3) / 4 }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::{enumerate_quadruples, ReductionPolicy};

    fn sup(p: u32, e: &[u32]) -> CyclicSupport {
        CyclicSupport::new(p, e).unwrap()
    }

    #[test]
    fn circulant_examples() {
        assert!(circulant_matrix(&sup(4, &[])).iter().flatten().all(|&x| x == 0));
        let id = circulant_matrix(&sup(3, &[0]));
        assert_eq!(id, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        let m = circulant_matrix(&sup(5, &[0, 1]));
        for (i, row) in m.iter().enumerate() {
            let ones: Vec<usize> = (0..5).filter(|&x| row[x] == 1).collect();
            let mut expect = vec![i, (i + 1) % 5];
            expect.sort();
            assert_eq!(ones, expect);
        }
    }

    #[test]
    fn p5_incidence_is_2_11_5_2() {
        for q in enumerate_quadruples(5, ReductionPolicy::FULL).unwrap() {
            let d = incidence_matrix(&q).unwrap();
            assert_eq!((d.points(), d.blocks()), (11, 11));
            assert!(d.block_sizes().iter().all(|&k| k == 5));
            assert_eq!(verify_t_design(&d, 2).unwrap(), (5, 2));
            let h = hadamard_from_quadruple(&q).unwrap();
            assert_eq!(h.order(), 12);
            assert!(verify_hadamard(&h));
        }
    }

    #[test]
    fn incidence_rejects_bad_quadruple() {
        let q = CirculantQuadruple::new(sup(5, &[0, 1]), sup(5, &[0, 2]), sup(5, &[0, 1]), sup(5, &[0, 2])).unwrap();
        let err = incidence_matrix(&q).unwrap_err();
        assert!(err.to_string().contains("MM^T+PP^T") || err.to_string().contains("MP^T"));
    }

    #[test]
    fn hadamard_verification_basics() {
        assert!(verify_hadamard(&SignMatrix::from_rows(&[vec![1]]).unwrap()));
        assert!(!verify_hadamard(&SignMatrix::from_rows(&[vec![1, 1], vec![1, 1]]).unwrap()));
        assert!(verify_hadamard(&paley_type_ii(5).unwrap()));
        assert!(verify_hadamard(&paley_type_i(7).unwrap()));
        assert_eq!(paley_type_i(7).unwrap().order(), 8);
        assert!(paley_type_i(5).is_err());
        assert!(paley_type_ii(7).is_err());
        assert!(paley_type_ii(9).is_err());
    }

    #[test]
    fn complete_design_lambda() {
        // all 3-subsets of a 6-set: λ for t = 2 is C(4, 1) = 4
        let mut blocks = Vec::new();
        for a in 0..6 {
            for b in a + 1..6 {
                for c in b + 1..6 {
                    blocks.push(vec![a, b, c]);
                }
            }
        }
        let d = Design::from_blocks(6, &blocks).unwrap();
        assert_eq!(verify_t_design(&d, 2).unwrap(), (3, 4));
        assert_eq!(verify_t_design(&d, 3).unwrap(), (3, 1));
        assert_eq!(verify_t_design(&d, 1).unwrap(), (3, 10));
    }

    #[test]
    fn bit_flip_breaks_design() {
        let q = enumerate_quadruples(7, ReductionPolicy::FULL).unwrap()[0];
        let d = incidence_matrix(&q).unwrap();
        let mut rows: Vec<Vec<u8>> = d.rows().map(|r| r.to_vec()).collect();
        rows[3][4] ^= 1;
        assert!(verify_t_design(&Design::from_rows(&rows).unwrap(), 2).is_err());
    }

    #[test]
    fn transforms_are_involutions() {
        let q = enumerate_quadruples(7, ReductionPolicy::FULL).unwrap()[0];
        let d = incidence_matrix(&q).unwrap();
        assert_eq!(complement_design(&complement_design(&d)).rows().collect::<Vec<_>>(), d.rows().collect::<Vec<_>>());
        assert_eq!(dual_design(&dual_design(&d)).rows().collect::<Vec<_>>(), d.rows().collect::<Vec<_>>());
        let c = complement_design(&d);
        assert_eq!(verify_t_design(&c, 2).unwrap(), (8, 4));
        assert!(derived_design(&d, 15).is_err());
    }

    #[test]
    fn order_12_three_design() {
        let h = paley_type_ii(5).unwrap();
        let d3 = hadamard_3_design(&h).unwrap();
        assert_eq!((d3.points(), d3.blocks()), (12, 22));
        assert_eq!(verify_t_design(&d3, 3).unwrap(), (6, 2));
        let der = derived_design(&d3, 0).unwrap();
        assert_eq!(verify_t_design(&der, 2).unwrap(), (5, 2));
        assert_eq!(der.params().unwrap(), DesignParams { t: 2, v: 11, k: 5, lambda: 2 });
    }

    #[test]
    fn derived_at_distinguished_point_recovers_design() {
        for q in enumerate_quadruples(7, ReductionPolicy::FULL).unwrap() {
            let d = incidence_matrix(&q).unwrap();
            let h = hadamard_from_quadruple(&q).unwrap();
            let der = derived_design(&hadamard_3_design(&h).unwrap(), 0).unwrap();
            assert_eq!(der.rows().collect::<Vec<_>>(), d.rows().collect::<Vec<_>>());
        }
    }

    #[test]
    fn paley_design_parameters() {
        let d = paley_design(11).unwrap();
        assert_eq!(verify_t_design(&d, 2).unwrap(), (5, 2));
        assert!(verify_hadamard(&hadamard_from_incidence(&d).unwrap()));
    }

    #[test]
    fn normalization_fixes_first_row_and_column() {
        let h = paley_type_ii(5).unwrap();
        let n = h.normalized();
        assert!((0..12).all(|i| n.get(0, i) == 1 && n.get(i, 0) == 1));
        assert!(verify_hadamard(&n));
    }
}
