//! Canonical labeling of vertex-colored graphs by individualization and
//! refinement, and the graphs attached to designs and Hadamard matrices.

use std::cmp::Ordering;
use std::collections::{BTreeMap, VecDeque};

use num_bigint::BigUint;
use num_traits::One;

use crate::construct::{Design, SignMatrix};
use crate::error::{Error, Result};

/// Undirected simple graph with a color class index per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredGraph {
    adj: Vec<Vec<u32>>,
    colors: Vec<u32>,
}

impl ColoredGraph {
    pub fn new(colors: Vec<u32>) -> Self {
        ColoredGraph { adj: vec![Vec::new(); colors.len()], colors }
    }

    pub fn vertex_count(&self) -> usize {
        self.colors.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn color(&self, v: usize) -> u32 {
        self.colors[v]
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn neighbours(&self, v: usize) -> &[u32] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(&(v as u32))
    }

    /// Adds `{u, v}`; repeated edges are ignored.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.vertex_count();
        for x in [u, v] {
            if x >= n {
                return Err(Error::IndexOutOfRange { index: x, bound: n });
            }
        }
        if u == v {
            return Err(Error::DimensionMismatch(format!("loop at vertex {u}")));
        }
        if !self.has_edge(u, v) {
            self.adj[u].push(v as u32);
            self.adj[v].push(u as u32);
        }
        Ok(())
    }

    /// Color class sizes indexed by color.
    pub fn color_class_sizes(&self) -> Vec<usize> {
        let k = self.colors.iter().max().map_or(0, |&c| c as usize + 1);
        let mut sizes = vec![0; k];
        for &c in &self.colors {
            sizes[c as usize] += 1;
        }
        sizes
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[u32]) -> ColoredGraph {
        let n = self.vertex_count();
        let mut colors = vec![0; n];
        let mut adj = vec![Vec::new(); n];
        for v in 0..n {
            let pv = perm[v] as usize;
            colors[pv] = self.colors[v];
            adj[pv] = self.adj[v].iter().map(|&u| perm[u as usize]).collect();
        }
        ColoredGraph { adj, colors }
    }

    fn bitsets(&self) -> (usize, Vec<u64>) {
        let n = self.vertex_count();
        let words = n.div_ceil(64).max(1);
        let mut bits = vec![0u64; n * words];
        for v in 0..n {
            for &u in &self.adj[v] {
                bits[v * words + u as usize / 64] |= 1 << (u % 64);
            }
        }
        (words, bits)
    }
}

/// Color-preserving permutation mapping every edge to an edge.
pub fn is_automorphism(g: &ColoredGraph, perm: &[u32]) -> bool {
    let n = g.vertex_count();
    if perm.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &x in perm {
        if x as usize >= n || std::mem::replace(&mut seen[x as usize], true) {
            return false;
        }
    }
    (0..n).all(|v| {
        g.colors[v] == g.colors[perm[v] as usize]
            && g.adj[v].iter().all(|&u| g.has_edge(perm[v] as usize, perm[u as usize] as usize))
    })
}

/// Extra label-invariant vertex data used to split the initial coloring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum VertexInvariant {
    #[default]
    None,
    /// For vertex `x`, the histogram of `|N(x) ∩ N(y_1) ∩ … ∩ N(y_{k-1})|`
    /// over all `(k-1)`-subsets of other vertices of the same color.
    CommonNeighbours(u8),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalCertificate {
    /// `ordering[i]` is the vertex placed at canonical position `i`.
    pub ordering: Vec<u32>,
    pub fingerprint: Vec<u8>,
    pub aut_order: BigUint,
    pub generators: Vec<Vec<u32>>,
}

impl CanonicalCertificate {
    pub fn fingerprint_hex(&self) -> String {
        hex::encode(&self.fingerprint)
    }
}

pub fn canonical_form(g: &ColoredGraph) -> CanonicalCertificate {
    canonical_form_with(g, VertexInvariant::None)
}

pub fn canonical_form_with(g: &ColoredGraph, invariant: VertexInvariant) -> CanonicalCertificate {
    let n = g.vertex_count();
    if n == 0 {
        return CanonicalCertificate {
            ordering: Vec::new(),
            fingerprint: fingerprint_bytes(g, &[]),
            aut_order: BigUint::one(),
            generators: Vec::new(),
        };
    }
    let keys = initial_keys(g, invariant);
    let mut search = Search::new(g);
    let (root, root_hash) = search.root_partition(&keys);
    search.explore(0, root, vec![root_hash], true);
    let best = search.best.take().expect("search reaches a leaf");
    let aut_order = search.group_order();
    let ordering = best.lab.clone();
    CanonicalCertificate {
        fingerprint: fingerprint_bytes(g, &ordering),
        ordering,
        aut_order,
        generators: search.generators,
    }
}

fn fingerprint_bytes(g: &ColoredGraph, ordering: &[u32]) -> Vec<u8> {
    let sizes = g.color_class_sizes();
    let n = g.vertex_count();
    let mut out = Vec::new();
    out.extend_from_slice(&(sizes.len() as u32).to_le_bytes());
    for s in sizes {
        out.extend_from_slice(&(s as u32).to_le_bytes());
    }
    out.extend_from_slice(&(n as u32).to_le_bytes());
    for word in certificate(g, &inverse(ordering)) {
        out.extend_from_slice(&word.to_le_bytes());
    }
    out
}

/// Lexicographic comparison over the common prefix only.
fn prefix_cmp(a: &[u64], b: &[u64]) -> Ordering {
    a.iter().zip(b).map(|(x, y)| x.cmp(y)).find(|o| o.is_ne()).unwrap_or(Ordering::Equal)
}

fn inverse(lab: &[u32]) -> Vec<u32> {
    let mut pos = vec![0; lab.len()];
    for (i, &v) in lab.iter().enumerate() {
        pos[v as usize] = i as u32;
    }
    pos
}

/// Adjacency bitmap of the graph relabeled by `pos`.
fn certificate(g: &ColoredGraph, pos: &[u32]) -> Vec<u64> {
    let n = g.vertex_count();
    let words = n.div_ceil(64);
    let mut cert = vec![0u64; n * words];
    for v in 0..n {
        let row = pos[v] as usize * words;
        for &u in &g.adj[v] {
            let c = pos[u as usize];
            cert[row + c as usize / 64] |= 1 << (c % 64);
        }
    }
    cert
}

fn initial_keys(g: &ColoredGraph, invariant: VertexInvariant) -> Vec<(u32, Vec<(u32, u64)>)> {
    let n = g.vertex_count();
    let k = match invariant {
        VertexInvariant::CommonNeighbours(k) if k >= 2 => k as usize,
        _ => return (0..n).map(|v| (g.colors[v], Vec::new())).collect(),
    };
    let (words, bits) = g.bitsets();
    let row = |v: usize| &bits[v * words..(v + 1) * words];
    let mut by_color: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    for v in 0..n {
        by_color.entry(g.colors[v]).or_default().push(v);
    }
    (0..n)
        .map(|x| {
            let others: Vec<usize> = by_color[&g.colors[x]].iter().copied().filter(|&y| y != x).collect();
            let mut hist: BTreeMap<u32, u64> = BTreeMap::new();
            let mut acc = vec![row(x).to_vec()];
            common_subsets(&others, k - 1, 0, &mut acc, &row, &mut hist);
            (g.colors[x], hist.into_iter().collect())
        })
        .collect()
}

fn common_subsets<'a>(
    others: &[usize],
    remaining: usize,
    from: usize,
    acc: &mut Vec<Vec<u64>>,
    row: &impl Fn(usize) -> &'a [u64],
    hist: &mut BTreeMap<u32, u64>,
) {
    let top = acc.last().expect("non-empty").clone();
    if remaining == 1 {
        for &y in &others[from..] {
            let c: u32 = top.iter().zip(row(y)).map(|(a, b)| (a & b).count_ones()).sum();
            *hist.entry(c).or_default() += 1;
        }
        return;
    }
    for i in from..others.len() {
        let next: Vec<u64> = top.iter().zip(row(others[i])).map(|(a, b)| a & b).collect();
        acc.push(next);
        common_subsets(others, remaining - 1, i + 1, acc, row, hist);
        acc.pop();
    }
}

#[inline]
fn mix(h: u64, x: u64) -> u64 {
    // splitmix64 finalizer over a running state
    let mut z = h ^ x.wrapping_add(0x9e37_79b9_7f4a_7c15).wrapping_add(h << 6).wrapping_add(h >> 2);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Ordered partition of the vertex set. `start[i]` is the first position of
/// the cell holding position `i`; `len[s]` is meaningful for cell starts only.
#[derive(Clone)]
struct Partition {
    lab: Vec<u32>,
    pos: Vec<u32>,
    start: Vec<u32>,
    len: Vec<u32>,
    cells: usize,
}

impl Partition {
    fn is_discrete(&self) -> bool {
        self.cells == self.lab.len()
    }

    fn target_cell(&self) -> Option<usize> {
        let mut best: Option<(u32, usize)> = None;
        let mut s = 0;
        while s < self.lab.len() {
            let l = self.len[s];
            if l > 1 && best.is_none_or(|(bl, _)| l < bl) {
                best = Some((l, s));
            }
            s += l as usize;
        }
        best.map(|(_, s)| s)
    }
}

struct Leaf {
    trace: Vec<u64>,
    path: Vec<u32>,
    lab: Vec<u32>,
    cert: Vec<u64>,
}

struct Search<'g> {
    g: &'g ColoredGraph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Vec<u32>>,
    path: Vec<u32>,
    counts: Vec<u32>,
}

impl<'g> Search<'g> {
    fn new(g: &'g ColoredGraph) -> Self {
        let n = g.vertex_count();
        Search { g, first: None, best: None, generators: Vec::new(), path: Vec::new(), counts: vec![0; n] }
    }

    fn root_partition(&mut self, keys: &[(u32, Vec<(u32, u64)>)]) -> (Partition, u64) {
        let n = keys.len();
        let mut lab: Vec<u32> = (0..n as u32).collect();
        lab.sort_by(|&a, &b| keys[a as usize].cmp(&keys[b as usize]));
        let mut start = vec![0u32; n];
        let mut len = vec![0u32; n];
        let mut h = mix(0, n as u64);
        let mut cells = Vec::new();
        let mut s = 0;
        while s < n {
            let mut e = s + 1;
            while e < n && keys[lab[e] as usize] == keys[lab[s] as usize] {
                e += 1;
            }
            for x in start.iter_mut().take(e).skip(s) {
                *x = s as u32;
            }
            len[s] = (e - s) as u32;
            let (c, hist) = &keys[lab[s] as usize];
            h = mix(h, *c as u64);
            h = mix(h, (e - s) as u64);
            for &(a, b) in hist {
                h = mix(mix(h, a as u64), b);
            }
            cells.push(s);
            s = e;
        }
        let pos = inverse(&lab);
        let mut p = Partition { lab, pos, start, len, cells: cells.len() };
        let h = self.refine(&mut p, cells, h);
        (p, h)
    }

    /// Equitable refinement; returns a hash of the splitting events.
    fn refine(&mut self, p: &mut Partition, initial: Vec<usize>, mut h: u64) -> u64 {
        let n = p.lab.len();
        let mut queue: VecDeque<usize> = initial.into();
        let mut in_queue = vec![false; n];
        for &s in &queue {
            in_queue[s] = true;
        }
        let mut touched: Vec<u32> = Vec::new();
        let mut touched_cells: Vec<usize> = Vec::new();
        let mut scratch: Vec<(u32, u32)> = Vec::new();
        while let Some(w) = queue.pop_front() {
            in_queue[w] = false;
            if p.is_discrete() {
                break;
            }
            let wl = p.len[w] as usize;
            for i in w..w + wl {
                let x = p.lab[i] as usize;
                for &y in &self.g.adj[x] {
                    if self.counts[y as usize] == 0 {
                        touched.push(y);
                    }
                    self.counts[y as usize] += 1;
                }
            }
            touched_cells.clear();
            for &y in &touched {
                let s = p.start[p.pos[y as usize] as usize] as usize;
                if p.len[s] > 1 {
                    touched_cells.push(s);
                }
            }
            touched_cells.sort_unstable();
            touched_cells.dedup();
            for &x in &touched_cells {
                let xl = p.len[x] as usize;
                scratch.clear();
                scratch.extend((x..x + xl).map(|i| (self.counts[p.lab[i] as usize], p.lab[i])));
                scratch.sort_unstable_by_key(|&(c, _)| c);
                if scratch[0].0 == scratch[xl - 1].0 {
                    continue;
                }
                h = mix(mix(h, x as u64), w as u64);
                let was_queued = in_queue[x];
                let mut frags: Vec<(usize, usize)> = Vec::new();
                let mut i = 0;
                while i < xl {
                    let mut j = i + 1;
                    while j < xl && scratch[j].0 == scratch[i].0 {
                        j += 1;
                    }
                    h = mix(mix(h, scratch[i].0 as u64), (j - i) as u64);
                    frags.push((x + i, j - i));
                    i = j;
                }
                for (k, &(_, v)) in scratch.iter().enumerate() {
                    p.lab[x + k] = v;
                    p.pos[v as usize] = (x + k) as u32;
                }
                for &(fs, fl) in &frags {
                    p.len[fs] = fl as u32;
                    for sp in p.start.iter_mut().skip(fs).take(fl) {
                        *sp = fs as u32;
                    }
                }
                p.cells += frags.len() - 1;
                let skip = if was_queued {
                    Some(x)
                } else {
                    let mut big = frags[0];
                    for &f in &frags[1..] {
                        if f.1 > big.1 {
                            big = f;
                        }
                    }
                    Some(big.0)
                };
                for &(fs, _) in &frags {
                    if Some(fs) != skip && !in_queue[fs] {
                        in_queue[fs] = true;
                        queue.push_back(fs);
                    }
                }
            }
            for &y in &touched {
                self.counts[y as usize] = 0;
            }
            touched.clear();
        }
        mix(h, p.cells as u64)
    }

    fn individualize(&mut self, p: &Partition, v: u32) -> (Partition, u64) {
        let mut q = p.clone();
        let i = q.pos[v as usize] as usize;
        let s = q.start[i] as usize;
        let l = q.len[s] as usize;
        let other = q.lab[s];
        q.lab.swap(s, i);
        q.pos[other as usize] = i as u32;
        q.pos[v as usize] = s as u32;
        q.len[s] = 1;
        q.len[s + 1] = (l - 1) as u32;
        for sp in q.start.iter_mut().skip(s + 1).take(l - 1) {
            *sp = (s + 1) as u32;
        }
        q.cells += 1;
        let h = mix(mix(0x5eed, s as u64), l as u64);
        let h = self.refine(&mut q, vec![s], h);
        (q, h)
    }

    /// Union-find orbits of the generators fixing every vertex of `prefix`.
    fn orbits_fixing(&self, prefix: &[u32]) -> Vec<u32> {
        let n = self.g.vertex_count();
        let mut parent: Vec<u32> = (0..n as u32).collect();
        fn find(parent: &mut [u32], mut x: u32) -> u32 {
            while parent[x as usize] != x {
                parent[x as usize] = parent[parent[x as usize] as usize];
                x = parent[x as usize];
            }
            x
        }
        for gen in &self.generators {
            if prefix.iter().any(|&x| gen[x as usize] != x) {
                continue;
            }
            for v in 0..n as u32 {
                let (a, b) = (find(&mut parent, v), find(&mut parent, gen[v as usize]));
                if a != b {
                    // keep the smaller label as root so roots are orbit minima
                    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                    parent[hi as usize] = lo;
                }
            }
        }
        (0..n as u32).map(|v| find(&mut parent, v)).collect()
    }

    fn divergence(&self, other: &[u32]) -> usize {
        self.path.iter().zip(other).take_while(|(a, b)| a == b).count()
    }

    fn record_automorphism(&mut self, from: &[u32], to: &[u32]) {
        let mut gamma = vec![0u32; from.len()];
        for (&a, &b) in from.iter().zip(to) {
            gamma[a as usize] = b;
        }
        if gamma.iter().enumerate().any(|(i, &x)| i as u32 != x) {
            debug_assert!(is_automorphism(self.g, &gamma));
            self.generators.push(gamma);
        }
    }

    /// Depth-first search below a node at `level`. Returns `Some(l)` to abandon
    /// every node deeper than `l`.
    fn explore(&mut self, level: usize, p: Partition, trace: Vec<u64>, eq_first: bool) -> Option<usize> {
        if p.is_discrete() {
            return self.leaf(p, trace, eq_first);
        }
        let cell = p.target_cell().expect("non-discrete partition has a target cell");
        let mut children: Vec<u32> = p.lab[cell..cell + p.len[cell] as usize].to_vec();
        children.sort_unstable();
        let mut orbits: Option<(usize, Vec<u32>)> = None;
        for w in children {
            if self.first.is_some() {
                let stale = orbits.as_ref().is_none_or(|(k, _)| *k != self.generators.len());
                if stale && !self.generators.is_empty() {
                    orbits = Some((self.generators.len(), self.orbits_fixing(&self.path)));
                }
                if let Some((_, orb)) = &orbits {
                    if orb[w as usize] != w {
                        continue;
                    }
                }
            }
            let (q, h) = self.individualize(&p, w);
            let child_eq_first = eq_first && self.first.as_ref().is_some_and(|f| f.trace.get(level + 1) == Some(&h));
            let mut t = trace.clone();
            t.push(h);
            // Compared against the current best, which may have changed since
            // the parent was entered.
            let below_best = self.best.as_ref().is_some_and(|b| prefix_cmp(&t, &b.trace) == Ordering::Less);
            if !child_eq_first && below_best {
                continue;
            }
            self.path.push(w);
            let jump = self.explore(level + 1, q, t, child_eq_first);
            self.path.pop();
            if let Some(l) = jump {
                if l < level {
                    return Some(l);
                }
            }
        }
        None
    }

    fn leaf(&mut self, p: Partition, trace: Vec<u64>, eq_first: bool) -> Option<usize> {
        let cert = certificate(self.g, &p.pos);
        let Some(first) = &self.first else {
            let leaf = Leaf { trace, path: self.path.clone(), lab: p.lab, cert };
            self.best = Some(Leaf {
                trace: leaf.trace.clone(),
                path: leaf.path.clone(),
                lab: leaf.lab.clone(),
                cert: leaf.cert.clone(),
            });
            self.first = Some(leaf);
            return None;
        };
        if eq_first && first.cert == cert {
            let from = first.lab.clone();
            let d = self.divergence(&first.path);
            self.record_automorphism(&from, &p.lab);
            return Some(d);
        }
        let best = self.best.as_ref().expect("best set with first");
        let order = trace.cmp(&best.trace).then_with(|| cert.cmp(&best.cert));
        match order {
            Ordering::Equal => {
                let from = best.lab.clone();
                let d = self.divergence(&best.path);
                self.record_automorphism(&from, &p.lab);
                Some(d)
            }
            Ordering::Greater => {
                self.best = Some(Leaf { trace, path: self.path.clone(), lab: p.lab, cert });
                None
            }
            Ordering::Less => None,
        }
    }

    /// Product over the first path of orbit sizes of the individualized
    /// vertex under its pointwise stabilizer.
    fn group_order(&self) -> BigUint {
        let first = self.first.as_ref().expect("search reaches a leaf");
        let mut order = BigUint::one();
        for l in 0..first.path.len() {
            let orb = self.orbits_fixing(&first.path[..l]);
            let root = orb[first.path[l] as usize];
            let size = orb.iter().filter(|&&r| r == root).count();
            order *= BigUint::from(size);
        }
        order
    }
}

/// Order of the permutation group generated by `gens` on `n` points, by the
/// deterministic Schreier–Sims algorithm.
pub fn group_order(n: usize, gens: &[Vec<u32>]) -> BigUint {
    let mut strong: Vec<Vec<u32>> = gens.iter().filter(|g| !is_identity(g)).cloned().collect();
    let mut base: Vec<u32> = Vec::new();
    for g in &strong {
        if base.iter().all(|&b| g[b as usize] == b) {
            base.push(moved_point(g));
        }
    }
    let mut levels: Vec<Vec<Option<Vec<u32>>>> =
        (0..base.len()).map(|i| transversal(n, base[i], &fixing(&strong, &base[..i]))).collect();
    let mut i = base.len();
    while i > 0 {
        let l = i - 1;
        let gens_l = fixing(&strong, &base[..l]);
        let mut added = None;
        'scan: for x in 0..n {
            let Some(ux) = &levels[l][x] else { continue };
            for s in &gens_l {
                let y = s[x] as usize;
                let uy = levels[l][y].as_ref().expect("orbit is closed");
                let sg = compose(&compose(ux, s), &inverse(uy));
                let (h, j) = strip(&sg, &base, &levels, l + 1);
                if !is_identity(&h) {
                    if j == base.len() {
                        base.push(moved_point(&h));
                        levels.push(Vec::new());
                    }
                    strong.push(h);
                    added = Some(j);
                    break 'scan;
                }
            }
        }
        match added {
            Some(j) => {
                for k in l + 1..=j {
                    levels[k] = transversal(n, base[k], &fixing(&strong, &base[..k]));
                }
                i = j + 1;
            }
            None => i -= 1,
        }
    }
    levels.iter().fold(BigUint::one(), |acc, t| acc * BigUint::from(t.iter().flatten().count()))
}

fn is_identity(g: &[u32]) -> bool {
    g.iter().enumerate().all(|(i, &x)| i as u32 == x)
}

fn moved_point(g: &[u32]) -> u32 {
    g.iter().enumerate().position(|(i, &x)| i as u32 != x).expect("non-identity") as u32
}

/// `a` followed by `b`.
fn compose(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().map(|&x| b[x as usize]).collect()
}

fn fixing(gens: &[Vec<u32>], points: &[u32]) -> Vec<Vec<u32>> {
    gens.iter().filter(|g| points.iter().all(|&b| g[b as usize] == b)).cloned().collect()
}

/// For each point in the orbit of `b`, an element mapping `b` to it.
fn transversal(n: usize, b: u32, gens: &[Vec<u32>]) -> Vec<Option<Vec<u32>>> {
    let mut t: Vec<Option<Vec<u32>>> = vec![None; n];
    t[b as usize] = Some((0..n as u32).collect());
    let mut queue = vec![b];
    while let Some(x) = queue.pop() {
        for g in gens {
            let y = g[x as usize];
            if t[y as usize].is_none() {
                t[y as usize] = Some(compose(t[x as usize].as_ref().expect("visited"), g));
                queue.push(y);
            }
        }
    }
    t
}

fn strip(g: &[u32], base: &[u32], levels: &[Vec<Option<Vec<u32>>>], from: usize) -> (Vec<u32>, usize) {
    let mut h = g.to_vec();
    for j in from..base.len() {
        match &levels[j][h[base[j] as usize] as usize] {
            Some(u) => h = compose(&h, &inverse(u)),
            None => return (h, j),
        }
    }
    (h, base.len())
}

/// Bipartite incidence graph: points get color 0, blocks color 1.
pub fn design_to_colored_graph(d: &Design) -> ColoredGraph {
    let (v, b) = (d.points(), d.blocks());
    let mut colors = vec![0u32; v];
    colors.extend(std::iter::repeat_n(1, b));
    let mut g = ColoredGraph::new(colors);
    for (bi, row) in d.rows().enumerate() {
        for (x, &e) in row.iter().enumerate() {
            if e == 1 {
                g.adj[x].push((v + bi) as u32);
                g.adj[v + bi].push(x as u32);
            }
        }
    }
    g
}

/// Vertices `r_i = i`, `r_i' = n + i` (color 0), `c_j = 2n + j`,
/// `c_j' = 3n + j` (color 1). A `+1` entry joins `r_i c_j` and `r_i' c_j'`,
/// a `-1` joins `r_i c_j'` and `r_i' c_j`; each `v v'` pair is an edge too.
pub fn hadamard_to_colored_graph(h: &SignMatrix) -> ColoredGraph {
    let n = h.order();
    let mut colors = vec![0u32; 2 * n];
    colors.extend(std::iter::repeat_n(1, 2 * n));
    let mut g = ColoredGraph::new(colors);
    let mut join = |a: usize, b: usize| {
        g.adj[a].push(b as u32);
        g.adj[b].push(a as u32);
    };
    for i in 0..n {
        join(i, n + i);
        join(2 * n + i, 3 * n + i);
        for j in 0..n {
            if h.get(i, j) == 1 {
                join(i, 2 * n + j);
                join(n + i, 3 * n + j);
            } else {
                join(i, 3 * n + j);
                join(n + i, 2 * n + j);
            }
        }
    }
    g
}

pub const DESIGN_INVARIANT: VertexInvariant = VertexInvariant::CommonNeighbours(3);
pub const HADAMARD_INVARIANT: VertexInvariant = VertexInvariant::CommonNeighbours(4);

pub fn design_certificate(d: &Design) -> CanonicalCertificate {
    canonical_form_with(&design_to_colored_graph(d), DESIGN_INVARIANT)
}

pub fn hadamard_certificate(h: &SignMatrix) -> CanonicalCertificate {
    canonical_form_with(&hadamard_to_colored_graph(h), HADAMARD_INVARIANT)
}

pub fn designs_isomorphic(a: &Design, b: &Design) -> bool {
    if (a.points(), a.blocks()) != (b.points(), b.blocks()) {
        return false;
    }
    design_certificate(a).fingerprint == design_certificate(b).fingerprint
}

pub fn hadamard_equivalent(h: &SignMatrix, k: &SignMatrix) -> bool {
    if h.order() != k.order() {
        return false;
    }
    hadamard_certificate(h).fingerprint == hadamard_certificate(k).fingerprint
}

/// Point/block permutation pairs preserving incidence. Colors keep points
/// and blocks apart, so this is the graph group order.
pub fn design_aut_order(d: &Design) -> BigUint {
    design_certificate(d).aut_order
}

/// Number of monomial pairs `(P, Q)` with `P H Q = H`. Each such pair is one
/// graph automorphism and conversely, so no correction factor is needed.
pub fn hadamard_aut_order(h: &SignMatrix) -> BigUint {
    hadamard_certificate(h).aut_order
}
