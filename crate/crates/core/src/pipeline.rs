//! Search, construction, canonization and code analysis chained together,
//! plus the on-disk artifacts of a classification run.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rayon::prelude::*;
use sha2::{Digest, Sha256};

use crate::canon::{design_certificate, hadamard_certificate};
use crate::codes::{code_c2, code_c2prime, code_from_sign_matrix, report, CodeReport};
use crate::construct::{
    hadamard_from_quadruple, incidence_matrix, verify_hadamard, verify_t_design, Design, SignMatrix,
};
use crate::error::{Error, Result};
use crate::gf::FieldId;
use crate::io::{format_design, format_hadamard, format_quadruples, Artifact};
use crate::search::{check_prime, enumerate_with, CirculantQuadruple, ReductionPolicy, SearchOptions};

/// One isomorphism or equivalence class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassRep<T> {
    pub object: T,
    /// The quadruple the representative was built from.
    pub source: CirculantQuadruple,
    pub fingerprint: Vec<u8>,
    pub aut_order: BigUint,
    /// Raw solutions falling into the class.
    pub members: usize,
}

impl<T> ClassRep<T> {
    pub fn fingerprint_digest(&self) -> String {
        fingerprint_digest(&self.fingerprint)
    }
}

/// SHA-256 of the canonical fingerprint, in hex.
pub fn fingerprint_digest(fingerprint: &[u8]) -> String {
    hex::encode(Sha256::digest(fingerprint))
}

#[derive(Debug, Clone)]
pub struct ClassificationResult {
    pub p: u32,
    pub designs: Vec<ClassRep<Design>>,
    pub matrices: Vec<ClassRep<SignMatrix>>,
    pub raw_solutions: usize,
    pub elapsed: Duration,
}

impl ClassificationResult {
    pub fn counts(&self) -> (usize, usize) {
        (self.designs.len(), self.matrices.len())
    }
}

#[derive(Debug, Clone, Copy)]
pub struct ClassifyOptions {
    pub reduction: ReductionPolicy,
    /// Worker threads; `0` uses the rayon default.
    pub jobs: usize,
    pub memory_limit: usize,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        let s = SearchOptions::default();
        ClassifyOptions { reduction: s.reduction, jobs: 0, memory_limit: s.memory_limit }
    }
}

type Classes<T> = HashMap<Vec<u8>, (String, ClassRep<T>)>;

fn merge<T>(mut a: Classes<T>, b: Classes<T>) -> Classes<T> {
    for (fp, (key, rep)) in b {
        match a.get_mut(&fp) {
            Some((k0, r0)) => {
                let members = r0.members + rep.members;
                if key < *k0 {
                    *k0 = key;
                    *r0 = rep;
                }
                r0.members = members;
            }
            None => {
                a.insert(fp, (key, rep));
            }
        }
    }
    a
}

fn sorted<T>(classes: Classes<T>) -> Vec<ClassRep<T>> {
    let mut v: Vec<ClassRep<T>> = classes.into_values().map(|(_, r)| r).collect();
    v.sort_by(|a, b| a.fingerprint.cmp(&b.fingerprint));
    v
}

/// Classifies the designs and Hadamard matrices of order `2p + 2` that come
/// from circulant quadruples over `Z_p`.
pub fn classify(p: u32, opts: ClassifyOptions) -> Result<ClassificationResult> {
    check_prime(p)?;
    let pool =
        rayon::ThreadPoolBuilder::new().num_threads(opts.jobs).build().map_err(|e| Error::Resource(e.to_string()))?;
    pool.install(|| classify_in_pool(p, opts))
}

fn classify_in_pool(p: u32, opts: ClassifyOptions) -> Result<ClassificationResult> {
    let start = Instant::now();
    let quads = enumerate_with(p, SearchOptions { reduction: opts.reduction, memory_limit: opts.memory_limit })?;
    let (designs, matrices) = quads
        .par_iter()
        .map(|q| -> Result<(Classes<Design>, Classes<SignMatrix>)> {
            let d = incidence_matrix(q)?;
            verify_t_design(&d, 2)?;
            let h = hadamard_from_quadruple(q)?;
            if !verify_hadamard(&h) {
                return Err(Error::NotHadamard(format!("matrix built from {q}")));
            }
            let dc = design_certificate(&d);
            let hc = hadamard_certificate(&h);
            let mut ds = HashMap::new();
            let mut hs = HashMap::new();
            ds.insert(
                dc.fingerprint.clone(),
                (
                    format_design(&d),
                    ClassRep {
                        object: d,
                        source: *q,
                        fingerprint: dc.fingerprint,
                        aut_order: dc.aut_order,
                        members: 1,
                    },
                ),
            );
            hs.insert(
                hc.fingerprint.clone(),
                (
                    format_hadamard(&h),
                    ClassRep {
                        object: h,
                        source: *q,
                        fingerprint: hc.fingerprint,
                        aut_order: hc.aut_order,
                        members: 1,
                    },
                ),
            );
            Ok((ds, hs))
        })
        .try_reduce(|| (HashMap::new(), HashMap::new()), |(d1, h1), (d2, h2)| Ok((merge(d1, d2), merge(h1, h2))))?;
    Ok(ClassificationResult {
        p,
        designs: sorted(designs),
        matrices: sorted(matrices),
        raw_solutions: quads.len(),
        elapsed: start.elapsed(),
    })
}

/// Manifest lines `kind p index fingerprint-hex aut-order source-file`,
/// designs first, each kind sorted by fingerprint.
pub fn manifest(result: &ClassificationResult) -> String {
    let mut out = String::new();
    for (i, r) in result.designs.iter().enumerate() {
        let _ = writeln!(
            out,
            "design {} {} {} {} {}",
            result.p,
            i + 1,
            r.fingerprint_digest(),
            r.aut_order,
            design_file_name(result.p, i + 1)
        );
    }
    for (i, r) in result.matrices.iter().enumerate() {
        let _ = writeln!(
            out,
            "hadamard {} {} {} {} {}",
            result.p,
            i + 1,
            r.fingerprint_digest(),
            r.aut_order,
            hadamard_file_name(result.p, i + 1)
        );
    }
    out
}

fn design_file_name(p: u32, index: usize) -> String {
    format!("D{}_{index:03}.txt", 2 * p + 1)
}

fn hadamard_file_name(p: u32, index: usize) -> String {
    format!("H{}_{index:03}.txt", 2 * p + 2)
}

/// Writes one file per representative, the representative quadruples and
/// `manifest.txt`; returns the manifest path.
pub fn write_classification(result: &ClassificationResult, dir: &Path) -> Result<PathBuf> {
    let io_err =
        |path: &Path, e: std::io::Error| Error::Io { path: path.display().to_string(), message: e.to_string() };
    std::fs::create_dir_all(dir).map_err(|e| io_err(dir, e))?;
    let write = |name: String, text: String| -> Result<()> {
        let path = dir.join(name);
        std::fs::write(&path, text).map_err(|e| io_err(&path, e))
    };
    for (i, r) in result.designs.iter().enumerate() {
        write(design_file_name(result.p, i + 1), format_design(&r.object))?;
    }
    for (i, r) in result.matrices.iter().enumerate() {
        write(hadamard_file_name(result.p, i + 1), format_hadamard(&r.object))?;
    }
    let quads: Vec<CirculantQuadruple> = result.designs.iter().map(|r| r.source).collect();
    write(format!("quadruples_p{}.txt", result.p), format_quadruples(&quads))?;
    let path = dir.join("manifest.txt");
    std::fs::write(&path, manifest(result)).map_err(|e| io_err(&path, e))?;
    Ok(path)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CodeKind {
    C2,
    C2Prime,
    C3,
    C5,
}

impl std::str::FromStr for CodeKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "c2" => Ok(CodeKind::C2),
            "c2prime" | "c2'" => Ok(CodeKind::C2Prime),
            "c3" => Ok(CodeKind::C3),
            "c5" => Ok(CodeKind::C5),
            other => Err(Error::UnknownFamily(other.to_string())),
        }
    }
}

impl std::fmt::Display for CodeKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            CodeKind::C2 => "c2",
            CodeKind::C2Prime => "c2prime",
            CodeKind::C3 => "c3",
            CodeKind::C5 => "c5",
        })
    }
}

#[derive(Debug, Clone, Default)]
pub struct Analysis {
    pub codes: Vec<CodeReport>,
    /// `(kind, aut order) -> number of inputs`.
    pub aut_histogram: BTreeMap<(String, BigUint), usize>,
}

impl std::fmt::Display for Analysis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for r in &self.codes {
            writeln!(f, "{r}")?;
        }
        for ((kind, order), count) in &self.aut_histogram {
            writeln!(f, "aut\t{kind}\t{order}\t{count}")?;
        }
        Ok(())
    }
}

/// Code reports for the requested families and automorphism-order
/// histograms over named inputs. Designs feed C2 and C2', matrices feed C3
/// and C5, quadruple files feed both through their design and matrix.
pub fn analyze(inputs: &[(String, Artifact)], kinds: &[CodeKind], count_limit: f64) -> Result<Analysis> {
    let mut designs: Vec<(String, Design)> = Vec::new();
    let mut matrices: Vec<(String, SignMatrix)> = Vec::new();
    for (name, a) in inputs {
        match a {
            Artifact::Design(d) => designs.push((name.clone(), d.clone())),
            Artifact::Hadamard(h) => matrices.push((name.clone(), h.clone())),
            Artifact::Quadruples(qs) => {
                for (i, q) in qs.iter().enumerate() {
                    let tag = format!("{name}#{}", i + 1);
                    designs.push((tag.clone(), incidence_matrix(q)?));
                    matrices.push((tag, hadamard_from_quadruple(q)?));
                }
            }
        }
    }
    let mut jobs: Vec<(String, CodeKind)> = Vec::new();
    for (name, _) in &designs {
        for &k in kinds.iter().filter(|k| matches!(k, CodeKind::C2 | CodeKind::C2Prime)) {
            jobs.push((name.clone(), k));
        }
    }
    for (name, _) in &matrices {
        for &k in kinds.iter().filter(|k| matches!(k, CodeKind::C3 | CodeKind::C5)) {
            jobs.push((name.clone(), k));
        }
    }
    let by_name_d: HashMap<&str, &Design> = designs.iter().map(|(n, d)| (n.as_str(), d)).collect();
    let by_name_h: HashMap<&str, &SignMatrix> = matrices.iter().map(|(n, h)| (n.as_str(), h)).collect();
    let codes = jobs
        .par_iter()
        .map(|(name, kind)| {
            let code = match kind {
                CodeKind::C2 => code_c2(by_name_d[name.as_str()])?,
                CodeKind::C2Prime => code_c2prime(by_name_d[name.as_str()])?,
                CodeKind::C3 => code_from_sign_matrix(by_name_h[name.as_str()], FieldId::GF3)?,
                CodeKind::C5 => code_from_sign_matrix(by_name_h[name.as_str()], FieldId::GF5)?,
            };
            report(&format!("{name}:{kind}"), &code, count_limit)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut aut_histogram = BTreeMap::new();
    let design_orders: Vec<BigUint> = designs.par_iter().map(|(_, d)| design_certificate(d).aut_order).collect();
    let matrix_orders: Vec<BigUint> = matrices.par_iter().map(|(_, h)| hadamard_certificate(h).aut_order).collect();
    for o in design_orders {
        *aut_histogram.entry(("design".to_string(), o)).or_insert(0) += 1;
    }
    for o in matrix_orders {
        *aut_histogram.entry(("hadamard".to_string(), o)).or_insert(0) += 1;
    }
    Ok(Analysis { codes, aut_histogram })
}

/// Optional cache of `<input-hash> <fingerprint-digest> <aut-order>` lines in
/// `$HADAUT_CACHE_DIR/certificates.txt`. A missing or unreadable cache is
/// treated as empty.
#[derive(Debug, Default)]
pub struct CertificateCache {
    path: Option<PathBuf>,
    entries: BTreeMap<String, (String, String)>,
    dirty: bool,
}

pub const CACHE_ENV: &str = "HADAUT_CACHE_DIR";

impl CertificateCache {
    pub fn from_env() -> Self {
        match std::env::var_os(CACHE_ENV) {
            Some(dir) => Self::open(Path::new(&dir).join("certificates.txt")),
            None => Self::default(),
        }
    }

    pub fn open(path: PathBuf) -> Self {
        let entries = std::fs::read_to_string(&path)
            .map(|text| {
                text.lines()
                    .filter_map(|l| {
                        let mut it = l.split_whitespace();
                        Some((it.next()?.to_string(), (it.next()?.to_string(), it.next()?.to_string())))
                    })
                    .collect()
            })
            .unwrap_or_default();
        CertificateCache { path: Some(path), entries, dirty: false }
    }

    pub fn input_key(bytes: &[u8]) -> String {
        hex::encode(Sha256::digest(bytes))
    }

    pub fn get(&self, key: &str) -> Option<&(String, String)> {
        self.entries.get(key)
    }

    pub fn insert(&mut self, key: String, digest: String, aut_order: String) {
        if self.path.is_some() {
            self.entries.insert(key, (digest, aut_order));
            self.dirty = true;
        }
    }

    pub fn save(&self) -> Result<()> {
        let Some(path) = &self.path else { return Ok(()) };
        if !self.dirty {
            return Ok(());
        }
        if let Some(dir) = path.parent() {
            let _ = std::fs::create_dir_all(dir);
        }
        let text: String = self.entries.iter().map(|(k, (d, a))| format!("{k} {d} {a}\n")).collect();
        std::fs::write(path, text).map_err(|e| Error::Io { path: path.display().to_string(), message: e.to_string() })
    }
}

/// Fingerprint digest and automorphism group order of a design or matrix.
pub fn certify(a: &Artifact) -> Option<(String, BigUint)> {
    match a {
        Artifact::Design(d) => {
            let c = design_certificate(d);
            Some((fingerprint_digest(&c.fingerprint), c.aut_order))
        }
        Artifact::Hadamard(h) => {
            let c = hadamard_certificate(h);
            Some((fingerprint_digest(&c.fingerprint), c.aut_order))
        }
        Artifact::Quadruples(_) => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::ingest;

    #[test]
    fn small_primes() {
        for (p, expect) in [(5, (1, 1)), (7, (3, 3))] {
            let r = classify(p, ClassifyOptions::default()).unwrap();
            assert_eq!(r.counts(), expect, "p = {p}");
        }
    }

    #[test]
    fn reduction_does_not_change_counts() {
        let full = classify(7, ClassifyOptions::default()).unwrap();
        let none = classify(7, ClassifyOptions { reduction: ReductionPolicy::NONE, ..Default::default() }).unwrap();
        assert_eq!(manifest(&full), manifest(&none));
        assert!(none.raw_solutions > full.raw_solutions);
    }

    #[test]
    fn artifacts_round_trip() {
        let r = classify(7, ClassifyOptions::default()).unwrap();
        let dir = std::env::temp_dir().join(format!("hadaut-pipeline-{}", std::process::id()));
        let m = write_classification(&r, &dir).unwrap();
        let text = std::fs::read_to_string(m).unwrap();
        assert_eq!(text.lines().count(), 6);
        for line in text.lines() {
            let f: Vec<&str> = line.split(' ').collect();
            let a = ingest(&dir.join(f[5])).unwrap();
            let (digest, order) = certify(&a).unwrap();
            assert_eq!((digest.as_str(), order.to_string().as_str()), (f[3], f[4]));
        }
        let _ = std::fs::remove_dir_all(&dir);
    }

    #[test]
    fn code_kinds_parse() {
        let kinds: Vec<CodeKind> = "c2,c3,c5,c2prime".split(',').map(|s| s.parse().unwrap()).collect();
        assert_eq!(kinds, vec![CodeKind::C2, CodeKind::C3, CodeKind::C5, CodeKind::C2Prime]);
        assert!("c7".parse::<CodeKind>().is_err());
    }
}
