//! Text formats for Hadamard matrices, designs and circulant quadruples.

use std::fmt::Write as _;
use std::path::Path;

use crate::construct::{verify_hadamard, verify_t_design, Design, SignMatrix};
use crate::error::{Error, Result};
use crate::search::CirculantQuadruple;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Artifact {
    Hadamard(SignMatrix),
    Design(Design),
    Quadruples(Vec<CirculantQuadruple>),
}

impl Artifact {
    pub fn kind(&self) -> &'static str {
        match self {
            Artifact::Hadamard(_) => "hadamard",
            Artifact::Design(_) => "design",
            Artifact::Quadruples(_) => "quadruples",
        }
    }
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, column, message: message.into() }
}

/// Non-blank lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().map(|(i, l)| (i + 1, l.trim_end())).filter(|(_, l)| !l.trim().is_empty())
}

fn header_numbers(line_no: usize, line: &str, tag: char, count: usize) -> Result<Vec<usize>> {
    let mut toks = line.split_whitespace();
    toks.next();
    let nums: Vec<usize> = toks
        .map(|t| t.parse().map_err(|_| parse_err(line_no, 1, format!("bad number {t:?} in {tag} header"))))
        .collect::<Result<_>>()?;
    if nums.len() != count {
        return Err(parse_err(line_no, 1, format!("{tag} header needs {count} numbers, got {}", nums.len())));
    }
    Ok(nums)
}

/// Parses any supported format without verifying it.
pub fn parse_artifact(text: &str) -> Result<Artifact> {
    let mut lines = content_lines(text);
    let Some((first_no, first)) = lines.next() else {
        return Err(parse_err(1, 1, "empty input"));
    };
    match first.trim_start().chars().next() {
        Some('H') => {
            let n = header_numbers(first_no, first.trim(), 'H', 1)?[0];
            let mut rows = Vec::with_capacity(n);
            for (no, line) in lines {
                let row: Vec<i8> = line
                    .chars()
                    .enumerate()
                    .map(|(c, ch)| match ch {
                        '+' => Ok(1),
                        '-' => Ok(-1),
                        _ => Err(parse_err(no, c + 1, format!("expected '+' or '-', found {ch:?}"))),
                    })
                    .collect::<Result<_>>()?;
                if row.len() != n {
                    return Err(parse_err(
                        no,
                        row.len().min(n) + 1,
                        format!("row has {} entries, expected {n}", row.len()),
                    ));
                }
                rows.push(row);
            }
            if rows.len() != n {
                return Err(parse_err(first_no, 1, format!("expected {n} rows, found {}", rows.len())));
            }
            Ok(Artifact::Hadamard(SignMatrix::from_rows(&rows)?))
        }
        Some('D') => {
            let nums = header_numbers(first_no, first.trim(), 'D', 3)?;
            let (v, b, k) = (nums[0], nums[1], nums[2]);
            let mut rows = Vec::with_capacity(b);
            for (no, line) in lines {
                let row: Vec<u8> = line
                    .chars()
                    .enumerate()
                    .map(|(c, ch)| match ch {
                        '0' => Ok(0),
                        '1' => Ok(1),
                        _ => Err(parse_err(no, c + 1, format!("expected '0' or '1', found {ch:?}"))),
                    })
                    .collect::<Result<_>>()?;
                if row.len() != v {
                    return Err(parse_err(
                        no,
                        row.len().min(v) + 1,
                        format!("row has {} entries, expected {v}", row.len()),
                    ));
                }
                let weight = row.iter().filter(|&&x| x == 1).count();
                if weight != k {
                    return Err(Error::DesignViolation(format!(
                        "block on line {no} has {weight} points, header says k = {k}"
                    )));
                }
                rows.push(row);
            }
            if rows.len() != b {
                return Err(parse_err(first_no, 1, format!("expected {b} blocks, found {}", rows.len())));
            }
            Ok(Artifact::Design(Design::from_rows(&rows)?))
        }
        _ => {
            let all: Vec<(usize, &str)> = std::iter::once((first_no, first)).chain(lines).collect();
            let one_based = detect_one_based(&all)?;
            let quads = all
                .iter()
                .map(|&(no, line)| {
                    CirculantQuadruple::parse_line(line, one_based).map_err(|e| match e {
                        Error::Parse { column, message, .. } => Error::Parse { line: no, column, message },
                        other => other,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Artifact::Quadruples(quads))
        }
    }
}

/// Published support lists use residues `1..=p`; a residue equal to `p`
/// marks the file as 1-based, a `0` as 0-based.
fn detect_one_based(lines: &[(usize, &str)]) -> Result<bool> {
    let (mut zero, mut top) = (None, None);
    for &(no, line) in lines {
        let Some((head, rest)) = line.split_once(':') else { continue };
        let Ok(p) = head.trim().parse::<u32>() else { continue };
        for tok in rest.split(|c: char| c == '|' || c.is_whitespace()) {
            match tok.parse::<u32>() {
                Ok(0) => zero = zero.or(Some(no)),
                Ok(x) if x == p => top = top.or(Some(no)),
                _ => {}
            }
        }
    }
    match (zero, top) {
        (Some(a), Some(b)) => Err(parse_err(a.max(b), 1, "file mixes residue 0 (0-based) with residue p (1-based)")),
        (None, Some(_)) => Ok(true),
        _ => Ok(false),
    }
}

/// Checks the identities each artifact must satisfy.
pub fn verify_artifact(a: &Artifact) -> Result<()> {
    match a {
        Artifact::Hadamard(h) => {
            if verify_hadamard(h) {
                Ok(())
            } else {
                Err(Error::NotHadamard(describe_gram_failure(h)))
            }
        }
        Artifact::Design(d) => verify_t_design(d, 2).map(|_| ()),
        Artifact::Quadruples(qs) => qs.iter().try_for_each(|q| q.validate()),
    }
}

fn describe_gram_failure(h: &SignMatrix) -> String {
    let n = h.order();
    for i in 0..n {
        for j in i..n {
            let s: i32 = h.row(i).iter().zip(h.row(j)).map(|(&a, &b)| (a * b) as i32).sum();
            let expect = if i == j { n as i32 } else { 0 };
            if s != expect {
                return format!("H H^T != {n} I: entry ({i}, {j}) is {s}");
            }
        }
    }
    "H H^T = n I holds".into()
}

/// Reads, parses and verifies a file.
pub fn ingest(path: &Path) -> Result<Artifact> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Io { path: path.display().to_string(), message: e.to_string() })?;
    let a = parse_artifact(&text)?;
    verify_artifact(&a)?;
    Ok(a)
}

pub fn format_hadamard(h: &SignMatrix) -> String {
    let mut s = format!("H {}\n", h.order());
    for row in h.rows() {
        s.extend(row.iter().map(|&x| if x == 1 { '+' } else { '-' }));
        s.push('\n');
    }
    s
}

pub fn format_design(d: &Design) -> String {
    let k = d.block_sizes().first().copied().unwrap_or(0);
    let mut s = String::new();
    let _ = writeln!(s, "D {} {} {k}", d.points(), d.blocks());
    for row in d.rows() {
        s.extend(row.iter().map(|&x| if x == 1 { '1' } else { '0' }));
        s.push('\n');
    }
    s
}

pub fn format_quadruples(qs: &[CirculantQuadruple]) -> String {
    qs.iter().map(|q| format!("{q}\n")).collect()
}

pub fn format_artifact(a: &Artifact) -> String {
    match a {
        Artifact::Hadamard(h) => format_hadamard(h),
        Artifact::Design(d) => format_design(d),
        Artifact::Quadruples(qs) => format_quadruples(qs),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{incidence_matrix, paley_type_ii};
    use crate::search::{enumerate_quadruples, ReductionPolicy};

    #[test]
    fn hadamard_round_trip() {
        let h = paley_type_ii(5).unwrap();
        let text = format_hadamard(&h);
        assert!(text.starts_with("H 12\n"));
        assert_eq!(parse_artifact(&text).unwrap(), Artifact::Hadamard(h));
    }

    #[test]
    fn design_round_trip_and_weight_check() {
        let q = enumerate_quadruples(7, ReductionPolicy::FULL).unwrap()[1];
        let d = incidence_matrix(&q).unwrap();
        let text = format_design(&d);
        assert!(text.starts_with("D 15 15 7\n"));
        let back = parse_artifact(&text).unwrap();
        verify_artifact(&back).unwrap();
        let Artifact::Design(back) = back else { panic!() };
        assert_eq!(back.rows().collect::<Vec<_>>(), d.rows().collect::<Vec<_>>());
        let broken = text.replacen("D 15 15 7\n1", "D 15 15 7\n0", 1);
        assert!(matches!(parse_artifact(&broken), Err(Error::DesignViolation(_))));
    }

    #[test]
    fn parse_errors_carry_positions() {
        let err = parse_artifact("H 2\n++\n+x\n").unwrap_err();
        assert_eq!(err, parse_err(3, 2, "expected '+' or '-', found 'x'"));
        let err = parse_artifact("D 3 2 2\n110\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
        let err = parse_artifact("5: 0 1 | 0 2 | 1 2 | 0 3\n5: 0 1 | 0 x | 1 2 | 0 3\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err:?}");
    }

    #[test]
    fn non_hadamard_names_the_identity() {
        let a = parse_artifact("H 2\n++\n++\n").unwrap();
        let e = verify_artifact(&a).unwrap_err().to_string();
        assert!(e.contains("H H^T"), "{e}");
    }

    #[test]
    fn one_based_quadruples_are_detected() {
        let zero = parse_artifact("5: 0 1 | 0 2 | 1 2 | 0 3\n").unwrap();
        let one = parse_artifact("5: 1 2 | 1 3 | 2 3 | 1 4\n5: 1 5 | 1 3 | 2 3 | 1 4\n").unwrap();
        let Artifact::Quadruples(z) = zero else { panic!() };
        let Artifact::Quadruples(o) = one else { panic!() };
        assert_eq!(z[0], o[0]);
        assert_eq!(o[1].sm.elements(), vec![0, 4]);
        assert!(parse_artifact("5: 0 5 | 1 3 | 2 3 | 1 4\n").is_err());
    }
}
