//! Eternal-guardability certificates: a text format carrying the graph
//! fingerprint, the verdict, and the safe family, plus an independent
//! re-checker that never touches the fixed-point code path (membership
//! is by sorted search, not colex ranks).

use super::family::FixedPointRun;
use crate::bits;
use crate::graph::Graph;
use thiserror::Error;

pub const CERT_FORMAT: &str = "eternal-cert v1";

/// 64-bit FNV-1a over the sorted edge list rendered as `u v\n` lines.
pub fn edge_hash(g: &Graph) -> u64 {
    let mut hash: u64 = 0xcbf29ce484222325;
    let mut eat = |byte: u8| {
        hash ^= byte as u64;
        hash = hash.wrapping_mul(0x100000001b3);
    };
    for (u, v) in g.edges() {
        for byte in format!("{u} {v}\n").bytes() {
            eat(byte);
        }
    }
    hash
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Guardable,
    NotGuardable,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Guardable => "guardable",
            Verdict::NotGuardable => "not-guardable",
        }
    }
}

/// A parsed or freshly produced certificate document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EternalCertificate {
    pub n: usize,
    pub m: usize,
    pub edge_hash: u64,
    pub k: usize,
    pub verdict: Verdict,
    pub configs: Vec<Vec<usize>>,
}

impl EternalCertificate {
    pub fn from_run(g: &Graph, k: usize, run: &FixedPointRun) -> EternalCertificate {
        let configs: Vec<Vec<usize>> = run.family.iter().collect();
        EternalCertificate {
            n: g.n(),
            m: g.m(),
            edge_hash: edge_hash(g),
            k,
            verdict: if configs.is_empty() {
                Verdict::NotGuardable
            } else {
                Verdict::Guardable
            },
            configs,
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(CERT_FORMAT);
        out.push('\n');
        out.push_str(&format!(
            "{} {} {:016x} {} {} {}\n",
            self.n,
            self.m,
            self.edge_hash,
            self.k,
            self.verdict.as_str(),
            self.configs.len()
        ));
        for config in &self.configs {
            let line: Vec<String> = config.iter().map(|v| v.to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn parse(text: &str) -> Result<EternalCertificate, CertParseError> {
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
        let (_, header) = lines
            .next()
            .ok_or_else(|| CertParseError::at(1, "empty certificate"))?;
        if header != CERT_FORMAT {
            return Err(CertParseError::at(1, format!("unknown format {header:?}")));
        }
        let (_, meta) = lines
            .next()
            .ok_or_else(|| CertParseError::at(2, "missing metadata line"))?;
        let fields: Vec<&str> = meta.split(' ').collect();
        if fields.len() != 6 {
            return Err(CertParseError::at(2, "expected `n m edgehash k verdict count`"));
        }
        let bad = |what: &str| CertParseError::at(2, format!("bad {what} field"));
        let n: usize = fields[0].parse().map_err(|_| bad("n"))?;
        let m: usize = fields[1].parse().map_err(|_| bad("m"))?;
        let edge_hash = u64::from_str_radix(fields[2], 16).map_err(|_| bad("edgehash"))?;
        let k: usize = fields[3].parse().map_err(|_| bad("k"))?;
        let verdict = match fields[4] {
            "guardable" => Verdict::Guardable,
            "not-guardable" => Verdict::NotGuardable,
            other => return Err(CertParseError::at(2, format!("bad verdict {other:?}"))),
        };
        let count: usize = fields[5].parse().map_err(|_| bad("count"))?;

        let mut configs = Vec::with_capacity(count);
        for (lineno, line) in lines {
            let mut verts = Vec::new();
            for tok in line.split(' ') {
                let v: usize = tok.parse().map_err(|_| {
                    CertParseError::at(lineno, format!("malformed config line {line:?}"))
                })?;
                verts.push(v);
            }
            if verts.is_empty() || verts.windows(2).any(|w| w[0] >= w[1]) {
                return Err(CertParseError::at(
                    lineno,
                    format!("config line not strictly ascending: {line:?}"),
                ));
            }
            configs.push(verts);
        }
        if configs.len() != count {
            return Err(CertParseError::at(
                configs.len() + 3,
                format!("header declares {count} configs, found {}", configs.len()),
            ));
        }
        Ok(EternalCertificate {
            n,
            m,
            edge_hash,
            k,
            verdict,
            configs,
        })
    }
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("certificate line {line}: {message}")]
pub struct CertParseError {
    pub line: usize,
    pub message: String,
}

impl CertParseError {
    fn at(line: usize, message: impl Into<String>) -> CertParseError {
        CertParseError {
            line,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerifyOutcome {
    Accepted,
    /// First violated condition, human readable.
    Rejected(String),
}

/// Sorted-order membership index over the certificate's configs. Packs a
/// config into a u128 when it fits (n < 256, k <= 16); otherwise falls
/// back to lexicographic search over the vertex lists.
enum MemberIndex {
    Packed(Vec<u128>),
    Plain(Vec<Vec<usize>>),
}

impl MemberIndex {
    fn pack(config: &[usize]) -> u128 {
        let mut key = 0u128;
        for &v in config {
            key = (key << 8) | v as u128;
        }
        key
    }

    fn build(configs: &[Vec<usize>], n: usize, k: usize) -> Result<MemberIndex, String> {
        if n < 256 && k <= 16 {
            let mut keys: Vec<u128> = configs.iter().map(|c| Self::pack(c)).collect();
            keys.sort_unstable();
            if keys.windows(2).any(|w| w[0] == w[1]) {
                return Err("duplicate config line".into());
            }
            Ok(MemberIndex::Packed(keys))
        } else {
            let mut sorted = configs.to_vec();
            sorted.sort_unstable();
            if sorted.windows(2).any(|w| w[0] == w[1]) {
                return Err("duplicate config line".into());
            }
            Ok(MemberIndex::Plain(sorted))
        }
    }

    fn contains(&self, config: &[usize]) -> bool {
        match self {
            MemberIndex::Packed(keys) => keys.binary_search(&Self::pack(config)).is_ok(),
            MemberIndex::Plain(sorted) => sorted
                .binary_search_by(|probe| probe.as_slice().cmp(config))
                .is_ok(),
        }
    }
}

/// Independent re-check of a certificate against a graph: fingerprint,
/// verdict consistency, and for every listed configuration the guard
/// count, domination, and the one-move closure property against the
/// listed family itself.
pub fn verify_certificate(
    g: &Graph,
    cert: &EternalCertificate,
) -> Result<VerifyOutcome, CertError> {
    if cert.n != g.n() || cert.m != g.m() || cert.edge_hash != edge_hash(g) {
        return Err(CertError::FingerprintMismatch {
            expected: (g.n(), g.m(), edge_hash(g)),
            found: (cert.n, cert.m, cert.edge_hash),
        });
    }
    let n = g.n();
    let k = cert.k;
    let reject = |reason: String| Ok(VerifyOutcome::Rejected(reason));
    if k == 0 || k > n {
        return reject(format!("guard count {k} out of range 1..={n}"));
    }
    match cert.verdict {
        Verdict::Guardable if cert.configs.is_empty() => {
            return reject("verdict guardable but family is empty".into())
        }
        Verdict::NotGuardable if !cert.configs.is_empty() => {
            return reject("verdict not-guardable but family is nonempty".into())
        }
        _ => {}
    }
    for config in &cert.configs {
        if config.len() != k {
            return reject(format!(
                "config {config:?} has {} vertices, expected {k}",
                config.len()
            ));
        }
        if let Some(&v) = config.iter().find(|&&v| v >= n) {
            return reject(format!("config {config:?} contains vertex {v} out of range"));
        }
    }
    let index = match MemberIndex::build(&cert.configs, n, k) {
        Ok(index) => index,
        Err(reason) => return reject(reason),
    };

    let words = g.words();
    let mut occ = vec![0u64; words];
    let mut closed = vec![0u64; words];
    let mut full = vec![0u64; words];
    bits::fill_all(&mut full, n);
    let mut successor = vec![0usize; k];

    for config in &cert.configs {
        occ.iter_mut().for_each(|w| *w = 0);
        for &v in config {
            bits::set(&mut occ, v);
        }
        closed.copy_from_slice(&occ);
        for &v in config {
            for (acc, w) in closed.iter_mut().zip(g.row(v)) {
                *acc |= w;
            }
        }
        if closed != full {
            let uncovered = (0..n).find(|&v| !bits::test(&closed, v)).unwrap();
            return reject(format!(
                "config {config:?} does not dominate the graph (vertex {uncovered} uncovered)"
            ));
        }
        for v in 0..n {
            if bits::test(&occ, v) {
                continue;
            }
            let mut defended = false;
            for &u in config {
                if !g.has_edge(u, v) {
                    continue;
                }
                // successor = config with u replaced by v, kept sorted
                let mut idx = 0;
                let mut placed = false;
                for &c in config {
                    if c == u {
                        continue;
                    }
                    if !placed && v < c {
                        successor[idx] = v;
                        idx += 1;
                        placed = true;
                    }
                    successor[idx] = c;
                    idx += 1;
                }
                if !placed {
                    successor[idx] = v;
                }
                if index.contains(&successor) {
                    defended = true;
                    break;
                }
            }
            if !defended {
                return reject(format!(
                    "closure violated at attack vertex {v} (config {config:?} has no defense)"
                ));
            }
        }
    }
    Ok(VerifyOutcome::Accepted)
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum CertError {
    #[error("fingerprint mismatch: graph is (n={}, m={}, hash={:016x}), certificate claims (n={}, m={}, hash={:016x})",
        expected.0, expected.1, expected.2, found.0, found.1, found.2)]
    FingerprintMismatch {
        expected: (usize, usize, u64),
        found: (usize, usize, u64),
    },
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eternal::{safe_family, Limits};
    use crate::graph::{complete_graph, Graph};

    #[test]
    fn edge_hash_is_stable() {
        let k3 = complete_graph(3).unwrap();
        assert_eq!(edge_hash(&k3), edge_hash(&k3));
        let k3_again = Graph::from_edges(3, [(2, 1), (1, 0), (0, 2)]).unwrap();
        assert_eq!(edge_hash(&k3), edge_hash(&k3_again));
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_ne!(edge_hash(&k3), edge_hash(&p3));
    }

    #[test]
    fn roundtrip_and_verify_k3() {
        let k3 = complete_graph(3).unwrap();
        let run = safe_family(&k3, 1, &Limits::default()).unwrap();
        let cert = EternalCertificate::from_run(&k3, 1, &run);
        assert_eq!(cert.verdict, Verdict::Guardable);
        let text = cert.to_text();
        let parsed = EternalCertificate::parse(&text).unwrap();
        assert_eq!(parsed, cert);
        assert_eq!(verify_certificate(&k3, &parsed).unwrap(), VerifyOutcome::Accepted);
    }

    #[test]
    fn forged_p3_cert_rejected_with_closure_violation() {
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let cert = EternalCertificate {
            n: 3,
            m: 2,
            edge_hash: edge_hash(&p3),
            k: 1,
            verdict: Verdict::Guardable,
            configs: vec![vec![1]],
        };
        match verify_certificate(&p3, &cert).unwrap() {
            VerifyOutcome::Rejected(reason) => {
                assert!(reason.starts_with("closure violated at attack vertex 0"), "{reason}");
            }
            other => panic!("expected rejection, got {other:?}"),
        }
    }

    #[test]
    fn fingerprint_mismatch_is_an_error() {
        let k3 = complete_graph(3).unwrap();
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let run = safe_family(&k3, 1, &Limits::default()).unwrap();
        let cert = EternalCertificate::from_run(&k3, 1, &run);
        assert!(verify_certificate(&p3, &cert).is_err());
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        assert!(EternalCertificate::parse("").is_err());
        assert!(EternalCertificate::parse("wrong\n").is_err());
        let e = EternalCertificate::parse("eternal-cert v1\n3 3 0 1 guardable 1\n1 0\n").unwrap_err();
        assert_eq!(e.line, 3);
        let e = EternalCertificate::parse("eternal-cert v1\n3 3 0 1 guardable 2\n0\n").unwrap_err();
        assert!(e.message.contains("declares 2"));
    }
}
