//! The line-oriented ideal file format and the bundled corpus.
//!
//! ```text
//! # name: skew_lines_p3
//! # nu: 4
//! ring x0 x1 x2 x3
//! x0*x2
//! x0*x3
//! ```
//!
//! `# key: value` lines carry metadata, other `#` lines and blank lines are
//! ignored, the first remaining line declares the ring and each later line
//! is one generator.

use std::collections::BTreeMap;
use std::path::Path;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::Ideal;
use crate::parse::parse_polynomial;
use crate::poly::{PolyRing, Polynomial};

#[derive(Clone, Debug)]
pub struct IdealFile {
    pub ring: PolyRing,
    pub generators: Vec<Polynomial>,
    pub metadata: BTreeMap<String, String>,
}

impl IdealFile {
    pub fn parse(text: &str, field: Field) -> Result<Self> {
        let mut metadata = BTreeMap::new();
        let mut ring = None;
        let mut generators = Vec::new();
        for (k, raw) in text.lines().enumerate() {
            let line_no = k + 1;
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(c) = line.strip_prefix('#') {
                if let Some((key, value)) = c.split_once(':') {
                    metadata.insert(key.trim().to_string(), value.trim().to_string());
                }
                continue;
            }
            match &ring {
                None => {
                    let mut words = line.split_whitespace();
                    if words.next() != Some("ring") {
                        return Err(Error::Parse { line: line_no, msg: "expected `ring x0 x1 ...`".into() });
                    }
                    let names: Vec<&str> = words.collect();
                    ring = Some(PolyRing::new(&names, field).map_err(|e| Error::Parse { line: line_no, msg: e.to_string() })?);
                }
                Some(r) => {
                    let p = parse_polynomial(r, line).map_err(|e| match e {
                        Error::Parse { msg, .. } => Error::Parse { line: line_no, msg },
                        other => Error::Parse { line: line_no, msg: other.to_string() },
                    })?;
                    if !p.is_homogeneous() {
                        return Err(Error::Parse { line: line_no, msg: format!("generator `{line}` is not homogeneous") });
                    }
                    generators.push(p);
                }
            }
        }
        let ring = ring.ok_or(Error::Parse { line: 0, msg: "missing ring declaration".into() })?;
        Ok(IdealFile { ring, generators, metadata })
    }

    pub fn load(path: &Path, field: Field) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?, field)
    }

    pub fn ideal(&self) -> Result<Ideal> {
        Ideal::new(&self.ring, self.generators.clone())
    }

    pub fn name(&self) -> Option<&str> {
        self.metadata.get("name").map(|s| s.as_str())
    }

    /// An integer-valued expectation such as `nu`.
    pub fn expected_int(&self, key: &str) -> Option<i64> {
        self.metadata.get(key)?.parse().ok()
    }

    pub fn expected_bool(&self, key: &str) -> Option<bool> {
        self.metadata.get(key)?.parse().ok()
    }

    /// Text that parses back to the same file.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (k, v) in &self.metadata {
            s.push_str(&format!("# {k}: {v}\n"));
        }
        s.push_str(&format!("ring {}\n", self.ring.names().join(" ")));
        for g in &self.generators {
            s.push_str(&format!("{g}\n"));
        }
        s
    }
}

macro_rules! corpus {
    ($($name:literal),* $(,)?) => {
        /// Bundled instances, by name.
        pub const CORPUS: &[(&str, &str)] = &[
            $(($name, include_str!(concat!("../corpus/", $name, ".ideal")))),*
        ];
    };
}

corpus!(
    "ci_222_p4",
    "ci_22_p3",
    "conic_line_p4",
    "conic_p4",
    "double_line_p3",
    "line_p4",
    "line_x0x1_p3",
    "line_x0x2_p3",
    "line_x2x3_p3",
    "maximal_square_p1",
    "plane_cubic_p4",
    "plane_p5",
    "point_p3_generic",
    "points2_p3",
    "points3_p3",
    "rational_quartic_p3",
    "rational_quartic_p4",
    "skew_lines_p3",
    "twisted_cubic_p3",
    "twisted_cubic_p4",
    "two_lines_p4",
    "two_planes_p5",
);

/// The manifest table, one row per corpus entry.
pub const MANIFEST: &str = include_str!("../corpus/manifest.tsv");

pub fn corpus_names() -> impl Iterator<Item = &'static str> {
    CORPUS.iter().map(|(n, _)| *n)
}

pub fn corpus_entry(name: &str, field: Field) -> Result<IdealFile> {
    let (_, text) = CORPUS
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| Error::Io(format!("no corpus entry named `{name}`")))?;
    IdealFile::parse(text, field)
}

/// Loads a path, falling back to a corpus name when no such file exists.
pub fn resolve(arg: &str, field: Field) -> Result<IdealFile> {
    let p = Path::new(arg);
    if p.exists() {
        IdealFile::load(p, field)
    } else if CORPUS.iter().any(|(n, _)| *n == arg) {
        corpus_entry(arg, field)
    } else {
        Err(Error::Io(format!("{arg}: no such file or corpus entry")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let f = corpus_entry("conic_line_p4", Field::default()).unwrap();
        assert_eq!(f.name(), Some("conic_line_p4"));
        assert_eq!(f.generators.len(), 7);
        let again = IdealFile::parse(&f.to_text(), Field::default()).unwrap();
        assert_eq!(again.generators, f.generators);
        assert_eq!(again.metadata, f.metadata);
    }

    #[test]
    fn parse_errors_carry_lines() {
        let e = IdealFile::parse("ring x y\nx^2\nx + y^2\n", Field::default()).unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }), "{e:?}");
        let e = IdealFile::parse("# only comments\n", Field::default()).unwrap_err();
        assert!(matches!(e, Error::Parse { .. }));
        let e = IdealFile::parse("ring x y\nx + z\n", Field::default()).unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn manifest_lists_the_corpus() {
        let rows: Vec<&str> = MANIFEST.lines().skip(1).map(|l| l.split('\t').next().unwrap()).collect();
        assert_eq!(rows, corpus_names().collect::<Vec<_>>());
        for line in MANIFEST.lines().skip(1) {
            let cols: Vec<&str> = line.split('\t').collect();
            let f = corpus_entry(cols[0], Field::default()).unwrap();
            for (k, key) in ["nu", "alpha", "cm", "h1_total", "source"].iter().enumerate() {
                assert_eq!(f.metadata.get(*key).map_or("-", |s| s.as_str()), cols[k + 1], "{} {key}", cols[0]);
            }
        }
    }
}
