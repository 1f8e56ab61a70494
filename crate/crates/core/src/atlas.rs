//! The orbit tables as data.
//!
//! One JSON file per case lives in `atlas/`, next to a manifest of SHA-256
//! checksums. The files are compiled into the crate; setting
//! `THETA_ATLAS_PATH` to a directory with the same layout replaces them at
//! run time. Loading checks the checksums first and then the structural
//! invariants of every record, reporting the offending row on failure.
//!
//! Transcription quirks of the printed tables are kept verbatim in the
//! `*_raw` fields next to their normalized values.

pub mod verify;

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::grading::Case;

/// Environment variable naming a directory that overrides the bundled atlas.
pub const ATLAS_PATH_VAR: &str = "THETA_ATLAS_PATH";

const MANIFEST: &str = "manifest.json";

const BUNDLED: [(&str, &str); 8] = [
    ("manifest.json", include_str!("../atlas/manifest.json")),
    ("e7a1.json", include_str!("../atlas/e7a1.json")),
    ("e7a2.json", include_str!("../atlas/e7a2.json")),
    ("e7a3.json", include_str!("../atlas/e7a3.json")),
    ("e7a4.json", include_str!("../atlas/e7a4.json")),
    ("e7a5.json", include_str!("../atlas/e7a5.json")),
    ("e7a6.json", include_str!("../atlas/e7a6.json")),
    ("e7a7.json", include_str!("../atlas/e7a7.json")),
];

/// Orbit counts of the seven tables.
pub const ORBIT_COUNTS: [usize; 7] = [5, 10, 15, 24, 25, 9, 4];

/// Singularity flags of one table row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flags {
    pub spherical: bool,
    pub normal: bool,
    pub cm: bool,
    pub rs: bool,
    pub gorenstein: bool,
}

/// Flags as printed, kept where a printed entry needed normalizing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawFlags {
    pub spherical: String,
    pub normal: String,
    pub cm: String,
    pub rs: String,
    pub gorenstein: String,
}

/// Printed weight lists of a desingularization. `printed` says which of
/// the two lists the table gives: `"xi"` for the quotient side, `"eta"`
/// for the subbundle itself.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Desing {
    pub space: String,
    pub printed: String,
    pub xi: Vec<String>,
    pub eta: Vec<String>,
}

impl Desing {
    /// The printed list, whichever side it is.
    pub fn printed_weights(&self) -> &[String] {
        if self.printed == "xi" {
            &self.xi
        } else {
            &self.eta
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitRecord {
    pub number: usize,
    pub support: String,
    pub support_raw: String,
    pub dim: usize,
    pub rep: String,
    pub rep_raw: String,
    pub degree: u64,
    pub numerator_raw: String,
    pub numerator: Vec<i64>,
    pub flags: Flags,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub flags_raw: Option<RawFlags>,
    /// Flags of the normalization row `n(k)`, printed for non-normal orbits.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub normalization_flags: Option<Flags>,
    pub geometry: String,
    pub covers: Vec<usize>,
    pub desing: Option<Desing>,
}

impl OrbitRecord {
    pub fn is_zero(&self) -> bool {
        self.dim == 0
    }

    /// Whether the support algebra has only `A1` simple components.
    pub fn support_all_a1(&self) -> bool {
        self.support.split('+').all(|part| {
            let t = part.trim();
            let t = t.trim_start_matches(|c: char| c.is_ascii_digit());
            t == "A1" || part.trim() == "0"
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub coeff: i64,
    pub weight: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyLine {
    pub j: usize,
    pub raw: String,
    pub terms: Vec<Term>,
    /// Terms whose printed weight cannot be read.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub malformed: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Erratum {
    pub j: usize,
    pub printed: String,
    pub corrected: Vec<Term>,
    pub certificate: String,
}

/// A printed list of Euler characteristics `χ(Λ^j ξ)` (`kind = "chi"`) or
/// of cohomology groups with their degrees (`kind = "hstar"`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyRecord {
    pub orbit: usize,
    pub kind: String,
    pub notation: String,
    pub lines: Vec<CohomologyLine>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub errata: Vec<Erratum>,
}

impl CohomologyRecord {
    /// The terms to compare against for line `j`, with errata applied.
    /// `None` if the list has no line `j` (meaning the term vanishes).
    pub fn expected(&self, j: usize) -> Option<&[Term]> {
        if let Some(e) = self.errata.iter().find(|e| e.j == j) {
            return Some(&e.corrected);
        }
        self.lines.iter().find(|l| l.j == j).map(|l| l.terms.as_slice())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseRecord {
    pub case: Case,
    pub node: usize,
    pub ambient_dim: usize,
    /// Degree of the invariant where the table states it.
    pub invariant_degree: Option<u64>,
    pub orbits: Vec<OrbitRecord>,
    pub cohomology: Vec<CohomologyRecord>,
}

impl CaseRecord {
    pub fn orbit(&self, number: usize) -> Option<&OrbitRecord> {
        self.orbits.iter().find(|o| o.number == number)
    }

    /// The orbit of full dimension.
    pub fn generic_orbit(&self) -> &OrbitRecord {
        self.orbits.iter().find(|o| o.dim == self.ambient_dim).expect("validated on load")
    }

    pub fn cohomology_of(&self, orbit: usize) -> Option<&CohomologyRecord> {
        self.cohomology.iter().find(|c| c.orbit == orbit)
    }
}

/// The loaded atlas and the checksums it was verified against.
#[derive(Clone, Debug)]
pub struct Atlas {
    pub cases: Vec<CaseRecord>,
    pub checksums: BTreeMap<String, String>,
    /// `"bundled"` or the override directory.
    pub source: String,
}

impl Atlas {
    pub fn case(&self, case: Case) -> &CaseRecord {
        self.cases.iter().find(|c| c.case == case).expect("all cases present")
    }

    pub fn orbit_count(&self) -> usize {
        self.cases.iter().map(|c| c.orbits.len()).sum()
    }

    /// SHA-256 over the manifest's per-file digests, in file order.
    pub fn fingerprint(&self) -> String {
        let mut h = Sha256::new();
        for (name, digest) in &self.checksums {
            h.update(name.as_bytes());
            h.update(digest.as_bytes());
        }
        format!("{:x}", h.finalize())
    }
}

#[derive(Serialize, Deserialize)]
struct Manifest {
    algorithm: String,
    files: BTreeMap<String, String>,
}

/// Load the atlas, honouring `THETA_ATLAS_PATH`.
pub fn load_atlas() -> Result<Atlas> {
    match std::env::var_os(ATLAS_PATH_VAR) {
        Some(dir) if !dir.is_empty() => load_atlas_from(Path::new(&dir)),
        _ => load_bundled(),
    }
}

/// The atlas compiled into the crate.
pub fn load_bundled() -> Result<Atlas> {
    let files: BTreeMap<String, String> =
        BUNDLED.iter().map(|(n, t)| (n.to_string(), t.to_string())).collect();
    load_files(&files, "bundled")
}

/// Load an atlas directory holding `manifest.json` and `e7a1.json` …
/// `e7a7.json`.
pub fn load_atlas_from(dir: &Path) -> Result<Atlas> {
    let mut files = BTreeMap::new();
    let names = std::iter::once(MANIFEST.to_string()).chain(Case::ALL.iter().map(|c| file_name(*c)));
    for name in names {
        let text = std::fs::read_to_string(dir.join(&name))
            .map_err(|e| schema(&name, format!("cannot read: {e}")))?;
        files.insert(name, text);
    }
    load_files(&files, &dir.display().to_string())
}

fn file_name(case: Case) -> String {
    format!("{}.json", case.tag())
}

fn schema(file: &str, msg: impl Into<String>) -> Error {
    Error::Schema { file: file.to_string(), msg: msg.into() }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    format!("{:x}", Sha256::digest(bytes))
}

fn load_files(files: &BTreeMap<String, String>, source: &str) -> Result<Atlas> {
    let manifest: Manifest = serde_json::from_str(&files[MANIFEST])
        .map_err(|e| schema(MANIFEST, e.to_string()))?;
    if manifest.algorithm != "sha256" {
        return Err(schema(MANIFEST, format!("unsupported algorithm `{}`", manifest.algorithm)));
    }
    let mut cases = Vec::new();
    for case in Case::ALL {
        let name = file_name(case);
        let text = &files[&name];
        let want = manifest
            .files
            .get(&name)
            .ok_or_else(|| schema(MANIFEST, format!("no checksum for {name}")))?;
        let got = sha256_hex(text.as_bytes());
        if &got != want {
            return Err(schema(&name, format!("checksum mismatch: manifest {want}, file {got}")));
        }
        let record = parse_case(&name, text)?;
        if record.case != case {
            return Err(schema(&name, format!("file holds case {}", record.case)));
        }
        cases.push(record);
    }
    Ok(Atlas { cases, checksums: manifest.files, source: source.to_string() })
}

/// Parse and validate one case file.
pub fn parse_case(file: &str, text: &str) -> Result<CaseRecord> {
    if text.trim().is_empty() {
        return Err(schema(file, "empty file"));
    }
    let record: CaseRecord = serde_json::from_str(text)
        .map_err(|e| schema(file, format!("line {} column {}: {e}", e.line(), e.column())))?;
    validate(&record).map_err(|msg| schema(file, msg))?;
    Ok(record)
}

/// Structural invariants of a case record; the message names the row.
pub fn validate(c: &CaseRecord) -> std::result::Result<(), String> {
    if c.node != c.case.node() {
        return Err(format!("node {} does not match case {}", c.node, c.case));
    }
    let want = ORBIT_COUNTS[c.case.node() - 1];
    if c.orbits.len() != want {
        return Err(format!("{} orbit rows, expected {want}", c.orbits.len()));
    }
    let dims: BTreeMap<usize, usize> = c.orbits.iter().map(|o| (o.number, o.dim)).collect();
    if dims.keys().copied().ne(0..c.orbits.len()) {
        return Err("orbit numbers are not 0, 1, …, n-1".into());
    }
    for o in &c.orbits {
        let row = |m: String| format!("orbit {}: {m}", o.number);
        if o.dim > c.ambient_dim {
            return Err(row(format!("dim {} exceeds ambient {}", o.dim, c.ambient_dim)));
        }
        if o.numerator.is_empty() {
            return Err(row("empty numerator".into()));
        }
        for &p in &o.covers {
            if !dims.contains_key(&p) {
                return Err(row(format!("covers unknown orbit {p}")));
            }
        }
        if !o.flags.normal && o.normalization_flags.is_none() {
            return Err(row("not normal but no normalization row".into()));
        }
        if let Some(d) = &o.desing {
            if d.printed != "xi" && d.printed != "eta" {
                return Err(row(format!("desing.printed is `{}`", d.printed)));
            }
        }
    }
    let full = c.orbits.iter().filter(|o| o.dim == c.ambient_dim).count();
    if full != 1 {
        return Err(format!("{full} orbits of full dimension, expected 1"));
    }
    let numbers: BTreeSet<usize> = dims.keys().copied().collect();
    for h in &c.cohomology {
        if !numbers.contains(&h.orbit) {
            return Err(format!("cohomology list for unknown orbit {}", h.orbit));
        }
        if !matches!(h.kind.as_str(), "chi" | "hstar") {
            return Err(format!("cohomology list for orbit {}: kind `{}`", h.orbit, h.kind));
        }
    }
    Ok(())
}

/// Serialize a case exactly as stored: pretty JSON with one-space indent.
pub fn case_to_json(c: &CaseRecord) -> Result<String> {
    let mut buf = Vec::new();
    let fmt = serde_json::ser::PrettyFormatter::with_indent(b" ");
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, fmt);
    c.serialize(&mut ser)?;
    Ok(String::from_utf8(buf).expect("serde_json emits UTF-8"))
}

fn pretty(value: &impl Serialize) -> Result<String> {
    let mut buf = Vec::new();
    let fmt = serde_json::ser::PrettyFormatter::with_indent(b" ");
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, fmt);
    value.serialize(&mut ser)?;
    buf.push(b'\n');
    Ok(String::from_utf8(buf).expect("serde_json emits UTF-8"))
}

/// Write case files and a checksum manifest into `dir`, in the layout
/// [`load_atlas_from`] reads.
pub fn write_atlas_dir(dir: &Path, cases: &[&CaseRecord]) -> Result<()> {
    std::fs::create_dir_all(dir)?;
    let mut files = BTreeMap::new();
    for c in cases {
        let text = case_to_json(c)? + "\n";
        let name = file_name(c.case);
        files.insert(name.clone(), sha256_hex(text.as_bytes()));
        std::fs::write(dir.join(name), text)?;
    }
    let manifest = pretty(&Manifest { algorithm: "sha256".into(), files })?;
    std::fs::write(dir.join(MANIFEST), manifest)?;
    Ok(())
}
