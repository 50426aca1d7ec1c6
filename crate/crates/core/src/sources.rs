//! Named producers of simple continued fractions.
//!
//! Every source implements [`ConstantSource`] and is registered by name in a
//! [`SourceRegistry`]; callers pick one at runtime with a spec such as `pi`
//! or `sqrt:7`.
//!
//! Tabulated constants (`pi`, `log2_3`) ship as data files: one partial
//! quotient per line in decimal ASCII, `#` starting a comment line. A
//! directory given explicitly or through `SUBCF_DATA_DIR` overrides the
//! copies compiled into the library.

use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::converter::SimpleCf;
use crate::error::{Error, Result};
use crate::stream::{Periodic, Repeat, Table};

/// Environment variable naming a directory of `<name>.txt` tables.
pub const DATA_DIR_ENV: &str = "SUBCF_DATA_DIR";

const PI_DATA: &str = include_str!("../data/pi.txt");
const LOG2_3_DATA: &str = include_str!("../data/log2_3.txt");

/// Leading partial quotients printed alongside the worked examples these
/// tables are checked against.
pub const PI_PREFIX: [i64; 9] = [3, 7, 15, 1, 292, 1, 1, 1, 2];
pub const LOG2_3_PREFIX: [i64; 9] = [1, 1, 1, 2, 2, 3, 1, 5, 2];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    /// Terms quoted in the reference derivations.
    Reference,
    /// Terms from an offline high-precision computation.
    BundledData,
}

/// A finite list of simple continued fraction terms for a named constant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstantTable {
    name: String,
    quotients: Vec<BigInt>,
    provenance: Provenance,
}

impl ConstantTable {
    pub fn new(name: impl Into<String>, quotients: Vec<BigInt>, provenance: Provenance) -> Result<Self> {
        let name = name.into();
        if quotients.is_empty() {
            return Err(Error::Domain(format!("table `{name}` is empty")));
        }
        if let Some((i, t)) = quotients.iter().enumerate().skip(1).find(|(_, t)| !t.is_positive()) {
            return Err(Error::Domain(format!(
                "table `{name}`: term {t} at index {i} is below 1"
            )));
        }
        Ok(ConstantTable {
            name,
            quotients,
            provenance,
        })
    }

    /// Parses the data file format.
    pub fn parse(name: impl Into<String>, text: &str, provenance: Provenance) -> Result<Self> {
        let name = name.into();
        let mut quotients = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let digits = line.strip_prefix('-').unwrap_or(line);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::Parse(format!(
                    "table `{name}` line {}: `{line}` is not an integer",
                    lineno + 1
                )));
            }
            quotients.push(line.parse().expect("validated digits"));
        }
        Self::new(name, quotients, provenance)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn quotients(&self) -> &[BigInt] {
        &self.quotients
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    /// A generator over the table that reports exhaustion at its end.
    pub fn stream(&self) -> SimpleCf {
        SimpleCf::generator(Table::new(self.name.clone(), self.quotients.clone()))
    }
}

/// A named, runtime-selectable producer of a simple continued fraction.
pub trait ConstantSource: Send + Sync {
    fn name(&self) -> &str;

    /// One-line description for listings.
    fn summary(&self) -> String;

    /// Opens a fresh stream. `param` is the text after `name:` in a spec.
    fn open(&self, param: Option<&str>) -> Result<SimpleCf>;
}

/// The golden ratio: `[1; 1, 1, ...]`.
#[derive(Debug, Default)]
pub struct Phi;

impl ConstantSource for Phi {
    fn name(&self) -> &str {
        "phi"
    }

    fn summary(&self) -> String {
        "golden ratio (1 + sqrt 5)/2 = [1; 1, 1, ...]".into()
    }

    fn open(&self, param: Option<&str>) -> Result<SimpleCf> {
        no_param(self.name(), param)?;
        Ok(const_phi())
    }
}

/// A constant read from a bundled table.
pub struct Tabulated {
    name: &'static str,
    label: &'static str,
    embedded: &'static str,
    reference_prefix: &'static [i64],
    data_dir: Option<PathBuf>,
}

impl Tabulated {
    pub fn pi(data_dir: Option<PathBuf>) -> Self {
        Tabulated {
            name: "pi",
            label: "pi",
            embedded: PI_DATA,
            reference_prefix: &PI_PREFIX,
            data_dir,
        }
    }

    pub fn log2_3(data_dir: Option<PathBuf>) -> Self {
        Tabulated {
            name: "log2_3",
            label: "log2(3)",
            embedded: LOG2_3_DATA,
            reference_prefix: &LOG2_3_PREFIX,
            data_dir,
        }
    }

    /// The terms quoted in the worked example.
    pub fn reference_table(&self) -> ConstantTable {
        let q = self.reference_prefix.iter().map(|&t| BigInt::from(t)).collect();
        ConstantTable::new(self.name, q, Provenance::Reference).expect("valid prefix")
    }

    /// Loads the full table and checks it against the quoted prefix.
    pub fn load(&self) -> Result<ConstantTable> {
        let table = match &self.data_dir {
            Some(dir) => {
                let path = dir.join(format!("{}.txt", self.name));
                let text = read_table_file(&path)?;
                ConstantTable::parse(self.name, &text, Provenance::BundledData)?
            }
            None => ConstantTable::parse(self.name, self.embedded, Provenance::BundledData)?,
        };
        let expected = self.reference_table();
        let n = expected.quotients().len().min(table.quotients().len());
        if table.quotients()[..n] != expected.quotients()[..n] {
            return Err(Error::Domain(format!(
                "table `{}` disagrees with the reference prefix {:?}",
                self.name, self.reference_prefix
            )));
        }
        Ok(table)
    }
}

fn read_table_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Domain(format!("cannot read {}: {e}", path.display())))
}

impl ConstantSource for Tabulated {
    fn name(&self) -> &str {
        self.name
    }

    fn summary(&self) -> String {
        match &self.data_dir {
            Some(dir) => format!("{} (table from {})", self.label, dir.display()),
            None => format!("{} (bundled table)", self.label),
        }
    }

    fn open(&self, param: Option<&str>) -> Result<SimpleCf> {
        no_param(self.name, param)?;
        Ok(self.load()?.stream())
    }
}

impl fmt::Debug for Tabulated {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Tabulated")
            .field("name", &self.name)
            .field("data_dir", &self.data_dir)
            .finish()
    }
}

/// Square roots of non-square positive integers: `sqrt:d`.
#[derive(Debug, Default)]
pub struct Sqrt;

impl ConstantSource for Sqrt {
    fn name(&self) -> &str {
        "sqrt"
    }

    fn summary(&self) -> String {
        "sqrt:d, square root of a non-square integer d >= 2 (periodic)".into()
    }

    fn open(&self, param: Option<&str>) -> Result<SimpleCf> {
        let p = param.ok_or_else(|| Error::Parse("`sqrt` needs an argument, e.g. sqrt:2".into()))?;
        if p.is_empty() || !p.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Parse(format!("`sqrt:{p}`: expected a positive integer")));
        }
        sqrt_stream(&p.parse().expect("validated digits"))
    }
}

fn no_param(name: &str, param: Option<&str>) -> Result<()> {
    match param {
        None => Ok(()),
        Some(p) => Err(Error::Parse(format!("`{name}` takes no argument, got `{p}`"))),
    }
}

pub fn const_phi() -> SimpleCf {
    SimpleCf::generator(Repeat(BigInt::one()))
}

pub fn const_pi() -> Result<SimpleCf> {
    Tabulated::pi(None).open(None)
}

pub fn const_log2_3() -> Result<SimpleCf> {
    Tabulated::log2_3(None).open(None)
}

/// The periodic simple continued fraction of `sqrt(d)`.
///
/// Uses the recurrence `m' = q a - m`, `q' = (d - m'^2)/q`,
/// `a' = floor((a0 + m')/q')`; the period ends at the first `a' = 2 a0`.
pub fn sqrt_stream(d: &BigInt) -> Result<SimpleCf> {
    if d < &BigInt::from(2) {
        return Err(Error::Domain(format!("sqrt needs d >= 2, got {d}")));
    }
    let a0 = d.sqrt();
    if &a0 * &a0 == *d {
        return Err(Error::Domain(format!("{d} is a perfect square")));
    }
    let two_a0 = &a0 * 2;
    let (mut m, mut q, mut a) = (BigInt::zero(), BigInt::one(), a0.clone());
    let mut period = Vec::new();
    loop {
        m = &q * &a - &m;
        q = (d - &m * &m) / &q;
        a = (&a0 + &m) / &q;
        period.push(a.clone());
        if a == two_a0 {
            break;
        }
    }
    Ok(SimpleCf::generator(Periodic::new(vec![a0], period)))
}

/// Name-indexed collection of sources.
#[derive(Default)]
pub struct SourceRegistry {
    sources: BTreeMap<String, Box<dyn ConstantSource>>,
}

impl SourceRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    /// `phi`, `pi`, `log2_3` and `sqrt`, with tables from `data_dir` if given.
    pub fn with_builtins(data_dir: Option<PathBuf>) -> Self {
        let mut r = Self::new();
        r.register(Box::new(Phi));
        r.register(Box::new(Tabulated::pi(data_dir.clone())));
        r.register(Box::new(Tabulated::log2_3(data_dir)));
        r.register(Box::new(Sqrt));
        r
    }

    /// Built-ins, reading tables from `SUBCF_DATA_DIR` when it is set.
    pub fn from_env() -> Self {
        let dir = std::env::var_os(DATA_DIR_ENV)
            .filter(|v| !v.is_empty())
            .map(PathBuf::from);
        Self::with_builtins(dir)
    }

    /// Adds a source, replacing any previous one of the same name.
    pub fn register(&mut self, source: Box<dyn ConstantSource>) {
        self.sources.insert(source.name().to_string(), source);
    }

    pub fn get(&self, name: &str) -> Option<&dyn ConstantSource> {
        self.sources.get(name).map(|b| b.as_ref())
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.sources.keys().map(String::as_str)
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn ConstantSource> {
        self.sources.values().map(|b| b.as_ref())
    }

    /// Opens `name` or `name:param`.
    pub fn open(&self, spec: &str) -> Result<SimpleCf> {
        let (name, param) = match spec.split_once(':') {
            Some((n, p)) => (n, Some(p)),
            None => (spec, None),
        };
        let source = self.get(name).ok_or_else(|| {
            let known: Vec<&str> = self.names().collect();
            Error::Parse(format!("unknown constant `{name}` (known: {})", known.join(", ")))
        })?;
        source.open(param)
    }
}

impl fmt::Debug for SourceRegistry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.sources.keys()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::converter::CfGenerator;
    use crate::error::StreamError;
    use crate::stream::take;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn gen(cf: SimpleCf) -> CfGenerator {
        match cf {
            SimpleCf::Generator(g) => g,
            SimpleCf::Finite(f) => panic!("expected a generator, got {f}"),
        }
    }

    #[test]
    fn phi_is_all_ones() {
        assert_eq!(take(&mut gen(const_phi()), 5).0, ints(&[1; 5]));
    }

    #[test]
    fn tables_start_with_quoted_prefix() {
        assert_eq!(take(&mut gen(const_pi().unwrap()), 9).0, ints(&PI_PREFIX));
        assert_eq!(take(&mut gen(const_log2_3().unwrap()), 9).0, ints(&LOG2_3_PREFIX));
        let t = Tabulated::pi(None);
        assert_eq!(t.reference_table().provenance(), Provenance::Reference);
        assert_eq!(t.load().unwrap().provenance(), Provenance::BundledData);
        assert!(t.load().unwrap().quotients().len() >= 1000);
    }

    #[test]
    fn table_exhaustion_is_reported() {
        let t = ConstantTable::parse("t", "# c\n3\n\n7\n", Provenance::BundledData).unwrap();
        let mut g = gen(t.stream());
        let (got, err) = take(&mut g, 3);
        assert_eq!(got, ints(&[3, 7]));
        assert!(matches!(err, Some(StreamError::TableExhausted { len: 2, .. })));
    }

    #[test]
    fn table_parse_errors() {
        assert!(ConstantTable::parse("t", "3\nx\n", Provenance::BundledData).is_err());
        assert!(ConstantTable::parse("t", "3\n0\n", Provenance::BundledData).is_err());
        assert!(ConstantTable::parse("t", "# only comments\n", Provenance::BundledData).is_err());
    }

    #[test]
    fn sqrt_expansions() {
        assert_eq!(take(&mut gen(sqrt_stream(&BigInt::from(2)).unwrap()), 5).0, ints(&[1, 2, 2, 2, 2]));
        assert_eq!(take(&mut gen(sqrt_stream(&BigInt::from(5)).unwrap()), 4).0, ints(&[2, 4, 4, 4]));
        assert_eq!(
            take(&mut gen(sqrt_stream(&BigInt::from(7)).unwrap()), 9).0,
            ints(&[2, 1, 1, 1, 4, 1, 1, 1, 4])
        );
        assert!(sqrt_stream(&BigInt::from(4)).is_err());
        assert!(sqrt_stream(&BigInt::from(1)).is_err());
    }

    #[test]
    fn registry_resolves_specs() {
        let r = SourceRegistry::with_builtins(None);
        assert_eq!(r.names().collect::<Vec<_>>(), ["log2_3", "phi", "pi", "sqrt"]);
        assert_eq!(take(&mut gen(r.open("sqrt:3").unwrap()), 3).0, ints(&[1, 1, 2]));
        assert!(matches!(r.open("e"), Err(Error::Parse(_))));
        assert!(matches!(r.open("sqrt"), Err(Error::Parse(_))));
        assert!(matches!(r.open("sqrt:x"), Err(Error::Parse(_))));
        assert!(matches!(r.open("sqrt:9"), Err(Error::Domain(_))));
        assert!(matches!(r.open("pi:3"), Err(Error::Parse(_))));
    }

    #[test]
    fn data_dir_override() {
        let dir = std::env::temp_dir().join(format!("subcf-src-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        std::fs::write(dir.join("pi.txt"), "3\n7\n15\n").unwrap();
        let r = SourceRegistry::with_builtins(Some(dir.clone()));
        let (got, err) = take(&mut gen(r.open("pi").unwrap()), 5);
        assert_eq!(got, ints(&[3, 7, 15]));
        assert!(err.is_some());
        std::fs::write(dir.join("pi.txt"), "3\n8\n").unwrap();
        assert!(r.open("pi").is_err());
        // missing file
        assert!(r.open("log2_3").is_err());
        std::fs::remove_dir_all(&dir).unwrap();
    }
}
