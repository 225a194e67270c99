//! Serializable documents for class listings, with JSON, CSV and markdown
//! emitters and the matching parsers. All three round-trip the document
//! model exactly; output is byte-stable across runs and worker counts.

use serde::{Deserialize, Serialize};
use toral_core::{
    BalancedClassRecord, CentralizerType, ExceptionalType, PrimeOutcome, RootSystem, TypeTable,
};

pub const SCHEMA_VERSION: &str = "1.0";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassEntry {
    pub kac: Vec<i64>,
    pub centralizer: String,
    pub d: u32,
}

impl ClassEntry {
    fn from_record(rec: &BalancedClassRecord) -> ClassEntry {
        ClassEntry {
            kac: rec.kac.coords().to_vec(),
            centralizer: rec.centralizer.to_string(),
            d: rec.d,
        }
    }
}

/// The classes of one (type, prime) pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRecordDocument {
    pub schema_version: String,
    #[serde(rename = "type")]
    pub ty: String,
    pub prime: i64,
    pub classes: Vec<ClassEntry>,
}

impl ClassRecordDocument {
    pub fn new(ty: ExceptionalType, prime: i64, records: &[BalancedClassRecord]) -> Self {
        ClassRecordDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            ty: ty.to_string(),
            prime,
            classes: records.iter().map(ClassEntry::from_record).collect(),
        }
    }

    /// Classes sorted by kac, nonnegative coordinates, level equal to the
    /// prime. Used by the format round-trip tests.
    pub fn validate(&self) -> Result<(), String> {
        let ty: ExceptionalType = self.ty.parse().map_err(|e| format!("{e}"))?;
        let rs = RootSystem::build(ty);
        let marks = rs.extended_marks();
        let mut prev: Option<&Vec<i64>> = None;
        for c in &self.classes {
            if c.kac.len() != marks.len() {
                return Err("kac length mismatch".into());
            }
            if c.kac.iter().any(|&x| x < 0) {
                return Err("negative kac entry".into());
            }
            let level: i64 = marks.iter().zip(&c.kac).map(|(b, a)| b * a).sum();
            if level != self.prime {
                return Err(format!("kac {:?} has level {level}", c.kac));
            }
            if let Some(p) = prev {
                if p >= &c.kac {
                    return Err("classes not sorted by kac".into());
                }
            }
            prev = Some(&c.kac);
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> Result<Self, String> {
        serde_json::from_str(s).map_err(|e| e.to_string())
    }

    pub fn to_csv(&self) -> String {
        // the comment line keeps empty documents self-describing
        let mut out = format!(
            "# type={} prime={} schema={}\n",
            self.ty, self.prime, SCHEMA_VERSION
        );
        out.push_str("type,prime,kac,centralizer,d\n");
        for c in &self.classes {
            let kac: Vec<String> = c.kac.iter().map(|x| x.to_string()).collect();
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                self.ty,
                self.prime,
                kac.join(" "),
                c.centralizer,
                c.d
            ));
        }
        out
    }

    pub fn from_csv(s: &str) -> Result<Self, String> {
        let mut ty: Option<String> = None;
        let mut prime: Option<i64> = None;
        let mut classes = Vec::new();
        let mut saw_header = false;
        for line in s.lines() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(meta) = line.strip_prefix('#') {
                for part in meta.split_whitespace() {
                    if let Some(t) = part.strip_prefix("type=") {
                        ty = Some(t.to_string());
                    } else if let Some(p) = part.strip_prefix("prime=") {
                        prime = Some(p.parse().map_err(|_| "bad prime in csv comment")?);
                    }
                }
                continue;
            }
            if line == "type,prime,kac,centralizer,d" {
                saw_header = true;
                continue;
            }
            let fields: Vec<&str> = line.split(',').collect();
            if fields.len() != 5 {
                return Err(format!("bad csv row `{line}`"));
            }
            let row_p: i64 = fields[1].parse().map_err(|_| "bad prime field")?;
            match (&ty, &prime) {
                (Some(t), Some(p)) => {
                    if *t != fields[0] || *p != row_p {
                        return Err("mixed types or primes in one document".into());
                    }
                }
                _ => {
                    ty = Some(fields[0].to_string());
                    prime = Some(row_p);
                }
            }
            let kac: Result<Vec<i64>, _> = fields[2]
                .split_whitespace()
                .map(str::parse::<i64>)
                .collect();
            classes.push(ClassEntry {
                kac: kac.map_err(|_| "bad kac field")?,
                centralizer: normalize_type_string(fields[3])?,
                d: fields[4].parse().map_err(|_| "bad d field")?,
            });
        }
        if !saw_header {
            return Err("missing csv header".into());
        }
        let ty = ty.ok_or("csv carries neither comment nor rows")?;
        let prime = prime.ok_or("csv carries neither comment nor rows")?;
        Ok(ClassRecordDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            ty,
            prime,
            classes,
        })
    }

    pub fn to_markdown(&self) -> String {
        let mut out = format!("# {} p={}\n\n", self.ty, self.prime);
        out.push_str("| p | Kac coordinates | Type of Φ₀ | d |\n");
        out.push_str("| --- | --- | --- | --- |\n");
        for c in &self.classes {
            let kac: Vec<String> = c.kac.iter().map(|x| x.to_string()).collect();
            let pretty = CentralizerType::parse(&c.centralizer)
                .map(|t| t.pretty())
                .unwrap_or_else(|_| c.centralizer.clone());
            out.push_str(&format!(
                "| {} | {} | {} | {} |\n",
                self.prime,
                kac.join(" "),
                pretty,
                c.d
            ));
        }
        out
    }

    pub fn from_markdown(s: &str) -> Result<Self, String> {
        let mut lines = s.lines().filter(|l| !l.trim().is_empty());
        let title = lines.next().ok_or("empty markdown")?;
        let rest = title.strip_prefix("# ").ok_or("missing title line")?;
        let (ty, p) = rest.split_once(" p=").ok_or("bad title line")?;
        let prime: i64 = p.trim().parse().map_err(|_| "bad prime in title")?;
        let mut classes = Vec::new();
        for line in lines {
            let line = line.trim();
            if !line.starts_with('|') {
                continue;
            }
            let cells: Vec<&str> = line.trim_matches('|').split('|').map(str::trim).collect();
            if cells.len() != 4 || cells[0] == "p" || cells[0].starts_with("---") {
                continue;
            }
            let kac: Result<Vec<i64>, _> =
                cells[1].split_whitespace().map(str::parse::<i64>).collect();
            classes.push(ClassEntry {
                kac: kac.map_err(|_| "bad kac cell")?,
                centralizer: normalize_type_string(cells[2])?,
                d: cells[3].parse().map_err(|_| "bad d cell")?,
            });
        }
        Ok(ClassRecordDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            ty: ty.trim().to_string(),
            prime,
            classes,
        })
    }
}

/// Accept any rendering of a type string (machine, caret powers, combining
/// tildes) and return the canonical machine form.
pub fn normalize_type_string(s: &str) -> Result<String, String> {
    CentralizerType::parse(s)
        .map(|t| t.to_string())
        .map_err(|e| e.to_string())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeSection {
    pub prime: i64,
    pub status: String,
    pub classes: Vec<ClassEntry>,
}

/// One type's table over all of its candidate primes; heavy cells that were
/// not run carry status `skipped`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TablesDocument {
    pub schema_version: String,
    #[serde(rename = "type")]
    pub ty: String,
    pub primes: Vec<PrimeSection>,
}

impl TablesDocument {
    pub fn new(table: &TypeTable) -> TablesDocument {
        let primes = table
            .primes
            .iter()
            .map(|(p, outcome)| match outcome {
                PrimeOutcome::Computed(records) => PrimeSection {
                    prime: *p,
                    status: "computed".to_string(),
                    classes: records.iter().map(ClassEntry::from_record).collect(),
                },
                PrimeOutcome::Skipped => PrimeSection {
                    prime: *p,
                    status: "skipped".to_string(),
                    classes: Vec::new(),
                },
            })
            .collect();
        TablesDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            ty: table.ty.to_string(),
            primes,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> Result<Self, String> {
        serde_json::from_str(s).map_err(|e| e.to_string())
    }
}
