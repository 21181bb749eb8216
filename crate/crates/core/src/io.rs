//! JSON export and import of structure constants.
//!
//! Rationals are always written as strings (`"p"` or `"p/q"`), so files are
//! exact and byte-identical across platforms.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::algcore::{AlgebraTable, CounitSplit};
use crate::error::{Error, Result};
use crate::exactla::RatMatrix;
use crate::rational::{self, Q};
use crate::structure::StructureTable;

pub const FORMAT: &str = "ag-structure-constants/1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Metadata {
    #[serde(rename = "type")]
    pub type_name: String,
    pub rank: usize,
    pub dim_g: usize,
    pub h: usize,
    pub h_check: i64,
    pub dim_a: usize,
    pub seed: u64,
    pub tool_version: String,
}

/// On-disk form of an algebra table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct AlgebraFile {
    pub format: String,
    pub metadata: Option<Metadata>,
    #[serde(default)]
    pub basis: Vec<String>,
    pub dim_a: usize,
    pub unit: Vec<String>,
    pub epsilon: Vec<String>,
    pub prod_const: Vec<(usize, usize, usize, String)>,
    #[serde(default)]
    pub tau_gram: Vec<Vec<String>>,
}

fn strings(v: &[Q]) -> Vec<String> {
    v.iter().map(rational::fmt_q).collect()
}

fn parse_all(v: &[String]) -> Result<Vec<Q>> {
    v.iter().map(|s| rational::parse_q(s)).collect()
}

impl AlgebraFile {
    pub fn from_table(t: &AlgebraTable, seed: u64) -> Self {
        let d = t.datum();
        let metadata = Metadata {
            type_name: d.spec().to_string(),
            rank: d.rank(),
            dim_g: d.dim_g(),
            h: d.h(),
            h_check: d.h_check(),
            dim_a: t.dim(),
            seed,
            tool_version: crate::TOOL_VERSION.to_string(),
        };
        AlgebraFile {
            format: FORMAT.to_string(),
            metadata: Some(metadata),
            basis: t.basis().labels(),
            dim_a: t.dim(),
            unit: strings(t.unit()),
            epsilon: strings(t.epsilon()),
            prod_const: t
                .table()
                .quadruples()
                .map(|(a, b, k, c)| (a, b, k, rational::fmt_q(c)))
                .collect(),
            tau_gram: t.tau_gram().to_rows().iter().map(|r| strings(r)).collect(),
        }
    }

    pub fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let f: AlgebraFile = serde_json::from_str(s)?;
        if f.format != FORMAT {
            return Err(Error::invalid(format!(
                "unknown format `{}` (expected `{FORMAT}`)",
                f.format
            )));
        }
        Ok(f)
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_json()?)?;
        Ok(())
    }

    pub fn read(path: &Path) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    /// Rebuilds the exact table, unit and counit, validating shapes.
    pub fn load(&self) -> Result<LoadedAlgebra> {
        let n = self.dim_a;
        let quads = self
            .prod_const
            .iter()
            .map(|(a, b, k, c)| Ok((*a, *b, *k, rational::parse_q(c)?)))
            .collect::<Result<Vec<_>>>()?;
        let table = StructureTable::from_quadruples(n, quads)?;
        let unit = parse_all(&self.unit)?;
        let epsilon = parse_all(&self.epsilon)?;
        if unit.len() != n || epsilon.len() != n {
            return Err(Error::dims(format!("unit/epsilon must have length dimA = {n}")));
        }
        let tau = tau_from(&table, &epsilon);
        if !self.tau_gram.is_empty() {
            let rows = self.tau_gram.iter().map(|r| parse_all(r)).collect::<Result<Vec<_>>>()?;
            if RatMatrix::from_rows(rows)? != tau {
                return Err(Error::invalid("tauGram disagrees with prodConst and epsilon"));
            }
        }
        Ok(LoadedAlgebra {
            metadata: self.metadata.clone(),
            labels: self.basis.clone(),
            table,
            unit,
            epsilon,
            tau,
        })
    }
}

/// `τ_ab = ε(b_a b_b)`.
pub fn tau_from(table: &StructureTable, epsilon: &[Q]) -> RatMatrix {
    let n = table.dim();
    RatMatrix::from_fn(n, n, |a, b| table.get(a, b).iter().map(|(k, c)| c * &epsilon[*k]).sum())
}

/// An algebra read back from JSON.
#[derive(Clone, Debug)]
pub struct LoadedAlgebra {
    pub metadata: Option<Metadata>,
    pub labels: Vec<String>,
    pub table: StructureTable,
    pub unit: Vec<Q>,
    pub epsilon: Vec<Q>,
    pub tau: RatMatrix,
}

impl LoadedAlgebra {
    pub fn split_counit(&self) -> Result<CounitSplit> {
        CounitSplit::new(&self.table, &self.unit, &self.epsilon)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::par::Execution;

    #[test]
    fn round_trip_a2() {
        let t = AlgebraTable::build("A2".parse().unwrap(), Execution::default()).unwrap();
        let f = AlgebraFile::from_table(&t, 7);
        let s = f.to_json().unwrap();
        let back = AlgebraFile::from_json(&s).unwrap();
        assert_eq!(back, f);
        let l = back.load().unwrap();
        assert_eq!(&l.table, t.table());
        assert_eq!(l.unit, t.unit());
        assert_eq!(l.epsilon, t.epsilon());
        assert_eq!(&l.tau, t.tau_gram());
        assert_eq!(back.to_json().unwrap(), s);
    }

    #[test]
    fn rejects_inconsistent_tau() {
        let t = AlgebraTable::build("A1".parse().unwrap(), Execution::default()).unwrap();
        let mut f = AlgebraFile::from_table(&t, 0);
        f.tau_gram[0][0] = "5".into();
        assert!(f.load().is_err());
        f.format = "other".into();
        assert!(AlgebraFile::from_json(&serde_json::to_string(&f).unwrap()).is_err());
    }
}
