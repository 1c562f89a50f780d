//! JSON file formats.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

/// `{"name": .., "vertices": [..], "facets": [[..]..], "meta": {..}}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexFile {
    #[serde(default)]
    pub name: String,
    #[serde(default)]
    pub vertices: Option<Vec<u32>>,
    pub facets: Vec<Vec<u32>>,
    #[serde(default)]
    pub meta: ComplexMeta,
    /// Vertex id to lattice point (or face), when the complex was derived from
    /// another one.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<BTreeMap<u32, Vec<u32>>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexMeta {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub is_simplicial_sphere: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub declared_collapsible: Option<bool>,
}

/// A parsed complex together with its declared metadata.
#[derive(Clone, Debug)]
pub struct NamedComplex {
    pub name: String,
    pub meta: ComplexMeta,
    pub complex: SimplicialComplex,
}

impl NamedComplex {
    pub fn declared_sphere(&self) -> bool {
        self.meta.is_simplicial_sphere == Some(true)
    }
}

impl ComplexFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("complex JSON: {e}")))
    }

    pub fn into_complex(self) -> Result<NamedComplex> {
        let complex = match self.vertices {
            Some(v) => SimplicialComplex::with_vertices(v, self.facets)?,
            None => SimplicialComplex::from_facets(self.facets)?,
        };
        Ok(NamedComplex { name: self.name, meta: self.meta, complex })
    }

    pub fn from_complex(name: &str, complex: &SimplicialComplex) -> Self {
        ComplexFile {
            name: name.to_string(),
            vertices: Some(complex.labels().to_vec()),
            facets: complex.labeled_facets(),
            meta: ComplexMeta::default(),
            labels: None,
        }
    }
}

pub fn parse_complex(text: &str) -> Result<NamedComplex> {
    ComplexFile::parse(text)?.into_complex()
}

pub fn read_complex(path: &Path) -> Result<NamedComplex> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
    parse_complex(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ghost_vertices_and_missing_vertices() {
        let c = parse_complex(r#"{"name":"g","vertices":[1,2,3],"facets":[[1,2]]}"#).unwrap();
        assert_eq!(c.complex.num_vertices(), 3);
        assert!(!c.complex.contains_face(&[2]));
        let err = parse_complex(r#"{"vertices":[1],"facets":[[1,2]]}"#).unwrap_err();
        assert!(matches!(err, Error::InvalidComplex(_)));
        assert!(matches!(parse_complex("{"), Err(Error::Parse(_))));
    }

    #[test]
    fn round_trip_through_file_format() {
        let oct = crate::fixtures::oct();
        let file = ComplexFile::from_complex("OCT", &oct.complex);
        let text = serde_json::to_string(&file).unwrap();
        assert_eq!(parse_complex(&text).unwrap().complex, oct.complex);
    }
}
