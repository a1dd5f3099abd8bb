//! Text export and import of presented rings.
//!
//! The document is pretty-printed JSON whose polynomial fields use the
//! canonical printing of [`Poly`], so exporting an imported document
//! reproduces it byte for byte.

use serde::{Deserialize, Serialize};

use super::{BundleData, ChowError, ChowRing, RingSpec};
use crate::poly::{format_rational, parse_rational, Poly, Signature};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VariableEntry {
    pub name: String,
    pub weight: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Normalization {
    pub class: String,
    pub value: String,
}

/// A bundle literal `(rank, [c_1, c_2, ...])`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BundleLiteral {
    pub rank: i64,
    pub chern: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TautologicalEntry {
    pub zeta: String,
    pub rank: u32,
    pub c1: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingDocument {
    pub label: String,
    pub variables: Vec<VariableEntry>,
    pub relations: Vec<String>,
    pub dimension: u32,
    pub normalization: Normalization,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cap: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tangent: Option<BundleLiteral>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tautological: Option<TautologicalEntry>,
}

impl RingDocument {
    pub fn to_text(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }

    pub fn parse(text: &str) -> Result<Self, ChowError> {
        serde_json::from_str(text).map_err(|e| ChowError::Document(e.to_string()))
    }
}

impl ChowRing {
    pub fn to_document(&self) -> RingDocument {
        let spec = self.spec();
        RingDocument {
            label: spec.label.clone(),
            variables: spec
                .signature
                .vars()
                .iter()
                .map(|v| VariableEntry { name: v.name.clone(), weight: v.weight })
                .collect(),
            relations: spec.relations.iter().map(|r| r.to_string()).collect(),
            dimension: spec.dim,
            normalization: Normalization { class: spec.top.to_string(), value: format_rational(&spec.top_value) },
            cap: spec.cap.as_ref().map(|c| c.to_string()),
            tangent: spec.tangent.as_ref().map(|t| BundleLiteral {
                rank: spec.dim as i64,
                chern: t.iter().map(|c| c.to_string()).collect(),
            }),
            tautological: spec.bundle.as_ref().map(|b| TautologicalEntry {
                zeta: b.zeta.clone(),
                rank: b.rank,
                c1: b.c1.to_string(),
            }),
        }
    }

    pub fn from_document(doc: &RingDocument) -> Result<ChowRing, ChowError> {
        let sig = Signature::new(doc.variables.iter().map(|v| (v.name.as_str(), v.weight)))?;
        let p = |t: &str| Poly::parse(t, &sig).map_err(ChowError::from);
        let relations = doc.relations.iter().map(|r| p(r)).collect::<Result<Vec<_>, _>>()?;
        let tangent = match &doc.tangent {
            Some(t) => {
                if t.rank != doc.dimension as i64 {
                    return Err(ChowError::Document(format!(
                        "tangent rank {} differs from dimension {}",
                        t.rank, doc.dimension
                    )));
                }
                Some(t.chern.iter().map(|c| p(c)).collect::<Result<Vec<_>, _>>()?)
            }
            None => None,
        };
        let bundle = match &doc.tautological {
            Some(b) => Some(BundleData { zeta: b.zeta.clone(), rank: b.rank, c1: p(&b.c1)? }),
            None => None,
        };
        ChowRing::new(RingSpec {
            label: doc.label.clone(),
            signature: sig.clone(),
            relations,
            dim: doc.dimension,
            cap: doc.cap.as_deref().map(p).transpose()?,
            top: p(&doc.normalization.class)?,
            top_value: parse_rational(&doc.normalization.value)?,
            tangent,
            bundle,
        })
    }

    /// Exports the ring as a text document.
    pub fn export(&self) -> String {
        self.to_document().to_text()
    }

    pub fn import(text: &str) -> Result<ChowRing, ChowError> {
        Self::from_document(&RingDocument::parse(text)?)
    }
}

#[cfg(test)]
mod tests {
    use crate::chow::{catalog, catalog_names, ChowError, ChowRing};

    #[test]
    fn export_import_round_trip_is_bit_exact() {
        for name in catalog_names() {
            let ring = catalog(name).unwrap();
            let text = ring.export();
            let back = ChowRing::import(&text).unwrap();
            assert_eq!(back.export(), text, "{name}");
            assert_eq!(back.hilbert_function(), ring.hilbert_function());
            assert_eq!(back.tangent(), ring.tangent());
        }
    }

    #[test]
    fn document_for_g26() {
        let text = catalog("G26").unwrap().export();
        assert!(text.contains("\"h_2^5-4*h_2^3*c_2+3*h_2*c_2^2\""), "{text}");
        assert!(text.contains("\"value\": \"14\""));
    }

    #[test]
    fn malformed_documents_are_rejected() {
        assert!(matches!(ChowRing::import("{"), Err(ChowError::Document(_))));
        let mut doc = catalog("P5").unwrap().to_document();
        doc.relations.push("H^2+zz".into());
        assert!(matches!(ChowRing::from_document(&doc), Err(ChowError::Poly(_))));
    }
}
