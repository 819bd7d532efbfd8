use serde::{Deserialize, Serialize};

use super::SchemePresentation;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VariableJson {
    pub name: String,
    pub role: String,
    pub weight: i64,
}

/// Serialized form of a [`SchemePresentation`]; `parabolic` lists the
/// 1-based excluded simple roots.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationJson {
    #[serde(rename = "type")]
    pub lie_type: String,
    pub rank: usize,
    pub parabolic: Vec<usize>,
    pub variables: Vec<VariableJson>,
    pub generators: Vec<String>,
    pub qbar: Vec<String>,
    pub inverted: Vec<String>,
}

impl SchemePresentation {
    pub fn to_json(&self) -> PresentationJson {
        let ring = self.ring();
        PresentationJson {
            lie_type: self.datum.lie_type.to_string(),
            rank: self.datum.rank,
            parabolic: self.parabolic.excluded.iter().map(|i| i + 1).collect(),
            variables: ring
                .variables()
                .iter()
                .zip(&self.roles)
                .zip(&self.weights)
                .map(|((v, r), &w)| VariableJson { name: v.name.clone(), role: r.as_str().into(), weight: w })
                .collect(),
            generators: self.ideal.generators.iter().map(|g| ring.format(g)).collect(),
            qbar: self.qbar.iter().map(|g| ring.format(g)).collect(),
            inverted: self.ideal.inverted.iter().map(|g| ring.format(g)).collect(),
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("plain data serializes")
    }
}
