//! JSON shapes read and written by the command-line tool.
//!
//! Every writer emits compact single-line JSON with a fixed key order, so
//! equal inputs always serialize to identical bytes.

use rough3_core::{Check, Counterexample, Error, FiniteAlgebra, Partition, Report, RoughSet, ThreeValue, Witness};
use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize, Serializer};
use sha2::{Digest, Sha256};

/// The table form of a finite algebra. Operation tables are indexed by
/// position in `elements`; `meet` and `join` are row-major.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraJson {
    pub elements: Vec<String>,
    pub meet: Vec<Vec<usize>>,
    pub join: Vec<Vec<usize>>,
    pub neg: Vec<usize>,
    pub nabla: Vec<usize>,
    pub one: usize,
}

impl AlgebraJson {
    pub fn from_algebra(a: &FiniteAlgebra) -> Self {
        AlgebraJson {
            elements: a.names().to_vec(),
            meet: a.meet_table().to_vec(),
            join: a.join_table().to_vec(),
            neg: a.neg_table().to_vec(),
            nabla: a.nabla_table().to_vec(),
            one: a.one_index(),
        }
    }

    pub fn into_algebra(self) -> Result<FiniteAlgebra, Error> {
        FiniteAlgebra::new(self.elements, self.meet, self.join, self.neg, self.nabla, self.one)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartitionJson {
    pub universe: Vec<String>,
    pub blocks: Vec<Vec<String>>,
}

impl PartitionJson {
    pub fn new(p: &Partition) -> Self {
        PartitionJson {
            universe: p.universe().to_vec(),
            blocks: p
                .blocks()
                .iter()
                .map(|b| b.iter().map(|&i| p.universe()[i].clone()).collect())
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RoughSetJson {
    pub lower: Vec<String>,
    pub upper: Vec<String>,
}

impl RoughSetJson {
    pub fn new(p: &Partition, r: &RoughSet) -> Self {
        RoughSetJson {
            lower: p.names(r.lower()),
            upper: p.names(r.upper()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GradeJson {
    pub object: String,
    pub grade: &'static str,
}

impl GradeJson {
    pub fn new(object: &str, grade: ThreeValue) -> Self {
        GradeJson {
            object: object.to_owned(),
            grade: grade.as_str(),
        }
    }
}

/// A counterexample serialized as an object whose keys keep binding order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CounterexampleJson(pub Counterexample);

fn witness_value(w: &Witness) -> serde_json::Value {
    use serde_json::Value;
    let list = |v: &[String]| Value::Array(v.iter().cloned().map(Value::String).collect());
    match w {
        Witness::Element(s) | Witness::Object(s) => Value::String(s.clone()),
        Witness::Set(v) => list(v),
        Witness::Pair { lower, upper } => {
            let mut m = serde_json::Map::new();
            m.insert("lower".into(), list(lower));
            m.insert("upper".into(), list(upper));
            Value::Object(m)
        }
        Witness::Grade(g) => Value::String(g.as_str().into()),
    }
}

impl Serialize for CounterexampleJson {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.bindings.len()))?;
        for (name, w) in &self.0.bindings {
            map.serialize_entry(name, &witness_value(w))?;
        }
        map.end()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckJson {
    pub name: String,
    pub status: &'static str,
    pub cases: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<CounterexampleJson>,
}

impl CheckJson {
    pub fn new(c: &Check) -> Self {
        CheckJson {
            name: c.name.clone(),
            status: if c.passed() { "pass" } else { "fail" },
            cases: c.cases,
            counterexample: c.counterexample.clone().map(CounterexampleJson),
        }
    }

    pub fn all(r: &Report) -> Vec<Self> {
        r.checks.iter().map(CheckJson::new).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

impl InputDigest {
    pub fn new(path: &str, bytes: &[u8]) -> Self {
        InputDigest {
            path: path.to_owned(),
            sha256: hex::encode(Sha256::digest(bytes)),
        }
    }
}

/// Outcome of `verify`. `elapsed_ms` is only present on request, since it
/// would otherwise make repeated runs differ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunReport {
    pub command: String,
    pub suite: String,
    pub inputs: Vec<InputDigest>,
    pub passed: bool,
    pub checks: Vec<CheckJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FilterJson {
    pub name: String,
    pub members: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EmbeddingJson {
    pub element: String,
    pub lower: Vec<String>,
    pub upper: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RepresentationJson {
    pub filters: Vec<FilterJson>,
    pub chains: Vec<Vec<String>>,
    pub h: Vec<EmbeddingJson>,
    pub passed: bool,
    pub checks: Vec<CheckJson>,
}

/// Serializes `value` as one line of JSON.
pub fn to_line<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("report types serialize infallibly")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn algebra_round_trip() {
        let a = FiniteAlgebra::three_chain();
        let json = to_line(&AlgebraJson::from_algebra(&a));
        assert_eq!(
            json,
            r#"{"elements":["0","c","1"],"meet":[[0,0,0],[0,1,1],[0,1,2]],"join":[[0,1,2],[1,1,2],[2,2,2]],"neg":[2,1,0],"nabla":[0,2,2],"one":2}"#
        );
        let back: AlgebraJson = serde_json::from_str(&json).unwrap();
        assert_eq!(back.into_algebra().unwrap(), a);
    }

    #[test]
    fn malformed_algebra_is_rejected() {
        let j = r#"{"elements":["0","1"],"meet":[[0,0],[0,1]],"join":[[0,1],[1,1]],"neg":[1,0],"nabla":[0,5],"one":1}"#;
        let a: AlgebraJson = serde_json::from_str(j).unwrap();
        assert!(matches!(a.into_algebra(), Err(Error::MalformedAlgebra(_))));
        let extra = r#"{"elements":[],"meet":[],"join":[],"neg":[],"nabla":[],"one":0,"x":1}"#;
        assert!(serde_json::from_str::<AlgebraJson>(extra).is_err());
    }

    #[test]
    fn counterexample_keeps_binding_order() {
        let mut c = Check::new("law");
        c.record(false, || {
            Counterexample::default()
                .with("y", Witness::Element("b".into()))
                .with(
                    "x",
                    Witness::Pair {
                        lower: vec![],
                        upper: vec!["1".into()],
                    },
                )
                .with("g", Witness::Grade(ThreeValue::Half))
        });
        assert_eq!(
            to_line(&CheckJson::new(&c)),
            r#"{"name":"law","status":"fail","cases":1,"counterexample":{"y":"b","x":{"lower":[],"upper":["1"]},"g":"1/2"}}"#
        );
    }

    #[test]
    fn passing_check_has_no_counterexample() {
        let mut c = Check::new("law");
        c.record(true, Counterexample::default);
        assert_eq!(
            to_line(&CheckJson::new(&c)),
            r#"{"name":"law","status":"pass","cases":1}"#
        );
    }

    #[test]
    fn digest_is_hex_sha256() {
        let d = InputDigest::new("x", b"abc");
        assert_eq!(
            d.sha256,
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"
        );
    }
}
