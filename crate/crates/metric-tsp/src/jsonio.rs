//! Canonical JSON instance forms.
//!
//! Complete instances are `{"n": ..., "weights": [[...], ...]}`; sparse
//! graphs are `{"n": ..., "edges": [[u, v, w], ...]}`. Serialization uses
//! shortest round-trip float formatting, so parse(serialize(x)) == x exactly.

use serde::{Deserialize, Serialize};

use crate::corpus::GeneratedInstance;
use crate::error::Error;
use crate::instance::{GeneralInstance, MetricInstance};

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum InstanceRepr {
    Metric {
        n: usize,
        weights: Vec<Vec<f64>>,
    },
    General {
        n: usize,
        edges: Vec<(usize, usize, f64)>,
    },
}

pub fn parse_instance_json(text: &str) -> Result<GeneratedInstance, Error> {
    let repr: InstanceRepr = serde_json::from_str(text)?;
    match repr {
        InstanceRepr::Metric { n, weights } => {
            if weights.len() != n {
                return Err(Error::NonSquareMatrix {
                    row: 0,
                    expected: n,
                    got: weights.len(),
                });
            }
            Ok(GeneratedInstance::Metric(MetricInstance::new(weights)?))
        }
        InstanceRepr::General { n, edges } => {
            Ok(GeneratedInstance::General(GeneralInstance::new(n, edges)?))
        }
    }
}

pub fn metric_to_json(instance: &MetricInstance) -> String {
    serde_json::to_string(&InstanceRepr::Metric {
        n: instance.n(),
        weights: instance.rows(),
    })
    .expect("instance serialization cannot fail")
}

pub fn general_to_json(graph: &GeneralInstance) -> String {
    serde_json::to_string(&InstanceRepr::General {
        n: graph.n(),
        edges: graph.edges().to_vec(),
    })
    .expect("graph serialization cannot fail")
}

pub fn instance_to_json(instance: &GeneratedInstance) -> String {
    match instance {
        GeneratedInstance::Metric(m) => metric_to_json(m),
        GeneratedInstance::General(g) => general_to_json(g),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn metric_round_trip_is_lossless() {
        let m = crate::corpus::euclidean_unit_square(7, 21).unwrap();
        let json = metric_to_json(&m);
        match parse_instance_json(&json).unwrap() {
            GeneratedInstance::Metric(back) => assert_eq!(m, back),
            other => panic!("wrong shape: {other:?}"),
        }
    }

    #[test]
    fn general_round_trip_is_lossless() {
        let g = crate::corpus::random_connected_graph(8, 4).unwrap();
        let json = general_to_json(&g);
        match parse_instance_json(&json).unwrap() {
            GeneratedInstance::General(back) => assert_eq!(g, back),
            other => panic!("wrong shape: {other:?}"),
        }
    }

    #[test]
    fn malformed_json_is_an_input_error() {
        let err = parse_instance_json("{\"n\": 3}").unwrap_err();
        assert!(matches!(err, Error::Json(_)));
        assert_eq!(err.kind(), crate::ErrorKind::Input);
    }

    #[test]
    fn mismatched_n_is_rejected() {
        let err = parse_instance_json(
            "{\"n\": 4, \"weights\": [[0.0,1.0,1.0],[1.0,0.0,1.0],[1.0,1.0,0.0]]}",
        )
        .unwrap_err();
        assert!(matches!(err, Error::NonSquareMatrix { .. }));
    }
}
