//! The JSON input format shared by the command line and the fixtures.
//!
//! An input holds exactly one of
//! `{"relations": {"n": 4, "pairs": [[1, 2]], "closure": true}}`,
//! `{"intervals": [[0, 0], [1, 2]]}` or `{"ascent": [0, 1, 0]}`.
//! Labels are 1-based.

use serde::{Deserialize, Serialize};

use crate::canonical::IntervalRepresentation;
use crate::error::{Error, Result};
use crate::order::IntervalOrder;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelationsInput {
    pub n: usize,
    pub pairs: Vec<[usize; 2]>,
    #[serde(default = "default_closure")]
    pub closure: bool,
}

fn default_closure() -> bool {
    true
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrderInput {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub relations: Option<RelationsInput>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub intervals: Option<Vec<[i64; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ascent: Option<Vec<usize>>,
}

/// A validated order, with the representation it was given by if any.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoadedOrder {
    pub order: IntervalOrder,
    pub representation: Option<IntervalRepresentation>,
}

impl OrderInput {
    pub fn from_intervals(rep: &IntervalRepresentation) -> Self {
        Self {
            intervals: Some(rep.intervals().into_iter().map(|(l, r)| [l, r]).collect()),
            ..Self::default()
        }
    }

    pub fn from_relations(order: &IntervalOrder) -> Self {
        Self {
            relations: Some(RelationsInput {
                n: order.len(),
                pairs: order
                    .cover_relations()
                    .into_iter()
                    .map(|(x, y)| [x + 1, y + 1])
                    .collect(),
                closure: true,
            }),
            ..Self::default()
        }
    }

    pub fn load(&self) -> Result<LoadedOrder> {
        match (&self.relations, &self.intervals, &self.ascent) {
            (Some(rel), None, None) => {
                let mut pairs = Vec::with_capacity(rel.pairs.len());
                for &[x, y] in &rel.pairs {
                    for label in [x, y] {
                        if label == 0 || label > rel.n {
                            return Err(Error::LabelOutOfRange { label, n: rel.n });
                        }
                    }
                    pairs.push((x - 1, y - 1));
                }
                Ok(LoadedOrder {
                    order: IntervalOrder::from_relations(rel.n, &pairs, rel.closure)?,
                    representation: None,
                })
            }
            (None, Some(intervals), None) => {
                let pairs: Vec<(i64, i64)> = intervals.iter().map(|&[l, r]| (l, r)).collect();
                let (order, rep) = IntervalOrder::from_intervals(&pairs)?;
                Ok(LoadedOrder {
                    order,
                    representation: Some(rep),
                })
            }
            (None, None, Some(seq)) => Ok(LoadedOrder {
                order: IntervalOrder::from_ascent_sequence(seq)?,
                representation: None,
            }),
            _ => Err(Error::InvalidInput(
                "expected exactly one of \"relations\", \"intervals\" or \"ascent\"".into(),
            )),
        }
    }
}

pub fn parse_input(text: &str) -> Result<OrderInput> {
    serde_json::from_str(text).map_err(|e| Error::MalformedJson {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

pub fn load_order(text: &str) -> Result<LoadedOrder> {
    parse_input(text)?.load()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_encodings() {
        let rel = load_order(r#"{"relations": {"n": 2, "pairs": [[1, 2]], "closure": true}}"#).unwrap();
        assert!(rel.order.precedes(0, 1));
        let iv = load_order(r#"{"intervals": [[0, 0], [1, 1]]}"#).unwrap();
        assert_eq!(iv.order, rel.order);
        assert!(iv.representation.is_some());
        let asc = load_order(r#"{"ascent": [0, 1]}"#).unwrap();
        assert!(asc.order.is_isomorphic(&rel.order));
    }

    #[test]
    fn closure_defaults_to_true() {
        let p = load_order(r#"{"relations": {"n": 3, "pairs": [[1, 2], [2, 3]]}}"#).unwrap();
        assert!(p.order.precedes(0, 2));
    }

    #[test]
    fn malformed_json_reports_position() {
        match load_order("{\n  \"ascent\": [0, 1,]\n}") {
            Err(Error::MalformedJson { line, .. }) => assert_eq!(line, 2),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn exactly_one_encoding() {
        assert!(matches!(load_order("{}"), Err(Error::InvalidInput(_))));
        assert!(matches!(
            load_order(r#"{"ascent": [0], "intervals": [[0, 0]]}"#),
            Err(Error::InvalidInput(_))
        ));
        assert!(matches!(load_order(r#"{"bogus": 1}"#), Err(Error::MalformedJson { .. })));
    }

    #[test]
    fn zero_label_is_rejected() {
        assert_eq!(
            load_order(r#"{"relations": {"n": 2, "pairs": [[0, 1]]}}"#).unwrap_err(),
            Error::LabelOutOfRange { label: 0, n: 2 }
        );
    }

    #[test]
    fn round_trip_through_relations() {
        let p = load_order(r#"{"intervals": [[0, 0], [2, 3], [1, 1]]}"#).unwrap().order;
        let again = OrderInput::from_relations(&p).load().unwrap().order;
        assert_eq!(again, p);
    }
}
