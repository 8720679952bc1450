//! File formats and exporters.

mod coords;
mod drawing_file;
mod edgelist;
mod export;

use serde::{Deserialize, Serialize};

pub use coords::{ingest_coordinates, parse_coordinates, write_coordinates};
pub use drawing_file::{
    drawing_from_json, drawing_to_json, CrossingEntry, DartEntry, DrawingFile, RotationEntry, RouteEntry,
    DRAWING_VERSION,
};
pub use edgelist::{parse_edge_list, write_edge_list};
pub use export::{dot, export, DrawingRef, ExportFormat};

use crate::error::{Error, Result};
use crate::outer::CircularOrder;
use crate::topo::TopoDrawing;
use crate::two_layer::TwoLayerOrder;

/// A decider witness as stored by `decide --witness`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "model", rename_all = "kebab-case")]
pub enum Witness {
    Outer { order: CircularOrder },
    TwoLayer { top: Vec<usize>, bottom: Vec<usize> },
}

impl Witness {
    pub fn two_layer(t: &TwoLayerOrder) -> Self {
        Witness::TwoLayer {
            top: t.top().to_vec(),
            bottom: t.bottom().to_vec(),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("witness serializes")
    }
}

/// Reads a drawing given either as drawing JSON or as a coordinate file.
pub fn load_drawing(text: &str) -> Result<TopoDrawing> {
    if text.trim_start().starts_with('{') {
        drawing_from_json(text)
    } else {
        ingest_coordinates(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn witness_json() {
        let w = Witness::Outer {
            order: CircularOrder::new(vec![0, 2, 1]).unwrap(),
        };
        assert_eq!(w.to_json(), r#"{"model":"outer","order":[0,2,1]}"#);
        assert_eq!(Witness::from_json(&w.to_json()).unwrap(), w);
        let t = Witness::two_layer(&TwoLayerOrder::new(vec![0], vec![1, 2]).unwrap());
        assert_eq!(t.to_json(), r#"{"model":"two-layer","top":[0],"bottom":[1,2]}"#);
        assert!(Witness::from_json(r#"{"model":"outer","order":[0,0]}"#).is_err());
    }

    #[test]
    fn load_either_format() {
        let d = load_drawing("0 0 0\n1 1 0\n2 1 1\n3 0 1\n0 2\n1 3\n").unwrap();
        assert_eq!(d.crossing_count(), 1);
        assert_eq!(load_drawing(&drawing_to_json(&d)).unwrap(), d);
    }
}
