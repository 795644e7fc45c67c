//! Built-in example data: three quaternion-like algebras, the Sweedler Hopf
//! algebra, and the three parametrized twisted-partial-action candidates on
//! them.
//!
//! Each entry is stored as a definition file under `data/` (embedded at
//! compile time) and goes through the ordinary parser on every load, so the
//! catalog doubles as format documentation and as a permanent parser
//! exercise.

use crate::algebra::StructureAlgebra;
use crate::hopf::HopfData;
use crate::io::{parse_definition, DefinitionDocument, ParseError};
use crate::partial_action::PartialActionData;
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("unknown catalog id `{0}`")]
    UnknownId(String),
    #[error("catalog data failed to parse: {0}")]
    Parse(#[from] ParseError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CatalogId {
    Hs,
    Hss,
    H00,
    H4,
    ActionHss,
    ActionHs,
    ActionH00,
}

impl CatalogId {
    pub const ALL: [CatalogId; 7] = [
        CatalogId::Hs,
        CatalogId::Hss,
        CatalogId::H00,
        CatalogId::H4,
        CatalogId::ActionHss,
        CatalogId::ActionHs,
        CatalogId::ActionH00,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CatalogId::Hs => "hs",
            CatalogId::Hss => "hss",
            CatalogId::H00 => "h00",
            CatalogId::H4 => "h4",
            CatalogId::ActionHss => "action_hss",
            CatalogId::ActionHs => "action_hs",
            CatalogId::ActionH00 => "action_h00",
        }
    }

    pub fn parse(s: &str) -> Option<CatalogId> {
        CatalogId::ALL.iter().copied().find(|id| id.as_str() == s)
    }

    /// The definition file text this entry is loaded from.
    pub fn source(self) -> &'static str {
        match self {
            CatalogId::Hs => include_str!("../data/hs.def"),
            CatalogId::Hss => include_str!("../data/hss.def"),
            CatalogId::H00 => include_str!("../data/h00.def"),
            CatalogId::H4 => include_str!("../data/h4.def"),
            CatalogId::ActionHss => include_str!("../data/action_hss.def"),
            CatalogId::ActionHs => include_str!("../data/action_hs.def"),
            CatalogId::ActionH00 => include_str!("../data/action_h00.def"),
        }
    }
}

impl fmt::Display for CatalogId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The payload a catalog id resolves to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CatalogPayload {
    Algebra(Arc<StructureAlgebra>),
    Hopf(HopfData),
    Action(PartialActionData),
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub id: CatalogId,
    /// Human-readable description from the definition file.
    pub note: String,
    pub payload: CatalogPayload,
    /// The whole parsed document (an action entry also carries its algebra
    /// and Hopf blocks).
    pub document: DefinitionDocument,
}

impl CatalogEntry {
    pub fn as_algebra(&self) -> Option<&Arc<StructureAlgebra>> {
        match &self.payload {
            CatalogPayload::Algebra(a) => Some(a),
            _ => None,
        }
    }

    pub fn as_hopf(&self) -> Option<&HopfData> {
        match &self.payload {
            CatalogPayload::Hopf(h) => Some(h),
            _ => None,
        }
    }

    pub fn as_action(&self) -> Option<&PartialActionData> {
        match &self.payload {
            CatalogPayload::Action(a) => Some(a),
            _ => None,
        }
    }
}

/// Loads a catalog entry: parses its definition file and picks the payload
/// block. Every call returns a fresh immutable payload.
pub fn load(id: CatalogId) -> Result<CatalogEntry, CatalogError> {
    let document = parse_definition(id.source())?;
    let note = document.note.clone().unwrap_or_default();
    let payload = match id {
        CatalogId::Hs | CatalogId::Hss | CatalogId::H00 => {
            CatalogPayload::Algebra(Arc::clone(&document.algebras[0]))
        }
        CatalogId::H4 => CatalogPayload::Hopf(document.hopfs[0].clone()),
        CatalogId::ActionHss | CatalogId::ActionHs | CatalogId::ActionH00 => {
            CatalogPayload::Action(document.actions[0].clone())
        }
    };
    Ok(CatalogEntry {
        id,
        note,
        payload,
        document,
    })
}

/// Loads by the string id, as the CLI receives it.
pub fn load_by_name(name: &str) -> Result<CatalogEntry, CatalogError> {
    let id = CatalogId::parse(name).ok_or_else(|| CatalogError::UnknownId(name.to_string()))?;
    load(id)
}

/// Convenience for tests and tools: the action payload of an action id.
pub fn load_action(id: CatalogId) -> PartialActionData {
    load(id)
        .expect("catalog data must parse")
        .as_action()
        .expect("catalog id is not an action")
        .clone()
}

#[cfg(test)]
mod tests;
