//! Pawlak information systems and their indiscernibility relation.

use alloc::string::String;
use alloc::vec::Vec;

use crate::partition::Partition;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TableError {
    #[error("empty table")]
    Empty,
    #[error("table has no attributes")]
    NoAttributes,
    #[error("duplicate object {0}")]
    DuplicateObject(String),
    #[error("duplicate attribute {0}")]
    DuplicateAttribute(String),
    /// `row` is the 0-based position of the object.
    #[error("object row {row} has {found} values, expected {expected}")]
    Arity { row: usize, expected: usize, found: usize },
    #[error("empty value for object {object}, attribute {attribute}")]
    EmptyValue { object: String, attribute: String },
}

/// Objects described by attribute values; every (object, attribute) cell is filled.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InformationTable {
    objects: Vec<String>,
    attributes: Vec<String>,
    // row-major, one row per object
    cells: Vec<Vec<String>>,
}

impl InformationTable {
    pub fn new(objects: Vec<String>, attributes: Vec<String>, cells: Vec<Vec<String>>) -> Result<Self, TableError> {
        if objects.is_empty() {
            return Err(TableError::Empty);
        }
        if attributes.is_empty() {
            return Err(TableError::NoAttributes);
        }
        for (i, o) in objects.iter().enumerate() {
            if objects[..i].contains(o) {
                return Err(TableError::DuplicateObject(o.clone()));
            }
        }
        for (i, a) in attributes.iter().enumerate() {
            if attributes[..i].contains(a) {
                return Err(TableError::DuplicateAttribute(a.clone()));
            }
        }
        if cells.len() != objects.len() {
            return Err(TableError::Arity {
                row: cells.len().min(objects.len()),
                expected: attributes.len(),
                found: 0,
            });
        }
        for (row, values) in cells.iter().enumerate() {
            if values.len() != attributes.len() {
                return Err(TableError::Arity {
                    row,
                    expected: attributes.len(),
                    found: values.len(),
                });
            }
            if let Some(col) = values.iter().position(String::is_empty) {
                return Err(TableError::EmptyValue {
                    object: objects[row].clone(),
                    attribute: attributes[col].clone(),
                });
            }
        }
        Ok(InformationTable {
            objects,
            attributes,
            cells,
        })
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn attributes(&self) -> &[String] {
        &self.attributes
    }

    pub fn value(&self, object: usize, attribute: usize) -> &str {
        &self.cells[object][attribute]
    }

    pub fn row(&self, object: usize) -> &[String] {
        &self.cells[object]
    }

    /// Restricts the table to the given attribute columns, in the given order.
    pub fn project(&self, columns: &[usize]) -> Result<Self, TableError> {
        let attributes = columns.iter().map(|&c| self.attributes[c].clone()).collect();
        let cells = self
            .cells
            .iter()
            .map(|row| columns.iter().map(|&c| row[c].clone()).collect())
            .collect();
        Self::new(self.objects.clone(), attributes, cells)
    }

    /// Objects are indiscernible when they agree on every attribute; values
    /// compare as exact strings.
    pub fn indiscernibility_partition(&self) -> Partition {
        Partition::from_labels(self.objects.clone(), &self.cells).expect("validated table has distinct objects")
    }
}
