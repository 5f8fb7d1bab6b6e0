//! CSV ingestion of information tables.
//!
//! The header row is `object,attr1,...,attrN`; each further row is one object
//! followed by its attribute values. Cells are trimmed. Rows are numbered from
//! 1 with the header as row 1.

use std::path::Path;

use rough3_core::{InformationTable, TableError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("malformed CSV: {0}")]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Table(#[from] TableError),
    #[error("empty header cell at column {0}")]
    EmptyHeader(usize),
    #[error("arity mismatch at row {row}: expected {expected} cells, found {found}")]
    Arity { row: usize, expected: usize, found: usize },
    #[error("empty object id at row {0}")]
    EmptyObject(usize),
    #[error("empty value at row {row}, column {column}")]
    EmptyCell { row: usize, column: usize },
}

pub fn parse_table(text: &str) -> Result<InformationTable, ParseError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut records = reader.records();
    let header = match records.next() {
        Some(r) => r?,
        None => return Err(TableError::Empty.into()),
    };
    if header.len() < 2 {
        return Err(TableError::NoAttributes.into());
    }
    let attributes: Vec<String> = header.iter().skip(1).map(str::to_owned).collect();
    if let Some(col) = attributes.iter().position(String::is_empty) {
        return Err(ParseError::EmptyHeader(col + 2));
    }

    let mut objects = Vec::new();
    let mut cells = Vec::new();
    for (i, record) in records.enumerate() {
        let record = record?;
        let row = i + 2;
        if record.len() != header.len() {
            return Err(ParseError::Arity {
                row,
                expected: header.len(),
                found: record.len(),
            });
        }
        let object = &record[0];
        if object.is_empty() {
            return Err(ParseError::EmptyObject(row));
        }
        if let Some(col) = record.iter().skip(1).position(str::is_empty) {
            return Err(ParseError::EmptyCell { row, column: col + 2 });
        }
        objects.push(object.to_owned());
        cells.push(record.iter().skip(1).map(str::to_owned).collect());
    }
    Ok(InformationTable::new(objects, attributes, cells)?)
}

pub fn read_table(path: &Path) -> Result<InformationTable, ParseError> {
    let text = std::fs::read_to_string(path).map_err(|source| ParseError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_table(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_rows_in_order() {
        let t = parse_table("object,color\na,red\nb,red\n").unwrap();
        assert_eq!(t.objects(), ["a", "b"]);
        assert_eq!(t.attributes(), ["color"]);
        assert_eq!(t.value(1, 0), "red");
        assert_eq!(t.indiscernibility_partition().blocks(), &[vec![0, 1]]);
    }

    #[test]
    fn trims_cells() {
        let t = parse_table(" object , size \n x ,  big \n").unwrap();
        assert_eq!(t.objects(), ["x"]);
        assert_eq!(t.attributes(), ["size"]);
        assert_eq!(t.value(0, 0), "big");
    }

    #[test]
    fn arity_mismatch_names_the_row() {
        let e = parse_table("object,color\na,red,extra\n").unwrap_err();
        assert!(e.to_string().starts_with("arity mismatch at row 2"), "{e}");
        let e = parse_table("object,a,b\nx,1,2\ny,1\n").unwrap_err();
        assert!(e.to_string().starts_with("arity mismatch at row 3"), "{e}");
    }

    #[test]
    fn duplicate_object() {
        let e = parse_table("object,color\na,red\na,blue\n").unwrap_err();
        assert_eq!(e.to_string(), "duplicate object a");
    }

    #[test]
    fn structural_errors() {
        assert!(matches!(parse_table(""), Err(ParseError::Table(TableError::Empty))));
        assert!(matches!(
            parse_table("object,color\n"),
            Err(ParseError::Table(TableError::Empty))
        ));
        assert!(matches!(
            parse_table("object\na\n"),
            Err(ParseError::Table(TableError::NoAttributes))
        ));
        assert!(matches!(
            parse_table("object,c,c\na,1,2\n"),
            Err(ParseError::Table(TableError::DuplicateAttribute(_)))
        ));
        assert!(matches!(
            parse_table("object,c\na, \n"),
            Err(ParseError::EmptyCell { row: 2, column: 2 })
        ));
        assert!(matches!(parse_table("object,c\n,1\n"), Err(ParseError::EmptyObject(2))));
    }

    #[test]
    fn values_are_strings() {
        // "1" and "1.0" are different tokens
        let t = parse_table("object,v\na,1\nb,1.0\n").unwrap();
        assert_eq!(t.indiscernibility_partition().blocks().len(), 2);
    }

    proptest::proptest! {
        #[test]
        fn written_tables_read_back(
            rows in proptest::collection::vec(proptest::collection::vec("[a-z ,\"]{1,4}", 2), 1..8),
        ) {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["object", "x", "y"]).unwrap();
            for (i, row) in rows.iter().enumerate() {
                let id = format!("o{i}");
                w.write_record([id.as_str(), row[0].as_str(), row[1].as_str()]).unwrap();
            }
            let text = String::from_utf8(w.into_inner().unwrap()).unwrap();
            let parsed = parse_table(&text);
            let blank = rows.iter().flatten().any(|v| v.trim().is_empty());
            proptest::prop_assert_eq!(parsed.is_err(), blank);
            if let Ok(t) = parsed {
                proptest::prop_assert_eq!(t.objects().len(), rows.len());
                for (i, row) in rows.iter().enumerate() {
                    proptest::prop_assert_eq!(t.value(i, 0), row[0].trim());
                    proptest::prop_assert_eq!(t.value(i, 1), row[1].trim());
                }
            }
        }
    }
}
