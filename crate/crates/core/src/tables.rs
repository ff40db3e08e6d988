//! Reference tables: the first terms of each sequence (table 1) and the
//! curl values of each pair of sequences (tables 2–4).

use serde::{Deserialize, Serialize};

use crate::closed_forms::{curl_closed_in, CurlQuery};
use crate::error::{Error, Result};
use crate::sequences::{SequenceKind, SequenceTable};
use crate::Integer;

use SequenceKind::*;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub label: String,
    pub kind: SequenceKind,
    #[serde(with = "crate::decimal::vec")]
    pub values: Vec<Integer>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table {
    pub which: u8,
    /// Name of the column index (`n` or `k`).
    pub index_name: String,
    pub columns: Vec<usize>,
    pub rows: Vec<TableRow>,
}

/// The kinds shown in a curl table (2, 3 or 4) and its column count.
pub fn curl_table_layout(which: u8) -> Option<([SequenceKind; 2], usize)> {
    match which {
        2 => Some(([Pell, AssociatedPell], 14)),
        3 => Some(([Balancing, LucasBalancing], 13)),
        4 => Some(([Cobalancing, LucasCobalancing], 13)),
        _ => None,
    }
}

/// Rebuilds table `which` (1–4). Table 1 comes from the recurrences, the
/// others from the closed forms.
pub fn table(which: u8) -> Result<Table> {
    if which == 1 {
        let t = SequenceTable::new(11);
        let rows = SequenceKind::ALL
            .into_iter()
            .map(|kind| TableRow {
                label: format!("{}_n", kind.symbol()),
                kind,
                values: t.row(kind).to_vec(),
            })
            .collect();
        return Ok(Table {
            which,
            index_name: "n".into(),
            columns: (0..=10).collect(),
            rows,
        });
    }
    let (kinds, width) = curl_table_layout(which)
        .ok_or_else(|| Error::Domain(format!("no table {which}; expected 1, 2, 3 or 4")))?;
    let t = SequenceTable::new(width + 1);
    let rows = kinds
        .into_iter()
        .map(|kind| {
            let values = (1..=width)
                .map(|k| curl_closed_in(&t, CurlQuery::new(kind, k, 1)))
                .collect::<Result<Vec<_>>>()?;
            Ok(TableRow {
                label: format!("{}(k)", kind.symbol()),
                kind,
                values,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Table {
        which,
        index_name: "k".into(),
        columns: (1..=width).collect(),
        rows,
    })
}
