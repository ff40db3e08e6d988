//! Text layouts shared by the commands.

use serde::Serialize;

/// Grid with a left-aligned label column and right-aligned value columns,
/// separated from the header by a rule.
pub fn ascii_grid(header: &[String], rows: &[Vec<String>]) -> String {
    let ncols = rows
        .iter()
        .map(Vec::len)
        .chain([header.len()])
        .max()
        .unwrap_or(0);
    let mut widths = vec![0usize; ncols];
    for row in rows.iter().map(Vec::as_slice).chain([header]) {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.chars().count());
        }
    }
    let format_row = |row: &[String]| {
        let mut s = String::new();
        for (i, cell) in row.iter().enumerate() {
            let pad = " ".repeat(widths[i] - cell.chars().count());
            if i == 0 {
                s.push_str(cell);
                s.push_str(&pad);
                s.push_str(" |");
            } else {
                s.push(' ');
                s.push_str(&pad);
                s.push_str(cell);
            }
        }
        let mut line = s.trim_end().to_owned();
        line.push('\n');
        line
    };

    let mut out = format_row(header);
    let rule = widths.iter().map(|w| w + 1).sum::<usize>() + 1;
    out.push_str(&"-".repeat(rule));
    out.push('\n');
    for row in rows {
        out.push_str(&format_row(row));
    }
    out
}

pub fn csv_line<S: AsRef<str>>(cells: &[S]) -> String {
    let mut s = cells
        .iter()
        .map(AsRef::as_ref)
        .collect::<Vec<_>>()
        .join(",");
    s.push('\n');
    s
}

pub fn json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types always serialize");
    s.push('\n');
    s
}
