//! Report rendering: fixed-notation CSV numbers and JSON.

use serde::Serialize;

use crate::error::CliError;

pub const SIG_DIGITS: usize = 10;

/// `x` in fixed notation with `sig` significant digits.
pub fn fixed_sig(x: f64, sig: usize) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return format!("{:.*}", sig - 1, 0.0);
    }
    let a = x.abs();
    let mut mag = a.log10().floor() as i32;
    if 10f64.powi(mag) > a {
        mag -= 1;
    } else if 10f64.powi(mag + 1) <= a {
        mag += 1;
    }
    let decimals = |mag: i32| (sig as i32 - 1 - mag).max(0) as usize;
    let s = format!("{:.*}", decimals(mag), x);
    // rounding can carry into a new leading digit, e.g. 9.9999999999 -> 10.000000000
    let rounded: f64 = s.parse().expect("formatted float parses");
    if rounded.abs() >= 10f64.powi(mag + 1) {
        format!("{:.*}", decimals(mag + 1), x)
    } else {
        s
    }
}

/// One CSV field.
pub enum Cell {
    Num(f64),
    Text(String),
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Num(x)
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_string())
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Self {
        Cell::Text(s)
    }
}

/// In-memory CSV table.
pub struct Csv {
    writer: csv::Writer<Vec<u8>>,
}

impl Csv {
    pub fn new(header: &[&str]) -> Self {
        let mut writer = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
        writer.write_record(header).expect("writing to memory");
        Self { writer }
    }

    pub fn row(&mut self, cells: impl IntoIterator<Item = Cell>) {
        let fields: Vec<String> = cells
            .into_iter()
            .map(|c| match c {
                Cell::Num(x) => fixed_sig(x, SIG_DIGITS),
                Cell::Text(s) => s,
            })
            .collect();
        self.writer.write_record(&fields).expect("writing to memory");
    }

    pub fn finish(self) -> String {
        let bytes = self.writer.into_inner().expect("flushing to memory");
        String::from_utf8(bytes).expect("CSV is UTF-8")
    }
}

pub fn json<T: Serialize>(value: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| CliError::Internal(e.to_string()))?;
    s.push('\n');
    Ok(s)
}
