//! CSV output: header row, `,` separators, LF endings, 9 significant digits.

use std::io::{self, Write};

/// Formats `x` with 9 significant digits, in fixed notation when the
/// exponent is moderate and scientific otherwise.
pub fn sig9(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let sci = format!("{x:.8e}");
    let exp: i32 = sci
        .rsplit_once('e')
        .and_then(|(_, e)| e.parse().ok())
        .expect("scientific formatting always carries an exponent");
    if (-5..15).contains(&exp) {
        let decimals = (8 - exp).max(0) as usize;
        format!("{x:.decimals$}")
    } else {
        sci
    }
}

/// A CSV table accumulated in memory and written in one go.
#[derive(Debug, Clone, Default)]
pub struct Table {
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

/// One CSV cell.
pub enum Cell {
    Num(f64),
    Bool(bool),
    Text(String),
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Num(x)
    }
}

impl From<bool> for Cell {
    fn from(b: bool) -> Self {
        Cell::Bool(b)
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Self {
        Cell::Text(s)
    }
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Table {
            header: header.iter().map(|h| h.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(
            row.into_iter()
                .map(|c| match c {
                    Cell::Num(x) => sig9(x),
                    Cell::Bool(b) => b.to_string(),
                    Cell::Text(s) => s,
                })
                .collect(),
        );
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn write_to<W: Write + ?Sized>(&self, out: &mut W) -> io::Result<()> {
        writeln!(out, "{}", self.header.join(","))?;
        for row in &self.rows {
            writeln!(out, "{}", row.join(","))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nine_significant_digits() {
        assert_eq!(sig9(0.5), "0.500000000");
        assert_eq!(sig9(0.104_400_544_291_677_7), "0.104400544");
        assert_eq!(sig9(-5.0), "-5.00000000");
        assert_eq!(sig9(2.0), "2.00000000");
        assert_eq!(sig9(123_456.789_012), "123456.789");
        assert_eq!(sig9(9.999_999_999_9), "10.0000000");
        assert_eq!(sig9(1.234_567_891e-7), "1.23456789e-7");
        assert_eq!(sig9(0.0), "0");
        assert_eq!(sig9(1e20), "1.00000000e20");
    }

    #[test]
    fn table_layout() {
        let mut t = Table::new(&["a", "b", "ok"]);
        t.push(vec![1.0.into(), 0.25.into(), true.into()]);
        let mut buf = Vec::new();
        t.write_to(&mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "a,b,ok\n1.00000000,0.250000000,true\n"
        );
    }
}
