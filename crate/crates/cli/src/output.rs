use std::fs;
use std::io::{self, Write};
use std::path::Path;

/// Fixed 17-significant-digit rendering used in every CSV.
pub fn num(x: f64) -> String {
    format!("{x:.16e}")
}

/// CSV text: `#` comment lines, then comma-separated rows.
#[derive(Debug, Default)]
pub struct Csv {
    text: String,
}

impl Csv {
    pub fn comment(&mut self, line: impl AsRef<str>) {
        self.text.push_str("# ");
        self.text.push_str(line.as_ref());
        self.text.push('\n');
    }

    pub fn row<I, S>(&mut self, cells: I)
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut first = true;
        for c in cells {
            if !first {
                self.text.push(',');
            }
            self.text.push_str(c.as_ref());
            first = false;
        }
        self.text.push('\n');
    }

    pub fn into_string(self) -> String {
        self.text
    }
}

pub fn emit(text: &str, path: Option<&Path>) -> io::Result<()> {
    match path {
        Some(p) => fs::write(p, text),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seventeen_digits() {
        assert_eq!(num(0.1), "1.0000000000000001e-1");
        assert_eq!(num(1.0 / 3.0).parse::<f64>().unwrap(), 1.0 / 3.0);
    }

    #[test]
    fn csv_layout() {
        let mut c = Csv::default();
        c.comment("x: 1");
        c.row(["a", "b"]);
        assert_eq!(c.into_string(), "# x: 1\na,b\n");
    }
}
