use std::fmt;

/// Left-aligned plain-text columns, widths measured in chars.
pub struct Table {
    head: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(head: &[&str]) -> Table {
        Table { head: head.iter().map(|s| s.to_string()).collect(), rows: Vec::new() }
    }

    pub fn row(&mut self, cells: Vec<String>) {
        assert_eq!(cells.len(), self.head.len());
        self.rows.push(cells);
    }
}

impl fmt::Display for Table {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width =
            |c: usize| std::iter::once(&self.head).chain(&self.rows).map(|r| r[c].chars().count()).max().unwrap_or(0);
        let widths: Vec<usize> = (0..self.head.len()).map(width).collect();
        let line = |f: &mut fmt::Formatter<'_>, cells: &[String]| -> fmt::Result {
            let mut out = String::new();
            for (k, cell) in cells.iter().enumerate() {
                if k > 0 {
                    out.push_str("  ");
                }
                out.push_str(cell);
                out.extend(std::iter::repeat_n(' ', widths[k] - cell.chars().count()));
            }
            writeln!(f, "{}", out.trim_end())
        };
        line(f, &self.head)?;
        let rule: Vec<String> = widths.iter().map(|&w| "─".repeat(w)).collect();
        line(f, &rule)?;
        for r in &self.rows {
            line(f, r)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pads_by_chars() {
        let mut t = Table::new(&["T", "P"]);
        t.row(vec!["1/2 ⊕ 3".into(), "0".into()]);
        assert_eq!(t.to_string(), "T        P\n───────  ─\n1/2 ⊕ 3  0\n");
    }
}
