use num_traits::One;
use polyring::Rational;

/// Indented key/value report writer. The output is a pure function of the
/// data fed in; rationals are always rendered `p/q`.
#[derive(Debug, Default)]
pub struct ReportBuilder {
    out: String,
    indent: usize,
}

impl ReportBuilder {
    pub fn new() -> Self {
        ReportBuilder::default()
    }

    pub fn kv(&mut self, key: &str, value: impl AsRef<str>) -> &mut Self {
        for _ in 0..self.indent {
            self.out.push_str("  ");
        }
        self.out.push_str(key);
        self.out.push_str(": ");
        self.out.push_str(value.as_ref());
        self.out.push('\n');
        self
    }

    pub fn section(&mut self, key: &str) -> &mut Self {
        for _ in 0..self.indent {
            self.out.push_str("  ");
        }
        self.out.push_str(key);
        self.out.push_str(":\n");
        self.indent += 1;
        self
    }

    pub fn end_section(&mut self) -> &mut Self {
        debug_assert!(self.indent > 0);
        self.indent -= 1;
        self
    }

    /// An aligned two-column table (used with `--table`).
    pub fn table(&mut self, key: &str, header: (&str, &str), rows: &[(String, String)]) {
        self.section(key);
        let w0 = rows
            .iter()
            .map(|(a, _)| a.len())
            .chain([header.0.len()])
            .max()
            .unwrap_or(0);
        let line = |a: &str, b: &str, this: &mut Self| {
            for _ in 0..this.indent {
                this.out.push_str("  ");
            }
            this.out.push_str(&format!("{a:<w0$}  {b}\n"));
        };
        line(header.0, header.1, self);
        for (a, b) in rows {
            line(a, b, self);
        }
        self.end_section();
    }

    pub fn finish(self) -> String {
        debug_assert_eq!(self.indent, 0, "unbalanced sections");
        self.out
    }
}

/// Exact `p/q` serialization, denominator always present.
pub fn rational_pq(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// A whole class vector, low dimension first.
pub fn vector_pq(coeffs: &[Rational]) -> String {
    coeffs
        .iter()
        .map(rational_pq)
        .collect::<Vec<_>>()
        .join(" ")
}

/// Compact rational for human-facing table cells: integers drop the `/1`.
pub fn rational_compact(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}
