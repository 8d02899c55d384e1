//! The table of Hippasus pairs found by searching `beta = 1, 2, ...`, and its
//! aligned-text, CSV and JSON renderings.

use std::str::FromStr;

use clap::ValueEnum;
use num_traits::One;

use crate::fibonacci::Natural;
use crate::hippasus::{successors, Sign};

/// One Hippasus pair with the derived columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub beta: Natural,
    pub alpha: Natural,
    /// `alpha + beta`
    pub sum: Natural,
    /// `beta * (alpha + beta)`, equal to `alpha^2 + sign`
    pub product: Natural,
    pub sign: Sign,
    pub alpha_squared: Natural,
}

impl TableRow {
    fn new(beta: Natural, alpha: Natural) -> Self {
        let sum = &beta + &alpha;
        let product = &beta * &sum;
        let alpha_squared = &alpha * &alpha;
        let sign = if product > alpha_squared {
            Sign::Plus
        } else {
            Sign::Minus
        };
        TableRow {
            beta,
            alpha,
            sum,
            product,
            sign,
            alpha_squared,
        }
    }

    /// The product written as `alpha^2+1` or `alpha^2-1`.
    pub fn product_annotation(&self) -> String {
        let op = match self.sign {
            Sign::Plus => '+',
            Sign::Minus => '-',
        };
        format!("{}^2{op}1", self.alpha)
    }
}

/// Every Hippasus pair with `beta <= max_beta`, by ascending `beta` then
/// `alpha`. `beta = 1` contributes the two rows `(1, 1)` and `(1, 2)`.
pub fn hippasus_table(max_beta: &Natural) -> Vec<TableRow> {
    let mut rows = Vec::new();
    let mut beta = Natural::one();
    while &beta <= max_beta {
        for alpha in successors(&beta).successors {
            rows.push(TableRow::new(beta.clone(), alpha));
        }
        beta += 1u32;
    }
    rows
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Aligned,
    Csv,
    Json,
}

pub const CSV_HEADER: [&str; 6] = ["beta", "alpha", "sum", "product", "sign", "alpha_squared"];

pub fn render(rows: &[TableRow], format: OutputFormat) -> String {
    match format {
        OutputFormat::Aligned => render_aligned(rows),
        OutputFormat::Csv => render_csv(rows),
        OutputFormat::Json => render_json(rows),
    }
}

/// Right-aligned columns in the layout `beta | alpha | alpha+beta |
/// beta(alpha+beta) | alpha^2`, with the product in `alpha^2±1` form.
pub fn render_aligned(rows: &[TableRow]) -> String {
    let header = ["beta", "alpha", "alpha+beta", "beta(alpha+beta)", "alpha^2"].map(String::from);
    let body: Vec<[String; 5]> = rows
        .iter()
        .map(|r| {
            [
                r.beta.to_string(),
                r.alpha.to_string(),
                r.sum.to_string(),
                r.product_annotation(),
                format!("{}^2", r.alpha),
            ]
        })
        .collect();

    let mut widths = header.clone().map(|h| h.len());
    for row in &body {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }

    let line = |cells: &[String; 5]| {
        let padded: Vec<String> = cells
            .iter()
            .zip(widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect();
        padded.join(" | ")
    };
    let mut out = line(&header);
    out.push('\n');
    let rule: Vec<String> = widths.iter().map(|&w| "-".repeat(w)).collect();
    out.push_str(&rule.join("-+-"));
    out.push('\n');
    for row in &body {
        out.push_str(&line(row));
        out.push('\n');
    }
    out
}

fn row_fields(r: &TableRow) -> [String; 6] {
    [
        r.beta.to_string(),
        r.alpha.to_string(),
        r.sum.to_string(),
        r.product.to_string(),
        r.sign.to_i8().to_string(),
        r.alpha_squared.to_string(),
    ]
}

pub fn render_csv(rows: &[TableRow]) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(CSV_HEADER).expect("in-memory write");
    for r in rows {
        writer.write_record(row_fields(r)).expect("in-memory write");
    }
    let bytes = writer.into_inner().expect("in-memory flush");
    String::from_utf8(bytes).expect("csv output is ASCII")
}

/// Array of objects keyed like the CSV header. Integers are written in full,
/// whatever their size.
pub fn render_json(rows: &[TableRow]) -> String {
    let array = rows
        .iter()
        .map(|r| {
            let object = CSV_HEADER
                .iter()
                .zip(row_fields(r))
                .map(|(key, value)| {
                    let number = serde_json::Number::from_str(&value).expect("decimal integer");
                    (key.to_string(), serde_json::Value::Number(number))
                })
                .collect();
            serde_json::Value::Object(object)
        })
        .collect();
    let mut out = serde_json::to_string_pretty(&serde_json::Value::Array(array))
        .expect("JSON values serialize");
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(n: u64) -> Natural {
        Natural::from(n)
    }

    #[test]
    fn paper_rows() {
        let rows = hippasus_table(&nat(1000));
        assert_eq!(rows.len(), 16);
        let first = &rows[0];
        assert_eq!(
            (first.beta.clone(), first.alpha.clone(), first.sum.clone()),
            (nat(1), nat(1), nat(2))
        );
        assert_eq!(first.product_annotation(), "1^2+1");
        let last = rows.last().unwrap();
        assert_eq!(
            (last.beta.clone(), last.alpha.clone(), last.sum.clone()),
            (nat(987), nat(1597), nat(2584))
        );
        assert_eq!(last.product_annotation(), "1597^2-1");
        assert_eq!(last.alpha_squared, nat(1597 * 1597));
    }

    #[test]
    fn row_invariants() {
        for r in hippasus_table(&nat(5000)) {
            assert_eq!(r.sum, &r.beta + &r.alpha);
            assert_eq!(r.alpha_squared, &r.alpha * &r.alpha);
            match r.sign {
                Sign::Plus => assert_eq!(r.product, &r.alpha_squared + 1u32),
                Sign::Minus => assert_eq!(r.product, &r.alpha_squared - 1u32),
            }
        }
    }

    #[test]
    fn beta_one_gives_two_rows() {
        let rows = hippasus_table(&nat(1));
        assert_eq!(rows.len(), 2);
        assert_eq!(rows[0].alpha, nat(1));
        assert_eq!(rows[1].alpha, nat(2));
        assert_eq!(rows[1].product_annotation(), "2^2-1");
    }

    #[test]
    fn csv_shape() {
        let out = render_csv(&hippasus_table(&nat(2)));
        assert_eq!(
            out,
            "beta,alpha,sum,product,sign,alpha_squared\n1,1,2,2,1,1\n1,2,3,3,-1,4\n2,3,5,10,1,9\n"
        );
    }

    #[test]
    fn json_keeps_big_integers_exact() {
        let beta = crate::fibonacci::fib(crate::fibonacci::FibIndex::new(120).unwrap());
        let alpha = crate::fibonacci::fib(crate::fibonacci::FibIndex::new(121).unwrap());
        let row = TableRow::new(beta, alpha);
        let out = render_json(std::slice::from_ref(&row));
        let parsed: serde_json::Value = serde_json::from_str(&out).unwrap();
        let squared = parsed[0]["alpha_squared"].as_number().unwrap().to_string();
        assert_eq!(squared, row.alpha_squared.to_string());
    }
}
