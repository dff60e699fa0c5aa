//! Tabular scan output: fixed 15-significant-digit CSV and a bare poly-line SVG.

use crate::C64;
use std::fmt::Write as _;
use std::io::Write;

/// C-style `%.15g`.
pub fn fmt_g15(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return if x.is_sign_negative() { "-0".into() } else { "0".into() };
    }
    let sci = format!("{x:.14e}");
    let (mant, exp) = sci.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("exponent digits");
    if !(-4..15).contains(&exp) {
        let mant = trim_zeros(mant);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{mant}e{sign}{:02}", exp.abs())
    } else {
        let decimals = (14 - exp).max(0) as usize;
        trim_zeros(&format!("{x:.decimals$}")).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// One table cell.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Cell {
    Real(f64),
    Complex(C64),
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Real(x)
    }
}

impl From<C64> for Cell {
    fn from(z: C64) -> Self {
        Cell::Complex(z)
    }
}

/// Rectangular table of decimal columns; complex cells split into _re/_im.
#[derive(Debug, Clone, PartialEq)]
pub struct ScanTable {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

impl ScanTable {
    pub fn new(headers: &[&str]) -> Self {
        ScanTable { headers: headers.iter().map(|h| h.to_string()).collect(), rows: Vec::new() }
    }

    /// Headers for a row layout where `complex[i]` marks column i as complex.
    pub fn with_layout(names: &[&str], complex: &[bool]) -> Self {
        let mut headers = Vec::new();
        for (name, &c) in names.iter().zip(complex) {
            if c {
                headers.push(format!("{name}_re"));
                headers.push(format!("{name}_im"));
            } else {
                headers.push(name.to_string());
            }
        }
        ScanTable { headers, rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<f64>) {
        assert_eq!(row.len(), self.headers.len(), "row width must match header count");
        self.rows.push(row);
    }

    pub fn push_cells(&mut self, cells: &[Cell]) {
        let mut row = Vec::with_capacity(self.headers.len());
        for c in cells {
            match *c {
                Cell::Real(x) => row.push(x),
                Cell::Complex(z) => {
                    row.push(z.re);
                    row.push(z.im);
                }
            }
        }
        self.push(row);
    }

    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let i = self.headers.iter().position(|h| h == name)?;
        Some(self.rows.iter().map(|r| r[i]).collect())
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.headers.join(",");
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|&x| fmt_g15(x)).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    /// Poly-line plot of every column against the first.
    pub fn to_svg(&self) -> String {
        const W: f64 = 640.0;
        const H: f64 = 400.0;
        const PAD: f64 = 40.0;
        const COLORS: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"];
        let mut svg = String::new();
        let _ = writeln!(svg, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" viewBox="0 0 {W} {H}">"#);
        let _ = writeln!(svg, r#"<rect x="0" y="0" width="{W}" height="{H}" fill="white"/>"#);
        let finite = |v: &f64| v.is_finite();
        let xs: Vec<f64> = self.rows.iter().map(|r| r[0]).collect();
        let (xmin, xmax) = bounds(xs.iter().copied().filter(finite));
        let mut ymin = f64::INFINITY;
        let mut ymax = f64::NEG_INFINITY;
        for r in &self.rows {
            for v in r.iter().skip(1).filter(|v| v.is_finite()) {
                ymin = ymin.min(*v);
                ymax = ymax.max(*v);
            }
        }
        if !ymin.is_finite() {
            ymin = 0.0;
            ymax = 1.0;
        }
        if ymax == ymin {
            ymax = ymin + 1.0;
        }
        let sx = |x: f64| PAD + (x - xmin) / (xmax - xmin) * (W - 2.0 * PAD);
        let sy = |y: f64| H - PAD - (y - ymin) / (ymax - ymin) * (H - 2.0 * PAD);
        let _ = writeln!(
            svg,
            r#"<rect x="{PAD}" y="{PAD}" width="{}" height="{}" fill="none" stroke="black"/>"#,
            W - 2.0 * PAD,
            H - 2.0 * PAD
        );
        for col in 1..self.headers.len() {
            let mut pts = String::new();
            for r in &self.rows {
                if r[0].is_finite() && r[col].is_finite() {
                    let _ = write!(pts, "{:.2},{:.2} ", sx(r[0]), sy(r[col]));
                }
            }
            let color = COLORS[(col - 1) % COLORS.len()];
            let _ = writeln!(svg, r#"<polyline fill="none" stroke="{color}" stroke-width="1" points="{}"/>"#, pts.trim_end());
            let _ = writeln!(
                svg,
                r#"<text x="{}" y="{}" font-size="11" fill="{color}">{}</text>"#,
                PAD + 4.0,
                PAD + 12.0 * col as f64,
                self.headers[col]
            );
        }
        let _ = writeln!(
            svg,
            r#"<text x="{PAD}" y="{}" font-size="11">{}: {} .. {}</text>"#,
            H - 12.0,
            self.headers[0],
            fmt_g15(xmin),
            fmt_g15(xmax)
        );
        svg.push_str("</svg>\n");
        svg
    }

    pub fn write_csv<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        w.write_all(self.to_csv().as_bytes())
    }

    pub fn write_svg<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        w.write_all(self.to_svg().as_bytes())
    }
}

fn bounds(it: impl Iterator<Item = f64>) -> (f64, f64) {
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for v in it {
        lo = lo.min(v);
        hi = hi.max(v);
    }
    if !lo.is_finite() {
        return (0.0, 1.0);
    }
    if hi == lo {
        (lo, lo + 1.0)
    } else {
        (lo, hi)
    }
}
