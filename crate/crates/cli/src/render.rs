//! Output formatting: factored polynomial display, 3-significant-figure
//! table cells, and the text/CSV/JSON shapes of reports and spectra.

use serde_json::{json, Value};
use twinshift_core::displacement::{
    ChosenSource, DisplacementReport, ReportRow, RowKind, SecondOrderRoots,
};
use twinshift_core::spectra::Spectrum;
use twinshift_core::{Polynomial, TwinPair};

/// Factors out `λ^m (λ+1)^m` by exact division and prints the remainder in
/// descending monomial form, mirroring the reference notation.
pub fn factored(p: &Polynomial) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut rest = p.clone();
    let mut lambda_pow = 0usize;
    while let Ok(q) = rest.exact_div(&Polynomial::monomial(1.into(), 1)) {
        rest = q;
        lambda_pow += 1;
    }
    let mut plus_one_pow = 0usize;
    while rest.degree().is_some_and(|d| d >= 1) {
        match rest.exact_div(&Polynomial::lambda_plus(1)) {
            Ok(q) => {
                rest = q;
                plus_one_pow += 1;
            }
            Err(_) => break,
        }
    }
    // a linear leftover reads better expanded (λ² − 1, not (λ+1)(λ − 1))
    if lambda_pow + plus_one_pow == 0 || rest.degree() == Some(1) {
        return p.to_string();
    }
    let mut parts = Vec::new();
    match lambda_pow {
        0 => {}
        1 => parts.push("λ".to_string()),
        m => parts.push(format!("λ^{m}")),
    }
    match plus_one_pow {
        0 => {}
        1 => parts.push("(λ+1)".to_string()),
        m => parts.push(format!("(λ+1)^{m}")),
    }
    if rest != Polynomial::one() {
        parts.push(format!("({rest})"));
    }
    parts.join(" ")
}

/// Rounds to three significant figures, the display precision of the
/// reference tables.
pub fn sig3(v: f64) -> String {
    if v == 0.0 {
        return "0".into();
    }
    if !v.is_finite() {
        return format!("{v}");
    }
    let exp = v.abs().log10().floor() as i32;
    if !(-4..=5).contains(&exp) {
        return format!("{v:.2e}");
    }
    let decimals = (2 - exp).max(0) as usize;
    let s = format!("{v:.decimals$}");
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

fn opt_sig3(v: Option<f64>) -> String {
    v.map_or("---".into(), sig3)
}

/// Second-order cell with the chosen value starred.
pub fn second_cell(row: &ReportRow) -> String {
    let star = |x: f64| -> &'static str {
        if row.chosen == Some(x) && row.source != Some(ChosenSource::FirstOnly) {
            "*"
        } else {
            ""
        }
    };
    match row.second {
        None => "---".into(),
        Some(SecondOrderRoots::RealPair { lower, upper }) => match upper {
            Some(upper) => format!(
                "{}{}, {}{}",
                sig3(lower),
                star(lower),
                sig3(upper),
                star(upper)
            ),
            None => format!("{}{}", sig3(lower), star(lower)),
        },
        Some(SecondOrderRoots::Conjugate { re, im }) => {
            format!("{}{} ± {}j", sig3(re), star(re), sig3(im))
        }
    }
}

fn source_str(s: ChosenSource) -> &'static str {
    match s {
        ChosenSource::FirstOnly => "first_only",
        ChosenSource::RealRoot => "real_root",
        ChosenSource::RealPartOfConjugates => "real_part_of_conjugates",
    }
}

fn kind_str(k: RowKind) -> &'static str {
    match k {
        RowKind::Estimated => "estimated",
        RowKind::Removed => "removed",
        RowKind::ForcedZero => "forced_zero",
        RowKind::Pinned => "pinned",
        RowKind::Absorbed => "absorbed",
        RowKind::Degenerate => "degenerate",
    }
}

pub fn report_text(report: &DisplacementReport) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "Twin pair ({}, {}) {:?}; removed eigenvalue {}\n",
        report.pair.ell, report.pair.k, report.pair.kind, report.removed_eigenvalue
    ));
    let headers = ["G", "G'", "Actual", "First-order", "Second-order", "Note"];
    let mut rows: Vec<[String; 6]> = Vec::new();
    for row in &report.rows {
        let first_cell = match (row.first, row.source) {
            (Some(f), Some(ChosenSource::FirstOnly)) => format!("{}*", sig3(f)),
            (Some(f), _) => sig3(f),
            (None, _) => "---".into(),
        };
        rows.push([
            sig3(row.lambda_g),
            opt_sig3(row.lambda_gp),
            opt_sig3(row.actual),
            first_cell,
            second_cell(row),
            row.note.clone().unwrap_or_default(),
        ]);
    }
    let mut widths = headers.map(str::len);
    for r in &rows {
        for (w, cell) in widths.iter_mut().zip(r.iter()) {
            *w = (*w).max(cell.len());
        }
    }
    let fmt_line = |cells: [&str; 6]| -> String {
        cells
            .iter()
            .zip(widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect::<Vec<_>>()
            .join("  ")
    };
    out.push_str(&fmt_line(headers));
    out.push('\n');
    for r in &rows {
        out.push_str(&fmt_line([&r[0], &r[1], &r[2], &r[3], &r[4], &r[5]]));
        out.push('\n');
    }
    out
}

pub fn report_csv(report: &DisplacementReport) -> String {
    let mut out = String::from("eigenvalue_g,eigenvalue_gp,actual_displacement,first_order,second_order\n");
    for row in &report.rows {
        let second = match row.second {
            None => String::new(),
            Some(SecondOrderRoots::RealPair { lower, upper }) => match upper {
                Some(u) => format!("{lower}; {u}"),
                None => format!("{lower}"),
            },
            Some(SecondOrderRoots::Conjugate { re, im }) => format!("{re} ± {im}j"),
        };
        let cell = |v: Option<f64>| v.map_or(String::new(), |x| x.to_string());
        out.push_str(&format!(
            "{},{},{},{},\"{}\"\n",
            row.lambda_g,
            cell(row.lambda_gp),
            cell(row.actual),
            cell(row.first),
            second
        ));
    }
    out
}

pub fn row_json(row: &ReportRow) -> Value {
    let second = match row.second {
        None => json!({ "kind": "none" }),
        Some(SecondOrderRoots::RealPair { lower, upper }) => {
            let values: Vec<f64> = std::iter::once(lower).chain(upper).collect();
            json!({ "kind": "real_pair", "values": values })
        }
        Some(SecondOrderRoots::Conjugate { re, im }) => {
            json!({ "kind": "conjugate", "values": [re, im] })
        }
    };
    json!({
        "lambda_g": row.lambda_g,
        "exact_g": row.exact_g.as_ref().map(|x| x.to_string()),
        "mult_g": row.mult_g,
        "lambda_gp": row.lambda_gp,
        "exact_gp": row.exact_gp.as_ref().map(|x| x.to_string()),
        "mult_gp": row.mult_gp,
        "actual": row.actual,
        "first": row.first,
        "second": second,
        "chosen": row.chosen,
        "source": row.source.map(source_str),
        "window": row.window.map(|w| vec![w.lo, w.hi]),
        "kind": kind_str(row.kind),
        "notes": row.note,
        "error": row.error,
    })
}

pub fn report_json(report: &DisplacementReport) -> Value {
    json!({
        "pair": { "ell": report.pair.ell, "k": report.pair.k, "kind": format!("{:?}", report.pair.kind) },
        "removed_eigenvalue": report.removed_eigenvalue,
        "tol": report.tol,
        "rows": report.rows.iter().map(row_json).collect::<Vec<_>>(),
        "spectrum_g": serde_json::to_value(report.spectrum_g.roots()).unwrap(),
        "spectrum_gp": serde_json::to_value(report.spectrum_gp.roots()).unwrap(),
    })
}

pub fn spectrum_text(spec: &Spectrum) -> String {
    let mut out = String::from("value  multiplicity  exact  interval\n");
    for r in spec.roots() {
        out.push_str(&format!(
            "{}  {}  {}  [{}, {}]\n",
            sig3(r.value),
            r.multiplicity,
            r.exact.as_ref().map_or("-".into(), |e| e.to_string()),
            r.interval.0,
            r.interval.1
        ));
    }
    out
}

pub fn spectrum_csv(spec: &Spectrum) -> String {
    let mut out = String::from("value,multiplicity,exact,interval_lo,interval_hi\n");
    for r in spec.roots() {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            r.value,
            r.multiplicity,
            r.exact.as_ref().map_or(String::new(), |e| e.to_string()),
            r.interval.0,
            r.interval.1
        ));
    }
    out
}

pub fn twins_json(pairs: &[TwinPair]) -> Value {
    Value::Array(
        pairs
            .iter()
            .map(|p| {
                json!({
                    "ell": p.ell,
                    "k": p.k,
                    "kind": format!("{:?}", p.kind),
                    "a": p.a(),
                    "removed_eigenvalue": p.removed_eigenvalue(),
                })
            })
            .collect(),
    )
}
