//! Text and JSON renderings of a [`LinearProgram`].
//!
//! The text form is the CPLEX LP format read by most LP solvers. Both
//! renderings are deterministic.

use std::fmt::Write as _;

use num_traits::Signed;
use serde::Serialize;

use crate::lp::{LinearProgram, RowKind, VarKind};
use crate::profiles::Params;
use crate::scalar::{format_decimal, terminating_decimal, Rational};

/// Lines are wrapped well below the 510-character limit of LP readers.
const WRAP: usize = 100;

/// Renders a coefficient for the LP file. Fractions without a finite
/// decimal expansion get 30 places plus a note with the exact value.
fn number(r: &Rational) -> (String, Option<String>) {
    match terminating_decimal(r) {
        Some(s) => (s, None),
        None => (format_decimal(r, 30), Some(r.to_string())),
    }
}

/// Appends `terms` as `± c name` pieces, wrapping onto indented lines.
fn write_expr(out: &mut String, head: &str, terms: &[(usize, Rational)], names: &[String], notes: &mut Vec<String>) {
    let mut line = format!(" {head}:");
    if terms.is_empty() {
        line.push_str(" 0 ");
        line.push_str(&names[0]);
    }
    for (i, (j, c)) in terms.iter().enumerate() {
        let (text, note) = number(&c.abs());
        if let Some(exact) = note {
            notes.push(format!("{} in {head} is {}{exact}", names[*j], if c.is_negative() { "-" } else { "" }));
        }
        let sign = if c.is_negative() { "-" } else if i == 0 { "" } else { "+" };
        let coef = if text == "1" { String::new() } else { format!("{text} ") };
        let piece = format!(" {sign}{}{coef}{}", if sign.is_empty() { "" } else { " " }, names[*j]);
        if line.len() + piece.len() > WRAP {
            out.push_str(&line);
            out.push('\n');
            line = "   ".to_string();
        }
        line.push_str(&piece);
    }
    out.push_str(&line);
}

pub fn export_lp_text(lp: &LinearProgram) -> String {
    let mut out = String::new();
    let mut notes = Vec::new();
    let _ = writeln!(out, "\\ EDCS factor-revealing LP for (beta, beta_minus) = {}", lp.params);
    let _ = writeln!(
        out,
        "\\ {} vertex variables, {} edge variables, {} rows",
        lp.vertex_var_count(),
        lp.edge_var_count(),
        lp.num_rows()
    );
    out.push_str("Maximize\n");
    write_expr(&mut out, "obj", &lp.objective, &lp.var_names, &mut notes);
    out.push_str("\nSubject To\n");
    for row in &lp.rows {
        write_expr(&mut out, &row.name, &row.coeffs, &lp.var_names, &mut notes);
        let (rhs, note) = number(&row.rhs);
        if let Some(exact) = note {
            notes.push(format!("right-hand side of {} is {exact}", row.name));
        }
        let _ = writeln!(out, " = {rhs}");
    }
    out.push_str("Bounds\n");
    for name in &lp.var_names {
        let _ = writeln!(out, " {name} >= 0");
    }
    out.push_str("End\n");
    for n in notes {
        let _ = writeln!(out, "\\ exact: {n}");
    }
    out
}

#[derive(Serialize)]
struct ModelJson<'a> {
    params: Params,
    num_vars: usize,
    num_rows: usize,
    variables: Vec<VariableJson<'a>>,
    objective: Vec<(usize, &'a Rational)>,
    rows: Vec<RowJson<'a>>,
}

#[derive(Serialize)]
struct VariableJson<'a> {
    index: usize,
    name: &'a str,
    #[serde(flatten)]
    kind: &'a VarKind,
}

#[derive(Serialize)]
struct RowJson<'a> {
    name: &'a str,
    kind: RowKind,
    coeffs: Vec<(usize, &'a Rational)>,
    rhs: &'a Rational,
}

/// Full model dump: every variable with its profile, every row with
/// `[index, "p/q"]` coefficients.
pub fn export_lp_json(lp: &LinearProgram) -> String {
    let model = ModelJson {
        params: lp.params,
        num_vars: lp.num_vars,
        num_rows: lp.num_rows(),
        variables: lp
            .var_names
            .iter()
            .zip(&lp.var_kind)
            .enumerate()
            .map(|(index, (name, kind))| VariableJson { index, name, kind })
            .collect(),
        objective: lp.objective.iter().map(|(j, c)| (*j, c)).collect(),
        rows: lp
            .rows
            .iter()
            .map(|r| RowJson {
                name: &r.name,
                kind: r.kind,
                coeffs: r.coeffs.iter().map(|(j, c)| (*j, c)).collect(),
                rhs: &r.rhs,
            })
            .collect(),
    };
    serde_json::to_string_pretty(&model).expect("models always serialize") + "\n"
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lp::build_lp;
    use std::collections::HashMap;

    fn lp21() -> LinearProgram {
        build_lp(&Params::new(2, 1).unwrap()).unwrap()
    }

    /// Reads the constraint section back into `(name, coeffs, rhs)`.
    fn parse_rows(text: &str) -> Vec<(String, HashMap<String, Rational>, Rational)> {
        let body = text.split("Subject To\n").nth(1).unwrap().split("Bounds\n").next().unwrap();
        let mut rows = Vec::new();
        let mut current = String::new();
        for line in body.lines() {
            if !line.starts_with("   ") && !current.is_empty() {
                rows.push(std::mem::take(&mut current));
            }
            current.push_str(line);
            current.push(' ');
        }
        rows.push(current);
        rows.into_iter()
            .map(|row| {
                let (name, rest) = row.split_once(':').unwrap();
                let (lhs, rhs) = rest.split_once('=').unwrap();
                let mut coeffs = HashMap::new();
                let mut sign = Rational::from_integer(1);
                let mut coef: Option<Rational> = None;
                for tok in lhs.split_whitespace() {
                    match tok {
                        "+" => sign = Rational::from_integer(1),
                        "-" => sign = Rational::from_integer(-1),
                        t if t.as_bytes()[0].is_ascii_digit() => coef = Some(t.parse().unwrap()),
                        t => {
                            let c = coef.take().unwrap_or_else(|| Rational::from_integer(1));
                            coeffs.insert(t.to_string(), &sign * &c);
                            sign = Rational::from_integer(1);
                        }
                    }
                }
                (name.trim().to_string(), coeffs, rhs.trim().parse().unwrap())
            })
            .collect()
    }

    #[test]
    fn one_row_with_unit_rhs() {
        let text = export_lp_text(&lp21());
        let rows = parse_rows(&text);
        assert_eq!(rows.iter().filter(|r| r.2 == Rational::from_integer(1)).count(), 1);
        assert!(text.starts_with("\\ EDCS"));
        assert!(text.ends_with("End\n"));
    }

    #[test]
    fn text_round_trips_rows() {
        let lp = build_lp(&Params::new(5, 3).unwrap()).unwrap();
        let rows = parse_rows(&export_lp_text(&lp));
        assert_eq!(rows.len(), lp.num_rows());
        for (row, (name, coeffs, rhs)) in lp.rows.iter().zip(rows) {
            assert_eq!(row.name, name);
            assert_eq!(row.rhs, rhs);
            assert_eq!(row.coeffs.len(), coeffs.len());
            for (j, c) in &row.coeffs {
                assert_eq!(&coeffs[&lp.var_names[*j]], c);
            }
        }
    }

    #[test]
    fn exports_are_deterministic() {
        assert_eq!(export_lp_text(&lp21()), export_lp_text(&lp21()));
        assert_eq!(export_lp_json(&lp21()), export_lp_json(&lp21()));
    }

    #[test]
    fn json_lists_sixteen_vertex_variables() {
        let v: serde_json::Value = serde_json::from_str(&export_lp_json(&lp21())).unwrap();
        let vars = v["variables"].as_array().unwrap();
        assert_eq!(vars.iter().filter(|x| x["kind"] == "vertex").count(), 16);
        assert_eq!(v["rows"].as_array().unwrap().len(), lp21().num_rows());
    }

    #[test]
    fn non_terminating_fraction_gets_note() {
        let (text, note) = number(&Rational::new(1, 3));
        assert!(text.starts_with("0.333333"));
        assert_eq!(note.as_deref(), Some("1/3"));
        assert_eq!(number(&Rational::new(-5, 4)).0, "-1.25");
    }
}
