//! File formats: the ideal interchange format (JSON and text), polyhedron and
//! complex JSON, and the fixed TSV tables for scans.

use crate::error::{Error, Result};
use crate::homology::SimplicialComplex;
use crate::ideal::{ExponentVector, MonomialIdeal};
use crate::newton::NewtonPolyhedron;
use crate::varset::VarSet;
use serde::{Deserialize, Serialize};

/// Serde adapter for big integers as decimal strings (the stability bounds
/// routinely exceed every machine-integer width).
pub mod bigint_string {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};
    use std::str::FromStr;

    pub fn serialize<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&x.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let text = String::deserialize(d)?;
        BigInt::from_str(&text).map_err(serde::de::Error::custom)
    }
}

/// An ideal plus the variable names it was declared with.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedIdeal {
    pub variables: Vec<String>,
    pub ideal: MonomialIdeal,
}

impl NamedIdeal {
    pub fn with_default_names(ideal: MonomialIdeal) -> Self {
        NamedIdeal {
            variables: default_variables(ideal.rank()),
            ideal,
        }
    }
}

pub fn default_variables(rank: usize) -> Vec<String> {
    const NAMES: [&str; 6] = ["x", "y", "z", "w", "v", "u"];
    if rank <= NAMES.len() {
        NAMES[..rank].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=rank).map(|i| format!("x{i}")).collect()
    }
}

#[derive(Serialize, Deserialize)]
struct IdealRepr {
    variables: Vec<String>,
    generators: GeneratorsRepr,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum GeneratorsRepr {
    Exponents(Vec<Vec<i64>>),
    Monomials(Vec<String>),
    Text(String),
}

/// Parse an ideal from either format, dispatching on the leading character:
/// JSON object or the two-part text form (a `variables:` line followed by a
/// comma-separated monomial list).
pub fn parse_ideal(input: &str) -> Result<NamedIdeal> {
    if input.trim_start().starts_with('{') {
        parse_ideal_json(input)
    } else {
        parse_ideal_text(input)
    }
}

pub fn parse_ideal_file(path: &std::path::Path) -> Result<NamedIdeal> {
    parse_ideal(&std::fs::read_to_string(path)?)
}

pub fn parse_ideal_json(input: &str) -> Result<NamedIdeal> {
    let repr: IdealRepr = serde_json::from_str(input)?;
    validate_variables(&repr.variables)?;
    let rank = repr.variables.len();
    let gens = match repr.generators {
        GeneratorsRepr::Exponents(rows) => {
            let mut gens = Vec::with_capacity(rows.len());
            for row in rows {
                if row.len() != rank {
                    return Err(Error::DimensionMismatch {
                        expected: rank,
                        got: row.len(),
                    });
                }
                gens.push(ExponentVector(row));
            }
            gens
        }
        GeneratorsRepr::Monomials(items) => {
            let joined = items.join(", ");
            parse_monomial_list(&joined, &repr.variables, 1)?
        }
        GeneratorsRepr::Text(text) => parse_monomial_list(&text, &repr.variables, 1)?,
    };
    build_proper_ideal(rank, gens, repr.variables)
}

/// Text form:
/// ```text
/// variables: x, y, z
/// x^3, x*y*z, y^2*z
/// ```
pub fn parse_ideal_text(input: &str) -> Result<NamedIdeal> {
    let mut lines = input.lines().enumerate();
    let (header_line, header) = loop {
        match lines.next() {
            Some((idx, line)) if !line.trim().is_empty() => break (idx, line),
            Some(_) => continue,
            None => {
                return Err(Error::Parse {
                    line: 1,
                    column: 1,
                    message: "empty ideal file".into(),
                })
            }
        }
    };
    let Some(rest) = header.trim_start().strip_prefix("variables:") else {
        return Err(Error::Parse {
            line: header_line + 1,
            column: 1,
            message: "expected a `variables:` line".into(),
        });
    };
    let variables: Vec<String> = rest
        .split(&[',', ' '][..])
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(str::to_string)
        .collect();
    validate_variables(&variables)?;
    let body: String = input
        .lines()
        .skip(header_line + 1)
        .collect::<Vec<_>>()
        .join("\n");
    let gens = parse_monomial_list(&body, &variables, header_line + 2)?;
    build_proper_ideal(variables.len(), gens, variables)
}

fn validate_variables(variables: &[String]) -> Result<()> {
    if variables.is_empty() {
        return Err(Error::Parse {
            line: 1,
            column: 1,
            message: "at least one variable must be declared".into(),
        });
    }
    for (i, v) in variables.iter().enumerate() {
        if v.is_empty() || !v.chars().all(|c| c.is_alphanumeric() || c == '_') {
            return Err(Error::Parse {
                line: 1,
                column: 1,
                message: format!("invalid variable name {v:?}"),
            });
        }
        if variables[..i].contains(v) {
            return Err(Error::Parse {
                line: 1,
                column: 1,
                message: format!("duplicate variable name {v:?}"),
            });
        }
    }
    Ok(())
}

fn build_proper_ideal(
    rank: usize,
    gens: Vec<ExponentVector>,
    variables: Vec<String>,
) -> Result<NamedIdeal> {
    if gens.is_empty() {
        return Err(Error::Parse {
            line: 1,
            column: 1,
            message: "the generator list is empty".into(),
        });
    }
    if gens.iter().any(|g| g.is_zero()) {
        return Err(Error::Parse {
            line: 1,
            column: 1,
            message: "a generator equals 1, which makes the ideal improper".into(),
        });
    }
    let ideal = MonomialIdeal::minimalize(rank, gens)?;
    Ok(NamedIdeal { variables, ideal })
}

/// Parse `x^3, x*y*z, y^2*z` against the declared variables, tracking the
/// line and column of any malformity. `first_line` is the 1-based line
/// number of the start of `text` inside its containing file.
pub fn parse_monomial_list(
    text: &str,
    variables: &[String],
    first_line: usize,
) -> Result<Vec<ExponentVector>> {
    let mut parser = MonomialParser {
        chars: text.chars().collect(),
        pos: 0,
        line: first_line,
        column: 1,
        variables,
    };
    parser.parse_list()
}

struct MonomialParser<'a> {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    column: usize,
    variables: &'a [String],
}

impl<'a> MonomialParser<'a> {
    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            line: self.line,
            column: self.column,
            message: message.into(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += 1;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.bump();
        }
    }

    fn parse_list(&mut self) -> Result<Vec<ExponentVector>> {
        let mut out = Vec::new();
        loop {
            self.skip_ws();
            if self.peek().is_none() {
                break;
            }
            out.push(self.parse_monomial()?);
            self.skip_ws();
            match self.peek() {
                None => break,
                Some(',') => {
                    self.bump();
                }
                Some(c) => return Err(self.error(format!("expected `,` between monomials, found {c:?}"))),
            }
        }
        Ok(out)
    }

    fn parse_monomial(&mut self) -> Result<ExponentVector> {
        let mut exps = vec![0i64; self.variables.len()];
        loop {
            self.skip_ws();
            match self.peek() {
                Some('1') => {
                    self.bump();
                }
                Some(c) if c.is_alphabetic() || c == '_' => {
                    let name = self.parse_ident();
                    let Some(idx) = self.variables.iter().position(|v| *v == name) else {
                        return Err(self.error(format!("unknown variable {name:?}")));
                    };
                    let exp = if self.peek() == Some('^') {
                        self.bump();
                        self.parse_integer()?
                    } else {
                        1
                    };
                    exps[idx] += exp;
                }
                Some(c) => return Err(self.error(format!("expected a variable, found {c:?}"))),
                None => return Err(self.error("expected a monomial, found end of input")),
            }
            self.skip_ws();
            if self.peek() == Some('*') {
                self.bump();
                continue;
            }
            break;
        }
        Ok(ExponentVector(exps))
    }

    fn parse_ident(&mut self) -> String {
        let mut name = String::new();
        while matches!(self.peek(), Some(c) if c.is_alphanumeric() || c == '_') {
            name.push(self.bump().expect("peeked"));
        }
        name
    }

    fn parse_integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let mut digits = String::new();
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            digits.push(self.bump().expect("peeked"));
        }
        if digits.is_empty() {
            return Err(self.error("expected an exponent after `^`"));
        }
        digits
            .parse()
            .map_err(|_| self.error(format!("exponent {digits} does not fit in 64 bits")))
    }
}

/// Render a monomial against variable names (`1` for the empty monomial).
pub fn format_monomial(exps: &ExponentVector, variables: &[String]) -> String {
    let mut parts = Vec::new();
    for (i, &e) in exps.coords().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(variables[i].clone()),
            _ => parts.push(format!("{}^{}", variables[i], e)),
        }
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

/// The JSON interchange form of an ideal.
pub fn ideal_to_json(named: &NamedIdeal) -> serde_json::Value {
    serde_json::json!({
        "variables": named.variables,
        "generators": named
            .ideal
            .generators()
            .iter()
            .map(|g| g.coords().to_vec())
            .collect::<Vec<_>>(),
    })
}

/// Polyhedron JSON: `{"facets": [{"a": [...], "b": int}...], "vertices": [[...]...]}`.
pub fn polyhedron_to_json(np: &NewtonPolyhedron) -> Result<serde_json::Value> {
    Ok(serde_json::to_value(SerializedPolyhedron {
        facets: np.facets().to_vec(),
        vertices: np
            .vertices()
            .iter()
            .map(|v| v.coords().to_vec())
            .collect(),
    })?)
}

#[derive(Serialize)]
struct SerializedPolyhedron {
    facets: Vec<crate::newton::Halfspace>,
    vertices: Vec<Vec<i64>>,
}

/// Complex JSON: `{"ground": r, "facets": [[ints]...], "state": ...}`.
pub fn complex_to_json(complex: &SimplicialComplex) -> serde_json::Value {
    let state = if complex.is_void() {
        "void"
    } else if complex.is_empty_complex() {
        "empty"
    } else {
        "plain"
    };
    serde_json::json!({
        "ground": complex.ground_size(),
        "facets": complex
            .facets()
            .iter()
            .map(|f| f.indices())
            .collect::<Vec<_>>(),
        "state": state,
    })
}

pub fn complex_from_json(value: &serde_json::Value) -> Result<SimplicialComplex> {
    #[derive(Deserialize)]
    struct Repr {
        ground: usize,
        facets: Vec<Vec<usize>>,
        state: String,
    }
    let repr: Repr = serde_json::from_value(value.clone())?;
    match repr.state.as_str() {
        "void" => Ok(SimplicialComplex::void(repr.ground)),
        "empty" => Ok(SimplicialComplex::empty(repr.ground)),
        "plain" => SimplicialComplex::generated_by(
            repr.ground,
            repr.facets
                .iter()
                .map(|f| VarSet::from_indices(f.iter().copied())),
        ),
        other => Err(Error::InvalidArgument(format!(
            "unknown complex state {other:?}"
        ))),
    }
}

/// One row of the fixed scan table.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ScanRow {
    pub n: u32,
    pub depth: usize,
    pub dim: usize,
    pub is_cm: bool,
    pub ass_count: usize,
    pub max_ass_is_maximal: bool,
}

/// TSV with the documented fixed columns.
pub fn scan_table_tsv(rows: &[ScanRow]) -> String {
    let mut out = String::from("n\tdepth\tdim\tis_cm\tass_count\tmax_ass_is_maximal\n");
    for row in rows {
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\t{}\n",
            row.n, row.depth, row.dim, row.is_cm, row.ass_count, row.max_ass_is_maximal
        ));
    }
    out
}

/// The two-column depth table.
pub fn depth_table_tsv(rows: &[(u32, usize)]) -> String {
    let mut out = String::from("n\tdepth\n");
    for (n, depth) in rows {
        out.push_str(&format!("{n}\t{depth}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_json_with_exponent_rows() {
        let named = parse_ideal(
            r#"{"variables":["x","y","z"],"generators":[[3,0,0],[1,1,1],[0,2,1]]}"#,
        )
        .unwrap();
        assert_eq!(named.variables, vec!["x", "y", "z"]);
        assert_eq!(named.ideal.num_generators(), 3);
        assert_eq!(named.ideal.max_gen_degree(), 3);
    }

    #[test]
    fn parse_json_with_text_generators() {
        let named =
            parse_ideal(r#"{"variables":["x","y"],"generators":"x^2, y^3"}"#).unwrap();
        assert_eq!(
            named.ideal.generators(),
            &[ExponentVector(vec![0, 3]), ExponentVector(vec![2, 0])]
        );
    }

    #[test]
    fn parse_text_form() {
        let named = parse_ideal("variables: x, y, z\nx^3, x*y*z, y^2*z\n").unwrap();
        assert_eq!(named.ideal.num_generators(), 3);
        assert_eq!(
            format_monomial(&named.ideal.generators()[0], &named.variables),
            "y^2*z"
        );
    }

    #[test]
    fn parse_rejects_unit_generator() {
        let err = parse_ideal("variables: x, y\nx^0\n").unwrap_err();
        assert!(matches!(err, Error::Parse { .. }), "{err}");
        let err = parse_ideal(r#"{"variables":["x"],"generators":[[0]]}"#).unwrap_err();
        assert!(matches!(err, Error::Parse { .. }), "{err}");
    }

    #[test]
    fn parse_rejects_empty_generators() {
        let err = parse_ideal(r#"{"variables":["x"],"generators":[]}"#).unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
    }

    #[test]
    fn parse_error_carries_position() {
        let err = parse_ideal("variables: x, y\nx^2, q*y\n").unwrap_err();
        match err {
            Error::Parse { line, column, message } => {
                assert_eq!(line, 2);
                assert_eq!(column, 7);
                assert!(message.contains("unknown variable"), "{message}");
            }
            other => panic!("unexpected error {other}"),
        }
    }

    #[test]
    fn repeated_variables_multiply() {
        let named =
            parse_ideal(r#"{"variables":["x","y"],"generators":"x*y*x"}"#).unwrap();
        assert_eq!(named.ideal.generators(), &[ExponentVector(vec![2, 1])]);
    }

    #[test]
    fn tsv_fixed_columns() {
        let rows = vec![ScanRow {
            n: 1,
            depth: 2,
            dim: 2,
            is_cm: true,
            ass_count: 3,
            max_ass_is_maximal: false,
        }];
        let tsv = scan_table_tsv(&rows);
        assert_eq!(
            tsv,
            "n\tdepth\tdim\tis_cm\tass_count\tmax_ass_is_maximal\n1\t2\t2\ttrue\t3\tfalse\n"
        );
    }

    #[test]
    fn complex_json_roundtrip() {
        for complex in [
            SimplicialComplex::void(3),
            SimplicialComplex::empty(3),
            SimplicialComplex::generated_by(
                3,
                [VarSet::from_indices([0, 1]), VarSet::from_indices([2])],
            )
            .unwrap(),
        ] {
            let json = complex_to_json(&complex);
            assert_eq!(complex_from_json(&json).unwrap(), complex);
        }
    }
}
