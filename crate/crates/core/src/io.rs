//! JSON file formats. Coefficients travel as decimal strings.
//!
//! Polynomial: `{"nvars": n, "terms": [{"exp": [..], "coeff": "-3"}]}`.
//! Expansion: `{"basis": "schubert", "terms": [{"label": [..], "coeff": "2"}]}`.
//! Terms are sorted lexicographically by exponent or label.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::combinatorics::Code;
use crate::error::{Error, Result};
use crate::interpolation::{BasisKind, Expansion};
use crate::poly::SparsePolynomial;

#[derive(Serialize, Deserialize)]
struct PolyTerm {
    exp: Vec<u32>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct PolyFile {
    nvars: usize,
    terms: Vec<PolyTerm>,
}

#[derive(Serialize, Deserialize)]
struct ExpansionTerm {
    label: Vec<u32>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct ExpansionFile {
    basis: BasisKind,
    terms: Vec<ExpansionTerm>,
}

fn parse_coeff(s: &str) -> Result<BigInt> {
    s.parse().map_err(|_| Error::Parse(format!("bad coefficient {s:?}")))
}

pub fn poly_to_json(p: &SparsePolynomial<BigInt>) -> String {
    let file = PolyFile {
        nvars: p.nvars(),
        terms: p
            .terms()
            .map(|(e, c)| PolyTerm { exp: e.clone(), coeff: c.to_string() })
            .collect(),
    };
    serde_json::to_string(&file).expect("serializable")
}

pub fn poly_from_json(s: &str) -> Result<SparsePolynomial<BigInt>> {
    let file: PolyFile = serde_json::from_str(s)?;
    let mut terms = Vec::with_capacity(file.terms.len());
    for t in file.terms {
        if t.exp.len() != file.nvars {
            return Err(Error::Parse(format!(
                "exponent {:?} does not have {} entries",
                t.exp, file.nvars
            )));
        }
        terms.push((t.exp, parse_coeff(&t.coeff)?));
    }
    SparsePolynomial::from_terms(file.nvars, terms)
}

pub fn expansion_to_json(e: &Expansion) -> String {
    let file = ExpansionFile {
        basis: e.basis,
        terms: e
            .terms()
            .iter()
            .map(|(label, c)| ExpansionTerm { label: label.entries().to_vec(), coeff: c.to_string() })
            .collect(),
    };
    serde_json::to_string(&file).expect("serializable")
}

pub fn expansion_from_json(s: &str) -> Result<Expansion> {
    let file: ExpansionFile = serde_json::from_str(s)?;
    let mut terms = Vec::with_capacity(file.terms.len());
    for t in file.terms {
        terms.push((Code::new(t.label), parse_coeff(&t.coeff)?));
    }
    Ok(Expansion::from_terms(file.basis, terms))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn polynomial_round_trip() {
        let p = SparsePolynomial::from_terms(
            2,
            vec![(vec![0, 2], big(1)), (vec![1, 1], big(1)), (vec![2, 0], big(1) << 80u32), (vec![0, 0], big(-3))],
        )
        .unwrap();
        let text = poly_to_json(&p);
        assert_eq!(poly_from_json(&text).unwrap(), p);
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(value["terms"][0]["exp"], serde_json::json!([0, 0]));
        assert_eq!(value["terms"][0]["coeff"], "-3");
        assert_eq!(value["terms"][3]["coeff"], "1208925819614629174706176");
    }

    #[test]
    fn expansion_round_trip_and_order() {
        let e = Expansion::from_terms(
            BasisKind::Schubert,
            [(Code::new(vec![1]), big(2)), (Code::new(vec![0, 1]), big(3))],
        );
        let text = expansion_to_json(&e);
        assert_eq!(expansion_from_json(&text).unwrap(), e);
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(value["basis"], "schubert");
        assert_eq!(value["terms"][0]["label"], serde_json::json!([0, 1]));
        assert_eq!(value["terms"][1]["coeff"], "2");
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(poly_from_json(r#"{"nvars": 2, "terms": [{"exp": [1], "coeff": "1"}]}"#).is_err());
        assert!(poly_from_json(r#"{"nvars": 1, "terms": [{"exp": [1], "coeff": "x"}]}"#).is_err());
        assert!(expansion_from_json(r#"{"basis": "other", "terms": []}"#).is_err());
        assert!(poly_from_json("not json").is_err());
    }
}
