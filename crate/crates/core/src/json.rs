//! JSON interchange documents.
//!
//! Output is canonical: compact, entries sorted lexicographically by index
//! tuple, zero coefficients omitted, rationals in lowest terms. Parsing then
//! re-serializing a canonical document reproduces it byte for byte.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laws::{LawKind, LawReport};
use crate::perm::Permutation;
use crate::product::{Orientation, ProductSpec};
use crate::rational::{self, Rational};
use crate::table::NAryTable;
use crate::tensor::Tensor;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EntryDoc {
    idx: Vec<usize>,
    val: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TensorDoc {
    p: usize,
    q: usize,
    dim: usize,
    entries: Vec<EntryDoc>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TableDoc {
    n: usize,
    dim: usize,
    entries: Vec<EntryDoc>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SpecDoc {
    k: usize,
    orientation: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    transpose: Option<Vec<Vec<usize>>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ReportDoc {
    holds: bool,
    law: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    sigma: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    p: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    input: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    lhs: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    rhs: Vec<String>,
}

/// Summary of one operad component.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OperadDims {
    pub arity: usize,
    pub free_dim: usize,
    pub ideal_rank: usize,
    pub quotient_dim: usize,
}

/// Summary of the dual relation space at arity 5.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OperadDual {
    pub arity: usize,
    pub perp_dim: usize,
    pub matches_partial_closure: bool,
}

fn parse_doc<'a, T: Deserialize<'a>>(s: &'a str) -> Result<T> {
    serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
}

fn write_doc<T: Serialize>(doc: &T) -> String {
    serde_json::to_string(doc).expect("documents contain only strings, numbers and lists")
}

fn entry_docs<'a>(entries: impl Iterator<Item = (&'a Vec<usize>, &'a Rational)>) -> Vec<EntryDoc> {
    entries
        .map(|(idx, v)| EntryDoc {
            idx: idx.clone(),
            val: rational::format(v),
        })
        .collect()
}

fn parse_entries(entries: Vec<EntryDoc>) -> Result<Vec<(Vec<usize>, Rational)>> {
    entries
        .into_iter()
        .map(|e| Ok((e.idx, rational::parse(&e.val)?)))
        .collect()
}

pub fn tensor_to_json(t: &Tensor) -> String {
    write_doc(&TensorDoc {
        p: t.p(),
        q: t.q(),
        dim: t.dim(),
        entries: entry_docs(t.entries()),
    })
}

pub fn tensor_from_json(s: &str) -> Result<Tensor> {
    let doc: TensorDoc = parse_doc(s)?;
    Tensor::new(doc.p, doc.q, doc.dim, parse_entries(doc.entries)?)
}

pub fn table_to_json(t: &NAryTable) -> String {
    write_doc(&TableDoc {
        n: t.arity(),
        dim: t.dim(),
        entries: entry_docs(t.entries()),
    })
}

pub fn table_from_json(s: &str) -> Result<NAryTable> {
    let doc: TableDoc = parse_doc(s)?;
    NAryTable::new(doc.n, doc.dim, parse_entries(doc.entries)?)
}

pub fn spec_to_json(spec: &ProductSpec) -> String {
    write_doc(&SpecDoc {
        k: spec.k,
        orientation: spec.orientation.code().to_string(),
        transpose: spec
            .transpose
            .as_ref()
            .map(|pattern| pattern.iter().map(Permutation::images).collect()),
    })
}

pub fn spec_from_json(s: &str) -> Result<ProductSpec> {
    let doc: SpecDoc = parse_doc(s)?;
    let orientation = Orientation::from_code(&doc.orientation)
        .ok_or_else(|| Error::Parse(format!("unknown orientation {:?}", doc.orientation)))?;
    let mut spec = ProductSpec::new(doc.k, orientation);
    if let Some(pattern) = doc.transpose {
        let perms = pattern
            .iter()
            .map(|images| Permutation::from_images(images))
            .collect::<Result<Vec<_>>>()?;
        spec = spec.with_transpose(perms);
    }
    Ok(spec)
}

pub fn report_to_json(r: &LawReport) -> String {
    write_doc(&ReportDoc {
        holds: r.holds,
        law: r.law.name().to_string(),
        sigma: r.sigma.clone(),
        p: r.position,
        input: r.input.clone(),
        lhs: r.lhs.iter().map(rational::format).collect(),
        rhs: r.rhs.iter().map(rational::format).collect(),
    })
}

pub fn report_from_json(s: &str) -> Result<LawReport> {
    let doc: ReportDoc = parse_doc(s)?;
    let law = LawKind::from_name(&doc.law).ok_or_else(|| Error::Parse(format!("unknown law {:?}", doc.law)))?;
    let values = |xs: &[String]| xs.iter().map(|x| rational::parse(x)).collect::<Result<Vec<_>>>();
    Ok(LawReport {
        holds: doc.holds,
        law,
        sigma: doc.sigma,
        position: doc.p,
        input: doc.input,
        lhs: values(&doc.lhs)?,
        rhs: values(&doc.rhs)?,
    })
}

pub fn operad_dims_to_json(d: &OperadDims) -> String {
    write_doc(d)
}

pub fn operad_dual_to_json(d: &OperadDual) -> String {
    write_doc(d)
}

/// Re-serializes a Tensor document in canonical form.
pub fn canonical_tensor(s: &str) -> Result<String> {
    Ok(tensor_to_json(&tensor_from_json(s)?))
}

/// Re-serializes an NAryTable document in canonical form.
pub fn canonical_table(s: &str) -> Result<String> {
    Ok(table_to_json(&table_from_json(s)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laws::{check, Law};
    use crate::rational::{int, ratio};

    #[test]
    fn tensor_document_shape() {
        let t = Tensor::new(2, 1, 3, [(vec![1, 2, 3], ratio(5, 3)), (vec![1, 1, 1], int(-2))]).unwrap();
        assert_eq!(
            tensor_to_json(&t),
            r#"{"p":2,"q":1,"dim":3,"entries":[{"idx":[1,1,1],"val":"-2"},{"idx":[1,2,3],"val":"5/3"}]}"#
        );
        assert_eq!(tensor_from_json(&tensor_to_json(&t)).unwrap(), t);
    }

    #[test]
    fn canonical_form_is_a_fixed_point() {
        let messy = r#"{ "dim": 2, "p": 1, "q": 1,
            "entries": [ {"val": "6/4", "idx": [2, 1]}, {"idx": [1, 1], "val": "0"}, {"idx": [1, 2], "val": "-3"} ] }"#;
        let once = canonical_tensor(messy).unwrap();
        assert_eq!(
            once,
            r#"{"p":1,"q":1,"dim":2,"entries":[{"idx":[1,2],"val":"-3"},{"idx":[2,1],"val":"3/2"}]}"#
        );
        assert_eq!(canonical_tensor(&once).unwrap(), once);
    }

    #[test]
    fn malformed_documents() {
        assert!(matches!(tensor_from_json("{"), Err(Error::Parse(_))));
        assert!(matches!(
            tensor_from_json(r#"{"p":1,"q":1,"dim":2,"entries":[{"idx":[1,1],"val":"0.5"}]}"#),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            tensor_from_json(r#"{"p":1,"q":1,"dim":2,"entries":[],"extra":1}"#),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            tensor_from_json(r#"{"p":1,"q":1,"dim":2,"entries":[{"idx":[1,3],"val":"1"}]}"#),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            tensor_from_json(r#"{"p":1,"q":1,"dim":2,"entries":[{"idx":[1,1],"val":"1"},{"idx":[1,1],"val":"2"}]}"#),
            Err(Error::DuplicateEntry(_))
        ));
    }

    #[test]
    fn table_round_trip() {
        let t = crate::random::random_table(3, 2, 5, 4, 0.6);
        let s = table_to_json(&t);
        assert!(s.starts_with(r#"{"n":3,"dim":2,"entries":["#));
        assert_eq!(table_from_json(&s).unwrap(), t);
        assert_eq!(canonical_table(&s).unwrap(), s);
    }

    #[test]
    fn spec_documents() {
        let s = r#"{"k":1,"orientation":"ltr","transpose":[[1,2],[1,2],[2,1]]}"#;
        let spec = spec_from_json(s).unwrap();
        assert_eq!(
            spec,
            ProductSpec::ltr(1).transposing(3, Permutation::transposition(2, 1, 2))
        );
        assert_eq!(spec_to_json(&spec), s);
        let plain = spec_from_json(r#"{"k":2,"orientation":"rtl"}"#).unwrap();
        assert_eq!(plain, ProductSpec::rtl(2));
        assert_eq!(spec_to_json(&plain), r#"{"k":2,"orientation":"rtl"}"#);
        assert!(matches!(
            spec_from_json(r#"{"k":1,"orientation":"up"}"#),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            spec_from_json(r#"{"k":1,"orientation":"ltr","transpose":[[1,1],[1,2],[1,2]]}"#),
            Err(Error::InvalidPermutation(_))
        ));
    }

    #[test]
    fn report_documents() {
        // e1 e1 = e1, e1 e2 = e2: a failing total law at arity 2
        let t = NAryTable::new(2, 2, [(vec![1, 1, 1], int(1)), (vec![2, 1, 2], int(1))]).unwrap();
        let r = check(&t, &Law::sigma_total(Permutation::identity(2))).unwrap();
        let s = report_to_json(&r);
        assert_eq!(report_from_json(&s).unwrap(), r);
        let ok = check(&NAryTable::zero(2, 2), &Law::total(2)).unwrap();
        assert_eq!(report_to_json(&ok), r#"{"holds":true,"law":"total"}"#);
    }

    #[test]
    fn operad_summaries() {
        let d = OperadDims {
            arity: 5,
            free_dim: 360,
            ideal_rank: 240,
            quotient_dim: 120,
        };
        assert_eq!(
            operad_dims_to_json(&d),
            r#"{"arity":5,"free_dim":360,"ideal_rank":240,"quotient_dim":120}"#
        );
        let u = OperadDual {
            arity: 5,
            perp_dim: 120,
            matches_partial_closure: true,
        };
        assert_eq!(
            operad_dual_to_json(&u),
            r#"{"arity":5,"perp_dim":120,"matches_partial_closure":true}"#
        );
    }
}
