use clap::ValueEnum;
use qschubert::combinat::Partition;
use qschubert::{QhElem, Space};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

/// One `c q^d sigma_nu` term of a result.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Term {
    pub nu: Vec<u32>,
    pub d: u32,
    pub c: i64,
}

pub fn terms_of(x: &QhElem) -> Vec<Term> {
    let mut out: Vec<Term> = x
        .iter()
        .map(|(nu, d, c)| Term {
            nu: nu.parts().to_vec(),
            d,
            c: *c,
        })
        .collect();
    out.sort();
    out
}

pub fn element_of(space: Space, terms: &[Term]) -> QhElem {
    let mut x = QhElem::zero(space);
    for t in terms {
        x.add_term(Partition::from_unsorted(t.nu.clone()), t.d, t.c);
    }
    x
}

pub fn document(query: &Value, result: Value) -> String {
    json!({ "query": query, "result": result }).to_string()
}

pub fn terms_document(query: &Value, terms: &[Term]) -> String {
    document(query, serde_json::to_value(terms).expect("terms serialize"))
}
