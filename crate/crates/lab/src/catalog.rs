//! Worked examples with the degree values they are cited for.

use std::time::Instant;

use anyhow::Result;
use knotlab_core::laurent::{Exp4, LaurentPoly1, LaurentPoly2};
use knotlab_core::skein::{degrees, homfly, homfly_braid, mirror_homfly};
use knotlab_core::laurent::homfly_to_jones;
use serde::{Deserialize, Serialize};

use crate::input::parse_literal;
use crate::Budgets;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    MinDegV,
    MaxDegV,
    SpanV,
    MinDegLP,
    /// `(bands - strands + 1) / 2` of a band representation.
    BandGenus,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Expected {
    pub quantity: Quantity,
    pub value: Exp4,
    pub citation: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Chirality {
    AsGiven,
    /// The cited values may refer to either mirror image; both are computed.
    Either,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub label: String,
    pub input: String,
    pub expected: Vec<Expected>,
    pub chirality: Chirality,
    pub note: String,
    /// `(bands, strands)` of a band representation, when one is cited.
    pub bands: Option<(usize, usize)>,
}

fn ex(quantity: Quantity, value: Exp4, citation: &str) -> Expected {
    Expected { quantity, value, citation: citation.to_string() }
}

pub fn catalog() -> Vec<CatalogEntry> {
    use Quantity::*;
    let mut out = vec![
        CatalogEntry {
            label: "15_162508".into(),
            input: "5: -1 -2 3 4 -3 2 1 -2 1 2 2 -3 4 3 -2 3".into(),
            expected: vec![ex(MinDegV, Exp4::int(1), "example !15_162508: ribbon knot with min deg V = 1")],
            chirality: Chirality::Either,
            note: "quasipositive 5-braid of the mirrored table knot; both chiralities computed".into(),
            bands: None,
        },
        CatalogEntry {
            label: "brep".into(),
            input: "4: 1 1 1 2 -1 2 1 3 1 2 -1 2 2 3 -2 1 2 -1 2 3 -2".into(),
            expected: vec![
                ex(MinDegV, Exp4::int(5), "example ex2: min deg V = 5 > g_s = 4"),
                ex(MinDegLP, Exp4::int(10), "remark after example Cx: min deg_l P = 10"),
            ],
            chirality: Chirality::AsGiven,
            note: "strongly quasipositive 4-braid".into(),
            bands: None,
        },
        CatalogEntry {
            label: "Cx".into(),
            input: "4: (2 3 -2 1 2 -1)^3 1".into(),
            expected: vec![
                ex(MinDegV, Exp4::int(3), "example Cx: min deg V = 3"),
                ex(MinDegLP, Exp4::int(4), "example Cx: min deg_l P = 4"),
                ex(BandGenus, Exp4::int(2), "example Cx: 7 bands on 4 strands, g = 2"),
            ],
            chirality: Chirality::AsGiven,
            note: "band representation with 7 bands".into(),
            bands: Some((7, 4)),
        },
    ];
    for n in 3..=5i64 {
        // 1 - χ(L_n) = n
        let threes = vec!["3"; n as usize].join(" ");
        out.push(CatalogEntry {
            label: format!("L{n}"),
            input: format!("pretzel: {threes} -1"),
            expected: vec![
                ex(MinDegV, Exp4::half(n), "corollary capo: min deg V = (1-χ)/2"),
                ex(MaxDegV, Exp4::half(7 * n - 4), "corollary capo: max deg V = 7(1-χ)/2 - 2"),
                ex(SpanV, Exp4::int(3 * n - 2), "corollary capo: span V = 3(1-χ) - 2"),
            ],
            chirality: Chirality::AsGiven,
            note: format!("({threes}, -1)-pretzel, twist regions reverse-oriented"),
            bands: None,
        });
    }
    out
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Check {
    pub quantity: Quantity,
    pub expected: Exp4,
    pub computed: Option<Exp4>,
    pub pass: bool,
    pub citation: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EntryResult {
    pub label: String,
    pub crossings: usize,
    /// `as_given` or `mirror`: the chirality whose values matched.
    pub chirality: Option<String>,
    pub checks: Vec<Check>,
    pub pass: bool,
    pub jones: String,
    pub millis: u128,
}

fn quantity(q: Quantity, v: &LaurentPoly1, p: &LaurentPoly2, bands: Option<(usize, usize)>) -> Option<Exp4> {
    match q {
        Quantity::MinDegV => v.min_deg().ok(),
        Quantity::MaxDegV => v.max_deg().ok(),
        Quantity::SpanV => v.span().ok(),
        Quantity::MinDegLP => degrees(p).ok().map(|d| Exp4::int(d.min_l)),
        Quantity::BandGenus => bands.and_then(|(b, s)| {
            let twice = b as i64 - s as i64 + 1;
            (twice % 2 == 0).then(|| Exp4::int(twice / 2))
        }),
    }
}

fn checks(e: &CatalogEntry, v: &LaurentPoly1, p: &LaurentPoly2) -> Vec<Check> {
    e.expected
        .iter()
        .map(|x| {
            let computed = quantity(x.quantity, v, p, e.bands);
            Check { quantity: x.quantity, expected: x.value, computed, pass: computed == Some(x.value), citation: x.citation.clone() }
        })
        .collect()
}

pub fn run_entry(e: &CatalogEntry, budgets: &Budgets) -> Result<EntryResult> {
    let t = Instant::now();
    let parsed = parse_literal(&e.input)?;
    let p = match &parsed.braid {
        Some(b) => homfly_braid(b, budgets.skein)?,
        None => homfly(&parsed.diagram, budgets.skein)?,
    };
    let v = homfly_to_jones(&p)?;
    let mut found = checks(e, &v, &p);
    let mut chirality = found.iter().all(|c| c.pass).then(|| "as_given".to_string());
    let mut jones = v.to_list_notation();
    if chirality.is_none() && e.chirality == Chirality::Either {
        let pm = mirror_homfly(&p);
        let vm = homfly_to_jones(&pm)?;
        let other = checks(e, &vm, &pm);
        if other.iter().all(|c| c.pass) {
            found = other;
            chirality = Some("mirror".into());
            jones = vm.to_list_notation();
        }
    }
    Ok(EntryResult {
        label: e.label.clone(),
        crossings: parsed.diagram.crossing_count(),
        pass: chirality.is_some(),
        chirality,
        checks: found,
        jones,
        millis: t.elapsed().as_millis(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_value_is_cited() {
        for e in catalog() {
            assert!(!e.expected.is_empty());
            assert!(e.expected.iter().all(|x| !x.citation.trim().is_empty()), "{}", e.label);
            parse_literal(&e.input).unwrap();
        }
    }

    #[test]
    fn cx_word_has_nineteen_letters() {
        let e = catalog().into_iter().find(|e| e.label == "Cx").unwrap();
        assert_eq!(parse_literal(&e.input).unwrap().braid.unwrap().word.len(), 19);
    }
}
