//! One-diagram invariant report with per-theorem verdicts.

use std::time::Instant;

use anyhow::Result;
use knotlab_core::bracket::{almost_positive_leading, jones_from_bracket, kauffman_bracket, leading_term_holds, LeadingTerm};
use knotlab_core::diagram::Diagram;
use knotlab_core::evgraph::{classify_fiber_shape, is_fibered_alexander, EvenValenceGraph, FiberCriterion};
use knotlab_core::laurent::{homfly_to_jones, Exp4, LaurentPoly1, LaurentPoly2};
use knotlab_core::seifert::{bennequin, euler_characteristic, murasugi_decomposition, rudolph_bennequin, seifert_circle_count, SeifertData};
use knotlab_core::skein::{alexander_from_homfly, degrees, homfly, homfly_braid, morton_report, nonneg_form};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::input::Parsed;
use crate::Budgets;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    /// The theorem's hypotheses do not hold for this diagram.
    NotApplicable,
    /// A statistic or open question: recorded, never asserted.
    Finding,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Verdict {
    pub theorem: String,
    pub status: Status,
    pub detail: String,
}

impl Verdict {
    fn new(theorem: &str, status: Status, detail: impl Into<String>) -> Self {
        Verdict { theorem: theorem.into(), status, detail: detail.into() }
    }

    fn check(theorem: &str, ok: bool, detail: impl Into<String>) -> Self {
        Self::new(theorem, if ok { Status::Pass } else { Status::Fail }, detail)
    }

    fn na(theorem: &str, why: &str) -> Self {
        Self::new(theorem, Status::NotApplicable, why)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Poly {
    pub text: String,
    /// `(exponent in quarters, coefficient)` pairs.
    pub terms: Vec<(i64, String)>,
}

impl From<&LaurentPoly1> for Poly {
    fn from(p: &LaurentPoly1) -> Self {
        Poly { text: p.to_string(), terms: p.to_json_terms() }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Stats {
    pub crossings: usize,
    pub components: usize,
    pub seifert_circles: usize,
    pub writhe: i64,
    pub chi: i64,
    pub positivity: String,
    pub negative_crossings: usize,
    pub bennequin: i64,
    pub rudolph_bennequin: i64,
    pub connected: bool,
    pub reduced: bool,
    pub prime_factors: Option<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Polynomials {
    /// `None` above the state-sum cap.
    pub bracket: Option<Poly>,
    pub jones: Poly,
    pub jones_list: String,
    pub homfly: String,
    pub alexander_symmetric: Poly,
    pub alexander_nonneg: Poly,
    /// Bracket-route and skein-route Jones polynomials coincide (when both ran).
    pub routes_agree: Option<bool>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GraphData {
    pub reduced_seifert_b1: usize,
    pub murasugi_summands: usize,
    /// Arborescence count of each positive special summand's even valence graph.
    pub arborescences: Vec<Option<String>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Timing {
    pub bracket_ms: u128,
    pub skein_ms: u128,
    pub total_ms: u128,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct InvariantReport {
    pub schema: u32,
    pub input: String,
    pub stats: Stats,
    pub polynomials: Polynomials,
    pub graph: GraphData,
    pub verdicts: Vec<Verdict>,
    /// Alexander fiberedness criterion for the canonical surface of the diagram.
    pub fibered: FiberCriterion,
    pub timing: Timing,
}

impl InvariantReport {
    pub fn failures(&self) -> usize {
        self.verdicts.iter().filter(|v| v.status == Status::Fail).count()
    }
}

pub fn positivity(d: &Diagram) -> String {
    match (d.negative_crossings().len(), d.crossing_count()) {
        (0, _) => "positive".into(),
        (1, _) => "almost positive".into(),
        (k, c) if k == c => "negative".into(),
        (k, _) => format!("{k}-almost positive"),
    }
}

fn sign(k: i64) -> BigInt {
    if k.rem_euclid(2) == 0 {
        BigInt::from(1)
    } else {
        BigInt::from(-1)
    }
}

/// Second coefficient check: `(-1)^n [V]_{(3-χ)/2} = b1` of the reduced Seifert graph.
pub fn cc_holds(d: &Diagram, v: &LaurentPoly1) -> (bool, BigInt, usize) {
    let chi = euler_characteristic(d);
    let coeff = v.coeff(Exp4::half(3 - chi)) * sign(d.component_count() as i64);
    let b1 = SeifertData::new(d).graph(d).reduced().betti1();
    (coeff == BigInt::from(b1), coeff, b1)
}

/// Normalized `(-1)^{n-1} t^{(χ-1)/2} V` coefficients of `t^0..t^3`.
pub fn th1_coefficients(d: &Diagram, v: &LaurentPoly1) -> [BigInt; 4] {
    let chi = euler_characteristic(d);
    let s = sign(d.component_count() as i64 - 1);
    let n = v.scale(&s, Exp4::half(chi - 1));
    [0, 1, 2, 3].map(|k| n.coeff(Exp4::int(k)))
}

/// `-p <= k <= 3/2 (1 - χ - p)` together with `1 + p t^2` at the bottom.
pub fn th1_check(d: &Diagram, v: &LaurentPoly1, p: usize) -> (bool, String) {
    let [c0, c1, c2, c3] = th1_coefficients(d, v);
    let chi = euler_characteristic(d);
    let p = BigInt::from(p);
    let ok = c0 == BigInt::from(1)
        && c1 == BigInt::from(0)
        && c2 == p
        && -&p <= c3
        && BigInt::from(2) * &c3 <= BigInt::from(3) * (BigInt::from(1 - chi) - &p);
    (ok, format!("normalized 1 + {c1} t + {c2} t^2 + {c3} t^3 + ..., p = {p}, 1-χ = {}", 1 - chi))
}

/// `1 - χ(L)` for a connected almost positive diagram: one less handle pair
/// when the negative crossing has a parallel partner.
pub fn one_minus_chi_link(d: &Diagram, parallel: bool) -> i64 {
    1 - euler_characteristic(d) - if parallel { 2 } else { 0 }
}

pub struct Theo5Star {
    pub holds: bool,
    pub detail: String,
    /// `min deg_l P = 1 - χ(L)`.
    pub q21: bool,
}

pub fn theo5star_check(d: &Diagram, parallel: bool, p: &LaurentPoly2, a: &LaurentPoly1, v: &LaurentPoly1) -> Result<Theo5Star> {
    let target = one_minus_chi_link(d, parallel);
    let deg = degrees(p)?;
    let two_max_a = a.max_deg()?.to_halves();
    let ok = two_max_a == Some(target) && deg.max_m == target && a.max_deg()? == v.min_deg()? && deg.min_l <= target;
    Ok(Theo5Star {
        holds: ok,
        detail: format!(
            "1-χ(L) = {target}, 2 maxdeg Δ = {:?}, maxdeg_m P = {}, maxdeg Δ = {}, min deg V = {}, min deg_l P = {}",
            two_max_a,
            deg.max_m,
            a.max_deg()?,
            v.min_deg()?,
            deg.min_l
        ),
        q21: deg.min_l == target,
    })
}

pub fn describe(t: &LeadingTerm) -> String {
    match t {
        LeadingTerm::Exact { min_deg, min_cf } => format!("min deg V = {min_deg}, min cf = {min_cf}"),
        LeadingTerm::Cancelled { lower_bound } => format!("min deg V >= {lower_bound}"),
    }
}

pub fn invariants(parsed: &Parsed, budgets: &Budgets) -> Result<InvariantReport> {
    let t0 = Instant::now();
    let d = &parsed.diagram;
    let reduced = d.is_reduced();
    let connected = d.is_connected();
    let negs = d.negative_crossings().len();
    let stats = Stats {
        crossings: d.crossing_count(),
        components: d.component_count(),
        seifert_circles: seifert_circle_count(d),
        writhe: d.writhe(),
        chi: euler_characteristic(d),
        positivity: positivity(d),
        negative_crossings: negs,
        bennequin: bennequin(d),
        rudolph_bennequin: rudolph_bennequin(d),
        connected,
        reduced,
        prime_factors: d.prime_factor_count().ok(),
    };

    let t = Instant::now();
    let bracket = kauffman_bracket(d, budgets.state_cap).ok();
    let bracket_ms = t.elapsed().as_millis();
    let t = Instant::now();
    let p = match &parsed.braid {
        Some(b) => homfly_braid(b, budgets.skein)?,
        None => homfly(d, budgets.skein)?,
    };
    let skein_ms = t.elapsed().as_millis();
    let v = homfly_to_jones(&p)?;
    let routes_agree = bracket.as_ref().map(|br| jones_from_bracket(d, br) == v);
    let a = alexander_from_homfly(&p, d.component_count())?;
    let polynomials = Polynomials {
        bracket: bracket.as_ref().map(Poly::from),
        jones: Poly::from(&v),
        jones_list: v.to_list_notation(),
        homfly: p.to_string(),
        alexander_symmetric: Poly::from(&a),
        alexander_nonneg: Poly::from(&nonneg_form(&a)),
        routes_agree,
    };

    let dec = murasugi_decomposition(d);
    let graph = GraphData {
        reduced_seifert_b1: SeifertData::new(d).graph(d).reduced().betti1(),
        murasugi_summands: dec.summands.len(),
        arborescences: dec
            .summands
            .iter()
            .map(|s| {
                if !s.is_positive() || !s.is_connected() {
                    return None;
                }
                EvenValenceGraph::from_special(s).ok().map(|g| g.arborescence_count(0).count.to_string())
            })
            .collect(),
    };

    let mut verdicts = Vec::new();
    if let Some(ok) = routes_agree {
        verdicts.push(Verdict::check("jones-routes", ok, "bracket state sum against HOMFLY substitution"));
    }
    let m = morton_report(d, &p)?;
    verdicts.push(Verdict::check("morton", m.holds, format!("{} <= min_l {} , max_l {} <= {}, max_m {} <= {}", m.lower_l, m.degrees.min_l, m.degrees.max_l, m.upper_l, m.degrees.max_m, m.upper_m)));

    let braid_positive = parsed.braid.as_ref().is_some_and(|b| b.word.iter().all(|&g| g > 0));
    if braid_positive && connected && reduced {
        let (ok, detail) = th1_check(d, &v, stats.prime_factors.unwrap_or(0));
        verdicts.push(Verdict::check("th1", ok, detail));
    } else {
        verdicts.push(Verdict::na("th1", "needs a connected reduced positive braid closure"));
    }

    if negs == 0 && connected {
        let (ok, coeff, b1) = cc_holds(d, &v);
        verdicts.push(Verdict::check("cc", ok, format!("(-1)^n [V]_(3-χ)/2 = {coeff}, b1 = {b1}")));
        if b1 == 0 {
            verdicts.push(Verdict::check("corr1", coeff == BigInt::from(0), format!("[V]_(3-χ)/2 = {coeff}")));
        } else {
            verdicts.push(Verdict::na("corr1", "reduced Seifert graph is not a tree"));
        }
    } else {
        verdicts.push(Verdict::na("cc", "needs a connected positive diagram"));
        verdicts.push(Verdict::na("corr1", "needs a connected positive diagram"));
    }

    if negs == 1 && connected {
        let an = almost_positive_leading(d)?;
        let parallel = an.parallel_count >= 2;
        verdicts.push(Verdict::check("tht", leading_term_holds(&an.prediction, &v), format!("{}, parallel crossings {}", describe(&an.prediction), an.parallel_count)));
        if !parallel && reduced {
            let (deg, cf) = an.reduced_prediction();
            let claim = LeadingTerm::Exact { min_deg: deg, min_cf: cf.clone() };
            verdicts.push(Verdict::check("cr4", leading_term_holds(&claim, &v), format!("min deg V = {deg}, min cf = {cf}")));
        } else {
            verdicts.push(Verdict::na("cr4", "negative crossing has a parallel partner or diagram not reduced"));
        }
        let t5 = theo5star_check(d, parallel, &p, &a, &v)?;
        verdicts.push(Verdict::check("theo5*", t5.holds, t5.detail));
        verdicts.push(Verdict::new("q2.1", Status::Finding, format!("min deg_l P = 1-χ(L): {}", t5.q21)));
        let crit = is_fibered_alexander(d, budgets.skein)?;
        match classify_fiber_shape(d) {
            Ok(shape) => verdicts.push(Verdict::check("th5", shape.is_fibered() == crit.holds, format!("shape {:?} {:?}, Alexander criterion {}", shape.verdict, shape.factors, crit.holds))),
            Err(e) => verdicts.push(Verdict::na("th5", &e.to_string())),
        }
    } else {
        for id in ["tht", "cr4", "theo5*", "th5"] {
            verdicts.push(Verdict::na(id, "needs a connected diagram with exactly one negative crossing"));
        }
    }
    let crit = is_fibered_alexander(d, budgets.skein)?;
    verdicts.push(Verdict::new(
        "fibered-criterion",
        Status::Finding,
        format!("{} (2 maxdeg Δ = {}, 1-χ = {}, min cf = {}{})", crit.holds, crit.two_max_deg.map_or("-".into(), |x| x.to_string()), crit.one_minus_chi, crit.min_cf.as_ref().map_or("-".into(), |c| c.to_string()), if crit.heuristic { ", heuristic" } else { "" }),
    ));

    Ok(InvariantReport {
        schema: 1,
        input: parsed.canonical.clone(),
        stats,
        polynomials,
        graph,
        verdicts,
        fibered: crit,
        timing: Timing { bracket_ms, skein_ms, total_ms: t0.elapsed().as_millis() },
    })
}

pub fn render_text(r: &InvariantReport) -> String {
    let s = &r.stats;
    let mut out = format!(
        "input        {}\ncrossings    {} (w = {}, s = {}, χ = {}, {} component(s), {})\nbennequin    b = {}, rb = {}\nprime factors {}\n",
        r.input,
        s.crossings,
        s.writhe,
        s.seifert_circles,
        s.chi,
        s.components,
        s.positivity,
        s.bennequin,
        s.rudolph_bennequin,
        s.prime_factors.map_or("n/a".into(), |p| p.to_string())
    );
    let p = &r.polynomials;
    out += &format!("V            {}\n             {}\nP            {}\nΔ            {}\n", p.jones.text, p.jones_list, p.homfly, p.alexander_symmetric.text);
    if let Some(b) = &p.bracket {
        out += &format!("<D>          {}\n", b.text);
    }
    let arb: Vec<&str> = r.graph.arborescences.iter().map(|a| a.as_deref().unwrap_or("-")).collect();
    out += &format!("b1(reduced Seifert graph) {}, Murasugi summands {}, arborescences [{}]\n", r.graph.reduced_seifert_b1, r.graph.murasugi_summands, arb.join(", "));
    for v in &r.verdicts {
        let tag = match v.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::NotApplicable => "n/a",
            Status::Finding => "finding",
        };
        out += &format!("  [{tag:>7}] {:<18} {}\n", v.theorem, v.detail);
    }
    out += &format!("time {} ms\n", r.timing.total_ms);
    out
}
