//! Output documents. Every JSON document carries `"schema": "bott-kit/1"`
//! and a `"command"` tag; simple-root indices are 1-based and large
//! integers (dimensions, box sizes) are decimal strings.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

pub const SCHEMA: &str = "bott-kit/1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Document {
    pub schema: String,
    #[serde(flatten)]
    pub report: Report,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "snake_case")]
pub enum Report {
    Roots(RootsReport),
    Bott(BottReport),
    VanishMain(MainReport),
    VanishH1(H1Report),
    VanishSemisimple(SemisimpleReport),
    Invariants(InvariantsReport),
    Sweep(SweepReport),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentEntry {
    pub index: usize,
    #[serde(rename = "type")]
    pub kind: String,
    pub nodes: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootEntry {
    pub coeffs: Vec<i64>,
    pub component: usize,
    pub height: i64,
    /// Squared length as an exact rational, e.g. `"2/3"`.
    pub sq_len: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootsReport {
    pub diagram: String,
    pub rank: usize,
    pub components: Vec<ComponentEntry>,
    pub count: usize,
    pub roots: Vec<RootEntry>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ResultKind {
    AllZero,
    Concentrated,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BottResult {
    pub kind: ResultKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BottReport {
    pub diagram: String,
    pub sigma: Vec<usize>,
    pub weight: Vec<i64>,
    pub result: BottResult,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessEntry {
    pub root: Vec<i64>,
    pub sigma: Vec<i64>,
    pub fastpath: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MainReport {
    pub diagram: String,
    pub sigma: Vec<usize>,
    pub weight: Vec<i64>,
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    /// `H^q = 0` for `0 <= q < q_max`.
    pub q_max: usize,
    pub witnesses: Vec<WitnessEntry>,
    pub insignificant: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RangeKind {
    Range,
    NoGuarantee,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct H1Report {
    pub diagram: String,
    pub sigma: Vec<usize>,
    pub dim: u64,
    pub d_p: u64,
    pub ell_p: usize,
    pub kind: RangeKind,
    /// `H^q = 0` for `lower < q < upper`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lower: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub upper: Option<usize>,
    pub rigid: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummandEntry {
    pub weight: Vec<i64>,
    pub a: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ell: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BoundKind {
    Unbounded,
    Bounded,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemisimpleReport {
    pub diagram: String,
    pub sigma: Vec<usize>,
    pub b: Vec<usize>,
    pub summands: Vec<SummandEntry>,
    pub kind: BoundKind,
    /// `H^q = 0` for `0 < q < q_max`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q_max: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdjacentEntry {
    pub nodes: Vec<usize>,
    #[serde(rename = "type")]
    pub kind: String,
    pub d_i: u64,
    pub ell: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlphaEntry {
    pub alpha: usize,
    pub d: u64,
    pub ell: usize,
    pub adjacent: Vec<AdjacentEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantsReport {
    pub diagram: String,
    pub sigma: Vec<usize>,
    pub flag_dimension: usize,
    pub alphas: Vec<AlphaEntry>,
    pub d_p: u64,
    pub ell_p: usize,
    /// Representations of dimension below this give rigid bundles; absent
    /// when `d(P) = 1`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rigid_below: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ModeKind {
    Exhaustive,
    Sampled,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViolationEntry {
    pub weight: Vec<i64>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub diagram: String,
    pub sigma: Vec<usize>,
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub bounds: Vec<[i64; 2]>,
    pub mode: ModeKind,
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub samples: Option<u64>,
    pub box_size: String,
    pub bound: usize,
    pub weights_checked: u64,
    pub regular: u64,
    pub singular: u64,
    pub bott_checked: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub min_index: Option<usize>,
    pub violations: Vec<ViolationEntry>,
    pub runtime_us: u64,
}

fn set(v: &[usize]) -> String {
    let items: Vec<String> = v.iter().map(|i| i.to_string()).collect();
    format!("{{{}}}", items.join(", "))
}

fn tuple(v: &[i64]) -> String {
    let items: Vec<String> = v.iter().map(|i| i.to_string()).collect();
    format!("({})", items.join(", "))
}

fn empty_note(width: usize) -> &'static str {
    if width <= 1 {
        " (empty range)"
    } else {
        ""
    }
}

fn root_name(c: &[i64]) -> String {
    let terms: Vec<String> = c
        .iter()
        .enumerate()
        .filter(|(_, &x)| x != 0)
        .map(|(i, &x)| if x == 1 { format!("a{}", i + 1) } else { format!("{x}a{}", i + 1) })
        .collect();
    terms.join("+")
}

impl Document {
    pub fn new(report: Report) -> Self {
        Document {
            schema: SCHEMA.to_string(),
            report,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let o = &mut out;
        match &self.report {
            Report::Roots(r) => {
                let _ = writeln!(o, "{}: rank {}, {} positive roots", r.diagram, r.rank, r.count);
                for c in &r.components {
                    let _ = writeln!(o, "component {}: {} on {}", c.index, c.kind, set(&c.nodes));
                }
                for e in &r.roots {
                    let _ = writeln!(
                        o,
                        "  {:<24} {:<16} component {}  height {}  length^2 {}",
                        root_name(&e.coeffs),
                        tuple(&e.coeffs),
                        e.component,
                        e.height,
                        e.sq_len
                    );
                }
            }
            Report::Bott(r) => {
                let _ = writeln!(o, "{}, Sigma = {}, L = {}", r.diagram, set(&r.sigma), tuple(&r.weight));
                let res = &r.result;
                match (res.kind, res.degree, &res.weight, &res.dim) {
                    (ResultKind::Concentrated, Some(q), Some(w), Some(dim)) => {
                        let _ = writeln!(o, "H^{q} = V{}, dim {dim}; every other degree vanishes", tuple(w));
                    }
                    _ => {
                        let _ = writeln!(o, "L + gamma is singular: every cohomology group vanishes");
                    }
                }
            }
            Report::VanishMain(r) => {
                let _ = writeln!(
                    o,
                    "{}, Sigma = {}, L = {}, A = {}, B = {}",
                    r.diagram,
                    set(&r.sigma),
                    tuple(&r.weight),
                    set(&r.a),
                    set(&r.b)
                );
                if r.q_max == 0 {
                    let _ = writeln!(o, "l(A,B) = 0: no vanishing guaranteed");
                } else {
                    let _ = writeln!(o, "l(A,B) = {}: H^q = 0 for 0 <= q < {}", r.q_max, r.q_max);
                }
                if !r.witnesses.is_empty() {
                    let _ = writeln!(o, "significant roots:");
                }
                for w in &r.witnesses {
                    let _ = writeln!(
                        o,
                        "  {:<24} {:<16} witness {} {}  {}",
                        root_name(&w.root),
                        tuple(&w.root),
                        root_name(&w.sigma),
                        tuple(&w.sigma),
                        w.fastpath
                    );
                }
                if !r.insignificant.is_empty() {
                    let _ = writeln!(o, "not significant:");
                }
                for c in &r.insignificant {
                    let _ = writeln!(o, "  {:<24} {}", root_name(c), tuple(c));
                }
            }
            Report::VanishH1(r) => {
                let _ = writeln!(o, "{}, Sigma = {}, generating dimension {}", r.diagram, set(&r.sigma), r.dim);
                let _ = writeln!(o, "d(P) = {}, l(P) = {}", r.d_p, r.ell_p);
                match (r.kind, r.lower, r.upper) {
                    (RangeKind::Range, Some(lo), Some(hi)) => {
                        let _ = writeln!(o, "H^q = 0 for {lo} < q < {hi}{}", empty_note(hi.saturating_sub(lo)));
                    }
                    _ => {
                        let _ = writeln!(o, "no guarantee: {} is not below d(P) = {}", r.dim, r.d_p);
                    }
                }
                let _ = writeln!(o, "rigid: {}", if r.rigid { "yes" } else { "not guaranteed" });
            }
            Report::VanishSemisimple(r) => {
                let _ = writeln!(o, "{}, Sigma = {}, B = {}", r.diagram, set(&r.sigma), set(&r.b));
                for s in &r.summands {
                    match s.ell {
                        Some(l) => {
                            let _ = writeln!(o, "  {}: A = {}, l(A,B) = {l}", tuple(&s.weight), set(&s.a));
                        }
                        None => {
                            let _ = writeln!(o, "  {}: dominant", tuple(&s.weight));
                        }
                    }
                }
                match r.q_max {
                    Some(q) => {
                        let _ = writeln!(o, "H^q = 0 for 0 < q < {q}{}", empty_note(q));
                    }
                    None => {
                        let _ = writeln!(o, "every weight is dominant: H^q = 0 for all q > 0");
                    }
                }
            }
            Report::Invariants(r) => {
                let _ = writeln!(
                    o,
                    "{}, Sigma = {}: G/P has dimension {}",
                    r.diagram,
                    set(&r.sigma),
                    r.flag_dimension
                );
                for a in &r.alphas {
                    let _ = write!(o, "  alpha {}: d = {}, l = {}", a.alpha, a.d, a.ell);
                    if a.adjacent.is_empty() {
                        let _ = write!(o, "; no adjacent component");
                    }
                    for c in &a.adjacent {
                        let _ = write!(o, "; {} {} d_i = {} l = {}", c.kind, set(&c.nodes), c.d_i, c.ell);
                    }
                    o.push('\n');
                }
                let _ = writeln!(o, "d(P) = {}, l(P) = {}", r.d_p, r.ell_p);
                match r.rigid_below {
                    Some(d) => {
                        let _ = writeln!(
                            o,
                            "natural operations on representations of dimension < {d} give H^q = 0 for 0 < q < {} and rigid bundles",
                            r.ell_p
                        );
                    }
                    None => {
                        let _ = writeln!(o, "d(P) = 1: no vanishing range guaranteed");
                    }
                }
            }
            Report::Sweep(r) => {
                let bounds: Vec<String> = r.bounds.iter().map(|[lo, hi]| format!("{lo}:{hi}")).collect();
                let _ = writeln!(
                    o,
                    "{}, Sigma = {}, A = {}, B = {}, bounds {}",
                    r.diagram,
                    set(&r.sigma),
                    set(&r.a),
                    set(&r.b),
                    bounds.join(",")
                );
                match r.samples {
                    Some(n) => {
                        let _ = writeln!(o, "sampled {n} of {} weights, seed {}", r.box_size, r.seed);
                    }
                    None => {
                        let _ = writeln!(o, "exhaustive over {} weights, seed {}", r.box_size, r.seed);
                    }
                }
                let _ = writeln!(
                    o,
                    "bound l(A,B) = {}; checked {}, regular {}, singular {}, Bott {}",
                    r.bound, r.weights_checked, r.regular, r.singular, r.bott_checked
                );
                if let Some(m) = r.min_index {
                    let _ = writeln!(o, "smallest index seen {m}");
                }
                let _ = writeln!(o, "violations {}", r.violations.len());
                for v in &r.violations {
                    let _ = writeln!(o, "  {}: {}", tuple(&v.weight), v.detail);
                }
                let _ = writeln!(o, "runtime {} us", r.runtime_us);
            }
        }
        out
    }
}
