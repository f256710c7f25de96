use std::time::Instant;

use bott_kit::bott::{bott_cohomology, flag_dimension, CohomologyResult};
use bott_kit::oracle::{self, SweepMode, SweepSpec};
use bott_kit::parabolic::min_nontrivial_dim;
use bott_kit::vanishing::{
    ell_ab, rigidity_check, semisimple_vanishing, theorem_h1_range, theorem_main_range, H1Range, SemisimpleBound,
};
use bott_kit::{ABConfig, DynkinDiagram, Error, Execution, NodeSet, ParabolicData, Root, RootSystem, Weight};
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::input;
use crate::report::*;

#[derive(Debug, Parser)]
#[command(name = "bott-kit", version, about = "Bott's theorem and cohomology vanishing ranges on flag manifolds G/P")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Basis {
    Fundamental,
    Root,
}

#[derive(Debug, Args)]
pub struct Target {
    /// Dynkin type, e.g. `A4` or `A2xB2`.
    #[arg(long = "type")]
    pub diagram: String,
    /// 1-based simple roots of the Levi part; `""` for the Borel subgroup.
    #[arg(long, allow_hyphen_values = true)]
    pub sigma: String,
}

#[derive(Debug, Args)]
pub struct WeightArg {
    /// Highest weight in fundamental-weight coordinates, e.g. `-1,0`.
    #[arg(long, allow_hyphen_values = true)]
    pub weight: String,
    /// Coordinate system of `--weight`. Only fundamental coordinates are
    /// accepted.
    #[arg(long, value_enum, default_value_t = Basis::Fundamental)]
    pub basis: Basis,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the positive roots with their squared lengths.
    Roots {
        #[arg(long = "type")]
        diagram: String,
    },
    /// Cohomology of the bundle attached to an irreducible representation of P.
    Bott {
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        weight: WeightArg,
    },
    /// Vanishing ranges.
    #[command(subcommand)]
    Vanish(Vanish),
    /// d(alpha), l(alpha), d(P) and l(P).
    Invariants {
        #[command(flatten)]
        target: Target,
    },
    /// Check the index lower bound over a box of weights.
    Sweep(SweepArgs),
}

#[derive(Debug, Subcommand)]
pub enum Vanish {
    /// Range for an irreducible bundle satisfying condition (AB).
    Main {
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        weight: WeightArg,
        /// 1-based simple roots outside Sigma.
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        /// 1-based simple roots inside Sigma.
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
    /// Range for bundles built by natural operations from a representation
    /// of dimension `--dim`.
    H1 {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        dim: u64,
    },
    /// Range for a completely reducible representation.
    Semisimple {
        #[command(flatten)]
        target: Target,
        /// Highest weights of the summands, separated by `;`.
        #[arg(long, allow_hyphen_values = true)]
        weights: String,
        #[arg(long, value_enum, default_value_t = Basis::Fundamental)]
        basis: Basis,
    },
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub target: Target,
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    pub a: String,
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    pub b: String,
    /// `lo:hi` for all coordinates or one per coordinate, comma separated.
    #[arg(long, default_value = "-4:4", allow_hyphen_values = true)]
    pub bounds: String,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Boxes up to this size are enumerated; larger ones are sampled with
    /// this many draws.
    #[arg(long, default_value_t = 1 << 22)]
    pub cap: u64,
    /// Run on one thread.
    #[arg(long)]
    pub sequential: bool,
}

/// Failure of a command, with the process exit code it maps to.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Engine(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Engine(e)
    }
}

impl CliError {
    /// 2 for malformed input, 3 for violated preconditions, 4 for oracle
    /// violations, 1 for internal failures.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Engine(e) => match e {
                Error::Parse { .. } | Error::InvalidType { .. } => 2,
                Error::OracleViolation { .. } => 4,
                Error::Internal(_) => 1,
                _ => 3,
            },
        }
    }

    /// Message with simple-root indices shown 1-based.
    pub fn message(&self) -> String {
        let CliError::Engine(e) = self else {
            let CliError::Usage(m) = self else { unreachable!() };
            return m.clone();
        };
        match e {
            Error::NotSigmaDominant { weight, index } => format!(
                "weight {weight} is not dominant on Sigma: coordinate {} (alpha_{}) is negative",
                index + 1,
                index + 1
            ),
            Error::IndexOutOfRange { index, rank } => {
                format!("simple root index {} out of range for rank {rank}", index + 1)
            }
            Error::AlphaInSigma(i) => format!("simple root alpha_{} lies in Sigma", i + 1),
            Error::NotSimplyLacedConfig(i, j) => {
                format!("A u B' contains a multiple edge between alpha_{} and alpha_{}", i + 1, j + 1)
            }
            Error::ConditionABViolated { index, reason } => {
                format!("condition (AB) fails at alpha_{}: {reason}", index + 1)
            }
            other => other.to_string(),
        }
    }
}

fn one_based(s: NodeSet) -> Vec<usize> {
    s.iter().map(|i| i + 1).collect()
}

fn ints(w: &Weight) -> Vec<i64> {
    w.as_ints().expect("reported weights are integral").to_vec()
}

fn config(sigma: NodeSet, a: NodeSet, b: NodeSet) -> Result<ABConfig, CliError> {
    let show = |s: NodeSet| format!("{:?}", one_based(s));
    let reason = if !a.is_disjoint(b) {
        format!("A {} and B {} intersect", show(a), show(b))
    } else if !a.is_disjoint(sigma) {
        format!("A {} meets Sigma {}", show(a), show(sigma))
    } else if !b.is_subset(sigma) {
        format!("B {} is not contained in Sigma {}", show(b), show(sigma))
    } else {
        return Ok(ABConfig::for_parabolic(sigma, a, b)?);
    };
    Err(Error::InvalidConfig(reason).into())
}

fn system(spec: &str) -> Result<RootSystem, CliError> {
    Ok(RootSystem::new(spec.parse::<DynkinDiagram>()?))
}

fn fundamental_only(basis: Basis) -> Result<(), CliError> {
    match basis {
        Basis::Fundamental => Ok(()),
        Basis::Root => Err(CliError::Usage(
            "weights are accepted only in fundamental-weight coordinates; a root with coefficients c has \
             fundamental coordinates A c, where A is the Cartan matrix (see `roots --type ...`)"
                .into(),
        )),
    }
}

fn resolve(target: &Target) -> Result<(RootSystem, NodeSet), CliError> {
    let rs = system(&target.diagram)?;
    let sigma = input::index_set(&target.sigma, rs.rank())?;
    Ok((rs, sigma))
}

pub fn execute(command: &Command) -> Result<Document, CliError> {
    let report = match command {
        Command::Roots { diagram } => roots(diagram)?,
        Command::Bott { target, weight } => bott(target, weight)?,
        Command::Vanish(v) => match v {
            Vanish::Main { target, weight, a, b } => vanish_main(target, weight, a, b)?,
            Vanish::H1 { target, dim } => vanish_h1(target, *dim)?,
            Vanish::Semisimple { target, weights, basis } => vanish_semisimple(target, weights, *basis)?,
        },
        Command::Invariants { target } => invariants(target)?,
        Command::Sweep(args) => sweep(args)?,
    };
    Ok(Document::new(report))
}

fn roots(diagram: &str) -> Result<Report, CliError> {
    let rs = system(diagram)?;
    let d = rs.diagram();
    let components = d
        .components()
        .iter()
        .enumerate()
        .map(|(k, c)| ComponentEntry {
            index: k + 1,
            kind: c.kind.to_string(),
            nodes: one_based(c.nodes()),
        })
        .collect();
    let roots = rs
        .positive_roots()
        .iter()
        .map(|r| RootEntry {
            coeffs: r.coeffs().to_vec(),
            component: d.component_of(r.support().first().expect("nonzero root")) + 1,
            height: r.height(),
            sq_len: rs.root_sq_len(r).to_string(),
        })
        .collect();
    Ok(Report::Roots(RootsReport {
        diagram: d.to_string(),
        rank: rs.rank(),
        components,
        count: rs.num_positive_roots(),
        roots,
    }))
}

fn bott(target: &Target, w: &WeightArg) -> Result<Report, CliError> {
    fundamental_only(w.basis)?;
    let (rs, sigma) = resolve(target)?;
    let weight = input::weight(&w.weight, rs.rank())?;
    let result = match bott_cohomology(&rs, sigma, &weight)? {
        CohomologyResult::AllZero => BottResult {
            kind: ResultKind::AllZero,
            degree: None,
            weight: None,
            dim: None,
        },
        CohomologyResult::Concentrated {
            degree,
            highest_weight,
            dimension,
        } => BottResult {
            kind: ResultKind::Concentrated,
            degree: Some(degree),
            weight: Some(ints(&highest_weight)),
            dim: Some(dimension.to_string()),
        },
    };
    Ok(Report::Bott(BottReport {
        diagram: rs.diagram().to_string(),
        sigma: one_based(sigma),
        weight: ints(&weight),
        result,
    }))
}

fn coeffs(r: &Root) -> Vec<i64> {
    r.coeffs().to_vec()
}

fn vanish_main(target: &Target, w: &WeightArg, a: &str, b: &str) -> Result<Report, CliError> {
    fundamental_only(w.basis)?;
    let (rs, sigma) = resolve(target)?;
    let weight = input::weight(&w.weight, rs.rank())?;
    let a = input::index_set(a, rs.rank())?;
    let b = input::index_set(b, rs.rank())?;
    let cfg = config(sigma, a, b)?;
    let range = theorem_main_range(&rs, sigma, &weight, &cfg)?;
    Ok(Report::VanishMain(MainReport {
        diagram: rs.diagram().to_string(),
        sigma: one_based(sigma),
        weight: ints(&weight),
        a: one_based(a),
        b: one_based(b),
        q_max: range.q_max,
        witnesses: range
            .certificate
            .witnesses
            .iter()
            .map(|w| WitnessEntry {
                root: coeffs(&w.root),
                sigma: coeffs(&w.sigma),
                fastpath: w.fastpath.tag().to_string(),
            })
            .collect(),
        insignificant: range.certificate.insignificant.iter().map(coeffs).collect(),
    }))
}

fn vanish_h1(target: &Target, dim: u64) -> Result<Report, CliError> {
    let (rs, sigma) = resolve(target)?;
    let pd = ParabolicData::analyze(&rs, sigma)?;
    let (kind, lower, upper) = match theorem_h1_range(&pd, dim)? {
        H1Range::Range { lower, upper } => (RangeKind::Range, Some(lower), Some(upper)),
        H1Range::NoGuarantee => (RangeKind::NoGuarantee, None, None),
    };
    Ok(Report::VanishH1(H1Report {
        diagram: rs.diagram().to_string(),
        sigma: one_based(sigma),
        dim,
        d_p: pd.d_p()?,
        ell_p: pd.ell_p()?,
        kind,
        lower,
        upper,
        rigid: rigidity_check(&pd, dim)?,
    }))
}

fn vanish_semisimple(target: &Target, weights: &str, basis: Basis) -> Result<Report, CliError> {
    fundamental_only(basis)?;
    let (rs, sigma) = resolve(target)?;
    let weights = input::weights(weights, rs.rank())?;
    let v = semisimple_vanishing(&rs, sigma, &weights)?;
    let (kind, q_max) = match v.bound {
        SemisimpleBound::Unbounded => (BoundKind::Unbounded, None),
        SemisimpleBound::Bounded(q) => (BoundKind::Bounded, Some(q)),
    };
    Ok(Report::VanishSemisimple(SemisimpleReport {
        diagram: rs.diagram().to_string(),
        sigma: one_based(sigma),
        b: one_based(v.b),
        summands: v
            .components
            .iter()
            .map(|c| SummandEntry {
                weight: ints(&c.weight),
                a: one_based(c.a),
                ell: c.ell,
            })
            .collect(),
        kind,
        q_max,
    }))
}

fn invariants(target: &Target) -> Result<Report, CliError> {
    let (rs, sigma) = resolve(target)?;
    let pd = ParabolicData::analyze(&rs, sigma)?;
    let d_p = pd.d_p()?;
    let ell_p = pd.ell_p()?;
    let alphas = pd
        .outside()
        .iter()
        .map(|alpha| {
            let adjacent = pd
                .adjacent_components(alpha)?
                .into_iter()
                .map(|c| {
                    let cfg = ABConfig::for_parabolic(sigma, NodeSet::singleton(alpha), c.nodes)?;
                    Ok(AdjacentEntry {
                        nodes: one_based(c.nodes),
                        kind: c.kind.to_string(),
                        d_i: min_nontrivial_dim(c.kind),
                        ell: ell_ab(&rs, &cfg).count,
                    })
                })
                .collect::<Result<Vec<_>, Error>>()?;
            Ok(AlphaEntry {
                alpha: alpha + 1,
                d: pd.d_alpha(alpha)?,
                ell: pd.ell_alpha(alpha)?,
                adjacent,
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(Report::Invariants(InvariantsReport {
        diagram: rs.diagram().to_string(),
        sigma: one_based(sigma),
        flag_dimension: flag_dimension(&rs, sigma),
        alphas,
        d_p,
        ell_p,
        rigid_below: (d_p > 1).then_some(d_p),
    }))
}

fn sweep(args: &SweepArgs) -> Result<Report, CliError> {
    let (rs, sigma) = resolve(&args.target)?;
    let a = input::index_set(&args.a, rs.rank())?;
    let b = input::index_set(&args.b, rs.rank())?;
    let cfg = config(sigma, a, b)?;
    let spec = SweepSpec {
        sigma,
        cfg,
        bounds: input::bounds(&args.bounds, rs.rank())?,
        seed: args.seed,
        cap: args.cap,
    };
    let exec = if args.sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    };
    let start = Instant::now();
    let r = oracle::index_bound_sweep(&rs, &spec, exec)?;
    let runtime_us = start.elapsed().as_micros() as u64;
    let (mode, samples) = match r.mode {
        SweepMode::Exhaustive => (ModeKind::Exhaustive, None),
        SweepMode::Sampled { samples, .. } => (ModeKind::Sampled, Some(samples)),
    };
    Ok(Report::Sweep(SweepReport {
        diagram: rs.diagram().to_string(),
        sigma: one_based(sigma),
        a: one_based(a),
        b: one_based(b),
        bounds: spec.effective_bounds().iter().map(|&(lo, hi)| [lo, hi]).collect(),
        mode,
        seed: args.seed,
        samples,
        box_size: r.box_size.to_string(),
        bound: r.bound,
        weights_checked: r.weights_checked,
        regular: r.regular,
        singular: r.singular,
        bott_checked: r.bott_checked,
        min_index: r.min_index,
        violations: r
            .violations
            .iter()
            .map(|v| ViolationEntry {
                weight: ints(&v.weight),
                detail: format!("{:?}", v.kind),
            })
            .collect(),
        runtime_us,
    }))
}

impl Document {
    /// The first oracle violation recorded in a sweep report, as an error.
    pub fn violation(&self) -> Option<CliError> {
        let Report::Sweep(r) = &self.report else {
            return None;
        };
        r.violations.first().map(|v| {
            CliError::Engine(Error::OracleViolation {
                weight: Weight::from_ints(&v.weight),
                detail: v.detail.clone(),
            })
        })
    }
}
