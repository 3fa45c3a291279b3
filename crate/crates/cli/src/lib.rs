//! Job dispatch and report rendering for the `knotclover` binary.

use std::fmt::Write as _;
use std::path::Path;

use knotclover::clover::{
    self, CloverClass, CloverGraph, EdgeOrientation, KirbyReduction, LinkPartition, Part,
};
use knotclover::knots::{self, KnotDescriptor};
use knotclover::laurent::{unit_circle_roots_with, FactorConfig, UnitCircleSpectrum};
use knotclover::obstruct::{
    self, FamilyIndex, FamilyWitnessSearch, SearchBounds, WheelAnalysis, WheelSpec,
};
use knotclover::{LaurentPoly, ObstructionReport, Point};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    Alexander,
    Obstruct,
    Wheel,
    Clover,
    Family,
}

#[derive(Clone, Debug, Default)]
pub struct Options {
    pub bounds: SearchBounds,
    pub factor: FactorConfig,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Input(String),
    #[error("resource limit: {0}")]
    Resource(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Resource(_) => 3,
        }
    }
}

impl From<knotclover::Error> for CliError {
    fn from(e: knotclover::Error) -> Self {
        if e.is_resource() {
            CliError::Resource(e.to_string())
        } else {
            CliError::Input(e.to_string())
        }
    }
}

fn schema_error(e: serde_json::Error) -> CliError {
    CliError::Input(e.to_string())
}

/// A knot given either by a descriptor or directly by its Alexander
/// polynomial in text form.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum KnotInput {
    Poly(LaurentPoly),
    Descriptor(KnotDescriptor),
}

// Dispatch on the JSON shape so schema errors keep the field name.
impl<'de> Deserialize<'de> for KnotInput {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        let v = Value::deserialize(d)?;
        if v.is_string() {
            serde_json::from_value(v).map(KnotInput::Poly).map_err(D::Error::custom)
        } else {
            serde_json::from_value(v).map(KnotInput::Descriptor).map_err(D::Error::custom)
        }
    }
}

impl KnotInput {
    fn alexander(&self) -> Result<LaurentPoly, CliError> {
        let raw = match self {
            KnotInput::Poly(p) => p.clone(),
            KnotInput::Descriptor(d) => knots::alexander(d)?,
        };
        Ok(knots::validate_alexander(&raw)?)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ObstructPayload {
    pub knot: KnotInput,
    #[serde(default)]
    pub other: Option<KnotInput>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FamilyPayload {
    One(FamilyIndex),
    Product(Vec<FamilyIndex>),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlexanderReport {
    pub knot: KnotInput,
    pub delta: LaurentPoly,
    pub symmetric: bool,
    pub value_at_one: String,
    pub spectrum: UnitCircleSpectrum,
    pub fox_milnor: ObstructionReport,
    pub double_slice: ObstructionReport,
    pub c1_unknot: ObstructionReport,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ObstructReport {
    pub delta: LaurentPoly,
    pub other_delta: Option<LaurentPoly>,
    pub bounds: Option<SearchBounds>,
    pub reports: Vec<ObstructionReport>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WheelReport {
    #[serde(flatten)]
    pub analysis: WheelAnalysis,
    /// `[θ, θ★]` with `ratio ≐ θ θ★`.
    pub ratio_factors: Vec<FamilyIndex>,
    pub factorization_ok: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CloverReport {
    pub class: CloverClass,
    pub orientation: Option<EdgeOrientation>,
    pub orientation_error: Option<String>,
    pub partition: Option<LinkPartition>,
    pub kirby: Option<KirbyReduction>,
    pub kirby_error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FamilyReport {
    pub indices: Vec<FamilyIndex>,
    pub poly: LaurentPoly,
    pub conjugate: LaurentPoly,
    pub norm: LaurentPoly,
    pub value_at_one: String,
    pub spectrum: UnitCircleSpectrum,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "lowercase")]
pub enum Report {
    Alexander(AlexanderReport),
    Obstruct(ObstructReport),
    Wheel(WheelReport),
    Clover(CloverReport),
    Family(FamilyReport),
}

/// Reads an input argument: `-` for stdin, inline JSON, or a file path.
pub fn read_input(arg: &str) -> Result<Value, CliError> {
    let text = if arg == "-" {
        std::io::read_to_string(std::io::stdin()).map_err(|e| CliError::Input(format!("stdin: {e}")))?
    } else if arg.trim_start().starts_with(['{', '[', '"']) {
        arg.to_string()
    } else if Path::new(arg).is_file() {
        std::fs::read_to_string(arg).map_err(|e| CliError::Input(format!("{arg}: {e}")))?
    } else {
        return Err(CliError::Input(format!("{arg:?} is neither JSON nor a readable file")));
    };
    serde_json::from_str(&text).map_err(schema_error)
}

pub fn run_job(command: Command, input: Value, opts: &Options) -> Result<Report, CliError> {
    match command {
        Command::Alexander => {
            let knot: KnotInput = serde_json::from_value(input).map_err(schema_error)?;
            alexander_report(knot, opts).map(Report::Alexander)
        }
        Command::Obstruct => {
            let payload: ObstructPayload = serde_json::from_value(input).map_err(schema_error)?;
            obstruct_report(payload, opts).map(Report::Obstruct)
        }
        Command::Wheel => {
            let spec: WheelSpec = serde_json::from_value(input).map_err(schema_error)?;
            wheel_report(&spec).map(Report::Wheel)
        }
        Command::Clover => {
            let g: CloverGraph = serde_json::from_value(input).map_err(schema_error)?;
            Ok(Report::Clover(clover_report(&g)))
        }
        Command::Family => {
            let payload: FamilyPayload = serde_json::from_value(input).map_err(schema_error)?;
            let indices = match payload {
                FamilyPayload::One(i) => vec![i],
                FamilyPayload::Product(v) => v,
            };
            family_report(indices, opts).map(Report::Family)
        }
    }
}

fn alexander_report(knot: KnotInput, opts: &Options) -> Result<AlexanderReport, CliError> {
    let delta = knot.alexander()?;
    Ok(AlexanderReport {
        symmetric: delta.is_symmetric(),
        value_at_one: delta.evaluate(Point::One).to_string(),
        spectrum: unit_circle_roots_with(&delta, &opts.factor)?,
        fox_milnor: knots::fox_milnor_test_with(&delta, &opts.factor)?,
        double_slice: knots::double_slice_test_with(&delta, &opts.factor)?,
        c1_unknot: obstruct::c1_unknot_obstruction_with(&delta, &opts.factor)?,
        knot,
        delta,
    })
}

fn obstruct_report(payload: ObstructPayload, opts: &Options) -> Result<ObstructReport, CliError> {
    let delta = payload.knot.alexander()?;
    let Some(other) = payload.other else {
        return Ok(ObstructReport {
            reports: vec![
                knots::fox_milnor_test_with(&delta, &opts.factor)?,
                knots::double_slice_test_with(&delta, &opts.factor)?,
                obstruct::c1_unknot_obstruction_with(&delta, &opts.factor)?,
            ],
            delta,
            other_delta: None,
            bounds: None,
        });
    };
    let other = other.alexander()?;
    let search = FamilyWitnessSearch::new(opts.bounds)?;
    Ok(ObstructReport {
        reports: vec![
            obstruct::c1_pair_obstruction_with(&delta, &other, &opts.factor)?,
            search.search(&delta, &other)?,
            obstruct::divisibility_check(&delta, &other)?,
        ],
        delta,
        other_delta: Some(other),
        bounds: Some(opts.bounds),
    })
}

fn wheel_report(spec: &WheelSpec) -> Result<WheelReport, CliError> {
    let analysis = obstruct::analyze_wheel(spec)?;
    let ratio_factors = vec![analysis.family, analysis.family.conjugate()];
    let factorization_ok = obstruct::family_product(&ratio_factors).associated(&analysis.ratio);
    Ok(WheelReport { analysis, ratio_factors, factorization_ok })
}

fn clover_report(g: &CloverGraph) -> CloverReport {
    let class = clover::classify(g);
    let (orientation, orientation_error) = match clover::orient_each_component(g) {
        Ok(o) => (Some(o), None),
        Err(e) => (None, Some(e.to_string())),
    };
    let partition = orientation.as_ref().map(|o| clover::split_link(g, o).expect("orientation was checked"));
    let (kirby, kirby_error) = match clover::leaf_kirby_reduce(g) {
        Ok(k) => (Some(k), None),
        Err(e) => (None, Some(e.to_string())),
    };
    CloverReport { class, orientation, orientation_error, partition, kirby, kirby_error }
}

fn family_report(indices: Vec<FamilyIndex>, opts: &Options) -> Result<FamilyReport, CliError> {
    let poly = obstruct::family_product(&indices);
    Ok(FamilyReport {
        conjugate: poly.conjugate(),
        norm: obstruct::family_norm(&indices).normalize()?,
        value_at_one: poly.evaluate(Point::One).to_string(),
        spectrum: unit_circle_roots_with(&poly, &opts.factor)?,
        indices,
        poly,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BatchJob {
    pub command: Command,
    pub input: Value,
}

/// Result of one batch job, as emitted in structured output.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
#[allow(clippy::large_enum_variant)]
pub enum JobOutcome {
    Ok(Report),
    Error { code: i32, message: String },
}

impl From<Result<Report, CliError>> for JobOutcome {
    fn from(r: Result<Report, CliError>) -> Self {
        match r {
            Ok(rep) => JobOutcome::Ok(rep),
            Err(e) => JobOutcome::Error { code: e.exit_code(), message: e.to_string() },
        }
    }
}

/// Runs jobs concurrently; outcomes come back in input order.
pub fn run_batch(jobs: Vec<BatchJob>, opts: &Options) -> Vec<JobOutcome> {
    jobs.into_par_iter()
        .map(|job| run_job(job.command, job.input, opts).into())
        .collect()
}

pub fn parse_batch(input: Value) -> Result<Vec<BatchJob>, CliError> {
    serde_json::from_value(input).map_err(schema_error)
}

fn verdict_line(out: &mut String, label: &str, r: &ObstructionReport) {
    let _ = writeln!(out, "  {label:<14} {r}");
}

pub fn render_text(report: &Report) -> String {
    let mut out = String::new();
    match report {
        Report::Alexander(a) => {
            let _ = writeln!(out, "Δ = {}", a.delta);
            let _ = writeln!(out, "  symmetric      {}", a.symmetric);
            let _ = writeln!(out, "  Δ(1)           {}", a.value_at_one);
            let _ = writeln!(out, "  circle roots   {}", a.spectrum);
            verdict_line(&mut out, "fox_milnor", &a.fox_milnor);
            verdict_line(&mut out, "double_slice", &a.double_slice);
            verdict_line(&mut out, "c1_unknot", &a.c1_unknot);
        }
        Report::Obstruct(o) => {
            let _ = writeln!(out, "Δ  = {}", o.delta);
            if let Some(d) = &o.other_delta {
                let _ = writeln!(out, "Δ′ = {d}");
            }
            if let Some(b) = &o.bounds {
                let _ = writeln!(out, "  bounds         {b}");
            }
            for r in &o.reports {
                verdict_line(&mut out, &r.test.to_string(), r);
            }
        }
        Report::Wheel(w) => {
            let a = &w.analysis;
            let _ = writeln!(out, "wheel n = {}, k = {}, sign {}", a.spec.n(), a.spec.k(), a.spec.sign());
            match &a.matrix {
                Some(b) => {
                    let _ = writeln!(out, "B =\n{b}");
                }
                None => {
                    let _ = writeln!(out, "n = 1: matrix skipped, closed form used");
                }
            }
            let _ = writeln!(out, "det D = {}", a.det_d);
            if let Some(d) = &a.det_b {
                let _ = writeln!(out, "det B = {d}");
            }
            let _ = writeln!(out, "ratio = {}", a.ratio);
            let _ = writeln!(out, "closed form check: {}", if a.closed_form_ok { "OK" } else { "MISMATCH" });
            let _ = writeln!(
                out,
                "ratio ≐ {} · {} ({})",
                w.ratio_factors[0],
                w.ratio_factors[1],
                if w.factorization_ok { "OK" } else { "MISMATCH" }
            );
        }
        Report::Clover(c) => {
            let k = &c.class;
            let _ = writeln!(
                out,
                "class: c1 {}, c2 {}, civ {}, c1nf {}",
                k.in_c1, k.in_c2, k.in_civ, k.in_c1nf
            );
            let _ = writeln!(out, "β₁ per component: {:?}", k.loop_counts());
            let _ = writeln!(out, "forks: {:?}", k.forks);
            match (&c.orientation, &c.orientation_error) {
                (Some(o), _) => {
                    let _ = writeln!(out, "orientation: {:?}", o.directions);
                }
                (None, Some(e)) => {
                    let _ = writeln!(out, "orientation: {e}");
                }
                _ => {}
            }
            if let Some(p) = &c.partition {
                let _ = writeln!(
                    out,
                    "partition: |L'| = {}, |L''| = {}",
                    p.part_size(Part::Prime),
                    p.part_size(Part::DoublePrime)
                );
            }
            match (&c.kirby, &c.kirby_error) {
                (Some(r), _) => {
                    let _ = writeln!(out, "kirby: {} -> {} components", r.components_before, r.components_after);
                }
                (None, Some(e)) => {
                    let _ = writeln!(out, "kirby: {e}");
                }
                _ => {}
            }
        }
        Report::Family(f) => {
            let names: Vec<String> = f.indices.iter().map(|i| i.to_string()).collect();
            let _ = writeln!(out, "θ = {}", if names.is_empty() { "1".into() } else { names.join(" · ") });
            let _ = writeln!(out, "  expanded       {}", f.poly);
            let _ = writeln!(out, "  conjugate      {}", f.conjugate);
            let _ = writeln!(out, "  θθ★            {}", f.norm);
            let _ = writeln!(out, "  θ(1)           {}", f.value_at_one);
            let _ = writeln!(out, "  circle roots   {}", f.spectrum);
        }
    }
    out
}
