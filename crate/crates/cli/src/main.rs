mod refs;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use monadic_core::algebras::{
    lemma_property_violation, monadic_filters, open_algebra, product, quotient, subdirectly_irreducible, Algebra,
    FiniteAlgebra, MonadicFilter,
};
use monadic_core::duality::{check_skeleton_naturality, complex_algebra, dual_frame, DualAlgebra};
use monadic_core::frames::{q_upsets, skeleton, FiniteFrame, Frame};
use monadic_core::io::{AlgebraFile, FrameFile};
use monadic_core::morphisms::{
    check_morphism, embeds, enumerate_morphisms, first_morphism, hs_member, hs_spectrum, skeleton_morphism,
    FrameMorphism, Require,
};
use monadic_core::random::{random_int_formula, random_ms4_frame, rng};
use monadic_core::render::{mipc_to_dot, ms4_to_dot};
use monadic_core::semantics::{translation_equivalence, validates_with_limit, Semantics, DEFAULT_MAX_VARS};
use monadic_core::syntax::{godel_translate, parse_formula, Formula, Lang};
use monadic_core::verify::{run_suite, Fixtures, SuiteOptions};
use monadic_core::{fixtures, Error, Result};

/// Finite monadic Heyting algebras, MS4-algebras and their frames.
///
/// Frames are given as a fixture name (K1..K5, H1, H2), as rho(<frame>) for
/// a skeleton, or as a JSON file. Algebras are given as B1, B2, <frame>* for
/// a complex algebra, O(<algebra>) for the open elements, or a JSON file.
#[derive(Parser)]
#[command(name = "monadic", version)]
struct Cli {
    /// Print structured output as JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a formula and print it in canonical form.
    Parse {
        formula: String,
        #[arg(long, value_enum, default_value_t = LangArg::Int)]
        lang: LangArg,
    },
    /// Print the Gödel translation of an intuitionistic formula.
    Translate { formula: String },
    #[command(subcommand)]
    Frame(FrameCommand),
    #[command(subcommand)]
    Algebra(AlgebraCommand),
    #[command(subcommand)]
    Variety(VarietyCommand),
    #[command(subcommand)]
    Check(CheckCommand),
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Draw a frame.
    Render {
        frame: String,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
        #[arg(long)]
        title: Option<String>,
    },
    #[command(subcommand)]
    Fixture(FixtureCommand),
    /// Run every check on the built-in fixtures.
    VerifyPaper {
        /// Only run checks whose name contains this text.
        #[arg(long)]
        only: Option<String>,
        /// Run independent checks concurrently.
        #[arg(long)]
        parallel: bool,
        /// Show how long each check took.
        #[arg(long)]
        timings: bool,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum FrameCommand {
    /// Validate a frame.
    Check { frame: String },
    /// The skeleton of an MS4 frame.
    Skeleton { frame: String },
    /// All Q-upsets.
    Upsets { frame: String },
    /// The complex algebra.
    Complex { frame: String },
    /// Morphisms between two frames of the same kind.
    Morphisms {
        src: String,
        dst: String,
        #[command(flatten)]
        require: RequireArgs,
        /// Stop at the first morphism found.
        #[arg(long)]
        first: bool,
        /// Check one map instead, written `x=y,...`.
        #[arg(long, value_name = "MAP")]
        check: Option<String>,
    },
}

#[derive(Args)]
#[group(multiple = false)]
struct RequireArgs {
    #[arg(long)]
    onto: bool,
    #[arg(long)]
    injective: bool,
    #[arg(long)]
    iso: bool,
}

impl RequireArgs {
    fn get(&self) -> Require {
        match (self.onto, self.injective, self.iso) {
            (true, _, _) => Require::Onto,
            (_, true, _) => Require::Injective,
            (_, _, true) => Require::Iso,
            _ => Require::Any,
        }
    }
}

#[derive(Subcommand)]
enum AlgebraCommand {
    /// Validate an algebra.
    Check { algebra: String },
    /// The complex algebra of a frame.
    FromFrame { frame: String },
    /// The algebra of open elements of an MS4-algebra.
    Open { algebra: String },
    /// The dual frame.
    Dual { algebra: String },
    /// All monadic filters.
    Filters { algebra: String },
    /// Quotient by the monadic filter generated by an element.
    Quotient {
        algebra: String,
        /// Generator, by label or index.
        #[arg(long)]
        filter: String,
    },
    /// Product of two algebras of the same kind.
    Product { left: String, right: String },
    /// Whether the algebra is subdirectly irreducible.
    Si { algebra: String },
    /// Whether the algebra validates a formula.
    ValidateFormula {
        algebra: String,
        formula: String,
        /// Defaults to int for MHAs and mod for MS4-algebras.
        #[arg(long, value_enum)]
        lang: Option<LangArg>,
        #[arg(long, default_value_t = DEFAULT_MAX_VARS)]
        max_vars: usize,
    },
    /// Whether the first algebra embeds into the second.
    Embeds { small: String, big: String },
}

#[derive(Subcommand)]
enum VarietyCommand {
    /// Whether the first algebra is a homomorphic image of a subalgebra of the second.
    HsMember { small: String, big: String },
    /// Duals of the subdirectly irreducible members of HS of an algebra.
    Spectrum { algebra: String },
}

#[derive(Subcommand)]
enum CheckCommand {
    /// Compare O(B) on a formula with B on its translation.
    Translation {
        algebra: String,
        formula: Option<String>,
        /// Check this many random formulas instead.
        #[arg(long)]
        random: Option<usize>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 4)]
        depth: usize,
        #[arg(long, default_value_t = 3)]
        vars: usize,
    },
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Check that skeleton and open elements commute on a frame.
    Naturality {
        frame: Option<String>,
        /// Also check this many random frames.
        #[arg(long, default_value_t = 0)]
        random: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        max_points: usize,
    },
}

#[derive(Subcommand)]
enum FixtureCommand {
    /// Names of the built-in frames and algebras.
    List,
    /// Print a fixture as JSON.
    Dump { name: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum LangArg {
    Int,
    Mod,
}

impl From<LangArg> for Lang {
    fn from(l: LangArg) -> Lang {
        match l {
            LangArg::Int => Lang::Int,
            LangArg::Mod => Lang::Mod,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
}

/// What a command prints, in both forms, and its exit status.
struct Output {
    text: String,
    json: Value,
    holds: bool,
}

impl Output {
    fn new(text: impl Into<String>, json: Value) -> Self {
        Output {
            text: text.into(),
            json,
            holds: true,
        }
    }

    fn verdict(holds: bool, text: impl Into<String>, json: Value) -> Self {
        Output {
            text: text.into(),
            json,
            holds,
        }
    }

    fn document(json: Value) -> Self {
        let text = serde_json::to_string_pretty(&json).expect("serializable");
        Output::new(text, json)
    }
}

macro_rules! with_algebra {
    ($a:expr, $x:ident => $body:expr) => {
        match $a {
            Algebra::Mha($x) => $body,
            Algebra::Ms4($x) => $body,
        }
    };
}

fn count(n: usize, noun: &str) -> String {
    if n == 1 {
        format!("1 {noun}")
    } else {
        format!("{n} {noun}s")
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("serializable")
}

fn frame_json(frame: &Frame) -> Value {
    to_json(&FrameFile::from_frame(frame))
}

fn algebra_json(a: &Algebra) -> Value {
    to_json(&AlgebraFile::from_algebra(a))
}

fn ms4(text: &str) -> Result<monadic_core::frames::Ms4Frame> {
    match refs::frame(text)? {
        Frame::Ms4(g) => Ok(g),
        Frame::Mipc(_) => Err(Error::KindMismatch(format!("`{text}` is not an MS4 frame"))),
    }
}

fn ms4_algebra(text: &str) -> Result<monadic_core::algebras::FiniteMs4Algebra> {
    match refs::algebra(text)? {
        Algebra::Ms4(b) => Ok(b),
        Algebra::Mha(_) => Err(Error::KindMismatch(format!("`{text}` is not an MS4-algebra"))),
    }
}

fn element<A: FiniteAlgebra>(a: &A, text: &str) -> Result<usize> {
    if let Some(x) = (0..a.size()).find(|&x| a.label(x) == text) {
        return Ok(x);
    }
    match text.parse::<usize>() {
        Ok(x) if x < a.size() => Ok(x),
        _ => Err(Error::Malformed(format!("no element `{text}`"))),
    }
}

fn report_output(report: &monadic_core::report::ValidationReport) -> Output {
    Output::verdict(report.ok(), report.to_string(), to_json(report))
}

fn parse_map<F: FiniteFrame>(src: &F, dst: &F, text: &str) -> Result<Vec<usize>> {
    let mut map = vec![None; src.len()];
    for pair in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (x, y) = pair
            .split_once('=')
            .ok_or_else(|| Error::Malformed(format!("expected `x=y`, got `{pair}`")))?;
        let x = src
            .index_of(x.trim())
            .ok_or_else(|| Error::Malformed(format!("unknown source point `{x}`")))?;
        let y = dst
            .index_of(y.trim())
            .ok_or_else(|| Error::Malformed(format!("unknown target point `{y}`")))?;
        map[x] = Some(y);
    }
    map.iter()
        .enumerate()
        .map(|(x, y)| y.ok_or_else(|| Error::Malformed(format!("point `{}` is not mapped", src.name(x)))))
        .collect()
}

fn morphism_line<F: FiniteFrame>(f: &FrameMorphism<F>) -> String {
    f.pairs()
        .iter()
        .map(|(x, y)| format!("{x}->{y}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn morphism_json<F: FiniteFrame>(f: &FrameMorphism<F>) -> Value {
    let map: serde_json::Map<String, Value> = f.pairs().into_iter().map(|(x, y)| (x, Value::String(y))).collect();
    json!({ "map": map, "onto": f.onto, "injective": f.injective })
}

fn morphisms<F: FiniteFrame>(src: &F, dst: &F, require: Require, first: bool) -> Result<Output> {
    let found = if first {
        first_morphism(src, dst, require)?.into_iter().collect()
    } else {
        enumerate_morphisms(src, dst, require)?
    };
    let text = if found.is_empty() {
        "no morphisms".to_string()
    } else {
        found.iter().map(morphism_line).collect::<Vec<_>>().join("\n")
    };
    let json = Value::Array(found.iter().map(morphism_json).collect());
    Ok(Output::verdict(!found.is_empty(), text, json))
}

fn check_map(src: &Frame, dst: &Frame, text: &str) -> Result<Output> {
    match (src, dst) {
        (Frame::Ms4(g), Frame::Ms4(h)) => {
            let map = parse_map(g, h, text)?;
            let report = check_morphism(g, h, &map)?;
            if !report.ok() {
                return Ok(report_output(&report));
            }
            let f = FrameMorphism::new(g.clone(), h.clone(), map)?;
            let sk = skeleton_morphism(&f)?;
            let mut text = format!("MS4 morphism\nskeleton map: {}\n", morphism_line(&sk.morphism));
            match sk.witness_name() {
                Some(w) => text.push_str(&format!("not a p-morphism for E_Q': fails at {w}")),
                None => text.push_str("also a p-morphism for E_Q'"),
            }
            let json = json!({
                "morphism": morphism_json(&f),
                "skeleton": morphism_json(&sk.morphism),
                "eq_pmorphism": sk.eq_pmorphism,
                "witness": sk.witness_name(),
            });
            Ok(Output::new(text, json))
        }
        (Frame::Mipc(g), Frame::Mipc(h)) => {
            let map = parse_map(g, h, text)?;
            Ok(report_output(&check_morphism(g, h, &map)?))
        }
        _ => Err(Error::KindMismatch("frames of different kinds".into())),
    }
}

fn frame_command(cmd: FrameCommand) -> Result<Output> {
    Ok(match cmd {
        FrameCommand::Check { frame } => report_output(&refs::frame(&frame)?.validate()),
        FrameCommand::Skeleton { frame } => {
            let g = ms4(&frame)?;
            g.ensure_valid()?;
            let sk = skeleton(&g)?;
            let mut out = Output::document(frame_json(&Frame::Mipc(sk.frame.clone())));
            let projection: serde_json::Map<String, Value> = (0..g.len())
                .map(|x| {
                    (
                        g.name(x).to_string(),
                        Value::String(sk.frame.name(sk.projection[x]).to_string()),
                    )
                })
                .collect();
            out.json = json!({ "frame": out.json, "projection": projection });
            out
        }
        FrameCommand::Upsets { frame } => {
            let (sets, names): (Vec<_>, Vec<String>) = match refs::frame(&frame)? {
                Frame::Ms4(g) => (q_upsets(&g), g.points().to_vec()),
                Frame::Mipc(f) => (q_upsets(&f), f.points().to_vec()),
            };
            let rendered: Vec<String> = sets.iter().map(|s| s.render(&names)).collect();
            Output::new(rendered.join("\n"), json!(rendered))
        }
        FrameCommand::Complex { frame } => algebra_command(AlgebraCommand::FromFrame { frame })?,
        FrameCommand::Morphisms {
            src,
            dst,
            require,
            first,
            check,
        } => {
            let (src, dst) = (refs::frame(&src)?, refs::frame(&dst)?);
            if let Some(map) = check {
                return check_map(&src, &dst, &map);
            }
            match (&src, &dst) {
                (Frame::Ms4(g), Frame::Ms4(h)) => morphisms(g, h, require.get(), first)?,
                (Frame::Mipc(g), Frame::Mipc(h)) => morphisms(g, h, require.get(), first)?,
                _ => return Err(Error::KindMismatch("frames of different kinds".into())),
            }
        }
    })
}

fn validity<A: Semantics>(a: &A, formula: &Formula, max_vars: usize) -> Result<Output> {
    let v = validates_with_limit(a, formula, max_vars)?;
    let text = match &v.counter {
        None => "valid".to_string(),
        Some(val) => format!(
            "refuted by {}",
            val.iter()
                .map(|(k, &x)| format!("{k}={}", a.label(x)))
                .collect::<Vec<_>>()
                .join(", ")
        ),
    };
    let counter = v.counter.as_ref().map(|val| {
        val.iter()
            .map(|(k, &x)| (k.clone(), Value::String(a.label(x))))
            .collect::<serde_json::Map<_, _>>()
    });
    Ok(Output::verdict(
        v.holds,
        text,
        json!({ "valid": v.holds, "counter": counter }),
    ))
}

fn filters_output<A: FiniteAlgebra>(a: &A) -> Output {
    let filters = monadic_filters(a);
    let render = |f: &MonadicFilter| f.members().iter().map(|&x| a.label(x)).collect::<Vec<_>>();
    let text = filters
        .iter()
        .map(|f| format!("generated by {}: [{}]", a.label(f.generator(a)), render(f).join(", ")))
        .collect::<Vec<_>>()
        .join("\n");
    let json = filters
        .iter()
        .map(|f| json!({ "generator": a.label(f.generator(a)), "members": render(f) }))
        .collect();
    Output::new(text, Value::Array(json))
}

fn si_output<A: DualAlgebra>(a: &A) -> Result<Output> {
    let si = subdirectly_irreducible(a)?;
    let pair = lemma_property_violation(a).map(|(x, y)| (a.label(x), a.label(y)));
    let mut text = if si {
        "subdirectly irreducible"
    } else {
        "not subdirectly irreducible"
    }
    .to_string();
    if let Some((x, y)) = &pair {
        text.push_str(&format!("\njoin of fixpoints is top at ({x}, {y})"));
    }
    Ok(Output::verdict(si, text, json!({ "si": si, "violating_pair": pair })))
}

fn bool_output(holds: bool, yes: &str, no: &str, key: &str) -> Output {
    Output::verdict(holds, if holds { yes } else { no }, json!({ key: holds }))
}

fn algebra_command(cmd: AlgebraCommand) -> Result<Output> {
    Ok(match cmd {
        AlgebraCommand::Check { algebra } => report_output(&refs::algebra(&algebra)?.validate()),
        AlgebraCommand::FromFrame { frame } => {
            let a = match refs::frame(&frame)? {
                Frame::Ms4(g) => Algebra::Ms4(complex_algebra(&g)?),
                Frame::Mipc(f) => Algebra::Mha(complex_algebra(&f)?),
            };
            Output::document(algebra_json(&a))
        }
        AlgebraCommand::Open { algebra } => {
            let b = ms4_algebra(&algebra)?;
            b.ensure_valid()?;
            Output::document(algebra_json(&Algebra::Mha(open_algebra(&b)?.algebra)))
        }
        AlgebraCommand::Dual { algebra } => {
            let frame = with_algebra!(refs::algebra(&algebra)?, a => {
                a.ensure_valid()?;
                dual_frame(&a)?.into_frame()
            });
            Output::document(frame_json(&frame))
        }
        AlgebraCommand::Filters { algebra } => with_algebra!(refs::algebra(&algebra)?, a => filters_output(&a)),
        AlgebraCommand::Quotient { algebra, filter } => {
            let q = with_algebra!(refs::algebra(&algebra)?, a => {
                let f = MonadicFilter::principal(&a, element(&a, &filter)?)?;
                quotient(&a, &f)?.algebra.into_algebra()
            });
            Output::document(algebra_json(&q))
        }
        AlgebraCommand::Product { left, right } => {
            let p = match (refs::algebra(&left)?, refs::algebra(&right)?) {
                (Algebra::Mha(a), Algebra::Mha(b)) => Algebra::Mha(product(&a, &b)?),
                (Algebra::Ms4(a), Algebra::Ms4(b)) => Algebra::Ms4(product(&a, &b)?),
                _ => return Err(Error::KindMismatch("algebras of different kinds".into())),
            };
            Output::document(algebra_json(&p))
        }
        AlgebraCommand::Si { algebra } => with_algebra!(refs::algebra(&algebra)?, a => si_output(&a)?),
        AlgebraCommand::ValidateFormula {
            algebra,
            formula,
            lang,
            max_vars,
        } => {
            let a = refs::algebra(&algebra)?;
            let lang = lang.map(Lang::from).unwrap_or(match a {
                Algebra::Mha(_) => Lang::Int,
                Algebra::Ms4(_) => Lang::Mod,
            });
            let formula = parse_formula(&formula, lang)?;
            with_algebra!(a, a => validity(&a, &formula, max_vars)?)
        }
        AlgebraCommand::Embeds { small, big } => {
            let holds = match (refs::algebra(&small)?, refs::algebra(&big)?) {
                (Algebra::Mha(a), Algebra::Mha(b)) => embeds(&a, &b)?,
                (Algebra::Ms4(a), Algebra::Ms4(b)) => embeds(&a, &b)?,
                _ => return Err(Error::KindMismatch("algebras of different kinds".into())),
            };
            bool_output(holds, "embeds", "does not embed", "embeds")
        }
    })
}

trait IntoFrame {
    fn into_frame(self) -> Frame;
}

impl IntoFrame for monadic_core::frames::Ms4Frame {
    fn into_frame(self) -> Frame {
        Frame::Ms4(self)
    }
}

impl IntoFrame for monadic_core::frames::MipcFrame {
    fn into_frame(self) -> Frame {
        Frame::Mipc(self)
    }
}

trait IntoAlgebra {
    fn into_algebra(self) -> Algebra;
}

impl IntoAlgebra for monadic_core::algebras::FiniteMha {
    fn into_algebra(self) -> Algebra {
        Algebra::Mha(self)
    }
}

impl IntoAlgebra for monadic_core::algebras::FiniteMs4Algebra {
    fn into_algebra(self) -> Algebra {
        Algebra::Ms4(self)
    }
}

fn spectrum_output<A: DualAlgebra>(a: &A) -> Result<Output>
where
    A::Frame: IntoFrame,
{
    a.ensure_valid()?;
    let frames: Vec<Frame> = hs_spectrum(a)?.into_iter().map(IntoFrame::into_frame).collect();
    let text = frames
        .iter()
        .map(|f| format!("{}: {}", count(f.points().len(), "point"), f.points().join(" ")))
        .collect::<Vec<_>>()
        .join("\n");
    Ok(Output::new(text, Value::Array(frames.iter().map(frame_json).collect())))
}

fn variety_command(cmd: VarietyCommand) -> Result<Output> {
    Ok(match cmd {
        VarietyCommand::HsMember { small, big } => {
            let holds = match (refs::algebra(&small)?, refs::algebra(&big)?) {
                (Algebra::Mha(a), Algebra::Mha(b)) => hs_member(&a, &b)?,
                (Algebra::Ms4(a), Algebra::Ms4(b)) => hs_member(&a, &b)?,
                _ => return Err(Error::KindMismatch("algebras of different kinds".into())),
            };
            bool_output(holds, "member", "not a member", "member")
        }
        VarietyCommand::Spectrum { algebra } => with_algebra!(refs::algebra(&algebra)?, a => spectrum_output(&a)?),
    })
}

fn check_command(cmd: CheckCommand) -> Result<Output> {
    let CheckCommand::Translation {
        algebra,
        formula,
        random,
        seed,
        depth,
        vars,
    } = cmd;
    let b = ms4_algebra(&algebra)?;
    b.ensure_valid()?;
    let formulas: Vec<Formula> = match (formula, random) {
        (Some(f), None) => vec![parse_formula(&f, Lang::Int)?],
        (None, Some(n)) => {
            if !(1..=6).contains(&vars) {
                return Err(Error::Malformed("--vars must be between 1 and 6".into()));
            }
            let mut r = rng(seed);
            (0..n).map(|_| random_int_formula(&mut r, vars, depth)).collect()
        }
        _ => return Err(Error::Malformed("give either a formula or --random N".into())),
    };
    let mut disagreements = Vec::new();
    for f in &formulas {
        if !translation_equivalence(&b, f)? {
            disagreements.push(f.to_string());
        }
    }
    let text = if disagreements.is_empty() {
        format!("agree on {} formulas (seed {seed})", formulas.len())
    } else {
        format!("disagree on:\n{}", disagreements.join("\n"))
    };
    let json = json!({ "formulas": formulas.len(), "seed": seed, "disagreements": disagreements });
    Ok(Output::verdict(disagreements.is_empty(), text, json))
}

fn verify_command(cmd: VerifyCommand) -> Result<Output> {
    let VerifyCommand::Naturality {
        frame,
        random,
        seed,
        max_points,
    } = cmd;
    if frame.is_none() && random == 0 {
        return Err(Error::Malformed("give a frame or --random N".into()));
    }
    if !(1..=6).contains(&max_points) {
        return Err(Error::Malformed("--max-points must be between 1 and 6".into()));
    }
    let mut lines = Vec::new();
    let mut all_ok = true;
    if let Some(name) = frame {
        let g = ms4(&name)?;
        g.ensure_valid()?;
        let report = check_skeleton_naturality(&g)?;
        all_ok &= report.ok();
        lines.push(format!("{name}: {report}"));
    }
    let mut r = rng(seed);
    let mut failures = 0;
    for i in 0..random {
        let g = random_ms4_frame(&mut r, max_points);
        let report = check_skeleton_naturality(&g)?;
        if !report.ok() {
            failures += 1;
            lines.push(format!("random frame {i}: {report}"));
        }
    }
    if random > 0 {
        all_ok &= failures == 0;
        lines.push(format!("{random} random frames (seed {seed}): {failures} failures"));
    }
    Ok(Output::verdict(
        all_ok,
        lines.join("\n"),
        json!({ "ok": all_ok, "lines": lines }),
    ))
}

fn fixture_command(cmd: FixtureCommand) -> Result<Output> {
    Ok(match cmd {
        FixtureCommand::List => {
            let mut lines: Vec<String> = fixtures::ms4_frames()
                .iter()
                .map(|(name, g)| format!("{name}  MS4 frame, {}", count(g.len(), "point")))
                .collect();
            lines.push("B1  MS4-algebra K1*, 16 elements".into());
            lines.push("B2  MS4-algebra K2*, 8 elements".into());
            let names: Vec<&str> = fixtures::NAMES.iter().copied().chain(["B1", "B2"]).collect();
            Output::new(lines.join("\n"), json!(names))
        }
        FixtureCommand::Dump { name } => match name.as_str() {
            "B1" | "B2" => Output::document(algebra_json(&refs::algebra(&name)?)),
            _ => Output::document(frame_json(&Frame::Ms4(fixtures::frame(&name)?))),
        },
    })
}

fn run(cli: Cli) -> Result<Output> {
    Ok(match cli.command {
        Command::Parse { formula, lang } => {
            let f = parse_formula(&formula, lang.into())?;
            let json = json!({
                "formula": f.to_string(),
                "lang": f.lang().name(),
                "vars": f.vars(),
                "depth": f.depth(),
            });
            Output::new(f.to_string(), json)
        }
        Command::Translate { formula } => {
            let t = godel_translate(&parse_formula(&formula, Lang::Int)?)?;
            Output::new(t.to_string(), json!({ "translation": t.to_string() }))
        }
        Command::Frame(c) => frame_command(c)?,
        Command::Algebra(c) => algebra_command(c)?,
        Command::Variety(c) => variety_command(c)?,
        Command::Check(c) => check_command(c)?,
        Command::Verify(c) => verify_command(c)?,
        Command::Render { frame, format, title } => {
            let Format::Dot = format;
            let title = title.unwrap_or_else(|| frame.clone());
            let dot = match refs::frame(&frame)? {
                Frame::Ms4(g) => ms4_to_dot(&g, &title),
                Frame::Mipc(f) => mipc_to_dot(&f, &title),
            };
            let json = json!({ "dot": dot });
            Output::new(dot.trim_end(), json)
        }
        Command::Fixture(c) => fixture_command(c)?,
        Command::VerifyPaper {
            only,
            parallel,
            timings,
            seed,
        } => {
            let options = SuiteOptions {
                only,
                parallel,
                seed,
                ..SuiteOptions::default()
            };
            let report = run_suite(&Fixtures::default(), &options);
            if let Some(failed) = report.first_failure() {
                eprintln!("failed: {} ({})", failed.name, failed.anchor);
            }
            let mut json = to_json(&report);
            if !timings {
                for r in json["results"].as_array_mut().into_iter().flatten() {
                    r.as_object_mut().map(|o| o.remove("elapsed"));
                }
            }
            Output::verdict(report.ok(), report.render(timings).trim_end(), json)
        }
    })
}

/// Prints a line; a closed pipe is not an error.
fn emit(text: &str) {
    use std::io::Write;
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let as_json = cli.json;
    match run(cli) {
        Ok(out) => {
            if as_json {
                emit(&serde_json::to_string_pretty(&out.json).expect("serializable"));
            } else if !out.text.is_empty() {
                emit(&out.text);
            }
            if out.holds {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
