//! Command-line front end. [`run`] parses arguments and returns the exit
//! code with captured output, so the binary stays a two-liner.
//!
//! Exit codes: `0` success or property holds, `1` property fails (witness
//! on stdout), `2` input or structural error.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::algebra::{
    check_class, check_deductive_algebra, generate_deductive_system, load_algebra, BinaryOp,
    ClassName, DeductiveMode, FiniteAlgebra, UnaryOp,
};
use crate::dot;
use crate::enumerate;
use crate::error::{Error, Result};
use crate::info::{approximate, inclusion_preorder, indiscernibility, parse_info_system};
use crate::laws;
use crate::order::{BuildMode, Preorder, PreorderDoc};
use crate::rauszer::{opens_with_limit, weak_implication_laws, DEFAULT_OPENS_LIMIT};
use crate::report::LawReport;
use crate::representation::{
    interpolation_check, monteiro_equivalence, opens_nelson_check, prime_spectrum, stone_map,
    with_involution, PrimeFilterSpace,
};
use crate::subset::{Subset, MAX_UNIVERSE};

/// Name of the environment variable that overrides every size cap.
pub const MAX_N_VAR: &str = "RAUSZER_MAX_N";

#[derive(Debug, Parser)]
#[command(
    name = "rauszer",
    version,
    about = "Finite Rauszer algebras, their opens and prime-filter representations"
)]
pub struct Cli {
    /// Output format where a command supports more than one.
    #[arg(long, value_enum, global = true, default_value = "json")]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Relation {
    /// Indiscernibility (equal cells).
    Indisc,
    /// Informational inclusion (cellwise subset).
    Incl,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Preorders,
    KleeneSymHeyting,
    Nelson,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DotKind {
    /// Hasse diagram of the preorder itself.
    Preorder,
    /// Lattice of open sets of a preorder.
    Opens,
    /// Prime-filter spectrum of an algebra.
    Spectrum,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check that a preorder file is already reflexive and transitive.
    Validate { file: PathBuf },
    /// Print the reflexive-transitive closure of a relation file.
    Close { file: PathBuf },
    /// List the open sets of a preorder.
    Opens {
        file: PathBuf,
        /// Emit the Hasse diagram of the opens instead of a listing.
        #[arg(long)]
        dot: bool,
    },
    /// Lower and upper approximation of a set of objects.
    Approx {
        file: PathBuf,
        /// Comma-separated object labels.
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            default_value = ""
        )]
        set: Vec<String>,
        #[arg(long, value_enum, default_value = "indisc")]
        relation: Relation,
    },
    /// Check an algebra against a named class.
    Check {
        file: PathBuf,
        #[arg(long)]
        class: String,
    },
    /// Build the prime spectrum and verify the Stone embedding.
    Represent {
        file: PathBuf,
        /// `auto` for every law the tables allow, or a comma-separated subset.
        #[arg(long, default_value = "auto")]
        laws: String,
    },
    /// Check the interpolation property of the Rasiowa involution.
    Interpolate { file: PathBuf },
    /// Enumerate a family of small models and test a property on each.
    Search {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        property: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random models per size beyond the exhaustive range.
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
    /// Graphviz output for a preorder, its opens, or an algebra's spectrum.
    ExportDot {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "preorder")]
        kind: DotKind,
    },
}

/// Size caps; `max_n` from the environment replaces all of them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub preorder_points: usize,
    pub algebra_size: usize,
    pub search_preorders: usize,
    pub search_algebras: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            preorder_points: 64,
            algebra_size: 64,
            search_preorders: 8,
            search_algebras: 7,
        }
    }
}

impl RunConfig {
    pub fn with_max_n(max_n: usize) -> Self {
        RunConfig {
            preorder_points: max_n.min(MAX_UNIVERSE),
            algebra_size: max_n.min(MAX_UNIVERSE),
            search_preorders: max_n.min(laws::MAX_SUBSET_SCAN),
            search_algebras: max_n.min(64),
        }
    }

    /// Defaults, or the value of `RAUSZER_MAX_N` when set.
    pub fn from_env() -> Result<Self> {
        match std::env::var(MAX_N_VAR) {
            Err(_) => Ok(Self::default()),
            Ok(v) => v.trim().parse().map(Self::with_max_n).map_err(|_| {
                Error::Parse(format!(
                    "{MAX_N_VAR} must be a non-negative integer, got '{v}'"
                ))
            }),
        }
    }
}

/// Exit code and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn verdict(holds: bool, stdout: String) -> Self {
        Outcome {
            code: if holds { 0 } else { 1 },
            stdout,
            stderr: String::new(),
        }
    }

    fn error(e: &Error) -> Self {
        Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        }
    }
}

/// Parses `args` (program name first) and runs the command with caps from
/// the environment.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match RunConfig::from_env() {
        Ok(cfg) => run_with(args, &cfg),
        Err(e) => Outcome::error(&e),
    }
}

pub fn run_with<I, T>(args: I, cfg: &RunConfig) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome::ok(text)
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    match execute(&cli, cfg) {
        Ok(out) => out,
        Err(e) => Outcome::error(&e),
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn emit(v: &Value) -> String {
    let mut s = serde_json::to_string(v).expect("json");
    s.push('\n');
    s
}

fn load_preorder_doc(path: &Path, cfg: &RunConfig) -> Result<PreorderDoc> {
    let doc: PreorderDoc =
        serde_json::from_str(&read(path)?).map_err(|e| Error::Parse(e.to_string()))?;
    if doc.n > cfg.preorder_points {
        return Err(Error::Capacity {
            what: "preorder points",
            size: doc.n,
            cap: cfg.preorder_points,
        });
    }
    Ok(doc)
}

fn load_algebra_file(path: &Path, cfg: &RunConfig) -> Result<FiniteAlgebra> {
    let alg = load_algebra(&read(path)?)?;
    if alg.size() > cfg.algebra_size {
        return Err(Error::Capacity {
            what: "algebra carrier",
            size: alg.size(),
            cap: cfg.algebra_size,
        });
    }
    Ok(alg)
}

fn up_sets_json(r: &Preorder) -> Value {
    json!(r.up_sets().iter().map(Subset::to_vec).collect::<Vec<_>>())
}

fn labels_or_indices(doc: &PreorderDoc) -> Vec<String> {
    doc.labels
        .clone()
        .unwrap_or_else(|| (0..doc.n).map(|i| i.to_string()).collect())
}

fn execute(cli: &Cli, cfg: &RunConfig) -> Result<Outcome> {
    match &cli.command {
        Command::Validate { file } => {
            let doc = load_preorder_doc(file, cfg)?;
            match doc.build(BuildMode::Validate) {
                Ok(r) => Ok(Outcome::ok(emit(
                    &json!({"valid": true, "n": r.len(), "up": up_sets_json(&r)}),
                ))),
                Err(Error::NotTransitive { witness }) => Ok(Outcome::verdict(
                    false,
                    emit(&json!({"valid": false, "witness": [witness.0, witness.1]})),
                )),
                Err(e) => Err(e),
            }
        }
        Command::Close { file } => {
            let doc = load_preorder_doc(file, cfg)?;
            let r = doc.build(BuildMode::Close)?;
            let closed = PreorderDoc::from_preorder(&r, doc.labels.clone());
            Ok(Outcome::ok(emit(
                &serde_json::to_value(closed).expect("json"),
            )))
        }
        Command::Opens { file, dot: as_dot } => {
            let doc = load_preorder_doc(file, cfg)?;
            let r = doc.build(BuildMode::Validate)?;
            let lattice = opens_with_limit(&r, DEFAULT_OPENS_LIMIT)?;
            let names = labels_or_indices(&doc);
            if *as_dot || cli.format == Format::Dot {
                return Ok(Outcome::ok(dot::opens_dot(&lattice, doc.labels.as_deref())));
            }
            let listed: Vec<Vec<&str>> = lattice
                .members()
                .iter()
                .map(|g| g.iter().map(|i| names[i].as_str()).collect())
                .collect();
            if cli.format == Format::Text {
                let mut out = String::new();
                for g in lattice.members() {
                    out.push_str(&dot::set_label(g, doc.labels.as_deref()));
                    out.push('\n');
                }
                return Ok(Outcome::ok(out));
            }
            Ok(Outcome::ok(emit(
                &json!({"n": r.len(), "count": lattice.len(), "opens": listed}),
            )))
        }
        Command::Approx {
            file,
            set,
            relation,
        } => {
            let system = parse_info_system(&read(file)?)?;
            let labels: Vec<&str> = set
                .iter()
                .map(|s| s.trim())
                .filter(|s| !s.is_empty())
                .collect();
            let x = system.select(&labels)?;
            let r = match relation {
                Relation::Indisc => indiscernibility(&system),
                Relation::Incl => inclusion_preorder(&system),
            };
            let mut out = approximate(&r, &x)?.to_json(system.objects());
            out.push('\n');
            Ok(Outcome::ok(out))
        }
        Command::Check { file, class } => {
            let alg = load_algebra_file(file, cfg)?;
            let class: ClassName = class.parse()?;
            let report = check_class(&alg, class)?;
            Ok(Outcome::verdict(
                report.holds,
                emit(&serde_json::to_value(&report).expect("json")),
            ))
        }
        Command::Represent { file, laws } => represent(&load_algebra_file(file, cfg)?, laws),
        Command::Interpolate { file } => interpolate(&load_algebra_file(file, cfg)?),
        Command::Search {
            family,
            max_n,
            property,
            seed,
            samples,
        } => search(*family, *max_n, property, *seed, *samples, cfg),
        Command::ExportDot { file, kind } => {
            let out = match kind {
                DotKind::Preorder | DotKind::Opens => {
                    let doc = load_preorder_doc(file, cfg)?;
                    let r = doc.build(BuildMode::Validate)?;
                    if *kind == DotKind::Preorder {
                        dot::hasse_dot("preorder", &r, &labels_or_indices(&doc))
                    } else {
                        dot::opens_dot(
                            &opens_with_limit(&r, DEFAULT_OPENS_LIMIT)?,
                            doc.labels.as_deref(),
                        )
                    }
                }
                DotKind::Spectrum => {
                    dot::spectrum_dot(&prime_spectrum(&load_algebra_file(file, cfg)?)?)
                }
            };
            Ok(Outcome::ok(out))
        }
    }
}

fn space_json(space: &PrimeFilterSpace) -> Value {
    let mut v = json!({
        "points": space.points().iter().map(Subset::to_vec).collect::<Vec<_>>(),
        "order": up_sets_json(space.order()),
    });
    if let Some(phi) = space.phi() {
        v["phi"] = json!(phi.as_slice());
    }
    if let Some(k) = space.kinds() {
        v["kinds"] = json!({"first": k.first.to_vec(), "second": k.second.to_vec()});
    }
    v
}

fn attach_phi(alg: &FiniteAlgebra, space: PrimeFilterSpace) -> Result<PrimeFilterSpace> {
    if alg.has_unary(UnaryOp::Neg) {
        with_involution(alg, &space)
    } else {
        Ok(space)
    }
}

/// Laws whose failure contradicts a class check the input passed.
fn class_backing(alg: &FiniteAlgebra, law: &str) -> Result<Option<ClassName>> {
    let class = match law {
        "h3" | "h2" => ClassName::Heyting,
        "h4" => ClassName::Brouwer,
        "neg" => ClassName::DeMorgan,
        "wimpl" => ClassName::Nelson,
        "h0" | "h1" | "open" | "injective" => ClassName::Distributive,
        _ => return Ok(None),
    };
    Ok(match check_class(alg, class) {
        Ok(r) if r.holds => Some(class),
        _ => None,
    })
}

fn represent(alg: &FiniteAlgebra, wanted: &str) -> Result<Outcome> {
    let space = attach_phi(alg, prime_spectrum(alg)?)?;
    let emb = stone_map(alg, &space)?;
    let mut report = emb.report.clone();
    if wanted != "auto" {
        let mut picked = LawReport::new();
        for name in wanted.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let outcome = report.get(name).ok_or_else(|| {
                Error::Precondition(format!("law '{name}' is not checkable on this input"))
            })?;
            picked.record(name, outcome.witness.clone());
        }
        report = picked;
    }
    for (law, _) in report.failures() {
        if let Some(class) = class_backing(alg, law)? {
            return Err(Error::Internal(format!(
                "law {law} fails although the input is {class}"
            )));
        }
    }
    let mut out = space_json(&space);
    out["h"] = json!(emb.h.iter().map(Subset::to_vec).collect::<Vec<_>>());
    let laws = report.to_json();
    out["laws"] = laws["laws"].clone();
    out["witness"] = laws["witness"].clone();
    if let Some(kl) = space.kind_laws() {
        out["kind_laws"] = kl.to_json()["laws"].clone();
        report = merge(report, &kl, "kind-");
    }
    Ok(Outcome::verdict(report.all_hold(), emit(&out)))
}

fn merge(mut into: LawReport, from: &LawReport, prefix: &str) -> LawReport {
    for name in from.names() {
        into.record(
            &format!("{prefix}{name}"),
            from.get(name).and_then(|o| o.witness.clone()),
        );
    }
    into
}

fn interpolate(alg: &FiniteAlgebra) -> Result<Outcome> {
    if !alg.has_unary(UnaryOp::Neg) {
        return Err(Error::MissingInvolution);
    }
    let space = with_involution(alg, &prime_spectrum(alg)?)?;
    let interp = interpolation_check(&space)?;
    let mut out = space_json(&space);
    out["interpolation"] = serde_json::to_value(&interp).expect("json");
    if interp.holds {
        out["opens_nelson"] = serde_json::to_value(opens_nelson_check(&space)?).expect("json");
    }
    Ok(Outcome::verdict(
        interp.holds && interp.delta_failure.is_none(),
        emit(&out),
    ))
}

const PREORDER_PROPERTIES: &[&str] = &["operators", "conjugacy", "opens", "residuation", "monadic"];
const KSH_PROPERTIES: &[&str] = &["monteiro-agree", "stone", "m-laws"];
const NELSON_PROPERTIES: &[&str] = &[
    "interpolation",
    "opens-nelson",
    "stone",
    "deductive",
    "explosion",
    "kinds",
];

/// Counterexamples kept in a search report.
const MAX_REPORTED: usize = 10;

struct Tally {
    examined: usize,
    failures: Vec<Value>,
    failed: usize,
}

impl Tally {
    fn new() -> Self {
        Tally {
            examined: 0,
            failures: Vec::new(),
            failed: 0,
        }
    }

    fn add(&mut self, failure: Option<Value>) {
        self.examined += 1;
        if let Some(f) = failure {
            self.failed += 1;
            if self.failures.len() < MAX_REPORTED {
                self.failures.push(f);
            }
        }
    }
}

fn search(
    family: Family,
    max_n: usize,
    property: &str,
    seed: u64,
    samples: usize,
    cfg: &RunConfig,
) -> Result<Outcome> {
    let known = match family {
        Family::Preorders => PREORDER_PROPERTIES,
        Family::KleeneSymHeyting => KSH_PROPERTIES,
        Family::Nelson => NELSON_PROPERTIES,
    };
    if !known.contains(&property) {
        return Err(Error::Precondition(format!(
            "unknown property '{property}' for this family; expected one of {}",
            known.join(", ")
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tally = Tally::new();
    let (cap, exhaustive_up_to) = match family {
        Family::Preorders => (cfg.search_preorders, enumerate::MAX_EXHAUSTIVE_PREORDERS),
        _ => (cfg.search_algebras, enumerate::MAX_CANONICAL),
    };
    if max_n > cap {
        return Err(Error::Capacity {
            what: "search",
            size: max_n,
            cap,
        });
    }
    match family {
        Family::Preorders => {
            let check = |r: &Preorder| -> Result<LawReport> {
                match property {
                    "operators" => laws::operator_laws(r),
                    "conjugacy" => laws::conjugacy_laws(r),
                    "opens" => laws::opens_laws(r),
                    "residuation" => laws::residuation_laws(r),
                    _ => laws::monadic_laws(r),
                }
            };
            for n in 1..=max_n {
                let corpus: Vec<Preorder> = if property == "monadic" {
                    enumerate::equivalences(n)
                } else if n <= exhaustive_up_to {
                    enumerate::all_preorders(n)?
                } else {
                    (0..samples)
                        .map(|_| {
                            let density = rng.gen_range(0.0..0.5);
                            enumerate::random_preorder(&mut rng, n, density)
                        })
                        .collect()
                };
                for r in corpus {
                    let rep = check(&r)?;
                    tally.add((!rep.all_hold()).then(|| {
                        json!({"preorder": PreorderDoc::from_preorder(&r, None), "report": rep.to_json()})
                    }));
                }
            }
        }
        _ => {
            for n in 2..=max_n {
                let corpus = algebra_corpus(family, n, &mut rng, samples)?;
                for alg in corpus {
                    let failure = algebra_property(&alg, property)?;
                    tally.add(
                        failure.map(|detail| json!({"algebra": alg.to_doc(), "detail": detail})),
                    );
                }
            }
        }
    }
    let family_name = family
        .to_possible_value()
        .expect("named")
        .get_name()
        .to_string();
    let out = json!({
        "family": family_name,
        "property": property,
        "max_n": max_n,
        "seed": seed,
        "exhaustive_up_to": exhaustive_up_to.min(max_n),
        "examined": tally.examined,
        "counterexamples": tally.failed,
        "examples": tally.failures,
    });
    Ok(Outcome::verdict(tally.failed == 0, emit(&out)))
}

fn algebra_corpus(
    family: Family,
    n: usize,
    rng: &mut ChaCha8Rng,
    samples: usize,
) -> Result<Vec<FiniteAlgebra>> {
    if n <= enumerate::MAX_CANONICAL {
        return match family {
            Family::Nelson => enumerate::nelson_algebras(n),
            _ => enumerate::kleene_symmetric_heyting(n),
        };
    }
    // beyond canonization: seeded samples whose size is exactly n
    let mut out = Vec::new();
    for _ in 0..samples {
        let Some(alg) = enumerate::random_kleene_algebra(rng, n, 50)? else {
            continue;
        };
        if alg.size() != n {
            continue;
        }
        if family == Family::Nelson && !check_class(&alg, ClassName::Nelson)?.holds {
            continue;
        }
        out.push(alg);
    }
    Ok(out)
}

/// `None` when the property holds on `alg`, else a JSON description.
fn algebra_property(alg: &FiniteAlgebra, property: &str) -> Result<Option<Value>> {
    let fails = |rep: &LawReport| (!rep.all_hold()).then(|| rep.to_json());
    Ok(match property {
        "monteiro-agree" => {
            let m = monteiro_equivalence(alg)?;
            (!m.agree).then(|| serde_json::to_value(&m).expect("json"))
        }
        "stone" => {
            let space = with_involution(alg, &prime_spectrum(alg)?)?;
            fails(&stone_map(alg, &space)?.report)
        }
        "m-laws" => {
            let space = with_involution(alg, &prime_spectrum(alg)?)?;
            fails(&weak_implication_laws(
                space.order(),
                space.phi().expect("attached"),
            )?)
        }
        "interpolation" => {
            let space = with_involution(alg, &prime_spectrum(alg)?)?;
            let i = interpolation_check(&space)?;
            (!i.holds || i.delta_failure.is_some()).then(|| serde_json::to_value(&i).expect("json"))
        }
        "opens-nelson" => {
            let space = with_involution(alg, &prime_spectrum(alg)?)?;
            let r = opens_nelson_check(&space)?;
            (!r.holds).then(|| serde_json::to_value(&r).expect("json"))
        }
        "deductive" => deductive_property(alg)?,
        "explosion" => {
            let bad = alg
                .elements()
                .flat_map(|a| alg.elements().map(move |b| (a, b)))
                .find(|&(a, b)| {
                    alg.binary(BinaryOp::WImpl, alg.meet(a, alg.neg(a)), b) != Some(alg.top())
                });
            bad.map(|(a, b)| json!({"a": a, "b": b}))
        }
        _ => {
            let space = with_involution(alg, &prime_spectrum(alg)?)?;
            space.kind_laws().and_then(|kl| fails(&kl))
        }
    })
}

/// Subsets `Z` scanned by the deductive-system property.
const MAX_GENERATOR_SCAN: usize = 12;

fn deductive_property(alg: &FiniteAlgebra) -> Result<Option<Value>> {
    let r = check_deductive_algebra(alg, BinaryOp::WImpl)?;
    if !r.holds {
        return Ok(Some(serde_json::to_value(&r).expect("json")));
    }
    let n = alg.size();
    if n > MAX_GENERATOR_SCAN {
        return Ok(None);
    }
    for mask in 0..1u64 << n {
        let z = Subset::from_bits(n, mask);
        for mode in [DeductiveMode::Chained, DeductiveMode::Conjunctive] {
            if let Err(e) = generate_deductive_system(alg, BinaryOp::WImpl, &z, mode) {
                return Ok(Some(
                    json!({"generators": z.to_vec(), "mode": format!("{mode:?}"), "error": e.to_string()}),
                ));
            }
        }
    }
    Ok(None)
}
