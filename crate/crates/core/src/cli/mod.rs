//! The `factoriad` command line: every law and correspondence check over
//! category, fs, choice and algebra files, reported as deterministic JSON.

mod report;

use std::fs;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

pub use report::{error_exit_code, InputDigest, Report, Status};

use crate::algcorr::{
    algebra_to_fs, check_algebra_morphism, check_pseudo_algebra, check_strict_algebra, check_taus,
    enumerate_strict_algebras, fs_to_pseudo_algebra, induce_fr_algebra, proper_correspondence_check,
    r_compat_failure, roundtrip_algebra, roundtrip_fs, strict_algebra_to_strict_fs, strict_fs_to_algebra,
    PseudoAlgebra,
};
use crate::arrowmonad::{arrow_category, check_cubical_equations, check_monad_laws, MonadKind, Tower};
use crate::error::{Error, InputError, Result};
use crate::factsys::{
    enumerate_fs, enumerate_strict_fs, FactorisationChoice, FactorisationSystem, FsViolation,
    StrictFactorisationSystem,
};
use crate::fincat::FinCategory;
use crate::format::{parse_choice, AlgebraFile, CategoryFile, FsFile};
use crate::freyd::{check_freyd_properness, check_projection_monad_morphism, freyd_completion};
use crate::guard::SizeGuard;
use crate::report::Checks;

#[derive(Debug, Parser)]
#[command(name = "factoriad", version, about = "Factorisation systems, the arrow-category monad and the Freyd completion on finite categories")]
pub struct Cli {
    /// Human-readable text instead of JSON.
    #[arg(long, global = true)]
    pub pretty: bool,
    /// Largest base (in morphisms) for the expensive searches; overrides
    /// FACTORIAD_SIZE_GUARD.
    #[arg(long, global = true, value_name = "N")]
    pub size_guard: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Emit {
    /// Write the derived category here.
    #[arg(short = 'o', long = "output", value_name = "FILE")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate a category file.
    Check { cat: PathBuf },
    /// Build the arrow category.
    Arrow {
        cat: PathBuf,
        #[command(flatten)]
        emit: Emit,
    },
    /// Build the Freyd completion and check its canonical proper system.
    Freyd {
        cat: PathBuf,
        #[command(flatten)]
        emit: Emit,
    },
    /// Unit, multiplication and the monad laws.
    MonadLaws {
        cat: PathBuf,
        #[arg(long, default_value = "P")]
        monad: MonadKind,
    },
    /// The cubical equations of faces, degeneracy and connections.
    Cubical { cat: PathBuf },
    /// Check a factorisation system file.
    FsCheck {
        cat: PathBuf,
        fs: PathBuf,
        /// Read the file as a strict system.
        #[arg(long)]
        strict: bool,
        /// Also require E epi and M mono.
        #[arg(long)]
        proper: bool,
    },
    /// List every factorisation system.
    FsEnumerate {
        cat: PathBuf,
        #[arg(long)]
        strict: bool,
        #[arg(long)]
        proper_only: bool,
    },
    /// Check an algebra file.
    AlgebraCheck { cat: PathBuf, alg: PathBuf },
    /// The factorisation system of an algebra.
    AlgebraToFs {
        cat: PathBuf,
        alg: PathBuf,
        #[arg(short = 'o', long = "output", value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// The pseudo algebra of a factorisation system.
    FsToAlgebra {
        cat: PathBuf,
        fs: PathBuf,
        /// Chosen factorisations; the least ones by default.
        #[arg(long, value_name = "FILE")]
        choice: Option<PathBuf>,
        #[arg(long, default_value = "P")]
        monad: MonadKind,
        #[arg(short = 'o', long = "output", value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Both correspondences over every enumerated system.
    Roundtrip { cat: PathBuf },
    /// Compatibility of a P-algebra with the Freyd congruence.
    FrCompat { cat: PathBuf, alg: PathBuf },
    /// The projection from P to Fr as a morphism of monads.
    ProjectionCheck { cat: PathBuf },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Check { .. } => "check",
            Command::Arrow { .. } => "arrow",
            Command::Freyd { .. } => "freyd",
            Command::MonadLaws { .. } => "monad-laws",
            Command::Cubical { .. } => "cubical",
            Command::FsCheck { .. } => "fs-check",
            Command::FsEnumerate { .. } => "fs-enumerate",
            Command::AlgebraCheck { .. } => "algebra-check",
            Command::AlgebraToFs { .. } => "algebra-to-fs",
            Command::FsToAlgebra { .. } => "fs-to-algebra",
            Command::Roundtrip { .. } => "roundtrip",
            Command::FrCompat { .. } => "fr-compat",
            Command::ProjectionCheck { .. } => "projection-check",
        }
    }
}

/// Files read so far, with their digests.
#[derive(Default)]
struct Inputs(Vec<InputDigest>);

impl Inputs {
    fn read(&mut self, path: &PathBuf) -> Result<String> {
        let shown = path.display().to_string();
        let bytes = fs::read(path).map_err(|e| InputError::new(shown.clone(), e.to_string()))?;
        self.0.push(InputDigest::new(&shown, &bytes));
        String::from_utf8(bytes).map_err(|_| InputError::new(shown, "not UTF-8").into())
    }

    fn category(&mut self, path: &PathBuf) -> Result<Arc<FinCategory>> {
        let text = self.read(path)?;
        let file = CategoryFile::parse(&text).map_err(|e| located(path, e))?;
        Ok(Arc::new(file.to_category()?))
    }
}

fn located(path: &PathBuf, e: InputError) -> InputError {
    InputError::new(format!("{}: {}", path.display(), e.location), e.message)
}

fn write_file(path: &PathBuf, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| InputError::new(path.display().to_string(), e.to_string()).into())
}

fn fs_checks(violations: &[FsViolation], strict: bool) -> Checks {
    let first = |p: &dyn Fn(&FsViolation) -> bool| violations.iter().find(|v| p(v)).map(|v| v.to_string());
    let mut checks = Checks::new();
    if strict {
        checks.record(
            "identities in both classes",
            "E0, M0 contain the identities",
            first(&|v| matches!(v, FsViolation::MissingIdentity { .. })),
        );
    } else {
        checks.record("isos in both classes", "E, M contain the isos", first(&|v| matches!(v, FsViolation::MissingIso { .. })));
    }
    checks.record(
        "closed under composition",
        "E . E in E, M . M in M",
        first(&|v| matches!(v, FsViolation::NotClosed { .. })),
    );
    checks.record("every morphism factors", "f = m . e", first(&|v| matches!(v, FsViolation::NoFactorisation { .. })));
    if strict {
        checks.record(
            "factorisations are unique",
            "exactly one f = m . e",
            first(&|v| matches!(v, FsViolation::NotUnique { .. })),
        );
    } else {
        checks.record(
            "orthogonality",
            "unique fill-in for every e in E, m in M",
            first(&|v| matches!(v, FsViolation::NotOrthogonal { .. })),
        );
    }
    checks
}

fn proper_failure(c: &FinCategory, e: impl Iterator<Item = crate::fincat::Mor>, m: impl Iterator<Item = crate::fincat::Mor>) -> Option<String> {
    let mut e = e;
    let mut m = m;
    e.find(|&f| !c.is_epi(f))
        .map(|f| format!("{} is in E but not epi", c.morphism_name(f)))
        .or_else(|| m.find(|&f| !c.is_mono(f)).map(|f| format!("{} is in M but not mono", c.morphism_name(f))))
}

fn load_algebra(inputs: &mut Inputs, x: &Arc<FinCategory>, path: &PathBuf) -> Result<PseudoAlgebra> {
    let text = inputs.read(path)?;
    let file = AlgebraFile::parse(&text).map_err(|e| located(path, e))?;
    let kind: MonadKind = file
        .monad
        .parse()
        .map_err(|e: String| InputError::new(format!("{}: monad", path.display()), e))?;
    let tower = Arc::new(Tower::new(kind, x));
    PseudoAlgebra::from_file(tower, &file).map_err(|e| match e {
        Error::Input(i) => located(path, i).into(),
        other => other,
    })
}

fn all_choices(fs: &FactorisationSystem) -> Result<Vec<FactorisationChoice>> {
    let mut choices = FactorisationChoice::all(fs, 8)?;
    let greatest = FactorisationChoice::greatest(fs)?;
    if !choices.contains(&greatest) {
        choices.push(greatest);
    }
    Ok(choices)
}

fn first_failure(label: &str, checks: &Checks) -> Option<String> {
    checks.failures().next().map(|r| {
        format!("{label}: {}{}", r.law, r.counterexample.as_ref().map(|c| format!(" ({c})")).unwrap_or_default())
    })
}

/// Runs one command. Errors are input errors, size guards and failed
/// constructions; failed checks are reported, not returned as errors.
pub fn execute(cli: &Cli) -> Result<Report> {
    let guard = cli.size_guard.map(SizeGuard::uniform).unwrap_or_else(SizeGuard::from_env);
    let mut inputs = Inputs::default();
    let mut checks = Checks::new();
    let mut result = None;
    match &cli.command {
        Command::Check { cat } => {
            let text = inputs.read(cat)?;
            let file = CategoryFile::parse(&text).map_err(|e| located(cat, e))?;
            let c = file.to_category_unchecked().map_err(|e| located(cat, e))?;
            let violations = c.validate();
            for (law, anchor) in [
                ("identity", "f . id = f = id . f"),
                ("coherence", "dom and cod of g . f"),
                ("associativity", "h . (g . f) = (h . g) . f"),
            ] {
                checks.record(law, anchor, violations.iter().find(|v| v.law() == law).map(|v| v.to_string()));
            }
            result = Some(json!({ "objects": c.object_count(), "morphisms": c.morphism_count() }));
        }
        Command::Arrow { cat, emit } => {
            let x = inputs.category(cat)?;
            let px = arrow_category(&x);
            let violations = px.cat().validate();
            checks.record("arrow category is a category", "squares compose", violations.first().map(|v| v.to_string()));
            result = Some(json!({ "objects": px.cat().object_count(), "morphisms": px.cat().morphism_count() }));
            if let Some(out) = &emit.output {
                write_file(out, &px.to_file().to_json())?;
            }
        }
        Command::Freyd { cat, emit } => {
            let x = inputs.category(cat)?;
            let frx = freyd_completion(&x);
            checks.extend(check_freyd_properness(&x));
            result = Some(json!({
                "objects": frx.cat().object_count(),
                "morphisms": frx.cat().morphism_count(),
                "squares": frx.arrow().cat().morphism_count(),
            }));
            if let Some(out) = &emit.output {
                write_file(out, &frx.to_file().to_json())?;
            }
        }
        Command::MonadLaws { cat, monad } => {
            let x = inputs.category(cat)?;
            checks = check_monad_laws(*monad, &x, &guard)?;
        }
        Command::Cubical { cat } => {
            let x = inputs.category(cat)?;
            checks = check_cubical_equations(&x, &guard)?;
        }
        Command::FsCheck { cat, fs: path, strict, proper } => {
            let x = inputs.category(cat)?;
            let text = inputs.read(path)?;
            let file = FsFile::parse(&text).map_err(|e| located(path, e))?;
            if *strict || file.is_strict() {
                let s = StrictFactorisationSystem::from_file(&x, &file)?;
                checks = fs_checks(&s.violations(), true);
                if *proper {
                    checks.record("proper", "E0 epi, M0 mono", proper_failure(&x, s.e0().iter(), s.m0().iter()));
                }
            } else {
                let f = FactorisationSystem::from_file(&x, &file)?;
                checks = fs_checks(&f.violations(), false);
                if *proper {
                    checks.record("proper", "E epi, M mono", proper_failure(&x, f.e().iter(), f.m().iter()));
                }
            }
        }
        Command::FsEnumerate { cat, strict, proper_only } => {
            let x = inputs.category(cat)?;
            let files: Vec<FsFile> = if *strict {
                enumerate_strict_fs(&x, &guard)?
                    .into_iter()
                    .filter(|s| !proper_only || s.is_proper())
                    .map(|s| s.to_file())
                    .collect()
            } else {
                enumerate_fs(&x, &guard)?
                    .into_iter()
                    .filter(|f| !proper_only || f.is_proper())
                    .map(|f| f.to_file())
                    .collect()
            };
            result = Some(json!({ "count": files.len(), "systems": files }));
        }
        Command::AlgebraCheck { cat, alg } => {
            let x = inputs.category(cat)?;
            guard.check_cube("algebra check", x.morphism_count())?;
            let a = load_algebra(&mut inputs, &x, alg)?;
            if let Some(s) = a.to_strict() {
                checks.extend(check_strict_algebra(&s)?);
            }
            checks.extend(check_pseudo_algebra(&a)?);
            if a.t().is_functor() {
                checks.extend(check_taus(a.tower(), a.t()));
            }
        }
        Command::AlgebraToFs { cat, alg, output } => {
            let x = inputs.category(cat)?;
            let a = load_algebra(&mut inputs, &x, alg)?;
            let fs = algebra_to_fs(a.tower(), a.t());
            checks.record(
                "derived classes form an fs",
                "E = {tau+ iso}, M = {tau- iso}",
                fs.as_ref().err().map(|e| e.to_string()),
            );
            let mut out = json!({});
            if let Ok(fs) = &fs {
                out["fs"] = json!(fs.to_file());
                if let Some(out_path) = output {
                    write_file(out_path, &fs.to_file().to_json())?;
                }
            }
            if let Some(s) = a.to_strict() {
                let strict = strict_algebra_to_strict_fs(&s);
                checks.record(
                    "derived classes form a strict fs",
                    "E0 = {tau+ identity}, M0 = {tau- identity}",
                    strict.as_ref().err().map(|e| e.to_string()),
                );
                if let Ok(strict) = strict {
                    out["strict_fs"] = json!(strict.to_file());
                }
            }
            result = Some(out);
        }
        Command::FsToAlgebra { cat, fs: path, choice, monad, output } => {
            let x = inputs.category(cat)?;
            guard.check_cube("algebra construction", x.morphism_count())?;
            let text = inputs.read(path)?;
            let file = FsFile::parse(&text).map_err(|e| located(path, e))?;
            let tower = Arc::new(Tower::new(*monad, &x));
            let a = if file.is_strict() {
                if choice.is_some() {
                    return Err(InputError::new("--choice", "a strict system forces its factorisations").into());
                }
                let s = StrictFactorisationSystem::from_file(&x, &file)?;
                let a = strict_fs_to_algebra(tower, &s)?;
                checks.extend(check_strict_algebra(&a)?);
                a.to_pseudo()
            } else {
                let fs = FactorisationSystem::from_file(&x, &file)?;
                if let Some(v) = fs.violations().first() {
                    return Err(Error::FsViolation(v.to_string()));
                }
                let ch = match choice {
                    Some(cp) => {
                        let text = inputs.read(cp)?;
                        let cf = parse_choice(&text).map_err(|e| located(cp, e))?;
                        FactorisationChoice::from_file(&fs, &cf)?
                    }
                    None => FactorisationChoice::least(&fs)?,
                };
                fs_to_pseudo_algebra(tower, &ch)?
            };
            checks.extend(check_pseudo_algebra(&a)?);
            let file = a.to_file();
            if let Some(out_path) = output {
                write_file(out_path, &file.to_json())?;
            }
            result = Some(json!(file));
        }
        Command::Roundtrip { cat } => {
            let x = inputs.category(cat)?;
            guard.check_cube("round trips", x.morphism_count())?;
            let (c, r) = roundtrip_suite(&x, &guard)?;
            checks = c;
            result = Some(r);
        }
        Command::FrCompat { cat, alg } => {
            let x = inputs.category(cat)?;
            let a = load_algebra(&mut inputs, &x, alg)?;
            if a.kind() != MonadKind::P {
                return Err(InputError::new(alg.display().to_string(), "compatibility is checked for P-algebras").into());
            }
            let failure = r_compat_failure(a.tower(), a.t())?;
            let compatible = failure.is_none();
            checks.record("compatible with R", "t constant on Freyd classes", failure);
            if compatible {
                let fr = Arc::new(Tower::new(MonadKind::Fr, &x));
                match induce_fr_algebra(&a, fr) {
                    Ok(b) => {
                        checks.record("induced Fr-algebra exists", "t = t' . p", None);
                        checks.extend(check_pseudo_algebra(&b)?);
                        result = Some(json!(b.to_file()));
                    }
                    Err(e) => checks.record("induced Fr-algebra exists", "t = t' . p", Some(e.to_string())),
                }
            }
        }
        Command::ProjectionCheck { cat } => {
            let x = inputs.category(cat)?;
            checks = check_projection_monad_morphism(&x, &guard)?;
        }
    }
    Ok(Report::new(cli.command.name(), inputs.0, checks, result))
}

/// Every enumerated system through both correspondences.
fn roundtrip_suite(x: &Arc<FinCategory>, guard: &SizeGuard) -> Result<(Checks, serde_json::Value)> {
    let tower = Arc::new(Tower::new(MonadKind::P, x));
    let systems = enumerate_fs(x, guard)?;
    let (mut pseudo, mut taus, mut fs_rt, mut alg_rt) = (None, None, None, None);
    let mut choices_tested = 0;
    for fs in &systems {
        let label = format!("E = {:?}", fs.e().names(x));
        let choices = all_choices(fs)?;
        choices_tested += choices.len();
        let algebras = choices
            .iter()
            .map(|ch| fs_to_pseudo_algebra(tower.clone(), ch))
            .collect::<Result<Vec<_>>>()?;
        for a in &algebras {
            if pseudo.is_none() {
                pseudo = first_failure(&label, &check_pseudo_algebra(a)?);
            }
            if taus.is_none() {
                taus = first_failure(&label, &check_taus(&tower, a.t()));
            }
        }
        if !roundtrip_fs(&tower, fs, &choices)? {
            fs_rt.get_or_insert_with(|| label.clone());
        }
        for b in &algebras[1..] {
            let verdict = roundtrip_algebra(&algebras[0], b)
                .and_then(|m| check_algebra_morphism(&algebras[0], b, &m))
                .map(|c| first_failure(&label, &c))
                .unwrap_or_else(|e| Some(format!("{label}: {e}")));
            if alg_rt.is_none() {
                alg_rt = verdict;
            }
        }
    }
    let mut checks = Checks::new();
    checks.record("derived pseudo algebras", "unitary, coherence iso, coherence on units and on T3X for every system and choice", pseudo);
    checks.record("tau transforms", "tau- natural, tau+ natural, tau+ . tau- = x", taus);
    checks.record("fs round trip", "fs -> algebra -> fs is the identity", fs_rt);
    checks.record("algebra round trip", "(1, phi) is a pseudo isomorphism between choices", alg_rt);

    let mut summary = json!({ "systems": systems.len(), "choices": choices_tested });
    if x.morphism_count() <= guard.strict_algebras {
        let strict = enumerate_strict_fs(x, guard)?;
        let algebras = enumerate_strict_algebras(&tower, guard)?;
        let mut failure = None;
        if strict.len() != algebras.len() {
            failure = Some(format!("{} strict systems but {} strict algebras", strict.len(), algebras.len()));
        }
        for s in &strict {
            let a = strict_fs_to_algebra(tower.clone(), s)?;
            if !algebras.contains(&a) {
                failure.get_or_insert_with(|| format!("algebra of E0 = {:?} is not enumerated", s.e0().names(x)));
            }
            let back = strict_algebra_to_strict_fs(&a)?;
            if &back != s {
                failure.get_or_insert_with(|| format!("E0 = {:?} does not come back", s.e0().names(x)));
            }
        }
        for a in &algebras {
            let s = strict_algebra_to_strict_fs(a)?;
            if &strict_fs_to_algebra(tower.clone(), &s)? != a {
                failure.get_or_insert_with(|| "a strict algebra does not come back".into());
            }
        }
        checks.record("strict correspondence", "strict fs <-> strict algebras, both composites identities", failure);
        summary["strict_systems"] = json!(strict.len());
        summary["strict_algebras"] = json!(algebras.len());
    }
    let proper = proper_correspondence_check(x, guard)?;
    checks.extend(proper.checks);
    summary["proper_systems"] = json!(proper.proper);
    summary["compatible_algebras"] = json!(proper.compatible);
    Ok((checks, summary))
}

/// Entry point for the binary: parse, run, print, and return the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&cli) {
        Ok(report) => {
            let text = if cli.pretty { report.to_text() } else { report.to_json() };
            print!("{text}");
            report.exit_code()
        }
        Err(e) => {
            eprintln!("factoriad {}: {e}", cli.command.name());
            error_exit_code(&e)
        }
    }
}
