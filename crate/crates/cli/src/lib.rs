//! The `lie2` command: parses fixture files, runs library checks and
//! prints a report.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 when the
//! arguments or an input file cannot be interpreted.

use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use lie2::braid::{build_b_vect, build_y, check_tetra_hypotheses, check_ybe, check_zamolodchikov};
use lie2::cohomology::{
    build_g_hbar, classify, coboundary, cohomology_dim, is_cocycle, killing_form, Cochain, LieAlgebra, Representation,
};
use lie2::exactlin::parse_rational;
use lie2::json::{
    cochain_values_to_json, matrix_to_value, representation_from_json, representation_to_json, to_pretty_string,
    JsonFormat,
};
use lie2::lie2::{
    check_crossed_module, check_jacobiator_identity_categorical, check_lie2_algebra, from_crossed_module,
    DifferentialCrossedModule, SemistrictLie2Algebra,
};
use lie2::linfty::{check_axioms, check_hom, check_two_hom, LInfHom, LInfTwoHom, TwoTermLInfinity};
use lie2::report::CheckResult;
use lie2::twoterm::{skeletalize_complex, TwoTermComplex};
use lie2::VerificationReport;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "lie2", version, about = "Exact checks for Lie 2-algebras over the rationals")]
struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check conditions (a)-(i) of a 2-term L-infinity algebra.
    CheckLinfty { file: PathBuf },
    /// Check a homomorphism of 2-term L-infinity algebras.
    CheckHom { file: PathBuf },
    /// Check a 2-homomorphism.
    #[command(name = "check-2hom")]
    Check2hom { file: PathBuf },
    /// Check the categorical Lie 2-algebra axioms and compare the octagon with condition (i).
    CheckLie2 { file: PathBuf },
    /// Check a differential crossed module and its strict Lie 2-algebra.
    CheckDcm { file: PathBuf },
    /// Dimension of a Lie algebra cohomology group.
    Cohomology {
        #[arg(long)]
        degree: usize,
        gfile: PathBuf,
        /// Representation file; defaults to the trivial one-dimensional module.
        #[arg(long)]
        rep: Option<PathBuf>,
    },
    /// Whether a cochain is closed.
    IsCocycle { cfile: PathBuf },
    /// The coboundary of a cochain.
    Coboundary {
        cfile: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Write the skeletal Lie 2-algebra with l3 = hbar times the Killing triple product.
    BuildGhbar {
        #[arg(long, allow_hyphen_values = true)]
        hbar: String,
        gfile: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// The Killing form of a Lie algebra.
    Killing { gfile: PathBuf },
    /// Check the Yang-Baxter equation of the braiding built from a bracket.
    Ybe { gfile: PathBuf },
    /// Check the tetrahedron equation of a Lie 2-algebra.
    Tetrahedron { file: PathBuf },
    /// Write a skeletal model of a 2-term L-infinity algebra or complex.
    Skeletalize {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// The classifying data (g, V, rho, [l3]) of a Lie 2-algebra.
    Classify { file: PathBuf },
}

/// What a single invocation printed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: Vec<String>,
    pub passed: bool,
    pub checks: Vec<CheckResult>,
    /// Computed data such as dimensions or matrices.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<Value>,
    pub elapsed_ms: u64,
}

/// Exit code and rendered text of one invocation.
#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct InputError(String);

impl From<lie2::Error> for InputError {
    fn from(e: lie2::Error) -> Self {
        InputError(e.to_string())
    }
}

type Run = Result<(VerificationReport, Option<Value>), InputError>;

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_PASS };
            let text = e.render().to_string();
            return if code == EXIT_PASS {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let start = Instant::now();
    let result = dispatch(&cli.command);
    let elapsed_ms = start.elapsed().as_millis() as u64;
    match result {
        Err(InputError(msg)) => Outcome {
            code: EXIT_INPUT,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
        Ok((report, output)) => {
            let report = Report {
                command: argv.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect(),
                passed: report.passed(),
                checks: report.checks,
                output,
                elapsed_ms,
            };
            let stdout = if cli.json {
                serde_json::to_string_pretty(&report).expect("serializable") + "\n"
            } else {
                render(&report)
            };
            let code = if report.passed { EXIT_PASS } else { EXIT_FAIL };
            Outcome {
                code,
                stdout,
                stderr: String::new(),
            }
        }
    }
}

fn render(r: &Report) -> String {
    let mut s = String::new();
    for c in &r.checks {
        let status = if c.passed { "PASS" } else { "FAIL" };
        s.push_str(&format!("{status} {} ({} checked", c.name, c.checked));
        if c.violations > 0 {
            s.push_str(&format!(", {} violations", c.violations));
        }
        s.push(')');
        if let Some(v) = &c.first_violation {
            let res: Vec<String> = v.residual.iter().map(|q| q.to_string()).collect();
            s.push_str(&format!(" first at {:?} residual [{}]", v.tuple, res.join(", ")));
        }
        if let Some(n) = &c.note {
            s.push_str(&format!(": {n}"));
        }
        s.push('\n');
    }
    if let Some(o) = &r.output {
        s.push_str(&to_pretty_string(o));
    }
    s.push_str(&format!(
        "{} in {} ms\n",
        if r.passed { "passed" } else { "FAILED" },
        r.elapsed_ms
    ));
    s
}

fn read_value(path: &Path) -> Result<Value, InputError> {
    let text = std::fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| InputError(format!("{}: invalid JSON: {e}", path.display())))
}

fn read<T: JsonFormat>(path: &Path) -> Result<T, InputError> {
    T::from_json(&read_value(path)?).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn write(path: &Path, v: &Value) -> Result<(), InputError> {
    let text = to_pretty_string(v);
    std::fs::write(path, text).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn dispatch(cmd: &Command) -> Run {
    match cmd {
        Command::CheckLinfty { file } => Ok((check_axioms(&read::<TwoTermLInfinity>(file)?), None)),
        Command::CheckHom { file } => Ok((check_hom(&read::<LInfHom>(file)?)?, None)),
        Command::Check2hom { file } => Ok((check_two_hom(&read::<LInfTwoHom>(file)?)?, None)),
        Command::CheckLie2 { file } => Ok((check_lie2(read(file)?), None)),
        Command::CheckDcm { file } => check_dcm(&read(file)?),
        Command::Cohomology { degree, gfile, rep } => {
            let g: LieAlgebra = read(gfile)?;
            let rep = match rep {
                Some(p) => representation_from_json(&g, &read_value(p)?, "")
                    .map_err(|e| InputError(format!("{}: {e}", p.display())))?,
                None => Representation::trivial(&g, 1),
            };
            let mut report = VerificationReport::new();
            report.absorb("algebra", g.check());
            report.absorb("rep", rep.check());
            let dim = cohomology_dim(&Arc::new(rep), *degree);
            Ok((report, Some(json!({"degree": degree, "dim": dim}))))
        }
        Command::IsCocycle { cfile } => {
            let w: Cochain = read(cfile)?;
            let closed = is_cocycle(&w);
            let note = if closed {
                "coboundary is zero"
            } else {
                "coboundary is nonzero"
            };
            Ok((
                [CheckResult::verdict("cocycle", closed, note)].into_iter().collect(),
                None,
            ))
        }
        Command::Coboundary { cfile, output } => {
            let dw = coboundary(&read::<Cochain>(cfile)?);
            if let Some(p) = output {
                write(p, &dw.to_json())?;
            }
            Ok((VerificationReport::new(), Some(cochain_values_to_json(&dw))))
        }
        Command::BuildGhbar { hbar, gfile, output } => {
            let q = parse_rational(hbar).map_err(|e| InputError(format!("--hbar: {e}")))?;
            let g: LieAlgebra = read(gfile)?;
            let mut report = VerificationReport::new();
            report.absorb("algebra", g.check());
            let l = build_g_hbar(&g, &q);
            report.absorb("axioms", check_axioms(l.data()));
            write(output, &l.data().to_json())?;
            Ok((report, None))
        }
        Command::Killing { gfile } => {
            let g: LieAlgebra = read(gfile)?;
            Ok((g.check(), Some(matrix_to_value(&killing_form(&g)))))
        }
        Command::Ybe { gfile } => {
            let g: LieAlgebra = read(gfile)?;
            let op = build_b_vect(&g)?;
            let mut report = check_ybe(&op);
            report.push(g.jacobi_sweep());
            Ok((report, None))
        }
        Command::Tetrahedron { file } => {
            let v: TwoTermLInfinity = read(file)?;
            let mut report = VerificationReport::new();
            report.absorb("axioms", check_axioms(&v));
            let l = Arc::new(SemistrictLie2Algebra::from_linfty(v));
            let ty = build_y(&l)?;
            report.absorb("hypotheses", check_tetra_hypotheses(&ty)?);
            report.absorb("", check_zamolodchikov(&ty)?);
            Ok((report, None))
        }
        Command::Skeletalize { file, output } => skeletalize(&read_value(file)?, file, output),
        Command::Classify { file } => {
            let v: TwoTermLInfinity = read(file)?;
            let axioms = check_axioms(&v);
            if !axioms.passed() {
                return Ok((axioms, None));
            }
            let q = classify(&SemistrictLie2Algebra::from_linfty(v))?;
            let mut report = axioms;
            report.push(CheckResult::verdict(
                "cocycle",
                is_cocycle(&q.cocycle),
                "l3 of the skeletal model",
            ));
            let out = json!({
                "algebra": q.algebra.to_json(),
                "rep": representation_to_json(&q.rep),
                "cocycle": cochain_values_to_json(&q.cocycle),
                "strict": q.skeletal.is_strict(),
            });
            Ok((report, Some(out)))
        }
    }
}

/// Condition (i), the octagon and the remaining categorical checks, plus a
/// verdict on whether (i) and the octagon agree. They are only compared
/// when (d) holds, since the octagon is built from the bracket functor.
fn check_lie2(v: TwoTermLInfinity) -> VerificationReport {
    let axioms = check_axioms(&v);
    let l = SemistrictLie2Algebra::from_linfty(v);
    let octagon = check_jacobiator_identity_categorical(&l);
    let i_ok = axioms.passed_check("i");
    let oct_ok = octagon.passed();
    let agree = if axioms.passed_check("d") {
        CheckResult::verdict(
            "octagon_agrees_with_i",
            i_ok == oct_ok,
            format!("condition i {}, octagon {}", word(i_ok), word(oct_ok)),
        )
    } else {
        CheckResult::pass("octagon_agrees_with_i", "not compared: condition d fails")
    };
    let mut report = VerificationReport::new();
    report.absorb("axioms", axioms);
    report.absorb("", octagon);
    report.absorb("categorical", check_lie2_algebra(&l));
    report.push(agree);
    report
}

fn word(b: bool) -> &'static str {
    if b {
        "passes"
    } else {
        "fails"
    }
}

fn check_dcm(m: &DifferentialCrossedModule) -> Run {
    let mut report = VerificationReport::new();
    report.absorb("dcm", check_crossed_module(m)?);
    let l = from_crossed_module(m)?;
    report.absorb("image", check_axioms(l.data()));
    Ok((report, None))
}

/// Writes the skeletal model: for an L-infinity file the transferred
/// structure, for a bare complex the complex `ker d ⊕ coker d` with zero
/// differential.
fn skeletalize(v: &Value, file: &Path, output: &Path) -> Run {
    let located = |e: lie2::Error| InputError(format!("{}: {e}", file.display()));
    if v.get("l2_00").is_none() {
        let c = TwoTermComplex::from_json(v).map_err(located)?;
        let sk = skeletalize_complex(&c);
        write(output, &sk.skeletal.to_json())?;
        let out = json!({"dim0": sk.skeletal.dim0(), "dim1": sk.skeletal.dim1()});
        return Ok((VerificationReport::new(), Some(out)));
    }
    let l = TwoTermLInfinity::from_json(v).map_err(located)?;
    let axioms = check_axioms(&l);
    if !axioms.passed() {
        return Ok((axioms, None));
    }
    let q = classify(&SemistrictLie2Algebra::from_linfty(l))?;
    let mut report = axioms;
    report.absorb("skeletal", check_axioms(&q.skeletal));
    report.absorb("equivalence", check_hom(&q.include)?);
    write(output, &q.skeletal.to_json())?;
    let out = json!({"dim0": q.skeletal.dim0(), "dim1": q.skeletal.dim1()});
    Ok((report, Some(out)))
}
