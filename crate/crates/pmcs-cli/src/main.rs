//! pmcs: exact principal minors, cycle-sums, coordinate transforms,
//! canonical families, and realizability decisions with verified witnesses.
//!
//! Matrices and vectors arrive as JSON: inline when the argument starts
//! with '[' or '{', from stdin when it is "-", from a file otherwise.
//! Output is one compact JSON document on stdout. Exit codes: 0 success
//! (YES), 1 domain failure (NO, broken symmetry, failed verification),
//! 2 usage or parse error, 3 internal error.

mod checks;
mod json;

use std::error::Error;
use std::fs;
use std::io::Read;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{Map, Value};

use pmcs_core::coordinates::{c_from_d_subset, c_from_d_sym, d_from_c_subset, d_from_c_sym};
use pmcs_core::families::{
    family_coordinates, family_cycle_sums, family_matrix, FamilyError, FamilyKind, FamilySpec,
};
use pmcs_core::matrix::{symmetrize, CoordKind, SubsetVector, SymVector};
use pmcs_core::relations::{generators, MatrixClass, RelationSet};
use pmcs_core::scalar::Scalar;
use pmcs_core::spmap::{
    decide_with_tol, witness_with_tol, Decision, Witness, WitnessError, WitnessMode, DEFAULT_TOL,
};

#[derive(Parser)]
#[command(
    name = "pmcs",
    version,
    about = "Exact principal minors, cycle-sums, and realizability of symmetrized coordinates"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Principal minors of a square matrix, one value per index subset
    Minors {
        /// Matrix JSON: inline, a file path, or "-" for stdin
        input: String,
        /// Collapse to one value per size; fails if subsets disagree
        #[arg(long)]
        symmetrized: bool,
    },
    /// Cycle-sums of a square matrix, one value per index subset
    Cyclesums {
        /// Matrix JSON: inline, a file path, or "-" for stdin
        input: String,
        /// Collapse to one value per size; fails if subsets disagree
        #[arg(long)]
        symmetrized: bool,
    },
    /// Convert between cycle-sum and minor coordinates
    Transform {
        #[arg(long, value_enum)]
        dir: Direction,
        #[arg(long, value_enum, default_value = "sym")]
        level: Level,
        /// Vector JSON: bare array at sym level, keyed object at subset level
        input: String,
    },
    /// Emit a canonical family member and its closed-form coordinates
    Family {
        #[arg(long, value_enum)]
        name: FamilyName,
        #[arg(long)]
        n: usize,
        /// Scale parameter (families: ones, skewones, exceptional4, toeplitz)
        #[arg(long)]
        lambda: Option<String>,
        /// Diagonal parameter (families: ones, diagonal)
        #[arg(long)]
        mu: Option<String>,
        /// Ratio parameter, required for toeplitz
        #[arg(long)]
        x: Option<String>,
        /// Corner weight (family: ncycle)
        #[arg(long)]
        w: Option<String>,
        #[arg(long, value_enum, default_value = "both")]
        emit: Emit,
    },
    /// Decide whether a symmetrized vector is realizable in a matrix class
    Decide {
        #[arg(long, value_enum)]
        class: ClassArg,
        /// Coordinate system of the input vector
        #[arg(long, value_enum, default_value = "c")]
        coords: CoordsArg,
        /// Zero threshold for floating input (default 1e-9)
        #[arg(long)]
        tol: Option<f64>,
        /// Vector as a bare JSON array [1, v_1, ..., v_n]
        input: String,
    },
    /// Construct and independently verify a witness matrix
    Witness {
        #[arg(long, value_enum)]
        class: ClassArg,
        #[arg(long, value_enum, default_value = "c")]
        coords: CoordsArg,
        /// Radical handling: try exact square roots first, or float away
        #[arg(long, value_enum, default_value = "exact")]
        mode: ModeArg,
        #[arg(long)]
        tol: Option<f64>,
        /// Vector as a bare JSON array [1, v_1, ..., v_n]
        input: String,
    },
    /// Print the defining polynomials of a class, optionally evaluated
    Relations {
        #[arg(long, value_enum)]
        class: ClassArg,
        #[arg(long)]
        n: usize,
        /// Vector to evaluate every generator on
        #[arg(long)]
        evaluate: Option<String>,
        #[arg(long, value_enum, default_value = "c")]
        coords: CoordsArg,
    },
    /// Run the seeded cross-validation suites
    Selfcheck {
        /// Largest matrix dimension to draw
        #[arg(long, default_value_t = 5)]
        n: usize,
        /// Trials per suite
        #[arg(long, default_value_t = 25)]
        trials: usize,
        #[arg(long, default_value_t = 24029)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Direction {
    /// Cycle-sums to minors
    #[value(name = "c2d")]
    C2d,
    /// Minors to cycle-sums
    #[value(name = "d2c")]
    D2c,
}

#[derive(Clone, Copy, ValueEnum)]
enum Level {
    #[value(name = "subset")]
    Subset,
    #[value(name = "sym")]
    Sym,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyName {
    #[value(name = "ones")]
    Ones,
    #[value(name = "skewones")]
    SkewOnes,
    #[value(name = "exceptional4")]
    Exceptional4,
    #[value(name = "toeplitz")]
    Toeplitz,
    #[value(name = "ncycle")]
    NCycle,
    #[value(name = "diagonal")]
    Diagonal,
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    #[value(name = "both")]
    Both,
    #[value(name = "matrix")]
    Matrix,
    #[value(name = "coords")]
    Coords,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassArg {
    #[value(name = "symmetric")]
    Symmetric,
    #[value(name = "skew")]
    Skew,
    #[value(name = "general")]
    General,
}

impl From<ClassArg> for MatrixClass {
    fn from(c: ClassArg) -> Self {
        match c {
            ClassArg::Symmetric => MatrixClass::Symmetric,
            ClassArg::Skew => MatrixClass::Skew,
            ClassArg::General => MatrixClass::General,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum CoordsArg {
    #[value(name = "c")]
    C,
    #[value(name = "d")]
    D,
}

impl From<CoordsArg> for CoordKind {
    fn from(c: CoordsArg) -> Self {
        match c {
            CoordsArg::C => CoordKind::CycleSums,
            CoordsArg::D => CoordKind::Minors,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    #[value(name = "exact")]
    Exact,
    #[value(name = "approx")]
    Approx,
}

fn main() {
    let cli = Cli::parse();
    let code = match std::panic::catch_unwind(|| run(cli)) {
        Ok(Ok(code)) => code,
        Ok(Err(e)) => {
            eprintln!("error: {e}");
            2
        }
        Err(_) => {
            eprintln!("internal error: unexpected panic");
            3
        }
    };
    std::process::exit(code);
}

fn read_payload(arg: &str) -> Result<String, Box<dyn Error>> {
    if arg == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        Ok(buf)
    } else if arg.trim_start().starts_with(['[', '{']) {
        Ok(arg.to_string())
    } else {
        fs::read_to_string(arg).map_err(|e| format!("cannot read {arg:?}: {e}").into())
    }
}

fn parse_value(arg: &str) -> Result<Value, Box<dyn Error>> {
    let text = read_payload(arg)?;
    serde_json::from_str(&text).map_err(|e| format!("invalid JSON: {e}").into())
}

fn parse_scalar_arg(name: &str, arg: &str) -> Result<Scalar, Box<dyn Error>> {
    let value = if arg.trim_start().starts_with(['[', '{', '"']) {
        serde_json::from_str(arg).map_err(|e| format!("--{name}: invalid JSON: {e}"))?
    } else if let Ok(r) = json::rational_from_str(arg) {
        return Ok(Scalar::from_rational(r));
    } else if let Ok(f) = arg.parse::<f64>() {
        return Ok(Scalar::approx(f, 0.0));
    } else {
        return Err(format!("--{name}: cannot read {arg:?} as a scalar").into());
    };
    json::scalar_from_json(&value).map_err(|e| format!("--{name}: {e}").into())
}

fn emit(value: &Value) {
    println!("{}", serde_json::to_string(value).expect("serializable output"));
}

fn object(fields: Vec<(&str, Value)>) -> Value {
    let mut map = Map::new();
    for (k, v) in fields {
        map.insert(k.into(), v);
    }
    Value::Object(map)
}

fn sym_output(kind: CoordKind, v: &SymVector) -> Value {
    object(vec![
        ("kind", Value::from(json::kind_name(kind))),
        ("level", Value::from("sym")),
        ("values", json::sym_values_to_json(v)),
    ])
}

fn run(cli: Cli) -> Result<i32, Box<dyn Error>> {
    match cli.command {
        Command::Minors { input, symmetrized } => {
            let a = json::matrix_from_json(&parse_value(&input)?)?;
            subset_output(a.principal_minors()?, symmetrized)
        }
        Command::Cyclesums { input, symmetrized } => {
            let a = json::matrix_from_json(&parse_value(&input)?)?;
            subset_output(a.cycle_sums()?, symmetrized)
        }
        Command::Transform { dir, level, input } => {
            let value = parse_value(&input)?;
            let (from, to) = match dir {
                Direction::C2d => (CoordKind::CycleSums, CoordKind::Minors),
                Direction::D2c => (CoordKind::Minors, CoordKind::CycleSums),
            };
            match level {
                Level::Sym => {
                    let v = json::sym_vector_from_json(&value, from)?;
                    let out = match dir {
                        Direction::C2d => d_from_c_sym(&v),
                        Direction::D2c => c_from_d_sym(&v),
                    };
                    emit(&sym_output(to, &out));
                }
                Level::Subset => {
                    let v = json::subset_vector_from_json(&value)?;
                    if v.kind() != from {
                        return Err(format!(
                            "direction expects {} input, vector is tagged {}",
                            json::kind_name(from),
                            json::kind_name(v.kind())
                        )
                        .into());
                    }
                    let out = match dir {
                        Direction::C2d => d_from_c_subset(&v),
                        Direction::D2c => c_from_d_subset(&v),
                    };
                    emit(&json::subset_vector_to_json(&out));
                }
            }
            Ok(0)
        }
        Command::Family {
            name,
            n,
            lambda,
            mu,
            x,
            w,
            emit: what,
        } => family_command(name, n, lambda, mu, x, w, what),
        Command::Decide {
            class,
            coords,
            tol,
            input,
        } => {
            let v = json::sym_vector_from_json(&parse_value(&input)?, CoordKind::from(coords))?;
            let decision =
                decide_with_tol(MatrixClass::from(class), &v, tol.unwrap_or(DEFAULT_TOL))?;
            let verdict = decision.verdict;
            emit(&decision_to_json(&decision));
            Ok(if verdict { 0 } else { 1 })
        }
        Command::Witness {
            class,
            coords,
            mode,
            tol,
            input,
        } => {
            let v = json::sym_vector_from_json(&parse_value(&input)?, CoordKind::from(coords))?;
            let mode = match mode {
                ModeArg::Exact => WitnessMode::ExactPreferred,
                ModeArg::Approx => WitnessMode::ApproxOk,
            };
            witness_command(MatrixClass::from(class), &v, mode, tol.unwrap_or(DEFAULT_TOL))
        }
        Command::Relations {
            class,
            n,
            evaluate,
            coords,
        } => {
            let sets = generators(MatrixClass::from(class), n)?;
            let vector = match evaluate {
                Some(arg) => Some(json::sym_vector_from_json(
                    &parse_value(&arg)?,
                    CoordKind::from(coords),
                )?),
                None => None,
            };
            let rendered: Result<Vec<Value>, Box<dyn Error>> = sets
                .iter()
                .map(|set| relation_set_to_json(set, vector.as_ref()))
                .collect();
            emit(&object(vec![
                ("class", Value::from(MatrixClass::from(class).label())),
                ("n", Value::from(n)),
                ("sets", Value::from(rendered?)),
            ]));
            Ok(0)
        }
        Command::Selfcheck { n, trials, seed } => {
            let results = checks::run_all(n, trials, seed);
            let all_passed = results.iter().all(|r| r.passed());
            let suites: Vec<Value> = results
                .iter()
                .map(|r| {
                    object(vec![
                        ("name", Value::from(r.name)),
                        ("trials", Value::from(r.trials)),
                        ("passed", Value::from(r.passed())),
                        (
                            "failures",
                            Value::from(
                                r.failures.iter().map(|f| Value::from(f.as_str())).collect::<Vec<_>>(),
                            ),
                        ),
                    ])
                })
                .collect();
            emit(&object(vec![
                ("seed", Value::from(seed)),
                ("passed", Value::from(all_passed)),
                ("suites", Value::from(suites)),
            ]));
            Ok(if all_passed { 0 } else { 1 })
        }
    }
}

fn subset_output(v: SubsetVector, symmetrized: bool) -> Result<i32, Box<dyn Error>> {
    if !symmetrized {
        emit(&json::subset_vector_to_json(&v));
        return Ok(0);
    }
    match symmetrize(&v) {
        Ok(sym) => {
            emit(&sym_output(v.kind(), &sym));
            Ok(0)
        }
        Err(violation) => {
            eprintln!("not subset-symmetric: {violation}");
            Ok(1)
        }
    }
}

fn family_command(
    name: FamilyName,
    n: usize,
    lambda: Option<String>,
    mu: Option<String>,
    x: Option<String>,
    w: Option<String>,
    what: Emit,
) -> Result<i32, Box<dyn Error>> {
    let scalar_or = |name: &str, arg: &Option<String>, default: i64| match arg {
        Some(s) => parse_scalar_arg(name, s),
        None => Ok(Scalar::from_integer(default)),
    };
    let lambda = scalar_or("lambda", &lambda, 1)?;
    let mu = scalar_or("mu", &mu, 0)?;
    let w = scalar_or("w", &w, 1)?;
    let kind = match name {
        FamilyName::Ones => FamilyKind::Ones { lambda, mu },
        FamilyName::SkewOnes => FamilyKind::SkewOnes { lambda },
        FamilyName::Exceptional4 => FamilyKind::Exceptional4 { lambda },
        FamilyName::Toeplitz => {
            let x = x.ok_or("toeplitz needs --x")?;
            FamilyKind::Toeplitz {
                lambda,
                x: parse_scalar_arg("x", &x)?,
            }
        }
        FamilyName::NCycle => FamilyKind::NCycle { w },
        FamilyName::Diagonal => FamilyKind::Diagonal { mu },
    };
    let spec = FamilySpec::new(n, kind)?;
    let mut fields = vec![
        ("family", family_to_json(&spec)),
    ];
    if matches!(what, Emit::Both | Emit::Matrix) {
        fields.push(("matrix", json::matrix_to_json(&family_matrix(&spec))));
    }
    if matches!(what, Emit::Both | Emit::Coords) {
        match family_coordinates(&spec) {
            Ok((d, c)) => {
                fields.push(("d", json::sym_values_to_json(&d)));
                fields.push(("c", json::sym_values_to_json(&c)));
            }
            Err(FamilyError::ToeplitzPole) => {
                // minors blow up at x² = −1; the cycle-sums stay finite
                fields.push(("d", Value::Null));
                fields.push(("c", json::sym_values_to_json(&family_cycle_sums(&spec))));
            }
            Err(e) => return Err(e.into()),
        }
    }
    emit(&object(fields));
    Ok(0)
}

fn family_to_json(spec: &FamilySpec) -> Value {
    let mut fields = vec![
        ("name", Value::from(spec.kind().name())),
        ("n", Value::from(spec.n())),
    ];
    match spec.kind() {
        FamilyKind::Ones { lambda, mu } => {
            fields.push(("lambda", json::scalar_to_json(lambda)));
            fields.push(("mu", json::scalar_to_json(mu)));
        }
        FamilyKind::SkewOnes { lambda } | FamilyKind::Exceptional4 { lambda } => {
            fields.push(("lambda", json::scalar_to_json(lambda)));
        }
        FamilyKind::Toeplitz { lambda, x } => {
            fields.push(("lambda", json::scalar_to_json(lambda)));
            fields.push(("x", json::scalar_to_json(x)));
        }
        FamilyKind::NCycle { w } => fields.push(("w", json::scalar_to_json(w))),
        FamilyKind::Diagonal { mu } => fields.push(("mu", json::scalar_to_json(mu))),
    }
    object(fields)
}

fn decision_to_json(decision: &Decision) -> Value {
    let branches: Vec<Value> = decision
        .branches
        .iter()
        .map(|b| {
            let mut fields = vec![
                ("branch", Value::from(b.branch)),
                ("satisfied", Value::from(b.satisfied)),
            ];
            if let Some((poly, residual)) = &b.violation {
                fields.push((
                    "violation",
                    object(vec![
                        ("polynomial", Value::from(poly.as_str())),
                        ("residual", json::scalar_to_json(residual)),
                    ]),
                ));
            }
            object(fields)
        })
        .collect();
    let mut fields = vec![
        ("class", Value::from(decision.class.label())),
        ("n", Value::from(decision.n)),
        ("input_kind", Value::from(json::kind_name(decision.input_kind))),
        ("c", json::sym_values_to_json(&decision.c)),
        ("exact", Value::from(decision.exact)),
        ("verdict", Value::from(if decision.verdict { "YES" } else { "NO" })),
        ("branches", Value::from(branches)),
    ];
    if let Some(tol) = decision.tol {
        fields.push(("tol", Value::from(tol)));
    }
    object(fields)
}

fn witness_to_json(w: &Witness) -> Value {
    let conjugation = match &w.construction.conjugation {
        None => Value::Null,
        Some(g) => object(vec![
            (
                "perm",
                Value::from(g.perm().iter().map(|&p| Value::from(p)).collect::<Vec<_>>()),
            ),
            (
                "diag",
                Value::from(g.diag().iter().map(json::scalar_to_json).collect::<Vec<_>>()),
            ),
        ]),
    };
    object(vec![
        ("matrix", json::matrix_to_json(&w.matrix)),
        (
            "construction",
            object(vec![
                ("family", family_to_json(&w.construction.family)),
                ("shift", json::scalar_to_json(&w.construction.shift)),
                ("conjugation", conjugation),
            ]),
        ),
        (
            "residuals",
            Value::from(w.residuals.iter().map(|&r| Value::from(r)).collect::<Vec<_>>()),
        ),
        ("max_normalized_residual", Value::from(w.max_normalized_residual)),
        ("exact", Value::from(w.exact)),
    ])
}

fn witness_command(
    class: MatrixClass,
    v: &SymVector,
    mode: WitnessMode,
    tol: f64,
) -> Result<i32, Box<dyn Error>> {
    match witness_with_tol(class, v, mode, tol) {
        Ok(w) => {
            emit(&witness_to_json(&w));
            Ok(0)
        }
        Err(WitnessError::NotRealizable(decision)) => {
            emit(&object(vec![
                ("error", Value::from("not realizable")),
                ("decision", decision_to_json(&decision)),
            ]));
            Ok(1)
        }
        Err(e @ WitnessError::TangentialDegenerate { .. }) => {
            emit(&object(vec![("error", Value::from(e.to_string()))]));
            Ok(1)
        }
        Err(WitnessError::VerificationFailed(report)) => {
            emit(&object(vec![
                ("error", Value::from("verification failed")),
                ("max_normalized_residual", Value::from(report.max_normalized)),
            ]));
            Ok(1)
        }
        Err(e @ (WitnessError::DimensionCap { .. } | WitnessError::Unsupported(_))) => {
            Err(e.to_string().into())
        }
        Err(e) => {
            eprintln!("internal error: {e}");
            Ok(3)
        }
    }
}

fn relation_set_to_json(
    set: &RelationSet,
    vector: Option<&SymVector>,
) -> Result<Value, Box<dyn Error>> {
    let generators: Vec<Value> = set
        .polys()
        .iter()
        .map(|p| Value::from(p.to_string()))
        .collect();
    let mut fields = vec![
        ("branch", Value::from(set.branch())),
        (
            "variables",
            Value::from(match set.var_kind() {
                CoordKind::Minors => "d",
                CoordKind::CycleSums => "c",
            }),
        ),
        ("generators", Value::from(generators)),
    ];
    if let Some(v) = vector {
        let scaled = set.evaluate_scaled(v)?;
        let exact = v.is_exact();
        let vanishes = scaled.iter().all(|(residual, scale)| {
            if exact {
                residual.is_zero()
            } else {
                residual.magnitude() <= DEFAULT_TOL * scale.max(1.0)
            }
        });
        fields.push((
            "residuals",
            Value::from(
                scaled
                    .iter()
                    .map(|(residual, _)| json::scalar_to_json(residual))
                    .collect::<Vec<_>>(),
            ),
        ));
        fields.push(("vanishes", Value::from(vanishes)));
    }
    Ok(object(fields))
}
