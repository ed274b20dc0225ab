//! `triassoc`: exact computations on triassociative algebras given by
//! structure constants in JSON files.

mod report;

use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use triassoc::catalog;
use triassoc::cohomology::h2;
use triassoc::extensions::{cover, z_star};
use triassoc::io::{emit, parse, AlgebraFile};
use triassoc::sequences::{
    sample_central_ideals, stallings_check, theorem_equivalence, tra_image_theorem, verify_five_term, verify_inf_delta,
};
use triassoc::trialgebra::bound_table;
use triassoc::{Field, Scalar, Subspace, TriAlgebra};

use report::{basis, numbers, vector, Report};

#[derive(Parser)]
#[command(name = "triassoc", version, about = "Cohomology, multipliers and covers of triassociative algebras")]
struct Cli {
    /// Emit the report as a JSON object instead of `key = value` lines.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the eleven defining identities.
    Validate { path: PathBuf },
    /// dim L, dim L′, dim Z(L), dim L′∩Z(L) and dim Hom(L, F).
    Invariants { path: PathBuf },
    /// Second cohomology with trivial coefficients in F^k.
    H2 {
        path: PathBuf,
        #[arg(short, long, default_value_t = 1)]
        k: usize,
        /// Also list representative cocycles of a basis of H².
        #[arg(long)]
        reps: bool,
    },
    /// Dimension of the multiplier and of any cover.
    Multiplier { path: PathBuf },
    /// Write a cover, with its kernel, to `out` (standard output if omitted).
    Cover { path: PathBuf, out: Option<PathBuf> },
    /// Basis of Z*(L).
    Zstar { path: PathBuf },
    /// Whether Z(L) = Z*(L).
    Unicentral { path: PathBuf },
    /// Run the exact-sequence and theorem checks for central ideals.
    Verify(VerifyArgs),
    /// Generate an algebra file.
    Gen(GenArgs),
    /// Dimension bounds for the five algebra classes.
    Table {
        #[arg(short = 'n', default_value_t = 10)]
        n_max: u64,
    },
}

#[derive(Args)]
#[command(group(ArgGroup::new("ideal").required(true).args(["z", "all_central"])))]
struct VerifyArgs {
    path: PathBuf,
    /// Generators of the central ideal, separated by `;`. Each is a basis
    /// vector `eN` (1-based) or a comma-separated coordinate list.
    #[arg(long)]
    z: Option<String>,
    /// Sweep 0, Z(L), L′∩Z(L) and random lines in Z(L).
    #[arg(long)]
    all_central: bool,
    /// Number of random lines for `--all-central`.
    #[arg(long, default_value_t = 2)]
    lines: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum GenKind {
    Abelian,
    CoverAbelian,
    RandomExt,
}

#[derive(Args)]
struct GenArgs {
    kind: GenKind,
    #[arg(short = 'n', default_value_t = 1)]
    n: usize,
    /// Base for `random-ext`: a file path or a catalog name such as `abelian2`.
    #[arg(long, default_value = "abelian2")]
    base: String,
    #[arg(short = 'k', default_value_t = 1)]
    k: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// `Q` or `Fp:<prime>`.
    #[arg(long, default_value = "Q")]
    field: String,
    #[arg(short, long)]
    out: Option<PathBuf>,
}

enum Failure {
    /// Bad input: unreadable or malformed file, bad flags, unmet precondition.
    Input(String),
    /// The command ran and a check came out false.
    Check,
}

impl From<triassoc::Error> for Failure {
    fn from(e: triassoc::Error) -> Failure {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn read_text(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| Failure::Input(format!("stdin: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<AlgebraFile, Failure> {
    let text = read_text(path)?;
    parse(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_algebra(path: &Path) -> Result<TriAlgebra, Failure> {
    Ok(load(path)?.algebra)
}

fn write_out(out: Option<&Path>, text: &str) -> Outcome {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Input(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn validate(path: &Path, json: bool) -> Outcome {
    let file = load(path)?;
    let a = &file.algebra;
    let r = a.validate_axioms();
    let mut rep = Report::default();
    rep.put("dim", a.dim());
    rep.put("field", a.field().descriptor());
    rep.put("violations", r.violations.len());
    rep.put("violated_axioms", numbers(&r.violated_axioms()));
    for v in r.violations.iter().take(20) {
        let (i, j, l) = v.triple;
        rep.put(format!("violation.axiom{}.({i},{j},{l})", v.axiom), vector(&v.defect));
    }
    if r.passed() {
        if let Some(m) = &file.kernel {
            let b = a.check_dim_bounds(Some(m))?;
            let pair = b.defining_pair.expect("kernel given");
            rep.put("kernel.dim", pair.kernel_dim);
            rep.put("kernel.defining_pair", pair.is_defining_pair);
            rep.put("kernel.dim_bound", pair.dim_bound);
        }
    }
    rep.put("result", if r.passed() { "pass" } else { "fail" });
    print!("{}", rep.render(json));
    if r.passed() {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn invariants(path: &Path, json: bool) -> Outcome {
    let a = load_algebra(path)?;
    let derived = a.derived().into_space();
    let center = a.center().into_space();
    let mut rep = Report::default();
    rep.put("dim", a.dim());
    rep.put("derived_dim", derived.dim());
    rep.put("center_dim", center.dim());
    rep.put("derived_center_dim", derived.intersection(&center)?.dim());
    rep.put("hom_dim", a.hom_to_field(1).dim());
    print!("{}", rep.render(json));
    Ok(())
}

fn cohomology(path: &Path, k: usize, reps: bool, json: bool) -> Outcome {
    let a = load_algebra(path)?;
    let h = h2(&a, k)?;
    let mut rep = Report::default();
    rep.put("coeff_dim", k);
    rep.put("z2_dim", h.z2.dim());
    rep.put("b2_dim", h.b2.dim());
    rep.put("h2_dim", h.h2_dim);
    if reps {
        for (t, f) in h.h2_reps.iter().enumerate() {
            rep.put(format!("rep.{t}"), vector(f.as_vector()));
        }
    }
    print!("{}", rep.render(json));
    Ok(())
}

fn multiplier(path: &Path, json: bool) -> Outcome {
    let a = load_algebra(path)?;
    let h = h2(&a, 1)?;
    let mut rep = Report::default();
    rep.put("multiplier_dim", h.h2_dim);
    rep.put("cover_dim", a.dim() + h.h2_dim);
    print!("{}", rep.render(json));
    Ok(())
}

fn write_cover(path: &Path, out: Option<&Path>, json: bool) -> Outcome {
    let a = load_algebra(path)?;
    let c = cover(&a)?;
    let k = c.extension.total();
    let name = format!("cover of {}", a.name().unwrap_or("input"));
    let text = emit(&k.clone().with_name(name), Some(c.extension.kernel_space()));
    write_out(out, &text)?;
    if out.is_some() {
        let mut rep = Report::default();
        rep.put("dim", k.dim());
        rep.put("multiplier_dim", c.multiplier_dim);
        rep.put("kernel", basis(c.extension.kernel_space()));
        print!("{}", rep.render(json));
    }
    Ok(())
}

fn zstar(path: &Path, json: bool) -> Outcome {
    let a = load_algebra(path)?;
    let zs = z_star(&a)?;
    let mut rep = Report::default();
    rep.put("dim", zs.dim());
    rep.put("basis", basis(zs.space()));
    rep.put("center_dim", a.center().dim());
    print!("{}", rep.render(json));
    Ok(())
}

fn unicentral(path: &Path, json: bool) -> Outcome {
    let a = load_algebra(path)?;
    let zs = z_star(&a)?.into_space();
    let center = a.center().into_space();
    let mut rep = Report::default();
    rep.put("z_star_dim", zs.dim());
    rep.put("center_dim", center.dim());
    rep.put("unicentral", zs == center);
    print!("{}", rep.render(json));
    Ok(())
}

/// Parses `--z`, checking each generator for centrality on its own so that
/// the error names it.
fn parse_z(a: &TriAlgebra, spec: &str) -> Result<Subspace, Failure> {
    let (field, n) = (a.field(), a.dim());
    let mut gens = Vec::new();
    for item in spec.split(';').map(str::trim).filter(|s| !s.is_empty()) {
        let v: Vec<Scalar> = if let Some(idx) = item.strip_prefix('e') {
            let i: usize = idx.parse().map_err(|_| Failure::Input(format!("--z: bad basis vector {item:?}")))?;
            if i == 0 || i > n {
                return Err(Failure::Input(format!("--z: {item} out of range for dim {n}")));
            }
            (0..n).map(|c| if c + 1 == i { field.one() } else { field.zero() }).collect()
        } else {
            let v = item
                .split(',')
                .map(|s| field.parse_scalar(s.trim()))
                .collect::<triassoc::Result<Vec<_>>>()
                .map_err(|e| Failure::Input(format!("--z: {item:?}: {e}")))?;
            if v.len() != n {
                return Err(Failure::Input(format!("--z: {item:?} has {} coordinates, expected {n}", v.len())));
            }
            v
        };
        if !a.is_central(&Subspace::span(field, n, [v.clone()])?)? {
            return Err(Failure::Input(format!("--z: generator {item} is not central")));
        }
        gens.push(v);
    }
    Ok(Subspace::span(field, n, gens)?)
}

fn verify_one(a: &TriAlgebra, z: &Subspace, key: &str, rep: &mut Report) -> Result<bool, Failure> {
    let five = verify_five_term(a, z, 1)?;
    let inf = verify_inf_delta(a, z)?;
    let tra = tra_image_theorem(a, z)?;
    let eq = theorem_equivalence(a, z)?;
    let st = stallings_check(a, z)?;
    rep.put(format!("{key}.basis"), basis(z));
    rep.put(format!("{key}.five_term.dims"), numbers(&five.dims));
    rep.put(format!("{key}.five_term.ranks"), numbers(&five.ranks));
    rep.put(format!("{key}.five_term.exact"), five.passed());
    rep.put(format!("{key}.inf_delta.ranks"), numbers(&[inf.inf2_rank, inf.delta_rank]));
    rep.put(format!("{key}.inf_delta.exact"), inf.passed());
    rep.put(format!("{key}.tra_image.dims"), numbers(&[tra.image_dim, tra.derived_center_dim]));
    rep.put(format!("{key}.tra_image.holds"), tra.holds());
    rep.put(
        format!("{key}.equivalence.conditions"),
        Value::Array(eq.conditions().iter().map(|&b| Value::Bool(b)).collect()),
    );
    rep.put(format!("{key}.equivalence.agree"), eq.agree());
    rep.put(format!("{key}.stallings.dims"), numbers(&st.dims));
    rep.put(format!("{key}.stallings.ranks"), numbers(&st.ranks));
    rep.put(format!("{key}.stallings.exact"), st.passed());
    Ok(five.passed() && inf.passed() && tra.holds() && eq.agree() && st.passed())
}

fn verify(args: &VerifyArgs, json: bool) -> Outcome {
    let a = load_algebra(&args.path)?;
    a.validate_axioms().passed().then_some(()).ok_or_else(|| {
        Failure::Input(format!("{}: algebra fails the defining identities", args.path.display()))
    })?;
    let ideals = match &args.z {
        Some(spec) => vec![parse_z(&a, spec)?],
        None => {
            let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
            sample_central_ideals(&a, args.lines, &mut rng)?
        }
    };
    let mut rep = Report::default();
    rep.put("ideals", ideals.len());
    let mut ok = true;
    for (t, z) in ideals.iter().enumerate() {
        ok &= verify_one(&a, z, &format!("ideal.{t}"), &mut rep)?;
    }
    rep.put("result", if ok { "pass" } else { "fail" });
    print!("{}", rep.render(json));
    if ok {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn gen(args: &GenArgs) -> Outcome {
    let field = Field::from_descriptor(&args.field)?;
    let a = match args.kind {
        GenKind::Abelian => catalog::abelian(field, args.n),
        GenKind::CoverAbelian => catalog::cover_abelian(field, args.n),
        GenKind::RandomExt => {
            let base = if Path::new(&args.base).exists() || args.base == "-" {
                let b = load_algebra(Path::new(&args.base))?;
                if b.field() != field {
                    return Err(Failure::Input(format!(
                        "--base is over {}, --field is {}",
                        b.field().descriptor(),
                        field.descriptor()
                    )));
                }
                b
            } else {
                catalog::by_name(field, &args.base)?
            };
            let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
            let name = format!("{}+{}@{}", base.name().unwrap_or("base"), args.k, args.seed);
            catalog::random_extension(&base, args.k, &mut rng)?.with_name(name)
        }
    };
    write_out(args.out.as_deref(), &emit(&a, None))
}

fn table(n_max: u64, json: bool) -> Outcome {
    let mut rep = Report::default();
    for row in bound_table(n_max) {
        rep.put(format!("{}.{}", row.class, row.n), numbers(&[row.derived_bound as usize, row.cover_bound as usize]));
    }
    print!("{}", rep.render(json));
    Ok(())
}

fn run(cli: Cli) -> Outcome {
    let json = cli.json;
    match cli.command {
        Command::Validate { path } => validate(&path, json),
        Command::Invariants { path } => invariants(&path, json),
        Command::H2 { path, k, reps } => cohomology(&path, k, reps, json),
        Command::Multiplier { path } => multiplier(&path, json),
        Command::Cover { path, out } => write_cover(&path, out.as_deref(), json),
        Command::Zstar { path } => zstar(&path, json),
        Command::Unicentral { path } => unicentral(&path, json),
        Command::Verify(args) => verify(&args, json),
        Command::Gen(args) => gen(&args),
        Command::Table { n_max } => table(n_max, json),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
