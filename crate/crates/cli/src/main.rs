mod expr;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use eislat::classify::{
    dclass_profile, flag_of, isotropic_line_type, perpendicular_decompositions, rank2_type, relative_position,
    span_type_with_zo, theta_decompositions, three_vectors, IsotropicType,
};
use eislat::kodaira::{enumerate_configurations, kodaira_type, JClass};
use eislat::lattice::{BigLambda, Coords, HermitianLattice, LatticeJson};
use eislat::omatrix::OMatrix;
use eislat::pham::{IntegralPhamModule, PhamModule};
use eislat::picard;
use eislat::ring::EisensteinInteger as Eis;
use eislat::shortvec::{unit_orbit_representatives, vectors_of_norm};
use eislat::unitary::{generate_group, induced_symplectic_form, triflection, SymplecticMapF3};
use eislat::verify::{Suite, CRITERIA};
use eislat::weierstrass::{
    discriminant_form, divisor_stability, is_minimal_pair, minimal_ss_j_invariant, multiplicity_profile,
    pair_stability, BinaryForm,
};
use num_rational::BigRational;
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "eislat", version, about = "Eisenstein lattices, their unitary groups and related invariants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Arithmetic in Z[ω]: norm, conjugate, units, and x/y when --y is given.
    Ring {
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: Option<String>,
    },
    /// Print a lattice with its signature and discriminant.
    Lattice(LatticeArg),
    /// Vectors of a given norm.
    Shortvec {
        #[command(flatten)]
        lattice: LatticeArg,
        #[arg(long)]
        norm: i64,
        #[arg(long)]
        count_only: bool,
        /// One vector per orbit of the unit group.
        #[arg(long)]
        representatives: bool,
    },
    #[command(subcommand)]
    Group(GroupCmd),
    #[command(subcommand)]
    Classify(ClassifyCmd),
    #[command(subcommand)]
    Decompose(DecomposeCmd),
    #[command(subcommand)]
    Pham(PhamCmd),
    #[command(subcommand)]
    Picard(PicardCmd),
    #[command(subcommand)]
    Git(GitCmd),
    #[command(subcommand)]
    Kodaira(KodairaCmd),
    /// Run the acceptance checks and print a JSON report.
    VerifyAll {
        /// Run a single criterion.
        #[arg(long)]
        only: Option<u8>,
        /// Include per-check timings (makes the output non-reproducible).
        #[arg(long)]
        timings: bool,
    },
}

#[derive(Args)]
struct LatticeArg {
    /// `lambdaK`, `H`, or `Lambda`.
    #[arg(long, default_value = "lambda4", conflicts_with = "gram")]
    name: String,
    /// JSON Gram matrix, `[[[a,b],...],...]`.
    #[arg(long)]
    gram: Option<String>,
}

#[derive(Subcommand)]
enum GroupCmd {
    /// Close the triflections in the 3-vectors, together with ω, under composition.
    Generate {
        #[command(flatten)]
        lattice: LatticeArg,
        #[arg(long, default_value_t = 400_000)]
        cap: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum IsoType {
    Theta,
    Zero,
}

impl From<IsoType> for IsotropicType {
    fn from(t: IsoType) -> Self {
        match t {
            IsoType::Theta => IsotropicType::Theta,
            IsoType::Zero => IsotropicType::Zero,
        }
    }
}

#[derive(Subcommand)]
enum ClassifyCmd {
    /// Rank-2 type and relative position of a 6-vector z and a 3-vector r.
    Pair {
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        #[arg(long, allow_hyphen_values = true)]
        r: String,
        #[command(flatten)]
        lattice: LatticeArg,
    },
    /// The flag (z mod θ, L_z mod θ) of a 6-vector.
    Flag {
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        #[command(flatten)]
        lattice: LatticeArg,
    },
    /// d-invariant profile of the standard z_o of the given isotropic type in Λ.
    Dclass {
        #[arg(long = "type", value_enum)]
        kind: IsoType,
    },
    /// Span type of (z_o, r...) in the frame of Λ.
    Span {
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        #[arg(long, allow_hyphen_values = true, num_args = 1..)]
        r: Vec<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum DecomposeMode {
    Theta,
    Perp,
}

#[derive(Subcommand)]
enum DecomposeCmd {
    /// Split a 6-vector into two 3-vectors.
    Six {
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        #[arg(long, value_enum, default_value = "theta")]
        mode: DecomposeMode,
        #[command(flatten)]
        lattice: LatticeArg,
    },
}

#[derive(Subcommand)]
enum PhamCmd {
    /// Gram matrix, unit normalization, signature and discriminant.
    Gram,
    /// Matrix of the monodromy T̂_k on the r-basis.
    Monodromy {
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        k: i64,
    },
    /// All identities of the module over O and over Z.
    Verify,
}

#[derive(Subcommand)]
enum PicardCmd {
    Verify,
    /// s_α(c) for a root α.
    Reflect {
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, allow_hyphen_values = true)]
        c: String,
    },
    /// The exceptional class in c + Zf.
    Normalize {
        #[arg(long, allow_hyphen_values = true)]
        c: String,
    },
}

#[derive(Subcommand)]
enum GitCmd {
    /// Stability of a pair of binary forms of degrees 4 and 6.
    Stability {
        #[arg(long, allow_hyphen_values = true)]
        f0: String,
        #[arg(long, allow_hyphen_values = true)]
        f1: String,
    },
    /// Root multiplicities and stability of a degree-12 form.
    Profile {
        #[arg(long, allow_hyphen_values = true)]
        f: String,
    },
    /// J of the minimal orbit (λf², μf³).
    J {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
    },
}

#[derive(Subcommand)]
enum KodairaCmd {
    /// Fiber type from the value of J, its local degree and the Euler characteristic.
    Type {
        #[arg(long)]
        j: String,
        #[arg(long)]
        deg: u32,
        #[arg(long)]
        chi: u32,
    },
    Enumerate {
        #[arg(long)]
        count_only: bool,
    },
}

enum Failure {
    /// Bad arguments or inputs outside the domain of the operation.
    Input(String),
    /// A computation could not be completed.
    Compute(String),
}

fn input<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Input(e.to_string())
}

fn compute<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Compute(e.to_string())
}

/// JSON result and whether the checks it reports passed.
type Outcome = Result<(Value, bool), Failure>;

fn to_json<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn lattice(arg: &LatticeArg) -> Result<HermitianLattice, Failure> {
    match &arg.gram {
        Some(g) => {
            let rows: Vec<Vec<Eis>> = serde_json::from_str(g).map_err(input)?;
            HermitianLattice::try_from(LatticeJson { rank: rows.len(), gram: rows }).map_err(input)
        }
        None => HermitianLattice::standard(&arg.name).map_err(input),
    }
}

fn vector(s: &str, rank: usize) -> Result<Coords, Failure> {
    expr::parse_vector(s, rank).map_err(|e| Failure::Input(format!("{s:?}: {e}")))
}

fn big_rational(s: &str) -> Result<BigRational, Failure> {
    s.trim().parse().map_err(|_| Failure::Input(format!("not a rational number: {s:?}")))
}

fn i19(s: &str) -> Result<picard::I19Vector, Failure> {
    let v: Vec<i64> = serde_json::from_str(s).map_err(input)?;
    let a: [i64; 10] = v.try_into().map_err(|v: Vec<i64>| Failure::Input(format!("expected 10 coordinates, got {}", v.len())))?;
    Ok(picard::I19Vector(a))
}

fn ring(x: &str, y: Option<&str>) -> Outcome {
    let a = expr::parse_scalar(x).map_err(input)?;
    let mut out = json!({
        "x": a,
        "display": a.to_string(),
        "norm": a.norm(),
        "trace": a.trace(),
        "conj": a.conj(),
        "is_unit": a.is_unit(),
        "mod_theta": a.reduce_mod_theta().value(),
    });
    if let Some(y) = y {
        let b = expr::parse_scalar(y).map_err(input)?;
        let (q, r) = a.div_rem(b).map_err(input)?;
        out["y"] = json!(b);
        out["sum"] = json!(a + b);
        out["product"] = json!(a * b);
        out["quotient"] = json!(q);
        out["remainder"] = json!(r);
        out["gcd"] = json!(a.gcd(b));
    }
    Ok((out, true))
}

fn lattice_info(arg: &LatticeArg) -> Outcome {
    let l = lattice(arg)?;
    Ok((
        json!({
            "rank": l.rank(),
            "gram": l.gram().to_rows(),
            "signature": l.signature(),
            "discriminant": l.discriminant(),
            "positive_definite": l.is_positive_definite(),
        }),
        true,
    ))
}

fn shortvec(arg: &LatticeArg, norm: i64, count_only: bool, representatives: bool) -> Outcome {
    let l = lattice(arg)?;
    let mut v = vectors_of_norm(&l, norm).map_err(input)?;
    if representatives {
        v = unit_orbit_representatives(&v).map_err(compute)?;
    }
    let out = if count_only { json!({ "count": v.len() }) } else { json!({ "count": v.len(), "vectors": v }) };
    Ok((out, true))
}

fn group(arg: &LatticeArg, cap: usize) -> Outcome {
    let l = lattice(arg)?;
    let threes = vectors_of_norm(&l, 3).map_err(input)?;
    let reps = unit_orbit_representatives(&threes).map_err(compute)?;
    let mut gens: Vec<OMatrix> =
        reps.iter().map(|r| triflection(&l, r).map(|t| t.into_matrix())).collect::<Result<_, _>>().map_err(compute)?;
    gens.push(OMatrix::scalar(l.rank(), Eis::OMEGA));
    let g = generate_group(&gens, cap).map_err(compute)?;
    let image = g.image(SymplecticMapF3::reduce);
    let form = induced_symplectic_form(&l);
    let kernel = g.iter().filter(|m| SymplecticMapF3::reduce(m).is_identity()).count();
    Ok((
        json!({
            "generators": gens.len(),
            "order": g.order(),
            "image_order": image.order(),
            "kernel_order": kernel,
            "image_preserves_form": image.iter().all(|m| m.preserves(&form)),
        }),
        true,
    ))
}

fn classify(cmd: &ClassifyCmd) -> Outcome {
    match cmd {
        ClassifyCmd::Pair { z, r, lattice: arg } => {
            let l = lattice(arg)?;
            let (z, r) = (vector(z, l.rank())?, vector(r, l.rank())?);
            let position = relative_position(&l, &r, &z).map_err(input)?;
            let kind = rank2_type(&l, &z, &r).ok().map(|t| t.discriminant());
            Ok((json!({ "position": position, "discriminant": kind, "psi": l.psi(&z, &r) }), true))
        }
        ClassifyCmd::Flag { z, lattice: arg } => {
            let l = lattice(arg)?;
            let z = vector(z, l.rank())?;
            let roots = three_vectors(&l).map_err(input)?;
            let f = flag_of(&l, &roots, &z).map_err(input)?;
            Ok((to_json(&f), true))
        }
        ClassifyCmd::Dclass { kind } => {
            let bl = BigLambda::new().map_err(compute)?;
            let p = dclass_profile(&bl, (*kind).into()).map_err(compute)?;
            Ok((to_json(&p), true))
        }
        ClassifyCmd::Span { z, r } => {
            let bl = BigLambda::new().map_err(compute)?;
            let l = &bl.frame;
            let zo = vector(z, l.rank())?;
            let rs = r.iter().map(|s| vector(s, l.rank())).collect::<Result<Vec<_>, _>>()?;
            let iso = isotropic_line_type(&bl, &zo).map_err(input)?;
            let c = span_type_with_zo(l, &zo, &rs).map_err(input)?;
            let ok = c.complement_matches();
            let mut out = to_json(&c);
            out["isotropic_type"] = to_json(&iso);
            out["complement_matches"] = json!(ok);
            Ok((out, ok))
        }
    }
}

fn decompose(z: &str, mode: DecomposeMode, arg: &LatticeArg) -> Outcome {
    let l = lattice(arg)?;
    let z = vector(z, l.rank())?;
    let roots = three_vectors(&l).map_err(input)?;
    let pairs_json = |pairs: &[(Coords, Coords)]| -> Value {
        pairs.iter().map(|(a, b)| json!([a, b])).collect::<Vec<_>>().into()
    };
    Ok(match mode {
        DecomposeMode::Theta => {
            let d = theta_decompositions(&l, &roots, &z).map_err(input)?;
            let out = json!({
                "count": d.pairs.len(),
                "pairs": pairs_json(&d.pairs),
                "span": d.span,
                "common_span": d.common_span,
            });
            (out, true)
        }
        DecomposeMode::Perp => {
            let d = perpendicular_decompositions(&l, &roots, &z).map_err(input)?;
            (json!({ "count": d.len(), "pairs": pairs_json(&d) }), true)
        }
    })
}

fn pham(cmd: &PhamCmd) -> Outcome {
    let m = PhamModule::new().map_err(compute)?;
    match cmd {
        PhamCmd::Gram => Ok((to_json(&m.gram_report().map_err(compute)?), true)),
        PhamCmd::Monodromy { k } => {
            let t = m.monodromy(*k);
            Ok((json!({ "k": k, "matrix": t.to_rows() }), true))
        }
        PhamCmd::Verify => {
            let report = m.verify().map_err(compute)?;
            let image = m.eisenstein_image();
            let l0 = m.l0_check();
            let integral = IntegralPhamModule::new().map_err(compute)?;
            let mono = integral.monodromy_report().map_err(compute)?;
            let ok = report.all()
                && image.u_is_two_theta_z
                && l0.isotropic
                && l0.perpendicular
                && mono.order_six_off_hyperelliptic
                && mono.sixth_power_is_identity;
            let out = json!({
                "over_o": report,
                "all_over_o": report.all(),
                "eisenstein": image,
                "l0": l0,
                "integral": mono,
            });
            Ok((out, ok))
        }
    }
}

fn picard_cmd(cmd: &PicardCmd) -> Outcome {
    match cmd {
        PicardCmd::Verify => {
            let r = picard::verify();
            let ok = r.all();
            Ok((to_json(&r), ok))
        }
        PicardCmd::Reflect { alpha, c } => {
            let v = picard::reflect(&i19(alpha)?, &i19(c)?).map_err(input)?;
            Ok((json!({ "image": v, "display": v.to_string() }), true))
        }
        PicardCmd::Normalize { c } => {
            let v = picard::exceptional_normalize(&i19(c)?).map_err(input)?;
            Ok((json!({ "exceptional": v, "display": v.to_string() }), true))
        }
    }
}

fn form(s: &str) -> Result<BinaryForm, Failure> {
    BinaryForm::parse(s).map_err(input)
}

fn git(cmd: &GitCmd) -> Outcome {
    match cmd {
        GitCmd::Stability { f0, f1 } => {
            let (f0, f1) = (form(f0)?, form(f1)?);
            let pair = pair_stability(&f0, &f1).map_err(input)?;
            let minimal = is_minimal_pair(&f0, &f1).map_err(input)?;
            let mut out = json!({ "pair": pair, "minimal": minimal });
            // the discriminant may vanish identically, e.g. for a cuspidal family
            match discriminant_form(&f0, &f1).and_then(|d| multiplicity_profile(&d)) {
                Ok(p) => {
                    out["discriminant_profile"] = to_json(&p.0);
                    out["discriminant"] = to_json(&divisor_stability(&p).map_err(compute)?);
                }
                Err(e) => out["discriminant"] = json!(e.to_string()),
            }
            Ok((out, true))
        }
        GitCmd::Profile { f } => {
            let p = multiplicity_profile(&form(f)?).map_err(input)?;
            let s = divisor_stability(&p).map_err(input)?;
            Ok((json!({ "profile": p.0, "stability": s }), true))
        }
        GitCmd::J { lambda, mu } => {
            let j = minimal_ss_j_invariant(&big_rational(lambda)?, &big_rational(mu)?).map_err(input)?;
            Ok((json!({ "j": [j.0.to_string(), j.1.to_string()], "display": j.to_string() }), true))
        }
    }
}

fn kodaira(cmd: &KodairaCmd) -> Outcome {
    match cmd {
        KodairaCmd::Type { j, deg, chi } => {
            let j: JClass = j.parse().map_err(input)?;
            let t = kodaira_type(j, *deg, *chi).map_err(input)?;
            Ok((json!({ "type": t, "root_rank": t.root_rank() }), true))
        }
        KodairaCmd::Enumerate { count_only } => {
            let all = enumerate_configurations();
            let out = if *count_only {
                json!({ "count": all.len() })
            } else {
                json!({ "count": all.len(), "configurations": all })
            };
            Ok((out, true))
        }
    }
}

fn verify_all(only: Option<u8>, timings: bool) -> Outcome {
    let suite = Suite::new();
    let ids: Vec<u8> = match only {
        Some(n) if (1..=CRITERIA).contains(&n) => vec![n],
        Some(n) => return Err(Failure::Input(format!("criterion {n} outside 1..={CRITERIA}"))),
        None => (1..=CRITERIA).collect(),
    };
    let mut checks = Vec::new();
    let mut ok = true;
    for n in ids {
        let c = suite.run(n);
        ok &= c.passed;
        eprintln!("{} {} ({} ms)", if c.passed { "PASS" } else { "FAIL" }, c.id, c.millis);
        let mut v = to_json(&c);
        if !timings {
            v.as_object_mut().expect("object").remove("millis");
        }
        checks.push(v);
    }
    Ok((json!({ "schema": eislat::verify::SCHEMA_VERSION, "all_passed": ok, "checks": checks }), ok))
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Ring { x, y } => ring(x, y.as_deref()),
        Command::Lattice(arg) => lattice_info(arg),
        Command::Shortvec { lattice, norm, count_only, representatives } => {
            shortvec(lattice, *norm, *count_only, *representatives)
        }
        Command::Group(GroupCmd::Generate { lattice, cap }) => group(lattice, *cap),
        Command::Classify(c) => classify(c),
        Command::Decompose(DecomposeCmd::Six { z, mode, lattice }) => decompose(z, *mode, lattice),
        Command::Pham(c) => pham(c),
        Command::Picard(c) => picard_cmd(c),
        Command::Git(c) => git(c),
        Command::Kodaira(c) => kodaira(c),
        Command::VerifyAll { only, timings } => verify_all(*only, *timings),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok((out, ok)) => {
            println!("{out}");
            ExitCode::from(if ok { 0 } else { 1 })
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Compute(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
