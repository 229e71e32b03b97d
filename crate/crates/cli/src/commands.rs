use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rankweight::codes::{cyclic_code, gabidulin_code, hierarchy, random_code, rank_weight, GrwMethod, LinearCode};
use rankweight::distribution::{
    a_from_b, b_table_transversal, brute_force_distribution, dual_distribution, enumerator_from_btable,
    enumerator_from_distribution, mrd_distribution, Budget, DistributionTable, DualMethod, EnumeratorPoly, Params,
    DEFAULT_BUDGET,
};
use rankweight::gf::{find_irreducible, is_prime, BaseField, Field, FieldSpec, PrimeField};
use rankweight::verify::verify_code;
use serde_json::{json, Value};

use crate::codefile::{base_field, format_base, parse_ext, CodeFile, Coeff};
use crate::output::{table_rows, Format, Output, ParamsEcho, ResultDocument, TableJson, Timing};
use crate::CliError;

const AFTER_HELP: &str = "\
Polynomials are ascending coefficient lists: x^4 + x + 1 is [1,1,0,0,1].
An F_q element is an integer when e = 1 and a list of e residues otherwise.
An F_{q^m} element is the list of its m coordinates in the basis 1, a, ..., a^(m-1).

Exit codes: 0 success, 1 invalid input, 2 cross-check mismatch or failed
verification, 3 budget exceeded or underdetermined system.";

#[derive(Parser, Debug)]
#[command(
    name = "grw",
    version,
    about = "Generalized rank weights, their distributions and enumerators for linear codes over F_{q^m}",
    after_help = AFTER_HELP
)]
pub struct Cli {
    /// Largest number of subspaces or codewords a brute-force pass may visit.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: Format,
    /// Seed for modulus search and random constructions.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Leave timing out of result documents, making them reproducible byte for byte.
    #[arg(long, global = true)]
    pub no_timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DistMethod {
    Brute,
    Transversal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DualArg {
    /// B-numbers of the dual from subspaces of F_q^n, then inversion.
    Transversal,
    /// Solve the moment identities.
    Solve,
    /// Dualize and enumerate.
    Direct,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SourceArg {
    Btable,
    Distribution,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum HierarchyArg {
    Subspaces,
    ClosedSpaces,
    MaxWt,
}

#[derive(Args, Debug)]
pub struct FieldArgs {
    #[arg(long)]
    pub p: u32,
    #[arg(long, default_value_t = 1)]
    pub e: usize,
    #[arg(long)]
    pub m: usize,
    /// JSON list; searched with --seed when omitted.
    #[arg(long)]
    pub base_modulus: Option<String>,
    /// JSON list of F_q elements; searched with --seed when omitted.
    #[arg(long)]
    pub ext_modulus: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// The table A^r_w; without --method both methods run and must agree.
    Dist {
        file: PathBuf,
        /// Largest r to report.
        #[arg(long)]
        r: Option<usize>,
        #[arg(long, value_enum)]
        method: Option<DistMethod>,
    },
    /// The table of the dual code; without --method transversal and direct run and must agree.
    DualDist {
        file: PathBuf,
        #[arg(long, value_enum)]
        method: Option<DualArg>,
    },
    /// W^r(X, Y); without --source both sources run and must agree.
    Enumerator {
        file: PathBuf,
        #[arg(long, default_value_t = 1)]
        r: usize,
        #[arg(long, value_enum)]
        source: Option<SourceArg>,
    },
    /// (M_1, ..., M_k); without --method every applicable method runs and must agree.
    Hierarchy {
        file: PathBuf,
        #[arg(long, value_enum)]
        method: Option<HierarchyArg>,
    },
    /// Closed-form distribution of an MRD code.
    MrdDist {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        m: usize,
    },
    /// Compare the tables in two result documents; exits 2 if they differ.
    Compare { left: PathBuf, right: PathBuf },
    /// Run every cross-check on a code; exits 2 if any fails.
    Verify { file: PathBuf },
    /// Gabidulin code as a code file. Points default to 1, a, ..., a^(n-1).
    MakeGabidulin {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// JSON list of n F_{q^m} elements.
        #[arg(long, conflicts_with = "random_points")]
        points: Option<String>,
        /// Draw the points with --seed.
        #[arg(long)]
        random_points: bool,
        #[arg(long)]
        name: Option<String>,
    },
    /// Cyclic code generated by g(x) as a code file.
    MakeCyclic {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        n: usize,
        /// JSON list of F_{q^m} coefficients of g, ascending.
        #[arg(long)]
        g: String,
        #[arg(long)]
        name: Option<String>,
    },
    /// Random [n, k] code drawn with --seed, as a code file.
    MakeRandom {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        name: Option<String>,
    },
}

/// Runs the command; returns the text for stdout and the exit code.
pub fn run(cli: &Cli) -> Result<(String, i32), CliError> {
    let start = Instant::now();
    let budget = Budget(cli.budget);
    let timing = || (!cli.no_timing).then(|| Timing { elapsed_ms: start.elapsed().as_millis() });
    let mut code = 0;
    let output = match &cli.command {
        Command::Dist { file, r, method } => dist(&load(file)?, *r, *method, budget)?,
        Command::DualDist { file, method } => dual_dist(&load(file)?, *method, budget)?,
        Command::Enumerator { file, r, source } => enumerator(&load(file)?, *r, *source, budget)?,
        Command::Hierarchy { file, method } => hierarchy_cmd(&load(file)?, *method)?,
        Command::MrdDist { n, k, q, m } => mrd_dist(*n, *k, *q, *m)?,
        Command::Compare { left, right } => compare(&load_table(left)?, &load_table(right)?)?,
        Command::Verify { file } => {
            let out = verify(&load(file)?, budget)?;
            if out.doc.result["all_passed"] != Value::Bool(true) {
                code = 2;
            }
            out
        }
        Command::MakeGabidulin { field, n, k, points, random_points, name } => {
            let spec = build_field(field, cli.seed)?;
            let points = match (points, random_points) {
                (Some(text), _) => parse_elements(&spec, text)?,
                (None, true) => random_points_for(&spec, *n, cli.seed)?,
                (None, false) => (0..*n as u64).map(|i| spec.pow(&spec.generator(), i)).collect(),
            };
            let c = gabidulin_code(&spec, *k, &points)?;
            return Ok((CodeFile::from_code(&c, name.clone()).to_json(), 0));
        }
        Command::MakeCyclic { field, n, g, name } => {
            let spec = build_field(field, cli.seed)?;
            let g = parse_elements(&spec, g)?;
            let c = cyclic_code(&spec, *n, &g)?;
            return Ok((CodeFile::from_code(&c, name.clone()).to_json(), 0));
        }
        Command::MakeRandom { field, n, k, name } => {
            let spec = build_field(field, cli.seed)?;
            let c = random_code(&spec, *n, *k, &mut ChaCha8Rng::seed_from_u64(cli.seed))?;
            return Ok((CodeFile::from_code(&c, name.clone()).to_json(), 0));
        }
    };
    let mut output = output;
    output.doc.timing = timing();
    Ok((output.render(cli.format), code))
}

pub fn load(path: &Path) -> Result<LinearCode, CliError> {
    let text =
        std::fs::read_to_string(path).map_err(|e| CliError::Invalid(format!("cannot read {}: {e}", path.display())))?;
    CodeFile::from_json(&text)?.to_code()
}

/// The distribution table inside a result document.
pub fn load_table(path: &Path) -> Result<DistributionTable, CliError> {
    let text =
        std::fs::read_to_string(path).map_err(|e| CliError::Invalid(format!("cannot read {}: {e}", path.display())))?;
    let doc: ResultDocument = parse_json(&text, "result document")?;
    let table: TableJson = serde_json::from_value(doc.result["distribution"].clone())
        .map_err(|e| CliError::Invalid(format!("{}: no distribution table ({e})", path.display())))?;
    table.to_table()
}

pub fn compare(left: &DistributionTable, right: &DistributionTable) -> Result<Output, CliError> {
    if left.params != right.params {
        return Err(CliError::Mismatch(format!("parameters differ: {:?} vs {:?}", left.params, right.params)));
    }
    let mut diffs = Vec::new();
    for r in 0..=left.r_max().max(right.r_max()) {
        for w in 0..=left.params.n {
            let (a, b) = (left.row(r).map(|row| &row[w]), right.row(r).map(|row| &row[w]));
            if a != b {
                let show = |x: Option<&num_bigint::BigUint>| x.map_or("-".to_string(), ToString::to_string);
                diffs.push(vec![r.to_string(), w.to_string(), show(a), show(b)]);
            }
        }
    }
    if !diffs.is_empty() {
        let listed: Vec<String> = diffs.iter().map(|d| format!("A^{}_{}: {} vs {}", d[0], d[1], d[2], d[3])).collect();
        return Err(CliError::Mismatch(listed.join(", ")));
    }
    Ok(Output {
        doc: doc("compare", input_echo(left.params, json!({})), "exact", json!({ "equal": true })),
        header: vec!["r", "w", "left", "right"],
        rows: Vec::new(),
    })
}

fn build_field(args: &FieldArgs, seed: u64) -> Result<FieldSpec, CliError> {
    if args.m == 0 {
        return Err(CliError::Invalid("m must be positive".into()));
    }
    let prime = PrimeField::new(args.p).map_err(|e| CliError::Invalid(e.to_string()))?;
    let base_modulus = match &args.base_modulus {
        Some(text) => Some(parse_json::<Vec<u32>>(text, "base modulus")?),
        None if args.e > 1 => Some(find_irreducible(&prime, args.e, seed)),
        None => None,
    };
    let base: BaseField = base_field(args.p, args.e, base_modulus.as_deref())?;
    let ext: Vec<Coeff> = match &args.ext_modulus {
        Some(text) => parse_json(text, "ext modulus")?,
        None => find_irreducible(&base, args.m, seed).iter().map(format_base).collect(),
    };
    if ext.len() != args.m + 1 {
        return Err(CliError::Invalid(format!("ext modulus must have degree m = {}", args.m)));
    }
    crate::codefile::field_spec(base, &ext)
}

fn parse_json<T: serde::de::DeserializeOwned>(text: &str, what: &str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Invalid(format!("{what}: {e}")))
}

fn parse_elements(spec: &FieldSpec, text: &str) -> Result<Vec<rankweight::gf::ExtElement>, CliError> {
    let raw: Vec<Vec<Coeff>> = parse_json(text, "elements")?;
    raw.iter().map(|x| parse_ext(spec, x)).collect()
}

fn random_points_for(spec: &FieldSpec, n: usize, seed: u64) -> Result<Vec<rankweight::gf::ExtElement>, CliError> {
    if n > spec.m() {
        return Err(CliError::Invalid(format!("need n <= m for independent points, got n = {n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let pts: Vec<_> = (0..n).map(|_| spec.element(rng.gen_range(0..spec.order()))).collect();
        if rank_weight(spec, &pts) == n {
            return Ok(pts);
        }
    }
}

fn input_echo(params: Params, extra: Value) -> Value {
    let mut v = json!({ "params": ParamsEcho::from(params) });
    if let (Value::Object(map), Value::Object(more)) = (&mut v, extra) {
        map.extend(more);
    }
    v
}

fn doc(command: &str, input: Value, method: &str, result: Value) -> ResultDocument {
    ResultDocument { command: command.into(), input, method: method.into(), result, timing: None }
}

fn truncate(t: DistributionTable, r_max: usize) -> Result<DistributionTable, CliError> {
    if t.r_max() <= r_max {
        return Ok(t);
    }
    Ok(DistributionTable::from_rows(t.params, t.rows()[..=r_max].to_vec())?)
}

fn agree<T: PartialEq>(results: &[(&str, T)], what: &str) -> Result<(), CliError> {
    for (name, value) in &results[1..] {
        if *value != results[0].1 {
            return Err(CliError::Mismatch(format!("{what}: {} and {name} disagree", results[0].0)));
        }
    }
    Ok(())
}

fn table_output(command: &str, input: Value, method: &str, t: &DistributionTable) -> Output {
    let result = json!({ "distribution": TableJson::from_table(t) });
    Output { doc: doc(command, input, method, result), header: vec!["r", "w", "count"], rows: table_rows(t) }
}

pub fn dist(c: &LinearCode, r: Option<usize>, method: Option<DistMethod>, budget: Budget) -> Result<Output, CliError> {
    let r_max = r.unwrap_or(c.k()).min(c.k());
    let run = |m: DistMethod| -> Result<DistributionTable, CliError> {
        match m {
            DistMethod::Brute => Ok(brute_force_distribution(c, Some(r_max), budget)?),
            DistMethod::Transversal => truncate(a_from_b(&b_table_transversal(c, budget)?)?, r_max),
        }
    };
    let (label, table) = match method {
        Some(m) => (m.to_possible_value().unwrap().get_name().to_string(), run(m)?),
        None => {
            let brute = run(DistMethod::Brute)?;
            agree(&[("brute", &brute), ("transversal", &run(DistMethod::Transversal)?)], "distribution")?;
            ("brute+transversal".to_string(), brute)
        }
    };
    Ok(table_output("dist", input_echo(Params::of(c), json!({ "r_max": r_max })), &label, &table))
}

pub fn dual_dist(c: &LinearCode, method: Option<DualArg>, budget: Budget) -> Result<Output, CliError> {
    let lib = |m: DualArg| match m {
        DualArg::Transversal => DualMethod::Transversal,
        DualArg::Solve => DualMethod::Solve,
        DualArg::Direct => DualMethod::Direct,
    };
    let (label, table) = match method {
        Some(m) => (m.to_possible_value().unwrap().get_name().to_string(), dual_distribution(c, lib(m), budget)?),
        None => {
            let t = dual_distribution(c, DualMethod::Transversal, budget)?;
            let d = dual_distribution(c, DualMethod::Direct, budget)?;
            agree(&[("transversal", &t), ("direct", &d)], "dual distribution")?;
            ("transversal+direct".to_string(), t)
        }
    };
    Ok(table_output("dual-dist", input_echo(Params::of(c), json!({})), &label, &table))
}

pub fn enumerator(c: &LinearCode, r: usize, source: Option<SourceArg>, budget: Budget) -> Result<Output, CliError> {
    if r > c.k() {
        return Err(CliError::Invalid(format!("r = {r} exceeds k = {}", c.k())));
    }
    let run = |s: SourceArg| -> Result<EnumeratorPoly, CliError> {
        match s {
            SourceArg::Btable => Ok(enumerator_from_btable(&b_table_transversal(c, budget)?, r)?),
            SourceArg::Distribution => {
                Ok(enumerator_from_distribution(&brute_force_distribution(c, Some(r), budget)?, r))
            }
        }
    };
    let (label, poly) = match source {
        Some(s) => (s.to_possible_value().unwrap().get_name().to_string(), run(s)?),
        None => {
            let b = run(SourceArg::Btable)?;
            agree(&[("btable", &b), ("distribution", &run(SourceArg::Distribution)?)], "enumerator")?;
            ("btable+distribution".to_string(), b)
        }
    };
    let coeffs: Vec<String> = poly.coeffs.iter().map(ToString::to_string).collect();
    let result = json!({ "r": r, "polynomial": poly.to_string(), "coefficients": coeffs });
    let rows = coeffs.iter().enumerate().map(|(w, c)| vec![w.to_string(), c.clone()]).collect();
    Ok(Output {
        doc: doc("enumerator", input_echo(Params::of(c), json!({ "r": r })), &label, result),
        header: vec!["w", "coefficient"],
        rows,
    })
}

pub fn hierarchy_cmd(c: &LinearCode, method: Option<HierarchyArg>) -> Result<Output, CliError> {
    let lib = |m: HierarchyArg| match m {
        HierarchyArg::Subspaces => GrwMethod::Subspaces,
        HierarchyArg::ClosedSpaces => GrwMethod::ClosedSpaces,
        HierarchyArg::MaxWt => GrwMethod::MaxWt,
    };
    let methods: Vec<HierarchyArg> = match method {
        Some(m) => vec![m],
        None if c.field_covers_length() => HierarchyArg::value_variants().to_vec(),
        None => vec![HierarchyArg::Subspaces],
    };
    let results = methods
        .iter()
        .map(|&m| Ok((m.to_possible_value().unwrap().get_name().to_string(), hierarchy(c, lib(m))?)))
        .collect::<Result<Vec<_>, CliError>>()?;
    let named: Vec<(&str, _)> = results.iter().map(|(n, h)| (n.as_str(), h)).collect();
    agree(&named, "hierarchy")?;
    let label = results.iter().map(|(n, _)| n.as_str()).collect::<Vec<_>>().join("+");
    let h = &results[0].1;
    let result = json!({
        "weights": h.weights,
        "display": h.to_string(),
        "mrd": h.weights.first() == Some(&(c.n() - c.k() + 1)),
    });
    let rows = h.weights.iter().enumerate().map(|(i, w)| vec![(i + 1).to_string(), w.to_string()]).collect();
    Ok(Output {
        doc: doc("hierarchy", input_echo(Params::of(c), json!({})), &label, result),
        header: vec!["r", "M_r"],
        rows,
    })
}

fn is_prime_power(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d)).unwrap();
    let mut x = q;
    while x.is_multiple_of(p) {
        x /= p;
    }
    x == 1 && is_prime(p)
}

pub fn mrd_dist(n: usize, k: usize, q: u64, m: usize) -> Result<Output, CliError> {
    if !is_prime_power(q) {
        return Err(CliError::Invalid(format!("q = {q} is not a prime power")));
    }
    let t = mrd_distribution(n, k, q, m)?;
    Ok(table_output("mrd-dist", input_echo(t.params, json!({})), "closed-form", &t))
}

pub fn verify(c: &LinearCode, budget: Budget) -> Result<Output, CliError> {
    let report = verify_code(c, budget)?;
    let checks: Vec<Value> =
        report.checks.iter().map(|ch| json!({ "name": ch.name, "passed": ch.passed, "detail": ch.detail })).collect();
    let rows = report
        .checks
        .iter()
        .map(|ch| vec![ch.name.to_string(), if ch.passed { "pass" } else { "FAIL" }.to_string()])
        .collect();
    let result = json!({ "all_passed": report.all_passed(), "checks": checks });
    Ok(Output {
        doc: doc("verify", input_echo(Params::of(c), json!({})), "all", result),
        header: vec!["check", "status"],
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_powers() {
        let yes: Vec<u64> = (0..30).filter(|&q| is_prime_power(q)).collect();
        assert_eq!(yes, vec![2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29]);
    }

    #[test]
    fn seeded_field_search_is_deterministic() {
        let args = FieldArgs { p: 3, e: 2, m: 3, base_modulus: None, ext_modulus: None };
        let a = build_field(&args, 5).unwrap();
        assert_eq!(a, build_field(&args, 5).unwrap());
        assert_eq!((a.q(), a.m()), (9, 3));
    }
}
