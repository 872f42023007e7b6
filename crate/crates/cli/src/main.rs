//! `greenring`: command-line front end for Green ring computations.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use greenring::datum::DatumFile;
use greenring::grothendieck::{self, cartan_matrix, GrothendieckRing};
use greenring::oracle::verify_structure_constants;
use greenring::radford::{verify_g0_presentation, verify_presentation, Presentation};
use greenring::radical::{idempotent_search, radical_generator_identity_holds, radical_report};
use greenring::stable::{dickson, dickson_identity_holds, fpdim_report, fusion_axioms_check};
use greenring::{Datum, Error, GreenRing, RingElement};

#[derive(Debug, Parser)]
#[command(
    name = "greenring",
    version,
    about = "Green rings of pointed rank one Hopf algebras of non-nilpotent type"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Datum file (JSON): `{cyclic_orders, chi, g}` or `{"radford": {"m", "n"}}`.
    #[arg(long, global = true, value_name = "FILE", conflicts_with = "radford")]
    datum: Option<PathBuf>,

    /// Radford datum shorthand `m,n`.
    #[arg(long, global = true, value_name = "M,N")]
    radford: Option<String>,

    /// Emit a single JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Tolerance for floating-point FPdim checks.
    #[arg(long, global = true, default_value_t = 1e-9)]
    tolerance: f64,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Validate the datum and print its invariants.
    Validate,
    /// List the indecomposable basis of r(H).
    Basis,
    /// Multiply two elements of r(H), e.g. `mul "M(2,0)" "P[1]"`.
    Mul { left: String, right: String },
    /// Full multiplication table on basis labels.
    Table,
    /// Cartan matrix and the Grothendieck ring checks.
    Cartan,
    /// Jacobson radical of r(H).
    Radical,
    /// Bounded search for idempotents.
    Idempotents {
        #[arg(long, default_value_t = 1)]
        bound: u32,
        #[arg(long, default_value_t = 3)]
        support: usize,
    },
    /// Fusion ring axioms of the stable Green ring and the Dickson identity.
    Fusion,
    /// Frobenius-Perron dimensions of the stable basis.
    Fpdim,
    /// Presentation of r(H) for a Radford datum, checked against the ring.
    RadfordPresentation,
    /// Presentation of G0(H) for a Radford datum, checked against the ring.
    G0Presentation,
    /// Check every structure constant against realized tensor products.
    OracleVerify,
}

struct Report {
    text: String,
    json: Value,
    ok: bool,
}

impl Report {
    fn new(text: String, json: Value, ok: bool) -> Report {
        Report { text, json, ok }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let result = run(&cli);
    eprintln!("elapsed {:.3?}", start.elapsed());
    match result {
        Ok(report) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report.json).expect("json")
                );
            } else {
                print!("{}", report.text);
            }
            if report.ok {
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

enum Source {
    Radford(u32, u32),
    File(DatumFile),
}

fn parse_radford(text: &str) -> Result<(u32, u32), Error> {
    let bad = || Error::Parse(format!("--radford expects m,n, got {text:?}"));
    let (m, n) = text.split_once(',').ok_or_else(bad)?;
    Ok((
        m.trim().parse().map_err(|_| bad())?,
        n.trim().parse().map_err(|_| bad())?,
    ))
}

fn source(cli: &Cli) -> Result<Source, Error> {
    match (&cli.datum, &cli.radford) {
        (_, Some(text)) => {
            let (m, n) = parse_radford(text)?;
            Ok(Source::Radford(m, n))
        }
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            let file: DatumFile =
                serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
            Ok(match file {
                DatumFile::Radford { radford } => Source::Radford(radford.m, radford.n),
                file => Source::File(file),
            })
        }
        (None, None) => Err(Error::InvalidParameters(
            "one of --datum or --radford is required".into(),
        )),
    }
}

fn load(src: &Source) -> Result<Datum, Error> {
    match src {
        Source::Radford(m, n) => Datum::radford(*m, *n),
        Source::File(file) => Datum::new(file.clone().into_group_datum()?),
    }
}

fn radford_params(src: &Source) -> Result<(u32, u32), Error> {
    match src {
        Source::Radford(m, n) => Ok((*m, *n)),
        Source::File(_) => Err(Error::InvalidParameters(
            "presentations need a Radford datum".into(),
        )),
    }
}

fn run(cli: &Cli) -> Result<Report, Error> {
    let src = source(cli)?;
    match &cli.command {
        Command::RadfordPresentation => return presentation(radford_params(&src)?, true),
        Command::G0Presentation => return presentation(radford_params(&src)?, false),
        _ => {}
    }
    let ring = GreenRing::new(load(&src)?);
    match &cli.command {
        Command::Validate => Ok(validate(&ring)),
        Command::Basis => Ok(basis(&ring)),
        Command::Mul { left, right } => mul(&ring, left, right),
        Command::Table => Ok(table(&ring)),
        Command::Cartan => cartan(&ring),
        Command::Radical => radical(&ring),
        Command::Idempotents { bound, support } => Ok(idempotents(&ring, *bound, *support)),
        Command::Fusion => fusion(&ring),
        Command::Fpdim => fpdim(&ring, cli.tolerance),
        Command::OracleVerify => oracle(&ring),
        Command::RadfordPresentation | Command::G0Presentation => unreachable!(),
    }
}

fn to_json<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable report")
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn coefficients(ring: &GreenRing, x: &RingElement) -> Value {
    let terms: Vec<Value> = x
        .terms()
        .map(|(l, c)| json!({ "label": ring.catalog().format(l), "coefficient": c.to_string() }))
        .collect();
    Value::Array(terms)
}

fn datum_json(ring: &GreenRing) -> Value {
    let d = ring.datum();
    json!({
        "cyclic_orders": d.cyclic_orders(),
        "chi": d.group_datum().chi,
        "g": d.g(),
    })
}

fn validate(ring: &GreenRing) -> Report {
    let d = ring.datum();
    let t = d.orbit_table();
    let g0 = GrothendieckRing::of(ring);
    let fmt_orbits = |orbits: &Vec<Vec<_>>| -> Vec<String> {
        orbits
            .iter()
            .map(|o: &Vec<_>| {
                o.iter()
                    .map(|&c| d.format_character(c))
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect()
    };
    let orbits0 = fmt_orbits(&t.orbits0);
    let orbits1 = fmt_orbits(&t.orbits1);
    let mut text = String::new();
    writeln!(text, "group order    {}", d.group_order()).unwrap();
    writeln!(text, "dim H          {}", d.hopf_dimension()).unwrap();
    writeln!(text, "n              {}", d.n()).unwrap();
    writeln!(text, "r              {}", d.r()).unwrap();
    writeln!(text, "chi            {}", d.format_character(d.chi())).unwrap();
    writeln!(text, "|Omega_0|      {}", d.omega0().len()).unwrap();
    writeln!(text, "|Omega_1|      {}", d.omega1().len()).unwrap();
    writeln!(text, "Omega_0 orbits {}", orbits0.join(" | ")).unwrap();
    writeln!(text, "Omega_1 orbits {}", orbits1.join(" | ")).unwrap();
    writeln!(text, "rank r(H)      {}", ring.rank()).unwrap();
    writeln!(text, "rank G0(H)     {}", g0.rank()).unwrap();
    let doc = json!({
        "datum": datum_json(ring),
        "valid": true,
        "group_order": d.group_order(),
        "hopf_dimension": d.hopf_dimension(),
        "n": d.n(),
        "r": d.r(),
        "omega0_orbits": orbits0,
        "omega1_orbits": orbits1,
        "green_ring_rank": ring.rank(),
        "grothendieck_rank": g0.rank(),
    });
    Report::new(text, doc, true)
}

fn basis(ring: &GreenRing) -> Report {
    let c = ring.catalog();
    let mut text = String::new();
    let mut rows = Vec::new();
    for l in ring.basis() {
        let (name, dual) = (c.format(l), c.format(&c.dual_label(l)));
        let projective = c.is_projective(l);
        let line = format!(
            "{name:<12} dim {:<3} dual {dual:<12} {}",
            c.dimension(l),
            if projective { "projective" } else { "" }
        );
        writeln!(text, "{}", line.trim_end()).unwrap();
        rows.push(json!({ "label": name, "dimension": c.dimension(l), "dual": dual, "projective": projective }));
    }
    Report::new(
        text,
        json!({ "datum": datum_json(ring), "rank": ring.rank(), "basis": rows }),
        true,
    )
}

fn mul(ring: &GreenRing, left: &str, right: &str) -> Result<Report, Error> {
    let x = ring.parse_element(left)?;
    let y = ring.parse_element(right)?;
    let p = ring.multiply(&x, &y)?;
    let doc = json!({
        "left": ring.format(&x),
        "right": ring.format(&y),
        "product": ring.format(&p),
        "terms": coefficients(ring, &p),
    });
    Ok(Report::new(format!("{}\n", ring.format(&p)), doc, true))
}

fn table(ring: &GreenRing) -> Report {
    let c = ring.catalog();
    let mut text = String::new();
    let mut rows = Vec::new();
    for (a, b, p) in ring.multiplication_table() {
        let (a, b, prod) = (c.format(&a), c.format(&b), ring.format(&p));
        writeln!(text, "{a} * {b} = {prod}").unwrap();
        rows.push(json!({ "left": a, "right": b, "product": prod }));
    }
    Report::new(
        text,
        json!({ "datum": datum_json(ring), "table": rows }),
        true,
    )
}

fn cartan(ring: &GreenRing) -> Result<Report, Error> {
    let g0 = GrothendieckRing::of(ring);
    let matrix = cartan_matrix(&g0);
    let block = matrix.is_block_form(ring.datum());
    let rep = grothendieck::verify(ring)?;
    let mut text = matrix.to_string();
    writeln!(text, "block form             {}", yes_no(block)).unwrap();
    writeln!(
        text,
        "ker phi = span delta   {}",
        yes_no(rep.kernel_equals_delta_span)
    )
    .unwrap();
    writeln!(
        text,
        "ker phi = P-perp       {}",
        yes_no(rep.kernel_equals_projective_perp)
    )
    .unwrap();
    writeln!(
        text,
        "ker phi rank           {} (expected {})",
        rep.kernel_rank, rep.expected_kernel_rank
    )
    .unwrap();
    writeln!(
        text,
        "phi multiplicative     {}",
        yes_no(rep.phi_mismatches.is_empty())
    )
    .unwrap();
    writeln!(
        text,
        "G0 embeds in r(kG)     {}",
        yes_no(rep.embedding_injective && rep.embedding_mismatches.is_empty())
    )
    .unwrap();
    let doc = json!({
        "datum": datum_json(ring),
        "cartan": to_json(&matrix),
        "matrix": matrix.entries.to_i64(),
        "block_form": block,
        "grothendieck": to_json(&rep),
    });
    Ok(Report::new(text, doc, block && rep.passed()))
}

fn radical(ring: &GreenRing) -> Result<Report, Error> {
    let rep = radical_report(ring)?;
    let identity = radical_generator_identity_holds(ring)?;
    let mut text = String::new();
    writeln!(text, "rank {} (expected {})", rep.rank, rep.expected_rank).unwrap();
    for b in &rep.basis {
        writeln!(text, "  {b}").unwrap();
    }
    writeln!(text, "generator {}", rep.generator.generator).unwrap();
    writeln!(
        text,
        "principal              {}",
        yes_no(rep.generator.holds)
    )
    .unwrap();
    writeln!(
        text,
        "squares vanish         {}",
        yes_no(rep.basis_squares_to_zero && rep.generator_squares_to_zero)
    )
    .unwrap();
    writeln!(
        text,
        "intersection agrees    {}",
        yes_no(rep.intersection_agrees)
    )
    .unwrap();
    writeln!(
        text,
        "orthogonal to P        {}",
        yes_no(rep.orthogonal_to_projectives)
    )
    .unwrap();
    writeln!(text, "generator identity     {}", yes_no(identity)).unwrap();
    let ok = rep.passed() && identity;
    let doc = json!({ "datum": datum_json(ring), "radical": to_json(&rep), "generator_identity": identity });
    Ok(Report::new(text, doc, ok))
}

fn idempotents(ring: &GreenRing, bound: u32, support: usize) -> Report {
    let s = idempotent_search(ring, bound, support);
    let mut text = String::new();
    writeln!(
        text,
        "coefficients in [-{bound}, {bound}], support <= {support}: {} candidates",
        s.candidates_examined
    )
    .unwrap();
    writeln!(text, "idempotents: {}", s.idempotents.join(", ")).unwrap();
    writeln!(
        text,
        "nontrivial:  {}",
        if s.nontrivial.is_empty() {
            "none".into()
        } else {
            s.nontrivial.join(", ")
        }
    )
    .unwrap();
    let ok = s.passed();
    Report::new(
        text,
        json!({ "datum": datum_json(ring), "search": to_json(&s) }),
        ok,
    )
}

fn fusion(ring: &GreenRing) -> Result<Report, Error> {
    let rep = fusion_axioms_check(ring)?;
    let dickson_ok = dickson_identity_holds(ring)?;
    let n = ring.datum().n();
    let fnp = dickson(n as i64)?;
    let mut text = String::new();
    writeln!(text, "stable rank            {}", rep.stable_rank).unwrap();
    writeln!(text, "nonnegative            {}", yes_no(rep.nonnegative)).unwrap();
    writeln!(text, "unit is basis          {}", yes_no(rep.unit_is_basis)).unwrap();
    writeln!(
        text,
        "psi well defined       {}",
        yes_no(rep.psi_well_defined)
    )
    .unwrap();
    writeln!(
        text,
        "psi dual pairing       {}",
        yes_no(rep.psi_dual_pairing)
    )
    .unwrap();
    writeln!(text, "involution             {}", yes_no(rep.involution)).unwrap();
    writeln!(text, "transitive             {}", yes_no(rep.transitive)).unwrap();
    writeln!(text, "F_{n} = {}", fnp.format()).unwrap();
    writeln!(
        text,
        "F_j(a, M(2,0)) = M(j,0) for j <= {n}: {}",
        yes_no(dickson_ok)
    )
    .unwrap();
    for v in &rep.violations {
        writeln!(text, "violation: {v}").unwrap();
    }
    let doc = json!({
        "datum": datum_json(ring),
        "fusion": to_json(&rep),
        "dickson": { "n": n, "polynomial": fnp.format(), "identity_holds": dickson_ok },
    });
    Ok(Report::new(text, doc, rep.passed() && dickson_ok))
}

fn fpdim(ring: &GreenRing, tolerance: f64) -> Result<Report, Error> {
    let rep = fpdim_report(ring, tolerance)?;
    let mut text = String::new();
    for r in &rep.rows {
        writeln!(
            text,
            "{:<12} {:.12} closed {:.12} diff {:.1e}",
            r.label, r.eigenvalue, r.closed_form, r.difference
        )
        .unwrap();
    }
    writeln!(
        text,
        "max difference {:.1e}, max residual {:.1e}, tolerance {tolerance:e}",
        rep.max_difference, rep.max_residual
    )
    .unwrap();
    let ok = rep.passed();
    Ok(Report::new(
        text,
        json!({ "datum": datum_json(ring), "fpdim": to_json(&rep) }),
        ok,
    ))
}

fn presentation((m, n): (u32, u32), green: bool) -> Result<Report, Error> {
    let (pres, rep) = if green {
        (Presentation::green(m, n)?, verify_presentation(m, n)?)
    } else {
        (
            Presentation::grothendieck(m, n)?,
            verify_g0_presentation(m, n)?,
        )
    };
    let doc = pres.document();
    let mut text = String::new();
    writeln!(text, "variables {}", doc.variables.join(", ")).unwrap();
    writeln!(text, "relations").unwrap();
    for r in &doc.relations {
        writeln!(text, "  {r}").unwrap();
    }
    writeln!(text, "normal form basis ({})", doc.rank).unwrap();
    writeln!(text, "  {}", doc.normal_form_basis.join(", ")).unwrap();
    writeln!(
        text,
        "rank {} (expected {}), ring rank {}",
        rep.rank, rep.expected_rank, rep.ring_rank
    )
    .unwrap();
    writeln!(
        text,
        "{} mismatches / {} pairs",
        rep.mismatches.len(),
        rep.pairs_checked
    )
    .unwrap();
    for mm in &rep.mismatches {
        writeln!(text, "mismatch: {mm}").unwrap();
    }
    let ok = rep.passed();
    Ok(Report::new(
        text,
        json!({ "presentation": to_json(&doc), "verification": to_json(&rep) }),
        ok,
    ))
}

fn oracle(ring: &GreenRing) -> Result<Report, Error> {
    let rep = verify_structure_constants(ring)?;
    let mut text = String::new();
    writeln!(
        text,
        "{} mismatches / {} pairs",
        rep.mismatches.len(),
        rep.pairs
    )
    .unwrap();
    for m in &rep.mismatches {
        writeln!(
            text,
            "{} * {}: table {} oracle {}",
            m.left, m.right, m.predicted, m.observed
        )
        .unwrap();
    }
    for l in &rep.realization_failures {
        writeln!(text, "realization failure: {l}").unwrap();
    }
    for l in &rep.dual_failures {
        writeln!(text, "dual failure: {l}").unwrap();
    }
    for p in &rep.asymmetric_pairs {
        writeln!(text, "asymmetric: {p}").unwrap();
    }
    let ok = rep.passed();
    Ok(Report::new(
        text,
        json!({ "datum": datum_json(ring), "oracle": to_json(&rep) }),
        ok,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn radford_shorthand() {
        assert_eq!(parse_radford("2,3").unwrap(), (2, 3));
        assert_eq!(parse_radford(" 3 , 2 ").unwrap(), (3, 2));
        assert!(parse_radford("3").is_err());
        assert!(parse_radford("a,b").is_err());
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
